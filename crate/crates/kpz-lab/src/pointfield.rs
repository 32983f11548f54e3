//! Seeded Poisson point fields on the geometries used by the growth models,
//! plus the light-cone / polymer coordinate transform.
//!
//! Conventions: the *space-time* frame uses coordinates `(x, t)`; the
//! *polymer* frame uses `(y, z) = (t + x, t - x)`. The transform has
//! Jacobian 2, so intensity 2 in space-time corresponds to intensity 1 in
//! the polymer frame.

use crate::seed::Seed;
use crate::{Error, Result};
use rand::Rng;
use rand_distr::{Distribution, Poisson};
use serde::{Deserialize, Serialize};
use std::io::Write;

/// Sampling region for a point field.
///
/// * `Rectangle { a, b }` — `[0,a] x [0,b]` in polymer coordinates.
/// * `Triangle { t }` — `{ y, z >= 0, y + z <= 2t }` in polymer coordinates;
///   the image of the space-time droplet region `{ |x| <= t' <= t }`.
/// * `LightconeDiamond { x, t }` — intersection of the forward light cone of
///   the origin with the backward light cone of `(x, t)`, in space-time
///   coordinates.
#[derive(Debug, Clone, Copy, PartialEq, Serialize, Deserialize)]
pub enum Region {
    Rectangle { a: f64, b: f64 },
    Triangle { t: f64 },
    LightconeDiamond { x: f64, t: f64 },
}

impl Region {
    pub fn validate(&self) -> Result<()> {
        let ok = match *self {
            Region::Rectangle { a, b } => a > 0.0 && b > 0.0 && a.is_finite() && b.is_finite(),
            Region::Triangle { t } => t > 0.0 && t.is_finite(),
            Region::LightconeDiamond { x, t } => t > 0.0 && t.is_finite() && x.abs() < t,
        };
        if ok {
            Ok(())
        } else {
            Err(Error::InvalidParameter(format!("degenerate region {self:?}")))
        }
    }

    /// Closed-form area.
    pub fn area(&self) -> f64 {
        match *self {
            Region::Rectangle { a, b } => a * b,
            Region::Triangle { t } => 2.0 * t * t,
            // Rectangle [0, t+x] x [0, t-x] in the polymer frame, Jacobian 1/2 back.
            Region::LightconeDiamond { x, t } => 0.5 * (t * t - x * x),
        }
    }

    /// Exact membership predicate, in the region's own frame.
    pub fn contains(&self, p: (f64, f64)) -> bool {
        match *self {
            Region::Rectangle { a, b } => {
                p.0 >= 0.0 && p.0 <= a && p.1 >= 0.0 && p.1 <= b
            }
            Region::Triangle { t } => p.0 >= 0.0 && p.1 >= 0.0 && p.0 + p.1 <= 2.0 * t,
            Region::LightconeDiamond { x, t } => {
                let (px, pt) = p;
                px.abs() <= pt && (px - x).abs() <= t - pt
            }
        }
    }

    /// Axis-aligned bounding box `((x0, x1), (y0, y1))` for rejection sampling.
    fn bounding_box(&self) -> ((f64, f64), (f64, f64)) {
        match *self {
            Region::Rectangle { a, b } => ((0.0, a), (0.0, b)),
            Region::Triangle { t } => ((0.0, 2.0 * t), (0.0, 2.0 * t)),
            Region::LightconeDiamond { x, t } => {
                (((-(t - x)) / 2.0, (t + x) / 2.0), (0.0, t))
            }
        }
    }
}

/// Map a space-time point `(x', t')` to the polymer frame `(y, z)`.
pub fn spacetime_to_polymer(p: (f64, f64)) -> (f64, f64) {
    let (x, t) = p;
    (t + x, t - x)
}

/// Inverse of [`spacetime_to_polymer`].
pub fn polymer_to_spacetime(p: (f64, f64)) -> (f64, f64) {
    let (y, z) = p;
    ((y - z) / 2.0, (y + z) / 2.0)
}

/// Which frame the coordinates of a field live in. Only affects the CSV header.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Frame {
    Polymer,
    Spacetime,
}

/// A finite planar Poisson realization together with its generating data.
#[derive(Debug, Clone, PartialEq, Serialize, Deserialize)]
pub struct PointField {
    pub points: Vec<(f64, f64)>,
    pub region: Region,
    pub intensity: f64,
    pub seed: Seed,
}

/// Draw a Poisson field of the given intensity on `region`.
///
/// The count is Poisson(intensity * area); given the count, points are
/// i.i.d. uniform on the region (by rejection from the bounding box, which
/// keeps the uniform law exact). The output is sorted lexicographically and
/// nudged out of coordinate ties, so downstream sweep algorithms can assume
/// general position.
pub fn sample_poisson(region: Region, intensity: f64, seed: Seed) -> Result<PointField> {
    region.validate()?;
    if !intensity.is_finite() || intensity < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "intensity must be finite and nonnegative, got {intensity}"
        )));
    }
    let mut rng = seed.rng();
    let mean = intensity * region.area();
    let count = if mean == 0.0 {
        0
    } else {
        let poisson = Poisson::new(mean)
            .map_err(|e| Error::InvalidParameter(format!("poisson mean {mean}: {e}")))?;
        poisson.sample(&mut rng) as u64
    };

    let ((x0, x1), (y0, y1)) = region.bounding_box();
    let mut points = Vec::with_capacity(count as usize);
    for _ in 0..count {
        loop {
            let p = (rng.gen_range(x0..x1), rng.gen_range(y0..y1));
            if region.contains(p) {
                points.push(p);
                break;
            }
        }
    }
    points.sort_by(|a, b| a.partial_cmp(b).unwrap());
    break_ties(&mut points);

    Ok(PointField { points, region, intensity, seed })
}

/// Perturb exact coordinate ties by one ulp, keeping general position.
///
/// Ties have probability zero in exact arithmetic but can occur in floating
/// point. The later point (in the current order) is nudged upward.
fn break_ties(points: &mut [(f64, f64)]) {
    // first coordinate: points are already sorted by it
    for i in 1..points.len() {
        if points[i].0 == points[i - 1].0 {
            eprintln!(
                "warning: first-coordinate tie at {:?}, perturbing by one ulp",
                points[i]
            );
            points[i].0 = next_up(points[i - 1].0);
        }
    }
    // second coordinate: check in sorted order of the second coordinate
    let mut order: Vec<usize> = (0..points.len()).collect();
    order.sort_by(|&a, &b| points[a].1.partial_cmp(&points[b].1).unwrap());
    for w in 1..order.len() {
        let (prev, cur) = (order[w - 1], order[w]);
        if points[cur].1 == points[prev].1 {
            eprintln!(
                "warning: second-coordinate tie at {:?}, perturbing by one ulp",
                points[cur]
            );
            points[cur].1 = next_up(points[prev].1);
        }
    }
}

fn next_up(x: f64) -> f64 {
    // f64::next_up is unstable on our MSRV target; bit-increment the finite positive case.
    let bits = x.to_bits();
    if x >= 0.0 {
        f64::from_bits(bits + 1)
    } else {
        f64::from_bits(bits - 1)
    }
}

impl PointField {
    /// Serialize as CSV with 17 significant digits, one point per row.
    /// Header is `y,z` for polymer-frame fields and `x,t` for space-time.
    pub fn write_csv<W: Write>(&self, frame: Frame, mut w: W) -> Result<()> {
        match frame {
            Frame::Polymer => writeln!(w, "y,z")?,
            Frame::Spacetime => writeln!(w, "x,t")?,
        }
        for &(a, b) in &self.points {
            writeln!(w, "{:.16e},{:.16e}", a, b)?;
        }
        Ok(())
    }

    /// Apply the space-time -> polymer transform to every point.
    pub fn to_polymer_frame(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(|&p| spacetime_to_polymer(p)).collect()
    }

    /// Apply the polymer -> space-time transform to every point.
    pub fn to_spacetime_frame(&self) -> Vec<(f64, f64)> {
        self.points.iter().map(|&p| polymer_to_spacetime(p)).collect()
    }
}
