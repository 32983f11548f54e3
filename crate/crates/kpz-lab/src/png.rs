//! PNG surface heights for droplet and flat geometries via the directed
//! polymer / LIS mapping, an independent event-driven dynamics oracle,
//! multilayer line ensembles, and the edge rescalings.
//!
//! The fast path for heights is LIS-based; the explicit step dynamics in
//! [`simulate_png_dynamics`] is quadratic in the number of events and is
//! kept as a correctness oracle.

use crate::combinatorics::{lis_length, rsk_real};
use crate::pointfield::PointField;
use crate::{Error, Result};
use serde::Serialize;
use std::io::Write;

/// Surface height sampled on a grid at a fixed growth time.
#[derive(Debug, Clone, PartialEq)]
pub struct HeightProfile {
    pub t: f64,
    pub xs: Vec<f64>,
    pub hs: Vec<i64>,
}

impl HeightProfile {
    /// CSV with header `x,h`.
    pub fn write_csv<W: Write>(&self, mut w: W) -> Result<()> {
        writeln!(w, "x,h")?;
        for (x, h) in self.xs.iter().zip(&self.hs) {
            writeln!(w, "{:.16e},{}", x, h)?;
        }
        Ok(())
    }
}

/// Non-crossing level heights `h_l(0, t)` for `l = 0, -1, ..., -(depth-1)`.
#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct LineEnsemble {
    pub t: f64,
    /// `levels[k]` is `h_{-k}(0, t)`.
    pub levels: Vec<i64>,
}

impl LineEnsemble {
    pub fn depth(&self) -> usize {
        self.levels.len()
    }

    /// JSON form `{"t":...,"levels":{"0":...,"-1":...}}`.
    pub fn to_json(&self) -> serde_json::Value {
        let mut map = serde_json::Map::new();
        for (k, &h) in self.levels.iter().enumerate() {
            map.insert(format!("{}", -(k as i64)), serde_json::json!(h));
        }
        serde_json::json!({ "t": self.t, "levels": map })
    }
}

/// Default depth for line ensembles; deeper rows are exponentially rare at
/// the edge.
pub const DEFAULT_LINE_DEPTH: usize = 5;

/// Default grid for [`height_profile`]: 201 uniform points on `[-t, t]`.
pub fn default_grid(t: f64) -> Vec<f64> {
    let n = 201;
    (0..n).map(|i| -t + 2.0 * t * i as f64 / (n - 1) as f64).collect()
}

/// Droplet height `h(x, T)` from a unit-intensity polymer-frame field.
///
/// Equals the longest chain among the field points inside the backward
/// light cone of `(x, T)`, which is the rectangle `[0, T+x] x [0, T-x]`
/// in polymer coordinates. Returns 0 outside the droplet support.
pub fn droplet_height(t: f64, x: f64, field: &PointField) -> i64 {
    if x.abs() > t {
        return 0;
    }
    // field points are lexicographically sorted by y, so the z values of the
    // filtered points are already in sweep order
    let zs: Vec<f64> = field
        .points
        .iter()
        .filter(|p| p.0 >= 0.0 && p.0 <= t + x && p.1 >= 0.0 && p.1 <= t - x)
        .map(|p| p.1)
        .collect();
    lis_length(&zs).expect("point fields guarantee distinct coordinates") as i64
}

/// Flat-geometry height `h(0, T)`: the point-to-line maximal chain among
/// all points of the triangle `{y, z >= 0, y + z <= 2T}`.
pub fn flat_height(_t: f64, field: &PointField) -> i64 {
    let zs: Vec<f64> = field.points.iter().map(|p| p.1).collect();
    lis_length(&zs).expect("point fields guarantee distinct coordinates") as i64
}

/// [`droplet_height`] evaluated on a grid.
pub fn height_profile(t: f64, xs: &[f64], field: &PointField) -> HeightProfile {
    let hs = xs.iter().map(|&x| droplet_height(t, x, field)).collect();
    HeightProfile { t, xs: xs.to_vec(), hs }
}

/// Multilayer line heights at `x = 0` from the RSK shape of the field:
/// `h_l(0, T) = lambda_{1-l} + l`, with `lambda_j = 0` beyond the last row.
pub fn line_ensemble(t: f64, field: &PointField, depth: usize) -> Result<LineEnsemble> {
    let (p, _q) = rsk_real(&field.points)?;
    let shape = p.shape();
    let levels = (0..depth)
        .map(|k| shape.row(k) as i64 - k as i64)
        .collect();
    Ok(LineEnsemble { t, levels })
}

/// Droplet edge rescaling: `xi = x T^{-2/3}`,
/// `s = T^{-1/3} (h - 2T sqrt(1 - xi^2 T^{-2/3}))`.
pub fn rescale_droplet(h: i64, t: f64, x: f64) -> Result<(f64, f64)> {
    let xi = x * t.powf(-2.0 / 3.0);
    let arg = 1.0 - xi * xi * t.powf(-2.0 / 3.0);
    if arg <= 0.0 {
        return Err(Error::InvalidParameter(format!(
            "position x = {x} is outside the droplet interior at T = {t}"
        )));
    }
    let s = t.powf(-1.0 / 3.0) * (h as f64 - 2.0 * t * arg.sqrt());
    Ok((xi, s))
}

/// Flat edge rescaling: `s = (h - 2T) 2^{2/3} T^{-1/3}`.
pub fn rescale_flat(h: i64, t: f64) -> f64 {
    (h as f64 - 2.0 * t) * 2f64.powf(2.0 / 3.0) * t.powf(-1.0 / 3.0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
enum StepKind {
    Up,
    Down,
}

/// Step configuration of the event-driven dynamics at time `t`: positions
/// sorted left to right, each an up- or down-step of the height profile.
#[derive(Debug, Clone)]
pub struct StepConfig {
    t: f64,
    steps: Vec<(f64, StepKind)>,
}

impl StepConfig {
    /// Height at `x` with the closed-set convention: an up-step at `x`
    /// already counts, a down-step at `x` does not yet.
    pub fn height_at(&self, x: f64) -> i64 {
        let mut h = 0i64;
        for &(p, kind) in &self.steps {
            match kind {
                StepKind::Up if p <= x => h += 1,
                StepKind::Down if p < x => h -= 1,
                _ => {}
            }
        }
        h
    }

    pub fn sample(&self, xs: &[f64]) -> HeightProfile {
        HeightProfile {
            t: self.t,
            xs: xs.to_vec(),
            hs: xs.iter().map(|&x| self.height_at(x)).collect(),
        }
    }

    /// Advance all steps by `dt`: up-steps move left, down-steps move right.
    fn drift(&mut self, dt: f64) {
        for (p, kind) in &mut self.steps {
            match kind {
                StepKind::Up => *p -= dt,
                StepKind::Down => *p += dt,
            }
        }
        self.t += dt;
    }

    /// Time until the next up/down collision, with the colliding pair index,
    /// or `None` if no pair is approaching.
    fn next_collision(&self) -> Option<(f64, usize)> {
        let mut best: Option<(f64, usize)> = None;
        for i in 0..self.steps.len().saturating_sub(1) {
            if self.steps[i].1 == StepKind::Down && self.steps[i + 1].1 == StepKind::Up {
                let dt = ((self.steps[i + 1].0 - self.steps[i].0) / 2.0).max(0.0);
                if best.map_or(true, |(b, _)| dt < b) {
                    best = Some((dt, i));
                }
            }
        }
        best
    }

    /// Run all collisions happening strictly before `t_end`, then drift to it.
    fn evolve_to(&mut self, t_end: f64) {
        while let Some((dt, i)) = self.next_collision() {
            if self.t + dt >= t_end {
                break;
            }
            self.drift(dt);
            self.steps.drain(i..i + 2);
        }
        self.drift(t_end - self.t);
    }

    fn nucleate(&mut self, x: f64) {
        // up-step immediately left of the down-step at the same position
        let at = self.steps.partition_point(|&(p, _)| p < x);
        self.steps.insert(at, (x, StepKind::Down));
        self.steps.insert(at, (x, StepKind::Up));
    }
}

/// Exact event-driven PNG evolution from a flat initial condition.
///
/// Nucleations (space-time frame, times in `(0, T]`) are processed in time
/// order; steps propagate at unit speed and colliding up/down pairs
/// annihilate. Returns the step configuration at time `T`, which can be
/// sampled anywhere.
pub fn simulate_png_dynamics(nucleations: &PointField, t_end: f64) -> Result<StepConfig> {
    let mut events: Vec<(f64, f64)> = nucleations
        .points
        .iter()
        .filter(|p| p.1 <= t_end)
        .map(|&(x, t)| (t, x))
        .collect();
    events.sort_by(|a, b| a.partial_cmp(b).unwrap());
    if events.windows(2).any(|w| w[0] == w[1]) {
        return Err(Error::InvalidInput(
            "simultaneous nucleations at identical coordinates".into(),
        ));
    }
    let mut config = StepConfig { t: 0.0, steps: Vec::new() };
    for &(t, x) in &events {
        config.evolve_to(t);
        config.nucleate(x);
    }
    config.evolve_to(t_end);
    Ok(config)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::pointfield::{sample_poisson, spacetime_to_polymer, Region};
    use crate::seed::Seed;

    fn triangle_field(t: f64, seed: u64) -> PointField {
        sample_poisson(Region::Triangle { t }, 1.0, Seed::new(seed)).unwrap()
    }

    /// Transform a polymer-frame field to its space-time nucleation set.
    fn to_spacetime(field: &PointField) -> PointField {
        let mut f = field.clone();
        f.points = field.to_spacetime_frame();
        f.points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        f
    }

    #[test]
    fn empty_field_heights() {
        let mut f = triangle_field(5.0, 0);
        f.points.clear();
        assert_eq!(droplet_height(5.0, 0.0, &f), 0);
        assert_eq!(flat_height(5.0, &f), 0);
        let profile = height_profile(5.0, &default_grid(5.0), &f);
        assert!(profile.hs.iter().all(|&h| h == 0));
    }

    #[test]
    fn single_point_height() {
        let mut f = triangle_field(5.0, 0);
        f.points = vec![(2.0, 3.0)];
        assert_eq!(droplet_height(5.0, 0.0, &f), 1);
        // outside the droplet support
        assert_eq!(droplet_height(5.0, 6.0, &f), 0);
        assert_eq!(droplet_height(5.0, -6.0, &f), 0);
    }

    #[test]
    fn single_point_profile_is_cone_indicator() {
        // nucleation at space-time (x0, t0) gives h(x, T) = 1 iff |x - x0| <= T - t0
        let mut f = triangle_field(5.0, 0);
        let (x0, t0) = (1.0, 2.0);
        f.points = vec![spacetime_to_polymer((x0, t0))];
        let t = 5.0;
        for x in [-4.0, -2.1, -1.9, 0.0, 1.0, 3.9, 4.1, 4.9] {
            let expect = if (x - x0).abs() <= t - t0 { 1 } else { 0 };
            assert_eq!(droplet_height(t, x, &f), expect, "x = {x}");
        }
    }

    #[test]
    fn antichain_has_height_one() {
        let mut f = triangle_field(5.0, 0);
        // strictly decreasing in z as y increases: no two comparable
        f.points = vec![(1.0, 8.0), (2.0, 6.0), (3.0, 4.0), (4.0, 2.0)];
        assert_eq!(flat_height(5.0, &f), 1);
    }

    #[test]
    fn dynamics_free_propagation() {
        let mut st = triangle_field(5.0, 0);
        st.points = vec![(1.0, 2.0)]; // nucleation at x=1, t=2
        let cfg = simulate_png_dynamics(&st, 5.0).unwrap();
        for x in [-2.5f64, -2.0, 0.0, 1.0, 3.9, 4.0, 4.5] {
            let expect = if (x - 1.0).abs() <= 3.0 { 1 } else { 0 };
            assert_eq!(cfg.height_at(x), expect, "x = {x}");
        }
    }

    #[test]
    fn dynamics_no_nucleations_is_flat() {
        let mut f = triangle_field(5.0, 0);
        f.points.clear();
        let cfg = simulate_png_dynamics(&f, 5.0).unwrap();
        assert_eq!(cfg.height_at(0.0), 0);
    }

    #[test]
    fn dynamics_rejects_simultaneous_events() {
        let mut f = triangle_field(5.0, 0);
        f.points = vec![(0.5, 1.0), (0.5, 1.0)];
        assert!(simulate_png_dynamics(&f, 5.0).is_err());
    }

    #[test]
    fn cross_oracle_dynamics_vs_lis() {
        // droplet geometry: polymer triangle field <-> space-time nucleations
        for seed in 0..40 {
            let t = 4.0 + (seed % 5) as f64;
            let field = triangle_field(t, seed);
            let st = to_spacetime(&field);
            let cfg = simulate_png_dynamics(&st, t).unwrap();
            for k in 0..11 {
                let x = -0.9 * t + 1.8 * t * k as f64 / 10.0;
                assert_eq!(
                    cfg.height_at(x),
                    droplet_height(t, x, &field),
                    "seed {seed}, t {t}, x {x}"
                );
            }
        }
    }

    #[test]
    fn line_ensemble_identities() {
        // empty field: h_l = l
        let mut f = triangle_field(5.0, 0);
        f.points.clear();
        let ens = line_ensemble(5.0, &f, 4).unwrap();
        assert_eq!(ens.levels, vec![0, -1, -2, -3]);

        // comparison permutation (2,3,1,5,4) has shape (3,2): (h0, h-1) = (3, 1)
        let mut f = triangle_field(5.0, 0);
        f.points = vec![(2.0, 1.0), (3.0, 2.0), (1.0, 3.0), (5.0, 4.0), (4.0, 5.0)];
        f.points.sort_by(|a, b| a.partial_cmp(b).unwrap());
        let ens = line_ensemble(5.0, &f, 3).unwrap();
        assert_eq!(ens.levels, vec![3, 1, -2]);

        // h0 equals the droplet height at x = 0
        for seed in 0..20 {
            let field = sample_poisson(
                Region::Rectangle { a: 6.0, b: 6.0 },
                1.0,
                Seed::new(seed),
            )
            .unwrap();
            let ens = line_ensemble(6.0, &field, DEFAULT_LINE_DEPTH).unwrap();
            assert_eq!(ens.levels[0], droplet_height(6.0, 0.0, &field));
        }
    }

    #[test]
    fn line_ensemble_non_crossing() {
        for seed in 0..30 {
            let field = triangle_field(6.0, seed);
            let ens = line_ensemble(6.0, &field, 6).unwrap();
            for w in ens.levels.windows(2) {
                // h_l >= h_{l-1} + 1
                assert!(w[0] >= w[1] + 1, "levels {:?}", ens.levels);
            }
        }
    }

    #[test]
    fn monotone_nesting_under_supersets() {
        // adding points never decreases any partial sum of the RSK shape
        for seed in 0..10 {
            let field = triangle_field(6.0, seed);
            let mut prefix = field.clone();
            let mut prev_sums: Vec<usize> = vec![0; 8];
            for take in 0..=field.points.len() {
                prefix.points = field.points[..take].to_vec();
                let (p, _) = rsk_real(&prefix.points).unwrap();
                let shape = p.shape();
                let sums: Vec<usize> = (0..8)
                    .map(|k| (0..=k).map(|i| shape.row(i)).sum())
                    .collect();
                for (new, old) in sums.iter().zip(&prev_sums) {
                    assert!(new >= old);
                }
                prev_sums = sums;
            }
        }
    }

    #[test]
    fn rescaling_fixed_points() {
        let t = 64.0;
        let (xi, s) = rescale_droplet((2.0 * t) as i64, t, 0.0).unwrap();
        assert_eq!(xi, 0.0);
        assert!(s.abs() < 1e-12);
        let h1 = 2.0 * t + t.powf(1.0 / 3.0);
        let (_, s) = rescale_droplet(h1 as i64, t, 0.0).unwrap();
        assert!((s - 1.0).abs() < 1e-12);
        assert!(rescale_droplet(10, 4.0, 8.01).is_err());

        assert!(rescale_flat(128, 64.0).abs() < 1e-12);
        let h = 2.0 * 64.0 + 2f64.powf(-2.0 / 3.0) * 4.0; // T^{1/3} = 4
        assert!((rescale_flat(h.round() as i64, 64.0) - (h.round() - 128.0) / 4.0 * 2f64.powf(2.0 / 3.0)).abs() < 1e-12);
    }

    #[test]
    fn rescale_droplet_offcenter_scale() {
        let t = 1000.0;
        let (xi, _) = rescale_droplet(2000, t, 100.0).unwrap();
        assert!((xi - 1.0).abs() < 1e-12);
    }

    #[test]
    fn profile_csv_shape() {
        let f = triangle_field(4.0, 1);
        let p = height_profile(4.0, &[0.0, 1.0], &f);
        let mut buf = Vec::new();
        p.write_csv(&mut buf).unwrap();
        let s = String::from_utf8(buf).unwrap();
        assert!(s.starts_with("x,h\n"));
        assert_eq!(s.lines().count(), 3);
    }

    #[test]
    fn line_ensemble_json() {
        let ens = LineEnsemble { t: 2.0, levels: vec![3, 1] };
        let v = ens.to_json();
        assert_eq!(v["levels"]["0"], 3);
        assert_eq!(v["levels"]["-1"], 1);
    }
}
