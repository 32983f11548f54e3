//! Tracy-Widom distribution functions F1 and F2 by two independent routes:
//! the Painleve II representation and Fredholm determinants of Airy-type
//! kernels, plus tabulated form with CSV output.

use crate::fredholm::fredholm_det_adaptive;
use crate::kernels::airy_kernel;
use crate::painleve::{PainleveSolution, DEFAULT_STEP};
use crate::{airy, Error, Result};
use std::io::Write;
use std::sync::OnceLock;

/// Evaluation route.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Method {
    Painleve,
    Fredholm,
}

impl Method {
    pub fn name(&self) -> &'static str {
        match self {
            Method::Painleve => "painleve",
            Method::Fredholm => "fredholm",
        }
    }
}

impl std::str::FromStr for Method {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "painleve" => Ok(Method::Painleve),
            "fredholm" => Ok(Method::Fredholm),
            other => Err(Error::InvalidParameter(format!(
                "unknown method '{other}', expected painleve or fredholm"
            ))),
        }
    }
}

fn shared_solution() -> &'static PainleveSolution {
    static SOL: OnceLock<PainleveSolution> = OnceLock::new();
    SOL.get_or_init(|| {
        PainleveSolution::solve(-10.0, DEFAULT_STEP).expect("seeded integration cannot blow up")
    })
}

/// Interval length for the Fredholm truncations; Airy decay makes the
/// truncation error far below the 1e-8 determinant tolerance.
const TRUNCATION: f64 = 16.0;

/// Tracy-Widom CDF for beta in {1, 2} by the requested route.
pub fn tw_cdf(beta: u8, s: f64, method: Method) -> Result<f64> {
    match (beta, method) {
        (2, Method::Painleve) => shared_solution().f2(s),
        (1, Method::Painleve) => shared_solution().f1(s),
        (2, Method::Fredholm) => {
            fredholm_det_adaptive(airy_kernel, s, s + TRUNCATION, 1e-8)
        }
        (1, Method::Fredholm) => {
            fredholm_det_adaptive(|x, y| airy::ai(x + y + s), 0.0, TRUNCATION, 1e-8)
        }
        _ => Err(Error::InvalidParameter(format!(
            "beta must be 1 or 2, got {beta}"
        ))),
    }
}

/// Tabulated distribution function on a uniform grid.
#[derive(Debug, Clone)]
pub struct DistTable {
    pub beta: u8,
    pub method: Method,
    pub s: Vec<f64>,
    pub f: Vec<f64>,
}

impl DistTable {
    pub fn build(beta: u8, method: Method, s_min: f64, s_max: f64, step: f64) -> Result<Self> {
        if !(s_min < s_max) || !(step > 0.0) {
            return Err(Error::InvalidParameter(format!(
                "bad table grid: [{s_min}, {s_max}] step {step}"
            )));
        }
        let n = ((s_max - s_min) / step).round() as usize;
        let mut s = Vec::with_capacity(n + 1);
        let mut f = Vec::with_capacity(n + 1);
        for i in 0..=n {
            let x = s_min + i as f64 * step;
            s.push(x);
            f.push(tw_cdf(beta, x, method)?);
        }
        Ok(Self { beta, method, s, f })
    }

    /// Linearly interpolated CDF value; the flag reports clamping outside
    /// the table range.
    pub fn cdf(&self, x: f64) -> (f64, bool) {
        let first = self.s[0];
        let last = *self.s.last().unwrap();
        if x <= first {
            return (self.f[0], x < first);
        }
        if x >= last {
            return (*self.f.last().unwrap(), x > last);
        }
        let idx = self.s.partition_point(|&g| g <= x) - 1;
        let t = (x - self.s[idx]) / (self.s[idx + 1] - self.s[idx]);
        (self.f[idx] * (1.0 - t) + self.f[idx + 1] * t, false)
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(
            out,
            "# tracy-widom beta={} method={}",
            self.beta,
            self.method.name()
        )?;
        writeln!(out, "s,F")?;
        for (s, f) in self.s.iter().zip(&self.f) {
            writeln!(out, "{:.16e},{:.16e}", s, f)?;
        }
        Ok(())
    }
}
