//! Gaussian invariant ensembles: GOE/GUE sampling with density
//! exp(-Tr H^2 / 2N), full-spectrum eigensolves, edge rescaling
//! (lambda_max - 2N)/N^{1/3}, and Dyson's Brownian motion through the exact
//! Ornstein-Uhlenbeck transition (no time discretization error).

use crate::seed::Seed;
use crate::{Error, Result};
use faer::c64;
use nalgebra::DMatrix;
use rand_distr::{Distribution, Normal};
use std::io::Write;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum EnsembleKind {
    Goe,
    Gue,
}

impl EnsembleKind {
    pub fn beta(&self) -> u8 {
        match self {
            EnsembleKind::Goe => 1,
            EnsembleKind::Gue => 2,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            EnsembleKind::Goe => "goe",
            EnsembleKind::Gue => "gue",
        }
    }
}

impl std::str::FromStr for EnsembleKind {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "goe" | "1" => Ok(EnsembleKind::Goe),
            "gue" | "2" => Ok(EnsembleKind::Gue),
            other => Err(Error::InvalidParameter(format!(
                "unknown ensemble '{other}', expected goe or gue"
            ))),
        }
    }
}

/// Self-adjoint matrix H = re + i*im, kept exactly self-adjoint by
/// construction: `re` is symmetric, `im` antisymmetric (and zero for GOE).
#[derive(Debug, Clone, PartialEq)]
pub struct MatrixSample {
    pub kind: EnsembleKind,
    pub n: usize,
    re: DMatrix<f64>,
    im: DMatrix<f64>,
}

impl MatrixSample {
    /// Real-symmetric matrix; rejects asymmetric input.
    pub fn from_symmetric(re: DMatrix<f64>) -> Result<Self> {
        let n = re.nrows();
        if re.ncols() != n {
            return Err(Error::InvalidInput("matrix must be square".into()));
        }
        for i in 0..n {
            for j in 0..i {
                if re[(i, j)] != re[(j, i)] {
                    return Err(Error::InvalidInput(format!(
                        "entry ({i},{j}) breaks symmetry"
                    )));
                }
            }
        }
        let im = DMatrix::zeros(n, n);
        Ok(MatrixSample { kind: EnsembleKind::Goe, n, re, im })
    }

    /// Complex Hermitian matrix from real and imaginary parts; requires
    /// symmetric `re` and antisymmetric `im`.
    pub fn from_hermitian(re: DMatrix<f64>, im: DMatrix<f64>) -> Result<Self> {
        let n = re.nrows();
        if re.ncols() != n || im.nrows() != n || im.ncols() != n {
            return Err(Error::InvalidInput("parts must be square and same size".into()));
        }
        for i in 0..n {
            if im[(i, i)] != 0.0 {
                return Err(Error::InvalidInput(format!("diagonal ({i},{i}) must be real")));
            }
            for j in 0..i {
                if re[(i, j)] != re[(j, i)] || im[(i, j)] != -im[(j, i)] {
                    return Err(Error::InvalidInput(format!(
                        "entry ({i},{j}) breaks Hermitian structure"
                    )));
                }
            }
        }
        Ok(MatrixSample { kind: EnsembleKind::Gue, n, re, im })
    }

    pub fn re(&self) -> &DMatrix<f64> {
        &self.re
    }

    pub fn im(&self) -> &DMatrix<f64> {
        &self.im
    }

    pub fn trace(&self) -> f64 {
        self.re.trace()
    }

    pub fn max_abs_entry(&self) -> f64 {
        let mut m = 0.0f64;
        for i in 0..self.n {
            for j in 0..self.n {
                m = m.max(self.re[(i, j)].hypot(self.im[(i, j)]));
            }
        }
        m
    }
}

/// Fresh sample normalized so the spectrum spans [-2N, 2N] for both
/// ensembles. GUE has density exp(-Tr H^2 / 2N): diagonal variance N,
/// off-diagonal real and imaginary parts each variance N/2. GOE has
/// density exp(-Tr H^2 / 4N): diagonal variance 2N, off-diagonal variance
/// N. (With exp(-Tr H^2 / 2N) for real symmetric matrices the semicircle
/// would end at sqrt(2) N and the edge law at 2N + s N^{1/3} would be
/// degenerate.) Purely a function of the seed.
pub fn sample_matrix(kind: EnsembleKind, n: usize, seed: Seed) -> MatrixSample {
    let mut rng = seed.rng();
    let scale = match kind {
        EnsembleKind::Gue => 1.0,
        EnsembleKind::Goe => 2.0,
    };
    let diag = Normal::new(0.0, (scale * n as f64).sqrt()).unwrap();
    let off = Normal::new(0.0, (scale * n as f64 / 2.0).sqrt()).unwrap();
    let mut re = DMatrix::zeros(n, n);
    let mut im = DMatrix::zeros(n, n);
    for i in 0..n {
        re[(i, i)] = diag.sample(&mut rng);
        for j in (i + 1)..n {
            let x = off.sample(&mut rng);
            re[(i, j)] = x;
            re[(j, i)] = x;
            if kind == EnsembleKind::Gue {
                let y = off.sample(&mut rng);
                im[(i, j)] = y;
                im[(j, i)] = -y;
            }
        }
    }
    MatrixSample { kind, n, re, im }
}

/// Full real spectrum, ascending. Every call verifies the per-eigenpair
/// residual ||Hv - lambda v|| <= 1e-10 * N * max|entry| and the trace
/// identity to 1e-8 * N * max|entry|.
pub fn eigenvalues(m: &MatrixSample) -> Result<Vec<f64>> {
    let scale = (m.n as f64 * m.max_abs_entry()).max(1e-300);
    let n = m.n;
    let a = faer::Mat::from_fn(n, n, |i, j| c64::new(m.re[(i, j)], m.im[(i, j)]));
    let eig = a
        .self_adjoint_eigen(faer::Side::Lower)
        .map_err(|e| Error::Numeric(format!("eigensolve failed at dim {n}: {e:?}")))?;
    let mut resid = &a * eig.U();
    let tol = 1e-10 * scale;
    for j in 0..n {
        let lam = eig.S()[j];
        for i in 0..n {
            resid[(i, j)] -= lam * eig.U()[(i, j)];
        }
        let r = resid.col(j).norm_l2();
        if r > tol {
            return Err(Error::Numeric(format!(
                "eigenpair {j} residual {r:.3e} exceeds {tol:.3e}"
            )));
        }
    }
    let mut vals: Vec<f64> = (0..n).map(|j| eig.S()[j].re).collect();
    vals.sort_by(|x, y| x.partial_cmp(y).unwrap());
    let sum: f64 = vals.iter().sum();
    if (sum - m.trace()).abs() > 1e-8 * scale {
        return Err(Error::Numeric(format!(
            "trace mismatch: eigenvalue sum {sum} vs trace {}",
            m.trace()
        )));
    }
    Ok(vals)
}

/// Edge scaling (lambda_max - 2N) / N^{1/3}.
pub fn edge_rescale(lambda_max: f64, n: usize) -> f64 {
    (lambda_max - 2.0 * n as f64) / (n as f64).cbrt()
}

/// Sorted spectrum with its rescaled top eigenvalue.
#[derive(Debug, Clone)]
pub struct SpectrumSample {
    pub kind: EnsembleKind,
    pub n: usize,
    pub eigenvalues: Vec<f64>,
    pub edge_value: f64,
}

impl SpectrumSample {
    pub fn from_matrix(m: &MatrixSample) -> Result<Self> {
        let eigenvalues = eigenvalues(m)?;
        let edge_value = edge_rescale(*eigenvalues.last().unwrap(), m.n);
        Ok(SpectrumSample { kind: m.kind, n: m.n, eigenvalues, edge_value })
    }

    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "index,lambda")?;
        for (i, lam) in self.eigenvalues.iter().enumerate() {
            writeln!(out, "{},{:.16e}", i, lam)?;
        }
        Ok(())
    }
}

/// One Ornstein-Uhlenbeck step of Dyson's Brownian motion:
/// M' = q M + sqrt(1 - q^2) G with q = exp(-dt/2N) and G fresh. The
/// transition is exact, so dt = 0 returns M unchanged and the static
/// ensemble is stationary.
pub fn dyson_step(m: &MatrixSample, dt: f64, seed: Seed) -> Result<MatrixSample> {
    if !(dt >= 0.0) {
        return Err(Error::InvalidParameter(format!("dt must be >= 0, got {dt}")));
    }
    let q = (-dt / (2.0 * m.n as f64)).exp();
    let r = (1.0 - q * q).max(0.0).sqrt();
    let g = sample_matrix(m.kind, m.n, seed);
    Ok(MatrixSample {
        kind: m.kind,
        n: m.n,
        re: q * &m.re + r * &g.re,
        im: q * &m.im + r * &g.im,
    })
}

/// Rescaled largest eigenvalue along a Dyson trajectory, observed at the
/// given Airy-process times tau (matrix time t = 2 tau N^{2/3}).
#[derive(Debug, Clone)]
pub struct EdgePath {
    pub taus: Vec<f64>,
    pub values: Vec<f64>,
}

impl EdgePath {
    pub fn write_csv<W: Write>(&self, mut out: W) -> std::io::Result<()> {
        writeln!(out, "tau,edge_value")?;
        for (t, v) in self.taus.iter().zip(&self.values) {
            writeln!(out, "{:.16e},{:.16e}", t, v)?;
        }
        Ok(())
    }
}

/// Stationary start, then exact OU steps of length 2 (tau_{i+1} - tau_i)
/// N^{2/3} between observations.
pub fn top_eigenvalue_path(
    kind: EnsembleKind,
    n: usize,
    taus: &[f64],
    seed: Seed,
) -> Result<EdgePath> {
    if taus.is_empty() {
        return Err(Error::InvalidParameter("need at least one observation time".into()));
    }
    if taus[0] < 0.0 {
        return Err(Error::InvalidParameter(format!(
            "first time must be >= 0, got {}",
            taus[0]
        )));
    }
    if taus.windows(2).any(|w| w[0] >= w[1]) {
        return Err(Error::InvalidParameter("times must be strictly increasing".into()));
    }
    let mut m = sample_matrix(kind, n, seed.derive(0));
    let mut values = Vec::with_capacity(taus.len());
    values.push(edge_rescale(top_eigenvalue(&m)?, n));
    for i in 1..taus.len() {
        let dt = 2.0 * (taus[i] - taus[i - 1]) * (n as f64).powf(2.0 / 3.0);
        m = dyson_step(&m, dt, seed.derive(i as u64))?;
        values.push(edge_rescale(top_eigenvalue(&m)?, n));
    }
    Ok(EdgePath { taus: taus.to_vec(), values })
}

fn top_eigenvalue(m: &MatrixSample) -> Result<f64> {
    Ok(*eigenvalues(m)?.last().unwrap())
}
