//! Hastings-McLeod solution of Painleve II and the Tracy-Widom
//! distribution functions built from it.
//!
//! q'' = s q + 2 q^3 with q(s) ~ Ai(s) as s -> +inf. The solution is
//! integrated right to left with fixed-step RK4, seeded at s = 8 where the
//! Airy tail approximates q to far below double precision. Three auxiliary
//! integrals ride along in the same state vector:
//!   J(s) = int_s^inf q^2,  I(s) = int_s^inf (x - s) q(x)^2,  K(s) = int_s^inf q,
//! with J' = -q^2, I' = -J, K' = -q. Then
//!   F2(s) = exp(-I(s)),  F1(s) = exp(-K(s)/2) sqrt(F2(s)).

use crate::airy;
use crate::quad::GaussLegendre;
use crate::{Error, Result};

/// Seed location: Ai approximates the Hastings-McLeod solution to O(Ai^3) here.
const SEED_S: f64 = 8.0;
/// Default RK4 step. The solution manifold is unstable under leftward
/// integration: errors committed near s = 0 reach s < 0 amplified by
/// exp((2 sqrt(2)/3)|s|^{3/2}), so the truncation error must sit below the
/// double-precision roundoff floor for the left tail to come out right.
pub const DEFAULT_STEP: f64 = 1e-4;
/// |q| beyond this aborts the integration as a blow-up.
const BLOWUP: f64 = 1e6;

/// Dense output of the Hastings-McLeod integration, grid ascending in s.
#[derive(Debug, Clone)]
pub struct PainleveSolution {
    pub s_grid: Vec<f64>,
    pub q: Vec<f64>,
    pub q_prime: Vec<f64>,
    j: Vec<f64>,
    i_moment: Vec<f64>,
    k: Vec<f64>,
}

#[derive(Clone, Copy)]
struct State {
    q: f64,
    qp: f64,
    j: f64,
    i: f64,
    k: f64,
}

fn deriv(s: f64, y: State) -> State {
    State {
        q: y.qp,
        qp: s * y.q + 2.0 * y.q * y.q * y.q,
        j: -y.q * y.q,
        i: -y.j,
        k: -y.q,
    }
}

fn add(y: State, d: State, h: f64) -> State {
    State {
        q: y.q + h * d.q,
        qp: y.qp + h * d.qp,
        j: y.j + h * d.j,
        i: y.i + h * d.i,
        k: y.k + h * d.k,
    }
}

impl PainleveSolution {
    /// Integrate from s = 8 down to `s_min` with RK4 steps of size `step`.
    pub fn solve(s_min: f64, step: f64) -> Result<Self> {
        let (q0, qp0) = airy::ai_and_prime(SEED_S);
        Self::solve_seeded(s_min, step, q0, qp0)
    }

    /// Integration with an explicit seed (q, q') at s = 8; used to verify
    /// that off-manifold seeds are rejected as blow-ups.
    pub fn solve_seeded(s_min: f64, step: f64, q0: f64, qp0: f64) -> Result<Self> {
        if !(s_min < SEED_S) || !(step > 0.0 && step.is_finite()) {
            return Err(Error::InvalidParameter(format!(
                "need s_min < {SEED_S} and positive step, got s_min={s_min}, step={step}"
            )));
        }
        let rule = GaussLegendre::new(16);
        let j0 = rule.integrate_panels(SEED_S, 20.0, 24, |x| airy::ai(x).powi(2));
        let i0 = rule.integrate_panels(SEED_S, 20.0, 24, |x| (x - SEED_S) * airy::ai(x).powi(2));
        let k0 = airy::ai_integral_upper(SEED_S);

        let n = ((SEED_S - s_min) / step).ceil() as usize;
        let mut s_grid = Vec::with_capacity(n + 1);
        let mut q = Vec::with_capacity(n + 1);
        let mut q_prime = Vec::with_capacity(n + 1);
        let mut j = Vec::with_capacity(n + 1);
        let mut i_moment = Vec::with_capacity(n + 1);
        let mut k = Vec::with_capacity(n + 1);

        let mut y = State {
            q: q0,
            qp: qp0,
            j: j0,
            i: i0,
            k: k0,
        };
        let h = -step;
        for idx in 0..=n {
            let s = SEED_S + idx as f64 * h;
            if !y.q.is_finite() || y.q.abs() > BLOWUP {
                return Err(Error::Numeric(format!(
                    "Painleve II solution blew up near s = {s:.4}"
                )));
            }
            s_grid.push(s);
            q.push(y.q);
            q_prime.push(y.qp);
            j.push(y.j);
            i_moment.push(y.i);
            k.push(y.k);
            if idx == n {
                break;
            }
            let k1 = deriv(s, y);
            let k2 = deriv(s + 0.5 * h, add(y, k1, 0.5 * h));
            let k3 = deriv(s + 0.5 * h, add(y, k2, 0.5 * h));
            let k4 = deriv(s + h, add(y, k3, h));
            y = State {
                q: y.q + h / 6.0 * (k1.q + 2.0 * k2.q + 2.0 * k3.q + k4.q),
                qp: y.qp + h / 6.0 * (k1.qp + 2.0 * k2.qp + 2.0 * k3.qp + k4.qp),
                j: y.j + h / 6.0 * (k1.j + 2.0 * k2.j + 2.0 * k3.j + k4.j),
                i: y.i + h / 6.0 * (k1.i + 2.0 * k2.i + 2.0 * k3.i + k4.i),
                k: y.k + h / 6.0 * (k1.k + 2.0 * k2.k + 2.0 * k3.k + k4.k),
            };
        }
        s_grid.reverse();
        q.reverse();
        q_prime.reverse();
        j.reverse();
        i_moment.reverse();
        k.reverse();
        Ok(Self {
            s_grid,
            q,
            q_prime,
            j,
            i_moment,
            k,
        })
    }

    pub fn s_min(&self) -> f64 {
        self.s_grid[0]
    }

    pub fn s_max(&self) -> f64 {
        *self.s_grid.last().unwrap()
    }

    /// Index of the grid interval containing s.
    fn bracket(&self, s: f64) -> Result<usize> {
        if s < self.s_min() - 1e-9 || s > self.s_max() + 1e-9 {
            return Err(Error::InvalidInput(format!(
                "s = {s} outside the integrated range [{}, {}]",
                self.s_min(),
                self.s_max()
            )));
        }
        let idx = self.s_grid.partition_point(|&g| g <= s);
        Ok(idx.clamp(1, self.s_grid.len() - 1) - 1)
    }

    /// Cubic Hermite interpolation from node values and derivatives.
    fn hermite(&self, s: f64, vals: &[f64], derivs: impl Fn(usize) -> f64) -> Result<f64> {
        let i = self.bracket(s)?;
        let (s0, s1) = (self.s_grid[i], self.s_grid[i + 1]);
        let h = s1 - s0;
        let t = (s - s0) / h;
        let (v0, v1) = (vals[i], vals[i + 1]);
        let (d0, d1) = (derivs(i) * h, derivs(i + 1) * h);
        let t2 = t * t;
        let t3 = t2 * t;
        Ok(v0 * (2.0 * t3 - 3.0 * t2 + 1.0)
            + d0 * (t3 - 2.0 * t2 + t)
            + v1 * (-2.0 * t3 + 3.0 * t2)
            + d1 * (t3 - t2))
    }

    pub fn q_at(&self, s: f64) -> Result<f64> {
        self.hermite(s, &self.q, |i| self.q_prime[i])
    }

    pub fn q_prime_at(&self, s: f64) -> Result<f64> {
        self.hermite(s, &self.q_prime, |i| {
            self.s_grid[i] * self.q[i] + 2.0 * self.q[i].powi(3)
        })
    }

    /// I(s) = int_s^inf (x - s) q(x)^2 dx, the exponent of F2.
    pub fn i_at(&self, s: f64) -> Result<f64> {
        if s >= self.s_max() {
            // beyond the seed q is the Airy tail
            let rule = GaussLegendre::new(16);
            return Ok(rule.integrate_panels(s, s + 12.0, 24, |x| (x - s) * airy::ai(x).powi(2)));
        }
        self.hermite(s, &self.i_moment, |i| -self.j[i])
    }

    /// K(s) = int_s^inf q(x) dx, the extra exponent of F1.
    pub fn k_at(&self, s: f64) -> Result<f64> {
        if s >= self.s_max() {
            return Ok(airy::ai_integral_upper(s));
        }
        self.hermite(s, &self.k, |i| -self.q[i])
    }

    /// GUE Tracy-Widom distribution function.
    pub fn f2(&self, s: f64) -> Result<f64> {
        Ok((-self.i_at(s)?).exp())
    }

    /// 1 - F2(s), accurate deep in the right tail.
    pub fn f2_upper_tail(&self, s: f64) -> Result<f64> {
        Ok(-(-self.i_at(s)?).exp_m1())
    }

    /// GOE Tracy-Widom distribution function.
    pub fn f1(&self, s: f64) -> Result<f64> {
        Ok((-0.5 * self.k_at(s)?).exp() * self.f2(s)?.sqrt())
    }
}
