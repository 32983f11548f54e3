//! The classical and extended Airy kernels and the 2x2 GOE matrix kernel.
//!
//! All semi-infinite integrals are done with composite Gauss-Legendre panels
//! sized to the local Airy oscillation period. The K22 entry of the GOE
//! kernel is only conditionally convergent along the real axis; its tail is
//! evaluated by splitting the integrand into four analytic components
//! (products of rotated Airy pieces) and integrating each along a complex
//! ray on which it decays exponentially.

use crate::airy::{self, ai, ai_and_prime, ai_integral_lower};
use crate::quad::GaussLegendre;
use crate::{Error, Result};
use num_complex::Complex64;
use std::f64::consts::FRAC_PI_4;

/// Classical Airy kernel (Ai(s2)Ai'(s1) - Ai'(s2)Ai(s1)) / (s2 - s1),
/// with the ODE-limit value Ai'(s)^2 - s Ai(s)^2 near the diagonal.
pub fn airy_kernel(s1: f64, s2: f64) -> f64 {
    if (s1 - s2).abs() < 1e-5 {
        let m = 0.5 * (s1 + s2);
        let (a, ap) = ai_and_prime(m);
        ap * ap - m * a * a
    } else {
        let (a1, ap1) = ai_and_prime(s1);
        let (a2, ap2) = ai_and_prime(s2);
        (a2 * ap1 - ap2 * a1) / (s2 - s1)
    }
}

/// int_0^infty e^{-u dt} Ai(s1+u) Ai(s2+u) du for dt >= 0, panels sized to
/// the oscillation for negative arguments, stopped once the integrand has
/// entered its decaying regime and a panel contributes below 1e-13.
fn decaying_airy_product<F: Fn(f64) -> f64>(dt: f64, s1: f64, s2: f64, weight: F) -> Result<f64> {
    let rule = GaussLegendre::new(16);
    let smin = s1.min(s2);
    let mut total = 0.0;
    let mut u = 0.0;
    loop {
        let w = 0.5f64.min(2.0 / (1.0 + (u + smin).abs()).sqrt());
        let c = rule.integrate(u, u + w, |x| {
            (-(x * dt)).exp() * ai(s1 + x) * ai(s2 + x) * weight(x)
        });
        total += c;
        u += w;
        if u + smin > 3.0 && c.abs() < 1e-13 {
            return Ok(total);
        }
        if u > 400.0 {
            return Err(Error::Numeric(
                "Airy product integral failed to reach its tail bound".into(),
            ));
        }
    }
}

/// Extended Airy kernel. For tau2 >= tau1 the decaying branch
/// int_0^infty e^{-u(tau2-tau1)} Ai(s1+u)Ai(s2+u) du; for tau2 < tau1 minus
/// the companion integral over the oscillatory side.
pub fn extended_airy_kernel(tau1: f64, s1: f64, tau2: f64, s2: f64) -> Result<f64> {
    for t in [tau1, tau2] {
        if t.abs() > 5.0 {
            return Err(Error::InvalidParameter(format!(
                "|tau| = {} exceeds the validated range 5",
                t.abs()
            )));
        }
    }
    for s in [s1, s2] {
        if s < -8.0 {
            return Err(Error::InvalidParameter(format!(
                "s = {s} below the validated range -8"
            )));
        }
    }
    let dt = tau2 - tau1;
    if dt >= 0.0 {
        decaying_airy_product(dt, s1, s2, |_| 1.0)
    } else {
        oscillatory_airy_product(dt, s1, s2).map(|v| -v)
    }
}

/// int_0^infty e^{dt lam} Ai(s1-lam) Ai(s2-lam) dlam for dt < 0.
fn oscillatory_airy_product(dt: f64, s1: f64, s2: f64) -> Result<f64> {
    let rule = GaussLegendre::new(16);
    let smin = s1.min(s2);
    // e^{-36} times the O(1) oscillatory amplitude is below the 1e-10 bound
    let lam_max = 36.0 / (-dt);
    let mut total = 0.0;
    let mut lam = 0.0;
    let mut panels = 0usize;
    while lam < lam_max {
        let w = 0.5f64.min(2.0 / (1.0 + lam - smin).sqrt());
        let end = (lam + w).min(lam_max);
        total += rule.integrate(lam, end, |x| (dt * x).exp() * ai(s1 - x) * ai(s2 - x));
        lam = end;
        panels += 1;
        if panels > 100_000 {
            return Err(Error::Numeric(format!(
                "reversed-time branch needs too many panels at time gap {dt}"
            )));
        }
    }
    Ok(total)
}

/// Entry (i, j) of the 2x2 GOE matrix kernel at (s1, s2).
pub fn goe_kernel_entry(i: u8, j: u8, s1: f64, s2: f64) -> Result<f64> {
    for s in [s1, s2] {
        if s < -8.0 {
            return Err(Error::InvalidParameter(format!(
                "s = {s} below the validated range -8"
            )));
        }
    }
    match (i, j) {
        (1, 1) => goe_k11(s1, s2),
        (1, 2) => goe_k12(s1, s2),
        (2, 1) => goe_k12(s2, s1).map(|v| -v),
        (2, 2) => goe_k22(s1, s2),
        _ => Err(Error::InvalidParameter(format!(
            "matrix kernel indices must be in {{1,2}}, got ({i},{j})"
        ))),
    }
}

/// K11 = int_0^infty [Ai(s1+l)Ai'(s2+l) - Ai(s2+l)Ai'(s1+l)] dl.
fn goe_k11(s1: f64, s2: f64) -> Result<f64> {
    if s1 == s2 {
        return Ok(0.0);
    }
    let rule = GaussLegendre::new(16);
    let smin = s1.min(s2);
    let mut total = 0.0;
    let mut u = 0.0;
    loop {
        let w = 0.5f64.min(2.0 / (1.0 + (u + smin).abs()).sqrt());
        let c = rule.integrate(u, u + w, |x| {
            let (a1, ap1) = ai_and_prime(s1 + x);
            let (a2, ap2) = ai_and_prime(s2 + x);
            a1 * ap2 - a2 * ap1
        });
        total += c;
        u += w;
        if u + smin > 3.0 && c.abs() < 1e-13 {
            return Ok(total);
        }
        if u > 400.0 {
            return Err(Error::Numeric("K11 integral failed to converge".into()));
        }
    }
}

/// K12 = int_0^infty Ai(s1+l)Ai(s2+l) dl + Ai(s1)/2 * int_{-inf}^{s2} Ai.
fn goe_k12(s1: f64, s2: f64) -> Result<f64> {
    let first = decaying_airy_product(0.0, s1, s2, |_| 1.0)?;
    Ok(first + 0.5 * ai(s1) * ai_integral_lower(s2))
}

const ROT: Complex64 = Complex64::new(0.5, 0.866_025_403_784_438_6); // e^{i pi/3}

/// Product e^{i pi/3} Ai(x1 e^{i pi/3}) * W(x2 rot2) evaluated in scaled
/// form: the two exponents are combined before exponentiating, since the
/// individual factors overflow along the deformed rays while the product
/// stays bounded.
fn rotated_product(x1: Complex64, x2: Complex64, rot2: Complex64) -> Complex64 {
    let (a1, z1) = airy::ai_asym_scaled(x1 * ROT);
    let (w2, z2) = airy::w_asym_scaled(x2 * rot2);
    ROT * a1 * w2 * (-(z1 + z2)).exp()
}

/// K22 = 1/4 int_0^infty [Ai(s1-l) P(s2-l) - Ai(s2-l) P(s1-l)] dl with
/// P(x) = int_{-inf}^x Ai. The integral converges only conditionally; the
/// finite head is integrated directly and the tail by complex-ray
/// deformation in the variable u = sqrt(lambda).
fn goe_k22(s1: f64, s2: f64) -> Result<f64> {
    let c = s2 - s1;
    if c.abs() < 1e-9 {
        return Ok(0.0);
    }
    // The entry is exactly antisymmetric; evaluate only the s1 < s2 branch
    // (where the slow-ray deformation is well conditioned) and reflect.
    if c < 0.0 {
        return Ok(-goe_k22(s2, s1)?);
    }
    let lam0 = 30.0 + s1.max(s2).max(0.0);
    let rule = GaussLegendre::new(20);
    let smin = s1.min(s2);
    let mut direct = 0.0;
    let mut lam = 0.0;
    while lam < lam0 {
        let w = 0.5f64.min(1.2 / (1.0 + lam - smin).sqrt());
        let end = (lam + w).min(lam0);
        direct += rule.integrate(lam, end, |x| {
            ai(s1 - x) * ai_integral_lower(s2 - x) - ai(s2 - x) * ai_integral_lower(s1 - x)
        });
        lam = end;
    }

    let u0 = lam0.sqrt();
    // fast component: phase ~ exp(-4i u^3/3), decays at rate ~ 2 u0^2
    // along the ray u0 + rho e^{-i pi/4}
    let down = Complex64::from_polar(1.0, -FRAC_PI_4);
    let rate = 2.0 * u0 * u0;
    let c_pp = |u: Complex64| {
        2.0 * u * rotated_product(u * u - Complex64::from(s1), u * u - Complex64::from(s2), ROT)
    };
    let i_fast = ray_integral(|r| c_pp(Complex64::from(u0) + r * down) * down, 40.0 / rate, 8);
    // slow component: phase ~ exp(-i c u), decays at rate |c| sin(pi/4)
    // along the ray into the half-plane matching the sign of c
    let ray = Complex64::from_polar(1.0, -c.signum() * FRAC_PI_4);
    let c_pm = |u: Complex64| {
        2.0 * u
            * rotated_product(
                u * u - Complex64::from(s1),
                u * u - Complex64::from(s2),
                ROT.conj(),
            )
    };
    let len = 40.0 / (c.abs() * FRAC_PI_4.sin());
    let panels = 50.max((len / 1.0) as usize).min(4000);
    let i_slow = ray_integral(|r| c_pm(Complex64::from(u0) + r * ray) * ray, len, panels);
    let tail = 2.0 * (i_fast + i_slow).re;
    Ok(0.25 * (direct + tail))
}

fn ray_integral<F: Fn(f64) -> Complex64>(f: F, len: f64, panels: usize) -> Complex64 {
    let rule = GaussLegendre::new(20);
    let w = len / panels as f64;
    let mut total = Complex64::new(0.0, 0.0);
    for p in 0..panels {
        let a = p as f64 * w;
        for (x, wt) in rule.mapped(a, a + w) {
            total += wt * f(x);
        }
    }
    total
}
