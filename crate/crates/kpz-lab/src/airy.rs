//! Airy function Ai, its derivative, and its antiderivative.
//!
//! Three evaluation regimes, chosen so the worst-case absolute error on
//! [-12, 12] stays well below 1e-9:
//!  - |x| <= 5.5: Maclaurin series of both ODE solutions;
//!  - x > 5.5: exponentially damped asymptotic series;
//!  - -30 <= x < -5.5: a precomputed Taylor marching table for the ODE
//!    y'' = x y, stepped down from -5.5 and built once per process;
//!  - x < -30: asymptotic series of the rotated function e^{i pi/3} Ai(z e^{i pi/3}),
//!    whose real part recovers Ai on the negative axis without cancellation
//!    in the phase handling.
//!
//! The antiderivative int_{-inf}^x Ai is carried through the marching table
//! alongside Ai and Ai', seeded by quadrature at x = -5.5, and closed with the
//! asymptotic series of W(z) = int_z^inf Ai on the rotated ray for x < -30.

use crate::quad::GaussLegendre;
use num_complex::Complex64;
use std::sync::OnceLock;

/// Ai(0) = 3^(-2/3) / Gamma(2/3)
const AI_0: f64 = 0.3550280538878172;
/// Ai'(0) = -3^(-1/3) / Gamma(1/3)
const AIP_0: f64 = -0.2588194037928068;

const SERIES_MAX: f64 = 5.5;
const TABLE_MIN: f64 = -30.0;
const TABLE_STEP: f64 = 0.25;
const TAYLOR_ORDER: usize = 24;
/// Requested accuracy window; outside it results carry a warning flag.
pub const ACCURACY_WINDOW: f64 = 12.0;

/// Value plus a flag raised when the argument lies outside the
/// guaranteed-accuracy window [-12, 12].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct AiryEval {
    pub value: f64,
    pub reduced_accuracy: bool,
}

/// Ai(s) with the accuracy-window flag.
pub fn airy_ai(s: f64) -> AiryEval {
    AiryEval {
        value: ai(s),
        reduced_accuracy: s.abs() > ACCURACY_WINDOW,
    }
}

/// Ai'(s) with the accuracy-window flag.
pub fn airy_ai_prime(s: f64) -> AiryEval {
    AiryEval {
        value: ai_prime(s),
        reduced_accuracy: s.abs() > ACCURACY_WINDOW,
    }
}

/// Ai(x).
pub fn ai(x: f64) -> f64 {
    ai_and_prime(x).0
}

/// Ai'(x).
pub fn ai_prime(x: f64) -> f64 {
    ai_and_prime(x).1
}

/// (Ai(x), Ai'(x)) evaluated together.
pub fn ai_and_prime(x: f64) -> (f64, f64) {
    if x.abs() <= SERIES_MAX {
        maclaurin(x)
    } else if x > 0.0 {
        asymptotic_positive(x)
    } else if x >= TABLE_MIN {
        let t = table();
        let node = t.nearest(x);
        (node.eval_ai(x), node.eval_ai_prime(x))
    } else {
        rotated_negative(-x)
    }
}

/// int_x^inf Ai(t) dt.
pub fn ai_integral_upper(x: f64) -> f64 {
    if x >= 8.0 {
        w_series_real(x)
    } else if x >= TABLE_MIN {
        if x < -SERIES_MAX {
            let t = table();
            1.0 - t.nearest(x).eval_antiderivative(x)
        } else {
            // quadrature across the series regime, closed by the tail series
            let rule = GaussLegendre::new(20);
            let panels = ((8.0 - x) / 0.5).ceil() as usize;
            rule.integrate_panels(x, 8.0, panels.max(1), ai) + w_series_real(8.0)
        }
    } else {
        // total mass of Ai is 1
        1.0 - 2.0 * w_asym_c(Complex64::from_polar(-x, std::f64::consts::FRAC_PI_3)).re
    }
}

/// int_{-inf}^x Ai(t) dt.
pub fn ai_integral_lower(x: f64) -> f64 {
    1.0 - ai_integral_upper(x)
}

/// Maclaurin series: Ai = Ai(0) y1 + Ai'(0) y2 where y1, y2 solve y'' = x y
/// with (y1, y1')(0) = (1, 0) and (y2, y2')(0) = (0, 1).
fn maclaurin(x: f64) -> (f64, f64) {
    let x2 = x * x;
    let x3 = x2 * x;
    // y1 = sum a_{3k} x^{3k}
    let mut s1 = 0.0;
    let mut s1p = 0.0;
    let mut t = 1.0f64; // a_{3k} x^{3k}
    let mut tp = 0.0; // 3k a_{3k} x^{3k-1}
    // y2 = sum b_{3k+1} x^{3k+1}
    let mut s2 = 0.0;
    let mut s2p = 0.0;
    let mut u = x; // b_{3k+1} x^{3k+1}
    let mut up = 1.0; // (3k+1) b_{3k+1} x^{3k}
    for k in 0..80 {
        s1 += t;
        s1p += tp;
        s2 += u;
        s2p += up;
        if t.abs() + u.abs() < 1e-22 {
            break;
        }
        let kf = 3.0 * k as f64;
        tp = t * x2 / (kf + 2.0);
        t *= x3 / ((kf + 2.0) * (kf + 3.0));
        up = u * x2 / (kf + 3.0);
        u *= x3 / ((kf + 3.0) * (kf + 4.0));
    }
    (AI_0 * s1 + AIP_0 * s2, AI_0 * s1p + AIP_0 * s2p)
}

/// Coefficients u_k of the Ai asymptotic series; u_{k+1} = u_k (6k+1)(6k+5) / (72(k+1)).
fn u_coefficients() -> &'static [f64; 16] {
    static U: OnceLock<[f64; 16]> = OnceLock::new();
    U.get_or_init(|| {
        let mut u = [0.0; 16];
        u[0] = 1.0;
        for k in 0..15 {
            let kf = k as f64;
            u[k + 1] = u[k] * (6.0 * kf + 1.0) * (6.0 * kf + 5.0) / (72.0 * (kf + 1.0));
        }
        u
    })
}

/// Coefficients v_k of the Ai' asymptotic series; v_k = -u_k (6k+1)/(6k-1).
fn v_coefficients() -> &'static [f64; 16] {
    static V: OnceLock<[f64; 16]> = OnceLock::new();
    V.get_or_init(|| {
        let u = u_coefficients();
        let mut v = [0.0; 16];
        v[0] = 1.0;
        for k in 1..16 {
            let kf = k as f64;
            v[k] = -u[k] * (6.0 * kf + 1.0) / (6.0 * kf - 1.0);
        }
        v
    })
}

/// Coefficients f_k of the series for W(z) = int_z^inf Ai:
/// f_0 = 1/(2 sqrt(pi)), f_k = (-1)^k u_k / (2 sqrt(pi)) - (k - 1/2) f_{k-1}.
fn f_coefficients() -> &'static [f64; 12] {
    static F: OnceLock<[f64; 12]> = OnceLock::new();
    F.get_or_init(|| {
        let u = u_coefficients();
        let c = 0.5 / std::f64::consts::PI.sqrt();
        let mut f = [0.0; 12];
        f[0] = c;
        for k in 1..12 {
            let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
            f[k] = sign * u[k] * c - (k as f64 - 0.5) * f[k - 1];
        }
        f
    })
}

fn asymptotic_positive(x: f64) -> (f64, f64) {
    let u = u_coefficients();
    let v = v_coefficients();
    let zeta = 2.0 / 3.0 * x.powf(1.5);
    let mut su = 0.0;
    let mut sv = 0.0;
    let mut pw = 1.0;
    let mut last = f64::INFINITY;
    for k in 0..16 {
        let term = u[k] * pw;
        if term.abs() > last {
            break;
        }
        last = term.abs();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        su += sign * term;
        sv += sign * v[k] * pw;
        pw /= zeta;
    }
    let pre = (-zeta).exp() / (2.0 * std::f64::consts::PI.sqrt());
    (pre / x.powf(0.25) * su, -pre * x.powf(0.25) * sv)
}

/// Scaled Ai asymptotic series: returns (A, zeta) with Ai(z) = A e^{-zeta},
/// so products of several Airy factors can combine exponents before
/// exponentiating. Valid for large |z| away from the negative axis.
pub(crate) fn ai_asym_scaled(z: Complex64) -> (Complex64, Complex64) {
    let u = u_coefficients();
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let mut s = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 0..16 {
        let term = u[k] * pw;
        if term.norm() > last {
            break;
        }
        last = term.norm();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * term;
        pw /= zeta;
    }
    (s / (2.0 * std::f64::consts::PI.sqrt() * z.powf(0.25)), zeta)
}

/// Ai asymptotic series at complex argument, valid for |arg z| < 2 pi / 3.
pub(crate) fn ai_asym_c(z: Complex64) -> Complex64 {
    let (a, zeta) = ai_asym_scaled(z);
    a * (-zeta).exp()
}

/// Ai' asymptotic series at complex argument, valid for |arg z| < 2 pi / 3.
pub(crate) fn aip_asym_c(z: Complex64) -> Complex64 {
    let v = v_coefficients();
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let mut s = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 0..16 {
        let term = v[k] * pw;
        if term.norm() > last {
            break;
        }
        last = term.norm();
        let sign = if k % 2 == 0 { 1.0 } else { -1.0 };
        s += sign * term;
        pw /= zeta;
    }
    -(-zeta).exp() * z.powf(0.25) / (2.0 * std::f64::consts::PI.sqrt()) * s
}

/// Scaled series for W(z) = int_z^inf Ai: returns (A, zeta) with
/// W(z) = A e^{-zeta}.
pub(crate) fn w_asym_scaled(z: Complex64) -> (Complex64, Complex64) {
    let f = f_coefficients();
    let zeta = 2.0 / 3.0 * z.powf(1.5);
    let mut s = Complex64::new(0.0, 0.0);
    let mut pw = Complex64::new(1.0, 0.0);
    let mut last = f64::INFINITY;
    for k in 0..12 {
        let term = f[k] * pw;
        if term.norm() > last {
            break;
        }
        last = term.norm();
        s += term;
        pw /= zeta;
    }
    (z.powf(-0.75) * s, zeta)
}

/// W(z) = int_z^inf Ai by its asymptotic series, valid for |arg z| < 2 pi / 3.
pub(crate) fn w_asym_c(z: Complex64) -> Complex64 {
    let (a, zeta) = w_asym_scaled(z);
    a * (-zeta).exp()
}

fn w_series_real(x: f64) -> f64 {
    w_asym_c(Complex64::new(x, 0.0)).re
}

/// Ai and Ai' on the far negative axis via the connection formula
/// Ai(-z) = 2 Re[e^{i pi/3} Ai(z e^{i pi/3})].
fn rotated_negative(z: f64) -> (f64, f64) {
    let rot = Complex64::from_polar(z, std::f64::consts::FRAC_PI_3);
    let phase1 = Complex64::from_polar(1.0, std::f64::consts::FRAC_PI_3);
    let phase2 = Complex64::from_polar(1.0, 2.0 * std::f64::consts::FRAC_PI_3);
    let a = 2.0 * (phase1 * ai_asym_c(rot)).re;
    let ap = -2.0 * (phase2 * aip_asym_c(rot)).re;
    (a, ap)
}

/// One node of the marching table: Taylor coefficients of Ai about x0
/// plus the antiderivative value at x0.
struct TableNode {
    x0: f64,
    c: [f64; TAYLOR_ORDER + 1],
    p0: f64,
}

impl TableNode {
    /// Coefficients from (Ai, Ai') at x0 via (k+2)(k+1) c_{k+2} = x0 c_k + c_{k-1}.
    fn build(x0: f64, ai0: f64, aip0: f64, p0: f64) -> Self {
        let mut c = [0.0; TAYLOR_ORDER + 1];
        c[0] = ai0;
        c[1] = aip0;
        for k in 0..=TAYLOR_ORDER - 2 {
            let prev = if k == 0 { 0.0 } else { c[k - 1] };
            c[k + 2] = (x0 * c[k] + prev) / (((k + 2) * (k + 1)) as f64);
        }
        Self { x0, c, p0 }
    }

    fn eval_ai(&self, x: f64) -> f64 {
        let d = x - self.x0;
        let mut s = 0.0;
        for k in (0..=TAYLOR_ORDER).rev() {
            s = s * d + self.c[k];
        }
        s
    }

    fn eval_ai_prime(&self, x: f64) -> f64 {
        let d = x - self.x0;
        let mut s = 0.0;
        for k in (1..=TAYLOR_ORDER).rev() {
            s = s * d + k as f64 * self.c[k];
        }
        s
    }

    fn eval_antiderivative(&self, x: f64) -> f64 {
        let d = x - self.x0;
        let mut s = 0.0;
        for k in (0..=TAYLOR_ORDER).rev() {
            s = s * d + self.c[k] / (k + 1) as f64;
        }
        self.p0 + s * d
    }
}

struct MarchingTable {
    nodes: Vec<TableNode>,
}

impl MarchingTable {
    fn nearest(&self, x: f64) -> &TableNode {
        let idx = ((-SERIES_MAX - x) / TABLE_STEP).round() as usize;
        &self.nodes[idx.min(self.nodes.len() - 1)]
    }
}

fn table() -> &'static MarchingTable {
    static TABLE: OnceLock<MarchingTable> = OnceLock::new();
    TABLE.get_or_init(|| {
        let (mut a, mut ap) = maclaurin(-SERIES_MAX);
        // seed the antiderivative: P(-5.5) = 1 - int_{-5.5}^8 Ai - W(8)
        let rule = GaussLegendre::new(20);
        let tail = rule.integrate_panels(-SERIES_MAX, 8.0, 27, |x| {
            if x <= SERIES_MAX {
                maclaurin(x).0
            } else {
                asymptotic_positive(x).0
            }
        }) + w_series_real(8.0);
        let mut p = 1.0 - tail;
        let count = ((-TABLE_MIN - SERIES_MAX) / TABLE_STEP).round() as usize + 1;
        let mut nodes = Vec::with_capacity(count);
        for i in 0..count {
            let x0 = -SERIES_MAX - i as f64 * TABLE_STEP;
            let node = TableNode::build(x0, a, ap, p);
            let next = x0 - TABLE_STEP;
            a = node.eval_ai(next);
            ap = node.eval_ai_prime(next);
            p = node.eval_antiderivative(next);
            nodes.push(node);
        }
        MarchingTable { nodes }
    })
}
