//! The interface constants α_P (perfect bond) and α_I (imperfect bond).
//!
//! Both constants are defined through improper integrals over boundary-layer
//! data and enter the first-order junction conditions with the derivative
//! jump of the zero-order mode at each crack tip:
//!
//! ```text
//! α_P = (H1+H2)/π · { μ* ∫₀^∞ f(t) dt − ln[((1+H*)/2)^((1+H*)/2) ((1−H*)/2)^((1−H*)/2)] }
//! α_I = (H1+H2)   · { 1/π ∫₀^∞ ln g(t)/t² dt + 1/λ* }
//! ```
//!
//! The integrands are rewritten so that they can be evaluated without
//! cancellation at small `t` and without hyperbolic overflow at large `t`:
//!
//! * `f(t)` uses `H* − tanh(tH*)coth(t) = −H*·(u + w + uw)` with
//!   `u = tanh(x)/x − 1`, `w = t·coth(t) − 1`, both series-expanded near 0,
//!   and `1/sinh(t) = 2e⁻ᵗ/(1 − e⁻²ᵗ)`;
//! * `ln g(t)` uses `ln1p` of the exactly-cancelled numerator
//!   `k1/a1·w(a1 t) + k2/a2·w(a2 t)` over `λ*² + t²`, where the identity
//!   `k1/a1 + k2/a2 = λ*²` removes the coth poles at `t = 0`.
//!
//! The `f`-integral is truncated at `t_max` with an exponential tail bound;
//! the `g`-integral tail is folded back exactly via `u = 1/t`, so its only
//! error sources are the quadrature itself and the small-`t` series.

use crate::model::{DerivedConstants, InterfaceKind};
use crate::quadrature::{integrate, QuadratureError, QuadratureSettings};
use thiserror::Error;

/// An interface constant with its accumulated error bound.
#[derive(Debug, Clone, Copy)]
pub struct AlphaResult {
    /// α_P or α_I, in metres.
    pub value: f64,
    /// Quadrature + series + truncation error bound (m).
    pub estimated_error: f64,
    pub kind: InterfaceKind,
}

#[derive(Debug, Error)]
pub enum InterfaceError {
    #[error("operation requires a {expected:?} interface (kappa_star = {kappa_star})")]
    WrongKind { expected: InterfaceKind, kappa_star: f64 },
    #[error(transparent)]
    Quadrature(#[from] QuadratureError),
}

/// `x·coth(x) − 1`, accurate for all `x ≥ 0`.
fn x_coth_x_minus_1(x: f64) -> f64 {
    let x2 = x * x;
    if x.abs() < 0.1 {
        x2 / 3.0 - x2 * x2 / 45.0 + 2.0 * x2 * x2 * x2 / 945.0 - x2 * x2 * x2 * x2 / 4725.0
    } else {
        x / x.tanh() - 1.0
    }
}

/// `tanh(x)/x − 1`, accurate for all `x` (even, −1 < result ≤ 0).
fn tanh_x_over_x_minus_1(x: f64) -> f64 {
    if x == 0.0 {
        return 0.0;
    }
    let x2 = x * x;
    if x.abs() < 0.1 {
        -x2 / 3.0 + 2.0 * x2 * x2 / 15.0 - 17.0 * x2 * x2 * x2 / 315.0
            + 62.0 * x2 * x2 * x2 * x2 / 2835.0
    } else {
        x.tanh() / x - 1.0
    }
}

/// `ln(sinh(y))` for `y > 0` without overflow.
fn ln_sinh(y: f64) -> f64 {
    if y < 30.0 {
        y.sinh().ln()
    } else {
        y + (-(-2.0 * y).exp()).ln_1p() - std::f64::consts::LN_2
    }
}

/// The α_P integrand
/// `f(t) = (H* − tanh(tH*)coth(t)) / ((sinh(t) + μ* sinh(tH*)) t)`,
/// stabilised; `f(0)` returns the analytic limit `−H*(1−H*²)/(3(1+μ*H*))`.
pub fn perfect_integrand(consts: &DerivedConstants, t: f64) -> f64 {
    let hs = consts.h_star;
    let ms = consts.mu_star;
    if t == 0.0 {
        return -hs * (1.0 - hs * hs) / (3.0 * (1.0 + ms * hs));
    }
    let x = t * hs;
    let u = tanh_x_over_x_minus_1(x);
    let w = x_coth_x_minus_1(t);
    let num = -hs * (u + w + u * w);
    // sinh(tH*)/sinh(t), |H*| < 1 so the ratio decays for large t
    let ratio = if x == 0.0 {
        0.0
    } else if t < 30.0 {
        x.sinh() / t.sinh()
    } else {
        x.signum() * (ln_sinh(x.abs()) - ln_sinh(t)).exp()
    };
    let inv_sinh_t = 2.0 * (-t).exp() / (-(-2.0 * t).exp_m1());
    num * inv_sinh_t / (t * (1.0 + ms * ratio))
}

/// `x·ln(x)` with the limit value 0 at `x = 0`.
fn x_ln_x(x: f64) -> f64 {
    if x == 0.0 {
        0.0
    } else {
        x * x.ln()
    }
}

/// Computes α_P for a perfect interface by adaptive quadrature of `f` on
/// `[t_min, t_max]`, a quadratic end-correction on `(0, t_min]` and an
/// exponential tail bound beyond `t_max`.
pub fn alpha_perfect(
    consts: &DerivedConstants,
    settings: &QuadratureSettings,
) -> Result<AlphaResult, InterfaceError> {
    settings.validate()?;
    let hs = consts.h_star;
    let ms = consts.mu_star;
    let scale = consts.h_sum / std::f64::consts::PI;

    // log term, symmetric in H* -> -H*
    let log_term = x_ln_x((1.0 + hs) / 2.0) + x_ln_x((1.0 - hs) / 2.0);

    let (integral, int_err) = if ms == 0.0 || hs == 0.0 {
        // f vanishes identically when H* = 0 and is scaled out when μ* = 0
        (0.0, 0.0)
    } else {
        let f = |t: f64| perfect_integrand(consts, t);
        let main = integrate(f, settings.t_min, settings.t_max, settings.abs_tol, settings.rel_tol, settings.max_subdivisions)?;
        // ∫0^tmin f ≈ f(0) t + c t³/3 with c estimated from f(t_min)
        let f0 = perfect_integrand(consts, 0.0);
        let ft = perfect_integrand(consts, settings.t_min);
        let head = f0 * settings.t_min + (ft - f0) * settings.t_min / 3.0;
        let head_err = (ft - f0).abs() * settings.t_min;
        // |f(t)| <= (1+|H*|) * 2 e^{-t} / (t (1 - e^{-2t}) (1 - |μ*| r̄));
        // beyond any t_max > 1 the ratio r̄ < 1, bound it by 1
        let tm = settings.t_max;
        let tail = (1.0 + hs.abs()) * 2.0 * (-tm).exp() / (tm * (1.0 - (-2.0 * tm).exp()) * (1.0 - ms.abs()));
        (main.value + head, main.error + head_err + tail)
    };

    let value = scale * (ms * integral - log_term);
    let estimated_error = scale * (ms.abs() * int_err + f64::EPSILON * log_term.abs());
    Ok(AlphaResult { value, estimated_error, kind: InterfaceKind::Perfect })
}

/// Coefficients of the α_I integrand for one configuration.
struct ImperfectTerms {
    k1: f64,
    a1: f64,
    k2: f64,
    a2: f64,
    /// `k1/a1 + k2/a2`, which equals λ*² exactly; using the summed form keeps
    /// the cancellation at t → 0 exact in floating point.
    lam_sq: f64,
}

impl ImperfectTerms {
    fn new(consts: &DerivedConstants) -> Option<Self> {
        if consts.kappa_star <= 0.0 || !consts.lambda_star.is_finite() {
            return None;
        }
        let ks = consts.kappa_star;
        let ms = consts.mu_star;
        let hs = consts.h_star;
        let k1 = 2.0 / (ks * (1.0 + ms));
        let a1 = (1.0 + hs) / 2.0;
        let k2 = 2.0 / (ks * (1.0 - ms));
        let a2 = (1.0 - hs) / 2.0;
        let lam_sq = k1 / a1 + k2 / a2;
        Some(ImperfectTerms { k1, a1, k2, a2, lam_sq })
    }

    /// `ln g(t)`, stable for every `t > 0`.
    fn ln_g(&self, t: f64) -> f64 {
        let num_minus_den = self.k1 / self.a1 * x_coth_x_minus_1(self.a1 * t)
            + self.k2 / self.a2 * x_coth_x_minus_1(self.a2 * t);
        let den = self.lam_sq + t * t;
        (num_minus_den / den).ln_1p()
    }

    /// `ln g(t)/t²` with its finite limit at `t = 0`.
    fn integrand(&self, t: f64) -> f64 {
        if t == 0.0 {
            let s1 = self.k1 * self.a1 + self.k2 * self.a2;
            return s1 / (3.0 * self.lam_sq);
        }
        self.ln_g(t) / (t * t)
    }
}

/// `g(t)` itself, for inspection and tests; `g(0)` returns the limit 1.
pub fn imperfect_g(consts: &DerivedConstants, t: f64) -> Option<f64> {
    let terms = ImperfectTerms::new(consts)?;
    Some(terms.ln_g(t).exp())
}

/// The α_I integrand `ln g(t)/t²` (finite at `t = 0`).
pub fn imperfect_integrand(consts: &DerivedConstants, t: f64) -> Option<f64> {
    ImperfectTerms::new(consts).map(|terms| terms.integrand(t))
}

/// Computes α_I for an imperfect interface (κ > 0). The range splits into
/// a series piece on `(0, t_min]`, adaptive quadrature on `[t_min, t_max]`
/// and the exactly-folded tail `∫₀^{1/t_max} ln g(1/u) du`.
pub fn alpha_imperfect(
    consts: &DerivedConstants,
    settings: &QuadratureSettings,
) -> Result<AlphaResult, InterfaceError> {
    settings.validate()?;
    let terms = ImperfectTerms::new(consts).ok_or(InterfaceError::WrongKind {
        expected: InterfaceKind::Imperfect,
        kappa_star: consts.kappa_star,
    })?;

    // series on (0, t_min]: ln g/t² = A0 + A2 t² + O(t⁴)
    let s1 = terms.k1 * terms.a1 + terms.k2 * terms.a2;
    let s3 = terms.k1 * terms.a1.powi(3) + terms.k2 * terms.a2.powi(3);
    let l2 = terms.lam_sq;
    let a0 = s1 / (3.0 * l2);
    let a2 = -s3 / (45.0 * l2) - s1 / (3.0 * l2 * l2) - s1 * s1 / (18.0 * l2 * l2);
    let tm = settings.t_min;
    let head = a0 * tm + a2 * tm.powi(3) / 3.0;
    let head_err = a2.abs() * tm.powi(5);

    let main = integrate(
        |t| terms.integrand(t),
        settings.t_min,
        settings.t_max,
        settings.abs_tol,
        settings.rel_tol,
        settings.max_subdivisions,
    )?;

    let tail = integrate(
        |u| if u == 0.0 { 0.0 } else { terms.ln_g(1.0 / u) },
        0.0,
        1.0 / settings.t_max,
        settings.abs_tol,
        settings.rel_tol,
        settings.max_subdivisions,
    )?;

    let integral = head + main.value + tail.value;
    let int_err = head_err + main.error + tail.error;

    let value = consts.h_sum * (integral / std::f64::consts::PI + 1.0 / consts.lambda_star);
    let estimated_error = consts.h_sum * int_err / std::f64::consts::PI;
    Ok(AlphaResult { value, estimated_error, kind: InterfaceKind::Imperfect })
}

/// Dispatches to [`alpha_perfect`] or [`alpha_imperfect`] by interface kind.
pub fn alpha_for(
    kind: InterfaceKind,
    consts: &DerivedConstants,
    settings: &QuadratureSettings,
) -> Result<AlphaResult, InterfaceError> {
    match kind {
        InterfaceKind::Perfect => alpha_perfect(consts, settings),
        InterfaceKind::Imperfect => alpha_imperfect(consts, settings),
    }
}
