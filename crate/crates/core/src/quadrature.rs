//! Adaptive Gauss-Kronrod quadrature on finite intervals.
//!
//! A 7-point Gauss / 15-point Kronrod pair is applied per interval; the
//! interval with the largest error estimate is bisected until the summed
//! error meets the tolerance. Endpoints are never evaluated (all Kronrod
//! abscissae are interior), so integrands only need a removable-singularity
//! value at interval ends.

use thiserror::Error;
use std::cmp::Ordering;
use std::collections::BinaryHeap;

/// Kronrod abscissae for the G7-K15 pair (positive half, descending).
const XGK: [f64; 8] = [
    0.991455371120812639206854697526329,
    0.949107912342758524526189684047851,
    0.864864423359769072789712788640926,
    0.741531185599394439863864773280788,
    0.586087235467691130294144838258730,
    0.405845151377397166906606412076961,
    0.207784955007898467600689403773245,
    0.000000000000000000000000000000000,
];

/// Kronrod weights matching `XGK`.
const WGK: [f64; 8] = [
    0.022935322010529224963732008058970,
    0.063092092629978553290700663189204,
    0.104790010322250183839876322541518,
    0.140653259715525918745189590510238,
    0.169004726639267902826583426598550,
    0.190350578064785409913256402421014,
    0.204432940075298892414161999234649,
    0.209482141084727828012999174891714,
];

/// Gauss weights for the embedded 7-point rule (odd-index abscissae).
const WG: [f64; 4] = [
    0.129484966168869693270611432679082,
    0.279705391489276667901467771423780,
    0.381830050505118944950369775488975,
    0.417959183673469387755102040816327,
];

/// Error-control settings for the interface-constant quadratures.
///
/// `t_min` and `t_max` partition the semi-infinite integration range: a
/// series expansion is used on `(0, t_min]`, adaptive quadrature on
/// `[t_min, t_max]`, and the tail beyond `t_max` is either bounded
/// analytically or folded back by the substitution `u = 1/t`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct QuadratureSettings {
    pub abs_tol: f64,
    pub rel_tol: f64,
    pub t_min: f64,
    pub t_max: f64,
    pub max_subdivisions: usize,
}

impl Default for QuadratureSettings {
    fn default() -> Self {
        QuadratureSettings {
            abs_tol: 1e-15,
            rel_tol: 1e-10,
            t_min: 1e-4,
            t_max: 200.0,
            max_subdivisions: 1_000_000,
        }
    }
}

impl QuadratureSettings {
    pub fn validate(&self) -> Result<(), QuadratureError> {
        let ok = self.abs_tol > 0.0
            && self.rel_tol > 0.0
            && self.t_min > 0.0
            && self.t_min < 1.0
            && self.t_max > 1.0
            && self.max_subdivisions > 0;
        if ok {
            Ok(())
        } else {
            Err(QuadratureError::InvalidSettings(*self))
        }
    }
}

#[derive(Debug, Error)]
pub enum QuadratureError {
    #[error("invalid quadrature settings: {0:?} (need 0 < t_min < 1 < t_max, tolerances > 0)")]
    InvalidSettings(QuadratureSettings),
    #[error("adaptive quadrature did not converge within {subdivisions} subdivisions: partial value {partial}, achieved error {achieved_error}")]
    NonConvergence {
        partial: f64,
        achieved_error: f64,
        subdivisions: usize,
    },
}

/// Integral estimate with its error bound.
#[derive(Debug, Clone, Copy)]
pub struct QuadResult {
    pub value: f64,
    pub error: f64,
    pub evaluations: usize,
}

/// One G7-K15 application on `[a, b]`.
fn gk15<F: Fn(f64) -> f64>(f: &F, a: f64, b: f64) -> (f64, f64) {
    let center = 0.5 * (a + b);
    let half = 0.5 * (b - a);

    let fc = f(center);
    let mut kronrod = fc * WGK[7];
    let mut gauss = fc * WG[3];
    let mut res_abs = kronrod.abs();
    let mut samples = [0.0f64; 15];
    samples[7] = fc;

    for j in 0..7 {
        let dx = half * XGK[j];
        let f1 = f(center - dx);
        let f2 = f(center + dx);
        samples[j] = f1;
        samples[14 - j] = f2;
        kronrod += WGK[j] * (f1 + f2);
        res_abs += WGK[j] * (f1.abs() + f2.abs());
        if j % 2 == 1 {
            gauss += WG[j / 2] * (f1 + f2);
        }
    }

    // QUADPACK-style rescaled error estimate
    let mean = kronrod * 0.5;
    let mut res_asc = WGK[7] * (fc - mean).abs();
    for j in 0..7 {
        res_asc += WGK[j] * ((samples[j] - mean).abs() + (samples[14 - j] - mean).abs());
    }
    res_asc *= half.abs();
    let res_abs_scaled = res_abs * half.abs();

    let raw_err = ((kronrod - gauss) * half).abs();
    let mut err = raw_err;
    if res_asc != 0.0 && err != 0.0 {
        let scale = (200.0 * err / res_asc).powf(1.5);
        err = if scale < 1.0 { res_asc * scale } else { res_asc };
    }
    if res_abs_scaled > f64::MIN_POSITIVE / (50.0 * f64::EPSILON) {
        err = err.max(50.0 * f64::EPSILON * res_abs_scaled);
    }

    (kronrod * half, err)
}

#[derive(Debug)]
struct Interval {
    a: f64,
    b: f64,
    value: f64,
    error: f64,
}

impl PartialEq for Interval {
    fn eq(&self, other: &Self) -> bool {
        self.error == other.error
    }
}
impl Eq for Interval {}
impl PartialOrd for Interval {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Interval {
    fn cmp(&self, other: &Self) -> Ordering {
        self.error.partial_cmp(&other.error).unwrap_or(Ordering::Equal)
    }
}

/// Adaptively integrates `f` over the finite interval `[a, b]` to the
/// requested tolerance `max(abs_tol, rel_tol * |I|)`.
pub fn integrate<F: Fn(f64) -> f64>(
    f: F,
    a: f64,
    b: f64,
    abs_tol: f64,
    rel_tol: f64,
    max_subdivisions: usize,
) -> Result<QuadResult, QuadratureError> {
    if a == b {
        return Ok(QuadResult { value: 0.0, error: 0.0, evaluations: 0 });
    }

    let mut heap = BinaryHeap::new();
    let (v, e) = gk15(&f, a, b);
    heap.push(Interval { a, b, value: v, error: e });
    let mut total_value = v;
    let mut total_error = e;
    let mut evaluations = 15usize;

    for subdivisions in 0..max_subdivisions {
        let target = abs_tol.max(rel_tol * total_value.abs());
        if total_error <= target {
            return Ok(QuadResult { value: total_value, error: total_error, evaluations });
        }
        let worst = heap.pop().expect("heap is never empty here");
        let mid = 0.5 * (worst.a + worst.b);
        if mid <= worst.a || mid >= worst.b {
            // interval no longer splittable at f64 resolution
            heap.push(worst);
            let achieved = total_error;
            return Err(QuadratureError::NonConvergence {
                partial: total_value,
                achieved_error: achieved,
                subdivisions,
            });
        }
        let (v1, e1) = gk15(&f, worst.a, mid);
        let (v2, e2) = gk15(&f, mid, worst.b);
        evaluations += 30;
        total_value += v1 + v2 - worst.value;
        total_error += e1 + e2 - worst.error;
        heap.push(Interval { a: worst.a, b: mid, value: v1, error: e1 });
        heap.push(Interval { a: mid, b: worst.b, value: v2, error: e2 });
    }

    let target = abs_tol.max(rel_tol * total_value.abs());
    if total_error <= target {
        Ok(QuadResult { value: total_value, error: total_error, evaluations })
    } else {
        Err(QuadratureError::NonConvergence {
            partial: total_value,
            achieved_error: total_error,
            subdivisions: max_subdivisions,
        })
    }
}
