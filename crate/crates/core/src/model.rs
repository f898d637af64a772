//! Physical input types and the closed-form derived constants.
//!
//! Conventions used throughout the crate:
//!
//! * material 1 is the upper layer, material 2 the lower layer;
//! * `H1`, `H2` are the *unscaled* half-thicknesses, the physical layer
//!   thicknesses are `ε·H1` and `ε·H2`;
//! * the elementary cell is `x ∈ [-a/2, a/2]` with the crack centred on the
//!   interface, tips at `x_A = -l/2` and `x_B = +l/2`;
//! * segment speeds: `d2 = c1` (beam above the crack), `d3 = c2` (beam
//!   below), `d1 = d4` is the effective speed of the bonded regions.

use thiserror::Error;

/// Homogeneous isotropic material under anti-plane shear.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct Material {
    /// Shear modulus μ in N·m⁻².
    pub shear_modulus: f64,
    /// Mass density ρ in kg·m⁻³.
    pub density: f64,
}

impl Material {
    pub fn new(shear_modulus: f64, density: f64) -> Self {
        Material { shear_modulus, density }
    }

    /// Shear wave speed `c = sqrt(μ/ρ)`.
    pub fn wavespeed(&self) -> f64 {
        (self.shear_modulus / self.density).sqrt()
    }
}

/// Full physical description of the cracked bi-material strip.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct StripConfig {
    /// Upper layer (material 1).
    pub upper: Material,
    /// Lower layer (material 2).
    pub lower: Material,
    /// Unscaled half-thickness H1 of the upper layer (m).
    pub h1: f64,
    /// Unscaled half-thickness H2 of the lower layer (m).
    pub h2: f64,
    /// Thinness parameter ε; physical thicknesses are ε·H1, ε·H2.
    pub epsilon: f64,
    /// Cell length a (m).
    pub cell_length: f64,
    /// Crack length l (m), 0 < l < a.
    pub crack_length: f64,
    /// Interface imperfection parameter κ (m³·N⁻¹); the displacement jump
    /// across the bonded interface is `ε·κ·σ_yz`. κ = 0 is a perfect bond.
    pub kappa: f64,
}

/// Bond type between the cracks. Selects which interface constant (α_P or
/// α_I) enters the first-order junction conditions.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum InterfaceKind {
    Perfect,
    Imperfect,
}

impl StripConfig {
    /// The problem is singularly perturbed in κ: any strictly positive κ is
    /// an imperfect interface, however small.
    pub fn interface_kind(&self) -> InterfaceKind {
        if self.kappa == 0.0 {
            InterfaceKind::Perfect
        } else {
            InterfaceKind::Imperfect
        }
    }

    /// μ1·H1 + μ2·H2, the flux weight of the bonded cross-section.
    pub fn flux_weight_sum(&self) -> f64 {
        self.upper.shear_modulus * self.h1 + self.lower.shear_modulus * self.h2
    }
}

/// One violated invariant of a [`StripConfig`].
#[derive(Debug, Clone, PartialEq)]
pub struct Violation {
    pub field: &'static str,
    pub constraint: &'static str,
    pub actual: f64,
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{}: requires {}, got {}", self.field, self.constraint, self.actual)
    }
}

#[derive(Debug, Error)]
pub enum ModelError {
    #[error("invalid strip configuration: {}", format_violations(.0))]
    Invalid(Vec<Violation>),
}

fn format_violations(vs: &[Violation]) -> String {
    vs.iter().map(|v| v.to_string()).collect::<Vec<_>>().join("; ")
}

/// Checks every invariant of `cfg` and reports all violations. Empty result
/// means the configuration is admissible.
pub fn validate_config(cfg: &StripConfig) -> Vec<Violation> {
    let mut out = Vec::new();
    let mut check = |ok: bool, field: &'static str, constraint: &'static str, actual: f64| {
        if !ok {
            out.push(Violation { field, constraint, actual });
        }
    };
    check(
        cfg.upper.shear_modulus > 0.0 && cfg.upper.shear_modulus.is_finite(),
        "upper.shear_modulus",
        "> 0",
        cfg.upper.shear_modulus,
    );
    check(
        cfg.upper.density > 0.0 && cfg.upper.density.is_finite(),
        "upper.density",
        "> 0",
        cfg.upper.density,
    );
    check(
        cfg.lower.shear_modulus > 0.0 && cfg.lower.shear_modulus.is_finite(),
        "lower.shear_modulus",
        "> 0",
        cfg.lower.shear_modulus,
    );
    check(
        cfg.lower.density > 0.0 && cfg.lower.density.is_finite(),
        "lower.density",
        "> 0",
        cfg.lower.density,
    );
    check(cfg.h1 > 0.0 && cfg.h1.is_finite(), "h1", "> 0", cfg.h1);
    check(cfg.h2 > 0.0 && cfg.h2.is_finite(), "h2", "> 0", cfg.h2);
    check(cfg.epsilon > 0.0 && cfg.epsilon.is_finite(), "epsilon", "> 0", cfg.epsilon);
    check(
        cfg.cell_length > 0.0 && cfg.cell_length.is_finite(),
        "cell_length",
        "> 0",
        cfg.cell_length,
    );
    check(
        cfg.crack_length > 0.0 && cfg.crack_length.is_finite(),
        "crack_length",
        "> 0",
        cfg.crack_length,
    );
    if cfg.crack_length > 0.0 && cfg.cell_length > 0.0 {
        check(
            cfg.crack_length < cfg.cell_length,
            "crack_length",
            "< cell_length",
            cfg.crack_length,
        );
    }
    check(cfg.kappa >= 0.0 && cfg.kappa.is_finite(), "kappa", ">= 0", cfg.kappa);
    out
}

/// Everything downstream of the raw configuration: wave speeds, segment
/// speeds, contrast parameters and crack-tip coordinates.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct DerivedConstants {
    /// Wave speed of the upper material (m·s⁻¹).
    pub c1: f64,
    /// Wave speed of the lower material (m·s⁻¹).
    pub c2: f64,
    /// Effective speed of the bonded bi-material regions,
    /// `d1 = c1 c2 sqrt((μ1H1 + μ2H2) / (μ1H1 c2² + μ2H2 c1²))`.
    pub d1: f64,
    /// Speed of segment 2 (upper beam over the crack), equals `c1`.
    pub d2: f64,
    /// Speed of segment 3 (lower beam), equals `c2`.
    pub d3: f64,
    /// Speed of segment 4 (bonded region right of the crack), equals `d1`.
    pub d4: f64,
    /// Shear-modulus contrast `μ* = (μ1 - μ2)/(μ1 + μ2)`.
    pub mu_star: f64,
    /// Thickness contrast `H* = (H1 - H2)/(H1 + H2)`.
    pub h_star: f64,
    /// Normalised imperfection `κ* = κ(μ1 + μ2)/(H1 + H2)`; zero for a
    /// perfect bond.
    pub kappa_star: f64,
    /// Imperfect-interface decay parameter
    /// `λ* = (H1 + H2) sqrt((μ1H1 + μ2H2)/(μ1 μ2 H1 H2 κ))`; infinite for a
    /// perfect bond.
    pub lambda_star: f64,
    /// Left crack tip, `x_A = -l/2`.
    pub x_a: f64,
    /// Right crack tip, `x_B = +l/2`.
    pub x_b: f64,
    /// Total unscaled thickness H1 + H2 (m).
    pub h_sum: f64,
    /// Flux fraction of the upper layer, μ1H1/(μ1H1 + μ2H2).
    pub w1: f64,
    /// Flux fraction of the lower layer, μ2H2/(μ1H1 + μ2H2).
    pub w2: f64,
    /// Cell length a (m), carried along for the matching matrices.
    pub cell_length: f64,
}

impl DerivedConstants {
    /// Segment speed d_m for m = 1..4.
    pub fn segment_speed(&self, m: usize) -> f64 {
        match m {
            1 => self.d1,
            2 => self.d2,
            3 => self.d3,
            4 => self.d4,
            _ => panic!("segment index {m} out of range 1..=4"),
        }
    }
}

/// Evaluates all derived constants. Fails if the configuration violates any
/// invariant; the error names every offending field.
pub fn derive_constants(cfg: &StripConfig) -> Result<DerivedConstants, ModelError> {
    let violations = validate_config(cfg);
    if !violations.is_empty() {
        return Err(ModelError::Invalid(violations));
    }

    let (mu1, mu2) = (cfg.upper.shear_modulus, cfg.lower.shear_modulus);
    let (h1, h2) = (cfg.h1, cfg.h2);
    let c1 = cfg.upper.wavespeed();
    let c2 = cfg.lower.wavespeed();

    let num = mu1 * h1 + mu2 * h2;
    let d1 = c1 * c2 * (num / (mu1 * h1 * c2 * c2 + mu2 * h2 * c1 * c1)).sqrt();

    let mu_star = (mu1 - mu2) / (mu1 + mu2);
    let h_star = (h1 - h2) / (h1 + h2);

    let (kappa_star, lambda_star) = if cfg.kappa > 0.0 {
        let ks = cfg.kappa * (mu1 + mu2) / (h1 + h2);
        let ls = (h1 + h2) * (num / (mu1 * mu2 * h1 * h2 * cfg.kappa)).sqrt();
        (ks, ls)
    } else {
        (0.0, f64::INFINITY)
    };

    Ok(DerivedConstants {
        c1,
        c2,
        d1,
        d2: c1,
        d3: c2,
        d4: d1,
        mu_star,
        h_star,
        kappa_star,
        lambda_star,
        x_a: -cfg.crack_length / 2.0,
        x_b: cfg.crack_length / 2.0,
        h_sum: h1 + h2,
        w1: mu1 * h1 / num,
        w2: mu2 * h2 / num,
        cell_length: cfg.cell_length,
    })
}

/// Material table used by the bundled experiment configurations.
pub mod materials {
    use super::Material;

    pub const IRON: Material = Material { shear_modulus: 82e9, density: 7860.0 };
    pub const MAGNESIUM: Material = Material { shear_modulus: 17e9, density: 1738.0 };
    pub const ALUMINIUM: Material = Material { shear_modulus: 26e9, density: 2700.0 };
    pub const EPOXY_RESIN: Material = Material { shear_modulus: 2.5e9, density: 1850.0 };
}

#[cfg(test)]
mod tests {
    use super::*;
    use approx::assert_relative_eq;

    fn iron_symmetric() -> StripConfig {
        StripConfig {
            upper: materials::IRON,
            lower: materials::IRON,
            h1: 3.0,
            h2: 3.0,
            epsilon: 0.025,
            cell_length: 6.0,
            crack_length: 2.0,
            kappa: 0.0,
        }
    }

    fn fe_al(kappa: f64) -> StripConfig {
        StripConfig {
            upper: materials::ALUMINIUM,
            lower: materials::IRON,
            h1: 3.0,
            h2: 3.0,
            epsilon: 0.025,
            cell_length: 6.0,
            crack_length: 2.0,
            kappa,
        }
    }

    #[test]
    fn iron_wavespeed_matches_tabulated_value() {
        // 3230 m/s to three significant figures
        let c = materials::IRON.wavespeed();
        assert!((c - 3230.0).abs() < 0.5, "c = {c}");
        assert_relative_eq!(c, 3229.948912065748, max_relative = 1e-12);
    }

    #[test]
    fn symmetric_config_collapses_contrast() {
        let dc = derive_constants(&iron_symmetric()).unwrap();
        assert_eq!(dc.mu_star, 0.0);
        assert_eq!(dc.h_star, 0.0);
        assert_relative_eq!(dc.d1, dc.c1, max_relative = 1e-14);
        assert_relative_eq!(dc.d1, dc.c2, max_relative = 1e-14);
        assert_eq!(dc.d4, dc.d1);
        assert_eq!(dc.kappa_star, 0.0);
        assert!(dc.lambda_star.is_infinite());
    }

    #[test]
    fn fe_al_effective_speed_regression() {
        // Frozen from a 30-digit evaluation of the d1 closed form.
        let dc = derive_constants(&fe_al(0.0)).unwrap();
        assert_relative_eq!(dc.d1, 3198.0107453341565, max_relative = 1e-13);
        assert!(dc.d1 > dc.c1.min(dc.c2) && dc.d1 < dc.c1.max(dc.c2));
    }

    #[test]
    fn kappa_star_and_lambda_star_regression() {
        let dc = derive_constants(&fe_al(1.6e-10)).unwrap();
        assert_relative_eq!(dc.kappa_star, 2.88, max_relative = 1e-12);
        assert_relative_eq!(dc.lambda_star, 1.9491663682089449, max_relative = 1e-12);
    }

    #[test]
    fn tip_coordinates_are_symmetric() {
        let dc = derive_constants(&iron_symmetric()).unwrap();
        assert_eq!(dc.x_b, 1.0);
        assert_eq!(dc.x_a, -dc.x_b);
    }

    #[test]
    fn interface_kind_is_singularly_perturbed() {
        assert_eq!(fe_al(0.0).interface_kind(), InterfaceKind::Perfect);
        // no silent switch to Perfect for tiny kappa
        assert_eq!(fe_al(1e-300).interface_kind(), InterfaceKind::Imperfect);
    }

    #[test]
    fn validate_reports_each_violation() {
        let valid = fe_al(0.0);
        assert!(validate_config(&valid).is_empty());

        let mut bad = valid;
        bad.crack_length = bad.cell_length;
        let vs = validate_config(&bad);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].field, "crack_length");
        assert_eq!(vs[0].constraint, "< cell_length");

        let mut bad = valid;
        bad.kappa = -1.0;
        let vs = validate_config(&bad);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].field, "kappa");

        let mut bad = valid;
        bad.upper.shear_modulus = 0.0;
        let vs = validate_config(&bad);
        assert_eq!(vs.len(), 1);
        assert_eq!(vs[0].field, "upper.shear_modulus");
    }

    #[test]
    fn derive_rejects_invalid_configs() {
        let mut bad = fe_al(0.0);
        bad.crack_length = 7.0;
        let err = derive_constants(&bad).unwrap_err();
        assert!(err.to_string().contains("crack_length"));
    }

    #[test]
    fn swapping_layers_negates_contrast_and_keeps_d1() {
        let cfg = StripConfig {
            upper: materials::ALUMINIUM,
            lower: materials::MAGNESIUM,
            h1: 0.4,
            h2: 5.6,
            epsilon: 0.025,
            cell_length: 6.0,
            crack_length: 2.0,
            kappa: 0.0,
        };
        let swapped = StripConfig { upper: cfg.lower, lower: cfg.upper, h1: cfg.h2, h2: cfg.h1, ..cfg };
        let a = derive_constants(&cfg).unwrap();
        let b = derive_constants(&swapped).unwrap();
        assert_relative_eq!(a.mu_star, -b.mu_star, max_relative = 1e-14);
        assert_relative_eq!(a.h_star, -b.h_star, max_relative = 1e-14);
        assert_relative_eq!(a.d1, b.d1, max_relative = 1e-14);
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn admissible() -> impl Strategy<Value = StripConfig> {
            (
                1e8..1e12f64,
                1e2..2e4f64,
                1e8..1e12f64,
                1e2..2e4f64,
                0.1..10.0f64,
                0.1..10.0f64,
                0.05..0.95f64,
            )
                .prop_map(|(mu1, rho1, mu2, rho2, h1, h2, frac)| StripConfig {
                    upper: Material::new(mu1, rho1),
                    lower: Material::new(mu2, rho2),
                    h1,
                    h2,
                    epsilon: 0.025,
                    cell_length: 6.0,
                    crack_length: 6.0 * frac,
                    kappa: 0.0,
                })
        }

        proptest! {
            #[test]
            fn scaling_both_moduli_leaves_contrast_and_speed_ratios(cfg in admissible(), lambda in 0.1..10.0f64) {
                let mut scaled = cfg;
                scaled.upper.shear_modulus *= lambda;
                scaled.lower.shear_modulus *= lambda;
                let a = derive_constants(&cfg).unwrap();
                let b = derive_constants(&scaled).unwrap();
                prop_assert!((a.mu_star - b.mu_star).abs() <= 1e-12 * (1.0 + a.mu_star.abs()));
                prop_assert!((a.h_star - b.h_star).abs() == 0.0);
                for m in 1..=4 {
                    let ra = a.segment_speed(m) / a.d1;
                    let rb = b.segment_speed(m) / b.d1;
                    prop_assert!((ra - rb).abs() <= 1e-12 * ra.abs());
                }
            }

            #[test]
            fn d1_lies_between_the_wavespeeds(cfg in admissible()) {
                let dc = derive_constants(&cfg).unwrap();
                let lo = dc.c1.min(dc.c2) * (1.0 - 1e-12);
                let hi = dc.c1.max(dc.c2) * (1.0 + 1e-12);
                prop_assert!(dc.d1 >= lo && dc.d1 <= hi);
                prop_assert!(dc.mu_star.abs() < 1.0);
                prop_assert!(dc.h_star.abs() < 1.0);
            }
        }
    }
}
