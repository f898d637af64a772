//! Anti-plane shear waves in a thin periodic bi-material strip with
//! interfacial cracks.
//!
//! The strip consists of two bonded layers (shear moduli `μ1`, `μ2`,
//! thicknesses `εH1`, `εH2`) with a periodic array of cracks of length `l`
//! lying on the interface, one crack per cell of length `a`. Between the
//! cracks the bond is either perfect (continuous displacement) or imperfect
//! (displacement jump proportional to traction, parameter `κ`). The crate
//! computes
//!
//! * dispersion branches `ω0(K)` of the one-dimensional reduced model, as
//!   roots of the determinant of an 8×8 matching matrix ([`zero_order`]),
//! * the first-order correction `ω1²` to the squared eigenfrequency from
//!   the solvability condition of the singular first-order system
//!   ([`first_order`]), with the interface constants `α_P`/`α_I` obtained by
//!   quadrature of improper integrals ([`interface_constants`]),
//! * a reference spectrum from a 2D finite-difference eigensolver on the
//!   full cell ([`fd_oracle`]) used to measure the accuracy of both the
//!   uncorrected and corrected frequencies.
//!
//! The `bistrip` binary exposes the pipeline as the subcommands
//! `constants`, `dispersion`, `correct`, `oracle` and `compare`.

pub mod cli;
pub mod fd_oracle;
pub mod first_order;
pub mod interface_constants;
pub mod linalg;
pub mod model;
pub mod quadrature;
pub mod table;
pub mod zero_order;

pub use model::{derive_constants, validate_config, DerivedConstants, InterfaceKind, Material, StripConfig};
