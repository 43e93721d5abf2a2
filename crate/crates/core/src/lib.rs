//! Efimov spectrum of the attractive inverse-square potential with a hard-wall
//! cut-off, computed three ways:
//!
//! * [`qm`]: exact eigenstates built from the zeros of the modified Bessel
//!   function `K_{i s0}(y)` of imaginary order,
//! * [`wkb`]: Langer-corrected WKB quantization and the uniform Airy
//!   approximation of the wavefunctions,
//! * [`spectral`]: the periodic-orbit trace formula for the geometric
//!   spectrum, the smooth level density and its inverse-Abel potential.
//!
//! [`observables`] computes moments and the comparison tables. Units are
//! `ħ = m = 1` throughout; radii are scaled by the outer classical turning
//! point, `x = R / R_+`, and energies are reported as `E / E_c = x_c²`.

// `!(x > 0.0)` is used on purpose: it also rejects NaN.
#![allow(clippy::neg_cmp_op_on_partial_ord)]

pub mod error;
pub mod observables;
pub mod qm;
pub mod quad;
pub mod roots;
pub mod spectral;
pub mod specfun;
pub mod wkb;

pub use error::{Error, Result};
pub use observables::{build_table1, build_table2, mean_square_x, radius_scaling_ratio, MomentRow};
pub use qm::{Eigenstate, GridSpec, Method, SystemParams, WavefunctionGrid};
pub use spectral::{PotentialProfile, TraceSpec};
pub use wkb::UniformState;

/// Channel constant for three identical bosons, `s0 = π / ln 22.694 ≈ 1.00624`.
pub const S0_BOSONS: f64 = 1.006_243_258_591_188_4;

#[cfg(test)]
mod tests {
    #[test]
    fn boson_constant() {
        let s0 = std::f64::consts::PI / 22.694f64.ln();
        assert!((s0 - super::S0_BOSONS).abs() < 1e-15);
        assert!(((std::f64::consts::PI / super::S0_BOSONS).exp() - 22.694).abs() < 5e-3);
    }
}
