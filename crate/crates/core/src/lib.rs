//! Anti-symmetric level characters and the Verlinde algebras they span.
//!
//! The crate is organized bottom-up:
//!
//! * [`intlat`]: exact integer lattices (Hermite and Smith normal forms,
//!   finite quotients, integer kernels).
//! * [`lie`]: Cartan data, root systems, Weyl groups, weight systems and
//!   classical tensor-product multiplicities.
//! * [`torus`]: the per-level weight torus and its Fourier-dual torus of
//!   rational points, mirrors, the alcove and the spectrum domain.
//! * [`fusion`]: anti-symmetric level characters, the Verlinde sum and the
//!   Kac–Walton folding, the resulting graded fusion ring.
//! * [`gusrep`]: unital *-representations given by integer matrices, graded
//!   quivers, spectra and quantum Dynkin diagram certification.
//! * [`rootspace`]: quantum root spaces, quantum root systems, translations
//!   and quantum Coxeter exponents.
//!
//! Everything here is `no_std` with `alloc`; IO and file formats live in the
//! companion `verlinde-kit` crate.
//!
//! ```
//! use std::sync::Arc;
//! use verlinde_core::gusrep::ade_quiver;
//! use verlinde_core::rootspace::exponent_multiplicities;
//! use verlinde_core::{Family, FusionRing, LevelData, LieAlgebra};
//!
//! # fn main() -> verlinde_core::Result<()> {
//! let quiver = ade_quiver(Family::E, 6)?;
//! let sl2 = LieAlgebra::new(Family::A, 1)?;
//! let ring = Arc::new(FusionRing::new(LevelData::new(&sl2, quiver.level)?)?);
//! let rep = quiver.to_usrep(ring)?;
//! assert!(rep.validate().all_pass());
//! let table = exponent_multiplicities(&rep)?;
//! let exps: Vec<i64> = table.rows.iter().filter(|r| r.m_pi == 1).map(|r| r.exponent).collect();
//! assert_eq!(exps, [1, 4, 5, 7, 8, 11]);
//! # Ok(())
//! # }
//! ```

#![no_std]

extern crate alloc;

#[cfg(test)]
extern crate std;

pub mod error;
pub mod fusion;
pub mod gusrep;
pub mod intlat;
pub mod lie;
pub mod phase;
pub mod rootspace;
pub mod torus;

pub use error::{Error, Result};
pub use fusion::FusionRing;
pub use gusrep::{GradedQuiver, UsRep};
pub use lie::{Family, LieAlgebra, Weight};
pub use torus::{LevelData, TorusElement};

/// Numeric policy and size caps shared by every computation.
#[derive(Clone, Debug, PartialEq)]
pub struct Limits {
    /// Largest admissible distance between a float sum and the integer it
    /// is rounded to.
    pub tolerance: f64,
    /// Largest admissible `|T_ℓ|`.
    pub torus_cap: u64,
    /// Largest admissible Weyl group order for full enumeration.
    pub weyl_cap: u64,
    /// Largest admissible `|𝒲_ℓ| · d` for explicit root-space kernels.
    pub rootspace_cap: u64,
    /// Largest admissible number of weights in a single weight diagram.
    pub weight_cap: u64,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            tolerance: 1e-6,
            torus_cap: 10_000_000,
            weyl_cap: 2_000_000,
            rootspace_cap: 20_000,
            weight_cap: 1_000_000,
        }
    }
}

impl Limits {
    pub fn validate(&self) -> Result<()> {
        if !(self.tolerance > 0.0 && self.tolerance < 1e-2) {
            return Err(Error::InvalidConfig("tolerance must lie in (0, 1e-2)"));
        }
        if self.torus_cap == 0 || self.weyl_cap == 0 || self.rootspace_cap == 0 || self.weight_cap == 0
        {
            return Err(Error::InvalidConfig("caps must be positive"));
        }
        Ok(())
    }
}
