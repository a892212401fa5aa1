//! The group algebra of S_n and its centralizer Z₁(n).
//!
//! Z₁(n) is the subalgebra commuting with everything that fixes n; the
//! tagged class sums K_{λ,i} are its canonical basis, and — unlike the
//! full class algebra Z₂-style generalizations — it is commutative. This
//! module carries both layers:
//!
//! * [`group`] — sparse elements of ℂ[S_n] over exact rationals, brute
//!   convolution, Jucys–Murphy elements J_k;
//! * [`z1`] — elements in K-coordinates, projection from the group
//!   algebra, basis products by exhaustive convolution;
//! * [`gamma`] — the idempotents Γ^{λ,i}, tabulated generalized
//!   characters, and connection coefficients via the character formula;
//! * [`cache`] — a persistent, canonically serialized store of brute
//!   structure constants.

pub mod cache;
pub mod gamma;
pub mod group;
pub mod z1;

pub use cache::StructureCache;
pub use gamma::{connection_coefficient, gamma_element, gamma_z1, GammaTable};
pub use group::{jm_element, GroupAlgebraElement};
pub use z1::{structure_constants, z1_multiply, z1_project, ClassMembers, Z1Element};
