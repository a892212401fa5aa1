//! Characters of the symmetric group, ordinary and generalized.
//!
//! The generalized character γ^{λ,i}_{μ,j} is the coefficient extraction
//!
//! ```text
//! γ^{λ,i}_{μ,j} = (n!/d_λ) [K_{μ,j}] Γ^{λ,i},     Γ^{λ,i} = Σ_{T ∈ SYT_{λ,i}} e_T,
//! ```
//!
//! a tagged refinement of χ^λ_μ (summing over the tags i recovers the
//! ordinary character). The submodules compute these values by four
//! independent routes, and the test suites insist the routes agree
//! exactly:
//!
//! * [`seminormal`] — the oracle: explicit seminormal representation
//!   matrices, partial traces over SYT_{λ,i}.
//! * [`strahov`] — the generalized Murnaghan–Nakayama rule through
//!   broken border strips.
//! * [`series`] — generating-series extractions for hook shapes
//!   (n−k,1^k) with tag n−k or 1.
//! * [`closed`] — closed forms at distinguished classes (K_{(n−1,1),1},
//!   the full cycle) and on two-part classes (p, n−p), plus content
//!   polynomial identities.
//!
//! [`classical`] supplies the ordinary character machinery the rest
//! leans on.

pub mod classical;
pub mod closed;
pub mod seminormal;
pub mod series;
pub mod strahov;

pub use classical::{char_full_cycle, h_poly, hook_character, mn_character};
pub use closed::{
    content_poly_sum, content_product_poly, genchar_at_full_cycle, genchar_at_k_n11,
    genchar_two_part, TwoPartFamily,
};
pub use seminormal::{genchar_oracle, genchar_oracle_at, seminormal_rep, SeminormalRep};
pub use series::{genchar_hook_series, r_poly, s_poly, HookTag};
pub use strahov::{genchar_strahov, SkewShape};
