//! Idempotents Γ^{λ,i}, tabulated generalized characters, and
//! connection coefficients.
//!
//! Γ^{λ,i} = Σ_{T ∈ SYT_{λ,i}} e_T expands over the group algebra with
//! the class-constant coefficients (d_λ/n!)·γ^{λ,i}_{μ,j}. The Γ form a
//! complete family of orthogonal idempotents of Z₁(n), which is what
//! makes the connection coefficients diagonalize:
//!
//! ```text
//! c^{ν,k}_{(λ,i),(μ,j)} = (|C_{λ,i}||C_{μ,j}|/n!) Σ_{ρ⊢n, ℓ∈ρ}
//!     γ^{ρ,ℓ}_{λ,i} γ^{ρ,ℓ}_{μ,j} γ^{ρ,ℓ}_{ν,k} · d_ρ / d_{ℓ_−(ρ)}².
//! ```

use crate::algebra::group::GroupAlgebraElement;
use crate::algebra::z1::Z1Element;
use crate::characters::seminormal::SeminormalRep;
use crate::characters::strahov::genchar_strahov;
use crate::partition::{tagged_classes, TaggedClass};
use crate::permutation::{class_representative, Permutation};
use crate::{factorial, rat_to_count, Error, Int, Rat, Result};
use num_traits::Zero;
use rayon::prelude::*;

/// The full matrix of generalized characters of S_n: rows indexed by the
/// representation label (ρ, ℓ), columns by the class (μ, j), both in
/// canonical tagged-class order.
pub struct GammaTable {
    n: u32,
    classes: Vec<TaggedClass>,
    values: Vec<Vec<Rat>>,
}

impl GammaTable {
    /// Tabulates every γ^{ρ,ℓ}_{μ,j} by the generalized
    /// Murnaghan–Nakayama rule, rows in parallel.
    pub fn build(n: u32) -> Self {
        let classes = tagged_classes(n);
        let values: Vec<Vec<Rat>> = classes
            .par_iter()
            .map(|rho| classes.iter().map(|class| genchar_strahov(rho, class)).collect())
            .collect();
        GammaTable { n, classes, values }
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> &[TaggedClass] {
        &self.classes
    }

    pub fn index_of(&self, class: &TaggedClass) -> usize {
        self.classes
            .iter()
            .position(|c| c == class)
            .unwrap_or_else(|| panic!("{} is not a tagged class of S_{}", class, self.n))
    }

    /// γ^{ρ,ℓ}_{μ,j}.
    pub fn gamma(&self, rho: &TaggedClass, class: &TaggedClass) -> &Rat {
        &self.values[self.index_of(rho)][self.index_of(class)]
    }

    /// The connection coefficient c^{ν,k}_{(λ,i),(μ,j)} by the character
    /// sum; asserted to be a non-negative integer before returning.
    pub fn connection_coefficient(
        &self,
        left: &TaggedClass,
        right: &TaggedClass,
        target: &TaggedClass,
    ) -> Int {
        let li = self.index_of(left);
        let ri = self.index_of(right);
        let ti = self.index_of(target);
        let mut total = Rat::zero();
        for (rho_idx, rho) in self.classes.iter().enumerate() {
            let row = &self.values[rho_idx];
            let term = &row[li] * &row[ri] * &row[ti];
            if term.is_zero() {
                continue;
            }
            let d_rho = rho.shape().hook_dim();
            let d_red = rho.shape().i_minus(rho.tag()).hook_dim();
            total += term * Rat::new(d_rho, &d_red * &d_red);
        }
        total *= Rat::new(left.size() * right.size(), factorial(self.n));
        rat_to_count(&total)
    }
}

/// One-shot connection coefficient; builds the character table for n.
pub fn connection_coefficient(
    left: &TaggedClass,
    right: &TaggedClass,
    target: &TaggedClass,
) -> Int {
    assert_eq!(left.n(), right.n());
    assert_eq!(left.n(), target.n());
    GammaTable::build(left.n()).connection_coefficient(left, right, target)
}

/// Γ^{λ,i} in K-coordinates: the coefficient of K_{μ,j} is
/// (d_λ/n!)·γ^{λ,i}_{μ,j}, read from the seminormal oracle.
pub fn gamma_z1(rho: &TaggedClass) -> Z1Element {
    let n = rho.n();
    let rep = SeminormalRep::build(rho.shape());
    let tagged = rep.tagged_indices(rho.tag());
    let norm = Rat::new(rho.shape().hook_dim(), factorial(n));
    let mut out = Z1Element::zero(n);
    for class in tagged_classes(n) {
        let diag = rep.diagonal(&class_representative(&class));
        let gamma: Rat = tagged.iter().map(|&t| diag[t].clone()).sum();
        out.add_term(class, gamma * &norm);
    }
    out
}

/// Γ^{λ,i} expanded over S_n.
///
/// # Errors
/// `ResourceGuard` when n exceeds `max_brute_n` (the expansion has n!
/// terms).
pub fn gamma_element(rho: &TaggedClass, max_brute_n: u32) -> Result<GroupAlgebraElement> {
    if rho.n() > max_brute_n {
        return Err(Error::ResourceGuard {
            task: "idempotent expansion".into(),
            n: rho.n(),
            limit: max_brute_n,
        });
    }
    let coords = gamma_z1(rho);
    let mut out = GroupAlgebraElement::zero(rho.n());
    for pi in Permutation::all(rho.n()) {
        let c = coords.coeff(&pi.tagged_class());
        out.add_term(pi, c);
    }
    Ok(out)
}
