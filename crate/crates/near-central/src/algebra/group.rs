//! Sparse elements of the group algebra ℚ[S_n].

use crate::permutation::Permutation;
use crate::{Error, Rat, Result};
use num_traits::Zero;
use std::collections::HashMap;

/// A finitely supported map S_n → ℚ. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Debug)]
pub struct GroupAlgebraElement {
    n: u32,
    coeffs: HashMap<Permutation, Rat>,
}

impl GroupAlgebraElement {
    pub fn zero(n: u32) -> Self {
        GroupAlgebraElement { n, coeffs: HashMap::new() }
    }

    /// The multiplicative identity: 1·(identity permutation).
    pub fn one(n: u32) -> Self {
        let mut out = Self::zero(n);
        out.add_term(Permutation::identity(n), Rat::from_integer(crate::int(1)));
        out
    }

    pub fn from_terms<I: IntoIterator<Item = (Permutation, Rat)>>(n: u32, terms: I) -> Self {
        let mut out = Self::zero(n);
        for (pi, c) in terms {
            out.add_term(pi, c);
        }
        out
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add_term(&mut self, pi: Permutation, c: Rat) {
        assert_eq!(pi.n(), self.n, "term degree must match the element");
        if c.is_zero() {
            return;
        }
        match self.coeffs.entry(pi) {
            std::collections::hash_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::hash_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, pi: &Permutation) -> Rat {
        self.coeffs.get(pi).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn support_size(&self) -> usize {
        self.coeffs.len()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &Rat)> {
        self.coeffs.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (pi, c) in &other.coeffs {
            out.add_term(pi.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        GroupAlgebraElement {
            n: self.n,
            coeffs: self.coeffs.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Convolution product; cost is |support(self)| · |support(other)|.
    ///
    /// # Errors
    /// `ResourceGuard` when n exceeds `max_brute_n` — products of general
    /// elements have no shortcut past exhaustive convolution.
    pub fn multiply(&self, other: &Self, max_brute_n: u32) -> Result<Self> {
        assert_eq!(self.n, other.n, "mixed-degree product");
        if self.n > max_brute_n {
            return Err(Error::ResourceGuard {
                task: "group-algebra convolution".into(),
                n: self.n,
                limit: max_brute_n,
            });
        }
        let mut out = Self::zero(self.n);
        for (a, ca) in &self.coeffs {
            for (b, cb) in &other.coeffs {
                out.add_term(a.compose(b), ca * cb);
            }
        }
        Ok(out)
    }
}

/// The Jucys–Murphy element J_k = Σ_{1 ≤ i < k} (i, k); J_1 = 0.
///
/// # Panics
/// Panics unless 1 ≤ k ≤ n.
pub fn jm_element(n: u32, k: u32) -> GroupAlgebraElement {
    assert!((1..=n).contains(&k), "J_k needs 1 <= k <= n");
    let one = Rat::from_integer(crate::int(1));
    GroupAlgebraElement::from_terms(
        n,
        (1..k).map(|i| (Permutation::from_cycles(n, &[vec![i, k]]), one.clone())),
    )
}
