//! Near-central decompositions of a full cycle: counting factorizations
//! C = π₁π₂ with π₁ ∈ C_{λ,i} and π₂ ∈ C_{μ,j}.
//!
//! The count is the structure constant [K_{(n),n}] K_{λ,i}K_{μ,j}, which
//! diagonalizes over the idempotents of Z₁(n). Only hook shapes carry a
//! nonzero generalized character at the full cycle, so the spectral sum
//! collapses to the two hook families and factors through the univariate
//! series
//!
//! ```text
//! count = (|C_{λ,i}||C_{μ,j}|/((n−1)²n!)) Σ_{1≤k≤n−1} ((−1)^{k−1}/binom(n−2,k−1))
//!         ([x^{k−1}] R̂_{n,i}Ĥ_{λ∖i} · [y^{k−1}] R̂_{n,j}Ĥ_{μ∖j}
//!          − [x^k] Ŝ_{n,i}Ĥ_{λ∖i} · [y^k] Ŝ_{n,j}Ĥ_{μ∖j}),
//! ```
//!
//! the hat marking the power-series division by (1+x) that turns the
//! R/S numerators into generalized-character extractions. The k-th term
//! pairs the coefficient extractions of the two factors, so the
//! bivariate extraction is two univariate ones.

use crate::characters::series::{genchar_hook_series, HookTag};
use crate::partition::{tagged_classes, TaggedClass};
use crate::permutation::Permutation;
use crate::{binomial, factorial, int, rat_to_count, Error, Int, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// γ^{(n−k,1^k),n−k}_{λ,i} for k = 0..=n−2 and γ^{(n−k,1^k),1}_{λ,i}
/// for k = 1..=n−1 (indexed by k; slot 0 of the second vector unused).
fn hook_profiles(class: &TaggedClass) -> (Vec<Rat>, Vec<Rat>) {
    let n = class.n();
    let row = (0..=n - 2)
        .map(|k| genchar_hook_series(n, k, HookTag::Row, class.shape(), class.tag()))
        .collect();
    let col = std::iter::once(Rat::zero())
        .chain(
            (1..=n - 1)
                .map(|k| genchar_hook_series(n, k, HookTag::Column, class.shape(), class.tag())),
        )
        .collect();
    (row, col)
}

/// The number of factorizations C = π₁π₂ of a full cycle with
/// π₁ ∈ C_{λ,i} and π₂ ∈ C_{μ,j}, by the generating-series formula;
/// asserted to be a non-negative integer.
pub fn decomposition_count(left: &TaggedClass, right: &TaggedClass) -> Int {
    let n = left.n();
    assert_eq!(n, right.n(), "classes live in different symmetric groups");
    assert!(n >= 2);
    let (row_l, col_l) = hook_profiles(left);
    let (row_r, col_r) = hook_profiles(right);
    let mut total = Rat::zero();
    for k in 1..=(n - 1) as usize {
        let paired = &row_l[k - 1] * &row_r[k - 1] - &col_l[k] * &col_r[k];
        if paired.is_zero() {
            continue;
        }
        let sign = if k % 2 == 1 { 1 } else { -1 };
        total += paired * Rat::new(int(sign), binomial(n - 2, k as u32 - 1));
    }
    total *= Rat::new(left.size() * right.size(), factorial(n));
    rat_to_count(&total)
}

/// Exhaustive factorization census for C = (1, 2, …, n): the count for
/// every ordered pair of tagged classes (zero entries included).
///
/// # Errors
/// `ResourceGuard` when n exceeds `max_brute_n`.
pub fn brute_decomposition_table(
    n: u32,
    max_brute_n: u32,
) -> Result<BTreeMap<(TaggedClass, TaggedClass), Int>> {
    if n > max_brute_n {
        return Err(Error::ResourceGuard {
            task: "full-cycle factorization census".into(),
            n,
            limit: max_brute_n,
        });
    }
    let c = Permutation::from_cycles(n, &[(1..=n).collect()]);
    let mut table: BTreeMap<(TaggedClass, TaggedClass), Int> = BTreeMap::new();
    let classes = tagged_classes(n);
    for left in &classes {
        for right in &classes {
            table.insert((left.clone(), right.clone()), Int::zero());
        }
    }
    for pi1 in Permutation::all(n) {
        let pi2 = pi1.inverse().compose(&c);
        let key = (pi1.tagged_class(), pi2.tagged_class());
        *table.get_mut(&key).unwrap() += 1;
    }
    Ok(table)
}

/// The same count as [`decomposition_count`], by scanning S_n.
///
/// # Errors
/// `ResourceGuard` when n exceeds `max_brute_n`.
pub fn brute_decompositions(
    left: &TaggedClass,
    right: &TaggedClass,
    max_brute_n: u32,
) -> Result<Int> {
    let n = left.n();
    assert_eq!(n, right.n(), "classes live in different symmetric groups");
    if n > max_brute_n {
        return Err(Error::ResourceGuard {
            task: "full-cycle factorization count".into(),
            n,
            limit: max_brute_n,
        });
    }
    let c = Permutation::from_cycles(n, &[(1..=n).collect()]);
    let mut count = Int::zero();
    for pi1 in Permutation::all(n) {
        if pi1.tagged_class() == *left && pi1.inverse().compose(&c).tagged_class() == *right {
            count += 1;
        }
    }
    Ok(count)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::gamma::connection_coefficient;
    use crate::partition::Partition;

    fn tc(parts: &[u32], tag: u32) -> TaggedClass {
        TaggedClass::new(Partition::new(parts.to_vec()), tag)
    }

    #[test]
    fn s3_factorization_table() {
        assert_eq!(decomposition_count(&tc(&[1, 1, 1], 1), &tc(&[3], 3)), int(1));
        assert_eq!(decomposition_count(&tc(&[2, 1], 1), &tc(&[2, 1], 2)), int(1));
        assert_eq!(decomposition_count(&tc(&[2, 1], 1), &tc(&[2, 1], 1)), int(0));
        assert_eq!(decomposition_count(&tc(&[3], 3), &tc(&[3], 3)), int(1));
        assert_eq!(decomposition_count(&tc(&[2, 1], 2), &tc(&[2, 1], 2)), int(1));
    }

    #[test]
    fn identity_factor_is_unique() {
        for n in 2..=7 {
            let ones = TaggedClass::new(Partition::new(vec![1; n as usize]), 1);
            let full = TaggedClass::new(Partition::new(vec![n]), n);
            assert_eq!(decomposition_count(&ones, &full), int(1));
            assert_eq!(decomposition_count(&full, &ones), int(1));
        }
    }

    #[test]
    fn frozen_values_at_n5() {
        assert_eq!(decomposition_count(&tc(&[4, 1], 4), &tc(&[3, 2], 2)), int(3));
        assert_eq!(decomposition_count(&tc(&[5], 5), &tc(&[5], 5)), int(8));
        assert_eq!(decomposition_count(&tc(&[3, 2], 2), &tc(&[4, 1], 1)), int(1));
        assert_eq!(decomposition_count(&tc(&[2, 2, 1], 2), &tc(&[3, 1, 1], 3)), int(2));
    }

    #[test]
    fn brute_examples() {
        assert_eq!(brute_decompositions(&tc(&[3], 3), &tc(&[3], 3), 8).unwrap(), int(1));
        assert_eq!(
            brute_decompositions(&tc(&[2, 1], 2), &tc(&[2, 1], 2), 8).unwrap(),
            int(1)
        );
        assert!(matches!(
            brute_decompositions(&tc(&[3], 3), &tc(&[3], 3), 2),
            Err(Error::ResourceGuard { .. })
        ));
    }

    #[test]
    fn formula_matches_brute_force_and_is_symmetric() {
        for n in 2..=5 {
            let table = brute_decomposition_table(n, 8).unwrap();
            let classes = tagged_classes(n);
            for left in &classes {
                for right in &classes {
                    let formula = decomposition_count(left, right);
                    let brute = &table[&(left.clone(), right.clone())];
                    assert_eq!(formula, *brute, "({}) x ({}) at n={}", left, right, n);
                    assert_eq!(formula, decomposition_count(right, left));
                }
            }
        }
    }

    #[test]
    fn row_totals_count_the_whole_class() {
        let table = brute_decomposition_table(5, 8).unwrap();
        for left in tagged_classes(5) {
            let total: Int = tagged_classes(5)
                .iter()
                .map(|right| table[&(left.clone(), right.clone())].clone())
                .sum();
            assert_eq!(total, left.size());
        }
    }

    #[test]
    fn agrees_with_connection_coefficients() {
        let full = tc(&[4], 4);
        for left in tagged_classes(4) {
            for right in tagged_classes(4) {
                assert_eq!(
                    decomposition_count(&left, &right),
                    connection_coefficient(&left, &right, &full)
                );
            }
        }
    }
}
