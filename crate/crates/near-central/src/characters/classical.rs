//! Ordinary irreducible characters χ^λ_μ.
//!
//! Three routes, used to cross-check one another: the Murnaghan–Nakayama
//! recursion (valid everywhere), the hook generating series
//!
//! ```text
//! χ^{(n−k,1^k)}_μ = [y^k] (1+y)^{-1} H_μ(y),   H_μ(y) = Π_i (1 − (−y)^{μ_i}),
//! ```
//!
//! and the evaluation at a full cycle, which vanishes off hooks.

use crate::partition::Partition;
use crate::poly::Poly;
use crate::{int, rat, rat_to_int, Int, Rat};
use num_traits::Zero;

/// H_μ(y) = Π_i (1 − (−y)^{μ_i}), the hook-series numerator. Degree is
/// the size of μ; H of the empty partition is 1.
pub fn h_poly(mu: &Partition) -> Poly {
    let mut out = Poly::one();
    for &part in mu.parts() {
        // 1 − (−y)^q = 1 + (−1)^{q+1} y^q
        let sign = if part % 2 == 0 { rat(-1) } else { rat(1) };
        let factor = Poly::one().add(&Poly::monomial(sign, part as usize));
        out = out.mul(&factor);
    }
    out
}

/// χ^{(n−k,1^k)}_μ by coefficient extraction from H_μ(y)/(1+y).
///
/// # Panics
/// Panics unless 0 ≤ k ≤ n−1 and μ ⊢ n.
pub fn hook_character(n: u32, k: u32, mu: &Partition) -> Int {
    assert!(k < n, "hook (n-k,1^k) needs 0 <= k <= n-1");
    assert_eq!(mu.n(), n, "class partition must have size n");
    let value = h_poly(mu).series_coeff_div_1px(k as usize);
    rat_to_int(&value)
}

/// χ^λ_{(n)}: (−1)^k when λ is the hook (n−k,1^k), zero otherwise.
pub fn char_full_cycle(shape: &Partition) -> Int {
    match hook_leg(shape) {
        Some(k) => int(if k % 2 == 0 { 1 } else { -1 }),
        None => int(0),
    }
}

/// When λ = (n−k, 1^k), the leg length k.
pub fn hook_leg(shape: &Partition) -> Option<u32> {
    let parts = shape.parts();
    if parts.is_empty() || parts[1..].iter().all(|&p| p == 1) {
        Some(parts.len().saturating_sub(1) as u32)
    } else {
        None
    }
}

/// When λ = (n−k−1, 2, 1^{k−1}) with n−k−1 ≥ 2, the value k.
pub fn near_hook_leg(shape: &Partition) -> Option<u32> {
    let parts = shape.parts();
    if parts.len() >= 2
        && parts[0] >= 2
        && parts[1] == 2
        && parts[2..].iter().all(|&p| p == 1)
    {
        Some(parts.len() as u32 - 1)
    } else {
        None
    }
}

/// χ^λ_μ by the Murnaghan–Nakayama recursion over border strips,
/// implemented on beta-numbers: removing a strip of length m replaces a
/// beta-number b by b − m (when free), with sign (−1)^{#numbers passed}.
pub fn mn_character(shape: &Partition, mu: &Partition) -> Int {
    assert_eq!(shape.n(), mu.n(), "character arguments must partition the same n");
    let rows = shape.num_parts();
    let beta: Vec<i64> = shape
        .parts()
        .iter()
        .enumerate()
        .map(|(idx, &p)| i64::from(p) + (rows - 1 - idx) as i64)
        .collect();
    recurse(&beta, mu.parts())
}

fn recurse(beta: &[i64], strips: &[u32]) -> Int {
    let Some((&m, rest)) = strips.split_first() else {
        return int(1);
    };
    let m = i64::from(m);
    let mut total = Int::zero();
    for (pos, &b) in beta.iter().enumerate() {
        let target = b - m;
        if target < 0 || beta.contains(&target) {
            continue;
        }
        let mut next: Vec<i64> = beta.to_vec();
        next[pos] = target;
        next.sort_unstable_by(|a, b| b.cmp(a));
        // the strip's height parity is the number of beta-numbers jumped
        let crossed = beta.iter().filter(|&&x| target < x && x < b).count();
        let term = recurse(&next, rest);
        if crossed % 2 == 0 {
            total += term;
        } else {
            total -= term;
        }
    }
    total
}

/// The character table of S_n: `table[a][b]` = χ^{λ_a}_{μ_b} with both
/// indices in canonical partition order.
pub fn character_table(n: u32) -> Vec<Vec<Int>> {
    let shapes = crate::partition::partitions_of(n);
    shapes
        .iter()
        .map(|shape| shapes.iter().map(|mu| mn_character(shape, mu)).collect())
        .collect()
}

/// Convenience: χ^λ_μ as a rational, for code mixing characters into
/// rational sums.
pub fn mn_character_rat(shape: &Partition, mu: &Partition) -> Rat {
    Rat::from_integer(mn_character(shape, mu))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::{class_size, partitions_of};
    use crate::{factorial, frac};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn hook_series_examples() {
        assert_eq!(hook_character(3, 1, &p(&[3])), int(-1));
        for mu in partitions_of(3) {
            assert_eq!(hook_character(3, 0, &mu), int(1));
        }
        assert_eq!(hook_character(3, 1, &p(&[1, 1, 1])), int(2));
    }

    #[test]
    fn mn_examples() {
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[3])), int(-1));
        assert_eq!(mn_character(&p(&[2, 1]), &p(&[1, 1, 1])), int(2));
        assert_eq!(mn_character(&p(&[2, 2]), &p(&[2, 1, 1])), int(0));
        assert_eq!(mn_character(&p(&[3, 1]), &p(&[2, 2])), int(-1));
    }

    #[test]
    fn full_cycle_closed_form() {
        for n in 2..=7 {
            for shape in partitions_of(n) {
                assert_eq!(char_full_cycle(&shape), mn_character(&shape, &p(&[n])));
            }
        }
        assert_eq!(char_full_cycle(&p(&[4])), int(1));
        assert_eq!(char_full_cycle(&p(&[1, 1, 1, 1])), int(-1));
        assert_eq!(char_full_cycle(&p(&[2, 2])), int(0));
    }

    #[test]
    fn hook_series_agrees_with_mn() {
        for n in 1..=7u32 {
            for k in 0..n {
                let shape = if k == 0 {
                    p(&[n])
                } else {
                    let mut parts = vec![n - k];
                    parts.extend(std::iter::repeat(1).take(k as usize));
                    p(&parts)
                };
                for mu in partitions_of(n) {
                    assert_eq!(hook_character(n, k, &mu), mn_character(&shape, &mu));
                }
            }
        }
    }

    #[test]
    fn dimensions_and_orthogonality() {
        for n in 1..=6 {
            let ones = p(&vec![1; n as usize]);
            let shapes = partitions_of(n);
            for shape in &shapes {
                assert_eq!(mn_character(shape, &ones), shape.hook_dim());
            }
            // first orthogonality: Σ_μ |C_μ| χ^λ_μ χ^ν_μ = δ_{λν} n!
            let classes = partitions_of(n);
            for a in &shapes {
                for b in &shapes {
                    let dot: Int = classes
                        .iter()
                        .map(|mu| class_size(mu) * mn_character(a, mu) * mn_character(b, mu))
                        .sum();
                    let expect = if a == b { factorial(n) } else { int(0) };
                    assert_eq!(dot, expect, "orthogonality failed at {} {}", a, b);
                }
            }
        }
    }

    #[test]
    fn shape_family_recognizers() {
        assert_eq!(hook_leg(&p(&[4])), Some(0));
        assert_eq!(hook_leg(&p(&[3, 1, 1])), Some(2));
        assert_eq!(hook_leg(&p(&[1, 1, 1])), Some(2));
        assert_eq!(hook_leg(&p(&[3, 2])), None);
        assert_eq!(near_hook_leg(&p(&[2, 2])), Some(1));
        assert_eq!(near_hook_leg(&p(&[3, 2, 1, 1])), Some(3));
        assert_eq!(near_hook_leg(&p(&[3, 1, 1])), None);
        assert_eq!(near_hook_leg(&p(&[2, 2, 2])), None);
    }

    #[test]
    fn h_poly_shape() {
        // H_{(3,2)} = (1+y^3)(1-y^2)
        let h = h_poly(&p(&[3, 2]));
        assert_eq!(
            h.coeffs(),
            &[rat(1), rat(0), rat(-1), rat(1), rat(0), rat(-1)]
        );
        assert_eq!(h_poly(&Partition::empty()), Poly::one());
        let half = frac(1, 2);
        assert_eq!(h.evaluate(&half), frac(3, 4) * frac(9, 8));
    }
}
