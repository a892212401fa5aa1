//! Generating-series evaluation of hook-indexed generalized characters.
//!
//! For hooks (n−k, 1^k) the two possible tags give two series:
//!
//! ```text
//! γ^{(n−k,1^k),n−k}_{μ,j} = (1/(n−1)) [x^k] R_{n,j}(x) H_{μ∖j}(x) / (1+x),
//! γ^{(n−k,1^k),1}_{μ,j}   = (1/(n−1)) [x^k] S_{n,j}(x) H_{μ∖j}(x) / (1+x),
//! ```
//!
//! where R_{n,j} = ((n−1) + nx + (−x)^j)/(1+x) and
//! S_{n,j} = (−1)^{j−1}((−1)^j x + nx^j + (n−1)x^{j+1})/(1+x). Both
//! numerators are exactly divisible by 1+x (asserted, not assumed); the
//! trailing 1/(1+x) is the hook-character series denominator and is
//! expanded as a power series during coefficient extraction. Without that
//! final division the extractions do not reproduce the generalized
//! characters — the hook-character series χ^{(m−k,1^k)}_ν =
//! [x^k](1+x)^{−1}H_ν(x) carries its (1+x)^{−1} with it.

use crate::characters::classical::h_poly;
use crate::partition::Partition;
use crate::poly::{one_plus_x, Poly};
use crate::{frac, rat, Rat};

/// Which tag of the hook (n−k, 1^k) is evaluated.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum HookTag {
    /// tag n−k: n at the end of the first row.
    Row,
    /// tag 1: n at the bottom of the first column.
    Column,
}

/// R_{n,j}(x) as a polynomial of degree j − 1.
///
/// # Panics
/// Panics if the numerator is not divisible by 1+x (it always is).
pub fn r_poly(n: u32, j: u32) -> Poly {
    assert!(n >= 2 && (1..=n).contains(&j));
    let mut coeffs = vec![rat(0); j as usize + 1];
    coeffs[0] = rat(i64::from(n) - 1);
    coeffs[1] += rat(i64::from(n));
    coeffs[j as usize] += rat(if j % 2 == 0 { 1 } else { -1 });
    Poly::new(coeffs)
        .divide_exact(&one_plus_x())
        .expect("R numerator is divisible by 1+x")
}

/// S_{n,j}(x) as a polynomial of degree j.
pub fn s_poly(n: u32, j: u32) -> Poly {
    assert!(n >= 2 && (1..=n).contains(&j));
    let mut coeffs = vec![rat(0); j as usize + 2];
    coeffs[1] += rat(if j % 2 == 0 { 1 } else { -1 });
    coeffs[j as usize] += rat(i64::from(n));
    coeffs[j as usize + 1] += rat(i64::from(n) - 1);
    let sign = if j % 2 == 1 { rat(1) } else { rat(-1) };
    Poly::new(coeffs)
        .scale(&sign)
        .divide_exact(&one_plus_x())
        .expect("S numerator is divisible by 1+x")
}

/// γ^{(n−k,1^k),tag}_{μ,j} by series extraction.
///
/// # Panics
/// Panics when k is outside the family's range (0 ≤ k ≤ n−2 for the row
/// tag, 1 ≤ k ≤ n−1 for the column tag), or when j ∉ μ ⊢ n.
pub fn genchar_hook_series(n: u32, k: u32, tag: HookTag, mu: &Partition, j: u32) -> Rat {
    assert_eq!(mu.n(), n, "class partition must have size n");
    assert!(mu.has_part(j), "{} is not a part of {}", j, mu);
    let base = match tag {
        HookTag::Row => {
            assert!(k <= n - 2, "row-tag series needs 0 <= k <= n-2");
            r_poly(n, j)
        }
        HookTag::Column => {
            assert!((1..=n - 1).contains(&k), "column-tag series needs 1 <= k <= n-1");
            s_poly(n, j)
        }
    };
    let product = base.mul(&h_poly(&mu.remove_part(j)));
    product.series_coeff_div_1px(k as usize) * frac(1, i64::from(n) - 1)
}
