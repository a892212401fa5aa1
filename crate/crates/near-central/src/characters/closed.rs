//! Closed-form generalized-character evaluations and content-polynomial
//! identities.
//!
//! Three families admit explicit values:
//!
//! * γ^{μ,j} at the class K_{(n−1,1),1} — the Jucys–Murphy product
//!   J_2 J_3 ⋯ J_{n−1} — is ±1 on three shape patterns and 0 elsewhere;
//! * γ^{μ,j} at the full-cycle class ((n), n) is supported on hooks;
//! * γ^{ρ,ℓ} with ρ a hook or near-hook, evaluated on a two-part class
//!   ((p, n−p), p), follows case tables in q = n−p. Where the tables'
//!   two k-regimes overlap they must agree; this is asserted, not
//!   trusted.
//!
//! The content machinery at the bottom backs the Diaconis–Greene-style
//! sum rule: Σ_{λ⊢n, m(λ)=m, i∈λ} (|C_{λ,i}|/d_{ℓ_−(ρ)}) γ^{ρ,ℓ}_{λ,i}
//! equals [t^m] Π_{cells s of ρ} (t + c(s)).

use crate::characters::classical::{hook_leg, near_hook_leg};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::{frac, rat, Rat};
use num_traits::Zero;

fn sign(parity: u32) -> Rat {
    if parity % 2 == 0 {
        rat(1)
    } else {
        rat(-1)
    }
}

/// γ^{μ,j}_{(n−1,1),1}: (−1)^k when μ = (n−k−1,2,1^{k−1}) with j = 2;
/// (−1)^{k−1} when μ = (n−k,1^k) with j = 1; (−1)^k when μ = (n−k,1^k)
/// with j = n−k; zero otherwise. For μ = (1^n) both hook patterns name
/// j = 1; the j = 1 case applies (it is the one consistent with every
/// other route).
pub fn genchar_at_k_n11(mu: &Partition, j: u32) -> Rat {
    let n = mu.n();
    assert!(n >= 2 && mu.has_part(j), "need j in mu, n >= 2");
    if let Some(k) = near_hook_leg(mu) {
        return if j == 2 { sign(k) } else { Rat::zero() };
    }
    if let Some(k) = hook_leg(mu) {
        if j == 1 {
            return sign(k + 1);
        }
        if j == n - k {
            return sign(k);
        }
    }
    Rat::zero()
}

/// γ^{μ,j}_{(n),n}: (−1)^k (n−k−1)/(n−1) when μ = (n−k,1^k), j = n−k;
/// (−1)^k k/(n−1) when μ = (n−k,1^k), j = 1; zero otherwise. As above,
/// μ = (1^n) takes the j = 1 case.
pub fn genchar_at_full_cycle(mu: &Partition, j: u32) -> Rat {
    let n = mu.n();
    assert!(n >= 2 && mu.has_part(j), "need j in mu, n >= 2");
    if let Some(k) = hook_leg(mu) {
        if j == 1 {
            return sign(k) * frac(i64::from(k), i64::from(n) - 1);
        }
        if j == n - k {
            return sign(k) * frac(i64::from(n - k) - 1, i64::from(n) - 1);
        }
    }
    Rat::zero()
}

/// The three (shape, tag) families with closed two-part evaluations.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum TwoPartFamily {
    /// ((n−k, 1^k), n−k), 0 ≤ k ≤ n−2
    HookRow,
    /// ((n−k, 1^k), 1), 1 ≤ k ≤ n−1
    HookCol,
    /// ((n−k−1, 2, 1^{k−1}), 2), 1 ≤ k ≤ n−3
    NearHook,
}

impl TwoPartFamily {
    /// The tagged shape the family names at the given (n, k).
    pub fn shape(self, n: u32, k: u32) -> crate::partition::TaggedClass {
        let (parts, tag) = match self {
            TwoPartFamily::HookRow | TwoPartFamily::HookCol => {
                let mut parts = vec![n - k];
                parts.extend(std::iter::repeat(1).take(k as usize));
                (parts, if self == TwoPartFamily::HookRow { n - k } else { 1 })
            }
            TwoPartFamily::NearHook => {
                let mut parts = vec![n - k - 1, 2];
                parts.extend(std::iter::repeat(1).take(k as usize - 1));
                (parts, 2)
            }
        };
        crate::partition::TaggedClass::new(Partition::new(parts), tag)
    }
}

/// γ^{ρ,ℓ}_{(p,n−p),p} for ρ in one of the three closed families, by the
/// case tables in q = n−p. Both k-regimes are evaluated wherever they
/// overlap and asserted equal.
///
/// # Panics
/// Panics when k is outside the family's range, p outside 1..n (2..n−1
/// for near-hooks... p ≤ n−1 always), or the overlap assertion fails.
pub fn genchar_two_part(family: TwoPartFamily, n: u32, k: u32, p: u32) -> Rat {
    assert!(n >= 2 && p >= 1 && p <= n - 1, "two-part class needs 1 <= p <= n-1");
    let q = i64::from(n - p);
    let k64 = i64::from(k);
    let n64 = i64::from(n);
    let low = |q: i64| -> Option<Rat> {
        // the k ≤ bound regime of each table
        match family {
            TwoPartFamily::HookRow => Some(if q <= k64 {
                sign(k + 1) * frac(q, n64 - 1)
            } else if q < n64 - k64 {
                sign(k) * frac(n64 - k64 - 1, n64 - 1)
            } else {
                sign(k) * frac(q, n64 - 1)
            }),
            TwoPartFamily::HookCol => Some(if q <= k64 {
                sign(k) * frac(q, n64 - 1)
            } else if q < n64 - k64 {
                sign(k) * frac(k64, n64 - 1)
            } else {
                sign(k + 1) * frac(q, n64 - 1)
            }),
            TwoPartFamily::NearHook => Some(if q <= k64 {
                sign(k) * frac(q, k64 * (n64 - k64 - 2))
            } else if q < n64 - k64 - 1 {
                Rat::zero()
            } else {
                sign(k + 1) * frac(q, k64 * (n64 - k64 - 2))
            }),
        }
    };
    let high = |q: i64| -> Option<Rat> {
        match family {
            TwoPartFamily::HookRow => Some(if q < n64 - k64 {
                sign(k + 1) * frac(q, n64 - 1)
            } else if q <= k64 {
                sign(k + 1) * frac(n64 - k64 - 1, n64 - 1)
            } else {
                sign(k) * frac(q, n64 - 1)
            }),
            TwoPartFamily::HookCol => Some(if q < n64 - k64 {
                sign(k) * frac(q, n64 - 1)
            } else if q <= k64 {
                sign(k + 1) * frac(k64, n64 - 1)
            } else {
                sign(k + 1) * frac(q, n64 - 1)
            }),
            TwoPartFamily::NearHook => Some(if q <= n64 - k64 - 2 {
                sign(k) * frac(q, k64 * (n64 - k64 - 2))
            } else if q <= k64 {
                Rat::zero()
            } else {
                sign(k + 1) * frac(q, k64 * (n64 - k64 - 2))
            }),
        }
    };
    let (k_range, boundary) = match family {
        TwoPartFamily::HookRow => (0..=n - 2, n64 - k64 - 1),
        TwoPartFamily::HookCol => (1..=n - 1, n64 - k64 - 1),
        TwoPartFamily::NearHook => {
            assert!(p >= 2, "near-hook evaluations need p >= 2");
            assert!(n >= 4, "near-hooks need n >= 4");
            (1..=n - 3, n64 - k64 - 2)
        }
    };
    assert!(k_range.contains(&k), "k = {} outside range for {:?} at n = {}", k, family, n);
    let lo_applies = k64 <= boundary;
    let hi_applies = k64 >= boundary;
    let lo = if lo_applies { low(q) } else { None };
    let hi = if hi_applies { high(q) } else { None };
    match (lo, hi) {
        (Some(a), Some(b)) => {
            assert_eq!(a, b, "case tables disagree at their shared boundary");
            a
        }
        (Some(a), None) => a,
        (None, Some(b)) => b,
        (None, None) => unreachable!("k is in exactly one regime"),
    }
}

/// Π_{cells s of ρ} (t + c(s)), a monic polynomial of degree |ρ|.
pub fn content_product_poly(shape: &Partition) -> Poly {
    let mut out = Poly::one();
    for c in shape.contents() {
        out = out.mul(&Poly::new(vec![rat(c), rat(1)]));
    }
    out
}

/// [t^m] Π_{cells}(t + content) for ρ with distinguished part ℓ. The
/// value depends on ρ alone; ℓ is kept because the identity this backs
/// pairs the coefficient with the index (ρ, ℓ).
pub fn content_poly_sum(rho: &Partition, ell: u32, m: u32) -> Rat {
    assert!(rho.has_part(ell), "{} is not a part of {}", ell, rho);
    assert!((1..=rho.n()).contains(&m), "need 1 <= m <= n");
    content_product_poly(rho).coeff(m as usize)
}
