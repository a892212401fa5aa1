//! Exact arithmetic for *near-central* problems in the symmetric group S_n.
//!
//! A combinatorial problem is near-central when it depends on the cycle type
//! of a permutation together with the length of the cycle containing the
//! symbol n. Such problems live in the centralizer Z_1(n) of the group
//! algebra C[S_n] with respect to S_{n-1}, a commutative algebra with linear
//! basis the tagged-class sums K_{λ,i} (cycle type λ, n on a cycle of length
//! i). Its character theory is carried by the generalized characters
//! γ^{λ,i}_{μ,j}, the zonal spherical functions of the Gel'fand pair
//! (S_n × S_{n-1}, diag(S_{n-1})).
//!
//! The crate provides:
//!
//! * [`partition`], [`permutation`], [`tableau`], [`poly`] — the exact
//!   combinatorial substrate (partitions, tagged classes, standard Young
//!   tableaux, big-rational polynomials);
//! * [`characters`] — ordinary characters (Murnaghan–Nakayama, hook
//!   generating series) and generalized characters computed three
//!   independent ways: a seminormal-representation oracle, the generalized
//!   Murnaghan–Nakayama rule, and explicit closed forms for hook and
//!   near-hook shapes;
//! * [`algebra`] — C[S_n] and Z_1(n) elements, Jucys–Murphy products, the
//!   orthogonal idempotents Γ^{λ,i}, connection coefficients, and a
//!   persistent structure-constant table;
//! * [`dipoles`] — the (p,n-1,n)-dipole problem: brute-force enumeration of
//!   rooted dipole embeddings by face structure and genus, the exact
//!   per-face-class counting formula, and the genus generating polynomial
//!   D_{n,p}(t) with its p ↔ n+1-p symmetry;
//! * [`decomposition`] — near-central factorizations of a full cycle into
//!   two tagged-class factors, closed form and brute force;
//! * [`verify`] — the cross-validation suites that check every closed form
//!   against an independent oracle on small symmetric groups.
//!
//! All arithmetic is exact: scalars are arbitrary-precision rationals
//! ([`Rat`]) and every advertised equality in the test suites is equality of
//! rationals, never approximate.

pub mod algebra;
pub mod characters;
pub mod decomposition;
pub mod dipoles;
pub mod partition;
pub mod permutation;
pub mod poly;
pub mod tableau;
pub mod verify;

use num_traits::{One, Signed, Zero};

/// Arbitrary-precision integer used for all counts and dimensions.
pub type Int = num_bigint::BigInt;

/// Arbitrary-precision rational, always kept in lowest terms by the
/// underlying library. Character values and polynomial coefficients use
/// this type.
pub type Rat = num_rational::BigRational;

/// Shorthand: `Int` from a machine integer.
pub fn int(v: i64) -> Int {
    Int::from(v)
}

/// Shorthand: `Rat` from a machine integer.
pub fn rat(v: i64) -> Rat {
    Rat::from_integer(Int::from(v))
}

/// Shorthand: the rational a/b. Panics if b = 0.
pub fn frac(a: i64, b: i64) -> Rat {
    Rat::new(Int::from(a), Int::from(b))
}

/// n! as a big integer.
pub fn factorial(n: u32) -> Int {
    (1..=u64::from(n)).map(Int::from).product()
}

/// Binomial coefficient C(n, k) for machine-sized arguments, as a big
/// integer; 0 when k > n.
pub fn binomial(n: u32, k: u32) -> Int {
    if k > n {
        return Int::zero();
    }
    num_integer::binomial(Int::from(n), Int::from(k))
}

/// Renders a rational in the canonical external form: `p/q` in lowest
/// terms, or just `p` when the denominator is 1.
pub fn rat_to_string(r: &Rat) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

/// Extracts the integer value of a rational known to be integral.
///
/// # Panics
/// Panics if `r` has a non-unit denominator; callers use this to assert
/// that a formula produced the integer it is contractually required to
/// produce.
pub fn rat_to_int(r: &Rat) -> Int {
    assert!(r.is_integer(), "expected an integer, got {}", r);
    r.to_integer()
}

/// Extracts a non-negative integer count from a rational, panicking when
/// the value is fractional or negative.
pub fn rat_to_count(r: &Rat) -> Int {
    let v = rat_to_int(r);
    assert!(!v.is_negative(), "expected a non-negative count, got {}", v);
    v
}

/// Errors surfaced by fallible operations. Contract violations (invalid
/// partitions, out-of-range indices) panic instead: they are programming
/// errors, not runtime conditions.
#[derive(Debug, thiserror::Error)]
pub enum Error {
    /// An element of C[S_n] was not constant on some tagged class, so it
    /// does not lie in Z_1(n).
    #[error("not a Z1({n}) element: coefficients differ within class {class}")]
    NotCentralizerElement { n: u32, class: String },
    /// A brute-force scan was refused because it would exceed the
    /// configured limit.
    #[error("resource guard: {task} needs n = {n} but the brute-force limit is {limit}")]
    ResourceGuard { task: &'static str, n: u32, limit: u32 },
    /// Reading or writing the persistent structure-constant cache failed.
    #[error("structure-constant cache: {0}")]
    Cache(String),
}

pub type Result<T> = std::result::Result<T, Error>;
