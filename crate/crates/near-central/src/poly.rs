//! Dense univariate polynomials with exact rational coefficients.
//!
//! Everything downstream extracts coefficients rather than evaluating:
//! genus generating functions, hook-character series, and the R/S series
//! of the dipole formulas all live here as finite coefficient vectors.
//! Division by (1 + x) appears in two flavours and both matter:
//! [`Poly::divide_exact`] when the quotient is again a polynomial (the R
//! and S numerators), and [`Poly::series_coeff_div_1px`] when only a
//! power-series coefficient of P(x)/(1+x) is wanted.

use crate::{factorial, int, rat, Rat};
use num_traits::{One, Zero};
use std::fmt;

/// coeffs[k] is the coefficient of x^k; trailing zeros are trimmed, so
/// the zero polynomial has an empty vector.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Poly {
    coeffs: Vec<Rat>,
}

impl Poly {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().is_some_and(Zero::is_zero) {
            coeffs.pop();
        }
        Poly { coeffs }
    }

    pub fn zero() -> Self {
        Poly { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Poly::constant(rat(1))
    }

    pub fn constant(c: Rat) -> Self {
        Poly::new(vec![c])
    }

    pub fn monomial(c: Rat, degree: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); degree + 1];
        coeffs[degree] = c;
        Poly::new(coeffs)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// None for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// The coefficient of x^k (zero beyond the degree).
    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let len = self.coeffs.len().max(other.coeffs.len());
        let coeffs = (0..len).map(|k| self.coeff(k) + other.coeff(k)).collect();
        Poly::new(coeffs)
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        self.add(&other.scale(&rat(-1)))
    }

    pub fn scale(&self, c: &Rat) -> Poly {
        Poly::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        if self.is_zero() || other.is_zero() {
            return Poly::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        Poly::new(coeffs)
    }

    pub fn evaluate(&self, t: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * t + c;
        }
        acc
    }

    /// Exact polynomial division; `None` when the remainder is nonzero.
    pub fn divide_exact(&self, divisor: &Poly) -> Option<Poly> {
        assert!(!divisor.is_zero(), "division by the zero polynomial");
        if self.is_zero() {
            return Some(Poly::zero());
        }
        let mut rem = self.coeffs.clone();
        let d = divisor.coeffs.len() - 1;
        let lead = &divisor.coeffs[d];
        if rem.len() <= d && !self.is_zero() {
            return None;
        }
        let mut quot = vec![Rat::zero(); rem.len() - d];
        for k in (0..quot.len()).rev() {
            let q = &rem[k + d] / lead;
            if !q.is_zero() {
                for (i, b) in divisor.coeffs.iter().enumerate() {
                    let delta = &q * b;
                    rem[k + i] -= delta;
                }
            }
            quot[k] = q;
        }
        if rem.iter().all(Zero::is_zero) {
            Some(Poly::new(quot))
        } else {
            None
        }
    }

    /// [x^k] self(x)/(1+x) as a formal power series:
    /// Σ_{i=0}^{k} (−1)^{k−i} · coeff(i).
    pub fn series_coeff_div_1px(&self, k: usize) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..=k {
            let term = self.coeff(i);
            if (k - i) % 2 == 0 {
                acc += term;
            } else {
                acc -= term;
            }
        }
        acc
    }
}

impl fmt::Display for Poly {
    /// Ascending powers in the variable t, e.g. `1/2*t + 1/2*t^3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{}", crate::rat_to_string(c))?,
                _ => {
                    if !c.is_one() {
                        write!(f, "{}*", crate::rat_to_string(c))?;
                    }
                    if k == 1 {
                        write!(f, "t")?;
                    } else {
                        write!(f, "t^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// The falling-product binomial binom(t + a, b) as a polynomial in t:
/// ∏_{r=0}^{b−1} (t + a − r) / b!.
pub fn binomial_poly(a: i64, b: u32) -> Poly {
    let mut out = Poly::one();
    for r in 0..i64::from(b) {
        out = out.mul(&Poly::new(vec![rat(a - r), rat(1)]));
    }
    out.scale(&Rat::new(int(1), factorial(b)))
}

/// 1 + x, the ubiquitous divisor.
pub fn one_plus_x() -> Poly {
    Poly::new(vec![rat(1), rat(1)])
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frac;
    use proptest::prelude::*;

    #[test]
    fn arithmetic_basics() {
        let p = Poly::new(vec![rat(1), rat(2)]); // 1 + 2x
        let q = Poly::new(vec![rat(0), rat(0), rat(3)]); // 3x^2
        assert_eq!(p.add(&q).coeffs(), &[rat(1), rat(2), rat(3)]);
        assert_eq!(p.mul(&q).coeffs(), &[rat(0), rat(0), rat(3), rat(6)]);
        assert_eq!(p.degree(), Some(1));
        assert_eq!(Poly::zero().degree(), None);
        assert_eq!(p.evaluate(&rat(3)), rat(7));
        assert_eq!(Poly::new(vec![rat(0), rat(0)]), Poly::zero());
    }

    #[test]
    fn exact_division() {
        let d = one_plus_x();
        let sq = d.mul(&d);
        assert_eq!(sq.divide_exact(&d), Some(d.clone()));
        let off = sq.add(&Poly::constant(rat(1)));
        assert_eq!(off.divide_exact(&d), None);
        assert_eq!(Poly::zero().divide_exact(&d), Some(Poly::zero()));
    }

    #[test]
    fn series_division_by_one_plus_x() {
        // (1+x)^2 / (1+x) = 1 + x as a series too
        let sq = one_plus_x().mul(&one_plus_x());
        assert_eq!(sq.series_coeff_div_1px(0), rat(1));
        assert_eq!(sq.series_coeff_div_1px(1), rat(1));
        assert_eq!(sq.series_coeff_div_1px(2), rat(0));
        // 1/(1+x) = 1 - x + x^2 - ...
        let one = Poly::one();
        for k in 0..6 {
            let expect = if k % 2 == 0 { rat(1) } else { rat(-1) };
            assert_eq!(one.series_coeff_div_1px(k), expect);
        }
    }

    #[test]
    fn binomial_polys() {
        // binom(t+1, 3) = (t+1)t(t-1)/6 = (t^3 - t)/6
        let b = binomial_poly(1, 3);
        assert_eq!(b.coeffs(), &[rat(0), frac(-1, 6), rat(0), frac(1, 6)]);
        // binom(t, 1) = t, binom(t, 0) = 1
        assert_eq!(binomial_poly(0, 1).coeffs(), &[rat(0), rat(1)]);
        assert_eq!(binomial_poly(5, 0), Poly::one());
        // integer evaluations agree with numeric binomials
        for a in -2i64..5 {
            for b in 0u32..6 {
                let p = binomial_poly(a, b);
                for t in 0i64..8 {
                    let expect = (0..i64::from(b)).map(|r| rat(t + a - r)).product::<Rat>()
                        / Rat::from_integer(factorial(b));
                    assert_eq!(p.evaluate(&rat(t)), expect);
                }
            }
        }
    }

    #[test]
    fn display_forms() {
        let p = Poly::new(vec![rat(0), frac(1, 2), rat(0), frac(1, 2)]);
        assert_eq!(p.to_string(), "1/2*t + 1/2*t^3");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::monomial(rat(1), 2).to_string(), "t^2");
        assert_eq!(Poly::constant(rat(-3)).to_string(), "-3");
    }

    fn arb_poly() -> impl Strategy<Value = Poly> {
        proptest::collection::vec((-6i64..6, 1i64..5), 0..6)
            .prop_map(|cs| Poly::new(cs.into_iter().map(|(p, q)| frac(p, q)).collect()))
    }

    proptest! {
        #[test]
        fn product_division_round_trips(a in arb_poly(), b in arb_poly()) {
            prop_assume!(!b.is_zero());
            let prod = a.mul(&b);
            prop_assert_eq!(prod.divide_exact(&b), Some(a));
        }

        #[test]
        fn series_division_inverts_multiplication(a in arb_poly(), k in 0usize..8) {
            let prod = a.mul(&one_plus_x());
            prop_assert_eq!(prod.series_coeff_div_1px(k), a.coeff(k));
        }
    }
}
