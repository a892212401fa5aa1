//! Young's seminormal representation and the generalized-character
//! oracle.
//!
//! The oracle is deliberately independent of every closed form in the
//! crate: it builds actual representation matrices R^λ(π) over exact
//! rationals and reads γ^{λ,i}_{μ,j} off as the partial trace
//!
//! ```text
//! γ^{λ,i}_{μ,j} = Σ_{T ∈ SYT_{λ,i}} [R^λ(π)]_{T,T},   π ∈ C_{μ,j} arbitrary,
//! ```
//!
//! which realizes the coefficient extraction (n!/d_λ)[K_{μ,j}]Γ^{λ,i}
//! because e_T has Fourier coefficients (d_λ/n!)[R^λ(π⁻¹)]_{T,T} and the
//! classes C_{μ,j} are closed under inversion. The seminormal form keeps
//! every entry rational (the orthogonal form would not); diagonal entries
//! are invariant under the diagonal rescaling between the two, so partial
//! traces are convention-free.

use crate::partition::{Partition, TaggedClass};
use crate::permutation::{class_representative, Permutation};
use crate::tableau::{syt_enumerate, tagged_corner, Tableau};
use crate::{rat, Rat};
use num_traits::{One, Zero};
use std::collections::HashMap;

/// One generator matrix in column-sparse form: `cols[j]` lists the
/// nonzero (row, value) pairs of column j — at most two per column.
type SparseCols = Vec<Vec<(usize, Rat)>>;

/// The seminormal representation of S_n indexed by a shape λ ⊢ n, with
/// basis syt_enumerate(λ) in its fixed order.
pub struct SeminormalRep {
    shape: Partition,
    tableaux: Vec<Tableau>,
    /// gens[k-1] is the matrix of the adjacent transposition s_k.
    gens: Vec<SparseCols>,
}

impl SeminormalRep {
    pub fn build(shape: &Partition) -> Self {
        let n = shape.n();
        let tableaux = syt_enumerate(shape);
        let index: HashMap<Vec<(usize, usize)>, usize> = tableaux
            .iter()
            .enumerate()
            .map(|(idx, t)| (t.positions().to_vec(), idx))
            .collect();
        let dim = tableaux.len();
        let mut gens = Vec::new();
        for k in 1..n {
            let mut cols: SparseCols = vec![Vec::new(); dim];
            for (j, t) in tableaux.iter().enumerate() {
                // axial distance for s_k at T
                let d = rat(t.content(k + 1) - t.content(k));
                let inv_d = Rat::one() / d;
                match t.apply_adjacent(k) {
                    None => {
                        // k, k+1 share a row or column: d = ±1 and T is
                        // an eigenvector
                        cols[j].push((j, inv_d));
                    }
                    Some(other) => {
                        let u = index[other.positions()];
                        // Pair convention: the lower-indexed column takes
                        // off-diagonal 1, the higher 1 − 1/d². Any
                        // consistent choice is a diagonal rescaling away
                        // from any other, leaving diagonals intact.
                        let off = if j < u {
                            Rat::one()
                        } else {
                            Rat::one() - &inv_d * &inv_d
                        };
                        cols[j].push((j, inv_d));
                        cols[j].push((u, off));
                    }
                }
            }
            gens.push(cols);
        }
        SeminormalRep { shape: shape.clone(), tableaux, gens }
    }

    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn dim(&self) -> usize {
        self.tableaux.len()
    }

    /// The basis tableaux in matrix-index order.
    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// Indices of the basis tableaux lying in SYT_{λ,i}.
    pub fn tagged_indices(&self, tag: u32) -> Vec<usize> {
        let corner = tagged_corner(&self.shape, tag);
        let n = self.shape.n();
        self.tableaux
            .iter()
            .enumerate()
            .filter(|(_, t)| t.position_of(n) == corner)
            .map(|(idx, _)| idx)
            .collect()
    }

    /// R^λ(π), dense row-major: factor π into adjacent transpositions and
    /// multiply the generator matrices left to right.
    pub fn matrix(&self, pi: &Permutation) -> Vec<Vec<Rat>> {
        assert_eq!(pi.n(), self.shape.n(), "permutation degree must match the shape");
        let dim = self.dim();
        let mut mat: Vec<Vec<Rat>> = (0..dim)
            .map(|i| (0..dim).map(|j| if i == j { Rat::one() } else { Rat::zero() }).collect())
            .collect();
        for &k in &pi.adjacent_factorization() {
            mat = right_multiply(&mat, &self.gens[k - 1]);
        }
        mat
    }

    /// The diagonal of R^λ(π) without materializing full rows elsewhere.
    pub fn diagonal(&self, pi: &Permutation) -> Vec<Rat> {
        let m = self.matrix(pi);
        (0..self.dim()).map(|i| m[i][i].clone()).collect()
    }

    /// tr R^λ(π) = χ^λ_{κ(π)}.
    pub fn trace(&self, pi: &Permutation) -> Rat {
        self.diagonal(pi).into_iter().sum()
    }
}

fn right_multiply(a: &[Vec<Rat>], gen: &SparseCols) -> Vec<Vec<Rat>> {
    let dim = a.len();
    let mut out: Vec<Vec<Rat>> = vec![vec![Rat::zero(); dim]; dim];
    for (j, col) in gen.iter().enumerate() {
        for (r, v) in col {
            if v.is_zero() {
                continue;
            }
            for i in 0..dim {
                let term = &a[i][*r] * v;
                out[i][j] += term;
            }
        }
    }
    out
}

/// One-shot convenience: the matrix R^λ(π).
pub fn seminormal_rep(shape: &Partition, pi: &Permutation) -> Vec<Vec<Rat>> {
    SeminormalRep::build(shape).matrix(pi)
}

/// γ^{λ,i}_{μ,j} via the representation oracle, at the canonical class
/// representative.
pub fn genchar_oracle(rho: &TaggedClass, class: &TaggedClass) -> Rat {
    assert_eq!(rho.n(), class.n(), "index and class must share n");
    genchar_oracle_at(rho, &class_representative(class))
}

/// The partial trace at an explicit permutation; exposed so tests can
/// verify representative independence within a class.
pub fn genchar_oracle_at(rho: &TaggedClass, pi: &Permutation) -> Rat {
    let rep = SeminormalRep::build(rho.shape());
    let diag = rep.diagonal(pi);
    rep.tagged_indices(rho.tag()).into_iter().map(|i| diag[i].clone()).sum()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::characters::classical::mn_character;
    use crate::partition::{partitions_of, tagged_classes};
    use crate::{frac, rat};
    use num_traits::One;

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    fn tc(parts: &[u32], tag: u32) -> TaggedClass {
        TaggedClass::new(p(parts), tag)
    }

    fn is_identity(m: &[Vec<Rat>]) -> bool {
        m.iter().enumerate().all(|(i, row)| {
            row.iter().enumerate().all(|(j, v)| {
                if i == j {
                    v.is_one()
                } else {
                    v.is_zero()
                }
            })
        })
    }

    #[test]
    fn identity_and_involutions() {
        for shape in partitions_of(5) {
            let rep = SeminormalRep::build(&shape);
            assert!(is_identity(&rep.matrix(&Permutation::identity(5))));
            for k in 1..5u32 {
                let s = Permutation::from_cycles(5, &[vec![k, k + 1]]);
                let m = rep.matrix(&s.compose(&s));
                assert!(is_identity(&m), "s_{}^2 != id on {}", k, shape);
            }
        }
    }

    #[test]
    fn multiplicativity_over_s4() {
        let all = Permutation::all(4);
        for shape in partitions_of(4) {
            let rep = SeminormalRep::build(&shape);
            let mats: Vec<_> = all.iter().map(|g| rep.matrix(g)).collect();
            for (a, ga) in all.iter().enumerate() {
                for (b, gb) in all.iter().enumerate() {
                    let prod = ga.compose(gb);
                    let idx = all.iter().position(|g| *g == prod).unwrap();
                    let mut expect = vec![vec![Rat::zero(); rep.dim()]; rep.dim()];
                    for i in 0..rep.dim() {
                        for j in 0..rep.dim() {
                            for r in 0..rep.dim() {
                                let term = &mats[a][i][r] * &mats[b][r][j];
                                expect[i][j] += term;
                            }
                        }
                    }
                    assert_eq!(expect, mats[idx], "R not multiplicative on {}", shape);
                }
            }
        }
    }

    #[test]
    fn trace_is_the_ordinary_character() {
        assert_eq!(
            SeminormalRep::build(&p(&[2, 1])).trace(&Permutation::from_cycles(3, &[vec![1, 2, 3]])),
            rat(-1)
        );
        for n in 1..=5 {
            for shape in partitions_of(n) {
                let rep = SeminormalRep::build(&shape);
                for mu in partitions_of(n) {
                    let pi = class_representative(&TaggedClass::new(mu.clone(), mu.parts()[0]));
                    assert_eq!(
                        rep.trace(&pi),
                        Rat::from_integer(mn_character(&shape, &mu)),
                        "trace mismatch at {} {}",
                        shape,
                        mu
                    );
                }
            }
        }
    }

    #[test]
    fn oracle_basics() {
        // trivial representation: single tableau, everything is 1
        for class in tagged_classes(5) {
            assert_eq!(genchar_oracle(&tc(&[5], 5), &class), rat(1));
        }
        // identity class: partial trace counts SYT_{λ,i}
        for rho in tagged_classes(5) {
            assert_eq!(
                genchar_oracle(&rho, &tc(&[1, 1, 1, 1, 1], 1)),
                Rat::from_integer(rho.shape().i_minus(rho.tag()).hook_dim())
            );
        }
    }

    #[test]
    fn frozen_table_n4() {
        // Full γ table of S_4, rows and columns in canonical class order:
        // (4):4, (3,1):3, (3,1):1, (2,2):2, (2,1,1):2, (2,1,1):1, (1^4):1.
        let expect: [[Rat; 7]; 7] = [
            [rat(1), rat(1), rat(1), rat(1), rat(1), rat(1), rat(1)],
            [frac(-2, 3), frac(1, 3), rat(-1), frac(-2, 3), frac(4, 3), rat(0), rat(2)],
            [frac(-1, 3), frac(-1, 3), rat(1), frac(-1, 3), frac(-1, 3), rat(1), rat(1)],
            [rat(0), rat(-1), rat(-1), rat(2), rat(0), rat(0), rat(2)],
            [frac(1, 3), frac(-1, 3), rat(1), frac(-1, 3), frac(1, 3), rat(-1), rat(1)],
            [frac(2, 3), frac(1, 3), rat(-1), frac(-2, 3), frac(-4, 3), rat(0), rat(2)],
            [rat(-1), rat(1), rat(1), rat(1), rat(-1), rat(-1), rat(1)],
        ];
        let classes = tagged_classes(4);
        assert_eq!(classes.len(), 7);
        for (a, rho) in classes.iter().enumerate() {
            for (b, class) in classes.iter().enumerate() {
                assert_eq!(
                    genchar_oracle(rho, class),
                    expect[a][b],
                    "gamma^({}) at ({})",
                    rho,
                    class
                );
            }
        }
        // pinned value: γ^{(2,2),2}_{(3,1),3} = −1
        assert_eq!(genchar_oracle(&tc(&[2, 2], 2), &tc(&[3, 1], 3)), rat(-1));
    }

    #[test]
    fn tag_sum_recovers_trace() {
        for n in 1..=5 {
            for shape in partitions_of(n) {
                let rep = SeminormalRep::build(&shape);
                let total: usize = shape
                    .distinct_parts()
                    .iter()
                    .map(|&i| rep.tagged_indices(i).len())
                    .sum();
                assert_eq!(total, rep.dim());
            }
        }
    }
}
