//! Standard Young tableaux.
//!
//! SYT_{λ,i} denotes the standard tableaux of shape λ ⊢ n whose entry n
//! sits in the removable corner at the end of the lowest row of length i;
//! removing it leaves a tableau of shape i_−(λ) with the top row restored
//! to decreasing order, so |SYT_{λ,i}| = d_{i_−(λ)}. These tagged sets
//! slice the Young idempotent basis: Γ^{λ,i} = Σ_{T ∈ SYT_{λ,i}} e_T.

use crate::partition::Partition;

/// A standard Young tableau, stored as the cell of each entry:
/// `pos[e-1] = (row, col)`, 0-based.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Tableau {
    shape: Partition,
    pos: Vec<(usize, usize)>,
}

impl Tableau {
    pub fn shape(&self) -> &Partition {
        &self.shape
    }

    pub fn n(&self) -> u32 {
        self.shape.n()
    }

    pub fn position_of(&self, entry: u32) -> (usize, usize) {
        self.pos[(entry - 1) as usize]
    }

    /// The cells of all entries in entry order (`[e-1] = cell of e`);
    /// determines the tableau given the shape.
    pub fn positions(&self) -> &[(usize, usize)] {
        &self.pos
    }

    /// c_T(e) = col − row of the cell holding e.
    pub fn content(&self, entry: u32) -> i64 {
        let (r, c) = self.position_of(entry);
        c as i64 - r as i64
    }

    /// The rows as increasing sequences (for tests and display).
    pub fn rows(&self) -> Vec<Vec<u32>> {
        let mut rows: Vec<Vec<u32>> = self
            .shape
            .parts()
            .iter()
            .map(|&len| vec![0; len as usize])
            .collect();
        for (e, &(r, c)) in self.pos.iter().enumerate() {
            rows[r][c] = e as u32 + 1;
        }
        rows
    }

    /// s_k · T: swaps the entries k and k+1, returning `None` when the
    /// result is not standard (the two entries share a row or a column).
    pub fn apply_adjacent(&self, k: u32) -> Option<Tableau> {
        let (r1, c1) = self.position_of(k);
        let (r2, c2) = self.position_of(k + 1);
        if r1 == r2 || c1 == c2 {
            return None;
        }
        let mut pos = self.pos.clone();
        pos.swap((k - 1) as usize, k as usize);
        Some(Tableau { shape: self.shape.clone(), pos })
    }
}

/// The corner cell (0-based) that entry n occupies in SYT_{λ,i}: the end
/// of the lowest row of length i.
pub fn tagged_corner(shape: &Partition, tag: u32) -> (usize, usize) {
    let row = shape
        .parts()
        .iter()
        .rposition(|&p| p == tag)
        .unwrap_or_else(|| panic!("tag {} is not a part of {}", tag, shape));
    (row, (tag - 1) as usize)
}

/// All standard Young tableaux of the shape, by backtracking on the
/// placement of 1, 2, …, n. The order is fixed but carries no meaning;
/// every consumer is invariant under renumbering the basis.
pub fn syt_enumerate(shape: &Partition) -> Vec<Tableau> {
    let parts = shape.parts();
    let n = shape.n() as usize;
    let mut out = Vec::new();
    let mut fill = vec![0usize; parts.len()];
    let mut pos = Vec::with_capacity(n);
    fn place(
        entry: usize,
        n: usize,
        parts: &[u32],
        fill: &mut [usize],
        pos: &mut Vec<(usize, usize)>,
        shape: &Partition,
        out: &mut Vec<Tableau>,
    ) {
        if entry == n {
            out.push(Tableau { shape: shape.clone(), pos: pos.clone() });
            return;
        }
        for r in 0..parts.len() {
            let c = fill[r];
            // Row r accepts the next entry when it has room and stays
            // strictly shorter than the row above.
            if c < parts[r] as usize && (r == 0 || fill[r - 1] > c) {
                fill[r] += 1;
                pos.push((r, c));
                place(entry + 1, n, parts, fill, pos, shape, out);
                pos.pop();
                fill[r] -= 1;
            }
        }
    }
    place(0, n, parts, &mut fill, &mut pos, shape, &mut out);
    out
}

/// SYT_{λ,i}: the standard tableaux of shape λ with n in the tagged
/// corner.
pub fn syt_with_tag(shape: &Partition, tag: u32) -> Vec<Tableau> {
    let corner = tagged_corner(shape, tag);
    syt_enumerate(shape)
        .into_iter()
        .filter(|t| t.position_of(t.n()) == corner)
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::int;
    use crate::partition::{partitions_of, tagged_classes, TaggedClass};

    fn p(parts: &[u32]) -> Partition {
        Partition::new(parts.to_vec())
    }

    #[test]
    fn small_shapes() {
        let two_one = syt_enumerate(&p(&[2, 1]));
        let rows: Vec<_> = two_one.iter().map(|t| t.rows()).collect();
        assert_eq!(rows.len(), 2);
        assert!(rows.contains(&vec![vec![1, 2], vec![3]]));
        assert!(rows.contains(&vec![vec![1, 3], vec![2]]));
        assert_eq!(syt_enumerate(&p(&[3])).len(), 1);
        assert_eq!(syt_enumerate(&Partition::empty()).len(), 1);
    }

    #[test]
    fn counts_match_hook_dimension() {
        for n in 1..=7 {
            for shape in partitions_of(n) {
                assert_eq!(int(syt_enumerate(&shape).len() as i64), shape.hook_dim());
            }
        }
    }

    #[test]
    fn tagged_counts_match_reduced_dimension() {
        for n in 1..=7 {
            for class in tagged_classes(n) {
                let count = syt_with_tag(class.shape(), class.tag()).len();
                assert_eq!(int(count as i64), class.shape().i_minus(class.tag()).hook_dim());
            }
        }
    }

    #[test]
    fn tagged_corner_content_matches_class_content() {
        for n in 1..=7 {
            for class in tagged_classes(n) {
                let (r, c) = tagged_corner(class.shape(), class.tag());
                assert_eq!(c as i64 - r as i64, class.content_of_n());
                for t in syt_with_tag(class.shape(), class.tag()) {
                    assert_eq!(t.content(n), class.content_of_n());
                }
            }
        }
    }

    #[test]
    fn adjacent_action() {
        let t = syt_enumerate(&p(&[2, 1]))
            .into_iter()
            .find(|t| t.rows() == vec![vec![1, 2], vec![3]])
            .unwrap();
        assert_eq!(t.apply_adjacent(1), None); // 1, 2 share a row
        let s = t.apply_adjacent(2).unwrap();
        assert_eq!(s.rows(), vec![vec![1, 3], vec![2]]);
        assert_eq!(s.apply_adjacent(2).unwrap(), t);
        assert_eq!(t.content(2), 1);
        assert_eq!(t.content(3), -1);
    }

    #[test]
    fn tag_partitions_the_tableaux() {
        // Each SYT has n in exactly one removable corner, so the tagged
        // sets partition SYT(λ).
        for shape in partitions_of(6) {
            let total: usize = shape
                .distinct_parts()
                .iter()
                .map(|&i| syt_with_tag(&shape, i).len())
                .sum();
            assert_eq!(int(total as i64), shape.hook_dim());
        }
        let corner = tagged_corner(&p(&[4, 4]), 4);
        assert_eq!(corner, (1, 3));
        let c = TaggedClass::new(p(&[4, 4]), 4);
        assert_eq!(c.content_of_n(), 2);
    }
}
