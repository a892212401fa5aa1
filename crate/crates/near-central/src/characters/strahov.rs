//! The generalized Murnaghan–Nakayama rule.
//!
//! For (λ, i) and a class (μ, j),
//!
//! ```text
//! γ^{λ,i}_{μ,j} = Σ_{ν ⊆ i_−(λ), ν ⊢ n−j} φ_{λ/ν,i} · χ^ν_{μ∖j},
//! ```
//!
//! where φ weights each skew diagram by its broken-border-strip
//! combinatorics. φ_{λ/ν,i} vanishes unless λ/ν contains no 2×2 block;
//! otherwise it is
//!
//! ```text
//! (−1)^{⟨λ/ν⟩} · Π_{s ∈ SC} (c_{λ,i} − c(s)) / Π_{d ∈ DB, d ≠ λ/i_−(λ)} (c_{λ,i} − c(d))
//! ```
//!
//! with SC the sharp corners (a box below and a box to the right, both in
//! the skew), DB the dull boxes (neither), ⟨·⟩ the sum of component
//! heights (edge-connectivity; touching corners do not connect), and
//! c_{λ,i} the content of the box that n occupies in SYT_{λ,i} — that box
//! is always a dull box of the skew and is the one excluded.

use crate::partition::{partitions_of, Partition, TaggedClass};
use crate::tableau::tagged_corner;
use crate::{rat, Rat};
use num_traits::Zero;

/// A skew diagram λ/ν with ν ⊆ λ cellwise.
pub struct SkewShape {
    outer: Partition,
    inner: Partition,
}

impl SkewShape {
    /// # Panics
    /// Panics unless inner ⊆ outer.
    pub fn new(outer: Partition, inner: Partition) -> Self {
        assert!(outer.contains(&inner), "{} does not contain {}", outer, inner);
        SkewShape { outer, inner }
    }

    pub fn has_cell(&self, r: usize, c: usize) -> bool {
        self.outer.has_cell(r, c) && !self.inner.has_cell(r, c)
    }

    /// The cells of the skew, row-major.
    pub fn cells(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for (r, &len) in self.outer.parts().iter().enumerate() {
            let lo = self.inner.parts().get(r).copied().unwrap_or(0) as usize;
            for c in lo..len as usize {
                out.push((r, c));
            }
        }
        out
    }

    /// No 2×2 block of cells.
    pub fn is_broken_border_strip(&self) -> bool {
        self.cells().iter().all(|&(r, c)| {
            !(self.has_cell(r + 1, c) && self.has_cell(r, c + 1) && self.has_cell(r + 1, c + 1))
        })
    }

    /// Sharp corners: a box of the skew with a skew box directly below
    /// and directly to the right.
    pub fn sharp_corners(&self) -> Vec<(usize, usize)> {
        self.cells()
            .into_iter()
            .filter(|&(r, c)| self.has_cell(r + 1, c) && self.has_cell(r, c + 1))
            .collect()
    }

    /// Dull boxes: a box with skew boxes neither below nor to the right.
    pub fn dull_boxes(&self) -> Vec<(usize, usize)> {
        self.cells()
            .into_iter()
            .filter(|&(r, c)| !self.has_cell(r + 1, c) && !self.has_cell(r, c + 1))
            .collect()
    }

    /// ⟨λ/ν⟩: the sum over edge-connected components of
    /// (max row − min row). Corner-touching boxes are not connected.
    pub fn height(&self) -> u32 {
        let cells = self.cells();
        let mut assigned = vec![false; cells.len()];
        let mut total = 0u32;
        for start in 0..cells.len() {
            if assigned[start] {
                continue;
            }
            let mut stack = vec![start];
            assigned[start] = true;
            let (mut min_r, mut max_r) = (cells[start].0, cells[start].0);
            while let Some(at) = stack.pop() {
                let (r, c) = cells[at];
                min_r = min_r.min(r);
                max_r = max_r.max(r);
                for (idx, &(r2, c2)) in cells.iter().enumerate() {
                    if assigned[idx] {
                        continue;
                    }
                    let adjacent = (r2 == r && c2.abs_diff(c) == 1) || (c2 == c && r2.abs_diff(r) == 1);
                    if adjacent {
                        assigned[idx] = true;
                        stack.push(idx);
                    }
                }
            }
            total += (max_r - min_r) as u32;
        }
        total
    }
}

/// φ_{λ/ν,i}.
pub fn phi(outer: &Partition, inner: &Partition, tag: u32) -> Rat {
    let skew = SkewShape::new(outer.clone(), inner.clone());
    if !skew.is_broken_border_strip() {
        return Rat::zero();
    }
    let content_n = TaggedClass::new(outer.clone(), tag).content_of_n();
    let excluded = tagged_corner(outer, tag);
    let mut value = if skew.height() % 2 == 0 { rat(1) } else { rat(-1) };
    for (r, c) in skew.sharp_corners() {
        value *= rat(content_n - (c as i64 - r as i64));
    }
    for cell in skew.dull_boxes() {
        if cell == excluded {
            continue;
        }
        let (r, c) = cell;
        value /= rat(content_n - (c as i64 - r as i64));
    }
    value
}

/// γ^{λ,i}_{μ,j} by the generalized Murnaghan–Nakayama rule.
///
/// # Panics
/// Panics unless λ and μ partition the same n with i ∈ λ, j ∈ μ.
pub fn genchar_strahov(rho: &TaggedClass, class: &TaggedClass) -> Rat {
    assert_eq!(rho.n(), class.n(), "index and class must share n");
    let shape = rho.shape();
    let reduced = shape.i_minus(rho.tag());
    let trimmed = class.shape().remove_part(class.tag());
    let mut total = Rat::zero();
    for nu in partitions_of(rho.n() - class.tag()) {
        if !reduced.contains(&nu) {
            continue;
        }
        let weight = phi(shape, &nu, rho.tag());
        if weight.is_zero() {
            continue;
        }
        total += weight
            * Rat::from_integer(crate::characters::classical::mn_character(&nu, &trimmed));
    }
    total
}
