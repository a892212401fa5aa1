//! Permutations of {1, …, n} in one-line notation.
//!
//! Composition acts right-to-left: (σ ∘ τ)(x) = σ(τ(x)), so a product
//! written s_{k_1} s_{k_2} ⋯ s_{k_m} applies s_{k_m} first. Every brute
//! force in the crate — dipole sweeps, class convolutions, the character
//! oracle — goes through this type, so the convention is fixed here once.

use crate::partition::{Partition, TaggedClass};
use itertools::Itertools;
use std::fmt;

/// A permutation of {1, …, n}; `images[i-1]` is the image of i.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Permutation {
    images: Vec<u32>,
}

impl Permutation {
    pub fn identity(n: u32) -> Self {
        Permutation { images: (1..=n).collect() }
    }

    /// Builds from one-line notation.
    ///
    /// # Panics
    /// Panics unless `images` is a rearrangement of 1..=n.
    pub fn from_images(images: Vec<u32>) -> Self {
        let n = images.len() as u32;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!(x >= 1 && x <= n, "image {} out of range 1..={}", x, n);
            assert!(!seen[(x - 1) as usize], "image {} repeated", x);
            seen[(x - 1) as usize] = true;
        }
        Permutation { images }
    }

    /// Builds from disjoint cycles; elements of 1..=n absent from every
    /// cycle are fixed.
    ///
    /// # Panics
    /// Panics on out-of-range or repeated elements.
    pub fn from_cycles(n: u32, cycles: &[Vec<u32>]) -> Self {
        let mut images: Vec<u32> = (1..=n).collect();
        let mut seen = vec![false; n as usize];
        for cycle in cycles {
            for (pos, &x) in cycle.iter().enumerate() {
                assert!(x >= 1 && x <= n, "cycle element {} out of range 1..={}", x, n);
                assert!(!seen[(x - 1) as usize], "cycle element {} repeated", x);
                seen[(x - 1) as usize] = true;
                let next = cycle[(pos + 1) % cycle.len()];
                images[(x - 1) as usize] = next;
            }
        }
        Permutation { images }
    }

    pub fn n(&self) -> u32 {
        self.images.len() as u32
    }

    pub fn images(&self) -> &[u32] {
        &self.images
    }

    pub fn apply(&self, x: u32) -> u32 {
        self.images[(x - 1) as usize]
    }

    /// (self ∘ other)(x) = self(other(x)): `other` acts first.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        assert_eq!(self.n(), other.n(), "composing permutations of different degree");
        let images = (1..=self.n()).map(|x| self.apply(other.apply(x))).collect();
        Permutation { images }
    }

    pub fn inverse(&self) -> Permutation {
        let mut images = vec![0; self.images.len()];
        for (i, &img) in self.images.iter().enumerate() {
            images[(img - 1) as usize] = i as u32 + 1;
        }
        Permutation { images }
    }

    /// The disjoint cycles, each led by its smallest element, in
    /// increasing order of leaders.
    pub fn cycles(&self) -> Vec<Vec<u32>> {
        let n = self.n();
        let mut seen = vec![false; n as usize];
        let mut out = Vec::new();
        for start in 1..=n {
            if seen[(start - 1) as usize] {
                continue;
            }
            let mut cycle = vec![start];
            seen[(start - 1) as usize] = true;
            let mut x = self.apply(start);
            while x != start {
                seen[(x - 1) as usize] = true;
                cycle.push(x);
                x = self.apply(x);
            }
            out.push(cycle);
        }
        out
    }

    pub fn num_cycles(&self) -> usize {
        self.cycles().len()
    }

    /// The length of the cycle through x.
    pub fn cycle_len_of(&self, x: u32) -> u32 {
        let mut len = 1;
        let mut y = self.apply(x);
        while y != x {
            len += 1;
            y = self.apply(y);
        }
        len
    }

    /// κ(π), the cycle type as a partition of n.
    pub fn cycle_type(&self) -> Partition {
        Partition::new(self.cycles().iter().map(|c| c.len() as u32).collect())
    }

    /// The tagged class (κ(π), i) where i is the length of the cycle
    /// through n.
    pub fn tagged_class(&self) -> TaggedClass {
        TaggedClass::new(self.cycle_type(), self.cycle_len_of(self.n()))
    }

    /// Writes self = s_{k_1} s_{k_2} ⋯ s_{k_m} as a product of adjacent
    /// transpositions s_k = (k, k+1), rightmost factor applied first.
    /// The factorization is the bubble-sort one (length = inversion
    /// count), not reduced-word canonical; any valid word serves the
    /// representation builder.
    pub fn adjacent_factorization(&self) -> Vec<usize> {
        let mut line = self.images.clone();
        let mut word = Vec::new();
        let mut changed = true;
        while changed {
            changed = false;
            for k in 1..line.len() {
                if line[k - 1] > line[k] {
                    line.swap(k - 1, k);
                    word.push(k);
                    changed = true;
                }
            }
        }
        word.reverse();
        word
    }

    /// All of S_n in lexicographic order of one-line notation. Intended
    /// for brute-force sweeps at small n; callers guard the degree.
    pub fn all(n: u32) -> Vec<Permutation> {
        (1..=n)
            .permutations(n as usize)
            .map(|images| Permutation { images })
            .collect()
    }
}

/// A canonical representative of C_{λ,i}: the parts of λ other than one
/// copy of i laid out as consecutive cycles on 1, 2, …, with the i-cycle
/// last so that it contains n.
pub fn class_representative(class: &TaggedClass) -> Permutation {
    let shape = class.shape();
    let mut lens: Vec<u32> = shape.remove_part(class.tag()).parts().to_vec();
    lens.push(class.tag());
    let mut cycles = Vec::new();
    let mut start = 1u32;
    for len in lens {
        cycles.push((start..start + len).collect::<Vec<u32>>());
        start += len;
    }
    Permutation::from_cycles(shape.n(), &cycles)
}

impl fmt::Display for Permutation {
    /// Cycle notation, fixed points suppressed; identity prints as `()`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for cycle in self.cycles() {
            if cycle.len() == 1 {
                continue;
            }
            write!(f, "({})", cycle.iter().join(" "))?;
            wrote = true;
        }
        if !wrote {
            write!(f, "()")?;
        }
        Ok(())
    }
}
