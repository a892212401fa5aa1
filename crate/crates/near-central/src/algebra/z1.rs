//! Z₁(n): elements in the tagged-class basis, projection, and
//! brute-force products.
//!
//! K_{λ,i} = Σ_{π ∈ C_{λ,i}} π. An element of ℚ[S_n] lies in Z₁(n)
//! exactly when its coefficient function is constant on every tagged
//! class; [`z1_project`] enforces that definition literally. Products of
//! basis elements are computed by counting factorizations — for a
//! representative w of each target class, [K_{ν,k}] K_{λ,i}K_{μ,j} is
//! the number of π₁ ∈ C_{λ,i} with π₁⁻¹w ∈ C_{μ,j} — which keeps the
//! cost at |C_{λ,i}| per target class instead of |C_{λ,i}|·|C_{μ,j}|.

use crate::algebra::group::GroupAlgebraElement;
use crate::partition::{tagged_classes, TaggedClass};
use crate::permutation::{class_representative, Permutation};
use crate::{int, Error, Int, Rat, Result};
use num_traits::Zero;
use std::collections::BTreeMap;

/// An element of Z₁(n) in K-coordinates. Zero coordinates are not
/// stored; iteration over coordinates is canonical (BTreeMap over the
/// tagged-class order).
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Z1Element {
    n: u32,
    coords: BTreeMap<TaggedClass, Rat>,
}

impl Z1Element {
    pub fn zero(n: u32) -> Self {
        Z1Element { n, coords: BTreeMap::new() }
    }

    /// K_{λ,i}.
    pub fn basis(class: &TaggedClass) -> Self {
        let mut out = Self::zero(class.n());
        out.add_term(class.clone(), Rat::from_integer(int(1)));
        out
    }

    /// The identity of the algebra: K_{(1ⁿ),1}.
    pub fn one(n: u32) -> Self {
        Self::basis(&TaggedClass::new(
            crate::partition::Partition::new(vec![1; n as usize]),
            1,
        ))
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn add_term(&mut self, class: TaggedClass, c: Rat) {
        assert_eq!(class.n(), self.n, "class degree must match the element");
        if c.is_zero() {
            return;
        }
        match self.coords.entry(class) {
            std::collections::btree_map::Entry::Vacant(slot) => {
                slot.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut slot) => {
                *slot.get_mut() += c;
                if slot.get().is_zero() {
                    slot.remove();
                }
            }
        }
    }

    pub fn coeff(&self, class: &TaggedClass) -> Rat {
        self.coords.get(class).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coords(&self) -> &BTreeMap<TaggedClass, Rat> {
        &self.coords
    }

    pub fn is_zero(&self) -> bool {
        self.coords.is_empty()
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.n, other.n);
        let mut out = self.clone();
        for (class, c) in &other.coords {
            out.add_term(class.clone(), c.clone());
        }
        out
    }

    pub fn scale(&self, c: &Rat) -> Self {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Z1Element {
            n: self.n,
            coords: self.coords.iter().map(|(k, v)| (k.clone(), v * c)).collect(),
        }
    }

    /// Expands into the group algebra: each K_{λ,i} becomes its class
    /// sum.
    ///
    /// # Errors
    /// `ResourceGuard` when n exceeds `max_brute_n`.
    pub fn expand(&self, max_brute_n: u32) -> Result<GroupAlgebraElement> {
        if self.n > max_brute_n {
            return Err(Error::ResourceGuard {
                task: "Z1 expansion into the group algebra".into(),
                n: self.n,
                limit: max_brute_n,
            });
        }
        let mut out = GroupAlgebraElement::zero(self.n);
        for pi in Permutation::all(self.n) {
            let c = self.coeff(&pi.tagged_class());
            out.add_term(pi, c);
        }
        Ok(out)
    }
}

/// The members of every tagged class of S_n, from one sweep of the
/// group. Brute-force products and projections reuse this table.
pub struct ClassMembers {
    n: u32,
    members: BTreeMap<TaggedClass, Vec<Permutation>>,
}

impl ClassMembers {
    /// # Errors
    /// `ResourceGuard` when n exceeds `max_brute_n`.
    pub fn build(n: u32, max_brute_n: u32) -> Result<Self> {
        if n > max_brute_n {
            return Err(Error::ResourceGuard {
                task: "tagged-class enumeration".into(),
                n,
                limit: max_brute_n,
            });
        }
        let mut members: BTreeMap<TaggedClass, Vec<Permutation>> =
            tagged_classes(n).into_iter().map(|c| (c, Vec::new())).collect();
        for pi in Permutation::all(n) {
            members.get_mut(&pi.tagged_class()).expect("every class enumerated").push(pi);
        }
        Ok(ClassMembers { n, members })
    }

    pub fn n(&self) -> u32 {
        self.n
    }

    pub fn classes(&self) -> impl Iterator<Item = &TaggedClass> {
        self.members.keys()
    }

    pub fn members(&self, class: &TaggedClass) -> &[Permutation] {
        &self.members[class]
    }
}

/// The structure constants of K_{λ,i}·K_{μ,j} in canonical target order,
/// zeros included: result[(ν,k)] = [K_{ν,k}] K_{λ,i}K_{μ,j}.
pub fn structure_constants(
    table: &ClassMembers,
    left: &TaggedClass,
    right: &TaggedClass,
) -> BTreeMap<TaggedClass, Int> {
    assert_eq!(left.n(), table.n(), "left class over wrong n");
    assert_eq!(right.n(), table.n(), "right class over wrong n");
    let mut out = BTreeMap::new();
    for target in table.classes() {
        let w = class_representative(target);
        let count = table
            .members(left)
            .iter()
            .filter(|p1| p1.inverse().compose(&w).tagged_class() == *right)
            .count();
        out.insert(target.clone(), int(count as i64));
    }
    out
}

/// z1_project: interpret a group-algebra element as a Z₁(n) element.
///
/// # Errors
/// `NotCentralizerElement` when the coefficients are not constant on
/// some tagged class; `ResourceGuard` past the brute limit (the check
/// must visit all of S_n).
pub fn z1_project(a: &GroupAlgebraElement, max_brute_n: u32) -> Result<Z1Element> {
    let n = a.n();
    if n > max_brute_n {
        return Err(Error::ResourceGuard {
            task: "Z1 membership check".into(),
            n,
            limit: max_brute_n,
        });
    }
    let mut seen: BTreeMap<TaggedClass, Rat> = BTreeMap::new();
    for pi in Permutation::all(n) {
        let class = pi.tagged_class();
        let c = a.coeff(&pi);
        match seen.get(&class) {
            None => {
                seen.insert(class, c);
            }
            Some(prev) => {
                if *prev != c {
                    return Err(Error::NotCentralizerElement {
                        n,
                        class: class.to_string(),
                    });
                }
            }
        }
    }
    let mut out = Z1Element::zero(n);
    for (class, c) in seen {
        out.add_term(class, c);
    }
    Ok(out)
}

/// The product of two Z₁(n) elements in K-coordinates, by bilinearity
/// over brute-force basis products.
///
/// # Errors
/// `ResourceGuard` when n exceeds `max_brute_n`.
pub fn z1_multiply(a: &Z1Element, b: &Z1Element, max_brute_n: u32) -> Result<Z1Element> {
    assert_eq!(a.n(), b.n(), "mixed-degree product");
    let n = a.n();
    let mut out = Z1Element::zero(n);
    if a.is_zero() || b.is_zero() {
        return Ok(out);
    }
    let table = ClassMembers::build(n, max_brute_n)?;
    for (left, ca) in a.coords() {
        for (right, cb) in b.coords() {
            let scale = ca * cb;
            for (target, count) in structure_constants(&table, left, right) {
                out.add_term(target, &scale * Rat::from_integer(count));
            }
        }
    }
    Ok(out)
}
