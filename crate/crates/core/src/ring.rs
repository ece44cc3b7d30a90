//! Integral group ring `ZG` with exact coefficients.
//!
//! A [`RingElement`] is a sparse, canonical association from group elements
//! to nonzero [`BigInt`] coefficients. Integer coefficients decide every
//! identity among the generators over any commutative ring of characteristic
//! zero: the generator brackets have integer coefficients and `n·1 ≠ 0` for
//! `n ≠ 0` in such a ring.

use std::collections::BTreeMap;
use std::fmt;
use std::hash::{Hash, Hasher};
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};
use thiserror::Error;

use crate::group::Group;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RingError {
    #[error("operands belong to different groups")]
    MixedGroups,
    #[error("element {index} is out of range for a group of order {order}")]
    IndexOutOfRange { index: usize, order: usize },
}

/// An element `Σ r_g g` of the integral group ring of a borrowed group.
///
/// Terms are kept sorted by element index with no zero coefficients, so
/// structural equality is ring equality.
#[derive(Clone, Debug)]
pub struct RingElement<'g> {
    group: &'g Group,
    terms: Vec<(usize, BigInt)>,
}

fn same_group(a: &Group, b: &Group) -> bool {
    std::ptr::eq(a, b) || a == b
}

impl<'g> RingElement<'g> {
    pub fn zero(group: &'g Group) -> Self {
        RingElement {
            group,
            terms: Vec::new(),
        }
    }

    pub fn one(group: &'g Group) -> Self {
        Self::basis(group, group.identity())
    }

    /// The group element `g` viewed in the ring.
    pub fn basis(group: &'g Group, g: usize) -> Self {
        assert!(g < group.order(), "element {g} out of range");
        RingElement {
            group,
            terms: vec![(g, BigInt::one())],
        }
    }

    /// Sums the given terms; repeated elements accumulate.
    pub fn from_terms<I, C>(group: &'g Group, terms: I) -> Result<Self, RingError>
    where
        I: IntoIterator<Item = (usize, C)>,
        C: Into<BigInt>,
    {
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (g, c) in terms {
            if g >= group.order() {
                return Err(RingError::IndexOutOfRange {
                    index: g,
                    order: group.order(),
                });
            }
            *acc.entry(g).or_default() += c.into();
        }
        Ok(Self::from_map(group, acc))
    }

    fn from_map(group: &'g Group, map: BTreeMap<usize, BigInt>) -> Self {
        RingElement {
            group,
            terms: map.into_iter().filter(|(_, c)| !c.is_zero()).collect(),
        }
    }

    pub fn group(&self) -> &'g Group {
        self.group
    }

    pub fn terms(&self) -> &[(usize, BigInt)] {
        &self.terms
    }

    pub fn support(&self) -> impl Iterator<Item = usize> + '_ {
        self.terms.iter().map(|(g, _)| *g)
    }

    pub fn coefficient(&self, g: usize) -> BigInt {
        match self.terms.binary_search_by_key(&g, |(h, _)| *h) {
            Ok(i) => self.terms[i].1.clone(),
            Err(_) => BigInt::zero(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn check_same(&self, other: &Self) -> Result<(), RingError> {
        if same_group(self.group, other.group) {
            Ok(())
        } else {
            Err(RingError::MixedGroups)
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        while i < self.terms.len() && j < other.terms.len() {
            let (g, a) = &self.terms[i];
            let (h, b) = &other.terms[j];
            match g.cmp(h) {
                std::cmp::Ordering::Less => {
                    out.push((*g, a.clone()));
                    i += 1;
                }
                std::cmp::Ordering::Greater => {
                    out.push((*h, b.clone()));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = a + b;
                    if !c.is_zero() {
                        out.push((*g, c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend_from_slice(&self.terms[i..]);
        out.extend_from_slice(&other.terms[j..]);
        Ok(RingElement {
            group: self.group,
            terms: out,
        })
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self, RingError> {
        self.checked_add(&other.neg_ref())
    }

    fn neg_ref(&self) -> Self {
        RingElement {
            group: self.group,
            terms: self.terms.iter().map(|(g, c)| (*g, -c)).collect(),
        }
    }

    pub fn scale(&self, k: impl Into<BigInt>) -> Self {
        let k = k.into();
        if k.is_zero() {
            return Self::zero(self.group);
        }
        RingElement {
            group: self.group,
            terms: self.terms.iter().map(|(g, c)| (*g, c * &k)).collect(),
        }
    }

    /// Convolution through the Cayley table.
    pub fn checked_mul(&self, other: &Self) -> Result<Self, RingError> {
        self.check_same(other)?;
        let group = self.group;
        let mut acc: BTreeMap<usize, BigInt> = BTreeMap::new();
        for (g, a) in &self.terms {
            for (h, b) in &other.terms {
                *acc.entry(group.mul(*g, *h)).or_default() += a * b;
            }
        }
        Ok(Self::from_map(group, acc))
    }

    /// `ab - ba`.
    pub fn checked_bracket(&self, other: &Self) -> Result<Self, RingError> {
        self.checked_mul(other)?
            .checked_sub(&other.checked_mul(self)?)
    }

    pub fn bracket(&self, other: &Self) -> Self {
        self.checked_bracket(other)
            .expect("bracket of elements from different groups")
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self * other == other * self
    }

    /// The classical involution: the coefficient of `g` moves to `g⁻¹`.
    pub fn star(&self) -> Self {
        let mut terms: Vec<(usize, BigInt)> = self
            .terms
            .iter()
            .map(|(g, c)| (self.group.inv(*g), c.clone()))
            .collect();
        terms.sort_unstable_by_key(|(g, _)| *g);
        RingElement {
            group: self.group,
            terms,
        }
    }

    pub fn is_symmetric(&self) -> bool {
        self.star() == *self
    }

    pub fn is_antisymmetric(&self) -> bool {
        self.star() == -self
    }

    /// `self` or `-self`, whichever has a positive coefficient on its least
    /// support element. Zero maps to zero.
    pub fn sign_normalized(&self) -> Self {
        match self.terms.first() {
            Some((_, c)) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }
}

impl PartialEq for RingElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        same_group(self.group, other.group) && self.terms == other.terms
    }
}

impl Eq for RingElement<'_> {}

impl Hash for RingElement<'_> {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.terms.hash(state);
    }
}

// Operator forms panic on mixed groups; the `checked_*` methods report it.
impl<'g> Add for &RingElement<'g> {
    type Output = RingElement<'g>;
    fn add(self, rhs: Self) -> RingElement<'g> {
        self.checked_add(rhs)
            .expect("sum of elements from different groups")
    }
}

impl<'g> Sub for &RingElement<'g> {
    type Output = RingElement<'g>;
    fn sub(self, rhs: Self) -> RingElement<'g> {
        self.checked_sub(rhs)
            .expect("difference of elements from different groups")
    }
}

impl<'g> Mul for &RingElement<'g> {
    type Output = RingElement<'g>;
    fn mul(self, rhs: Self) -> RingElement<'g> {
        self.checked_mul(rhs)
            .expect("product of elements from different groups")
    }
}

impl<'g> Neg for &RingElement<'g> {
    type Output = RingElement<'g>;
    fn neg(self) -> RingElement<'g> {
        self.neg_ref()
    }
}

impl<'g> Add for RingElement<'g> {
    type Output = RingElement<'g>;
    fn add(self, rhs: Self) -> RingElement<'g> {
        &self + &rhs
    }
}

impl<'g> Sub for RingElement<'g> {
    type Output = RingElement<'g>;
    fn sub(self, rhs: Self) -> RingElement<'g> {
        &self - &rhs
    }
}

impl<'g> Mul for RingElement<'g> {
    type Output = RingElement<'g>;
    fn mul(self, rhs: Self) -> RingElement<'g> {
        &self * &rhs
    }
}

impl<'g> Neg for RingElement<'g> {
    type Output = RingElement<'g>;
    fn neg(self) -> RingElement<'g> {
        self.neg_ref()
    }
}

impl fmt::Display for RingElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (i, (g, c)) in self.terms.iter().enumerate() {
            let label = self.group.label(*g);
            let magnitude = c.abs();
            match (i, c.is_negative()) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            if magnitude.is_one() {
                write!(f, "{label}")?;
            } else {
                write!(f, "{magnitude}*{label}")?;
            }
        }
        Ok(())
    }
}

#[derive(Serialize)]
struct TermRecord<'a> {
    element: &'a str,
    index: usize,
    coeff: String,
}

/// Serialises as a list of `{element, index, coeff}` records, coefficients
/// as decimal strings.
impl Serialize for RingElement<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut seq = serializer.serialize_seq(Some(self.terms.len()))?;
        for (g, c) in &self.terms {
            seq.serialize_element(&TermRecord {
                element: self.group.label(*g),
                index: *g,
                coeff: c.to_string(),
            })?;
        }
        seq.end()
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog;

    #[test]
    fn additive_basics() {
        let g = catalog::cyclic(5);
        let a = RingElement::from_terms(&g, [(1, 2), (3, -1)]).unwrap();
        let zero = RingElement::zero(&g);
        assert_eq!(&a + &zero, a);
        let two_g = RingElement::basis(&g, 2).scale(2);
        assert!((&two_g + &two_g.scale(-1)).is_zero());
        let gh = &RingElement::basis(&g, 1) + &RingElement::basis(&g, 2);
        assert_eq!(
            gh.scale(2),
            &RingElement::basis(&g, 1).scale(2) + &RingElement::basis(&g, 2).scale(2)
        );
        assert!(a.scale(0).is_zero());
    }

    #[test]
    fn from_terms_cancels_and_checks_range() {
        let g = catalog::cyclic(3);
        let x = RingElement::from_terms(&g, [(1, 4), (1, -4), (2, 1)]).unwrap();
        assert_eq!(x.terms().len(), 1);
        assert_eq!(
            RingElement::from_terms(&g, [(3, 1)]),
            Err(RingError::IndexOutOfRange { index: 3, order: 3 })
        );
    }

    #[test]
    fn mixed_groups_are_rejected() {
        let g = catalog::cyclic(3);
        let h = catalog::cyclic(4);
        let a = RingElement::basis(&g, 1);
        let b = RingElement::basis(&h, 1);
        assert_eq!(a.checked_add(&b), Err(RingError::MixedGroups));
        assert_eq!(a.checked_mul(&b), Err(RingError::MixedGroups));
        assert_eq!(a.checked_bracket(&b), Err(RingError::MixedGroups));
        // Equal tables in distinct allocations count as the same group.
        let g2 = catalog::cyclic(3);
        assert!(a.checked_add(&RingElement::basis(&g2, 1)).is_ok());
    }

    #[test]
    fn products_in_q8_and_d8() {
        let q8 = catalog::quaternion(8);
        let e = |l: &str| RingElement::basis(&q8, q8.find(l).unwrap());
        let i = q8.find("i").unwrap();
        assert_eq!(
            &RingElement::basis(&q8, i) * &RingElement::basis(&q8, q8.inv(i)),
            RingElement::one(&q8)
        );
        let lhs = &(&e("i") + &e("-i")) * &(&e("j") + &e("-j"));
        assert_eq!(lhs, (&e("k") + &e("-k")).scale(2));

        let d8 = catalog::dihedral(8);
        let e = |l: &str| RingElement::basis(&d8, d8.find(l).unwrap());
        assert_eq!(&(&e("r") + &e("r^3")) * &e("s"), &e("rs") + &e("r^3s"));
        assert_eq!(e("s").bracket(&e("rs")), &e("r^3") - &e("r"));
    }

    #[test]
    fn star_and_symmetry() {
        let d8 = catalog::dihedral(8);
        let r = d8.find("r").unwrap();
        let s = d8.find("s").unwrap();
        assert_eq!(RingElement::one(&d8).star(), RingElement::one(&d8));
        let a = RingElement::from_terms(&d8, [(r, 2), (s, 3)]).unwrap();
        let expected = RingElement::from_terms(&d8, [(d8.inv(r), 2), (s, 3)]).unwrap();
        assert_eq!(a.star(), expected);

        let g = RingElement::basis(&d8, r);
        let g_inv = RingElement::basis(&d8, d8.inv(r));
        assert!((&g + &g_inv).is_symmetric());
        assert!((&g - &g_inv).is_antisymmetric());
        assert!(RingElement::one(&d8).is_symmetric());
        assert!(!RingElement::one(&d8).is_antisymmetric());
        assert!(RingElement::zero(&d8).is_antisymmetric());
    }

    #[test]
    fn q8_symmetric_brackets_vanish() {
        let q8 = catalog::quaternion(8);
        let e = |l: &str| RingElement::basis(&q8, q8.find(l).unwrap());
        let a = &e("i") + &e("-i");
        let b = &e("j") + &e("-j");
        assert!(a.bracket(&b).is_zero());
        assert!(a.bracket(&a).is_zero());
    }

    #[test]
    fn sign_normalization_and_display() {
        let d8 = catalog::dihedral(8);
        let x = RingElement::from_terms(&d8, [(1, -1), (3, 1)]).unwrap();
        assert_eq!(x.sign_normalized(), -&x);
        assert_eq!((-&x).sign_normalized(), -&x);
        assert_eq!(x.to_string(), "-r + r^3");
        assert_eq!(x.scale(2).to_string(), "-2*r + 2*r^3");
        assert_eq!(RingElement::zero(&d8).to_string(), "0");
        let json = serde_json::to_string(&x).unwrap();
        assert_eq!(
            json,
            r#"[{"element":"r","index":1,"coeff":"-1"},{"element":"r^3","index":3,"coeff":"1"}]"#
        );
    }
}
