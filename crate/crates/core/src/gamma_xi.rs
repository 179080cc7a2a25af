//! Good sequences and the unit-interval / lattice-group translation.
//!
//! A good sequence over an algebra `M` is a finite sequence of elements with
//! `a_i (+) a_{i+1} = a_i`; it encodes a nonnegative element of the
//! enveloping lattice-group of `M`. For a finite algebra with chains
//! `(k_1, ..., k_n)` that group is `Z^n` with unit `(k_1, ..., k_n)`, and
//! the canonical form of a group element is just its integer vector. The
//! generic pair form `[pos, neg]` is kept around so the construction itself
//! can be exercised; it is always reducible to the vector form.

use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::algebra::{FiniteMvAlgebra, MvElement};
use crate::error::{Error, Result};

/// A good sequence, trimmed so the last stored entry is nonzero.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord)]
pub struct GoodSequence {
    algebra: FiniteMvAlgebra,
    entries: Vec<MvElement>,
}

impl GoodSequence {
    /// Validate and trim. The defining condition is checked on consecutive
    /// stored entries; beyond the last entry it holds vacuously.
    pub fn new(algebra: FiniteMvAlgebra, mut entries: Vec<MvElement>) -> Result<Self> {
        for e in &entries {
            if !algebra.contains(e) {
                return Err(Error::NotAMember(e.numerators().to_vec()));
            }
        }
        while entries.last().is_some_and(MvElement::is_zero) {
            entries.pop();
        }
        for i in 0..entries.len().saturating_sub(1) {
            if algebra.oplus(&entries[i], &entries[i + 1]) != entries[i] {
                return Err(Error::NotGoodSequence { index: i });
            }
        }
        // Any interior zero forces all later entries to be zero; trimming
        // already removed those, so the check above suffices.
        Ok(Self { algebra, entries })
    }

    /// The empty sequence, representing 0.
    pub fn empty(algebra: FiniteMvAlgebra) -> Self {
        Self { algebra, entries: Vec::new() }
    }

    /// The sequence `(a)`.
    pub fn singleton(algebra: FiniteMvAlgebra, a: MvElement) -> Self {
        let entries = if a.is_zero() { Vec::new() } else { vec![a] };
        Self { algebra, entries }
    }

    pub fn algebra(&self) -> &FiniteMvAlgebra {
        &self.algebra
    }

    pub fn entries(&self) -> &[MvElement] {
        &self.entries
    }

    pub fn is_zero(&self) -> bool {
        self.entries.is_empty()
    }

    fn entry(&self, i: usize) -> MvElement {
        self.entries.get(i).cloned().unwrap_or_else(|| self.algebra.zero())
    }

    /// Coordinatewise sum of entry numerators: the image in `Z^n` under the
    /// monoid isomorphism onto the nonnegative cone.
    pub fn entry_sum(&self) -> Vec<i64> {
        let mut sum = vec![0i64; self.algebra.dim()];
        for e in &self.entries {
            for (s, &c) in sum.iter_mut().zip(e.numerators()) {
                *s += c;
            }
        }
        sum
    }

    /// Good-sequence addition:
    /// `c_i = a_i (+) (a_{i-1} (.) b_1) (+) ... (+) (a_1 (.) b_{i-1}) (+) b_i`.
    pub fn add(&self, other: &GoodSequence) -> Result<GoodSequence> {
        if self.algebra != other.algebra {
            return Err(Error::ParentMismatch);
        }
        let alg = &self.algebra;
        let len = self.entries.len() + other.entries.len();
        let mut out = Vec::with_capacity(len);
        for i in 1..=len {
            let mut c = alg.oplus(&self.entry(i - 1), &other.entry(i - 1));
            for j in 1..i {
                // a_{i-j} (.) b_j with 1-based indexing
                let t = alg.odot(&self.entry(i - j - 1), &other.entry(j - 1));
                c = alg.oplus(&c, &t);
            }
            out.push(c);
        }
        GoodSequence::new(alg.clone(), out)
    }
}

impl Serialize for GoodSequence {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.entries.len()))?;
        for e in &self.entries {
            seq.serialize_element(e)?;
        }
        seq.end()
    }
}

/// Does `entries` form a good sequence over `algebra` after trimming?
pub fn is_good_sequence(algebra: &FiniteMvAlgebra, entries: &[MvElement]) -> Result<bool> {
    for e in entries {
        if e.numerators().len() != algebra.dim() {
            return Err(Error::DimensionMismatch {
                expected: algebra.dim(),
                got: e.numerators().len(),
            });
        }
        if !algebra.contains(e) {
            return Err(Error::NotAMember(e.numerators().to_vec()));
        }
    }
    match GoodSequence::new(algebra.clone(), entries.to_vec()) {
        Ok(_) => Ok(true),
        Err(Error::NotGoodSequence { .. }) => Ok(false),
        Err(e) => Err(e),
    }
}

/// The unique good sequence whose entries sum to `v` in `Z^n`: greedily
/// truncate by the unit and recurse on the remainder.
pub fn g_decompose(algebra: &FiniteMvAlgebra, v: &[i64]) -> Result<GoodSequence> {
    if v.len() != algebra.dim() {
        return Err(Error::DimensionMismatch { expected: algebra.dim(), got: v.len() });
    }
    if let Some((i, &value)) = v.iter().enumerate().find(|(_, &x)| x < 0) {
        return Err(Error::NegativeCoordinate { index: i, value });
    }
    let mut rest: Vec<i64> = v.to_vec();
    let mut entries = Vec::new();
    while rest.iter().any(|&x| x > 0) {
        let head: Vec<i64> =
            rest.iter().zip(algebra.chains()).map(|(&x, &k)| x.min(k)).collect();
        for (r, &h) in rest.iter_mut().zip(&head) {
            *r -= h;
        }
        entries.push(algebra.element(head).expect("truncation stays in range"));
    }
    GoodSequence::new(algebra.clone(), entries)
}

/// An element of the enveloping unital lattice-group of a finite algebra.
///
/// `Pair` is the generic form, an equivalence class `[pos, neg]` of ordered
/// pairs of good sequences under cross-addition. `Vector` is the canonical
/// form for finite algebras: an integer vector in `Z^n` with unit the chain
/// signature. Lattice structure (meet, join, order) is only exposed on the
/// vector form.
#[derive(Debug, Clone)]
pub enum XiElement {
    Pair { pos: GoodSequence, neg: GoodSequence },
    Vector { algebra: FiniteMvAlgebra, coords: Vec<i64> },
}

impl XiElement {
    pub fn pair(pos: GoodSequence, neg: GoodSequence) -> Result<Self> {
        if pos.algebra() != neg.algebra() {
            return Err(Error::ParentMismatch);
        }
        Ok(XiElement::Pair { pos, neg })
    }

    pub fn vector(algebra: FiniteMvAlgebra, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != algebra.dim() {
            return Err(Error::DimensionMismatch { expected: algebra.dim(), got: coords.len() });
        }
        Ok(XiElement::Vector { algebra, coords })
    }

    pub fn zero(algebra: FiniteMvAlgebra) -> Self {
        let coords = vec![0; algebra.dim()];
        XiElement::Vector { algebra, coords }
    }

    pub fn algebra(&self) -> &FiniteMvAlgebra {
        match self {
            XiElement::Pair { pos, .. } => pos.algebra(),
            XiElement::Vector { algebra, .. } => algebra,
        }
    }

    /// The unit of the group, i.e. the chain signature.
    pub fn unit(&self) -> Vec<i64> {
        self.algebra().chains().to_vec()
    }

    /// Reduce to the integer vector `sum(pos) - sum(neg)`.
    pub fn canonical_vector(&self) -> Vec<i64> {
        match self {
            XiElement::Pair { pos, neg } => {
                let p = pos.entry_sum();
                let n = neg.entry_sum();
                p.iter().zip(&n).map(|(&a, &b)| a - b).collect()
            }
            XiElement::Vector { coords, .. } => coords.clone(),
        }
    }

    pub fn to_canonical(&self) -> XiElement {
        XiElement::Vector { algebra: self.algebra().clone(), coords: self.canonical_vector() }
    }

    /// Group addition: pairs add componentwise, vectors coordinatewise,
    /// mixed forms reduce to the vector form first.
    pub fn add(&self, other: &XiElement) -> Result<XiElement> {
        if self.algebra() != other.algebra() {
            return Err(Error::ParentMismatch);
        }
        match (self, other) {
            (XiElement::Pair { pos: p1, neg: n1 }, XiElement::Pair { pos: p2, neg: n2 }) => {
                XiElement::pair(p1.add(p2)?, n1.add(n2)?)
            }
            (XiElement::Vector { algebra, coords: a }, XiElement::Vector { coords: b, .. }) => {
                let coords = a.iter().zip(b).map(|(&x, &y)| x + y).collect();
                Ok(XiElement::Vector { algebra: algebra.clone(), coords })
            }
            _ => self.to_canonical().add(&other.to_canonical()),
        }
    }

    /// Group inverse: swap the pair, or negate the vector.
    pub fn negated(&self) -> XiElement {
        match self {
            XiElement::Pair { pos, neg } => {
                XiElement::Pair { pos: neg.clone(), neg: pos.clone() }
            }
            XiElement::Vector { algebra, coords } => XiElement::Vector {
                algebra: algebra.clone(),
                coords: coords.iter().map(|&x| -x).collect(),
            },
        }
    }

    pub fn sub(&self, other: &XiElement) -> Result<XiElement> {
        self.add(&other.negated())
    }

    /// Coordinatewise meet; defined only on the canonical vector form.
    pub fn meet(&self, other: &XiElement) -> Result<XiElement> {
        match (self, other) {
            (XiElement::Vector { algebra, coords: a }, XiElement::Vector { coords: b, .. }) => {
                if self.algebra() != other.algebra() {
                    return Err(Error::ParentMismatch);
                }
                let coords = a.iter().zip(b).map(|(&x, &y)| x.min(y)).collect();
                Ok(XiElement::Vector { algebra: algebra.clone(), coords })
            }
            _ => Err(Error::GenericFormOrder),
        }
    }

    /// Coordinatewise join; defined only on the canonical vector form.
    pub fn join(&self, other: &XiElement) -> Result<XiElement> {
        match (self, other) {
            (XiElement::Vector { algebra, coords: a }, XiElement::Vector { coords: b, .. }) => {
                if self.algebra() != other.algebra() {
                    return Err(Error::ParentMismatch);
                }
                let coords = a.iter().zip(b).map(|(&x, &y)| x.max(y)).collect();
                Ok(XiElement::Vector { algebra: algebra.clone(), coords })
            }
            _ => Err(Error::GenericFormOrder),
        }
    }
}

impl Serialize for XiElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        match self {
            XiElement::Pair { pos, neg } => {
                let mut st = s.serialize_struct("XiElement", 2)?;
                st.serialize_field("pos", pos)?;
                st.serialize_field("neg", neg)?;
                st.end()
            }
            XiElement::Vector { algebra, coords } => {
                let mut st = s.serialize_struct("XiElement", 2)?;
                st.serialize_field("vector", coords)?;
                st.serialize_field("unit", algebra.chains())?;
                st.end()
            }
        }
    }
}

/// Equality in the group: cross-addition on pairs, vector comparison on
/// canonical forms, reduction on mixed forms.
pub fn xi_equal(x: &XiElement, y: &XiElement) -> Result<bool> {
    if x.algebra() != y.algebra() {
        return Err(Error::ParentMismatch);
    }
    match (x, y) {
        (XiElement::Pair { pos: a, neg: b }, XiElement::Pair { pos: a2, neg: b2 }) => {
            Ok(a.add(b2)? == a2.add(b)?)
        }
        (XiElement::Vector { coords: a, .. }, XiElement::Vector { coords: b, .. }) => Ok(a == b),
        _ => Ok(x.canonical_vector() == y.canonical_vector()),
    }
}

/// Embed an algebra element into the group: the class `[(a), (0)]`, whose
/// canonical vector is the numerator vector of `a`.
pub fn phi(algebra: &FiniteMvAlgebra, a: &MvElement) -> XiElement {
    assert!(algebra.contains(a), "element does not belong to the algebra");
    XiElement::Pair {
        pos: GoodSequence::singleton(algebra.clone(), a.clone()),
        neg: GoodSequence::empty(algebra.clone()),
    }
}

/// Decompose an arbitrary integer vector into positive and negative parts:
/// `(g(v+), g(v-))` with `v+ = v join 0` and `v- = (-v) join 0`.
pub fn epsilon(algebra: &FiniteMvAlgebra, v: &[i64]) -> Result<(GoodSequence, GoodSequence)> {
    if v.len() != algebra.dim() {
        return Err(Error::DimensionMismatch { expected: algebra.dim(), got: v.len() });
    }
    let pos: Vec<i64> = v.iter().map(|&x| x.max(0)).collect();
    let neg: Vec<i64> = v.iter().map(|&x| (-x).max(0)).collect();
    Ok((g_decompose(algebra, &pos)?, g_decompose(algebra, &neg)?))
}

/// The unit interval of `(Z^n, k)`: the product-of-chains algebra with
/// signature `k`. Every unit coordinate must be strictly positive.
pub fn gamma_of(unit: &[i64]) -> Result<FiniteMvAlgebra> {
    FiniteMvAlgebra::new(unit.to_vec())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn alg(lit: &str) -> FiniteMvAlgebra {
        FiniteMvAlgebra::parse_literal(lit).unwrap()
    }

    fn el(a: &FiniteMvAlgebra, nums: &[i64]) -> MvElement {
        a.element(nums.to_vec()).unwrap()
    }

    fn gs(a: &FiniteMvAlgebra, entries: &[&[i64]]) -> GoodSequence {
        GoodSequence::new(a.clone(), entries.iter().map(|n| el(a, n)).collect()).unwrap()
    }

    #[test]
    fn good_sequence_recognition() {
        let m2 = alg("M2");
        assert!(is_good_sequence(&m2, &[el(&m2, &[2]), el(&m2, &[1])]).unwrap());
        assert!(!is_good_sequence(&m2, &[el(&m2, &[1]), el(&m2, &[1])]).unwrap());
        assert!(is_good_sequence(&m2, &[]).unwrap());
        // Trailing zeros are fine after trimming.
        assert!(is_good_sequence(&m2, &[el(&m2, &[1]), el(&m2, &[0])]).unwrap());
        // Dimension errors are reported, not swallowed.
        let b2 = alg("M1*M1");
        assert!(is_good_sequence(&m2, &[el(&b2, &[1, 0])]).is_err());
    }

    #[test]
    fn addition_frozen_examples() {
        // Oracle: entry sums add like integers, and a good sequence is
        // determined by its entry sum. 1 + 1 = 2 over unit 2 gives (1);
        // 2 + 1 = 3 gives (1, 1/2).
        let m2 = alg("M2");
        let half = gs(&m2, &[&[1]]);
        let one = gs(&m2, &[&[2]]);
        assert_eq!(half.add(&half).unwrap(), one);
        assert_eq!(one.add(&half).unwrap(), gs(&m2, &[&[2], &[1]]));
        // Neutral element.
        let empty = GoodSequence::empty(m2.clone());
        for s in [&half, &one, &empty] {
            assert_eq!(&s.add(&empty).unwrap(), s);
        }
    }

    #[test]
    fn addition_matches_integer_addition() {
        let a = alg("M2*M3");
        for v in 0..30i64 {
            for w in 0..30i64 {
                let x = [v % 5, v / 5];
                let y = [w % 5, w / 5];
                let s = g_decompose(&a, &x).unwrap();
                let t = g_decompose(&a, &y).unwrap();
                let sum = s.add(&t).unwrap();
                let expected: Vec<i64> = x.iter().zip(&y).map(|(&p, &q)| p + q).collect();
                assert_eq!(sum.entry_sum(), expected);
            }
        }
    }

    #[test]
    fn decomposition_examples() {
        let m2 = alg("M2");
        assert_eq!(g_decompose(&m2, &[3]).unwrap(), gs(&m2, &[&[2], &[1]]));
        assert!(g_decompose(&m2, &[0]).unwrap().is_zero());
        let a = alg("M1*M2");
        assert_eq!(g_decompose(&a, &[1, 3]).unwrap(), gs(&a, &[&[1, 2], &[0, 1]]));
        assert_eq!(
            g_decompose(&m2, &[-1]),
            Err(Error::NegativeCoordinate { index: 0, value: -1 })
        );
    }

    #[test]
    fn phi_examples() {
        let m2 = alg("M2");
        assert_eq!(phi(&m2, &el(&m2, &[1])).canonical_vector(), vec![1]);
        assert_eq!(phi(&m2, &m2.zero()).canonical_vector(), vec![0]);
        let a = alg("M2*M3");
        assert_eq!(phi(&a, &el(&a, &[1, 1])).canonical_vector(), vec![1, 1]);
    }

    #[test]
    fn epsilon_examples() {
        let m2 = alg("M2");
        let (p, n) = epsilon(&m2, &[3]).unwrap();
        assert_eq!(p, gs(&m2, &[&[2], &[1]]));
        assert!(n.is_zero());

        let (p, n) = epsilon(&m2, &[0]).unwrap();
        assert!(p.is_zero() && n.is_zero());

        let b2 = alg("M1*M1");
        let (p, n) = epsilon(&b2, &[1, -1]).unwrap();
        assert_eq!(p, gs(&b2, &[&[1, 0]]));
        assert_eq!(n, gs(&b2, &[&[0, 1]]));
    }

    #[test]
    fn xi_equality_examples() {
        let m2 = alg("M2");
        let half = gs(&m2, &[&[1]]);
        let one = gs(&m2, &[&[2]]);
        let empty = GoodSequence::empty(m2.clone());

        // [ (1/2), () ] vs [ (1), (1/2) ]: cross-addition gives
        // (1/2)+(1/2) = (1) on one side and (1)+() = (1) on the other.
        let x = XiElement::pair(half.clone(), empty.clone()).unwrap();
        let y = XiElement::pair(one.clone(), half.clone()).unwrap();
        assert!(xi_equal(&x, &y).unwrap());
        assert_eq!(x.canonical_vector(), vec![1]);
        assert_eq!(y.canonical_vector(), vec![1]);

        // [s, s] cancels to zero for any good s.
        let zero = XiElement::pair(empty.clone(), empty.clone()).unwrap();
        for s in [&half, &one] {
            let cancel = XiElement::pair(s.clone(), s.clone()).unwrap();
            assert!(xi_equal(&cancel, &zero).unwrap());
        }

        // [(1), ()] vs [(1/2), ()] differ.
        let w = XiElement::pair(one.clone(), empty.clone()).unwrap();
        assert!(!xi_equal(&w, &x).unwrap());

        // Parent mismatch is an error.
        let other = XiElement::zero(alg("M3"));
        assert_eq!(xi_equal(&w, &other), Err(Error::ParentMismatch));
    }

    #[test]
    fn generic_and_canonical_equality_agree() {
        let m3 = alg("M3");
        let seqs: Vec<GoodSequence> = {
            let mut out = vec![GoodSequence::empty(m3.clone())];
            for a in m3.elements() {
                for b in m3.elements() {
                    if let Ok(s) = GoodSequence::new(m3.clone(), vec![a.clone(), b.clone()]) {
                        out.push(s);
                    }
                }
            }
            out.sort();
            out.dedup();
            out
        };
        for p1 in &seqs {
            for n1 in &seqs {
                for p2 in &seqs {
                    for n2 in &seqs {
                        let x = XiElement::pair(p1.clone(), n1.clone()).unwrap();
                        let y = XiElement::pair(p2.clone(), n2.clone()).unwrap();
                        let generic = xi_equal(&x, &y).unwrap();
                        let canonical = x.canonical_vector() == y.canonical_vector();
                        assert_eq!(generic, canonical);
                    }
                }
            }
        }
    }

    #[test]
    fn gamma_of_examples() {
        assert_eq!(gamma_of(&[2]).unwrap(), alg("M2"));
        assert_eq!(gamma_of(&[1, 1]).unwrap(), alg("M1*M1"));
        assert_eq!(gamma_of(&[2, 3]).unwrap(), alg("M2*M3"));
        assert_eq!(gamma_of(&[0]), Err(Error::InvalidChain(0)));
    }

    #[test]
    fn group_operations() {
        let a = alg("M2*M3");
        let x = XiElement::vector(a.clone(), vec![3, -1]).unwrap();
        let y = XiElement::vector(a.clone(), vec![-1, 4]).unwrap();
        assert_eq!(x.add(&y).unwrap().canonical_vector(), vec![2, 3]);
        assert_eq!(x.sub(&y).unwrap().canonical_vector(), vec![4, -5]);
        assert_eq!(x.meet(&y).unwrap().canonical_vector(), vec![-1, -1]);
        assert_eq!(x.join(&y).unwrap().canonical_vector(), vec![3, 4]);
        assert_eq!(x.unit(), vec![2, 3]);

        // Lattice operations refuse the generic form.
        let p = phi(&a, &a.one());
        assert!(matches!(p.meet(&x), Err(Error::GenericFormOrder)));

        // Mixed addition reduces to vectors.
        let s = p.add(&x).unwrap();
        assert_eq!(s.canonical_vector(), vec![5, 2]);
    }
}
