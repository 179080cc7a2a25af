//! Finite MV-algebras presented as products of finite chains.
//!
//! The chain `M_k` is the totally ordered algebra `{0, 1/k, ..., (k-1)/k, 1}`
//! with truncated addition `a (+) b = min(a + b, 1)` and negation
//! `neg a = 1 - a`. Every finite MV-algebra is a product
//! `M_{k_1} x ... x M_{k_n}` of such chains; we store the signature
//! `(k_1, ..., k_n)` and represent an element by its integer numerator
//! vector `(c_1, ..., c_n)` with `0 <= c_i <= k_i`, coordinate `i` standing
//! for the rational `c_i / k_i`. All arithmetic is exact.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::ser::SerializeSeq;
use serde::{Deserialize, Serialize, Serializer};

use crate::error::{Error, Result};

/// Default cap on the number of tuples an exhaustive identity check may
/// enumerate per identity.
pub const DEFAULT_IDENTITY_CAP: u128 = 10_000;

/// A finite MV-algebra `M_{k_1} x ... x M_{k_n}`, `n >= 0`.
///
/// `n = 0` is the terminal one-element algebra.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub struct FiniteMvAlgebra {
    chains: Vec<i64>,
}

impl<'de> Deserialize<'de> for FiniteMvAlgebra {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        struct Raw {
            chains: Vec<i64>,
        }
        let raw = Raw::deserialize(d)?;
        FiniteMvAlgebra::new(raw.chains).map_err(serde::de::Error::custom)
    }
}

impl FiniteMvAlgebra {
    /// Product of chains with the given signature. Every entry must be >= 1.
    pub fn new(chains: Vec<i64>) -> Result<Self> {
        if let Some(&k) = chains.iter().find(|&&k| k < 1) {
            return Err(Error::InvalidChain(k));
        }
        Ok(Self { chains })
    }

    /// The single chain `M_k`.
    pub fn chain(k: i64) -> Result<Self> {
        Self::new(vec![k])
    }

    /// The Boolean algebra `2^n = M_1 x ... x M_1`.
    pub fn boolean(n: usize) -> Self {
        Self { chains: vec![1; n] }
    }

    /// The terminal one-element algebra (empty product).
    pub fn terminal() -> Self {
        Self { chains: Vec::new() }
    }

    pub fn is_terminal(&self) -> bool {
        self.chains.is_empty()
    }

    /// Number of chain factors.
    pub fn dim(&self) -> usize {
        self.chains.len()
    }

    pub fn chains(&self) -> &[i64] {
        &self.chains
    }

    /// Total number of elements, `prod (k_i + 1)`.
    pub fn element_count(&self) -> u128 {
        self.chains.iter().map(|&k| (k + 1) as u128).product()
    }

    /// Element count as `usize`, failing above `cap`.
    pub fn element_count_capped(&self, cap: u128) -> Result<usize> {
        let count = self.element_count();
        if count > cap {
            return Err(Error::CarrierTooLarge { count, cap });
        }
        Ok(count as usize)
    }

    pub fn zero(&self) -> MvElement {
        MvElement { numerators: vec![0; self.dim()] }
    }

    pub fn one(&self) -> MvElement {
        MvElement { numerators: self.chains.clone() }
    }

    /// Build an element from a numerator vector, validating the invariants.
    pub fn element(&self, numerators: Vec<i64>) -> Result<MvElement> {
        if numerators.len() != self.dim() {
            return Err(Error::DimensionMismatch { expected: self.dim(), got: numerators.len() });
        }
        for (i, (&c, &k)) in numerators.iter().zip(&self.chains).enumerate() {
            if c < 0 || c > k {
                return Err(Error::NumeratorOutOfRange { index: i, value: c, chain: k });
            }
        }
        Ok(MvElement { numerators })
    }

    pub fn contains(&self, a: &MvElement) -> bool {
        a.numerators.len() == self.dim()
            && a.numerators.iter().zip(&self.chains).all(|(&c, &k)| 0 <= c && c <= k)
    }

    fn assert_member(&self, a: &MvElement) {
        assert_eq!(
            a.numerators.len(),
            self.dim(),
            "dimension mismatch: element has {} coordinates, algebra {}",
            a.numerators.len(),
            self
        );
        debug_assert!(self.contains(a), "element {:?} not in {}", a.numerators, self);
    }

    /// All elements in ascending lexicographic numerator order.
    pub fn elements(&self) -> Elements<'_> {
        Elements { algebra: self, next: Some(self.zero()) }
    }

    /// Rank of an element in the lexicographic enumeration.
    pub fn index_of(&self, a: &MvElement) -> usize {
        self.assert_member(a);
        let mut idx: usize = 0;
        for (&c, &k) in a.numerators.iter().zip(&self.chains) {
            idx = idx * (k as usize + 1) + c as usize;
        }
        idx
    }

    /// Truncated addition: coordinate `i` of the result is `min(a_i + b_i, k_i)`.
    pub fn oplus(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.assert_member(a);
        self.assert_member(b);
        let numerators = a
            .numerators
            .iter()
            .zip(&b.numerators)
            .zip(&self.chains)
            .map(|((&x, &y), &k)| (x + y).min(k))
            .collect();
        MvElement { numerators }
    }

    /// Negation: coordinate `i` is `k_i - a_i`.
    pub fn neg(&self, a: &MvElement) -> MvElement {
        self.assert_member(a);
        let numerators = a.numerators.iter().zip(&self.chains).map(|(&x, &k)| k - x).collect();
        MvElement { numerators }
    }

    /// `a (.) b = neg(neg a (+) neg b)`: coordinate `i` is `max(a_i + b_i - k_i, 0)`.
    pub fn odot(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.assert_member(a);
        self.assert_member(b);
        let numerators = a
            .numerators
            .iter()
            .zip(&b.numerators)
            .zip(&self.chains)
            .map(|((&x, &y), &k)| (x + y - k).max(0))
            .collect();
        MvElement { numerators }
    }

    /// `a (-) b = a (.) neg b`.
    pub fn ominus(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.odot(a, &self.neg(b))
    }

    /// Lattice meet, coordinatewise minimum.
    pub fn meet(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.assert_member(a);
        self.assert_member(b);
        let numerators =
            a.numerators.iter().zip(&b.numerators).map(|(&x, &y)| x.min(y)).collect();
        MvElement { numerators }
    }

    /// Lattice join, coordinatewise maximum.
    pub fn join(&self, a: &MvElement, b: &MvElement) -> MvElement {
        self.assert_member(a);
        self.assert_member(b);
        let numerators =
            a.numerators.iter().zip(&b.numerators).map(|(&x, &y)| x.max(y)).collect();
        MvElement { numerators }
    }

    /// Coordinatewise order.
    pub fn leq(&self, a: &MvElement, b: &MvElement) -> bool {
        self.assert_member(a);
        self.assert_member(b);
        a.numerators.iter().zip(&b.numerators).all(|(&x, &y)| x <= y)
    }

    /// Untruncated sum of numerators, living in the enveloping group `Z^n`.
    ///
    /// Satisfies `a + b = (a (+) b) + (a (.) b)` coordinatewise.
    pub fn natural_sum(&self, a: &MvElement, b: &MvElement) -> Vec<i64> {
        self.assert_member(a);
        self.assert_member(b);
        a.numerators.iter().zip(&b.numerators).map(|(&x, &y)| x + y).collect()
    }

    /// `m`-fold truncated sum `a (+) ... (+) a`; `m = 0` gives zero.
    pub fn scalar_oplus(&self, m: i64, a: &MvElement) -> MvElement {
        self.assert_member(a);
        assert!(m >= 0, "scalar must be nonnegative");
        let numerators =
            a.numerators.iter().zip(&self.chains).map(|(&x, &k)| (x * m).min(k)).collect();
        MvElement { numerators }
    }

    /// The atoms, i.e. the minimal nonzero elements. These are exactly the
    /// standard-basis elements with numerator 1 at one coordinate; the
    /// terminal algebra has none.
    pub fn atoms(&self) -> Vec<MvElement> {
        (0..self.dim())
            .map(|i| {
                let mut numerators = vec![0; self.dim()];
                numerators[i] = 1;
                MvElement { numerators }
            })
            .collect()
    }

    pub fn is_atom(&self, a: &MvElement) -> bool {
        self.contains(a) && a.numerators.iter().sum::<i64>() == 1
    }

    /// Least `m >= 1` at which iterated truncated addition of a nonzero
    /// element saturates: `(m+1) a = m a`.
    pub fn saturation(&self, a: &MvElement) -> Result<i64> {
        self.assert_member(a);
        if a.is_zero() {
            return Err(Error::NotAMember(a.numerators.clone()));
        }
        let mut acc = a.clone();
        let mut m = 1;
        loop {
            let next = self.oplus(&acc, a);
            if next == acc {
                return Ok(m);
            }
            acc = next;
            m += 1;
        }
    }

    /// Saturation multiplicity of an atom; for the atom at coordinate `i`
    /// this recovers `k_i`.
    pub fn atom_multiplicity(&self, a: &MvElement) -> Result<i64> {
        if !self.is_atom(a) {
            return Err(Error::NotAnAtom(a.numerators.clone()));
        }
        self.saturation(a)
    }

    /// Parse a literal such as `"M3*M1*M2"`. The literal `"1"` denotes the
    /// terminal algebra.
    pub fn parse_literal(s: &str) -> Result<Self> {
        let s = s.trim();
        if s == "1" {
            return Ok(Self::terminal());
        }
        let mut chains = Vec::new();
        for part in s.split('*') {
            let part = part.trim();
            let digits = part
                .strip_prefix('M')
                .ok_or_else(|| Error::Parse(format!("expected chain literal like `M3`, got `{part}`")))?;
            let k: i64 = digits
                .parse()
                .map_err(|_| Error::Parse(format!("expected integer after `M` in `{part}`")))?;
            if k < 1 {
                return Err(Error::InvalidChain(k));
            }
            chains.push(k);
        }
        Self::new(chains)
    }
}

impl fmt::Display for FiniteMvAlgebra {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.chains.is_empty() {
            return write!(f, "1");
        }
        let parts: Vec<String> = self.chains.iter().map(|k| format!("M{k}")).collect();
        write!(f, "{}", parts.join("*"))
    }
}

/// Lexicographic element iterator.
pub struct Elements<'a> {
    algebra: &'a FiniteMvAlgebra,
    next: Option<MvElement>,
}

impl Iterator for Elements<'_> {
    type Item = MvElement;

    fn next(&mut self) -> Option<MvElement> {
        let current = self.next.take()?;
        let mut succ = current.clone();
        let mut carried = true;
        for i in (0..succ.numerators.len()).rev() {
            if succ.numerators[i] < self.algebra.chains[i] {
                succ.numerators[i] += 1;
                for c in succ.numerators[i + 1..].iter_mut() {
                    *c = 0;
                }
                carried = false;
                break;
            }
        }
        if !carried {
            self.next = Some(succ);
        }
        Some(current)
    }
}

/// An element of a finite MV-algebra, stored as its numerator vector.
///
/// The derived `Ord` is the lexicographic order used for deterministic
/// enumeration; the MV lattice order is [`FiniteMvAlgebra::leq`].
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MvElement {
    numerators: Vec<i64>,
}

impl MvElement {
    pub fn numerators(&self) -> &[i64] {
        &self.numerators
    }

    pub fn into_numerators(self) -> Vec<i64> {
        self.numerators
    }

    pub fn is_zero(&self) -> bool {
        self.numerators.iter().all(|&c| c == 0)
    }

    /// Render as a tuple of reduced rationals, e.g. `(1/2, 0)`.
    pub fn value_string(&self, algebra: &FiniteMvAlgebra) -> String {
        let coords: Vec<String> = self
            .numerators
            .iter()
            .zip(algebra.chains())
            .map(|(&c, &k)| {
                let g = num_integer::gcd(c, k);
                if c == 0 {
                    "0".to_string()
                } else if c == k {
                    "1".to_string()
                } else {
                    format!("{}/{}", c / g, k / g)
                }
            })
            .collect();
        if coords.len() == 1 {
            coords.into_iter().next().unwrap()
        } else {
            format!("({})", coords.join(", "))
        }
    }
}

impl Serialize for MvElement {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.numerators.len()))?;
        for c in &self.numerators {
            seq.serialize_element(c)?;
        }
        seq.end()
    }
}

/// Term syntax over the MV signature.
///
/// The primitive connectives are `0`, `(+)`, and `neg`; everything else is
/// macro-expanded by [`MvTerm::expand`] with fixed rules, so evaluation and
/// identity checking only ever trust the primitive operations.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MvTerm {
    Zero,
    One,
    Var(String),
    Neg(Box<MvTerm>),
    Oplus(Box<MvTerm>, Box<MvTerm>),
    Odot(Box<MvTerm>, Box<MvTerm>),
    Ominus(Box<MvTerm>, Box<MvTerm>),
    Meet(Box<MvTerm>, Box<MvTerm>),
    Join(Box<MvTerm>, Box<MvTerm>),
}

impl MvTerm {
    pub fn var(name: &str) -> Self {
        MvTerm::Var(name.to_string())
    }

    /// Expand derived connectives down to `{0, var, neg, (+)}`:
    ///
    /// * `1 = neg 0`
    /// * `a (.) b = neg(neg a (+) neg b)`
    /// * `a (-) b = a (.) neg b`
    /// * `a /\ b = a (.) (neg a (+) b)`
    /// * `a \/ b = (a (-) b) (+) b`
    pub fn expand(&self) -> MvTerm {
        use MvTerm::*;
        match self {
            Zero => Zero,
            One => Neg(Box::new(Zero)),
            Var(v) => Var(v.clone()),
            Neg(t) => Neg(Box::new(t.expand())),
            Oplus(a, b) => Oplus(Box::new(a.expand()), Box::new(b.expand())),
            Odot(a, b) => {
                let (a, b) = (a.expand(), b.expand());
                Neg(Box::new(Oplus(Box::new(Neg(Box::new(a))), Box::new(Neg(Box::new(b))))))
            }
            Ominus(a, b) => {
                Odot(Box::new((**a).clone()), Box::new(Neg(Box::new((**b).clone())))).expand()
            }
            Meet(a, b) => Odot(
                Box::new((**a).clone()),
                Box::new(Oplus(Box::new(Neg(Box::new((**a).clone()))), Box::new((**b).clone()))),
            )
            .expand(),
            Join(a, b) => Oplus(
                Box::new(Ominus(Box::new((**a).clone()), Box::new((**b).clone()))),
                Box::new((**b).clone()),
            )
            .expand(),
        }
    }

    /// Free variables in order of first occurrence.
    pub fn vars(&self) -> Vec<String> {
        fn walk(t: &MvTerm, out: &mut Vec<String>) {
            use MvTerm::*;
            match t {
                Zero | One => {}
                Var(v) => {
                    if !out.iter().any(|w| w == v) {
                        out.push(v.clone());
                    }
                }
                Neg(a) => walk(a, out),
                Oplus(a, b) | Odot(a, b) | Ominus(a, b) | Meet(a, b) | Join(a, b) => {
                    walk(a, out);
                    walk(b, out);
                }
            }
        }
        let mut out = Vec::new();
        walk(self, &mut out);
        out
    }

    /// Evaluate in `algebra` under `env`, after macro expansion.
    pub fn eval(
        &self,
        algebra: &FiniteMvAlgebra,
        env: &BTreeMap<String, MvElement>,
    ) -> Result<MvElement> {
        fn go(
            t: &MvTerm,
            algebra: &FiniteMvAlgebra,
            env: &BTreeMap<String, MvElement>,
        ) -> Result<MvElement> {
            use MvTerm::*;
            match t {
                Zero => Ok(algebra.zero()),
                Var(v) => match env.get(v) {
                    Some(a) if algebra.contains(a) => Ok(a.clone()),
                    Some(a) => Err(Error::DimensionMismatch {
                        expected: algebra.dim(),
                        got: a.numerators.len(),
                    }),
                    None => Err(Error::UnboundVariable(v.clone())),
                },
                Neg(a) => Ok(algebra.neg(&go(a, algebra, env)?)),
                Oplus(a, b) => Ok(algebra.oplus(&go(a, algebra, env)?, &go(b, algebra, env)?)),
                other => unreachable!("unexpanded connective {other:?}"),
            }
        }
        go(&self.expand(), algebra, env)
    }
}

/// Verdict of an exhaustive identity check.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvAxiomReport {
    /// Identities checked, in order.
    pub identities: Vec<&'static str>,
    /// Tuples enumerated over all identities.
    pub tuples_checked: u64,
    /// First violation found, if any.
    pub violation: Option<MvAxiomViolation>,
}

impl MvAxiomReport {
    pub fn passed(&self) -> bool {
        self.violation.is_none()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct MvAxiomViolation {
    pub identity: &'static str,
    pub witness: Vec<MvElement>,
}

/// Check the MV-algebra identities for an algebra's own operations.
pub fn check_mv_axioms(algebra: &FiniteMvAlgebra, cap: u128) -> Result<MvAxiomReport> {
    let elements: Vec<MvElement> = algebra.elements().collect();
    let alg = algebra.clone();
    check_mv_identities_with(
        &elements,
        &move |a, b| alg.oplus(a, b),
        &{
            let alg = algebra.clone();
            move |a| alg.neg(a)
        },
        &algebra.zero(),
        &algebra.one(),
        cap,
    )
}

/// Check the MV-algebra identities against arbitrary operation tables.
///
/// Quantifiers run over `elements`; the check refuses to start an identity
/// whose tuple count exceeds `cap`. Taking the operations as closures lets
/// tests inject faults into a single table entry.
pub fn check_mv_identities_with(
    elements: &[MvElement],
    oplus: &dyn Fn(&MvElement, &MvElement) -> MvElement,
    neg: &dyn Fn(&MvElement) -> MvElement,
    zero: &MvElement,
    one: &MvElement,
    cap: u128,
) -> Result<MvAxiomReport> {
    let n = elements.len() as u128;
    let mut tuples: u64 = 0;

    let check_arity = |arity: u32| -> Result<()> {
        let needed = n.pow(arity);
        if needed > cap {
            return Err(Error::CapExceeded { needed, cap });
        }
        Ok(())
    };

    let identities = vec![
        "oplus-associative",
        "oplus-commutative",
        "zero-neutral",
        "double-negation",
        "one-absorbing",
        "lukasiewicz",
    ];
    let mut report =
        MvAxiomReport { identities: identities.clone(), tuples_checked: 0, violation: None };

    let fail = |identity: &'static str, witness: Vec<MvElement>| MvAxiomViolation {
        identity,
        witness,
    };

    // Unary identities.
    check_arity(1)?;
    for a in elements {
        tuples += 2;
        if &neg(&neg(a)) != a {
            report.tuples_checked = tuples;
            report.violation = Some(fail("double-negation", vec![a.clone()]));
            return Ok(report);
        }
        if &oplus(a, one) != one {
            report.tuples_checked = tuples;
            report.violation = Some(fail("one-absorbing", vec![a.clone()]));
            return Ok(report);
        }
        if &oplus(a, zero) != a {
            report.tuples_checked = tuples;
            report.violation = Some(fail("zero-neutral", vec![a.clone()]));
            return Ok(report);
        }
    }

    // Binary identities.
    check_arity(2)?;
    for a in elements {
        for b in elements {
            tuples += 2;
            if oplus(a, b) != oplus(b, a) {
                report.tuples_checked = tuples;
                report.violation = Some(fail("oplus-commutative", vec![a.clone(), b.clone()]));
                return Ok(report);
            }
            // neg(neg a (+) b) (+) b = neg(neg b (+) a) (+) a
            let lhs = oplus(&neg(&oplus(&neg(a), b)), b);
            let rhs = oplus(&neg(&oplus(&neg(b), a)), a);
            if lhs != rhs {
                report.tuples_checked = tuples;
                report.violation = Some(fail("lukasiewicz", vec![a.clone(), b.clone()]));
                return Ok(report);
            }
        }
    }

    // Associativity.
    check_arity(3)?;
    for a in elements {
        for b in elements {
            let ab = oplus(a, b);
            for c in elements {
                tuples += 1;
                if oplus(&ab, c) != oplus(a, &oplus(b, c)) {
                    report.tuples_checked = tuples;
                    report.violation =
                        Some(fail("oplus-associative", vec![a.clone(), b.clone(), c.clone()]));
                    return Ok(report);
                }
            }
        }
    }

    report.tuples_checked = tuples;
    Ok(report)
}

/// A finitely generated subalgebra, re-presented through its atoms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Subalgebra {
    parent: FiniteMvAlgebra,
    elements: Vec<MvElement>,
    atoms: Vec<MvElement>,
    multiplicities: Vec<i64>,
}

impl Subalgebra {
    pub fn parent(&self) -> &FiniteMvAlgebra {
        &self.parent
    }

    /// Elements in ascending lexicographic order.
    pub fn elements(&self) -> &[MvElement] {
        &self.elements
    }

    /// Minimal nonzero elements, in ascending lexicographic order.
    pub fn atoms(&self) -> &[MvElement] {
        &self.atoms
    }

    /// Saturation multiplicity of each atom, aligned with [`Self::atoms`].
    pub fn multiplicities(&self) -> &[i64] {
        &self.multiplicities
    }

    /// The chain signature recovered from the atoms, as an algebra.
    pub fn signature(&self) -> FiniteMvAlgebra {
        FiniteMvAlgebra { chains: self.multiplicities.clone() }
    }

    pub fn len(&self) -> usize {
        self.elements.len()
    }

    pub fn is_empty(&self) -> bool {
        false
    }

    pub fn contains(&self, a: &MvElement) -> bool {
        self.elements.binary_search(a).is_ok()
    }
}

/// Closure of `gens` together with `0` and `1` under `(+)` and `neg`.
pub fn subalgebra_generated(
    algebra: &FiniteMvAlgebra,
    gens: &[MvElement],
) -> Result<Subalgebra> {
    for g in gens {
        if !algebra.contains(g) {
            return Err(Error::NotAMember(g.numerators().to_vec()));
        }
    }
    let mut closed: BTreeSet<MvElement> = BTreeSet::new();
    closed.insert(algebra.zero());
    closed.extend(gens.iter().cloned());

    let mut frontier: Vec<MvElement> = closed.iter().cloned().collect();
    while !frontier.is_empty() {
        let mut fresh: Vec<MvElement> = Vec::new();
        let mut push = |e: MvElement, closed: &mut BTreeSet<MvElement>| {
            if closed.insert(e.clone()) {
                fresh.push(e);
            }
        };
        let snapshot: Vec<MvElement> = closed.iter().cloned().collect();
        for a in &frontier {
            push(algebra.neg(a), &mut closed);
            for b in &snapshot {
                push(algebra.oplus(a, b), &mut closed);
            }
        }
        frontier = fresh;
    }

    let elements: Vec<MvElement> = closed.into_iter().collect();
    // Atoms of the subalgebra: minimal nonzero within the closure.
    let atoms: Vec<MvElement> = elements
        .iter()
        .filter(|a| {
            !a.is_zero()
                && !elements
                    .iter()
                    .any(|b| !b.is_zero() && b != *a && algebra.leq(b, a))
        })
        .cloned()
        .collect();
    let multiplicities =
        atoms.iter().map(|a| algebra.saturation(a)).collect::<Result<Vec<i64>>>()?;
    Ok(Subalgebra { parent: algebra.clone(), elements, atoms, multiplicities })
}

/// A homomorphism between finite MV-algebras, stored as a full value table
/// in the domain's lexicographic element order. Construction verifies that
/// the table preserves `0`, `neg`, and `(+)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MvHom {
    domain: FiniteMvAlgebra,
    codomain: FiniteMvAlgebra,
    values: Vec<MvElement>,
}

impl MvHom {
    pub fn new(
        domain: FiniteMvAlgebra,
        codomain: FiniteMvAlgebra,
        values: Vec<MvElement>,
    ) -> Result<Self> {
        let size = domain.element_count_capped(1 << 20)?;
        if values.len() != size {
            return Err(Error::PartialTable { expected: size, got: values.len() });
        }
        for v in &values {
            if !codomain.contains(v) {
                return Err(Error::NotAMember(v.numerators().to_vec()));
            }
        }
        let hom = Self { domain, codomain, values };
        hom.verify()?;
        Ok(hom)
    }

    /// Build a table without the homomorphism check. Only for exercising
    /// error paths in this crate's own tests.
    #[cfg(test)]
    pub(crate) fn from_table_unchecked(
        domain: FiniteMvAlgebra,
        codomain: FiniteMvAlgebra,
        values: Vec<MvElement>,
    ) -> Self {
        Self { domain, codomain, values }
    }

    fn verify(&self) -> Result<()> {
        let elements: Vec<MvElement> = self.domain.elements().collect();
        if self.apply(&self.domain.zero()) != &self.codomain.zero() {
            return Err(Error::NotAHomomorphism { law: "zero", witness: vec![] });
        }
        for a in &elements {
            if self.apply(&self.domain.neg(a)) != &self.codomain.neg(self.apply(a)) {
                return Err(Error::NotAHomomorphism {
                    law: "neg",
                    witness: vec![a.numerators().to_vec()],
                });
            }
        }
        for a in &elements {
            for b in &elements {
                let lhs = self.apply(&self.domain.oplus(a, b));
                let rhs = self.codomain.oplus(self.apply(a), self.apply(b));
                if lhs != &rhs {
                    return Err(Error::NotAHomomorphism {
                        law: "oplus",
                        witness: vec![a.numerators().to_vec(), b.numerators().to_vec()],
                    });
                }
            }
        }
        Ok(())
    }

    pub fn identity(algebra: &FiniteMvAlgebra) -> Result<Self> {
        let values = algebra.elements().collect();
        Self::new(algebra.clone(), algebra.clone(), values)
    }

    /// The homomorphism determined by a factor map: codomain factor `j`
    /// reads domain coordinate `factor_map[j]`, scaled from `M_{k_i}` into
    /// `M_{t_j}`. Requires `k_{factor_map[j]}` to divide `t_j`.
    pub fn from_factor_map(
        domain: &FiniteMvAlgebra,
        codomain: &FiniteMvAlgebra,
        factor_map: &[usize],
    ) -> Result<Self> {
        if factor_map.len() != codomain.dim() {
            return Err(Error::DimensionMismatch {
                expected: codomain.dim(),
                got: factor_map.len(),
            });
        }
        for (j, &i) in factor_map.iter().enumerate() {
            if i >= domain.dim() {
                return Err(Error::DimensionMismatch { expected: domain.dim(), got: i });
            }
            let (k, t) = (domain.chains()[i], codomain.chains()[j]);
            if t % k != 0 {
                return Err(Error::Parse(format!(
                    "chain M{k} (factor {i}) does not embed into M{t} (factor {j})"
                )));
            }
        }
        let values: Vec<MvElement> = domain
            .elements()
            .map(|a| {
                let numerators = factor_map
                    .iter()
                    .enumerate()
                    .map(|(j, &i)| {
                        a.numerators()[i] * (codomain.chains()[j] / domain.chains()[i])
                    })
                    .collect();
                MvElement { numerators }
            })
            .collect();
        Self::new(domain.clone(), codomain.clone(), values)
    }

    pub fn domain(&self) -> &FiniteMvAlgebra {
        &self.domain
    }

    pub fn codomain(&self) -> &FiniteMvAlgebra {
        &self.codomain
    }

    pub fn values(&self) -> &[MvElement] {
        &self.values
    }

    pub fn apply(&self, a: &MvElement) -> &MvElement {
        &self.values[self.domain.index_of(a)]
    }

    pub fn is_injective(&self) -> bool {
        let mut seen = BTreeSet::new();
        self.values.iter().all(|v| seen.insert(v.clone()))
    }

    /// Witness for non-injectivity: two domain elements with equal images.
    pub fn collision(&self) -> Option<(MvElement, MvElement)> {
        let mut seen: BTreeMap<MvElement, MvElement> = BTreeMap::new();
        for (a, v) in self.domain.elements().zip(&self.values) {
            if let Some(prev) = seen.get(v) {
                return Some((prev.clone(), a));
            }
            seen.insert(v.clone(), a);
        }
        None
    }
}
