//! States between finite MV-algebras.
//!
//! A state is a unit-preserving map that is additive on disjoint pairs
//! (`a (.) b = 0`), addition read in the enveloping group of the codomain.
//! Equivalently it satisfies the three equations
//!
//! * A1: `s(a (+) b) = s(a) (+) s(b /\ neg a)`
//! * A2: `s(neg a) = neg s(a)`
//! * A3: `s(1) = 1`
//!
//! Both characterizations are implemented independently; agreement of the
//! two predicates over whole function spaces is checked by
//! [`prop34_equivalence_harness`]. A state of a finite algebra is
//! determined by its atom values, which must satisfy the partition-of-unity
//! condition `sum k_i s(a_i) = 1`; that gives extension and enumeration.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::algebra::{FiniteMvAlgebra, MvElement, MvHom};
use crate::error::{Error, Result};

/// Largest carrier a state table will materialize.
const TABLE_CAP: u128 = 1 << 20;

/// A total map between finite MV-algebras, stored as a full value table in
/// the domain's lexicographic element order.
///
/// The table itself carries no conformance promise; run
/// [`check_state_axioms`] or [`check_state_additive`] to classify it.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StateTable {
    domain: FiniteMvAlgebra,
    codomain: FiniteMvAlgebra,
    values: Vec<MvElement>,
}

impl StateTable {
    pub fn new(
        domain: FiniteMvAlgebra,
        codomain: FiniteMvAlgebra,
        values: Vec<MvElement>,
    ) -> Result<Self> {
        let size = domain.element_count_capped(TABLE_CAP)?;
        if values.len() != size {
            return Err(Error::PartialTable { expected: size, got: values.len() });
        }
        for v in &values {
            if !codomain.contains(v) {
                return Err(Error::NotAMember(v.numerators().to_vec()));
            }
        }
        Ok(Self { domain, codomain, values })
    }

    pub fn identity(algebra: &FiniteMvAlgebra) -> Result<Self> {
        let values = algebra.elements().collect();
        Self::new(algebra.clone(), algebra.clone(), values)
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

    pub fn value(&self, a: &MvElement) -> &MvElement {
        &self.values[self.domain.index_of(a)]
    }

    /// Values at the atoms of the domain, in atom order.
    pub fn atom_values(&self) -> Vec<MvElement> {
        self.domain.atoms().iter().map(|a| self.value(a).clone()).collect()
    }
}

/// Witness for a failed state predicate.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct StateViolation {
    /// `"A1"`, `"A2"`, `"A3"`, `"unit"`, or `"additivity"`.
    pub axiom: &'static str,
    pub witness: Vec<MvElement>,
}

pub type Conformance = std::result::Result<(), StateViolation>;

/// Check the equational presentation: A1 over all pairs, A2 over all
/// elements, A3. Returns the first violation in that order.
pub fn check_state_axioms(t: &StateTable) -> Conformance {
    let elements: Vec<MvElement> = t.domain.elements().collect();
    check_state_axioms_on(t, &elements)
}

fn check_state_axioms_on(t: &StateTable, elements: &[MvElement]) -> Conformance {
    let dom = &t.domain;
    let cod = &t.codomain;

    for a in elements {
        let sa = t.value(a);
        let not_a = dom.neg(a);
        for b in elements {
            // A1: s(a (+) b) = s(a) (+) s(b /\ neg a)
            let lhs = t.value(&dom.oplus(a, b));
            let rhs = cod.oplus(sa, t.value(&dom.meet(b, &not_a)));
            if lhs != &rhs {
                return Err(StateViolation { axiom: "A1", witness: vec![a.clone(), b.clone()] });
            }
        }
    }
    for a in elements {
        // A2: s(neg a) = neg s(a)
        if t.value(&dom.neg(a)) != &cod.neg(t.value(a)) {
            return Err(StateViolation { axiom: "A2", witness: vec![a.clone()] });
        }
    }
    // A3: s(1) = 1
    if t.value(&dom.one()) != &cod.one() {
        return Err(StateViolation { axiom: "A3", witness: vec![dom.one()] });
    }
    Ok(())
}

/// Check the additive definition: `s(1) = 1`, and for every disjoint pair
/// (`a (.) b = 0`) the numerator vectors satisfy
/// `s(a) + s(b) = s(a (+) b)` in the enveloping group of the codomain.
pub fn check_state_additive(t: &StateTable) -> Conformance {
    let elements: Vec<MvElement> = t.domain.elements().collect();
    check_state_additive_on(t, &elements)
}

fn check_state_additive_on(t: &StateTable, elements: &[MvElement]) -> Conformance {
    let dom = &t.domain;
    let cod = &t.codomain;
    if t.value(&dom.one()) != &cod.one() {
        return Err(StateViolation { axiom: "unit", witness: vec![dom.one()] });
    }
    for a in elements {
        for b in elements {
            if !dom.odot(a, b).is_zero() {
                continue;
            }
            let sum = cod.natural_sum(t.value(a), t.value(b));
            if sum != t.value(&dom.oplus(a, b)).numerators() {
                return Err(StateViolation {
                    axiom: "additivity",
                    witness: vec![a.clone(), b.clone()],
                });
            }
        }
    }
    Ok(())
}

pub fn is_state(t: &StateTable) -> bool {
    check_state_axioms(t).is_ok()
}

/// How a function space was covered by the equivalence harness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum HarnessMode {
    Exhaustive,
    Sampled,
}

#[derive(Debug, Clone)]
pub struct HarnessOptions {
    /// Exhaust the function space up to this many candidates.
    pub exhaustive_cap: u128,
    /// Sample size above the cap.
    pub sample_size: u64,
    pub seed: u64,
}

impl Default for HarnessOptions {
    fn default() -> Self {
        Self { exhaustive_cap: 2_000_000, sample_size: 100_000, seed: 0x5eed }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Prop34Report {
    pub domain: FiniteMvAlgebra,
    pub codomain: FiniteMvAlgebra,
    /// `|N| ^ |A|` as a decimal string, which may exceed u64.
    pub total_functions: String,
    pub functions_checked: u64,
    pub mode: HarnessMode,
    pub seed: Option<u64>,
    /// Functions classified as states (by both predicates).
    pub state_count: u64,
    /// First function on which the two predicates disagree, if any.
    pub mismatch: Option<Vec<MvElement>>,
}

impl Prop34Report {
    pub fn predicates_agree(&self) -> bool {
        self.mismatch.is_none()
    }
}

/// Classify every total function `A -> N` (or a seeded uniform sample when
/// the space exceeds the cap) by both state predicates and verify that the
/// classifications coincide.
pub fn prop34_equivalence_harness(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
    opts: &HarnessOptions,
) -> Result<Prop34Report> {
    let dom_size = domain.element_count_capped(TABLE_CAP)?;
    let cod_elements: Vec<MvElement> = codomain.elements().collect();
    let n = cod_elements.len() as u128;
    let total: u128 = n
        .checked_pow(u32::try_from(dom_size).map_err(|_| Error::InfeasibleSize { size: u128::MAX })?)
        .ok_or(Error::InfeasibleSize { size: u128::MAX })?;

    let dom_elements: Vec<MvElement> = domain.elements().collect();
    let mut state_count: u64 = 0;
    let mut checked: u64 = 0;
    let mut mismatch = None;

    // Values are drawn from the codomain's own element list, so the table
    // invariants hold by construction; the table is reused across
    // candidate functions to keep the sweep allocation-free.
    let mut table = StateTable {
        domain: domain.clone(),
        codomain: codomain.clone(),
        values: vec![codomain.zero(); dom_size],
    };
    let classify =
        |table: &StateTable, mismatch: &mut Option<Vec<MvElement>>| -> bool {
            let axioms = check_state_axioms_on(table, &dom_elements).is_ok();
            let additive = check_state_additive_on(table, &dom_elements).is_ok();
            if axioms != additive && mismatch.is_none() {
                *mismatch = Some(table.values().to_vec());
            }
            axioms && additive
        };

    let mode;
    let seed;
    if total <= opts.exhaustive_cap {
        mode = HarnessMode::Exhaustive;
        seed = None;
        let mut digits = vec![0usize; dom_size];
        loop {
            for (slot, &digit) in table.values.iter_mut().zip(&digits) {
                slot.clone_from(&cod_elements[digit]);
            }
            if classify(&table, &mut mismatch) {
                state_count += 1;
            }
            checked += 1;
            let mut pos = dom_size;
            loop {
                if pos == 0 {
                    break;
                }
                pos -= 1;
                digits[pos] += 1;
                if digits[pos] < cod_elements.len() {
                    break;
                }
                digits[pos] = 0;
            }
            if digits.iter().all(|&d| d == 0) {
                break;
            }
        }
    } else {
        mode = HarnessMode::Sampled;
        seed = Some(opts.seed);
        let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
        for _ in 0..opts.sample_size {
            for slot in table.values.iter_mut() {
                slot.clone_from(&cod_elements[rng.gen_range(0..cod_elements.len())]);
            }
            if classify(&table, &mut mismatch) {
                state_count += 1;
            }
            checked += 1;
        }
    }

    Ok(Prop34Report {
        domain: domain.clone(),
        codomain: codomain.clone(),
        total_functions: total.to_string(),
        functions_checked: checked,
        mode,
        seed,
        state_count,
        mismatch,
    })
}

/// Linear extension of atom values over the whole carrier: an element with
/// numerators `c` maps to `sum c_i * vec(s(a_i))`, computed in the
/// enveloping group. Callers must have checked the partition-of-unity
/// condition, which confines every image to the unit interval.
fn extend_linear(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
    atom_values: &[MvElement],
) -> StateTable {
    let m = codomain.dim();
    let values: Vec<MvElement> = domain
        .elements()
        .map(|a| {
            let mut acc = vec![0i64; m];
            for (&c, v) in a.numerators().iter().zip(atom_values) {
                for (s, &x) in acc.iter_mut().zip(v.numerators()) {
                    *s += c * x;
                }
            }
            codomain.element(acc).expect("partition of unity confines values to the interval")
        })
        .collect();
    StateTable { domain: domain.clone(), codomain: codomain.clone(), values }
}

/// Sum `k_i * vec(atom_values[i])` in the enveloping group of the codomain.
fn weighted_atom_sum(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
    atom_values: &[MvElement],
) -> Vec<i64> {
    let mut sum = vec![0i64; codomain.dim()];
    for (&k, v) in domain.chains().iter().zip(atom_values) {
        for (s, &x) in sum.iter_mut().zip(v.numerators()) {
            *s += k * x;
        }
    }
    sum
}

/// The unique state with the given atom values, when the partition-of-unity
/// condition `sum k_i s(a_i) = 1` holds; otherwise an error carrying the
/// actual sum.
pub fn extend_from_atoms(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
    atom_values: &[MvElement],
) -> Result<StateTable> {
    if atom_values.len() != domain.dim() {
        return Err(Error::DimensionMismatch { expected: domain.dim(), got: atom_values.len() });
    }
    for v in atom_values {
        if !codomain.contains(v) {
            return Err(Error::NotAMember(v.numerators().to_vec()));
        }
    }
    let sum = weighted_atom_sum(domain, codomain, atom_values);
    if sum != codomain.chains() {
        return Err(Error::PartitionOfUnityViolation {
            sum,
            unit: codomain.chains().to_vec(),
        });
    }
    Ok(extend_linear(domain, codomain, atom_values))
}

/// All states `domain -> codomain`, enumerated by atom-value tuples in
/// ascending lexicographic numerator order. Complete and duplicate-free:
/// a state is determined by its atom values, and the recursion visits every
/// tuple satisfying the partition-of-unity condition exactly once.
pub fn enumerate_states(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
) -> Result<Vec<StateTable>> {
    domain.element_count_capped(TABLE_CAP)?;
    let cod_elements: Vec<MvElement> = codomain.elements().collect();
    let unit = codomain.chains().to_vec();
    let n = domain.dim();
    let mut out = Vec::new();
    let mut chosen: Vec<MvElement> = Vec::with_capacity(n);

    fn recurse(
        domain: &FiniteMvAlgebra,
        codomain: &FiniteMvAlgebra,
        cod_elements: &[MvElement],
        remaining: &[i64],
        i: usize,
        chosen: &mut Vec<MvElement>,
        out: &mut Vec<StateTable>,
    ) {
        if i == domain.dim() {
            if remaining.iter().all(|&r| r == 0) {
                out.push(extend_linear(domain, codomain, chosen));
            }
            return;
        }
        let k = domain.chains()[i];
        for v in cod_elements {
            // k * vec(v) must fit under what is left of the unit.
            if v.numerators().iter().zip(remaining).any(|(&x, &r)| k * x > r) {
                continue;
            }
            let next: Vec<i64> = remaining
                .iter()
                .zip(v.numerators())
                .map(|(&r, &x)| r - k * x)
                .collect();
            chosen.push(v.clone());
            recurse(domain, codomain, cod_elements, &next, i + 1, chosen, out);
            chosen.pop();
        }
    }

    recurse(domain, codomain, &cod_elements, &unit, 0, &mut chosen, &mut out);
    Ok(out)
}

/// The matrix of the unique extension of a state to the enveloping groups:
/// column `i` is the numerator vector of `t(atom_i)`. It has nonnegative
/// entries, carries the domain unit to the codomain unit, and restricts
/// back to `t` on the unit intervals.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct XiStateMatrix {
    /// `codomain.dim() x domain.dim()`, acting on numerator vectors.
    pub matrix: Vec<Vec<i64>>,
    pub domain_unit: Vec<i64>,
    pub codomain_unit: Vec<i64>,
}

pub fn xi_extend_state(t: &StateTable) -> Result<XiStateMatrix> {
    if let Err(v) = check_state_axioms(t) {
        return Err(Error::NotAState {
            axiom: v.axiom,
            witness: v.witness.iter().map(|w| w.numerators().to_vec()).collect(),
        });
    }
    let atom_values = t.atom_values();
    let m = t.codomain.dim();
    let n = t.domain.dim();
    let mut matrix = vec![vec![0i64; n]; m];
    for (i, v) in atom_values.iter().enumerate() {
        for (j, &x) in v.numerators().iter().enumerate() {
            matrix[j][i] = x;
        }
    }
    let unit_image = weighted_atom_sum(&t.domain, &t.codomain, &atom_values);
    debug_assert_eq!(unit_image, t.codomain.chains(), "states carry unit to unit");
    Ok(XiStateMatrix {
        matrix,
        domain_unit: t.domain.chains().to_vec(),
        codomain_unit: t.codomain.chains().to_vec(),
    })
}

/// Restrict a positive, unit-preserving integer matrix between enveloping
/// groups to a state table on the unit intervals.
///
/// Positivity (the positive cone lands in the positive cone) is exactly
/// nonnegativity of all entries, since the cone is generated by the
/// standard basis.
pub fn gamma_restrict_state(
    matrix: &[Vec<i64>],
    domain_unit: &[i64],
    codomain_unit: &[i64],
) -> Result<StateTable> {
    let domain = FiniteMvAlgebra::new(domain_unit.to_vec())?;
    let codomain = FiniteMvAlgebra::new(codomain_unit.to_vec())?;
    if matrix.len() != codomain.dim() {
        return Err(Error::DimensionMismatch { expected: codomain.dim(), got: matrix.len() });
    }
    for (row_idx, row) in matrix.iter().enumerate() {
        if row.len() != domain.dim() {
            return Err(Error::DimensionMismatch { expected: domain.dim(), got: row.len() });
        }
        for (col_idx, &entry) in row.iter().enumerate() {
            if entry < 0 {
                return Err(Error::PositivityViolation { row: row_idx, col: col_idx, entry });
            }
        }
    }
    let unit_image: Vec<i64> = matrix
        .iter()
        .map(|row| row.iter().zip(domain_unit).map(|(&m, &k)| m * k).sum())
        .collect();
    if unit_image != codomain_unit {
        return Err(Error::UnitViolation {
            unit: domain_unit.to_vec(),
            expected: codomain_unit.to_vec(),
            got: unit_image,
        });
    }
    let atom_values: Vec<MvElement> = (0..domain.dim())
        .map(|i| {
            let col: Vec<i64> = matrix.iter().map(|row| row[i]).collect();
            codomain.element(col).expect("columns sit under the unit")
        })
        .collect();
    let table = extend_linear(&domain, &codomain, &atom_values);
    debug_assert!(is_state(&table));
    Ok(table)
}

/// A homomorphism of states: componentwise homomorphisms making the square
/// with the two state operations commute. Construction validates shapes;
/// the component tables are verified homomorphisms by type.
#[derive(Debug, Clone)]
pub struct TwoSortedHom {
    first: MvHom,
    second: MvHom,
    source: StateTable,
    target: StateTable,
}

impl TwoSortedHom {
    pub fn new(
        first: MvHom,
        second: MvHom,
        source: StateTable,
        target: StateTable,
    ) -> Result<Self> {
        if first.domain() != source.domain()
            || first.codomain() != target.domain()
            || second.domain() != source.codomain()
            || second.codomain() != target.codomain()
        {
            return Err(Error::ParentMismatch);
        }
        Ok(Self { first, second, source, target })
    }

    pub fn first(&self) -> &MvHom {
        &self.first
    }

    pub fn second(&self) -> &MvHom {
        &self.second
    }
}

/// Does the square commute: `s_2(m(a)) = n(s_1(a))` for every `a`?
pub fn check_two_sorted_hom(h: &TwoSortedHom) -> bool {
    h.source
        .domain()
        .elements()
        .all(|a| h.target.value(h.first.apply(&a)) == h.second.apply(h.source.value(&a)))
}

/// All homomorphisms `domain -> codomain`, found by filtering the states:
/// every homomorphism is a state, so the atom-value search is complete, and
/// each candidate is kept only if its full table preserves the operations.
pub fn enumerate_homomorphisms(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
) -> Result<Vec<MvHom>> {
    let mut out = Vec::new();
    for s in enumerate_states(domain, codomain)? {
        if let Ok(h) = MvHom::new(domain.clone(), codomain.clone(), s.values().to_vec()) {
            out.push(h);
        }
    }
    Ok(out)
}

pub fn enumerate_injective_homomorphisms(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
) -> Result<Vec<MvHom>> {
    if domain.element_count() > codomain.element_count() {
        return Ok(Vec::new());
    }
    Ok(enumerate_homomorphisms(domain, codomain)?
        .into_iter()
        .filter(MvHom::is_injective)
        .collect())
}
