//! Universal states of finite MV-algebras, realized geometrically.
//!
//! For an algebra with chains `k = (k_1, ..., k_n)` the universal state
//! sends the element with numerators `c` to the affine function
//! `x -> sum c_i x_i` on the simplex `delta_k = conv{e_i/k_i}`; the atoms go
//! to the coordinate projections, and the projections satisfy the
//! partition of unity `sum k_i pi_i = 1` on the simplex. Every state into a
//! finite algebra factors through evaluation at a tuple of rational points
//! of `delta_k`, one per codomain chain, with denominators dividing the
//! respective chain sizes; [`verify_universal_property`] checks that this
//! factorization is a bijection. Injective homomorphisms induce surjective
//! affine maps between the dual simplices, which is what keeps precomposition
//! injective; [`upsilon_of_hom`] builds the map and its certificate, and
//! [`colimit_chain_check`] strings the certificates along a chain of
//! embeddings.

use num_traits::Zero;
use serde::Serialize;

use crate::algebra::{FiniteMvAlgebra, MvElement, MvHom};
use crate::error::{Error, Result};
use crate::geometry::{
    affine_extension, delta_k, is_surjective_onto_simplex, points_with_denominator_dividing,
    AffineZMap, Rat, RationalPoint, RationalSimplex,
};
use crate::state::{check_state_axioms, enumerate_states, extend_from_atoms, StateTable};

/// The universal state of a nonterminal finite MV-algebra: elements as
/// affine integer-coefficient functions on the dual simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UniversalState {
    source: FiniteMvAlgebra,
    simplex: RationalSimplex,
}

impl UniversalState {
    pub fn new(source: &FiniteMvAlgebra) -> Result<Self> {
        if source.is_terminal() {
            return Err(Error::TerminalAlgebra);
        }
        let simplex = delta_k(source.chains())?;
        Ok(Self { source: source.clone(), simplex })
    }

    pub fn source(&self) -> &FiniteMvAlgebra {
        &self.source
    }

    pub fn simplex(&self) -> &RationalSimplex {
        &self.simplex
    }

    /// The affine function assigned to an element: the single row of its
    /// numerator vector, offset zero. Atoms map to coordinate projections.
    pub fn assign(&self, a: &MvElement) -> AffineZMap {
        assert!(self.source.contains(a), "element does not belong to the source algebra");
        AffineZMap::new(vec![a.numerators().to_vec()], vec![0], self.simplex.clone())
            .expect("row dimensions match the simplex")
    }

    /// Does `x` lie on the dual simplex? Its points are exactly the
    /// nonnegative solutions of `sum k_i x_i = 1`, so no solve is needed.
    pub fn simplex_contains(&self, x: &RationalPoint) -> bool {
        if x.dim() != self.source.dim() {
            return false;
        }
        let mut total = Rat::zero();
        for (&xi, &k) in x.coords().iter().zip(self.source.chains()) {
            if xi < Rat::zero() {
                return false;
            }
            total += Rat::from_integer(k) * xi;
        }
        total == Rat::from_integer(1)
    }

    /// Evaluate the assigned function at a point of the simplex. The value
    /// `sum c_i x_i` lies in `[0, 1]` because `0 <= c_i <= k_i` and
    /// `sum k_i x_i = 1` on the simplex.
    pub fn eval(&self, a: &MvElement, x: &RationalPoint) -> Result<Rat> {
        if !self.simplex_contains(x) {
            return Err(Error::OutsideDomain(x.coord_strings()));
        }
        assert!(self.source.contains(a), "element does not belong to the source algebra");
        let mut acc = Rat::zero();
        for (&c, &xi) in a.numerators().iter().zip(x.coords()) {
            acc += Rat::from_integer(c) * xi;
        }
        Ok(acc)
    }
}

pub fn universal_state(algebra: &FiniteMvAlgebra) -> Result<UniversalState> {
    UniversalState::new(algebra)
}

pub fn eval_universal(u: &UniversalState, a: &MvElement, x: &RationalPoint) -> Result<Rat> {
    u.eval(a, x)
}

/// A homomorphism out of the universal codomain into a finite algebra, in
/// dual form: one rational point of the source simplex per codomain chain,
/// with `den(point_j)` dividing `t_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualHom {
    pub target_chains: Vec<i64>,
    pub points: Vec<RationalPoint>,
}

/// Factor a state through the universal one: read the points off the atom
/// values, then confirm that evaluating the assigned functions at those
/// points reproduces the state on the whole carrier.
pub fn factor_state(u: &UniversalState, s: &StateTable) -> Result<DualHom> {
    if s.domain() != u.source() {
        return Err(Error::ParentMismatch);
    }
    if let Err(v) = check_state_axioms(s) {
        return Err(Error::NotAState {
            axiom: v.axiom,
            witness: v.witness.iter().map(|w| w.numerators().to_vec()).collect(),
        });
    }
    let chains = s.codomain().chains().to_vec();
    let points = read_dual_points(s);
    for (j, p) in points.iter().enumerate() {
        debug_assert!(u.simplex_contains(p), "atom values put the point on the simplex");
        debug_assert_eq!(chains[j] % p.den(), 0, "point denominator divides the chain");
    }
    // h after the universal state reproduces s, elementwise and exactly.
    for a in s.domain().elements() {
        for (j, p) in points.iter().enumerate() {
            let lhs = u.eval(&a, p)?;
            let rhs = Rat::new(s.value(&a).numerators()[j], chains[j]);
            debug_assert_eq!(lhs, rhs, "factorization must reproduce the state");
            if lhs != rhs {
                return Err(Error::NotAState {
                    axiom: "factorization",
                    witness: vec![a.numerators().to_vec()],
                });
            }
        }
    }
    Ok(DualHom { target_chains: chains, points })
}

/// The point tuple a state factors through: per codomain chain, the atom
/// values' coordinates at that chain, as rationals over the chain size.
fn read_dual_points(s: &StateTable) -> Vec<RationalPoint> {
    let chains = s.codomain().chains();
    let atom_values = s.atom_values();
    (0..chains.len())
        .map(|j| {
            let coords = atom_values
                .iter()
                .map(|v| Rat::new(v.numerators()[j], chains[j]))
                .collect();
            RationalPoint::new(coords)
        })
        .collect()
}

/// The state obtained by evaluating the universal state at the points of a
/// dual homomorphism.
pub fn state_from_dual(u: &UniversalState, dual: &DualHom) -> Result<StateTable> {
    let codomain = FiniteMvAlgebra::new(dual.target_chains.clone())?;
    let atoms = u.source().atoms();
    let atom_values: Vec<MvElement> = atoms
        .iter()
        .map(|a| {
            let numerators = dual
                .points
                .iter()
                .zip(&dual.target_chains)
                .map(|(p, &t)| {
                    let v = u.eval(a, p)?;
                    let scaled = Rat::from_integer(t) * v;
                    debug_assert!(scaled.is_integer());
                    Ok(scaled.to_integer())
                })
                .collect::<Result<Vec<i64>>>()?;
            codomain.element(numerators)
        })
        .collect::<Result<Vec<MvElement>>>()?;
    extend_from_atoms(u.source(), &codomain, &atom_values)
}

#[derive(Debug, Clone, Serialize)]
pub struct UniversalPropertyReport {
    pub domain: FiniteMvAlgebra,
    pub codomain: FiniteMvAlgebra,
    pub state_count: usize,
    pub dual_count: usize,
    pub failures: Vec<String>,
}

impl UniversalPropertyReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty() && self.state_count == self.dual_count
    }
}

/// Check that factorization is a bijection between the states `A -> N` and
/// the tuples of simplex points with the denominator discipline, with the
/// factoring homomorphism reproducing each state and determined by it.
pub fn verify_universal_property(
    domain: &FiniteMvAlgebra,
    codomain: &FiniteMvAlgebra,
) -> Result<UniversalPropertyReport> {
    let u = UniversalState::new(domain)?;
    let states = enumerate_states(domain, codomain)?;
    let chains = codomain.chains();

    // All dual tuples: the cartesian product over codomain chains of the
    // points with denominator dividing that chain.
    let per_chain: Vec<Vec<RationalPoint>> = chains
        .iter()
        .map(|&t| points_with_denominator_dividing(domain.chains(), t))
        .collect();
    let mut tuples: Vec<Vec<RationalPoint>> = vec![Vec::new()];
    for options in &per_chain {
        let mut next = Vec::with_capacity(tuples.len() * options.len());
        for tuple in &tuples {
            for p in options {
                let mut t = tuple.clone();
                t.push(p.clone());
                next.push(t);
            }
        }
        tuples = next;
    }

    let tuple_set: std::collections::BTreeSet<&Vec<RationalPoint>> = tuples.iter().collect();
    let mut failures = Vec::new();

    // Each state factors, and its factorization evaluates back to it.
    let mut seen_points: std::collections::BTreeSet<Vec<RationalPoint>> =
        std::collections::BTreeSet::new();
    for s in &states {
        match factor_state(&u, s) {
            Ok(dual) => {
                if !tuple_set.contains(&dual.points) {
                    failures.push(format!(
                        "factorization of a state is not a dual tuple: {:?}",
                        dual.points.iter().map(|p| p.to_string()).collect::<Vec<_>>()
                    ));
                }
                match state_from_dual(&u, &dual) {
                    Ok(back) if &back == s => {}
                    Ok(_) => failures.push("factorization does not reproduce the state".into()),
                    Err(e) => failures.push(format!("evaluation of a factorization failed: {e}")),
                }
                if !seen_points.insert(dual.points) {
                    failures.push("two states share a factorization".to_string());
                }
            }
            Err(e) => failures.push(format!("state failed to factor: {e}")),
        }
    }

    // Each dual tuple evaluates to a state whose factorization is the
    // tuple itself; together with the injectivity above this closes the
    // bijection. The evaluated table shares its atom values with an
    // enumerated state, so the axiom checks from the first loop cover it.
    for tuple in &tuples {
        let dual = DualHom { target_chains: chains.to_vec(), points: tuple.clone() };
        match state_from_dual(&u, &dual) {
            Ok(s) => {
                if read_dual_points(&s) != *tuple {
                    failures.push("factoring an evaluated tuple changed it".into());
                }
            }
            Err(e) => failures.push(format!("dual tuple failed to evaluate: {e}")),
        }
    }

    Ok(UniversalPropertyReport {
        domain: domain.clone(),
        codomain: codomain.clone(),
        state_count: states.len(),
        dual_count: tuples.len(),
        failures,
    })
}

/// The dual of a homomorphism between finite algebras, as a vertex map:
/// entry `j` is the index of the unique atom of the domain on which the
/// `j`-th chain projection of `h` is nonzero. For a genuine homomorphism
/// the projection takes the value `1/k_i` there, and `k_i` divides `t_j`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct DualVertexMap {
    pub factor_to_atom: Vec<usize>,
}

pub fn dual_of_hom(h: &MvHom) -> Result<DualVertexMap> {
    let atoms = h.domain().atoms();
    let mut factor_to_atom = Vec::with_capacity(h.codomain().dim());
    for j in 0..h.codomain().dim() {
        let nonzero: Vec<usize> = atoms
            .iter()
            .enumerate()
            .filter(|(_, a)| h.apply(a).numerators()[j] != 0)
            .map(|(i, _)| i)
            .collect();
        if nonzero.len() != 1 {
            return Err(Error::DualAtomRule { factor: j, nonzero: nonzero.len() });
        }
        let i = nonzero[0];
        let (k, t) = (h.domain().chains()[i], h.codomain().chains()[j]);
        if t % k != 0 || h.apply(&atoms[i]).numerators()[j] != t / k {
            return Err(Error::DualAtomRule { factor: j, nonzero: 1 });
        }
        factor_to_atom.push(i);
    }
    Ok(DualVertexMap { factor_to_atom })
}

/// Evidence that precomposition with the induced affine map is injective on
/// affine functions: the map is integral by construction, covers every
/// vertex of the target simplex, and its image affinely spans the target's
/// hull (full affine rank), so two affine functions that agree after
/// precomposition agree on the whole target simplex.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct InjectivityCertificate {
    pub vertex_surjective: bool,
    pub image_affine_rank: usize,
    pub required_rank: usize,
}

impl InjectivityCertificate {
    pub fn holds(&self) -> bool {
        self.vertex_surjective && self.image_affine_rank == self.required_rank
    }
}

/// The affine map between dual simplices induced by an injective
/// homomorphism, together with its injectivity certificate.
///
/// A failure to extend with integer coefficients would contradict the
/// denominator discipline of the dual vertex map; it is surfaced as an
/// error rather than silently repaired.
pub fn upsilon_of_hom(h: &MvHom) -> Result<(AffineZMap, InjectivityCertificate)> {
    if let Some((a, b)) = h.collision() {
        return Err(Error::NotInjective {
            a: a.numerators().to_vec(),
            b: b.numerators().to_vec(),
        });
    }
    let dual = dual_of_hom(h)?;
    let source_simplex = delta_k(h.codomain().chains())?;
    let target_simplex = delta_k(h.domain().chains())?;
    let images: Vec<RationalPoint> = dual
        .factor_to_atom
        .iter()
        .map(|&i| target_simplex.vertices()[i].clone())
        .collect();
    let alpha = affine_extension(&source_simplex, &images)?;
    let vertex_surjective = is_surjective_onto_simplex(&alpha, &target_simplex)?;

    // Affine rank of the image vertex set, via the simplex constructor's
    // exact rank check on a deduplicated vertex list.
    let mut distinct: Vec<RationalPoint> = Vec::new();
    for p in &images {
        if !distinct.contains(p) {
            distinct.push(p.clone());
        }
    }
    let image_affine_rank = match RationalSimplex::new(distinct.clone()) {
        Ok(s) => s.vertices().len(),
        Err(_) => {
            // Affinely dependent images cannot happen for distinct
            // vertices of a simplex, but rank 0 is a safe floor.
            0
        }
    };
    let certificate = InjectivityCertificate {
        vertex_surjective,
        image_affine_rank,
        required_rank: target_simplex.vertices().len(),
    };
    Ok((alpha, certificate))
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainTransition {
    pub source_chains: Vec<i64>,
    pub target_chains: Vec<i64>,
    pub map: AffineZMap,
    pub certificate: InjectivityCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct ChainCheckReport {
    /// Chain signatures of the algebras along the chain.
    pub stages: Vec<Vec<i64>>,
    pub transitions: Vec<ChainTransition>,
}

impl ChainCheckReport {
    pub fn passed(&self) -> bool {
        self.transitions.iter().all(|t| t.certificate.holds())
    }
}

/// Run [`upsilon_of_hom`] along a composable chain of embeddings. An empty
/// chain passes trivially.
pub fn colimit_chain_check(homs: &[MvHom]) -> Result<ChainCheckReport> {
    for (i, pair) in homs.windows(2).enumerate() {
        if pair[0].codomain() != pair[1].domain() {
            return Err(Error::NotComposable { position: i });
        }
    }
    let mut stages = Vec::new();
    if let Some(first) = homs.first() {
        stages.push(first.domain().chains().to_vec());
        for h in homs {
            stages.push(h.codomain().chains().to_vec());
        }
    }
    let mut transitions = Vec::new();
    for h in homs {
        let (map, certificate) = upsilon_of_hom(h)?;
        transitions.push(ChainTransition {
            source_chains: h.domain().chains().to_vec(),
            target_chains: h.codomain().chains().to_vec(),
            map,
            certificate,
        });
    }
    Ok(ChainCheckReport { stages, transitions })
}

#[derive(Debug, Clone, Serialize)]
pub struct AffineCompareReport {
    pub algebra: FiniteMvAlgebra,
    pub max_den: i64,
    pub points_checked: usize,
    pub elements_checked: usize,
    pub mismatches: Vec<String>,
}

impl AffineCompareReport {
    pub fn passed(&self) -> bool {
        self.mismatches.is_empty()
    }
}

/// Compare the two routes from elements to values at rational points of the
/// state space, identified with the dual simplex through atom values.
///
/// For a point `x` with denominator `q`, the state route builds the state
/// into `M_q` with atom values `q * x_i` and reads off `s_x(a)`; the
/// geometric route evaluates the assigned affine function at `x`. The two
/// must agree at every element and every point with denominator up to the
/// bound.
pub fn affine_rep_compare(algebra: &FiniteMvAlgebra, max_den: i64) -> Result<AffineCompareReport> {
    let u = UniversalState::new(algebra)?;
    let mut grid: Vec<RationalPoint> = Vec::new();
    for q in 1..=max_den {
        for p in points_with_denominator_dividing(algebra.chains(), q) {
            if !grid.contains(&p) {
                grid.push(p);
            }
        }
    }
    grid.sort();

    let elements: Vec<MvElement> = algebra.elements().collect();
    let mut mismatches = Vec::new();
    for x in &grid {
        let q = x.den();
        let chain = FiniteMvAlgebra::chain(q)?;
        let atom_values: Vec<MvElement> = x
            .coords()
            .iter()
            .map(|c| {
                let scaled = Rat::from_integer(q) * c;
                debug_assert!(scaled.is_integer());
                chain.element(vec![scaled.to_integer()])
            })
            .collect::<Result<_>>()?;
        let s_x = extend_from_atoms(algebra, &chain, &atom_values)?;
        for a in &elements {
            // evaluation of the element at the state, via the state table
            let via_state = Rat::new(s_x.value(a).numerators()[0], q);
            // evaluation of the assigned affine function at the point
            let via_geometry = u.eval(a, x)?;
            if via_state != via_geometry {
                mismatches.push(format!(
                    "element {:?} at {}: state route {} vs affine route {}",
                    a.numerators(),
                    x,
                    via_state,
                    via_geometry
                ));
            }
        }
    }
    Ok(AffineCompareReport {
        algebra: algebra.clone(),
        max_den,
        points_checked: grid.len(),
        elements_checked: elements.len(),
        mismatches,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct RadicalReport {
    pub algebra: FiniteMvAlgebra,
    /// Kernel of each chain projection, as element lists.
    pub kernels: Vec<Vec<MvElement>>,
    /// Intersection of the kernels; trivial for every finite algebra.
    pub radical: Vec<MvElement>,
}

/// Intersect the kernels of all chain projections. Finite algebras are
/// semisimple, so the result is always `{0}`, returned with the witnessing
/// kernel list.
pub fn radical_finite(algebra: &FiniteMvAlgebra) -> Result<RadicalReport> {
    algebra.element_count_capped(1 << 16)?;
    let elements: Vec<MvElement> = algebra.elements().collect();
    let kernels: Vec<Vec<MvElement>> = (0..algebra.dim())
        .map(|i| {
            elements
                .iter()
                .filter(|a| a.numerators()[i] == 0)
                .cloned()
                .collect()
        })
        .collect();
    let radical: Vec<MvElement> = elements
        .iter()
        .filter(|a| kernels.iter().all(|k| k.contains(a)))
        .cloned()
        .collect();
    Ok(RadicalReport { algebra: algebra.clone(), kernels, radical })
}
