//! Exact rational geometry: points, simplices, regularity, and affine maps
//! with integer coefficients.
//!
//! Everything is computed over the rationals; membership, independence, and
//! affine extension go through fraction-free elimination on cleared integer
//! matrices, and lattice questions (regularity, integrality of extensions)
//! through unimodular diagonalization. No tolerances anywhere.

mod linalg;

use std::fmt;
use std::str::FromStr;

use num_rational::Ratio;
use num_traits::{One, Signed, Zero};
use serde::ser::SerializeSeq;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use linalg::{IMat, Rat128};

/// Exact rational scalar. `Ratio` keeps values reduced with a positive
/// denominator, which is exactly the stored-form invariant we need.
pub type Rat = Ratio<i64>;

/// Parse `"p/q"` or a bare integer `"p"`.
pub fn parse_rat(s: &str) -> Result<Rat> {
    let s = s.trim();
    match s.split_once('/') {
        Some((p, q)) => {
            let p: i64 = p.trim().parse().map_err(|_| Error::Parse(format!("bad numerator in `{s}`")))?;
            let q: i64 = q.trim().parse().map_err(|_| Error::Parse(format!("bad denominator in `{s}`")))?;
            if q == 0 {
                return Err(Error::ZeroDenominator);
            }
            Ok(Rat::new(p, q))
        }
        None => {
            let p = i64::from_str(s).map_err(|_| Error::Parse(format!("bad rational `{s}`")))?;
            Ok(Rat::from_integer(p))
        }
    }
}

fn to_rat128(x: Rat) -> Rat128 {
    Rat128::new(*x.numer() as i128, *x.denom() as i128)
}

fn from_rat128(x: Rat128) -> Rat {
    Rat::new(
        i64::try_from(*x.numer()).expect("coordinate overflows i64"),
        i64::try_from(*x.denom()).expect("denominator overflows i64"),
    )
}

/// A point with exact rational coordinates, each stored reduced.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint {
    coords: Vec<Rat>,
}

impl RationalPoint {
    pub fn new(coords: Vec<Rat>) -> Self {
        Self { coords }
    }

    pub fn from_integers(coords: &[i64]) -> Self {
        Self { coords: coords.iter().map(|&c| Rat::from_integer(c)).collect() }
    }

    pub fn parse(coords: &[&str]) -> Result<Self> {
        Ok(Self { coords: coords.iter().map(|s| parse_rat(s)).collect::<Result<_>>()? })
    }

    pub fn dim(&self) -> usize {
        self.coords.len()
    }

    pub fn coords(&self) -> &[Rat] {
        &self.coords
    }

    /// The denominator: least common multiple of the reduced coordinate
    /// denominators. The origin has denominator 1.
    pub fn den(&self) -> i64 {
        self.coords.iter().fold(1i64, |acc, c| num_integer::lcm(acc, *c.denom()))
    }

    pub fn coord_strings(&self) -> Vec<String> {
        self.coords.iter().map(|c| c.to_string()).collect()
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.coord_strings().join(", "))
    }
}

impl Serialize for RationalPoint {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut seq = s.serialize_seq(Some(self.coords.len()))?;
        for c in &self.coords {
            seq.serialize_element(&c.to_string())?;
        }
        seq.end()
    }
}

/// Scale a point by its denominator and append that denominator: the
/// primitive integer vector `den(v) * (v, 1)`.
fn homogenize(v: &RationalPoint) -> Vec<i128> {
    let den = v.den() as i128;
    let mut out: Vec<i128> = v
        .coords
        .iter()
        .map(|c| *c.numer() as i128 * (den / *c.denom() as i128))
        .collect();
    out.push(den);
    out
}

/// A simplex with rational vertices. Vertex order is part of the identity;
/// geometric predicates do not depend on it. Construction rejects affinely
/// dependent vertex sets.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(transparent)]
pub struct RationalSimplex {
    vertices: Vec<RationalPoint>,
}

impl RationalSimplex {
    pub fn new(vertices: Vec<RationalPoint>) -> Result<Self> {
        if vertices.is_empty() {
            return Err(Error::EmptySimplex);
        }
        let d = vertices[0].dim();
        for v in &vertices {
            if v.dim() != d {
                return Err(Error::DimensionMismatch { expected: d, got: v.dim() });
            }
        }
        // Affine independence: the homogenized vectors are linearly
        // independent exactly when the points are affinely independent.
        let rows: Vec<Vec<Rat128>> = vertices
            .iter()
            .map(|v| homogenize(v).into_iter().map(|x| Rat128::new(x, 1)).collect())
            .collect();
        if linalg::rational_rank(&rows) != vertices.len() {
            return Err(Error::AffinelyDependent);
        }
        Ok(Self { vertices })
    }

    pub fn vertices(&self) -> &[RationalPoint] {
        &self.vertices
    }

    /// Ambient dimension.
    pub fn ambient_dim(&self) -> usize {
        self.vertices[0].dim()
    }

    /// Intrinsic dimension: one less than the number of vertices.
    pub fn dim(&self) -> usize {
        self.vertices.len() - 1
    }

    /// Barycentric coordinates of `x` with respect to the vertices, or
    /// `None` when `x` is outside the affine hull. Exact.
    pub fn barycentric(&self, x: &RationalPoint) -> Option<Vec<Rat>> {
        if x.dim() != self.ambient_dim() {
            return None;
        }
        let d = self.ambient_dim();
        let t = self.vertices.len();
        // Columns are (v_i, 1); right-hand side is (x, 1).
        let mut rows: Vec<Vec<Rat128>> = vec![vec![Rat128::zero(); t]; d + 1];
        for (j, v) in self.vertices.iter().enumerate() {
            for i in 0..d {
                rows[i][j] = to_rat128(v.coords[i]);
            }
            rows[d][j] = Rat128::one();
        }
        let mut rhs: Vec<Rat128> = x.coords.iter().map(|&c| to_rat128(c)).collect();
        rhs.push(Rat128::one());
        let sol = linalg::solve_rational(&rows, &rhs)?;
        Some(sol.into_iter().map(from_rat128).collect())
    }

    pub fn contains(&self, x: &RationalPoint) -> bool {
        self.barycentric(x).is_some_and(|l| l.iter().all(|c| !c.is_negative()))
    }

    pub fn in_relative_interior(&self, x: &RationalPoint) -> bool {
        self.barycentric(x).is_some_and(|l| l.iter().all(|c| c.is_positive()))
    }

    /// The face spanned by the given vertex indices.
    pub fn face(&self, indices: &[usize]) -> Result<RationalSimplex> {
        let vertices = indices.iter().map(|&i| self.vertices[i].clone()).collect();
        RationalSimplex::new(vertices)
    }
}

/// Regularity (unimodularity) of a rational simplex: the homogenized vertex
/// vectors `den(v_i) * (v_i, 1)` extend to a basis of the integer lattice.
///
/// Degenerate vertex sets cannot be constructed, so this is total.
pub fn is_regular_simplex(simplex: &RationalSimplex) -> bool {
    let rows: Vec<Vec<i128>> = simplex.vertices.iter().map(homogenize).collect();
    linalg::rows_extend_to_basis(&IMat::from_rows(&rows))
}

/// The simplex `conv{e_1/k_1, ..., e_n/k_n}` in `R^n`: the geometric dual
/// of the product of chains with signature `k`. Its points are exactly the
/// solutions of `sum k_i x_i = 1`, `x_i >= 0`.
pub fn delta_k(chains: &[i64]) -> Result<RationalSimplex> {
    if chains.is_empty() {
        return Err(Error::EmptySimplex);
    }
    if let Some(&k) = chains.iter().find(|&&k| k < 1) {
        return Err(Error::InvalidChain(k));
    }
    let n = chains.len();
    let vertices = chains
        .iter()
        .enumerate()
        .map(|(i, &k)| {
            let mut coords = vec![Rat::zero(); n];
            coords[i] = Rat::new(1, k);
            RationalPoint::new(coords)
        })
        .collect();
    RationalSimplex::new(vertices)
}

/// An affine map `x -> M x + c` with integer matrix and offset, carried
/// together with its domain simplex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct AffineZMap {
    matrix: Vec<Vec<i64>>,
    offset: Vec<i64>,
    domain: RationalSimplex,
}

impl AffineZMap {
    pub fn new(matrix: Vec<Vec<i64>>, offset: Vec<i64>, domain: RationalSimplex) -> Result<Self> {
        let d = domain.ambient_dim();
        if matrix.len() != offset.len() {
            return Err(Error::DimensionMismatch { expected: matrix.len(), got: offset.len() });
        }
        for row in &matrix {
            if row.len() != d {
                return Err(Error::DimensionMismatch { expected: d, got: row.len() });
            }
        }
        Ok(Self { matrix, offset, domain })
    }

    pub fn matrix(&self) -> &[Vec<i64>] {
        &self.matrix
    }

    pub fn offset(&self) -> &[i64] {
        &self.offset
    }

    pub fn domain(&self) -> &RationalSimplex {
        &self.domain
    }

    pub fn out_dim(&self) -> usize {
        self.offset.len()
    }

    /// Evaluate without the domain membership check.
    pub fn eval(&self, x: &RationalPoint) -> RationalPoint {
        assert_eq!(x.dim(), self.domain.ambient_dim(), "dimension mismatch");
        let coords = self
            .matrix
            .iter()
            .zip(&self.offset)
            .map(|(row, &c)| {
                let mut acc = Rat::from_integer(c);
                for (&m, &xi) in row.iter().zip(x.coords()) {
                    acc += Rat::from_integer(m) * xi;
                }
                acc
            })
            .collect();
        RationalPoint::new(coords)
    }

    /// Evaluate at a point of the domain simplex; outside points are an
    /// error. The denominator of the image always divides `den(x)`.
    pub fn apply(&self, x: &RationalPoint) -> Result<RationalPoint> {
        if !self.domain.contains(x) {
            return Err(Error::OutsideDomain(x.coord_strings()));
        }
        let y = self.eval(x);
        debug_assert_eq!(x.den() % y.den(), 0, "image denominator must divide den(x)");
        Ok(y)
    }
}

impl Serialize for AffineZMap {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        use serde::ser::SerializeStruct;
        let mut st = s.serialize_struct("AffineZMap", 2)?;
        st.serialize_field("matrix", &self.matrix)?;
        st.serialize_field("offset", &self.offset)?;
        st.end()
    }
}

/// Evaluate an affine map at a point of its domain.
pub fn apply_affine(f: &AffineZMap, x: &RationalPoint) -> Result<RationalPoint> {
    f.apply(x)
}

/// All points of the simplex dual to `chains` whose denominator divides `t`:
/// the vectors `(m_1/t, ..., m_n/t)` with `m_i >= 0` and `sum k_i m_i = t`,
/// in ascending lexicographic order. Complete by construction.
pub fn points_with_denominator_dividing(chains: &[i64], t: i64) -> Vec<RationalPoint> {
    assert!(t >= 1, "denominator bound must be positive");
    let mut out = Vec::new();
    let mut m = vec![0i64; chains.len()];
    fn recurse(
        chains: &[i64],
        t: i64,
        i: usize,
        left: i64,
        m: &mut Vec<i64>,
        out: &mut Vec<RationalPoint>,
    ) {
        if i == chains.len() {
            if left == 0 {
                let coords = m.iter().map(|&mi| Rat::new(mi, t)).collect();
                out.push(RationalPoint::new(coords));
            }
            return;
        }
        if i + 1 == chains.len() {
            // Last coordinate is forced.
            if left % chains[i] == 0 {
                m[i] = left / chains[i];
                recurse(chains, t, i + 1, 0, m, out);
            }
            return;
        }
        for mi in 0..=left / chains[i] {
            m[i] = mi;
            recurse(chains, t, i + 1, left - chains[i] * mi, m, out);
        }
    }
    if !chains.is_empty() {
        recurse(chains, t, 0, t, &mut m, &mut out);
    }
    out
}

/// The unique affine map taking vertex `i` of `src` to `images[i]`,
/// represented with integer coefficients. When no integer representation
/// exists the error carries the rational solution.
pub fn affine_extension(
    src: &RationalSimplex,
    images: &[RationalPoint],
) -> Result<AffineZMap> {
    if images.len() != src.vertices().len() {
        return Err(Error::DimensionMismatch {
            expected: src.vertices().len(),
            got: images.len(),
        });
    }
    let out_dim = images.first().map_or(0, RationalPoint::dim);
    for w in images {
        if w.dim() != out_dim {
            return Err(Error::DimensionMismatch { expected: out_dim, got: w.dim() });
        }
    }
    let d = src.ambient_dim();

    // Row i of W is den(v_i) * (v_i, 1); row i of Y is den(v_i) * w_i.
    // An integer solution X of W X = Y, read as [M | c] transposed, gives
    // the integer-coefficient representation M x + c. If den(w_i) does not
    // divide den(v_i) the right-hand side is not even integral and no
    // integer map exists.
    let w_rows: Vec<Vec<i128>> = src.vertices().iter().map(homogenize).collect();
    let mut y_rows: Vec<Vec<i128>> = Vec::with_capacity(src.vertices().len());
    for (v, w) in src.vertices().iter().zip(images) {
        let den = v.den() as i128;
        let mut row = Vec::with_capacity(out_dim);
        for c in w.coords() {
            let num = *c.numer() as i128 * den;
            let q = *c.denom() as i128;
            if num % q != 0 {
                return Err(rational_extension_witness(src, images));
            }
            row.push(num / q);
        }
        y_rows.push(row);
    }

    let w = IMat::from_rows(&w_rows);
    let y = IMat::from_rows(&y_rows);
    match linalg::solve_integer_matrix(&w, &y) {
        Ok(x) => {
            // X is (d+1) x out_dim; transpose into M (out_dim x d) and c.
            let mut matrix = vec![vec![0i64; d]; out_dim];
            let mut offset = vec![0i64; out_dim];
            for j in 0..out_dim {
                for i in 0..d {
                    matrix[j][i] = i64::try_from(x[(i, j)]).expect("coefficient overflows i64");
                }
                offset[j] = i64::try_from(x[(d, j)]).expect("offset overflows i64");
            }
            let map = AffineZMap::new(matrix, offset, src.clone())?;
            debug_assert!(src
                .vertices()
                .iter()
                .zip(images)
                .all(|(v, w)| map.eval(v) == *w));
            Ok(map)
        }
        Err(xq) => {
            let mut matrix = vec![vec![String::new(); d]; out_dim];
            let mut offset = vec![String::new(); out_dim];
            for j in 0..out_dim {
                for i in 0..d {
                    matrix[j][i] = xq[i][j].to_string();
                }
                offset[j] = xq[d][j].to_string();
            }
            Err(Error::NonIntegerAffineExtension { matrix, offset })
        }
    }
}

/// Rational affine interpolation used only to decorate the error when the
/// integer path is impossible outright.
fn rational_extension_witness(src: &RationalSimplex, images: &[RationalPoint]) -> Error {
    let d = src.ambient_dim();
    let out_dim = images.first().map_or(0, RationalPoint::dim);
    // Solve (v_i, 1) . row_j = w_i[j] for each output coordinate j.
    let a: Vec<Vec<Rat128>> = src
        .vertices()
        .iter()
        .map(|v| {
            let mut row: Vec<Rat128> = v.coords().iter().map(|&c| to_rat128(c)).collect();
            row.push(Rat128::one());
            row
        })
        .collect();
    let mut matrix = vec![vec![String::new(); d]; out_dim];
    let mut offset = vec![String::new(); out_dim];
    for j in 0..out_dim {
        let b: Vec<Rat128> = images.iter().map(|w| to_rat128(w.coords()[j])).collect();
        let sol = linalg::solve_rational(&a, &b).expect("interpolation system is consistent");
        for i in 0..d {
            matrix[j][i] = sol[i].to_string();
        }
        offset[j] = sol[d].to_string();
    }
    Error::NonIntegerAffineExtension { matrix, offset }
}

/// Does `f` map its domain onto `target`? Reduces to vertex coverage: the
/// image of a simplex under an affine map is the convex hull of the vertex
/// images, so it equals `target` exactly when every vertex of `target` is
/// hit by some vertex of the domain. Errors if some vertex image falls
/// outside `target`.
pub fn is_surjective_onto_simplex(
    f: &AffineZMap,
    target: &RationalSimplex,
) -> Result<bool> {
    let images: Vec<RationalPoint> =
        f.domain().vertices().iter().map(|v| f.eval(v)).collect();
    for w in &images {
        if !target.contains(w) {
            return Err(Error::ImageNotContained(w.coord_strings()));
        }
    }
    Ok(target.vertices().iter().all(|u| images.contains(u)))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn pt(coords: &[&str]) -> RationalPoint {
        RationalPoint::parse(coords).unwrap()
    }

    fn simplex(vertices: &[&[&str]]) -> RationalSimplex {
        RationalSimplex::new(vertices.iter().map(|v| pt(v)).collect()).unwrap()
    }

    #[test]
    fn denominators() {
        assert_eq!(pt(&["1/2", "1/3"]).den(), 6);
        assert_eq!(pt(&["0", "0"]).den(), 1);
        assert_eq!(pt(&["2/4"]).den(), 2); // reduction happens on construction
        for k in 1..=12 {
            let mut coords = vec!["0".to_string(); 3];
            coords[1] = format!("1/{k}");
            let refs: Vec<&str> = coords.iter().map(String::as_str).collect();
            assert_eq!(pt(&refs).den(), k);
        }
    }

    #[test]
    fn rational_parsing() {
        assert_eq!(parse_rat("3/6").unwrap(), Rat::new(1, 2));
        assert_eq!(parse_rat("-2").unwrap(), Rat::from_integer(-2));
        assert_eq!(parse_rat("1/0"), Err(Error::ZeroDenominator));
        assert!(parse_rat("x").is_err());
    }

    #[test]
    fn simplex_construction() {
        assert!(RationalSimplex::new(vec![]).is_err());
        // Collinear points are affinely dependent.
        let r = RationalSimplex::new(vec![
            pt(&["0", "0"]),
            pt(&["1", "1"]),
            pt(&["2", "2"]),
        ]);
        assert_eq!(r, Err(Error::AffinelyDependent));
        // A single point is a 0-simplex.
        let s = simplex(&[&["1/2"]]);
        assert_eq!(s.dim(), 0);
    }

    #[test]
    fn regularity_examples() {
        // conv{(1,0),(0,1)} is regular.
        assert!(is_regular_simplex(&simplex(&[&["1", "0"], &["0", "1"]])));
        // The unit segment is regular.
        assert!(is_regular_simplex(&simplex(&[&["0"], &["1"]])));
        // conv{1/3, 2/3}: the midpoint 1/2 has denominator 2 < 3 + 3.
        assert!(!is_regular_simplex(&simplex(&[&["1/3"], &["2/3"]])));
        // Any single rational point is regular.
        assert!(is_regular_simplex(&simplex(&[&["3/7", "2/5"]])));
    }

    #[test]
    fn delta_k_examples() {
        let d = delta_k(&[1, 1]).unwrap();
        assert_eq!(d.vertices(), &[pt(&["1", "0"]), pt(&["0", "1"])]);
        assert!(is_regular_simplex(&d));

        let d = delta_k(&[2]).unwrap();
        assert_eq!(d.vertices(), &[pt(&["1/2"])]);
        assert_eq!(d.dim(), 0);

        let d = delta_k(&[2, 3]).unwrap();
        assert_eq!(d.vertices(), &[pt(&["1/2", "0"]), pt(&["0", "1/3"])]);
        assert!(is_regular_simplex(&d));

        assert_eq!(delta_k(&[]), Err(Error::EmptySimplex));
    }

    #[test]
    fn affine_application() {
        // f(x) = 1 - x on [0, 1].
        let f = AffineZMap::new(vec![vec![-1]], vec![1], simplex(&[&["0"], &["1"]])).unwrap();
        let y = f.apply(&pt(&["1/3"])).unwrap();
        assert_eq!(y, pt(&["2/3"]));
        assert_eq!(3 % y.den(), 0);

        // f(x1, x2) = x1 + 3 x2 on the dual simplex of M2 x M6.
        let dom = delta_k(&[2, 6]).unwrap();
        let f = AffineZMap::new(vec![vec![1, 3]], vec![0], dom).unwrap();
        let y = f.apply(&pt(&["0", "1/6"])).unwrap();
        assert_eq!(y, pt(&["1/2"]));
        assert_eq!(6 % y.den(), 0);

        // Identity fixes everything in its domain.
        let dom = simplex(&[&["0", "0"], &["1", "0"], &["0", "1"]]);
        let id = AffineZMap::new(vec![vec![1, 0], vec![0, 1]], vec![0, 0], dom).unwrap();
        let x = pt(&["1/4", "1/3"]);
        assert_eq!(id.apply(&x).unwrap(), x);

        // Outside the domain is an error.
        let f = AffineZMap::new(vec![vec![-1]], vec![1], simplex(&[&["0"], &["1"]])).unwrap();
        assert!(matches!(f.apply(&pt(&["3/2"])), Err(Error::OutsideDomain(_))));
    }

    #[test]
    fn point_enumeration_examples() {
        let pts = points_with_denominator_dividing(&[1, 1], 2);
        assert_eq!(pts, vec![pt(&["0", "1"]), pt(&["1/2", "1/2"]), pt(&["1", "0"])]);
        assert!(points_with_denominator_dividing(&[2], 3).is_empty());
        assert_eq!(points_with_denominator_dividing(&[2], 2), vec![pt(&["1/2"])]);
    }

    #[test]
    fn affine_extension_examples() {
        // Both vertices of conv{(1,0),(0,1)} to the point 1: a constant
        // integral map; x1 + x2 is one valid representation.
        let src = delta_k(&[1, 1]).unwrap();
        let f = affine_extension(&src, &[pt(&["1"]), pt(&["1"])]).unwrap();
        for v in src.vertices() {
            assert_eq!(f.eval(v), pt(&["1"]));
        }
        assert_eq!(f.eval(&pt(&["1/2", "1/2"])), pt(&["1"]));

        // Identity vertex map extends to a map fixing the simplex.
        let src = delta_k(&[2, 3]).unwrap();
        let images: Vec<RationalPoint> = src.vertices().to_vec();
        let f = affine_extension(&src, &images).unwrap();
        for v in src.vertices() {
            assert_eq!(f.eval(v), *v);
        }

        // e1/2 -> 1/2, e2/6 -> 1/2 from the dual of M2 x M6: constant 1/2,
        // with integer coefficients.
        let src = delta_k(&[2, 6]).unwrap();
        let f = affine_extension(&src, &[pt(&["1/2"]), pt(&["1/2"])]).unwrap();
        for v in src.vertices() {
            assert_eq!(f.eval(v), pt(&["1/2"]));
        }
        let mid = pt(&["1/4", "1/12"]);
        assert!(src.contains(&mid));
        assert_eq!(f.eval(&mid), pt(&["1/2"]));

        // 0 -> 0, 1/2 -> 1/3 forces slope 2/3: no integer representation.
        let src = simplex(&[&["0"], &["1/2"]]);
        let err = affine_extension(&src, &[pt(&["0"]), pt(&["1/3"])]).unwrap_err();
        match err {
            Error::NonIntegerAffineExtension { matrix, offset } => {
                assert_eq!(matrix, vec![vec!["2/3".to_string()]]);
                assert_eq!(offset, vec!["0".to_string()]);
            }
            other => panic!("expected non-integer extension, got {other:?}"),
        }
    }

    #[test]
    fn surjectivity_examples() {
        // Constant map onto a point simplex.
        let src = delta_k(&[1, 1]).unwrap();
        let target = delta_k(&[1]).unwrap();
        let f = affine_extension(&src, &[pt(&["1"]), pt(&["1"])]).unwrap();
        assert!(is_surjective_onto_simplex(&f, &target).unwrap());

        // Embedding a vertex misses the other one.
        let src = delta_k(&[1]).unwrap();
        let target = delta_k(&[1, 1]).unwrap();
        let f = affine_extension(&src, &[pt(&["1", "0"])]).unwrap();
        assert!(!is_surjective_onto_simplex(&f, &target).unwrap());

        // Identity is onto.
        let src = delta_k(&[2, 3]).unwrap();
        let images: Vec<RationalPoint> = src.vertices().to_vec();
        let f = affine_extension(&src, &images).unwrap();
        assert!(is_surjective_onto_simplex(&f, &src).unwrap());

        // Image outside the target is an error.
        let src = delta_k(&[1]).unwrap();
        let f = affine_extension(&src, &[pt(&["1", "1"])]).unwrap();
        let target = delta_k(&[1, 1]).unwrap();
        assert!(matches!(
            is_surjective_onto_simplex(&f, &target),
            Err(Error::ImageNotContained(_))
        ));
    }

    #[test]
    fn barycentric_membership() {
        let s = delta_k(&[2, 3]).unwrap();
        // On the segment: (1/4, 1/6) = (1/2)(1/2,0) + (1/2)(0,1/3).
        assert!(s.contains(&pt(&["1/4", "1/6"])));
        assert!(s.in_relative_interior(&pt(&["1/4", "1/6"])));
        assert!(!s.in_relative_interior(&pt(&["1/2", "0"])));
        assert!(s.contains(&pt(&["1/2", "0"])));
        // Off the affine hull.
        assert!(!s.contains(&pt(&["1/4", "1/4"])));
        // On the hull but outside the simplex.
        assert!(!s.contains(&pt(&["1", "-1/3"])));
    }
}
