//! Exact linear algebra for the geometry layer.
//!
//! Rational systems are cleared to integer form and eliminated fraction-free
//! (Bareiss); integer lattice questions go through unimodular row/column
//! diagonalization. Intermediate values use `i128`; all inputs here are
//! desk-scale, so that leaves enormous headroom, and overflow checks stay on.

use num_rational::Ratio;
use num_traits::Zero;

pub(crate) type Rat128 = Ratio<i128>;

/// Dense integer matrix, row major.
#[derive(Debug, Clone, PartialEq, Eq)]
pub(crate) struct IMat {
    pub rows: usize,
    pub cols: usize,
    pub a: Vec<i128>,
}

impl IMat {
    pub fn zero(rows: usize, cols: usize) -> Self {
        Self { rows, cols, a: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zero(n, n);
        for i in 0..n {
            m[(i, i)] = 1;
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i128>]) -> Self {
        let r = rows.len();
        let c = rows.first().map_or(0, Vec::len);
        let mut a = Vec::with_capacity(r * c);
        for row in rows {
            assert_eq!(row.len(), c, "ragged matrix");
            a.extend_from_slice(row);
        }
        Self { rows: r, cols: c, a }
    }

    pub fn mul(&self, other: &IMat) -> IMat {
        assert_eq!(self.cols, other.rows);
        let mut out = IMat::zero(self.rows, other.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let v = self[(i, k)];
                if v == 0 {
                    continue;
                }
                for j in 0..other.cols {
                    out[(i, j)] += v * other[(k, j)];
                }
            }
        }
        out
    }

    fn swap_rows(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for k in 0..self.cols {
            self.a.swap(i * self.cols + k, j * self.cols + k);
        }
    }

    fn swap_cols(&mut self, i: usize, j: usize) {
        if i == j {
            return;
        }
        for r in 0..self.rows {
            self.a.swap(r * self.cols + i, r * self.cols + j);
        }
    }

    /// row_i -= q * row_t
    fn row_sub(&mut self, i: usize, t: usize, q: i128) {
        for k in 0..self.cols {
            let v = self[(t, k)];
            self[(i, k)] -= q * v;
        }
    }

    /// col_j -= q * col_t
    fn col_sub(&mut self, j: usize, t: usize, q: i128) {
        for r in 0..self.rows {
            let v = self[(r, t)];
            self[(r, j)] -= q * v;
        }
    }
}

impl std::ops::Index<(usize, usize)> for IMat {
    type Output = i128;
    fn index(&self, (r, c): (usize, usize)) -> &i128 {
        &self.a[r * self.cols + c]
    }
}

impl std::ops::IndexMut<(usize, usize)> for IMat {
    fn index_mut(&mut self, (r, c): (usize, usize)) -> &mut i128 {
        &mut self.a[r * self.cols + c]
    }
}

/// Fraction-free row echelon form (Bareiss). Returns the pivot columns;
/// the rank is their number. Destroys `m`.
pub(crate) fn bareiss_echelon(m: &mut IMat) -> Vec<usize> {
    let mut pivots = Vec::new();
    let mut prev: i128 = 1;
    let mut row = 0;
    for col in 0..m.cols {
        if row == m.rows {
            break;
        }
        let Some(p) = (row..m.rows).find(|&i| m[(i, col)] != 0) else {
            continue;
        };
        m.swap_rows(row, p);
        for i in row + 1..m.rows {
            for j in col + 1..m.cols {
                let num = m[(row, col)] * m[(i, j)] - m[(i, col)] * m[(row, j)];
                debug_assert_eq!(num % prev, 0, "fraction-free step must divide exactly");
                m[(i, j)] = num / prev;
            }
            m[(i, col)] = 0;
        }
        prev = m[(row, col)];
        pivots.push(col);
        row += 1;
    }
    pivots
}

/// Rank of a rational matrix: clear each row to integers, then eliminate.
pub(crate) fn rational_rank(rows: &[Vec<Rat128>]) -> usize {
    if rows.is_empty() {
        return 0;
    }
    let cleared: Vec<Vec<i128>> = rows.iter().map(|r| clear_row(r)).collect();
    let mut m = IMat::from_rows(&cleared);
    bareiss_echelon(&mut m).len()
}

fn clear_row(row: &[Rat128]) -> Vec<i128> {
    let mut lcm: i128 = 1;
    for x in row {
        lcm = num_integer::lcm(lcm, *x.denom());
    }
    row.iter().map(|x| x.numer() * (lcm / x.denom())).collect()
}

/// Solve `A x = b` over the rationals. Returns `None` when inconsistent.
/// Free variables, if any, are set to zero, so the result is a particular
/// solution; when `A` has full column rank it is the unique one.
pub(crate) fn solve_rational(a: &[Vec<Rat128>], b: &[Rat128]) -> Option<Vec<Rat128>> {
    let rows = a.len();
    assert_eq!(rows, b.len());
    let cols = a.first().map_or(0, Vec::len);
    let mut aug: Vec<Vec<Rat128>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(*rhs);
            r
        })
        .collect();
    if rows == 0 {
        return Some(vec![Rat128::zero(); cols]);
    }
    let cleared: Vec<Vec<i128>> = aug.drain(..).map(|r| clear_row(&r)).collect();
    let mut m = IMat::from_rows(&cleared);
    let pivots = bareiss_echelon(&mut m);
    // A pivot in the augmented column means the system is inconsistent.
    if pivots.last() == Some(&cols) {
        return None;
    }
    // Back substitution over the rationals.
    let mut x = vec![Rat128::zero(); cols];
    for (row, &pc) in pivots.iter().enumerate().rev() {
        let mut acc = Rat128::new(m[(row, cols)], 1);
        for j in pc + 1..cols {
            acc -= Rat128::new(m[(row, j)], 1) * x[j];
        }
        x[pc] = acc / Rat128::new(m[(row, pc)], 1);
    }
    Some(x)
}

/// Unimodular diagonalization: returns `(u, d, v)` with `u * m * v = d`,
/// `u` and `v` products of elementary integer operations, `d` diagonal.
/// The diagonal entries are not normalized into a divisibility chain, which
/// none of the callers need.
pub(crate) fn diagonalize(m: &IMat) -> (IMat, IMat, IMat) {
    let mut d = m.clone();
    let mut u = IMat::identity(d.rows);
    let mut v = IMat::identity(d.cols);

    let steps = d.rows.min(d.cols);
    for t in 0..steps {
        loop {
            // Smallest nonzero entry of the trailing submatrix to (t, t).
            let mut best: Option<(usize, usize)> = None;
            for i in t..d.rows {
                for j in t..d.cols {
                    if d[(i, j)] != 0
                        && best.is_none_or(|(bi, bj)| d[(i, j)].abs() < d[(bi, bj)].abs())
                    {
                        best = Some((i, j));
                    }
                }
            }
            let Some((bi, bj)) = best else {
                return (u, d, v);
            };
            d.swap_rows(t, bi);
            u.swap_rows(t, bi);
            d.swap_cols(t, bj);
            v.swap_cols(t, bj);

            let mut dirty = false;
            for i in t + 1..d.rows {
                let q = d[(i, t)] / d[(t, t)];
                if q != 0 {
                    d.row_sub(i, t, q);
                    u.row_sub(i, t, q);
                }
                if d[(i, t)] != 0 {
                    dirty = true;
                }
            }
            for j in t + 1..d.cols {
                let q = d[(t, j)] / d[(t, t)];
                if q != 0 {
                    d.col_sub(j, t, q);
                    v.col_sub(j, t, q);
                }
                if d[(t, j)] != 0 {
                    dirty = true;
                }
            }
            if !dirty {
                break;
            }
        }
    }
    (u, d, v)
}

/// Solve `W X = Y` over the integers, where `W` has full row rank.
/// On success returns an integer solution; otherwise the rational
/// particular solution, as evidence that no integer one exists.
pub(crate) fn solve_integer_matrix(w: &IMat, y: &IMat) -> Result<IMat, Vec<Vec<Rat128>>> {
    assert_eq!(w.rows, y.rows);
    let (u, d, v) = diagonalize(w);
    let uy = u.mul(y);
    let rank = (0..w.rows.min(w.cols)).take_while(|&i| d[(i, i)] != 0).count();
    assert_eq!(rank, w.rows, "coefficient matrix must have full row rank");

    let mut z = IMat::zero(w.cols, y.cols);
    let mut exact = true;
    for i in 0..rank {
        for j in 0..y.cols {
            if uy[(i, j)] % d[(i, i)] != 0 {
                exact = false;
            }
        }
    }
    if exact {
        for i in 0..rank {
            for j in 0..y.cols {
                z[(i, j)] = uy[(i, j)] / d[(i, i)];
            }
        }
        return Ok(v.mul(&z));
    }

    // Rational witness: the same construction carried out over Q.
    let mut zq = vec![vec![Rat128::zero(); y.cols]; w.cols];
    for i in 0..rank {
        for j in 0..y.cols {
            zq[i][j] = Rat128::new(uy[(i, j)], d[(i, i)]);
        }
    }
    let mut xq = vec![vec![Rat128::zero(); y.cols]; w.cols];
    for i in 0..w.cols {
        for j in 0..y.cols {
            let mut acc = Rat128::zero();
            for k in 0..w.cols {
                acc += Rat128::new(v[(i, k)], 1) * zq[k][j];
            }
            xq[i][j] = acc;
        }
    }
    Err(xq)
}

/// All diagonal entries of the unimodular diagonalization are units; for a
/// full-row-rank matrix this says the rows extend to a basis of `Z^cols`.
pub(crate) fn rows_extend_to_basis(m: &IMat) -> bool {
    let (_, d, _) = diagonalize(m);
    (0..m.rows).all(|i| i < m.cols && d[(i, i)].abs() == 1)
}
