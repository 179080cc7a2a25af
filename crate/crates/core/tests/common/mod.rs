//! Shared oracles and corpora for the integration suites.
//!
//! Everything here recomputes expected values by a route independent of the
//! library code under test: counting by dynamic programming, regularity by
//! the definitional inequality over brute-force point enumeration.

#![allow(dead_code)]

use mvstates::geometry::{Rat, RationalPoint, RationalSimplex};
use mvstates::FiniteMvAlgebra;

/// Number of nonnegative integer solutions of `sum k_i v_i = t`, by
/// dynamic programming over the weights.
pub fn weighted_composition_count(k: &[i64], t: i64) -> u128 {
    assert!(t >= 0);
    let mut dp = vec![0u128; (t + 1) as usize];
    dp[0] = 1;
    for &ki in k {
        let mut next = vec![0u128; (t + 1) as usize];
        for s in 0..=t as usize {
            if dp[s] == 0 {
                continue;
            }
            let mut acc = s as i64;
            while acc <= t {
                next[acc as usize] += dp[s];
                acc += ki;
            }
        }
        dp = next;
    }
    dp[t as usize]
}

/// Number of states `A -> N` for finite algebras, counted independently:
/// atom-value tuples split over the codomain chains, and each chain `t_j`
/// contributes the number of solutions of `sum k_i v_i = t_j`.
pub fn state_count_oracle(domain: &FiniteMvAlgebra, codomain: &FiniteMvAlgebra) -> u128 {
    codomain
        .chains()
        .iter()
        .map(|&t| weighted_composition_count(domain.chains(), t))
        .product()
}

/// Binomial coefficient, exact.
pub fn binomial(n: u64, k: u64) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k.min(n - k) {
        acc = acc * (n - i) as u128 / (i + 1) as u128;
    }
    acc
}

/// Count functions `{0..m} -> {0..n}` respecting the divisibility
/// constraint `k[f(j)] | t[j]`, optionally restricted to surjections.
/// This is the dual-point count that validates homomorphism search.
pub fn dual_function_count(k: &[i64], t: &[i64], surjective: bool) -> u64 {
    let n = k.len();
    let m = t.len();
    if n == 0 {
        // Only the empty function exists, and only onto an empty target.
        return u64::from(m == 0);
    }
    let mut count = 0;
    let mut f = vec![0usize; m];
    loop {
        let ok_div = f.iter().enumerate().all(|(j, &i)| t[j] % k[i] == 0);
        let ok_sur = !surjective || (0..n).all(|i| f.contains(&i));
        if ok_div && ok_sur {
            count += 1;
        }
        // Odometer over n^m.
        let mut pos = m;
        loop {
            if pos == 0 {
                return count;
            }
            pos -= 1;
            f[pos] += 1;
            if f[pos] < n {
                break;
            }
            f[pos] = 0;
        }
        if f.iter().all(|&d| d == 0) {
            return count;
        }
    }
}

/// Definitional regularity: no face has a rational point of denominator
/// below the face's vertex-denominator sum in its relative interior. The
/// search enumerates, for each face and each candidate denominator `q`
/// below the sum, the integer box of the scaled face and tests relative
/// interior membership exactly.
pub fn definitional_regularity_oracle(s: &RationalSimplex) -> bool {
    let n = s.vertices().len();
    for mask in 1u32..(1 << n) {
        let idx: Vec<usize> = (0..n).filter(|i| mask & (1 << i) != 0).collect();
        let face = s.face(&idx).expect("faces of a simplex are simplices");
        let dsum: i64 = face.vertices().iter().map(RationalPoint::den).sum();
        for q in 1..dsum {
            if face_has_interior_point_with_step(&face, q) {
                return false;
            }
        }
    }
    true
}

/// Is there a point of `(1/q) Z^d` in the relative interior of `face`?
fn face_has_interior_point_with_step(face: &RationalSimplex, q: i64) -> bool {
    let d = face.ambient_dim();
    let mut lo = vec![i64::MAX; d];
    let mut hi = vec![i64::MIN; d];
    for v in face.vertices() {
        for (i, c) in v.coords().iter().enumerate() {
            let scaled = Rat::from_integer(q) * c;
            lo[i] = lo[i].min(scaled.floor().to_integer());
            hi[i] = hi[i].max(scaled.ceil().to_integer());
        }
    }
    let mut z = lo.clone();
    loop {
        let point = RationalPoint::new(z.iter().map(|&zi| Rat::new(zi, q)).collect());
        if face.in_relative_interior(&point) {
            return true;
        }
        let mut pos = d;
        loop {
            if pos == 0 {
                return false;
            }
            pos -= 1;
            z[pos] += 1;
            if z[pos] <= hi[pos] {
                break;
            }
            z[pos] = lo[pos];
        }
    }
}

/// All chain signatures with `n` factors and entries in `1..=max`.
pub fn signatures(n: usize, max: i64) -> Vec<Vec<i64>> {
    let mut out = vec![Vec::new()];
    for _ in 0..n {
        let mut next = Vec::new();
        for sig in &out {
            for k in 1..=max {
                let mut s = sig.clone();
                s.push(k);
                next.push(s);
            }
        }
        out = next;
    }
    out
}

/// Corpus of algebras with at most `cap` elements: all signatures with one
/// factor up to `M_12`, two factors up to `M_8`, three factors up to `M_4`.
pub fn small_algebra_corpus(cap: u128) -> Vec<FiniteMvAlgebra> {
    let mut out = Vec::new();
    for k in 1..=12 {
        out.push(FiniteMvAlgebra::chain(k).unwrap());
    }
    for sig in signatures(2, 8) {
        out.push(FiniteMvAlgebra::new(sig).unwrap());
    }
    for sig in signatures(3, 4) {
        out.push(FiniteMvAlgebra::new(sig).unwrap());
    }
    out.retain(|a| a.element_count() <= cap);
    out
}
