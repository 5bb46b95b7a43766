//! Independent reference implementations used to cross-check the engine.
//!
//! Nothing here calls into the engine's geometry; every oracle recomputes its
//! answer from coordinates on the moment curve or from first principles.

#![allow(dead_code)]

use hst_core::VertexTuple;
use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

pub fn tup(entries: &[u8]) -> VertexTuple {
    VertexTuple::new(entries.to_vec()).unwrap()
}

pub fn tuples(list: &[&[u8]]) -> Vec<VertexTuple> {
    let mut out: Vec<_> = list.iter().map(|e| tup(e)).collect();
    out.sort();
    out
}

/// Parses compact labels such as "135" (single-digit vertices only).
pub fn digits(label: &str) -> VertexTuple {
    tup(&label.bytes().map(|b| b - b'0').collect::<Vec<_>>())
}

pub fn digit_set(labels: &[&str]) -> Vec<VertexTuple> {
    let mut out: Vec<_> = labels.iter().map(|l| digits(l)).collect();
    out.sort();
    out
}

pub fn combinations(m: u8, k: usize) -> Vec<Vec<u8>> {
    fn go(start: u8, m: u8, k: usize, cur: &mut Vec<u8>, out: &mut Vec<Vec<u8>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for x in start..=m {
            cur.push(x);
            go(x + 1, m, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(1, m, k, &mut Vec::new(), &mut out);
    out
}

fn moment_point(t: i64, delta: usize) -> Vec<BigInt> {
    (1..=delta as u32).map(|e| BigInt::from(t).pow(e)).collect()
}

/// Fraction-free Gaussian elimination.
pub fn determinant(mut a: Vec<Vec<BigInt>>) -> BigInt {
    let n = a.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for k in 0..n {
        if a[k][k].is_zero() {
            match (k + 1..n).find(|&r| !a[r][k].is_zero()) {
                Some(r) => {
                    a.swap(k, r);
                    sign = -sign;
                }
                None => return BigInt::zero(),
            }
        }
        for i in k + 1..n {
            for j in k + 1..n {
                let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                a[i][j] = v / &prev;
            }
        }
        prev = a[k][k].clone();
    }
    sign * &a[n - 1][n - 1]
}

#[derive(Debug, PartialEq, Eq, Clone, Copy)]
pub enum Side {
    Lower,
    Upper,
    Neither,
}

/// Classifies a δ-subset by the side of its affine hull each remaining
/// moment-curve point falls on, measured along the last coordinate.
pub fn determinant_facet_side(y: &[u8], m: u8, delta: usize) -> Side {
    let row = |p: Vec<BigInt>| {
        let mut r = vec![BigInt::one()];
        r.extend(p);
        r
    };
    let base: Vec<Vec<BigInt>> = y
        .iter()
        .map(|&v| row(moment_point(v.into(), delta)))
        .collect();
    // Cofactor of the last coordinate of the free row: f(x + e_δ) − f(x).
    let mut lifted = base.clone();
    let mut origin = vec![BigInt::one()];
    origin.extend(std::iter::repeat_n(BigInt::zero(), delta));
    let mut up = origin.clone();
    up[delta] = BigInt::one();
    lifted.push(up);
    let mut flat = base.clone();
    flat.push(origin);
    let slope = determinant(lifted) - determinant(flat);
    let (mut above, mut below) = (false, false);
    for i in 1..=m {
        if y.contains(&i) {
            continue;
        }
        let mut rows = base.clone();
        rows.push(row(moment_point(i.into(), delta)));
        let f = determinant(rows);
        let s = &f * &slope;
        if s.is_positive() {
            above = true;
        } else if s.is_negative() {
            below = true;
        } else {
            return Side::Neither;
        }
    }
    match (above, below) {
        (true, false) => Side::Lower,
        (false, true) => Side::Upper,
        (false, false) => Side::Lower,
        _ => Side::Neither,
    }
}

fn volume(s: &[u8]) -> BigRational {
    let mut v = BigInt::one();
    for (i, &a) in s.iter().enumerate() {
        for &b in &s[i + 1..] {
            v *= BigInt::from(b) - BigInt::from(a);
        }
    }
    BigRational::from_integer(v)
}

/// Two simplices of `C(m, δ)` cross iff some `δ+2` of their vertices, read in
/// order, alternate between them (a Radon partition on the moment curve).
pub fn simplices_cross(s: &[u8], t: &[u8], delta: usize) -> bool {
    let mut pool: Vec<u8> = s.iter().chain(t).copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let within = |part: &[u8], set: &[u8]| part.iter().all(|x| set.contains(x));
    subsets_of(&pool, delta + 2).into_iter().any(|z| {
        let odd: Vec<u8> = z.iter().step_by(2).copied().collect();
        let even: Vec<u8> = z.iter().skip(1).step_by(2).copied().collect();
        (within(&odd, s) && within(&even, t)) || (within(&odd, t) && within(&even, s))
    })
}

/// Volume of `C(m, δ)` times `δ!`, from the pulling triangulation at vertex
/// 1: one cone `{1} ∪ F` per facet `F` avoiding vertex 1.
pub fn polytope_volume(m: u8, delta: usize) -> BigRational {
    combinations(m, delta)
        .into_iter()
        .filter(|f| !f.contains(&1) && determinant_facet_side(f, m, delta) != Side::Neither)
        .map(|f| {
            let mut s = vec![1u8];
            s.extend(&f);
            volume(&s)
        })
        .fold(BigRational::zero(), |a, b| a + b)
}

/// Every triangulation of `C(m, δ)` by backtracking over simplex sets whose
/// volumes add up to the volume of the polytope and which pairwise do not
/// cross.
pub fn brute_force_triangulations(m: u8, delta: usize) -> Vec<Vec<Vec<u8>>> {
    #[allow(clippy::too_many_arguments)]
    fn go(
        start: usize,
        acc: BigRational,
        target: &BigRational,
        cands: &[Vec<u8>],
        vols: &[BigRational],
        delta: usize,
        chosen: &mut Vec<usize>,
        out: &mut Vec<Vec<Vec<u8>>>,
    ) {
        if &acc == target {
            out.push(chosen.iter().map(|&i| cands[i].clone()).collect());
            return;
        }
        for i in start..cands.len() {
            let next = &acc + &vols[i];
            if &next > target
                || chosen
                    .iter()
                    .any(|&j| simplices_cross(&cands[j], &cands[i], delta))
            {
                continue;
            }
            chosen.push(i);
            go(i + 1, next, target, cands, vols, delta, chosen, out);
            chosen.pop();
        }
    }
    let candidates = combinations(m, delta + 1);
    let vols: Vec<BigRational> = candidates.iter().map(|c| volume(c)).collect();
    let target = polytope_volume(m, delta);
    let mut out = Vec::new();
    go(
        0,
        BigRational::zero(),
        &target,
        &candidates,
        &vols,
        delta,
        &mut Vec::new(),
        &mut out,
    );
    out
}

/// Triangulations of a convex polygon `C(m, 2)` as maximal sets of pairwise
/// non-crossing diagonals, with crossings decided by orientation tests.
pub fn polygon_triangulation_count(m: i64) -> usize {
    let p = |i: i64| (i, i * i);
    let orient = |a: (i64, i64), b: (i64, i64), c: (i64, i64)| {
        ((b.0 - a.0) * (c.1 - a.1) - (b.1 - a.1) * (c.0 - a.0)).signum()
    };
    let cross = |(a, b): (i64, i64), (c, d): (i64, i64)| {
        orient(p(a), p(b), p(c)) * orient(p(a), p(b), p(d)) < 0
            && orient(p(c), p(d), p(a)) * orient(p(c), p(d), p(b)) < 0
    };
    let diagonals: Vec<(i64, i64)> = (1..=m)
        .flat_map(|a| (a + 2..=m).map(move |b| (a, b)))
        .filter(|&(a, b)| !(a == 1 && b == m))
        .collect();
    let need = (m - 3) as usize;
    fn go(
        start: usize,
        need: usize,
        diags: &[(i64, i64)],
        chosen: &mut Vec<(i64, i64)>,
        cross: &dyn Fn((i64, i64), (i64, i64)) -> bool,
    ) -> usize {
        if chosen.len() == need {
            return 1;
        }
        let mut total = 0;
        for i in start..diags.len() {
            if chosen.iter().all(|&c| !cross(c, diags[i])) {
                chosen.push(diags[i]);
                total += go(i + 1, need, diags, chosen, cross);
                chosen.pop();
            }
        }
        total
    }
    go(0, need, &diagonals, &mut Vec::new(), &cross)
}

/// Somewhere, the lift of `s` lies strictly above the lift of `t`.
///
/// Adjoining the vertical direction as a point at +∞ of the moment curve, a
/// point of `conv(s)` sits above a point of `conv(t)` with the same shadow
/// exactly when an alternating circuit of size `δ+3` through ∞ has its ∞-side
/// in `t ∪ {∞}` and its other side in `s`.
pub fn strictly_above(s: &[u8], t: &[u8], delta: usize) -> bool {
    const INF: u8 = u8::MAX;
    let mut pool: Vec<u8> = s.iter().chain(t).copied().collect();
    pool.sort_unstable();
    pool.dedup();
    let k = delta + 2;
    for z in subsets_of(&pool, k) {
        let mut full = z.clone();
        full.push(INF);
        // ∞ is last; its side holds the positions of the same parity.
        let last = full.len() - 1;
        let inf_side: Vec<u8> = (0..full.len())
            .filter(|i| (last - i) % 2 == 0)
            .map(|i| full[i])
            .collect();
        let other: Vec<u8> = (0..full.len())
            .filter(|i| (last - i) % 2 == 1)
            .map(|i| full[i])
            .collect();
        if inf_side.iter().all(|x| *x == INF || t.contains(x))
            && other.iter().all(|x| s.contains(x))
        {
            return true;
        }
    }
    false
}

fn subsets_of(pool: &[u8], k: usize) -> Vec<Vec<u8>> {
    combinations(pool.len() as u8, k)
        .into_iter()
        .map(|c| c.iter().map(|&i| pool[i as usize - 1]).collect())
        .collect()
}

/// The second order by comparing sections: `T ≤ U` unless some simplex of
/// `T` rises strictly above some simplex of `U`.
pub fn section_leq(t: &[VertexTuple], u: &[VertexTuple], delta: usize) -> bool {
    !t.iter().any(|s| {
        u.iter()
            .any(|v| strictly_above(s.entries(), v.entries(), delta))
    })
}

/// Number of bottom-to-top paths in a DAG given by its edges.
pub fn count_paths(n: usize, edges: &[(usize, usize)], from: usize, to: usize) -> u128 {
    let mut memo = vec![None; n];
    fn go(v: usize, to: usize, edges: &[(usize, usize)], memo: &mut Vec<Option<u128>>) -> u128 {
        if v == to {
            return 1;
        }
        if let Some(x) = memo[v] {
            return x;
        }
        let total = edges
            .iter()
            .filter(|e| e.0 == v)
            .map(|e| go(e.1, to, edges, memo))
            .sum();
        memo[v] = Some(total);
        total
    }
    go(from, to, edges, &mut memo)
}
