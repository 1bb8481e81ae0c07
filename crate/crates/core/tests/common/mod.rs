#![allow(dead_code)]

use std::collections::BTreeSet;

use nalgebra::DMatrix;
use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};
use rand::seq::SliceRandom;
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use tenjoin::eigen::RationalPoly;
use tenjoin::rational::{int, ratio, to_f64};
use tenjoin::{Hypergraph, MatrixKind, Rational, WeightTable};

pub type Mat = Vec<Vec<Rational>>;

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn zero() -> Rational {
    int(0)
}

/// `Σ w / (|e| - 1)` over the edges holding both endpoints. Edges are tallied per
/// distinct share first so large families stay cheap.
pub fn adjacency(h: &Hypergraph) -> Mat {
    let n = h.n();
    let mut keys: Vec<(usize, &Rational)> = Vec::new();
    let mut tallies: Vec<Vec<u64>> = Vec::new();
    for e in h.edges() {
        let key = (e.vertices.len(), &e.weight);
        let idx = match keys.iter().position(|k| *k == key) {
            Some(i) => i,
            None => {
                keys.push(key);
                tallies.push(vec![0; n * n]);
                keys.len() - 1
            }
        };
        let t = &mut tallies[idx];
        for &u in &e.vertices {
            for &v in &e.vertices {
                if u != v {
                    t[(u - 1) * n + v - 1] += 1;
                }
            }
        }
    }
    let mut a = vec![vec![zero(); n]; n];
    for ((len, w), t) in keys.iter().zip(&tallies) {
        let share = *w / int(*len as i64 - 1);
        for i in 0..n {
            for j in 0..n {
                if t[i * n + j] > 0 {
                    a[i][j] += &share * int(t[i * n + j] as i64);
                }
            }
        }
    }
    a
}

/// Sum of the weights of the edges through each vertex.
pub fn valencies(h: &Hypergraph) -> Vec<Rational> {
    let n = h.n();
    let mut weights: Vec<&Rational> = Vec::new();
    let mut tallies: Vec<Vec<u64>> = Vec::new();
    for e in h.edges() {
        let idx = match weights.iter().position(|w| **w == e.weight) {
            Some(i) => i,
            None => {
                weights.push(&e.weight);
                tallies.push(vec![0; n]);
                weights.len() - 1
            }
        };
        for &v in &e.vertices {
            tallies[idx][v - 1] += 1;
        }
    }
    let mut d = vec![zero(); n];
    for (w, t) in weights.iter().zip(&tallies) {
        for (dv, &c) in d.iter_mut().zip(t) {
            *dv += *w * int(c as i64);
        }
    }
    d
}

pub fn laplacian(h: &Hypergraph) -> Mat {
    let a = adjacency(h);
    let d = valencies(h);
    let n = h.n();
    (0..n).map(|i| (0..n).map(|j| if i == j { &d[i] - &a[i][j] } else { -&a[i][j] }).collect()).collect()
}

/// `D^{-1} L`; `None` when some vertex has valency 0.
pub fn rw_laplacian(h: &Hypergraph) -> Option<Mat> {
    let d = valencies(h);
    if d.iter().any(|x| *x == zero()) {
        return None;
    }
    let l = laplacian(h);
    Some(l.into_iter().zip(&d).map(|(row, di)| row.into_iter().map(|x| x / di).collect()).collect())
}

pub fn exact(h: &Hypergraph, kind: MatrixKind) -> Option<Mat> {
    match kind {
        MatrixKind::Adjacency => Some(adjacency(h)),
        MatrixKind::Laplacian => Some(laplacian(h)),
        MatrixKind::NormalizedLaplacian => rw_laplacian(h),
    }
}

/// Fraction-free (Bareiss) determinant of an integer matrix.
pub fn det(mut m: Vec<Vec<BigInt>>) -> BigInt {
    let n = m.len();
    let mut sign = BigInt::one();
    let mut prev = BigInt::one();
    for c in 0..n {
        let Some(p) = (c..n).find(|&r| !m[r][c].is_zero()) else {
            return BigInt::zero();
        };
        if p != c {
            m.swap(p, c);
            sign = -sign;
        }
        for r in c + 1..n {
            for k in c + 1..n {
                let v = &m[r][k] * &m[c][c] - &m[r][c] * &m[c][k];
                m[r][k] = v / &prev;
            }
            m[r][c] = BigInt::zero();
        }
        prev = m[c][c].clone();
    }
    if n == 0 {
        return sign;
    }
    sign * &m[n - 1][n - 1]
}

fn poly_mul(p: &[Rational], q: &[Rational]) -> Vec<Rational> {
    let mut out = vec![zero(); p.len() + q.len() - 1];
    for (i, a) in p.iter().enumerate() {
        for (j, b) in q.iter().enumerate() {
            out[i + j] += a * b;
        }
    }
    out
}

/// `det(xI - M)` from the integer matrix `N = sM` (`s` the common denominator):
/// `det(xI - N)` is sampled at `x = 0..=n` and interpolated, then rescaled.
/// Coefficients from the constant term up.
pub fn charpoly(m: &Mat) -> Vec<Rational> {
    let n = m.len();
    let s = m.iter().flatten().fold(BigInt::one(), |acc, x| acc.lcm(x.denom()));
    let scaled: Vec<Vec<BigInt>> =
        m.iter().map(|row| row.iter().map(|x| x.numer() * (&s / x.denom())).collect()).collect();
    let xs: Vec<i64> = (0..=n as i64).collect();
    let ys: Vec<BigInt> = xs
        .iter()
        .map(|&x| {
            let shifted = (0..n)
                .map(|i| {
                    (0..n).map(|j| if i == j { BigInt::from(x) - &scaled[i][j] } else { -&scaled[i][j] }).collect()
                })
                .collect();
            det(shifted)
        })
        .collect();
    let mut out = vec![zero(); n + 1];
    for (i, &xi) in xs.iter().enumerate() {
        let mut basis = vec![int(1)];
        let mut denom = 1i64;
        for (j, &xj) in xs.iter().enumerate() {
            if i != j {
                basis = poly_mul(&basis, &[int(-xj), int(1)]);
                denom *= xi - xj;
            }
        }
        let scale = Rational::from_integer(ys[i].clone()) / int(denom);
        for (o, b) in out.iter_mut().zip(basis) {
            *o += &scale * b;
        }
    }
    let s = Rational::from_integer(s);
    for (i, c) in out.iter_mut().enumerate() {
        *c /= s.pow((n - i) as i32);
    }
    out
}

pub fn charpoly_of(h: &Hypergraph, kind: MatrixKind) -> Option<Vec<Rational>> {
    exact(h, kind).map(|m| charpoly(&m))
}

/// Compares coefficient lists, treating trailing zeros as absent.
pub fn same_poly(p: &RationalPoly, q: &[Rational]) -> bool {
    let trim = |v: &[Rational]| {
        let mut v = v.to_vec();
        while v.last().is_some_and(|x| *x == zero()) {
            v.pop();
        }
        v
    };
    trim(p.coeffs()) == trim(q)
}

/// Eigenvalues of `A`, `L` or `D^{-1/2} L D^{-1/2}` from nalgebra.
pub fn float_spectrum(h: &Hypergraph, kind: MatrixKind) -> Option<Vec<f64>> {
    let n = h.n();
    let d: Vec<f64> = valencies(h).iter().map(to_f64).collect();
    let m = match kind {
        MatrixKind::Adjacency => adjacency(h),
        _ => laplacian(h),
    };
    let mut f = DMatrix::from_fn(n, n, |i, j| to_f64(&m[i][j]));
    if kind == MatrixKind::NormalizedLaplacian {
        if d.contains(&0.0) {
            return None;
        }
        f = DMatrix::from_fn(n, n, |i, j| f[(i, j)] / (d[i] * d[j]).sqrt());
    }
    let mut vals: Vec<f64> = f.symmetric_eigen().eigenvalues.iter().copied().collect();
    vals.sort_by(f64::total_cmp);
    Some(vals)
}

pub fn max_dev(a: &[f64], b: &[f64]) -> f64 {
    if a.len() != b.len() {
        return f64::INFINITY;
    }
    let mut a = a.to_vec();
    let mut b = b.to_vec();
    a.sort_by(f64::total_cmp);
    b.sort_by(f64::total_cmp);
    a.iter().zip(&b).map(|(x, y)| (x - y).abs()).fold(0.0, f64::max)
}

pub fn rand_weight(r: &mut impl Rng) -> Rational {
    ratio(r.gen_range(1..=6), r.gen_range(1..=4))
}

pub fn rand_table(r: &mut impl Rng, max_card: usize) -> WeightTable {
    let mut w = WeightTable::ones();
    for c in 2..=max_card {
        w = w.with(c, rand_weight(r)).unwrap();
    }
    w
}

/// Union of random `Z_n`-orbits of subsets of `{1..n}`, one random weight per
/// orbit. Cyclic symmetry makes every vertex valency equal.
pub fn circulant(r: &mut impl Rng, n: usize, cards: &[usize], max_orbits: usize, weighted: bool) -> Hypergraph {
    let mut edges: BTreeSet<Vec<usize>> = BTreeSet::new();
    let mut out = Vec::new();
    let cards: Vec<usize> = cards.iter().copied().filter(|&c| c >= 2 && c <= n).collect();
    if cards.is_empty() {
        return Hypergraph::edgeless(n);
    }
    let orbits = r.gen_range(1..=max_orbits);
    for _ in 0..orbits {
        let c = *cards.choose(r).unwrap();
        let mut all: Vec<usize> = (0..n).collect();
        all.shuffle(r);
        let base = &all[..c];
        let w = if weighted { rand_weight(r) } else { int(1) };
        for s in 0..n {
            let mut e: Vec<usize> = base.iter().map(|&v| (v + s) % n + 1).collect();
            e.sort_unstable();
            if edges.insert(e.clone()) {
                out.push((e, w.clone()));
            }
        }
    }
    let h = Hypergraph::new(n, out).unwrap();
    assert!(h.is_regular().is_some(), "circulant construction must be regular");
    h
}

pub fn triangle() -> Hypergraph {
    Hypergraph::unweighted(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap()
}

pub fn cycle4() -> Hypergraph {
    Hypergraph::unweighted(4, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap()
}

pub fn k43() -> Hypergraph {
    Hypergraph::complete_uniform(4, 3, int(1)).unwrap()
}

pub const KINDS: [MatrixKind; 3] = [MatrixKind::Adjacency, MatrixKind::Laplacian, MatrixKind::NormalizedLaplacian];
