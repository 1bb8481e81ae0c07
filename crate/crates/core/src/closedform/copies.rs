use num_traits::{One, Signed, Zero};

use super::{companion, CharPolyFactored};
use crate::counting;
use crate::eigen::{self, RationalPoly, Spectrum};
use crate::error::{Error, Result};
use crate::hypercore::{Hypergraph, WeightTable};
use crate::linalg::RatMatrix;
use crate::matrices::{self, MatrixKind};
use crate::rational::{self, binomial_q, Rational};
use crate::tensorjoin::{CopyKind, KCopyOp, TwoCopyFamily};

/// `u A + v I + t J` for a fixed adjacency matrix `A`.
#[derive(Debug, Clone, PartialEq)]
struct Form {
    u: Rational,
    v: Rational,
    t: Rational,
}

impl Form {
    fn new(u: Rational, v: Rational, t: Rational) -> Self {
        Form { u, v, t }
    }

    /// Value on an eigenvector with `A`-eigenvalue `lambda` and `J`-eigenvalue `j`.
    fn at(&self, lambda: &Rational, j: &Rational) -> Rational {
        &self.u * lambda + &self.v + &self.t * j
    }

    fn at_f64(&self, lambda: f64, j: f64) -> f64 {
        rational::to_f64(&self.u) * lambda + rational::to_f64(&self.v) + rational::to_f64(&self.t) * j
    }
}

/// Diagonal block `u A + v I + t J` and off-diagonal block `a I + b J` of one block row.
#[derive(Debug, Clone, PartialEq)]
struct BlockRow {
    diag: Form,
    a: Rational,
    b: Rational,
}

impl BlockRow {
    /// Moves an adjacency block row with valency `z` to the matrix `kind`
    /// (`D^{-1} L` for the normalized Laplacian).
    fn to_kind(&self, kind: MatrixKind, z: &Rational) -> BlockRow {
        let d = &self.diag;
        match kind {
            MatrixKind::Adjacency => self.clone(),
            MatrixKind::Laplacian => BlockRow {
                diag: Form::new(-d.u.clone(), z - &d.v, -d.t.clone()),
                a: -self.a.clone(),
                b: -self.b.clone(),
            },
            MatrixKind::NormalizedLaplacian => {
                let s = z.recip();
                BlockRow {
                    diag: Form::new(-&d.u * &s, Rational::one() - &d.v * &s, -&d.t * &s),
                    a: -&self.a * &s,
                    b: -&self.b * &s,
                }
            }
        }
    }
}

/// Contributions of a two-copy family to the adjacency matrix: `βI + γJ` inside
/// each copy and `aI + bJ` between the copies.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwoCopyTable {
    pub beta: Rational,
    pub gamma: Rational,
    pub a: Rational,
    pub b: Rational,
}

impl TwoCopyTable {
    fn minus(&self, other: &TwoCopyTable) -> TwoCopyTable {
        TwoCopyTable {
            beta: &self.beta - &other.beta,
            gamma: &self.gamma - &other.gamma,
            a: &self.a - &other.a,
            b: &self.b - &other.b,
        }
    }
}

pub fn two_copy_table(n: usize, t: TwoCopyFamily, w: &WeightTable) -> Result<TwoCopyTable> {
    let zero = Rational::zero;
    match t {
        TwoCopyFamily::Aligned(r) => {
            let (x1, x2) = counting::x1x2(n, r)?;
            let wr = w.get(2 * r);
            let gamma = &x2 * wr;
            Ok(TwoCopyTable { beta: -gamma.clone(), a: (x1 - &x2) * wr, b: gamma.clone(), gamma })
        }
        TwoCopyFamily::Identity => {
            if n == 0 {
                return Err(Error::InvalidParameter("empty copies".into()));
            }
            Ok(TwoCopyTable { beta: zero(), gamma: zero(), a: w.get(2).clone(), b: zero() })
        }
        TwoCopyFamily::Full => {
            let (p1, p2) = match n {
                0 => return Err(Error::InvalidParameter("empty copies".into())),
                1 => (zero(), w.get(2).clone()),
                _ => {
                    let c = counting::k_copy_constants(2, 2, n, 1, w)?;
                    (c.p1p, c.p2p)
                }
            };
            Ok(TwoCopyTable { beta: -p1.clone(), gamma: p1, a: zero(), b: p2 })
        }
        TwoCopyFamily::FullMinusAligned(r) => {
            Ok(two_copy_table(n, TwoCopyFamily::Full, w)?.minus(&two_copy_table(n, TwoCopyFamily::Aligned(r), w)?))
        }
        TwoCopyFamily::FullMinusIdentity => {
            Ok(two_copy_table(n, TwoCopyFamily::Full, w)?.minus(&two_copy_table(n, TwoCopyFamily::Identity, w)?))
        }
    }
}

/// `Σ_c w_c C(n-2, c-2)/(c-1)` over the given cardinalities.
fn pair_weight(n: usize, cards: impl IntoIterator<Item = usize>, w: &WeightTable) -> Rational {
    cards.into_iter().map(|c| w.get(c) * binomial_q(n as i64 - 2, c as i64 - 2) / rational::int(c as i64 - 1)).sum()
}

/// Adjacency of `kind(h)` in terms of `A(h)` with `h` reweighted by `w`.
fn copy_form(kind: CopyKind, h: &Hypergraph, w: &WeightTable) -> Form {
    let n = h.n();
    let (one, zero) = (Rational::one(), Rational::zero());
    match kind {
        CopyKind::Base => Form::new(one, zero.clone(), zero),
        CopyKind::Complement => {
            let mu = pair_weight(n, h.cardinalities(), w);
            Form::new(-one, -mu.clone(), mu)
        }
        CopyKind::Complete => {
            let m = pair_weight(n, 2..=n, w);
            Form::new(zero, -m.clone(), m)
        }
        CopyKind::Empty => Form::new(zero.clone(), zero.clone(), zero),
        CopyKind::TotalComplement => {
            let m = pair_weight(n, 2..=n, w);
            Form::new(-one, -m.clone(), m)
        }
    }
}

/// Exact adjacency of a regular hypergraph, its valency, and the non-perron part
/// of its characteristic polynomial.
fn regular_parts(h: &Hypergraph) -> Result<(RatMatrix, Rational, RationalPoly)> {
    let r = h.is_regular().ok_or(Error::NotRegular)?;
    let a = matrices::exact_matrix(h, MatrixKind::Adjacency)?;
    let p = eigen::charpoly_exact(&a)?;
    let (q, rem) = p.div_rem(&RationalPoly::linear(&r));
    if !rem.is_zero() {
        return Err(Error::InvalidParameter("valency is not an adjacency eigenvalue".into()));
    }
    Ok((a, r, q))
}

struct TwoCopySetup {
    a: RatMatrix,
    r: Rational,
    q: RationalPoly,
    rows: [BlockRow; 2],
}

fn two_copy_setup(
    h: &Hypergraph,
    g1: CopyKind,
    g2: CopyKind,
    t: TwoCopyFamily,
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<TwoCopySetup> {
    h.ensure_simple()?;
    let hw = h.reweighted(w);
    let (a, r, q) = regular_parts(&hw)?;
    let tab = two_copy_table(h.n(), t, w)?;
    let z = two_copy_valencies(h, g1, g2, t, w)?;
    let mut rows = Vec::with_capacity(2);
    for (i, g) in [g1, g2].into_iter().enumerate() {
        let f = copy_form(g, h, w);
        let adj =
            BlockRow { diag: Form::new(f.u, f.v + &tab.beta, f.t + &tab.gamma), a: tab.a.clone(), b: tab.b.clone() };
        if kind == MatrixKind::NormalizedLaplacian && !z[i].is_positive() {
            return Err(Error::IsolatedVertex(i * h.n() + 1));
        }
        rows.push(adj.to_kind(kind, &z[i]));
    }
    let rows: [BlockRow; 2] = rows.try_into().expect("two rows");
    Ok(TwoCopySetup { a, r, q, rows })
}

/// Valencies of the two copies in `g1(h) v_t g2(h)`.
pub fn two_copy_valencies(
    h: &Hypergraph,
    g1: CopyKind,
    g2: CopyKind,
    t: TwoCopyFamily,
    w: &WeightTable,
) -> Result<[Rational; 2]> {
    let hw = h.reweighted(w);
    let r = hw.is_regular().ok_or(Error::NotRegular)?;
    let n = rational::int(h.n() as i64);
    let tab = two_copy_table(h.n(), t, w)?;
    let cross = &tab.beta + &n * &tab.gamma + &tab.a + &n * &tab.b;
    Ok([g1, g2].map(|g| copy_form(g, h, w).at(&r, &n) + &cross))
}

/// Characteristic polynomial of `g1(h) v_t g2(h)` for a regular `h`. Each common
/// eigenvector of `A(h)` and `J` contributes one quadratic; the non-perron ones are
/// multiplied out exactly through the companion matrix of `A(h)`'s non-perron part.
pub fn two_copy_charpoly(
    h: &Hypergraph,
    g1: CopyKind,
    g2: CopyKind,
    t: TwoCopyFamily,
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<CharPolyFactored> {
    let s = two_copy_setup(h, g1, g2, t, w, kind)?;
    let [r1, r2] = &s.rows;
    let n = rational::int(h.n() as i64);
    let mut out = CharPolyFactored::new();
    let d = s.q.degree();
    if d > 0 {
        let couple = &r1.a * &r2.a;
        if couple.is_zero() {
            out.push(s.q.affine_image(&r1.diag.u, &r1.diag.v), 1);
            out.push(s.q.affine_image(&r2.diag.u, &r2.diag.v), 1);
        } else {
            let b = companion(&s.q);
            let id = RatMatrix::identity(d);
            let p1 = &b.scale(&r1.diag.u) + &id.scale(&r1.diag.v);
            let p2 = &b.scale(&r2.diag.u) + &id.scale(&r2.diag.v);
            let m = RatMatrix::from_blocks(&[vec![p1, id.scale(&couple)], vec![id.clone(), p2]]);
            out.push(eigen::charpoly_exact(&m)?, 1);
        }
    }
    let quotient = RatMatrix::from_rows(vec![
        vec![r1.diag.at(&s.r, &n), &r1.a + &n * &r1.b],
        vec![&r2.a + &n * &r2.b, r2.diag.at(&s.r, &n)],
    ]);
    out.set_quotient(quotient);
    Ok(out)
}

/// Floating spectrum of `g1(h) v_t g2(h)` from a common eigenbasis of `A(h)` and `J`.
pub fn two_copy_spectrum(
    h: &Hypergraph,
    g1: CopyKind,
    g2: CopyKind,
    t: TwoCopyFamily,
    w: &WeightTable,
    kind: MatrixKind,
    tol: f64,
) -> Result<Spectrum> {
    let s = two_copy_setup(h, g1, g2, t, w, kind)?;
    let [r1, r2] = &s.rows;
    let sys = eigen::co_eigen(&[s.a.clone(), RatMatrix::ones(h.n())], tol)?;
    let f = rational::to_f64;
    let mut out = Vec::with_capacity(2 * h.n());
    for vals in &sys.values {
        let (lambda, j) = (vals[0], vals[1]);
        let p1 = r1.diag.at_f64(lambda, j);
        let p2 = r2.diag.at_f64(lambda, j);
        let o = (f(&r1.a) + f(&r1.b) * j) * (f(&r2.a) + f(&r2.b) * j);
        let mid = 0.5 * (p1 + p2);
        let rad = (0.25 * (p1 - p2) * (p1 - p2) + o).max(0.0).sqrt();
        out.push(mid - rad);
        out.push(mid + rad);
    }
    Ok(Spectrum::new(out))
}

/// Both copies equal to the regular hypergraph `g`: the non-perron eigenvalues
/// `μ` of the diagonal block give `μ ± a'`, with `a'` the off-diagonal identity
/// coefficient of `kind`.
pub fn two_copy_equal_charpoly(
    g: &Hypergraph,
    t: TwoCopyFamily,
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<CharPolyFactored> {
    let (_, r, q) = regular_parts(g)?;
    let n = rational::int(g.n() as i64);
    let tab = two_copy_table(g.n(), t, w)?;
    let z = &r + &tab.beta + &n * &tab.gamma + &tab.a + &n * &tab.b;
    if kind == MatrixKind::NormalizedLaplacian && !z.is_positive() {
        return Err(Error::IsolatedVertex(1));
    }
    let adj = BlockRow { diag: Form::new(Rational::one(), tab.beta, tab.gamma), a: tab.a, b: tab.b };
    let row = adj.to_kind(kind, &z);
    let mut out = CharPolyFactored::new();
    out.push(q.affine_image(&row.diag.u, &(&row.diag.v + &row.a)), 1);
    out.push(q.affine_image(&row.diag.u, &(&row.diag.v - &row.a)), 1);
    let p = row.diag.at(&r, &n);
    let o = &row.a + &n * &row.b;
    out.push_root(&p + &o, 1);
    out.push_root(p - o, 1);
    Ok(out)
}

/// Values of the `k`-copy operations for one matrix kind: the diagonal block is
/// `αA(h) + βI + γJ`, every off-diagonal block is `aI + bJ`, and `z` is the
/// common valency of the constructed hypergraph.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CopyTable {
    pub alpha: Rational,
    pub beta: Rational,
    pub gamma: Rational,
    pub a: Rational,
    pub b: Rational,
    pub z: Rational,
}

pub fn k_copy_table(h: &Hypergraph, k: usize, op: KCopyOp, w: &WeightTable, kind: MatrixKind) -> Result<CopyTable> {
    let r = h.is_regular().ok_or(Error::NotRegular)?;
    let n = h.n();
    let rr = match op {
        KCopyOp::Mirror { r, .. } | KCopyOp::VcNeighbourhood { r, .. } => r,
        KCopyOp::JoinNeighbourhood { .. } => 1,
    };
    let c = counting::k_copy_constants(k, op.l(), n, rr, w)?;
    let (gamma, a, b) = match op {
        KCopyOp::Mirror { .. } => (c.p12.clone(), &c.p21 - &c.p22, c.p22.clone()),
        KCopyOp::JoinNeighbourhood { .. } => (c.p1p.clone(), Rational::zero(), c.p2p.clone()),
        KCopyOp::VcNeighbourhood { .. } => (&c.p1p - &c.p12, &c.p22 - &c.p21, &c.p2p - &c.p22),
    };
    let nq = rational::int(n as i64);
    let z = &r - &gamma + &nq * &gamma + rational::int(k as i64 - 1) * (&a + &nq * &b);
    if kind == MatrixKind::NormalizedLaplacian && !z.is_positive() {
        return Err(Error::IsolatedVertex(1));
    }
    let adj = BlockRow { diag: Form::new(Rational::one(), -gamma.clone(), gamma), a, b };
    let row = adj.to_kind(kind, &z);
    Ok(CopyTable { alpha: row.diag.u, beta: row.diag.v, gamma: row.diag.t, a: row.a, b: row.b, z })
}

/// Every common eigenvector of `A(h)` and `J`, with diagonal value `d` and
/// off-diagonal value `μ`, contributes `(x - d + μ)^{k-1} (x - d - (k-1)μ)`.
pub fn k_copy_charpoly(
    h: &Hypergraph,
    k: usize,
    op: KCopyOp,
    w: &WeightTable,
    kind: MatrixKind,
) -> Result<CharPolyFactored> {
    let tab = k_copy_table(h, k, op, w, kind)?;
    let (_, r, q) = regular_parts(h)?;
    let n = rational::int(h.n() as i64);
    let km1 = rational::int(k as i64 - 1);
    let mut out = CharPolyFactored::new();
    out.push(q.affine_image(&tab.alpha, &(&tab.beta - &tab.a)), k - 1);
    out.push(q.affine_image(&tab.alpha, &(&tab.beta + &km1 * &tab.a)), 1);
    let d = &tab.alpha * &r + &tab.beta + &n * &tab.gamma;
    let mu = &tab.a + &n * &tab.b;
    out.push_root(&d - &mu, k - 1);
    out.push_root(d + km1 * mu, 1);
    Ok(out)
}
