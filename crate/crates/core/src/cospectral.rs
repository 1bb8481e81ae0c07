//! Enumeration of small hypergraphs up to isomorphism, search for cospectral
//! regular pairs, and cospectral join families built from them.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use crate::eigen::RationalPoly;
use crate::error::{Error, Result};
use crate::hgr;
use crate::hypercore::{Hypergraph, WeightTable};
use crate::matrices::{self, MatrixKind};
use crate::rational::{self, Rational};
use crate::subsets::combinations;
use crate::tensorjoin::{backbone_join, tensor_join, ClassSequence, EdgeFamily};

/// Largest vertex count accepted by [`canonical_form`] and [`enumerate`].
pub const MAX_N: usize = 8;
/// Default cap on labeled hypergraphs visited by one enumeration.
pub const DEFAULT_BUDGET: u64 = 2_000_000;

/// Lexicographically least sorted `(vertex mask, weight)` list over all vertex
/// relabelings compatible with a refined invariant colouring.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonicalForm {
    n: usize,
    edges: Vec<(u32, Rational)>,
}

impl CanonicalForm {
    pub fn n(&self) -> usize {
        self.n
    }

    pub fn to_hypergraph(&self) -> Hypergraph {
        let edges = self
            .edges
            .iter()
            .map(|(m, w)| ((0..self.n).filter(|v| m >> v & 1 == 1).map(|v| v + 1).collect(), w.clone()));
        Hypergraph::new(self.n, edges).expect("canonical edges are valid")
    }
}

fn masks(h: &Hypergraph) -> Vec<(u32, Rational)> {
    h.edges().iter().map(|e| (e.vertices.iter().fold(0u32, |m, &v| m | 1 << (v - 1)), e.weight.clone())).collect()
}

/// Iso-invariant vertex colours: start from the multiset of incident
/// `(size, weight)` pairs, then refine by the colours of co-members until stable.
fn colours(n: usize, edges: &[(u32, Rational)]) -> Vec<usize> {
    let rank = |sigs: &[Vec<(usize, usize, Rational)>]| -> Vec<usize> {
        let distinct: BTreeSet<&Vec<(usize, usize, Rational)>> = sigs.iter().collect();
        let order: Vec<&Vec<(usize, usize, Rational)>> = distinct.into_iter().collect();
        sigs.iter().map(|s| order.binary_search(&s).expect("present")).collect()
    };
    let initial: Vec<Vec<(usize, usize, Rational)>> = (0..n)
        .map(|v| {
            let mut s: Vec<(usize, usize, Rational)> = edges
                .iter()
                .filter(|(m, _)| m >> v & 1 == 1)
                .map(|(m, w)| (m.count_ones() as usize, 0, w.clone()))
                .collect();
            s.sort();
            s
        })
        .collect();
    let mut col = rank(&initial);
    loop {
        let sigs: Vec<Vec<(usize, usize, Rational)>> = (0..n)
            .map(|v| {
                let mut s = vec![(col[v], usize::MAX, Rational::from_integer(0.into()))];
                let mut inc: Vec<(usize, usize, Rational)> = edges
                    .iter()
                    .filter(|(m, _)| m >> v & 1 == 1)
                    .map(|(m, w)| {
                        let mut others: Vec<usize> =
                            (0..n).filter(|&u| u != v && m >> u & 1 == 1).map(|u| col[u]).collect();
                        others.sort_unstable();
                        let code = others.iter().fold(0usize, |acc, c| acc.wrapping_mul(31).wrapping_add(c + 1));
                        (m.count_ones() as usize, code, w.clone())
                    })
                    .collect();
                inc.sort();
                s.extend(inc);
                s
            })
            .collect();
        let next = rank(&sigs);
        let classes = |c: &[usize]| c.iter().collect::<BTreeSet<_>>().len();
        if classes(&next) == classes(&col) {
            return col;
        }
        col = next;
    }
}

pub fn canonical_form(h: &Hypergraph) -> Result<CanonicalForm> {
    let n = h.n();
    if n > MAX_N {
        return Err(Error::EnumerationTooLarge(format!("canonical forms need n <= {MAX_N}, got {n}")));
    }
    let edges = masks(h);
    let col = colours(n, &edges);
    // positions are filled in colour order; each position takes any unused vertex of its colour
    let mut slots: Vec<usize> = col.clone();
    slots.sort_unstable();
    let mut best: Option<Vec<(u32, Rational)>> = None;
    let mut perm = vec![usize::MAX; n];
    let mut used = vec![false; n];
    fn rec(
        pos: usize,
        slots: &[usize],
        col: &[usize],
        perm: &mut [usize],
        used: &mut [bool],
        edges: &[(u32, Rational)],
        best: &mut Option<Vec<(u32, Rational)>>,
    ) {
        let n = slots.len();
        if pos == n {
            let mut relabeled: Vec<(u32, Rational)> = edges
                .iter()
                .map(|(m, w)| ((0..n).filter(|&v| m >> v & 1 == 1).fold(0u32, |a, v| a | 1 << perm[v]), w.clone()))
                .collect();
            relabeled.sort();
            if best.as_ref().is_none_or(|b| relabeled < *b) {
                *best = Some(relabeled);
            }
            return;
        }
        for v in 0..n {
            if !used[v] && col[v] == slots[pos] {
                used[v] = true;
                perm[v] = pos;
                rec(pos + 1, slots, col, perm, used, edges, best);
                used[v] = false;
            }
        }
    }
    rec(0, &slots, &col, &mut perm, &mut used, &edges, &mut best);
    Ok(CanonicalForm { n, edges: best.unwrap_or_default() })
}

pub fn is_isomorphic(a: &Hypergraph, b: &Hypergraph) -> Result<bool> {
    Ok(a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a)? == canonical_form(b)?)
}

/// Candidate edges as masks, grouped by their least vertex.
fn candidates(n: usize, cards: &BTreeSet<usize>) -> Vec<Vec<u32>> {
    let vs: Vec<usize> = (0..n).collect();
    let mut by_min = vec![Vec::new(); n];
    for &c in cards {
        for s in combinations(&vs, c) {
            by_min[s[0]].push(s.iter().fold(0u32, |m, &v| m | 1 << v));
        }
    }
    by_min
}

/// Calls `f` on every labeled simple hypergraph with edges from `cards` in
/// which every vertex lies in exactly `r` edges. Returns `false` if the budget ran out.
fn for_each_regular(n: usize, cards: &BTreeSet<usize>, r: usize, budget: u64, f: &mut dyn FnMut(&[u32])) -> bool {
    struct St<'a> {
        n: usize,
        r: usize,
        by_min: Vec<Vec<u32>>,
        deg: Vec<usize>,
        chosen: Vec<u32>,
        left: u64,
        f: &'a mut dyn FnMut(&[u32]),
    }
    fn vertex(st: &mut St, v: usize) -> bool {
        if v == st.n {
            if st.left == 0 {
                return false;
            }
            st.left -= 1;
            (st.f)(&st.chosen);
            return true;
        }
        let need = st.r - st.deg[v];
        pick(st, v, 0, need)
    }
    fn pick(st: &mut St, v: usize, from: usize, need: usize) -> bool {
        if need == 0 {
            return vertex(st, v + 1);
        }
        let len = st.by_min[v].len();
        for x in from..len {
            if len - x < need {
                break;
            }
            let m = st.by_min[v][x];
            if (0..st.n).any(|u| m >> u & 1 == 1 && st.deg[u] >= st.r) {
                continue;
            }
            for u in 0..st.n {
                if m >> u & 1 == 1 {
                    st.deg[u] += 1;
                }
            }
            st.chosen.push(m);
            let ok = pick(st, v, x + 1, need - 1);
            st.chosen.pop();
            for u in 0..st.n {
                if m >> u & 1 == 1 {
                    st.deg[u] -= 1;
                }
            }
            if !ok {
                return false;
            }
        }
        true
    }
    let mut st = St { n, r, by_min: candidates(n, cards), deg: vec![0; n], chosen: Vec::new(), left: budget, f };
    vertex(&mut st, 0)
}

fn from_masks(n: usize, ms: &[u32]) -> Hypergraph {
    let edges = ms.iter().map(|m| ((0..n).filter(|v| m >> v & 1 == 1).map(|v| v + 1).collect(), rational::int(1)));
    Hypergraph::new(n, edges).expect("masks are valid edges")
}

/// Unweighted simple hypergraphs on `n` vertices with edge sizes in `cards`, one
/// per isomorphism class, optionally restricted to `uniform` edges of one size and
/// to `regular` vertex degree. Sorted by canonical form.
pub fn enumerate(
    n: usize,
    cards: &BTreeSet<usize>,
    uniform: Option<usize>,
    regular: Option<usize>,
) -> Result<Vec<Hypergraph>> {
    enumerate_with_budget(n, cards, uniform, regular, DEFAULT_BUDGET)
}

pub fn enumerate_with_budget(
    n: usize,
    cards: &BTreeSet<usize>,
    uniform: Option<usize>,
    regular: Option<usize>,
    budget: u64,
) -> Result<Vec<Hypergraph>> {
    if n > MAX_N {
        return Err(Error::EnumerationTooLarge(format!("enumeration needs n <= {MAX_N}, got {n}")));
    }
    let cards: BTreeSet<usize> = match uniform {
        Some(m) => cards.iter().copied().filter(|&c| c == m).collect(),
        None => cards.clone(),
    };
    let cards: BTreeSet<usize> = cards.into_iter().filter(|&c| c >= 1 && c <= n).collect();
    let mut classes = Classes::new(n);
    match regular {
        Some(r) => {
            let finished = for_each_regular(n, &cards, r, budget, &mut |ms| classes.insert(ms));
            if !finished {
                return Err(Error::EnumerationTooLarge(format!("more than {budget} labeled hypergraphs")));
            }
        }
        None => {
            let all: Vec<u32> = candidates(n, &cards).into_iter().flatten().collect();
            if all.len() > 24 || (1u64 << all.len()) > budget {
                return Err(Error::EnumerationTooLarge(format!("2^{} edge subsets", all.len())));
            }
            for bits in 0u64..1 << all.len() {
                let ms: Vec<u32> = (0..all.len()).filter(|i| bits >> i & 1 == 1).map(|i| all[i]).collect();
                classes.insert(&ms);
            }
        }
    }
    let forms = classes.reps().map(|ms| canonical_form(&from_masks(n, ms))).collect::<Result<BTreeSet<_>>>()?;
    Ok(forms.iter().map(CanonicalForm::to_hypergraph).collect())
}

/// Unweighted labeled hypergraph with its pair co-degrees.
struct Labeled {
    masks: Vec<u32>,
    codeg: Vec<Vec<u32>>,
    sig: Vec<Vec<u32>>,
}

impl Labeled {
    fn new(n: usize, ms: &[u32]) -> Self {
        let mut codeg = vec![vec![0u32; n]; n];
        let mut sig = vec![Vec::new(); n];
        for &m in ms {
            for u in 0..n {
                if m >> u & 1 == 1 {
                    sig[u].push(1000 + m.count_ones());
                    for v in 0..n {
                        if v != u && m >> v & 1 == 1 {
                            codeg[u][v] += 1;
                        }
                    }
                }
            }
        }
        for &m in ms {
            let inner: u32 = (0..n)
                .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
                .filter(|&(u, v)| m >> u & 1 == 1 && m >> v & 1 == 1)
                .map(|(u, v)| codeg[u][v])
                .sum();
            for (u, s) in sig.iter_mut().enumerate() {
                if m >> u & 1 == 1 {
                    s.push(2000 + inner);
                }
            }
        }
        for (u, s) in sig.iter_mut().enumerate() {
            s.extend(codeg[u].iter().enumerate().filter(|&(v, _)| v != u).map(|(_, c)| *c));
            s.sort_unstable();
        }
        let mut masks = ms.to_vec();
        masks.sort_unstable();
        Labeled { masks, codeg, sig }
    }

    /// Vertex signatures and traces of powers of the co-degree matrix.
    fn key(&self) -> (Vec<Vec<u32>>, Vec<i128>) {
        let n = self.codeg.len();
        let mut sigs = self.sig.clone();
        sigs.sort();
        let c: Vec<Vec<i128>> = self.codeg.iter().map(|r| r.iter().map(|&x| x as i128).collect()).collect();
        let mut p = c.clone();
        let mut traces = Vec::with_capacity(n);
        for _ in 2..=3 {
            p = (0..n).map(|i| (0..n).map(|j| (0..n).map(|k| p[i][k] * c[k][j]).sum()).collect()).collect();
            traces.push((0..n).map(|i| p[i][i]).sum());
        }
        (sigs, traces)
    }

    fn isomorphic(&self, other: &Labeled) -> bool {
        fn rec(a: &Labeled, b: &Labeled, v: usize, map: &mut Vec<usize>, used: &mut [bool]) -> bool {
            let n = used.len();
            if v == n {
                let mut image: Vec<u32> = a
                    .masks
                    .iter()
                    .map(|m| (0..n).filter(|u| m >> u & 1 == 1).fold(0u32, |acc, u| acc | 1 << map[u]))
                    .collect();
                image.sort_unstable();
                return image == b.masks;
            }
            for w in 0..n {
                if used[w] || a.sig[v] != b.sig[w] || (0..v).any(|u| a.codeg[u][v] != b.codeg[map[u]][w]) {
                    continue;
                }
                used[w] = true;
                map.push(w);
                if rec(a, b, v + 1, map, used) {
                    return true;
                }
                map.pop();
                used[w] = false;
            }
            false
        }
        self.masks.len() == other.masks.len()
            && rec(self, other, 0, &mut Vec::new(), &mut vec![false; self.codeg.len()])
    }
}

/// Isomorphism classes of labeled unweighted hypergraphs on `n` vertices.
struct Classes {
    n: usize,
    buckets: HashMap<(Vec<Vec<u32>>, Vec<i128>), Vec<Labeled>>,
}

impl Classes {
    fn new(n: usize) -> Self {
        Classes { n, buckets: HashMap::new() }
    }

    fn insert(&mut self, ms: &[u32]) {
        let g = Labeled::new(self.n, ms);
        let bucket = self.buckets.entry(g.key()).or_default();
        if !bucket.iter().any(|h| h.isomorphic(&g)) {
            bucket.push(g);
        }
    }

    fn reps(&self) -> impl Iterator<Item = &[u32]> {
        self.buckets.values().flatten().map(|g| g.masks.as_slice())
    }
}

/// Two non-isomorphic hypergraphs with equal adjacency characteristic polynomial.
#[derive(Debug, Clone, PartialEq)]
pub struct CospectralPair {
    pub first: Hypergraph,
    pub second: Hypergraph,
    pub charpoly: RationalPoly,
}

/// Every pair of non-isomorphic inputs with equal adjacency characteristic polynomials.
pub fn find_cospectral_pairs(hs: &[Hypergraph]) -> Result<Vec<CospectralPair>> {
    let mut buckets: BTreeMap<Vec<Rational>, Vec<(CanonicalForm, &Hypergraph)>> = BTreeMap::new();
    for h in hs {
        let p = matrices::exact_charpoly(h, MatrixKind::Adjacency)?;
        let mut key = vec![rational::int(h.n() as i64)];
        key.extend(p.coeffs().iter().cloned());
        let form = canonical_form(h)?;
        let bucket = buckets.entry(key).or_default();
        if !bucket.iter().any(|(f, _)| *f == form) {
            bucket.push((form, h));
        }
    }
    let mut out = Vec::new();
    for (key, bucket) in buckets {
        let charpoly = RationalPoly::new(key[1..].to_vec());
        for i in 0..bucket.len() {
            for j in i + 1..bucket.len() {
                out.push(CospectralPair {
                    first: bucket[i].1.clone(),
                    second: bucket[j].1.clone(),
                    charpoly: charpoly.clone(),
                });
            }
        }
    }
    Ok(out)
}

/// Exact comparison of the three characteristic polynomials. The normalized
/// Laplacian is compared through `D^{-1} L` and is `None` when a vertex is isolated.
#[derive(Debug, Clone, PartialEq)]
pub struct CospectralReport {
    pub adjacency: bool,
    pub laplacian: bool,
    pub normalized: Option<bool>,
    /// `(kind, charpoly of the first, charpoly of the second)`.
    pub charpolys: Vec<(MatrixKind, RationalPoly, RationalPoly)>,
}

impl CospectralReport {
    pub fn all(&self) -> bool {
        self.adjacency && self.laplacian && self.normalized == Some(true)
    }
}

pub fn verify(h1: &Hypergraph, h2: &Hypergraph) -> Result<CospectralReport> {
    if h1.n() != h2.n() {
        return Err(Error::DimensionMismatch(format!("orders {} and {}", h1.n(), h2.n())));
    }
    let mut charpolys = Vec::new();
    let mut same = |kind| -> Result<Option<bool>> {
        let p = matrices::exact_charpoly(h1, kind);
        let q = matrices::exact_charpoly(h2, kind);
        match (p, q) {
            (Ok(p), Ok(q)) => {
                let eq = p == q;
                charpolys.push((kind, p, q));
                Ok(Some(eq))
            }
            (Err(Error::IsolatedVertex(_)), _) | (_, Err(Error::IsolatedVertex(_))) => Ok(None),
            (Err(e), _) | (_, Err(e)) => Err(e),
        }
    };
    let adjacency = same(MatrixKind::Adjacency)?.unwrap_or(false);
    let laplacian = same(MatrixKind::Laplacian)?.unwrap_or(false);
    let normalized = same(MatrixKind::NormalizedLaplacian)?;
    Ok(CospectralReport { adjacency, laplacian, normalized, charpolys })
}

fn check_slot(i: usize, a: &Hypergraph, b: &Hypergraph) -> Result<()> {
    let (ra, rb) = (a.is_regular(), b.is_regular());
    match (&ra, &rb) {
        (Some(x), Some(y)) if x == y => {}
        _ => return Err(Error::NotCospectral(format!("slot {i}: valencies differ or are not constant"))),
    }
    if matrices::exact_charpoly(a, MatrixKind::Adjacency)? != matrices::exact_charpoly(b, MatrixKind::Adjacency)? {
        return Err(Error::NotCospectral(format!("slot {i}: adjacency characteristic polynomials differ")));
    }
    Ok(())
}

/// Joins the first and the second members of every slot with the same family:
/// the results are cospectral for all three matrices.
pub fn cospectral_join_family(
    pairs: &[(Hypergraph, Hypergraph)],
    f: &EdgeFamily,
    w: &WeightTable,
) -> Result<(Hypergraph, Hypergraph)> {
    for (i, (a, b)) in pairs.iter().enumerate() {
        check_slot(i, a, b)?;
    }
    f.cross_counts().constant()?;
    let first: Vec<Hypergraph> = pairs.iter().map(|p| p.0.clone()).collect();
    let second: Vec<Hypergraph> = pairs.iter().map(|p| p.1.clone()).collect();
    Ok((tensor_join(&first, f, w)?, tensor_join(&second, f, w)?))
}

/// Backbone form of [`cospectral_join_family`].
pub fn cospectral_backbone_family(
    h: &Hypergraph,
    pairs: &[(Hypergraph, Hypergraph)],
    families: &[EdgeFamily],
    w: &WeightTable,
) -> Result<(Hypergraph, Hypergraph)> {
    for (i, (a, b)) in pairs.iter().enumerate() {
        check_slot(i, a, b)?;
    }
    for f in families {
        f.cross_counts().constant()?;
    }
    let first: Vec<Hypergraph> = pairs.iter().map(|p| p.0.clone()).collect();
    let second: Vec<Hypergraph> = pairs.iter().map(|p| p.1.clone()).collect();
    Ok((backbone_join(h, &first, families, w)?, backbone_join(h, &second, families, w)?))
}

/// Two joined hypergraphs and the verification of their cospectrality.
#[derive(Debug, Clone)]
pub struct Certificate {
    pub first: Hypergraph,
    pub second: Hypergraph,
    pub report: CospectralReport,
}

impl Certificate {
    /// Both hypergraphs in hgr form followed by the characteristic polynomial
    /// coefficients (ascending) of each matrix.
    pub fn to_text(&self) -> String {
        let w = WeightTable::ones();
        let mut out = String::new();
        out.push_str("# first\n");
        out.push_str(&hgr::serialize_hgr(&self.first, &w));
        out.push_str("# second\n");
        out.push_str(&hgr::serialize_hgr(&self.second, &w));
        for (kind, p, q) in &self.report.charpolys {
            let coeffs = |p: &RationalPoly| p.coeffs().iter().map(rational::format).collect::<Vec<_>>().join(" ");
            let _ = writeln!(out, "# {kind} {}: {}", if p == q { "equal" } else { "differ" }, coeffs(p));
            if p != q {
                let _ = writeln!(out, "# {kind} second: {}", coeffs(q));
            }
        }
        out
    }
}

/// Joins each member of an A-cospectral regular pair with a single edge `K_2`
/// through all cross pairs, then verifies the two results.
pub fn certify_pair(a: &Hypergraph, b: &Hypergraph) -> Result<Certificate> {
    let partner = Hypergraph::unweighted(2, &[&[1, 2]])?;
    let f = EdgeFamily::b_spanning(ClassSequence::consecutive(&[a.n(), 2]), &[2].into())?;
    let (first, second) =
        cospectral_join_family(&[(a.clone(), b.clone()), (partner.clone(), partner)], &f, &WeightTable::ones())?;
    let report = verify(&first, &second)?;
    Ok(Certificate { first, second, report })
}

/// Search settings: `m`-uniform regular hypergraphs on `min_n..=max_n` vertices.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SearchConfig {
    pub uniform: usize,
    pub min_n: usize,
    pub max_n: usize,
    pub budget: u64,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ScaleStatus {
    Exhausted { classes: usize, pairs: usize },
    Skipped(String),
}

/// One `(n, r)` scale; `r` and its complement degree share one run.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ScaleReport {
    pub n: usize,
    pub r: usize,
    pub status: ScaleStatus,
}

#[derive(Debug, Clone, Default)]
pub struct SearchReport {
    pub scales: Vec<ScaleReport>,
    pub pairs: Vec<CospectralPair>,
    /// Vertex count where the search stopped because pairs were found.
    pub stopped_at: Option<usize>,
}

impl SearchReport {
    pub fn summary(&self) -> String {
        let mut out = String::new();
        for s in &self.scales {
            let _ = match &s.status {
                ScaleStatus::Exhausted { classes, pairs } => {
                    writeln!(out, "n={} r={}: {classes} classes, {pairs} cospectral pairs", s.n, s.r)
                }
                ScaleStatus::Skipped(why) => writeln!(out, "n={} r={}: skipped ({why})", s.n, s.r),
            };
        }
        match self.stopped_at {
            Some(n) => {
                let _ = writeln!(out, "found {} pairs at n={n}", self.pairs.len());
            }
            None => {
                let _ = writeln!(out, "none found up to n={}", self.scales.last().map_or(0, |s| s.n));
            }
        }
        out
    }
}

/// Searches by increasing `n`, stopping after the first `n` that yields pairs.
/// A degree `r` above half the maximum is covered by its complement.
pub fn search(cfg: &SearchConfig) -> Result<SearchReport> {
    let m = cfg.uniform;
    if m < 2 || cfg.max_n > MAX_N {
        return Err(Error::InvalidParameter(format!("need m >= 2 and n <= {MAX_N}")));
    }
    let mut report = SearchReport::default();
    let cards: BTreeSet<usize> = [m].into();
    for n in cfg.min_n.max(m)..=cfg.max_n {
        let full = rational::binomial(n as i64 - 1, m as i64 - 1);
        let full: usize = full.try_into().expect("small binomial");
        for r in 1..full {
            if (n * r) % m != 0 || 2 * r > full {
                continue;
            }
            let status = match enumerate_with_budget(n, &cards, Some(m), Some(r), cfg.budget) {
                Ok(classes) => {
                    let mut pairs = find_cospectral_pairs(&classes)?;
                    if 2 * r < full {
                        let comp = |h: &Hypergraph| h.s_complement(&WeightTable::ones());
                        let extra = pairs
                            .iter()
                            .map(|p| {
                                Ok(CospectralPair {
                                    first: comp(&p.first)?,
                                    second: comp(&p.second)?,
                                    charpoly: matrices::exact_charpoly(&comp(&p.first)?, MatrixKind::Adjacency)?,
                                })
                            })
                            .collect::<Result<Vec<_>>>()?;
                        pairs.extend(extra);
                    }
                    let status = ScaleStatus::Exhausted { classes: classes.len(), pairs: pairs.len() };
                    report.pairs.extend(pairs);
                    status
                }
                Err(Error::EnumerationTooLarge(why)) => ScaleStatus::Skipped(why),
                Err(e) => return Err(e),
            };
            report.scales.push(ScaleReport { n, r, status });
        }
        if !report.pairs.is_empty() {
            report.stopped_at = Some(n);
            break;
        }
    }
    Ok(report)
}
