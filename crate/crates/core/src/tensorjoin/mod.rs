//! Indicating tensors represented by their edge families, the join
//! constructions, and the standard families built from class sequences.

mod builders;
mod join;

pub use builders::{
    k_copy_join, lexicographic_product, strong_partite, two_copy_join, CopyKind, KCopyOp, TwoCopyFamily,
};
pub use join::{
    backbone_join, decompose, family_to_mjoin, flatten, mjoin_convert, split_by_touched, subset_families, tensor_join,
    Decomposition,
};

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigInt;
use num_traits::ToPrimitive;

use crate::error::{Error, Result};
use crate::hypercore::Hypergraph;
use crate::rational;
use crate::subsets::{for_each_combination, surjections};

/// Default cap on the number of members any constructor will enumerate.
pub const DEFAULT_MEMBER_LIMIT: u128 = 1_000_000;
/// Environment variable overriding [`DEFAULT_MEMBER_LIMIT`].
pub const MEMBER_LIMIT_ENV: &str = "TENJOIN_MAX_FAMILY";

fn env_limit() -> u128 {
    std::env::var(MEMBER_LIMIT_ENV).ok().and_then(|v| v.trim().parse().ok()).unwrap_or(DEFAULT_MEMBER_LIMIT)
}

/// Ordered, pairwise disjoint vertex classes. Class `i` (0-based) lists its
/// vertices in a fixed order, so `class(i)[l]` is the vertex `u_{i,l+1}`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ClassSequence {
    classes: Vec<Vec<usize>>,
    position: BTreeMap<usize, (usize, usize)>,
    limit: u128,
}

impl ClassSequence {
    pub fn new(classes: Vec<Vec<usize>>) -> Result<Self> {
        let mut position = BTreeMap::new();
        for (i, class) in classes.iter().enumerate() {
            for (l, &v) in class.iter().enumerate() {
                if v == 0 {
                    return Err(Error::InvalidParameter("vertex ids start at 1".into()));
                }
                if position.insert(v, (i, l)).is_some() {
                    return Err(Error::OverlappingClasses(v));
                }
            }
        }
        Ok(ClassSequence { classes, position, limit: env_limit() })
    }

    /// Classes `{1..n1}, {n1+1..n1+n2}, ...`.
    pub fn consecutive(sizes: &[usize]) -> Self {
        let mut next = 1;
        let classes = sizes
            .iter()
            .map(|&s| {
                let c: Vec<usize> = (next..next + s).collect();
                next += s;
                c
            })
            .collect();
        Self::new(classes).expect("consecutive classes are disjoint")
    }

    /// Lifts the member cap for this sequence and every family built on it.
    pub fn allow_huge(mut self) -> Self {
        self.limit = u128::MAX;
        self
    }

    pub fn with_limit(mut self, limit: u128) -> Self {
        self.limit = limit;
        self
    }

    pub fn member_limit(&self) -> u128 {
        self.limit
    }

    pub fn k(&self) -> usize {
        self.classes.len()
    }

    pub fn sizes(&self) -> Vec<usize> {
        self.classes.iter().map(Vec::len).collect()
    }

    pub fn total(&self) -> usize {
        self.classes.iter().map(Vec::len).sum()
    }

    pub fn class(&self, i: usize) -> &[usize] {
        &self.classes[i]
    }

    pub fn classes(&self) -> &[Vec<usize>] {
        &self.classes
    }

    /// `(class, position)` of a vertex.
    pub fn locate(&self, v: usize) -> Option<(usize, usize)> {
        self.position.get(&v).copied()
    }

    pub fn vertices(&self) -> impl Iterator<Item = usize> + '_ {
        self.classes.iter().flatten().copied()
    }

    fn equal_size(&self) -> Result<usize> {
        let n = self.classes.first().map_or(0, Vec::len);
        if self.classes.iter().any(|c| c.len() != n) {
            return Err(Error::InvalidParameter(format!("classes must have equal sizes, got {:?}", self.sizes())));
        }
        Ok(n)
    }

    fn guard(&self, count: &BigInt) -> Result<()> {
        let c = count.to_u128().unwrap_or(u128::MAX);
        if c > self.limit {
            return Err(Error::FamilyTooLarge(c, self.limit));
        }
        Ok(())
    }
}

/// A validated set of cross-class vertex subsets over a [`ClassSequence`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EdgeFamily {
    classes: ClassSequence,
    members: BTreeSet<Vec<usize>>,
}

impl EdgeFamily {
    pub fn empty(classes: ClassSequence) -> Self {
        EdgeFamily { classes, members: BTreeSet::new() }
    }

    /// Validates arbitrary subsets: every vertex must belong to a class and no
    /// subset may lie inside a single class.
    pub fn explicit(classes: ClassSequence, subsets: impl IntoIterator<Item = Vec<usize>>) -> Result<Self> {
        let mut members = BTreeSet::new();
        for mut s in subsets {
            s.sort_unstable();
            s.dedup();
            check_member(&classes, &s)?;
            members.insert(s);
        }
        classes.guard(&BigInt::from(members.len()))?;
        Ok(EdgeFamily { classes, members })
    }

    /// All subsets with cardinality in `b` meeting every class.
    pub fn b_spanning(classes: ClassSequence, b: &BTreeSet<usize>) -> Result<Self> {
        let (k, total) = (classes.k(), classes.total());
        if let Some(&c) = b.iter().find(|&&c| c < k || c > total) {
            return Err(Error::InvalidParameter(format!("cardinality {c} outside {k}..={total}")));
        }
        let sizes = classes.sizes();
        let count: BigInt = b.iter().map(|&c| compositions_count(&sizes, c, true)).sum();
        classes.guard(&count)?;
        let mut members = BTreeSet::new();
        for &c in b {
            per_class_choices(&classes, c, true, &mut |s| {
                members.insert(s);
            });
        }
        Ok(EdgeFamily { classes, members })
    }

    /// Every `m`-subset of the union that is not inside one class.
    pub fn uniform_max(classes: ClassSequence, m: usize) -> Result<Self> {
        let total = classes.total();
        if m < 2 || m > total {
            return Err(Error::InvalidParameter(format!("m = {m} outside 2..={total}")));
        }
        classes.guard(&uniform_max_count(&classes.sizes(), m))?;
        let mut members = BTreeSet::new();
        collect_uniform(&classes, m, &mut members);
        Ok(EdgeFamily { classes, members })
    }

    /// Every cross subset of cardinality at least 2.
    pub fn full(classes: ClassSequence) -> Result<Self> {
        let sizes = classes.sizes();
        let total = classes.total();
        let count: BigInt = (2..=total).map(|m| uniform_max_count(&sizes, m)).sum();
        classes.guard(&count)?;
        let mut members = BTreeSet::new();
        for m in 2..=total {
            collect_uniform(&classes, m, &mut members);
        }
        Ok(EdgeFamily { classes, members })
    }

    /// For each `r`-subset `L` of positions, the union over classes of `u_{i,l}`, `l in L`.
    pub fn aligned(classes: ClassSequence, r: usize) -> Result<Self> {
        let n = classes.equal_size()?;
        if r < 1 || r > n {
            return Err(Error::InvalidParameter(format!("r = {r} outside 1..={n}")));
        }
        classes.guard(&rational::binomial(n as i64, r as i64))?;
        let positions: Vec<usize> = (0..n).collect();
        let mut members = BTreeSet::new();
        for_each_combination(&positions, r, |ls| {
            let mut s: Vec<usize> = classes.classes.iter().flat_map(|c| ls.iter().map(move |&l| c[l])).collect();
            s.sort_unstable();
            members.insert(s);
        });
        Ok(EdgeFamily { classes, members })
    }

    /// The aligned family with `r = 1`.
    pub fn identity(classes: ClassSequence) -> Result<Self> {
        Self::aligned(classes, 1)
    }

    /// For each edge `e` of `h` (on positions `1..=n`) and each ordered partition of
    /// `e` into `k` non-empty blocks `D_1..D_k`, the subset `U_i {u_{i,l} : l in D_i}`.
    pub fn backbone(classes: ClassSequence, h: &Hypergraph) -> Result<Self> {
        let n = classes.equal_size()?;
        let k = classes.k();
        if h.n() != n {
            return Err(Error::DimensionMismatch(format!("hypergraph on {} vertices, classes of size {n}", h.n())));
        }
        if k < 2 {
            return Err(Error::InvalidParameter("backbone family needs at least two classes".into()));
        }
        if let Some(corank) = h.profile().corank {
            if k > corank {
                return Err(Error::InvalidParameter(format!("k = {k} exceeds the co-rank {corank}")));
            }
        }
        let mut count = BigInt::from(0);
        let mut cache = BTreeMap::new();
        for e in h.edges() {
            let len = e.len();
            count += cache.entry(len).or_insert_with(|| BigInt::from(surjections(len, k).len())).clone();
        }
        classes.guard(&count)?;
        let mut members = BTreeSet::new();
        for e in h.edges() {
            for assign in surjections(e.len(), k) {
                let mut s: Vec<usize> =
                    e.vertices.iter().zip(&assign).map(|(&l, &block)| classes.classes[block][l - 1]).collect();
                s.sort_unstable();
                members.insert(s);
            }
        }
        Ok(EdgeFamily { classes, members })
    }

    /// `self` minus `other`; `other` must be a subfamily.
    pub fn minus(&self, other: &EdgeFamily) -> Result<Self> {
        self.same_classes(other)?;
        if let Some(m) = other.members.iter().find(|m| !self.members.contains(*m)) {
            return Err(Error::InvalidParameter(format!("{m:?} is not a member of the minuend")));
        }
        let members = self.members.difference(&other.members).cloned().collect();
        Ok(EdgeFamily { classes: self.classes.clone(), members })
    }

    /// Disjoint union of two families.
    pub fn plus(&self, other: &EdgeFamily) -> Result<Self> {
        self.same_classes(other)?;
        if let Some(m) = other.members.iter().find(|m| self.members.contains(*m)) {
            return Err(Error::InvalidParameter(format!("{m:?} is in both summands")));
        }
        let members = self.members.union(&other.members).cloned().collect();
        Ok(EdgeFamily { classes: self.classes.clone(), members })
    }

    fn same_classes(&self, other: &EdgeFamily) -> Result<()> {
        if self.classes.classes != other.classes.classes {
            return Err(Error::DimensionMismatch("families over different class sequences".into()));
        }
        Ok(())
    }

    pub fn classes(&self) -> &ClassSequence {
        &self.classes
    }

    pub fn members(&self) -> impl Iterator<Item = &Vec<usize>> {
        self.members.iter()
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    pub fn contains(&self, subset: &[usize]) -> bool {
        self.members.contains(subset)
    }

    /// Re-checks the family invariants.
    pub fn validate(&self) -> Result<()> {
        self.members.iter().try_for_each(|m| check_member(&self.classes, m))
    }

    /// 0-based indices of the classes a member meets.
    pub fn touched(&self, member: &[usize]) -> Vec<usize> {
        let mut t: Vec<usize> = member.iter().filter_map(|&v| self.classes.locate(v)).map(|(i, _)| i).collect();
        t.sort_unstable();
        t.dedup();
        t
    }

    /// Pairwise counts `n_ij^(c)` when they are constant, or a witness otherwise.
    pub fn cross_counts(&self) -> CrossCounts {
        let vertices: Vec<usize> = self.classes.vertices().collect();
        let index: BTreeMap<usize, usize> = vertices.iter().enumerate().map(|(x, &v)| (v, x)).collect();
        let total = vertices.len();
        let mut tallies: BTreeMap<usize, Vec<u64>> = BTreeMap::new();
        for m in &self.members {
            let t = tallies.entry(m.len()).or_insert_with(|| vec![0; total * total]);
            for (x, a) in m.iter().enumerate() {
                for b in &m[x + 1..] {
                    let (p, q) = (index[a], index[b]);
                    t[p * total + q] += 1;
                    t[q * total + p] += 1;
                }
            }
        }
        let mut counts = BTreeMap::new();
        let k = self.classes.k();
        for (&c, t) in &tallies {
            for i in 0..k {
                for j in i..k {
                    let mut seen: Option<(usize, usize, u64)> = None;
                    for &p in self.classes.class(i) {
                        for &q in self.classes.class(j) {
                            if p == q {
                                continue;
                            }
                            let v = t[index[&p] * total + index[&q]];
                            match seen {
                                None => seen = Some((p, q, v)),
                                Some((p0, q0, v0)) if v0 != v => {
                                    return CrossCounts::NonConstant(Witness {
                                        classes: (i, j),
                                        cardinality: c,
                                        first: (p0, q0, v0),
                                        second: (p, q, v),
                                    });
                                }
                                _ => {}
                            }
                        }
                    }
                    if let Some((_, _, v)) = seen {
                        if v != 0 {
                            counts.insert((i, j, c), v);
                        }
                    }
                }
            }
        }
        CrossCounts::Constant(ConstantCounts { k, counts })
    }
}

/// Two vertex pairs from the same class pair with different counts.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Witness {
    pub classes: (usize, usize),
    pub cardinality: usize,
    /// `(p, q, count)`.
    pub first: (usize, usize, u64),
    pub second: (usize, usize, u64),
}

/// Non-zero constant counts keyed by `(i, j, c)` with `i <= j` (0-based classes).
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ConstantCounts {
    pub k: usize,
    pub counts: BTreeMap<(usize, usize, usize), u64>,
}

impl ConstantCounts {
    pub fn new(k: usize) -> Self {
        ConstantCounts { k, counts: BTreeMap::new() }
    }

    pub fn get(&self, i: usize, j: usize, c: usize) -> u64 {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        self.counts.get(&(a, b, c)).copied().unwrap_or(0)
    }

    pub fn set(&mut self, i: usize, j: usize, c: usize, value: u64) {
        let (a, b) = if i <= j { (i, j) } else { (j, i) };
        if value == 0 {
            self.counts.remove(&(a, b, c));
        } else {
            self.counts.insert((a, b, c), value);
        }
    }

    pub fn add(&mut self, i: usize, j: usize, c: usize, value: u64) {
        let v = self.get(i, j, c) + value;
        self.set(i, j, c, v);
    }

    pub fn cardinalities(&self) -> BTreeSet<usize> {
        self.counts.keys().map(|&(_, _, c)| c).collect()
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CrossCounts {
    Constant(ConstantCounts),
    NonConstant(Witness),
}

impl CrossCounts {
    pub fn constant(self) -> Result<ConstantCounts> {
        match self {
            CrossCounts::Constant(c) => Ok(c),
            CrossCounts::NonConstant(w) => Err(Error::NonConstantCounts(format!(
                "classes {:?}, cardinality {}: pair ({}, {}) in {} members, pair ({}, {}) in {}",
                w.classes, w.cardinality, w.first.0, w.first.1, w.first.2, w.second.0, w.second.1, w.second.2
            ))),
        }
    }
}

fn check_member(classes: &ClassSequence, s: &[usize]) -> Result<()> {
    let mut first = None;
    let mut crosses = false;
    for &v in s {
        let Some((i, _)) = classes.locate(v) else {
            return Err(Error::UnknownVertex(s.to_vec()));
        };
        match first {
            None => first = Some(i),
            Some(f) if f != i => crosses = true,
            _ => {}
        }
    }
    if !crosses {
        return Err(Error::MemberInsideClass(s.to_vec()));
    }
    Ok(())
}

fn uniform_max_count(sizes: &[usize], m: usize) -> BigInt {
    let total: usize = sizes.iter().sum();
    let inside: BigInt = sizes.iter().map(|&s| rational::binomial(s as i64, m as i64)).sum();
    rational::binomial(total as i64, m as i64) - inside
}

/// Number of `c`-subsets picking `l_i` vertices from class `i`; with `spanning`
/// every `l_i >= 1`, otherwise at least two classes are used.
fn compositions_count(sizes: &[usize], c: usize, spanning: bool) -> BigInt {
    if spanning {
        let mut total = BigInt::from(0);
        for_each_composition(sizes, c, 1, &mut |ls| {
            total += ls.iter().zip(sizes).map(|(&l, &s)| rational::binomial(s as i64, l as i64)).product::<BigInt>();
        });
        total
    } else {
        uniform_max_count(sizes, c)
    }
}

/// Calls `f` with every `(l_1..l_k)`, `min <= l_i <= sizes[i]`, summing to `c`.
fn for_each_composition(sizes: &[usize], c: usize, min: usize, f: &mut dyn FnMut(&[usize])) {
    fn rec(sizes: &[usize], i: usize, left: usize, min: usize, cur: &mut Vec<usize>, f: &mut dyn FnMut(&[usize])) {
        if i == sizes.len() {
            if left == 0 {
                f(cur);
            }
            return;
        }
        let rest_min = min * (sizes.len() - i - 1);
        for l in min..=sizes[i].min(left) {
            if left - l < rest_min {
                break;
            }
            cur.push(l);
            rec(sizes, i + 1, left - l, min, cur, f);
            cur.pop();
        }
    }
    rec(sizes, 0, c, min, &mut Vec::new(), f);
}

fn per_class_choices(classes: &ClassSequence, c: usize, spanning: bool, f: &mut dyn FnMut(Vec<usize>)) {
    let sizes = classes.sizes();
    let min = usize::from(spanning);
    for_each_composition(&sizes, c, min, &mut |ls| {
        if !spanning && ls.iter().filter(|&&l| l > 0).count() < 2 {
            return;
        }
        let per: Vec<Vec<Vec<usize>>> =
            ls.iter().enumerate().map(|(i, &l)| crate::subsets::combinations(classes.class(i), l)).collect();
        let mut idx = vec![0usize; per.len()];
        'outer: loop {
            let mut s: Vec<usize> = idx.iter().enumerate().flat_map(|(i, &x)| per[i][x].iter().copied()).collect();
            s.sort_unstable();
            f(s);
            for pos in (0..idx.len()).rev() {
                idx[pos] += 1;
                if idx[pos] < per[pos].len() {
                    continue 'outer;
                }
                idx[pos] = 0;
            }
            break;
        }
    });
}

fn collect_uniform(classes: &ClassSequence, m: usize, out: &mut BTreeSet<Vec<usize>>) {
    per_class_choices(classes, m, false, &mut |s| {
        out.insert(s);
    });
}
