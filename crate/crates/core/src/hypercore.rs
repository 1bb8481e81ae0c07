//! Weighted hypergraphs on the vertex set `1..=n`, standard constructions and
//! structural queries.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};
use crate::subsets::for_each_combination;

/// One hyperedge: a sorted, duplicate-free vertex list and its weight.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    pub vertices: Vec<usize>,
    pub weight: Rational,
}

impl Edge {
    pub fn len(&self) -> usize {
        self.vertices.len()
    }

    pub fn is_empty(&self) -> bool {
        self.vertices.is_empty()
    }

    pub fn contains(&self, v: usize) -> bool {
        self.vertices.binary_search(&v).is_ok()
    }
}

/// A weighted hypergraph. The edge multiset is kept sorted, so derived
/// equality is multiset equality.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Edge>,
}

/// Weight `w_c` given to a new edge of cardinality `c`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightTable {
    by_card: BTreeMap<usize, Rational>,
    default: Rational,
}

impl WeightTable {
    /// Every cardinality gets `w`.
    pub fn constant(w: Rational) -> Result<Self> {
        if !rational::is_nonneg(&w) {
            return Err(Error::NegativeWeight(rational::format(&w)));
        }
        Ok(WeightTable { by_card: BTreeMap::new(), default: w })
    }

    pub fn ones() -> Self {
        WeightTable { by_card: BTreeMap::new(), default: rational::int(1) }
    }

    pub fn zeros() -> Self {
        WeightTable { by_card: BTreeMap::new(), default: Rational::zero() }
    }

    pub fn with(mut self, c: usize, w: Rational) -> Result<Self> {
        if !rational::is_nonneg(&w) {
            return Err(Error::NegativeWeight(rational::format(&w)));
        }
        if c < 2 {
            return Err(Error::InvalidParameter(format!("weight table cardinality {c} < 2")));
        }
        self.by_card.insert(c, w);
        Ok(self)
    }

    pub fn get(&self, c: usize) -> &Rational {
        self.by_card.get(&c).unwrap_or(&self.default)
    }

    pub fn default_weight(&self) -> &Rational {
        &self.default
    }

    pub fn explicit(&self) -> impl Iterator<Item = (usize, &Rational)> {
        self.by_card.iter().map(|(c, w)| (*c, w))
    }
}

impl fmt::Display for WeightTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "default={}", rational::format(&self.default))?;
        for (c, w) in &self.by_card {
            write!(f, ",{}={}", c, rational::format(w))?;
        }
        Ok(())
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StructuralProfile {
    /// Largest edge cardinality; `None` when edgeless.
    pub rank: Option<usize>,
    pub corank: Option<usize>,
    pub uniform: Option<usize>,
    pub regular: Option<Rational>,
    pub cardinalities: BTreeSet<usize>,
}

fn canonical_edge(n: usize, mut vertices: Vec<usize>, weight: Rational) -> Result<Edge> {
    if vertices.is_empty() {
        return Err(Error::EmptyEdge);
    }
    if let Some(&v) = vertices.iter().find(|&&v| v == 0 || v > n) {
        return Err(Error::VertexOutOfRange { vertex: v, n });
    }
    if !rational::is_nonneg(&weight) {
        return Err(Error::NegativeWeight(rational::format(&weight)));
    }
    vertices.sort_unstable();
    if let Some(w) = vertices.windows(2).find(|w| w[0] == w[1]) {
        return Err(Error::RepeatedVertex(w[0]));
    }
    Ok(Edge { vertices, weight })
}

impl Hypergraph {
    /// Builds a hypergraph with exactly the given edge multiset.
    pub fn new<I>(n: usize, edges: I) -> Result<Self>
    where
        I: IntoIterator<Item = (Vec<usize>, Rational)>,
    {
        let mut out = Vec::new();
        for (vs, w) in edges {
            out.push(canonical_edge(n, vs, w)?);
        }
        out.sort();
        Ok(Hypergraph { n, edges: out })
    }

    /// All edges with weight 1.
    pub fn unweighted(n: usize, edges: &[&[usize]]) -> Result<Self> {
        Self::new(n, edges.iter().map(|e| (e.to_vec(), rational::int(1))))
    }

    pub fn edgeless(n: usize) -> Self {
        Hypergraph { n, edges: Vec::new() }
    }

    pub(crate) fn from_sorted_unchecked(n: usize, mut edges: Vec<Edge>) -> Self {
        edges.sort();
        Hypergraph { n, edges }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn edge_count(&self) -> usize {
        self.edges.len()
    }

    fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        } else {
            Ok(())
        }
    }

    /// Sum of the weights of the edges containing `v`.
    pub fn valency(&self, v: usize) -> Result<Rational> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).fold(Rational::zero(), |acc, e| acc + &e.weight))
    }

    /// Valencies of vertices `1..=n`, index 0 holding vertex 1.
    pub fn valencies(&self) -> Vec<Rational> {
        let mut d = vec![Rational::zero(); self.n];
        for e in &self.edges {
            for &v in &e.vertices {
                d[v - 1] += &e.weight;
            }
        }
        d
    }

    /// Number of edges containing `v`, ignoring weights.
    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.contains(v)).count())
    }

    /// The common valency, if all vertices share one.
    pub fn is_regular(&self) -> Option<Rational> {
        let d = self.valencies();
        let first = d.first().cloned().unwrap_or_else(Rational::zero);
        d.iter().all(|x| *x == first).then_some(first)
    }

    pub fn is_uniform(&self) -> Option<usize> {
        let m = self.edges.first()?.len();
        self.edges.iter().all(|e| e.len() == m).then_some(m)
    }

    pub fn cardinalities(&self) -> BTreeSet<usize> {
        self.edges.iter().map(Edge::len).collect()
    }

    pub fn profile(&self) -> StructuralProfile {
        let cardinalities = self.cardinalities();
        StructuralProfile {
            rank: cardinalities.iter().next_back().copied(),
            corank: cardinalities.iter().next().copied(),
            uniform: self.is_uniform(),
            regular: self.is_regular(),
            cardinalities,
        }
    }

    pub fn has_loops(&self) -> bool {
        self.edges.iter().any(|e| e.len() == 1)
    }

    /// Fails on the first vertex set that appears twice.
    pub fn ensure_simple(&self) -> Result<()> {
        match self.edges.windows(2).find(|w| w[0].vertices == w[1].vertices) {
            Some(w) => Err(Error::DuplicateEdge(w[0].vertices.clone())),
            None => Ok(()),
        }
    }

    fn vertex_sets(&self) -> BTreeSet<&[usize]> {
        self.edges.iter().map(|e| e.vertices.as_slice()).collect()
    }

    /// Every subset of cardinality `2..=n`, weighted `w_|e|`.
    pub fn complete(n: usize, w: &WeightTable) -> Result<Self> {
        if n < 2 {
            return Err(Error::InvalidParameter(format!("complete hypergraph needs n >= 2, got {n}")));
        }
        let vs: Vec<usize> = (1..=n).collect();
        let mut edges = Vec::new();
        for c in 2..=n {
            for_each_combination(&vs, c, |s| edges.push(Edge { vertices: s.to_vec(), weight: w.get(c).clone() }));
        }
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    /// `K_n^r`: all `r`-subsets, each with weight `w`.
    pub fn complete_uniform(n: usize, r: usize, w: Rational) -> Result<Self> {
        if r > n {
            return Err(Error::InvalidParameter(format!("r = {r} exceeds n = {n}")));
        }
        if !rational::is_nonneg(&w) {
            return Err(Error::NegativeWeight(rational::format(&w)));
        }
        if r == 0 {
            return Ok(Self::edgeless(n));
        }
        let vs: Vec<usize> = (1..=n).collect();
        let mut edges = Vec::new();
        for_each_combination(&vs, r, |s| edges.push(Edge { vertices: s.to_vec(), weight: w.clone() }));
        Ok(Self::from_sorted_unchecked(n, edges))
    }

    /// Complement relative to the cardinalities present in `self`.
    pub fn s_complement(&self, w: &WeightTable) -> Result<Self> {
        self.ensure_simple()?;
        let present = self.vertex_sets();
        let vs: Vec<usize> = (1..=self.n).collect();
        let mut edges = Vec::new();
        for c in self.cardinalities() {
            for_each_combination(&vs, c, |s| {
                if !present.contains(s) {
                    edges.push(Edge { vertices: s.to_vec(), weight: w.get(c).clone() });
                }
            });
        }
        Ok(Self::from_sorted_unchecked(self.n, edges))
    }

    /// All subsets of cardinality at least 2 that are not edges of `self`.
    pub fn total_complement(&self, w: &WeightTable) -> Result<Self> {
        self.ensure_simple()?;
        let present = self.vertex_sets();
        let vs: Vec<usize> = (1..=self.n).collect();
        let mut edges = Vec::new();
        for c in 2..=self.n {
            for_each_combination(&vs, c, |s| {
                if !present.contains(s) {
                    edges.push(Edge { vertices: s.to_vec(), weight: w.get(c).clone() });
                }
            });
        }
        Ok(Self::from_sorted_unchecked(self.n, edges))
    }

    /// Same edges, each reweighted to `w_|e|`.
    pub fn reweighted(&self, w: &WeightTable) -> Self {
        let edges =
            self.edges.iter().map(|e| Edge { vertices: e.vertices.clone(), weight: w.get(e.len()).clone() }).collect();
        Self::from_sorted_unchecked(self.n, edges)
    }

    /// Places the inputs side by side; vertex `v` of input `i` becomes
    /// `v + offsets[i]`.
    pub fn disjoint_union(hs: &[Hypergraph]) -> (Hypergraph, Vec<usize>) {
        let mut offsets = Vec::with_capacity(hs.len());
        let mut edges = Vec::new();
        let mut total = 0;
        for h in hs {
            offsets.push(total);
            edges.extend(
                h.edges.iter().map(|e| Edge {
                    vertices: e.vertices.iter().map(|v| v + total).collect(),
                    weight: e.weight.clone(),
                }),
            );
            total += h.n;
        }
        (Self::from_sorted_unchecked(total, edges), offsets)
    }

    /// Subhypergraph induced by `vertices` (edges lying entirely inside),
    /// relabelled so that `vertices[i]` becomes `i + 1`.
    pub fn induced(&self, vertices: &[usize]) -> Result<Self> {
        let mut index = vec![0usize; self.n + 1];
        for (i, &v) in vertices.iter().enumerate() {
            self.check_vertex(v)?;
            index[v] = i + 1;
        }
        let edges = self
            .edges
            .iter()
            .filter(|e| e.vertices.iter().all(|&v| index[v] != 0))
            .map(|e| {
                let mut vs: Vec<usize> = e.vertices.iter().map(|&v| index[v]).collect();
                vs.sort_unstable();
                Edge { vertices: vs, weight: e.weight.clone() }
            })
            .collect();
        Ok(Self::from_sorted_unchecked(vertices.len(), edges))
    }

    /// Applies `perm` (0-based, `perm[v-1]` is the new 0-based index of `v`).
    pub fn permuted(&self, perm: &[usize]) -> Self {
        let edges = self
            .edges
            .iter()
            .map(|e| {
                let mut vs: Vec<usize> = e.vertices.iter().map(|&v| perm[v - 1] + 1).collect();
                vs.sort_unstable();
                Edge { vertices: vs, weight: e.weight.clone() }
            })
            .collect();
        Self::from_sorted_unchecked(self.n, edges)
    }

    /// Adds more edges (already validated against `self.n`).
    pub fn with_edges(&self, extra: impl IntoIterator<Item = Edge>) -> Self {
        let mut edges = self.edges.clone();
        edges.extend(extra);
        Self::from_sorted_unchecked(self.n, edges)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    fn triangle() -> Hypergraph {
        Hypergraph::unweighted(3, &[&[1, 2], &[2, 3], &[1, 3]]).unwrap()
    }

    #[test]
    fn build_examples() {
        let h = Hypergraph::unweighted(3, &[&[1, 2, 3]]).unwrap();
        assert_eq!(h.edge_count(), 1);
        assert_eq!(h.profile().rank, Some(3));
        assert_eq!(h.profile().corank, Some(3));
        let e = Hypergraph::edgeless(4);
        assert!((1..=4).all(|v| e.degree(v).unwrap() == 0));
    }

    #[test]
    fn build_errors() {
        assert!(matches!(Hypergraph::unweighted(3, &[&[1, 4]]), Err(Error::VertexOutOfRange { vertex: 4, n: 3 })));
        assert!(matches!(Hypergraph::unweighted(3, &[&[]]), Err(Error::EmptyEdge)));
        assert!(matches!(Hypergraph::new(3, [(vec![1, 2], int(-1))]), Err(Error::NegativeWeight(_))));
        assert!(matches!(Hypergraph::unweighted(3, &[&[1, 1, 2]]), Err(Error::RepeatedVertex(1))));
    }

    #[test]
    fn valency_and_degree() {
        let h = Hypergraph::new(3, [(vec![1, 2, 3], int(1)), (vec![1, 2], int(2))]).unwrap();
        assert_eq!(h.valency(1).unwrap(), int(3));
        assert_eq!(h.degree(1).unwrap(), 2);
        let iso = Hypergraph::unweighted(3, &[&[1, 2]]).unwrap();
        assert_eq!(iso.valency(3).unwrap(), int(0));
        assert!(iso.valency(4).is_err());
        let k3 = Hypergraph::complete(3, &WeightTable::ones()).unwrap();
        assert!((1..=3).all(|v| k3.valency(v).unwrap() == int(3)));
    }

    #[test]
    fn regularity_and_uniformity() {
        let t = triangle();
        assert_eq!(t.is_regular(), Some(int(2)));
        assert_eq!(t.is_uniform(), Some(2));
        let mixed = Hypergraph::unweighted(3, &[&[1, 2], &[1, 2, 3]]).unwrap();
        let p = mixed.profile();
        assert_eq!(p.uniform, None);
        assert_eq!((p.rank, p.corank), (Some(3), Some(2)));
        let k43 = Hypergraph::complete_uniform(4, 3, int(1)).unwrap();
        assert_eq!(k43.is_regular(), Some(int(3)));
        assert_eq!(k43.is_uniform(), Some(3));
    }

    #[test]
    fn complete_edge_counts() {
        let w = WeightTable::ones();
        assert_eq!(Hypergraph::complete(2, &w).unwrap().edge_count(), 1);
        assert_eq!(Hypergraph::complete(3, &w).unwrap().edge_count(), 4);
        assert_eq!(Hypergraph::complete(4, &w).unwrap().edge_count(), 11);
        assert!(Hypergraph::complete(1, &w).is_err());
    }

    #[test]
    fn complete_uniform_examples() {
        assert_eq!(Hypergraph::complete_uniform(4, 3, int(1)).unwrap().edge_count(), 4);
        assert_eq!(Hypergraph::complete_uniform(5, 0, int(1)).unwrap().edge_count(), 0);
        assert_eq!(Hypergraph::complete_uniform(5, 2, int(1)).unwrap().edge_count(), 10);
        assert!(Hypergraph::complete_uniform(3, 4, int(1)).is_err());
    }

    #[test]
    fn complements() {
        let w = WeightTable::ones();
        let path = Hypergraph::unweighted(3, &[&[1, 2], &[2, 3]]).unwrap();
        assert_eq!(path.s_complement(&w).unwrap(), Hypergraph::unweighted(3, &[&[1, 3]]).unwrap());
        let k = Hypergraph::complete_uniform(5, 3, int(1)).unwrap();
        assert_eq!(k.s_complement(&w).unwrap().edge_count(), 0);

        let single = Hypergraph::unweighted(3, &[&[1, 2]]).unwrap();
        assert_eq!(
            single.total_complement(&w).unwrap(),
            Hypergraph::unweighted(3, &[&[1, 3], &[2, 3], &[1, 2, 3]]).unwrap()
        );
        let full = Hypergraph::complete(4, &w).unwrap();
        assert_eq!(full.total_complement(&w).unwrap().edge_count(), 0);
        assert_eq!(Hypergraph::edgeless(4).total_complement(&w).unwrap(), full);

        let dup = Hypergraph::unweighted(3, &[&[1, 2], &[1, 2]]).unwrap();
        assert!(matches!(dup.s_complement(&w), Err(Error::DuplicateEdge(_))));
        assert!(matches!(dup.total_complement(&w), Err(Error::DuplicateEdge(_))));
    }

    #[test]
    fn complement_weights_follow_table() {
        let w = WeightTable::ones().with(3, ratio(1, 2)).unwrap();
        let h = Hypergraph::unweighted(3, &[&[1, 2]]).unwrap();
        let c = h.total_complement(&w).unwrap();
        let triple = c.edges().iter().find(|e| e.len() == 3).unwrap();
        assert_eq!(triple.weight, ratio(1, 2));
    }

    #[test]
    fn disjoint_union_offsets() {
        let (u, off) = Hypergraph::disjoint_union(&[triangle(), triangle()]);
        assert_eq!(u.n(), 6);
        assert_eq!(u.edge_count(), 6);
        assert_eq!(off, vec![0, 3]);
        assert!(u.edges().iter().all(|e| e.vertices.iter().all(|&v| v <= 3) || e.vertices.iter().all(|&v| v > 3)));

        let (same, off) = Hypergraph::disjoint_union(&[triangle()]);
        assert_eq!(same, triangle());
        assert_eq!(off, vec![0]);

        let hs = [Hypergraph::edgeless(3), Hypergraph::edgeless(4), Hypergraph::edgeless(3)];
        assert_eq!(Hypergraph::disjoint_union(&hs).1, vec![0, 3, 7]);
    }

    #[test]
    fn induced_relabels() {
        let h = Hypergraph::unweighted(4, &[&[1, 2], &[2, 4], &[3, 4], &[1, 2, 4]]).unwrap();
        let g = h.induced(&[2, 4]).unwrap();
        assert_eq!(g, Hypergraph::unweighted(2, &[&[1, 2]]).unwrap());
    }
}
