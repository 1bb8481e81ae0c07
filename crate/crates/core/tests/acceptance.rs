mod common;

use std::collections::BTreeSet;
use std::time::{Duration, Instant};

use rand::seq::SliceRandom;
use rand::Rng;

use common::*;
use tenjoin::closedform::{
    backbone_spec, join_charpoly, k_copy_charpoly, k_copy_table, lexicographic_charpoly,
    lexicographic_uniform_charpoly, two_copy_charpoly, two_copy_spectrum, two_copy_valencies, CharPolyFactored,
    JoinSpec,
};
use tenjoin::cospectral::{self, certify_pair, SearchConfig};
use tenjoin::counting::{n_cross, p1, p2, q_cross};
use tenjoin::eigen::RationalPoly;
use tenjoin::rational::{int, ratio, to_f64};
use tenjoin::tensorjoin::{
    backbone_join, decompose, flatten, k_copy_join, lexicographic_product, tensor_join, two_copy_join, ClassSequence,
    CopyKind, EdgeFamily, KCopyOp, TwoCopyFamily,
};
use tenjoin::{Hypergraph, MatrixKind, Rational, WeightTable};

const NLAP_TOL: f64 = 1e-9;
const FIXTURE_TOL: f64 = 1e-12;

/// Valencies predicted by a closed form, checked against the built hypergraph.
#[derive(Default)]
struct ValencyLog {
    vertices: usize,
    failures: Vec<String>,
}

impl ValencyLog {
    fn check(&mut self, what: &str, h: &Hypergraph, classes: &[usize], z: &[Rational]) {
        let d = valencies(h);
        let mut v = 0;
        for (i, &n) in classes.iter().enumerate() {
            for _ in 0..n {
                self.vertices += 1;
                if d[v] != z[i] {
                    self.failures.push(format!("{what}: vertex {} has valency {} but z = {}", v + 1, d[v], z[i]));
                }
                v += 1;
            }
        }
    }
}

struct Line {
    pass: bool,
    detail: String,
}

impl Line {
    fn new(failures: &[String], detail: String) -> Self {
        let mut detail = detail;
        if let Some(f) = failures.first() {
            detail = format!("{detail}; {} failures, first: {f}", failures.len());
        }
        Line { pass: failures.is_empty(), detail }
    }
}

/// Compares a closed form to the oracle for one kind. `A` and `L` must match
/// exactly; the normalized Laplacian must match as `D^{-1}L` and in floating point.
fn compare(what: &str, h: &Hypergraph, closed: &CharPolyFactored, kind: MatrixKind, failures: &mut Vec<String>) {
    let Some(oracle) = charpoly_of(h, kind) else {
        failures.push(format!("{what}: isolated vertex"));
        return;
    };
    let expanded = closed.expand().unwrap();
    if !same_poly(&expanded, &oracle) {
        failures.push(format!("{what} {kind}: closed {expanded} differs from the oracle"));
    }
    if kind == MatrixKind::NormalizedLaplacian {
        let roots = closed.float_roots().unwrap();
        let direct = float_spectrum(h, kind).unwrap();
        let dev = max_dev(roots.values(), &direct);
        if dev > NLAP_TOL {
            failures.push(format!("{what}: normalized spectra deviate by {dev:e}"));
        }
    }
}

fn random_sizes(r: &mut impl Rng, k: usize, max_total: usize) -> Vec<usize> {
    loop {
        let sizes: Vec<usize> = (0..k).map(|_| r.gen_range(1..=5)).collect();
        if sizes.iter().sum::<usize>() <= max_total {
            return sizes;
        }
    }
}

fn criterion_1(log: &mut ValencyLog) -> Line {
    let mut r = rng(1);
    let mut failures = Vec::new();
    let mut kinds = [0usize; 3];
    let instances = 210;
    for inst in 0..instances {
        let k = r.gen_range(2..=3);
        let which = inst % 3;
        let sizes = random_sizes(&mut r, k, if which == 2 { 10 } else { 15 });
        let total: usize = sizes.iter().sum();
        let gs: Vec<Hypergraph> = sizes.iter().map(|&n| circulant(&mut r, n, &[2, 3, 4], 2, true)).collect();
        let classes = ClassSequence::consecutive(&sizes);
        let f = match which {
            0 => {
                let mut b: BTreeSet<usize> = BTreeSet::new();
                for _ in 0..r.gen_range(1..=2) {
                    b.insert(r.gen_range(k..=total.min(k + 4)));
                }
                kinds[0] += 1;
                EdgeFamily::b_spanning(classes, &b).unwrap()
            }
            1 => {
                kinds[1] += 1;
                EdgeFamily::uniform_max(classes, r.gen_range(2..=total.min(6))).unwrap()
            }
            _ => {
                kinds[2] += 1;
                EdgeFamily::full(classes).unwrap()
            }
        };
        let w = rand_table(&mut r, total);
        let h = tensor_join(&gs, &f, &w).unwrap();
        let what = format!("instance {inst} sizes {sizes:?}");
        for kind in KINDS {
            let spec = JoinSpec::from_join(&gs, &f, &w, kind).unwrap();
            if kind == MatrixKind::Adjacency {
                log.check(&what, &h, &sizes, &spec.z());
            }
            compare(&what, &h, &join_charpoly(&spec).unwrap(), kind, &mut failures);
        }
    }
    Line::new(
        &failures,
        format!(
            "{instances} joins ({} B-spanning, {} uniform-max, {} full) x 3 matrices",
            kinds[0], kinds[1], kinds[2]
        ),
    )
}

fn k6_family() -> (Vec<Hypergraph>, EdgeFamily) {
    let f = EdgeFamily::b_spanning(ClassSequence::consecutive(&[3, 3]), &[2].into()).unwrap();
    (vec![triangle(), triangle()], f)
}

fn criterion_2(log: &mut ValencyLog) -> Line {
    let (gs, f) = k6_family();
    let w = WeightTable::ones().with(2, int(1)).unwrap();
    let h = tensor_join(&gs, &f, &w).unwrap();
    let mut failures = Vec::new();
    let expected: [(MatrixKind, Vec<Rational>); 3] = [
        (MatrixKind::Adjacency, vec![int(5), int(-1), int(-1), int(-1), int(-1), int(-1)]),
        (MatrixKind::Laplacian, vec![int(0), int(6), int(6), int(6), int(6), int(6)]),
        (
            MatrixKind::NormalizedLaplacian,
            vec![int(0), ratio(6, 5), ratio(6, 5), ratio(6, 5), ratio(6, 5), ratio(6, 5)],
        ),
    ];
    for (kind, roots) in expected {
        let want = RationalPoly::from_roots(&roots);
        let spec = JoinSpec::from_join(&gs, &f, &w, kind).unwrap();
        if kind == MatrixKind::Adjacency {
            log.check("K6 fixture", &h, &[3, 3], &spec.z());
        }
        let closed = join_charpoly(&spec).unwrap();
        if closed.expand().unwrap() != want {
            failures.push(format!("{kind}: closed form {}", closed.expand().unwrap()));
        }
        if !same_poly(&want, &charpoly_of(&h, kind).unwrap()) {
            failures.push(format!("{kind}: direct charpoly differs"));
        }
        if kind == MatrixKind::NormalizedLaplacian {
            let floats: Vec<f64> = roots.iter().map(to_f64).collect();
            let direct = tenjoin::matrices::direct_spectrum(&h, kind, 1e-14).unwrap();
            for (label, got) in
                [("closed", closed.float_roots().unwrap().values().to_vec()), ("direct", direct.values().to_vec())]
            {
                let dev = max_dev(&got, &floats);
                if dev > FIXTURE_TOL {
                    failures.push(format!("{label} normalized spectrum off by {dev:e}"));
                }
            }
        }
    }
    Line::new(&failures, "A {5, -1^5}, L {0, 6^5}, normalized {0, (6/5)^5} by both methods".into())
}

/// Tallies by cardinality of the subsets through fixed `p`, `q`: those meeting
/// every class and those with at most one vertex per class.
fn cross_tallies(sizes: &[usize], i: usize, j: usize) -> (Vec<u64>, Vec<u64>) {
    let total: usize = sizes.iter().sum();
    let mut class_mask = Vec::new();
    let mut start = 0;
    for &n in sizes {
        class_mask.push(((1u32 << n) - 1) << start);
        start += n;
    }
    let first = |c: usize| class_mask[c].trailing_zeros();
    let p = first(i);
    let q = if i == j { p + 1 } else { first(j) };
    let fixed = (1u32 << p) | (1u32 << q);
    let mut every = vec![0u64; total + 1];
    let mut single = vec![0u64; total + 1];
    for s in 0u32..(1 << total) {
        if s & fixed != fixed {
            continue;
        }
        let c = s.count_ones() as usize;
        if class_mask.iter().all(|m| s & m != 0) {
            every[c] += 1;
        }
        if class_mask.iter().all(|m| (s & m).count_ones() <= 1) {
            single[c] += 1;
        }
    }
    (every, single)
}

fn compositions(total: usize, out: &mut Vec<Vec<usize>>, cur: &mut Vec<usize>) {
    if total == 0 {
        if !cur.is_empty() {
            out.push(cur.clone());
        }
        return;
    }
    for part in 1..=total {
        cur.push(part);
        compositions(total - part, out, cur);
        cur.pop();
    }
}

fn criterion_3() -> Line {
    let mut failures = Vec::new();
    let mut tuples = Vec::new();
    for total in 1..=12 {
        compositions(total, &mut tuples, &mut Vec::new());
    }
    let mut checks = 0u64;
    for sizes in &tuples {
        let k = sizes.len();
        let total: usize = sizes.iter().sum();
        for i in 0..k {
            for j in 0..k {
                if i == j && sizes[i] < 2 {
                    continue;
                }
                let (every, single) = cross_tallies(sizes, i, j);
                for c in 0..=total {
                    checks += 2;
                    let n = n_cross(sizes, i + 1, j + 1, c).unwrap();
                    if n != every[c].into() {
                        failures.push(format!("n_cross {sizes:?} ({}, {}) c={c}: {n} vs {}", i + 1, j + 1, every[c]));
                    }
                    let q = q_cross(sizes, i + 1, j + 1, c).unwrap();
                    if q != single[c].into() {
                        failures.push(format!("q_cross {sizes:?} ({}, {}) c={c}: {q} vs {}", i + 1, j + 1, single[c]));
                    }
                }
            }
        }
    }
    for n in 2..=6 {
        for l in 2..=12 / n {
            let total = n * l;
            let copy1 = (1u32 << n) - 1;
            let mut t1 = vec![0u64; total + 1];
            let mut t2 = vec![0u64; total + 1];
            for s in 0u32..(1 << total) {
                let c = s.count_ones() as usize;
                if s & 0b11 == 0b11 && s & !copy1 != 0 {
                    t1[c] += 1;
                }
                if s & 1 == 1 && s & (1 << n) != 0 {
                    t2[c] += 1;
                }
            }
            for c in 0..=total {
                checks += 2;
                if p1(n, l, c).unwrap() != t1[c].into() {
                    failures.push(format!("p1({n}, {l}, {c}) vs {}", t1[c]));
                }
                if p2(n, l, c).unwrap() != t2[c].into() {
                    failures.push(format!("p2({n}, {l}, {c}) vs {}", t2[c]));
                }
            }
        }
    }
    Line::new(&failures, format!("{} class-size tuples, {checks} values", tuples.len()))
}

fn regular_bases() -> Vec<Hypergraph> {
    let w = WeightTable::ones();
    vec![
        Hypergraph::unweighted(2, &[&[1, 2]]).unwrap(),
        triangle(),
        Hypergraph::complete_uniform(3, 3, int(1)).unwrap(),
        Hypergraph::complete(3, &w).unwrap(),
        cycle4(),
        Hypergraph::unweighted(4, &[&[1, 2], &[3, 4]]).unwrap(),
        Hypergraph::complete_uniform(4, 2, int(1)).unwrap(),
        k43(),
        Hypergraph::new(4, vec![(vec![1, 2], ratio(3, 2)), (vec![3, 4], ratio(3, 2)), (vec![1, 2, 3, 4], int(2))])
            .unwrap(),
    ]
}

fn criterion_4(log: &mut ValencyLog) -> Line {
    let mut r = rng(4);
    let mut failures = Vec::new();
    let mut count = 0;
    let mut literal_disagrees = 0;
    for (b, h) in regular_bases().into_iter().enumerate() {
        let n = h.n();
        for k in 2..=4 {
            let mut ops = Vec::new();
            for l in 2..=k {
                ops.push(KCopyOp::JoinNeighbourhood { l });
                for rr in 1..=n {
                    ops.push(KCopyOp::Mirror { l, r: rr });
                    ops.push(KCopyOp::VcNeighbourhood { l, r: rr });
                }
            }
            for op in ops {
                let w = if count % 2 == 0 { WeightTable::ones() } else { rand_table(&mut r, k * n) };
                count += 1;
                let g = k_copy_join(&h, k, op, &w).unwrap();
                let what = format!("base {b}, k={k}, {op:?}");
                let z = k_copy_table(&h, k, op, &w, MatrixKind::Adjacency).unwrap().z;
                log.check(&what, &g, &[n * k], &[z]);
                for kind in KINDS {
                    let closed = k_copy_charpoly(&h, k, op, &w, kind).unwrap();
                    compare(&what, &g, &closed, kind, &mut failures);
                }
                // Each of the n factors of the literal product leads with k x^k.
                let brute = charpoly_of(&g, MatrixKind::Adjacency).unwrap();
                let literal_leading = int(k as i64).pow(n as i32);
                if brute.len() == n * k + 1 && brute[n * k] == int(1) && literal_leading != int(1) {
                    literal_disagrees += 1;
                }
            }
        }
    }
    if literal_disagrees != count {
        failures.push(format!("literal product agreed in leading coefficient {} times", count - literal_disagrees));
    }
    Line::new(
        &failures,
        format!(
            "{count} k-copy instances x 3 matrices; literal product (leading coefficient k^n, degree nk) disagrees with the monic brute charpoly in {literal_disagrees}/{count}"
        ),
    )
}

fn criterion_5(log: &mut ValencyLog) -> Line {
    let w = WeightTable::ones();
    let mut failures = Vec::new();
    let families = [
        TwoCopyFamily::Aligned(2),
        TwoCopyFamily::Identity,
        TwoCopyFamily::Full,
        TwoCopyFamily::FullMinusAligned(2),
        TwoCopyFamily::FullMinusIdentity,
    ];
    let mut count = 0;
    for (name, h) in [("triangle", triangle()), ("C4", cycle4()), ("K4^3", k43())] {
        for g1 in CopyKind::ALL {
            for g2 in CopyKind::ALL {
                for t in families {
                    count += 1;
                    let g = two_copy_join(&h, g1, g2, t, &w).unwrap();
                    let what = format!("{name} {g1:?}/{g2:?} {t:?}");
                    let z = two_copy_valencies(&h, g1, g2, t, &w).unwrap();
                    log.check(&what, &g, &[h.n(), h.n()], &z);
                    for kind in KINDS {
                        let closed = two_copy_charpoly(&h, g1, g2, t, &w, kind).unwrap();
                        compare(&what, &g, &closed, kind, &mut failures);
                        let spectrum = two_copy_spectrum(&h, g1, g2, t, &w, kind, 1e-12).unwrap();
                        let dev = max_dev(spectrum.values(), &float_spectrum(&g, kind).unwrap());
                        if dev > NLAP_TOL {
                            failures.push(format!("{what} {kind}: eigenbasis spectrum off by {dev:e}"));
                        }
                    }
                }
            }
        }
    }
    let mirror = two_copy_charpoly(
        &triangle(),
        CopyKind::Base,
        CopyKind::Base,
        TwoCopyFamily::Identity,
        &w,
        MatrixKind::Adjacency,
    )
    .unwrap()
    .expand()
    .unwrap();
    let want = RationalPoly::from_roots(&[int(3), int(1), int(0), int(0), int(-2), int(-2)]);
    if mirror != want {
        failures.push(format!("triangle mirror gave {mirror}"));
    }
    Line::new(&failures, format!("{count} two-copy joins x 3 matrices; triangle mirror {{3, 1, 0, 0, -2, -2}}"))
}

/// `h[h2]` built vertex by vertex: `(a, x)` is `(a - 1) m + x`.
fn lexicographic_oracle(h: &Hypergraph, h2: &Hypergraph, w: &WeightTable) -> Hypergraph {
    let m = h2.n();
    let mut edges = Vec::new();
    for a in 0..h.n() {
        for e in h2.edges() {
            edges.push((e.vertices.iter().map(|x| a * m + x).collect::<Vec<_>>(), e.weight.clone()));
        }
    }
    for e in h.edges() {
        let mut choices: Vec<Vec<usize>> = vec![vec![]];
        for &a in &e.vertices {
            choices = choices
                .into_iter()
                .flat_map(|c| (1..=m).map(move |x| [c.clone(), vec![(a - 1) * m + x]].concat()))
                .collect();
        }
        edges.extend(choices.into_iter().map(|c| (c, w.get(e.len()).clone())));
    }
    Hypergraph::new(h.n() * m, edges).unwrap()
}

fn criterion_6(log: &mut ValencyLog) -> Line {
    let mut r = rng(6);
    let mut failures = Vec::new();
    let k2 = Hypergraph::unweighted(2, &[&[1, 2]]).unwrap();
    let w = WeightTable::ones();
    let k6 = RationalPoly::from_roots(&[int(5), int(-1), int(-1), int(-1), int(-1), int(-1)]);
    if lexicographic_charpoly(&k2, &triangle(), &w, MatrixKind::Adjacency).unwrap().expand().unwrap() != k6
        || lexicographic_uniform_charpoly(&k2, &triangle(), &w).unwrap().expand().unwrap() != k6
    {
        failures.push("K2[K3] does not have the K6 spectrum".into());
    }
    for inst in 0..20 {
        let nh = r.gen_range(2..=4);
        let u = if nh >= 3 && r.gen_bool(0.5) { 3 } else { 2 };
        let h = circulant(&mut r, nh, &[u], 2, false);
        let m = r.gen_range(1..=3);
        let h2 = circulant(&mut r, m, &[2, 3], 2, true);
        let w = rand_table(&mut r, u);
        let what = format!("instance {inst} ({nh}, u={u}) x {m}");
        let g = lexicographic_product(&h, &h2, &w).unwrap();
        if g != lexicographic_oracle(&h, &h2, &w) {
            failures.push(format!("{what}: product differs from the vertex-by-vertex build"));
            continue;
        }
        let gs = vec![h2.clone(); nh];
        let families: Vec<EdgeFamily> = h
            .edges()
            .iter()
            .map(|e| EdgeFamily::b_spanning(ClassSequence::consecutive(&vec![m; e.len()]), &[e.len()].into()).unwrap())
            .collect();
        let z = backbone_spec(&h, &gs, &families, &w, MatrixKind::Adjacency).unwrap().z();
        log.check(&what, &g, &vec![m; nh], &z);
        for kind in KINDS {
            compare(
                &format!("{what} backbone"),
                &g,
                &lexicographic_charpoly(&h, &h2, &w, kind).unwrap(),
                kind,
                &mut failures,
            );
        }
        compare(
            &format!("{what} uniform"),
            &g,
            &lexicographic_uniform_charpoly(&h, &h2, &w).unwrap(),
            MatrixKind::Adjacency,
            &mut failures,
        );
    }
    Line::new(&failures, "K2[K3] = K6; 20 random products by fast, backbone and brute paths".into())
}

fn random_hypergraph(r: &mut impl Rng, n: usize, max_edges: usize) -> Hypergraph {
    let mut seen = BTreeSet::new();
    let mut edges = Vec::new();
    if n >= 2 {
        for _ in 0..r.gen_range(0..=max_edges) {
            let c = r.gen_range(2..=n.min(4));
            let mut vs: Vec<usize> = (1..=n).collect();
            vs.shuffle(r);
            let mut e = vs[..c].to_vec();
            e.sort_unstable();
            if seen.insert(e.clone()) {
                edges.push((e, rand_weight(r)));
            }
        }
    }
    Hypergraph::new(n, edges).unwrap()
}

fn criterion_7() -> Line {
    let mut r = rng(7);
    let mut failures = Vec::new();
    for inst in 0..50 {
        let k = r.gen_range(2..=4);
        let sizes: Vec<usize> = (0..k).map(|_| r.gen_range(1..=3)).collect();
        let gs: Vec<Hypergraph> = sizes.iter().map(|&n| random_hypergraph(&mut r, n, 3)).collect();
        let mut backbone_edges = BTreeSet::new();
        for _ in 0..r.gen_range(1..=4) {
            let c = r.gen_range(2..=k);
            let mut vs: Vec<usize> = (1..=k).collect();
            vs.shuffle(&mut r);
            let mut e = vs[..c].to_vec();
            e.sort_unstable();
            backbone_edges.insert(e);
        }
        let h = Hypergraph::new(k, backbone_edges.into_iter().map(|e| (e, int(1)))).unwrap();
        let families: Vec<EdgeFamily> = h
            .edges()
            .iter()
            .map(|e| {
                let part: Vec<usize> = e.vertices.iter().map(|&i| sizes[i - 1]).collect();
                let total: usize = part.iter().sum();
                let classes = ClassSequence::consecutive(&part);
                let all: BTreeSet<usize> = (e.len()..=total).collect();
                let spanning = EdgeFamily::b_spanning(classes.clone(), &all).unwrap();
                if r.gen_bool(0.5) {
                    let b: BTreeSet<usize> = all.iter().copied().filter(|_| r.gen_bool(0.5)).collect();
                    EdgeFamily::b_spanning(classes, &b).unwrap()
                } else {
                    let pick: Vec<Vec<usize>> = spanning.members().filter(|_| r.gen_bool(0.4)).cloned().collect();
                    EdgeFamily::explicit(classes, pick).unwrap()
                }
            })
            .collect();
        let w = rand_table(&mut r, sizes.iter().sum());
        let direct = backbone_join(&h, &gs, &families, &w).unwrap();
        let flat = flatten(&h, &sizes, &families).unwrap();
        let via_flat = tensor_join(&gs, &flat, &w).unwrap();
        let expected_edges: usize =
            gs.iter().map(Hypergraph::edge_count).sum::<usize>() + families.iter().map(EdgeFamily::len).sum::<usize>();
        if direct != via_flat || direct.edge_count() != expected_edges {
            failures.push(format!("instance {inst}: backbone join and flattened join differ"));
        }
    }
    Line::new(&failures, "50 backbone joins equal tensor_join of the flattened family".into())
}

fn criterion_8() -> Line {
    let mut r = rng(8);
    let mut failures = Vec::new();
    for inst in 0..100 {
        let n = r.gen_range(2..=8);
        let k = r.gen_range(2..=n.min(4));
        let mut vs: Vec<usize> = (1..=n).collect();
        vs.shuffle(&mut r);
        let mut cuts: Vec<usize> = (1..n).collect();
        cuts.shuffle(&mut r);
        let mut cuts: Vec<usize> = cuts[..k - 1].to_vec();
        cuts.sort_unstable();
        let mut partition = Vec::new();
        let mut prev = 0;
        for c in cuts.into_iter().chain([n]) {
            partition.push(vs[prev..c].to_vec());
            prev = c;
        }
        let block_of = |v: usize| partition.iter().position(|p| p.contains(&v)).unwrap();
        let cross = rand_table(&mut r, n);
        let raw = random_hypergraph(&mut r, n, 12);
        let edges: Vec<(Vec<usize>, Rational)> = raw
            .edges()
            .iter()
            .map(|e| {
                let b = block_of(e.vertices[0]);
                let inside = e.vertices.iter().all(|&v| block_of(v) == b);
                (e.vertices.clone(), if inside { e.weight.clone() } else { cross.get(e.len()).clone() })
            })
            .collect();
        let h = Hypergraph::new(n, edges).unwrap();
        let d = decompose(&h, &partition).unwrap();
        let joined = tensor_join(&d.constituents, &d.family, &d.weights).unwrap();
        let order: Vec<usize> = partition.iter().flatten().map(|&v| v - 1).collect();
        let back = joined.permuted(&order);
        if back != h || d.reassemble().unwrap() != h {
            failures.push(format!("instance {inst}: partition {partition:?} does not round-trip"));
        }
    }
    Line::new(&failures, "100 random hypergraphs (n <= 8) round-trip through decompose and tensor_join".into())
}

/// Plain permutation search; only used on a handful of pairs.
fn brute_isomorphic(a: &Hypergraph, b: &Hypergraph) -> bool {
    let n = a.n();
    if n != b.n() || a.edge_count() != b.edge_count() {
        return false;
    }
    let mut perm: Vec<usize> = (0..n).collect();
    loop {
        if a.permuted(&perm) == *b {
            return true;
        }
        let Some(i) = (0..n.saturating_sub(1)).rev().find(|&i| perm[i] < perm[i + 1]) else {
            return false;
        };
        let j = (i + 1..n).rev().find(|&j| perm[j] > perm[i]).unwrap();
        perm.swap(i, j);
        perm[i + 1..].reverse();
    }
}

fn criterion_9() -> Line {
    let mut failures = Vec::new();
    let cfg = SearchConfig { uniform: 3, min_n: 3, max_n: 8, budget: cospectral::DEFAULT_BUDGET };
    let report = cospectral::search(&cfg).unwrap();
    for (idx, pair) in report.pairs.iter().enumerate() {
        let (a, b) = (&pair.first, &pair.second);
        if a.is_regular().is_none() || a.is_regular() != b.is_regular() {
            failures.push(format!("pair {idx} is not a regular pair"));
            continue;
        }
        if charpoly_of(a, MatrixKind::Adjacency) != charpoly_of(b, MatrixKind::Adjacency) {
            failures.push(format!("pair {idx} is not adjacency-cospectral"));
        }
        if idx < 10 && brute_isomorphic(a, b) {
            failures.push(format!("pair {idx} is isomorphic"));
        }
        let cert = certify_pair(a, b).unwrap();
        if !cert.report.all() {
            failures.push(format!("pair {idx}: certificate {:?}", cert.report));
        }
        for kind in KINDS {
            if charpoly_of(&cert.first, kind) != charpoly_of(&cert.second, kind) {
                failures.push(format!("pair {idx}: joined pair differs in {kind} by the oracle"));
            }
        }
        if !cert.to_text().contains("# nlap equal") {
            failures.push(format!("pair {idx}: certificate text lacks the normalized line"));
        }
    }
    let c4k1 = Hypergraph::unweighted(5, &[&[1, 2], &[2, 3], &[3, 4], &[1, 4]]).unwrap();
    let star = Hypergraph::unweighted(5, &[&[1, 2], &[1, 3], &[1, 4], &[1, 5]]).unwrap();
    let classic = cospectral::verify(&c4k1, &star).unwrap();
    if !(classic.adjacency && !classic.laplacian) {
        failures.push(format!("C4+K1 vs K1,4: {classic:?}"));
    }
    Line::new(
        &failures,
        format!(
            "{} scales searched, {}; {} join certificates all true; C4+K1 vs K1,4 adjacency true, laplacian false",
            report.scales.len(),
            report.summary().lines().last().unwrap_or_default(),
            report.pairs.len()
        ),
    )
}

fn criterion_10(log: &ValencyLog) -> Line {
    Line::new(&log.failures, format!("{} vertices across criteria 1, 2, 4, 5, 6", log.vertices))
}

fn emit(n: usize, line: &Line, took: Duration, limit: Option<Duration>) -> bool {
    let in_time = limit.is_none_or(|l| took <= l);
    let pass = line.pass && in_time;
    let budget = limit.map_or(String::new(), |l| format!(", limit {}s", l.as_secs()));
    println!(
        "criterion {n}: {} {} ({:.1}s{budget})",
        if pass { "PASS" } else { "FAIL" },
        line.detail,
        took.as_secs_f64()
    );
    pass
}

#[test]
fn acceptance() {
    let mut log = ValencyLog::default();
    let mut all = true;
    let timed = |f: &mut dyn FnMut() -> Line| {
        let start = Instant::now();
        let line = f();
        (line, start.elapsed())
    };
    let (l, t) = timed(&mut || criterion_1(&mut log));
    all &= emit(1, &l, t, Some(Duration::from_secs(60)));
    let (l, t) = timed(&mut || criterion_2(&mut log));
    all &= emit(2, &l, t, None);
    let (l, t) = timed(&mut criterion_3);
    all &= emit(3, &l, t, Some(Duration::from_secs(30)));
    let (l, t) = timed(&mut || criterion_4(&mut log));
    all &= emit(4, &l, t, None);
    let (l, t) = timed(&mut || criterion_5(&mut log));
    all &= emit(5, &l, t, None);
    let (l, t) = timed(&mut || criterion_6(&mut log));
    all &= emit(6, &l, t, None);
    let (l, t) = timed(&mut criterion_7);
    all &= emit(7, &l, t, None);
    let (l, t) = timed(&mut criterion_8);
    all &= emit(8, &l, t, None);
    let (l, t) = timed(&mut criterion_9);
    all &= emit(9, &l, t, None);
    let (l, t) = timed(&mut || criterion_10(&log));
    all &= emit(10, &l, t, None);
    assert!(all, "some acceptance criteria failed");
}
