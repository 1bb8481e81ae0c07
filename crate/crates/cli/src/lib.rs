//! Command-line front end: `tenjoin <subcommand>`.
//!
//! Exit status is 0 on success, 1 when a verification fails and 2 on usage or
//! input errors.

mod args;
mod report;

use std::collections::BTreeSet;
use std::fs;
use std::io::Write;
use std::path::Path;

use clap::Parser;
use serde_json::json;

use tenjoin::closedform::{join_charpoly, JoinSpec};
use tenjoin::cospectral::{self, Certificate, SearchConfig};
use tenjoin::eigen::DEFAULT_TOL;
use tenjoin::hgr::{parse_hgr, serialize_hgr, HgrDocument};
use tenjoin::tensorjoin::{
    backbone_join, decompose, k_copy_join, lexicographic_product, strong_partite, tensor_join, two_copy_join,
    ClassSequence, CopyKind, EdgeFamily, KCopyOp, TwoCopyFamily,
};
use tenjoin::{matrices, rational, Hypergraph, MatrixKind, WeightTable};

pub use args::Cli;
use args::{Command, CopyArg, FamilyArg, FamilyArgs, MatrixArg, MethodArg, Shape, WeightArgs};
use report::{coeff_strings, float_list, sig12};

pub const EXIT_OK: i32 = 0;
pub const EXIT_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

type Out<'a> = &'a mut dyn Write;
type CmdResult = Result<i32, String>;

/// Parses `args` (program name first) and runs the subcommand.
pub fn run<I, S>(args: I, out: Out, err: Out) -> i32
where
    I: IntoIterator<Item = S>,
    S: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_USAGE } else { EXIT_OK };
            let target: Out = if e.use_stderr() { err } else { out };
            let _ = write!(target, "{}", e.render());
            return code;
        }
    };
    let res = match cli.command {
        Command::Build(a) => build(a.shape, out),
        Command::Spectrum(a) => spectrum(a, out),
        Command::Join(a) => join(a, out),
        Command::BackboneJoin(a) => backbone(a, out),
        Command::Verify(a) => verify(a, out),
        Command::Cospectral(a) => cospectral_cmd(a, out),
        Command::Decompose(a) => decompose_cmd(a, out),
    };
    match res {
        Ok(code) => code,
        Err(msg) => {
            let _ = writeln!(err, "error: {msg}");
            EXIT_USAGE
        }
    }
}

fn io<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn read(path: &Path) -> Result<HgrDocument, String> {
    let text = fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
    parse_hgr(&text).map_err(|e| format!("{}: {e}", path.display()))
}

fn read_all(paths: &[impl AsRef<Path>]) -> Result<Vec<Hypergraph>, String> {
    paths.iter().map(|p| read(p.as_ref()).map(|d| d.hypergraph)).collect()
}

fn weights(a: &WeightArgs) -> Result<WeightTable, String> {
    let mut default = rational::int(1);
    let mut explicit = Vec::new();
    for item in a.wc.iter().filter(|s| !s.is_empty()) {
        let (c, w) = item.split_once('=').ok_or_else(|| format!("--wc {item:?} is not c=w"))?;
        let w = rational::parse(w.trim()).map_err(io)?;
        if c.trim() == "default" {
            default = w;
        } else {
            explicit.push((c.trim().parse::<usize>().map_err(|_| format!("--wc cardinality {c:?}"))?, w));
        }
    }
    let mut table = WeightTable::constant(default).map_err(io)?;
    for (c, w) in explicit {
        table = table.with(c, w).map_err(io)?;
    }
    Ok(table)
}

fn kind(m: MatrixArg) -> MatrixKind {
    match m {
        MatrixArg::Adj => MatrixKind::Adjacency,
        MatrixArg::Lap => MatrixKind::Laplacian,
        MatrixArg::Nlap => MatrixKind::NormalizedLaplacian,
    }
}

fn copy_kind(c: CopyArg) -> CopyKind {
    match c {
        CopyArg::Base => CopyKind::Base,
        CopyArg::Complement => CopyKind::Complement,
        CopyArg::Complete => CopyKind::Complete,
        CopyArg::Empty => CopyKind::Empty,
        CopyArg::TotalComplement => CopyKind::TotalComplement,
    }
}

fn numbers(text: &str, what: &str) -> Result<Vec<usize>, String> {
    text.split(',')
        .filter(|t| !t.trim().is_empty())
        .map(|t| t.trim().parse().map_err(|_| format!("{what}: {t:?} is not a number")))
        .collect()
}

fn groups(text: &str, what: &str) -> Result<Vec<Vec<usize>>, String> {
    text.split(';').filter(|g| !g.trim().is_empty()).map(|g| numbers(g, what)).collect()
}

fn two_copy_family(text: &str) -> Result<TwoCopyFamily, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let r = || -> Result<usize, String> { parts.get(1).ok_or("missing :R")?.parse().map_err(io) };
    Ok(match parts[0] {
        "aligned" => TwoCopyFamily::Aligned(r()?),
        "identity" => TwoCopyFamily::Identity,
        "full" => TwoCopyFamily::Full,
        "full-minus-aligned" => TwoCopyFamily::FullMinusAligned(r()?),
        "full-minus-identity" => TwoCopyFamily::FullMinusIdentity,
        other => return Err(format!("unknown two-copy family {other:?}")),
    })
}

fn k_copy_op(text: &str) -> Result<KCopyOp, String> {
    let parts: Vec<&str> = text.split(':').collect();
    let num = |i: usize| -> Result<usize, String> {
        parts.get(i).ok_or_else(|| format!("--op {text:?} is missing a parameter"))?.parse().map_err(io)
    };
    Ok(match parts[0] {
        "mirror" => KCopyOp::Mirror { l: num(1)?, r: num(2)? },
        "join" => KCopyOp::JoinNeighbourhood { l: num(1)? },
        "vc" => KCopyOp::VcNeighbourhood { l: num(1)?, r: num(2)? },
        other => return Err(format!("unknown k-copy operation {other:?}")),
    })
}

fn cycle(n: usize) -> Result<Hypergraph, String> {
    if n < 3 {
        return Err("a cycle needs n >= 3".into());
    }
    Hypergraph::new(n, (1..=n).map(|v| (vec![v, v % n + 1], rational::int(1)))).map_err(io)
}

fn emit(out: Out, h: &Hypergraph) -> CmdResult {
    out.write_all(serialize_hgr(h, &WeightTable::ones()).as_bytes()).map_err(io)?;
    Ok(EXIT_OK)
}

fn build(shape: Shape, out: Out) -> CmdResult {
    let h = match shape {
        Shape::Complete { n, uniform: Some(m), weights: w } => {
            Hypergraph::complete_uniform(n, m, weights(&w)?.get(m).clone()).map_err(io)?
        }
        Shape::Complete { n, uniform: None, weights: w } => Hypergraph::complete(n, &weights(&w)?).map_err(io)?,
        Shape::Cycle { n } => cycle(n)?,
        Shape::Edgeless { n } => Hypergraph::edgeless(n),
        Shape::Partite { sizes, uniform, weights: w } => strong_partite(&sizes, uniform, &weights(&w)?).map_err(io)?,
        Shape::Lexicographic { outer, inner, weights: w } => {
            lexicographic_product(&read(&outer)?.hypergraph, &read(&inner)?.hypergraph, &weights(&w)?).map_err(io)?
        }
        Shape::Complement { input, total, weights: w } => {
            let h = read(&input)?.hypergraph;
            let w = weights(&w)?;
            if total { h.total_complement(&w) } else { h.s_complement(&w) }.map_err(io)?
        }
        Shape::TwoCopy { input, g1, g2, family, weights: w } => {
            let h = read(&input)?.hypergraph;
            two_copy_join(&h, copy_kind(g1), copy_kind(g2), two_copy_family(&family)?, &weights(&w)?).map_err(io)?
        }
        Shape::KCopy { input, k, op, weights: w } => {
            k_copy_join(&read(&input)?.hypergraph, k, k_copy_op(&op)?, &weights(&w)?).map_err(io)?
        }
    };
    emit(out, &h)
}

fn family(a: &FamilyArgs, mut classes: ClassSequence) -> Result<EdgeFamily, String> {
    if a.allow_huge {
        classes = classes.allow_huge();
    }
    let f = match a.family {
        FamilyArg::Full => EdgeFamily::full(classes),
        FamilyArg::Bspan => {
            if a.b.is_empty() {
                return Err("--family bspan needs --b".into());
            }
            EdgeFamily::b_spanning(classes, &a.b.iter().copied().collect())
        }
        FamilyArg::Uniform => EdgeFamily::uniform_max(classes, a.m.ok_or("--family uniform needs --m")?),
        FamilyArg::Aligned => EdgeFamily::aligned(classes, a.r.ok_or("--family aligned needs --r")?),
        FamilyArg::Identity => EdgeFamily::identity(classes),
        FamilyArg::Backbone => {
            let p = a.pattern.as_ref().ok_or("--family backbone needs --pattern")?;
            EdgeFamily::backbone(classes, &read(p)?.hypergraph)
        }
        FamilyArg::Explicit => EdgeFamily::explicit(
            classes,
            groups(a.members.as_deref().ok_or("--family explicit needs --members")?, "--members")?,
        ),
    };
    f.map_err(io)
}

fn join(a: args::JoinArgs, out: Out) -> CmdResult {
    let gs = read_all(&a.inputs)?;
    let sizes: Vec<usize> = gs.iter().map(Hypergraph::n).collect();
    if !a.classes.is_empty() && a.classes != sizes {
        return Err(format!("--classes {:?} do not match the input sizes {sizes:?}", a.classes));
    }
    let f = family(&a.family, ClassSequence::consecutive(&sizes))?;
    emit(out, &tensor_join(&gs, &f, &weights(&a.weights)?).map_err(io)?)
}

fn backbone(a: args::BackboneJoinArgs, out: Out) -> CmdResult {
    let gs = read_all(&a.inputs)?;
    let h = read(&a.backbone)?.hypergraph;
    let mut families = Vec::with_capacity(h.edge_count());
    for e in h.edges() {
        let sizes: Vec<usize> = e.vertices.iter().map(|&i| gs.get(i - 1).map_or(0, Hypergraph::n)).collect();
        families.push(family(&a.family, ClassSequence::consecutive(&sizes))?);
    }
    emit(out, &backbone_join(&h, &gs, &families, &weights(&a.weights)?).map_err(io)?)
}

fn spectrum(a: args::SpectrumArgs, out: Out) -> CmdResult {
    let h = read(&a.input)?.hypergraph;
    let kind = kind(a.matrix);
    let direct = match a.method {
        MethodArg::Closed => None,
        _ => Some((
            matrices::direct_spectrum(&h, kind, DEFAULT_TOL).map_err(io)?,
            matrices::exact_charpoly(&h, kind).map_err(io)?,
        )),
    };
    let closed = match a.method {
        MethodArg::Direct => None,
        _ => {
            let partition: Vec<Vec<usize>> = if a.classes.is_empty() {
                (1..=h.n()).map(|v| vec![v]).collect()
            } else {
                ClassSequence::consecutive(&a.classes).classes().to_vec()
            };
            let d = decompose(&h, &partition).map_err(|e| format!("closed form unavailable: {e}"))?;
            let spec = JoinSpec::from_join(&d.constituents, &d.family, &d.weights, kind)
                .map_err(|e| format!("closed form unavailable: {e}"))?;
            let cf = join_charpoly(&spec).map_err(io)?;
            Some((cf.float_roots().map_err(io)?, cf.expand().map_err(io)?, cf.to_string()))
        }
    };
    let agreement = match (&direct, &closed) {
        (Some((ds, dp)), Some((cs, cp, _))) => {
            let dev = ds.max_deviation(cs).map_err(io)?;
            Some((dp == cp && dev <= a.tol, dev))
        }
        _ => None,
    };
    let (spec, poly) = match (&direct, &closed) {
        (Some((s, p)), _) => (s, p),
        (None, Some((s, p, _))) => (s, p),
        (None, None) => unreachable!("at least one method runs"),
    };
    if a.json {
        let doc = json!({
            "input": a.input.display().to_string(),
            "matrix": kind.short_name(),
            "method": format!("{:?}", a.method).to_lowercase(),
            "spectrum": spec.values().iter().map(|&x| sig12(x)).collect::<Vec<_>>(),
            "charpoly": coeff_strings(poly),
            "agreement": agreement.map(|x| x.0),
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(io)?).map_err(io)?;
    } else {
        writeln!(out, "input: {}", a.input.display()).map_err(io)?;
        writeln!(out, "matrix: {kind}").map_err(io)?;
        writeln!(out, "charpoly: {poly}").map_err(io)?;
        if let Some((s, _)) = &direct {
            writeln!(out, "direct: {}", float_list(s.values())).map_err(io)?;
        }
        if let Some((s, _, factored)) = &closed {
            writeln!(out, "closed: {}", float_list(s.values())).map_err(io)?;
            writeln!(out, "factored: {factored}").map_err(io)?;
        }
        if let Some((ok, dev)) = agreement {
            writeln!(out, "agreement: {ok} (max deviation {dev:.3e}, tolerance {:e})", a.tol).map_err(io)?;
        }
    }
    Ok(if agreement.is_some_and(|x| !x.0) { EXIT_FAILED } else { EXIT_OK })
}

fn verify(a: args::VerifyArgs, out: Out) -> CmdResult {
    let (h1, h2) = (read(&a.first)?.hypergraph, read(&a.second)?.hypergraph);
    let r = cospectral::verify(&h1, &h2).map_err(io)?;
    let ok = r.adjacency && r.laplacian && r.normalized != Some(false);
    if a.json {
        let polys: serde_json::Map<String, serde_json::Value> = r
            .charpolys
            .iter()
            .map(|(k, p, q)| {
                (k.short_name().to_string(), json!({"first": coeff_strings(p), "second": coeff_strings(q)}))
            })
            .collect();
        let doc = json!({
            "first": a.first.display().to_string(),
            "second": a.second.display().to_string(),
            "adjacency": r.adjacency,
            "laplacian": r.laplacian,
            "normalized": r.normalized,
            "charpolys": polys,
        });
        writeln!(out, "{}", serde_json::to_string_pretty(&doc).map_err(io)?).map_err(io)?;
    } else {
        out.write_all(report::verify_text(&r).as_bytes()).map_err(io)?;
    }
    Ok(if ok { EXIT_OK } else { EXIT_FAILED })
}

fn write_certificates(certs: &[Certificate], a: &args::CospectralArgs, out: Out) -> CmdResult {
    for (i, c) in certs.iter().enumerate() {
        let name = format!("cospectral-{}.cert", i + 1);
        match &a.out {
            Some(dir) => {
                fs::create_dir_all(dir).map_err(io)?;
                let path = dir.join(&name);
                fs::write(&path, c.to_text()).map_err(io)?;
                writeln!(out, "wrote {}", path.display()).map_err(io)?;
            }
            None => {
                writeln!(out, "# certificate {name}").map_err(io)?;
                out.write_all(c.to_text().as_bytes()).map_err(io)?;
            }
        }
    }
    Ok(if certs.iter().all(|c| c.report.all()) { EXIT_OK } else { EXIT_FAILED })
}

fn cospectral_cmd(a: args::CospectralArgs, out: Out) -> CmdResult {
    let pairs = if a.search {
        let m = a.uniform.ok_or("--search needs --uniform")?;
        let report =
            cospectral::search(&SearchConfig { uniform: m, min_n: m, max_n: a.n, budget: a.budget }).map_err(io)?;
        out.write_all(report.summary().as_bytes()).map_err(io)?;
        report.pairs
    } else {
        let cards: BTreeSet<usize> = match (a.uniform, a.cards.is_empty()) {
            (Some(m), _) => [m].into(),
            (None, false) => a.cards.iter().copied().collect(),
            (None, true) => (2..=a.n).collect(),
        };
        let degrees: Vec<Option<usize>> = match (a.regular, a.degree) {
            (_, Some(r)) => vec![Some(r)],
            (true, None) => {
                let top: usize = cards
                    .iter()
                    .map(|&c| rational::binomial(a.n as i64 - 1, c as i64 - 1))
                    .sum::<num_bigint::BigInt>()
                    .try_into()
                    .map_err(io)?;
                (1..=top).map(Some).collect()
            }
            (false, None) => vec![None],
        };
        let mut hs = Vec::new();
        for d in degrees {
            hs.extend(cospectral::enumerate_with_budget(a.n, &cards, a.uniform, d, a.budget).map_err(io)?);
        }
        writeln!(out, "n={}: {} hypergraphs", a.n, hs.len()).map_err(io)?;
        cospectral::find_cospectral_pairs(&hs).map_err(io)?
    };
    if pairs.is_empty() {
        writeln!(out, "none found at n={}", a.n).map_err(io)?;
        return Ok(EXIT_OK);
    }
    writeln!(out, "{} cospectral pairs", pairs.len()).map_err(io)?;
    let mut certs = Vec::new();
    for p in &pairs {
        if certs.len() == a.max_certificates {
            break;
        }
        if p.first.is_regular().is_some() && p.first.is_regular() == p.second.is_regular() {
            certs.push(cospectral::certify_pair(&p.first, &p.second).map_err(io)?);
        }
    }
    if certs.is_empty() {
        writeln!(out, "no regular pairs to certify").map_err(io)?;
        return Ok(EXIT_OK);
    }
    write_certificates(&certs, &a, out)
}

fn decompose_cmd(a: args::DecomposeArgs, out: Out) -> CmdResult {
    let h = read(&a.input)?.hypergraph;
    let partition = match (&a.partition, a.classes.is_empty()) {
        (Some(p), _) => groups(p, "--partition")?,
        (None, false) => ClassSequence::consecutive(&a.classes).classes().to_vec(),
        (None, true) => return Err("decompose needs --classes or --partition".into()),
    };
    let d = decompose(&h, &partition).map_err(io)?;
    for (i, (g, part)) in d.constituents.iter().zip(d.partition()).enumerate() {
        writeln!(out, "# constituent {}: vertices {}", i + 1, report::join_nums(part)).map_err(io)?;
        out.write_all(serialize_hgr(g, &WeightTable::ones()).as_bytes()).map_err(io)?;
    }
    writeln!(out, "# cross edges: {}", d.family.len()).map_err(io)?;
    for m in d.family.members() {
        writeln!(out, "member {}", report::join_nums(m)).map_err(io)?;
    }
    for (c, w) in d.weights.explicit() {
        writeln!(out, "wc {c} {}", rational::format(w)).map_err(io)?;
    }
    let same = d.reassemble().map_err(io)? == h;
    writeln!(out, "reassembled: {}", if same { "identical" } else { "different" }).map_err(io)?;
    Ok(if same { EXIT_OK } else { EXIT_FAILED })
}
