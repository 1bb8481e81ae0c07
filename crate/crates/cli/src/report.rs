use std::fmt::Write as _;

use tenjoin::cospectral::CospectralReport;
use tenjoin::eigen::RationalPoly;
use tenjoin::rational;

/// `x` rounded to 12 significant digits, with `-0` folded into `0`.
pub fn sig12(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return if x.is_finite() { 0.0 } else { x };
    }
    let y: f64 = format!("{x:.11e}").parse().unwrap_or(x);
    if y == 0.0 {
        0.0
    } else {
        y
    }
}

pub fn format_float(x: f64) -> String {
    let y = sig12(x);
    if y == 0.0 || (1e-4..1e15).contains(&y.abs()) {
        y.to_string()
    } else {
        format!("{y:e}")
    }
}

pub fn float_list(xs: &[f64]) -> String {
    xs.iter().map(|&x| format_float(x)).collect::<Vec<_>>().join(" ")
}

/// Coefficients from the constant term up, as reduced `p/q` strings.
pub fn coeff_strings(p: &RationalPoly) -> Vec<String> {
    p.coeffs().iter().map(rational::format).collect()
}

pub fn join_nums(xs: &[usize]) -> String {
    xs.iter().map(usize::to_string).collect::<Vec<_>>().join(" ")
}

pub fn verify_text(r: &CospectralReport) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "adjacency: {}", r.adjacency);
    let _ = writeln!(out, "laplacian: {}", r.laplacian);
    let _ = match r.normalized {
        Some(b) => writeln!(out, "normalized: {b}"),
        None => writeln!(out, "normalized: n/a (isolated vertex)"),
    };
    for (kind, p, q) in &r.charpolys {
        if p == q {
            let _ = writeln!(out, "{kind} charpoly: {p}");
        } else {
            let _ = writeln!(out, "{kind} charpoly: {p} | {q}");
        }
    }
    out
}
