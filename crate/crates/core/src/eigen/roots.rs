use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::poly::RationalPoly;
use crate::rational::{self, Rational};

/// Square-free decomposition (Yun): returns `(f_i, i)` with `p = c * prod f_i^i`.
pub fn square_free(p: &RationalPoly) -> Vec<(RationalPoly, usize)> {
    let mut out = Vec::new();
    if p.degree() == 0 {
        return out;
    }
    let f = p.monic();
    let df = f.derivative();
    let mut a = f.gcd(&df);
    let mut b = f.div_rem(&a).0;
    let mut c = df.div_rem(&a).0;
    let mut d = &c - &b.derivative();
    let mut i = 1;
    while b.degree() > 0 {
        a = b.gcd(&d);
        b = b.div_rem(&a).0;
        c = d.div_rem(&a).0;
        if a.degree() > 0 {
            out.push((a.clone(), i));
        }
        d = &c - &b.derivative();
        i += 1;
    }
    out
}

/// Real roots with multiplicity, ascending. Complex roots are skipped.
pub fn real_roots(p: &RationalPoly) -> Vec<f64> {
    let mut out = Vec::new();
    for (f, mult) in square_free(p) {
        for r in simple_real_roots(&f) {
            out.extend(std::iter::repeat_n(r, mult));
        }
    }
    out.sort_by(f64::total_cmp);
    out
}

/// Integer, content-free multiple with positive leading coefficient.
fn primitive(p: &RationalPoly) -> Vec<BigInt> {
    let den = rational::common_denominator(p.coeffs());
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rational::from_integer(den.clone())).to_integer()).collect();
    let g = ints.iter().fold(BigInt::zero(), |g, c| g.gcd(c));
    let sign = if ints.last().is_some_and(Signed::is_negative) { -BigInt::one() } else { BigInt::one() };
    if g.is_zero() {
        return ints;
    }
    ints.into_iter().map(|c| c / &g * &sign).collect()
}

fn to_poly(c: &[BigInt]) -> RationalPoly {
    RationalPoly::new(c.iter().map(rational::from_big).collect())
}

fn sign_at(c: &[BigInt], x: &Rational) -> i8 {
    // sign of b^deg * p(a/b), b > 0
    let (a, b) = (x.numer(), x.denom());
    let mut acc = BigInt::zero();
    let mut bpow = BigInt::one();
    for coef in c.iter().rev() {
        acc = acc * a + coef * &bpow;
        bpow *= b;
    }
    match acc.sign() {
        num_bigint::Sign::Minus => -1,
        num_bigint::Sign::NoSign => 0,
        num_bigint::Sign::Plus => 1,
    }
}

fn sturm_chain(f: &RationalPoly) -> Vec<Vec<BigInt>> {
    let mut chain = vec![primitive(f), primitive(&f.derivative())];
    loop {
        let n = chain.len();
        let (a, b) = (to_poly(&chain[n - 2]), to_poly(&chain[n - 1]));
        if b.degree() == 0 {
            break;
        }
        let r = a.div_rem(&b).1;
        if r.is_zero() {
            break;
        }
        // positive multiple of -r
        let flip = r.leading().is_positive();
        chain.push(primitive(&r).into_iter().map(|c| if flip { -c } else { c }).collect());
    }
    chain
}

fn variations(chain: &[Vec<BigInt>], x: &Rational) -> usize {
    let mut last = 0i8;
    let mut count = 0;
    for p in chain {
        let s = sign_at(p, x);
        if s != 0 {
            if last != 0 && s != last {
                count += 1;
            }
            last = s;
        }
    }
    count
}

fn simple_real_roots(f: &RationalPoly) -> Vec<f64> {
    if f.degree() == 1 {
        return vec![rational::to_f64(&(-f.coeff(0) / f.coeff(1)))];
    }
    let fm = f.monic();
    let bound =
        fm.coeffs().iter().take(fm.degree()).map(|c| c.abs()).fold(Rational::zero(), |a, c| if c > a { c } else { a })
            + Rational::one();
    let mut b = Rational::one();
    while b <= bound {
        b *= rational::int(2);
    }
    let chain = sturm_chain(f);
    let fi = &chain[0];
    let mut roots = Vec::new();
    let mut stack = vec![(-b.clone(), b)];
    while let Some((lo, hi)) = stack.pop() {
        let count = variations(&chain, &lo) - variations(&chain, &hi);
        if count == 0 {
            continue;
        }
        if count == 1 {
            roots.push(refine(fi, lo, hi));
            continue;
        }
        let mid = (&lo + &hi) / rational::int(2);
        stack.push((lo, mid.clone()));
        stack.push((mid, hi));
    }
    roots
}

/// Bisects `(lo, hi]`, known to hold exactly one simple root of `f`.
fn refine(f: &[BigInt], mut lo: Rational, mut hi: Rational) -> f64 {
    let s_hi = sign_at(f, &hi);
    if s_hi == 0 {
        return rational::to_f64(&hi);
    }
    for _ in 0..200 {
        let width = rational::to_f64(&(&hi - &lo));
        let mag = rational::to_f64(&hi).abs().max(1.0);
        if width <= 1e-15 * mag {
            break;
        }
        let mid = (&lo + &hi) / rational::int(2);
        let s = sign_at(f, &mid);
        if s == 0 {
            return rational::to_f64(&mid);
        }
        if s == s_hi {
            hi = mid;
        } else {
            lo = mid;
        }
    }
    rational::to_f64(&((lo + hi) / rational::int(2)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{int, ratio};

    #[test]
    fn yun_separates_multiplicities() {
        let p = &RationalPoly::linear(&int(1)).pow(3) * &RationalPoly::linear(&int(-2));
        let sf = square_free(&p);
        assert_eq!(sf, vec![(RationalPoly::linear(&int(-2)), 1), (RationalPoly::linear(&int(1)), 3)]);
    }

    #[test]
    fn roots_with_multiplicity() {
        let p = &RationalPoly::linear(&ratio(6, 5)).pow(5) * &RationalPoly::linear(&int(0));
        let r = real_roots(&p);
        assert_eq!(r.len(), 6);
        assert!(r[0].abs() < 1e-14);
        assert!(r[1..].iter().all(|x| (x - 1.2).abs() < 1e-13));
    }

    #[test]
    fn irrational_roots() {
        // x^2 - 2
        let r = real_roots(&RationalPoly::from_i64(&[-2, 0, 1]));
        assert!((r[0] + 2f64.sqrt()).abs() < 1e-13 && (r[1] - 2f64.sqrt()).abs() < 1e-13);
        // x^2 + 1 has none
        assert!(real_roots(&RationalPoly::from_i64(&[1, 0, 1])).is_empty());
    }
}
