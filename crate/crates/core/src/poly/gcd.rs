//! Heuristic polynomial GCD (evaluate at a large integer, take the integer
//! GCD, lift back by ξ-adic expansion, confirm by trial division).
//!
//! The result is always a common divisor; it is the greatest one whenever
//! the heuristic succeeds. Inputs in more than [`MAX_VARS`] variables skip
//! the heuristic and only share their monomial content, since the integers
//! grow geometrically with the variable count.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use super::{Monomial, Poly};
use crate::rational::Rational;

const MAX_VARS: usize = 3;
const ATTEMPTS: usize = 6;

/// A common divisor of `a` and `b` with coprime integer coefficients and
/// positive leading coefficient. `gcd(0, 0) = 0`.
pub fn gcd(a: &Poly, b: &Poly) -> Poly {
    let n = a.nvars();
    if a.is_zero() {
        return b.primitive().1;
    }
    if b.is_zero() {
        return a.primitive().1;
    }
    let mono = a.monomial_content().gcd(&b.monomial_content());
    let (_, a) = strip(a);
    let (_, b) = strip(b);
    let mono_poly = Poly::monomial(n, mono, Rational::one());
    let (_, pa) = a.primitive();
    let (_, pb) = b.primitive();
    if pa.is_constant() || pb.is_constant() {
        return mono_poly;
    }
    if pa == pb {
        return &mono_poly * &pa;
    }
    let mut vars = pa.support();
    for v in pb.support() {
        if !vars.contains(&v) {
            vars.push(v);
        }
    }
    vars.sort_unstable();
    if vars.len() > MAX_VARS {
        return mono_poly;
    }
    match heuristic(&pa, &pb, &vars) {
        Some(g) => &mono_poly * &g.primitive().1,
        None => mono_poly,
    }
}

fn strip(p: &Poly) -> (Monomial, Poly) {
    let m = p.monomial_content();
    let q = p.exact_divide(&Poly::monomial(p.nvars(), m.clone(), Rational::one())).expect("content divides");
    (m, q)
}

fn int_content(p: &Poly) -> BigInt {
    p.terms().iter().fold(BigInt::zero(), |acc, (_, c)| acc.gcd(c.numer()))
}

fn heuristic(f: &Poly, g: &Poly, vars: &[usize]) -> Option<Poly> {
    let n = f.nvars();
    let cf = int_content(f);
    let cg = int_content(g);
    let common = cf.gcd(&cg);
    let Some((&v, rest)) = vars.split_last() else {
        return Some(Poly::constant(n, Rational::from_integer(common)));
    };
    let f = f.scale(&Rational::from_integer(cf).recip());
    let g = g.scale(&Rational::from_integer(cg).recip());

    let bound: BigInt = f.height().min(g.height()) * 2 + 29;
    let mut xi = bound.clone().min(bound.sqrt() * 99).max(BigInt::from(2));
    for _ in 0..ATTEMPTS {
        let point = Rational::from_integer(xi.clone());
        let ff = f.assign(&[(v, point.clone())]).ok()?;
        let gg = g.assign(&[(v, point)]).ok()?;
        if !ff.is_zero() && !gg.is_zero() {
            if let Some(h) = heuristic(&ff, &gg, rest) {
                let cand = interpolate(&h, &xi, v);
                if !cand.is_zero() {
                    let (_, cand) = cand.primitive();
                    if f.exact_divide(&cand).is_ok() && g.exact_divide(&cand).is_ok() {
                        return Some(cand.scale(&Rational::from_integer(common)));
                    }
                }
            }
        }
        xi = &xi * 73794u32 * xi.sqrt().sqrt() / 27011u32;
    }
    None
}

/// Symmetric ξ-adic expansion of an integer polynomial into powers of `var`.
fn interpolate(h: &Poly, xi: &BigInt, var: usize) -> Poly {
    let n = h.nvars();
    let half = xi / 2;
    let mut h = h.clone();
    let mut out = Poly::zero(n);
    let mut i = 0u16;
    while !h.is_zero() {
        let digit = Poly::from_terms(
            n,
            h.terms()
                .iter()
                .map(|(m, c)| {
                    let mut r = c.numer().mod_floor(xi);
                    if r > half {
                        r -= xi;
                    }
                    (m.clone(), Rational::from_integer(r))
                })
                .collect::<Vec<_>>(),
        );
        out = &out + &digit.mul_monomial(&Monomial::var(n, var, i));
        h = (&h - &digit).scale(&Rational::new(BigInt::one(), xi.clone()));
        i += 1;
        if i > 4096 {
            break;
        }
    }
    if out.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
        out = -out;
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn recovers_planted_factor() {
        let (a, b) = (v(2, 0), v(2, 1));
        let one = Poly::one(2);
        let g = &(&a - &b) * &(&(&a * &b) + &one);
        let p = &g * &(&a.pow(3) + &Poly::int(2, 7));
        let q = &g * &(&b.pow(2) - &a);
        assert_eq!(gcd(&p, &q), g.primitive().1);
    }

    #[test]
    fn coprime_gives_one() {
        let (a, b) = (v(2, 0), v(2, 1));
        let p = &a.pow(2) + &b;
        let q = &b.pow(2) + &a;
        assert_eq!(gcd(&p, &q), Poly::one(2));
    }

    #[test]
    fn monomial_content_is_shared() {
        let (a, b) = (v(2, 0), v(2, 1));
        let p = &a.pow(2) * &b;
        let q = &(&a * &b.pow(3)) + &(&a * &b);
        assert_eq!(gcd(&p, &q), &a * &b);
    }
}
