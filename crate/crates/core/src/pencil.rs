//! The pencil construction on six variables.
//!
//! A form `G` vanishing at both `u = (a,-a,b,-b,1,-1)` and
//! `v = (-1,c,-c,d,-d,1)` is restricted to the line `x = u t + v`. The
//! restriction has no constant term and no top term, so after dividing by
//! `t` the leading coefficients are killed by choosing `c` and `d`, and the
//! remaining linear equation fixes `t`.
//!
//! Zero target (`G(x) = 0`, base degree 5): kill `S1` (linear in `c, d`)
//! and `S2` (quadratic, with the known root `c = d = 1`), then
//! `t = -S4 / S3`. Value target (`G(x) = q`, base degree 4): kill the two
//! leading coefficients and solve `K1 t = q`. When fewer coefficients need
//! killing, one unknown is left free.

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::poly::{gcd, Monomial, Poly};
use crate::rational::Rational;
use crate::solution::ParametricSolution;
use crate::symfunc::{self, primitive_point, SymmetricForm};
use crate::vars::{Ambient, VarKind, VarTag};
use crate::verify::{certify, CertifyOptions, Target};

/// Positions in the coefficient ambient `[a, b, c, d, extras…]`.
pub const A: usize = 0;
pub const B: usize = 1;
pub const C: usize = 2;
pub const D: usize = 3;

/// Pencil ambient is `[t, a, b, c, d, extras…]`; the form variables of `G`
/// are its first six variables, any further ones are carried through.
#[derive(Debug, Clone)]
pub struct PencilConfig {
    ambient: Ambient,
    u: Vec<Poly>,
    v: Vec<Poly>,
}

impl PencilConfig {
    pub fn new(extras: &[VarTag]) -> Result<Self> {
        let mut tags = vec![
            VarTag::new(VarKind::Pencil, 0),
            VarTag::new(VarKind::Point, 0),
            VarTag::new(VarKind::Point, 1),
            VarTag::new(VarKind::Unknown, 0),
            VarTag::new(VarKind::Unknown, 1),
        ];
        tags.extend_from_slice(extras);
        let ambient = Ambient::new(tags);
        let n = ambient.len();
        let var = |i| Poly::var(n, i);
        let u = primitive_point(6, &[var(1 + A), var(1 + B)], None)?.entries;
        let v = primitive_point(6, &[var(1 + C), var(1 + D)], Some(&[5, 0, 1, 2, 3, 4]))?.entries;
        Ok(PencilConfig { ambient, u, v })
    }

    pub fn ambient(&self) -> &Ambient {
        &self.ambient
    }

    pub fn extras(&self) -> usize {
        self.ambient.len() - 5
    }

    pub fn u(&self) -> &[Poly] {
        &self.u
    }

    pub fn v(&self) -> &[Poly] {
        &self.v
    }

    /// `[a, b, c, d, extras…]`.
    pub fn coeff_ambient(&self) -> Ambient {
        Ambient::new(self.ambient.tags()[1..].to_vec())
    }
}

fn form_degree(g: &Poly) -> u32 {
    g.degree_in(&[0, 1, 2, 3, 4, 5]).unwrap_or(0)
}

/// `G(u t + v)` in the pencil ambient.
pub fn build_pencil(g: &Poly, config: &PencilConfig) -> Result<Poly> {
    let n = config.ambient.len();
    if g.nvars() != 6 + config.extras() {
        return Err(Error::NvarsMismatch { lhs: g.nvars(), rhs: 6 + config.extras() });
    }
    let t = Poly::var(n, 0);
    let mut images: Vec<Poly> = (0..6).map(|i| &(&config.u[i] * &t) + &config.v[i]).collect();
    images.extend((0..config.extras()).map(|k| Poly::var(n, 5 + k)));
    let pencil = g.substitute_all(&images)?;
    let deg = form_degree(g);
    let by_t = pencil.coeffs_in_var(0)?;
    if by_t.first().is_some_and(|c| !c.is_zero()) {
        return Err(Error::EndpointNotZero { power: 0 });
    }
    if deg > 0 && by_t.get(deg as usize).is_some_and(|c| !c.is_zero()) {
        return Err(Error::EndpointNotZero { power: deg });
    }
    Ok(pencil)
}

/// Coefficients of `pencil / t`, highest power first: `s[0] = S1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CubicCoeffs {
    /// Over `[a, b, c, d, extras…]`.
    pub s: Vec<Poly>,
}

impl CubicCoeffs {
    /// `S_i`, one-based.
    pub fn get(&self, i: usize) -> &Poly {
        &self.s[i - 1]
    }

    /// Coefficient of `t^k` in `pencil / t`.
    pub fn of_power(&self, k: usize) -> Poly {
        let top = self.s.len();
        if k >= top {
            Poly::zero(self.s[0].nvars())
        } else {
            self.s[top - 1 - k].clone()
        }
    }
}

/// Strips one factor of `t` and splits by powers of `t`; `degree` is the
/// form degree of the base (`S1` is the coefficient of `t^{degree-2}`).
pub fn extract_cubic(pencil: &Poly, degree: u32) -> Result<CubicCoeffs> {
    let n = pencil.nvars();
    let reduced = pencil.exact_divide(&Poly::var(n, 0))?;
    let by_t = reduced.coeffs_in_var(0)?;
    let map: Vec<usize> = (0..n).map(|i| i.saturating_sub(1)).collect();
    let top = degree.saturating_sub(1) as usize;
    let s = (0..top)
        .rev()
        .map(|k| by_t.get(k).map(|c| c.remap(n - 1, &map)).unwrap_or_else(|| Poly::zero(n - 1)))
        .collect();
    Ok(CubicCoeffs { s })
}

/// Values of the unknowns over a common denominator, in the coefficient
/// ambient: `c = c_num / den`, `d = d_num / den`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CdSolution {
    /// The unknown solved from the linear constraint (`C` unless its
    /// coefficient vanishes identically).
    pub solved_for: usize,
    /// Solution of the linear constraint: `solved_for = num / den`, where
    /// `num` involves the other unknown.
    pub linear: (Poly, Poly),
    pub c_num: Poly,
    pub d_num: Poly,
    pub den: Poly,
    /// Unknown left free (only one constraint imposed).
    pub free: Option<usize>,
    /// Polynomials whose vanishing invalidates the construction.
    pub locus: Vec<Poly>,
}

fn other(u: usize) -> usize {
    if u == C {
        D
    } else {
        C
    }
}

type Buckets = Vec<((u32, u32), Vec<(Monomial, Rational)>)>;

/// Splits `p` by its exponents in `(x, y)`: `p = Σ coef · x^i y^j`.
fn split_bidegree(p: &Poly, x: usize, y: usize) -> Vec<((u32, u32), Poly)> {
    let n = p.nvars();
    let mut buckets: Buckets = Vec::new();
    for (m, c) in p.terms() {
        let key = (m.exp(x), m.exp(y));
        let stripped = m.with_exp(x, 0).with_exp(y, 0);
        match buckets.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push((stripped, c.clone())),
            None => buckets.push((key, vec![(stripped, c.clone())])),
        }
    }
    buckets.into_iter().map(|(k, v)| (k, Poly::from_terms(n, v))).collect()
}

/// `p(x = xn/den, y = yn/den) · den^e` with `e` the total degree of `p`
/// in `(x, y)`; returns the numerator and `e`. Substitution is
/// simultaneous, so `xn`, `yn` may themselves involve `x` or `y`.
pub fn eval_homogenized(p: &Poly, x: usize, y: usize, xn: &Poly, yn: &Poly, den: &Poly) -> (Poly, u32) {
    let n = p.nvars();
    let parts = split_bidegree(p, x, y);
    let e = parts.iter().map(|((i, j), _)| i + j).max().unwrap_or(0);
    let powers = |b: &Poly| {
        let mut v = vec![Poly::one(n)];
        for k in 0..e as usize {
            let next = &v[k] * b;
            v.push(next);
        }
        v
    };
    let (xp, yp, dp) = (powers(xn), powers(yn), powers(den));
    let mut out = Poly::zero(n);
    for ((i, j), coef) in parts {
        let term = &(&(&coef * &xp[i as usize]) * &yp[j as usize]) * &dp[(e - i - j) as usize];
        out = &out + &term;
    }
    (out, e)
}

fn linear_parts(s1: &Poly) -> Result<(Poly, Poly, Poly)> {
    let deg = s1.degree_in(&[C, D]).unwrap_or(0);
    if deg > 1 {
        return Err(Error::NotLinear { degree: deg });
    }
    let alpha = s1.component_in(&[C, D], 1).coeffs_in_var(C)?.get(1).cloned().unwrap_or_else(|| Poly::zero(s1.nvars()));
    let beta = s1.component_in(&[C, D], 1).coeffs_in_var(D)?.get(1).cloned().unwrap_or_else(|| Poly::zero(s1.nvars()));
    let gamma = s1.component_in(&[C, D], 0);
    Ok((alpha, beta, gamma))
}

/// Divides every entry by a common factor found by the heuristic gcd.
fn cancel_common(polys: &mut [&mut Poly]) {
    let mut g: Option<Poly> = None;
    for p in polys.iter() {
        if p.is_zero() {
            continue;
        }
        g = Some(match g {
            None => p.primitive().1,
            Some(g) => gcd(&g, p),
        });
        if g.as_ref().is_some_and(|g| g.is_constant()) {
            return;
        }
    }
    if let Some(g) = g {
        if !g.is_constant() {
            for p in polys.iter_mut() {
                **p = p.exact_divide(&g).expect("common factor divides");
            }
        }
    }
}

fn normalized(p: &Poly) -> Poly {
    p.primitive().1
}

fn push_locus(locus: &mut Vec<Poly>, p: &Poly) {
    let p = normalized(p);
    if !p.is_constant() && !locus.contains(&p) {
        locus.push(p);
    }
}

/// Imposes `constraints` (one linear, optionally one quadratic with the
/// known root `(1, 1)`) on the unknowns `c, d`.
pub fn solve_constraints(constraints: &[Poly]) -> Result<CdSolution> {
    if constraints.is_empty() || constraints.len() > 2 {
        return Err(Error::TooManyConstraints { count: constraints.len() });
    }
    let n = constraints[0].nvars();
    let (mut alpha, mut beta, gamma) = linear_parts(&constraints[0])?;
    let mut p = C;
    if alpha.is_zero() {
        if beta.is_zero() {
            return Err(Error::DegenerateLinear);
        }
        std::mem::swap(&mut alpha, &mut beta);
        p = D;
    }
    let s = other(p);
    let mut locus = Vec::new();
    push_locus(&mut locus, &alpha);
    // p = -(beta s + gamma) / alpha
    let s_var = Poly::var(n, s);
    let linear = {
        let (content, a) = alpha.primitive();
        let num = -&(&(&beta * &s_var) + &gamma).scale(&content.recip());
        (num, a)
    };
    let (p_num, s_num, den, free) = if constraints.len() == 1 {
        let p_num = -&(&(&beta * &s_var) + &gamma);
        (p_num, &alpha * &s_var, alpha.clone(), Some(s))
    } else {
        let s2 = &constraints[1];
        let deg = s2.degree_in(&[C, D]).unwrap_or(0);
        if deg > 2 {
            return Err(Error::NotQuadratic { degree: deg });
        }
        let p_sub = -&(&(&beta * &s_var) + &gamma);
        let s_h = &alpha * &s_var;
        let (x_num, y_num) = if p == C { (p_sub, s_h) } else { (s_h, p_sub) };
        // alpha^e · S2(p(s), s), a polynomial in s with the same roots.
        let (q, _) = eval_homogenized(s2, C, D, &x_num, &y_num, &alpha);
        let qs = q.coeffs_in_var(s)?;
        if qs.len() > 3 {
            return Err(Error::NotQuadratic { degree: qs.len() as u32 - 1 });
        }
        let at = |k: usize| qs.get(k).cloned().unwrap_or_else(|| Poly::zero(n));
        let (q0, q1, q2) = (at(0), at(1), at(2));
        if !(&(&q0 + &q1) + &q2).is_zero() {
            return Err(Error::KnownRootMissing);
        }
        // (s - 1)(l1 s + l0) = l1 s^2 + (l0 - l1) s - l0
        let mut l1 = q2;
        let mut l0 = -&q0;
        if l1.is_zero() {
            return Err(Error::DegenerateLinear);
        }
        cancel_common(&mut [&mut l1, &mut l0]);
        push_locus(&mut locus, &l1);
        // s = -l0 / l1, p = (beta l0 - gamma l1) / (alpha l1)
        let mut p_num = &(&beta * &l0) - &(&gamma * &l1);
        let mut s_num = -&(&alpha * &l0);
        let mut den = &alpha * &l1;
        cancel_common(&mut [&mut p_num, &mut s_num, &mut den]);
        (p_num, s_num, den, None)
    };
    let (c_num, d_num) = if p == C { (p_num, s_num) } else { (s_num, p_num) };
    Ok(CdSolution { solved_for: p, linear, c_num, d_num, den, free, locus })
}

/// The standard elimination: `S1 = S2 = 0`.
pub fn solve_cd(coeffs: &CubicCoeffs) -> Result<CdSolution> {
    if coeffs.s.len() < 2 {
        return Err(Error::TooManyConstraints { count: 2 });
    }
    solve_constraints(&coeffs.s[..2])
}

/// Everything the pencil stage produced.
#[derive(Debug, Clone)]
pub struct PencilOutcome {
    /// `[a, b, (free unknown), extras…]`.
    pub params: Ambient,
    /// Six numerators over the common denominator `den`, in `params`.
    pub nums: Vec<Poly>,
    pub den: Poly,
    pub t_num: Poly,
    pub t_den: Poly,
    pub coeffs: CubicCoeffs,
    pub cd: CdSolution,
    pub locus: Vec<Poly>,
}

impl PencilOutcome {
    pub fn param_names(&self) -> Vec<String> {
        self.params.names()
    }
}

/// The pencil, its coefficients, and the coefficients that must vanish
/// (highest power of `t` first).
fn pencil_constraints(g: &Poly, extras: &[VarTag], q: &Rational) -> Result<(PencilConfig, CubicCoeffs, Vec<Poly>)> {
    let config = PencilConfig::new(extras)?;
    let degree = form_degree(g);
    let pencil = build_pencil(g, &config)?;
    let coeffs = extract_cubic(&pencil, degree)?;
    // Highest nonzero coefficient of pencil / t, as a power of t.
    let Some(h) = (0..coeffs.s.len()).rev().find(|&k| !coeffs.of_power(k).is_zero()) else {
        return Err(Error::DegenerateT("the pencil vanishes identically".into()));
    };
    // Powers kept: zero target keeps t^1 and t^0; value target keeps t^0.
    let lowest_killed = if q.is_zero() { 2 } else { 1 };
    if h < lowest_killed {
        return Err(Error::DegenerateT(format!("no coefficient left to solve for t (highest power {h})")));
    }
    let constraints: Vec<Poly> = (lowest_killed..=h).rev().map(|k| coeffs.of_power(k)).collect();
    if constraints.len() > 2 {
        return Err(Error::TooManyConstraints { count: constraints.len() });
    }
    Ok((config, coeffs, constraints))
}

/// The leading coefficient of the linear constraint, over `[a, b, extras…]`:
/// the first divisor of the elimination, cheap to obtain symbolically.
pub fn linear_divisor(g: &Poly, extras: &[VarTag], q: &Rational) -> Result<Poly> {
    let (config, _, constraints) = pencil_constraints(g, extras, q)?;
    let (alpha, beta, _) = linear_parts(&constraints[0])?;
    let lead = if alpha.is_zero() { beta } else { alpha };
    let n = config.ambient.len() - 1;
    let map: Vec<usize> = (0..n).map(|i| if i < C { i } else { i.saturating_sub(2) }).collect();
    Ok(normalized(&lead).remap(n - 2, &map))
}

/// Solves `G(x) = q` on the pencil. `g` lives in `[y1..y6, extras…]`.
pub fn pencil_solve(g: &Poly, extras: &[VarTag], q: &Rational) -> Result<PencilOutcome> {
    let (config, coeffs, constraints) = pencil_constraints(g, extras, q)?;
    let n = config.ambient.len() - 1;
    let zero_target = q.is_zero();
    let cd = solve_constraints(&constraints)?;

    let at = |k: usize| eval_homogenized(&coeffs.of_power(k), C, D, &cd.c_num, &cd.d_num, &cd.den);

    let (mut t_num, mut t_den) = if zero_target {
        let (n1, e1) = at(1);
        let (n2, e2) = at(0);
        // t = -K0 / K1 with K evaluated at the fractions.
        if n1.is_zero() {
            return Err(Error::DegenerateT("linear coefficient vanishes after substitution".into()));
        }
        if e1 >= e2 {
            (-&(&n2 * &cd.den.pow(e1 - e2)), n1)
        } else {
            (-n2, &n1 * &cd.den.pow(e2 - e1))
        }
    } else {
        let (n0, e0) = at(0);
        if n0.is_zero() {
            return Err(Error::DegenerateT("constant coefficient vanishes after substitution".into()));
        }
        (cd.den.pow(e0).scale(q), n0)
    };
    let mut locus = cd.locus.clone();
    push_locus(&mut locus, &t_den);
    cancel_common(&mut [&mut t_num, &mut t_den]);

    // x_i = u_i t + v_i with v_i = vn_i / den.
    let m = config.ambient.len();
    let drop_t: Vec<usize> = (0..m).map(|i| i.saturating_sub(1)).collect();
    let u: Vec<Poly> = config.u.iter().map(|p| p.remap(n, &drop_t)).collect();
    let vn: Vec<Poly> = [-&cd.den, cd.c_num.clone(), -&cd.c_num, cd.d_num.clone(), -&cd.d_num, cd.den.clone()].to_vec();
    let (mut nums, mut den): (Vec<Poly>, Poly) = match t_den.exact_divide(&cd.den) {
        Ok(rest) if !cd.den.is_constant() => {
            let nums = (0..6).map(|i| &(&u[i] * &t_num) + &(&vn[i] * &rest)).collect();
            (nums, t_den.clone())
        }
        _ => {
            let nums = (0..6).map(|i| &(&(&u[i] * &t_num) * &cd.den) + &(&vn[i] * &t_den)).collect();
            (nums, &t_den * &cd.den)
        }
    };
    {
        let mut all: Vec<&mut Poly> = nums.iter_mut().collect();
        all.push(&mut den);
        cancel_common(&mut all);
    }
    let (content, _) = den.primitive();
    let inv = content.recip();
    den = den.scale(&inv);
    nums = nums.iter().map(|p| p.scale(&inv)).collect();

    // Coefficient ambient -> parameter ambient.
    let coeff_amb = config.coeff_ambient();
    let keep: Vec<usize> = (0..n).filter(|&i| !(i == C || i == D) || cd.free == Some(i)).collect();
    let mut map = vec![usize::MAX; n];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = new;
    }
    let solved: Vec<usize> = [C, D].into_iter().filter(|&i| cd.free != Some(i)).collect();
    let to_params = |p: &Poly| -> Poly {
        debug_assert!(p.degree_in(&solved).unwrap_or(0) == 0);
        p.remap(keep.len(), &map)
    };
    let params = Ambient::new(keep.iter().map(|&i| coeff_amb.tags()[i]).collect());
    Ok(PencilOutcome {
        params,
        nums: nums.iter().map(to_params).collect(),
        den: to_params(&den),
        t_num: to_params(&t_num),
        t_den: to_params(&t_den),
        locus: locus.iter().map(to_params).collect(),
        coeffs,
        cd,
    })
}

/// True when the tuple is identically zero or splits into `(X, -X)` pairs.
pub fn is_degenerate(tuple: &[Poly]) -> bool {
    let nonzero: Vec<&Poly> = tuple.iter().filter(|p| !p.is_zero()).collect();
    if nonzero.is_empty() {
        return true;
    }
    let mut used = vec![false; nonzero.len()];
    for i in 0..nonzero.len() {
        if used[i] {
            continue;
        }
        let neg = -nonzero[i];
        match (i + 1..nonzero.len()).find(|&j| !used[j] && *nonzero[j] == neg) {
            Some(j) => {
                used[i] = true;
                used[j] = true;
            }
            None => return false,
        }
    }
    true
}

/// Turns a zero-target outcome into a polynomial tuple: the denominator
/// is dropped (homogeneity) and the monomial and numeric content removed.
pub fn homogeneous_tuple(nums: Vec<Poly>) -> Vec<Poly> {
    let nums = crate::poly::strip_monomial_content(nums);
    let content = nums.iter().filter(|p| !p.is_zero()).map(|p| p.primitive().0).reduce(|a, b| {
        let num = num_integer::Integer::gcd(a.numer(), b.numer());
        let den = num_integer::Integer::lcm(a.denom(), b.denom());
        Rational::new(num, den)
    });
    match content {
        Some(c) if !c.is_one() && !c.is_zero() => nums.iter().map(|p| p.scale(&c.recip())).collect(),
        _ => nums,
    }
}

/// `A1 p5 + A2 p3 p2` in six variables.
pub fn canonical_quintic(a1: &Rational, a2: &Rational) -> Poly {
    let p = |k| symfunc::power_sum(k, 6);
    &p(5).scale(a1) + &(&p(3) * &p(2)).scale(a2)
}

/// Two-parameter solution of `f = 0` for a symmetric quintic in six
/// variables, certified against `f` itself.
pub fn solve_quintic(f: &SymmetricForm, opts: &CertifyOptions) -> Result<ParametricSolution> {
    let (a1, a2) = symfunc::quintic_canonical(f)?;
    let params = vec!["a".to_string(), "b".to_string()];
    if a1.is_zero() && a2.is_zero() {
        let (a, b) = (Poly::var(2, 0), Poly::var(2, 1));
        let point = primitive_point(6, &[a, b], None)?;
        let mut sol = ParametricSolution {
            nvars: 6,
            params,
            solutions: point.entries,
            denominator: None,
            excluded_locus: vec![],
            certificate: None,
            zero_sum: true,
        };
        sol.certificate = Some(certify(f.poly(), &sol, &Target::Zero, opts)?);
        return Ok(sol);
    }
    let g = canonical_quintic(&a1, &a2);
    let out = pencil_solve(&g, &[], &Rational::zero())?;
    let solutions = homogeneous_tuple(out.nums);
    if is_degenerate(&solutions) {
        return Err(Error::DegenerateSolution);
    }
    let mut sol = ParametricSolution {
        nvars: 6,
        params: out.params.names(),
        solutions,
        denominator: None,
        excluded_locus: out.locus,
        certificate: None,
        zero_sum: true,
    };
    sol.certificate = Some(certify(f.poly(), &sol, &Target::Zero, opts)?);
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn diagonal() -> Poly {
        symfunc::power_sum(5, 6)
    }

    fn coeff_vars() -> (Poly, Poly, Poly, Poly) {
        (Poly::var(4, A), Poly::var(4, B), Poly::var(4, C), Poly::var(4, D))
    }

    #[test]
    fn diagonal_endpoints_vanish() {
        let cfg = PencilConfig::new(&[]).unwrap();
        let p = build_pencil(&diagonal(), &cfg).unwrap();
        let by_t = p.coeffs_in_var(0).unwrap();
        assert!(by_t[0].is_zero());
        assert!(by_t.len() <= 5);
        let at_one = p.assign(&[(1 + C, int(1)), (1 + D, int(1))]).unwrap();
        assert!(at_one.is_zero());
    }

    #[test]
    fn single_term_rejected() {
        let cfg = PencilConfig::new(&[]).unwrap();
        let x1 = Poly::var(6, 0).pow(5);
        assert_eq!(build_pencil(&x1, &cfg), Err(Error::EndpointNotZero { power: 0 }));
    }

    #[test]
    fn diagonal_cubic_matches_closed_forms() {
        let cfg = PencilConfig::new(&[]).unwrap();
        let s = extract_cubic(&build_pencil(&diagonal(), &cfg).unwrap(), 5).unwrap();
        let (a, b, c, d) = coeff_vars();
        let one = Poly::one(4);
        let big_a = &(&(&(&(&(-&a.pow(4)) + &(&a.pow(4) * &c)) - &(&b.pow(4) * &c)) + &(&b.pow(4) * &d)) - &d) + &one;
        let big_b = &(&(&(&(&a.pow(3) - &(&a.pow(3) * &c.pow(2))) + &(&b.pow(3) * &c.pow(2))) - &(&b.pow(3) * &d.pow(2)))
            + &d.pow(2))
            - &one;
        assert_eq!(s.get(1), &big_a.scale(&int(5)));
        assert_eq!(s.get(2), &big_b.scale(&int(10)));
        for i in 1..=4 {
            assert!(s.get(i).assign(&[(C, int(1)), (D, int(1))]).unwrap().is_zero());
        }
    }

    #[test]
    fn diagonal_c_in_terms_of_d() {
        let cfg = PencilConfig::new(&[]).unwrap();
        let s = extract_cubic(&build_pencil(&diagonal(), &cfg).unwrap(), 5).unwrap();
        let cd = solve_cd(&s).unwrap();
        let (a, b, _, d) = coeff_vars();
        let one = Poly::one(4);
        let num = &(&(&d * &(&one - &b.pow(4))) + &a.pow(4)) - &one;
        let den = &a.pow(4) - &b.pow(4);
        assert_eq!(cd.solved_for, C);
        assert_eq!(cd.linear, (num.clone(), den.clone()));
        // d = 1 gives c = 1.
        let at1 = num.assign(&[(D, int(1))]).unwrap();
        assert_eq!(at1, den);
        // The fractions kill S1 and S2.
        for i in 1..=2 {
            let (r, _) = eval_homogenized(s.get(i), C, D, &cd.c_num, &cd.d_num, &cd.den);
            assert!(r.is_zero(), "S{i} residual");
        }
    }

    fn assert_is_solution(g: &Poly, sol: &[Poly]) {
        assert!(g.substitute_all(sol).unwrap().is_zero());
        let sum = sol.iter().fold(Poly::zero(sol[0].nvars()), |a, p| &a + p);
        assert!(sum.is_zero());
        assert!(!is_degenerate(sol));
    }

    #[test]
    fn diagonal_solution_and_spot_check() {
        let f = SymmetricForm::new(diagonal()).unwrap();
        let sol = solve_quintic(&f, &CertifyOptions::default()).unwrap();
        assert_eq!(sol.params, vec!["a", "b"]);
        assert_is_solution(&diagonal(), &sol.solutions);
        let vals = sol.evaluate(&[int(2), int(3)]).unwrap();
        let fifth: Rational = vals.iter().map(|v| v * v * v * v * v).sum();
        let total: Rational = vals.iter().sum();
        assert!(fifth.is_zero() && total.is_zero());
        let mut sorted: Vec<Rational> = vals.iter().map(num_traits::Signed::abs).collect();
        sorted.sort();
        sorted.dedup();
        assert!(sorted.len() > 3, "not a paired tuple");
    }

    #[test]
    fn canonical_family_random_coefficients() {
        for (a1, a2) in [(frac(3, 7), frac(-2, 5)), (int(1), int(4)), (frac(-5, 3), frac(1, 11))] {
            let g = canonical_quintic(&a1, &a2);
            let f = SymmetricForm::new(g.clone()).unwrap();
            let sol = solve_quintic(&f, &CertifyOptions::default()).unwrap();
            assert_is_solution(&g, &sol.solutions);
        }
    }

    #[test]
    fn degenerate_coefficients_short_circuit() {
        // p1 * p2^2 vanishes on the hyperplane.
        let p = |k| symfunc::power_sum(k, 6);
        let f = SymmetricForm::new(&p(1) * &p(2).pow(2)).unwrap();
        let sol = solve_quintic(&f, &CertifyOptions::default()).unwrap();
        assert!(sol.certificate.is_some());
        assert!(is_degenerate(&sol.solutions));
    }

    #[test]
    fn pure_product_form_uses_adaptive_path() {
        // A1 = 0: only p3 p2 remains.
        let g = canonical_quintic(&int(0), &int(1));
        let f = SymmetricForm::new(g.clone()).unwrap();
        match solve_quintic(&f, &CertifyOptions::default()) {
            Ok(sol) => assert_is_solution(&g, &sol.solutions),
            Err(e) => assert!(e.is_degeneracy(), "{e:?}"),
        }
    }

    #[test]
    fn degeneracy_detector() {
        let a = Poly::var(1, 0);
        let pair = vec![a.clone(), Poly::one(1), -&a, Poly::int(1, -1)];
        assert!(is_degenerate(&pair));
        assert!(!is_degenerate(&[a.clone(), a.clone(), a.scale(&int(-2))]));
        assert!(is_degenerate(&[Poly::zero(1), Poly::zero(1)]));
    }
}
