//! Certification of parametric solutions and specialization of parameters.
//!
//! Symbolic certification proves the exact residual `R = F(X) - q W^n`
//! (W the common denominator, 1 for polynomial tuples) is the zero
//! polynomial, either by expanding it or, when the parameters are few, by
//! checking that `R` vanishes on a product grid with `deg_v(R) + 1` points
//! per parameter `v` — which forces `R = 0`. When both would exceed the
//! budget, the identity is tested at seeded random rational points off the
//! excluded locus, every sample recorded in the certificate.

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rational::{self, Rational};
use crate::solution::{Certificate, CertificateKind, CertificateMethod, ParametricSolution};

pub const DEFAULT_BUDGET: usize = 5_000_000;
pub const DEFAULT_SAMPLES: usize = 50;
/// Numerators and denominators of sampled coordinates stay within this bound.
pub const SAMPLE_BOUND: i64 = 10_000;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Target {
    Zero,
    Value(Rational),
}

impl Target {
    pub fn value(&self) -> Rational {
        match self {
            Target::Zero => Rational::zero(),
            Target::Value(q) => q.clone(),
        }
    }

    pub fn kind(&self) -> CertificateKind {
        match self {
            Target::Zero => CertificateKind::Zero,
            Target::Value(_) => CertificateKind::Value,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct CertifyOptions {
    /// Largest estimated expansion size attempted symbolically.
    pub budget: usize,
    pub samples: usize,
    pub seed: u64,
}

impl Default for CertifyOptions {
    fn default() -> Self {
        CertifyOptions { budget: DEFAULT_BUDGET, samples: DEFAULT_SAMPLES, seed: 0 }
    }
}

/// Upper estimate of the number of terms produced by substituting `sol`
/// into `form`: the smaller of the dense monomial count at the resulting
/// degree and the naive product of term counts.
pub fn estimate_expansion(form: &Poly, sol: &ParametricSolution, target: &Target) -> usize {
    let k = sol.nparams() as u64;
    let degs: Vec<u64> = sol.solutions.iter().map(|p| p.total_degree().unwrap_or(0) as u64).collect();
    let lens: Vec<f64> = sol.solutions.iter().map(|p| p.len().max(1) as f64).collect();
    let mut max_deg = 0u64;
    let mut products = 0f64;
    for (m, _) in form.terms() {
        let mut d = 0;
        let mut prod = 1f64;
        for (i, e) in m.exponents().enumerate() {
            d += e as u64 * degs[i];
            prod *= lens[i].powi(e as i32);
        }
        max_deg = max_deg.max(d);
        products += prod;
    }
    if let (Some(w), Target::Value(_)) = (&sol.denominator, target) {
        let n = form.total_degree().unwrap_or(0) as u64;
        max_deg = max_deg.max(n * w.total_degree().unwrap_or(0) as u64);
        products += (w.len() as f64).powi(n as i32);
    }
    // C(max_deg + k, k) in floating point; only its magnitude matters.
    let mut dense = 1f64;
    for i in 1..=k {
        dense = dense * (max_deg + i) as f64 / i as f64;
    }
    dense.min(products).min(usize::MAX as f64) as usize
}

/// Certifies `form(sol) = target` and, when claimed, `Σ sol = 0`.
pub fn certify(form: &Poly, sol: &ParametricSolution, target: &Target, opts: &CertifyOptions) -> Result<Certificate> {
    if sol.solutions.len() != form.nvars() {
        return Err(Error::WrongValueCount { expected: form.nvars(), got: sol.solutions.len() });
    }
    if sol.zero_sum {
        let sum = sol.solutions.iter().fold(Poly::zero(sol.nparams()), |acc, p| &acc + p);
        if !sum.is_zero() {
            return Err(Error::CertificationFailed(format!(
                "coordinate sum is {}",
                sum.display(&sol.params)
            )));
        }
    }
    if let Some(d) = &sol.denominator {
        if d.is_zero() {
            return Err(Error::CertificationFailed("denominator is identically zero".into()));
        }
        if matches!(target, Target::Zero) {
            // Irrelevant for homogeneous forms, but keep the check honest.
            if !form.is_homogeneous() {
                return Err(Error::CertificationFailed("rational tuple for an inhomogeneous form".into()));
            }
        }
    }
    let grid_cost = residual_degree(form, sol, target)
        .and_then(|d| simplex_size(d, sol.nparams()))
        .and_then(|pts| pts.checked_mul(form.len().max(1) as u64 + 6 * sol.nvars as u64));
    if grid_cost.is_some_and(|c| c <= opts.budget as u64) && (form.is_homogeneous() || sol.denominator.is_none()) {
        certify_grid(form, sol, target)
    } else if estimate_expansion(form, sol, target) <= opts.budget {
        certify_symbolic(form, sol, target)
    } else {
        certify_randomized(form, sol, target, opts)
    }
}

fn symbolic_certificate(target: &Target) -> Certificate {
    Certificate {
        kind: target.kind(),
        q: match target {
            Target::Zero => None,
            Target::Value(q) => Some(q.clone()),
        },
        method: CertificateMethod::Symbolic,
        samples: 0,
        seed: None,
        points: Vec::new(),
    }
}

/// Total-degree bound of the residual `F(X) - q W^n`.
pub fn residual_degree(form: &Poly, sol: &ParametricSolution, target: &Target) -> Option<u32> {
    let degs: Vec<u64> = sol.solutions.iter().map(|p| p.total_degree().unwrap_or(0) as u64).collect();
    let mut out = 0u64;
    for (m, _) in form.terms() {
        out = out.max(m.exponents().zip(&degs).map(|(e, d)| e as u64 * d).sum());
    }
    if let (Some(w), Target::Value(_)) = (&sol.denominator, target) {
        out = out.max(form.total_degree().unwrap_or(0) as u64 * w.total_degree().unwrap_or(0) as u64);
    }
    u32::try_from(out).ok()
}

/// `C(d + k, k)`: points `j ∈ ℕ^k` with `Σ j ≤ d`.
fn simplex_size(d: u32, k: usize) -> Option<u64> {
    let mut acc: u128 = 1;
    for i in 1..=k as u128 {
        acc = acc * (d as u128 + i) / i;
        if acc > u64::MAX as u128 {
            return None;
        }
    }
    Some(acc as u64)
}

type IntPoly = Vec<(Monomial, BigInt)>;

fn to_int(p: &Poly, scale: &BigInt) -> IntPoly {
    p.terms()
        .iter()
        .map(|(m, c)| (m.clone(), (c * Rational::from_integer(scale.clone())).to_integer()))
        .collect()
}

fn assign_int(p: &IntPoly, var: usize, value: i64, powers: &mut Vec<BigInt>) -> IntPoly {
    let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
    for (m, c) in p {
        let e = m.exp(var) as usize;
        while powers.len() <= e {
            let next = powers.last().map(|x| x * value).unwrap_or_else(BigInt::one);
            powers.push(next);
        }
        let c = if e == 0 { c.clone() } else { c * &powers[e] };
        if c.is_zero() {
            continue;
        }
        *acc.entry(m.with_exp(var, 0)).or_default() += c;
    }
    acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
}

fn constant_of(p: &IntPoly) -> BigInt {
    p.iter().find(|(m, _)| m.is_one()).map(|(_, c)| c.clone()).unwrap_or_default()
}

struct GridCheck<'a> {
    form: Vec<(Vec<u32>, BigInt)>,
    form_scale: BigInt,
    entry_scale: BigInt,
    q: &'a Rational,
    n: u32,
    with_w: bool,
}

impl GridCheck<'_> {
    /// `qden · c F(L X) - qnum · c (L W)^n`, zero exactly when the residual is.
    fn residual(&self, values: &[BigInt], w: Option<&BigInt>) -> BigInt {
        let mut table: Vec<Vec<BigInt>> = values
            .iter()
            .map(|v| {
                let mut t = vec![BigInt::one()];
                for _ in 0..self.n {
                    let next = t.last().unwrap() * v;
                    t.push(next);
                }
                t
            })
            .collect();
        let mut f = BigInt::zero();
        for (exps, c) in &self.form {
            let mut term = c.clone();
            for (i, &e) in exps.iter().enumerate() {
                if e > 0 {
                    term *= &table[i][e as usize];
                }
            }
            f += term;
        }
        table.clear();
        let mut r = f * self.q.denom();
        if let Some(w) = w {
            r -= self.q.numer() * &self.form_scale * num_traits::pow(w.clone(), self.n as usize);
        }
        r
    }

    fn report(&self, r: &BigInt) -> Rational {
        let den = self.q.denom() * &self.form_scale * num_traits::pow(self.entry_scale.clone(), self.n as usize);
        Rational::new(r.clone(), den)
    }
}

/// Exact zero test of the residual on the simplex grid of its degree.
///
/// A polynomial of total degree at most `d` in `k` variables that vanishes
/// on `{j ∈ ℕ^k : Σ j ≤ d}` is zero (restrict to the last coordinate
/// hyperplane, factor out that coordinate, induct on `d`).
pub fn certify_grid(form: &Poly, sol: &ParametricSolution, target: &Target) -> Result<Certificate> {
    let d = residual_degree(form, sol, target).ok_or_else(|| Error::CertificationFailed("degree overflow".into()))?;
    let q = target.value();
    let n = form.total_degree().unwrap_or(0);
    let with_w = !q.is_zero();
    if (with_w || sol.denominator.is_some()) && !form.is_homogeneous() {
        return Err(Error::CertificationFailed("rational tuple for an inhomogeneous form".into()));
    }
    let mut polys = sol.solutions.clone();
    if with_w {
        polys.push(sol.denominator.clone().unwrap_or_else(|| Poly::one(sol.nparams())));
    }
    let entry_scale = polys
        .iter()
        .flat_map(|p| p.terms().iter().map(|(_, c)| c.denom().clone()))
        .fold(BigInt::one(), |acc, x| num_integer::Integer::lcm(&acc, &x));
    let form_scale =
        form.terms().iter().fold(BigInt::one(), |acc, (_, c)| num_integer::Integer::lcm(&acc, c.denom()));
    if !entry_scale.is_one() && !form.is_homogeneous() {
        return certify_symbolic(form, sol, target);
    }
    let check = GridCheck {
        form: form
            .terms()
            .iter()
            .map(|(m, c)| (m.exponents().collect(), (c * Rational::from_integer(form_scale.clone())).to_integer()))
            .collect(),
        form_scale,
        entry_scale: entry_scale.clone(),
        q: &q,
        n,
        with_w,
    };
    let ints: Vec<IntPoly> = polys.iter().map(|p| to_int(p, &entry_scale)).collect();
    let mut point = vec![0i64; sol.nparams()];
    if let Some(r) = grid_rec(&check, &ints, sol.nparams(), d as i64, &mut point) {
        let shown: Vec<String> = point.iter().map(|v| v.to_string()).collect();
        return Err(Error::CertificationFailed(format!(
            "residual {} at ({})",
            rational::display(&check.report(&r)),
            shown.join(", ")
        )));
    }
    Ok(symbolic_certificate(target))
}

/// Walks the simplex grid; returns the first nonzero scaled residual,
/// leaving `point` at the offending coordinates.
fn grid_rec(check: &GridCheck, polys: &[IntPoly], level: usize, room: i64, point: &mut Vec<i64>) -> Option<BigInt> {
    if level == 0 {
        let mut values: Vec<BigInt> = polys.iter().map(constant_of).collect();
        let w = if check.with_w { values.pop() } else { None };
        let r = check.residual(&values, w.as_ref());
        return if r.is_zero() { None } else { Some(r) };
    }
    let v = level - 1;
    for j in 0..=room {
        point[v] = j;
        let next: Vec<IntPoly> = polys
            .iter()
            .map(|p| {
                let mut powers = Vec::new();
                assign_int(p, v, j, &mut powers)
            })
            .collect();
        if let Some(r) = grid_rec(check, &next, v, room - j, point) {
            return Some(r);
        }
    }
    point[v] = 0;
    None
}

pub fn certify_symbolic(form: &Poly, sol: &ParametricSolution, target: &Target) -> Result<Certificate> {
    let mut residual = form.substitute_all(&sol.solutions)?;
    let q = target.value();
    if !q.is_zero() {
        if !form.is_homogeneous() {
            return Err(Error::CertificationFailed("value target needs a homogeneous form".into()));
        }
        let n = form.total_degree().unwrap_or(0);
        let w = sol.denominator.clone().unwrap_or_else(|| Poly::one(sol.nparams()));
        residual = &residual - &w.pow(n).scale(&q);
    }
    if let Some((m, c)) = residual.leading() {
        let term = Poly::monomial(residual.nvars(), m.clone(), c.clone());
        return Err(Error::CertificationFailed(format!(
            "symbolic residual has {} terms, leading {}",
            residual.len(),
            term.display(&sol.params)
        )));
    }
    Ok(symbolic_certificate(target))
}

fn random_rational(rng: &mut ChaCha8Rng) -> Rational {
    let n: i64 = rng.gen_range(-SAMPLE_BOUND..=SAMPLE_BOUND);
    let d: i64 = rng.gen_range(1..=SAMPLE_BOUND);
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Seeded points avoiding the excluded locus and the denominator.
pub fn sample_points(sol: &ParametricSolution, count: usize, seed: u64) -> Result<Vec<Vec<Rational>>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut avoid: Vec<&Poly> = sol.excluded_locus.iter().collect();
    avoid.extend(sol.denominator.iter());
    let mut out = Vec::with_capacity(count);
    let mut rejected = 0usize;
    while out.len() < count {
        let pt: Vec<Rational> = (0..sol.nparams()).map(|_| random_rational(&mut rng)).collect();
        let mut ok = true;
        for p in &avoid {
            if p.evaluate(&pt)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok {
            out.push(pt);
        } else {
            rejected += 1;
            if rejected > 100 * count + 100 {
                return Err(Error::CertificationFailed("cannot sample off the excluded locus".into()));
            }
        }
    }
    Ok(out)
}

pub fn certify_randomized(
    form: &Poly,
    sol: &ParametricSolution,
    target: &Target,
    opts: &CertifyOptions,
) -> Result<Certificate> {
    let points = sample_points(sol, opts.samples, opts.seed)?;
    let q = target.value();
    let failures: Vec<Result<Option<String>>> = points
        .par_iter()
        .map(|pt| {
            let values = sol.evaluate(pt)?;
            let got = form.evaluate(&values)?;
            Ok(if got != q {
                let shown: Vec<String> = pt.iter().map(rational::display).collect();
                Some(format!("residual {} at ({})", rational::display(&(got - &q)), shown.join(", ")))
            } else {
                None
            })
        })
        .collect();
    for f in failures {
        if let Some(msg) = f? {
            return Err(Error::CertificationFailed(msg));
        }
    }
    Ok(Certificate {
        kind: target.kind(),
        q: match target {
            Target::Zero => None,
            Target::Value(q) => Some(q.clone()),
        },
        method: CertificateMethod::Randomized,
        samples: points.len(),
        seed: Some(opts.seed),
        points,
    })
}

/// Fixes some parameters at rational values and re-certifies.
pub fn specialize(
    form: &Poly,
    sol: &ParametricSolution,
    assignments: &[(String, Rational)],
    opts: &CertifyOptions,
) -> Result<ParametricSolution> {
    if assignments.is_empty() {
        return Ok(sol.clone());
    }
    let mut fixed = Vec::with_capacity(assignments.len());
    for (name, value) in assignments {
        fixed.push((sol.param_index(name)?, value.clone()));
    }
    for locus in &sol.excluded_locus {
        if locus.assign(&fixed)?.is_zero() {
            return Err(Error::ExcludedLocusHit(locus.display(&sol.params).to_string()));
        }
    }
    let keep: Vec<usize> = (0..sol.nparams()).filter(|i| !fixed.iter().any(|(j, _)| j == i)).collect();
    let mut map = vec![0usize; sol.nparams()];
    for (new, &old) in keep.iter().enumerate() {
        map[old] = new;
    }
    let shrink = |p: &Poly| -> Result<Poly> { Ok(p.assign(&fixed)?.remap(keep.len(), &map)) };
    let denominator = sol.denominator.as_ref().map(&shrink).transpose()?;
    if let Some(d) = &denominator {
        if d.is_zero() {
            return Err(Error::ExcludedLocusHit("denominator".into()));
        }
    }
    let mut excluded_locus = Vec::new();
    for p in &sol.excluded_locus {
        let s = shrink(p)?;
        if !s.is_constant() {
            excluded_locus.push(s.primitive().1);
        }
    }
    let mut out = ParametricSolution {
        nvars: sol.nvars,
        params: keep.iter().map(|&i| sol.params[i].clone()).collect(),
        solutions: sol.solutions.iter().map(&shrink).collect::<Result<_>>()?,
        denominator,
        excluded_locus,
        certificate: None,
        zero_sum: sol.zero_sum,
    };
    if out.solutions.iter().all(|p| p.is_zero()) {
        return Err(Error::DegenerateSolution);
    }
    let target = match &sol.certificate {
        Some(c) if c.kind == CertificateKind::Value => Target::Value(c.target()),
        _ => Target::Zero,
    };
    out.certificate = Some(certify(form, &out, &target, opts)?);
    Ok(out)
}

/// Seeded values for all but `keep` parameters (the trailing ones are
/// fixed), chosen off the excluded locus. Values are small integers.
pub fn choose_assignments(sol: &ParametricSolution, keep: usize, seed: u64) -> Result<Vec<(String, Rational)>> {
    if keep > sol.nparams() {
        return Err(Error::ParameterShortfall { needed: keep, got: sol.nparams() });
    }
    let names: Vec<String> = sol.params[keep..].to_vec();
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    for _ in 0..1000 {
        let vals: Vec<(String, Rational)> =
            names.iter().map(|n| (n.clone(), rational::int(rng.gen_range(-9i64..=9)))).collect();
        let fixed: Vec<(usize, Rational)> = vals.iter().map(|(n, v)| (sol.param_index(n).unwrap(), v.clone())).collect();
        let mut ok = true;
        for p in sol.excluded_locus.iter().chain(&sol.denominator) {
            if p.assign(&fixed)?.is_zero() {
                ok = false;
                break;
            }
        }
        if ok && !vals.iter().any(|(_, v)| v.is_zero() || v.abs() == rational::int(1)) {
            return Ok(vals);
        }
    }
    Err(Error::ExcludedLocusHit("no admissible specialization found".into()))
}
