//! Symmetric forms, power-sum generators and primitive points.

use std::collections::BTreeMap;

use num_bigint::BigInt;
use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::poly::{Monomial, Poly};
use crate::rational::Rational;

/// Power sum `p_k = Σ x_i^k` or alternating power sum
/// `q_k = x_1^k - x_2^k + x_3^k - …`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum GenKind {
    #[serde(rename = "p")]
    P,
    #[serde(rename = "q")]
    Q,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Generator {
    pub kind: GenKind,
    pub k: u32,
}

pub fn generator(kind: GenKind, k: u32, nvars: usize) -> Result<Poly> {
    if k == 0 {
        return Err(Error::Unsupported { expected: "generator degree >= 1".into(), got: "0".into() });
    }
    if kind == GenKind::Q && nvars % 2 == 1 {
        return Err(Error::OddVariableCount { nvars });
    }
    let terms = (0..nvars).map(|i| {
        let sign = if kind == GenKind::Q && i % 2 == 1 { -1 } else { 1 };
        (Monomial::var(nvars, i, k as u16), Rational::from_integer(BigInt::from(sign)))
    });
    Ok(Poly::from_terms(nvars, terms.collect::<Vec<_>>()))
}

pub fn power_sum(k: u32, nvars: usize) -> Poly {
    generator(GenKind::P, k, nvars).expect("p_k exists for k >= 1")
}

/// Elementary symmetric polynomial `e_k` in `nvars` variables.
pub fn elementary(k: usize, nvars: usize) -> Poly {
    fn rec(start: usize, left: usize, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if left == 0 {
            out.push(Monomial::from_exponents(cur));
            return;
        }
        for i in start..=cur.len() - left {
            cur[i] = 1;
            rec(i + 1, left - 1, cur, out);
            cur[i] = 0;
        }
    }
    if k > nvars {
        return Poly::zero(nvars);
    }
    let mut out = Vec::new();
    rec(0, k, &mut vec![0; nvars], &mut out);
    Poly::from_terms(nvars, out.into_iter().map(|m| (m, Rational::one())))
}

/// True iff `p` is fixed by the transposition (x1 x2) and the cycle
/// (x1 x2 … xN), which together generate the symmetric group.
pub fn is_symmetric(p: &Poly, nvars: usize) -> bool {
    if p.nvars() != nvars {
        return false;
    }
    if nvars < 2 {
        return true;
    }
    let mut swap: Vec<usize> = (0..nvars).collect();
    swap.swap(0, 1);
    let cycle: Vec<usize> = (0..nvars).map(|i| (i + 1) % nvars).collect();
    p.remap(nvars, &swap) == *p && p.remap(nvars, &cycle) == *p
}

/// A homogeneous symmetric polynomial in `nvars` form variables.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymmetricForm {
    poly: Poly,
    degree: u32,
    symmetry_checked: bool,
}

impl SymmetricForm {
    /// Checks homogeneity and symmetry.
    pub fn new(poly: Poly) -> Result<Self> {
        let degree = poly.total_degree().ok_or(Error::Unsupported {
            expected: "a nonzero form".into(),
            got: "0".into(),
        })?;
        if !poly.is_homogeneous() {
            return Err(Error::NotHomogeneous);
        }
        if !is_symmetric(&poly, poly.nvars()) {
            return Err(Error::NotSymmetric);
        }
        Ok(SymmetricForm { poly, degree, symmetry_checked: true })
    }

    pub fn poly(&self) -> &Poly {
        &self.poly
    }

    pub fn into_poly(self) -> Poly {
        self.poly
    }

    pub fn nvars(&self) -> usize {
        self.poly.nvars()
    }

    pub fn degree(&self) -> u32 {
        self.degree
    }

    pub fn symmetry_checked(&self) -> bool {
        self.symmetry_checked
    }
}

/// A form rewritten as a polynomial in power-sum generators. `expr` has one
/// variable per entry of `gens`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PowerSumExpr {
    pub gens: Vec<Generator>,
    pub expr: Poly,
}

impl PowerSumExpr {
    /// Substitutes the generators back in.
    pub fn expand(&self, nvars: usize) -> Result<Poly> {
        let images = self.gens.iter().map(|g| generator(g.kind, g.k, nvars)).collect::<Result<Vec<_>>>()?;
        self.expr.substitute_all(&images)
    }

    /// Every term of `expr` has weighted degree `degree`.
    pub fn is_weighted_homogeneous(&self, degree: u32) -> bool {
        self.expr.terms().iter().all(|(m, _)| {
            m.exponents().zip(&self.gens).map(|(e, g)| e * g.k).sum::<u32>() == degree
        })
    }

    pub fn gen_names(&self) -> Vec<String> {
        self.gens
            .iter()
            .map(|g| format!("{}{}", if g.kind == GenKind::P { "p" } else { "q" }, g.k))
            .collect()
    }
}

type Partition = Vec<u32>;

/// Coefficient of `x1^κ1 x2^κ2 …` in `p_λ`, for every κ (as sorted
/// partitions) obtained by merging parts of λ.
fn power_product_in_monomials(lambda: &[u32], nvars: usize) -> BTreeMap<Partition, BigInt> {
    fn rec(i: usize, lambda: &[u32], blocks: &mut Vec<u32>, nvars: usize, out: &mut BTreeMap<Partition, BigInt>) {
        if i == lambda.len() {
            if blocks.len() > nvars {
                return;
            }
            let mut kappa = blocks.clone();
            kappa.sort_unstable_by(|a, b| b.cmp(a));
            // Blocks with equal sums can be placed on the equal-exponent
            // positions in any order.
            let mut weight = BigInt::one();
            let mut run = 1u32;
            for w in 1..=kappa.len() {
                if w < kappa.len() && kappa[w] == kappa[w - 1] {
                    run += 1;
                } else {
                    for f in 2..=run {
                        weight *= f;
                    }
                    run = 1;
                }
            }
            *out.entry(kappa).or_default() += weight;
            return;
        }
        for b in 0..blocks.len() {
            blocks[b] += lambda[i];
            rec(i + 1, lambda, blocks, nvars, out);
            blocks[b] -= lambda[i];
        }
        blocks.push(lambda[i]);
        rec(i + 1, lambda, blocks, nvars, out);
        blocks.pop();
    }
    let mut out = BTreeMap::new();
    rec(0, lambda, &mut Vec::new(), nvars, &mut out);
    out
}

/// Rewrites a symmetric form in the power sums `p_1, …, p_n`.
pub fn decompose_power_sums(f: &SymmetricForm) -> Result<PowerSumExpr> {
    let (n, nv) = (f.degree(), f.nvars());
    if !f.symmetry_checked() || !is_symmetric(f.poly(), nv) {
        return Err(Error::NotSymmetric);
    }
    if n as usize > nv {
        return Err(Error::DegreeExceedsVars { degree: n, nvars: nv });
    }
    // Coefficients on the monomial symmetric basis, read off sorted monomials.
    let mut coeffs: BTreeMap<Partition, Rational> = BTreeMap::new();
    for (m, c) in f.poly().terms() {
        let exps: Vec<u32> = m.exponents().collect();
        let nonzero: Vec<u32> = exps.iter().copied().take_while(|&e| e > 0).collect();
        let sorted = nonzero.windows(2).all(|w| w[0] >= w[1]) && exps[nonzero.len()..].iter().all(|&e| e == 0);
        if sorted {
            coeffs.insert(nonzero, c.clone());
        }
    }
    let gens: Vec<Generator> = (1..=n).map(|k| Generator { kind: GenKind::P, k }).collect();
    let mut terms = Vec::new();
    while let Some(lambda) = coeffs.keys().max_by(|a, b| a.len().cmp(&b.len()).then_with(|| b.cmp(a))).cloned() {
        let expansion = power_product_in_monomials(&lambda, nv);
        let lead = Rational::from_integer(expansion[&lambda].clone());
        let c = &coeffs[&lambda] / &lead;
        for (kappa, k) in expansion {
            let entry = coeffs.entry(kappa.clone()).or_insert_with(Rational::zero);
            *entry -= &c * Rational::from_integer(k);
            if entry.is_zero() {
                coeffs.remove(&kappa);
            }
        }
        let mut exps = vec![0u32; n as usize];
        for part in &lambda {
            exps[*part as usize - 1] += 1;
        }
        terms.push((Monomial::from_exponents(&exps), c));
    }
    Ok(PowerSumExpr { gens, expr: Poly::from_terms(n as usize, terms) })
}

/// For a symmetric quintic in six variables, the coefficients `(A1, A2)`
/// with `f = A1 p5 + A2 p3 p2` on the hyperplane `p1 = 0`.
pub fn quintic_canonical(f: &SymmetricForm) -> Result<(Rational, Rational)> {
    if f.nvars() != 6 || f.degree() != 5 {
        return Err(Error::Unsupported {
            expected: "a quintic in 6 variables".into(),
            got: format!("degree {} in {} variables", f.degree(), f.nvars()),
        });
    }
    let expr = decompose_power_sums(f)?.expr;
    let on_hyperplane = expr.assign(&[(0, Rational::zero())])?;
    let a1 = on_hyperplane.coeff(&Monomial::from_exponents(&[0, 0, 0, 0, 1]));
    let a2 = on_hyperplane.coeff(&Monomial::from_exponents(&[0, 1, 1, 0, 0]));
    Ok((a1, a2))
}

/// A point `(a_1, -a_1, …, a_{M-1}, -a_{M-1}, 1, -1)`, permuted.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PrimitivePoint {
    /// Entries as polynomials in some parameter ambient.
    pub entries: Vec<Poly>,
    /// Output position `i` holds pattern entry `perm[i]`.
    pub perm: Vec<usize>,
}

/// Builds a primitive point from `N/2 - 1` values in a shared ambient.
pub fn primitive_point(nvars: usize, values: &[Poly], perm: Option<&[usize]>) -> Result<PrimitivePoint> {
    if nvars % 2 == 1 {
        return Err(Error::OddVariableCount { nvars });
    }
    if nvars < 6 {
        return Err(Error::InsufficientVariables { needed: 6, have: nvars });
    }
    if values.len() != nvars / 2 - 1 {
        return Err(Error::WrongValueCount { expected: nvars / 2 - 1, got: values.len() });
    }
    let amb = values[0].nvars();
    if let Some(v) = values.iter().find(|v| v.nvars() != amb) {
        return Err(Error::NvarsMismatch { lhs: amb, rhs: v.nvars() });
    }
    let mut pattern = Vec::with_capacity(nvars);
    for v in values {
        pattern.push(v.clone());
        pattern.push(-v);
    }
    pattern.push(Poly::one(amb));
    pattern.push(Poly::int(amb, -1));
    let perm: Vec<usize> = match perm {
        Some(p) => {
            let mut seen = vec![false; nvars];
            if p.len() != nvars || p.iter().any(|&i| i >= nvars || std::mem::replace(&mut seen[i], true)) {
                return Err(Error::Malformed("not a permutation".into()));
            }
            p.to_vec()
        }
        None => (0..nvars).collect(),
    };
    let entries = perm.iter().map(|&i| pattern[i].clone()).collect();
    Ok(PrimitivePoint { entries, perm })
}

impl PrimitivePoint {
    /// `f` evaluated at this point, as a polynomial in the parameters. Zero
    /// for every symmetric form of odd degree.
    pub fn residual(&self, f: &Poly) -> Result<Poly> {
        f.substitute_all(&self.entries)
    }
}
