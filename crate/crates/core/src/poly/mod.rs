//! Sparse multivariate polynomials over exact rationals.
//!
//! A [`Poly`] lives in an ambient of `nvars` variables and stores its terms
//! as a vector sorted by descending graded-lex order with no zero
//! coefficients, so structural equality is mathematical equality.

mod gcd;
mod json;
mod kron;
mod monomial;

use std::collections::hash_map::Entry;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};
use rustc_hash::FxHashMap;

use crate::error::{Error, Result};
use crate::rational::{self, Rational};

pub use gcd::gcd;
pub use json::PolyJson;
pub use monomial::Monomial;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Poly {
    nvars: usize,
    terms: Vec<(Monomial, Rational)>,
}

impl Poly {
    pub fn zero(nvars: usize) -> Self {
        Poly { nvars, terms: Vec::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        Self::monomial(nvars, Monomial::one(nvars), c)
    }

    pub fn int(nvars: usize, c: i64) -> Self {
        Self::constant(nvars, rational::int(c))
    }

    pub fn monomial(nvars: usize, m: Monomial, c: Rational) -> Self {
        assert_eq!(m.nvars(), nvars);
        if c.is_zero() {
            Self::zero(nvars)
        } else {
            Poly { nvars, terms: vec![(m, c)] }
        }
    }

    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable {index} out of range for {nvars}");
        Self::monomial(nvars, Monomial::var(nvars, index, 1), Rational::one())
    }

    /// Collects arbitrary terms, merging duplicates and dropping zeros.
    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Monomial, Rational)>,
    {
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in terms {
            assert_eq!(m.nvars(), nvars, "monomial length differs from nvars");
            match acc.entry(m) {
                Entry::Occupied(mut e) => *e.get_mut() += c,
                Entry::Vacant(e) => {
                    e.insert(c);
                }
            }
        }
        Self::from_map(nvars, acc)
    }

    fn from_map(nvars: usize, map: FxHashMap<Monomial, Rational>) -> Self {
        let mut terms: Vec<_> = map.into_iter().filter(|(_, c)| !c.is_zero()).collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { nvars, terms }
    }

    fn from_int_map(nvars: usize, map: FxHashMap<Monomial, BigInt>, denom: &BigInt) -> Self {
        let mut terms: Vec<_> = map
            .into_iter()
            .filter(|(_, c)| !c.is_zero())
            .map(|(m, c)| (m, Rational::new(c, denom.clone())))
            .collect();
        terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
        Poly { nvars, terms }
    }

    /// Terms in descending graded-lex order.
    pub fn terms(&self) -> &[(Monomial, Rational)] {
        &self.terms
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.iter().all(|(m, _)| m.is_one())
    }

    /// Constant term (zero when absent).
    pub fn constant_term(&self) -> Rational {
        match self.terms.last() {
            Some((m, c)) if m.is_one() => c.clone(),
            _ => Rational::zero(),
        }
    }

    pub fn coeff(&self, m: &Monomial) -> Rational {
        self.terms
            .binary_search_by(|(k, _)| m.cmp(k))
            .map(|i| self.terms[i].1.clone())
            .unwrap_or_else(|_| Rational::zero())
    }

    pub fn leading(&self) -> Option<&(Monomial, Rational)> {
        self.terms.first()
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.first().map(|(m, _)| m.degree())
    }

    pub fn degree_in(&self, vars: &[usize]) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.degree_in(vars)).max()
    }

    pub fn degree_in_var(&self, var: usize) -> Option<u32> {
        self.terms.iter().map(|(m, _)| m.exp(var)).max()
    }

    /// Variables that actually occur.
    pub fn support(&self) -> Vec<usize> {
        (0..self.nvars).filter(|&v| self.terms.iter().any(|(m, _)| m.exp(v) > 0)).collect()
    }

    pub fn is_homogeneous(&self) -> bool {
        match self.terms.first() {
            None => true,
            Some((m, _)) => self.terms.iter().all(|(k, _)| k.degree() == m.degree()),
        }
    }

    /// Degree-`d` component with respect to the variables in `vars`.
    pub fn component_in(&self, vars: &[usize], d: u32) -> Poly {
        Poly {
            nvars: self.nvars,
            terms: self.terms.iter().filter(|(m, _)| m.degree_in(vars) == d).cloned().collect(),
        }
    }

    fn check_nvars(&self, other: &Poly) -> Result<()> {
        if self.nvars != other.nvars {
            Err(Error::NvarsMismatch { lhs: self.nvars, rhs: other.nvars })
        } else {
            Ok(())
        }
    }

    pub fn try_add(&self, other: &Poly) -> Result<Poly> {
        self.check_nvars(other)?;
        Ok(self.merge(other, false))
    }

    pub fn try_sub(&self, other: &Poly) -> Result<Poly> {
        self.check_nvars(other)?;
        Ok(self.merge(other, true))
    }

    pub fn try_mul(&self, other: &Poly) -> Result<Poly> {
        self.check_nvars(other)?;
        Ok(self.product(other))
    }

    fn merge(&self, other: &Poly, negate: bool) -> Poly {
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let (mut i, mut j) = (0, 0);
        let (a, b) = (&self.terms, &other.terms);
        let sign = |c: &Rational| if negate { -c.clone() } else { c.clone() };
        while i < a.len() && j < b.len() {
            match a[i].0.cmp(&b[j].0) {
                std::cmp::Ordering::Greater => {
                    out.push(a[i].clone());
                    i += 1;
                }
                std::cmp::Ordering::Less => {
                    out.push((b[j].0.clone(), sign(&b[j].1)));
                    j += 1;
                }
                std::cmp::Ordering::Equal => {
                    let c = if negate { &a[i].1 - &b[j].1 } else { &a[i].1 + &b[j].1 };
                    if !c.is_zero() {
                        out.push((a[i].0.clone(), c));
                    }
                    i += 1;
                    j += 1;
                }
            }
        }
        out.extend(a[i..].iter().cloned());
        out.extend(b[j..].iter().map(|(m, c)| (m.clone(), sign(c))));
        Poly { nvars: self.nvars, terms: out }
    }

    /// Common denominator of the coefficients and the integer numerators.
    fn integer_form(&self) -> (BigInt, Vec<BigInt>) {
        let den = self.terms.iter().fold(BigInt::one(), |acc, (_, c)| acc.lcm(c.denom()));
        let nums = self.terms.iter().map(|(_, c)| c.numer() * (&den / c.denom())).collect();
        (den, nums)
    }

    fn product(&self, other: &Poly) -> Poly {
        assert_eq!(self.nvars, other.nvars);
        if self.is_zero() || other.is_zero() {
            return Poly::zero(self.nvars);
        }
        let (da, na) = self.integer_form();
        let (db, nb) = other.integer_form();
        let ta: Vec<(Monomial, BigInt)> = self.terms.iter().map(|(m, _)| m.clone()).zip(na).collect();
        let tb: Vec<(Monomial, BigInt)> = other.terms.iter().map(|(m, _)| m.clone()).zip(nb).collect();
        let denom = da * db;
        if kron::worthwhile(&ta, &tb, self.nvars) {
            if let Some(mut terms) = kron::product(&ta, &tb, self.nvars) {
                terms.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                let terms = terms.into_iter().map(|(m, c)| (m, Rational::new(c, denom.clone()))).collect();
                return Poly { nvars: self.nvars, terms };
            }
        }
        let mut acc: FxHashMap<Monomial, BigInt> = FxHashMap::default();
        acc.reserve(self.len().max(other.len()) * 2);
        for (ma, ca) in &ta {
            for (mb, cb) in &tb {
                let m = ma.mul(mb);
                let c = ca * cb;
                match acc.entry(m) {
                    Entry::Occupied(mut e) => *e.get_mut() += c,
                    Entry::Vacant(e) => {
                        e.insert(c);
                    }
                }
            }
        }
        Poly::from_int_map(self.nvars, acc, &denom)
    }

    pub fn scale(&self, c: &Rational) -> Poly {
        if c.is_zero() {
            return Poly::zero(self.nvars);
        }
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, k)| (m.clone(), k * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(k, c)| (k.mul(m), c.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Poly {
        let mut result = Poly::one(self.nvars);
        let mut base = self.clone();
        let mut k = k;
        while k > 0 {
            if k & 1 == 1 {
                result = result.product(&base);
            }
            k >>= 1;
            if k > 0 {
                base = base.product(&base);
            }
        }
        result
    }

    /// Replaces every variable `i` by `images[i]`. All images must share one
    /// ambient; the result lives there.
    pub fn substitute_all(&self, images: &[Poly]) -> Result<Poly> {
        if images.len() != self.nvars {
            return Err(Error::WrongValueCount { expected: self.nvars, got: images.len() });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Ok(Poly { nvars: 0, terms: self.terms.clone() }),
        };
        if let Some(p) = images.iter().find(|p| p.nvars != target) {
            return Err(Error::NvarsMismatch { lhs: target, rhs: p.nvars });
        }
        let powers = PowerCache::new(images, self);
        let mut acc: FxHashMap<Monomial, Rational> = FxHashMap::default();
        for (m, c) in &self.terms {
            let mut term = Poly::constant(target, c.clone());
            for (v, e) in m.exponents().enumerate() {
                if e > 0 {
                    term = term.product(powers.get(v, e));
                    if term.is_zero() {
                        break;
                    }
                }
            }
            for (tm, tc) in term.terms {
                match acc.entry(tm) {
                    Entry::Occupied(mut e) => *e.get_mut() += tc,
                    Entry::Vacant(e) => {
                        e.insert(tc);
                    }
                }
            }
        }
        Ok(Poly::from_map(target, acc))
    }

    /// Replaces the listed variables, leaving all others fixed. Images must
    /// live in this polynomial's ambient.
    pub fn substitute(&self, map: &[(usize, Poly)]) -> Result<Poly> {
        let mut images: Vec<Poly> = (0..self.nvars).map(|i| Poly::var(self.nvars, i)).collect();
        for (v, img) in map {
            if *v >= self.nvars {
                return Err(Error::VariableOutOfRange { index: *v, nvars: self.nvars });
            }
            self.check_nvars(img)?;
            images[*v] = img.clone();
        }
        self.substitute_all(&images)
    }

    /// Fixes some variables at rational values, keeping the ambient.
    pub fn assign(&self, values: &[(usize, Rational)]) -> Result<Poly> {
        let mut table: Vec<Option<&Rational>> = vec![None; self.nvars];
        for (v, r) in values {
            if *v >= self.nvars {
                return Err(Error::VariableOutOfRange { index: *v, nvars: self.nvars });
            }
            table[*v] = Some(r);
        }
        let terms = self.terms.iter().map(|(m, c)| {
            let mut c = c.clone();
            let mut exps: smallvec::SmallVec<[u16; 12]> = m.raw().into();
            for (v, r) in table.iter().enumerate() {
                if let Some(r) = r {
                    if exps[v] > 0 {
                        c *= num_traits::pow((*r).clone(), exps[v] as usize);
                        exps[v] = 0;
                    }
                }
            }
            (Monomial::from_raw(exps), c)
        });
        Ok(Poly::from_terms(self.nvars, terms.collect::<Vec<_>>()))
    }

    /// Exact value at a rational point.
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational> {
        if point.len() != self.nvars {
            return Err(Error::PointLength { expected: self.nvars, got: point.len() });
        }
        if self.is_zero() {
            return Ok(Rational::zero());
        }
        // Work over the integers: scale variable j by its denominator to
        // the power of its maximal exponent, and divide once at the end.
        let max_exp: Vec<u32> = (0..self.nvars).map(|v| self.degree_in_var(v).unwrap_or(0)).collect();
        let tables: Vec<Vec<BigInt>> = point
            .iter()
            .zip(&max_exp)
            .map(|(r, &e)| {
                let (n, d) = (r.numer(), r.denom());
                let mut npow = vec![BigInt::one()];
                let mut dpow = vec![BigInt::one()];
                for i in 0..e as usize {
                    npow.push(&npow[i] * n);
                    dpow.push(&dpow[i] * d);
                }
                (0..=e as usize).map(|i| &npow[i] * &dpow[e as usize - i]).collect()
            })
            .collect();
        let (den, nums) = self.integer_form();
        let mut sum = BigInt::zero();
        for ((m, _), c) in self.terms.iter().zip(nums) {
            let mut t = c;
            for (v, e) in m.exponents().enumerate() {
                if max_exp[v] > 0 {
                    t *= &tables[v][e as usize];
                }
            }
            sum += t;
        }
        let mut scale = den;
        for (r, &e) in point.iter().zip(&max_exp) {
            scale *= num_traits::pow(r.denom().clone(), e as usize);
        }
        Ok(Rational::new(sum, scale))
    }

    /// Coefficients of `var^0, var^1, …, var^deg`, each free of `var`.
    pub fn coeffs_in_var(&self, var: usize) -> Result<Vec<Poly>> {
        if var >= self.nvars {
            return Err(Error::VariableOutOfRange { index: var, nvars: self.nvars });
        }
        let deg = self.degree_in_var(var).unwrap_or(0) as usize;
        let mut buckets: Vec<Vec<(Monomial, Rational)>> = vec![Vec::new(); deg + 1];
        for (m, c) in &self.terms {
            buckets[m.exp(var) as usize].push((m.with_exp(var, 0), c.clone()));
        }
        Ok(buckets
            .into_iter()
            .map(|mut t| {
                t.sort_unstable_by(|a, b| b.0.cmp(&a.0));
                Poly { nvars: self.nvars, terms: t }
            })
            .collect())
    }

    /// Rebuilds the polynomial from `coeffs_in_var` output.
    pub fn from_coeffs_in_var(nvars: usize, var: usize, coeffs: &[Poly]) -> Poly {
        let mut out = Poly::zero(nvars);
        for (i, c) in coeffs.iter().enumerate() {
            out = out.merge(&c.mul_monomial(&Monomial::var(nvars, var, i as u16)), false);
        }
        out
    }

    /// Quotient `self / divisor`, which must be exact.
    pub fn exact_divide(&self, divisor: &Poly) -> Result<Poly> {
        self.check_nvars(divisor)?;
        let (lm, lc) = divisor.leading().ok_or(Error::DivisionByZero)?.clone();
        if divisor.len() == 1 {
            if !self.terms.iter().all(|(m, _)| lm.divides(m)) {
                return Err(Error::InexactDivision);
            }
            let inv = lc.recip();
            return Ok(Poly {
                nvars: self.nvars,
                terms: self.terms.iter().map(|(m, c)| (lm.quotient_of(m), c * &inv)).collect(),
            });
        }
        let mut rem = self.clone();
        let mut quotient = Vec::new();
        while let Some((m, c)) = rem.leading().cloned() {
            if !lm.divides(&m) {
                return Err(Error::InexactDivision);
            }
            let qm = lm.quotient_of(&m);
            let qc = &c / &lc;
            rem = rem.merge(&divisor.mul_monomial(&qm).scale(&qc), true);
            quotient.push((qm, qc));
        }
        Ok(Poly { nvars: self.nvars, terms: quotient })
    }

    /// Moves into an ambient of `nvars` variables, old variable `i`
    /// becoming `map[i]`.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Poly {
        assert_eq!(map.len(), self.nvars);
        Poly::from_terms(nvars, self.terms.iter().map(|(m, c)| (m.remap(nvars, map), c.clone())).collect::<Vec<_>>())
    }

    /// Embeds into a larger ambient, keeping indices.
    pub fn extend(&self, nvars: usize) -> Poly {
        assert!(nvars >= self.nvars);
        let map: Vec<usize> = (0..self.nvars).collect();
        self.remap(nvars, &map)
    }

    /// Largest monomial dividing every term.
    pub fn monomial_content(&self) -> Monomial {
        let mut it = self.terms.iter();
        match it.next() {
            None => Monomial::one(self.nvars),
            Some((m, _)) => it.fold(m.clone(), |acc, (k, _)| acc.gcd(k)),
        }
    }

    /// Splits `self = content * primitive` where the primitive part has
    /// coprime integer coefficients and a positive leading coefficient.
    pub fn primitive(&self) -> (Rational, Poly) {
        if self.is_zero() {
            return (Rational::one(), self.clone());
        }
        let (den, nums) = self.integer_form();
        let mut g = nums.iter().fold(BigInt::zero(), |acc, n| acc.gcd(n));
        if nums[0].is_negative() {
            g = -g;
        }
        let terms = self
            .terms
            .iter()
            .zip(&nums)
            .map(|((m, _), n)| (m.clone(), Rational::from_integer(n / &g)))
            .collect();
        (Rational::new(g, den), Poly { nvars: self.nvars, terms })
    }

    /// True when all coefficients are integers.
    pub fn is_integral(&self) -> bool {
        self.terms.iter().all(|(_, c)| c.is_integer())
    }

    /// Largest absolute value of a coefficient numerator.
    pub fn height(&self) -> BigInt {
        self.terms.iter().map(|(_, c)| c.numer().abs()).max().unwrap_or_default()
    }

    /// Pretty form with the given variable names.
    pub fn display<'a>(&'a self, names: &'a [String]) -> PolyDisplay<'a> {
        PolyDisplay { poly: self, names }
    }
}

/// Powers of substitution images, built on demand.
struct PowerCache {
    powers: Vec<Vec<Poly>>,
}

impl PowerCache {
    fn new(images: &[Poly], p: &Poly) -> Self {
        let powers = images
            .iter()
            .enumerate()
            .map(|(v, img)| {
                let e = p.degree_in_var(v).unwrap_or(0);
                let mut list = vec![Poly::one(img.nvars)];
                for i in 0..e as usize {
                    let next = list[i].product(img);
                    list.push(next);
                }
                list
            })
            .collect();
        PowerCache { powers }
    }

    fn get(&self, var: usize, e: u32) -> &Poly {
        &self.powers[var][e as usize]
    }
}

/// Multiplies each fraction by a common multiple of the denominators and
/// strips the common monomial content. Sound for zeros of homogeneous forms.
pub fn clear_denominators(fractions: &[(Poly, Poly)], _degree: u32) -> Result<Vec<Poly>> {
    if fractions.is_empty() {
        return Ok(Vec::new());
    }
    let nvars = fractions[0].0.nvars();
    let mut common = Poly::one(nvars);
    for (i, (num, den)) in fractions.iter().enumerate() {
        num.check_nvars(den)?;
        if den.is_zero() {
            return Err(Error::ZeroDenominator { index: i });
        }
        if common.exact_divide(den).is_err() {
            // Multiply only by the part of den not already present.
            let (_, dp) = den.primitive();
            let g = gcd(&common, &dp);
            let extra = dp.exact_divide(&g).expect("gcd divides");
            common = common.product(&extra);
        }
    }
    let out: Vec<Poly> = fractions
        .iter()
        .map(|(num, den)| num.product(&common.exact_divide(den).expect("common multiple")))
        .collect();
    Ok(strip_monomial_content(out))
}

/// Divides a tuple by the monomial dividing all of its nonzero entries.
pub fn strip_monomial_content(tuple: Vec<Poly>) -> Vec<Poly> {
    let content = tuple
        .iter()
        .filter(|p| !p.is_zero())
        .map(|p| p.monomial_content())
        .reduce(|a, b| a.gcd(&b));
    match content {
        Some(m) if !m.is_one() => tuple
            .into_iter()
            .map(|p| Poly {
                nvars: p.nvars,
                terms: p.terms.iter().map(|(k, c)| (m.quotient_of(k), c.clone())).collect(),
            })
            .collect(),
        _ => tuple,
    }
}

impl Add for &Poly {
    type Output = Poly;
    fn add(self, rhs: &Poly) -> Poly {
        self.try_add(rhs).expect("nvars mismatch")
    }
}

impl Sub for &Poly {
    type Output = Poly;
    fn sub(self, rhs: &Poly) -> Poly {
        self.try_sub(rhs).expect("nvars mismatch")
    }
}

impl Mul for &Poly {
    type Output = Poly;
    fn mul(self, rhs: &Poly) -> Poly {
        self.try_mul(rhs).expect("nvars mismatch")
    }
}

impl Add for Poly {
    type Output = Poly;
    fn add(self, rhs: Poly) -> Poly {
        &self + &rhs
    }
}

impl Sub for Poly {
    type Output = Poly;
    fn sub(self, rhs: Poly) -> Poly {
        &self - &rhs
    }
}

impl Mul for Poly {
    type Output = Poly;
    fn mul(self, rhs: Poly) -> Poly {
        &self * &rhs
    }
}

impl Neg for &Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        Poly { nvars: self.nvars, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c)).collect() }
    }
}

impl Neg for Poly {
    type Output = Poly;
    fn neg(self) -> Poly {
        -&self
    }
}

pub struct PolyDisplay<'a> {
    poly: &'a Poly,
    names: &'a [String],
}

impl fmt::Display for PolyDisplay<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.poly.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.poly.terms.iter().enumerate() {
            let neg = c.is_negative();
            let abs = c.abs();
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else {
                write!(f, " {} ", if neg { '-' } else { '+' })?;
            }
            let mut factors: Vec<String> = Vec::new();
            if !abs.is_one() || m.is_one() {
                factors.push(rational::display(&abs));
            }
            for (v, e) in m.exponents().enumerate() {
                match e {
                    0 => {}
                    1 => factors.push(self.names[v].clone()),
                    _ => factors.push(format!("{}^{}", self.names[v], e)),
                }
            }
            write!(f, "{}", factors.join("*"))?;
        }
        Ok(())
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let names: Vec<String> = (0..self.nvars).map(|i| format!("v{i}")).collect();
        write!(f, "{}", self.display(&names))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};

    fn v(n: usize, i: usize) -> Poly {
        Poly::var(n, i)
    }

    #[test]
    fn empty_power_is_one() {
        let p = &v(2, 0) + &v(2, 1);
        assert_eq!(p.pow(0), Poly::one(2));
    }

    #[test]
    fn difference_of_squares() {
        let d = v(1, 0);
        let one = Poly::one(1);
        assert_eq!(&(&d - &one) * &(&d + &one), &d.pow(2) - &one);
    }

    #[test]
    fn binomial_coefficient_of_t4() {
        // (a t - 1)^5, oracle: repeated multiplication, not pow().
        let (a, t) = (v(2, 0), v(2, 1));
        let base = &(&a * &t) - &Poly::one(2);
        let mut oracle = Poly::one(2);
        for _ in 0..5 {
            oracle = &oracle * &base;
        }
        assert_eq!(base.pow(5), oracle);
        let c4 = &base.pow(5).coeffs_in_var(1).unwrap()[4];
        assert_eq!(*c4, a.pow(4).scale(&int(-5)));
    }

    #[test]
    fn nvars_mismatch_is_an_error() {
        assert!(matches!(v(2, 0).try_add(&v(3, 0)), Err(Error::NvarsMismatch { .. })));
        assert!(v(2, 0).try_mul(&v(1, 0)).is_err());
    }

    #[test]
    fn substitute_odd_cancellation_and_identity() {
        let n = 3;
        let p = &v(n, 0).pow(5) + &v(n, 1).pow(5);
        let u = v(n, 2);
        assert!(p.substitute(&[(0, u.clone()), (1, -&u)]).unwrap().is_zero());
        assert_eq!(p.substitute(&[]).unwrap(), p);
        let img = &(&v(2, 0) * &v(2, 1)) - &Poly::one(2);
        assert_eq!(v(1, 0).substitute_all(std::slice::from_ref(&img)).unwrap(), img);
        assert!(p.substitute_all(&[v(1, 0), v(2, 0), v(2, 1)]).is_err());
    }

    #[test]
    fn evaluate_examples() {
        let p = &v(2, 0) + &v(2, 1);
        assert_eq!(p.evaluate(&[frac(1, 2), frac(1, 3)]).unwrap(), frac(5, 6));
        assert!(p.evaluate(&[int(1)]).is_err());
        let q = &v(2, 0).pow(3).scale(&frac(3, 7)) - &v(2, 1).pow(2);
        assert_eq!(q.evaluate(&[frac(-2, 3), frac(5, 4)]).unwrap(), frac(3, 7) * frac(-8, 27) - frac(25, 16));
    }

    #[test]
    fn coeffs_in_var_examples() {
        let d = v(1, 0);
        let p = &d.pow(2) - &Poly::one(1);
        let cs = p.coeffs_in_var(0).unwrap();
        assert_eq!(cs, vec![Poly::int(1, -1), Poly::zero(1), Poly::one(1)]);
        assert_eq!(Poly::int(1, 4).coeffs_in_var(0).unwrap().len(), 1);
    }

    #[test]
    fn exact_divide_examples() {
        let d = v(1, 0);
        let one = Poly::one(1);
        let p = &d.pow(2) - &one;
        assert_eq!(p.exact_divide(&(&d - &one)).unwrap(), &d + &one);
        assert_eq!(p.exact_divide(&(&d - &Poly::int(1, 2))), Err(Error::InexactDivision));
        assert_eq!(p.exact_divide(&Poly::zero(1)), Err(Error::DivisionByZero));
        let t = v(2, 1);
        let cubic = &(&t.pow(3) + &v(2, 0)) + &Poly::int(2, 3);
        assert_eq!((&t * &cubic).exact_divide(&t).unwrap(), cubic);
    }

    #[test]
    fn clear_denominators_examples() {
        let a = v(1, 0);
        let one = Poly::one(1);
        let out = clear_denominators(&[(one.clone(), a.clone()), (a.clone(), a.clone())], 5).unwrap();
        assert_eq!(out, vec![one.clone(), a.clone()]);
        let p = &a.pow(2) + &one;
        let same = clear_denominators(&[(p.clone(), one.clone()), (-&p, one.clone())], 5).unwrap();
        assert_eq!(same, vec![p.clone(), -&p]);
        assert!(matches!(
            clear_denominators(&[(one.clone(), Poly::zero(1))], 5),
            Err(Error::ZeroDenominator { index: 0 })
        ));
    }

    #[test]
    fn primitive_part() {
        let p = &v(2, 0).scale(&frac(-3, 2)) + &Poly::constant(2, frac(9, 4));
        let (c, pp) = p.primitive();
        assert_eq!(c, frac(-3, 4));
        assert_eq!(pp, &v(2, 0).scale(&int(2)) - &Poly::int(2, 3));
    }
}
