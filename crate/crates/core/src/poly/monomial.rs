use std::cmp::Ordering;
use std::hash::{Hash, Hasher};

use smallvec::SmallVec;

/// Exponent vector of a monomial. Ordered graded-lexicographically: total
/// degree first, then lexicographically with variable 0 most significant.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Monomial {
    exps: SmallVec<[u16; 12]>,
    degree: u32,
}

impl Monomial {
    pub fn one(nvars: usize) -> Self {
        Monomial { exps: SmallVec::from_elem(0, nvars), degree: 0 }
    }

    pub fn var(nvars: usize, index: usize, power: u16) -> Self {
        let mut m = Self::one(nvars);
        m.exps[index] = power;
        m.degree = power as u32;
        m
    }

    pub fn from_exponents(exps: &[u32]) -> Self {
        let exps: SmallVec<[u16; 12]> = exps
            .iter()
            .map(|&e| u16::try_from(e).expect("exponent overflow"))
            .collect();
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    pub(crate) fn from_raw(exps: SmallVec<[u16; 12]>) -> Self {
        let degree = exps.iter().map(|&e| e as u32).sum();
        Monomial { exps, degree }
    }

    #[inline]
    pub fn nvars(&self) -> usize {
        self.exps.len()
    }

    #[inline]
    pub fn degree(&self) -> u32 {
        self.degree
    }

    #[inline]
    pub fn exp(&self, var: usize) -> u32 {
        self.exps[var] as u32
    }

    pub fn exponents(&self) -> impl Iterator<Item = u32> + '_ {
        self.exps.iter().map(|&e| e as u32)
    }

    pub(crate) fn raw(&self) -> &[u16] {
        &self.exps
    }

    /// Degree restricted to a subset of variables.
    pub fn degree_in(&self, vars: &[usize]) -> u32 {
        vars.iter().map(|&v| self.exps[v] as u32).sum()
    }

    pub fn is_one(&self) -> bool {
        self.degree == 0
    }

    #[inline]
    pub fn mul(&self, other: &Monomial) -> Monomial {
        debug_assert_eq!(self.exps.len(), other.exps.len());
        let exps = self
            .exps
            .iter()
            .zip(other.exps.iter())
            .map(|(a, b)| a.checked_add(*b).expect("exponent overflow"))
            .collect();
        Monomial { exps, degree: self.degree + other.degree }
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.degree <= other.degree && self.exps.iter().zip(other.exps.iter()).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self.divides(other)`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        let exps = other.exps.iter().zip(self.exps.iter()).map(|(a, b)| a - b).collect();
        Monomial { exps, degree: other.degree - self.degree }
    }

    pub fn gcd(&self, other: &Monomial) -> Monomial {
        Monomial::from_raw(self.exps.iter().zip(other.exps.iter()).map(|(a, b)| *a.min(b)).collect())
    }

    pub fn with_exp(&self, var: usize, e: u32) -> Monomial {
        let mut exps = self.exps.clone();
        exps[var] = u16::try_from(e).expect("exponent overflow");
        Monomial::from_raw(exps)
    }

    /// Rebuild in an ambient of `nvars` variables, old variable `i` landing
    /// at `map[i]`. Unmapped targets get exponent 0.
    pub fn remap(&self, nvars: usize, map: &[usize]) -> Monomial {
        let mut exps: SmallVec<[u16; 12]> = SmallVec::from_elem(0, nvars);
        for (i, &e) in self.exps.iter().enumerate() {
            if e != 0 {
                exps[map[i]] += e;
            }
        }
        Monomial { exps, degree: self.degree }
    }
}

impl Hash for Monomial {
    fn hash<H: Hasher>(&self, state: &mut H) {
        self.exps.hash(state);
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree.cmp(&other.degree).then_with(|| self.exps.cmp(&other.exps))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl std::fmt::Debug for Monomial {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "{:?}", self.exps.as_slice())
    }
}
