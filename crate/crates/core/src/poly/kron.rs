//! Kronecker substitution: pack a dense integer polynomial into one big
//! integer, multiply once, unpack with balanced digits.

use num_bigint::{BigInt, BigUint, Sign};
use num_traits::Zero;

use super::Monomial;

/// Slot count above which packing is not attempted.
const MAX_SLOTS: u64 = 1 << 22;

fn bits_of(c: &BigInt) -> u64 {
    c.bits()
}

fn ceil_log2(n: usize) -> u64 {
    (usize::BITS - n.saturating_sub(1).leading_zeros()) as u64
}

fn limbs_to_biguint(limbs: Vec<u64>) -> BigUint {
    let mut digits = Vec::with_capacity(limbs.len() * 2);
    for l in limbs {
        digits.push(l as u32);
        digits.push((l >> 32) as u32);
    }
    BigUint::new(digits)
}

fn or_bits(limbs: &mut [u64], offset: u64, value: &BigUint) {
    let word = (offset / 64) as usize;
    let sh = (offset % 64) as u32;
    for (i, d) in value.iter_u64_digits().enumerate() {
        limbs[word + i] |= d << sh;
        if sh > 0 {
            let hi = d >> (64 - sh);
            if hi != 0 {
                limbs[word + i + 1] |= hi;
            }
        }
    }
}

fn get_bits(limbs: &[u64], start: u64, len: u64) -> BigUint {
    let lo = (start / 64) as usize;
    if lo >= limbs.len() {
        return BigUint::zero();
    }
    let sh = (start % 64) as u32;
    let nl = len.div_ceil(64) as usize;
    let mut out = Vec::with_capacity(nl);
    for i in 0..nl {
        let a = limbs.get(lo + i).copied().unwrap_or(0);
        let b = limbs.get(lo + i + 1).copied().unwrap_or(0);
        out.push(if sh == 0 { a } else { (a >> sh) | (b << (64 - sh)) });
    }
    let rem = len % 64;
    if rem != 0 {
        if let Some(last) = out.last_mut() {
            *last &= (1u64 << rem) - 1;
        }
    }
    limbs_to_biguint(out)
}

struct Layout {
    strides: Vec<u64>,
    slots: u64,
}

fn layout(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)], nvars: usize) -> Option<Layout> {
    let mut strides = Vec::with_capacity(nvars);
    let mut slots: u64 = 1;
    for v in 0..nvars {
        let da = a.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0) as u64;
        let db = b.iter().map(|(m, _)| m.exp(v)).max().unwrap_or(0) as u64;
        strides.push(slots);
        slots = slots.checked_mul(da + db + 1)?;
        if slots > MAX_SLOTS {
            return None;
        }
    }
    Some(Layout { strides, slots })
}

fn slot(m: &Monomial, strides: &[u64]) -> u64 {
    m.exponents().zip(strides).map(|(e, s)| e as u64 * s).sum()
}

fn pack(terms: &[(Monomial, BigInt)], lay: &Layout, width: u64) -> BigInt {
    let nlimbs = (lay.slots * width).div_ceil(64) as usize + 1;
    let mut pos = vec![0u64; nlimbs];
    let mut neg = vec![0u64; nlimbs];
    for (m, c) in terms {
        let target = if c.sign() == Sign::Minus { &mut neg } else { &mut pos };
        or_bits(target, slot(m, &lay.strides) * width, c.magnitude());
    }
    BigInt::from_biguint(Sign::Plus, limbs_to_biguint(pos)) - BigInt::from_biguint(Sign::Plus, limbs_to_biguint(neg))
}

/// Whether packing is expected to beat the sparse product.
pub(super) fn worthwhile(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)], nvars: usize) -> bool {
    if a.len() < 24 || b.len() < 24 {
        return false;
    }
    match layout(a, b, nvars) {
        Some(l) => l.slots <= 2 * (a.len() as u64) * (b.len() as u64) / 3,
        None => false,
    }
}

/// Product of two integer polynomials given as term lists; `None` when the
/// exponent box is too large to pack.
pub(super) fn product(
    a: &[(Monomial, BigInt)],
    b: &[(Monomial, BigInt)],
    nvars: usize,
) -> Option<Vec<(Monomial, BigInt)>> {
    let lay = layout(a, b, nvars)?;
    let ba = a.iter().map(|(_, c)| bits_of(c)).max().unwrap_or(0);
    let bb = b.iter().map(|(_, c)| bits_of(c)).max().unwrap_or(0);
    // |coefficient| < min(len) · 2^(ba+bb) < 2^(width-1)
    let width = ba + bb + ceil_log2(a.len().min(b.len())) + 2;
    let r = pack(a, &lay, width) * pack(b, &lay, width);
    let (sign, mag) = r.into_parts();
    let limbs: Vec<u64> = mag.iter_u64_digits().collect();
    let half = BigUint::from(1u8) << (width - 1);
    let full = BigUint::from(1u8) << width;
    let mut out = Vec::new();
    let mut carry = false;
    let total_bits = limbs.len() as u64 * 64;
    for k in 0..lay.slots {
        let start = k * width;
        if start >= total_bits && !carry {
            break;
        }
        let mut u = get_bits(&limbs, start, width);
        if carry {
            u += 1u8;
        }
        let c = if u >= half {
            carry = true;
            BigInt::from_biguint(Sign::Minus, &full - u)
        } else {
            carry = false;
            BigInt::from_biguint(Sign::Plus, u)
        };
        if c.is_zero() {
            continue;
        }
        let c = if sign == Sign::Minus { -c } else { c };
        let mut exps = vec![0u32; nvars];
        let mut rest = k;
        for v in (0..nvars).rev() {
            exps[v] = (rest / lay.strides[v]) as u32;
            rest %= lay.strides[v];
        }
        out.push((Monomial::from_exponents(&exps), c));
    }
    Some(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    fn random_terms(rng: &mut ChaCha8Rng, nvars: usize, deg: u32, bits: u32) -> Vec<(Monomial, BigInt)> {
        let mut out: Vec<(Monomial, BigInt)> = Vec::new();
        for _ in 0..60 {
            let exps: Vec<u32> = (0..nvars).map(|_| rng.gen_range(0..=deg)).collect();
            let m = Monomial::from_exponents(&exps);
            if out.iter().any(|(k, _)| *k == m) {
                continue;
            }
            let mut c = BigInt::from(rng.gen_range(-1000i64..=1000));
            c <<= rng.gen_range(0..bits);
            out.push((m, c));
        }
        out
    }

    fn naive(a: &[(Monomial, BigInt)], b: &[(Monomial, BigInt)]) -> Vec<(Monomial, BigInt)> {
        let mut acc: std::collections::BTreeMap<Monomial, BigInt> = Default::default();
        for (ma, ca) in a {
            for (mb, cb) in b {
                *acc.entry(ma.mul(mb)).or_default() += ca * cb;
            }
        }
        acc.into_iter().filter(|(_, c)| !c.is_zero()).collect()
    }

    #[test]
    fn matches_schoolbook() {
        let mut rng = ChaCha8Rng::seed_from_u64(5);
        for (nvars, deg, bits) in [(1, 40, 3), (2, 9, 200), (3, 4, 70), (2, 6, 0)] {
            let a = random_terms(&mut rng, nvars, deg, bits.max(1));
            let b = random_terms(&mut rng, nvars, deg, bits.max(1));
            let mut got = product(&a, &b, nvars).unwrap();
            got.sort_by(|x, y| x.0.cmp(&y.0));
            assert_eq!(got, naive(&a, &b));
        }
    }
}
