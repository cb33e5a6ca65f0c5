//! Dense interpolation of a base tuple over the shift parameters.
//!
//! Eliminating `c, d` with every shift symbolic swells far beyond what the
//! final tuple needs: the intermediate fractions carry large common factors
//! that a multivariate gcd would remove, and the heuristic gcd cannot see
//! them in more than three variables. With the shifts fixed to rationals the
//! pencil runs in two variables, where cancellation is exact. The shifted
//! tuple is recovered from such specializations:
//!
//! 1. one solve along a generic line `shift = base + s·dir` bounds the total
//!    degree `D` of the tuple in the shifts;
//! 2. solves on an affine image of the simplex `{j : |j| ≤ D}` plus a few
//!    extra points give the tuple at each point up to an unknown scalar;
//! 3. the scalars are the values of one polynomial of degree `≤ D`; the
//!    requirement that every normalized coefficient, rescaled, interpolates
//!    consistently at the extra points is a linear system whose null vector
//!    fixes them;
//! 4. Newton interpolation on the simplex rebuilds each entry.
//!
//! Nothing here is trusted: the caller certifies the lifted tuple.

use std::collections::HashMap;

use num_traits::{One, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::{Error, Result};
use crate::pencil;
use crate::poly::{Monomial, Poly};
use crate::rational::{int, Rational};
use crate::vars::{Ambient, VarTag};

/// Extra (off-grid) points are added in batches of this size.
const EXTRA_BATCH: usize = 4;
/// Coefficient positions per extra point in the scalar system.
const PROBES: usize = 28;
const ATTEMPTS: u64 = 4;

/// A base tuple over `[a, b, extras…]`: `x_i = nums[i] / den`.
#[derive(Debug, Clone)]
pub struct BaseFit {
    pub params: Ambient,
    pub nums: Vec<Poly>,
    pub den: Poly,
    pub locus: Vec<Poly>,
    /// Degree bound in the shifts and number of pencil solves used.
    pub shift_degree: u32,
    pub solves: usize,
}

/// Solves the pencil for `g` (over `[y1..y6, extras…]`) with the extras kept
/// symbolic, by interpolating specialized solves.
pub fn fit_base(g: &Poly, extras: &[VarTag], q: &Rational, seed: u64) -> Result<BaseFit> {
    let mut last = None;
    for attempt in 0..ATTEMPTS {
        let mut rng = ChaCha8Rng::seed_from_u64(seed ^ (0x5eed_0000 + attempt));
        match fit_once(g, extras, q, &mut rng) {
            Ok(fit) => return Ok(fit),
            // Structural failures do not depend on the sample points.
            Err(e @ (Error::TooManyConstraints { .. } | Error::NotLinear { .. } | Error::NotQuadratic { .. })) => {
                return Err(e)
            }
            Err(e) => last = Some(e),
        }
    }
    Err(last.unwrap_or_else(|| Error::InterpolationFailed("no attempt made".into())))
}

/// The pencil solve at fixed shift values: numerators and denominator over
/// `[a, b]` (plus a free unknown when only one constraint was imposed).
fn solve_at(g: &Poly, shifts: &[Rational], q: &Rational) -> Result<(Ambient, Vec<Poly>)> {
    let mut images: Vec<Poly> = (0..6).map(|i| Poly::var(6, i)).collect();
    images.extend(shifts.iter().map(|v| Poly::constant(6, v.clone())));
    let fixed = g.substitute_all(&images)?;
    let out = pencil::pencil_solve(&fixed, &[], q)?;
    let mut tuple = out.nums;
    tuple.push(out.den);
    Ok((out.params, tuple))
}

fn fit_once(g: &Poly, extras: &[VarTag], q: &Rational, rng: &mut ChaCha8Rng) -> Result<BaseFit> {
    let m = extras.len();
    let mut solves = 0;

    // Degree bound along a generic line.
    let base: Vec<i64> = (0..m).map(|_| rng.gen_range(-40..=40)).collect();
    let dir: Vec<i64> = (0..m).map(|_| nonzero(rng, 9)).collect();
    let line = {
        let mut images: Vec<Poly> = (0..6).map(|i| Poly::var(7, i)).collect();
        let s = Poly::var(7, 6);
        images.extend((0..m).map(|k| &Poly::int(7, base[k]) + &s.scale(&int(dir[k]))));
        g.substitute_all(&images)?
    };
    let probe = pencil::pencil_solve(&line, &extras[..1], q)?;
    solves += 1;
    let s_index = probe.params.index_of(extras[0]).expect("line parameter kept");
    let degree = probe.nums.iter().chain([&probe.den]).filter_map(|p| p.degree_in_var(s_index)).max().unwrap_or(0);

    // Simplex grid `base + step·j`, `|j| ≤ degree`, kept off the hyperplanes
    // `s_k = ±s_l` and `s_k = 0` (equal shifts kill the odd power sums).
    let grid = simplex(m, degree);
    let (base, step) = (0..1000)
        .map(|_| {
            let base: Vec<i64> = (0..m).map(|_| rng.gen_range(-40..=40)).collect();
            let step: Vec<i64> = (0..m).map(|_| nonzero(rng, 5)).collect();
            (base, step)
        })
        .find(|(base, step)| grid.iter().all(|j| admissible(base, step, j)))
        .ok_or_else(|| Error::InterpolationFailed("no admissible sample grid".into()))?;
    let index: HashMap<Vec<u32>, usize> = grid.iter().cloned().enumerate().map(|(i, j)| (j, i)).collect();
    let at = |y: &[Rational]| -> Vec<Rational> { (0..m).map(|k| int(base[k]) + &y[k] * int(step[k])).collect() };
    let mut values = Vec::with_capacity(grid.len());
    let mut sample_params = None;
    for j in &grid {
        let y: Vec<Rational> = j.iter().map(|&e| int(e as i64)).collect();
        let (params, tuple) = solve_at(g, &at(&y), q)?;
        if sample_params.get_or_insert_with(|| params.clone()) != &params {
            return Err(Error::InterpolationFailed("samples disagree on the free unknowns".into()));
        }
        values.push(tuple);
        solves += 1;
    }
    let sample_params = sample_params.expect("grid is nonempty");

    // Normalize every sample at a reference coefficient of the denominator.
    let width = values[0].len();
    let reference = values[0][width - 1]
        .leading()
        .map(|(mono, _)| mono.clone())
        .ok_or_else(|| Error::InterpolationFailed("zero denominator at a sample".into()))?;
    let normalize = |tuple: &[Poly]| -> Result<Vec<Poly>> {
        let r = tuple[width - 1].coeff(&reference);
        if r.is_zero() {
            return Err(Error::InterpolationFailed("reference coefficient vanishes at a sample".into()));
        }
        let inv = r.recip();
        Ok(tuple.iter().map(|p| p.scale(&inv)).collect())
    };
    let values: Vec<Vec<Poly>> = values.iter().map(|t| normalize(t)).collect::<Result<_>>()?;

    // Scalars x_k at the nodes of a sub-simplex `|j| ≤ d`: for each probe
    // position p and each sample e off it, Σ_k L_k(e) (v_pk − v_pe) x_k = 0.
    // The smallest `d` with a solution is the true degree (the line bound
    // may overshoot when a common factor survived there); at that degree the
    // solution is unique up to scale once enough samples constrain it.
    let probes = probe_positions(&values[0], PROBES);
    let mut extra: Vec<(Vec<Rational>, Vec<Poly>)> = Vec::new();
    let mut d = 0;
    let scalars = loop {
        let size = grid.iter().take_while(|j| j.iter().sum::<u32>() <= d).count();
        let nodes = &grid[..size];
        let off_grid = grid[size..].iter().zip(&values[size..]).map(|(j, v)| (j.iter().map(|&e| int(e as i64)).collect(), v));
        let mut rows = Vec::new();
        for (y, ev) in off_grid.chain(extra.iter().map(|(y, v)| (y.clone(), v))) {
            let lag = lagrange_at(nodes, &index, &y);
            for (entry, mono) in &probes {
                let ve = ev[*entry].coeff(mono);
                rows.push((0..size).map(|k| &lag[k] * (values[k][*entry].coeff(mono) - &ve)).collect::<Vec<_>>());
            }
        }
        let null = nullspace(rows, size);
        match null.len() {
            0 if d < degree => d += 1,
            0 => return Err(Error::InterpolationFailed(format!("no consistent scaling up to shift degree {degree}"))),
            1 => break null.into_iter().next().expect("one vector"),
            _ if extra.len() >= grid.len() => {
                return Err(Error::InterpolationFailed(format!("scaling undetermined after {} extra points", extra.len())))
            }
            _ => {
                for _ in 0..EXTRA_BATCH {
                    // Integer points off the simplex keep the solves as cheap as the grid's.
                    let j = loop {
                        let j: Vec<u32> = (0..m).map(|_| rng.gen_range(0..=2 * degree + 2)).collect();
                        if j.iter().sum::<u32>() > degree && admissible(&base, &step, &j) {
                            break j;
                        }
                    };
                    let y: Vec<Rational> = j.iter().map(|&e| int(e as i64)).collect();
                    let ev = normalize(&solve_at(g, &at(&y), q)?.1)?;
                    solves += 1;
                    extra.push((y, ev));
                }
            }
        }
    };
    if scalars.iter().any(|x| x.is_zero()) {
        return Err(Error::InterpolationFailed("scaling vanishes at a grid point".into()));
    }
    let degree = d;
    let grid = &grid[..scalars.len()];

    // Newton interpolation on the simplex.
    let nb = sample_params.len();
    let n = nb + m;
    let ab_map: Vec<usize> = (0..nb).collect();
    let shift_map: Vec<usize> = (nb..n).collect();
    let basis: Vec<Poly> = grid.iter().map(|j| binomial_basis(j, &base, &step).remap(n, &shift_map)).collect();
    let scaled: Vec<Vec<Poly>> =
        values.iter().zip(&scalars).map(|(t, x)| t.iter().map(|p| p.scale(x)).collect()).collect();
    let mut tuple = vec![Poly::zero(n); width];
    for (jdx, j) in grid.iter().enumerate() {
        for (w, out) in tuple.iter_mut().enumerate() {
            let mut diff = Poly::zero(nb);
            for i in sub_indices(j) {
                let c = signed_binomial(j, &i);
                diff = &diff + &scaled[index[&i]][w].scale(&c);
            }
            if !diff.is_zero() {
                *out = &*out + &(&diff.remap(n, &ab_map) * &basis[jdx]);
            }
        }
    }
    let tuple = integral_primitive(tuple);
    let mut nums = tuple;
    let den = nums.pop().expect("denominator entry");
    if den.is_zero() {
        return Err(Error::InterpolationFailed("interpolated denominator vanishes".into()));
    }

    let mut tags = sample_params.tags().to_vec();
    tags.extend_from_slice(extras);
    let params = Ambient::new(tags);
    // The divisor lives over [a, b, extras…]; move it into `params`.
    let divisor = {
        let d = pencil::linear_divisor(g, extras, q)?;
        let map: Vec<usize> = (0..d.nvars()).map(|i| if i < 2 { i } else { i - 2 + nb }).collect();
        d.remap(n, &map)
    };
    let mut locus = Vec::new();
    for p in [divisor, den.primitive().1] {
        if !p.is_constant() && !locus.contains(&p) {
            locus.push(p);
        }
    }
    Ok(BaseFit { params, nums, den, locus, shift_degree: degree, solves })
}

/// Shift values at grid index `j` avoid `s_k = 0` and `s_k = ±s_l`.
fn admissible(base: &[i64], step: &[i64], j: &[u32]) -> bool {
    let v: Vec<i64> = (0..j.len()).map(|k| (base[k] + step[k] * j[k] as i64).abs()).collect();
    v.iter().all(|&x| x != 0) && (0..v.len()).all(|k| (k + 1..v.len()).all(|l| v[k] != v[l]))
}

fn nonzero(rng: &mut ChaCha8Rng, bound: i64) -> i64 {
    let v = rng.gen_range(1..=bound);
    if rng.gen_bool(0.5) {
        -v
    } else {
        v
    }
}

/// `{j ∈ ℕ^m : |j| ≤ d}` in graded order.
fn simplex(m: usize, d: u32) -> Vec<Vec<u32>> {
    fn rec(m: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Vec<u32>>) {
        if cur.len() == m {
            out.push(cur.clone());
            return;
        }
        for e in 0..=left {
            cur.push(e);
            rec(m, left - e, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(m, d, &mut Vec::with_capacity(m), &mut out);
    out.sort_by_key(|j| j.iter().sum::<u32>());
    out
}

/// All `i ≤ j` componentwise.
fn sub_indices(j: &[u32]) -> Vec<Vec<u32>> {
    let mut out = vec![vec![]];
    for &e in j {
        out = out.into_iter().flat_map(|p: Vec<u32>| (0..=e).map(move |k| [p.clone(), vec![k]].concat())).collect();
    }
    out
}

fn binom(n: u32, k: u32) -> u64 {
    (0..k as u64).fold(1, |acc, i| acc * (n as u64 - i) / (i + 1))
}

/// `(-1)^{|j-i|} ∏ C(j_l, i_l)`: the weight of `f(i)` in `Δ^j f(0)`.
fn signed_binomial(j: &[u32], i: &[u32]) -> Rational {
    let sign = if (j.iter().sum::<u32>() - i.iter().sum::<u32>()) % 2 == 0 { 1 } else { -1 };
    let mag: u64 = j.iter().zip(i).map(|(&a, &b)| binom(a, b)).product();
    int(sign * mag as i64)
}

/// `C(y, r)` for rational `y`.
fn binom_rational(y: &Rational, r: u32) -> Rational {
    let mut acc = Rational::one();
    for t in 0..r {
        acc = acc * (y - int(t as i64)) / int(t as i64 + 1);
    }
    acc
}

/// `∏_l C((s_l − base_l)/step_l, j_l)` as a polynomial in the shifts.
fn binomial_basis(j: &[u32], base: &[i64], step: &[i64]) -> Poly {
    let m = j.len();
    let mut out = Poly::one(m);
    for (l, &e) in j.iter().enumerate() {
        let y = (&Poly::var(m, l) - &Poly::int(m, base[l])).scale(&Rational::new(1.into(), step[l].into()));
        for t in 0..e {
            out = &out * &(&y - &Poly::int(m, t as i64)).scale(&Rational::new(1.into(), (t as i64 + 1).into()));
        }
    }
    out
}

/// Lagrange weights of the grid nodes at `y` (grid coordinates).
fn lagrange_at(grid: &[Vec<u32>], index: &HashMap<Vec<u32>, usize>, y: &[Rational]) -> Vec<Rational> {
    let mut out = vec![Rational::zero(); grid.len()];
    for j in grid {
        let bj: Rational = j.iter().zip(y).map(|(&e, v)| binom_rational(v, e)).product();
        if bj.is_zero() {
            continue;
        }
        for i in sub_indices(j) {
            out[index[&i]] += &bj * signed_binomial(j, &i);
        }
    }
    out
}

/// Spread-out `(entry, monomial)` positions of a sample tuple.
fn probe_positions(tuple: &[Poly], count: usize) -> Vec<(usize, Monomial)> {
    let mut out = Vec::new();
    let per = count.div_ceil(tuple.len()).max(1);
    for (w, p) in tuple.iter().enumerate() {
        let terms = p.terms();
        for r in 0..per.min(terms.len()) {
            out.push((w, terms[(r * 2 + 1) * terms.len() / (2 * per)].0.clone()));
        }
    }
    out
}

/// Basis of `{x : rows · x = 0}` by exact Gauss–Jordan elimination.
pub fn nullspace(mut rows: Vec<Vec<Rational>>, ncols: usize) -> Vec<Vec<Rational>> {
    let mut pivots = Vec::new();
    let mut r = 0;
    for col in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][col].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][col].recip();
        for v in rows[r].iter_mut() {
            *v *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i != r && !row[col].is_zero() {
                let f = row[col].clone();
                for (x, y) in row.iter_mut().zip(&pivot_row) {
                    if !y.is_zero() {
                        *x -= &f * y;
                    }
                }
            }
        }
        pivots.push(col);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    let free: Vec<usize> = (0..ncols).filter(|c| !pivots.contains(c)).collect();
    free.iter()
        .map(|&f| {
            let mut v = vec![Rational::zero(); ncols];
            v[f] = Rational::one();
            for (i, &pc) in pivots.iter().enumerate() {
                v[pc] = -rows[i][f].clone();
            }
            v
        })
        .collect()
}

/// Scales a projective tuple to integer coefficients with unit content.
fn integral_primitive(tuple: Vec<Poly>) -> Vec<Poly> {
    crate::pencil::homogeneous_tuple(tuple)
}
