//! Quadruple substitutions: halve the variable count of an odd-degree
//! symmetric form, lowering its degree by one per step, until six
//! variables remain; then lift base solutions back.
//!
//! Step `j` introduces shift parameters `c_j, d_j` shared by every
//! quadruple. Quadruple `i` of the input receives
//!
//! ```text
//! slot 1: x_{2i+1} + c_j      slot 2: -x_{2i+2} + d_j
//! slot 3: -x_{2i+1} - d_j     slot 4:  x_{2i+2} - c_j
//! ```
//!
//! With [`Grouping::Aligned`] (the default) slots 1–4 go to input positions
//! `4i+1, 4i+3, 4i+2, 4i+4`, so the alternating signs of the signed power
//! sums read `+, +, -, -` across the slots. Under that alignment every
//! generator that vanishes at the primitive points (`p_odd`, `q_even`) maps
//! into their span with degree one lower, and every other generator maps
//! into the span of the others. Positional placement (`4i+1 … 4i+4`) does
//! not have this property: `q_even` keeps its degree, and the second step
//! of a degree-7 reduction already fails.

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::interp;
use crate::pencil::{self, is_degenerate};
use crate::poly::Poly;
use crate::rational::Rational;
use crate::solution::ParametricSolution;
use crate::symfunc::{primitive_point, SymmetricForm};
use crate::vars::{Ambient, VarKind, VarTag};
use crate::verify::{certify, CertifyOptions, Target};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Grouping {
    #[default]
    Aligned,
    Positional,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct QuadrupleStep {
    /// One-based step number.
    pub j: usize,
    pub in_vars: usize,
    pub out_vars: usize,
    pub grouping: Grouping,
}

/// One image per slot: `sign · x + shift`, `shift ∈ {+c, +d, -d, -c}`.
#[derive(Debug, Clone, Copy)]
struct SlotImage {
    x_offset: usize,
    x_sign: i64,
    shift_is_c: bool,
    shift_sign: i64,
}

const SLOTS: [SlotImage; 4] = [
    SlotImage { x_offset: 0, x_sign: 1, shift_is_c: true, shift_sign: 1 },
    SlotImage { x_offset: 1, x_sign: -1, shift_is_c: false, shift_sign: 1 },
    SlotImage { x_offset: 0, x_sign: -1, shift_is_c: false, shift_sign: -1 },
    SlotImage { x_offset: 1, x_sign: 1, shift_is_c: true, shift_sign: -1 },
];

impl QuadrupleStep {
    pub fn new(j: usize, in_vars: usize, grouping: Grouping) -> Result<Self> {
        if in_vars == 0 || !in_vars.is_multiple_of(4) {
            return Err(Error::Unsupported {
                expected: "a variable count divisible by 4".into(),
                got: in_vars.to_string(),
            });
        }
        Ok(QuadrupleStep { j, in_vars, out_vars: in_vars / 2, grouping })
    }

    pub fn params(&self) -> [VarTag; 2] {
        [VarTag::new(VarKind::ShiftC, self.j - 1), VarTag::new(VarKind::ShiftD, self.j - 1)]
    }

    /// Input position (0-based, within the quadruple) of each slot.
    fn positions(&self) -> [usize; 4] {
        match self.grouping {
            Grouping::Aligned => [0, 2, 1, 3],
            Grouping::Positional => [0, 1, 2, 3],
        }
    }

    /// `(slot, input index)` pairs for quadruple `i`.
    fn layout(&self, i: usize) -> impl Iterator<Item = (SlotImage, usize)> + '_ {
        SLOTS.iter().zip(self.positions()).map(move |(s, p)| (*s, 4 * i + p))
    }

    /// Images of `z_1..z_{2M}` as values `(±X ± c W)` given the new
    /// coordinates `xs` (numerators), the shifts and the denominator `w`.
    fn lift(&self, xs: &[Poly], c: &Poly, d: &Poly, w: &Poly) -> Vec<Poly> {
        let n = w.nvars();
        let mut out = vec![Poly::zero(n); self.in_vars];
        let cw = c * w;
        let dw = d * w;
        for i in 0..self.in_vars / 4 {
            for (slot, pos) in self.layout(i) {
                let x = &xs[2 * i + slot.x_offset];
                let x = if slot.x_sign < 0 { -x } else { x.clone() };
                let shift = if slot.shift_is_c { &cw } else { &dw };
                out[pos] = if slot.shift_sign < 0 { &x - shift } else { &x + shift };
            }
        }
        out
    }
}

/// Applies one step. `f` lives in `[z_1..z_{2M}, params…]`; the result in
/// `[x_1..x_M, params…, c_j, d_j]`. The degree in the form variables must
/// drop.
pub fn quadruple_substitute(f: &Poly, step: &QuadrupleStep) -> Result<Poly> {
    let extra = f.nvars().checked_sub(step.in_vars).ok_or(Error::NvarsMismatch { lhs: f.nvars(), rhs: step.in_vars })?;
    let m = step.out_vars;
    let out_n = m + extra + 2;
    let c = Poly::var(out_n, m + extra);
    let d = Poly::var(out_n, m + extra + 1);
    let xs: Vec<Poly> = (0..m).map(|i| Poly::var(out_n, i)).collect();
    let mut images = step.lift(&xs, &c, &d, &Poly::one(out_n));
    images.extend((0..extra).map(|k| Poly::var(out_n, m + k)));
    let in_form: Vec<usize> = (0..step.in_vars).collect();
    let out_form: Vec<usize> = (0..m).collect();
    let before = f.degree_in(&in_form).unwrap_or(0);
    let g = f.substitute_all(&images)?;
    let after = g.degree_in(&out_form).unwrap_or(0);
    if before > 0 && after >= before {
        let top = g.component_in(&out_form, after);
        let mut names: Vec<String> = (0..m).map(|i| VarTag::form(i).to_string()).collect();
        names.extend((0..extra / 2).flat_map(|j| {
            [VarTag::new(VarKind::ShiftC, j).to_string(), VarTag::new(VarKind::ShiftD, j).to_string()]
        }));
        names.extend(step.params().iter().map(|t| t.to_string()));
        return Err(Error::DegreeDropFailed { step: step.j, degree: after, leading: top.display(&names).to_string() });
    }
    Ok(g)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReductionTrace {
    pub source: SymmetricForm,
    /// Variables kept after zero-padding restriction.
    pub kept_vars: usize,
    pub steps: Vec<QuadrupleStep>,
    /// Over `base_ambient = [y_1..y_6, c_1, d_1, …]`.
    pub base_form: Poly,
    pub base_ambient: Ambient,
    /// Restriction to `kept_vars` variables killed the form.
    pub restricted_zero: bool,
}

#[derive(Serialize)]
struct StepJson {
    j: usize,
    params: Vec<String>,
    in_vars: usize,
    out_vars: usize,
    grouping: Grouping,
}

#[derive(Serialize)]
struct TraceJson<'a> {
    steps: Vec<StepJson>,
    base_form: &'a Poly,
}

impl ReductionTrace {
    pub fn extras(&self) -> Vec<VarTag> {
        self.base_ambient.tags()[6..].to_vec()
    }

    pub fn to_json(&self) -> String {
        let j = TraceJson {
            steps: self
                .steps
                .iter()
                .map(|s| StepJson {
                    j: s.j,
                    params: s.params().iter().map(|t| t.to_string()).collect(),
                    in_vars: s.in_vars,
                    out_vars: s.out_vars,
                    grouping: s.grouping,
                })
                .collect(),
            base_form: &self.base_form,
        };
        serde_json::to_string_pretty(&j).expect("serializable")
    }
}

/// Variables needed to run `steps` halvings down to six.
pub fn required_vars(steps: u32) -> usize {
    6usize << steps
}

fn check_shape(f: &SymmetricForm, steps: u32) -> Result<()> {
    let n = f.degree();
    if n.is_multiple_of(2) || n < 5 {
        return Err(Error::Unsupported { expected: "odd degree at least 5".into(), got: format!("degree {n}") });
    }
    if f.nvars() % 2 == 1 {
        return Err(Error::OddVariableCount { nvars: f.nvars() });
    }
    let need = required_vars(steps);
    if f.nvars() < need {
        return Err(Error::InsufficientVariables { needed: need, have: f.nvars() });
    }
    Ok(())
}

/// Restricts to the first `k` variables (the rest set to zero).
pub fn restrict(f: &Poly, k: usize) -> Result<Poly> {
    let zeros: Vec<(usize, Rational)> = (k..f.nvars()).map(|i| (i, Rational::default())).collect();
    let map: Vec<usize> = (0..f.nvars()).map(|i| i.min(k.saturating_sub(1))).collect();
    Ok(f.assign(&zeros)?.remap(k, &map))
}

/// Runs `steps` quadruple substitutions after zero-padding restriction.
pub fn reduce_steps(f: &SymmetricForm, steps: u32, grouping: Grouping) -> Result<ReductionTrace> {
    check_shape(f, steps)?;
    let kept = required_vars(steps);
    let mut g = restrict(f.poly(), kept)?;
    let mut base_tags: Vec<VarTag> = (0..6).map(VarTag::form).collect();
    if g.is_zero() {
        return Ok(ReductionTrace {
            source: f.clone(),
            kept_vars: kept,
            steps: vec![],
            base_form: Poly::zero(6),
            base_ambient: Ambient::new(base_tags),
            restricted_zero: true,
        });
    }
    let mut trace = Vec::new();
    let mut vars = kept;
    for j in 1..=steps as usize {
        let step = QuadrupleStep::new(j, vars, grouping)?;
        g = quadruple_substitute(&g, &step)?;
        base_tags.extend(step.params());
        vars = step.out_vars;
        trace.push(step);
    }
    Ok(ReductionTrace {
        source: f.clone(),
        kept_vars: kept,
        steps: trace,
        base_form: g,
        base_ambient: Ambient::new(base_tags),
        restricted_zero: false,
    })
}

/// Reduces an odd-degree form to a six-variable quintic-class base whose
/// pencil endpoints vanish identically.
pub fn reduce_to_base(f: &SymmetricForm) -> Result<ReductionTrace> {
    let trace = reduce_steps(f, f.degree().saturating_sub(5), Grouping::Aligned)?;
    if !trace.restricted_zero {
        check_endpoints(&trace.base_form, &trace.extras())?;
    }
    Ok(trace)
}

/// Both primitive families of the pencil are zeros of `g`, identically.
pub fn check_endpoints(g: &Poly, extras: &[VarTag]) -> Result<()> {
    let cfg = pencil::PencilConfig::new(extras)?;
    let n = cfg.ambient().len();
    for (name, pts) in [("(a,-a,b,-b,1,-1)", cfg.u()), ("(-1,c,-c,d,-d,1)", cfg.v())] {
        let mut images = pts.to_vec();
        images.extend((0..extras.len()).map(|k| Poly::var(n, 5 + k)));
        if !g.substitute_all(&images)?.is_zero() {
            return Err(Error::BasePencilUnsupported(format!("base form does not vanish at {name}")));
        }
    }
    Ok(())
}

/// Lifts a base tuple (numerators over `den`, in the parameter ambient
/// `params`) through the trace. Returns numerators over the same `den`
/// for all source variables.
pub fn lift_solution(nums: &[Poly], den: &Poly, params: &Ambient, trace: &ReductionTrace) -> Result<Vec<Poly>> {
    let n = params.len();
    let mut xs = nums.to_vec();
    for step in trace.steps.iter().rev() {
        let [ct, dt] = step.params();
        let pos = |t: VarTag| {
            params.index_of(t).ok_or_else(|| Error::UnknownParameter(t.to_string()))
        };
        let c = Poly::var(n, pos(ct)?);
        let d = Poly::var(n, pos(dt)?);
        xs = step.lift(&xs, &c, &d, den);
    }
    xs.resize(trace.source.nvars(), Poly::zero(n));
    Ok(xs)
}

/// The zero-padded primitive point, for forms killed by restriction.
fn tautological(f: &SymmetricForm, opts: &CertifyOptions) -> Result<ParametricSolution> {
    let (a, b) = (Poly::var(2, 0), Poly::var(2, 1));
    let mut solutions = primitive_point(6, &[a, b], None)?.entries;
    solutions.resize(f.nvars(), Poly::zero(2));
    let mut sol = ParametricSolution {
        nvars: f.nvars(),
        params: vec!["a".into(), "b".into()],
        solutions,
        denominator: None,
        excluded_locus: vec![],
        certificate: None,
        zero_sum: true,
    };
    sol.certificate = Some(certify(f.poly(), &sol, &Target::Zero, opts)?);
    Ok(sol)
}

/// Parametric solution of `f = 0` for a symmetric form of odd degree
/// `n ≥ 5` in `N ≥ 6·2^(n-5)` variables, certified against `f`.
pub fn solve(f: &SymmetricForm, opts: &CertifyOptions) -> Result<ParametricSolution> {
    if f.degree() == 5 {
        check_shape(f, 0)?;
        let restricted = restrict(f.poly(), 6)?;
        if restricted.is_zero() {
            return tautological(f, opts);
        }
        let mut sol = pencil::solve_quintic(&SymmetricForm::new(restricted)?, opts)?;
        if f.nvars() > 6 {
            sol.solutions.resize(f.nvars(), Poly::zero(sol.nparams()));
            sol.nvars = f.nvars();
            sol.certificate = Some(certify(f.poly(), &sol, &Target::Zero, opts)?);
        }
        return Ok(sol);
    }
    let trace = reduce_to_base(f)?;
    if trace.restricted_zero {
        return tautological(f, opts);
    }
    let fit = interp::fit_base(&trace.base_form, &trace.extras(), &Rational::default(), opts.seed)?;
    let lifted = lift_solution(&fit.nums, &fit.den, &fit.params, &trace)?;
    let solutions = pencil::homogeneous_tuple(lifted);
    if is_degenerate(&solutions) {
        return Err(Error::DegenerateSolution);
    }
    let mut sol = ParametricSolution {
        nvars: f.nvars(),
        params: fit.params.names(),
        solutions,
        denominator: None,
        excluded_locus: fit.locus,
        certificate: None,
        zero_sum: true,
    };
    sol.certificate = Some(certify(f.poly(), &sol, &Target::Zero, opts)?);
    Ok(sol)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::symfunc::{generator, power_sum, GenKind};

    fn step(in_vars: usize, grouping: Grouping) -> QuadrupleStep {
        QuadrupleStep::new(1, in_vars, grouping).unwrap()
    }

    #[test]
    fn seventh_powers_drop_to_sixth() {
        let g = quadruple_substitute(&power_sum(7, 4), &step(4, Grouping::Aligned)).unwrap();
        assert_eq!(g.degree_in(&[0, 1]), Some(6));
        // 7 (c - d)(x1^6 - x2^6)
        let (x1, x2, c, d) = (Poly::var(4, 0), Poly::var(4, 1), Poly::var(4, 2), Poly::var(4, 3));
        let expect = (&(&c - &d) * &(&x1.pow(6) - &x2.pow(6))).scale(&int(7));
        assert_eq!(g.component_in(&[0, 1], 6), expect);
    }

    #[test]
    fn quadruple_sums_to_zero() {
        let g = quadruple_substitute(&power_sum(1, 8), &step(8, Grouping::Aligned)).unwrap();
        assert!(g.is_zero());
    }

    #[test]
    fn equal_shifts_kill_odd_power_sums() {
        let g = quadruple_substitute(&power_sum(5, 8), &step(8, Grouping::Aligned)).unwrap();
        assert!(g.assign(&[(5, int(3))]).unwrap().substitute(&[(4, Poly::int(6, 3))]).unwrap().is_zero());
    }

    #[test]
    fn signed_even_generators_drop_only_when_aligned() {
        let q4 = generator(GenKind::Q, 4, 8).unwrap();
        let aligned = quadruple_substitute(&q4, &step(8, Grouping::Aligned)).unwrap();
        assert_eq!(aligned.degree_in(&[0, 1, 2, 3]), Some(3));
        match quadruple_substitute(&q4, &step(8, Grouping::Positional)) {
            Err(Error::DegreeDropFailed { degree: 4, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn lift_composes_with_substitution() {
        // A zero of the substituted form lifts to a zero of the source.
        let f = power_sum(3, 8);
        let st = step(8, Grouping::Aligned);
        let g = quadruple_substitute(&f, &st).unwrap();
        let vals = [int(2), int(-5), int(7), int(1), int(3), int(4)];
        let n = 6;
        let xs: Vec<Poly> = vals[..4].iter().map(|v| Poly::constant(n, v.clone())).collect();
        let z = st.lift(&xs, &Poly::constant(n, vals[4].clone()), &Poly::constant(n, vals[5].clone()), &Poly::one(n));
        let zv: Vec<Rational> = z.iter().map(|p| p.constant_term()).collect();
        assert_eq!(f.evaluate(&zv).unwrap(), g.evaluate(&vals).unwrap());
    }

    #[test]
    fn quintic_in_six_needs_no_steps() {
        let f = SymmetricForm::new(power_sum(5, 6)).unwrap();
        let t = reduce_to_base(&f).unwrap();
        assert!(t.steps.is_empty());
        assert_eq!(&t.base_form, f.poly());
    }

    #[test]
    fn too_few_variables() {
        let f = SymmetricForm::new(power_sum(7, 12)).unwrap();
        assert_eq!(reduce_to_base(&f), Err(Error::InsufficientVariables { needed: 24, have: 12 }));
    }

    #[test]
    fn positional_grouping_fails_at_second_step() {
        let f = SymmetricForm::new(power_sum(7, 24)).unwrap();
        match reduce_steps(&f, 2, Grouping::Positional) {
            Err(Error::DegreeDropFailed { step: 2, degree: 6, .. }) => {}
            other => panic!("unexpected {other:?}"),
        }
    }

    #[test]
    fn seventh_power_sum_base_form() {
        let f = SymmetricForm::new(power_sum(7, 24)).unwrap();
        let t = reduce_to_base(&f).unwrap();
        assert_eq!(t.steps.len(), 2);
        assert_eq!((t.steps[0].in_vars, t.steps[1].in_vars, t.steps[1].out_vars), (24, 12, 6));
        assert_eq!(t.base_ambient.names(), ["x1", "x2", "x3", "x4", "x5", "x6", "c1", "d1", "c2", "d2"]);
        let form_vars: Vec<usize> = (0..6).collect();
        assert_eq!(t.base_form.degree_in(&form_vars), Some(5));
        let json = t.to_json();
        assert!(json.contains(r#""params": [
        "c2",
        "d2"
      ]"#));
    }

    #[test]
    fn ninth_power_sum_drops_four_times() {
        let f = SymmetricForm::new(power_sum(9, 96)).unwrap();
        let t = reduce_to_base(&f).unwrap();
        assert_eq!(t.steps.len(), 4);
        assert_eq!(t.base_form.degree_in(&(0..6).collect::<Vec<_>>()), Some(5));
        assert_eq!(t.extras().len(), 8);
    }

    #[test]
    fn zero_padding_restriction() {
        let f = power_sum(5, 8);
        assert_eq!(restrict(&f, 6).unwrap(), power_sum(5, 6));
    }
}
