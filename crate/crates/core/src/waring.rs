//! `F(x) = q` for a symmetric form of odd degree `n` in `6·2^(n-4)`
//! variables.
//!
//! One more quadruple step than the homogeneous case is run, leaving a
//! quartic-class base `G(y1..y6) = q` carrying `2(n-4)` shifts; `q` rides
//! along unchanged since each step is an identity of polynomials. The
//! pencil through the two primitive families of `G` has vanishing `t^0`
//! and `t^4` coefficients, so `G(tu + v) = t(K0 + K1 t + K2 t^2)`:
//!
//! * `q ≠ 0`: `K2 = 0` is linear in `(c, d)`, `K1 = 0` quadratic with the
//!   known root `(1, 1)`; then `t = q / K0`. Parameters: `a, b` and the
//!   shifts, `2n - 6` in all. The tuple is rational, over one denominator.
//! * `q = 0`: only `K2` is annihilated, `d` stays free and `t = -K0 / K1`,
//!   giving `2n - 5` parameters; should that fail, the homogeneous pipeline
//!   on the zero-padded form is used instead.

use num_traits::Zero;

use crate::error::{Error, Result};
use crate::interp;
use crate::pencil::{self, is_degenerate};
use crate::poly::Poly;
use crate::rational::{self, Rational};
use crate::reduce::{self, Grouping};
use crate::solution::{CertificateKind, ParametricSolution};
use crate::symfunc::SymmetricForm;
use crate::verify::{certify, CertifyOptions, Target};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WaringProblem {
    form: SymmetricForm,
    q: Rational,
}

impl WaringProblem {
    pub fn new(form: SymmetricForm, q: Rational) -> Result<Self> {
        let n = form.degree();
        if n.is_multiple_of(2) || n < 5 {
            return Err(Error::Unsupported { expected: "odd degree at least 5".into(), got: format!("degree {n}") });
        }
        let need = Self::required_vars(n);
        if form.nvars() != need {
            return Err(Error::Unsupported {
                expected: format!("{need} variables for degree {n}"),
                got: format!("{} variables", form.nvars()),
            });
        }
        Ok(WaringProblem { form, q })
    }

    /// `6·2^(n-4)`.
    pub fn required_vars(degree: u32) -> usize {
        reduce::required_vars(degree.saturating_sub(4))
    }

    pub fn form(&self) -> &SymmetricForm {
        &self.form
    }

    pub fn q(&self) -> &Rational {
        &self.q
    }

    /// The parameter count the construction guarantees.
    pub fn promised_params(&self) -> usize {
        2 * self.form.degree() as usize - 6
    }
}

/// Maps pencil failures to the annihilation stage that produced them.
fn staged(e: Error) -> Error {
    let stage = match &e {
        Error::NotLinear { .. } | Error::DegenerateLinear => "linear annihilation",
        Error::NotQuadratic { .. } | Error::KnownRootMissing => "quadratic annihilation",
        Error::TooManyConstraints { .. } => "pencil shape",
        Error::DegenerateT(_) => "solve for t",
        Error::EndpointNotZero { .. } | Error::BasePencilUnsupported(_) => "primitive endpoints",
        Error::InterpolationFailed(_) => "shift interpolation",
        _ => return e,
    };
    Error::StageUnsolvable { stage: stage.into(), reason: e.to_string() }
}

/// Certified solution of `F(x) = q` with at least `2n - 6` parameters.
pub fn solve_waring(prob: &WaringProblem, opts: &CertifyOptions) -> Result<ParametricSolution> {
    if prob.q.is_zero() {
        return match wide(prob, opts) {
            Ok(sol) => Ok(sol),
            Err(Error::CertificationFailed(m)) => Err(Error::CertificationFailed(m)),
            Err(_) => homogeneous_route(prob, opts),
        };
    }
    wide(prob, opts)
}

/// The construction described in the module docs.
fn wide(prob: &WaringProblem, opts: &CertifyOptions) -> Result<ParametricSolution> {
    let f = &prob.form;
    let trace = reduce::reduce_steps(f, f.degree() - 4, Grouping::Aligned)?;
    if trace.restricted_zero {
        return Err(Error::StageUnsolvable { stage: "reduction".into(), reason: "form vanishes on the kept variables".into() });
    }
    let extras = trace.extras();
    reduce::check_endpoints(&trace.base_form, &extras).map_err(staged)?;
    let fit = interp::fit_base(&trace.base_form, &extras, &prob.q, opts.seed).map_err(staged)?;
    let lifted = reduce::lift_solution(&fit.nums, &fit.den, &fit.params, &trace)?;
    let (solutions, denominator) = if prob.q.is_zero() {
        (pencil::homogeneous_tuple(lifted), None)
    } else {
        normalize_fraction(lifted, fit.den)
    };
    if is_degenerate(&solutions) {
        return Err(Error::StageUnsolvable { stage: "lift".into(), reason: Error::DegenerateSolution.to_string() });
    }
    let nparams = fit.params.len();
    if nparams < prob.promised_params() {
        return Err(Error::ParameterShortfall { needed: prob.promised_params(), got: nparams });
    }
    let mut sol = ParametricSolution {
        nvars: f.nvars(),
        params: fit.params.names(),
        solutions,
        denominator,
        excluded_locus: fit.locus,
        certificate: None,
        zero_sum: true,
    };
    sol.certificate = Some(certify(f.poly(), &sol, &Target::Value(prob.q.clone()), opts)?);
    Ok(sol)
}

/// The homogeneous pipeline on the zero-padded form, re-labelled as a
/// value certificate for `q = 0`.
fn homogeneous_route(prob: &WaringProblem, opts: &CertifyOptions) -> Result<ParametricSolution> {
    let mut sol = reduce::solve(&prob.form, opts)?;
    sol.certificate = Some(certify(prob.form.poly(), &sol, &Target::Value(Rational::zero()), opts)?);
    debug_assert!(sol.certificate.as_ref().is_some_and(|c| c.kind == CertificateKind::Value));
    Ok(sol)
}

/// Integer numerators over a positive-leading denominator, sharing no
/// numeric content.
fn normalize_fraction(nums: Vec<Poly>, den: Poly) -> (Vec<Poly>, Option<Poly>) {
    let mut all = nums;
    all.push(den);
    let mut all = pencil::homogeneous_tuple(all);
    let mut den = all.pop().expect("denominator");
    if den.leading().is_some_and(|(_, c)| c < &Rational::zero()) {
        den = -&den;
        all = all.iter().map(|p| -p).collect();
    }
    if den.is_constant() {
        let inv = den.constant_term().recip();
        return (all.iter().map(|p| p.scale(&inv)).collect(), None);
    }
    (all, Some(den))
}

/// The pencil parameter `t = t_num / t_den` over `(a, b)` with the shifts
/// fixed to `shifts`; exposes the internal parametrization for checks.
pub fn pencil_parameter(prob: &WaringProblem, shifts: &[Rational]) -> Result<(Poly, Poly)> {
    let f = &prob.form;
    let trace = reduce::reduce_steps(f, f.degree() - 4, Grouping::Aligned)?;
    let extras = trace.extras();
    if shifts.len() != extras.len() {
        return Err(Error::WrongValueCount { expected: extras.len(), got: shifts.len() });
    }
    let mut images: Vec<Poly> = (0..6).map(|i| Poly::var(6, i)).collect();
    images.extend(shifts.iter().map(|v| Poly::constant(6, v.clone())));
    let g = trace.base_form.substitute_all(&images)?;
    let out = pencil::pencil_solve(&g, &[], &prob.q).map_err(staged)?;
    Ok((out.t_num, out.t_den))
}

/// `q` rendered for messages.
pub fn describe(prob: &WaringProblem) -> String {
    format!("degree {} in {} variables, q = {}", prob.form.degree(), prob.form.nvars(), rational::display(&prob.q))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{frac, int};
    use crate::solution::CertificateMethod;
    use crate::symfunc::power_sum;

    fn p5_12() -> SymmetricForm {
        SymmetricForm::new(power_sum(5, 12)).unwrap()
    }

    #[test]
    fn shape_is_checked() {
        assert!(WaringProblem::new(SymmetricForm::new(power_sum(5, 6)).unwrap(), int(1)).is_err());
        assert_eq!(WaringProblem::required_vars(7), 48);
        assert_eq!(WaringProblem::new(p5_12(), int(7)).unwrap().promised_params(), 4);
    }

    #[test]
    fn t_is_linear_in_q() {
        let shifts = [int(3), int(-5)];
        let (n1, d1) = pencil_parameter(&WaringProblem::new(p5_12(), frac(7, 3)).unwrap(), &shifts).unwrap();
        let (n2, d2) = pencil_parameter(&WaringProblem::new(p5_12(), frac(14, 3)).unwrap(), &shifts).unwrap();
        assert_eq!(&n2 * &d1, (&n1 * &d2).scale(&int(2)));
    }

    #[test]
    fn sum_of_fifth_powers_equals_seven() {
        let prob = WaringProblem::new(p5_12(), int(7)).unwrap();
        let sol = solve_waring(&prob, &CertifyOptions::default()).unwrap();
        assert!(sol.nparams() >= 4);
        let cert = sol.certificate.as_ref().unwrap();
        assert_eq!(cert.kind, CertificateKind::Value);
        assert_eq!(cert.target(), int(7));
        let sum: Poly = sol.solutions.iter().fold(Poly::zero(sol.nparams()), |acc, p| &acc + p);
        assert!(sum.is_zero());
        let point: Vec<Rational> = (0..sol.nparams()).map(|i| int(2 + 3 * i as i64)).collect();
        if let Ok(x) = sol.evaluate(&point) {
            let total: Rational = x.iter().map(|v| v * v * v * v * v).sum();
            assert_eq!(total, int(7));
        }
        if cert.method == CertificateMethod::Randomized {
            assert!(cert.samples >= 50);
        }
    }

    #[test]
    fn zero_target_is_certified_as_a_value() {
        let prob = WaringProblem::new(p5_12(), int(0)).unwrap();
        let sol = solve_waring(&prob, &CertifyOptions::default()).unwrap();
        let cert = sol.certificate.as_ref().unwrap();
        assert_eq!(cert.kind, CertificateKind::Value);
        assert!(cert.target().is_zero());
    }
}
