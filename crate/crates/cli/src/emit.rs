//! Rendering artifacts: analyses, solutions and degeneracy reports.

use std::path::Path;

use anyhow::{Context, Result};
use serde_json::json;

use symdio::parse::{latex_poly, latex_solution, text_solution, to_expr};
use symdio::rational::{self, display};
use symdio::solution::ParametricSolution;
use symdio::symfunc::{decompose_power_sums, is_symmetric, quintic_canonical};
use symdio::{Error, Poly, SymmetricForm};

use crate::Emit;

/// Writes to `out`, or stdout when absent.
pub fn write_artifact(out: Option<&Path>, text: &str) -> Result<()> {
    match out {
        Some(path) => std::fs::write(path, text).with_context(|| format!("writing {}", path.display())),
        None => {
            use std::io::Write;
            let mut stdout = std::io::stdout().lock();
            match stdout.write_all(text.as_bytes()).and_then(|()| stdout.flush()) {
                // A reader that stops early (`| head`) is not an error.
                Err(e) if e.kind() != std::io::ErrorKind::BrokenPipe => Err(e).context("writing stdout"),
                _ => Ok(()),
            }
        }
    }
}

pub fn analysis(poly: &Poly, emit: Emit) -> String {
    let symmetric = is_symmetric(poly, poly.nvars());
    let homogeneous = poly.is_homogeneous();
    let form = SymmetricForm::new(poly.clone()).ok();
    let decomposition = form.as_ref().and_then(|f| decompose_power_sums(f).ok());
    let canonical = form.as_ref().filter(|f| f.nvars() == 6 && f.degree() == 5).and_then(|f| quintic_canonical(f).ok());
    let degree = poly.total_degree();
    match emit {
        Emit::Json => {
            let value = json!({
                "nvars": poly.nvars(),
                "degree": degree,
                "homogeneous": homogeneous,
                "symmetric": symmetric,
                "form": to_expr(poly),
                "power_sums": decomposition.as_ref().map(|d| d.expr.display(&d.gen_names()).to_string()),
                "canonical": canonical.as_ref().map(|(a1, a2)| json!({"A1": rational::to_string(a1), "A2": rational::to_string(a2)})),
            });
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
        Emit::Latex => {
            let names: Vec<String> = (1..=poly.nvars()).map(|i| format!("x{i}")).collect();
            let mut out = format!("F = {}\n", latex_poly(poly, &names));
            if let Some(d) = &decomposition {
                out += &format!("F = {}\n", latex_poly(&d.expr, &d.gen_names()));
            }
            if let Some((a1, a2)) = &canonical {
                out += &format!("A_{{1}} = {},\\quad A_{{2}} = {}\n", display(a1), display(a2));
            }
            out
        }
        Emit::Text => {
            let mut out = format!(
                "variables: {}\ndegree: {}\nhomogeneous: {homogeneous}\nsymmetric: {symmetric}\n",
                poly.nvars(),
                degree.map_or("-".to_string(), |d| d.to_string()),
            );
            if let Some(d) = &decomposition {
                out += &format!("power sums: {}\n", d.expr.display(&d.gen_names()));
            }
            if let Some((a1, a2)) = &canonical {
                out += &format!("A1 = {}, A2 = {}\n", display(a1), display(a2));
            }
            out
        }
    }
}

fn certificate_line(sol: &ParametricSolution) -> String {
    match &sol.certificate {
        None => "certificate: none".into(),
        Some(c) => {
            let what = match c.kind {
                symdio::CertificateKind::Zero => "F(x) = 0".to_string(),
                symdio::CertificateKind::Value => format!("F(x) = {}", display(&c.target())),
            };
            match c.method {
                symdio::CertificateMethod::Symbolic => format!("certificate: {what}, symbolic"),
                symdio::CertificateMethod::Randomized => {
                    format!("certificate: {what}, randomized at {} exact points (seed {})", c.samples, c.seed.unwrap_or(0))
                }
            }
        }
    }
}

pub fn write_solution(sol: &ParametricSolution, emit: Emit, out: Option<&Path>) -> Result<()> {
    let text = match emit {
        Emit::Json => sol.to_json() + "\n",
        Emit::Latex => latex_solution(sol),
        Emit::Text => {
            let mut s = format!("parameters ({}): {}\n", sol.nparams(), sol.params.join(", "));
            s += &certificate_line(sol);
            s += &format!("\nsum of coordinates vanishes: {}\n", sol.zero_sum);
            for (i, p) in sol.excluded_locus.iter().enumerate() {
                if p.len() <= 40 {
                    s += &format!("excluded locus {}: {} = 0\n", i + 1, p.display(&sol.params));
                } else {
                    s += &format!("excluded locus {}: polynomial with {} terms = 0\n", i + 1, p.len());
                }
            }
            s + &text_solution(sol)
        }
    };
    write_artifact(out, &text)?;
    if out.is_some() {
        eprintln!("{} ({} parameters)", certificate_line(sol), sol.nparams());
    }
    Ok(())
}

const WARING_NOTE: &str = "the construction for F(x) = q is a reconstruction: no proof of the \
underlying existence claim is available, so a stage without rational solutions is reported rather than worked around";

pub fn degeneracy_report(e: &Error, emit: Emit, waring: bool) -> String {
    let note = (waring && matches!(e, Error::StageUnsolvable { .. } | Error::ParameterShortfall { .. })).then_some(WARING_NOTE);
    match emit {
        Emit::Json => {
            let value = json!({
                "status": "degenerate",
                "error": e.name(),
                "message": e.to_string(),
                "annotation": note,
            });
            serde_json::to_string_pretty(&value).expect("serializable") + "\n"
        }
        _ => {
            let mut s = format!("degenerate: {}\nreason: {e}\n", e.name());
            if let Some(n) = note {
                s += &format!("note: {n}\n");
            }
            s
        }
    }
}
