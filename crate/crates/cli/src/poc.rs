use std::fmt::Write as _;
use std::path::PathBuf;

use serde::Serialize;
use wedgeops::hardy::{SeriesJson, VecTrigPoly};
use wedgeops::operators::{poc_basis, SpaceDescriptor};

use crate::config::MAX_DEGREE;
use crate::error::CliError;
use crate::suite::require_analytic;

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct PocOutput {
    pub valdim: usize,
    pub degree: usize,
    pub tolerance: f64,
    pub dimension: usize,
    pub degenerate: bool,
    pub basis: Vec<SeriesJson>,
}

impl PocOutput {
    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("finite values")
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "Poc in H²_{}(ℂ^{}): dimension {}{}",
            self.degree,
            self.valdim,
            self.dimension,
            if self.degenerate {
                " (degenerate input)"
            } else {
                ""
            }
        );
        for (i, b) in self.basis.iter().enumerate() {
            let _ = writeln!(s, "  b{i}:");
            for (k, c) in b.coeffs.iter().enumerate() {
                let terms: Vec<String> = c
                    .iter()
                    .map(|[re, im]| format!("{:+.6}{:+.6}i", re + 0.0, im + 0.0))
                    .collect();
                let _ = writeln!(s, "    z^{}: [{}]", b.kmin + k as i64, terms.join(", "));
            }
        }
        s
    }
}

/// Orthonormal basis of the pointwise orthogonal complement of `xis` in
/// `H²_N(ℂᵈ)`. With no symbols the complement is everything, and `dim` must
/// say which space that is.
pub fn poc(
    xis: &[VecTrigPoly],
    dim: Option<usize>,
    degree: usize,
    tol: f64,
) -> Result<PocOutput, CliError> {
    if !(tol.is_finite() && tol > 0.0 && tol < 1.0) {
        return Err(CliError::Config(format!(
            "nullspace tolerance must lie in (0, 1), got {tol}"
        )));
    }
    if degree > MAX_DEGREE {
        return Err(CliError::Config(format!(
            "--degree must be at most {MAX_DEGREE}, got {degree}"
        )));
    }
    let valdim = match (xis.first(), dim) {
        (Some(x), _) => x.valdim(),
        (None, Some(d)) => d,
        (None, None) => {
            return Err(CliError::Config(
                "give at least one --xi file or --dim".into(),
            ))
        }
    };
    if let Some(d) = dim {
        if d != valdim {
            return Err(CliError::Input(format!(
                "symbols have valdim {valdim}, but --dim is {d}"
            )));
        }
    }
    if xis.iter().any(|x| x.valdim() != valdim) {
        return Err(CliError::Input("symbols have different valdims".into()));
    }
    let space =
        SpaceDescriptor::hardy(valdim, degree).map_err(|e| CliError::Config(e.to_string()))?;
    let sub = poc_basis(&space, xis, tol)?;
    Ok(PocOutput {
        valdim,
        degree,
        tolerance: tol,
        dimension: sub.dim(),
        degenerate: sub.is_degenerate(),
        basis: sub.basis_series().iter().map(SeriesJson::from).collect(),
    })
}

pub fn cmd_poc(
    files: &[PathBuf],
    dim: Option<usize>,
    degree: usize,
    tol: f64,
) -> Result<PocOutput, CliError> {
    let mut xis = Vec::with_capacity(files.len());
    for path in files {
        let xi = crate::load_series(path)?;
        require_analytic(path, &xi)?;
        xis.push(xi);
    }
    poc(&xis, dim, degree, tol)
}
