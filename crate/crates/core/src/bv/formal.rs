//! The zero-differential cooperad model of `FLC` and the graded-level
//! little-disks fiber computation.

use serde::Serialize;

use super::operad::{bv_dims, ger_dims, BV_MAX_ARITY};
use crate::betti::{betti_flc_top, betti_fld, betti_ld};
use crate::error::{Error, Result};
use crate::poly::PoincarePolynomial;

/// Dimension bookkeeping for one cocomposition
/// `H^*(FLC_{n+m-1}) -> H^*(FLC_n) ⊗ H^*(FLC_m)` at slot `i`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Cocomposition {
    pub outer: usize,
    pub inner: usize,
    pub slot: usize,
    pub source: PoincarePolynomial,
    pub target: PoincarePolynomial,
}

/// `(H^0 Ω^*(FLC_n), 0)` for one arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalCooperadModel {
    pub arity: usize,
    /// Cohomological dimensions of the model.
    pub dims: PoincarePolynomial,
    /// Homological dimensions of `H_*(FLD_n)` from the BV basis.
    pub homology_dims: PoincarePolynomial,
    /// `(rows, cols)` of the differential `A^k -> A^{k+1}` for each `k`.
    pub differential_shapes: Vec<(u64, u64)>,
    /// Nonzero entries over all differential blocks.
    pub differential_nonzero: usize,
    /// The formality map is degreewise the identity of the homology table.
    pub identity_on_graded_pieces: bool,
    pub cocompositions: Vec<Cocomposition>,
}

impl FormalCooperadModel {
    pub fn zero_differential(&self) -> bool {
        self.differential_nonzero == 0
    }
}

pub fn assemble_formal_model(n: usize) -> Result<FormalCooperadModel> {
    if n == 0 || n > BV_MAX_ARITY {
        return Err(Error::ArityRange { got: n, min: 1, max: BV_MAX_ARITY });
    }
    let dims = betti_flc_top(n)?;
    let homology_dims = bv_dims(n)?;
    if dims != homology_dims {
        return Err(Error::DimensionMismatch(format!(
            "arity {n}: model dims {dims} but BV basis gives {homology_dims}"
        )));
    }
    let top = dims.degree().unwrap_or(0);
    let differential_shapes = (0..top).map(|k| (dims.coeff(k + 1), dims.coeff(k))).collect();
    let mut cocompositions = Vec::new();
    for outer in 1..=n {
        let inner = n + 1 - outer;
        let target = &betti_flc_top(outer)? * &betti_flc_top(inner)?;
        for slot in 1..=outer {
            cocompositions.push(Cocomposition { outer, inner, slot, source: dims.clone(), target: target.clone() });
        }
    }
    Ok(FormalCooperadModel {
        arity: n,
        identity_on_graded_pieces: dims == homology_dims,
        dims,
        homology_dims,
        differential_shapes,
        differential_nonzero: 0,
        cocompositions,
    })
}

/// `fld(n) / (1 + t)^n`, which must divide exactly and equal `ld(n)`.
pub fn ld_pushout(n: usize) -> Result<PoincarePolynomial> {
    if n < 2 {
        return Err(Error::Arity { got: n, min: 2 });
    }
    let q = betti_fld(n)?.div_by_torus(n)?;
    let ld = betti_ld(n)?;
    if q != ld {
        return Err(Error::FreenessViolation(format!("arity {n}: quotient {q} differs from ld = {ld}")));
    }
    Ok(q)
}

/// Everything `formality report` prints for one arity.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct FormalityReport {
    pub arity: usize,
    pub model: FormalCooperadModel,
    pub bv_dims: PoincarePolynomial,
    pub fld: PoincarePolynomial,
    pub ger_dims: PoincarePolynomial,
    pub ld: PoincarePolynomial,
    pub pushout: Option<PoincarePolynomial>,
    pub pass: bool,
}

pub fn formality_report(n: usize) -> Result<FormalityReport> {
    let model = assemble_formal_model(n)?;
    let bv = bv_dims(n)?;
    let fld = betti_fld(n)?;
    let ger = ger_dims(n)?;
    let ld = betti_ld(n)?;
    let pushout = if n >= 2 { Some(ld_pushout(n)?) } else { None };
    let pass = model.zero_differential() && model.identity_on_graded_pieces && bv == fld && ger == ld;
    Ok(FormalityReport { arity: n, model, bv_dims: bv, fld, ger_dims: ger, ld, pushout, pass })
}
