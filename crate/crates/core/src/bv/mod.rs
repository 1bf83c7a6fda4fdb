//! The BV operad `H_*(FLD)` and its Gerstenhaber suboperad `H_*(LD)` as a
//! term-rewriting system over exact rationals, with the formal cooperad
//! model built from the Betti tables.

mod element;
mod formal;
mod lie;
mod operad;
mod parse;

pub use element::{BVElement, Comb, Letter, Monomial};
pub use formal::{assemble_formal_model, formality_report, ld_pushout, Cocomposition, FormalCooperadModel, FormalityReport};
pub use operad::{
    basis_on, bv_basis, bv_dims, check_bv_operad, check_bv_relations, check_operad_on, ger_basis, ger_dims,
    BV_MAX_ARITY,
};
