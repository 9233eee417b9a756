//! Identities of the tetrad and anti-tetrad.
//!
//! Multilinear identities live in `(F S_n)^t`, one group-algebra copy per
//! association type. The submodule generated by a set of identities is
//! measured one irreducible `[λ]` at a time: an element `(x_1, …, x_t)`
//! contributes the row space of the block row `[A(x_1) … A(x_t)]`, where
//! `A(σ)` is the polytabloid matrix. Since `A(σ) = A(1)·R(σ)` for the
//! natural representation `R`, ranks agree with those of `[R(x_1) … R(x_t)]`.

pub mod isotypic;
pub mod kernel;
pub mod known;
pub mod nonlinear;

use std::collections::BTreeMap;

use thiserror::Error;

use crate::free_algebra::{AlgebraError, OpKind, QuadPolynomial, Tree, TypeTable};
use crate::linalg::LinalgError;

pub use isotypic::{
    basic_linearization, degree10_liftings, lift_identity, partition_report, partition_reports, Generator, Isotypic,
    Linearization, ModuleTracker, PartitionReport,
};
pub use kernel::{
    all_identities, closure_dimension, expansion_rank_of, extract_module_generators, sorted_candidates, Extraction,
    KernelResult,
};
pub use known::AlternatingIdentity;
pub use nonlinear::{
    confirm_special, minimize_generator_set, mixed_matrix_stats, multidegree_of_partition, nonlinear_special_candidates,
    part1_table, Part1Result, Part1Row, SpecialCandidates, SpecialRun,
};

#[derive(Debug, Error)]
pub enum IdentityError {
    #[error(transparent)]
    Algebra(#[from] AlgebraError),
    #[error(transparent)]
    Linalg(#[from] LinalgError),
    #[error("parse error: {0}")]
    Parse(String),
    #[error("terms have different multidegrees")]
    NotHomogeneous,
    #[error("unsupported input: {0}")]
    Unsupported(String),
}

/// Parses a signed sum of bracketed monomials such as
/// `{{a,b,c,d},e,f,g} - 2{g,{b,a,d,c},f,e}`, straightening every term.
pub fn parse_polynomial(s: &str, degree: usize, op: OpKind) -> Result<QuadPolynomial, IdentityError> {
    let types = TypeTable::new(degree)?;
    let chars: Vec<char> = s.chars().filter(|c| !c.is_whitespace()).collect();
    let mut p = QuadPolynomial::new(degree, op);
    let mut i = 0;
    while i < chars.len() {
        let mut sign = 1i64;
        while i < chars.len() && (chars[i] == '+' || chars[i] == '-') {
            if chars[i] == '-' {
                sign = -sign;
            }
            i += 1;
        }
        let start = i;
        while i < chars.len() && chars[i].is_ascii_digit() {
            i += 1;
        }
        let coeff: i64 = if i > start { chars[start..i].iter().collect::<String>().parse().map_err(|_| IdentityError::Parse(s.into()))? } else { 1 };
        if i < chars.len() && chars[i] == '*' {
            i += 1;
        }
        let open = i;
        let mut depth = 0i32;
        while i < chars.len() {
            match chars[i] {
                '{' | '[' => depth += 1,
                '}' | ']' => depth -= 1,
                _ => {}
            }
            i += 1;
            if depth == 0 {
                break;
            }
        }
        if depth != 0 || open == i {
            return Err(IdentityError::Parse(s.into()));
        }
        let t: Tree = chars[open..i].iter().collect::<String>().parse()?;
        if t.degree() != degree {
            return Err(IdentityError::Parse(format!("term of wrong degree in {s}")));
        }
        p.add_tree(&types, &t, sign * coeff);
    }
    Ok(p)
}

/// True when the full expansion over Z vanishes.
pub fn verify_identity(p: &QuadPolynomial) -> bool {
    match TypeTable::new(p.degree) {
        Ok(types) => p.expand(&types).is_empty(),
        Err(_) => false,
    }
}

/// Expansion of `Σ ε(σ) σ·p` over permutations `σ` of the `alternated`
/// labels, collected on words whose alternated letters are sorted.
pub fn alternating_expansion(p: &QuadPolynomial, alternated: &[u8]) -> BTreeMap<Vec<u8>, i64> {
    let types = TypeTable::new(p.degree).expect("valid degree");
    let mut acc: BTreeMap<Vec<u8>, i64> = BTreeMap::new();
    for (w, c) in p.expand(&types) {
        let positions: Vec<usize> = (0..w.len()).filter(|&k| alternated.contains(&w[k])).collect();
        let letters: Vec<u8> = positions.iter().map(|&k| w[k]).collect();
        if letters.len() != alternated.len() {
            *acc.entry(w).or_insert(0) += c;
            continue;
        }
        let mut sorted = letters.clone();
        sorted.sort_unstable();
        if sorted.windows(2).any(|x| x[0] == x[1]) {
            continue;
        }
        let sign = crate::symmetric_group::permutation_sign(&letters.iter().map(|x| sorted.binary_search(x).expect("present") as u8).collect::<Vec<_>>());
        let mut key = w.clone();
        for (&k, &x) in positions.iter().zip(&sorted) {
            key[k] = x;
        }
        *acc.entry(key).or_insert(0) += sign * c;
    }
    acc.retain(|_, c| *c != 0);
    acc
}

/// True when the alternating sum over `alternated` expands to zero.
pub fn verify_alternating(p: &QuadPolynomial, alternated: &[u8]) -> bool {
    alternating_expansion(p, alternated).is_empty()
}
