//! Identities transcribed in bracket notation.
//!
//! Tetrad identities use braces and anti-tetrad identities use square
//! brackets. Each entry of [`TETRAD10_SPECIAL`] is summed with sign over all
//! permutations of its non-repeated variables; [`TETRAD10_SPECIAL_ALTERNATED`]
//! gives how many variables (following `a`) are alternated.

use super::{parse_polynomial, IdentityError};
use crate::free_algebra::{Multidegree, OpKind, QuadPolynomial};

pub const TETRAD7: [&str; 3] = [
    "{{a,b,c,d},e,f,g} + {{a,b,f,e},d,c,g} + {{d,c,f,e},a,b,g} - {g,{b,a,d,c},f,e} - {g,{b,a,e,f},c,d} - {g,{c,d,e,f},b,a}",
    "{{a,b,c,d},e,f,g} - {{a,b,g,f},e,c,d} + {{a,b,d,c},e,g,f} - {{a,b,f,g},e,d,c} + {{a,e,c,d},b,g,f} - {{a,e,g,f},b,d,c} + {{a,e,d,c},b,f,g} - {{a,e,f,g},b,c,d} - {a,{b,c,d,e},f,g} + {a,{b,g,f,e},c,d} - {a,{b,d,c,e},g,f} + {a,{b,f,g,e},d,c}",
    "{{a,b,c,d},e,f,g} - {{a,f,g,c},b,e,d} + {{c,b,a,d},e,g,f} + {{f,b,c,e},g,a,d} - {{f,g,a,e},c,b,d} - {{f,g,a,d},b,c,e} - {{f,g,e,d},a,b,c} + {{g,b,a,e},f,c,d} - {{g,f,c,e},a,b,d} - {{g,f,c,d},b,a,e} - {{g,f,e,d},c,b,a} + {{e,a,b,d},c,f,g} + {{e,c,b,d},a,g,f} + {a,{b,c,g,f},e,d} + {c,{b,a,f,g},e,d} - {f,{b,c,e,g},a,d} - {g,{b,a,e,f},c,d} + {e,{a,g,f,c},b,d}",
];

pub const ANTITETRAD7: [&str; 2] = [
    "[[a,b,c,d],e,f,g] - [[a,b,f,e],d,c,g] + [[d,c,f,e],a,b,g] + [g,[b,a,d,c],f,e] - [g,[b,a,e,f],c,d] + [g,[c,d,e,f],b,a]",
    "[[a,b,c,d],e,f,g] - [[a,f,g,c],b,e,d] + [[c,a,b,d],g,e,f] - [[c,b,a,f],g,e,d] - [[c,g,d,b],a,e,f] - [[c,g,e,f],a,b,d] + [[c,g,e,d],b,a,f] - [[b,a,c,f],e,d,g] - [[b,c,f,g],a,e,d] + [[b,e,d,g],a,c,f] - [[g,f,e,d],c,b,a] + [[g,d,e,f],c,a,b] - [[f,a,b,d],e,g,c] - [[f,c,e,d],g,a,b] - [a,[b,c,g,f],e,d] - [c,[a,b,d,g],e,f] + [c,[b,a,f,g],e,d] + [b,[a,c,g,d],e,f] - [b,[a,g,f,c],e,d] + [b,[a,g,d,e],c,f] + [d,[c,b,a,e],f,g]",
];

pub const ANTITETRAD7_NONLINEAR: [&str; 3] = [
    "[[a,b,c,b],d,e,a] - [[a,b,c,b],e,d,a] - [[a,d,e,a],b,c,b] - [a,[b,c,b,d],e,a] + [a,[b,c,b,e],d,a]",
    "[[a,c,a,b],b,d,e] - [[a,c,a,e],d,b,b] + [[b,b,d,e],a,c,a] + [b,[a,c,a,b],d,e] - [e,[a,c,a,d],b,b]",
    "[[a,a,b,c],d,e,f] + [[a,a,e,f],d,c,b] - [[a,a,e,b],c,d,f] - [[a,d,c,b],a,e,f] - [[f,a,a,c],d,e,b] + [[f,d,c,b],e,a,a] + [[f,d,e,b],a,a,c] - [a,[a,b,c,d],e,f] - [f,[a,a,d,e],b,c] + [f,[a,a,c,d],e,b] + [f,[a,b,e,d],a,c] - [c,[a,d,e,b],a,f]",
];

pub const TETRAD10_SPECIAL: [&str; 5] = [
    "{{{a,a,a,b},a,a,c},d,a,e} - {{{a,a,a,b},a,a,c},d,e,a} + {{{a,a,b,a},c,a,a},d,e,a} + {{{a,a,b,a},c,a,d},a,e,a} + {{{a,b,a,c},a,d,a},a,a,e} - {{{a,b,a,c},a,d,a},a,e,a} - {{a,{a,a,b,a},a,c},d,a,e} - {{a,{a,b,a,c},a,d},a,e,a} + {a,{{a,a,b,a},a,c,d},a,e} - {a,{{a,a,b,c},d,a,a},a,e} + {a,{{a,a,b,c},d,a,a},e,a} + {a,{{a,b,a,c},a,d,a},e,a}",
    "{{{a,a,b,c},a,d,a},a,e,f} - {{{a,a,b,c},a,d,a},e,a,f} - {{{a,a,b,c},d,a,a},a,e,f} + {{{a,a,b,c},d,a,a},e,a,f} - {{{a,b,a,c},a,d,a},a,e,f} + {{{a,b,a,c},a,d,a},e,a,f} + {{{a,b,a,c},d,a,a},a,e,f} - {{{a,b,a,c},d,a,a},e,a,f} - {{{b,a,c,d},a,e,a},a,f,a} - {{{b,a,c,d},e,a,a},f,a,a} - {{{b,c,a,d},a,e,a},f,a,a} - {{{b,c,a,d},e,a,a},a,f,a}",
    "{{{a,a,a,b},c,d,a},e,a,f} - {{{a,a,a,b},c,d,a},e,f,a} + {{{a,b,a,c},d,e,a},a,a,f} - {{{a,b,a,c},d,e,a},a,f,a} - {{a,{a,a,b,c},a,d},e,f,a} - {{a,{a,a,b,c},d,a},e,a,f} + {{a,{a,a,b,c},d,a},e,f,a} + {{a,{a,b,a,c},a,d},e,f,a} - {{a,{b,a,c,d},e,a},a,a,f} - {{a,{b,c,a,d},e,a},a,f,a} + {a,{{a,a,b,c},a,d,e},f,a} - {a,{{a,b,a,c},a,d,e},f,a}",
    "{{{a,a,b,a},c,a,d},e,f,a} - {{{a,b,a,c},a,a,d},e,f,a} - {{{a,b,a,c},a,d,a},e,f,a} + {{{a,b,a,c},d,a,e},a,a,f} + {{{a,b,a,c},d,e,a},a,a,f} + {{a,{a,a,b,c},d,a},e,a,f} + {{a,{a,b,a,c},a,d},e,a,f} + {{a,{a,b,a,c},d,a},e,f,a} - {{a,{b,a,c,d},a,e},a,a,f} - {{a,{b,c,a,d},a,e},a,f,a} + {{b,{a,a,c,a},d,a},e,a,f} - {a,{{a,a,b,c},d,a,e},a,f} - {a,{{a,b,a,c},a,d,e},a,f} - {a,{{a,b,a,c},a,d,e},f,a} - {a,{{a,b,a,c},d,a,e},f,a}",
    "{{{b,a,c,d},a,a,e},a,f,g} - {{{b,a,c,d},a,a,e},f,a,g} + {{{b,a,c,d},e,a,f},a,a,g} - {{{b,c,a,d},a,a,e},a,f,g} + {{{b,c,a,d},a,a,e},f,a,g} + {{{b,c,a,d},a,e,f},a,a,g}",
];

pub const ANTITETRAD10_SPECIAL: [&str; 10] = [
    "[[[a,a,b,a],a,b,a],a,a,a] - [a,[[a,a,a,b],a,b,a],a,a] - [a,[a,[a,a,b,a],a,a],b,a] + [a,[a,[a,a,b,a],b,a],a,a]",
    "[[[a,a,b,a],a,b,a],b,a,a] + [[a,[a,b,a,b],a,a],b,a,a] - [a,[[a,a,b,a],b,a,a],b,a] - [a,[[a,b,a,b],a,a,b],a,a] - [a,[[a,b,a,b],a,b,a],a,a] - [[a,a,b,a],[a,b,a,b],a,a]",
    "[[[a,a,b,a],b,b,a],a,a,a] - [a,[[a,a,a,b],a,b,b],a,a] + [a,[[a,a,b,a],a,b,b],a,a] - [a,[[a,a,b,a],b,b,a],a,a] + [a,[[a,a,b,b],a,a,b],a,a] - [a,[[a,a,b,b],a,b,a],a,a]",
    "[[[a,a,b,a],a,b,a],a,a,b] - [a,[[a,a,a,b],a,b,a],a,b] + [a,[[a,a,b,a],a,a,b],a,b] - [b,[[a,a,b,a],a,b,a],a,a] - [a,[a,[a,a,b,a],a,b],a,b] + [a,[a,[a,a,b,a],b,a],a,b]",
    "[[a,[a,a,b,a],a,a],b,b,a] - [[a,[a,a,b,a],a,b],a,a,b] + [[a,[a,a,b,a],a,b],b,a,a] + [[a,[a,a,b,b],a,a],b,a,a] - [a,[[a,a,b,a],a,b,b],a,a] - [a,[[a,a,b,b],a,b,a],a,a] + [[a,a,a,b],[a,a,b,a],a,b] - [[a,a,a,b],b,[a,a,b,a],a]",
    "[[[a,a,a,b],a,a,a],b,b,a] - [[[a,a,a,b],a,b,b],a,a,a] + [[a,[a,a,a,b],a,b],b,a,a] - [[a,[a,a,b,a],a,a],b,b,a] + [[a,[a,a,b,b],a,a],a,a,b] - [[a,[a,a,b,b],b,a],a,a,a] + [a,[[a,a,b,a],b,b,a],a,a] - [a,[[a,a,b,b],a,a,b],a,a] + [b,[a,[a,a,a,b],a,b],a,a] - [[a,a,a,b],[a,a,b,b],a,a]",
    "[[b,[a,a,a,b],a,b],a,a,b] + [[b,[a,a,b,a],a,b],a,a,b] - [b,[[a,a,a,b],b,a,a],a,b] - [b,[[a,a,b,a],a,a,b],a,b]",
    "[[[a,a,b,a],b,b,a],b,a,a] - [[a,[a,b,a,b],a,a],b,b,a] - [[a,[a,b,a,b],b,a],a,b,a] - [a,[[a,a,b,a],b,a,b],b,a] + [a,[[a,b,a,b],a,a,b],b,a]",
    "[[[a,a,b,a],b,b,a],b,a,a] - [a,[[a,a,b,a],b,b,a],b,a] - [a,[[a,b,a,b],a,b,b],a,a] + [a,[[b,a,b,b],a,a,b],a,a] - [a,[[b,a,b,b],a,b,a],a,a]",
    "[[[a,a,b,a],b,b,a],b,a,b] - [a,[[a,b,a,b],a,b,b],a,b] + [a,[[b,a,b,b],a,a,b],a,b] - [a,[[b,a,b,b],a,b,a],a,b] - [b,[[a,a,b,a],b,b,a],b,a]",
];

/// Number of alternated variables in each entry of [`TETRAD10_SPECIAL`].
pub const TETRAD10_SPECIAL_ALTERNATED: [usize; 5] = [4, 5, 5, 5, 6];

fn parse_all(texts: &[&str], degree: usize, op: OpKind) -> Vec<QuadPolynomial> {
    texts.iter().map(|s| parse_polynomial(s, degree, op).expect("transcribed identity parses")).collect()
}

/// The three degree-7 tetrad identities (6, 12 and 18 terms).
pub fn tetrad7() -> Vec<QuadPolynomial> {
    parse_all(&TETRAD7, 7, OpKind::Tetrad)
}

/// The two degree-7 anti-tetrad identities (6 and 21 terms).
pub fn antitetrad7() -> Vec<QuadPolynomial> {
    parse_all(&ANTITETRAD7, 7, OpKind::AntiTetrad)
}

/// The three nonlinear degree-7 anti-tetrad identities (5, 5 and 12 terms).
pub fn antitetrad7_nonlinear() -> Vec<QuadPolynomial> {
    parse_all(&ANTITETRAD7_NONLINEAR, 7, OpKind::AntiTetrad)
}

/// Degree-7 defining identities of an operation.
pub fn defining_identities(op: OpKind) -> Vec<QuadPolynomial> {
    match op {
        OpKind::Tetrad => tetrad7(),
        OpKind::AntiTetrad => antitetrad7(),
    }
}

/// A multihomogeneous identity summed with sign over the permutations of
/// its non-repeated variables.
#[derive(Clone, Debug)]
pub struct AlternatingIdentity {
    pub poly: QuadPolynomial,
    pub multidegree: Multidegree,
    /// Alternated variable labels.
    pub alternated: Vec<u8>,
}

/// The five degree-10 tetrad special identities.
pub fn tetrad10_special() -> Vec<AlternatingIdentity> {
    TETRAD10_SPECIAL
        .iter()
        .zip(TETRAD10_SPECIAL_ALTERNATED)
        .map(|(s, k)| {
            let poly = parse_polynomial(s, 10, OpKind::Tetrad).expect("transcribed identity parses");
            let mut md = vec![10 - k];
            md.extend(std::iter::repeat(1).take(k));
            AlternatingIdentity { poly, multidegree: Multidegree(md), alternated: (1..=k as u8).collect() }
        })
        .collect()
}

/// The ten degree-10 anti-tetrad special identities.
pub fn antitetrad10_special() -> Vec<QuadPolynomial> {
    parse_all(&ANTITETRAD10_SPECIAL, 10, OpKind::AntiTetrad)
}

/// Multidegree of a polynomial whose terms share one multidegree.
pub fn multidegree_of(p: &QuadPolynomial) -> Result<Multidegree, IdentityError> {
    let mut md: Option<Vec<usize>> = None;
    for m in p.terms.keys() {
        let k = m.args.iter().map(|&x| x as usize + 1).max().unwrap_or(0);
        let mut v = vec![0; k];
        for &x in &m.args {
            v[x as usize] += 1;
        }
        match &md {
            None => md = Some(v),
            Some(w) if *w == v => {}
            Some(_) => return Err(IdentityError::NotHomogeneous),
        }
    }
    Ok(Multidegree(md.unwrap_or_default()))
}
