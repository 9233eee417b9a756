//! Universal associative envelopes of (anti-)Jordan quadruple systems and
//! their Wedderburn analysis.
//!
//! A system is a space of matrices closed under the tetrad or anti-tetrad.
//! Its envelope is the free algebra on a basis modulo the relations
//! `abcd ± dcba − {a,b,c,d}`. For finite envelopes we compute structure
//! constants on standard monomials, the radical via the Dickson matrix, the
//! center, its primitive idempotents and the simple two-sided ideals.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_bigint::BigInt;
use num_complex::Complex64;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::Serialize;
use thiserror::Error;

use crate::free_algebra::OpKind;
use crate::linalg::Matrix;
use crate::ncgroebner::{
    graded_dimensions, groebner_basis, is_finite, normal_form, standard_monomials, Alphabet, Completion, GroebnerBasis,
    NCPoly, Word,
};
use crate::scalar::{squarefree_decomposition, Field, QuadNumber, Rational};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum EnvelopeError {
    #[error("invalid system: {0}")]
    InvalidSystem(String),
    #[error("the envelope is infinite dimensional")]
    Infinite,
    #[error("Gröbner basis truncated at degree {0}")]
    Truncated(usize),
    #[error("the algebra is not semisimple")]
    NotSemisimple,
    #[error("splitting the center requires adjoining sqrt({0})")]
    ExtensionRequired(i64),
    #[error("unsupported field extension: {0}")]
    UnsupportedExtension(String),
    #[error("no minimal left ideal of dimension {0} found")]
    NoMinimalLeftIdeal(usize),
    #[error("ideal dimension {0} is not a perfect square")]
    NotSquare(usize),
}

/// The four matrix families.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize)]
pub enum Family {
    /// All n×n matrices.
    A,
    /// Symmetric (skew-symmetric for the anti-tetrad) n×n matrices.
    B,
    /// Block matrices with blocks `M_qp`, `M_rq`, `M_pr`.
    C,
    /// Block matrices with `q = r`, `M_pq = ±M_qpᵗ` and `M_qq` (skew-)symmetric.
    D,
}

/// A family member such as `D11`, `C111`, `B-3` or `D-12`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SystemSpec {
    pub family: Family,
    /// True for the anti-tetrad variant.
    pub minus: bool,
    pub params: Vec<usize>,
}

impl SystemSpec {
    pub fn new(family: Family, minus: bool, params: Vec<usize>) -> Result<Self, EnvelopeError> {
        let s = SystemSpec { family, minus, params };
        s.validate()?;
        Ok(s)
    }

    fn validate(&self) -> Result<(), EnvelopeError> {
        let bad = |m: &str| Err(EnvelopeError::InvalidSystem(format!("{self}: {m}")));
        let want = match self.family {
            Family::A | Family::B => 1,
            Family::C => 3,
            Family::D => 2,
        };
        if self.params.len() != want {
            return bad(&format!("expected {want} parameters"));
        }
        if self.params.iter().any(|&x| x == 0) {
            return bad("parameters must be positive");
        }
        if self.family == Family::C && (self.params[0] < self.params[1] || self.params[0] < self.params[2]) {
            return bad("requires p ≥ q, r");
        }
        if self.dimension() == 0 {
            return bad("zero-dimensional system");
        }
        Ok(())
    }

    pub fn op(&self) -> OpKind {
        if self.minus {
            OpKind::AntiTetrad
        } else {
            OpKind::Tetrad
        }
    }

    /// Dimension of the system from its family formula.
    pub fn dimension(&self) -> usize {
        let p = &self.params;
        match (self.family, self.minus) {
            (Family::A, _) => p[0] * p[0],
            (Family::B, false) => p[0] * (p[0] + 1) / 2,
            (Family::B, true) => p[0] * (p[0] - 1) / 2,
            (Family::C, _) => p[0] * p[1] + p[1] * p[2] + p[2] * p[0],
            (Family::D, false) => p[0] * p[1] + p[1] * (p[1] + 1) / 2,
            (Family::D, true) => p[0] * p[1] + p[1] * (p[1] - 1) / 2,
        }
    }

    /// Size of the matrices.
    pub fn matrix_size(&self) -> usize {
        let p = &self.params;
        match self.family {
            Family::A | Family::B => p[0],
            Family::C => p[0] + p[1] + p[2],
            Family::D => p[0] + 2 * p[1],
        }
    }

    /// Basis matrices as lists of `(row, column, value)` entries.
    pub fn basis_entries(&self) -> Vec<Vec<(usize, usize, i64)>> {
        let p = &self.params;
        let sign = if self.minus { -1 } else { 1 };
        let mut out = Vec::new();
        match self.family {
            Family::A => {
                for i in 0..p[0] {
                    for j in 0..p[0] {
                        out.push(vec![(i, j, 1)]);
                    }
                }
            }
            Family::B => {
                if !self.minus {
                    for i in 0..p[0] {
                        out.push(vec![(i, i, 1)]);
                    }
                }
                for i in 0..p[0] {
                    for j in 0..i {
                        out.push(vec![(i, j, 1), (j, i, sign)]);
                    }
                }
            }
            Family::C => {
                let (pp, q, r) = (p[0], p[1], p[2]);
                for i in 0..q {
                    for j in 0..pp {
                        out.push(vec![(pp + i, j, 1)]);
                    }
                }
                for i in 0..r {
                    for j in 0..q {
                        out.push(vec![(pp + q + i, pp + j, 1)]);
                    }
                }
                for i in 0..pp {
                    for j in 0..r {
                        out.push(vec![(i, pp + q + j, 1)]);
                    }
                }
            }
            Family::D => {
                let (pp, q) = (p[0], p[1]);
                for i in 0..q {
                    for j in 0..pp {
                        out.push(vec![(pp + i, j, 1), (j, pp + q + i, sign)]);
                    }
                }
                if !self.minus {
                    for i in 0..q {
                        out.push(vec![(pp + q + i, pp + i, 1)]);
                    }
                }
                for i in 0..q {
                    for j in 0..i {
                        out.push(vec![(pp + q + i, pp + j, 1), (pp + q + j, pp + i, sign)]);
                    }
                }
            }
        }
        out
    }
}

impl fmt::Display for SystemSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let letter = match self.family {
            Family::A => 'A',
            Family::B => 'B',
            Family::C => 'C',
            Family::D => 'D',
        };
        let params: String = match self.family {
            Family::A | Family::B => self.params.iter().map(usize::to_string).collect::<Vec<_>>().join(""),
            _ if self.params.iter().all(|&x| x < 10) => self.params.iter().map(usize::to_string).collect(),
            _ => self.params.iter().map(usize::to_string).collect::<Vec<_>>().join(","),
        };
        write!(f, "{letter}{}{params}", if self.minus { "-" } else { "" })
    }
}

impl FromStr for SystemSpec {
    type Err = EnvelopeError;

    /// `A2`, `B-3`, `C111`, `D-12`; multi-digit parameters of C and D are
    /// separated by commas, as in `C10,1,1`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || EnvelopeError::InvalidSystem(s.to_string());
        let s = s.trim();
        let mut chars = s.chars();
        let family = match chars.next().ok_or_else(bad)?.to_ascii_uppercase() {
            'A' => Family::A,
            'B' => Family::B,
            'C' => Family::C,
            'D' => Family::D,
            _ => return Err(bad()),
        };
        let mut rest = chars.as_str();
        let minus = rest.starts_with('-');
        if minus {
            rest = &rest[1..];
        }
        if rest.is_empty() || !rest.chars().all(|c| c.is_ascii_digit() || c == ',') {
            return Err(bad());
        }
        let params: Vec<usize> = match family {
            Family::A | Family::B => vec![rest.parse().map_err(|_| bad())?],
            _ if rest.contains(',') => rest.split(',').map(|t| t.parse().map_err(|_| bad())).collect::<Result<_, _>>()?,
            _ => rest.chars().map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(bad)).collect::<Result<_, _>>()?,
        };
        SystemSpec::new(family, minus, params)
    }
}

/// A quadruple system given by a matrix basis and its structure constants.
#[derive(Clone, Debug)]
pub struct QuadSystem {
    pub spec: SystemSpec,
    pub alphabet: Alphabet,
    pub matrices: Vec<Matrix<Rational>>,
    /// Nonzero products `{b_i,b_j,b_k,b_l}` as coordinate vectors.
    pub products: BTreeMap<[u8; 4], Vec<Rational>>,
}

fn quad_value(op: OpKind, ms: &[Matrix<Rational>], w: [u8; 4]) -> Matrix<Rational> {
    let m = |k: u8| &ms[k as usize];
    let fwd = m(w[0]).mul(m(w[1])).mul(m(w[2])).mul(m(w[3]));
    let rev = m(w[3]).mul(m(w[2])).mul(m(w[1])).mul(m(w[0]));
    let n = fwd.rows();
    Matrix::from_fn(n, n, |i, j| match op {
        OpKind::Tetrad => fwd.get(i, j).clone() + rev.get(i, j).clone(),
        OpKind::AntiTetrad => fwd.get(i, j).clone() - rev.get(i, j).clone(),
    })
}

fn flatten(m: &Matrix<Rational>) -> Vec<Rational> {
    (0..m.rows()).flat_map(|i| m.row(i).to_vec()).collect()
}

/// Builds a family member from its matrix basis.
pub fn family(spec: &SystemSpec) -> Result<QuadSystem, EnvelopeError> {
    spec.validate()?;
    let n = spec.matrix_size();
    let entries = spec.basis_entries();
    if entries.len() != spec.dimension() || entries.len() > 26 {
        return Err(EnvelopeError::InvalidSystem(format!("{spec}: unsupported dimension {}", entries.len())));
    }
    let matrices: Vec<Matrix<Rational>> = entries
        .iter()
        .map(|es| {
            let mut m = Matrix::zeros(n, n);
            for &(i, j, v) in es {
                m.set(i, j, Rational::from_integer(v.into()));
            }
            m
        })
        .collect();
    let dim = matrices.len();
    let coords = Matrix::from_fn(n * n, dim, |r, c| flatten(&matrices[c])[r].clone());
    let op = spec.op();
    let mut products = BTreeMap::new();
    for idx in 0..dim.pow(4) {
        let w = [(idx / dim.pow(3)) as u8, (idx / dim.pow(2) % dim) as u8, (idx / dim % dim) as u8, (idx % dim) as u8];
        let v = quad_value(op, &matrices, w);
        if v.is_zero() {
            continue;
        }
        let x = coords
            .solve_right(&flatten(&v))
            .ok_or_else(|| EnvelopeError::InvalidSystem(format!("{spec} is not closed under the operation")))?;
        products.insert(w, x);
    }
    Ok(QuadSystem { spec: spec.clone(), alphabet: Alphabet::standard(dim), matrices, products })
}

impl QuadSystem {
    pub fn name(&self) -> String {
        self.spec.to_string()
    }

    pub fn dimension(&self) -> usize {
        self.matrices.len()
    }

    /// The relations `w ± rev(w) − {w}`, one per word up to reversal,
    /// omitting the zero relations of palindromes for the anti-tetrad.
    pub fn raw_relations(&self) -> Vec<NCPoly<Rational>> {
        let dim = self.dimension();
        let sign = match self.spec.op() {
            OpKind::Tetrad => Rational::one(),
            OpKind::AntiTetrad => -Rational::one(),
        };
        let mut out = Vec::new();
        for idx in 0..dim.pow(4) {
            let w = [(idx / dim.pow(3)) as u8, (idx / dim.pow(2) % dim) as u8, (idx / dim % dim) as u8, (idx % dim) as u8];
            let r = [w[3], w[2], w[1], w[0]];
            if r < w {
                continue;
            }
            let mut p = NCPoly::monomial(Word(w.to_vec()), Rational::one());
            p.add_term(Word(r.to_vec()), sign.clone());
            if let Some(x) = self.products.get(&w) {
                for (k, c) in x.iter().enumerate() {
                    p.add_term(Word(vec![k as u8]), -c.clone());
                }
            }
            if !p.is_zero() {
                out.push(p);
            }
        }
        out
    }

    /// The self-reduced defining relations of the envelope.
    pub fn relations(&self) -> Vec<NCPoly<Rational>> {
        crate::ncgroebner::self_reduce(&self.raw_relations())
    }

    /// True when every polynomial vanishes after substituting the basis
    /// matrices for the letters.
    pub fn vanishes_on_matrices(&self, polys: &[NCPoly<Rational>]) -> bool {
        let n = self.spec.matrix_size();
        polys.iter().all(|p| {
            let mut acc: Matrix<Rational> = Matrix::zeros(n, n);
            for (w, c) in &p.terms {
                let mut m = Matrix::identity(n);
                for &l in &w.0 {
                    m = m.mul(&self.matrices[l as usize]);
                }
                acc = Matrix::from_fn(n, n, |i, j| acc.get(i, j).clone() + c.clone() * m.get(i, j).clone());
            }
            acc.is_zero()
        })
    }
}

/// Envelope data: the Gröbner basis and either the standard monomials or,
/// for infinite envelopes, the graded dimensions up to the requested degree.
#[derive(Clone, Debug)]
pub struct Envelope {
    pub system: QuadSystem,
    pub relations: usize,
    pub groebner: GroebnerBasis<Rational>,
    /// Standard monomials of a finite envelope.
    pub monomials: Option<Vec<Word>>,
    /// Number of standard monomials in each degree up to `graded_up_to`.
    pub graded: Vec<usize>,
}

impl Envelope {
    pub fn dimension(&self) -> Option<usize> {
        self.monomials.as_ref().map(Vec::len)
    }

    pub fn is_truncated(&self) -> bool {
        !self.groebner.is_complete()
    }

    pub fn groebner_strings(&self) -> Vec<String> {
        self.groebner.rules.iter().map(|r| self.system.alphabet.format_poly(r)).collect()
    }
}

/// Computes the envelope. Completion stops at `degree_bound` if given; the
/// graded dimensions are listed up to `graded_up_to`.
pub fn envelope(system: &QuadSystem, degree_bound: Option<usize>, graded_up_to: usize) -> Envelope {
    let rels = system.relations();
    let gb = groebner_basis(&rels, degree_bound);
    let letters = system.dimension();
    let lms = gb.leading_words();
    let monomials = if gb.is_complete() && is_finite(&lms, letters) { standard_monomials(&lms, letters).ok() } else { None };
    let graded = graded_dimensions(&lms, letters, graded_up_to);
    Envelope { system: system.clone(), relations: rels.len(), groebner: gb, monomials, graded }
}

/// A finite-dimensional unital algebra given by structure constants:
/// `b_i b_j = Σ_k table[i][j][k] b_k`, with `b_0 = 1`.
#[derive(Clone, Debug)]
pub struct FiniteAlgebra<F> {
    pub alphabet: Alphabet,
    pub basis: Vec<Word>,
    pub table: Vec<Vec<Vec<F>>>,
}

/// Structure constants of a finite envelope on its standard monomials.
pub fn multiplication_table(env: &Envelope) -> Result<FiniteAlgebra<Rational>, EnvelopeError> {
    if let Completion::Truncated { degree_bound } = env.groebner.status {
        return Err(EnvelopeError::Truncated(degree_bound));
    }
    let basis = env.monomials.clone().ok_or(EnvelopeError::Infinite)?;
    let index: BTreeMap<&Word, usize> = basis.iter().enumerate().map(|(i, w)| (w, i)).collect();
    let d = basis.len();
    let mut table = vec![vec![vec![Rational::zero(); d]; d]; d];
    for (i, u) in basis.iter().enumerate() {
        for (j, v) in basis.iter().enumerate() {
            let prod = NCPoly::monomial(Word::concat(&[&u.0, &v.0]), Rational::one());
            for (w, c) in normal_form(&prod, &env.groebner.rules).terms {
                table[i][j][index[&w]] = c;
            }
        }
    }
    Ok(FiniteAlgebra { alphabet: env.system.alphabet.clone(), basis, table })
}

impl<F: Field> FiniteAlgebra<F> {
    pub fn dimension(&self) -> usize {
        self.basis.len()
    }

    /// The same constants in another field.
    pub fn map<G: Field>(&self, f: impl Fn(&F) -> G) -> FiniteAlgebra<G> {
        FiniteAlgebra {
            alphabet: self.alphabet.clone(),
            basis: self.basis.clone(),
            table: self.table.iter().map(|r| r.iter().map(|v| v.iter().map(&f).collect()).collect()).collect(),
        }
    }

    pub fn one(&self) -> Vec<F> {
        let mut v = vec![F::zero(); self.dimension()];
        let k = self.basis.iter().position(Word::is_empty).expect("unit monomial");
        v[k] = F::one();
        v
    }

    pub fn unit_vector(&self, k: usize) -> Vec<F> {
        let mut v = vec![F::zero(); self.dimension()];
        v[k] = F::one();
        v
    }

    pub fn mul(&self, x: &[F], y: &[F]) -> Vec<F> {
        let d = self.dimension();
        let mut out = vec![F::zero(); d];
        for i in (0..d).filter(|&i| !x[i].is_zero()) {
            for j in (0..d).filter(|&j| !y[j].is_zero()) {
                let c = x[i].clone() * y[j].clone();
                for (k, t) in self.table[i][j].iter().enumerate() {
                    if !t.is_zero() {
                        out[k] = out[k].clone() + c.clone() * t.clone();
                    }
                }
            }
        }
        out
    }

    /// Checks `(b_i b_j) b_k = b_i (b_j b_k)` on all basis triples.
    pub fn is_associative(&self) -> bool {
        let d = self.dimension();
        (0..d).all(|i| {
            (0..d).all(|j| {
                (0..d).all(|k| {
                    let ij = self.table[i][j].clone();
                    self.mul(&ij, &self.unit_vector(k)) == self.mul(&self.unit_vector(i), &self.table[j][k])
                })
            })
        })
    }

    /// Checks that `b_0` is a two-sided identity.
    pub fn is_unital(&self) -> bool {
        let one = self.one();
        (0..self.dimension()).all(|k| {
            let e = self.unit_vector(k);
            self.mul(&one, &e) == e && self.mul(&e, &one) == e
        })
    }

    /// `Δ_ij = Σ_k Σ_l c_ji^k c_kl^l`.
    pub fn dickson_matrix(&self) -> Matrix<F> {
        let d = self.dimension();
        let traces: Vec<F> = (0..d).map(|k| (0..d).fold(F::zero(), |s, l| s + self.table[k][l][l].clone())).collect();
        Matrix::from_fn(d, d, |i, j| (0..d).fold(F::zero(), |s, k| s + self.table[j][i][k].clone() * traces[k].clone()))
    }

    /// Basis of the radical: the nullspace of the Dickson matrix.
    pub fn radical(&self) -> Matrix<F> {
        self.dickson_matrix().nullspace()
    }

    pub fn is_semisimple(&self) -> bool {
        self.dickson_matrix().rank() == self.dimension()
    }

    /// Canonical basis of the center, one element per row.
    pub fn center(&self) -> Matrix<F> {
        let d = self.dimension();
        let m = Matrix::from_fn(d * d, d, |r, i| {
            let (j, k) = (r / d, r % d);
            self.table[i][j][k].clone() - self.table[j][i][k].clone()
        });
        m.nullspace()
    }

    /// Dimension of the two-sided ideal generated by `x`.
    pub fn ideal_dimension(&self, x: &[F]) -> usize {
        self.ideal_basis(x).rows()
    }

    /// Canonical basis of the two-sided ideal generated by `x`.
    pub fn ideal_basis(&self, x: &[F]) -> Matrix<F> {
        let d = self.dimension();
        let mut rows = Vec::new();
        for i in 0..d {
            let left = self.mul(&self.unit_vector(i), x);
            for j in 0..d {
                rows.push(self.mul(&left, &self.unit_vector(j)));
            }
        }
        Matrix::from_rows(rows, d).rcf()
    }

    pub fn is_central(&self, x: &[F]) -> bool {
        (0..self.dimension()).all(|j| {
            let e = self.unit_vector(j);
            self.mul(x, &e) == self.mul(&e, x)
        })
    }

    /// Formats an element in the standard monomials, lowest term first.
    pub fn format(&self, x: &[F]) -> String {
        self.alphabet.format_poly_ascending(&self.polynomial(x))
    }

    pub fn polynomial(&self, x: &[F]) -> NCPoly<F> {
        let mut p = NCPoly::zero();
        for (w, c) in self.basis.iter().zip(x) {
            p.add_term(w.clone(), c.clone());
        }
        p
    }

    /// Coordinates of a polynomial in standard monomials, if it is one.
    pub fn coordinates(&self, p: &NCPoly<F>) -> Option<Vec<F>> {
        let mut v = vec![F::zero(); self.dimension()];
        for (w, c) in &p.terms {
            let k = self.basis.iter().position(|b| b == w)?;
            v[k] = c.clone();
        }
        Some(v)
    }
}

/// Primitive central idempotents with the dimensions of their ideals.
#[derive(Clone, Debug)]
pub struct IdempotentDecomposition {
    /// The squarefree radicand adjoined, if any.
    pub radicand: Option<i64>,
    pub idempotents: Vec<Vec<QuadNumber>>,
    pub ideal_dims: Vec<usize>,
}

impl IdempotentDecomposition {
    pub fn field_name(&self) -> String {
        match self.radicand {
            None => "Q".into(),
            Some(d) => format!("Q(sqrt({d}))"),
        }
    }

    /// Checks `e² = e`, `e_i e_j = 0`, `Σ e = 1` and centrality exactly.
    pub fn verify(&self, a: &FiniteAlgebra<QuadNumber>) -> bool {
        let d = a.dimension();
        let zero = vec![QuadNumber::zero(); d];
        let mut sum = zero.clone();
        for (i, e) in self.idempotents.iter().enumerate() {
            if a.mul(e, e) != *e || !a.is_central(e) {
                return false;
            }
            for f in &self.idempotents[i + 1..] {
                if a.mul(e, f) != zero || a.mul(f, e) != zero {
                    return false;
                }
            }
            sum = sum.iter().zip(e).map(|(x, y)| x.clone() + y.clone()).collect();
        }
        sum == a.one()
    }
}

/// Polynomials over a field, coefficients from the constant term upward.
mod poly {
    use super::*;

    pub fn trim<F: Field>(mut p: Vec<F>) -> Vec<F> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }

    pub fn mul<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        if a.is_empty() || b.is_empty() {
            return Vec::new();
        }
        let mut out = vec![F::zero(); a.len() + b.len() - 1];
        for (i, x) in a.iter().enumerate() {
            for (j, y) in b.iter().enumerate() {
                out[i + j] = out[i + j].clone() + x.clone() * y.clone();
            }
        }
        trim(out)
    }

    pub fn sub<F: Field>(a: &[F], b: &[F]) -> Vec<F> {
        let n = a.len().max(b.len());
        trim((0..n).map(|i| a.get(i).cloned().unwrap_or_else(F::zero) - b.get(i).cloned().unwrap_or_else(F::zero)).collect())
    }

    pub fn divrem<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>) {
        let b = trim(b.to_vec());
        let lead = b.last().expect("nonzero divisor").inv().expect("nonzero");
        let mut r = trim(a.to_vec());
        if r.len() < b.len() {
            return (Vec::new(), r);
        }
        let mut q = vec![F::zero(); r.len() - b.len() + 1];
        while r.len() >= b.len() && !r.is_empty() {
            let k = r.len() - b.len();
            let c = r.last().expect("nonempty").clone() * lead.clone();
            for (i, x) in b.iter().enumerate() {
                r[k + i] = r[k + i].clone() - c.clone() * x.clone();
            }
            q[k] = c;
            r = trim(r);
        }
        (trim(q), r)
    }

    /// `(g, u, v)` with `u·a + v·b = g` and `g` monic.
    pub fn ext_gcd<F: Field>(a: &[F], b: &[F]) -> (Vec<F>, Vec<F>, Vec<F>) {
        let (mut r0, mut r1) = (trim(a.to_vec()), trim(b.to_vec()));
        let (mut s0, mut s1) = (vec![F::one()], Vec::new());
        let (mut t0, mut t1) = (Vec::new(), vec![F::one()]);
        while !r1.is_empty() {
            let (q, r) = divrem(&r0, &r1);
            let s = sub(&s0, &mul(&q, &s1));
            let t = sub(&t0, &mul(&q, &t1));
            (r0, r1) = (r1, r);
            (s0, s1) = (s1, s);
            (t0, t1) = (t1, t);
        }
        let inv = r0.last().expect("nonzero gcd").inv().expect("nonzero");
        let sc = |p: &[F]| trim(p.iter().map(|c| c.clone() * inv.clone()).collect());
        (sc(&r0), sc(&s0), sc(&t0))
    }
}

fn bigint_f64(x: &BigInt) -> f64 {
    x.to_f64().unwrap_or(f64::NAN)
}

/// Complex roots by the Durand–Kerner iteration.
fn approximate_roots(monic: &[f64]) -> Vec<Complex64> {
    let n = monic.len() - 1;
    let eval = |z: Complex64| monic.iter().rev().fold(Complex64::new(0.0, 0.0), |acc, &c| acc * z + c);
    let bound = 1.0 + monic[..n].iter().map(|c| c.abs()).fold(0.0, f64::max);
    let seed = Complex64::new(0.4, 0.9);
    let mut roots: Vec<Complex64> = (0..n).map(|k| seed.powu(k as u32) * bound.min(2.0)).collect();
    for _ in 0..2000 {
        let mut delta = 0.0f64;
        for i in 0..n {
            let mut den = Complex64::new(1.0, 0.0);
            for j in 0..n {
                if i != j {
                    den *= roots[i] - roots[j];
                }
            }
            let step = eval(roots[i]) / den;
            roots[i] -= step;
            delta = delta.max(step.norm());
        }
        if delta < 1e-14 {
            break;
        }
    }
    roots
}

/// Factors a squarefree monic polynomial over Q into monic irreducible
/// factors. Candidate factors come from approximate complex roots and are
/// confirmed by exact division; what remains is irreducible.
fn factor_over_q(m: &[Rational]) -> Vec<Vec<Rational>> {
    let n = m.len() - 1;
    if n <= 1 {
        return vec![m.to_vec()];
    }
    // P(s) = L^n m(s/L) is monic with integer coefficients.
    let l = m.iter().fold(BigInt::one(), |acc, c| acc.lcm(c.denom()));
    let lr = Rational::from_integer(l.clone());
    let scaled: Vec<Rational> = m.iter().enumerate().map(|(i, c)| c.clone() * num_traits::pow(lr.clone(), n - i)).collect();
    let approx: Vec<f64> = scaled.iter().map(|c| bigint_f64(&c.to_integer())).collect();
    let mut roots = approximate_roots(&approx);
    let mut rest = scaled.clone();
    let mut factors = Vec::new();
    'outer: loop {
        let k_max = (rest.len() - 1) / 2;
        for k in 1..=k_max {
            for subset in subsets(roots.len(), k) {
                let mut f = vec![Complex64::new(1.0, 0.0)];
                for &i in &subset {
                    let mut g = vec![Complex64::new(0.0, 0.0); f.len() + 1];
                    for (j, c) in f.iter().enumerate() {
                        g[j + 1] += c;
                        g[j] -= c * roots[i];
                    }
                    f = g;
                }
                if f.iter().any(|c| c.im.abs() > 1e-6 * (1.0 + c.re.abs())) {
                    continue;
                }
                let cand: Vec<Rational> = f.iter().map(|c| Rational::from_integer(BigInt::from(c.re.round() as i64))).collect();
                let (q, r) = poly::divrem(&rest, &cand);
                if r.is_empty() {
                    factors.push(cand);
                    rest = q;
                    let keep: Vec<Complex64> =
                        roots.iter().enumerate().filter(|(i, _)| !subset.contains(i)).map(|(_, z)| *z).collect();
                    roots = keep;
                    continue 'outer;
                }
            }
        }
        break;
    }
    if rest.len() > 1 {
        factors.push(rest);
    }
    // f(t) = L^{-k} F(L t)
    factors
        .into_iter()
        .map(|f| {
            let k = f.len() - 1;
            f.iter().enumerate().map(|(i, c)| c.clone() / num_traits::pow(lr.clone(), k - i)).collect()
        })
        .collect()
}

fn subsets(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::new(), &mut out);
    out
}

/// Rational square root, if it exists.
fn rational_sqrt(q: &Rational) -> Option<Rational> {
    if q.is_negative() {
        return None;
    }
    let n = q.numer().sqrt();
    let d = q.denom().sqrt();
    (&n * &n == *q.numer() && &d * &d == *q.denom()).then(|| Rational::new(n, d))
}

/// Monic minimal polynomial of `x` inside the unital subalgebra with
/// identity `e`, coefficients from the constant term upward.
fn minimal_polynomial<F: Field>(a: &FiniteAlgebra<F>, e: &[F], x: &[F]) -> Vec<F> {
    let d = a.dimension();
    let mut powers: Vec<Vec<F>> = vec![e.to_vec()];
    loop {
        let next = a.mul(powers.last().expect("nonempty"), x);
        let cols = powers.len();
        let m = Matrix::from_fn(d, cols, |i, j| powers[j][i].clone());
        if let Some(c) = m.solve_right(&next) {
            let mut p: Vec<F> = c.into_iter().map(|v| -v).collect();
            p.push(F::one());
            return p;
        }
        powers.push(next);
    }
}

/// Evaluates `p(x)` with `e` as the identity.
fn evaluate<F: Field>(a: &FiniteAlgebra<F>, p: &[F], e: &[F], x: &[F]) -> Vec<F> {
    let mut acc = vec![F::zero(); a.dimension()];
    for c in p.iter().rev() {
        acc = a.mul(&acc, x);
        acc = acc.iter().zip(e).map(|(s, t)| s.clone() + c.clone() * t.clone()).collect();
    }
    acc
}

/// Orthogonal idempotents summing to `e`, one per factor of the minimal
/// polynomial `m = Π f_i` of `x`.
fn crt_idempotents<F: Field>(a: &FiniteAlgebra<F>, factors: &[Vec<F>], m: &[F], e: &[F], x: &[F]) -> Vec<Vec<F>> {
    factors
        .iter()
        .map(|f| {
            let (g, _) = poly::divrem(m, f);
            let (_, _, v) = poly::ext_gcd(f, &g);
            let (_, h) = poly::divrem(&poly::mul(&v, &g), m);
            evaluate(a, &h, e, x)
        })
        .collect()
}

fn span_rank<F: Field>(rows: &[Vec<F>], d: usize) -> usize {
    Matrix::from_rows(rows.to_vec(), d).rank()
}

/// Splits the center of a semisimple algebra into primitive idempotents.
/// First over Q using minimal polynomials of central elements; components
/// that are quadratic fields are then split after adjoining `√D`.
pub fn split_center(a: &FiniteAlgebra<Rational>, allow_extension: bool) -> Result<IdempotentDecomposition, EnvelopeError> {
    if !a.is_semisimple() {
        return Err(EnvelopeError::NotSemisimple);
    }
    let d = a.dimension();
    let z = a.center();
    let zrows: Vec<Vec<Rational>> = z.row_vecs();
    let mut pending = vec![a.one()];
    // (idempotent, generator, minimal polynomial) of each field component.
    let mut fields: Vec<(Vec<Rational>, Vec<Rational>, Vec<Rational>)> = Vec::new();
    while let Some(e) = pending.pop() {
        let ez: Vec<Vec<Rational>> = zrows.iter().map(|r| a.mul(&e, r)).collect();
        let dim = span_rank(&ez, d);
        if dim == 1 {
            fields.push((e.clone(), e.clone(), vec![-Rational::one(), Rational::one()]));
            continue;
        }
        let mut candidates = ez.clone();
        for i in 0..ez.len() {
            for j in i + 1..ez.len() {
                candidates.push(ez[i].iter().zip(&ez[j]).map(|(x, y)| x.clone() + y.clone()).collect());
            }
        }
        let mut done = false;
        for x in &candidates {
            let m = minimal_polynomial(a, &e, x);
            let factors = factor_over_q(&m);
            if factors.len() > 1 {
                pending.extend(crt_idempotents(a, &factors, &m, &e, x));
                done = true;
                break;
            }
            if m.len() - 1 == dim {
                fields.push((e.clone(), x.clone(), m));
                done = true;
                break;
            }
        }
        if !done {
            return Err(EnvelopeError::UnsupportedExtension(format!("could not split a central component of dimension {dim}")));
        }
    }
    let mut radicand: Option<i64> = None;
    for (_, _, m) in &fields {
        match m.len() - 1 {
            1 => {}
            2 => {
                let disc = m[1].clone() * m[1].clone() - Rational::from_integer(4.into()) * m[0].clone();
                let (sq, _) = squarefree_decomposition(&(disc.numer() * disc.denom()));
                let dd = sq.to_i64().ok_or_else(|| EnvelopeError::UnsupportedExtension(format!("radicand {sq}")))?;
                match radicand {
                    None => radicand = Some(dd),
                    Some(r) if r == dd => {}
                    Some(r) => return Err(EnvelopeError::UnsupportedExtension(format!("sqrt({r}) and sqrt({dd})"))),
                }
            }
            k => return Err(EnvelopeError::UnsupportedExtension(format!("central field of degree {k}"))),
        }
    }
    if let (Some(r), false) = (radicand, allow_extension) {
        return Err(EnvelopeError::ExtensionRequired(r));
    }
    let aq = a.map(|c| QuadNumber::rational(c.clone()));
    let lift = |v: &[Rational]| -> Vec<QuadNumber> { v.iter().map(|c| QuadNumber::rational(c.clone())).collect() };
    let mut idempotents = Vec::new();
    for (e, x, m) in &fields {
        if m.len() == 2 {
            idempotents.push(lift(e));
            continue;
        }
        let r = radicand.expect("set for quadratic components");
        let disc = m[1].clone() * m[1].clone() - Rational::from_integer(4.into()) * m[0].clone();
        let s = rational_sqrt(&(disc / Rational::from_integer(r.into()))).expect("disc = s²·D");
        let half = Rational::new(1.into(), 2.into());
        let alpha = QuadNumber::new(-m[1].clone() * half.clone(), s.clone() * half.clone(), r);
        let alpha_bar = alpha.conj();
        let (eq, xq) = (lift(e), lift(x));
        for (root, other) in [(&alpha, &alpha_bar), (&alpha_bar, &alpha)] {
            let scale = (root.clone() - other.clone()).inv().expect("distinct roots");
            let v: Vec<QuadNumber> =
                xq.iter().zip(&eq).map(|(xi, ei)| (xi.clone() - other.clone() * ei.clone()) * scale.clone()).collect();
            idempotents.push(v);
        }
    }
    let mut pairs: Vec<(usize, Vec<QuadNumber>)> = idempotents.into_iter().map(|e| (aq.ideal_dimension(&e), e)).collect();
    pairs.sort_by(|x, y| x.0.cmp(&y.0).then_with(|| format!("{:?}", x.1).cmp(&format!("{:?}", y.1))));
    Ok(IdempotentDecomposition {
        radicand,
        ideal_dims: pairs.iter().map(|p| p.0).collect(),
        idempotents: pairs.into_iter().map(|p| p.1).collect(),
    })
}

/// Dimensions of the two-sided ideals generated by each idempotent.
pub fn simple_ideal_dimensions(a: &FiniteAlgebra<QuadNumber>, dec: &IdempotentDecomposition) -> Vec<usize> {
    dec.idempotents.iter().map(|e| a.ideal_dimension(e)).collect()
}

/// Elements `E_ij` of a simple ideal acting on a minimal left ideal with
/// basis `e_1, …, e_m` by `E_ij e_k = δ_jk e_i`.
#[derive(Clone, Debug)]
pub struct MatrixUnits<F> {
    pub size: usize,
    /// Generator of the minimal left ideal.
    pub generator: Vec<F>,
    pub left_basis: Vec<Vec<F>>,
    /// `E_ij` at index `i·m + j`.
    pub units: Vec<Vec<F>>,
}

impl<F: Field> MatrixUnits<F> {
    /// Checks `E_ij E_kl = δ_jk E_il` on all pairs.
    pub fn verify(&self, a: &FiniteAlgebra<F>) -> bool {
        let m = self.size;
        let zero = vec![F::zero(); a.dimension()];
        (0..m * m).all(|x| {
            (0..m * m).all(|y| {
                let (i, j, k, l) = (x / m, x % m, y / m, y % m);
                let p = a.mul(&self.units[x], &self.units[y]);
                if j == k {
                    p == self.units[i * m + l]
                } else {
                    p == zero
                }
            })
        })
    }
}

/// Matrix units for the simple ideal generated by the central idempotent
/// `e`. The minimal left ideal is generated by the first basis element of
/// the ideal (in basis order, skipping 1) whose left ideal has dimension
/// `m`; elements `e·b_k` are tried after the monomials themselves.
pub fn matrix_unit_isomorphism<F: Field>(a: &FiniteAlgebra<F>, e: &[F]) -> Result<MatrixUnits<F>, EnvelopeError> {
    let d = a.dimension();
    let ideal = a.ideal_basis(e);
    let n = ideal.rows();
    let m = (1..=n).find(|k| k * k == n).ok_or(EnvelopeError::NotSquare(n))?;
    let in_ideal = |x: &[F]| span_rank(&[ideal.row_vecs(), vec![x.to_vec()]].concat(), d) == n;
    let one_idx = a.basis.iter().position(Word::is_empty).expect("unit monomial");
    let mut candidates: Vec<Vec<F>> = (0..d).filter(|&k| k != one_idx).map(|k| a.unit_vector(k)).filter(|x| in_ideal(x)).collect();
    candidates.extend((0..d).map(|k| a.mul(e, &a.unit_vector(k))).filter(|x| x.iter().any(|c| !c.is_zero())));
    for x in candidates {
        let mut left: Vec<Vec<F>> = Vec::new();
        for i in 0..d {
            let y = a.mul(&a.unit_vector(i), &x);
            if span_rank(&[left.clone(), vec![y.clone()]].concat(), d) > left.len() {
                left.push(y);
            }
        }
        if left.len() != m {
            continue;
        }
        let gens = ideal.row_vecs();
        // Column k of the system: the products v_k e_l, stacked over l.
        let products: Vec<Vec<Vec<F>>> = gens.iter().map(|v| left.iter().map(|el| a.mul(v, el)).collect()).collect();
        let sys = Matrix::from_fn(m * d, n, |r, k| products[k][r / d][r % d].clone());
        let mut units = Vec::with_capacity(m * m);
        for i in 0..m {
            for j in 0..m {
                let mut rhs = vec![F::zero(); m * d];
                for (t, c) in left[i].iter().enumerate() {
                    rhs[j * d + t] = c.clone();
                }
                let y = sys.solve_right(&rhs).ok_or(EnvelopeError::NoMinimalLeftIdeal(m))?;
                let mut u = vec![F::zero(); d];
                for (k, yk) in y.iter().enumerate() {
                    for (t, g) in gens[k].iter().enumerate() {
                        u[t] = u[t].clone() + yk.clone() * g.clone();
                    }
                }
                units.push(u);
            }
        }
        return Ok(MatrixUnits { size: m, generator: x, left_basis: left, units });
    }
    Err(EnvelopeError::NoMinimalLeftIdeal(m))
}

/// Summary of an envelope computation.
#[derive(Clone, Debug, Serialize)]
pub struct EnvelopeReport {
    pub system: String,
    pub op: String,
    pub system_dim: usize,
    pub relations: usize,
    pub status: String,
    pub dim: Option<usize>,
    pub groebner: Vec<String>,
    pub standard_monomials: Option<Vec<String>>,
    pub graded_dims: Vec<usize>,
    pub semisimple: Option<bool>,
    pub center_dim: Option<usize>,
    pub center: Option<Vec<String>>,
    pub idempotents: Option<Vec<String>>,
    pub ideal_dims: Option<Vec<usize>>,
    pub field: Option<String>,
    pub error: Option<String>,
}

/// Runs the whole chain: envelope, table, radical, center, splitting.
pub fn analyze(system: &QuadSystem, degree_bound: Option<usize>, graded_up_to: usize, allow_extension: bool) -> EnvelopeReport {
    let env = envelope(system, degree_bound, graded_up_to);
    let status = match env.groebner.status {
        Completion::Complete if env.monomials.is_some() => "finite".to_string(),
        Completion::Complete => "infinite".to_string(),
        Completion::Truncated { degree_bound } => format!("truncated at degree {degree_bound}"),
    };
    let mut report = EnvelopeReport {
        system: system.name(),
        op: system.spec.op().to_string(),
        system_dim: system.dimension(),
        relations: env.relations,
        status,
        dim: env.dimension(),
        groebner: env.groebner_strings(),
        standard_monomials: env.monomials.as_ref().map(|ms| ms.iter().map(|w| system.alphabet.format_word(w)).collect()),
        graded_dims: env.graded.clone(),
        semisimple: None,
        center_dim: None,
        center: None,
        idempotents: None,
        ideal_dims: None,
        field: None,
        error: None,
    };
    let Ok(alg) = multiplication_table(&env) else { return report };
    let semisimple = alg.is_semisimple();
    report.semisimple = Some(semisimple);
    let z = alg.center();
    report.center_dim = Some(z.rows());
    report.center = Some(z.row_vecs().iter().map(|r| alg.format(r)).collect());
    if !semisimple {
        return report;
    }
    match split_center(&alg, allow_extension) {
        Ok(dec) => {
            let aq = alg.map(|c| QuadNumber::rational(c.clone()));
            report.idempotents = Some(dec.idempotents.iter().map(|e| aq.format(e)).collect());
            report.ideal_dims = Some(dec.ideal_dims.clone());
            report.field = Some(dec.field_name());
        }
        Err(e) => report.error = Some(e.to_string()),
    }
    report
}
