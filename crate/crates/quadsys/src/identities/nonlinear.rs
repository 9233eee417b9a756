//! Nonlinear identities: integer kernels of multihomogeneous expansion
//! matrices, their linearizations, and generator minimization.

use serde::Serialize;

use super::isotypic::{degree10_liftings, Generator, Isotypic, ModuleTracker};
use super::kernel::eliminate_back_to_front;
use super::IdentityError;
use crate::free_algebra::{multihomogeneous_expansion_matrix, Multidegree, OpKind, QuadPolynomial, TypeTable};
use crate::linalg::integer::{hermite_rows, lattice_basis_size, lll_reduce};
use crate::linalg::modp::nullspace_from_rcf;
use crate::linalg::{rcf_mod, reconstruct_integer_vector, IntMatrix, LinalgError, Modulus};
use crate::scalar::{rat, Rational};
use crate::symmetric_group::{partitions, LinearizationMode, Partition, RepProvider};

/// Integer kernel of a multihomogeneous expansion matrix.
#[derive(Clone, Debug)]
pub struct SpecialCandidates {
    pub multidegree: Multidegree,
    pub op: OpKind,
    /// Number of associative words (columns).
    pub words: usize,
    /// Number of normal-form quaternary monomials (rows).
    pub monomials: usize,
    pub rank: usize,
    pub nullity: usize,
    /// Basis size after Hermite reduction, if the lattice route was used.
    pub hnf_size: Option<f64>,
    /// Basis size after each LLL pass.
    pub lll_sizes: Vec<(Rational, f64)>,
    /// True when Hermite reduction overflowed and the basis was recovered
    /// from the modular nullspace instead.
    pub fallback: bool,
    /// Kernel vectors as identities, shortest first.
    pub candidates: Vec<QuadPolynomial>,
}

fn kernel_vectors_fallback(e: &IntMatrix, m: Modulus) -> Result<Vec<Vec<i64>>, LinalgError> {
    let t = e.transpose();
    let rows: Vec<Vec<u32>> = (0..t.rows()).map(|i| t.row(i).iter().map(|&x| m.reduce(x)).collect()).collect();
    let (rcf, piv) = rcf_mod(m, &rows, t.cols());
    nullspace_from_rcf(m, &rcf, &piv, t.cols()).iter().map(|v| reconstruct_integer_vector(v, m.p())).collect()
}

fn is_left_kernel(e: &IntMatrix, v: &[i64]) -> bool {
    (0..e.cols()).all(|j| (0..e.rows()).map(|i| v[i] as i128 * e.get(i, j) as i128).sum::<i128>() == 0)
}

/// Computes the integer kernel of the expansion matrix for `md`: restrict
/// to a column basis, take the Hermite kernel lattice, LLL-reduce with each
/// δ in turn, and sort by Euclidean length. With `alternate_simple` the
/// rows are alternating sums over the variables of multiplicity one.
pub fn nonlinear_special_candidates(
    md: &Multidegree,
    op: OpKind,
    alternate_simple: bool,
    deltas: &[Rational],
    m: Modulus,
) -> Result<SpecialCandidates, IdentityError> {
    let mh = multihomogeneous_expansion_matrix(md, op, alternate_simple)?;
    let e = &mh.matrix;
    let rows: Vec<Vec<u32>> = (0..e.rows()).map(|i| e.row(i).iter().map(|&x| m.reduce(x)).collect()).collect();
    let (_, pivots) = rcf_mod(m, &rows, e.cols());
    let rank = pivots.len();
    let nullity = e.rows() - rank;
    let mut reduced = IntMatrix::zeros(e.rows(), rank);
    for i in 0..e.rows() {
        for (k, &c) in pivots.iter().enumerate() {
            reduced.set(i, k, e.get(i, c));
        }
    }
    let mut fallback = false;
    let mut hnf_size = None;
    let mut lll_sizes = Vec::new();
    let mut basis = match hermite_rows(&reduced, false) {
        Ok(h) => h.kernel_basis(),
        Err(LinalgError::Overflow) => {
            fallback = true;
            kernel_vectors_fallback(e, m)?
        }
        Err(err) => return Err(err.into()),
    };
    if !basis.is_empty() {
        if !fallback {
            hnf_size = Some(lattice_basis_size(&basis)?);
        }
        for delta in deltas {
            basis = lll_reduce(&basis, delta)?;
            lll_sizes.push((delta.clone(), lattice_basis_size(&basis)?));
        }
    }
    if basis.len() != nullity || !basis.iter().all(|v| is_left_kernel(e, v)) {
        return Err(IdentityError::Unsupported(format!("kernel of {md} is not spanned by the computed lattice")));
    }
    let mut candidates: Vec<QuadPolynomial> = basis
        .iter()
        .map(|v| {
            let mut p = QuadPolynomial::new(md.total(), op);
            for (mono, &c) in mh.monomials.iter().zip(v) {
                if c != 0 {
                    p.terms.insert(mono.clone(), c);
                }
            }
            p
        })
        .collect();
    candidates = super::kernel::sorted_candidates(candidates);
    Ok(SpecialCandidates {
        multidegree: md.clone(),
        op,
        words: e.cols(),
        monomials: e.rows(),
        rank,
        nullity,
        hnf_size,
        lll_sizes,
        fallback,
        candidates,
    })
}

/// One column of the degree-7 nonlinear table.
#[derive(Clone, Debug, Serialize)]
pub struct Part1Row {
    pub multidegree: String,
    pub words: usize,
    pub monomials: usize,
    pub rank: usize,
    pub nullity: usize,
    pub generators: usize,
    pub fallback: bool,
}

/// All rows together with the recorded generators in order.
#[derive(Clone, Debug)]
pub struct Part1Result {
    pub rows: Vec<Part1Row>,
    pub generators: Vec<Generator>,
    pub dimension: usize,
    pub target: usize,
}

/// Multidegree whose block sizes are the parts of `lambda`.
pub fn multidegree_of_partition(lambda: &Partition) -> Multidegree {
    Multidegree(lambda.parts().to_vec())
}

/// For every partition of 7 except `1⁷`, computes the integer kernel of
/// the corresponding nonlinear expansion matrix and keeps each kernel
/// vector whose symmetric linearization enlarges the module generated so far.
pub fn part1_table(op: OpKind, m: Modulus, progress: &dyn Fn(&Part1Row)) -> Result<Part1Result, IdentityError> {
    let mut tracker = ModuleTracker::new(7, op, m);
    let target = tracker.target_dimension();
    let mut rows = Vec::new();
    let mut generators = Vec::new();
    let delta = rat(3, 4);
    for lambda in partitions(7).iter().filter(|l| l.parts().len() < 7) {
        let md = multidegree_of_partition(lambda);
        let sc = nonlinear_special_candidates(&md, op, false, std::slice::from_ref(&delta), m)?;
        let mut count = 0;
        for c in &sc.candidates {
            if tracker.dimension() >= target {
                break;
            }
            let g = Generator::symmetric(c.clone(), md.clone());
            if tracker.add(&g) > 0 {
                generators.push(g);
                count += 1;
            }
        }
        let row = Part1Row {
            multidegree: md.to_string(),
            words: sc.words,
            monomials: sc.monomials,
            rank: sc.rank,
            nullity: sc.nullity,
            generators: count,
            fallback: sc.fallback,
        };
        progress(&row);
        rows.push(row);
    }
    Ok(Part1Result { rows, generators, dimension: tracker.dimension(), target })
}

/// Removes members from the end of the list toward the start whenever the
/// rest still generate a module of dimension `target`.
pub fn minimize_generator_set(gs: &[Generator], degree: usize, op: OpKind, m: Modulus, target: usize) -> Vec<Generator> {
    let mut tracker = ModuleTracker::new(degree, op, m);
    let rows: Vec<_> = gs.iter().map(|g| tracker.rows(g)).collect();
    eliminate_back_to_front(&mut tracker, &rows, target).into_iter().map(|i| gs[i].clone()).collect()
}

/// Outcome of testing nonlinear candidates against the degree-10 module
/// generated by symmetries and liftings.
#[derive(Clone, Debug, Serialize)]
pub struct SpecialRun {
    pub partition: String,
    pub symm: usize,
    pub symmlift: usize,
    pub null: usize,
    /// Rank after all candidates.
    pub rank: usize,
    /// Indices of candidates that increased the rank.
    pub increasing: Vec<usize>,
    pub mixed_rank: usize,
    pub mixed_nonzeros: usize,
}

/// Feeds candidates with multidegree `md` into the `[λ]` component of the
/// degree-10 module, using the mixed linearization (symmetric over
/// repeated variables, alternating over simple ones).
pub fn confirm_special(
    candidates: &[QuadPolynomial],
    md: &Multidegree,
    lambda: &Partition,
    op: OpKind,
    m: Modulus,
) -> Result<SpecialRun, IdentityError> {
    let degree = md.total();
    if degree != 10 || lambda.size() != degree {
        return Err(IdentityError::Unsupported(format!("{md} with partition {lambda}")));
    }
    let types = TypeTable::new(degree)?;
    let mut iso = Isotypic::new(lambda, types.len(), m);
    let null = types.len() * iso.dimension() - iso.expansion_rank(&types, op);
    for s in types.type_symmetries(op) {
        iso.add(&Generator::multilinear(s));
    }
    let symm = iso.rank();
    for l in degree10_liftings(op) {
        iso.add(&Generator::multilinear(l));
    }
    let symmlift = iso.rank();
    let mut increasing = Vec::new();
    for (i, c) in candidates.iter().enumerate() {
        if iso.add(&Generator::mixed(c.clone(), md.clone())) > 0 {
            increasing.push(i);
        }
    }
    let (mixed_rank, mixed_nonzeros) = mixed_matrix_stats(iso.provider(), md);
    Ok(SpecialRun {
        partition: lambda.label(),
        symm,
        symmlift,
        null,
        rank: iso.rank(),
        increasing,
        mixed_rank,
        mixed_nonzeros,
    })
}

/// Rank and number of nonzero entries of the exact mixed linearization
/// matrix in the natural representation.
pub fn mixed_matrix_stats(rp: &RepProvider, md: &Multidegree) -> (usize, usize) {
    let tail = md.simple_tail();
    let head = md.0.len() - tail;
    let mut blocks = md.0[..head].to_vec();
    blocks.push(tail);
    let l = rp.linearization_matrix(&blocks, LinearizationMode::Mixed { split: head });
    (l.rank(), l.count_nonzero())
}
