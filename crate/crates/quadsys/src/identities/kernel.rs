//! The kernel of the multilinear expansion map and its module generators.

use super::isotypic::{Generator, ModuleTracker};
use super::IdentityError;
use crate::free_algebra::{ExpansionMatrix, OpKind, QuadMonomial, QuadPolynomial, TypeTable};
use crate::linalg::{nullspace_mod, reconstruct_integer_vector, rank_mod, EchelonBasis, Modulus};
use crate::symmetric_group::Permutation;

/// Rank, nullity and an integer basis of the kernel of the expansion map.
#[derive(Clone, Debug)]
pub struct KernelResult {
    pub degree: usize,
    pub op: OpKind,
    pub rank: usize,
    pub nullity: usize,
    /// Columns of the expansion matrix.
    pub monomials: Vec<QuadMonomial>,
    /// Canonical nullspace basis modulo p.
    pub basis_mod: Vec<Vec<u32>>,
    /// The same vectors with coefficients recovered over Z.
    pub identities: Vec<QuadPolynomial>,
}

/// Nullspace of the multilinear expansion matrix in degree 4 or 7.
pub fn all_identities(degree: usize, op: OpKind, m: Modulus) -> Result<KernelResult, IdentityError> {
    if degree != 4 && degree != 7 {
        return Err(IdentityError::Unsupported(format!("kernel computation in degree {degree}")));
    }
    let e = ExpansionMatrix::new(degree, op)?;
    let rows = e.rows_mod(m);
    let width = e.monomials.len();
    let basis_mod = nullspace_mod(m, &rows, width);
    let nullity = basis_mod.len();
    let identities = basis_mod
        .iter()
        .map(|v| {
            let ints = reconstruct_integer_vector(v, m.p())?;
            let mut p = QuadPolynomial::new(degree, op);
            for (mono, c) in e.monomials.iter().zip(ints) {
                if c != 0 {
                    p.terms.insert(mono.clone(), c);
                }
            }
            Ok(p)
        })
        .collect::<Result<Vec<_>, IdentityError>>()?;
    Ok(KernelResult { degree, op, rank: width - nullity, nullity, monomials: e.monomials, basis_mod, identities })
}

/// Sorts by squared Euclidean length, then term count, then terms.
pub fn sorted_candidates(mut ids: Vec<QuadPolynomial>) -> Vec<QuadPolynomial> {
    ids.sort_by(|a, b| {
        (a.norm_squared(), a.len())
            .cmp(&(b.norm_squared(), b.len()))
            .then_with(|| a.terms.iter().cmp(b.terms.iter()))
    });
    ids
}

/// Greedy extraction followed by back-to-front elimination.
#[derive(Clone, Debug)]
pub struct Extraction {
    /// Identities that increased the module dimension, in order.
    pub recorded: Vec<QuadPolynomial>,
    /// Dimension after each recorded identity.
    pub dimensions: Vec<usize>,
    /// A subset of `recorded` with no redundant member.
    pub generators: Vec<QuadPolynomial>,
    pub dimension: usize,
    pub target: usize,
}

/// Keeps each candidate that enlarges the module generated by its
/// predecessors, stopping once the kernel is reached, then discards
/// members that are consequences of the others.
pub fn extract_module_generators(candidates: &[QuadPolynomial], degree: usize, op: OpKind, m: Modulus) -> Extraction {
    let mut tracker = ModuleTracker::new(degree, op, m);
    let target = tracker.target_dimension();
    let mut recorded = Vec::new();
    let mut dimensions = Vec::new();
    let mut rows = Vec::new();
    for c in candidates {
        if tracker.dimension() >= target {
            break;
        }
        let g = Generator::multilinear(c.clone());
        let r = tracker.rows(&g);
        if tracker.insert_rows(&r) > 0 {
            recorded.push(c.clone());
            dimensions.push(tracker.dimension());
            rows.push(r);
        }
    }
    let dimension = tracker.dimension();
    let keep = eliminate_back_to_front(&mut tracker, &rows, dimension);
    let generators = keep.iter().map(|&i| recorded[i].clone()).collect();
    Extraction { recorded, dimensions, generators, dimension, target }
}

/// Indices of a subset of `rows` generating a module of dimension `target`,
/// found by removing members from the end of the list toward the start.
pub(crate) fn eliminate_back_to_front(tracker: &mut ModuleTracker, rows: &[Vec<Vec<Vec<u32>>>], target: usize) -> Vec<usize> {
    let mut keep: Vec<bool> = vec![true; rows.len()];
    for i in (0..rows.len()).rev() {
        keep[i] = false;
        let subset: Vec<&Vec<Vec<Vec<u32>>>> = rows.iter().zip(&keep).filter(|(_, &k)| k).map(|(r, _)| r).collect();
        if tracker.dimension_of(&subset) < target {
            keep[i] = true;
        }
    }
    (0..rows.len()).filter(|&i| keep[i]).collect()
}

/// Dimension of the span of all `σ·g` computed directly in the monomial
/// basis, as a cross-check on the representation route. Stops early once
/// `bound` is reached.
pub fn closure_dimension(generators: &[QuadPolynomial], degree: usize, op: OpKind, m: Modulus, bound: Option<usize>) -> usize {
    let types = TypeTable::new(degree).expect("valid degree");
    let monomials = types.multilinear_monomials(op);
    let index: std::collections::HashMap<&QuadMonomial, usize> = monomials.iter().enumerate().map(|(i, x)| (x, i)).collect();
    let width = monomials.len();
    let mut basis = EchelonBasis::new(m, width);
    let perms = Permutation::all(degree);
    for g in generators {
        for s in &perms {
            if bound.is_some_and(|b| basis.rank() >= b) {
                return basis.rank();
            }
            let mut row = vec![0u32; width];
            for (mono, &c) in &g.act(s).terms {
                if let Some((sign, canon)) = types.canonical(&types.tree(mono), op) {
                    let k = index[&canon];
                    row[k] = m.add(row[k], m.reduce(sign * c));
                }
            }
            basis.insert(&row);
        }
    }
    basis.rank()
}

/// Rank over F_p of the expansion matrix restricted to a set of identities;
/// zero exactly when every identity vanishes modulo p.
pub fn expansion_rank_of(ids: &[QuadPolynomial], m: Modulus) -> usize {
    let Some(first) = ids.first() else { return 0 };
    let types = TypeTable::new(first.degree).expect("valid degree");
    let words: Vec<Vec<u8>> = ids.iter().flat_map(|p| p.expand(&types).into_keys()).collect();
    let mut words = words;
    words.sort();
    words.dedup();
    let rows: Vec<Vec<u32>> = ids
        .iter()
        .map(|p| {
            let e = p.expand(&types);
            words.iter().map(|w| m.reduce(e.get(w).copied().unwrap_or(0))).collect()
        })
        .collect();
    rank_mod(m, &rows, words.len())
}
