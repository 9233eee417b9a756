//! Randomised structural checks shared by the property tests and the
//! acceptance run. Each returns a short summary or a description of the
//! first failure.

use num_traits::Signed;
use quadsys::free_algebra::{multihomogeneous_expansion_matrix, Multidegree, OpKind, QuadMonomial, QuadPolynomial, TypeTable};
use quadsys::linalg::{hermite_rows, is_lll_reduced_exact, lll_reduce, IntMatrix};
use quadsys::ncgroebner::{normal_form, normal_form_audited, audit_reduction, NCPoly, Word};
use quadsys::scalar::{rat, rint};
use quadsys::symmetric_group::{irreducible_dimension, partitions, Permutation, RepProvider};
use quadsys::Rational;
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use super::envelopes::system;

pub type Check = Result<String, String>;

fn random_permutation(rng: &mut ChaCha8Rng, n: usize) -> Permutation {
    let mut v: Vec<u8> = (0..n as u8).collect();
    v.shuffle(rng);
    Permutation::from_images(v)
}

/// `R(στ) = R(σ)R(τ)` for random pairs in every irreducible of `S_n`.
pub fn representation_homomorphism(n: usize, pairs: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut total = 0;
    for lambda in partitions(n) {
        let rp = RepProvider::new(&lambda);
        for _ in 0..pairs {
            let s = random_permutation(&mut rng, n);
            let t = random_permutation(&mut rng, n);
            if rp.rep_matrix(&s.compose(&t)) != rp.rep_matrix(&s).mul(&rp.rep_matrix(&t)) {
                return Err(format!("[{}]: R(στ) ≠ R(σ)R(τ) for σ={:?}, τ={:?}", lambda.label(), s.images(), t.images()));
            }
            total += 1;
        }
        if rp.rep_matrix(&Permutation::identity(n)) != quadsys::Matrix::identity(rp.dimension()) {
            return Err(format!("[{}]: R(1) is not the identity", lambda.label()));
        }
    }
    Ok(format!("{total} pairs over {} irreducibles of S_{n}", partitions(n).len()))
}

/// `Σ d_λ² = n!` together with the tableau count for each `λ`.
pub fn dimension_sum(n: usize) -> Check {
    let sum: usize = partitions(n).iter().map(|l| irreducible_dimension(l).pow(2)).sum();
    let fact: usize = (1..=n).product();
    for l in partitions(n) {
        if RepProvider::new(&l).dimension() != irreducible_dimension(&l) {
            return Err(format!("[{}]: tableau count differs from the hook length formula", l.label()));
        }
    }
    if sum == fact {
        Ok(format!("Σd² = {sum} = {n}!"))
    } else {
        Err(format!("Σd² = {sum} ≠ {fact}"))
    }
}

fn relabel(words: &std::collections::BTreeMap<Vec<u8>, i64>, s: &Permutation) -> std::collections::BTreeMap<Vec<u8>, i64> {
    words.iter().map(|(w, &c)| (w.iter().map(|&x| s.apply(x as usize) as u8).collect(), c)).collect()
}

/// `E(σ·p) = σ·E(p)` for random multilinear `p` and random `σ`.
pub fn expansion_equivariance(degree: usize, op: OpKind, sigmas: usize, seed: u64) -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let types = TypeTable::new(degree).map_err(|e| e.to_string())?;
    for k in 0..sigmas {
        let mut p = QuadPolynomial::new(degree, op);
        for _ in 0..5 {
            let ty = rng.gen_range(0..types.len());
            let args = random_permutation(&mut rng, degree).images().to_vec();
            p.add_term(QuadMonomial { ty, args }, rng.gen_range(-3..=3));
        }
        let s = random_permutation(&mut rng, degree);
        if p.act(&s).expand(&types) != relabel(&p.expand(&types), &s) {
            return Err(format!("degree {degree} {op}: trial {k} is not equivariant for σ={:?}", s.images()));
        }
    }
    Ok(format!("{sigmas} permutations in degree {degree} ({op})"))
}

fn random_poly(rng: &mut ChaCha8Rng, letters: usize) -> NCPoly<Rational> {
    let mut p = NCPoly::zero();
    for _ in 0..rng.gen_range(1..=6) {
        let len = rng.gen_range(0..=7);
        let w = Word((0..len).map(|_| rng.gen_range(0..letters as u8)).collect());
        let c = rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        p = p.add(&NCPoly::monomial(w, c));
    }
    p
}

/// For random inputs `f`: the audited cofactors reproduce `f − NF(f)`,
/// `NF` is idempotent, the normal form avoids every leading word, and
/// `f − NF(f)` vanishes on the defining matrices.
pub fn groebner_normal_forms(name: &str, rules: &[NCPoly<Rational>], inputs: usize, seed: u64) -> Check {
    let s = system(name);
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let lms: Vec<Word> = rules.iter().filter_map(|r| r.leading_word().cloned()).collect();
    for k in 0..inputs {
        let f = random_poly(&mut rng, s.dimension());
        let red = normal_form_audited(&f, rules);
        if !audit_reduction(&f, &red, rules) {
            return Err(format!("{name}: input {k} fails the cofactor audit"));
        }
        if normal_form(&red.remainder, rules) != red.remainder {
            return Err(format!("{name}: input {k} normal form is not idempotent"));
        }
        if red.remainder.terms.keys().any(|w| lms.iter().any(|l| !w.occurrences(&l.0).is_empty())) {
            return Err(format!("{name}: input {k} normal form contains a leading word"));
        }
        if !s.vanishes_on_matrices(&[f.sub(&red.remainder)]) {
            return Err(format!("{name}: input {k}: f − NF(f) does not vanish on the matrices"));
        }
    }
    Ok(format!("{name}: {inputs} inputs"))
}

/// Hermite reduction `u·m = h` with `u` unimodular and `h` in Hermite form;
/// the kernel rows annihilate `m`; LLL output satisfies the size and
/// Lovász conditions exactly and spans the same lattice rank.
pub fn lattice_reduction(m: &IntMatrix, delta: &Rational) -> Check {
    let res = hermite_rows(m, true).map_err(|e| e.to_string())?;
    if res.u.mul(m).map_err(|e| e.to_string())? != res.h {
        return Err("u·m ≠ h".into());
    }
    if !res.h.is_hermite() {
        return Err("h is not in Hermite normal form".into());
    }
    if res.u.determinant().abs() != 1.into() {
        return Err("transform is not unimodular".into());
    }
    let kernel = res.kernel_basis();
    let annihilates = |v: &[i64]| (0..m.cols()).all(|j| (0..m.rows()).map(|i| v[i] as i128 * m.get(i, j) as i128).sum::<i128>() == 0);
    if !kernel.iter().all(|v| annihilates(v)) {
        return Err("Hermite kernel row does not annihilate the matrix".into());
    }
    if kernel.is_empty() {
        return Ok(format!("{}×{} rank {}, trivial kernel", m.rows(), m.cols(), res.rank));
    }
    let reduced = lll_reduce(&kernel, delta).map_err(|e| e.to_string())?;
    if !is_lll_reduced_exact(&reduced, delta) {
        return Err("LLL output violates the size or Lovász condition".into());
    }
    if !reduced.iter().all(|v| annihilates(v)) {
        return Err("LLL row left the kernel".into());
    }
    let width = m.rows();
    let q = quadsys::Matrix::from_rows(reduced.iter().map(|v| v.iter().map(|&x| rint(x)).collect()).collect(), width);
    if q.rank() != kernel.len() {
        return Err("LLL output lost rank".into());
    }
    Ok(format!("{}×{} rank {}, kernel {}", m.rows(), m.cols(), res.rank, kernel.len()))
}

/// The lattice checks on the expansion matrices of several multidegrees.
pub fn multidegree_lattices(op: OpKind, multidegrees: &[&str]) -> Check {
    let mut out = Vec::new();
    for md in multidegrees {
        let md: Multidegree = md.parse().map_err(|e| format!("{e}"))?;
        let mh = multihomogeneous_expansion_matrix(&md, op, false).map_err(|e| e.to_string())?;
        out.push(lattice_reduction(&mh.matrix, &rat(3, 4)).map_err(|e| format!("{md}: {e}"))?);
    }
    Ok(out.join("; "))
}

/// The 24×24 degree-4 expansion matrix has rank 12 and its nullspace, in
/// RCF, is spanned exactly by the instances `m − ε·rev(m)` of the
/// (skew-)symmetry.
pub fn degree4_kernel(op: OpKind) -> Check {
    let e = quadsys::free_algebra::ExpansionMatrix::new(4, op).map_err(|e| e.to_string())?;
    let m = e.to_rational();
    if (m.rows(), m.cols()) != (24, 24) {
        return Err(format!("matrix is {}×{}", m.rows(), m.cols()));
    }
    let rank = m.rank();
    let index: std::collections::HashMap<&[u8], usize> = e.monomials.iter().enumerate().map(|(i, x)| (x.args.as_slice(), i)).collect();
    let eps = match op {
        OpKind::Tetrad => -1,
        OpKind::AntiTetrad => 1,
    };
    let rows: Vec<Vec<Rational>> = e
        .monomials
        .iter()
        .map(|x| {
            let mut v = vec![rint(0); 24];
            let rev: Vec<u8> = x.args.iter().rev().copied().collect();
            v[index[x.args.as_slice()]] = rint(1);
            v[index[rev.as_slice()]] = rint(eps);
            v
        })
        .collect();
    let symmetries = quadsys::Matrix::from_rows(rows, 24).rcf();
    if rank != 12 {
        return Err(format!("rank {rank}"));
    }
    if m.nullspace() != symmetries {
        return Err("nullspace RCF differs from the symmetry instances".into());
    }
    Ok(format!("24×24, rank 12, nullspace RCF = {} symmetry instances", symmetries.rows()))
}
