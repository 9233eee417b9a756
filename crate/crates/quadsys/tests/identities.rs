//! Identity computations against transcribed values.

mod common;

use common::checks::degree4_kernel;
use common::golden::{ANTITETRAD10, ANTITETRAD7, TETRAD10, TETRAD7};
use quadsys::free_algebra::{Multidegree, OpKind, QuadPolynomial, TypeTable};
use quadsys::identities::known;
use quadsys::identities::{
    nonlinear_special_candidates, partition_report, partition_reports, verify_alternating, verify_identity, degree10_liftings,
    PartitionReport,
};
use quadsys::linalg::{Modulus, DEFAULT_PRIME};
use quadsys::scalar::rat;
use quadsys::symmetric_group::Partition;

fn modulus() -> Modulus {
    Modulus::new(DEFAULT_PRIME)
}

fn row7(r: &PartitionReport) -> [usize; 9] {
    [r.dim, r.sym_rows, r.sym_cols, r.symm, r.exp_rows, r.exp_cols, r.rank, r.null, r.new]
}

fn row10(r: &PartitionReport) -> [usize; 10] {
    [r.dim, r.sym_rows, r.sym_cols, r.symm, r.symmlift.unwrap_or(0), r.exp_rows, r.exp_cols, r.rank, r.null, r.new]
}

#[test]
fn degree4_kernel_is_the_symmetry() {
    for op in [OpKind::Tetrad, OpKind::AntiTetrad] {
        degree4_kernel(op).unwrap();
    }
}

#[test]
fn transcribed_identities_hold() {
    let sets = [known::tetrad7(), known::antitetrad7(), known::antitetrad7_nonlinear(), known::antitetrad10_special()];
    let counts: Vec<usize> = sets.iter().map(Vec::len).collect();
    assert_eq!(counts, [3, 2, 3, 10]);
    for p in sets.iter().flatten() {
        assert!(!p.is_zero());
        assert!(verify_identity(p));
    }
    let lens: Vec<usize> = known::tetrad7().iter().map(QuadPolynomial::len).collect();
    assert_eq!(lens, [6, 12, 18]);
    let mut lens: Vec<usize> = known::antitetrad7_nonlinear().iter().map(QuadPolynomial::len).collect();
    lens.sort_unstable();
    assert_eq!(lens, [5, 5, 12]);
    let special = known::tetrad10_special();
    assert_eq!(special.len(), 5);
    for s in &special {
        assert!(verify_alternating(&s.poly, &s.alternated));
        assert_eq!(known::multidegree_of(&s.poly).unwrap(), s.multidegree);
    }
}

#[test]
fn perturbed_identity_fails() {
    let mut p = known::tetrad7()[0].clone();
    let (m, _) = p.terms.iter().next().map(|(m, c)| (m.clone(), *c)).unwrap();
    p.add_term(m, 1);
    assert!(!verify_identity(&p));
}

#[test]
fn identity_json_roundtrip() {
    for p in known::antitetrad7() {
        let j = p.to_json();
        assert_eq!(QuadPolynomial::from_json(&j).unwrap(), p);
    }
}

#[test]
fn degree7_tables() {
    for (op, golden) in [(OpKind::Tetrad, &TETRAD7), (OpKind::AntiTetrad, &ANTITETRAD7)] {
        let rows = partition_reports(7, op, modulus(), &|_| true, &|_| {});
        assert_eq!(rows.len(), 15);
        for (r, (label, expected)) in rows.iter().zip(golden.iter()) {
            assert_eq!(r.partition, Partition::new(label.split(',').map(|x| x.parse().unwrap()).collect()).label());
            assert_eq!(row7(r), *expected, "{op} [{label}]");
        }
        // The new multiplicities weighted by d_λ give the dimension of the
        // module of degree-7 identities.
        let new: usize = rows.iter().map(|r| r.new * r.dim).sum();
        assert_eq!(new, if op == OpKind::Tetrad { 2520 } else { 2521 });
    }
}

#[test]
fn degree10_small_rows() {
    let m = modulus();
    for (op, golden) in [(OpKind::Tetrad, &TETRAD10), (OpKind::AntiTetrad, &ANTITETRAD10)] {
        let liftings = degree10_liftings(op);
        for (_, label, expected) in golden.iter().filter(|(_, _, e)| e[0] <= 16) {
            let lambda = Partition::new(label.split(',').map(|x| x.parse().unwrap()).collect());
            let r = partition_report(10, op, &lambda, m, &liftings);
            assert_eq!(row10(&r), *expected, "{op} [{label}]");
        }
    }
}

#[test]
fn small_nonlinear_matrices() {
    // (multidegree, words, monomials, rank, nullity) for the anti-tetrad.
    let expected = [("a6,b", 7, 4, 3, 1), ("a5,b2", 21, 16, 11, 5), ("a4,b3", 35, 28, 18, 10), ("a3,b3,c", 140, 128, 69, 59)];
    for (md, words, monomials, rank, nullity) in expected {
        let md: Multidegree = md.parse().unwrap();
        let sc = nonlinear_special_candidates(&md, OpKind::AntiTetrad, false, &[rat(3, 4)], modulus()).unwrap();
        assert_eq!((sc.words, sc.monomials, sc.rank, sc.nullity), (words, monomials, rank, nullity), "{md}");
        assert_eq!(sc.candidates.len(), nullity);
        let types = TypeTable::new(7).unwrap();
        assert!(sc.candidates.iter().all(|c| c.expand(&types).is_empty()), "{md}");
    }
}
