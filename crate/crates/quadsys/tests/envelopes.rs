//! Envelopes, Gröbner bases and Wedderburn data against transcribed values.

mod common;

use common::envelopes::*;
use quadsys::envelope::{
    envelope, matrix_unit_isomorphism, multiplication_table, split_center, EnvelopeError, FiniteAlgebra,
};
use quadsys::ncgroebner::{groebner_basis, NCPoly, Word};
use quadsys::scalar::rint;
use quadsys::{Matrix, QuadNumber, Rational};

fn sorted(mut v: Vec<NCPoly<Rational>>) -> Vec<NCPoly<Rational>> {
    v.sort_by(|a, b| a.leading_word().cmp(&b.leading_word()));
    v
}

fn nonzero_rounds(rounds: &[quadsys::ncgroebner::RoundLog]) -> Vec<usize> {
    rounds.iter().map(|r| r.compositions).filter(|&c| c > 0).collect()
}

fn rational_table(name: &str) -> (FiniteAlgebra<Rational>, Vec<NCPoly<Rational>>) {
    let env = envelope(&system(name), None, 0);
    let alg = multiplication_table(&env).expect("finite envelope");
    (alg, env.groebner.rules)
}

#[test]
fn relation_counts() {
    let expected =
        [("D11", 10), ("C111", 45), ("B2", 45), ("A2", 136), ("C-111", 36), ("B-3", 36), ("A-2", 120), ("D-21", 6), ("D-31", 36), ("D-12", 36)];
    for (name, n) in expected {
        assert_eq!(system(name).relations().len(), n, "{name}");
    }
}

#[test]
fn finite_groebner_bases_and_monomials() {
    for g in &FINITE {
        let s = system(g.name);
        let env = envelope(&s, None, 0);
        assert!(!env.is_truncated(), "{}", g.name);
        assert_eq!(env.relations, g.relations, "{}", g.name);
        let expected = sorted(g.rules.iter().map(|r| parse(&s, r)).collect());
        assert_eq!(sorted(env.groebner.rules.clone()), expected, "{} basis", g.name);
        assert_eq!(nonzero_rounds(&env.groebner.rounds), g.compositions, "{} compositions", g.name);
        let words: Vec<Word> = g.monomials.iter().map(|m| if *m == "1" { Word::empty() } else { s.alphabet.parse_word(m).unwrap() }).collect();
        assert_eq!(env.monomials.as_deref(), Some(words.as_slice()), "{} monomials", g.name);
        assert!(s.vanishes_on_matrices(&env.groebner.rules), "{}", g.name);
        assert!(s.vanishes_on_matrices(&s.raw_relations()), "{}", g.name);
    }
}

#[test]
fn finite_wedderburn_data() {
    for g in &FINITE {
        let (alg, rules) = rational_table(g.name);
        assert!(alg.is_associative() && alg.is_unital(), "{}", g.name);
        assert!(alg.is_semisimple(), "{}", g.name);
        assert_eq!(alg.center().rows(), g.center_dim, "{}", g.name);
        if !g.center_basis.is_empty() {
            let vs: Vec<Vec<Rational>> = g.center_basis.iter().map(|t| rational_vector(&alg, &rules, t)).collect();
            assert!(vs.iter().all(|v| alg.is_central(v)), "{} center", g.name);
            assert_eq!(Matrix::from_rows(vs, alg.dimension()).rank(), g.center_dim, "{} center", g.name);
        }
        let dec = split_center(&alg, true).expect("splits");
        assert_eq!(dec.field_name(), g.field, "{}", g.name);
        let aq = alg.map(|c| QuadNumber::rational(c.clone()));
        assert!(dec.verify(&aq), "{} idempotent axioms", g.name);
        assert_eq!(dec.idempotents.len(), g.idempotents.len(), "{}", g.name);
        for (k, e) in g.idempotents.iter().enumerate() {
            let v = idempotent_vector(&alg, &rules, e);
            let pos = dec.idempotents.iter().position(|x| *x == v);
            assert!(pos.is_some(), "{}: idempotent {} not found; computed {:?}", g.name, k + 1, dec.idempotents.iter().map(|x| aq.format(x)).collect::<Vec<_>>());
            assert_eq!(aq.ideal_dimension(&v), g.ideal_dims[k], "{} ideal {}", g.name, k + 1);
        }
        let mut dims = dec.ideal_dims.clone();
        dims.sort_unstable();
        assert_eq!(dims, g.ideal_dims, "{}", g.name);
    }
}

#[test]
fn splitting_over_q_needs_extension_for_b2() {
    let (alg, _) = rational_table("B2");
    assert_eq!(split_center(&alg, false).unwrap_err(), EnvelopeError::ExtensionRequired(-3));
    let (alg, _) = rational_table("D11");
    assert!(split_center(&alg, false).is_ok());
}

#[test]
fn d11_structure_constants() {
    let (alg, rules) = rational_table("D11");
    for (i, row) in D11_TABLE.iter().enumerate() {
        for (j, entry) in row.iter().enumerate() {
            let got = alg.mul(&alg.unit_vector(i), &alg.unit_vector(j));
            assert_eq!(got, rational_vector(&alg, &rules, entry), "row {i} col {j}");
        }
    }
}

#[test]
fn d11_dickson_and_center() {
    let (alg, rules) = rational_table("D11");
    let d = alg.dimension();
    let expected = Matrix::from_fn(d, d, |i, j| rint(D11_DICKSON[i][j]));
    assert_eq!(alg.dickson_matrix(), expected);
    assert_eq!(expected.rank(), d);
    // Commutator matrix: rows (j, k), columns i, entry c_ij^k − c_ji^k.
    let comm = Matrix::from_fn(d * d, d, |r, i| {
        let (j, k) = (r / d, r % d);
        alg.table[i][j][k].clone() - alg.table[j][i][k].clone()
    });
    let rcf = Matrix::from_fn(8, d, |i, j| rint(D11_CENTER_RCF[i][j]));
    assert_eq!(comm.rcf(), rcf);
    let c = rational_vector(&alg, &rules, "a^2b + aba + ba^2");
    assert_eq!(alg.mul(&c, &c), c);
    let center = alg.center();
    let with = |v: Vec<Rational>| center.vstack(&Matrix::from_rows(vec![v], d)).rank();
    assert_eq!(with(alg.one()), 2);
    assert_eq!(with(c), 2);
}

#[test]
fn d11_matrix_units() {
    let (alg, rules) = rational_table("D11");
    let c = rational_vector(&alg, &rules, "a^2b + aba + ba^2");
    let mu = matrix_unit_isomorphism(&alg, &c).expect("matrix units");
    assert_eq!(mu.size, 3);
    assert!(mu.verify(&alg));
    let left: Vec<Vec<Rational>> = D11_LEFT_BASIS.iter().map(|t| rational_vector(&alg, &rules, t)).collect();
    assert_eq!(mu.left_basis, left);
    let units: Vec<Vec<Rational>> = D11_MATRIX_UNITS.iter().map(|t| rational_vector(&alg, &rules, t)).collect();
    assert_eq!(mu.units, units);
    for (i, e) in left.iter().enumerate() {
        for (j, u) in units.iter().enumerate() {
            let (r, col) = (j / 3, j % 3);
            let expected = if col == i { left[r].clone() } else { vec![rint(0); alg.dimension()] };
            assert_eq!(alg.mul(u, e), expected);
        }
    }
}

#[test]
fn d_minus_12() {
    let s = system("D-12");
    let env = envelope(&s, None, 0);
    assert_eq!(sorted(env.groebner.rules.clone()), sorted(D_MINUS_12_RULES.iter().map(|r| parse(&s, r)).collect()));
    assert_eq!(nonzero_rounds(&env.groebner.rounds), [341, 1]);
    assert_eq!(env.dimension(), Some(26));
    assert!(s.vanishes_on_matrices(&env.groebner.rules));
}

#[test]
fn d_minus_21_is_infinite_with_linear_growth() {
    let s = system("D-21");
    let env = envelope(&s, None, 12);
    assert!(!env.is_truncated());
    assert_eq!(env.dimension(), None);
    assert_eq!(sorted(env.groebner.rules.clone()), sorted(D_MINUS_21_RULES.iter().map(|r| parse(&s, r)).collect()));
    assert_eq!(nonzero_rounds(&env.groebner.rounds), [12]);
    let low = quadsys::ncgroebner::standard_monomials_up_to(&env.groebner.leading_words(), 2, 5);
    let expected: Vec<Word> =
        D_MINUS_21_LOW.iter().map(|m| if *m == "1" { Word::empty() } else { s.alphabet.parse_word(m).unwrap() }).collect();
    let mut low_sorted = low.clone();
    low_sorted.sort();
    let mut expected_sorted = expected.clone();
    expected_sorted.sort();
    assert_eq!(low_sorted, expected_sorted);
    for n in 6..=12 {
        assert_eq!(env.graded[n], n + 1, "degree {n}");
    }
    assert!(s.vanishes_on_matrices(&env.groebner.rules));
}

#[test]
fn d_minus_31_has_quadratic_growth() {
    let s = system("D-31");
    let env = envelope(&s, None, 10);
    assert!(!env.is_truncated());
    assert_eq!(env.groebner.rules.len(), 94);
    assert_eq!(nonzero_rounds(&env.groebner.rounds), [278]);
    for n in 6..=10 {
        assert_eq!(env.graded[n], (n + 2) * (n + 1) / 2, "degree {n}");
    }
    assert!(s.vanishes_on_matrices(&env.groebner.rules));
}

#[test]
fn degree_bound_truncates() {
    let s = system("A2");
    let gb = groebner_basis(&s.relations(), Some(4));
    assert!(!gb.is_complete());
    let env = envelope(&s, Some(4), 4);
    assert!(env.is_truncated());
    assert!(matches!(multiplication_table(&env), Err(EnvelopeError::Truncated(4))));
}
