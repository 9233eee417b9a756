//! Envelope data transcribed for comparison, with helpers that turn the
//! printed elements into coordinate vectors.

use quadsys::envelope::{family, FiniteAlgebra, QuadSystem};
use quadsys::ncgroebner::{normal_form, NCPoly};
use quadsys::scalar::{rat, rint};
use quadsys::{QuadNumber, Rational};

/// Factor multiplying one part of a printed idempotent.
#[derive(Clone, Copy, Debug)]
pub enum Beta {
    One,
    /// β = 1 + √−3.
    B,
    /// β̄ = 1 − √−3.
    Bbar,
}

/// `scale · Σ factor · poly`.
pub struct Idempotent {
    pub scale: (i64, i64),
    pub parts: &'static [(Beta, &'static str)],
}

pub struct EnvelopeGolden {
    pub name: &'static str,
    pub relations: usize,
    /// Nontrivial compositions found in each completion round.
    pub compositions: &'static [usize],
    pub rules: &'static [&'static str],
    pub monomials: &'static [&'static str],
    pub center_dim: usize,
    pub center_basis: &'static [&'static str],
    pub idempotents: &'static [Idempotent],
    pub ideal_dims: &'static [usize],
    pub field: &'static str,
}

use Beta::{Bbar, One, B};

const C111_MONOMIALS: &[&str] = &[
    "1", "a", "b", "c", "ab", "ac", "ba", "bc", "ca", "cb", "abc", "acb", "bac", "bca", "cab", "cba", "abca", "bacb", "cabc",
];

const fn rational(parts: &'static [(Beta, &'static str)]) -> Idempotent {
    Idempotent { scale: (1, 1), parts }
}

pub const FINITE: [EnvelopeGolden; 7] = [
    EnvelopeGolden {
        name: "D11",
        relations: 10,
        compositions: &[24],
        rules: &["b^2", "a^3", "bab", "aba^2 + a^2ba - a", "ba^2b - b"],
        monomials: &["1", "a", "b", "a^2", "ab", "ba", "a^2b", "aba", "ba^2", "a^2ba"],
        center_dim: 2,
        center_basis: &["1", "a^2b + aba + ba^2"],
        idempotents: &[rational(&[(One, "1 - a^2b - aba - ba^2")]), rational(&[(One, "a^2b + aba + ba^2")])],
        ideal_dims: &[1, 9],
        field: "Q",
    },
    EnvelopeGolden {
        name: "C111",
        relations: 45,
        compositions: &[290],
        rules: &[
            "a^2", "b^2", "c^2", "aba", "aca", "bab", "bcb", "cac", "cbc", "acba + abca - a", "bcab + bacb - b",
            "cbac + cabc - c", "cabca - ca",
        ],
        monomials: C111_MONOMIALS,
        center_dim: 3,
        center_basis: &[],
        idempotents: &[
            rational(&[(One, "1 - abc - acb - bac - bca - cab - cba")]),
            rational(&[(One, "abc + bca + cab")]),
            rational(&[(One, "acb + bac + cba")]),
        ],
        ideal_dims: &[1, 9, 9],
        field: "Q",
    },
    EnvelopeGolden {
        name: "B2",
        relations: 45,
        compositions: &[533],
        rules: &["ab", "ba", "ca - bc", "cb - ac", "c^2 - b^2 - a^2", "a^4 - a", "b^4 - b", "b^3c + a^3c - c"],
        monomials: &["1", "a", "b", "c", "a^2", "ac", "b^2", "bc", "a^3", "a^2c", "b^3", "b^2c", "a^3c"],
        center_dim: 4,
        center_basis: &["1", "a + b", "a^2 + b^2", "a^3 + b^3"],
        idempotents: &[
            rational(&[(One, "1 - a^3 - b^3")]),
            Idempotent { scale: (1, 3), parts: &[(One, "a + b + a^2 + b^2 + a^3 + b^3")] },
            Idempotent { scale: (-1, 6), parts: &[(B, "a + b"), (Bbar, "a^2 + b^2"), (One, "-2a^3 - 2b^3")] },
            Idempotent { scale: (-1, 6), parts: &[(Bbar, "a + b"), (B, "a^2 + b^2"), (One, "-2a^3 - 2b^3")] },
        ],
        ideal_dims: &[1, 4, 4, 4],
        field: "Q(sqrt(-3))",
    },
    EnvelopeGolden {
        name: "A2",
        relations: 136,
        compositions: &[2769],
        rules: &[
            "ad", "b^2", "bd - ab", "c^2", "cd - ac", "da", "db - ba", "dc - ca", "d^2 - cb - bc + a^2", "aba", "aca",
            "acb + abc - a^3", "bab", "bca - abc", "bcb - ba^2 - a^2b", "cac", "cba + abc - a^3", "cbc - ca^2 - a^2c",
            "a^4 - a", "ba^3 + a^3b - b", "ba^2b", "ca^3 + a^3c - c", "ca^2b + ba^2c - d", "ca^2c", "cabc + a^3c - c",
        ],
        monomials: &[
            "1", "a", "b", "c", "d", "a^2", "ab", "ac", "ba", "bc", "ca", "cb", "a^3", "a^2b", "a^2c", "abc", "ba^2",
            "bac", "ca^2", "cab", "a^3b", "a^3c", "a^2bc", "ba^2c", "a^3bc",
        ],
        center_dim: 7,
        center_basis: &[
            "1", "a + d", "bc + cb", "a^3 - abc + bac", "abc + cab", "a - a^2bc + ba^2c", "-1/2a^2 - 1/2bc + a^3bc",
        ],
        idempotents: &[
            rational(&[(One, "1 - a^3 - bac - cab")]),
            Idempotent { scale: (1, 3), parts: &[(One, "d - a^2 + cb + abc + cab + a^2bc - ba^2c + 2a^3bc")] },
            Idempotent {
                scale: (1, 3),
                parts: &[(One, "a + a^2 + bc + a^3 - abc + bac - a^2bc + ba^2c - 2a^3bc")],
            },
            Idempotent {
                scale: (-1, 6),
                parts: &[
                    (B, "a - a^2bc + ba^2c"),
                    (Bbar, "a^2 + bc - 2a^3bc"),
                    (One, "-2a^3 + 2abc - 2bac"),
                ],
            },
            Idempotent {
                scale: (-1, 6),
                parts: &[(B, "d + a^2bc - ba^2c"), (Bbar, "-a^2 + cb + 2a^3bc"), (One, "-2abc - 2cab")],
            },
            Idempotent {
                scale: (-1, 6),
                parts: &[
                    (Bbar, "a - a^2bc + ba^2c"),
                    (B, "a^2 + bc - 2a^3bc"),
                    (One, "-2a^3 + 2abc - 2bac"),
                ],
            },
            Idempotent {
                scale: (-1, 6),
                parts: &[(Bbar, "d + a^2bc - ba^2c"), (B, "-a^2 + cb + 2a^3bc"), (One, "-2abc - 2cab")],
            },
        ],
        ideal_dims: &[1, 4, 4, 4, 4, 4, 4],
        field: "Q(sqrt(-3))",
    },
    EnvelopeGolden {
        name: "C-111",
        relations: 36,
        compositions: &[333],
        rules: &[
            "a^2", "b^2", "c^2", "aba", "aca", "bab", "bcb", "cac", "cbc", "acba - abca - a", "bcab - bacb + b",
            "cbac - cabc - c", "cabca + ca",
        ],
        monomials: C111_MONOMIALS,
        center_dim: 3,
        center_basis: &[],
        idempotents: &[
            rational(&[(One, "1 + abc - acb - bac + bca + cab - cba")]),
            rational(&[(One, "-abc - bca - cab")]),
            rational(&[(One, "acb + bac + cba")]),
        ],
        ideal_dims: &[1, 9, 9],
        field: "Q",
    },
    EnvelopeGolden {
        name: "B-3",
        relations: 36,
        compositions: &[385],
        rules: &[
            "aba", "aca", "ac^2 + ab^2 - a^3", "bab", "b^2a + ab^2 - a^3", "b^3 - ba^2 - a^2b", "bca + acb", "bcb",
            "bc^2 - a^2b", "ca^2 - b^2c", "cab + bac", "cac", "cba + abc", "cb^2 - a^2c", "cbc", "c^2a - ab^2",
            "c^2b - ba^2", "c^3 - b^2c - a^2c", "a^2cb - a^2bc - a", "ab^2c", "ba^3 - a^3b - c", "ba^2c",
            "bacb + a^3c - b", "a^5 + cb - bc", "a^4b + ac", "a^4c - ab", "a^3b^2 + cb",
            "a^3bc + 1/2c^2 - 1/2b^2 + 1/2a^2", "ba^2b^2 - ca", "ba^2bc + ba",
        ],
        monomials: &[
            "1", "a", "b", "c", "a^2", "ab", "ac", "ba", "b^2", "bc", "ca", "cb", "c^2", "a^3", "a^2b", "a^2c", "ab^2",
            "abc", "acb", "ba^2", "bac", "b^2c", "a^4", "a^3b", "a^3c", "a^2b^2", "a^2bc", "ba^2b",
        ],
        center_dim: 4,
        center_basis: &[],
        idempotents: &[
            rational(&[(One, "1 + abc - acb - bac")]),
            Idempotent { scale: (-1, 6), parts: &[(One, "a^2 + b^2 + c^2 + 2abc - 2acb - 2bac - 2a^4 - 2ba^2b")] },
            Idempotent {
                scale: (1, 12),
                parts: &[(B, "a^2 + b^2 + c^2"), (One, "-4abc + 4acb + 4bac"), (Bbar, "-2a^4 - 2ba^2b")],
            },
            Idempotent {
                scale: (1, 12),
                parts: &[(Bbar, "a^2 + b^2 + c^2"), (One, "-4abc + 4acb + 4bac"), (B, "-2a^4 - 2ba^2b")],
            },
        ],
        ideal_dims: &[1, 9, 9, 9],
        field: "Q(sqrt(-3))",
    },
    EnvelopeGolden {
        name: "A-2",
        relations: 120,
        compositions: &[2821],
        rules: &[
            "ad", "b^2", "bd - ab", "c^2", "cd - ac", "da", "db - ba", "dc - ca", "d^2 - cb - bc + a^2", "aba", "aca",
            "acb + abc - a^3", "bab", "bca - abc", "bcb - ba^2 - a^2b", "cac", "cba + abc - a^3", "cbc - ca^2 - a^2c",
            "a^2bc - 1/2a^4 - 1/2a", "ba^3 - a^3b + b", "ba^2b", "ca^3 - a^3c - c", "ca^2b - ba^2c - d", "ca^2c",
            "cabc - a^3c - c", "a^4b - ab", "a^4c + ac", "a^6 - 2abc + a^3",
        ],
        monomials: &[
            "1", "a", "b", "c", "d", "a^2", "ab", "ac", "ba", "bc", "ca", "cb", "a^3", "a^2b", "a^2c", "abc", "ba^2",
            "bac", "ca^2", "cab", "a^4", "a^3b", "a^3c", "ba^2c", "a^5",
        ],
        center_dim: 7,
        center_basis: &[],
        idempotents: &[
            rational(&[(One, "1 + a^3 - 2abc + bac - cab")]),
            Idempotent { scale: (1, 6), parts: &[(One, "a + 2d + 2cb + 2abc + 2cab + a^4 + 2ba^2c + 2a^5")] },
            Idempotent { scale: (-1, 6), parts: &[(One, "a - 2bc + 2a^3 - 2abc + 2bac - a^4 - 2ba^2c + 2a^5")] },
            Idempotent {
                scale: (1, 12),
                parts: &[(B, "a - a^4 - 2ba^2c"), (Bbar, "-2bc + 2a^5"), (One, "-4a^3 + 4abc - 4bac")],
            },
            Idempotent {
                scale: (1, 12),
                parts: &[(Bbar, "a - a^4 - 2ba^2c"), (B, "-2bc + 2a^5"), (One, "-4a^3 + 4abc - 4bac")],
            },
            Idempotent {
                scale: (-1, 12),
                parts: &[(B, "a + 2d + a^4 + 2ba^2c"), (Bbar, "2cb + 2a^5"), (One, "-4abc - 4cab")],
            },
            Idempotent {
                scale: (-1, 12),
                parts: &[(Bbar, "a + 2d + a^4 + 2ba^2c"), (B, "2cb + 2a^5"), (One, "-4abc - 4cab")],
            },
        ],
        ideal_dims: &[1, 4, 4, 4, 4, 4, 4],
        field: "Q(sqrt(-3))",
    },
];

/// D⁻₁₂: finite, but only its basis and dimension are listed.
pub const D_MINUS_12_RULES: [&str; 20] = [
    "c^2", "a^3", "a^2b", "aba", "ab^2", "aca", "ba^2", "bab", "b^2a", "b^3", "bca + acb", "bcb", "cac", "cbc",
    "acba + a^2cb - a", "bacb + acb^2 - b", "cbac - cabc - c", "a^2cb^2 - ab", "acb^2c - bc", "ca^2cb - ca",
];

pub const D_MINUS_21_RULES: [&str; 13] = [
    "aba^2 - a^2ba", "ba^3 - a^3b", "baba - abab", "b^2a^2 - a^2b^2", "b^2ab - bab^2", "b^3a - ab^3", "a^3ba - a^4b",
    "a^2b^2a - a^3b^2", "ba^2ba - a^2bab", "ba^2b^2 - a^2b^3", "bab^2a - abab^2", "bab^3 - ab^4", "a^2bab^2 - a^3b^3",
];

/// Standard monomials of U(D⁻₂₁) in degrees at most 5.
pub const D_MINUS_21_LOW: [&str; 33] = [
    "1", "a", "b", "a^2", "ab", "ba", "b^2", "a^3", "a^2b", "aba", "ab^2", "ba^2", "bab", "b^2a", "b^3", "a^4", "a^3b",
    "a^2ba", "a^2b^2", "abab", "ab^2a", "ab^3", "ba^2b", "bab^2", "b^4", "a^5", "a^4b", "a^3b^2", "a^2bab", "a^2b^3",
    "abab^2", "ab^4", "b^5",
];

/// Multiplication table of U(D₁₁) on its standard monomials.
pub const D11_TABLE: [[&str; 10]; 10] = [
    ["1", "a", "b", "a^2", "ab", "ba", "a^2b", "aba", "ba^2", "a^2ba"],
    ["a", "a^2", "ab", "0", "a^2b", "aba", "0", "a^2ba", "-a^2ba + a", "0"],
    ["b", "ba", "0", "ba^2", "0", "0", "b", "0", "0", "ba"],
    ["a^2", "0", "a^2b", "0", "0", "a^2ba", "0", "0", "a^2", "0"],
    ["ab", "aba", "0", "-a^2ba + a", "0", "0", "ab", "0", "0", "aba"],
    ["ba", "ba^2", "0", "0", "b", "0", "0", "ba", "0", "0"],
    ["a^2b", "a^2ba", "0", "a^2", "0", "0", "a^2b", "0", "0", "a^2ba"],
    ["aba", "-a^2ba + a", "0", "0", "ab", "0", "0", "aba", "0", "0"],
    ["ba^2", "0", "b", "0", "0", "ba", "0", "0", "ba^2", "0"],
    ["a^2ba", "a^2", "0", "0", "a^2b", "0", "0", "a^2ba", "0", "0"],
];

pub const D11_DICKSON: [[i64; 10]; 10] = [
    [10, 0, 0, 0, 0, 0, 3, 3, 3, 0],
    [0, 0, 0, 0, 3, 3, 0, 0, 0, 0],
    [0, 0, 0, 3, 0, 0, 0, 0, 0, 0],
    [0, 0, 3, 0, 0, 0, 0, 0, 0, 0],
    [0, 3, 0, 0, 0, 0, 0, 0, 0, 3],
    [0, 3, 0, 0, 0, 0, 0, 0, 0, 0],
    [3, 0, 0, 0, 0, 0, 3, 0, 0, 0],
    [3, 0, 0, 0, 0, 0, 0, 3, 0, 0],
    [3, 0, 0, 0, 0, 0, 0, 0, 3, 0],
    [0, 0, 0, 0, 3, 0, 0, 0, 0, 0],
];

/// RCF of the commutator matrix whose nullspace is the center of U(D₁₁).
pub const D11_CENTER_RCF: [[i64; 10]; 8] = [
    [0, 1, 0, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 1, 0, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 1, 0, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 1, 0, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 1, 0, 0, 0, 0],
    [0, 0, 0, 0, 0, 0, 1, 0, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 1, -1, 0],
    [0, 0, 0, 0, 0, 0, 0, 0, 0, 1],
];

/// E₁₁, E₁₂, …, E₃₃ for U(D₁₁) acting on b, ab, a²b.
pub const D11_MATRIX_UNITS: [&str; 9] = ["ba^2", "ba", "b", "a - a^2ba", "aba", "ab", "a^2", "a^2ba", "a^2b"];
pub const D11_LEFT_BASIS: [&str; 3] = ["b", "ab", "a^2b"];

pub fn system(name: &str) -> QuadSystem {
    family(&name.parse().expect("system name")).expect("valid system")
}

pub fn parse(s: &QuadSystem, text: &str) -> NCPoly<Rational> {
    if text.trim() == "0" {
        return NCPoly::zero();
    }
    s.alphabet.parse_poly(text).unwrap_or_else(|e| panic!("{text}: {e}"))
}

/// Coordinates of a printed element, reduced modulo the basis first.
pub fn rational_vector(alg: &FiniteAlgebra<Rational>, rules: &[NCPoly<Rational>], text: &str) -> Vec<Rational> {
    let p = if text.trim() == "0" { NCPoly::zero() } else { alg.alphabet.parse_poly(text).expect("parses") };
    alg.coordinates(&normal_form(&p, rules)).expect("standard monomials")
}

pub fn beta(b: Beta) -> QuadNumber {
    match b {
        One => QuadNumber::rational(rint(1)),
        B => QuadNumber::new(rint(1), rint(1), -3),
        Bbar => QuadNumber::new(rint(1), rint(-1), -3),
    }
}

pub fn idempotent_vector(alg: &FiniteAlgebra<Rational>, rules: &[NCPoly<Rational>], e: &Idempotent) -> Vec<QuadNumber> {
    let scale = QuadNumber::rational(rat(e.scale.0, e.scale.1));
    let mut v = vec![QuadNumber::rational(rint(0)); alg.dimension()];
    for (b, text) in e.parts {
        let f = scale.clone() * beta(*b);
        for (x, c) in v.iter_mut().zip(rational_vector(alg, rules, text)) {
            *x = x.clone() + f.clone() * QuadNumber::rational(c);
        }
    }
    v
}
