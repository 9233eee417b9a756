//! Permutations, partitions, standard tableaux, and Young's natural
//! representation of the symmetric group.
//!
//! Conventions: permutations act on `0..n` internally (one-line notation is
//! 1-based at the text boundary) and compose as functions,
//! `(στ)(i) = σ(τ(i))`. A permutation acts on a tableau by replacing every
//! entry `x` with `σ(x)`.
//!
//! Standard tableaux of a shape are ordered lexicographically by their
//! column word (columns read left to right, each top to bottom). The
//! natural representation is `R(σ) = A⁻¹ · A(σ)` where `A(σ)_{ij}` is the
//! coefficient of the tabloid `{T_i}` in the polytabloid `e_{σT_j}`.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;
use std::sync::{Arc, Mutex, OnceLock};

use num_traits::ToPrimitive;

use crate::linalg::{modp, IntMatrix, Matrix, Modulus};
use crate::scalar::{rint, Rational};

/// A permutation of `0..n` in one-line notation.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Permutation(Vec<u8>);

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u8).collect())
    }

    /// Builds a permutation from 0-based images; panics if not a bijection.
    pub fn from_images(images: Vec<u8>) -> Self {
        let mut seen = vec![false; images.len()];
        for &x in &images {
            assert!((x as usize) < images.len() && !seen[x as usize], "not a permutation");
            seen[x as usize] = true;
        }
        Permutation(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn images(&self) -> &[u8] {
        &self.0
    }

    pub fn apply(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    /// `self ∘ other`.
    pub fn compose(&self, other: &Self) -> Self {
        assert_eq!(self.degree(), other.degree(), "degree mismatch");
        Permutation(other.0.iter().map(|&i| self.0[i as usize]).collect())
    }

    pub fn inverse(&self) -> Self {
        let mut inv = vec![0u8; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u8;
        }
        Permutation(inv)
    }

    /// +1 or −1.
    pub fn sign(&self) -> i64 {
        permutation_sign(&self.0)
    }

    /// All permutations of `0..n` in lexicographic order.
    pub fn all(n: usize) -> Vec<Permutation> {
        let mut cur: Vec<u8> = (0..n as u8).collect();
        let mut out = vec![Permutation(cur.clone())];
        while next_permutation(&mut cur) {
            out.push(Permutation(cur.clone()));
        }
        out
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| (x + 1).to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Permutation {
    type Err = String;

    /// Parses 1-based one-line notation such as "2,1,3".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let images = s
            .split(',')
            .map(|t| t.trim().parse::<u8>().ok().filter(|&x| x >= 1).map(|x| x - 1))
            .collect::<Option<Vec<u8>>>()
            .ok_or_else(|| format!("bad permutation {s}"))?;
        let mut seen = vec![false; images.len()];
        for &x in &images {
            if x as usize >= images.len() || seen[x as usize] {
                return Err(format!("not a permutation: {s}"));
            }
            seen[x as usize] = true;
        }
        Ok(Permutation(images))
    }
}

/// Sign of a sequence of distinct values, by inversion count.
pub fn permutation_sign(v: &[u8]) -> i64 {
    let mut inv = 0usize;
    for i in 0..v.len() {
        for j in i + 1..v.len() {
            if v[i] > v[j] {
                inv += 1;
            }
        }
    }
    if inv % 2 == 0 {
        1
    } else {
        -1
    }
}

/// Advances to the next lexicographic arrangement; false at the last one.
pub fn next_permutation<T: Ord>(v: &mut [T]) -> bool {
    if v.len() < 2 {
        return false;
    }
    let mut i = v.len() - 1;
    while i > 0 && v[i - 1] >= v[i] {
        i -= 1;
    }
    if i == 0 {
        return false;
    }
    let mut j = v.len() - 1;
    while v[j] <= v[i - 1] {
        j -= 1;
    }
    v.swap(i - 1, j);
    v[i..].reverse();
    true
}

/// All distinct arrangements of a multiset in lexicographic order. Letter
/// `k` occurs `multiplicities[k]` times.
pub fn multiset_permutations(multiplicities: &[usize]) -> Vec<Vec<u8>> {
    let mut cur: Vec<u8> = multiplicities
        .iter()
        .enumerate()
        .flat_map(|(k, &m)| std::iter::repeat(k as u8).take(m))
        .collect();
    let mut out = vec![cur.clone()];
    while next_permutation(&mut cur) {
        out.push(cur.clone());
    }
    out
}

/// An integer partition with weakly decreasing positive parts.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition(Vec<usize>);

impl Partition {
    pub fn new(mut parts: Vec<usize>) -> Self {
        parts.retain(|&x| x > 0);
        parts.sort_unstable_by(|a, b| b.cmp(a));
        Partition(parts)
    }

    pub fn parts(&self) -> &[usize] {
        &self.0
    }

    pub fn size(&self) -> usize {
        self.0.iter().sum()
    }

    /// Conjugate partition (column lengths).
    pub fn conjugate(&self) -> Partition {
        let first = self.0.first().copied().unwrap_or(0);
        Partition((0..first).map(|c| self.0.iter().filter(|&&r| r > c).count()).collect())
    }

    /// Compact label such as "421" or "2^31^4".
    pub fn label(&self) -> String {
        let mut out = String::new();
        let mut i = 0;
        while i < self.0.len() {
            let x = self.0[i];
            let mut j = i;
            while j < self.0.len() && self.0[j] == x {
                j += 1;
            }
            let k = j - i;
            if k >= 5 {
                out.push_str(&format!("{x}^{k}"));
            } else {
                for _ in 0..k {
                    out.push_str(&x.to_string());
                }
            }
            i = j;
        }
        out
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

impl FromStr for Partition {
    type Err = String;

    /// Parses comma-separated parts such as "4,2,1".
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let parts = s
            .split(',')
            .map(|t| t.trim().parse::<usize>().ok().filter(|&x| x > 0))
            .collect::<Option<Vec<usize>>>()
            .ok_or_else(|| format!("bad partition {s}"))?;
        if parts.windows(2).any(|w| w[0] < w[1]) {
            return Err(format!("parts must be weakly decreasing: {s}"));
        }
        Ok(Partition(parts))
    }
}

/// All partitions of `n` in reverse lexicographic order, starting at `(n)`.
pub fn partitions(n: usize) -> Vec<Partition> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut Vec<Partition>) {
        if n == 0 {
            out.push(Partition(cur.clone()));
            return;
        }
        for k in (1..=n.min(max)).rev() {
            cur.push(k);
            rec(n - k, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(n, n, &mut Vec::new(), &mut out);
    out
}

/// Irreducible dimension by the hook length formula.
pub fn irreducible_dimension(lambda: &Partition) -> usize {
    let n = lambda.size();
    let conj = lambda.conjugate();
    let mut num: u128 = (1..=n as u128).product();
    for (i, &row) in lambda.parts().iter().enumerate() {
        for j in 0..row {
            let hook = (row - j - 1) + (conj.parts()[j] - i - 1) + 1;
            num /= hook as u128;
        }
    }
    num as usize
}

/// A standard tableau with precomputed row and column data.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Tableau {
    /// Entries row by row.
    pub rows: Vec<Vec<u8>>,
    /// Row index of every entry.
    pub row_of: Vec<u8>,
    /// Entries column by column, top to bottom.
    pub columns: Vec<Vec<u8>>,
}

impl Tableau {
    fn from_rows(rows: Vec<Vec<u8>>, n: usize) -> Self {
        let mut row_of = vec![0u8; n];
        for (r, row) in rows.iter().enumerate() {
            for &x in row {
                row_of[x as usize] = r as u8;
            }
        }
        let width = rows.first().map_or(0, |r| r.len());
        let columns = (0..width)
            .map(|c| rows.iter().filter(|r| r.len() > c).map(|r| r[c]).collect())
            .collect();
        Tableau { rows, row_of, columns }
    }

    pub fn column_word(&self) -> Vec<u8> {
        self.columns.iter().flatten().copied().collect()
    }
}

/// Standard tableaux of shape λ in lexicographic column-word order.
pub fn standard_tableaux(lambda: &Partition) -> Vec<Tableau> {
    let n = lambda.size();
    let shape = lambda.parts().to_vec();
    let mut out = Vec::new();
    let mut rows: Vec<Vec<u8>> = vec![Vec::new(); shape.len()];
    fn rec(next: usize, n: usize, shape: &[usize], rows: &mut Vec<Vec<u8>>, out: &mut Vec<Vec<Vec<u8>>>) {
        if next == n {
            out.push(rows.clone());
            return;
        }
        for r in 0..shape.len() {
            let len = rows[r].len();
            if len < shape[r] && (r == 0 || rows[r - 1].len() > len) {
                rows[r].push(next as u8);
                rec(next + 1, n, shape, rows, out);
                rows[r].pop();
            }
        }
    }
    let mut raw = Vec::new();
    rec(0, n, &shape, &mut rows, &mut raw);
    for r in raw {
        out.push(Tableau::from_rows(r, n));
    }
    out.sort_by_key(|t| t.column_word());
    out
}

/// Representation matrices for one partition, with memoization.
pub struct RepProvider {
    lambda: Partition,
    n: usize,
    tableaux: Vec<Tableau>,
    a_inv: OnceLock<Matrix<Rational>>,
    memo: Mutex<HashMap<Permutation, Arc<Vec<i8>>>>,
}

impl RepProvider {
    pub fn new(lambda: &Partition) -> Self {
        let tableaux = standard_tableaux(lambda);
        let n = lambda.size();
        RepProvider { lambda: lambda.clone(), n, tableaux, a_inv: OnceLock::new(), memo: Mutex::new(HashMap::new()) }
    }

    pub fn partition(&self) -> &Partition {
        &self.lambda
    }

    pub fn dimension(&self) -> usize {
        self.tableaux.len()
    }

    pub fn tableaux(&self) -> &[Tableau] {
        &self.tableaux
    }

    /// `A(σ)` as a flat row-major `d × d` array with entries in {0, ±1}.
    pub fn polytabloid_matrix(&self, sigma: &Permutation) -> Vec<i8> {
        assert_eq!(sigma.degree(), self.n, "permutation degree does not match the partition");
        let d = self.tableaux.len();
        let mut out = vec![0i8; d * d];
        let mut cols: Vec<Vec<u8>> = Vec::new();
        for (j, tj) in self.tableaux.iter().enumerate() {
            cols.clear();
            cols.extend(tj.columns.iter().map(|c| c.iter().map(|&x| sigma.0[x as usize]).collect::<Vec<u8>>()));
            'rows: for (i, ti) in self.tableaux.iter().enumerate() {
                let mut inversions = 0u32;
                for col in &cols {
                    let h = col.len();
                    let mut mask = 0u32;
                    for (k, &x) in col.iter().enumerate() {
                        let r = ti.row_of[x as usize] as usize;
                        if r >= h || mask & (1 << r) != 0 {
                            continue 'rows;
                        }
                        mask |= 1 << r;
                        for &y in &col[..k] {
                            if ti.row_of[y as usize] as usize > r {
                                inversions += 1;
                            }
                        }
                    }
                }
                out[i * d + j] = if inversions % 2 == 0 { 1 } else { -1 };
            }
        }
        out
    }

    /// Memoized `A(σ)`.
    pub fn polytabloid_matrix_cached(&self, sigma: &Permutation) -> Arc<Vec<i8>> {
        if let Some(m) = self.memo.lock().expect("memo lock").get(sigma) {
            return Arc::clone(m);
        }
        let m = Arc::new(self.polytabloid_matrix(sigma));
        self.memo.lock().expect("memo lock").insert(sigma.clone(), Arc::clone(&m));
        m
    }

    /// Drops memoized matrices.
    pub fn clear_memo(&self) {
        self.memo.lock().expect("memo lock").clear();
    }

    /// Exact `A⁻¹`.
    pub fn a_inverse(&self) -> &Matrix<Rational> {
        self.a_inv.get_or_init(|| {
            let d = self.dimension();
            let a = self.polytabloid_matrix(&Permutation::identity(self.n));
            let am = Matrix::from_fn(d, d, |i, j| rint(a[i * d + j] as i64));
            am.inverse().expect("polytabloid matrix is invertible")
        })
    }

    /// Natural representation matrix over Q.
    pub fn rep_matrix(&self, sigma: &Permutation) -> Matrix<Rational> {
        let d = self.dimension();
        let a = self.polytabloid_matrix_cached(sigma);
        let m = Matrix::from_fn(d, d, |i, j| rint(a[i * d + j] as i64));
        self.a_inverse().mul(&m)
    }

    /// Natural representation matrix with integer entries.
    pub fn rep_matrix_int(&self, sigma: &Permutation) -> IntMatrix {
        to_int_matrix(&self.rep_matrix(sigma))
    }

    /// `A⁻¹` reduced modulo a prime.
    pub fn a_inverse_mod(&self, m: Modulus) -> Vec<Vec<u32>> {
        rational_matrix_mod(self.a_inverse(), m)
    }

    /// Natural representation matrix modulo a prime.
    pub fn rep_matrix_mod(&self, sigma: &Permutation, m: Modulus) -> Vec<Vec<u32>> {
        let d = self.dimension();
        let a = self.polytabloid_matrix_cached(sigma);
        let am: Vec<Vec<u32>> = (0..d).map(|i| (0..d).map(|j| m.reduce(a[i * d + j] as i64)).collect()).collect();
        modp::matmul_mod(m, &self.a_inverse_mod(m), &am)
    }

    /// Signed sum of `A(σ)` over a list of (permutation, coefficient).
    pub fn polytabloid_sum(&self, terms: &[(Permutation, i64)]) -> Vec<i64> {
        let d = self.dimension();
        let mut acc = vec![0i64; d * d];
        for (s, c) in terms {
            let a = self.polytabloid_matrix_cached(s);
            for (x, &y) in acc.iter_mut().zip(a.iter()) {
                *x += c * y as i64;
            }
        }
        acc
    }

    /// Exact linearization matrix: `Σ R(σ)` over the Young subgroup of the
    /// given blocks, signed by `ε(σ)` when `alternating`.
    pub fn young_sum(&self, blocks: &[usize], alternating: bool) -> Matrix<Rational> {
        let d = self.dimension();
        let terms: Vec<(Permutation, i64)> = young_subgroup(blocks)
            .into_iter()
            .map(|s| {
                let c = if alternating { s.sign() } else { 1 };
                (s, c)
            })
            .collect();
        let sum = self.polytabloid_sum_uncached(&terms);
        let m = Matrix::from_fn(d, d, |i, j| rint(sum[i * d + j]));
        self.a_inverse().mul(&m)
    }

    fn polytabloid_sum_uncached(&self, terms: &[(Permutation, i64)]) -> Vec<i64> {
        let d = self.dimension();
        let mut acc = vec![0i64; d * d];
        for (s, c) in terms {
            let a = self.polytabloid_matrix(s);
            for (x, &y) in acc.iter_mut().zip(a.iter()) {
                *x += c * y as i64;
            }
        }
        acc
    }

    /// Linearization matrix in the requested mode.
    pub fn linearization_matrix(&self, blocks: &[usize], mode: LinearizationMode) -> Matrix<Rational> {
        assert_eq!(blocks.iter().sum::<usize>(), self.n, "blocks must sum to the degree");
        match mode {
            LinearizationMode::Symmetric => self.young_sum(blocks, false),
            LinearizationMode::Alternating => self.young_sum(blocks, true),
            LinearizationMode::Mixed { split } => {
                let sym: Vec<usize> = blocks[..split].iter().copied().chain(ones(&blocks[split..])).collect();
                let alt: Vec<usize> = ones(&blocks[..split]).chain(blocks[split..].iter().copied()).collect();
                self.young_sum(&sym, false).mul(&self.young_sum(&alt, true))
            }
        }
    }
}

fn ones(blocks: &[usize]) -> impl Iterator<Item = usize> + '_ {
    blocks.iter().flat_map(|&b| std::iter::repeat(1).take(b))
}

/// How a Young-subgroup sum is signed.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum LinearizationMode {
    Symmetric,
    Alternating,
    /// Blocks before `split` are symmetrized, the rest alternated.
    Mixed { split: usize },
}

/// All permutations of the Young subgroup `S_{b1} × S_{b2} × …` acting on
/// consecutive blocks of positions.
pub fn young_subgroup(blocks: &[usize]) -> Vec<Permutation> {
    let n: usize = blocks.iter().sum();
    let mut out = vec![Vec::with_capacity(n)];
    let mut start = 0u8;
    for &b in blocks {
        let local = Permutation::all(b);
        let mut next = Vec::with_capacity(out.len() * local.len());
        for prefix in &out {
            for l in &local {
                let mut v: Vec<u8> = prefix.clone();
                v.extend(l.images().iter().map(|&x| x + start));
                next.push(v);
            }
        }
        out = next;
        start += b as u8;
    }
    out.into_iter().map(Permutation).collect()
}

/// Reduces a rational matrix modulo a prime.
pub fn rational_matrix_mod(a: &Matrix<Rational>, m: Modulus) -> Vec<Vec<u32>> {
    let p = num_bigint::BigInt::from(m.p());
    (0..a.rows())
        .map(|i| {
            (0..a.cols())
                .map(|j| {
                    let q = a.get(i, j);
                    let n = (q.numer() % &p).to_i64().unwrap_or(0);
                    let dn = (q.denom() % &p).to_i64().unwrap_or(0);
                    m.mul(m.reduce(n), m.inv(m.reduce(dn)))
                })
                .collect()
        })
        .collect()
}

/// Converts an integral rational matrix; panics on a non-integer entry.
pub fn to_int_matrix(a: &Matrix<Rational>) -> IntMatrix {
    let mut out = IntMatrix::zeros(a.rows(), a.cols());
    for i in 0..a.rows() {
        for j in 0..a.cols() {
            let q = a.get(i, j);
            assert!(q.is_integer(), "non-integral entry");
            out.set(i, j, q.to_integer().to_i64().expect("entry fits in i64"));
        }
    }
    out
}
