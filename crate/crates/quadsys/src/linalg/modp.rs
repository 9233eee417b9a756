//! Row reduction over F_p with a runtime prime.
//!
//! Rows are stored as reduced `u32` residues. Elimination accumulates into
//! `u64` and only reduces when the accumulated bound could overflow.

use crate::scalar::{inv_mod, is_prime, symmetric_rep};

/// Default working prime.
pub const DEFAULT_PRIME: u32 = 101;

/// A prime modulus with precomputed elimination bounds.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct Modulus {
    p: u32,
    lazy_ops: u64,
}

impl Modulus {
    /// Panics if `p` is not a prime below 2³¹.
    pub fn new(p: u32) -> Self {
        assert!(is_prime(p) && p < (1 << 31), "modulus must be a prime below 2^31");
        let sq = (p as u64 - 1) * (p as u64 - 1);
        let lazy_ops = if sq == 0 { u64::MAX } else { (u64::MAX - p as u64) / sq - 1 };
        Modulus { p, lazy_ops: lazy_ops.max(1) }
    }

    pub fn p(self) -> u32 {
        self.p
    }

    pub fn reduce(self, x: i64) -> u32 {
        x.rem_euclid(self.p as i64) as u32
    }

    pub fn symmetric(self, x: u32) -> i64 {
        symmetric_rep(x, self.p)
    }

    pub fn inv(self, x: u32) -> u32 {
        inv_mod(x, self.p).expect("inverse of zero")
    }

    pub fn mul(self, a: u32, b: u32) -> u32 {
        ((a as u64 * b as u64) % self.p as u64) as u32
    }

    pub fn add(self, a: u32, b: u32) -> u32 {
        ((a as u64 + b as u64) % self.p as u64) as u32
    }

    pub fn neg(self, a: u32) -> u32 {
        (self.p - a) % self.p
    }
}

const NONE: u32 = u32::MAX;

/// Incremental row-echelon basis of a subspace of F_p^width.
///
/// Every stored row is normalized with pivot 1 and stored from its pivot
/// column onwards.
#[derive(Clone, Debug)]
pub struct EchelonBasis {
    m: Modulus,
    width: usize,
    rows: Vec<Vec<u32>>,
    pivots: Vec<usize>,
    pivot_of_col: Vec<u32>,
    scratch: Vec<u64>,
}

impl EchelonBasis {
    pub fn new(m: Modulus, width: usize) -> Self {
        EchelonBasis {
            m,
            width,
            rows: Vec::new(),
            pivots: Vec::new(),
            pivot_of_col: vec![NONE; width],
            scratch: vec![0; width],
        }
    }

    pub fn modulus(&self) -> Modulus {
        self.m
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduces `row` against the basis into the scratch buffer and returns
    /// the first nonzero column of the remainder.
    fn reduce_into_scratch(&mut self, row: &[u32]) -> Option<usize> {
        assert_eq!(row.len(), self.width, "row width mismatch");
        let p = self.m.p as u64;
        let limit = self.m.lazy_ops;
        let v = &mut self.scratch;
        for (x, &y) in v.iter_mut().zip(row) {
            *x = y as u64;
        }
        let mut ops = 0u64;
        for c in 0..self.width {
            let r = self.pivot_of_col[c];
            if r == NONE {
                continue;
            }
            let val = v[c] % p;
            if val == 0 {
                v[c] = 0;
                continue;
            }
            let f = p - val;
            let prow = &self.rows[r as usize];
            for (x, &y) in v[c..].iter_mut().zip(prow.iter()) {
                *x += f * y as u64;
            }
            ops += 1;
            if ops >= limit {
                for x in v[c..].iter_mut() {
                    *x %= p;
                }
                ops = 0;
            }
        }
        let mut first = None;
        for (c, x) in v.iter_mut().enumerate() {
            *x %= p;
            if first.is_none() && *x != 0 {
                first = Some(c);
            }
        }
        first
    }

    /// Inserts a row; returns true when the rank increased.
    pub fn insert(&mut self, row: &[u32]) -> bool {
        let Some(c) = self.reduce_into_scratch(row) else {
            return false;
        };
        let inv = self.m.inv(self.scratch[c] as u32) as u64;
        let p = self.m.p as u64;
        let stored: Vec<u32> = self.scratch[c..].iter().map(|&x| ((x * inv) % p) as u32).collect();
        self.pivot_of_col[c] = self.rows.len() as u32;
        self.rows.push(stored);
        self.pivots.push(c);
        true
    }

    /// True when `row` lies in the span.
    pub fn contains(&mut self, row: &[u32]) -> bool {
        self.reduce_into_scratch(row).is_none()
    }

    /// Remainder of `row` after reduction against the basis.
    pub fn remainder(&mut self, row: &[u32]) -> Vec<u32> {
        self.reduce_into_scratch(row);
        self.scratch.iter().map(|&x| x as u32).collect()
    }

    /// Pivot columns in increasing order.
    pub fn pivot_columns(&self) -> Vec<usize> {
        let mut p = self.pivots.clone();
        p.sort_unstable();
        p
    }

    /// Reduced row echelon form: full rows sorted by pivot column.
    pub fn into_rcf(self) -> (Vec<Vec<u32>>, Vec<usize>) {
        let p = self.m.p as u64;
        let width = self.width;
        let mut order: Vec<usize> = (0..self.rows.len()).collect();
        order.sort_unstable_by_key(|&i| self.pivots[i]);
        let mut full: Vec<Vec<u32>> = Vec::with_capacity(order.len());
        let pivots: Vec<usize> = order.iter().map(|&i| self.pivots[i]).collect();
        for &i in &order {
            let mut v = vec![0u32; width];
            v[self.pivots[i]..].copy_from_slice(&self.rows[i]);
            full.push(v);
        }
        let mut pos_of_col = vec![NONE; width];
        for (k, &c) in pivots.iter().enumerate() {
            pos_of_col[c] = k as u32;
        }
        let mut acc = vec![0u64; width];
        for k in (0..full.len()).rev() {
            let pc = pivots[k];
            for (a, &x) in acc.iter_mut().zip(&full[k]) {
                *a = x as u64;
            }
            let mut ops = 0u64;
            for c in pc + 1..width {
                let j = pos_of_col[c];
                if j == NONE {
                    continue;
                }
                let val = acc[c] % p;
                if val == 0 {
                    acc[c] = 0;
                    continue;
                }
                let f = p - val;
                let src = &full[j as usize];
                for (a, &y) in acc[c..].iter_mut().zip(&src[c..]) {
                    *a += f * y as u64;
                }
                ops += 1;
                if ops >= self.m.lazy_ops {
                    for a in acc[c..].iter_mut() {
                        *a %= p;
                    }
                    ops = 0;
                }
            }
            for (x, a) in full[k].iter_mut().zip(&acc) {
                *x = (a % p) as u32;
            }
        }
        (full, pivots)
    }
}

/// Rank of a list of rows over F_p.
pub fn rank_mod(m: Modulus, rows: &[Vec<u32>], width: usize) -> usize {
    let mut b = EchelonBasis::new(m, width);
    for r in rows {
        b.insert(r);
        if b.rank() == width {
            break;
        }
    }
    b.rank()
}

/// Reduced row echelon form over F_p.
pub fn rcf_mod(m: Modulus, rows: &[Vec<u32>], width: usize) -> (Vec<Vec<u32>>, Vec<usize>) {
    let mut b = EchelonBasis::new(m, width);
    for r in rows {
        b.insert(r);
    }
    b.into_rcf()
}

/// Canonical (RCF) basis of the right nullspace over F_p.
pub fn nullspace_mod(m: Modulus, rows: &[Vec<u32>], width: usize) -> Vec<Vec<u32>> {
    let (rcf, pivots) = rcf_mod(m, rows, width);
    nullspace_from_rcf(m, &rcf, &pivots, width)
}

/// Nullspace basis read off a reduced row echelon form. The result is
/// already in RCF: each vector has a 1 in its free column and zeros in the
/// other free columns.
pub fn nullspace_from_rcf(m: Modulus, rcf: &[Vec<u32>], pivots: &[usize], width: usize) -> Vec<Vec<u32>> {
    let mut is_pivot = vec![false; width];
    for &c in pivots {
        is_pivot[c] = true;
    }
    let mut out = Vec::new();
    for f in (0..width).filter(|&c| !is_pivot[c]) {
        let mut v = vec![0u32; width];
        v[f] = 1;
        for (row, &pc) in rcf.iter().zip(pivots) {
            v[pc] = m.neg(row[f]);
        }
        out.push(v);
    }
    out
}

/// Matrix product over F_p of dense row-major matrices.
pub fn matmul_mod(m: Modulus, a: &[Vec<u32>], b: &[Vec<u32>]) -> Vec<Vec<u32>> {
    let p = m.p as u64;
    let cols = b.first().map_or(0, |r| r.len());
    a.iter()
        .map(|row| {
            let mut acc = vec![0u64; cols];
            let mut ops = 0;
            for (k, &x) in row.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                for (s, &y) in acc.iter_mut().zip(&b[k]) {
                    *s += x as u64 * y as u64;
                }
                ops += 1;
                if ops >= m.lazy_ops {
                    for s in acc.iter_mut() {
                        *s %= p;
                    }
                    ops = 0;
                }
            }
            acc.into_iter().map(|s| (s % p) as u32).collect()
        })
        .collect()
}

/// Inverse of a square matrix over F_p, if it exists.
pub fn inverse_mod(m: Modulus, a: &[Vec<u32>]) -> Option<Vec<Vec<u32>>> {
    let n = a.len();
    let rows: Vec<Vec<u32>> = a
        .iter()
        .enumerate()
        .map(|(i, r)| {
            let mut v = r.clone();
            v.extend((0..n).map(|j| u32::from(i == j)));
            v
        })
        .collect();
    let (rcf, pivots) = rcf_mod(m, &rows, 2 * n);
    if pivots.len() < n || pivots[n - 1] != n - 1 {
        return None;
    }
    Some(rcf.into_iter().map(|r| r[n..].to_vec()).collect())
}
