//! Integer matrices: Hermite normal form with transform, integer kernels,
//! LLL reduction and the logarithmic basis-size metric.
//!
//! Entries are `i64`. Every row operation checks a per-row magnitude bound
//! and reports [`LinalgError::Overflow`] instead of wrapping.

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};

use super::LinalgError;
use crate::scalar::{rat, Rational};

const LIMIT: u128 = 1 << 62;

/// Dense row-major integer matrix.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct IntMatrix {
    rows: usize,
    cols: usize,
    data: Vec<i64>,
}

impl IntMatrix {
    pub fn zeros(rows: usize, cols: usize) -> Self {
        IntMatrix { rows, cols, data: vec![0; rows * cols] }
    }

    pub fn identity(n: usize) -> Self {
        let mut m = Self::zeros(n, n);
        for i in 0..n {
            m.set(i, i, 1);
        }
        m
    }

    pub fn from_rows(rows: &[Vec<i64>], cols: usize) -> Self {
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            assert_eq!(r.len(), cols, "ragged rows");
            data.extend_from_slice(r);
        }
        IntMatrix { rows: rows.len(), cols, data }
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn get(&self, i: usize, j: usize) -> i64 {
        self.data[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, v: i64) {
        self.data[i * self.cols + j] = v;
    }

    pub fn row(&self, i: usize) -> &[i64] {
        &self.data[i * self.cols..(i + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<i64>> {
        (0..self.rows).map(|i| self.row(i).to_vec()).collect()
    }

    pub fn transpose(&self) -> Self {
        let mut t = Self::zeros(self.cols, self.rows);
        for i in 0..self.rows {
            for j in 0..self.cols {
                t.set(j, i, self.get(i, j));
            }
        }
        t
    }

    /// Exact product, computed in `i128` with an overflow check.
    pub fn mul(&self, other: &Self) -> Result<Self, LinalgError> {
        if self.cols != other.rows {
            return Err(LinalgError::DimensionMismatch);
        }
        let mut out = Self::zeros(self.rows, other.cols);
        for i in 0..self.rows {
            let mut acc = vec![0i128; other.cols];
            for k in 0..self.cols {
                let a = self.get(i, k) as i128;
                if a == 0 {
                    continue;
                }
                for (s, &b) in acc.iter_mut().zip(other.row(k)) {
                    *s += a * b as i128;
                }
            }
            for (j, s) in acc.into_iter().enumerate() {
                out.set(i, j, i64::try_from(s).map_err(|_| LinalgError::Overflow)?);
            }
        }
        Ok(out)
    }

    /// True when the matrix is in row Hermite normal form: zero rows at
    /// the bottom, strictly increasing pivot columns, positive pivots, and
    /// entries above each pivot in `[0, pivot)`.
    pub fn is_hermite(&self) -> bool {
        let mut last: Option<usize> = None;
        let mut seen_zero = false;
        let mut pivots = Vec::new();
        for i in 0..self.rows {
            match self.row(i).iter().position(|&x| x != 0) {
                None => seen_zero = true,
                Some(c) => {
                    if seen_zero || last.is_some_and(|l| c <= l) || self.get(i, c) <= 0 {
                        return false;
                    }
                    last = Some(c);
                    pivots.push((i, c));
                }
            }
        }
        pivots.iter().all(|&(k, c)| {
            let p = self.get(k, c);
            (0..k).all(|i| (0..p).contains(&self.get(i, c)))
        })
    }

    /// Determinant by fraction-free (Bareiss) elimination over `BigInt`.
    pub fn determinant(&self) -> BigInt {
        assert_eq!(self.rows, self.cols, "square matrix required");
        let n = self.rows;
        let mut a: Vec<Vec<BigInt>> =
            (0..n).map(|i| self.row(i).iter().map(|&x| BigInt::from(x)).collect()).collect();
        let mut sign = 1;
        let mut prev = BigInt::from(1);
        for k in 0..n {
            let Some(p) = (k..n).find(|&i| !a[i][k].is_zero()) else {
                return BigInt::zero();
            };
            if p != k {
                a.swap(p, k);
                sign = -sign;
            }
            for i in k + 1..n {
                for j in k + 1..n {
                    let v = &a[i][j] * &a[k][k] - &a[i][k] * &a[k][j];
                    a[i][j] = v / &prev;
                }
            }
            prev = a[k][k].clone();
        }
        if n == 0 {
            BigInt::from(1)
        } else {
            &a[n - 1][n - 1] * sign
        }
    }
}

fn max_abs(v: &[i64]) -> u64 {
    v.iter().map(|x| x.unsigned_abs()).max().unwrap_or(0)
}

/// `target -= q * source`, refusing to leave the safe magnitude range.
fn sub_multiple(target: &mut [i64], tb: &mut u64, source: &[i64], sb: u64, q: i64) -> Result<(), LinalgError> {
    if q == 0 {
        return Ok(());
    }
    let bound = *tb as u128 + q.unsigned_abs() as u128 * sb as u128;
    if bound >= LIMIT {
        return Err(LinalgError::Overflow);
    }
    for (t, &s) in target.iter_mut().zip(source) {
        *t -= q * s;
    }
    *tb = max_abs(target);
    Ok(())
}

fn round_div(a: i64, b: i64) -> i64 {
    let q = a.div_euclid(b);
    let r = a.rem_euclid(b);
    if 2 * r.abs() > b.abs() || (2 * r.abs() == b.abs() && b > 0) {
        if b > 0 {
            q + 1
        } else {
            q - 1
        }
    } else {
        q
    }
}

/// Row-style Hermite reduction of `m` with a unimodular transform.
#[derive(Clone, Debug)]
pub struct HermiteResult {
    /// `u · m`; rows `rank..` are zero.
    pub h: IntMatrix,
    /// Unimodular transform.
    pub u: IntMatrix,
    pub rank: usize,
    pub pivot_columns: Vec<usize>,
}

impl HermiteResult {
    /// Rows of the transform that map the input to zero: a lattice basis of
    /// the integer left kernel.
    pub fn kernel_basis(&self) -> Vec<Vec<i64>> {
        (self.rank..self.u.rows()).map(|i| self.u.row(i).to_vec()).collect()
    }
}

/// Computes `u` unimodular with `u · m = h`, `h` in row Hermite normal form.
///
/// When `reduce_above` is false the entries above pivots are left
/// unreduced, which keeps the transform small; the kernel rows are a valid
/// lattice basis either way.
pub fn hermite_rows(m: &IntMatrix, reduce_above: bool) -> Result<HermiteResult, LinalgError> {
    let s = m.cols;
    let t = m.rows;
    let mut rows: Vec<Vec<i64>> = (0..t)
        .map(|i| {
            let mut v = m.row(i).to_vec();
            v.extend((0..t).map(|j| i64::from(i == j)));
            v
        })
        .collect();
    let mut bounds: Vec<u64> = rows.iter().map(|r| max_abs(r)).collect();
    let mut r = 0;
    let mut pivots = Vec::new();
    for col in 0..s {
        if r == t {
            break;
        }
        loop {
            let best = (r..t)
                .filter(|&i| rows[i][col] != 0)
                .min_by_key(|&i| (rows[i][col].unsigned_abs(), bounds[i], i));
            let Some(best) = best else { break };
            rows.swap(r, best);
            bounds.swap(r, best);
            let (head, tail) = rows.split_at_mut(r + 1);
            let pivot_row = &head[r];
            let pv = pivot_row[col];
            let mut done = true;
            for (off, row) in tail.iter_mut().enumerate() {
                let x = row[col];
                if x == 0 {
                    continue;
                }
                let q = round_div(x, pv);
                let i = r + 1 + off;
                let br = bounds[r];
                sub_multiple(row, &mut bounds[i], pivot_row, br, q)?;
                if row[col] != 0 {
                    done = false;
                }
            }
            if done {
                if rows[r][col] < 0 {
                    for x in rows[r].iter_mut() {
                        *x = -*x;
                    }
                }
                pivots.push(col);
                r += 1;
                break;
            }
        }
    }
    if reduce_above {
        for k in 0..r {
            let c = pivots[k];
            let (head, tail) = rows.split_at_mut(k);
            let pivot_row = &tail[0];
            let pv = pivot_row[c];
            for (i, row) in head.iter_mut().enumerate() {
                let q = row[c].div_euclid(pv);
                let bk = bounds[k];
                sub_multiple(row, &mut bounds[i], pivot_row, bk, q)?;
            }
        }
    }
    let mut h = IntMatrix::zeros(t, s);
    let mut u = IntMatrix::zeros(t, t);
    for (i, row) in rows.iter().enumerate() {
        h.data[i * s..(i + 1) * s].copy_from_slice(&row[..s]);
        u.data[i * t..(i + 1) * t].copy_from_slice(&row[s..]);
    }
    Ok(HermiteResult { h, u, rank: r, pivot_columns: pivots })
}

/// Hermite normal form of the transpose: returns `(h, u)` with
/// `u · aᵗ = h`. The bottom `cols(a) − rank(a)` rows of `u` are a lattice
/// basis of the integer right nullspace of `a`.
pub fn hermite_with_transform(a: &IntMatrix) -> Result<(IntMatrix, IntMatrix), LinalgError> {
    let res = hermite_rows(&a.transpose(), true)?;
    Ok((res.h, res.u))
}

/// Lattice basis of `{x ∈ Z^rows : x · m = 0}`.
pub fn integer_left_kernel(m: &IntMatrix) -> Result<Vec<Vec<i64>>, LinalgError> {
    Ok(hermite_rows(m, false)?.kernel_basis())
}

/// Σ log₁₀ ‖v‖ over the rows of a basis.
pub fn lattice_basis_size(basis: &[Vec<i64>]) -> Result<f64, LinalgError> {
    let mut total = 0.0;
    for v in basis {
        let n2: i128 = v.iter().map(|&x| (x as i128) * (x as i128)).sum();
        if n2 == 0 {
            return Err(LinalgError::ZeroVector);
        }
        total += 0.5 * (n2 as f64).log10();
    }
    Ok(total)
}

fn dot(a: &[i64], b: &[i64]) -> Result<i64, LinalgError> {
    let s: i128 = a.iter().zip(b).map(|(&x, &y)| x as i128 * y as i128).sum();
    i64::try_from(s).map_err(|_| LinalgError::Overflow)
}

fn delta_to_f64(delta: &Rational) -> Result<f64, LinalgError> {
    if *delta <= rat(1, 4) || *delta >= rat(1, 1) {
        return Err(LinalgError::InvalidDelta);
    }
    Ok(delta.numer().to_f64().unwrap_or(0.0) / delta.denom().to_f64().unwrap_or(1.0))
}

/// LLL reduction of linearly independent integer rows with parameter δ.
///
/// The basis and its Gram matrix are exact; the Gram–Schmidt data are
/// floating point and recomputed from the exact Gram matrix for the
/// current row at every step.
pub fn lll_reduce(basis: &[Vec<i64>], delta: &Rational) -> Result<Vec<Vec<i64>>, LinalgError> {
    let d = delta_to_f64(delta)?;
    let n = basis.len();
    if n <= 1 {
        return Ok(basis.to_vec());
    }
    let mut b = basis.to_vec();
    let mut bounds: Vec<u64> = b.iter().map(|v| max_abs(v)).collect();
    let mut g = vec![0i64; n * n];
    for i in 0..n {
        for j in 0..=i {
            let x = dot(&b[i], &b[j])?;
            g[i * n + j] = x;
            g[j * n + i] = x;
        }
    }
    let mut mu = vec![0f64; n * n];
    let mut r = vec![0f64; n * n];
    let mut bb = vec![0f64; n];

    let compute_row = |k: usize, g: &[i64], mu: &mut [f64], r: &mut [f64], bb: &mut [f64]| {
        for j in 0..k {
            let mut s = g[k * n + j] as f64;
            for i in 0..j {
                s -= mu[j * n + i] * r[k * n + i];
            }
            r[k * n + j] = s;
            mu[k * n + j] = s / bb[j];
        }
        let mut s = g[k * n + k] as f64;
        for i in 0..k {
            s -= mu[k * n + i] * r[k * n + i];
        }
        bb[k] = s;
    };

    compute_row(0, &g, &mut mu, &mut r, &mut bb);
    let mut k = 1;
    while k < n {
        loop {
            compute_row(k, &g, &mut mu, &mut r, &mut bb);
            let mut reduced = false;
            for j in (0..k).rev() {
                let m = mu[k * n + j];
                if m.abs() <= 0.5 + 1e-9 {
                    continue;
                }
                let q = m.round();
                if q.abs() > 1e15 {
                    return Err(LinalgError::Overflow);
                }
                let qi = q as i64;
                let (lo, hi) = b.split_at_mut(k);
                let bj = bounds[j];
                sub_multiple(&mut hi[0], &mut bounds[k], &lo[j], bj, qi)?;
                let old_kj = g[k * n + j] as i128;
                let gjj = g[j * n + j] as i128;
                let gkk = g[k * n + k] as i128 - 2 * qi as i128 * old_kj + (qi as i128) * (qi as i128) * gjj;
                for i in 0..n {
                    if i == k {
                        continue;
                    }
                    let v = g[k * n + i] as i128 - qi as i128 * g[j * n + i] as i128;
                    let v = i64::try_from(v).map_err(|_| LinalgError::Overflow)?;
                    g[k * n + i] = v;
                    g[i * n + k] = v;
                }
                g[k * n + k] = i64::try_from(gkk).map_err(|_| LinalgError::Overflow)?;
                for i in 0..j {
                    mu[k * n + i] -= q * mu[j * n + i];
                }
                mu[k * n + j] -= q;
                reduced = true;
            }
            if !reduced {
                break;
            }
        }
        let m = mu[k * n + k - 1];
        if bb[k] >= (d - m * m) * bb[k - 1] {
            k += 1;
        } else {
            b.swap(k, k - 1);
            bounds.swap(k, k - 1);
            for i in 0..n {
                g.swap(k * n + i, (k - 1) * n + i);
            }
            for i in 0..n {
                g.swap(i * n + k, i * n + k - 1);
            }
            k = if k > 1 { k - 1 } else { 1 };
            if k == 1 {
                compute_row(0, &g, &mut mu, &mut r, &mut bb);
            }
        }
    }
    Ok(b)
}

/// Exact check of the size-reduction and Lovász conditions using rational
/// Gram–Schmidt data. Intended for moderate dimensions.
pub fn is_lll_reduced_exact(basis: &[Vec<i64>], delta: &Rational) -> bool {
    use num_traits::Signed;
    let n = basis.len();
    let mut mu = vec![vec![Rational::zero(); n]; n];
    let mut bb = vec![Rational::zero(); n];
    let ip = |a: &[i64], b: &[i64]| {
        Rational::from_integer(a.iter().zip(b).map(|(&x, &y)| BigInt::from(x) * BigInt::from(y)).sum())
    };
    for k in 0..n {
        for j in 0..k {
            let mut s = ip(&basis[k], &basis[j]);
            for i in 0..j {
                s -= &mu[j][i] * &mu[k][i] * &bb[i];
            }
            mu[k][j] = s / &bb[j];
        }
        let mut s = ip(&basis[k], &basis[k]);
        for i in 0..k {
            s -= &mu[k][i] * &mu[k][i] * &bb[i];
        }
        bb[k] = s;
    }
    let half = rat(1, 2);
    for k in 1..n {
        if (0..k).any(|j| mu[k][j].abs() > half) {
            return false;
        }
        let m2 = &mu[k][k - 1] * &mu[k][k - 1];
        if bb[k] < (delta - m2) * &bb[k - 1] {
            return false;
        }
    }
    true
}

/// Floating-point check of the LLL conditions with a small tolerance, for
/// bases too large for the exact check.
pub fn is_lll_reduced_approx(basis: &[Vec<i64>], delta: &Rational) -> bool {
    let Ok(d) = delta_to_f64(delta) else { return false };
    let n = basis.len();
    let m = basis.first().map_or(0, |v| v.len());
    let mut star: Vec<Vec<f64>> = Vec::with_capacity(n);
    let mut bb: Vec<f64> = Vec::with_capacity(n);
    for k in 0..n {
        let mut v: Vec<f64> = basis[k].iter().map(|&x| x as f64).collect();
        let mut mus = Vec::with_capacity(k);
        for j in 0..k {
            let num: f64 = basis[k].iter().zip(&star[j]).map(|(&x, y)| x as f64 * y).sum();
            let mu = num / bb[j];
            if mu.abs() > 0.5 + 1e-6 {
                return false;
            }
            mus.push(mu);
            for t in 0..m {
                v[t] -= mu * star[j][t];
            }
        }
        let nb: f64 = v.iter().map(|x| x * x).sum();
        if k > 0 {
            let mu = mus[k - 1];
            if nb < (d - mu * mu) * bb[k - 1] * (1.0 - 1e-9) - 1e-9 {
                return false;
            }
        }
        star.push(v);
        bb.push(nb);
    }
    true
}
