//! Recovery of small rational vectors from residues modulo a prime.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};

use super::LinalgError;
use crate::scalar::{symmetric_rep, Rational};

/// Largest denominator tried by the clustering step.
const MAX_CLUSTER_DENOMINATOR: i64 = 12;

/// Wang reconstruction of a single residue: the unique `n/d` with
/// `|n|, d ≤ √(p/2)` and `n ≡ d·x (mod p)`, if it exists.
pub fn wang_reconstruct(x: u32, p: u32) -> Option<Rational> {
    let bound = ((p as f64) / 2.0).sqrt().floor() as i64;
    let (mut r0, mut r1) = (p as i64, x as i64 % p as i64);
    let (mut t0, mut t1) = (0i64, 1i64);
    while r1 > bound {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (t0, t1) = (t1, t0 - q * t1);
    }
    if t1 == 0 || t1.abs() > bound {
        return None;
    }
    let (n, d) = if t1 < 0 { (-r1, -t1) } else { (r1, t1) };
    if num_integer::gcd(n, d) != 1 {
        return None;
    }
    Some(Rational::new(BigInt::from(n), BigInt::from(d)))
}

fn residue_of(q: &Rational, p: u32) -> Option<u32> {
    let pb = BigInt::from(p);
    let n = q.numer().mod_floor(&pb).to_u32()?;
    let d = q.denom().mod_floor(&pb).to_u32()?;
    let di = crate::scalar::inv_mod(d, p)?;
    Some(((n as u64 * di as u64) % p as u64) as u32)
}

/// Detects a common denominator `d` such that every `d·x` has a small
/// symmetric representative. Returns the smallest such `d`.
pub fn cluster_denominator(residues: &[u32], p: u32) -> Option<i64> {
    let bound = (((p as f64) / 2.0).sqrt().floor() as i64).max(1);
    (1..=MAX_CLUSTER_DENOMINATOR).find(|&d| {
        residues.iter().all(|&x| {
            let y = ((x as u64 * d as u64) % p as u64) as u32;
            symmetric_rep(y, p).abs() <= bound
        })
    })
}

/// Rational vector congruent to `residues` modulo `p`.
///
/// Tries a common denominator detected by clustering first and falls back
/// to per-entry Wang reconstruction. The result is verified by reducing it
/// modulo `p` again.
pub fn rational_reconstruct(residues: &[u32], p: u32) -> Result<Vec<Rational>, LinalgError> {
    let candidate: Option<Vec<Rational>> = match cluster_denominator(residues, p) {
        Some(d) => Some(
            residues
                .iter()
                .map(|&x| {
                    let y = ((x as u64 * d as u64) % p as u64) as u32;
                    Rational::new(BigInt::from(symmetric_rep(y, p)), BigInt::from(d))
                })
                .collect(),
        ),
        None => residues.iter().map(|&x| wang_reconstruct(x, p)).collect(),
    };
    let v = candidate.ok_or(LinalgError::ReconstructionFailed)?;
    for (q, &x) in v.iter().zip(residues) {
        if residue_of(q, p) != Some(x % p) {
            return Err(LinalgError::ReconstructionFailed);
        }
    }
    Ok(v)
}

/// Shortest integral multiple of a rational vector: scales by the lcm of
/// the denominators, divides by the gcd of the numerators, and makes the
/// first nonzero entry positive.
pub fn primitive_integer_vector(v: &[Rational]) -> Vec<BigInt> {
    let l = v.iter().fold(BigInt::one(), |acc, q| acc.lcm(q.denom()));
    let mut out: Vec<BigInt> = v.iter().map(|q| q.numer() * (&l / q.denom())).collect();
    let g = out.iter().fold(BigInt::zero(), |acc, x| acc.gcd(x));
    if !g.is_zero() {
        for x in out.iter_mut() {
            *x /= &g;
        }
    }
    if out.iter().find(|x| !x.is_zero()).is_some_and(|x| x.is_negative()) {
        for x in out.iter_mut() {
            *x = -x.clone();
        }
    }
    out
}

/// Reconstructs and clears denominators in one step.
pub fn reconstruct_integer_vector(residues: &[u32], p: u32) -> Result<Vec<i64>, LinalgError> {
    let q = rational_reconstruct(residues, p)?;
    primitive_integer_vector(&q)
        .into_iter()
        .map(|x| x.to_i64().ok_or(LinalgError::Overflow))
        .collect()
}
