//! Exact scalar fields: rationals, quadratic extensions Q(√D), and prime fields.

use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};
use std::str::FromStr;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

/// Arbitrary-precision rational number.
pub type Rational = num_rational::BigRational;

/// An exact field usable by the generic dense matrix routines.
pub trait Field:
    Clone
    + PartialEq
    + fmt::Debug
    + fmt::Display
    + Zero
    + One
    + Add<Output = Self>
    + Sub<Output = Self>
    + Mul<Output = Self>
    + Neg<Output = Self>
    + Send
    + Sync
{
    /// Multiplicative inverse, `None` for zero.
    fn inv(&self) -> Option<Self>;

    /// Embeds a rational number.
    fn from_rational(q: &Rational) -> Self;

    fn from_i64(n: i64) -> Self {
        Self::from_rational(&Rational::from_integer(BigInt::from(n)))
    }
}

impl Field for Rational {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            Some(self.recip())
        }
    }

    fn from_rational(q: &Rational) -> Self {
        q.clone()
    }
}

/// Builds a rational from a numerator and a denominator.
pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

/// Builds an integral rational.
pub fn rint(n: i64) -> Rational {
    Rational::from_integer(BigInt::from(n))
}

/// Parses "n" or "n/d".
pub fn parse_rational(s: &str) -> Option<Rational> {
    let s = s.trim();
    match s.split_once('/') {
        Some((n, d)) => {
            let n = BigInt::from_str(n.trim()).ok()?;
            let d = BigInt::from_str(d.trim()).ok()?;
            if d.is_zero() {
                None
            } else {
                Some(Rational::new(n, d))
            }
        }
        None => BigInt::from_str(s).ok().map(Rational::from_integer),
    }
}

/// Returns the squarefree part of a nonzero integer together with the
/// square root of the removed square factor: `n = s² · D`.
pub fn squarefree_decomposition(n: &BigInt) -> (BigInt, BigInt) {
    assert!(!n.is_zero());
    let sign = if n.is_negative() { -1 } else { 1 };
    let mut m = n.abs();
    let mut s = BigInt::one();
    let mut d = BigInt::one();
    let mut f = BigInt::from(2);
    while &f * &f <= m {
        let mut count = 0u32;
        while (&m % &f).is_zero() {
            m /= &f;
            count += 1;
        }
        for _ in 0..count / 2 {
            s *= &f;
        }
        if count % 2 == 1 {
            d *= &f;
        }
        f += 1;
    }
    d *= m;
    (d * sign, s)
}

/// Element x + y√D of a quadratic extension of Q.
///
/// The radicand is carried by the element. Purely rational elements have
/// `d == 0` until they meet an irrational partner; mixing two different
/// radicands is a logic error and panics.
#[derive(Clone, Debug)]
pub struct QuadNumber {
    re: Rational,
    im: Rational,
    d: i64,
}

impl QuadNumber {
    pub fn rational(q: Rational) -> Self {
        QuadNumber { re: q, im: Rational::zero(), d: 0 }
    }

    /// x + y√D. `d` must be squarefree and different from 0 and 1.
    pub fn new(re: Rational, im: Rational, d: i64) -> Self {
        assert!(d != 0 && d != 1, "radicand must be squarefree and not 0 or 1");
        QuadNumber { re, im, d }
    }

    /// The element √D.
    pub fn sqrt(d: i64) -> Self {
        Self::new(Rational::zero(), Rational::one(), d)
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    /// Radicand, or 0 when none has been fixed.
    pub fn radicand(&self) -> i64 {
        self.d
    }

    pub fn is_rational(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        QuadNumber { re: self.re.clone(), im: -self.im.clone(), d: self.d }
    }

    /// Field norm x² − D y².
    pub fn norm(&self) -> Rational {
        &self.re * &self.re - &self.im * &self.im * rint(self.d)
    }

    fn merge(a: i64, b: i64) -> i64 {
        match (a, b) {
            (0, x) | (x, 0) => x,
            (x, y) if x == y => x,
            (x, y) => panic!("mixed radicands {x} and {y}"),
        }
    }
}

impl PartialEq for QuadNumber {
    fn eq(&self, other: &Self) -> bool {
        self.re == other.re
            && self.im == other.im
            && (self.im.is_zero() || self.d == other.d)
    }
}

impl Eq for QuadNumber {}

impl fmt::Display for QuadNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.im.is_zero() {
            write!(f, "{}", self.re)
        } else if self.im.is_negative() {
            write!(f, "{}-{}*sqrt({})", self.re, -self.im.clone(), self.d)
        } else {
            write!(f, "{}+{}*sqrt({})", self.re, self.im, self.d)
        }
    }
}

impl FromStr for QuadNumber {
    type Err = String;

    /// Parses "x" or "x+y*sqrt(D)" with rational x, y.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if let Some(pos) = s.find("*sqrt(") {
            let head = &s[..pos];
            let tail = &s[pos + 6..];
            let d: i64 = tail
                .strip_suffix(')')
                .and_then(|t| t.trim().parse().ok())
                .ok_or_else(|| format!("bad radicand in {s}"))?;
            let split = head
                .char_indices()
                .skip(1)
                .find(|(_, c)| *c == '+' || *c == '-')
                .map(|(i, _)| i)
                .ok_or_else(|| format!("bad quadratic number {s}"))?;
            let re = parse_rational(&head[..split]).ok_or_else(|| format!("bad real part in {s}"))?;
            let im_str = head[split..].trim_start_matches('+');
            let im = parse_rational(im_str).ok_or_else(|| format!("bad radical part in {s}"))?;
            Ok(QuadNumber::new(re, im, d))
        } else {
            parse_rational(s)
                .map(QuadNumber::rational)
                .ok_or_else(|| format!("bad rational {s}"))
        }
    }
}

impl Add for QuadNumber {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        QuadNumber { re: self.re + o.re, im: self.im + o.im, d: Self::merge(self.d, o.d) }
    }
}

impl Sub for QuadNumber {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        QuadNumber { re: self.re - o.re, im: self.im - o.im, d: Self::merge(self.d, o.d) }
    }
}

impl Mul for QuadNumber {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        let d = Self::merge(self.d, o.d);
        let re = &self.re * &o.re + &self.im * &o.im * rint(d);
        let im = &self.re * &o.im + &self.im * &o.re;
        QuadNumber { re, im, d }
    }
}

impl Div for QuadNumber {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero")
    }
}

impl Neg for QuadNumber {
    type Output = Self;
    fn neg(self) -> Self {
        QuadNumber { re: -self.re, im: -self.im, d: self.d }
    }
}

impl Zero for QuadNumber {
    fn zero() -> Self {
        QuadNumber::rational(Rational::zero())
    }
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }
}

impl One for QuadNumber {
    fn one() -> Self {
        QuadNumber::rational(Rational::one())
    }
}

impl Field for QuadNumber {
    fn inv(&self) -> Option<Self> {
        if self.is_zero() {
            return None;
        }
        let n = self.norm();
        Some(QuadNumber {
            re: &self.re / &n,
            im: -(&self.im / &n),
            d: self.d,
        })
    }

    fn from_rational(q: &Rational) -> Self {
        QuadNumber::rational(q.clone())
    }
}

/// Element of the prime field F_P with a compile-time modulus.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub struct Fp<const P: u32>(u32);

impl<const P: u32> Fp<P> {
    pub fn new(x: i64) -> Self {
        Fp(x.rem_euclid(P as i64) as u32)
    }

    pub fn value(self) -> u32 {
        self.0
    }

    /// Symmetric representative in (−P/2, P/2].
    pub fn symmetric(self) -> i64 {
        symmetric_rep(self.0, P)
    }
}

impl<const P: u32> fmt::Display for Fp<P> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl<const P: u32> Add for Fp<P> {
    type Output = Self;
    fn add(self, o: Self) -> Self {
        Fp(((self.0 as u64 + o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Sub for Fp<P> {
    type Output = Self;
    fn sub(self, o: Self) -> Self {
        Fp(((self.0 as u64 + P as u64 - o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Mul for Fp<P> {
    type Output = Self;
    fn mul(self, o: Self) -> Self {
        Fp(((self.0 as u64 * o.0 as u64) % P as u64) as u32)
    }
}

impl<const P: u32> Neg for Fp<P> {
    type Output = Self;
    fn neg(self) -> Self {
        Fp((P - self.0) % P)
    }
}

impl<const P: u32> Div for Fp<P> {
    type Output = Self;
    fn div(self, o: Self) -> Self {
        self * o.inv().expect("division by zero")
    }
}

impl<const P: u32> Zero for Fp<P> {
    fn zero() -> Self {
        Fp(0)
    }
    fn is_zero(&self) -> bool {
        self.0 == 0
    }
}

impl<const P: u32> One for Fp<P> {
    fn one() -> Self {
        Fp(1 % P)
    }
}

impl<const P: u32> Field for Fp<P> {
    fn inv(&self) -> Option<Self> {
        inv_mod(self.0, P).map(Fp)
    }

    fn from_rational(q: &Rational) -> Self {
        let p = BigInt::from(P);
        let n = q.numer().mod_floor(&p);
        let d = q.denom().mod_floor(&p);
        let n: u32 = n.try_into().expect("reduced residue fits");
        let d: u32 = d.try_into().expect("reduced residue fits");
        Fp(n) * Fp(d).inv().expect("denominator divisible by the modulus")
    }
}

/// Inverse of `a` modulo `p`, `None` when not invertible.
pub fn inv_mod(a: u32, p: u32) -> Option<u32> {
    let (mut t, mut new_t) = (0i64, 1i64);
    let (mut r, mut new_r) = (p as i64, (a % p) as i64);
    while new_r != 0 {
        let q = r / new_r;
        (t, new_t) = (new_t, t - q * new_t);
        (r, new_r) = (new_r, r - q * new_r);
    }
    if r != 1 {
        return None;
    }
    Some(t.rem_euclid(p as i64) as u32)
}

/// Symmetric representative of a residue in (−p/2, p/2].
pub fn symmetric_rep(x: u32, p: u32) -> i64 {
    let x = x as i64;
    let p = p as i64;
    if 2 * x > p {
        x - p
    } else {
        x
    }
}

/// Reduces an integer into [0, p).
pub fn reduce_i64(x: i64, p: u32) -> u32 {
    x.rem_euclid(p as i64) as u32
}

/// Deterministic primality test for 32-bit moduli.
pub fn is_prime(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    let mut f = 2u32;
    while (f as u64) * (f as u64) <= n as u64 {
        if n % f == 0 {
            return false;
        }
        f += 1;
    }
    true
}
