//! Scalar fields: F_p with Barrett-reduced u32 arithmetic, and arbitrary-precision ℚ.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;

/// An exact field of scalars.
///
/// All matrix and algebra code is generic over this trait. The two bulk operations
/// `axpy` and `multi_axpy` have straightforward defaults; `PrimeField` overrides them
/// with delayed-reduction loops, which is where virtually all elimination time goes.
pub trait Field: Clone + PartialEq + fmt::Debug + Send + Sync + 'static {
    type Elem: Clone + PartialEq + fmt::Debug + Send + Sync + 'static;

    fn zero(&self) -> Self::Elem;
    fn one(&self) -> Self::Elem;
    fn is_zero(&self, a: &Self::Elem) -> bool;
    fn is_one(&self, a: &Self::Elem) -> bool;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn sub(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;
    fn neg(&self, a: &Self::Elem) -> Self::Elem;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Self::Elem;

    /// Multiplicative inverse; `None` exactly for zero.
    fn inv(&self, a: &Self::Elem) -> Option<Self::Elem>;

    /// Image of the integer `k` under the unique ring map ℤ → field.
    fn from_integer(&self, k: i64) -> Self::Elem;

    /// Parse a scalar literal: an integer (`-7`) or a fraction (`3/4`, denominator invertible).
    fn parse(&self, s: &str) -> Result<Self::Elem, String>;

    /// Render a scalar exactly, e.g. `3/7` over ℚ or `4 mod 5` over F_5.
    fn render(&self, a: &Self::Elem) -> String;

    /// Render a scalar in a form `parse` accepts, so values survive a
    /// serialization round trip: the least residue over F_p, `a/b` over ℚ.
    fn encode(&self, a: &Self::Elem) -> String;

    /// Short ring name for reports: `Q`, `F5`, ….
    fn descriptor(&self) -> String;

    /// The field characteristic (0 for ℚ).
    fn characteristic(&self) -> u64;

    fn pow(&self, a: &Self::Elem, mut e: u64) -> Self::Elem {
        let mut base = a.clone();
        let mut acc = self.one();
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(&acc, &base);
            }
            base = self.mul(&base, &base);
            e >>= 1;
        }
        acc
    }

    /// `target += c * src`, elementwise.
    fn axpy(&self, target: &mut [Self::Elem], c: &Self::Elem, src: &[Self::Elem]) {
        debug_assert_eq!(target.len(), src.len());
        if self.is_zero(c) {
            return;
        }
        for (t, s) in target.iter_mut().zip(src) {
            *t = self.add(t, &self.mul(c, s));
        }
    }

    /// `target += Σ c_k * row_k` in one pass. The default is a loop of `axpy`;
    /// `PrimeField` processes several rows per reduction.
    fn multi_axpy(&self, target: &mut [Self::Elem], terms: &[(Self::Elem, &[Self::Elem])]) {
        for (c, row) in terms {
            self.axpy(target, c, row);
        }
    }

    /// `v *= c`, elementwise.
    fn scale_in_place(&self, v: &mut [Self::Elem], c: &Self::Elem) {
        for t in v.iter_mut() {
            *t = self.mul(t, c);
        }
    }
}

/// F_p for a prime p < 2^31. Elements are reduced residues stored as `u32`.
///
/// Products are reduced with a Barrett scheme: with `m = ⌊2^64 / p⌋` and any
/// `x < 2^63`, `q = ⌊x·m / 2^64⌋` satisfies `x − q·p < 2p`, so one conditional
/// subtraction finishes the reduction — no division in the hot loop.
#[derive(Clone, PartialEq, Eq)]
pub struct PrimeField {
    p: u32,
    barrett: u64,
    /// How many products (p−1)² fit in a u64 accumulator next to an initial
    /// value < p; `multi_axpy` reduces once per this many fused rows.
    chunk: usize,
}

impl fmt::Debug for PrimeField {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "PrimeField({})", self.p)
    }
}

fn is_prime_u32(n: u32) -> bool {
    if n < 2 {
        return false;
    }
    for q in [2u32, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31] {
        if n == q {
            return true;
        }
        if n % q == 0 {
            return false;
        }
    }
    let mut d = 37u64;
    let n64 = n as u64;
    while d * d <= n64 {
        if n64 % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

impl PrimeField {
    /// A prime field F_p. Errors if `p` is not a prime below 2^31.
    pub fn new(p: u32) -> Result<Self, String> {
        if p >= (1 << 31) {
            return Err(format!("modulus {p} too large; need p < 2^31"));
        }
        if !is_prime_u32(p) {
            return Err(format!("modulus {p} is not prime"));
        }
        let barrett = ((1u128 << 64) / p as u128) as u64;
        let pm1 = (p - 1) as u64;
        let budget = u64::MAX - pm1;
        let per_term = (pm1 * pm1).max(1);
        let chunk = ((budget / per_term).min(16).max(1)) as usize;
        Ok(PrimeField { p, barrett, chunk })
    }

    pub fn modulus(&self) -> u32 {
        self.p
    }

    /// Reduce x mod p for any u64 x below 2^63 (all accumulator values we form qualify).
    #[inline(always)]
    fn reduce(&self, x: u64) -> u32 {
        let q = ((x as u128 * self.barrett as u128) >> 64) as u64;
        let mut r = x.wrapping_sub(q.wrapping_mul(self.p as u64));
        if r >= self.p as u64 {
            r -= self.p as u64;
        }
        debug_assert_eq!(r, x % self.p as u64);
        r as u32
    }
}

impl Field for PrimeField {
    type Elem = u32;

    fn zero(&self) -> u32 {
        0
    }
    fn one(&self) -> u32 {
        1 % self.p
    }
    fn is_zero(&self, a: &u32) -> bool {
        *a == 0
    }
    fn is_one(&self, a: &u32) -> bool {
        *a == 1 % self.p
    }

    fn add(&self, a: &u32, b: &u32) -> u32 {
        let s = *a as u64 + *b as u64;
        if s >= self.p as u64 {
            (s - self.p as u64) as u32
        } else {
            s as u32
        }
    }

    fn sub(&self, a: &u32, b: &u32) -> u32 {
        if a >= b {
            a - b
        } else {
            a + self.p - b
        }
    }

    fn neg(&self, a: &u32) -> u32 {
        if *a == 0 {
            0
        } else {
            self.p - a
        }
    }

    fn mul(&self, a: &u32, b: &u32) -> u32 {
        self.reduce(*a as u64 * *b as u64)
    }

    fn inv(&self, a: &u32) -> Option<u32> {
        if *a == 0 {
            None
        } else {
            Some(self.pow(a, self.p as u64 - 2))
        }
    }

    fn from_integer(&self, k: i64) -> u32 {
        k.rem_euclid(self.p as i64) as u32
    }

    fn parse(&self, s: &str) -> Result<u32, String> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<u32, String> {
            let v: i128 = t
                .trim()
                .parse()
                .map_err(|_| format!("cannot parse `{t}` as an integer"))?;
            Ok(v.rem_euclid(self.p as i128) as u32)
        };
        match s.split_once('/') {
            None => parse_int(s),
            Some((num, den)) => {
                let n = parse_int(num)?;
                let d = parse_int(den)?;
                let di = self
                    .inv(&d)
                    .ok_or_else(|| format!("denominator `{den}` is zero mod {}", self.p))?;
                Ok(self.mul(&n, &di))
            }
        }
    }

    fn render(&self, a: &u32) -> String {
        format!("{} mod {}", a, self.p)
    }

    fn encode(&self, a: &u32) -> String {
        a.to_string()
    }

    fn descriptor(&self) -> String {
        format!("F{}", self.p)
    }

    fn characteristic(&self) -> u64 {
        self.p as u64
    }

    fn axpy(&self, target: &mut [u32], c: &u32, src: &[u32]) {
        debug_assert_eq!(target.len(), src.len());
        if *c == 0 {
            return;
        }
        let c = *c as u64;
        for (t, s) in target.iter_mut().zip(src) {
            *t = self.reduce(*t as u64 + c * *s as u64);
        }
    }

    fn multi_axpy(&self, target: &mut [u32], terms: &[(u32, &[u32])]) {
        // Fuse up to `chunk` rows per reduction: the u64 accumulator takes an initial
        // value < p plus `chunk` products ≤ (p−1)² without overflow by construction.
        for group in terms.chunks(self.chunk) {
            let live: Vec<(u64, &[u32])> = group
                .iter()
                .filter(|(c, _)| *c != 0)
                .map(|(c, row)| {
                    debug_assert_eq!(row.len(), target.len());
                    (*c as u64, *row)
                })
                .collect();
            match live.len() {
                0 => {}
                1 => {
                    let (c, row) = live[0];
                    for (t, s) in target.iter_mut().zip(row) {
                        *t = self.reduce(*t as u64 + c * *s as u64);
                    }
                }
                _ => {
                    for (i, t) in target.iter_mut().enumerate() {
                        let mut acc = *t as u64;
                        for (c, row) in &live {
                            acc += c * row[i] as u64;
                        }
                        *t = self.reduce(acc);
                    }
                }
            }
        }
    }

    fn scale_in_place(&self, v: &mut [u32], c: &u32) {
        let c = *c as u64;
        for t in v.iter_mut() {
            *t = self.reduce(*t as u64 * c);
        }
    }
}

/// The rational numbers with arbitrary-precision arithmetic.
#[derive(Clone, PartialEq, Eq, Debug, Default)]
pub struct Rationals;

impl Field for Rationals {
    type Elem = BigRational;

    fn zero(&self) -> BigRational {
        BigRational::zero()
    }
    fn one(&self) -> BigRational {
        BigRational::one()
    }
    fn is_zero(&self, a: &BigRational) -> bool {
        a.is_zero()
    }
    fn is_one(&self, a: &BigRational) -> bool {
        a.is_one()
    }
    fn add(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a + b
    }
    fn sub(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a - b
    }
    fn neg(&self, a: &BigRational) -> BigRational {
        -a
    }
    fn mul(&self, a: &BigRational, b: &BigRational) -> BigRational {
        a * b
    }

    fn inv(&self, a: &BigRational) -> Option<BigRational> {
        if a.is_zero() {
            None
        } else {
            Some(a.recip())
        }
    }

    fn from_integer(&self, k: i64) -> BigRational {
        BigRational::from_integer(BigInt::from(k))
    }

    fn parse(&self, s: &str) -> Result<BigRational, String> {
        let s = s.trim();
        let parse_int = |t: &str| -> Result<BigInt, String> {
            t.trim()
                .parse::<BigInt>()
                .map_err(|_| format!("cannot parse `{t}` as an integer"))
        };
        match s.split_once('/') {
            None => Ok(BigRational::from_integer(parse_int(s)?)),
            Some((num, den)) => {
                let n = parse_int(num)?;
                let d = parse_int(den)?;
                if d.is_zero() {
                    return Err("zero denominator".into());
                }
                Ok(BigRational::new(n, d))
            }
        }
    }

    fn render(&self, a: &BigRational) -> String {
        if a.denom().is_one() {
            a.numer().to_string()
        } else if a.denom().is_negative() {
            // num-rational keeps denominators positive, but normalize defensively.
            format!("{}/{}", -a.numer(), -a.denom())
        } else {
            format!("{}/{}", a.numer(), a.denom())
        }
    }

    fn encode(&self, a: &BigRational) -> String {
        self.render(a)
    }

    fn descriptor(&self) -> String {
        "Q".into()
    }

    fn characteristic(&self) -> u64 {
        0
    }
}
