use std::fmt;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use crate::error::{Error, Result};

/// A prime modulus, validated by trial division on construction.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Prime(u64);

impl Prime {
    pub fn new(p: u64) -> Result<Self> {
        if is_prime(p) {
            Ok(Prime(p))
        } else {
            Err(Error::InvalidModulus(p))
        }
    }

    pub fn get(self) -> u64 {
        self.0
    }
}

impl fmt::Display for Prime {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

fn is_prime(p: u64) -> bool {
    if p < 2 {
        return false;
    }
    let mut d = 2u64;
    while d.saturating_mul(d) <= p {
        if p.is_multiple_of(d) {
            return false;
        }
        d += 1;
    }
    true
}

/// Little-endian base-`p` digits of a non-negative integer.
///
/// Canonical: no most-significant zero digit, and `0` is the empty string.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct DigitString {
    p: Prime,
    digits: Vec<u64>,
}

impl DigitString {
    pub fn new(n: &BigUint, p: Prime) -> Self {
        let base = p.get();
        // Peel off the largest power of p that fits in a u64 at a time.
        let mut chunk_len = 1usize;
        let mut chunk = base;
        while let Some(next) = chunk.checked_mul(base) {
            chunk = next;
            chunk_len += 1;
        }
        let mut digits = Vec::new();
        let mut rest = n.clone();
        while !rest.is_zero() {
            let (q, r) = rest.div_rem(&BigUint::from(chunk));
            let mut r = r.to_u64().expect("remainder below a u64 chunk");
            for _ in 0..chunk_len {
                digits.push(r % base);
                r /= base;
            }
            rest = q;
        }
        while digits.last() == Some(&0) {
            digits.pop();
        }
        DigitString { p, digits }
    }

    /// Validates a little-endian digit sequence.
    pub fn from_digits(p: Prime, digits: Vec<u64>) -> Result<Self> {
        if let Some(&bad) = digits.iter().find(|&&d| d >= p.get()) {
            return Err(Error::InvalidArgument(format!(
                "digit {bad} out of range for base {p}"
            )));
        }
        if digits.last() == Some(&0) {
            return Err(Error::InvalidArgument("non-canonical digit string".into()));
        }
        Ok(DigitString { p, digits })
    }

    pub fn prime(&self) -> Prime {
        self.p
    }

    /// Least-significant digit first.
    pub fn digits(&self) -> &[u64] {
        &self.digits
    }

    pub fn len(&self) -> usize {
        self.digits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.digits.is_empty()
    }

    pub fn value(&self) -> BigUint {
        let base = BigUint::from(self.p.get());
        self.digits
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, &d| acc * &base + d)
    }

    /// Most-significant-first digits as written by hand; `0` renders as `[0]`.
    pub fn standard_representation(&self) -> Vec<u64> {
        if self.digits.is_empty() {
            vec![0]
        } else {
            self.digits.iter().rev().copied().collect()
        }
    }
}

pub fn to_digits(n: &BigUint, p: Prime) -> DigitString {
    DigitString::new(n, p)
}

/// Exponent of the highest power of `p` dividing `n`.
pub fn nu(n: &BigUint, p: Prime) -> Result<u64> {
    if n.is_zero() {
        return Err(Error::UndefinedValuation);
    }
    let base = BigUint::from(p.get());
    let mut count = 0;
    let mut rest = n.clone();
    loop {
        let (q, r) = rest.div_rem(&base);
        if !r.is_zero() {
            return Ok(count);
        }
        count += 1;
        rest = q;
    }
}

/// Sum of the base-`p` digits.
pub fn sigma(n: &BigUint, p: Prime) -> u64 {
    to_digits(n, p).digits().iter().sum()
}

/// Overlapping occurrences of the word `w` (most significant digit first) in
/// the standard base-`p` representation of `n`. Zero is written `0`.
pub fn subword_count(n: &BigUint, p: Prime, w: &[u64]) -> Result<usize> {
    if w.is_empty() {
        return Err(Error::InvalidArgument("empty subword".into()));
    }
    if let Some(&bad) = w.iter().find(|&&d| d >= p.get()) {
        return Err(Error::InvalidArgument(format!(
            "digit {bad} out of range for base {p}"
        )));
    }
    let repr = to_digits(n, p).standard_representation();
    Ok(repr.windows(w.len()).filter(|win| *win == w).count())
}
