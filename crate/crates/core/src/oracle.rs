//! Brute-force ground truth.
//!
//! Nothing here touches `padic` or `spectra`: multinomial coefficients are
//! built from exact integer arithmetic and valuations are found by repeated
//! division, so agreement with the fast paths is independent evidence.

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};

use crate::error::{Error, Result};
use crate::exactalg::IntPoly;
use crate::spectra::SpectrumQuery;

/// Default cap on the number of tuples `oracle_spectrum` will enumerate.
pub const DEFAULT_BUDGET: u64 = 10_000_000;

/// Enumerates every k-tuple of non-negative integers with a fixed total,
/// in colexicographic order (last entry most significant), starting from
/// `(total, 0, …, 0)`.
#[derive(Clone, Debug)]
pub struct CompositionCursor {
    k: usize,
    total: u64,
    current: Option<Vec<u64>>,
}

impl CompositionCursor {
    pub fn new(k: usize, total: u64) -> Self {
        let current = match k {
            0 if total == 0 => Some(Vec::new()),
            0 => None,
            _ => {
                let mut first = vec![0; k];
                first[0] = total;
                Some(first)
            }
        };
        CompositionCursor { k, total, current }
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn total(&self) -> u64 {
        self.total
    }

    fn advance(&mut self) {
        let Some(cur) = self.current.as_mut() else {
            return;
        };
        match cur.iter().position(|&e| e > 0) {
            Some(first) if first + 1 < cur.len() => {
                let spare = cur[first] - 1;
                cur[first] = 0;
                cur[first + 1] += 1;
                cur[0] = spare;
            }
            _ => self.current = None,
        }
    }
}

impl Iterator for CompositionCursor {
    type Item = Vec<u64>;

    fn next(&mut self) -> Option<Vec<u64>> {
        let out = self.current.clone()?;
        self.advance();
        Some(out)
    }
}

/// `(Σ m_i)! / Π m_i!`, accumulated as a product of binomials over prefix
/// sums; every intermediate division is checked to be exact.
pub fn multinomial_exact(m: &[BigUint]) -> BigUint {
    let mut acc = BigUint::one();
    let mut prefix = BigUint::zero();
    for entry in m {
        let entry = entry.to_u64().expect("tuple entry too large to enumerate");
        for t in 1..=entry {
            prefix += 1u32;
            acc *= &prefix;
            let (q, r) = acc.div_rem(&BigUint::from(t));
            assert!(r.is_zero(), "inexact division in multinomial accumulation");
            acc = q;
        }
    }
    acc
}

/// Number of times `p` divides `v`, by repeated division.
pub fn valuation_trial_division(v: &BigUint, p: u64) -> Result<u64> {
    if v.is_zero() {
        return Err(Error::InvalidArgument("trial division of zero".into()));
    }
    if p < 2 {
        return Err(Error::InvalidModulus(p));
    }
    let p = BigUint::from(p);
    let mut rest = v.clone();
    let mut count = 0;
    loop {
        let (q, r) = rest.div_rem(&p);
        if !r.is_zero() {
            return Ok(count);
        }
        rest = q;
        count += 1;
    }
}

/// `C(n + k − 1, k − 1)`: the number of k-tuples with total `n`.
pub fn composition_count(k: usize, n: &BigUint) -> BigUint {
    if k == 0 {
        return if n.is_zero() {
            BigUint::one()
        } else {
            BigUint::zero()
        };
    }
    let mut acc = BigUint::one();
    for t in 1..k as u64 {
        acc = acc * (n + t) / t;
    }
    acc
}

/// Row `C(s, 0), …, C(s, s)` by the multiplicative formula, exactness asserted.
fn binomial_row(s: u64) -> Vec<BigUint> {
    let mut row = Vec::with_capacity(s as usize + 1);
    let mut cur = BigUint::one();
    row.push(cur.clone());
    for m in 1..=s {
        cur *= s - m + 1;
        let (q, r) = cur.div_rem(&BigUint::from(m));
        assert!(r.is_zero(), "inexact division building binomial row {s}");
        cur = q;
        row.push(cur.clone());
    }
    row
}

/// Histogram of `ν_p(mult m)` over all k-tuples `m` with total `n`.
///
/// Tuples are visited in colexicographic order. The multinomial of each tuple
/// is assembled from binomial rows, `mult(m) = C(n, m_k) · mult(m_1, …, m_{k−1})`,
/// and its valuation is found by trial division.
pub fn oracle_spectrum(q: &SpectrumQuery, budget: u64) -> Result<IntPoly> {
    let required = composition_count(q.k(), q.n());
    if required > BigUint::from(budget) {
        return Err(Error::EnumerationTooLarge {
            required: required.to_string(),
            budget,
        });
    }
    let n = q.n().to_u64().expect("budget bounds n");
    let mut hist: Vec<u64> = Vec::new();
    walk(q.k(), n, &BigUint::one(), q.p().get(), &mut hist)?;
    Ok(IntPoly::new(hist.into_iter().map(Into::into).collect()))
}

fn walk(parts: usize, total: u64, acc: &BigUint, p: u64, hist: &mut Vec<u64>) -> Result<()> {
    match parts {
        0 => {
            debug_assert_eq!(total, 0);
            bump(hist, valuation_trial_division(acc, p)?);
        }
        1 => bump(hist, valuation_trial_division(acc, p)?),
        _ => {
            let row = binomial_row(total);
            for (last, binom) in row.iter().enumerate() {
                walk(parts - 1, total - last as u64, &(acc * binom), p, hist)?;
            }
        }
    }
    Ok(())
}

fn bump(hist: &mut Vec<u64>, v: u64) {
    let v = v as usize;
    if hist.len() <= v {
        hist.resize(v + 1, 0);
    }
    hist[v] += 1;
}
