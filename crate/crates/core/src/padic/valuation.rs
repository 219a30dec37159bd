use num_bigint::{BigInt, BigUint};
use num_traits::Signed;

use super::digits::{sigma, to_digits, Prime};
use crate::error::{Error, Result};

/// A k-tuple of non-negative integers.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Default)]
pub struct Tuple(Vec<BigUint>);

impl Tuple {
    pub fn new(entries: Vec<BigUint>) -> Self {
        Tuple(entries)
    }

    pub fn from_u64s(entries: &[u64]) -> Self {
        Tuple(entries.iter().map(|&m| BigUint::from(m)).collect())
    }

    pub fn entries(&self) -> &[BigUint] {
        &self.0
    }

    pub fn k(&self) -> usize {
        self.0.len()
    }

    pub fn total(&self) -> BigUint {
        self.0.iter().sum()
    }

    /// Termwise `⌊m / p⌋`.
    pub fn floor_div(&self, p: Prime) -> Tuple {
        let p = BigUint::from(p.get());
        Tuple(self.0.iter().map(|m| m / &p).collect())
    }

    /// Termwise `m mod p`.
    pub fn rem(&self, p: Prime) -> Tuple {
        let p = BigUint::from(p.get());
        Tuple(self.0.iter().map(|m| m % &p).collect())
    }
}

/// `ν_p(m!) = (m − σ_p(m)) / (p − 1)`.
pub fn legendre(m: &BigUint, p: Prime) -> BigUint {
    (m - BigUint::from(sigma(m, p))) / (p.get() - 1)
}

/// `ν_p(C(n, m))`, evaluated both as the number of carries when adding `m`
/// to `n − m` in base `p` and by the digit-sum formula. The two are asserted
/// to agree.
pub fn kummer_binomial(n: &BigUint, m: &BigUint, p: Prime) -> Result<u64> {
    if m > n {
        return Err(Error::InvalidArgument(format!("m = {m} exceeds n = {n}")));
    }
    let rest = n - m;
    let carries = carry_count(m, &rest, p);
    let by_digit_sums = (sigma(m, p) + sigma(&rest, p) - sigma(n, p)) / (p.get() - 1);
    assert_eq!(
        carries, by_digit_sums,
        "carry count and digit-sum form disagree for C({n}, {m}) at p = {p}"
    );
    Ok(carries)
}

fn carry_count(a: &BigUint, b: &BigUint, p: Prime) -> u64 {
    let a = to_digits(a, p);
    let b = to_digits(b, p);
    let (a, b) = (a.digits(), b.digits());
    let mut carry = 0;
    let mut count = 0;
    for pos in 0..a.len().max(b.len()) {
        let sum = a.get(pos).copied().unwrap_or(0) + b.get(pos).copied().unwrap_or(0) + carry;
        carry = u64::from(sum >= p.get());
        count += carry;
    }
    count
}

/// `ν_p(mult m) = (Σ σ_p(m_i) − σ_p(total m)) / (p − 1)`.
pub fn kummer_multinomial(m: &Tuple, p: Prime) -> u64 {
    let digit_sums: u64 = m.entries().iter().map(|e| sigma(e, p)).sum();
    (digit_sums - sigma(&m.total(), p)) / (p.get() - 1)
}

/// Outcome of checking the relation between `ν_p(mult m)` and
/// `ν_p(mult ⌊m/p⌋)` for a tuple with `total m = p·n + d − i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ValuationRelationReport {
    /// `n − total ⌊m/p⌋`.
    pub j: BigInt,
    /// `total (m mod p) == p·j + d − i`.
    pub digit_total_holds: bool,
    /// `0 ≤ j ≤ k − 1`.
    pub j_in_range: bool,
    /// `ν_p((pn+d)! / (pn+d−i)!) + ν_p(mult m)`.
    pub lhs: BigInt,
    /// `ν_p(n! / (n−j)!) + ν_p(mult ⌊m/p⌋) + j`; `None` when `j` falls outside `[0, n]`.
    pub rhs: Option<BigInt>,
}

impl ValuationRelationReport {
    pub fn holds(&self) -> bool {
        self.digit_total_holds && self.j_in_range && self.rhs.as_ref() == Some(&self.lhs)
    }
}

pub fn check_valuation_relation(
    m: &Tuple,
    p: Prime,
    n: &BigUint,
    d: u64,
    i: usize,
) -> Result<ValuationRelationReport> {
    let k = m.k();
    if k == 0 || i >= k {
        return Err(Error::InvalidArgument(format!(
            "need 0 <= i < k, got i = {i}, k = {k}"
        )));
    }
    if d >= p.get() {
        return Err(Error::InvalidArgument(format!(
            "digit {d} out of range for base {p}"
        )));
    }
    let top = n * p.get() + d;
    let total = m.total();
    if BigUint::from(i) > top || &top - i != total {
        return Err(Error::InvalidArgument(format!(
            "total {total} != {p}*{n} + {d} - {i}"
        )));
    }
    let quotient = m.floor_div(p);
    let residue = m.rem(p);

    let j = BigInt::from(n.clone()) - BigInt::from(quotient.total());
    let expected_digit_total = &j * p.get() + d - i;
    let digit_total_holds = BigInt::from(residue.total()) == expected_digit_total;
    let j_in_range = !j.is_negative() && j < BigInt::from(k);

    let signed = |v: BigUint| BigInt::from(v);
    let lhs = signed(legendre(&top, p)) - signed(legendre(&total, p))
        + BigInt::from(kummer_multinomial(m, p));
    let rhs = j.to_biguint().filter(|jj| jj <= n).map(|jj| {
        signed(legendre(n, p)) - signed(legendre(&(n - &jj), p))
            + BigInt::from(kummer_multinomial(&quotient, p))
            + &j
    });

    Ok(ValuationRelationReport {
        j,
        digit_total_holds,
        j_in_range,
        lhs,
        rhs,
    })
}
