use num_bigint::BigUint;
use num_traits::{One, Pow};

use crate::padic::{subword_count, to_digits, Prime};

/// Number of `m ∈ [0, n]` with `p ∤ C(n, m)`: the product of `(digit + 1)`
/// over the base-`p` digits of `n`.
pub fn fine_count(n: &BigUint, p: Prime) -> BigUint {
    to_digits(n, p)
        .digits()
        .iter()
        .fold(BigUint::one(), |acc, &d| acc * (d + 1))
}

/// The same count written as `Π_d (d + 1)^{|n|_d}` over single-digit subword
/// counts of the standard representation.
pub fn fine_count_by_subwords(n: &BigUint, p: Prime) -> BigUint {
    (0..p.get()).fold(BigUint::one(), |acc, d| {
        let occurrences = subword_count(n, p, &[d]).expect("single valid digit");
        acc * Pow::pow(BigUint::from(d + 1), occurrences)
    })
}

/// Number of k-tuples with total `n` whose multinomial is prime to `p`:
/// `Π C(n_i + k − 1, k − 1)` over the digits `n_i`.
pub fn multinomial_fine_count(n: &BigUint, p: Prime, k: usize) -> BigUint {
    to_digits(n, p)
        .digits()
        .iter()
        .fold(BigUint::one(), |acc, &d| acc * stars_and_bars(d, k))
}

fn stars_and_bars(d: u64, k: usize) -> BigUint {
    let mut acc = BigUint::one();
    for t in 1..k as u64 {
        acc = acc * (d + t) / t;
    }
    acc
}
