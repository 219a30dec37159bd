use num_bigint::BigUint;
use num_traits::Zero;

use crate::padic::Prime;

/// Row `k` of the triangle built by summing `p` adjacent entries of the
/// previous row: `c_{p,k}(0), …, c_{p,k}((p − 1)k)`.
pub fn cpk_row(p: Prime, k: usize) -> Vec<BigUint> {
    let width = p.get() as usize;
    let mut row = vec![BigUint::from(1u32)];
    for _ in 0..k {
        let mut next = vec![BigUint::zero(); row.len() + width - 1];
        // sliding window over the previous row
        let mut window = BigUint::zero();
        for (n, slot) in next.iter_mut().enumerate() {
            if let Some(v) = row.get(n) {
                window += v;
            }
            if n >= width {
                if let Some(v) = row.get(n - width) {
                    window -= v;
                }
            }
            *slot = window.clone();
        }
        row = next;
    }
    row
}

/// Number of k-tuples of base-`p` digits with total `n`; zero outside
/// `[0, (p − 1)k]`.
pub fn cpk(p: Prime, k: usize, n: i64) -> BigUint {
    CpkTable::new(p, k).get(n)
}

/// One precomputed triangle row; out-of-range lookups read as zero.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CpkTable {
    row: Vec<BigUint>,
}

impl CpkTable {
    pub fn new(p: Prime, k: usize) -> Self {
        CpkTable { row: cpk_row(p, k) }
    }

    pub fn get(&self, n: i64) -> BigUint {
        usize::try_from(n)
            .ok()
            .and_then(|n| self.row.get(n))
            .cloned()
            .unwrap_or_default()
    }

    pub fn row(&self) -> &[BigUint] {
        &self.row
    }
}
