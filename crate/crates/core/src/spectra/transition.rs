use std::collections::HashMap;

use num_bigint::BigInt;

use super::cpk::CpkTable;
use crate::error::{Error, Result};
use crate::exactalg::{IntPoly, PolyMatrix};
use crate::padic::Prime;

/// The digit-indexed `k × k` factor `M_{p,k}(d)`.
///
/// With 0-based storage, entry `(i, j)` is `c_{p,k}(p·j + d − i) · x^i`; for
/// `k = 2` this is `[[d+1, p−d−1], [d·x, (p−d)·x]]`.
pub fn transition_matrix(p: Prime, k: usize, d: u64) -> Result<PolyMatrix> {
    TransitionFamily::new(p, k)?.build(d)
}

/// Transition matrices for a fixed `(p, k)`, sharing one precomputed
/// `c_{p,k}` row. Matrices are built on first use of each digit and then
/// only read.
#[derive(Clone, Debug)]
pub struct TransitionFamily {
    p: Prime,
    k: usize,
    table: CpkTable,
    built: HashMap<u64, PolyMatrix>,
}

impl TransitionFamily {
    pub fn new(p: Prime, k: usize) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        Ok(TransitionFamily {
            p,
            k,
            table: CpkTable::new(p, k),
            built: HashMap::new(),
        })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    fn build(&self, d: u64) -> Result<PolyMatrix> {
        let p = self.p.get();
        if d >= p {
            return Err(Error::InvalidArgument(format!(
                "digit {d} out of range for base {p}"
            )));
        }
        let k = self.k as i64;
        let (p, d) = (p as i64, d as i64);
        let entries = (0..k)
            .flat_map(|i| (0..k).map(move |j| (i, j)))
            .map(|(i, j)| {
                let c = self.table.get(p * j + d - i);
                IntPoly::monomial(BigInt::from(c), i as usize)
            })
            .collect();
        PolyMatrix::new(self.k, entries)
    }

    /// Matrix for digit `d`, built once.
    pub fn get(&mut self, d: u64) -> Result<&PolyMatrix> {
        if !self.built.contains_key(&d) {
            let m = self.build(d)?;
            self.built.insert(d, m);
        }
        Ok(&self.built[&d])
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    /// `rows[i][j] = (c, degree)` shorthand for monomial entries.
    fn mat(rows: &[&[(i64, usize)]]) -> PolyMatrix {
        PolyMatrix::from_rows(
            rows.iter()
                .map(|r| r.iter().map(|&(c, e)| IntPoly::monomial(c, e)).collect())
                .collect(),
        )
        .unwrap()
    }

    #[test]
    fn displayed_m53_matrices() {
        let expected = [
            mat(&[
                &[(1, 0), (18, 0), (6, 0)],
                &[(0, 1), (15, 1), (10, 1)],
                &[(0, 2), (10, 2), (15, 2)],
            ]),
            mat(&[
                &[(3, 0), (19, 0), (3, 0)],
                &[(1, 1), (18, 1), (6, 1)],
                &[(0, 2), (15, 2), (10, 2)],
            ]),
            mat(&[
                &[(6, 0), (18, 0), (1, 0)],
                &[(3, 1), (19, 1), (3, 1)],
                &[(1, 2), (18, 2), (6, 2)],
            ]),
            mat(&[
                &[(10, 0), (15, 0), (0, 0)],
                &[(6, 1), (18, 1), (1, 1)],
                &[(3, 2), (19, 2), (3, 2)],
            ]),
            mat(&[
                &[(15, 0), (10, 0), (0, 0)],
                &[(10, 1), (15, 1), (0, 1)],
                &[(6, 2), (18, 2), (1, 2)],
            ]),
        ];
        for (d, want) in expected.iter().enumerate() {
            assert_eq!(
                &transition_matrix(prime(5), 3, d as u64).unwrap(),
                want,
                "d={d}"
            );
        }
    }

    #[test]
    fn binomial_case_closed_form() {
        for p in [2i64, 3, 5, 7, 11] {
            for d in 0..p {
                let want = mat(&[&[(d + 1, 0), (p - d - 1, 0)], &[(d, 1), (p - d, 1)]]);
                assert_eq!(
                    transition_matrix(prime(p as u64), 2, d as u64).unwrap(),
                    want
                );
            }
        }
        assert_eq!(
            transition_matrix(prime(2), 2, 0).unwrap(),
            mat(&[&[(1, 0), (1, 0)], &[(0, 1), (2, 1)]])
        );
    }

    #[test]
    fn first_column_of_zero_digit_is_unit_vector() {
        for p in [2, 3, 5] {
            for k in 1..=5 {
                let m = transition_matrix(prime(p), k, 0).unwrap();
                for i in 0..k {
                    let want = if i == 0 {
                        IntPoly::one()
                    } else {
                        IntPoly::zero()
                    };
                    assert_eq!(m.get(i, 0), &want);
                }
            }
        }
    }

    #[test]
    fn invalid_arguments() {
        assert!(transition_matrix(prime(5), 3, 5).is_err());
        assert!(transition_matrix(prime(5), 0, 1).is_err());
        let mut fam = TransitionFamily::new(prime(3), 2).unwrap();
        assert!(fam.get(3).is_err());
        assert_eq!(
            fam.get(1).unwrap(),
            &transition_matrix(prime(3), 2, 1).unwrap()
        );
    }
}
