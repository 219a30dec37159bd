//! Thue–Morse, Stern polynomials, and the identity linking them to the
//! binary valuation spectrum at `x = −1`.

use num_bigint::{BigInt, BigUint};

use crate::exactalg::{row_vec_mat, IntPoly, PolyMatrix};
use crate::padic::{to_digits, Prime};
use crate::spectra::{spectrum, SpectrumQuery};

/// Parity of the number of 1 bits of `n`.
pub fn thue_morse(n: &BigUint) -> u8 {
    (n.count_ones() % 2) as u8
}

/// `A(0) = [[x, 0], [1, 1]]`, `A(1) = [[1, 1], [0, x]]`.
pub fn stern_matrix(bit: u64) -> PolyMatrix {
    let (one, zero, x) = (IntPoly::one(), IntPoly::zero(), IntPoly::x());
    let rows = match bit {
        0 => vec![vec![x, zero], vec![one.clone(), one]],
        1 => vec![vec![one.clone(), one], vec![zero, x]],
        _ => panic!("binary digit expected, got {bit}"),
    };
    PolyMatrix::from_rows(rows).expect("2x2")
}

/// `S(n, x) = [1 0] A(n_0) A(n_1) ⋯ A(n_ℓ) [0 1]^⊤` over the binary digits
/// of `n`, least significant first. `S(0, x) = 0`.
pub fn stern_poly(n: &BigUint) -> IntPoly {
    let two = Prime::new(2).expect("2 is prime");
    let matrices = [stern_matrix(0), stern_matrix(1)];
    let mut row = vec![IntPoly::one(), IntPoly::zero()];
    for &bit in to_digits(n, two).digits() {
        row = row_vec_mat(&row, &matrices[bit as usize]).expect("2x2");
    }
    row.swap_remove(1)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SternIdentityReport {
    pub n: BigUint,
    /// `T_2(n, −1)`.
    pub lhs: BigInt,
    /// `(−1)^{t(n)} · S(n + 1, −2)`.
    pub rhs: BigInt,
}

impl SternIdentityReport {
    pub fn holds(&self) -> bool {
        self.lhs == self.rhs
    }
}

/// Evaluates both sides of `T_2(n, −1) = (−1)^{t(n)} S(n + 1, −2)` exactly.
pub fn check_stern_identity(n: &BigUint) -> SternIdentityReport {
    let two = Prime::new(2).expect("2 is prime");
    let lhs = spectrum(&SpectrumQuery::binomial(two, n.clone())).eval_int(&BigInt::from(-1));
    let stern = stern_poly(&(n + 1u32)).eval_int(&BigInt::from(-2));
    let rhs = if thue_morse(n) == 1 { -stern } else { stern };
    SternIdentityReport {
        n: n.clone(),
        lhs,
        rhs,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn big(n: u64) -> BigUint {
        BigUint::from(n)
    }

    #[test]
    fn thue_morse_examples() {
        assert_eq!(thue_morse(&big(0)), 0);
        assert_eq!(thue_morse(&big(3)), 0);
        assert_eq!(thue_morse(&big(8)), 1);
    }

    #[test]
    fn thue_morse_recurrences() {
        for n in 0..=10_000u64 {
            assert_eq!(thue_morse(&big(2 * n)), thue_morse(&big(n)));
            assert_eq!(thue_morse(&big(2 * n + 1)), 1 - thue_morse(&big(n)));
        }
    }

    #[test]
    fn stern_examples() {
        assert_eq!(stern_poly(&big(0)), IntPoly::zero());
        assert_eq!(stern_poly(&big(1)), IntPoly::one());
        assert_eq!(stern_poly(&big(3)), IntPoly::from_i64s(&[1, 1]));
    }

    #[test]
    fn stern_at_one_is_diatomic() {
        let at_one = |n: u64| stern_poly(&big(n)).eval_int(&BigInt::from(1));
        assert_eq!(at_one(0), BigInt::from(0));
        assert_eq!(at_one(1), BigInt::from(1));
        for n in 1..=5000u64 {
            assert_eq!(at_one(2 * n), at_one(n));
            assert_eq!(at_one(2 * n + 1), at_one(n) + at_one(n + 1));
        }
    }

    #[test]
    fn identity_examples() {
        let r0 = check_stern_identity(&big(0));
        assert_eq!(
            (r0.lhs.clone(), r0.rhs.clone()),
            (BigInt::from(1), BigInt::from(1))
        );
        let r8 = check_stern_identity(&big(8));
        assert_eq!(r8.lhs, BigInt::from(-1));
        assert!(r8.holds());
        assert_eq!(
            stern_poly(&big(9)).eval_int(&BigInt::from(-2)),
            BigInt::from(1)
        );
    }

    #[test]
    fn identity_sweep() {
        for n in 0..=2000u64 {
            assert!(check_stern_identity(&big(n)).holds(), "n = {n}");
        }
    }
}
