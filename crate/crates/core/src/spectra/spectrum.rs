use std::collections::HashMap;

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{ToPrimitive, Zero};

use super::fine::fine_count;
use super::transition::TransitionFamily;
use crate::error::{Error, Result};
use crate::exactalg::{row_vec_mat, IntPoly, RatPoly};
use crate::padic::{nu, to_digits, DigitString, Prime};

/// Which row to evaluate: k-tuples with total `n`, valuations at `p`.
/// `k = 2` is the binomial row `C(n, 0), …, C(n, n)`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SpectrumQuery {
    p: Prime,
    k: usize,
    n: BigUint,
}

impl SpectrumQuery {
    pub fn new(p: Prime, k: usize, n: BigUint) -> Result<Self> {
        if k == 0 {
            return Err(Error::InvalidArgument("k must be at least 1".into()));
        }
        Ok(SpectrumQuery { p, k, n })
    }

    pub fn binomial(p: Prime, n: BigUint) -> Self {
        SpectrumQuery { p, k: 2, n }
    }

    pub fn p(&self) -> Prime {
        self.p
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn n(&self) -> &BigUint {
        &self.n
    }

    pub fn digits(&self) -> DigitString {
        to_digits(&self.n, self.p)
    }
}

/// The k auxiliary polynomials after consuming every digit of `n`.
///
/// Component `i` is `x^{ν_p(n!/(n−i)!) + i} · T_{p,k}(n − i, x)` for `n ≥ i`
/// and zero otherwise; component 0 is the spectrum itself.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StateVector(Vec<IntPoly>);

impl StateVector {
    /// `[1, 0, …, 0]`, the state of `n = 0`.
    pub fn initial(k: usize) -> Self {
        let mut v = vec![IntPoly::zero(); k];
        if let Some(first) = v.first_mut() {
            *first = IntPoly::one();
        }
        StateVector(v)
    }

    pub fn components(&self) -> &[IntPoly] {
        &self.0
    }

    pub fn component(&self, i: usize) -> &IntPoly {
        &self.0[i]
    }

    pub fn into_components(self) -> Vec<IntPoly> {
        self.0
    }
}

/// `T_{p,k}(n, x)`: the coefficient of `x^α` counts k-tuples with total `n`
/// whose multinomial has p-adic valuation `α`.
///
/// Threads the row vector `e = [1, 0, …, 0]` through the digit matrices,
/// least-significant digit first, and reads off component 0.
pub fn spectrum(q: &SpectrumQuery) -> IntPoly {
    spectrum_from_digits(q.p, q.k, q.digits().digits()).expect("validated query")
}

/// As [`spectrum`], for an explicit little-endian digit list. Extra
/// most-significant zeros are allowed and do not change the result.
pub fn spectrum_from_digits(p: Prime, k: usize, digits: &[u64]) -> Result<IntPoly> {
    let mut family = TransitionFamily::new(p, k)?;
    let mut row = StateVector::initial(k).into_components();
    for &d in digits {
        row = row_vec_mat(&row, family.get(d)?)?;
    }
    Ok(row.swap_remove(0))
}

/// Full state vector, applying `M(n_0) M(n_1) ⋯ M(n_ℓ)` to the initial
/// column `e^⊤` (most-significant digit's matrix acts first).
pub fn spectrum_state(q: &SpectrumQuery) -> StateVector {
    let mut family = TransitionFamily::new(q.p, q.k).expect("validated query");
    let mut col = StateVector::initial(q.k).into_components();
    for &d in q.digits().digits().iter().rev() {
        col = family
            .get(d)
            .and_then(|m| m.mat_vec(&col))
            .expect("digits are in range");
    }
    StateVector(col)
}

/// Binomial spectrum by memoized descent on the scalar recurrence
/// `T(pn + d) = (d + 1)·T(n) + (p − d − 1)·x^{ν_p(n)+1}·T(n − 1)`,
/// the second term dropped when `n = 0`.
pub fn spectrum_by_recurrence(q: &SpectrumQuery) -> Result<IntPoly> {
    if q.k != 2 {
        return Err(Error::Unsupported(format!(
            "scalar recurrence is only available for k = 2 (got k = {})",
            q.k
        )));
    }
    let mut memo = HashMap::new();
    Ok(descend(&q.n, q.p, &mut memo))
}

fn descend(n: &BigUint, p: Prime, memo: &mut HashMap<BigUint, IntPoly>) -> IntPoly {
    if n.is_zero() {
        return IntPoly::one();
    }
    if let Some(hit) = memo.get(n) {
        return hit.clone();
    }
    let (high, d) = n.div_rem(&BigUint::from(p.get()));
    let d = d.to_u64().expect("digit below p");
    let mut out = descend(&high, p, memo).scale(&BigInt::from(d + 1));
    if !high.is_zero() {
        let carry_weight = p.get() - d - 1;
        if carry_weight > 0 {
            let shift = nu(&high, p).expect("high part is positive") + 1;
            let prev = descend(&(&high - 1u32), p, memo);
            let shift = usize::try_from(shift).expect("valuation fits in usize");
            out = out + prev.shift(shift).scale(&BigInt::from(carry_weight));
        }
    }
    memo.insert(n.clone(), out.clone());
    out
}

/// `T_p(n, x) / F_p(n)`, binomial rows only.
pub fn spectrum_normalized(q: &SpectrumQuery) -> Result<RatPoly> {
    if q.k != 2 {
        return Err(Error::Unsupported(format!(
            "normalized spectrum is only defined for k = 2 (got k = {})",
            q.k
        )));
    }
    let fine = BigInt::from(fine_count(&q.n, q.p));
    Ok(RatPoly::from_int_poly_over(&spectrum(q), &fine))
}

/// Coefficient of `x^alpha`.
pub fn coefficient(poly: &IntPoly, alpha: usize) -> BigInt {
    poly.coeff(alpha)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::{composition_count, oracle_spectrum, DEFAULT_BUDGET};
    use crate::padic::legendre;
    use crate::spectra::{fine_count, multinomial_fine_count};
    use num_rational::BigRational;
    use num_traits::One;
    use proptest::prelude::*;

    fn prime(p: u64) -> Prime {
        Prime::new(p).unwrap()
    }

    fn query(p: u64, k: usize, n: u64) -> SpectrumQuery {
        SpectrumQuery::new(prime(p), k, BigUint::from(n)).unwrap()
    }

    fn poly(c: &[i64]) -> IntPoly {
        IntPoly::from_i64s(c)
    }

    #[test]
    fn golden_binomial_rows() {
        assert_eq!(spectrum(&query(2, 2, 8)), poly(&[2, 1, 2, 4]));
        assert_eq!(spectrum(&query(2, 2, 12)), poly(&[4, 2, 5, 2]));
        for p in [2, 3, 7] {
            for k in 1..=4 {
                assert_eq!(spectrum(&query(p, k, 0)), IntPoly::one());
            }
        }
        assert_eq!(spectrum(&query(2, 3, 2)), poly(&[3, 3]));
    }

    #[test]
    fn state_examples() {
        assert_eq!(
            spectrum_state(&query(2, 3, 0)).components(),
            &[poly(&[1]), poly(&[]), poly(&[])]
        );
        assert_eq!(
            spectrum_state(&query(2, 2, 1)).components(),
            &[poly(&[2]), poly(&[0, 1])]
        );
        let s = spectrum_state(&query(2, 2, 4));
        assert_eq!(s.component(1), &poly(&[0, 0, 0, 4]));
        assert_eq!(s.component(0), &spectrum(&query(2, 2, 4)));
    }

    #[test]
    fn state_components_match_definition() {
        for p in [2, 3, 5] {
            let pr = prime(p);
            for k in 1..=4usize {
                for n in 0..=80u64 {
                    let state = spectrum_state(&query(p, k, n));
                    assert_eq!(state.component(0), &spectrum(&query(p, k, n)));
                    for i in 0..k as u64 {
                        let got = state.component(i as usize);
                        if n < i {
                            assert!(got.is_zero(), "p={p} k={k} n={n} i={i}");
                            continue;
                        }
                        let shift = legendre(&BigUint::from(n), pr)
                            - legendre(&BigUint::from(n - i), pr)
                            + i;
                        let want = spectrum(&query(p, k, n - i)).shift(shift.to_usize().unwrap());
                        assert_eq!(got, &want, "p={p} k={k} n={n} i={i}");
                    }
                }
            }
        }
    }

    #[test]
    fn multinomial_degree_can_exceed_digit_count() {
        // (3, 3, 2) has multinomial 560 = 2^4 * 35 while 8 has four binary digits
        let t = spectrum(&query(2, 3, 8));
        assert_eq!(t.degree(), Some(4));
        assert_eq!(t, oracle_spectrum(&query(2, 3, 8), DEFAULT_BUDGET).unwrap());
    }

    #[test]
    fn recurrence_examples() {
        assert_eq!(
            spectrum_by_recurrence(&query(2, 2, 9)).unwrap(),
            poly(&[4, 2, 4])
        );
        assert_eq!(
            spectrum_by_recurrence(&query(2, 2, 0)).unwrap(),
            IntPoly::one()
        );
        assert_eq!(
            spectrum_by_recurrence(&query(3, 2, 10)).unwrap(),
            spectrum(&query(3, 2, 10))
        );
        assert_eq!(
            spectrum_by_recurrence(&query(3, 2, 10)).unwrap(),
            oracle_spectrum(&query(3, 2, 10), DEFAULT_BUDGET).unwrap()
        );
        assert!(matches!(
            spectrum_by_recurrence(&query(3, 3, 10)),
            Err(Error::Unsupported(_))
        ));
    }

    #[test]
    fn normalized_examples() {
        let half = BigRational::new(1.into(), 2.into());
        let norm = spectrum_normalized(&query(2, 2, 8)).unwrap();
        assert_eq!(norm.coeff(1), half);
        assert_eq!(norm.to_string(), "2 x^3 + x^2 + 1/2 x + 1");
        let norm3 = spectrum_normalized(&query(2, 2, 3)).unwrap();
        assert_eq!(
            norm3,
            RatPoly::from_int_poly_over(&IntPoly::one(), &BigInt::one())
        );
        for n in 0..300 {
            let v = spectrum_normalized(&query(3, 2, n))
                .unwrap()
                .eval(&BigRational::zero());
            assert_eq!(v, BigRational::one());
        }
        assert!(spectrum_normalized(&query(3, 4, 1)).is_err());
    }

    #[test]
    fn coefficient_examples() {
        let t8 = spectrum(&query(2, 2, 8));
        assert_eq!(coefficient(&t8, 3), BigInt::from(4));
        assert_eq!(coefficient(&spectrum(&query(2, 2, 12)), 1), BigInt::from(2));
        let t0 = spectrum(&query(2, 2, 0));
        assert_eq!(coefficient(&t0, 0), BigInt::one());
        assert_eq!(coefficient(&t0, 4), BigInt::zero());
    }

    #[test]
    fn small_oracle_equivalence() {
        for p in [2, 3, 5, 7] {
            for k in 1..=4 {
                let limit = if k <= 2 { 200 } else { 40 };
                for n in 0..=limit {
                    let q = query(p, k, n);
                    assert_eq!(
                        spectrum(&q),
                        oracle_spectrum(&q, DEFAULT_BUDGET).unwrap(),
                        "{q:?}"
                    );
                }
            }
        }
    }

    #[test]
    fn carry_scaling_recurrence_holds_for_matrix_path() {
        for p in [2u64, 3, 5] {
            for n in 1..=200u64 {
                let nu_n = nu(&BigUint::from(n), prime(p)).unwrap() as usize;
                let tn = spectrum(&query(p, 2, n));
                let tprev = spectrum(&query(p, 2, n - 1));
                for d in 0..p {
                    let lhs = spectrum(&query(p, 2, p * n + d));
                    let rhs = tn.scale(&BigInt::from(d + 1))
                        + tprev.shift(nu_n + 1).scale(&BigInt::from(p - d - 1));
                    assert_eq!(lhs, rhs);
                }
            }
        }
    }

    #[test]
    fn huge_n_is_fast_and_consistent() {
        let n = BigUint::from(10u32).pow(300) + 12345u32;
        let q = SpectrumQuery::binomial(prime(2), n.clone());
        let t = spectrum(&q);
        assert_eq!(t.coeff_sum(), BigInt::from(n.clone() + 1u32));
        assert_eq!(spectrum_by_recurrence(&q).unwrap(), t);
        assert_eq!(t.coeff(0), BigInt::from(fine_count(&n, prime(2))));
    }

    proptest! {
        #[test]
        fn mass_fine_and_degree(p in prop::sample::select(vec![2u64, 3, 5, 7]), k in 1usize..=5, n in 0u64..100_000) {
            let q = query(p, k, n);
            let t = spectrum(&q);
            prop_assert_eq!(t.coeff_sum(), BigInt::from(composition_count(k, &BigUint::from(n))));
            prop_assert_eq!(t.coeff(0), BigInt::from(multinomial_fine_count(q.n(), q.p(), k)));
            prop_assert!(t.coeffs().iter().all(|c| c >= &BigInt::zero()));
            // at most k - 1 carries out of each of the low digit positions
            let digits = q.digits().len();
            let bound = (k - 1) * digits.saturating_sub(1);
            prop_assert!(t.degree().unwrap() <= bound);
        }

        #[test]
        fn leading_zeros_are_inert(p in prop::sample::select(vec![2u64, 3, 5]), k in 1usize..=4, n in 0u64..1_000_000, extra in 1usize..4) {
            let q = query(p, k, n);
            let mut digits = q.digits().digits().to_vec();
            digits.extend(std::iter::repeat_n(0, extra));
            prop_assert_eq!(spectrum_from_digits(q.p(), k, &digits).unwrap(), spectrum(&q));
        }
    }
}
