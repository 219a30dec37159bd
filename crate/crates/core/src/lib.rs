//! Exact p-adic valuation spectra of binomial and multinomial coefficient rows.
//!
//! For a prime `p`, the spectrum `T_{p,k}(n, x)` is the polynomial whose
//! coefficient of `x^α` counts k-tuples `m` with total `n` for which
//! `p^α` exactly divides the multinomial coefficient `mult m`. The binomial
//! row is `k = 2`. Spectra are evaluated as a product of `k × k` polynomial
//! matrices indexed by the base-`p` digits of `n`, so the cost grows with the
//! number of digits rather than with `n`.
//!
//! ```
//! use num_bigint::BigUint;
//! use valspec::padic::Prime;
//! use valspec::spectra::{spectrum, SpectrumQuery};
//!
//! let q = SpectrumQuery::binomial(Prime::new(2).unwrap(), BigUint::from(8u32));
//! assert_eq!(spectrum(&q).to_string(), "4 x^3 + 2 x^2 + x + 2");
//! ```

pub mod error;
pub mod exactalg;
pub mod oracle;
pub mod padic;
pub mod sequences;
pub mod spectra;

pub use error::{Error, Result};
