//! Base-`p` digits and the classical valuation theorems of Legendre and Kummer.

mod digits;
mod valuation;

pub use digits::{nu, sigma, subword_count, to_digits, DigitString, Prime};
pub use valuation::{
    check_valuation_relation, kummer_binomial, kummer_multinomial, legendre, Tuple,
    ValuationRelationReport,
};
