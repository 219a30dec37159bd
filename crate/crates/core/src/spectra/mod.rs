//! Valuation spectra of binomial and multinomial rows via digit-indexed
//! polynomial-matrix products.

mod cpk;
mod fine;
mod spectrum;
mod transition;

pub use cpk::{cpk, cpk_row, CpkTable};
pub use fine::{fine_count, fine_count_by_subwords, multinomial_fine_count};
pub use spectrum::{
    coefficient, spectrum, spectrum_by_recurrence, spectrum_from_digits, spectrum_normalized,
    spectrum_state, SpectrumQuery, StateVector,
};
pub use transition::{transition_matrix, TransitionFamily};
