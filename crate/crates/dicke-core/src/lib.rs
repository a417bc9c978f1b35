//! Exact simulation of permutation-symmetric collective-spin states.
//!
//! An ensemble of `n` spin-1/2 particles restricted to the symmetric subspace
//! lives in an (n+1)-dimensional space spanned by the Dicke states `|j, m>`
//! with `j = n/2` and `m = -j, ..., +j`. Everything here works directly with
//! the amplitude vector over `m`, so states with thousands of particles are
//! cheap to evolve and measure.
//!
//! All operations are pure: they take states by reference and return new
//! states, so values can be shared freely between threads.

mod error;
mod observable;
#[cfg(feature = "oracle")]
pub mod oracle;
mod rotation;
mod state;

pub use error::DickeError;
pub use observable::Observable;
pub use state::{BlochProduct, BlochVector, CollectiveHamiltonian, DickeState};

pub type Result<T> = std::result::Result<T, DickeError>;

/// Natural log of k! as a cumulative table, `table[k] = ln(k!)`.
///
/// Exact summation of logs keeps binomial amplitudes accurate for particle
/// counts far beyond where `k!` itself overflows.
pub(crate) fn ln_factorial_table(n: usize) -> Vec<f64> {
    let mut table = vec![0.0; n + 1];
    for k in 1..=n {
        table[k] = table[k - 1] + (k as f64).ln();
    }
    table
}
