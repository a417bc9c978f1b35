//! Physical-parameter layer for a two-component BEC probe.
//!
//! Maps trap geometry and s-wave scattering lengths to the effective
//! collective Hamiltonian `γ₁η(n-1)J_z + γ₂ηJ_z²`, where
//! `η = ∫|ψ|⁴` is the inverse effective mode volume of the condensate
//! wave function. In the Thomas-Fermi regime `η` acquires a power-law
//! dependence on the atom number, which turns the bare `1/n^{3/2}` metrology
//! scaling into `1/n^ξ` with `ξ = (d+3q)/(2(d+q))` for a `d`-dimensional
//! trap of hardness `q`.
//!
//! All energies are SI joules internally; conversion to angular rates by ħ
//! happens once, at the Hamiltonian boundary.

mod config;
mod couplings;
mod error;
mod eta;
mod hamiltonian;
mod types;

pub use config::load_config;
pub use couplings::{couplings, time_budget, Couplings, TimeBudget};
pub use error::BecError;
pub use eta::{critical_numbers, eta, CriticalNumbers, Eta, EtaRegime};
pub use hamiltonian::{bec_hamiltonian, number_constraint, HamiltonianOptions, NumberCheck};
pub use types::{Species, TrapGeometry};

pub type Result<T> = std::result::Result<T, BecError>;

/// Reduced Planck constant, J·s.
pub const HBAR: f64 = 1.054_571_817e-34;

/// Precision-scaling exponent `ξ = (d+3q)/(2(d+q))`.
///
/// `q = ∞` (hard walls) is accepted and gives 3/2 for every `d`.
pub fn scaling_exponent(d: u8, q: f64) -> f64 {
    if q.is_infinite() {
        return 1.5;
    }
    let d = d as f64;
    (d + 3.0 * q) / (2.0 * (d + q))
}
