//! Assembly of the collective Hamiltonian and the number-uncertainty check.

use dicke_core::CollectiveHamiltonian;
use serde::Serialize;

use crate::{couplings, eta, Result, Species, TrapGeometry, HBAR};

#[derive(Debug, Clone, Copy, PartialEq, Serialize)]
pub struct HamiltonianOptions {
    /// Keep the exact `n - 1` factor on the linear coupling; `false` replaces
    /// it by `n` (a large-n convenience).
    pub exact_particle_number: bool,
    /// Single-particle kinetic-plus-trap energy `E₀` in joules; enters only
    /// the constant term.
    pub single_particle_energy: f64,
}

impl Default for HamiltonianOptions {
    fn default() -> Self {
        Self {
            exact_particle_number: true,
            single_particle_energy: 0.0,
        }
    }
}

/// Collective Hamiltonian `c0·1 + a·nJ_z + b·J_z²` of the trapped condensate,
/// in radians per second.
///
/// The physical couplings are `γ₁η(n-1)` on `J_z` and `γ₂η` on `J_z²`; the
/// linear one is re-expressed per unit of the `nJ_z` convention, so
/// `a = γ₁η(n-1)/(ħn)`. The constant collects `nE₀ + ¼(g+g₁₂)ηn² - ½gηn`;
/// it only shifts the global phase and is carried for bookkeeping.
pub fn bec_hamiltonian(
    tg: &TrapGeometry,
    sp: &Species,
    n: usize,
    opts: HamiltonianOptions,
) -> Result<CollectiveHamiltonian> {
    let nf = n as f64;
    let e = eta(tg, sp, nf)?;
    let c = couplings(sp);
    let number_factor = if opts.exact_particle_number {
        (nf - 1.0) / nf
    } else {
        1.0
    };
    let a = c.gamma1 * e.value * number_factor / HBAR;
    let b = c.gamma2 * e.value / HBAR;
    let h0 = nf * opts.single_particle_energy
        + 0.25 * (c.g + c.g12) * e.value * nf * nf
        - 0.5 * c.g * e.value * nf;
    Ok(CollectiveHamiltonian::new(h0 / HBAR, a, b))
}

/// Verdict of the atom-number-uncertainty check.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct NumberCheck {
    /// Accumulated signal phase is safely below the fringe-ambiguity scale
    /// `n/Δn` (with a 10x margin).
    pub pass: bool,
    /// `Δn > √n`: number noise already beats projection noise and the
    /// nonlinear coupling loses its practical edge.
    pub advantage_obviated: bool,
}

/// Checks whether an accumulated phase `γtn·...` stays small against the
/// fringe shift caused by an atom-number spread `Δn`.
pub fn number_constraint(n: f64, delta_n: f64, accumulated_phase: f64) -> NumberCheck {
    if delta_n == 0.0 {
        return NumberCheck {
            pass: true,
            advantage_obviated: false,
        };
    }
    NumberCheck {
        pass: accumulated_phase < 0.1 * n / delta_n,
        advantage_obviated: delta_n > n.sqrt(),
    }
}
