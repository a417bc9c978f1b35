use num_complex::Complex64;

use crate::{ln_factorial_table, DickeError, Observable, Result};

/// A pure permutation-symmetric state of `n` spin-1/2 particles.
///
/// Amplitudes are indexed so that entry `i` belongs to the `J_z` eigenvalue
/// `m = i - n/2`, i.e. the vector runs from `m = -n/2` up to `m = +n/2`.
#[derive(Debug, Clone, PartialEq)]
pub struct DickeState {
    n: usize,
    amps: Vec<Complex64>,
}

/// A spin coherent (product) state `[cos(β/2)|0> + e^{iφ} sin(β/2)|1>]^{⊗n}`,
/// with `|0>` the `m = +1/2` single-spin state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochProduct {
    pub n: usize,
    /// Polar angle in radians, in `[0, π]`.
    pub beta: f64,
    /// Azimuthal angle in radians.
    pub phi: f64,
}

/// Coefficients of the diagonal collective Hamiltonian
/// `H = c0·1 + a·nJ_z + b·J_z²` (all in radians per unit time).
///
/// Evolution for time `t` multiplies the amplitude at level `m` by
/// `exp(-i·t·(c0 + a·n·m + b·m²))`.
#[derive(Debug, Clone, Copy, PartialEq, Default)]
pub struct CollectiveHamiltonian {
    pub c0: f64,
    pub a: f64,
    pub b: f64,
}

impl CollectiveHamiltonian {
    pub fn new(c0: f64, a: f64, b: f64) -> Self {
        Self { c0, a, b }
    }

    /// Pure `a·nJ_z` coupling.
    pub fn linear(a: f64) -> Self {
        Self { c0: 0.0, a, b: 0.0 }
    }

    /// Pure `b·J_z²` coupling.
    pub fn quadratic(b: f64) -> Self {
        Self { c0: 0.0, a: 0.0, b }
    }
}

/// Single-spin reduced Bloch vector of a symmetric state.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct BlochVector {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl BlochVector {
    pub fn length(&self) -> f64 {
        (self.x * self.x + self.y * self.y + self.z * self.z).sqrt()
    }

    /// Purity of the single-spin reduced state, `(1 + |b|²)/2`.
    pub fn purity(&self) -> f64 {
        (1.0 + self.length().powi(2)) / 2.0
    }
}

impl DickeState {
    /// Builds a state from raw amplitudes; the vector must have length `n+1`
    /// and unit norm within 1e-12.
    pub fn from_amplitudes(n: usize, amps: Vec<Complex64>) -> Result<Self> {
        if n == 0 {
            return Err(DickeError::EmptyEnsemble);
        }
        if amps.len() != n + 1 {
            return Err(DickeError::DimensionMismatch {
                got: amps.len(),
                expected: n + 1,
            });
        }
        let norm: f64 = amps.iter().map(|a| a.norm_sqr()).sum();
        if (norm - 1.0).abs() > 1e-9 {
            return Err(DickeError::NotNormalized { norm });
        }
        let mut state = Self { n, amps };
        state.renormalize();
        Ok(state)
    }

    /// The Dicke basis state with all weight on level index `i` (`m = i - n/2`).
    pub fn basis_level(n: usize, i: usize) -> Result<Self> {
        if n == 0 {
            return Err(DickeError::EmptyEnsemble);
        }
        if i > n {
            return Err(DickeError::DimensionMismatch {
                got: i,
                expected: n,
            });
        }
        let mut amps = vec![Complex64::new(0.0, 0.0); n + 1];
        amps[i] = Complex64::new(1.0, 0.0);
        Ok(Self { n, amps })
    }

    /// Embeds a spin coherent state into the Dicke basis.
    ///
    /// The level with `k` flipped spins (`m = n/2 - k`) gets amplitude
    /// `sqrt(C(n,k)) cos^{n-k}(β/2) sin^k(β/2) e^{ikφ}`. Binomial weights are
    /// assembled in log space so large `n` cannot overflow.
    pub fn embed_product(p: BlochProduct) -> Result<Self> {
        if p.n == 0 {
            return Err(DickeError::EmptyEnsemble);
        }
        let n = p.n;
        let c = (p.beta / 2.0).cos();
        let s = (p.beta / 2.0).sin();
        let mut amps = vec![Complex64::new(0.0, 0.0); n + 1];
        if s.abs() < f64::MIN_POSITIVE {
            // β = 0 pole: all spins up, m = +n/2.
            amps[n] = Complex64::new(1.0, 0.0);
            return Ok(Self { n, amps });
        }
        if c.abs() < f64::MIN_POSITIVE {
            // β = π pole: all spins down, m = -n/2.
            amps[0] = Complex64::from_polar(1.0, n as f64 * p.phi);
            return Ok(Self { n, amps });
        }
        let lnf = ln_factorial_table(n);
        let (ln_c, ln_s) = (c.abs().ln(), s.abs().ln());
        for k in 0..=n {
            let ln_mag = 0.5 * (lnf[n] - lnf[k] - lnf[n - k])
                + (n - k) as f64 * ln_c
                + k as f64 * ln_s;
            let sign = if c < 0.0 && (n - k) % 2 == 1 { -1.0 } else { 1.0 }
                * if s < 0.0 && k % 2 == 1 { -1.0 } else { 1.0 };
            // k flipped spins sit at m = n/2 - k, i.e. index n - k.
            amps[n - k] = Complex64::from_polar(ln_mag.exp(), k as f64 * p.phi) * sign;
        }
        let mut state = Self { n, amps };
        state.renormalize();
        Ok(state)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Total spin quantum number `j = n/2`.
    pub fn j(&self) -> f64 {
        self.n as f64 / 2.0
    }

    pub fn amplitudes(&self) -> &[Complex64] {
        &self.amps
    }

    /// `J_z` eigenvalue of level index `i`.
    pub fn m_of(&self, i: usize) -> f64 {
        i as f64 - self.j()
    }

    pub fn norm_sqr(&self) -> f64 {
        self.amps.iter().map(|a| a.norm_sqr()).sum()
    }

    pub(crate) fn renormalize(&mut self) {
        let norm = self.norm_sqr().sqrt();
        if (norm - 1.0).abs() > f64::EPSILON {
            for a in &mut self.amps {
                *a /= norm;
            }
        }
    }

    /// Overlap magnitude `|<self|other>|`; equality up to global phase means
    /// this is 1.
    pub fn fidelity(&self, other: &DickeState) -> f64 {
        assert_eq!(self.n, other.n, "fidelity between unequal ensembles");
        self.amps
            .iter()
            .zip(&other.amps)
            .map(|(a, b)| a.conj() * b)
            .sum::<Complex64>()
            .norm()
    }

    /// Diagonal evolution under the collective Hamiltonian for time `t`.
    pub fn evolve(&self, h: &CollectiveHamiltonian, t: f64) -> DickeState {
        let n = self.n as f64;
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| {
                let m = self.m_of(i);
                let phase = -t * (h.c0 + h.a * n * m + h.b * m * m);
                a * Complex64::from_polar(1.0, phase)
            })
            .collect();
        DickeState { n: self.n, amps }
    }

    /// Rotation `exp(-i·angle·J_z)` (diagonal phases).
    pub fn rotate_z(&self, angle: f64) -> DickeState {
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(i, a)| a * Complex64::from_polar(1.0, -angle * self.m_of(i)))
            .collect();
        DickeState { n: self.n, amps }
    }

    /// Rotation `exp(-i·angle·J_y)` via the Wigner small-d matrix.
    pub fn rotate_y(&self, angle: f64) -> DickeState {
        crate::rotation::rotate_y(self, angle)
    }

    /// Rotation `exp(-i·angle·J_x)`, composed as
    /// `e^{+iπJ_z/2} e^{-i·angle·J_y} e^{-iπJ_z/2}`.
    pub fn rotate_x(&self, angle: f64) -> DickeState {
        use std::f64::consts::FRAC_PI_2;
        self.rotate_z(FRAC_PI_2).rotate_y(angle).rotate_z(-FRAC_PI_2)
    }

    /// Amplitudes of `obs|s>` (tridiagonal application, O(n)).
    pub fn apply(&self, obs: Observable) -> Vec<Complex64> {
        obs.apply(self)
    }

    /// Expectation value of a collective observable.
    pub fn expectation(&self, obs: Observable) -> Result<f64> {
        let w = obs.apply(self);
        let z: Complex64 = self
            .amps
            .iter()
            .zip(&w)
            .map(|(a, b)| a.conj() * b)
            .sum();
        if z.im.abs() > 1e-8 {
            return Err(DickeError::ImaginaryResidue { residue: z.im });
        }
        Ok(z.re)
    }

    /// Variance `<obs²> - <obs>²`; the second moment is computed as the norm
    /// of `obs|s>`, which is nonnegative by construction.
    pub fn variance(&self, obs: Observable) -> Result<f64> {
        let w = obs.apply(self);
        let second: f64 = w.iter().map(|a| a.norm_sqr()).sum();
        let mean = self.expectation(obs)?;
        let v = second - mean * mean;
        if v < -1e-10 {
            return Err(DickeError::NegativeVariance { value: v });
        }
        Ok(v.max(0.0))
    }

    /// Single-spin reduced Bloch vector `(2<J_x>/n, 2<J_y>/n, 2<J_z>/n)`.
    ///
    /// Its length is 1 exactly when the state is a product of identical
    /// single-spin states, which makes it a zero-entanglement witness for
    /// symmetric states.
    pub fn reduced_bloch(&self) -> Result<BlochVector> {
        let scale = 2.0 / self.n as f64;
        Ok(BlochVector {
            x: scale * self.expectation(Observable::Jx)?,
            y: scale * self.expectation(Observable::Jy)?,
            z: scale * self.expectation(Observable::Jz)?,
        })
    }
}
