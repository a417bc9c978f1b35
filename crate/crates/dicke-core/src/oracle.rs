//! Brute-force reference implementation over the full 2^n qubit space.
//!
//! Nothing here touches the Dicke-basis code paths: states are full
//! tensor-product vectors, collective operators are sums of Pauli terms, and
//! rotations act qubit by qubit. Only usable for small `n`; intended as an
//! independent oracle in tests (feature `oracle`).

use num_complex::Complex64;

use crate::{BlochProduct, CollectiveHamiltonian, DickeState, Observable};

/// Full 2^n state vector. Bit `j` of a basis index set to 1 means qubit `j`
/// is in `|1>` (the `m = -1/2` single-spin state).
#[derive(Debug, Clone)]
pub struct FullState {
    pub n: usize,
    pub amps: Vec<Complex64>,
}

impl FullState {
    pub fn product(p: BlochProduct) -> Self {
        let c = Complex64::new((p.beta / 2.0).cos(), 0.0);
        let s = Complex64::from_polar((p.beta / 2.0).sin(), p.phi);
        let mut amps = vec![Complex64::new(1.0, 0.0)];
        for _ in 0..p.n {
            let mut next = Vec::with_capacity(amps.len() * 2);
            for a in &amps {
                next.push(a * c);
            }
            for a in &amps {
                next.push(a * s);
            }
            amps = next;
        }
        Self { n: p.n, amps }
    }

    /// Lifts a Dicke-basis state into the full space (each bitstring with k
    /// ones shares the level amplitude equally).
    pub fn from_dicke(s: &DickeState) -> Self {
        let n = s.n();
        let mut counts = vec![0usize; n + 1];
        for bits in 0..(1usize << n) {
            counts[bits.count_ones() as usize] += 1;
        }
        let amps = (0..(1usize << n))
            .map(|bits| {
                let k = bits.count_ones() as usize;
                s.amplitudes()[n - k] / (counts[k] as f64).sqrt()
            })
            .collect();
        Self { n, amps }
    }

    /// Projects back onto the symmetric subspace, returning the Dicke vector
    /// and the norm of the component left outside the subspace.
    pub fn to_dicke(&self) -> (DickeState, f64) {
        let n = self.n;
        let mut level = vec![Complex64::new(0.0, 0.0); n + 1];
        let mut counts = vec![0usize; n + 1];
        for (bits, a) in self.amps.iter().enumerate() {
            let k = bits.count_ones() as usize;
            level[n - k] += a;
            counts[k] += 1;
        }
        for (k, l) in level.iter_mut().rev().enumerate() {
            *l /= (counts[k] as f64).sqrt();
        }
        let sym_norm: f64 = level.iter().map(|a| a.norm_sqr()).sum();
        let total: f64 = self.amps.iter().map(|a| a.norm_sqr()).sum();
        let residual = (total - sym_norm).max(0.0).sqrt();
        let norm = sym_norm.sqrt();
        for l in &mut level {
            *l /= norm;
        }
        (
            DickeState::from_amplitudes(n, level).expect("projected state"),
            residual,
        )
    }

    fn m_of(&self, bits: usize) -> f64 {
        (self.n as f64 - 2.0 * bits.count_ones() as f64) / 2.0
    }

    pub fn evolve(&self, h: &CollectiveHamiltonian, t: f64) -> Self {
        let n = self.n as f64;
        let amps = self
            .amps
            .iter()
            .enumerate()
            .map(|(bits, a)| {
                let m = self.m_of(bits);
                a * Complex64::from_polar(1.0, -t * (h.c0 + h.a * n * m + h.b * m * m))
            })
            .collect();
        Self { n: self.n, amps }
    }

    fn apply_single_qubit(&self, u: [[Complex64; 2]; 2]) -> Self {
        let mut amps = self.amps.clone();
        for q in 0..self.n {
            let bit = 1usize << q;
            let mut next = amps.clone();
            for idx in 0..amps.len() {
                if idx & bit == 0 {
                    let a0 = amps[idx];
                    let a1 = amps[idx | bit];
                    next[idx] = u[0][0] * a0 + u[0][1] * a1;
                    next[idx | bit] = u[1][0] * a0 + u[1][1] * a1;
                }
            }
            amps = next;
        }
        Self { n: self.n, amps }
    }

    /// `exp(-i·angle·J_y)` as a product of single-qubit y rotations.
    pub fn rotate_y(&self, angle: f64) -> Self {
        let c = Complex64::new((angle / 2.0).cos(), 0.0);
        let s = Complex64::new((angle / 2.0).sin(), 0.0);
        self.apply_single_qubit([[c, -s], [s, c]])
    }

    /// `exp(-i·angle·J_z)` as a product of single-qubit z rotations.
    pub fn rotate_z(&self, angle: f64) -> Self {
        let zero = Complex64::new(0.0, 0.0);
        let down = Complex64::from_polar(1.0, -angle / 2.0);
        let up = Complex64::from_polar(1.0, angle / 2.0);
        self.apply_single_qubit([[down, zero], [zero, up]])
    }

    /// `exp(-i·angle·J_x)`.
    pub fn rotate_x(&self, angle: f64) -> Self {
        let c = Complex64::new((angle / 2.0).cos(), 0.0);
        let is = Complex64::new(0.0, -(angle / 2.0).sin());
        self.apply_single_qubit([[c, is], [is, c]])
    }

    fn apply_collective(&self, axis: usize) -> Vec<Complex64> {
        // J_axis = (1/2) Σ_j σ_axis^{(j)}
        let mut out = vec![Complex64::new(0.0, 0.0); self.amps.len()];
        for q in 0..self.n {
            let bit = 1usize << q;
            for (idx, a) in self.amps.iter().enumerate() {
                match axis {
                    0 => out[idx ^ bit] += a * 0.5,
                    1 => {
                        // σ_y |0> = i|1>, σ_y |1> = -i|0>
                        let sign = if idx & bit == 0 { 1.0 } else { -1.0 };
                        out[idx ^ bit] += a * Complex64::new(0.0, 0.5 * sign);
                    }
                    _ => {
                        let sign = if idx & bit == 0 { 1.0 } else { -1.0 };
                        out[idx] += a * (0.5 * sign);
                    }
                }
            }
        }
        out
    }

    pub fn expectation(&self, obs: Observable) -> f64 {
        let w = match obs {
            Observable::Jx => self.apply_collective(0),
            Observable::Jy => self.apply_collective(1),
            Observable::Jz => self.apply_collective(2),
            Observable::Jx2 => twice(self, 0),
            Observable::Jy2 => twice(self, 1),
            Observable::Jz2 => twice(self, 2),
        };
        self.amps
            .iter()
            .zip(&w)
            .map(|(a, b)| (a.conj() * b).re)
            .sum()
    }

    pub fn variance(&self, obs: Observable) -> f64 {
        let sq = match obs {
            Observable::Jx => Observable::Jx2,
            Observable::Jy => Observable::Jy2,
            Observable::Jz => Observable::Jz2,
            // Second moment of a squared observable: apply twice more.
            other => {
                let mean = self.expectation(other);
                let w = match other {
                    Observable::Jx2 => twice(self, 0),
                    Observable::Jy2 => twice(self, 1),
                    _ => twice(self, 2),
                };
                let second: f64 = w.iter().map(|a| a.norm_sqr()).sum();
                return second - mean * mean;
            }
        };
        self.expectation(sq) - self.expectation(obs).powi(2)
    }
}

fn twice(s: &FullState, axis: usize) -> Vec<Complex64> {
    let first = FullState {
        n: s.n,
        amps: s.apply_collective(axis),
    };
    first.apply_collective(axis)
}
