use num_complex::Complex64;

use crate::DickeState;

/// Collective observables measurable on a symmetric ensemble.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Observable {
    Jx,
    Jy,
    Jz,
    Jz2,
    Jx2,
    Jy2,
}

impl Observable {
    /// Applies the observable to the amplitude vector.
    ///
    /// Ladder matrix elements are `<m±1|J_±|m> = sqrt(j(j+1) - m(m±1))`, so
    /// everything is tridiagonal and O(n).
    pub(crate) fn apply(self, s: &DickeState) -> Vec<Complex64> {
        match self {
            Observable::Jz => diagonal(s, |m| m),
            Observable::Jz2 => diagonal(s, |m| m * m),
            Observable::Jx => jx(s, s.amplitudes()),
            Observable::Jy => jy(s, s.amplitudes()),
            Observable::Jx2 => jx(s, &jx(s, s.amplitudes())),
            Observable::Jy2 => jy(s, &jy(s, s.amplitudes())),
        }
    }
}

fn diagonal(s: &DickeState, f: impl Fn(f64) -> f64) -> Vec<Complex64> {
    s.amplitudes()
        .iter()
        .enumerate()
        .map(|(i, a)| a * f(s.m_of(i)))
        .collect()
}

/// `sqrt(j(j+1) - m(m+1))`, the raising matrix element out of level `m`.
fn raise_coeff(j: f64, m: f64) -> f64 {
    (j * (j + 1.0) - m * (m + 1.0)).max(0.0).sqrt()
}

fn jx(s: &DickeState, amps: &[Complex64]) -> Vec<Complex64> {
    let j = s.j();
    let n = s.n();
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
    for i in 0..=n {
        let m = s.m_of(i);
        // J_x = (J_+ + J_-)/2
        if i < n {
            out[i + 1] += amps[i] * (raise_coeff(j, m) / 2.0);
        }
        if i > 0 {
            out[i - 1] += amps[i] * (raise_coeff(j, m - 1.0) / 2.0);
        }
    }
    out
}

fn jy(s: &DickeState, amps: &[Complex64]) -> Vec<Complex64> {
    let j = s.j();
    let n = s.n();
    let half_i = Complex64::new(0.0, 0.5);
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];
    for i in 0..=n {
        let m = s.m_of(i);
        // J_y = (J_+ - J_-)/2i
        if i < n {
            out[i + 1] -= amps[i] * raise_coeff(j, m) * half_i;
        }
        if i > 0 {
            out[i - 1] += amps[i] * raise_coeff(j, m - 1.0) * half_i;
        }
    }
    out
}
