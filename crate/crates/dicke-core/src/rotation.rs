//! Wigner small-d rotation about the y axis.
//!
//! The columns of `d^j(θ)` are the rotated basis states
//! `e^{-iθJ_y}|j,m>` expressed in the `J_z` basis. The extreme column
//! `m = j` is a spin coherent state with binomial amplitudes; each further
//! column follows from applying the rotated lowering operator
//! `e^{-iθJ_y} J_- e^{+iθJ_y} = (cosθ-1)/2·J_+ + (cosθ+1)/2·J_- - sinθ·J_z`,
//! a three-term (tridiagonal) recursion per column. Columns are generated one
//! at a time and folded into the output, so the full matrix is never stored.

use num_complex::Complex64;

use crate::{ln_factorial_table, DickeState};

pub(crate) fn rotate_y(s: &DickeState, angle: f64) -> DickeState {
    let n = s.n();
    let amps = s.amplitudes();
    let mut out = vec![Complex64::new(0.0, 0.0); n + 1];

    // Column m = j (source index n): coherent-state binomial amplitudes.
    let mut col = coherent_column(n, angle);
    accumulate(&mut out, amps[n], &col);

    let j = n as f64 / 2.0;
    let (cp, cm, sz) = (
        ((angle).cos() - 1.0) / 2.0,
        ((angle).cos() + 1.0) / 2.0,
        angle.sin(),
    );
    let mut next = vec![0.0; n + 1];
    // Walk columns downward: source index idx holds m = idx - j.
    for idx in (1..=n).rev() {
        let m = idx as f64 - j;
        let norm = ((j + m) * (j - m + 1.0)).sqrt();
        for (i, v) in next.iter_mut().enumerate() {
            let mi = i as f64 - j;
            let mut acc = -sz * mi * col[i];
            if i > 0 {
                acc += cp * raise(j, mi - 1.0) * col[i - 1];
            }
            if i < n {
                acc += cm * raise(j, mi) * col[i + 1];
            }
            *v = acc / norm;
        }
        // Each column is a rotated basis state, hence exactly unit norm;
        // renormalizing bounds drift of the downward recursion.
        let len = next.iter().map(|v| v * v).sum::<f64>().sqrt();
        if len > 0.0 {
            for v in &mut next {
                *v /= len;
            }
        }
        std::mem::swap(&mut col, &mut next);
        accumulate(&mut out, amps[idx - 1], &col);
    }

    let mut rotated = DickeState::from_amplitudes(n, out)
        .expect("rotation preserves dimension and norm");
    rotated.renormalize();
    rotated
}

fn accumulate(out: &mut [Complex64], weight: Complex64, col: &[f64]) {
    if weight.norm_sqr() == 0.0 {
        return;
    }
    for (o, c) in out.iter_mut().zip(col) {
        *o += weight * *c;
    }
}

fn raise(j: f64, m: f64) -> f64 {
    (j * (j + 1.0) - m * (m + 1.0)).max(0.0).sqrt()
}

/// `d^j_{m', j}(θ)`: amplitudes of the rotated all-up state, assembled in log
/// space. Entry index `i' = n - k` carries `sqrt(C(n,k)) cos^{n-k} sin^k` of
/// `θ/2`.
fn coherent_column(n: usize, angle: f64) -> Vec<f64> {
    let c = (angle / 2.0).cos();
    let s = (angle / 2.0).sin();
    let mut col = vec![0.0; n + 1];
    if s.abs() < f64::MIN_POSITIVE {
        col[n] = 1.0;
        return col;
    }
    if c.abs() < f64::MIN_POSITIVE {
        col[0] = if n % 2 == 1 && s < 0.0 { -1.0 } else { 1.0 };
        return col;
    }
    let lnf = ln_factorial_table(n);
    let (ln_c, ln_s) = (c.abs().ln(), s.abs().ln());
    for k in 0..=n {
        let ln_mag =
            0.5 * (lnf[n] - lnf[k] - lnf[n - k]) + (n - k) as f64 * ln_c + k as f64 * ln_s;
        let mut sign = 1.0;
        if c < 0.0 && (n - k) % 2 == 1 {
            sign = -sign;
        }
        if s < 0.0 && k % 2 == 1 {
            sign = -sign;
        }
        col[n - k] = sign * ln_mag.exp();
    }
    col
}
