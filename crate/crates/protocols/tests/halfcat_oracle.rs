//! Validates the two-branch half-cat model against a brute-force 4-qubit
//! simulation of the stated state and measurement.

use approx::assert_abs_diff_eq;
use num_complex::Complex64;
use protocols::halfcat_signal;

/// X⊗X parity on the first two qubits of a 4-qubit state.
fn first_half_parity(amps: &[Complex64]) -> f64 {
    let mut total = 0.0;
    for (idx, a) in amps.iter().enumerate() {
        let flipped = idx ^ 0b0011;
        total += (a.conj() * amps[flipped]).re;
    }
    total
}

#[test]
fn two_branch_model_matches_four_qubit_simulation() {
    let n = 4usize;
    for step in 0..40 {
        let gamma_t = step as f64 * 0.11;
        // (|0000> + |1100>)/√2: qubits 0,1 are the cat half.
        let mut amps = vec![Complex64::new(0.0, 0.0); 1 << n];
        amps[0b0000] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        amps[0b0011] = Complex64::new(std::f64::consts::FRAC_1_SQRT_2, 0.0);
        // evolve under γ J_z² (diagonal: m = (n - 2·popcount)/2)
        for (idx, a) in amps.iter_mut().enumerate() {
            let m = (n as f64 - 2.0 * idx.count_ones() as f64) / 2.0;
            *a *= Complex64::from_polar(1.0, -gamma_t * m * m);
        }
        let brute = first_half_parity(&amps);
        let model = halfcat_signal(n, 1.0, gamma_t).unwrap();
        assert_abs_diff_eq!(model, brute, epsilon = 1e-12);
    }
}
