//! Translation-invariant quasifree states on the majorana chain through
//! piecewise-constant 2×2 symbols, evolution under the glider Bogoliubov
//! shift (m_{2x} → m_{2x−2}, m_{2x+1} → m_{2x+3}), block-Toeplitz two-point
//! matrices by exact Fourier integration, and window entanglement entropy.

use std::f64::consts::PI;

use nalgebra::DMatrix;
use num_complex::Complex64;
use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq)]
pub enum QuasifreeError {
    #[error("interpolation parameter must lie in [0, 1]")]
    ParamOutOfRange,
    #[error("two-point matrix is not Hermitian (deviation {0:e})")]
    NotHermitian(f64),
    #[error("symbol violates positivity: eigenvalue {0} outside [0, 2]")]
    Positivity(f64),
}

type Mat2 = [[Complex64; 2]; 2];

/// A symbol Q(p): constant 2×2 pieces on subintervals of [−π, π) plus an
/// integer phase twist t putting e^{2itp} on q12 and e^{−2itp} on q21.
#[derive(Debug, Clone, PartialEq)]
pub struct SymbolQ {
    /// (p_lo, p_hi, matrix) with half-open intervals [p_lo, p_hi).
    pub pieces: Vec<(f64, f64, Mat2)>,
    pub phase_twist: i64,
}

impl SymbolQ {
    /// Symbol with diagonals unchanged and the twist advanced by t steps.
    pub fn evolve(&self, t: i64) -> SymbolQ {
        SymbolQ {
            pieces: self.pieces.clone(),
            phase_twist: self.phase_twist + t,
        }
    }

    /// Invariance under the glider shift: all off-diagonal pieces zero.
    pub fn is_invariant(&self) -> bool {
        self.pieces.iter().all(|(_, _, m)| {
            m[0][1].norm() == 0.0 && m[1][0].norm() == 0.0
        })
    }
}

fn i_c(re: f64, im: f64) -> Complex64 {
    Complex64::new(re, im)
}

/// The interpolating family ω_A between the all-spins-up state (A = 0) and
/// a shift-invariant diagonal state (A = 1).
pub fn symbol_omega_a(a: f64) -> Result<SymbolQ, QuasifreeError> {
    if !(0.0..=1.0).contains(&a) {
        return Err(QuasifreeError::ParamOutOfRange);
    }
    let pure = [
        [i_c(1.0, 0.0), i_c(0.0, 1.0)],
        [i_c(0.0, -1.0), i_c(1.0, 0.0)],
    ];
    let zero = [[i_c(0.0, 0.0); 2]; 2];
    let full = [
        [i_c(2.0, 0.0), i_c(0.0, 0.0)],
        [i_c(0.0, 0.0), i_c(2.0, 0.0)],
    ];
    let breaks = [(-PI, -PI * a, pure), (-PI * a, 0.0, zero), (0.0, PI * a, full), (PI * a, PI, pure)];
    Ok(SymbolQ {
        pieces: breaks
            .into_iter()
            .filter(|(lo, hi, _)| hi - lo > 0.0)
            .collect(),
        phase_twist: 0,
    })
}

/// (1/2π) ∫_a^b e^{−ipk} dp for integer k.
fn fourier_piece(a: f64, b: f64, k: i64) -> Complex64 {
    if k == 0 {
        return i_c((b - a) / (2.0 * PI), 0.0);
    }
    let ea = i_c(0.0, -a * k as f64).exp();
    let eb = i_c(0.0, -b * k as f64).exp();
    (ea - eb) / i_c(0.0, 2.0 * PI * k as f64)
}

/// The restricted majorana two-point matrix of an L-site window; row 2x+i
/// is the majorana m_{2x+i} of site x = 0..L−1.
pub fn two_point_matrix(q: &SymbolQ, window: usize) -> DMatrix<Complex64> {
    let l = window;
    let t = q.phase_twist;
    // Block entry (i,j) at site offset d = x − y is the Fourier coefficient
    // of q_ij at k = d for diagonals, d − 2t for q12, d + 2t for q21.
    let mut block = vec![[[i_c(0.0, 0.0); 2]; 2]; 2 * l - 1];
    for (di, entry) in block.iter_mut().enumerate() {
        let d = di as i64 - (l as i64 - 1);
        for (lo, hi, m) in &q.pieces {
            entry[0][0] += m[0][0] * fourier_piece(*lo, *hi, d);
            entry[1][1] += m[1][1] * fourier_piece(*lo, *hi, d);
            entry[0][1] += m[0][1] * fourier_piece(*lo, *hi, d - 2 * t);
            entry[1][0] += m[1][0] * fourier_piece(*lo, *hi, d + 2 * t);
        }
    }
    DMatrix::from_fn(2 * l, 2 * l, |r, s| {
        let (x, i) = (r / 2, r % 2);
        let (y, j) = (s / 2, s % 2);
        let d = x as i64 - y as i64;
        block[(d + l as i64 - 1) as usize][i][j]
    })
}

/// Window entanglement entropy in qubits from the eigenvalues of M.
pub fn entropy(m: &DMatrix<Complex64>) -> Result<f64, QuasifreeError> {
    let dev = (m - m.adjoint()).norm();
    if dev > 1e-9 {
        return Err(QuasifreeError::NotHermitian(dev));
    }
    let eigs = m.clone().symmetric_eigen().eigenvalues;
    let mut s = 0.0;
    for &lam in eigs.iter() {
        if !(-1e-9..=2.0 + 1e-9).contains(&lam) {
            return Err(QuasifreeError::Positivity(lam));
        }
        let lam = lam.clamp(0.0, 2.0);
        if lam <= 1e-12 || lam >= 2.0 - 1e-12 {
            continue;
        }
        s -= lam / 2.0 * (lam / 2.0).log2();
    }
    Ok(s)
}

/// S(t) for t = 0..T of the window entropy under the glider shift.
pub fn entropy_timeseries(
    a: f64,
    window: usize,
    steps: i64,
) -> Result<Vec<f64>, QuasifreeError> {
    let q = symbol_omega_a(a)?;
    (0..=steps)
        .map(|t| entropy(&two_point_matrix(&q.evolve(t), window)))
        .collect()
}

/// Largest |entry| of the off-diagonal majorana blocks per time step; tends
/// to zero by the Riemann-Lebesgue mechanism for non-invariant symbols.
pub fn convergence_report(q: &SymbolQ, window: usize, steps: i64) -> Vec<f64> {
    (0..=steps)
        .map(|t| {
            let m = two_point_matrix(&q.evolve(t), window);
            let mut max = 0.0f64;
            for x in 0..window {
                for y in 0..window {
                    max = max.max(m[(2 * x, 2 * y + 1)].norm());
                    max = max.max(m[(2 * x + 1, 2 * y)].norm());
                }
            }
            max
        })
        .collect()
}
