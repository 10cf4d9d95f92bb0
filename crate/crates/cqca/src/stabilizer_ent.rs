//! Translation-invariant pure stabilizer states: validity of a generator
//! vector, entanglement via the degree formula, an independent
//! symplectic-pairing count across a cut, evolution timeseries, and
//! growth-rate estimation.

use thiserror::Error;

use crate::csca::CscaMatrix;
use crate::pauli::PauliWord;
use crate::symplectic::PhaseVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum StabilizerError {
    #[error("the zero vector does not generate a stabilizer state")]
    ZeroVector,
    #[error("invalid stabilizer generator: {0:?}")]
    Invalid(Vec<StabViolation>),
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum StabViolation {
    /// Components are not reflection invariant about one common center.
    NotReflectionInvariant,
    /// The reflection center falls between sites (even word length).
    EvenLength,
    /// The central cell of the generating word is the identity.
    IdentityCenter,
    /// The two components share a non-invertible divisor.
    CommonDivisor,
}

/// A validated generator ξ, translated so that its support is symmetric
/// about the origin; n is the half-length.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct StabilizerGenerator {
    pub xi: PhaseVector,
    pub n: u64,
}

fn combined_bounds(xi: &PhaseVector) -> (i64, i64) {
    let mut lo = i64::MAX;
    let mut hi = i64::MIN;
    for c in [&xi.plus, &xi.minus] {
        if let (Ok(a), Ok(b)) = (c.min_deg(), c.max_deg()) {
            lo = lo.min(a);
            hi = hi.max(b);
        }
    }
    (lo, hi)
}

/// Checks the three stabilizer-validity conditions; empty list means valid.
pub fn validate_stabilizer(xi: &PhaseVector) -> Result<Vec<StabViolation>, StabilizerError> {
    if xi.is_zero() {
        return Err(StabilizerError::ZeroVector);
    }
    let mut violations = Vec::new();
    let (lo, hi) = combined_bounds(xi);
    let c2 = lo + hi; // twice the reflection center
    let mut symmetric = true;
    for c in [&xi.plus, &xi.minus] {
        if !c.is_zero() && c.involution().shift(c2) != *c {
            symmetric = false;
        }
    }
    if !symmetric {
        violations.push(StabViolation::NotReflectionInvariant);
    } else if c2.rem_euclid(2) != 0 {
        violations.push(StabViolation::EvenLength);
    } else if !xi.plus.coeff(c2 / 2) && !xi.minus.coeff(c2 / 2) {
        violations.push(StabViolation::IdentityCenter);
    }
    match xi.plus.gcd(&xi.minus) {
        Ok(g) if g.is_monomial() => {}
        _ => violations.push(StabViolation::CommonDivisor),
    }
    Ok(violations)
}

impl StabilizerGenerator {
    /// Validates and centers ξ.
    pub fn new(xi: &PhaseVector) -> Result<Self, StabilizerError> {
        let violations = validate_stabilizer(xi)?;
        if !violations.is_empty() {
            return Err(StabilizerError::Invalid(violations));
        }
        let (lo, hi) = combined_bounds(xi);
        let centered = xi.translate(-(lo + hi) / 2);
        let (_, n) = combined_bounds(&centered);
        StabilizerGenerator::assert_centered(&centered, n);
        Ok(StabilizerGenerator {
            xi: centered,
            n: n as u64,
        })
    }

    fn assert_centered(xi: &PhaseVector, n: i64) {
        let (lo, hi) = combined_bounds(xi);
        debug_assert!(lo == -n && hi == n);
    }

    /// Generator from the letters of a Pauli word (phase ignored).
    pub fn from_word(w: &PauliWord) -> Result<Self, StabilizerError> {
        StabilizerGenerator::new(&w.phase_vector())
    }

    /// Qubit pairs maximally entangled across any single cut of the chain.
    pub fn entanglement_bipartite(&self) -> u64 {
        self.n
    }

    /// Pairs a region of L consecutive sites shares with the rest.
    pub fn entanglement_finite_region(&self, region: u64) -> u64 {
        (2 * self.n).min(region)
    }
}

/// E(t) for t = 0..T under repeated application of a; bipartite when
/// `region` is absent, finite-region otherwise.
pub fn evolve_entanglement(
    a: &CscaMatrix,
    xi: &PhaseVector,
    steps: u64,
    region: Option<u64>,
) -> Result<Vec<u64>, StabilizerError> {
    let mut gen = StabilizerGenerator::new(xi)?;
    let mut out = Vec::with_capacity(steps as usize + 1);
    let measure = |g: &StabilizerGenerator| match region {
        None => g.entanglement_bipartite(),
        Some(l) => g.entanglement_finite_region(l),
    };
    out.push(measure(&gen));
    for _ in 0..steps {
        gen = StabilizerGenerator::new(&a.apply(&gen.xi))?;
        out.push(measure(&gen));
    }
    Ok(out)
}

/// Least-squares slope of E(t) over the last half of the horizon; estimates
/// the degree of the trace polynomial.
pub fn asymptotic_rate(
    a: &CscaMatrix,
    xi: &PhaseVector,
    steps: u64,
) -> Result<f64, StabilizerError> {
    assert!(steps >= 8, "horizon too short for a slope estimate");
    let series = evolve_entanglement(a, xi, steps, None)?;
    let tail = &series[series.len() / 2..];
    let m = tail.len() as f64;
    let tbar = (m - 1.0) / 2.0;
    let ebar = tail.iter().map(|&e| e as f64).sum::<f64>() / m;
    let mut num = 0.0;
    let mut den = 0.0;
    for (i, &e) in tail.iter().enumerate() {
        num += (i as f64 - tbar) * (e as f64 - ebar);
        den += (i as f64 - tbar) * (i as f64 - tbar);
    }
    Ok(num / den)
}

/// Independent pair count across the cut between sites −1 and 0.
///
/// The 2n generator translates crossing the cut are restricted to the right
/// half [0, 2n−1] and written as 4n-bit GF(2) rows; the rows are
/// Gaussian-eliminated, their mutual commutation matrix is formed from the
/// shift-zero symplectic form, and anticommuting row pairs are extracted by
/// symplectic elimination (lowest index first). The result must equal n.
pub fn pairing_oracle(xi: &PhaseVector) -> Result<u64, StabilizerError> {
    let gen = StabilizerGenerator::new(xi)?;
    let n = gen.n as i64;
    if n == 0 {
        return Ok(0);
    }
    let width = 2 * n; // sites 0..2n−1 on the right of the cut
    let ncols = (2 * width) as usize;
    let mut rows: Vec<Vec<bool>> = Vec::new();
    for shift in -n..n {
        let t = gen.xi.translate(shift);
        let mut row = vec![false; ncols];
        for x in 0..width {
            row[x as usize] = t.plus.coeff(x);
            row[(width + x) as usize] = t.minus.coeff(x);
        }
        rows.push(row);
    }

    // Row echelon form over GF(2); dependent rows become zero and drop out.
    let mut pivot_row = 0;
    for col in 0..ncols {
        if let Some(r) = (pivot_row..rows.len()).find(|&r| rows[r][col]) {
            rows.swap(pivot_row, r);
            let pivot = rows[pivot_row].clone();
            for (other, row) in rows.iter_mut().enumerate() {
                if other != pivot_row && row[col] {
                    for (dst, &src) in row.iter_mut().zip(&pivot) {
                        *dst ^= src;
                    }
                }
            }
            pivot_row += 1;
        }
    }
    rows.retain(|r| r.iter().any(|&b| b));

    // Shift-zero symplectic form of two restricted rows.
    let half = width as usize;
    let form = |a: &[bool], b: &[bool]| -> bool {
        let mut s = false;
        for x in 0..half {
            s ^= (a[x] & b[half + x]) ^ (b[x] & a[half + x]);
        }
        s
    };

    let mut pairs = 0u64;
    let mut active = rows;
    while let Some(v) = active.first().cloned() {
        match (1..active.len()).find(|&j| form(&v, &active[j])) {
            None => {
                // Commutes with everything left: central, no pair.
                active.remove(0);
            }
            Some(j) => {
                let w = active.remove(j);
                active.remove(0);
                for r in active.iter_mut() {
                    let fv = form(r, &v);
                    let fw = form(r, &w);
                    for c in 0..r.len() {
                        if fw {
                            r[c] ^= v[c];
                        }
                        if fv {
                            r[c] ^= w[c];
                        }
                    }
                }
                pairs += 1;
            }
        }
    }
    Ok(pairs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::csca::{by_name, glider_g, standard_glider};

    fn v(s: &str) -> PhaseVector {
        s.parse().unwrap()
    }

    #[test]
    fn validity_examples() {
        // σ2 ⊗ σ1 ⊗ σ2 centered at the origin.
        let xi = v("(u^-1+1+u | u^-1+u)");
        assert!(validate_stabilizer(&xi).unwrap().is_empty());
        assert_eq!(StabilizerGenerator::new(&xi).unwrap().n, 1);

        let up = v("(0 | 1)");
        assert!(validate_stabilizer(&up).unwrap().is_empty());
        assert_eq!(StabilizerGenerator::new(&up).unwrap().n, 0);

        let bad = v("(1+u | 1+u)");
        let viol = validate_stabilizer(&bad).unwrap();
        assert!(viol.contains(&StabViolation::EvenLength));
        assert!(viol.contains(&StabViolation::CommonDivisor));

        assert_eq!(
            validate_stabilizer(&PhaseVector::zero()),
            Err(StabilizerError::ZeroVector)
        );
    }

    #[test]
    fn off_center_generator_is_normalized() {
        let xi = v("(1+u+u^2 | 1+u^2)"); // σ2σ1σ2 shifted right by one
        let g = StabilizerGenerator::new(&xi).unwrap();
        assert_eq!(g.n, 1);
        assert_eq!(g.xi, v("(u^-1+1+u | u^-1+u)"));
    }

    #[test]
    fn degree_formula_examples() {
        let g = StabilizerGenerator::from_word(&"0:Y 1:X 2:Y".parse().unwrap()).unwrap();
        assert_eq!(g.entanglement_bipartite(), 1);
        let w = "-3:Y -2:X -1:X 0:X 1:X 2:X 3:Y".parse().unwrap();
        let g = StabilizerGenerator::from_word(&w).unwrap();
        assert_eq!(g.entanglement_bipartite(), 3);
        assert_eq!(g.entanglement_finite_region(30), 6);
        assert_eq!(g.entanglement_finite_region(4), 4);
    }

    #[test]
    fn pairing_matches_degree() {
        for s in [
            "(u^-1+1+u | u^-1+u)",
            "(0 | 1)",
            "(u^-3+1+u^3 | u^-3+u^-2+u^2+u^3)",
        ] {
            let xi = v(s);
            let g = StabilizerGenerator::new(&xi).unwrap();
            assert_eq!(pairing_oracle(&xi).unwrap(), g.entanglement_bipartite());
        }
    }

    #[test]
    fn slope_one_for_glider_automaton() {
        let xi = v("(u^-1+1+u | u^-1+u)");
        let series = evolve_entanglement(&glider_g(), &xi, 20, None).unwrap();
        for t in 10..20 {
            assert_eq!(series[t + 1] - series[t], 1);
        }
        let rate = asymptotic_rate(&glider_g(), &xi, 20).unwrap();
        assert!((rate - 1.0).abs() < 1e-9);
    }

    #[test]
    fn rate_estimates_trace_degree() {
        let up = v("(0 | 1)");
        let rate = asymptotic_rate(&standard_glider(), &up, 20).unwrap();
        assert!((rate - 1.0).abs() < 1e-9);
        let rate = asymptotic_rate(&crate::csca::fractal_f(), &up, 20).unwrap();
        assert!((rate - 1.0).abs() < 1e-9);
        let rate = asymptotic_rate(&by_name("Gn:1").unwrap(), &up, 20).unwrap();
        assert!(rate.abs() < 0.2);
    }

    #[test]
    fn periodic_automaton_oscillates() {
        let xi = v("(u^-1+1+u | u^-1+u)");
        let p = by_name("Gn:1").unwrap();
        let series = evolve_entanglement(&p, &xi, 10, None).unwrap();
        for t in 0..9 {
            assert_eq!(series[t], series[t + 2]);
        }
    }

    #[test]
    fn finite_region_saturates() {
        let xi = v("(u^-1+1+u | u^-1+u)");
        let series = evolve_entanglement(&standard_glider(), &xi, 25, Some(30)).unwrap();
        assert!(series.iter().all(|&e| e <= 30));
        let hit = series.iter().position(|&e| e == 30).unwrap();
        assert!(series[hit..].iter().all(|&e| e == 30));
    }

    #[test]
    fn bound_compliance() {
        let xi = v("(u^-1+1+u | u^-1+u)");
        for name in ["Gs", "G", "F", "Gn:1"] {
            let a = by_name(name).unwrap();
            let nbhd = [&a.a11, &a.a12, &a.a21, &a.a22]
                .iter()
                .map(|p| p.degree_span())
                .max()
                .unwrap() as u64;
            let series = evolve_entanglement(&a, &xi, 15, None).unwrap();
            for (t, &e) in series.iter().enumerate() {
                let drift = nbhd * t as u64;
                assert!(e <= series[0] + drift);
                assert!(e + drift >= series[0]);
            }
        }
    }
}
