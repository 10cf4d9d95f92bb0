//! Finitely supported Pauli words with exact i^k phase tracking, the
//! automaton action on them, and expectation values in translation-invariant
//! product states.
//!
//! A word is stored as i^phase_exponent times a tensor product of X/Y/Z
//! letters. Multiplication goes through the Weyl relation
//! w(ξ+η) = (−1)^{η₊·ξ₋} w(ξ) w(η) with Y = i·w(1,1), so all phases are
//! fourth roots of unity and exact.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_complex::Complex64;
use thiserror::Error;

use crate::csca::CscaMatrix;
use crate::gf2poly::LaurentPoly;
use crate::symplectic::PhaseVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PauliError {
    #[error("parse error: {0}")]
    Parse(String),
    #[error("bloch vector has norm greater than one")]
    BlochNorm,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Letter {
    X,
    Y,
    Z,
}

impl Letter {
    /// GF(2) bit pair (plus, minus) of the letter's phase-space class.
    pub fn bits(self) -> (bool, bool) {
        match self {
            Letter::X => (true, false),
            Letter::Y => (true, true),
            Letter::Z => (false, true),
        }
    }

    pub fn from_bits(plus: bool, minus: bool) -> Option<Letter> {
        match (plus, minus) {
            (true, false) => Some(Letter::X),
            (true, true) => Some(Letter::Y),
            (false, true) => Some(Letter::Z),
            (false, false) => None,
        }
    }
}

impl fmt::Display for Letter {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Letter::X => "X",
            Letter::Y => "Y",
            Letter::Z => "Z",
        })
    }
}

/// i^phase_exponent · ⊗ letters; identity sites are absent from the map.
#[derive(Clone, PartialEq, Eq)]
pub struct PauliWord {
    pub phase_exponent: u8,
    pub letters: BTreeMap<i64, Letter>,
}

impl PauliWord {
    pub fn identity() -> Self {
        PauliWord {
            phase_exponent: 0,
            letters: BTreeMap::new(),
        }
    }

    pub fn single(site: i64, letter: Letter) -> Self {
        PauliWord {
            phase_exponent: 0,
            letters: BTreeMap::from([(site, letter)]),
        }
    }

    pub fn is_identity(&self) -> bool {
        self.letters.is_empty() && self.phase_exponent == 0
    }

    /// The phase-space class of the letters, ignoring the phase.
    pub fn phase_vector(&self) -> PhaseVector {
        let mut plus = Vec::new();
        let mut minus = Vec::new();
        for (&x, &l) in &self.letters {
            let (p, m) = l.bits();
            if p {
                plus.push(x);
            }
            if m {
                minus.push(x);
            }
        }
        PhaseVector::new(
            LaurentPoly::from_exponents(&plus),
            LaurentPoly::from_exponents(&minus),
        )
    }

    /// Builds the phase-free Weyl operator w(ξ): i^{−#Y} · ⊗ letters.
    pub fn weyl(xi: &PhaseVector) -> PauliWord {
        let mut letters = BTreeMap::new();
        let mut ys = 0u8;
        let mut sites: Vec<i64> = xi.plus.exponents();
        sites.extend(xi.minus.exponents());
        sites.sort_unstable();
        sites.dedup();
        for x in sites {
            let l = Letter::from_bits(xi.plus.coeff(x), xi.minus.coeff(x)).unwrap();
            if l == Letter::Y {
                ys = (ys + 1) & 3;
            }
            letters.insert(x, l);
        }
        PauliWord {
            phase_exponent: (4 - ys) & 3,
            letters,
        }
    }

    fn y_count_mod4(&self) -> u8 {
        (self.letters.values().filter(|&&l| l == Letter::Y).count() & 3) as u8
    }

    /// Phase exponent of the word written as i^k w(ξ).
    fn weyl_phase(&self) -> u8 {
        (self.phase_exponent + self.y_count_mod4()) & 3
    }

    /// Exact product via the Weyl relation; phase-space vectors add.
    pub fn weyl_mul(&self, other: &PauliWord) -> PauliWord {
        let xi = self.phase_vector();
        let eta = other.phase_vector();
        // (−1)^{η₊·ξ₋}: parity of the overlap of other's plus bits with
        // self's minus bits.
        let overlap = eta.plus.mul_overlap_parity(&xi.minus);
        let phase = (self.weyl_phase() + other.weyl_phase() + if overlap { 2 } else { 0 }) & 3;
        let mut w = PauliWord::weyl(&xi.add(&eta));
        w.phase_exponent = (w.phase_exponent + phase) & 3;
        w
    }

    /// True iff the words commute (symplectic overlap at shift zero).
    pub fn commutes_with(&self, other: &PauliWord) -> bool {
        let xi = self.phase_vector();
        let eta = other.phase_vector();
        xi.plus.mul_overlap_parity(&eta.minus) == eta.plus.mul_overlap_parity(&xi.minus)
    }

    pub fn support(&self) -> impl Iterator<Item = i64> + '_ {
        self.letters.keys().copied()
    }
}

impl fmt::Display for PauliWord {
    /// `<phase> <site>:<letter> ...` with phase in {+1, -1, +i, -i}.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let phase = match self.phase_exponent {
            0 => "+1",
            1 => "+i",
            2 => "-1",
            _ => "-i",
        };
        write!(f, "{}", phase)?;
        for (x, l) in &self.letters {
            write!(f, " {}:{}", x, l)?;
        }
        Ok(())
    }
}

impl fmt::Debug for PauliWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for PauliWord {
    type Err = PauliError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let mut parts = s.split_whitespace();
        let first = parts
            .next()
            .ok_or_else(|| PauliError::Parse("empty word".into()))?;
        let (phase_exponent, mut rest): (u8, Vec<&str>) = match first {
            "+1" => (0, Vec::new()),
            "+i" => (1, Vec::new()),
            "-1" => (2, Vec::new()),
            "-i" => (3, Vec::new()),
            other => (0, vec![other]),
        };
        rest.extend(parts);
        let mut letters = BTreeMap::new();
        for tok in rest {
            let (site, letter) = tok
                .split_once(':')
                .ok_or_else(|| PauliError::Parse(format!("expected site:letter, got {:?}", tok)))?;
            let site: i64 = site
                .parse()
                .map_err(|_| PauliError::Parse(format!("bad site {:?}", site)))?;
            let letter = match letter {
                "X" | "1" => Letter::X,
                "Y" | "2" => Letter::Y,
                "Z" | "3" => Letter::Z,
                _ => return Err(PauliError::Parse(format!("bad letter {:?}", letter))),
            };
            if letters.insert(site, letter).is_some() {
                return Err(PauliError::Parse(format!("duplicate site {}", site)));
            }
        }
        Ok(PauliWord {
            phase_exponent,
            letters,
        })
    }
}

/// Image i^λ·w(η) of a single-site generator, with λ ∈ {0, 1} fixed by the
/// consistency condition λ² = (−1)^{⟨η₊,η₋⟩}: a generator squares to the
/// identity, so its image must too, which forces λ = i exactly when the
/// image has an odd number of Y letters; of the two consistent signs we
/// always take +i / +1.
fn generator_image(eta: &PhaseVector) -> PauliWord {
    let mut g = PauliWord::weyl(eta);
    g.phase_exponent = (g.phase_exponent + (g.y_count_mod4() & 1)) & 3;
    g
}

/// Applies the automaton to a Pauli word with exact phase. The word is
/// decomposed into single-site X/Z generators in a fixed order (ascending
/// site, X before Z); the generator images carry the minimal consistent
/// phase and the Weyl cocycle supplies all remaining signs.
pub fn apply_cqca(a: &CscaMatrix, w: &PauliWord) -> PauliWord {
    let mut plain = PauliWord::identity();
    let mut image = PauliWord::identity();
    for (&x, &l) in &w.letters {
        let (p, m) = l.bits();
        if p {
            plain = plain.weyl_mul(&PauliWord::single(x, Letter::X));
            let col = PhaseVector::new(a.a11.shift(x), a.a21.shift(x));
            image = image.weyl_mul(&generator_image(&col));
        }
        if m {
            plain = plain.weyl_mul(&PauliWord::single(x, Letter::Z));
            let col = PhaseVector::new(a.a12.shift(x), a.a22.shift(x));
            image = image.weyl_mul(&generator_image(&col));
        }
    }
    // plain = i^δ · (input letters); the image inherits the i^{p−δ} offset.
    let delta = plain.phase_exponent;
    debug_assert_eq!(plain.letters, w.letters);
    image.phase_exponent = (image.phase_exponent + w.phase_exponent + 4 - delta) & 3;
    image
}

/// A translation-invariant product state given by one Bloch vector.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct ProductState {
    pub x: f64,
    pub y: f64,
    pub z: f64,
}

impl ProductState {
    pub fn new(x: f64, y: f64, z: f64) -> Result<Self, PauliError> {
        if x * x + y * y + z * z > 1.0 + 1e-12 {
            return Err(PauliError::BlochNorm);
        }
        Ok(ProductState { x, y, z })
    }

    pub fn all_spins_up() -> Self {
        ProductState { x: 0.0, y: 0.0, z: 1.0 }
    }
}

/// ω(w) = i^phase · Π over occupied sites of the Bloch component.
pub fn expectation(s: &ProductState, w: &PauliWord) -> Complex64 {
    let phase = match w.phase_exponent {
        0 => Complex64::new(1.0, 0.0),
        1 => Complex64::new(0.0, 1.0),
        2 => Complex64::new(-1.0, 0.0),
        _ => Complex64::new(0.0, -1.0),
    };
    let mut prod = 1.0;
    for &l in w.letters.values() {
        prod *= match l {
            Letter::X => s.x,
            Letter::Y => s.y,
            Letter::Z => s.z,
        };
    }
    phase * prod
}

/// [ω(aᵗ w)] for t = 0..T via incremental application.
pub fn expectation_timeseries(
    a: &CscaMatrix,
    s: &ProductState,
    w: &PauliWord,
    steps: u64,
) -> Vec<Complex64> {
    let mut out = Vec::with_capacity(steps as usize + 1);
    let mut cur = w.clone();
    out.push(expectation(s, &cur));
    for _ in 0..steps {
        cur = apply_cqca(a, &cur);
        out.push(expectation(s, &cur));
    }
    out
}
