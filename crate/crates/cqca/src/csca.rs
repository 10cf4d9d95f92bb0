//! Centered symplectic cellular automata as 2×2 matrices of Laurent
//! polynomials over GF(2): validation, algebra, trace classification,
//! glider extraction and construction, equivalence transports, and the
//! invariance family of period-two automata fixing a stabilizer state.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gf2poly::{LaurentPoly, PolyError};
use crate::symplectic::PhaseVector;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CscaError {
    #[error("automaton has no gliders")]
    NoGliders,
    #[error("not a valid glider for speed {0}: wedge does not divide u^-n+u^n")]
    InvalidGliderSpeed(u32),
    #[error("glider vector is not minimal")]
    NotMinimal,
    #[error("wedge product is zero")]
    ZeroWedge,
    #[error("not a speed-1 glider: wedge must equal u^-1+u")]
    NotSpeedOne,
    #[error("no transport matrix exists: {0}")]
    NoTransport(String),
    #[error("shear parameter must be a centered palindrome")]
    NonPalindromeShear,
    #[error("unknown automaton name {0:?}")]
    UnknownName(String),
    #[error("invalid matrix: {0:?}")]
    Invalid(Vec<Violation>),
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A violated CSCA invariant, reported as data by `validate`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    DeterminantNotOne,
    EntryNotPalindrome { row: usize, col: usize },
    ColumnNotCoprime { col: usize },
}

impl fmt::Display for Violation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Violation::DeterminantNotOne => write!(f, "determinant is not 1"),
            Violation::EntryNotPalindrome { row, col } => {
                write!(f, "entry ({},{}) is not a centered palindrome", row, col)
            }
            Violation::ColumnNotCoprime { col } => {
                write!(f, "column {} entries are not coprime", col)
            }
        }
    }
}

/// Trace classification of a CSCA.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Classification {
    /// Constant trace c gives period c + 2.
    Periodic { period: u32 },
    /// Trace u^-n + u^n gives gliders of speed n.
    Glider { speed: u32 },
    /// Any other (symmetric) trace: fractal self-similar evolution.
    Fractal,
}

impl fmt::Display for Classification {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Classification::Periodic { period } => write!(f, "periodic period={}", period),
            Classification::Glider { speed } => write!(f, "glider n={}", speed),
            Classification::Fractal => write!(f, "fractal"),
        }
    }
}

/// A 2×2 matrix over the Laurent ring, row-major.
#[derive(Clone, PartialEq, Eq)]
pub struct CscaMatrix {
    pub a11: LaurentPoly,
    pub a12: LaurentPoly,
    pub a21: LaurentPoly,
    pub a22: LaurentPoly,
}

impl CscaMatrix {
    pub fn new(a11: LaurentPoly, a12: LaurentPoly, a21: LaurentPoly, a22: LaurentPoly) -> Self {
        CscaMatrix { a11, a12, a21, a22 }
    }

    pub fn identity() -> Self {
        CscaMatrix::new(
            LaurentPoly::one(),
            LaurentPoly::zero(),
            LaurentPoly::zero(),
            LaurentPoly::one(),
        )
    }

    pub fn is_identity(&self) -> bool {
        self.a11.is_one() && self.a12.is_zero() && self.a21.is_zero() && self.a22.is_one()
    }

    pub fn det(&self) -> LaurentPoly {
        self.a11.mul(&self.a22).add(&self.a12.mul(&self.a21))
    }

    pub fn trace(&self) -> LaurentPoly {
        self.a11.add(&self.a22)
    }

    /// Checks the centered-CSCA invariants; an empty list means valid.
    pub fn validate(&self) -> Vec<Violation> {
        let mut violations = Vec::new();
        if !self.det().is_one() {
            violations.push(Violation::DeterminantNotOne);
        }
        for (row, col, e) in [
            (1, 1, &self.a11),
            (1, 2, &self.a12),
            (2, 1, &self.a21),
            (2, 2, &self.a22),
        ] {
            if !e.is_centered_palindrome() {
                violations.push(Violation::EntryNotPalindrome { row, col });
            }
        }
        for (col, a, b) in [(1, &self.a11, &self.a21), (2, &self.a12, &self.a22)] {
            match a.gcd(b) {
                Ok(g) if g.is_monomial() => {}
                _ => violations.push(Violation::ColumnNotCoprime { col }),
            }
        }
        violations
    }

    pub fn checked(self) -> Result<Self, CscaError> {
        let v = self.validate();
        if v.is_empty() {
            Ok(self)
        } else {
            Err(CscaError::Invalid(v))
        }
    }

    pub fn mul(&self, other: &CscaMatrix) -> CscaMatrix {
        CscaMatrix {
            a11: self.a11.mul(&other.a11).add(&self.a12.mul(&other.a21)),
            a12: self.a11.mul(&other.a12).add(&self.a12.mul(&other.a22)),
            a21: self.a21.mul(&other.a11).add(&self.a22.mul(&other.a21)),
            a22: self.a21.mul(&other.a12).add(&self.a22.mul(&other.a22)),
        }
    }

    /// Repeated squaring.
    pub fn pow(&self, t: u64) -> CscaMatrix {
        let mut result = CscaMatrix::identity();
        let mut base = self.clone();
        let mut t = t;
        while t > 0 {
            if t & 1 == 1 {
                result = result.mul(&base);
            }
            base = base.mul(&base);
            t >>= 1;
        }
        result
    }

    /// Inverse of a determinant-one matrix: the adjugate (signs vanish mod 2).
    pub fn inverse(&self) -> CscaMatrix {
        CscaMatrix {
            a11: self.a22.clone(),
            a12: self.a12.clone(),
            a21: self.a21.clone(),
            a22: self.a11.clone(),
        }
    }

    pub fn apply(&self, xi: &PhaseVector) -> PhaseVector {
        PhaseVector {
            plus: self.a11.mul(&xi.plus).add(&self.a12.mul(&xi.minus)),
            minus: self.a21.mul(&xi.plus).add(&self.a22.mul(&xi.minus)),
        }
    }

    /// Trace classification: constant trace is periodic, two-term symmetric
    /// trace u^-n+u^n has gliders, anything else is fractal.
    pub fn classify(&self) -> Classification {
        let tr = self.trace();
        if tr.is_zero() {
            return Classification::Periodic { period: 2 };
        }
        if tr.is_one() {
            return Classification::Periodic { period: 3 };
        }
        if tr.weight() == 2 && tr.is_centered_palindrome() {
            let n = tr.max_deg().expect("nonzero");
            if n >= 1 {
                return Classification::Glider { speed: n as u32 };
            }
        }
        Classification::Fractal
    }

    /// The minimal glider ξ with `apply(self, ξ) = u^n ξ`, together with the
    /// speed n. The vector is obtained by cancelling the common divisor out
    /// of the particular solution (a12, u^n + a11); when the first column is
    /// degenerate the symmetric second-column variant is used.
    pub fn minimal_glider(&self) -> Result<(PhaseVector, u32), CscaError> {
        let n = match self.classify() {
            Classification::Glider { speed } => speed,
            _ => return Err(CscaError::NoGliders),
        };
        let un = LaurentPoly::monomial(n as i64);
        let (num_plus, num_minus) = if !self.a12.is_zero() {
            (self.a12.clone(), un.add(&self.a11))
        } else {
            (un.add(&self.a22), self.a21.clone())
        };
        let g = num_plus.gcd(&num_minus)?;
        let xi = PhaseVector::new(num_plus.div_exact(&g)?, num_minus.div_exact(&g)?);
        debug_assert!(self.apply(&xi) == xi.translate(n as i64));
        Ok((xi, n))
    }
}

impl fmt::Display for CscaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "[[{}; {}]; [{}; {}]]",
            self.a11, self.a12, self.a21, self.a22
        )
    }
}

impl fmt::Debug for CscaMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for CscaMatrix {
    type Err = CscaError;

    /// Parses `[[p11; p12]; [p21; p22]]` with the polynomial syntax.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix("[[")
            .and_then(|x| x.strip_suffix("]]"))
            .ok_or_else(|| CscaError::Parse(format!("expected [[..]; [..]], got {:?}", s)))?;
        let rows: Vec<&str> = inner.split("]; [").collect();
        if rows.len() != 2 {
            return Err(CscaError::Parse("expected two rows".into()));
        }
        let mut entries = Vec::with_capacity(4);
        for row in rows {
            let cols: Vec<&str> = row.split(';').collect();
            if cols.len() != 2 {
                return Err(CscaError::Parse("expected two entries per row".into()));
            }
            for c in cols {
                entries.push(
                    c.trim()
                        .parse::<LaurentPoly>()
                        .map_err(|e| CscaError::Parse(e.to_string()))?,
                );
            }
        }
        let mut it = entries.into_iter();
        Ok(CscaMatrix::new(
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
            it.next().unwrap(),
        ))
    }
}

/// The standard glider automaton (maps X to Z, Z to ZXZ).
pub fn standard_glider() -> CscaMatrix {
    "[[0; 1]; [1; u^-1+u]]".parse().unwrap()
}

/// The glider automaton used for the fermionic construction.
pub fn glider_g() -> CscaMatrix {
    "[[1; u^-1+u]; [1; u^-1+1+u]]".parse().unwrap()
}

/// The reference fractal automaton.
pub fn fractal_f() -> CscaMatrix {
    "[[u^-1+1+u; 1]; [1; 0]]".parse().unwrap()
}

/// Local generator H.
pub fn gen_h() -> CscaMatrix {
    "[[1; 0]; [1; 1]]".parse().unwrap()
}

/// Local generator P (swap of X and Z).
pub fn gen_p() -> CscaMatrix {
    "[[0; 1]; [1; 0]]".parse().unwrap()
}

/// Shear transformation [[1, 0], [a, 1]] for a centered palindrome a.
/// Shears are exactly the automata leaving the all-spins-up state invariant.
pub fn shear(a: &LaurentPoly) -> Result<CscaMatrix, CscaError> {
    if !a.is_centered_palindrome() {
        return Err(CscaError::NonPalindromeShear);
    }
    Ok(CscaMatrix::new(
        LaurentPoly::one(),
        LaurentPoly::zero(),
        a.clone(),
        LaurentPoly::one(),
    ))
}

/// G_n = shear(u^-n + u^n).
pub fn gen_g_n(n: u32) -> CscaMatrix {
    shear(&LaurentPoly::from_exponents(&[-(n as i64), n as i64])).unwrap()
}

/// Look up a named automaton: `Gs`, `G`, `F`, `H`, `P`, or `Gn:<n>`.
pub fn by_name(name: &str) -> Result<CscaMatrix, CscaError> {
    match name {
        "Gs" => Ok(standard_glider()),
        "G" => Ok(glider_g()),
        "F" => Ok(fractal_f()),
        "H" => Ok(gen_h()),
        "P" => Ok(gen_p()),
        _ => {
            if let Some(n) = name.strip_prefix("Gn:") {
                let n: u32 = n
                    .parse()
                    .map_err(|_| CscaError::UnknownName(name.to_string()))?;
                return Ok(gen_g_n(n));
            }
            Err(CscaError::UnknownName(name.to_string()))
        }
    }
}

/// Builds the unique CSCA with glider ξ at speed n. Requires ξ minimal and
/// ξ∧ξ̄ a nonzero divisor of u^-n + u^n.
pub fn csca_from_glider(xi: &PhaseVector, n: u32) -> Result<CscaMatrix, CscaError> {
    if !xi.is_minimal().map_err(|_| CscaError::NotMinimal)? {
        return Err(CscaError::NotMinimal);
    }
    let bar = xi.bar();
    let w = xi.wedge(&bar);
    if w.is_zero() {
        return Err(CscaError::ZeroWedge);
    }
    let un = LaurentPoly::monomial(n as i64);
    let un_bar = LaurentPoly::monomial(-(n as i64));
    let two_term = un.add(&un_bar);
    if !w.divides(&two_term) {
        return Err(CscaError::InvalidGliderSpeed(n));
    }
    let a11 = un
        .mul(&xi.plus)
        .mul(&bar.minus)
        .add(&un_bar.mul(&bar.plus).mul(&xi.minus))
        .div_exact(&w)?;
    let a12 = two_term.mul(&xi.plus).mul(&bar.plus).div_exact(&w)?;
    let a21 = two_term.mul(&xi.minus).mul(&bar.minus).div_exact(&w)?;
    let a22 = un_bar
        .mul(&xi.plus)
        .mul(&bar.minus)
        .add(&un.mul(&bar.plus).mul(&xi.minus))
        .div_exact(&w)?;
    CscaMatrix::new(a11, a12, a21, a22).checked()
}

/// Attempts to build a CSCA b with `b ξ = η` and `b ξ̄ = η̄`. Existence
/// requires all four entry divisions by ξ∧ξ̄ to be exact; the matrix is
/// additionally validated. Failure proves the two glider vectors are not
/// connected by any CSCA.
pub fn transport_matrix(xi: &PhaseVector, eta: &PhaseVector) -> Result<CscaMatrix, CscaError> {
    let bar_xi = xi.bar();
    let bar_eta = eta.bar();
    let w = xi.wedge(&bar_xi);
    if w.is_zero() {
        return Err(CscaError::ZeroWedge);
    }
    let entry = |num: LaurentPoly, name: &str| -> Result<LaurentPoly, CscaError> {
        num.div_exact(&w)
            .map_err(|_| CscaError::NoTransport(format!("entry {} is not divisible", name)))
    };
    let b11 = entry(
        eta.plus
            .mul(&bar_xi.minus)
            .add(&bar_eta.plus.mul(&xi.minus)),
        "b11",
    )?;
    let b12 = entry(
        eta.plus.mul(&bar_xi.plus).add(&bar_eta.plus.mul(&xi.plus)),
        "b12",
    )?;
    let b21 = entry(
        eta.minus
            .mul(&bar_xi.minus)
            .add(&bar_eta.minus.mul(&xi.minus)),
        "b21",
    )?;
    let b22 = entry(
        eta.minus
            .mul(&bar_xi.plus)
            .add(&bar_eta.minus.mul(&xi.plus)),
        "b22",
    )?;
    CscaMatrix::new(b11, b12, b21, b22)
        .checked()
        .map_err(|e| CscaError::NoTransport(e.to_string()))
}

/// CSCA mapping a minimal one-step glider vector to the standard glider
/// vector (1, u). Exists exactly when ξ∧ξ̄ = u^-1 + u.
pub fn conjugator_to_standard(xi: &PhaseVector) -> Result<CscaMatrix, CscaError> {
    if !xi.is_minimal().map_err(|_| CscaError::NotMinimal)? {
        return Err(CscaError::NotMinimal);
    }
    let w = xi.wedge(&xi.bar());
    if w != LaurentPoly::from_exponents(&[-1, 1]) {
        return Err(CscaError::NotSpeedOne);
    }
    transport_matrix(
        xi,
        &PhaseVector::new(LaurentPoly::one(), LaurentPoly::monomial(1)),
    )
}

/// The period-two automaton a_ξ(a) fixing the stabilizer state generated by
/// ξ. Satisfies the group law a_ξ(a)·a_ξ(b) = a_ξ(a+b).
pub fn invariance_family(xi: &PhaseVector, a: &LaurentPoly) -> Result<CscaMatrix, CscaError> {
    if !a.is_centered_palindrome() {
        return Err(CscaError::NonPalindromeShear);
    }
    let diag = LaurentPoly::one().add(&a.mul(&xi.plus).mul(&xi.minus));
    Ok(CscaMatrix::new(
        diag.clone(),
        a.mul(&xi.plus).mul(&xi.plus),
        a.mul(&xi.minus).mul(&xi.minus),
        diag,
    ))
}
