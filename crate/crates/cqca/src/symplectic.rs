//! Phase-space vectors and the polynomial-valued symplectic pairing.
//!
//! A phase-space vector is a pair of GF(2) Laurent polynomials; its plus
//! component collects X-bits and its minus component Z-bits of a
//! translation class of Pauli products. The wedge product is the
//! polynomial-valued symplectic form; the scalar (shift-0) form used for
//! commutation of concrete Pauli words lives in the `pauli` module.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::gf2poly::{LaurentPoly, PolyError};

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PhaseVectorError {
    #[error("the zero vector is not allowed here")]
    ZeroVector,
    #[error(transparent)]
    Poly(#[from] PolyError),
    #[error("parse error: {0}")]
    Parse(String),
}

/// A pair (ξ+, ξ−) of Laurent polynomials over GF(2).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct PhaseVector {
    pub plus: LaurentPoly,
    pub minus: LaurentPoly,
}

impl PhaseVector {
    pub fn new(plus: LaurentPoly, minus: LaurentPoly) -> Self {
        PhaseVector { plus, minus }
    }

    pub fn zero() -> Self {
        PhaseVector { plus: LaurentPoly::zero(), minus: LaurentPoly::zero() }
    }

    pub fn is_zero(&self) -> bool {
        self.plus.is_zero() && self.minus.is_zero()
    }

    pub fn add(&self, other: &PhaseVector) -> PhaseVector {
        PhaseVector {
            plus: self.plus.add(&other.plus),
            minus: self.minus.add(&other.minus),
        }
    }

    /// Wedge product ξ∧η = ξ+η− + η+ξ− (characteristic two).
    pub fn wedge(&self, other: &PhaseVector) -> LaurentPoly {
        self.plus
            .mul(&other.minus)
            .add(&other.plus.mul(&self.minus))
    }

    /// Componentwise involution (spatial reflection).
    pub fn bar(&self) -> PhaseVector {
        PhaseVector {
            plus: self.plus.involution(),
            minus: self.minus.involution(),
        }
    }

    /// Multiply both components by u^k (lattice translation by k).
    pub fn translate(&self, k: i64) -> PhaseVector {
        PhaseVector {
            plus: self.plus.shift(k),
            minus: self.minus.shift(k),
        }
    }

    /// Scale both components by the same polynomial.
    pub fn scale(&self, a: &LaurentPoly) -> PhaseVector {
        PhaseVector {
            plus: self.plus.mul(a),
            minus: self.minus.mul(a),
        }
    }

    /// True iff the two components have no common non-invertible divisor,
    /// with gcd(x, 0) = x.
    pub fn is_minimal(&self) -> Result<bool, PhaseVectorError> {
        if self.is_zero() {
            return Err(PhaseVectorError::ZeroVector);
        }
        Ok(self.plus.gcd(&self.minus)?.is_one())
    }

    /// Equal up to multiplication by a monomial unit.
    pub fn eq_up_to_unit(&self, other: &PhaseVector) -> bool {
        if self.is_zero() || other.is_zero() {
            return self.is_zero() == other.is_zero();
        }
        let shift = match (&self.plus.is_zero(), &other.plus.is_zero()) {
            (false, false) => {
                let (a, b) = (self.plus.min_deg().unwrap(), other.plus.min_deg().unwrap());
                b - a
            }
            (true, true) => {
                let (a, b) = (self.minus.min_deg().unwrap(), other.minus.min_deg().unwrap());
                b - a
            }
            _ => return false,
        };
        self.translate(shift) == *other
    }
}

impl fmt::Display for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({} | {})", self.plus, self.minus)
    }
}

impl fmt::Debug for PhaseVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for PhaseVector {
    type Err = PhaseVectorError;

    /// Parses the `(p | m)` text form using the polynomial syntax.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim();
        let inner = t
            .strip_prefix('(')
            .and_then(|x| x.strip_suffix(')'))
            .ok_or_else(|| PhaseVectorError::Parse(format!("expected (p | m), got {:?}", s)))?;
        let mut parts = inner.splitn(2, '|');
        let plus = parts
            .next()
            .ok_or_else(|| PhaseVectorError::Parse("missing plus component".into()))?;
        let minus = parts
            .next()
            .ok_or_else(|| PhaseVectorError::Parse("missing minus component".into()))?;
        Ok(PhaseVector::new(plus.trim().parse()?, minus.trim().parse()?))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(s: &str) -> PhaseVector {
        s.parse().unwrap()
    }

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn wedge_examples() {
        assert_eq!(v("(1 | u)").wedge(&v("(1 | u^-1)")), p("u^-1+u"));
        let xi = v("(1 | u+u^2)");
        assert!(xi.wedge(&xi).is_zero());
        assert_eq!(xi.wedge(&xi.bar()), p("u^-2+u^-1+u+u^2"));
    }

    #[test]
    fn minimality() {
        assert!(v("(1 | u)").is_minimal().unwrap());
        assert!(!v("(1+u | u+u^2)").is_minimal().unwrap());
        assert!(v("(0 | 1)").is_minimal().unwrap());
        assert_eq!(
            PhaseVector::zero().is_minimal(),
            Err(PhaseVectorError::ZeroVector)
        );
    }

    #[test]
    fn translate_and_bar() {
        assert_eq!(v("(1 | u)").translate(2), v("(u^2 | u^3)"));
        let xi = v("(1+u^2 | u)");
        assert_eq!(xi.bar().bar(), xi);
    }

    #[test]
    fn eq_up_to_unit_detects_translates() {
        assert!(v("(1 | u)").eq_up_to_unit(&v("(u^3 | u^4)")));
        assert!(!v("(1 | u)").eq_up_to_unit(&v("(1 | u^2)")));
        assert!(v("(0 | 1)").eq_up_to_unit(&v("(0 | u^5)")));
    }

    #[test]
    fn display_round_trip() {
        for s in ["(1 | u)", "(u^-1+1+u | u^-1+u)", "(0 | 1)"] {
            assert_eq!(v(s).to_string(), s);
        }
    }
}
