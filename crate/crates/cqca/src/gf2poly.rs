//! Exact arithmetic in the ring of Laurent polynomials over GF(2).
//!
//! A Laurent polynomial is stored as a bit-packed coefficient mask together
//! with the exponent of its lowest term. All arithmetic is carried out
//! modulo two, so addition is XOR and multiplication is carry-less
//! convolution. The zero polynomial is the empty mask.

use std::fmt;
use std::str::FromStr;

use thiserror::Error;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PolyError {
    #[error("gcd undefined for two zero polynomials")]
    GcdUndefined,
    #[error("not divisible")]
    NotDivisible,
    #[error("division by the zero polynomial")]
    DivisionByZero,
    #[error("zero polynomial has no degree")]
    ZeroPolynomial,
    #[error("parse error at position {pos}: {msg}")]
    Parse { pos: usize, msg: String },
}

/// A Laurent polynomial over GF(2).
///
/// Normalized so that bit 0 and bit `nbits - 1` of the packed coefficient
/// words are set, or the polynomial is the canonical zero (no words).
/// Bit `i` of the mask is the coefficient of `u^(min_deg + i)`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct LaurentPoly {
    words: Vec<u64>,
    nbits: usize,
    min_deg: i64,
}

const WORD: usize = 64;

fn get_bit(words: &[u64], i: usize) -> bool {
    words[i / WORD] >> (i % WORD) & 1 == 1
}

fn set_bit(words: &mut [u64], i: usize) {
    words[i / WORD] ^= 1 << (i % WORD);
}

fn highest_bit(words: &[u64]) -> Option<usize> {
    for (w, &word) in words.iter().enumerate().rev() {
        if word != 0 {
            return Some(w * WORD + (WORD - 1 - word.leading_zeros() as usize));
        }
    }
    None
}

fn lowest_bit(words: &[u64]) -> Option<usize> {
    for (w, &word) in words.iter().enumerate() {
        if word != 0 {
            return Some(w * WORD + word.trailing_zeros() as usize);
        }
    }
    None
}

/// XOR `src` (of `src_bits` significant bits) into `dst` at bit offset `shift`.
fn xor_shifted(dst: &mut [u64], src: &[u64], src_bits: usize, shift: usize) {
    let word_shift = shift / WORD;
    let bit_shift = shift % WORD;
    let src_words = src_bits.div_ceil(WORD);
    for i in 0..src_words {
        let w = src[i];
        dst[word_shift + i] ^= w << bit_shift;
        if bit_shift != 0 {
            dst[word_shift + i + 1] ^= w >> (WORD - bit_shift);
        }
    }
}

impl LaurentPoly {
    pub fn zero() -> Self {
        LaurentPoly { words: Vec::new(), nbits: 0, min_deg: 0 }
    }

    pub fn one() -> Self {
        Self::monomial(0)
    }

    /// The monomial `u^k`.
    pub fn monomial(k: i64) -> Self {
        LaurentPoly { words: vec![1], nbits: 1, min_deg: k }
    }

    /// Build from a list of exponents; repeated exponents cancel (mod 2).
    pub fn from_exponents(exps: &[i64]) -> Self {
        if exps.is_empty() {
            return Self::zero();
        }
        let lo = *exps.iter().min().unwrap();
        let hi = *exps.iter().max().unwrap();
        let span = (hi - lo) as usize + 1;
        let mut words = vec![0u64; span.div_ceil(WORD)];
        for &e in exps {
            set_bit(&mut words, (e - lo) as usize);
        }
        Self::from_raw(words, lo)
    }

    fn from_raw(words: Vec<u64>, min_deg: i64) -> Self {
        let mut p = LaurentPoly { words, nbits: 0, min_deg };
        p.normalize();
        p
    }

    fn normalize(&mut self) {
        match (lowest_bit(&self.words), highest_bit(&self.words)) {
            (Some(lo), Some(hi)) => {
                if lo > 0 {
                    // shift right by lo bits
                    let span = hi - lo + 1;
                    let mut out = vec![0u64; span.div_ceil(WORD)];
                    for i in 0..span {
                        if get_bit(&self.words, lo + i) {
                            set_bit(&mut out, i);
                        }
                    }
                    self.words = out;
                    self.min_deg += lo as i64;
                    self.nbits = span;
                } else {
                    self.words.truncate((hi + 1).div_ceil(WORD));
                    self.nbits = hi + 1;
                }
            }
            _ => {
                self.words.clear();
                self.nbits = 0;
                self.min_deg = 0;
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.nbits == 0
    }

    pub fn is_one(&self) -> bool {
        self.nbits == 1 && self.min_deg == 0
    }

    pub fn is_monomial(&self) -> bool {
        self.nbits == 1
    }

    pub fn min_deg(&self) -> Result<i64, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.min_deg)
    }

    pub fn max_deg(&self) -> Result<i64, PolyError> {
        if self.is_zero() {
            return Err(PolyError::ZeroPolynomial);
        }
        Ok(self.min_deg + self.nbits as i64 - 1)
    }

    /// `max_deg - min_deg`; zero polynomial reports span 0 by convention.
    pub fn degree_span(&self) -> i64 {
        if self.is_zero() {
            0
        } else {
            self.nbits as i64 - 1
        }
    }

    /// Coefficient of `u^k`.
    pub fn coeff(&self, k: i64) -> bool {
        if self.is_zero() || k < self.min_deg || k >= self.min_deg + self.nbits as i64 {
            return false;
        }
        get_bit(&self.words, (k - self.min_deg) as usize)
    }

    /// Exponents with nonzero coefficient, ascending.
    pub fn exponents(&self) -> Vec<i64> {
        (0..self.nbits)
            .filter(|&i| get_bit(&self.words, i))
            .map(|i| self.min_deg + i as i64)
            .collect()
    }

    /// Parity of the coefficientwise overlap Σ_k self(k)·other(k). This is
    /// the GF(2) scalar product used for Weyl commutation phases.
    pub fn mul_overlap_parity(&self, other: &LaurentPoly) -> bool {
        self.exponents()
            .into_iter()
            .filter(|&k| other.coeff(k))
            .count()
            & 1
            == 1
    }

    /// Number of nonzero coefficients.
    pub fn weight(&self) -> usize {
        self.words.iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() {
            return other.clone();
        }
        if other.is_zero() {
            return self.clone();
        }
        let lo = self.min_deg.min(other.min_deg);
        let hi = (self.min_deg + self.nbits as i64).max(other.min_deg + other.nbits as i64);
        let span = (hi - lo) as usize;
        let mut words = vec![0u64; span.div_ceil(WORD) + 1];
        xor_shifted(&mut words, &self.words, self.nbits, (self.min_deg - lo) as usize);
        xor_shifted(&mut words, &other.words, other.nbits, (other.min_deg - lo) as usize);
        Self::from_raw(words, lo)
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let span = self.nbits + other.nbits - 1;
        let mut words = vec![0u64; span.div_ceil(WORD) + 1];
        for i in 0..self.nbits {
            if get_bit(&self.words, i) {
                xor_shifted(&mut words, &other.words, other.nbits, i);
            }
        }
        Self::from_raw(words, self.min_deg + other.min_deg)
    }

    /// Multiply by `u^k`.
    pub fn shift(&self, k: i64) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut p = self.clone();
        p.min_deg += k;
        p
    }

    /// Substitute `u -> u^-1`: reverse the coefficient mask.
    pub fn involution(&self) -> LaurentPoly {
        if self.is_zero() {
            return Self::zero();
        }
        let mut words = vec![0u64; self.nbits.div_ceil(WORD)];
        for i in 0..self.nbits {
            if get_bit(&self.words, i) {
                set_bit(&mut words, self.nbits - 1 - i);
            }
        }
        Self::from_raw(words, -(self.min_deg + self.nbits as i64 - 1))
    }

    /// True iff the polynomial equals its involution (reflection about u^0).
    pub fn is_centered_palindrome(&self) -> bool {
        *self == self.involution()
    }

    /// Quotient and remainder of the underlying GF(2)[x] division, ignoring
    /// monomial units: `self = q * other + r` with `deg r < deg other`,
    /// quotient exponent offset restored afterwards.
    fn divrem(&self, other: &LaurentPoly) -> Result<(LaurentPoly, LaurentPoly), PolyError> {
        if other.is_zero() {
            return Err(PolyError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok((Self::zero(), Self::zero()));
        }
        if self.nbits < other.nbits {
            return Ok((Self::zero(), self.clone()));
        }
        let qspan = self.nbits - other.nbits + 1;
        let mut q = vec![0u64; qspan.div_ceil(WORD)];
        let mut r = self.words.clone();
        r.resize(self.nbits.div_ceil(WORD) + 1, 0);
        let mut r_hi = highest_bit(&r);
        while let Some(hi) = r_hi {
            if hi + 1 < other.nbits {
                break;
            }
            let shift = hi + 1 - other.nbits;
            set_bit(&mut q, shift);
            xor_shifted(&mut r, &other.words, other.nbits, shift);
            r_hi = highest_bit(&r);
        }
        let quot = Self::from_raw(q, self.min_deg - other.min_deg);
        let rem = Self::from_raw(r, self.min_deg);
        Ok((quot, rem))
    }

    /// Exact division; errors if `other` does not divide `self`.
    pub fn div_exact(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        let (q, r) = self.divrem(other)?;
        if !r.is_zero() {
            return Err(PolyError::NotDivisible);
        }
        Ok(q)
    }

    pub fn divides(&self, other: &LaurentPoly) -> bool {
        other.div_exact(self).is_ok()
    }

    /// Canonical greatest common divisor, normalized so `min_deg = 0`.
    /// The gcd is defined up to monomial units; this fixes the representative.
    pub fn gcd(&self, other: &LaurentPoly) -> Result<LaurentPoly, PolyError> {
        if self.is_zero() && other.is_zero() {
            return Err(PolyError::GcdUndefined);
        }
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b)?;
            a = b;
            b = r;
        }
        a.min_deg = 0;
        Ok(a)
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let terms: Vec<String> = self
            .exponents()
            .iter()
            .map(|&e| match e {
                0 => "1".to_string(),
                1 => "u".to_string(),
                _ => format!("u^{}", e),
            })
            .collect();
        write!(f, "{}", terms.join("+"))
    }
}

impl fmt::Debug for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl FromStr for LaurentPoly {
    type Err = PolyError;

    /// Parses the sum-of-monomials form, e.g. `u^-1+1+u`, or `0`.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let s = s.trim();
        if s == "0" {
            return Ok(Self::zero());
        }
        let mut exps = Vec::new();
        let mut pos = 0usize;
        for term in s.split('+') {
            let t = term.trim();
            let exp = if t == "1" {
                0
            } else if t == "u" {
                1
            } else if let Some(rest) = t.strip_prefix("u^") {
                rest.parse::<i64>().map_err(|e| PolyError::Parse {
                    pos,
                    msg: format!("bad exponent {:?}: {}", rest, e),
                })?
            } else {
                return Err(PolyError::Parse {
                    pos,
                    msg: format!("unrecognized term {:?}", t),
                });
            };
            if exps.contains(&exp) {
                return Err(PolyError::Parse {
                    pos,
                    msg: format!("repeated exponent {}", exp),
                });
            }
            exps.push(exp);
            pos += term.len() + 1;
        }
        Ok(Self::from_exponents(&exps))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(s: &str) -> LaurentPoly {
        s.parse().unwrap()
    }

    #[test]
    fn add_cancels_in_characteristic_two() {
        let a = p("u^-1+u");
        assert!(a.add(&a).is_zero());
        assert_eq!(p("1").add(&p("u")), p("1+u"));
        assert_eq!(p("u^-1+1+u").add(&p("u^-1+u")), p("1"));
    }

    #[test]
    fn mul_is_convolution() {
        assert_eq!(p("u^-1+u").mul(&p("u")), p("1+u^2"));
        assert_eq!(p("1+u").mul(&p("1+u")), p("1+u^2"));
        assert_eq!(p("u^-1+1+u").mul(&p("u^-1+1+u")), p("u^-2+1+u^2"));
        assert!(p("1+u").mul(&LaurentPoly::zero()).is_zero());
    }

    #[test]
    fn gcd_examples() {
        assert_eq!(p("u^-1+u").gcd(&p("1")).unwrap(), p("1"));
        assert_eq!(p("1+u^2").gcd(&p("1+u")).unwrap(), p("1+u"));
        // wedge of the speed-3 counterexample divides u^-3+u^3
        assert_eq!(
            p("u^-2+u^-1+u+u^2").gcd(&p("u^-3+u^3")).unwrap(),
            p("1+u+u^3+u^4")
        );
        assert_eq!(
            LaurentPoly::zero().gcd(&LaurentPoly::zero()),
            Err(PolyError::GcdUndefined)
        );
    }

    #[test]
    fn div_exact_examples() {
        assert_eq!(p("1+u^2").div_exact(&p("1+u")).unwrap(), p("1+u"));
        assert!(LaurentPoly::zero().div_exact(&p("1+u")).unwrap().is_zero());
        assert_eq!(
            p("u^-3+u^3").div_exact(&p("u^-2+u^-1+u+u^2")).unwrap(),
            p("u^-1+1+u")
        );
        assert_eq!(
            p("1+u+u^2").div_exact(&p("1+u")),
            Err(PolyError::NotDivisible)
        );
    }

    #[test]
    fn involution_examples() {
        assert_eq!(p("u").involution(), p("u^-1"));
        assert_eq!(p("u^-1+1+u").involution(), p("u^-1+1+u"));
        assert_eq!(p("1+u^2").involution(), p("u^-2+1"));
    }

    #[test]
    fn degree_queries() {
        assert!(p("u^-1+u").is_centered_palindrome());
        assert!(!p("1+u").is_centered_palindrome());
        assert!(p("u^3").is_monomial());
        assert_eq!(p("u^-2+u^2").degree_span(), 4);
        assert_eq!(LaurentPoly::zero().max_deg(), Err(PolyError::ZeroPolynomial));
    }

    #[test]
    fn display_round_trip() {
        for s in ["0", "1", "u", "u^-1+1+u", "u^-3+u^3", "u^2+u^5"] {
            assert_eq!(p(s).to_string(), s);
        }
    }

    #[test]
    fn wide_polynomials_cross_word_boundaries() {
        let a = LaurentPoly::from_exponents(&[-70, 0, 70]);
        let sq = a.mul(&a);
        assert_eq!(sq, LaurentPoly::from_exponents(&[-140, 0, 140]));
        assert_eq!(sq.div_exact(&a).unwrap(), a);
        assert!(a.is_centered_palindrome());
    }
}
