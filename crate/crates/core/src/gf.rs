//! Arithmetic over F_q (q prime, 2 <= q <= 7) on packed digit vectors.
//!
//! Vectors store one digit per 4-bit lane, sixteen digits per `u64` word.
//! The wide lane leaves headroom so that addition and the small scalings
//! needed for q = 5 stay lane-local (no carries between digits), which
//! keeps `weight` and `add_scaled` branch-free on whole words. A plain
//! digit-by-digit scalar implementation is kept alongside the packed one
//! as an independent oracle for tests.

use crate::error::{Error, Result};
use std::fmt;

/// Maximum supported vector length (digits).
pub const MAX_LEN: usize = 64;

const DIGITS_PER_WORD: usize = 16;
const WORDS: usize = MAX_LEN / DIGITS_PER_WORD;

const LANE_LO: u64 = 0x1111_1111_1111_1111;
const LANE_3: u64 = 0x3333_3333_3333_3333;
const LANE_5: u64 = 0x5555_5555_5555_5555;
const LANE_8: u64 = 0x8888_8888_8888_8888;
const LANE_10: u64 = 0xAAAA_AAAA_AAAA_AAAA;

/// A prime field F_q with 2 <= q <= 7.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FieldSpec {
    q: u8,
}

impl FieldSpec {
    pub fn new(q: u8) -> Result<Self> {
        match q {
            2 | 3 | 5 | 7 => Ok(FieldSpec { q }),
            _ => Err(Error::BadField(q)),
        }
    }

    #[inline]
    pub fn q(&self) -> u8 {
        self.q
    }

    #[inline]
    pub fn add(&self, a: u8, b: u8) -> u8 {
        let s = a + b;
        if s >= self.q {
            s - self.q
        } else {
            s
        }
    }

    #[inline]
    pub fn sub(&self, a: u8, b: u8) -> u8 {
        if a >= b {
            a - b
        } else {
            a + self.q - b
        }
    }

    #[inline]
    pub fn neg(&self, a: u8) -> u8 {
        if a == 0 {
            0
        } else {
            self.q - a
        }
    }

    #[inline]
    pub fn mul(&self, a: u8, b: u8) -> u8 {
        (a as u16 * b as u16 % self.q as u16) as u8
    }

    /// Multiplicative inverse of a nonzero digit.
    pub fn inv(&self, a: u8) -> u8 {
        debug_assert!(a != 0 && a < self.q);
        (1..self.q).find(|&x| self.mul(a, x) == 1).unwrap()
    }

    /// All nonzero digits, ascending.
    pub fn nonzero(&self) -> impl Iterator<Item = u8> {
        1..self.q
    }
}

/// A packed vector of residues mod q.
///
/// `Copy` by design: at pipeline scale (n <= 26) a vector is two words, and
/// the enumeration inner loops must not allocate.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct GFVec {
    field: FieldSpec,
    len: u16,
    words: [u64; WORDS],
}

impl GFVec {
    pub fn zero(field: FieldSpec, len: usize) -> Result<Self> {
        if len > MAX_LEN {
            return Err(Error::LengthLimit(len));
        }
        Ok(GFVec {
            field,
            len: len as u16,
            words: [0; WORDS],
        })
    }

    pub fn from_digits(field: FieldSpec, digits: &[u8]) -> Result<Self> {
        let mut v = Self::zero(field, digits.len())?;
        for (i, &d) in digits.iter().enumerate() {
            if d >= field.q() {
                return Err(Error::BadInput(format!(
                    "digit {d} out of range for F_{}",
                    field.q()
                )));
            }
            v.set_digit(i, d);
        }
        Ok(v)
    }

    /// Parses the digit-string form: `len` ASCII digits, coordinate 1 leftmost.
    pub fn parse(field: FieldSpec, s: &str) -> Result<Self> {
        let mut digits = Vec::with_capacity(s.len());
        for c in s.chars() {
            let d = c
                .to_digit(10)
                .ok_or_else(|| Error::BadInput(format!("bad digit character {c:?}")))?;
            digits.push(d as u8);
        }
        Self::from_digits(field, &digits)
    }

    #[inline]
    pub fn field(&self) -> FieldSpec {
        self.field
    }

    #[inline]
    pub fn len(&self) -> usize {
        self.len as usize
    }

    #[inline]
    pub fn is_empty(&self) -> bool {
        self.len == 0
    }

    #[inline]
    pub fn digit(&self, i: usize) -> u8 {
        debug_assert!(i < self.len());
        ((self.words[i / DIGITS_PER_WORD] >> ((i % DIGITS_PER_WORD) * 4)) & 0xF) as u8
    }

    #[inline]
    pub fn set_digit(&mut self, i: usize, d: u8) {
        debug_assert!(i < self.len());
        debug_assert!(d < self.field.q());
        let w = &mut self.words[i / DIGITS_PER_WORD];
        let shift = (i % DIGITS_PER_WORD) * 4;
        *w = (*w & !(0xF << shift)) | ((d as u64) << shift);
    }

    pub fn digits(&self) -> impl Iterator<Item = u8> + '_ {
        (0..self.len()).map(move |i| self.digit(i))
    }

    #[inline]
    fn used_words(&self) -> usize {
        (self.len() + DIGITS_PER_WORD - 1) / DIGITS_PER_WORD
    }

    /// Number of nonzero coordinates (packed path).
    #[inline]
    pub fn weight(&self) -> u32 {
        let mut total = 0u32;
        for w in &self.words[..self.used_words()] {
            let t = w | (w >> 1) | (w >> 2) | (w >> 3);
            total += (t & LANE_LO).count_ones();
        }
        total
    }

    /// Digit-by-digit weight, the independent oracle for [`Self::weight`].
    pub fn weight_scalar(&self) -> u32 {
        self.digits().filter(|&d| d != 0).count() as u32
    }

    fn check_compat(&self, other: &GFVec) -> Result<()> {
        if self.field != other.field {
            return Err(Error::FieldMismatch(self.field.q(), other.field.q()));
        }
        if self.len != other.len {
            return Err(Error::LengthMismatch(self.len(), other.len()));
        }
        Ok(())
    }

    /// `self + lambda * other`, digitwise mod q.
    pub fn add_scaled(&self, other: &GFVec, lambda: u8) -> Result<GFVec> {
        self.check_compat(other)?;
        debug_assert!(lambda < self.field.q());
        if self.field.q() == 5 {
            let mut out = *self;
            for i in 0..self.used_words() {
                out.words[i] = add_scaled_word_q5(self.words[i], other.words[i], lambda);
            }
            Ok(out)
        } else {
            Ok(self.add_scaled_scalar(other, lambda))
        }
    }

    /// Digit-by-digit `self + lambda * other`, the oracle for the packed path
    /// and the generic path for q != 5.
    pub fn add_scaled_scalar(&self, other: &GFVec, lambda: u8) -> GFVec {
        let f = self.field;
        let mut out = *self;
        for i in 0..self.len() {
            out.set_digit(i, f.add(self.digit(i), f.mul(lambda, other.digit(i))));
        }
        out
    }

    /// The q-1 scalar multiples `lambda * self` for lambda = 1..q-1, ascending.
    pub fn scalar_multiples(&self) -> Vec<GFVec> {
        let zero = GFVec::zero(self.field, self.len()).expect("len already validated");
        self.field
            .nonzero()
            .map(|lambda| zero.add_scaled(self, lambda).expect("same shape"))
            .collect()
    }

    /// Lexicographic comparison of digit strings (coordinate 1 first).
    pub fn cmp_digits(&self, other: &GFVec) -> std::cmp::Ordering {
        self.digits().cmp(other.digits())
    }
}

/// Lane-parallel `v + lambda * w` mod 5 on one packed word.
///
/// All intermediates stay below 16 per lane, so nothing crosses a lane
/// boundary: 2w <= 8, 10 - 2w <= 10, 5 - w <= 5, and the final sum of two
/// reduced digits is at most 8.
#[inline]
fn add_scaled_word_q5(v: u64, w: u64, lambda: u8) -> u64 {
    let s = match lambda {
        0 => return v,
        1 => w,
        2 => reduce5(w << 1),
        3 => reduce5(reduce5(LANE_10 - (w << 1))),
        4 => reduce5(LANE_5 - w),
        _ => unreachable!("lambda must be a residue mod 5"),
    };
    reduce5(v + s)
}

/// Subtracts 5 from every 4-bit lane whose value is >= 5 (values must be <= 12).
#[inline]
fn reduce5(s: u64) -> u64 {
    let m = ((s + LANE_3) & LANE_8) >> 3;
    s - ((m << 2) + m)
}

impl fmt::Display for GFVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for d in self.digits() {
            write!(f, "{d}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for GFVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GFVec(F{}, \"{}\")", self.field.q(), self)
    }
}
