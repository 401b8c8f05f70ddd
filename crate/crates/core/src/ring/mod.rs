//! Exact coefficient arithmetic: rationals, sparse Laurent polynomials and
//! fractions localized at discriminant-type atoms.
//!
//! All values are immutable after construction and all operations are pure.

mod fraction;
mod poly;

pub use fraction::{AtomKind, DenAtom, LocalizedFraction};
pub use poly::{Expo, LaurentPoly};

use crate::error::Error;

/// Exact rational scalar. Always stored reduced with a positive denominator.
pub type Rational = num::BigRational;

pub fn rat(n: i64, d: i64) -> Rational {
    Rational::new(n.into(), d.into())
}

pub fn rat_int(n: i64) -> Rational {
    Rational::from_integer(n.into())
}

/// The ordered variable universe of one context: an optional invertible `q`
/// followed by `n` indexed variables (`y[1]..y[n]` or `u[1]..u[n]`).
///
/// Indexed variables are invertible exactly in Laurent contexts; `q` is
/// always invertible.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct VarTable {
    pub has_q: bool,
    pub letter: u8,
    pub n: usize,
    pub laurent: bool,
}

impl VarTable {
    pub fn scalar(has_q: bool) -> Self {
        VarTable { has_q, letter: b'y', n: 0, laurent: false }
    }

    pub fn indexed(letter: u8, n: usize, laurent: bool, has_q: bool) -> Self {
        VarTable { has_q, letter, n, laurent }
    }

    /// Number of exponent slots.
    pub fn width(&self) -> usize {
        self.n + usize::from(self.has_q)
    }

    /// Slot of the indexed variable `i` (1-based).
    pub fn var_slot(&self, i: usize) -> Result<usize, Error> {
        if i == 0 || i > self.n {
            return Err(Error::IndexOutOfRange { index: i, limit: self.n });
        }
        Ok(i - 1 + usize::from(self.has_q))
    }

    pub fn q_slot(&self) -> Option<usize> {
        self.has_q.then_some(0)
    }

    pub fn slot_invertible(&self, slot: usize) -> bool {
        if self.has_q && slot == 0 {
            true
        } else {
            self.laurent
        }
    }

    pub fn slot_name(&self, slot: usize) -> String {
        if self.has_q && slot == 0 {
            "q".to_string()
        } else {
            let i = slot + 1 - usize::from(self.has_q);
            format!("{}[{}]", self.letter as char, i)
        }
    }
}
