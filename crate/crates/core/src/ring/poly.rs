//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Terms map exponent vectors to nonzero rational coefficients. Negative
//! exponents are only admitted in invertible slots. The monomial order used
//! for printing is graded lexicographic over the table order, leading term
//! first; the stored map order is plain lexicographic, which is all that
//! determinism needs.

use std::collections::BTreeMap;
use std::fmt;

use num::{One, Signed, Zero};
use smallvec::{smallvec, SmallVec};

use super::{Rational, VarTable};
use crate::error::Error;
use crate::perm::Permutation;

pub type Expo = SmallVec<[i16; 8]>;

#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LaurentPoly {
    vt: VarTable,
    terms: BTreeMap<Expo, Rational>,
}

impl LaurentPoly {
    pub fn zero(vt: VarTable) -> Self {
        LaurentPoly { vt, terms: BTreeMap::new() }
    }

    pub fn one(vt: VarTable) -> Self {
        Self::constant(vt, Rational::one())
    }

    pub fn constant(vt: VarTable, c: Rational) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(smallvec![0; vt.width()], c);
        }
        LaurentPoly { vt, terms }
    }

    pub fn from_int(vt: VarTable, c: i64) -> Self {
        Self::constant(vt, super::rat_int(c))
    }

    /// Monomial `c * prod(slot^e)`. Rejects negative exponents in
    /// non-invertible slots.
    pub fn monomial(vt: VarTable, expo: Expo, c: Rational) -> Result<Self, Error> {
        debug_assert_eq!(expo.len(), vt.width());
        for (slot, &e) in expo.iter().enumerate() {
            if e < 0 && !vt.slot_invertible(slot) {
                return Err(Error::NotInvertible { name: vt.slot_name(slot) });
            }
        }
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(expo, c);
        }
        Ok(LaurentPoly { vt, terms })
    }

    /// The indexed variable `letter[i]^exp` (1-based `i`).
    pub fn var(vt: VarTable, i: usize, exp: i16) -> Result<Self, Error> {
        let slot = vt.var_slot(i)?;
        let mut expo: Expo = smallvec![0; vt.width()];
        expo[slot] = exp;
        Self::monomial(vt, expo, Rational::one())
    }

    /// `q^exp`; the table must carry q.
    pub fn q_pow(vt: VarTable, exp: i16) -> Result<Self, Error> {
        let slot = vt.q_slot().ok_or(Error::NotInvertible { name: "q".into() })?;
        let mut expo: Expo = smallvec![0; vt.width()];
        expo[slot] = exp;
        Self::monomial(vt, expo, Rational::one())
    }

    pub fn table(&self) -> VarTable {
        self.vt
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.terms.len() == 1
            && self
                .terms
                .iter()
                .all(|(e, c)| e.iter().all(|&x| x == 0) && c.is_one())
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Expo, &Rational)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    /// The constant coefficient, if the polynomial is constant.
    pub fn as_constant(&self) -> Option<Rational> {
        if self.terms.is_empty() {
            return Some(Rational::zero());
        }
        if self.terms.len() == 1 {
            let (e, c) = self.terms.iter().next().unwrap();
            if e.iter().all(|&x| x == 0) {
                return Some(c.clone());
            }
        }
        None
    }

    fn insert_add(terms: &mut BTreeMap<Expo, Rational>, e: Expo, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match terms.entry(e) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get() + &c;
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn try_add(&self, other: &Self) -> Result<Self, Error> {
        if self.vt != other.vt {
            return Err(Error::VarTableMismatch);
        }
        let mut terms = self.terms.clone();
        for (e, c) in &other.terms {
            Self::insert_add(&mut terms, e.clone(), c.clone());
        }
        Ok(LaurentPoly { vt: self.vt, terms })
    }

    pub fn add(&self, other: &Self) -> Self {
        self.try_add(other).expect("var table mismatch")
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(e, c)| (e.clone(), -c.clone())).collect();
        LaurentPoly { vt: self.vt, terms }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn try_mul(&self, other: &Self) -> Result<Self, Error> {
        if self.vt != other.vt {
            return Err(Error::VarTableMismatch);
        }
        let mut terms = BTreeMap::new();
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let e: Expo = ea.iter().zip(eb.iter()).map(|(x, y)| x + y).collect();
                Self::insert_add(&mut terms, e, ca * cb);
            }
        }
        Ok(LaurentPoly { vt: self.vt, terms })
    }

    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("var table mismatch")
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vt);
        }
        let terms = self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect();
        LaurentPoly { vt: self.vt, terms }
    }

    /// Exchange the exponents of variables `i` and `i+1` (1-based).
    pub fn swap_adjacent(&self, i: usize) -> Result<Self, Error> {
        let a = self.vt.var_slot(i)?;
        let b = self.vt.var_slot(i + 1)?;
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut e = e.clone();
                e.swap(a, b);
                (e, c.clone())
            })
            .collect();
        Ok(LaurentPoly { vt: self.vt, terms })
    }

    /// Permute the indexed variables by `w`: variable `i` goes to `w(i)`.
    pub fn apply_perm(&self, w: &Permutation) -> Self {
        assert_eq!(w.n(), self.vt.n, "permutation rank mismatch");
        let off = usize::from(self.vt.has_q);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out = e.clone();
                for i in 0..self.vt.n {
                    out[off + w.apply(i)] = e[off + i];
                }
                (out, c.clone())
            })
            .collect();
        LaurentPoly { vt: self.vt, terms }
    }

    /// Divided difference in the pair `(i, i+1)`:
    /// `(f - s_i f) / (y_i - y_{i+1})`. The division is always exact because
    /// the numerator is antisymmetric in the pair; failure indicates a bug.
    pub fn divided_difference(&self, i: usize) -> Result<Self, Error> {
        let num = self.sub(&self.swap_adjacent(i)?);
        if num.is_zero() {
            return Ok(Self::zero(self.vt));
        }
        let mut den = Self::var(self.vt, i, 1)?;
        den = den.sub(&Self::var(self.vt, i + 1, 1)?);
        Ok(num
            .exact_div(&den)
            .expect("divided difference: antisymmetric numerator must divide"))
    }

    fn min_exponents(&self) -> Expo {
        let w = self.vt.width();
        let mut m: Expo = smallvec![0; w];
        let mut first = true;
        for e in self.terms.keys() {
            for s in 0..w {
                if first || e[s] < m[s] {
                    m[s] = e[s];
                }
            }
            first = false;
        }
        m
    }

    fn shift_exponents(&self, delta: &Expo) -> BTreeMap<Expo, Rational> {
        self.terms
            .iter()
            .map(|(e, c)| {
                let e: Expo = e.iter().zip(delta.iter()).map(|(x, d)| x + d).collect();
                (e, c.clone())
            })
            .collect()
    }

    /// Graded-lex comparison key used by the division loop and printing:
    /// higher total degree first, then lexicographically larger exponents.
    fn graded_key(e: &Expo) -> (i64, Expo) {
        (e.iter().map(|&x| i64::from(x)).sum(), e.clone())
    }

    /// Exact division: returns `h` with `self = g * h` when such an `h`
    /// exists in this Laurent ring, `None` otherwise.
    pub fn exact_div(&self, g: &Self) -> Option<Self> {
        assert_eq!(self.vt, g.vt, "var table mismatch");
        assert!(!g.is_zero(), "division by zero polynomial");
        if self.is_zero() {
            return Some(Self::zero(self.vt));
        }
        // Shift both operands to plain polynomials. Minimal slot exponents
        // add under multiplication, so the shifted quotient stays polynomial.
        let mf = self.min_exponents();
        let mg = g.min_exponents();
        let neg = |m: &Expo| -> Expo { m.iter().map(|&x| -x).collect() };
        let mut num = self.shift_exponents(&neg(&mf));
        let den = g.shift_exponents(&neg(&mg));

        let (lt_e, lt_c) = den
            .iter()
            .max_by(|(a, _), (b, _)| Self::graded_key(a).cmp(&Self::graded_key(b)))
            .map(|(e, c)| (e.clone(), c.clone()))
            .unwrap();

        let mut quot: BTreeMap<Expo, Rational> = BTreeMap::new();
        while let Some((fe, fc)) = num
            .iter()
            .max_by(|(a, _), (b, _)| Self::graded_key(a).cmp(&Self::graded_key(b)))
            .map(|(e, c)| (e.clone(), c.clone()))
        {
            let te: Expo = fe.iter().zip(lt_e.iter()).map(|(a, b)| a - b).collect();
            if te.iter().any(|&x| x < 0) {
                return None;
            }
            let tc = fc / &lt_c;
            for (de, dc) in &den {
                let e: Expo = te.iter().zip(de.iter()).map(|(a, b)| a + b).collect();
                Self::insert_add(&mut num, e, -(&tc * dc));
            }
            Self::insert_add(&mut quot, te, tc);
            if num.is_empty() {
                // Undo the normalization shift.
                let delta: Expo =
                    mf.iter().zip(mg.iter()).map(|(a, b)| a - b).collect();
                let mut out = BTreeMap::new();
                for (e, c) in quot {
                    let e: Expo =
                        e.iter().zip(delta.iter()).map(|(x, d)| x + d).collect();
                    for (slot, &x) in e.iter().enumerate() {
                        if x < 0 && !self.vt.slot_invertible(slot) {
                            return None;
                        }
                    }
                    out.insert(e, c);
                }
                return Some(LaurentPoly { vt: self.vt, terms: out });
            }
        }
        None
    }

    /// Substitute `q := value`. The table keeps its q slot with exponent 0.
    pub fn subst_q(&self, value: &Rational) -> Result<Self, Error> {
        if value.is_zero() {
            return Err(Error::ZeroSpecialization);
        }
        let Some(qs) = self.vt.q_slot() else {
            return Ok(self.clone());
        };
        let mut terms = BTreeMap::new();
        for (e, c) in &self.terms {
            let k = e[qs];
            let mut pw = Rational::one();
            let base = if k >= 0 { value.clone() } else { value.recip() };
            for _ in 0..k.unsigned_abs() {
                pw *= &base;
            }
            let mut e = e.clone();
            e[qs] = 0;
            Self::insert_add(&mut terms, e, c * pw);
        }
        Ok(LaurentPoly { vt: self.vt, terms })
    }

    /// Reinterpret in a wider table: the q slot (if any) maps to q, indexed
    /// variable `i` maps to `i + offset`.
    pub fn shift_embed(&self, offset: usize, target: VarTable) -> Self {
        assert!(target.n >= self.vt.n + offset, "target table too small");
        assert!(target.has_q || !self.vt.has_q, "target table lost q");
        let src_off = usize::from(self.vt.has_q);
        let dst_off = usize::from(target.has_q);
        let terms = self
            .terms
            .iter()
            .map(|(e, c)| {
                let mut out: Expo = smallvec![0; target.width()];
                if self.vt.has_q {
                    out[0] = e[0];
                }
                for i in 0..self.vt.n {
                    out[dst_off + offset + i] = e[src_off + i];
                }
                (out, c.clone())
            })
            .collect();
        LaurentPoly { vt: target, terms }
    }

    pub fn total_degree(&self) -> i64 {
        self.terms
            .keys()
            .map(|e| e.iter().map(|&x| i64::from(x)).sum())
            .max()
            .unwrap_or(0)
    }

    /// Monomials in print order (graded-lex, leading first).
    pub fn sorted_terms(&self) -> Vec<(&Expo, &Rational)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|(a, _), (b, _)| Self::graded_key(b).cmp(&Self::graded_key(a)));
        v
    }
}

fn write_monomial(
    f: &mut fmt::Formatter<'_>,
    vt: &VarTable,
    e: &Expo,
    c: &Rational,
    lead: bool,
) -> fmt::Result {
    let mag = c.abs();
    if lead {
        if c.is_negative() {
            write!(f, "-")?;
        }
    } else if c.is_negative() {
        write!(f, " - ")?;
    } else {
        write!(f, " + ")?;
    }
    let mut parts: Vec<String> = Vec::new();
    if !mag.is_one() || e.iter().all(|&x| x == 0) {
        parts.push(mag.to_string());
    }
    for (slot, &x) in e.iter().enumerate() {
        if x == 0 {
            continue;
        }
        if x == 1 {
            parts.push(vt.slot_name(slot));
        } else {
            parts.push(format!("{}^{}", vt.slot_name(slot), x));
        }
    }
    write!(f, "{}", parts.join("*"))
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (e, c)) in self.sorted_terms().into_iter().enumerate() {
            write_monomial(f, &self.vt, e, c, k == 0)?;
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int};

    fn yt(n: usize) -> VarTable {
        VarTable::indexed(b'y', n, false, false)
    }

    fn ylt(n: usize) -> VarTable {
        VarTable::indexed(b'y', n, true, true)
    }

    fn y(vt: VarTable, i: usize) -> LaurentPoly {
        LaurentPoly::var(vt, i, 1).unwrap()
    }

    #[test]
    fn add_cancels_inverse_pair() {
        let vt = yt(2);
        let a = y(vt, 1).sub(&y(vt, 2));
        let b = y(vt, 2).sub(&y(vt, 1));
        assert!(a.add(&b).is_zero());
    }

    #[test]
    fn add_doubles_q() {
        let vt = VarTable::scalar(true);
        let q = LaurentPoly::q_pow(vt, 1).unwrap();
        let two_q = q.scale(&rat_int(2));
        assert_eq!(q.add(&q), two_q);
    }

    #[test]
    fn add_collects_constants() {
        let vt = yt(1);
        let a = y(vt, 1).add(&LaurentPoly::one(vt));
        let b = y(vt, 1).sub(&LaurentPoly::one(vt));
        assert_eq!(a.add(&b), y(vt, 1).scale(&rat_int(2)));
    }

    #[test]
    fn mul_difference_of_squares_in_q() {
        let vt = VarTable::scalar(true);
        let q = LaurentPoly::q_pow(vt, 1).unwrap();
        let qi = LaurentPoly::q_pow(vt, -1).unwrap();
        let prod = q.sub(&qi).mul(&q.add(&qi));
        let want = LaurentPoly::q_pow(vt, 2).unwrap().sub(&LaurentPoly::q_pow(vt, -2).unwrap());
        assert_eq!(prod, want);
    }

    #[test]
    fn mul_inverse_pair_is_one() {
        let vt = ylt(1);
        let a = LaurentPoly::var(vt, 1, -1).unwrap();
        assert!(a.mul(&y(vt, 1)).is_one());
    }

    #[test]
    fn mul_by_one_is_identity() {
        let vt = yt(2);
        let a = y(vt, 1).sub(&y(vt, 2));
        assert_eq!(a.mul(&LaurentPoly::one(vt)), a);
    }

    #[test]
    fn negative_exponent_needs_laurent() {
        let vt = yt(2);
        assert!(LaurentPoly::var(vt, 1, -1).is_err());
        assert!(LaurentPoly::var(ylt(2), 1, -1).is_ok());
    }

    #[test]
    fn swap_examples() {
        let vt = yt(2);
        assert_eq!(y(vt, 1).swap_adjacent(1).unwrap(), y(vt, 2));
        let sym = y(vt, 1).mul(&y(vt, 2));
        assert_eq!(sym.swap_adjacent(1).unwrap(), sym);
        let a = y(vt, 1).mul(&y(vt, 1)).mul(&y(vt, 2));
        let b = y(vt, 1).mul(&y(vt, 2)).mul(&y(vt, 2));
        assert_eq!(a.swap_adjacent(1).unwrap(), b);
        assert!(y(vt, 2).swap_adjacent(2).is_err());
    }

    #[test]
    fn divided_difference_examples() {
        let vt = yt(2);
        let y1 = y(vt, 1);
        let y2 = y(vt, 2);
        // (y1^2 - y2^2)/(y1 - y2) = y1 + y2
        assert_eq!(y1.mul(&y1).divided_difference(1).unwrap(), y1.add(&y2));
        // symmetric input
        assert!(y1.mul(&y2).divided_difference(1).unwrap().is_zero());
        // d(y2) = -1
        assert_eq!(y2.divided_difference(1).unwrap(), LaurentPoly::from_int(vt, -1));
    }

    #[test]
    fn exact_div_examples() {
        let vt = yt(2);
        let y1 = y(vt, 1);
        let y2 = y(vt, 2);
        let num = y1.mul(&y1).sub(&y2.mul(&y2));
        let den = y1.sub(&y2);
        assert_eq!(num.exact_div(&den).unwrap(), y1.add(&y2));
        let shifted = y1.sub(&y2).sub(&LaurentPoly::one(vt));
        assert!(den.exact_div(&shifted).is_none());
        assert_eq!(LaurentPoly::zero(vt).exact_div(&den).unwrap(), LaurentPoly::zero(vt));
    }

    #[test]
    fn exact_div_laurent_monomial() {
        let vt = ylt(1);
        let one = LaurentPoly::one(vt);
        let y1 = y(vt, 1);
        // 1 / y1 = y1^{-1} exists in the Laurent ring
        let inv = one.exact_div(&y1).unwrap();
        assert_eq!(inv, LaurentPoly::var(vt, 1, -1).unwrap());
        // but not in the polynomial ring
        let pt = yt(1);
        assert!(LaurentPoly::one(pt).exact_div(&y(pt, 1)).is_none());
    }

    #[test]
    fn subst_q_collapses() {
        let vt = VarTable::scalar(true);
        let q = LaurentPoly::q_pow(vt, 1).unwrap();
        let qi = LaurentPoly::q_pow(vt, -1).unwrap();
        let f = q.sub(&qi);
        assert!(f.subst_q(&rat_int(1)).unwrap().is_zero());
        let g = f.subst_q(&rat(2, 1)).unwrap();
        assert_eq!(g.as_constant().unwrap(), rat(3, 2));
        assert!(f.subst_q(&rat_int(0)).is_err());
    }

    #[test]
    fn display_is_graded_lex() {
        let vt = VarTable::indexed(b'y', 2, false, true);
        let f = y(vt, 2)
            .scale(&rat_int(-2))
            .add(&y(vt, 1).scale(&rat_int(2)))
            .sub(&LaurentPoly::one(vt));
        assert_eq!(f.to_string(), "2*y[1] - 2*y[2] - 1");
        let q = LaurentPoly::q_pow(vt, 1).unwrap();
        let qi = LaurentPoly::q_pow(vt, -1).unwrap();
        assert_eq!(q.sub(&qi).to_string(), "q - q^-1");
    }
}
