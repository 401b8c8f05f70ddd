//! Fractions whose denominators are multisets of discriminant-type atoms.
//!
//! Denominators are never expanded or gcd-reduced globally; they stay in
//! factored form. Equality is decided by cross-multiplication, never by
//! structural comparison.

use std::collections::BTreeMap;
use std::fmt;

use num::One;

use super::{LaurentPoly, Rational, VarTable};
use crate::error::Error;

/// A linear denominator atom. `Diff` is kept with `i < j`, the sign being
/// absorbed into the numerator; the other kinds are ordered pairs.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum DenAtom {
    /// `y_i - y_j`
    Diff(usize, usize),
    /// `q*y_i - q^{-1}*y_j`
    QDiff(usize, usize),
    /// `y_i - y_j - 1`
    ShiftDiff(usize, usize),
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum AtomKind {
    Diff,
    QDiff,
    ShiftDiff,
}

impl DenAtom {
    pub fn kind(&self) -> AtomKind {
        match self {
            DenAtom::Diff(..) => AtomKind::Diff,
            DenAtom::QDiff(..) => AtomKind::QDiff,
            DenAtom::ShiftDiff(..) => AtomKind::ShiftDiff,
        }
    }

    pub fn indices(&self) -> (usize, usize) {
        match *self {
            DenAtom::Diff(i, j) | DenAtom::QDiff(i, j) | DenAtom::ShiftDiff(i, j) => (i, j),
        }
    }

    /// Canonical form plus the sign it contributes to the numerator.
    pub fn normalize(self) -> (DenAtom, i8) {
        match self {
            DenAtom::Diff(i, j) if i > j => (DenAtom::Diff(j, i), -1),
            a => (a, 1),
        }
    }

    /// Image under a permutation of the variable indices (1-based).
    pub fn map_indices(self, f: impl Fn(usize) -> usize) -> (DenAtom, i8) {
        let (i, j) = self.indices();
        let (i, j) = (f(i), f(j));
        let a = match self {
            DenAtom::Diff(..) => DenAtom::Diff(i, j),
            DenAtom::QDiff(..) => DenAtom::QDiff(i, j),
            DenAtom::ShiftDiff(..) => DenAtom::ShiftDiff(i, j),
        };
        a.normalize()
    }

    pub fn poly(&self, vt: VarTable) -> LaurentPoly {
        let (i, j) = self.indices();
        let yi = LaurentPoly::var(vt, i, 1).expect("atom index in range");
        let yj = LaurentPoly::var(vt, j, 1).expect("atom index in range");
        match self {
            DenAtom::Diff(..) => yi.sub(&yj),
            DenAtom::QDiff(..) => {
                let q = LaurentPoly::q_pow(vt, 1).expect("QDiff needs q");
                let qi = LaurentPoly::q_pow(vt, -1).expect("QDiff needs q");
                q.mul(&yi).sub(&qi.mul(&yj))
            }
            DenAtom::ShiftDiff(..) => yi.sub(&yj).sub(&LaurentPoly::one(vt)),
        }
    }

    pub fn render(&self, vt: VarTable) -> String {
        format!("({})", self.poly(vt))
    }
}

/// Numerator over a factored denominator multiset.
#[derive(Clone, Debug)]
pub struct LocalizedFraction {
    num: LaurentPoly,
    den: BTreeMap<DenAtom, u32>,
}

impl LocalizedFraction {
    pub fn from_poly(num: LaurentPoly) -> Self {
        LocalizedFraction { num, den: BTreeMap::new() }
    }

    pub fn new(num: LaurentPoly, atoms: impl IntoIterator<Item = DenAtom>) -> Self {
        let mut out = Self::from_poly(num);
        for a in atoms {
            out = out.div_atom(a);
        }
        out.reduce()
    }

    pub fn zero(vt: VarTable) -> Self {
        Self::from_poly(LaurentPoly::zero(vt))
    }

    pub fn one(vt: VarTable) -> Self {
        Self::from_poly(LaurentPoly::one(vt))
    }

    pub fn table(&self) -> VarTable {
        self.num.table()
    }

    pub fn numerator(&self) -> &LaurentPoly {
        &self.num
    }

    pub fn denominator(&self) -> &BTreeMap<DenAtom, u32> {
        &self.den
    }

    pub fn is_zero(&self) -> bool {
        self.num.is_zero()
    }

    fn normal(mut self) -> Self {
        if self.num.is_zero() {
            self.den.clear();
        }
        self
    }

    /// Divide by one atom (push it onto the denominator, canonicalized).
    pub fn div_atom(mut self, atom: DenAtom) -> Self {
        if self.num.is_zero() {
            return self;
        }
        let (a, sign) = atom.normalize();
        if sign < 0 {
            self.num = self.num.neg();
        }
        *self.den.entry(a).or_insert(0) += 1;
        self
    }

    pub fn expanded_den(&self) -> LaurentPoly {
        let vt = self.table();
        let mut p = LaurentPoly::one(vt);
        for (a, &m) in &self.den {
            let ap = a.poly(vt);
            for _ in 0..m {
                p = p.mul(&ap);
            }
        }
        p
    }

    /// Multiset least upper bound of two denominators.
    fn den_lub(a: &BTreeMap<DenAtom, u32>, b: &BTreeMap<DenAtom, u32>) -> BTreeMap<DenAtom, u32> {
        let mut out = a.clone();
        for (k, &m) in b {
            let e = out.entry(*k).or_insert(0);
            *e = (*e).max(m);
        }
        out
    }

    /// Product of the atoms by which `lub` exceeds `den`.
    fn cofactor(&self, lub: &BTreeMap<DenAtom, u32>) -> LaurentPoly {
        let vt = self.table();
        let mut p = LaurentPoly::one(vt);
        for (a, &m) in lub {
            let have = self.den.get(a).copied().unwrap_or(0);
            let ap = a.poly(vt);
            for _ in have..m {
                p = p.mul(&ap);
            }
        }
        p
    }

    pub fn add(&self, other: &Self) -> Self {
        assert_eq!(self.table(), other.table(), "var table mismatch");
        let lub = Self::den_lub(&self.den, &other.den);
        let num = self
            .num
            .mul(&self.cofactor(&lub))
            .add(&other.num.mul(&other.cofactor(&lub)));
        LocalizedFraction { num, den: lub }.normal().reduce()
    }

    pub fn neg(&self) -> Self {
        LocalizedFraction { num: self.num.neg(), den: self.den.clone() }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        assert_eq!(self.table(), other.table(), "var table mismatch");
        let num = self.num.mul(&other.num);
        let mut den = self.den.clone();
        for (a, &m) in &other.den {
            *den.entry(*a).or_insert(0) += m;
        }
        LocalizedFraction { num, den }.normal().reduce()
    }

    pub fn mul_poly(&self, p: &LaurentPoly) -> Self {
        LocalizedFraction { num: self.num.mul(p), den: self.den.clone() }
            .normal()
            .reduce()
    }

    pub fn scale(&self, c: &Rational) -> Self {
        LocalizedFraction { num: self.num.scale(c), den: self.den.clone() }.normal()
    }

    /// Trial-divide the numerator by denominator atoms; correctness never
    /// depends on this firing.
    pub fn reduce(mut self) -> Self {
        if self.num.is_zero() {
            return self.normal();
        }
        let atoms: Vec<DenAtom> = self.den.keys().copied().collect();
        let vt = self.table();
        for a in atoms {
            let ap = a.poly(vt);
            while self.den.get(&a).copied().unwrap_or(0) > 0 {
                match self.num.exact_div(&ap) {
                    Some(q) => {
                        self.num = q;
                        let m = self.den.get_mut(&a).unwrap();
                        *m -= 1;
                        if *m == 0 {
                            self.den.remove(&a);
                        }
                    }
                    None => break,
                }
            }
        }
        self
    }

    /// Action of the adjacent transposition `s_i` on the fraction.
    pub fn swap_adjacent(&self, i: usize) -> Result<Self, Error> {
        let mut num = self.num.swap_adjacent(i)?;
        let mut den = BTreeMap::new();
        let map = |k: usize| {
            if k == i {
                i + 1
            } else if k == i + 1 {
                i
            } else {
                k
            }
        };
        for (a, &m) in &self.den {
            let (b, sign) = a.map_indices(map);
            if sign < 0 && m % 2 == 1 {
                num = num.neg();
            }
            *den.entry(b).or_insert(0) += m;
        }
        Ok(LocalizedFraction { num, den })
    }

    /// Divided difference extended to fractions: form `f - s_i f`, then
    /// divide by `y_i - y_{i+1}`, adding a Diff atom when the numerator is
    /// not exactly divisible.
    pub fn divided_difference(&self, i: usize) -> Result<Self, Error> {
        let d = self.sub(&self.swap_adjacent(i)?);
        if d.is_zero() {
            return Ok(Self::zero(self.table()));
        }
        let atom = DenAtom::Diff(i, i + 1);
        let ap = atom.poly(self.table());
        match d.num.exact_div(&ap) {
            Some(q) => Ok(LocalizedFraction { num: q, den: d.den }),
            None => Ok(d.div_atom(atom)),
        }
    }

    /// Cross-multiplied exact equality.
    pub fn eq_frac(&self, other: &Self) -> bool {
        self.num.mul(&other.expanded_den()) == other.num.mul(&self.expanded_den())
    }

    /// Reinterpret in a wider table, shifting indexed variables and atom
    /// indices by `offset`.
    pub fn shift_embed(&self, offset: usize, target: VarTable) -> Self {
        let num = self.num.shift_embed(offset, target);
        let den = self
            .den
            .iter()
            .map(|(a, &m)| {
                let (b, sign) = a.map_indices(|k| k + offset);
                debug_assert_eq!(sign, 1);
                (b, m)
            })
            .collect();
        LocalizedFraction { num, den }
    }
}

impl fmt::Display for LocalizedFraction {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.den.is_empty() {
            return write!(f, "{}", self.num);
        }
        let den: Vec<String> = self
            .den
            .iter()
            .map(|(a, &m)| {
                let s = a.render(self.table());
                if m == 1 {
                    s
                } else {
                    format!("{s}^{m}")
                }
            })
            .collect();
        let num = if self.num.num_terms() > 1 || self.num.as_constant().map_or(false, |c| {
            c != Rational::one() && c != -Rational::one()
        }) {
            format!("({})", self.num)
        } else {
            format!("{}", self.num)
        };
        write!(f, "{}/{}", num, den.join("*"))
    }
}
