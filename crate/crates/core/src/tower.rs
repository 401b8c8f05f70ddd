//! Concrete tower algebras with normal forms: group algebras of symmetric
//! groups, Hecke algebras, cross-products with (Laurent) polynomial rings,
//! degenerate affine Hecke algebras and affine Hecke algebras.
//!
//! The normal form keeps coefficients on the LEFT of the group part,
//! `poly * T_w`, and is computed by letter-wise straightening:
//!
//!   t_i * f = s_i(f) * t_i                                    (cross)
//!   t_i * f = s_i(f) * t_i + d_i(f)                           (degenerate)
//!   t_i * f = s_i(f) * t_i - (q - q^{-1}) * y_{i+1} * d_i(f)  (affine)
//!
//! with `d_i` the divided difference, and the group parts multiplied by
//! `T_i T_w = T_{s_i w}` when the length goes up and
//! `T_{s_i w} + (q - q^{-1}) T_w` otherwise (quadratic families).

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::perm::Permutation;
use crate::ring::{LaurentPoly, LocalizedFraction, Rational, VarTable};

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum AlgebraFamily {
    /// k[S_n]
    Sym,
    /// H_n(q)
    Hecke,
    /// k[u_1..u_n] * S_n
    CrossPoly,
    /// k[u_1^{±1}..u_n^{±1}] * S_n
    CrossLaurent,
    /// degenerate affine Hecke algebra
    DegAffine,
    /// affine Hecke algebra
    AffineHecke,
}

impl AlgebraFamily {
    pub fn has_q(&self) -> bool {
        matches!(self, AlgebraFamily::Hecke | AlgebraFamily::AffineHecke)
    }

    pub fn has_vars(&self) -> bool {
        !matches!(self, AlgebraFamily::Sym | AlgebraFamily::Hecke)
    }

    pub fn var_letter(&self) -> u8 {
        match self {
            AlgebraFamily::CrossPoly | AlgebraFamily::CrossLaurent => b'u',
            _ => b'y',
        }
    }

    pub fn laurent_vars(&self) -> bool {
        matches!(self, AlgebraFamily::CrossLaurent | AlgebraFamily::AffineHecke)
    }

    /// Quadratic group multiplication (Hecke-type) vs involutive.
    pub fn quadratic(&self) -> bool {
        matches!(self, AlgebraFamily::Hecke | AlgebraFamily::AffineHecke)
    }

    fn correction(&self) -> Correction {
        match self {
            AlgebraFamily::DegAffine => Correction::Degenerate,
            AlgebraFamily::AffineHecke => Correction::Affine,
            _ => Correction::None,
        }
    }

    pub fn name(&self) -> &'static str {
        match self {
            AlgebraFamily::Sym => "sym",
            AlgebraFamily::Hecke => "hecke",
            AlgebraFamily::CrossPoly => "cross",
            AlgebraFamily::CrossLaurent => "crossLaurent",
            AlgebraFamily::DegAffine => "dAHA",
            AlgebraFamily::AffineHecke => "affineHecke",
        }
    }
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Correction {
    None,
    Degenerate,
    Affine,
}

/// A tower algebra at a fixed rank, together with its variable universe.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct AlgContext {
    pub family: AlgebraFamily,
    pub n: usize,
    pub vt: VarTable,
}

impl AlgContext {
    pub fn new(family: AlgebraFamily, n: usize) -> Self {
        let vt = if family.has_vars() {
            VarTable::indexed(family.var_letter(), n, family.laurent_vars(), family.has_q())
        } else {
            VarTable::scalar(family.has_q())
        };
        AlgContext { family, n, vt }
    }

    /// Variant with q adjoined to the coefficients regardless of family,
    /// and with a caller-chosen letter (the localized towers write `y`).
    pub fn with_options(family: AlgebraFamily, n: usize, with_q: bool, letter: u8) -> Self {
        let vt = if family.has_vars() {
            VarTable::indexed(letter, n, family.laurent_vars(), with_q || family.has_q())
        } else {
            VarTable::scalar(with_q || family.has_q())
        };
        AlgContext { family, n, vt }
    }

    /// `q - q^{-1}` in this context's coefficients (zero slot-width safe).
    fn q_minus_qinv(&self) -> LaurentPoly {
        let q = LaurentPoly::q_pow(self.vt, 1).expect("family has q");
        q.sub(&LaurentPoly::q_pow(self.vt, -1).unwrap())
    }
}

/// Coefficient rings the straightening engine can run over.
pub trait Coefficient: Clone + fmt::Debug {
    fn zero(vt: VarTable) -> Self;
    fn one(vt: VarTable) -> Self;
    fn from_poly(p: LaurentPoly) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, o: &Self) -> Self;
    fn neg(&self) -> Self;
    fn mul(&self, o: &Self) -> Self;
    fn mul_poly(&self, p: &LaurentPoly) -> Self;
    fn swap_adjacent(&self, i: usize) -> Result<Self, Error>;
    fn divided_difference(&self, i: usize) -> Result<Self, Error>;
    fn eq_coeff(&self, o: &Self) -> bool;
    fn shift_embed(&self, offset: usize, target: VarTable) -> Self;
    fn render(&self) -> String;
}

impl Coefficient for LaurentPoly {
    fn zero(vt: VarTable) -> Self {
        LaurentPoly::zero(vt)
    }
    fn one(vt: VarTable) -> Self {
        LaurentPoly::one(vt)
    }
    fn from_poly(p: LaurentPoly) -> Self {
        p
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        LaurentPoly::add(self, o)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        LaurentPoly::mul(self, o)
    }
    fn mul_poly(&self, p: &LaurentPoly) -> Self {
        LaurentPoly::mul(self, p)
    }
    fn swap_adjacent(&self, i: usize) -> Result<Self, Error> {
        LaurentPoly::swap_adjacent(self, i)
    }
    fn divided_difference(&self, i: usize) -> Result<Self, Error> {
        LaurentPoly::divided_difference(self, i)
    }
    fn eq_coeff(&self, o: &Self) -> bool {
        self == o
    }
    fn shift_embed(&self, offset: usize, target: VarTable) -> Self {
        LaurentPoly::shift_embed(self, offset, target)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

impl Coefficient for LocalizedFraction {
    fn zero(vt: VarTable) -> Self {
        LocalizedFraction::zero(vt)
    }
    fn one(vt: VarTable) -> Self {
        LocalizedFraction::one(vt)
    }
    fn from_poly(p: LaurentPoly) -> Self {
        LocalizedFraction::from_poly(p)
    }
    fn is_zero(&self) -> bool {
        self.is_zero()
    }
    fn add(&self, o: &Self) -> Self {
        LocalizedFraction::add(self, o)
    }
    fn neg(&self) -> Self {
        LocalizedFraction::neg(self)
    }
    fn mul(&self, o: &Self) -> Self {
        LocalizedFraction::mul(self, o)
    }
    fn mul_poly(&self, p: &LaurentPoly) -> Self {
        LocalizedFraction::mul_poly(self, p)
    }
    fn swap_adjacent(&self, i: usize) -> Result<Self, Error> {
        LocalizedFraction::swap_adjacent(self, i)
    }
    fn divided_difference(&self, i: usize) -> Result<Self, Error> {
        LocalizedFraction::divided_difference(self, i)
    }
    fn eq_coeff(&self, o: &Self) -> bool {
        self.eq_frac(o)
    }
    fn shift_embed(&self, offset: usize, target: VarTable) -> Self {
        LocalizedFraction::shift_embed(self, offset, target)
    }
    fn render(&self) -> String {
        self.to_string()
    }
}

/// Normal-form element: finite sum of `coefficient * T_w` with the
/// coefficient on the left and at most n! permutation keys.
#[derive(Clone, Debug)]
pub struct AlgElement<C: Coefficient> {
    pub ctx: AlgContext,
    terms: BTreeMap<Permutation, C>,
}

pub type PolyElement = AlgElement<LaurentPoly>;

impl<C: Coefficient> AlgElement<C> {
    pub fn zero(ctx: AlgContext) -> Self {
        AlgElement { ctx, terms: BTreeMap::new() }
    }

    pub fn one(ctx: AlgContext) -> Self {
        Self::scalar(ctx, C::one(ctx.vt))
    }

    pub fn scalar(ctx: AlgContext, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(Permutation::identity(ctx.n), c);
        }
        AlgElement { ctx, terms }
    }

    /// The generator `T_i` (1-based adjacent index).
    pub fn generator_t(ctx: AlgContext, i: usize) -> Result<Self, Error> {
        let p = Permutation::adjacent(ctx.n, i)?;
        let mut terms = BTreeMap::new();
        terms.insert(p, C::one(ctx.vt));
        Ok(AlgElement { ctx, terms })
    }

    /// The scalar generator `y_i^exp` / `u_i^exp`.
    pub fn generator_var(ctx: AlgContext, i: usize, exp: i16) -> Result<Self, Error> {
        if !ctx.family.has_vars() {
            return Err(Error::InvalidLetter(format!(
                "{}[{}]",
                ctx.vt.letter as char, i
            )));
        }
        let p = LaurentPoly::var(ctx.vt, i, exp)?;
        Ok(Self::scalar(ctx, C::from_poly(p)))
    }

    pub fn basis(ctx: AlgContext, w: Permutation, c: C) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(w, c);
        }
        AlgElement { ctx, terms }
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Permutation, &C)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff_of(&self, w: &Permutation) -> Option<&C> {
        self.terms.get(w)
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn insert_add(&mut self, w: Permutation, c: C) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(w) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                let s = o.get().add(&c);
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Result<Self, Error> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.insert_add(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        let terms = self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect();
        AlgElement { ctx: self.ctx, terms }
    }

    pub fn sub(&self, other: &Self) -> Result<Self, Error> {
        self.add(&other.neg())
    }

    pub fn scale(&self, c: &C) -> Self {
        let mut out = Self::zero(self.ctx);
        for (w, k) in &self.terms {
            out.insert_add(w.clone(), k.mul(c));
        }
        out
    }

    pub fn scale_poly(&self, p: &LaurentPoly) -> Self {
        let mut out = Self::zero(self.ctx);
        for (w, k) in &self.terms {
            out.insert_add(w.clone(), k.mul_poly(p));
        }
        out
    }

    /// Left-multiply the element by the generator `T_i`, straightening
    /// coefficients through it.
    fn lmul_letter(&self, i: usize) -> Result<Self, Error> {
        let ctx = self.ctx;
        let si = Permutation::adjacent(ctx.n, i)?;
        let mut out = Self::zero(ctx);
        for (w, c) in &self.terms {
            let swapped = if ctx.family.has_vars() { c.swap_adjacent(i)? } else { c.clone() };
            let siw = si.compose(w);
            if ctx.family.quadratic() {
                if siw.length() > w.length() {
                    out.insert_add(siw, swapped);
                } else {
                    out.insert_add(siw, swapped.clone());
                    out.insert_add(w.clone(), swapped.mul_poly(&ctx.q_minus_qinv()));
                }
            } else {
                out.insert_add(siw, swapped);
            }
            match ctx.family.correction() {
                Correction::None => {}
                Correction::Degenerate => {
                    out.insert_add(w.clone(), c.divided_difference(i)?);
                }
                Correction::Affine => {
                    let d = c.divided_difference(i)?;
                    let y = LaurentPoly::var(ctx.vt, i + 1, 1)?;
                    let corr = d.mul_poly(&y.mul(&ctx.q_minus_qinv())).neg();
                    out.insert_add(w.clone(), corr);
                }
            }
        }
        Ok(out)
    }

    /// Right-multiply by `T_i`; coefficients stay put.
    fn rmul_letter(&self, i: usize) -> Result<Self, Error> {
        let ctx = self.ctx;
        let si = Permutation::adjacent(ctx.n, i)?;
        let mut out = Self::zero(ctx);
        for (w, c) in &self.terms {
            let wsi = w.compose(&si);
            if ctx.family.quadratic() && wsi.length() < w.length() {
                out.insert_add(wsi, c.clone());
                out.insert_add(w.clone(), c.mul_poly(&ctx.q_minus_qinv()));
            } else {
                out.insert_add(wsi, c.clone());
            }
        }
        Ok(out)
    }

    /// Normal form of the product. Bilinear; for each pair of basis terms
    /// the right coefficient is straightened through the left word letter
    /// by letter, then group parts are merged.
    pub fn mul(&self, other: &Self) -> Result<Self, Error> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        let ctx = self.ctx;
        let mut out = Self::zero(ctx);
        for (w, cw) in &self.terms {
            let word = w.reduced_word();
            for (v, cv) in &other.terms {
                // T_w * cv, built right-to-left over the reduced word.
                let mut moved = Self::scalar(ctx, cv.clone());
                for &i in word.iter().rev() {
                    moved = moved.lmul_letter(i)?;
                }
                // (cw * moved) * T_v
                let mut piece = moved.scale(cw);
                for i in v.reduced_word() {
                    piece = piece.rmul_letter(i)?;
                }
                for (u, c) in piece.terms {
                    out.insert_add(u, c);
                }
            }
        }
        Ok(out)
    }

    /// Exact equality of normal forms.
    pub fn eq_elem(&self, other: &Self) -> Result<bool, Error> {
        if self.ctx != other.ctx {
            return Err(Error::ContextMismatch);
        }
        if self.terms.len() != other.terms.len() {
            return Ok(false);
        }
        for ((w, c), (v, d)) in self.terms.iter().zip(other.terms.iter()) {
            if w != v || !c.eq_coeff(d) {
                return Ok(false);
            }
        }
        Ok(true)
    }

    /// Tensor embedding: `a` in the first `m` letters, `b` shifted by `m`.
    pub fn mu(a: &Self, b: &Self) -> Result<Self, Error> {
        if a.ctx.family != b.ctx.family
            || a.ctx.vt.has_q != b.ctx.vt.has_q
            || a.ctx.vt.letter != b.ctx.vt.letter
        {
            return Err(Error::ContextMismatch);
        }
        let m = a.ctx.n;
        let n = b.ctx.n;
        let ctx = AlgContext::with_options(
            a.ctx.family,
            m + n,
            a.ctx.vt.has_q && !a.ctx.family.has_q(),
            a.ctx.vt.letter,
        );
        let lift = |e: &Self, off: usize| -> Self {
            let coeff_off = if e.ctx.family.has_vars() { off } else { 0 };
            let mut out = Self::zero(ctx);
            for (w, c) in &e.terms {
                out.insert_add(w.shift_pad(off, m + n), c.shift_embed(coeff_off, ctx.vt));
            }
            out
        };
        lift(a, 0).mul(&lift(b, m))
    }
}

impl AlgElement<LaurentPoly> {
    /// Substitute `q := value` in all coefficients.
    pub fn specialize_q(&self, value: &Rational) -> Result<Self, Error> {
        let mut out = Self::zero(self.ctx);
        for (w, c) in &self.terms {
            out.insert_add(w.clone(), c.subst_q(value)?);
        }
        Ok(out)
    }
}

/// One unreduced word letter over a tower presentation.
#[derive(Clone, Debug)]
pub enum GenLetter {
    /// `t_i`
    T(usize),
    /// `y_i^exp` or `u_i^exp`
    Var(usize, i16),
    /// scalar polynomial over the context's variables
    Scalar(LaurentPoly),
}

/// An unreduced word over the generators; also the carrier for braid-group
/// elements, which have no normal form of their own.
#[derive(Clone, Debug, Default)]
pub struct GenWord {
    pub letters: Vec<GenLetter>,
}

impl GenWord {
    pub fn new(letters: Vec<GenLetter>) -> Self {
        GenWord { letters }
    }
}

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum ReductionOrder {
    LeftToRight,
    RightToLeft,
}

fn letter_element<C: Coefficient>(
    ctx: AlgContext,
    letter: &GenLetter,
) -> Result<AlgElement<C>, Error> {
    match letter {
        GenLetter::T(i) => AlgElement::generator_t(ctx, *i),
        GenLetter::Var(i, e) => {
            if *e < 0 && !ctx.vt.laurent {
                return Err(Error::NotInvertible {
                    name: format!("{}[{}]", ctx.vt.letter as char, i),
                });
            }
            AlgElement::generator_var(ctx, *i, *e)
        }
        GenLetter::Scalar(p) => Ok(AlgElement::scalar(ctx, C::from_poly(p.clone()))),
    }
}

/// Normal form of a generator word. The two reduction orders must agree;
/// confluence is exercised by tests, not assumed.
pub fn straighten_with<C: Coefficient>(
    ctx: AlgContext,
    word: &GenWord,
    order: ReductionOrder,
) -> Result<AlgElement<C>, Error> {
    let mut acc = AlgElement::<C>::one(ctx);
    match order {
        ReductionOrder::LeftToRight => {
            for l in &word.letters {
                acc = acc.mul(&letter_element(ctx, l)?)?;
            }
        }
        ReductionOrder::RightToLeft => {
            for l in word.letters.iter().rev() {
                acc = letter_element::<C>(ctx, l)?.mul(&acc)?;
            }
        }
    }
    Ok(acc)
}

pub fn straighten<C: Coefficient>(ctx: AlgContext, word: &GenWord) -> Result<AlgElement<C>, Error> {
    straighten_with(ctx, word, ReductionOrder::LeftToRight)
}

/// Canonical rendering: permutation parts by descending length then
/// lexicographic word, monomials graded-lex within each coefficient,
/// `T_w` printed through its reduced word.
impl fmt::Display for AlgElement<LaurentPoly> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let pieces = render_terms(self);
        if pieces.is_empty() {
            return write!(f, "0");
        }
        for (k, (neg, body)) in pieces.iter().enumerate() {
            if k == 0 {
                if *neg {
                    write!(f, "-")?;
                }
            } else if *neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            write!(f, "{body}")?;
        }
        Ok(())
    }
}

fn perm_word_string(w: &Permutation) -> Option<String> {
    let word = w.reduced_word();
    if word.is_empty() {
        return None;
    }
    Some(
        word.iter()
            .map(|i| format!("T[{i}]"))
            .collect::<Vec<_>>()
            .join("*"),
    )
}

/// Flattened sign/body pieces for one element, in canonical order.
fn render_terms(e: &AlgElement<LaurentPoly>) -> Vec<(bool, String)> {
    use num::{One, Signed};
    let mut keys: Vec<&Permutation> = e.terms.keys().collect();
    keys.sort_by(|a, b| b.length().cmp(&a.length()).then_with(|| a.cmp(b)));
    let mut out = Vec::new();
    for w in keys {
        let c = &e.terms[w];
        let tpart = perm_word_string(w);
        for (expo, coef) in c.sorted_terms() {
            let neg = coef.is_negative();
            let mag = coef.abs();
            let mut parts: Vec<String> = Vec::new();
            let trivial_mono = expo.iter().all(|&x| x == 0);
            if !mag.is_one() || (trivial_mono && tpart.is_none()) {
                parts.push(mag.to_string());
            }
            for (slot, &x) in expo.iter().enumerate() {
                if x == 0 {
                    continue;
                }
                if x == 1 {
                    parts.push(e.ctx.vt.slot_name(slot));
                } else {
                    parts.push(format!("{}^{}", e.ctx.vt.slot_name(slot), x));
                }
            }
            if let Some(t) = &tpart {
                parts.push(t.clone());
            }
            out.push((neg, parts.join("*")));
        }
    }
    out
}

impl fmt::Display for AlgElement<LocalizedFraction> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let mut keys: Vec<&Permutation> = self.terms.keys().collect();
        keys.sort_by(|a, b| b.length().cmp(&a.length()).then_with(|| a.cmp(b)));
        let mut first = true;
        for w in keys {
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            let c = &self.terms[w];
            match perm_word_string(w) {
                Some(t) => write!(f, "[{}]*{}", c, t)?,
                None => write!(f, "[{}]", c)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::{rat, rat_int};

    fn t(ctx: AlgContext, i: usize) -> PolyElement {
        AlgElement::generator_t(ctx, i).unwrap()
    }

    fn yv(ctx: AlgContext, i: usize) -> PolyElement {
        AlgElement::generator_var(ctx, i, 1).unwrap()
    }

    #[test]
    fn degenerate_straightening_golden() {
        // t * y1 = y2*t + 1 in the rank-2 degenerate affine tower
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let p = t(ctx, 1).mul(&yv(ctx, 1)).unwrap();
        let want = yv(ctx, 2).mul(&t(ctx, 1)).unwrap().add(&PolyElement::one(ctx)).unwrap();
        assert!(p.eq_elem(&want).unwrap());
        assert_eq!(p.to_string(), "y[2]*T[1] + 1");
    }

    #[test]
    fn affine_straightening_golden() {
        // t * y1 = y2*t - (q - q^-1)*y2
        let ctx = AlgContext::new(AlgebraFamily::AffineHecke, 2);
        let p = t(ctx, 1).mul(&yv(ctx, 1)).unwrap();
        let qmq = LaurentPoly::q_pow(ctx.vt, 1)
            .unwrap()
            .sub(&LaurentPoly::q_pow(ctx.vt, -1).unwrap());
        let corr = PolyElement::scalar(
            ctx,
            qmq.mul(&LaurentPoly::var(ctx.vt, 2, 1).unwrap()).neg(),
        );
        let want = yv(ctx, 2).mul(&t(ctx, 1)).unwrap().add(&corr).unwrap();
        assert!(p.eq_elem(&want).unwrap());
    }

    #[test]
    fn hecke_quadratic_golden() {
        // T1*T1 = 1 + (q - q^-1)*T1
        let ctx = AlgContext::new(AlgebraFamily::Hecke, 2);
        let p = t(ctx, 1).mul(&t(ctx, 1)).unwrap();
        let qmq = LaurentPoly::q_pow(ctx.vt, 1)
            .unwrap()
            .sub(&LaurentPoly::q_pow(ctx.vt, -1).unwrap());
        let want = PolyElement::one(ctx)
            .add(&t(ctx, 1).scale_poly(&qmq))
            .unwrap();
        assert!(p.eq_elem(&want).unwrap());
    }

    #[test]
    fn hecke_braid_relation() {
        let ctx = AlgContext::new(AlgebraFamily::Hecke, 3);
        let a = t(ctx, 1).mul(&t(ctx, 2)).unwrap().mul(&t(ctx, 1)).unwrap();
        let b = t(ctx, 2).mul(&t(ctx, 1)).unwrap().mul(&t(ctx, 2)).unwrap();
        assert!(a.eq_elem(&b).unwrap());
    }

    #[test]
    fn cross_product_square() {
        // ((u ⊗ 1) * s1)^2 = (u ⊗ u) * id
        let ctx = AlgContext::new(AlgebraFamily::CrossPoly, 2);
        let a = yv(ctx, 1).mul(&t(ctx, 1)).unwrap();
        let sq = a.mul(&a).unwrap();
        let want = yv(ctx, 1).mul(&yv(ctx, 2)).unwrap();
        assert!(sq.eq_elem(&want).unwrap());
    }

    #[test]
    fn degenerate_square_example() {
        // (y1*T1)^2 = y1*y2 + y1*T1
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let a = yv(ctx, 1).mul(&t(ctx, 1)).unwrap();
        let sq = a.mul(&a).unwrap();
        let want = yv(ctx, 1)
            .mul(&yv(ctx, 2))
            .unwrap()
            .add(&yv(ctx, 1).mul(&t(ctx, 1)).unwrap())
            .unwrap();
        assert!(sq.eq_elem(&want).unwrap());
    }

    #[test]
    fn central_candidate_commutes() {
        // y1 + y2 commutes with T1 in the degenerate tower
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let z = yv(ctx, 1).add(&yv(ctx, 2)).unwrap();
        let a = z.mul(&t(ctx, 1)).unwrap();
        let b = t(ctx, 1).mul(&z).unwrap();
        assert!(a.eq_elem(&b).unwrap());
    }

    #[test]
    fn discriminants_are_central_rank2_and_3() {
        for family in [AlgebraFamily::DegAffine, AlgebraFamily::AffineHecke] {
            for n in [2usize, 3] {
                let ctx = AlgContext::new(family, n);
                // plain discriminant: prod over ordered pairs i != j
                let mut delta = PolyElement::one(ctx);
                for i in 1..=n {
                    for j in 1..=n {
                        if i != j {
                            let d = LaurentPoly::var(ctx.vt, i, 1)
                                .unwrap()
                                .sub(&LaurentPoly::var(ctx.vt, j, 1).unwrap());
                            delta = delta.scale_poly(&d);
                        }
                    }
                }
                for i in 1..n {
                    let a = delta.mul(&t(ctx, i)).unwrap();
                    let b = t(ctx, i).mul(&delta).unwrap();
                    assert!(a.eq_elem(&b).unwrap(), "{family:?} rank {n} T{i}");
                }
            }
        }
        // quantum discriminant in the affine Hecke tower
        for n in [2usize, 3] {
            let ctx = AlgContext::new(AlgebraFamily::AffineHecke, n);
            let q = LaurentPoly::q_pow(ctx.vt, 1).unwrap();
            let qi = LaurentPoly::q_pow(ctx.vt, -1).unwrap();
            let mut delta = PolyElement::one(ctx);
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        let d = q
                            .mul(&LaurentPoly::var(ctx.vt, i, 1).unwrap())
                            .sub(&qi.mul(&LaurentPoly::var(ctx.vt, j, 1).unwrap()));
                        delta = delta.scale_poly(&d);
                    }
                }
            }
            for i in 1..n {
                let a = delta.mul(&t(ctx, i)).unwrap();
                let b = t(ctx, i).mul(&delta).unwrap();
                assert!(a.eq_elem(&b).unwrap(), "quantum discriminant rank {n} T{i}");
            }
        }
        // degenerate quantum discriminant in the degenerate tower
        for n in [2usize, 3] {
            let ctx = AlgContext::new(AlgebraFamily::DegAffine, n);
            let mut delta = PolyElement::one(ctx);
            for i in 1..=n {
                for j in 1..=n {
                    if i != j {
                        let d = LaurentPoly::var(ctx.vt, i, 1)
                            .unwrap()
                            .sub(&LaurentPoly::var(ctx.vt, j, 1).unwrap())
                            .sub(&LaurentPoly::one(ctx.vt));
                        delta = delta.scale_poly(&d);
                    }
                }
            }
            for i in 1..n {
                let a = delta.mul(&t(ctx, i)).unwrap();
                let b = t(ctx, i).mul(&delta).unwrap();
                assert!(a.eq_elem(&b).unwrap(), "shifted discriminant rank {n} T{i}");
            }
        }
    }

    #[test]
    fn mu_index_shift_examples() {
        // mu_{1,1}(y, 1) = y_1 in rank 2
        let c1 = AlgContext::new(AlgebraFamily::DegAffine, 1);
        let c2 = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let e = AlgElement::mu(&yv(c1, 1), &PolyElement::one(c1)).unwrap();
        assert!(e.eq_elem(&yv(c2, 1)).unwrap());
        // mu_{1,2}(1, T_1) = T_2 in rank 3
        let h1 = AlgContext::new(AlgebraFamily::Hecke, 1);
        let h2 = AlgContext::new(AlgebraFamily::Hecke, 2);
        let h3 = AlgContext::new(AlgebraFamily::Hecke, 3);
        let e = AlgElement::mu(&PolyElement::one(h1), &t(h2, 1)).unwrap();
        assert!(e.eq_elem(&t(h3, 2)).unwrap());
        // mu_{2,1}(T_1, 1) = T_1 in rank 3
        let e = AlgElement::mu(&t(h2, 1), &PolyElement::one(h1)).unwrap();
        assert!(e.eq_elem(&t(h3, 1)).unwrap());
    }

    #[test]
    fn specialize_q_examples() {
        let ctx = AlgContext::new(AlgebraFamily::Hecke, 2);
        let sq = t(ctx, 1).mul(&t(ctx, 1)).unwrap();
        let one = sq.specialize_q(&rat_int(1)).unwrap();
        assert!(one.eq_elem(&PolyElement::one(ctx)).unwrap());
        assert!(t(ctx, 1)
            .scale_poly(
                &LaurentPoly::q_pow(ctx.vt, 1)
                    .unwrap()
                    .sub(&LaurentPoly::q_pow(ctx.vt, -1).unwrap())
            )
            .specialize_q(&rat_int(1))
            .unwrap()
            .is_zero());
        assert!(sq.specialize_q(&rat(0, 1)).is_err());
    }

    #[test]
    fn hecke_specializes_to_symmetric_group_words() {
        let h3 = AlgContext::new(AlgebraFamily::Hecke, 3);
        let prod = t(h3, 1).mul(&t(h3, 2)).unwrap().mul(&t(h3, 1)).unwrap();
        let sp = prod.specialize_q(&rat_int(1)).unwrap();
        assert_eq!(sp.num_terms(), 1);
        let (w, _) = sp.terms().next().unwrap();
        let s1 = Permutation::adjacent(3, 1).unwrap();
        let s2 = Permutation::adjacent(3, 2).unwrap();
        assert_eq!(w, &s1.compose(&s2).compose(&s1));
    }

    #[test]
    fn shuffle_conjugation_swaps_mu_factors() {
        // T_{c_{m,n}} mu(a⊗b) T_{c_{m,n}}^{-1} = mu(b⊗a) in k[S_*]
        let c1 = AlgContext::new(AlgebraFamily::Sym, 1);
        let c2 = AlgContext::new(AlgebraFamily::Sym, 2);
        let c3 = AlgContext::new(AlgebraFamily::Sym, 3);
        let a = t(c2, 1);
        let b = PolyElement::one(c1);
        let ab = AlgElement::mu(&a, &b).unwrap();
        let ba = AlgElement::mu(&b, &a).unwrap();
        let shuf = Permutation::shuffle(2, 1);
        let cs = PolyElement::basis(c3, shuf.clone(), LaurentPoly::one(c3.vt));
        let cs_inv = PolyElement::basis(c3, shuf.inverse(), LaurentPoly::one(c3.vt));
        let conj = cs.mul(&ab).unwrap().mul(&cs_inv).unwrap();
        assert!(conj.eq_elem(&ba).unwrap());
    }

    #[test]
    fn basis_size_bound() {
        let ctx = AlgContext::new(AlgebraFamily::Hecke, 3);
        let mut acc = PolyElement::one(ctx);
        for _ in 0..6 {
            acc = acc
                .mul(&t(ctx, 1).add(&t(ctx, 2)).unwrap().add(&PolyElement::one(ctx)).unwrap())
                .unwrap();
        }
        assert!(acc.num_terms() <= 6);
    }

    #[test]
    fn straighten_word_orders_agree() {
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let w = GenWord::new(vec![
            GenLetter::T(1),
            GenLetter::Var(1, 2),
            GenLetter::T(1),
            GenLetter::Var(2, 1),
        ]);
        let a: PolyElement = straighten_with(ctx, &w, ReductionOrder::LeftToRight).unwrap();
        let b: PolyElement = straighten_with(ctx, &w, ReductionOrder::RightToLeft).unwrap();
        assert!(a.eq_elem(&b).unwrap());
    }

    #[test]
    fn invalid_letters_rejected() {
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let w = GenWord::new(vec![GenLetter::Var(1, -1)]);
        assert!(straighten::<LaurentPoly>(ctx, &w).is_err());
        let sym = AlgContext::new(AlgebraFamily::Sym, 2);
        assert!(PolyElement::generator_var(sym, 1, 1).is_err());
    }
}
