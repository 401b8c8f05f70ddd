//! Deterministic random samples for property tests and the confluence
//! checks: polynomials, tower elements and generator words.

use rand::Rng;

use crate::ring::{rat, LaurentPoly, Rational, VarTable};
use crate::tower::{AlgContext, AlgElement, Coefficient, GenLetter, GenWord};

pub fn rational(rng: &mut impl Rng) -> Rational {
    let n = rng.gen_range(-6i64..=6);
    let d = rng.gen_range(1i64..=4);
    rat(n, d)
}

pub fn nonzero_rational(rng: &mut impl Rng) -> Rational {
    loop {
        let r = rational(rng);
        if !num::Zero::is_zero(&r) {
            return r;
        }
    }
}

/// Random sparse polynomial with at most `terms` monomials of total degree
/// at most `deg` (negative exponents drawn only in invertible slots).
pub fn poly(rng: &mut impl Rng, vt: VarTable, deg: i16, terms: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero(vt);
    for _ in 0..terms {
        let mut expo = smallvec::SmallVec::new();
        for slot in 0..vt.width() {
            let lo = if vt.slot_invertible(slot) { -deg } else { 0 };
            expo.push(rng.gen_range(lo..=deg));
        }
        let m = LaurentPoly::monomial(vt, expo, rational(rng)).expect("slots respected");
        p = p.add(&m);
    }
    p
}

pub fn nonzero_poly(rng: &mut impl Rng, vt: VarTable, deg: i16, terms: usize) -> LaurentPoly {
    loop {
        let p = poly(rng, vt, deg, terms);
        if !p.is_zero() {
            return p;
        }
    }
}

/// Random generator word for a tower context.
pub fn word(rng: &mut impl Rng, ctx: AlgContext, len: usize, deg: i16) -> GenWord {
    let mut letters = Vec::with_capacity(len);
    for _ in 0..len {
        let kind = rng.gen_range(0..3);
        let letter = match kind {
            0 if ctx.n >= 2 => GenLetter::T(rng.gen_range(1..ctx.n)),
            1 if ctx.family.has_vars() => {
                let lo = if ctx.vt.laurent { -deg } else { 1 };
                let mut e = rng.gen_range(lo..=deg);
                if e == 0 {
                    e = 1;
                }
                GenLetter::Var(rng.gen_range(1..=ctx.n), e)
            }
            _ => GenLetter::Scalar(poly(rng, ctx.vt, deg.min(2), 2)),
        };
        letters.push(letter);
    }
    GenWord::new(letters)
}

/// Random normal-form element with a handful of terms.
pub fn element<C: Coefficient>(
    rng: &mut impl Rng,
    ctx: AlgContext,
    nterms: usize,
    deg: i16,
) -> AlgElement<C> {
    let perms = crate::perm::Permutation::all(ctx.n);
    let mut out = AlgElement::zero(ctx);
    for _ in 0..nterms {
        let w = perms[rng.gen_range(0..perms.len())].clone();
        let c = C::from_poly(poly(rng, ctx.vt, deg, 2));
        out = out.add(&AlgElement::basis(ctx, w, c)).expect("same ctx");
    }
    out
}
