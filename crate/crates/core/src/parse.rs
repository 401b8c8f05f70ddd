//! Recursive-descent parser for the element expression grammar:
//!
//!   element := ['-'] term (('+'|'-') term)*
//!   term    := factor ('*' factor)*
//!   factor  := rational | 'q' ['^' int] | 'y[' i ']' ['^' int]
//!            | 'u[' i ']' ['^' int] | 't[' i ']' | '(' element ')'
//!
//! Whitespace-insensitive; '^' binds tighter than '*'. Parsing lowers to a
//! sum of generator words (for normal forms) or to a free-sequence
//! expression (for relation files).

use crate::error::Error;
use crate::freeseq::FreeExpr;
use crate::ring::{LaurentPoly, Rational, VarTable};
use crate::tower::{AlgContext, GenLetter, GenWord};

#[derive(Clone, Debug, PartialEq)]
pub enum Ast {
    Rational(Rational),
    QPow(i16),
    Var { letter: u8, index: usize, exp: i16 },
    Gen { index: usize },
    Neg(Box<Ast>),
    Sum(Box<Ast>, Box<Ast>),
    Prod(Box<Ast>, Box<Ast>),
}

struct Lexer<'a> {
    src: &'a [u8],
    pos: usize,
}

#[derive(Clone, Debug, PartialEq)]
enum Tok {
    Int(i64),
    Slash,
    Plus,
    Minus,
    Star,
    Caret,
    LParen,
    RParen,
    LBracket,
    RBracket,
    Letter(u8),
    End,
}

impl<'a> Lexer<'a> {
    fn new(src: &'a str) -> Self {
        Lexer { src: src.as_bytes(), pos: 0 }
    }

    fn error(&self, msg: &str) -> Error {
        let mut line = 1;
        let mut col = 1;
        for &b in &self.src[..self.pos.min(self.src.len())] {
            if b == b'\n' {
                line += 1;
                col = 1;
            } else {
                col += 1;
            }
        }
        Error::Parse { line, col, msg: msg.to_string() }
    }

    fn skip_ws(&mut self) {
        while self.pos < self.src.len() && self.src[self.pos].is_ascii_whitespace() {
            self.pos += 1;
        }
    }

    fn peek(&mut self) -> Result<Tok, Error> {
        let save = self.pos;
        let t = self.next()?;
        self.pos = save;
        Ok(t)
    }

    fn next(&mut self) -> Result<Tok, Error> {
        self.skip_ws();
        if self.pos >= self.src.len() {
            return Ok(Tok::End);
        }
        let b = self.src[self.pos];
        self.pos += 1;
        Ok(match b {
            b'+' => Tok::Plus,
            b'-' => Tok::Minus,
            b'*' => Tok::Star,
            b'^' => Tok::Caret,
            b'/' => Tok::Slash,
            b'(' => Tok::LParen,
            b')' => Tok::RParen,
            b'[' => Tok::LBracket,
            b']' => Tok::RBracket,
            b'q' => Tok::Letter(b'q'),
            b'y' => Tok::Letter(b'y'),
            b'u' => Tok::Letter(b'u'),
            b't' | b'T' => Tok::Letter(b't'),
            b'0'..=b'9' => {
                let mut v = i64::from(b - b'0');
                while self.pos < self.src.len() && self.src[self.pos].is_ascii_digit() {
                    v = v
                        .checked_mul(10)
                        .and_then(|v| v.checked_add(i64::from(self.src[self.pos] - b'0')))
                        .ok_or_else(|| self.error("integer literal too large"))?;
                    self.pos += 1;
                }
                Tok::Int(v)
            }
            other => {
                self.pos -= 1;
                return Err(self.error(&format!("unexpected character `{}`", other as char)));
            }
        })
    }

    /// A possibly signed integer (used after '^').
    fn int(&mut self) -> Result<i64, Error> {
        match self.next()? {
            Tok::Int(v) => Ok(v),
            Tok::Minus => match self.next()? {
                Tok::Int(v) => Ok(-v),
                _ => Err(self.error("expected integer after `-`")),
            },
            _ => Err(self.error("expected integer")),
        }
    }

    fn expect(&mut self, want: Tok, what: &str) -> Result<(), Error> {
        let got = self.next()?;
        if got != want {
            return Err(self.error(&format!("expected {what}")));
        }
        Ok(())
    }
}

pub fn parse_element(src: &str) -> Result<Ast, Error> {
    let mut lx = Lexer::new(src);
    let ast = element(&mut lx)?;
    match lx.next()? {
        Tok::End => Ok(ast),
        _ => Err(lx.error("trailing input")),
    }
}

fn element(lx: &mut Lexer) -> Result<Ast, Error> {
    let mut acc = match lx.peek()? {
        Tok::Minus => {
            lx.next()?;
            Ast::Neg(Box::new(term(lx)?))
        }
        _ => term(lx)?,
    };
    loop {
        match lx.peek()? {
            Tok::Plus => {
                lx.next()?;
                acc = Ast::Sum(Box::new(acc), Box::new(term(lx)?));
            }
            Tok::Minus => {
                lx.next()?;
                acc = Ast::Sum(Box::new(acc), Box::new(Ast::Neg(Box::new(term(lx)?))));
            }
            _ => return Ok(acc),
        }
    }
}

fn term(lx: &mut Lexer) -> Result<Ast, Error> {
    let mut acc = factor(lx)?;
    while lx.peek()? == Tok::Star {
        lx.next()?;
        acc = Ast::Prod(Box::new(acc), Box::new(factor(lx)?));
    }
    Ok(acc)
}

fn exponent(lx: &mut Lexer) -> Result<i16, Error> {
    if lx.peek()? == Tok::Caret {
        lx.next()?;
        let e = lx.int()?;
        i16::try_from(e).map_err(|_| lx.error("exponent out of range"))
    } else {
        Ok(1)
    }
}

fn factor(lx: &mut Lexer) -> Result<Ast, Error> {
    match lx.next()? {
        Tok::Int(n) => {
            // optional denominator: rational literal
            if lx.peek()? == Tok::Slash {
                lx.next()?;
                match lx.next()? {
                    Tok::Int(d) if d != 0 => {
                        Ok(Ast::Rational(Rational::new(n.into(), d.into())))
                    }
                    Tok::Int(_) => Err(lx.error("zero denominator")),
                    _ => Err(lx.error("expected integer denominator")),
                }
            } else {
                Ok(Ast::Rational(Rational::from_integer(n.into())))
            }
        }
        Tok::Letter(b'q') => Ok(Ast::QPow(exponent(lx)?)),
        Tok::Letter(letter @ (b'y' | b'u')) => {
            lx.expect(Tok::LBracket, "`[`")?;
            let i = lx.int()?;
            lx.expect(Tok::RBracket, "`]`")?;
            let index = usize::try_from(i).map_err(|_| lx.error("index must be positive"))?;
            if index == 0 {
                return Err(lx.error("index must be positive"));
            }
            Ok(Ast::Var { letter, index, exp: exponent(lx)? })
        }
        Tok::Letter(b't') => {
            lx.expect(Tok::LBracket, "`[`")?;
            let i = lx.int()?;
            lx.expect(Tok::RBracket, "`]`")?;
            let index = usize::try_from(i).map_err(|_| lx.error("index must be positive"))?;
            if index == 0 {
                return Err(lx.error("index must be positive"));
            }
            Ok(Ast::Gen { index })
        }
        Tok::LParen => {
            let inner = element(lx)?;
            lx.expect(Tok::RParen, "`)`")?;
            Ok(inner)
        }
        _ => Err(lx.error("expected a factor")),
    }
}

/// One addend of the distributed form: a scalar premultiplier is carried as
/// a Scalar letter inside the word.
pub type WordSum = Vec<GenWord>;

/// Distribute sums out of products, producing a flat sum of generator
/// words ready for straightening.
pub fn lower_to_words(ast: &Ast, ctx: &AlgContext) -> Result<WordSum, Error> {
    match ast {
        Ast::Rational(r) => Ok(vec![GenWord::new(vec![GenLetter::Scalar(
            LaurentPoly::constant(ctx.vt, r.clone()),
        )])]),
        Ast::QPow(e) => {
            if !ctx.vt.has_q {
                return Err(Error::NotInvertible { name: "q".into() });
            }
            Ok(vec![GenWord::new(vec![GenLetter::Scalar(LaurentPoly::q_pow(ctx.vt, *e)?)])])
        }
        Ast::Var { letter, index, exp } => {
            if !ctx.family.has_vars() || *letter != ctx.vt.letter {
                return Err(Error::InvalidLetter(format!(
                    "{}[{}]",
                    *letter as char, index
                )));
            }
            if *index > ctx.n {
                return Err(Error::IndexOutOfRange { index: *index, limit: ctx.n });
            }
            if *exp < 0 && !ctx.vt.laurent {
                return Err(Error::NotInvertible {
                    name: format!("{}[{}]", *letter as char, index),
                });
            }
            Ok(vec![GenWord::new(vec![GenLetter::Var(*index, *exp)])])
        }
        Ast::Gen { index } => {
            if *index + 1 > ctx.n {
                return Err(Error::IndexOutOfRange {
                    index: *index,
                    limit: ctx.n.saturating_sub(1),
                });
            }
            Ok(vec![GenWord::new(vec![GenLetter::T(*index)])])
        }
        Ast::Neg(inner) => {
            let mut words = lower_to_words(inner, ctx)?;
            for w in &mut words {
                w.letters.insert(
                    0,
                    GenLetter::Scalar(LaurentPoly::from_int(ctx.vt, -1)),
                );
            }
            Ok(words)
        }
        Ast::Sum(a, b) => {
            let mut words = lower_to_words(a, ctx)?;
            words.extend(lower_to_words(b, ctx)?);
            Ok(words)
        }
        Ast::Prod(a, b) => {
            let left = lower_to_words(a, ctx)?;
            let right = lower_to_words(b, ctx)?;
            let mut out = Vec::with_capacity(left.len() * right.len());
            for l in &left {
                for r in &right {
                    let mut letters = l.letters.clone();
                    letters.extend(r.letters.iter().cloned());
                    out.push(GenWord::new(letters));
                }
            }
            Ok(out)
        }
    }
}

/// Compile to a free-sequence expression of degree `n` over the generators
/// `t`, the family letter, and its formal inverse for Laurent families.
pub fn lower_to_free(ast: &Ast, ctx: &AlgContext) -> Result<FreeExpr, Error> {
    let n = ctx.n;
    let scalar_vt = VarTable::scalar(true);
    match ast {
        Ast::Rational(r) => Ok(FreeExpr::scale(
            LaurentPoly::constant(scalar_vt, r.clone()),
            FreeExpr::unit(n),
        )),
        Ast::QPow(e) => {
            if !ctx.vt.has_q {
                return Err(Error::NotInvertible { name: "q".into() });
            }
            Ok(FreeExpr::scale(LaurentPoly::q_pow(scalar_vt, *e)?, FreeExpr::unit(n)))
        }
        Ast::Var { letter, index, exp } => {
            if !ctx.family.has_vars() || *letter != ctx.vt.letter {
                return Err(Error::InvalidLetter(format!("{}[{}]", *letter as char, index)));
            }
            if *index > n {
                return Err(Error::IndexOutOfRange { index: *index, limit: n });
            }
            let name = if *exp >= 0 {
                (*letter as char).to_string()
            } else if ctx.vt.laurent {
                format!("{}inv", *letter as char)
            } else {
                return Err(Error::NotInvertible {
                    name: format!("{}[{}]", *letter as char, index),
                });
            };
            if *exp == 0 {
                return Ok(FreeExpr::unit(n));
            }
            let single = FreeExpr::gen(&name, 1).windowed(index - 1, n - index);
            let mut acc = single.clone();
            for _ in 1..exp.unsigned_abs() {
                acc = FreeExpr::prod(acc, single.clone());
            }
            Ok(acc)
        }
        Ast::Gen { index } => {
            if *index + 1 > n {
                return Err(Error::IndexOutOfRange {
                    index: *index,
                    limit: n.saturating_sub(1),
                });
            }
            Ok(FreeExpr::gen("t", 2).windowed(index - 1, n - index - 1))
        }
        Ast::Neg(inner) => Ok(FreeExpr::scale(
            LaurentPoly::from_int(scalar_vt, -1),
            lower_to_free(inner, ctx)?,
        )),
        Ast::Sum(a, b) => Ok(FreeExpr::sum(lower_to_free(a, ctx)?, lower_to_free(b, ctx)?)),
        Ast::Prod(a, b) => Ok(FreeExpr::prod(lower_to_free(a, ctx)?, lower_to_free(b, ctx)?)),
    }
}

/// Convenience: parse and straighten in one go.
pub fn parse_to_element(
    src: &str,
    ctx: AlgContext,
) -> Result<crate::tower::PolyElement, Error> {
    let ast = parse_element(src)?;
    let words = lower_to_words(&ast, &ctx)?;
    let mut acc = crate::tower::PolyElement::zero(ctx);
    for w in &words {
        acc = acc.add(&crate::tower::straighten(ctx, w)?)?;
    }
    Ok(acc)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::tower::AlgebraFamily;

    #[test]
    fn parse_word_example() {
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let e = parse_to_element("t[1]*y[1]", ctx).unwrap();
        assert_eq!(e.to_string(), "y[2]*T[1] + 1");
    }

    #[test]
    fn parse_scalar_polynomial() {
        let ctx = AlgContext::new(AlgebraFamily::Hecke, 2);
        let e = parse_to_element("q - q^-1", ctx).unwrap();
        assert_eq!(e.to_string(), "q - q^-1");
    }

    #[test]
    fn invertibility_enforced() {
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        assert!(matches!(
            parse_to_element("y[1]^-1", ctx),
            Err(Error::NotInvertible { .. })
        ));
        let affine = AlgContext::new(AlgebraFamily::AffineHecke, 2);
        assert!(parse_to_element("y[1]^-1", affine).is_ok());
    }

    #[test]
    fn parse_errors_carry_position() {
        match parse_element("t[1] % 2") {
            Err(Error::Parse { line: 1, col, .. }) => assert_eq!(col, 6),
            other => panic!("unexpected {other:?}"),
        }
        assert!(parse_element("t[1").is_err());
        assert!(parse_element("").is_err());
        assert!(parse_element("1/0").is_err());
    }

    #[test]
    fn distribution_and_parens() {
        let ctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        let a = parse_to_element("(1 + t[1])*y[2]", ctx).unwrap();
        let b = parse_to_element("y[2] + t[1]*y[2]", ctx).unwrap();
        assert!(a.eq_elem(&b).unwrap());
        // unary minus
        let c = parse_to_element("-y[1] + y[1]", ctx).unwrap();
        assert!(c.is_zero());
    }

    #[test]
    fn rationals_and_powers() {
        let ctx = AlgContext::new(AlgebraFamily::AffineHecke, 2);
        let a = parse_to_element("3/2*y[1]^2*q^-2", ctx).unwrap();
        let b = parse_to_element("3/2 * q^-2 * y[1] * y[1]", ctx).unwrap();
        assert!(a.eq_elem(&b).unwrap());
    }

    #[test]
    fn index_bounds_checked() {
        let ctx = AlgContext::new(AlgebraFamily::Hecke, 2);
        assert!(parse_to_element("t[2]", ctx).is_err());
        let dctx = AlgContext::new(AlgebraFamily::DegAffine, 2);
        assert!(parse_to_element("y[3]", dctx).is_err());
        assert!(parse_to_element("u[1]", dctx).is_err());
    }

    #[test]
    fn free_compilation_matches_word_compilation() {
        use crate::freeseq::{eval_expr, AlgTarget, SequenceTarget};
        let ctx = AlgContext::new(AlgebraFamily::AffineHecke, 3);
        let target: AlgTarget<crate::ring::LaurentPoly> =
            AlgTarget::new(AlgebraFamily::AffineHecke);
        let asn = target.canonical_assignment();
        for src in [
            "t[1]*y[1]*t[1]",
            "y[2]^-2 + q*t[2]",
            "(t[1] + t[2])*(y[3] - 1)",
        ] {
            let ast = parse_element(src).unwrap();
            let via_words = parse_to_element(src, ctx).unwrap();
            let free = lower_to_free(&ast, &ctx).unwrap();
            let via_free = eval_expr(&free, &asn, &target).unwrap();
            assert!(
                via_words.eq_elem(&via_free).unwrap(),
                "mismatch for {src}: {via_words} vs {via_free}"
            );
            let _ = target.render(&via_free);
        }
    }
}
