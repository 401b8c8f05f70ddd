//! Elements of free multiplicative sequences, their evaluation into any
//! concrete tower, and the built-in relation suites for every presentation
//! the towers carry.
//!
//! The free sequence is represented syntactically only; equality questions
//! are always answered after evaluation into a concrete target, where
//! disjoint-support commutation holds automatically.

use std::collections::BTreeMap;
use std::fmt;

use crate::error::Error;
use crate::ring::{LaurentPoly, VarTable};
use crate::tower::{AlgContext, AlgElement, AlgebraFamily, Coefficient};

/// AST of an element of a free multiplicative sequence. Every node has a
/// well-defined degree; `Mu` concatenates degrees.
#[derive(Clone, Debug)]
pub enum FreeExpr {
    Gen { name: String, degree: usize },
    Unit(usize),
    Scale(LaurentPoly, Box<FreeExpr>),
    Sum(Box<FreeExpr>, Box<FreeExpr>),
    Prod(Box<FreeExpr>, Box<FreeExpr>),
    Mu(Box<FreeExpr>, Box<FreeExpr>),
}

impl FreeExpr {
    pub fn gen(name: &str, degree: usize) -> Self {
        FreeExpr::Gen { name: name.into(), degree }
    }

    pub fn unit(degree: usize) -> Self {
        FreeExpr::Unit(degree)
    }

    pub fn scale(c: LaurentPoly, e: FreeExpr) -> Self {
        FreeExpr::Scale(c, Box::new(e))
    }

    pub fn sum(a: FreeExpr, b: FreeExpr) -> Self {
        FreeExpr::Sum(Box::new(a), Box::new(b))
    }

    pub fn prod(a: FreeExpr, b: FreeExpr) -> Self {
        FreeExpr::Prod(Box::new(a), Box::new(b))
    }

    pub fn prod3(a: FreeExpr, b: FreeExpr, c: FreeExpr) -> Self {
        Self::prod(Self::prod(a, b), c)
    }

    pub fn mu(a: FreeExpr, b: FreeExpr) -> Self {
        FreeExpr::Mu(Box::new(a), Box::new(b))
    }

    pub fn minus(a: FreeExpr, b: FreeExpr) -> Self {
        Self::sum(a, Self::neg(b))
    }

    pub fn neg(e: FreeExpr) -> Self {
        let vt = VarTable::scalar(true);
        Self::scale(LaurentPoly::from_int(vt, -1), e)
    }

    /// Embed a degree-`d` expression into degree `left + d + right` with
    /// units on both sides.
    pub fn windowed(self, left: usize, right: usize) -> Self {
        let mut e = self;
        if left > 0 {
            e = Self::mu(Self::unit(left), e);
        }
        if right > 0 {
            e = Self::mu(e, Self::unit(right));
        }
        e
    }

    pub fn degree(&self) -> Result<usize, Error> {
        match self {
            FreeExpr::Gen { degree, .. } => Ok(*degree),
            FreeExpr::Unit(d) => Ok(*d),
            FreeExpr::Scale(_, e) => e.degree(),
            FreeExpr::Sum(a, b) | FreeExpr::Prod(a, b) => {
                let (da, db) = (a.degree()?, b.degree()?);
                if da != db {
                    return Err(Error::DegreeMismatch(format!("{da} vs {db}")));
                }
                Ok(da)
            }
            FreeExpr::Mu(a, b) => Ok(a.degree()? + b.degree()?),
        }
    }
}

/// Map from generator names to target elements of the declared degree.
#[derive(Clone)]
pub struct Assignment<E> {
    map: BTreeMap<String, (usize, E)>,
}

impl<E: Clone> Assignment<E> {
    pub fn new() -> Self {
        Assignment { map: BTreeMap::new() }
    }

    pub fn with(mut self, name: &str, degree: usize, elem: E) -> Self {
        self.map.insert(name.into(), (degree, elem));
        self
    }

    pub fn get(&self, name: &str) -> Option<&(usize, E)> {
        self.map.get(name)
    }
}

impl<E: Clone> Default for Assignment<E> {
    fn default() -> Self {
        Self::new()
    }
}

/// What a concrete multiplicative sequence must offer to evaluate free
/// expressions: a unit per degree, products, the tensor embeddings, and a
/// zero test. Algebra towers and operator towers both implement this.
pub trait SequenceTarget {
    type Elem: Clone;
    fn unit(&self, degree: usize) -> Result<Self::Elem, Error>;
    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error>;
    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error>;
    fn mu(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error>;
    fn scale(&self, c: &LaurentPoly, a: &Self::Elem) -> Result<Self::Elem, Error>;
    fn is_zero(&self, a: &Self::Elem) -> Result<bool, Error>;
    fn render(&self, a: &Self::Elem) -> String;
}

/// Structural evaluation of an expression under an assignment.
pub fn eval_expr<T: SequenceTarget>(
    e: &FreeExpr,
    asn: &Assignment<T::Elem>,
    target: &T,
) -> Result<T::Elem, Error> {
    match e {
        FreeExpr::Gen { name, degree } => {
            let (d, elem) = asn
                .get(name)
                .ok_or_else(|| Error::UnassignedGenerator(name.clone()))?;
            if d != degree {
                return Err(Error::DegreeMismatch(format!(
                    "generator {name}: declared {degree}, assigned {d}"
                )));
            }
            Ok(elem.clone())
        }
        FreeExpr::Unit(d) => target.unit(*d),
        FreeExpr::Scale(c, inner) => {
            let v = eval_expr(inner, asn, target)?;
            target.scale(c, &v)
        }
        FreeExpr::Sum(a, b) => {
            e.degree()?;
            let (va, vb) = (eval_expr(a, asn, target)?, eval_expr(b, asn, target)?);
            target.add(&va, &vb)
        }
        FreeExpr::Prod(a, b) => {
            e.degree()?;
            let (va, vb) = (eval_expr(a, asn, target)?, eval_expr(b, asn, target)?);
            target.mul(&va, &vb)
        }
        FreeExpr::Mu(a, b) => {
            let (va, vb) = (eval_expr(a, asn, target)?, eval_expr(b, asn, target)?);
            target.mu(&va, &vb)
        }
    }
}

/// A named list of expressions, each asserted to evaluate to zero.
#[derive(Clone, Debug)]
pub struct RelationSuite {
    pub name: String,
    pub relations: Vec<(String, FreeExpr)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum RelationStatus {
    Pass,
    Fail { residue: String },
    Error { message: String },
}

#[derive(Clone, Debug)]
pub struct SuiteReport {
    pub suite: String,
    pub entries: Vec<(String, RelationStatus)>,
}

impl SuiteReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|(_, s)| *s == RelationStatus::Pass)
    }
}

impl fmt::Display for SuiteReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (id, status) in &self.entries {
            match status {
                RelationStatus::Pass => writeln!(f, "PASS {}/{}", self.suite, id)?,
                RelationStatus::Fail { residue } => {
                    writeln!(f, "FAIL {}/{} residue={}", self.suite, id, residue)?
                }
                RelationStatus::Error { message } => {
                    writeln!(f, "ERROR {}/{} {}", self.suite, id, message)?
                }
            }
        }
        Ok(())
    }
}

/// Evaluate every relation of a suite; failures carry the nonzero residue.
pub fn check_suite<T: SequenceTarget>(
    suite: &RelationSuite,
    asn: &Assignment<T::Elem>,
    target: &T,
) -> SuiteReport {
    let entries = suite
        .relations
        .iter()
        .map(|(id, e)| {
            let status = match eval_expr(e, asn, target) {
                Ok(v) => match target.is_zero(&v) {
                    Ok(true) => RelationStatus::Pass,
                    Ok(false) => RelationStatus::Fail { residue: target.render(&v) },
                    Err(err) => RelationStatus::Error { message: err.to_string() },
                },
                Err(err) => RelationStatus::Error { message: err.to_string() },
            };
            (id.clone(), status)
        })
        .collect();
    SuiteReport { suite: suite.name.clone(), entries }
}

/// The presentations with built-in suites.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum SuiteName {
    Sym,
    Braid,
    Hecke,
    Cross,
    AffineSym,
    SemiAffineSym,
    DegAffine,
    AffineBraid,
    AffineHecke,
}

impl SuiteName {
    pub const ALL: [SuiteName; 9] = [
        SuiteName::Sym,
        SuiteName::Braid,
        SuiteName::Hecke,
        SuiteName::Cross,
        SuiteName::AffineSym,
        SuiteName::SemiAffineSym,
        SuiteName::DegAffine,
        SuiteName::AffineBraid,
        SuiteName::AffineHecke,
    ];

    pub fn parse(s: &str) -> Result<Self, Error> {
        Ok(match s {
            "sym" => SuiteName::Sym,
            "braid" => SuiteName::Braid,
            "hecke" => SuiteName::Hecke,
            "cross" => SuiteName::Cross,
            "affineSym" => SuiteName::AffineSym,
            "semiAffineSym" => SuiteName::SemiAffineSym,
            "degAHA" => SuiteName::DegAffine,
            "affineBraid" => SuiteName::AffineBraid,
            "affineHecke" => SuiteName::AffineHecke,
            other => return Err(Error::UnknownSuite(other.to_string())),
        })
    }

    pub fn as_str(&self) -> &'static str {
        match self {
            SuiteName::Sym => "sym",
            SuiteName::Braid => "braid",
            SuiteName::Hecke => "hecke",
            SuiteName::Cross => "cross",
            SuiteName::AffineSym => "affineSym",
            SuiteName::SemiAffineSym => "semiAffineSym",
            SuiteName::DegAffine => "degAHA",
            SuiteName::AffineBraid => "affineBraid",
            SuiteName::AffineHecke => "affineHecke",
        }
    }

    fn letter(&self) -> Option<&'static str> {
        match self {
            SuiteName::Sym | SuiteName::Braid | SuiteName::Hecke => None,
            SuiteName::Cross | SuiteName::AffineSym | SuiteName::SemiAffineSym => Some("u"),
            _ => Some("y"),
        }
    }

    fn quadratic(&self) -> Option<Quad> {
        match self {
            SuiteName::Sym
            | SuiteName::Cross
            | SuiteName::AffineSym
            | SuiteName::SemiAffineSym
            | SuiteName::DegAffine => Some(Quad::Involution),
            SuiteName::Hecke | SuiteName::AffineHecke => Some(Quad::Hecke),
            SuiteName::Braid | SuiteName::AffineBraid => None,
        }
    }

    fn cross_relation(&self) -> Option<CrossRel> {
        match self {
            SuiteName::Cross | SuiteName::AffineSym | SuiteName::SemiAffineSym => {
                Some(CrossRel::Commute)
            }
            SuiteName::DegAffine => Some(CrossRel::Degenerate),
            SuiteName::AffineBraid | SuiteName::AffineHecke => Some(CrossRel::Affine),
            _ => None,
        }
    }

    /// The tower the suite's canonical assignment evaluates in. Braid-type
    /// suites have no tower of their own and use the Hecke quotients.
    pub fn canonical_family(&self) -> AlgebraFamily {
        match self {
            SuiteName::Sym => AlgebraFamily::Sym,
            SuiteName::Braid | SuiteName::Hecke => AlgebraFamily::Hecke,
            SuiteName::Cross | SuiteName::SemiAffineSym => AlgebraFamily::CrossPoly,
            SuiteName::AffineSym => AlgebraFamily::CrossLaurent,
            SuiteName::DegAffine => AlgebraFamily::DegAffine,
            SuiteName::AffineBraid | SuiteName::AffineHecke => AlgebraFamily::AffineHecke,
        }
    }
}

#[derive(Clone, Copy)]
enum Quad {
    Involution,
    Hecke,
}

#[derive(Clone, Copy)]
enum CrossRel {
    /// t * mu(x⊗1) - mu(1⊗x) * t
    Commute,
    /// t * mu(y⊗1) - mu(1⊗y) * t - 1
    Degenerate,
    /// t * mu(y⊗1) * t - mu(1⊗y)
    Affine,
}

fn scalar_q_table() -> VarTable {
    VarTable::scalar(true)
}

fn t() -> FreeExpr {
    FreeExpr::gen("t", 2)
}

fn x(name: &str) -> FreeExpr {
    FreeExpr::gen(name, 1)
}

/// `(t - q)(t + q^{-1})` expanded: `t*t - (q - q^{-1})*t - 1`.
fn hecke_quadratic() -> FreeExpr {
    let vt = scalar_q_table();
    let qmq = LaurentPoly::q_pow(vt, 1)
        .unwrap()
        .sub(&LaurentPoly::q_pow(vt, -1).unwrap());
    FreeExpr::minus(
        FreeExpr::minus(FreeExpr::prod(t(), t()), FreeExpr::scale(qmq, t())),
        FreeExpr::unit(2),
    )
}

fn involution() -> FreeExpr {
    FreeExpr::minus(FreeExpr::prod(t(), t()), FreeExpr::unit(2))
}

/// Braid difference in degree 3 built from mu embeddings of `t`.
fn braid_difference() -> FreeExpr {
    let t1 = || FreeExpr::mu(t(), FreeExpr::unit(1));
    let t2 = || FreeExpr::mu(FreeExpr::unit(1), t());
    FreeExpr::minus(
        FreeExpr::prod3(t1(), t2(), t1()),
        FreeExpr::prod3(t2(), t1(), t2()),
    )
}

fn cross_difference(letter: &str, kind: CrossRel) -> FreeExpr {
    let x1 = || FreeExpr::mu(x(letter), FreeExpr::unit(1));
    let x2 = || FreeExpr::mu(FreeExpr::unit(1), x(letter));
    match kind {
        CrossRel::Commute => FreeExpr::minus(FreeExpr::prod(t(), x1()), FreeExpr::prod(x2(), t())),
        CrossRel::Degenerate => FreeExpr::minus(
            FreeExpr::minus(FreeExpr::prod(t(), x1()), FreeExpr::prod(x2(), t())),
            FreeExpr::unit(2),
        ),
        CrossRel::Affine => FreeExpr::minus(FreeExpr::prod3(t(), x1(), t()), x2()),
    }
}

/// The exact relation list of the named presentation, as displayed.
pub fn builtin_suite(name: SuiteName) -> RelationSuite {
    let mut relations = Vec::new();
    match name.quadratic() {
        Some(Quad::Involution) => relations.push(("involution".to_string(), involution())),
        Some(Quad::Hecke) => relations.push(("quadratic".to_string(), hecke_quadratic())),
        None => {}
    }
    if let (Some(letter), Some(kind)) = (name.letter(), name.cross_relation()) {
        relations.push(("cross".to_string(), cross_difference(letter, kind)));
    }
    relations.push(("braid".to_string(), braid_difference()));
    RelationSuite { name: name.as_str().to_string(), relations }
}

/// The full defining-relation list of the presentation at rank `n`: all
/// window embeddings of the displayed relations plus the disjoint-index
/// commutation relations.
pub fn presentation_suite(name: SuiteName, n: usize) -> RelationSuite {
    let mut relations: Vec<(String, FreeExpr)> = Vec::new();
    let quad = name.quadratic();
    let letter = name.letter();
    let cross = name.cross_relation();

    for i in 1..n {
        if let Some(q) = quad {
            let rel = match q {
                Quad::Involution => involution(),
                Quad::Hecke => hecke_quadratic(),
            };
            relations.push((format!("quad.{i}"), rel.windowed(i - 1, n - i - 1)));
        }
    }
    for i in 1..n.saturating_sub(1) {
        relations.push((format!("braid.{i}"), braid_difference().windowed(i - 1, n - i - 2)));
    }
    // distant braid generators commute
    for i in 1..n {
        for j in i + 2..n {
            let ti = t().windowed(i - 1, n - i - 1);
            let tj = t().windowed(j - 1, n - j - 1);
            relations.push((
                format!("tt.{i}.{j}"),
                FreeExpr::minus(FreeExpr::prod(ti.clone(), tj.clone()), FreeExpr::prod(tj, ti)),
            ));
        }
    }
    if let (Some(l), Some(kind)) = (letter, cross) {
        for i in 1..n {
            relations.push((
                format!("cross.{i}"),
                cross_difference(l, kind).windowed(i - 1, n - i - 1),
            ));
        }
        // the scalar generators commute
        for i in 1..=n {
            for j in i + 1..=n {
                let xi = x(l).windowed(i - 1, n - i);
                let xj = x(l).windowed(j - 1, n - j);
                relations.push((
                    format!("xx.{i}.{j}"),
                    FreeExpr::minus(FreeExpr::prod(xi.clone(), xj.clone()), FreeExpr::prod(xj, xi)),
                ));
            }
        }
        // t_i commutes with x_j for j outside {i, i+1}
        for i in 1..n {
            for j in 1..=n {
                if j == i || j == i + 1 {
                    continue;
                }
                let ti = t().windowed(i - 1, n - i - 1);
                let xj = x(l).windowed(j - 1, n - j);
                relations.push((
                    format!("tx.{i}.{j}"),
                    FreeExpr::minus(FreeExpr::prod(ti.clone(), xj.clone()), FreeExpr::prod(xj, ti)),
                ));
            }
        }
    }
    RelationSuite { name: format!("{}[{}]", name.as_str(), n), relations }
}

/// Evaluation target backed by a tower algebra family. `force_q` adjoins q
/// to the coefficients of families that do not carry it.
pub struct AlgTarget<C: Coefficient> {
    pub family: AlgebraFamily,
    pub force_q: bool,
    _marker: std::marker::PhantomData<C>,
}

impl<C: Coefficient> AlgTarget<C> {
    pub fn new(family: AlgebraFamily) -> Self {
        AlgTarget { family, force_q: false, _marker: std::marker::PhantomData }
    }

    pub fn with_q(family: AlgebraFamily) -> Self {
        AlgTarget { family, force_q: true, _marker: std::marker::PhantomData }
    }

    pub fn context(&self, n: usize) -> AlgContext {
        if self.force_q {
            AlgContext::with_options(self.family, n, true, self.family.var_letter())
        } else {
            AlgContext::new(self.family, n)
        }
    }

    /// Canonical generator images: `t -> T_1` in rank 2, `y/u -> y_1` in
    /// rank 1 (plus `yinv/uinv -> y_1^{-1}` for Laurent families).
    pub fn canonical_assignment(&self) -> Assignment<AlgElement<C>> {
        let mut asn = Assignment::new().with(
            "t",
            2,
            AlgElement::generator_t(self.context(2), 1).unwrap(),
        );
        if self.family.has_vars() {
            let c1 = self.context(1);
            let letter = if self.family.var_letter() == b'u' { "u" } else { "y" };
            asn = asn.with(letter, 1, AlgElement::generator_var(c1, 1, 1).unwrap());
            if self.family.laurent_vars() {
                asn = asn.with(
                    &format!("{letter}inv"),
                    1,
                    AlgElement::generator_var(c1, 1, -1).unwrap(),
                );
            }
        }
        asn
    }
}

impl<C: Coefficient> SequenceTarget for AlgTarget<C> {
    type Elem = AlgElement<C>;

    fn unit(&self, degree: usize) -> Result<Self::Elem, Error> {
        Ok(AlgElement::one(self.context(degree)))
    }

    fn add(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error> {
        a.add(b)
    }

    fn mul(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error> {
        a.mul(b)
    }

    fn mu(&self, a: &Self::Elem, b: &Self::Elem) -> Result<Self::Elem, Error> {
        AlgElement::mu(a, b)
    }

    fn scale(&self, c: &LaurentPoly, a: &Self::Elem) -> Result<Self::Elem, Error> {
        let lifted = if c.table() == a.ctx.vt {
            c.clone()
        } else if c.table().has_q && !a.ctx.vt.has_q {
            // constants survive; a genuine q does not
            match c.as_constant() {
                Some(k) => LaurentPoly::constant(a.ctx.vt, k),
                None => return Err(Error::VarTableMismatch),
            }
        } else {
            c.shift_embed(0, a.ctx.vt)
        };
        Ok(a.scale_poly(&lifted))
    }

    fn is_zero(&self, a: &Self::Elem) -> Result<bool, Error> {
        Ok(a.is_zero())
    }

    fn render(&self, a: &Self::Elem) -> String {
        if a.is_zero() {
            return "0".to_string();
        }
        a.terms()
            .map(|(w, c)| format!("[{}]*{w}", c.render()))
            .collect::<Vec<_>>()
            .join(" + ")
    }
}

/// Run a built-in suite under its canonical assignment into its own tower.
pub fn run_builtin_suite(name: SuiteName) -> SuiteReport {
    let target: AlgTarget<LaurentPoly> = AlgTarget::new(name.canonical_family());
    let suite = builtin_suite(name);
    let asn = target.canonical_assignment();
    check_suite(&suite, &asn, &target)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::LaurentPoly;

    #[test]
    fn builtin_sizes() {
        assert_eq!(builtin_suite(SuiteName::DegAffine).relations.len(), 3);
        assert_eq!(builtin_suite(SuiteName::AffineHecke).relations.len(), 3);
        assert_eq!(builtin_suite(SuiteName::Braid).relations.len(), 1);
        assert_eq!(builtin_suite(SuiteName::Sym).relations.len(), 2);
        assert_eq!(builtin_suite(SuiteName::Hecke).relations.len(), 2);
        assert_eq!(builtin_suite(SuiteName::Cross).relations.len(), 3);
        assert_eq!(builtin_suite(SuiteName::AffineBraid).relations.len(), 2);
    }

    #[test]
    fn all_builtin_suites_pass_canonically() {
        for name in SuiteName::ALL {
            let report = run_builtin_suite(name);
            assert!(report.all_pass(), "suite {:?} failed:\n{report}", name);
        }
    }

    #[test]
    fn eval_examples() {
        // Gen(y) under y -> y_1 in rank 1
        let target: AlgTarget<LaurentPoly> = AlgTarget::new(AlgebraFamily::DegAffine);
        let asn = target.canonical_assignment();
        let e = FreeExpr::gen("y", 1);
        let v = eval_expr(&e, &asn, &target).unwrap();
        let want = AlgElement::generator_var(target.context(1), 1, 1).unwrap();
        assert!(v.eq_elem(&want).unwrap());

        // Mu(Gen(t), Unit(1)) under t -> s_1 lands in rank 3
        let sym: AlgTarget<LaurentPoly> = AlgTarget::new(AlgebraFamily::Sym);
        let asn = sym.canonical_assignment();
        let e = FreeExpr::mu(FreeExpr::gen("t", 2), FreeExpr::unit(1));
        let v = eval_expr(&e, &asn, &sym).unwrap();
        assert_eq!(v.ctx.n, 3);
        let want = AlgElement::generator_t(sym.context(3), 1).unwrap();
        assert!(v.eq_elem(&want).unwrap());
    }

    #[test]
    fn hecke_quadratic_fails_on_symmetric_assignment() {
        // t -> s_1 in k[S_*] with q adjoined: the quadratic relation has a
        // nonzero residue computed by the evaluator.
        let target: AlgTarget<LaurentPoly> = AlgTarget::with_q(AlgebraFamily::Sym);
        let asn = target.canonical_assignment();
        let report = check_suite(&builtin_suite(SuiteName::Hecke), &asn, &target);
        let quad = &report.entries[0];
        assert!(matches!(quad.1, RelationStatus::Fail { .. }));
        let braid = &report.entries[1];
        assert_eq!(braid.1, RelationStatus::Pass);
    }

    #[test]
    fn unassigned_generator_is_error() {
        let target: AlgTarget<LaurentPoly> = AlgTarget::new(AlgebraFamily::Sym);
        let asn: Assignment<AlgElement<LaurentPoly>> = Assignment::new();
        let report = check_suite(&builtin_suite(SuiteName::Sym), &asn, &target);
        assert!(report
            .entries
            .iter()
            .all(|(_, s)| matches!(s, RelationStatus::Error { .. })));
    }

    #[test]
    fn presentation_suites_pass_at_rank_4() {
        for name in [
            SuiteName::Sym,
            SuiteName::Hecke,
            SuiteName::Cross,
            SuiteName::AffineSym,
            SuiteName::DegAffine,
            SuiteName::AffineHecke,
        ] {
            let target: AlgTarget<LaurentPoly> = AlgTarget::new(name.canonical_family());
            let suite = presentation_suite(name, 4);
            let asn = target.canonical_assignment();
            let report = check_suite(&suite, &asn, &target);
            assert!(report.all_pass(), "presentation {:?} rank 4:\n{report}", name);
        }
    }

    #[test]
    fn degree_bookkeeping() {
        let e = FreeExpr::mu(FreeExpr::gen("t", 2), FreeExpr::gen("y", 1));
        assert_eq!(e.degree().unwrap(), 3);
        let bad = FreeExpr::sum(FreeExpr::unit(1), FreeExpr::unit(2));
        assert!(bad.degree().is_err());
    }
}
