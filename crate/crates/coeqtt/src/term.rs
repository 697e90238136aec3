//! The elaborated core language.
//!
//! Terms are scope-safe: variables are de Bruijn indices into the enclosing
//! binder telescope. Substitution is never performed syntactically; the
//! evaluator (see `nbe`) is the only thing that instantiates binders.
//! Binders carry a name hint which is ignored by equality.

use std::fmt;
use std::sync::Arc;

pub type P<T> = Arc<T>;
pub type Hint = Arc<str>;

/// Universe level tag carried by eliminators whose motive may target either
/// universe. Large elimination (level 1) is required by the corpus: the
/// category equivalence instantiates coequalizer induction at the constant
/// family returning `U0`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum Level {
    L0,
    L1,
}

impl Level {
    pub fn suffix(self) -> &'static str {
        match self {
            Level::L0 => "0",
            Level::L1 => "1",
        }
    }
}

/// The three postulated constants. They are ordinary constants with no
/// reduction behaviour; their (closed) types are installed by `axioms`.
#[derive(Clone, Copy, PartialEq, Eq, Debug, PartialOrd, Ord, Hash)]
pub enum AxiomName {
    Funext,
    Univalence,
    CoeqGlueBeta,
}

pub const ALL_AXIOMS: [AxiomName; 3] = [
    AxiomName::Funext,
    AxiomName::Univalence,
    AxiomName::CoeqGlueBeta,
];

impl AxiomName {
    pub fn as_str(self) -> &'static str {
        match self {
            AxiomName::Funext => "funext",
            AxiomName::Univalence => "univalence",
            AxiomName::CoeqGlueBeta => "cgluebeta",
        }
    }

    pub fn from_str(s: &str) -> Option<AxiomName> {
        match s {
            "funext" => Some(AxiomName::Funext),
            "univalence" => Some(AxiomName::Univalence),
            "cgluebeta" => Some(AxiomName::CoeqGlueBeta),
            _ => None,
        }
    }
}

impl fmt::Display for AxiomName {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

/// One variant per core form; types are terms.
#[derive(Clone, Debug)]
pub enum Term {
    /// de Bruijn index.
    Var(usize),
    U0,
    U1,
    /// Dependent function former; codomain under one binder.
    Pi(Hint, P<Term>, P<Term>),
    Lam(Hint, P<Term>),
    App(P<Term>, P<Term>),
    /// Dependent pair former; second component type under one binder.
    Sg(Hint, P<Term>, P<Term>),
    Pair(P<Term>, P<Term>),
    Fst(P<Term>),
    Snd(P<Term>),
    /// Identity former: ambient type, lhs, rhs.
    Id(P<Term>, P<Term>, P<Term>),
    Refl(P<Term>),
    /// Unbased J: motive (3 binders via lambdas), base case (1 binder),
    /// lhs, rhs, path.
    J(Level, P<Term>, P<Term>, P<Term>, P<Term>, P<Term>),
    /// Coequalizer former: carrier, relation.
    Coeq(P<Term>, P<Term>),
    Inj(P<Term>),
    /// Path constructor with both endpoints explicit.
    Glue(P<Term>, P<Term>, P<Term>),
    /// Eliminator: motive, point case, glue case, scrutinee.
    CoeqInd(Level, P<Term>, P<Term>, P<Term>, P<Term>),
    Empty,
    /// motive, scrutinee.
    EmptyInd(Level, P<Term>, P<Term>),
    Unit,
    Tt,
    /// motive, tt case, scrutinee.
    UnitInd(Level, P<Term>, P<Term>, P<Term>),
    Sum(P<Term>, P<Term>),
    Inl(P<Term>),
    Inr(P<Term>),
    /// motive, left case, right case, scrutinee.
    SumInd(Level, P<Term>, P<Term>, P<Term>, P<Term>),
    Nat,
    Zero,
    Suc(P<Term>),
    /// motive, zero case, successor case, scrutinee.
    NatInd(Level, P<Term>, P<Term>, P<Term>, P<Term>),
    Axiom(AxiomName),
    /// Reference into the signature: declaration index plus name.
    Const(usize, Hint),
}

impl Term {
    /// Alpha comparison: identical up to bound-name hints. De Bruijn makes
    /// this structural equality with hints skipped.
    pub fn alpha_eq(&self, other: &Term) -> bool {
        use Term::*;
        match (self, other) {
            (Var(i), Var(j)) => i == j,
            (U0, U0) | (U1, U1) => true,
            (Pi(_, a, b), Pi(_, a2, b2)) | (Sg(_, a, b), Sg(_, a2, b2)) => {
                a.alpha_eq(a2) && b.alpha_eq(b2)
            }
            (Lam(_, b), Lam(_, b2)) => b.alpha_eq(b2),
            (App(f, a), App(f2, a2)) | (Pair(f, a), Pair(f2, a2)) => {
                f.alpha_eq(f2) && a.alpha_eq(a2)
            }
            (Fst(t), Fst(t2)) | (Snd(t), Snd(t2)) | (Inj(t), Inj(t2)) => t.alpha_eq(t2),
            (Refl(t), Refl(t2)) | (Suc(t), Suc(t2)) | (Inl(t), Inl(t2)) | (Inr(t), Inr(t2)) => {
                t.alpha_eq(t2)
            }
            (Id(a, x, y), Id(a2, x2, y2)) | (Glue(a, x, y), Glue(a2, x2, y2)) => {
                a.alpha_eq(a2) && x.alpha_eq(x2) && y.alpha_eq(y2)
            }
            (J(l, m, d, x, y, p), J(l2, m2, d2, x2, y2, p2)) => {
                l == l2
                    && m.alpha_eq(m2)
                    && d.alpha_eq(d2)
                    && x.alpha_eq(x2)
                    && y.alpha_eq(y2)
                    && p.alpha_eq(p2)
            }
            (Coeq(a, r), Coeq(a2, r2)) | (Sum(a, r), Sum(a2, r2)) => {
                a.alpha_eq(a2) && r.alpha_eq(r2)
            }
            (CoeqInd(l, m, f, e, t), CoeqInd(l2, m2, f2, e2, t2))
            | (SumInd(l, m, f, e, t), SumInd(l2, m2, f2, e2, t2))
            | (NatInd(l, m, f, e, t), NatInd(l2, m2, f2, e2, t2)) => {
                l == l2
                    && m.alpha_eq(m2)
                    && f.alpha_eq(f2)
                    && e.alpha_eq(e2)
                    && t.alpha_eq(t2)
            }
            (Empty, Empty) | (Unit, Unit) | (Tt, Tt) | (Nat, Nat) | (Zero, Zero) => true,
            (EmptyInd(l, m, t), EmptyInd(l2, m2, t2)) => {
                l == l2 && m.alpha_eq(m2) && t.alpha_eq(t2)
            }
            (UnitInd(l, m, c, t), UnitInd(l2, m2, c2, t2)) => {
                l == l2 && m.alpha_eq(m2) && c.alpha_eq(c2) && t.alpha_eq(t2)
            }
            (Axiom(a), Axiom(b)) => a == b,
            (Const(i, _), Const(j, _)) => i == j,
            _ => false,
        }
    }

    /// Collect the axiom constants syntactically present in this term.
    pub fn direct_axioms(&self, out: &mut std::collections::BTreeSet<AxiomName>) {
        use Term::*;
        match self {
            Axiom(a) => {
                out.insert(*a);
            }
            Var(_) | U0 | U1 | Empty | Unit | Tt | Nat | Zero | Const(_, _) => {}
            Pi(_, a, b) | Sg(_, a, b) | App(a, b) | Pair(a, b) | Coeq(a, b) | Sum(a, b) => {
                a.direct_axioms(out);
                b.direct_axioms(out);
            }
            Lam(_, t) | Fst(t) | Snd(t) | Refl(t) | Inj(t) | Suc(t) | Inl(t) | Inr(t) => {
                t.direct_axioms(out)
            }
            Id(a, b, c) | Glue(a, b, c) => {
                a.direct_axioms(out);
                b.direct_axioms(out);
                c.direct_axioms(out);
            }
            J(_, m, d, x, y, p) => {
                m.direct_axioms(out);
                d.direct_axioms(out);
                x.direct_axioms(out);
                y.direct_axioms(out);
                p.direct_axioms(out);
            }
            CoeqInd(_, m, a, b, t) | SumInd(_, m, a, b, t) | NatInd(_, m, a, b, t) => {
                m.direct_axioms(out);
                a.direct_axioms(out);
                b.direct_axioms(out);
                t.direct_axioms(out);
            }
            EmptyInd(_, m, t) => {
                m.direct_axioms(out);
                t.direct_axioms(out);
            }
            UnitInd(_, m, c, t) => {
                m.direct_axioms(out);
                c.direct_axioms(out);
                t.direct_axioms(out);
            }
        }
    }

    /// Collect signature references syntactically present in this term.
    pub fn direct_consts(&self, out: &mut Vec<usize>) {
        use Term::*;
        match self {
            Const(i, _) => out.push(*i),
            Axiom(_) | Var(_) | U0 | U1 | Empty | Unit | Tt | Nat | Zero => {}
            Pi(_, a, b) | Sg(_, a, b) | App(a, b) | Pair(a, b) | Coeq(a, b) | Sum(a, b) => {
                a.direct_consts(out);
                b.direct_consts(out);
            }
            Lam(_, t) | Fst(t) | Snd(t) | Refl(t) | Inj(t) | Suc(t) | Inl(t) | Inr(t) => {
                t.direct_consts(out)
            }
            Id(a, b, c) | Glue(a, b, c) => {
                a.direct_consts(out);
                b.direct_consts(out);
                c.direct_consts(out);
            }
            J(_, m, d, x, y, p) => {
                m.direct_consts(out);
                d.direct_consts(out);
                x.direct_consts(out);
                y.direct_consts(out);
                p.direct_consts(out);
            }
            CoeqInd(_, m, a, b, t) | SumInd(_, m, a, b, t) | NatInd(_, m, a, b, t) => {
                m.direct_consts(out);
                a.direct_consts(out);
                b.direct_consts(out);
                t.direct_consts(out);
            }
            EmptyInd(_, m, t) => {
                m.direct_consts(out);
                t.direct_consts(out);
            }
            UnitInd(_, m, c, t) => {
                m.direct_consts(out);
                c.direct_consts(out);
                t.direct_consts(out);
            }
        }
    }

    /// True when every variable reference resolves within `depth` binders.
    pub fn well_scoped(&self, depth: usize) -> bool {
        use Term::*;
        match self {
            Var(i) => *i < depth,
            U0 | U1 | Empty | Unit | Tt | Nat | Zero | Axiom(_) | Const(_, _) => true,
            Pi(_, a, b) | Sg(_, a, b) => a.well_scoped(depth) && b.well_scoped(depth + 1),
            Lam(_, b) => b.well_scoped(depth + 1),
            App(a, b) | Pair(a, b) | Coeq(a, b) | Sum(a, b) => {
                a.well_scoped(depth) && b.well_scoped(depth)
            }
            Fst(t) | Snd(t) | Refl(t) | Inj(t) | Suc(t) | Inl(t) | Inr(t) => t.well_scoped(depth),
            Id(a, b, c) | Glue(a, b, c) => {
                a.well_scoped(depth) && b.well_scoped(depth) && c.well_scoped(depth)
            }
            J(_, m, d, x, y, p) => {
                m.well_scoped(depth)
                    && d.well_scoped(depth)
                    && x.well_scoped(depth)
                    && y.well_scoped(depth)
                    && p.well_scoped(depth)
            }
            CoeqInd(_, m, a, b, t) | SumInd(_, m, a, b, t) | NatInd(_, m, a, b, t) => {
                m.well_scoped(depth)
                    && a.well_scoped(depth)
                    && b.well_scoped(depth)
                    && t.well_scoped(depth)
            }
            EmptyInd(_, m, t) => m.well_scoped(depth) && t.well_scoped(depth),
            UnitInd(_, m, c, t) => {
                m.well_scoped(depth) && c.well_scoped(depth) && t.well_scoped(depth)
            }
        }
    }
}

impl PartialEq for Term {
    fn eq(&self, other: &Self) -> bool {
        self.alpha_eq(other)
    }
}

impl Eq for Term {}

pub fn hint(s: &str) -> Hint {
    Arc::from(s)
}
