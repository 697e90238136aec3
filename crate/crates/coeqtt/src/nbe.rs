//! Normalization by evaluation.
//!
//! Terms evaluate into `Value`s with no remaining beta redexes; closures
//! suspend bodies under binders. Elimination of a neutral pushes onto its
//! spine. `quote` reads values back to beta-normal core terms, and the
//! conversion check is type-directed at the top (eta for functions, pairs
//! and Unit) with structural comparison below.

use crate::sig::Signature;
use crate::term::{AxiomName, Hint, Level, Term, P};
use std::sync::Arc;

#[derive(Clone, Debug)]
pub enum Value {
    U0,
    U1,
    Pi(P<Value>, Closure),
    Lam(Closure),
    Sg(P<Value>, Closure),
    Pair(P<Value>, P<Value>),
    Id(P<Value>, P<Value>, P<Value>),
    Refl(P<Value>),
    Coeq(P<Value>, P<Value>),
    Inj(P<Value>),
    Glue(P<Value>, P<Value>, P<Value>),
    Empty,
    Unit,
    Tt,
    Sum(P<Value>, P<Value>),
    Inl(P<Value>),
    Inr(P<Value>),
    Nat,
    Zero,
    Suc(P<Value>),
    Neutral(Head, Vec<Elim>),
}

#[derive(Clone, Debug)]
pub enum Head {
    /// de Bruijn level of a context variable.
    Var(usize),
    Axiom(AxiomName),
    /// A `glue` path blocks J: no reduction rule consumes it (the glue
    /// computation rule is the propositional `cgluebeta` constant), so a
    /// J-redex over glue is a stuck value headed by the glue itself.
    Glue(P<Value>, P<Value>, P<Value>),
}

/// One elimination frame of a neutral spine.
#[derive(Clone, Debug)]
pub enum Elim {
    App(P<Value>),
    Fst,
    Snd,
    /// motive, base case, lhs, rhs; the stuck path is the head.
    J(Level, P<Value>, P<Value>, P<Value>, P<Value>),
    /// motive, point case, glue case; the stuck scrutinee is the head.
    CoeqInd(Level, P<Value>, P<Value>, P<Value>),
    EmptyInd(Level, P<Value>),
    UnitInd(Level, P<Value>, P<Value>),
    SumInd(Level, P<Value>, P<Value>, P<Value>),
    NatInd(Level, P<Value>, P<Value>, P<Value>),
}

/// Evaluation environment: one value per enclosing binder, innermost first.
#[derive(Clone, Debug, Default)]
pub struct Env(Option<Arc<EnvNode>>);

#[derive(Debug)]
struct EnvNode {
    head: P<Value>,
    tail: Env,
}

impl Env {
    pub fn nil() -> Env {
        Env(None)
    }

    pub fn push(&self, v: P<Value>) -> Env {
        Env(Some(Arc::new(EnvNode {
            head: v,
            tail: self.clone(),
        })))
    }

    pub fn lookup(&self, idx: usize) -> P<Value> {
        let mut cur = self;
        let mut i = idx;
        loop {
            let node = cur.0.as_ref().expect("evaluate: unbound variable");
            if i == 0 {
                return node.head.clone();
            }
            i -= 1;
            cur = &node.tail;
        }
    }

    pub fn len(&self) -> usize {
        let mut n = 0;
        let mut cur = self;
        while let Some(node) = cur.0.as_ref() {
            n += 1;
            cur = &node.tail;
        }
        n
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_none()
    }
}

#[derive(Clone, Debug)]
pub struct Closure {
    pub env: Env,
    pub hint: Hint,
    pub body: P<Term>,
}

impl Closure {
    pub fn new(env: &Env, hint: &Hint, body: &P<Term>) -> Closure {
        Closure {
            env: env.clone(),
            hint: hint.clone(),
            body: body.clone(),
        }
    }

    pub fn apply(&self, sig: &Signature, arg: P<Value>) -> P<Value> {
        eval(sig, &self.env.push(arg), &self.body)
    }
}

pub fn vvar(level: usize) -> P<Value> {
    Arc::new(Value::Neutral(Head::Var(level), Vec::new()))
}

fn extend(head: &Head, spine: &[Elim], elim: Elim) -> P<Value> {
    let mut sp = spine.to_vec();
    sp.push(elim);
    Arc::new(Value::Neutral(head.clone(), sp))
}

pub fn v_app(sig: &Signature, f: &P<Value>, a: P<Value>) -> P<Value> {
    match f.as_ref() {
        Value::Lam(clo) => clo.apply(sig, a),
        Value::Neutral(h, sp) => extend(h, sp, Elim::App(a)),
        _ => unreachable!("apply: not a function"),
    }
}

pub fn v_fst(_sig: &Signature, p: &P<Value>) -> P<Value> {
    match p.as_ref() {
        Value::Pair(a, _) => a.clone(),
        Value::Neutral(h, sp) => extend(h, sp, Elim::Fst),
        _ => unreachable!("fst: not a pair"),
    }
}

pub fn v_snd(_sig: &Signature, p: &P<Value>) -> P<Value> {
    match p.as_ref() {
        Value::Pair(_, b) => b.clone(),
        Value::Neutral(h, sp) => extend(h, sp, Elim::Snd),
        _ => unreachable!("snd: not a pair"),
    }
}

/// J applied to refl reduces to the base case at the refl point; J applied
/// to a neutral path is neutral.
pub fn v_j(
    sig: &Signature,
    l: Level,
    motive: &P<Value>,
    base: &P<Value>,
    lhs: &P<Value>,
    rhs: &P<Value>,
    path: &P<Value>,
) -> P<Value> {
    match path.as_ref() {
        Value::Refl(v) => v_app(sig, base, v.clone()),
        Value::Neutral(h, sp) => extend(
            h,
            sp,
            Elim::J(l, motive.clone(), base.clone(), lhs.clone(), rhs.clone()),
        ),
        Value::Glue(a, b, s) => extend(
            &Head::Glue(a.clone(), b.clone(), s.clone()),
            &[],
            Elim::J(l, motive.clone(), base.clone(), lhs.clone(), rhs.clone()),
        ),
        _ => unreachable!("J: not a path"),
    }
}

/// `cind l P f e (inj a)` computes to `f a`; on a neutral scrutinee the
/// eliminator is stuck. The glue constructor inhabits the identity type, so
/// it never appears as a coequalizer scrutinee.
pub fn v_cind(
    sig: &Signature,
    l: Level,
    motive: &P<Value>,
    pcase: &P<Value>,
    gcase: &P<Value>,
    scrut: &P<Value>,
) -> P<Value> {
    match scrut.as_ref() {
        Value::Inj(a) => v_app(sig, pcase, a.clone()),
        Value::Neutral(h, sp) => extend(
            h,
            sp,
            Elim::CoeqInd(l, motive.clone(), pcase.clone(), gcase.clone()),
        ),
        _ => unreachable!("cind: not a coequalizer element"),
    }
}

pub fn v_eabsurd(_sig: &Signature, l: Level, motive: &P<Value>, scrut: &P<Value>) -> P<Value> {
    match scrut.as_ref() {
        Value::Neutral(h, sp) => extend(h, sp, Elim::EmptyInd(l, motive.clone())),
        _ => unreachable!("eabsurd: no canonical Empty value exists"),
    }
}

pub fn v_uind(
    _sig: &Signature,
    l: Level,
    motive: &P<Value>,
    case: &P<Value>,
    scrut: &P<Value>,
) -> P<Value> {
    match scrut.as_ref() {
        Value::Tt => case.clone(),
        Value::Neutral(h, sp) => extend(h, sp, Elim::UnitInd(l, motive.clone(), case.clone())),
        _ => unreachable!("uind: not a unit element"),
    }
}

pub fn v_scase(
    sig: &Signature,
    l: Level,
    motive: &P<Value>,
    lcase: &P<Value>,
    rcase: &P<Value>,
    scrut: &P<Value>,
) -> P<Value> {
    match scrut.as_ref() {
        Value::Inl(a) => v_app(sig, lcase, a.clone()),
        Value::Inr(b) => v_app(sig, rcase, b.clone()),
        Value::Neutral(h, sp) => extend(
            h,
            sp,
            Elim::SumInd(l, motive.clone(), lcase.clone(), rcase.clone()),
        ),
        _ => unreachable!("scase: not a sum element"),
    }
}

pub fn v_nind(
    sig: &Signature,
    l: Level,
    motive: &P<Value>,
    zcase: &P<Value>,
    scase: &P<Value>,
    scrut: &P<Value>,
) -> P<Value> {
    match scrut.as_ref() {
        Value::Zero => zcase.clone(),
        Value::Suc(n) => {
            let rec = v_nind(sig, l, motive, zcase, scase, n);
            v_app(sig, &v_app(sig, scase, n.clone()), rec)
        }
        Value::Neutral(h, sp) => extend(
            h,
            sp,
            Elim::NatInd(l, motive.clone(), zcase.clone(), scase.clone()),
        ),
        _ => unreachable!("nind: not a natural number"),
    }
}

pub fn eval(sig: &Signature, env: &Env, t: &Term) -> P<Value> {
    match t {
        Term::Var(i) => env.lookup(*i),
        Term::U0 => Arc::new(Value::U0),
        Term::U1 => Arc::new(Value::U1),
        Term::Pi(h, a, b) => Arc::new(Value::Pi(eval(sig, env, a), Closure::new(env, h, b))),
        Term::Lam(h, b) => Arc::new(Value::Lam(Closure::new(env, h, b))),
        Term::App(f, a) => {
            let fv = eval(sig, env, f);
            let av = eval(sig, env, a);
            v_app(sig, &fv, av)
        }
        Term::Sg(h, a, b) => Arc::new(Value::Sg(eval(sig, env, a), Closure::new(env, h, b))),
        Term::Pair(a, b) => Arc::new(Value::Pair(eval(sig, env, a), eval(sig, env, b))),
        Term::Fst(t) => v_fst(sig, &eval(sig, env, t)),
        Term::Snd(t) => v_snd(sig, &eval(sig, env, t)),
        Term::Id(a, x, y) => Arc::new(Value::Id(
            eval(sig, env, a),
            eval(sig, env, x),
            eval(sig, env, y),
        )),
        Term::Refl(t) => Arc::new(Value::Refl(eval(sig, env, t))),
        Term::J(l, m, d, x, y, p) => {
            let mv = eval(sig, env, m);
            let dv = eval(sig, env, d);
            let xv = eval(sig, env, x);
            let yv = eval(sig, env, y);
            let pv = eval(sig, env, p);
            v_j(sig, *l, &mv, &dv, &xv, &yv, &pv)
        }
        Term::Coeq(a, r) => Arc::new(Value::Coeq(eval(sig, env, a), eval(sig, env, r))),
        Term::Inj(t) => Arc::new(Value::Inj(eval(sig, env, t))),
        Term::Glue(a, b, s) => Arc::new(Value::Glue(
            eval(sig, env, a),
            eval(sig, env, b),
            eval(sig, env, s),
        )),
        Term::CoeqInd(l, m, f, e, scrut) => {
            let mv = eval(sig, env, m);
            let fv = eval(sig, env, f);
            let ev = eval(sig, env, e);
            let sv = eval(sig, env, scrut);
            v_cind(sig, *l, &mv, &fv, &ev, &sv)
        }
        Term::Empty => Arc::new(Value::Empty),
        Term::EmptyInd(l, m, scrut) => {
            let mv = eval(sig, env, m);
            let sv = eval(sig, env, scrut);
            v_eabsurd(sig, *l, &mv, &sv)
        }
        Term::Unit => Arc::new(Value::Unit),
        Term::Tt => Arc::new(Value::Tt),
        Term::UnitInd(l, m, c, scrut) => {
            let mv = eval(sig, env, m);
            let cv = eval(sig, env, c);
            let sv = eval(sig, env, scrut);
            v_uind(sig, *l, &mv, &cv, &sv)
        }
        Term::Sum(a, b) => Arc::new(Value::Sum(eval(sig, env, a), eval(sig, env, b))),
        Term::Inl(t) => Arc::new(Value::Inl(eval(sig, env, t))),
        Term::Inr(t) => Arc::new(Value::Inr(eval(sig, env, t))),
        Term::SumInd(l, m, f, g, scrut) => {
            let mv = eval(sig, env, m);
            let fv = eval(sig, env, f);
            let gv = eval(sig, env, g);
            let sv = eval(sig, env, scrut);
            v_scase(sig, *l, &mv, &fv, &gv, &sv)
        }
        Term::Nat => Arc::new(Value::Nat),
        Term::Zero => Arc::new(Value::Zero),
        Term::Suc(t) => Arc::new(Value::Suc(eval(sig, env, t))),
        Term::NatInd(l, m, z, s, scrut) => {
            let mv = eval(sig, env, m);
            let zv = eval(sig, env, z);
            let sv = eval(sig, env, s);
            let nv = eval(sig, env, scrut);
            v_nind(sig, *l, &mv, &zv, &sv, &nv)
        }
        Term::Axiom(a) => Arc::new(Value::Neutral(Head::Axiom(*a), Vec::new())),
        Term::Const(i, _) => sig.body_value(*i),
    }
}

/// Read a value back to a beta-normal term at the given binder depth.
pub fn quote(sig: &Signature, depth: usize, v: &Value) -> Term {
    match v {
        Value::U0 => Term::U0,
        Value::U1 => Term::U1,
        Value::Pi(a, b) => {
            let body = b.apply(sig, vvar(depth));
            Term::Pi(
                b.hint.clone(),
                Arc::new(quote(sig, depth, a)),
                Arc::new(quote(sig, depth + 1, &body)),
            )
        }
        Value::Lam(b) => {
            let body = b.apply(sig, vvar(depth));
            Term::Lam(b.hint.clone(), Arc::new(quote(sig, depth + 1, &body)))
        }
        Value::Sg(a, b) => {
            let body = b.apply(sig, vvar(depth));
            Term::Sg(
                b.hint.clone(),
                Arc::new(quote(sig, depth, a)),
                Arc::new(quote(sig, depth + 1, &body)),
            )
        }
        Value::Pair(a, b) => Term::Pair(
            Arc::new(quote(sig, depth, a)),
            Arc::new(quote(sig, depth, b)),
        ),
        Value::Id(a, x, y) => Term::Id(
            Arc::new(quote(sig, depth, a)),
            Arc::new(quote(sig, depth, x)),
            Arc::new(quote(sig, depth, y)),
        ),
        Value::Refl(t) => Term::Refl(Arc::new(quote(sig, depth, t))),
        Value::Coeq(a, r) => Term::Coeq(
            Arc::new(quote(sig, depth, a)),
            Arc::new(quote(sig, depth, r)),
        ),
        Value::Inj(t) => Term::Inj(Arc::new(quote(sig, depth, t))),
        Value::Glue(a, b, s) => Term::Glue(
            Arc::new(quote(sig, depth, a)),
            Arc::new(quote(sig, depth, b)),
            Arc::new(quote(sig, depth, s)),
        ),
        Value::Empty => Term::Empty,
        Value::Unit => Term::Unit,
        Value::Tt => Term::Tt,
        Value::Sum(a, b) => Term::Sum(
            Arc::new(quote(sig, depth, a)),
            Arc::new(quote(sig, depth, b)),
        ),
        Value::Inl(t) => Term::Inl(Arc::new(quote(sig, depth, t))),
        Value::Inr(t) => Term::Inr(Arc::new(quote(sig, depth, t))),
        Value::Nat => Term::Nat,
        Value::Zero => Term::Zero,
        Value::Suc(t) => Term::Suc(Arc::new(quote(sig, depth, t))),
        Value::Neutral(h, spine) => {
            let mut acc = match h {
                Head::Var(lvl) => {
                    debug_assert!(*lvl < depth, "quote: variable escapes depth");
                    Term::Var(depth - 1 - lvl)
                }
                Head::Axiom(a) => Term::Axiom(*a),
                Head::Glue(a, b, s) => Term::Glue(
                    Arc::new(quote(sig, depth, a)),
                    Arc::new(quote(sig, depth, b)),
                    Arc::new(quote(sig, depth, s)),
                ),
            };
            for e in spine {
                acc = match e {
                    Elim::App(a) => {
                        Term::App(Arc::new(acc), Arc::new(quote(sig, depth, a)))
                    }
                    Elim::Fst => Term::Fst(Arc::new(acc)),
                    Elim::Snd => Term::Snd(Arc::new(acc)),
                    Elim::J(l, m, d, x, y) => Term::J(
                        *l,
                        Arc::new(quote(sig, depth, m)),
                        Arc::new(quote(sig, depth, d)),
                        Arc::new(quote(sig, depth, x)),
                        Arc::new(quote(sig, depth, y)),
                        Arc::new(acc),
                    ),
                    Elim::CoeqInd(l, m, f, e2) => Term::CoeqInd(
                        *l,
                        Arc::new(quote(sig, depth, m)),
                        Arc::new(quote(sig, depth, f)),
                        Arc::new(quote(sig, depth, e2)),
                        Arc::new(acc),
                    ),
                    Elim::EmptyInd(l, m) => {
                        Term::EmptyInd(*l, Arc::new(quote(sig, depth, m)), Arc::new(acc))
                    }
                    Elim::UnitInd(l, m, c) => Term::UnitInd(
                        *l,
                        Arc::new(quote(sig, depth, m)),
                        Arc::new(quote(sig, depth, c)),
                        Arc::new(acc),
                    ),
                    Elim::SumInd(l, m, f, g) => Term::SumInd(
                        *l,
                        Arc::new(quote(sig, depth, m)),
                        Arc::new(quote(sig, depth, f)),
                        Arc::new(quote(sig, depth, g)),
                        Arc::new(acc),
                    ),
                    Elim::NatInd(l, m, z, s) => Term::NatInd(
                        *l,
                        Arc::new(quote(sig, depth, m)),
                        Arc::new(quote(sig, depth, z)),
                        Arc::new(quote(sig, depth, s)),
                        Arc::new(acc),
                    ),
                };
            }
            acc
        }
    }
}

/// Variance for structural type comparison. `Sub` allows U0 <= U1
/// covariantly in function codomains and in both pair components; function
/// domains stay invariant.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Variance {
    Exact,
    Sub,
}

/// Untyped structural comparison of values. Used for neutral spines and at
/// rigid types. Eta shortcuts: lambda against neutral compares the body
/// against the applied neutral, pair against neutral compares projections,
/// and `tt` is equal to anything it is compared against (the two sides of a
/// comparison share a type by precondition, and `tt` only inhabits Unit,
/// where eta makes everything equal).
fn veq(sig: &Signature, depth: usize, v: &P<Value>, w: &P<Value>, var: Variance) -> bool {
    if Arc::ptr_eq(v, w) {
        return true;
    }
    use Value::*;
    match (v.as_ref(), w.as_ref()) {
        (Tt, _) | (_, Tt) => true,
        (U0, U0) | (U1, U1) => true,
        (U0, U1) => var == Variance::Sub,
        (Pi(a, b), Pi(a2, b2)) => {
            veq(sig, depth, a, a2, Variance::Exact) && veq(sig, depth, a2, a, Variance::Exact) && {
                let fresh = vvar(depth);
                let bv = b.apply(sig, fresh.clone());
                let bv2 = b2.apply(sig, fresh);
                veq(sig, depth + 1, &bv, &bv2, var)
            }
        }
        (Sg(a, b), Sg(a2, b2)) => {
            veq(sig, depth, a, a2, var) && {
                let fresh = vvar(depth);
                let bv = b.apply(sig, fresh.clone());
                let bv2 = b2.apply(sig, fresh);
                veq(sig, depth + 1, &bv, &bv2, var)
            }
        }
        (Lam(b), Lam(b2)) => {
            let fresh = vvar(depth);
            let bv = b.apply(sig, fresh.clone());
            let bv2 = b2.apply(sig, fresh);
            veq(sig, depth + 1, &bv, &bv2, Variance::Exact)
        }
        (Lam(b), Neutral(_, _)) => {
            let fresh = vvar(depth);
            let bv = b.apply(sig, fresh.clone());
            let wv = v_app(sig, w, fresh);
            veq(sig, depth + 1, &bv, &wv, Variance::Exact)
        }
        (Neutral(_, _), Lam(b)) => {
            let fresh = vvar(depth);
            let vv = v_app(sig, v, fresh.clone());
            let bv = b.apply(sig, fresh);
            veq(sig, depth + 1, &vv, &bv, Variance::Exact)
        }
        (Pair(a, b), Pair(a2, b2)) => {
            veq(sig, depth, a, a2, Variance::Exact) && veq(sig, depth, b, b2, Variance::Exact)
        }
        (Pair(a, b), Neutral(_, _)) => {
            veq(sig, depth, a, &v_fst(sig, w), Variance::Exact)
                && veq(sig, depth, b, &v_snd(sig, w), Variance::Exact)
        }
        (Neutral(_, _), Pair(a, b)) => {
            veq(sig, depth, &v_fst(sig, v), a, Variance::Exact)
                && veq(sig, depth, &v_snd(sig, v), b, Variance::Exact)
        }
        (Id(a, x, y), Id(a2, x2, y2)) => {
            veq(sig, depth, a, a2, Variance::Exact)
                && veq(sig, depth, x, x2, Variance::Exact)
                && veq(sig, depth, y, y2, Variance::Exact)
        }
        (Refl(t), Refl(t2)) => veq(sig, depth, t, t2, Variance::Exact),
        (Coeq(a, r), Coeq(a2, r2)) | (Sum(a, r), Sum(a2, r2)) => {
            veq(sig, depth, a, a2, Variance::Exact) && veq(sig, depth, r, r2, Variance::Exact)
        }
        (Inj(t), Inj(t2)) | (Suc(t), Suc(t2)) | (Inl(t), Inl(t2)) | (Inr(t), Inr(t2)) => {
            veq(sig, depth, t, t2, Variance::Exact)
        }
        (Glue(a, b, s), Glue(a2, b2, s2)) => {
            veq(sig, depth, a, a2, Variance::Exact)
                && veq(sig, depth, b, b2, Variance::Exact)
                && veq(sig, depth, s, s2, Variance::Exact)
        }
        (Empty, Empty) | (Unit, Unit) | (Nat, Nat) | (Zero, Zero) => true,
        (Neutral(h, sp), Neutral(h2, sp2)) => {
            head_eq(sig, depth, h, h2) && sp.len() == sp2.len() && {
                sp.iter()
                    .zip(sp2.iter())
                    .all(|(e, e2)| elim_eq(sig, depth, e, e2))
            }
        }
        _ => false,
    }
}

fn head_eq(sig: &Signature, depth: usize, h: &Head, h2: &Head) -> bool {
    match (h, h2) {
        (Head::Var(a), Head::Var(b)) => a == b,
        (Head::Axiom(a), Head::Axiom(b)) => a == b,
        (Head::Glue(a, b, s), Head::Glue(a2, b2, s2)) => {
            veq(sig, depth, a, a2, Variance::Exact)
                && veq(sig, depth, b, b2, Variance::Exact)
                && veq(sig, depth, s, s2, Variance::Exact)
        }
        _ => false,
    }
}

fn elim_eq(sig: &Signature, depth: usize, e: &Elim, e2: &Elim) -> bool {
    let x = Variance::Exact;
    match (e, e2) {
        (Elim::App(a), Elim::App(a2)) => veq(sig, depth, a, a2, x),
        (Elim::Fst, Elim::Fst) | (Elim::Snd, Elim::Snd) => true,
        (Elim::J(l, m, d, a, b), Elim::J(l2, m2, d2, a2, b2)) => {
            l == l2
                && veq(sig, depth, m, m2, x)
                && veq(sig, depth, d, d2, x)
                && veq(sig, depth, a, a2, x)
                && veq(sig, depth, b, b2, x)
        }
        (Elim::CoeqInd(l, m, f, g), Elim::CoeqInd(l2, m2, f2, g2))
        | (Elim::SumInd(l, m, f, g), Elim::SumInd(l2, m2, f2, g2))
        | (Elim::NatInd(l, m, f, g), Elim::NatInd(l2, m2, f2, g2)) => {
            l == l2
                && veq(sig, depth, m, m2, x)
                && veq(sig, depth, f, f2, x)
                && veq(sig, depth, g, g2, x)
        }
        (Elim::EmptyInd(l, m), Elim::EmptyInd(l2, m2)) => l == l2 && veq(sig, depth, m, m2, x),
        (Elim::UnitInd(l, m, c), Elim::UnitInd(l2, m2, c2)) => {
            l == l2 && veq(sig, depth, m, m2, x) && veq(sig, depth, c, c2, x)
        }
        _ => false,
    }
}

/// Directional subtyping between type values: U0 <= U1, covariant in
/// function codomains and both pair components, invariant in function
/// domains and everywhere else.
pub fn subtype(sig: &Signature, depth: usize, a: &P<Value>, b: &P<Value>) -> bool {
    veq(sig, depth, a, b, Variance::Sub)
}

/// Symmetric type equality (no universe slack).
pub fn equal_ty(sig: &Signature, depth: usize, a: &P<Value>, b: &P<Value>) -> bool {
    veq(sig, depth, a, b, Variance::Exact)
}

/// The definitional-equality check, type-directed for the eta laws:
/// at function type compare bodies on a fresh variable, at pair type
/// compare projections, at Unit everything is equal. At universes and all
/// rigid or neutral types fall back to structural comparison.
pub fn convertible(sig: &Signature, depth: usize, ty: &P<Value>, v: &P<Value>, w: &P<Value>) -> bool {
    if Arc::ptr_eq(v, w) {
        return true;
    }
    match ty.as_ref() {
        Value::Pi(_, b) => {
            let fresh = vvar(depth);
            let ty2 = b.apply(sig, fresh.clone());
            let vv = v_app(sig, v, fresh.clone());
            let wv = v_app(sig, w, fresh);
            convertible(sig, depth + 1, &ty2, &vv, &wv)
        }
        Value::Sg(a, b) => {
            let v1 = v_fst(sig, v);
            let w1 = v_fst(sig, w);
            if !convertible(sig, depth, a, &v1, &w1) {
                return false;
            }
            let ty2 = b.apply(sig, v1);
            let v2 = v_snd(sig, v);
            let w2 = v_snd(sig, w);
            convertible(sig, depth, &ty2, &v2, &w2)
        }
        Value::Unit => true,
        _ => veq(sig, depth, v, w, Variance::Exact),
    }
}
