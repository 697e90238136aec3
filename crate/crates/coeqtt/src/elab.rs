//! Bidirectional elaboration of surface terms into the core language.
//!
//! Synthesis covers variables, constants, universes (U0 : U1, U1 has no
//! type), applications, projections, the formers, annotated terms and the
//! eliminators; lambdas, pairs, `inj`, `glue`, `inl` and `inr` are checked
//! against their formers. Checking falls back to synthesis plus directional
//! universe subtyping.

use crate::diag::{codes, Diagnostic, Span};
use crate::lex::Kw;
use crate::nbe::{
    self, convertible, eval, quote, subtype, v_app, vvar, Closure, Env, Value,
};
use crate::parse::{SNode, STm};
use crate::print::print_core_in_scope;
use crate::sig::{Context, Signature};
use crate::term::{hint, AxiomName, Level, Term, P};
use std::collections::HashSet;
use std::sync::Arc;
use std::sync::OnceLock;

pub type ElabResult<T> = Result<T, Box<Diagnostic>>;

/// Elaborated core term together with its inferred type and axiom uses.
pub struct Elaborated {
    pub term: P<Term>,
    pub ty: P<Value>,
    pub axioms: std::collections::BTreeSet<AxiomName>,
}

pub struct Elab<'s> {
    pub sig: &'s Signature,
    /// Names whose declarations failed earlier in this run; later uses
    /// report a dedicated diagnostic instead of a spurious unbound-name.
    pub poisoned: HashSet<String>,
}

fn p(t: Term) -> P<Term> {
    Arc::new(t)
}

fn pv(v: Value) -> P<Value> {
    Arc::new(v)
}

fn universe(l: Level) -> P<Value> {
    match l {
        Level::L0 => pv(Value::U0),
        Level::L1 => pv(Value::U1),
    }
}

fn universe_term(l: Level) -> Term {
    match l {
        Level::L0 => Term::U0,
        Level::L1 => Term::U1,
    }
}

/// Closure with an empty environment returning a fixed term.
fn const_closure(body: Term) -> Closure {
    Closure {
        env: Env::nil(),
        hint: hint("_"),
        body: p(body),
    }
}

fn closure_over(env_vals: &[P<Value>], hint_name: &str, body: Term) -> Closure {
    let mut env = Env::nil();
    for v in env_vals {
        env = env.push(v.clone());
    }
    Closure {
        env,
        hint: hint(hint_name),
        body: p(body),
    }
}

/// `Pi (x : T). Pi (y : T). Id T x y -> U_l` — the motive type of J.
fn j_motive_ty(t: &P<Value>, l: Level) -> P<Value> {
    let body = Term::Pi(
        hint("y"),
        p(Term::Var(1)),
        p(Term::Pi(
            hint("p"),
            p(Term::Id(p(Term::Var(2)), p(Term::Var(1)), p(Term::Var(0)))),
            p(universe_term(l)),
        )),
    );
    pv(Value::Pi(t.clone(), closure_over(&[t.clone()], "x", body)))
}

/// `Pi (x : T). M x x (refl x)` — the base-case type of J.
fn j_base_ty(t: &P<Value>, m: &P<Value>) -> P<Value> {
    let body = Term::App(
        p(Term::App(
            p(Term::App(p(Term::Var(1)), p(Term::Var(0)))),
            p(Term::Var(0)),
        )),
        p(Term::Refl(p(Term::Var(0)))),
    );
    pv(Value::Pi(t.clone(), closure_over(&[m.clone()], "x", body)))
}

/// `A -> A -> U0` — the relation type of a coequalizer carrier.
fn rel_ty(a: &P<Value>) -> P<Value> {
    let body = Term::Pi(hint("_"), p(Term::Var(1)), p(Term::U0));
    pv(Value::Pi(a.clone(), closure_over(&[a.clone()], "_", body)))
}

/// `Pi (x : Coeq A R). U_l` — the motive type of cind (virtual at level 1).
fn cind_motive_ty(a: &P<Value>, r: &P<Value>, l: Level) -> P<Value> {
    pv(Value::Pi(
        pv(Value::Coeq(a.clone(), r.clone())),
        const_closure(universe_term(l)),
    ))
}

/// `Pi (a : A). M (inj a)` — the point-case type of cind.
fn cind_point_ty(a: &P<Value>, m: &P<Value>) -> P<Value> {
    let body = Term::App(p(Term::Var(1)), p(Term::Inj(p(Term::Var(0)))));
    pv(Value::Pi(a.clone(), closure_over(&[m.clone()], "a", body)))
}

/// The glue-case type of cind, instantiated by evaluating a once-elaborated
/// template in the environment [A, R, M, f]. The template states, with the
/// path-over spelled out through transport:
///
/// ```text
/// (a : A) -> (b : A) -> (s : R a b) ->
///   Id (M (inj b)) (transport M (glue a b s) (f a)) (f b)
/// ```
fn cind_glue_template(l: Level) -> &'static Term {
    static T0: OnceLock<Term> = OnceLock::new();
    static T1: OnceLock<Term> = OnceLock::new();
    let cell = match l {
        Level::L0 => &T0,
        Level::L1 => &T1,
    };
    cell.get_or_init(|| {
        let j = match l {
            Level::L0 => "J0",
            Level::L1 => "J1",
        };
        let src = format!(
            "(a : A) -> (b : A) -> (s : R a b) -> \
             Id (M (inj b)) \
                ({j} (\\x2. \\y2. \\p2. M x2 -> M y2) (\\x2. \\u2. u2) \
                     ((inj a : Coeq A R)) ((inj b : Coeq A R)) (glue a b s) (f a)) \
                (f b)"
        );
        let stm = crate::parse::parse_term(&src).expect("cind template parses");

        // Synthetic context [A, R, M, f]; only the entry types matter.
        let sig = Signature::bare();
        let ctx = Context::new();
        let av = vvar(0);
        let ctx = ctx_bind_raw(&ctx, "A", pv(Value::U0));
        let ctx = ctx_bind_raw(&ctx, "R", rel_ty(&av));
        let rv = vvar(1);
        let ctx = ctx_bind_raw(&ctx, "M", cind_motive_ty(&av, &rv, l));
        let mv = vvar(2);
        let ctx = ctx_bind_raw(&ctx, "f", cind_point_ty(&av, &mv));

        let elab = Elab {
            sig: &sig,
            poisoned: HashSet::new(),
        };
        let lvl = match l {
            Level::L0 => Level::L0,
            Level::L1 => Level::L1,
        };
        let (core, _) = elab
            .infer(&ctx, &stm)
            .unwrap_or_else(|e| panic!("cind template at level {:?} fails: {e}", lvl));
        core
    })
}

fn ctx_bind_raw(ctx: &Context, name: &str, ty: P<Value>) -> Context {
    ctx.bind(hint(name), ty)
}

fn cind_glue_ty(
    sig: &Signature,
    l: Level,
    a: &P<Value>,
    r: &P<Value>,
    m: &P<Value>,
    f: &P<Value>,
) -> P<Value> {
    let env = Env::nil()
        .push(a.clone())
        .push(r.clone())
        .push(m.clone())
        .push(f.clone());
    eval(sig, &env, cind_glue_template(l))
}

/// `Pi (a : A). M (inl a)` and `Pi (b : B). M (inr b)`.
fn scase_case_ty(side_left: bool, dom: &P<Value>, m: &P<Value>) -> P<Value> {
    let inner = if side_left {
        Term::Inl(p(Term::Var(0)))
    } else {
        Term::Inr(p(Term::Var(0)))
    };
    let body = Term::App(p(Term::Var(1)), p(inner));
    pv(Value::Pi(dom.clone(), closure_over(&[m.clone()], "a", body)))
}

/// `Pi (n : Nat). M n -> M (suc n)`.
fn nind_suc_ty(m: &P<Value>) -> P<Value> {
    let body = Term::Pi(
        hint("_"),
        p(Term::App(p(Term::Var(1)), p(Term::Var(0)))),
        p(Term::App(p(Term::Var(2)), p(Term::Suc(p(Term::Var(1)))))),
    );
    pv(Value::Pi(pv(Value::Nat), closure_over(&[m.clone()], "n", body)))
}

fn builtin_arity(k: Kw) -> usize {
    use Kw::*;
    match k {
        U0 | U1 | Empty | Unit | Tt | Nat | Zero | Funext | Univalence | Cgluebeta => 0,
        Refl | Inj | Inl | Inr | Suc => 1,
        Coeq | Sum | Eabsurd0 | Eabsurd1 => 2,
        Id | Glue | Uind0 | Uind1 => 3,
        Cind0 | Cind1 | Scase0 | Scase1 | Nind0 | Nind1 => 4,
        J0 | J1 => 5,
    }
}

fn flatten_app(stm: &STm) -> (&STm, Vec<&STm>) {
    let mut args = Vec::new();
    let mut cur = stm;
    while let SNode::App(f, a) = &cur.node {
        args.push(a.as_ref());
        cur = f;
    }
    args.reverse();
    (cur, args)
}

impl<'s> Elab<'s> {
    pub fn new(sig: &'s Signature) -> Elab<'s> {
        Elab {
            sig,
            poisoned: HashSet::new(),
        }
    }

    fn show_value(&self, ctx: &Context, v: &Value) -> String {
        let t = quote(self.sig, ctx.depth(), v);
        let scope: Vec<String> = ctx
            .entries
            .iter()
            .map(|(h, _)| h.to_string())
            .collect();
        print_core_in_scope(&t, &scope)
    }

    fn mismatch(
        &self,
        ctx: &Context,
        span: Span,
        expected: &Value,
        actual: &Value,
    ) -> Box<Diagnostic> {
        Box::new(
            Diagnostic::error(span, codes::TYPE_MISMATCH, "type mismatch").with_types(
                self.show_value(ctx, expected),
                self.show_value(ctx, actual),
            ),
        )
    }

    fn err(&self, span: Span, code: &'static str, msg: impl Into<String>) -> Box<Diagnostic> {
        Box::new(Diagnostic::error(span, code, msg))
    }

    /// Validate a surface term as a classifier. `U1` itself is accepted
    /// (it classifies large formers but has no universe); everything else
    /// must synthesize a universe.
    pub fn is_type(&self, ctx: &Context, stm: &STm) -> ElabResult<Term> {
        if let SNode::Builtin(Kw::U1) = stm.node {
            return Ok(Term::U1);
        }
        let (tc, ty) = self.infer(ctx, stm)?;
        match ty.as_ref() {
            Value::U0 | Value::U1 => Ok(tc),
            other => Err(self.err(
                stm.span,
                codes::NOT_A_UNIVERSE,
                format!(
                    "expected a type, but this term has type {}",
                    self.show_value(ctx, other)
                ),
            )),
        }
    }

    /// Synthesize a universe level for a term expected to be a (small or
    /// large) type inside a former.
    fn infer_type_arg(&self, ctx: &Context, stm: &STm) -> ElabResult<(Term, Level)> {
        if let SNode::Builtin(Kw::U1) = stm.node {
            return Err(self.err(
                stm.span,
                codes::U1_HAS_NO_TYPE,
                "U1 cannot appear inside a former: it has no type",
            ));
        }
        let (tc, ty) = self.infer(ctx, stm)?;
        match ty.as_ref() {
            Value::U0 => Ok((tc, Level::L0)),
            Value::U1 => Ok((tc, Level::L1)),
            other => Err(self.err(
                stm.span,
                codes::NOT_A_UNIVERSE,
                format!(
                    "expected a type, but this term has type {}",
                    self.show_value(ctx, other)
                ),
            )),
        }
    }

    pub fn infer(&self, ctx: &Context, stm: &STm) -> ElabResult<(Term, P<Value>)> {
        match &stm.node {
            SNode::Var(name) => {
                if let Some((idx, ty)) = ctx.lookup_name(name) {
                    return Ok((Term::Var(idx), ty));
                }
                if let Some((i, d)) = self.sig.lookup(name) {
                    return Ok((Term::Const(i, d.name.clone()), d.ty_value.clone()));
                }
                if self.poisoned.contains(name) {
                    return Err(self.err(
                        stm.span,
                        codes::POISONED,
                        format!("`{name}` is poisoned by an earlier error"),
                    ));
                }
                Err(self.err(
                    stm.span,
                    codes::UNBOUND_NAME,
                    format!("unbound name `{name}`"),
                ))
            }
            SNode::Builtin(_) | SNode::App(_, _) => self.infer_spine(ctx, stm),
            SNode::Lam(_, _) => Err(self.err(
                stm.span,
                codes::CANNOT_SYNTHESIZE,
                "cannot synthesize the type of an unannotated lambda",
            )),
            SNode::Pair(_, _) => Err(self.err(
                stm.span,
                codes::CANNOT_SYNTHESIZE,
                "cannot synthesize the type of a bare pair",
            )),
            SNode::Pi(x, a, b) => {
                let (ac, la) = self.infer_type_arg(ctx, a)?;
                let av = eval(self.sig, &ctx.env, &ac);
                let ctx2 = ctx.bind(hint(x), av);
                let (bc, lb) = self.infer_type_arg(&ctx2, b)?;
                Ok((
                    Term::Pi(hint(x), p(ac), p(bc)),
                    universe(la.max(lb)),
                ))
            }
            SNode::Sg(x, a, b) => {
                let (ac, la) = self.infer_type_arg(ctx, a)?;
                let av = eval(self.sig, &ctx.env, &ac);
                let ctx2 = ctx.bind(hint(x), av);
                let (bc, lb) = self.infer_type_arg(&ctx2, b)?;
                Ok((
                    Term::Sg(hint(x), p(ac), p(bc)),
                    universe(la.max(lb)),
                ))
            }
            SNode::Proj1(t) => {
                let (tc, ty) = self.infer(ctx, t)?;
                match ty.as_ref() {
                    Value::Sg(a, _) => Ok((Term::Fst(p(tc)), a.clone())),
                    other => Err(self.err(
                        t.span,
                        codes::NOT_A_PAIR,
                        format!(
                            "`.1` needs a pair, but this term has type {}",
                            self.show_value(ctx, other)
                        ),
                    )),
                }
            }
            SNode::Proj2(t) => {
                let (tc, ty) = self.infer(ctx, t)?;
                match ty.as_ref() {
                    Value::Sg(_, b) => {
                        let tv = eval(self.sig, &ctx.env, &tc);
                        let fst = nbe::v_fst(self.sig, &tv);
                        Ok((Term::Snd(p(tc)), b.apply(self.sig, fst)))
                    }
                    other => Err(self.err(
                        t.span,
                        codes::NOT_A_PAIR,
                        format!(
                            "`.2` needs a pair, but this term has type {}",
                            self.show_value(ctx, other)
                        ),
                    )),
                }
            }
            SNode::IdSugar(a, x, y) => {
                let (ac, l) = self.infer_type_arg(ctx, a)?;
                let av = eval(self.sig, &ctx.env, &ac);
                let xc = self.check(ctx, x, &av)?;
                let yc = self.check(ctx, y, &av)?;
                Ok((Term::Id(p(ac), p(xc), p(yc)), universe(l)))
            }
            SNode::Annot(t, ty) => {
                let tyc = self.is_type(ctx, ty)?;
                let tyv = eval(self.sig, &ctx.env, &tyc);
                let tc = self.check(ctx, t, &tyv)?;
                Ok((tc, tyv))
            }
        }
    }

    /// Infer an application spine, interpreting saturated builtin heads.
    fn infer_spine(&self, ctx: &Context, stm: &STm) -> ElabResult<(Term, P<Value>)> {
        let (head, args) = flatten_app(stm);
        let kw = match &head.node {
            SNode::Builtin(k) => Some(*k),
            _ => None,
        };
        match kw {
            Some(k) => {
                let arity = builtin_arity(k);
                if args.len() < arity {
                    return Err(self.err(
                        stm.span,
                        codes::ARITY,
                        format!(
                            "`{}` expects {} argument(s), got {}",
                            k.as_str(),
                            arity,
                            args.len()
                        ),
                    ));
                }
                let (tc, ty) = self.infer_builtin(ctx, head.span, stm.span, k, &args[..arity])?;
                self.apply_rest(ctx, stm.span, tc, ty, &args[arity..])
            }
            None => {
                let (hc, hty) = self.infer(ctx, head)?;
                self.apply_rest(ctx, stm.span, hc, hty, &args)
            }
        }
    }

    fn apply_rest(
        &self,
        ctx: &Context,
        span: Span,
        mut term: Term,
        mut ty: P<Value>,
        args: &[&STm],
    ) -> ElabResult<(Term, P<Value>)> {
        for arg in args {
            match ty.as_ref() {
                Value::Pi(dom, cod) => {
                    let ac = self.check(ctx, arg, dom)?;
                    let av = eval(self.sig, &ctx.env, &ac);
                    term = Term::App(p(term), p(ac));
                    ty = cod.apply(self.sig, av);
                }
                other => {
                    return Err(self.err(
                        span,
                        codes::NOT_A_FUNCTION,
                        format!(
                            "this term is applied to an argument but has type {}",
                            self.show_value(ctx, other)
                        ),
                    ))
                }
            }
        }
        Ok((term, ty))
    }

    fn infer_builtin(
        &self,
        ctx: &Context,
        head_span: Span,
        span: Span,
        k: Kw,
        args: &[&STm],
    ) -> ElabResult<(Term, P<Value>)> {
        use Kw::*;
        match k {
            U0 => Ok((Term::U0, pv(Value::U1))),
            U1 => Err(self.err(
                head_span,
                codes::U1_HAS_NO_TYPE,
                "U1 does not synthesize: it has no type",
            )),
            Empty => Ok((Term::Empty, pv(Value::U0))),
            Unit => Ok((Term::Unit, pv(Value::U0))),
            Nat => Ok((Term::Nat, pv(Value::U0))),
            Tt => Ok((Term::Tt, pv(Value::Unit))),
            Zero => Ok((Term::Zero, pv(Value::Nat))),
            Suc => {
                let tc = self.check(ctx, args[0], &pv(Value::Nat))?;
                Ok((Term::Suc(p(tc)), pv(Value::Nat)))
            }
            Funext | Univalence | Cgluebeta => {
                let a = match k {
                    Funext => AxiomName::Funext,
                    Univalence => AxiomName::Univalence,
                    _ => AxiomName::CoeqGlueBeta,
                };
                match self.sig.axiom_ty(a) {
                    Some((_, tyv)) => Ok((Term::Axiom(a), tyv.clone())),
                    None => Err(self.err(
                        head_span,
                        codes::UNBOUND_NAME,
                        format!("axiom `{a}` has no installed type in this signature"),
                    )),
                }
            }
            Id => {
                let (ac, l) = self.infer_type_arg(ctx, args[0])?;
                let av = eval(self.sig, &ctx.env, &ac);
                let xc = self.check(ctx, args[1], &av)?;
                let yc = self.check(ctx, args[2], &av)?;
                Ok((Term::Id(p(ac), p(xc), p(yc)), universe(l)))
            }
            Refl => {
                let (tc, ty) = self.infer(ctx, args[0])?;
                let tv = eval(self.sig, &ctx.env, &tc);
                Ok((
                    Term::Refl(p(tc)),
                    pv(Value::Id(ty, tv.clone(), tv)),
                ))
            }
            J0 | J1 => {
                let l = if k == J0 { Level::L0 } else { Level::L1 };
                // Discover the ambient type from whichever of lhs, rhs, or
                // the path synthesizes.
                let t = match self.infer(ctx, args[2]) {
                    Ok((_, t)) => t,
                    Err(first) => match self.infer(ctx, args[3]) {
                        Ok((_, t)) => t,
                        Err(_) => match self.infer(ctx, args[4]) {
                            Ok((_, pty)) => match pty.as_ref() {
                                Value::Id(t, _, _) => t.clone(),
                                other => {
                                    return Err(self.err(
                                        args[4].span,
                                        codes::NOT_AN_IDENTITY,
                                        format!(
                                            "the J scrutinee has type {}, not an identity type",
                                            self.show_value(ctx, other)
                                        ),
                                    ))
                                }
                            },
                            Err(_) => return Err(first),
                        },
                    },
                };
                let xc = self.check(ctx, args[2], &t)?;
                let xv = eval(self.sig, &ctx.env, &xc);
                let yc = self.check(ctx, args[3], &t)?;
                let yv = eval(self.sig, &ctx.env, &yc);
                let path_ty = pv(Value::Id(t.clone(), xv.clone(), yv.clone()));
                let pc = self.check(ctx, args[4], &path_ty)?;
                let mc = self.check(ctx, args[0], &j_motive_ty(&t, l))?;
                let mv = eval(self.sig, &ctx.env, &mc);
                let dc = self.check(ctx, args[1], &j_base_ty(&t, &mv))?;
                let pvv = eval(self.sig, &ctx.env, &pc);
                let result = v_app(
                    self.sig,
                    &v_app(self.sig, &v_app(self.sig, &mv, xv), yv),
                    pvv,
                );
                Ok((
                    Term::J(l, p(mc), p(dc), p(xc), p(yc), p(pc)),
                    result,
                ))
            }
            Coeq => {
                let ac = self.check(ctx, args[0], &pv(Value::U0))?;
                let av = eval(self.sig, &ctx.env, &ac);
                let rc = self.check(ctx, args[1], &rel_ty(&av))?;
                Ok((Term::Coeq(p(ac), p(rc)), pv(Value::U0)))
            }
            Sum => {
                let ac = self.check(ctx, args[0], &pv(Value::U0))?;
                let bc = self.check(ctx, args[1], &pv(Value::U0))?;
                Ok((Term::Sum(p(ac), p(bc)), pv(Value::U0)))
            }
            Inj | Inl | Inr | Glue => Err(self.err(
                span,
                codes::CANNOT_SYNTHESIZE,
                format!(
                    "`{}` only supports checking; annotate the term with its type",
                    k.as_str()
                ),
            )),
            Cind0 | Cind1 => {
                let l = if k == Cind0 { Level::L0 } else { Level::L1 };
                self.infer_cind(ctx, span, l, args)
            }
            Scase0 | Scase1 => {
                let l = if k == Scase0 { Level::L0 } else { Level::L1 };
                self.infer_scase(ctx, span, l, args)
            }
            Eabsurd0 | Eabsurd1 => {
                let l = if k == Eabsurd0 { Level::L0 } else { Level::L1 };
                let mc = self.check(
                    ctx,
                    args[0],
                    &pv(Value::Pi(pv(Value::Empty), const_closure(universe_term(l)))),
                )?;
                let mv = eval(self.sig, &ctx.env, &mc);
                let tc = self.check(ctx, args[1], &pv(Value::Empty))?;
                let tv = eval(self.sig, &ctx.env, &tc);
                Ok((Term::EmptyInd(l, p(mc), p(tc)), v_app(self.sig, &mv, tv)))
            }
            Uind0 | Uind1 => {
                let l = if k == Uind0 { Level::L0 } else { Level::L1 };
                let mc = self.check(
                    ctx,
                    args[0],
                    &pv(Value::Pi(pv(Value::Unit), const_closure(universe_term(l)))),
                )?;
                let mv = eval(self.sig, &ctx.env, &mc);
                let cc = self.check(ctx, args[1], &v_app(self.sig, &mv, pv(Value::Tt)))?;
                let tc = self.check(ctx, args[2], &pv(Value::Unit))?;
                let tv = eval(self.sig, &ctx.env, &tc);
                Ok((
                    Term::UnitInd(l, p(mc), p(cc), p(tc)),
                    v_app(self.sig, &mv, tv),
                ))
            }
            Nind0 | Nind1 => {
                let l = if k == Nind0 { Level::L0 } else { Level::L1 };
                let mc = self.check(
                    ctx,
                    args[0],
                    &pv(Value::Pi(pv(Value::Nat), const_closure(universe_term(l)))),
                )?;
                let mv = eval(self.sig, &ctx.env, &mc);
                let zc = self.check(ctx, args[1], &v_app(self.sig, &mv, pv(Value::Zero)))?;
                let sc = self.check(ctx, args[2], &nind_suc_ty(&mv))?;
                let tc = self.check(ctx, args[3], &pv(Value::Nat))?;
                let tv = eval(self.sig, &ctx.env, &tc);
                Ok((
                    Term::NatInd(l, p(mc), p(zc), p(sc), p(tc)),
                    v_app(self.sig, &mv, tv),
                ))
            }
        }
    }

    /// Recover `(A, R)` for a coequalizer eliminator: prefer the scrutinee,
    /// fall back to a synthesizable motive.
    fn infer_cind(
        &self,
        ctx: &Context,
        span: Span,
        l: Level,
        args: &[&STm],
    ) -> ElabResult<(Term, P<Value>)> {
        let (a, r, scrut_core) = match self.infer(ctx, args[3]) {
            Ok((tc, ty)) => match ty.as_ref() {
                Value::Coeq(a, r) => (a.clone(), r.clone(), Some(tc)),
                other => {
                    return Err(self.err(
                        args[3].span,
                        codes::NOT_A_COEQUALIZER,
                        format!(
                            "the scrutinee of `cind{}` has type {}, not a coequalizer",
                            l.suffix(),
                            self.show_value(ctx, other)
                        ),
                    ))
                }
            },
            Err(scrut_err) => match self.infer(ctx, args[0]) {
                Ok((_, mty)) => match mty.as_ref() {
                    Value::Pi(dom, _) => match dom.as_ref() {
                        Value::Coeq(a, r) => (a.clone(), r.clone(), None),
                        _ => return Err(scrut_err),
                    },
                    _ => return Err(scrut_err),
                },
                Err(_) => return Err(scrut_err),
            },
        };
        let mc = self.check(ctx, args[0], &cind_motive_ty(&a, &r, l))?;
        let mv = eval(self.sig, &ctx.env, &mc);
        let fc = self.check(ctx, args[1], &cind_point_ty(&a, &mv))?;
        let fv = eval(self.sig, &ctx.env, &fc);
        let ec = self.check(ctx, args[2], &cind_glue_ty(self.sig, l, &a, &r, &mv, &fv))?;
        let tc = match scrut_core {
            Some(tc) => tc,
            None => self.check(ctx, args[3], &pv(Value::Coeq(a.clone(), r.clone())))?,
        };
        let tv = eval(self.sig, &ctx.env, &tc);
        let _ = span;
        Ok((
            Term::CoeqInd(l, p(mc), p(fc), p(ec), p(tc)),
            v_app(self.sig, &mv, tv),
        ))
    }

    fn infer_scase(
        &self,
        ctx: &Context,
        _span: Span,
        l: Level,
        args: &[&STm],
    ) -> ElabResult<(Term, P<Value>)> {
        let (a, b, scrut_core) = match self.infer(ctx, args[3]) {
            Ok((tc, ty)) => match ty.as_ref() {
                Value::Sum(a, b) => (a.clone(), b.clone(), Some(tc)),
                other => {
                    return Err(self.err(
                        args[3].span,
                        codes::NOT_A_SUM,
                        format!(
                            "the scrutinee of `scase{}` has type {}, not a sum",
                            l.suffix(),
                            self.show_value(ctx, other)
                        ),
                    ))
                }
            },
            Err(scrut_err) => match self.infer(ctx, args[0]) {
                Ok((_, mty)) => match mty.as_ref() {
                    Value::Pi(dom, _) => match dom.as_ref() {
                        Value::Sum(a, b) => (a.clone(), b.clone(), None),
                        _ => return Err(scrut_err),
                    },
                    _ => return Err(scrut_err),
                },
                Err(_) => return Err(scrut_err),
            },
        };
        let sum = pv(Value::Sum(a.clone(), b.clone()));
        let mc = self.check(
            ctx,
            args[0],
            &pv(Value::Pi(sum.clone(), const_closure(universe_term(l)))),
        )?;
        let mv = eval(self.sig, &ctx.env, &mc);
        let fc = self.check(ctx, args[1], &scase_case_ty(true, &a, &mv))?;
        let gc = self.check(ctx, args[2], &scase_case_ty(false, &b, &mv))?;
        let tc = match scrut_core {
            Some(tc) => tc,
            None => self.check(ctx, args[3], &sum)?,
        };
        let tv = eval(self.sig, &ctx.env, &tc);
        Ok((
            Term::SumInd(l, p(mc), p(fc), p(gc), p(tc)),
            v_app(self.sig, &mv, tv),
        ))
    }

    pub fn check(&self, ctx: &Context, stm: &STm, want: &P<Value>) -> ElabResult<Term> {
        match (&stm.node, want.as_ref()) {
            (SNode::Lam(x, body), Value::Pi(dom, cod)) => {
                let ctx2 = ctx.bind(hint(x), dom.clone());
                let body_want = cod.apply(self.sig, vvar(ctx.depth()));
                let bodyc = self.check(&ctx2, body, &body_want)?;
                Ok(Term::Lam(hint(x), p(bodyc)))
            }
            (SNode::Lam(_, _), _) => Err(Box::new(
                Diagnostic::error(
                    stm.span,
                    codes::TYPE_MISMATCH,
                    "a lambda must be checked against a function type",
                )
                .with_types(self.show_value(ctx, want), "a lambda".to_string()),
            )),
            (SNode::Pair(t, u), Value::Sg(a, b)) => {
                let tc = self.check(ctx, t, a)?;
                let tv = eval(self.sig, &ctx.env, &tc);
                let uc = self.check(ctx, u, &b.apply(self.sig, tv))?;
                Ok(Term::Pair(p(tc), p(uc)))
            }
            (SNode::Pair(_, _), _) => Err(Box::new(
                Diagnostic::error(
                    stm.span,
                    codes::TYPE_MISMATCH,
                    "a pair must be checked against a pair type",
                )
                .with_types(self.show_value(ctx, want), "a pair".to_string()),
            )),
            _ => {
                // Saturated check-only builtins.
                if let Some(res) = self.check_builtin(ctx, stm, want)? {
                    return Ok(res);
                }
                let (tc, got) = self.infer(ctx, stm)?;
                if subtype(self.sig, ctx.depth(), &got, want) {
                    Ok(tc)
                } else {
                    Err(self.mismatch(ctx, stm.span, want, &got))
                }
            }
        }
    }

    /// Handle `inj`, `glue`, `inl`, `inr` in checking position. Returns
    /// Ok(None) when the head is not one of them.
    fn check_builtin(
        &self,
        ctx: &Context,
        stm: &STm,
        want: &P<Value>,
    ) -> ElabResult<Option<Term>> {
        let (head, args) = flatten_app(stm);
        let k = match &head.node {
            SNode::Builtin(k @ (Kw::Inj | Kw::Inl | Kw::Inr | Kw::Glue | Kw::Refl)) => *k,
            _ => return Ok(None),
        };
        let arity = builtin_arity(k);
        if args.len() != arity {
            return Err(self.err(
                stm.span,
                codes::ARITY,
                format!(
                    "`{}` expects {} argument(s), got {}",
                    k.as_str(),
                    arity,
                    args.len()
                ),
            ));
        }
        match k {
            Kw::Refl => match want.as_ref() {
                Value::Id(t, lhs, rhs) => {
                    let tc = self.check(ctx, args[0], t)?;
                    let tv = eval(self.sig, &ctx.env, &tc);
                    if !convertible(self.sig, ctx.depth(), t, &tv, lhs)
                        || !convertible(self.sig, ctx.depth(), t, &tv, rhs)
                    {
                        return Err(Box::new(
                            Diagnostic::error(
                                stm.span,
                                codes::ENDPOINT_MISMATCH,
                                "`refl` does not prove this identity: the endpoints differ from its argument",
                            )
                            .with_types(
                                self.show_value(ctx, want),
                                format!(
                                    "Id {} {} {}",
                                    self.show_value(ctx, t),
                                    self.show_value(ctx, &tv),
                                    self.show_value(ctx, &tv)
                                ),
                            ),
                        ));
                    }
                    Ok(Some(Term::Refl(p(tc))))
                }
                other => Err(self.err(
                    stm.span,
                    codes::NOT_AN_IDENTITY,
                    format!(
                        "`refl` proves an identity, but is checked against {}",
                        self.show_value(ctx, other)
                    ),
                )),
            },
            Kw::Inj => match want.as_ref() {
                Value::Coeq(a, _) => {
                    let ac = self.check(ctx, args[0], a)?;
                    Ok(Some(Term::Inj(p(ac))))
                }
                other => Err(self.err(
                    stm.span,
                    codes::NOT_A_COEQUALIZER,
                    format!(
                        "`inj` needs a coequalizer type, but is checked against {}",
                        self.show_value(ctx, other)
                    ),
                )),
            },
            Kw::Inl => match want.as_ref() {
                Value::Sum(a, _) => {
                    let ac = self.check(ctx, args[0], a)?;
                    Ok(Some(Term::Inl(p(ac))))
                }
                other => Err(self.err(
                    stm.span,
                    codes::NOT_A_SUM,
                    format!(
                        "`inl` needs a sum type, but is checked against {}",
                        self.show_value(ctx, other)
                    ),
                )),
            },
            Kw::Inr => match want.as_ref() {
                Value::Sum(_, b) => {
                    let bc = self.check(ctx, args[0], b)?;
                    Ok(Some(Term::Inr(p(bc))))
                }
                other => Err(self.err(
                    stm.span,
                    codes::NOT_A_SUM,
                    format!(
                        "`inr` needs a sum type, but is checked against {}",
                        self.show_value(ctx, other)
                    ),
                )),
            },
            Kw::Glue => match want.as_ref() {
                Value::Id(t, lhs, rhs) => match t.as_ref() {
                    Value::Coeq(a, r) => {
                        let ac = self.check(ctx, args[0], a)?;
                        let av = eval(self.sig, &ctx.env, &ac);
                        let bc = self.check(ctx, args[1], a)?;
                        let bv = eval(self.sig, &ctx.env, &bc);
                        let s_ty = v_app(self.sig, &v_app(self.sig, r, av.clone()), bv.clone());
                        let sc = self.check(ctx, args[2], &s_ty)?;
                        let inj_a = pv(Value::Inj(av));
                        let inj_b = pv(Value::Inj(bv));
                        if !convertible(self.sig, ctx.depth(), t, &inj_a, lhs)
                            || !convertible(self.sig, ctx.depth(), t, &inj_b, rhs)
                        {
                            return Err(Box::new(
                                Diagnostic::error(
                                    stm.span,
                                    codes::ENDPOINT_MISMATCH,
                                    "the endpoints of `glue` do not match the expected identity type",
                                )
                                .with_types(
                                    self.show_value(ctx, want),
                                    format!(
                                        "Id {} {} {}",
                                        self.show_value(ctx, t),
                                        self.show_value(ctx, &inj_a),
                                        self.show_value(ctx, &inj_b)
                                    ),
                                ),
                            ));
                        }
                        Ok(Some(Term::Glue(p(ac), p(bc), p(sc))))
                    }
                    _ => Err(self.err(
                        stm.span,
                        codes::NOT_A_COEQUALIZER,
                        format!(
                            "`glue` builds a path in a coequalizer, but is checked against {}",
                            self.show_value(ctx, want)
                        ),
                    )),
                },
                other => Err(self.err(
                    stm.span,
                    codes::NOT_AN_IDENTITY,
                    format!(
                        "`glue` builds an identity proof, but is checked against {}",
                        self.show_value(ctx, other)
                    ),
                )),
            },
            _ => unreachable!(),
        }
    }
}
