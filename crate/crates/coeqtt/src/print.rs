//! Deterministic printing of core terms.
//!
//! The output re-parses and re-elaborates to an alpha-equal term. Binder
//! hints are reused where possible and freshened against reserved words,
//! enclosing binders, and constant names referenced by the term.

use crate::lex::is_reserved_word;
use crate::term::{Level, Term};
use std::collections::HashSet;
use std::fmt::Write;

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord)]
enum Prec {
    Arrow,
    Star,
    App,
    Atom,
}

fn occurs(t: &Term, idx: usize) -> bool {
    use Term::*;
    match t {
        Var(i) => *i == idx,
        U0 | U1 | Empty | Unit | Tt | Nat | Zero | Axiom(_) | Const(_, _) => false,
        Pi(_, a, b) | Sg(_, a, b) => occurs(a, idx) || occurs(b, idx + 1),
        Lam(_, b) => occurs(b, idx + 1),
        App(a, b) | Pair(a, b) | Coeq(a, b) | Sum(a, b) => occurs(a, idx) || occurs(b, idx),
        Fst(t) | Snd(t) | Refl(t) | Inj(t) | Suc(t) | Inl(t) | Inr(t) => occurs(t, idx),
        Id(a, b, c) | Glue(a, b, c) => occurs(a, idx) || occurs(b, idx) || occurs(c, idx),
        J(_, m, d, x, y, p) => {
            occurs(m, idx) || occurs(d, idx) || occurs(x, idx) || occurs(y, idx) || occurs(p, idx)
        }
        CoeqInd(_, m, a, b, t) | SumInd(_, m, a, b, t) | NatInd(_, m, a, b, t) => {
            occurs(m, idx) || occurs(a, idx) || occurs(b, idx) || occurs(t, idx)
        }
        EmptyInd(_, m, t) => occurs(m, idx) || occurs(t, idx),
        UnitInd(_, m, c, t) => occurs(m, idx) || occurs(c, idx) || occurs(t, idx),
    }
}

fn collect_const_names(t: &Term, out: &mut HashSet<String>) {
    use Term::*;
    match t {
        Const(_, name) => {
            out.insert(name.to_string());
        }
        Var(_) | U0 | U1 | Empty | Unit | Tt | Nat | Zero | Axiom(_) => {}
        Pi(_, a, b) | Sg(_, a, b) | App(a, b) | Pair(a, b) | Coeq(a, b) | Sum(a, b) => {
            collect_const_names(a, out);
            collect_const_names(b, out);
        }
        Lam(_, t) | Fst(t) | Snd(t) | Refl(t) | Inj(t) | Suc(t) | Inl(t) | Inr(t) => {
            collect_const_names(t, out)
        }
        Id(a, b, c) | Glue(a, b, c) => {
            collect_const_names(a, out);
            collect_const_names(b, out);
            collect_const_names(c, out);
        }
        J(_, m, d, x, y, p) => {
            collect_const_names(m, out);
            collect_const_names(d, out);
            collect_const_names(x, out);
            collect_const_names(y, out);
            collect_const_names(p, out);
        }
        CoeqInd(_, m, a, b, t) | SumInd(_, m, a, b, t) | NatInd(_, m, a, b, t) => {
            collect_const_names(m, out);
            collect_const_names(a, out);
            collect_const_names(b, out);
            collect_const_names(t, out);
        }
        EmptyInd(_, m, t) => {
            collect_const_names(m, out);
            collect_const_names(t, out);
        }
        UnitInd(_, m, c, t) => {
            collect_const_names(m, out);
            collect_const_names(c, out);
            collect_const_names(t, out);
        }
    }
}

struct Printer {
    avoid: HashSet<String>,
    scope: Vec<String>,
}

impl Printer {
    fn fresh(&mut self, hint: &str) -> String {
        let base = if hint.is_empty() || hint == "_" {
            "x"
        } else {
            hint
        };
        let mut name = base.to_string();
        while is_reserved_word(&name)
            || self.avoid.contains(&name)
            || self.scope.contains(&name)
        {
            name.push('\'');
        }
        name
    }

    fn var(&self, idx: usize) -> &str {
        let k = self.scope.len().checked_sub(idx + 1).expect("dangling var");
        &self.scope[k]
    }

    fn head_args(&mut self, out: &mut String, prec: Prec, head: &str, args: &[&Term]) {
        if prec > Prec::App && !args.is_empty() {
            out.push('(');
        }
        out.push_str(head);
        for a in args {
            out.push(' ');
            self.print(out, a, Prec::Atom);
        }
        if prec > Prec::App && !args.is_empty() {
            out.push(')');
        }
    }

    fn print(&mut self, out: &mut String, t: &Term, prec: Prec) {
        use Term::*;
        match t {
            Var(i) => out.push_str(self.var(*i)),
            U0 => out.push_str("U0"),
            U1 => out.push_str("U1"),
            Empty => out.push_str("Empty"),
            Unit => out.push_str("Unit"),
            Tt => out.push_str("tt"),
            Nat => out.push_str("Nat"),
            Zero => out.push_str("zero"),
            Axiom(a) => out.push_str(a.as_str()),
            Const(_, name) => out.push_str(name),
            Lam(h, b) => {
                // Lambdas sit at the loosest level; parenthesize unless the
                // context accepts arrows.
                let name = self.fresh(h);
                if prec > Prec::Arrow {
                    out.push('(');
                }
                let _ = write!(out, "\\{name}. ");
                self.scope.push(name);
                self.print(out, b, Prec::Arrow);
                self.scope.pop();
                if prec > Prec::Arrow {
                    out.push(')');
                }
            }
            Pi(h, a, b) => {
                let dependent = occurs(b, 0);
                if prec > Prec::Arrow {
                    out.push('(');
                }
                if dependent {
                    let name = self.fresh(h);
                    out.push('(');
                    out.push_str(&name);
                    out.push_str(" : ");
                    self.print(out, a, Prec::Arrow);
                    out.push_str(") -> ");
                    self.scope.push(name);
                    self.print(out, b, Prec::Arrow);
                    self.scope.pop();
                } else {
                    self.print(out, a, Prec::Star);
                    out.push_str(" -> ");
                    self.scope.push("_".into());
                    self.print(out, b, Prec::Arrow);
                    self.scope.pop();
                }
                if prec > Prec::Arrow {
                    out.push(')');
                }
            }
            Sg(h, a, b) => {
                let dependent = occurs(b, 0);
                if prec > Prec::Star {
                    out.push('(');
                }
                if dependent {
                    let name = self.fresh(h);
                    out.push('(');
                    out.push_str(&name);
                    out.push_str(" : ");
                    self.print(out, a, Prec::Arrow);
                    out.push_str(") * ");
                    self.scope.push(name);
                    self.print(out, b, Prec::Star);
                    self.scope.pop();
                } else {
                    self.print(out, a, Prec::App);
                    out.push_str(" * ");
                    self.scope.push("_".into());
                    self.print(out, b, Prec::Star);
                    self.scope.pop();
                }
                if prec > Prec::Star {
                    out.push(')');
                }
            }
            App(f, a) => {
                if prec > Prec::App {
                    out.push('(');
                }
                self.print(out, f, Prec::App);
                out.push(' ');
                self.print(out, a, Prec::Atom);
                if prec > Prec::App {
                    out.push(')');
                }
            }
            Pair(a, b) => {
                out.push('(');
                self.print(out, a, Prec::Arrow);
                out.push_str(", ");
                self.print(out, b, Prec::Arrow);
                out.push(')');
            }
            Fst(t) => {
                self.print(out, t, Prec::Atom);
                out.push_str(".1");
            }
            Snd(t) => {
                self.print(out, t, Prec::Atom);
                out.push_str(".2");
            }
            Id(a, x, y) => self.head_args(out, prec, "Id", &[a, x, y]),
            Refl(t) => self.head_args(out, prec, "refl", &[t]),
            J(l, m, d, x, y, p) => {
                let head = if *l == Level::L0 { "J0" } else { "J1" };
                self.head_args(out, prec, head, &[m, d, x, y, p]);
            }
            Coeq(a, r) => self.head_args(out, prec, "Coeq", &[a, r]),
            Inj(t) => self.head_args(out, prec, "inj", &[t]),
            Glue(a, b, s) => self.head_args(out, prec, "glue", &[a, b, s]),
            CoeqInd(l, m, f, e, t) => {
                let head = if *l == Level::L0 { "cind0" } else { "cind1" };
                self.head_args(out, prec, head, &[m, f, e, t]);
            }
            EmptyInd(l, m, t) => {
                let head = if *l == Level::L0 { "eabsurd0" } else { "eabsurd1" };
                self.head_args(out, prec, head, &[m, t]);
            }
            UnitInd(l, m, c, t) => {
                let head = if *l == Level::L0 { "uind0" } else { "uind1" };
                self.head_args(out, prec, head, &[m, c, t]);
            }
            Sum(a, b) => self.head_args(out, prec, "Sum", &[a, b]),
            Inl(t) => self.head_args(out, prec, "inl", &[t]),
            Inr(t) => self.head_args(out, prec, "inr", &[t]),
            SumInd(l, m, f, g, t) => {
                let head = if *l == Level::L0 { "scase0" } else { "scase1" };
                self.head_args(out, prec, head, &[m, f, g, t]);
            }
            Suc(t) => self.head_args(out, prec, "suc", &[t]),
            NatInd(l, m, z, s, t) => {
                let head = if *l == Level::L0 { "nind0" } else { "nind1" };
                self.head_args(out, prec, head, &[m, z, s, t]);
            }
        }
    }
}

/// Print a scope-closed term (binder depth 0).
pub fn print_core(t: &Term) -> String {
    print_core_in_scope(t, &[])
}

/// Print a term whose free variables are named by `scope` (outermost
/// first).
pub fn print_core_in_scope(t: &Term, scope: &[String]) -> String {
    let mut avoid = HashSet::new();
    collect_const_names(t, &mut avoid);
    let mut p = Printer {
        avoid,
        scope: scope.to_vec(),
    };
    let mut out = String::new();
    p.print(&mut out, t, Prec::Arrow);
    out
}
