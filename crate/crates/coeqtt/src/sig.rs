//! The global signature: an append-only environment of checked declarations.
//!
//! Each entry caches its type and body both as terms and as evaluated
//! values, together with the transitive set of axioms its body depends on.
//! Appends happen from a single writer; committed entries are immutable and
//! may be read concurrently.

use crate::nbe::{Env, Value};
use crate::term::{AxiomName, Term, P};
use std::collections::BTreeSet;
use std::collections::HashMap;
use std::sync::Arc;

#[derive(Clone, Debug)]
pub struct Decl {
    pub name: Arc<str>,
    pub ty: P<Term>,
    pub ty_value: P<Value>,
    pub body: P<Term>,
    pub body_value: P<Value>,
    /// Axiom constants reachable through the body, transitively through
    /// referenced constants.
    pub axioms: BTreeSet<AxiomName>,
}

pub struct Signature {
    decls: Vec<Decl>,
    index: HashMap<Arc<str>, usize>,
    /// Fixed closed types of the three axiom constants, installed once at
    /// construction by `axioms::install`.
    axiom_tys: HashMap<AxiomName, (P<Term>, P<Value>)>,
}

impl Signature {
    /// An empty signature with no axiom types yet. Use `axioms::standard`
    /// for the ready-to-use kernel signature.
    pub fn bare() -> Signature {
        Signature {
            decls: Vec::new(),
            index: HashMap::new(),
            axiom_tys: HashMap::new(),
        }
    }

    pub fn len(&self) -> usize {
        self.decls.len()
    }

    pub fn is_empty(&self) -> bool {
        self.decls.is_empty()
    }

    pub fn lookup(&self, name: &str) -> Option<(usize, &Decl)> {
        let i = *self.index.get(name)?;
        Some((i, &self.decls[i]))
    }

    pub fn decl(&self, i: usize) -> &Decl {
        &self.decls[i]
    }

    pub fn decls(&self) -> &[Decl] {
        &self.decls
    }

    pub fn body_value(&self, i: usize) -> P<Value> {
        self.decls[i].body_value.clone()
    }

    pub fn set_axiom_ty(&mut self, a: AxiomName, ty: P<Term>, tyv: P<Value>) {
        self.axiom_tys.insert(a, (ty, tyv));
    }

    pub fn axiom_ty(&self, a: AxiomName) -> Option<&(P<Term>, P<Value>)> {
        self.axiom_tys.get(&a)
    }

    /// Append a checked definition. Name uniqueness is the caller's
    /// responsibility (the elaborator reports duplicates as diagnostics).
    pub fn append(
        &mut self,
        name: Arc<str>,
        ty: P<Term>,
        ty_value: P<Value>,
        body: P<Term>,
        body_value: P<Value>,
    ) -> usize {
        let axioms = self.axioms_of_term(&body);
        let i = self.decls.len();
        self.index.insert(name.clone(), i);
        self.decls.push(Decl {
            name,
            ty,
            ty_value,
            body,
            body_value,
            axioms,
        });
        i
    }

    /// Axioms reachable from a term: its own axiom constants plus the
    /// cached sets of every referenced constant.
    pub fn axioms_of_term(&self, t: &Term) -> BTreeSet<AxiomName> {
        let mut set = BTreeSet::new();
        t.direct_axioms(&mut set);
        let mut consts = Vec::new();
        t.direct_consts(&mut consts);
        for c in consts {
            set.extend(self.decls[c].axioms.iter().copied());
        }
        set
    }

    /// The transitive axioms-used set of a named declaration.
    pub fn axiom_usage(&self, name: &str) -> Option<BTreeSet<AxiomName>> {
        self.lookup(name).map(|(_, d)| d.axioms.clone())
    }

    /// Independent oracle for the axiom sets: recompute by exhaustively
    /// walking bodies through constant references, without consulting the
    /// cached per-declaration sets.
    pub fn axiom_usage_by_traversal(&self, i: usize) -> BTreeSet<AxiomName> {
        fn go(sig: &Signature, i: usize, seen: &mut Vec<bool>, out: &mut BTreeSet<AxiomName>) {
            if seen[i] {
                return;
            }
            seen[i] = true;
            let body = &sig.decls[i].body;
            body.direct_axioms(out);
            let mut consts = Vec::new();
            body.direct_consts(&mut consts);
            for c in consts {
                go(sig, c, seen, out);
            }
        }
        let mut out = BTreeSet::new();
        let mut seen = vec![false; self.decls.len()];
        go(self, i, &mut seen, &mut out);
        out
    }

    /// Every body's constant references must point strictly earlier.
    pub fn references_are_backward(&self) -> bool {
        self.decls.iter().enumerate().all(|(i, d)| {
            let mut cs = Vec::new();
            d.body.direct_consts(&mut cs);
            d.ty.direct_consts(&mut cs);
            cs.into_iter().all(|c| c < i)
        })
    }
}

/// A typing context: an ordered telescope of (name hint, type value),
/// paired with the evaluation environment that maps each entry to a
/// neutral variable (or a definition value during elaboration of
/// under-binder terms).
#[derive(Clone, Default)]
pub struct Context {
    pub entries: Vec<(Arc<str>, P<Value>)>,
    pub env: Env,
}

impl Context {
    pub fn new() -> Context {
        Context {
            entries: Vec::new(),
            env: Env::nil(),
        }
    }

    pub fn depth(&self) -> usize {
        self.entries.len()
    }

    /// Extend with a fresh neutral variable of the given type.
    pub fn bind(&self, hint: Arc<str>, ty: P<Value>) -> Context {
        let v = crate::nbe::vvar(self.depth());
        Context {
            entries: {
                let mut e = self.entries.clone();
                e.push((hint, ty));
                e
            },
            env: self.env.push(v),
        }
    }

    /// Resolve a surface name to its innermost binding.
    pub fn lookup_name(&self, name: &str) -> Option<(usize, P<Value>)> {
        for (k, (h, ty)) in self.entries.iter().enumerate().rev() {
            if h.as_ref() == name {
                return Some((self.entries.len() - 1 - k, ty.clone()));
            }
        }
        None
    }

    /// Type of the variable with de Bruijn index `i`.
    pub fn lookup_index(&self, i: usize) -> P<Value> {
        self.entries[self.entries.len() - 1 - i].1.clone()
    }
}
