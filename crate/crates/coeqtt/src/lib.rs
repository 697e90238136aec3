//! A minimal proof checker for a two-universe homotopy type theory whose
//! core language includes the coequalizer of a binary type-valued relation
//! as a primitive higher inductive type, along with dependent functions and
//! pairs, identity types with J, Empty/Unit/Sum/Nat, and three postulated
//! constants (function extensionality, univalence, and the propositional
//! glue computation rule).
//!
//! Pipeline: `lex`/`parse` produce surface declarations, `elab` checks them
//! bidirectionally into `term::Term` using `nbe` for evaluation and
//! conversion, and `driver` runs whole files against the growing `sig`.

pub mod axioms;
pub mod diag;
pub mod driver;
pub mod elab;
pub mod lex;
pub mod nbe;
pub mod parse;
pub mod print;
pub mod sig;
pub mod term;

use nbe::{eval, quote};
use sig::{Context, Signature};
use term::Term;

/// Normalize a checked term in a context: evaluate, then read back.
pub fn normalize(sig: &Signature, ctx: &Context, t: &Term) -> Term {
    let v = eval(sig, &ctx.env, t);
    quote(sig, ctx.depth(), &v)
}
