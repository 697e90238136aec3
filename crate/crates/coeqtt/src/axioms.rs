//! Closed types of the three axiom constants.
//!
//! Each constant is a single ordinary term; where the corpus needs an axiom
//! at more than one universe configuration its type is the pairing of the
//! needed instances, which keeps the axiom-name set at exactly
//! {funext, univalence, cgluebeta}:
//!
//!  * `funext`     = (dependent instance over small families)
//!                 * (instance for U0-valued functions);
//!  * `univalence` = bi-invertibility of the path-to-equivalence map;
//!  * `cgluebeta`  = (glue rule for level-0 coequalizer induction, stating
//!                    that apd of the induced section over `glue a b s`
//!                    equals the supplied glue case)
//!                 * (the same rule for level-1 induction at the constant
//!                    motive returning U0, the large elimination used by
//!                    the category equivalence).
//!
//! The types are written in surface syntax with `happly`, `transport` and
//! `apd` spelled out through J, and elaborated once against the empty
//! signature.

use crate::elab::Elab;
use crate::nbe::{eval, Env};
use crate::parse::parse_term;
use crate::sig::{Context, Signature};
use crate::term::AxiomName;
use std::sync::Arc;

/// `happly f g p` at a dependent family `B : A -> U0`, applied to `arg`.
fn happly_dep(arg: &str) -> String {
    format!(
        "J0 (\\f2. \\g2. \\p2. (x : A) -> Id (B x) (f2 x) (g2 x)) \
            (\\f2. \\x. refl (f2 x)) f g ({arg})"
    )
}

/// `happly f g p` for `f g : A -> U0` (the pointwise family lives in U1).
fn happly_u(arg: &str) -> String {
    format!(
        "J1 (\\f2. \\g2. \\p2. (x : A) -> Id U0 (f2 x) (g2 x)) \
            (\\f2. \\x. refl (f2 x)) f g ({arg})"
    )
}

fn funext_src() -> String {
    let dep = format!(
        "(A : U0) -> (B : A -> U0) -> (f : (x : A) -> B x) -> (g : (x : A) -> B x) -> \
         ((l : ((x : A) -> Id (B x) (f x) (g x)) -> Id ((x : A) -> B x) f g) * \
          ((p : Id ((x : A) -> B x) f g) -> \
             Id (Id ((x : A) -> B x) f g) (l ({hap_p})) p)) * \
         ((r : ((x : A) -> Id (B x) (f x) (g x)) -> Id ((x : A) -> B x) f g) * \
          ((h : (x : A) -> Id (B x) (f x) (g x)) -> \
             Id ((x : A) -> Id (B x) (f x) (g x)) ({hap_rh}) h))",
        hap_p = happly_dep("p"),
        hap_rh = happly_dep("r h"),
    );
    let tyv = format!(
        "(A : U0) -> (f : A -> U0) -> (g : A -> U0) -> \
         ((l : ((x : A) -> Id U0 (f x) (g x)) -> Id (A -> U0) f g) * \
          ((p : Id (A -> U0) f g) -> \
             Id (Id (A -> U0) f g) (l ({hap_p})) p)) * \
         ((r : ((x : A) -> Id U0 (f x) (g x)) -> Id (A -> U0) f g) * \
          ((h : (x : A) -> Id U0 (f x) (g x)) -> \
             Id ((x : A) -> Id U0 (f x) (g x)) ({hap_rh}) h))",
        hap_p = happly_u("p"),
        hap_rh = happly_u("r h"),
    );
    format!("({dep}) * ({tyv})")
}

/// The type `Equiv X Y` of bi-invertible maps, fully unfolded.
fn eqv(x: &str, y: &str) -> String {
    format!(
        "(h : ({x}) -> ({y})) * \
         (((li : ({y}) -> ({x})) * ((x2 : {x}) -> Id ({x}) (li (h x2)) x2)) * \
          ((ri : ({y}) -> ({x})) * ((y2 : {y}) -> Id ({y}) (h (ri y2)) y2)))"
    )
}

/// `idtoeqv A B p`, the canonical map sending a path between types to an
/// equivalence, applied to `arg`.
fn idtoeqv(arg: &str) -> String {
    format!(
        "J0 (\\X2. \\Y2. \\q2. {eq}) \
            (\\X2. (\\x. x, ((\\x. x, \\x. refl x), (\\x. x, \\x. refl x)))) A B ({arg})",
        eq = eqv("X2", "Y2"),
    )
}

fn univalence_src() -> String {
    let e = eqv("A", "B");
    format!(
        "(A : U0) -> (B : U0) -> \
         ((l : ({e}) -> Id U0 A B) * \
          ((p : Id U0 A B) -> Id (Id U0 A B) (l ({ite_p})) p)) * \
         ((r : ({e}) -> Id U0 A B) * \
          ((e2 : {e}) -> Id ({e}) ({ite_re}) e2))",
        ite_p = idtoeqv("p"),
        ite_re = idtoeqv("r e2"),
    )
}

/// `transport M p u` over `p : Id (Coeq A R) (inj a) (inj b)` spelled
/// through J at the given level.
fn transport_glue(j: &str, motive: &str, u: &str) -> String {
    format!(
        "{j} ({motive}) (\\x2. \\u2. u2) \
            ((inj a : Coeq A R)) ((inj b : Coeq A R)) (glue a b s) ({u})"
    )
}

fn cgluebeta_src() -> String {
    // Level 0: full dependent motive P : Coeq A R -> U0.
    let tr0 = |u: &str| transport_glue("J0", "\\x2. \\y2. \\p2. P x2 -> P y2", u);
    let apd0 = format!(
        "J0 (\\x2. \\y2. \\p2. \
               Id (P y2) (J0 (\\x3. \\y3. \\p3. P x3 -> P y3) (\\x3. \\u3. u3) x2 y2 p2 \
                              (cind0 P f e x2)) \
                         (cind0 P f e y2)) \
            (\\x2. refl (cind0 P f e x2)) \
            ((inj a : Coeq A R)) ((inj b : Coeq A R)) (glue a b s)"
    );
    let lvl0 = format!(
        "(A : U0) -> (R : A -> A -> U0) -> (P : Coeq A R -> U0) -> \
         (f : (a : A) -> P (inj a)) -> \
         (e : (a : A) -> (b : A) -> (s : R a b) -> \
                Id (P (inj b)) ({tr_fa}) (f b)) -> \
         (a : A) -> (b : A) -> (s : R a b) -> \
         Id (Id (P (inj b)) ({tr_fa}) (f b)) ({apd0}) (e a b s)",
        tr_fa = tr0("f a"),
    );

    // Level 1 at the constant motive \_ . U0: type-valued recursion.
    let tru = |u: &str| transport_glue("J1", "\\x2. \\y2. \\p2. U0 -> U0", u);
    let apdu = format!(
        "J1 (\\x2. \\y2. \\p2. \
               Id U0 (J1 (\\x3. \\y3. \\p3. U0 -> U0) (\\x3. \\u3. u3) x2 y2 p2 \
                          (cind1 (\\w. U0) K e x2)) \
                     (cind1 (\\w. U0) K e y2)) \
            (\\x2. refl (cind1 (\\w. U0) K e x2)) \
            ((inj a : Coeq A R)) ((inj b : Coeq A R)) (glue a b s)"
    );
    let lvl1 = format!(
        "(A : U0) -> (R : A -> A -> U0) -> (K : A -> U0) -> \
         (e : (a : A) -> (b : A) -> (s : R a b) -> \
                Id U0 ({tr_ka}) (K b)) -> \
         (a : A) -> (b : A) -> (s : R a b) -> \
         Id (Id U0 ({tr_ka}) (K b)) ({apdu}) (e a b s)",
        tr_ka = tru("K a"),
    );
    format!("({lvl0}) * ({lvl1})")
}

/// Elaborate and install the three axiom types into a fresh signature.
pub fn standard() -> Signature {
    let mut sig = Signature::bare();
    let ctx = Context::new();
    for (name, src) in [
        (AxiomName::Funext, funext_src()),
        (AxiomName::Univalence, univalence_src()),
        (AxiomName::CoeqGlueBeta, cgluebeta_src()),
    ] {
        let stm = parse_term(&src)
            .unwrap_or_else(|e| panic!("axiom type for {name} does not parse: {e}"));
        let elab = Elab::new(&sig);
        let core = elab
            .is_type(&ctx, &stm)
            .unwrap_or_else(|e| panic!("axiom type for {name} does not elaborate: {e}"));
        let tyv = eval(&sig, &Env::nil(), &core);
        sig.set_axiom_ty(name, Arc::new(core), tyv);
    }
    sig
}
