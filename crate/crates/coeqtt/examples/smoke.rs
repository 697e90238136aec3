use coeqtt::driver::Checker;

fn main() {
    let sig = coeqtt::axioms::standard();
    for a in coeqtt::term::ALL_AXIOMS {
        let (ty, _) = sig.axiom_ty(a).unwrap();
        println!("{a}: type installed ({} chars printed)", coeqtt::print::print_core(ty).len());
    }
    // First real declarations through the full pipeline.
    let src = r#"
-- path composition by induction on the second path
def concat : (A : U0) -> (x : A) -> (y : A) -> (z : A) -> Id A x y -> Id A y z -> Id A x z
  := \A. \x. \y. \z. \p. \q. J0 (\y2. \z2. \q2. Id A x y2 -> Id A x z2) (\y2. \p2. p2) y z q p

def transport : (A : U0) -> (P : A -> U0) -> (x : A) -> (y : A) -> Id A x y -> P x -> P y
  := \A. \P. \x. \y. \p. J0 (\x2. \y2. \p2. P x2 -> P y2) (\x2. \u. u) x y p

conv-assert transport_refl
  : (A : U0) -> (P : A -> U0) -> (x : A) -> P x -> P x
  := (\A. \P. \x. transport A P x x (refl x)) == (\A. \P. \x. \u. u)

conv-assert concat_refl_right
  : (A : U0) -> (x : A) -> (y : A) -> (p : Id A x y) -> Id A x y
  := (\A. \x. \y. \p. concat A x y y p (refl y)) == (\A. \x. \y. \p. p)

def cind_beta_demo
  : (A : U0) -> (R : A -> A -> U0) -> (P : Coeq A R -> U0) ->
    (f : (a : A) -> P (inj a)) ->
    (e : (a : A) -> (b : A) -> (s : R a b) -> Id (P (inj b)) (transport (Coeq A R) P (inj a) (inj b) (glue a b s) (f a)) (f b)) ->
    (a : A) -> P (inj a)
  := \A. \R. \P. \f. \e. \a. cind0 P f e ((inj a : Coeq A R))

conv-assert cind_beta
  : (A : U0) -> (R : A -> A -> U0) -> (P : Coeq A R -> U0) ->
    (f : (a : A) -> P (inj a)) ->
    (e : (a : A) -> (b : A) -> (s : R a b) -> Id (P (inj b)) (transport (Coeq A R) P (inj a) (inj b) (glue a b s) (f a)) (f b)) ->
    (a : A) -> P (inj a)
  := (\A. \R. \P. \f. \e. \a. cind0 P f e ((inj a : Coeq A R))) == (\A. \R. \P. \f. \e. \a. f a)
"#;
    let mut checker = Checker::new();
    checker.check_source("demo.hott", src);
    for l in &checker.lines { println!("{l}"); }
    for d in &checker.diagnostics { println!("{d}"); }
    assert_eq!(checker.error_count(), 0, "demo should check");
    // Round trip each declaration body.
    for d in checker.sig.decls() {
        let printed = coeqtt::print::print_core(&d.body);
        let stm = coeqtt::parse::parse_term(&printed).expect("reparse");
        let elab = coeqtt::elab::Elab::new(&checker.sig);
        let tyv = d.ty_value.clone();
        let core = elab.check(&coeqtt::sig::Context::new(), &stm, &tyv)
            .unwrap_or_else(|e| panic!("{}: {e}", d.name));
        assert!(core.alpha_eq(&d.body), "{}: round trip differs", d.name);
        println!("round trip ok: {}", d.name);
    }
}
