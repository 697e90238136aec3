//! Recursive-descent parser for the surface language.
//!
//! Precedence, tightest first: projection postfix, application, `*`
//! (right-associative), `->` (right-associative), `={A}`. Lambdas extend as
//! far right as possible. Parsing is total: errors become diagnostics and
//! recovery skips to the next declaration keyword, so a reported error
//! never overlaps an emitted declaration.

use crate::diag::{codes, Diagnostic, Span};
use crate::lex::{tokenize, Kw, Tok, Token};
use crate::term::AxiomName;

#[derive(Clone, Debug, PartialEq)]
pub struct STm {
    pub node: SNode,
    pub span: Span,
}

#[derive(Clone, Debug, PartialEq)]
pub enum SNode {
    Var(String),
    Builtin(Kw),
    App(Box<STm>, Box<STm>),
    Lam(String, Box<STm>),
    Pi(String, Box<STm>, Box<STm>),
    Sg(String, Box<STm>, Box<STm>),
    Pair(Box<STm>, Box<STm>),
    Proj1(Box<STm>),
    Proj2(Box<STm>),
    /// `lhs ={ambient} rhs`
    IdSugar(Box<STm>, Box<STm>, Box<STm>),
    Annot(Box<STm>, Box<STm>),
}

impl STm {
    fn new(node: SNode, span: Span) -> STm {
        STm { node, span }
    }

    /// Structural comparison with spans ignored.
    pub fn same_shape(&self, other: &STm) -> bool {
        use SNode::*;
        match (&self.node, &other.node) {
            (Var(a), Var(b)) => a == b,
            (Builtin(a), Builtin(b)) => a == b,
            (App(a, b), App(a2, b2)) | (Pair(a, b), Pair(a2, b2)) => {
                a.same_shape(a2) && b.same_shape(b2)
            }
            (Lam(x, b), Lam(x2, b2)) => x == x2 && b.same_shape(b2),
            (Pi(x, a, b), Pi(x2, a2, b2)) | (Sg(x, a, b), Sg(x2, a2, b2)) => {
                x == x2 && a.same_shape(a2) && b.same_shape(b2)
            }
            (Proj1(a), Proj1(b)) | (Proj2(a), Proj2(b)) => a.same_shape(b),
            (IdSugar(a, x, y), IdSugar(a2, x2, y2)) => {
                a.same_shape(a2) && x.same_shape(x2) && y.same_shape(y2)
            }
            (Annot(a, b), Annot(a2, b2)) => a.same_shape(a2) && b.same_shape(b2),
            _ => false,
        }
    }
}

#[derive(Clone, Debug)]
pub enum SDeclKind {
    Def {
        ty: STm,
        body: STm,
    },
    ConvAssert {
        ty: STm,
        lhs: STm,
        rhs: STm,
    },
    /// Asserts the named declaration's transitive axiom set is a subset of
    /// the listed axioms.
    AxiomAssert {
        target: String,
        allowed: Vec<(AxiomName, Span)>,
    },
}

#[derive(Clone, Debug)]
pub struct SDecl {
    pub name: String,
    pub name_span: Span,
    pub kind: SDeclKind,
    pub span: Span,
}

struct Parser<'a> {
    toks: &'a [Token],
    pos: usize,
    eof_span: Span,
}

type PResult<T> = Result<T, Diagnostic>;

impl<'a> Parser<'a> {
    fn peek(&self) -> Option<&Tok> {
        self.toks.get(self.pos).map(|t| &t.tok)
    }

    fn peek_at(&self, k: usize) -> Option<&Tok> {
        self.toks.get(self.pos + k).map(|t| &t.tok)
    }

    fn span(&self) -> Span {
        self.toks
            .get(self.pos)
            .map(|t| t.span)
            .unwrap_or(self.eof_span)
    }

    fn prev_span(&self) -> Span {
        if self.pos == 0 {
            self.eof_span
        } else {
            self.toks[self.pos - 1].span
        }
    }

    fn bump(&mut self) -> Option<Token> {
        let t = self.toks.get(self.pos).cloned();
        if t.is_some() {
            self.pos += 1;
        }
        t
    }

    fn expect(&mut self, want: Tok, what: &str) -> PResult<Span> {
        match self.peek() {
            Some(t) if *t == want => Ok(self.bump().unwrap().span),
            Some(t) => Err(Diagnostic::error(
                self.span(),
                codes::UNEXPECTED_TOKEN,
                format!("expected {what}, found {}", t.describe()),
            )),
            None => Err(Diagnostic::error(
                self.eof_span,
                codes::UNEXPECTED_TOKEN,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn expect_ident(&mut self, what: &str) -> PResult<(String, Span)> {
        match self.peek() {
            Some(Tok::Ident(_)) => {
                let t = self.bump().unwrap();
                if let Tok::Ident(s) = t.tok {
                    Ok((s, t.span))
                } else {
                    unreachable!()
                }
            }
            Some(t) => Err(Diagnostic::error(
                self.span(),
                codes::UNEXPECTED_TOKEN,
                format!("expected {what}, found {}", t.describe()),
            )),
            None => Err(Diagnostic::error(
                self.eof_span,
                codes::UNEXPECTED_TOKEN,
                format!("expected {what}, found end of input"),
            )),
        }
    }

    fn at_decl_start(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Def) | Some(Tok::ConvAssert) | Some(Tok::AxiomAssert) | None
        )
    }

    fn term(&mut self) -> PResult<STm> {
        if let Some(Tok::Backslash) = self.peek() {
            let start = self.span();
            self.bump();
            let (name, _) = self.expect_ident("a binder name after `\\`")?;
            self.expect(Tok::Dot, "`.` after the binder name")?;
            let body = self.term()?;
            let span = start.join(body.span);
            return Ok(STm::new(SNode::Lam(name, Box::new(body)), span));
        }
        self.eq_term()
    }

    fn eq_term(&mut self) -> PResult<STm> {
        let lhs = self.arr_term()?;
        if let Some(Tok::Eq) = self.peek() {
            self.bump();
            self.expect(Tok::LBrace, "`{` carrying the ambient type after `=`")?;
            let ambient = self.term()?;
            self.expect(Tok::RBrace, "`}` closing the ambient type")?;
            let rhs = self.arr_term()?;
            let span = lhs.span.join(rhs.span);
            return Ok(STm::new(
                SNode::IdSugar(Box::new(ambient), Box::new(lhs), Box::new(rhs)),
                span,
            ));
        }
        Ok(lhs)
    }

    /// Speculatively parse a `(x : A)` binder group. On success returns the
    /// name, domain and opening span with the cursor after `)`; on failure
    /// the cursor is restored.
    fn binder_group(&mut self) -> Option<(String, STm, Span)> {
        if !matches!(
            (self.peek(), self.peek_at(1), self.peek_at(2)),
            (Some(Tok::LParen), Some(Tok::Ident(_)), Some(Tok::Colon))
        ) {
            return None;
        }
        let save = self.pos;
        let start = self.span();
        self.bump();
        let (name, _) = self.expect_ident("a binder name").ok()?;
        self.bump(); // colon
        let dom = match self.term() {
            Ok(d) => d,
            Err(_) => {
                self.pos = save;
                return None;
            }
        };
        if self.expect(Tok::RParen, "`)`").is_err() {
            self.pos = save;
            return None;
        }
        Some((name, dom, start))
    }

    /// `(x : A) -> B`, products, and right-associative arrow chains;
    /// application > `*` > `->`.
    fn arr_term(&mut self) -> PResult<STm> {
        let save = self.pos;
        let lhs = if let Some((name, dom, start)) = self.binder_group() {
            match self.peek() {
                Some(Tok::Arrow) => {
                    self.bump();
                    let cod = self.arr_term()?;
                    let span = start.join(cod.span);
                    return Ok(STm::new(
                        SNode::Pi(name, Box::new(dom), Box::new(cod)),
                        span,
                    ));
                }
                Some(Tok::Star) => {
                    self.bump();
                    let snd = self.sigma_term()?;
                    let span = start.join(snd.span);
                    STm::new(SNode::Sg(name, Box::new(dom), Box::new(snd)), span)
                }
                _ => {
                    // Plain ascription `(x : A)`; re-parse uniformly.
                    self.pos = save;
                    self.sigma_term()?
                }
            }
        } else {
            self.sigma_term()?
        };
        if let Some(Tok::Arrow) = self.peek() {
            self.bump();
            let cod = self.arr_term()?;
            let span = lhs.span.join(cod.span);
            return Ok(STm::new(
                SNode::Pi("_".into(), Box::new(lhs), Box::new(cod)),
                span,
            ));
        }
        Ok(lhs)
    }

    fn sigma_term(&mut self) -> PResult<STm> {
        let save = self.pos;
        if let Some((name, dom, start)) = self.binder_group() {
            if let Some(Tok::Star) = self.peek() {
                self.bump();
                let snd = self.sigma_term()?;
                let span = start.join(snd.span);
                return Ok(STm::new(
                    SNode::Sg(name, Box::new(dom), Box::new(snd)),
                    span,
                ));
            }
            self.pos = save;
        }
        let fst = self.app_term()?;
        if let Some(Tok::Star) = self.peek() {
            self.bump();
            let snd = self.sigma_term()?;
            let span = fst.span.join(snd.span);
            return Ok(STm::new(
                SNode::Sg("_".into(), Box::new(fst), Box::new(snd)),
                span,
            ));
        }
        Ok(fst)
    }

    fn starts_atom(&self) -> bool {
        matches!(
            self.peek(),
            Some(Tok::Ident(_)) | Some(Tok::Kw(_)) | Some(Tok::LParen) | Some(Tok::Backslash)
        )
    }

    fn app_term(&mut self) -> PResult<STm> {
        let mut head = self.postfix_term()?;
        while self.starts_atom() {
            // A lambda argument must be parenthesized; a bare `\` here is
            // an error that the caller reports.
            if let Some(Tok::Backslash) = self.peek() {
                break;
            }
            let arg = self.postfix_term()?;
            let span = head.span.join(arg.span);
            head = STm::new(SNode::App(Box::new(head), Box::new(arg)), span);
        }
        Ok(head)
    }

    fn postfix_term(&mut self) -> PResult<STm> {
        let mut t = self.atom()?;
        loop {
            match self.peek() {
                Some(Tok::Dot1) => {
                    let sp = self.bump().unwrap().span;
                    let span = t.span.join(sp);
                    t = STm::new(SNode::Proj1(Box::new(t)), span);
                }
                Some(Tok::Dot2) => {
                    let sp = self.bump().unwrap().span;
                    let span = t.span.join(sp);
                    t = STm::new(SNode::Proj2(Box::new(t)), span);
                }
                _ => break,
            }
        }
        Ok(t)
    }

    fn atom(&mut self) -> PResult<STm> {
        match self.peek().cloned() {
            Some(Tok::Ident(name)) => {
                let sp = self.bump().unwrap().span;
                Ok(STm::new(SNode::Var(name), sp))
            }
            Some(Tok::Kw(k)) => {
                let sp = self.bump().unwrap().span;
                Ok(STm::new(SNode::Builtin(k), sp))
            }
            Some(Tok::LParen) => {
                let start = self.bump().unwrap().span;
                let t = self.term()?;
                match self.peek() {
                    Some(Tok::Comma) => {
                        self.bump();
                        let u = self.term()?;
                        let end = self.expect(Tok::RParen, "`)` closing the pair")?;
                        Ok(STm::new(
                            SNode::Pair(Box::new(t), Box::new(u)),
                            start.join(end),
                        ))
                    }
                    Some(Tok::Colon) => {
                        self.bump();
                        let ty = self.term()?;
                        let end = self.expect(Tok::RParen, "`)` closing the annotation")?;
                        Ok(STm::new(
                            SNode::Annot(Box::new(t), Box::new(ty)),
                            start.join(end),
                        ))
                    }
                    _ => {
                        let end = self.expect(Tok::RParen, "`)`")?;
                        Ok(STm {
                            node: t.node,
                            span: start.join(end),
                        })
                    }
                }
            }
            Some(other) => Err(Diagnostic::error(
                self.span(),
                codes::UNEXPECTED_TOKEN,
                format!("expected a term, found {}", other.describe()),
            )),
            None => Err(Diagnostic::error(
                self.eof_span,
                codes::UNEXPECTED_TOKEN,
                "expected a term, found end of input".to_string(),
            )),
        }
    }

    fn decl(&mut self) -> PResult<SDecl> {
        match self.peek() {
            Some(Tok::Def) => {
                let start = self.bump().unwrap().span;
                let (name, name_span) = self.expect_ident("a definition name")?;
                self.expect(Tok::Colon, "`:` before the declared type")?;
                let ty = self.term()?;
                self.expect(Tok::ColonEq, "`:=` before the body")?;
                let body = self.term()?;
                let span = start.join(self.prev_span());
                Ok(SDecl {
                    name,
                    name_span,
                    kind: SDeclKind::Def { ty, body },
                    span,
                })
            }
            Some(Tok::ConvAssert) => {
                let start = self.bump().unwrap().span;
                let (name, name_span) = self.expect_ident("an assertion name")?;
                self.expect(Tok::Colon, "`:` before the shared type")?;
                let ty = self.term()?;
                self.expect(Tok::ColonEq, "`:=` before the two sides")?;
                let lhs = self.term()?;
                self.expect(Tok::EqEq, "`==` between the two sides")?;
                let rhs = self.term()?;
                let span = start.join(self.prev_span());
                Ok(SDecl {
                    name,
                    name_span,
                    kind: SDeclKind::ConvAssert { ty, lhs, rhs },
                    span,
                })
            }
            Some(Tok::AxiomAssert) => {
                let start = self.bump().unwrap().span;
                let (target, name_span) = self.expect_ident("a declaration name")?;
                self.expect(Tok::Colon, "`:` before the axiom list")?;
                let mut allowed = Vec::new();
                while let Some(Tok::Kw(k)) = self.peek() {
                    let k = *k;
                    let sp = self.span();
                    match k {
                        Kw::Funext => allowed.push((AxiomName::Funext, sp)),
                        Kw::Univalence => allowed.push((AxiomName::Univalence, sp)),
                        Kw::Cgluebeta => allowed.push((AxiomName::CoeqGlueBeta, sp)),
                        _ => break,
                    }
                    self.bump();
                }
                let span = start.join(self.prev_span());
                Ok(SDecl {
                    name: target.clone(),
                    name_span,
                    kind: SDeclKind::AxiomAssert { target, allowed },
                    span,
                })
            }
            Some(other) => Err(Diagnostic::error(
                self.span(),
                codes::UNEXPECTED_TOKEN,
                format!(
                    "expected `def`, `conv-assert` or `axiom-assert`, found {}",
                    other.describe()
                ),
            )),
            None => unreachable!("decl called at end of input"),
        }
    }

    fn recover(&mut self) {
        while !self.at_decl_start() {
            self.pos += 1;
        }
    }
}

/// Parse a module. Declarations come back in file order; errors are
/// reported as diagnostics and never abort the process.
pub fn parse_module(src: &str) -> (Vec<SDecl>, Vec<Diagnostic>) {
    let (toks, mut diags) = tokenize(src);
    let eof_span = toks.last().map(|t| t.span).unwrap_or_default();
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        eof_span,
    };
    let mut decls = Vec::new();
    while p.peek().is_some() {
        match p.decl() {
            Ok(d) => decls.push(d),
            Err(e) => {
                diags.push(e);
                p.recover();
            }
        }
    }
    (decls, diags)
}

/// Parse a single term (used for kernel-internal type templates and tests).
pub fn parse_term(src: &str) -> Result<STm, Diagnostic> {
    let (toks, diags) = tokenize(src);
    if let Some(d) = diags.into_iter().next() {
        return Err(d);
    }
    let eof_span = toks.last().map(|t| t.span).unwrap_or_default();
    let mut p = Parser {
        toks: &toks,
        pos: 0,
        eof_span,
    };
    let t = p.term()?;
    if p.peek().is_some() {
        return Err(Diagnostic::error(
            p.span(),
            codes::UNEXPECTED_TOKEN,
            format!("unexpected {} after the term", p.peek().unwrap().describe()),
        ));
    }
    Ok(t)
}
