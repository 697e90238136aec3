//! Lexer for `.hott` sources. ASCII `\` is the abstraction head; `--`
//! starts a line comment. Tokens carry their source span.

use crate::diag::{codes, Diagnostic, Span};

#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub enum Kw {
    U0,
    U1,
    Id,
    Refl,
    J0,
    J1,
    Coeq,
    Inj,
    Glue,
    Cind0,
    Cind1,
    Empty,
    Eabsurd0,
    Eabsurd1,
    Unit,
    Tt,
    Uind0,
    Uind1,
    Sum,
    Inl,
    Inr,
    Scase0,
    Scase1,
    Nat,
    Zero,
    Suc,
    Nind0,
    Nind1,
    Funext,
    Univalence,
    Cgluebeta,
}

impl Kw {
    pub fn from_ident(s: &str) -> Option<Kw> {
        use Kw::*;
        Some(match s {
            "U0" => U0,
            "U1" => U1,
            "Id" => Id,
            "refl" => Refl,
            "J0" => J0,
            "J1" => J1,
            "Coeq" => Coeq,
            "inj" => Inj,
            "glue" => Glue,
            "cind0" => Cind0,
            "cind1" => Cind1,
            "Empty" => Empty,
            "eabsurd0" => Eabsurd0,
            "eabsurd1" => Eabsurd1,
            "Unit" => Unit,
            "tt" => Tt,
            "uind0" => Uind0,
            "uind1" => Uind1,
            "Sum" => Sum,
            "inl" => Inl,
            "inr" => Inr,
            "scase0" => Scase0,
            "scase1" => Scase1,
            "Nat" => Nat,
            "zero" => Zero,
            "suc" => Suc,
            "nind0" => Nind0,
            "nind1" => Nind1,
            "funext" => Funext,
            "univalence" => Univalence,
            "cgluebeta" => Cgluebeta,
            _ => return None,
        })
    }

    pub fn as_str(self) -> &'static str {
        use Kw::*;
        match self {
            U0 => "U0",
            U1 => "U1",
            Id => "Id",
            Refl => "refl",
            J0 => "J0",
            J1 => "J1",
            Coeq => "Coeq",
            Inj => "inj",
            Glue => "glue",
            Cind0 => "cind0",
            Cind1 => "cind1",
            Empty => "Empty",
            Eabsurd0 => "eabsurd0",
            Eabsurd1 => "eabsurd1",
            Unit => "Unit",
            Tt => "tt",
            Uind0 => "uind0",
            Uind1 => "uind1",
            Sum => "Sum",
            Inl => "inl",
            Inr => "inr",
            Scase0 => "scase0",
            Scase1 => "scase1",
            Nat => "Nat",
            Zero => "zero",
            Suc => "suc",
            Nind0 => "nind0",
            Nind1 => "nind1",
            Funext => "funext",
            Univalence => "univalence",
            Cgluebeta => "cgluebeta",
        }
    }
}

pub fn is_reserved_word(s: &str) -> bool {
    Kw::from_ident(s).is_some() || matches!(s, "def" | "axiom-assert" | "conv-assert")
}

#[derive(Clone, PartialEq, Eq, Debug)]
pub enum Tok {
    Ident(String),
    Kw(Kw),
    Def,
    ConvAssert,
    AxiomAssert,
    LParen,
    RParen,
    LBrace,
    RBrace,
    Colon,
    ColonEq,
    Arrow,
    Star,
    Backslash,
    Dot,
    Dot1,
    Dot2,
    Comma,
    Eq,
    EqEq,
}

impl Tok {
    pub fn describe(&self) -> String {
        match self {
            Tok::Ident(s) => format!("identifier `{s}`"),
            Tok::Kw(k) => format!("`{}`", k.as_str()),
            Tok::Def => "`def`".into(),
            Tok::ConvAssert => "`conv-assert`".into(),
            Tok::AxiomAssert => "`axiom-assert`".into(),
            Tok::LParen => "`(`".into(),
            Tok::RParen => "`)`".into(),
            Tok::LBrace => "`{`".into(),
            Tok::RBrace => "`}`".into(),
            Tok::Colon => "`:`".into(),
            Tok::ColonEq => "`:=`".into(),
            Tok::Arrow => "`->`".into(),
            Tok::Star => "`*`".into(),
            Tok::Backslash => "`\\`".into(),
            Tok::Dot => "`.`".into(),
            Tok::Dot1 => "`.1`".into(),
            Tok::Dot2 => "`.2`".into(),
            Tok::Comma => "`,`".into(),
            Tok::Eq => "`=`".into(),
            Tok::EqEq => "`==`".into(),
        }
    }
}

#[derive(Clone, Debug)]
pub struct Token {
    pub tok: Tok,
    pub span: Span,
}

fn ident_start(c: char) -> bool {
    c.is_ascii_alphabetic() || c == '_'
}

fn ident_cont(c: char) -> bool {
    c.is_ascii_alphanumeric() || c == '_' || c == '\''
}

/// Tokenize a source file. Illegal characters are reported with their exact
/// span and skipped, so lexing is total.
pub fn tokenize(src: &str) -> (Vec<Token>, Vec<Diagnostic>) {
    let mut toks = Vec::new();
    let mut diags = Vec::new();
    let bytes = src.as_bytes();
    let mut i = 0usize;
    let mut line = 1u32;
    let mut col = 1u32;

    macro_rules! span {
        ($start:expr, $startline:expr, $startcol:expr, $len:expr) => {
            Span {
                offset: $start,
                line: $startline,
                col: $startcol,
                len: $len as u32,
            }
        };
    }

    while i < bytes.len() {
        let start = i;
        let (sl, sc) = (line, col);
        let c = src[i..].chars().next().unwrap();
        match c {
            '\n' => {
                i += 1;
                line += 1;
                col = 1;
            }
            c if c.is_whitespace() => {
                i += c.len_utf8();
                col += 1;
            }
            '-' if bytes.get(i + 1) == Some(&b'-') => {
                while i < bytes.len() && bytes[i] != b'\n' {
                    i += 1;
                }
            }
            '-' if bytes.get(i + 1) == Some(&b'>') => {
                toks.push(Token {
                    tok: Tok::Arrow,
                    span: span!(start, sl, sc, 2),
                });
                i += 2;
                col += 2;
            }
            '(' | ')' | '{' | '}' | '*' | '\\' | ',' => {
                let t = match c {
                    '(' => Tok::LParen,
                    ')' => Tok::RParen,
                    '{' => Tok::LBrace,
                    '}' => Tok::RBrace,
                    '*' => Tok::Star,
                    '\\' => Tok::Backslash,
                    _ => Tok::Comma,
                };
                toks.push(Token {
                    tok: t,
                    span: span!(start, sl, sc, 1),
                });
                i += 1;
                col += 1;
            }
            ':' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push(Token {
                        tok: Tok::ColonEq,
                        span: span!(start, sl, sc, 2),
                    });
                    i += 2;
                    col += 2;
                } else {
                    toks.push(Token {
                        tok: Tok::Colon,
                        span: span!(start, sl, sc, 1),
                    });
                    i += 1;
                    col += 1;
                }
            }
            '=' => {
                if bytes.get(i + 1) == Some(&b'=') {
                    toks.push(Token {
                        tok: Tok::EqEq,
                        span: span!(start, sl, sc, 2),
                    });
                    i += 2;
                    col += 2;
                } else {
                    toks.push(Token {
                        tok: Tok::Eq,
                        span: span!(start, sl, sc, 1),
                    });
                    i += 1;
                    col += 1;
                }
            }
            '.' => {
                match bytes.get(i + 1) {
                    Some(b'1') => {
                        toks.push(Token {
                            tok: Tok::Dot1,
                            span: span!(start, sl, sc, 2),
                        });
                        i += 2;
                        col += 2;
                    }
                    Some(b'2') => {
                        toks.push(Token {
                            tok: Tok::Dot2,
                            span: span!(start, sl, sc, 2),
                        });
                        i += 2;
                        col += 2;
                    }
                    _ => {
                        toks.push(Token {
                            tok: Tok::Dot,
                            span: span!(start, sl, sc, 1),
                        });
                        i += 1;
                        col += 1;
                    }
                }
            }
            c if ident_start(c) => {
                let mut j = i;
                while j < bytes.len() {
                    let ch = src[j..].chars().next().unwrap();
                    if ident_cont(ch) {
                        j += ch.len_utf8();
                    } else {
                        break;
                    }
                }
                let mut word = &src[i..j];
                // `axiom-assert` / `conv-assert` are keywords with a hyphen.
                if (word == "axiom" || word == "conv") && src[j..].starts_with("-assert") {
                    j += "-assert".len();
                    word = &src[i..j];
                }
                let n = j - i;
                let tok = match word {
                    "def" => Tok::Def,
                    "conv-assert" => Tok::ConvAssert,
                    "axiom-assert" => Tok::AxiomAssert,
                    _ => match Kw::from_ident(word) {
                        Some(k) => Tok::Kw(k),
                        None => Tok::Ident(word.to_string()),
                    },
                };
                toks.push(Token {
                    tok,
                    span: span!(start, sl, sc, n),
                });
                i = j;
                col += n as u32;
            }
            other => {
                let n = other.len_utf8();
                diags.push(Diagnostic::error(
                    span!(start, sl, sc, n),
                    codes::ILLEGAL_CHARACTER,
                    format!("illegal character `{other}`"),
                ));
                i += n;
                col += 1;
            }
        }
    }
    (toks, diags)
}
