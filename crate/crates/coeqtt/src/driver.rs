//! File-level checking: parse, elaborate declaration by declaration,
//! collect diagnostics, and keep going after failures with name poisoning.

use crate::diag::{codes, Diagnostic};
use crate::elab::Elab;
use crate::nbe::{convertible, eval};
use crate::parse::{parse_module, SDeclKind};
use crate::print::print_core;
use crate::sig::{Context, Signature};
use crate::term::AxiomName;
use std::collections::HashSet;
use std::path::{Path, PathBuf};
use std::sync::Arc;

pub struct Checker {
    pub sig: Signature,
    pub poisoned: HashSet<String>,
    pub diagnostics: Vec<Diagnostic>,
    /// One `ok` line per accepted declaration, in order.
    pub lines: Vec<String>,
}

fn type_head(printed: &str) -> String {
    const LIMIT: usize = 72;
    if printed.len() <= LIMIT {
        printed.to_string()
    } else {
        let mut cut = LIMIT - 3;
        while !printed.is_char_boundary(cut) {
            cut -= 1;
        }
        format!("{}...", &printed[..cut])
    }
}

impl Default for Checker {
    fn default() -> Self {
        Self::new()
    }
}

impl Checker {
    pub fn new() -> Checker {
        Checker {
            sig: crate::axioms::standard(),
            poisoned: HashSet::new(),
            diagnostics: Vec::new(),
            lines: Vec::new(),
        }
    }

    pub fn error_count(&self) -> usize {
        self.diagnostics
            .iter()
            .filter(|d| d.severity == crate::diag::Severity::Error)
            .count()
    }

    /// Check one source file against the running signature.
    pub fn check_source(&mut self, file: &str, src: &str) {
        let (decls, parse_diags) = parse_module(src);
        self.diagnostics
            .extend(parse_diags.into_iter().map(|d| d.in_file(file)));

        for d in decls {
            let result = self.check_declaration(&d);
            match result {
                Ok(line) => self.lines.push(line),
                Err(diag) => {
                    self.diagnostics.push(diag.in_file(file));
                    self.poisoned.insert(d.name.clone());
                }
            }
        }
    }

    fn check_declaration(&mut self, d: &crate::parse::SDecl) -> Result<String, Box<Diagnostic>> {
        let elab = Elab {
            sig: &self.sig,
            poisoned: self.poisoned.clone(),
        };
        let ctx = Context::new();
        match &d.kind {
            SDeclKind::Def { ty, body } => {
                if self.sig.lookup(&d.name).is_some() {
                    return Err(Box::new(Diagnostic::error(
                        d.name_span,
                        codes::DUPLICATE_NAME,
                        format!("`{}` is already defined", d.name),
                    )));
                }
                let tyc = elab.is_type(&ctx, ty)?;
                let tyv = eval(&self.sig, &ctx.env, &tyc);
                let bodyc = elab.check(&ctx, body, &tyv)?;
                let bodyv = eval(&self.sig, &ctx.env, &bodyc);
                let head = type_head(&print_core(&tyc));
                self.sig.append(
                    Arc::from(d.name.as_str()),
                    Arc::new(tyc),
                    tyv,
                    Arc::new(bodyc),
                    bodyv,
                );
                self.poisoned.remove(&d.name);
                Ok(format!("ok {} : {}", d.name, head))
            }
            SDeclKind::ConvAssert { ty, lhs, rhs } => {
                let tyc = elab.is_type(&ctx, ty)?;
                let tyv = eval(&self.sig, &ctx.env, &tyc);
                let lc = elab.check(&ctx, lhs, &tyv)?;
                let rc = elab.check(&ctx, rhs, &tyv)?;
                let lv = eval(&self.sig, &ctx.env, &lc);
                let rv = eval(&self.sig, &ctx.env, &rc);
                if convertible(&self.sig, 0, &tyv, &lv, &rv) {
                    Ok(format!("ok {} (conv-assert)", d.name))
                } else {
                    let lq = print_core(&crate::nbe::quote(&self.sig, 0, &lv));
                    let rq = print_core(&crate::nbe::quote(&self.sig, 0, &rv));
                    Err(Box::new(
                        Diagnostic::error(
                            d.span,
                            codes::CONV_ASSERT_FAILED,
                            format!("`{}`: the two sides are not definitionally equal", d.name),
                        )
                        .with_types(lq, rq),
                    ))
                }
            }
            SDeclKind::AxiomAssert { target, allowed } => {
                let Some((_, decl)) = self.sig.lookup(target) else {
                    let code = if self.poisoned.contains(target) {
                        codes::POISONED
                    } else {
                        codes::UNBOUND_NAME
                    };
                    return Err(Box::new(Diagnostic::error(
                        d.name_span,
                        code,
                        format!("`{target}` is not a checked declaration"),
                    )));
                };
                let allowed_set: std::collections::BTreeSet<AxiomName> =
                    allowed.iter().map(|(a, _)| *a).collect();
                let excess: Vec<&str> = decl
                    .axioms
                    .difference(&allowed_set)
                    .map(|a| a.as_str())
                    .collect();
                if excess.is_empty() {
                    Ok(format!("ok {} (axiom-assert)", d.name))
                } else {
                    Err(Box::new(Diagnostic::error(
                        d.span,
                        codes::AXIOM_ASSERT_FAILED,
                        format!(
                            "`{target}` uses axiom(s) outside the allowed set: {}",
                            excess.join(", ")
                        ),
                    )))
                }
            }
        }
    }

    /// Check a list of files in order. Unreadable files surface as io
    /// errors so the CLI can exit with status 2.
    pub fn check_files(&mut self, files: &[PathBuf]) -> std::io::Result<()> {
        for f in files {
            let src = std::fs::read_to_string(f)?;
            let name = f.to_string_lossy().to_string();
            self.check_source(&name, &src);
        }
        Ok(())
    }
}

/// Read a manifest: one filename per line, `optional:`-prefixed lines are
/// included only when requested. Paths resolve relative to the manifest.
pub fn load_manifest(path: &Path, include_optional: bool) -> std::io::Result<Vec<PathBuf>> {
    let text = std::fs::read_to_string(path)?;
    let dir = path.parent().unwrap_or(Path::new("."));
    let mut out = Vec::new();
    for line in text.lines() {
        let line = line.trim();
        if line.is_empty() {
            continue;
        }
        if let Some(rest) = line.strip_prefix("optional:") {
            if include_optional {
                out.push(dir.join(rest.trim()));
            }
        } else {
            out.push(dir.join(line));
        }
    }
    Ok(out)
}
