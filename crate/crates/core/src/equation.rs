//! Equations over named discrete functions with one unknown.
//!
//! The grammar is the infix form used for tables of two variables:
//!
//! ```text
//! solve x : (x f1 a) f3 (x f2 b) = c
//! ```
//!
//! `TERM ::= '(' TERM NAME TERM ')' | IDENT`, an equation is
//! `TERM NAME TERM '=' IDENT` or `TERM '=' IDENT`, and the `solve <ident> :`
//! prefix declares which identifier is the unknown. Every `NAME` must be
//! bound to a function table; every other identifier is a parameter. The
//! right-hand side identifier becomes the last parameter.

use std::collections::BTreeMap;

use crate::alphabet::{Alphabet, MultiValue};
use crate::error::Error;
use crate::table::DiscreteFunction;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum EquationExpr {
    /// The declared unknown.
    Unknown,
    /// A named parameter.
    Param(String),
    /// Application of a bound function to sub-terms.
    Call(String, Vec<EquationExpr>),
}

impl EquationExpr {
    fn contains_unknown(&self) -> bool {
        match self {
            EquationExpr::Unknown => true,
            EquationExpr::Param(_) => false,
            EquationExpr::Call(_, kids) => kids.iter().any(|k| k.contains_unknown()),
        }
    }

    fn collect_params(&self, out: &mut Vec<String>) {
        match self {
            EquationExpr::Unknown => {}
            EquationExpr::Param(name) => {
                if !out.iter().any(|p| p == name) {
                    out.push(name.clone());
                }
            }
            EquationExpr::Call(_, kids) => kids.iter().for_each(|k| k.collect_params(out)),
        }
    }
}

/// A validated equation plus its function bindings.
#[derive(Debug, Clone)]
pub struct EquationAst {
    lhs: EquationExpr,
    unknown: String,
    rhs_param: String,
    /// All parameter names, the right-hand side one last.
    params: Vec<String>,
    bindings: BTreeMap<String, DiscreteFunction>,
    alpha: Alphabet,
}

impl EquationAst {
    pub fn lhs(&self) -> &EquationExpr {
        &self.lhs
    }

    pub fn unknown(&self) -> &str {
        &self.unknown
    }

    pub fn rhs_param(&self) -> &str {
        &self.rhs_param
    }

    pub fn params(&self) -> &[String] {
        &self.params
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alpha
    }

    pub fn binding(&self, name: &str) -> Option<&DiscreteFunction> {
        self.bindings.get(name)
    }

    /// Evaluates the left-hand side under an assignment of the unknown and
    /// all parameters.
    pub fn eval_lhs(
        &self,
        unknown: MultiValue,
        params: &BTreeMap<&str, MultiValue>,
    ) -> Result<MultiValue> {
        self.eval_expr(&self.lhs, unknown, params)
    }

    fn eval_expr(
        &self,
        expr: &EquationExpr,
        unknown: MultiValue,
        params: &BTreeMap<&str, MultiValue>,
    ) -> Result<MultiValue> {
        match expr {
            EquationExpr::Unknown => Ok(unknown),
            EquationExpr::Param(name) => params
                .get(name.as_str())
                .copied()
                .ok_or_else(|| Error::UnboundParameter(name.clone())),
            EquationExpr::Call(name, kids) => {
                let f =
                    self.bindings.get(name).ok_or_else(|| Error::UnknownFunction(name.clone()))?;
                let args: Vec<MultiValue> = kids
                    .iter()
                    .map(|k| self.eval_expr(k, unknown, params))
                    .collect::<Result<_>>()?;
                f.evaluate_setwise(&args)
            }
        }
    }

    /// Recognizes the two-branch shape `(x f1 a) f3 (x f2 b) = c` and
    /// returns `(f1, f2, f3)` when it matches.
    pub fn two_branch_parts(
        &self,
    ) -> Option<(&DiscreteFunction, &DiscreteFunction, &DiscreteFunction)> {
        let EquationExpr::Call(outer, kids) = &self.lhs else {
            return None;
        };
        let [left, right] = kids.as_slice() else {
            return None;
        };
        let EquationExpr::Call(n1, k1) = left else {
            return None;
        };
        let EquationExpr::Call(n2, k2) = right else {
            return None;
        };
        let [EquationExpr::Unknown, EquationExpr::Param(a)] = k1.as_slice() else {
            return None;
        };
        let [EquationExpr::Unknown, EquationExpr::Param(b)] = k2.as_slice() else {
            return None;
        };
        if self.params.len() != 3 || a == b || *a != self.params[0] || *b != self.params[1] {
            return None;
        }
        Some((self.bindings.get(n1)?, self.bindings.get(n2)?, self.bindings.get(outer)?))
    }
}

/// Parses and validates an equation against its bindings.
pub fn parse_equation(
    text: &str,
    bindings: BTreeMap<String, DiscreteFunction>,
) -> Result<EquationAst> {
    let mut tokens = tokenize(text)?;
    tokens.reverse(); // pop from the back

    expect_word(&mut tokens, "solve")?;
    let unknown = expect_ident(&mut tokens)?;
    expect_punct(&mut tokens, ':')?;

    let mut parser = TermParser { tokens, unknown: unknown.clone(), bindings: &bindings };
    let first = parser.parse_term()?;
    let lhs = match parser.peek() {
        Some(Token::Ident(_, _)) => {
            let name = parser.expect_name()?;
            let second = parser.parse_term()?;
            EquationExpr::Call(name, vec![first, second])
        }
        _ => first,
    };
    let mut tokens = parser.tokens;
    expect_punct(&mut tokens, '=')?;
    let (rhs_name, rhs_pos) = match tokens.pop() {
        Some(Token::Ident(name, pos)) => (name, pos),
        other => return Err(err_at(other, "expected an identifier after `=`")),
    };
    if let Some(tok) = tokens.pop() {
        return Err(err_at(Some(tok), "unexpected input after the equation"));
    }

    if rhs_name == unknown {
        return Err(Error::UnknownOnRhs(unknown));
    }
    if bindings.contains_key(&rhs_name) {
        return Err(Error::parse(rhs_pos.0, rhs_pos.1, "the right-hand side must be a parameter"));
    }
    if !lhs.contains_unknown() {
        return Err(Error::MissingUnknown(unknown));
    }

    let mut alphas = bindings.values().map(|f| f.alphabet().clone());
    let alpha = alphas
        .next()
        .ok_or_else(|| Error::Invalid("an equation needs at least one bound function".into()))?;
    for other in alphas {
        if other != alpha {
            return Err(Error::AlphabetMismatch {
                expected: alpha.labels(),
                found: other.labels(),
            });
        }
    }
    validate_arity(&lhs, &bindings)?;

    let mut params = Vec::new();
    lhs.collect_params(&mut params);
    params.retain(|p| *p != rhs_name);
    params.push(rhs_name.clone());

    Ok(EquationAst { lhs, unknown, rhs_param: rhs_name, params, bindings, alpha })
}

fn validate_arity(
    expr: &EquationExpr,
    bindings: &BTreeMap<String, DiscreteFunction>,
) -> Result<()> {
    if let EquationExpr::Call(name, kids) = expr {
        let f = bindings.get(name).ok_or_else(|| Error::UnknownFunction(name.clone()))?;
        if f.arity() != kids.len() {
            return Err(Error::ArityMismatch { expected: f.arity(), found: kids.len() });
        }
        kids.iter().try_for_each(|k| validate_arity(k, bindings))?;
    }
    Ok(())
}

#[derive(Debug, Clone, PartialEq)]
enum Token {
    Ident(String, (usize, usize)),
    Punct(char, (usize, usize)),
}

fn tokenize(text: &str) -> Result<Vec<Token>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let mut chars = line.char_indices().peekable();
        while let Some(&(col, c)) = chars.peek() {
            if c.is_whitespace() {
                chars.next();
            } else if c == '(' || c == ')' || c == '=' || c == ':' {
                out.push(Token::Punct(c, (lineno + 1, col + 1)));
                chars.next();
            } else if c.is_alphanumeric() || c == '_' || c == '-' {
                let start = col;
                let mut word = String::new();
                while let Some(&(_, ch)) = chars.peek() {
                    if ch.is_alphanumeric() || ch == '_' || ch == '-' {
                        word.push(ch);
                        chars.next();
                    } else {
                        break;
                    }
                }
                out.push(Token::Ident(word, (lineno + 1, start + 1)));
            } else {
                return Err(Error::parse(lineno + 1, col + 1, format!("unexpected `{c}`")));
            }
        }
    }
    Ok(out)
}

fn err_at(tok: Option<Token>, message: &str) -> Error {
    match tok {
        Some(Token::Ident(_, (l, c))) | Some(Token::Punct(_, (l, c))) => {
            Error::parse(l, c, message)
        }
        None => Error::parse(1, 1, format!("{message}, found end of input")),
    }
}

fn expect_word(tokens: &mut Vec<Token>, word: &str) -> Result<()> {
    match tokens.pop() {
        Some(Token::Ident(w, _)) if w == word => Ok(()),
        other => Err(err_at(other, &format!("expected `{word}`"))),
    }
}

fn expect_ident(tokens: &mut Vec<Token>) -> Result<String> {
    match tokens.pop() {
        Some(Token::Ident(w, _)) => Ok(w),
        other => Err(err_at(other, "expected an identifier")),
    }
}

fn expect_punct(tokens: &mut Vec<Token>, p: char) -> Result<()> {
    match tokens.pop() {
        Some(Token::Punct(c, _)) if c == p => Ok(()),
        other => Err(err_at(other, &format!("expected `{p}`"))),
    }
}

struct TermParser<'a> {
    tokens: Vec<Token>,
    unknown: String,
    bindings: &'a BTreeMap<String, DiscreteFunction>,
}

impl TermParser<'_> {
    fn peek(&self) -> Option<&Token> {
        self.tokens.last()
    }

    fn parse_term(&mut self) -> Result<EquationExpr> {
        match self.tokens.pop() {
            Some(Token::Punct('(', _)) => {
                let left = self.parse_term()?;
                let name = self.expect_name()?;
                let right = self.parse_term()?;
                match self.tokens.pop() {
                    Some(Token::Punct(')', _)) => Ok(EquationExpr::Call(name, vec![left, right])),
                    other => Err(err_at(other, "expected `)`")),
                }
            }
            Some(Token::Ident(word, _)) => Ok(self.leaf(word)),
            other => Err(err_at(other, "expected a term")),
        }
    }

    fn leaf(&self, word: String) -> EquationExpr {
        if word == self.unknown {
            EquationExpr::Unknown
        } else {
            EquationExpr::Param(word)
        }
    }

    fn expect_name(&mut self) -> Result<String> {
        match self.tokens.pop() {
            Some(Token::Ident(word, pos)) => {
                if self.bindings.contains_key(&word) {
                    Ok(word)
                } else {
                    Err(Error::parse(
                        pos.0,
                        pos.1,
                        format!("`{word}` is not a bound function name"),
                    ))
                }
            }
            other => Err(err_at(other, "expected a function name")),
        }
    }
}
