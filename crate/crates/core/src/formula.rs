//! Superposition formulas: sums of unary-function applications.
//!
//! A [`FormulaExpression`] is built from variable placeholders `@k`, unary
//! function literals applied to sub-expressions, and sums. Text form, e.g.
//! for a single-term decomposition:
//!
//! ```text
//! (0,0,1)[(0,0,1)@1 + (-1,-1,0)@2]
//! ```
//!
//! Grouping brackets alternate `[..]` / `{..}` by sum depth, mirroring the
//! bracket hierarchy of nested decompositions. Terms of a top-level sum are
//! printed one per line, continuation lines starting with `+ `. The empty
//! sum (the constant `{0}`) prints as `{}`.

use crate::alphabet::{Alphabet, MultiValue};
use crate::error::Error;
use crate::table::DiscreteFunction;
use crate::Result;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FormulaExpression {
    /// Placeholder for variable `k`, 1-based.
    Var(usize),
    /// A unary function applied to a sub-expression.
    Apply(DiscreteFunction, Box<FormulaExpression>),
    /// Sum of sub-expressions; the empty sum denotes the constant `{0}`.
    Sum(Vec<FormulaExpression>),
}

impl FormulaExpression {
    pub fn apply(f: DiscreteFunction, inner: FormulaExpression) -> Self {
        FormulaExpression::Apply(f, Box::new(inner))
    }

    /// Evaluates on set-valued arguments: a variable yields its argument, an
    /// application the union-image through the unary function, a sum the
    /// Minkowski fold (empty fold = `{0}`).
    pub fn eval(&self, args: &[MultiValue], alpha: &Alphabet) -> Result<MultiValue> {
        match self {
            FormulaExpression::Var(k) => args
                .get(k.checked_sub(1).ok_or(Error::UnboundVariable(0))?)
                .copied()
                .ok_or(Error::UnboundVariable(*k)),
            FormulaExpression::Apply(f, inner) => {
                let v = inner.eval(args, alpha)?;
                f.evaluate_setwise(&[v])
            }
            FormulaExpression::Sum(parts) => {
                let mut acc = MultiValue::singleton(alpha.zero());
                for p in parts {
                    acc = alpha.mv_sum(acc, p.eval(args, alpha)?);
                }
                Ok(acc)
            }
        }
    }

    /// Checks that the formula uses only the valid symbols: variables within
    /// `1..=arity` and unary functions over the given alphabet.
    pub fn validate(&self, arity: usize, alpha: &Alphabet) -> Result<()> {
        match self {
            FormulaExpression::Var(k) => {
                if *k == 0 || *k > arity {
                    Err(Error::UnboundVariable(*k))
                } else {
                    Ok(())
                }
            }
            FormulaExpression::Apply(f, inner) => {
                if f.arity() != 1 {
                    return Err(Error::ArityMismatch { expected: 1, found: f.arity() });
                }
                if f.alphabet() != alpha {
                    return Err(Error::AlphabetMismatch {
                        expected: alpha.labels(),
                        found: f.alphabet().labels(),
                    });
                }
                inner.validate(arity, alpha)
            }
            FormulaExpression::Sum(parts) => {
                parts.iter().try_for_each(|p| p.validate(arity, alpha))
            }
        }
    }

    /// Number of top-level terms.
    pub fn term_count(&self) -> usize {
        match self {
            FormulaExpression::Sum(parts) => parts.len(),
            _ => 1,
        }
    }

    /// Top-level terms of the formula.
    pub fn terms(&self) -> &[FormulaExpression] {
        match self {
            FormulaExpression::Sum(parts) => parts,
            other => std::slice::from_ref(other),
        }
    }

    /// Largest variable index used, or 0 when there is none.
    pub fn max_var(&self) -> usize {
        match self {
            FormulaExpression::Var(k) => *k,
            FormulaExpression::Apply(_, inner) => inner.max_var(),
            FormulaExpression::Sum(parts) => parts.iter().map(|p| p.max_var()).max().unwrap_or(0),
        }
    }

    /// Nesting depth of sums below this node.
    fn sum_depth(&self) -> usize {
        match self {
            FormulaExpression::Var(_) => 0,
            FormulaExpression::Apply(_, inner) => inner.sum_depth(),
            FormulaExpression::Sum(parts) => {
                1 + parts.iter().map(|p| p.sum_depth()).max().unwrap_or(0)
            }
        }
    }

    /// Renders in the bit-exact text format.
    pub fn to_text(&self) -> String {
        match self {
            FormulaExpression::Sum(parts) if parts.is_empty() => "{}".to_string(),
            FormulaExpression::Sum(parts) => {
                let rendered: Vec<String> = parts.iter().map(render_operand_free).collect();
                rendered.join("\n+ ")
            }
            other => render_operand_free(other),
        }
    }

    /// Parses the text format back into an expression.
    pub fn parse(text: &str, alpha: &Alphabet) -> Result<FormulaExpression> {
        let mut parser = Parser::new(text, alpha);
        let expr = parser.parse_sum(None)?;
        parser.expect_end()?;
        Ok(expr)
    }
}

/// Renders a term or sub-expression that is not inside brackets yet.
fn render_operand_free(expr: &FormulaExpression) -> String {
    match expr {
        FormulaExpression::Var(k) => format!("@{k}"),
        FormulaExpression::Apply(f, inner) => {
            let lit = f.unary_literal();
            match inner.as_ref() {
                FormulaExpression::Var(k) => format!("{lit}@{k}"),
                boxed => format!("{lit}{}", render_group(boxed)),
            }
        }
        FormulaExpression::Sum(_) => render_group(expr),
    }
}

/// Wraps an expression in the bracket pair chosen by its sum depth: odd
/// depths use `[..]`, even depths `{..}`.
fn render_group(expr: &FormulaExpression) -> String {
    let depth = expr.sum_depth().max(1);
    let (open, close) = if depth % 2 == 1 {
        ('[', ']')
    } else {
        ('{', '}')
    };
    let body = match expr {
        FormulaExpression::Sum(parts) => {
            let rendered: Vec<String> = parts.iter().map(render_operand_free).collect();
            rendered.join(" + ")
        }
        other => render_operand_free(other),
    };
    format!("{open}{body}{close}")
}

struct Parser<'a> {
    chars: Vec<char>,
    pos: usize,
    line: usize,
    col: usize,
    alpha: &'a Alphabet,
}

impl<'a> Parser<'a> {
    fn new(text: &str, alpha: &'a Alphabet) -> Self {
        Parser {
            chars: text.chars().collect(),
            pos: 0,
            line: 1,
            col: 1,
            alpha,
        }
    }

    fn err(&self, message: impl Into<String>) -> Error {
        Error::parse(self.line, self.col, message)
    }

    fn peek(&mut self) -> Option<char> {
        self.skip_ws();
        self.chars.get(self.pos).copied()
    }

    fn skip_ws(&mut self) {
        while let Some(&c) = self.chars.get(self.pos) {
            if c == '\n' {
                self.line += 1;
                self.col = 1;
                self.pos += 1;
            } else if c.is_whitespace() {
                self.col += 1;
                self.pos += 1;
            } else {
                break;
            }
        }
    }

    fn bump(&mut self) -> Option<char> {
        let c = self.chars.get(self.pos).copied();
        if c.is_some() {
            self.pos += 1;
            self.col += 1;
        }
        c
    }

    /// Parses `item (+ item)*`; stops at `close` (or end of input when
    /// parsing the top level). A single item is returned unwrapped.
    fn parse_sum(&mut self, close: Option<char>) -> Result<FormulaExpression> {
        let mut parts = Vec::new();
        loop {
            match self.peek() {
                None => break,
                Some(c) if Some(c) == close => break,
                Some('+') => {
                    if parts.is_empty() {
                        return Err(self.err("unexpected `+`"));
                    }
                    self.bump();
                }
                _ if !parts.is_empty() => {
                    return Err(self.err("expected `+` between terms"));
                }
                _ => {}
            }
            parts.push(self.parse_item()?);
        }
        if parts.len() == 1 {
            Ok(parts.pop().unwrap())
        } else {
            Ok(FormulaExpression::Sum(parts))
        }
    }

    fn parse_item(&mut self) -> Result<FormulaExpression> {
        match self.peek() {
            Some('(') => {
                let f = self.parse_literal()?;
                let operand = self.parse_operand()?;
                Ok(FormulaExpression::apply(f, operand))
            }
            Some('@') => self.parse_var(),
            Some('[') | Some('{') => self.parse_group(),
            Some(c) => Err(self.err(format!("unexpected `{c}`"))),
            None => Err(self.err("unexpected end of formula")),
        }
    }

    fn parse_operand(&mut self) -> Result<FormulaExpression> {
        match self.peek() {
            Some('@') => self.parse_var(),
            Some('[') | Some('{') => self.parse_group(),
            _ => Err(self.err("expected `@k` or a bracketed group after a literal")),
        }
    }

    fn parse_group(&mut self) -> Result<FormulaExpression> {
        let open = self.bump().expect("peeked");
        let close = if open == '[' { ']' } else { '}' };
        let inner = self.parse_sum(Some(close))?;
        match self.bump() {
            Some(c) if c == close => Ok(inner),
            _ => Err(self.err(format!("missing `{close}`"))),
        }
    }

    fn parse_var(&mut self) -> Result<FormulaExpression> {
        self.bump(); // '@'
        let mut digits = String::new();
        while let Some(&c) = self.chars.get(self.pos) {
            if c.is_ascii_digit() {
                digits.push(c);
                self.bump();
            } else {
                break;
            }
        }
        let k: usize = digits.parse().map_err(|_| self.err("expected digits after `@`"))?;
        if k == 0 {
            return Err(self.err("variables are numbered from 1"));
        }
        Ok(FormulaExpression::Var(k))
    }

    fn parse_literal(&mut self) -> Result<DiscreteFunction> {
        let (line, col) = (self.line, self.col);
        let mut text = String::new();
        match self.bump() {
            Some('(') => text.push('('),
            _ => return Err(self.err("expected `(`")),
        }
        loop {
            match self.bump() {
                Some(')') => {
                    text.push(')');
                    break;
                }
                Some(c) => text.push(c),
                None => return Err(Error::parse(line, col, "unterminated literal")),
            }
        }
        DiscreteFunction::parse_unary(self.alpha, &text)
            .map_err(|e| Error::parse(line, col, e.to_string()))
    }

    fn expect_end(&mut self) -> Result<()> {
        match self.peek() {
            None => Ok(()),
            Some(c) => Err(self.err(format!("unexpected `{c}` after formula"))),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;

    fn ternary() -> Alphabet {
        Alphabet::ternary()
    }

    fn u(alpha: &Alphabet, lit: &str) -> DiscreteFunction {
        DiscreteFunction::parse_unary(alpha, lit).unwrap()
    }

    #[test]
    fn single_term_renders_with_square_brackets() {
        let a = ternary();
        let term = FormulaExpression::apply(
            u(&a, "(0,0,1)"),
            FormulaExpression::Sum(vec![
                FormulaExpression::apply(u(&a, "(0,0,1)"), FormulaExpression::Var(1)),
                FormulaExpression::apply(u(&a, "(-1,-1,0)"), FormulaExpression::Var(2)),
            ]),
        );
        assert_eq!(term.to_text(), "(0,0,1)[(0,0,1)@1 + (-1,-1,0)@2]");
        let back = FormulaExpression::parse(&term.to_text(), &a).unwrap();
        assert_eq!(back, term);
    }

    #[test]
    fn nested_term_alternates_brackets() {
        let a = ternary();
        let inner = FormulaExpression::Sum(vec![
            FormulaExpression::apply(u(&a, "(0,0,1)"), FormulaExpression::Var(1)),
            FormulaExpression::apply(u(&a, "(-1,-1,0)"), FormulaExpression::Var(2)),
        ]);
        let outer = FormulaExpression::Sum(vec![
            FormulaExpression::apply(u(&a, "(0,0,1)"), inner),
            FormulaExpression::apply(u(&a, "(-1,-1,0)"), FormulaExpression::Var(3)),
        ]);
        let term = FormulaExpression::apply(u(&a, "(0,0,1)"), outer);
        assert_eq!(term.to_text(), "(0,0,1){(0,0,1)[(0,0,1)@1 + (-1,-1,0)@2] + (-1,-1,0)@3}");
        assert_eq!(FormulaExpression::parse(&term.to_text(), &a).unwrap(), term);
    }

    #[test]
    fn four_variable_nesting_round_trips_through_text() {
        let a = ternary();
        let mut f = crate::DiscreteFunction::zero_function(a.clone(), 4);
        let one = a.one();
        let m1 = a.minus_one();
        f.set_cell(
            &crate::PointIndex(vec![m1, a.zero(), one, one]),
            MultiValue::from_elements([m1, one]),
        )
        .unwrap();
        let formula = crate::decompose::trivial_decompose(&f).unwrap().formula();
        // two merge levels: brackets alternate [..], {..}, [..]
        assert_eq!(
            formula.to_text(),
            "(0,0,-1*1)[(0,0,1){(0,0,1)[(1,0,0)@1 + (-1,0,-1)@2] + (-1,-1,0)@3} + (-1,-1,0)@4]"
        );
        assert_eq!(FormulaExpression::parse(&formula.to_text(), &a).unwrap(), formula);
    }

    #[test]
    fn multi_term_formula_prints_one_term_per_line() {
        let a = ternary();
        let t1 = FormulaExpression::apply(u(&a, "(0,0,1)"), FormulaExpression::Var(1));
        let t2 = FormulaExpression::apply(u(&a, "(0,0,-1)"), FormulaExpression::Var(2));
        let f = FormulaExpression::Sum(vec![t1, t2]);
        assert_eq!(f.to_text(), "(0,0,1)@1\n+ (0,0,-1)@2");
        assert_eq!(FormulaExpression::parse(&f.to_text(), &a).unwrap(), f);
    }

    #[test]
    fn empty_sum_prints_as_empty_group_and_evaluates_to_zero() {
        let a = ternary();
        let f = FormulaExpression::Sum(vec![]);
        assert_eq!(f.to_text(), "{}");
        assert_eq!(FormulaExpression::parse("{}", &a).unwrap(), f);
        let one = MultiValue::singleton(a.one());
        assert_eq!(f.eval(&[one], &a).unwrap(), MultiValue::singleton(a.zero()));
    }

    #[test]
    fn eval_reports_unbound_variables() {
        let a = ternary();
        let f = FormulaExpression::Var(3);
        let one = MultiValue::singleton(a.one());
        assert_eq!(f.eval(&[one], &a), Err(Error::UnboundVariable(3)));
        assert!(f.validate(2, &a).is_err());
        assert!(f.validate(3, &a).is_ok());
    }

    #[test]
    fn parse_rejects_malformed_input() {
        let a = ternary();
        for text in ["(0,0,1)", "@0", "(0,0,1)[@1 + ]", "(0,0)@1", "[@1", "@1 @2"] {
            assert!(FormulaExpression::parse(text, &a).is_err(), "{text}");
        }
    }

    #[test]
    fn apply_uses_union_image_and_sums_absorb_empty() {
        let a = ternary();
        let n_at_one = u(&a, "(0,0,N)");
        let term = FormulaExpression::apply(n_at_one, FormulaExpression::Var(1));
        let one = MultiValue::singleton(a.one());
        assert!(term.eval(&[one], &a).unwrap().is_empty());
        let sum = FormulaExpression::Sum(vec![
            FormulaExpression::apply(u(&a, "(0,0,N)"), FormulaExpression::Var(1)),
            FormulaExpression::apply(u(&a, "(0,0,1)"), FormulaExpression::Var(1)),
        ]);
        assert!(sum.eval(&[one], &a).unwrap().is_empty(), "empty part absorbs the sum");
    }
}
