//! Operator specification strings: `C(1,0,2)`, `T1:(1,-1,0)`,
//! `T0:conv((1,0,0))`, `FALSE@3`, `SUM`.

use anyhow::{bail, Context};
use superpose_core::{superpose, DiscreteFunction, RolePermutation};

#[derive(Debug, Clone)]
pub enum OpSpec {
    Commute(RolePermutation),
    /// Tension of argument `slot` (or of the result when `slot == 0`); the
    /// unary literal is resolved against the tables' alphabet when applied.
    Tension {
        slot: usize,
        literal: String,
        converse: bool,
    },
    FalseVariable(usize),
    Sum,
}

impl OpSpec {
    pub fn parse(text: &str) -> anyhow::Result<OpSpec> {
        let text = text.trim();
        if text == "SUM" {
            return Ok(OpSpec::Sum);
        }
        if text.starts_with("C(") {
            return Ok(OpSpec::Commute(RolePermutation::parse(text)?));
        }
        if let Some(rest) = text.strip_prefix("FALSE@") {
            let position: usize =
                rest.parse().with_context(|| format!("bad position in `{text}`"))?;
            return Ok(OpSpec::FalseVariable(position));
        }
        if let Some(rest) = text.strip_prefix('T') {
            let (digits, literal) = rest
                .split_once(':')
                .with_context(|| format!("`{text}` is missing the `:` before its unary"))?;
            let slot: usize =
                digits.parse().with_context(|| format!("bad tension slot in `{text}`"))?;
            let (literal, converse) = match literal.strip_prefix("conv(") {
                Some(inner) => (
                    inner
                        .strip_suffix(')')
                        .with_context(|| format!("`{text}` is missing the closing `)`"))?,
                    true,
                ),
                None => (literal, false),
            };
            return Ok(OpSpec::Tension { slot, literal: literal.to_string(), converse });
        }
        bail!("unknown operator spec `{text}`");
    }

    /// Applies the operator to the working set of tables. `SUM` folds the
    /// set into one table; everything else maps over it.
    pub fn apply(&self, tables: Vec<DiscreteFunction>) -> anyhow::Result<Vec<DiscreteFunction>> {
        match self {
            OpSpec::Sum => Ok(vec![superpose(&tables)?]),
            OpSpec::Commute(p) => tables.iter().map(|f| f.commute(p).map_err(Into::into)).collect(),
            OpSpec::FalseVariable(k) => {
                tables.iter().map(|f| f.add_false_variable(*k).map_err(Into::into)).collect()
            }
            OpSpec::Tension { slot, literal, converse } => tables
                .iter()
                .map(|f| {
                    let mut unary = DiscreteFunction::parse_unary(f.alphabet(), literal)?;
                    if *converse {
                        unary = unary.converse()?;
                    }
                    if *slot == 0 {
                        f.tension_result(&unary)
                    } else {
                        f.tension_arg(*slot, &unary)
                    }
                    .map_err(Into::into)
                })
                .collect(),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn parses_the_documented_shapes() {
        assert!(matches!(OpSpec::parse("SUM").unwrap(), OpSpec::Sum));
        assert!(matches!(OpSpec::parse("C(2,3,0,1)").unwrap(), OpSpec::Commute(_)));
        assert!(matches!(OpSpec::parse("FALSE@3").unwrap(), OpSpec::FalseVariable(3)));
        match OpSpec::parse("T0:conv((1,0,0))").unwrap() {
            OpSpec::Tension { slot: 0, literal, converse: true } => {
                assert_eq!(literal, "(1,0,0)");
            }
            other => panic!("{other:?}"),
        }
        match OpSpec::parse("T1:(1,-1,0)").unwrap() {
            OpSpec::Tension { slot: 1, literal, converse: false } => {
                assert_eq!(literal, "(1,-1,0)");
            }
            other => panic!("{other:?}"),
        }
        assert!(OpSpec::parse("Q(1)").is_err());
        assert!(OpSpec::parse("T1(1,0,0)").is_err());
    }
}
