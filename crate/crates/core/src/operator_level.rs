//! The algebra one level up: alphabet symbols that denote unary functions.
//!
//! Tables over the `-e, o, e` alphabet are operators: their symbols stand
//! for the unary functions `-e = (1,0,-1)`, `o = (0,0,0)`, `e = (-1,0,1)`.
//! Because every algorithm in this crate is generic over the alphabet, the
//! whole machinery — commutation, tension-compression, superposition,
//! decomposition, and the equation pipeline — runs unchanged at this level;
//! what is specific here is the denotation map down to ordinary functions
//! and the relabeling bridge between the two levels.
//!
//! Addition of symbols mirrors pointwise addition of their denotations, so
//! results computed at either level correspond under relabeling.

use crate::alphabet::{Alphabet, Element, MultiValue};
use crate::error::Error;
use crate::formula::FormulaExpression;
use crate::solver::{two_branch_pipeline, PipelineTrace};
use crate::table::DiscreteFunction;
use crate::Result;

/// Binding of the level-1 symbols to their level-0 unary functions.
#[derive(Debug, Clone)]
pub struct OperatorAlphabetBinding {
    level1: Alphabet,
    level0: Alphabet,
    /// Denotations indexed by level-1 residue.
    denotations: Vec<DiscreteFunction>,
}

impl OperatorAlphabetBinding {
    /// The standard binding: `-e = (1,0,-1)`, `o = (0,0,0)`, `e = (-1,0,1)`
    /// over the `-1, 0, 1` alphabet.
    pub fn standard() -> Self {
        let level1 = Alphabet::operator_level();
        let level0 = Alphabet::ternary();
        let parse = |lit: &str| DiscreteFunction::parse_unary(&level0, lit).expect("literal");
        // indexed by residue: o at 0, e at 1, -e at 2
        let denotations = vec![parse("(0,0,0)"), parse("(-1,0,1)"), parse("(1,0,-1)")];
        OperatorAlphabetBinding { level1, level0, denotations }
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.level1
    }

    pub fn level0_alphabet(&self) -> &Alphabet {
        &self.level0
    }

    /// The unary function a level-1 symbol stands for.
    pub fn denote(&self, symbol: Element) -> &DiscreteFunction {
        &self.denotations[symbol.index()]
    }

    /// Checks that symbol addition is the homomorphic image of pointwise
    /// function addition: `denote(a + b) = denote(a) + denote(b)` for all
    /// nine symbol pairs.
    pub fn verify_homomorphism(&self) -> Result<()> {
        for a in self.level1.elements() {
            for b in self.level1.elements() {
                let sum_symbol = self.level1.add(a, b);
                let pointwise =
                    crate::ops::superpose(&[self.denote(a).clone(), self.denote(b).clone()])?;
                if &pointwise != self.denote(sum_symbol) {
                    return Err(Error::Invalid(format!(
                        "denotation of {} + {} is not the pointwise sum",
                        self.level1.label(a),
                        self.level1.label(b)
                    )));
                }
            }
        }
        Ok(())
    }

    /// Evaluates a level-1 formula on symbol arguments and maps every
    /// resulting symbol through the denotation. A no-valued result yields
    /// the empty set of functions.
    pub fn interpret(
        &self,
        formula: &FormulaExpression,
        args: &[Element],
    ) -> Result<Vec<DiscreteFunction>> {
        let set_args: Vec<MultiValue> = args.iter().map(|&e| MultiValue::singleton(e)).collect();
        let symbols = formula.eval(&set_args, &self.level1)?;
        Ok(self
            .level1
            .elements_by_label()
            .filter(|&s| symbols.contains(s))
            .map(|s| self.denote(s).clone())
            .collect())
    }
}

/// Rewrites a function over an equally-sized alphabet, keeping residues:
/// the bridge between `-1, 0, 1` tables and `-e, o, e` tables.
pub fn relabel_function(f: &DiscreteFunction, to: &Alphabet) -> Result<DiscreteFunction> {
    if to.size() != f.alphabet().size() {
        return Err(Error::AlphabetMismatch {
            expected: f.alphabet().labels(),
            found: to.labels(),
        });
    }
    let relabeled = DiscreteFunction::new(to.clone(), f.arity(), f.cells().to_vec())?;
    Ok(match f.name() {
        Some(name) => relabeled.with_name(name),
        None => relabeled,
    })
}

/// Relabels every unary function inside a formula.
pub fn relabel_formula(e: &FormulaExpression, to: &Alphabet) -> Result<FormulaExpression> {
    Ok(match e {
        FormulaExpression::Var(k) => FormulaExpression::Var(*k),
        FormulaExpression::Apply(f, inner) => {
            FormulaExpression::apply(relabel_function(f, to)?, relabel_formula(inner, to)?)
        }
        FormulaExpression::Sum(parts) => FormulaExpression::Sum(
            parts.iter().map(|p| relabel_formula(p, to)).collect::<Result<_>>()?,
        ),
    })
}

/// Solves the operator equation `(y p1 f) p3 (y p2 g) = h` symbolically;
/// the inputs are level-1 binary tables and the result is the level-1
/// closed-form solution with its full trace.
pub fn solve_operator_equation(
    p1: &DiscreteFunction,
    p2: &DiscreteFunction,
    p3: &DiscreteFunction,
) -> Result<PipelineTrace> {
    let expected = Alphabet::operator_level();
    for f in [p1, p2, p3] {
        if f.alphabet() != &expected {
            return Err(Error::AlphabetMismatch {
                expected: expected.labels(),
                found: f.alphabet().labels(),
            });
        }
    }
    two_branch_pipeline(p1, p2, p3)
}
