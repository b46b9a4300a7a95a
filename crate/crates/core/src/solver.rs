//! Equation solving: exhaustive enumeration and the symbolic pipeline.
//!
//! [`semantic_solve`] substitutes every alphabet element for the unknown at
//! every parameter tuple and records which substitutions satisfy the
//! equation; the result is the solution function `W` mapping parameter
//! tuples to the set of solutions.
//!
//! [`two_branch_pipeline`] solves the family `(x f1 a) f3 (x f2 b) = c`
//! symbolically over a three-symbol alphabet: decompose the outer function,
//! retension each branch by the converses of the term's location functions,
//! lift both branches to three variables and superpose, retension by the
//! converse of the value function, sum all terms, commute the roles so the
//! unknown becomes the result, and decompose that table into the closed-form
//! formula. Every intermediate is kept for inspection.

use std::collections::BTreeMap;

use crate::alphabet::{Element, MultiValue};
use crate::decompose::trivial_decompose;
use crate::equation::EquationAst;
use crate::error::Error;
use crate::formula::FormulaExpression;
use crate::ops::{superpose, RolePermutation};
use crate::table::{points_by_label, DiscreteFunction, PointIndex};
use crate::Result;

/// The solution function `W`: its table maps each tuple of the equation's
/// parameters (in declared order, right-hand side last) to the set of
/// elements solving for the unknown.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SolutionFunction {
    pub table: DiscreteFunction,
    pub params: Vec<String>,
}

/// Solves by substitution: for every parameter tuple, an element `x`
/// belongs to the solution cell exactly when the right-hand side value is
/// among the left-hand side's values under `unknown := x`.
pub fn semantic_solve(eq: &EquationAst) -> Result<SolutionFunction> {
    let alpha = eq.alphabet().clone();
    let arity = eq.params().len();
    let n = alpha.size();
    let total = n.pow(arity as u32);
    let mut cells = Vec::with_capacity(total);
    let rhs_slot = arity - 1;
    for idx in 0..total {
        let point = PointIndex::from_flat(&alpha, arity, idx);
        let assignment: BTreeMap<&str, MultiValue> = eq
            .params()
            .iter()
            .zip(point.coords())
            .map(|(name, &e)| (name.as_str(), MultiValue::singleton(e)))
            .collect();
        let rhs = point.coords()[rhs_slot];
        let mut cell = MultiValue::empty();
        for x in alpha.elements() {
            let lhs = eq.eval_lhs(MultiValue::singleton(x), &assignment)?;
            if lhs.contains(rhs) {
                cell.insert(x);
            }
        }
        cells.push(cell);
    }
    let table = DiscreteFunction::new(alpha, arity, cells)?;
    Ok(SolutionFunction { table, params: eq.params().to_vec() })
}

/// Everything the pipeline computes for one decomposition term.
#[derive(Debug, Clone)]
pub struct TermTrace {
    /// The outer-function point this term isolates.
    pub point: PointIndex,
    /// Value function of the term.
    pub value_fn: DiscreteFunction,
    /// Location selectors of the term (first variable, second variable).
    pub row_fn: DiscreteFunction,
    pub col_fn: DiscreteFunction,
    /// `f1` retensioned by the converse of the row selector.
    pub left_branch: DiscreteFunction,
    /// `f2` retensioned by the converse of the column selector.
    pub right_branch: DiscreteFunction,
    /// Both branches lifted to three variables and superposed.
    pub lifted_sum: DiscreteFunction,
    /// The lifted sum retensioned by the converse of the value function.
    pub retensioned: DiscreteFunction,
}

/// The full trace of the symbolic route.
#[derive(Debug, Clone)]
pub struct PipelineTrace {
    pub terms: Vec<TermTrace>,
    /// Superposition of all retensioned terms, a function of `(x, a, b)`.
    pub summed: DiscreteFunction,
    /// The commuted table: the solution function over `(a, b, c)`.
    pub solution_table: DiscreteFunction,
    /// Decomposition of the solution table.
    pub formula: FormulaExpression,
}

impl PipelineTrace {
    pub fn solution(&self) -> SolutionFunction {
        SolutionFunction {
            table: self.solution_table.clone(),
            params: vec!["a".into(), "b".into(), "c".into()],
        }
    }
}

/// Runs the symbolic route on binary `f1, f2, f3` over a three-symbol
/// alphabet. Other shapes are rejected; wider alphabets are served by
/// [`semantic_solve`].
pub fn two_branch_pipeline(
    f1: &DiscreteFunction,
    f2: &DiscreteFunction,
    f3: &DiscreteFunction,
) -> Result<PipelineTrace> {
    let alpha = f1.alphabet().clone();
    for f in [f1, f2, f3] {
        if f.arity() != 2 {
            return Err(Error::ArityMismatch { expected: 2, found: f.arity() });
        }
        if f.alphabet() != &alpha {
            return Err(Error::AlphabetMismatch {
                expected: alpha.labels(),
                found: f.alphabet().labels(),
            });
        }
    }
    if alpha.size() != 3 {
        return Err(Error::UnsupportedAlphabet(alpha.size()));
    }

    let decomposition = trivial_decompose(f3)?;
    let mut terms = Vec::with_capacity(decomposition.term_count());
    for point in decomposition.term_points() {
        let value_fn = decomposition.value_fn(point);
        let row_fn = decomposition.location_fn(point, 1)?;
        let col_fn = decomposition.location_fn(point, 2)?;
        // retension each branch so its output is mapped through the selector
        let left_branch = f1.tension_result(&row_fn.converse()?)?;
        let right_branch = f2.tension_result(&col_fn.converse()?)?;
        // align both to (x, a, b) — the left ignores b, the right ignores a
        let lifted_sum = superpose(&[
            left_branch.add_false_variable(3)?,
            right_branch.add_false_variable(2)?,
        ])?;
        let retensioned = lifted_sum.tension_result(&value_fn.converse()?)?;
        terms.push(TermTrace {
            point: point.clone(),
            value_fn,
            row_fn,
            col_fn,
            left_branch,
            right_branch,
            lifted_sum,
            retensioned,
        });
    }

    let summed = if terms.is_empty() {
        DiscreteFunction::zero_function(alpha.clone(), 3)
    } else {
        superpose(&terms.iter().map(|t| t.retensioned.clone()).collect::<Vec<_>>())?
    };
    // move the unknown from first argument to result: W(a, b, c) = x
    let solution_table = summed.commute(&RolePermutation::new(&[2, 3, 0, 1])?)?;
    let formula = trivial_decompose(&solution_table)?.formula();
    Ok(PipelineTrace { terms, summed, solution_table, formula })
}

/// One discrepancy found while re-verifying a solution function.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Violation {
    pub params: Vec<Element>,
    pub candidate: Element,
    /// True when the candidate is in the solution cell but fails the
    /// equation; false when it solves the equation but is missing.
    pub spurious: bool,
}

/// Report of [`check_solution`].
#[derive(Debug, Clone, Default)]
pub struct SolutionReport {
    pub violations: Vec<Violation>,
    pub checked: usize,
}

impl SolutionReport {
    pub fn passed(&self) -> bool {
        self.violations.is_empty()
    }
}

/// Re-verifies membership and maximality of every cell of `W` by direct
/// substitution into the equation.
pub fn check_solution(eq: &EquationAst, solution: &SolutionFunction) -> Result<SolutionReport> {
    let alpha = eq.alphabet();
    let arity = eq.params().len();
    if solution.table.arity() != arity {
        return Err(Error::ArityMismatch { expected: arity, found: solution.table.arity() });
    }
    if solution.table.alphabet() != alpha {
        return Err(Error::AlphabetMismatch {
            expected: alpha.labels(),
            found: solution.table.alphabet().labels(),
        });
    }
    let mut report = SolutionReport::default();
    let rhs_slot = arity - 1;
    for point in points_by_label(alpha, arity) {
        let assignment: BTreeMap<&str, MultiValue> = eq
            .params()
            .iter()
            .zip(point.coords())
            .map(|(name, &e)| (name.as_str(), MultiValue::singleton(e)))
            .collect();
        let rhs = point.coords()[rhs_slot];
        let cell = solution.table.cell(&point);
        for x in alpha.elements() {
            let solves = eq.eval_lhs(MultiValue::singleton(x), &assignment)?.contains(rhs);
            let claimed = cell.contains(x);
            report.checked += 1;
            if solves != claimed {
                report.violations.push(Violation {
                    params: point.coords().to_vec(),
                    candidate: x,
                    spurious: claimed,
                });
            }
        }
    }
    Ok(report)
}

/// The general route: solve semantically, then decompose the solution table
/// into a formula. Works for any equation shape and alphabet size >= 3.
pub fn solve_formula(eq: &EquationAst) -> Result<(SolutionFunction, FormulaExpression)> {
    let solution = semantic_solve(eq)?;
    let formula = trivial_decompose(&solution.table)?.formula();
    Ok((solution, formula))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alphabet::Alphabet;
    use crate::equation::parse_equation;

    fn ternary() -> Alphabet {
        Alphabet::ternary()
    }

    fn tbl(alpha: &Alphabet, text: &str) -> DiscreteFunction {
        DiscreteFunction::parse_table(text, alpha).unwrap()
    }

    const F1: &str = include_str!("../tests/data/two_branch/f1.tbl");
    const F2: &str = include_str!("../tests/data/two_branch/f2.tbl");
    const F3: &str = include_str!("../tests/data/two_branch/f3.tbl");
    const SOLUTION: &str = include_str!("../tests/data/two_branch/solution.tbl");

    fn worked_equation(alpha: &Alphabet) -> EquationAst {
        let bindings: BTreeMap<String, DiscreteFunction> = [
            ("f1".to_string(), tbl(alpha, F1)),
            ("f2".to_string(), tbl(alpha, F2)),
            ("f3".to_string(), tbl(alpha, F3)),
        ]
        .into_iter()
        .collect();
        parse_equation("solve x : (x f1 a) f3 (x f2 b) = c", bindings).unwrap()
    }

    #[test]
    fn semantic_solve_reproduces_the_solution_table() {
        let a = ternary();
        let eq = worked_equation(&a);
        let w = semantic_solve(&eq).unwrap();
        assert_eq!(w.table, tbl(&a, SOLUTION));
        let m1 = a.element("-1").unwrap();
        let z = a.zero();
        let one = a.one();
        assert_eq!(w.table.evaluate(&[m1, m1, m1]).unwrap(), MultiValue::singleton(m1));
        assert_eq!(w.table.evaluate(&[z, m1, m1]).unwrap(), MultiValue::singleton(one));
        assert!(w.table.evaluate(&[m1, z, m1]).unwrap().is_empty());
        assert_eq!(w.table.evaluate(&[z, z, m1]).unwrap(), MultiValue::full(&a));
    }

    #[test]
    fn linear_equation_solves_to_subtraction() {
        let a = ternary();
        // x + a = c over the cyclic addition table
        let add = tbl(&a, "dfun N=3 M=2\n-1: 1 -1 0\n0: -1 0 1\n1: 0 1 -1\n");
        let bindings: BTreeMap<String, DiscreteFunction> =
            [("add".to_string(), add.clone())].into_iter().collect();
        let eq = parse_equation("solve x : x add a = c", bindings).unwrap();
        let w = semantic_solve(&eq).unwrap();
        // brute-force oracle straight off the addition table
        for av in a.elements() {
            for cv in a.elements() {
                let mut want = MultiValue::empty();
                for x in a.elements() {
                    if add.evaluate(&[x, av]).unwrap().contains(cv) {
                        want.insert(x);
                    }
                }
                assert_eq!(w.table.evaluate(&[av, cv]).unwrap(), want);
                // subtraction: the unique x with x + a = c
                assert_eq!(want.len(), 1);
                let x = want.members().next().unwrap();
                assert_eq!(a.add(x, av), cv);
            }
        }
    }

    #[test]
    fn all_no_valued_outer_function_gives_the_empty_solution() {
        let a = ternary();
        let bindings: BTreeMap<String, DiscreteFunction> = [
            ("f1".to_string(), tbl(&a, F1)),
            ("f2".to_string(), tbl(&a, F2)),
            (
                "f3".to_string(),
                DiscreteFunction::constant(a.clone(), 2, MultiValue::empty()).unwrap(),
            ),
        ]
        .into_iter()
        .collect();
        let eq = parse_equation("solve x : (x f1 a) f3 (x f2 b) = c", bindings).unwrap();
        let w = semantic_solve(&eq).unwrap();
        assert!(w.table.cells().iter().all(|c| c.is_empty()));
    }

    #[test]
    fn pipeline_solution_matches_the_semantic_solution_on_the_worked_example() {
        let a = ternary();
        let trace = two_branch_pipeline(&tbl(&a, F1), &tbl(&a, F2), &tbl(&a, F3)).unwrap();
        assert_eq!(trace.solution_table, tbl(&a, SOLUTION));
        assert_eq!(trace.formula.term_count(), 24);
        // value functions include no-valued and fully multi-valued carriers
        let text = trace.formula.to_text();
        assert!(text.contains("(0,0,N)"));
        assert!(text.contains("(0,0,-1*0*1)"));
        // the formula uses only valid symbols and evaluates back to the table
        trace.formula.validate(3, &a).unwrap();
        for point in points_by_label(&a, 3) {
            let args: Vec<MultiValue> =
                point.coords().iter().map(|&e| MultiValue::singleton(e)).collect();
            assert_eq!(trace.formula.eval(&args, &a).unwrap(), trace.solution_table.cell(&point));
        }
    }

    #[test]
    fn pipeline_rejects_wrong_shapes() {
        let a = ternary();
        let unary = DiscreteFunction::parse_unary(&a, "(0,0,1)").unwrap();
        assert!(two_branch_pipeline(&unary, &tbl(&a, F2), &tbl(&a, F3)).is_err());
        let five = Alphabet::modular(5).unwrap();
        let f = DiscreteFunction::zero_function(five, 2);
        assert!(two_branch_pipeline(&f, &f, &f).is_err());
    }

    #[test]
    fn check_solution_flags_tampered_cells() {
        let a = ternary();
        let eq = worked_equation(&a);
        let mut w = semantic_solve(&eq).unwrap();
        assert!(check_solution(&eq, &w).unwrap().passed());

        // enlarge one cell by hand: exactly one spurious finding
        let m1 = a.element("-1").unwrap();
        let point = PointIndex(vec![m1, m1, m1]);
        let mut cell = w.table.cell(&point);
        cell.insert(a.zero());
        w.table.set_cell(&point, cell).unwrap();
        let report = check_solution(&eq, &w).unwrap();
        assert_eq!(report.violations.len(), 1);
        assert!(report.violations[0].spurious);
        assert_eq!(report.violations[0].candidate, a.zero());
    }

    #[test]
    fn pipeline_solution_passes_the_verifier() {
        let a = ternary();
        let eq = worked_equation(&a);
        let trace = two_branch_pipeline(&tbl(&a, F1), &tbl(&a, F2), &tbl(&a, F3)).unwrap();
        let report = check_solution(&eq, &trace.solution()).unwrap();
        assert!(report.passed());
        assert_eq!(report.checked, 81);
    }

    #[test]
    fn pipeline_agrees_with_substitution_when_branch_cells_stay_single() {
        // The symbolic route encodes the outer function through selectors
        // that isolate one table point per term, so it reproduces the
        // substitution solution whenever each branch value reaching the
        // outer function is a single element (or no value at all). The
        // outer function itself may be fully multi-valued.
        use crate::sample::{random_function, rng, CellDomain};
        let a = ternary();
        let mut r = rng(0x5e1);
        for case in 0..150 {
            let f1 = random_function(&a, 2, CellDomain::Selection, &mut r);
            let f2 = random_function(&a, 2, CellDomain::Selection, &mut r);
            let f3 = random_function(&a, 2, CellDomain::Any, &mut r);
            let trace = two_branch_pipeline(&f1, &f2, &f3).unwrap();
            let bindings: BTreeMap<String, DiscreteFunction> = [
                ("f1".to_string(), f1),
                ("f2".to_string(), f2),
                ("f3".to_string(), f3),
            ]
            .into_iter()
            .collect();
            let eq = parse_equation("solve x : (x f1 a) f3 (x f2 b) = c", bindings).unwrap();
            let w = semantic_solve(&eq).unwrap();
            assert_eq!(trace.solution_table, w.table, "case {case}");
        }
    }

    #[test]
    fn pipeline_overapproximates_on_multi_element_branch_cells() {
        // With several-element cells in a branch, distinct outer-function
        // points become reachable at once; the summed terms then mix their
        // values through cyclic addition, so the symbolic table can only
        // grow past the substitution solution. Pinned here as the known
        // boundary of the symbolic route.
        let a = ternary();
        let one = MultiValue::singleton(a.one());
        let pair = MultiValue::from_elements([a.zero(), a.one()]);
        // branches answer {0,1} at every point, the outer function is 1 on
        // its diagonal corners and 0 elsewhere
        let f1 = DiscreteFunction::constant(a.clone(), 2, pair).unwrap();
        let f2 = f1.clone();
        let mut f3 = DiscreteFunction::zero_function(a.clone(), 2);
        f3.set_cell(&PointIndex(vec![a.zero(), a.zero()]), one).unwrap();
        f3.set_cell(&PointIndex(vec![a.one(), a.one()]), one).unwrap();

        let trace = two_branch_pipeline(&f1, &f2, &f3).unwrap();
        let bindings: BTreeMap<String, DiscreteFunction> = [
            ("f1".to_string(), f1),
            ("f2".to_string(), f2),
            ("f3".to_string(), f3),
        ]
        .into_iter()
        .collect();
        let eq = parse_equation("solve x : (x f1 a) f3 (x f2 b) = c", bindings).unwrap();
        let w = semantic_solve(&eq).unwrap();
        assert_ne!(trace.solution_table, w.table);
        // every substitution solution is still found by the symbolic route
        for (sym, sub) in trace.solution_table.cells().iter().zip(w.table.cells()) {
            assert!(sub.is_subset(*sym));
        }
        // and the substitution solution is exactly verified
        assert!(check_solution(&eq, &w).unwrap().passed());
        // while the symbolic one here contains spurious members
        assert!(!check_solution(&eq, &trace.solution()).unwrap().passed());
    }

    #[test]
    fn general_route_formula_reproduces_the_solution() {
        let a = ternary();
        let eq = worked_equation(&a);
        let (w, formula) = solve_formula(&eq).unwrap();
        for point in points_by_label(&a, 3) {
            let args: Vec<MultiValue> =
                point.coords().iter().map(|&e| MultiValue::singleton(e)).collect();
            assert_eq!(formula.eval(&args, &a).unwrap(), w.table.cell(&point));
        }
    }
}
