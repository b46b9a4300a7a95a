//! Constructive decomposition into superpositions of unary functions.
//!
//! Every function of `M` variables over an alphabet of `N >= 3` symbols
//! splits into one term per table point: a value function carrying the cell
//! and location selectors that isolate the point. When `N >= M + 1` the
//! selectors sum flatly; otherwise levels are merged pairwise, left
//! associated, with an indicator between levels. Points whose cell is
//! exactly `{0}` are pruned — cells that merely contain 0 are kept.

use crate::alphabet::{Alphabet, Element, MultiValue};
use crate::error::Error;
use crate::formula::FormulaExpression;
use crate::table::{points_by_label, DiscreteFunction, PointIndex};
use crate::Result;

/// Unary selector mapping `t -> 1` and every other element to `0`,
/// e.g. `(0,0,1)` for `t = 1` over the three-symbol alphabet.
pub fn row_selector(alpha: &Alphabet, t: Element) -> DiscreteFunction {
    let zero = MultiValue::singleton(alpha.zero());
    let mut cells = vec![zero; alpha.size()];
    cells[t.index()] = MultiValue::singleton(alpha.one());
    DiscreteFunction::new(alpha.clone(), 1, cells).expect("selector shape is valid")
}

/// Unary selector mapping `t -> 0` and every other element to `-1`,
/// e.g. `(-1,-1,0)` for `t = 1`.
pub fn col_selector(alpha: &Alphabet, t: Element) -> DiscreteFunction {
    let minus = MultiValue::singleton(alpha.minus_one());
    let mut cells = vec![minus; alpha.size()];
    cells[t.index()] = MultiValue::singleton(alpha.zero());
    DiscreteFunction::new(alpha.clone(), 1, cells).expect("selector shape is valid")
}

/// The inner indicator `(0,..,0,1)` used between nesting levels: keeps `1`
/// and sends everything else to `0`.
pub fn indicator(alpha: &Alphabet) -> DiscreteFunction {
    row_selector(alpha, alpha.one())
}

/// The per-point decomposition of a function: one term per non-zero-valued
/// point, in ascending label row-major order.
#[derive(Debug, Clone)]
pub struct TrivialDecomposition {
    function: DiscreteFunction,
    terms: Vec<PointIndex>,
    pruned: Vec<PointIndex>,
    flat: bool,
}

/// Decomposes a function into per-point terms. Rendering the result with
/// [`TrivialDecomposition::formula`] and evaluating reproduces the function
/// exactly. Two-symbol alphabets are rejected: no flat selector pair can
/// isolate a point there (see [`find_flat_isolating_pair`]).
pub fn trivial_decompose(f: &DiscreteFunction) -> Result<TrivialDecomposition> {
    let alpha = f.alphabet();
    if alpha.size() < 3 {
        return Err(Error::UnsupportedAlphabet(alpha.size()));
    }
    let mut terms = Vec::new();
    let mut pruned = Vec::new();
    for point in points_by_label(alpha, f.arity()) {
        if f.cell(&point).is_zero_singleton() {
            pruned.push(point);
        } else {
            terms.push(point);
        }
    }
    let flat = alpha.size() > f.arity();
    Ok(TrivialDecomposition { function: f.clone(), terms, pruned, flat })
}

impl TrivialDecomposition {
    pub fn alphabet(&self) -> &Alphabet {
        self.function.alphabet()
    }

    pub fn arity(&self) -> usize {
        self.function.arity()
    }

    pub fn function(&self) -> &DiscreteFunction {
        &self.function
    }

    /// True when the selectors sum in one flat level (`N >= M + 1`).
    pub fn is_flat(&self) -> bool {
        self.flat
    }

    pub fn term_count(&self) -> usize {
        self.terms.len()
    }

    /// Points carrying a term, in ascending label row-major order.
    pub fn term_points(&self) -> &[PointIndex] {
        &self.terms
    }

    /// Zero-valued points omitted from the pruned rendering.
    pub fn pruned_points(&self) -> &[PointIndex] {
        &self.pruned
    }

    /// Value function of the term at `point`: maps `1` to the decomposed
    /// function's cell and everything else to `0`. Pruned points answer the
    /// all-zero function.
    pub fn value_fn(&self, point: &PointIndex) -> DiscreteFunction {
        let alpha = self.alphabet();
        let zero = MultiValue::singleton(alpha.zero());
        let mut cells = vec![zero; alpha.size()];
        cells[alpha.one().index()] = self.function.cell(point);
        DiscreteFunction::new(alpha.clone(), 1, cells).expect("value function shape is valid")
    }

    /// Number of location functions per term: `M` selectors plus one
    /// indicator per merge level for nested shapes.
    pub fn location_count(&self) -> usize {
        let m = self.arity();
        if self.flat || m <= 2 {
            m
        } else {
            2 * m - 2
        }
    }

    /// Location function `j` (1-based) of the term at `point`. Slots
    /// `1..=M` are the per-variable selectors (the row selector first),
    /// slots above `M` are the indicators between nesting levels. Location
    /// functions depend only on the point, never on the cell.
    pub fn location_fn(&self, point: &PointIndex, j: usize) -> Result<DiscreteFunction> {
        let alpha = self.alphabet();
        let m = self.arity();
        if j == 0 || j > self.location_count() {
            return Err(Error::PositionOutOfRange { position: j, arity: self.location_count() });
        }
        Ok(if j == 1 {
            row_selector(alpha, point.coords()[0])
        } else if j <= m {
            col_selector(alpha, point.coords()[j - 1])
        } else {
            indicator(alpha)
        })
    }

    /// The formula for one term.
    fn term_formula(&self, point: &PointIndex) -> FormulaExpression {
        let alpha = self.alphabet();
        let coords = point.coords();
        let m = coords.len();
        let first =
            FormulaExpression::apply(row_selector(alpha, coords[0]), FormulaExpression::Var(1));
        let operand = if m == 1 {
            first
        } else if self.flat {
            let mut parts = vec![first];
            for (slot, &t) in coords.iter().enumerate().skip(1) {
                parts.push(FormulaExpression::apply(
                    col_selector(alpha, t),
                    FormulaExpression::Var(slot + 1),
                ));
            }
            FormulaExpression::Sum(parts)
        } else {
            let mut level = FormulaExpression::Sum(vec![
                first,
                FormulaExpression::apply(col_selector(alpha, coords[1]), FormulaExpression::Var(2)),
            ]);
            for (slot, &t) in coords.iter().enumerate().skip(2) {
                level = FormulaExpression::Sum(vec![
                    FormulaExpression::apply(indicator(alpha), level),
                    FormulaExpression::apply(
                        col_selector(alpha, t),
                        FormulaExpression::Var(slot + 1),
                    ),
                ]);
            }
            level
        };
        FormulaExpression::apply(self.value_fn(point), operand)
    }

    /// The pruned rendering: one term per non-zero-valued point. A single
    /// term stands alone rather than inside a one-part sum, so the text
    /// form re-parses to the same expression.
    pub fn formula(&self) -> FormulaExpression {
        sum_or_single(self.terms.iter().map(|p| self.term_formula(p)).collect())
    }

    /// The unpruned rendering with a term for every table point; zero points
    /// carry the all-zero value function.
    pub fn formula_unpruned(&self) -> FormulaExpression {
        sum_or_single(
            points_by_label(self.alphabet(), self.arity())
                .map(|p| self.term_formula(&p))
                .collect(),
        )
    }
}

fn sum_or_single(mut parts: Vec<FormulaExpression>) -> FormulaExpression {
    if parts.len() == 1 {
        parts.pop().unwrap()
    } else {
        FormulaExpression::Sum(parts)
    }
}

/// Searches every pair of unary functions (multi-valued included) for one
/// whose pointwise sum isolates `target` over `A^2`: the sum must be exactly
/// `{marker}` at the target, and away from it never empty and never
/// containing the marker. Over two symbols no pair qualifies for any marker,
/// which is why decomposition needs three.
pub fn find_flat_isolating_pair(
    alpha: &Alphabet,
    target: (Element, Element),
) -> Option<(DiscreteFunction, DiscreteFunction, Element)> {
    let unaries = crate::sample::all_unary_functions(alpha);
    for r in &unaries {
        for c in &unaries {
            'marker: for marker in alpha.elements() {
                for x in alpha.elements() {
                    for y in alpha.elements() {
                        let s = alpha.mv_sum(r.cells()[x.index()], c.cells()[y.index()]);
                        if (x, y) == target {
                            if s != MultiValue::singleton(marker) {
                                continue 'marker;
                            }
                        } else if s.is_empty() || s.contains(marker) {
                            continue 'marker;
                        }
                    }
                }
                return Some((r.clone(), c.clone(), marker));
            }
        }
    }
    None
}
