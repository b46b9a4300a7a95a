//! Multi-valued discrete functions over small finite alphabets.
//!
//! The crate models functions `A^M -> A` over a cyclic alphabet `A` of `N`
//! symbols whose table cells may hold any subset of the alphabet (several
//! values, one value, or none at all), and builds the machinery that makes
//! such functions tractable symbolically:
//!
//! * dense truth tables with a bit-exact text format ([`DiscreteFunction`]),
//! * the special operators on them — commutation of argument/result roles,
//!   tension-compression by unary functions, pointwise superposition, and
//!   false-variable lifts ([`RolePermutation`], [`DiscreteFunction::commute`],
//!   [`DiscreteFunction::tension_arg`], [`superpose`], ...),
//! * constructive decomposition of any function of several variables into a
//!   superposition of functions of one variable ([`trivial_decompose`]),
//! * equation solving with one unknown, both by exhaustive enumeration and by
//!   a symbolic pipeline that returns a closed-form [`FormulaExpression`]
//!   ([`semantic_solve`], [`two_branch_pipeline`]),
//! * the same algebra one level up, where alphabet symbols denote unary
//!   functions ([`operator_level`]),
//! * an executable law suite for the operator composition identities
//!   ([`laws`]).

pub mod alphabet;
pub mod decompose;
pub mod equation;
pub mod error;
pub mod formula;
pub mod laws;
pub mod operator_level;
pub mod ops;
pub mod sample;
pub mod solver;
pub mod table;

pub use alphabet::{Alphabet, Element, MultiValue};
pub use decompose::{
    col_selector, indicator, row_selector, trivial_decompose, TrivialDecomposition,
};
pub use equation::{parse_equation, EquationAst, EquationExpr};
pub use error::Error;
pub use formula::FormulaExpression;
pub use operator_level::{solve_operator_equation, OperatorAlphabetBinding};
pub use ops::{superpose, RolePermutation};
pub use solver::{
    check_solution, semantic_solve, solve_formula, two_branch_pipeline, PipelineTrace,
    SolutionFunction, SolutionReport,
};
pub use table::{DiscreteFunction, PointIndex};

/// Shorthand for results carrying the crate error type.
pub type Result<T> = std::result::Result<T, Error>;
