//! Shared input builders for the benchmarks.

use superpose_core::sample::{random_functions, CellDomain};
use superpose_core::{Alphabet, DiscreteFunction};

pub const WORKED_F1: &str = "dfun N=3 M=2\n-1: -1 1 0\n0: 0 -1 1\n1: 1 0 -1\n";
pub const WORKED_F2: &str = "dfun N=3 M=2\n-1: 0 -1 1\n0: -1 0 -1\n1: 1 1 0\n";
pub const WORKED_F3: &str = "dfun N=3 M=2\n-1: 1 -1 0\n0: 0 1 -1\n1: -1 0 1\n";

pub fn worked_triple() -> (DiscreteFunction, DiscreteFunction, DiscreteFunction) {
    let alpha = Alphabet::ternary();
    let parse = |t| DiscreteFunction::parse_table(t, &alpha).unwrap();
    (parse(WORKED_F1), parse(WORKED_F2), parse(WORKED_F3))
}

/// A reproducible batch of fully multi-valued tables of two variables.
pub fn random_binaries(count: usize, seed: u64) -> Vec<DiscreteFunction> {
    random_functions(&Alphabet::ternary(), 2, CellDomain::Any, count, seed)
}
