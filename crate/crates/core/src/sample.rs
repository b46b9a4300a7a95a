//! Seeded generators and exhaustive enumerations of discrete functions.
//!
//! Everything here is deterministic: the same seed always yields the same
//! functions, so law reports and acceptance runs are reproducible.

use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use crate::alphabet::{Alphabet, MultiValue};
use crate::table::DiscreteFunction;

/// Which cell values a generator may produce.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CellDomain {
    /// Exactly one element per cell.
    SingleValued,
    /// One element or no value per cell, never several.
    Selection,
    /// Any subset of the alphabet, including empty and full.
    Any,
}

/// The deterministic RNG used throughout the crate.
pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

fn random_cell(alpha: &Alphabet, domain: CellDomain, rng: &mut ChaCha8Rng) -> MultiValue {
    let n = alpha.size() as u32;
    match domain {
        CellDomain::SingleValued => {
            let e = rng.random_range(0..n) as u8;
            MultiValue::singleton(crate::alphabet::Element::from_residue(e))
        }
        CellDomain::Selection => {
            let pick = rng.random_range(0..=n);
            if pick == n {
                MultiValue::empty()
            } else {
                MultiValue::singleton(crate::alphabet::Element::from_residue(pick as u8))
            }
        }
        CellDomain::Any => MultiValue::from_bits(rng.random_range(0..(1u32 << n))),
    }
}

/// One random function of the given arity.
pub fn random_function(
    alpha: &Alphabet,
    arity: usize,
    domain: CellDomain,
    rng: &mut ChaCha8Rng,
) -> DiscreteFunction {
    let len = alpha.size().pow(arity as u32);
    let cells = (0..len).map(|_| random_cell(alpha, domain, rng)).collect();
    DiscreteFunction::new(alpha.clone(), arity, cells).expect("generated table is well formed")
}

/// A reproducible batch of random functions.
pub fn random_functions(
    alpha: &Alphabet,
    arity: usize,
    domain: CellDomain,
    count: usize,
    seed: u64,
) -> Vec<DiscreteFunction> {
    let mut r = rng(seed);
    (0..count).map(|_| random_function(alpha, arity, domain, &mut r)).collect()
}

/// Every unary function over the alphabet, multi-valued cells included:
/// `(2^N)^N` tables, e.g. 512 over three symbols. The count explodes
/// doubly-exponentially, so enumeration is capped at four symbols.
pub fn all_unary_functions(alpha: &Alphabet) -> Vec<DiscreteFunction> {
    let n = alpha.size();
    assert!(n <= 4, "enumerating all unary functions is only tractable up to four symbols");
    let per_cell = 1u64 << n;
    let total = per_cell.pow(n as u32);
    let mut out = Vec::with_capacity(total as usize);
    for code in 0..total {
        let mut c = code;
        let mut cells = Vec::with_capacity(n);
        for _ in 0..n {
            cells.push(MultiValue::from_bits((c % per_cell) as u32));
            c /= per_cell;
        }
        out.push(DiscreteFunction::new(alpha.clone(), 1, cells).expect("enumerated table"));
    }
    out
}

/// Every single-valued function of the given arity: `N^(N^M)` tables,
/// e.g. the 19,683 single-valued binary functions over three symbols.
pub fn all_single_valued(
    alpha: &Alphabet,
    arity: usize,
) -> impl Iterator<Item = DiscreteFunction> + '_ {
    let n = alpha.size() as u64;
    let cells = alpha.size().pow(arity as u32);
    let total = n.checked_pow(cells as u32).expect("single-valued function count overflows u64");
    (0..total).map(move |code| {
        let mut c = code;
        let table = (0..cells)
            .map(|_| {
                let e = crate::alphabet::Element::from_residue((c % n) as u8);
                c /= n;
                MultiValue::singleton(e)
            })
            .collect();
        DiscreteFunction::new(alpha.clone(), arity, table).expect("enumerated table")
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn same_seed_same_functions() {
        let a = Alphabet::ternary();
        let x = random_functions(&a, 2, CellDomain::Any, 5, 99);
        let y = random_functions(&a, 2, CellDomain::Any, 5, 99);
        assert_eq!(x, y);
        let z = random_functions(&a, 2, CellDomain::Any, 5, 100);
        assert_ne!(x, z);
    }

    #[test]
    fn domains_constrain_cells() {
        let a = Alphabet::ternary();
        for f in random_functions(&a, 2, CellDomain::SingleValued, 20, 7) {
            assert!(f.cells().iter().all(|c| c.len() == 1));
        }
        for f in random_functions(&a, 2, CellDomain::Selection, 20, 7) {
            assert!(f.cells().iter().all(|c| c.len() <= 1));
        }
    }

    #[test]
    fn enumerations_have_the_expected_sizes() {
        let a = Alphabet::ternary();
        assert_eq!(all_unary_functions(&a).len(), 512);
        assert_eq!(all_single_valued(&a, 1).count(), 27);
    }
}
