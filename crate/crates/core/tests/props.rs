//! Property tests over randomly drawn alphabets, tables, and formulas.

use proptest::prelude::*;

use superpose_core::alphabet::{Alphabet, MultiValue};
use superpose_core::decompose::trivial_decompose;
use superpose_core::sample::{random_function, rng, CellDomain};
use superpose_core::table::{points_by_label, DiscreteFunction};
use superpose_core::FormulaExpression;

fn alphabet(n: usize) -> Alphabet {
    match n {
        3 => Alphabet::ternary(),
        _ => Alphabet::modular(n).unwrap(),
    }
}

/// A table of the given shape with arbitrary cells.
fn table_strategy(n: usize, arity: usize) -> impl Strategy<Value = DiscreteFunction> {
    let cells = n.pow(arity as u32);
    proptest::collection::vec(0u32..(1 << n), cells).prop_map(move |bits| {
        let alpha = alphabet(n);
        let cells = bits.into_iter().map(MultiValue::from_bits).collect();
        DiscreteFunction::new(alpha, arity, cells).unwrap()
    })
}

proptest! {
    #[test]
    fn table_text_round_trips(n in 2usize..=5, arity in 1usize..=3, seed in any::<u64>()) {
        let alpha = alphabet(n);
        let mut r = rng(seed);
        let f = random_function(&alpha, arity, CellDomain::Any, &mut r);
        let text = f.to_table_text();
        let back = DiscreteFunction::parse_table(&text, &alpha).unwrap();
        prop_assert_eq!(back, f);
    }

    #[test]
    fn mv_sum_laws_hold_at_any_size(n in 2usize..=7, a in any::<u32>(), b in any::<u32>(), c in any::<u32>()) {
        let alpha = alphabet(n);
        let cut = |bits: u32| MultiValue::from_bits(bits & ((1u32 << n) - 1));
        let (x, y, z) = (cut(a), cut(b), cut(c));
        prop_assert_eq!(alpha.mv_sum(x, y), alpha.mv_sum(y, x));
        prop_assert_eq!(
            alpha.mv_sum(alpha.mv_sum(x, y), z),
            alpha.mv_sum(x, alpha.mv_sum(y, z))
        );
        let zero = MultiValue::singleton(alpha.zero());
        prop_assert_eq!(alpha.mv_sum(zero, x), x);
        prop_assert!(alpha.mv_sum(MultiValue::empty(), x).is_empty());
    }

    #[test]
    fn setwise_on_singletons_is_evaluate(f in table_strategy(3, 2)) {
        let alpha = f.alphabet().clone();
        for point in points_by_label(&alpha, 2) {
            let args: Vec<MultiValue> =
                point.coords().iter().map(|&e| MultiValue::singleton(e)).collect();
            prop_assert_eq!(
                f.evaluate_setwise(&args).unwrap(),
                f.cell(&point)
            );
        }
    }

    #[test]
    fn formula_text_round_trips(f in table_strategy(3, 2)) {
        let alpha = f.alphabet().clone();
        let formula = trivial_decompose(&f).unwrap().formula();
        let text = formula.to_text();
        let back = FormulaExpression::parse(&text, &alpha).unwrap();
        prop_assert_eq!(back, formula);
    }
}

/// The fixed-count seeded round trip: a thousand random tables of one, two,
/// and three variables over three symbols.
#[test]
fn thousand_table_round_trips() {
    let alpha = Alphabet::ternary();
    let mut r = rng(0x70_0d);
    for case in 0..1_000 {
        let arity = 1 + case % 3;
        let f = random_function(&alpha, arity, CellDomain::Any, &mut r);
        let back = DiscreteFunction::parse_table(&f.to_table_text(), &alpha).unwrap();
        assert_eq!(back, f, "case {case}");
    }
}
