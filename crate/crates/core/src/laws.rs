//! Executable verification of the operator composition laws.
//!
//! Four suites:
//!
//! * the 36-entry pair-composition table for commutations,
//! * the 18-entry interchange table between tension-compression and
//!   commutation, swept over **all** 512 unary functions,
//! * the 9-entry composition table for tension-compression pairs, swept
//!   over all 512 x 512 unary pairs,
//! * the distribution laws tying superposition, commutation,
//!   tension-compression and decomposition together.
//!
//! Every PASS is backed by table equality of both constructions, never by
//! construction identity. Sampling is seeded; reports carry the seed so a
//! failure reproduces exactly. The two distribution laws that move a unary
//! function into an argument slot hold for selection-valued unaries (cells
//! empty or singleton); a unary with a several-element cell turns the
//! argument slot into a set, where a sum of selectors no longer isolates a
//! single table point, so those two suites sample selection-valued unaries.

use rayon::prelude::*;

use crate::alphabet::{Alphabet, Element, MultiValue};
use crate::decompose::{col_selector, row_selector, trivial_decompose};
use crate::formula::FormulaExpression;
use crate::ops::{superpose, RolePermutation};
use crate::sample::{all_unary_functions, random_functions, CellDomain};
use crate::table::{points_by_label, DiscreteFunction, PointIndex};

/// Sampling parameters for the law suites.
#[derive(Debug, Clone, Copy)]
pub struct LawConfig {
    /// Functions of two variables sampled per table entry.
    pub samples: usize,
    pub seed: u64,
}

impl Default for LawConfig {
    fn default() -> Self {
        LawConfig { samples: 500, seed: 7 }
    }
}

/// The fixed pool size for the tension-pair sweep; the 512 x 512 unary
/// pairs are exhaustive on top of it.
const TENSION_PAIR_POOL: usize = 20;

/// A failing instance, kept with every table needed to replay it.
#[derive(Debug, Clone)]
pub struct Counterexample {
    pub description: String,
    pub tables: Vec<DiscreteFunction>,
}

/// Outcome of one law entry.
#[derive(Debug, Clone)]
pub struct LawEntry {
    pub law: String,
    pub entry: String,
    pub cases: usize,
    pub seed: u64,
    pub counterexamples: Vec<Counterexample>,
    pub failures: usize,
}

impl LawEntry {
    pub fn passed(&self) -> bool {
        self.failures == 0
    }

    pub fn line(&self) -> String {
        format!(
            "LAW {} {} {} n={} seed={}",
            self.law,
            self.entry,
            if self.passed() { "PASS" } else { "FAIL" },
            self.cases,
            self.seed
        )
    }
}

/// Merged outcome of one or more suites.
#[derive(Debug, Clone, Default)]
pub struct LawReport {
    pub entries: Vec<LawEntry>,
}

impl LawReport {
    pub fn all_pass(&self) -> bool {
        self.entries.iter().all(|e| e.passed())
    }

    pub fn merge(mut self, other: LawReport) -> LawReport {
        self.entries.extend(other.entries);
        self
    }

    /// One `LAW ..` line per entry, in suite order.
    pub fn render_lines(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            out.push_str(&e.line());
            out.push('\n');
        }
        out
    }

    /// Machine-readable summary: the report lines followed by every kept
    /// counterexample with its tables verbatim.
    pub fn render_summary(&self) -> String {
        let mut out = self.render_lines();
        for e in &self.entries {
            for (i, ce) in e.counterexamples.iter().enumerate() {
                out.push_str(&format!(
                    "COUNTEREXAMPLE {} {} #{} {}\n",
                    e.law,
                    e.entry,
                    i + 1,
                    ce.description
                ));
                for t in &ce.tables {
                    out.push_str(&t.to_table_text());
                }
            }
        }
        out
    }
}

/// At most this many counterexamples are kept per entry.
const KEPT_COUNTEREXAMPLES: usize = 3;

/// The six binary commutations in table order.
fn commutations() -> Vec<RolePermutation> {
    [
        [1usize, 2, 0],
        [1, 0, 2],
        [0, 2, 1],
        [2, 1, 0],
        [2, 0, 1],
        [0, 1, 2],
    ]
    .iter()
    .map(|r| RolePermutation::new(r).expect("table data"))
    .collect()
}

/// The pair-composition table: entry `(row, col)` names the single
/// commutation equal to applying the row first and the column second.
pub fn commutation_pair_table() -> Vec<(RolePermutation, RolePermutation, RolePermutation)> {
    let c = commutations();
    let results: [[usize; 6]; 6] = [
        [0, 1, 2, 3, 4, 5],
        [1, 0, 4, 5, 2, 3],
        [2, 5, 0, 4, 3, 1],
        [3, 4, 5, 0, 1, 2],
        [4, 3, 1, 2, 5, 0],
        [5, 2, 3, 1, 0, 4],
    ];
    let mut out = Vec::with_capacity(36);
    for (i, row) in results.iter().enumerate() {
        for (j, &k) in row.iter().enumerate() {
            out.push((c[i].clone(), c[j].clone(), c[k].clone()));
        }
    }
    out
}

/// The three tension-compression slots: argument 1, argument 2, result.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum TensionSlot {
    Arg1,
    Arg2,
    Result,
}

impl TensionSlot {
    pub fn apply(
        self,
        f: &DiscreteFunction,
        b: &DiscreteFunction,
    ) -> crate::Result<DiscreteFunction> {
        match self {
            TensionSlot::Arg1 => f.tension_arg(1, b),
            TensionSlot::Arg2 => f.tension_arg(2, b),
            TensionSlot::Result => f.tension_result(b),
        }
    }

    pub fn label(self) -> &'static str {
        match self {
            TensionSlot::Arg1 => "T1",
            TensionSlot::Arg2 => "T2",
            TensionSlot::Result => "T0",
        }
    }
}

/// The interchange table between tension-compression and commutation:
/// tensioning slot `row` and then commuting by `col` equals commuting
/// first and tensioning the returned slot.
pub fn tension_commutation_table() -> Vec<(TensionSlot, RolePermutation, TensionSlot)> {
    use TensionSlot::{Arg1 as T1, Arg2 as T2, Result as T0};
    let c = commutations();
    let rows = [
        (T1, [T1, T1, T0, T2, T0, T2]),
        (T2, [T2, T0, T2, T1, T1, T0]),
        (T0, [T0, T2, T1, T0, T2, T1]),
    ];
    let mut out = Vec::with_capacity(18);
    for (row, cols) in rows {
        for (j, &slot) in cols.iter().enumerate() {
            out.push((row, c[j].clone(), slot));
        }
    }
    out
}

fn keep_failure(
    entrydata: &mut (usize, Vec<Counterexample>),
    make: impl FnOnce() -> Counterexample,
) {
    entrydata.0 += 1;
    if entrydata.1.len() < KEPT_COUNTEREXAMPLES {
        entrydata.1.push(make());
    }
}

/// Checks all 36 pair-composition entries over a sampled set of functions
/// of two variables (multi-valued included).
pub fn check_commutation_group(alpha: &Alphabet, config: &LawConfig) -> LawReport {
    let pool = random_functions(alpha, 2, CellDomain::Any, config.samples, config.seed);
    let entries = commutation_pair_table()
        .par_iter()
        .map(|(row, col, want)| {
            let mut fails = (0usize, Vec::new());
            for f in &pool {
                let two_step = f.commute(row).unwrap().commute(col).unwrap();
                let one_step = f.commute(want).unwrap();
                if two_step != one_step {
                    keep_failure(&mut fails, || Counterexample {
                        description: format!(
                            "{} then {} differs from {}",
                            row.display(),
                            col.display(),
                            want.display()
                        ),
                        tables: vec![f.clone().with_name("input")],
                    });
                }
            }
            LawEntry {
                law: "commutation-pair".into(),
                entry: format!("{}*{}", row.display(), col.display()),
                cases: pool.len(),
                seed: config.seed,
                failures: fails.0,
                counterexamples: fails.1,
            }
        })
        .collect();
    LawReport { entries }
}

/// Checks all 18 interchange entries over every one of the 512 unary
/// functions crossed with the whole sampled pool of functions of two
/// variables.
pub fn check_tension_commutation(alpha: &Alphabet, config: &LawConfig) -> LawReport {
    let pool = random_functions(alpha, 2, CellDomain::Any, config.samples, config.seed);
    let unaries = all_unary_functions(alpha);
    let entries = tension_commutation_table()
        .par_iter()
        .map(|(slot, commutation, then_slot)| {
            let mut fails = (0usize, Vec::new());
            for f in &pool {
                let commuted = f.commute(commutation).unwrap();
                for b in &unaries {
                    let lhs = slot.apply(f, b).unwrap().commute(commutation).unwrap();
                    let rhs = then_slot.apply(&commuted, b).unwrap();
                    if lhs != rhs {
                        keep_failure(&mut fails, || Counterexample {
                            description: format!(
                                "{}|{} then {} differs from {} then {}",
                                slot.label(),
                                b.unary_literal(),
                                commutation.display(),
                                commutation.display(),
                                then_slot.label()
                            ),
                            tables: vec![
                                f.clone().with_name("input"),
                                b.clone().with_name("unary"),
                            ],
                        });
                    }
                }
            }
            LawEntry {
                law: "tension-commutation".into(),
                entry: format!("{}*{}", slot.label(), commutation.display()),
                cases: pool.len() * unaries.len(),
                seed: config.seed,
                failures: fails.0,
                counterexamples: fails.1,
            }
        })
        .collect();
    LawReport { entries }
}

/// Checks the 9 tension-pair entries exhaustively over all 512 x 512 unary
/// pairs, each applied to a fixed pool of sampled functions of two
/// variables.
pub fn check_tension_tension(alpha: &Alphabet, config: &LawConfig) -> LawReport {
    let pool = random_functions(alpha, 2, CellDomain::Any, TENSION_PAIR_POOL, config.seed);
    let unaries = all_unary_functions(alpha);
    use TensionSlot::{Arg1 as T1, Arg2 as T2, Result as T0};
    let slots = [T1, T2, T0];
    let mut entries = Vec::new();
    for row in slots {
        for col in slots {
            let results: Vec<(usize, Vec<Counterexample>)> = unaries
                .par_iter()
                .map(|b1| {
                    let mut fails = (0usize, Vec::new());
                    for b2 in &unaries {
                        // composing applies the column's unary first
                        let composed = if row == col {
                            Some(b1.compose(b2).unwrap())
                        } else {
                            None
                        };
                        for f in &pool {
                            let lhs = col.apply(&row.apply(f, b1).unwrap(), b2).unwrap();
                            let rhs = match &composed {
                                Some(c) => row.apply(f, c).unwrap(),
                                None => row.apply(&col.apply(f, b2).unwrap(), b1).unwrap(),
                            };
                            if lhs != rhs {
                                keep_failure(&mut fails, || Counterexample {
                                    description: format!(
                                        "{}|{} then {}|{} disagrees",
                                        row.label(),
                                        b1.unary_literal(),
                                        col.label(),
                                        b2.unary_literal()
                                    ),
                                    tables: vec![f.clone().with_name("input")],
                                });
                            }
                        }
                    }
                    fails
                })
                .collect();
            let mut failures = 0;
            let mut kept = Vec::new();
            for (count, ces) in results {
                failures += count;
                for ce in ces {
                    if kept.len() < KEPT_COUNTEREXAMPLES {
                        kept.push(ce);
                    }
                }
            }
            entries.push(LawEntry {
                law: "tension-pair".into(),
                entry: format!("{}*{}", row.label(), col.label()),
                cases: unaries.len() * unaries.len() * pool.len(),
                seed: config.seed,
                failures,
                counterexamples: kept,
            });
        }
    }
    LawReport { entries }
}

/// Target element of a selector: the element a row selector maps to `1`,
/// or a column selector maps to `0`.
fn selector_target(f: &DiscreteFunction, row: bool) -> Option<Element> {
    let alpha = f.alphabet();
    let hit = MultiValue::singleton(if row { alpha.one() } else { alpha.zero() });
    let miss = MultiValue::singleton(if row { alpha.zero() } else { alpha.minus_one() });
    let mut target = None;
    for e in alpha.elements() {
        let cell = f.cells()[e.index()];
        if cell == hit {
            if target.is_some() {
                return None;
            }
            target = Some(e);
        } else if cell != miss {
            return None;
        }
    }
    target
}

/// Checks the distribution laws.
pub fn check_distribution_laws(alpha: &Alphabet, config: &LawConfig) -> LawReport {
    let pool = random_functions(alpha, 2, CellDomain::Any, config.samples.max(2), config.seed);
    // unaries moved into argument slots must be selection-valued
    let selections =
        random_functions(alpha, 1, CellDomain::Selection, pool.len(), config.seed ^ 0x5e1ec7);
    let any_unaries = random_functions(alpha, 1, CellDomain::Any, pool.len(), config.seed ^ 0xa11);
    let transpose = RolePermutation::new(&[2, 1, 0]).expect("transpose roles");

    let mut entries = Vec::new();

    // transpose distributes over superposition, any multi-valued functions
    {
        let mut fails = (0, Vec::new());
        for pair in pool.chunks_exact(2) {
            let lhs = superpose(pair).unwrap().commute(&transpose).unwrap();
            let rhs = superpose(&[
                pair[0].commute(&transpose).unwrap(),
                pair[1].commute(&transpose).unwrap(),
            ])
            .unwrap();
            if lhs != rhs {
                keep_failure(&mut fails, || Counterexample {
                    description: "transpose of a sum differs from the sum of transposes".into(),
                    tables: vec![
                        pair[0].clone().with_name("first"),
                        pair[1].clone().with_name("second"),
                    ],
                });
            }
        }
        entries.push(LawEntry {
            law: "distribution".into(),
            entry: "sum-transpose".into(),
            cases: pool.len() / 2,
            seed: config.seed,
            failures: fails.0,
            counterexamples: fails.1,
        });
    }

    // argument tension distributes over superposition
    for (slot, entry) in [
        (TensionSlot::Arg1, "sum-tension-arg1"),
        (TensionSlot::Arg2, "sum-tension-arg2"),
    ] {
        let mut fails = (0, Vec::new());
        let mut cases = 0;
        for (pair, b) in pool.chunks_exact(2).zip(selections.iter()) {
            cases += 1;
            let lhs = slot.apply(&superpose(pair).unwrap(), b).unwrap();
            let rhs = superpose(&[
                slot.apply(&pair[0], b).unwrap(),
                slot.apply(&pair[1], b).unwrap(),
            ])
            .unwrap();
            if lhs != rhs {
                keep_failure(&mut fails, || Counterexample {
                    description: format!("{} does not distribute over this sum", slot.label()),
                    tables: vec![
                        pair[0].clone().with_name("first"),
                        pair[1].clone().with_name("second"),
                        b.clone().with_name("unary"),
                    ],
                });
            }
        }
        entries.push(LawEntry {
            law: "distribution".into(),
            entry: entry.into(),
            cases,
            seed: config.seed,
            failures: fails.0,
            counterexamples: fails.1,
        });
    }

    // decomposing a transpose: values carry over with swapped coordinates,
    // selector targets swap between the row and column slots
    {
        let mut fails = (0, Vec::new());
        for f in &pool {
            let d = trivial_decompose(f).unwrap();
            let dt = trivial_decompose(&f.commute(&transpose).unwrap()).unwrap();
            let mut ok = true;
            for point in points_by_label(alpha, 2) {
                let swapped = PointIndex(vec![point.coords()[1], point.coords()[0]]);
                ok &= dt.value_fn(&point) == d.value_fn(&swapped);
                let p1 = dt.location_fn(&point, 1).unwrap();
                let p2 = dt.location_fn(&point, 2).unwrap();
                ok &= selector_target(&p1, true)
                    == selector_target(&d.location_fn(&swapped, 2).unwrap(), false);
                ok &= selector_target(&p2, false)
                    == selector_target(&d.location_fn(&swapped, 1).unwrap(), true);
            }
            if !ok {
                keep_failure(&mut fails, || Counterexample {
                    description: "transposed decomposition misaligned".into(),
                    tables: vec![f.clone().with_name("input")],
                });
            }
        }
        entries.push(LawEntry {
            law: "distribution".into(),
            entry: "decompose-transpose".into(),
            cases: pool.len(),
            seed: config.seed,
            failures: fails.0,
            counterexamples: fails.1,
        });
    }

    // composing the slot-k selectors with a unary turns a decomposition of f
    // into a decomposition of the slot-k tension of f
    {
        let mut fails = (0, Vec::new());
        let mut cases = 0;
        for (f, b) in pool.iter().zip(selections.iter()) {
            for (k, slot) in [(1usize, TensionSlot::Arg1), (2, TensionSlot::Arg2)] {
                cases += 1;
                let d = trivial_decompose(f).unwrap();
                let terms: Vec<FormulaExpression> = d
                    .term_points()
                    .iter()
                    .map(|p| {
                        let value = d.value_fn(p);
                        let sel1 = d.location_fn(p, 1).unwrap();
                        let sel2 = d.location_fn(p, 2).unwrap();
                        let (sel1, sel2) = if k == 1 {
                            (sel1.compose(b).unwrap(), sel2)
                        } else {
                            (sel1, sel2.compose(b).unwrap())
                        };
                        FormulaExpression::apply(
                            value,
                            FormulaExpression::Sum(vec![
                                FormulaExpression::apply(sel1, FormulaExpression::Var(1)),
                                FormulaExpression::apply(sel2, FormulaExpression::Var(2)),
                            ]),
                        )
                    })
                    .collect();
                let formula = FormulaExpression::Sum(terms);
                let want = slot.apply(f, b).unwrap();
                let ok = points_by_label(alpha, 2).all(|point| {
                    let args: Vec<MultiValue> =
                        point.coords().iter().map(|&e| MultiValue::singleton(e)).collect();
                    formula.eval(&args, alpha).unwrap() == want.cell(&point)
                });
                if !ok {
                    keep_failure(&mut fails, || Counterexample {
                        description: format!(
                            "selector composition does not yield a decomposition of {}",
                            slot.label()
                        ),
                        tables: vec![f.clone().with_name("input"), b.clone().with_name("unary")],
                    });
                }
            }
        }
        entries.push(LawEntry {
            law: "distribution".into(),
            entry: "decompose-tension-arg".into(),
            cases,
            seed: config.seed,
            failures: fails.0,
            counterexamples: fails.1,
        });
    }

    // value functions of a result tension are the converse-images of the
    // original value functions, slot by slot (location functions unchanged)
    {
        let mut fails = (0, Vec::new());
        for (f, b) in pool.iter().zip(any_unaries.iter()) {
            let conv = b.converse().unwrap();
            let tensioned = f.tension_result(b).unwrap();
            let dt = trivial_decompose(&tensioned).unwrap();
            let mut ok = true;
            for point in points_by_label(alpha, 2) {
                let mut cells = vec![MultiValue::singleton(alpha.zero()); alpha.size()];
                cells[alpha.one().index()] = conv.image(f.cell(&point));
                let want = DiscreteFunction::new(alpha.clone(), 1, cells).unwrap();
                ok &= dt.value_fn(&point) == want;
                ok &= dt.location_fn(&point, 1).unwrap() == row_selector(alpha, point.coords()[0]);
                ok &= dt.location_fn(&point, 2).unwrap() == col_selector(alpha, point.coords()[1]);
            }
            if !ok {
                keep_failure(&mut fails, || Counterexample {
                    description: "result tension did not map value functions cell-wise".into(),
                    tables: vec![f.clone().with_name("input"), b.clone().with_name("unary")],
                });
            }
        }
        entries.push(LawEntry {
            law: "distribution".into(),
            entry: "decompose-tension-result".into(),
            cases: pool.len(),
            seed: config.seed,
            failures: fails.0,
            counterexamples: fails.1,
        });
    }

    // value functions of a sum are the pointwise sums of value functions
    {
        let mut fails = (0, Vec::new());
        for pair in pool.chunks_exact(2) {
            let sum = superpose(pair).unwrap();
            let ds = trivial_decompose(&sum).unwrap();
            let d0 = trivial_decompose(&pair[0]).unwrap();
            let d1 = trivial_decompose(&pair[1]).unwrap();
            let mut ok = true;
            for point in points_by_label(alpha, 2) {
                let want = superpose(&[d0.value_fn(&point), d1.value_fn(&point)]).unwrap();
                ok &= ds.value_fn(&point) == want;
                ok &= ds.location_fn(&point, 1).unwrap() == d0.location_fn(&point, 1).unwrap();
                ok &= ds.location_fn(&point, 2).unwrap() == d1.location_fn(&point, 2).unwrap();
            }
            if !ok {
                keep_failure(&mut fails, || Counterexample {
                    description: "value functions of the sum are not the summed value functions"
                        .into(),
                    tables: vec![
                        pair[0].clone().with_name("first"),
                        pair[1].clone().with_name("second"),
                    ],
                });
            }
        }
        entries.push(LawEntry {
            law: "distribution".into(),
            entry: "decompose-sum".into(),
            cases: pool.len() / 2,
            seed: config.seed,
            failures: fails.0,
            counterexamples: fails.1,
        });
    }

    LawReport { entries }
}

/// Runs every suite and merges the reports in suite order.
pub fn check_all(alpha: &Alphabet, config: &LawConfig) -> LawReport {
    check_commutation_group(alpha, config)
        .merge(check_tension_commutation(alpha, config))
        .merge(check_tension_tension(alpha, config))
        .merge(check_distribution_laws(alpha, config))
}

#[cfg(test)]
mod tests {
    use super::*;

    fn quick() -> LawConfig {
        LawConfig { samples: 24, seed: 7 }
    }

    #[test]
    fn commutation_pairs_pass_on_a_small_sample() {
        let report = check_commutation_group(&Alphabet::ternary(), &quick());
        assert_eq!(report.entries.len(), 36);
        assert!(report.all_pass(), "{}", report.render_lines());
    }

    #[test]
    fn the_pair_table_is_a_group_of_six() {
        let table = commutation_pair_table();
        let all = commutations();
        // closure is built in; identity row and column
        let identity = &all[0];
        for (row, col, want) in &table {
            if row == identity {
                assert_eq!(col, want);
            }
            if col == identity {
                assert_eq!(row, want);
            }
        }
        // every element has an inverse
        for c in &all {
            assert!(
                table.iter().any(|(row, _, want)| row == c && want == identity),
                "{} lacks an inverse",
                c.display()
            );
        }
        // non-commutative: the table is the full symmetric group on 3 roles
        assert!(table.iter().any(|(row, col, want)| table
            .iter()
            .any(|(r2, c2, w2)| r2 == col && c2 == row && w2 != want)));
        // the table agrees with permutation composition
        for (row, col, want) in &table {
            assert_eq!(&row.then(col), want);
        }
    }

    #[test]
    fn tension_commutation_passes_on_a_small_sample() {
        let report = check_tension_commutation(&Alphabet::ternary(), &quick());
        assert_eq!(report.entries.len(), 18);
        assert!(report.all_pass(), "{}", report.render_lines());
    }

    #[test]
    fn distribution_laws_pass_on_a_small_sample() {
        let report = check_distribution_laws(&Alphabet::ternary(), &quick());
        assert_eq!(report.entries.len(), 7);
        assert!(report.all_pass(), "{}", report.render_lines());
    }

    #[test]
    fn transpose_distributes_over_the_worked_pair() {
        let alpha = Alphabet::ternary();
        let f1 = DiscreteFunction::parse_table(
            "dfun N=3 M=2\n-1: -1 1 0\n0: 0 -1 1\n1: 1 0 -1\n",
            &alpha,
        )
        .unwrap();
        let f2 = DiscreteFunction::parse_table(
            "dfun N=3 M=2\n-1: 0 -1 1\n0: -1 0 -1\n1: 1 1 0\n",
            &alpha,
        )
        .unwrap();
        let transpose = RolePermutation::new(&[2, 1, 0]).unwrap();
        let lhs = superpose(&[f1.clone(), f2.clone()]).unwrap().commute(&transpose).unwrap();
        let rhs = superpose(&[
            f1.commute(&transpose).unwrap(),
            f2.commute(&transpose).unwrap(),
        ])
        .unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn value_slots_add_for_singular_functions_at_one_point() {
        let alpha = Alphabet::ternary();
        let one = alpha.one();
        let m1 = alpha.minus_one();
        let corner = PointIndex(vec![one, one]);
        let mut f = DiscreteFunction::zero_function(alpha.clone(), 2);
        f.set_cell(&corner, MultiValue::singleton(one)).unwrap();
        let mut g = DiscreteFunction::zero_function(alpha.clone(), 2);
        g.set_cell(&corner, MultiValue::singleton(m1)).unwrap();
        let sum = superpose(&[f.clone(), g.clone()]).unwrap();
        // (0,0,1) + (0,0,-1) = (0,0,0) in the value slot
        let vf = trivial_decompose(&f).unwrap().value_fn(&corner);
        let vg = trivial_decompose(&g).unwrap().value_fn(&corner);
        let vs = trivial_decompose(&sum).unwrap().value_fn(&corner);
        assert_eq!(superpose(&[vf, vg]).unwrap(), vs);
        assert_eq!(vs, DiscreteFunction::parse_unary(&alpha, "(0,0,0)").unwrap());
    }

    #[test]
    fn identity_unary_degenerates_every_interchange_entry() {
        let alpha = Alphabet::ternary();
        let e = DiscreteFunction::parse_unary(&alpha, "(-1,0,1)").unwrap();
        let pool = random_functions(&alpha, 2, CellDomain::Any, 8, 3);
        for (slot, commutation, _) in tension_commutation_table() {
            for f in &pool {
                assert_eq!(slot.apply(f, &e).unwrap(), *f);
                let _ = f.commute(&commutation).unwrap();
            }
        }
    }

    #[test]
    fn report_lines_have_the_fixed_shape() {
        let entry = LawEntry {
            law: "tension-pair".into(),
            entry: "T1*T0".into(),
            cases: 12,
            seed: 9,
            failures: 0,
            counterexamples: vec![],
        };
        assert_eq!(entry.line(), "LAW tension-pair T1*T0 PASS n=12 seed=9");
        let failing = LawEntry { failures: 2, ..entry };
        assert_eq!(failing.line(), "LAW tension-pair T1*T0 FAIL n=12 seed=9");
    }

    #[test]
    fn summary_embeds_counterexample_tables() {
        let alpha = Alphabet::ternary();
        let f = DiscreteFunction::zero_function(alpha.clone(), 2).with_name("input");
        let report = LawReport {
            entries: vec![LawEntry {
                law: "demo".into(),
                entry: "x".into(),
                cases: 1,
                seed: 1,
                failures: 1,
                counterexamples: vec![Counterexample {
                    description: "demo failure".into(),
                    tables: vec![f],
                }],
            }],
        };
        let summary = report.render_summary();
        assert!(summary.contains("LAW demo x FAIL n=1 seed=1"));
        assert!(summary.contains("COUNTEREXAMPLE demo x #1 demo failure"));
        assert!(summary.contains("dfun N=3 M=2 name=input"));
    }
}
