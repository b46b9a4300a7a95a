use std::collections::BTreeMap;
use std::fs;
use std::path::Path;

use anyhow::Context;
use superpose_core::{
    check_solution, parse_equation, semantic_solve, solve_formula, two_branch_pipeline,
    DiscreteFunction,
};

use crate::{io, SolveArgs};

pub fn run(args: SolveArgs) -> anyhow::Result<u8> {
    let text = fs::read_to_string(&args.eq).with_context(|| format!("reading {}", args.eq))?;
    let mut bindings: BTreeMap<String, DiscreteFunction> = BTreeMap::new();
    for spec in &args.bindings {
        let (name, path) = spec
            .split_once('=')
            .with_context(|| format!("binding `{spec}` must look like name=file"))?;
        bindings.insert(name.to_string(), io::load_table(path, args.level)?);
    }
    let eq = parse_equation(&text, bindings)?;

    // the two-branch family takes the symbolic route; everything else is
    // solved by substitution and decomposed afterwards
    let (solution, formula, trace) = match eq.two_branch_parts() {
        Some((f1, f2, f3)) if f1.alphabet().size() == 3 => {
            let trace = two_branch_pipeline(f1, f2, f3)?;
            (trace.solution(), trace.formula.clone(), Some(trace))
        }
        _ => {
            let (solution, formula) = solve_formula(&eq)?;
            (solution, formula, None)
        }
    };

    let table_text = solution.table.clone().with_name("solution").to_table_text();
    let formula_text = format!("{}\n", formula.to_text());
    match &args.out {
        Some(dir) => {
            let dir = Path::new(dir);
            io::write_atomic(dir.join("solution.tbl"), &table_text)?;
            io::write_atomic(dir.join("solution.formula"), &formula_text)?;
            if args.trace {
                match &trace {
                    Some(trace) => write_trace(dir, trace)?,
                    None => eprintln!(
                        "note: --trace only applies to the two-branch shape over three symbols"
                    ),
                }
            }
        }
        None => {
            print!("{table_text}");
            print!("{formula_text}");
        }
    }

    // re-verify by substitution; a mismatch means the symbolic route
    // widened some cell and the artifacts need scrutiny
    let report = check_solution(&eq, &solution)?;
    if !report.passed() {
        let exact = semantic_solve(&eq)?;
        eprintln!(
            "warning: {} of {} substitution checks disagree with the symbolic solution; \
             the substitution solution follows on stderr:",
            report.violations.len(),
            report.checked
        );
        eprintln!("{}", exact.table.to_table_text());
        return Ok(2);
    }
    Ok(0)
}

fn write_trace(dir: &Path, trace: &superpose_core::PipelineTrace) -> anyhow::Result<()> {
    let trace_dir = dir.join("trace");
    for (i, term) in trace.terms.iter().enumerate() {
        let k = i + 1;
        io::write_atomic(
            trace_dir.join(format!("step2_term{k}_left.tbl")),
            &term.left_branch.to_table_text(),
        )?;
        io::write_atomic(
            trace_dir.join(format!("step2_term{k}_right.tbl")),
            &term.right_branch.to_table_text(),
        )?;
        io::write_atomic(
            trace_dir.join(format!("step3_term{k}.tbl")),
            &term.lifted_sum.to_table_text(),
        )?;
        io::write_atomic(
            trace_dir.join(format!("step4_term{k}.tbl")),
            &term.retensioned.to_table_text(),
        )?;
    }
    io::write_atomic(trace_dir.join("step5_total.tbl"), &trace.summed.to_table_text())?;
    io::write_atomic(trace_dir.join("step6_solution.tbl"), &trace.solution_table.to_table_text())?;
    Ok(())
}
