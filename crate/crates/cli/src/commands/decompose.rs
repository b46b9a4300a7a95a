use superpose_core::trivial_decompose;

use crate::{io, DecomposeArgs};

pub fn run(args: DecomposeArgs) -> anyhow::Result<u8> {
    let table = io::load_table(&args.input, args.level)?;
    let decomposition = trivial_decompose(&table)?;
    let formula = if args.unpruned {
        decomposition.formula_unpruned()
    } else {
        decomposition.formula()
    };
    io::emit(&args.out, &format!("{}\n", formula.to_text()))?;
    Ok(0)
}
