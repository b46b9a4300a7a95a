use anyhow::bail;

use crate::opspec::OpSpec;
use crate::{io, ApplyArgs};

pub fn run(args: ApplyArgs) -> anyhow::Result<u8> {
    let mut tables = args
        .input
        .iter()
        .map(|path| io::load_table(path, args.level))
        .collect::<anyhow::Result<Vec<_>>>()?;
    for spec in &args.ops {
        let op = OpSpec::parse(spec)?;
        tables = op.apply(tables)?;
    }
    match tables.as_slice() {
        [result] => {
            io::emit(&args.out, &result.to_table_text())?;
            Ok(0)
        }
        many => bail!(
            "{} tables remain after the operator chain; end with SUM or pass one input",
            many.len()
        ),
    }
}
