use clap::ValueEnum;
use superpose_core::laws::{
    check_all, check_commutation_group, check_distribution_laws, check_tension_commutation,
    check_tension_tension, LawConfig,
};
use superpose_core::Alphabet;

use crate::{io, LawsArgs, Level};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Suite {
    All,
    Commutation,
    TensionCommutation,
    TensionPair,
    Distribution,
}

pub fn run(args: LawsArgs) -> anyhow::Result<u8> {
    let alpha = match args.level {
        Level::Function => Alphabet::ternary(),
        Level::Operator => Alphabet::operator_level(),
    };
    let config = LawConfig { samples: args.samples, seed: args.seed };
    let report = match args.check {
        Suite::All => check_all(&alpha, &config),
        Suite::Commutation => check_commutation_group(&alpha, &config),
        Suite::TensionCommutation => check_tension_commutation(&alpha, &config),
        Suite::TensionPair => check_tension_tension(&alpha, &config),
        Suite::Distribution => check_distribution_laws(&alpha, &config),
    };
    let lines = report.render_lines();
    print!("{lines}");
    if let Some(path) = &args.out {
        io::write_atomic(path, &lines)?;
    }
    if let Some(path) = &args.summary {
        io::write_atomic(path, &report.render_summary())?;
    }
    Ok(if report.all_pass() { 0 } else { 3 })
}
