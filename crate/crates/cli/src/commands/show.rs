use superpose_core::table::points_by_label;
use superpose_core::DiscreteFunction;

use crate::{io, ShowArgs};

pub fn run(args: ShowArgs) -> anyhow::Result<u8> {
    let table = io::load_table(&args.input, args.level)?;
    print!("{}", render(&table));
    Ok(0)
}

/// Block layout: rows are the first variable, columns the second, one block
/// per assignment of the remaining variables.
fn render(f: &DiscreteFunction) -> String {
    let alpha = f.alphabet();
    let n = alpha.size();
    let mut out = String::new();
    if let Some(name) = f.name() {
        out.push_str(&format!("{name} (N={n} M={})\n", f.arity()));
    }
    let cell_texts: Vec<String> =
        points_by_label(alpha, f.arity()).map(|p| alpha.format_mv(f.cell(&p))).collect();
    let label_width = alpha.elements().map(|e| alpha.label(e).len()).max().unwrap_or(1);
    let cell_width = cell_texts.iter().map(|t| t.len()).max().unwrap_or(1).max(label_width);

    let tail_arity = f.arity().saturating_sub(2);
    let blocks = n.pow(tail_arity as u32);
    let row_len = if f.arity() >= 2 { n } else { 1 };
    let mut args = vec![alpha.zero(); f.arity()];
    for block in 0..blocks {
        if f.arity() >= 3 {
            let tail = superpose_core::PointIndex::from_flat_by_label(alpha, tail_arity, block);
            let labels: Vec<String> = tail
                .coords()
                .iter()
                .enumerate()
                .map(|(i, &e)| format!("var{} = {}", i + 3, alpha.label(e)))
                .collect();
            out.push_str(&format!("[{}]\n", labels.join(", ")));
            for (slot, &e) in tail.coords().iter().enumerate() {
                args[slot + 2] = e;
            }
        }
        if f.arity() >= 2 {
            out.push_str(&" ".repeat(label_width));
            for col in alpha.elements_by_label() {
                out.push_str(&format!("  {:>cell_width$}", alpha.label(col)));
            }
            out.push('\n');
        }
        for row_pos in 0..n {
            let row = alpha.element_at_position(row_pos);
            args[0] = row;
            out.push_str(&format!("{:>label_width$}", alpha.label(row)));
            for col_pos in 0..row_len {
                if f.arity() >= 2 {
                    args[1] = alpha.element_at_position(col_pos);
                }
                let text = alpha.format_mv(f.evaluate(&args).expect("arity matches"));
                out.push_str(&format!("  {text:>cell_width$}"));
            }
            out.push('\n');
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use superpose_core::Alphabet;

    #[test]
    fn grid_is_aligned() {
        let a = Alphabet::ternary();
        let f = DiscreteFunction::parse_table(
            "dfun N=3 M=2 name=mixed\n-1: -1 0 1\n0: -1*0 -1*1 0*1\n1: N -1*0*1 N\n",
            &a,
        )
        .unwrap();
        let text = render(&f);
        assert!(text.starts_with("mixed (N=3 M=2)\n"));
        let widths: Vec<usize> = text.lines().skip(1).map(|l| l.len()).collect();
        assert!(widths.windows(2).all(|w| w[0] == w[1]), "{text}");
    }
}
