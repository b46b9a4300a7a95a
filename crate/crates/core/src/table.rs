//! Dense truth tables for multi-valued functions of several variables.
//!
//! A function of arity `M` over an `N`-symbol alphabet is a dense table of
//! `N^M` [`MultiValue`] cells. Cells are stored row-major with the first
//! variable as the slowest index (in residue space); the text format lists
//! rows and columns in ascending label order, matching the convention that
//! the first column of a printed table is the first variable.

use crate::alphabet::{Alphabet, Element, MultiValue};
use crate::error::Error;
use crate::Result;

/// Coordinates of one table cell.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct PointIndex(pub Vec<Element>);

impl PointIndex {
    pub fn coords(&self) -> &[Element] {
        &self.0
    }

    pub fn arity(&self) -> usize {
        self.0.len()
    }

    /// Flat table index (residue row-major, first coordinate slowest).
    pub fn flat(&self, alpha: &Alphabet) -> usize {
        let n = alpha.size();
        self.0.iter().fold(0, |acc, e| acc * n + e.index())
    }

    pub fn from_flat(alpha: &Alphabet, arity: usize, mut idx: usize) -> Self {
        let n = alpha.size();
        let mut coords = vec![alpha.zero(); arity];
        for slot in coords.iter_mut().rev() {
            *slot = Element::from_residue((idx % n) as u8);
            idx /= n;
        }
        PointIndex(coords)
    }
}

/// Iterates all points of `A^arity` in ascending label order, row-major with
/// the first coordinate slowest. This is the order decomposition terms and
/// printed tables use.
pub fn points_by_label(alpha: &Alphabet, arity: usize) -> impl Iterator<Item = PointIndex> + '_ {
    let n = alpha.size();
    let total = n.pow(arity as u32);
    (0..total).map(move |mut idx| {
        let mut coords = vec![alpha.zero(); arity];
        for slot in coords.iter_mut().rev() {
            *slot = alpha.element_at_position(idx % n);
            idx /= n;
        }
        PointIndex(coords)
    })
}

/// A multi-valued function `A^M -> A` as a dense table.
#[derive(Debug, Clone)]
pub struct DiscreteFunction {
    alpha: Alphabet,
    arity: usize,
    cells: Vec<MultiValue>,
    name: Option<String>,
}

impl PartialEq for DiscreteFunction {
    /// Structural equality: same alphabet, arity and cells. Names are
    /// metadata and do not participate.
    fn eq(&self, other: &Self) -> bool {
        self.alpha == other.alpha && self.arity == other.arity && self.cells == other.cells
    }
}

impl Eq for DiscreteFunction {}

impl DiscreteFunction {
    pub fn new(alpha: Alphabet, arity: usize, cells: Vec<MultiValue>) -> Result<Self> {
        if arity == 0 {
            return Err(Error::Invalid("arity must be at least 1".into()));
        }
        let expected = alpha.size().pow(arity as u32);
        if cells.len() != expected {
            return Err(Error::TableSize { expected, found: cells.len() });
        }
        let mask = MultiValue::full(&alpha);
        if cells.iter().any(|c| !c.is_subset(mask)) {
            return Err(Error::Invalid("cell holds symbols outside the alphabet".into()));
        }
        Ok(DiscreteFunction { alpha, arity, cells, name: None })
    }

    /// A function that answers the same cell everywhere.
    pub fn constant(alpha: Alphabet, arity: usize, value: MultiValue) -> Result<Self> {
        let len = alpha.size().pow(arity as u32);
        DiscreteFunction::new(alpha, arity, vec![value; len])
    }

    /// The zero function of a given arity.
    pub fn zero_function(alpha: Alphabet, arity: usize) -> Self {
        let zero = MultiValue::singleton(alpha.zero());
        DiscreteFunction::constant(alpha, arity, zero).expect("arity >= 1")
    }

    /// Builds a unary function from cells listed in ascending label order
    /// (the `(v1,v2,..,vN)` literal order).
    pub fn unary_from_labels(alpha: &Alphabet, cells_by_label: &[MultiValue]) -> Result<Self> {
        if cells_by_label.len() != alpha.size() {
            return Err(Error::TableSize { expected: alpha.size(), found: cells_by_label.len() });
        }
        let mut cells = vec![MultiValue::empty(); alpha.size()];
        for (pos, &mv) in cells_by_label.iter().enumerate() {
            cells[alpha.element_at_position(pos).index()] = mv;
        }
        DiscreteFunction::new(alpha.clone(), 1, cells)
    }

    /// Parses a unary literal such as `(1,-1,0)` or `(-1*0,N,-1*0*1)`.
    pub fn parse_unary(alpha: &Alphabet, text: &str) -> Result<Self> {
        let inner = text
            .strip_prefix('(')
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(1, 1, format!("`{text}` is not a `(..)` literal")))?;
        let parts: Vec<&str> = inner.split(',').collect();
        if parts.len() != alpha.size() {
            return Err(Error::parse(1, 1, format!("expected {} cells in `{text}`", alpha.size())));
        }
        let mut cells = Vec::with_capacity(parts.len());
        for p in &parts {
            let mv = alpha.parse_mv(p.trim()).map_err(|m| Error::parse(1, 1, m))?;
            cells.push(mv);
        }
        DiscreteFunction::unary_from_labels(alpha, &cells)
    }

    /// Renders a unary function as its `(v1,..,vN)` literal.
    pub fn unary_literal(&self) -> String {
        debug_assert_eq!(self.arity, 1);
        let parts: Vec<String> = self
            .alpha
            .elements_by_label()
            .map(|e| self.alpha.format_mv(self.cells[e.index()]))
            .collect();
        format!("({})", parts.join(","))
    }

    pub fn alphabet(&self) -> &Alphabet {
        &self.alpha
    }

    pub fn arity(&self) -> usize {
        self.arity
    }

    pub fn name(&self) -> Option<&str> {
        self.name.as_deref()
    }

    pub fn with_name(mut self, name: impl Into<String>) -> Self {
        self.name = Some(name.into());
        self
    }

    pub fn cells(&self) -> &[MultiValue] {
        &self.cells
    }

    pub fn cell(&self, point: &PointIndex) -> MultiValue {
        self.cells[point.flat(&self.alpha)]
    }

    /// Replaces one cell, validating it stays inside the alphabet.
    pub fn set_cell(&mut self, point: &PointIndex, value: MultiValue) -> Result<()> {
        if !value.is_subset(MultiValue::full(&self.alpha)) {
            return Err(Error::Invalid("cell holds symbols outside the alphabet".into()));
        }
        let idx = point.flat(&self.alpha);
        self.cells[idx] = value;
        Ok(())
    }

    /// Looks up the stored cell for a full tuple of arguments.
    pub fn evaluate(&self, args: &[Element]) -> Result<MultiValue> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: args.len() });
        }
        let n = self.alpha.size();
        let idx = args.iter().fold(0usize, |acc, e| acc * n + e.index());
        Ok(self.cells[idx])
    }

    /// Evaluates on set-valued arguments.
    ///
    /// If any argument is the empty cell the result is empty. Otherwise the
    /// result is the union of the cells reached over the Cartesian product
    /// of the arguments; no-valued cells contribute nothing, so the result
    /// is empty only when every reachable cell is.
    pub fn evaluate_setwise(&self, args: &[MultiValue]) -> Result<MultiValue> {
        if args.len() != self.arity {
            return Err(Error::ArityMismatch { expected: self.arity, found: args.len() });
        }
        if args.iter().any(|a| a.is_empty()) {
            return Ok(MultiValue::empty());
        }
        if self.arity == 1 {
            return Ok(self.image(args[0]));
        }
        let n = self.alpha.size();
        let mut out = MultiValue::empty();
        // Walk the Cartesian product with one running flat index.
        let mut picks: Vec<Element> = args.iter().map(|a| a.members().next().unwrap()).collect();
        loop {
            let idx = picks.iter().fold(0usize, |acc, e| acc * n + e.index());
            out = out.union(self.cells[idx]);
            // advance
            let mut k = args.len();
            loop {
                if k == 0 {
                    return Ok(out);
                }
                k -= 1;
                let mut next = None;
                for e in args[k].members() {
                    if e.index() > picks[k].index() {
                        next = Some(e);
                        break;
                    }
                }
                match next {
                    Some(e) => {
                        picks[k] = e;
                        for slot in k + 1..args.len() {
                            picks[slot] = args[slot].members().next().unwrap();
                        }
                        break;
                    }
                    None => continue,
                }
            }
        }
    }

    /// Union-only image of a cell through a unary function.
    pub fn image(&self, mv: MultiValue) -> MultiValue {
        debug_assert_eq!(self.arity, 1);
        let mut out = MultiValue::empty();
        for e in mv.members() {
            out = out.union(self.cells[e.index()]);
        }
        out
    }

    /// Partially applies argument `k` (1-based) to a fixed element.
    pub fn fix_argument(&self, k: usize, value: Element) -> Result<DiscreteFunction> {
        if k == 0 || k > self.arity {
            return Err(Error::PositionOutOfRange { position: k, arity: self.arity });
        }
        if self.arity == 1 {
            return Err(Error::Invalid("cannot fix the only argument".into()));
        }
        let n = self.alpha.size();
        let new_arity = self.arity - 1;
        let mut cells = Vec::with_capacity(n.pow(new_arity as u32));
        let mut args = vec![self.alpha.zero(); self.arity];
        for idx in 0..n.pow(new_arity as u32) {
            let rest = PointIndex::from_flat(&self.alpha, new_arity, idx);
            let mut it = rest.0.iter();
            for (slot, arg) in args.iter_mut().enumerate() {
                *arg = if slot + 1 == k {
                    value
                } else {
                    *it.next().unwrap()
                };
            }
            cells.push(self.evaluate(&args)?);
        }
        DiscreteFunction::new(self.alpha.clone(), new_arity, cells)
    }

    /// Total number of `(args, out)` graph tuples, counting each member of
    /// every cell.
    pub fn graph_size(&self) -> usize {
        self.cells.iter().map(|c| c.len()).sum()
    }

    /// Serializes the table in the bit-exact file format.
    pub fn to_table_text(&self) -> String {
        let alpha = &self.alpha;
        let n = alpha.size();
        let mut out = String::new();
        out.push_str(&format!("dfun N={} M={}", n, self.arity));
        if let Some(name) = &self.name {
            out.push_str(&format!(" name={name}"));
        }
        out.push('\n');
        let tail_arity = self.arity.saturating_sub(2);
        let blocks = n.pow(tail_arity as u32);
        let row_len = if self.arity >= 2 { n } else { 1 };
        let mut args = vec![alpha.zero(); self.arity];
        for block in 0..blocks {
            if self.arity >= 3 {
                let tail = PointIndex::from_flat_by_label(alpha, tail_arity, block);
                let labels: Vec<&str> = tail.0.iter().map(|&e| alpha.label(e)).collect();
                if self.arity == 3 {
                    out.push_str(&format!("# var3 = {}\n", labels[0]));
                } else {
                    out.push_str(&format!("# var3..var{} = {}\n", self.arity, labels.join(" ")));
                }
                for (slot, &e) in tail.0.iter().enumerate() {
                    args[slot + 2] = e;
                }
            }
            for row_pos in 0..n {
                let row = alpha.element_at_position(row_pos);
                args[0] = row;
                let mut cells = Vec::with_capacity(row_len);
                for col_pos in 0..row_len {
                    if self.arity >= 2 {
                        args[1] = alpha.element_at_position(col_pos);
                    }
                    cells.push(alpha.format_mv(self.evaluate(&args).expect("arity matches")));
                }
                out.push_str(&format!("{}: {}\n", alpha.label(row), cells.join(" ")));
            }
        }
        out
    }

    /// Parses the table file format produced by [`Self::to_table_text`].
    pub fn parse_table(text: &str, alpha: &Alphabet) -> Result<DiscreteFunction> {
        let mut lines = text.lines().enumerate();
        let (header_no, header) = lines.next().ok_or_else(|| Error::parse(1, 1, "empty input"))?;
        let mut n = None;
        let mut m = None;
        let mut name = None;
        let mut fields = header.split_whitespace();
        if fields.next() != Some("dfun") {
            return Err(Error::parse(header_no + 1, 1, "expected `dfun` header"));
        }
        for field in fields {
            if let Some(v) = field.strip_prefix("N=") {
                n = v.parse::<usize>().ok();
            } else if let Some(v) = field.strip_prefix("M=") {
                m = v.parse::<usize>().ok();
            } else if let Some(v) = field.strip_prefix("name=") {
                name = Some(v.to_string());
            } else {
                return Err(Error::parse(header_no + 1, 1, format!("unknown field `{field}`")));
            }
        }
        let n = n.ok_or_else(|| Error::parse(header_no + 1, 1, "missing N="))?;
        let arity = m.ok_or_else(|| Error::parse(header_no + 1, 1, "missing M="))?;
        if n != alpha.size() {
            return Err(Error::parse(
                header_no + 1,
                1,
                format!("table is over {n} symbols, alphabet has {}", alpha.size()),
            ));
        }
        if arity == 0 {
            return Err(Error::parse(header_no + 1, 1, "M must be at least 1"));
        }

        let tail_arity = arity.saturating_sub(2);
        let blocks = n.pow(tail_arity as u32);
        let row_len = if arity >= 2 { n } else { 1 };
        let mut cells = vec![MultiValue::empty(); n.pow(arity as u32)];
        let mut args = vec![alpha.zero(); arity];
        for block in 0..blocks {
            if arity >= 3 {
                // Block comment line carrying the fixed labels of vars 3..M.
                let (line_no, line) = next_content_line(&mut lines)
                    .ok_or_else(|| Error::parse(0, 1, "missing block comment line".to_string()))?;
                let body = line
                    .trim()
                    .strip_prefix('#')
                    .ok_or_else(|| Error::parse(line_no + 1, 1, "expected `# var..` block line"))?;
                let labels_part = body
                    .split('=')
                    .nth(1)
                    .ok_or_else(|| Error::parse(line_no + 1, 1, "block line missing `=`"))?;
                let labels: Vec<&str> = labels_part.split_whitespace().collect();
                if labels.len() != tail_arity {
                    return Err(Error::parse(
                        line_no + 1,
                        1,
                        format!("expected {} block labels", tail_arity),
                    ));
                }
                let expected = PointIndex::from_flat_by_label(alpha, tail_arity, block);
                for (slot, (&label, &want)) in labels.iter().zip(expected.0.iter()).enumerate() {
                    let e = alpha.element(label).ok_or_else(|| {
                        Error::parse(line_no + 1, 1, format!("unknown symbol `{label}`"))
                    })?;
                    if e != want {
                        return Err(Error::parse(
                            line_no + 1,
                            1,
                            format!(
                                "block out of order: var{} should be {}",
                                slot + 3,
                                alpha.label(want)
                            ),
                        ));
                    }
                    args[slot + 2] = e;
                }
            }
            for row_pos in 0..n {
                let (line_no, line) = next_content_line(&mut lines).ok_or_else(|| {
                    Error::parse(0, 1, "table ends before all rows are given".to_string())
                })?;
                let (label_part, rest) = line.split_once(':').ok_or_else(|| {
                    Error::parse(line_no + 1, 1, "row must look like `<label>: <cells>`")
                })?;
                let row = alpha.element(label_part.trim()).ok_or_else(|| {
                    Error::parse(
                        line_no + 1,
                        1,
                        format!("unknown row label `{}`", label_part.trim()),
                    )
                })?;
                let expected_row = alpha.element_at_position(row_pos);
                if row != expected_row {
                    return Err(Error::parse(
                        line_no + 1,
                        1,
                        format!("row out of order: expected `{}`", alpha.label(expected_row)),
                    ));
                }
                args[0] = row;
                let fields: Vec<(usize, &str)> = field_offsets(rest, label_part.len() + 1);
                if fields.len() != row_len {
                    return Err(Error::parse(
                        line_no + 1,
                        label_part.len() + 2,
                        format!("expected {row_len} cells, found {}", fields.len()),
                    ));
                }
                for (col_pos, (col_off, field)) in fields.into_iter().enumerate() {
                    if arity >= 2 {
                        args[1] = alpha.element_at_position(col_pos);
                    }
                    let mv = alpha
                        .parse_mv(field)
                        .map_err(|msg| Error::parse(line_no + 1, col_off + 1, msg))?;
                    let idx = args.iter().fold(0usize, |acc, e| acc * n + e.index());
                    cells[idx] = mv;
                }
            }
        }
        if let Some((line_no, line)) = next_content_line(&mut lines) {
            return Err(Error::parse(line_no + 1, 1, format!("unexpected trailing line `{line}`")));
        }
        let f = DiscreteFunction::new(alpha.clone(), arity, cells)?;
        Ok(match name {
            Some(name) => f.with_name(name),
            None => f,
        })
    }
}

impl PointIndex {
    /// Point at a row-major position where each axis runs in ascending label
    /// order (block/print order rather than residue order).
    pub fn from_flat_by_label(alpha: &Alphabet, arity: usize, mut idx: usize) -> Self {
        let n = alpha.size();
        let mut coords = vec![alpha.zero(); arity];
        for slot in coords.iter_mut().rev() {
            *slot = alpha.element_at_position(idx % n);
            idx /= n;
        }
        PointIndex(coords)
    }
}

fn next_content_line<'a>(
    lines: &mut impl Iterator<Item = (usize, &'a str)>,
) -> Option<(usize, &'a str)> {
    lines.by_ref().find(|(_, line)| !line.trim().is_empty())
}

/// Splits a row body on whitespace, keeping the column offset of each field
/// relative to the full line.
fn field_offsets(rest: &str, base: usize) -> Vec<(usize, &str)> {
    let mut out = Vec::new();
    let mut offset = 0;
    for part in rest.split(' ') {
        if !part.is_empty() {
            out.push((base + offset, part));
        }
        offset += part.len() + 1;
    }
    out
}
