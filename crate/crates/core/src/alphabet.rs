//! Finite cyclic alphabets and the multi-value cell type.
//!
//! Internally every symbol is a residue `0..N-1` and addition is plain
//! modular addition; display labels such as `-1, 0, 1` exist only at the
//! parse/print layer. A [`MultiValue`] is a subset of the alphabet stored as
//! a bit mask: the empty set prints as `N`, multi-element sets print their
//! members joined by `*` in ascending label order.

use std::fmt;
use std::sync::Arc;

use crate::error::Error;
use crate::Result;

/// One symbol of an alphabet, stored as its canonical residue.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Element(u8);

impl Element {
    pub fn residue(self) -> u8 {
        self.0
    }

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub(crate) fn from_residue(r: u8) -> Self {
        Element(r)
    }
}

#[derive(Debug, PartialEq, Eq)]
struct AlphabetData {
    /// Display label of each residue, indexed by residue.
    labels: Vec<String>,
    /// Residues listed in ascending label order.
    by_label: Vec<Element>,
    /// Position of each residue in ascending label order.
    label_pos: Vec<usize>,
}

/// A finite alphabet of `N >= 2` symbols with cyclic addition.
///
/// Cheap to clone; the label data is shared.
#[derive(Debug, Clone)]
pub struct Alphabet(Arc<AlphabetData>);

impl PartialEq for Alphabet {
    fn eq(&self, other: &Self) -> bool {
        Arc::ptr_eq(&self.0, &other.0) || self.0.labels == other.0.labels
    }
}

impl Eq for Alphabet {}

impl Alphabet {
    /// Builds an alphabet from `(label, residue)` pairs given in ascending
    /// label order. The residues must form a bijection with `0..N-1`.
    pub fn new(display: &[(&str, u8)]) -> Result<Self> {
        let n = display.len();
        if n < 2 {
            return Err(Error::AlphabetTooSmall(n));
        }
        if n > 16 {
            return Err(Error::Invalid(format!(
                "alphabet of {n} symbols exceeds the supported 16"
            )));
        }
        let mut labels = vec![String::new(); n];
        let mut by_label = Vec::with_capacity(n);
        let mut label_pos = vec![usize::MAX; n];
        for (pos, (label, residue)) in display.iter().enumerate() {
            let r = *residue as usize;
            if r >= n || !labels[r].is_empty() {
                return Err(Error::Invalid(format!("residue {residue} is not a bijection target")));
            }
            if label.is_empty() || display.iter().filter(|(l, _)| l == label).count() > 1 {
                return Err(Error::Invalid(format!("label `{label}` is empty or repeated")));
            }
            labels[r] = label.to_string();
            by_label.push(Element(*residue));
            label_pos[r] = pos;
        }
        Ok(Alphabet(Arc::new(AlphabetData { labels, by_label, label_pos })))
    }

    /// The alphabet `0, 1, .., n-1` with labels equal to residues.
    pub fn modular(n: usize) -> Result<Self> {
        let labels: Vec<String> = (0..n).map(|i| i.to_string()).collect();
        let display: Vec<(&str, u8)> =
            labels.iter().enumerate().map(|(i, l)| (l.as_str(), i as u8)).collect();
        Alphabet::new(&display)
    }

    /// The three-symbol alphabet `-1, 0, 1` with `-1` bound to residue 2,
    /// so that `-1 + -1 = 1`.
    pub fn ternary() -> Self {
        Alphabet::new(&[("-1", 2), ("0", 0), ("1", 1)]).expect("ternary alphabet is valid")
    }

    /// A balanced alphabet `-(k), .., -1, 0, 1, .., k` for odd `n = 2k+1`;
    /// negative labels bind to the residues of the same value mod n.
    pub fn balanced(n: usize) -> Result<Self> {
        if n.is_multiple_of(2) {
            return Err(Error::Invalid(format!("balanced alphabet needs odd size, got {n}")));
        }
        let k = (n / 2) as i64;
        let labels: Vec<String> = (-k..=k).map(|v| v.to_string()).collect();
        let display: Vec<(&str, u8)> = labels
            .iter()
            .enumerate()
            .map(|(i, l)| (l.as_str(), ((i as i64 - k).rem_euclid(n as i64)) as u8))
            .collect();
        Alphabet::new(&display)
    }

    /// The three-symbol alphabet `-e, o, e` used when symbols denote unary
    /// functions; `-e` binds to residue 2 like `-1` does.
    pub fn operator_level() -> Self {
        Alphabet::new(&[("-e", 2), ("o", 0), ("e", 1)]).expect("operator alphabet is valid")
    }

    pub fn size(&self) -> usize {
        self.0.labels.len()
    }

    /// All elements in residue order.
    pub fn elements(&self) -> impl Iterator<Item = Element> + '_ {
        (0..self.size() as u8).map(Element)
    }

    /// All elements in ascending label order.
    pub fn elements_by_label(&self) -> impl Iterator<Item = Element> + '_ {
        self.0.by_label.iter().copied()
    }

    pub fn label(&self, e: Element) -> &str {
        &self.0.labels[e.index()]
    }

    pub fn labels(&self) -> Vec<String> {
        self.0.labels.clone()
    }

    /// Looks an element up by its display label.
    pub fn element(&self, label: &str) -> Option<Element> {
        self.0.labels.iter().position(|l| l == label).map(|r| Element(r as u8))
    }

    /// Position of an element in ascending label order.
    pub fn label_position(&self, e: Element) -> usize {
        self.0.label_pos[e.index()]
    }

    /// Element at a given position in ascending label order.
    pub fn element_at_position(&self, pos: usize) -> Element {
        self.0.by_label[pos]
    }

    /// The additive identity.
    pub fn zero(&self) -> Element {
        Element(0)
    }

    /// The generator `1`.
    pub fn one(&self) -> Element {
        Element(1)
    }

    /// The element `-1`, i.e. residue `N-1`.
    pub fn minus_one(&self) -> Element {
        Element(self.size() as u8 - 1)
    }

    /// Cyclic addition `(a + b) mod N`.
    pub fn add(&self, a: Element, b: Element) -> Element {
        Element(((a.index() + b.index()) % self.size()) as u8)
    }

    /// Minkowski sum of two cells: empty absorbs, otherwise the set of all
    /// pairwise sums.
    pub fn mv_sum(&self, a: MultiValue, b: MultiValue) -> MultiValue {
        if a.is_empty() || b.is_empty() {
            return MultiValue::empty();
        }
        let n = self.size() as u32;
        let mask = MultiValue::full(self).0;
        let mut out = 0u32;
        let mut rest = a.0;
        while rest != 0 {
            let shift = rest.trailing_zeros();
            rest &= rest - 1;
            out |= ((b.0 << shift) | (b.0 >> (n - shift))) & mask;
        }
        MultiValue(out)
    }

    /// Sum of any number of cells; the empty collection sums to `{0}` so
    /// that pruned zero terms of a decomposition stay correct.
    pub fn mv_sum_all<I: IntoIterator<Item = MultiValue>>(&self, parts: I) -> MultiValue {
        parts
            .into_iter()
            .fold(MultiValue::singleton(self.zero()), |acc, mv| self.mv_sum(acc, mv))
    }

    /// Formats a cell in the bit-exact text syntax.
    pub fn format_mv(&self, mv: MultiValue) -> String {
        if mv.is_empty() {
            return "N".to_string();
        }
        let mut parts = Vec::new();
        for e in self.elements_by_label() {
            if mv.contains(e) {
                parts.push(self.label(e).to_string());
            }
        }
        parts.join("*")
    }

    /// Parses a cell from the text syntax: `N`, a single label, or labels
    /// joined by `*` in ascending label order.
    pub fn parse_mv(&self, text: &str) -> std::result::Result<MultiValue, String> {
        if text == "N" {
            return Ok(MultiValue::empty());
        }
        let mut mv = MultiValue::empty();
        let mut last_pos = None;
        for part in text.split('*') {
            let e = self.element(part).ok_or_else(|| format!("unknown symbol `{part}`"))?;
            let pos = self.label_position(e);
            if let Some(prev) = last_pos {
                if pos <= prev {
                    return Err(format!("`{text}` is not in ascending label order"));
                }
            }
            last_pos = Some(pos);
            mv.insert(e);
        }
        Ok(mv)
    }

    /// Renders elements as a tuple for diagnostics, e.g. `(-1, 0)`.
    pub fn format_point(&self, point: &[Element]) -> String {
        let labels: Vec<&str> = point.iter().map(|&e| self.label(e)).collect();
        format!("({})", labels.join(", "))
    }
}

/// A subset of the alphabet held at one table cell.
///
/// The empty set is the `N` (no-valued) cell; sets of several elements are
/// the `*`-joined multi-valued cells.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Default)]
pub struct MultiValue(u32);

impl MultiValue {
    pub fn empty() -> Self {
        MultiValue(0)
    }

    pub fn singleton(e: Element) -> Self {
        MultiValue(1 << e.index())
    }

    pub fn full(alpha: &Alphabet) -> Self {
        MultiValue((1u32 << alpha.size()) - 1)
    }

    pub fn from_elements<I: IntoIterator<Item = Element>>(iter: I) -> Self {
        let mut mv = MultiValue::empty();
        for e in iter {
            mv.insert(e);
        }
        mv
    }

    /// Builds a cell directly from a residue bit mask; callers keep the
    /// mask inside the alphabet.
    pub fn from_bits(bits: u32) -> Self {
        MultiValue(bits)
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    pub fn contains(self, e: Element) -> bool {
        self.0 & (1 << e.index()) != 0
    }

    pub fn insert(&mut self, e: Element) {
        self.0 |= 1 << e.index();
    }

    pub fn remove(&mut self, e: Element) {
        self.0 &= !(1 << e.index());
    }

    pub fn union(self, other: Self) -> Self {
        MultiValue(self.0 | other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    /// Members in residue order.
    pub fn members(self) -> impl Iterator<Item = Element> {
        let bits = self.0;
        (0..32u8).filter(move |i| bits & (1 << i) != 0).map(Element)
    }

    /// True when the cell is exactly `{0}`.
    pub fn is_zero_singleton(self) -> bool {
        self.0 == 1
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "#{}", self.0)
    }
}
