//! The four special operator families on discrete functions.
//!
//! * commutation: permutes the roles (argument positions and result) of a
//!   function's graph relation,
//! * tension-compression: pre-composes one argument with a unary function
//!   (`T1`, `T2`, generally `Tk`) or maps the result through the converse of
//!   a unary function (`T0`),
//! * superposition: pointwise Minkowski sum,
//! * false variables: arity lifts that ignore the inserted argument.
//!
//! Multi-valued cells are handled by treating every member of a cell as its
//! own graph tuple, which keeps all four families total on the whole
//! function space.

use crate::alphabet::MultiValue;
use crate::error::Error;
use crate::table::{DiscreteFunction, PointIndex};
use crate::Result;

/// Reassignment of the `M+1` roles of an `M`-ary function's graph.
///
/// Role `0` is the original result, roles `1..=M` the original arguments.
/// The first `M` entries name the role each new argument takes, the last
/// entry the role of the new result. `[1, 2, .., M, 0]` is the identity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct RolePermutation(Vec<usize>);

impl RolePermutation {
    pub fn new(roles: &[usize]) -> Result<Self> {
        let arity = roles.len().saturating_sub(1);
        let mut seen = vec![false; roles.len()];
        for &r in roles {
            if r >= roles.len() || seen[r] {
                return Err(Error::InvalidRolePermutation { roles: roles.to_vec(), arity });
            }
            seen[r] = true;
        }
        if roles.len() < 2 {
            return Err(Error::InvalidRolePermutation { roles: roles.to_vec(), arity });
        }
        Ok(RolePermutation(roles.to_vec()))
    }

    pub fn identity(arity: usize) -> Self {
        let mut roles: Vec<usize> = (1..=arity).collect();
        roles.push(0);
        RolePermutation(roles)
    }

    /// Arity of the functions this permutation applies to.
    pub fn arity(&self) -> usize {
        self.0.len() - 1
    }

    pub fn roles(&self) -> &[usize] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.arity())
    }

    /// Original role sitting behind new role `new` (new role `0` is the new
    /// result).
    fn source_of(&self, new: usize) -> usize {
        if new == 0 {
            self.0[self.arity()]
        } else {
            self.0[new - 1]
        }
    }

    /// The permutation equivalent to commuting by `self` first and `next`
    /// second.
    pub fn then(&self, next: &RolePermutation) -> RolePermutation {
        let m = self.arity();
        debug_assert_eq!(m, next.arity());
        let mut roles = Vec::with_capacity(m + 1);
        for new in 1..=m {
            roles.push(self.source_of(next.source_of(new)));
        }
        roles.push(self.source_of(next.source_of(0)));
        RolePermutation(roles)
    }

    /// Formats as the `C(..)` operator notation.
    pub fn display(&self) -> String {
        let parts: Vec<String> = self.0.iter().map(|r| r.to_string()).collect();
        format!("C({})", parts.join(","))
    }

    /// Parses the `C(..)` notation, e.g. `C(1,0,2)` or `C(2,3,0,1)`.
    pub fn parse(text: &str) -> Result<Self> {
        let inner = text
            .trim()
            .strip_prefix("C(")
            .and_then(|t| t.strip_suffix(')'))
            .ok_or_else(|| Error::parse(1, 1, format!("`{text}` is not a C(..) operator")))?;
        let mut roles = Vec::new();
        for part in inner.split(',') {
            let r: usize = part
                .trim()
                .parse()
                .map_err(|_| Error::parse(1, 1, format!("bad role `{part}` in `{text}`")))?;
            roles.push(r);
        }
        RolePermutation::new(&roles)
    }
}

impl DiscreteFunction {
    /// Builds the role-permuted function: `out ∈ g(args)` exactly when the
    /// corresponding original tuple is in the graph of `self`. Points with
    /// no witness become no-valued, points with several become multi-valued.
    pub fn commute(&self, p: &RolePermutation) -> Result<DiscreteFunction> {
        let m = self.arity();
        if p.arity() != m {
            return Err(Error::ArityMismatch { expected: m + 1, found: p.roles().len() });
        }
        let alpha = self.alphabet().clone();
        let n = alpha.size();
        let mut cells = vec![MultiValue::empty(); n.pow(m as u32)];
        // tuple[role]: tuple[0] = result, tuple[k] = argument k
        let mut tuple = vec![alpha.zero(); m + 1];
        for (idx, &cell) in self.cells().iter().enumerate() {
            if cell.is_empty() {
                continue;
            }
            let point = PointIndex::from_flat(&alpha, m, idx);
            for (slot, &e) in point.coords().iter().enumerate() {
                tuple[slot + 1] = e;
            }
            for out in cell.members() {
                tuple[0] = out;
                let mut new_idx = 0usize;
                for new_arg in 1..=m {
                    new_idx = new_idx * n + tuple[p.source_of(new_arg)].index();
                }
                cells[new_idx].insert(tuple[p.source_of(0)]);
            }
        }
        DiscreteFunction::new(alpha, m, cells)
    }

    /// Graph converse of a unary function: `y ∈ converse(b)(x)` iff
    /// `x ∈ b(y)`.
    pub fn converse(&self) -> Result<DiscreteFunction> {
        if self.arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: self.arity() });
        }
        let alpha = self.alphabet().clone();
        let mut cells = vec![MultiValue::empty(); alpha.size()];
        for y in alpha.elements() {
            for v in self.cells()[y.index()].members() {
                cells[v.index()].insert(y);
            }
        }
        DiscreteFunction::new(alpha, 1, cells)
    }

    /// Unary composition `self[other(x)]` (apply `other` first).
    pub fn compose(&self, other: &DiscreteFunction) -> Result<DiscreteFunction> {
        if self.arity() != 1 || other.arity() != 1 {
            return Err(Error::ArityMismatch {
                expected: 1,
                found: self.arity().max(other.arity()),
            });
        }
        if self.alphabet() != other.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet().labels(),
                found: other.alphabet().labels(),
            });
        }
        let alpha = self.alphabet().clone();
        let cells = alpha.elements().map(|x| self.image(other.cells()[x.index()])).collect();
        DiscreteFunction::new(alpha, 1, cells)
    }

    /// Tension-compression of argument `k` (1-based): pre-composes that
    /// argument with `b`, so `T1` is `k = 1` and `T2` is `k = 2`.
    pub fn tension_arg(&self, k: usize, b: &DiscreteFunction) -> Result<DiscreteFunction> {
        if k == 0 || k > self.arity() {
            return Err(Error::PositionOutOfRange { position: k, arity: self.arity() });
        }
        if b.arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: b.arity() });
        }
        if self.alphabet() != b.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet().labels(),
                found: b.alphabet().labels(),
            });
        }
        let alpha = self.alphabet().clone();
        let n = alpha.size();
        let m = self.arity();
        let total = n.pow(m as u32);
        // stride of argument k in the flat row-major layout
        let stride = n.pow((m - k) as u32);
        let mut cells = Vec::with_capacity(total);
        for idx in 0..total {
            let xk = (idx / stride) % n;
            let base = idx - xk * stride;
            let mut out = MultiValue::empty();
            for u in b.cells()[xk].members() {
                out = out.union(self.cells()[base + u.index() * stride]);
            }
            cells.push(out);
        }
        DiscreteFunction::new(alpha, m, cells)
    }

    /// Tension-compression of the result (`T0`): every cell becomes its
    /// image under the converse of `b`, i.e. the table of `b⁻¹[..]`. Calling
    /// it with an explicit converse therefore applies the original function
    /// to the output, which needs no invertibility assumption.
    pub fn tension_result(&self, b: &DiscreteFunction) -> Result<DiscreteFunction> {
        if b.arity() != 1 {
            return Err(Error::ArityMismatch { expected: 1, found: b.arity() });
        }
        if self.alphabet() != b.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: self.alphabet().labels(),
                found: b.alphabet().labels(),
            });
        }
        let conv = b.converse()?;
        let cells = self.cells().iter().map(|&c| conv.image(c)).collect();
        DiscreteFunction::new(self.alphabet().clone(), self.arity(), cells)
    }

    /// Inserts an ignored argument at position `k` (1-based), producing a
    /// false function of `arity + 1` variables.
    pub fn add_false_variable(&self, k: usize) -> Result<DiscreteFunction> {
        let new_arity = self.arity() + 1;
        if k == 0 || k > new_arity {
            return Err(Error::PositionOutOfRange { position: k, arity: new_arity });
        }
        let alpha = self.alphabet().clone();
        let n = alpha.size();
        let total = n.pow(new_arity as u32);
        let mut cells = Vec::with_capacity(total);
        let mut inner = vec![alpha.zero(); self.arity()];
        for idx in 0..total {
            let point = PointIndex::from_flat(&alpha, new_arity, idx);
            let mut slot = 0;
            for (pos, &e) in point.coords().iter().enumerate() {
                if pos + 1 != k {
                    inner[slot] = e;
                    slot += 1;
                }
            }
            cells.push(self.evaluate(&inner)?);
        }
        DiscreteFunction::new(alpha, new_arity, cells)
    }
}

/// Pointwise sum of any nonempty family of same-shaped functions.
pub fn superpose(fs: &[DiscreteFunction]) -> Result<DiscreteFunction> {
    let first = fs
        .first()
        .ok_or_else(|| Error::Invalid("superposition needs at least one function".into()))?;
    for f in fs {
        if f.alphabet() != first.alphabet() {
            return Err(Error::AlphabetMismatch {
                expected: first.alphabet().labels(),
                found: f.alphabet().labels(),
            });
        }
        if f.arity() != first.arity() {
            return Err(Error::ArityMismatch { expected: first.arity(), found: f.arity() });
        }
    }
    let alpha = first.alphabet().clone();
    let cells = (0..first.cells().len())
        .map(|i| alpha.mv_sum_all(fs.iter().map(|f| f.cells()[i])))
        .collect();
    DiscreteFunction::new(alpha, first.arity(), cells)
}
