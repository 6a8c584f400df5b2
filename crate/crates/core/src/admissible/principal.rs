//! Principal sequences `S_{r,x}` and the translation quiver `N(Γ, Λ^op)`.

use std::collections::VecDeque;
use std::sync::Arc;

use super::{AdmissibleSeq, MultVector};
use crate::error::{Error, Result};
use crate::graph::{Quiver, VertexSet};

/// Result of stripping the first letter off a principal sequence.
#[derive(Clone, Debug)]
pub struct PrincipalTail {
    /// `σ_{x_1} Λ`.
    pub quiver: Arc<Quiver>,
    /// `x_2, ..., x_s` on `quiver`.
    pub tail: AdmissibleSeq,
    /// Size of the tail.
    pub size: usize,
    /// Generating vertex (unchanged).
    pub vertex: usize,
}

impl AdmissibleSeq {
    /// `S_{r,x}`: size `r`, last support `<x>`, each earlier support the hull
    /// of the next one.
    pub fn principal(quiver: &Arc<Quiver>, r: usize, x: usize) -> Result<AdmissibleSeq> {
        quiver.check_vertex(x)?;
        if r == 0 {
            return Err(Error::TooShort("principal sequences have size at least 1".into()));
        }
        let mut counts = vec![0u32; quiver.n()];
        let mut level = quiver.principal_filter(x);
        for _ in 0..r {
            for v in level.iter() {
                counts[v - 1] += 1;
            }
            level = quiver.hull_unchecked(level);
        }
        AdmissibleSeq::from_multiplicities(quiver, &MultVector::new(counts))
    }

    /// `Some((r, x))` when `self ~ S_{r,x}`.
    pub fn is_principal(&self) -> Option<(usize, usize)> {
        if self.is_empty() {
            return None;
        }
        let m = self.multiplicities();
        let r = m.max_entry() as usize;
        let levels: Vec<VertexSet> = (1..=r as u32).map(|i| m.level_set(i)).collect();
        let last = levels[r - 1];
        let x = last.iter().find(|&v| self.quiver.principal_filter(v) == last)?;
        for i in 0..r - 1 {
            if !self.quiver.is_filter(levels[i + 1]) || self.quiver.hull_unchecked(levels[i + 1]) != levels[i] {
                return None;
            }
        }
        Some((r, x))
    }

    /// `S_{q,y} ≼ self`, decided from the canonical supports of `self` alone.
    pub fn principal_precedes(&self, q: usize, y: usize) -> bool {
        let m = self.multiplicities();
        q >= 1 && y >= 1 && y <= m.n() && q as u32 <= m.max_entry() && m.get(y) >= q as u32
    }

    /// The pairs `(h, v)` of the minimal principal join decomposition:
    /// `v` runs over the minimal elements of `Supp S_h \ H(Supp S_{h+1})`.
    pub fn principal_decomposition(&self) -> Result<Vec<(usize, usize)>> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        let m = self.multiplicities();
        let r = m.max_entry();
        let mut out = Vec::new();
        for h in 1..=r {
            let above = self.quiver.hull_unchecked(m.level_set(h + 1));
            let rest = m.level_set(h).difference(above);
            for v in self.quiver.minimal_elements(rest).iter() {
                out.push((h as usize, v));
            }
        }
        Ok(out)
    }

    /// Drops the first letter of a principal sequence of length > 1; the
    /// tail is principal on `σ_{x_1} Λ` with size `r - 1` when `x_1 = x`
    /// and `r` otherwise.
    pub fn principal_tail(&self) -> Result<PrincipalTail> {
        let (r, x) = self.is_principal().ok_or(Error::NotPrincipal)?;
        if self.len() < 2 {
            return Err(Error::TooShort("principal tail needs length > 1".into()));
        }
        let first = self.letters[0];
        let quiver = Arc::new(self.quiver.reflect_unchecked(first));
        let tail = AdmissibleSeq::new(Arc::clone(&quiver), self.letters[1..].to_vec())?;
        let size = if first == x { r - 1 } else { r };
        match tail.is_principal() {
            Some((q, y)) if q == size && y == x => Ok(PrincipalTail { quiver, tail, size, vertex: x }),
            got => Err(Error::Inconsistent(format!(
                "tail of S_({r},{x}) is {got:?}, expected ({size},{x})"
            ))),
        }
    }
}

/// `ψ(S_{r,x}) = (r - 1, x)`.
pub fn psi(r: usize, x: usize) -> (usize, usize) {
    (r - 1, x)
}

/// Path existence `from ->* to` in the translation quiver `N(Γ, Λ^op)`:
/// every arrow `u -> v` of the quiver contributes `(n, v) -> (n, u)` and
/// `(n, u) -> (n + 1, v)`.
pub fn nq_reachable(quiver: &Quiver, from: (usize, usize), to: (usize, usize)) -> bool {
    let n = quiver.n();
    if from == to {
        return true;
    }
    if from.0 > to.0 {
        return false;
    }
    let idx = |(level, v): (usize, usize)| (level - from.0) * n + (v - 1);
    let mut seen = vec![false; (to.0 - from.0 + 1) * n];
    seen[idx(from)] = true;
    let mut queue = VecDeque::from([from]);
    while let Some((level, w)) = queue.pop_front() {
        for &(u, v) in quiver.arrows() {
            let mut step = |node: (usize, usize)| {
                if node.0 <= to.0 && !seen[idx(node)] {
                    seen[idx(node)] = true;
                    queue.push_back(node);
                }
            };
            if w == v {
                step((level, u));
            }
            if w == u {
                step((level + 1, v));
            }
        }
        if seen[idx(to)] {
            return true;
        }
    }
    false
}
