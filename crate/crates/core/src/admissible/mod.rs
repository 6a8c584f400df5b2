//! (+)-admissible sequences on an acyclic quiver.
//!
//! Two sequences are equivalent exactly when their multiplicity vectors agree,
//! and one precedes another exactly when its multiplicities are dominated
//! coordinatewise. Every operation here therefore works on multiplicity
//! vectors and rebuilds a representative sequence from them.

mod principal;

use std::fmt;
use std::sync::Arc;

use crate::error::{Error, Result};
use crate::graph::{Quiver, VertexSet};

pub use principal::{nq_reachable, psi, PrincipalTail};

/// Occurrence count of each vertex in a sequence (index `v - 1`).
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MultVector(Vec<u32>);

impl MultVector {
    pub fn new(counts: Vec<u32>) -> Self {
        MultVector(counts)
    }

    pub fn zeros(n: usize) -> Self {
        MultVector(vec![0; n])
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn get(&self, v: usize) -> u32 {
        self.0[v - 1]
    }

    pub fn as_slice(&self) -> &[u32] {
        &self.0
    }

    pub fn total(&self) -> usize {
        self.0.iter().map(|&m| m as usize).sum()
    }

    pub fn max_entry(&self) -> u32 {
        self.0.iter().copied().max().unwrap_or(0)
    }

    /// `{v : m(v) >= level}`.
    pub fn level_set(&self, level: u32) -> VertexSet {
        (1..=self.n()).filter(|&v| self.get(v) >= level).collect()
    }

    pub fn support(&self) -> VertexSet {
        self.level_set(1)
    }

    pub fn dominated_by(&self, other: &MultVector) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn min_with(&self, other: &MultVector) -> MultVector {
        MultVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.min(b)).collect())
    }

    pub fn max_with(&self, other: &MultVector) -> MultVector {
        MultVector(self.0.iter().zip(&other.0).map(|(&a, &b)| a.max(b)).collect())
    }

    /// Coordinatewise difference; `None` unless `other` is dominated by `self`.
    pub fn checked_sub(&self, other: &MultVector) -> Option<MultVector> {
        self.0
            .iter()
            .zip(&other.0)
            .map(|(&a, &b)| a.checked_sub(b))
            .collect::<Option<Vec<_>>>()
            .map(MultVector)
    }
}

impl fmt::Debug for MultVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for MultVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, m) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{m}")?;
        }
        write!(f, ")")
    }
}

/// A (+)-admissible sequence together with the quiver it is based on.
#[derive(Clone)]
pub struct AdmissibleSeq {
    quiver: Arc<Quiver>,
    letters: Vec<usize>,
}

impl PartialEq for AdmissibleSeq {
    /// Literal equality (same base, same letters). Use
    /// [`AdmissibleSeq::equivalent`] for `~`.
    fn eq(&self, other: &Self) -> bool {
        same_base(&self.quiver, &other.quiver) && self.letters == other.letters
    }
}

impl Eq for AdmissibleSeq {}

fn same_base(a: &Arc<Quiver>, b: &Arc<Quiver>) -> bool {
    Arc::ptr_eq(a, b) || **a == **b
}

/// Validates `letters` against the sink condition and returns the sequence
/// along with the final orientation.
pub fn check_admissible(quiver: &Arc<Quiver>, letters: &[usize]) -> Result<(AdmissibleSeq, Quiver)> {
    let mut current = (**quiver).clone();
    for (i, &x) in letters.iter().enumerate() {
        current.check_vertex(x)?;
        if !current.is_sink(x) {
            return Err(Error::NotAdmissible { index: i + 1, vertex: x });
        }
        current = current.reflect_unchecked(x);
    }
    let seq = AdmissibleSeq { quiver: Arc::clone(quiver), letters: letters.to_vec() };
    Ok((seq, current))
}

impl AdmissibleSeq {
    pub fn new(quiver: Arc<Quiver>, letters: Vec<usize>) -> Result<Self> {
        check_admissible(&quiver, &letters)?;
        Ok(AdmissibleSeq { quiver, letters })
    }

    pub fn empty(quiver: Arc<Quiver>) -> Self {
        AdmissibleSeq { quiver, letters: Vec::new() }
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn letters(&self) -> &[usize] {
        &self.letters
    }

    pub fn len(&self) -> usize {
        self.letters.len()
    }

    pub fn is_empty(&self) -> bool {
        self.letters.is_empty()
    }

    pub fn support(&self) -> VertexSet {
        self.letters.iter().copied().collect()
    }

    /// The orientation reached after reflecting at every letter in order.
    pub fn final_quiver(&self) -> Quiver {
        self.letters.iter().fold((*self.quiver).clone(), |q, &x| q.reflect_unchecked(x))
    }

    pub fn multiplicities(&self) -> MultVector {
        let mut m = vec![0u32; self.quiver.n()];
        for &x in &self.letters {
            m[x - 1] += 1;
        }
        MultVector(m)
    }

    /// Whether every vertex occurs exactly once.
    pub fn is_complete(&self) -> bool {
        self.multiplicities().as_slice().iter().all(|&m| m == 1)
    }

    fn check_base(&self, other: &AdmissibleSeq) -> Result<()> {
        if same_base(&self.quiver, &other.quiver) {
            Ok(())
        } else {
            Err(Error::QuiverMismatch)
        }
    }

    /// `self ~ other`.
    pub fn equivalent(&self, other: &AdmissibleSeq) -> Result<bool> {
        self.check_base(other)?;
        Ok(self.multiplicities() == other.multiplicities())
    }

    /// `self ≼ other`.
    pub fn precedes(&self, other: &AdmissibleSeq) -> Result<bool> {
        self.check_base(other)?;
        Ok(self.multiplicities().dominated_by(&other.multiplicities()))
    }

    /// Concatenation `self tail`, where `tail` is based on the final
    /// orientation of `self`.
    pub fn concat(&self, tail: &AdmissibleSeq) -> Result<AdmissibleSeq> {
        if *tail.quiver != self.final_quiver() {
            return Err(Error::QuiverMismatch);
        }
        let mut letters = self.letters.clone();
        letters.extend_from_slice(&tail.letters);
        Ok(AdmissibleSeq { quiver: Arc::clone(&self.quiver), letters })
    }

    /// The same letters re-validated on another base quiver.
    pub fn rebase(&self, quiver: Arc<Quiver>) -> Result<AdmissibleSeq> {
        AdmissibleSeq::new(quiver, self.letters.clone())
    }

    /// `K^m` for a complete sequence `K`.
    pub fn power(&self, m: usize) -> Result<AdmissibleSeq> {
        if !self.is_complete() {
            return Err(Error::NotComplete);
        }
        let letters = self.letters.repeat(m);
        Ok(AdmissibleSeq { quiver: Arc::clone(&self.quiver), letters })
    }

    /// Decomposition into segments of distinct vertices with nested supports.
    pub fn canonical_form(&self) -> Result<CanonicalForm> {
        if self.is_empty() {
            return Err(Error::EmptySequence);
        }
        CanonicalForm::from_multiplicities(&self.quiver, &self.multiplicities())
    }

    /// The deterministic representative of the class of `self`.
    pub fn canonical(&self) -> AdmissibleSeq {
        match self.canonical_form() {
            Ok(cf) => cf.to_sequence(),
            Err(_) => self.clone(),
        }
    }

    /// Rebuilds a sequence from a multiplicity vector, if one exists.
    pub fn from_multiplicities(quiver: &Arc<Quiver>, m: &MultVector) -> Result<AdmissibleSeq> {
        if m.total() == 0 {
            if m.n() != quiver.n() {
                return Err(Error::DimensionMismatch(format!(
                    "multiplicity vector has {} entries, quiver has {} vertices",
                    m.n(),
                    quiver.n()
                )));
            }
            return Ok(AdmissibleSeq::empty(Arc::clone(quiver)));
        }
        Ok(CanonicalForm::from_multiplicities(quiver, m)?.to_sequence())
    }

    /// Greatest lower bound: coordinatewise minimum of multiplicities.
    pub fn meet(&self, other: &AdmissibleSeq) -> Result<AdmissibleSeq> {
        self.check_base(other)?;
        let m = self.multiplicities().min_with(&other.multiplicities());
        AdmissibleSeq::from_multiplicities(&self.quiver, &m)
    }

    /// Least upper bound: coordinatewise maximum of multiplicities.
    pub fn join(&self, other: &AdmissibleSeq) -> Result<AdmissibleSeq> {
        self.check_base(other)?;
        let m = self.multiplicities().max_with(&other.multiplicities());
        AdmissibleSeq::from_multiplicities(&self.quiver, &m)
    }

    /// Splits `self` and `other` as `(S ∧ T) U` and `(S ∧ T) V`, with `U`
    /// and `V` based on the orientation reached after the meet.
    pub fn complement_pair(&self, other: &AdmissibleSeq) -> Result<ComplementPair> {
        if self.is_empty() || other.is_empty() {
            return Err(Error::EmptySequence);
        }
        let meet = self.meet(other)?;
        let mm = meet.multiplicities();
        let base = Arc::new(meet.final_quiver());
        let diff = |s: &AdmissibleSeq| {
            s.multiplicities()
                .checked_sub(&mm)
                .ok_or_else(|| Error::Inconsistent("meet is not dominated".into()))
        };
        let u = AdmissibleSeq::from_multiplicities(&base, &diff(self)?)?;
        let v = AdmissibleSeq::from_multiplicities(&base, &diff(other)?)?;
        Ok(ComplementPair { meet, u, v })
    }
}

impl fmt::Debug for AdmissibleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for AdmissibleSeq {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write_letters(f, &self.letters)
    }
}

fn write_letters(f: &mut fmt::Formatter<'_>, letters: &[usize]) -> fmt::Result {
    for (i, x) in letters.iter().enumerate() {
        if i > 0 {
            write!(f, ",")?;
        }
        write!(f, "{x}")?;
    }
    Ok(())
}

/// Result of [`AdmissibleSeq::complement_pair`].
#[derive(Clone, Debug)]
pub struct ComplementPair {
    pub meet: AdmissibleSeq,
    pub u: AdmissibleSeq,
    pub v: AdmissibleSeq,
}

/// Canonical form `S_1 S_2 ... S_r`. Each segment lists distinct vertices in
/// the order obtained by repeatedly taking the smallest current sink.
#[derive(Clone, PartialEq, Eq)]
pub struct CanonicalForm {
    quiver: Arc<Quiver>,
    segments: Vec<Vec<usize>>,
}

impl CanonicalForm {
    /// Builds the canonical form with level sets `{v : m(v) >= i}`, after
    /// checking that they are filters satisfying the hull condition.
    pub fn from_multiplicities(quiver: &Arc<Quiver>, m: &MultVector) -> Result<CanonicalForm> {
        if m.n() != quiver.n() {
            return Err(Error::DimensionMismatch(format!(
                "multiplicity vector has {} entries, quiver has {} vertices",
                m.n(),
                quiver.n()
            )));
        }
        let r = m.max_entry() as usize;
        if r == 0 {
            return Err(Error::EmptySequence);
        }
        let levels: Vec<VertexSet> = (1..=r as u32).map(|i| m.level_set(i)).collect();
        for (i, &f) in levels.iter().enumerate() {
            if !quiver.is_filter(f) {
                return Err(Error::InvalidMultiplicities {
                    level: i + 1,
                    reason: format!("{f} is not a filter"),
                });
            }
        }
        for i in 0..r - 1 {
            let h = quiver.hull_unchecked(levels[i + 1]);
            if !h.is_subset(levels[i]) {
                return Err(Error::InvalidMultiplicities {
                    level: i + 1,
                    reason: format!("hull {h} of level {} is not inside {}", i + 2, levels[i]),
                });
            }
        }

        let mut current = (**quiver).clone();
        let mut segments = Vec::with_capacity(r);
        for (i, &support) in levels.iter().enumerate() {
            let mut remaining = support;
            let mut seg = Vec::with_capacity(support.len());
            while !remaining.is_empty() {
                let x = remaining.intersection(current.sinks()).first().ok_or_else(|| {
                    Error::Inconsistent(format!("no sink left in segment {} support {remaining}", i + 1))
                })?;
                seg.push(x);
                remaining.remove(x);
                current = current.reflect_unchecked(x);
            }
            segments.push(seg);
        }
        Ok(CanonicalForm { quiver: Arc::clone(quiver), segments })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    /// The size `r`.
    pub fn size(&self) -> usize {
        self.segments.len()
    }

    pub fn segments(&self) -> &[Vec<usize>] {
        &self.segments
    }

    pub fn supports(&self) -> Vec<VertexSet> {
        self.segments.iter().map(|s| s.iter().copied().collect()).collect()
    }

    /// Support of segment `i` (1-based); empty beyond the size.
    pub fn support(&self, i: usize) -> VertexSet {
        self.segments
            .get(i.wrapping_sub(1))
            .map(|s| s.iter().copied().collect())
            .unwrap_or(VertexSet::EMPTY)
    }

    pub fn to_sequence(&self) -> AdmissibleSeq {
        AdmissibleSeq { quiver: Arc::clone(&self.quiver), letters: self.segments.concat() }
    }
}

impl fmt::Debug for CanonicalForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for CanonicalForm {
    /// Segments separated by `" | "`, e.g. `3,2,1 | 3`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, seg) in self.segments.iter().enumerate() {
            if i > 0 {
                write!(f, " | ")?;
            }
            write_letters(f, seg)?;
        }
        Ok(())
    }
}

/// Every admissible sequence of length at most `max_len`, including the
/// empty one, in depth-first order.
pub fn enumerate(quiver: &Arc<Quiver>, max_len: usize) -> Vec<AdmissibleSeq> {
    let mut out = Vec::new();
    let mut letters = Vec::new();
    walk(quiver, (**quiver).clone(), max_len, &mut letters, &mut out);
    out
}

fn walk(
    base: &Arc<Quiver>,
    current: Quiver,
    budget: usize,
    letters: &mut Vec<usize>,
    out: &mut Vec<AdmissibleSeq>,
) {
    out.push(AdmissibleSeq { quiver: Arc::clone(base), letters: letters.clone() });
    if budget == 0 {
        return;
    }
    for x in current.sinks().iter() {
        letters.push(x);
        walk(base, current.reflect_unchecked(x), budget - 1, letters, out);
        letters.pop();
    }
}

/// Every complete admissible sequence (each vertex exactly once).
pub fn complete_sequences(quiver: &Arc<Quiver>) -> Vec<AdmissibleSeq> {
    fn go(
        base: &Arc<Quiver>,
        current: Quiver,
        used: VertexSet,
        letters: &mut Vec<usize>,
        out: &mut Vec<AdmissibleSeq>,
    ) {
        if used.len() == base.n() {
            out.push(AdmissibleSeq { quiver: Arc::clone(base), letters: letters.clone() });
            return;
        }
        for x in current.sinks().difference(used).iter() {
            letters.push(x);
            let mut next_used = used;
            next_used.insert(x);
            go(base, current.reflect_unchecked(x), next_used, letters, out);
            letters.pop();
        }
    }
    let mut out = Vec::new();
    go(quiver, (**quiver).clone(), VertexSet::EMPTY, &mut Vec::new(), &mut out);
    out
}

/// The complete sequence that always takes the smallest current sink.
pub fn canonical_complete(quiver: &Arc<Quiver>) -> AdmissibleSeq {
    let m = MultVector(vec![1; quiver.n()]);
    // The full vertex set is a filter, so this cannot fail.
    AdmissibleSeq::from_multiplicities(quiver, &m).expect("full vertex set is a filter")
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q3() -> Arc<Quiver> {
        Arc::new(Quiver::from_arrows(3, &[(1, 2), (2, 3)]).unwrap())
    }

    fn seq(q: &Arc<Quiver>, letters: &[usize]) -> AdmissibleSeq {
        AdmissibleSeq::new(Arc::clone(q), letters.to_vec()).unwrap()
    }

    fn mv(v: &[u32]) -> MultVector {
        MultVector::new(v.to_vec())
    }

    #[test]
    fn check_admissible_examples() {
        let q = q3();
        let (_, fin) = check_admissible(&q, &[3]).unwrap();
        assert_eq!(fin.arrows(), &[(1, 2), (3, 2)]);
        assert_eq!(
            check_admissible(&q, &[2]).unwrap_err(),
            Error::NotAdmissible { index: 1, vertex: 2 }
        );
        let (_, fin) = check_admissible(&q, &[3, 2, 3]).unwrap();
        assert_eq!(fin.arrows(), &[(2, 1), (3, 2)]);
    }

    #[test]
    fn multiplicity_examples() {
        let q = q3();
        assert_eq!(seq(&q, &[3, 2, 3]).multiplicities(), mv(&[0, 1, 2]));
        assert_eq!(AdmissibleSeq::empty(q.clone()).multiplicities(), mv(&[0, 0, 0]));
        assert_eq!(seq(&q, &[3, 2, 1, 3]).multiplicities(), mv(&[1, 1, 2]));
    }

    #[test]
    fn equivalence_and_order() {
        let q = q3();
        let a = seq(&q, &[3, 2, 1, 3]);
        let b = seq(&q, &[3, 2, 3, 1]);
        assert!(a.equivalent(&b).unwrap());
        assert!(!seq(&q, &[3]).equivalent(&seq(&q, &[3, 2, 3])).unwrap());
        assert!(a.equivalent(&a).unwrap());
        assert!(seq(&q, &[3]).precedes(&seq(&q, &[3, 2, 3])).unwrap());
        assert!(!seq(&q, &[3, 2, 3]).precedes(&seq(&q, &[3, 2, 1])).unwrap());
        assert!(a.precedes(&a).unwrap());
    }

    #[test]
    fn base_mismatch_is_an_error() {
        let q = q3();
        let other = Arc::new(q.reflect(3).unwrap());
        let a = seq(&q, &[3]);
        let b = seq(&other, &[2]);
        assert_eq!(a.equivalent(&b), Err(Error::QuiverMismatch));
        assert_eq!(a.meet(&b).unwrap_err(), Error::QuiverMismatch);
    }

    #[test]
    fn canonical_form_examples() {
        let q = q3();
        assert_eq!(seq(&q, &[3, 2, 1, 3]).canonical_form().unwrap().to_string(), "3,2,1 | 3");
        assert_eq!(seq(&q, &[3]).canonical_form().unwrap().to_string(), "3");
        assert_eq!(seq(&q, &[3, 2, 3]).canonical_form().unwrap().to_string(), "3,2 | 3");
        assert_eq!(
            AdmissibleSeq::empty(q).canonical_form().unwrap_err(),
            Error::EmptySequence
        );
    }

    #[test]
    fn from_multiplicities_examples() {
        let q = q3();
        assert_eq!(
            AdmissibleSeq::from_multiplicities(&q, &mv(&[1, 1, 2])).unwrap().letters(),
            &[3, 2, 1, 3]
        );
        let err = AdmissibleSeq::from_multiplicities(&q, &mv(&[1, 0, 0])).unwrap_err();
        assert!(matches!(err, Error::InvalidMultiplicities { level: 1, .. }));
        assert_eq!(AdmissibleSeq::from_multiplicities(&q, &mv(&[0, 0, 1])).unwrap().letters(), &[3]);
        // {3} is a filter at level 2 but its hull {2,3} is not inside {3}.
        let err = AdmissibleSeq::from_multiplicities(&q, &mv(&[0, 0, 2])).unwrap_err();
        assert!(matches!(err, Error::InvalidMultiplicities { level: 1, .. }));
    }

    #[test]
    fn meet_join_examples() {
        let q = q3();
        let s = seq(&q, &[3, 2, 3]);
        let t = seq(&q, &[3, 2, 1]);
        assert_eq!(s.meet(&t).unwrap().letters(), &[3, 2]);
        assert_eq!(s.join(&t).unwrap().letters(), &[3, 2, 1, 3]);
        let e = AdmissibleSeq::empty(q);
        assert_eq!(s.join(&e).unwrap().letters(), s.letters());
        assert!(s.meet(&e).unwrap().is_empty());
    }

    #[test]
    fn complement_pair_examples() {
        let q = q3();
        let cp = seq(&q, &[3, 2, 3]).complement_pair(&seq(&q, &[3, 2, 1])).unwrap();
        assert_eq!(cp.meet.letters(), &[3, 2]);
        assert_eq!(cp.u.letters(), &[3]);
        assert_eq!(cp.v.letters(), &[1]);
        assert_eq!(cp.u.quiver().arrows(), &[(2, 1), (2, 3)]);

        let s = seq(&q, &[3, 2, 3]);
        let cp = s.complement_pair(&s).unwrap();
        assert!(cp.u.is_empty() && cp.v.is_empty());

        let cp = seq(&q, &[3]).complement_pair(&seq(&q, &[3, 2, 3])).unwrap();
        assert_eq!(cp.meet.letters(), &[3]);
        assert!(cp.u.is_empty());
        assert_eq!(cp.v.letters(), &[2, 3]);
    }

    #[test]
    fn concat_requires_final_orientation() {
        let q = q3();
        let s = seq(&q, &[3]);
        let tail = AdmissibleSeq::new(Arc::new(s.final_quiver()), vec![2, 3]).unwrap();
        assert_eq!(s.concat(&tail).unwrap().letters(), &[3, 2, 3]);
        assert_eq!(s.concat(&s).unwrap_err(), Error::QuiverMismatch);
    }

    #[test]
    fn enumeration_and_complete_sequences() {
        let q = q3();
        // Q3 has exactly one admissible sequence of each length up to 2: [], [3], [3,2].
        assert_eq!(enumerate(&q, 2).len(), 3);
        let ks = complete_sequences(&q);
        assert_eq!(ks.len(), 1);
        assert_eq!(ks[0].letters(), &[3, 2, 1]);
        assert_eq!(canonical_complete(&q).letters(), &[3, 2, 1]);
        assert_eq!(ks[0].power(2).unwrap().letters(), &[3, 2, 1, 3, 2, 1]);
        assert_eq!(seq(&q, &[3]).power(2).unwrap_err(), Error::NotComplete);
    }
}
