//! Representations of quivers over the rationals, BGP reflection functors,
//! the Coxeter functor and shortest annihilating sequences.

pub mod linalg;

use std::sync::Arc;

use crate::admissible::{canonical_complete, AdmissibleSeq, MultVector};
use crate::error::{Error, Result};
use crate::graph::{Quiver, VertexSet};
use crate::weyl::{RootVector, WeylWord};

pub use linalg::{Matrix, Rational};

/// Default bound on Coxeter-functor iterations when testing preprojectivity.
pub const DEFAULT_MAX_ITER: usize = 64;

/// A representation: a space `k^{dims[v-1]}` at each vertex and, for arrow
/// `a: s -> e`, a `dims(e) x dims(s)` matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct Representation {
    quiver: Arc<Quiver>,
    dims: Vec<usize>,
    maps: Vec<Matrix>,
}

impl Representation {
    pub fn new(quiver: Arc<Quiver>, dims: Vec<usize>, maps: Vec<Matrix>) -> Result<Self> {
        if dims.len() != quiver.n() {
            return Err(Error::DimensionMismatch(format!(
                "{} dimensions for {} vertices",
                dims.len(),
                quiver.n()
            )));
        }
        if maps.len() != quiver.arrows().len() {
            return Err(Error::DimensionMismatch(format!(
                "{} maps for {} arrows",
                maps.len(),
                quiver.arrows().len()
            )));
        }
        for (k, (&(s, e), m)) in quiver.arrows().iter().zip(&maps).enumerate() {
            if m.rows() != dims[e - 1] || m.cols() != dims[s - 1] {
                return Err(Error::DimensionMismatch(format!(
                    "arrow {k} ({s}->{e}) needs a {}x{} matrix, got {}x{}",
                    dims[e - 1],
                    dims[s - 1],
                    m.rows(),
                    m.cols()
                )));
            }
        }
        Ok(Representation { quiver, dims, maps })
    }

    pub fn zero(quiver: Arc<Quiver>) -> Self {
        let dims = vec![0; quiver.n()];
        let maps = vec![Matrix::zeros(0, 0); quiver.arrows().len()];
        Representation { quiver, dims, maps }
    }

    /// The simple module `L_x`.
    pub fn simple(quiver: Arc<Quiver>, x: usize) -> Result<Self> {
        quiver.check_vertex(x)?;
        let mut dims = vec![0; quiver.n()];
        dims[x - 1] = 1;
        let maps = quiver
            .arrows()
            .iter()
            .map(|&(s, e)| Matrix::zeros(dims[e - 1], dims[s - 1]))
            .collect();
        Ok(Representation { quiver, dims, maps })
    }

    pub fn quiver(&self) -> &Arc<Quiver> {
        &self.quiver
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    pub fn maps(&self) -> &[Matrix] {
        &self.maps
    }

    pub fn dim_vector(&self) -> RootVector {
        RootVector::from_i64(&self.dims.iter().map(|&d| d as i64).collect::<Vec<_>>())
    }

    pub fn is_zero(&self) -> bool {
        self.dims.iter().all(|&d| d == 0)
    }

    pub fn support(&self) -> VertexSet {
        (1..=self.dims.len()).filter(|&v| self.dims[v - 1] > 0).collect()
    }

    /// `F_x^+`: at the sink `x` the new space is the kernel of
    /// `h: ⊕ V(y_i) -> V(x)`, and the reversed arrows carry the components
    /// of the kernel inclusion.
    pub fn reflect_plus(&self, x: usize) -> Result<Representation> {
        self.quiver.check_vertex(x)?;
        if !self.quiver.is_sink(x) {
            return Err(Error::NotASink(x));
        }
        let incoming = self.quiver.arrows_into(x);
        let blocks: Vec<&Matrix> = incoming.iter().map(|&k| &self.maps[k]).collect();
        let h = Matrix::hstack(self.dims[x - 1], &blocks);
        let inclusion = h.kernel();
        let new_dim = inclusion.cols();

        let quiver = Arc::new(self.quiver.reflect_unchecked(x));
        let mut dims = self.dims.clone();
        dims[x - 1] = new_dim;
        let mut maps = self.maps.clone();
        let mut offset = 0;
        for &k in &incoming {
            let y = self.quiver.arrows()[k].0;
            maps[k] = inclusion.row_block(offset, self.dims[y - 1]);
            offset += self.dims[y - 1];
        }
        Ok(Representation { quiver, dims, maps })
    }

    /// `F_x^-`: at the source `x` the new space is the cokernel of
    /// `h': V(x) -> ⊕ V(y_i)`, and the reversed arrows carry the components
    /// of the quotient map.
    pub fn reflect_minus(&self, x: usize) -> Result<Representation> {
        self.quiver.check_vertex(x)?;
        if !self.quiver.is_source(x) {
            return Err(Error::NotASource(x));
        }
        let outgoing = self.quiver.arrows_out_of(x);
        let blocks: Vec<&Matrix> = outgoing.iter().map(|&k| &self.maps[k]).collect();
        let h = Matrix::vstack(self.dims[x - 1], &blocks);
        let quotient = h.cokernel();
        let new_dim = quotient.rows();

        let quiver = Arc::new(self.quiver.reflect_unchecked(x));
        let mut dims = self.dims.clone();
        dims[x - 1] = new_dim;
        let mut maps = self.maps.clone();
        let mut offset = 0;
        for &k in &outgoing {
            let y = self.quiver.arrows()[k].1;
            maps[k] = quotient.column_block(offset, self.dims[y - 1]);
            offset += self.dims[y - 1];
        }
        Ok(Representation { quiver, dims, maps })
    }

    /// `F(S) = F_{x_s}^+ ... F_{x_1}^+`.
    pub fn apply_sequence(&self, seq: &AdmissibleSeq) -> Result<Representation> {
        if **seq.quiver() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        seq.letters().iter().try_fold(self.clone(), |m, &x| m.reflect_plus(x))
    }

    /// Like [`Representation::apply_sequence`] but keeps every intermediate
    /// representation, starting with `self`.
    pub fn trace_sequence(&self, seq: &AdmissibleSeq) -> Result<Vec<Representation>> {
        if **seq.quiver() != *self.quiver {
            return Err(Error::QuiverMismatch);
        }
        let mut out = vec![self.clone()];
        for &x in seq.letters() {
            let next = out.last().expect("nonempty").reflect_plus(x)?;
            out.push(next);
        }
        Ok(out)
    }

    pub fn annihilated_by(&self, seq: &AdmissibleSeq) -> Result<bool> {
        Ok(self.apply_sequence(seq)?.is_zero())
    }

    /// `Φ^+`, computed along the smallest-sink-first complete sequence.
    pub fn coxeter_plus(&self) -> Representation {
        let k = canonical_complete(&self.quiver);
        self.apply_sequence(&k).expect("complete sequence is admissible on its own base")
    }

    /// Least `m` with `(Φ^+)^m M = 0`, if one is found within `max_iter`
    /// steps.
    pub fn is_preprojective(&self, max_iter: usize) -> Preprojectivity {
        let mut current = self.clone();
        for m in 0..=max_iter {
            if current.is_zero() {
                return Preprojectivity::Preprojective(m);
            }
            if m < max_iter {
                current = current.coxeter_plus();
            }
        }
        Preprojectivity::Undecided
    }

    /// Block sum of representations on one quiver.
    pub fn direct_sum(reps: &[Representation]) -> Result<Representation> {
        let first = reps.first().ok_or_else(|| Error::Parse("direct sum of nothing".into()))?;
        if reps.iter().any(|r| r.quiver != first.quiver && *r.quiver != *first.quiver) {
            return Err(Error::QuiverMismatch);
        }
        let n = first.quiver.n();
        let dims = (0..n).map(|v| reps.iter().map(|r| r.dims[v]).sum()).collect();
        let maps = (0..first.maps.len())
            .map(|k| Matrix::block_diagonal(&reps.iter().map(|r| &r.maps[k]).collect::<Vec<_>>()))
            .collect();
        Ok(Representation { quiver: Arc::clone(&first.quiver), dims, maps })
    }
}

/// Outcome of [`Representation::is_preprojective`].
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Preprojectivity {
    Preprojective(usize),
    Undecided,
}

/// `dim P_x` for every vertex `x`: `dim P_x(z)` counts paths `x -> z`.
pub fn projective_dims(quiver: &Quiver) -> Vec<Vec<usize>> {
    (1..=quiver.n())
        .map(|x| quiver.path_counts_from(x).into_iter().map(|c| c as usize).collect())
        .collect()
}

/// `M(S) = F_{x_1}^- ... F_{x_{s-1}}^-(L_{x_s})`, with `L_{x_s}` simple
/// projective on `σ_{x_{s-1}} ... σ_{x_1} Λ`. Requires `w(S)` reduced.
pub fn build_m(seq: &AdmissibleSeq) -> Result<Representation> {
    if seq.is_empty() {
        return Err(Error::EmptySequence);
    }
    let graph = seq.quiver().graph();
    if !WeylWord::of_sequence(seq).is_reduced(graph)? {
        return Err(Error::NotReduced);
    }
    let letters = seq.letters();
    let s = letters.len();
    let mut top = (**seq.quiver()).clone();
    for &x in &letters[..s - 1] {
        top = top.reflect_unchecked(x);
    }
    let mut m = Representation::simple(Arc::new(top), letters[s - 1])?;
    for &x in letters[..s - 1].iter().rev() {
        m = m.reflect_minus(x)?;
    }
    // Share the caller's base quiver.
    let m = Representation { quiver: Arc::clone(seq.quiver()), ..m };
    if !m.annihilated_by(seq)? {
        return Err(Error::Inconsistent(format!("M({seq}) is not annihilated by {seq}")));
    }
    Ok(m)
}

/// `M(S)` for an arbitrary sequence with reduced word: the direct sum of
/// `M(S_{h,v})` over the principal join decomposition.
pub fn build_m_decomposed(seq: &AdmissibleSeq) -> Result<Representation> {
    if seq.is_empty() {
        return Ok(Representation::zero(Arc::clone(seq.quiver())));
    }
    let parts = seq
        .principal_decomposition()?
        .into_iter()
        .map(|(h, v)| build_m(&AdmissibleSeq::principal(seq.quiver(), h, v)?))
        .collect::<Result<Vec<_>>>()?;
    Representation::direct_sum(&parts)
}

/// `S_M` for an indecomposable preprojective `M` (asserted by the caller):
/// if `(Φ^+)^ν M` is the last nonzero iterate, it is the projective `P_x`
/// and `S_M = S_{ν+1, x}`.
pub fn shortest_annihilator_indec(m: &Representation, max_iter: usize) -> Result<AdmissibleSeq> {
    if m.is_zero() {
        return Ok(AdmissibleSeq::empty(Arc::clone(&m.quiver)));
    }
    let mut last = m.clone();
    let mut nu = 0;
    loop {
        let next = last.coxeter_plus();
        if next.is_zero() {
            break;
        }
        nu += 1;
        if nu >= max_iter {
            return Err(Error::Undecided(max_iter));
        }
        last = next;
    }
    let projectives = projective_dims(&m.quiver);
    let x = (1..=m.quiver.n())
        .find(|&x| projectives[x - 1] == last.dims)
        .ok_or_else(|| Error::NoProjectiveMatch(format!("{:?}", last.dims)))?;
    let seq = AdmissibleSeq::principal(&m.quiver, nu + 1, x)?;
    if !m.annihilated_by(&seq)? {
        return Err(Error::Inconsistent(format!("S_({},{x}) does not annihilate the module", nu + 1)));
    }
    Ok(seq)
}

/// `S_M` by exhaustive search below a known annihilator `bound`: among all
/// valid multiplicity vectors dominated by `m_bound`, the annihilating ones
/// must have a unique minimum.
pub fn shortest_annihilator_bruteforce(m: &Representation, bound: &AdmissibleSeq) -> Result<AdmissibleSeq> {
    if !m.annihilated_by(bound)? {
        return Err(Error::NotAnnihilating);
    }
    let top = bound.multiplicities();
    let n = top.n();
    let mut killers: Vec<MultVector> = Vec::new();
    let mut counts = vec![0u32; n];
    loop {
        let mv = MultVector::new(counts.clone());
        if let Ok(seq) = AdmissibleSeq::from_multiplicities(&m.quiver, &mv) {
            if m.annihilated_by(&seq)? {
                killers.push(mv);
            }
        }
        // Odometer over the box below `top`.
        let mut i = 0;
        while i < n && counts[i] == top.as_slice()[i] {
            counts[i] = 0;
            i += 1;
        }
        if i == n {
            break;
        }
        counts[i] += 1;
    }
    let minima: Vec<&MultVector> = killers
        .iter()
        .filter(|a| !killers.iter().any(|b| b != *a && b.dominated_by(a)))
        .collect();
    match minima.as_slice() {
        [only] if killers.iter().all(|k| only.dominated_by(k)) => {
            AdmissibleSeq::from_multiplicities(&m.quiver, only)
        }
        _ => Err(Error::Inconsistent(format!("annihilators have minima {minima:?}"))),
    }
}

/// `S_{M_1 ⊕ ... ⊕ M_t} = S_{M_1} ∨ ... ∨ S_{M_t}`.
pub fn join_annihilators(seqs: &[AdmissibleSeq]) -> Result<AdmissibleSeq> {
    let (first, rest) = seqs.split_first().ok_or(Error::EmptySequence)?;
    rest.iter().try_fold(first.clone(), |acc, s| acc.join(s))
}
