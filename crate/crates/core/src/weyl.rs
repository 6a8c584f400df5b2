//! The Weyl group of a symmetric generalized Cartan matrix acting on the root
//! lattice `Z^n`, reduced words, Coxeter elements and c-sorting words.
//!
//! A word `x_1, ..., x_s` always denotes `σ_{x_s} ∘ ... ∘ σ_{x_1}`: the first
//! letter acts first. Lengths and reducedness come from the sign of roots, so
//! nothing here enumerates the group and infinite types work unchanged.

use std::fmt;
use std::ops::Mul;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::admissible::AdmissibleSeq;
use crate::error::{Error, Result};
use crate::graph::{Graph, VertexSet};

/// An element of the root lattice, indexed by vertices (index `v - 1`).
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct RootVector(Vec<BigInt>);

impl RootVector {
    pub fn new(coords: Vec<BigInt>) -> Self {
        RootVector(coords)
    }

    pub fn from_i64(coords: &[i64]) -> Self {
        RootVector(coords.iter().map(|&c| BigInt::from(c)).collect())
    }

    /// The simple root `e_v`.
    pub fn simple(n: usize, v: usize) -> Self {
        let mut c = vec![BigInt::zero(); n];
        c[v - 1] = BigInt::one();
        RootVector(c)
    }

    pub fn n(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[BigInt] {
        &self.0
    }

    pub fn get(&self, v: usize) -> &BigInt {
        &self.0[v - 1]
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|c| c.is_zero())
    }

    /// Nonzero with every coordinate `>= 0`.
    pub fn is_positive(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|c| !c.is_negative())
    }

    /// Nonzero with every coordinate `<= 0`.
    pub fn is_negative(&self) -> bool {
        !self.is_zero() && self.0.iter().all(|c| !c.is_positive())
    }

    /// `σ_i(v) = v - <row i of A, v> e_i`, in place.
    pub fn reflect(&mut self, graph: &Graph, i: usize) {
        let mut pairing = &self.0[i - 1] * 2;
        for j in 1..=graph.n() {
            let m = graph.edge_mult(i, j);
            if m > 0 {
                pairing -= &self.0[j - 1] * m;
            }
        }
        self.0[i - 1] -= pairing;
    }

    /// Coordinates as `i64`, if they all fit.
    pub fn to_i64(&self) -> Option<Vec<i64>> {
        self.0.iter().map(|c| i64::try_from(c).ok()).collect()
    }
}

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{c}")?;
        }
        write!(f, ")")
    }
}

/// A word in the simple reflections; `letters[0]` acts first.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct WeylWord {
    letters: Vec<usize>,
}

impl WeylWord {
    pub fn new(letters: Vec<usize>) -> Self {
        WeylWord { letters }
    }

    /// `w(S) = σ_{x_s} ... σ_{x_1}` for `S = x_1, ..., x_s`.
    pub fn of_sequence(seq: &AdmissibleSeq) -> Self {
        WeylWord { letters: seq.letters().to_vec() }
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

    fn check(&self, graph: &Graph) -> Result<()> {
        match self.letters.iter().find(|&&x| x == 0 || x > graph.n()) {
            Some(&x) => Err(Error::VertexOutOfRange(x)),
            None => Ok(()),
        }
    }

    /// The group element: the product of simple reflections with the first
    /// letter applied first.
    pub fn evaluate(&self, graph: &Graph) -> Result<WeylElement> {
        self.check(graph)?;
        let mut e = WeylElement::identity(graph.n());
        for &x in &self.letters {
            e.left_mul_simple(graph, x);
        }
        Ok(e)
    }

    /// Whether the word has length equal to its number of letters. Appending
    /// `σ_x` to `u` raises the length iff `u^{-1}(e_x) > 0`.
    pub fn is_reduced(&self, graph: &Graph) -> Result<bool> {
        self.check(graph)?;
        let mut inverse = WeylElement::identity(graph.n());
        for &x in &self.letters {
            if !inverse.column(x).is_positive() {
                return Ok(false);
            }
            inverse.right_mul_simple(graph, x);
        }
        Ok(true)
    }

    /// The word read backwards; it evaluates to the inverse element.
    pub fn reversed(&self) -> WeylWord {
        WeylWord { letters: self.letters.iter().rev().copied().collect() }
    }

    /// `self` repeated `m` times.
    pub fn power(&self, m: usize) -> WeylWord {
        WeylWord { letters: self.letters.repeat(m) }
    }

    /// Conventional product notation, leftmost factor acting last.
    pub fn product_notation(&self) -> String {
        if self.letters.is_empty() {
            return "1".into();
        }
        self.letters.iter().rev().map(|x| format!("s{x}")).collect::<Vec<_>>().join(" ")
    }
}

impl fmt::Debug for WeylWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for WeylWord {
    /// Letters in action order, comma separated.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s: Vec<String> = self.letters.iter().map(|x| x.to_string()).collect();
        write!(f, "{}", s.join(","))
    }
}

/// An element of the Weyl group as an integer matrix acting on column
/// vectors. Only products of simple reflections can be built.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct WeylElement {
    n: usize,
    /// Row-major.
    m: Vec<BigInt>,
}

impl WeylElement {
    pub fn identity(n: usize) -> Self {
        let mut m = vec![BigInt::zero(); n * n];
        for i in 0..n {
            m[i * n + i] = BigInt::one();
        }
        WeylElement { n, m }
    }

    /// `σ_i(e_j) = e_j - a_ij e_i`.
    pub fn simple_reflection(graph: &Graph, i: usize) -> Result<Self> {
        if i == 0 || i > graph.n() {
            return Err(Error::VertexOutOfRange(i));
        }
        let mut e = Self::identity(graph.n());
        e.left_mul_simple(graph, i);
        Ok(e)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn entry(&self, row: usize, col: usize) -> &BigInt {
        &self.m[(row - 1) * self.n + (col - 1)]
    }

    pub fn rows(&self) -> Vec<Vec<BigInt>> {
        self.m.chunks(self.n).map(|r| r.to_vec()).collect()
    }

    pub fn is_identity(&self) -> bool {
        *self == Self::identity(self.n)
    }

    /// Image of the simple root `e_j`.
    pub fn column(&self, j: usize) -> RootVector {
        RootVector((0..self.n).map(|r| self.m[r * self.n + (j - 1)].clone()).collect())
    }

    pub fn apply(&self, v: &RootVector) -> Result<RootVector> {
        if v.n() != self.n {
            return Err(Error::DimensionMismatch(format!(
                "vector of length {} for a {}x{} matrix",
                v.n(),
                self.n,
                self.n
            )));
        }
        Ok(RootVector(
            self.m
                .chunks(self.n)
                .map(|row| row.iter().zip(&v.0).map(|(a, b)| a * b).sum())
                .collect(),
        ))
    }

    /// `self <- σ_i self`. Only row `i` changes.
    pub(crate) fn left_mul_simple(&mut self, graph: &Graph, i: usize) {
        let n = self.n;
        for c in 0..n {
            let mut val = -&self.m[(i - 1) * n + c];
            for j in 1..=n {
                let mult = graph.edge_mult(i, j);
                if mult > 0 {
                    val += &self.m[(j - 1) * n + c] * mult;
                }
            }
            self.m[(i - 1) * n + c] = val;
        }
    }

    /// `self <- self σ_i`. Column `i` is negated and every column `c`
    /// adjacent to `i` gains `-a_ic` times the old column `i`.
    pub(crate) fn right_mul_simple(&mut self, graph: &Graph, i: usize) {
        let n = self.n;
        for r in 0..n {
            let old = self.m[r * n + (i - 1)].clone();
            if old.is_zero() {
                continue;
            }
            for c in 1..=n {
                let mult = graph.edge_mult(i, c);
                if mult > 0 {
                    self.m[r * n + (c - 1)] += &old * mult;
                }
            }
            self.m[r * n + (i - 1)] = -old;
        }
    }

    /// A reduced word for `self`, found by peeling right descents
    /// (`w(e_j) < 0`) in order of smallest vertex id.
    pub fn reduced_word(&self, graph: &Graph) -> WeylWord {
        let mut current = self.clone();
        let mut peeled = Vec::new();
        'outer: loop {
            for j in 1..=self.n {
                if current.column(j).is_negative() {
                    current.right_mul_simple(graph, j);
                    peeled.push(j);
                    continue 'outer;
                }
            }
            break;
        }
        // self σ_{j1} ... σ_{jk} = 1, so self = σ_{jk} ... σ_{j1}.
        WeylWord { letters: peeled }
    }

    pub fn length(&self, graph: &Graph) -> usize {
        self.reduced_word(graph).len()
    }

    pub fn inverse(&self, graph: &Graph) -> WeylElement {
        self.reduced_word(graph)
            .reversed()
            .evaluate(graph)
            .expect("peeled letters are vertices")
    }

    /// Whether `mᵀ A m = A`.
    pub fn preserves_form(&self, graph: &Graph) -> bool {
        let a = graph.cartan();
        let n = self.n;
        for i in 0..n {
            for j in 0..n {
                let mut s = BigInt::zero();
                for (k, row) in a.iter().enumerate() {
                    for (l, &akl) in row.iter().enumerate() {
                        if akl != 0 {
                            s += &self.m[k * n + i] * akl * &self.m[l * n + j];
                        }
                    }
                }
                if s != BigInt::from(a[i][j]) {
                    return false;
                }
            }
        }
        true
    }
}

impl Mul for &WeylElement {
    type Output = WeylElement;

    fn mul(self, rhs: &WeylElement) -> WeylElement {
        assert_eq!(self.n, rhs.n, "Weyl elements of different rank");
        let n = self.n;
        let mut m = vec![BigInt::zero(); n * n];
        for r in 0..n {
            for k in 0..n {
                let a = &self.m[r * n + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..n {
                    m[r * n + c] += a * &rhs.m[k * n + c];
                }
            }
        }
        WeylElement { n, m }
    }
}

impl fmt::Debug for WeylElement {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let rows: Vec<String> = self
            .m
            .chunks(self.n)
            .map(|r| r.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "[[{}]]", rows.join("],["))
    }
}

/// Whether `S_{r,x}` satisfies `σ_{x_i} ... σ_{x_{s-1}}(e_{x_s}) > 0` for all
/// `0 < i < s`; for principal sequences this is equivalent to reducedness.
pub fn principal_reduced_criterion(seq: &AdmissibleSeq) -> Result<bool> {
    if seq.is_principal().is_none() {
        return Err(Error::NotPrincipal);
    }
    let graph = seq.quiver().graph();
    let letters = seq.letters();
    let s = letters.len();
    let mut root = RootVector::simple(graph.n(), letters[s - 1]);
    for &x in letters[..s - 1].iter().rev() {
        root.reflect(graph, x);
        if !root.is_positive() {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The Coxeter element `c = σ_{v_n} ... σ_{v_1}` of a complete sequence
/// `K = v_1, ..., v_n`.
pub fn coxeter_element(k: &AdmissibleSeq) -> Result<WeylWord> {
    if !k.is_complete() {
        return Err(Error::NotComplete);
    }
    Ok(WeylWord::of_sequence(k))
}

/// Whether the Weyl group of the graph is finite, i.e. the graph is a
/// simply laced Dynkin diagram of type A, D or E.
pub fn weyl_is_finite(graph: &Graph) -> bool {
    let n = graph.n();
    let simply_laced = (1..=n).all(|u| (1..=n).all(|v| graph.edge_mult(u, v) <= 1));
    if !simply_laced || graph.edge_count() != n - 1 {
        return false;
    }
    let degree = |v: usize| graph.neighbors(v).len();
    let branch: Vec<usize> = (1..=n).filter(|&v| degree(v) >= 3).collect();
    match branch.as_slice() {
        [] => true,
        [center] if degree(*center) == 3 => {
            let mut arms: Vec<usize> = graph
                .neighbors(*center)
                .iter()
                .map(|start| arm_length(graph, *center, start))
                .collect();
            arms.sort_unstable();
            match arms.as_slice() {
                [1, 1, _] => true,
                [1, 2, r] => *r <= 4,
                _ => false,
            }
        }
        _ => false,
    }
}

/// Number of vertices on the path leaving `center` through `start`.
fn arm_length(graph: &Graph, center: usize, start: usize) -> usize {
    let mut prev = center;
    let mut cur = start;
    let mut len = 1;
    loop {
        let next = graph.neighbors(cur).difference(VertexSet::singleton(prev));
        match next.first() {
            Some(v) if next.len() == 1 => {
                prev = cur;
                cur = v;
                len += 1;
            }
            _ => return len,
        }
    }
}

/// One row of [`coxeter_powers_reduced`].
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CoxeterPower {
    pub m: usize,
    pub reduced: bool,
    /// `ℓ(c^m)`.
    pub length: usize,
}

/// For `0 <= m <= m_max`: whether the word of `K^m` is reduced and the length
/// of `c^m`.
pub fn coxeter_powers_reduced(k: &AdmissibleSeq, m_max: usize) -> Result<Vec<CoxeterPower>> {
    let c = coxeter_element(k)?;
    let graph = k.quiver().graph();
    let n = graph.n();
    let mut out = Vec::with_capacity(m_max + 1);
    for m in 0..=m_max {
        let word = c.power(m);
        let reduced = word.is_reduced(graph)?;
        let length = if reduced { m * n } else { word.evaluate(graph)?.length(graph) };
        out.push(CoxeterPower { m, reduced, length });
    }
    Ok(out)
}

/// A subsequence of `c^∞` split at the dividers between copies of `c`.
#[derive(Clone, PartialEq, Eq)]
pub struct SortingWord {
    /// Letters taken from each copy of `c`, in scan order. Trailing empty
    /// blocks are dropped.
    blocks: Vec<Vec<usize>>,
}

impl SortingWord {
    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_sets(&self) -> Vec<VertexSet> {
        self.blocks.iter().map(|b| b.iter().copied().collect()).collect()
    }

    /// All letters in scan order; their product, read left to right as
    /// written, is the target element.
    pub fn letters(&self) -> Vec<usize> {
        self.blocks.concat()
    }

    /// The same element as a word whose first letter acts first.
    pub fn to_word(&self) -> WeylWord {
        WeylWord::new(self.letters()).reversed()
    }

    /// Whether the blocks decrease weakly under inclusion.
    pub fn is_sortable(&self) -> bool {
        self.block_sets().windows(2).all(|w| w[1].is_subset(w[0]))
    }
}

impl fmt::Debug for SortingWord {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{self}]")
    }
}

impl fmt::Display for SortingWord {
    /// Blocks separated by `" | "`, e.g. `2 | 1`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self
            .blocks
            .iter()
            .map(|b| b.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(","))
            .collect();
        write!(f, "{}", parts.join(" | "))
    }
}

/// The c-sorting word of `target`. `coxeter` is the word `v_1, ..., v_n` of
/// a complete sequence, so `c^∞` scans `v_n, ..., v_1` repeatedly. Each
/// scanned letter is taken when it is a left descent of what remains.
pub fn c_sorting_word(graph: &Graph, coxeter: &WeylWord, target: &WeylElement) -> Result<SortingWord> {
    coxeter.check(graph)?;
    let used: VertexSet = coxeter.letters().iter().copied().collect();
    if coxeter.len() != graph.n() || used.len() != graph.n() {
        return Err(Error::NotComplete);
    }
    if target.n() != graph.n() {
        return Err(Error::DimensionMismatch("target has the wrong rank".into()));
    }
    let scan: Vec<usize> = coxeter.letters().iter().rev().copied().collect();
    // The remaining element is `rest`; we only ever need `rest^{-1}`, whose
    // columns detect left descents.
    let mut rest_inv = target.inverse(graph);
    let mut blocks = Vec::new();
    while !rest_inv.is_identity() {
        let mut block = Vec::new();
        for &v in &scan {
            if rest_inv.column(v).is_negative() {
                block.push(v);
                rest_inv.right_mul_simple(graph, v);
            }
        }
        if block.is_empty() {
            return Err(Error::Inconsistent("no left descent in a full pass of c".into()));
        }
        blocks.push(block);
    }
    Ok(SortingWord { blocks })
}

pub fn is_c_sortable(graph: &Graph, coxeter: &WeylWord, target: &WeylElement) -> Result<bool> {
    Ok(c_sorting_word(graph, coxeter, target)?.is_sortable())
}
