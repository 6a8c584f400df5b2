//! Graphs, symmetric Cartan matrices, acyclic orientations and the vertex
//! poset of a quiver.
//!
//! Vertices are the ids `1..=n`. Sets of vertices are bitmasks, so graphs are
//! limited to 64 vertices.

use std::fmt;

use crate::error::{Error, Result};

pub const MAX_VERTICES: usize = 64;

/// A set of vertices stored as a bitmask (bit `v - 1` for vertex `v`).
#[derive(Clone, Copy, Default, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct VertexSet(u64);

impl VertexSet {
    pub const EMPTY: VertexSet = VertexSet(0);

    pub fn from_bits(bits: u64) -> Self {
        VertexSet(bits)
    }

    pub fn bits(self) -> u64 {
        self.0
    }

    pub fn singleton(v: usize) -> Self {
        VertexSet(1 << (v - 1))
    }

    /// All of `1..=n`.
    pub fn full(n: usize) -> Self {
        if n >= 64 {
            VertexSet(u64::MAX)
        } else {
            VertexSet((1u64 << n) - 1)
        }
    }

    pub fn contains(self, v: usize) -> bool {
        (1..=64).contains(&v) && self.0 & (1 << (v - 1)) != 0
    }

    pub fn insert(&mut self, v: usize) {
        self.0 |= 1 << (v - 1);
    }

    pub fn remove(&mut self, v: usize) {
        self.0 &= !(1 << (v - 1));
    }

    pub fn union(self, other: Self) -> Self {
        VertexSet(self.0 | other.0)
    }

    pub fn intersection(self, other: Self) -> Self {
        VertexSet(self.0 & other.0)
    }

    pub fn difference(self, other: Self) -> Self {
        VertexSet(self.0 & !other.0)
    }

    pub fn is_subset(self, other: Self) -> bool {
        self.0 & !other.0 == 0
    }

    pub fn is_empty(self) -> bool {
        self.0 == 0
    }

    pub fn len(self) -> usize {
        self.0.count_ones() as usize
    }

    /// Smallest vertex id in the set.
    pub fn first(self) -> Option<usize> {
        (self.0 != 0).then(|| self.0.trailing_zeros() as usize + 1)
    }

    /// Vertices in increasing order.
    pub fn iter(self) -> impl Iterator<Item = usize> {
        let mut bits = self.0;
        std::iter::from_fn(move || {
            if bits == 0 {
                return None;
            }
            let v = bits.trailing_zeros() as usize + 1;
            bits &= bits - 1;
            Some(v)
        })
    }
}

impl FromIterator<usize> for VertexSet {
    fn from_iter<I: IntoIterator<Item = usize>>(iter: I) -> Self {
        let mut s = VertexSet::EMPTY;
        for v in iter {
            s.insert(v);
        }
        s
    }
}

impl fmt::Debug for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for VertexSet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (i, v) in self.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{v}")?;
        }
        write!(f, "}}")
    }
}

/// A finite connected loop-free multigraph on `1..=n`, `n >= 2`.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    n: usize,
    /// Row-major `n * n` symmetric multiplicity table with zero diagonal.
    mult: Vec<u32>,
}

impl Graph {
    /// Builds a graph from a symmetric multiplicity table (0-based rows).
    pub fn from_multiplicities(mult: &[Vec<u32>]) -> Result<Self> {
        let n = mult.len();
        if n < 2 {
            return Err(Error::InvalidGraph("need at least two vertices".into()));
        }
        if n > MAX_VERTICES {
            return Err(Error::InvalidGraph(format!("at most {MAX_VERTICES} vertices supported")));
        }
        let mut flat = Vec::with_capacity(n * n);
        for (i, row) in mult.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidGraph(format!("row {} has length {}", i + 1, row.len())));
            }
            for (j, &m) in row.iter().enumerate() {
                if i == j && m != 0 {
                    return Err(Error::InvalidGraph(format!("loop at vertex {}", i + 1)));
                }
                if mult[j][i] != m {
                    return Err(Error::InvalidGraph(format!(
                        "multiplicity of {{{},{}}} is not symmetric",
                        i + 1,
                        j + 1
                    )));
                }
                flat.push(m);
            }
        }
        let g = Graph { n, mult: flat };
        if !g.is_connected() {
            return Err(Error::Decomposable);
        }
        Ok(g)
    }

    /// Builds a graph from a list of (unordered) edges; repeated pairs add
    /// multiplicity.
    pub fn from_edges(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let mut mult = vec![vec![0u32; n]; n];
        for &(u, v) in edges {
            for w in [u, v] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange(w));
                }
            }
            if u == v {
                return Err(Error::InvalidGraph(format!("loop at vertex {u}")));
            }
            mult[u - 1][v - 1] += 1;
            mult[v - 1][u - 1] += 1;
        }
        Self::from_multiplicities(&mult)
    }

    /// Reads the graph off a symmetric generalized Cartan matrix: `-a_ij`
    /// edges join `i` and `j`.
    pub fn from_cartan(a: &[Vec<i64>]) -> Result<Self> {
        let n = a.len();
        for (i, row) in a.iter().enumerate() {
            if row.len() != n {
                return Err(Error::InvalidCartan(format!("row {} has length {}", i + 1, row.len())));
            }
            if row[i] != 2 {
                return Err(Error::InvalidCartan(format!("a_{0}{0} = {1}, expected 2", i + 1, row[i])));
            }
            for (j, &x) in row.iter().enumerate() {
                if i != j && x > 0 {
                    return Err(Error::InvalidCartan(format!(
                        "a_{}{} = {x} is positive",
                        i + 1,
                        j + 1
                    )));
                }
                if a[j][i] != x {
                    return Err(Error::InvalidCartan(format!(
                        "a_{0}{1} != a_{1}{0}",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        let mult: Vec<Vec<u32>> = a
            .iter()
            .enumerate()
            .map(|(i, row)| {
                row.iter()
                    .enumerate()
                    .map(|(j, &x)| if i == j { 0 } else { (-x) as u32 })
                    .collect()
            })
            .collect();
        match Self::from_multiplicities(&mult) {
            Err(Error::InvalidGraph(msg)) => Err(Error::InvalidCartan(msg)),
            other => other,
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn edge_mult(&self, u: usize, v: usize) -> u32 {
        self.mult[(u - 1) * self.n + (v - 1)]
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        (1..=self.n)
            .map(|i| {
                (1..=self.n)
                    .map(|j| if i == j { 2 } else { -(self.edge_mult(i, j) as i64) })
                    .collect()
            })
            .collect()
    }

    pub fn vertices(&self) -> VertexSet {
        VertexSet::full(self.n)
    }

    pub fn neighbors(&self, v: usize) -> VertexSet {
        (1..=self.n).filter(|&u| self.edge_mult(u, v) > 0).collect()
    }

    pub fn adjacent(&self, u: usize, v: usize) -> bool {
        u != v && self.edge_mult(u, v) > 0
    }

    /// Number of edges counted with multiplicity.
    pub fn edge_count(&self) -> usize {
        self.mult.iter().map(|&m| m as usize).sum::<usize>() / 2
    }

    /// Unordered edge instances `(u, v)` with `u < v`, in lexicographic order.
    pub fn edge_instances(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for u in 1..=self.n {
            for v in u + 1..=self.n {
                for _ in 0..self.edge_mult(u, v) {
                    out.push((u, v));
                }
            }
        }
        out
    }

    fn is_connected(&self) -> bool {
        let mut seen = VertexSet::singleton(1);
        let mut stack = vec![1];
        while let Some(v) = stack.pop() {
            for u in self.neighbors(v).iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen == self.vertices()
    }

    /// Every acyclic orientation of the graph. Parallel edges are oriented
    /// alike (opposite parallel arrows would form a 2-cycle).
    pub fn acyclic_orientations(&self) -> Vec<Quiver> {
        let pairs: Vec<(usize, usize)> = (1..=self.n)
            .flat_map(|u| (u + 1..=self.n).map(move |v| (u, v)))
            .filter(|&(u, v)| self.edge_mult(u, v) > 0)
            .collect();
        let mut out = Vec::new();
        for mask in 0u64..(1u64 << pairs.len()) {
            let mut arrows = Vec::new();
            for (k, &(u, v)) in pairs.iter().enumerate() {
                let arrow = if mask & (1 << k) == 0 { (u, v) } else { (v, u) };
                for _ in 0..self.edge_mult(u, v) {
                    arrows.push(arrow);
                }
            }
            if let Ok(q) = Quiver::new(self.clone(), arrows) {
                out.push(q);
            }
        }
        out
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph").field("n", &self.n).field("edges", &self.edge_instances()).finish()
    }
}

/// A graph with an acyclic orientation. Arrow `k` of the quiver is an
/// orientation of one edge instance; reflections keep arrow indices stable,
/// so parallel arrows stay distinguishable.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Quiver {
    graph: Graph,
    arrows: Vec<(usize, usize)>,
    /// Direct successors of each vertex (index `v - 1`).
    succ: Vec<VertexSet>,
}

impl Quiver {
    /// Validates that `arrows` orient every edge instance of `graph` exactly
    /// once and that the result has no oriented cycle.
    pub fn new(graph: Graph, arrows: Vec<(usize, usize)>) -> Result<Self> {
        let n = graph.n();
        let mut count = vec![0u32; n * n];
        for &(s, e) in &arrows {
            for w in [s, e] {
                if w == 0 || w > n {
                    return Err(Error::VertexOutOfRange(w));
                }
            }
            if s == e {
                return Err(Error::OrientationMismatch(format!("loop at vertex {s}")));
            }
            count[(s - 1) * n + (e - 1)] += 1;
            count[(e - 1) * n + (s - 1)] += 1;
        }
        for u in 1..=n {
            for v in u + 1..=n {
                let got = count[(u - 1) * n + (v - 1)];
                if got != graph.edge_mult(u, v) {
                    return Err(Error::OrientationMismatch(format!(
                        "edge {{{u},{v}}} has multiplicity {} but {got} arrows",
                        graph.edge_mult(u, v)
                    )));
                }
            }
        }
        let q = Self::unchecked(graph, arrows);
        if !q.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(q)
    }

    /// Builds the quiver whose arrows determine both edges and orientation.
    pub fn from_arrows(n: usize, arrows: &[(usize, usize)]) -> Result<Self> {
        let graph = Graph::from_edges(n, arrows)?;
        Self::new(graph, arrows.to_vec())
    }

    fn unchecked(graph: Graph, arrows: Vec<(usize, usize)>) -> Self {
        let mut succ = vec![VertexSet::EMPTY; graph.n()];
        for &(s, e) in &arrows {
            succ[s - 1].insert(e);
        }
        Quiver { graph, arrows, succ }
    }

    fn is_acyclic(&self) -> bool {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for &(_, e) in &self.arrows {
            indeg[e - 1] += 1;
        }
        let mut stack: Vec<usize> = (1..=n).filter(|&v| indeg[v - 1] == 0).collect();
        let mut seen = 0;
        while let Some(v) = stack.pop() {
            seen += 1;
            for &(s, e) in &self.arrows {
                if s == v {
                    indeg[e - 1] -= 1;
                    if indeg[e - 1] == 0 {
                        stack.push(e);
                    }
                }
            }
        }
        seen == n
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn n(&self) -> usize {
        self.graph.n()
    }

    pub fn arrows(&self) -> &[(usize, usize)] {
        &self.arrows
    }

    pub fn cartan(&self) -> Vec<Vec<i64>> {
        self.graph.cartan()
    }

    pub fn vertices(&self) -> VertexSet {
        self.graph.vertices()
    }

    pub fn check_vertex(&self, v: usize) -> Result<()> {
        if v == 0 || v > self.n() {
            Err(Error::VertexOutOfRange(v))
        } else {
            Ok(())
        }
    }

    pub fn is_sink(&self, x: usize) -> bool {
        self.succ[x - 1].is_empty()
    }

    pub fn is_source(&self, x: usize) -> bool {
        self.arrows.iter().all(|&(_, e)| e != x)
    }

    /// Vertices with no outgoing arrow.
    pub fn sinks(&self) -> VertexSet {
        (1..=self.n()).filter(|&v| self.is_sink(v)).collect()
    }

    /// Vertices with no incoming arrow.
    pub fn sources(&self) -> VertexSet {
        (1..=self.n()).filter(|&v| self.is_source(v)).collect()
    }

    /// Reverses every arrow incident with `x`. Fails only if the result has
    /// an oriented cycle, which needs `x` to be neither a sink nor a source.
    pub fn reflect(&self, x: usize) -> Result<Quiver> {
        self.check_vertex(x)?;
        let q = self.reflect_unchecked(x);
        if !(self.is_sink(x) || self.is_source(x)) && !q.is_acyclic() {
            return Err(Error::Cyclic);
        }
        Ok(q)
    }

    pub(crate) fn reflect_unchecked(&self, x: usize) -> Quiver {
        let arrows = self
            .arrows
            .iter()
            .map(|&(s, e)| if s == x || e == x { (e, s) } else { (s, e) })
            .collect();
        Self::unchecked(self.graph.clone(), arrows)
    }

    /// Indices of the arrows ending at `x`.
    pub fn arrows_into(&self, x: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].1 == x).collect()
    }

    /// Indices of the arrows starting at `x`.
    pub fn arrows_out_of(&self, x: usize) -> Vec<usize> {
        (0..self.arrows.len()).filter(|&k| self.arrows[k].0 == x).collect()
    }

    /// `u <= v` in the vertex poset: there is a path from `u` to `v`.
    pub fn leq(&self, u: usize, v: usize) -> bool {
        self.principal_filter(u).contains(v)
    }

    /// Smallest upward-closed set containing `set`.
    pub fn up_closure(&self, set: VertexSet) -> VertexSet {
        let mut seen = set;
        let mut stack: Vec<usize> = set.iter().collect();
        while let Some(v) = stack.pop() {
            for u in self.succ[v - 1].iter() {
                if !seen.contains(u) {
                    seen.insert(u);
                    stack.push(u);
                }
            }
        }
        seen
    }

    /// `<x>`: every vertex reachable from `x`.
    pub fn principal_filter(&self, x: usize) -> VertexSet {
        self.up_closure(VertexSet::singleton(x))
    }

    pub fn is_filter(&self, set: VertexSet) -> bool {
        self.up_closure(set) == set
    }

    /// Smallest filter containing `filter` and every neighbour of it.
    pub fn hull(&self, filter: VertexSet) -> Result<VertexSet> {
        if !self.is_filter(filter) {
            return Err(Error::NotAFilter(filter.to_string()));
        }
        Ok(self.hull_unchecked(filter))
    }

    pub(crate) fn hull_unchecked(&self, filter: VertexSet) -> VertexSet {
        let mut grown = filter;
        for v in filter.iter() {
            grown = grown.union(self.graph.neighbors(v));
        }
        self.up_closure(grown)
    }

    /// Minimal elements of `set` in the vertex poset.
    pub fn minimal_elements(&self, set: VertexSet) -> VertexSet {
        set.iter()
            .filter(|&v| set.iter().all(|u| u == v || !self.leq(u, v)))
            .collect()
    }

    /// Number of paths from `x` to each vertex (index `z - 1`).
    pub fn path_counts_from(&self, x: usize) -> Vec<u64> {
        let order = self.topological_order();
        let mut count = vec![0u64; self.n()];
        count[x - 1] = 1;
        for &v in &order {
            let c = count[v - 1];
            if c == 0 {
                continue;
            }
            for &(s, e) in &self.arrows {
                if s == v {
                    count[e - 1] += c;
                }
            }
        }
        count
    }

    /// Vertices ordered so that every arrow goes forward.
    pub fn topological_order(&self) -> Vec<usize> {
        let n = self.n();
        let mut indeg = vec![0usize; n];
        for &(_, e) in &self.arrows {
            indeg[e - 1] += 1;
        }
        let mut ready: Vec<usize> = (1..=n).rev().filter(|&v| indeg[v - 1] == 0).collect();
        let mut order = Vec::with_capacity(n);
        while let Some(v) = ready.pop() {
            order.push(v);
            for &(s, e) in &self.arrows {
                if s == v {
                    indeg[e - 1] -= 1;
                    if indeg[e - 1] == 0 {
                        ready.push(e);
                    }
                }
            }
        }
        order
    }
}

impl fmt::Debug for Quiver {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Quiver").field("n", &self.n()).field("arrows", &self.arrows).finish()
    }
}
