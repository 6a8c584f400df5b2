//! Fixtures and brute-force oracles shared by the integration tests. The
//! oracles avoid the library's multiplicity and root-sign machinery: they
//! work on letter strings, group tables and exhaustive search.

#![allow(dead_code)]

use std::collections::{HashMap, HashSet, VecDeque};
use std::sync::Arc;

use num_bigint::BigInt;
use preproj::admissible::enumerate;
use preproj::weyl::{WeylElement, WeylWord};
use preproj::{AdmissibleSeq, Graph, Quiver};

pub fn q3() -> Arc<Quiver> {
    Arc::new(Quiver::from_arrows(3, &[(1, 2), (2, 3)]).unwrap())
}

pub fn qk() -> Arc<Quiver> {
    Arc::new(Quiver::from_arrows(2, &[(1, 2), (1, 2)]).unwrap())
}

pub fn path_graph(n: usize) -> Graph {
    let edges: Vec<(usize, usize)> = (1..n).map(|i| (i, i + 1)).collect();
    Graph::from_edges(n, &edges).unwrap()
}

pub fn triangle() -> Graph {
    Graph::from_edges(3, &[(1, 2), (2, 3), (1, 3)]).unwrap()
}

pub fn orientations(g: &Graph) -> Vec<Arc<Quiver>> {
    g.acyclic_orientations().into_iter().map(Arc::new).collect()
}

/// Q3, QK, every orientation of the A4 path and of the triangle.
pub fn lattice_fixtures() -> Vec<(String, Arc<Quiver>)> {
    let mut out = vec![("Q3".to_string(), q3()), ("QK".to_string(), qk())];
    for (i, q) in orientations(&path_graph(4)).into_iter().enumerate() {
        out.push((format!("A4#{i}"), q));
    }
    for (i, q) in orientations(&triangle()).into_iter().enumerate() {
        out.push((format!("tri#{i}"), q));
    }
    out
}

/// [`lattice_fixtures`] plus every orientation of the A3 path.
pub fn word_fixtures() -> Vec<(String, Arc<Quiver>)> {
    let mut out = lattice_fixtures();
    for (i, q) in orientations(&path_graph(3)).into_iter().enumerate() {
        out.push((format!("A3#{i}"), q));
    }
    out
}

/// All admissible sequences up to `max_len`, indexed for the oracles.
pub struct Universe {
    pub quiver: Arc<Quiver>,
    pub seqs: Vec<AdmissibleSeq>,
    pub index: HashMap<Vec<usize>, usize>,
    /// Class id of each sequence under the closure of single swaps of
    /// consecutive non-adjacent letters.
    pub class: Vec<usize>,
    /// For each sequence `S`, the classes of all enumerated `SU`.
    pub extensions: Vec<HashSet<usize>>,
}

impl Universe {
    pub fn new(quiver: &Arc<Quiver>, max_len: usize) -> Self {
        let seqs = enumerate(quiver, max_len);
        let index: HashMap<Vec<usize>, usize> =
            seqs.iter().enumerate().map(|(i, s)| (s.letters().to_vec(), i)).collect();

        let mut parent: Vec<usize> = (0..seqs.len()).collect();
        fn find(p: &mut [usize], mut i: usize) -> usize {
            while p[i] != i {
                p[i] = p[p[i]];
                i = p[i];
            }
            i
        }
        let graph = quiver.graph();
        for (i, s) in seqs.iter().enumerate() {
            let l = s.letters();
            for k in 0..l.len().saturating_sub(1) {
                if l[k] != l[k + 1] && !graph.adjacent(l[k], l[k + 1]) {
                    let mut swapped = l.to_vec();
                    swapped.swap(k, k + 1);
                    let j = *index.get(&swapped).expect("a swap of commuting letters stays admissible");
                    let (a, b) = (find(&mut parent, i), find(&mut parent, j));
                    parent[a] = b;
                }
            }
        }
        let class: Vec<usize> = (0..seqs.len()).map(|i| find(&mut parent, i)).collect();

        let mut extensions = vec![HashSet::new(); seqs.len()];
        for (t, s) in seqs.iter().enumerate() {
            let l = s.letters();
            for k in 0..=l.len() {
                extensions[index[&l[..k]]].insert(class[t]);
            }
        }
        Universe { quiver: Arc::clone(quiver), seqs, index, class, extensions }
    }

    pub fn len(&self) -> usize {
        self.seqs.len()
    }

    pub fn id(&self, s: &AdmissibleSeq) -> Option<usize> {
        self.index.get(s.letters()).copied()
    }

    /// Oracle for `~`.
    pub fn equiv(&self, a: usize, b: usize) -> bool {
        self.class[a] == self.class[b]
    }

    /// Oracle for `≼`: some `U` makes `SU` equivalent to `T`.
    pub fn precedes(&self, s: usize, t: usize) -> bool {
        self.extensions[s].contains(&self.class[t])
    }
}

/// Key for a group element.
pub fn key(e: &WeylElement) -> Vec<Vec<BigInt>> {
    e.rows()
}

/// Every element of a finite Weyl group with its length, found by breadth
/// first search over right multiplication by simple reflections.
pub struct WeylTable {
    pub graph: Graph,
    pub elements: Vec<WeylElement>,
    pub dist: HashMap<Vec<Vec<BigInt>>, usize>,
}

impl WeylTable {
    pub fn new(graph: &Graph) -> Self {
        let n = graph.n();
        let gens: Vec<WeylElement> = (1..=n).map(|i| WeylElement::simple_reflection(graph, i).unwrap()).collect();
        let id = WeylElement::identity(n);
        let mut dist = HashMap::from([(key(&id), 0)]);
        let mut elements = vec![id.clone()];
        let mut queue = VecDeque::from([id]);
        while let Some(e) = queue.pop_front() {
            let d = dist[&key(&e)];
            for g in &gens {
                let next = &e * g;
                if let std::collections::hash_map::Entry::Vacant(slot) = dist.entry(key(&next)) {
                    slot.insert(d + 1);
                    elements.push(next.clone());
                    queue.push_back(next);
                }
            }
        }
        WeylTable { graph: graph.clone(), elements, dist }
    }

    pub fn length(&self, e: &WeylElement) -> usize {
        self.dist[&key(e)]
    }

    /// Product `s_{a_1} s_{a_2} ... s_{a_k}` of letters read left to right.
    pub fn product(&self, letters: &[usize]) -> WeylElement {
        letters.iter().fold(WeylElement::identity(self.graph.n()), |acc, &a| {
            &acc * &WeylElement::simple_reflection(&self.graph, a).unwrap()
        })
    }

    /// Lexicographically first set of positions in `c^∞` whose letters,
    /// multiplied left to right, give `target` with exactly `ℓ(target)`
    /// factors. `scan` is one copy of `c` in scan order. Returns the letters
    /// grouped by copy of `c`.
    pub fn lex_first_subsequence(&self, scan: &[usize], target: &WeylElement) -> Vec<Vec<usize>> {
        let len = self.length(target);
        let horizon = (len.max(1)) * scan.len();
        let mut chosen = Vec::new();
        let id = WeylElement::identity(self.graph.n());
        let ok = self.search(scan, target, len, horizon, 0, (&id, &id), &mut chosen);
        assert!(ok, "no subsequence found within the horizon");
        let mut blocks: Vec<Vec<usize>> = Vec::new();
        for &p in &chosen {
            let b = p / scan.len();
            while blocks.len() <= b {
                blocks.push(Vec::new());
            }
            blocks[b].push(scan[p % scan.len()]);
        }
        blocks
    }

    #[allow(clippy::too_many_arguments)]
    fn search(
        &self,
        scan: &[usize],
        target: &WeylElement,
        len: usize,
        horizon: usize,
        start: usize,
        (prefix, prefix_inv): (&WeylElement, &WeylElement),
        chosen: &mut Vec<usize>,
    ) -> bool {
        if chosen.len() == len {
            return key(prefix) == key(target);
        }
        for p in start..horizon {
            let s = WeylElement::simple_reflection(&self.graph, scan[p % scan.len()]).unwrap();
            let next = prefix * &s;
            let next_inv = &s * prefix_inv;
            // The prefix must start some factorization of length ℓ(target):
            // ℓ(next) + ℓ(next^{-1} target) = ℓ(target).
            let rest = &next_inv * target;
            if self.length(&next) != chosen.len() + 1 || self.length(&rest) != len - chosen.len() - 1 {
                continue;
            }
            chosen.push(p);
            if self.search(scan, target, len, horizon, p + 1, (&next, &next_inv), chosen) {
                return true;
            }
            chosen.pop();
        }
        false
    }
}

/// Every word over `1..=n` of length exactly `len`.
pub fn words(n: usize, len: usize) -> Vec<WeylWord> {
    let mut out = vec![Vec::new()];
    for _ in 0..len {
        out = out
            .into_iter()
            .flat_map(|w: Vec<usize>| {
                (1..=n).map(move |x| {
                    let mut v = w.clone();
                    v.push(x);
                    v
                })
            })
            .collect();
    }
    out.into_iter().map(WeylWord::new).collect()
}

/// All permutations of `1..=n`.
pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![Vec::new()];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for i in 0..=p.len() {
            let mut q = p.clone();
            q.insert(i, n);
            out.push(q);
        }
    }
    out
}
