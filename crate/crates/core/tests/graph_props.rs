mod common;

use common::*;
use preproj::{Graph, Quiver, VertexSet};

fn small_graphs() -> Vec<Graph> {
    let mut out = vec![path_graph(2), path_graph(3), path_graph(4), path_graph(5), triangle()];
    out.push(Graph::from_edges(2, &[(1, 2), (1, 2)]).unwrap());
    out.push(Graph::from_edges(2, &[(1, 2), (1, 2), (1, 2)]).unwrap());
    out.push(Graph::from_edges(4, &[(1, 2), (2, 3), (3, 4), (4, 1)]).unwrap());
    out.push(Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4)]).unwrap());
    out.push(Graph::from_edges(5, &[(1, 2), (1, 3), (1, 4), (4, 5)]).unwrap());
    out.push(Graph::from_edges(5, &[(1, 2), (2, 3), (3, 4), (4, 5), (5, 1)]).unwrap());
    out.push(Graph::from_edges(4, &[(1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)]).unwrap());
    out.push(Graph::from_edges(3, &[(1, 2), (1, 2), (2, 3), (1, 3)]).unwrap());
    out
}

fn all_sets(n: usize) -> impl Iterator<Item = VertexSet> {
    (0..1u64 << n).map(VertexSet::from_bits)
}

/// Upward closure checked arrow by arrow.
fn is_filter_by_arrows(q: &Quiver, f: VertexSet) -> bool {
    q.arrows().iter().all(|&(s, e)| !f.contains(s) || f.contains(e))
}

#[test]
fn vertex_set_bits_are_one_based() {
    let s: VertexSet = [1, 3].into_iter().collect();
    assert_eq!(s, VertexSet::from_bits(0b101));
    assert_eq!(all_sets(3).count(), 8);
    assert!(all_sets(3).all(|s| s.iter().all(|v| (1..=3).contains(&v))));
}

#[test]
fn sinks_are_the_maximal_elements() {
    for g in small_graphs() {
        for q in g.acyclic_orientations() {
            let maximal: VertexSet =
                (1..=q.n()).filter(|&v| (1..=q.n()).all(|w| w == v || !q.leq(v, w))).collect();
            assert_eq!(q.sinks(), maximal, "{q:?}");
            let minimal: VertexSet =
                (1..=q.n()).filter(|&v| (1..=q.n()).all(|w| w == v || !q.leq(w, v))).collect();
            assert_eq!(q.sources(), minimal, "{q:?}");
        }
    }
}

#[test]
fn orientation_counts() {
    assert_eq!(path_graph(4).acyclic_orientations().len(), 8);
    assert_eq!(triangle().acyclic_orientations().len(), 6);
    let k4 = &small_graphs()[11];
    assert_eq!(k4.acyclic_orientations().len(), 24);
}

#[test]
fn reflection_at_a_sink_touches_only_that_vertex() {
    for g in small_graphs() {
        for q in g.acyclic_orientations() {
            for x in q.sinks().iter() {
                let r = q.reflect(x).unwrap();
                assert!(r.is_source(x));
                for (&(s, e), &(s2, e2)) in q.arrows().iter().zip(r.arrows()) {
                    if e == x {
                        assert_eq!((s2, e2), (x, s));
                    } else {
                        assert_eq!((s2, e2), (s, e));
                    }
                }
                assert_eq!(r.reflect(x).unwrap(), q);
            }
        }
    }
}

#[test]
fn leq_is_a_partial_order() {
    for g in small_graphs() {
        for q in g.acyclic_orientations() {
            let n = q.n();
            for u in 1..=n {
                assert!(q.leq(u, u));
                for v in 1..=n {
                    if u != v && q.leq(u, v) {
                        assert!(!q.leq(v, u));
                    }
                    for w in 1..=n {
                        if q.leq(u, v) && q.leq(v, w) {
                            assert!(q.leq(u, w));
                        }
                    }
                }
            }
        }
    }
}

#[test]
fn filters_and_hulls_against_brute_force() {
    let mut quivers = vec![(*q3()).clone(), (*qk()).clone()];
    quivers.extend(path_graph(4).acyclic_orientations());
    quivers.extend(triangle().acyclic_orientations());
    for q in quivers {
        let n = q.n();
        let filters: Vec<VertexSet> = all_sets(n).filter(|&f| is_filter_by_arrows(&q, f)).collect();
        for f in all_sets(n) {
            assert_eq!(q.is_filter(f), filters.contains(&f));
        }
        for &f in &filters {
            let mut seed = f;
            for v in f.iter() {
                seed = seed.union(q.graph().neighbors(v));
            }
            let brute = filters
                .iter()
                .filter(|g| seed.is_subset(**g))
                .fold(VertexSet::full(n), |acc, g| acc.intersection(*g));
            let h = q.hull(f).unwrap();
            assert_eq!(h, brute, "{q:?} {f}");
            assert!(f.is_subset(h));
            assert!(q.is_filter(q.hull(h).unwrap()));
            for &g in &filters {
                let hu = q.hull(f.union(g)).unwrap();
                assert_eq!(hu, h.union(q.hull(g).unwrap()));
                let hi = q.hull(f.intersection(g)).unwrap();
                assert!(hi.is_subset(h.intersection(q.hull(g).unwrap())));
                if f.is_subset(g) {
                    assert!(h.is_subset(q.hull(g).unwrap()));
                }
            }
        }
        let not_filter = all_sets(n).find(|&f| !is_filter_by_arrows(&q, f));
        if let Some(f) = not_filter {
            assert!(q.hull(f).is_err());
        }
    }
}

#[test]
fn cartan_round_trip_up_to_five_vertices() {
    let mut valid = 0;
    for n in 2..=5usize {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
        let total = 3usize.pow(pairs.len() as u32);
        for code in 0..total {
            let mut a = vec![vec![0i64; n]; n];
            for (i, row) in a.iter_mut().enumerate() {
                row[i] = 2;
            }
            let mut c = code;
            for &(i, j) in &pairs {
                let v = -((c % 3) as i64);
                c /= 3;
                a[i][j] = v;
                a[j][i] = v;
            }
            match Graph::from_cartan(&a) {
                Ok(g) => {
                    valid += 1;
                    assert_eq!(g.cartan(), a);
                    assert_eq!(Graph::from_cartan(&g.cartan()).unwrap(), g);
                }
                Err(e) => assert_eq!(e, preproj::Error::Decomposable),
            }
        }
    }
    assert!(valid > 0);
}

#[test]
fn path_counts_match_projective_shape() {
    for g in small_graphs() {
        for q in g.acyclic_orientations() {
            for x in 1..=q.n() {
                let counts = q.path_counts_from(x);
                assert_eq!(counts[x - 1], 1);
                for v in 1..=q.n() {
                    assert_eq!(counts[v - 1] > 0, q.leq(x, v));
                }
            }
        }
    }
}
