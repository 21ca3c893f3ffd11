//! Finite simple undirected graphs on vertices `0..n`.

mod family;
pub mod io;
mod product;
mod search;

use std::collections::BTreeSet;
use std::ops::ControlFlow;

use thiserror::Error;

pub use family::{make_family, Family, MultipartiteSpec};
pub use product::{lex_product, LexProduct, ProductVertex};
pub use search::{clique_number, independence_number, nonisomorphic_graphs, VertexSet};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum GraphError {
    #[error("unknown graph family `{0}`")]
    UnknownFamily(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
    #[error("lexicographic product factor has no vertices")]
    EmptyFactor,
    #[error("vertex {vertex} out of range for a graph on {n} vertices")]
    VertexOutOfRange { vertex: usize, n: usize },
    #[error("loop at vertex {0}")]
    Loop(usize),
    #[error("malformed graph6 string: {0}")]
    Graph6(String),
    #[error("malformed edge list: {0}")]
    EdgeList(String),
    #[error("cannot read {path}: {message}")]
    Io { path: String, message: String },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Graph {
    adj: Vec<Vec<usize>>,
    labels: Option<Vec<String>>,
}

impl Graph {
    /// The edgeless graph on `n` vertices.
    pub fn empty(n: usize) -> Self {
        Graph {
            adj: vec![Vec::new(); n],
            labels: None,
        }
    }

    /// Builds a graph from an edge list. Repeated edges are merged; loops and
    /// out-of-range endpoints are rejected.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut sets = vec![BTreeSet::new(); n];
        for (u, v) in edges {
            for x in [u, v] {
                if x >= n {
                    return Err(GraphError::VertexOutOfRange { vertex: x, n });
                }
            }
            if u == v {
                return Err(GraphError::Loop(u));
            }
            sets[u].insert(v);
            sets[v].insert(u);
        }
        Ok(Graph {
            adj: sets.into_iter().map(|s| s.into_iter().collect()).collect(),
            labels: None,
        })
    }

    pub(crate) fn from_sorted_adjacency(adj: Vec<Vec<usize>>) -> Self {
        debug_assert!(adj.iter().enumerate().all(|(u, ns)| {
            ns.windows(2).all(|w| w[0] < w[1])
                && ns
                    .iter()
                    .all(|&v| v != u && adj[v].binary_search(&u).is_ok())
        }));
        Graph { adj, labels: None }
    }

    pub fn with_labels(mut self, labels: Vec<String>) -> Self {
        assert_eq!(labels.len(), self.n(), "one label per vertex");
        self.labels = Some(labels);
        self
    }

    pub fn labels(&self) -> Option<&[String]> {
        self.labels.as_deref()
    }

    pub fn n(&self) -> usize {
        self.adj.len()
    }

    pub fn edge_count(&self) -> usize {
        self.adj.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, ns)| ns.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn complement(&self) -> Graph {
        let n = self.n();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| v != u && !self.has_edge(u, v)).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    /// The subgraph induced by `keep`, renumbered in increasing order.
    pub fn induced(&self, keep: &[usize]) -> Graph {
        let mut keep = keep.to_vec();
        keep.sort_unstable();
        keep.dedup();
        let mut index = vec![usize::MAX; self.n()];
        for (i, &v) in keep.iter().enumerate() {
            index[v] = i;
        }
        let adj = keep
            .iter()
            .map(|&v| {
                self.adj[v]
                    .iter()
                    .filter(|&&w| index[w] != usize::MAX)
                    .map(|&w| index[w])
                    .collect()
            })
            .collect();
        Graph::from_sorted_adjacency(adj)
    }

    pub fn is_independent(&self, set: &[usize]) -> bool {
        set.iter()
            .enumerate()
            .all(|(i, &u)| set[i + 1..].iter().all(|&v| u != v && !self.has_edge(u, v)))
    }

    pub fn is_connected(&self) -> bool {
        let n = self.n();
        if n == 0 {
            return true;
        }
        let mut seen = vec![false; n];
        let mut stack = vec![0];
        seen[0] = true;
        let mut count = 1;
        while let Some(u) = stack.pop() {
            for &v in &self.adj[u] {
                if !seen[v] {
                    seen[v] = true;
                    count += 1;
                    stack.push(v);
                }
            }
        }
        count == n
    }

    /// If the graph is complete multipartite, returns its parts (each sorted,
    /// ordered by smallest vertex). Recognised by checking that non-adjacency
    /// is transitive, i.e. the complement is a disjoint union of cliques.
    pub fn multipartite_parts(&self) -> Option<Vec<Vec<usize>>> {
        let n = self.n();
        let mut part_of = vec![usize::MAX; n];
        let mut parts: Vec<Vec<usize>> = Vec::new();
        for u in 0..n {
            if part_of[u] != usize::MAX {
                continue;
            }
            let part: Vec<usize> = (u..n).filter(|&v| v == u || !self.has_edge(u, v)).collect();
            for &v in &part {
                if part_of[v] != usize::MAX {
                    return None;
                }
                part_of[v] = parts.len();
            }
            parts.push(part);
        }
        let complete =
            (0..n).all(|u| (u + 1..n).all(|v| self.has_edge(u, v) == (part_of[u] != part_of[v])));
        complete.then_some(parts)
    }

    /// Calls `visit` once for every simple path with at least one vertex.
    /// Each undirected path is reported once, oriented so that its first
    /// vertex is smaller than its last. Returning `ControlFlow::Break` from
    /// `visit` stops the enumeration, and the break value is returned.
    pub fn enumerate_simple_paths<B, F>(&self, mut visit: F) -> ControlFlow<B>
    where
        F: FnMut(&[usize]) -> ControlFlow<B>,
    {
        let mut on_path = vec![false; self.n()];
        let mut path = Vec::with_capacity(self.n());
        for s in 0..self.n() {
            path.push(s);
            on_path[s] = true;
            self.extend_paths(&mut path, &mut on_path, &mut visit)?;
            on_path[s] = false;
            path.pop();
        }
        ControlFlow::Continue(())
    }

    fn extend_paths<B, F>(
        &self,
        path: &mut Vec<usize>,
        on_path: &mut [bool],
        visit: &mut F,
    ) -> ControlFlow<B>
    where
        F: FnMut(&[usize]) -> ControlFlow<B>,
    {
        let last = *path.last().unwrap();
        if path.len() == 1 || last > path[0] {
            visit(path)?;
        }
        for &v in &self.adj[last] {
            if !on_path[v] {
                on_path[v] = true;
                path.push(v);
                let flow = self.extend_paths(path, on_path, visit);
                path.pop();
                on_path[v] = false;
                flow?;
            }
        }
        ControlFlow::Continue(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    pub(crate) fn path_count(g: &Graph) -> usize {
        let mut count = 0;
        let _ = g.enumerate_simple_paths::<(), _>(|_| {
            count += 1;
            ControlFlow::Continue(())
        });
        count
    }

    #[test]
    fn from_edges_rejects_loops_and_range() {
        assert_eq!(Graph::from_edges(2, [(1, 1)]), Err(GraphError::Loop(1)));
        assert_eq!(
            Graph::from_edges(2, [(0, 2)]),
            Err(GraphError::VertexOutOfRange { vertex: 2, n: 2 })
        );
        let g = Graph::from_edges(3, [(0, 1), (1, 0), (0, 1), (2, 1)]).unwrap();
        assert_eq!(g.edge_count(), 2);
        assert_eq!(g.neighbors(1), &[0, 2]);
    }

    #[test]
    fn path_enumeration_examples() {
        // P3: 3 singletons, 2 edges, 1 three-vertex path
        assert_eq!(path_count(&make_family("P3").unwrap()), 6);
        assert_eq!(path_count(&make_family("K3").unwrap()), 9);
        assert_eq!(path_count(&make_family("E3").unwrap()), 3);
        for n in 1..=8 {
            assert_eq!(
                path_count(&make_family(&format!("P{n}")).unwrap()),
                n * (n + 1) / 2
            );
        }
    }

    #[test]
    fn path_enumeration_orientation_and_uniqueness() {
        let g = make_family("K4").unwrap();
        let mut seen = BTreeSet::new();
        let _ = g.enumerate_simple_paths::<(), _>(|p| {
            if p.len() > 1 {
                assert!(p[0] < p[p.len() - 1]);
            }
            let mut rev = p.to_vec();
            rev.reverse();
            assert!(!seen.contains(&rev) || p.len() == 1);
            assert!(seen.insert(p.to_vec()));
            ControlFlow::Continue(())
        });
        // K4: 4 + 6 + 12 + 12
        assert_eq!(seen.len(), 34);
    }

    #[test]
    fn path_enumeration_stops_early() {
        let g = make_family("K5").unwrap();
        let mut calls = 0;
        let flow = g.enumerate_simple_paths(|p| {
            calls += 1;
            if p.len() == 3 {
                ControlFlow::Break(p.to_vec())
            } else {
                ControlFlow::Continue(())
            }
        });
        assert_eq!(flow, ControlFlow::Break(vec![0, 1, 2]));
        assert_eq!(calls, 3);
    }

    #[test]
    fn multipartite_recognition() {
        let parts = make_family("K2,3").unwrap().multipartite_parts().unwrap();
        assert_eq!(parts, vec![vec![0, 1], vec![2, 3, 4]]);
        assert_eq!(
            make_family("K4")
                .unwrap()
                .multipartite_parts()
                .unwrap()
                .len(),
            4
        );
        assert_eq!(
            make_family("E3")
                .unwrap()
                .multipartite_parts()
                .unwrap()
                .len(),
            1
        );
        assert!(make_family("P4").unwrap().multipartite_parts().is_none());
        assert!(make_family("C5").unwrap().multipartite_parts().is_none());
        assert!(make_family("C4").unwrap().multipartite_parts().is_some());
        // P3 = K1,2 with the center in the middle
        assert_eq!(
            make_family("P3").unwrap().multipartite_parts().unwrap(),
            vec![vec![0, 2], vec![1]]
        );
    }

    #[test]
    fn induced_and_complement() {
        let c5 = make_family("C5").unwrap();
        assert_eq!(c5.complement().edge_count(), 5);
        let p = c5.induced(&[0, 1, 2]);
        assert_eq!(p.edge_count(), 2);
        assert!(p.has_edge(0, 1) && p.has_edge(1, 2) && !p.has_edge(0, 2));
        assert!(c5.is_connected());
        assert!(!make_family("E2").unwrap().is_connected());
    }
}
