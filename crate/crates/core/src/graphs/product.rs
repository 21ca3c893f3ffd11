use serde::{Deserialize, Serialize};

use super::{Graph, GraphError};

/// A vertex `(g, h)` of `G ∘ H`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ProductVertex {
    pub g: usize,
    pub h: usize,
}

/// The lexicographic product `G ∘ H` together with its layer bookkeeping.
/// Vertex `(g, h)` is numbered `g * |V(H)| + h`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LexProduct {
    graph: Graph,
    n_g: usize,
    n_h: usize,
}

impl LexProduct {
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn into_graph(self) -> Graph {
        self.graph
    }

    pub fn factor_orders(&self) -> (usize, usize) {
        (self.n_g, self.n_h)
    }

    pub fn index(&self, v: ProductVertex) -> usize {
        assert!(
            v.g < self.n_g && v.h < self.n_h,
            "product vertex out of range"
        );
        v.g * self.n_h + v.h
    }

    pub fn vertex(&self, index: usize) -> ProductVertex {
        assert!(index < self.graph.n(), "product index out of range");
        ProductVertex {
            g: index / self.n_h,
            h: index % self.n_h,
        }
    }

    /// Indices of the H-layer `g[H] = {(g, w) : w ∈ V(H)}`.
    pub fn layer(&self, g: usize) -> std::ops::Range<usize> {
        assert!(g < self.n_g, "layer index out of range");
        g * self.n_h..(g + 1) * self.n_h
    }
}

/// `(u, v) ~ (x, y)` iff `u ~ x` in G, or `u = x` and `v ~ y` in H.
pub fn lex_product(g: &Graph, h: &Graph) -> Result<LexProduct, GraphError> {
    let (n_g, n_h) = (g.n(), h.n());
    if n_g == 0 || n_h == 0 {
        return Err(GraphError::EmptyFactor);
    }
    let mut adj = Vec::with_capacity(n_g * n_h);
    for u in 0..n_g {
        for v in 0..n_h {
            // Row-major numbering keeps this sorted: lower layers, then the
            // own layer, then higher layers.
            let mut ns = Vec::with_capacity(g.degree(u) * n_h + h.degree(v));
            let (below, above) = g
                .neighbors(u)
                .split_at(g.neighbors(u).partition_point(|&x| x < u));
            for &x in below {
                ns.extend(x * n_h..(x + 1) * n_h);
            }
            ns.extend(h.neighbors(v).iter().map(|&y| u * n_h + y));
            for &x in above {
                ns.extend(x * n_h..(x + 1) * n_h);
            }
            adj.push(ns);
        }
    }
    let labels = (0..n_g * n_h)
        .map(|i| {
            let (u, v) = (i / n_h, i % n_h);
            let name =
                |gr: &Graph, x: usize| gr.labels().map_or_else(|| x.to_string(), |l| l[x].clone());
            format!("({},{})", name(g, u), name(h, v))
        })
        .collect();
    Ok(LexProduct {
        graph: Graph::from_sorted_adjacency(adj).with_labels(labels),
        n_g,
        n_h,
    })
}
