//! Exact independence and clique numbers, and brute-force enumeration of
//! small graphs up to isomorphism.

use super::{Graph, GraphError};

/// Sorted vertex list.
pub type VertexSet = Vec<usize>;

/// Maximum independent set by branch and bound.
///
/// Returns `(α(G), M)` where `M` is the lexicographically least maximum
/// independent set. Branches are explored in lexicographic order of the
/// sorted sets and the incumbent is only replaced by a strictly larger set,
/// so the first maximum set found is the least one. The bound is a greedy
/// clique cover of the remaining candidates.
pub fn independence_number(g: &Graph) -> (usize, VertexSet) {
    let mut best = Vec::new();
    let mut current = Vec::new();
    let cands: Vec<usize> = (0..g.n()).collect();
    branch(g, &cands, &mut current, &mut best);
    (best.len(), best)
}

/// Maximum clique, as an independent set of the complement.
pub fn clique_number(g: &Graph) -> (usize, VertexSet) {
    independence_number(&g.complement())
}

fn branch(g: &Graph, cands: &[usize], current: &mut Vec<usize>, best: &mut Vec<usize>) {
    if current.len() > best.len() {
        *best = current.clone();
    }
    if cands.is_empty() || current.len() + clique_cover_size(g, cands) <= best.len() {
        return;
    }
    for (idx, &v) in cands.iter().enumerate() {
        if current.len() + cands.len() - idx <= best.len() {
            return;
        }
        let rest: Vec<usize> = cands[idx + 1..]
            .iter()
            .copied()
            .filter(|&w| !g.has_edge(v, w))
            .collect();
        current.push(v);
        branch(g, &rest, current, best);
        current.pop();
    }
}

/// Number of cliques in a greedy first-fit clique cover; an upper bound on
/// the independence number of the induced subgraph.
fn clique_cover_size(g: &Graph, vertices: &[usize]) -> usize {
    let mut cliques: Vec<Vec<usize>> = Vec::new();
    for &v in vertices {
        match cliques
            .iter_mut()
            .find(|c| c.iter().all(|&u| g.has_edge(u, v)))
        {
            Some(c) => c.push(v),
            None => cliques.push(vec![v]),
        }
    }
    cliques.len()
}

/// One representative per isomorphism class of graphs on `n` vertices,
/// `n <= 6`. Each representative is the graph whose graph6 adjacency bits,
/// read as an integer, are smallest over all relabellings; the list is in
/// increasing order of that integer.
pub fn nonisomorphic_graphs(n: usize) -> Result<Vec<Graph>, GraphError> {
    if n > 6 {
        return Err(GraphError::BadParameter(format!(
            "isomorphism-class enumeration is limited to 6 vertices, got {n}"
        )));
    }
    let pairs: Vec<(usize, usize)> = (1..n).flat_map(|j| (0..j).map(move |i| (i, j))).collect();
    let bit_of = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        j * (j - 1) / 2 + i
    };
    let perm_maps: Vec<Vec<usize>> = permutations(n)
        .into_iter()
        .map(|p| pairs.iter().map(|&(i, j)| bit_of(p[i], p[j])).collect())
        .collect();

    let mut reps = Vec::new();
    for mask in 0u32..(1u32 << pairs.len()) {
        let canonical = perm_maps.iter().all(|map| {
            let image = map
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .fold(0u32, |acc, (_, &b)| acc | 1 << b);
            image >= mask
        });
        if canonical {
            let edges = pairs
                .iter()
                .enumerate()
                .filter(|&(k, _)| mask >> k & 1 == 1)
                .map(|(_, &e)| e);
            reps.push(Graph::from_edges(n, edges)?);
        }
    }
    Ok(reps)
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    fn rec(prefix: &mut Vec<usize>, used: &mut [bool], out: &mut Vec<Vec<usize>>) {
        if prefix.len() == used.len() {
            out.push(prefix.clone());
            return;
        }
        for v in 0..used.len() {
            if !used[v] {
                used[v] = true;
                prefix.push(v);
                rec(prefix, used, out);
                prefix.pop();
                used[v] = false;
            }
        }
    }
    let mut out = Vec::new();
    rec(&mut Vec::new(), &mut vec![false; n], &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graphs::{lex_product, make_family};
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    /// Exhaustive oracle over all vertex subsets.
    fn brute_alpha(g: &Graph) -> usize {
        (0u32..1 << g.n())
            .filter(|&s| {
                let set: Vec<usize> = (0..g.n()).filter(|&v| s >> v & 1 == 1).collect();
                g.is_independent(&set)
            })
            .map(u32::count_ones)
            .max()
            .unwrap() as usize
    }

    fn brute_least_mis(g: &Graph) -> Vec<usize> {
        let alpha = brute_alpha(g);
        let mut all: Vec<Vec<usize>> = (0u32..1 << g.n())
            .filter(|&s| s.count_ones() as usize == alpha)
            .map(|s| (0..g.n()).filter(|&v| s >> v & 1 == 1).collect::<Vec<_>>())
            .filter(|set| g.is_independent(set))
            .collect();
        all.sort();
        all.swap_remove(0)
    }

    fn random_graph(rng: &mut ChaCha8Rng, max_n: usize) -> Graph {
        let n = rng.gen_range(1..=max_n);
        let p: f64 = rng.gen_range(0.0..1.0);
        let edges: Vec<_> = (1..n)
            .flat_map(|j| (0..j).map(move |i| (i, j)))
            .filter(|_| rng.gen_bool(p))
            .collect();
        Graph::from_edges(n, edges).unwrap()
    }

    #[test]
    fn alpha_and_omega_examples() {
        for n in 1..=6 {
            assert_eq!(
                independence_number(&make_family(&format!("K{n}")).unwrap()).0,
                1
            );
            assert_eq!(
                independence_number(&make_family(&format!("E{n}")).unwrap()).0,
                n
            );
        }
        let c5 = make_family("C5").unwrap();
        assert_eq!(brute_alpha(&c5), 2);
        assert_eq!(independence_number(&c5), (2, vec![0, 2]));
        assert_eq!(clique_number(&make_family("K4").unwrap()).0, 4);
        assert_eq!(clique_number(&c5).0, 2);
        assert_eq!(independence_number(&Graph::empty(0)), (0, vec![]));
        assert_eq!(
            independence_number(&make_family("S3").unwrap()),
            (3, vec![1, 2, 3])
        );
    }

    #[test]
    fn witness_is_lexicographically_least() {
        let mut rng = ChaCha8Rng::seed_from_u64(7);
        for _ in 0..300 {
            let g = random_graph(&mut rng, 9);
            let (alpha, m) = independence_number(&g);
            assert_eq!(alpha, brute_alpha(&g));
            assert!(g.is_independent(&m));
            assert_eq!(m, brute_least_mis(&g));
        }
    }

    #[test]
    fn multiplicative_over_lex_product() {
        let mut rng = ChaCha8Rng::seed_from_u64(11);
        for _ in 0..200 {
            let g = random_graph(&mut rng, 5);
            let h = random_graph(&mut rng, 5);
            let p = lex_product(&g, &h).unwrap();
            assert_eq!(
                independence_number(p.graph()).0,
                independence_number(&g).0 * independence_number(&h).0
            );
            assert_eq!(
                clique_number(p.graph()).0,
                clique_number(&g).0 * clique_number(&h).0
            );
        }
    }

    #[test]
    fn isomorphism_class_counts() {
        // OEIS A000088
        let counts: Vec<usize> = (0..=5)
            .map(|n| nonisomorphic_graphs(n).unwrap().len())
            .collect();
        assert_eq!(counts, vec![1, 1, 2, 4, 11, 34]);
        assert!(nonisomorphic_graphs(7).is_err());
    }
}
