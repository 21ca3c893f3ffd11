//! Nonrepetitive vertex colourings: verification, exact Thue chromatic
//! numbers, and the constructive colourings for lexicographic products and
//! list assignments.

mod lists;
mod square;

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::graphs::{clique_number, lex_product, Graph, MultipartiteSpec};
use square::{SquareSearch, UNCOLOURED};

pub use lists::{
    check_choosable, greedy_list_colouring, Choosability, ListAssignment, CHOOSABLE_MAX_ORDER,
    CHOOSABLE_MAX_UNIVERSE,
};

pub type Colour = u32;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ColourError {
    #[error("colouring has {found} entries but the graph has {expected} vertices")]
    IncompleteColouring { expected: usize, found: usize },
    #[error("colour {0} is reserved")]
    ReservedColour(Colour),
    #[error("the graph has no vertices")]
    EmptyGraph,
    #[error("vertices {0:?} do not form an independent set")]
    NotIndependent(Vec<usize>),
    #[error("factor colouring is repetitive along {0:?}")]
    RepetitiveFactorColouring(Vec<usize>),
    #[error("list of vertex {vertex} has {len} colours, at least {required} needed")]
    ListTooShort {
        vertex: usize,
        len: usize,
        required: usize,
    },
    #[error("no unused colour left in the list of vertex {vertex}")]
    DistinctSelectionFailed { vertex: usize },
    #[error("list assignment covers {found} vertices, the graph has {expected}")]
    ListCountMismatch { expected: usize, found: usize },
    #[error("list of vertex {0} is empty")]
    EmptyList(usize),
    #[error("instance too large: {0}")]
    TooLarge(String),
    #[error("bad parameter: {0}")]
    BadParameter(String),
}

/// A total map from vertices to colours.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Colouring(Vec<Colour>);

impl Colouring {
    pub fn new(colours: Vec<Colour>) -> Result<Self, ColourError> {
        if colours.contains(&UNCOLOURED) {
            return Err(ColourError::ReservedColour(UNCOLOURED));
        }
        Ok(Colouring(colours))
    }

    /// Colours every vertex differently.
    pub fn rainbow(n: usize) -> Self {
        Colouring((0..n as Colour).collect())
    }

    pub fn colours(&self) -> &[Colour] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn colour_of(&self, v: usize) -> Colour {
        self.0[v]
    }

    /// Number of distinct colours used.
    pub fn palette_size(&self) -> usize {
        self.0.iter().collect::<BTreeSet<_>>().len()
    }

    pub fn check_total(&self, g: &Graph) -> Result<(), ColourError> {
        if self.len() == g.n() {
            Ok(())
        } else {
            Err(ColourError::IncompleteColouring {
                expected: g.n(),
                found: self.len(),
            })
        }
    }
}

/// JSON form of a colouring: `{"graph": <graph6>, "colours": [...]}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ColouringRecord {
    pub graph: String,
    pub colours: Vec<Colour>,
}

impl ColouringRecord {
    pub fn new(g: &Graph, c: &Colouring) -> Self {
        ColouringRecord {
            graph: crate::graphs::io::to_graph6(g),
            colours: c.colours().to_vec(),
        }
    }
}

/// A simple path whose colour word is a repetition with the given half
/// length. Oriented with the smaller endpoint first.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct RepetitionWitness {
    pub path: Vec<usize>,
    pub half_length: usize,
}

impl RepetitionWitness {
    fn from_path(mut path: Vec<usize>) -> Self {
        if path.first() > path.last() {
            path.reverse();
        }
        let half_length = path.len() / 2;
        RepetitionWitness { path, half_length }
    }
}

/// Returns a path whose colour sequence is a repetition, or `None` if the
/// colouring is nonrepetitive.
///
/// Any repetition inside the colour word of a path is the whole colour word
/// of a sub-path, so only paths whose entire word is a square are searched.
pub fn verify_nonrepetitive(
    g: &Graph,
    c: &Colouring,
) -> Result<Option<RepetitionWitness>, ColourError> {
    c.check_total(g)?;
    let mut search = SquareSearch::new(g);
    Ok((0..g.n())
        .find_map(|v| search.through(c.colours(), v))
        .map(RepetitionWitness::from_path))
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExactPi {
    pub pi: usize,
    pub witness: Colouring,
}

/// Exact Thue chromatic number with a witness colouring.
///
/// Tries `k = max(lower_hint, ω(G)), k + 1, ...` and backtracks over the
/// vertices in order of descending degree. Colour `j` is offered only once
/// colours `0..j` are in use. After colouring a vertex, every repetition
/// among the coloured vertices that passes through it is searched for; a
/// new repetition must contain the vertex just coloured, at any position.
///
/// `upper_hint` is only checked for consistency with `lower_hint`; the search
/// always ends by `k = n`, where the rainbow colouring works.
pub fn exact_pi(
    g: &Graph,
    lower_hint: Option<usize>,
    upper_hint: Option<usize>,
) -> Result<ExactPi, ColourError> {
    let n = g.n();
    if n == 0 {
        return Err(ColourError::EmptyGraph);
    }
    if let (Some(lo), Some(hi)) = (lower_hint, upper_hint) {
        if lo > hi {
            return Err(ColourError::BadParameter(format!(
                "lower hint {lo} exceeds upper hint {hi}"
            )));
        }
    }
    // Nonrepetitive colourings are proper, so ω(G) colours are needed.
    let omega = clique_number(g).0;
    let start = lower_hint.unwrap_or(1).max(omega).clamp(1, n);

    let mut order: Vec<usize> = (0..n).collect();
    order.sort_by_key(|&v| (std::cmp::Reverse(g.degree(v)), v));

    for k in start..=n {
        let mut solver = Backtrack {
            g,
            order: &order,
            colours: vec![UNCOLOURED; n],
            k: k as Colour,
            search: SquareSearch::new(g),
        };
        if solver.assign(0, 0) {
            let witness = Colouring(solver.colours);
            debug_assert_eq!(verify_nonrepetitive(g, &witness), Ok(None));
            return Ok(ExactPi { pi: k, witness });
        }
    }
    unreachable!("the rainbow colouring is nonrepetitive")
}

struct Backtrack<'a> {
    g: &'a Graph,
    order: &'a [usize],
    colours: Vec<Colour>,
    k: Colour,
    search: SquareSearch<'a>,
}

impl Backtrack<'_> {
    /// `in_use` colours `0..in_use` appear on the already coloured vertices.
    fn assign(&mut self, pos: usize, in_use: Colour) -> bool {
        let Some(&v) = self.order.get(pos) else {
            return true;
        };
        for c in 0..self.k.min(in_use + 1) {
            if self.g.neighbors(v).iter().any(|&u| self.colours[u] == c) {
                continue;
            }
            self.colours[v] = c;
            if self.search.through(&self.colours, v).is_none()
                && self.assign(pos + 1, in_use.max(c + 1))
            {
                return true;
            }
        }
        self.colours[v] = UNCOLOURED;
        false
    }
}

/// Colours `G ∘ H` by copying `h_colouring` onto every layer over
/// `independent_set` and giving every other vertex its own fresh colour.
///
/// A repetitive path can only use the shared colours, and it cannot leave a
/// layer since the layers it may visit sit over an independent set.
pub fn construct_product_colouring(
    g: &Graph,
    h: &Graph,
    independent_set: &[usize],
    h_colouring: &Colouring,
) -> Result<Colouring, ColourError> {
    h_colouring.check_total(h)?;
    if independent_set.iter().any(|&v| v >= g.n()) || !g.is_independent(independent_set) {
        return Err(ColourError::NotIndependent(independent_set.to_vec()));
    }
    if let Some(w) = verify_nonrepetitive(h, h_colouring)? {
        return Err(ColourError::RepetitiveFactorColouring(w.path));
    }
    let shared: BTreeSet<usize> = independent_set.iter().copied().collect();
    let mut fresh = h_colouring.colours().iter().max().map_or(0, |&m| m + 1);
    let mut colours = Vec::with_capacity(g.n() * h.n());
    for u in 0..g.n() {
        if shared.contains(&u) {
            colours.extend_from_slice(h_colouring.colours());
        } else {
            for _ in 0..h.n() {
                colours.push(fresh);
                fresh += 1;
            }
        }
    }
    Colouring::new(colours)
}

/// `π(K_{n_1,...,n_k}) = n - max n_i + 1`.
pub fn multipartite_exact_pi(spec: &MultipartiteSpec) -> usize {
    spec.order() - spec.largest_part() + 1
}

/// Convenience: the product graph of `g` and `h` coloured by
/// [`construct_product_colouring`] with the least maximum independent set.
pub fn product_upper_colouring(
    g: &Graph,
    h: &Graph,
    h_colouring: &Colouring,
) -> Result<(Graph, Colouring), ColourError> {
    let (_, m) = crate::graphs::independence_number(g);
    let product = lex_product(g, h).map_err(|_| ColourError::EmptyGraph)?;
    let c = construct_product_colouring(g, h, &m, h_colouring)?;
    Ok((product.into_graph(), c))
}
