//! List colourings: the greedy construction for lists of length
//! `n - α(G) + 1` and an exhaustive choosability check for tiny graphs.

use std::collections::BTreeSet;

use serde::{Deserialize, Serialize};

use crate::graphs::{independence_number, Graph};

use super::square::{SquareSearch, UNCOLOURED};
use super::{Colour, ColourError, Colouring};

pub const CHOOSABLE_MAX_ORDER: usize = 5;
pub const CHOOSABLE_MAX_UNIVERSE: usize = 25;

/// Permitted colours per vertex. Every list is nonempty.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(transparent)]
pub struct ListAssignment(Vec<BTreeSet<Colour>>);

impl ListAssignment {
    pub fn new(lists: Vec<BTreeSet<Colour>>) -> Result<Self, ColourError> {
        if let Some(v) = lists.iter().position(BTreeSet::is_empty) {
            return Err(ColourError::EmptyList(v));
        }
        if lists.iter().any(|l| l.contains(&UNCOLOURED)) {
            return Err(ColourError::ReservedColour(UNCOLOURED));
        }
        Ok(ListAssignment(lists))
    }

    /// The same list on `n` vertices.
    pub fn uniform(n: usize, list: impl IntoIterator<Item = Colour>) -> Result<Self, ColourError> {
        let list: BTreeSet<Colour> = list.into_iter().collect();
        Self::new(vec![list; n])
    }

    pub fn lists(&self) -> &[BTreeSet<Colour>] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Colours the vertices outside the least maximum independent set `M` with
/// pairwise distinct colours from their lists (smallest available first),
/// then gives each vertex of `M` the smallest colour of its list not used
/// outside `M`.
///
/// Along any path the colours off `M` form a rainbow word, and the vertices
/// of `M` interrupt it one at a time with colours outside that word, so the
/// result is nonrepetitive. Lists of length `n - α + 1` suffice: a vertex off
/// `M` sees at most `n - α - 1` colours already taken, a vertex of `M` at
/// most `n - α`.
pub fn greedy_list_colouring(g: &Graph, lists: &ListAssignment) -> Result<Colouring, ColourError> {
    let n = g.n();
    if lists.len() != n {
        return Err(ColourError::ListCountMismatch {
            expected: n,
            found: lists.len(),
        });
    }
    let (alpha, m) = independence_number(g);
    let required = n - alpha + 1;
    if let Some((vertex, l)) = lists
        .lists()
        .iter()
        .enumerate()
        .find(|(_, l)| l.len() < required)
    {
        return Err(ColourError::ListTooShort {
            vertex,
            len: l.len(),
            required,
        });
    }

    let in_m: BTreeSet<usize> = m.into_iter().collect();
    let mut colours = vec![UNCOLOURED; n];
    let mut taken = BTreeSet::new();
    for v in (0..n).filter(|v| !in_m.contains(v)) {
        let c = lists.lists()[v]
            .iter()
            .find(|c| !taken.contains(*c))
            .ok_or(ColourError::DistinctSelectionFailed { vertex: v })?;
        taken.insert(*c);
        colours[v] = *c;
    }
    for &v in &in_m {
        colours[v] = *lists.lists()[v]
            .iter()
            .find(|c| !taken.contains(*c))
            .ok_or(ColourError::DistinctSelectionFailed { vertex: v })?;
    }
    Colouring::new(colours)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Choosability {
    Choosable,
    /// Lists of the requested size admitting no nonrepetitive colouring.
    NotChoosable(ListAssignment),
}

impl Choosability {
    pub fn is_choosable(&self) -> bool {
        matches!(self, Choosability::Choosable)
    }
}

/// Decides whether `g` is nonrepetitively `k`-choosable over the colour
/// universe `0..universe`, by trying every assignment of `k`-subsets.
///
/// Assignments are generated up to relabelling of colours: each new list
/// reuses some already-seen colours and introduces fresh ones in increasing
/// order. An assignment uses at most `k * n` distinct colours, so a
/// universe of `k * n` already contains a copy of every assignment; larger
/// universes add nothing.
pub fn check_choosable(g: &Graph, k: usize, universe: usize) -> Result<Choosability, ColourError> {
    let n = g.n();
    if n > CHOOSABLE_MAX_ORDER {
        return Err(ColourError::TooLarge(format!(
            "choosability check is limited to {CHOOSABLE_MAX_ORDER} vertices, got {n}"
        )));
    }
    if universe > CHOOSABLE_MAX_UNIVERSE {
        return Err(ColourError::TooLarge(format!(
            "colour universe is limited to {CHOOSABLE_MAX_UNIVERSE}, got {universe}"
        )));
    }
    if k == 0 {
        return Err(ColourError::BadParameter(
            "list size must be positive".into(),
        ));
    }
    if universe < k {
        return Err(ColourError::BadParameter(format!(
            "universe {universe} is smaller than the list size {k}"
        )));
    }
    // Lists of size >= n always allow a rainbow colouring.
    if k >= n {
        return Ok(Choosability::Choosable);
    }

    let mut enumerator = Enumerator {
        g,
        k,
        universe: universe.min(k * n) as Colour,
        lists: Vec::with_capacity(n),
        search: SquareSearch::new(g),
        colours: vec![UNCOLOURED; n],
    };
    Ok(match enumerator.assign(0) {
        Some(lists) => Choosability::NotChoosable(ListAssignment::new(lists)?),
        None => Choosability::Choosable,
    })
}

struct Enumerator<'g> {
    g: &'g Graph,
    k: usize,
    universe: Colour,
    lists: Vec<BTreeSet<Colour>>,
    search: SquareSearch<'g>,
    colours: Vec<Colour>,
}

impl Enumerator<'_> {
    /// Returns a bad assignment extending the current prefix, if any.
    fn assign(&mut self, labels_used: Colour) -> Option<Vec<BTreeSet<Colour>>> {
        if self.lists.len() == self.g.n() {
            return (!self.colourable(0)).then(|| self.lists.clone());
        }
        for fresh in 0..=self.k as Colour {
            if labels_used + fresh > self.universe {
                break;
            }
            let reused = self.k - fresh as usize;
            if reused > labels_used as usize {
                continue;
            }
            let new: Vec<Colour> = (labels_used..labels_used + fresh).collect();
            let mut found = None;
            for_each_subset(labels_used as usize, reused, &mut |old| {
                let list: BTreeSet<Colour> = old
                    .iter()
                    .map(|&c| c as Colour)
                    .chain(new.iter().copied())
                    .collect();
                self.lists.push(list);
                found = self.assign(labels_used + fresh);
                self.lists.pop();
                found.is_some()
            });
            if found.is_some() {
                return found;
            }
        }
        None
    }

    fn colourable(&mut self, v: usize) -> bool {
        if v == self.g.n() {
            return true;
        }
        let list: Vec<Colour> = self.lists[v].iter().copied().collect();
        for c in list {
            self.colours[v] = c;
            if self.search.through(&self.colours, v).is_none() && self.colourable(v + 1) {
                self.colours[v] = UNCOLOURED;
                return true;
            }
        }
        self.colours[v] = UNCOLOURED;
        false
    }
}

/// Calls `f` on each `size`-subset of `0..m` in lexicographic order until it
/// returns `true`.
fn for_each_subset(m: usize, size: usize, f: &mut dyn FnMut(&[usize]) -> bool) -> bool {
    fn rec(
        start: usize,
        m: usize,
        size: usize,
        cur: &mut Vec<usize>,
        f: &mut dyn FnMut(&[usize]) -> bool,
    ) -> bool {
        if cur.len() == size {
            return f(cur);
        }
        for x in start..m {
            if m - x < size - cur.len() {
                break;
            }
            cur.push(x);
            if rec(x + 1, m, size, cur, f) {
                return true;
            }
            cur.pop();
        }
        false
    }
    rec(0, m, size, &mut Vec::with_capacity(size), f)
}
