//! Search for repetitively coloured paths through a given vertex.
//!
//! A path `u_1 ... u_2m` is a repetition iff its halves `A = u_1..u_m` and
//! `B = u_{m+1}..u_2m` satisfy `colour(A[i]) == colour(B[i])`. The search
//! grows `A` and `B` in lockstep, one equally coloured pair at a time, and
//! succeeds once the last vertex of `A` is adjacent to the first vertex of
//! `B`. Pairs are appended on the right first, then prepended on the left,
//! so every pair sequence is generated once.
//!
//! Reversing a repetition gives a repetition, so seeding the search with the
//! target vertex as a member of `B` covers every repetition through it.

use std::collections::VecDeque;

use crate::graphs::Graph;

use super::Colour;

pub(crate) const UNCOLOURED: Colour = Colour::MAX;

pub(crate) struct SquareSearch<'g> {
    g: &'g Graph,
    used: Vec<bool>,
    first: VecDeque<usize>,
    second: VecDeque<usize>,
}

impl<'g> SquareSearch<'g> {
    pub(crate) fn new(g: &'g Graph) -> Self {
        SquareSearch {
            g,
            used: vec![false; g.n()],
            first: VecDeque::new(),
            second: VecDeque::new(),
        }
    }

    /// A repetitively coloured simple path through `v`, using only coloured
    /// vertices. Returned as the vertex sequence; its half length is
    /// `len / 2`.
    pub(crate) fn through(&mut self, colours: &[Colour], v: usize) -> Option<Vec<usize>> {
        let c = colours[v];
        if c == UNCOLOURED {
            return None;
        }
        for p in 0..self.g.n() {
            if p == v || colours[p] != c {
                continue;
            }
            self.first.push_back(p);
            self.second.push_back(v);
            self.used[p] = true;
            self.used[v] = true;
            let found = self.grow_right(colours);
            if found {
                let path = self
                    .first
                    .iter()
                    .chain(self.second.iter())
                    .copied()
                    .collect();
                self.reset();
                return Some(path);
            }
            self.used[p] = false;
            self.used[v] = false;
            self.first.clear();
            self.second.clear();
        }
        None
    }

    fn reset(&mut self) {
        for &x in self.first.iter().chain(self.second.iter()) {
            self.used[x] = false;
        }
        self.first.clear();
        self.second.clear();
    }

    fn closes(&self) -> bool {
        self.g
            .has_edge(*self.first.back().unwrap(), *self.second.front().unwrap())
    }

    fn grow_right(&mut self, colours: &[Colour]) -> bool {
        if self.closes() {
            return true;
        }
        let g = self.g;
        let (a, b) = (*self.first.back().unwrap(), *self.second.back().unwrap());
        for &x in g.neighbors(a) {
            if self.used[x] || colours[x] == UNCOLOURED {
                continue;
            }
            for &y in g.neighbors(b) {
                if self.used[y] || y == x || colours[y] != colours[x] {
                    continue;
                }
                self.first.push_back(x);
                self.second.push_back(y);
                self.used[x] = true;
                self.used[y] = true;
                if self.grow_right(colours) {
                    return true;
                }
                self.used[x] = false;
                self.used[y] = false;
                self.first.pop_back();
                self.second.pop_back();
            }
        }
        self.grow_left(colours)
    }

    fn grow_left(&mut self, colours: &[Colour]) -> bool {
        let g = self.g;
        let (a, b) = (*self.first.front().unwrap(), *self.second.front().unwrap());
        for &x in g.neighbors(a) {
            if self.used[x] || colours[x] == UNCOLOURED {
                continue;
            }
            for &y in g.neighbors(b) {
                if self.used[y] || y == x || colours[y] != colours[x] {
                    continue;
                }
                self.first.push_front(x);
                self.second.push_front(y);
                self.used[x] = true;
                self.used[y] = true;
                if self.closes() || self.grow_left(colours) {
                    return true;
                }
                self.used[x] = false;
                self.used[y] = false;
                self.first.pop_front();
                self.second.pop_front();
            }
        }
        false
    }
}
