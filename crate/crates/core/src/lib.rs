//! Nonrepetitive (Thue) colourings of graphs and lexicographic products.
//!
//! - [`words`]: square detection, squarefree words and interleavings.
//! - [`graphs`]: simple graphs, named families, lexicographic products,
//!   independence and clique numbers, graph6 and edge-list I/O.
//! - [`colouring`]: verification, exact Thue chromatic numbers, and the
//!   constructive colourings.
//! - [`bounds`]: closed-form bounds, certificates and the lower-bound sweep.

pub mod bounds;
pub mod colouring;
pub mod graphs;
pub mod words;
