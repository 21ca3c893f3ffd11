use std::fmt;
use std::path::PathBuf;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use super::{io, lex_product, Graph, GraphError};

/// Part sizes `n_1, ..., n_k` of a complete multipartite graph.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct MultipartiteSpec {
    part_sizes: Vec<usize>,
}

impl MultipartiteSpec {
    pub fn new(part_sizes: Vec<usize>) -> Result<Self, GraphError> {
        if part_sizes.is_empty() {
            return Err(GraphError::BadParameter(
                "multipartite graph needs at least one part".into(),
            ));
        }
        if part_sizes.contains(&0) {
            return Err(GraphError::BadParameter(
                "multipartite parts must be nonempty".into(),
            ));
        }
        Ok(MultipartiteSpec { part_sizes })
    }

    pub fn part_sizes(&self) -> &[usize] {
        &self.part_sizes
    }

    pub fn order(&self) -> usize {
        self.part_sizes.iter().sum()
    }

    pub fn largest_part(&self) -> usize {
        self.part_sizes.iter().copied().max().unwrap_or(0)
    }

    /// Vertices are numbered part by part, in the given part order.
    pub fn graph(&self) -> Graph {
        let mut part_of = Vec::with_capacity(self.order());
        for (i, &size) in self.part_sizes.iter().enumerate() {
            part_of.extend(std::iter::repeat_n(i, size));
        }
        let n = part_of.len();
        let adj = (0..n)
            .map(|u| (0..n).filter(|&v| part_of[u] != part_of[v]).collect())
            .collect();
        Graph::from_sorted_adjacency(adj)
    }
}

/// A graph description in the family DSL:
/// `K<n> | E<n> | P<n> | C<n> | S<n> | K<n1>,<n2>[,...] | lex(<d>,<d>) | g6:<graph6> | file:<path>`.
///
/// Family letters are case-insensitive; the graph6 payload and file path are
/// taken verbatim. `S<n>` is the star with `n` leaves.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Family {
    Complete(usize),
    Empty(usize),
    Path(usize),
    Cycle(usize),
    Star(usize),
    Multipartite(MultipartiteSpec),
    Lex(Box<Family>, Box<Family>),
    Graph6(String),
    File(PathBuf),
}

impl Family {
    pub fn build(&self) -> Result<Graph, GraphError> {
        Ok(match self {
            Family::Complete(n) => MultipartiteSpec::new(vec![1; *n])?.graph(),
            Family::Empty(n) => Graph::empty(*n),
            Family::Path(n) => Graph::from_edges(*n, (1..*n).map(|i| (i - 1, i)))?,
            Family::Cycle(n) => Graph::from_edges(*n, (0..*n).map(|i| (i, (i + 1) % n)))?,
            Family::Star(n) => Graph::from_edges(n + 1, (1..=*n).map(|i| (0, i)))?,
            Family::Multipartite(spec) => spec.graph(),
            Family::Lex(g, h) => lex_product(&g.build()?, &h.build()?)?.into_graph(),
            Family::Graph6(s) => io::from_graph6(s)?,
            Family::File(path) => io::read_graph_file(path)?,
        })
    }

    /// The multipartite spec if this descriptor names a complete
    /// multipartite graph directly (complete graphs and stars included).
    pub fn multipartite_spec(&self) -> Option<MultipartiteSpec> {
        match self {
            Family::Complete(n) => MultipartiteSpec::new(vec![1; *n]).ok(),
            Family::Star(n) if *n >= 1 => MultipartiteSpec::new(vec![1, *n]).ok(),
            Family::Star(0) => MultipartiteSpec::new(vec![1]).ok(),
            Family::Empty(n) => MultipartiteSpec::new(vec![*n]).ok(),
            Family::Multipartite(spec) => Some(spec.clone()),
            _ => None,
        }
    }
}

pub fn make_family(descriptor: &str) -> Result<Graph, GraphError> {
    descriptor.parse::<Family>()?.build()
}

fn parse_count(desc: &str, digits: &str) -> Result<usize, GraphError> {
    if digits.is_empty() || !digits.bytes().all(|b| b.is_ascii_digit()) {
        return Err(GraphError::UnknownFamily(desc.to_string()));
    }
    digits
        .parse()
        .map_err(|_| GraphError::BadParameter(format!("`{digits}` in `{desc}` is too large")))
}

/// Positions of the commas at parenthesis depth zero, or `None` if the
/// parentheses do not balance.
fn top_level_commas(inner: &str) -> Option<Vec<usize>> {
    let mut depth = 0i32;
    let mut commas = Vec::new();
    for (i, ch) in inner.char_indices() {
        match ch {
            '(' => depth += 1,
            ')' => depth -= 1,
            ',' if depth == 0 => commas.push(i),
            _ => {}
        }
        if depth < 0 {
            return None;
        }
    }
    (depth == 0).then_some(commas)
}

fn strip_prefix_ci<'a>(s: &'a str, prefix: &str) -> Option<&'a str> {
    let head = s.get(..prefix.len())?;
    head.eq_ignore_ascii_case(prefix)
        .then(|| &s[prefix.len()..])
}

impl FromStr for Family {
    type Err = GraphError;

    fn from_str(raw: &str) -> Result<Self, GraphError> {
        let desc = raw.trim();
        if let Some(payload) = strip_prefix_ci(desc, "g6:") {
            return Ok(Family::Graph6(payload.trim().to_string()));
        }
        if let Some(path) = strip_prefix_ci(desc, "file:") {
            return Ok(Family::File(PathBuf::from(path)));
        }
        if let Some(rest) = strip_prefix_ci(desc, "lex(") {
            let inner = rest
                .strip_suffix(')')
                .ok_or_else(|| GraphError::UnknownFamily(desc.to_string()))?;
            // Multipartite factors contain commas too, so try every split
            // and take the first one where both sides parse.
            let commas = top_level_commas(inner)
                .ok_or_else(|| GraphError::UnknownFamily(desc.to_string()))?;
            let mut last_err = GraphError::UnknownFamily(desc.to_string());
            for i in commas {
                match (inner[..i].parse(), inner[i + 1..].parse()) {
                    (Ok(g), Ok(h)) => return Ok(Family::Lex(Box::new(g), Box::new(h))),
                    (Err(e), _) | (_, Err(e)) => last_err = e,
                }
            }
            return Err(last_err);
        }

        let mut chars = desc.chars();
        let letter = chars
            .next()
            .ok_or_else(|| GraphError::UnknownFamily(desc.to_string()))?
            .to_ascii_uppercase();
        let rest = chars.as_str();
        let family = match letter {
            'K' if rest.contains(',') => {
                let sizes = rest
                    .split(',')
                    .map(|part| parse_count(desc, part.trim()))
                    .collect::<Result<Vec<_>, _>>()?;
                Family::Multipartite(MultipartiteSpec::new(sizes)?)
            }
            'K' => Family::Complete(parse_count(desc, rest)?),
            'E' => Family::Empty(parse_count(desc, rest)?),
            'P' => Family::Path(parse_count(desc, rest)?),
            'C' => Family::Cycle(parse_count(desc, rest)?),
            'S' => Family::Star(parse_count(desc, rest)?),
            _ => return Err(GraphError::UnknownFamily(desc.to_string())),
        };
        match family {
            Family::Complete(0) | Family::Empty(0) | Family::Path(0) => Err(
                GraphError::BadParameter(format!("`{desc}` needs at least one vertex")),
            ),
            Family::Cycle(n) if n < 3 => Err(GraphError::BadParameter(format!(
                "cycle `{desc}` needs at least 3 vertices"
            ))),
            f => Ok(f),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Complete(n) => write!(f, "K{n}"),
            Family::Empty(n) => write!(f, "E{n}"),
            Family::Path(n) => write!(f, "P{n}"),
            Family::Cycle(n) => write!(f, "C{n}"),
            Family::Star(n) => write!(f, "S{n}"),
            Family::Multipartite(spec) => {
                f.write_str("K")?;
                for (i, s) in spec.part_sizes().iter().enumerate() {
                    if i > 0 {
                        f.write_str(",")?;
                    }
                    write!(f, "{s}")?;
                }
                Ok(())
            }
            Family::Lex(g, h) => write!(f, "lex({g},{h})"),
            Family::Graph6(s) => write!(f, "g6:{s}"),
            Family::File(p) => write!(f, "file:{}", p.display()),
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn family_examples() {
        let k3 = make_family("K3").unwrap();
        assert_eq!((k3.n(), k3.edge_count()), (3, 3));
        let s2 = make_family("S2").unwrap();
        assert_eq!((s2.n(), s2.edge_count()), (3, 2));
        assert_eq!(s2.neighbors(0), &[1, 2]);
        let k23 = make_family("K2,3").unwrap();
        assert_eq!((k23.n(), k23.edge_count()), (5, 6));
        assert!(!k23.has_edge(0, 1) && k23.has_edge(1, 2) && !k23.has_edge(2, 4));
        let c5 = make_family("c5").unwrap();
        assert_eq!((c5.n(), c5.edge_count()), (5, 5));
        assert_eq!(make_family("E4").unwrap().edge_count(), 0);
        assert_eq!(make_family("P4").unwrap().edge_count(), 3);
        assert_eq!(make_family("S0").unwrap().n(), 1);
        assert_eq!(make_family("k1,1,2").unwrap().edge_count(), 5);
    }

    #[test]
    fn family_errors() {
        assert!(matches!(
            make_family("Q3"),
            Err(GraphError::UnknownFamily(_))
        ));
        assert!(matches!(make_family(""), Err(GraphError::UnknownFamily(_))));
        assert!(matches!(
            make_family("K"),
            Err(GraphError::UnknownFamily(_))
        ));
        assert!(matches!(
            make_family("Kx"),
            Err(GraphError::UnknownFamily(_))
        ));
        assert!(matches!(
            make_family("C2"),
            Err(GraphError::BadParameter(_))
        ));
        assert!(matches!(
            make_family("K0"),
            Err(GraphError::BadParameter(_))
        ));
        assert!(matches!(
            make_family("K2,0"),
            Err(GraphError::BadParameter(_))
        ));
        assert!(matches!(
            make_family("lex(K2)"),
            Err(GraphError::UnknownFamily(_))
        ));
        assert!(matches!(
            make_family("lex(K2,K3"),
            Err(GraphError::UnknownFamily(_))
        ));
    }

    #[test]
    fn nested_lex_and_display_round_trip() {
        for desc in [
            "lex(S2,P3)",
            "lex(K2,3,lex(K2,E2))",
            "K1,2,3",
            "g6:Bw",
            "C7",
            "S4",
        ] {
            let f: Family = desc.parse().unwrap();
            assert_eq!(f.to_string(), desc);
        }
        let f: Family = "LEX(k2,3,lex(K2,E2))".parse().unwrap();
        assert_eq!(f.build().unwrap().n(), 20);
        // graph6 payload is case-sensitive
        assert_eq!(make_family("G6:Bw").unwrap().edge_count(), 3);
    }

    #[test]
    fn multipartite_spec_lookup() {
        let spec = |s: &str| s.parse::<Family>().unwrap().multipartite_spec();
        assert_eq!(spec("K3").unwrap().part_sizes(), &[1, 1, 1]);
        assert_eq!(spec("S3").unwrap().part_sizes(), &[1, 3]);
        assert_eq!(spec("E2").unwrap().part_sizes(), &[2]);
        assert!(spec("P4").is_none());
    }
}
