//! Coxeter graphs: named families, a line-based text format, and the
//! adjacency/connectivity queries the marine model needs.

use std::collections::BTreeMap;
use std::fmt;

use serde::{Deserialize, Serialize};

/// Order of a bond between two generators. Absent bonds mean order 2
/// (commuting generators); stored bonds are always >= 3.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Bond {
    Finite(u32),
    Infinite,
}

impl fmt::Display for Bond {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Bond::Finite(m) => write!(f, "{m}"),
            Bond::Infinite => write!(f, "inf"),
        }
    }
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum GraphError {
    #[error("line {line}: {message}")]
    Parse { line: usize, message: String },
    #[error("unknown vertex {0:?}")]
    UnknownVertex(String),
    #[error("invalid rank {rank} for family {family}: {reason}")]
    InvalidRank {
        family: String,
        rank: usize,
        reason: String,
    },
}

/// A simple edge-labeled graph on named generators. Vertex order is the
/// declaration order and is significant for serialization.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CoxeterGraph {
    vertices: Vec<String>,
    bonds: BTreeMap<(usize, usize), Bond>,
}

impl CoxeterGraph {
    pub fn new() -> CoxeterGraph {
        CoxeterGraph {
            vertices: Vec::new(),
            bonds: BTreeMap::new(),
        }
    }

    pub fn add_vertex(&mut self, id: impl Into<String>) -> usize {
        let id = id.into();
        assert!(!self.vertices.contains(&id), "duplicate vertex {id:?}");
        self.vertices.push(id);
        self.vertices.len() - 1
    }

    pub fn add_bond(&mut self, a: usize, b: usize, m: Bond) {
        assert!(a != b, "self-bonds are not allowed");
        assert!(a < self.vertices.len() && b < self.vertices.len());
        if let Bond::Finite(order) = m {
            assert!(order >= 3, "stored bond orders must be >= 3, got {order}");
        }
        self.bonds.insert((a.min(b), a.max(b)), m);
    }

    pub fn vertex_count(&self) -> usize {
        self.vertices.len()
    }

    pub fn vertex_name(&self, v: usize) -> &str {
        &self.vertices[v]
    }

    pub fn vertex_names(&self) -> &[String] {
        &self.vertices
    }

    pub fn vertex_index(&self, name: &str) -> Option<usize> {
        self.vertices.iter().position(|v| v == name)
    }

    pub fn bond(&self, a: usize, b: usize) -> Option<Bond> {
        self.bonds.get(&(a.min(b), a.max(b))).copied()
    }

    pub fn adjacent(&self, a: usize, b: usize) -> bool {
        self.bond(a, b).is_some()
    }

    pub fn bonds(&self) -> impl Iterator<Item = (usize, usize, Bond)> + '_ {
        self.bonds.iter().map(|(&(a, b), &m)| (a, b, m))
    }

    pub fn neighbors(&self, v: usize) -> Vec<usize> {
        (0..self.vertex_count())
            .filter(|&u| u != v && self.adjacent(u, v))
            .collect()
    }

    /// Connected components of the subgraph induced by `subset`, each
    /// sorted, the list ordered by smallest member.
    pub fn connected_components(&self, subset: &[usize]) -> Vec<Vec<usize>> {
        for &v in subset {
            assert!(v < self.vertex_count(), "vertex index {v} out of range");
        }
        let mut remaining: std::collections::BTreeSet<usize> = subset.iter().copied().collect();
        let mut components = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            remaining.remove(&start);
            let mut comp = vec![start];
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                let found: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&u| self.adjacent(u, v))
                    .collect();
                for u in found {
                    remaining.remove(&u);
                    comp.push(u);
                    frontier.push(u);
                }
            }
            comp.sort_unstable();
            components.push(comp);
        }
        components
    }

    /// Parse the line format: `v <id>` declares a vertex, `e <id> <id> <m>`
    /// a bond with `m >= 3` or `inf`; `#` starts a comment.
    pub fn parse(text: &str) -> Result<CoxeterGraph, GraphError> {
        let mut graph = CoxeterGraph::new();
        for (lineno, raw) in text.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let mut words = content.split_whitespace();
            let err = |message: String| GraphError::Parse { line, message };
            match words.next() {
                Some("v") => {
                    let id = words
                        .next()
                        .ok_or_else(|| err("vertex line needs an identifier".into()))?;
                    if words.next().is_some() {
                        return Err(err("trailing tokens after vertex id".into()));
                    }
                    if graph.vertex_index(id).is_some() {
                        return Err(err(format!("duplicate vertex {id:?}")));
                    }
                    graph.add_vertex(id);
                }
                Some("e") => {
                    let a = words
                        .next()
                        .ok_or_else(|| err("edge needs two vertices".into()))?;
                    let b = words
                        .next()
                        .ok_or_else(|| err("edge needs two vertices".into()))?;
                    let m = words
                        .next()
                        .ok_or_else(|| err("edge needs a bond order".into()))?;
                    if words.next().is_some() {
                        return Err(err("trailing tokens after bond order".into()));
                    }
                    let ai = graph
                        .vertex_index(a)
                        .ok_or_else(|| err(format!("unknown vertex {a:?}")))?;
                    let bi = graph
                        .vertex_index(b)
                        .ok_or_else(|| err(format!("unknown vertex {b:?}")))?;
                    if ai == bi {
                        return Err(err(format!("self-bond on {a:?}")));
                    }
                    let bond = if m == "inf" {
                        Bond::Infinite
                    } else {
                        let order: u32 = m
                            .parse()
                            .map_err(|_| err(format!("bad bond order {m:?}")))?;
                        if order < 3 {
                            return Err(err(format!(
                                "bond order {order} < 3 (omit the edge for commuting generators)"
                            )));
                        }
                        Bond::Finite(order)
                    };
                    graph.add_bond(ai, bi, bond);
                }
                Some(other) => return Err(err(format!("unknown directive {other:?}"))),
                None => unreachable!(),
            }
        }
        Ok(graph)
    }

    /// Inverse of [`CoxeterGraph::parse`].
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for v in &self.vertices {
            out.push_str(&format!("v {v}\n"));
        }
        for (a, b, m) in self.bonds() {
            out.push_str(&format!(
                "e {} {} {}\n",
                self.vertices[a], self.vertices[b], m
            ));
        }
        out
    }
}

impl Default for CoxeterGraph {
    fn default() -> Self {
        CoxeterGraph::new()
    }
}

/// The named Coxeter graph families the library can construct directly.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Family {
    A,
    B,
    D,
    E6,
    E7,
    E8,
    F4,
    H3,
    H4,
    /// Dihedral family; the parameter is the bond order `m(s1, s2)`.
    I2(u32),
    AffineA,
    AffineB,
    AffineC,
    AffineD,
    AffineE6,
    AffineE7,
    AffineE8,
    Star,
    Cycle,
}

impl Family {
    /// Parse CLI-style family names like `A`, `E7`, `I2(7)`, `affineD`.
    pub fn parse(name: &str) -> Option<Family> {
        Some(match name {
            "A" => Family::A,
            "B" | "C" => Family::B,
            "D" => Family::D,
            "E6" => Family::E6,
            "E7" => Family::E7,
            "E8" => Family::E8,
            "F4" => Family::F4,
            "H3" => Family::H3,
            "H4" => Family::H4,
            "affineA" => Family::AffineA,
            "affineB" => Family::AffineB,
            "affineC" => Family::AffineC,
            "affineD" => Family::AffineD,
            "affineE6" => Family::AffineE6,
            "affineE7" => Family::AffineE7,
            "affineE8" => Family::AffineE8,
            "star" => Family::Star,
            "cycle" => Family::Cycle,
            _ => {
                let inner = name.strip_prefix("I2(")?.strip_suffix(')')?;
                Family::I2(inner.parse().ok()?)
            }
        })
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::A => write!(f, "A"),
            Family::B => write!(f, "B"),
            Family::D => write!(f, "D"),
            Family::E6 => write!(f, "E6"),
            Family::E7 => write!(f, "E7"),
            Family::E8 => write!(f, "E8"),
            Family::F4 => write!(f, "F4"),
            Family::H3 => write!(f, "H3"),
            Family::H4 => write!(f, "H4"),
            Family::I2(m) => write!(f, "I2({m})"),
            Family::AffineA => write!(f, "affineA"),
            Family::AffineB => write!(f, "affineB"),
            Family::AffineC => write!(f, "affineC"),
            Family::AffineD => write!(f, "affineD"),
            Family::AffineE6 => write!(f, "affineE6"),
            Family::AffineE7 => write!(f, "affineE7"),
            Family::AffineE8 => write!(f, "affineE8"),
            Family::Star => write!(f, "star"),
            Family::Cycle => write!(f, "cycle"),
        }
    }
}

fn rank_error(family: Family, rank: usize, reason: &str) -> GraphError {
    GraphError::InvalidRank {
        family: family.to_string(),
        rank,
        reason: reason.into(),
    }
}

/// Build the standard Coxeter graph of a named family. Finite families get
/// vertices `1..=rank`; affine families get `0..=rank`.
pub fn named_graph(family: Family, rank: usize) -> Result<CoxeterGraph, GraphError> {
    let mut g = CoxeterGraph::new();
    let path = |g: &mut CoxeterGraph, ids: &[usize], order: Bond| {
        for pair in ids.windows(2) {
            g.add_bond(pair[0], pair[1], order);
        }
    };
    match family {
        Family::A => {
            if rank < 1 {
                return Err(rank_error(family, rank, "needs rank >= 1"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            path(&mut g, &ids, Bond::Finite(3));
        }
        Family::B => {
            if rank < 2 {
                return Err(rank_error(family, rank, "needs rank >= 2"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            path(&mut g, &ids[..rank - 1], Bond::Finite(3));
            g.add_bond(ids[rank - 2], ids[rank - 1], Bond::Finite(4));
        }
        Family::D => {
            if rank < 4 {
                return Err(rank_error(family, rank, "needs rank >= 4"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            path(&mut g, &ids[..rank - 1], Bond::Finite(3));
            g.add_bond(ids[rank - 3], ids[rank - 1], Bond::Finite(3));
        }
        Family::E6 | Family::E7 | Family::E8 => {
            let want = match family {
                Family::E6 => 6,
                Family::E7 => 7,
                _ => 8,
            };
            if rank != want {
                return Err(rank_error(family, rank, "rank is fixed by the family"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            // Bourbaki labels: chain 1-3-4-5-...-rank, with 2 attached to 4.
            g.add_bond(ids[0], ids[2], Bond::Finite(3));
            g.add_bond(ids[1], ids[3], Bond::Finite(3));
            path(&mut g, &ids[2..], Bond::Finite(3));
        }
        Family::F4 => {
            if rank != 4 {
                return Err(rank_error(family, rank, "rank is fixed by the family"));
            }
            let ids: Vec<usize> = (1..=4).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[0], ids[1], Bond::Finite(3));
            g.add_bond(ids[1], ids[2], Bond::Finite(4));
            g.add_bond(ids[2], ids[3], Bond::Finite(3));
        }
        Family::H3 | Family::H4 => {
            let want = if family == Family::H3 { 3 } else { 4 };
            if rank != want {
                return Err(rank_error(family, rank, "rank is fixed by the family"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[0], ids[1], Bond::Finite(5));
            path(&mut g, &ids[1..], Bond::Finite(3));
        }
        Family::I2(m) => {
            if rank != 2 {
                return Err(rank_error(family, rank, "dihedral groups have rank 2"));
            }
            if m < 3 {
                return Err(rank_error(family, rank, "I2(m) needs m >= 3"));
            }
            let a = g.add_vertex("1");
            let b = g.add_vertex("2");
            g.add_bond(a, b, Bond::Finite(m));
        }
        Family::AffineA => {
            if rank < 1 {
                return Err(rank_error(family, rank, "needs rank >= 1"));
            }
            let ids: Vec<usize> = (0..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            if rank == 1 {
                g.add_bond(ids[0], ids[1], Bond::Infinite);
            } else {
                path(&mut g, &ids, Bond::Finite(3));
                g.add_bond(ids[0], ids[rank], Bond::Finite(3));
            }
        }
        Family::AffineB => {
            if rank < 3 {
                return Err(rank_error(family, rank, "needs rank >= 3"));
            }
            let ids: Vec<usize> = (0..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[0], ids[2], Bond::Finite(3));
            g.add_bond(ids[1], ids[2], Bond::Finite(3));
            path(&mut g, &ids[2..rank], Bond::Finite(3));
            g.add_bond(ids[rank - 1], ids[rank], Bond::Finite(4));
        }
        Family::AffineC => {
            if rank < 2 {
                return Err(rank_error(family, rank, "needs rank >= 2"));
            }
            let ids: Vec<usize> = (0..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[0], ids[1], Bond::Finite(4));
            path(&mut g, &ids[1..rank], Bond::Finite(3));
            g.add_bond(ids[rank - 1], ids[rank], Bond::Finite(4));
        }
        Family::AffineD => {
            if rank < 4 {
                return Err(rank_error(family, rank, "needs rank >= 4"));
            }
            let ids: Vec<usize> = (0..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[0], ids[2], Bond::Finite(3));
            g.add_bond(ids[1], ids[2], Bond::Finite(3));
            path(&mut g, &ids[2..=(rank - 2)], Bond::Finite(3));
            g.add_bond(ids[rank - 2], ids[rank - 1], Bond::Finite(3));
            g.add_bond(ids[rank - 2], ids[rank], Bond::Finite(3));
        }
        Family::AffineE6 => {
            if rank != 6 {
                return Err(rank_error(family, rank, "rank is fixed by the family"));
            }
            let ids: Vec<usize> = (0..=6).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[1], ids[3], Bond::Finite(3));
            g.add_bond(ids[2], ids[4], Bond::Finite(3));
            path(&mut g, &[ids[3], ids[4], ids[5], ids[6]], Bond::Finite(3));
            g.add_bond(ids[0], ids[2], Bond::Finite(3));
        }
        Family::AffineE7 => {
            if rank != 7 {
                return Err(rank_error(family, rank, "rank is fixed by the family"));
            }
            let ids: Vec<usize> = (0..=7).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[0], ids[1], Bond::Finite(3));
            g.add_bond(ids[1], ids[3], Bond::Finite(3));
            g.add_bond(ids[2], ids[4], Bond::Finite(3));
            path(
                &mut g,
                &[ids[3], ids[4], ids[5], ids[6], ids[7]],
                Bond::Finite(3),
            );
        }
        Family::AffineE8 => {
            if rank != 8 {
                return Err(rank_error(family, rank, "rank is fixed by the family"));
            }
            let ids: Vec<usize> = (0..=8).map(|i| g.add_vertex(i.to_string())).collect();
            g.add_bond(ids[1], ids[3], Bond::Finite(3));
            g.add_bond(ids[2], ids[4], Bond::Finite(3));
            path(
                &mut g,
                &[ids[3], ids[4], ids[5], ids[6], ids[7], ids[8], ids[0]],
                Bond::Finite(3),
            );
        }
        Family::Star => {
            if rank < 2 {
                return Err(rank_error(family, rank, "needs rank >= 2"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            for &leaf in &ids[1..] {
                g.add_bond(ids[0], leaf, Bond::Finite(3));
            }
        }
        Family::Cycle => {
            if rank < 3 {
                return Err(rank_error(family, rank, "needs rank >= 3"));
            }
            let ids: Vec<usize> = (1..=rank).map(|i| g.add_vertex(i.to_string())).collect();
            path(&mut g, &ids, Bond::Finite(3));
            g.add_bond(ids[0], ids[rank - 1], Bond::Finite(3));
        }
    }
    Ok(g)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn type_a_is_a_path() {
        let g = named_graph(Family::A, 4).unwrap();
        assert_eq!(g.vertex_names(), &["1", "2", "3", "4"]);
        assert_eq!(g.bonds().count(), 3);
        assert!(g
            .bonds()
            .all(|(a, b, m)| b == a + 1 && m == Bond::Finite(3)));
    }

    #[test]
    fn type_a_rank_one_has_no_bonds() {
        let g = named_graph(Family::A, 1).unwrap();
        assert_eq!(g.vertex_count(), 1);
        assert_eq!(g.bonds().count(), 0);
    }

    #[test]
    fn star_four_is_d4() {
        let star = named_graph(Family::Star, 4).unwrap();
        let center = star.vertex_index("1").unwrap();
        for leaf in ["2", "3", "4"] {
            let l = star.vertex_index(leaf).unwrap();
            assert_eq!(star.bond(center, l), Some(Bond::Finite(3)));
        }
        assert_eq!(star.bonds().count(), 3);
    }

    #[test]
    fn invalid_ranks_rejected() {
        assert!(named_graph(Family::D, 3).is_err());
        assert!(named_graph(Family::Cycle, 2).is_err());
        assert!(named_graph(Family::E6, 7).is_err());
        assert!(named_graph(Family::I2(2), 2).is_err());
    }

    #[test]
    fn parse_smallest_edge() {
        let g = CoxeterGraph::parse("v 1\nv 2\ne 1 2 3").unwrap();
        assert_eq!(g.vertex_count(), 2);
        assert_eq!(g.bond(0, 1), Some(Bond::Finite(3)));
    }

    #[test]
    fn parse_infinite_bond() {
        let g = CoxeterGraph::parse("v 1\nv 2\ne 1 2 inf").unwrap();
        assert_eq!(g.bond(0, 1), Some(Bond::Infinite));
    }

    #[test]
    fn parse_errors_carry_line_numbers() {
        let dup = CoxeterGraph::parse("v 1\nv 1").unwrap_err();
        assert_eq!(
            dup,
            GraphError::Parse {
                line: 2,
                message: "duplicate vertex \"1\"".into()
            }
        );
        assert!(CoxeterGraph::parse("v 1\ne 1 2 3").is_err());
        assert!(CoxeterGraph::parse("v 1\nv 2\ne 1 2 2").is_err());
    }

    #[test]
    fn named_graphs_round_trip_through_text() {
        for (fam, rank) in [
            (Family::D, 5),
            (Family::AffineA, 4),
            (Family::F4, 4),
            (Family::B, 3),
            (Family::AffineD, 6),
        ] {
            let g = named_graph(fam, rank).unwrap();
            assert_eq!(CoxeterGraph::parse(&g.to_text()).unwrap(), g);
        }
    }

    #[test]
    fn components_split_induced_path() {
        let g = named_graph(Family::A, 5).unwrap();
        let comps = g.connected_components(&[0, 1, 3]);
        assert_eq!(comps, vec![vec![0, 1], vec![3]]);
        assert!(g.connected_components(&[]).is_empty());
    }

    #[test]
    fn star_leaves_commute() {
        let g = named_graph(Family::Star, 4).unwrap();
        let comps = g.connected_components(&[1, 2, 3]);
        assert_eq!(comps, vec![vec![1], vec![2], vec![3]]);
    }

    #[test]
    fn family_names_parse() {
        assert_eq!(Family::parse("I2(7)"), Some(Family::I2(7)));
        assert_eq!(Family::parse("affineE8"), Some(Family::AffineE8));
        assert_eq!(Family::parse("bogus"), None);
    }
}
