//! The doubled-graph construction: cosets with minimal element `w` in `W`
//! become identity-minimal cosets of a larger group with restricted
//! generators.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use crate::graph::CoxeterGraph;
use crate::ocean::{is_lexmin_avoiding, Filling, Ocean};
use crate::profile::AscentProfile;

/// Result of doubling a profile: the glued graph, the embeddings of the
/// two ascent sets, and the barred avoid-sets.
#[derive(Debug, Clone)]
pub struct DoubledGraph {
    pub graph: Arc<CoxeterGraph>,
    /// Left ascent of the original profile -> doubled-graph vertex.
    pub phi_left: BTreeMap<usize, usize>,
    /// Right ascent of the original profile -> doubled-graph vertex.
    pub phi_right: BTreeMap<usize, usize>,
    pub x_left: BTreeSet<usize>,
    pub x_right: BTreeSet<usize>,
}

/// Build the doubled graph of a profile: two copies of the Coxeter graph
/// restricted to the ascent sets, with each small-ascent pair identified.
/// `x_left`/`x_right` are avoid-sets on the original generators and are
/// carried through the embeddings.
pub fn doubled_graph(
    profile: &AscentProfile,
    x_left: &BTreeSet<usize>,
    x_right: &BTreeSet<usize>,
) -> DoubledGraph {
    let original = &profile.graph;
    let mut graph = CoxeterGraph::new();
    let mut phi_left = BTreeMap::new();
    let mut phi_right = BTreeMap::new();

    for &s in &profile.left_ascents {
        let v = graph.add_vertex(format!("L{}", original.vertex_name(s)));
        phi_left.insert(s, v);
    }
    for &t in &profile.right_ascents {
        match profile.small_map.get(&t) {
            // Identified with its conjugate left ascent.
            Some(&s) => {
                phi_right.insert(t, phi_left[&s]);
            }
            None => {
                let v = graph.add_vertex(format!("R{}", original.vertex_name(t)));
                phi_right.insert(t, v);
            }
        }
    }

    let lefts: Vec<usize> = profile.left_ascents.iter().copied().collect();
    for (i, &s) in lefts.iter().enumerate() {
        for &s2 in &lefts[i + 1..] {
            if let Some(m) = original.bond(s, s2) {
                graph.add_bond(phi_left[&s], phi_left[&s2], m);
            }
        }
    }
    let rights: Vec<usize> = profile.right_ascents.iter().copied().collect();
    for (i, &t) in rights.iter().enumerate() {
        for &t2 in &rights[i + 1..] {
            if let Some(m) = original.bond(t, t2) {
                graph.add_bond(phi_right[&t], phi_right[&t2], m);
            }
        }
    }

    // Ascents on one side only may not act on the other.
    let left_image: BTreeSet<usize> = phi_left.values().copied().collect();
    let right_image: BTreeSet<usize> = phi_right.values().copied().collect();
    let x_left_bar: BTreeSet<usize> = x_left
        .iter()
        .map(|s| phi_left[s])
        .chain(right_image.difference(&left_image).copied())
        .collect();
    let x_right_bar: BTreeSet<usize> = x_right
        .iter()
        .map(|t| phi_right[t])
        .chain(left_image.difference(&right_image).copied())
        .collect();

    DoubledGraph {
        graph: Arc::new(graph),
        phi_left,
        phi_right,
        x_left: x_left_bar,
        x_right: x_right_bar,
    }
}

/// Number of parabolic double cosets with minimal element `e` over `graph`
/// whose presentations avoid the given sets: counted as the avoiding
/// lex-minimal fillings of the identity ocean.
pub fn avoiding_identity_count(
    graph: Arc<CoxeterGraph>,
    x_left: &BTreeSet<usize>,
    x_right: &BTreeSet<usize>,
) -> u64 {
    let ocean = Ocean::build(AscentProfile::identity(graph.clone()));
    let allowed_left: Vec<usize> = (0..graph.vertex_count())
        .filter(|v| !x_left.contains(v))
        .collect();
    let allowed_right: Vec<usize> = (0..graph.vertex_count())
        .filter(|v| !x_right.contains(v))
        .collect();
    assert!(allowed_left.len() + allowed_right.len() < 40);
    let mut count = 0;
    for lm in 0u64..(1 << allowed_left.len()) {
        let left: BTreeSet<usize> = allowed_left
            .iter()
            .enumerate()
            .filter(|(b, _)| lm >> b & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        for rm in 0u64..(1 << allowed_right.len()) {
            let right: BTreeSet<usize> = allowed_right
                .iter()
                .enumerate()
                .filter(|(b, _)| rm >> b & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            let filling = Filling::new(left.clone(), right);
            if is_lexmin_avoiding(&ocean, &filling, x_left, x_right).unwrap() {
                count += 1;
            }
        }
    }
    count
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::perm::Permutation;

    fn names(g: &CoxeterGraph, set: &BTreeSet<usize>) -> BTreeSet<String> {
        set.iter().map(|&v| g.vertex_name(v).to_string()).collect()
    }

    #[test]
    fn doubling_13542() {
        let w = Permutation::parse("13542").unwrap();
        let profile = AscentProfile::from_permutation(&w);
        let d = doubled_graph(&profile, &BTreeSet::new(), &BTreeSet::new());
        // No small ascents: two disjoint restricted copies, S_3 x S_2 x S_2.
        assert_eq!(d.graph.vertex_count(), 4);
        assert_eq!(d.graph.bonds().count(), 1);
        assert_eq!(
            names(&d.graph, &d.x_left),
            ["R1", "R2"].map(String::from).into_iter().collect()
        );
        assert_eq!(
            names(&d.graph, &d.x_right),
            ["L1", "L3"].map(String::from).into_iter().collect()
        );
        // Sixteen avoiding cosets: every subset pair is distinct.
        assert_eq!(
            avoiding_identity_count(d.graph.clone(), &d.x_left, &d.x_right),
            16
        );
    }

    #[test]
    fn doubling_13425() {
        let w = Permutation::parse("13425").unwrap();
        let profile = AscentProfile::from_permutation(&w);
        let d = doubled_graph(&profile, &BTreeSet::new(), &BTreeSet::new());
        // L3 is identified with R2: path of three vertices plus two
        // isolated ones, S_4 x S_2 x S_2.
        assert_eq!(d.graph.vertex_count(), 5);
        assert_eq!(d.graph.bonds().count(), 2);
        assert_eq!(d.phi_left[&2], d.phi_right[&1]);
        assert_eq!(
            names(&d.graph, &d.x_left),
            ["R1", "R4"].map(String::from).into_iter().collect()
        );
        assert_eq!(
            names(&d.graph, &d.x_right),
            ["L1", "L4"].map(String::from).into_iter().collect()
        );
    }

    #[test]
    fn doubling_identity_recovers_graph() {
        let e = Permutation::identity(4);
        let profile = AscentProfile::from_permutation(&e);
        let d = doubled_graph(&profile, &BTreeSet::new(), &BTreeSet::new());
        assert_eq!(d.graph.vertex_count(), 3);
        assert_eq!(d.graph.bonds().count(), 2);
        assert!(d.x_left.is_empty() && d.x_right.is_empty());
        assert_eq!(d.phi_left, d.phi_right);
    }
}
