//! Ascent profiles: everything the marine model needs to know about a
//! group element, abstracted away from group arithmetic.

use std::collections::{BTreeMap, BTreeSet};
use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::graph::{named_graph, CoxeterGraph, Family};
use crate::perm::Permutation;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum ProfileError {
    #[error("ascent set contains unknown vertex index {0}")]
    UnknownVertex(usize),
    #[error("small-ascent map must send right ascents into left ascents ({0} -> {1})")]
    MapOutsideAscents(usize, usize),
    #[error("small-ascent map is not injective at {0}")]
    NotInjective(usize),
    #[error("bond mismatch: m({0},{1}) differs from m({2},{3})")]
    BondMismatch(usize, usize, usize, usize),
}

/// Left and right ascent sets of an element together with the conjugation
/// bijection on its small ascents. Vertices are indices into `graph`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "camelCase")]
pub struct AscentProfile {
    #[serde(with = "graph_as_text")]
    pub graph: Arc<CoxeterGraph>,
    pub left_ascents: BTreeSet<usize>,
    pub right_ascents: BTreeSet<usize>,
    /// Small right ascent `s` maps to the small left ascent `w s w^-1`.
    pub small_map: BTreeMap<usize, usize>,
}

mod graph_as_text {
    use super::*;
    use serde::de::Error;

    pub fn serialize<S: serde::Serializer>(
        graph: &Arc<CoxeterGraph>,
        ser: S,
    ) -> Result<S::Ok, S::Error> {
        ser.serialize_str(&graph.to_text())
    }

    pub fn deserialize<'de, D: serde::Deserializer<'de>>(
        de: D,
    ) -> Result<Arc<CoxeterGraph>, D::Error> {
        let text = String::deserialize(de)?;
        CoxeterGraph::parse(&text)
            .map(Arc::new)
            .map_err(D::Error::custom)
    }
}

impl AscentProfile {
    pub fn new(
        graph: Arc<CoxeterGraph>,
        left_ascents: BTreeSet<usize>,
        right_ascents: BTreeSet<usize>,
        small_map: BTreeMap<usize, usize>,
    ) -> Result<AscentProfile, ProfileError> {
        let profile = AscentProfile {
            graph,
            left_ascents,
            right_ascents,
            small_map,
        };
        profile.validate()?;
        Ok(profile)
    }

    fn validate(&self) -> Result<(), ProfileError> {
        let n = self.graph.vertex_count();
        for &v in self.left_ascents.iter().chain(&self.right_ascents) {
            if v >= n {
                return Err(ProfileError::UnknownVertex(v));
            }
        }
        let mut image = BTreeSet::new();
        for (&s, &t) in &self.small_map {
            if !self.right_ascents.contains(&s) || !self.left_ascents.contains(&t) {
                return Err(ProfileError::MapOutsideAscents(s, t));
            }
            if !image.insert(t) {
                return Err(ProfileError::NotInjective(t));
            }
        }
        // Conjugation preserves bond orders between small ascents.
        for (&s, &t) in &self.small_map {
            for (&s2, &t2) in &self.small_map {
                if s < s2 && self.graph.bond(s, s2) != self.graph.bond(t, t2) {
                    return Err(ProfileError::BondMismatch(s, s2, t, t2));
                }
            }
        }
        Ok(())
    }

    /// Profile of the identity: everything is a small ascent on both sides.
    pub fn identity(graph: Arc<CoxeterGraph>) -> AscentProfile {
        let all: BTreeSet<usize> = (0..graph.vertex_count()).collect();
        AscentProfile {
            graph,
            left_ascents: all.clone(),
            right_ascents: all.clone(),
            small_map: all.iter().map(|&v| (v, v)).collect(),
        }
    }

    /// Profile of a permutation over the type A path graph. Generator
    /// `s_j` is graph vertex `j - 1`.
    pub fn from_permutation(w: &Permutation) -> AscentProfile {
        let n = w.n();
        let graph = Arc::new(named_graph(Family::A, n.max(2) - 1).unwrap());
        let to_idx = |j: usize| j - 1;
        AscentProfile {
            graph,
            left_ascents: w.left_ascents().into_iter().map(to_idx).collect(),
            right_ascents: w.right_ascents().into_iter().map(to_idx).collect(),
            small_map: w
                .small_right_ascents()
                .into_iter()
                .map(|j| (to_idx(j), to_idx(w.small_ascent_value(j))))
                .collect(),
        }
    }

    pub fn is_small_right(&self, v: usize) -> bool {
        self.small_map.contains_key(&v)
    }

    pub fn is_small_left(&self, v: usize) -> bool {
        self.small_map.values().any(|&t| t == v)
    }

    /// Inverse of the small-ascent map: left vertex back to right vertex.
    pub fn small_map_inv(&self, left: usize) -> Option<usize> {
        self.small_map
            .iter()
            .find(|(_, &t)| t == left)
            .map(|(&s, _)| s)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn profile_of_7123546() {
        let w = Permutation::parse("7123546").unwrap();
        let p = AscentProfile::from_permutation(&w);
        assert_eq!(p.left_ascents, set(&[0, 1, 2, 4]));
        assert_eq!(p.right_ascents, set(&[1, 2, 3, 5]));
        assert_eq!(p.small_map, BTreeMap::from([(1, 0), (2, 1)]));
    }

    #[test]
    fn identity_profile_is_all_small() {
        for fam in [Family::A, Family::Star, Family::Cycle] {
            let g = Arc::new(named_graph(fam, if fam == Family::A { 3 } else { 5 }).unwrap());
            let p = AscentProfile::identity(g.clone());
            assert_eq!(p.left_ascents.len(), g.vertex_count());
            assert!(p.small_map.iter().all(|(s, t)| s == t));
        }
    }

    #[test]
    fn big_example_small_map_domain() {
        let w = Permutation::parse("1 3 4 5 7 8 2 6 14 15 16 9 10 11 12 13").unwrap();
        let p = AscentProfile::from_permutation(&w);
        let domain: BTreeSet<usize> = p.small_map.keys().copied().collect();
        assert_eq!(domain, set(&[1, 2, 4, 8, 9, 11, 12, 13, 14]));
    }

    #[test]
    fn validation_catches_bad_maps() {
        let g = Arc::new(named_graph(Family::A, 4).unwrap());
        let bad = AscentProfile::new(g.clone(), set(&[0]), set(&[1]), BTreeMap::from([(1, 3)]));
        assert_eq!(bad.unwrap_err(), ProfileError::MapOutsideAscents(1, 3));
        let not_inj =
            AscentProfile::new(g, set(&[0]), set(&[1, 2]), BTreeMap::from([(1, 0), (2, 0)]));
        assert_eq!(not_inj.unwrap_err(), ProfileError::NotInjective(0));
    }

    #[test]
    fn bond_compatibility_enforced() {
        // Map two bonded generators onto a commuting pair: rejected.
        let g = Arc::new(named_graph(Family::A, 4).unwrap());
        let bad = AscentProfile::new(
            g,
            set(&[0, 2]),
            set(&[0, 1]),
            BTreeMap::from([(0, 0), (1, 2)]),
        );
        assert_eq!(bad.unwrap_err(), ProfileError::BondMismatch(0, 1, 0, 2));
    }

    #[test]
    fn json_round_trip() {
        let w = Permutation::parse("7123546").unwrap();
        let p = AscentProfile::from_permutation(&w);
        let json = serde_json::to_string(&p).unwrap();
        let back: AscentProfile = serde_json::from_str(&json).unwrap();
        assert_eq!(p, back);
    }
}
