//! The w-ocean: the two-row graph on the ascents of an element, its
//! classification into floats, ropes, tethers, planks, wharfs and rafts,
//! and the plank-move calculus on fillings.

use std::collections::{BTreeMap, BTreeSet};

use serde::{Deserialize, Serialize};

use crate::perm::{greedy_max, greedy_min, Permutation};
use crate::profile::AscentProfile;

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum Row {
    /// Right-ascent row.
    Top,
    /// Left-ascent row.
    Bottom,
}

/// A vertex of the ocean: a generator on one of the two rows.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct OceanVertex {
    pub row: Row,
    pub gen: usize,
}

impl OceanVertex {
    pub fn top(gen: usize) -> OceanVertex {
        OceanVertex { row: Row::Top, gen }
    }

    pub fn bottom(gen: usize) -> OceanVertex {
        OceanVertex {
            row: Row::Bottom,
            gen,
        }
    }
}

// Listing order: bottom row first, then top, each by generator index.
impl Ord for OceanVertex {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        let rank = |v: &OceanVertex| (if v.row == Row::Bottom { 0 } else { 1 }, v.gen);
        rank(self).cmp(&rank(other))
    }
}

impl PartialOrd for OceanVertex {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// A plank: the pair of a small right ascent (top) and its conjugate
/// small left ascent (bottom).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Plank {
    pub top: usize,
    pub bottom: usize,
}

pub type PlankId = usize;

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum OceanError {
    #[error("{0}")]
    MoveNotApplicable(String),
    #[error("filling does not avoid the excluded sets")]
    AvoidanceViolated,
    #[error("unsupported ocean shape: {0}")]
    Unsupported(String),
}

/// The w-ocean of an ascent profile.
#[derive(Debug, Clone)]
pub struct Ocean {
    pub profile: AscentProfile,
    pub planks: Vec<Plank>,
    plank_at_top: BTreeMap<usize, PlankId>,
    plank_at_bottom: BTreeMap<usize, PlankId>,
}

impl Ocean {
    pub fn build(profile: AscentProfile) -> Ocean {
        let planks: Vec<Plank> = profile
            .small_map
            .iter()
            .map(|(&top, &bottom)| Plank { top, bottom })
            .collect();
        let plank_at_top = planks.iter().enumerate().map(|(i, p)| (p.top, i)).collect();
        let plank_at_bottom = planks
            .iter()
            .enumerate()
            .map(|(i, p)| (p.bottom, i))
            .collect();
        Ocean {
            profile,
            planks,
            plank_at_top,
            plank_at_bottom,
        }
    }

    pub fn row_vertices(&self, row: Row) -> &BTreeSet<usize> {
        match row {
            Row::Top => &self.profile.right_ascents,
            Row::Bottom => &self.profile.left_ascents,
        }
    }

    pub fn is_small(&self, v: OceanVertex) -> bool {
        match v.row {
            Row::Top => self.plank_at_top.contains_key(&v.gen),
            Row::Bottom => self.plank_at_bottom.contains_key(&v.gen),
        }
    }

    pub fn exists(&self, v: OceanVertex) -> bool {
        self.row_vertices(v.row).contains(&v.gen)
    }

    /// Same-row adjacency: Coxeter-adjacent and at least one endpoint small.
    pub fn same_row_adjacent(&self, row: Row, a: usize, b: usize) -> bool {
        self.exists(OceanVertex { row, gen: a })
            && self.exists(OceanVertex { row, gen: b })
            && self.profile.graph.adjacent(a, b)
            && (self.is_small(OceanVertex { row, gen: a })
                || self.is_small(OceanVertex { row, gen: b }))
    }

    pub fn same_row_neighbors(&self, v: OceanVertex) -> Vec<usize> {
        self.row_vertices(v.row)
            .iter()
            .copied()
            .filter(|&u| u != v.gen && self.same_row_adjacent(v.row, v.gen, u))
            .collect()
    }

    /// The plank partner of a small vertex, as an ocean vertex on the
    /// other row.
    pub fn plank_partner(&self, v: OceanVertex) -> Option<OceanVertex> {
        match v.row {
            Row::Top => self
                .plank_at_top
                .get(&v.gen)
                .map(|&p| OceanVertex::bottom(self.planks[p].bottom)),
            Row::Bottom => self
                .plank_at_bottom
                .get(&v.gen)
                .map(|&p| OceanVertex::top(self.planks[p].top)),
        }
    }

    /// Mirror a set of small vertices across their planks.
    fn mirror(&self, row: Row, set: &BTreeSet<usize>) -> Option<BTreeSet<usize>> {
        set.iter()
            .map(|&g| {
                self.plank_partner(OceanVertex { row, gen: g })
                    .map(|v| v.gen)
            })
            .collect()
    }

    /// Connected components of `set` in the induced same-row subgraph,
    /// ordered by smallest member.
    pub fn components(&self, row: Row, set: &BTreeSet<usize>) -> Vec<BTreeSet<usize>> {
        let mut remaining = set.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            remaining.remove(&start);
            let mut comp = BTreeSet::from([start]);
            let mut frontier = vec![start];
            while let Some(v) = frontier.pop() {
                let near: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&u| self.same_row_adjacent(row, v, u))
                    .collect();
                for u in near {
                    remaining.remove(&u);
                    comp.insert(u);
                    frontier.push(u);
                }
            }
            out.push(comp);
        }
        out
    }

    /// Planks are adjacent when their tops or bottoms are adjacent.
    pub fn planks_adjacent(&self, p: PlankId, q: PlankId) -> bool {
        let (a, b) = (self.planks[p], self.planks[q]);
        self.same_row_adjacent(Row::Top, a.top, b.top)
            || self.same_row_adjacent(Row::Bottom, a.bottom, b.bottom)
    }

    fn small_same_row_neighbor_count(&self, v: OceanVertex) -> usize {
        self.same_row_neighbors(v)
            .into_iter()
            .filter(|&u| self.is_small(OceanVertex { row: v.row, gen: u }))
            .count()
    }

    /// Mandatory wharf rule: some vertex of the plank has at least three
    /// same-row neighbors of which at least two are small.
    fn is_mandatory_wharf(&self, p: PlankId) -> bool {
        let plank = self.planks[p];
        [
            OceanVertex::top(plank.top),
            OceanVertex::bottom(plank.bottom),
        ]
        .iter()
        .any(|&v| {
            self.same_row_neighbors(v).len() >= 3 && self.small_same_row_neighbor_count(v) >= 2
        })
    }

    /// A plank may be designated a wharf when one of its vertices has two
    /// small same-row neighbors.
    fn is_designation_admissible(&self, p: PlankId) -> bool {
        let plank = self.planks[p];
        self.small_same_row_neighbor_count(OceanVertex::top(plank.top)) >= 2
            || self.small_same_row_neighbor_count(OceanVertex::bottom(plank.bottom)) >= 2
    }
}

/// One end of a raft with its adjacent wharf or apparatus.
#[derive(Debug, Clone, Default, PartialEq, Eq)]
pub struct RaftEnd {
    pub wharf: Option<PlankId>,
    /// Large top-row vertices adjacent to this end, by generator.
    pub top_apparatus: Vec<usize>,
    /// Large bottom-row vertices adjacent to this end, by generator.
    pub bottom_apparatus: Vec<usize>,
}

/// A raft: a maximal path of non-wharf planks, oriented so that
/// `ends[0]` is the initial end.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Raft {
    pub planks: Vec<PlankId>,
    pub ends: [RaftEnd; 2],
}

impl Raft {
    pub fn size(&self) -> usize {
        self.planks.len()
    }
}

/// Classification of an ocean into the marine-model parts.
#[derive(Debug, Clone)]
pub struct MarineModel {
    pub ocean: Ocean,
    pub floats: Vec<OceanVertex>,
    pub ropes: Vec<OceanVertex>,
    pub tethers: Vec<OceanVertex>,
    pub wharfs: Vec<PlankId>,
    pub rafts: Vec<Raft>,
}

impl MarineModel {
    pub fn raft_sizes(&self) -> Vec<usize> {
        self.rafts.iter().map(Raft::size).collect()
    }

    /// Wharf pairs adjacent in the ocean (for harbor edges).
    pub fn adjacent_wharf_pairs(&self) -> Vec<(PlankId, PlankId)> {
        let mut pairs = Vec::new();
        for (i, &p) in self.wharfs.iter().enumerate() {
            for &q in &self.wharfs[i + 1..] {
                if self.ocean.planks_adjacent(p, q) {
                    pairs.push((p, q));
                }
            }
        }
        pairs
    }

    /// Selected ropes and tethers adjacent to a wharf plank.
    pub fn wharf_apparatus(&self, wharf: PlankId) -> Vec<OceanVertex> {
        let plank = self.ocean.planks[wharf];
        let mut out = Vec::new();
        for v in [
            OceanVertex::top(plank.top),
            OceanVertex::bottom(plank.bottom),
        ] {
            for u in self.ocean.same_row_neighbors(v) {
                let uv = OceanVertex { row: v.row, gen: u };
                if !self.ocean.is_small(uv) {
                    out.push(uv);
                }
            }
        }
        out.sort();
        out.dedup();
        out
    }
}

/// Classify with the default (deterministic, minimal) wharf designation.
pub fn classify(ocean: &Ocean) -> MarineModel {
    classify_with_extra_wharfs(ocean, &[])
}

/// Classify, forcing `extra` to be designated as wharfs before the
/// deterministic cycle-breaking designation runs. Used to exercise the
/// wharf-choice-invariance property.
pub fn classify_with_extra_wharfs(ocean: &Ocean, extra: &[PlankId]) -> MarineModel {
    let mut floats = Vec::new();
    let mut ropes = Vec::new();
    let mut tethers = Vec::new();
    for row in [Row::Bottom, Row::Top] {
        for &g in ocean.row_vertices(row) {
            let v = OceanVertex { row, gen: g };
            if ocean.is_small(v) {
                continue;
            }
            match ocean.small_same_row_neighbor_count(v) {
                0 => floats.push(v),
                1 => ropes.push(v),
                _ => tethers.push(v),
            }
        }
    }

    let mut is_wharf: Vec<bool> = (0..ocean.planks.len())
        .map(|p| ocean.is_mandatory_wharf(p))
        .collect();
    for &p in extra {
        assert!(
            ocean.is_designation_admissible(p),
            "plank {p} cannot be designated as a wharf"
        );
        is_wharf[p] = true;
    }

    // Break branches and cycles among the remaining planks so every raft
    // is a path. Smallest bottom-generator label wins, admissible planks
    // preferred.
    loop {
        let active: Vec<PlankId> = (0..ocean.planks.len()).filter(|&p| !is_wharf[p]).collect();
        let degree = |p: PlankId| {
            active
                .iter()
                .filter(|&&q| q != p && ocean.planks_adjacent(p, q))
                .count()
        };
        if let Some(&branch) = active
            .iter()
            .filter(|&&p| degree(p) >= 3)
            .min_by_key(|&&p| ocean.planks[p].bottom)
        {
            is_wharf[branch] = true;
            continue;
        }
        // Peel leaves; whatever survives lies on a cycle.
        let mut surviving: BTreeSet<PlankId> = active.iter().copied().collect();
        loop {
            let leaves: Vec<PlankId> = surviving
                .iter()
                .copied()
                .filter(|&p| {
                    surviving
                        .iter()
                        .filter(|&&q| q != p && ocean.planks_adjacent(p, q))
                        .count()
                        <= 1
                })
                .collect();
            if leaves.is_empty() {
                break;
            }
            for leaf in leaves {
                surviving.remove(&leaf);
            }
        }
        if surviving.is_empty() {
            break;
        }
        let pick = surviving
            .iter()
            .copied()
            .filter(|&p| ocean.is_designation_admissible(p))
            .min_by_key(|&p| ocean.planks[p].bottom)
            .or_else(|| {
                surviving
                    .iter()
                    .copied()
                    .min_by_key(|&p| ocean.planks[p].bottom)
            })
            .unwrap();
        is_wharf[pick] = true;
    }

    let wharfs: Vec<PlankId> = (0..ocean.planks.len()).filter(|&p| is_wharf[p]).collect();

    // Rafts: path components of the non-wharf planks.
    let mut remaining: BTreeSet<PlankId> =
        (0..ocean.planks.len()).filter(|&p| !is_wharf[p]).collect();
    let mut rafts = Vec::new();
    while let Some(&seed) = remaining.iter().next() {
        let mut comp = vec![seed];
        remaining.remove(&seed);
        let mut frontier = vec![seed];
        while let Some(p) = frontier.pop() {
            let near: Vec<PlankId> = remaining
                .iter()
                .copied()
                .filter(|&q| ocean.planks_adjacent(p, q))
                .collect();
            for q in near {
                remaining.remove(&q);
                comp.push(q);
                frontier.push(q);
            }
        }
        rafts.push(order_raft(ocean, comp, &is_wharf));
    }
    rafts.sort_by_key(|r| r.planks.iter().map(|&p| ocean.planks[p].top).min().unwrap());

    MarineModel {
        ocean: ocean.clone(),
        floats,
        ropes,
        tethers,
        wharfs,
        rafts,
    }
}

fn order_raft(ocean: &Ocean, mut comp: Vec<PlankId>, is_wharf: &[bool]) -> Raft {
    comp.sort_unstable();
    let degree = |p: PlankId, comp: &[PlankId]| {
        comp.iter()
            .filter(|&&q| q != p && ocean.planks_adjacent(p, q))
            .count()
    };
    let path: Vec<PlankId> = if comp.len() == 1 {
        comp.clone()
    } else {
        let endpoints: Vec<PlankId> = comp
            .iter()
            .copied()
            .filter(|&p| degree(p, &comp) == 1)
            .collect();
        assert_eq!(endpoints.len(), 2, "raft is not a path");
        let start = *endpoints
            .iter()
            .min_by_key(|&&p| ocean.planks[p].bottom)
            .unwrap();
        let mut path = vec![start];
        let mut prev = None;
        while path.len() < comp.len() {
            let cur = *path.last().unwrap();
            let next = comp
                .iter()
                .copied()
                .find(|&q| Some(q) != prev && q != cur && ocean.planks_adjacent(cur, q))
                .expect("raft path is connected");
            prev = Some(cur);
            path.push(next);
        }
        path
    };

    // Adjacent wharf planks and large apparatus (top row, bottom row) of
    // one plank.
    let plank_surroundings = |plank_id: PlankId| {
        let plank = ocean.planks[plank_id];
        let mut wharfs = BTreeSet::new();
        let mut top_apparatus = Vec::new();
        let mut bottom_apparatus = Vec::new();
        for v in [
            OceanVertex::top(plank.top),
            OceanVertex::bottom(plank.bottom),
        ] {
            for u in ocean.same_row_neighbors(v) {
                let uv = OceanVertex { row: v.row, gen: u };
                if ocean.is_small(uv) {
                    let q = match v.row {
                        Row::Top => ocean.plank_at_top[&u],
                        Row::Bottom => ocean.plank_at_bottom[&u],
                    };
                    if is_wharf[q] {
                        wharfs.insert(q);
                    }
                } else if v.row == Row::Top {
                    top_apparatus.push(u);
                } else {
                    bottom_apparatus.push(u);
                }
            }
        }
        (wharfs, top_apparatus, bottom_apparatus)
    };

    let ends = if path.len() == 1 {
        // Split the single plank into two logical ends: wharfs become the
        // raft-edge endpoints; apparatus splits by label side.
        let plank = ocean.planks[path[0]];
        let (wharfs, top_app, bottom_app) = plank_surroundings(path[0]);
        let wharfs: Vec<PlankId> = wharfs.into_iter().collect();
        let mut initial = RaftEnd::default();
        let mut terminal = RaftEnd::default();
        for u in top_app {
            if u < plank.top {
                initial.top_apparatus.push(u);
            } else {
                terminal.top_apparatus.push(u);
            }
        }
        for u in bottom_app {
            if u < plank.bottom {
                initial.bottom_apparatus.push(u);
            } else {
                terminal.bottom_apparatus.push(u);
            }
        }
        match wharfs.len() {
            0 => {}
            1 => terminal.wharf = Some(wharfs[0]),
            2 => {
                assert!(
                    initial.top_apparatus.is_empty()
                        && initial.bottom_apparatus.is_empty()
                        && terminal.top_apparatus.is_empty()
                        && terminal.bottom_apparatus.is_empty(),
                    "single plank between two wharfs cannot carry apparatus"
                );
                initial.wharf = Some(wharfs[0]);
                terminal.wharf = Some(wharfs[1]);
            }
            _ => panic!("plank adjacent to more than two wharfs"),
        }
        [initial, terminal]
    } else {
        let end_data = |plank_id: PlankId| {
            let (wharfs, top_apparatus, bottom_apparatus) = plank_surroundings(plank_id);
            assert!(wharfs.len() <= 1, "endplank adjacent to two wharfs");
            RaftEnd {
                wharf: wharfs.into_iter().next(),
                top_apparatus,
                bottom_apparatus,
            }
        };
        [end_data(path[0]), end_data(*path.last().unwrap())]
    };

    // Orient so the initial end holds the smaller bottom generator.
    let (path, ends) = if path.len() > 1
        && ocean.planks[*path.last().unwrap()].bottom < ocean.planks[path[0]].bottom
    {
        let mut rev = path.clone();
        rev.reverse();
        let [a, b] = ends;
        (rev, [b, a])
    } else {
        (path, ends)
    };

    Raft { planks: path, ends }
}

/// A selection of bottom (I) and top (J) vertices of an ocean.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct Filling {
    /// Bottom-row selection; the `I` of a presentation.
    pub left: BTreeSet<usize>,
    /// Top-row selection; the `J` of a presentation.
    pub right: BTreeSet<usize>,
}

impl Filling {
    pub fn new(left: BTreeSet<usize>, right: BTreeSet<usize>) -> Filling {
        Filling { left, right }
    }

    pub fn validate(&self, ocean: &Ocean) -> bool {
        self.left.is_subset(ocean.row_vertices(Row::Bottom))
            && self.right.is_subset(ocean.row_vertices(Row::Top))
    }
}

/// The three plank moves on fillings.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PlankMove {
    Contract,
    Expand,
    Slide,
}

fn row_sets(filling: &Filling, row: Row) -> (&BTreeSet<usize>, &BTreeSet<usize>) {
    // (set on `row`, set on the other row)
    match row {
        Row::Bottom => (&filling.left, &filling.right),
        Row::Top => (&filling.right, &filling.left),
    }
}

fn all_small(ocean: &Ocean, row: Row, set: &BTreeSet<usize>) -> bool {
    set.iter()
        .all(|&g| ocean.is_small(OceanVertex { row, gen: g }))
}

/// Apply a plank move. `row` names the row of `component`; for `Expand`,
/// `component` is the set being added to that row.
pub fn plank_move(
    ocean: &Ocean,
    filling: &Filling,
    mv: PlankMove,
    row: Row,
    component: &BTreeSet<usize>,
) -> Result<Filling, OceanError> {
    let fail = |msg: String| Err(OceanError::MoveNotApplicable(msg));
    if component.is_empty() {
        return fail("empty component".into());
    }
    if !all_small(ocean, row, component) {
        return fail("component contains a large ascent".into());
    }
    let mirror = ocean
        .mirror(row, component)
        .expect("small vertices always have plank partners");
    let other_row = if row == Row::Bottom {
        Row::Top
    } else {
        Row::Bottom
    };
    let (this_set, other_set) = row_sets(filling, row);

    let is_component_of = |set: &BTreeSet<usize>| {
        component.is_subset(set) && ocean.components(row, set).contains(component)
    };

    match mv {
        PlankMove::Contract => {
            if !is_component_of(this_set) {
                return fail(format!(
                    "{component:?} is not a connected component of the filling"
                ));
            }
            if !mirror.is_subset(other_set) {
                return fail("mirror of the component is not fully selected".into());
            }
            let mut out = filling.clone();
            match row {
                Row::Bottom => out.left = &out.left - component,
                Row::Top => out.right = &out.right - component,
            }
            Ok(out)
        }
        PlankMove::Expand => {
            if !component.is_disjoint(this_set) {
                return fail("expansion target overlaps the filling".into());
            }
            let merged: BTreeSet<usize> = this_set | component;
            if !ocean.components(row, &merged).contains(component) {
                return fail("expansion target is adjacent to the existing selection".into());
            }
            if !mirror.is_subset(other_set) {
                return fail("mirror of the component is not fully selected".into());
            }
            let mut out = filling.clone();
            match row {
                Row::Bottom => out.left = merged,
                Row::Top => out.right = merged,
            }
            Ok(out)
        }
        PlankMove::Slide => {
            if !is_component_of(this_set) {
                return fail(format!(
                    "{component:?} is not a connected component of the filling"
                ));
            }
            if !mirror.is_disjoint(other_set) {
                return fail("mirror overlaps the other row's selection".into());
            }
            let merged: BTreeSet<usize> = other_set | &mirror;
            if !ocean.components(other_row, &merged).contains(&mirror) {
                return fail("mirror is adjacent to the other row's selection".into());
            }
            let mut out = filling.clone();
            match row {
                Row::Bottom => {
                    out.left = &out.left - component;
                    out.right = &out.right | &mirror;
                }
                Row::Top => {
                    out.right = &out.right - component;
                    out.left = &out.left | &mirror;
                }
            }
            Ok(out)
        }
    }
}

/// All applicable (move, row, component) triples for a filling.
pub fn applicable_moves(
    ocean: &Ocean,
    filling: &Filling,
) -> Vec<(PlankMove, Row, BTreeSet<usize>)> {
    let mut out = Vec::new();
    for row in [Row::Bottom, Row::Top] {
        let (this_set, _) = row_sets(filling, row);
        for comp in ocean.components(row, this_set) {
            if !all_small(ocean, row, &comp) {
                continue;
            }
            for mv in [PlankMove::Contract, PlankMove::Slide] {
                if plank_move(ocean, filling, mv, row, &comp).is_ok() {
                    out.push((mv, row, comp.clone()));
                }
            }
        }
    }
    out
}

/// Canonical form: apply every possible contraction, then every possible
/// upward slide. Produces the lex-minimal filling of the coset.
pub fn reduce_to_lexmin(ocean: &Ocean, filling: &Filling) -> Filling {
    let mut current = filling.clone();
    'outer: loop {
        for row in [Row::Bottom, Row::Top] {
            let (this_set, _) = row_sets(&current, row);
            for comp in ocean.components(row, this_set) {
                if let Ok(next) = plank_move(ocean, &current, PlankMove::Contract, row, &comp) {
                    current = next;
                    continue 'outer;
                }
            }
        }
        for comp in ocean.components(Row::Bottom, &current.left) {
            if let Ok(next) = plank_move(ocean, &current, PlankMove::Slide, Row::Bottom, &comp) {
                current = next;
                continue 'outer;
            }
        }
        return current;
    }
}

/// Lex-minimality test, straight from the component conditions.
pub fn is_lexmin(ocean: &Ocean, filling: &Filling) -> bool {
    // (a) no component of J whose planks are all selected below
    for comp in ocean.components(Row::Top, &filling.right) {
        if all_small(ocean, Row::Top, &comp) {
            let mirror = ocean.mirror(Row::Top, &comp).unwrap();
            if mirror.is_subset(&filling.left) {
                return false;
            }
        }
    }
    // (b) every all-small component of I must be witnessed on top
    for comp in ocean.components(Row::Bottom, &filling.left) {
        if !all_small(ocean, Row::Bottom, &comp) {
            continue;
        }
        let mirror = ocean.mirror(Row::Bottom, &comp).unwrap();
        if mirror.is_subset(&filling.right) {
            return false;
        }
        let witnessed = filling.right.iter().any(|&j| {
            mirror.contains(&j) || mirror.iter().any(|&m| ocean.profile.graph.adjacent(j, m))
        });
        if !witnessed {
            return false;
        }
    }
    true
}

/// Minimal-presentation test: no component on either row may be fully
/// mirrored by the other row's selection.
pub fn is_minimal_presentation(ocean: &Ocean, filling: &Filling) -> bool {
    for (row, other) in [(Row::Bottom, &filling.right), (Row::Top, &filling.left)] {
        let (this_set, _) = row_sets(filling, row);
        for comp in ocean.components(row, this_set) {
            if all_small(ocean, row, &comp) {
                let mirror = ocean.mirror(row, &comp).unwrap();
                if mirror.is_subset(other) {
                    return false;
                }
            }
        }
    }
    true
}

/// Equality of the presented cosets, via uniqueness of the lex-minimal form.
pub fn cosets_equal(ocean: &Ocean, f1: &Filling, f2: &Filling) -> bool {
    reduce_to_lexmin(ocean, f1) == reduce_to_lexmin(ocean, f2)
}

/// Lex-minimality among presentations avoiding `x_left` on the bottom row
/// and `x_right` on the top row.
pub fn is_lexmin_avoiding(
    ocean: &Ocean,
    filling: &Filling,
    x_left: &BTreeSet<usize>,
    x_right: &BTreeSet<usize>,
) -> Result<bool, OceanError> {
    if !filling.left.is_disjoint(x_left) || !filling.right.is_disjoint(x_right) {
        return Err(OceanError::AvoidanceViolated);
    }
    for comp in ocean.components(Row::Top, &filling.right) {
        if all_small(ocean, Row::Top, &comp) {
            let mirror = ocean.mirror(Row::Top, &comp).unwrap();
            if mirror.is_subset(&filling.left) {
                return Ok(false);
            }
        }
    }
    for comp in ocean.components(Row::Bottom, &filling.left) {
        if !all_small(ocean, Row::Bottom, &comp) {
            continue;
        }
        let mirror = ocean.mirror(Row::Bottom, &comp).unwrap();
        let pinned = mirror.iter().any(|&x| x_right.contains(&x));
        let slidable_blocked = mirror.iter().any(|&x| {
            !filling.right.contains(&x)
                && filling
                    .right
                    .iter()
                    .any(|&j| ocean.profile.graph.adjacent(j, x))
        });
        if !pinned && !slidable_blocked {
            return Ok(false);
        }
    }
    Ok(true)
}

/// The maximal presentation of the type A coset `W_I w W_J`: the unions of
/// all presentations' left and right sets.
pub fn max_presentation(
    i_set: &BTreeSet<usize>,
    w: &Permutation,
    j_set: &BTreeSet<usize>,
) -> (BTreeSet<usize>, BTreeSet<usize>) {
    let min = greedy_min(i_set, w, j_set);
    let max = greedy_max(i_set, w, j_set);
    let m_l = &min.left_ascents() & &max.left_descents();
    let m_r = &min.right_ascents() & &max.right_descents();
    (m_l, m_r)
}

/// Iterate all fillings of the ocean (every subset pair of the two rows).
pub fn all_fillings(ocean: &Ocean) -> Vec<Filling> {
    let bottom: Vec<usize> = ocean.row_vertices(Row::Bottom).iter().copied().collect();
    let top: Vec<usize> = ocean.row_vertices(Row::Top).iter().copied().collect();
    let mut out = Vec::with_capacity(1 << (bottom.len() + top.len()));
    for bm in 0u64..(1 << bottom.len()) {
        let left: BTreeSet<usize> = bottom
            .iter()
            .enumerate()
            .filter(|(b, _)| bm >> b & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        for tm in 0u64..(1 << top.len()) {
            let right: BTreeSet<usize> = top
                .iter()
                .enumerate()
                .filter(|(b, _)| tm >> b & 1 == 1)
                .map(|(_, &v)| v)
                .collect();
            out.push(Filling::new(left.clone(), right));
        }
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::{named_graph, Family};
    use crate::profile::AscentProfile;
    use std::sync::Arc;

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    fn ocean_of(text: &str) -> Ocean {
        let w = Permutation::parse(text).unwrap();
        Ocean::build(AscentProfile::from_permutation(&w))
    }

    // Generator s_j is graph vertex j-1; these helpers keep tests in the
    // 1-based notation of the worked examples.
    fn gens(items: &[usize]) -> BTreeSet<usize> {
        items.iter().map(|&j| j - 1).collect()
    }

    #[test]
    fn ocean_of_7123546() {
        let ocean = ocean_of("7123546");
        let model = classify(&ocean);
        assert_eq!(model.raft_sizes(), vec![2]);
        assert_eq!(
            model.ropes,
            vec![OceanVertex::bottom(2), OceanVertex::top(3)]
        );
        assert_eq!(
            model.floats,
            vec![OceanVertex::bottom(4), OceanVertex::top(5)]
        );
        assert!(model.tethers.is_empty());
        assert!(model.wharfs.is_empty());
        // Crossed-out vertices are simply absent.
        assert!(!ocean.exists(OceanVertex::top(0)));
        assert!(!ocean.exists(OceanVertex::top(4)));
        assert!(!ocean.exists(OceanVertex::bottom(3)));
        assert!(!ocean.exists(OceanVertex::bottom(5)));
    }

    #[test]
    fn ocean_of_identity_path() {
        let g = Arc::new(named_graph(Family::A, 5).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let model = classify(&ocean);
        assert_eq!(model.raft_sizes(), vec![5]);
        assert!(model.floats.is_empty() && model.ropes.is_empty() && model.tethers.is_empty());
        assert!(model.wharfs.is_empty());
    }

    #[test]
    fn big_example_classification() {
        let ocean = ocean_of("1 3 4 5 7 8 2 6 14 15 16 9 10 11 12 13");
        let model = classify(&ocean);
        assert_eq!(model.raft_sizes(), vec![2, 1, 2, 4]);
        assert_eq!(
            model.tethers,
            vec![OceanVertex::bottom(7), OceanVertex::top(3)]
        );
        assert_eq!(
            model.ropes,
            vec![
                OceanVertex::bottom(4),
                OceanVertex::top(0),
                OceanVertex::top(7)
            ]
        );
        assert_eq!(
            model.floats,
            vec![OceanVertex::bottom(0), OceanVertex::top(6)]
        );
        assert!(model.wharfs.is_empty());
        // Raft [12,15] (0-based planks at tops 11..14) sees the bottom
        // tether at its initial end.
        let raft_d = &model.rafts[3];
        assert_eq!(raft_d.size(), 4);
        assert_eq!(raft_d.ends[0].bottom_apparatus, vec![7]);
        assert!(raft_d.ends[0].top_apparatus.is_empty());
        assert!(raft_d.ends[1].top_apparatus.is_empty());
        assert!(raft_d.ends[1].bottom_apparatus.is_empty());
    }

    #[test]
    fn star_center_is_wharf() {
        let g = Arc::new(named_graph(Family::Star, 4).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let model = classify(&ocean);
        assert_eq!(model.wharfs.len(), 1);
        assert_eq!(model.ocean.planks[model.wharfs[0]].top, 0);
        assert_eq!(model.raft_sizes(), vec![1, 1, 1]);
        for raft in &model.rafts {
            assert_eq!(raft.ends[1].wharf, Some(model.wharfs[0]));
            assert_eq!(raft.ends[0].wharf, None);
        }
    }

    #[test]
    fn cycle_gets_one_designated_wharf() {
        for n in [3usize, 5, 8] {
            let g = Arc::new(named_graph(Family::Cycle, n).unwrap());
            let ocean = Ocean::build(AscentProfile::identity(g));
            let model = classify(&ocean);
            assert_eq!(model.wharfs.len(), 1, "cycle({n})");
            assert_eq!(model.raft_sizes(), vec![n - 1]);
            let raft = &model.rafts[0];
            assert_eq!(raft.ends[0].wharf, model.wharfs.first().copied());
            assert_eq!(raft.ends[1].wharf, model.wharfs.first().copied());
        }
    }

    #[test]
    fn longest_element_gives_empty_model() {
        let ocean = ocean_of("54321");
        let model = classify(&ocean);
        assert!(model.rafts.is_empty());
        assert!(model.floats.is_empty());
        assert!(ocean.planks.is_empty());
    }

    #[test]
    fn plank_moves_of_the_rotation_example() {
        // w = 2 3 4 ... 16 1; two contractions and a slide reach the
        // lex-minimal pair.
        let one_line: Vec<u8> = (1..=16)
            .map(|i| if i == 16 { 1 } else { i as u8 + 1 })
            .collect();
        let w = Permutation::new(one_line).unwrap();
        let ocean = Ocean::build(AscentProfile::from_permutation(&w));
        let filling = Filling::new(
            gens(&[2, 3, 5, 6, 7, 8, 9, 11, 12, 14, 15]),
            gens(&[1, 2, 3, 4, 5, 7, 9, 10]),
        );
        let step1 = plank_move(
            &ocean,
            &filling,
            PlankMove::Contract,
            Row::Bottom,
            &gens(&[2, 3]),
        )
        .unwrap();
        let step2 = plank_move(&ocean, &step1, PlankMove::Contract, Row::Top, &gens(&[7])).unwrap();
        let step3 = plank_move(
            &ocean,
            &step2,
            PlankMove::Slide,
            Row::Bottom,
            &gens(&[14, 15]),
        )
        .unwrap();
        assert_eq!(step3.left, gens(&[5, 6, 7, 8, 9, 11, 12]));
        assert_eq!(step3.right, gens(&[1, 2, 3, 4, 5, 9, 10, 13, 14]));
        assert!(is_lexmin(&ocean, &step3));
        assert_eq!(reduce_to_lexmin(&ocean, &filling), step3);
        assert!(cosets_equal(&ocean, &filling, &step3));
    }

    #[test]
    fn contract_then_expand_is_identity() {
        let g = Arc::new(named_graph(Family::A, 3).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let filling = Filling::new(set(&[0]), set(&[0, 2]));
        let contracted = plank_move(
            &ocean,
            &filling,
            PlankMove::Contract,
            Row::Bottom,
            &set(&[0]),
        )
        .unwrap();
        let expanded = plank_move(
            &ocean,
            &contracted,
            PlankMove::Expand,
            Row::Bottom,
            &set(&[0]),
        )
        .unwrap();
        assert_eq!(expanded, filling);
    }

    #[test]
    fn slide_on_identity_ocean() {
        // I = {s1}, J = {} over S_3's e: slides up to I = {}, J = {s1}.
        let g = Arc::new(named_graph(Family::A, 2).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let filling = Filling::new(set(&[0]), set(&[]));
        let slid = plank_move(&ocean, &filling, PlankMove::Slide, Row::Bottom, &set(&[0])).unwrap();
        assert_eq!(slid, Filling::new(set(&[]), set(&[0])));
        assert!(plank_move(
            &ocean,
            &filling,
            PlankMove::Contract,
            Row::Bottom,
            &set(&[0])
        )
        .is_err());
    }

    #[test]
    fn lexmin_fillings_of_7123546_raft_with_upper_rope() {
        // Raft of size two with the upper rope selected and the lower rope
        // not: exactly nine lex-minimal fillings.
        let ocean = ocean_of("7123546");
        let raft_bottom = [0usize, 1];
        let raft_top = [1usize, 2];
        let mut count = 0;
        for bm in 0u32..4 {
            for tm in 0u32..4 {
                let left: BTreeSet<usize> = raft_bottom
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| bm >> b & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                let mut right: BTreeSet<usize> = raft_top
                    .iter()
                    .enumerate()
                    .filter(|(b, _)| tm >> b & 1 == 1)
                    .map(|(_, &v)| v)
                    .collect();
                right.insert(3); // the upper rope
                if is_lexmin(&ocean, &Filling::new(left, right)) {
                    count += 1;
                }
            }
        }
        assert_eq!(count, 9);
    }

    #[test]
    fn trivial_lexmin_cases() {
        let ocean = ocean_of("7123546");
        assert!(is_lexmin(&ocean, &Filling::new(set(&[]), set(&[]))));
        assert!(is_minimal_presentation(
            &ocean,
            &Filling::new(set(&[]), set(&[]))
        ));
        let g = Arc::new(named_graph(Family::A, 2).unwrap());
        let e_ocean = Ocean::build(AscentProfile::identity(g));
        // I = J = {s1} at the identity contracts.
        assert!(!is_minimal_presentation(
            &e_ocean,
            &Filling::new(set(&[0]), set(&[0]))
        ));
    }

    #[test]
    fn reduce_is_idempotent_and_lexmin() {
        for text in ["7123546", "3512467", "14325"] {
            let ocean = ocean_of(text);
            for filling in all_fillings(&ocean) {
                let reduced = reduce_to_lexmin(&ocean, &filling);
                assert!(
                    is_lexmin(&ocean, &reduced),
                    "{text}: {filling:?} -> {reduced:?}"
                );
                assert_eq!(reduce_to_lexmin(&ocean, &reduced), reduced);
                assert!(cosets_equal(&ocean, &filling, &reduced));
            }
        }
    }

    #[test]
    fn full_identity_filling_slides_everything_up() {
        // I = J = S at the identity of S_4 reduces to I = {}, J = S.
        let g = Arc::new(named_graph(Family::A, 3).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let full = Filling::new(set(&[0, 1, 2]), set(&[0, 1, 2]));
        assert_eq!(
            reduce_to_lexmin(&ocean, &full),
            Filling::new(set(&[]), set(&[0, 1, 2]))
        );
    }

    #[test]
    fn distinct_cosets_compare_unequal() {
        let g = Arc::new(named_graph(Family::A, 2).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let singleton = Filling::new(set(&[]), set(&[]));
        let pair = Filling::new(set(&[0]), set(&[]));
        assert!(!cosets_equal(&ocean, &singleton, &pair));
    }

    #[test]
    fn lexmin_implies_minimal_small_cases() {
        for n in 2..=5 {
            for w in Permutation::all(n) {
                let ocean = Ocean::build(AscentProfile::from_permutation(&w));
                for filling in all_fillings(&ocean) {
                    if is_lexmin(&ocean, &filling) {
                        assert!(is_minimal_presentation(&ocean, &filling));
                    }
                }
            }
        }
    }

    #[test]
    fn max_presentation_of_worked_example() {
        // max_presentation speaks the permutation layer's 1-based language.
        let w = Permutation::parse("3512467").unwrap();
        let (m_l, m_r) = max_presentation(&set(&[1, 3, 4]), &w, &set(&[2, 3, 5, 6]));
        assert_eq!(m_l, set(&[1, 3, 4, 6]));
        assert_eq!(m_r, set(&[2, 3, 5, 6]));

        let longest = Permutation::longest(5);
        let (m_l, m_r) = max_presentation(&set(&[]), &longest, &set(&[]));
        assert!(m_l.is_empty() && m_r.is_empty());

        let e3 = Permutation::identity(3);
        let (m_l, m_r) = max_presentation(&set(&[]), &e3, &set(&[1, 2]));
        assert_eq!(m_l, set(&[1, 2]));
        assert_eq!(m_r, set(&[1, 2]));
    }

    #[test]
    fn avoiding_reduces_to_plain_lexmin_when_empty() {
        for w in Permutation::all(4) {
            let ocean = Ocean::build(AscentProfile::from_permutation(&w));
            for filling in all_fillings(&ocean) {
                assert_eq!(
                    is_lexmin_avoiding(&ocean, &filling, &set(&[]), &set(&[])).unwrap(),
                    is_lexmin(&ocean, &filling)
                );
            }
        }
    }

    #[test]
    fn full_left_presentation_is_lexmin_avoiding() {
        // W_S e W_{} is lex-minimal among presentations avoiding s on the right.
        for fam in [Family::A, Family::Star] {
            let g = Arc::new(named_graph(fam, 4).unwrap());
            let all: BTreeSet<usize> = (0..g.vertex_count()).collect();
            let ocean = Ocean::build(AscentProfile::identity(g));
            let filling = Filling::new(all, set(&[]));
            assert!(is_lexmin_avoiding(&ocean, &filling, &set(&[]), &set(&[0])).unwrap());
            assert!(!is_lexmin(&ocean, &filling));
        }
        let g = Arc::new(named_graph(Family::A, 3).unwrap());
        let ocean = Ocean::build(AscentProfile::identity(g));
        let bad = Filling::new(set(&[0]), set(&[0]));
        assert_eq!(
            is_lexmin_avoiding(&ocean, &bad, &set(&[]), &set(&[0])),
            Err(OceanError::AvoidanceViolated)
        );
    }

    #[test]
    fn displayed_marine_filling_is_lexmin() {
        // The displayed filling I = {1,2}, J = {3,4,6} of w = 7123546 is
        // irreducible, hence lex-minimal; it is one of the nine fillings
        // counted for the raft with its upper rope selected.
        let ocean = ocean_of("7123546");
        let filling = Filling::new(gens(&[1, 2]), gens(&[3, 4, 6]));
        assert!(applicable_moves(&ocean, &filling).is_empty());
        assert!(is_lexmin(&ocean, &filling));
    }
}
