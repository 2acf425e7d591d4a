//! Harbors: the decorated multigraphs of wharfs and raft endplanks whose
//! legal half-edge labelings drive the general counting formula.

use std::collections::BTreeSet;

use crate::ocean::{MarineModel, OceanVertex, PlankId, Row};
use crate::seq::{is_legal_pair, HalfEdgeLabel, Tile};

/// A selection of ropes/tethers and wharf node fills: one summand of the
/// outer sum in the general counting formula.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WharfChoice {
    /// Selected ropes and tethers.
    pub selected: BTreeSet<OceanVertex>,
    /// Node selection per wharf, aligned with `MarineModel::wharfs`.
    pub wharf_fill: Vec<Tile>,
}

/// Vertex roles in a harbor.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarborVertexKind {
    Wharf(PlankId),
    /// Endplank of a raft: (raft index, end index).
    Endplank(usize, usize),
    /// A selected rope or tether hanging off a wharf.
    WharfApparatus(PlankId, OceanVertex),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarborVertex {
    pub kind: HarborVertexKind,
    /// Node selection at this vertex.
    pub tile: Tile,
    /// Wharf vertices constrain their half-edge labels differently.
    pub is_wharf: bool,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum HarborEdgeKind {
    /// Raft by index; carries the raft's size.
    Raft(usize),
    /// Wharf-to-apparatus connector (size 0).
    WharfApparatus,
    /// Two wharfs adjacent in the ocean (size 0).
    WharfWharf,
}

/// An edge with its two endpoint vertices; loops (`a == b`) occur when a
/// raft closes a cycle back onto one wharf.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct HarborEdge {
    pub a: usize,
    pub b: usize,
    pub size: usize,
    pub kind: HarborEdgeKind,
}

#[derive(Debug, Clone)]
pub struct Harbor {
    pub vertices: Vec<HarborVertex>,
    pub edges: Vec<HarborEdge>,
}

impl Harbor {
    pub fn half_edge_count(&self) -> usize {
        self.edges.len() * 2
    }
}

/// Assemble the harbor for a marine model under a given choice.
pub fn build_harbor(model: &MarineModel, choice: &WharfChoice) -> Harbor {
    assert_eq!(choice.wharf_fill.len(), model.wharfs.len());
    let mut vertices = Vec::new();
    let mut edges = Vec::new();

    let wharf_vertex_of = |wharf: PlankId| -> usize {
        model
            .wharfs
            .iter()
            .position(|&w| w == wharf)
            .expect("wharf is classified")
    };
    for (i, &w) in model.wharfs.iter().enumerate() {
        let _ = w;
        vertices.push(HarborVertex {
            kind: HarborVertexKind::Wharf(model.wharfs[i]),
            tile: choice.wharf_fill[i],
            is_wharf: true,
        });
    }

    let selected_tile = |top_apparatus: &[usize], bottom_apparatus: &[usize]| {
        let top = top_apparatus
            .iter()
            .any(|&g| choice.selected.contains(&OceanVertex::top(g)));
        let bottom = bottom_apparatus
            .iter()
            .any(|&g| choice.selected.contains(&OceanVertex::bottom(g)));
        Tile::from_selection(bottom, top)
    };

    for (ri, raft) in model.rafts.iter().enumerate() {
        let mut endpoint = |end_idx: usize| -> usize {
            let end = &raft.ends[end_idx];
            if let Some(w) = end.wharf {
                wharf_vertex_of(w)
            } else {
                let tile = if raft.size() == 1 && raft.ends[1 - end_idx].wharf.is_none() {
                    // A free-standing single plank: amalgamate both logical
                    // ends' apparatus onto the initial endplank.
                    if end_idx == 0 {
                        let tops: Vec<usize> = raft.ends[0]
                            .top_apparatus
                            .iter()
                            .chain(&raft.ends[1].top_apparatus)
                            .copied()
                            .collect();
                        let bottoms: Vec<usize> = raft.ends[0]
                            .bottom_apparatus
                            .iter()
                            .chain(&raft.ends[1].bottom_apparatus)
                            .copied()
                            .collect();
                        selected_tile(&tops, &bottoms)
                    } else {
                        Tile::Open
                    }
                } else if raft.size() == 1 {
                    // Other logical end is a wharf: everything lands here.
                    let tops: Vec<usize> = raft.ends[0]
                        .top_apparatus
                        .iter()
                        .chain(&raft.ends[1].top_apparatus)
                        .copied()
                        .collect();
                    let bottoms: Vec<usize> = raft.ends[0]
                        .bottom_apparatus
                        .iter()
                        .chain(&raft.ends[1].bottom_apparatus)
                        .copied()
                        .collect();
                    selected_tile(&tops, &bottoms)
                } else {
                    selected_tile(&end.top_apparatus, &end.bottom_apparatus)
                };
                vertices.push(HarborVertex {
                    kind: HarborVertexKind::Endplank(ri, end_idx),
                    tile,
                    is_wharf: false,
                });
                vertices.len() - 1
            }
        };
        let a = endpoint(0);
        let b = endpoint(1);
        edges.push(HarborEdge {
            a,
            b,
            size: raft.size(),
            kind: HarborEdgeKind::Raft(ri),
        });
    }

    for (wi, &w) in model.wharfs.iter().enumerate() {
        for r in model.wharf_apparatus(w) {
            if !choice.selected.contains(&r) {
                continue;
            }
            let tile = if r.row == Row::Top {
                Tile::Top
            } else {
                Tile::Bot
            };
            vertices.push(HarborVertex {
                kind: HarborVertexKind::WharfApparatus(w, r),
                tile,
                is_wharf: false,
            });
            edges.push(HarborEdge {
                a: wi,
                b: vertices.len() - 1,
                size: 0,
                kind: HarborEdgeKind::WharfApparatus,
            });
        }
    }

    for (p, q) in model.adjacent_wharf_pairs() {
        edges.push(HarborEdge {
            a: wharf_vertex_of(p),
            b: wharf_vertex_of(q),
            size: 0,
            kind: HarborEdgeKind::WharfWharf,
        });
    }

    let harbor = Harbor { vertices, edges };
    debug_assert!(
        (0..harbor.vertices.len()).all(|v| harbor.edges.iter().any(|e| e.a == v || e.b == v)),
        "every harbor vertex must meet an edge"
    );
    harbor
}

/// A full assignment of half-edge labels: `labels[e] = (label at a, label at b)`.
pub type Labeling = Vec<(HalfEdgeLabel, HalfEdgeLabel)>;

fn allowed_labels(vertex: &HarborVertex) -> &'static [HalfEdgeLabel] {
    use HalfEdgeLabel as L;
    match (vertex.is_wharf, vertex.tile) {
        (false, Tile::Open) | (true, Tile::Open) => &[L::Open],
        (false, Tile::Top) | (true, Tile::Top) => &[L::Top],
        (false, Tile::Bot) => &[L::Bot],
        (false, Tile::Both) => &[L::Both],
        (true, Tile::Bot) => &[L::BotRunThenOpen, L::BotRunThenTop, L::AllBot],
        (true, Tile::Both) => &[
            L::BothRunThenTop,
            L::BothRunThenBot,
            L::BothRunThenOpen,
            L::AllBoth,
        ],
    }
}

/// Pairing rules for the forced labels `AllBot`/`AllBoth`.
fn pairing_ok(harbor: &Harbor, edge: &HarborEdge, la: HalfEdgeLabel, lb: HalfEdgeLabel) -> bool {
    use HalfEdgeLabel as L;
    if !is_legal_pair(la, lb) {
        return false;
    }
    let check = |label: HalfEdgeLabel, other_vertex: usize, other_label: HalfEdgeLabel| match label
    {
        L::AllBot => {
            let v = &harbor.vertices[other_vertex];
            (v.is_wharf && v.tile == Tile::Bot && other_label == L::AllBot)
                || (!v.is_wharf && v.tile == Tile::Bot && other_label == L::Bot)
        }
        L::AllBoth => {
            let v = &harbor.vertices[other_vertex];
            (v.is_wharf && v.tile == Tile::Both && other_label == L::AllBoth)
                || (!v.is_wharf && v.tile == Tile::Both && other_label == L::Both)
        }
        _ => true,
    };
    check(la, edge.b, lb) && check(lb, edge.a, la)
}

/// Reachability conditions: every partially selected wharf needs a witness
/// through its run-labeled edges.
fn reachability_ok(harbor: &Harbor, labeling: &Labeling) -> bool {
    use HalfEdgeLabel as L;
    // Components under edges carrying at least one AllBot (resp. AllBoth)
    // half-edge label.
    let components = |special: HalfEdgeLabel| {
        let mut comp: Vec<usize> = (0..harbor.vertices.len()).collect();
        fn root(comp: &mut [usize], mut v: usize) -> usize {
            while comp[v] != v {
                comp[v] = comp[comp[v]];
                v = comp[v];
            }
            v
        }
        for (e, &(la, lb)) in labeling.iter().enumerate() {
            if la == special || lb == special {
                let (ra, rb) = (
                    root(&mut comp, harbor.edges[e].a),
                    root(&mut comp, harbor.edges[e].b),
                );
                comp[ra] = rb;
            }
        }
        let roots: Vec<usize> = (0..harbor.vertices.len())
            .map(|v| root(&mut comp, v))
            .collect();
        roots
    };

    let incident_label = |v: usize, want: HalfEdgeLabel, labeling: &Labeling| {
        labeling.iter().enumerate().any(|(e, &(la, lb))| {
            (harbor.edges[e].a == v && la == want) || (harbor.edges[e].b == v && lb == want)
        })
    };

    let bot_wharfs: Vec<usize> = (0..harbor.vertices.len())
        .filter(|&v| harbor.vertices[v].is_wharf && harbor.vertices[v].tile == Tile::Bot)
        .collect();
    if !bot_wharfs.is_empty() {
        let comp = components(L::AllBot);
        for &w in &bot_wharfs {
            let ok = (0..harbor.vertices.len()).any(|x| {
                comp[x] == comp[w]
                    && ((harbor.vertices[x].is_wharf
                        && harbor.vertices[x].tile == Tile::Bot
                        && incident_label(x, L::BotRunThenTop, labeling))
                        || (!harbor.vertices[x].is_wharf && harbor.vertices[x].tile == Tile::Bot))
            });
            if !ok {
                return false;
            }
        }
    }

    let both_wharfs: Vec<usize> = (0..harbor.vertices.len())
        .filter(|&v| harbor.vertices[v].is_wharf && harbor.vertices[v].tile == Tile::Both)
        .collect();
    if !both_wharfs.is_empty() {
        let comp = components(L::AllBoth);
        for &w in &both_wharfs {
            for witness_label in [L::BothRunThenTop, L::BothRunThenBot] {
                let ok = (0..harbor.vertices.len()).any(|x| {
                    comp[x] == comp[w]
                        && ((harbor.vertices[x].is_wharf
                            && harbor.vertices[x].tile == Tile::Both
                            && incident_label(x, witness_label, labeling))
                            || (!harbor.vertices[x].is_wharf
                                && harbor.vertices[x].tile == Tile::Both))
                });
                if !ok {
                    return false;
                }
            }
        }
    }
    true
}

/// Enumerate the legal labelings of a harbor.
pub fn legal_labelings(harbor: &Harbor) -> Vec<Labeling> {
    let mut out = Vec::new();
    let mut partial: Labeling = Vec::with_capacity(harbor.edges.len());
    fn recurse(harbor: &Harbor, partial: &mut Labeling, out: &mut Vec<Labeling>) {
        if partial.len() == harbor.edges.len() {
            if reachability_ok(harbor, partial) {
                out.push(partial.clone());
            }
            return;
        }
        let edge = &harbor.edges[partial.len()];
        for &la in allowed_labels(&harbor.vertices[edge.a]) {
            for &lb in allowed_labels(&harbor.vertices[edge.b]) {
                if pairing_ok(harbor, edge, la, lb) {
                    partial.push((la, lb));
                    recurse(harbor, partial, out);
                    partial.pop();
                }
            }
        }
    }
    recurse(harbor, &mut partial, &mut out);
    out
}
