//! Graphviz export of oceans and marine models.

use std::fmt::Write;

use crate::ocean::{MarineModel, Ocean, OceanVertex, Row};

fn node_id(ocean: &Ocean, v: OceanVertex) -> String {
    let name = ocean.profile.graph.vertex_name(v.gen);
    match v.row {
        Row::Top => format!("t_{name}"),
        Row::Bottom => format!("b_{name}"),
    }
}

/// Render the ocean alone: absent generators crossed out, large ascents
/// circled, planks and row edges drawn solid.
pub fn ocean_to_dot(ocean: &Ocean) -> String {
    render(ocean, None)
}

/// Render the ocean with its marine-model classification: raft edges solid,
/// ropes dashed, tethers as labeled edges, floats dotted, wharfs boxed.
pub fn model_to_dot(model: &MarineModel) -> String {
    render(&model.ocean, Some(model))
}

fn render(ocean: &Ocean, model: Option<&MarineModel>) -> String {
    let graph = &ocean.profile.graph;
    let mut out = String::from("graph ocean {\n  rankdir=TB;\n");
    for (row, rank) in [(Row::Top, "top"), (Row::Bottom, "bottom")] {
        let _ = writeln!(
            out,
            "  subgraph cluster_{rank} {{\n    label=\"{rank}\"; style=invis;"
        );
        let _ = writeln!(out, "    rank=same;");
        for gen in 0..graph.vertex_count() {
            let v = OceanVertex { row, gen };
            let name = graph.vertex_name(gen);
            let id = node_id(ocean, v);
            if !ocean.exists(v) {
                // Crossed out: descent position.
                let _ = writeln!(
                    out,
                    "    {id} [label=\"{name}\", shape=point, style=filled, fillcolor=black];"
                );
            } else if ocean.is_small(v) {
                let wharf = model
                    .map(|m| {
                        m.wharfs.iter().any(|&w| {
                            let p = ocean.planks[w];
                            (row == Row::Top && p.top == gen)
                                || (row == Row::Bottom && p.bottom == gen)
                        })
                    })
                    .unwrap_or(false);
                let shape = if wharf { "box" } else { "circle" };
                let _ = writeln!(out, "    {id} [label=\"{name}\", shape={shape}];");
            } else {
                let _ = writeln!(out, "    {id} [label=\"{name}\", shape=doublecircle];");
            }
        }
        let _ = writeln!(out, "  }}");
    }

    for plank in &ocean.planks {
        let _ = writeln!(
            out,
            "  {} -- {} [style=solid];",
            node_id(ocean, OceanVertex::top(plank.top)),
            node_id(ocean, OceanVertex::bottom(plank.bottom))
        );
    }

    for row in [Row::Top, Row::Bottom] {
        let gens: Vec<usize> = ocean.row_vertices(row).iter().copied().collect();
        for (i, &a) in gens.iter().enumerate() {
            for &b in &gens[i + 1..] {
                if !ocean.same_row_adjacent(row, a, b) {
                    continue;
                }
                let style = match model {
                    None => "solid",
                    Some(m) => {
                        let large = [a, b]
                            .into_iter()
                            .find(|&g| !ocean.is_small(OceanVertex { row, gen: g }));
                        match large {
                            None => "solid",
                            Some(g) if m.ropes.contains(&OceanVertex { row, gen: g }) => "dashed",
                            Some(g) if m.tethers.contains(&OceanVertex { row, gen: g }) => {
                                let _ = writeln!(
                                    out,
                                    "  {} -- {} [style=bold, label=\"tether\"];",
                                    node_id(ocean, OceanVertex { row, gen: a }),
                                    node_id(ocean, OceanVertex { row, gen: b })
                                );
                                continue;
                            }
                            Some(_) => "solid",
                        }
                    }
                };
                let _ = writeln!(
                    out,
                    "  {} -- {} [style={style}];",
                    node_id(ocean, OceanVertex { row, gen: a }),
                    node_id(ocean, OceanVertex { row, gen: b })
                );
            }
        }
    }

    // Floats are isolated; draw them dotted against their row's frame so
    // they stay visible.
    if let Some(m) = model {
        for &f in &m.floats {
            let _ = writeln!(out, "  {} [style=dotted];", node_id(ocean, f));
        }
    }
    out.push_str("}\n");
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ocean::classify;
    use crate::perm::Permutation;
    use crate::profile::AscentProfile;

    #[test]
    fn dot_contains_expected_pieces() {
        let w = Permutation::parse("7123546").unwrap();
        let ocean = Ocean::build(AscentProfile::from_permutation(&w));
        let plain = ocean_to_dot(&ocean);
        assert!(plain.starts_with("graph ocean {"));
        assert!(plain.contains("t_2 -- b_1"));
        let model = classify(&ocean);
        let decorated = model_to_dot(&model);
        assert!(decorated.contains("dashed"));
        assert!(decorated.contains("t_6 [style=dotted];"));
    }
}
