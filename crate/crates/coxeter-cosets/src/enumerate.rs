//! The counting formulas: `c_w` for permutations through the b-sequences,
//! `c_w` for arbitrary ascent profiles through harbors and legal labelings,
//! the named closed forms for branch and circular shapes, and the derived
//! totals.

use std::collections::BTreeSet;

use num_bigint::{BigInt, BigUint};
use num_rational::BigRational;
use num_traits::{One, ToPrimitive, Zero};
use rayon::prelude::*;

use crate::harbor::{build_harbor, legal_labelings, WharfChoice};
use crate::ocean::{classify, MarineModel, Ocean, OceanVertex, Raft};
use crate::perm::Permutation;
use crate::profile::AscentProfile;
use crate::seq::{a_pair, b_tuple, HalfEdgeLabel, IndicatorSet, KIndicator, Tile};

/// Corner positions of a raft: lower-left, upper-left, lower-right,
/// upper-right.
fn corner_apparatus(raft: &Raft) -> [Option<OceanVertex>; 4] {
    let pick = |list: &[usize], row_top: bool| -> Option<OceanVertex> {
        assert!(
            list.len() <= 1,
            "type A corners hold at most one apparatus vertex"
        );
        list.first().map(|&g| {
            if row_top {
                OceanVertex::top(g)
            } else {
                OceanVertex::bottom(g)
            }
        })
    };
    [
        pick(&raft.ends[0].bottom_apparatus, false),
        pick(&raft.ends[0].top_apparatus, true),
        pick(&raft.ends[1].bottom_apparatus, false),
        pick(&raft.ends[1].top_apparatus, true),
    ]
}

/// The indicator sets of a raft under a chosen tether subset.
pub fn k_indicator(
    model: &MarineModel,
    raft: &Raft,
    tethers: &BTreeSet<OceanVertex>,
) -> KIndicator {
    let corners = corner_apparatus(raft);
    let classify_corner = |c: Option<OceanVertex>| match c {
        None => IndicatorSet::Z,
        Some(v) if model.ropes.contains(&v) => IndicatorSet::ZO,
        Some(v) if tethers.contains(&v) => IndicatorSet::O,
        Some(_) => IndicatorSet::Z,
    };
    KIndicator(
        classify_corner(corners[0]),
        classify_corner(corners[1]),
        classify_corner(corners[2]),
        classify_corner(corners[3]),
    )
}

/// The per-tether-subset products of the type A formula, in subset-mask
/// order over `model.tethers`.
pub fn per_tether_products(model: &MarineModel) -> Vec<(BTreeSet<OceanVertex>, BigUint)> {
    let tethers = &model.tethers;
    assert!(tethers.len() < 64);

    // Each raft sees at most four tethers; tabulate its value per local mask.
    struct RaftTable {
        /// (global tether bit, local bit) pairs.
        bits: Vec<(usize, usize)>,
        values: Vec<BigUint>,
    }
    let tables: Vec<RaftTable> = model
        .rafts
        .iter()
        .map(|raft| {
            let corners = corner_apparatus(raft);
            let local_tethers: Vec<usize> = corners
                .iter()
                .flatten()
                .filter_map(|v| tethers.iter().position(|t| t == v))
                .collect();
            let bits: Vec<(usize, usize)> = local_tethers
                .iter()
                .enumerate()
                .map(|(l, &g)| (g, l))
                .collect();
            let values: Vec<BigUint> = (0..1usize << local_tethers.len())
                .map(|local| {
                    let t_set: BTreeSet<OceanVertex> = local_tethers
                        .iter()
                        .enumerate()
                        .filter(|(l, _)| local >> l & 1 == 1)
                        .map(|(_, &g)| tethers[g])
                        .collect();
                    b_tuple(k_indicator(model, raft, &t_set), raft.size())
                })
                .collect();
            RaftTable { bits, values }
        })
        .collect();

    let mut out = Vec::with_capacity(1 << tethers.len());
    for mask in 0u64..(1 << tethers.len()) {
        let subset: BTreeSet<OceanVertex> = tethers
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let mut product = BigUint::one();
        for table in &tables {
            let local: usize = table
                .bits
                .iter()
                .map(|&(g, l)| (((mask >> g) & 1) as usize) << l)
                .sum();
            product *= &table.values[local];
        }
        out.push((subset, product));
    }
    out
}

/// The tether sum of the type A formula, without the float factor.
fn tether_sum(model: &MarineModel) -> BigUint {
    let tethers = &model.tethers;
    type RaftTable = (Vec<(usize, usize)>, Vec<BigUint>);
    let tables: Vec<RaftTable> = model
        .rafts
        .iter()
        .map(|raft| {
            let corners = corner_apparatus(raft);
            let local_tethers: Vec<usize> = corners
                .iter()
                .flatten()
                .filter_map(|v| tethers.iter().position(|t| t == v))
                .collect();
            let bits: Vec<(usize, usize)> = local_tethers
                .iter()
                .enumerate()
                .map(|(l, &g)| (g, l))
                .collect();
            let values: Vec<BigUint> = (0..1usize << local_tethers.len())
                .map(|local| {
                    let t_set: BTreeSet<OceanVertex> = local_tethers
                        .iter()
                        .enumerate()
                        .filter(|(l, _)| local >> l & 1 == 1)
                        .map(|(_, &g)| tethers[g])
                        .collect();
                    b_tuple(k_indicator(model, raft, &t_set), raft.size())
                })
                .collect();
            (bits, values)
        })
        .collect();

    // Fast path: raft values and their running product fit in machine words.
    let as_u64: Option<Vec<Vec<u64>>> = tables
        .iter()
        .map(|(_, vals)| vals.iter().map(BigUint::to_u64).collect())
        .collect();
    if let Some(vals64) = as_u64 {
        let bit_budget: u64 = vals64
            .iter()
            .map(|vals| vals.iter().copied().max().unwrap_or(1).max(1).ilog2() as u64 + 1)
            .sum();
        if bit_budget <= 120 {
            let mut total = BigUint::zero();
            let mut partial: u128 = 0;
            for mask in 0u64..(1 << tethers.len()) {
                let mut product: u128 = 1;
                for ((bits, _), vals) in tables.iter().zip(&vals64) {
                    let local: usize = bits
                        .iter()
                        .map(|&(g, l)| (((mask >> g) & 1) as usize) << l)
                        .sum();
                    product *= vals[local] as u128;
                }
                partial = match partial.checked_add(product) {
                    Some(p) => p,
                    None => {
                        total += BigUint::from(partial);
                        product
                    }
                };
            }
            return total + BigUint::from(partial);
        }
    }

    let mut total = BigUint::zero();
    for mask in 0u64..(1 << tethers.len()) {
        let mut product = BigUint::one();
        for (bits, vals) in &tables {
            let local: usize = bits
                .iter()
                .map(|&(g, l)| (((mask >> g) & 1) as usize) << l)
                .sum();
            product *= &vals[local];
        }
        total += product;
    }
    total
}

/// Number of parabolic double cosets of `S_n` with minimal element `w`.
pub fn c_w_symmetric(w: &Permutation) -> BigUint {
    let model = classify(&Ocean::build(AscentProfile::from_permutation(w)));
    assert!(
        model.wharfs.is_empty(),
        "type A oceans never contain wharfs"
    );
    tether_sum(&model) << model.floats.len()
}

/// `c_w` for permutations along with the marine-model summary and per-T
/// breakdown, for reporting.
pub fn c_w_symmetric_detailed(
    w: &Permutation,
) -> (MarineModel, Vec<(BTreeSet<OceanVertex>, BigUint)>, BigUint) {
    let model = classify(&Ocean::build(AscentProfile::from_permutation(w)));
    let products = per_tether_products(&model);
    let total: BigUint =
        products.iter().map(|(_, p)| p.clone()).sum::<BigUint>() << model.floats.len();
    (model, products, total)
}

/// Number of parabolic double cosets with minimal element described by
/// `profile`, for an arbitrary Coxeter graph.
pub fn c_w_general(profile: &AscentProfile) -> BigUint {
    let model = classify(&Ocean::build(profile.clone()));
    c_w_from_model(&model)
}

/// The harbor sum over all rope/tether selections, wharf fills, and legal
/// labelings.
pub fn c_w_from_model(model: &MarineModel) -> BigUint {
    let mut selectable: Vec<OceanVertex> = Vec::new();
    selectable.extend(model.ropes.iter().copied());
    selectable.extend(model.tethers.iter().copied());
    selectable.sort();
    assert!(selectable.len() < 32);

    let mut total = BigUint::zero();
    let wharf_count = model.wharfs.len();
    for mask in 0u64..(1 << selectable.len()) {
        let selected: BTreeSet<OceanVertex> = selectable
            .iter()
            .enumerate()
            .filter(|(b, _)| mask >> b & 1 == 1)
            .map(|(_, &v)| v)
            .collect();
        let mut fills = vec![0usize; wharf_count];
        loop {
            let choice = WharfChoice {
                selected: selected.clone(),
                wharf_fill: fills.iter().map(|&f| Tile::ALL[f]).collect(),
            };
            let harbor = build_harbor(model, &choice);
            for labeling in legal_labelings(&harbor) {
                let mut product = BigUint::one();
                for (e, &(la, lb)) in labeling.iter().enumerate() {
                    product *= a_pair(la, lb, harbor.edges[e].size)
                        .expect("legal labelings only produce legal pairs");
                    if product.is_zero() {
                        break;
                    }
                }
                total += product;
            }
            // Next wharf fill in mixed radix 4.
            let mut carry = 0;
            while carry < wharf_count {
                fills[carry] += 1;
                if fills[carry] < 4 {
                    break;
                }
                fills[carry] = 0;
                carry += 1;
            }
            if carry == wharf_count {
                break;
            }
        }
    }
    total << model.floats.len()
}

/// Closed form for a single wharf with three raft branches of sizes
/// `i`, `j`, `k`, each ending in an empty boundary.
pub fn branch(i: usize, j: usize, k: usize) -> BigUint {
    use HalfEdgeLabel as L;
    let a = |u: HalfEdgeLabel, m: usize| a_pair(L::Open, u, m).unwrap();
    let sizes = [i, j, k];

    let open: BigUint = sizes.iter().map(|&m| a(L::Open, m)).product();
    let top: BigUint = sizes.iter().map(|&m| a(L::Top, m)).product();

    // Bottom-filled wharf: each half-edge Ox or oX, not all oX.
    let mut bot = BigUint::zero();
    for labels in 0u32..8 {
        if labels == 0 {
            continue; // all oX
        }
        let mut term = BigUint::one();
        for (b, &m) in sizes.iter().enumerate() {
            let label = if labels >> b & 1 == 1 {
                L::BotRunThenTop
            } else {
                L::BotRunThenOpen
            };
            term *= a(label, m);
        }
        bot += term;
    }

    // Fully filled wharf: labels from the three Both-run kinds, with at
    // least one BothRunThenTop and one BothRunThenBot.
    let mut both = BigUint::zero();
    let kinds = [L::BothRunThenTop, L::BothRunThenBot, L::BothRunThenOpen];
    for l0 in 0..3 {
        for l1 in 0..3 {
            for l2 in 0..3 {
                let chosen = [kinds[l0], kinds[l1], kinds[l2]];
                if !chosen.contains(&L::BothRunThenTop) || !chosen.contains(&L::BothRunThenBot) {
                    continue;
                }
                let term: BigUint = sizes.iter().zip(chosen).map(|(&m, u)| a(u, m)).product();
                both += term;
            }
        }
    }

    open + top + bot + both
}

/// Closed form for a circular raft of size `n` (the cycle graph on `n + 1`
/// vertices at the identity).
pub fn circular(n: usize) -> BigUint {
    use HalfEdgeLabel as L;
    let a = |u: HalfEdgeLabel, v: HalfEdgeLabel| a_pair(u, v, n).unwrap();
    a(L::Open, L::Open)
        + a(L::Top, L::Top)
        + a(L::BotRunThenTop, L::BotRunThenTop)
        + a(L::BotRunThenTop, L::BotRunThenOpen) * 2u32
        + a(L::BothRunThenTop, L::BothRunThenBot) * 2u32
}

/// Total number of distinct parabolic double cosets of `S_n`.
pub fn p_n(n: usize) -> BigUint {
    p_n_with_workers(n, 0)
}

/// `p_n` with an explicit worker count (`0` = rayon default).
pub fn p_n_with_workers(n: usize, workers: usize) -> BigUint {
    assert!(n >= 1);
    if n == 1 {
        return BigUint::one();
    }
    let run = || {
        // Parallelize over the first entry of the one-line notation.
        (1..=n as u8)
            .collect::<Vec<u8>>()
            .par_iter()
            .map(|&first| {
                let rest: Vec<u8> = (1..=n as u8).filter(|&v| v != first).collect();
                let mut total = BigUint::zero();
                let mut perm = Vec::with_capacity(n);
                permute_suffixes(&mut perm, &rest, first, &mut total);
                total
            })
            .sum()
    };
    if workers == 0 {
        run()
    } else {
        rayon::ThreadPoolBuilder::new()
            .num_threads(workers)
            .build()
            .expect("worker pool")
            .install(run)
    }
}

fn permute_suffixes(prefix: &mut Vec<u8>, remaining: &[u8], first: u8, total: &mut BigUint) {
    if remaining.is_empty() {
        let mut one_line = Vec::with_capacity(prefix.len() + 1);
        one_line.push(first);
        one_line.extend_from_slice(prefix);
        let w = Permutation::new(one_line).unwrap();
        *total += c_w_symmetric(&w);
        return;
    }
    for idx in 0..remaining.len() {
        let mut rest = remaining.to_vec();
        let v = rest.remove(idx);
        prefix.push(v);
        permute_suffixes(prefix, &rest, first, total);
        prefix.pop();
    }
}

/// Number of triples `(I, w, J)` with `w` minimal: the two-way contingency
/// table count.
pub fn contingency(n: usize) -> BigUint {
    assert!(n >= 1);
    Permutation::all(n)
        .map(|w| BigUint::one() << (w.left_ascents().len() + w.right_ascents().len()))
        .sum()
}

/// Exact expected number of tethers of a uniform element of `S_n`.
pub fn expected_tethers(n: usize) -> BigRational {
    assert!(n >= 1);
    if n <= 2 {
        return BigRational::zero();
    }
    let num = BigInt::from((n as i64 - 3) * (n as i64 - 4));
    let den = BigInt::from(n as i64 * (n as i64 - 1) * (n as i64 - 2));
    BigRational::new(num, den)
}

/// Empirical counterpart of [`expected_tethers`]: a full sweep of `S_n`.
pub fn expected_tethers_empirical(n: usize) -> BigRational {
    assert!(n >= 1);
    let mut total = BigInt::zero();
    let mut count = BigInt::zero();
    for w in Permutation::all(n) {
        let model = classify(&Ocean::build(AscentProfile::from_permutation(&w)));
        total += BigInt::from(model.tethers.len());
        count += BigInt::one();
    }
    BigRational::new(total, count)
}
