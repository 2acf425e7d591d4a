//! Counting and canonicalizing parabolic double cosets `W_I w W_J` of
//! Coxeter groups with a fixed minimal element.
//!
//! The library is organized around the marine model: the two-row "ocean"
//! graph built from an element's ascent sets, whose rafts are counted by an
//! eight-state automaton. Exhaustive oracles over symmetric and signed
//! permutation groups cross-validate every formula on small ranks.

pub mod dot;
pub mod doubled;
pub mod enumerate;
pub mod graph;
pub mod harbor;
pub mod ocean;
pub mod oracle;
pub mod perm;
pub mod profile;
pub mod seq;
pub mod signed;
