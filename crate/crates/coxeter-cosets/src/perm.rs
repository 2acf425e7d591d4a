//! Permutations in one-line notation and their Coxeter combinatorics:
//! length, ascent/descent sets, small ascents, the greedy minimal/maximal
//! coset representatives, and breadth-first double-coset closures.

use std::collections::{BTreeSet, HashSet, VecDeque};
use std::fmt;

/// A permutation of `{1..n}` in one-line notation. Generator indices are
/// 1-based: `s_j` swaps positions `j` and `j+1`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Permutation {
    one_line: Vec<u8>,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum PermError {
    #[error("one-line notation {0:?} is not a permutation of 1..n")]
    NotAPermutation(Vec<u8>),
    #[error("cannot parse {0:?} as a permutation")]
    Unparseable(String),
}

impl Permutation {
    pub fn new(one_line: Vec<u8>) -> Result<Permutation, PermError> {
        let n = one_line.len();
        let mut seen = vec![false; n + 1];
        for &v in &one_line {
            if v == 0 || v as usize > n || seen[v as usize] {
                return Err(PermError::NotAPermutation(one_line));
            }
            seen[v as usize] = true;
        }
        Ok(Permutation { one_line })
    }

    pub fn identity(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n as u8).collect(),
        }
    }

    pub fn longest(n: usize) -> Permutation {
        Permutation {
            one_line: (1..=n as u8).rev().collect(),
        }
    }

    /// Accepts whitespace- or comma-separated one-line notation, or a
    /// compact digit string like `7123546` when `n <= 9`.
    pub fn parse(text: &str) -> Result<Permutation, PermError> {
        let cleaned = text.trim();
        let values: Vec<u8> = if cleaned.contains(|c: char| c.is_whitespace() || c == ',') {
            cleaned
                .split(|c: char| c.is_whitespace() || c == ',')
                .filter(|t| !t.is_empty())
                .map(|t| {
                    t.parse::<u8>()
                        .map_err(|_| PermError::Unparseable(text.into()))
                })
                .collect::<Result<_, _>>()?
        } else {
            if cleaned.is_empty() || !cleaned.chars().all(|c| c.is_ascii_digit()) {
                return Err(PermError::Unparseable(text.into()));
            }
            cleaned
                .chars()
                .map(|c| c.to_digit(10).unwrap() as u8)
                .collect()
        };
        Permutation::new(values)
    }

    pub fn n(&self) -> usize {
        self.one_line.len()
    }

    pub fn one_line(&self) -> &[u8] {
        &self.one_line
    }

    /// Image of position `i` (1-based).
    pub fn apply(&self, i: usize) -> usize {
        self.one_line[i - 1] as usize
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u8; self.n()];
        for (pos, &val) in self.one_line.iter().enumerate() {
            inv[val as usize - 1] = pos as u8 + 1;
        }
        Permutation { one_line: inv }
    }

    /// Coxeter length: the inversion count.
    pub fn length(&self) -> usize {
        let n = self.n();
        let mut inv = 0;
        for i in 0..n {
            for j in i + 1..n {
                if self.one_line[i] > self.one_line[j] {
                    inv += 1;
                }
            }
        }
        inv
    }

    /// Right multiplication by `s_j`: swap positions `j`, `j+1`.
    pub fn mul_right(&self, j: usize) -> Permutation {
        debug_assert!(j >= 1 && j < self.n());
        let mut v = self.one_line.clone();
        v.swap(j - 1, j);
        Permutation { one_line: v }
    }

    /// Left multiplication by `s_i`: swap the values `i`, `i+1`.
    pub fn mul_left(&self, i: usize) -> Permutation {
        debug_assert!(i >= 1 && i < self.n());
        let mut v = self.one_line.clone();
        for x in v.iter_mut() {
            if *x as usize == i {
                *x = i as u8 + 1;
            } else if *x as usize == i + 1 {
                *x = i as u8;
            }
        }
        Permutation { one_line: v }
    }

    pub fn right_ascents(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&j| self.one_line[j - 1] < self.one_line[j])
            .collect()
    }

    pub fn right_descents(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&j| self.one_line[j - 1] > self.one_line[j])
            .collect()
    }

    pub fn left_ascents(&self) -> BTreeSet<usize> {
        self.inverse().right_ascents()
    }

    pub fn left_descents(&self) -> BTreeSet<usize> {
        self.inverse().right_descents()
    }

    /// Small right ascents: positions `j` with `w(j+1) = w(j) + 1`, so that
    /// `w s_j w^{-1} = s_{w(j)}`.
    pub fn small_right_ascents(&self) -> BTreeSet<usize> {
        (1..self.n())
            .filter(|&j| self.one_line[j] == self.one_line[j - 1] + 1)
            .collect()
    }

    /// The conjugation map on small right ascents, `j -> w(j)`.
    pub fn small_ascent_value(&self, j: usize) -> usize {
        debug_assert!(self.small_right_ascents().contains(&j));
        self.apply(j)
    }

    /// All permutations of `S_n` in lexicographic order.
    pub fn all(n: usize) -> impl Iterator<Item = Permutation> {
        LexPermutations {
            next: Some(Permutation::identity(n)),
        }
    }
}

impl fmt::Display for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let words: Vec<String> = self.one_line.iter().map(|v| v.to_string()).collect();
        write!(f, "{}", words.join(" "))
    }
}

struct LexPermutations {
    next: Option<Permutation>,
}

impl Iterator for LexPermutations {
    type Item = Permutation;

    fn next(&mut self) -> Option<Permutation> {
        let current = self.next.take()?;
        let mut v = current.one_line.clone();
        let n = v.len();
        self.next = if n < 2 {
            None
        } else {
            // Standard next-permutation step.
            let mut i = n - 1;
            while i > 0 && v[i - 1] >= v[i] {
                i -= 1;
            }
            if i == 0 {
                None
            } else {
                let mut j = n - 1;
                while v[j] <= v[i - 1] {
                    j -= 1;
                }
                v.swap(i - 1, j);
                v[i..].reverse();
                Some(Permutation { one_line: v })
            }
        };
        Some(current)
    }
}

/// Greedy step direction: toward the minimal or maximal coset element.
#[derive(Clone, Copy, PartialEq, Eq)]
enum Goal {
    Min,
    Max,
}

fn greedy(
    i_set: &BTreeSet<usize>,
    w: &Permutation,
    j_set: &BTreeSet<usize>,
    goal: Goal,
) -> Permutation {
    let mut current = w.clone();
    loop {
        let (left_hits, right_hits) = match goal {
            Goal::Min => (current.left_descents(), current.right_descents()),
            Goal::Max => (current.left_ascents(), current.right_ascents()),
        };
        // Smallest applicable index, left side first, for determinism.
        if let Some(&i) = i_set.iter().find(|i| left_hits.contains(i)) {
            current = current.mul_left(i);
            continue;
        }
        if let Some(&j) = j_set.iter().find(|j| right_hits.contains(j)) {
            current = current.mul_right(j);
            continue;
        }
        return current;
    }
}

/// The unique minimal element of `W_I w W_J`, found by greedily removing
/// descents on the allowed sides.
pub fn greedy_min(
    i_set: &BTreeSet<usize>,
    w: &Permutation,
    j_set: &BTreeSet<usize>,
) -> Permutation {
    greedy(i_set, w, j_set, Goal::Min)
}

/// The unique maximal element of `W_I w W_J`, dual to [`greedy_min`].
pub fn greedy_max(
    i_set: &BTreeSet<usize>,
    w: &Permutation,
    j_set: &BTreeSet<usize>,
) -> Permutation {
    greedy(i_set, w, j_set, Goal::Max)
}

/// The full element set of `W_I w W_J`, as the closure of `{w}` under left
/// multiplication by `I` and right multiplication by `J`.
pub fn coset_closure(
    i_set: &BTreeSet<usize>,
    w: &Permutation,
    j_set: &BTreeSet<usize>,
) -> BTreeSet<Permutation> {
    let mut seen: HashSet<Permutation> = HashSet::new();
    let mut queue = VecDeque::new();
    seen.insert(w.clone());
    queue.push_back(w.clone());
    while let Some(x) = queue.pop_front() {
        for &i in i_set {
            let y = x.mul_left(i);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
        for &j in j_set {
            let y = x.mul_right(j);
            if seen.insert(y.clone()) {
                queue.push_back(y);
            }
        }
    }
    seen.into_iter().collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(text: &str) -> Permutation {
        Permutation::parse(text).unwrap()
    }

    fn set(items: &[usize]) -> BTreeSet<usize> {
        items.iter().copied().collect()
    }

    #[test]
    fn length_is_inversion_count() {
        assert_eq!(p("7123546").length(), 7);
        assert_eq!(Permutation::identity(6).length(), 0);
        assert_eq!(p("54321").length(), 10);
    }

    #[test]
    fn ascent_sets_of_7123546() {
        let w = p("7123546");
        assert_eq!(w.right_ascents(), set(&[2, 3, 4, 6]));
        assert_eq!(w.left_ascents(), set(&[1, 2, 3, 5]));
        assert_eq!(w.right_descents(), set(&[1, 5]));
        assert_eq!(w.left_descents(), set(&[4, 6]));
        assert_eq!(w.small_right_ascents(), set(&[2, 3]));
        assert_eq!(w.small_ascent_value(2), 1);
        assert_eq!(w.small_ascent_value(3), 2);
    }

    #[test]
    fn ascents_partition_positions() {
        for w in Permutation::all(5) {
            let asc = w.right_ascents();
            let des = w.right_descents();
            assert!(asc.is_disjoint(&des));
            assert_eq!(asc.len() + des.len(), 4);
            assert_eq!(w.left_ascents(), w.inverse().right_ascents());
        }
    }

    #[test]
    fn identity_small_ascents() {
        let e = Permutation::identity(6);
        assert_eq!(e.right_ascents(), set(&[1, 2, 3, 4, 5]));
        assert_eq!(e.small_right_ascents(), set(&[1, 2, 3, 4, 5]));
        assert!(p("54321").small_right_ascents().is_empty());
    }

    #[test]
    fn big_example_small_ascents() {
        let w = p("1 3 4 5 7 8 2 6 14 15 16 9 10 11 12 13");
        assert_eq!(
            w.small_right_ascents(),
            set(&[2, 3, 5, 9, 10, 12, 13, 14, 15])
        );
    }

    #[test]
    fn greedy_min_max_example() {
        let w = p("3512467");
        let i = set(&[1, 3, 4]);
        let j = set(&[2, 3, 5, 6]);
        assert_eq!(greedy_min(&i, &w, &j), p("3124567"));
        assert_eq!(greedy_max(&i, &w, &j), p("5421763"));
        assert_eq!(greedy_min(&set(&[]), &w, &set(&[])), w);
    }

    #[test]
    fn greedy_result_independent_of_move_order() {
        use rand::seq::SliceRandom;
        use rand::SeedableRng;
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(0xC05E7);
        for w in Permutation::all(5) {
            let i = set(&[1, 3]);
            let j = set(&[2, 4]);
            let reference = greedy_min(&i, &w, &j);
            for _ in 0..4 {
                // Random applicable move each step instead of the smallest.
                let mut x = w.clone();
                loop {
                    let mut moves: Vec<(bool, usize)> = Vec::new();
                    moves.extend(x.left_descents().intersection(&i).map(|&v| (true, v)));
                    moves.extend(x.right_descents().intersection(&j).map(|&v| (false, v)));
                    match moves.choose(&mut rng) {
                        None => break,
                        Some(&(left, v)) => {
                            x = if left { x.mul_left(v) } else { x.mul_right(v) };
                        }
                    }
                }
                assert_eq!(x, reference);
            }
        }
    }

    #[test]
    fn closure_degenerate_cases() {
        let w = p("231");
        assert_eq!(coset_closure(&set(&[]), &w, &set(&[])).len(), 1);
        let e = Permutation::identity(3);
        assert_eq!(coset_closure(&set(&[1, 2]), &e, &set(&[])).len(), 6);
    }

    #[test]
    fn closure_of_interval_e_54312() {
        let e = Permutation::identity(5);
        let cl = coset_closure(&set(&[2, 3, 4]), &e, &set(&[1, 2, 3]));
        // |W_I| |W_J| / |W_H| = 24 * 24 / 6
        assert_eq!(cl.len(), 96);
        assert_eq!(cl.iter().max_by_key(|x| x.length()).unwrap(), &p("54312"));
        assert_eq!(
            greedy_min(&set(&[2, 3, 4]), &p("54312"), &set(&[1, 2, 3])),
            e
        );
    }

    #[test]
    fn closure_min_is_greedy_min() {
        for w in Permutation::all(4) {
            let i = set(&[1, 2]);
            let j = set(&[2, 3]);
            let cl = coset_closure(&i, &w, &j);
            let min = greedy_min(&i, &w, &j);
            assert!(cl.contains(&min));
            assert_eq!(cl.iter().min_by_key(|x| x.length()).unwrap(), &min);
        }
    }

    #[test]
    fn double_parabolic_decomposition_size_formula() {
        // |W_I w W_J| = |W_I| |W_J| / |W_H| with H = I cut (w J w^-1),
        // checked exhaustively for minimal w.
        fn parabolic_order(n: usize, gens: &BTreeSet<usize>) -> usize {
            let graph = crate::graph::named_graph(crate::graph::Family::A, n - 1).unwrap();
            let subset: Vec<usize> = gens.iter().map(|&g| g - 1).collect();
            graph
                .connected_components(&subset)
                .into_iter()
                .map(|c| (1..=c.len() + 1).product::<usize>())
                .product()
        }
        for n in 2..=5 {
            for w in Permutation::all(n) {
                let asc_l: Vec<usize> = w.left_ascents().into_iter().collect();
                let asc_r: Vec<usize> = w.right_ascents().into_iter().collect();
                for li in 0..(1usize << asc_l.len()) {
                    let i: BTreeSet<usize> = asc_l
                        .iter()
                        .enumerate()
                        .filter(|(b, _)| li >> b & 1 == 1)
                        .map(|(_, &v)| v)
                        .collect();
                    for rj in 0..(1usize << asc_r.len()) {
                        let j: BTreeSet<usize> = asc_r
                            .iter()
                            .enumerate()
                            .filter(|(b, _)| rj >> b & 1 == 1)
                            .map(|(_, &v)| v)
                            .collect();
                        let h: BTreeSet<usize> = i
                            .iter()
                            .filter(|&&s| {
                                // s in w J w^-1 iff w^-1 s w is simple and in J
                                let jpos = w.inverse().apply(s);
                                w.inverse().apply(s + 1) == jpos + 1 && j.contains(&jpos)
                            })
                            .copied()
                            .collect();
                        let closure = coset_closure(&i, &w, &j);
                        assert_eq!(
                            closure.len() * parabolic_order(n, &h),
                            parabolic_order(n, &i) * parabolic_order(n, &j),
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn parse_rejects_garbage() {
        assert!(Permutation::parse("1 2 2").is_err());
        assert!(Permutation::parse("hello").is_err());
        assert!(Permutation::parse("0 1").is_err());
        assert_eq!(p("7 1 2 3 5 4 6"), p("7123546"));
        assert_eq!(p("3,1,2"), p("312"));
    }

    #[test]
    fn all_permutations_count() {
        assert_eq!(Permutation::all(4).count(), 24);
        assert_eq!(Permutation::all(1).count(), 1);
    }
}
