//! Signed permutations (types B and D) in window notation, just enough
//! group arithmetic for the identity-element oracle.

use std::collections::{HashSet, VecDeque};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum SignedKind {
    B,
    D,
}

#[derive(Debug, thiserror::Error, PartialEq, Eq)]
pub enum SignedError {
    #[error("window {0:?} is not a signed permutation")]
    BadWindow(Vec<i32>),
    #[error("type D requires an even number of negative entries, got {0:?}")]
    OddNegatives(Vec<i32>),
}

/// A signed permutation: `window[i-1] = w(i)`, extended to negatives by
/// `w(-i) = -w(i)`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct SignedPermutation {
    window: Vec<i32>,
    kind: SignedKind,
}

impl SignedPermutation {
    pub fn new(window: Vec<i32>, kind: SignedKind) -> Result<SignedPermutation, SignedError> {
        let n = window.len();
        let mut seen = vec![false; n + 1];
        for &v in &window {
            let a = v.unsigned_abs() as usize;
            if v == 0 || a > n || seen[a] {
                return Err(SignedError::BadWindow(window));
            }
            seen[a] = true;
        }
        if kind == SignedKind::D && window.iter().filter(|&&v| v < 0).count() % 2 == 1 {
            return Err(SignedError::OddNegatives(window));
        }
        Ok(SignedPermutation { window, kind })
    }

    pub fn identity(n: usize, kind: SignedKind) -> SignedPermutation {
        SignedPermutation {
            window: (1..=n as i32).collect(),
            kind,
        }
    }

    pub fn n(&self) -> usize {
        self.window.len()
    }

    pub fn window(&self) -> &[i32] {
        &self.window
    }

    /// Generator count: `s_1..s_{n-1}` are adjacent transpositions, `s_n`
    /// is the sign change (B) or the signed transposition of the last two
    /// positions (D).
    pub fn generator_count(&self) -> usize {
        self.n()
    }

    /// Right multiplication by `s_i` (acting on positions).
    pub fn mul_right(&self, i: usize) -> SignedPermutation {
        let n = self.n();
        debug_assert!(i >= 1 && i <= n);
        let mut w = self.window.clone();
        match (self.kind, i) {
            (SignedKind::B, i) if i == n => w[n - 1] = -w[n - 1],
            (SignedKind::D, i) if i == n => {
                w.swap(n - 2, n - 1);
                w[n - 2] = -w[n - 2];
                w[n - 1] = -w[n - 1];
            }
            _ => w.swap(i - 1, i),
        }
        SignedPermutation {
            window: w,
            kind: self.kind,
        }
    }

    /// Left multiplication by `s_i`, via `s x = (x^{-1} s)^{-1}`.
    pub fn mul_left(&self, i: usize) -> SignedPermutation {
        self.inverse().mul_right(i).inverse()
    }

    pub fn inverse(&self) -> SignedPermutation {
        let mut w = vec![0i32; self.n()];
        for (pos, &val) in self.window.iter().enumerate() {
            let a = val.unsigned_abs() as usize;
            w[a - 1] = if val < 0 {
                -(pos as i32 + 1)
            } else {
                pos as i32 + 1
            };
        }
        SignedPermutation {
            window: w,
            kind: self.kind,
        }
    }

    /// Coxeter length with respect to the generators above.
    pub fn length(&self) -> usize {
        // Conjugating by the position reversal moves the special generator
        // to the front, where the classical window formulas apply.
        let n = self.n() as i32;
        let v: Vec<i32> = (1..=n)
            .map(|i| {
                let val = self.window[(n - i) as usize];
                val.signum() * (n + 1 - val.abs())
            })
            .collect();
        let mut inv = 0usize;
        for i in 0..v.len() {
            for j in i + 1..v.len() {
                if v[i] > v[j] {
                    inv += 1;
                }
            }
        }
        let neg: usize = v
            .iter()
            .filter(|&&x| x < 0)
            .map(|x| match self.kind {
                SignedKind::B => x.unsigned_abs() as usize,
                SignedKind::D => x.unsigned_abs() as usize - 1,
            })
            .sum();
        inv + neg
    }

    pub fn right_descents(&self) -> Vec<usize> {
        let len = self.length();
        (1..=self.generator_count())
            .filter(|&i| self.mul_right(i).length() < len)
            .collect()
    }

    pub fn left_descents(&self) -> Vec<usize> {
        let len = self.length();
        (1..=self.generator_count())
            .filter(|&i| self.mul_left(i).length() < len)
            .collect()
    }

    /// Every element of the group, by breadth-first closure from the
    /// identity. Order `2^n n!` for B, `2^{n-1} n!` for D.
    pub fn enumerate_group(n: usize, kind: SignedKind) -> Vec<SignedPermutation> {
        let e = SignedPermutation::identity(n, kind);
        let mut seen: HashSet<SignedPermutation> = HashSet::from([e.clone()]);
        let mut queue = VecDeque::from([e]);
        while let Some(x) = queue.pop_front() {
            for i in 1..=n {
                let y = x.mul_right(i);
                if seen.insert(y.clone()) {
                    queue.push_back(y);
                }
            }
        }
        seen.into_iter().collect()
    }
}
