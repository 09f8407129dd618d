//! Exhaustive generation of Dyck, 2-Motzkin and ballot paths.
//!
//! Every family here is "nonnegative paths of a fixed length ending at a
//! fixed level". [`PathWalker`] visits such a family in lexicographic order
//! (U < D < S < W) by advancing a single step buffer in place, pruning any
//! prefix that dips below the axis or can no longer reach the terminal
//! level. The streaming iterators wrap a walker and allocate one path per
//! item; censuses that only read levels should drive the walker directly.

use std::iter::FusedIterator;
use std::marker::PhantomData;

use crate::error::{Error, Result};
use crate::numbers::{self, ExactInt};
use crate::paths::{
    BallotPath, DyckPath, DyckStep, LatticePath, MotzkinStep, Step, TwoMotzkinPath,
};

/// In-place lexicographic walker over nonnegative paths of length `len`
/// ending at level `target`, optionally below a fixed prefix.
#[derive(Debug, Clone)]
pub struct PathWalker<S: Step> {
    len: usize,
    target: i32,
    prefix_len: usize,
    steps: Vec<S>,
    levels: Vec<i32>,
    fresh: bool,
    done: bool,
}

impl<S: Step> PathWalker<S> {
    pub fn new(len: usize, target: i32) -> Self {
        Self::with_prefix(len, target, &[])
    }

    /// Walks only the completions of `prefix`. If the prefix is infeasible
    /// the walk is empty.
    pub fn with_prefix(len: usize, target: i32, prefix: &[S]) -> Self {
        let mut walker = PathWalker {
            len,
            target,
            prefix_len: prefix.len(),
            steps: Vec::with_capacity(len),
            levels: Vec::with_capacity(len + 1),
            fresh: true,
            done: false,
        };
        walker.levels.push(0);
        if prefix.len() > len || target < 0 {
            walker.done = true;
            return walker;
        }
        for (i, &step) in prefix.iter().enumerate() {
            let level = walker.levels[i];
            if !walker.feasible(level, step, len - i - 1) {
                walker.done = true;
                return walker;
            }
            walker.steps.push(step);
            walker.levels.push(level + step.delta());
        }
        if prefix.is_empty() && !walker.reachable(0, len) {
            walker.done = true;
            return walker;
        }
        walker.fill_from(prefix.len());
        walker
    }

    fn reachable(&self, level: i32, remaining: usize) -> bool {
        let gap = (level - self.target).unsigned_abs() as usize;
        if level < 0 || gap > remaining {
            return false;
        }
        S::ALPHABET.iter().any(|s| s.is_level()) || (remaining - gap).is_multiple_of(2)
    }

    fn feasible(&self, level: i32, step: S, remaining_after: usize) -> bool {
        self.reachable(level + step.delta(), remaining_after)
    }

    /// Completes positions `from..len` with the smallest feasible steps.
    fn fill_from(&mut self, from: usize) {
        self.steps.truncate(from);
        self.levels.truncate(from + 1);
        for i in from..self.len {
            let level = self.levels[i];
            let step = *S::ALPHABET
                .iter()
                .find(|&&s| self.feasible(level, s, self.len - i - 1))
                .expect("a reachable level always has a feasible next step");
            self.steps.push(step);
            self.levels.push(level + step.delta());
        }
    }

    /// Moves to the next path. Returns `false` once the family is
    /// exhausted; the first call lands on the smallest path.
    pub fn advance(&mut self) -> bool {
        if self.done {
            return false;
        }
        if self.fresh {
            self.fresh = false;
            return true;
        }
        for i in (self.prefix_len..self.len).rev() {
            let level = self.levels[i];
            let current = self.steps[i];
            let next = S::ALPHABET
                .iter()
                .copied()
                .filter(|&s| s > current)
                .find(|&s| self.feasible(level, s, self.len - i - 1));
            if let Some(step) = next {
                self.steps[i] = step;
                self.levels[i + 1] = level + step.delta();
                self.fill_from(i + 1);
                return true;
            }
        }
        self.done = true;
        false
    }

    pub fn steps(&self) -> &[S] {
        &self.steps
    }

    pub fn levels(&self) -> &[i32] {
        &self.levels
    }

    /// Number of remaining paths, consuming the walker.
    pub fn count(mut self) -> u64 {
        let mut total = 0;
        while self.advance() {
            total += 1;
        }
        total
    }
}

/// All feasible prefixes of length `depth` (or shorter, if `len < depth`)
/// for the family walked by `PathWalker::new(len, target)`. The completions
/// of these prefixes partition the family.
pub fn feasible_prefixes<S: Step>(len: usize, target: i32, depth: usize) -> Vec<Vec<S>> {
    let depth = depth.min(len);
    let probe = PathWalker::<S> {
        len,
        target,
        prefix_len: 0,
        steps: Vec::new(),
        levels: vec![0],
        fresh: true,
        done: true,
    };
    if !probe.reachable(0, len) {
        return Vec::new();
    }
    let mut out = Vec::new();
    let mut stack = vec![(Vec::new(), 0i32)];
    while let Some((prefix, level)) = stack.pop() {
        if prefix.len() == depth {
            out.push(prefix);
            continue;
        }
        for &step in S::ALPHABET.iter().rev() {
            if probe.feasible(level, step, len - prefix.len() - 1) {
                let mut next = prefix.clone();
                next.push(step);
                stack.push((next, level + step.delta()));
            }
        }
    }
    out
}

/// Streams the paths a walker visits, wrapped by `wrap`.
pub struct Paths<S: Step, T> {
    walker: PathWalker<S>,
    wrap: fn(LatticePath<S>) -> T,
    _marker: PhantomData<T>,
}

impl<S: Step, T> Iterator for Paths<S, T> {
    type Item = T;

    fn next(&mut self) -> Option<T> {
        if self.walker.advance() {
            Some((self.wrap)(LatticePath::from_steps(
                self.walker.steps().to_vec(),
            )))
        } else {
            None
        }
    }
}

impl<S: Step, T> FusedIterator for Paths<S, T> {}

fn stream<S: Step, T>(walker: PathWalker<S>, wrap: fn(LatticePath<S>) -> T) -> Paths<S, T> {
    Paths {
        walker,
        wrap,
        _marker: PhantomData,
    }
}

pub type DyckPaths = Paths<DyckStep, DyckPath>;
pub type MotzkinPaths = Paths<MotzkinStep, TwoMotzkinPath>;
pub type BallotPaths = Paths<DyckStep, BallotPath>;

/// Dyck paths of length `2n` in lexicographic order.
pub fn enum_dyck(n: usize) -> DyckPaths {
    stream(PathWalker::new(2 * n, 0), DyckPath)
}

/// 2-Motzkin paths of length `len` in lexicographic order.
pub fn enum_motzkin2(len: usize) -> MotzkinPaths {
    stream(PathWalker::new(len, 0), TwoMotzkinPath)
}

/// Nonnegative up/down paths of length `2n - 1` ending at level `2r - 1`.
pub fn enum_ballot(n: usize, r: usize) -> Result<BallotPaths> {
    if r < 1 || r > n {
        return Err(Error::Parameter(format!(
            "ballot family needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    Ok(stream(
        PathWalker::new(2 * n - 1, 2 * r as i32 - 1),
        BallotPath,
    ))
}

/// Nonnegative up/down paths of length `len` ending at level 2.
pub fn enum_ballot_even(len: usize) -> BallotPaths {
    stream(PathWalker::new(len, 2), BallotPath)
}

/// Ordered pairs of (possibly empty) Dyck paths whose lengths sum to `2n`,
/// grouped by the length of the first component, shortest first.
pub fn enum_pairs_total(n: usize) -> impl Iterator<Item = (DyckPath, DyckPath)> {
    (0..=n).flat_map(move |k| {
        enum_dyck(k)
            .flat_map(move |first| enum_dyck(n - k).map(move |second| (first.clone(), second)))
    })
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathFamily {
    Dyck(usize),
    Motzkin2(usize),
    Ballot(usize, usize),
    BallotEven(usize),
}

impl PathFamily {
    /// Closed-form size of the family.
    pub fn expected_count(self) -> Result<ExactInt> {
        match self {
            PathFamily::Dyck(n) => Ok(numbers::catalan(n as u64)),
            PathFamily::Motzkin2(len) => Ok(numbers::catalan(len as u64 + 1)),
            PathFamily::Ballot(n, r) => numbers::ballot_number(n as u64, r as u64),
            PathFamily::BallotEven(len) => Ok(numbers::nonnegative_paths_to(len as u64, 2)),
        }
    }

    /// Size of the family by exhaustive walk.
    pub fn count(self) -> Result<u64> {
        Ok(match self {
            PathFamily::Dyck(n) => PathWalker::<DyckStep>::new(2 * n, 0).count(),
            PathFamily::Motzkin2(len) => PathWalker::<MotzkinStep>::new(len, 0).count(),
            PathFamily::Ballot(n, r) => {
                if r < 1 || r > n {
                    return Err(Error::Parameter(format!(
                        "ballot family needs 1 <= r <= n, got n={n}, r={r}"
                    )));
                }
                PathWalker::<DyckStep>::new(2 * n - 1, 2 * r as i32 - 1).count()
            }
            PathFamily::BallotEven(len) => PathWalker::<DyckStep>::new(len, 2).count(),
        })
    }
}
