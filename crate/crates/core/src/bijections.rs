//! Constructive maps between path families.
//!
//! Indexing convention: *points* are 0-based x-coordinates, *steps* are
//! 1-based, so step `i` joins point `i - 1` to point `i` and sits at
//! `steps()[i - 1]`. "The 2nd and 3rd steps" are therefore `steps()[1..3]`,
//! and "the step after point P" is `steps()[P]`.
//!
//! Maps exposed here, with their CLI names:
//!
//! | function               | CLI      | direction                                   |
//! |------------------------|----------|---------------------------------------------|
//! | [`motzkin_to_dyck`]    | `m2d`    | 2-Motzkin of length k -> Dyck of length 2k+2 |
//! | [`dyck_to_motzkin`]    | `d2m`    | inverse of the above                        |
//! | [`shrink_no_return`]   | `f`      | `TripleUpNoReturn` of length 2n+2 -> D_n    |
//! | [`expand_no_return`]   | `f-inv`  | D_n with height >= 2 -> `TripleUpNoReturn`  |
//! | [`shrink_return`]      | `g`      | `TripleUpReturn` of length 2n+2 -> D_n      |
//! | [`expand_return`]      | `g-inv`  | D_n with h+ >= h- + 3 -> `TripleUpReturn`   |
//! | [`split_balanced`]     | `pair`   | height-balanced Dyck path -> pair of paths  |
//! | [`join_balanced`]      | `unpair` | inverse of the above                        |
//!
//! Every map validates its output; an invalid output is reported as
//! [`Error::Internal`].

use num_traits::Zero;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::enumerate::{enum_dyck, feasible_prefixes, PathWalker};
use crate::error::{Error, Result};
use crate::numbers::{self, ExactInt};
use crate::paths::{
    markers, markers_of_levels, BallotPath, DyckPath, DyckStep, LatticePath, MotzkinStep,
    TwoMotzkinPath,
};

use DyckStep::{Down, Up};

fn checked_dyck(steps: Vec<DyckStep>, map: &str) -> Result<DyckPath> {
    DyckPath::from_steps(steps)
        .map_err(|e| Error::Internal(format!("{map} produced an invalid path: {e}")))
}

/// Replaces U -> UU, D -> DD, S -> UD, W -> DU and wraps the result in a
/// leading up step and trailing down step.
pub fn motzkin_to_dyck(path: &TwoMotzkinPath) -> Result<DyckPath> {
    let mut steps = Vec::with_capacity(2 * path.len() + 2);
    steps.push(Up);
    for step in path.steps() {
        let pair = match step {
            MotzkinStep::Up => [Up, Up],
            MotzkinStep::Down => [Down, Down],
            MotzkinStep::Straight => [Up, Down],
            MotzkinStep::Wavy => [Down, Up],
        };
        steps.extend(pair);
    }
    steps.push(Down);
    checked_dyck(steps, "motzkin_to_dyck")
}

/// Strips the outer steps and reads the interior in pairs:
/// UU -> U, DD -> D, UD -> S, DU -> W.
pub fn dyck_to_motzkin(path: &DyckPath) -> Result<TwoMotzkinPath> {
    let steps = path.steps();
    if steps.len() < 2 || steps[0] != Up || steps[steps.len() - 1] != Down {
        return Err(Error::Precondition(format!(
            "{:?} is not of the form U...D with an even interior",
            path.render()
        )));
    }
    let interior = &steps[1..steps.len() - 1];
    let motzkin = interior
        .chunks_exact(2)
        .map(|pair| match (pair[0], pair[1]) {
            (Up, Up) => MotzkinStep::Up,
            (Down, Down) => MotzkinStep::Down,
            (Up, Down) => MotzkinStep::Straight,
            (Down, Up) => MotzkinStep::Wavy,
        })
        .collect();
    TwoMotzkinPath::from_steps(motzkin)
        .map_err(|e| Error::Internal(format!("dyck_to_motzkin produced an invalid path: {e}")))
}

/// `+1` if the `m`-th step starts on an even level, `-1` otherwise. The
/// start of the `m`-th step is the point `m - 1`, which exists even when
/// the path has only `m - 1` steps.
pub fn weight(path: &TwoMotzkinPath, m: usize) -> Result<i32> {
    if m == 0 {
        return Err(Error::Parameter("weight needs m >= 1".into()));
    }
    if path.len() < m - 1 {
        return Err(Error::Parameter(format!(
            "weight with m={m} needs a path of length >= {}, got {}",
            m - 1,
            path.len()
        )));
    }
    Ok(if path.levels()[m - 1] % 2 == 0 { 1 } else { -1 })
}

/// Tally of positive and negative paths.
#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedCount {
    #[serde(with = "numbers::decimal")]
    pub positive: ExactInt,
    #[serde(with = "numbers::decimal")]
    pub negative: ExactInt,
}

impl SignedCount {
    fn from_tally(positive: u64, negative: u64) -> Self {
        SignedCount {
            positive: positive.into(),
            negative: negative.into(),
        }
    }

    /// Weighted sum: positive minus negative.
    pub fn difference(&self) -> ExactInt {
        &self.positive - &self.negative
    }

    pub fn total(&self) -> ExactInt {
        &self.positive + &self.negative
    }
}

fn check_mn(m: usize, n: usize) -> Result<()> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter(format!(
            "signed counts need m, n >= 1, got m={m}, n={n}"
        )));
    }
    Ok(())
}

fn tally_motzkin(walker: &mut PathWalker<MotzkinStep>, point: usize) -> (u64, u64) {
    let (mut pos, mut neg) = (0, 0);
    while walker.advance() {
        if walker.levels()[point] % 2 == 0 {
            pos += 1;
        } else {
            neg += 1;
        }
    }
    (pos, neg)
}

/// Positive and negative 2-Motzkin paths of length `m + n - 2`, by
/// exhaustive enumeration.
pub fn signed_count(m: usize, n: usize) -> Result<SignedCount> {
    check_mn(m, n)?;
    let mut walker = PathWalker::new(m + n - 2, 0);
    let (pos, neg) = tally_motzkin(&mut walker, m - 1);
    Ok(SignedCount::from_tally(pos, neg))
}

/// Same as [`signed_count`], with the enumeration split by path prefix
/// across the current rayon pool. Tallies are summed, so the result does
/// not depend on scheduling.
pub fn signed_count_par(m: usize, n: usize) -> Result<SignedCount> {
    check_mn(m, n)?;
    let len = m + n - 2;
    let prefixes = feasible_prefixes::<MotzkinStep>(len, 0, len.min(6));
    let (pos, neg) = prefixes
        .par_iter()
        .map(|prefix| tally_motzkin(&mut PathWalker::with_prefix(len, 0, prefix), m - 1))
        .reduce(|| (0, 0), |a, b| (a.0 + b.0, a.1 + b.1));
    Ok(SignedCount::from_tally(pos, neg))
}

/// Signed counts for every split `m + n - 2 = len`, from a single walk.
/// Entry `i` holds `(m, n) = (i + 1, len + 1 - i)`.
pub fn signed_count_row(len: usize) -> Vec<SignedCount> {
    let prefixes = feasible_prefixes::<MotzkinStep>(len, 0, len.min(6));
    let even = prefixes
        .par_iter()
        .map(|prefix| {
            let mut walker = PathWalker::with_prefix(len, 0, prefix);
            let mut even = vec![0u64; len + 1];
            let mut total = 0u64;
            while walker.advance() {
                total += 1;
                for (slot, level) in even.iter_mut().zip(walker.levels()) {
                    *slot += (level % 2 == 0) as u64;
                }
            }
            (even, total)
        })
        .reduce(
            || (vec![0u64; len + 1], 0),
            |(mut a, ta), (b, tb)| {
                a.iter_mut().zip(&b).for_each(|(x, y)| *x += y);
                (a, ta + tb)
            },
        );
    let (even, total) = even;
    even.into_iter()
        .map(|pos| SignedCount::from_tally(pos, total - pos))
        .collect()
}

/// Dyck paths of length `2m + 2n - 2` tallied by the level of point
/// `2m - 1`: `1 mod 4` is positive, `3 mod 4` negative.
pub fn signed_count_dyck(m: usize, n: usize) -> Result<SignedCount> {
    check_mn(m, n)?;
    let point = 2 * m - 1;
    let mut walker = PathWalker::<DyckStep>::new(2 * (m + n) - 2, 0);
    let (mut pos, mut neg) = (0, 0);
    while walker.advance() {
        match walker.levels()[point].rem_euclid(4) {
            1 => pos += 1,
            3 => neg += 1,
            other => {
                return Err(Error::Internal(format!(
                    "odd point {point} at even residue {other}"
                )))
            }
        }
    }
    Ok(SignedCount::from_tally(pos, neg))
}

/// Classification of Dyck paths of length at least 6 by their first three
/// steps, with the up-up-up class split by whether the path returns to
/// level one strictly between point 3 and its rightmost maximum.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum StartClass {
    UpDownUp,
    UpUpDown,
    TripleUpNoReturn,
    TripleUpReturn,
}

/// First point `x` with `3 < x < R` at level one, if any.
fn first_return_before_max(levels: &[i32], rightmost_max: usize) -> Option<usize> {
    (4..rightmost_max).find(|&x| levels[x] == 1)
}

pub fn classify_start(path: &DyckPath) -> Result<StartClass> {
    if path.len() < 6 {
        return Err(Error::Parameter(format!(
            "start classes need length >= 6, got {}",
            path.len()
        )));
    }
    Ok(match path.steps()[..3] {
        [Up, Down, Up] => StartClass::UpDownUp,
        [Up, Up, Down] => StartClass::UpUpDown,
        [Up, Up, Up] => {
            let r = path.markers()?.rightmost_max;
            match first_return_before_max(path.levels(), r) {
                None => StartClass::TripleUpNoReturn,
                Some(_) => StartClass::TripleUpReturn,
            }
        }
        _ => unreachable!("a Dyck path starts with U and cannot start UDD"),
    })
}

/// Removes the 2nd and 3rd steps of a `UpDownUp` or `UpUpDown` path. On
/// each class this is a bijection onto the Dyck paths two steps shorter.
pub fn contract_start(path: &DyckPath) -> Result<DyckPath> {
    match classify_start(path)? {
        StartClass::UpDownUp | StartClass::UpUpDown => {
            let mut steps = vec![Up];
            steps.extend_from_slice(&path.steps()[3..]);
            checked_dyck(steps, "contract_start")
        }
        other => Err(Error::Precondition(format!(
            "contraction is defined on UDU and UUD starts, got {other:?}"
        ))),
    }
}

fn require_class(path: &DyckPath, want: StartClass, name: &str) -> Result<()> {
    let got = classify_start(path).map_err(|_| {
        Error::Precondition(format!("not in {name}: length {} is below 6", path.len()))
    })?;
    if got != want {
        return Err(Error::Precondition(format!(
            "not in {name}: {:?} is {got:?}",
            path.render()
        )));
    }
    Ok(())
}

/// The map on up-up-up paths that never return to level one before their
/// rightmost maximum `R`: drop the 2nd and 3rd steps and turn the down step
/// leaving `R` into an up step. The point it leads to becomes the leftmost
/// maximum of the result.
pub fn shrink_no_return(path: &DyckPath) -> Result<DyckPath> {
    require_class(path, StartClass::TripleUpNoReturn, "N*")?;
    let r = path.markers()?.rightmost_max;
    let mut steps = path.steps().to_vec();
    steps[r] = steps[r].flipped();
    steps.drain(1..3);
    checked_dyck(steps, "shrink_no_return")
}

/// Inverse of [`shrink_no_return`]. Defined on every Dyck path of height at
/// least two.
pub fn expand_no_return(path: &DyckPath) -> Result<DyckPath> {
    if path.height() < 2 {
        return Err(Error::Precondition(format!(
            "height of {:?} is {}; only paths of height >= 2 are in the image",
            path.render(),
            path.height()
        )));
    }
    let q = path.markers()?.leftmost_max;
    let mut steps = path.steps().to_vec();
    steps[q - 1] = Down;
    steps.splice(1..1, [Up, Up]);
    let out = checked_dyck(steps, "expand_no_return")?;
    if classify_start(&out)? != StartClass::TripleUpNoReturn {
        return Err(Error::Internal(format!(
            "expand_no_return left N*: {}",
            out.render()
        )));
    }
    Ok(out)
}

/// The two stages of [`shrink_return`].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ReturnShrink {
    /// After dropping the 2nd and 3rd steps and raising the double descent
    /// into the first return: a ballot path of length `2n` ending at level 2.
    pub ballot: BallotPath,
    /// Point at level one that starts the raised double step.
    pub last_level_one: usize,
    pub path: DyckPath,
}

/// Both stages of the map on up-up-up paths that do return to level one
/// before their rightmost maximum.
pub fn shrink_return_staged(path: &DyckPath) -> Result<ReturnShrink> {
    require_class(path, StartClass::TripleUpReturn, "N**")?;
    let levels = path.levels();
    let r = path.markers()?.rightmost_max;
    let y = first_return_before_max(levels, r).expect("class guarantees a return");
    let x = y - 2;
    let mut steps = path.steps().to_vec();
    if steps[x..y] != [Down, Down] {
        return Err(Error::Internal(format!(
            "expected two down steps before point {y}"
        )));
    }
    steps[x] = Up;
    steps[x + 1] = Up;
    steps.drain(1..3);
    let ballot = BallotPath::new(LatticePath::from_steps(steps))
        .map_err(|e| Error::Internal(format!("shrink_return stage one: {e}")))?;
    if ballot.terminal().1 != 2 {
        return Err(Error::Internal(
            "shrink_return stage one must end at level 2".into(),
        ));
    }

    let l = ballot
        .levels()
        .iter()
        .position(|&v| v == ballot.height())
        .expect("nonempty");
    let mut steps = ballot.steps().to_vec();
    steps[l - 1] = Down;
    let out = checked_dyck(steps, "shrink_return")?;
    Ok(ReturnShrink {
        ballot,
        last_level_one: x - 2,
        path: out,
    })
}

/// The map on up-up-up paths that return to level one before their
/// rightmost maximum. Its image is exactly the Dyck paths with
/// `height_after >= height_before + 3`.
pub fn shrink_return(path: &DyckPath) -> Result<DyckPath> {
    shrink_return_staged(path).map(|s| s.path)
}

/// Inverse of [`shrink_return`].
pub fn expand_return(path: &DyckPath) -> Result<DyckPath> {
    let mk = markers(path)
        .map_err(|_| Error::Precondition("the empty path is not in the image".into()))?;
    if mk.height_after < mk.height_before + 3 {
        return Err(Error::Precondition(format!(
            "{:?} has h+ = {} <= h- + 2 = {}",
            path.render(),
            mk.height_after,
            mk.height_before + 2
        )));
    }
    let mut steps = path.steps().to_vec();
    steps[mk.rightmost_max] = Up;
    let ballot = LatticePath::from_steps(steps);
    let x = ballot
        .levels()
        .iter()
        .rposition(|&v| v == 1)
        .ok_or_else(|| Error::Internal("raised path has no level-one point".into()))?;
    let mut steps = ballot.into_steps();
    if steps.get(x..x + 2) != Some(&[Up, Up][..]) {
        return Err(Error::Internal(format!(
            "expected two up steps after point {x}"
        )));
    }
    steps[x] = Down;
    steps[x + 1] = Down;
    steps.splice(1..1, [Up, Up]);
    let out = checked_dyck(steps, "expand_return")?;
    if classify_start(&out)? != StartClass::TripleUpReturn {
        return Err(Error::Internal(format!(
            "expand_return left N**: {}",
            out.render()
        )));
    }
    Ok(out)
}

/// Dyck paths of length `2n` with `height_after <= height_before + 2`, with
/// the height-one path listed twice.
pub fn height_balanced_paths(n: usize) -> Result<Vec<DyckPath>> {
    if n < 1 {
        return Err(Error::Parameter("census needs n >= 1".into()));
    }
    let mut out = Vec::new();
    for path in enum_dyck(n) {
        if path.markers()?.is_height_balanced() {
            if path.height() == 1 {
                out.push(path.clone());
            }
            out.push(path);
        }
    }
    Ok(out)
}

/// Size of [`height_balanced_paths`], counted without materializing paths.
pub fn height_balanced_census(n: usize) -> Result<ExactInt> {
    if n < 1 {
        return Err(Error::Parameter("census needs n >= 1".into()));
    }
    let mut walker = PathWalker::<DyckStep>::new(2 * n, 0);
    // the height-one path is counted a second time
    let mut count: u64 = 1;
    while walker.advance() {
        if markers_of_levels(walker.levels())?.is_height_balanced() {
            count += 1;
        }
    }
    Ok(count.into())
}

/// Ordered pair of possibly empty Dyck paths.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPair {
    pub first: DyckPath,
    pub second: DyckPath,
}

impl DyckPair {
    pub fn new(first: DyckPath, second: DyckPath) -> Self {
        DyckPair { first, second }
    }

    pub fn height_gap(&self) -> i32 {
        (self.first.height() - self.second.height()).abs()
    }

    /// Heights differ by at most one.
    pub fn is_balanced(&self) -> bool {
        self.height_gap() <= 1
    }

    pub fn total_len(&self) -> usize {
        self.first.len() + self.second.len()
    }
}

/// Image of [`split_balanced`]. The height-one path is the one input with
/// two images.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum PairImage {
    Single(DyckPair),
    Twice {
        /// `(path, empty)`
        first: DyckPair,
        /// `(empty, path)`
        second: DyckPair,
    },
}

impl PairImage {
    pub fn pairs(&self) -> Vec<DyckPair> {
        match self {
            PairImage::Single(p) => vec![p.clone()],
            PairImage::Twice { first, second } => vec![first.clone(), second.clone()],
        }
    }
}

/// Sends a Dyck path with `height_after <= height_before + 2` to a pair of
/// Dyck paths whose heights differ by at most one.
///
/// The up step leaving the last level-one point `X` becomes a down step and
/// the down step leaving the rightmost maximum becomes an up step. The
/// stretch in between drops by two, so the point after `X` lands on the
/// axis and splits the path in two.
pub fn split_balanced(path: &DyckPath) -> Result<PairImage> {
    if path.is_empty() {
        return Err(Error::Precondition(
            "the empty path has no pair image".into(),
        ));
    }
    let mk = path.markers()?;
    if mk.height == 1 {
        return Ok(PairImage::Twice {
            first: DyckPair::new(path.clone(), DyckPath::empty()),
            second: DyckPair::new(DyckPath::empty(), path.clone()),
        });
    }
    if !mk.is_height_balanced() {
        return Err(Error::Precondition(format!(
            "{:?} has h+ = {} > h- + 2 = {}",
            path.render(),
            mk.height_after,
            mk.height_before + 2
        )));
    }
    let x = mk.last_level_one;
    let r = mk.rightmost_max;
    let mut steps = path.steps().to_vec();
    if steps[x] != Up || steps[r] != Down {
        return Err(Error::Internal(
            "marker steps have unexpected directions".into(),
        ));
    }
    steps[x] = Down;
    steps[r] = Up;
    let second = steps.split_off(x + 1);
    let pair = DyckPair::new(
        checked_dyck(steps, "split_balanced")?,
        checked_dyck(second, "split_balanced")?,
    );
    Ok(PairImage::Single(pair))
}

/// Inverse of [`split_balanced`]. `(path, empty)` and `(empty, path)` both
/// map back to the height-one `path`.
pub fn join_balanced(pair: &DyckPair) -> Result<DyckPath> {
    let (first, second) = (&pair.first, &pair.second);
    if first.is_empty() && second.is_empty() {
        return Err(Error::Parameter("both components are empty".into()));
    }
    if !pair.is_balanced() {
        return Err(Error::Precondition(format!(
            "heights {} and {} differ by more than one",
            first.height(),
            second.height()
        )));
    }
    if first.is_empty() {
        return Ok(second.clone());
    }
    if second.is_empty() {
        return Ok(first.clone());
    }
    let split = first.len();
    let lead = second.markers()?.leftmost_max;
    let mut steps = first.steps().to_vec();
    steps.extend_from_slice(second.steps());
    steps[split - 1] = Up;
    steps[split + lead - 1] = Down;
    checked_dyck(steps, "join_balanced")
}

/// Ordered pairs of Dyck paths of total length `2n` whose heights differ by
/// at most one, counted from the height distribution of each `D_k`.
pub fn balanced_pair_count(n: usize) -> ExactInt {
    let histograms: Vec<Vec<u64>> = (0..=n)
        .map(|k| {
            let mut hist = vec![0u64; k + 1];
            let mut walker = PathWalker::<DyckStep>::new(2 * k, 0);
            while walker.advance() {
                let h = *walker.levels().iter().max().unwrap() as usize;
                hist[h] += 1;
            }
            hist
        })
        .collect();
    let mut total = ExactInt::zero();
    for k in 0..=n {
        let (a, b) = (&histograms[k], &histograms[n - k]);
        for (ha, &ca) in a.iter().enumerate() {
            for (hb, &cb) in b.iter().enumerate() {
                if ha.abs_diff(hb) <= 1 {
                    total += ExactInt::from(ca) * cb;
                }
            }
        }
    }
    total
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::enumerate::enum_motzkin2;
    use crate::numbers::super_catalan;

    fn dyck(s: &str) -> DyckPath {
        DyckPath::parse(s).unwrap()
    }

    fn motzkin(s: &str) -> TwoMotzkinPath {
        TwoMotzkinPath::parse(s).unwrap()
    }

    fn int(v: i64) -> ExactInt {
        ExactInt::from(v)
    }

    #[test]
    fn canonical_bijection_examples() {
        assert_eq!(motzkin_to_dyck(&motzkin("")).unwrap().render(), "UD");
        assert_eq!(motzkin_to_dyck(&motzkin("S")).unwrap().render(), "UUDD");
        assert_eq!(motzkin_to_dyck(&motzkin("W")).unwrap().render(), "UDUD");
        assert_eq!(dyck_to_motzkin(&dyck("UD")).unwrap().render(), "");
        assert_eq!(dyck_to_motzkin(&dyck("UUDD")).unwrap().render(), "S");
        assert!(dyck_to_motzkin(&DyckPath::empty()).is_err());
    }

    #[test]
    fn canonical_bijection_round_trip() {
        for path in enum_motzkin2(5) {
            let d = motzkin_to_dyck(&path).unwrap();
            assert_eq!(d.len(), 12);
            assert_eq!(dyck_to_motzkin(&d).unwrap(), path);
        }
        for d in enum_dyck(6) {
            assert_eq!(motzkin_to_dyck(&dyck_to_motzkin(&d).unwrap()).unwrap(), d);
        }
    }

    #[test]
    fn weight_examples() {
        assert_eq!(weight(&motzkin("SUD"), 2), Ok(1));
        assert_eq!(weight(&motzkin("UDS"), 2), Ok(-1));
        for p in enum_motzkin2(4) {
            assert_eq!(weight(&p, 1), Ok(1));
        }
        // n = 1: the path has m - 1 steps and the point m - 1 is its end
        assert_eq!(weight(&motzkin("UD"), 3), Ok(1));
        assert!(weight(&motzkin("UD"), 4).is_err());
        assert!(weight(&motzkin("UD"), 0).is_err());
    }

    #[test]
    fn signed_count_examples() {
        let c = signed_count(2, 3).unwrap();
        assert_eq!((c.positive.clone(), c.negative.clone()), (int(10), int(4)));
        assert_eq!(c.difference(), int(6));
        for n in 1..=7 {
            let c = signed_count(1, n).unwrap();
            assert_eq!(c.negative, int(0));
            assert_eq!(c.positive, numbers::catalan(n as u64));
        }
        assert_eq!(signed_count(3, 2).unwrap().difference(), int(6));
        assert!(signed_count(0, 2).is_err());
    }

    #[test]
    fn signed_count_by_iterator_oracle() {
        // tally through the allocating stream and the weight function
        for m in 1..=5 {
            for n in 1..=5 {
                let (mut pos, mut neg) = (0u64, 0u64);
                for p in enum_motzkin2(m + n - 2) {
                    if weight(&p, m).unwrap() == 1 {
                        pos += 1
                    } else {
                        neg += 1
                    }
                }
                let c = signed_count(m, n).unwrap();
                assert_eq!(c, SignedCount::from_tally(pos, neg));
                assert_eq!(signed_count_par(m, n).unwrap(), c);
            }
        }
    }

    #[test]
    fn row_matches_single_counts() {
        for len in 0..=7 {
            let row = signed_count_row(len);
            assert_eq!(row.len(), len + 1);
            for (i, c) in row.iter().enumerate() {
                assert_eq!(c, &signed_count(i + 1, len + 1 - i).unwrap());
            }
        }
    }

    #[test]
    fn dyck_signed_count_examples() {
        let c = signed_count_dyck(2, 3).unwrap();
        assert_eq!((c.positive, c.negative), (int(10), int(4)));
        let c = signed_count_dyck(1, 2).unwrap();
        assert_eq!((c.positive, c.negative), (int(2), int(0)));
    }

    #[test]
    fn classify_examples() {
        assert_eq!(classify_start(&dyck("UDUUDD")), Ok(StartClass::UpDownUp));
        assert_eq!(classify_start(&dyck("UUDDUD")), Ok(StartClass::UpUpDown));
        assert_eq!(
            classify_start(&dyck("UUUDDDUD")),
            Ok(StartClass::TripleUpNoReturn)
        );
        assert_eq!(
            classify_start(&dyck("UUUDDUUDDD")),
            Ok(StartClass::TripleUpReturn)
        );
        assert!(classify_start(&dyck("UDUD")).is_err());
    }

    #[test]
    fn shrink_no_return_examples() {
        assert_eq!(
            shrink_no_return(&dyck("UUUDDDUD")).unwrap().render(),
            "UUDDUD"
        );
        assert_eq!(
            expand_no_return(&dyck("UUDDUD")).unwrap().render(),
            "UUUDDDUD"
        );
        assert!(matches!(
            expand_no_return(&dyck("UDUDUD")),
            Err(Error::Precondition(_))
        ));
        let err = shrink_no_return(&dyck("UDUDUD")).unwrap_err();
        assert!(err.to_string().contains("not in N*"), "{err}");
    }

    #[test]
    fn shrink_no_return_lands_on_leftmost_max() {
        for n in 2..=7 {
            for p in enum_dyck(n + 1) {
                if classify_start(&p).unwrap() != StartClass::TripleUpNoReturn {
                    continue;
                }
                let r = p.markers().unwrap().rightmost_max;
                let out = shrink_no_return(&p).unwrap();
                // Q = point R + 1 of the input, shifted left by two
                assert_eq!(out.markers().unwrap().leftmost_max, r + 1 - 2);
                assert!(out.height() >= 2);
            }
        }
    }

    #[test]
    fn shrink_return_example() {
        let staged = shrink_return_staged(&dyck("UUUDDUUDDD")).unwrap();
        assert_eq!(staged.ballot.render(), "UUUUUDDD");
        assert_eq!(staged.path.render(), "UUUUDDDD");
        let mk = staged.path.markers().unwrap();
        assert!(mk.height_after >= mk.height_before + 3);
        assert_eq!(
            expand_return(&dyck("UUUUDDDD")).unwrap().render(),
            "UUUDDUUDDD"
        );
        assert!(matches!(
            expand_return(&dyck("UUDUDD")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn shrink_return_stage_gap() {
        for n in 2..=7 {
            for p in enum_dyck(n + 1) {
                if classify_start(&p).unwrap() != StartClass::TripleUpReturn {
                    continue;
                }
                let s = shrink_return_staged(&p).unwrap();
                let levels = s.ballot.levels();
                let x = s.last_level_one;
                assert_eq!(levels[x], 1);
                assert_eq!(levels.iter().rposition(|&v| v == 1), Some(x));
                let before = *levels[..=x].iter().max().unwrap();
                let after = *levels[x..].iter().max().unwrap();
                assert!(after >= before + 4, "{}", s.ballot.render());
                // X is the last level-one point before the rightmost max M
                let mk = s.path.markers().unwrap();
                assert_eq!(mk.last_level_one, x);
            }
        }
    }

    #[test]
    fn census_examples() {
        let listed: Vec<_> = height_balanced_paths(3)
            .unwrap()
            .iter()
            .map(|p| p.render())
            .collect();
        let mut sorted = listed.clone();
        sorted.sort();
        let mut want = vec!["UDUDUD", "UDUDUD", "UUDDUD", "UDUUDD", "UUDUDD", "UUUDDD"];
        want.sort();
        assert_eq!(sorted, want);
        assert_eq!(height_balanced_census(3).unwrap(), int(6));
        assert_eq!(height_balanced_census(1).unwrap(), int(2));
        assert_eq!(
            height_balanced_census(10).unwrap(),
            super_catalan(2, 10).unwrap()
        );
        assert!(height_balanced_census(0).is_err());
    }

    #[test]
    fn split_examples() {
        let single = |s: &str| match split_balanced(&dyck(s)).unwrap() {
            PairImage::Single(p) => (p.first.render(), p.second.render()),
            other => panic!("{other:?}"),
        };
        assert_eq!(single("UUDUDD"), ("UUDD".into(), "UD".into()));
        assert_eq!(single("UUDDUD"), ("UD".into(), "UDUD".into()));
        let tau = DyckPath::height_one(3);
        match split_balanced(&tau).unwrap() {
            PairImage::Twice { first, second } => {
                assert_eq!(first, DyckPair::new(tau.clone(), DyckPath::empty()));
                assert_eq!(second, DyckPair::new(DyckPath::empty(), tau.clone()));
            }
            other => panic!("{other:?}"),
        }
        assert!(matches!(
            split_balanced(&dyck("UUUUDDDD")),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn join_examples() {
        let pair = DyckPair::new(dyck("UUDD"), dyck("UD"));
        assert_eq!(join_balanced(&pair).unwrap().render(), "UUDUDD");
        let tau = DyckPath::height_one(2);
        assert_eq!(
            join_balanced(&DyckPair::new(tau.clone(), DyckPath::empty())).unwrap(),
            tau
        );
        assert_eq!(
            join_balanced(&DyckPair::new(DyckPath::empty(), tau.clone())).unwrap(),
            tau
        );
        assert!(matches!(
            join_balanced(&DyckPair::new(DyckPath::empty(), DyckPath::empty())),
            Err(Error::Parameter(_))
        ));
        assert!(matches!(
            join_balanced(&DyckPair::new(dyck("UUUDDD"), dyck("UD"))),
            Err(Error::Precondition(_))
        ));
    }

    #[test]
    fn pair_count_by_histogram_matches_brute_force() {
        for n in 1..=7 {
            let brute = crate::enumerate::enum_pairs_total(n)
                .filter(|(a, b)| (a.height() - b.height()).abs() <= 1)
                .count();
            assert_eq!(balanced_pair_count(n), ExactInt::from(brute));
        }
    }

    #[test]
    fn contraction_is_bijective_on_each_class() {
        for n in 2..=7 {
            let mut a = Vec::new();
            let mut b = Vec::new();
            for p in enum_dyck(n + 1) {
                match classify_start(&p).unwrap() {
                    StartClass::UpDownUp => a.push(contract_start(&p).unwrap()),
                    StartClass::UpUpDown => b.push(contract_start(&p).unwrap()),
                    _ => assert!(contract_start(&p).is_err()),
                }
            }
            let all: Vec<_> = enum_dyck(n).collect();
            a.sort();
            b.sort();
            let mut sorted = all.clone();
            sorted.sort();
            assert_eq!(a, sorted);
            assert_eq!(b, sorted);
        }
    }
}
