//! Lattice paths over the up/down and up/down/straight/wavy alphabets.
//!
//! A path of `k` steps has `k + 1` points, indexed `0..=k` by x-coordinate.
//! Step `i` (1-based) joins point `i - 1` to point `i`. The level of a point
//! is its y-coordinate; levels are cached at construction so every query on
//! a path is a slice lookup.
//!
//! Paths are immutable. The validated wrappers ([`DyckPath`],
//! [`TwoMotzkinPath`], [`BallotPath`]) can only be built from paths that
//! satisfy their family's invariants.

use std::fmt;
use std::hash::Hash;
use std::ops::Deref;
use std::str::FromStr;

use crate::error::{Error, Result};

/// A step alphabet. `ALPHABET` lists the steps in canonical order, which is
/// also the lexicographic order used by enumeration.
pub trait Step: Copy + Eq + Ord + Hash + fmt::Debug + Send + Sync + 'static {
    const ALPHABET: &'static [Self];

    /// Change in level contributed by the step.
    fn delta(self) -> i32;

    fn symbol(self) -> char;

    fn from_symbol(c: char) -> Option<Self>;

    /// Whether the step is a level step.
    fn is_level(self) -> bool {
        self.delta() == 0
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum DyckStep {
    Up,
    Down,
}

impl DyckStep {
    pub fn flipped(self) -> Self {
        match self {
            DyckStep::Up => DyckStep::Down,
            DyckStep::Down => DyckStep::Up,
        }
    }
}

impl Step for DyckStep {
    const ALPHABET: &'static [Self] = &[DyckStep::Up, DyckStep::Down];

    fn delta(self) -> i32 {
        match self {
            DyckStep::Up => 1,
            DyckStep::Down => -1,
        }
    }

    fn symbol(self) -> char {
        match self {
            DyckStep::Up => 'U',
            DyckStep::Down => 'D',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            'U' => Some(DyckStep::Up),
            'D' => Some(DyckStep::Down),
            _ => None,
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum MotzkinStep {
    Up,
    Down,
    Straight,
    Wavy,
}

impl MotzkinStep {
    /// The step seen when the path is read right to left.
    pub fn mirrored(self) -> Self {
        match self {
            MotzkinStep::Up => MotzkinStep::Down,
            MotzkinStep::Down => MotzkinStep::Up,
            other => other,
        }
    }
}

impl Step for MotzkinStep {
    const ALPHABET: &'static [Self] = &[
        MotzkinStep::Up,
        MotzkinStep::Down,
        MotzkinStep::Straight,
        MotzkinStep::Wavy,
    ];

    fn delta(self) -> i32 {
        match self {
            MotzkinStep::Up => 1,
            MotzkinStep::Down => -1,
            MotzkinStep::Straight | MotzkinStep::Wavy => 0,
        }
    }

    fn symbol(self) -> char {
        match self {
            MotzkinStep::Up => 'U',
            MotzkinStep::Down => 'D',
            MotzkinStep::Straight => 'S',
            MotzkinStep::Wavy => 'W',
        }
    }

    fn from_symbol(c: char) -> Option<Self> {
        match c {
            'U' => Some(MotzkinStep::Up),
            'D' => Some(MotzkinStep::Down),
            'S' => Some(MotzkinStep::Straight),
            'W' => Some(MotzkinStep::Wavy),
            _ => None,
        }
    }
}

impl From<DyckStep> for MotzkinStep {
    fn from(step: DyckStep) -> Self {
        match step {
            DyckStep::Up => MotzkinStep::Up,
            DyckStep::Down => MotzkinStep::Down,
        }
    }
}

/// An arbitrary step sequence with its level profile. No nonnegativity or
/// endpoint condition is implied.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LatticePath<S> {
    steps: Vec<S>,
    levels: Vec<i32>,
}

impl<S: Step> LatticePath<S> {
    pub fn from_steps(steps: Vec<S>) -> Self {
        let mut levels = Vec::with_capacity(steps.len() + 1);
        let mut level = 0;
        levels.push(level);
        for step in &steps {
            level += step.delta();
            levels.push(level);
        }
        LatticePath { steps, levels }
    }

    pub fn empty() -> Self {
        LatticePath {
            steps: Vec::new(),
            levels: vec![0],
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        let steps = text
            .chars()
            .enumerate()
            .map(|(index, c)| S::from_symbol(c).ok_or(Error::Parse { index, found: c }))
            .collect::<Result<Vec<_>>>()?;
        Ok(Self::from_steps(steps))
    }

    pub fn steps(&self) -> &[S] {
        &self.steps
    }

    /// `levels()[x]` is the level after `x` steps.
    pub fn levels(&self) -> &[i32] {
        &self.levels
    }

    pub fn len(&self) -> usize {
        self.steps.len()
    }

    pub fn is_empty(&self) -> bool {
        self.steps.is_empty()
    }

    pub fn level_at(&self, x: usize) -> Result<i32> {
        self.levels.get(x).copied().ok_or(Error::Index {
            index: x,
            len: self.len(),
        })
    }

    pub fn final_level(&self) -> i32 {
        *self.levels.last().expect("levels is never empty")
    }

    pub fn height(&self) -> i32 {
        *self.levels.iter().max().expect("levels is never empty")
    }

    pub fn min_level(&self) -> i32 {
        *self.levels.iter().min().expect("levels is never empty")
    }

    pub fn is_nonnegative(&self) -> bool {
        self.min_level() >= 0
    }

    pub fn has_level_steps(&self) -> bool {
        self.steps.iter().any(|s| s.is_level())
    }

    pub fn render(&self) -> String {
        self.steps.iter().map(|s| s.symbol()).collect()
    }

    pub fn into_steps(self) -> Vec<S> {
        self.steps
    }
}

impl LatticePath<DyckStep> {
    pub fn to_motzkin(&self) -> LatticePath<MotzkinStep> {
        LatticePath {
            steps: self.steps.iter().map(|&s| s.into()).collect(),
            levels: self.levels.clone(),
        }
    }
}

impl LatticePath<MotzkinStep> {
    /// The same path over the up/down alphabet, if it has no level steps.
    pub fn to_dyck_steps(&self) -> Option<LatticePath<DyckStep>> {
        let steps = self
            .steps
            .iter()
            .map(|s| match s {
                MotzkinStep::Up => Some(DyckStep::Up),
                MotzkinStep::Down => Some(DyckStep::Down),
                _ => None,
            })
            .collect::<Option<Vec<_>>>()?;
        Some(LatticePath {
            steps,
            levels: self.levels.clone(),
        })
    }
}

impl<S: Step> fmt::Display for LatticePath<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for step in &self.steps {
            write!(f, "{}", step.symbol())?;
        }
        Ok(())
    }
}

impl<S: Step> fmt::Debug for LatticePath<S> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LatticePath({:?})", self.render())
    }
}

impl<S: Step> FromStr for LatticePath<S> {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Alphabet {
    Dyck,
    Motzkin,
}

/// Result of [`parse_path`]: the alphabet decides the step type.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum ParsedPath {
    Dyck(LatticePath<DyckStep>),
    Motzkin(LatticePath<MotzkinStep>),
}

impl ParsedPath {
    pub fn levels(&self) -> &[i32] {
        match self {
            ParsedPath::Dyck(p) => p.levels(),
            ParsedPath::Motzkin(p) => p.levels(),
        }
    }
}

/// Parses a path over `alphabet`. Nonnegativity is not checked here.
pub fn parse_path(text: &str, alphabet: Alphabet) -> Result<ParsedPath> {
    Ok(match alphabet {
        Alphabet::Dyck => ParsedPath::Dyck(LatticePath::parse(text)?),
        Alphabet::Motzkin => ParsedPath::Motzkin(LatticePath::parse(text)?),
    })
}

/// Path families a lattice path can be checked against.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Family {
    Dyck,
    Motzkin2,
    /// Nonnegative up/down paths from the origin to `(2n - 1, 2r - 1)`.
    Ballot {
        n: usize,
        r: usize,
    },
    /// Nonnegative up/down paths of length `len` ending at level 2.
    BallotEven {
        len: usize,
    },
}

pub fn validate<S: Step>(path: &LatticePath<S>, family: Family) -> bool {
    if !path.is_nonnegative() {
        return false;
    }
    match family {
        Family::Dyck => {
            !path.has_level_steps() && path.final_level() == 0 && path.len().is_multiple_of(2)
        }
        Family::Motzkin2 => path.final_level() == 0,
        Family::Ballot { n, r } => {
            (1..=n).contains(&r)
                && !path.has_level_steps()
                && path.len() == 2 * n - 1
                && path.final_level() == 2 * r as i32 - 1
        }
        Family::BallotEven { len } => {
            !path.has_level_steps() && path.len() == len && path.final_level() == 2
        }
    }
}

/// A nonnegative up/down path from the origin back to the axis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DyckPath(pub(crate) LatticePath<DyckStep>);

impl DyckPath {
    pub fn new(path: LatticePath<DyckStep>) -> Result<Self> {
        if validate(&path, Family::Dyck) {
            Ok(DyckPath(path))
        } else {
            Err(Error::InvalidPath {
                family: "Dyck path",
                path: path.render(),
            })
        }
    }

    pub fn from_steps(steps: Vec<DyckStep>) -> Result<Self> {
        Self::new(LatticePath::from_steps(steps))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(LatticePath::parse(text)?)
    }

    pub fn empty() -> Self {
        DyckPath(LatticePath::empty())
    }

    /// The unique path `UDUD...UD` of semilength `n`.
    pub fn height_one(n: usize) -> Self {
        let steps = std::iter::repeat_n([DyckStep::Up, DyckStep::Down], n)
            .flatten()
            .collect();
        DyckPath(LatticePath::from_steps(steps))
    }

    /// Half the length.
    pub fn semilength(&self) -> usize {
        self.len() / 2
    }

    pub fn as_path(&self) -> &LatticePath<DyckStep> {
        &self.0
    }

    pub fn into_path(self) -> LatticePath<DyckStep> {
        self.0
    }

    pub fn markers(&self) -> Result<PathMarkers> {
        markers(self)
    }
}

impl Deref for DyckPath {
    type Target = LatticePath<DyckStep>;

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl fmt::Display for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for DyckPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "DyckPath({:?})", self.render())
    }
}

impl FromStr for DyckPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A nonnegative path over up, down, straight and wavy steps that ends on
/// the axis.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct TwoMotzkinPath(pub(crate) LatticePath<MotzkinStep>);

impl TwoMotzkinPath {
    pub fn new(path: LatticePath<MotzkinStep>) -> Result<Self> {
        if validate(&path, Family::Motzkin2) {
            Ok(TwoMotzkinPath(path))
        } else {
            Err(Error::InvalidPath {
                family: "2-Motzkin path",
                path: path.render(),
            })
        }
    }

    pub fn from_steps(steps: Vec<MotzkinStep>) -> Result<Self> {
        Self::new(LatticePath::from_steps(steps))
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(LatticePath::parse(text)?)
    }

    pub fn as_path(&self) -> &LatticePath<MotzkinStep> {
        &self.0
    }

    pub fn into_path(self) -> LatticePath<MotzkinStep> {
        self.0
    }

    pub fn reverse(&self) -> TwoMotzkinPath {
        reverse(self)
    }
}

impl Deref for TwoMotzkinPath {
    type Target = LatticePath<MotzkinStep>;

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl fmt::Display for TwoMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for TwoMotzkinPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "TwoMotzkinPath({:?})", self.render())
    }
}

impl FromStr for TwoMotzkinPath {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::parse(s)
    }
}

/// A nonnegative up/down path ending above the axis: either at
/// `(2n - 1, 2r - 1)` or, for the even variant, at `(2n, 2)`.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct BallotPath(pub(crate) LatticePath<DyckStep>);

impl BallotPath {
    pub fn new(path: LatticePath<DyckStep>) -> Result<Self> {
        let odd = path.len() % 2 == 1 && path.final_level() >= 1;
        let even = path.len().is_multiple_of(2) && path.final_level() == 2;
        if path.is_nonnegative() && (odd || even) {
            Ok(BallotPath(path))
        } else {
            Err(Error::InvalidPath {
                family: "ballot path",
                path: path.render(),
            })
        }
    }

    pub fn parse(text: &str) -> Result<Self> {
        Self::new(LatticePath::parse(text)?)
    }

    /// `(length, final level)`.
    pub fn terminal(&self) -> (usize, i32) {
        (self.len(), self.final_level())
    }

    pub fn as_path(&self) -> &LatticePath<DyckStep> {
        &self.0
    }

    pub fn into_path(self) -> LatticePath<DyckStep> {
        self.0
    }
}

impl Deref for BallotPath {
    type Target = LatticePath<DyckStep>;

    fn deref(&self) -> &Self::Target {
        &self.0
    }
}

impl fmt::Display for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

impl fmt::Debug for BallotPath {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "BallotPath({:?})", self.render())
    }
}

/// Named points and height statistics of a nonempty Dyck path.
///
/// `last_level_one` is the last point at level one up to and including the
/// rightmost maximum. `height_before` is the maximum level on
/// `[0, last_level_one]` and `height_after` the maximum on
/// `[last_level_one, len]`; the latter always equals `height`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub struct PathMarkers {
    pub height: i32,
    pub rightmost_max: usize,
    pub leftmost_max: usize,
    pub last_level_one: usize,
    pub height_before: i32,
    pub height_after: i32,
}

impl PathMarkers {
    /// Paths with `height_after <= height_before + 2`.
    pub fn is_height_balanced(&self) -> bool {
        self.height_after <= self.height_before + 2
    }
}

pub fn markers(path: &DyckPath) -> Result<PathMarkers> {
    if path.is_empty() {
        return Err(Error::Domain("markers undefined for empty path".into()));
    }
    markers_of_levels(path.levels())
}

/// Markers computed from a level profile. Requires a nonnegative profile
/// starting at 0 with height at least one.
pub(crate) fn markers_of_levels(levels: &[i32]) -> Result<PathMarkers> {
    let height = *levels.iter().max().expect("levels is never empty");
    if height < 1 {
        return Err(Error::Domain(
            "markers undefined for a path of height 0".into(),
        ));
    }
    let leftmost_max = levels.iter().position(|&l| l == height).unwrap();
    let rightmost_max = levels.iter().rposition(|&l| l == height).unwrap();
    let last_level_one = levels[..=rightmost_max]
        .iter()
        .rposition(|&l| l == 1)
        .ok_or_else(|| Error::Internal("no level-one point before the maximum".into()))?;
    let height_before = *levels[..=last_level_one].iter().max().unwrap();
    let height_after = *levels[last_level_one..].iter().max().unwrap();
    Ok(PathMarkers {
        height,
        rightmost_max,
        leftmost_max,
        last_level_one,
        height_before,
        height_after,
    })
}

/// Reads the path right to left: reverses step order and swaps up with
/// down. Straight and wavy steps are fixed.
pub fn reverse(path: &TwoMotzkinPath) -> TwoMotzkinPath {
    let steps = path.steps().iter().rev().map(|s| s.mirrored()).collect();
    TwoMotzkinPath(LatticePath::from_steps(steps))
}

pub fn level_at<S: Step>(path: &LatticePath<S>, x: usize) -> Result<i32> {
    path.level_at(x)
}
