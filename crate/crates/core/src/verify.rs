//! Identity and bijection checks over parameter ranges.
//!
//! Each [`Identity`] runs one suite and returns a [`VerificationReport`].
//! Independent cells are fanned out on the current rayon pool and collected
//! in parameter order, so reports are identical from run to run.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use num_integer::Integer;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::bijections::{
    self, classify_start, expand_no_return, expand_return, join_balanced, motzkin_to_dyck,
    shrink_no_return, shrink_return, split_balanced, weight, DyckPair, PairImage, StartClass,
};
use crate::enumerate::{enum_dyck, enum_motzkin2, enum_pairs_total, PathFamily};
use crate::error::{Error, Result};
use crate::numbers::{self, ExactInt};
use crate::paths::{reverse, DyckPath};

/// Largest `m + n` an enumeration-backed check will run without `force`.
pub const DESK_SCALE_SUM: usize = 18;

pub type Params = BTreeMap<String, u64>;

fn params(pairs: &[(&str, u64)]) -> Params {
    pairs.iter().map(|&(k, v)| (k.to_string(), v)).collect()
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Failure {
    pub lhs: String,
    pub params: Params,
    pub rhs: String,
}

/// A value recorded alongside a check, e.g. a per-n count.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Tally {
    pub label: String,
    pub params: Params,
    pub value: String,
}

/// Outcome of one suite. Fields are declared in key order so the JSON form
/// is canonical.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub cases: u64,
    pub failures: Vec<Failure>,
    pub identity: String,
    pub passed: bool,
    pub range: Params,
    pub tallies: Vec<Tally>,
}

impl VerificationReport {
    fn new(identity: Identity, range: Params) -> Self {
        VerificationReport {
            cases: 0,
            failures: Vec::new(),
            identity: identity.name().to_string(),
            passed: true,
            range,
            tallies: Vec::new(),
        }
    }

    fn check(&mut self, p: Params, lhs: impl ToString, rhs: impl ToString) {
        let (lhs, rhs) = (lhs.to_string(), rhs.to_string());
        self.cases += 1;
        if lhs != rhs {
            self.failures.push(Failure {
                lhs,
                params: p,
                rhs,
            });
            self.passed = false;
        }
    }

    fn holds(&mut self, p: Params, ok: bool, what: &str) {
        self.check(p, if ok { "holds" } else { what }, "holds");
    }

    fn tally(&mut self, label: &str, p: Params, value: impl ToString) {
        self.tallies.push(Tally {
            label: label.to_string(),
            params: p,
            value: value.to_string(),
        });
    }

    /// Appends another report's cases, failures and tallies.
    fn absorb(&mut self, other: VerificationReport) {
        self.cases += other.cases;
        self.passed &= other.passed;
        self.failures.extend(other.failures);
        self.tallies.extend(other.tallies);
    }

    /// Human-readable rendering; one header line, then failures and tallies.
    pub fn to_text(&self) -> String {
        let range = self
            .range
            .iter()
            .map(|(k, v)| format!("{k}={v}"))
            .collect::<Vec<_>>()
            .join(" ");
        let mut out = format!(
            "{} [{}]: {} ({} cases, {} failures)\n",
            self.identity,
            range,
            if self.passed { "PASS" } else { "FAIL" },
            self.cases,
            self.failures.len()
        );
        for f in &self.failures {
            out.push_str(&format!(
                "  failure {}: {} != {}\n",
                fmt_params(&f.params),
                f.lhs,
                f.rhs
            ));
        }
        for t in &self.tallies {
            out.push_str(&format!(
                "  {} {}: {}\n",
                t.label,
                fmt_params(&t.params),
                t.value
            ));
        }
        out
    }
}

fn fmt_params(p: &Params) -> String {
    p.iter()
        .map(|(k, v)| format!("{k}={v}"))
        .collect::<Vec<_>>()
        .join(",")
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Identity {
    /// Signed 2-Motzkin count equals T(m, n).
    SignedCount,
    /// Dyck mod-4 reformulation of the signed count.
    SignedCountDyck,
    Rubenstein,
    BallotSum,
    Symmetry,
    Reversal,
    Parity,
    Counts,
    /// Height-balanced Dyck path census equals T(2, n).
    HeightCensus,
    /// Balanced ordered pairs of Dyck paths number T(2, n).
    PairCensus,
    NoReturnMaps,
    ReturnMaps,
    PairMap,
}

impl Identity {
    pub const ALL: [Identity; 13] = [
        Identity::SignedCount,
        Identity::SignedCountDyck,
        Identity::Rubenstein,
        Identity::BallotSum,
        Identity::Symmetry,
        Identity::Reversal,
        Identity::Parity,
        Identity::Counts,
        Identity::HeightCensus,
        Identity::PairCensus,
        Identity::NoReturnMaps,
        Identity::ReturnMaps,
        Identity::PairMap,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Identity::SignedCount => "theorem1",
            Identity::SignedCountDyck => "theorem1-dyck",
            Identity::Rubenstein => "rubenstein",
            Identity::BallotSum => "ballot-sum",
            Identity::Symmetry => "symmetry",
            Identity::Reversal => "reversal",
            Identity::Parity => "parity",
            Identity::Counts => "counts",
            Identity::HeightCensus => "theorem4",
            Identity::PairCensus => "pairs",
            Identity::NoReturnMaps => "bijection-f",
            Identity::ReturnMaps => "bijection-g",
            Identity::PairMap => "pair-map",
        }
    }

    /// Whether the suite enumerates paths (and so is subject to the
    /// desk-scale cap).
    pub fn is_enumerative(self) -> bool {
        !matches!(
            self,
            Identity::Rubenstein | Identity::BallotSum | Identity::Symmetry | Identity::Parity
        )
    }

    /// Effective `m + n` of the largest enumeration under `bounds`.
    fn enumeration_sum(self, b: &Bounds) -> usize {
        match self {
            Identity::SignedCount | Identity::SignedCountDyck | Identity::Reversal => b.sum(self),
            // D_n is in bijection with 2-Motzkin paths of length n - 1
            Identity::HeightCensus | Identity::PairMap => b.n(self) + 1,
            Identity::PairCensus
            | Identity::NoReturnMaps
            | Identity::ReturnMaps
            | Identity::Counts => b.n(self) + 2,
            _ => 0,
        }
    }
}

impl fmt::Display for Identity {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Identity {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Identity::ALL
            .into_iter()
            .find(|id| id.name() == s)
            .ok_or_else(|| Error::Parameter(format!("unknown identity {s:?}")))
    }
}

/// Optional range overrides; each suite has its own defaults.
#[derive(Debug, Clone, Copy, Default, PartialEq, Eq)]
pub struct Bounds {
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    pub max_sum: Option<usize>,
}

impl Bounds {
    fn sum(&self, id: Identity) -> usize {
        self.max_sum.unwrap_or(match id {
            Identity::SignedCount => 14,
            Identity::Symmetry | Identity::Parity => 100,
            _ => 12,
        })
    }

    fn m(&self, id: Identity) -> usize {
        self.max_m.unwrap_or(match id {
            Identity::BallotSum => 30,
            _ => 50,
        })
    }

    fn n(&self, id: Identity) -> usize {
        self.max_n.unwrap_or(match id {
            Identity::BallotSum => 30,
            Identity::Rubenstein => 50,
            Identity::HeightCensus => 10,
            Identity::PairCensus => 9,
            Identity::Counts => 12,
            _ => 8,
        })
    }
}

/// Runs one suite. Enumeration-backed suites refuse ranges beyond
/// [`DESK_SCALE_SUM`] unless `force` is set.
pub fn run(id: Identity, bounds: &Bounds, force: bool) -> Result<VerificationReport> {
    if id.is_enumerative() && !force && id.enumeration_sum(bounds) > DESK_SCALE_SUM {
        return Err(Error::Parameter(format!(
            "{id} at this range enumerates beyond m+n = {DESK_SCALE_SUM}; pass --force to run it"
        )));
    }
    match id {
        Identity::SignedCount => Ok(check_signed_counts(bounds.sum(id))),
        Identity::SignedCountDyck => Ok(check_dyck_reformulation(bounds.sum(id))),
        Identity::Rubenstein => Ok(check_rubenstein(bounds.m(id), bounds.n(id))),
        Identity::BallotSum => Ok(check_ballot_sum(bounds.m(id), bounds.n(id))),
        Identity::Symmetry => Ok(check_symmetry(bounds.sum(id))),
        Identity::Reversal => Ok(check_reversal(bounds.sum(id))),
        Identity::Parity => Ok(check_parity(bounds.sum(id))),
        Identity::Counts => check_enumeration_counts(bounds.n(id)),
        Identity::HeightCensus => check_height_census(bounds.n(id)),
        Identity::PairCensus => Ok(check_pair_census(bounds.n(id))),
        Identity::NoReturnMaps => Ok(check_no_return_maps(bounds.n(id))),
        Identity::ReturnMaps => Ok(check_return_maps(bounds.n(id))),
        Identity::PairMap => Ok(check_pair_map(bounds.n(id))),
    }
}

/// Runs every suite with the same overrides.
pub fn run_all(bounds: &Bounds, force: bool) -> Result<Vec<VerificationReport>> {
    Identity::ALL
        .iter()
        .map(|&id| run(id, bounds, force))
        .collect()
}

fn t(m: u64, n: u64) -> ExactInt {
    numbers::super_catalan(m, n).expect("(m, n) != (0, 0)")
}

/// Signed 2-Motzkin counts against T(m, n) for `2 <= m + n <= max_sum`.
pub fn check_signed_counts(max_sum: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        Identity::SignedCount,
        params(&[("max_sum", max_sum as u64)]),
    );
    for sum in 2..=max_sum {
        for (i, count) in bijections::signed_count_row(sum - 2)
            .into_iter()
            .enumerate()
        {
            let (m, n) = (i as u64 + 1, (sum - 1 - i) as u64);
            report.check(params(&[("m", m), ("n", n)]), count.difference(), t(m, n));
        }
    }
    report
}

/// Dyck mod-4 counts against the 2-Motzkin counts, plus the pathwise level
/// correspondence under the canonical bijection.
pub fn check_dyck_reformulation(max_sum: usize) -> VerificationReport {
    let id = Identity::SignedCountDyck;
    let mut report = VerificationReport::new(id, params(&[("max_sum", max_sum as u64)]));
    let cells: Vec<(usize, usize)> = (2..=max_sum)
        .flat_map(|s| (1..s).map(move |m| (m, s - m)))
        .collect();
    let parts: Vec<VerificationReport> = cells
        .par_iter()
        .map(|&(m, n)| {
            let mut part = VerificationReport::new(id, Params::new());
            let p = params(&[("m", m as u64), ("n", n as u64)]);
            let dyck = bijections::signed_count_dyck(m, n).expect("m, n >= 1");
            let motzkin = bijections::signed_count(m, n).expect("m, n >= 1");
            part.check(p.clone(), &dyck.positive, &motzkin.positive);
            part.check(p, &dyck.negative, &motzkin.negative);
            part
        })
        .collect();
    parts.into_iter().for_each(|p| report.absorb(p));

    let parts: Vec<VerificationReport> = (2..=max_sum)
        .into_par_iter()
        .map(|sum| {
            let mut part = VerificationReport::new(id, Params::new());
            let mut ok = true;
            for path in enum_motzkin2(sum - 2) {
                let image = motzkin_to_dyck(&path).expect("bijection");
                for m in 1..sum {
                    let level = path.levels()[m - 1];
                    let lifted = image.levels()[2 * m - 1];
                    let positive = weight(&path, m).expect("in range") == 1;
                    ok &= lifted == 2 * level + 1 && positive == (lifted.rem_euclid(4) == 1);
                }
            }
            part.holds(params(&[("sum", sum as u64)]), ok, "level mismatch");
            part
        })
        .collect();
    parts.into_iter().for_each(|p| report.absorb(p));
    report
}

/// `4 T(m, n) = T(m+1, n) + T(m, n+1)` for `1 <= m <= max_m`, `1 <= n <= max_n`.
pub fn check_rubenstein(max_m: usize, max_n: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        Identity::Rubenstein,
        params(&[("max_m", max_m as u64), ("max_n", max_n as u64)]),
    );
    let table: Vec<Vec<ExactInt>> = (0..=max_m as u64 + 1)
        .map(|m| {
            (0..=max_n as u64 + 1)
                .map(|n| if m + n == 0 { 0.into() } else { t(m, n) })
                .collect()
        })
        .collect();
    for m in 1..=max_m {
        for n in 1..=max_n {
            let lhs = ExactInt::from(4) * &table[m][n];
            let rhs = &table[m + 1][n] + &table[m][n + 1];
            report.check(params(&[("m", m as u64), ("n", n as u64)]), lhs, rhs);
        }
    }
    report
}

/// Alternating ballot sum against T(m, n), with termwise agreement of the
/// two closed forms.
pub fn check_ballot_sum(max_m: usize, max_n: usize) -> VerificationReport {
    let mut report = VerificationReport::new(
        Identity::BallotSum,
        params(&[("max_m", max_m as u64), ("max_n", max_n as u64)]),
    );
    for m in 1..=max_m as u64 {
        for n in 1..=max_n as u64 {
            let terms = numbers::alternating_ballot_terms(m, n).expect("m, n >= 1");
            for term in &terms {
                report.check(
                    params(&[("m", m), ("n", n), ("r", term.r)]),
                    &term.product_form,
                    &term.binomial_form,
                );
            }
            let sum: ExactInt = terms.into_iter().map(|t| t.product_form).sum();
            report.check(params(&[("m", m), ("n", n)]), sum, t(m, n));
        }
    }
    report
}

/// Formula-level `T(m, n) = T(n, m)` for `1 <= m + n <= max_sum`.
pub fn check_symmetry(max_sum: usize) -> VerificationReport {
    let mut report =
        VerificationReport::new(Identity::Symmetry, params(&[("max_sum", max_sum as u64)]));
    for sum in 1..=max_sum as u64 {
        for m in 0..=sum {
            report.check(
                params(&[("m", m), ("n", sum - m)]),
                t(m, sum - m),
                t(sum - m, m),
            );
        }
    }
    report
}

/// Reversal carries weight at `m` to weight at `n`, path by path, for
/// `2 <= m + n <= max_sum`.
pub fn check_reversal(max_sum: usize) -> VerificationReport {
    let id = Identity::Reversal;
    let mut report = VerificationReport::new(id, params(&[("max_sum", max_sum as u64)]));
    let parts: Vec<VerificationReport> = (2..=max_sum)
        .into_par_iter()
        .map(|sum| {
            let mut part = VerificationReport::new(id, Params::new());
            let mut per_m = vec![true; sum];
            let mut involution = true;
            for path in enum_motzkin2(sum - 2) {
                let rev = reverse(&path);
                involution &= reverse(&rev) == path;
                for (m, ok) in per_m.iter_mut().enumerate().skip(1) {
                    let n = sum - m;
                    *ok &= weight(&path, m).unwrap() == weight(&rev, n).unwrap()
                        && path.levels()[m - 1] == rev.levels()[n - 1];
                }
            }
            part.holds(
                params(&[("sum", sum as u64)]),
                involution,
                "not an involution",
            );
            for (m, &ok) in per_m.iter().enumerate().skip(1) {
                part.holds(
                    params(&[("m", m as u64), ("n", (sum - m) as u64)]),
                    ok,
                    "weight changed",
                );
            }
            part
        })
        .collect();
    parts.into_iter().for_each(|p| report.absorb(p));
    report
}

/// `S(m, n)` is even off `(0, 0)`, and `T(0, 0)` is rejected.
pub fn check_parity(max_sum: usize) -> VerificationReport {
    let mut report =
        VerificationReport::new(Identity::Parity, params(&[("max_sum", max_sum as u64)]));
    for sum in 1..=max_sum as u64 {
        for m in 0..=sum {
            let s = numbers::super_catalan_doubled(m, sum - m);
            report.holds(params(&[("m", m), ("n", sum - m)]), s.is_even(), "odd");
        }
    }
    let rejected = matches!(numbers::super_catalan(0, 0), Err(Error::Domain(_)));
    report.holds(params(&[("m", 0), ("n", 0)]), rejected, "T(0,0) accepted");
    report
}

/// Enumerated family sizes against their closed forms.
pub fn check_enumeration_counts(max_n: usize) -> Result<VerificationReport> {
    let id = Identity::Counts;
    let mut report = VerificationReport::new(id, params(&[("max_n", max_n as u64)]));
    let mut families = Vec::new();
    for k in 0..=max_n {
        families.push(PathFamily::Dyck(k));
        families.push(PathFamily::Motzkin2(k));
    }
    for n in 1..=max_n {
        for r in 1..=n {
            families.push(PathFamily::Ballot(n, r));
        }
    }
    let results: Vec<Result<(u64, ExactInt)>> = families
        .par_iter()
        .map(|f| Ok((f.count()?, f.expected_count()?)))
        .collect();
    for (family, result) in families.iter().zip(results) {
        let (got, want) = result?;
        let p = match *family {
            PathFamily::Dyck(k) => params(&[("dyck", k as u64)]),
            PathFamily::Motzkin2(k) => params(&[("motzkin2", k as u64)]),
            PathFamily::BallotEven(k) => params(&[("ballot_even", k as u64)]),
            PathFamily::Ballot(n, r) => params(&[("ballot_n", n as u64), ("ballot_r", r as u64)]),
        };
        report.check(p, got, &want);
    }
    Ok(report)
}

/// Height-balanced census against T(2, n), together with the start-class
/// decomposition `T(2, n) = 2 C_n - |no return| - |return|`.
pub fn check_height_census(max_n: usize) -> Result<VerificationReport> {
    let id = Identity::HeightCensus;
    let mut report = VerificationReport::new(id, params(&[("max_n", max_n as u64)]));
    let parts: Vec<Result<VerificationReport>> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut part = VerificationReport::new(id, Params::new());
            let p = params(&[("n", n as u64)]);
            let census = bijections::height_balanced_census(n)?;
            part.check(p.clone(), &census, t(2, n as u64));
            part.tally("census", p.clone(), &census);

            let mut classes: BTreeMap<&str, u64> = BTreeMap::new();
            if n >= 2 {
                for path in enum_dyck(n + 1) {
                    let key = match classify_start(&path)? {
                        StartClass::UpDownUp => "A",
                        StartClass::UpUpDown => "B",
                        StartClass::TripleUpNoReturn => "N*",
                        StartClass::TripleUpReturn => "N**",
                    };
                    *classes.entry(key).or_default() += 1;
                }
            }
            let get = |k: &str| ExactInt::from(*classes.get(k).unwrap_or(&0));
            let catalan = numbers::catalan(n as u64);
            if n >= 2 {
                part.check(
                    params(&[("n", n as u64), ("class_a", 1)]),
                    get("A"),
                    &catalan,
                );
                part.check(
                    params(&[("n", n as u64), ("class_b", 1)]),
                    get("B"),
                    &catalan,
                );
            }
            let grand = ExactInt::from(2) * &catalan - get("N*") - get("N**");
            part.check(
                params(&[("n", n as u64), ("grand", 1)]),
                grand,
                t(2, n as u64),
            );
            Ok(part)
        })
        .collect();
    for part in parts {
        report.absorb(part?);
    }
    Ok(report)
}

/// Ordered pairs of total length `2n` with heights within one, counted by
/// enumeration, against T(2, n).
pub fn check_pair_census(max_n: usize) -> VerificationReport {
    let id = Identity::PairCensus;
    let mut report = VerificationReport::new(id, params(&[("max_n", max_n as u64)]));
    for n in 1..=max_n {
        let count = enum_pairs_total(n)
            .filter(|(a, b)| (a.height() - b.height()).abs() <= 1)
            .count() as u64;
        let p = params(&[("n", n as u64)]);
        report.check(p.clone(), count, t(2, n as u64));
        report.tally("pairs", p, count);
    }
    report
}

/// Round trips and image census of the no-return shrink/expand pair,
/// `2 <= n <= max_n`.
pub fn check_no_return_maps(max_n: usize) -> VerificationReport {
    let id = Identity::NoReturnMaps;
    let mut report = VerificationReport::new(id, params(&[("max_n", max_n as u64)]));
    let parts: Vec<VerificationReport> = (2..=max_n.max(1))
        .into_par_iter()
        .map(|n| {
            let mut part = VerificationReport::new(id, Params::new());
            let p = params(&[("n", n as u64)]);
            let mut image = BTreeSet::new();
            let mut domain = 0u64;
            let mut forward_ok = true;
            for path in enum_dyck(n + 1) {
                if classify_start(&path).unwrap() != StartClass::TripleUpNoReturn {
                    continue;
                }
                domain += 1;
                match shrink_no_return(&path) {
                    Ok(out) => {
                        forward_ok &= expand_no_return(&out).ok() == Some(path.clone());
                        image.insert(out);
                    }
                    Err(_) => forward_ok = false,
                }
            }
            part.holds(
                p.clone(),
                forward_ok,
                "inverse after shrink is not the identity",
            );
            part.check(p.clone(), image.len(), domain);

            let mut backward_ok = true;
            let mut complement = Vec::new();
            for path in enum_dyck(n) {
                if path.height() >= 2 {
                    backward_ok &= expand_no_return(&path)
                        .and_then(|pre| shrink_no_return(&pre))
                        .ok()
                        == Some(path.clone());
                    backward_ok &= image.contains(&path);
                } else {
                    backward_ok &= !image.contains(&path);
                    complement.push(path.render());
                }
            }
            part.holds(
                p.clone(),
                backward_ok,
                "shrink after inverse is not the identity",
            );
            part.check(
                p.clone(),
                complement.join(","),
                DyckPath::height_one(n).render(),
            );
            part.check(p.clone(), domain, numbers::catalan(n as u64) - 1);
            part.tally("domain", p, domain);
            part
        })
        .collect();
    parts.into_iter().for_each(|p| report.absorb(p));
    report
}

/// Round trips and image census of the return shrink/expand pair,
/// `2 <= n <= max_n`.
pub fn check_return_maps(max_n: usize) -> VerificationReport {
    let id = Identity::ReturnMaps;
    let mut report = VerificationReport::new(id, params(&[("max_n", max_n as u64)]));
    let parts: Vec<VerificationReport> = (2..=max_n.max(1))
        .into_par_iter()
        .map(|n| {
            let mut part = VerificationReport::new(id, Params::new());
            let p = params(&[("n", n as u64)]);
            let mut image = BTreeSet::new();
            let mut domain = 0u64;
            let mut forward_ok = true;
            for path in enum_dyck(n + 1) {
                if classify_start(&path).unwrap() != StartClass::TripleUpReturn {
                    continue;
                }
                domain += 1;
                match shrink_return(&path) {
                    Ok(out) => {
                        forward_ok &= expand_return(&out).ok() == Some(path.clone());
                        image.insert(out);
                    }
                    Err(_) => forward_ok = false,
                }
            }
            part.holds(
                p.clone(),
                forward_ok,
                "inverse after shrink is not the identity",
            );
            part.check(p.clone(), image.len(), domain);

            let mut backward_ok = true;
            let mut balanced = 0u64;
            for path in enum_dyck(n) {
                let mk = path.markers().unwrap();
                if mk.height_after >= mk.height_before + 3 {
                    backward_ok &= expand_return(&path)
                        .and_then(|pre| shrink_return(&pre))
                        .ok()
                        == Some(path.clone());
                    backward_ok &= image.contains(&path);
                } else {
                    backward_ok &= !image.contains(&path);
                    balanced += 1;
                }
            }
            part.holds(
                p.clone(),
                backward_ok,
                "shrink after inverse is not the identity",
            );
            part.check(p.clone(), domain + balanced, numbers::catalan(n as u64));
            part.tally("domain", p, domain);
            part
        })
        .collect();
    parts.into_iter().for_each(|p| report.absorb(p));
    report
}

/// Split/join round trips and height bookkeeping, with per-n pair counts
/// against T(2, n).
pub fn check_pair_map(max_n: usize) -> VerificationReport {
    let id = Identity::PairMap;
    let mut report = VerificationReport::new(id, params(&[("max_n", max_n as u64)]));
    let parts: Vec<VerificationReport> = (1..=max_n)
        .into_par_iter()
        .map(|n| {
            let mut part = VerificationReport::new(id, Params::new());
            let p = params(&[("n", n as u64)]);
            let mut images: BTreeSet<DyckPair> = BTreeSet::new();
            let mut mapped = 0u64;
            let mut ok = true;
            for path in enum_dyck(n) {
                let mk = path.markers().unwrap();
                if !mk.is_height_balanced() {
                    ok &= split_balanced(&path).is_err();
                    continue;
                }
                let image = split_balanced(&path).unwrap();
                if let PairImage::Single(pair) = &image {
                    ok &= pair.first.height() == mk.height_before
                        && pair.second.height() == mk.height_after - 1;
                    ok &= pair.second.markers().unwrap().leftmost_max
                        == mk.rightmost_max + 1 - pair.first.len();
                }
                for pair in image.pairs() {
                    ok &= pair.is_balanced() && pair.total_len() == 2 * n;
                    ok &= join_balanced(&pair).ok() == Some(path.clone());
                    mapped += 1;
                    images.insert(pair);
                }
            }
            part.holds(p.clone(), ok, "round trip or height bookkeeping failed");
            part.check(p.clone(), images.len() as u64, mapped);

            let target: BTreeSet<DyckPair> = enum_pairs_total(n)
                .map(|(a, b)| DyckPair::new(a, b))
                .filter(|pair| pair.is_balanced())
                .collect();
            part.holds(
                p.clone(),
                images == target,
                "image is not the set of balanced pairs",
            );
            let mut inverse_ok = true;
            for pair in &target {
                inverse_ok &= join_balanced(pair)
                    .and_then(|path| split_balanced(&path))
                    .map(|img| img.pairs().contains(pair))
                    .unwrap_or(false);
            }
            part.holds(p.clone(), inverse_ok, "split after join misses the pair");
            part.check(p.clone(), mapped, t(2, n as u64));
            part.tally("pairs", p, mapped);
            part
        })
        .collect();
    parts.into_iter().for_each(|p| report.absorb(p));
    report
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn identity_names_round_trip() {
        for id in Identity::ALL {
            assert_eq!(id.name().parse::<Identity>().unwrap(), id);
        }
        assert!("theorem9".parse::<Identity>().is_err());
    }

    #[test]
    fn small_suites_pass() {
        let b = Bounds {
            max_m: Some(6),
            max_n: Some(6),
            max_sum: Some(8),
        };
        for report in run_all(&b, false).unwrap() {
            assert!(report.passed, "{}", report.to_text());
            assert!(report.cases > 0, "{}", report.identity);
        }
    }

    #[test]
    fn failures_are_recorded() {
        let mut r = VerificationReport::new(Identity::Symmetry, Params::new());
        r.check(params(&[("m", 1)]), 1, 1);
        assert!(r.passed);
        r.check(params(&[("m", 2)]), 1, 2);
        assert!(!r.passed);
        assert_eq!(r.failures.len(), 1);
        assert_eq!(r.failures[0].lhs, "1");
        assert!(r.to_text().contains("FAIL"));
    }

    #[test]
    fn desk_scale_cap() {
        let b = Bounds {
            max_sum: Some(19),
            ..Bounds::default()
        };
        assert!(matches!(
            run(Identity::SignedCount, &b, false),
            Err(Error::Parameter(_))
        ));
        // formula-level suites are uncapped
        let b = Bounds {
            max_sum: Some(100),
            ..Bounds::default()
        };
        assert!(run(Identity::Symmetry, &b, false).unwrap().passed);
    }

    #[test]
    fn pair_map_reports_counts() {
        let r = check_pair_map(5);
        assert!(r.passed, "{}", r.to_text());
        let counts: Vec<_> = r.tallies.iter().map(|t| t.value.clone()).collect();
        let want: Vec<_> = (1..=5).map(|n| t(2, n).to_string()).collect();
        assert_eq!(counts, want);
    }
}
