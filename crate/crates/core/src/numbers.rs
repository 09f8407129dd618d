//! Exact values of the super Catalan, Catalan and ballot numbers.
//!
//! Every quotient of factorials is formed from binomial coefficients first,
//! then multiplied, then divided by the known divisor, and each division is
//! checked to leave no remainder.

use std::sync::{OnceLock, RwLock};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::error::{Error, Result};

/// Arbitrary-precision signed integer used for every count.
pub type ExactInt = BigInt;

fn factorial_table() -> &'static RwLock<Vec<ExactInt>> {
    static TABLE: OnceLock<RwLock<Vec<ExactInt>>> = OnceLock::new();
    TABLE.get_or_init(|| RwLock::new(vec![ExactInt::one()]))
}

/// `n!`, memoized up to the largest argument seen so far.
pub fn factorial(n: u64) -> ExactInt {
    let n = n as usize;
    {
        let table = factorial_table().read().unwrap_or_else(|e| e.into_inner());
        if let Some(v) = table.get(n) {
            return v.clone();
        }
    }
    let mut table = factorial_table().write().unwrap_or_else(|e| e.into_inner());
    while table.len() <= n {
        let k = table.len();
        let next = &table[k - 1] * ExactInt::from(k);
        table.push(next);
    }
    table[n].clone()
}

/// Divides, panicking if the quotient is not an integer. Used only where
/// integrality is a theorem; a panic here means a transcription bug.
fn exact_div(numerator: &ExactInt, divisor: &ExactInt, what: &str) -> ExactInt {
    let (q, r) = numerator.div_rem(divisor);
    assert!(
        r.is_zero(),
        "internal invariant violated: {what} is not integral"
    );
    q
}

/// `C(n, k)`; zero when `k > n`.
pub fn binomial(n: u64, k: u64) -> ExactInt {
    if k > n {
        return ExactInt::zero();
    }
    let denominator = factorial(k) * factorial(n - k);
    exact_div(&factorial(n), &denominator, "binomial coefficient")
}

pub fn central_binomial(n: u64) -> ExactInt {
    binomial(2 * n, n)
}

pub fn catalan(n: u64) -> ExactInt {
    exact_div(
        &central_binomial(n),
        &ExactInt::from(n + 1),
        "Catalan number",
    )
}

/// `(2m)! (2n)! / (m! n! (m+n)!)`, computed as
/// `C(2m, m) C(2n, n) / C(m+n, n)`.
pub fn super_catalan_doubled(m: u64, n: u64) -> ExactInt {
    let numerator = central_binomial(m) * central_binomial(n);
    exact_div(&numerator, &binomial(m + n, n), "S(m, n)")
}

/// The super Catalan number `(2m)! (2n)! / (2 m! n! (m+n)!)`.
///
/// Half of [`super_catalan_doubled`]; the only non-integral case, `(0, 0)`,
/// is a domain error.
pub fn super_catalan(m: u64, n: u64) -> Result<ExactInt> {
    if m == 0 && n == 0 {
        return Err(Error::Domain("T(0,0) is not integral".into()));
    }
    Ok(exact_div(
        &super_catalan_doubled(m, n),
        &ExactInt::from(2),
        "T(m, n)",
    ))
}

/// Nonnegative up/down paths from the origin to `(2n - 1, 2r - 1)`:
/// `(r / n) C(2n, n + r)`.
pub fn ballot_number(n: u64, r: u64) -> Result<ExactInt> {
    if r < 1 || r > n {
        return Err(Error::Parameter(format!(
            "ballot number needs 1 <= r <= n, got n={n}, r={r}"
        )));
    }
    let numerator = ExactInt::from(r) * binomial(2 * n, n + r);
    Ok(exact_div(&numerator, &ExactInt::from(n), "B(n, r)"))
}

/// Nonnegative up/down paths of length `len` ending at `level`, by the
/// reflection principle.
pub fn nonnegative_paths_to(len: u64, level: u64) -> ExactInt {
    if level > len || !(len - level).is_multiple_of(2) {
        return ExactInt::zero();
    }
    let downs = (len - level) / 2;
    let all = binomial(len, downs);
    if downs == 0 {
        all
    } else {
        all - binomial(len, downs - 1)
    }
}

/// One term of the alternating ballot sum, in both closed forms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BallotTerm {
    pub r: u64,
    /// `(-1)^(r-1) B(m, r) B(n, r)`
    pub product_form: ExactInt,
    /// `(-1)^(r-1) r^2 / (nm) C(2m, m+r) C(2n, n+r)`
    pub binomial_form: ExactInt,
}

/// Terms `r = 1..=min(m, n)`; beyond that both forms vanish.
pub fn alternating_ballot_terms(m: u64, n: u64) -> Result<Vec<BallotTerm>> {
    if m < 1 || n < 1 {
        return Err(Error::Parameter(format!(
            "ballot sum needs m, n >= 1, got m={m}, n={n}"
        )));
    }
    (1..=m.min(n))
        .map(|r| {
            let sign = if r % 2 == 1 {
                ExactInt::one()
            } else {
                -ExactInt::one()
            };
            let product = ballot_number(m, r)? * ballot_number(n, r)?;
            let numerator = ExactInt::from(r * r) * binomial(2 * m, m + r) * binomial(2 * n, n + r);
            let quotient = exact_div(&numerator, &ExactInt::from(n * m), "ballot sum term");
            Ok(BallotTerm {
                r,
                product_form: &sign * product,
                binomial_form: sign * quotient,
            })
        })
        .collect()
}

/// `sum_{r >= 1} (-1)^(r-1) B(m, r) B(n, r)`. Fails if the two closed forms
/// of any term disagree.
pub fn ballot_sum_identity(m: u64, n: u64) -> Result<ExactInt> {
    let terms = alternating_ballot_terms(m, n)?;
    if let Some(t) = terms.iter().find(|t| t.product_form != t.binomial_form) {
        return Err(Error::Internal(format!(
            "ballot sum forms disagree at m={m}, n={n}, r={}: {} vs {}",
            t.r, t.product_form, t.binomial_form
        )));
    }
    Ok(terms.into_iter().map(|t| t.product_form).sum())
}

/// Serde adapter writing exact integers as decimal strings.
pub mod decimal {
    use serde::{de, Deserialize, Deserializer, Serializer};

    use super::ExactInt;

    pub fn serialize<S: Serializer>(value: &ExactInt, serializer: S) -> Result<S::Ok, S::Error> {
        serializer.collect_str(value)
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(deserializer: D) -> Result<ExactInt, D::Error> {
        let text = String::deserialize(deserializer)?;
        text.parse().map_err(de::Error::custom)
    }
}
