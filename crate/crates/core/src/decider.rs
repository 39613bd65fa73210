//! The decision procedure.
//!
//! With `n = max(3, largest order in L)`:
//!
//! 1. If some member of the family set at parameter `n` is `L`-free, the
//!    class contains that whole family (members at larger parameters only
//!    contain graphs that already fit at `n`), so it has infinitely many
//!    primes.
//! 2. Otherwise, if some string `S` with `1 <= |S| <= cap` has `S^(2n-1)`
//!    `L`-free, every power of `S` is `L`-free; the resulting chains are
//!    arbitrarily long and each trims to a prime, so again infinitely many.
//! 3. Otherwise no `L`-free chain reaches the length bound returned by
//!    [`chain_length_bound`], and with no `L`-free family member either,
//!    large prime graphs cannot be `L`-free: the answer is finite.
//!
//! The default cap is `2^n`. Periods of length at most `2^(n-2)` already
//! suffice, which [`PeriodCap::Proof`] uses.
//! Candidate strings are scanned by length and then lexicographically with
//! `0 < 1`; the reported period is the least one in that order no matter
//! how many worker threads share the scan.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::chains::{power, string_to_graph, BitString};
use crate::containment::{is_l_free, validate_patterns};
use crate::error::{Error, Result};
use crate::families::{generate_family, l_free_family_member, FamilyKind};
use crate::graph::{Graph, DEFAULT_MAX_ORDER};
use crate::primality::is_prime;
use crate::representations::{section_count, RepresentationIndex};

/// `max(3, largest order in L)`.
pub fn pattern_bound_n(patterns: &[Graph]) -> Result<usize> {
    validate_patterns(patterns)?;
    Ok(patterns.iter().map(Graph::order).max().unwrap_or(0).max(3))
}

/// Largest `n` whose chain length bound fits comfortably in a `u128`.
const MAX_BOUND_N: usize = 40;

/// `((n-1)(4^n - 1)/3 + 1) * (2^(n-2) + n - 1)`: an `L`-free chain at least
/// this long forces a periodic `L`-free chain.
pub fn chain_length_bound(n: usize) -> Result<u128> {
    if n < 3 {
        return Err(Error::ParameterTooSmall(n));
    }
    if n > MAX_BOUND_N {
        return Err(Error::Precondition(format!(
            "chain length bound overflows for n = {n}"
        )));
    }
    Ok(section_count(n) * ((1u128 << (n - 2)) + n as u128 - 1))
}

/// Upper limit on the period length scanned by [`decide`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum PeriodCap {
    /// `2^n`.
    #[default]
    Stated,
    /// `2^(n-2)`.
    Proof,
    Fixed(usize),
}

impl PeriodCap {
    pub fn resolve(self, n: usize) -> Result<usize> {
        match self {
            PeriodCap::Stated => Ok(1 << n),
            PeriodCap::Proof => Ok(1 << (n - 2)),
            PeriodCap::Fixed(0) => Err(Error::PeriodCapTooSmall),
            PeriodCap::Fixed(c) => Ok(c),
        }
    }
}

impl FromStr for PeriodCap {
    type Err = Error;

    fn from_str(s: &str) -> Result<PeriodCap> {
        match s {
            "stated" => Ok(PeriodCap::Stated),
            "proof" | "proof-bound" => Ok(PeriodCap::Proof),
            other => match other.parse::<usize>() {
                Ok(0) => Err(Error::PeriodCapTooSmall),
                Ok(c) => Ok(PeriodCap::Fixed(c)),
                Err(_) => Err(Error::Precondition(format!(
                    "period cap must be `stated`, `proof` or a positive integer, got `{other}`"
                ))),
            },
        }
    }
}

#[derive(Debug, Clone, Default)]
pub struct DecideOptions {
    pub period_cap: PeriodCap,
    /// Worker threads for the string scan; `None` uses the global pool.
    pub threads: Option<usize>,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub enum Outcome {
    #[serde(rename = "INFINITE")]
    Infinite,
    #[serde(rename = "FINITE")]
    Finite,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Outcome::Infinite => "INFINITE",
            Outcome::Finite => "FINITE",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "type", rename_all = "snake_case")]
pub enum Certificate {
    /// The family member of this kind at parameter `n` is `L`-free.
    Family { kind: FamilyKind, n: usize },
    /// `period^power_checked` is `L`-free, hence so is every power.
    PeriodicChain {
        #[serde(serialize_with = "as_display", deserialize_with = "from_text")]
        period: BitString,
        power_checked: usize,
    },
}

fn as_display<T: fmt::Display, S: Serializer>(v: &T, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_str(v)
}

fn from_text<'de, T, D>(d: D) -> std::result::Result<T, D::Error>
where
    T: FromStr,
    T::Err: fmt::Display,
    D: Deserializer<'de>,
{
    let text = String::deserialize(d)?;
    text.parse().map_err(serde::de::Error::custom)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Bounds {
    pub chain_length: u128,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Decision {
    pub outcome: Outcome,
    pub n: usize,
    pub certificate: Option<Certificate>,
    pub bounds: Option<Bounds>,
}

impl Decision {
    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("decision serializes")
    }

    pub fn from_json(text: &str) -> Result<Decision> {
        serde_json::from_str(text).map_err(|e| Error::Precondition(format!("malformed decision: {e}")))
    }

    /// Re-checks the certificate from scratch with routes independent of the
    /// ones that produced it: family members by primality and embedding
    /// search; periods by embedding search on `S^k` for `k <= 2n + 4`
    /// (representation matching once `S^k` outgrows the order cap).
    pub fn verify(&self, patterns: &[Graph]) -> Result<bool> {
        let n = pattern_bound_n(patterns)?;
        if n != self.n {
            return Ok(false);
        }
        match (&self.outcome, &self.certificate, &self.bounds) {
            (Outcome::Infinite, Some(Certificate::Family { kind, n: at }), None) => {
                let member = generate_family(*kind, *at)?;
                Ok(*at == n && is_prime(&member) && is_l_free(&member, patterns)?)
            }
            (
                Outcome::Infinite,
                Some(Certificate::PeriodicChain {
                    period,
                    power_checked,
                }),
                None,
            ) => {
                if period.is_empty() || period.len() > 1 << n || *power_checked != 2 * n - 1 {
                    return Ok(false);
                }
                let index = RepresentationIndex::new(patterns)?;
                for k in 1..=2 * n + 4 {
                    let s = power(period, k);
                    let free = if s.len() < DEFAULT_MAX_ORDER {
                        is_l_free(&string_to_graph(&s)?, patterns)?
                    } else {
                        index.is_free(&s)
                    };
                    if !free {
                        return Ok(false);
                    }
                }
                Ok(true)
            }
            (Outcome::Finite, None, Some(bounds)) => Ok(bounds.chain_length == chain_length_bound(n)?),
            _ => Ok(false),
        }
    }
}

pub fn decide(patterns: &[Graph], options: &DecideOptions) -> Result<Decision> {
    let n = pattern_bound_n(patterns)?;
    let cap = options.period_cap.resolve(n)?;

    if let Some(kind) = l_free_family_member(patterns, n)? {
        return Ok(Decision {
            outcome: Outcome::Infinite,
            n,
            certificate: Some(Certificate::Family { kind, n }),
            bounds: None,
        });
    }

    let index = RepresentationIndex::new(patterns)?;
    let power_checked = 2 * n - 1;
    let period = match options.threads {
        Some(t) => rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build()
            .map_err(|e| Error::Internal(format!("thread pool: {e}")))?
            .install(|| least_free_period(&index, cap, power_checked)),
        None => least_free_period(&index, cap, power_checked),
    };

    Ok(match period {
        Some(period) => Decision {
            outcome: Outcome::Infinite,
            n,
            certificate: Some(Certificate::PeriodicChain {
                period,
                power_checked,
            }),
            bounds: None,
        },
        None => Decision {
            outcome: Outcome::Finite,
            n,
            certificate: None,
            bounds: Some(Bounds {
                chain_length: chain_length_bound(n)?,
            }),
        },
    })
}

/// Least `S` (by length, then lexicographically) with `1 <= |S| <= cap`
/// whose `power`-th power avoids every indexed representation.
fn least_free_period(index: &RepresentationIndex, cap: usize, power_to: usize) -> Option<BitString> {
    (1..=cap).find_map(|len| {
        assert!(len < 64, "period length {len} is beyond the scan range");
        (0..1u64 << len)
            .into_par_iter()
            .map(|x| BitString::from_bits(x, len))
            .find_first(|s| powers_are_free(index, s, power_to))
    })
}

/// `S^1, S^2, ..` in turn, stopping at the first that contains a pattern.
fn powers_are_free(index: &RepresentationIndex, s: &BitString, power_to: usize) -> bool {
    (1..=power_to).all(|k| index.is_free(&power(s, k)))
}
