//! Arithmetic of indecomposable modules over a connected Nakayama algebra.
//!
//! Every indecomposable is uniserial and determined by its top and its
//! length, so syzygies, cosyzygies and (co)resolutions reduce to index
//! arithmetic on the Kupisch series.

use std::cmp::Ordering;
use std::collections::HashSet;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::kupisch::KupischSeries;

/// The uniserial module `S_top^[len]`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Indec {
    pub top: usize,
    pub len: usize,
}

impl Indec {
    pub fn new(top: usize, len: usize) -> Self {
        Self { top, len }
    }

    pub fn simple(top: usize) -> Self {
        Self { top, len: 1 }
    }

    pub fn validate(&self, a: &KupischSeries) -> Result<()> {
        if self.top == 0 || self.top > a.n() || self.len == 0 || self.len > a.c(self.top) {
            Err(Error::InvalidModule {
                top: self.top,
                len: self.len,
            })
        } else {
            Ok(())
        }
    }
}

impl fmt::Display for Indec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}:{}", self.top, self.len)
    }
}

/// Parses the `"j:l"` module notation.
impl FromStr for Indec {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let bad = || Error::Parse(format!("'{s}' is not of the form j:l"));
        let (j, l) = s.split_once(':').ok_or_else(bad)?;
        let top = j.trim().parse::<usize>().map_err(|_| bad())?;
        let len = l.trim().parse::<usize>().map_err(|_| bad())?;
        Ok(Indec { top, len })
    }
}

impl Serialize for Indec {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        s.collect_str(self)
    }
}

impl<'de> Deserialize<'de> for Indec {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let s = String::deserialize(d)?;
        s.parse().map_err(serde::de::Error::custom)
    }
}

/// Projective or injective dimension.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum DimValue {
    Finite(usize),
    Infinite,
}

impl DimValue {
    pub fn is_finite(&self) -> bool {
        matches!(self, DimValue::Finite(_))
    }

    pub fn finite(&self) -> Option<usize> {
        match *self {
            DimValue::Finite(d) => Some(d),
            DimValue::Infinite => None,
        }
    }

    /// Saturating addition; infinity absorbs.
    pub fn plus(self, k: usize) -> DimValue {
        match self {
            DimValue::Finite(d) => DimValue::Finite(d + k),
            DimValue::Infinite => DimValue::Infinite,
        }
    }
}

impl PartialOrd for DimValue {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl Ord for DimValue {
    fn cmp(&self, other: &Self) -> Ordering {
        match (self, other) {
            (DimValue::Finite(a), DimValue::Finite(b)) => a.cmp(b),
            (DimValue::Finite(_), DimValue::Infinite) => Ordering::Less,
            (DimValue::Infinite, DimValue::Finite(_)) => Ordering::Greater,
            (DimValue::Infinite, DimValue::Infinite) => Ordering::Equal,
        }
    }
}

impl fmt::Display for DimValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DimValue::Finite(d) => write!(f, "{d}"),
            DimValue::Infinite => f.write_str("inf"),
        }
    }
}

/// Finite dimensions serialize as numbers, infinity as the string `"inf"`.
impl Serialize for DimValue {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            DimValue::Finite(d) => s.serialize_u64(*d as u64),
            DimValue::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for DimValue {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            N(usize),
            S(String),
        }
        match Raw::deserialize(d)? {
            Raw::N(n) => Ok(DimValue::Finite(n)),
            Raw::S(s) if s == "inf" => Ok(DimValue::Infinite),
            Raw::S(s) => Err(serde::de::Error::custom(format!("bad dimension '{s}'"))),
        }
    }
}

/// One term `P_proj_index` of a minimal projective resolution.
///
/// For step `i >= 1` the valuation is that of the differential
/// `P_{a_i} -> P_{a_{i-1}}`; for step 0 it is `l(P_{a_0}) - l(X)`, the
/// length of the first syzygy. With this convention
/// `l(P_{a_{i-1}}) = nu_i + nu_{i+1}` for every `i >= 1`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct ResolutionStep {
    pub proj_index: usize,
    pub valuation: usize,
}

pub fn is_projective(a: &KupischSeries, x: Indec) -> Result<bool> {
    x.validate(a)?;
    Ok(x.len == a.c(x.top))
}

pub fn socle(a: &KupischSeries, x: Indec) -> usize {
    a.idx(x.top + x.len - 1)
}

pub fn top_socle(a: &KupischSeries, x: Indec) -> Result<(usize, usize)> {
    x.validate(a)?;
    Ok((x.top, socle(a, x)))
}

/// Kernel of the projective cover, `None` for projective input.
pub fn syzygy(a: &KupischSeries, x: Indec) -> Result<Option<Indec>> {
    if is_projective(a, x)? {
        return Ok(None);
    }
    let top = a.idx(x.top + x.len);
    let out = Indec::new(top, a.c(x.top) - x.len);
    debug_assert!(out.validate(a).is_ok());
    Ok(Some(out))
}

/// Iterates `step` from `x` until it returns `None` (finite) or revisits a
/// module (infinite). Orbits live in a finite set, so this always stops.
fn orbit_dim(
    a: &KupischSeries,
    x: Indec,
    step: impl Fn(&KupischSeries, Indec) -> Result<Option<Indec>>,
) -> Result<DimValue> {
    x.validate(a)?;
    let mut seen = HashSet::new();
    let mut cur = x;
    let mut count = 0;
    loop {
        match step(a, cur)? {
            None => return Ok(DimValue::Finite(count)),
            Some(next) => {
                if !seen.insert(cur) {
                    return Ok(DimValue::Infinite);
                }
                cur = next;
                count += 1;
            }
        }
    }
}

pub fn proj_dim(a: &KupischSeries, x: Indec) -> Result<DimValue> {
    orbit_dim(a, x, syzygy)
}

/// The first `cap` terms of the minimal projective resolution of `x`,
/// fewer if the resolution is finite.
pub fn min_projective_resolution(
    a: &KupischSeries,
    x: Indec,
    cap: usize,
) -> Result<Vec<ResolutionStep>> {
    if is_projective(a, x)? {
        return Err(Error::ProjectiveInput);
    }
    let mut steps = Vec::with_capacity(cap);
    let mut prev = x;
    let mut cur = Some(x);
    while let Some(m) = cur {
        if steps.len() >= cap {
            break;
        }
        let valuation = if steps.is_empty() {
            a.c(x.top) - x.len
        } else {
            prev.len
        };
        steps.push(ResolutionStep {
            proj_index: m.top,
            valuation,
        });
        prev = m;
        cur = syzygy(a, m)?;
    }
    Ok(steps)
}

/// Longest uniserial with socle `s`, i.e. the indecomposable injective `I_s`.
pub fn injective_envelope(a: &KupischSeries, s: usize) -> Indec {
    assert!(s >= 1 && s <= a.n(), "socle index {s} out of range");
    // valid lengths with socle s form an initial segment by admissibility
    let mut best = Indec::simple(s);
    for t in 1..=a.max_length() {
        match a.idx_back(s, t) {
            Some(k) if a.c(k) > t => best = Indec::new(k, t + 1),
            _ => break,
        }
    }
    best
}

pub fn is_injective(a: &KupischSeries, x: Indec) -> Result<bool> {
    x.validate(a)?;
    Ok(injective_envelope(a, socle(a, x)) == x)
}

/// Cokernel of the injective envelope, `None` for injective input.
pub fn cosyzygy(a: &KupischSeries, x: Indec) -> Result<Option<Indec>> {
    x.validate(a)?;
    let env = injective_envelope(a, socle(a, x));
    if env == x {
        return Ok(None);
    }
    Ok(Some(Indec::new(env.top, env.len - x.len)))
}

pub fn inj_dim(a: &KupischSeries, x: Indec) -> Result<DimValue> {
    orbit_dim(a, x, cosyzygy)
}

/// All indecomposables, ordered by top then length.
pub fn all_indecs(a: &KupischSeries) -> impl Iterator<Item = Indec> + '_ {
    (1..=a.n()).flat_map(move |j| (1..=a.c(j)).map(move |l| Indec::new(j, l)))
}

pub fn projective(a: &KupischSeries, j: usize) -> Indec {
    Indec::new(j, a.c(j))
}
