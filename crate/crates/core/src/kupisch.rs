//! Connected Nakayama algebras as admissible (Kupisch) sequences.
//!
//! All indices are 1-based, matching the usual labelling of simples
//! `S_1, ..., S_n`. For a cycle algebra the index arithmetic wraps modulo
//! `n` with representative `n` for residue zero; for a line algebra it never
//! wraps.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::zmatrix::IntMatrix;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Kind {
    Line,
    Cycle,
}

impl fmt::Display for Kind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Kind::Line => f.write_str("line"),
            Kind::Cycle => f.write_str("cycle"),
        }
    }
}

/// The admissible sequence `c = (l(P_1), ..., l(P_n))` of a connected
/// Nakayama algebra together with its kind.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KupischSeries {
    kind: Kind,
    c: Vec<usize>,
}

/// The unique representative of `x` modulo `n` in `1..=n`.
pub fn phi(n: usize, x: usize) -> usize {
    assert!(n >= 1, "phi needs n >= 1");
    (x + n - 1) % n + 1
}

fn check_admissible(c: &[usize]) -> Result<()> {
    let n = c.len();
    if n == 0 {
        return Err(Error::Parse("empty sequence".into()));
    }
    if let Some(pos) = c.iter().position(|&x| x == 0) {
        return Err(Error::Parse(format!("entry {} is zero", pos + 1)));
    }
    if let Some(pos) = c[..n - 1].iter().position(|&x| x == 1) {
        return Err(Error::MisplacedOne { position: pos + 1 });
    }
    let bad = |reason: String| Error::InadmissibleSequence {
        seq: c.to_vec(),
        reason,
    };
    for j in 0..n - 1 {
        if c[j] > c[j + 1] + 1 {
            return Err(bad(format!(
                "c_{} = {} exceeds c_{} + 1 = {}",
                j + 1,
                c[j],
                j + 2,
                c[j + 1] + 1
            )));
        }
    }
    if c[n - 1] > c[0] + 1 {
        return Err(bad(format!(
            "c_{n} = {} exceeds c_1 + 1 = {}",
            c[n - 1],
            c[0] + 1
        )));
    }
    Ok(())
}

impl KupischSeries {
    /// Validates `c` and infers the kind: line iff the last entry is 1.
    pub fn new(c: Vec<usize>) -> Result<Self> {
        check_admissible(&c)?;
        let kind = if *c.last().unwrap() == 1 {
            Kind::Line
        } else {
            Kind::Cycle
        };
        Ok(Self { kind, c })
    }

    /// The self-injective cycle algebra `(c, ..., c)` with `n` simples, or
    /// the simple algebra when `c == 1` and `n == 1`.
    pub fn uniform(n: usize, c: usize) -> Result<Self> {
        Self::new(vec![c; n])
    }

    pub fn kind(&self) -> Kind {
        self.kind
    }

    pub fn n(&self) -> usize {
        self.c.len()
    }

    pub fn lengths(&self) -> &[usize] {
        &self.c
    }

    /// `l(P_j)` for a 1-based index `j`.
    pub fn c(&self, j: usize) -> usize {
        self.c[j - 1]
    }

    pub fn max_length(&self) -> usize {
        self.c.iter().copied().max().unwrap()
    }

    /// Index of the simple reached after walking `x - 1` arrows from `S_1`.
    ///
    /// Line algebras never wrap; admissibility keeps every composition
    /// factor index at most `n`, so a larger `x` is a caller bug.
    pub fn idx(&self, x: usize) -> usize {
        match self.kind {
            Kind::Cycle => phi(self.n(), x),
            Kind::Line => {
                assert!(
                    x >= 1 && x <= self.n(),
                    "line index {x} out of range 1..={}",
                    self.n()
                );
                x
            }
        }
    }

    /// The index `t` steps before `j`, or `None` when a line algebra runs
    /// off its start.
    pub fn idx_back(&self, j: usize, t: usize) -> Option<usize> {
        match self.kind {
            Kind::Cycle => {
                let n = self.n();
                Some(phi(n, j + n * (t / n + 1) - t))
            }
            Kind::Line => j.checked_sub(t).filter(|&k| k >= 1),
        }
    }

    pub fn is_self_injective(&self) -> bool {
        match self.kind {
            Kind::Line => self.c == [1],
            Kind::Cycle => self.c.iter().all(|&x| x == self.c[0]),
        }
    }

    /// True iff the sequence is already in normalized form.
    pub fn is_normalized(&self) -> bool {
        match self.kind {
            Kind::Line => true,
            Kind::Cycle => is_normalized_cycle(&self.c),
        }
    }

    /// Cyclic rotation into normalized form.
    ///
    /// The returned offset `o` satisfies `normalized.c(i) == self.c(phi(n, i + o))`.
    /// Among several normalized rotations the lexicographically smallest is
    /// chosen, ties going to the smaller offset.
    pub fn normalize(&self) -> (KupischSeries, usize) {
        if self.kind == Kind::Line {
            return (self.clone(), 0);
        }
        let n = self.n();
        let best = (0..n)
            .map(|o| (rotate(&self.c, o), o))
            .filter(|(r, _)| is_normalized_cycle(r))
            .min()
            .expect("every cycle sequence has a normalized rotation");
        (
            KupischSeries {
                kind: Kind::Cycle,
                c: best.0,
            },
            best.1,
        )
    }

    fn require_cycle(&self) -> Result<()> {
        match self.kind {
            Kind::Cycle => Ok(()),
            Kind::Line => Err(Error::LineUnsupported),
        }
    }

    fn check_index(&self, j: usize) {
        assert!(
            j >= 1 && j <= self.n(),
            "index {j} out of range 1..={}",
            self.n()
        );
    }

    /// `theta(j) = phi_n(j + c_j)`.
    pub fn theta(&self, j: usize) -> Result<usize> {
        self.require_cycle()?;
        self.check_index(j);
        Ok(phi(self.n(), j + self.c(j)))
    }

    fn theta_unchecked(&self, j: usize) -> usize {
        phi(self.n(), j + self.c(j))
    }

    pub fn theta_data(&self) -> Result<ThetaData> {
        self.require_cycle()?;
        let mut image: BTreeSet<usize> = (1..=self.n()).collect();
        let mut d = 0;
        loop {
            let next: BTreeSet<usize> = image.iter().map(|&j| self.theta_unchecked(j)).collect();
            if next == image {
                break;
            }
            image = next;
            d += 1;
        }
        let regular: Vec<usize> = image.into_iter().collect();
        let theta_on_regular: BTreeMap<usize, usize> = regular
            .iter()
            .map(|&j| (j, self.theta_unchecked(j)))
            .collect();
        let cycle_length: BTreeMap<usize, usize> = regular
            .iter()
            .map(|&j| {
                let mut len = 1;
                let mut x = theta_on_regular[&j];
                while x != j {
                    x = theta_on_regular[&x];
                    len += 1;
                }
                (j, len)
            })
            .collect();
        let period = cycle_length
            .values()
            .fold(1, |acc, &l| num_integer::lcm(acc, l));
        Ok(ThetaData {
            d,
            regular,
            theta_on_regular,
            cycle_length,
            period,
        })
    }

    /// Whether `j` is theta-regular and `l(P_{theta^m j}) = l(P*_{theta^{m+1} j})`
    /// along its whole theta-cycle.
    pub fn is_theta_perfect(&self, j: usize) -> Result<bool> {
        let data = self.theta_data()?;
        Ok(self.theta_perfect_with(&data, &self.dual_lengths(), j))
    }

    pub(crate) fn theta_perfect_with(&self, data: &ThetaData, dual: &[usize], j: usize) -> bool {
        let Some(&len) = data.cycle_length.get(&j) else {
            return false;
        };
        let mut x = j;
        for _ in 0..len {
            let y = data.theta_on_regular[&x];
            if self.c(x) != dual[y - 1] {
                return false;
            }
            x = y;
        }
        true
    }

    /// All theta-perfect indices, in increasing order.
    pub fn theta_perfect_set(&self) -> Result<Vec<usize>> {
        let data = self.theta_data()?;
        let dual = self.dual_lengths();
        Ok(data
            .regular
            .iter()
            .copied()
            .filter(|&j| self.theta_perfect_with(&data, &dual, j))
            .collect())
    }

    /// Cartan matrix: entry `(j, k)` is the multiplicity of `S_j` in `P_k`.
    pub fn cartan(&self) -> IntMatrix {
        let n = self.n();
        let mut m = IntMatrix::zeros(n, n);
        for k in 1..=n {
            for t in 0..self.c(k) {
                let j = self.idx(k + t);
                m[(j - 1, k - 1)] += 1;
            }
        }
        m
    }

    /// `l(P*_j) = l(e_j A)`, the lengths of the indecomposable projective
    /// right modules, read off as Cartan row sums.
    pub fn dual_lengths(&self) -> Vec<usize> {
        self.cartan()
            .row_sums()
            .into_iter()
            .map(|s| s as usize)
            .collect()
    }

    /// Kupisch series of the opposite algebra, normalized.
    ///
    /// Reversing the arrows relabels vertex `j` as `n + 1 - j`; the
    /// projective of the opposite algebra at that vertex is `e_j A`.
    pub fn opposite(&self) -> Result<KupischSeries> {
        let n = self.n();
        let dual = self.dual_lengths();
        let c: Vec<usize> = (1..=n).map(|i| dual[n - i]).collect();
        let op = KupischSeries::new(c).map_err(|e| {
            Error::InternalInconsistency(format!("opposite of {self} is not admissible: {e}"))
        })?;
        if op.kind != self.kind {
            return Err(Error::InternalInconsistency(format!(
                "opposite of {self} changed kind"
            )));
        }
        Ok(op.normalize().0)
    }
}

fn rotate(c: &[usize], offset: usize) -> Vec<usize> {
    let n = c.len();
    (0..n).map(|i| c[(i + offset) % n]).collect()
}

fn is_normalized_cycle(c: &[usize]) -> bool {
    let first = c[0];
    let min = *c.iter().min().unwrap();
    c.iter().all(|&x| x == first) || (first == min && *c.last().unwrap() == first + 1)
}

impl fmt::Display for KupischSeries {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for x in &self.c {
            if !first {
                f.write_str(",")?;
            }
            write!(f, "{x}")?;
            first = false;
        }
        Ok(())
    }
}

impl FromStr for KupischSeries {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        parse_sequence(s)
    }
}

/// Parses `"3,4,4"`-style text. Whitespace around entries is ignored.
pub fn parse_sequence(text: &str) -> Result<KupischSeries> {
    if text.trim().is_empty() {
        return Err(Error::Parse("empty sequence".into()));
    }
    let c = text
        .split(',')
        .map(|tok| {
            let tok = tok.trim();
            tok.parse::<usize>()
                .map_err(|_| Error::Parse(format!("'{tok}' is not a positive integer")))
        })
        .collect::<Result<Vec<_>>>()?;
    KupischSeries::new(c)
}

impl Serialize for KupischSeries {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        self.c.serialize(s)
    }
}

impl<'de> Deserialize<'de> for KupischSeries {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        let c = Vec::<usize>::deserialize(d)?;
        KupischSeries::new(c).map_err(serde::de::Error::custom)
    }
}

/// Stabilized image of theta.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ThetaData {
    /// Least `d` with `Im theta^d = Im theta^{d+1}`.
    pub d: usize,
    pub regular: Vec<usize>,
    pub theta_on_regular: BTreeMap<usize, usize>,
    /// Length of the theta-cycle through each regular index.
    pub cycle_length: BTreeMap<usize, usize>,
    /// Order of theta as a permutation of the regular set.
    pub period: usize,
}

impl ThetaData {
    pub fn is_regular(&self, j: usize) -> bool {
        self.theta_on_regular.contains_key(&j)
    }
}
