//! Global and finitistic dimension, Gorensteinness, and exact enumeration
//! of Gorenstein projective indecomposables with certificates.

use std::collections::HashSet;
use std::fmt;

use serde::Serialize;

use crate::error::{Error, Result};
use crate::kupisch::{Kind, KupischSeries};
use crate::modarith::{
    all_indecs, inj_dim, injective_envelope, is_projective, proj_dim, projective, syzygy, DimValue,
    Indec,
};
use crate::retraction::retract_step;

pub fn global_dim(a: &KupischSeries) -> DimValue {
    (1..=a.n())
        .map(|j| proj_dim(a, Indec::simple(j)).expect("simples are valid"))
        .max()
        .unwrap()
}

/// Largest finite projective dimension of an indecomposable.
pub fn fin_dim(a: &KupischSeries) -> usize {
    all_indecs(a)
        .filter_map(|x| {
            proj_dim(a, x)
                .expect("enumerated modules are valid")
                .finite()
        })
        .max()
        .unwrap_or(0)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct GorensteinVerdict {
    pub gorenstein: bool,
    pub v_dim: Option<usize>,
}

/// Gorensteinness by recursion along the retraction sequence: `A` is
/// Gorenstein iff `L(A)` is and the transported injective `I_n` has finite
/// projective dimension over `L(A)`.
pub fn is_gorenstein(a: &KupischSeries) -> GorensteinVerdict {
    let gorenstein = gorenstein_by_retraction(a);
    GorensteinVerdict {
        gorenstein,
        v_dim: gorenstein.then(|| fin_dim(a)),
    }
}

fn gorenstein_by_retraction(a: &KupischSeries) -> bool {
    let mut cur = a.clone();
    while !cur.is_self_injective() {
        let step = retract_step(&cur).expect("retraction of an admissible sequence");
        let i_n = injective_envelope(&step.source, step.localizable_index);
        let finite = match step.transport(i_n).expect("envelope is valid") {
            None => true,
            Some(y) => proj_dim(&step.target, y)
                .expect("transport is valid")
                .is_finite(),
        };
        if !finite {
            return false;
        }
        cur = step.target;
    }
    true
}

/// Injective dimension of the regular module, the maximum over the
/// indecomposable projectives.
pub fn regular_inj_dim(a: &KupischSeries) -> DimValue {
    (1..=a.n())
        .map(|j| inj_dim(a, projective(a, j)).expect("projectives are valid"))
        .max()
        .unwrap()
}

/// Two-sided definition: the regular module has finite injective dimension
/// over the algebra and over its opposite.
pub fn gorenstein_oracle(a: &KupischSeries) -> bool {
    let op = a.opposite().expect("opposite of an admissible sequence");
    regular_inj_dim(a).is_finite() && regular_inj_dim(&op).is_finite()
}

/// One period of a totally acyclic complex of indecomposable projectives.
///
/// `modules[i+1] = syzygy(modules[i])` cyclically, `proj_indices[i]` is the
/// top of `modules[i]`, and `valuations[i]` is the valuation of the
/// differential `P_{proj_indices[i]} -> P_{proj_indices[i-1]}` whose image
/// is `modules[i]`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct GpCertificate {
    pub period: usize,
    pub modules: Vec<Indec>,
    pub proj_indices: Vec<usize>,
    pub valuations: Vec<usize>,
}

impl GpCertificate {
    fn at<T: Copy>(v: &[T], i: isize) -> T {
        v[i.rem_euclid(v.len() as isize) as usize]
    }

    /// `nu_{i+1} + nu_i` for each position `i`.
    pub fn adjacent_sums(&self) -> Vec<usize> {
        (0..self.period as isize)
            .map(|i| Self::at(&self.valuations, i + 1) + Self::at(&self.valuations, i))
            .collect()
    }

    /// Exactness at every `P_{proj_indices[i]}`.
    pub fn is_exact(&self, a: &KupischSeries) -> bool {
        self.adjacent_sums()
            .iter()
            .enumerate()
            .all(|(i, &s)| s == a.c(Self::at(&self.proj_indices, i as isize - 1)))
    }

    /// Exactness of the dual complex, given `l(P*_j)` for each `j`.
    pub fn is_dual_exact(&self, dual: &[usize]) -> bool {
        self.adjacent_sums()
            .iter()
            .enumerate()
            .all(|(i, &s)| s == dual[Self::at(&self.proj_indices, i as isize + 1) - 1])
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum NotGpReason {
    /// The top or the syzygy top is not theta-perfect.
    ThetaImperfect,
    /// The syzygy orbit reaches a projective or never returns.
    NotPeriodic,
    /// The periodic complex has a non-exact dual.
    DualInexact,
}

impl fmt::Display for NotGpReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotGpReason::ThetaImperfect => "ThetaImperfect",
            NotGpReason::NotPeriodic => "NotPeriodic",
            NotGpReason::DualInexact => "DualInexact",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub enum GpVerdict {
    Certified(GpCertificate),
    NotGp(NotGpReason),
}

impl GpVerdict {
    pub fn certificate(&self) -> Option<&GpCertificate> {
        match self {
            GpVerdict::Certified(c) => Some(c),
            GpVerdict::NotGp(_) => None,
        }
    }
}

/// Decides whether a non-projective indecomposable is Gorenstein projective.
pub fn gp_test(a: &KupischSeries, x: Indec) -> Result<GpVerdict> {
    if a.kind() == Kind::Line {
        return Err(Error::LineUnsupported);
    }
    if is_projective(a, x)? {
        return Err(Error::ProjectiveInput);
    }
    let data = a.theta_data()?;
    let dual = a.dual_lengths();
    Ok(gp_test_with(a, &data, &dual, x))
}

fn gp_test_with(
    a: &KupischSeries,
    data: &crate::kupisch::ThetaData,
    dual: &[usize],
    x: Indec,
) -> GpVerdict {
    let j = x.top;
    let k = a.idx(x.top + x.len);
    if !a.theta_perfect_with(data, dual, j) || !a.theta_perfect_with(data, dual, k) {
        return GpVerdict::NotGp(NotGpReason::ThetaImperfect);
    }

    let mut modules = vec![x];
    let mut seen: HashSet<Indec> = HashSet::from([x]);
    let mut cur = x;
    loop {
        match syzygy(a, cur).expect("orbit stays valid") {
            None => return GpVerdict::NotGp(NotGpReason::NotPeriodic),
            Some(next) if next == x => break,
            Some(next) => {
                if !seen.insert(next) {
                    return GpVerdict::NotGp(NotGpReason::NotPeriodic);
                }
                modules.push(next);
                cur = next;
            }
        }
    }

    let t = modules.len();
    let proj_indices: Vec<usize> = modules.iter().map(|m| m.top).collect();
    let valuations: Vec<usize> = (0..t).map(|i| modules[(i + t - 1) % t].len).collect();
    let cert = GpCertificate {
        period: t,
        modules,
        proj_indices,
        valuations,
    };
    debug_assert!(cert.is_exact(a));
    if cert.is_dual_exact(dual) {
        GpVerdict::Certified(cert)
    } else {
        GpVerdict::NotGp(NotGpReason::DualInexact)
    }
}

/// All non-projective Gorenstein projective indecomposables with
/// certificates, ordered by top then length.
pub fn gp_modules(a: &KupischSeries) -> Vec<(Indec, GpCertificate)> {
    if a.kind() == Kind::Line {
        return Vec::new();
    }
    let data = a.theta_data().expect("cycle algebra");
    let dual = a.dual_lengths();
    if !data
        .regular
        .iter()
        .any(|&j| a.theta_perfect_with(&data, &dual, j))
    {
        return Vec::new();
    }
    all_indecs(a)
        .filter(|&x| x.len < a.c(x.top))
        .filter_map(|x| match gp_test_with(a, &data, &dual, x) {
            GpVerdict::Certified(c) => Some((x, c)),
            GpVerdict::NotGp(_) => None,
        })
        .collect()
}

pub fn is_cm_free(a: &KupischSeries) -> bool {
    gp_modules(a).is_empty()
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(tag = "class")]
pub enum TrichotomyClass {
    Gorenstein { v_dim: usize },
    NonGorensteinCmFree,
    NonGorensteinNotCmFree,
}

impl fmt::Display for TrichotomyClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            TrichotomyClass::Gorenstein { v_dim } => write!(f, "Gorenstein({v_dim})"),
            TrichotomyClass::NonGorensteinCmFree => f.write_str("NonGorensteinCmFree"),
            TrichotomyClass::NonGorensteinNotCmFree => f.write_str("NonGorensteinNotCmFree"),
        }
    }
}

pub fn classify(a: &KupischSeries) -> TrichotomyClass {
    let verdict = is_gorenstein(a);
    match verdict.v_dim {
        Some(v_dim) => TrichotomyClass::Gorenstein { v_dim },
        None if is_cm_free(a) => TrichotomyClass::NonGorensteinCmFree,
        None => TrichotomyClass::NonGorensteinNotCmFree,
    }
}
