//! Left retractions: removing the last simple of a normalized sequence,
//! transporting modules along the step, and iterating down to a
//! self-injective algebra.

use num_bigint::BigInt;
use num_traits::One;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::global_dim;
use crate::kupisch::{Kind, KupischSeries};
use crate::modarith::{proj_dim, Indec};
use crate::zmatrix::{determinant, rank, smith_normal_form, SmithForm};

/// One retraction `A -> L(A)` at the simple `S_n` of the normalized sequence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RetractionStep {
    /// The input rotated into normalized form.
    pub source: KupischSeries,
    /// Normalized index `i` corresponds to index `phi(n, i + offset)` of the
    /// sequence the step was requested for.
    pub rotation_offset: usize,
    pub target: KupischSeries,
    /// Index of the localized simple in normalized coordinates; always `n_source`.
    pub localizable_index: usize,
    pub n_source: usize,
}

/// `c'_j = c_j - floor((c_j + j - 1) / n)` for `j < n`.
pub fn retracted_lengths(c: &[usize]) -> Vec<usize> {
    let n = c.len();
    (1..n).map(|j| c[j - 1] - (c[j - 1] + j - 1) / n).collect()
}

pub fn retract_step(a: &KupischSeries) -> Result<RetractionStep> {
    if a.is_self_injective() {
        return Err(Error::SelfInjectiveInput);
    }
    let (source, rotation_offset) = a.normalize();
    let n = source.n();
    let target = KupischSeries::new(retracted_lengths(source.lengths())).map_err(|e| {
        Error::InternalInconsistency(format!("retraction of {source} is not admissible: {e}"))
    })?;
    let step = RetractionStep {
        source,
        rotation_offset,
        target,
        localizable_index: n,
        n_source: n,
    };
    step.check_cartan_invariants()?;
    Ok(step)
}

impl RetractionStep {
    fn check_cartan_invariants(&self) -> Result<()> {
        let cs = self.source.cartan();
        let ct = self.target.cartan();
        let fail = |what: &str| {
            Err(Error::InternalInconsistency(format!(
                "step {} -> {}: {what}",
                self.source, self.target
            )))
        };
        if determinant(&cs)? != determinant(&ct)? {
            return fail("determinant changed");
        }
        if rank(&cs) != rank(&ct) + 1 {
            return fail("rank did not drop by one");
        }
        let (ss, st) = (smith_normal_form(&cs), smith_normal_form(&ct));
        if ss.torsion() != st.torsion() || ss.free_rank != st.free_rank {
            return fail("cokernel of the Cartan matrix changed");
        }
        Ok(())
    }

    /// Image of an indecomposable (in normalized coordinates) under the
    /// quotient functor; `None` exactly for the localized simple.
    pub fn transport(&self, x: Indec) -> Result<Option<Indec>> {
        x.validate(&self.source)?;
        let n = self.n_source;
        let (top, len) = if x.top < n {
            (x.top, x.len - (x.len + x.top - 1) / n)
        } else {
            (1, x.len - 1 - (x.len - 1) / n)
        };
        if len == 0 {
            return Ok(None);
        }
        let out = Indec::new(top, len);
        out.validate(&self.target).map_err(|_| {
            Error::InternalInconsistency(format!(
                "transport of {x} along {} -> {} is invalid",
                self.source, self.target
            ))
        })?;
        Ok(Some(out))
    }

    /// Translates an index of the original sequence to normalized coordinates.
    pub fn to_normalized_index(&self, j: usize) -> usize {
        let n = self.n_source;
        crate::kupisch::phi(n, j + n - self.rotation_offset % n)
    }
}

pub fn transport_module(step: &RetractionStep, x: Indec) -> Result<Option<Indec>> {
    step.transport(x)
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct RetractionSequence {
    pub steps: Vec<RetractionStep>,
    pub terminal: KupischSeries,
    pub r: usize,
}

pub fn retraction_sequence(a: &KupischSeries) -> Result<RetractionSequence> {
    let mut steps = Vec::new();
    let mut cur = a.clone();
    while !cur.is_self_injective() {
        let step = retract_step(&cur)?;
        cur = step.target.clone();
        steps.push(step);
    }
    let r = steps.len();
    Ok(RetractionSequence {
        steps,
        terminal: cur,
        r,
    })
}

/// Number of simples of finite projective dimension, which equals the
/// retraction length when the global dimension is infinite.
pub fn r_via_simples(a: &KupischSeries) -> Result<usize> {
    if global_dim(a).is_finite() {
        return Err(Error::FiniteGlobalDimension);
    }
    let mut count = 0;
    for j in 1..=a.n() {
        if proj_dim(a, Indec::simple(j))?.is_finite() {
            count += 1;
        }
    }
    Ok(count)
}

/// Invariants of the singularity category, read off the terminal
/// self-injective algebra and the Cartan matrix.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SingularityDescriptor {
    pub trivial: bool,
    /// Rank of the truncated tube, `n - r`.
    pub tube_rank: usize,
    /// Common entry of the terminal sequence.
    pub terminal_loewy: usize,
    pub terminal: KupischSeries,
    pub k0: SmithForm,
}

pub fn singularity_descriptor(a: &KupischSeries) -> Result<SingularityDescriptor> {
    let seq = retraction_sequence(a)?;
    let k0 = smith_normal_form(&a.cartan());
    let trivial = seq.terminal.lengths() == [1];
    debug_assert_eq!(trivial, determinant(&a.cartan())? == BigInt::one());
    Ok(SingularityDescriptor {
        trivial,
        tube_rank: seq.terminal.n(),
        terminal_loewy: seq.terminal.c(1),
        terminal: seq.terminal,
        k0,
    })
}

/// Whether `d` is defined on both ends of the step.
pub fn is_cycle_step(step: &RetractionStep) -> bool {
    step.source.kind() == Kind::Cycle && step.target.kind() == Kind::Cycle
}
