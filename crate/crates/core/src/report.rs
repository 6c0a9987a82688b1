//! Aggregated reports for one algebra, one module, a retraction chain, and
//! surveys over all algebras within bounds.
//!
//! Reports serialize to JSON with sorted keys, sequences as arrays of
//! integers, modules as `"j:l"` strings and infinite dimensions as `"inf"`.
//! Indices in an [`AnalysisReport`] refer to the normalized sequence.

use std::collections::BTreeSet;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::{One, ToPrimitive};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::gorenstein::{
    classify, fin_dim, global_dim, gorenstein_oracle, gp_modules, gp_test, GpCertificate,
    GpVerdict, NotGpReason, TrichotomyClass,
};
use crate::kupisch::{Kind, KupischSeries};
use crate::modarith::{
    cosyzygy, inj_dim, is_injective, is_projective, min_projective_resolution, proj_dim, syzygy,
    top_socle, DimValue, Indec, ResolutionStep,
};
use crate::oracle::verify_certificate;
use crate::retraction::{retraction_sequence, singularity_descriptor, SingularityDescriptor};
use crate::zmatrix::{determinant, rank, smith_normal_form, IntMatrix, SmithForm};

fn ser_bigint<S: serde::Serializer>(v: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match v.to_i64() {
        Some(x) => s.serialize_i64(x),
        None => s.collect_str(v),
    }
}

/// Renders any report as pretty JSON with lexicographically sorted keys.
pub fn to_json<T: Serialize>(value: &T) -> String {
    let v = serde_json::to_value(value).expect("reports serialize");
    serde_json::to_string_pretty(&v).expect("values serialize")
}

fn join(c: &[usize]) -> String {
    c.iter().map(usize::to_string).collect::<Vec<_>>().join(",")
}

fn internal(msg: String) -> Error {
    Error::InternalInconsistency(msg)
}

#[derive(Debug, Clone, Serialize)]
pub struct CartanSummary {
    pub matrix: IntMatrix,
    #[serde(serialize_with = "ser_bigint")]
    pub det: BigInt,
    pub rank: usize,
    pub snf: SmithForm,
}

impl CartanSummary {
    pub fn of(a: &KupischSeries) -> Result<Self> {
        let matrix = a.cartan();
        Ok(Self {
            det: determinant(&matrix)?,
            rank: rank(&matrix),
            snf: smith_normal_form(&matrix),
            matrix,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct GpEntry {
    pub module: Indec,
    pub certificate: GpCertificate,
}

#[derive(Debug, Clone, Serialize)]
pub struct AnalysisReport {
    pub input: KupischSeries,
    pub normalized: KupischSeries,
    pub rotation_offset: usize,
    pub kind: Kind,
    pub n: usize,
    /// Absent for line algebras.
    pub d: Option<usize>,
    pub theta_regular: Option<Vec<usize>>,
    pub theta_perfect: Option<Vec<usize>>,
    pub dual_lengths: Vec<usize>,
    pub cartan: CartanSummary,
    pub gl_dim: DimValue,
    pub fin_dim: usize,
    pub class: TrichotomyClass,
    pub v_dim: Option<usize>,
    pub gp_modules: Vec<GpEntry>,
    pub retraction: Vec<KupischSeries>,
    pub r: usize,
    pub terminal: KupischSeries,
    pub singularity: SingularityDescriptor,
}

impl AnalysisReport {
    /// Builds the full report and runs the cross-checks between independent
    /// routes; any disagreement is an `InternalInconsistency`.
    pub fn build(input: &KupischSeries) -> Result<Self> {
        let (a, rotation_offset) = input.normalize();
        let theta = match a.kind() {
            Kind::Cycle => Some(a.theta_data()?),
            Kind::Line => None,
        };
        let theta_perfect = match a.kind() {
            Kind::Cycle => Some(a.theta_perfect_set()?),
            Kind::Line => None,
        };
        let cartan = CartanSummary::of(&a)?;
        let gl_dim = global_dim(&a);
        let class = classify(&a);
        let v_dim = match class {
            TrichotomyClass::Gorenstein { v_dim } => Some(v_dim),
            _ => None,
        };
        let gps = gp_modules(&a);
        let seq = retraction_sequence(&a)?;
        let singularity = singularity_descriptor(&a)?;

        if gorenstein_oracle(&a) != v_dim.is_some() {
            return Err(internal(format!(
                "{a}: Gorenstein recursion and two-sided check disagree"
            )));
        }
        for (x, cert) in &gps {
            if !verify_certificate(&a, cert)? {
                return Err(internal(format!(
                    "{a}: certificate for {x} fails verification"
                )));
            }
        }
        if gl_dim.is_finite() != cartan.det.is_one() || singularity.trivial != cartan.det.is_one() {
            return Err(internal(format!("{a}: determinant criterion violated")));
        }

        Ok(Self {
            input: input.clone(),
            rotation_offset,
            kind: a.kind(),
            n: a.n(),
            d: theta.as_ref().map(|t| t.d),
            theta_regular: theta.map(|t| t.regular),
            theta_perfect,
            dual_lengths: a.dual_lengths(),
            cartan,
            gl_dim,
            fin_dim: fin_dim(&a),
            class,
            v_dim,
            gp_modules: gps
                .into_iter()
                .map(|(module, certificate)| GpEntry {
                    module,
                    certificate,
                })
                .collect(),
            retraction: seq.steps.iter().map(|s| s.target.clone()).collect(),
            r: seq.r,
            terminal: seq.terminal,
            singularity,
            normalized: a,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let opt = |v: &Option<Vec<usize>>| match v {
            Some(v) => format!("{{{}}}", join(v)),
            None => "-".into(),
        };
        let _ = writeln!(s, "sequence      {}", self.input);
        let _ = writeln!(
            s,
            "normalized    {} (offset {})",
            self.normalized, self.rotation_offset
        );
        let _ = writeln!(s, "kind          {} (n = {})", self.kind, self.n);
        let _ = writeln!(
            s,
            "d             {}",
            self.d.map_or("-".to_string(), |d| d.to_string())
        );
        let _ = writeln!(s, "theta-regular {}", opt(&self.theta_regular));
        let _ = writeln!(s, "theta-perfect {}", opt(&self.theta_perfect));
        let _ = writeln!(s, "dual lengths  {}", join(&self.dual_lengths));
        let _ = writeln!(s, "cartan matrix");
        for row in self.cartan.matrix.to_rows() {
            let cells: Vec<String> = row.iter().map(|x| format!("{x:>3}")).collect();
            let _ = writeln!(s, "  {}", cells.join(""));
        }
        let _ = writeln!(
            s,
            "  det {}  rank {}  cokernel {}",
            self.cartan.det,
            self.cartan.rank,
            self.cartan.snf.cokernel_string()
        );
        let _ = writeln!(s, "gl.dim        {}", self.gl_dim);
        let _ = writeln!(s, "fin.dim       {}", self.fin_dim);
        let _ = writeln!(s, "class         {}", self.class);
        if self.gp_modules.is_empty() {
            let _ = writeln!(s, "gp modules    none");
        } else {
            let _ = writeln!(s, "gp modules");
            for e in &self.gp_modules {
                let _ = writeln!(
                    s,
                    "  {}  period {}  projectives {}  valuations {}",
                    e.module,
                    e.certificate.period,
                    join(&e.certificate.proj_indices),
                    join(&e.certificate.valuations)
                );
            }
        }
        let chain: Vec<String> = std::iter::once(self.normalized.to_string())
            .chain(self.retraction.iter().map(|t| t.to_string()))
            .map(|t| format!("({t})"))
            .collect();
        let _ = writeln!(s, "retraction    {}", chain.join(" -> "));
        let _ = writeln!(s, "r             {}", self.r);
        let sg = &self.singularity;
        if sg.trivial {
            let _ = writeln!(s, "singularity   trivial");
        } else {
            let _ = writeln!(
                s,
                "singularity   stable category of ({}), tube rank {}, loewy length {}, K0 = {}",
                sg.terminal,
                sg.tube_rank,
                sg.terminal_loewy,
                sg.k0.cokernel_string()
            );
        }
        s
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct RetractStepReport {
    pub source: KupischSeries,
    pub rotation_offset: usize,
    pub localized_simple: usize,
    pub target: KupischSeries,
    #[serde(serialize_with = "ser_bigint")]
    pub det: BigInt,
    pub source_rank: usize,
    pub target_rank: usize,
    pub cokernel: String,
}

#[derive(Debug, Clone, Serialize)]
pub struct RetractReport {
    pub input: KupischSeries,
    pub steps: Vec<RetractStepReport>,
    pub r: usize,
    pub terminal: KupischSeries,
}

impl RetractReport {
    /// At most `limit` steps are reported when given; `r` and `terminal`
    /// always describe the full sequence.
    pub fn build(input: &KupischSeries, limit: Option<usize>) -> Result<Self> {
        let seq = retraction_sequence(input)?;
        let steps = seq
            .steps
            .iter()
            .take(limit.unwrap_or(usize::MAX))
            .map(|st| {
                let cs = st.source.cartan();
                let ct = st.target.cartan();
                let det = determinant(&cs)?;
                if det != determinant(&ct)? {
                    return Err(internal(format!(
                        "{} -> {}: det changed",
                        st.source, st.target
                    )));
                }
                Ok(RetractStepReport {
                    source: st.source.clone(),
                    rotation_offset: st.rotation_offset,
                    localized_simple: st.localizable_index,
                    target: st.target.clone(),
                    det,
                    source_rank: rank(&cs),
                    target_rank: rank(&ct),
                    cokernel: smith_normal_form(&cs).cokernel_string(),
                })
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(Self {
            input: input.clone(),
            steps,
            r: seq.r,
            terminal: seq.terminal,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        if self.r == 0 {
            let _ = writeln!(
                s,
                "({}) is self-injective: zero retraction steps",
                self.input
            );
            return s;
        }
        for (i, st) in self.steps.iter().enumerate() {
            let _ = writeln!(
                s,
                "step {}: ({}) --localize S_{}--> ({})   det {}  rank {} -> {}  cokernel {}",
                i + 1,
                st.source,
                st.localized_simple,
                st.target,
                st.det,
                st.source_rank,
                st.target_rank,
                st.cokernel
            );
        }
        let _ = writeln!(s, "r = {}, terminal ({})", self.r, self.terminal);
        s
    }
}

#[derive(Debug, Clone, Serialize)]
#[serde(tag = "verdict", rename_all = "snake_case")]
pub enum GpReport {
    Projective,
    Gp { certificate: GpCertificate },
    NotGp { reason: String },
}

#[derive(Debug, Clone, Serialize)]
pub struct ModuleReport {
    pub sequence: KupischSeries,
    pub module: Indec,
    pub top: usize,
    pub socle: usize,
    pub projective: bool,
    pub injective: bool,
    pub proj_dim: DimValue,
    pub inj_dim: DimValue,
    /// `X, Omega X, Omega^2 X, ...` up to the first repeat or zero.
    pub syzygy_orbit: Vec<Indec>,
    pub cosyzygy_orbit: Vec<Indec>,
    pub resolution: Vec<ResolutionStep>,
    pub gp: GpReport,
}

fn orbit(
    a: &KupischSeries,
    x: Indec,
    step: impl Fn(&KupischSeries, Indec) -> Result<Option<Indec>>,
) -> Result<Vec<Indec>> {
    let mut out = vec![x];
    let mut seen = BTreeSet::from([x]);
    let mut cur = x;
    while let Some(next) = step(a, cur)? {
        out.push(next);
        if !seen.insert(next) {
            break;
        }
        cur = next;
    }
    Ok(out)
}

impl ModuleReport {
    /// Indices refer to the sequence exactly as given.
    pub fn build(a: &KupischSeries, x: Indec) -> Result<Self> {
        let (top, socle) = top_socle(a, x)?;
        let projective = is_projective(a, x)?;
        let gp = if projective {
            GpReport::Projective
        } else if a.kind() == Kind::Line {
            GpReport::NotGp {
                reason: "LineAlgebra".into(),
            }
        } else {
            match gp_test(a, x)? {
                GpVerdict::Certified(certificate) => {
                    if !verify_certificate(a, &certificate)? {
                        return Err(internal(format!(
                            "{a}: certificate for {x} fails verification"
                        )));
                    }
                    GpReport::Gp { certificate }
                }
                GpVerdict::NotGp(reason) => GpReport::NotGp {
                    reason: reason.to_string(),
                },
            }
        };
        let resolution = if projective {
            Vec::new()
        } else {
            min_projective_resolution(a, x, a.n() + 3)?
        };
        Ok(Self {
            sequence: a.clone(),
            module: x,
            top,
            socle,
            projective,
            injective: is_injective(a, x)?,
            proj_dim: proj_dim(a, x)?,
            inj_dim: inj_dim(a, x)?,
            syzygy_orbit: orbit(a, x, syzygy)?,
            cosyzygy_orbit: orbit(a, x, cosyzygy)?,
            resolution,
            gp,
        })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let list = |v: &[Indec]| {
            v.iter()
                .map(|m| m.to_string())
                .collect::<Vec<_>>()
                .join(" -> ")
        };
        let _ = writeln!(
            s,
            "module        S_{}^[{}] over ({})",
            self.module.top, self.module.len, self.sequence
        );
        let _ = writeln!(s, "top / socle   S_{} / S_{}", self.top, self.socle);
        let _ = writeln!(s, "projective    {}", self.projective);
        let _ = writeln!(s, "injective     {}", self.injective);
        let _ = writeln!(s, "proj.dim      {}", self.proj_dim);
        let _ = writeln!(s, "inj.dim       {}", self.inj_dim);
        let _ = writeln!(s, "syzygies      {}", list(&self.syzygy_orbit));
        let _ = writeln!(s, "cosyzygies    {}", list(&self.cosyzygy_orbit));
        if !self.resolution.is_empty() {
            let terms: Vec<String> = self
                .resolution
                .iter()
                .map(|r| format!("P_{}[{}]", r.proj_index, r.valuation))
                .collect();
            let _ = writeln!(s, "resolution    {}", terms.join(" <- "));
        }
        match &self.gp {
            GpReport::Projective => {
                let _ = writeln!(s, "gorenstein projective: yes (projective)");
            }
            GpReport::Gp { certificate } => {
                let _ = writeln!(
                    s,
                    "gorenstein projective: yes, period {}, projectives {}, valuations {}",
                    certificate.period,
                    join(&certificate.proj_indices),
                    join(&certificate.valuations)
                );
            }
            GpReport::NotGp { reason } => {
                let _ = writeln!(s, "gorenstein projective: no ({reason})");
            }
        }
        s
    }
}

/// All admissible sequences of length `n` with entries at most `max_loewy`,
/// one per algebra, in normalized form and lexicographic order.
pub fn enumerate_normalized(n: usize, max_loewy: usize) -> Vec<KupischSeries> {
    fn rec(n: usize, max: usize, cur: &mut Vec<usize>, out: &mut BTreeSet<Vec<usize>>) {
        if cur.len() == n {
            if let Ok(a) = KupischSeries::new(cur.clone()) {
                out.insert(a.normalize().0.lengths().to_vec());
            }
            return;
        }
        let lo = if cur.len() + 1 < n { 2 } else { 1 };
        for x in lo..=max {
            // c_j <= c_{j+1} + 1 for the previous entry
            if let Some(&prev) = cur.last() {
                if prev > x + 1 {
                    continue;
                }
            }
            cur.push(x);
            rec(n, max, cur, out);
            cur.pop();
        }
    }
    if n == 0 || max_loewy == 0 {
        return Vec::new();
    }
    let mut out = BTreeSet::new();
    rec(n, max_loewy, &mut Vec::with_capacity(n), &mut out);
    out.into_iter()
        .map(|c| KupischSeries::new(c).expect("enumerated sequences are admissible"))
        .collect()
}

#[derive(Debug, Clone, Serialize)]
pub struct SurveyRow {
    pub sequence: KupischSeries,
    pub kind: Kind,
    pub class: TrichotomyClass,
    pub gl_dim: DimValue,
    pub fin_dim: usize,
    pub d: Option<usize>,
    pub r: usize,
    #[serde(serialize_with = "ser_bigint")]
    pub det: BigInt,
    pub gp_count: usize,
    /// Whether every non-projective module whose top and syzygy top are
    /// theta-perfect turned out Gorenstein projective. Recorded, not assumed.
    pub theta_perfect_sufficient: bool,
}

impl SurveyRow {
    pub fn build(a: &KupischSeries) -> Result<Self> {
        let class = classify(a);
        let gps = gp_modules(a);
        let theta_perfect_sufficient = match a.kind() {
            Kind::Line => true,
            Kind::Cycle => {
                let mut ok = true;
                for x in crate::modarith::all_indecs(a).filter(|x| x.len < a.c(x.top)) {
                    if matches!(
                        gp_test(a, x)?,
                        GpVerdict::NotGp(NotGpReason::DualInexact | NotGpReason::NotPeriodic)
                    ) {
                        ok = false;
                        break;
                    }
                }
                ok
            }
        };
        Ok(Self {
            sequence: a.clone(),
            kind: a.kind(),
            class,
            gl_dim: global_dim(a),
            fin_dim: fin_dim(a),
            d: match a.kind() {
                Kind::Cycle => Some(a.theta_data()?.d),
                Kind::Line => None,
            },
            r: retraction_sequence(a)?.r,
            det: determinant(&a.cartan())?,
            gp_count: gps.len(),
            theta_perfect_sufficient,
        })
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct Survey {
    pub n: usize,
    pub max_loewy: usize,
    pub rows: Vec<SurveyRow>,
}

impl Survey {
    pub fn build(n: usize, max_loewy: usize) -> Result<Self> {
        if n == 0 || max_loewy == 0 {
            return Err(Error::InvalidBounds(
                "n and max Loewy length must be positive".into(),
            ));
        }
        let rows = enumerate_normalized(n, max_loewy)
            .iter()
            .map(SurveyRow::build)
            .collect::<Result<Vec<_>>>()?;
        Ok(Self { n, max_loewy, rows })
    }

    pub fn to_text(&self) -> String {
        let mut s = String::new();
        let _ = writeln!(
            s,
            "{:<18} {:<6} {:<24} {:>6} {:>7} {:>3} {:>3} {:>5} {:>3}",
            "sequence", "kind", "class", "gldim", "findim", "d", "r", "det", "gp"
        );
        for row in &self.rows {
            let _ = writeln!(
                s,
                "{:<18} {:<6} {:<24} {:>6} {:>7} {:>3} {:>3} {:>5} {:>3}",
                format!("({})", row.sequence),
                row.kind.to_string(),
                row.class.to_string(),
                row.gl_dim.to_string(),
                row.fin_dim,
                row.d.map_or("-".into(), |d| d.to_string()),
                row.r,
                row.det.to_string(),
                row.gp_count
            );
        }
        let _ = writeln!(s, "{} algebras", self.rows.len());
        s
    }
}
