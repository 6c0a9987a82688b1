//! End-to-end acceptance checks. Runs without the libtest harness so that
//! every criterion prints exactly one PASS/FAIL line; the process exits
//! nonzero if any criterion fails.

use std::collections::BTreeSet;
use std::process::ExitCode;

use nakayama::gorenstein::{gorenstein_oracle, GpCertificate};
use nakayama::modarith::{all_indecs, injective_envelope};
use nakayama::oracle::{
    brute_injective_envelope, brute_syzygy, factors_of, verify_certificate, FactorList,
};
use nakayama::report::{enumerate_normalized, AnalysisReport};
use nakayama::retraction::r_via_simples;
use nakayama::{
    classify, determinant, fin_dim, global_dim, gp_modules, gp_test, is_gorenstein, proj_dim, rank,
    retraction_sequence, singularity_descriptor, smith_normal_form, syzygy, DimValue, GpVerdict,
    Indec, Kind, KupischSeries, NotGpReason, TrichotomyClass,
};
use num_bigint::BigInt;
use num_traits::One;

type Check = Result<(), String>;
type Criterion<'a> = (&'static str, Box<dyn Fn() -> Check + 'a>);

macro_rules! ensure {
    ($cond:expr, $($fmt:tt)*) => {
        if !$cond {
            return Err(format!($($fmt)*));
        }
    };
}

fn ks(c: &[usize]) -> KupischSeries {
    KupischSeries::new(c.to_vec()).expect("admissible")
}

/// Every normalized algebra with at most four simples and entries at most 10.
fn survey() -> Vec<KupischSeries> {
    (1..=4).flat_map(|n| enumerate_normalized(n, 10)).collect()
}

fn criterion_1() -> Check {
    let table = [
        ([2, 2, 3], 3),
        ([2, 4, 3], 2),
        ([3, 4, 4], 4),
        ([3, 5, 4], 2),
    ];
    for (c, gd) in table {
        let r = AnalysisReport::build(&ks(&c)).map_err(|e| e.to_string())?;
        ensure!(
            r.gl_dim == DimValue::Finite(gd),
            "{c:?}: gl.dim {} != {gd}",
            r.gl_dim
        );
    }
    let finite: BTreeSet<Vec<usize>> = table.iter().map(|(c, _)| c.to_vec()).collect();
    let mut others = 0;
    for a in enumerate_normalized(3, 12) {
        if a.kind() != Kind::Cycle || finite.contains(a.lengths()) {
            continue;
        }
        others += 1;
        ensure!(
            global_dim(&a) == DimValue::Infinite,
            "({a}) has finite gl.dim"
        );
    }
    // 11 uniform, 3 per c_1 in 2..=10 and 2 for c_1 = 11, minus the table
    ensure!(
        others == 36,
        "{others} cycle sequences surveyed, expected 36"
    );
    Ok(())
}

fn criterion_2() -> Check {
    for k in 1..=5 {
        let a = ks(&[2 * k, 2 * k + 1]);
        ensure!(
            classify(&a) == TrichotomyClass::Gorenstein { v_dim: 2 },
            "({a}): {}",
            classify(&a)
        );
        ensure!(
            global_dim(&a).is_finite() == (k == 1),
            "({a}): gl.dim {}",
            global_dim(&a)
        );
        let b = ks(&[2 * k + 1, 2 * k + 2]);
        ensure!(
            classify(&b) == TrichotomyClass::NonGorensteinCmFree,
            "({b}): {}",
            classify(&b)
        );
        ensure!(fin_dim(&b) == 1, "({b}): fin.dim {}", fin_dim(&b));
    }
    Ok(())
}

fn criterion_3() -> Check {
    let mut gorenstein: Vec<(Vec<usize>, usize)> = vec![(vec![2, 2, 3], 3), (vec![2, 4, 3], 2)];
    let mut cm_free = vec![vec![2, 3, 3]];
    for k in 1..=4 {
        gorenstein.extend([
            (vec![3 * k, 3 * k, 3 * k + 1], 2),
            (vec![3 * k, 3 * k + 1, 3 * k + 1], 4),
            (vec![3 * k, 3 * k + 2, 3 * k + 1], 2),
            (vec![3 * k + 1, 3 * k + 2, 3 * k + 2], 2),
        ]);
        cm_free.extend([
            vec![3 * k + 1, 3 * k + 1, 3 * k + 2],
            vec![3 * k + 1, 3 * k + 3, 3 * k + 2],
            vec![3 * k + 2, 3 * k + 2, 3 * k + 3],
            vec![3 * k + 2, 3 * k + 4, 3 * k + 3],
        ]);
    }
    for (c, v) in &gorenstein {
        let got = classify(&ks(c));
        ensure!(
            got == TrichotomyClass::Gorenstein { v_dim: *v },
            "{c:?}: {got}, expected v.dim {v}"
        );
    }
    for c in &cm_free {
        let got = classify(&ks(c));
        ensure!(got == TrichotomyClass::NonGorensteinCmFree, "{c:?}: {got}");
    }
    for k in 1..=4 {
        let a = ks(&[3 * k + 2, 3 * k + 3, 3 * k + 3]);
        let got = classify(&a);
        ensure!(
            got == TrichotomyClass::NonGorensteinNotCmFree,
            "({a}): {got}"
        );
        let gps = gp_modules(&a);
        let found: BTreeSet<Indec> = gps.iter().map(|(x, _)| *x).collect();
        let expected: BTreeSet<Indec> = (1..=k).map(|m| Indec::new(2, 3 * m)).collect();
        ensure!(found == expected, "({a}): GP list {found:?}");
        for (x, cert) in &gps {
            ensure!(
                verify_certificate(&a, cert) == Ok(true),
                "({a}): certificate of {x} rejected"
            );
        }
    }
    Ok(())
}

fn criterion_4(all: &[KupischSeries]) -> Check {
    for a in all {
        let det = determinant(&a.cartan()).map_err(|e| e.to_string())?;
        ensure!(
            global_dim(a).is_finite() == det.is_one(),
            "({a}): gl.dim {} but det {det}",
            global_dim(a)
        );
    }
    Ok(())
}

fn criterion_5(all: &[KupischSeries]) -> Check {
    for a in all {
        let n = a.n();
        let fd = fin_dim(a);
        let seq = retraction_sequence(a).map_err(|e| e.to_string())?;
        ensure!(seq.r < n, "({a}): r = {} >= n", seq.r);
        if a.kind() == Kind::Cycle {
            let d = a.theta_data().map_err(|e| e.to_string())?.d;
            ensure!(
                fd <= 2 * d && 2 * d <= 2 * n - 2,
                "({a}): fin.dim {fd}, d {d}"
            );
            ensure!(d <= seq.r, "({a}): d {d} > r {}", seq.r);
        }
        match global_dim(a) {
            DimValue::Finite(g) => {
                ensure!(g <= 2 * n - 2, "({a}): gl.dim {g} > 2n-2");
                ensure!(
                    a.max_length() < 2 * n,
                    "({a}): finite gl.dim with large entry"
                );
            }
            DimValue::Infinite => {
                let by_simples = r_via_simples(a).map_err(|e| e.to_string())?;
                ensure!(
                    by_simples == seq.r,
                    "({a}): r {} vs {by_simples} simples",
                    seq.r
                );
            }
        }
    }
    Ok(())
}

fn sandwich(lower: DimValue, mid: DimValue, label: &str) -> Check {
    ensure!(
        lower <= mid && mid <= lower.plus(2),
        "{label}: {lower} vs {mid}"
    );
    Ok(())
}

fn criterion_6(all: &[KupischSeries]) -> Check {
    for a in all {
        let seq = retraction_sequence(a).map_err(|e| e.to_string())?;
        for step in &seq.steps {
            let (s, t) = (&step.source, &step.target);
            let (cs, ct) = (s.cartan(), t.cartan());
            let label = format!("({s}) -> ({t})");
            ensure!(determinant(&cs) == determinant(&ct), "{label}: det");
            ensure!(rank(&cs) == rank(&ct) + 1, "{label}: rank");
            let (fs, ft) = (smith_normal_form(&cs), smith_normal_form(&ct));
            ensure!(fs.torsion() == ft.torsion(), "{label}: invariant factors");
            if s.kind() == Kind::Cycle && t.kind() == Kind::Cycle {
                let ds = s.theta_data().map_err(|e| e.to_string())?.d;
                let dt = t.theta_data().map_err(|e| e.to_string())?.d;
                ensure!(dt <= ds && ds <= dt + 1, "{label}: d {ds} vs {dt}");
            }
            for x in all_indecs(s) {
                let Some(y) = step.transport(x).map_err(|e| e.to_string())? else {
                    ensure!(x == Indec::simple(s.n()), "{label}: {x} vanishes");
                    continue;
                };
                let pd_s = proj_dim(s, x).map_err(|e| e.to_string())?;
                let pd_t = proj_dim(t, y).map_err(|e| e.to_string())?;
                sandwich(pd_t, pd_s, &format!("{label}: pd of {x}"))?;
            }
            sandwich(global_dim(t), global_dim(s), &format!("{label}: gl.dim"))?;
            sandwich(
                DimValue::Finite(fin_dim(t)),
                DimValue::Finite(fin_dim(s)),
                &format!("{label}: fin.dim"),
            )?;
            for (x, _) in gp_modules(s) {
                if x == Indec::simple(s.n()) {
                    continue;
                }
                let y = step
                    .transport(x)
                    .map_err(|e| e.to_string())?
                    .expect("not S_n");
                let certified =
                    y.len == t.c(y.top) || matches!(gp_test(t, y), Ok(GpVerdict::Certified(_)));
                ensure!(certified, "{label}: GP {x} transports to non-GP {y}");
            }
        }
    }
    Ok(())
}

/// Certificate assembled from the brute-force syzygy orbit, if `x` is purely
/// periodic.
fn brute_periodic_certificate(
    a: &KupischSeries,
    x: Indec,
) -> Result<Option<GpCertificate>, String> {
    let start = factors_of(a, x).map_err(|e| e.to_string())?;
    let mut orbit: Vec<FactorList> = vec![start.clone()];
    loop {
        let next = brute_syzygy(a, orbit.last().unwrap()).map_err(|e| e.to_string())?;
        match next {
            None => return Ok(None),
            Some(m) if m == start => break,
            Some(m) if orbit.contains(&m) || orbit.len() > 2 * a.n() * a.max_length() => {
                return Ok(None)
            }
            Some(m) => orbit.push(m),
        }
    }
    let t = orbit.len();
    Ok(Some(GpCertificate {
        period: t,
        modules: orbit.iter().map(FactorList::to_indec).collect(),
        proj_indices: orbit.iter().map(FactorList::top).collect(),
        valuations: (0..t).map(|i| orbit[(i + t - 1) % t].len()).collect(),
    }))
}

fn criterion_7(all: &[KupischSeries]) -> Check {
    for a in all {
        for x in all_indecs(a) {
            let fast = syzygy(a, x).map_err(|e| e.to_string())?;
            let slow = brute_syzygy(a, &factors_of(a, x).map_err(|e| e.to_string())?)
                .map_err(|e| e.to_string())?
                .map(|f| f.to_indec());
            ensure!(fast == slow, "({a}): syzygy of {x}: {fast:?} vs {slow:?}");
        }
        ensure!(
            gorenstein_oracle(a) == is_gorenstein(a).gorenstein,
            "({a}): Gorenstein recursion disagrees with two-sided check"
        );
        for s in 1..=a.n() {
            let env = injective_envelope(a, s);
            let brute = brute_injective_envelope(a, s).to_indec();
            ensure!(env == brute, "({a}): envelope of S_{s}: {env} vs {brute}");
        }
        let gps = gp_modules(a);
        for (x, cert) in &gps {
            ensure!(
                verify_certificate(a, cert) == Ok(true),
                "({a}): certificate of {x}"
            );
        }
        if a.kind() == Kind::Line {
            continue;
        }
        let listed: BTreeSet<Indec> = gps.iter().map(|(x, _)| *x).collect();
        for x in all_indecs(a).filter(|x| x.len < a.c(x.top)) {
            let verdict = gp_test(a, x).map_err(|e| e.to_string())?;
            let brute = brute_periodic_certificate(a, x)?;
            let brute_ok = match &brute {
                Some(c) => verify_certificate(a, c).map_err(|e| e.to_string())?,
                None => false,
            };
            let k = a.idx(x.top + x.len);
            let compatible = a.is_theta_perfect(x.top).map_err(|e| e.to_string())?
                && a.is_theta_perfect(k).map_err(|e| e.to_string())?;
            match verdict {
                GpVerdict::Certified(_) => {
                    ensure!(brute_ok && listed.contains(&x), "({a}): {x} certified")
                }
                GpVerdict::NotGp(reason) => {
                    ensure!(
                        !brute_ok && !listed.contains(&x),
                        "({a}): {x} rejected but GP"
                    );
                    match reason {
                        NotGpReason::ThetaImperfect => {
                            ensure!(!compatible, "({a}): {x} wrongly ThetaImperfect")
                        }
                        NotGpReason::NotPeriodic => {
                            ensure!(compatible && brute.is_none(), "({a}): {x} NotPeriodic")
                        }
                        NotGpReason::DualInexact => {
                            ensure!(compatible && brute.is_some(), "({a}): {x} DualInexact")
                        }
                    }
                }
            }
        }
    }
    Ok(())
}

fn criterion_8(all: &[KupischSeries]) -> Check {
    let d = singularity_descriptor(&ks(&[2, 3, 3])).map_err(|e| e.to_string())?;
    ensure!(
        d.terminal == ks(&[2, 2]) && d.tube_rank == 2,
        "(2,3,3): {d:?}"
    );
    ensure!(
        d.k0.cokernel_string() == "Z",
        "(2,3,3): K0 {}",
        d.k0.cokernel_string()
    );
    let d = singularity_descriptor(&ks(&[5, 6, 6])).map_err(|e| e.to_string())?;
    ensure!(
        d.terminal == ks(&[4, 4]) && d.tube_rank == 2,
        "(5,6,6): {d:?}"
    );
    for a in all {
        let d = singularity_descriptor(a).map_err(|e| e.to_string())?;
        let det = determinant(&a.cartan()).map_err(|e| e.to_string())?;
        ensure!(
            d.trivial == (det == BigInt::one()),
            "({a}): trivial {} det {det}",
            d.trivial
        );
        ensure!(
            d.tube_rank == a.n() - retraction_sequence(a).unwrap().r,
            "({a}): tube rank"
        );
    }
    Ok(())
}

fn main() -> ExitCode {
    let all = survey();
    let criteria: Vec<Criterion> = vec![
        ("global dimension table for n = 3", Box::new(criterion_1)),
        ("classification for n = 2", Box::new(criterion_2)),
        ("trichotomy for n = 3", Box::new(criterion_3)),
        ("determinant criterion", Box::new(|| criterion_4(&all))),
        ("dimension bounds", Box::new(|| criterion_5(&all))),
        ("retraction invariants", Box::new(|| criterion_6(&all))),
        ("oracle equivalence", Box::new(|| criterion_7(&all))),
        ("singularity descriptors", Box::new(|| criterion_8(&all))),
    ];
    println!("acceptance: {} algebras in survey range", all.len());
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        match check() {
            Ok(()) => println!("criterion {}: PASS  {name}", i + 1),
            Err(msg) => {
                failed += 1;
                println!("criterion {}: FAIL  {name}: {msg}", i + 1);
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
