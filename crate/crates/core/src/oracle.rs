//! Brute-force reference computations on explicit composition series.
//!
//! Nothing here calls into `modarith`, `gorenstein` or `retraction`; the
//! point is to recompute the same answers by a different route so tests can
//! compare the two. Performance is not a goal.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::gorenstein::GpCertificate;
use crate::kupisch::{phi, Kind, KupischSeries};
use crate::modarith::Indec;

/// Composition factors of a uniserial module, from top to socle.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FactorList {
    pub factors: Vec<usize>,
}

impl FactorList {
    pub fn len(&self) -> usize {
        self.factors.len()
    }

    pub fn is_empty(&self) -> bool {
        self.factors.is_empty()
    }

    pub fn top(&self) -> usize {
        self.factors[0]
    }

    pub fn socle(&self) -> usize {
        *self.factors.last().unwrap()
    }

    pub fn to_indec(&self) -> Indec {
        Indec::new(self.top(), self.len())
    }
}

fn step_forward(a: &KupischSeries, j: usize) -> Option<usize> {
    match a.kind() {
        Kind::Cycle => Some(phi(a.n(), j + 1)),
        Kind::Line => (j < a.n()).then_some(j + 1),
    }
}

fn step_backward(a: &KupischSeries, j: usize) -> Option<usize> {
    match a.kind() {
        Kind::Cycle => Some(phi(a.n(), j + a.n() - 1)),
        Kind::Line => (j > 1).then(|| j - 1),
    }
}

/// Composition series of the left projective `P_j`.
pub fn projective_factors(a: &KupischSeries, j: usize) -> FactorList {
    let mut factors = vec![j];
    while factors.len() < a.lengths()[j - 1] {
        let next = step_forward(a, *factors.last().unwrap())
            .expect("admissible line sequences never run past n");
        factors.push(next);
    }
    FactorList { factors }
}

/// Composition series of the right projective `e_j A`: walk backwards from
/// `j` while the path from the new vertex to `j` is nonzero.
pub fn right_projective_factors(a: &KupischSeries, j: usize) -> FactorList {
    let mut factors = vec![j];
    while let Some(k) = step_backward(a, *factors.last().unwrap()) {
        if a.lengths()[k - 1] <= factors.len() {
            break;
        }
        factors.push(k);
    }
    FactorList { factors }
}

pub fn factors_of(a: &KupischSeries, x: Indec) -> Result<FactorList> {
    if x.top == 0 || x.top > a.n() || x.len == 0 || x.len > a.lengths()[x.top - 1] {
        return Err(Error::InvalidFactorList(format!("no module {x}")));
    }
    let p = projective_factors(a, x.top);
    Ok(FactorList {
        factors: p.factors[..x.len].to_vec(),
    })
}

/// A factor list is a module iff it is a top segment of its projective cover.
pub fn validate(a: &KupischSeries, x: &FactorList) -> Result<()> {
    if x.is_empty() {
        return Err(Error::InvalidFactorList("empty".into()));
    }
    if x.top() == 0 || x.top() > a.n() {
        return Err(Error::InvalidFactorList(format!(
            "top {} out of range",
            x.top()
        )));
    }
    let p = projective_factors(a, x.top());
    if x.len() > p.len() || p.factors[..x.len()] != x.factors[..] {
        return Err(Error::InvalidFactorList(format!("{:?}", x.factors)));
    }
    Ok(())
}

/// Every indecomposable, as the top segments of every projective.
pub fn all_modules(a: &KupischSeries) -> Vec<FactorList> {
    (1..=a.n())
        .flat_map(|j| {
            let p = projective_factors(a, j);
            (1..=p.len())
                .map(move |l| FactorList {
                    factors: p.factors[..l].to_vec(),
                })
                .collect::<Vec<_>>()
        })
        .collect()
}

/// Kernel of the projective cover, materialized as the tail of the cover.
pub fn brute_syzygy(a: &KupischSeries, x: &FactorList) -> Result<Option<FactorList>> {
    validate(a, x)?;
    let p = projective_factors(a, x.top());
    let rest = p.factors[x.len()..].to_vec();
    Ok((!rest.is_empty()).then_some(FactorList { factors: rest }))
}

/// Extends `x` upwards one factor at a time until no module has `x` as its
/// bottom segment; the result is the injective envelope.
pub fn brute_injective_envelope(a: &KupischSeries, s: usize) -> FactorList {
    let modules = all_modules(a);
    let mut cur = FactorList { factors: vec![s] };
    loop {
        let ext = modules
            .iter()
            .find(|m| m.len() == cur.len() + 1 && m.factors[1..] == cur.factors[..]);
        match ext {
            Some(m) => cur = m.clone(),
            None => return cur,
        }
    }
}

/// `y` is a submodule of `x` iff it is a bottom segment of `x`.
pub fn embeds_in(y: &FactorList, x: &FactorList) -> bool {
    y.len() <= x.len() && x.factors[x.len() - y.len()..] == y.factors[..]
}

pub fn brute_cosyzygy(a: &KupischSeries, x: &FactorList) -> Result<Option<FactorList>> {
    validate(a, x)?;
    let env = brute_injective_envelope(a, x.socle());
    if !embeds_in(x, &env) {
        return Err(Error::InternalInconsistency(format!(
            "{:?} does not embed in its envelope {:?}",
            x.factors, env.factors
        )));
    }
    let rest = env.factors[..env.len() - x.len()].to_vec();
    Ok((!rest.is_empty()).then_some(FactorList { factors: rest }))
}

fn brute_dim(
    a: &KupischSeries,
    x: &FactorList,
    step: impl Fn(&KupischSeries, &FactorList) -> Result<Option<FactorList>>,
) -> Result<Option<usize>> {
    let mut seen = HashSet::new();
    let mut cur = x.clone();
    let mut count = 0;
    while let Some(next) = step(a, &cur)? {
        if !seen.insert(cur.clone()) {
            return Ok(None);
        }
        cur = next;
        count += 1;
    }
    Ok(Some(count))
}

/// `None` for infinite projective dimension.
pub fn brute_proj_dim(a: &KupischSeries, x: &FactorList) -> Result<Option<usize>> {
    brute_dim(a, x, brute_syzygy)
}

pub fn brute_inj_dim(a: &KupischSeries, x: &FactorList) -> Result<Option<usize>> {
    brute_dim(a, x, brute_cosyzygy)
}

/// Image of a map between uniserial projectives given by a valuation:
/// the top of the source lands on factor `nu` of the target.
fn image_of(source: &FactorList, target: &FactorList, nu: usize) -> Option<Vec<usize>> {
    if nu == 0 || nu >= target.len() || target.factors[nu] != source.top() {
        return None;
    }
    let image = target.factors[nu..].to_vec();
    (image.len() <= source.len() && source.factors[..image.len()] == image[..]).then_some(image)
}

/// Checks that the certificate describes a totally acyclic complex: the
/// periodic complex of left projectives and its dual complex of right
/// projectives are both exact at every position, with the cocycles as
/// claimed.
pub fn verify_certificate(a: &KupischSeries, cert: &GpCertificate) -> Result<bool> {
    let t = cert.period;
    if t == 0
        || cert.modules.len() != t
        || cert.proj_indices.len() != t
        || cert.valuations.len() != t
    {
        return Err(Error::MalformedCertificate(format!(
            "period {t} with {} modules, {} indices, {} valuations",
            cert.modules.len(),
            cert.proj_indices.len(),
            cert.valuations.len()
        )));
    }
    if cert.proj_indices.iter().any(|&p| p == 0 || p > a.n()) {
        return Err(Error::MalformedCertificate(
            "projective index out of range".into(),
        ));
    }
    let at = |i: isize| i.rem_euclid(t as isize) as usize;
    let p = |i: isize| cert.proj_indices[at(i)];
    let nu = |i: isize| cert.valuations[at(i)];

    let left = |i: isize| projective_factors(a, p(i));
    let right = |i: isize| right_projective_factors(a, p(i));

    for i in 0..t as isize {
        // d_i : P_{p_i} -> P_{p_{i-1}} with image modules[i]
        let Some(img) = image_of(&left(i), &left(i - 1), nu(i)) else {
            return Ok(false);
        };
        match factors_of(a, cert.modules[at(i)]) {
            Ok(m) if m.factors == img => {}
            _ => return Ok(false),
        }
        // exactness at P_{p_i}: image of d_{i+1} equals kernel of d_i
        let Some(img_next) = image_of(&left(i + 1), &left(i), nu(i + 1)) else {
            return Ok(false);
        };
        let src = left(i);
        let kernel = src.factors[img.len()..].to_vec();
        if kernel != img_next {
            return Ok(false);
        }

        // dual d_i^* : P*_{p_{i-1}} -> P*_{p_i}, same valuation
        let Some(dimg) = image_of(&right(i - 1), &right(i), nu(i)) else {
            return Ok(false);
        };
        // exactness at P*_{p_i}: image of d_i^* equals kernel of d_{i+1}^*
        let Some(dimg_next) = image_of(&right(i), &right(i + 1), nu(i + 1)) else {
            return Ok(false);
        };
        let dsrc = right(i);
        let dkernel = dsrc.factors[dimg_next.len()..].to_vec();
        if dkernel != dimg {
            return Ok(false);
        }
    }
    Ok(true)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::kupisch::parse_sequence;

    fn ks(s: &str) -> KupischSeries {
        parse_sequence(s).unwrap()
    }

    fn fl(v: &[usize]) -> FactorList {
        FactorList {
            factors: v.to_vec(),
        }
    }

    #[test]
    fn brute_syzygy_examples() {
        let a = ks("2,2,3");
        assert_eq!(brute_syzygy(&a, &fl(&[1])), Ok(Some(fl(&[2]))));
        assert_eq!(brute_syzygy(&a, &fl(&[3, 1, 2])), Ok(None));
        assert!(brute_syzygy(&a, &fl(&[1, 3])).is_err());
        assert!(brute_syzygy(&a, &fl(&[])).is_err());
    }

    #[test]
    fn right_projectives() {
        let a = ks("2,3,3");
        let lens: Vec<usize> = (1..=3)
            .map(|j| right_projective_factors(&a, j).len())
            .collect();
        assert_eq!(lens, [3, 3, 2]);
        assert_eq!(right_projective_factors(&a, 1).factors, [1, 3, 2]);
    }

    #[test]
    fn envelope_search() {
        assert_eq!(brute_injective_envelope(&ks("2,2,3"), 1), fl(&[3, 1]));
        assert_eq!(
            brute_injective_envelope(&ks("5,6,6"), 3).to_indec(),
            Indec::new(2, 5)
        );
    }

    #[test]
    fn certificate_check() {
        let a = ks("5,6,6");
        let cert = GpCertificate {
            period: 1,
            modules: vec![Indec::new(2, 3)],
            proj_indices: vec![2],
            valuations: vec![3],
        };
        assert_eq!(verify_certificate(&a, &cert), Ok(true));
        let mut bad = cert.clone();
        bad.valuations[0] = 4;
        assert_eq!(verify_certificate(&a, &bad), Ok(false));
        bad.valuations[0] = 2;
        assert_eq!(verify_certificate(&a, &bad), Ok(false));
        let mut malformed = cert.clone();
        malformed.valuations.clear();
        assert!(matches!(
            verify_certificate(&a, &malformed),
            Err(Error::MalformedCertificate(_))
        ));

        // S_3 over (2,3,3): exact periodic resolution whose dual is not exact
        let b = ks("2,3,3");
        let fake = GpCertificate {
            period: 2,
            modules: vec![Indec::new(2, 1), Indec::new(3, 2)],
            proj_indices: vec![2, 3],
            valuations: vec![2, 1],
        };
        assert_eq!(verify_certificate(&b, &fake), Ok(false));
    }
}
