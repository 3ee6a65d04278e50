//! Certification of claimed bi-Lipschitz bounds `a·d_src ≤ d_tgt ≤ b·d_src`
//! over a finite domain, exhaustively or on seeded pair samples.

use std::cmp::Ordering;
use std::fmt;

use num_rational::Ratio;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::lamplighter::LampState;
use crate::sets::VertexSet;

/// Default tolerance when any distance involved is real-valued.
pub const REAL_TOLERANCE: f64 = 1e-9;

/// Number of witness pairs kept in a report.
pub const MAX_WITNESSES: usize = 5;

/// A distance value: exact for graph metrics, floating for normed targets.
#[derive(Debug, Clone, Copy, PartialEq)]
pub enum Measure {
    Int(u64),
    Real(f64),
}

impl Measure {
    pub fn to_f64(self) -> f64 {
        match self {
            Measure::Int(v) => v as f64,
            Measure::Real(v) => v,
        }
    }

    fn is_zero(self) -> bool {
        self.to_f64() == 0.0
    }
}

/// A multiplicative constant or measured ratio.
#[derive(Debug, Clone, Copy)]
pub enum Constant {
    Exact(Ratio<u64>),
    Real(f64),
}

impl Constant {
    pub fn int(v: u64) -> Self {
        Constant::Exact(Ratio::from_integer(v))
    }

    pub fn ratio(num: u64, den: u64) -> Self {
        Constant::Exact(Ratio::new(num, den))
    }

    pub fn to_f64(self) -> f64 {
        match self {
            Constant::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            Constant::Real(v) => v,
        }
    }

    pub fn exact(self) -> Option<Ratio<u64>> {
        match self {
            Constant::Exact(r) => Some(r),
            Constant::Real(_) => None,
        }
    }

    /// `target / source`; exact when both are integers.
    pub fn quotient(target: Measure, source: Measure) -> Self {
        match (target, source) {
            (Measure::Int(t), Measure::Int(s)) => Constant::Exact(Ratio::new(t, s)),
            (t, s) => Constant::Real(t.to_f64() / s.to_f64()),
        }
    }

    fn div(self, other: Self) -> Option<Self> {
        match (self, other) {
            (_, o) if o.to_f64() == 0.0 => None,
            (Constant::Exact(a), Constant::Exact(b)) => {
                let (n, d) = (
                    *a.numer() as u128 * *b.denom() as u128,
                    *a.denom() as u128 * *b.numer() as u128,
                );
                let r = Ratio::new(n, d);
                match (u64::try_from(*r.numer()), u64::try_from(*r.denom())) {
                    (Ok(n), Ok(d)) => Some(Constant::Exact(Ratio::new(n, d))),
                    _ => Some(Constant::Real(n as f64 / d as f64)),
                }
            }
            (a, b) => Some(Constant::Real(a.to_f64() / b.to_f64())),
        }
    }

    fn json_exact(self) -> Option<String> {
        self.exact().map(|_| self.to_string())
    }
}

impl PartialEq for Constant {
    fn eq(&self, other: &Self) -> bool {
        self.partial_cmp(other) == Some(Ordering::Equal)
    }
}

impl PartialOrd for Constant {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        match (self, other) {
            (Constant::Exact(a), Constant::Exact(b)) => Some(a.cmp(b)),
            (a, b) => a.to_f64().partial_cmp(&b.to_f64()),
        }
    }
}

impl fmt::Display for Constant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Constant::Exact(r) if *r.denom() == 1 => write!(f, "{}", r.numer()),
            Constant::Exact(r) => write!(f, "{}/{}", r.numer(), r.denom()),
            Constant::Real(v) => write!(f, "{v:.12}"),
        }
    }
}

/// A map between metric spaces carrying claimed bounds `(a, b)`.
pub trait BoundedMap: Sync {
    type Point: Sync;
    type Image: Send + Sync;

    fn name(&self) -> String;
    fn bounds(&self) -> (Constant, Constant);
    fn apply(&self, point: &Self::Point) -> Result<Self::Image>;
    fn source_distance(&self, p: &Self::Point, q: &Self::Point) -> Result<Measure>;
    fn target_distance(&self, u: &Self::Image, v: &Self::Image) -> Result<Measure>;
    /// Human-readable point name used in witnesses.
    fn label(&self, point: &Self::Point) -> String;
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Mode {
    /// Every unordered pair of distinct domain points.
    Exhaustive,
    /// `pairs` uniformly drawn ordered pairs `(i, j)`, `i ≠ j`.
    Sample { pairs: usize, seed: u64 },
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Witness {
    pub u: String,
    pub v: String,
    pub source: f64,
    pub target: f64,
    pub ratio: f64,
    pub kind: &'static str,
}

/// Outcome of [`certify`].
#[derive(Debug, Clone)]
pub struct DistortionReport {
    pub map: String,
    pub domain: usize,
    pub pairs: usize,
    pub lipschitz: Constant,
    pub colipschitz: Constant,
    /// `None` when some pair collapses to distance zero.
    pub distortion: Option<Constant>,
    pub claimed: (Constant, Constant),
    pub tolerance: f64,
    pub violations: usize,
    pub passed: bool,
    pub witnesses: Vec<Witness>,
}

impl DistortionReport {
    pub fn to_json(&self) -> Value {
        let mut out = json!({
            "map": self.map,
            "domain": self.domain,
            "pairs": self.pairs,
            "lipschitz": self.lipschitz.to_f64(),
            "colipschitz": self.colipschitz.to_f64(),
            "distortion": self.distortion.map(Constant::to_f64),
            "claimed": [self.claimed.0.to_f64(), self.claimed.1.to_f64()],
            "tolerance": self.tolerance,
            "violations": self.violations,
            "verdict": if self.passed { "pass" } else { "fail" },
            "witnesses": self.witnesses,
        });
        let obj = out.as_object_mut().expect("object literal");
        if let (Some(l), Some(c)) = (self.lipschitz.json_exact(), self.colipschitz.json_exact()) {
            obj.insert("lipschitz_exact".into(), json!(l));
            obj.insert("colipschitz_exact".into(), json!(c));
            if let Some(d) = self.distortion.and_then(Constant::json_exact) {
                obj.insert("distortion_exact".into(), json!(d));
            }
        }
        if let (Some(a), Some(b)) = (self.claimed.0.json_exact(), self.claimed.1.json_exact()) {
            obj.insert("claimed_exact".into(), json!([a, b]));
        }
        out
    }
}

#[derive(Clone, Copy)]
struct Sample {
    i: usize,
    j: usize,
    source: Measure,
    target: Measure,
    ratio: Constant,
}

#[derive(Clone, Default)]
struct Partial {
    pairs: usize,
    max: Option<Sample>,
    min: Option<Sample>,
    violations: usize,
    first_violations: Vec<Sample>,
    all_exact: bool,
}

impl Partial {
    fn empty() -> Self {
        Partial { all_exact: true, ..Default::default() }
    }

    fn better(candidate: &Sample, current: &Option<Sample>, want: Ordering) -> bool {
        match current {
            None => true,
            Some(cur) => match candidate.ratio.partial_cmp(&cur.ratio) {
                Some(o) if o == want => true,
                Some(Ordering::Equal) => (candidate.i, candidate.j) < (cur.i, cur.j),
                _ => false,
            },
        }
    }

    fn push(&mut self, s: Sample, violated: bool) {
        self.pairs += 1;
        self.all_exact &= s.ratio.exact().is_some();
        if Self::better(&s, &self.max, Ordering::Greater) {
            self.max = Some(s);
        }
        if Self::better(&s, &self.min, Ordering::Less) {
            self.min = Some(s);
        }
        if violated {
            self.violations += 1;
            self.first_violations.push(s);
            self.trim();
        }
    }

    fn trim(&mut self) {
        self.first_violations.sort_by_key(|s| (s.i, s.j));
        self.first_violations.truncate(MAX_WITNESSES);
    }

    fn merge(mut self, other: Partial) -> Partial {
        self.pairs += other.pairs;
        self.all_exact &= other.all_exact;
        if let Some(s) = other.max {
            if Self::better(&s, &self.max, Ordering::Greater) {
                self.max = Some(s);
            }
        }
        if let Some(s) = other.min {
            if Self::better(&s, &self.min, Ordering::Less) {
                self.min = Some(s);
            }
        }
        self.violations += other.violations;
        self.first_violations.extend(other.first_violations);
        self.trim();
        self
    }
}

fn below(value: Constant, bound: Constant, tol: f64) -> bool {
    match (value, bound) {
        (Constant::Exact(v), Constant::Exact(b)) if tol == 0.0 => v < b,
        (v, b) => v.to_f64() < b.to_f64() - tol,
    }
}

fn above(value: Constant, bound: Constant, tol: f64) -> bool {
    match (value, bound) {
        (Constant::Exact(v), Constant::Exact(b)) if tol == 0.0 => v > b,
        (v, b) => v.to_f64() > b.to_f64() + tol,
    }
}

/// Measures the Lipschitz and co-Lipschitz constants of `map` over `domain`
/// and checks them against the claimed bounds.
///
/// `tol` defaults to 0 when every ratio is exact and to [`REAL_TOLERANCE`]
/// otherwise. The result does not depend on the rayon pool size.
pub fn certify<M: BoundedMap>(map: &M, domain: &[M::Point], mode: Mode, tol: Option<f64>) -> Result<DistortionReport> {
    if domain.len() < 2 {
        return Err(Error::DegenerateDomain);
    }
    let images: Vec<M::Image> = domain.par_iter().map(|p| map.apply(p)).collect::<Result<_>>()?;
    let (a, b) = map.bounds();

    let evaluate = |i: usize, j: usize| -> Result<Sample> {
        let source = map.source_distance(&domain[i], &domain[j])?;
        if source.is_zero() {
            return Err(Error::invalid(format!("domain points {i} and {j} coincide")));
        }
        let target = map.target_distance(&images[i], &images[j])?;
        Ok(Sample { i, j, source, target, ratio: Constant::quotient(target, source) })
    };
    // Violations are judged with the caller's tolerance if given; otherwise
    // exact ratios use 0 and real ones REAL_TOLERANCE.
    let judge = |s: &Sample| {
        let t = tol.unwrap_or(if s.ratio.exact().is_some() { 0.0 } else { REAL_TOLERANCE });
        below(s.ratio, a, t) || above(s.ratio, b, t)
    };
    let fold = |mut acc: Partial, s: Result<Sample>| -> Result<Partial> {
        let s = s?;
        let v = judge(&s);
        acc.push(s, v);
        Ok(acc)
    };

    let n = domain.len();
    let partial = match mode {
        Mode::Exhaustive => (0..n)
            .into_par_iter()
            .map(|i| ((i + 1)..n).map(|j| evaluate(i, j)).try_fold(Partial::empty(), fold))
            .try_reduce(Partial::empty, |x, y| Ok(x.merge(y)))?,
        Mode::Sample { pairs, seed } => {
            if pairs == 0 {
                return Err(Error::invalid("sample size must be positive"));
            }
            let mut rng = ChaCha8Rng::seed_from_u64(seed);
            let drawn: Vec<(usize, usize)> = (0..pairs)
                .map(|_| {
                    let i = rng.gen_range(0..n);
                    let mut j = rng.gen_range(0..n - 1);
                    if j >= i {
                        j += 1;
                    }
                    (i, j)
                })
                .collect();
            drawn
                .par_chunks(1024)
                .map(|chunk| chunk.iter().map(|&(i, j)| evaluate(i, j)).try_fold(Partial::empty(), fold))
                .try_reduce(Partial::empty, |x, y| Ok(x.merge(y)))?
        }
    };

    let tolerance = tol.unwrap_or(if partial.all_exact { 0.0 } else { REAL_TOLERANCE });
    let max = partial.max.expect("at least one pair");
    let min = partial.min.expect("at least one pair");
    let passed = !below(min.ratio, a, tolerance) && !above(max.ratio, b, tolerance);

    let witness = |s: &Sample, kind: &'static str| Witness {
        u: map.label(&domain[s.i]),
        v: map.label(&domain[s.j]),
        source: s.source.to_f64(),
        target: s.target.to_f64(),
        ratio: s.ratio.to_f64(),
        kind,
    };
    let mut witnesses = vec![witness(&max, "lipschitz"), witness(&min, "colipschitz")];
    witnesses.extend(partial.first_violations.iter().map(|s| witness(s, "violation")));
    witnesses.truncate(MAX_WITNESSES);

    Ok(DistortionReport {
        map: map.name(),
        domain: n,
        pairs: partial.pairs,
        lipschitz: max.ratio,
        colipschitz: min.ratio,
        distortion: max.ratio.div(min.ratio),
        claimed: (a, b),
        tolerance,
        violations: partial.violations,
        passed,
        witnesses,
    })
}

/// Largest base graph for [`enumerate_lamp_states`].
pub const MAX_ENUMERATED_BASE: usize = 14;

/// Every state of `La(G)`, ordered by lamp mask and then position.
pub fn enumerate_lamp_states(graph: &Graph) -> Result<Vec<LampState>> {
    let n = graph.order();
    if n > MAX_ENUMERATED_BASE {
        return Err(Error::too_large("base graph order", n, MAX_ENUMERATED_BASE));
    }
    Ok((0u64..1 << n)
        .flat_map(|mask| (0..n).map(move |pos| LampState { lamps: VertexSet::from_mask(n, mask), pos }))
        .collect())
}

/// `count` independent uniform states of `La(G)`, reproducible from `seed`.
pub fn sample_lamp_states(graph: &Graph, count: usize, seed: u64) -> Result<Vec<LampState>> {
    let n = graph.order();
    if n == 0 {
        return Err(Error::invalid("base graph has no vertices"));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    Ok((0..count)
        .map(|_| {
            let lamps = VertexSet::from_indices(n, (0..n).filter(|_| rng.gen_bool(0.5)));
            LampState { lamps, pos: rng.gen_range(0..n) }
        })
        .collect())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::build_path;

    struct Scale(u64, u64);

    impl BoundedMap for Scale {
        type Point = u64;
        type Image = u64;
        fn name(&self) -> String {
            "scale".into()
        }
        fn bounds(&self) -> (Constant, Constant) {
            (Constant::int(self.0), Constant::int(self.1))
        }
        fn apply(&self, p: &u64) -> Result<u64> {
            Ok(p * self.0 + (p % 2) * (self.1 - self.0))
        }
        fn source_distance(&self, p: &u64, q: &u64) -> Result<Measure> {
            Ok(Measure::Int(p.abs_diff(*q)))
        }
        fn target_distance(&self, u: &u64, v: &u64) -> Result<Measure> {
            Ok(Measure::Int(u.abs_diff(*v)))
        }
        fn label(&self, p: &u64) -> String {
            p.to_string()
        }
    }

    #[test]
    fn identity_is_isometric() {
        let domain: Vec<u64> = (0..20).collect();
        let r = certify(&Scale(1, 1), &domain, Mode::Exhaustive, None).unwrap();
        assert!(r.passed);
        assert_eq!(r.pairs, 190);
        assert_eq!(r.distortion, Some(Constant::int(1)));
        assert_eq!(r.tolerance, 0.0);
    }

    #[test]
    fn measures_exact_ratios() {
        // Images 0, 3, 4, 7, 8, 11.
        let domain: Vec<u64> = (0..6).collect();
        let r = certify(&Scale(2, 3), &domain, Mode::Exhaustive, None).unwrap();
        assert_eq!(r.lipschitz, Constant::int(3));
        assert_eq!(r.colipschitz, Constant::int(1));
        assert_eq!(r.distortion, Some(Constant::int(3)));
        assert!(!r.passed);
        assert!(r.violations > 0);
        let json = r.to_json();
        assert_eq!(json["colipschitz_exact"], "1");
        assert_eq!(json["verdict"], "fail");
        assert!(json["witnesses"].as_array().unwrap().len() <= MAX_WITNESSES);
    }

    #[test]
    fn sampling_is_reproducible() {
        let domain: Vec<u64> = (0..50).collect();
        let mode = Mode::Sample { pairs: 500, seed: 3 };
        let a = certify(&Scale(2, 3), &domain, mode, None).unwrap();
        let b = certify(&Scale(2, 3), &domain, mode, None).unwrap();
        assert_eq!(a.to_json(), b.to_json());
        assert_eq!(a.pairs, 500);
    }

    #[test]
    fn degenerate_domain() {
        assert_eq!(
            certify(&Scale(1, 1), &[4], Mode::Exhaustive, None).unwrap_err(),
            Error::DegenerateDomain
        );
    }

    #[test]
    fn lamp_state_enumeration() {
        assert_eq!(enumerate_lamp_states(&build_path(1).unwrap()).unwrap().len(), 8);
        let states = enumerate_lamp_states(&build_path(2).unwrap()).unwrap();
        assert_eq!(states.len(), 24);
        assert_eq!(states[4].lamps.to_mask(), 1);
        assert_eq!(states[4].pos, 1);
        let p = build_path(9).unwrap();
        assert_eq!(sample_lamp_states(&p, 30, 11).unwrap(), sample_lamp_states(&p, 30, 11).unwrap());
    }
}
