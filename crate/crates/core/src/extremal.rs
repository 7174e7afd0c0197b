//! Numerical reproduction of the extremal results for hypertrees.
//!
//! Every check is phrased as a signed gap that the corresponding theorem claims
//! is positive, classified with the strictness threshold of the power
//! iteration in use.

use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::canon::{automorphism_orbits, canonical_form, generate_with_forms, CanonicalForm};
use crate::error::{Error, Result};
use crate::families::{broom, double_broom, double_broom_max_a, edge_count, f_graph, hyperstar, loose_path, FamilyKind, FamilySpec};
use crate::grafts::{GraftReport, Verdict};
use crate::hypergraph::Hypergraph;
use crate::numfmt::Sig17;
use crate::spectral::{diameter, spectral_radius, PowerConfig};

/// Largest order for which [`verify_ordering`] will enumerate.
pub const MAX_ENUM_ORDER: usize = 16;

pub fn check_enumerable(k: usize, m: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::BadEdgeSize(k));
    }
    let n = 1 + (k - 1) * m;
    if n > MAX_ENUM_ORDER {
        return Err(Error::EnumerationTooLarge(format!(
            "k = {k}, m = {m} gives n = {n} > {MAX_ENUM_ORDER}"
        )));
    }
    Ok(n)
}

#[derive(Debug, Clone, PartialEq)]
pub struct RankedClass {
    pub code: CanonicalForm,
    pub rho: f64,
    /// Within the strictness threshold of the next class down.
    pub tied_with_next: bool,
}

#[derive(Debug, Clone, PartialEq)]
pub struct Claim {
    pub theorem: &'static str,
    pub verdict: Verdict,
    pub witness: Option<CanonicalForm>,
    pub expected: CanonicalForm,
    pub matches: bool,
    /// Distance to the nearest competing class, positive when the witness is
    /// strictly separated.
    pub gap: f64,
}

#[derive(Debug, Clone, PartialEq)]
pub struct OrderingCertificate {
    pub k: usize,
    pub m: usize,
    pub n: usize,
    pub ranked: Vec<RankedClass>,
    pub claims: Vec<Claim>,
}

impl OrderingCertificate {
    pub fn claim(&self, theorem: &str) -> Option<&Claim> {
        self.claims.iter().find(|c| c.theorem == theorem)
    }

    pub fn all_ok(&self) -> bool {
        self.claims.iter().all(|c| c.verdict.is_ok())
    }
}

#[derive(Serialize)]
struct RankedJson<'a> {
    code: String,
    edges: &'a [Vec<usize>],
    rho: Sig17,
    tied_with_next: bool,
}

impl Serialize for RankedClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        RankedJson { code: self.code.to_string(), edges: &self.code.edges, rho: Sig17(self.rho), tied_with_next: self.tied_with_next }
            .serialize(s)
    }
}

#[derive(Serialize)]
struct ClaimJson<'a> {
    theorem: &'a str,
    verdict: Verdict,
    witness: Option<String>,
    expected: String,
    matches: bool,
    gap: Sig17,
}

impl Serialize for Claim {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        ClaimJson {
            theorem: self.theorem,
            verdict: self.verdict,
            witness: self.witness.as_ref().map(|w| w.to_string()),
            expected: self.expected.to_string(),
            matches: self.matches,
            gap: Sig17(self.gap),
        }
        .serialize(s)
    }
}

impl Serialize for OrderingCertificate {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Cert<'a> {
            k: usize,
            m: usize,
            n: usize,
            ranked: &'a [RankedClass],
            claims: &'a [Claim],
        }
        Cert { k: self.k, m: self.m, n: self.n, ranked: &self.ranked, claims: &self.claims }.serialize(s)
    }
}

/// All classes with their spectral radii, sorted by descending `rho` with
/// ties broken by canonical form.
pub fn rank_classes(k: usize, m: usize, cfg: PowerConfig) -> Result<Vec<(CanonicalForm, Hypergraph, f64)>> {
    check_enumerable(k, m)?;
    let mut out = generate_with_forms(k, m)
        .into_par_iter()
        .map(|(form, g)| {
            let rho = spectral_radius(&g, cfg)?.rho;
            Ok((form, g, rho))
        })
        .collect::<Result<Vec<_>>>()?;
    out.sort_by(|a, b| b.2.total_cmp(&a.2).then_with(|| a.0.cmp(&b.0)));
    Ok(out)
}

fn claim(
    theorem: &'static str,
    ranked: &[RankedClass],
    pos: Option<usize>,
    competitor: Option<usize>,
    expected: CanonicalForm,
    threshold: f64,
) -> Claim {
    let witness = pos.map(|i| ranked[i].code.clone());
    let matches = witness.as_ref() == Some(&expected);
    let gap = match (pos, competitor) {
        (Some(i), Some(j)) => (ranked[i].rho - ranked[j].rho).abs() * if matches { 1.0 } else { -1.0 },
        _ => f64::NAN,
    };
    let verdict = match (matches, competitor) {
        (false, _) => Verdict::Violation,
        (true, None) => Verdict::Vacuous,
        (true, Some(_)) => Verdict::from_gap(gap, threshold),
    };
    Claim { theorem, verdict, witness, expected, matches, gap }
}

/// Ranks every `k`-uniform hypertree with `m` edges and checks the maximal,
/// minimal, second maximal and second minimal classes.
pub fn verify_ordering(k: usize, m: usize, cfg: PowerConfig) -> Result<OrderingCertificate> {
    let n = check_enumerable(k, m)?;
    let thr = cfg.strictness_threshold();
    let classes = rank_classes(k, m, cfg)?;
    let ranked: Vec<RankedClass> = classes
        .iter()
        .enumerate()
        .map(|(i, (code, _, rho))| RankedClass {
            code: code.clone(),
            rho: *rho,
            tied_with_next: classes.get(i + 1).is_some_and(|next| (rho - next.2).abs() <= thr),
        })
        .collect();
    let len = ranked.len();
    let below = |i: usize| (i + 1 < len).then_some(i + 1);
    let above = |i: usize| i.checked_sub(1);
    let mut claims = vec![
        claim("max", &ranked, Some(0), below(0), canonical_form(&loose_path(n, k)?), thr),
        claim("min", &ranked, Some(len - 1), above(len - 1), canonical_form(&hyperstar(n, k)?), thr),
    ];
    if m >= 4 {
        // The gap above the second class is already the "max" claim.
        claims.push(claim("second-max", &ranked, Some(1), below(1), canonical_form(&f_graph(n, k)?), thr));
    }
    if m >= 3 {
        let i = len - 2;
        claims.push(claim("second-min", &ranked, Some(i), above(i), canonical_form(&double_broom(n, k, 1)?), thr));
    }
    Ok(OrderingCertificate { k, m, n, ranked, claims })
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BroomStep {
    pub delta: usize,
    pub rho: Sig17,
    /// `rho(B^{delta-1}) - rho(B^delta)`; absent for the first entry.
    pub decrease: Option<Sig17>,
    pub verdict: Verdict,
    /// Whether `B^delta` is the unique maximum among enumerated hypertrees
    /// with maximum degree `delta`; absent when enumeration is not feasible.
    pub argmax: Option<Verdict>,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct BroomChain {
    pub n: usize,
    pub k: usize,
    pub steps: Vec<BroomStep>,
}

impl BroomChain {
    pub fn all_ok(&self) -> bool {
        self.steps.iter().all(|s| s.verdict.is_ok() && s.argmax.is_none_or(Verdict::is_ok))
    }

    pub fn rhos(&self) -> Vec<(usize, f64)> {
        self.steps.iter().map(|s| (s.delta, s.rho.0)).collect()
    }
}

/// `rho(B^delta)` for `delta = 2..=m`, checked to be strictly decreasing, and
/// (when enumeration is feasible) checked against every hypertree with the same
/// maximum degree.
pub fn verify_broom_chain(n: usize, k: usize, cfg: PowerConfig) -> Result<BroomChain> {
    let m = edge_count(n, k)?;
    if m < 2 {
        return Err(Error::TooSmall(format!("broom chain needs at least 2 edges, got {m}")));
    }
    let thr = cfg.strictness_threshold();
    let classes = check_enumerable(k, m).ok().map(|_| rank_classes(k, m, cfg)).transpose()?;
    let mut steps: Vec<BroomStep> = Vec::new();
    for delta in 2..=m {
        let b = broom(n, k, delta)?;
        let rho = spectral_radius(&b, cfg)?.rho;
        let decrease = steps.last().map(|prev| prev.rho.0 - rho);
        let verdict = decrease.map_or(Verdict::Vacuous, |d| Verdict::from_gap(d, thr));
        let argmax = classes.as_ref().map(|cls| {
            let code = canonical_form(&b);
            let mut same: Vec<&(CanonicalForm, Hypergraph, f64)> =
                cls.iter().filter(|(_, g, _)| g.max_degree() == delta).collect();
            same.sort_by(|a, b| b.2.total_cmp(&a.2));
            match same.as_slice() {
                [] => Verdict::Violation,
                [first, rest @ ..] if first.0 == code => {
                    rest.first().map_or(Verdict::Vacuous, |second| Verdict::from_gap(first.2 - second.2, thr))
                }
                _ => Verdict::Violation,
            }
        });
        steps.push(BroomStep { delta, rho: Sig17(rho), decrease: decrease.map(Sig17), verdict, argmax });
    }
    Ok(BroomChain { n, k, steps })
}

/// `rho(B^3) < rho(F)` for `m >= 3` and `k >= 3`; the gap is
/// `rho(F) - rho(B^3)`.
pub fn verify_f_vs_b3(n: usize, k: usize, cfg: PowerConfig) -> Result<GraftReport> {
    let m = edge_count(n, k)?;
    if m < 3 || k < 3 {
        return Err(Error::PreconditionViolated(format!("need m >= 3 and k >= 3, got m = {m}, k = {k}")));
    }
    let b3 = spectral_radius(&broom(n, k, 3)?, cfg)?.rho;
    let f = spectral_radius(&f_graph(n, k)?, cfg)?.rho;
    let gap = f - b3;
    Ok(GraftReport {
        before_rho: b3,
        after_rho: f,
        gap,
        verdict: Verdict::from_gap(gap, cfg.strictness_threshold()),
        construction: (
            FamilySpec::new(FamilyKind::Broom, &[("n", n), ("k", k), ("delta", 3)]),
            FamilySpec::new(FamilyKind::FGraph, &[("n", n), ("k", k)]),
        ),
        seed: None,
        hypothesis_met: true,
    })
}

/// Largest spread of Perron entries within one automorphism orbit.
pub fn verify_orbit_symmetry(g: &Hypergraph, cfg: PowerConfig) -> Result<f64> {
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    let x = spectral_radius(g, cfg)?.perron;
    let dev = automorphism_orbits(g)
        .orbits
        .iter()
        .map(|orbit| {
            let vals = orbit.iter().map(|&v| x[v]);
            let hi = vals.clone().fold(f64::NEG_INFINITY, f64::max);
            let lo = vals.fold(f64::INFINITY, f64::min);
            hi - lo
        })
        .fold(0.0, f64::max);
    Ok(dev)
}

/// The quintic whose largest root is `rho(D_{n,a})`, with `b = m - 1 - a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct QuinticSpec {
    pub k: i64,
    pub n: i64,
    pub a: i64,
    pub b: i64,
    /// Coefficients of `t^5, t^4, ..., t^0`.
    pub coefficients: [i64; 6],
}

/// Coefficients of `g_a(t)` (from `t^5` down to `t^0`) for arbitrary integers.
pub fn quintic_coefficients(k: i64, a: i64, b: i64) -> [i64; 6] {
    let (k2, k3) = (k * k, k * k * k);
    let ab = a * b;
    [
        -1,
        2 * a * k + 2 * b * k - k - 2 * a - 2 * b - 3,
        k2 + 4 * a * k2 + 4 * b * k2 + 5 * ab * k2 - 10 * ab * k - a * k - b * k - 4 * k + 5 * ab - 3 * a - 3 * b - 3,
        k3 + 3 * ab * k3 + 2 * a * k3 + 2 * b * k3 + k2 - 3 * ab * k2 + 4 * a * k2 + 4 * b * k2 - 3 * ab * k
            - 5 * a * k
            - 5 * b * k
            - 5 * k
            + 3 * ab
            - a
            - b
            - 1,
        2 * k3 + 2 * ab * k3 + 3 * a * k3 + 3 * b * k3 - k2 - 4 * ab * k2 - a * k2 - b * k2 + 2 * ab * k
            - 2 * a * k
            - 2 * b * k
            - 2 * k,
        k3 + a * k3 + b * k3 - k2 - a * k2 - b * k2,
    ]
}

impl QuinticSpec {
    pub fn new(n: usize, k: usize, a: usize) -> Result<Self> {
        let m = edge_count(n, k)?;
        if m < 3 || a < 1 || a > m - 2 {
            return Err(Error::BadA { a, max: m.saturating_sub(2) });
        }
        let (k, a, b) = (k as i64, a as i64, (m - 1 - a) as i64);
        Ok(QuinticSpec { k, n: n as i64, a, b, coefficients: quintic_coefficients(k, a, b) })
    }
}

pub fn quintic_eval(spec: &QuinticSpec, t: f64) -> f64 {
    spec.coefficients.iter().fold(0.0, |acc, &c| acc * t + c as f64)
}

/// `g_a - g_{a-1} == (b+1-a)(k-1)^2 t (5t^2 + (3k+3)t + 2k)` coefficient by
/// coefficient, where `g_{a-1}` uses `(a-1, b+1)`.
pub fn quintic_difference_identity(k: i64, a: i64, b: i64) -> bool {
    let lhs = quintic_coefficients(k, a, b);
    let rhs = quintic_coefficients(k, a - 1, b + 1);
    let scale = (b + 1 - a) * (k - 1) * (k - 1);
    let diff = [0, 0, 5 * scale, (3 * k + 3) * scale, 2 * k * scale, 0];
    (0..6).all(|i| lhs[i] - rhs[i] == diff[i])
}

const GRID_STEPS: usize = 100_000;

/// Largest real root of `g_a`: a descending grid scan from
/// `(n-1) * diameter(D_{n,a})` brackets the first sign change, then bisection
/// narrows it to `1e-12`.
pub fn quintic_largest_root(spec: &QuinticSpec) -> Result<f64> {
    let g = double_broom(spec.n as usize, spec.k as usize, spec.a.min(spec.b) as usize)?;
    let upper = (spec.n - 1) as f64 * f64::from(diameter(&g)?);
    let f = |t: f64| quintic_eval(spec, t);
    if f(upper) >= 0.0 {
        return Err(Error::NoRootFound);
    }
    let h = upper / GRID_STEPS as f64;
    let mut hi = upper;
    let mut lo = None;
    for i in (0..GRID_STEPS).rev() {
        let t = i as f64 * h;
        if f(t) >= 0.0 {
            lo = Some(t);
            break;
        }
        hi = t;
    }
    let mut lo = lo.ok_or(Error::NoRootFound)?;
    while hi - lo > 1e-12 {
        let mid = 0.5 * (lo + hi);
        if mid <= lo || mid >= hi {
            break;
        }
        if f(mid) >= 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    Ok(0.5 * (lo + hi))
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuinticStep {
    pub a: usize,
    pub rho: Sig17,
    pub root: Sig17,
    pub root_error: Sig17,
    /// `rho(D_{n,a}) - rho(D_{n,a-1})`; absent for `a = 1`.
    pub increase: Option<Sig17>,
    pub verdict: Verdict,
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct QuinticChain {
    pub n: usize,
    pub k: usize,
    pub steps: Vec<QuinticStep>,
}

/// Agreement tolerance between the quintic root and power iteration.
pub const ROOT_TOLERANCE: f64 = 1e-6;

impl QuinticChain {
    pub fn all_ok(&self) -> bool {
        self.steps.iter().all(|s| s.verdict.is_ok() && s.root_error.0 <= ROOT_TOLERANCE)
    }
}

/// `rho(D_{n,a})` for `a = 1..=floor((n-k)/(2(k-1)))`, by power iteration and
/// by the quintic, checked to be strictly increasing in `a`.
pub fn verify_quintic_monotone(n: usize, k: usize, cfg: PowerConfig) -> Result<QuinticChain> {
    let max_a = double_broom_max_a(n, k)?;
    let thr = cfg.strictness_threshold();
    let mut steps: Vec<QuinticStep> = Vec::new();
    for a in 1..=max_a {
        let rho = spectral_radius(&double_broom(n, k, a)?, cfg)?.rho;
        let root = quintic_largest_root(&QuinticSpec::new(n, k, a)?)?;
        let increase = steps.last().map(|prev| rho - prev.rho.0);
        let root_increase = steps.last().map(|prev| root - prev.root.0);
        let verdict = match (increase, root_increase) {
            (Some(d), Some(r)) => match (Verdict::from_gap(d, thr), Verdict::from_gap(r, thr)) {
                (Verdict::StrictPass, Verdict::StrictPass) => Verdict::StrictPass,
                (Verdict::Violation, _) | (_, Verdict::Violation) => Verdict::Violation,
                _ => Verdict::Indistinguishable,
            },
            _ => Verdict::Vacuous,
        };
        steps.push(QuinticStep {
            a,
            rho: Sig17(rho),
            root: Sig17(root),
            root_error: Sig17((root - rho).abs()),
            increase: increase.map(Sig17),
            verdict,
        });
    }
    Ok(QuinticChain { n, k, steps })
}
