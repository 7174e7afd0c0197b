//! Edge moving and the three graft transformations.
//!
//! Each graft builds the two hypergraphs a theorem compares, computes both
//! spectral radii and classifies the signed gap. Gaps within the strictness
//! threshold are reported as [`Verdict::Indistinguishable`], never as a pass or
//! a violation.

use std::ops::Range;

use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::families::{attach_pendant_path, attach_two_paths, edge_anchors, g_es, FamilyKind, FamilySpec};
use crate::hypergraph::Hypergraph;
use crate::numfmt::Sig17;
use crate::spectral::{spectral_radius, PowerConfig};

/// Largest hypertree order used by the random campaigns.
pub const CAMPAIGN_MAX_ORDER: usize = 14;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
pub enum Verdict {
    StrictPass,
    Indistinguishable,
    Violation,
    /// Nothing to compare (e.g. a single class, or a hypothesis that is not met).
    Vacuous,
}

impl Verdict {
    /// Classifies a gap that the theorem claims is positive.
    pub fn from_gap(gap: f64, threshold: f64) -> Verdict {
        if gap > threshold {
            Verdict::StrictPass
        } else if gap < -threshold {
            Verdict::Violation
        } else {
            Verdict::Indistinguishable
        }
    }

    pub fn is_ok(self) -> bool {
        matches!(self, Verdict::StrictPass | Verdict::Vacuous)
    }
}

#[derive(Debug, Clone, PartialEq)]
pub struct GraftReport {
    pub before_rho: f64,
    pub after_rho: f64,
    /// Positive exactly when the claimed strict inequality holds.
    pub gap: f64,
    pub verdict: Verdict,
    pub construction: (FamilySpec, FamilySpec),
    pub seed: Option<u64>,
    pub hypothesis_met: bool,
}

#[derive(Serialize)]
struct GraftReportJson<'a> {
    before_rho: Sig17,
    after_rho: Sig17,
    gap: Sig17,
    verdict: Verdict,
    construction: [&'a FamilySpec; 2],
    #[serde(skip_serializing_if = "Option::is_none")]
    seed: Option<u64>,
    hypothesis_met: bool,
}

impl Serialize for GraftReport {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        GraftReportJson {
            before_rho: Sig17(self.before_rho),
            after_rho: Sig17(self.after_rho),
            gap: Sig17(self.gap),
            verdict: self.verdict,
            construction: [&self.construction.0, &self.construction.1],
            seed: self.seed,
            hypothesis_met: self.hypothesis_met,
        }
        .serialize(s)
    }
}

/// Moves edges `edge_ids` from `v` to `u`: each selected edge `e` (which must
/// contain `v` and avoid `u`) becomes `(e \ {v}) ∪ {u}`.
pub fn move_edges(g: &Hypergraph, edge_ids: &[usize], v: usize, u: usize) -> Result<Hypergraph> {
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    let mut edges = g.edges().to_vec();
    let mut moved = vec![false; g.m()];
    for &id in edge_ids {
        let e = g.edge(id)?;
        if std::mem::replace(&mut moved[id], true) {
            return Err(Error::PreconditionViolated(format!("edge {id} selected twice")));
        }
        if e.binary_search(&v).is_err() {
            return Err(Error::PreconditionViolated(format!("edge {id} does not contain {v}")));
        }
        if e.binary_search(&u).is_ok() {
            return Err(Error::PreconditionViolated(format!("edge {id} already contains {u}")));
        }
        let mut ne: Vec<usize> = e.iter().map(|&w| if w == v { u } else { w }).collect();
        ne.sort_unstable();
        edges[id] = ne;
    }
    g.with_edges(edges).map_err(|err| match err {
        Error::DuplicateEdge { first, second } => {
            Error::ResultingDuplicateEdge(if moved[second] { second } else { first })
        }
        other => other,
    })
}

fn check_base(g: &Hypergraph, min_edges: usize) -> Result<usize> {
    let k = g.uniformity()?;
    if g.m() < min_edges {
        return Err(Error::PreconditionViolated(format!("need at least {min_edges} edges, got {}", g.m())));
    }
    if !g.is_connected() {
        return Err(Error::Disconnected);
    }
    Ok(k)
}

fn compare(
    before: &Hypergraph,
    after: &Hypergraph,
    construction: (FamilySpec, FamilySpec),
    after_should_be_larger: bool,
    cfg: PowerConfig,
) -> Result<GraftReport> {
    let before_rho = spectral_radius(before, cfg)?.rho;
    let after_rho = spectral_radius(after, cfg)?.rho;
    let gap = if after_should_be_larger { after_rho - before_rho } else { before_rho - after_rho };
    Ok(GraftReport {
        before_rho,
        after_rho,
        gap,
        verdict: Verdict::from_gap(gap, cfg.strictness_threshold()),
        construction,
        seed: None,
        hypothesis_met: true,
    })
}

fn two_paths_spec(g: &Hypergraph, u: usize, p: usize, v: usize, q: usize) -> FamilySpec {
    FamilySpec::new(FamilyKind::TwoPendantAttach, &[("u", u), ("p", p), ("v", v), ("q", q)]).with_base(g)
}

/// Graft I: `rho(G_u(p,q)) < rho(G_u(p+1,q-1))` for `p >= q >= 1`.
pub fn graft1(g: &Hypergraph, u: usize, p: usize, q: usize, cfg: PowerConfig) -> Result<GraftReport> {
    check_base(g, 1)?;
    g.check_vertex(u)?;
    if q < 1 || p < q {
        return Err(Error::PreconditionViolated(format!("need p >= q >= 1, got p = {p}, q = {q}")));
    }
    let before = attach_two_paths(g, u, p, u, q)?;
    let after = attach_two_paths(g, u, p + 1, u, q - 1)?;
    let specs = (two_paths_spec(g, u, p, u, q), two_paths_spec(g, u, p + 1, u, q - 1));
    compare(&before, &after, specs, true, cfg)
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct Graft2Report {
    /// `G_{u,v}(p,q)` against `G_{u,v}(p+1,q-1)`.
    pub toward_u: GraftReport,
    /// `G_{u,v}(p,q)` against `G_{u,v}(p-1,q+1)`.
    pub toward_v: GraftReport,
    /// At least one of the two comparisons must be a strict increase.
    pub verdict: Verdict,
    /// Set when `d(u) = d(v) = 1` and `p >= q`: then `toward_u` alone must pass.
    pub corollary: Option<Verdict>,
}

fn either(a: Verdict, b: Verdict) -> Verdict {
    use Verdict::*;
    match (a, b) {
        (StrictPass, _) | (_, StrictPass) => StrictPass,
        (Violation, Violation) => Violation,
        _ => Indistinguishable,
    }
}

/// Graft II on an edge `e` containing `u` and `v` whose deletion leaves
/// exactly `k` components.
pub fn graft2(
    g: &Hypergraph,
    u: usize,
    v: usize,
    e: usize,
    p: usize,
    q: usize,
    cfg: PowerConfig,
) -> Result<Graft2Report> {
    let k = check_base(g, 2)?;
    let edge = g.edge(e)?;
    g.check_vertex(u)?;
    g.check_vertex(v)?;
    if u == v || edge.binary_search(&u).is_err() || edge.binary_search(&v).is_err() {
        return Err(Error::PreconditionViolated(format!("{u} and {v} must be distinct vertices of edge {e}")));
    }
    if p < 1 || q < 1 {
        return Err(Error::PreconditionViolated(format!("need p, q >= 1, got p = {p}, q = {q}")));
    }
    let parts = g.delete_edge(e)?.components().len();
    if parts != k {
        return Err(Error::ComponentHypothesisFailed { edge: e, got: parts, expected: k });
    }
    let h = attach_two_paths(g, u, p, v, q)?;
    let plus = attach_two_paths(g, u, p + 1, v, q - 1)?;
    let minus = attach_two_paths(g, u, p - 1, v, q + 1)?;
    let spec = two_paths_spec(g, u, p, v, q);
    let toward_u = compare(&h, &plus, (spec.clone(), two_paths_spec(g, u, p + 1, v, q - 1)), true, cfg)?;
    let toward_v = compare(&h, &minus, (spec, two_paths_spec(g, u, p - 1, v, q + 1)), true, cfg)?;
    let corollary = (g.degree(u)? == 1 && g.degree(v)? == 1 && p >= q).then_some(toward_u.verdict);
    Ok(Graft2Report { verdict: either(toward_u.verdict, toward_v.verdict), toward_u, toward_v, corollary })
}

/// Graft III: `rho(G_{e,0}(H_1..H_{k-1})) > rho(G_{e,s}(H_1..H_{k-1}))` when
/// some `H_j` has an edge and `j <= s <= k-1` (1-based `j`).
///
/// With only trivial parts both sides coincide; the report then has
/// `hypothesis_met = false` and an indistinguishable gap.
pub fn graft3(
    g: &Hypergraph,
    e: usize,
    s: usize,
    parts: &[(Hypergraph, usize)],
    cfg: PowerConfig,
) -> Result<GraftReport> {
    let k = check_base(g, 2)?;
    edge_anchors(g, e)?;
    if s > k - 1 {
        return Err(Error::BadS { s, max: k - 1 });
    }
    let first = parts.iter().position(|(h, _)| h.m() >= 1).map(|i| i + 1);
    if let Some(j) = first {
        if s < j {
            return Err(Error::PreconditionViolated(format!("need s >= {j} (first nontrivial part), got {s}")));
        }
    }
    let base = g_es(g, e, 0, parts)?;
    let moved = g_es(g, e, s, parts)?;
    let spec = |s: usize| {
        FamilySpec::new(FamilyKind::EdgeSplit, &[("e", e), ("s", s)]).with_base(g).with_parts(parts)
    };
    let mut report = compare(&base, &moved, (spec(0), spec(s)), false, cfg)?;
    report.hypothesis_met = first.is_some();
    Ok(report)
}

/// `rho(G_u(p,q))` for fixed `p + q = total`, from the balanced split to the
/// extreme one `(total, 0)`.
pub fn graft1_sequence(g: &Hypergraph, u: usize, total: usize, cfg: PowerConfig) -> Result<Vec<(usize, usize, f64)>> {
    (0..=total / 2)
        .rev()
        .map(|q| {
            let p = total - q;
            Ok((p, q, spectral_radius(&attach_two_paths(g, u, p, u, q)?, cfg)?.rho))
        })
        .collect()
}

/// Uniform random attachment: starting from a single vertex, every new edge
/// is a pendant edge at a uniformly chosen existing vertex.
pub fn random_hypertree<R: Rng>(rng: &mut R, k: usize, m: usize) -> Hypergraph {
    let mut g = Hypergraph::uniform(1, vec![], k).expect("single vertex");
    for _ in 0..m {
        let v = rng.gen_range(0..g.n());
        g = attach_pendant_path(&g, v, 1).expect("uniform");
    }
    g
}

fn campaign_k<R: Rng>(rng: &mut R) -> (usize, usize) {
    let k = *[2usize, 3, 4].choose(rng).expect("nonempty");
    (k, (CAMPAIGN_MAX_ORDER - 1) / (k - 1))
}

pub fn random_graft1(seed: u64, cfg: PowerConfig) -> Result<GraftReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k, budget) = campaign_k(&mut rng);
    let total = rng.gen_range(2..=budget - 1);
    let q = rng.gen_range(1..=total / 2);
    let m = rng.gen_range(1..=budget - total);
    let g = random_hypertree(&mut rng, k, m);
    let u = rng.gen_range(0..g.n());
    let mut r = graft1(&g, u, total - q, q, cfg)?;
    r.seed = Some(seed);
    Ok(r)
}

pub fn random_graft2(seed: u64, cfg: PowerConfig) -> Result<Graft2Report> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k, budget) = campaign_k(&mut rng);
    let total = rng.gen_range(2..=budget - 2);
    let p = rng.gen_range(1..total);
    let m = rng.gen_range(2..=budget - total);
    let g = random_hypertree(&mut rng, k, m);
    let e = rng.gen_range(0..g.m());
    let pair: Vec<usize> = g.edges()[e].choose_multiple(&mut rng, 2).copied().collect();
    let mut r = graft2(&g, pair[0], pair[1], e, p, total - p, cfg)?;
    r.toward_u.seed = Some(seed);
    r.toward_v.seed = Some(seed);
    Ok(r)
}

pub fn random_graft3(seed: u64, cfg: PowerConfig) -> Result<GraftReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let (k, budget) = campaign_k(&mut rng);
    let m = rng.gen_range(2..budget);
    let g = random_hypertree(&mut rng, k, m);
    let pendant: Vec<usize> = (0..g.m()).filter(|&e| edge_anchors(&g, e).is_ok()).collect();
    let e = *pendant.choose(&mut rng).expect("a hypertree with two edges has a pendant edge");
    let extra = rng.gen_range(1..=budget - m);
    let mut sizes = vec![0usize; k - 1];
    for _ in 0..extra {
        sizes[rng.gen_range(0..k - 1)] += 1;
    }
    let parts: Vec<(Hypergraph, usize)> = sizes
        .iter()
        .map(|&t| {
            let h = random_hypertree(&mut rng, k, t);
            let root = rng.gen_range(0..h.n());
            (h, root)
        })
        .collect();
    let j = sizes.iter().position(|&t| t > 0).expect("extra >= 1") + 1;
    let s = rng.gen_range(j..=k - 1);
    let mut r = graft3(&g, e, s, &parts, cfg)?;
    r.seed = Some(seed);
    Ok(r)
}

/// Runs one seeded instance per seed concurrently; results come back in seed
/// order.
pub fn campaign<T: Send>(seeds: Range<u64>, run: impl Fn(u64) -> Result<T> + Sync + Send) -> Result<Vec<T>> {
    seeds.collect::<Vec<_>>().into_par_iter().map(run).collect()
}
