//! Named hypertree families and the pendant/graft constructions built on them.
//!
//! Labelings are fixed so that file output is byte-stable:
//!
//! * loose path: edge `i` is `{i(k-1), ..., i(k-1)+k-1}`, so path vertices
//!   appear in edge order and the end vertices are `0` and `n-1`;
//! * hyperstar: the center is `0`, edge `i` is `{0, i(k-1)+1, ..., (i+1)(k-1)}`;
//! * broom: the loose path comes first (its end `0` is the gluing vertex),
//!   then the star edges at `0`;
//! * double broom: the bridging edge is `{0 (u), 1 (v), 2..k-1 (w)}`, followed
//!   by the `a` star edges at `u` and the `b` star edges at `v`.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::uhg::HypergraphJson;

/// Number of edges of a `k`-uniform hypertree on `n` vertices.
pub fn edge_count(n: usize, k: usize) -> Result<usize> {
    if k < 2 {
        return Err(Error::BadEdgeSize(k));
    }
    if n == 0 || (n - 1) % (k - 1) != 0 {
        return Err(Error::BadDivisibility { n, k });
    }
    Ok((n - 1) / (k - 1))
}

/// Order of a `k`-uniform hypertree with `m` edges.
pub fn order(m: usize, k: usize) -> usize {
    1 + (k - 1) * m
}

pub fn loose_path(n: usize, k: usize) -> Result<Hypergraph> {
    let m = edge_count(n, k)?;
    let edges = (0..m).map(|i| (i * (k - 1)..i * (k - 1) + k).collect()).collect();
    Hypergraph::uniform(n, edges, k)
}

pub fn hyperstar(n: usize, k: usize) -> Result<Hypergraph> {
    let m = edge_count(n, k)?;
    let edges = (0..m)
        .map(|i| std::iter::once(0).chain(i * (k - 1) + 1..=(i + 1) * (k - 1)).collect())
        .collect();
    Hypergraph::uniform(n, edges, k)
}

/// `B_{n,k}^Δ`: a hyperstar with `Δ-1` edges glued at an end of a loose path.
pub fn broom(n: usize, k: usize, delta: usize) -> Result<Hypergraph> {
    let m = edge_count(n, k)?;
    if delta < 1 || delta > m {
        return Err(Error::BadDelta { delta, max: m });
    }
    let path = loose_path(order(m - (delta - 1), k), k)?;
    let star = hyperstar(order(delta - 1, k), k)?;
    Ok(path.glue(0, &star, 0)?.0)
}

/// `F_{n,k}`: a loose path with `m-1` edges plus a pendant edge at the first
/// degree-one vertex of its second edge. For `k = 2` this is `B_{n,2}^3`.
pub fn f_graph(n: usize, k: usize) -> Result<Hypergraph> {
    let m = edge_count(n, k)?;
    if m < 3 {
        return Err(Error::TooSmall(format!("F_(n,k) needs at least 3 edges, got {m}")));
    }
    if k == 2 {
        return broom(n, 2, 3);
    }
    let path = loose_path(order(m - 1, k), k)?;
    // Second edge spans k-1 ..= 2(k-1); its spine vertices are the two ends.
    let anchor = k;
    attach_pendant_path(&path, anchor, 1)
}

/// Largest admissible `a` for `D_{n,a}`, i.e. `floor((n-k) / (2(k-1)))`.
pub fn double_broom_max_a(n: usize, k: usize) -> Result<usize> {
    let m = edge_count(n, k)?;
    Ok(m.saturating_sub(1) / 2)
}

/// `D_{n,a}`: hyperstars with `a` and `b = m-1-a` edges whose centers `u`, `v`
/// are joined by one edge `{u, v, w_1, ..., w_{k-2}}`.
pub fn double_broom(n: usize, k: usize, a: usize) -> Result<Hypergraph> {
    let m = edge_count(n, k)?;
    let max = double_broom_max_a(n, k)?;
    if m < 3 || a < 1 || a > max {
        return Err(Error::BadA { a, max });
    }
    let b = m - 1 - a;
    let bridge = Hypergraph::uniform(k, vec![(0..k).collect()], k)?;
    let (g, _) = bridge.glue(0, &hyperstar(order(a, k), k)?, 0)?;
    Ok(g.glue(1, &hyperstar(order(b, k), k)?, 0)?.0)
}

/// Attaches a pendant path of length `p` at `u`. Each new edge brings `k-1`
/// fresh vertices; the chain continues from the last fresh vertex of the
/// previous edge.
pub fn attach_pendant_path(g: &Hypergraph, u: usize, p: usize) -> Result<Hypergraph> {
    let k = g.uniformity()?;
    g.check_vertex(u)?;
    if p == 0 {
        return Ok(g.clone());
    }
    let mut edges = g.edges().to_vec();
    let mut n = g.n();
    let mut cur = u;
    for _ in 0..p {
        let fresh: Vec<usize> = (n..n + k - 1).collect();
        n += k - 1;
        let mut e = vec![cur];
        e.extend(&fresh);
        cur = *fresh.last().expect("k >= 2");
        edges.push(e);
    }
    Hypergraph::uniform(n, edges, k)
}

/// `G_{u,v}(p,q)`: pendant paths of lengths `p` at `u` and `q` at `v`.
/// With `u == v` this is `G_u(p,q)`.
pub fn attach_two_paths(g: &Hypergraph, u: usize, p: usize, v: usize, q: usize) -> Result<Hypergraph> {
    g.check_vertex(v)?;
    attach_pendant_path(&attach_pendant_path(g, u, p)?, v, q)
}

/// Splits the anchor edge of a `G_{e,s}` construction into `(w_1..w_{k-1}, w_k)`:
/// the degree-one vertices in increasing order and the single vertex of
/// degree at least two.
pub fn edge_anchors(g: &Hypergraph, e: usize) -> Result<(Vec<usize>, usize)> {
    let k = g.uniformity()?;
    let edge = g.edge(e)?;
    let deg = g.degrees();
    let (ones, rest): (Vec<usize>, Vec<usize>) = edge.iter().partition(|&&w| deg[w] == 1);
    match rest[..] {
        [hub] if ones.len() == k - 1 && deg[hub] >= 2 => Ok((ones, hub)),
        _ => Err(Error::BadAnchorDegrees(e)),
    }
}

/// `G_{e,s}(H_1, ..., H_{k-1})`: the root of part `i` (1-based) is identified
/// with `w_k` when `i <= s` and with `w_i` otherwise.
pub fn g_es(g: &Hypergraph, e: usize, s: usize, parts: &[(Hypergraph, usize)]) -> Result<Hypergraph> {
    let k = g.uniformity()?;
    let (ws, hub) = edge_anchors(g, e)?;
    if s > k - 1 {
        return Err(Error::BadS { s, max: k - 1 });
    }
    if parts.len() != k - 1 {
        return Err(Error::PartCountMismatch { expected: k - 1, got: parts.len() });
    }
    let mut out = g.clone();
    for (i, (part, root)) in parts.iter().enumerate() {
        if part.m() > 0 && part.k() != Some(k) {
            return Err(Error::NotUniform);
        }
        let target = if i < s { hub } else { ws[i] };
        out = out.glue(target, part, *root)?.0;
    }
    Ok(out)
}

/// A hyperstar with `t` edges rooted at its center.
pub fn hyperstar_part(t: usize, k: usize) -> Result<(Hypergraph, usize)> {
    Ok((hyperstar(order(t, k), k)?, 0))
}

/// `G_{e,s}(t_1, ..., t_{k-1})`, every part a hyperstar attached by its center.
pub fn g_es_stars(g: &Hypergraph, e: usize, s: usize, ts: &[usize]) -> Result<Hypergraph> {
    let k = g.uniformity()?;
    let parts = ts.iter().map(|&t| hyperstar_part(t, k)).collect::<Result<Vec<_>>>()?;
    g_es(g, e, s, &parts)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum FamilyKind {
    LoosePath,
    #[serde(rename = "hyperstar")]
    HyperStar,
    Broom,
    FGraph,
    DoubleBroom,
    PendantAttach,
    TwoPendantAttach,
    EdgeSplit,
}

impl FamilyKind {
    pub const ALL: [FamilyKind; 8] = [
        FamilyKind::LoosePath,
        FamilyKind::HyperStar,
        FamilyKind::Broom,
        FamilyKind::FGraph,
        FamilyKind::DoubleBroom,
        FamilyKind::PendantAttach,
        FamilyKind::TwoPendantAttach,
        FamilyKind::EdgeSplit,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyKind::LoosePath => "loose-path",
            FamilyKind::HyperStar => "hyperstar",
            FamilyKind::Broom => "broom",
            FamilyKind::FGraph => "f-graph",
            FamilyKind::DoubleBroom => "double-broom",
            FamilyKind::PendantAttach => "pendant-attach",
            FamilyKind::TwoPendantAttach => "two-pendant-attach",
            FamilyKind::EdgeSplit => "edge-split",
        }
    }
}

impl std::str::FromStr for FamilyKind {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        FamilyKind::ALL
            .into_iter()
            .find(|k| k.name() == s)
            .ok_or_else(|| Error::UnknownFamily(s.to_string()))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct PartSpec {
    pub graph: HypergraphJson,
    pub root: usize,
}

/// Parametric description of one family instance.
///
/// Self-contained kinds (`loose-path`, `hyperstar`, `broom`, `f-graph`,
/// `double-broom`) only use `params`. The pendant and edge-split kinds
/// rewrite a `base` hypergraph; `edge-split` also carries its `parts`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub kind: FamilyKind,
    pub params: BTreeMap<String, i64>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub base: Option<HypergraphJson>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub parts: Vec<PartSpec>,
}

impl FamilySpec {
    pub fn new(kind: FamilyKind, params: &[(&str, usize)]) -> Self {
        FamilySpec {
            kind,
            params: params.iter().map(|&(name, v)| (name.to_string(), v as i64)).collect(),
            base: None,
            parts: Vec::new(),
        }
    }

    pub fn with_base(mut self, base: &Hypergraph) -> Self {
        self.base = Some(base.into());
        if let Some(k) = base.k() {
            self.params.entry("k".into()).or_insert(k as i64);
        }
        self
    }

    pub fn with_parts(mut self, parts: &[(Hypergraph, usize)]) -> Self {
        self.parts = parts.iter().map(|(g, root)| PartSpec { graph: g.into(), root: *root }).collect();
        self
    }

    fn param(&self, name: &str) -> Result<usize> {
        let v = *self.params.get(name).ok_or_else(|| Error::MissingParameter(name.into()))?;
        usize::try_from(v).map_err(|_| Error::InvalidParameter { name: name.into(), value: v })
    }

    fn uniform_graph(&self, j: &HypergraphJson) -> Result<Hypergraph> {
        match self.params.get("k") {
            Some(_) => Hypergraph::uniform(j.n, j.edges.clone(), self.param("k")?),
            None => Hypergraph::build(j.n, j.edges.clone()),
        }
    }

    fn base_graph(&self) -> Result<Hypergraph> {
        let j = self.base.as_ref().ok_or_else(|| Error::MissingParameter("base".into()))?;
        self.uniform_graph(j)
    }

    pub fn materialize(&self) -> Result<Hypergraph> {
        match self.kind {
            FamilyKind::LoosePath => loose_path(self.param("n")?, self.param("k")?),
            FamilyKind::HyperStar => hyperstar(self.param("n")?, self.param("k")?),
            FamilyKind::Broom => broom(self.param("n")?, self.param("k")?, self.param("delta")?),
            FamilyKind::FGraph => f_graph(self.param("n")?, self.param("k")?),
            FamilyKind::DoubleBroom => double_broom(self.param("n")?, self.param("k")?, self.param("a")?),
            FamilyKind::PendantAttach => {
                attach_pendant_path(&self.base_graph()?, self.param("u")?, self.param("p")?)
            }
            FamilyKind::TwoPendantAttach => attach_two_paths(
                &self.base_graph()?,
                self.param("u")?,
                self.param("p")?,
                self.param("v")?,
                self.param("q")?,
            ),
            FamilyKind::EdgeSplit => {
                let parts = self
                    .parts
                    .iter()
                    .map(|p| Ok((self.uniform_graph(&p.graph)?, p.root)))
                    .collect::<Result<Vec<_>>>()?;
                g_es(&self.base_graph()?, self.param("e")?, self.param("s")?, &parts)
            }
        }
    }
}
