//! Distances, the distance matrix and its Perron pair.
//!
//! Hypergraph distance equals breadth-first distance in the 2-section (two
//! vertices adjacent iff they share an edge), so every row of the distance
//! matrix is one BFS over the incidence structure. The Perron pair comes from
//! plain power iteration: a distance matrix of a connected hypergraph with
//! `n >= 2` has zero diagonal and positive off-diagonal entries, hence is
//! primitive, and iteration from the uniform vector converges to the unique
//! positive eigenvector.

use std::collections::VecDeque;

use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::hypergraph::Hypergraph;
use crate::numfmt::{sig17_vec, Sig17};

pub const DEFAULT_TOL: f64 = 1e-10;
pub const DEFAULT_MAX_ITER: usize = 200_000;

/// Iterations between two slow-convergence checks.
const STALL_WINDOW: usize = 1000;
/// Residual ratio across one window above which the operator is squared.
const STALL_RATIO: f64 = 0.9999;

#[derive(Debug, Clone, Copy, PartialEq)]
pub struct PowerConfig {
    /// Bound on the infinity norm of `D x - rho x`.
    pub tol: f64,
    pub max_iter: usize,
}

impl Default for PowerConfig {
    fn default() -> Self {
        PowerConfig { tol: DEFAULT_TOL, max_iter: DEFAULT_MAX_ITER }
    }
}

impl PowerConfig {
    /// Smallest gap between two spectral radii that counts as a strict
    /// inequality; anything closer is reported as indistinguishable.
    pub fn strictness_threshold(&self) -> f64 {
        strictness_threshold(self.tol)
    }
}

pub fn strictness_threshold(tol: f64) -> f64 {
    (10.0 * tol).max(1e-8)
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct DistanceMatrix {
    n: usize,
    d: Vec<u32>,
}

impl DistanceMatrix {
    pub fn from_rows(rows: Vec<Vec<u32>>) -> Result<Self> {
        let n = rows.len();
        let mut d = Vec::with_capacity(n * n);
        for row in rows {
            if row.len() != n {
                return Err(Error::DimensionMismatch { expected: n, got: row.len() });
            }
            d.extend(row);
        }
        Ok(DistanceMatrix { n, d })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn get(&self, u: usize, v: usize) -> u32 {
        self.d[u * self.n + v]
    }

    pub fn row(&self, u: usize) -> &[u32] {
        &self.d[u * self.n..(u + 1) * self.n]
    }

    pub fn diameter(&self) -> u32 {
        self.d.iter().copied().max().unwrap_or(0)
    }

    pub fn mul(&self, x: &[f64]) -> Vec<f64> {
        (0..self.n).map(|u| self.row_dot(u, x)).collect()
    }

    fn row_dot(&self, u: usize, x: &[f64]) -> f64 {
        self.row(u).iter().zip(x).map(|(&d, &xv)| d as f64 * xv).sum()
    }

    /// One line per vertex, comma separated.
    pub fn to_csv(&self) -> String {
        let mut s = String::new();
        for u in 0..self.n {
            let row: Vec<String> = self.row(u).iter().map(u32::to_string).collect();
            s.push_str(&row.join(","));
            s.push('\n');
        }
        s
    }
}

fn bfs(g: &Hypergraph, inc: &[Vec<usize>], source: usize) -> Result<Vec<u32>> {
    let mut dist = vec![u32::MAX; g.n()];
    let mut edge_done = vec![false; g.m()];
    dist[source] = 0;
    let mut queue = VecDeque::from([source]);
    let mut reached = 1;
    while let Some(v) = queue.pop_front() {
        for &ei in &inc[v] {
            if std::mem::replace(&mut edge_done[ei], true) {
                continue;
            }
            for &w in &g.edges()[ei] {
                if dist[w] == u32::MAX {
                    dist[w] = dist[v] + 1;
                    reached += 1;
                    queue.push_back(w);
                }
            }
        }
    }
    if reached == g.n() {
        Ok(dist)
    } else {
        Err(Error::Disconnected)
    }
}

pub fn distances_from(g: &Hypergraph, u: usize) -> Result<Vec<u32>> {
    g.check_vertex(u)?;
    bfs(g, &g.incidence(), u)
}

pub fn distance_matrix(g: &Hypergraph) -> Result<DistanceMatrix> {
    let inc = g.incidence();
    let rows = (0..g.n())
        .into_par_iter()
        .map(|u| bfs(g, &inc, u))
        .collect::<Result<Vec<_>>>()?;
    DistanceMatrix::from_rows(rows)
}

pub fn diameter(g: &Hypergraph) -> Result<u32> {
    Ok(distance_matrix(g)?.diameter())
}

#[derive(Debug, Clone, PartialEq)]
pub struct SpectralResult {
    pub rho: f64,
    /// Positive, Euclidean-unit Perron vector.
    pub perron: Vec<f64>,
    /// Infinity norm of `D x - rho x`.
    pub residual: f64,
    pub iterations: usize,
}

/// JSON shape of a [`SpectralResult`]: `{rho, perron[], residual, iterations}`
/// with 17 significant digits.
#[derive(Debug, Clone, Serialize)]
pub struct SpectralJson {
    pub rho: Sig17,
    pub perron: Vec<Sig17>,
    pub residual: Sig17,
    pub iterations: usize,
}

impl From<&SpectralResult> for SpectralJson {
    fn from(r: &SpectralResult) -> Self {
        SpectralJson {
            rho: Sig17(r.rho),
            perron: sig17_vec(&r.perron),
            residual: Sig17(r.residual),
            iterations: r.iterations,
        }
    }
}

impl SpectralResult {
    pub fn to_json(&self) -> String {
        serde_json::to_string(&SpectralJson::from(self)).expect("serializable")
    }
}

fn normalize(v: &mut [f64]) {
    let norm = v.iter().map(|x| x * x).sum::<f64>().sqrt();
    v.iter_mut().for_each(|x| *x /= norm);
}

fn rayleigh_and_residual(x: &[f64], dx: &[f64]) -> (f64, f64) {
    let rho: f64 = x.iter().zip(dx).map(|(a, b)| a * b).sum();
    let residual = x
        .iter()
        .zip(dx)
        .map(|(xi, yi)| (yi - rho * xi).abs())
        .fold(0.0, f64::max);
    (rho, residual)
}

/// Power iteration on an explicit distance matrix.
///
/// Convergence is declared on the residual, never on the change in `rho`.
/// If the residual shrinks by less than a factor 0.9999 over 1000 iterations
/// the iteration switches to the squared operator `D (D x)`.
pub fn perron_pair(dm: &DistanceMatrix, cfg: PowerConfig) -> Result<SpectralResult> {
    let n = dm.n();
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    if n == 1 {
        return Ok(SpectralResult { rho: 0.0, perron: vec![1.0], residual: 0.0, iterations: 0 });
    }
    let mut x = vec![1.0 / (n as f64).sqrt(); n];
    let mut squared = false;
    let mut checkpoint = f64::INFINITY;
    let mut last_residual = f64::INFINITY;
    for it in 1..=cfg.max_iter {
        let dx = dm.mul(&x);
        let (rho, residual) = rayleigh_and_residual(&x, &dx);
        last_residual = residual;
        if residual <= cfg.tol {
            return Ok(SpectralResult { rho, perron: x, residual, iterations: it });
        }
        if it % STALL_WINDOW == 0 {
            if !squared && residual / checkpoint > STALL_RATIO {
                squared = true;
            }
            checkpoint = residual;
        }
        x = if squared { dm.mul(&dx) } else { dx };
        normalize(&mut x);
    }
    Err(Error::NoConvergence { residual: last_residual, iterations: cfg.max_iter })
}

pub fn spectral_radius(g: &Hypergraph, cfg: PowerConfig) -> Result<SpectralResult> {
    perron_pair(&distance_matrix(g)?, cfg)
}

/// Spectral radius with the default tolerance and iteration cap.
pub fn rho(g: &Hypergraph) -> Result<f64> {
    Ok(spectral_radius(g, PowerConfig::default())?.rho)
}

/// Perron pairs of many hypergraphs, computed concurrently; results keep the
/// input order.
pub fn spectral_radii(graphs: &[Hypergraph], cfg: PowerConfig) -> Vec<Result<SpectralResult>> {
    graphs.par_iter().map(|g| spectral_radius(g, cfg)).collect()
}

/// `x^T D x` for a unit vector `x`.
pub fn rayleigh(dm: &DistanceMatrix, x: &[f64]) -> Result<f64> {
    if x.len() != dm.n() {
        return Err(Error::DimensionMismatch { expected: dm.n(), got: x.len() });
    }
    let norm = x.iter().map(|v| v * v).sum::<f64>().sqrt();
    if (norm - 1.0).abs() > 1e-12 {
        return Err(Error::NotUnit(norm));
    }
    Ok(x.iter().zip(dm.mul(x)).map(|(a, b)| a * b).sum())
}

/// Sum of Perron entries over `subset`.
pub fn sigma(r: &SpectralResult, subset: &[usize]) -> Result<f64> {
    let n = r.perron.len();
    subset.iter().try_fold(0.0, |acc, &v| {
        r.perron
            .get(v)
            .map(|x| acc + x)
            .ok_or(Error::VertexOutOfRange { vertex: v, n })
    })
}

/// `|rho x_u - sum_v d(u, v) x_v|`, the eigenequation defect at `u`.
pub fn eigenequation_check(dm: &DistanceMatrix, r: &SpectralResult, u: usize) -> Result<f64> {
    if u >= dm.n() {
        return Err(Error::VertexOutOfRange { vertex: u, n: dm.n() });
    }
    if r.perron.len() != dm.n() {
        return Err(Error::DimensionMismatch { expected: dm.n(), got: r.perron.len() });
    }
    Ok((r.rho * r.perron[u] - dm.row_dot(u, &r.perron)).abs())
}
