//! Independent oracles for the integration tests. Nothing here calls the
//! library's distance, spectral or canonical-form code.

#![allow(dead_code)]

use std::collections::BTreeSet;

use hyperspec::Hypergraph;
use nalgebra::{DMatrix, SymmetricEigen};

/// All-pairs hop distances by Floyd-Warshall over the 2-section.
pub fn floyd_distances(g: &Hypergraph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for (v, row) in d.iter_mut().enumerate() {
        row[v] = 0;
    }
    for e in g.edges() {
        for &a in e {
            for &b in e {
                if a != b {
                    d[a][b] = 1;
                }
            }
        }
    }
    for w in 0..n {
        for u in 0..n {
            for v in 0..n {
                let via = d[u][w] + d[w][v];
                if via < d[u][v] {
                    d[u][v] = via;
                }
            }
        }
    }
    d
}

/// Largest eigenvalue of the distance matrix from a dense symmetric solver.
pub fn dense_rho(g: &Hypergraph) -> f64 {
    let d = floyd_distances(g);
    let n = g.n();
    let m = DMatrix::from_fn(n, n, |i, j| f64::from(d[i][j]));
    SymmetricEigen::new(m).eigenvalues.iter().copied().fold(f64::NEG_INFINITY, f64::max)
}

pub fn permutations(n: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut p: Vec<usize> = (0..n).collect();
    heap(n, &mut p, &mut out);
    out
}

fn heap(k: usize, p: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
    if k <= 1 {
        out.push(p.clone());
        return;
    }
    for i in 0..k - 1 {
        heap(k - 1, p, out);
        if k % 2 == 0 {
            p.swap(i, k - 1);
        } else {
            p.swap(0, k - 1);
        }
    }
    heap(k - 1, p, out);
}

fn relabel(edges: &[Vec<usize>], perm: &[usize]) -> Vec<Vec<usize>> {
    let mut out: Vec<Vec<usize>> = edges
        .iter()
        .map(|e| {
            let mut f: Vec<usize> = e.iter().map(|&v| perm[v]).collect();
            f.sort_unstable();
            f
        })
        .collect();
    out.sort();
    out
}

/// Lexicographically least relabeled edge list over every permutation.
pub fn brute_code(g: &Hypergraph, perms: &[Vec<usize>]) -> Vec<Vec<usize>> {
    perms.iter().map(|p| relabel(g.edges(), p)).min().expect("at least one permutation")
}

pub fn brute_isomorphic(g: &Hypergraph, h: &Hypergraph) -> bool {
    if g.n() != h.n() || g.m() != h.m() {
        return false;
    }
    let target = relabel(h.edges(), &(0..h.n()).collect::<Vec<_>>());
    permutations(g.n()).iter().any(|p| relabel(g.edges(), p) == target)
}

/// Vertex orbits of the full automorphism group by exhaustive search.
pub fn brute_orbits(g: &Hypergraph) -> BTreeSet<BTreeSet<usize>> {
    let n = g.n();
    let own = relabel(g.edges(), &(0..n).collect::<Vec<_>>());
    let autos: Vec<Vec<usize>> = permutations(n).into_iter().filter(|p| relabel(g.edges(), p) == own).collect();
    (0..n).map(|v| autos.iter().map(|p| p[v]).collect()).collect()
}

fn connected(n: usize, edges: &[Vec<usize>]) -> bool {
    let mut parent: Vec<usize> = (0..n).collect();
    fn find(p: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while p[r] != r {
            r = p[r];
        }
        p[x] = r;
        r
    }
    for e in edges {
        for w in e.windows(2) {
            let (a, b) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
            parent[a] = b;
        }
    }
    let root = find(&mut parent, 0);
    (0..n).all(|v| find(&mut parent, v) == root)
}

fn combinations(pool: usize, r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn go(start: usize, pool: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..pool {
            cur.push(i);
            go(i + 1, pool, r, cur, out);
            cur.pop();
        }
    }
    go(0, pool, r, &mut cur, &mut out);
    out
}

/// Isomorphism classes of `k`-uniform hypertrees with `m` edges: every choice
/// of `m` distinct `k`-subsets of `n = 1 + (k-1)m` vertices, kept if connected
/// (connected with `n - 1 = m(k-1)` means Berge-acyclic), deduplicated by
/// exhaustive permutation.
pub fn brute_hypertree_codes(k: usize, m: usize) -> BTreeSet<Vec<Vec<usize>>> {
    let n = 1 + (k - 1) * m;
    let perms = permutations(n);
    let ksets = combinations(n, k);
    let mut codes = BTreeSet::new();
    for choice in combinations(ksets.len(), m) {
        let edges: Vec<Vec<usize>> = choice.iter().map(|&i| ksets[i].clone()).collect();
        if !connected(n, &edges) {
            continue;
        }
        let g = Hypergraph::uniform(n, edges, k).expect("valid");
        codes.insert(brute_code(&g, &perms));
    }
    codes
}

/// Relabels `g` by a permutation drawn from `seed`.
pub fn shuffled(g: &Hypergraph, seed: u64) -> Hypergraph {
    use rand::seq::SliceRandom;
    use rand::SeedableRng;
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut perm: Vec<usize> = (0..g.n()).collect();
    perm.shuffle(&mut rng);
    g.permute(&perm).expect("permutation")
}
