//! Finite hypergraphs on dense vertex indices.
//!
//! Vertices are `0..n`. Every edge is stored as a strictly increasing list of
//! vertex indices; the edge list itself keeps the order it was given in.
//! Values are immutable once built: every operation returns a new hypergraph.

use std::collections::{HashMap, HashSet, VecDeque};

use crate::error::{Error, Result};

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Hypergraph {
    n: usize,
    edges: Vec<Vec<usize>>,
    k: Option<usize>,
}

/// Vertex partition into connected components, ordered by smallest vertex.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ComponentPartition {
    pub blocks: Vec<Vec<usize>>,
}

impl ComponentPartition {
    pub fn len(&self) -> usize {
        self.blocks.len()
    }

    pub fn is_empty(&self) -> bool {
        self.blocks.is_empty()
    }

    /// Index of the block holding each vertex.
    pub fn block_of(&self, n: usize) -> Vec<usize> {
        let mut owner = vec![usize::MAX; n];
        for (i, block) in self.blocks.iter().enumerate() {
            for &v in block {
                owner[v] = i;
            }
        }
        owner
    }
}

fn validate(n: usize, edges: Vec<Vec<usize>>) -> Result<Vec<Vec<usize>>> {
    if n == 0 {
        return Err(Error::EmptyVertexSet);
    }
    let mut seen: HashMap<Vec<usize>, usize> = HashMap::with_capacity(edges.len());
    let mut out = Vec::with_capacity(edges.len());
    for (i, mut e) in edges.into_iter().enumerate() {
        if e.is_empty() {
            return Err(Error::EmptyEdge(i));
        }
        e.sort_unstable();
        for w in e.windows(2) {
            if w[0] == w[1] {
                return Err(Error::RepeatedVertex { edge: i, vertex: w[0] });
            }
        }
        if let Some(&last) = e.last() {
            if last >= n {
                return Err(Error::EdgeOutOfRange { edge: i, vertex: last, n });
            }
        }
        if let Some(&first) = seen.get(&e) {
            return Err(Error::DuplicateEdge { first, second: i });
        }
        seen.insert(e.clone(), i);
        out.push(e);
    }
    Ok(out)
}

impl Hypergraph {
    /// Validates and builds a hypergraph. The uniformity witness `k` is set
    /// iff there is at least one edge and all edges have the same size.
    pub fn build(n: usize, edges: Vec<Vec<usize>>) -> Result<Self> {
        let edges = validate(n, edges)?;
        let k = match edges.first() {
            Some(first) if edges.iter().all(|e| e.len() == first.len()) => Some(first.len()),
            _ => None,
        };
        Ok(Hypergraph { n, edges, k })
    }

    /// Builds a `k`-uniform hypergraph. Unlike [`Hypergraph::build`] this keeps
    /// `k` even when there are no edges (e.g. the single-vertex hypertree).
    pub fn uniform(n: usize, edges: Vec<Vec<usize>>, k: usize) -> Result<Self> {
        if k < 2 {
            return Err(Error::BadEdgeSize(k));
        }
        let edges = validate(n, edges)?;
        if let Some((i, e)) = edges.iter().enumerate().find(|(_, e)| e.len() != k) {
            return Err(Error::WrongEdgeSize { edge: i, len: e.len(), k });
        }
        Ok(Hypergraph { n, edges, k: Some(k) })
    }

    /// Same as `uniform` but keeps a previously known `k` when the edge list
    /// may have become empty.
    fn rebuild(n: usize, edges: Vec<Vec<usize>>, k: Option<usize>) -> Result<Self> {
        match k {
            Some(k) if edges.iter().all(|e| e.len() == k) => Self::uniform(n, edges, k),
            _ => Self::build(n, edges),
        }
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn k(&self) -> Option<usize> {
        self.k
    }

    pub fn edges(&self) -> &[Vec<usize>] {
        &self.edges
    }

    pub fn edge(&self, index: usize) -> Result<&[usize]> {
        self.edges
            .get(index)
            .map(Vec::as_slice)
            .ok_or(Error::EdgeIndexOutOfRange { index, m: self.m() })
    }

    pub fn uniformity(&self) -> Result<usize> {
        self.k.ok_or(Error::NotUniform)
    }

    pub(crate) fn check_vertex(&self, v: usize) -> Result<()> {
        if v < self.n {
            Ok(())
        } else {
            Err(Error::VertexOutOfRange { vertex: v, n: self.n })
        }
    }

    pub fn degree(&self, v: usize) -> Result<usize> {
        self.check_vertex(v)?;
        Ok(self.edges.iter().filter(|e| e.binary_search(&v).is_ok()).count())
    }

    pub fn degrees(&self) -> Vec<usize> {
        let mut d = vec![0; self.n];
        for e in &self.edges {
            for &v in e {
                d[v] += 1;
            }
        }
        d
    }

    pub fn max_degree(&self) -> usize {
        self.degrees().into_iter().max().unwrap_or(0)
    }

    /// For each vertex, the indices of the edges containing it.
    pub fn incidence(&self) -> Vec<Vec<usize>> {
        let mut inc = vec![Vec::new(); self.n];
        for (i, e) in self.edges.iter().enumerate() {
            for &v in e {
                inc[v].push(i);
            }
        }
        inc
    }

    /// Order-insensitive comparison of the edge sets.
    pub fn same_edge_set(&self, other: &Hypergraph) -> bool {
        if self.n != other.n || self.m() != other.m() {
            return false;
        }
        let mine: HashSet<&Vec<usize>> = self.edges.iter().collect();
        other.edges.iter().all(|e| mine.contains(e))
    }

    pub fn components(&self) -> ComponentPartition {
        let inc = self.incidence();
        let mut seen = vec![false; self.n];
        let mut used_edge = vec![false; self.m()];
        let mut blocks = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            seen[start] = true;
            let mut block = vec![start];
            let mut queue = VecDeque::from([start]);
            while let Some(v) = queue.pop_front() {
                for &ei in &inc[v] {
                    if std::mem::replace(&mut used_edge[ei], true) {
                        continue;
                    }
                    for &w in &self.edges[ei] {
                        if !seen[w] {
                            seen[w] = true;
                            block.push(w);
                            queue.push_back(w);
                        }
                    }
                }
            }
            block.sort_unstable();
            blocks.push(block);
        }
        ComponentPartition { blocks }
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() == 1
    }

    /// Connected and of order `1 + (k - 1) m`.
    pub fn is_hypertree(&self) -> Result<bool> {
        let k = self.uniformity()?;
        Ok(self.is_connected() && self.n == 1 + (k - 1) * self.m())
    }

    /// Hypertree test through an explicit search for a cycle in the walk sense:
    /// at least two distinct edges and distinct vertices except for the closing
    /// vertex. Exponential in the worst case; meant for small inputs.
    pub fn is_hypertree_by_search(&self) -> Result<bool> {
        self.uniformity()?;
        Ok(self.is_connected() && !self.has_cycle())
    }

    pub fn has_cycle(&self) -> bool {
        let inc = self.incidence();
        let mut on_path = vec![false; self.n];
        let mut edge_used = vec![false; self.m()];
        (0..self.n).any(|start| {
            on_path[start] = true;
            let found = self.extend_walk(start, start, 0, &inc, &mut on_path, &mut edge_used);
            on_path[start] = false;
            found
        })
    }

    fn extend_walk(
        &self,
        start: usize,
        cur: usize,
        len: usize,
        inc: &[Vec<usize>],
        on_path: &mut [bool],
        edge_used: &mut [bool],
    ) -> bool {
        for &ei in &inc[cur] {
            if edge_used[ei] {
                continue;
            }
            edge_used[ei] = true;
            for &w in &self.edges[ei] {
                if w == cur {
                    continue;
                }
                if w == start && len + 1 >= 2 {
                    edge_used[ei] = false;
                    return true;
                }
                if !on_path[w] {
                    on_path[w] = true;
                    let found = self.extend_walk(start, w, len + 1, inc, on_path, edge_used);
                    on_path[w] = false;
                    if found {
                        edge_used[ei] = false;
                        return true;
                    }
                }
            }
            edge_used[ei] = false;
        }
        false
    }

    /// Strong deletion: drops `u` and every edge containing it. Remaining
    /// vertices keep their relative order.
    pub fn delete_vertex(&self, u: usize) -> Result<Hypergraph> {
        self.check_vertex(u)?;
        let relabel = |v: usize| if v > u { v - 1 } else { v };
        let edges = self
            .edges
            .iter()
            .filter(|e| e.binary_search(&u).is_err())
            .map(|e| e.iter().map(|&v| relabel(v)).collect())
            .collect();
        Self::rebuild(self.n - 1, edges, self.k)
    }

    pub fn delete_edge(&self, index: usize) -> Result<Hypergraph> {
        self.edge(index)?;
        let mut edges = self.edges.clone();
        edges.remove(index);
        Ok(Hypergraph { n: self.n, edges, k: self.k })
    }

    /// Sub-hypergraph on `subset` with edges `e ∩ subset`, keeping every
    /// nonempty intersection (singletons included) and merging duplicates.
    /// Vertices are relabeled in increasing order of their old index.
    pub fn induced(&self, subset: &[usize]) -> Result<Hypergraph> {
        let mut xs = subset.to_vec();
        xs.sort_unstable();
        xs.dedup();
        if xs.is_empty() {
            return Err(Error::EmptySubset);
        }
        for &v in &xs {
            self.check_vertex(v)?;
        }
        let mut new_index = vec![usize::MAX; self.n];
        for (i, &v) in xs.iter().enumerate() {
            new_index[v] = i;
        }
        let mut seen = HashSet::new();
        let mut edges = Vec::new();
        for e in &self.edges {
            let cut: Vec<usize> = e
                .iter()
                .filter(|&&v| new_index[v] != usize::MAX)
                .map(|&v| new_index[v])
                .collect();
            if !cut.is_empty() && seen.insert(cut.clone()) {
                edges.push(cut);
            }
        }
        Self::rebuild(xs.len(), edges, self.k)
    }

    /// Relabels vertex `v` as `perm[v]`.
    pub fn permute(&self, perm: &[usize]) -> Result<Hypergraph> {
        if perm.len() != self.n {
            return Err(Error::DimensionMismatch { expected: self.n, got: perm.len() });
        }
        let mut hit = vec![false; self.n];
        for &p in perm {
            if p >= self.n || std::mem::replace(&mut hit[p], true) {
                return Err(Error::PreconditionViolated("not a permutation".into()));
            }
        }
        let edges = self
            .edges
            .iter()
            .map(|e| e.iter().map(|&v| perm[v]).collect())
            .collect();
        Self::rebuild(self.n, edges, self.k)
    }

    /// Identifies vertex `at` of `self` with vertex `root` of the vertex-disjoint
    /// hypergraph `other`. Vertices of `other` other than `root` receive fresh
    /// labels `n, n+1, ...` in their original order. Returns the glued
    /// hypergraph and where each vertex of `other` ended up.
    pub fn glue(&self, at: usize, other: &Hypergraph, root: usize) -> Result<(Hypergraph, Vec<usize>)> {
        self.check_vertex(at)?;
        other.check_vertex(root)?;
        let mut map = vec![0; other.n];
        let mut next = self.n;
        for (v, slot) in map.iter_mut().enumerate() {
            if v == root {
                *slot = at;
            } else {
                *slot = next;
                next += 1;
            }
        }
        let mut edges = self.edges.clone();
        edges.extend(other.edges.iter().map(|e| e.iter().map(|&v| map[v]).collect()));
        let k = match (self.k, other.k) {
            (Some(a), Some(b)) if a == b => Some(a),
            (Some(a), None) if other.m() == 0 => Some(a),
            (None, Some(b)) if self.m() == 0 => Some(b),
            _ => None,
        };
        Ok((Self::rebuild(next, edges, k)?, map))
    }

    /// Replaces the edge list; used by rewrites that keep the vertex set.
    pub(crate) fn with_edges(&self, edges: Vec<Vec<usize>>) -> Result<Hypergraph> {
        Self::rebuild(self.n, edges, self.k)
    }
}
