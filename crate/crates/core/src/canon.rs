//! Canonical forms, isomorphism, automorphism orbits and isomorph-free
//! generation of uniform hypertrees.
//!
//! The canonical form is the smallest relabeled edge list over all leaves of
//! an individualization-refinement search tree. Vertex colors are refined
//! until stable using, for each vertex, the multiset of color multisets of
//! its edges; the first non-singleton cell is then split by individualizing
//! each of its vertices in turn. Two kinds of exact pruning apply:
//!
//! * twins (vertices with identical edge sets) give the same subtree, so only
//!   one twin per cell is individualized;
//! * automorphisms found from equal leaves that fix the current prefix
//!   pointwise map subtrees onto each other, so one vertex per orbit of the
//!   group they generate is enough.
//!
//! Neither step changes the minimum, so the form is exact.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap};
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::families::{attach_pendant_path, loose_path};
use crate::hypergraph::Hypergraph;

/// Permutation-invariant key of an isomorphism class.
///
/// `colors` is empty for plain hypergraphs; for vertex-colored inputs it
/// holds the color of each canonical label.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub struct CanonicalForm {
    pub n: usize,
    pub edges: Vec<Vec<usize>>,
    #[serde(default, skip_serializing_if = "Vec::is_empty")]
    pub colors: Vec<usize>,
}

impl CanonicalForm {
    /// The canonically labeled representative.
    pub fn to_hypergraph(&self) -> Hypergraph {
        Hypergraph::build(self.n, self.edges.clone()).expect("canonical code is a valid hypergraph")
    }
}

impl fmt::Display for CanonicalForm {
    /// `n:` followed by `|`-separated edges with `-`-joined vertices,
    /// e.g. `5:0-1-2|0-3-4`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let edges: Vec<String> = self
            .edges
            .iter()
            .map(|e| e.iter().map(usize::to_string).collect::<Vec<_>>().join("-"))
            .collect();
        write!(f, "{}:{}", self.n, edges.join("|"))
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct OrbitPartition {
    /// Orbits sorted internally and by smallest vertex.
    pub orbits: Vec<Vec<usize>>,
}

impl OrbitPartition {
    pub fn len(&self) -> usize {
        self.orbits.len()
    }

    pub fn is_empty(&self) -> bool {
        self.orbits.is_empty()
    }
}

/// Re-ranks `keys` into dense colors `0..c`, keeping the key order.
fn rank<K: Ord + Clone>(keys: &[K]) -> Vec<usize> {
    let mut sorted: Vec<K> = keys.to_vec();
    sorted.sort();
    sorted.dedup();
    keys.iter()
        .map(|k| sorted.binary_search(k).expect("key present"))
        .collect()
}

fn count_colors(colors: &[usize]) -> usize {
    colors.iter().max().map_or(0, |&c| c + 1)
}

/// Edges, colors by label, labeling, and the individualization path.
type Leaf = (Vec<Vec<usize>>, Vec<usize>, Vec<usize>, Vec<usize>);

struct Search<'a> {
    g: &'a Hypergraph,
    inc: Vec<Vec<usize>>,
    /// Representative of each vertex's twin class (identical edge sets).
    twin: Vec<usize>,
    initial: &'a [usize],
    colored: bool,
    best: Option<Leaf>,
    automorphisms: Vec<Vec<usize>>,
    /// Depth to unwind to after a leaf equivalent to the best one.
    jump: Option<usize>,
}

impl<'a> Search<'a> {
    fn new(g: &'a Hypergraph, initial: &'a [usize], colored: bool) -> Self {
        let inc = g.incidence();
        let mut first: HashMap<&[usize], usize> = HashMap::new();
        let twin = (0..g.n())
            .map(|v| *first.entry(inc[v].as_slice()).or_insert(v))
            .collect();
        Search { g, inc, twin, initial, colored, best: None, automorphisms: Vec::new(), jump: None }
    }

    /// Refines to the coarsest stable coloring finer than `colors`.
    fn refine(&self, colors: &mut Vec<usize>) {
        let mut cells = count_colors(colors);
        loop {
            let sigs: Vec<(usize, Vec<Vec<usize>>)> = (0..self.g.n())
                .map(|v| {
                    let mut per_edge: Vec<Vec<usize>> = self.inc[v]
                        .iter()
                        .map(|&ei| {
                            let mut c: Vec<usize> = self.g.edges()[ei].iter().map(|&w| colors[w]).collect();
                            c.sort_unstable();
                            c
                        })
                        .collect();
                    per_edge.sort();
                    (colors[v], per_edge)
                })
                .collect();
            *colors = rank(&sigs);
            let next = count_colors(colors);
            if next == cells {
                return;
            }
            cells = next;
        }
    }

    fn individualize(colors: &[usize], v: usize) -> Vec<usize> {
        let keys: Vec<(usize, bool)> = colors.iter().enumerate().map(|(u, &c)| (c, u != v)).collect();
        rank(&keys)
    }

    fn leaf(&mut self, labeling: Vec<usize>, path: &[usize]) {
        let mut code: Vec<Vec<usize>> = self
            .g
            .edges()
            .iter()
            .map(|e| {
                let mut r: Vec<usize> = e.iter().map(|&v| labeling[v]).collect();
                r.sort_unstable();
                r
            })
            .collect();
        code.sort();
        let mut by_label = vec![0; self.g.n()];
        if self.colored {
            for (v, &l) in labeling.iter().enumerate() {
                by_label[l] = self.initial[v];
            }
        }
        let ord = match &self.best {
            None => Ordering::Less,
            Some((bc, bl, _, _)) => (&code, &by_label).cmp(&(bc, bl)),
        };
        match ord {
            Ordering::Less => self.best = Some((code, by_label, labeling, path.to_vec())),
            Ordering::Equal => {
                let (_, _, best_lab, best_path) = self.best.as_ref().expect("set");
                // The automorphism maps this path onto the best one, so the
                // subtree below their divergence point holds nothing new.
                self.jump = path.iter().zip(best_path).position(|(a, b)| a != b);
                let mut inverse = vec![0; best_lab.len()];
                for (v, &l) in best_lab.iter().enumerate() {
                    inverse[l] = v;
                }
                let gamma: Vec<usize> = labeling.iter().map(|&l| inverse[l]).collect();
                if gamma.iter().enumerate().any(|(v, &w)| v != w) {
                    self.automorphisms.push(gamma);
                }
            }
            Ordering::Greater => {}
        }
    }

    /// Orbits of the group generated by stored automorphisms fixing `prefix`.
    fn prefix_orbits(&self, prefix: &[usize]) -> Vec<usize> {
        let n = self.g.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(p: &mut [usize], mut x: usize) -> usize {
            while p[x] != x {
                p[x] = p[p[x]];
                x = p[x];
            }
            x
        }
        for gamma in &self.automorphisms {
            if prefix.iter().all(|&p| gamma[p] == p) {
                for v in 0..n {
                    let (a, b) = (find(&mut parent, v), find(&mut parent, gamma[v]));
                    if a != b {
                        parent[a.max(b)] = a.min(b);
                    }
                }
            }
        }
        (0..n).map(|v| find(&mut parent, v)).collect()
    }

    fn run(&mut self, mut colors: Vec<usize>, prefix: &mut Vec<usize>) {
        self.refine(&mut colors);
        let n = self.g.n();
        if count_colors(&colors) == n {
            self.leaf(colors, prefix);
            return;
        }
        let mut size = vec![0usize; n];
        for &c in &colors {
            size[c] += 1;
        }
        let target = (0..n).find(|&c| size[c] > 1).expect("non-discrete partition");
        let cell: Vec<usize> = (0..n).filter(|&v| colors[v] == target).collect();
        let mut tried: Vec<usize> = Vec::new();
        for &c in &cell {
            if tried.iter().any(|&t| self.twin[t] == self.twin[c]) {
                continue;
            }
            if !tried.is_empty() && !self.automorphisms.is_empty() {
                let orbit = self.prefix_orbits(prefix);
                if tried.iter().any(|&t| orbit[t] == orbit[c]) {
                    continue;
                }
            }
            prefix.push(c);
            self.run(Self::individualize(&colors, c), prefix);
            prefix.pop();
            tried.push(c);
            if let Some(depth) = self.jump {
                if depth < prefix.len() {
                    return;
                }
                self.jump = None;
            }
        }
    }
}

fn search(g: &Hypergraph, initial: &[usize], colored: bool) -> (CanonicalForm, Vec<usize>) {
    let mut s = Search::new(g, initial, colored);
    s.run(rank(initial), &mut Vec::new());
    let (edges, colors, labeling, _) = s.best.expect("search reaches a leaf");
    let colors = if colored { colors } else { Vec::new() };
    (CanonicalForm { n: g.n(), edges, colors }, labeling)
}

pub fn canonical_form(g: &Hypergraph) -> CanonicalForm {
    canonical_labeling(g).0
}

/// Canonical form plus the labeling that realizes it (`labeling[v]` is the
/// canonical label of `v`).
pub fn canonical_labeling(g: &Hypergraph) -> (CanonicalForm, Vec<usize>) {
    search(g, &vec![0; g.n()], false)
}

/// Canonical form of a vertex-colored hypergraph; isomorphisms must preserve
/// colors.
pub fn canonical_form_colored(g: &Hypergraph, colors: &[usize]) -> CanonicalForm {
    assert_eq!(colors.len(), g.n(), "one color per vertex");
    search(g, colors, true).0
}

fn sorted_profile(g: &Hypergraph) -> (usize, usize, Vec<usize>, Vec<usize>) {
    let mut deg = g.degrees();
    deg.sort_unstable();
    let mut sizes: Vec<usize> = g.edges().iter().map(Vec::len).collect();
    sizes.sort_unstable();
    (g.n(), g.m(), deg, sizes)
}

pub fn are_isomorphic(g: &Hypergraph, h: &Hypergraph) -> bool {
    sorted_profile(g) == sorted_profile(h) && canonical_form(g) == canonical_form(h)
}

/// Vertex orbits of the full automorphism group: `u` and `v` share an orbit
/// iff marking `u` and marking `v` give the same colored canonical form.
pub fn automorphism_orbits(g: &Hypergraph) -> OrbitPartition {
    let n = g.n();
    let s = Search::new(g, &[], false);
    let mut colors = vec![0; n];
    s.refine(&mut colors);
    let mut orbit_of: Vec<Option<usize>> = vec![None; n];
    let mut orbits: Vec<Vec<usize>> = Vec::new();
    let mut by_form: HashMap<(usize, CanonicalForm), usize> = HashMap::new();
    for v in 0..n {
        if orbit_of[v].is_some() {
            continue;
        }
        let rep = s.twin[v];
        if let Some(o) = orbit_of[rep] {
            orbit_of[v] = Some(o);
            orbits[o].push(v);
            continue;
        }
        let mut marked = vec![0; n];
        marked[v] = 1;
        let key = (colors[v], canonical_form_colored(g, &marked));
        let o = *by_form.entry(key).or_insert_with(|| {
            orbits.push(Vec::new());
            orbits.len() - 1
        });
        orbit_of[v] = Some(o);
        orbits[o].push(v);
    }
    OrbitPartition { orbits }
}

/// Isomorphism classes of `k`-uniform hypertrees with `m` edges, each
/// represented by its canonically labeled copy and sorted by canonical form.
///
/// Level `j + 1` is obtained by attaching a pendant edge at every vertex of
/// every class of level `j` and keeping one hypertree per canonical form.
/// Every hypertree with at least one edge has a pendant edge, so nothing is
/// missed.
pub fn generate_hypertrees(k: usize, m: usize) -> Vec<Hypergraph> {
    generate_with_forms(k, m).into_iter().map(|(_, g)| g).collect()
}

/// Same as [`generate_hypertrees`] but keeps the canonical forms.
pub fn generate_with_forms(k: usize, m: usize) -> Vec<(CanonicalForm, Hypergraph)> {
    assert!(k >= 2, "edge size must be at least 2");
    let single = loose_path(1, k).expect("single vertex");
    let mut level = vec![(canonical_form(&single), single)];
    for _ in 0..m {
        let children: Vec<(CanonicalForm, Hypergraph)> = level
            .par_iter()
            .flat_map_iter(|(_, g)| (0..g.n()).map(move |v| attach_pendant_path(g, v, 1).expect("uniform")))
            .map(|h| {
                let form = canonical_form(&h);
                let rep = Hypergraph::uniform(form.n, form.edges.clone(), k).expect("canonical copy");
                (form, rep)
            })
            .collect();
        let unique: BTreeMap<CanonicalForm, Hypergraph> = children.into_iter().collect();
        level = unique.into_iter().collect();
    }
    level
}
