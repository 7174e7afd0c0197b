mod common;

use std::collections::BTreeSet;

use hyperspec::canon::{are_isomorphic, automorphism_orbits, canonical_form, generate_hypertrees};
use hyperspec::extremal::{quintic_largest_root, QuinticSpec};
use hyperspec::families::{broom, double_broom, f_graph, hyperstar, loose_path};
use hyperspec::grafts::move_edges;
use hyperspec::spectral::{distance_matrix, rho};
use hyperspec::Hypergraph;

#[test]
fn distances_match_floyd_warshall() {
    for k in 2..=4 {
        for m in 1..=4 {
            for g in generate_hypertrees(k, m) {
                let dm = distance_matrix(&g).unwrap();
                let fw = common::floyd_distances(&g);
                for (u, row) in fw.iter().enumerate() {
                    assert_eq!(dm.row(u), row.as_slice());
                }
            }
        }
    }
}

#[test]
fn closed_form_rhos() {
    let p3 = loose_path(3, 2).unwrap();
    assert!((rho(&p3).unwrap() - common::dense_rho(&p3)).abs() < 1e-9);
    // Largest root of x^3 - 6x - 4.
    let r = 1.0 + 3f64.sqrt();
    assert!((r * r * r - 6.0 * r - 4.0).abs() < 1e-12);
    let p5 = loose_path(5, 3).unwrap();
    assert!((common::dense_rho(&p5) - (5.0 + 41f64.sqrt()) / 2.0).abs() < 1e-9);
}

#[test]
fn canonical_form_agrees_with_permutation_search() {
    let mut graphs = Vec::new();
    for (k, m) in [(2, 4), (2, 5), (3, 2), (3, 3), (4, 2)] {
        graphs.extend(generate_hypertrees(k, m));
    }
    graphs.push(Hypergraph::build(5, vec![vec![0, 1], vec![1, 2], vec![2, 3], vec![3, 4], vec![4, 0]]).unwrap());
    graphs.push(Hypergraph::build(6, vec![vec![0, 1, 2], vec![2, 3, 4], vec![4, 5, 0]]).unwrap());
    for (i, g) in graphs.iter().enumerate() {
        for (j, h) in graphs.iter().enumerate() {
            let relabeled = common::shuffled(h, (i * 31 + j) as u64);
            if g.n() <= 8 && g.n() == h.n() {
                assert_eq!(are_isomorphic(g, &relabeled), common::brute_isomorphic(g, &relabeled), "{g:?} {h:?}");
            }
        }
    }
}

#[test]
fn named_isomorphisms() {
    for (n, k) in [(7, 3), (9, 3), (5, 2), (10, 4)] {
        assert!(are_isomorphic(&broom(n, k, 2).unwrap(), &loose_path(n, k).unwrap()));
    }
    assert!(common::brute_isomorphic(&double_broom(7, 3, 1).unwrap(), &loose_path(7, 3).unwrap()));
    assert!(!are_isomorphic(&loose_path(9, 3).unwrap(), &f_graph(9, 3).unwrap()));
}

#[test]
fn orbits_agree_with_permutation_search() {
    let mut graphs = vec![hyperstar(7, 3).unwrap(), loose_path(7, 2).unwrap(), double_broom(7, 2, 1).unwrap(), f_graph(8, 2).unwrap()];
    for (k, m) in [(2, 5), (2, 6), (3, 3)] {
        graphs.extend(generate_hypertrees(k, m));
    }
    for g in &graphs {
        let ours: BTreeSet<BTreeSet<usize>> =
            automorphism_orbits(g).orbits.iter().map(|o| o.iter().copied().collect()).collect();
        assert_eq!(ours, common::brute_orbits(g), "{g:?}");
    }
}

#[test]
fn moving_an_edge_of_the_star() {
    let s = hyperstar(7, 3).unwrap();
    let g = move_edges(&s, &[2], 0, 1).unwrap();
    assert!(common::brute_isomorphic(&g, &loose_path(7, 3).unwrap()));
}

#[test]
fn quintic_root_matches_dense_eigensolver() {
    let tree = double_broom(6, 2, 1).unwrap();
    let root = quintic_largest_root(&QuinticSpec::new(6, 2, 1).unwrap()).unwrap();
    assert!((root - common::dense_rho(&tree)).abs() < 1e-9);
    // Instances with a = b.
    for (n, k, a) in [(10, 2, 4), (11, 3, 2)] {
        let g = double_broom(n, k, a).unwrap();
        let spec = QuinticSpec::new(n, k, a).unwrap();
        assert_eq!(spec.a, spec.b);
        assert!((quintic_largest_root(&spec).unwrap() - common::dense_rho(&g)).abs() < 1e-6);
    }
}

#[test]
fn canonical_forms_are_distinct_across_classes() {
    for (k, m) in [(2, 7), (3, 4), (4, 3)] {
        let classes = generate_hypertrees(k, m);
        let forms: BTreeSet<_> = classes.iter().map(canonical_form).collect();
        assert_eq!(forms.len(), classes.len());
    }
}
