use itertools::Itertools;
use pivd_core::graph::named::*;
use pivd_core::graph::Graph;
use pivd_core::hereditary::{classify, normalize_family, ForbiddenFamily, PropertyClass};
use pivd_core::reductions::{PiVDInstance, VCInstance};
use pivd_core::solvers::*;
use pivd_core::verify::{enumerate_graphs, random_gnm, Constraints};

fn fam(gs: Vec<Graph>) -> ForbiddenFamily {
    normalize_family(gs).unwrap()
}

/// Smallest deletion set found by trying every vertex subset, optionally
/// restricted to sets inducing a connected subgraph (the empty set counts).
/// `usize::MAX` when no such set exists.
fn subset_optimum(g: &Graph, f: &ForbiddenFamily, connected: bool) -> usize {
    let n = g.n();
    (0..1usize << n)
        .map(|mask| g.vertices().filter(|v| mask >> v & 1 == 1).collect_vec())
        .filter(|s| !connected || s.is_empty() || g.induces_connected(s))
        .filter(|s| f.find(&g.remove_vertices(s), None).is_none())
        .map(|s| s.len())
        .min()
        .unwrap_or(usize::MAX)
}

fn all_small() -> Vec<Graph> {
    enumerate_graphs(7, &Constraints::default())
}

#[test]
fn branching_and_bruteforce_match_subsets() {
    let families = [vec![p(3)], vec![k(3)], vec![two_k2()], vec![co_diamond(), co_claw()]];
    let graphs = all_small();
    for f in families.map(fam) {
        for g in graphs.iter().filter(|g| g.n() <= 6) {
            let opt = subset_optimum(g, &f, false);
            for k in 0..=4 {
                let inst = PiVDInstance::new(g.clone(), k, f.clone());
                let b = solve_branching(&inst);
                let r = solve_bruteforce(&inst);
                assert_eq!(b.answer, opt <= k);
                assert_eq!(r.answer, opt <= k);
                for res in [&b, &r] {
                    if let Some(c) = &res.certificate {
                        c.check(&inst).unwrap();
                    }
                }
            }
        }
    }
}

#[test]
fn branching_agrees_with_bruteforce_on_seven_vertices() {
    let families = [vec![p(3)], vec![k(3)], vec![two_k2()], vec![co_diamond(), co_claw()]];
    let graphs = all_small();
    for f in families.map(fam) {
        for g in graphs.iter().filter(|g| g.n() == 7) {
            for k in 0..=4 {
                let inst = PiVDInstance::new(g.clone(), k, f.clone());
                assert_eq!(solve_branching(&inst).answer, solve_bruteforce(&inst).answer);
            }
        }
    }
}

#[test]
fn connected_search_matches_connected_subsets() {
    let families = [vec![p(3)], vec![k(3)], vec![two_k2()], vec![independent(2)], vec![co_claw()]];
    for f in families.map(fam) {
        for g in all_small().iter().filter(|g| g.n() <= 6) {
            let opt = subset_optimum(g, &f, true);
            for k in 0..=g.n() {
                let mut inst = PiVDInstance::new(g.clone(), k, f.clone());
                inst.connected_variant = true;
                let res = solve_connected_bruteforce(&inst);
                assert_eq!(res.answer, opt <= k, "{g:?} k={k}");
                if let Some(c) = &res.certificate {
                    c.check(&inst).unwrap();
                    assert!(c.vertices.is_empty() || g.induces_connected(&c.vertices));
                }
            }
        }
    }
}

#[test]
fn connected_search_on_larger_random_graphs() {
    let f = fam(vec![p(3)]);
    for seed in 0..30 {
        let g = random_gnm(11, 14, seed);
        let opt = subset_optimum(&g, &f, true);
        for k in opt.saturating_sub(1)..=opt {
            let mut inst = PiVDInstance::new(g.clone(), k, f.clone());
            inst.connected_variant = true;
            assert_eq!(solve_connected_bruteforce(&inst).answer, opt <= k);
        }
    }
}

#[test]
fn subexp_and_mindegree_match_subsets() {
    for f in [vec![independent(2)], vec![independent(3)]].map(fam) {
        let PropertyClass::ExcludesIndependentSet { d_is } = classify(&f) else {
            panic!("edgeless member expected");
        };
        let premise = mindegree_premise_holds(&f, 1, 7);
        for g in all_small().iter().filter(|g| g.n() <= 6) {
            let opt = subset_optimum(g, &f, false);
            for k in 0..=4 {
                let inst = PiVDInstance::new(g.clone(), k, f.clone());
                for t in [Threshold::Default, Threshold::Sqrt2mOverD] {
                    let r = solve_subexp(&inst, t).unwrap();
                    assert_eq!(r.answer, opt <= k);
                    if let Some(c) = &r.certificate {
                        c.check(&inst).unwrap();
                    }
                }
                if premise {
                    assert_eq!(solve_mindegree(&inst, 1).answer, opt <= k);
                }
            }
        }
        assert!(d_is >= 2);
    }
}

#[test]
fn subexp_stays_within_its_bound_on_random_graphs() {
    let f = fam(vec![independent(2)]);
    for seed in 0..40 {
        let n = 6 + seed as usize % 9;
        let g = random_gnm(n, n * (n - 1) / 4, seed);
        let inst = PiVDInstance::new(g.clone(), n / 2, f.clone());
        let r = solve_subexp(&inst, Threshold::Default).unwrap();
        assert!((r.branch_count as f64).log2() <= subexp_log2_bound(g.n(), g.m(), 2) + 1e-9);
        assert_eq!(r.answer, solve_branching(&inst).answer);
    }
    let edgeless = PiVDInstance::new(independent(5), 3, f);
    assert!(solve_subexp(&edgeless, Threshold::Default).unwrap().branch_count <= 6);
}

#[test]
fn answers_are_monotone_in_the_budget() {
    let f = fam(vec![p(3)]);
    for seed in 0..20 {
        let g = random_gnm(9, 12, seed);
        let answers = (0..=6).map(|k| solve_branching(&PiVDInstance::new(g.clone(), k, f.clone())).answer).collect_vec();
        assert!(answers.windows(2).all(|w| !w[0] || w[1]));
    }
}

#[test]
fn vertex_cover_matches_subsets() {
    for g in all_small() {
        let best = (0..1usize << g.n())
            .map(|mask| g.vertices().filter(|v| mask >> v & 1 == 1).collect_vec())
            .filter(|s| is_vertex_cover(&g, s))
            .map(|s| s.len())
            .min()
            .unwrap();
        assert_eq!(min_vertex_cover(&g).len(), best);
        for k in 0..=g.n() {
            assert_eq!(solve_vertex_cover(&VCInstance::new(g.clone(), k)).answer, best <= k);
        }
    }
}

#[test]
fn cycle_examples() {
    let f = fam(vec![independent(2)]);
    let yes = solve_subexp(&PiVDInstance::new(c(5), 3, f.clone()), Threshold::Default).unwrap();
    assert!(yes.answer && yes.certificate.unwrap().vertices.len() == 3);
    assert!(!solve_subexp(&PiVDInstance::new(c(5), 2, f), Threshold::Default).unwrap().answer);
}
