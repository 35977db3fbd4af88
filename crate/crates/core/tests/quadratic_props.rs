use std::collections::BTreeSet;
use std::sync::OnceLock;

use iet::coding::{factors, first_return_cells, interval_j, FactorSet};
use iet::quadratic::complexity::{
    backward_cover, boundary_orbit, forward_cover, integral_rescaling, pi_lower_bound, return_time,
    scaled_reduced_complexity, set_complexity, u_bound, ReturnKind,
};
use iet::quadratic::euclid::euclid_expansion;
use iet::quadratic::graph::build_graph;
use iet::quadratic::FiniteUnion;
use iet::{CanonicalMode, Iet, QuadNum, Rational, SemiInterval};
use proptest::prelude::*;

fn t() -> &'static Iet {
    static T: OnceLock<Iet> = OnceLock::new();
    T.get_or_init(|| {
        let a: QuadNum = "3/2 - 1/2*sqrt(5)".parse().unwrap();
        Iet::from_names("abc", "bca", vec![QuadNum::one() - &a - &a, a.clone(), a], QuadNum::zero()).unwrap()
    })
}

fn f7() -> &'static FactorSet {
    static F: OnceLock<FactorSet> = OnceLock::new();
    F.get_or_init(|| factors(t(), 7).unwrap())
}

/// Partial quotients of `a/b` by the division algorithm.
fn continued_fraction(mut a: u64, mut b: u64) -> Vec<u64> {
    let mut out = Vec::new();
    if a < b {
        std::mem::swap(&mut a, &mut b);
    }
    while b != 0 {
        out.push(a / b);
        (a, b) = (b, a % b);
    }
    out
}

/// A point `m + n√5` of the rescaled domain `[0, 2)`, one of the two with this `n`.
fn lattice_point(s: &Iet, n: i64, j: i64) -> QuadNum {
    let mk = |m: i64| QuadNum::new(Rational::from_integer(m.into()), Rational::from_integer(n.into()), 5).unwrap();
    let base: i64 = (-mk(0)).ceil().try_into().unwrap();
    let x = mk(base + j);
    if s.contains(&x) { x } else { mk(base) }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn pi_is_bounded_below_on_admissible_intervals(w in (1usize..=7).prop_flat_map(|k| prop::sample::select(f7().layer(k).to_vec()))) {
        let (_, k) = integral_rescaling(t()).unwrap();
        let j = interval_j(t(), &w).unwrap();
        let pi = scaled_reduced_complexity(&j, &k).unwrap();
        prop_assert!(pi > pi_lower_bound(5).unwrap());
    }

    #[test]
    fn u_bound_controls_height_drift((n1, j1, n2, j2) in (-40i64..40, 0i64..2, -40i64..40, 0i64..2)) {
        let (s, _) = integral_rescaling(t()).unwrap();
        let (x, y) = (lattice_point(&s, n1, j1), lattice_point(&s, n2, j2));
        prop_assume!(x != y);
        let (lo, hi) = if x < y { (x, y) } else { (y, x) };
        let u = u_bound(&s).unwrap().0;
        let xset = FiniteUnion::from(SemiInterval::new(lo, hi).unwrap());
        let before = set_complexity(&xset).unwrap().0;
        let after = set_complexity(&xset.image(&s)).unwrap().0;
        prop_assert!((after - before).magnitude() <= u.magnitude());
    }

    #[test]
    fn euclid_matches_division((a, b) in (1u64..500, 1u64..500)) {
        let r = Iet::from_names("ab", "ba", vec![(a as i64).into(), (b as i64).into()], QuadNum::zero()).unwrap();
        let (digits, connection) = euclid_expansion(&r, 64).unwrap();
        prop_assert!(connection.is_some());
        prop_assert_eq!(digits, continued_fraction(a, b));
    }
}

#[test]
fn graph_construction_is_deterministic() {
    for mode in [CanonicalMode::Equivalence, CanonicalMode::Similarity] {
        let g = build_graph(t(), mode, 10_000).unwrap();
        let h = build_graph(t(), mode, 10_000).unwrap();
        let classes = |g: &iet::quadratic::graph::InductionGraph| g.vertices.iter().map(|v| v.class.clone()).collect::<Vec<_>>();
        assert_eq!(classes(&g), classes(&h));
        assert_eq!(g.edges, h.edges);
        assert_eq!(g.to_dot(), h.to_dot());
    }
}

#[test]
fn similarity_graph_is_the_quotient() {
    let g = build_graph(t(), CanonicalMode::Equivalence, 10_000).unwrap();
    let h = build_graph(t(), CanonicalMode::Similarity, 10_000).unwrap();
    let project = |v: usize| {
        let class = g.vertices[v].representative.canonical_form(CanonicalMode::Similarity);
        h.find(&class).expect("class present")
    };
    let collapsed: BTreeSet<usize> = (0..g.vertex_count()).map(project).collect();
    assert_eq!(collapsed.len(), h.vertex_count());
    let edges: BTreeSet<(usize, usize)> = g.edges.iter().map(|e| (project(e.from), project(e.to))).collect();
    let quotient: BTreeSet<(usize, usize)> = h.edges.iter().map(|e| (e.from, e.to)).collect();
    assert_eq!(edges, quotient);
}

#[test]
fn every_vertex_is_reached_by_its_path() {
    let g = build_graph(t(), CanonicalMode::Equivalence, 10_000).unwrap();
    for v in &g.vertices {
        let (s, theta) = iet::induction::apply_chi(t(), &v.chi).unwrap();
        assert_eq!(s, v.representative);
        assert_eq!(theta, v.theta);
    }
}

#[test]
fn return_times_cover_the_domain() {
    let t = t();
    let full = FiniteUnion::from(t.domain());
    for name in ["a", "b", "c"] {
        let j = interval_j(t, &t.alphabet().parse_word(name).unwrap()).unwrap();
        let x = FiniteUnion::from(j.clone());
        let rho = return_time(t, &x, ReturnKind::RhoPlus, None).unwrap();
        let rho_minus = return_time(t, &x, ReturnKind::RhoMinus, None).unwrap();
        let sigma = return_time(t, &x, ReturnKind::SigmaPlus, None).unwrap();
        let sigma_minus = return_time(t, &x, ReturnKind::SigmaMinus, None).unwrap();
        assert_eq!(forward_cover(t, &x, rho), full);
        assert_ne!(forward_cover(t, &x, rho - 1), full);
        assert_eq!(backward_cover(t, &x, rho_minus), full);
        let cells = first_return_cells(t, &j, None).unwrap();
        let times: Vec<u64> = cells.iter().map(|c| c.return_time() as u64).collect();
        assert_eq!(rho, *times.iter().max().unwrap());
        assert_eq!(sigma, *times.iter().min().unwrap());
        assert_eq!(sigma_minus, sigma);
    }
}

#[test]
fn boundary_orbit_growth() {
    let t = t();
    for m in 0..=4u64 {
        for n in 0..=4u64 {
            let len = boundary_orbit(t, m, n).unwrap().len() as u64;
            assert!(len <= 3 * (m + n));
        }
    }
}
