use graphdyn_core::boundary::{boundary_polynomial, SubsetCensus};
use graphdyn_core::dynsys::{lyapunov_number, HopfCoefficients};
use graphdyn_core::graph::{disjoint_union, make_family};
use graphdyn_core::{BigInt, BigRational, Family, Graph, VertexSet};
use num_traits::{Signed, Zero};
use proptest::prelude::*;

fn graph_strategy(max_order: usize) -> impl Strategy<Value = Graph> {
    (1..=max_order).prop_flat_map(|n| {
        proptest::collection::vec(any::<bool>(), n * (n - 1) / 2).prop_map(move |bits| {
            let mut edges = Vec::new();
            let mut k = 0;
            for a in 0..n {
                for b in a + 1..n {
                    if bits[k] {
                        edges.push((a, b));
                    }
                    k += 1;
                }
            }
            Graph::from_edges(n, &edges).unwrap()
        })
    })
}

fn q(n: i64) -> BigRational {
    BigRational::from_integer(BigInt::from(n))
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn value_at_one_one_counts_subsets(g in graph_strategy(10)) {
        let v = boundary_polynomial(&g).evaluate(&q(1), &q(1));
        prop_assert_eq!(v, q(1 << g.order()));
    }

    #[test]
    fn union_multiplies(a in graph_strategy(5), b in graph_strategy(5)) {
        let joint = boundary_polynomial(&disjoint_union(&a, &b).unwrap());
        prop_assert_eq!(joint, &boundary_polynomial(&a) * &boundary_polynomial(&b));
    }

    #[test]
    fn y_marginal_is_binomial(g in graph_strategy(9)) {
        // B(1, y) = (1 + y)^n whatever the edges
        let b = boundary_polynomial(&g);
        let n = g.order();
        let mut binom = 1i64;
        for j in 0..=n {
            let col: BigRational = (0..=n).map(|i| b.coeff(i, j)).fold(BigRational::zero(), |a, c| a + c);
            prop_assert_eq!(col, q(binom));
            binom = binom * (n - j) as i64 / (j + 1) as i64;
        }
    }

    #[test]
    fn boundary_is_disjoint_from_set(g in graph_strategy(8), bits in any::<u32>()) {
        let s = VertexSet::from_bits(g.order(), bits & ((1u32 << g.order()) - 1)).unwrap();
        let d = g.vertex_boundary(s);
        prop_assert!(d.is_disjoint(&s));
        for v in d.iter() {
            prop_assert!(s.iter().any(|w| g.has_edge(v, w)));
        }
    }

    #[test]
    fn pendant_and_degree_counts(g in graph_strategy(8)) {
        let c = SubsetCensus::of(&g);
        prop_assert_eq!(c.count(1, 1) as usize, g.count_degree(1));
        prop_assert_eq!(c.count(0, 1) as usize, g.count_degree(0));
        prop_assert_eq!(c.count(2, 1) as usize, g.count_degree(2));
    }
}

fn fam(f: Family, n: usize) -> Graph {
    make_family(f, n).unwrap()
}

#[test]
fn complete_second_graph_is_never_supercritical() {
    for n1 in 2..=7 {
        for f in [Family::Complete, Family::Star, Family::Path, Family::Cycle, Family::Wheel] {
            if n1 < f.min_order() {
                continue;
            }
            for n2 in 3..=8 {
                let s = lyapunov_number(&fam(f, n1), &fam(Family::Complete, n2)).unwrap();
                assert!(!s.pi_coefficient.is_negative(), "{}{n1}, K{n2}", f.letter());
            }
        }
    }
}

/// Connected, pendant-free, `B_{1,2} = 0` graphs on up to six vertices.
fn quiet_first_graphs() -> Vec<Graph> {
    let mut out = Vec::new();
    for n in 3..=6 {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
            let g = Graph::from_edges(n, &edges).unwrap();
            if g.is_connected() && g.count_degree(1) == 0 && SubsetCensus::of(&g).count(1, 2) == 0 {
                out.push(g);
            }
        }
    }
    out
}

#[test]
fn subcritical_and_supercritical_families() {
    let g1s = quiet_first_graphs();
    assert!(g1s.contains(&fam(Family::Cycle, 4)));
    // connected with a vertex of degree two
    let sub = [fam(Family::Path, 3), fam(Family::Cycle, 5), fam(Family::Path, 6), fam(Family::Path, 4)];
    // an edge component, a pendant vertex, no degree-two vertex, no P3 or C3
    let sup = [
        disjoint_union(&fam(Family::Path, 2), &fam(Family::Path, 2)).unwrap(),
        disjoint_union(&fam(Family::Path, 2), &fam(Family::Star, 4)).unwrap(),
        disjoint_union(&fam(Family::Path, 2), &fam(Family::Complete, 4)).unwrap(),
    ];
    for g1 in &g1s {
        let c1 = HopfCoefficients::of(g1);
        assert_eq!((c1.b11, c1.b02, c1.b12), (0, 0, 0));
        for g2 in &sub {
            assert!(lyapunov_number(g1, g2).unwrap().pi_coefficient.is_positive());
        }
        for g2 in &sup {
            assert!(lyapunov_number(g1, g2).unwrap().pi_coefficient.is_negative());
        }
    }
}
