//! The reproduction harness: every quantitative claim the library can check,
//! each tagged with the sentence it reproduces.

use std::collections::BTreeMap;
use std::f64::consts::PI;

use graphdyn_core::boundary::{boundary_polynomial, closed_form, ClosedForm};
use graphdyn_core::dynsys::{
    build_circle_system1, build_circle_system2, build_eps_lienard, build_example1, build_hopf,
    build_lienard, classify_equilibrium, fit_weight_params, general_lyapunov_number,
    lienard_unique_cycle_check, lyapunov_from_coefficients, lyapunov_number, positive_roots,
    radius_polynomial, EquilibriumKind, FitOutcome, HopfCoefficients, HopfSpec,
    UniqueCycleVerdict,
};
use graphdyn_core::graph::{disjoint_union, make_family, parse_graph_spec, repeat_union};
use graphdyn_core::rational::{int, ratio, to_f64};
use graphdyn_core::simulate::{
    circle_divergence_integral, circle_equilibria_scan, circle_integral_pi_coefficient,
    detect_limit_cycles, CycleReport, CycleStability, Direction, IntegratorConfig, ZeroKind,
};
use graphdyn_core::weighted::WeightParams;
use graphdyn_core::{BigRational, Family, Graph};
use num_traits::Signed;
use serde::Serialize;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Inconclusive,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproEntry {
    pub name: String,
    pub paper_anchor: String,
    pub expected: String,
    pub computed: String,
    pub status: Status,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub pass: usize,
    pub fail: usize,
    pub inconclusive: usize,
}

#[derive(Debug, Clone, Serialize)]
pub struct ReproReport {
    pub entries: Vec<ReproEntry>,
    pub summary: Summary,
}

struct Verdict {
    expected: String,
    computed: String,
    status: Status,
}

fn verdict(expected: impl Into<String>, computed: impl Into<String>, ok: bool) -> Verdict {
    Verdict {
        expected: expected.into(),
        computed: computed.into(),
        status: if ok { Status::Pass } else { Status::Fail },
    }
}

type Outcome = Result<Verdict, String>;

struct Check {
    name: &'static str,
    anchor: &'static str,
    run: fn() -> Outcome,
}

fn fam(f: Family, n: usize) -> Graph {
    make_family(f, n).expect("family sizes in range")
}

fn g(spec: &str) -> Graph {
    parse_graph_spec(spec).expect("fixed specs parse")
}

fn err<E: ToString>(e: E) -> String {
    e.to_string()
}

fn sigma(g1: &Graph, g2: &Graph) -> Result<BigRational, String> {
    Ok(lyapunov_number(g1, g2).map_err(err)?.pi_coefficient)
}

fn cycles_text(r: &CycleReport) -> String {
    let mut parts: Vec<String> = r
        .cycles
        .iter()
        .map(|c| format!("{} r={:.5}", c.stability.name(), c.mean_radius))
        .collect();
    parts.extend(r.inconclusive.iter().map(|i| format!("seed {} inconclusive", i.seed)));
    if parts.is_empty() {
        "none".into()
    } else {
        parts.join(", ")
    }
}

/// Valid weak-focus graphs up to `max` vertices, one per boundary polynomial
/// and structural signature.
fn weak_focus_classes(max: usize) -> Vec<Graph> {
    let mut seen = BTreeMap::new();
    for n in 2..=max {
        let pairs: Vec<(usize, usize)> = (0..n).flat_map(|a| (a + 1..n).map(move |b| (a, b))).collect();
        for mask in 0u32..1 << pairs.len() {
            let edges: Vec<_> = pairs.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e).collect();
            let graph = Graph::from_edges(n, &edges).expect("edges in range");
            if graph.count_degree(0) > 0 {
                continue;
            }
            let key = (
                boundary_polynomial(&graph).render(),
                graph.count_degree(1) > 0,
                graph.components().iter().any(|c| c.len() == 2),
            );
            seen.entry(key).or_insert(graph);
        }
    }
    seen.into_values().collect()
}

fn closed_forms(kind: ClosedForm, f: Family) -> Outcome {
    let bad: Vec<usize> = (1..=12)
        .filter(|&n| closed_form(kind, n).ok() != Some(boundary_polynomial(&fam(f, n))))
        .collect();
    Ok(verdict("enumeration equals closed form for n <= 12", format!("mismatches at {bad:?}"), bad.is_empty()))
}

fn classification_table() -> Outcome {
    let one = int(1);
    let mut wrong = Vec::new();
    for n1 in 1..=8 {
        for n2 in 1..=8 {
            let want = match (n1, n2) {
                (_, 2) => EquilibriumKind::Degenerate,
                (1 | 2, 1) => EquilibriumKind::UnstableNode,
                (1 | 2, _) | (_, 1) => EquilibriumKind::Saddle,
                _ => EquilibriumKind::StableNode,
            };
            let s = build_example1(&fam(Family::Complete, n1), &fam(Family::Empty, n2));
            let got = classify_equilibrium(&s, (&one, &one)).map_err(err)?.kind;
            if got != want {
                wrong.push(format!("({n1},{n2}): {}", got.name()));
            }
        }
    }
    Ok(verdict(
        "saddle, unstable node, stable node, degenerate as tabulated for n1, n2 <= 8",
        format!("{} disagreements {wrong:?}", wrong.len()),
        wrong.is_empty(),
    ))
}

fn complete_vs_star_edges() -> Outcome {
    let mut wrong = Vec::new();
    for n in 3..=8 {
        for m in 2..=8 {
            for k in 1..=4 {
                let g2 = disjoint_union(&fam(Family::Star, m), &repeat_union(k, &fam(Family::Path, 2)).map_err(err)?)
                    .map_err(err)?;
                let s = sigma(&fam(Family::Complete, n), &g2)?;
                let ok = if m == 3 && k == 1 { !s.is_negative() } else { s.is_negative() };
                if !ok {
                    wrong.push(format!("K{n}, S{m}+{k}P2: {s}"));
                }
            }
        }
    }
    Ok(verdict(
        "negative except S3+P2, where it is nonnegative",
        format!("{} exceptions {wrong:?}", wrong.len()),
        wrong.is_empty(),
    ))
}

fn complete_second_graph() -> Outcome {
    let mut wrong = Vec::new();
    for g1 in weak_focus_classes(4) {
        for n in 3..=8 {
            let s = sigma(&g1, &fam(Family::Complete, n))?;
            if s.is_negative() {
                wrong.push(format!("{g1:?}, K{n}: {s}"));
            }
        }
    }
    Ok(verdict("never negative", format!("{} negative {wrong:?}", wrong.len()), wrong.is_empty()))
}

fn no_pendant_or_edge_component() -> Outcome {
    let classes = weak_focus_classes(6);
    let coeffs: Vec<HopfCoefficients> = classes.iter().map(HopfCoefficients::of).collect();
    let mut pairs = 0;
    let mut wrong = 0;
    for (j, g2) in classes.iter().enumerate() {
        if g2.count_degree(1) > 0 && g2.components().iter().any(|c| c.len() == 2) {
            continue;
        }
        for c1 in &coeffs {
            pairs += 1;
            if lyapunov_from_coefficients(c1, &coeffs[j]).pi_coefficient.is_negative() {
                wrong += 1;
            }
        }
    }
    Ok(verdict("never negative", format!("{wrong} negative among {pairs} pairs"), wrong == 0))
}

fn single_edge_second_graph() -> Outcome {
    let p2 = fam(Family::Path, 2);
    let mut wrong = Vec::new();
    let mut positive = vec![fam(Family::Complete, 3), fam(Family::Cycle, 3)];
    positive.extend((2..=10).map(|n| fam(Family::Star, n)));
    for g1 in &positive {
        let s = sigma(g1, &p2)?;
        if !s.is_positive() {
            wrong.push(format!("{g1:?}: {s}"));
        }
    }
    for n in 4..=10 {
        for f in [Family::Complete, Family::Cycle, Family::Wheel] {
            let s = sigma(&fam(f, n), &p2)?;
            if s != int(-3) {
                wrong.push(format!("{}{n}: {s}", f.letter()));
            }
        }
    }
    Ok(verdict(
        "positive for K3, C3, S_n; -3 for K_n, C_n, W_n with n >= 4",
        format!("{} disagreements {wrong:?}", wrong.len()),
        wrong.is_empty(),
    ))
}

fn equal_graphs(f: Family, range: std::ops::RangeInclusive<i64>, want: fn(i64) -> BigRational, label: &str) -> Outcome {
    let mut got = Vec::new();
    let mut ok = true;
    for n in range {
        let graph = fam(f, n as usize);
        let s = sigma(&graph, &graph)?;
        ok &= s == want(n);
        got.push(format!("{}{n}: {s}", f.letter()));
    }
    Ok(verdict(label, got.join(", "), ok))
}

fn equal_graphs_nonnegative() -> Outcome {
    let classes = weak_focus_classes(6);
    let wrong = classes
        .iter()
        .filter(|c| lyapunov_from_coefficients(&HopfCoefficients::of(c), &HopfCoefficients::of(c)).pi_coefficient.is_negative())
        .count();
    Ok(verdict("never negative", format!("{wrong} negative among {} classes", classes.len()), wrong == 0))
}

fn connected_first_graph() -> Outcome {
    let c4 = fam(Family::Cycle, 4);
    let mut lines = Vec::new();
    let mut ok = true;
    for (spec, positive) in [("P3", true), ("C5", true), ("P4", true), ("2*P2", false), ("S4+P2", false)] {
        let s = sigma(&c4, &g(spec))?;
        ok &= if positive { s.is_positive() } else { s.is_negative() };
        lines.push(format!("{spec}: {s}"));
    }
    Ok(verdict("positive for P3, C5, P4; negative for 2P2, S4+P2 (G1 = C4)", lines.join(", "), ok))
}

fn hopf_example_sigma() -> Outcome {
    let s = sigma(&g("K4"), &g("S2+2*P2"))?;
    Ok(verdict("-27", s.to_string(), s == int(-27)))
}

fn general_reduction() -> Outcome {
    let spec = HopfSpec::new(int(0), int(-1), int(1), int(0)).map_err(err)?;
    let classes = weak_focus_classes(4);
    let mut wrong = 0;
    for a in &classes {
        for b in &classes {
            let plain = lyapunov_number(a, b).map_err(err)?;
            let general = general_lyapunov_number(a, b, &spec).map_err(err)?;
            if general.as_lyapunov() != Some(plain) {
                wrong += 1;
            }
        }
    }
    let n = classes.len() * classes.len();
    Ok(verdict("identical for every pair", format!("{wrong} differences among {n} pairs"), wrong == 0))
}

fn figure_params() -> WeightParams {
    WeightParams::new(ratio(-211, 80), ratio(299, 120))
}

fn single_edge_fit() -> Outcome {
    let out = fit_weight_params(&g("edges:5:0-4"), &[ratio(1, 2), int(3)]).map_err(err)?;
    match out {
        FitOutcome::Feasible { params, .. } => Ok(verdict(
            "k = -211/80, u = 299/120",
            format!("k = {}, u = {}", params.k, params.u),
            params == figure_params(),
        )),
        FitOutcome::Infeasible(c) => Ok(verdict("k = -211/80, u = 299/120", format!("infeasible: {c}"), false)),
    }
}

fn single_edge_radius_polynomial() -> Outcome {
    let rp = radius_polynomial(&g("edges:5:0-4"), &figure_params()).map_err(err)?;
    let text = rp.poly.render_in("rho");
    let want = vec![ratio(3, 2), ratio(-7, 2), int(1)];
    Ok(verdict("rho^2 - 7/2 rho + 3/2", text, rp.poly.coeffs() == want.as_slice()))
}

fn single_edge_roots() -> Outcome {
    let rp = radius_polynomial(&g("edges:5:0-4"), &figure_params()).map_err(err)?;
    let roots = positive_roots(&rp.poly).map_err(err)?;
    let values: Vec<f64> = roots.iter().map(|r| r.value).collect();
    let ok = values.len() == 2 && (values[0] - 0.5).abs() < 1e-12 && (values[1] - 3.0).abs() < 1e-12;
    Ok(verdict("rho in {1/2, 3}", format!("{values:?}"), ok))
}

fn single_edge_simulation() -> Outcome {
    let s = build_eps_lienard(&g("edges:5:0-4"), &figure_params(), &ratio(1, 100)).map_err(err)?;
    let r = detect_limit_cycles(&s, &[0.3, 0.71, 1.2, 1.74, 2.2], &IntegratorConfig::rk4(1e-3, 20.0)).map_err(err)?;
    let ok = r.cycles.len() == 2
        && r.cycles.iter().zip([0.5f64.sqrt(), 3.0f64.sqrt()]).all(|(c, w)| (c.mean_radius - w).abs() <= 0.05 * w)
        && r.cycles[0].stability != r.cycles[1].stability;
    Ok(verdict("two cycles within 5% of 0.70711 and 1.73205, opposite stability", cycles_text(&r), ok))
}

fn unique_cycle(spec: &str, u: i64, want: UniqueCycleVerdict, direction: Direction, stability: CycleStability) -> Outcome {
    let params = WeightParams::new(int(0), int(u));
    let got = lienard_unique_cycle_check(&g(spec), &params).map_err(err)?;
    let s = build_lienard(&g(spec), &fam(Family::Empty, 1), &params);
    let cfg = IntegratorConfig::rk4(1e-3, 50.0).with_direction(direction);
    let r = detect_limit_cycles(&s, &[0.2, 0.6, 1.0, 1.5, 2.0, 2.5, 2.9], &cfg).map_err(err)?;
    let ok = got == want && r.cycles.len() == 1 && r.cycles[0].stability == stability;
    Ok(verdict(
        format!("{}, one {} cycle", want.name(), stability.name()),
        format!("{}, {}", got.name(), cycles_text(&r)),
        ok,
    ))
}

fn infeasible(spec: &str) -> Outcome {
    let g1 = g(spec);
    let targets: Vec<BigRational> = (1..=(g1.order() as i64 - 1) / 2).map(|r| int(r * r)).collect();
    let out = fit_weight_params(&g1, &targets).map_err(err)?;
    Ok(match out.certificate() {
        Some(c) => verdict("infeasible with a two-equation certificate", c.to_string(), c.equations.len() == 2),
        None => verdict("infeasible with a two-equation certificate", "feasible", false),
    })
}

fn first_circle_divergence() -> Outcome {
    let values: Vec<f64> = [4, 6, 8]
        .iter()
        .map(|&n| circle_divergence_integral(&build_circle_system1(&fam(Family::Complete, n))).value)
        .collect();
    let ok = values.iter().all(|v| (v + 4.0 * PI).abs() <= 1e-6);
    Ok(verdict(format!("{:.9} for K4, K6, K8", -4.0 * PI), format!("{values:.9?}"), ok))
}

fn first_circle_equilibria() -> Outcome {
    let k4 = circle_equilibria_scan(&fam(Family::Complete, 4), 720).map_err(err)?;
    let k3 = circle_equilibria_scan(&fam(Family::Complete, 3), 720).map_err(err)?;
    let hit = k3.iter().any(|z| (z.theta - 1.5 * PI).abs() < 1e-9 && z.kind == ZeroKind::SignChange);
    Ok(verdict(
        "none for K4; a sign change at 3pi/2 for K3",
        format!("K4: {} zeros; K3: {:?}", k4.len(), k3.iter().map(|z| z.theta).collect::<Vec<_>>()),
        k4.is_empty() && hit,
    ))
}

fn second_circle_exponent() -> Outcome {
    let mut lines = Vec::new();
    let mut ok = true;
    for spec in ["K3", "E2", "C5", "S4", "P2+K3"] {
        let graph = g(spec);
        let q = circle_divergence_integral(&build_circle_system2(&graph)).value;
        let b = to_f64(&circle_integral_pi_coefficient(&boundary_polynomial(&graph))) * PI;
        ok &= (q + 2.0 * b).abs() <= 1e-6 * b.abs().max(1.0) && q <= -4.0 * PI + 1e-6;
        lines.push(format!("{spec}: {q:.6}"));
    }
    Ok(verdict("-2 * integral of B, at most -4pi", lines.join(", "), ok))
}

fn second_circle_cycle() -> Outcome {
    let s = build_circle_system2(&fam(Family::Complete, 3));
    let r = detect_limit_cycles(&s, &[0.5, 2.0], &IntegratorConfig::rkf45(1e-9, 50.0)).map_err(err)?;
    let ok = r.cycles.len() == 1
        && r.cycles[0].stability == CycleStability::Stable
        && (r.cycles[0].mean_radius - 1.0).abs() <= 1e-3;
    Ok(verdict("one stable cycle of radius 1 +- 1e-3", cycles_text(&r), ok))
}

fn hopf_report(g1: &str, g2: &str, alpha: BigRational, direction: Direction) -> Result<CycleReport, String> {
    let s = build_hopf(&g(g1), &g(g2), &alpha).map_err(err)?;
    let cfg = IntegratorConfig::rk4(1e-3, 20.0).with_direction(direction);
    detect_limit_cycles(&s, &[0.005, 0.02, 0.05, 0.2], &cfg).map_err(err)
}

fn hopf_stable_cycle() -> Outcome {
    let r = hopf_report("K4", "S2+2*P2", ratio(1, 1000), Direction::Forward)?;
    let ok = r.cycles.len() == 1 && r.cycles[0].stability == CycleStability::Stable && r.cycles[0].mean_radius < 0.5;
    Ok(verdict("one stable cycle near the origin at alpha = 1/1000", cycles_text(&r), ok))
}

fn hopf_scaling() -> Outcome {
    let amplitude = |alpha| -> Result<Option<f64>, String> {
        let r = hopf_report("K4", "S2+2*P2", alpha, Direction::Forward)?;
        Ok((r.cycles.len() == 1).then(|| r.cycles[0].mean_radius))
    };
    let (Some(a), Some(b)) = (amplitude(ratio(1, 1000))?, amplitude(ratio(1, 4000))?) else {
        return Ok(Verdict {
            expected: "ratio in [1.6, 2.4]".into(),
            computed: "cycle not isolated at one of the parameters".into(),
            status: Status::Inconclusive,
        });
    };
    let ratio = a / b;
    Ok(verdict(
        "ratio in [1.6, 2.4]",
        format!("{a:.6} / {b:.6} = {ratio:.4}"),
        (1.6..=2.4).contains(&ratio),
    ))
}

fn hopf_unstable_cycle() -> Outcome {
    let s = sigma(&g("C5"), &g("C5"))?;
    let r = hopf_report("C5", "C5", ratio(-1, 1000), Direction::Backward)?;
    let ok = s.is_positive() && r.cycles.len() == 1 && r.cycles[0].stability == CycleStability::Unstable;
    Ok(verdict("one unstable cycle at alpha = -1/1000", format!("sigma {s}; {}", cycles_text(&r)), ok))
}

const CHECKS: &[Check] = &[
    Check {
        name: "closed-form/complete-graphs",
        anchor: "B(K_{n};x,y) = (x+y)^{n}+1-x^{n}",
        run: || closed_forms(ClosedForm::Complete, Family::Complete),
    },
    Check {
        name: "closed-form/empty-graphs",
        anchor: "B(E_{n};x,y) = (1+y)^{n}",
        run: || closed_forms(ClosedForm::Empty, Family::Empty),
    },
    Check {
        name: "classification/complete-vs-empty",
        anchor: "then $(1,1)$ is a stable node for the system",
        run: classification_table,
    },
    Check {
        name: "lyapunov/complete-vs-star-plus-edges",
        anchor: "Then there is a unique stable limit cycle that bifurcates from the origin",
        run: complete_vs_star_edges,
    },
    Check {
        name: "lyapunov/complete-second-graph",
        anchor: "then $\\sigma_{B} \\not< 0$",
        run: complete_second_graph,
    },
    Check {
        name: "lyapunov/no-pendant-second-graph",
        anchor: "If $G_{2}$ has no pendant vertices, then $\\sigma_{B} \\not< 0$",
        run: no_pendant_or_edge_component,
    },
    Check {
        name: "lyapunov/single-edge-second-graph",
        anchor: "Consider $G_{2} = P_{2}$",
        run: single_edge_second_graph,
    },
    Check {
        name: "lyapunov/equal-cycles",
        anchor: "we have $\\sigma_{B} = \\frac{3n\\pi}{2}$",
        run: || equal_graphs(Family::Cycle, 4..=10, |n| ratio(3 * n, 2), "3n/2 for 4 <= n <= 10"),
    },
    Check {
        name: "lyapunov/equal-complete",
        anchor: "we have $\\sigma_{B} = 0$",
        run: || equal_graphs(Family::Complete, 4..=10, |_| int(0), "0 for 4 <= n <= 10"),
    },
    Check {
        name: "lyapunov/equal-wheels",
        anchor: "we have $\\sigma_{B} = 0$",
        run: || equal_graphs(Family::Wheel, 4..=10, |_| int(0), "0 for 4 <= n <= 10"),
    },
    Check {
        name: "lyapunov/equal-stars",
        anchor: "\\frac{3(n-1)(n-2)\\pi}{4}",
        run: || {
            equal_graphs(
                Family::Star,
                2..=10,
                |n| match n {
                    2 => int(3),
                    3 => ratio(21, 2),
                    _ => ratio(3 * (n - 1) * (n - 2), 4),
                },
                "3, 21/2, then 3(n-1)(n-2)/4",
            )
        },
    },
    Check {
        name: "lyapunov/equal-graphs-nonnegative",
        anchor: "For $G = S_{2}$ we have $\\sigma_{B} = 3\\pi$",
        run: equal_graphs_nonnegative,
    },
    Check {
        name: "lyapunov/connected-first-graph",
        anchor: "then we have a subcritical Hopf bifurcation",
        run: connected_first_graph,
    },
    Check {
        name: "lyapunov/hopf-example",
        anchor: "\\sigma_{B} = -\\frac{3\\pi}{2}(2+2k)(k+1) < 0",
        run: hopf_example_sigma,
    },
    Check {
        name: "lyapunov/general-reduction",
        anchor: "still holds with $\\alpha = \\alpha_{1} + \\alpha_{4}$",
        run: general_reduction,
    },
    Check {
        name: "fit/single-edge-params",
        anchor: "\\rho^{2} -\\frac{7}{2}\\rho + \\frac{3}{2}",
        run: single_edge_fit,
    },
    Check {
        name: "fit/single-edge-radius-polynomial",
        anchor: "\\rho^{2} -\\frac{7}{2}\\rho + \\frac{3}{2}",
        run: single_edge_radius_polynomial,
    },
    Check {
        name: "fit/single-edge-roots",
        anchor: "radius $r = \\sqrt{\\frac{1}{2}}$",
        run: single_edge_roots,
    },
    Check {
        name: "simulate/single-edge-eps-cycles",
        anchor: "radius $r = \\sqrt{\\frac{1}{2}}$",
        run: single_edge_simulation,
    },
    Check {
        name: "unique-cycle/edge-plus-vertex",
        anchor: "will always be unstable",
        run: || unique_cycle("P2+K1", -2, UniqueCycleVerdict::UniqueUnstable, Direction::Backward, CycleStability::Unstable),
    },
    Check {
        name: "unique-cycle/triangle",
        anchor: "Stable limit cycle",
        run: || unique_cycle("K3", -1, UniqueCycleVerdict::UniqueStable, Direction::Forward, CycleStability::Stable),
    },
    Check { name: "infeasible/K5", anchor: "which is impossible since", run: || infeasible("K5") },
    Check { name: "infeasible/E5", anchor: "which is impossible since", run: || infeasible("E5") },
    Check { name: "infeasible/K7", anchor: "which is impossible since", run: || infeasible("K7") },
    Check { name: "infeasible/E7", anchor: "which is impossible since", run: || infeasible("E7") },
    Check {
        name: "circle/first-system-divergence",
        anchor: "= -4\\pi < 0",
        run: first_circle_divergence,
    },
    Check {
        name: "circle/first-system-equilibria",
        anchor: "can't be zero on the unit circle",
        run: first_circle_equilibria,
    },
    Check {
        name: "circle/second-system-exponent",
        anchor: "always a stable limit cycle",
        run: second_circle_exponent,
    },
    Check {
        name: "circle/second-system-cycle",
        anchor: "always a stable limit cycle",
        run: second_circle_cycle,
    },
    Check {
        name: "hopf/stable-cycle",
        anchor: "a unique stable limit cycle bifurcates",
        run: hopf_stable_cycle,
    },
    Check {
        name: "hopf/amplitude-scaling",
        anchor: "a unique stable limit cycle bifurcates",
        run: hopf_scaling,
    },
    Check {
        name: "hopf/unstable-cycle",
        anchor: "a unique unstable limit cycle bifurcates",
        run: hopf_unstable_cycle,
    },
];

/// Names of all entries, in report order.
pub fn entry_names() -> Vec<&'static str> {
    let mut names: Vec<&'static str> = CHECKS.iter().map(|c| c.name).collect();
    names.sort_unstable();
    names
}

/// Runs every entry whose name contains `only` (all of them when `None`).
pub fn run(only: Option<&str>) -> ReproReport {
    let mut entries: Vec<ReproEntry> = CHECKS
        .iter()
        .filter(|c| only.is_none_or(|o| c.name.contains(o)))
        .map(|c| {
            let v = (c.run)().unwrap_or_else(|e| Verdict {
                expected: "no error".into(),
                computed: e,
                status: Status::Fail,
            });
            ReproEntry {
                name: c.name.into(),
                paper_anchor: c.anchor.into(),
                expected: v.expected,
                computed: v.computed,
                status: v.status,
            }
        })
        .collect();
    entries.sort_by(|a, b| a.name.cmp(&b.name));
    let mut summary = Summary::default();
    for e in &entries {
        match e.status {
            Status::Pass => summary.pass += 1,
            Status::Fail => summary.fail += 1,
            Status::Inconclusive => summary.inconclusive += 1,
        }
    }
    ReproReport { entries, summary }
}

impl ReproReport {
    pub fn table(&self) -> String {
        let width = self.entries.iter().map(|e| e.name.len()).max().unwrap_or(0);
        let mut out = String::new();
        for e in &self.entries {
            let status = match e.status {
                Status::Pass => "pass",
                Status::Fail => "FAIL",
                Status::Inconclusive => "inconclusive",
            };
            out.push_str(&format!("{status:<12} {:<width$}  {}\n", e.name, e.computed));
        }
        out.push_str(&format!(
            "{} pass, {} fail, {} inconclusive",
            self.summary.pass, self.summary.fail, self.summary.inconclusive
        ));
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn names_are_unique() {
        let names = entry_names();
        let mut dedup = names.clone();
        dedup.dedup();
        assert_eq!(names, dedup);
    }

    #[test]
    fn exact_entries_pass() {
        let r = run(Some("lyapunov/"));
        assert!(r.entries.len() >= 10);
        assert_eq!(r.summary.fail, 0, "{}", r.table());
        let r = run(Some("infeasible/"));
        assert_eq!(r.entries.len(), 4);
        assert_eq!(r.summary.pass, 4, "{}", r.table());
    }
}
