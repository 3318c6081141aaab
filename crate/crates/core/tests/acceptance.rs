//! Acceptance criteria, one line each. Runs as a plain binary so the lines
//! are always visible under `cargo test`.
//!
//! A criterion listed in `KNOWN_FAILURES` is one where exhaustive computation
//! contradicts the stated value; it is still computed and printed as FAIL.
//! The run fails if the set of failing criteria differs from that list.

use std::collections::BTreeSet;
use std::process::{Command, ExitCode};
use std::time::Instant;

use semitotal::canon::is_isomorphic;
use semitotal::corpus::{family_corpus, product_corpus, tree_family_members};
use semitotal::families::*;
use semitotal::io::{emit_graph, parse_graph, GraphFormat};
use semitotal::polynomial::format;
use semitotal::solvers::semitotal_number;
use semitotal::stability::{Residue, ResidueCache};
use semitotal::subsets;
use semitotal::theorems::{path_cycle_stability_table, run_claims, Verdict};
use semitotal::{
    brute_force_number, count_by_size, domination_number, stability_witness, Conventions, DominationVariant, Graph,
    RemovalPolicy, WitnessRule,
};

const W2: WitnessRule = WitnessRule::WithinTwo;
const E2: WitnessRule = WitnessRule::ExactlyTwo;

/// Criteria contradicted by exhaustive computation.
/// 2: C_3 is K_3, whose semitotal number is 1 under the complete-graph
///    convention (and undefined for exact2 without it), not ceil(6/5) = 2.
/// 3: the book graphs B_4 and B_5 have exact2 semitotal number 4, not n+1.
/// 8: paths P_7, P_10, P_12 have stability 1 (removing vertex 3 splits off a
///    P_3), not the tabulated 2, 3, 2.
const KNOWN_FAILURES: [u32; 3] = [2, 3, 8];

struct Outcome {
    pass: bool,
    detail: String,
}

fn outcome(problems: Vec<String>, ok_detail: impl Into<String>) -> Outcome {
    if problems.is_empty() {
        Outcome {
            pass: true,
            detail: ok_detail.into(),
        }
    } else {
        Outcome {
            pass: false,
            detail: problems.join("; "),
        }
    }
}

fn name(g: &Graph) -> &str {
    g.name().unwrap_or("?")
}

fn gt2(g: &Graph, rule: WitnessRule, conv: Conventions) -> Option<usize> {
    domination_number(g, DominationVariant::Semitotal(rule), conv).unwrap()
}

fn show(v: Option<usize>) -> String {
    v.map_or("undefined".into(), |x| x.to_string())
}

fn corpus14() -> Vec<Graph> {
    let mut v = family_corpus(14);
    v.extend(product_corpus(14));
    v
}

fn c1_oracle_agreement() -> Outcome {
    let conv = Conventions::default();
    let variants = [
        DominationVariant::Plain,
        DominationVariant::Total,
        DominationVariant::Semitotal(W2),
        DominationVariant::Semitotal(E2),
    ];
    let graphs: Vec<Graph> = corpus14().into_iter().filter(|g| g.is_isolate_free()).collect();
    let mut problems = Vec::new();
    let mut checks = 0;
    for g in &graphs {
        for v in variants {
            let fast = domination_number(g, v, conv).unwrap();
            let slow = brute_force_number(g, v, conv).unwrap();
            checks += 1;
            if fast != slow {
                problems.push(format!("{} {v}: {} vs {}", name(g), show(fast), show(slow)));
            }
        }
    }
    outcome(problems, format!("{} graphs, {checks} comparisons", graphs.len()))
}

fn c2_paths_cycles() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    for n in 3..=15usize {
        let want = Some((2 * n).div_ceil(5));
        for g in [path(n).unwrap(), cycle(n).unwrap()] {
            for rule in WitnessRule::BOTH {
                let got = gt2(&g, rule, conv);
                if got != want {
                    problems.push(format!("{} {rule}: {} vs {}", name(&g), show(got), show(want)));
                }
            }
        }
    }
    outcome(problems, "n = 3..15, both rules")
}

fn c3_wheel_friendship_book() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    let mut expect = |g: Graph, rule, want: usize| {
        let got = gt2(&g, rule, conv);
        if got != Some(want) {
            problems.push(format!("{} {rule}: {} vs {want}", name(&g), show(got)));
        }
    };
    for n in 5..=12 {
        expect(wheel(n).unwrap(), E2, (n - 1).div_ceil(3));
    }
    for n in 2..=5 {
        expect(friendship(n).unwrap(), E2, n);
        expect(friendship(n).unwrap(), W2, 2);
    }
    for n in 1..=5 {
        expect(book(n).unwrap(), E2, n + 1);
        expect(book(n).unwrap(), W2, 2);
    }
    outcome(problems, "wheels, friendship and book graphs")
}

fn c4_bipartite() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    for m in 2..=7 {
        for n in m..=7 {
            let want = if n <= 4 { m } else if m >= 5 { 4 } else { continue };
            let got = gt2(&complete_bipartite(m, n).unwrap(), E2, conv);
            if got != Some(want) {
                problems.push(format!("K_{m},{n}: {} vs {want}", show(got)));
            }
        }
    }
    outcome(problems, "2<=m<=n<=4 and 5<=m<=n<=7")
}

fn c5_sandwich_half() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    let mut checked = 0;
    for g in corpus14() {
        if g.n() < 4 || !g.is_connected() || g.is_complete() {
            continue;
        }
        checked += 1;
        let gamma = domination_number(&g, DominationVariant::Plain, conv).unwrap();
        let total = domination_number(&g, DominationVariant::Total, conv).unwrap();
        let semi = gt2(&g, W2, conv);
        let ok = match (gamma, semi, total) {
            (Some(a), Some(b), Some(c)) => a <= b && b <= c && 2 * b <= g.n(),
            _ => false,
        };
        if !ok {
            problems.push(format!("{}: {} {} {}", name(&g), show(gamma), show(semi), show(total)));
        }
    }
    outcome(problems, format!("{checked} connected non-complete graphs"))
}

fn c6_counts() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    for n in 3..=8 {
        let p = count_by_size(&star(n).unwrap(), DominationVariant::Semitotal(E2), conv).unwrap();
        let want = format!("x^{n}");
        if format(&p) != want {
            problems.push(format!("K_1,{n}: {} vs {want}", format(&p)));
        }
    }
    let c4 = cycle(4).unwrap();
    for (rule, want) in [(W2, 6u32), (E2, 2)] {
        let got = count_by_size(&c4, DominationVariant::Semitotal(rule), conv).unwrap().coeff(2);
        if got != want.into() {
            problems.push(format!("C_4 {rule} d_2: {got} vs {want}"));
        }
    }
    outcome(problems, "stars n = 3..8, C_4 at i = 2")
}

fn c7_discrepancy_pins() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    let report = run_claims("C-COUNT-Fn", 9, conv).unwrap();
    match report.rows_for("C-COUNT-Fn").find(|r| r.instance == "F_2 i=3" && r.rule == E2) {
        Some(r) if r.verdict == Verdict::Fail && r.predicted == "8" && r.oracle == "4" => {}
        Some(r) => problems.push(format!("F_2 i=3: {} predicted {} oracle {}", r.verdict, r.predicted, r.oracle)),
        None => problems.push("F_2 i=3 row missing".into()),
    }

    // the double-P_4 member on base K_2 is P_8
    let report = run_claims("T-poly-T", 8, conv).unwrap();
    let p8 = path(8).unwrap();
    let tree = tree_family_members(8)
        .into_iter()
        .find(|t| is_isomorphic(t, &p8))
        .expect("P_8 is a family member");
    let plain = count_by_size(&p8, DominationVariant::Plain, conv).unwrap();
    let mut found = Vec::new();
    for rule in WitnessRule::BOTH {
        let semi = count_by_size(&p8, DominationVariant::Semitotal(rule), conv).unwrap();
        let diff = plain.first_difference(&semi);
        let gamma_t2 = semi.lowest_degree().unwrap();
        let row = report.rows_for("T-poly-T").find(|r| r.instance == name(&tree) && r.rule == rule);
        let Some(row) = row else {
            problems.push(format!("T-poly-T {} {rule} row missing", name(&tree)));
            continue;
        };
        let expected_note = diff.map(|i| format!("first_difference={i}"));
        let reported = row.note.clone();
        let below = diff.is_some_and(|i| i < gamma_t2);
        if row.predicted != plain.to_string() || row.oracle != semi.to_string() {
            problems.push(format!("T-poly-T {rule}: report polynomials differ from enumeration"));
        }
        if expected_note.as_deref().unwrap_or("") != reported {
            problems.push(format!("T-poly-T {rule}: note {reported:?} vs {expected_note:?}"));
        }
        if below && row.verdict != Verdict::Fail {
            problems.push(format!("T-poly-T {rule}: difference below γt2 not reported"));
        }
        found.push(format!("{rule} first_difference {} < γt2 {gamma_t2}", show(diff)));
    }
    outcome(problems, format!("F_2 i=3 predicted 8 oracle 4; P_8 {}", found.join(", ")))
}

/// Every removal of fewer than `k` vertices leaves the number unchanged (or
/// is skipped), recomputed with the brute-force number.
fn stability_consistent(g: &Graph, k: usize, base: Option<usize>, conv: Conventions) -> bool {
    let n = g.n();
    (1..k).all(|size| {
        subsets::lexicographic(n, size).all(|removed| {
            let (h, _) = g.delete_vertices(removed);
            if !h.is_isolate_free() {
                return true;
            }
            match brute_force_number(&h, DominationVariant::Semitotal(E2), conv).unwrap() {
                None => true,
                v => v == base,
            }
        })
    })
}

fn c8_stability() -> Outcome {
    let conv = Conventions::default();
    let mut problems = Vec::new();
    let mut inconsistent = Vec::new();
    for n in 6..=13 {
        let want = path_cycle_stability_table(n) as usize;
        for g in [path(n).unwrap(), cycle(n).unwrap()] {
            let w = stability_witness(&g, E2, conv, RemovalPolicy::SkipSet)
                .unwrap()
                .expect("some removal changes the number");
            let base = semitotal_number(&g, E2, conv).unwrap();
            if !stability_consistent(&g, w.k, base, conv) {
                inconsistent.push(name(&g).to_string());
            }
            let mut cache = ResidueCache::new(E2, conv);
            let residue = cache.residue(&g, w.removed).unwrap();
            if !matches!(residue, Residue::Value(Some(v)) if Some(v) != base) {
                inconsistent.push(format!("{} witness {}", name(&g), w.removed));
            }
            if w.k != want {
                problems.push(format!(
                    "{}: {} vs {want}, witness {} ({} -> {})",
                    name(&g),
                    w.k,
                    w.removed,
                    show(base),
                    show(w.residue_value)
                ));
            }
        }
    }
    if !inconsistent.is_empty() {
        problems.push(format!("self-consistency broken for {}", inconsistent.join(", ")));
    }
    outcome(problems, "n = 6..13, witnesses self-consistent")
}

fn c9_petersen() -> Outcome {
    let conv = Conventions::default();
    let p = petersen();
    let gamma = domination_number(&p, DominationVariant::Plain, conv).unwrap();
    let semi = gt2(&p, E2, conv);
    let problems = if gamma == Some(3) && semi == Some(3) {
        vec![]
    } else {
        vec![format!("γ {} γt2 {}", show(gamma), show(semi))]
    };
    outcome(problems, "γ = γt2 = 3")
}

fn c10_half_order() -> Outcome {
    let conv = Conventions::OFF;
    let mut problems = Vec::new();
    let mut expect_half = |g: &Graph, label: String| {
        let got = gt2(g, W2, conv);
        if got.map(|v| 2 * v) != Some(g.n()) {
            problems.push(format!("{label}: {} on {} vertices", show(got), g.n()));
        }
    };
    let mut trees = 0;
    for h in 2..=3 {
        for base in semitotal::canon::free_trees(h) {
            for choice in Attachment::all_choices(h) {
                let t = tree_family_t(&base, &choice).unwrap();
                trees += 1;
                expect_half(&t, name(&t).to_string());
            }
        }
    }
    expect_half(&cycle(6).unwrap(), "C_6".into());
    expect_half(&cycle(8).unwrap(), "C_8".into());
    let k4_edges = complete(4).unwrap().edges();
    let mut spanning = 0;
    for mask in 0u32..1 << k4_edges.len() {
        let edges = k4_edges.iter().enumerate().filter(|(i, _)| mask >> i & 1 == 1).map(|(_, e)| *e);
        let g = Graph::from_edges(4, edges).unwrap();
        if g.is_connected() {
            spanning += 1;
            expect_half(&g, format!("K_4 subgraph {:?}", g.edges()));
        }
    }
    outcome(problems, format!("{trees} trees, C_6, C_8, {spanning} connected spanning subgraphs of K_4"))
}

fn c11_round_trip_determinism() -> Outcome {
    let mut problems = Vec::new();
    let graphs = family_corpus(8);
    for g in &graphs {
        for f in [GraphFormat::EdgeList, GraphFormat::Graph6] {
            let back = emit_graph(g, f).and_then(|t| parse_graph(&t, f));
            if back.as_ref() != Ok(g) {
                problems.push(format!("{} {f:?}", name(g)));
            }
        }
    }
    let run = || {
        Command::new(env!("CARGO_BIN_EXE_semitotal"))
            .args(["verify", "--budget", "10", "--out", "json"])
            .output()
            .expect("binary runs")
    };
    let (a, b) = (run(), run());
    if !a.status.success() || a.stdout != b.stdout || a.stdout.is_empty() {
        problems.push("verify output differs between identical runs".into());
    }
    outcome(problems, format!("{} graphs, verify output {} bytes identical", graphs.len(), a.stdout.len()))
}

fn main() -> ExitCode {
    let criteria: [(u32, &str, fn() -> Outcome); 11] = [
        (1, "oracle agreement on the frozen corpus", c1_oracle_agreement),
        (2, "paths and cycles ceil(2n/5)", c2_paths_cycles),
        (3, "wheel, friendship and book values", c3_wheel_friendship_book),
        (4, "complete bipartite values", c4_bipartite),
        (5, "sandwich and half bound", c5_sandwich_half),
        (6, "star and C_4 counts", c6_counts),
        (7, "known discrepancy pins", c7_discrepancy_pins),
        (8, "path and cycle stability table", c8_stability),
        (9, "Petersen graph", c9_petersen),
        (10, "half-order characterization", c10_half_order),
        (11, "round trips and determinism", c11_round_trip_determinism),
    ];
    let mut failed = BTreeSet::new();
    for (id, title, check) in criteria {
        let start = Instant::now();
        let o = check();
        let verdict = if o.pass { "PASS" } else { "FAIL" };
        println!(
            "criterion {id:>2} {verdict} {title} ({:.1}s): {}",
            start.elapsed().as_secs_f64(),
            o.detail
        );
        if !o.pass {
            failed.insert(id);
        }
    }
    let known: BTreeSet<u32> = KNOWN_FAILURES.into_iter().collect();
    if failed == known {
        println!("acceptance: failures match the documented set {known:?}");
        ExitCode::SUCCESS
    } else {
        println!("acceptance: failures {failed:?} differ from the documented set {known:?}");
        ExitCode::FAILURE
    }
}
