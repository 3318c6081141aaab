//! Registry of published claims, each checked instance by instance against
//! exact computation under both witness rules.
//!
//! Predictions come from the published formulas; the oracle is always the
//! exhaustive or branch-and-bound computation. A claim that holds under only
//! one witness rule is flagged in its summary.

use std::collections::BTreeSet;
use std::fmt;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::canon::{free_trees, tree_code};
use crate::corpus::{family_corpus, tree_family_members};
use crate::error::{domain, Result};
use crate::families::{self, has_dominating_vertex};
use crate::graph::Graph;
use crate::polynomial::{closed_form, ClosedFormFamily, CountPolynomial};
use crate::products;
use crate::solvers::{
    brute_force_number, count_by_size, domination_number, is_valid, Conventions, DominationVariant, WitnessRule,
    ORACLE_BUDGET,
};
use crate::stability::{stability_witness, RemovalPolicy, Residue, ResidueCache};
use crate::subsets;

/// Largest tree order for the exhaustive reverse direction of the
/// half-order tree characterization.
pub const TREE_ENUMERATION_LIMIT: usize = 12;
/// Largest order for which path differences are checked by oracle.
pub const PATH_DIFFERENCE_ORACLE_LIMIT: usize = 16;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum Verdict {
    #[serde(rename = "PASS")]
    Pass,
    #[serde(rename = "FAIL")]
    Fail,
    #[serde(rename = "N/A")]
    NotApplicable,
    #[serde(rename = "UNDEFINED")]
    Undefined,
}

impl fmt::Display for Verdict {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Verdict::Pass => "PASS",
            Verdict::Fail => "FAIL",
            Verdict::NotApplicable => "N/A",
            Verdict::Undefined => "UNDEFINED",
        })
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ReportRow {
    pub claim: String,
    pub instance: String,
    pub predicted: String,
    pub oracle: String,
    pub verdict: Verdict,
    pub rule: WitnessRule,
    #[serde(default, skip_serializing_if = "String::is_empty")]
    pub note: String,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default, Serialize, Deserialize)]
pub struct RuleTally {
    pub pass: usize,
    pub fail: usize,
    pub undefined: usize,
    pub not_applicable: usize,
}

impl RuleTally {
    pub fn total(&self) -> usize {
        self.pass + self.fail + self.undefined + self.not_applicable
    }

    /// At least one instance and every instance passed.
    pub fn all_pass(&self) -> bool {
        self.pass > 0 && self.pass == self.total()
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ClaimSummary {
    pub claim: String,
    pub description: String,
    pub within2: RuleTally,
    pub exact2: RuleTally,
    /// Set when every instance passes under exactly one rule.
    pub passes_only_under: Option<WitnessRule>,
}

impl ClaimSummary {
    pub fn tally(&self, rule: WitnessRule) -> &RuleTally {
        match rule {
            WitnessRule::WithinTwo => &self.within2,
            WitnessRule::ExactlyTwo => &self.exact2,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct VerificationReport {
    pub budget: usize,
    pub conventions: Conventions,
    pub report: Vec<ReportRow>,
    pub summary: Vec<ClaimSummary>,
}

impl VerificationReport {
    pub fn rows_for<'a>(&'a self, claim: &'a str) -> impl Iterator<Item = &'a ReportRow> + 'a {
        self.report.iter().filter(move |r| r.claim == claim)
    }

    pub fn summary_for(&self, claim: &str) -> Option<&ClaimSummary> {
        self.summary.iter().find(|s| s.claim == claim)
    }
}

/// Parameters shared by every check in one run.
#[derive(Debug, Clone, Copy)]
pub struct Ctx {
    pub budget: usize,
    pub conv: Conventions,
}

type CheckFn = fn(&Ctx, WitnessRule, &mut Rows) -> Result<()>;

pub struct Claim {
    pub id: &'static str,
    pub description: &'static str,
    check: CheckFn,
}

/// Rows for one (claim, rule) pair.
pub struct Rows {
    claim: &'static str,
    rule: WitnessRule,
    rows: Vec<ReportRow>,
}

impl Rows {
    fn new(claim: &'static str, rule: WitnessRule) -> Self {
        Rows {
            claim,
            rule,
            rows: Vec::new(),
        }
    }

    fn push(&mut self, instance: impl Into<String>, predicted: String, oracle: String, verdict: Verdict, note: String) {
        self.rows.push(ReportRow {
            claim: self.claim.to_string(),
            instance: instance.into(),
            predicted,
            oracle,
            verdict,
            rule: self.rule,
            note,
        });
    }

    /// Compares a predicted value with an oracle value that may be undefined
    /// or may have failed.
    fn compare<T: fmt::Display>(
        &mut self,
        instance: impl Into<String>,
        predicted: impl fmt::Display,
        oracle: Result<Option<T>>,
        pass: impl FnOnce(&T) -> bool,
        note: impl Into<String>,
    ) {
        let note = note.into();
        match oracle {
            Ok(Some(v)) => {
                let verdict = if pass(&v) { Verdict::Pass } else { Verdict::Fail };
                self.push(instance, predicted.to_string(), v.to_string(), verdict, note);
            }
            Ok(None) => self.push(
                instance,
                predicted.to_string(),
                "undefined".into(),
                Verdict::Undefined,
                join_note(note, "no valid set exists"),
            ),
            Err(e) => self.push(
                instance,
                predicted.to_string(),
                "error".into(),
                Verdict::Undefined,
                join_note(note, &e.to_string()),
            ),
        }
    }

    fn exact(&mut self, instance: impl Into<String>, predicted: i64, oracle: Result<Option<i64>>) {
        self.compare(instance, predicted, oracle, |v| *v == predicted, "");
    }
}

fn join_note(note: String, extra: &str) -> String {
    if note.is_empty() {
        extra.to_string()
    } else {
        format!("{note}; {extra}")
    }
}

fn name(g: &Graph) -> String {
    g.name().unwrap_or("G").to_string()
}

fn ceil_div(a: i64, b: i64) -> i64 {
    (a + b - 1).div_euclid(b)
}

fn semi(rule: WitnessRule) -> DominationVariant {
    DominationVariant::Semitotal(rule)
}

fn gt2(g: &Graph, rule: WitnessRule, ctx: &Ctx) -> Result<Option<i64>> {
    Ok(domination_number(g, semi(rule), ctx.conv)?.map(|v| v as i64))
}

fn gamma(g: &Graph) -> Result<Option<i64>> {
    Ok(domination_number(g, DominationVariant::Plain, Conventions::default())?.map(|v| v as i64))
}

fn gamma_t(g: &Graph) -> Result<Option<i64>> {
    Ok(domination_number(g, DominationVariant::Total, Conventions::default())?.map(|v| v as i64))
}

/// `γ_t2 - γ`, undefined when either side is.
fn difference(g: &Graph, rule: WitnessRule, ctx: &Ctx) -> Result<Option<i64>> {
    Ok(match (gt2(g, rule, ctx)?, gamma(g)?) {
        (Some(a), Some(b)) => Some(a - b),
        _ => None,
    })
}

fn stability(g: &Graph, rule: WitnessRule, ctx: &Ctx) -> (Result<Option<i64>>, String) {
    match stability_witness(g, rule, ctx.conv, RemovalPolicy::SkipSet) {
        Ok(Some(w)) => {
            let res = w.residue_value.map_or("undefined".to_string(), |v| v.to_string());
            let base = w.base_value.map_or("undefined".to_string(), |v| v.to_string());
            (
                Ok(Some(w.k as i64)),
                format!("witness {} (γt2 {} -> {})", w.removed, base, res),
            )
        }
        Ok(None) => (Ok(None), String::new()),
        Err(e) => (Err(e), String::new()),
    }
}

fn stability_row(rows: &mut Rows, g: &Graph, predicted: i64, rule: WitnessRule, ctx: &Ctx, label: &str) {
    let (value, note) = stability(g, rule, ctx);
    rows.compare(format!("{}{label}", name(g)), predicted, value, |v| *v == predicted, note);
}

fn count(g: &Graph, variant: DominationVariant, ctx: &Ctx) -> Result<CountPolynomial> {
    count_by_size(g, variant, ctx.conv)
}

/// Per-coefficient rows comparing a closed-form prediction with enumeration.
fn coefficient_rows(rows: &mut Rows, g: &Graph, family: ClosedFormFamily, rule: WitnessRule, ctx: &Ctx) -> Result<()> {
    let predicted = closed_form(family)?;
    let label = name(g);
    match count(g, semi(rule), ctx) {
        Ok(oracle) => {
            for i in 1..=g.n() {
                let p = predicted.coeff(i);
                let o = oracle.coeff(i);
                let verdict = if p == o.clone().into() { Verdict::Pass } else { Verdict::Fail };
                let note = if p.sign() == num_bigint::Sign::Minus {
                    "negative predicted count".to_string()
                } else {
                    String::new()
                };
                rows.push(format!("{label} i={i}"), p.to_string(), o.to_string(), verdict, note);
            }
        }
        Err(e) => rows.push(label, predicted.to_string(), "error".into(), Verdict::Undefined, e.to_string()),
    }
    Ok(())
}

/// Literal equality of two counting polynomials plus equality restricted to
/// sizes at least the semitotal number.
fn polynomial_rows(rows: &mut Rows, g: &Graph, rule: WitnessRule, ctx: &Ctx) -> Result<()> {
    let label = name(g);
    let plain = count(g, DominationVariant::Plain, ctx);
    let semitotal = count(g, semi(rule), ctx);
    let (plain, semitotal) = match (plain, semitotal) {
        (Ok(a), Ok(b)) => (a, b),
        (Err(e), _) | (_, Err(e)) => {
            rows.push(label, "-".into(), "error".into(), Verdict::Undefined, e.to_string());
            return Ok(());
        }
    };
    let diff = plain.first_difference(&semitotal);
    let verdict = if diff.is_none() { Verdict::Pass } else { Verdict::Fail };
    let note = diff.map_or(String::new(), |i| format!("first_difference={i}"));
    rows.push(label.clone(), plain.to_string(), semitotal.to_string(), verdict, note);

    match semitotal.lowest_degree() {
        Some(gt2) => {
            let a = plain.truncated_below(gt2);
            let b = semitotal.truncated_below(gt2);
            let verdict = if a.equals(&b) { Verdict::Pass } else { Verdict::Fail };
            let note = a
                .first_difference(&b)
                .map_or(format!("sizes >= {gt2}"), |i| format!("sizes >= {gt2}; first_difference={i}"));
            rows.push(format!("{label} [i>=γt2]"), a.to_string(), b.to_string(), verdict, note);
        }
        None => rows.push(
            format!("{label} [i>=γt2]"),
            plain.to_string(),
            "undefined".into(),
            Verdict::Undefined,
            "no valid set exists".into(),
        ),
    }
    Ok(())
}

fn path_cycle_ceiling(n: usize) -> i64 {
    ceil_div(2 * n as i64, 5)
}

/// Predicted `γ_t2(P_n) - γ(P_n)` from the published case table.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum PathGap {
    Exactly(i64),
    AtLeast(i64),
}

impl fmt::Display for PathGap {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            PathGap::Exactly(v) => write!(f, "{v}"),
            PathGap::AtLeast(v) => write!(f, ">={v}"),
        }
    }
}

impl PathGap {
    pub fn accepts(self, v: i64) -> bool {
        match self {
            PathGap::Exactly(x) => v == x,
            PathGap::AtLeast(x) => v >= x,
        }
    }
}

/// The case table; `None` where no row covers `n`.
pub fn path_gap_table(n: usize) -> Option<PathGap> {
    let band = |lo: usize, hi: usize, skip: [usize; 3], value: i64| {
        ((lo..=hi).contains(&n) && !skip.contains(&n)).then_some(PathGap::Exactly(value))
    };
    if [4, 5, 7, 10].contains(&n) {
        return Some(PathGap::Exactly(0));
    }
    if (6..=22).contains(&n) && ![7, 10, 21, 18].contains(&n) {
        return Some(PathGap::Exactly(1));
    }
    band(23, 37, [25, 33, 36], 2)
        .or_else(|| band(38, 52, [40, 48, 51], 3))
        .or_else(|| band(53, 67, [55, 63, 66], 4))
        .or_else(|| band(68, 82, [70, 78, 81], 5))
        .or_else(|| (n >= 83 && n != 85).then_some(PathGap::AtLeast(6)))
}

/// Published stability for paths and cycles by residue of `n` mod 5.
pub fn path_cycle_stability_table(n: usize) -> i64 {
    match n % 5 {
        1 | 3 => 1,
        2 | 4 => 2,
        _ => 3,
    }
}

/// Published stability for wheels by residue of `n` mod 3.
pub fn wheel_stability_table(n: usize) -> i64 {
    match n % 3 {
        2 => 1,
        0 => 2,
        _ => 3,
    }
}

fn non_complete_small(max_n: usize) -> Vec<Graph> {
    let mut v = Vec::new();
    for n in 3..=6 {
        v.push(families::path(n).expect("path"));
    }
    for n in 4..=6 {
        v.push(families::cycle(n).expect("cycle"));
    }
    v.push(families::star(3).expect("star"));
    v.retain(|g| g.n() <= max_n);
    v
}

/// γ_t2 where a complete graph (including `K_1`) takes the convention value.
fn gt2_convention_aware(g: &Graph, rule: WitnessRule, ctx: &Ctx) -> Result<Option<i64>> {
    if g.is_complete() && ctx.conv.complete_graph_gamma_t2_is_one {
        return Ok(Some(1));
    }
    gt2(g, rule, ctx)
}

/// Result of checking the corona upper bound on one pair.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoronaCheck {
    pub lhs: Option<i64>,
    pub rhs: Option<i64>,
    /// `None` if either side is undefined.
    pub inequality_holds: Option<bool>,
    /// Checked only when `H` is complete.
    pub equality_holds: Option<bool>,
}

/// Checks `γ_t2(G∘H) <= γ_t2(G) + γ_t2(H)·(|V(G)| - γ_t2(G))`, and equality
/// when `H` is complete.
pub fn corona_bound_check(g: &Graph, h: &Graph, rule: WitnessRule, conv: Conventions) -> Result<CoronaCheck> {
    let ctx = Ctx {
        budget: ORACLE_BUDGET,
        conv,
    };
    let product = products::corona(g, h)?;
    if product.n() > ORACLE_BUDGET {
        return Err(crate::error::Error::BudgetExceeded {
            what: "oracle",
            n: product.n(),
            budget: ORACLE_BUDGET,
        });
    }
    let lhs = gt2(&product, rule, &ctx)?;
    let rhs = match (gt2_convention_aware(g, rule, &ctx)?, gt2_convention_aware(h, rule, &ctx)?) {
        (Some(a), Some(b)) => Some(a + b * (g.n() as i64 - a)),
        _ => None,
    };
    let inequality_holds = lhs.zip(rhs).map(|(l, r)| l <= r);
    let equality_holds = if h.is_complete() {
        lhs.zip(rhs).map(|(l, r)| l == r)
    } else {
        None
    };
    Ok(CoronaCheck {
        lhs,
        rhs,
        inequality_holds,
        equality_holds,
    })
}

fn in_half_tree_class(t: &Graph, members: &BTreeSet<String>) -> bool {
    let code = tree_code(t).expect("tree");
    members.contains(&code) || Some(&code) == tree_code(&families::star(3).expect("star")).as_ref()
}

fn half_order_graph_instances(budget: usize) -> Vec<Graph> {
    let mut v = Vec::new();
    let c4 = families::cycle(4).expect("cycle");
    v.push(families::cycle(6).expect("cycle"));
    v.push(families::cycle(8).expect("cycle"));
    v.push(c4.clone());
    let diamond = Graph::from_edges(4, [(0, 1), (0, 2), (1, 2), (1, 3), (2, 3)]).expect("diamond");
    v.push(diamond.with_name("K_4-e"));
    v.push(families::complete(4).expect("complete"));
    let bases = [
        families::complete(2),
        families::path(3),
        families::complete(3),
        families::path(4),
        families::star(3),
        families::cycle(4),
    ];
    for h in bases.into_iter().flatten() {
        if 4 * h.n() <= budget {
            let d = products::identify_product(&h, &c4, 0).expect("fits");
            v.push(d.with_name(format!("{}<>C_4", name(&h))));
        }
    }
    v.retain(|g| g.n() <= budget);
    v
}

fn split_instances(budget: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    for (c, i) in [(3, 3), (3, 4), (4, 4), (4, 5), (5, 5), (3, 6), (5, 6), (6, 6)] {
        if c + i > budget {
            continue;
        }
        // first seed giving a split graph with no dominating vertex
        for seed in 1..=200u64 {
            if let Ok(g) = families::random_split_graph(c, i, 0.5, seed) {
                if !has_dominating_vertex(&g) {
                    out.push(g);
                    break;
                }
            }
        }
    }
    out
}

fn connected_corpus(budget: usize) -> Vec<Graph> {
    family_corpus(budget)
        .into_iter()
        .filter(|g| g.n() >= 4 && g.is_connected())
        .collect()
}

/// Naive count by checking every subset with the membership predicate.
fn naive_count(g: &Graph, variant: DominationVariant, conv: Conventions) -> Result<CountPolynomial> {
    let n = g.n();
    let mut c = vec![0u64; n + 1];
    for k in 0..=n {
        for d in subsets::lexicographic(n, k) {
            if is_valid(g, d, variant)? {
                c[k] += 1;
            }
        }
    }
    if conv.complete_graph_gamma_t2_is_one && matches!(variant, DominationVariant::Semitotal(_)) && g.is_complete() {
        c[1] += n as u64;
    }
    Ok(CountPolynomial::from_u64s(&c))
}

/// Stability recomputed without memoization, using the brute-force number.
fn naive_stability(g: &Graph, rule: WitnessRule, conv: Conventions) -> Result<Option<i64>> {
    let base = brute_force_number(g, semi(rule), conv)?;
    let n = g.n();
    for k in 1..n {
        for removed in subsets::lexicographic(n, k) {
            let (h, _) = g.delete_vertices(removed);
            if !h.is_isolate_free() {
                continue;
            }
            match brute_force_number(&h, semi(rule), conv)? {
                None => continue,
                v if v != base => return Ok(Some(k as i64)),
                _ => {}
            }
        }
    }
    Ok(None)
}

// ---------------------------------------------------------------- checks

fn t1_i(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 3..=ctx.budget {
        let predicted = path_cycle_ceiling(n);
        for g in [families::path(n)?, families::cycle(n)?] {
            let note = if g.is_complete() { "complete graph" } else { "" };
            rows.compare(name(&g), predicted, gt2(&g, rule, ctx), |v| *v == predicted, note);
        }
    }
    Ok(())
}

fn t1_ii(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 4..=ctx.budget {
        let g = families::wheel(n)?;
        let predicted = ceil_div(n as i64 - 1, 3);
        let note = if n == 4 { "W_4 = K_4, complete-graph convention" } else { "" };
        rows.compare(name(&g), predicted, gt2(&g, rule, ctx), |v| *v == predicted, note);
    }
    Ok(())
}

fn t1_iii(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in (1..).take_while(|n| 2 * n < ctx.budget) {
        let g = families::friendship(n)?;
        rows.exact(name(&g), n as i64, gt2(&g, rule, ctx));
    }
    Ok(())
}

fn t1_iv(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in (1..).take_while(|n| 2 * n + 2 <= ctx.budget) {
        let g = families::book(n)?;
        rows.exact(name(&g), n as i64 + 1, gt2(&g, rule, ctx));
    }
    Ok(())
}

fn t1_v(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for m in 2..ctx.budget {
        for n in m..=ctx.budget - m {
            let predicted = if n <= 4 {
                m.min(n) as i64
            } else if m >= 5 {
                4
            } else {
                continue;
            };
            let g = families::complete_bipartite(m, n)?;
            rows.exact(name(&g), predicted, gt2(&g, rule, ctx));
        }
    }
    Ok(())
}

fn t22_i(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 1..=ctx.budget {
        if let Some(gap) = path_gap_table(n) {
            let arith = path_cycle_ceiling(n) - ceil_div(n as i64, 3);
            rows.compare(
                format!("arith n={n}"),
                gap,
                Ok(Some(arith)),
                |v| gap.accepts(*v),
                "ceil(2n/5) - ceil(n/3)",
            );
        }
    }
    for n in 1..=ctx.budget.min(PATH_DIFFERENCE_ORACLE_LIMIT) {
        if let Some(gap) = path_gap_table(n) {
            let g = families::path(n)?;
            rows.compare(name(&g), gap, difference(&g, rule, ctx), |v| gap.accepts(*v), "");
        }
    }
    Ok(())
}

fn t22_ii(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    if ctx.budget >= 10 {
        let p = families::petersen();
        let note = format!(
            "γ={}, γt2={}",
            gamma(&p)?.map_or("undefined".into(), |v| v.to_string()),
            gt2(&p, rule, ctx)?.map_or("undefined".into(), |v| v.to_string())
        );
        rows.compare("Petersen", 0, difference(&p, rule, ctx), |v| *v == 0, note);
    }
    Ok(())
}

fn t22_iii(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in (1..).take_while(|n| 2 * n + 2 <= ctx.budget) {
        let g = families::book(n)?;
        rows.exact(name(&g), n as i64 - 1, difference(&g, rule, ctx));
    }
    Ok(())
}

fn t22_iv(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in (1..).take_while(|n| 2 * n < ctx.budget) {
        let g = families::friendship(n)?;
        rows.exact(name(&g), n as i64 - 1, difference(&g, rule, ctx));
    }
    Ok(())
}

fn t22_v(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 2..ctx.budget {
        let g = families::star(n)?;
        rows.exact(name(&g), n as i64 - 1, difference(&g, rule, ctx));
    }
    Ok(())
}

fn t22_vi(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 4..=ctx.budget {
        let g = families::wheel(n)?;
        rows.exact(name(&g), ceil_div(n as i64 - 1, 3) - 1, difference(&g, rule, ctx));
    }
    Ok(())
}

fn t22_vii(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for m in 2..ctx.budget {
        for n in m..=ctx.budget - m {
            let g = families::complete_bipartite(m, n)?;
            let predicted = if m <= 4 { m as i64 - 2 } else { 2 };
            rows.exact(name(&g), predicted, difference(&g, rule, ctx));
        }
    }
    Ok(())
}

fn t_corona(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    let lefts = [
        families::path(2)?,
        families::path(3)?,
        families::path(4)?,
        families::cycle(3)?,
        families::cycle(4)?,
        families::cycle(5)?,
    ];
    let rights = [
        families::complete(1)?,
        families::complete(2)?,
        families::complete(3)?,
        families::path(3)?,
        families::cycle(4)?,
    ];
    for g in &lefts {
        for h in &rights {
            if g.n() * (1 + h.n()) > ctx.budget {
                continue;
            }
            let label = format!("{}o{}", name(g), name(h));
            match corona_bound_check(g, h, rule, ctx.conv) {
                Ok(c) => {
                    let rhs = c.rhs.map_or("undefined".to_string(), |v| v.to_string());
                    rows.compare(label.clone(), format!("<={rhs}"), Ok(c.lhs), |_| c.inequality_holds == Some(true), "");
                    if h.is_complete() {
                        rows.compare(format!("{label} sharp"), rhs, Ok(c.lhs), |_| c.equality_holds == Some(true), "");
                    }
                }
                Err(e) => rows.push(label, "-".into(), "error".into(), Verdict::Undefined, e.to_string()),
            }
        }
    }
    Ok(())
}

fn min_defined(values: &[Option<i64>], cap: i64) -> i64 {
    values.iter().flatten().copied().fold(cap, i64::min)
}

fn t_join(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    let pool = non_complete_small(ctx.budget);
    for (i, g) in pool.iter().enumerate() {
        for h in &pool[i..] {
            if g.n() + h.n() > ctx.budget {
                continue;
            }
            let (a, b) = (gt2(g, rule, ctx)?, gt2(h, rule, ctx)?);
            let predicted = min_defined(&[a, b], 4);
            let j = products::join(g, h)?;
            let show = |v: Option<i64>| v.map_or("undefined".to_string(), |x| x.to_string());
            rows.compare(
                format!("{}v{}", name(g), name(h)),
                predicted,
                gt2(&j, rule, ctx),
                |v| *v == predicted,
                format!("γt2(G)={}, γt2(H)={}", show(a), show(b)),
            );
        }
    }
    Ok(())
}

fn t_join_k(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for k in 1..=3 {
        let g = families::complete(k)?;
        for h in non_complete_small(ctx.budget) {
            if g.n() + h.n() > ctx.budget {
                continue;
            }
            let j = products::join(&g, &h)?;
            let label = format!("{}v{}", name(&g), name(&h));
            match gt2(&h, rule, ctx)? {
                Some(p) => rows.exact(label, p, gt2(&j, rule, ctx)),
                None => rows.push(
                    label,
                    "undefined".into(),
                    gt2(&j, rule, ctx)?.map_or("undefined".into(), |v| v.to_string()),
                    Verdict::Undefined,
                    "γt2(H) undefined".into(),
                ),
            }
        }
    }
    Ok(())
}

fn grid_formula(n: usize, m: usize) -> i64 {
    let a = path_cycle_ceiling(n);
    let (n, m) = (n as i64, m as i64);
    a * ceil_div(m, 3) + (m / 3) * (n - a)
}

fn t_grid(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 2..=4 {
        for m in 2..=4 {
            if n * m > ctx.budget {
                continue;
            }
            let g = families::grid(n, m)?;
            rows.exact(name(&g), grid_formula(n, m), gt2(&g, rule, ctx));
        }
    }
    Ok(())
}

fn c_count_star(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 3..ctx.budget {
        coefficient_rows(rows, &families::star(n)?, ClosedFormFamily::Star { n }, rule, ctx)?;
    }
    Ok(())
}

fn c_count_kmn_small(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for m in 2..=3 {
        for n in m..=ctx.budget.saturating_sub(m) {
            let g = families::complete_bipartite(m, n)?;
            coefficient_rows(rows, &g, ClosedFormFamily::BipartiteSmall { m, n }, rule, ctx)?;
        }
    }
    Ok(())
}

fn c_count_kmn_large(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for m in 4..ctx.budget {
        for n in m..=ctx.budget.saturating_sub(m) {
            let g = families::complete_bipartite(m, n)?;
            coefficient_rows(rows, &g, ClosedFormFamily::BipartiteLarge { m, n }, rule, ctx)?;
        }
    }
    Ok(())
}

fn c_count_fn(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in (2..).take_while(|n| 2 * n < ctx.budget) {
        let g = families::friendship(n)?;
        coefficient_rows(rows, &g, ClosedFormFamily::Friendship { n }, rule, ctx)?;
    }
    Ok(())
}

fn l_half(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for g in connected_corpus(ctx.budget) {
        let half = g.n() as i64 / 2;
        rows.compare(name(&g), format!("<={half}"), gt2(&g, rule, ctx), |v| *v <= half, "");
    }
    Ok(())
}

fn p_sandwich(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for g in connected_corpus(ctx.budget).into_iter().filter(|g| !g.is_complete()) {
        let values = (|| -> Result<Option<(i64, i64, i64)>> {
            Ok(match (gamma(&g)?, gt2(&g, rule, ctx)?, gamma_t(&g)?) {
                (Some(a), Some(b), Some(c)) => Some((a, b, c)),
                _ => None,
            })
        })();
        let shown = values.clone().map(|o| o.map(|(a, b, c)| format!("{a}<={b}<={c}")));
        let holds = matches!(values, Ok(Some((a, b, c))) if a <= b && b <= c);
        rows.compare(name(&g), "γ<=γt2<=γt", shown, |_| holds, "");
    }
    Ok(())
}

fn t_half(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    let members = tree_family_members(ctx.budget);
    for t in &members {
        let half = t.n() as i64 / 2;
        rows.exact(format!("fwd {}", name(t)), half, gt2(t, rule, ctx));
    }
    if ctx.budget >= 4 {
        rows.exact("fwd K_1,3", 2, gt2(&families::star(3)?, rule, ctx));
    }
    let codes: BTreeSet<String> = members.iter().filter_map(tree_code).collect();
    for n in 4..=ctx.budget.min(TREE_ENUMERATION_LIMIT) {
        for (i, t) in free_trees(n).iter().enumerate() {
            let member = in_half_tree_class(t, &codes);
            let predicted = if member { "n/2" } else { "<n/2" };
            let oracle = gt2(t, rule, ctx).map(|o| o.map(|v| if 2 * v == n as i64 { "n/2" } else { "<n/2" }));
            rows.compare(format!("rev n={n} #{i}"), predicted, oracle, |v| *v == predicted, "");
        }
    }
    Ok(())
}

fn t_halfgraph(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for g in half_order_graph_instances(ctx.budget) {
        let note = if g.is_complete() { "complete graph" } else { "" };
        let half = g.n() as i64 / 2;
        rows.compare(name(&g), half, gt2(&g, rule, ctx), |v| *v == half, note);
    }
    Ok(())
}

fn t_poly_t(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for t in tree_family_members(ctx.budget) {
        polynomial_rows(rows, &t, rule, ctx)?;
    }
    Ok(())
}

fn t_poly_diamond(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    let c4 = families::cycle(4)?;
    let bases = [
        families::complete(1)?,
        families::complete(2)?,
        families::path(3)?,
        families::complete(3)?,
        families::path(4)?,
        families::star(3)?,
    ];
    for h in bases {
        if 4 * h.n() > ctx.budget {
            continue;
        }
        let g = products::identify_product(&h, &c4, 0)?.with_name(format!("{}<>C_4", name(&h)));
        polynomial_rows(rows, &g, rule, ctx)?;
    }
    Ok(())
}

fn t_split(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for g in split_instances(ctx.budget) {
        let label = name(&g);
        let d = count(&g, DominationVariant::Plain, ctx)?;
        for (tag, variant) in [("D_t2", semi(rule)), ("D_t", DominationVariant::Total)] {
            let other = count(&g, variant, ctx)?;
            let diff = d.first_difference(&other);
            let verdict = if diff.is_none() { Verdict::Pass } else { Verdict::Fail };
            let note = diff.map_or(String::new(), |i| format!("first_difference={i}"));
            rows.push(format!("{label} {tag}"), d.to_string(), other.to_string(), verdict, note);
        }
    }
    Ok(())
}

fn d_poly(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for g in family_corpus(ctx.budget.min(10)) {
        let variant = semi(rule);
        let naive = naive_count(&g, variant, ctx.conv)?;
        let fast = count(&g, variant, ctx)?;
        let verdict = if naive.equals(&fast) { Verdict::Pass } else { Verdict::Fail };
        rows.push(name(&g), naive.to_string(), fast.to_string(), verdict, String::new());
    }
    Ok(())
}

fn d_stab(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for g in family_corpus(ctx.budget.min(8)) {
        let naive = naive_stability(&g, rule, ctx.conv)?;
        let (fast, note) = stability(&g, rule, ctx);
        match naive {
            Some(p) => rows.compare(name(&g), p, fast, |v| *v == p, note),
            None => {
                let fast = fast?;
                let verdict = if fast.is_none() { Verdict::Undefined } else { Verdict::Fail };
                let shown = fast.map_or("undefined".into(), |v| v.to_string());
                rows.push(name(&g), "undefined".into(), shown, verdict, "no removal changes γt2".into());
            }
        }
    }
    Ok(())
}

fn t4_stab_kmn(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for m in 2..ctx.budget {
        for n in m..=ctx.budget - m {
            let g = families::complete_bipartite(m, n)?;
            let predicted = match m {
                2 => 0,
                3 | 4 => 1,
                _ => m as i64 - 3,
            };
            let label = if m == 2 { " (published 0)" } else { "" };
            stability_row(rows, &g, predicted, rule, ctx, label);
        }
    }
    Ok(())
}

fn t4_stab_path(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 4..=ctx.budget {
        stability_row(rows, &families::path(n)?, path_cycle_stability_table(n), rule, ctx, "");
    }
    Ok(())
}

fn t4_stab_cycle(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 4..=ctx.budget {
        stability_row(rows, &families::cycle(n)?, path_cycle_stability_table(n), rule, ctx, "");
    }
    Ok(())
}

fn t4_stab_wheel(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 5..=ctx.budget {
        stability_row(rows, &families::wheel(n)?, wheel_stability_table(n), rule, ctx, "");
    }
    Ok(())
}

fn t4_stab_joinpaths(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 5..ctx.budget {
        for m in n..=ctx.budget - n {
            let predicted = if (5..=10).contains(&n) && m > n {
                path_cycle_stability_table(n)
            } else if n > 10 {
                n as i64 - 7
            } else {
                continue;
            };
            let g = products::join(&families::path(n)?, &families::path(m)?)?.with_name(format!("P_{n}vP_{m}"));
            stability_row(rows, &g, predicted, rule, ctx, "");
        }
    }
    Ok(())
}

fn t4_stab_grid(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in 2..=4 {
        for m in 2..=4 {
            if n * m > ctx.budget {
                continue;
            }
            stability_row(rows, &families::grid(n, m)?, path_cycle_ceiling(n), rule, ctx, "");
        }
    }
    Ok(())
}

fn t4_stab_fbs(ctx: &Ctx, rule: WitnessRule, rows: &mut Rows) -> Result<()> {
    for n in (2..).take_while(|n| 2 * n < ctx.budget) {
        stability_row(rows, &families::friendship(n)?, 2, rule, ctx, "");
    }
    for n in (1..).take_while(|n| 2 * n + 2 <= ctx.budget) {
        let g = families::book(n)?;
        stability_row(rows, &g, 1, rule, ctx, " (statement)");
        stability_row(rows, &g, 2, rule, ctx, " (proof)");
    }
    for n in 2..ctx.budget {
        stability_row(rows, &families::star(n)?, 1, rule, ctx, "");
    }
    Ok(())
}

macro_rules! claim {
    ($id:expr, $desc:expr, $f:ident) => {
        Claim {
            id: $id,
            description: $desc,
            check: $f,
        }
    };
}

/// Every registered claim, in report order.
pub fn registry() -> Vec<Claim> {
    vec![
        claim!("P-sandwich", "γ <= γt2 <= γt on isolate-free graphs", p_sandwich),
        claim!("T1.i", "γt2(P_n) = γt2(C_n) = ceil(2n/5), n >= 3", t1_i),
        claim!("T1.ii", "γt2(W_n) = ceil((n-1)/3), wheel of order n", t1_ii),
        claim!("T1.iii", "γt2(F_n) = n", t1_iii),
        claim!("T1.iv", "γt2(B_n) = n+1, B_n = K_1,n □ P_2", t1_iv),
        claim!("T1.v", "γt2(K_m,n) = min{m,n} for 2<=m,n<=4; 4 for m,n>=5", t1_v),
        claim!("T2.2.i", "γt2(P_n) - γ(P_n) case table", t22_i),
        claim!("T2.2.ii", "γt2(Petersen) = γ(Petersen)", t22_ii),
        claim!("T2.2.iii", "γt2(B_n) = γ(B_n) + n - 1", t22_iii),
        claim!("T2.2.iv", "γt2(F_n) - γ(F_n) = n - 1", t22_iv),
        claim!("T2.2.v", "γt2(S_n) - γ(S_n) = n - 1", t22_v),
        claim!("T2.2.vi", "γt2(W_n) - γ(W_n) = ceil((n-1)/3) - 1", t22_vi),
        claim!("T2.2.vii", "γt2(K_m,n) - γ(K_m,n) = m-2 (2<=m<=4), 2 (m>=5)", t22_vii),
        claim!("T-corona", "γt2(G∘H) <= γt2(G) + γt2(H)(|V(G)| - γt2(G)), sharp for complete H", t_corona),
        claim!("T-join", "γt2(G∨H) = min{γt2(G), γt2(H), 4} for non-complete G, H of order >= 3", t_join),
        claim!("T-joinK", "γt2(K_k∨H) = γt2(H) for non-complete H", t_join_k),
        claim!("T-grid", "γt2(P_n□P_m) = ceil(2n/5)ceil(m/3) + floor(m/3)(n - ceil(2n/5))", t_grid),
        claim!("C-COUNT-star", "D_t2(K_1,n, x) = x^n", c_count_star),
        claim!("C-COUNT-Kmn-small", "d_t2(K_m,n, i) piecewise formula, m <= 3 <= n", c_count_kmn_small),
        claim!("C-COUNT-Kmn-large", "d_t2(K_m,n, i) piecewise formula, 4 <= m <= n", c_count_kmn_large),
        claim!("C-COUNT-Fn", "d_t2(F_n, i) = 2^n C(n, i-n)", c_count_fn),
        claim!("D-poly", "D_t2(G, x) = sum of d_t2(G, i) x^i", d_poly),
        claim!("L-half", "γt2(G) <= n/2 for connected G, n >= 4", l_half),
        claim!("T-half", "tree T, n >= 4: γt2(T) = n/2 iff T in the pendant-path family or T = K_1,3", t_half),
        claim!("T-halfgraph", "min degree >= 2: γt2 = n/2 for C_6, C_8, spanning subgraphs of K_4, H⋄C_4", t_halfgraph),
        claim!("T-poly-T", "D_t2(T, x) = D(T, x) for T in the pendant-path family", t_poly_t),
        claim!("T-poly-diamond", "D_t2(H⋄C_4, x) = D(H⋄C_4, x)", t_poly_diamond),
        claim!("T-split", "D_t = D_t2 = D for connected split graphs without a dominating vertex", t_split),
        claim!("D-stab", "st_γt2(G) = fewest removed vertices changing γt2", d_stab),
        claim!("T4-stab-Kmn", "st(K_m,n) = 0 (m=2), 1 (3<=m<=4), m-3 (m>4)", t4_stab_kmn),
        claim!("T4-stab-path", "st(P_n) = 1 (n=5k+1,5k+3), 2 (5k+2,5k-1), 3 (5k)", t4_stab_path),
        claim!("T4-stab-cycle", "st(C_n) = 1 (n=5k+1,5k+3), 2 (5k+2,5k-1), 3 (5k)", t4_stab_cycle),
        claim!("T4-stab-wheel", "st(W_n) = 1 (n=3k+2), 2 (3k), 3 (3k+1)", t4_stab_wheel),
        claim!("T4-stab-joinpaths", "st(P_n∨P_m) = st(P_n) for 5<=n<=10<m; n-7 for 10<n<=m", t4_stab_joinpaths),
        claim!("T4-stab-grid", "st(P_n□P_m) = ceil(2n/5)", t4_stab_grid),
        claim!("T4-stab-FBS", "st(F_n) = 2, st(B_n) = 1 (proof: 2), st(S_n) = 1", t4_stab_fbs),
    ]
}

/// Frozen list of claim ids; the registry must match it exactly.
pub const CLAIM_MANIFEST: [&str; 36] = [
    "P-sandwich",
    "T1.i",
    "T1.ii",
    "T1.iii",
    "T1.iv",
    "T1.v",
    "T2.2.i",
    "T2.2.ii",
    "T2.2.iii",
    "T2.2.iv",
    "T2.2.v",
    "T2.2.vi",
    "T2.2.vii",
    "T-corona",
    "T-join",
    "T-joinK",
    "T-grid",
    "C-COUNT-star",
    "C-COUNT-Kmn-small",
    "C-COUNT-Kmn-large",
    "C-COUNT-Fn",
    "D-poly",
    "L-half",
    "T-half",
    "T-halfgraph",
    "T-poly-T",
    "T-poly-diamond",
    "T-split",
    "D-stab",
    "T4-stab-Kmn",
    "T4-stab-path",
    "T4-stab-cycle",
    "T4-stab-wheel",
    "T4-stab-joinpaths",
    "T4-stab-grid",
    "T4-stab-FBS",
];

/// Comma-separated glob patterns over claim ids (`T1.*`, `C-COUNT-*,L-half`).
pub struct ClaimFilter(Vec<glob::Pattern>);

impl ClaimFilter {
    pub fn new(spec: &str) -> Result<Self> {
        let pats = spec
            .split(',')
            .map(str::trim)
            .filter(|s| !s.is_empty())
            .map(|s| glob::Pattern::new(s).map_err(|e| domain(format!("bad claim pattern {s:?}: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Ok(ClaimFilter(pats))
    }

    pub fn matches(&self, id: &str) -> bool {
        self.0.is_empty() || self.0.iter().any(|p| p.matches(id))
    }
}

fn run_one(claim: &Claim, ctx: &Ctx) -> (Vec<ReportRow>, ClaimSummary) {
    let mut all = Vec::new();
    let mut tallies = [RuleTally::default(); 2];
    for (slot, rule) in WitnessRule::BOTH.into_iter().enumerate() {
        let mut rows = Rows::new(claim.id, rule);
        if let Err(e) = (claim.check)(ctx, rule, &mut rows) {
            rows.push("(check aborted)", "-".into(), "error".into(), Verdict::Undefined, e.to_string());
        }
        if rows.rows.is_empty() {
            rows.push(
                "(none within budget)",
                "-".into(),
                "-".into(),
                Verdict::NotApplicable,
                String::new(),
            );
        }
        for r in &rows.rows {
            let t = &mut tallies[slot];
            match r.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::Undefined => t.undefined += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
            }
        }
        all.extend(rows.rows);
    }
    let [within2, exact2] = tallies;
    let passes_only_under = match (within2.all_pass(), exact2.all_pass()) {
        (true, false) => Some(WitnessRule::WithinTwo),
        (false, true) => Some(WitnessRule::ExactlyTwo),
        _ => None,
    };
    let summary = ClaimSummary {
        claim: claim.id.to_string(),
        description: claim.description.to_string(),
        within2,
        exact2,
        passes_only_under,
    };
    (all, summary)
}

/// Runs every claim whose id matches `filter` on instances of at most
/// `budget` vertices (capped at the oracle budget).
pub fn run_claims(filter: &str, budget: usize, conv: Conventions) -> Result<VerificationReport> {
    let filter = ClaimFilter::new(filter)?;
    let ctx = Ctx {
        budget: budget.min(ORACLE_BUDGET),
        conv,
    };
    let selected: Vec<Claim> = registry().into_iter().filter(|c| filter.matches(c.id)).collect();
    let results: Vec<(Vec<ReportRow>, ClaimSummary)> = selected.par_iter().map(|c| run_one(c, &ctx)).collect();
    let mut report = Vec::new();
    let mut summary = Vec::new();
    for (rows, s) in results {
        report.extend(rows);
        summary.push(s);
    }
    Ok(VerificationReport {
        budget: ctx.budget,
        conventions: conv,
        report,
        summary,
    })
}

/// Both directions of the half-order characterizations under the
/// within-distance-two rule, with the bare definition (no complete-graph
/// convention).
pub fn half_order_characterization_check(budget: usize) -> Result<VerificationReport> {
    let ctx = Ctx {
        budget: budget.min(TREE_ENUMERATION_LIMIT),
        conv: Conventions::OFF,
    };
    let mut report = Vec::new();
    let mut summary = Vec::new();
    for claim in registry().into_iter().filter(|c| c.id == "T-half" || c.id == "T-halfgraph") {
        let mut rows = Rows::new(claim.id, WitnessRule::WithinTwo);
        (claim.check)(&ctx, WitnessRule::WithinTwo, &mut rows)?;
        let mut t = RuleTally::default();
        for r in &rows.rows {
            match r.verdict {
                Verdict::Pass => t.pass += 1,
                Verdict::Fail => t.fail += 1,
                Verdict::Undefined => t.undefined += 1,
                Verdict::NotApplicable => t.not_applicable += 1,
            }
        }
        report.extend(rows.rows);
        summary.push(ClaimSummary {
            claim: claim.id.to_string(),
            description: claim.description.to_string(),
            within2: t,
            exact2: RuleTally::default(),
            passes_only_under: None,
        });
    }
    Ok(VerificationReport {
        budget: ctx.budget,
        conventions: ctx.conv,
        report,
        summary,
    })
}

/// Exposed for the residue cache in tests of stability consistency.
pub fn residue_value(g: &Graph, removed: crate::graph::VertexSet, rule: WitnessRule, conv: Conventions) -> Result<Residue> {
    ResidueCache::new(rule, conv).residue(g, removed)
}
