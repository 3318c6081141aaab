//! Membership tests, branch-and-bound minimization, brute-force oracle and
//! exhaustive counting for plain, total and semitotal domination.

use std::fmt;
use std::str::FromStr;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::polynomial::CountPolynomial;
use crate::subsets;

/// Largest graph the brute-force oracle will search.
pub const ORACLE_BUDGET: usize = 22;
/// Largest graph whose `2^n` subsets `count_by_size` will enumerate.
pub const COUNT_BUDGET: usize = 24;

/// Which distance qualifies another member of `D` as a witness.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum WitnessRule {
    /// Some other member at distance 1 or 2.
    #[serde(rename = "within2")]
    WithinTwo,
    /// Some other member at distance exactly 2; adjacency does not count.
    #[serde(rename = "exact2")]
    ExactlyTwo,
}

impl WitnessRule {
    pub const BOTH: [WitnessRule; 2] = [WitnessRule::WithinTwo, WitnessRule::ExactlyTwo];

    /// Members of `D` that can witness `v` under this rule.
    pub fn region(self, g: &Graph, v: usize) -> VertexSet {
        match self {
            WitnessRule::WithinTwo => g.ball2(v),
            WitnessRule::ExactlyTwo => g.sphere2(v),
        }
    }

    pub fn as_str(self) -> &'static str {
        match self {
            WitnessRule::WithinTwo => "within2",
            WitnessRule::ExactlyTwo => "exact2",
        }
    }
}

impl fmt::Display for WitnessRule {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

impl FromStr for WitnessRule {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "within2" => Ok(WitnessRule::WithinTwo),
            "exact2" => Ok(WitnessRule::ExactlyTwo),
            _ => Err(domain(format!("unknown witness rule {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum DominationVariant {
    Plain,
    Total,
    Semitotal(WitnessRule),
}

impl DominationVariant {
    pub fn needs_isolate_free(self) -> bool {
        !matches!(self, DominationVariant::Plain)
    }
}

impl fmt::Display for DominationVariant {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            DominationVariant::Plain => f.write_str("plain"),
            DominationVariant::Total => f.write_str("total"),
            DominationVariant::Semitotal(r) => write!(f, "semitotal/{r}"),
        }
    }
}

/// Special cases layered over the bare definitions.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize, Deserialize)]
pub struct Conventions {
    /// Treat the semitotal number of a complete graph as 1, and count its
    /// singletons as semitotal dominating sets. Applied only by the number
    /// and counting operations, never by `is_semitotal`.
    pub complete_graph_gamma_t2_is_one: bool,
}

impl Default for Conventions {
    fn default() -> Self {
        Conventions {
            complete_graph_gamma_t2_is_one: true,
        }
    }
}

impl Conventions {
    pub const OFF: Conventions = Conventions {
        complete_graph_gamma_t2_is_one: false,
    };

    fn applies(self, g: &Graph, variant: DominationVariant) -> bool {
        self.complete_graph_gamma_t2_is_one
            && matches!(variant, DominationVariant::Semitotal(_))
            && g.is_complete()
    }
}

fn check_input(g: &Graph, variant: DominationVariant) -> Result<()> {
    if g.n() == 0 {
        return Err(Error::EmptyGraph);
    }
    if variant.needs_isolate_free() && !g.is_isolate_free() {
        return Err(Error::IsolatePresent);
    }
    Ok(())
}

/// Per-vertex regions for one graph and variant, so that every feasibility
/// test is a handful of word operations.
#[derive(Debug, Clone)]
pub(crate) struct Regions {
    pub variant: DominationVariant,
    pub all: VertexSet,
    /// Sets covered by choosing `v`: `N[v]`, or `N(v)` for total domination.
    pub cover: Vec<VertexSet>,
    /// Witness regions for semitotal domination; empty otherwise.
    pub witness: Vec<VertexSet>,
}

impl Regions {
    pub fn new(g: &Graph, variant: DominationVariant) -> Self {
        let n = g.n();
        let cover = (0..n)
            .map(|v| match variant {
                DominationVariant::Total => g.neighbors(v),
                _ => g.closed(v),
            })
            .collect();
        let witness = match variant {
            DominationVariant::Semitotal(rule) => (0..n).map(|v| rule.region(g, v)).collect(),
            _ => Vec::new(),
        };
        Regions {
            variant,
            all: g.vertices(),
            cover,
            witness,
        }
    }

    fn union(regions: &[VertexSet], d: VertexSet) -> VertexSet {
        d.iter().fold(VertexSet::EMPTY, |acc, v| acc | regions[v])
    }

    pub fn covered(&self, d: VertexSet) -> VertexSet {
        Self::union(&self.cover, d)
    }

    /// Members of `d` with no witness inside `d`. The witness relation is
    /// symmetric, so the witnessed members are `d ∩ ⋃_{u∈d} W(u)`.
    pub fn unwitnessed(&self, d: VertexSet) -> VertexSet {
        if self.witness.is_empty() {
            return VertexSet::EMPTY;
        }
        d - Self::union(&self.witness, d)
    }

    pub fn feasible(&self, d: VertexSet) -> bool {
        self.covered(d) == self.all && self.unwitnessed(d).is_empty()
    }
}

/// `⋃_{v∈D} N[v] = V`.
pub fn is_dominating(g: &Graph, d: VertexSet) -> bool {
    d.is_subset(g.vertices()) && d.iter().fold(VertexSet::EMPTY, |acc, v| acc | g.closed(v)) == g.vertices()
}

/// `⋃_{v∈D} N(v) = V`.
pub fn is_total_dominating(g: &Graph, d: VertexSet) -> Result<bool> {
    check_input(g, DominationVariant::Total)?;
    Ok(d.is_subset(g.vertices()) && Regions::new(g, DominationVariant::Total).feasible(d))
}

/// Dominating, and every member has another member as witness under `rule`.
/// A singleton never qualifies here, complete graph or not.
pub fn is_semitotal(g: &Graph, d: VertexSet, rule: WitnessRule) -> Result<bool> {
    let variant = DominationVariant::Semitotal(rule);
    check_input(g, variant)?;
    Ok(d.is_subset(g.vertices()) && Regions::new(g, variant).feasible(d))
}

/// Membership test for any variant.
pub fn is_valid(g: &Graph, d: VertexSet, variant: DominationVariant) -> Result<bool> {
    match variant {
        DominationVariant::Plain => {
            check_input(g, variant)?;
            Ok(is_dominating(g, d))
        }
        DominationVariant::Total => is_total_dominating(g, d),
        DominationVariant::Semitotal(rule) => is_semitotal(g, d, rule),
    }
}

/// Minimum size of a valid set, or `None` when none exists.
///
/// Branch and bound: while something is undominated, branch on the members
/// of the lowest-index undominated vertex's neighborhood; once dominated,
/// branch on the witness region of the lowest-index member that still lacks
/// a witness. Each branch excludes the candidates tried before it.
pub fn domination_number(g: &Graph, variant: DominationVariant, conv: Conventions) -> Result<Option<usize>> {
    Ok(minimum_set(g, variant, conv)?.map(|d| d.len()))
}

/// One optimal set found by the branch and bound, or `None`.
pub fn minimum_set(g: &Graph, variant: DominationVariant, conv: Conventions) -> Result<Option<VertexSet>> {
    check_input(g, variant)?;
    if conv.applies(g, variant) {
        return Ok(Some(VertexSet::singleton(0)));
    }
    let regions = Regions::new(g, variant);
    let max_cover = regions.cover.iter().map(|s| s.len()).max().unwrap_or(1).max(1);
    let mut search = Search {
        regions: &regions,
        max_cover,
        best: g.n() + 1,
        best_set: None,
    };
    search.run(VertexSet::EMPTY, VertexSet::EMPTY);
    Ok(search.best_set)
}

struct Search<'a> {
    regions: &'a Regions,
    max_cover: usize,
    best: usize,
    best_set: Option<VertexSet>,
}

impl Search<'_> {
    fn run(&mut self, chosen: VertexSet, excluded: VertexSet) {
        let k = chosen.len();
        if k >= self.best {
            return;
        }
        let covered = self.regions.covered(chosen);
        let open = self.regions.all - covered;
        if let Some(u) = open.first() {
            let lower = open.len().div_ceil(self.max_cover);
            if k + lower >= self.best {
                return;
            }
            let pool = match self.regions.variant {
                DominationVariant::Total => self.regions.cover[u],
                _ => self.regions.cover[u] | VertexSet::singleton(u),
            };
            let mut cands: Vec<(usize, usize)> = (pool - excluded - chosen)
                .iter()
                .map(|c| ((self.regions.cover[c] & open).len(), c))
                .collect();
            cands.sort_by(|a, b| b.0.cmp(&a.0).then(a.1.cmp(&b.1)));
            self.branch(chosen, excluded, cands.into_iter().map(|(_, c)| c));
            return;
        }
        if let Some(v) = self.regions.unwitnessed(chosen).first() {
            if k + 1 >= self.best {
                return;
            }
            let pool = self.regions.witness[v] - excluded - chosen;
            self.branch(chosen, excluded, pool.iter());
            return;
        }
        self.best = k;
        self.best_set = Some(chosen);
    }

    fn branch(&mut self, chosen: VertexSet, mut excluded: VertexSet, cands: impl Iterator<Item = usize>) {
        for c in cands {
            self.run(chosen | VertexSet::singleton(c), excluded);
            excluded.insert(c);
        }
    }
}

fn check_budget(g: &Graph, what: &'static str, budget: usize) -> Result<()> {
    if g.n() > budget {
        Err(Error::BudgetExceeded { what, n: g.n(), budget })
    } else {
        Ok(())
    }
}

/// Same contract as [`domination_number`], computed by scanning subsets in
/// order of increasing size and stopping at the first valid one.
pub fn brute_force_number(g: &Graph, variant: DominationVariant, conv: Conventions) -> Result<Option<usize>> {
    brute_force_number_with_budget(g, variant, conv, ORACLE_BUDGET)
}

pub fn brute_force_number_with_budget(
    g: &Graph,
    variant: DominationVariant,
    conv: Conventions,
    budget: usize,
) -> Result<Option<usize>> {
    check_input(g, variant)?;
    check_budget(g, "oracle", budget)?;
    if conv.applies(g, variant) {
        return Ok(Some(1));
    }
    let regions = Regions::new(g, variant);
    let n = g.n();
    Ok((0..=n).find(|&k| subsets::by_value(n, k).any(|d| regions.feasible(d))))
}

/// Lookup tables for one half of the vertex range: the union of per-vertex
/// regions for every subset of that half.
fn union_table(regions: &[VertexSet], offset: usize, bits: usize) -> Vec<u64> {
    let mut t = vec![0u64; 1 << bits];
    for mask in 1usize..1 << bits {
        let low = mask.trailing_zeros() as usize;
        t[mask] = t[mask & (mask - 1)] | regions[offset + low].0;
    }
    t
}

/// Number of valid sets of each size `0..=n`, by enumerating all `2^n`
/// subsets. Under the complete-graph convention the `n` singletons are
/// added to the size-1 count.
pub fn count_by_size(g: &Graph, variant: DominationVariant, conv: Conventions) -> Result<CountPolynomial> {
    check_input(g, variant)?;
    check_budget(g, "counting", COUNT_BUDGET)?;
    let n = g.n();
    let regions = Regions::new(g, variant);
    let lo = n.min(12);
    let hi = n - lo;
    let cover_lo = union_table(&regions.cover, 0, lo);
    let cover_hi = union_table(&regions.cover, lo, hi);
    let (wit_lo, wit_hi) = if regions.witness.is_empty() {
        (Vec::new(), Vec::new())
    } else {
        (
            union_table(&regions.witness, 0, lo),
            union_table(&regions.witness, lo, hi),
        )
    };
    let all = regions.all.0;
    let lo_count = 1usize << lo;

    let counts = (0..1usize << hi)
        .into_par_iter()
        .fold(
            || vec![0u64; n + 1],
            |mut acc, h| {
                let hbits = (h as u64) << lo;
                let hc = h.count_ones() as usize;
                let ch = cover_hi[h];
                for l in 0..lo_count {
                    if ch | cover_lo[l] != all {
                        continue;
                    }
                    if !wit_lo.is_empty() {
                        let d = hbits | l as u64;
                        if d & !(wit_hi[h] | wit_lo[l]) != 0 {
                            continue;
                        }
                    }
                    acc[hc + l.count_ones() as usize] += 1;
                }
                acc
            },
        )
        .reduce(
            || vec![0u64; n + 1],
            |mut a, b| {
                for (x, y) in a.iter_mut().zip(b) {
                    *x += y;
                }
                a
            },
        );
    let mut counts = counts;
    if conv.applies(g, variant) && n >= 1 {
        counts[1] += n as u64;
    }
    Ok(CountPolynomial::from_u64s(&counts))
}

/// Up to `limit` optimal sets in lexicographic order of their member lists.
pub fn minimum_sets(
    g: &Graph,
    variant: DominationVariant,
    conv: Conventions,
    limit: usize,
) -> Result<Vec<VertexSet>> {
    let Some(k) = domination_number(g, variant, conv)? else {
        return Ok(Vec::new());
    };
    let n = g.n();
    if conv.applies(g, variant) {
        return Ok((0..n).take(limit).map(VertexSet::singleton).collect());
    }
    let regions = Regions::new(g, variant);
    Ok(subsets::lexicographic(n, k)
        .filter(|&d| regions.feasible(d))
        .take(limit)
        .collect())
}

/// Semitotal number under `rule`.
pub fn semitotal_number(g: &Graph, rule: WitnessRule, conv: Conventions) -> Result<Option<usize>> {
    domination_number(g, DominationVariant::Semitotal(rule), conv)
}
