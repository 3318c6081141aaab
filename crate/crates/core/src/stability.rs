//! Semitotal domination stability: the fewest vertex removals that change
//! the semitotal number.

use std::collections::HashMap;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{domain, Error, Result};
use crate::graph::{Graph, VertexSet};
use crate::solvers::{semitotal_number, Conventions, WitnessRule, ORACLE_BUDGET};
use crate::subsets;

/// What to do with a removal that leaves isolated vertices, no vertices, or
/// a residue whose semitotal number is undefined.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum RemovalPolicy {
    /// The removal set is not a candidate.
    #[serde(rename = "skip")]
    SkipSet,
    /// The removal set counts as changing the number.
    #[serde(rename = "changed")]
    CountAsChanged,
}

impl fmt::Display for RemovalPolicy {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            RemovalPolicy::SkipSet => "skip",
            RemovalPolicy::CountAsChanged => "changed",
        })
    }
}

impl FromStr for RemovalPolicy {
    type Err = Error;
    fn from_str(s: &str) -> Result<Self> {
        match s {
            "skip" => Ok(RemovalPolicy::SkipSet),
            "changed" => Ok(RemovalPolicy::CountAsChanged),
            _ => Err(domain(format!("unknown removal policy {s:?}"))),
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct StabilityWitness {
    pub k: usize,
    pub removed: VertexSet,
    /// Semitotal number of the residue; `None` if the residue has isolates
    /// or its number is undefined.
    pub residue_value: Option<usize>,
    pub base_value: Option<usize>,
}

/// Outcome of checking one removal set.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Residue {
    /// Residue is empty or has an isolated vertex.
    Degenerate,
    Value(Option<usize>),
}

/// Memoized semitotal numbers of residues, keyed by their re-indexed
/// adjacency so that symmetric removals share one search.
pub struct ResidueCache {
    rule: WitnessRule,
    conv: Conventions,
    memo: HashMap<Vec<u64>, Option<usize>>,
}

impl ResidueCache {
    pub fn new(rule: WitnessRule, conv: Conventions) -> Self {
        ResidueCache {
            rule,
            conv,
            memo: HashMap::new(),
        }
    }

    pub fn residue(&mut self, g: &Graph, removed: VertexSet) -> Result<Residue> {
        let (h, _) = g.delete_vertices(removed);
        if !h.is_isolate_free() {
            return Ok(Residue::Degenerate);
        }
        let key = h.adjacency_words();
        if let Some(&v) = self.memo.get(&key) {
            return Ok(Residue::Value(v));
        }
        let v = semitotal_number(&h, self.rule, self.conv)?;
        self.memo.insert(key, v);
        Ok(Residue::Value(v))
    }
}

/// Whether `residue` counts as a change from `base` under `policy`;
/// `None` means the set is skipped.
pub fn is_change(base: Option<usize>, residue: Residue, policy: RemovalPolicy) -> Option<bool> {
    match (residue, policy) {
        (Residue::Degenerate, RemovalPolicy::SkipSet) | (Residue::Value(None), RemovalPolicy::SkipSet) => None,
        (Residue::Degenerate, RemovalPolicy::CountAsChanged) => Some(true),
        (Residue::Value(v), _) => Some(v != base),
    }
}

fn check_input(g: &Graph) -> Result<()> {
    if g.n() < 2 {
        return Err(domain("stability needs at least two vertices"));
    }
    if !g.is_isolate_free() {
        return Err(Error::IsolatePresent);
    }
    if g.n() > ORACLE_BUDGET {
        return Err(Error::BudgetExceeded {
            what: "oracle",
            n: g.n(),
            budget: ORACLE_BUDGET,
        });
    }
    Ok(())
}

/// Lexicographically least minimum removal set that changes the semitotal
/// number, searching sizes `1..n` in order. `None` when no removal of fewer
/// than `n` vertices qualifies.
pub fn stability_witness(
    g: &Graph,
    rule: WitnessRule,
    conv: Conventions,
    policy: RemovalPolicy,
) -> Result<Option<StabilityWitness>> {
    check_input(g)?;
    let base = semitotal_number(g, rule, conv)?;
    let mut cache = ResidueCache::new(rule, conv);
    let n = g.n();
    for k in 1..n {
        for removed in subsets::lexicographic(n, k) {
            let residue = cache.residue(g, removed)?;
            if is_change(base, residue, policy) == Some(true) {
                let residue_value = match residue {
                    Residue::Value(v) => v,
                    Residue::Degenerate => None,
                };
                return Ok(Some(StabilityWitness {
                    k,
                    removed,
                    residue_value,
                    base_value: base,
                }));
            }
        }
    }
    Ok(None)
}

pub fn semitotal_stability(
    g: &Graph,
    rule: WitnessRule,
    conv: Conventions,
    policy: RemovalPolicy,
) -> Result<Option<usize>> {
    Ok(stability_witness(g, rule, conv, policy)?.map(|w| w.k))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::*;

    const E2: WitnessRule = WitnessRule::ExactlyTwo;

    fn st(g: &Graph) -> Option<usize> {
        semitotal_stability(g, E2, Conventions::default(), RemovalPolicy::SkipSet).unwrap()
    }

    #[test]
    fn stated_examples() {
        assert_eq!(st(&path(6).unwrap()), Some(1));
        assert_eq!(st(&star(5).unwrap()), Some(1));
        assert_eq!(st(&cycle(10).unwrap()), Some(3));
    }

    #[test]
    fn witnesses() {
        let w = stability_witness(&path(6).unwrap(), E2, Conventions::default(), RemovalPolicy::SkipSet)
            .unwrap()
            .unwrap();
        assert_eq!((w.k, w.removed), (1, VertexSet::singleton(0)));
        assert_eq!((w.base_value, w.residue_value), (Some(3), Some(2)));

        let w = stability_witness(&wheel(8).unwrap(), E2, Conventions::default(), RemovalPolicy::SkipSet)
            .unwrap()
            .unwrap();
        assert_eq!(w.k, 1);
        assert_ne!(w.removed, VertexSet::singleton(0));
    }

    #[test]
    fn policies_differ_on_isolates() {
        // P_3: removing the center leaves two isolated vertices
        let p3 = path(3).unwrap();
        let skip = stability_witness(&p3, E2, Conventions::default(), RemovalPolicy::SkipSet).unwrap();
        let changed = stability_witness(&p3, E2, Conventions::default(), RemovalPolicy::CountAsChanged)
            .unwrap()
            .unwrap();
        // γ_t2(P_3) = 2 and γ_t2(K_2) = 1 by convention
        assert_eq!(skip.map(|w| w.k), Some(1));
        assert_eq!(changed.removed, VertexSet::singleton(0));
        // K_2 has nothing to remove without leaving an isolate
        let k2 = path(2).unwrap();
        assert_eq!(st(&k2), None);
        assert_eq!(
            semitotal_stability(&k2, E2, Conventions::default(), RemovalPolicy::CountAsChanged).unwrap(),
            Some(1)
        );
    }

    #[test]
    fn input_checks() {
        assert!(semitotal_stability(&path(1).unwrap(), E2, Conventions::default(), RemovalPolicy::SkipSet).is_err());
        let iso = Graph::from_edges(3, [(0, 1)]).unwrap();
        assert_eq!(
            semitotal_stability(&iso, E2, Conventions::default(), RemovalPolicy::SkipSet),
            Err(Error::IsolatePresent)
        );
    }
}
