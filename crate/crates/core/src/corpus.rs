//! Fixed, ordered collections of test graphs.

use std::collections::BTreeSet;

use crate::canon::{free_trees, tree_code};
use crate::families::{self, Attachment};
use crate::graph::Graph;
use crate::products;

/// Every distinct member of the pendant-path tree family with at most
/// `max_n` vertices, built from all base trees and attachment choices.
/// Ordered by base size, base tree code, then choice bits.
pub fn tree_family_members(max_n: usize) -> Vec<Graph> {
    let mut seen = BTreeSet::new();
    let mut out = Vec::new();
    for h in 2..=max_n / 2 {
        for (bi, base) in free_trees(h).into_iter().enumerate() {
            let base = base.with_name(format!("H{h}.{bi}"));
            for choice in Attachment::all_choices(h) {
                let order = h + choice.iter().map(|c| if *c == Attachment::P2 { 1 } else { 3 }).sum::<usize>();
                if order > max_n {
                    continue;
                }
                let t = families::tree_family_t(&base, &choice).expect("valid base tree");
                if seen.insert(tree_code(&t).expect("tree")) {
                    out.push(t);
                }
            }
        }
    }
    out
}

/// Named family instances on at most `max_n` vertices, one per name.
pub fn family_corpus(max_n: usize) -> Vec<Graph> {
    let mut out = Vec::new();
    let mut names = BTreeSet::new();
    let mut push = |g: crate::error::Result<Graph>| {
        if let Ok(g) = g {
            if g.n() <= max_n && names.insert(g.name().unwrap_or_default().to_string()) {
                out.push(g);
            }
        }
    };
    for n in 2..=max_n {
        push(families::path(n));
    }
    for n in 3..=max_n {
        push(families::cycle(n));
    }
    for n in 2..=max_n {
        push(families::complete(n));
    }
    for n in 1..max_n {
        push(families::star(n));
    }
    for m in 1..max_n {
        for n in m..=max_n - m {
            push(families::complete_bipartite(m, n));
        }
    }
    for n in 4..=max_n {
        push(families::wheel(n));
    }
    for n in 1..=max_n / 2 {
        push(families::friendship(n));
        push(families::book(n));
    }
    push(Ok(families::petersen()));
    for n in 2..=max_n {
        for m in n..=max_n / n {
            push(families::grid(n, m));
        }
    }
    for (c, i, seed) in [(3, 2, 1), (3, 3, 2), (4, 4, 3), (4, 5, 4), (5, 5, 5), (5, 7, 6)] {
        push(families::random_split_graph(c, i, 0.5, seed));
    }
    out.extend(tree_family_members(max_n));
    out
}

/// Small factors used for product instances: `P_2..P_4`, `C_3..C_5`, `K_1..K_3`.
pub fn product_factors() -> Vec<Graph> {
    let mut v = Vec::new();
    for n in 2..=4 {
        v.push(families::path(n).expect("path"));
    }
    for n in 3..=5 {
        v.push(families::cycle(n).expect("cycle"));
    }
    for n in 1..=3 {
        v.push(families::complete(n).expect("complete"));
    }
    v
}

/// Corona, Cartesian, join and `⋄` (anchor 0) of every ordered pair of
/// product factors with at most `max_n` vertices.
pub fn product_corpus(max_n: usize) -> Vec<Graph> {
    let factors = product_factors();
    let mut out = Vec::new();
    for g in &factors {
        for h in &factors {
            let (gn, hn) = (g.name().unwrap_or("G"), h.name().unwrap_or("H"));
            let candidates = [
                (g.n() * (1 + h.n()), "o", products::corona(g, h)),
                (g.n() * h.n(), "x", products::cartesian(g, h)),
                (g.n() + h.n(), "v", products::join(g, h)),
                (g.n() * h.n(), "<>", products::identify_product(g, h, 0)),
            ];
            for (size, op, built) in candidates {
                if size <= max_n {
                    if let Ok(p) = built {
                        out.push(p.with_name(format!("{gn}{op}{hn}")));
                    }
                }
            }
        }
    }
    out
}
