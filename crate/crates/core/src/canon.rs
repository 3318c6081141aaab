//! Canonical forms for small graphs and trees, and exhaustive free-tree
//! enumeration.

use std::collections::BTreeMap;

use crate::graph::{Graph, VertexSet};

/// Refines an ordered coloring until every color class is equitable. Colors
/// are re-ranked by (old color, sorted neighbor colors), which does not
/// depend on vertex labels.
fn refine(g: &Graph, colors: &mut [usize]) {
    let n = g.n();
    loop {
        let before = colors.iter().collect::<std::collections::BTreeSet<_>>().len();
        let sigs: Vec<(usize, Vec<usize>)> = (0..n)
            .map(|v| {
                let mut nb: Vec<usize> = g.neighbors(v).iter().map(|u| colors[u]).collect();
                nb.sort_unstable();
                (colors[v], nb)
            })
            .collect();
        let ranks: BTreeMap<&(usize, Vec<usize>), usize> = {
            let mut keys: Vec<&(usize, Vec<usize>)> = sigs.iter().collect();
            keys.sort();
            keys.dedup();
            keys.into_iter().enumerate().map(|(i, k)| (k, i)).collect()
        };
        for v in 0..n {
            colors[v] = ranks[&sigs[v]];
        }
        if ranks.len() == before {
            return;
        }
    }
}

fn twins(g: &Graph, u: usize, v: usize) -> bool {
    let a = g.neighbors(u) - VertexSet::singleton(v);
    let b = g.neighbors(v) - VertexSet::singleton(u);
    a == b
}

fn search(g: &Graph, colors: Vec<usize>, best: &mut Option<Vec<u64>>) {
    let n = g.n();
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for v in 0..n {
        cells.entry(colors[v]).or_default().push(v);
    }
    let target = cells.values().filter(|c| c.len() > 1).min_by_key(|c| c.len()).cloned();
    let Some(cell) = target else {
        let mut rows = vec![0u64; n];
        for u in 0..n {
            rows[colors[u]] = g.neighbors(u).iter().fold(0u64, |acc, w| acc | 1 << colors[w]);
        }
        if best.as_ref().is_none_or(|b| rows < *b) {
            *best = Some(rows);
        }
        return;
    };
    let mut reps: Vec<usize> = Vec::new();
    for &v in &cell {
        if !reps.iter().any(|&r| twins(g, r, v)) {
            reps.push(v);
        }
    }
    for v in reps {
        let mut c: Vec<usize> = colors.iter().map(|&x| 2 * x + 1).collect();
        c[v] -= 1;
        refine(g, &mut c);
        search(g, c, best);
    }
}

/// Adjacency rows under a canonical relabeling: two graphs are isomorphic
/// iff their canonical forms are equal.
pub fn canonical_form(g: &Graph) -> Vec<u64> {
    let mut colors = vec![0; g.n()];
    refine(g, &mut colors);
    let mut best = None;
    search(g, colors, &mut best);
    best.unwrap_or_default()
}

pub fn is_isomorphic(a: &Graph, b: &Graph) -> bool {
    a.n() == b.n() && a.edge_count() == b.edge_count() && canonical_form(a) == canonical_form(b)
}

fn rooted_code(g: &Graph, v: usize, parent: Option<usize>) -> String {
    let mut kids: Vec<String> = g
        .neighbors(v)
        .iter()
        .filter(|&u| Some(u) != parent)
        .map(|u| rooted_code(g, u, Some(v)))
        .collect();
    kids.sort();
    format!("({})", kids.concat())
}

/// Parenthesis code of a tree rooted at its center (the smaller code when
/// there are two centers). Equal codes iff isomorphic trees.
pub fn tree_code(t: &Graph) -> Option<String> {
    if !t.is_tree() {
        return None;
    }
    let n = t.n();
    let mut degree: Vec<usize> = (0..n).map(|v| t.degree(v)).collect();
    let mut alive = t.vertices();
    while alive.len() > 2 {
        let leaves: Vec<usize> = alive.iter().filter(|&v| degree[v] <= 1).collect();
        for &v in &leaves {
            alive.remove(v);
            for u in t.neighbors(v) {
                degree[u] = degree[u].saturating_sub(1);
            }
        }
    }
    alive.iter().map(|c| rooted_code(t, c, None)).min()
}

/// All non-isomorphic trees on `n` vertices, sorted by tree code.
pub fn free_trees(n: usize) -> Vec<Graph> {
    if n == 0 {
        return Vec::new();
    }
    let mut level: BTreeMap<String, Graph> = BTreeMap::new();
    let k1 = Graph::empty(1).expect("single vertex");
    level.insert(tree_code(&k1).expect("tree"), k1);
    for size in 2..=n {
        let mut next = BTreeMap::new();
        for t in level.values() {
            for v in 0..t.n() {
                let mut edges = t.edges();
                edges.push((v, size - 1));
                let bigger = Graph::from_edges(size, edges).expect("within capacity");
                let code = tree_code(&bigger).expect("tree");
                next.entry(code).or_insert(bigger);
            }
        }
        level = next;
    }
    level.into_values().collect()
}
