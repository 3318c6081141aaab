//! Generators for the named graph families.
//!
//! Hubs and centers are always vertex 0: the hub of a star, wheel or
//! friendship graph, and the `(hub, 0)` corner of a book.

use std::fmt;
use std::str::FromStr;

use crate::error::{domain, Error, Result};
use crate::graph::{check_capacity, Graph, VertexSet};
use crate::products;

/// A wheel of order `n` is a hub plus an `(n-1)`-cycle, so `wheel(4)` is `K_4`.
pub const WHEEL_ORDER_INCLUDES_HUB: bool = true;

pub fn path(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(domain("path needs at least one vertex"));
    }
    Ok(Graph::from_edges(n, (1..n).map(|i| (i - 1, i)))?.with_name(format!("P_{n}")))
}

pub fn cycle(n: usize) -> Result<Graph> {
    if n < 3 {
        return Err(domain("cycle needs at least three vertices"));
    }
    Ok(Graph::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))?.with_name(format!("C_{n}")))
}

pub fn complete(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(domain("complete graph needs at least one vertex"));
    }
    check_capacity(n)?;
    let edges = (0..n).flat_map(|u| (u + 1..n).map(move |v| (u, v)));
    Ok(Graph::from_edges(n, edges)?.with_name(format!("K_{n}")))
}

/// `K_{1,n}` with hub 0 and leaves `1..=n`.
pub fn star(leaves: usize) -> Result<Graph> {
    if leaves < 1 {
        return Err(domain("star needs at least one leaf"));
    }
    check_capacity(leaves + 1)?;
    Ok(Graph::from_edges(leaves + 1, (1..=leaves).map(|i| (0, i)))?.with_name(format!("K_1,{leaves}")))
}

/// `K_{m,n}` with parts `0..m` and `m..m+n`.
pub fn complete_bipartite(m: usize, n: usize) -> Result<Graph> {
    if m < 1 || n < 1 {
        return Err(domain("complete bipartite parts must be nonempty"));
    }
    check_capacity(m + n)?;
    let edges = (0..m).flat_map(|u| (m..m + n).map(move |v| (u, v)));
    Ok(Graph::from_edges(m + n, edges)?.with_name(format!("K_{m},{n}")))
}

/// Wheel of total order `n`: hub 0 joined to the cycle `1, .., n-1`.
pub fn wheel(n: usize) -> Result<Graph> {
    if n < 4 {
        return Err(domain("wheel needs order at least 4"));
    }
    check_capacity(n)?;
    let rim = n - 1;
    let spokes = (1..n).map(|i| (0, i));
    let ring = (0..rim).map(|i| (1 + i, 1 + (i + 1) % rim));
    Ok(Graph::from_edges(n, spokes.chain(ring))?.with_name(format!("W_{n}")))
}

/// `F_n`: center 0 and triangles `{0, 2i-1, 2i}` for `i = 1..=n`.
pub fn friendship(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(domain("friendship graph needs at least one triangle"));
    }
    let order = 2 * n + 1;
    check_capacity(order)?;
    let mut edges = Vec::with_capacity(3 * n);
    for i in 1..=n {
        edges.extend([(0, 2 * i - 1), (0, 2 * i), (2 * i - 1, 2 * i)]);
    }
    Ok(Graph::from_edges(order, edges)?.with_name(format!("F_{n}")))
}

/// `B_n = K_{1,n} □ P_2`.
pub fn book(n: usize) -> Result<Graph> {
    if n < 1 {
        return Err(domain("book needs at least one page"));
    }
    check_capacity(2 * n + 2)?;
    Ok(products::cartesian(&star(n)?, &path(2)?)?.with_name(format!("B_{n}")))
}

/// Outer 5-cycle `0..5`, spokes `i - i+5`, inner pentagram on `5..10`.
pub fn petersen() -> Graph {
    let mut edges = Vec::with_capacity(15);
    for i in 0..5 {
        edges.push((i, (i + 1) % 5));
        edges.push((i, i + 5));
        edges.push((5 + i, 5 + (i + 2) % 5));
    }
    Graph::from_edges(10, edges)
        .expect("petersen graph is valid")
        .with_name("Petersen")
}

/// `P_n □ P_m`.
pub fn grid(n: usize, m: usize) -> Result<Graph> {
    Ok(products::cartesian(&path(n)?, &path(m)?)?.with_name(format!("P_{n}xP_{m}")))
}

/// Which pendant path a base-tree vertex receives.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Attachment {
    /// One new vertex (`v` is an end of a `P_2`).
    P2,
    /// Three new vertices (`v` is an end of a `P_4`).
    P4,
}

impl Attachment {
    fn new_vertices(self) -> usize {
        match self {
            Attachment::P2 => 1,
            Attachment::P4 => 3,
        }
    }

    /// All `2^k` attachment vectors of length `k`, bit `i` set meaning P4.
    pub fn all_choices(k: usize) -> impl Iterator<Item = Vec<Attachment>> {
        (0u64..1 << k).map(move |bits| {
            (0..k)
                .map(|i| if bits >> i & 1 == 1 { Attachment::P4 } else { Attachment::P2 })
                .collect()
        })
    }
}

/// Member of the tree family: every vertex `v` of the base tree gets a fresh
/// pendant path `v - x1` or `v - x1 - x2 - x3`. New vertices follow the base
/// tree's vertices in order of `v`.
pub fn tree_family_t(base: &Graph, choice: &[Attachment]) -> Result<Graph> {
    if base.n() < 2 || !base.is_tree() {
        return Err(domain("base of the tree family must be a tree on at least two vertices"));
    }
    if choice.len() != base.n() {
        return Err(domain(format!(
            "attachment choice has length {} but the base tree has {} vertices",
            choice.len(),
            base.n()
        )));
    }
    let total = base.n() + choice.iter().map(|c| c.new_vertices()).sum::<usize>();
    check_capacity(total)?;
    let mut out = Graph::empty(total)?;
    for (u, v) in base.edges() {
        out.add_edge(u, v)?;
    }
    let mut next = base.n();
    for (v, c) in choice.iter().enumerate() {
        let mut prev = v;
        for _ in 0..c.new_vertices() {
            out.add_edge(prev, next)?;
            prev = next;
            next += 1;
        }
    }
    let tag: String = choice
        .iter()
        .map(|c| match c {
            Attachment::P2 => '2',
            Attachment::P4 => '4',
        })
        .collect();
    let base_name = base.name().unwrap_or("H");
    Ok(out.with_name(format!("T({base_name};{tag})")))
}

/// Counter-based SplitMix64 stream; the `k`-th output depends only on the
/// seed and `k`, so any implementation can reproduce it.
#[derive(Debug, Clone)]
pub struct SplitMix64 {
    state: u64,
}

impl SplitMix64 {
    pub fn new(seed: u64) -> Self {
        SplitMix64 { state: seed }
    }

    pub fn next_u64(&mut self) -> u64 {
        self.state = self.state.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.state;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    /// Uniform in `[0, 1)` from the top 53 bits.
    pub fn next_f64(&mut self) -> f64 {
        (self.next_u64() >> 11) as f64 * (1.0 / (1u64 << 53) as f64)
    }
}

pub const SPLIT_RESAMPLE_LIMIT: usize = 1000;

/// Split graph with clique `0..c` and independent set `c..c+i`.
///
/// One stream is seeded once; each attempt consumes one draw per
/// clique/independent pair in (clique vertex, independent vertex) order and
/// keeps the edge when the draw is below `p`. Attempts repeat until the
/// graph is connected and isolate-free.
pub fn random_split_graph(clique: usize, independent: usize, p: f64, seed: u64) -> Result<Graph> {
    if clique < 2 || independent < 1 {
        return Err(domain("split graph needs clique >= 2 and independent set >= 1"));
    }
    if !(0.0..=1.0).contains(&p) {
        return Err(domain(format!("edge probability {p} outside [0, 1]")));
    }
    let n = clique + independent;
    check_capacity(n)?;
    let mut rng = SplitMix64::new(seed);
    let name = format!("split({clique},{independent},{p},{seed})");
    for _ in 0..SPLIT_RESAMPLE_LIMIT {
        let mut g = complete(clique)?;
        g = products::disjoint_union(&g, &Graph::empty(independent)?)?;
        for c in 0..clique {
            for j in 0..independent {
                if rng.next_f64() < p {
                    g.add_edge(c, clique + j)?;
                }
            }
        }
        if g.is_connected() && g.is_isolate_free() {
            return Ok(g.with_name(name));
        }
    }
    Err(Error::ResampleExhausted(SPLIT_RESAMPLE_LIMIT))
}

/// Some vertex adjacent to every other vertex.
pub fn has_dominating_vertex(g: &Graph) -> bool {
    let all = g.vertices();
    g.n() > 0 && (0..g.n()).any(|v| g.closed(v) == all)
}

/// Parameterized family reference, written `name:args` on the command line
/// (`path:11`, `kmn:2,3`, `split:3,2,0.5,7`).
#[derive(Debug, Clone, PartialEq)]
pub enum Family {
    Path(usize),
    Cycle(usize),
    Complete(usize),
    Star(usize),
    CompleteBipartite(usize, usize),
    Wheel(usize),
    Friendship(usize),
    Book(usize),
    Petersen,
    Grid(usize, usize),
    Split {
        clique: usize,
        independent: usize,
        p: f64,
        seed: u64,
    },
}

impl Family {
    pub fn build(&self) -> Result<Graph> {
        match *self {
            Family::Path(n) => path(n),
            Family::Cycle(n) => cycle(n),
            Family::Complete(n) => complete(n),
            Family::Star(n) => star(n),
            Family::CompleteBipartite(m, n) => complete_bipartite(m, n),
            Family::Wheel(n) => wheel(n),
            Family::Friendship(n) => friendship(n),
            Family::Book(n) => book(n),
            Family::Petersen => Ok(petersen()),
            Family::Grid(n, m) => grid(n, m),
            Family::Split {
                clique,
                independent,
                p,
                seed,
            } => random_split_graph(clique, independent, p, seed),
        }
    }
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Family::Path(n) => write!(f, "path:{n}"),
            Family::Cycle(n) => write!(f, "cycle:{n}"),
            Family::Complete(n) => write!(f, "complete:{n}"),
            Family::Star(n) => write!(f, "star:{n}"),
            Family::CompleteBipartite(m, n) => write!(f, "kmn:{m},{n}"),
            Family::Wheel(n) => write!(f, "wheel:{n}"),
            Family::Friendship(n) => write!(f, "friendship:{n}"),
            Family::Book(n) => write!(f, "book:{n}"),
            Family::Petersen => write!(f, "petersen"),
            Family::Grid(n, m) => write!(f, "grid:{n},{m}"),
            Family::Split {
                clique,
                independent,
                p,
                seed,
            } => write!(f, "split:{clique},{independent},{p},{seed}"),
        }
    }
}

impl FromStr for Family {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let (name, args) = s.split_once(':').unwrap_or((s, ""));
        let args: Vec<&str> = if args.is_empty() {
            Vec::new()
        } else {
            args.split(',').map(str::trim).collect()
        };
        let bad = || domain(format!("bad family spec {s:?}"));
        let int = |i: usize| -> Result<usize> { args.get(i).ok_or_else(bad)?.parse().map_err(|_| bad()) };
        let arity = |k: usize| if args.len() == k { Ok(()) } else { Err(bad()) };
        let fam = match name.trim().to_ascii_lowercase().as_str() {
            "path" | "p" => {
                arity(1)?;
                Family::Path(int(0)?)
            }
            "cycle" | "c" => {
                arity(1)?;
                Family::Cycle(int(0)?)
            }
            "complete" | "k" => {
                arity(1)?;
                Family::Complete(int(0)?)
            }
            "star" => {
                arity(1)?;
                Family::Star(int(0)?)
            }
            "kmn" | "complete_bipartite" | "bipartite" => {
                arity(2)?;
                Family::CompleteBipartite(int(0)?, int(1)?)
            }
            "wheel" | "w" => {
                arity(1)?;
                Family::Wheel(int(0)?)
            }
            "friendship" | "f" => {
                arity(1)?;
                Family::Friendship(int(0)?)
            }
            "book" | "b" => {
                arity(1)?;
                Family::Book(int(0)?)
            }
            "petersen" => {
                arity(0)?;
                Family::Petersen
            }
            "grid" => {
                arity(2)?;
                Family::Grid(int(0)?, int(1)?)
            }
            "split" => {
                arity(4)?;
                Family::Split {
                    clique: int(0)?,
                    independent: int(1)?,
                    p: args[2].parse().map_err(|_| bad())?,
                    seed: args[3].parse().map_err(|_| bad())?,
                }
            }
            _ => return Err(bad()),
        };
        Ok(fam)
    }
}

/// Vertices of `g` adjacent to everything else.
pub fn dominating_vertices(g: &Graph) -> VertexSet {
    let all = g.vertices();
    (0..g.n()).filter(|&v| g.closed(v) == all).collect()
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn small_families() {
        assert_eq!(path(3).unwrap().edges(), vec![(0, 1), (1, 2)]);
        let s = star(3).unwrap();
        assert_eq!(s.degree(0), 3);
        assert!((1..=3).all(|v| s.neighbors(v) == VertexSet::singleton(0)));
        assert_eq!(complete_bipartite(2, 3).unwrap().edge_count(), 6);
        assert!(path(0).is_err());
        assert!(cycle(2).is_err());
        assert!(matches!(complete(70), Err(Error::Capacity { .. })));
    }

    #[test]
    fn wheels() {
        assert_eq!(wheel(4).unwrap().edges(), complete(4).unwrap().edges());
        let mut degs: Vec<usize> = (0..5).map(|v| wheel(5).unwrap().degree(v)).collect();
        degs.sort_unstable_by(|a, b| b.cmp(a));
        assert_eq!(degs, vec![4, 3, 3, 3, 3]);
        assert!(wheel(3).is_err());
    }

    #[test]
    fn friendship_book_petersen() {
        let f = friendship(2).unwrap();
        assert_eq!((f.n(), f.edge_count()), (5, 6));
        assert!(f.has_edge(1, 2) && f.has_edge(3, 4) && !f.has_edge(2, 3));
        let b1 = book(1).unwrap();
        assert_eq!(b1.n(), 4);
        assert!((0..4).all(|v| b1.degree(v) == 2) && b1.is_connected());
        let p = petersen();
        assert_eq!(p.n(), 10);
        assert!((0..10).all(|v| p.degree(v) == 3));
        // girth 5: no triangles, no 4-cycles
        for u in 0..10 {
            for v in p.neighbors(u) {
                assert!((p.neighbors(u) & p.neighbors(v)).is_empty());
            }
            for w in 0..10 {
                if w != u && !p.has_edge(u, w) {
                    assert!((p.neighbors(u) & p.neighbors(w)).len() <= 1);
                }
            }
        }
    }

    #[test]
    fn tree_family() {
        let k2 = complete(2).unwrap();
        let t = tree_family_t(&k2, &[Attachment::P2, Attachment::P2]).unwrap();
        assert_eq!(t.edges(), vec![(0, 1), (0, 2), (1, 3)]);
        let t = tree_family_t(&k2, &[Attachment::P4, Attachment::P4]).unwrap();
        assert_eq!(t.n(), 8);
        assert!(t.is_tree() && t.max_degree() == 2);
        for choice in Attachment::all_choices(3) {
            let t = tree_family_t(&path(3).unwrap(), &choice).unwrap();
            assert!(t.is_tree());
            assert_eq!(t.n() % 2, 0);
        }
        assert!(tree_family_t(&cycle(3).unwrap(), &[Attachment::P2; 3]).is_err());
        assert!(tree_family_t(&complete(1).unwrap(), &[Attachment::P2]).is_err());
        assert!(tree_family_t(&k2, &[Attachment::P2]).is_err());
    }

    #[test]
    fn split_graphs() {
        let g = random_split_graph(3, 2, 1.0, 99).unwrap();
        assert_eq!(g.edge_count(), 3 + 6);
        let g = random_split_graph(2, 1, 1.0, 0).unwrap();
        assert_eq!(g.edges(), complete(3).unwrap().edges());
        let a = random_split_graph(4, 5, 0.4, 17).unwrap();
        let b = random_split_graph(4, 5, 0.4, 17).unwrap();
        assert_eq!(a.edges(), b.edges());
        for j in 4..9 {
            assert!(a.neighbors(j).is_subset(VertexSet::full(4)));
        }
        assert_eq!(random_split_graph(3, 2, 0.0, 1), Err(Error::ResampleExhausted(SPLIT_RESAMPLE_LIMIT)));
        assert!(random_split_graph(3, 2, 1.5, 1).is_err());
    }

    #[test]
    fn splitmix_reference_values() {
        // published SplitMix64 outputs for seed 0
        let mut r = SplitMix64::new(0);
        assert_eq!(r.next_u64(), 0xE220_A839_7B1D_CDAF);
        assert_eq!(r.next_u64(), 0x6E78_9E6A_A1B9_65F4);
    }

    #[test]
    fn dominating_vertex() {
        assert!(has_dominating_vertex(&star(3).unwrap()));
        assert!(!has_dominating_vertex(&cycle(5).unwrap()));
        assert!(has_dominating_vertex(&wheel(6).unwrap()));
        assert_eq!(dominating_vertices(&wheel(6).unwrap()), VertexSet::singleton(0));
    }

    #[test]
    fn family_specs() {
        for s in ["path:11", "kmn:2,3", "petersen", "split:3,2,0.5,7", "grid:3,4"] {
            let f: Family = s.parse().unwrap();
            assert_eq!(f.to_string(), s);
            f.build().unwrap();
        }
        assert!("path".parse::<Family>().is_err());
        assert!("blob:3".parse::<Family>().is_err());
    }
}
