//! Cross-checks against an independent naive oracle (distance matrix plus
//! plain subset enumeration) and against values frozen from a separate
//! networkx brute force.

use semitotal::corpus::{family_corpus, product_corpus};
use semitotal::families::*;
use semitotal::products;
use semitotal::{
    brute_force_number, count_by_size, domination_number, Conventions, DominationVariant, Graph, WitnessRule,
};

const W2: WitnessRule = WitnessRule::WithinTwo;
const E2: WitnessRule = WitnessRule::ExactlyTwo;
const OFF: Conventions = Conventions::OFF;

fn distances(g: &Graph) -> Vec<Vec<u32>> {
    let n = g.n();
    let inf = u32::MAX / 4;
    let mut d = vec![vec![inf; n]; n];
    for u in 0..n {
        d[u][u] = 0;
        for v in 0..n {
            if g.has_edge(u, v) {
                d[u][v] = 1;
            }
        }
    }
    for k in 0..n {
        for i in 0..n {
            for j in 0..n {
                if d[i][k] + d[k][j] < d[i][j] {
                    d[i][j] = d[i][k] + d[k][j];
                }
            }
        }
    }
    d
}

#[derive(Clone, Copy)]
enum Kind {
    Plain,
    Total,
    Semi(WitnessRule),
}

fn valid(g: &Graph, d: &[Vec<u32>], set: &[usize], kind: Kind) -> bool {
    let n = g.n();
    let member = |v: usize| set.contains(&v);
    let has_nb_in = |v: usize| (0..n).any(|u| member(u) && g.has_edge(u, v));
    match kind {
        Kind::Total => (0..n).all(has_nb_in),
        Kind::Plain | Kind::Semi(_) => {
            if !(0..n).all(|v| member(v) || has_nb_in(v)) {
                return false;
            }
            let Kind::Semi(rule) = kind else { return true };
            set.iter().all(|&v| {
                set.iter().any(|&u| {
                    u != v
                        && match rule {
                            WitnessRule::WithinTwo => d[u][v] <= 2,
                            WitnessRule::ExactlyTwo => d[u][v] == 2,
                        }
                })
            })
        }
    }
}

fn naive_counts(g: &Graph, kind: Kind) -> Vec<u64> {
    let n = g.n();
    let d = distances(g);
    let mut c = vec![0u64; n + 1];
    for mask in 0u32..(1 << n) {
        let set: Vec<usize> = (0..n).filter(|&v| mask >> v & 1 == 1).collect();
        if valid(g, &d, &set, kind) {
            c[set.len()] += 1;
        }
    }
    c
}

fn naive_number(g: &Graph, kind: Kind) -> Option<usize> {
    naive_counts(g, kind).iter().position(|&c| c > 0)
}

fn variant(kind: Kind) -> DominationVariant {
    match kind {
        Kind::Plain => DominationVariant::Plain,
        Kind::Total => DominationVariant::Total,
        Kind::Semi(r) => DominationVariant::Semitotal(r),
    }
}

const KINDS: [Kind; 4] = [Kind::Plain, Kind::Total, Kind::Semi(W2), Kind::Semi(E2)];

fn counts_u64(g: &Graph, kind: Kind) -> Vec<u64> {
    let p = count_by_size(g, variant(kind), OFF).unwrap();
    (0..=g.n()).map(|i| p.coeff(i).try_into().unwrap()).collect()
}

#[test]
fn solvers_match_naive_oracle_on_small_corpus() {
    let mut graphs = family_corpus(11);
    graphs.extend(product_corpus(11));
    for g in graphs.iter().filter(|g| g.is_isolate_free()) {
        for kind in KINDS {
            let expected = naive_number(g, kind);
            let v = variant(kind);
            assert_eq!(domination_number(g, v, OFF).unwrap(), expected, "{:?} {v}", g.name());
            assert_eq!(brute_force_number(g, v, OFF).unwrap(), expected, "{:?} {v}", g.name());
        }
    }
}

#[test]
fn counts_match_naive_oracle() {
    let mut graphs = family_corpus(10);
    graphs.extend(product_corpus(10));
    for g in graphs.iter().filter(|g| g.is_isolate_free()) {
        for kind in KINDS {
            assert_eq!(counts_u64(g, kind), naive_counts(g, kind), "{:?} {}", g.name(), variant(kind));
        }
    }
}

#[test]
fn frozen_paths_and_cycles() {
    for n in 3..=15usize {
        let expected = (2 * n).div_ceil(5);
        let p = path(n).unwrap();
        assert_eq!(domination_number(&p, DominationVariant::Semitotal(W2), OFF).unwrap(), Some(expected));
        assert_eq!(domination_number(&p, DominationVariant::Semitotal(E2), OFF).unwrap(), Some(expected));
        let c = cycle(n).unwrap();
        assert_eq!(domination_number(&c, DominationVariant::Semitotal(W2), OFF).unwrap(), Some(expected));
        let e2 = domination_number(&c, DominationVariant::Semitotal(E2), OFF).unwrap();
        assert_eq!(e2, if n == 3 { None } else { Some(expected) }, "C_{n}");
    }
}

#[test]
fn frozen_family_values() {
    let st = |g: &Graph, r| domination_number(g, DominationVariant::Semitotal(r), OFF).unwrap();
    let wheel_e2: Vec<_> = (5..=12).map(|n| st(&wheel(n).unwrap(), E2)).collect();
    assert_eq!(wheel_e2, [2, 2, 2, 3, 3, 3, 4, 4].map(Some));
    assert_eq!(st(&wheel(4).unwrap(), E2), None);
    assert!((5..=12).all(|n| st(&wheel(n).unwrap(), W2) == Some(2)));

    for n in 2..=5 {
        assert_eq!(st(&friendship(n).unwrap(), E2), Some(n));
        assert_eq!(st(&friendship(n).unwrap(), W2), Some(2));
    }
    let book_e2: Vec<_> = (1..=5).map(|n| st(&book(n).unwrap(), E2)).collect();
    assert_eq!(book_e2, [2, 3, 4, 4, 4].map(Some));
    assert!((1..=5).all(|n| st(&book(n).unwrap(), W2) == Some(2)));

    for m in 2..=7 {
        for n in m..=7 {
            assert_eq!(st(&complete_bipartite(m, n).unwrap(), E2), Some(m.min(4)), "K_{m},{n}");
        }
    }

    let p = petersen();
    assert_eq!(domination_number(&p, DominationVariant::Plain, OFF).unwrap(), Some(3));
    assert_eq!(domination_number(&p, DominationVariant::Total, OFF).unwrap(), Some(4));
    assert_eq!(st(&p, E2), Some(3));
    assert_eq!(st(&p, W2), Some(3));

    let grids = [(2, 2, 2, 2), (2, 3, 2, 3), (2, 4, 3, 4), (3, 3, 3, 4), (3, 4, 4, 4), (4, 4, 5, 6)];
    for (n, m, w, e) in grids {
        let g = grid(n, m).unwrap();
        assert_eq!((st(&g, W2), st(&g, E2)), (Some(w), Some(e)), "grid {n}x{m}");
    }

    let p6 = path(6).unwrap();
    assert_eq!(st(&products::join(&p6, &p6).unwrap(), E2), Some(2));
}

#[test]
fn frozen_counts() {
    let semi = |r| Kind::Semi(r);
    let c4 = cycle(4).unwrap();
    assert_eq!(counts_u64(&c4, semi(W2)), vec![0, 0, 6, 4, 1]);
    assert_eq!(counts_u64(&c4, semi(E2)), vec![0, 0, 2, 0, 1]);
    assert_eq!(counts_u64(&friendship(2).unwrap(), semi(E2)), vec![0, 0, 4, 4, 1, 0]);
    assert_eq!(counts_u64(&star(3).unwrap(), semi(E2)), vec![0, 0, 0, 1, 0]);

    let p8 = path(8).unwrap();
    assert_eq!(counts_u64(&p8, Kind::Plain), vec![0, 0, 0, 4, 26, 40, 26, 8, 1]);
    assert_eq!(counts_u64(&p8, semi(W2)), vec![0, 0, 0, 0, 11, 30, 24, 8, 1]);
    assert_eq!(counts_u64(&p8, semi(E2)), vec![0, 0, 0, 0, 4, 4, 8, 4, 1]);

    let p7 = path(7).unwrap();
    assert_eq!(counts_u64(&p7, Kind::Plain), vec![0, 0, 0, 8, 22, 19, 7, 1]);
    assert_eq!(counts_u64(&p7, Kind::Total), vec![0, 0, 0, 0, 3, 7, 5, 1]);
    assert_eq!(counts_u64(&cycle(7).unwrap(), semi(E2)), vec![0, 0, 0, 7, 7, 14, 7, 1]);
}

#[test]
fn complete_graph_convention_only_in_numbers_and_counts() {
    let k4 = complete(4).unwrap();
    let on = Conventions::default();
    for r in WitnessRule::BOTH {
        let v = DominationVariant::Semitotal(r);
        assert_eq!(domination_number(&k4, v, on).unwrap(), Some(1));
        assert_eq!(count_by_size(&k4, v, on).unwrap().coeff(1), 4u32.into());
        assert_eq!(count_by_size(&k4, v, OFF).unwrap().coeff(1), 0u32.into());
    }
    assert_eq!(domination_number(&k4, DominationVariant::Semitotal(W2), OFF).unwrap(), Some(2));
    assert_eq!(domination_number(&k4, DominationVariant::Semitotal(E2), OFF).unwrap(), None);
}
