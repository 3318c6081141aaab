//! Corona, Cartesian, join and vertex-identification compositions.

use crate::error::{domain, Error, Result};
use crate::graph::{check_capacity, Graph};

fn size(n: Option<usize>) -> Result<usize> {
    let n = n.ok_or(Error::Capacity {
        n: usize::MAX,
        max: crate::graph::MAX_VERTICES,
    })?;
    check_capacity(n)?;
    Ok(n)
}

/// `G ∘ H`: vertices of `G` first, then one copy of `H` per vertex of `G`,
/// each copy joined to its vertex.
pub fn corona(g: &Graph, h: &Graph) -> Result<Graph> {
    if g.n() == 0 || h.n() == 0 {
        return Err(domain("corona of an empty graph"));
    }
    let (gn, hn) = (g.n(), h.n());
    let total = size(hn.checked_add(1).and_then(|k| k.checked_mul(gn)))?;
    let mut out = Graph::empty(total)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for i in 0..gn {
        let base = gn + i * hn;
        for (a, b) in h.edges() {
            out.add_edge(base + a, base + b)?;
        }
        for a in 0..hn {
            out.add_edge(i, base + a)?;
        }
    }
    Ok(out)
}

/// `G □ H` with `(g, h)` at index `g·|V(H)| + h`.
pub fn cartesian(g: &Graph, h: &Graph) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    let total = size(gn.checked_mul(hn))?;
    let mut out = Graph::empty(total)?;
    for x in 0..gn {
        for (a, b) in h.edges() {
            out.add_edge(x * hn + a, x * hn + b)?;
        }
    }
    for (x, y) in g.edges() {
        for a in 0..hn {
            out.add_edge(x * hn + a, y * hn + a)?;
        }
    }
    Ok(out)
}

/// `G ∨ H`: disjoint union plus every edge between the parts; `G` first.
pub fn join(g: &Graph, h: &Graph) -> Result<Graph> {
    let mut out = disjoint_union(g, h)?;
    let gn = g.n();
    for u in 0..gn {
        for v in 0..h.n() {
            out.add_edge(u, gn + v)?;
        }
    }
    Ok(out)
}

/// Disjoint union with `G`'s vertices first.
pub fn disjoint_union(g: &Graph, h: &Graph) -> Result<Graph> {
    let gn = g.n();
    let total = size(gn.checked_add(h.n()))?;
    let mut out = Graph::empty(total)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for (u, v) in h.edges() {
        out.add_edge(gn + u, gn + v)?;
    }
    Ok(out)
}

/// `G ⋄ H`: each vertex `v` of `G` gets its own copy of `H` whose `anchor`
/// vertex is merged into `v`. Layout is `G` first, then the non-anchor
/// vertices of each copy in vertex order.
pub fn identify_product(g: &Graph, h: &Graph, anchor: usize) -> Result<Graph> {
    let (gn, hn) = (g.n(), h.n());
    if hn == 0 {
        return Err(domain("identify_product needs a nonempty H"));
    }
    if anchor >= hn {
        return Err(Error::VertexOutOfRange { v: anchor, n: hn });
    }
    let total = size(gn.checked_mul(hn))?;
    let mut out = Graph::empty(total)?;
    for (u, v) in g.edges() {
        out.add_edge(u, v)?;
    }
    for v in 0..gn {
        let base = gn + v * (hn - 1);
        let place = |x: usize| match x.cmp(&anchor) {
            std::cmp::Ordering::Equal => v,
            std::cmp::Ordering::Less => base + x,
            std::cmp::Ordering::Greater => base + x - 1,
        };
        for (a, b) in h.edges() {
            out.add_edge(place(a), place(b))?;
        }
    }
    Ok(out)
}
