//! Fixed-size subset enumeration over `{0, .., n-1}` as bit masks.

use crate::graph::VertexSet;

/// All `k`-subsets of `0..n` in increasing numeric order (Gosper's hack).
pub fn by_value(n: usize, k: usize) -> ByValue {
    let next = if k > n {
        None
    } else if k == 0 {
        Some(0)
    } else {
        Some((1u128 << k) - 1)
    };
    ByValue {
        next,
        limit: 1u128 << n,
    }
}

pub struct ByValue {
    next: Option<u128>,
    limit: u128,
}

impl Iterator for ByValue {
    type Item = VertexSet;

    #[inline]
    fn next(&mut self) -> Option<VertexSet> {
        let cur = self.next?;
        self.next = if cur == 0 {
            None
        } else {
            let c = cur & cur.wrapping_neg();
            let r = cur + c;
            let nxt = (((r ^ cur) >> 2) / c) | r;
            (nxt < self.limit).then_some(nxt)
        };
        Some(VertexSet(cur as u64))
    }
}

/// All `k`-subsets of `0..n` ordered lexicographically by their sorted
/// member lists (`{0,3}` before `{1,2}`).
pub fn lexicographic(n: usize, k: usize) -> Lexicographic {
    Lexicographic {
        idx: (0..k).collect(),
        n,
        done: k > n,
    }
}

pub struct Lexicographic {
    idx: Vec<usize>,
    n: usize,
    done: bool,
}

impl Iterator for Lexicographic {
    type Item = VertexSet;

    fn next(&mut self) -> Option<VertexSet> {
        if self.done {
            return None;
        }
        let out: VertexSet = self.idx.iter().copied().collect();
        let k = self.idx.len();
        let mut i = k;
        loop {
            if i == 0 {
                self.done = true;
                break;
            }
            i -= 1;
            if self.idx[i] < self.n - k + i {
                self.idx[i] += 1;
                for j in i + 1..k {
                    self.idx[j] = self.idx[j - 1] + 1;
                }
                break;
            }
        }
        Some(out)
    }
}

/// Orders vertex sets lexicographically by sorted member lists.
pub fn lex_cmp(a: VertexSet, b: VertexSet) -> std::cmp::Ordering {
    a.iter().cmp(b.iter())
}
