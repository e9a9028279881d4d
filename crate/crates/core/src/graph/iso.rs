//! Brute-force (switching) isomorphism for desk-sized signed graphs.
//!
//! Vertices of the first graph are visited in BFS order so every non-root
//! vertex can only map onto a neighbour of its parent's image. Candidates are
//! further pruned by degree (and, for plain isomorphism, by signed degree).

use thiserror::Error;

use super::{Sign, SignedGraph};

/// Default brute-force cap on the number of vertices.
pub const DEFAULT_ISO_CAP: usize = 12;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum IsoError {
    #[error("graph on {n} vertices exceeds the brute-force cap of {cap}")]
    SizeLimitExceeded { n: usize, cap: usize },
}

#[derive(Clone, Copy, PartialEq, Eq)]
enum Mode {
    Signed,
    Switching,
}

pub fn is_isomorphic(a: &SignedGraph, b: &SignedGraph) -> Result<bool, IsoError> {
    is_isomorphic_with_cap(a, b, DEFAULT_ISO_CAP)
}

pub fn is_switching_isomorphic(a: &SignedGraph, b: &SignedGraph) -> Result<bool, IsoError> {
    is_switching_isomorphic_with_cap(a, b, DEFAULT_ISO_CAP)
}

/// True iff some vertex permutation maps the edges of `a` onto the edges of
/// `b` with identical signs.
pub fn is_isomorphic_with_cap(a: &SignedGraph, b: &SignedGraph, cap: usize) -> Result<bool, IsoError> {
    search(a, b, cap, Mode::Signed)
}

/// True iff some vertex permutation maps the underlying graph of `a` onto
/// that of `b` and the mapped signatures agree up to switching.
pub fn is_switching_isomorphic_with_cap(
    a: &SignedGraph,
    b: &SignedGraph,
    cap: usize,
) -> Result<bool, IsoError> {
    search(a, b, cap, Mode::Switching)
}

fn dense(g: &SignedGraph) -> Vec<Vec<i8>> {
    let mut m = vec![vec![0i8; g.order()]; g.order()];
    for e in g.edges() {
        let s = e.sign.value() as i8;
        m[e.u][e.v] = s;
        m[e.v][e.u] = s;
    }
    m
}

fn invariant(g: &SignedGraph, mode: Mode) -> Vec<(usize, usize)> {
    g.degrees()
        .vertices
        .iter()
        .map(|d| match mode {
            Mode::Signed => (d.degree, d.positive),
            Mode::Switching => (d.degree, 0),
        })
        .collect()
}

fn search(a: &SignedGraph, b: &SignedGraph, cap: usize, mode: Mode) -> Result<bool, IsoError> {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() {
        return Ok(false);
    }
    if n > cap {
        return Err(IsoError::SizeLimitExceeded { n, cap });
    }
    let (inv_a, inv_b) = (invariant(a, mode), invariant(b, mode));
    let mut sorted_a = inv_a.clone();
    let mut sorted_b = inv_b.clone();
    sorted_a.sort_unstable();
    sorted_b.sort_unstable();
    if sorted_a != sorted_b {
        return Ok(false);
    }

    // BFS order over `a`, remembering each vertex's parent.
    let adj_a = a.neighbours();
    let mut order = Vec::with_capacity(n);
    let mut parent = vec![None; n];
    let mut seen = vec![false; n];
    for root in 0..n {
        if seen[root] {
            continue;
        }
        seen[root] = true;
        let start = order.len();
        order.push(root);
        let mut i = start;
        while i < order.len() {
            let x = order[i];
            for &(y, _) in &adj_a[x] {
                if !seen[y] {
                    seen[y] = true;
                    parent[y] = Some(x);
                    order.push(y);
                }
            }
            i += 1;
        }
    }

    let mut state = Search {
        mode,
        ma: dense(a),
        mb: dense(b),
        adj_b: b.neighbours().into_iter().map(|l| l.into_iter().map(|(v, _)| v).collect()).collect(),
        inv_a,
        inv_b,
        order,
        parent,
        image: vec![usize::MAX; n],
        used: vec![false; n],
        potential: vec![Sign::Positive; n],
    };
    Ok(state.extend(0))
}

struct Search {
    mode: Mode,
    ma: Vec<Vec<i8>>,
    mb: Vec<Vec<i8>>,
    adj_b: Vec<Vec<usize>>,
    inv_a: Vec<(usize, usize)>,
    inv_b: Vec<(usize, usize)>,
    order: Vec<usize>,
    parent: Vec<Option<usize>>,
    image: Vec<usize>,
    used: Vec<bool>,
    potential: Vec<Sign>,
}

impl Search {
    fn extend(&mut self, depth: usize) -> bool {
        if depth == self.order.len() {
            return true;
        }
        let v = self.order[depth];
        let candidates: Vec<usize> = match self.parent[v] {
            Some(p) => self.adj_b[self.image[p]].clone(),
            None => (0..self.mb.len()).collect(),
        };
        for c in candidates {
            if self.used[c] || self.inv_a[v] != self.inv_b[c] {
                continue;
            }
            let Some(x) = self.potential_for(v, c) else { continue };
            if !self.consistent(depth, v, c, x) {
                continue;
            }
            self.image[v] = c;
            self.used[c] = true;
            self.potential[v] = x;
            if self.extend(depth + 1) {
                return true;
            }
            self.used[c] = false;
            self.image[v] = usize::MAX;
        }
        false
    }

    /// Switching potential forced on `v` by its BFS parent.
    fn potential_for(&self, v: usize, c: usize) -> Option<Sign> {
        match (self.mode, self.parent[v]) {
            (Mode::Signed, _) | (Mode::Switching, None) => Some(Sign::Positive),
            (Mode::Switching, Some(p)) => {
                let sa = self.ma[v][p];
                let sb = self.mb[c][self.image[p]];
                if sa == 0 || sb == 0 {
                    return None;
                }
                let rel = if sa == sb { Sign::Positive } else { Sign::Negative };
                Some(self.potential[p].times(rel))
            }
        }
    }

    fn consistent(&self, depth: usize, v: usize, c: usize, x: Sign) -> bool {
        self.order[..depth].iter().all(|&w| {
            let sa = self.ma[v][w];
            let sb = self.mb[c][self.image[w]];
            match self.mode {
                Mode::Signed => sa == sb,
                Mode::Switching => {
                    if (sa == 0) != (sb == 0) {
                        return false;
                    }
                    sa == 0 || sa as i64 == x.times(self.potential[w]).value() * sb as i64
                }
            }
        })
    }
}
