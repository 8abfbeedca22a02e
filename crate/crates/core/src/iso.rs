//! Graph isomorphism for desk-scale graphs.
//!
//! Both graphs are refined together (1-dimensional Weisfeiler-Leman with a
//! shared color table, so color ids mean the same thing on both sides),
//! then a search individualizes one vertex at a time from the first
//! non-singleton cell and refines again. Histogram mismatches prune a
//! branch immediately. Every discrete leaf is verified edge by edge.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default vertex cap for [`is_isomorphic`].
pub const DEFAULT_ISO_CAP: usize = 200;

/// A bijection `V(g1) -> V(g2)` by index.
pub type Witness = Vec<usize>;

pub fn is_isomorphic(g1: &Graph, g2: &Graph) -> Result<Option<Witness>> {
    is_isomorphic_with_cap(g1, g2, DEFAULT_ISO_CAP)
}

pub fn is_isomorphic_with_cap(g1: &Graph, g2: &Graph, cap: usize) -> Result<Option<Witness>> {
    let n = g1.vertex_count();
    if n > cap || g2.vertex_count() > cap {
        return Err(Error::LimitExceeded {
            what: "isomorphism vertex",
            count: n.max(g2.vertex_count()).to_string(),
            limit: cap as u64,
        });
    }
    if n != g2.vertex_count() || g1.edge_count() != g2.edge_count() {
        return Ok(None);
    }
    let mut d1: Vec<usize> = (0..n).map(|v| g1.degree(v)).collect();
    let mut d2: Vec<usize> = (0..n).map(|v| g2.degree(v)).collect();
    let (c1, c2) = (d1.clone(), d2.clone());
    d1.sort_unstable();
    d2.sort_unstable();
    if d1 != d2 {
        return Ok(None);
    }
    let mut search = Search { g1, g2 };
    Ok(search.solve(c1, c2))
}

/// True iff `witness` is a bijection mapping edges to edges and non-edges to
/// non-edges.
pub fn verify_witness(g1: &Graph, g2: &Graph, witness: &[usize]) -> bool {
    let n = g1.vertex_count();
    if g2.vertex_count() != n || witness.len() != n || g1.edge_count() != g2.edge_count() {
        return false;
    }
    let mut hit = vec![false; n];
    for &w in witness {
        if w >= n || hit[w] {
            return false;
        }
        hit[w] = true;
    }
    // A bijection that maps every edge to an edge, between graphs with equal
    // edge counts, also maps non-edges to non-edges.
    g1.edges().all(|(u, v)| g2.has_edge(witness[u], witness[v]))
}

struct Search<'a> {
    g1: &'a Graph,
    g2: &'a Graph,
}

impl Search<'_> {
    fn solve(&mut self, c1: Vec<usize>, c2: Vec<usize>) -> Option<Witness> {
        let (c1, c2) = refine(self.g1, self.g2, c1, c2)?;
        let n = c1.len();
        let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
        for (v, &c) in c1.iter().enumerate() {
            cells.entry(c).or_default().push(v);
        }
        let Some((&color, cell)) = cells.iter().find(|(_, cell)| cell.len() > 1) else {
            let mut witness = vec![0; n];
            let mut by_color = vec![usize::MAX; c2.iter().max().map_or(0, |m| m + 1)];
            for (w, &c) in c2.iter().enumerate() {
                by_color[c] = w;
            }
            for (v, &c) in c1.iter().enumerate() {
                witness[v] = by_color[c];
            }
            return verify_witness(self.g1, self.g2, &witness).then_some(witness);
        };
        let v = cell[0];
        let fresh = c1.iter().chain(c2.iter()).max().map_or(0, |m| m + 1);
        for w in (0..n).filter(|&w| c2[w] == color) {
            let mut n1 = c1.clone();
            let mut n2 = c2.clone();
            n1[v] = fresh;
            n2[w] = fresh;
            if let Some(found) = self.solve(n1, n2) {
                return Some(found);
            }
        }
        None
    }
}

/// Jointly refines two colorings to a stable partition. Returns `None` as
/// soon as the color histograms diverge.
fn refine(
    g1: &Graph,
    g2: &Graph,
    mut c1: Vec<usize>,
    mut c2: Vec<usize>,
) -> Option<(Vec<usize>, Vec<usize>)> {
    let count = |c: &[usize]| {
        let mut s = c.to_vec();
        s.sort_unstable();
        s.dedup();
        s.len()
    };
    let mut classes = count(&c1);
    loop {
        let s1 = signatures(g1, &c1);
        let s2 = signatures(g2, &c2);
        let mut table: BTreeMap<&(usize, Vec<usize>), usize> = BTreeMap::new();
        for s in s1.iter().chain(s2.iter()) {
            table.insert(s, 0);
        }
        for (id, slot) in table.values_mut().enumerate() {
            *slot = id;
        }
        let n1: Vec<usize> = s1.iter().map(|s| table[s]).collect();
        let n2: Vec<usize> = s2.iter().map(|s| table[s]).collect();
        let mut h1 = n1.clone();
        let mut h2 = n2.clone();
        h1.sort_unstable();
        h2.sort_unstable();
        if h1 != h2 {
            return None;
        }
        let next = count(&n1);
        c1 = n1;
        c2 = n2;
        if next == classes {
            return Some((c1, c2));
        }
        classes = next;
    }
}

fn signatures(g: &Graph, colors: &[usize]) -> Vec<(usize, Vec<usize>)> {
    (0..g.vertex_count())
        .map(|v| {
            let mut around: Vec<usize> = g.neighbors(v).iter().map(|&u| colors[u]).collect();
            around.sort_unstable();
            (colors[v], around)
        })
        .collect()
}

/// Canonical adjacency bitmask for graphs on at most 11 vertices: the
/// lexicographically smallest upper-triangle bit string over all orderings
/// compatible with the refined partition. Equal masks iff isomorphic.
pub fn canonical_mask(g: &Graph) -> (usize, u64) {
    let n = g.vertex_count();
    assert!(n <= 11, "canonical_mask is for tiny graphs");
    let colors = refine(g, g, (0..n).map(|v| g.degree(v)).collect(), (0..n).map(|v| g.degree(v)).collect())
        .expect("graph agrees with itself")
        .0;
    let mut cells: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (v, &c) in colors.iter().enumerate() {
        cells.entry(c).or_default().push(v);
    }
    let cells: Vec<Vec<usize>> = cells.into_values().collect();
    let mut order = Vec::with_capacity(n);
    let mut best = u64::MAX;
    permute_cells(g, &cells, 0, &mut order, &mut best);
    (n, best)
}

fn permute_cells(g: &Graph, cells: &[Vec<usize>], k: usize, order: &mut Vec<usize>, best: &mut u64) {
    if k == cells.len() {
        let n = order.len();
        let mut mask = 0u64;
        let mut bit = 0;
        for i in 0..n {
            for j in i + 1..n {
                if g.has_edge(order[i], order[j]) {
                    mask |= 1 << bit;
                }
                bit += 1;
            }
        }
        *best = (*best).min(mask);
        return;
    }
    let mut cell = cells[k].clone();
    heap_permutations(&mut cell, &mut |perm| {
        let base = order.len();
        order.extend_from_slice(perm);
        permute_cells(g, cells, k + 1, order, best);
        order.truncate(base);
    });
}

fn heap_permutations(items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
    fn go(k: usize, items: &mut [usize], f: &mut dyn FnMut(&[usize])) {
        if k <= 1 {
            f(items);
            return;
        }
        for i in 0..k {
            go(k - 1, items, f);
            if k % 2 == 0 {
                items.swap(i, k - 1);
            } else {
                items.swap(0, k - 1);
            }
        }
    }
    let k = items.len();
    go(k, items, f);
}
