//! Exhaustive search for small induced patterns.
//!
//! Each occurrence is reported once, as a canonical tuple:
//! `P3` as `(end, center, end)` with ends ascending, a claw as
//! `(center, leaf, leaf, leaf)` with leaves ascending, a cycle starting from
//! its smallest vertex and heading to the smaller of that vertex's two cycle
//! neighbors.

use std::ops::ControlFlow;

use crate::error::{Error, Result};
use crate::graph::Graph;

/// Default budget of candidate extensions per search.
pub const DEFAULT_WORK_LIMIT: u64 = 100_000_000;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Pattern {
    P3,
    Claw,
    C4,
    C5,
    Cycle(usize),
}

impl Pattern {
    pub fn size(self) -> usize {
        match self {
            Pattern::P3 => 3,
            Pattern::Claw | Pattern::C4 => 4,
            Pattern::C5 => 5,
            Pattern::Cycle(k) => k,
        }
    }

    fn cycle_length(self) -> Option<usize> {
        match self {
            Pattern::C4 => Some(4),
            Pattern::C5 => Some(5),
            Pattern::Cycle(k) => Some(k),
            _ => None,
        }
    }
}

pub fn find_induced(g: &Graph, pattern: Pattern) -> Result<Vec<Vec<usize>>> {
    find_induced_with_limit(g, pattern, DEFAULT_WORK_LIMIT)
}

pub fn find_induced_with_limit(g: &Graph, pattern: Pattern, limit: u64) -> Result<Vec<Vec<usize>>> {
    let mut out = Vec::new();
    visit_induced(g, pattern, limit, |t| {
        out.push(t.to_vec());
        ControlFlow::Continue(())
    })?;
    Ok(out)
}

/// First occurrence in canonical search order, if any.
pub fn first_induced(g: &Graph, pattern: Pattern, limit: u64) -> Result<Option<Vec<usize>>> {
    let mut hit = None;
    visit_induced(g, pattern, limit, |t| {
        hit = Some(t.to_vec());
        ControlFlow::Break(())
    })?;
    Ok(hit)
}

/// Calls `f` on every occurrence until it breaks. Returns the work spent.
pub fn visit_induced(
    g: &Graph,
    pattern: Pattern,
    limit: u64,
    mut f: impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<u64> {
    let mut budget = Budget { spent: 0, limit };
    if let Some(k) = pattern.cycle_length() {
        if k < 3 {
            return Err(Error::InvalidArgument(format!("cycle length {k} < 3")));
        }
        if k <= g.vertex_count() {
            let mut path = Vec::with_capacity(k);
            let mut on_path = vec![false; g.vertex_count()];
            for s in 0..g.vertex_count() {
                if g.degree(s) < 2 {
                    continue;
                }
                path.push(s);
                on_path[s] = true;
                let flow = extend_cycle(g, k, &mut path, &mut on_path, &mut budget, &mut f)?;
                path.pop();
                on_path[s] = false;
                if flow.is_break() {
                    break;
                }
            }
        }
        return Ok(budget.spent);
    }
    let star = match pattern {
        Pattern::P3 => 2,
        Pattern::Claw => 3,
        _ => unreachable!(),
    };
    for c in 0..g.vertex_count() {
        let nb = g.neighbors(c);
        if nb.len() < star {
            continue;
        }
        let mut picks = Vec::with_capacity(star);
        if pick_independent(g, c, nb, 0, star, &mut picks, &mut budget, &mut f)?.is_break() {
            break;
        }
    }
    Ok(budget.spent)
}

struct Budget {
    spent: u64,
    limit: u64,
}

impl Budget {
    fn charge(&mut self) -> Result<()> {
        self.spent += 1;
        if self.spent > self.limit {
            return Err(Error::LimitExceeded {
                what: "induced-search work",
                count: self.spent.to_string(),
                limit: self.limit,
            });
        }
        Ok(())
    }
}

#[allow(clippy::too_many_arguments)]
fn pick_independent(
    g: &Graph,
    center: usize,
    nb: &[usize],
    from: usize,
    want: usize,
    picks: &mut Vec<usize>,
    budget: &mut Budget,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    if picks.len() == want {
        let tuple: Vec<usize> = if want == 2 {
            vec![picks[0], center, picks[1]]
        } else {
            std::iter::once(center).chain(picks.iter().copied()).collect()
        };
        return Ok(f(&tuple));
    }
    for i in from..nb.len() {
        budget.charge()?;
        let v = nb[i];
        if picks.iter().any(|&p| g.has_edge(p, v)) {
            continue;
        }
        picks.push(v);
        let flow = pick_independent(g, center, nb, i + 1, want, picks, budget, f)?;
        picks.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

fn extend_cycle(
    g: &Graph,
    k: usize,
    path: &mut Vec<usize>,
    on_path: &mut [bool],
    budget: &mut Budget,
    f: &mut impl FnMut(&[usize]) -> ControlFlow<()>,
) -> Result<ControlFlow<()>> {
    let start = path[0];
    let last = *path.last().unwrap();
    let j = path.len();
    let closing = j == k - 1;
    for &v in g.neighbors(last) {
        if v <= start || on_path[v] {
            continue;
        }
        budget.charge()?;
        if closing && !(g.has_edge(v, start) && path[1] < v) {
            continue;
        }
        // Only the predecessor (and the start, when closing) may touch v.
        let chordless = path[..j - 1]
            .iter()
            .enumerate()
            .all(|(i, &p)| if i == 0 { closing || !g.has_edge(p, v) || j == 1 } else { !g.has_edge(p, v) });
        if !chordless {
            continue;
        }
        path.push(v);
        let flow = if closing {
            f(path)
        } else {
            on_path[v] = true;
            let flow = extend_cycle(g, k, path, on_path, budget, f)?;
            on_path[v] = false;
            flow
        };
        path.pop();
        if flow.is_break() {
            return Ok(flow);
        }
    }
    Ok(ControlFlow::Continue(()))
}

/// True iff the vertices of `tuple`, read in order, form the pattern as an
/// induced subgraph (used to re-verify certificates).
pub fn is_induced_occurrence(g: &Graph, pattern: Pattern, tuple: &[usize]) -> bool {
    if tuple.len() != pattern.size() {
        return false;
    }
    let mut sorted = tuple.to_vec();
    sorted.sort_unstable();
    if sorted.windows(2).any(|w| w[0] == w[1]) || sorted.last().is_some_and(|&v| v >= g.vertex_count()) {
        return false;
    }
    let k = tuple.len();
    let expected = |i: usize, j: usize| -> bool {
        match pattern {
            Pattern::P3 => (i == 1) != (j == 1),
            Pattern::Claw => (i == 0) != (j == 0),
            _ => (i + 1) % k == j || (j + 1) % k == i,
        }
    };
    (0..k).all(|i| (0..k).all(|j| i == j || g.has_edge(tuple[i], tuple[j]) == expected(i, j)))
}
