//! Grid graphs `P_{n_1} □ ... □ P_{n_m}` between diametric corners.
//!
//! A geodesic from the origin to `(n_1, ..., n_m)` is a word over
//! `{1..m}` in which symbol `i` appears `n_i` times (symbol `i` = one step
//! along axis `i`). The map `phi` sends a word to the lattice point whose
//! coordinate `a_{ijk}` (for `i < j`) counts the `i`s after the `k`-th `j`.
//! Coordinates are ordered by `j` ascending, then `i`, then `k`.

use std::collections::{HashMap, HashSet};
use std::fmt;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::geodesics::Geodesic;
use crate::graph::{BaseInstance, Graph};

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct GridSpec {
    dims: Vec<usize>,
}

impl GridSpec {
    pub fn new(dims: Vec<usize>) -> Result<Self> {
        if dims.is_empty() || dims.contains(&0) {
            return Err(Error::InvalidArgument(format!("grid dims must be nonempty and positive, got {dims:?}")));
        }
        Ok(GridSpec { dims })
    }

    /// Parses `3,3,2`.
    pub fn parse(text: &str) -> Result<Self> {
        let dims = text
            .split(',')
            .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidArgument(format!("dims `{text}`: {e}"))))
            .collect::<Result<Vec<_>>>()?;
        Self::new(dims)
    }

    pub fn dims(&self) -> &[usize] {
        &self.dims
    }

    /// Number of axes `m`.
    pub fn axes(&self) -> usize {
        self.dims.len()
    }

    /// Geodesic length `N = Σ n_i`.
    pub fn total(&self) -> usize {
        self.dims.iter().sum()
    }

    /// Lattice dimension `M = Σ_{i>=2} (i-1) n_i`.
    pub fn lattice_dim(&self) -> usize {
        lattice_dim(&self.dims)
    }

    /// True when every multiplicity is 1 (the hypercube `Q_m`).
    pub fn is_hypercube(&self) -> bool {
        self.dims.iter().all(|&n| n == 1)
    }

    /// Number of geodesics, `N! / (n_1! ... n_m!)`.
    pub fn geodesic_count(&self) -> BigUint {
        multinomial(&self.dims)
    }

    /// Offset of coordinate `a_{ijk}` (1-based `i < j`, `k`).
    pub fn offset(&self, i: usize, j: usize, k: usize) -> usize {
        let before_j: usize = (2..j).map(|t| (t - 1) * self.dims[t - 1]).sum();
        before_j + (i - 1) * self.dims[j - 1] + (k - 1)
    }
}

pub fn lattice_dim(dims: &[usize]) -> usize {
    dims.iter().enumerate().map(|(idx, &n)| idx * n).sum()
}

pub fn multinomial(parts: &[usize]) -> BigUint {
    let mut result = BigUint::from(1u32);
    let mut placed = 0usize;
    for &n in parts {
        // C(placed + n, n), accumulated one factor at a time to stay exact.
        for t in 1..=n {
            result *= BigUint::from(placed + t);
            result /= BigUint::from(t);
        }
        placed += n;
    }
    result
}

/// A word in `B_{n_1..n_m}`; symbols are 1-based axis numbers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct MoveSequence {
    symbols: Vec<usize>,
    dims: Vec<usize>,
}

impl MoveSequence {
    pub fn new(spec: &GridSpec, symbols: Vec<usize>) -> Result<Self> {
        let mut seen = vec![0usize; spec.axes()];
        for &s in &symbols {
            if s == 0 || s > spec.axes() {
                return Err(Error::InvalidArgument(format!("symbol {s} outside 1..={}", spec.axes())));
            }
            seen[s - 1] += 1;
        }
        if seen != spec.dims {
            return Err(Error::InvalidArgument(format!(
                "symbol multiplicities {seen:?} do not match dims {:?}",
                spec.dims
            )));
        }
        Ok(MoveSequence { symbols, dims: spec.dims.clone() })
    }

    /// Digit string (`32121231`) or, for more than nine axes, a
    /// comma-separated list.
    pub fn parse(spec: &GridSpec, text: &str) -> Result<Self> {
        let text = text.trim();
        let symbols = if text.contains(',') {
            text.split(',')
                .map(|t| t.trim().parse::<usize>().map_err(|e| Error::InvalidArgument(format!("word `{text}`: {e}"))))
                .collect::<Result<Vec<_>>>()?
        } else {
            text.chars()
                .map(|c| c.to_digit(10).map(|d| d as usize).ok_or_else(|| Error::InvalidArgument(format!("word `{text}`: bad symbol `{c}`"))))
                .collect::<Result<Vec<_>>>()?
        };
        Self::new(spec, symbols)
    }

    pub fn symbols(&self) -> &[usize] {
        &self.symbols
    }

    pub fn spec(&self) -> GridSpec {
        GridSpec { dims: self.dims.clone() }
    }

    /// Lattice points visited, origin first.
    pub fn points(&self) -> Vec<Vec<usize>> {
        let mut at = vec![0; self.dims.len()];
        let mut out = vec![at.clone()];
        for &s in &self.symbols {
            at[s - 1] += 1;
            out.push(at.clone());
        }
        out
    }

    pub fn from_points(spec: &GridSpec, points: &[Vec<usize>]) -> Result<Self> {
        let origin = vec![0; spec.axes()];
        if points.first() != Some(&origin) || points.last().map(|p| p.as_slice()) != Some(spec.dims()) {
            return Err(Error::InvalidArgument("path must run from the origin to the far corner".into()));
        }
        let mut symbols = Vec::with_capacity(points.len() - 1);
        for w in points.windows(2) {
            let mut step = None;
            for axis in 0..spec.axes() {
                match w[1][axis].checked_sub(w[0][axis]) {
                    Some(0) => {}
                    Some(1) if step.is_none() => step = Some(axis + 1),
                    _ => return Err(Error::InvalidArgument(format!("{:?} -> {:?} is not a unit step", w[0], w[1]))),
                }
            }
            symbols.push(step.ok_or_else(|| Error::InvalidArgument("repeated vertex".into()))?);
        }
        Self::new(spec, symbols)
    }

    /// True iff the words differ by swapping two distinct adjacent symbols.
    pub fn is_adjacent(&self, other: &MoveSequence) -> bool {
        let (p, q) = (&self.symbols, &other.symbols);
        if p.len() != q.len() {
            return false;
        }
        let diff: Vec<usize> = (0..p.len()).filter(|&t| p[t] != q[t]).collect();
        matches!(diff.as_slice(), [r, s] if *s == r + 1 && p[*r] == q[*s] && p[*s] == q[*r])
    }
}

impl fmt::Display for MoveSequence {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.dims.len() <= 9 {
            self.symbols.iter().try_for_each(|s| write!(f, "{s}"))
        } else {
            let parts: Vec<String> = self.symbols.iter().map(|s| s.to_string()).collect();
            write!(f, "{}", parts.join(","))
        }
    }
}

/// A point of `Z^M` tagged with its grid.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct LatticePoint {
    pub dims: Vec<usize>,
    pub coords: Vec<i64>,
}

impl LatticePoint {
    pub fn new(spec: &GridSpec, coords: Vec<i64>) -> Result<Self> {
        if coords.len() != spec.lattice_dim() {
            return Err(Error::InvalidArgument(format!(
                "expected {} coordinates, got {}",
                spec.lattice_dim(),
                coords.len()
            )));
        }
        Ok(LatticePoint { dims: spec.dims.clone(), coords })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("lattice point json")
    }
}

impl fmt::Display for LatticePoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.coords.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

fn point_name(p: &[usize]) -> String {
    let parts: Vec<String> = p.iter().map(|x| x.to_string()).collect();
    format!("({})", parts.join(","))
}

/// The grid with `a` the origin and `b` the far corner.
pub fn grid_base(spec: &GridSpec) -> BaseInstance {
    let mut points: Vec<Vec<usize>> = vec![Vec::new()];
    for &n in spec.dims() {
        points = points
            .into_iter()
            .flat_map(|p| {
                (0..=n).map(move |x| {
                    let mut q = p.clone();
                    q.push(x);
                    q
                })
            })
            .collect();
    }
    let mut edges = Vec::new();
    for p in &points {
        for axis in 0..spec.axes() {
            if p[axis] < spec.dims[axis] {
                let mut q = p.clone();
                q[axis] += 1;
                edges.push((point_name(p), point_name(&q)));
            }
        }
    }
    let names: Vec<String> = points.iter().map(|p| point_name(p)).collect();
    let graph = Graph::new(names, edges).expect("grid names are unique");
    let origin = point_name(&vec![0; spec.axes()]);
    BaseInstance::new(graph, &origin, &point_name(spec.dims())).expect("grid corners are distinct")
}

fn parse_point(name: &str) -> Option<Vec<usize>> {
    let inner = name.strip_prefix('(')?.strip_suffix(')')?;
    inner.split(',').map(|t| t.parse().ok()).collect()
}

/// Reads a geodesic of [`grid_base`] as a move word.
pub fn sequence_of_geodesic(inst: &BaseInstance, spec: &GridSpec, geodesic: &Geodesic) -> Result<MoveSequence> {
    GridCodec::new(inst, spec)?.sequence(geodesic)
}

/// Geodesic-to-word decoding with the grid coordinates of every vertex
/// parsed once.
pub struct GridCodec {
    spec: GridSpec,
    points: Vec<Vec<usize>>,
}

impl GridCodec {
    pub fn new(inst: &BaseInstance, spec: &GridSpec) -> Result<Self> {
        let points = inst
            .graph()
            .names()
            .iter()
            .map(|name| {
                parse_point(name)
                    .filter(|p| p.len() == spec.axes())
                    .ok_or_else(|| Error::InvalidArgument(format!("`{name}` is not a vertex of this grid")))
            })
            .collect::<Result<Vec<_>>>()?;
        Ok(GridCodec { spec: spec.clone(), points })
    }

    pub fn sequence(&self, geodesic: &Geodesic) -> Result<MoveSequence> {
        let path = geodesic.vertices();
        let origin = vec![0; self.spec.axes()];
        if path.first().map(|&v| &self.points[v]) != Some(&origin)
            || path.last().map(|&v| self.points[v].as_slice()) != Some(self.spec.dims())
        {
            return Err(Error::InvalidArgument("path must run from the origin to the far corner".into()));
        }
        let mut symbols = Vec::with_capacity(path.len().saturating_sub(1));
        for w in path.windows(2) {
            let (p, q) = (&self.points[w[0]], &self.points[w[1]]);
            let mut step = None;
            for axis in 0..p.len() {
                match q[axis].checked_sub(p[axis]) {
                    Some(0) => {}
                    Some(1) if step.is_none() => step = Some(axis + 1),
                    _ => return Err(Error::InvalidArgument(format!("{p:?} -> {q:?} is not a unit step"))),
                }
            }
            symbols.push(step.ok_or_else(|| Error::InvalidArgument("repeated vertex".into()))?);
        }
        MoveSequence::new(&self.spec, symbols)
    }
}

/// The geodesic of [`grid_base`] spelled by `word`.
pub fn geodesic_of_sequence(inst: &BaseInstance, word: &MoveSequence) -> Result<Geodesic> {
    word.points()
        .iter()
        .map(|p| inst.graph().require(&point_name(p)))
        .collect::<Result<Vec<_>>>()
        .map(Geodesic)
}

/// All words of `B_{n_1..n_m}` in lexicographic order.
pub fn enumerate_sequences(spec: &GridSpec, limit: u64) -> Result<Vec<MoveSequence>> {
    let count = spec.geodesic_count();
    if count > BigUint::from(limit) {
        return Err(Error::LimitExceeded { what: "sequence", count: count.to_string(), limit });
    }
    let mut out = Vec::new();
    let mut remaining = spec.dims.clone();
    let mut word = Vec::with_capacity(spec.total());
    fill(&mut remaining, &mut word, spec, &mut out);
    Ok(out)
}

fn fill(remaining: &mut [usize], word: &mut Vec<usize>, spec: &GridSpec, out: &mut Vec<MoveSequence>) {
    if word.len() == spec.total() {
        out.push(MoveSequence { symbols: word.clone(), dims: spec.dims.clone() });
        return;
    }
    for s in 0..remaining.len() {
        if remaining[s] > 0 {
            remaining[s] -= 1;
            word.push(s + 1);
            fill(remaining, word, spec, out);
            word.pop();
            remaining[s] += 1;
        }
    }
}

/// The lattice embedding `phi`.
pub fn phi(word: &MoveSequence) -> LatticePoint {
    let spec = word.spec();
    let m = spec.axes();
    // after[s] = occurrences of symbol s+1 strictly after the current position
    let mut after = vec![0i64; m];
    let mut coords = vec![0i64; spec.lattice_dim()];
    let mut seen_from_right = vec![0usize; m];
    for &s in word.symbols.iter().rev() {
        let j = s;
        let k = spec.dims[j - 1] - seen_from_right[j - 1];
        for i in 1..j {
            coords[spec.offset(i, j, k)] = after[i - 1];
        }
        seen_from_right[j - 1] += 1;
        after[j - 1] += 1;
    }
    LatticePoint { dims: spec.dims, coords }
}

/// Inverse of [`phi`] on its image. The word is rebuilt from the right: at
/// each step the next symbol must be the latest unplaced one in every pair
/// it belongs to.
pub fn phi_inverse(point: &LatticePoint) -> Result<MoveSequence> {
    let spec = GridSpec::new(point.dims.clone())?;
    if point.coords.len() != spec.lattice_dim() {
        return Err(Error::NotInImage(format!(
            "expected {} coordinates, got {}",
            spec.lattice_dim(),
            point.coords.len()
        )));
    }
    let m = spec.axes();
    let a = |i: usize, j: usize, k: usize| point.coords[spec.offset(i, j, k)];
    for j in 2..=m {
        for i in 1..j {
            for k in 1..=spec.dims[j - 1] {
                let v = a(i, j, k);
                if v < 0 || v > spec.dims[i - 1] as i64 {
                    return Err(Error::NotInImage(format!("a_{{{i}{j}{k}}} = {v} outside 0..={}", spec.dims[i - 1])));
                }
                if k > 1 && a(i, j, k - 1) < v {
                    return Err(Error::NotInImage(format!("a_{{{i}{j}{k}}} increases in k")));
                }
            }
        }
    }
    let mut placed = vec![0usize; m];
    let mut reversed = Vec::with_capacity(spec.total());
    // Which of the pair (i < j) comes next from the right.
    let next_in_pair = |placed: &[usize], i: usize, j: usize| -> usize {
        let kj = spec.dims[j - 1] - placed[j - 1];
        if kj >= 1 && a(i, j, kj) <= placed[i - 1] as i64 {
            j
        } else {
            i
        }
    };
    for _ in 0..spec.total() {
        let candidate = (1..=m).find(|&s| {
            placed[s - 1] < spec.dims[s - 1]
                && (1..=m).all(|t| {
                    t == s
                        || placed[t - 1] == spec.dims[t - 1]
                        || next_in_pair(&placed, s.min(t), s.max(t)) == s
                })
        });
        let s = candidate.ok_or_else(|| Error::NotInImage("pairwise orders admit no common word".into()))?;
        placed[s - 1] += 1;
        reversed.push(s);
    }
    reversed.reverse();
    let word = MoveSequence { symbols: reversed, dims: spec.dims.clone() };
    if phi(&word).coords != point.coords {
        return Err(Error::NotInImage("pairwise orders are inconsistent".into()));
    }
    Ok(word)
}

/// Graph induced in `Z^M` by `points` (unit steps in one coordinate).
/// Vertex `t` corresponds to `points[t]`; names are `0..n`. Points are
/// located through a linear fingerprint, so a unit step updates the key in
/// constant time; candidates are compared coordinate by coordinate.
pub fn lattice_induced_graph(points: &[LatticePoint]) -> Result<Graph> {
    let dim = points.first().map_or(0, |p| p.coords.len());
    let weights: Vec<u64> = (0..dim as u64).map(|c| splitmix(c + 1) | 1).collect();
    let key = |coords: &[i64]| coords.iter().zip(&weights).fold(0u64, |acc, (&x, &w)| acc.wrapping_add((x as u64).wrapping_mul(w)));
    let mut table: Vec<(u64, usize)> = points.iter().enumerate().map(|(t, p)| (key(&p.coords), t)).collect();
    table.sort_unstable();
    let mut run_start: HashMap<u64, usize> = HashMap::with_capacity(table.len());
    for (pos, e) in table.iter().enumerate() {
        run_start.entry(e.0).or_insert(pos);
    }
    let find = |k: u64, coords: &[i64], step: Option<usize>| -> Option<usize> {
        let start = *run_start.get(&k)?;
        table[start..].iter().take_while(|e| e.0 == k).map(|e| e.1).find(|&u| {
            let q = &points[u].coords;
            q.len() == coords.len()
                && (0..coords.len()).all(|c| q[c] == coords[c] + i64::from(step == Some(c)))
        })
    };
    let mut edges = Vec::new();
    for (t, p) in points.iter().enumerate() {
        let k = key(&p.coords);
        if find(k, &p.coords, None) != Some(t) {
            return Err(Error::InvalidArgument(format!("lattice point {p} is repeated")));
        }
        for c in 0..dim {
            if let Some(u) = find(k.wrapping_add(weights[c]), &p.coords, Some(c)) {
                edges.push((t, u));
            }
        }
    }
    Graph::from_indexed(points.len(), &edges)
}

fn splitmix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

/// The staircase graph: non-increasing tuples `n1 >= a_1 >= ... >= a_{n2} >= 0`
/// joined by unit steps.
pub fn staircase(n1: usize, n2: usize) -> Result<Graph> {
    if n1 == 0 || n2 == 0 {
        return Err(Error::InvalidArgument("staircase needs n1, n2 >= 1".into()));
    }
    let mut tuples: Vec<Vec<usize>> = Vec::new();
    let mut cur = Vec::with_capacity(n2);
    fn descend(bound: usize, len: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == len {
            out.push(cur.clone());
            return;
        }
        for v in (0..=bound).rev() {
            cur.push(v);
            descend(v, len, cur, out);
            cur.pop();
        }
    }
    descend(n1, n2, &mut cur, &mut tuples);
    let set: HashSet<&Vec<usize>> = tuples.iter().collect();
    let mut edges = Vec::new();
    for t in &tuples {
        for c in 0..n2 {
            let mut up = t.clone();
            up[c] += 1;
            if set.contains(&up) {
                edges.push((point_name(t), point_name(&up)));
            }
        }
    }
    Graph::new(tuples.iter().map(|t| point_name(t)), edges)
}

fn permutation_name(p: &[usize]) -> String {
    if p.len() <= 9 {
        p.iter().map(|d| d.to_string()).collect()
    } else {
        p.iter().map(|d| d.to_string()).collect::<Vec<_>>().join(",")
    }
}

/// `Cay(S_m; T)` with `T` the adjacent transpositions: permutations as
/// words, joined when they differ by swapping two consecutive entries.
pub fn cayley_adjacent_transpositions(m: usize, limit: u64) -> Result<Graph> {
    if m == 0 {
        return Err(Error::InvalidArgument("cayley needs m >= 1".into()));
    }
    let count = multinomial(&vec![1; m]);
    if count > BigUint::from(limit) {
        return Err(Error::LimitExceeded { what: "permutation", count: count.to_string(), limit });
    }
    let spec = GridSpec::new(vec![1; m])?;
    let perms = enumerate_sequences(&spec, limit)?;
    let mut edges = Vec::new();
    for p in &perms {
        for i in 0..m - 1 {
            if p.symbols[i] < p.symbols[i + 1] {
                let mut q = p.symbols.clone();
                q.swap(i, i + 1);
                edges.push((permutation_name(&p.symbols), permutation_name(&q)));
            }
        }
    }
    Graph::new(perms.iter().map(|p| permutation_name(&p.symbols)), edges)
}

/// Orientation of the complete graph on `1..m`: for each pair `i < j` in
/// coordinate order, `false` is `i -> j` and `true` is `j -> i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct TransitiveTournament {
    pub m: usize,
    pub reversed: Vec<bool>,
}

impl TransitiveTournament {
    fn slot(&self, i: usize, j: usize) -> usize {
        // Pairs grouped by j: (1,2), (1,3), (2,3), (1,4), ...
        (j - 1) * (j - 2) / 2 + (i - 1)
    }

    /// True iff the arc between `u` and `v` points from `u` to `v`.
    pub fn beats(&self, u: usize, v: usize) -> bool {
        let (i, j) = (u.min(v), u.max(v));
        let rev = self.reversed[self.slot(i, j)];
        if u < v {
            !rev
        } else {
            rev
        }
    }

    pub fn is_transitive(&self) -> bool {
        for x in 1..=self.m {
            for y in 1..=self.m {
                for z in 1..=self.m {
                    if x != y && y != z && x != z && self.beats(x, y) && self.beats(y, z) && !self.beats(x, z) {
                        return false;
                    }
                }
            }
        }
        true
    }
}

/// Tournament read off `phi` of a permutation word.
pub fn tournament_of(word: &MoveSequence) -> Result<TransitiveTournament> {
    let spec = word.spec();
    if !spec.is_hypercube() {
        return Err(Error::InvalidArgument(format!("tournaments need all multiplicities 1, got {:?}", spec.dims)));
    }
    let p = phi(word);
    let t = TransitiveTournament { m: spec.axes(), reversed: p.coords.iter().map(|&c| c == 1).collect() };
    if !t.is_transitive() {
        return Err(Error::Construction("tournament from a permutation is not transitive".into()));
    }
    Ok(t)
}
