//! Structural checks every shortest path graph passes, each returning either
//! a pass or a failure carrying a certificate that can be re-checked on its
//! own.
//!
//! The graph-level checkers take any index-labelled [`SpGraph`], including
//! ones no base graph realizes, so that they can be shown to fail.

use std::collections::{BTreeMap, HashMap};
use std::fmt::Write as _;
use std::ops::ControlFlow;
use std::path::PathBuf;

use num_bigint::BigUint;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use crate::constructions::{self, TwoSumCase, TwoSumParts};
use crate::error::{Error, Result};
use crate::geodesics::{GeodesicDag, DEFAULT_GEODESIC_LIMIT};
use crate::graph::{cartesian_product, BaseInstance, Graph};
use crate::grid::{self, GridSpec};
use crate::induced::{self, Pattern, DEFAULT_WORK_LIMIT};
use crate::iso::{self, DEFAULT_ISO_CAP};
use crate::spg::{self, build_spg, SpGraph};

/// Longest odd cycle searched for by [`check_odd_cycle_c4`] by default.
pub const DEFAULT_ODD_CYCLE_CAP: usize = 9;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Limits {
    pub geodesics: u64,
    pub work: u64,
    pub iso_cap: usize,
    pub odd_cycle_cap: usize,
}

impl Default for Limits {
    fn default() -> Self {
        Limits {
            geodesics: DEFAULT_GEODESIC_LIMIT,
            work: DEFAULT_WORK_LIMIT,
            iso_cap: DEFAULT_ISO_CAP,
            odd_cycle_cap: DEFAULT_ODD_CYCLE_CAP,
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Witness {
    /// SpGraph vertices forming the offending configuration, in pattern order.
    Vertices { vertices: Vec<usize> },
    /// SpGraph edges that together break the claim.
    Edges { edges: Vec<(usize, usize)> },
    /// A failure that is not a vertex configuration (decomposition, sums).
    Detail { detail: String },
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct CheckReport {
    pub name: String,
    pub passed: bool,
    pub witness: Option<Witness>,
    pub stats: BTreeMap<String, u64>,
}

impl CheckReport {
    fn new(name: &str) -> Self {
        CheckReport { name: name.to_owned(), passed: true, witness: None, stats: BTreeMap::new() }
    }

    fn stat(&mut self, key: &str, value: u64) {
        self.stats.insert(key.to_owned(), value);
    }

    fn bump(&mut self, key: &str) {
        *self.stats.entry(key.to_owned()).or_default() += 1;
    }

    fn fail(mut self, witness: Witness) -> Self {
        self.passed = false;
        self.witness = Some(witness);
        self
    }

    fn fail_detail(self, detail: impl Into<String>) -> Self {
        self.fail(Witness::Detail { detail: detail.into() })
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("report json")
    }
}

fn label(h: &SpGraph, u: usize, w: usize) -> usize {
    h.edge_label(u, w).expect("edge has a difference index")
}

/// A vertex other than `skip` adjacent to both `x` and `y`.
fn common_neighbor(g: &Graph, x: usize, y: usize, skip: usize) -> Option<usize> {
    g.neighbors(x).iter().copied().find(|&w| w != skip && g.has_edge(w, y))
}

/// Every induced `P_3` whose two difference indices are at least two apart
/// lies on an induced `C_4`.
pub fn check_p3_c4(h: &SpGraph, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("p3_c4");
    let g = h.graph();
    let mut bad = None;
    induced::visit_induced(g, Pattern::P3, limits.work, |t| {
        let (x, c, y) = (t[0], t[1], t[2]);
        report.bump("p3");
        if label(h, x, c).abs_diff(label(h, c, y)) < 2 {
            return ControlFlow::Continue(());
        }
        report.bump("far_p3");
        // x, y are non-adjacent, so a common neighbour w != c closes a
        // 4-cycle; it is induced unless w touches c, which would put c, w
        // and x in a triangle.
        match g.neighbors(x).iter().find(|&&w| w != c && g.has_edge(w, y) && !g.has_edge(w, c)) {
            Some(_) => ControlFlow::Continue(()),
            None => {
                bad = Some(t.to_vec());
                ControlFlow::Break(())
            }
        }
    })?;
    Ok(match bad {
        Some(vertices) => report.fail(Witness::Vertices { vertices }),
        None => report,
    })
}

pub fn check_no_induced_c5(h: &SpGraph, limits: &Limits) -> Result<CheckReport> {
    let report = CheckReport::new("no_induced_c5");
    Ok(match induced::first_induced(h.graph(), Pattern::C5, limits.work)? {
        Some(vertices) => report.fail(Witness::Vertices { vertices }),
        None => report,
    })
}

/// Every induced claw has a 4-cycle through two of its edges.
pub fn check_claw_in_c4(h: &SpGraph, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("claw_in_c4");
    let g = h.graph();
    let mut bad = None;
    induced::visit_induced(g, Pattern::Claw, limits.work, |t| {
        report.bump("claws");
        let c = t[0];
        let leaves = &t[1..];
        let closed = (0..3).any(|p| (p + 1..3).any(|q| common_neighbor(g, leaves[p], leaves[q], c).is_some()));
        if closed {
            ControlFlow::Continue(())
        } else {
            bad = Some(t.to_vec());
            ControlFlow::Break(())
        }
    })?;
    Ok(match bad {
        Some(vertices) => report.fail(Witness::Vertices { vertices }),
        None => report,
    })
}

/// An induced odd cycle of length in `5..=cap` forces an induced `C_4`.
pub fn check_odd_cycle_c4(h: &SpGraph, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("odd_cycle_c4");
    report.stat("cap", limits.odd_cycle_cap as u64);
    let g = h.graph();
    let mut found = None;
    for k in (5..=limits.odd_cycle_cap.min(g.vertex_count())).step_by(2) {
        if let Some(c) = induced::first_induced(g, Pattern::Cycle(k), limits.work)? {
            found = Some(c);
            break;
        }
    }
    let Some(cycle) = found else {
        return Ok(report);
    };
    report.stat("odd_cycle_length", cycle.len() as u64);
    Ok(match induced::first_induced(g, Pattern::C4, limits.work)? {
        Some(_) => report,
        None => report.fail(Witness::Vertices { vertices: cycle }),
    })
}

/// With girth at least 5, every component with an edge is a path or an even
/// cycle of length at least 6 ("greater than 5" read as `>= 6`; `C_4` is
/// already excluded by the girth bound).
pub fn check_girth5_classification(h: &SpGraph) -> CheckReport {
    let mut report = CheckReport::new("girth5_classification");
    let g = h.graph();
    let girth = g.girth();
    report.stat("girth", girth.unwrap_or(0) as u64);
    if girth.is_some_and(|k| k < 5) {
        return report;
    }
    for comp in g.components() {
        if comp.len() < 2 {
            continue;
        }
        report.bump("components");
        if !component_is_path_or_long_even_cycle(g, &comp) {
            return report.fail(Witness::Vertices { vertices: comp });
        }
    }
    report
}

fn component_is_path_or_long_even_cycle(g: &Graph, comp: &[usize]) -> bool {
    let n = comp.len();
    let degree_sum: usize = comp.iter().map(|&v| g.degree(v)).sum();
    let max_degree = comp.iter().map(|&v| g.degree(v)).max().unwrap_or(0);
    let edges = degree_sum / 2;
    max_degree <= 2 && (edges + 1 == n || (edges == n && n % 2 == 0 && n >= 6))
}

/// `S` is complete iff all pairs of geodesics differ at one common index.
/// For unrealized input the pair differences are read off the edge labels.
pub fn complete_iff_same_index(h: &SpGraph) -> CheckReport {
    let mut report = CheckReport::new("complete_iff_same_index");
    let g = h.graph();
    let n = h.vertex_count();
    let complete = g.is_complete();
    let mut common: Option<(usize, (usize, usize))> = None;
    let mut mixed = None;
    let mut same = true;
    'pairs: for u in 0..n {
        for w in u + 1..n {
            let idx = if h.is_realized() {
                spg::difference_index(&h.geodesics()[u], &h.geodesics()[w]).expect("geodesics share endpoints")
            } else {
                h.edge_label(u, w)
            };
            match (idx, common) {
                (None, _) => {
                    same = false;
                    break 'pairs;
                }
                (Some(i), None) => common = Some((i, (u, w))),
                (Some(i), Some((j, first))) if i != j => {
                    same = false;
                    mixed = Some(vec![first, (u, w)]);
                    break 'pairs;
                }
                _ => {}
            }
        }
    }
    report.stat("vertices", n as u64);
    report.stat("complete", complete as u64);
    report.stat("same_index", same as u64);
    if complete == same {
        return report;
    }
    match mixed {
        Some(edges) => report.fail(Witness::Edges { edges }),
        None => report.fail_detail(format!("complete = {complete}, same index = {same}")),
    }
}

pub fn check_complete_iff_same_index(inst: &BaseInstance, limits: &Limits) -> Result<CheckReport> {
    Ok(complete_iff_same_index(&build_spg(inst, limits.geodesics)?))
}

/// Splitting `S` along `E_i`: parts are indexed by the vertices at distance
/// `i` on geodesics, no other edge runs between parts, each part is
/// `S(G,a,v) □ S(G,v,b)` via `U -> (U[..=i], U[i..])`, and the `E_i` edges
/// between any two parts form a partial matching.
pub fn check_decomposition(inst: &BaseInstance, i: usize, limits: &Limits) -> Result<CheckReport> {
    let h = build_spg(inst, limits.geodesics)?;
    decomposition_of(inst, &h, i, limits)
}

fn decomposition_of(inst: &BaseInstance, h: &SpGraph, i: usize, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("decomposition");
    report.stat("index", i as u64);
    let d = h.distance().unwrap_or(0);
    if i == 0 || i + 1 > d {
        return Err(Error::IndexOutOfRange { index: i, max: d.saturating_sub(1) });
    }
    let dec = spg::decompose_at_index(h, i)?;
    let dag = GeodesicDag::build(inst)?;
    report.stat("parts", dec.components.len() as u64);
    report.stat("cross_edges", dec.cross_edges.len() as u64);
    if dec.middle_vertices != dag.layer(i) {
        return Ok(report.fail_detail(format!(
            "parts at {:?}, distance-{i} geodesic vertices {:?}",
            dec.middle_vertices,
            dag.layer(i)
        )));
    }
    let mut part_of = vec![0usize; h.vertex_count()];
    for (k, comp) in dec.components.iter().enumerate() {
        for &u in comp {
            part_of[u] = k;
        }
    }
    if let Some((u, w, j)) = h.labeled_edges().find(|&(u, w, j)| j != i && part_of[u] != part_of[w]) {
        return Ok(report.fail_detail(format!("edge {u}-{w} with index {j} joins two parts")));
    }
    for (k, comp) in dec.components.iter().enumerate() {
        let v = dec.middle_vertices[k];
        let left = build_spg(&inst.with_endpoints(inst.source(), v)?, limits.geodesics)?;
        let right = build_spg(&inst.with_endpoints(v, inst.target())?, limits.geodesics)?;
        let product = cartesian_product(left.graph(), right.graph());
        let left_of: HashMap<&[usize], usize> =
            left.geodesics().iter().enumerate().map(|(t, g)| (g.vertices(), t)).collect();
        let right_of: HashMap<&[usize], usize> =
            right.geodesics().iter().enumerate().map(|(t, g)| (g.vertices(), t)).collect();
        let position: HashMap<usize, usize> = comp.iter().enumerate().map(|(t, &u)| (u, t)).collect();
        let part_edges: Vec<(usize, usize)> = h
            .labeled_edges()
            .filter(|&(u, w, _)| position.contains_key(&u) && position.contains_key(&w))
            .map(|(u, w, _)| (position[&u], position[&w]))
            .collect();
        let part = Graph::from_indexed(comp.len(), &part_edges)?;
        let mut witness = Vec::with_capacity(comp.len());
        for &u in comp {
            let p = h.geodesics()[u].vertices();
            let (l, r) = match (left_of.get(&p[..=i]), right_of.get(&p[i..])) {
                (Some(&l), Some(&r)) => (l, r),
                _ => return Ok(report.fail_detail(format!("geodesic {u} does not split at position {i}"))),
            };
            let name = format!("({},{})", left.graph().name(l), right.graph().name(r));
            witness.push(product.index_of(&name).expect("product vertex"));
        }
        if !iso::verify_witness(&part, &product, &witness) {
            return Ok(report.fail_detail(format!(
                "part through `{}` ({} vertices) is not S(a,v) x S(v,b) ({} vertices)",
                inst.graph().name(v),
                part.vertex_count(),
                product.vertex_count()
            )));
        }
    }
    let mut used: HashMap<(usize, usize, usize), (usize, usize)> = HashMap::new();
    for &(u, w, j, l) in &dec.cross_edges {
        let pair = (j.min(l), j.max(l));
        for x in [u, w] {
            if let Some(&prev) = used.get(&(pair.0, pair.1, x)) {
                return Ok(report.fail(Witness::Edges { edges: vec![prev, (u, w)] }));
            }
            used.insert((pair.0, pair.1, x), (u, w));
        }
    }
    Ok(report)
}

/// Inputs to [`check_sum_theorems`].
#[derive(Debug, Clone)]
pub enum SumInput {
    OneSum(BaseInstance, BaseInstance),
    TwoSum(TwoSumParts),
    Union(BaseInstance, BaseInstance),
}

impl SumInput {
    pub fn kind(&self) -> &'static str {
        match self {
            SumInput::OneSum(..) => "one_sum",
            SumInput::TwoSum(..) => "two_sum",
            SumInput::Union(..) => "union",
        }
    }
}

/// The glued instance's shortest path graph is isomorphic to the one
/// assembled from the pieces; for two-sums that never use the shared edge
/// (cases I-III), deleting it changes nothing.
pub fn check_sum_theorems(input: &SumInput, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new(input.kind());
    let iso_holds = |a: &Graph, b: &Graph| -> Result<bool> {
        Ok(iso::is_isomorphic_with_cap(a, b, limits.iso_cap)?.is_some())
    };
    let (instance, predicted) = match input {
        SumInput::OneSum(i1, i2) => {
            let c = constructions::one_sum(i1, i2, limits.geodesics)?;
            (c.instance.clone(), c.predicted_graph().expect("graph prediction").clone())
        }
        SumInput::Union(i1, i2) => {
            let c = constructions::union_base(i1, i2, limits.geodesics)?;
            (c.instance.clone(), c.predicted_graph().expect("graph prediction").clone())
        }
        SumInput::TwoSum(parts) => {
            let p = constructions::predict_two_sum(parts, limits.geodesics)?;
            report.stat("case", p.case as u64 + 1);
            report.stat("matching_edges", p.matching_edges as u64);
            let inst = constructions::two_sum(parts)?;
            if p.case != TwoSumCase::IV {
                let direct = build_spg(&inst, limits.geodesics)?;
                let cut = build_spg(&constructions::without_shared_edge(&inst, &parts.x, &parts.y)?, limits.geodesics)?;
                if !iso_holds(direct.graph(), cut.graph())? {
                    return Ok(report.fail_detail(format!(
                        "case {:?}: deleting {}{} changes S ({} -> {} vertices)",
                        p.case,
                        parts.x,
                        parts.y,
                        direct.vertex_count(),
                        cut.vertex_count()
                    )));
                }
            }
            (inst, p.graph)
        }
    };
    let direct = build_spg(&instance, limits.geodesics)?;
    report.stat("vertices", direct.vertex_count() as u64);
    report.stat("edges", direct.edge_count() as u64);
    if !iso_holds(direct.graph(), &predicted)? {
        return Ok(report.fail_detail(format!(
            "S has {} vertices / {} edges, prediction {} / {}",
            direct.vertex_count(),
            direct.edge_count(),
            predicted.vertex_count(),
            predicted.edge_count()
        )));
    }
    Ok(report)
}

/// Recomputes a failing report's certificate against `h`. True iff the
/// witness really exhibits a violation of the named check.
pub fn confirms_failure(report: &CheckReport, h: &SpGraph) -> bool {
    let g = h.graph();
    match (report.name.as_str(), &report.witness) {
        ("p3_c4", Some(Witness::Vertices { vertices: t })) => {
            induced::is_induced_occurrence(g, Pattern::P3, t)
                && label(h, t[0], t[1]).abs_diff(label(h, t[1], t[2])) >= 2
                && !g.neighbors(t[0]).iter().any(|&w| w != t[1] && g.has_edge(w, t[2]) && !g.has_edge(w, t[1]))
        }
        ("no_induced_c5", Some(Witness::Vertices { vertices: t })) => induced::is_induced_occurrence(g, Pattern::C5, t),
        ("claw_in_c4", Some(Witness::Vertices { vertices: t })) => {
            induced::is_induced_occurrence(g, Pattern::Claw, t)
                && (1..4).all(|p| (p + 1..4).all(|q| common_neighbor(g, t[p], t[q], t[0]).is_none()))
        }
        ("odd_cycle_c4", Some(Witness::Vertices { vertices: t })) => {
            t.len() % 2 == 1
                && induced::is_induced_occurrence(g, Pattern::Cycle(t.len()), t)
                && matches!(induced::first_induced(g, Pattern::C4, u64::MAX), Ok(None))
        }
        ("girth5_classification", Some(Witness::Vertices { vertices: comp })) => {
            g.girth().is_none_or(|k| k >= 5) && !component_is_path_or_long_even_cycle(g, comp)
        }
        ("complete_iff_same_index", Some(Witness::Edges { edges })) => {
            g.is_complete() && edges.len() == 2 && h.edge_label(edges[0].0, edges[0].1) != h.edge_label(edges[1].0, edges[1].1)
        }
        _ => false,
    }
}

/// The checks run per corpus instance.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum CheckKind {
    P3C4,
    NoC5,
    Claw,
    OddCycle,
    Girth5,
    Decomposition,
    CompleteIffSameIndex,
}

impl CheckKind {
    pub const ALL: [CheckKind; 7] = [
        CheckKind::P3C4,
        CheckKind::NoC5,
        CheckKind::Claw,
        CheckKind::OddCycle,
        CheckKind::Girth5,
        CheckKind::Decomposition,
        CheckKind::CompleteIffSameIndex,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckKind::P3C4 => "p3_c4",
            CheckKind::NoC5 => "no_induced_c5",
            CheckKind::Claw => "claw_in_c4",
            CheckKind::OddCycle => "odd_cycle_c4",
            CheckKind::Girth5 => "girth5_classification",
            CheckKind::Decomposition => "decomposition",
            CheckKind::CompleteIffSameIndex => "complete_iff_same_index",
        }
    }

    /// Runs this check on one instance. Decomposition yields one report per
    /// index `1..d-1`.
    pub fn run(self, inst: &BaseInstance, h: &SpGraph, limits: &Limits) -> Result<Vec<CheckReport>> {
        Ok(match self {
            CheckKind::P3C4 => vec![check_p3_c4(h, limits)?],
            CheckKind::NoC5 => vec![check_no_induced_c5(h, limits)?],
            CheckKind::Claw => vec![check_claw_in_c4(h, limits)?],
            CheckKind::OddCycle => vec![check_odd_cycle_c4(h, limits)?],
            CheckKind::Girth5 => vec![check_girth5_classification(h)],
            CheckKind::CompleteIffSameIndex => vec![complete_iff_same_index(h)],
            CheckKind::Decomposition => {
                let d = h.distance().unwrap_or(0);
                (1..d).map(|i| decomposition_of(inst, h, i, limits)).collect::<Result<_>>()?
            }
        })
    }
}

/// One base instance of a corpus, tagged with the slice it came from.
#[derive(Debug, Clone)]
pub struct CorpusInstance {
    pub slice: String,
    pub label: String,
    pub instance: BaseInstance,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CorpusSpec {
    /// Connected graphs on up to `n` vertices, every unordered pair.
    Exhaustive(usize),
    Random { count: usize, max_n: usize, seed: u64 },
    /// One graph file (JSON or edge list), every unordered pair.
    File(PathBuf),
    /// Paper families with small parameters.
    Constructions,
}

impl CorpusSpec {
    /// `exhaustive:n`, `random:count:n:seed`, `file:path`, `constructions`.
    pub fn parse(text: &str) -> Result<Self> {
        let bad = || Error::InvalidArgument(format!("corpus `{text}`: expected exhaustive:n, random:count:n:seed, file:path or constructions"));
        let num = |s: &str| s.parse::<u64>().map_err(|_| bad());
        let parts: Vec<&str> = text.splitn(2, ':').collect();
        match parts.as_slice() {
            ["constructions"] => Ok(CorpusSpec::Constructions),
            ["exhaustive", n] => Ok(CorpusSpec::Exhaustive(num(n)? as usize)),
            ["file", path] => Ok(CorpusSpec::File(PathBuf::from(path))),
            ["random", rest] => match rest.split(':').collect::<Vec<_>>().as_slice() {
                [c, n, s] => Ok(CorpusSpec::Random { count: num(c)? as usize, max_n: num(n)? as usize, seed: num(s)? }),
                _ => Err(bad()),
            },
            _ => Err(bad()),
        }
    }

    pub fn build(&self) -> Result<Vec<CorpusInstance>> {
        match self {
            CorpusSpec::Exhaustive(n) => Ok(exhaustive_corpus(*n)),
            CorpusSpec::Random { count, max_n, seed } => random_corpus(*count, *max_n, *seed),
            CorpusSpec::File(path) => {
                let text = std::fs::read_to_string(path)
                    .map_err(|e| Error::InvalidArgument(format!("{}: {e}", path.display())))?;
                let g = if text.trim_start().starts_with('{') { Graph::from_json(&text)? } else { Graph::from_edge_list(&text)? };
                Ok(pairs_of(&g, "file", &path.display().to_string()))
            }
            CorpusSpec::Constructions => construction_corpus(),
        }
    }
}

/// Connected graphs on exactly `n` vertices, one per isomorphism class, with
/// vertices `0..n`. Every connected graph arises from a connected graph on
/// one fewer vertex by adding a vertex (remove a non-cut vertex to see it).
pub fn connected_graphs(n: usize) -> Vec<Graph> {
    assert!(n <= 11, "exhaustive generation is limited to 11 vertices");
    if n == 0 {
        return Vec::new();
    }
    let mut level = vec![Graph::from_indexed(1, &[]).unwrap()];
    for size in 2..=n {
        let mut seen = BTreeMap::new();
        for g in &level {
            let base: Vec<(usize, usize)> = g.edges().collect();
            for mask in 1u32..(1 << (size - 1)) {
                let mut edges = base.clone();
                edges.extend((0..size - 1).filter(|&j| mask >> j & 1 == 1).map(|j| (j, size - 1)));
                let h = Graph::from_indexed(size, &edges).unwrap();
                seen.entry(iso::canonical_mask(&h).1).or_insert(h);
            }
        }
        level = seen.into_values().collect();
    }
    level
}

fn pairs_of(g: &Graph, slice: &str, tag: &str) -> Vec<CorpusInstance> {
    let n = g.vertex_count();
    let mut out = Vec::new();
    for a in 0..n {
        for b in a + 1..n {
            let instance = BaseInstance::from_indices(g.clone(), a, b).expect("distinct endpoints");
            out.push(CorpusInstance { slice: slice.to_owned(), label: format!("{tag} a={} b={}", g.name(a), g.name(b)), instance });
        }
    }
    out
}

pub fn exhaustive_corpus(max_n: usize) -> Vec<CorpusInstance> {
    let mut out = Vec::new();
    for n in 2..=max_n {
        for (k, g) in connected_graphs(n).iter().enumerate() {
            out.extend(pairs_of(g, &format!("exhaustive:{n}"), &format!("n={n} #{k}")));
        }
    }
    out
}

/// `G(n, p)` samples with `n` uniform in `2..=max_n` and `p` in `{0.3, 0.5}`;
/// pairs with no connecting path are redrawn.
pub fn random_corpus(count: usize, max_n: usize, seed: u64) -> Result<Vec<CorpusInstance>> {
    if max_n < 2 {
        return Err(Error::InvalidArgument("random corpus needs max_n >= 2".into()));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let n = rng.gen_range(2..=max_n);
        let p = if rng.gen_bool(0.5) { 0.3 } else { 0.5 };
        let g = random_graph(&mut rng, n, p);
        let a = rng.gen_range(0..n);
        let b = (a + rng.gen_range(1..n)) % n;
        let instance = BaseInstance::from_indices(g, a, b)?;
        if instance.distance().is_none() {
            continue;
        }
        let label = format!("random seed={seed} #{} n={n} p={p} a={a} b={b}", out.len());
        out.push(CorpusInstance { slice: "random".into(), label, instance });
    }
    Ok(out)
}

pub fn random_graph(rng: &mut impl Rng, n: usize, p: f64) -> Graph {
    let mut edges = Vec::new();
    for u in 0..n {
        for v in u + 1..n {
            if rng.gen_bool(p) {
                edges.push((u, v));
            }
        }
    }
    Graph::from_indexed(n, &edges).expect("simple graph")
}

pub fn construction_corpus() -> Result<Vec<CorpusInstance>> {
    let mut out = Vec::new();
    let mut push = |label: String, instance: BaseInstance| {
        out.push(CorpusInstance { slice: "constructions".into(), label, instance });
    };
    for k in 1..=8 {
        push(format!("path_base {k}"), constructions::path_base(k)?.instance);
    }
    for n in 1..=5 {
        push(format!("complete_base {n}"), constructions::complete_base(n)?.instance);
    }
    for n in 2..=5 {
        push(format!("even_cycle_base {n}"), constructions::even_cycle_base(n)?.instance);
    }
    for p in 3..=4 {
        push(format!("odd_cycle_host_base {p}"), constructions::odd_cycle_host_base(p)?.instance);
    }
    for k in 1..=4 {
        push(format!("hypercube_base {k}"), constructions::hypercube_base(k)?.instance);
    }
    for t in 1..=4 {
        push(format!("parallel_paths {t} 3"), constructions::parallel_paths(t, 3)?.instance);
    }
    for dims in [vec![2, 2], vec![3, 2], vec![2, 1, 1], vec![1, 1, 1, 1]] {
        let spec = GridSpec::new(dims.clone())?;
        push(format!("grid {dims:?}"), grid::grid_base(&spec));
    }
    Ok(out)
}

/// Pass/fail tally of one check on one corpus slice.
#[derive(Debug, Clone, Serialize)]
pub struct SummaryRow {
    pub check: String,
    pub slice: String,
    pub runs: u64,
    pub failures: u64,
    /// First failing instance and its report.
    pub first_failure: Option<(String, CheckReport)>,
}

#[derive(Debug, Clone, Default, Serialize)]
pub struct Summary {
    pub instances: u64,
    pub rows: Vec<SummaryRow>,
}

impl Summary {
    pub fn passed(&self) -> bool {
        self.rows.iter().all(|r| r.failures == 0)
    }

    pub fn failures(&self) -> u64 {
        self.rows.iter().map(|r| r.failures).sum()
    }

    /// Fixed-width table, one line per (check, slice).
    pub fn table(&self) -> String {
        let mut out = String::new();
        let _ = writeln!(out, "{:<26} {:<14} {:>8} {:>8}  result", "check", "slice", "runs", "failed");
        for r in &self.rows {
            let verdict = if r.failures == 0 { "pass" } else { "FAIL" };
            let _ = writeln!(out, "{:<26} {:<14} {:>8} {:>8}  {verdict}", r.check, r.slice, r.runs, r.failures);
        }
        out
    }
}

/// Runs `checks` on every corpus instance. Rows are keyed by check name,
/// then slice, so the result does not depend on corpus order.
pub fn run_corpus(corpus: &[CorpusInstance], checks: &[CheckKind], limits: &Limits) -> Result<Summary> {
    let mut rows: BTreeMap<(String, String), SummaryRow> = BTreeMap::new();
    for item in corpus {
        let h = build_spg(&item.instance, limits.geodesics)?;
        for &check in checks {
            let key = (check.name().to_owned(), item.slice.clone());
            let row = rows.entry(key).or_insert_with(|| SummaryRow {
                check: check.name().to_owned(),
                slice: item.slice.clone(),
                runs: 0,
                failures: 0,
                first_failure: None,
            });
            for report in check.run(&item.instance, &h, limits)? {
                row.runs += 1;
                if !report.passed {
                    row.failures += 1;
                    if row.first_failure.is_none() {
                        row.first_failure = Some((item.label.clone(), report));
                    }
                }
            }
        }
    }
    Ok(Summary { instances: corpus.len() as u64, rows: rows.into_values().collect() })
}

/// Seeded generator of glued instances for [`check_sum_theorems`].
pub struct SumGenerator {
    rng: ChaCha8Rng,
    max_side: usize,
}

impl SumGenerator {
    pub fn new(seed: u64, max_side: usize) -> Self {
        SumGenerator { rng: ChaCha8Rng::seed_from_u64(seed), max_side: max_side.max(2) }
    }

    /// A random instance with connected endpoints on `2..=max_side` vertices.
    pub fn instance(&mut self) -> BaseInstance {
        loop {
            let n = self.rng.gen_range(2..=self.max_side);
            let g = random_graph(&mut self.rng, n, 0.5);
            let a = self.rng.gen_range(0..n);
            let b = (a + self.rng.gen_range(1..n)) % n;
            let inst = BaseInstance::from_indices(g, a, b).expect("distinct endpoints");
            if inst.distance().is_some() {
                return inst;
            }
        }
    }

    /// Random two graphs sharing the edge `xy`; `a` reaches both `x` and `y`
    /// on the left, and both reach `b` on the right.
    pub fn two_sum_parts(&mut self) -> TwoSumParts {
        loop {
            let g1 = self.side("l");
            let g2 = self.side("r");
            let parts = TwoSumParts { g1, g2, x: "x".into(), y: "y".into(), a: "l0".into(), b: "r0".into() };
            if constructions::two_sum_case(&parts).is_ok() {
                return parts;
            }
        }
    }

    fn side(&mut self, prefix: &str) -> Graph {
        let extra = self.rng.gen_range(1..=self.max_side.saturating_sub(2).max(1));
        let mut names: Vec<String> = vec!["x".into(), "y".into()];
        names.extend((0..extra).map(|t| format!("{prefix}{t}")));
        let mut edges = vec![("x".to_owned(), "y".to_owned())];
        for u in 0..names.len() {
            for v in u + 1..names.len() {
                if (u, v) != (0, 1) && self.rng.gen_bool(0.5) {
                    edges.push((names[u].clone(), names[v].clone()));
                }
            }
        }
        Graph::new(names, edges).expect("simple graph")
    }

    /// Two-sums until each case has its quota, in generation order.
    pub fn two_sums_by_case(&mut self, per_case: [usize; 4], max_tries: usize) -> Result<Vec<TwoSumParts>> {
        let mut left = per_case;
        let mut out = Vec::new();
        for _ in 0..max_tries {
            if left.iter().all(|&c| c == 0) {
                return Ok(out);
            }
            let parts = self.two_sum_parts();
            let case = constructions::two_sum_case(&parts)? as usize;
            if left[case] > 0 {
                left[case] -= 1;
                out.push(parts);
            }
        }
        Err(Error::LimitExceeded { what: "two-sum draw", count: max_tries.to_string(), limit: max_tries as u64 })
    }
}

/// Report of the lattice-embedding checks for one grid.
pub fn check_grid_embedding(spec: &GridSpec, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("grid_embedding");
    let words = grid::enumerate_sequences(spec, limits.geodesics)?;
    report.stat("words", words.len() as u64);
    if BigUint::from(words.len()) != spec.geodesic_count() {
        return Ok(report.fail_detail("word count differs from the multinomial"));
    }
    let points: Vec<grid::LatticePoint> = words.iter().map(grid::phi).collect();
    for p in &points {
        if !image_constraints_hold(spec, &p.coords) {
            return Ok(report.fail_detail(format!("{p} violates the image constraints")));
        }
    }
    for (w, p) in words.iter().zip(&points) {
        if grid::phi_inverse(p).as_ref() != Ok(w) {
            return Ok(report.fail_detail(format!("phi_inverse({p}) != {w}")));
        }
    }
    // Injectivity falls out of the lattice graph's duplicate check.
    let image = grid::lattice_induced_graph(&points)?;
    // Words are enumerated in lexicographic order.
    let index_of = |s: &[usize]| words.binary_search_by(|w| w.symbols().cmp(s)).ok();
    let mut word_edges = Vec::new();
    let mut swapped = Vec::with_capacity(spec.total());
    for (t, w) in words.iter().enumerate() {
        let s = w.symbols();
        for r in 0..s.len().saturating_sub(1) {
            if s[r] < s[r + 1] {
                swapped.clear();
                swapped.extend_from_slice(s);
                swapped.swap(r, r + 1);
                match index_of(&swapped) {
                    Some(u) => word_edges.push((t, u)),
                    None => return Ok(report.fail_detail(format!("a swap of {w} is not enumerated"))),
                }
            }
        }
    }
    let word_graph = Graph::from_indexed(words.len(), &word_edges)?;
    let identity: Vec<usize> = (0..words.len()).collect();
    if !iso::verify_witness(&word_graph, &image, &identity) {
        return Ok(report.fail_detail("phi does not preserve adjacency in both directions"));
    }
    let inst = grid::grid_base(spec);
    let h = build_spg(&inst, limits.geodesics)?;
    let codec = grid::GridCodec::new(&inst, spec)?;
    let mut witness = Vec::with_capacity(h.vertex_count());
    for g in h.geodesics() {
        let w = codec.sequence(g)?;
        match index_of(w.symbols()) {
            Some(u) => witness.push(u),
            None => return Ok(report.fail_detail(format!("geodesic {w} is not enumerated"))),
        }
    }
    report.stat("spg_edges", h.edge_count() as u64);
    if !iso::verify_witness(h.graph(), &image, &witness) {
        return Ok(report.fail_detail("S(grid) is not carried onto the lattice image by phi"));
    }
    Ok(report)
}

/// Compares a construction's shortest path graph with its prediction: an
/// isomorphism for whole-graph predictions, an induced cycle through the
/// listed geodesics otherwise.
pub fn check_prediction(c: &constructions::ConstructionResult, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("construction");
    let h = build_spg(&c.instance, limits.geodesics)?;
    report.stat("vertices", h.vertex_count() as u64);
    report.stat("edges", h.edge_count() as u64);
    match &c.predicted {
        constructions::Predicted::Graph { family, graph } => {
            if iso::is_isomorphic_with_cap(h.graph(), graph, limits.iso_cap)?.is_none() {
                return Ok(report.fail_detail(format!(
                    "S has {} vertices / {} edges, {family} has {} / {}",
                    h.vertex_count(),
                    h.edge_count(),
                    graph.vertex_count(),
                    graph.edge_count()
                )));
            }
        }
        constructions::Predicted::InducedCycle { witnesses } => {
            let by_names: HashMap<Vec<String>, usize> =
                (0..h.vertex_count()).map(|u| (h.geodesic_names(u), u)).collect();
            let mut cycle = Vec::with_capacity(witnesses.len());
            for w in witnesses {
                match by_names.get(w) {
                    Some(&u) => cycle.push(u),
                    None => return Ok(report.fail_detail(format!("{} is not a geodesic", w.join(" ")))),
                }
            }
            report.stat("cycle_length", cycle.len() as u64);
            if !induced::is_induced_occurrence(h.graph(), Pattern::Cycle(cycle.len()), &cycle) {
                return Ok(report.fail(Witness::Vertices { vertices: cycle }));
            }
        }
    }
    Ok(report)
}

/// `S(P_{n1} x P_{n2})` is the staircase graph: `phi` of a two-letter word
/// is already a non-increasing tuple bounded by `n1`, which names the
/// staircase vertex.
pub fn check_staircase(n1: usize, n2: usize, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("staircase");
    let spec = GridSpec::new(vec![n1, n2])?;
    let inst = grid::grid_base(&spec);
    let h = build_spg(&inst, limits.geodesics)?;
    let stairs = grid::staircase(n1, n2)?;
    report.stat("vertices", stairs.vertex_count() as u64);
    let codec = grid::GridCodec::new(&inst, &spec)?;
    let mut witness = Vec::with_capacity(h.vertex_count());
    for g in h.geodesics() {
        let p = grid::phi(&codec.sequence(g)?);
        match stairs.index_of(&p.to_string()) {
            Some(v) => witness.push(v),
            None => return Ok(report.fail_detail(format!("{p} is not a staircase vertex"))),
        }
    }
    if !iso::verify_witness(h.graph(), &stairs, &witness) {
        return Ok(report.fail_detail("phi does not carry S onto the staircase graph"));
    }
    Ok(report)
}

/// `S(Q_m)` is the adjacent-transposition Cayley graph of `S_m` (a geodesic
/// read as a word is a permutation), and `tournament_of` is a bijection onto
/// the transitive tournaments on `m` vertices.
pub fn check_cayley(m: usize, limits: &Limits) -> Result<CheckReport> {
    let mut report = CheckReport::new("cayley");
    let spec = GridSpec::new(vec![1; m])?;
    let inst = grid::grid_base(&spec);
    let h = build_spg(&inst, limits.geodesics)?;
    let cay = grid::cayley_adjacent_transpositions(m, limits.geodesics)?;
    report.stat("vertices", cay.vertex_count() as u64);
    let codec = grid::GridCodec::new(&inst, &spec)?;
    let mut witness = Vec::with_capacity(h.vertex_count());
    for g in h.geodesics() {
        let word = codec.sequence(g)?;
        witness.push(cay.index_of(&word.to_string()).expect("every word is a permutation"));
    }
    if !iso::verify_witness(h.graph(), &cay, &witness) {
        return Ok(report.fail_detail("S(Q_m) is not carried onto Cay(S_m; T) by reading words"));
    }
    let mut images = std::collections::HashSet::new();
    for word in grid::enumerate_sequences(&spec, limits.geodesics)? {
        images.insert(grid::tournament_of(&word)?.reversed);
    }
    let pairs = m * m.saturating_sub(1) / 2;
    if pairs > 20 {
        return Err(Error::LimitExceeded { what: "tournament orientation", count: format!("2^{pairs}"), limit: 1 << 20 });
    }
    let transitive = (0u64..1 << pairs)
        .map(|bits| grid::TransitiveTournament { m, reversed: (0..pairs).map(|t| bits >> t & 1 == 1).collect() })
        .filter(|t| t.is_transitive())
        .count();
    report.stat("tournaments", images.len() as u64);
    report.stat("transitive_tournaments", transitive as u64);
    if images.len() != cay.vertex_count() || transitive != images.len() {
        return Ok(report.fail_detail(format!(
            "{} permutations, {} distinct tournaments, {} transitive orientations",
            cay.vertex_count(),
            images.len(),
            transitive
        )));
    }
    Ok(report)
}

fn image_constraints_hold(spec: &GridSpec, coords: &[i64]) -> bool {
    let d = spec.dims();
    (2..=d.len()).all(|j| {
        (1..j).all(|i| {
            (1..=d[j - 1]).all(|k| {
                let v = coords[spec.offset(i, j, k)];
                (0..=d[i - 1] as i64).contains(&v) && (k == 1 || coords[spec.offset(i, j, k - 1)] >= v)
            })
        })
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::graph::families;

    fn spg(c: constructions::ConstructionResult) -> SpGraph {
        build_spg(&c.instance, DEFAULT_GEODESIC_LIMIT).unwrap()
    }

    fn raw(g: &Graph, label: usize) -> SpGraph {
        let edges: Vec<(usize, usize, usize)> = g.edges().map(|(u, w)| (u, w, label)).collect();
        SpGraph::from_labeled_edges(g.vertex_count(), &edges).unwrap()
    }

    #[test]
    fn p3_c4_examples() {
        let l = Limits::default();
        assert!(check_p3_c4(&spg(constructions::hypercube_base(2).unwrap()), &l).unwrap().passed);
        assert!(check_p3_c4(&spg(constructions::hypercube_base(3).unwrap()), &l).unwrap().passed);
        let bad = SpGraph::from_labeled_edges(3, &[(0, 1, 1), (1, 2, 3)]).unwrap();
        let r = check_p3_c4(&bad, &l).unwrap();
        assert!(!r.passed && confirms_failure(&r, &bad));
        // Adjacent indices impose nothing.
        let near = SpGraph::from_labeled_edges(3, &[(0, 1, 1), (1, 2, 2)]).unwrap();
        assert!(check_p3_c4(&near, &l).unwrap().passed);
    }

    #[test]
    fn c5_and_claw_examples() {
        let l = Limits::default();
        assert!(check_no_induced_c5(&spg(constructions::complete_base(5).unwrap()), &l).unwrap().passed);
        assert!(check_no_induced_c5(&spg(constructions::even_cycle_base(5).unwrap()), &l).unwrap().passed);
        let c5 = raw(&families::cycle(5), 1);
        let r = check_no_induced_c5(&c5, &l).unwrap();
        assert!(!r.passed && confirms_failure(&r, &c5));

        assert!(check_claw_in_c4(&spg(constructions::complete_base(4).unwrap()), &l).unwrap().passed);
        let q3 = spg(constructions::hypercube_base(3).unwrap());
        let r = check_claw_in_c4(&q3, &l).unwrap();
        assert!(r.passed && r.stats["claws"] > 0);
        let claw = raw(&families::star(3), 1);
        let r = check_claw_in_c4(&claw, &l).unwrap();
        assert!(!r.passed && confirms_failure(&r, &claw));
    }

    #[test]
    fn odd_cycle_examples() {
        let l = Limits::default();
        let host = spg(constructions::odd_cycle_host_base(3).unwrap());
        let r = check_odd_cycle_c4(&host, &l).unwrap();
        assert!(r.passed);
        assert_eq!(r.stats["odd_cycle_length"], 7);
        assert_eq!(r.stats["cap"], 9);
        let c8 = spg(constructions::even_cycle_base(4).unwrap());
        assert!(!check_odd_cycle_c4(&c8, &l).unwrap().stats.contains_key("odd_cycle_length"));
        let c7 = raw(&families::cycle(7), 1);
        let r = check_odd_cycle_c4(&c7, &l).unwrap();
        assert!(!r.passed && confirms_failure(&r, &c7));
    }

    #[test]
    fn girth5_examples() {
        assert!(check_girth5_classification(&spg(constructions::path_base(6).unwrap())).passed);
        let c8 = spg(constructions::even_cycle_base(4).unwrap());
        let r = check_girth5_classification(&c8);
        assert!(r.passed && r.stats["components"] == 1);
        assert!(check_girth5_classification(&spg(constructions::hypercube_base(2).unwrap())).passed);
        for bad in [raw(&families::cycle(5), 1), raw(&families::star(3), 1), raw(&families::cycle(7), 1)] {
            let r = check_girth5_classification(&bad);
            assert!(!r.passed && confirms_failure(&r, &bad));
        }
    }

    #[test]
    fn complete_iff_same_index_examples() {
        let l = Limits::default();
        let k24 = constructions::complete_base(4).unwrap().instance;
        let r = check_complete_iff_same_index(&k24, &l).unwrap();
        assert!(r.passed && r.stats["complete"] == 1 && r.stats["same_index"] == 1);
        // Two geodesics around a square differ only at index 1: K_2.
        let sq = grid::grid_base(&GridSpec::new(vec![1, 1]).unwrap());
        let r = check_complete_iff_same_index(&sq, &l).unwrap();
        assert!(r.passed && r.stats["complete"] == 1 && r.stats["same_index"] == 1);
        let cube = grid::grid_base(&GridSpec::new(vec![1, 1, 1]).unwrap());
        let r = check_complete_iff_same_index(&cube, &l).unwrap();
        assert!(r.passed && r.stats["complete"] == 0 && r.stats["same_index"] == 0);
        let k22 = constructions::complete_base(2).unwrap().instance;
        let sum = constructions::one_sum(&k22, &k22, DEFAULT_GEODESIC_LIMIT).unwrap().instance;
        let r = check_complete_iff_same_index(&sum, &l).unwrap();
        assert!(r.passed && r.stats["complete"] == 0);
        let mixed = SpGraph::from_labeled_edges(3, &[(0, 1, 1), (1, 2, 1), (0, 2, 2)]).unwrap();
        let r = complete_iff_same_index(&mixed);
        assert!(!r.passed && confirms_failure(&r, &mixed));
    }

    #[test]
    fn decomposition_examples() {
        let l = Limits::default();
        let j3 = constructions::hypercube_base(3).unwrap().instance;
        for i in 1..6 {
            let r = check_decomposition(&j3, i, &l).unwrap();
            assert!(r.passed, "{r:?}");
        }
        // Position 1 holds either vertex of the first square: two parts, each
        // K_1 x S(J_3 minus the first square) = C_4. Position 2 is the cut
        // vertex, so E_2 is empty and the single part is all of Q_3.
        let r = check_decomposition(&j3, 1, &l).unwrap();
        assert_eq!((r.stats["parts"], r.stats["cross_edges"]), (2, 4));
        let r = check_decomposition(&j3, 2, &l).unwrap();
        assert_eq!((r.stats["parts"], r.stats["cross_edges"]), (1, 0));
        let k23 = constructions::complete_base(3).unwrap().instance;
        let r = check_decomposition(&k23, 1, &l).unwrap();
        assert!(r.passed);
        assert_eq!((r.stats["parts"], r.stats["cross_edges"]), (3, 3));
        assert!(matches!(check_decomposition(&k23, 2, &l), Err(Error::IndexOutOfRange { .. })));
        assert!(matches!(check_decomposition(&k23, 0, &l), Err(Error::IndexOutOfRange { .. })));
    }

    #[test]
    fn sum_examples() {
        let l = Limits::default();
        let k = |n| constructions::complete_base(n).unwrap().instance;
        assert!(check_sum_theorems(&SumInput::OneSum(k(3), k(2)), &l).unwrap().passed);
        assert!(check_sum_theorems(&SumInput::Union(k(2), k(3)), &l).unwrap().passed);
        let mut gen = SumGenerator::new(7, 5);
        for parts in gen.two_sums_by_case([2, 2, 2, 2], 10_000).unwrap() {
            let r = check_sum_theorems(&SumInput::TwoSum(parts), &l).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }

    #[test]
    fn connected_graph_counts() {
        let counts: Vec<usize> = (1..=6).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, [1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn corpus_spec_parsing() {
        assert_eq!(CorpusSpec::parse("exhaustive:5").unwrap(), CorpusSpec::Exhaustive(5));
        assert_eq!(
            CorpusSpec::parse("random:10:8:42").unwrap(),
            CorpusSpec::Random { count: 10, max_n: 8, seed: 42 }
        );
        assert_eq!(CorpusSpec::parse("file:a:b.json").unwrap(), CorpusSpec::File("a:b.json".into()));
        assert!(CorpusSpec::parse("random:1:2").is_err());
        assert!(CorpusSpec::parse("bogus").is_err());
    }

    #[test]
    fn random_corpus_is_reproducible() {
        let a = random_corpus(20, 8, 3).unwrap();
        let b = random_corpus(20, 8, 3).unwrap();
        assert_eq!(a.len(), 20);
        assert!(a.iter().zip(&b).all(|(x, y)| x.label == y.label && x.instance == y.instance));
        assert!(a.iter().all(|c| c.instance.distance().is_some()));
    }

    #[test]
    fn small_corpus_passes() {
        let mut corpus = exhaustive_corpus(5);
        corpus.extend(construction_corpus().unwrap());
        let s = run_corpus(&corpus, &CheckKind::ALL, &Limits::default()).unwrap();
        assert!(s.passed(), "{}", s.table());
    }

    #[test]
    fn prediction_staircase_cayley() {
        let l = Limits::default();
        assert!(check_prediction(&constructions::path_base(4).unwrap(), &l).unwrap().passed);
        let r = check_prediction(&constructions::odd_cycle_host_base(3).unwrap(), &l).unwrap();
        assert!(r.passed && r.stats["cycle_length"] == 7);
        assert!(check_staircase(2, 3, &l).unwrap().passed);
        let r = check_cayley(4, &l).unwrap();
        assert!(r.passed && r.stats["tournaments"] == 24);
    }

    #[test]
    fn grid_embedding_small() {
        for dims in [vec![1], vec![2, 2], vec![3, 3, 2], vec![1, 2, 1]] {
            let r = check_grid_embedding(&GridSpec::new(dims).unwrap(), &Limits::default()).unwrap();
            assert!(r.passed, "{r:?}");
        }
    }
}
