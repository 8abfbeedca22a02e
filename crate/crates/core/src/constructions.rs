//! Base graphs with known shortest path graphs, and the ways of gluing base
//! graphs together (unions, one-sums, two-sums).

use std::collections::{BTreeMap, HashSet};

use crate::error::{Error, Result};
use crate::geodesics::GeodesicDag;
use crate::graph::{cartesian_product, disjoint_union, families, BaseInstance, Graph};
use crate::spg::{build_spg, difference_index, SpGraph};

/// What a construction promises about its shortest path graph.
#[derive(Debug, Clone)]
pub enum Predicted {
    /// `S(instance)` is isomorphic to `graph`.
    Graph { family: String, graph: Graph },
    /// `S(instance)` contains these geodesics (vertex names), and they induce
    /// a cycle in the listed order.
    InducedCycle { witnesses: Vec<Vec<String>> },
}

#[derive(Debug, Clone)]
pub struct ConstructionResult {
    pub instance: BaseInstance,
    pub predicted: Predicted,
}

impl ConstructionResult {
    fn graph(instance: BaseInstance, family: impl Into<String>, graph: Graph) -> Self {
        ConstructionResult { instance, predicted: Predicted::Graph { family: family.into(), graph } }
    }

    /// The predicted graph, when the prediction is a whole graph.
    pub fn predicted_graph(&self) -> Option<&Graph> {
        match &self.predicted {
            Predicted::Graph { graph, .. } => Some(graph),
            Predicted::InducedCycle { .. } => None,
        }
    }
}

fn instance(edges: &[(String, String)], a: &str, b: &str) -> Result<BaseInstance> {
    let mut vertices: Vec<&str> = edges.iter().flat_map(|(u, v)| [u.as_str(), v.as_str()]).collect();
    vertices.push(a);
    vertices.push(b);
    vertices.sort_unstable();
    vertices.dedup();
    BaseInstance::new(Graph::new(vertices, edges.iter().map(|(u, v)| (u, v)))?, a, b)
}

fn e(u: impl Into<String>, v: impl Into<String>) -> (String, String) {
    (u.into(), v.into())
}

/// `t` internally disjoint `a,b`-paths of `len` edges each; `S` is edgeless
/// on `t` vertices.
pub fn parallel_paths(t: usize, len: usize) -> Result<ConstructionResult> {
    if t == 0 {
        return Err(Error::InvalidArgument("parallel_paths needs t >= 1".into()));
    }
    if len < 3 {
        return Err(Error::InvalidArgument(format!("parallel_paths needs len >= 3, got {len}")));
    }
    let mut edges = Vec::new();
    for j in 1..=t {
        let node = |i: usize| match i {
            0 => "a".to_owned(),
            i if i == len => "b".to_owned(),
            i => format!("p{j}_{i}"),
        };
        for i in 0..len {
            edges.push(e(node(i), node(i + 1)));
        }
    }
    Ok(ConstructionResult::graph(instance(&edges, "a", "b")?, format!("empty({t})"), families::empty(t)))
}

/// `G_k`, whose shortest path graph is the path with `k` edges. Vertex
/// `v_i'` is named `w{i}`.
pub fn path_base(k: usize) -> Result<ConstructionResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("path_base needs k >= 1".into()));
    }
    let (lo, hi) = (k / 2, k.div_ceil(2));
    let mut edges = Vec::new();
    for i in 0..=lo {
        edges.push(e("a", format!("v{i}")));
        edges.push(e(format!("v{i}"), format!("w{i}")));
    }
    for i in 1..=hi {
        edges.push(e(format!("v{}", i - 1), format!("w{i}")));
    }
    for i in 0..=hi {
        edges.push(e(format!("w{i}"), "b"));
    }
    Ok(ConstructionResult::graph(instance(&edges, "a", "b")?, format!("path({k})"), families::path(k)))
}

/// `K_{2,n}` with `a, b` the two-vertex side; `S` is `K_n`.
pub fn complete_base(n: usize) -> Result<ConstructionResult> {
    if n == 0 {
        return Err(Error::InvalidArgument("complete_base needs n >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 1..=n {
        edges.push(e("a", format!("m{i}")));
        edges.push(e(format!("m{i}"), "b"));
    }
    Ok(ConstructionResult::graph(instance(&edges, "a", "b")?, format!("complete({n})"), families::complete(n)))
}

/// The `2n + 2`-vertex graph whose shortest path graph is `C_{2n}`.
/// Vertex `v_i'` is named `w{i}`.
pub fn even_cycle_base(n: usize) -> Result<ConstructionResult> {
    if n < 2 {
        return Err(Error::InvalidArgument(format!("even_cycle_base needs n >= 2, got {n}")));
    }
    let mut edges = Vec::new();
    for i in 0..n {
        edges.push(e("a", format!("v{i}")));
        edges.push(e("b", format!("w{i}")));
        edges.push(e(format!("v{i}"), format!("w{i}")));
        edges.push(e(format!("v{i}"), format!("w{}", (i + 1) % n)));
    }
    Ok(ConstructionResult::graph(
        instance(&edges, "a", "b")?,
        format!("cycle({})", 2 * n),
        families::cycle(2 * n),
    ))
}

/// `G_{2p+1}`, whose shortest path graph contains an induced `C_{2p+1}`.
/// Vertices `v_i`, `v_i'`, `v_1''` are named `v{i}`, `w{i}`, `u1`. The
/// `2p + 1` witness geodesics are validated before returning.
pub fn odd_cycle_host_base(p: usize) -> Result<ConstructionResult> {
    if p < 3 {
        return Err(Error::InvalidArgument(format!("odd_cycle_host_base needs p >= 3, got {p}")));
    }
    let v = |i: usize| format!("v{i}");
    let w = |i: usize| format!("w{i}");
    let mut edges = vec![
        e("a", v(1)),
        e("a", w(1)),
        e("b", v(p)),
        e("b", w(p)),
        e("a", "u1"),
        e("u1", w(2)),
        e("u1", v(2)),
    ];
    for i in 1..p {
        edges.push(e(v(i), v(i + 1)));
        edges.push(e(w(i), w(i + 1)));
        edges.push(e(v(i), w(i + 1)));
        edges.push(e(w(i), v(i + 1)));
    }
    let inst = instance(&edges, "a", "b")?;

    // Interior positions 1..=p; `primed(t)` primes the first t of them.
    let wrap = |middle: Vec<String>| -> Vec<String> {
        std::iter::once("a".to_owned()).chain(middle).chain(std::iter::once("b".to_owned())).collect()
    };
    let mut witnesses = Vec::with_capacity(2 * p + 1);
    for t in 0..=p {
        witnesses.push(wrap((1..=p).map(|i| if i <= t { w(i) } else { v(i) }).collect()));
    }
    for t in 1..p {
        // u1, then v_2..v_t unprimed, then w_{t+1}..w_p.
        let middle = (1..=p).map(|i| match i {
            1 => "u1".to_owned(),
            i if i <= t => v(i),
            i => w(i),
        });
        witnesses.push(wrap(middle.collect()));
    }
    witnesses.push(wrap((1..=p).map(|i| if i == p { w(i) } else { v(i) }).collect()));

    validate_induced_cycle(&inst, &witnesses)?;
    Ok(ConstructionResult { instance: inst, predicted: Predicted::InducedCycle { witnesses } })
}

fn validate_induced_cycle(inst: &BaseInstance, witnesses: &[Vec<String>]) -> Result<()> {
    let dag = GeodesicDag::build(inst)?;
    let g = inst.graph();
    let mut paths = Vec::with_capacity(witnesses.len());
    for names in witnesses {
        let idx: Vec<usize> = names.iter().map(|s| g.index_of(s).ok_or_else(|| Error::UnknownVertex(s.clone()))).collect::<Result<_>>()?;
        let is_geodesic = idx.len() == dag.distance() + 1
            && idx[0] == inst.source()
            && *idx.last().unwrap() == inst.target()
            && idx.windows(2).all(|s| dag.successors(s[0]).contains(&s[1]));
        if !is_geodesic {
            return Err(Error::Construction(format!("witness {} is not a geodesic", names.join(" "))));
        }
        paths.push(crate::geodesics::Geodesic(idx));
    }
    let k = paths.len();
    for x in 0..k {
        for y in x + 1..k {
            let adjacent = difference_index(&paths[x], &paths[y])?.is_some();
            let consecutive = y == x + 1 || (x == 0 && y == k - 1);
            if adjacent != consecutive {
                return Err(Error::Construction(format!("witnesses {x} and {y} break the induced cycle")));
            }
        }
    }
    Ok(())
}

/// `J_k`: `k` copies of `C_4` chained at antipodal vertices; `S` is `Q_k`.
/// Cut vertices are `c0..ck` with `a = c0`, `b = ck`.
pub fn hypercube_base(k: usize) -> Result<ConstructionResult> {
    if k == 0 {
        return Err(Error::InvalidArgument("hypercube_base needs k >= 1".into()));
    }
    let mut edges = Vec::new();
    for i in 1..=k {
        let (from, to) = (format!("c{}", i - 1), format!("c{i}"));
        for side in ["p", "q"] {
            edges.push(e(from.clone(), format!("{side}{i}")));
            edges.push(e(format!("{side}{i}"), to.clone()));
        }
    }
    let inst = instance(&edges, "c0", &format!("c{k}"))?;
    Ok(ConstructionResult::graph(inst, format!("hypercube({k})"), families::hypercube(k)))
}

fn fresh_name(taken: &HashSet<String>, base: &str) -> String {
    let mut name = base.to_owned();
    while taken.contains(&name) {
        name.push('\'');
    }
    name
}

/// Appends a pendant path after `b` so that the new target sits at distance
/// `new_distance` from `a`; the shortest path graph is unchanged.
pub fn extend_distance(inst: &BaseInstance, new_distance: usize) -> Result<BaseInstance> {
    let d = inst.distance().ok_or_else(|| {
        Error::NoGeodesic(inst.source_name().to_owned(), inst.target_name().to_owned())
    })?;
    if new_distance < d {
        return Err(Error::InvalidArgument(format!("cannot shrink distance {d} to {new_distance}")));
    }
    if new_distance == d {
        return Ok(inst.clone());
    }
    let g = inst.graph();
    let mut taken: HashSet<String> = g.names().iter().cloned().collect();
    let mut tail = vec![inst.target_name().to_owned()];
    for step in 1..=new_distance - d {
        let name = fresh_name(&taken, &format!("{}+{step}", inst.target_name()));
        taken.insert(name.clone());
        tail.push(name);
    }
    let mut edges = g.named_edges();
    edges.extend(tail.windows(2).map(|w| (w[0].clone(), w[1].clone())));
    let vertices = g.names().iter().cloned().chain(tail[1..].iter().cloned());
    let graph = Graph::new(vertices, edges)?;
    BaseInstance::new(graph, inst.source_name(), tail.last().unwrap())
}

fn spg_of(inst: &BaseInstance, limit: u64) -> Result<SpGraph> {
    if inst.distance().is_none() {
        return Err(Error::NoGeodesic(inst.source_name().to_owned(), inst.target_name().to_owned()));
    }
    build_spg(inst, limit)
}

/// Base graph for `S(i1) ∪ S(i2)`: distances are equalized, the two graphs
/// placed side by side (`L:`/`R:` prefixes), and fresh endpoints `a`, `b`
/// attached to both old sources and both old targets.
pub fn union_base(i1: &BaseInstance, i2: &BaseInstance, limit: u64) -> Result<ConstructionResult> {
    let h1 = spg_of(i1, limit)?;
    let h2 = spg_of(i2, limit)?;
    let d = h1.distance().unwrap().max(h2.distance().unwrap());
    let (j1, j2) = (extend_distance(i1, d)?, extend_distance(i2, d)?);
    let body = disjoint_union(j1.graph(), j2.graph());
    let mut edges = body.named_edges();
    edges.push(e("a", format!("L:{}", j1.source_name())));
    edges.push(e("a", format!("R:{}", j2.source_name())));
    edges.push(e(format!("L:{}", j1.target_name()), "b"));
    edges.push(e(format!("R:{}", j2.target_name()), "b"));
    let vertices = body.names().iter().cloned().chain(["a".to_owned(), "b".to_owned()]);
    let inst = BaseInstance::new(Graph::new(vertices, edges)?, "a", "b")?;
    let predicted = disjoint_union(h1.graph(), h2.graph());
    Ok(ConstructionResult::graph(inst, "union", predicted))
}

/// The one-sum of two graphs sharing exactly the vertex `c`, with endpoints
/// `a` in the first and `b` in the second.
pub fn one_sum_raw(g1: &Graph, g2: &Graph, a: &str, c: &str, b: &str) -> Result<BaseInstance> {
    let shared: Vec<&String> = g1.names().iter().filter(|s| g2.index_of(s).is_some()).collect();
    if shared.len() != 1 || shared[0] != c {
        return Err(Error::Overlap(format!(
            "one-sum needs V1 ∩ V2 = {{{c}}}, found {{{}}}",
            shared.iter().map(|s| s.as_str()).collect::<Vec<_>>().join(", ")
        )));
    }
    if a == c || g1.index_of(a).is_none() {
        return Err(Error::Overlap(format!("`{a}` must be a vertex of the first graph other than `{c}`")));
    }
    if b == c || g2.index_of(b).is_none() {
        return Err(Error::Overlap(format!("`{b}` must be a vertex of the second graph other than `{c}`")));
    }
    let mut edges = g1.named_edges();
    edges.extend(g2.named_edges());
    let vertices = g1.names().iter().chain(g2.names().iter().filter(|s| s.as_str() != c)).cloned();
    BaseInstance::new(Graph::new(vertices, edges)?, a, b)
}

/// One-sum of `(G1, a, c)` and `(G2, c', b)`: `c'` is identified with `c`
/// and the rest of `G2` is relabelled apart. `S` is the Cartesian product
/// of the two shortest path graphs.
pub fn one_sum(i1: &BaseInstance, i2: &BaseInstance, limit: u64) -> Result<ConstructionResult> {
    let c = i1.target_name().to_owned();
    let taken: HashSet<&str> = i1.graph().names().iter().map(String::as_str).collect();
    let mut prefix = String::from("R:");
    while i2.graph().names().iter().any(|s| taken.contains(format!("{prefix}{s}").as_str())) {
        prefix.insert(0, 'R');
    }
    let glue = i2.source_name().to_owned();
    let g2 = i2.graph().relabel(|s| if s == glue { c.clone() } else { format!("{prefix}{s}") })?;
    let b = format!("{prefix}{}", i2.target_name());
    let inst = one_sum_raw(i1.graph(), &g2, i1.source_name(), &c, &b)?;
    let h1 = spg_of(i1, limit)?;
    let h2 = spg_of(i2, limit)?;
    Ok(ConstructionResult::graph(inst, "one-sum", cartesian_product(h1.graph(), h2.graph())))
}

/// Endpoints and glue of a two-sum: graphs sharing exactly the vertices `x`,
/// `y` and the edge `xy`, with `a` in the first and `b` in the second.
#[derive(Debug, Clone)]
pub struct TwoSumParts {
    pub g1: Graph,
    pub g2: Graph,
    pub x: String,
    pub y: String,
    pub a: String,
    pub b: String,
}

impl TwoSumParts {
    fn validate(&self) -> Result<()> {
        let shared: Vec<&String> = self.g1.names().iter().filter(|s| self.g2.index_of(s).is_some()).collect();
        let mut want = [&self.x, &self.y];
        want.sort();
        if shared.len() != 2 || shared[0] != want[0] || shared[1] != want[1] {
            return Err(Error::Overlap(format!("two-sum needs V1 ∩ V2 = {{{}, {}}}", self.x, self.y)));
        }
        for g in [&self.g1, &self.g2] {
            let (x, y) = (g.index_of(&self.x).unwrap(), g.index_of(&self.y).unwrap());
            if !g.has_edge(x, y) {
                return Err(Error::Overlap(format!("both graphs must contain the edge {}{}", self.x, self.y)));
            }
        }
        let bad = |v: &str| v == self.x || v == self.y;
        if bad(&self.a) || self.g1.index_of(&self.a).is_none() {
            return Err(Error::Overlap(format!("`{}` must be in V1 \\ {{x, y}}", self.a)));
        }
        if bad(&self.b) || self.g2.index_of(&self.b).is_none() {
            return Err(Error::Overlap(format!("`{}` must be in V2 \\ {{x, y}}", self.b)));
        }
        Ok(())
    }

    fn side(&self, first: bool, from: &str, to: &str) -> Result<BaseInstance> {
        BaseInstance::new(if first { self.g1.clone() } else { self.g2.clone() }, from, to)
    }
}

pub fn two_sum(parts: &TwoSumParts) -> Result<BaseInstance> {
    parts.validate()?;
    let mut edges = parts.g1.named_edges();
    edges.extend(parts.g2.named_edges().into_iter().filter(|(u, v)| {
        !((u == &parts.x && v == &parts.y) || (u == &parts.y && v == &parts.x))
    }));
    let vertices = parts
        .g1
        .names()
        .iter()
        .chain(parts.g2.names().iter().filter(|s| **s != parts.x && **s != parts.y))
        .cloned();
    BaseInstance::new(Graph::new(vertices, edges)?, &parts.a, &parts.b)
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, serde::Serialize)]
pub enum TwoSumCase {
    /// Equal distances on both sides: two products joined by a matching.
    I,
    /// Every geodesic passes `x`.
    II,
    /// Every geodesic passes `y`.
    III,
    /// Otherwise: two products overlapping in the geodesics that use `xy`.
    IV,
}

#[derive(Debug, Clone)]
pub struct TwoSumPrediction {
    pub case: TwoSumCase,
    pub graph: Graph,
    /// For case I, the number of matching edges predicted between the two
    /// products.
    pub matching_edges: usize,
}

fn distance_in(g: &Graph, u: &str, v: &str) -> Result<usize> {
    let (s, t) = (g.require(u)?, g.require(v)?);
    g.bfs(s)[t].ok_or_else(|| Error::NoGeodesic(u.to_owned(), v.to_owned()))
}

pub fn two_sum_case(parts: &TwoSumParts) -> Result<TwoSumCase> {
    parts.validate()?;
    let ax = distance_in(&parts.g1, &parts.a, &parts.x)?;
    let ay = distance_in(&parts.g1, &parts.a, &parts.y)?;
    let xb = distance_in(&parts.g2, &parts.x, &parts.b)?;
    let yb = distance_in(&parts.g2, &parts.y, &parts.b)?;
    Ok(if ax == ay && xb == yb {
        TwoSumCase::I
    } else if (ax <= ay && xb < yb) || (ax < ay && xb <= yb) {
        TwoSumCase::II
    } else if (ay <= ax && yb < xb) || (ay < ax && yb <= xb) {
        TwoSumCase::III
    } else {
        TwoSumCase::IV
    })
}

/// Predicted shortest path graph of a two-sum, assembled from the four
/// pieces `S(G1,a,x)`, `S(G2,x,b)`, `S(G1,a,y)`, `S(G2,y,b)`.
pub fn predict_two_sum(parts: &TwoSumParts, limit: u64) -> Result<TwoSumPrediction> {
    let case = two_sum_case(parts)?;
    let product = |via: &str| -> Result<Product> {
        let left = spg_of(&parts.side(true, &parts.a, via)?, limit)?;
        let right = spg_of(&parts.side(false, via, &parts.b)?, limit)?;
        Ok(Product { left, right })
    };
    let (graph, matching_edges) = match case {
        TwoSumCase::II => (product(&parts.x)?.graph(), 0),
        TwoSumCase::III => (product(&parts.y)?.graph(), 0),
        TwoSumCase::I | TwoSumCase::IV => {
            let (px, py) = (product(&parts.x)?, product(&parts.y)?);
            let mut vertices: BTreeMap<Vec<String>, usize> = BTreeMap::new();
            for p in [&px, &py] {
                for key in p.vertices() {
                    let next = vertices.len();
                    vertices.entry(key).or_insert(next);
                }
            }
            let mut edges: HashSet<(usize, usize)> = HashSet::new();
            for p in [&px, &py] {
                for (k1, k2) in p.edges() {
                    let (u, w) = (vertices[&k1], vertices[&k2]);
                    edges.insert((u.min(w), u.max(w)));
                }
            }
            let mut matching = 0;
            if case == TwoSumCase::I {
                // Concatenations through x and through y that agree
                // everywhere but the shared position.
                for kx in px.vertices() {
                    for ky in py.vertices() {
                        let differing = kx.iter().zip(&ky).filter(|(s, t)| s != t).count();
                        if differing == 1 {
                            let (u, w) = (vertices[&kx], vertices[&ky]);
                            edges.insert((u.min(w), u.max(w)));
                            matching += 1;
                        }
                    }
                }
            }
            let mut edges: Vec<(usize, usize)> = edges.into_iter().collect();
            edges.sort_unstable();
            (Graph::from_indexed(vertices.len(), &edges)?, matching)
        }
    };
    Ok(TwoSumPrediction { case, graph, matching_edges })
}

struct Product {
    left: SpGraph,
    right: SpGraph,
}

impl Product {
    fn concat(&self, l: usize, r: usize) -> Vec<String> {
        let mut key = self.left.geodesic_names(l);
        key.extend(self.right.geodesic_names(r).into_iter().skip(1));
        key
    }

    fn vertices(&self) -> Vec<Vec<String>> {
        let mut out = Vec::new();
        for l in 0..self.left.vertex_count() {
            for r in 0..self.right.vertex_count() {
                out.push(self.concat(l, r));
            }
        }
        out
    }

    fn edges(&self) -> Vec<(Vec<String>, Vec<String>)> {
        let mut out = Vec::new();
        for (l1, l2) in self.left.graph().edges() {
            for r in 0..self.right.vertex_count() {
                out.push((self.concat(l1, r), self.concat(l2, r)));
            }
        }
        for (r1, r2) in self.right.graph().edges() {
            for l in 0..self.left.vertex_count() {
                out.push((self.concat(l, r1), self.concat(l, r2)));
            }
        }
        out
    }

    fn graph(&self) -> Graph {
        cartesian_product(self.left.graph(), self.right.graph())
    }
}

/// The two-sum with the shared edge removed.
pub fn without_shared_edge(inst: &BaseInstance, x: &str, y: &str) -> Result<BaseInstance> {
    let g = inst.graph();
    let edges: Vec<(String, String)> = g
        .named_edges()
        .into_iter()
        .filter(|(u, v)| !((u == x && v == y) || (u == y && v == x)))
        .collect();
    BaseInstance::new(Graph::new(g.names().iter().cloned(), edges)?, inst.source_name(), inst.target_name())
}
