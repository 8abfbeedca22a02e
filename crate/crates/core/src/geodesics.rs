//! Shortest `a,b`-paths: the geodesic DAG, enumeration, exact counting and
//! the reduced base graph.

use std::collections::BTreeMap;

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::graph::{BaseInstance, Graph};

/// Default cap on enumerated geodesics.
pub const DEFAULT_GEODESIC_LIMIT: u64 = 1_000_000;

/// A shortest `a,b`-path, stored as base-graph vertex indices `a = v_0 .. v_d = b`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Geodesic(pub Vec<usize>);

impl Geodesic {
    pub fn vertices(&self) -> &[usize] {
        &self.0
    }

    /// Number of edges.
    pub fn len(&self) -> usize {
        self.0.len().saturating_sub(1)
    }

    pub fn is_empty(&self) -> bool {
        self.0.len() <= 1
    }

    pub fn names(&self, g: &Graph) -> Vec<String> {
        self.0.iter().map(|&v| g.name(v).to_owned()).collect()
    }
}

/// Layered view of all geodesics: the edges `u -> v` with
/// `dist_from_a(u) + 1 + dist_to_b(v) = d(a, b)`.
#[derive(Debug, Clone)]
pub struct GeodesicDag {
    instance: BaseInstance,
    dist_from_a: Vec<Option<usize>>,
    dist_to_b: Vec<Option<usize>>,
    distance: usize,
    succ: Vec<Vec<usize>>,
}

impl GeodesicDag {
    pub fn build(inst: &BaseInstance) -> Result<Self> {
        let g = inst.graph();
        let dist_from_a = g.bfs(inst.source());
        let dist_to_b = g.bfs(inst.target());
        let distance = dist_from_a[inst.target()].ok_or_else(|| {
            Error::NoGeodesic(inst.source_name().to_owned(), inst.target_name().to_owned())
        })?;
        let mut succ = vec![Vec::new(); g.vertex_count()];
        for u in 0..g.vertex_count() {
            let Some(du) = dist_from_a[u] else { continue };
            for &v in g.neighbors(u) {
                if dist_to_b[v].is_some_and(|dv| du + 1 + dv == distance) {
                    succ[u].push(v);
                }
            }
        }
        Ok(GeodesicDag { instance: inst.clone(), dist_from_a, dist_to_b, distance, succ })
    }

    pub fn instance(&self) -> &BaseInstance {
        &self.instance
    }

    /// `d(a, b)`.
    pub fn distance(&self) -> usize {
        self.distance
    }

    pub fn dist_from_a(&self, v: usize) -> Option<usize> {
        self.dist_from_a[v]
    }

    pub fn dist_to_b(&self, v: usize) -> Option<usize> {
        self.dist_to_b[v]
    }

    /// Successors of `u` along geodesics, ascending.
    pub fn successors(&self, u: usize) -> &[usize] {
        &self.succ[u]
    }

    /// Directed geodesic edges, ascending.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.succ
            .iter()
            .enumerate()
            .flat_map(|(u, s)| s.iter().map(move |&v| (u, v)))
            .collect()
    }

    pub fn on_geodesic(&self, v: usize) -> bool {
        matches!((self.dist_from_a[v], self.dist_to_b[v]), (Some(x), Some(y)) if x + y == self.distance)
    }

    /// Vertices at distance `i` from `a` that lie on some geodesic, ascending.
    pub fn layer(&self, i: usize) -> Vec<usize> {
        (0..self.succ.len())
            .filter(|&v| self.dist_from_a[v] == Some(i) && self.on_geodesic(v))
            .collect()
    }

    /// Number of `a,v`-geodesics for every `v` (zero off the DAG).
    pub fn counts_from_a(&self) -> Vec<BigUint> {
        let n = self.succ.len();
        let mut order: Vec<usize> = (0..n).filter(|&v| self.on_geodesic(v)).collect();
        order.sort_by_key(|&v| self.dist_from_a[v]);
        let mut count = vec![BigUint::zero(); n];
        count[self.instance.source()] = BigUint::one();
        for &u in &order {
            if count[u].is_zero() {
                continue;
            }
            let cu = count[u].clone();
            for &v in &self.succ[u] {
                count[v] += &cu;
            }
        }
        count
    }

    /// Number of `v,b`-geodesics for every `v` (zero off the DAG).
    pub fn counts_to_b(&self) -> Vec<BigUint> {
        let n = self.succ.len();
        let mut order: Vec<usize> = (0..n).filter(|&v| self.on_geodesic(v)).collect();
        order.sort_by_key(|&v| std::cmp::Reverse(self.dist_from_a[v]));
        let mut count = vec![BigUint::zero(); n];
        count[self.instance.target()] = BigUint::one();
        for &u in &order {
            let mut total = std::mem::take(&mut count[u]);
            for &v in &self.succ[u] {
                total += &count[v];
            }
            count[u] = total;
        }
        count
    }

    pub fn count(&self) -> BigUint {
        self.counts_to_b()[self.instance.source()].clone()
    }

    /// All geodesics in lexicographic order of their index sequences.
    pub fn enumerate(&self, limit: u64) -> Result<Vec<Geodesic>> {
        let total = self.count();
        if total > BigUint::from(limit) {
            return Err(Error::LimitExceeded { what: "geodesic", count: total.to_string(), limit });
        }
        let mut out = Vec::new();
        let mut path = vec![self.instance.source()];
        self.walk(&mut path, &mut out);
        Ok(out)
    }

    fn walk(&self, path: &mut Vec<usize>, out: &mut Vec<Geodesic>) {
        let u = *path.last().unwrap();
        if u == self.instance.target() {
            out.push(Geodesic(path.clone()));
            return;
        }
        for &v in &self.succ[u] {
            path.push(v);
            self.walk(path, out);
            path.pop();
        }
    }
}

pub fn build_dag(inst: &BaseInstance) -> Result<GeodesicDag> {
    GeodesicDag::build(inst)
}

pub fn enumerate_geodesics(dag: &GeodesicDag, limit: u64) -> Result<Vec<Geodesic>> {
    dag.enumerate(limit)
}

pub fn count_geodesics(dag: &GeodesicDag) -> BigUint {
    dag.count()
}

/// The reduced base graph: geodesic-free elements deleted, edges on every
/// geodesic contracted. When contraction merges `a` and `b` (a unique
/// geodesic), `collapsed` is set and `source == target`.
#[derive(Debug, Clone)]
pub struct ReducedInstance {
    pub graph: Graph,
    pub source: usize,
    pub target: usize,
    /// Original vertex name to reduced vertex name, `None` when deleted.
    pub vertex_map: BTreeMap<String, Option<String>>,
    pub collapsed: bool,
}

impl ReducedInstance {
    /// The reduced graph as a base instance; `None` when collapsed.
    pub fn instance(&self) -> Option<BaseInstance> {
        if self.collapsed {
            None
        } else {
            Some(BaseInstance::from_indices(self.graph.clone(), self.source, self.target).unwrap())
        }
    }
}

pub fn reduce(inst: &BaseInstance) -> Result<ReducedInstance> {
    let dag = GeodesicDag::build(inst)?;
    let g = inst.graph();
    let n = g.vertex_count();
    let from_a = dag.counts_from_a();
    let to_b = dag.counts_to_b();
    let total = &to_b[inst.source()];

    let mut uf = UnionFind::new(n);
    let dag_edges = dag.edges();
    for &(u, v) in &dag_edges {
        if &(&from_a[u] * &to_b[v]) == total {
            uf.union(u, v);
        }
    }

    // A merged class is named after its source/target member if it has one,
    // otherwise after its smallest member.
    let kept: Vec<usize> = (0..n).filter(|&v| dag.on_geodesic(v)).collect();
    let mut class_name: BTreeMap<usize, String> = BTreeMap::new();
    for &v in &kept {
        class_name.entry(uf.find(v)).or_insert_with(|| g.name(v).to_owned());
    }
    for special in [inst.source(), inst.target()] {
        class_name.insert(uf.find(special), g.name(special).to_owned());
    }
    let collapsed = uf.find(inst.source()) == uf.find(inst.target());
    if collapsed {
        class_name.insert(uf.find(inst.source()), g.name(inst.source()).to_owned());
    }

    let vertex_map: BTreeMap<String, Option<String>> = (0..n)
        .map(|v| {
            let image = dag.on_geodesic(v).then(|| class_name[&uf.find(v)].clone());
            (g.name(v).to_owned(), image)
        })
        .collect();

    let mut edges: Vec<(String, String)> = Vec::new();
    for &(u, v) in &dag_edges {
        let (ru, rv) = (uf.find(u), uf.find(v));
        if ru == rv {
            continue;
        }
        let (x, y) = (class_name[&ru].clone(), class_name[&rv].clone());
        edges.push(if x < y { (x, y) } else { (y, x) });
    }
    edges.sort();
    edges.dedup();
    let mut vertices: Vec<String> = class_name.values().cloned().collect();
    vertices.sort();
    vertices.dedup();
    let graph = Graph::new(vertices, edges)?;
    let source = graph.index_of(&class_name[&uf.find(inst.source())]).unwrap();
    let target = graph.index_of(&class_name[&uf.find(inst.target())]).unwrap();
    Ok(ReducedInstance { graph, source, target, vertex_map, collapsed })
}

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind { parent: (0..n).collect() }
    }

    fn find(&mut self, mut x: usize) -> usize {
        while self.parent[x] != x {
            self.parent[x] = self.parent[self.parent[x]];
            x = self.parent[x];
        }
        x
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            self.parent[ra.max(rb)] = ra.min(rb);
        }
    }
}
