//! The shortest path graph `S(G, a, b)`.
//!
//! Vertices are the `a,b`-geodesics in lexicographic order; two geodesics
//! are adjacent iff they differ at exactly one (interior) position, which is
//! stored as the edge's difference index.

use std::collections::{BTreeMap, BTreeSet, HashMap};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};
use crate::geodesics::{Geodesic, GeodesicDag};
use crate::graph::{dot_id, natural_cmp, BaseInstance, Graph};

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpGraph {
    labels: Vec<String>,
    geodesics: Vec<Geodesic>,
    distance: Option<usize>,
    graph: Graph,
    edge_index: BTreeMap<(usize, usize), usize>,
}

impl SpGraph {
    /// A graph with no vertices (the shortest path graph of a disconnected
    /// pair).
    pub fn empty() -> Self {
        SpGraph {
            labels: Vec::new(),
            geodesics: Vec::new(),
            distance: None,
            graph: Graph::empty(),
            edge_index: BTreeMap::new(),
        }
    }

    /// An index-labelled graph without geodesics. Checkers accept these so
    /// that they can be run on inputs no base graph realizes.
    pub fn from_labeled_edges(n: usize, edges: &[(usize, usize, usize)]) -> Result<Self> {
        let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, w, _)| (u, w)).collect();
        let graph = Graph::from_indexed(n, &pairs)?;
        let edge_index = edges.iter().map(|&(u, w, i)| ((u.min(w), u.max(w)), i)).collect();
        let distance = edges.iter().map(|e| e.2 + 1).max();
        Ok(SpGraph { labels: Vec::new(), geodesics: Vec::new(), distance, graph, edge_index })
    }

    fn from_parts(labels: Vec<String>, geodesics: Vec<Geodesic>, distance: usize, edges: Vec<(usize, usize, usize)>) -> Self {
        let pairs: Vec<(usize, usize)> = edges.iter().map(|&(u, w, _)| (u, w)).collect();
        let graph = Graph::from_indexed(geodesics.len(), &pairs).expect("distinct geodesic pairs");
        let edge_index = edges.into_iter().map(|(u, w, i)| ((u, w), i)).collect();
        SpGraph { labels, geodesics, distance: Some(distance), graph, edge_index }
    }

    /// True when the vertices carry geodesics of some base graph.
    pub fn is_realized(&self) -> bool {
        !self.geodesics.is_empty()
    }

    pub fn vertex_count(&self) -> usize {
        self.graph.vertex_count()
    }

    pub fn edge_count(&self) -> usize {
        self.graph.edge_count()
    }

    /// The underlying simple graph on vertices `0..n`.
    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn geodesics(&self) -> &[Geodesic] {
        &self.geodesics
    }

    /// Base-graph vertex names referenced by the geodesics.
    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    /// `d(a, b)` of the base instance, when known.
    pub fn distance(&self) -> Option<usize> {
        self.distance
    }

    pub fn geodesic_names(&self, u: usize) -> Vec<String> {
        self.geodesics[u].0.iter().map(|&v| self.labels[v].clone()).collect()
    }

    pub fn edge_label(&self, u: usize, w: usize) -> Option<usize> {
        self.edge_index.get(&(u.min(w), u.max(w))).copied()
    }

    /// Edges `(u, w, index)` with `u < w`, ascending.
    pub fn labeled_edges(&self) -> impl Iterator<Item = (usize, usize, usize)> + '_ {
        self.edge_index.iter().map(|(&(u, w), &i)| (u, w, i))
    }

    /// Largest admissible difference index, `d - 1`.
    fn max_index(&self) -> usize {
        self.distance.unwrap_or(0).saturating_sub(1)
    }

    fn check_index(&self, i: usize) -> Result<()> {
        if i == 0 || i > self.max_index() {
            return Err(Error::IndexOutOfRange { index: i, max: self.max_index() });
        }
        Ok(())
    }

    /// Subgraph induced on `keep` (kept in the given order), difference
    /// indices preserved.
    pub fn induced(&self, keep: &[usize]) -> SpGraph {
        let position: HashMap<usize, usize> = keep.iter().enumerate().map(|(k, &v)| (v, k)).collect();
        let mut edges = Vec::new();
        for (&(u, w), &i) in &self.edge_index {
            if let (Some(&x), Some(&y)) = (position.get(&u), position.get(&w)) {
                edges.push((x.min(y), x.max(y), i));
            }
        }
        edges.sort_unstable();
        if self.is_realized() {
            let geodesics = keep.iter().map(|&v| self.geodesics[v].clone()).collect();
            SpGraph::from_parts(self.labels.clone(), geodesics, self.distance.unwrap(), edges)
        } else {
            SpGraph::from_labeled_edges(keep.len(), &edges).expect("valid induced edges")
        }
    }

    pub fn to_json(&self) -> String {
        let doc = SpGraphJson {
            geodesics: (0..self.geodesics.len()).map(|u| self.geodesic_names(u)).collect(),
            edges: self.labeled_edges().map(|(u, w, index)| EdgeJson { u, w, index }).collect(),
        };
        serde_json::to_string(&doc).expect("spg json")
    }

    /// Reads the JSON form back. Adjacency is taken from the file as given
    /// (not recomputed), so hand-edited inputs reach the checkers unchanged.
    pub fn from_json(text: &str) -> Result<Self> {
        let doc: SpGraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let n = doc.geodesics.len();
        let edges: Vec<(usize, usize, usize)> = doc.edges.iter().map(|e| (e.u, e.w, e.index)).collect();
        if doc.geodesics.is_empty() {
            let n = edges.iter().map(|e| e.0.max(e.1) + 1).max().unwrap_or(0);
            return SpGraph::from_labeled_edges(n, &edges);
        }
        let mut labels: Vec<String> = doc.geodesics.iter().flatten().cloned().collect();
        labels.sort_by(|a, b| natural_cmp(a, b));
        labels.dedup();
        let lookup: HashMap<&str, usize> = labels.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let geodesics: Vec<Geodesic> = doc
            .geodesics
            .iter()
            .map(|p| Geodesic(p.iter().map(|s| lookup[s.as_str()]).collect()))
            .collect();
        let d = geodesics[0].len();
        if let Some(k) = geodesics.iter().position(|g| g.len() != d) {
            return Err(Error::Parse { location: format!("geodesics[{k}]"), message: "length differs".into() });
        }
        for (k, e) in edges.iter().enumerate() {
            if e.0 >= n || e.1 >= n || e.0 == e.1 {
                return Err(Error::Parse { location: format!("edges[{k}]"), message: "bad endpoint".into() });
            }
        }
        let mut normalized: Vec<(usize, usize, usize)> = edges.iter().map(|&(u, w, i)| (u.min(w), u.max(w), i)).collect();
        normalized.sort_unstable();
        let pairs: Vec<(usize, usize)> = normalized.iter().map(|&(u, w, _)| (u, w)).collect();
        let graph = Graph::from_indexed(n, &pairs).map_err(|e| Error::Parse { location: "edges".into(), message: e.to_string() })?;
        let edge_index = normalized.into_iter().map(|(u, w, i)| ((u, w), i)).collect();
        Ok(SpGraph { labels, geodesics, distance: Some(d), graph, edge_index })
    }

    /// Graphviz rendering; edges are labelled and colored by difference
    /// index.
    pub fn to_dot(&self) -> String {
        const PALETTE: [&str; 8] =
            ["#1f77b4", "#d62728", "#2ca02c", "#ff7f0e", "#9467bd", "#8c564b", "#e377c2", "#17becf"];
        let mut out = String::from("graph spg {\n  node [shape=box];\n");
        for u in 0..self.vertex_count() {
            let label = if self.is_realized() { self.geodesic_names(u).join(" ") } else { u.to_string() };
            let _ = writeln!(out, "  {u} [label={}];", dot_id(&label));
        }
        for (u, w, i) in self.labeled_edges() {
            let color = PALETTE[(i + PALETTE.len() - 1) % PALETTE.len()];
            let _ = writeln!(out, "  {u} -- {w} [label=\"{i}\", color=\"{color}\"];");
        }
        out.push_str("}\n");
        out
    }
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct SpGraphJson {
    geodesics: Vec<Vec<String>>,
    edges: Vec<EdgeJson>,
}

#[derive(Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
struct EdgeJson {
    u: usize,
    w: usize,
    index: usize,
}

/// Builds `S(inst)`. A disconnected pair yields the empty graph.
pub fn build_spg(inst: &BaseInstance, limit: u64) -> Result<SpGraph> {
    let dag = match GeodesicDag::build(inst) {
        Ok(dag) => dag,
        Err(Error::NoGeodesic(..)) => return Ok(SpGraph::empty()),
        Err(e) => return Err(e),
    };
    let geodesics = dag.enumerate(limit)?;
    Ok(from_geodesics(inst.graph().names().to_vec(), geodesics, dag.distance()))
}

/// Adjacency by bucketing: for each interior position `i`, geodesics that
/// agree everywhere except at `i` share a bucket and form a clique of
/// index-`i` edges.
pub(crate) fn from_geodesics(labels: Vec<String>, geodesics: Vec<Geodesic>, d: usize) -> SpGraph {
    let n = geodesics.len();
    let mut edges = Vec::new();
    let mut order: Vec<usize> = (0..n).collect();
    for i in 1..d {
        let masked = |u: usize| {
            let p = &geodesics[u].0;
            (&p[..i], &p[i + 1..])
        };
        order.sort_unstable_by(|&x, &y| masked(x).cmp(&masked(y)).then(x.cmp(&y)));
        let mut start = 0;
        while start < n {
            let mut end = start + 1;
            while end < n && masked(order[end]) == masked(order[start]) {
                end += 1;
            }
            for x in start..end {
                for y in x + 1..end {
                    let (u, w) = (order[x], order[y]);
                    edges.push((u.min(w), u.max(w), i));
                }
            }
            start = end;
        }
    }
    edges.sort_unstable();
    SpGraph::from_parts(labels, geodesics, d, edges)
}

/// Reference construction comparing every pair positionally; `O(n^2 d)`.
pub fn build_spg_pairwise(inst: &BaseInstance, limit: u64) -> Result<SpGraph> {
    let dag = match GeodesicDag::build(inst) {
        Ok(dag) => dag,
        Err(Error::NoGeodesic(..)) => return Ok(SpGraph::empty()),
        Err(e) => return Err(e),
    };
    let geodesics = dag.enumerate(limit)?;
    let mut edges = Vec::new();
    for u in 0..geodesics.len() {
        for w in u + 1..geodesics.len() {
            if let Some(i) = difference_index(&geodesics[u], &geodesics[w])? {
                edges.push((u, w, i));
            }
        }
    }
    Ok(SpGraph::from_parts(inst.graph().names().to_vec(), geodesics, dag.distance(), edges))
}

/// The unique position where `u` and `w` differ, or `None` when they are
/// equal or differ in more than one position.
pub fn difference_index(u: &Geodesic, w: &Geodesic) -> Result<Option<usize>> {
    let (p, q) = (u.vertices(), w.vertices());
    if p.len() != q.len() {
        return Err(Error::Mismatch(format!("lengths {} and {}", p.len(), q.len())));
    }
    if p.first() != q.first() || p.last() != q.last() {
        return Err(Error::Mismatch("endpoints differ".into()));
    }
    let mut found = None;
    for (k, (x, y)) in p.iter().zip(q).enumerate() {
        if x != y {
            if found.is_some() {
                return Ok(None);
            }
            found = Some(k);
        }
    }
    Ok(found)
}

/// `E_i`: the edges whose difference index is `i`.
pub fn edges_at_index(h: &SpGraph, i: usize) -> Result<Vec<(usize, usize)>> {
    h.check_index(i)?;
    Ok(h.labeled_edges().filter(|e| e.2 == i).map(|(u, w, _)| (u, w)).collect())
}

/// The split of `S` along `E_i`: one part per base vertex at position `i`,
/// plus the `E_i` edges running between parts.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Decomposition {
    pub index: usize,
    /// Base vertex (index) at position `i` for each part.
    pub middle_vertices: Vec<usize>,
    /// Sorted SpGraph vertex sets, parallel to `middle_vertices`.
    pub components: Vec<Vec<usize>>,
    /// `(u, w, j, l)`: an `E_i` edge with `u` in part `j`, `w` in part `l`.
    pub cross_edges: Vec<(usize, usize, usize, usize)>,
}

pub fn decompose_at_index(h: &SpGraph, i: usize) -> Result<Decomposition> {
    h.check_index(i)?;
    if !h.is_realized() {
        return Err(Error::InvalidArgument("decomposition needs geodesics".into()));
    }
    let mut parts: BTreeMap<usize, Vec<usize>> = BTreeMap::new();
    for (u, g) in h.geodesics().iter().enumerate() {
        parts.entry(g.0[i]).or_default().push(u);
    }
    let middle_vertices: Vec<usize> = parts.keys().copied().collect();
    let part_of: HashMap<usize, usize> = middle_vertices.iter().enumerate().map(|(k, &v)| (v, k)).collect();
    let components: Vec<Vec<usize>> = parts.into_values().collect();
    let cross_edges = h
        .labeled_edges()
        .filter(|e| e.2 == i)
        .map(|(u, w, _)| (u, w, part_of[&h.geodesics()[u].0[i]], part_of[&h.geodesics()[w].0[i]]))
        .collect();
    Ok(Decomposition { index: i, middle_vertices, components, cross_edges })
}

/// Induced subgraph of `S(inst)` on the geodesics through `v`.
pub fn vertex_slice(inst: &BaseInstance, v: &str, limit: u64) -> Result<SpGraph> {
    let vi = inst.graph().require(v)?;
    let h = build_spg(inst, limit)?;
    let keep: Vec<usize> = (0..h.vertex_count()).filter(|&u| h.geodesics()[u].0.contains(&vi)).collect();
    if keep.is_empty() {
        return Err(Error::InvalidArgument(format!("vertex `{v}` lies on no geodesic")));
    }
    Ok(h.induced(&keep))
}

/// Difference indices used by the edges at `u`.
pub fn incident_indices(h: &SpGraph, u: usize) -> BTreeSet<usize> {
    h.graph().neighbors(u).iter().filter_map(|&w| h.edge_label(u, w)).collect()
}
