//! Finite simple undirected graphs with string vertex identifiers.
//!
//! Vertices are kept in natural sort order ("v2" before "v10"), so every
//! graph built from the same vertex and edge sets has the same internal
//! indices and serializes identically. Algorithms work on indices; names
//! only matter at the boundaries.

use std::cmp::Ordering;
use std::collections::{BTreeMap, HashMap, VecDeque};
use std::fmt::Write as _;

use serde::{Deserialize, Serialize};

use crate::error::{Error, Result};

/// Compares strings with embedded decimal runs numerically, falling back to
/// byte order so that distinct strings never compare equal.
pub fn natural_cmp(a: &str, b: &str) -> Ordering {
    let (mut x, mut y) = (a.as_bytes(), b.as_bytes());
    loop {
        match (x.first(), y.first()) {
            (None, None) => return a.cmp(b),
            (None, Some(_)) => return Ordering::Less,
            (Some(_), None) => return Ordering::Greater,
            (Some(p), Some(q)) if p.is_ascii_digit() && q.is_ascii_digit() => {
                let lx = x.iter().take_while(|c| c.is_ascii_digit()).count();
                let ly = y.iter().take_while(|c| c.is_ascii_digit()).count();
                let dx = trim_zeros(&x[..lx]);
                let dy = trim_zeros(&y[..ly]);
                let ord = dx.len().cmp(&dy.len()).then_with(|| dx.cmp(dy));
                if ord != Ordering::Equal {
                    return ord;
                }
                x = &x[lx..];
                y = &y[ly..];
            }
            (Some(p), Some(q)) => {
                if p != q {
                    return p.cmp(q);
                }
                x = &x[1..];
                y = &y[1..];
            }
        }
    }
}

fn trim_zeros(digits: &[u8]) -> &[u8] {
    let zeros = digits.iter().take_while(|&&c| c == b'0').count();
    &digits[zeros..]
}

#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    names: Vec<String>,
    adj: Vec<Vec<usize>>,
    edge_count: usize,
}

impl Graph {
    /// Builds a graph from vertex names and named edges. Edge endpoints must
    /// be listed among the vertices.
    pub fn new<V, S, E, A, B>(vertices: V, edges: E) -> Result<Self>
    where
        V: IntoIterator<Item = S>,
        S: Into<String>,
        E: IntoIterator<Item = (A, B)>,
        A: AsRef<str>,
        B: AsRef<str>,
    {
        let mut names: Vec<String> = vertices.into_iter().map(Into::into).collect();
        names.sort_by(|a, b| natural_cmp(a, b));
        if let Some(w) = names.windows(2).find(|w| w[0] == w[1]) {
            return Err(Error::DuplicateVertex(w[0].clone()));
        }
        let index: HashMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut pairs = Vec::new();
        for (a, b) in edges {
            let (a, b) = (a.as_ref(), b.as_ref());
            let u = *index.get(a).ok_or_else(|| Error::UnknownVertex(a.to_owned()))?;
            let v = *index.get(b).ok_or_else(|| Error::UnknownVertex(b.to_owned()))?;
            pairs.push((u, v));
        }
        let n = names.len();
        Self::assemble(names, n, pairs)
    }

    /// Builds a graph on vertices named `0..n` (which sort in index order).
    pub fn from_indexed(n: usize, edges: &[(usize, usize)]) -> Result<Self> {
        let names = (0..n).map(|i| i.to_string()).collect();
        for &(u, v) in edges {
            if u >= n || v >= n {
                return Err(Error::UnknownVertex(u.max(v).to_string()));
            }
        }
        Self::assemble(names, n, edges.iter().copied())
    }

    fn assemble(
        names: Vec<String>,
        n: usize,
        pairs: impl IntoIterator<Item = (usize, usize)>,
    ) -> Result<Self> {
        let mut adj = vec![Vec::new(); n];
        let mut edge_count = 0;
        for (u, v) in pairs {
            if u == v {
                return Err(Error::SelfLoop(names[u].clone()));
            }
            adj[u].push(v);
            adj[v].push(u);
            edge_count += 1;
        }
        for (u, list) in adj.iter_mut().enumerate() {
            list.sort_unstable();
            if let Some(w) = list.windows(2).find(|w| w[0] == w[1]) {
                return Err(Error::DuplicateEdge(names[u].clone(), names[w[0]].clone()));
            }
        }
        Ok(Graph { names, adj, edge_count })
    }

    pub fn empty() -> Self {
        Graph { names: Vec::new(), adj: Vec::new(), edge_count: 0 }
    }

    pub fn vertex_count(&self) -> usize {
        self.names.len()
    }

    pub fn edge_count(&self) -> usize {
        self.edge_count
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: usize) -> &str {
        &self.names[v]
    }

    pub fn index_of(&self, name: &str) -> Option<usize> {
        self.names.binary_search_by(|probe| natural_cmp(probe, name)).ok()
    }

    pub(crate) fn require(&self, name: &str) -> Result<usize> {
        self.index_of(name).ok_or_else(|| Error::UnknownVertex(name.to_owned()))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.adj[u].binary_search(&v).is_ok()
    }

    /// Edges as index pairs `(u, v)` with `u < v`, in lexicographic order.
    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.adj
            .iter()
            .enumerate()
            .flat_map(|(u, list)| list.iter().filter(move |&&v| u < v).map(move |&v| (u, v)))
    }

    pub fn named_edges(&self) -> Vec<(String, String)> {
        self.edges()
            .map(|(u, v)| (self.names[u].clone(), self.names[v].clone()))
            .collect()
    }

    /// Subgraph induced on `keep`; vertex names are preserved.
    pub fn induced_subgraph(&self, keep: &[usize]) -> Graph {
        let mut inside = vec![false; self.vertex_count()];
        for &v in keep {
            inside[v] = true;
        }
        let vertices = keep.iter().map(|&v| self.names[v].clone());
        let edges: Vec<(&str, &str)> = self
            .edges()
            .filter(|&(u, v)| inside[u] && inside[v])
            .map(|(u, v)| (self.name(u), self.name(v)))
            .collect();
        Graph::new(vertices, edges).expect("induced subgraph of a valid graph")
    }

    /// Renames every vertex; the mapping must be injective.
    pub fn relabel(&self, mut f: impl FnMut(&str) -> String) -> Result<Graph> {
        let renamed: Vec<String> = self.names.iter().map(|s| f(s)).collect();
        let edges: Vec<(&str, &str)> =
            self.edges().map(|(u, v)| (renamed[u].as_str(), renamed[v].as_str())).collect();
        Graph::new(renamed.iter().cloned(), edges)
    }

    /// Breadth-first distances from `s`; `None` marks unreachable vertices.
    pub fn bfs(&self, s: usize) -> Vec<Option<usize>> {
        let mut dist = vec![None; self.vertex_count()];
        let mut queue = VecDeque::new();
        dist[s] = Some(0);
        queue.push_back(s);
        while let Some(u) = queue.pop_front() {
            let du = dist[u].unwrap();
            for &v in &self.adj[u] {
                if dist[v].is_none() {
                    dist[v] = Some(du + 1);
                    queue.push_back(v);
                }
            }
        }
        dist
    }

    /// Distances from the named vertex, keyed by vertex name.
    pub fn distances(&self, s: &str) -> Result<BTreeMap<String, Option<usize>>> {
        let src = self.require(s)?;
        Ok(self
            .bfs(src)
            .into_iter()
            .enumerate()
            .map(|(v, d)| (self.names[v].clone(), d))
            .collect())
    }

    /// Length of a shortest cycle, or `None` for forests.
    pub fn girth(&self) -> Option<usize> {
        let n = self.vertex_count();
        let mut best: Option<usize> = None;
        let mut dist = vec![usize::MAX; n];
        let mut parent = vec![usize::MAX; n];
        let mut queue = VecDeque::new();
        for root in 0..n {
            dist.iter_mut().for_each(|d| *d = usize::MAX);
            dist[root] = 0;
            parent[root] = usize::MAX;
            queue.clear();
            queue.push_back(root);
            while let Some(u) = queue.pop_front() {
                if best.is_some_and(|b| 2 * dist[u] + 1 >= b) {
                    break;
                }
                for &v in &self.adj[u] {
                    if dist[v] == usize::MAX {
                        dist[v] = dist[u] + 1;
                        parent[v] = u;
                        queue.push_back(v);
                    } else if parent[u] != v {
                        let len = dist[u] + dist[v] + 1;
                        best = Some(best.map_or(len, |b| b.min(len)));
                    }
                }
            }
        }
        best
    }

    /// Connected components, each sorted, ordered by smallest member.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let n = self.vertex_count();
        let mut seen = vec![false; n];
        let mut out = Vec::new();
        for s in 0..n {
            if seen[s] {
                continue;
            }
            seen[s] = true;
            let mut comp = vec![s];
            let mut stack = vec![s];
            while let Some(u) = stack.pop() {
                for &v in &self.adj[u] {
                    if !seen[v] {
                        seen[v] = true;
                        comp.push(v);
                        stack.push(v);
                    }
                }
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    pub fn is_connected(&self) -> bool {
        self.components().len() <= 1
    }

    pub fn is_complete(&self) -> bool {
        let n = self.vertex_count();
        self.adj.iter().all(|l| l.len() + 1 == n)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&GraphJson::from(self)).expect("graph json")
    }

    pub fn from_json(text: &str) -> Result<Self> {
        let raw: RawGraphJson = serde_json::from_str(text).map_err(|e| Error::Parse {
            location: format!("line {} column {}", e.line(), e.column()),
            message: e.to_string(),
        })?;
        let vertices: Vec<String> = raw.vertices.into_iter().map(VertexId::into_string).collect();
        let mut edges = Vec::with_capacity(raw.edges.len());
        for (k, pair) in raw.edges.into_iter().enumerate() {
            let (u, v) = (pair[0].clone().into_string(), pair[1].clone().into_string());
            if u == v {
                return Err(Error::Parse {
                    location: format!("edges[{k}]"),
                    message: format!("self-loop on `{u}`"),
                });
            }
            edges.push((u, v));
        }
        Graph::new(vertices, edges).map_err(|e| Error::Parse {
            location: "edges".to_owned(),
            message: e.to_string(),
        })
    }

    /// Parses the edge-list format: one `u v` pair per line, `#` starts a
    /// comment, a line with a single token declares an isolated vertex.
    pub fn from_edge_list(text: &str) -> Result<Self> {
        let mut vertices: Vec<String> = Vec::new();
        let mut edges: Vec<(String, String)> = Vec::new();
        let mut seen_edges = std::collections::HashSet::new();
        for (lineno, line) in text.lines().enumerate() {
            let body = line.split('#').next().unwrap_or("");
            let tokens: Vec<&str> = body.split_whitespace().collect();
            let location = format!("line {}", lineno + 1);
            match tokens.as_slice() {
                [] => {}
                [v] => vertices.push((*v).to_owned()),
                [u, v] => {
                    if u == v {
                        return Err(Error::Parse { location, message: format!("self-loop on `{u}`") });
                    }
                    let key = if natural_cmp(u, v) == Ordering::Less { (*u, *v) } else { (*v, *u) };
                    if !seen_edges.insert((key.0.to_owned(), key.1.to_owned())) {
                        return Err(Error::Parse {
                            location,
                            message: format!("duplicate edge `{u}`-`{v}`"),
                        });
                    }
                    vertices.push((*u).to_owned());
                    vertices.push((*v).to_owned());
                    edges.push(((*u).to_owned(), (*v).to_owned()));
                }
                _ => {
                    return Err(Error::Parse {
                        location,
                        message: format!("expected `u v`, found {} tokens", tokens.len()),
                    })
                }
            }
        }
        vertices.sort_by(|a, b| natural_cmp(a, b));
        vertices.dedup();
        Graph::new(vertices, edges)
    }

    pub fn to_edge_list(&self) -> String {
        let mut out = String::new();
        for v in 0..self.vertex_count() {
            if self.adj[v].is_empty() {
                let _ = writeln!(out, "{}", self.names[v]);
            }
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "{} {}", self.names[u], self.names[v]);
        }
        out
    }

    pub fn to_dot(&self, name: &str) -> String {
        let mut out = format!("graph {} {{\n", dot_id(name));
        for v in &self.names {
            let _ = writeln!(out, "  {};", dot_id(v));
        }
        for (u, v) in self.edges() {
            let _ = writeln!(out, "  {} -- {};", dot_id(&self.names[u]), dot_id(&self.names[v]));
        }
        out.push_str("}\n");
        out
    }
}

pub(crate) fn dot_id(s: &str) -> String {
    format!("\"{}\"", s.replace('\\', "\\\\").replace('"', "\\\""))
}

#[derive(Debug, Serialize)]
struct GraphJson {
    vertices: Vec<String>,
    edges: Vec<[String; 2]>,
}

impl From<&Graph> for GraphJson {
    fn from(g: &Graph) -> Self {
        GraphJson {
            vertices: g.names.clone(),
            edges: g.named_edges().into_iter().map(|(u, v)| [u, v]).collect(),
        }
    }
}

#[derive(Debug, Clone, Deserialize)]
#[serde(untagged)]
enum VertexId {
    Text(String),
    Int(i64),
}

impl VertexId {
    fn into_string(self) -> String {
        match self {
            VertexId::Text(s) => s,
            VertexId::Int(i) => i.to_string(),
        }
    }
}

#[derive(Debug, Deserialize)]
#[serde(deny_unknown_fields)]
struct RawGraphJson {
    vertices: Vec<VertexId>,
    edges: Vec<[VertexId; 2]>,
}

/// A graph with two distinguished, distinct vertices `a` (source) and `b`
/// (target).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct BaseInstance {
    graph: Graph,
    source: usize,
    target: usize,
}

impl BaseInstance {
    pub fn new(graph: Graph, source: &str, target: &str) -> Result<Self> {
        let s = graph.require(source)?;
        let t = graph.require(target)?;
        if s == t {
            return Err(Error::SameEndpoints(source.to_owned()));
        }
        Ok(BaseInstance { graph, source: s, target: t })
    }

    pub fn from_indices(graph: Graph, source: usize, target: usize) -> Result<Self> {
        if source >= graph.vertex_count() || target >= graph.vertex_count() {
            return Err(Error::UnknownVertex(source.max(target).to_string()));
        }
        if source == target {
            return Err(Error::SameEndpoints(graph.name(source).to_owned()));
        }
        Ok(BaseInstance { graph, source, target })
    }

    pub fn graph(&self) -> &Graph {
        &self.graph
    }

    pub fn source(&self) -> usize {
        self.source
    }

    pub fn target(&self) -> usize {
        self.target
    }

    pub fn source_name(&self) -> &str {
        self.graph.name(self.source)
    }

    pub fn target_name(&self) -> &str {
        self.graph.name(self.target)
    }

    /// `d(a, b)`, or `None` when the endpoints are disconnected.
    pub fn distance(&self) -> Option<usize> {
        self.graph.bfs(self.source)[self.target]
    }

    /// Same graph, different endpoints.
    pub fn with_endpoints(&self, source: usize, target: usize) -> Result<Self> {
        Self::from_indices(self.graph.clone(), source, target)
    }
}

/// `g1 □ g2`; the vertex `(u, v)` is named `"(u,v)"`.
pub fn cartesian_product(g1: &Graph, g2: &Graph) -> Graph {
    let pair = |u: usize, v: usize| format!("({},{})", g1.name(u), g2.name(v));
    let n2 = g2.vertex_count();
    let mut vertices = Vec::with_capacity(g1.vertex_count() * n2);
    for u in 0..g1.vertex_count() {
        for v in 0..n2 {
            vertices.push(pair(u, v));
        }
    }
    let mut edges = Vec::new();
    for u in 0..g1.vertex_count() {
        for (v, w) in g2.edges() {
            edges.push((pair(u, v), pair(u, w)));
        }
    }
    for (u, x) in g1.edges() {
        for v in 0..n2 {
            edges.push((pair(u, v), pair(x, v)));
        }
    }
    Graph::new(vertices, edges).expect("product names are unique")
}

/// `g1 ∪ g2` with `g1`'s vertices prefixed `L:` and `g2`'s `R:`.
pub fn disjoint_union(g1: &Graph, g2: &Graph) -> Graph {
    let vertices = g1
        .names()
        .iter()
        .map(|s| format!("L:{s}"))
        .chain(g2.names().iter().map(|s| format!("R:{s}")));
    let edges = g1
        .named_edges()
        .into_iter()
        .map(|(u, v)| (format!("L:{u}"), format!("L:{v}")))
        .chain(g2.named_edges().into_iter().map(|(u, v)| (format!("R:{u}"), format!("R:{v}"))));
    Graph::new(vertices, edges.collect::<Vec<_>>()).expect("prefixed names are unique")
}

/// Named families used throughout tests and constructions.
pub mod families {
    use super::Graph;

    /// Path with `k` edges.
    pub fn path(k: usize) -> Graph {
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, i + 1)).collect();
        Graph::from_indexed(k + 1, &edges).unwrap()
    }

    pub fn cycle(k: usize) -> Graph {
        assert!(k >= 3, "cycle needs at least 3 vertices");
        let edges: Vec<(usize, usize)> = (0..k).map(|i| (i, (i + 1) % k)).collect();
        Graph::from_indexed(k, &edges).unwrap()
    }

    pub fn complete(n: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..n {
            for v in u + 1..n {
                edges.push((u, v));
            }
        }
        Graph::from_indexed(n, &edges).unwrap()
    }

    /// Edgeless graph on `t` vertices.
    pub fn empty(t: usize) -> Graph {
        Graph::from_indexed(t, &[]).unwrap()
    }

    pub fn complete_bipartite(p: usize, q: usize) -> Graph {
        let mut edges = Vec::new();
        for u in 0..p {
            for v in 0..q {
                edges.push((u, p + v));
            }
        }
        Graph::from_indexed(p + q, &edges).unwrap()
    }

    /// `K_{1,k}` with center `0`.
    pub fn star(k: usize) -> Graph {
        complete_bipartite(1, k)
    }

    /// Vertices are bit strings of length `k`.
    pub fn hypercube(k: usize) -> Graph {
        let n = 1usize << k;
        let mut edges = Vec::new();
        for u in 0..n {
            for bit in 0..k {
                let v = u ^ (1 << bit);
                if u < v {
                    edges.push((u, v));
                }
            }
        }
        Graph::from_indexed(n, &edges).unwrap()
    }
}
