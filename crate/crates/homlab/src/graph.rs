//! Simple undirected graphs with dense vertex ids, plus the labelled and
//! ordered variants used elsewhere in the crate.
//!
//! Vertices are `0..n`. Edges are unordered pairs of distinct vertices kept
//! in a sorted set, so every iteration order is deterministic. Self-loops and
//! parallel edges are rejected at the boundaries and collapsed by bulk
//! constructors (products, gluing) where they arise naturally.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use serde::{Deserialize, Serialize};
use thiserror::Error;

#[derive(Debug, Error)]
pub enum GraphError {
    #[error("vertex {v} out of range for graph with {n} vertices")]
    VertexOutOfRange { v: usize, n: usize },
    #[error("self-loop at vertex {v} is not allowed")]
    SelfLoop { v: usize },
    #[error("line {line}: {msg}")]
    Parse { line: usize, msg: String },
    #[error("label {v} out of range for graph with {n} vertices")]
    LabelOutOfRange { v: usize, n: usize },
    #[error("label arity mismatch: {left} vs {right}")]
    ArityMismatch { left: usize, right: usize },
    #[error("order is not a permutation of the vertex set")]
    BadOrder,
    #[error("json: {0}")]
    Json(String),
}

/// Canonical storage form of an edge: endpoints sorted ascending.
pub fn edge_key(u: usize, v: usize) -> (usize, usize) {
    if u < v {
        (u, v)
    } else {
        (v, u)
    }
}

/// A finite simple undirected graph on vertices `0..n`.
#[derive(Clone)]
pub struct Graph {
    n: usize,
    edges: BTreeSet<(usize, usize)>,
    adj: Vec<Vec<usize>>,
}

impl PartialEq for Graph {
    fn eq(&self, other: &Self) -> bool {
        self.n == other.n && self.edges == other.edges
    }
}
impl Eq for Graph {}

impl PartialOrd for Graph {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}
impl Ord for Graph {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        (self.n, &self.edges).cmp(&(other.n, &other.edges))
    }
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Graph(n={}, edges={:?})", self.n, self.edges)
    }
}

impl Graph {
    pub fn new(n: usize) -> Self {
        Graph {
            n,
            edges: BTreeSet::new(),
            adj: vec![Vec::new(); n],
        }
    }

    /// Builds a graph from an edge list, rejecting loops and out-of-range
    /// endpoints. Duplicate edges are collapsed silently.
    pub fn from_edges<I>(n: usize, edges: I) -> Result<Self, GraphError>
    where
        I: IntoIterator<Item = (usize, usize)>,
    {
        let mut g = Graph::new(n);
        for (u, v) in edges {
            g.add_edge(u, v)?;
        }
        Ok(g)
    }

    /// Adds an edge; returns whether it was new.
    pub fn add_edge(&mut self, u: usize, v: usize) -> Result<bool, GraphError> {
        if u >= self.n {
            return Err(GraphError::VertexOutOfRange { v: u, n: self.n });
        }
        if v >= self.n {
            return Err(GraphError::VertexOutOfRange { v, n: self.n });
        }
        if u == v {
            return Err(GraphError::SelfLoop { v: u });
        }
        let inserted = self.edges.insert(edge_key(u, v));
        if inserted {
            self.adj[u].push(v);
            self.adj[v].push(u);
            self.adj[u].sort_unstable();
            self.adj[v].sort_unstable();
        }
        Ok(inserted)
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn m(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> std::ops::Range<usize> {
        0..self.n
    }

    pub fn edges(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().copied()
    }

    pub fn edge_set(&self) -> &BTreeSet<(usize, usize)> {
        &self.edges
    }

    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        u != v && self.edges.contains(&edge_key(u, v))
    }

    pub fn neighbors(&self, v: usize) -> &[usize] {
        &self.adj[v]
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adj[v].len()
    }

    pub fn min_degree(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).min().unwrap_or(0)
    }

    // ----- standard constructions -----

    pub fn complete(n: usize) -> Self {
        let mut g = Graph::new(n);
        for u in 0..n {
            for v in u + 1..n {
                g.add_edge(u, v).unwrap();
            }
        }
        g
    }

    /// Graph with `n` vertices and no edges.
    pub fn coclique(n: usize) -> Self {
        Graph::new(n)
    }

    pub fn path(n: usize) -> Self {
        let mut g = Graph::new(n);
        for v in 1..n {
            g.add_edge(v - 1, v).unwrap();
        }
        g
    }

    pub fn cycle(n: usize) -> Self {
        assert!(n >= 3, "cycle needs at least 3 vertices");
        let mut g = Graph::path(n);
        g.add_edge(n - 1, 0).unwrap();
        g
    }

    /// Star with a center (vertex 0) and `leaves` leaves.
    pub fn star(leaves: usize) -> Self {
        let mut g = Graph::new(leaves + 1);
        for v in 1..=leaves {
            g.add_edge(0, v).unwrap();
        }
        g
    }

    // ----- connectivity helpers -----

    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut comps = Vec::new();
        for s in 0..self.n {
            if seen[s] {
                continue;
            }
            let mut comp = vec![s];
            seen[s] = true;
            let mut queue = vec![s];
            while let Some(v) = queue.pop() {
                for &w in self.neighbors(v) {
                    if !seen[w] {
                        seen[w] = true;
                        comp.push(w);
                        queue.push(w);
                    }
                }
            }
            comp.sort_unstable();
            comps.push(comp);
        }
        comps
    }

    pub fn is_connected(&self) -> bool {
        self.n <= 1 || self.components().len() == 1
    }

    /// Induced subgraph on the given vertices (deduplicated, sorted).
    /// Returns the subgraph and the map new id -> old id.
    pub fn induced(&self, verts: &[usize]) -> (Graph, Vec<usize>) {
        let keep: BTreeSet<usize> = verts.iter().copied().collect();
        let old_ids: Vec<usize> = keep.iter().copied().collect();
        let mut new_id = BTreeMap::new();
        for (i, &v) in old_ids.iter().enumerate() {
            new_id.insert(v, i);
        }
        let mut g = Graph::new(old_ids.len());
        for &(u, v) in &self.edges {
            if let (Some(&a), Some(&b)) = (new_id.get(&u), new_id.get(&v)) {
                g.add_edge(a, b).unwrap();
            }
        }
        (g, old_ids)
    }

    /// Relabels vertices: `perm[old] = new` must be a permutation.
    pub fn relabel(&self, perm: &[usize]) -> Graph {
        assert_eq!(perm.len(), self.n);
        let mut g = Graph::new(self.n);
        for (u, v) in self.edges() {
            g.add_edge(perm[u], perm[v]).unwrap();
        }
        g
    }

    pub fn disjoint_union(&self, other: &Graph) -> Graph {
        let mut g = Graph::new(self.n + other.n);
        for (u, v) in self.edges() {
            g.add_edge(u, v).unwrap();
        }
        for (u, v) in other.edges() {
            g.add_edge(u + self.n, v + self.n).unwrap();
        }
        g
    }

    /// Categorical (tensor) product: vertex `(a, x)` gets id `a * h.n + x`,
    /// and `(a, x) ~ (b, y)` iff `a ~ b` and `x ~ y`.
    pub fn categorical_product(&self, h: &Graph) -> Graph {
        let mut g = Graph::new(self.n * h.n);
        for (a, b) in self.edges() {
            for (x, y) in h.edges() {
                g.add_edge(a * h.n + x, b * h.n + y).unwrap();
                g.add_edge(a * h.n + y, b * h.n + x).unwrap();
            }
        }
        g
    }

    /// Girth (length of a shortest cycle), or `None` for forests.
    ///
    /// Exact: for every edge `uv`, a shortest cycle through `uv` has length
    /// `1 + dist(u, v)` in the graph with `uv` removed.
    pub fn girth(&self) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &(u, v) in &self.edges {
            if let Some(d) = self.bfs_dist_avoiding_edge(u, v, (u, v)) {
                let cyc = d + 1;
                if best.map_or(true, |b| cyc < b) {
                    best = Some(cyc);
                }
            }
        }
        best
    }

    /// Length of a shortest cycle through vertex `v`, or `None`.
    pub fn shortest_cycle_through(&self, v: usize) -> Option<usize> {
        let mut best: Option<usize> = None;
        for &u in self.neighbors(v) {
            if let Some(d) = self.bfs_dist_avoiding_edge(v, u, (v, u)) {
                let cyc = d + 1;
                if best.map_or(true, |b| cyc < b) {
                    best = Some(cyc);
                }
            }
        }
        best
    }

    fn bfs_dist_avoiding_edge(
        &self,
        from: usize,
        to: usize,
        forbidden: (usize, usize),
    ) -> Option<usize> {
        let forbidden = edge_key(forbidden.0, forbidden.1);
        let mut dist = vec![usize::MAX; self.n];
        dist[from] = 0;
        let mut queue = std::collections::VecDeque::new();
        queue.push_back(from);
        while let Some(x) = queue.pop_front() {
            if x == to {
                return Some(dist[x]);
            }
            for &y in self.neighbors(x) {
                if edge_key(x, y) == forbidden {
                    continue;
                }
                if dist[y] == usize::MAX {
                    dist[y] = dist[x] + 1;
                    queue.push_back(y);
                }
            }
        }
        None
    }

    /// Vertex connectivity: size of a smallest vertex cut (`n - 1` for
    /// complete graphs, 0 when disconnected or `n <= 1`). Exact via
    /// vertex-capacity max-flow over all non-adjacent pairs.
    pub fn vertex_connectivity(&self) -> usize {
        let n = self.n;
        if n <= 1 {
            return 0;
        }
        if !self.is_connected() {
            return 0;
        }
        if self.m() == n * (n - 1) / 2 {
            return n - 1;
        }
        let mut best = n - 1;
        for s in 0..n {
            for t in s + 1..n {
                if !self.has_edge(s, t) {
                    best = best.min(self.max_vertex_disjoint_paths(s, t));
                }
            }
        }
        best
    }

    /// Number of internally vertex-disjoint s-t paths (Menger), via unit
    /// capacity max-flow on the split digraph.
    fn max_vertex_disjoint_paths(&self, s: usize, t: usize) -> usize {
        // Node v splits into v_in = 2v, v_out = 2v+1, capacity 1 on
        // (v_in -> v_out) except for s and t which have infinite capacity.
        let n = self.n;
        let size = 2 * n;
        let mut cap: BTreeMap<(usize, usize), i64> = BTreeMap::new();
        for v in 0..n {
            let c = if v == s || v == t { i64::MAX / 4 } else { 1 };
            cap.insert((2 * v, 2 * v + 1), c);
        }
        for &(u, v) in &self.edges {
            cap.insert((2 * u + 1, 2 * v), 1);
            cap.insert((2 * v + 1, 2 * u), 1);
        }
        let mut adj: Vec<Vec<usize>> = vec![Vec::new(); size];
        for &(a, b) in cap.keys() {
            adj[a].push(b);
            adj[b].push(a);
        }
        for l in adj.iter_mut() {
            l.sort_unstable();
            l.dedup();
        }
        let (src, dst) = (2 * s + 1, 2 * t);
        let mut flow = 0usize;
        loop {
            // BFS augmenting path on residual capacities.
            let mut prev = vec![usize::MAX; size];
            prev[src] = src;
            let mut queue = std::collections::VecDeque::new();
            queue.push_back(src);
            while let Some(x) = queue.pop_front() {
                if x == dst {
                    break;
                }
                for &y in &adj[x] {
                    if prev[y] == usize::MAX && *cap.get(&(x, y)).unwrap_or(&0) > 0 {
                        prev[y] = x;
                        queue.push_back(y);
                    }
                }
            }
            if prev[dst] == usize::MAX {
                break;
            }
            let mut y = dst;
            while y != src {
                let x = prev[y];
                *cap.entry((x, y)).or_insert(0) -= 1;
                *cap.entry((y, x)).or_insert(0) += 1;
                y = x;
            }
            flow += 1;
        }
        flow
    }
}

/// Degree/girth/planarity/connectivity summary of a graph.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct StructuralStats {
    pub min_degree: usize,
    /// `None` encodes infinite girth (forest).
    pub girth: Option<usize>,
    pub is_planar: bool,
    pub vertex_connectivity: usize,
}

pub fn structural_stats(g: &Graph) -> StructuralStats {
    StructuralStats {
        min_degree: g.min_degree(),
        girth: g.girth(),
        is_planar: crate::planar::is_planar(g),
        vertex_connectivity: g.vertex_connectivity(),
    }
}

/// A graph with a tuple of labelled vertices (`labels[i]` is the vertex
/// carrying label position `i`; repetitions allowed).
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct LabelledGraph {
    pub graph: Graph,
    pub labels: Vec<usize>,
}

impl LabelledGraph {
    pub fn new(graph: Graph, labels: Vec<usize>) -> Result<Self, GraphError> {
        for &v in &labels {
            if v >= graph.n() {
                return Err(GraphError::LabelOutOfRange { v, n: graph.n() });
            }
        }
        Ok(LabelledGraph { graph, labels })
    }

    pub fn arity(&self) -> usize {
        self.labels.len()
    }

    /// The set of distinct labelled vertices.
    pub fn label_set(&self) -> BTreeSet<usize> {
        self.labels.iter().copied().collect()
    }
}

/// A graph together with a total order on its vertices (a permutation:
/// `order[i]` is the i-th vertex).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrderedGraph {
    pub graph: Graph,
    pub order: Vec<usize>,
}

impl OrderedGraph {
    pub fn new(graph: Graph, order: Vec<usize>) -> Result<Self, GraphError> {
        let mut seen = vec![false; graph.n()];
        if order.len() != graph.n() {
            return Err(GraphError::BadOrder);
        }
        for &v in &order {
            if v >= graph.n() || seen[v] {
                return Err(GraphError::BadOrder);
            }
            seen[v] = true;
        }
        Ok(OrderedGraph { graph, order })
    }

    /// Vertex-id order, the default used when no explicit order is given.
    pub fn by_id(graph: Graph) -> Self {
        let order = (0..graph.n()).collect();
        OrderedGraph { graph, order }
    }

    /// Rank of vertex `v` in the order.
    pub fn rank(&self, v: usize) -> usize {
        self.order.iter().position(|&x| x == v).unwrap()
    }
}

/// Glues two labelled graphs: disjoint union, then identify the label-`i`
/// vertices of both sides for every position `i`.
///
/// Identification can merge two adjacent vertices (when labels repeat on one
/// side), which would create a self-loop; since loops admit no homomorphism
/// into any simple graph such a product is the zero element of the hom
/// algebra, and `None` is returned for it.
pub fn glue(f: &LabelledGraph, k: &LabelledGraph) -> Result<Option<LabelledGraph>, GraphError> {
    glue_with_maps(f, k).map(|o| o.map(|(g, _, _)| g))
}

/// Like [`glue`], additionally returning the vertex maps from each operand
/// into the result.
pub fn glue_with_maps(
    f: &LabelledGraph,
    k: &LabelledGraph,
) -> Result<Option<(LabelledGraph, Vec<usize>, Vec<usize>)>, GraphError> {
    if f.arity() != k.arity() {
        return Err(GraphError::ArityMismatch {
            left: f.arity(),
            right: k.arity(),
        });
    }
    let nf = f.graph.n();
    let nk = k.graph.n();
    // Union-find over the disjoint union 0..nf+nk.
    let mut parent: Vec<usize> = (0..nf + nk).collect();
    fn find(parent: &mut Vec<usize>, mut x: usize) -> usize {
        while parent[x] != x {
            parent[x] = parent[parent[x]];
            x = parent[x];
        }
        x
    }
    for i in 0..f.arity() {
        let a = find(&mut parent, f.labels[i]);
        let b = find(&mut parent, nf + k.labels[i]);
        if a != b {
            let (lo, hi) = if a < b { (a, b) } else { (b, a) };
            parent[hi] = lo;
        }
    }
    // Dense renumbering of classes by smallest member.
    let mut reps: Vec<usize> = (0..nf + nk).map(|x| find(&mut parent, x)).collect();
    let mut rep_ids: BTreeMap<usize, usize> = BTreeMap::new();
    for &r in reps.iter() {
        let next = rep_ids.len();
        rep_ids.entry(r).or_insert(next);
    }
    reps = reps.into_iter().map(|r| rep_ids[&r]).collect();
    let n = rep_ids.len();
    let mut g = Graph::new(n);
    for (u, v) in f.graph.edges() {
        let (a, b) = (reps[u], reps[v]);
        if a == b {
            return Ok(None); // identification created a loop
        }
        g.add_edge(a, b).unwrap();
    }
    for (u, v) in k.graph.edges() {
        let (a, b) = (reps[nf + u], reps[nf + v]);
        if a == b {
            return Ok(None);
        }
        g.add_edge(a, b).unwrap();
    }
    let labels: Vec<usize> = f.labels.iter().map(|&v| reps[v]).collect();
    let map_f = reps[..nf].to_vec();
    let map_k = reps[nf..].to_vec();
    Ok(Some((LabelledGraph { graph: g, labels }, map_f, map_k)))
}

// ----- serialization -----

/// JSON document shared by all graph flavours:
/// `{"n": int, "edges": [[u,v],...], "labels": [ids]?, "order": [ids]?}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct GraphDoc {
    pub n: usize,
    pub edges: Vec<(usize, usize)>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub labels: Option<Vec<usize>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub order: Option<Vec<usize>>,
}

impl GraphDoc {
    pub fn from_graph(g: &Graph) -> Self {
        GraphDoc {
            n: g.n(),
            edges: g.edges().collect(),
            labels: None,
            order: None,
        }
    }

    pub fn from_labelled(f: &LabelledGraph) -> Self {
        let mut d = Self::from_graph(&f.graph);
        d.labels = Some(f.labels.clone());
        d
    }

    pub fn from_ordered(o: &OrderedGraph) -> Self {
        let mut d = Self::from_graph(&o.graph);
        d.order = Some(o.order.clone());
        d
    }

    pub fn to_graph(&self) -> Result<Graph, GraphError> {
        Graph::from_edges(self.n, self.edges.iter().copied())
    }

    pub fn to_labelled(&self) -> Result<LabelledGraph, GraphError> {
        let g = self.to_graph()?;
        let labels = self.labels.clone().unwrap_or_default();
        LabelledGraph::new(g, labels)
    }

    pub fn to_ordered(&self) -> Result<OrderedGraph, GraphError> {
        let g = self.to_graph()?;
        match &self.order {
            Some(order) => OrderedGraph::new(g, order.clone()),
            None => Ok(OrderedGraph::by_id(g)),
        }
    }
}

pub fn read_graph_json(text: &str) -> Result<GraphDoc, GraphError> {
    serde_json::from_str(text).map_err(|e| GraphError::Json(e.to_string()))
}

pub fn write_graph_json(doc: &GraphDoc) -> String {
    serde_json::to_string_pretty(doc).expect("graph doc serializes")
}

/// Reads the plain edge-list format: first line is the vertex count, each
/// following non-empty line is `u v` with `u < v`. Returns warnings for
/// duplicate edges; loops and malformed lines are hard errors with their
/// line number.
pub fn read_edge_list(text: &str) -> Result<(Graph, Vec<String>), GraphError> {
    let mut warnings = Vec::new();
    let mut lines = text.lines().enumerate();
    let (mut n, mut g) = (0usize, None);
    for (idx, raw) in &mut lines {
        let line = idx + 1;
        let s = raw.trim();
        if s.is_empty() || s.starts_with('#') {
            continue;
        }
        if g.is_none() {
            n = s.parse().map_err(|_| GraphError::Parse {
                line,
                msg: format!("expected vertex count, got {s:?}"),
            })?;
            g = Some(Graph::new(n));
            continue;
        }
        let mut it = s.split_whitespace();
        let parse = |tok: Option<&str>, line: usize| -> Result<usize, GraphError> {
            tok.ok_or(GraphError::Parse {
                line,
                msg: "expected two endpoints".into(),
            })?
            .parse()
            .map_err(|_| GraphError::Parse {
                line,
                msg: "endpoints must be nonnegative integers".into(),
            })
        };
        let u = parse(it.next(), line)?;
        let v = parse(it.next(), line)?;
        if it.next().is_some() {
            return Err(GraphError::Parse {
                line,
                msg: "trailing tokens after edge".into(),
            });
        }
        if u >= v {
            return Err(GraphError::Parse {
                line,
                msg: format!("edge must satisfy u < v, got {u} {v}"),
            });
        }
        let graph = g.as_mut().unwrap();
        match graph.add_edge(u, v) {
            Ok(true) => {}
            Ok(false) => warnings.push(format!("line {line}: duplicate edge {u} {v}")),
            Err(GraphError::SelfLoop { v }) => {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("self-loop at {v}"),
                })
            }
            Err(GraphError::VertexOutOfRange { v, n }) => {
                return Err(GraphError::Parse {
                    line,
                    msg: format!("vertex {v} out of range (n = {n})"),
                })
            }
            Err(e) => return Err(e),
        }
    }
    match g {
        Some(g) => Ok((g, warnings)),
        None => Err(GraphError::Parse {
            line: 0,
            msg: "empty input".into(),
        }),
    }
}

pub fn write_edge_list(g: &Graph) -> String {
    let mut out = format!("{}\n", g.n());
    for (u, v) in g.edges() {
        out.push_str(&format!("{u} {v}\n"));
    }
    out
}

/// Named base-graph presets accepted by the command line (`k3`, `p4`, `c5`,
/// `s3`, ...).
pub fn preset(name: &str) -> Option<Graph> {
    let (kind, num) = name.split_at(1);
    let num: usize = num.parse().ok()?;
    match kind {
        "k" => Some(Graph::complete(num)),
        "p" if num >= 1 => Some(Graph::path(num)),
        "c" if num >= 3 => Some(Graph::cycle(num)),
        "s" if num >= 1 => Some(Graph::star(num)),
        "e" => Some(Graph::coclique(num)),
        _ => None,
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn product_of_two_edges_is_two_disjoint_edges() {
        let k2 = Graph::complete(2);
        let p = k2.categorical_product(&k2);
        assert_eq!(p.n(), 4);
        let edges: Vec<_> = p.edges().collect();
        assert_eq!(edges, vec![(0, 3), (1, 2)]);
    }

    #[test]
    fn product_with_k1_is_edgeless() {
        let g = Graph::complete(4).categorical_product(&Graph::complete(1));
        assert_eq!(g.n(), 4);
        assert_eq!(g.m(), 0);
    }

    #[test]
    fn glue_identifies_label_vertices() {
        // Two single-edge graphs glued on the same label pair: still one edge.
        let e = LabelledGraph::new(Graph::complete(2), vec![0, 1]).unwrap();
        let glued = glue(&e, &e).unwrap().unwrap();
        assert_eq!(glued.graph.n(), 2);
        assert_eq!(glued.graph.m(), 1);
        assert_eq!(glued.labels, vec![0, 1]);
    }

    #[test]
    fn glue_collapsing_an_edge_is_degenerate() {
        // Identifying both endpoints of an edge with a single repeated-label
        // vertex creates a loop, i.e. the zero element.
        let edge = LabelledGraph::new(Graph::complete(2), vec![0, 1]).unwrap();
        let point = LabelledGraph::new(Graph::new(1), vec![0, 0]).unwrap();
        assert!(glue(&edge, &point).unwrap().is_none());
    }

    #[test]
    fn glue_unit_is_identity_up_to_structure() {
        let unit = LabelledGraph::new(Graph::new(2), vec![0, 1]).unwrap();
        let x = LabelledGraph::new(Graph::path(3), vec![0, 2]).unwrap();
        let glued = glue(&unit, &x).unwrap().unwrap();
        assert_eq!(glued.graph, x.graph);
        assert_eq!(glued.labels, x.labels);
    }

    #[test]
    fn girth_of_common_graphs() {
        assert_eq!(Graph::complete(4).girth(), Some(3));
        assert_eq!(Graph::cycle(5).girth(), Some(5));
        assert_eq!(Graph::path(6).girth(), None);
        assert_eq!(Graph::star(4).girth(), None);
    }

    #[test]
    fn connectivity_of_common_graphs() {
        assert_eq!(Graph::complete(5).vertex_connectivity(), 4);
        assert_eq!(Graph::cycle(6).vertex_connectivity(), 2);
        assert_eq!(Graph::path(5).vertex_connectivity(), 1);
        assert_eq!(Graph::coclique(3).vertex_connectivity(), 0);
        let mut two_tri = Graph::new(5);
        // Two triangles sharing vertex 2: cut vertex.
        for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)] {
            two_tri.add_edge(u, v).unwrap();
        }
        assert_eq!(two_tri.vertex_connectivity(), 1);
    }

    #[test]
    fn edge_list_round_trip_and_errors() {
        let g = Graph::cycle(4);
        let text = write_edge_list(&g);
        let (back, warnings) = read_edge_list(&text).unwrap();
        assert_eq!(back, g);
        assert!(warnings.is_empty());

        let dup = "3\n0 1\n0 1\n";
        let (_, warnings) = read_edge_list(dup).unwrap();
        assert_eq!(warnings.len(), 1);

        let loopy = "3\n1 1\n";
        match read_edge_list(loopy) {
            Err(GraphError::Parse { line, .. }) => assert_eq!(line, 2),
            other => panic!("expected parse error, got {other:?}"),
        }
    }

    #[test]
    fn json_round_trip() {
        let f = LabelledGraph::new(Graph::path(3), vec![0, 2]).unwrap();
        let doc = GraphDoc::from_labelled(&f);
        let text = write_graph_json(&doc);
        let back = read_graph_json(&text).unwrap().to_labelled().unwrap();
        assert_eq!(back, f);
    }

    #[test]
    fn stats_match_known_values() {
        let s = structural_stats(&Graph::complete(4));
        assert_eq!(
            s,
            StructuralStats {
                min_degree: 3,
                girth: Some(3),
                is_planar: true,
                vertex_connectivity: 3
            }
        );
        let s5 = structural_stats(&Graph::complete(5));
        assert!(!s5.is_planar);
        assert_eq!(s5.vertex_connectivity, 4);
    }
}
