//! Finite simple graphs and the counting machinery of planar combinatorial rigidity.
//!
//! A [`Graph`] keeps its vertex ids sorted and its adjacency indexed by position,
//! so algorithms work on dense indices while the public surface speaks in
//! [`VertexId`]s.

use std::collections::BTreeSet;
use std::fmt;

use serde::de::Error as _;
use serde::{Deserialize, Deserializer, Serialize, Serializer};

use crate::error::GraphError;

pub type VertexId = u32;

/// An undirected edge, always stored with `u < v`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Edge {
    u: VertexId,
    v: VertexId,
}

impl Edge {
    /// Builds the normalized edge; `None` for a loop.
    pub fn new(a: VertexId, b: VertexId) -> Option<Self> {
        match a.cmp(&b) {
            std::cmp::Ordering::Less => Some(Edge { u: a, v: b }),
            std::cmp::Ordering::Greater => Some(Edge { u: b, v: a }),
            std::cmp::Ordering::Equal => None,
        }
    }

    pub fn u(self) -> VertexId {
        self.u
    }

    pub fn v(self) -> VertexId {
        self.v
    }

    pub fn endpoints(self) -> (VertexId, VertexId) {
        (self.u, self.v)
    }

    pub fn contains(self, x: VertexId) -> bool {
        self.u == x || self.v == x
    }
}

impl fmt::Display for Edge {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{})", self.u, self.v)
    }
}

impl Serialize for Edge {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        [self.u, self.v].serialize(s)
    }
}

impl<'de> Deserialize<'de> for Edge {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let [a, b] = <[VertexId; 2]>::deserialize(d)?;
        Edge::new(a, b).ok_or_else(|| D::Error::custom(format!("self-loop at vertex {a}")))
    }
}

/// `2v - e - 3` for the (sub)graph it was computed from.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct FreedomNumber(pub i64);

impl FreedomNumber {
    pub fn from_counts(vertices: usize, edges: usize) -> Self {
        FreedomNumber(2 * vertices as i64 - edges as i64 - 3)
    }

    pub fn value(self) -> i64 {
        self.0
    }
}

impl fmt::Display for FreedomNumber {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        self.0.fmt(f)
    }
}

/// A finite simple undirected graph.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Graph {
    vertices: Vec<VertexId>,
    adjacency: Vec<Vec<usize>>,
    edges: Vec<Edge>,
}

impl fmt::Debug for Graph {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Graph")
            .field("vertices", &self.vertices)
            .field("edges", &self.edges)
            .finish()
    }
}

#[derive(Serialize, Deserialize)]
struct GraphRepr {
    vertices: Vec<VertexId>,
    edges: Vec<[VertexId; 2]>,
}

impl Serialize for Graph {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        GraphRepr {
            vertices: self.vertices.clone(),
            edges: self.edges.iter().map(|e| [e.u, e.v]).collect(),
        }
        .serialize(s)
    }
}

impl<'de> Deserialize<'de> for Graph {
    fn deserialize<D: Deserializer<'de>>(d: D) -> Result<Self, D::Error> {
        let repr = GraphRepr::deserialize(d)?;
        Graph::from_pairs(repr.vertices, repr.edges.iter().map(|&[a, b]| (a, b)))
            .map_err(D::Error::custom)
    }
}

impl Graph {
    /// Builds a graph, rejecting loops, parallel edges, duplicate vertices and
    /// edges with unknown endpoints. The vertex set must be nonempty.
    pub fn new(vertices: Vec<VertexId>, edges: Vec<Edge>) -> Result<Self, GraphError> {
        if vertices.is_empty() {
            return Err(GraphError::Empty);
        }
        let mut sorted = vertices;
        sorted.sort_unstable();
        if let Some(w) = sorted.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::DuplicateVertex(w[0]));
        }
        let mut edges = edges;
        edges.sort_unstable();
        if let Some(w) = edges.windows(2).find(|w| w[0] == w[1]) {
            return Err(GraphError::ParallelEdge(w[0]));
        }
        let mut adjacency = vec![Vec::new(); sorted.len()];
        for e in &edges {
            let iu = sorted
                .binary_search(&e.u)
                .map_err(|_| GraphError::UnknownVertex(e.u))?;
            let iv = sorted
                .binary_search(&e.v)
                .map_err(|_| GraphError::UnknownVertex(e.v))?;
            adjacency[iu].push(iv);
            adjacency[iv].push(iu);
        }
        for list in &mut adjacency {
            list.sort_unstable();
        }
        Ok(Graph {
            vertices: sorted,
            adjacency,
            edges,
        })
    }

    /// Builds a graph from raw vertex pairs.
    pub fn from_pairs(
        vertices: Vec<VertexId>,
        pairs: impl IntoIterator<Item = (VertexId, VertexId)>,
    ) -> Result<Self, GraphError> {
        let edges = pairs
            .into_iter()
            .map(|(a, b)| Edge::new(a, b).ok_or(GraphError::Loop(a)))
            .collect::<Result<Vec<_>, _>>()?;
        Graph::new(vertices, edges)
    }

    /// Builds a graph on the vertices `0..n`.
    pub fn from_edge_list(n: usize, pairs: &[(VertexId, VertexId)]) -> Result<Self, GraphError> {
        Graph::from_pairs((0..n as VertexId).collect(), pairs.iter().copied())
    }

    /// Parses the graph JSON format and enforces `|V| >= 2`.
    pub fn from_json(text: &str) -> Result<Self, GraphError> {
        let g: Graph = serde_json::from_str(text)?;
        if g.order() < 2 {
            return Err(GraphError::TooSmall(g.order()));
        }
        Ok(g)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(self).expect("graph serialization is infallible")
    }

    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    pub fn size(&self) -> usize {
        self.edges.len()
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn edges(&self) -> &[Edge] {
        &self.edges
    }

    pub fn index_of(&self, v: VertexId) -> Option<usize> {
        self.vertices.binary_search(&v).ok()
    }

    pub fn vertex_at(&self, i: usize) -> VertexId {
        self.vertices[i]
    }

    pub fn contains_vertex(&self, v: VertexId) -> bool {
        self.index_of(v).is_some()
    }

    pub fn has_edge(&self, e: Edge) -> bool {
        self.edges.binary_search(&e).is_ok()
    }

    pub fn adjacent(&self, a: VertexId, b: VertexId) -> bool {
        Edge::new(a, b).is_some_and(|e| self.has_edge(e))
    }

    /// Neighbor indices of the vertex at index `i`, sorted.
    pub fn neighbor_indices(&self, i: usize) -> &[usize] {
        &self.adjacency[i]
    }

    pub fn neighbors(&self, v: VertexId) -> Result<Vec<VertexId>, GraphError> {
        let i = self.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.adjacency[i].iter().map(|&j| self.vertices[j]).collect())
    }

    pub fn degree(&self, v: VertexId) -> Result<usize, GraphError> {
        let i = self.index_of(v).ok_or(GraphError::UnknownVertex(v))?;
        Ok(self.adjacency[i].len())
    }

    pub fn min_degree(&self) -> usize {
        self.adjacency.iter().map(Vec::len).min().unwrap_or(0)
    }

    pub(crate) fn edge_indices(&self) -> impl Iterator<Item = (usize, usize)> + '_ {
        self.edges.iter().map(move |e| {
            (
                self.index_of(e.u).expect("edge endpoint"),
                self.index_of(e.v).expect("edge endpoint"),
            )
        })
    }

    fn require_edge(&self, e: Edge) -> Result<(), GraphError> {
        if self.has_edge(e) {
            Ok(())
        } else {
            Err(GraphError::EdgeNotFound(e))
        }
    }

    /// Adjacency as bitmasks over vertex indices; only for graphs with at most 64 vertices.
    pub fn adjacency_masks(&self) -> Vec<u64> {
        assert!(self.order() <= 64, "bitmask view limited to 64 vertices");
        self.adjacency
            .iter()
            .map(|list| list.iter().fold(0u64, |m, &j| m | (1 << j)))
            .collect()
    }

    pub fn freedom(&self) -> FreedomNumber {
        FreedomNumber::from_counts(self.order(), self.size())
    }

    /// Every subgraph on at least two vertices satisfies `e <= 2v - 3`.
    ///
    /// Decided with the (2,3)-pebble game in `O(v e)`.
    pub fn is_independent(&self) -> bool {
        let mut game = PebbleGame::new(self.order());
        self.edge_indices().all(|(a, b)| game.insert(a, b))
    }

    pub fn is_maximally_independent(&self) -> bool {
        self.freedom().value() == 0 && self.is_independent()
    }

    /// Apexes `z` of the 3-cycles `(u, v, z)` through `e`, sorted.
    pub fn triangles_through(&self, e: Edge) -> Result<Vec<VertexId>, GraphError> {
        self.require_edge(e)?;
        let a = &self.adjacency[self.index_of(e.u).expect("checked")];
        let b = &self.adjacency[self.index_of(e.v).expect("checked")];
        let (mut i, mut j, mut out) = (0, 0, Vec::new());
        while i < a.len() && j < b.len() {
            match a[i].cmp(&b[j]) {
                std::cmp::Ordering::Less => i += 1,
                std::cmp::Ordering::Greater => j += 1,
                std::cmp::Ordering::Equal => {
                    out.push(self.vertices[a[i]]);
                    i += 1;
                    j += 1;
                }
            }
        }
        Ok(out)
    }

    /// `G/e`: merges the endpoints of `e` into the lower id and drops the
    /// resulting parallel edges.
    pub fn contract_edge(&self, e: Edge) -> Result<Graph, GraphError> {
        self.require_edge(e)?;
        let (keep, gone) = e.endpoints();
        let vertices = self.vertices.iter().copied().filter(|&v| v != gone).collect();
        let edges: BTreeSet<Edge> = self
            .edges
            .iter()
            .filter_map(|f| {
                let map = |x: VertexId| if x == gone { keep } else { x };
                Edge::new(map(f.u), map(f.v))
            })
            .collect();
        Graph::new(vertices, edges.into_iter().collect())
    }

    /// The subgraph induced by `vs`.
    pub fn induced_subgraph(&self, vs: &[VertexId]) -> Result<Graph, GraphError> {
        let mut set: Vec<VertexId> = vs.to_vec();
        set.sort_unstable();
        set.dedup();
        if let Some(&bad) = set.iter().find(|&&v| !self.contains_vertex(v)) {
            return Err(GraphError::UnknownVertex(bad));
        }
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| set.binary_search(&e.u).is_ok() && set.binary_search(&e.v).is_ok())
            .collect();
        Graph::new(set, edges)
    }

    /// The graph with `vs` and their incident edges removed.
    pub fn remove_vertices(&self, vs: &[VertexId]) -> Result<Graph, GraphError> {
        let keep: Vec<VertexId> = self
            .vertices
            .iter()
            .copied()
            .filter(|v| !vs.contains(v))
            .collect();
        self.induced_subgraph(&keep)
    }

    /// Vertices of `vs` that have a neighbor outside `vs`.
    pub fn attachment_vertices(&self, vs: &[VertexId]) -> Result<Vec<VertexId>, GraphError> {
        let mut inside = vec![false; self.order()];
        for &v in vs {
            inside[self.index_of(v).ok_or(GraphError::UnknownVertex(v))?] = true;
        }
        let mut out: Vec<VertexId> = (0..self.order())
            .filter(|&i| inside[i] && self.adjacency[i].iter().any(|&j| !inside[j]))
            .map(|i| self.vertices[i])
            .collect();
        out.dedup();
        Ok(out)
    }

    /// Returns a graph with `extra` edges added (existing ones are kept once).
    pub fn with_edges(&self, extra: &[Edge]) -> Result<Graph, GraphError> {
        let mut edges: BTreeSet<Edge> = self.edges.iter().copied().collect();
        edges.extend(extra.iter().copied());
        Graph::new(self.vertices.clone(), edges.into_iter().collect())
    }

    /// Returns a graph without the listed edges.
    pub fn without_edges(&self, removed: &[Edge]) -> Result<Graph, GraphError> {
        let edges = self
            .edges
            .iter()
            .copied()
            .filter(|e| !removed.contains(e))
            .collect();
        Graph::new(self.vertices.clone(), edges)
    }

    /// Disjoint union with a fresh copy of vertices; used by graph builders.
    pub fn with_vertices(&self, extra: &[VertexId], extra_edges: &[Edge]) -> Result<Graph, GraphError> {
        let mut vertices = self.vertices.clone();
        vertices.extend_from_slice(extra);
        let mut edges = self.edges.clone();
        edges.extend_from_slice(extra_edges);
        Graph::new(vertices, edges)
    }

    /// Relabels vertices to `0..n` in sorted order.
    pub fn relabeled(&self) -> Graph {
        let vertices = (0..self.order() as VertexId).collect();
        let edges = self
            .edge_indices()
            .map(|(a, b)| Edge::new(a as VertexId, b as VertexId).expect("simple"))
            .collect();
        Graph::new(vertices, edges).expect("relabeling preserves simplicity")
    }
}

/// A vertex subset of a parent graph, with either its induced edges or an
/// explicit edge subset.
#[derive(Clone, Debug)]
pub struct SubgraphHandle<'g> {
    parent: &'g Graph,
    vertices: Vec<VertexId>,
    edges: Vec<Edge>,
    induced: bool,
}

impl<'g> SubgraphHandle<'g> {
    pub fn induced(parent: &'g Graph, vs: &[VertexId]) -> Result<Self, GraphError> {
        let sub = parent.induced_subgraph(vs)?;
        Ok(SubgraphHandle {
            parent,
            vertices: sub.vertices,
            edges: sub.edges,
            induced: true,
        })
    }

    /// The subgraph spanned by an explicit edge set; its vertex set is the set of endpoints.
    pub fn spanned_by(parent: &'g Graph, edges: &[Edge]) -> Result<Self, GraphError> {
        for &e in edges {
            parent.require_edge(e)?;
        }
        let mut edges = edges.to_vec();
        edges.sort_unstable();
        edges.dedup();
        let vertices: Vec<VertexId> = edges
            .iter()
            .flat_map(|e| [e.u, e.v])
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        let induced = parent.induced_subgraph(&vertices)?.edges == edges;
        Ok(SubgraphHandle {
            parent,
            vertices,
            edges,
            induced,
        })
    }

    pub fn parent(&self) -> &'g Graph {
        self.parent
    }

    pub fn vertices(&self) -> &[VertexId] {
        &self.vertices
    }

    pub fn is_induced(&self) -> bool {
        self.induced
    }

    pub fn to_graph(&self) -> Graph {
        Graph::new(self.vertices.clone(), self.edges.clone()).expect("subgraph of a valid graph")
    }

    pub fn freedom(&self) -> FreedomNumber {
        FreedomNumber::from_counts(self.vertices.len(), self.edges.len())
    }
}

/// Vertices of `h` with a neighbor in the parent graph outside `h`.
pub fn attachment_vertices(g: &Graph, h: &SubgraphHandle<'_>) -> Vec<VertexId> {
    g.attachment_vertices(h.vertices())
        .expect("handle vertices belong to the parent")
}

/// Incremental (2,3)-pebble game.
///
/// Each vertex starts with two pebbles. An edge is accepted iff four pebbles
/// can be gathered on its endpoints; accepted edges are oriented away from the
/// vertex whose pebble covers them.
#[derive(Clone, Debug)]
pub struct PebbleGame {
    pebbles: Vec<u8>,
    out: Vec<Vec<usize>>,
    seen: Vec<bool>,
    parent: Vec<usize>,
}

impl PebbleGame {
    pub fn new(n: usize) -> Self {
        PebbleGame {
            pebbles: vec![2; n],
            out: vec![Vec::new(); n],
            seen: vec![false; n],
            parent: vec![usize::MAX; n],
        }
    }

    /// Tries to add the edge `(a, b)`; returns whether it is independent of the
    /// edges accepted so far.
    pub fn insert(&mut self, a: usize, b: usize) -> bool {
        while self.pebbles[a] < 2 && self.collect(a, a, b) {}
        while self.pebbles[b] < 2 && self.collect(b, a, b) {}
        if self.pebbles[a] + self.pebbles[b] < 4 {
            return false;
        }
        self.pebbles[a] -= 1;
        self.out[a].push(b);
        true
    }

    /// Number of free pebbles left, i.e. `2v - (accepted edges)`.
    pub fn free_pebbles(&self) -> usize {
        self.pebbles.iter().map(|&p| p as usize).sum()
    }

    // DFS along oriented edges from `root` for a free pebble, never taking one
    // from the pinned endpoints `a`, `b`; reverses the path on success.
    fn collect(&mut self, root: usize, a: usize, b: usize) -> bool {
        self.seen.iter_mut().for_each(|s| *s = false);
        self.seen[a] = true;
        self.seen[b] = true;
        let mut stack = vec![root];
        let mut found = None;
        'search: while let Some(x) = stack.pop() {
            for k in 0..self.out[x].len() {
                let y = self.out[x][k];
                if self.seen[y] {
                    continue;
                }
                self.seen[y] = true;
                self.parent[y] = x;
                if self.pebbles[y] > 0 {
                    found = Some(y);
                    break 'search;
                }
                stack.push(y);
            }
        }
        let Some(mut y) = found else {
            return false;
        };
        self.pebbles[y] -= 1;
        while y != root {
            let x = self.parent[y];
            let pos = self.out[x].iter().position(|&t| t == y).expect("path edge");
            self.out[x].swap_remove(pos);
            self.out[y].push(x);
            y = x;
        }
        self.pebbles[root] += 1;
        true
    }
}
