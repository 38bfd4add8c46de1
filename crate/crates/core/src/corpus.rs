//! Bundled fixtures and exhaustive small-graph generators.
//!
//! Isomorphism classes are identified by a canonical adjacency code computed
//! with colour refinement and individualisation. Graphs here have at most
//! eleven vertices so the code fits in a `u64`.

use std::collections::HashSet;

use crate::graph::{Graph, VertexId};

pub const MAX_CORPUS_ORDER: usize = 11;

pub fn fixture(name: &str) -> Option<Graph> {
    let text = match name {
        "doublet" => include_str!("../fixtures/doublet.json"),
        "k33" => include_str!("../fixtures/k33.json"),
        "square" => include_str!("../fixtures/square.json"),
        "triangle" => include_str!("../fixtures/triangle.json"),
        "fig3" => include_str!("../fixtures/fig3.json"),
        "limpet" => include_str!("../fixtures/fig5-limpet.json"),
        _ => return None,
    };
    Some(Graph::from_json(text).expect("bundled fixture parses"))
}

pub const FIXTURE_NAMES: [&str; 6] = ["doublet", "k33", "square", "triangle", "fig3", "limpet"];

/// Compact adjacency for graphs on vertices `0..n`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct SmallGraph {
    pub n: usize,
    pub adj: Vec<u16>,
}

impl SmallGraph {
    pub fn empty(n: usize) -> Self {
        assert!(n <= MAX_CORPUS_ORDER, "corpus graphs have at most {MAX_CORPUS_ORDER} vertices");
        SmallGraph { n, adj: vec![0; n] }
    }

    pub fn from_graph(g: &Graph) -> Self {
        let mut s = SmallGraph::empty(g.order());
        for e in g.edges() {
            let (a, b) = e.endpoints();
            s.add_edge(g.index_of(a).expect("endpoint"), g.index_of(b).expect("endpoint"));
        }
        s
    }

    pub fn has_edge(&self, a: usize, b: usize) -> bool {
        self.adj[a] >> b & 1 == 1
    }

    pub fn add_edge(&mut self, a: usize, b: usize) {
        self.adj[a] |= 1 << b;
        self.adj[b] |= 1 << a;
    }

    pub fn remove_edge(&mut self, a: usize, b: usize) {
        self.adj[a] &= !(1 << b);
        self.adj[b] &= !(1 << a);
    }

    pub fn add_vertex(&mut self) -> usize {
        assert!(self.n < MAX_CORPUS_ORDER);
        self.adj.push(0);
        self.n += 1;
        self.n - 1
    }

    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::new();
        for a in 0..self.n {
            for b in a + 1..self.n {
                if self.has_edge(a, b) {
                    out.push((a, b));
                }
            }
        }
        out
    }

    pub fn size(&self) -> usize {
        self.adj.iter().map(|m| m.count_ones() as usize).sum::<usize>() / 2
    }

    /// Vertices are numbered `0..n`.
    pub fn to_graph(&self) -> Graph {
        let pairs: Vec<(VertexId, VertexId)> =
            self.edges().into_iter().map(|(a, b)| (a as VertexId, b as VertexId)).collect();
        Graph::from_edge_list(self.n, &pairs).expect("corpus graph is simple")
    }

    pub fn is_connected(&self) -> bool {
        if self.n == 0 {
            return true;
        }
        let full = (1u32 << self.n) - 1;
        let mut seen = 1u32;
        let mut frontier = 1u32;
        while frontier != 0 {
            let mut next = 0u32;
            for v in 0..self.n {
                if frontier >> v & 1 == 1 {
                    next |= self.adj[v] as u32;
                }
            }
            frontier = next & !seen;
            seen |= next;
        }
        seen == full
    }

    pub fn canonical_code(&self) -> u64 {
        canonical_code(&self.adj)
    }

    /// Rebuilds the graph in canonical vertex order.
    pub fn canonical(&self) -> SmallGraph {
        let order = canonical_order(&self.adj);
        let mut pos = vec![0; self.n];
        for (p, &v) in order.iter().enumerate() {
            pos[v] = p;
        }
        let mut out = SmallGraph::empty(self.n);
        for (a, b) in self.edges() {
            out.add_edge(pos[a], pos[b]);
        }
        out
    }
}

type Partition = Vec<Vec<usize>>;

fn refine(adj: &[u16], mut cells: Partition) -> Partition {
    loop {
        let masks: Vec<u16> = cells.iter().map(|c| c.iter().fold(0, |m, &v| m | 1 << v)).collect();
        let mut changed = false;
        let mut next: Partition = Vec::with_capacity(cells.len());
        for cell in &cells {
            if cell.len() == 1 {
                next.push(cell.clone());
                continue;
            }
            let mut keyed: Vec<(Vec<u32>, usize)> = cell
                .iter()
                .map(|&v| (masks.iter().map(|m| (adj[v] & m).count_ones()).collect(), v))
                .collect();
            keyed.sort();
            let before = next.len();
            for (i, (key, v)) in keyed.iter().enumerate() {
                if i == 0 || *key != keyed[i - 1].0 {
                    next.push(Vec::new());
                }
                next.last_mut().expect("pushed").push(*v);
            }
            changed |= next.len() - before > 1;
        }
        cells = next;
        if !changed {
            return cells;
        }
    }
}

fn code_of(adj: &[u16], order: &[usize]) -> u64 {
    let n = order.len();
    let mut code = 0u64;
    for i in 0..n {
        for j in i + 1..n {
            code <<= 1;
            if adj[order[i]] >> order[j] & 1 == 1 {
                code |= 1;
            }
        }
    }
    code
}

fn search(adj: &[u16], cells: Partition, best: &mut Option<(u64, Vec<usize>)>) {
    let cells = refine(adj, cells);
    let Some(target) = cells
        .iter()
        .enumerate()
        .filter(|(_, c)| c.len() > 1)
        .min_by_key(|(i, c)| (c.len(), *i))
        .map(|(i, _)| i)
    else {
        let order: Vec<usize> = cells.iter().map(|c| c[0]).collect();
        let code = code_of(adj, &order);
        if best.as_ref().is_none_or(|(b, _)| code > *b) {
            *best = Some((code, order));
        }
        return;
    };
    for &v in &cells[target] {
        let mut branch = cells.clone();
        let rest: Vec<usize> = branch[target].iter().copied().filter(|&w| w != v).collect();
        branch[target] = vec![v];
        branch.insert(target + 1, rest);
        search(adj, branch, best);
    }
}

fn canonical_order(adj: &[u16]) -> Vec<usize> {
    let n = adj.len();
    if n == 0 {
        return Vec::new();
    }
    let mut by_degree: Vec<(u32, usize)> = (0..n).map(|v| (adj[v].count_ones(), v)).collect();
    by_degree.sort();
    let mut cells: Partition = Vec::new();
    for (i, &(d, v)) in by_degree.iter().enumerate() {
        if i == 0 || d != by_degree[i - 1].0 {
            cells.push(Vec::new());
        }
        cells.last_mut().expect("pushed").push(v);
    }
    let mut best = None;
    search(adj, cells, &mut best);
    best.expect("at least one leaf").1
}

/// Isomorphism invariant: equal codes iff the graphs are isomorphic.
pub fn canonical_code(adj: &[u16]) -> u64 {
    let order = canonical_order(adj);
    (code_of(adj, &order) << 4) | adj.len() as u64
}

fn dedup_push(seen: &mut HashSet<u64>, out: &mut Vec<SmallGraph>, g: SmallGraph) {
    if seen.insert(g.canonical_code()) {
        out.push(g.canonical());
    }
}

/// One representative per isomorphism class of connected graphs on `n` vertices.
pub fn connected_graphs(n: usize) -> Vec<SmallGraph> {
    assert!(n >= 1);
    if n == 1 {
        return vec![SmallGraph::empty(1)];
    }
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for base in connected_graphs(n - 1) {
        for subset in 1u16..(1 << (n - 1)) {
            let mut g = base.clone();
            let v = g.add_vertex();
            for u in 0..n - 1 {
                if subset >> u & 1 == 1 {
                    g.add_edge(u, v);
                }
            }
            dedup_push(&mut seen, &mut out, g);
        }
    }
    out
}

/// One representative per isomorphism class of maximally independent graphs
/// on `n >= 2` vertices, grown by vertex additions of degree two and edge
/// splits.
pub fn laman_graphs(n: usize) -> Vec<SmallGraph> {
    laman_tower(n).pop().expect("nonempty tower")
}

/// `laman_tower(n)[k]` holds the classes on `k + 2` vertices.
pub fn laman_tower(n: usize) -> Vec<Vec<SmallGraph>> {
    assert!(n >= 2);
    let mut seed = SmallGraph::empty(2);
    seed.add_edge(0, 1);
    let mut tower = vec![vec![seed]];
    for m in 3..=n {
        let mut seen = HashSet::new();
        let mut out = Vec::new();
        for base in tower.last().expect("nonempty") {
            let k = m - 1;
            for a in 0..k {
                for b in a + 1..k {
                    let mut g = base.clone();
                    let v = g.add_vertex();
                    g.add_edge(a, v);
                    g.add_edge(b, v);
                    dedup_push(&mut seen, &mut out, g);
                }
            }
            for (a, b) in base.edges() {
                for c in (0..k).filter(|&c| c != a && c != b) {
                    let mut g = base.clone();
                    g.remove_edge(a, b);
                    let v = g.add_vertex();
                    g.add_edge(a, v);
                    g.add_edge(b, v);
                    g.add_edge(c, v);
                    dedup_push(&mut seen, &mut out, g);
                }
            }
        }
        tower.push(out);
    }
    tower
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn canonical_code_is_invariant() {
        let mut a = SmallGraph::empty(5);
        for (x, y) in [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)] {
            a.add_edge(x, y);
        }
        let perm = [3, 0, 4, 1, 2];
        let mut b = SmallGraph::empty(5);
        for (x, y) in a.edges() {
            b.add_edge(perm[x], perm[y]);
        }
        assert_eq!(a.canonical_code(), b.canonical_code());
        assert_eq!(a.canonical(), b.canonical());
        let mut c = a.clone();
        c.remove_edge(0, 2);
        c.add_edge(1, 3);
        assert_eq!(a.canonical_code(), c.canonical_code());
        c.remove_edge(1, 3);
        assert_ne!(a.canonical_code(), c.canonical_code());
    }

    #[test]
    fn small_class_counts() {
        let counts: Vec<usize> = (1..=5).map(|n| connected_graphs(n).len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21]);
        let tower = laman_tower(7);
        let counts: Vec<usize> = tower.iter().map(Vec::len).collect();
        assert_eq!(counts, vec![1, 1, 1, 3, 13, 70]);
        assert!(tower.iter().flatten().all(|g| g.to_graph().is_maximally_independent()));
    }

    #[test]
    fn fixtures_load() {
        for name in FIXTURE_NAMES {
            assert!(fixture(name).is_some(), "{name}");
        }
        assert!(fixture("nope").is_none());
    }
}
