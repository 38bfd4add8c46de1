//! Vertex connectivity, separation sets and biconnected blocks.
//!
//! The graphs this crate deals with are desk-sized, so k-connectivity is
//! decided by deleting every small vertex subset and testing what is left.

use itertools::Itertools;
use serde::Serialize;

use crate::error::ConnectivityError;
use crate::graph::{Graph, VertexId};

/// A vertex set whose removal disconnects the graph, with the resulting components.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct SeparationSet {
    pub vertices: Vec<VertexId>,
    pub components: Vec<Vec<VertexId>>,
}

/// Connected components of `g` after deleting the vertices at indices flagged in `removed`.
pub(crate) fn components_without(g: &Graph, removed: &[bool]) -> Vec<Vec<usize>> {
    let n = g.order();
    let mut label = vec![usize::MAX; n];
    let mut comps = Vec::new();
    for start in 0..n {
        if removed[start] || label[start] != usize::MAX {
            continue;
        }
        let id = comps.len();
        let mut comp = vec![start];
        label[start] = id;
        let mut head = 0;
        while head < comp.len() {
            let x = comp[head];
            head += 1;
            for &y in g.neighbor_indices(x) {
                if !removed[y] && label[y] == usize::MAX {
                    label[y] = id;
                    comp.push(y);
                }
            }
        }
        comp.sort_unstable();
        comps.push(comp);
    }
    comps
}

/// Components of `g - vs`, as sorted vertex-id lists ordered by smallest member.
pub fn components_after_removal(g: &Graph, vs: &[VertexId]) -> Vec<Vec<VertexId>> {
    let mut removed = vec![false; g.order()];
    for &v in vs {
        if let Some(i) = g.index_of(v) {
            removed[i] = true;
        }
    }
    components_without(g, &removed)
        .into_iter()
        .map(|c| c.into_iter().map(|i| g.vertex_at(i)).collect())
        .collect()
}

pub fn is_connected(g: &Graph) -> bool {
    components_without(g, &vec![false; g.order()]).len() == 1
}

/// True iff `g` has more than `k` vertices and no set of fewer than `k`
/// vertices disconnects it.
pub fn is_k_connected(g: &Graph, k: usize) -> Result<bool, ConnectivityError> {
    let n = g.order();
    if n <= k {
        return Err(ConnectivityError::TooSmall { order: n, k });
    }
    let mut removed = vec![false; n];
    for size in 0..k {
        for subset in (0..n).combinations(size) {
            subset.iter().for_each(|&i| removed[i] = true);
            let pieces = components_without(g, &removed).len();
            subset.iter().for_each(|&i| removed[i] = false);
            if pieces != 1 {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Convenience form that reports `false` instead of an error for small graphs.
pub fn is_k_connected_or_false(g: &Graph, k: usize) -> bool {
    is_k_connected(g, k).unwrap_or(false)
}

fn separation_sets_of_size(g: &Graph, size: usize) -> Vec<SeparationSet> {
    let n = g.order();
    let mut removed = vec![false; n];
    let mut out = Vec::new();
    for subset in (0..n).combinations(size) {
        subset.iter().for_each(|&i| removed[i] = true);
        let comps = components_without(g, &removed);
        subset.iter().for_each(|&i| removed[i] = false);
        if comps.len() >= 2 {
            out.push(SeparationSet {
                vertices: subset.iter().map(|&i| g.vertex_at(i)).collect(),
                components: comps
                    .into_iter()
                    .map(|c| c.into_iter().map(|i| g.vertex_at(i)).collect())
                    .collect(),
            });
        }
    }
    out
}

/// All vertex pairs whose removal disconnects `g`, in lexicographic order.
pub fn find_separation_pairs(g: &Graph) -> Vec<SeparationSet> {
    separation_sets_of_size(g, 2)
}

/// All vertex triples whose removal disconnects `g`, in lexicographic order.
pub fn find_separation_triples(g: &Graph) -> Vec<SeparationSet> {
    separation_sets_of_size(g, 3)
}

/// Biconnected blocks as sorted vertex-id lists (isolated vertices are omitted).
pub fn biconnected_blocks(g: &Graph) -> Vec<Vec<VertexId>> {
    struct State<'a> {
        g: &'a Graph,
        disc: Vec<usize>,
        low: Vec<usize>,
        time: usize,
        stack: Vec<(usize, usize)>,
        blocks: Vec<Vec<VertexId>>,
    }

    fn visit(s: &mut State<'_>, x: usize, parent: usize) {
        s.time += 1;
        s.disc[x] = s.time;
        s.low[x] = s.time;
        for k in 0..s.g.neighbor_indices(x).len() {
            let y = s.g.neighbor_indices(x)[k];
            if s.disc[y] == 0 {
                s.stack.push((x, y));
                visit(s, y, x);
                s.low[x] = s.low[x].min(s.low[y]);
                if s.low[y] >= s.disc[x] {
                    let mut block = Vec::new();
                    while let Some((a, b)) = s.stack.pop() {
                        block.push(s.g.vertex_at(a));
                        block.push(s.g.vertex_at(b));
                        if (a, b) == (x, y) {
                            break;
                        }
                    }
                    block.sort_unstable();
                    block.dedup();
                    s.blocks.push(block);
                }
            } else if y != parent && s.disc[y] < s.disc[x] {
                s.stack.push((x, y));
                s.low[x] = s.low[x].min(s.disc[y]);
            }
        }
    }

    let n = g.order();
    let mut s = State {
        g,
        disc: vec![0; n],
        low: vec![0; n],
        time: 0,
        stack: Vec::new(),
        blocks: Vec::new(),
    };
    for v in 0..n {
        if s.disc[v] == 0 {
            visit(&mut s, v, usize::MAX);
        }
    }
    s.blocks.sort();
    s.blocks
}

#[cfg(test)]
mod tests {
    use super::*;

    fn bowtie() -> Graph {
        Graph::from_edge_list(5, &[(0, 1), (1, 2), (0, 2), (2, 3), (3, 4), (2, 4)]).unwrap()
    }

    #[test]
    fn cut_vertex_breaks_2_connectivity() {
        let g = bowtie();
        assert!(is_k_connected(&g, 1).unwrap());
        assert!(!is_k_connected(&g, 2).unwrap());
        assert_eq!(biconnected_blocks(&g), vec![vec![0, 1, 2], vec![2, 3, 4]]);
    }

    #[test]
    fn small_graphs_are_rejected() {
        let t = Graph::from_edge_list(3, &[(0, 1), (1, 2), (0, 2)]).unwrap();
        assert!(matches!(
            is_k_connected(&t, 3),
            Err(ConnectivityError::TooSmall { order: 3, k: 3 })
        ));
        assert!(is_k_connected(&t, 2).unwrap());
    }

    #[test]
    fn k4_has_no_separating_triples() {
        let k4 =
            Graph::from_edge_list(4, &[(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]).unwrap();
        assert!(find_separation_triples(&k4).is_empty());
        assert!(is_k_connected(&k4, 3).unwrap());
    }

    #[test]
    fn square_separation_pairs() {
        let sq = Graph::from_edge_list(4, &[(0, 1), (1, 2), (2, 3), (0, 3)]).unwrap();
        let pairs = find_separation_pairs(&sq);
        assert_eq!(pairs.len(), 2);
        assert_eq!(pairs[0].vertices, vec![0, 2]);
        assert_eq!(pairs[0].components, vec![vec![1], vec![3]]);
    }

    #[test]
    fn blocks_of_a_path() {
        let p = Graph::from_edge_list(3, &[(0, 1), (1, 2)]).unwrap();
        assert_eq!(biconnected_blocks(&p), vec![vec![0, 1], vec![1, 2]]);
    }
}
