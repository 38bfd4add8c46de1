//! Planarity testing and planar embeddings by path addition.
//!
//! Blocks are embedded with the Demoucron–Malgrange–Pertuiset procedure: start
//! from a cycle, then repeatedly route a path of some fragment through a face
//! that contains all of its contact vertices, preferring fragments with a
//! single admissible face. The resulting oriented faces define a rotation
//! system, from which faces are re-extracted by dart tracing.

use std::collections::{BTreeMap, HashMap, HashSet, VecDeque};
use std::fmt::Write as _;

use serde::Serialize;

use crate::connectivity::{biconnected_blocks, is_k_connected_or_false};
use crate::error::ConnectivityError;
use crate::graph::{Graph, VertexId};

/// A combinatorial embedding of a 2-connected planar graph.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct PlanarEmbedding {
    /// Cyclic neighbor order around each vertex.
    pub rotation: BTreeMap<VertexId, Vec<VertexId>>,
    /// Face boundaries as closed walks; each face starts at its smallest dart.
    pub faces: Vec<Vec<VertexId>>,
}

impl PlanarEmbedding {
    pub fn vertex_count(&self) -> usize {
        self.rotation.len()
    }

    pub fn edge_count(&self) -> usize {
        self.rotation.values().map(Vec::len).sum::<usize>() / 2
    }

    /// `F + n = e + 2`.
    pub fn satisfies_euler(&self) -> bool {
        self.faces.len() + self.vertex_count() == self.edge_count() + 2
    }

    /// True iff every edge bounds exactly two faces, once in each direction.
    pub fn darts_partitioned(&self) -> bool {
        let mut seen = HashSet::new();
        for face in &self.faces {
            for (i, &a) in face.iter().enumerate() {
                let b = face[(i + 1) % face.len()];
                if !seen.insert((a, b)) {
                    return false;
                }
            }
        }
        seen.len() == 2 * self.edge_count()
            && seen.iter().all(|&(a, b)| seen.contains(&(b, a)))
    }

    /// Graphviz rendering of the graph with faces listed as comments.
    pub fn to_dot(&self) -> String {
        let mut out = String::from("graph embedding {\n");
        for (i, face) in self.faces.iter().enumerate() {
            let walk: Vec<String> = face.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  // face {i}: {}", walk.join(" -> "));
        }
        for (&v, nbrs) in &self.rotation {
            let order: Vec<String> = nbrs.iter().map(ToString::to_string).collect();
            let _ = writeln!(out, "  {v} [rotation=\"{}\"];", order.join(" "));
        }
        for (&v, nbrs) in &self.rotation {
            for &w in nbrs.iter().filter(|&&w| w > v) {
                let _ = writeln!(out, "  {v} -- {w};");
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Number of faces of each boundary length.
pub fn face_census(emb: &PlanarEmbedding) -> BTreeMap<usize, usize> {
    let mut census = BTreeMap::new();
    for face in &emb.faces {
        *census.entry(face.len()).or_insert(0) += 1;
    }
    census
}

/// `sum_i n_i (i - 4)` over a face census; equals `2(free(G) - 1)` for any planar embedding.
pub fn face_excess(census: &BTreeMap<usize, usize>) -> i64 {
    census
        .iter()
        .map(|(&len, &count)| count as i64 * (len as i64 - 4))
        .sum()
}

pub fn is_planar(g: &Graph) -> bool {
    let n = g.order();
    if n >= 3 && g.size() > 3 * n - 6 {
        return false;
    }
    biconnected_blocks(g).into_iter().all(|block| {
        if block.len() < 4 {
            return true;
        }
        let sub = g.induced_subgraph(&block).expect("block vertices exist");
        embed_block(&sub).is_some()
    })
}

/// Embeds a planar 2-connected graph.
pub fn planar_embedding(g: &Graph) -> Result<PlanarEmbedding, ConnectivityError> {
    if g.order() < 3 || !is_k_connected_or_false(g, 2) {
        return Err(ConnectivityError::NotBiconnected);
    }
    let faces = embed_block(g).ok_or(ConnectivityError::NonPlanar)?;
    let rotation = rotation_from_faces(g, &faces);
    let faces = faces_from_rotation(&rotation);
    Ok(PlanarEmbedding { rotation, faces })
}

struct Fragment {
    contacts: Vec<usize>,
    /// Non-embedded vertices of the fragment; empty for a single chord.
    inner: Vec<usize>,
}

// Returns oriented faces (as vertex-index cycles mapped back to ids), or None
// if the block is not planar.
fn embed_block(g: &Graph) -> Option<Vec<Vec<VertexId>>> {
    let n = g.order();
    let mut on = vec![false; n];
    let mut placed: HashSet<(usize, usize)> = HashSet::new();
    let key = |a: usize, b: usize| if a < b { (a, b) } else { (b, a) };

    let cycle = initial_cycle(g)?;
    for (i, &a) in cycle.iter().enumerate() {
        on[a] = true;
        placed.insert(key(a, cycle[(i + 1) % cycle.len()]));
    }
    let mut rev = cycle.clone();
    rev.reverse();
    let mut faces = vec![cycle, rev];

    loop {
        let fragments = fragments(g, &on, &placed);
        if fragments.is_empty() {
            break;
        }
        let mut choice: Option<(usize, usize)> = None;
        for (fi, frag) in fragments.iter().enumerate() {
            let admissible: Vec<usize> = faces
                .iter()
                .enumerate()
                .filter(|(_, face)| frag.contacts.iter().all(|c| face.contains(c)))
                .map(|(i, _)| i)
                .collect();
            match admissible.len() {
                0 => return None,
                1 => {
                    choice = Some((fi, admissible[0]));
                    break;
                }
                _ => {
                    if choice.is_none() {
                        choice = Some((fi, admissible[0]));
                    }
                }
            }
        }
        let (fi, face_idx) = choice.expect("at least one fragment");
        let path = fragment_path(g, &fragments[fi], &on);
        for w in path.windows(2) {
            placed.insert(key(w[0], w[1]));
        }
        for &v in &path {
            on[v] = true;
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
    Some(
        faces
            .into_iter()
            .map(|f| f.into_iter().map(|i| g.vertex_at(i)).collect())
            .collect(),
    )
}

// Shortest cycle through the first edge, found by BFS avoiding that edge.
fn initial_cycle(g: &Graph) -> Option<Vec<usize>> {
    let (a, b) = g.edge_indices().next()?;
    let mut prev = vec![usize::MAX; g.order()];
    prev[b] = b;
    let mut queue = VecDeque::from([b]);
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbor_indices(x) {
            if (x == b && y == a) || prev[y] != usize::MAX {
                continue;
            }
            prev[y] = x;
            if y == a {
                let mut cycle = vec![a];
                let mut cur = x;
                while cur != b {
                    cycle.push(cur);
                    cur = prev[cur];
                }
                cycle.push(b);
                return Some(cycle);
            }
            queue.push_back(y);
        }
    }
    None
}

fn fragments(g: &Graph, on: &[bool], placed: &HashSet<(usize, usize)>) -> Vec<Fragment> {
    let n = g.order();
    let mut out = Vec::new();
    for (a, b) in g.edge_indices() {
        if on[a] && on[b] && !placed.contains(&(a.min(b), a.max(b))) {
            out.push(Fragment {
                contacts: vec![a, b],
                inner: Vec::new(),
            });
        }
    }
    let mut seen = vec![false; n];
    for start in 0..n {
        if on[start] || seen[start] {
            continue;
        }
        seen[start] = true;
        let mut inner = vec![start];
        let mut contacts = Vec::new();
        let mut head = 0;
        while head < inner.len() {
            let x = inner[head];
            head += 1;
            for &y in g.neighbor_indices(x) {
                if on[y] {
                    contacts.push(y);
                } else if !seen[y] {
                    seen[y] = true;
                    inner.push(y);
                }
            }
        }
        contacts.sort_unstable();
        contacts.dedup();
        out.push(Fragment { contacts, inner });
    }
    out
}

// A path through the fragment joining two distinct contact vertices.
fn fragment_path(g: &Graph, frag: &Fragment, on: &[bool]) -> Vec<usize> {
    if frag.inner.is_empty() {
        return frag.contacts.clone();
    }
    let start = frag.contacts[0];
    let inside: HashSet<usize> = frag.inner.iter().copied().collect();
    let mut prev: HashMap<usize, usize> = HashMap::new();
    let mut queue = VecDeque::new();
    for &y in g.neighbor_indices(start) {
        if inside.contains(&y) && !prev.contains_key(&y) {
            prev.insert(y, start);
            queue.push_back(y);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbor_indices(x) {
            if on[y] && y != start {
                let mut path = vec![y, x];
                let mut cur = x;
                while prev[&cur] != start {
                    cur = prev[&cur];
                    path.push(cur);
                }
                path.push(start);
                path.reverse();
                return path;
            }
            if inside.contains(&y) && !prev.contains_key(&y) {
                prev.insert(y, x);
                queue.push_back(y);
            }
        }
    }
    unreachable!("fragment of a 2-connected graph has two contacts")
}

// Splits an oriented face along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let (a, b) = (path[0], *path.last().expect("nonempty path"));
    let len = face.len();
    let i = face.iter().position(|&v| v == a).expect("contact on face");
    let j = face.iter().position(|&v| v == b).expect("contact on face");
    let walk = |from: usize, to: usize| {
        let mut out = Vec::new();
        let mut k = from;
        loop {
            out.push(face[k]);
            if k == to {
                break;
            }
            k = (k + 1) % len;
        }
        out
    };
    let interior = &path[1..path.len() - 1];
    let mut f1 = walk(i, j);
    f1.extend(interior.iter().rev());
    let mut f2 = walk(j, i);
    f2.extend(interior.iter());
    (f1, f2)
}

// For consecutive darts u->v->w on a face, the rotation at v maps u to w.
fn rotation_from_faces(g: &Graph, faces: &[Vec<VertexId>]) -> BTreeMap<VertexId, Vec<VertexId>> {
    let mut succ: HashMap<(VertexId, VertexId), VertexId> = HashMap::new();
    for face in faces {
        let len = face.len();
        for k in 0..len {
            let (u, v, w) = (face[k], face[(k + 1) % len], face[(k + 2) % len]);
            succ.insert((v, u), w);
        }
    }
    g.vertices()
        .iter()
        .map(|&v| {
            let nbrs = g.neighbors(v).expect("vertex of g");
            let mut order = vec![nbrs[0]];
            let mut cur = nbrs[0];
            for _ in 1..nbrs.len() {
                cur = succ[&(v, cur)];
                order.push(cur);
            }
            (v, order)
        })
        .collect()
}

/// Traces faces of a rotation system: the dart after `u -> v` is
/// `v -> next_v(u)`. Faces are ordered by, and start at, their smallest dart.
pub fn faces_from_rotation(rotation: &BTreeMap<VertexId, Vec<VertexId>>) -> Vec<Vec<VertexId>> {
    let next = |v: VertexId, u: VertexId| {
        let order = &rotation[&v];
        let pos = order.iter().position(|&x| x == u).expect("rotation lists all neighbors");
        order[(pos + 1) % order.len()]
    };
    let mut darts: Vec<(VertexId, VertexId)> = rotation
        .iter()
        .flat_map(|(&v, nbrs)| nbrs.iter().map(move |&w| (v, w)))
        .collect();
    darts.sort_unstable();
    let mut used = HashSet::new();
    let mut faces = Vec::new();
    for &start in &darts {
        if used.contains(&start) {
            continue;
        }
        let mut face = Vec::new();
        let mut dart = start;
        loop {
            used.insert(dart);
            face.push(dart.0);
            let (u, v) = dart;
            dart = (v, next(v, u));
            if dart == start {
                break;
            }
        }
        faces.push(face);
    }
    faces
}
