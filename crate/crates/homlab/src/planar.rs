//! Exact planarity testing.
//!
//! The graph is split into biconnected blocks (a graph is planar iff every
//! block is), and each block is tested by iteratively embedding fragments
//! into faces: start from any cycle, and repeatedly place a path of some
//! unembedded fragment into a face whose boundary contains all of the
//! fragment's attachment vertices, splitting that face in two. If a fragment
//! has no admissible face the block is nonplanar; fragments with a unique
//! admissible face are forced and get embedded first.

use std::collections::BTreeSet;

use crate::graph::{edge_key, Graph};

pub fn is_planar(g: &Graph) -> bool {
    blocks(g).iter().all(|b| block_is_planar(g, b))
}

/// Edge sets of the biconnected blocks (bridges come out as single-edge
/// blocks; isolated vertices contribute nothing).
pub fn blocks(g: &Graph) -> Vec<Vec<(usize, usize)>> {
    let n = g.n();
    let mut disc = vec![usize::MAX; n];
    let mut low = vec![0usize; n];
    let mut time = 0usize;
    let mut stack: Vec<(usize, usize)> = Vec::new();
    let mut out = Vec::new();

    // Iterative DFS: frame = (vertex, parent, neighbor index).
    for root in 0..n {
        if disc[root] != usize::MAX {
            continue;
        }
        let mut frames: Vec<(usize, usize, usize)> = vec![(root, usize::MAX, 0)];
        disc[root] = time;
        low[root] = time;
        time += 1;
        while let Some(&mut (v, parent, ref mut i)) = frames.last_mut() {
            if *i < g.neighbors(v).len() {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if disc[w] == usize::MAX {
                    stack.push((v, w));
                    disc[w] = time;
                    low[w] = time;
                    time += 1;
                    frames.push((w, v, 0));
                } else if w != parent && disc[w] < disc[v] {
                    stack.push((v, w));
                    low[v] = low[v].min(disc[w]);
                }
            } else {
                frames.pop();
                if let Some(&mut (p, _, _)) = frames.last_mut() {
                    low[p] = low[p].min(low[v]);
                    if low[v] >= disc[p] {
                        // p is a cut vertex (or the root): pop one block.
                        let mut block = Vec::new();
                        while let Some(&e) = stack.last() {
                            stack.pop();
                            block.push(e);
                            if e == (p, v) {
                                break;
                            }
                        }
                        if !block.is_empty() {
                            out.push(block);
                        }
                    }
                }
            }
        }
    }
    out
}

fn block_is_planar(g: &Graph, block_edges: &[(usize, usize)]) -> bool {
    if block_edges.len() <= 2 {
        return true; // a single edge, or two edges sharing a vertex
    }
    let verts: BTreeSet<usize> = block_edges.iter().flat_map(|&(u, v)| [u, v]).collect();
    let vlist: Vec<usize> = verts.iter().copied().collect();
    let n = vlist.len();
    let id = |v: usize| vlist.binary_search(&v).unwrap();
    let mut h = Graph::new(n);
    for &(u, v) in block_edges {
        h.add_edge(id(u), id(v)).unwrap();
    }
    let _ = g;
    if n >= 3 && h.m() > 3 * n - 6 {
        return false;
    }
    dmp_biconnected(&h)
}

/// Embedding loop for a biconnected graph with at least one cycle.
fn dmp_biconnected(g: &Graph) -> bool {
    let start = match find_cycle(g) {
        Some(c) => c,
        None => return true, // acyclic blocks were already dismissed
    };
    let mut in_h = vec![false; g.n()];
    for &v in &start {
        in_h[v] = true;
    }
    let mut h_edges: BTreeSet<(usize, usize)> = BTreeSet::new();
    for i in 0..start.len() {
        h_edges.insert(edge_key(start[i], start[(i + 1) % start.len()]));
    }
    // Both sides of the initial cycle; boundaries stay simple cycles because
    // we always add a path between two distinct boundary vertices.
    let mut faces: Vec<Vec<usize>> = vec![start.clone(), start];

    loop {
        let fragments = find_fragments(g, &in_h, &h_edges);
        if fragments.is_empty() {
            return true;
        }
        // Admissible faces per fragment (boundary contains all attachments).
        let mut choice: Option<(usize, usize)> = None; // (fragment, face)
        for (fi, frag) in fragments.iter().enumerate() {
            let mut admissible = Vec::new();
            for (i, face) in faces.iter().enumerate() {
                let fv: BTreeSet<usize> = face.iter().copied().collect();
                if frag.attachments.iter().all(|a| fv.contains(a)) {
                    admissible.push(i);
                }
            }
            match admissible.len() {
                0 => return false,
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
        let (fi, face_idx) = choice.unwrap();
        let path = fragment_path(g, &in_h, &fragments[fi]);
        // Embed the path.
        for &v in &path {
            in_h[v] = true;
        }
        for w in path.windows(2) {
            h_edges.insert(edge_key(w[0], w[1]));
        }
        let face = faces.swap_remove(face_idx);
        let (f1, f2) = split_face(&face, &path);
        faces.push(f1);
        faces.push(f2);
    }
}

struct Fragment {
    attachments: Vec<usize>,
    /// Vertices of the fragment outside the embedded subgraph (empty for a
    /// chord between two embedded vertices).
    interior: Vec<usize>,
    /// Representative chord when `interior` is empty.
    chord: Option<(usize, usize)>,
}

fn find_fragments(g: &Graph, in_h: &[bool], h_edges: &BTreeSet<(usize, usize)>) -> Vec<Fragment> {
    let mut frags = Vec::new();
    // Chords: unembedded edges between embedded vertices.
    for (u, v) in g.edges() {
        if in_h[u] && in_h[v] && !h_edges.contains(&edge_key(u, v)) {
            frags.push(Fragment {
                attachments: vec![u, v],
                interior: Vec::new(),
                chord: Some((u, v)),
            });
        }
    }
    // Components of G - V(H) with their attachments.
    let mut seen = vec![false; g.n()];
    for s in 0..g.n() {
        if in_h[s] || seen[s] {
            continue;
        }
        let mut comp = vec![s];
        seen[s] = true;
        let mut queue = vec![s];
        let mut attach = BTreeSet::new();
        while let Some(v) = queue.pop() {
            for &w in g.neighbors(v) {
                if in_h[w] {
                    attach.insert(w);
                } else if !seen[w] {
                    seen[w] = true;
                    comp.push(w);
                    queue.push(w);
                }
            }
        }
        comp.sort_unstable();
        frags.push(Fragment {
            attachments: attach.into_iter().collect(),
            interior: comp,
            chord: None,
        });
    }
    frags
}

/// A path through the fragment between two distinct attachment vertices.
fn fragment_path(g: &Graph, in_h: &[bool], frag: &Fragment) -> Vec<usize> {
    if let Some((u, v)) = frag.chord {
        return vec![u, v];
    }
    // BFS from one attachment through interior vertices to another.
    let a0 = frag.attachments[0];
    let interior: BTreeSet<usize> = frag.interior.iter().copied().collect();
    let mut prev = vec![usize::MAX; g.n()];
    let mut queue = std::collections::VecDeque::new();
    // Seed with interior neighbors of a0.
    for &w in g.neighbors(a0) {
        if interior.contains(&w) && prev[w] == usize::MAX {
            prev[w] = a0;
            queue.push_back(w);
        }
    }
    while let Some(x) = queue.pop_front() {
        for &y in g.neighbors(x) {
            if y != a0 && in_h[y] && frag.attachments.contains(&y) {
                // Found the far attachment; reconstruct.
                let mut path = vec![y, x];
                let mut c = x;
                while prev[c] != a0 {
                    c = prev[c];
                    path.push(c);
                }
                path.push(a0);
                path.reverse();
                return path;
            }
            if interior.contains(&y) && prev[y] == usize::MAX {
                prev[y] = x;
                queue.push_back(y);
            }
        }
    }
    unreachable!("biconnected block fragment must reach a second attachment");
}

/// Splits a simple face cycle along a path whose endpoints lie on it.
fn split_face(face: &[usize], path: &[usize]) -> (Vec<usize>, Vec<usize>) {
    let u = path[0];
    let v = *path.last().unwrap();
    let i = face.iter().position(|&x| x == u).unwrap();
    let j = face.iter().position(|&x| x == v).unwrap();
    let m = face.len();
    // Arc from u forward to v, and from v forward to u.
    let mut arc_a = Vec::new();
    let mut t = i;
    loop {
        arc_a.push(face[t]);
        if t == j {
            break;
        }
        t = (t + 1) % m;
    }
    let mut arc_b = Vec::new();
    let mut t = j;
    loop {
        arc_b.push(face[t]);
        if t == i {
            break;
        }
        t = (t + 1) % m;
    }
    let inner: Vec<usize> = path[1..path.len() - 1].to_vec();
    let mut f1 = arc_a;
    f1.extend(inner.iter().rev());
    let mut f2 = arc_b;
    f2.extend(inner.iter());
    (f1, f2)
}

fn find_cycle(g: &Graph) -> Option<Vec<usize>> {
    // DFS; the first back edge closes a cycle.
    let n = g.n();
    let mut parent = vec![usize::MAX; n];
    let mut state = vec![0u8; n]; // 0 unvisited, 1 on stack, 2 done
    for root in 0..n {
        if state[root] != 0 {
            continue;
        }
        let mut stack = vec![(root, 0usize)];
        state[root] = 1;
        while let Some(&mut (v, ref mut i)) = stack.last_mut() {
            if *i < g.neighbors(v).len() {
                let w = g.neighbors(v)[*i];
                *i += 1;
                if state[w] == 0 {
                    parent[w] = v;
                    state[w] = 1;
                    stack.push((w, 0));
                } else if state[w] == 1 && parent[v] != w {
                    // Cycle w .. v.
                    let mut cyc = vec![v];
                    let mut c = v;
                    while c != w {
                        c = parent[c];
                        cyc.push(c);
                    }
                    cyc.reverse();
                    return Some(cyc);
                }
            } else {
                state[v] = 2;
                stack.pop();
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;

    fn petersen() -> Graph {
        // Outer 5-cycle 0..4, inner 5-star 5..9, spokes i -- i+5.
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(i + 5, 5 + (i + 2) % 5).unwrap();
        }
        g
    }

    #[test]
    fn small_graphs_are_planar() {
        assert!(is_planar(&Graph::complete(4)));
        assert!(is_planar(&Graph::cycle(7)));
        assert!(is_planar(&Graph::path(6)));
        assert!(is_planar(&Graph::star(8)));
        assert!(is_planar(&Graph::new(0)));
        assert!(is_planar(&Graph::coclique(5)));
    }

    #[test]
    fn k5_and_k33_are_not_planar() {
        assert!(!is_planar(&Graph::complete(5)));
        let mut k33 = Graph::new(6);
        for u in 0..3 {
            for v in 3..6 {
                k33.add_edge(u, v).unwrap();
            }
        }
        assert!(!is_planar(&k33));
    }

    #[test]
    fn petersen_is_not_planar() {
        assert!(!is_planar(&petersen()));
    }

    #[test]
    fn grid_is_planar() {
        // 4x5 grid.
        let (h, w) = (4usize, 5usize);
        let mut g = Graph::new(h * w);
        for r in 0..h {
            for c in 0..w {
                if c + 1 < w {
                    g.add_edge(r * w + c, r * w + c + 1).unwrap();
                }
                if r + 1 < h {
                    g.add_edge(r * w + c, (r + 1) * w + c).unwrap();
                }
            }
        }
        assert!(is_planar(&g));
    }

    #[test]
    fn planarity_respects_blocks() {
        // K5 hanging off a path through a cut vertex: still nonplanar.
        let mut g = Graph::new(8);
        for u in 0..5 {
            for v in u + 1..5 {
                g.add_edge(u, v).unwrap();
            }
        }
        g.add_edge(4, 5).unwrap();
        g.add_edge(5, 6).unwrap();
        g.add_edge(6, 7).unwrap();
        assert!(!is_planar(&g));
        // Two K4 blocks sharing a cut vertex: planar.
        let mut h = Graph::new(7);
        for u in 0..4 {
            for v in u + 1..4 {
                h.add_edge(u, v).unwrap();
            }
        }
        for u in 3..7 {
            for v in u + 1..7 {
                h.add_edge(u, v).unwrap();
            }
        }
        assert!(is_planar(&h));
    }

    #[test]
    fn k5_minus_an_edge_is_planar() {
        let mut g = Graph::complete(5);
        let mut edges: Vec<_> = g.edges().collect();
        edges.retain(|&e| e != (0, 1));
        g = Graph::from_edges(5, edges).unwrap();
        assert!(is_planar(&g));
    }

    #[test]
    fn block_decomposition_of_two_triangles() {
        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)] {
            g.add_edge(u, v).unwrap();
        }
        let bs = blocks(&g);
        assert_eq!(bs.len(), 2);
        assert!(bs.iter().all(|b| b.len() == 3));
    }
}
