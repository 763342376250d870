//! CFI-style graphs over finite abelian groups: construction, twisting
//! isomorphisms, the ordered variant with comparison relations, and the
//! structured planar family with a designated witness vertex.
//!
//! Given a base graph `G`, an abelian group `Γ`, and a vector `U` assigning
//! a group element to each base vertex, the derived graph has vertices
//! `(u, S)` where `S` maps the edges at `u` to `Γ` and sums to `U(u)`;
//! `(u, S)` and `(v, T)` are adjacent iff `uv` is a base edge and
//! `S(uv) + T(uv) = 0`.

use std::collections::BTreeMap;

use thiserror::Error;

use crate::canon::{Rel, Structure};
use crate::graph::{edge_key, Graph, OrderedGraph};
use crate::group::{FiniteAbelianGroup, GroupElement};

#[derive(Debug, Error)]
pub enum CfiError {
    #[error("vertex vector has {got} entries for a base with {want} vertices")]
    UVecLength { got: usize, want: usize },
    #[error("derived graph would have about {estimate} vertices; cap is {cap}")]
    CapExceeded { estimate: u128, cap: u128 },
    #[error("base graph must be connected for this operation")]
    BaseNotConnected,
    #[error("walk step {0}-{1} is not a base edge")]
    NotAnEdge(usize, usize),
    #[error("walk must contain at least one vertex")]
    EmptyWalk,
    #[error("vertex vectors have different total twist; no such isomorphism exists")]
    SumMismatch,
    #[error("ordered variant requires a cyclic group of 2-power order, got {0}")]
    NotTwoPowerCyclic(String),
    #[error("family parameter {0} is refused by default (the graph would be enormous); enable the override to force it")]
    FamilyTooLarge(usize),
}

/// Default cap on the number of derived vertices.
pub const DEFAULT_VERTEX_CAP: u128 = 200_000;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct CfiVertex {
    /// Base vertex this gadget vertex projects to.
    pub origin: usize,
    /// Group shares, aligned with the sorted incident edge list of `origin`.
    pub shares: Vec<GroupElement>,
}

#[derive(Clone, Debug)]
pub struct CfiGraph {
    pub base: Graph,
    pub group: FiniteAbelianGroup,
    pub u_vec: Vec<GroupElement>,
    pub graph: Graph,
    pub verts: Vec<CfiVertex>,
    index: BTreeMap<(usize, Vec<GroupElement>), usize>,
    /// `incident[u]` = sorted incident edges of base vertex `u`.
    incident: Vec<Vec<(usize, usize)>>,
}

impl CfiGraph {
    /// Base vertex a derived vertex projects to (a graph homomorphism onto
    /// the base whenever every fiber is nonempty).
    pub fn projection(&self, v: usize) -> usize {
        self.verts[v].origin
    }

    pub fn vertex_id(&self, origin: usize, shares: &[GroupElement]) -> Option<usize> {
        self.index.get(&(origin, shares.to_vec())).copied()
    }

    /// Share of derived vertex `v` on base edge `e` (must be incident to
    /// the vertex's origin).
    pub fn share(&self, v: usize, e: (usize, usize)) -> &GroupElement {
        let origin = self.verts[v].origin;
        let e = edge_key(e.0, e.1);
        let pos = self.incident[origin]
            .iter()
            .position(|&x| x == e)
            .expect("edge incident to origin");
        &self.verts[v].shares[pos]
    }

    pub fn incident_edges(&self, base_vertex: usize) -> &[(usize, usize)] {
        &self.incident[base_vertex]
    }

    /// Sum of the vertex vector; the complete isomorphism invariant of the
    /// construction for a fixed connected base and group.
    pub fn total_twist(&self) -> GroupElement {
        self.group.sum(self.u_vec.iter())
    }
}

pub fn zero_u(base: &Graph, group: &FiniteAbelianGroup) -> Vec<GroupElement> {
    vec![group.zero(); base.n()]
}

pub fn build_cfi(
    base: &Graph,
    group: &FiniteAbelianGroup,
    u_vec: &[GroupElement],
) -> Result<CfiGraph, CfiError> {
    build_cfi_capped(base, group, u_vec, DEFAULT_VERTEX_CAP)
}

pub fn build_cfi_capped(
    base: &Graph,
    group: &FiniteAbelianGroup,
    u_vec: &[GroupElement],
    cap: u128,
) -> Result<CfiGraph, CfiError> {
    if u_vec.len() != base.n() {
        return Err(CfiError::UVecLength {
            got: u_vec.len(),
            want: base.n(),
        });
    }
    let q = group.order() as u128;
    let mut estimate: u128 = 0;
    for u in base.vertices() {
        let deg = base.degree(u) as u32;
        estimate = estimate.saturating_add(if deg == 0 {
            1
        } else {
            q.saturating_pow(deg - 1)
        });
        if estimate > cap {
            return Err(CfiError::CapExceeded { estimate, cap });
        }
    }

    let incident: Vec<Vec<(usize, usize)>> = base
        .vertices()
        .map(|u| {
            base.neighbors(u)
                .iter()
                .map(|&w| edge_key(u, w))
                .collect::<Vec<_>>()
        })
        .map(|mut v| {
            v.sort_unstable();
            v
        })
        .collect();

    // Vertices: per base vertex in order, shares enumerated lexicographically
    // (the first deg-1 coordinates run through the group in index order; the
    // last is determined by the sum constraint).
    let mut verts = Vec::new();
    let mut index = BTreeMap::new();
    let elems = group.elements();
    for u in base.vertices() {
        let deg = incident[u].len();
        if deg == 0 {
            if group.is_zero(&u_vec[u]) {
                let id = verts.len();
                index.insert((u, Vec::new()), id);
                verts.push(CfiVertex {
                    origin: u,
                    shares: Vec::new(),
                });
            }
            continue;
        }
        // The first deg-1 shares run lexicographically; the last is forced.
        let free = deg - 1;
        let total = (elems.len() as u128).pow(free as u32) as usize;
        for t in 0..total {
            let mut digits = vec![0usize; free];
            let mut rem = t;
            for i in (0..free).rev() {
                digits[i] = rem % elems.len();
                rem /= elems.len();
            }
            let mut shares: Vec<GroupElement> =
                digits.iter().map(|&i| elems[i].clone()).collect();
            let partial = group.sum(shares.iter());
            shares.push(group.sub(&u_vec[u], &partial));
            let id = verts.len();
            index.insert((u, shares.clone()), id);
            verts.push(CfiVertex { origin: u, shares });
        }
    }

    let mut graph = Graph::new(verts.len());
    // Fiber ranges per base vertex for edge generation.
    let mut fiber: Vec<Vec<usize>> = vec![Vec::new(); base.n()];
    for (id, v) in verts.iter().enumerate() {
        fiber[v.origin].push(id);
    }
    let pos_of = |u: usize, e: (usize, usize)| incident[u].iter().position(|&x| x == e).unwrap();
    for (u, v) in base.edges() {
        let e = (u, v);
        let pu = pos_of(u, e);
        let pv = pos_of(v, e);
        // Index v-side by share value for linear matching.
        let mut by_val: BTreeMap<&GroupElement, Vec<usize>> = BTreeMap::new();
        for &y in &fiber[v] {
            by_val.entry(&verts[y].shares[pv]).or_default().push(y);
        }
        for &x in &fiber[u] {
            let need = group.neg(&verts[x].shares[pu]);
            if let Some(ys) = by_val.get(&need) {
                for &y in ys {
                    graph.add_edge(x, y).unwrap();
                }
            }
        }
    }

    Ok(CfiGraph {
        base: base.clone(),
        group: group.clone(),
        u_vec: u_vec.to_vec(),
        graph,
        verts,
        index,
        incident,
    })
}

/// Expected number of derived vertices: sum over base vertices of
/// `|Γ|^(deg-1)` (degree-0 vertices contribute 1 if their target is zero).
pub fn expected_vertex_count(
    base: &Graph,
    group: &FiniteAbelianGroup,
    u_vec: &[GroupElement],
) -> u128 {
    let q = group.order() as u128;
    base.vertices()
        .map(|u| {
            let deg = base.degree(u) as u32;
            if deg == 0 {
                u128::from(group.is_zero(&u_vec[u]))
            } else {
                q.pow(deg - 1)
            }
        })
        .sum()
}

// ----- twisting isomorphisms -----

/// Moves amount `g` of the vertex vector along a walk: the result is built
/// over `U - g at walk start + g at walk end`, together with the vertex
/// map realizing the isomorphism (verified edge-by-edge).
pub fn twist_along_walk(
    a: &CfiGraph,
    walk: &[usize],
    g: &GroupElement,
) -> Result<(CfiGraph, Vec<usize>), CfiError> {
    if walk.is_empty() {
        return Err(CfiError::EmptyWalk);
    }
    for w in walk.windows(2) {
        if !a.base.has_edge(w[0], w[1]) {
            return Err(CfiError::NotAnEdge(w[0], w[1]));
        }
    }
    // Accumulate share adjustments: moving +g from x to y across edge xy
    // adds g to the y-side share and subtracts g from the x-side share.
    let mut adj: BTreeMap<(usize, (usize, usize)), GroupElement> = BTreeMap::new();
    let grp = &a.group;
    let mut bump = |vtx: usize, e: (usize, usize), delta: &GroupElement| {
        let slot = adj
            .entry((vtx, e))
            .or_insert_with(|| grp.zero());
        *slot = grp.add(slot, delta);
    };
    for w in walk.windows(2) {
        let (x, y) = (w[0], w[1]);
        let e = edge_key(x, y);
        bump(y, e, g);
        bump(x, e, &grp.neg(g));
    }
    let mut u_prime = a.u_vec.clone();
    u_prime[walk[0]] = grp.sub(&u_prime[walk[0]], g);
    let last = *walk.last().unwrap();
    u_prime[last] = grp.add(&u_prime[last], g);
    apply_share_adjustment(a, &u_prime, &adj)
}

/// Isomorphism between the graphs over `U` and `u_prime` whenever the two
/// vectors have equal total twist, by routing the difference through a
/// spanning tree. Returns the target graph and the verified vertex map.
pub fn equal_sum_isomorphism(
    a: &CfiGraph,
    u_prime: &[GroupElement],
) -> Result<(CfiGraph, Vec<usize>), CfiError> {
    if u_prime.len() != a.base.n() {
        return Err(CfiError::UVecLength {
            got: u_prime.len(),
            want: a.base.n(),
        });
    }
    if !a.base.is_connected() {
        return Err(CfiError::BaseNotConnected);
    }
    let grp = &a.group;
    let diff: Vec<GroupElement> = a
        .u_vec
        .iter()
        .zip(u_prime)
        .map(|(x, y)| grp.sub(y, x))
        .collect();
    if !grp.is_zero(&grp.sum(diff.iter())) {
        return Err(CfiError::SumMismatch);
    }
    // BFS tree from vertex 0; flow toward each vertex v equals the sum of
    // differences in v's subtree, so every vertex nets exactly diff[v].
    let n = a.base.n();
    let mut parent = vec![usize::MAX; n];
    let mut order = vec![0usize];
    parent[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let x = order[head];
        head += 1;
        for &y in a.base.neighbors(x) {
            if parent[y] == usize::MAX {
                parent[y] = x;
                order.push(y);
            }
        }
    }
    let mut net: Vec<GroupElement> = diff.clone();
    let mut adj: BTreeMap<(usize, (usize, usize)), GroupElement> = BTreeMap::new();
    for &v in order.iter().skip(1).rev() {
        let p = parent[v];
        let g = net[v].clone();
        let e = edge_key(p, v);
        // Move +g from p to v.
        let slot = adj.entry((v, e)).or_insert_with(|| grp.zero());
        *slot = grp.add(slot, &g);
        let slot = adj.entry((p, e)).or_insert_with(|| grp.zero());
        *slot = grp.sub(slot, &g);
        net[p] = grp.add(&net[p], &g);
    }
    apply_share_adjustment(a, u_prime, &adj)
}

fn apply_share_adjustment(
    a: &CfiGraph,
    u_prime: &[GroupElement],
    adj: &BTreeMap<(usize, (usize, usize)), GroupElement>,
) -> Result<(CfiGraph, Vec<usize>), CfiError> {
    let target = build_cfi_capped(&a.base, &a.group, u_prime, u128::MAX)?;
    let mut map = Vec::with_capacity(a.verts.len());
    for v in &a.verts {
        let mut shares = v.shares.clone();
        for (pos, &e) in a.incident[v.origin].iter().enumerate() {
            if let Some(delta) = adj.get(&(v.origin, e)) {
                shares[pos] = a.group.add(&shares[pos], delta);
            }
        }
        let id = target
            .vertex_id(v.origin, &shares)
            .expect("adjusted shares satisfy the target sum constraint");
        map.push(id);
    }
    // Verify: bijection preserving edges both ways.
    let mut seen = vec![false; target.graph.n()];
    for &x in &map {
        assert!(!seen[x], "twist map must be a bijection");
        seen[x] = true;
    }
    assert_eq!(
        a.graph.m(),
        target.graph.m(),
        "twist endpoints must have equal edge counts"
    );
    for (x, y) in a.graph.edges() {
        assert!(
            target.graph.has_edge(map[x], map[y]),
            "twist map must preserve edges"
        );
    }
    Ok((target, map))
}

// ----- ordered variant with comparison relations -----

/// Ordered gadget construction over a cyclic group of 2-power order: the
/// derived vertices inherit a total preorder from the base order, and carry
/// comparison relations on shares. `same`/`succ` relate vertices in one
/// fiber whose shares on a common edge are equal / differ by one;
/// `cross[j]` relates vertices across an edge whose shares sum to `j`
/// (`cross[0]` is exactly the edge relation of the underlying graph).
#[derive(Clone, Debug)]
pub struct CfiStar {
    pub cfi: CfiGraph,
    pub base_order: OrderedGraph,
    pub same: Vec<(usize, usize)>,
    pub succ: Vec<(usize, usize)>,
    pub cross: Vec<Vec<(usize, usize)>>,
}

pub fn build_cfi_star(
    base: &OrderedGraph,
    group: &FiniteAbelianGroup,
    u_vec: &[GroupElement],
) -> Result<CfiStar, CfiError> {
    if group.rank() != 1 || !group.order().is_power_of_two() {
        return Err(CfiError::NotTwoPowerCyclic(group.to_string()));
    }
    let cfi = build_cfi(&base.graph, group, u_vec)?;
    let q = group.order();
    let mut same = Vec::new();
    let mut succ = Vec::new();
    let mut cross: Vec<Vec<(usize, usize)>> = vec![Vec::new(); q as usize];
    let mut fiber: Vec<Vec<usize>> = vec![Vec::new(); base.graph.n()];
    for (id, v) in cfi.verts.iter().enumerate() {
        fiber[v.origin].push(id);
    }
    for (u, v) in base.graph.edges() {
        let e = (u, v);
        for &w in &[u, v] {
            for &x in &fiber[w] {
                for &y in &fiber[w] {
                    let sx = cfi.share(x, e).0[0];
                    let sy = cfi.share(y, e).0[0];
                    if sx == sy {
                        same.push((x, y));
                    }
                    if (sx + 1) % q == sy {
                        succ.push((x, y));
                    }
                }
            }
        }
        for &x in &fiber[u] {
            for &y in &fiber[v] {
                let j = (cfi.share(x, e).0[0] + cfi.share(y, e).0[0]) % q;
                cross[j as usize].push((x, y));
                cross[j as usize].push((y, x));
            }
        }
    }
    for list in [&mut same, &mut succ] {
        list.sort_unstable();
        list.dedup();
    }
    for list in cross.iter_mut() {
        list.sort_unstable();
        list.dedup();
    }
    Ok(CfiStar {
        cfi,
        base_order: base.clone(),
        same,
        succ,
        cross,
    })
}

impl CfiStar {
    /// Relational structure: vertex colors are the ranks of the base
    /// vertices in the order (encoding the induced total preorder), with
    /// the share-comparison relations alongside.
    pub fn to_structure(&self) -> Structure {
        let n = self.cfi.graph.n();
        let rank_of: BTreeMap<usize, usize> = self
            .base_order
            .order
            .iter()
            .enumerate()
            .map(|(r, &v)| (v, r))
            .collect();
        let colors: Vec<u64> = self
            .cfi
            .verts
            .iter()
            .map(|v| rank_of[&v.origin] as u64)
            .collect();
        let mut rels = vec![
            Rel {
                name: "same".into(),
                pairs: self.same.iter().copied().collect(),
            },
            Rel {
                name: "succ".into(),
                pairs: self.succ.iter().copied().collect(),
            },
        ];
        for (j, list) in self.cross.iter().enumerate() {
            rels.push(Rel {
                name: format!("cross{j}"),
                pairs: list.iter().copied().collect(),
            });
        }
        Structure { n, colors, rels }
    }
}

// ----- structured planar family -----

/// A graph with a designated witness vertex and the structural parameters
/// it is built to satisfy.
#[derive(Clone, Debug)]
pub struct NiceWitness {
    pub graph: Graph,
    pub witness: usize,
    /// (radius, degree, cycle length, cut size) the family targets.
    pub params: (usize, usize, usize, usize),
}

/// Planar family member for parameter `n`: a tree of depth `4n` rooted at
/// the witness (root degree `2n`, inner degree `2n`), whose leaves form the
/// top row of a `2n`-row grid. Parameters `(n, 2n, 2n, n)`.
///
/// Sizes grow doubly fast in `n`; values above 2 are refused unless
/// `allow_large` is set.
pub fn build_nice_planar(n: usize, allow_large: bool) -> Result<NiceWitness, CfiError> {
    assert!(n >= 1, "parameter must be at least 1");
    if n > 2 && !allow_large {
        return Err(CfiError::FamilyTooLarge(n));
    }
    let depth = 4 * n;
    let root_children = 2 * n;
    let inner_children = 2 * n - 1;
    // Tree, breadth-first; level k holds 2n * (2n-1)^(k-1) vertices.
    let mut g_edges: Vec<(usize, usize)> = Vec::new();
    let mut level: Vec<usize> = vec![0];
    let mut next_id = 1usize;
    for d in 1..=depth {
        let children_per = if d == 1 { root_children } else { inner_children };
        let mut next_level = Vec::new();
        for &p in &level {
            for _ in 0..children_per {
                g_edges.push((p, next_id));
                next_level.push(next_id);
                next_id += 1;
            }
        }
        level = next_level;
    }
    let leaves = level;
    let width = leaves.len();
    let height = 2 * n;
    // Grid rows: row 0 is the leaves; rows 1..height are new vertices.
    let mut rows: Vec<Vec<usize>> = vec![leaves.clone()];
    for _ in 1..height {
        let row: Vec<usize> = (0..width)
            .map(|_| {
                let id = next_id;
                next_id += 1;
                id
            })
            .collect();
        rows.push(row);
    }
    for r in 0..height {
        for c in 0..width {
            if c + 1 < width {
                g_edges.push((rows[r][c], rows[r][c + 1]));
            }
            if r + 1 < height {
                g_edges.push((rows[r][c], rows[r + 1][c]));
            }
        }
    }
    let graph = Graph::from_edges(next_id, g_edges).expect("family edges are well-formed");
    Ok(NiceWitness {
        graph,
        witness: 0,
        params: (n, 2 * n, 2 * n, n),
    })
}

/// Closed-form vertex count of [`build_nice_planar`]: tree levels plus the
/// extra `2n - 1` grid rows.
pub fn nice_planar_vertex_count(n: usize) -> u128 {
    let b = (2 * n - 1) as u128;
    let mut tree: u128 = 1;
    let mut level: u128 = 2 * n as u128;
    for _ in 1..=4 * n {
        tree += level;
        level *= b;
    }
    let leaves = level / b;
    tree + (2 * n as u128 - 1) * leaves
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum NiceVerdict {
    Holds,
    Fails(String),
    /// A sub-check exceeded its budget; nothing is claimed either way.
    Inconclusive(String),
}

/// Checks the four structural conditions around a witness vertex:
/// (1) every vertex within distance `r` of the witness has degree >= `d`;
/// (2) every cycle through such a vertex has length >= `g`;
/// (3) removing up to `c` vertices never separates the remaining ball;
/// (4) removing `c'` <= `c` vertices leaves at most one component that is
///     not an induced subgraph of a grid with `c'` rows.
pub fn check_nice(
    graph: &Graph,
    witness: usize,
    r: usize,
    d: usize,
    g: usize,
    c: usize,
) -> NiceVerdict {
    let ball = ball_around(graph, witness, r);
    for &v in &ball {
        if graph.degree(v) < d {
            return NiceVerdict::Fails(format!("vertex {v} in the ball has degree {}", graph.degree(v)));
        }
    }
    for &v in &ball {
        if let Some(len) = graph.shortest_cycle_through(v) {
            if len < g {
                return NiceVerdict::Fails(format!(
                    "cycle of length {len} through ball vertex {v}"
                ));
            }
        }
    }
    // Conditions (3) and (4): enumerate removal sets up to size c.
    let n = graph.n();
    let mut subset_count: u128 = 0;
    for size in 0..=c {
        subset_count += binomial(n as u128, size as u128);
    }
    const SUBSET_BUDGET: u128 = 2_000_000;
    if subset_count > SUBSET_BUDGET {
        return NiceVerdict::Inconclusive(format!(
            "would need {subset_count} removal sets (budget {SUBSET_BUDGET})"
        ));
    }
    let mut removal = Vec::new();
    check_removals(graph, witness, &ball, c, 0, &mut removal).unwrap_or(NiceVerdict::Holds)
}

/// Recursive enumeration of removal sets; returns Some(verdict) on failure.
fn check_removals(
    graph: &Graph,
    witness: usize,
    ball: &[usize],
    c: usize,
    start: usize,
    removal: &mut Vec<usize>,
) -> Option<NiceVerdict> {
    if let Some(v) = check_one_removal(graph, witness, ball, removal) {
        return Some(v);
    }
    if removal.len() == c {
        return None;
    }
    for v in start..graph.n() {
        removal.push(v);
        if let Some(bad) = check_removals(graph, witness, ball, c, v + 1, removal) {
            removal.pop();
            return Some(bad);
        }
        removal.pop();
    }
    None
}

fn check_one_removal(
    graph: &Graph,
    _witness: usize,
    ball: &[usize],
    removal: &[usize],
) -> Option<NiceVerdict> {
    let gone: Vec<bool> = {
        let mut m = vec![false; graph.n()];
        for &v in removal {
            m[v] = true;
        }
        m
    };
    let keep: Vec<usize> = graph.vertices().filter(|&v| !gone[v]).collect();
    let (h, old_ids) = graph.induced(&keep);
    let comps = h.components();
    // (3): surviving ball vertices all in one component.
    let ball_left: Vec<usize> = ball.iter().copied().filter(|&v| !gone[v]).collect();
    if !ball_left.is_empty() {
        let pos: BTreeMap<usize, usize> = old_ids.iter().enumerate().map(|(i, &v)| (v, i)).collect();
        let mut comp_of = vec![usize::MAX; h.n()];
        for (ci, comp) in comps.iter().enumerate() {
            for &v in comp {
                comp_of[v] = ci;
            }
        }
        let first = comp_of[pos[&ball_left[0]]];
        for &v in &ball_left[1..] {
            if comp_of[pos[&v]] != first {
                return Some(NiceVerdict::Fails(format!(
                    "removing {removal:?} separates the witness ball"
                )));
            }
        }
    }
    // (4): at most one component is not an induced subgraph of a grid with
    // `removal.len()` rows.
    let rows = removal.len();
    let mut non_grid = 0;
    for comp in &comps {
        let (cg, _) = h.induced(comp);
        match embeds_in_grid(&cg, rows) {
            Some(true) => {}
            Some(false) => non_grid += 1,
            None => {
                return Some(NiceVerdict::Inconclusive(format!(
                    "grid embedding search budget exceeded after removing {removal:?}"
                )))
            }
        }
        if non_grid > 1 {
            return Some(NiceVerdict::Fails(format!(
                "removing {removal:?} leaves more than one non-grid component"
            )));
        }
    }
    None
}

/// Is `g` an induced subgraph of some grid with `rows` rows? Exact for
/// `rows <= 1`; a budgeted backtracking search above that (`None` when the
/// budget runs out).
fn embeds_in_grid(g: &Graph, rows: usize) -> Option<bool> {
    match rows {
        0 => Some(g.n() == 0),
        1 => Some(is_path_graph(g)),
        _ => embeds_in_grid_search(g, rows),
    }
}

fn is_path_graph(g: &Graph) -> bool {
    // Each component must be a path: connected, acyclic, max degree 2.
    if g.vertices().any(|v| g.degree(v) > 2) {
        return false;
    }
    g.girth().is_none()
}

fn embeds_in_grid_search(g: &Graph, rows: usize) -> Option<bool> {
    if g.n() == 0 {
        return Some(true);
    }
    if g.vertices().any(|v| g.degree(v) > 4) || !crate::planar::is_planar(g) {
        return Some(false);
    }
    let cols = g.n(); // enough columns for any embedding
    let mut assign: Vec<Option<(usize, usize)>> = vec![None; g.n()];
    let mut used: BTreeMap<(usize, usize), usize> = BTreeMap::new();
    let mut budget = 2_000_000usize;
    // Order vertices by a BFS so each new vertex has a placed neighbor.
    let order = bfs_order(g);
    let ok = place(g, &order, 0, rows, cols, &mut assign, &mut used, &mut budget)?;
    Some(ok)
}

fn bfs_order(g: &Graph) -> Vec<usize> {
    let mut order = Vec::new();
    let mut seen = vec![false; g.n()];
    for s in g.vertices() {
        if seen[s] {
            continue;
        }
        seen[s] = true;
        let mut q = std::collections::VecDeque::from([s]);
        while let Some(v) = q.pop_front() {
            order.push(v);
            for &w in g.neighbors(v) {
                if !seen[w] {
                    seen[w] = true;
                    q.push_back(w);
                }
            }
        }
    }
    order
}

#[allow(clippy::too_many_arguments)]
fn place(
    g: &Graph,
    order: &[usize],
    k: usize,
    rows: usize,
    cols: usize,
    assign: &mut Vec<Option<(usize, usize)>>,
    used: &mut BTreeMap<(usize, usize), usize>,
    budget: &mut usize,
) -> Option<bool> {
    if *budget == 0 {
        return None;
    }
    *budget -= 1;
    if k == order.len() {
        return Some(true);
    }
    let v = order[k];
    // Candidate cells: next to a placed neighbor, or anywhere in column
    // range for the first vertex of a component.
    let placed_neighbor = g.neighbors(v).iter().find(|&&w| assign[w].is_some());
    let candidates: Vec<(usize, usize)> = match placed_neighbor {
        Some(&w) => {
            let (r, c) = assign[w].unwrap();
            let mut cand = Vec::new();
            if r > 0 {
                cand.push((r - 1, c));
            }
            if r + 1 < rows {
                cand.push((r + 1, c));
            }
            if c > 0 {
                cand.push((r, c - 1));
            }
            if c + 1 < cols {
                cand.push((r, c + 1));
            }
            cand
        }
        None => (0..rows).flat_map(|r| (0..cols).map(move |c| (r, c))).collect(),
    };
    'cells: for cell in candidates {
        if used.contains_key(&cell) {
            continue;
        }
        // Induced condition: cell adjacency must match graph adjacency for
        // all placed vertices (grid neighbors only).
        let (r, c) = cell;
        let grid_neighbors = [
            (r.wrapping_sub(1), c),
            (r + 1, c),
            (r, c.wrapping_sub(1)),
            (r, c + 1),
        ];
        for gn in grid_neighbors {
            if let Some(&w) = used.get(&gn) {
                if !g.has_edge(v, w) {
                    continue 'cells;
                }
            }
        }
        // All placed graph-neighbors of v must be grid-adjacent to cell.
        let mut all_adjacent = true;
        for &w in g.neighbors(v) {
            if let Some((wr, wc)) = assign[w] {
                let adj = (wr == r && wc.abs_diff(c) == 1) || (wc == c && wr.abs_diff(r) == 1);
                if !adj {
                    all_adjacent = false;
                    break;
                }
            }
        }
        if !all_adjacent {
            continue;
        }
        assign[v] = Some(cell);
        used.insert(cell, v);
        match place(g, order, k + 1, rows, cols, assign, used, budget) {
            Some(true) => return Some(true),
            Some(false) => {}
            None => return None,
        }
        assign[v] = None;
        used.remove(&cell);
    }
    Some(false)
}

fn ball_around(g: &Graph, center: usize, r: usize) -> Vec<usize> {
    let mut dist = vec![usize::MAX; g.n()];
    dist[center] = 0;
    let mut q = std::collections::VecDeque::from([center]);
    let mut out = vec![center];
    while let Some(v) = q.pop_front() {
        if dist[v] == r {
            continue;
        }
        for &w in g.neighbors(v) {
            if dist[w] == usize::MAX {
                dist[w] = dist[v] + 1;
                out.push(w);
                q.push_back(w);
            }
        }
    }
    out.sort_unstable();
    out
}

fn binomial(n: u128, k: u128) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::group::FiniteAbelianGroup;

    fn z(n: u64) -> FiniteAbelianGroup {
        FiniteAbelianGroup::cyclic(n)
    }

    fn delta(base: &Graph, group: &FiniteAbelianGroup, v: usize) -> Vec<GroupElement> {
        let mut u = zero_u(base, group);
        u[v] = group.from_index(1);
        u
    }

    #[test]
    fn triangle_gadget_over_z2_splits_or_twists() {
        let base = Graph::complete(3);
        let group = z(2);
        let zero = build_cfi(&base, &group, &zero_u(&base, &group)).unwrap();
        assert_eq!(zero.graph.n(), 6);
        assert_eq!(zero.graph.components().len(), 2);
        assert_eq!(zero.graph.girth(), Some(3));

        let twisted = build_cfi(&base, &group, &delta(&base, &group, 0)).unwrap();
        assert_eq!(twisted.graph.n(), 6);
        assert!(twisted.graph.is_connected());
        assert_eq!(twisted.graph.girth(), Some(6));
    }

    #[test]
    fn vertex_count_matches_closed_form() {
        for (base, group) in [
            (Graph::complete(4), z(2)),
            (Graph::complete(4), z(4)),
            (Graph::star(3), FiniteAbelianGroup::parse("z2xz2").unwrap()),
            (Graph::path(3), z(3)),
        ] {
            let u = zero_u(&base, &group);
            let cfi = build_cfi(&base, &group, &u).unwrap();
            assert_eq!(cfi.graph.n() as u128, expected_vertex_count(&base, &group, &u));
        }
        // K4 over Z4: 4 * 4^2 = 64.
        let cfi = build_cfi(&Graph::complete(4), &z(4), &zero_u(&Graph::complete(4), &z(4))).unwrap();
        assert_eq!(cfi.graph.n(), 64);
    }

    #[test]
    fn degree_zero_base_vertex_needs_zero_target() {
        let mut base = Graph::new(3);
        base.add_edge(0, 1).unwrap();
        let group = z(2);
        let zero = build_cfi(&base, &group, &zero_u(&base, &group)).unwrap();
        assert_eq!(zero.graph.n(), 3); // 1 + 1 + isolated contributes 1
        let bad = build_cfi(&base, &group, &delta(&base, &group, 2)).unwrap();
        assert_eq!(bad.graph.n(), 2); // empty fiber for the isolated vertex
    }

    #[test]
    fn walk_twist_is_a_verified_isomorphism() {
        let base = Graph::complete(4);
        let group = z(4);
        let a = build_cfi(&base, &group, &zero_u(&base, &group)).unwrap();
        let g1 = group.from_index(1);
        let (b, map) = twist_along_walk(&a, &[0, 1, 2], &g1).unwrap();
        // Target vector: -1 at walk start, +1 at walk end.
        assert_eq!(b.u_vec[0], group.from_index(3));
        assert_eq!(b.u_vec[2], group.from_index(1));
        assert!(group.is_zero(&b.u_vec[1]));
        assert_eq!(map.len(), a.graph.n());
        // Closed walk: an automorphism of the vertex vector.
        let (c, _) = twist_along_walk(&a, &[0, 1, 2, 0], &g1).unwrap();
        assert_eq!(c.u_vec, a.u_vec);
    }

    #[test]
    fn equal_sum_vectors_give_verified_isomorphisms() {
        let base = Graph::complete(3);
        let group = z(4);
        let mut u = zero_u(&base, &group);
        u[0] = group.from_index(3);
        u[1] = group.from_index(2);
        u[2] = group.from_index(3); // total 8 = 0 mod 4
        let a = build_cfi(&base, &group, &u).unwrap();
        let (b, map) = equal_sum_isomorphism(&a, &zero_u(&base, &group)).unwrap();
        assert!(b.u_vec.iter().all(|x| group.is_zero(x)));
        assert_eq!(map.len(), a.graph.n());

        let mut bad = zero_u(&base, &group);
        bad[1] = group.from_index(1);
        assert!(matches!(
            equal_sum_isomorphism(&a, &bad),
            Err(CfiError::SumMismatch)
        ));
    }

    #[test]
    fn ordered_variant_relations_have_expected_shape() {
        let base = OrderedGraph::by_id(Graph::complete(3));
        let group = z(2);
        let star = build_cfi_star(&base, &group, &zero_u(&base.graph, &group)).unwrap();
        // cross[0] doubles each underlying edge as two ordered pairs.
        assert_eq!(star.cross[0].len(), 2 * star.cfi.graph.m());
        for &(x, y) in &star.cross[0] {
            assert!(star.cfi.graph.has_edge(x, y));
        }
        // Within a fiber every vertex is `same` as itself on each edge.
        for (id, _) in star.cfi.verts.iter().enumerate() {
            assert!(star.same.contains(&(id, id)));
        }
        // Rejects groups that are not cyclic of 2-power order.
        assert!(build_cfi_star(&base, &z(3), &zero_u(&base.graph, &z(3))).is_err());
        let klein = FiniteAbelianGroup::parse("z2xz2").unwrap();
        assert!(build_cfi_star(&base, &klein, &zero_u(&base.graph, &klein)).is_err());
    }

    #[test]
    fn ordered_variant_structure_distinguishes_twists() {
        use crate::canon::{iso_search, IsoVerdict};
        let base = OrderedGraph::by_id(Graph::complete(3));
        let group = z(4);
        let zero = build_cfi_star(&base, &group, &zero_u(&base.graph, &group)).unwrap();
        let twisted =
            build_cfi_star(&base, &group, &delta(&base.graph, &group, 1)).unwrap();
        match iso_search(&zero.to_structure(), &twisted.to_structure(), 1_000_000) {
            IsoVerdict::NonIso => {}
            other => panic!("expected ordered structures to differ, got {other:?}"),
        }
    }

    #[test]
    fn planar_family_smallest_member() {
        let nice = build_nice_planar(1, false).unwrap();
        assert_eq!(nice.graph.n(), 11);
        assert_eq!(nice.graph.n() as u128, nice_planar_vertex_count(1));
        assert_eq!(nice.params, (1, 2, 2, 1));
        assert!(crate::planar::is_planar(&nice.graph));
        assert_eq!(check_nice(&nice.graph, nice.witness, 1, 2, 2, 1), NiceVerdict::Holds);
        assert!(build_nice_planar(3, false).is_err());
    }

    #[test]
    fn niceness_checker_rejects_bad_witnesses() {
        // A path fails the degree condition at its ends for d = 2... the
        // witness ball of radius 1 around the middle contains degree-2
        // vertices only, so pick the full path with r large.
        let p = Graph::path(5);
        assert!(matches!(
            check_nice(&p, 0, 1, 2, 2, 0),
            NiceVerdict::Fails(_)
        ));
        // Triangle: cycle of length 3 through every vertex, fails g = 4.
        let t = Graph::complete(3);
        assert!(matches!(
            check_nice(&t, 0, 0, 2, 4, 0),
            NiceVerdict::Fails(_)
        ));
        // Two triangles joined by a cut vertex: removing it separates the
        // radius-2 ball.
        let mut g = Graph::new(5);
        for (u, v) in [(0, 1), (0, 2), (1, 2), (2, 3), (2, 4), (3, 4)] {
            g.add_edge(u, v).unwrap();
        }
        assert!(matches!(
            check_nice(&g, 0, 2, 2, 3, 1),
            NiceVerdict::Fails(_)
        ));
    }

    #[test]
    fn grid_embedding_checks() {
        assert_eq!(embeds_in_grid(&Graph::path(6), 1), Some(true));
        assert_eq!(embeds_in_grid(&Graph::cycle(4), 1), Some(false));
        assert_eq!(embeds_in_grid(&Graph::cycle(4), 2), Some(true));
        assert_eq!(embeds_in_grid(&Graph::star(4), 2), Some(false)); // needs 3 rows
        assert_eq!(embeds_in_grid(&Graph::star(4), 3), Some(true));
        assert_eq!(embeds_in_grid(&Graph::complete(3), 2), Some(false)); // triangles never embed
    }
}
