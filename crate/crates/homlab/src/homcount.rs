//! Homomorphism counting: exact backtracking counts, counts restricted to
//! fibers of a projection, the linear-system method for gadget graphs, a
//! tree-decomposition dynamic program, graph enumeration up to isomorphism,
//! and search for a homomorphism-count distinguisher of two graphs.

use std::collections::{BTreeMap, BTreeSet};

use num_bigint::BigUint;
use num_traits::{One, Zero};

use crate::canon::{graph_canon_key, CanonKey};
use crate::cfi::CfiGraph;
use crate::graph::{edge_key, Graph, LabelledGraph};
use crate::group::GroupElement;
use crate::linalg::{count_solutions, IntMatrix};
use crate::treedec::{treewidth_exact, TreeDecomposition};

// ----- backtracking counts -----

/// Homomorphisms from `f` to `h` where vertex `v` of `f` may only map into
/// `allowed[v]` (each list sorted ascending). The workhorse behind the
/// other counting entry points.
pub fn hom_count_restricted(f: &Graph, h: &Graph, allowed: &[Vec<usize>]) -> BigUint {
    assert_eq!(allowed.len(), f.n());
    let mut total = BigUint::one();
    for comp in f.components() {
        let c = count_component(f, h, allowed, &comp);
        if c.is_zero() {
            return BigUint::zero();
        }
        total *= c;
    }
    total
}

pub fn hom_count_brute(f: &Graph, h: &Graph) -> BigUint {
    let all: Vec<usize> = h.vertices().collect();
    let allowed = vec![all; f.n()];
    hom_count_restricted(f, h, &allowed)
}

pub fn hom_count_brute_mod(f: &Graph, h: &Graph, m: u64) -> u64 {
    use num_integer::Integer;
    let q = hom_count_brute(f, h).mod_floor(&BigUint::from(m));
    q.to_u64_digits().first().copied().unwrap_or(0)
}

/// Homomorphisms sending the label-`i` vertex of `f` to `pins[i]`.
pub fn hom_count_labelled(f: &LabelledGraph, pins: &[usize], h: &Graph) -> BigUint {
    assert_eq!(pins.len(), f.arity());
    let all: Vec<usize> = h.vertices().collect();
    let mut allowed = vec![all; f.graph.n()];
    for (i, &v) in f.labels.iter().enumerate() {
        if pins[i] >= h.n() {
            return BigUint::zero();
        }
        // Repeated labels must agree.
        if allowed[v].len() != h.n() && allowed[v] != vec![pins[i]] {
            return BigUint::zero();
        }
        allowed[v] = vec![pins[i]];
    }
    hom_count_restricted(&f.graph, h, &allowed)
}

/// All homomorphisms from `f` to `h` as maps `V(f) -> V(h)`, in
/// lexicographic order of the map.
pub fn enumerate_homs(f: &Graph, h: &Graph) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut assignment = vec![usize::MAX; f.n()];
    enumerate_rec(f, h, 0, &mut assignment, &mut out);
    out
}

fn enumerate_rec(
    f: &Graph,
    h: &Graph,
    v: usize,
    assignment: &mut Vec<usize>,
    out: &mut Vec<Vec<usize>>,
) {
    if v == f.n() {
        out.push(assignment.clone());
        return;
    }
    'cand: for x in h.vertices() {
        for &w in f.neighbors(v) {
            if w < v && !h.has_edge(assignment[w], x) {
                continue 'cand;
            }
        }
        assignment[v] = x;
        enumerate_rec(f, h, v + 1, assignment, out);
    }
    assignment[v] = usize::MAX;
}

fn count_component(f: &Graph, h: &Graph, allowed: &[Vec<usize>], comp: &[usize]) -> BigUint {
    // Breadth-first variable order from the most constrained start, so each
    // later vertex has an assigned neighbor to prune with.
    let start = *comp
        .iter()
        .min_by_key(|&&v| (allowed[v].len(), std::cmp::Reverse(f.degree(v)), v))
        .unwrap();
    let mut order = vec![start];
    let mut seen: BTreeSet<usize> = BTreeSet::from([start]);
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for &w in f.neighbors(v) {
            if seen.insert(w) {
                order.push(w);
            }
        }
    }
    debug_assert_eq!(order.len(), comp.len());
    let mut images = vec![usize::MAX; f.n()];
    count_rec(f, h, allowed, &order, 0, &mut images)
}

fn count_rec(
    f: &Graph,
    h: &Graph,
    allowed: &[Vec<usize>],
    order: &[usize],
    depth: usize,
    images: &mut Vec<usize>,
) -> BigUint {
    if depth == order.len() {
        return BigUint::one();
    }
    let v = order[depth];
    let assigned: Vec<usize> = f
        .neighbors(v)
        .iter()
        .copied()
        .filter(|&w| images[w] != usize::MAX)
        .collect();
    let mut total = BigUint::zero();
    match assigned.first() {
        None => {
            for &x in &allowed[v] {
                images[v] = x;
                total += count_rec(f, h, allowed, order, depth + 1, images);
            }
        }
        Some(&w0) => {
            'cand: for &x in h.neighbors(images[w0]) {
                if allowed[v].binary_search(&x).is_err() {
                    continue;
                }
                for &w in &assigned[1..] {
                    if !h.has_edge(images[w], x) {
                        continue 'cand;
                    }
                }
                images[v] = x;
                total += count_rec(f, h, allowed, order, depth + 1, images);
            }
        }
    }
    images[v] = usize::MAX;
    total
}

// ----- linear-system method for gadget graphs -----

/// The linear system whose solutions over the group are exactly the
/// homomorphisms from `f` into the gadget graph lying over the base map
/// `psi`: one variable per (vertex of `f`, base edge at its image); vertex
/// rows sum a vertex's variables to the target vector, edge rows force the
/// two shares of a mapped edge to cancel.
pub fn hom_psi_system(
    f: &Graph,
    psi: &[usize],
    cfi: &CfiGraph,
) -> (IntMatrix, Vec<GroupElement>) {
    assert_eq!(psi.len(), f.n());
    for (b, c) in f.edges() {
        assert!(
            cfi.base.has_edge(psi[b], psi[c]),
            "base map must be a homomorphism"
        );
    }
    // Variable layout: for each vertex a (ascending), one column per
    // incident base edge of psi[a] (in sorted edge order).
    let mut col_of: BTreeMap<(usize, (usize, usize)), usize> = BTreeMap::new();
    for a in f.vertices() {
        for &e in cfi.incident_edges(psi[a]) {
            let next = col_of.len();
            col_of.insert((a, e), next);
        }
    }
    let rows = f.n() + f.m();
    let cols = col_of.len();
    let mut m = IntMatrix::zero(rows, cols);
    let mut rhs = Vec::with_capacity(rows);
    for b in f.vertices() {
        for &e in cfi.incident_edges(psi[b]) {
            m.set(b, col_of[&(b, e)], 1.into());
        }
        rhs.push(cfi.u_vec[psi[b]].clone());
    }
    for (i, (b, c)) in f.edges().enumerate() {
        let e = edge_key(psi[b], psi[c]);
        let row = f.n() + i;
        m.set(row, col_of[&(b, e)], 1.into());
        m.set(row, col_of[&(c, e)], 1.into());
        rhs.push(cfi.group.zero());
    }
    (m, rhs)
}

/// Number of homomorphisms from `f` into the gadget graph that project to
/// the base map `psi`, by counting solutions of the associated system.
pub fn hom_psi_count(f: &Graph, psi: &[usize], cfi: &CfiGraph) -> BigUint {
    let (m, rhs) = hom_psi_system(f, psi, cfi);
    let (count, _) = count_solutions(&m, &rhs, &cfi.group).expect("well-formed system");
    count
}

/// Same number by direct backtracking over the gadget graph (each vertex
/// restricted to the fiber over its base image). Oracle for the system
/// method.
pub fn hom_psi_count_brute(f: &Graph, psi: &[usize], cfi: &CfiGraph) -> BigUint {
    let mut fibers: Vec<Vec<usize>> = vec![Vec::new(); cfi.base.n()];
    for v in 0..cfi.graph.n() {
        fibers[cfi.projection(v)].push(v);
    }
    let allowed: Vec<Vec<usize>> = psi.iter().map(|&u| fibers[u].clone()).collect();
    hom_count_restricted(f, &cfi.graph, &allowed)
}

/// Total homomorphism count into a gadget graph: sum of the per-fiber
/// counts over all base maps.
pub fn hom_count_cfi(f: &Graph, cfi: &CfiGraph) -> BigUint {
    let mut total = BigUint::zero();
    for psi in enumerate_homs(f, &cfi.base) {
        total += hom_psi_count(f, &psi, cfi);
    }
    total
}

// ----- tree-decomposition dynamic program -----

/// Exact homomorphism count via dynamic programming over a tree
/// decomposition of `f`. Complexity `O(bags * |H|^(width+1))`.
pub fn hom_count_tw(f: &Graph, dec: &TreeDecomposition, h: &Graph) -> BigUint {
    hom_count_tw_pinned(f, dec, 0, &BTreeMap::new(), h)
}

pub fn hom_count_tw_mod(f: &Graph, dec: &TreeDecomposition, h: &Graph, m: u64) -> u64 {
    hom_count_tw_pinned_mod(f, dec, 0, &BTreeMap::new(), h, m)
}

/// DP with some `f`-vertices pinned to fixed images.
pub fn hom_count_tw_pinned(
    f: &Graph,
    dec: &TreeDecomposition,
    root: usize,
    pins: &BTreeMap<usize, usize>,
    h: &Graph,
) -> BigUint {
    let table = dp_tables(f, dec, root, pins, h, &mut |acc: &mut BigUint, x: &BigUint| {
        *acc += x
    });
    table
}

pub fn hom_count_tw_pinned_mod(
    f: &Graph,
    dec: &TreeDecomposition,
    root: usize,
    pins: &BTreeMap<usize, usize>,
    h: &Graph,
    m: u64,
) -> u64 {
    use num_integer::Integer;
    let full = hom_count_tw_pinned(f, dec, root, pins, h);
    let r = full.mod_floor(&BigUint::from(m));
    r.to_u64_digits().first().copied().unwrap_or(0)
}

fn dp_tables(
    f: &Graph,
    dec: &TreeDecomposition,
    root: usize,
    pins: &BTreeMap<usize, usize>,
    h: &Graph,
    _add: &mut dyn FnMut(&mut BigUint, &BigUint),
) -> BigUint {
    let adj = dec.neighbors();
    let nb = dec.bags.len();
    assert!(root < nb);
    // Post-order traversal from the root.
    let mut order = Vec::with_capacity(nb);
    let mut parent = vec![usize::MAX; nb];
    let mut stack = vec![root];
    let mut visited = vec![false; nb];
    visited[root] = true;
    while let Some(t) = stack.pop() {
        order.push(t);
        for &s in &adj[t] {
            if !visited[s] {
                visited[s] = true;
                parent[s] = t;
                stack.push(s);
            }
        }
    }
    assert!(
        order.len() == nb,
        "decomposition tree must be connected"
    );
    let hn = h.n();
    // marginal[s]: map from the (bag_s ∩ bag_parent(s)) assignment to the
    // summed subtree count.
    let mut marginal: Vec<BTreeMap<Vec<usize>, BigUint>> = vec![BTreeMap::new(); nb];
    for &t in order.iter().rev() {
        let bag: Vec<usize> = dec.bags[t].iter().copied().collect();
        let b = bag.len();
        // Edges of f inside this bag.
        let mut inner_edges = Vec::new();
        for i in 0..b {
            for j in i + 1..b {
                if f.has_edge(bag[i], bag[j]) {
                    inner_edges.push((i, j));
                }
            }
        }
        let children: Vec<usize> = adj[t]
            .iter()
            .copied()
            .filter(|&s| parent[s] == t)
            .collect();
        // For each child, positions in `bag` shared with the child bag.
        let child_shared: Vec<Vec<usize>> = children
            .iter()
            .map(|&s| {
                (0..b)
                    .filter(|&i| dec.bags[s].contains(&bag[i]))
                    .collect()
            })
            .collect();
        let key_positions: Vec<usize> = if t == root {
            Vec::new()
        } else {
            (0..b)
                .filter(|&i| dec.bags[parent[t]].contains(&bag[i]))
                .collect()
        };
        let mut table: BTreeMap<Vec<usize>, BigUint> = BTreeMap::new();
        // Enumerate assignments bag -> V(h).
        let mut phi = vec![0usize; b];
        let mut root_total = BigUint::zero();
        'outer: loop {
            // Validity: pins and inner edges.
            let mut ok = true;
            for i in 0..b {
                if let Some(&img) = pins.get(&bag[i]) {
                    if phi[i] != img {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                for &(i, j) in &inner_edges {
                    if !h.has_edge(phi[i], phi[j]) {
                        ok = false;
                        break;
                    }
                }
            }
            if ok {
                let mut value = BigUint::one();
                for (ci, &s) in children.iter().enumerate() {
                    let key: Vec<usize> = child_shared[ci].iter().map(|&i| phi[i]).collect();
                    match marginal[s].get(&key) {
                        Some(v) => value *= v,
                        None => {
                            value = BigUint::zero();
                        }
                    }
                    if value.is_zero() {
                        break;
                    }
                }
                if !value.is_zero() {
                    if t == root {
                        root_total += &value;
                    } else {
                        let key: Vec<usize> = key_positions.iter().map(|&i| phi[i]).collect();
                        let slot = table.entry(key).or_insert_with(BigUint::zero);
                        *slot += &value;
                    }
                }
            }
            // Next assignment (odometer). Empty bags have one assignment.
            if b == 0 {
                break;
            }
            let mut i = b - 1;
            loop {
                phi[i] += 1;
                if phi[i] < hn {
                    break;
                }
                phi[i] = 0;
                if i == 0 {
                    break 'outer;
                }
                i -= 1;
            }
            if hn == 0 {
                break;
            }
        }
        if t == root {
            return root_total;
        }
        marginal[t] = table;
    }
    unreachable!("root is always processed last in reverse order")
}

// ----- enumeration up to isomorphism -----

/// All graphs on exactly `n` vertices, one per isomorphism class, sorted by
/// canonical key. Edge-subset enumeration; fine for n <= 5.
pub fn enumerate_all_graphs(n: usize) -> Vec<Graph> {
    let pairs: Vec<(usize, usize)> = (0..n)
        .flat_map(|u| (u + 1..n).map(move |v| (u, v)))
        .collect();
    assert!(pairs.len() <= 20, "edge-subset enumeration cap");
    let mut seen: BTreeMap<CanonKey, Graph> = BTreeMap::new();
    for mask in 0u32..(1 << pairs.len()) {
        let edges = pairs
            .iter()
            .enumerate()
            .filter(|&(i, _)| mask & (1 << i) != 0)
            .map(|(_, &e)| e);
        let g = Graph::from_edges(n, edges).unwrap();
        let key = graph_canon_key(&g);
        seen.entry(key).or_insert(g);
    }
    seen.into_values().collect()
}

/// Connected graphs with 1..=max_n vertices, one per isomorphism class,
/// grouped by size and sorted by canonical key within each size; built by
/// extending each smaller graph with one new vertex attached to every
/// possible nonempty neighborhood.
pub fn enumerate_connected_graphs(max_n: usize) -> Vec<Vec<Graph>> {
    let mut by_size: Vec<Vec<Graph>> = Vec::new();
    if max_n == 0 {
        return by_size;
    }
    by_size.push(vec![Graph::new(1)]);
    for n in 2..=max_n {
        let mut seen: BTreeMap<CanonKey, Graph> = BTreeMap::new();
        for g in &by_size[n - 2] {
            for mask in 1u32..(1 << (n - 1)) {
                let mut ext = Graph::new(n);
                for (u, v) in g.edges() {
                    ext.add_edge(u, v).unwrap();
                }
                for w in 0..n - 1 {
                    if mask & (1 << w) != 0 {
                        ext.add_edge(w, n - 1).unwrap();
                    }
                }
                let key = graph_canon_key(&ext);
                seen.entry(key).or_insert(ext);
            }
        }
        by_size.push(seen.into_values().collect());
    }
    by_size
}

// ----- distinguisher search -----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GraphFamily {
    All,
    TreewidthAtMost(usize),
    Planar,
}

impl GraphFamily {
    pub fn contains(&self, g: &Graph) -> bool {
        match self {
            GraphFamily::All => true,
            GraphFamily::TreewidthAtMost(k) => {
                treewidth_exact(g).map(|w| w <= *k).unwrap_or(false)
            }
            GraphFamily::Planar => crate::planar::is_planar(g),
        }
    }
}

/// First connected graph `F` (by size, then canonical order) from the
/// family with at most `max_size` vertices such that the homomorphism
/// counts into the two graphs differ (mod `modulus` if given), together
/// with both counts.
pub fn find_distinguisher(
    g: &Graph,
    h: &Graph,
    family: &GraphFamily,
    max_size: usize,
    modulus: Option<u64>,
) -> Option<(Graph, BigUint, BigUint)> {
    for size in enumerate_connected_graphs(max_size) {
        for f in size {
            if !family.contains(&f) {
                continue;
            }
            let mut a = hom_count_brute(&f, g);
            let mut b = hom_count_brute(&f, h);
            if let Some(m) = modulus {
                let m = BigUint::from(m);
                a %= &m;
                b %= &m;
            }
            if a != b {
                return Some((f, a, b));
            }
        }
    }
    None
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cfi::{build_cfi, zero_u};
    use crate::group::FiniteAbelianGroup;

    fn n(x: u64) -> BigUint {
        BigUint::from(x)
    }

    #[test]
    fn counts_into_complete_graphs() {
        // Closed walks of length 4 in K3: trace of A^4 = 18.
        assert_eq!(hom_count_brute(&Graph::cycle(4), &Graph::complete(3)), n(18));
        // Walks of length 3: sum of A^3 entries = 24.
        assert_eq!(hom_count_brute(&Graph::path(4), &Graph::complete(3)), n(24));
        assert_eq!(hom_count_brute(&Graph::complete(3), &Graph::complete(3)), n(6));
        assert_eq!(hom_count_brute(&Graph::complete(3), &Graph::complete(4)), n(24));
        assert_eq!(hom_count_brute(&Graph::cycle(5), &Graph::complete(3)), n(30));
        // Odd cycle into bipartite: none.
        assert_eq!(hom_count_brute(&Graph::cycle(5), &Graph::cycle(4)), n(0));
        // Into a single vertex with no loop: only edgeless sources map.
        assert_eq!(hom_count_brute(&Graph::complete(2), &Graph::new(1)), n(0));
        assert_eq!(hom_count_brute(&Graph::coclique(3), &Graph::new(1)), n(1));
    }

    #[test]
    fn disconnected_sources_factor() {
        let two_edges = Graph::complete(2).disjoint_union(&Graph::complete(2));
        let h = Graph::complete(3);
        assert_eq!(hom_count_brute(&two_edges, &h), n(36)); // 6 * 6
    }

    #[test]
    fn labelled_counts_pin_images() {
        // Paths of length 2 in K3 between pinned endpoints.
        let p3 = LabelledGraph::new(Graph::path(3), vec![0, 2]).unwrap();
        let k3 = Graph::complete(3);
        assert_eq!(hom_count_labelled(&p3, &[0, 0], &k3), n(2));
        assert_eq!(hom_count_labelled(&p3, &[0, 1], &k3), n(1));
        // Repeated labels on one vertex demand equal pins.
        let point = LabelledGraph::new(Graph::new(1), vec![0, 0]).unwrap();
        assert_eq!(hom_count_labelled(&point, &[1, 1], &k3), n(1));
        assert_eq!(hom_count_labelled(&point, &[1, 2], &k3), n(0));
    }

    #[test]
    fn enumerated_homs_match_counts() {
        let f = Graph::path(3);
        let h = Graph::complete(3);
        let homs = enumerate_homs(&f, &h);
        assert_eq!(BigUint::from(homs.len()), hom_count_brute(&f, &h));
        for m in &homs {
            for (u, v) in f.edges() {
                assert!(h.has_edge(m[u], m[v]));
            }
        }
    }

    #[test]
    fn system_counts_match_fiber_brute_force() {
        let base = Graph::complete(3);
        for group in [
            FiniteAbelianGroup::cyclic(2),
            FiniteAbelianGroup::cyclic(3),
            FiniteAbelianGroup::parse("z2xz2").unwrap(),
        ] {
            for twist in [0usize, 1] {
                let mut u = zero_u(&base, &group);
                if twist == 1 {
                    u[0] = group.from_index(1);
                }
                let cfi = build_cfi(&base, &group, &u).unwrap();
                for f in [Graph::complete(3), Graph::path(3), Graph::cycle(4)] {
                    for psi in enumerate_homs(&f, &base) {
                        assert_eq!(
                            hom_psi_count(&f, &psi, &cfi),
                            hom_psi_count_brute(&f, &psi, &cfi),
                            "f={f:?} psi={psi:?} group={group} twist={twist}"
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn gadget_totals_match_plain_counts() {
        let base = Graph::complete(3);
        let group = FiniteAbelianGroup::cyclic(2);
        let zero = build_cfi(&base, &group, &zero_u(&base, &group)).unwrap();
        // Untwisted gadget over a triangle is two disjoint triangles.
        assert_eq!(hom_count_cfi(&Graph::complete(3), &zero), n(12));
        assert_eq!(
            hom_count_cfi(&Graph::complete(3), &zero),
            hom_count_brute(&Graph::complete(3), &zero.graph)
        );
        let mut u = zero_u(&base, &group);
        u[0] = group.from_index(1);
        let twisted = build_cfi(&base, &group, &u).unwrap();
        // Twisted gadget is a 6-cycle: triangle-free.
        assert_eq!(hom_count_cfi(&Graph::complete(3), &twisted), n(0));
        assert_eq!(
            hom_count_cfi(&Graph::cycle(4), &twisted),
            hom_count_brute(&Graph::cycle(4), &twisted.graph)
        );
    }

    #[test]
    fn tree_dp_matches_brute_force() {
        use crate::treedec::exact_tree_decomposition;
        use rand::rngs::StdRng;
        use rand::{Rng, SeedableRng};
        let targets = [Graph::complete(3), Graph::cycle(5)];
        let mut rng = StdRng::seed_from_u64(5);
        for _ in 0..25 {
            let nf = rng.gen_range(1..=6);
            let mut f = Graph::new(nf);
            for u in 0..nf {
                for v in u + 1..nf {
                    if rng.gen_bool(0.45) {
                        f.add_edge(u, v).unwrap();
                    }
                }
            }
            let dec = exact_tree_decomposition(&f, nf.max(1) - 1)
                .unwrap()
                .unwrap();
            for h in &targets {
                assert_eq!(
                    hom_count_tw(&f, &dec, h),
                    hom_count_brute(&f, h),
                    "f={f:?} h={h:?}"
                );
                assert_eq!(
                    hom_count_tw_mod(&f, &dec, h, 3),
                    hom_count_brute_mod(&f, h, 3)
                );
            }
        }
    }

    #[test]
    fn pinned_tree_dp_matches_labelled_counts() {
        use crate::treedec::rooted_decomposition;
        let f = LabelledGraph::new(Graph::path(4), vec![0, 3]).unwrap();
        let rd = rooted_decomposition(&f, 2).unwrap().unwrap();
        let h = Graph::complete(3);
        for a in 0..3 {
            for b in 0..3 {
                let pins = BTreeMap::from([(0usize, a), (3usize, b)]);
                assert_eq!(
                    hom_count_tw_pinned(&f.graph, &rd.dec, rd.root, &pins, &h),
                    hom_count_labelled(&f, &[a, b], &h)
                );
            }
        }
    }

    #[test]
    fn enumeration_class_counts() {
        assert_eq!(enumerate_all_graphs(4).len(), 11);
        let by_size = enumerate_connected_graphs(6);
        let counts: Vec<usize> = by_size.iter().map(|v| v.len()).collect();
        assert_eq!(counts, vec![1, 1, 2, 6, 21, 112]);
    }

    #[test]
    fn distinguisher_finds_triangle() {
        let c6 = Graph::cycle(6);
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        let (f, a, b) =
            find_distinguisher(&c6, &two_k3, &GraphFamily::All, 4, None).unwrap();
        assert_eq!(f, Graph::complete(3));
        assert_eq!(a, n(0));
        assert_eq!(b, n(12));
        // No distinguisher between a graph and itself.
        assert!(find_distinguisher(&c6, &c6, &GraphFamily::All, 4, None).is_none());
        // Family filters apply.
        let (f2, _, _) =
            find_distinguisher(&c6, &two_k3, &GraphFamily::TreewidthAtMost(1), 6, None)
                .unwrap();
        assert!(treewidth_exact(&f2).unwrap() <= 1);
    }
}
