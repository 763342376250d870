//! Color refinement, canonical forms, and isomorphism/automorphism search
//! for finite relational structures with binary relations.
//!
//! A [`Structure`] is a vertex set `0..n` with initial vertex colors and a
//! list of named binary relations (undirected edges are stored as both
//! ordered pairs). All algorithms are deterministic: refinement ids are
//! assigned in sorted-signature order, so they are invariant under
//! isomorphism and comparable across structures.

use std::collections::{BTreeMap, BTreeSet};

use crate::graph::{Graph, LabelledGraph};

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Rel {
    pub name: String,
    pub pairs: BTreeSet<(usize, usize)>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Structure {
    pub n: usize,
    /// Initial colors; isomorphisms must preserve these.
    pub colors: Vec<u64>,
    pub rels: Vec<Rel>,
}

impl Structure {
    pub fn from_graph(g: &Graph) -> Self {
        Self::from_graph_with_colors(g, vec![0; g.n()])
    }

    pub fn from_graph_with_colors(g: &Graph, colors: Vec<u64>) -> Self {
        assert_eq!(colors.len(), g.n());
        let mut pairs = BTreeSet::new();
        for (u, v) in g.edges() {
            pairs.insert((u, v));
            pairs.insert((v, u));
        }
        Structure {
            n: g.n(),
            colors,
            rels: vec![Rel {
                name: "E".into(),
                pairs,
            }],
        }
    }

    /// Labelled graph as a structure: the color of a vertex is the bitmask
    /// of label positions it carries, so isomorphisms preserve each label
    /// position individually.
    pub fn from_labelled(f: &LabelledGraph) -> Self {
        assert!(f.arity() <= 63, "too many label positions for a bitmask");
        let mut colors = vec![0u64; f.graph.n()];
        for (i, &v) in f.labels.iter().enumerate() {
            colors[v] |= 1 << i;
        }
        Self::from_graph_with_colors(&f.graph, colors)
    }

    pub fn disjoint_union(&self, other: &Structure) -> Structure {
        let names_a: Vec<&str> = self.rels.iter().map(|r| r.name.as_str()).collect();
        let names_b: Vec<&str> = other.rels.iter().map(|r| r.name.as_str()).collect();
        assert_eq!(names_a, names_b, "relation vocabularies must match");
        let mut colors = self.colors.clone();
        colors.extend_from_slice(&other.colors);
        let rels = self
            .rels
            .iter()
            .zip(&other.rels)
            .map(|(ra, rb)| {
                let mut pairs = ra.pairs.clone();
                for &(u, v) in &rb.pairs {
                    pairs.insert((u + self.n, v + self.n));
                }
                Rel {
                    name: ra.name.clone(),
                    pairs,
                }
            })
            .collect();
        Structure {
            n: self.n + other.n,
            colors,
            rels,
        }
    }

    fn out_lists(&self) -> Vec<Vec<Vec<usize>>> {
        let mut out = vec![vec![Vec::new(); self.n]; self.rels.len()];
        for (ri, r) in self.rels.iter().enumerate() {
            for &(u, v) in &r.pairs {
                out[ri][u].push(v);
            }
        }
        out
    }

    fn in_lists(&self) -> Vec<Vec<Vec<usize>>> {
        let mut inn = vec![vec![Vec::new(); self.n]; self.rels.len()];
        for (ri, r) in self.rels.iter().enumerate() {
            for &(u, v) in &r.pairs {
                inn[ri][v].push(u);
            }
        }
        inn
    }
}

/// One-dimensional color refinement to a fixed point. Returns the stable
/// coloring with class ids `0..k` assigned in sorted-signature order
/// (isomorphism-invariant given invariant input colors).
pub fn refine(s: &Structure, start: &[u64]) -> Vec<u64> {
    assert_eq!(start.len(), s.n);
    let out = s.out_lists();
    let inn = s.in_lists();
    let mut colors: Vec<u64> = start.to_vec();
    let mut classes = count_classes(&colors);
    loop {
        let mut sigs: Vec<Vec<u64>> = Vec::with_capacity(s.n);
        for v in 0..s.n {
            let mut sig = vec![colors[v]];
            for ri in 0..s.rels.len() {
                let mut o: Vec<u64> = out[ri][v].iter().map(|&w| colors[w]).collect();
                o.sort_unstable();
                sig.push(u64::MAX);
                sig.extend(o);
                let mut i: Vec<u64> = inn[ri][v].iter().map(|&w| colors[w]).collect();
                i.sort_unstable();
                sig.push(u64::MAX);
                sig.extend(i);
            }
            sigs.push(sig);
        }
        let mut ids: BTreeMap<&[u64], u64> = BTreeMap::new();
        for sig in &sigs {
            let next = ids.len() as u64;
            ids.entry(sig.as_slice()).or_insert(next);
        }
        // Reassign in sorted-signature order.
        let mut sorted: Vec<&[u64]> = ids.keys().copied().collect();
        sorted.sort_unstable();
        let rank: BTreeMap<&[u64], u64> = sorted
            .into_iter()
            .enumerate()
            .map(|(i, k)| (k, i as u64))
            .collect();
        let new_colors: Vec<u64> = sigs.iter().map(|sig| rank[sig.as_slice()]).collect();
        let new_classes = count_classes(&new_colors);
        let stable = new_classes == classes;
        colors = new_colors;
        classes = new_classes;
        if stable {
            return colors;
        }
    }
}

fn count_classes(colors: &[u64]) -> usize {
    colors.iter().collect::<BTreeSet<_>>().len()
}

/// Multiset of stable colors; equal multisets are necessary for isomorphism.
pub fn color_histogram(colors: &[u64]) -> BTreeMap<u64, usize> {
    let mut h = BTreeMap::new();
    for &c in colors {
        *h.entry(c).or_insert(0) += 1;
    }
    h
}

// ----- canonical forms -----

/// Total invariant of a structure up to isomorphism.
#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CanonKey(pub Vec<u64>);

/// Canonical relabeling: returns `perm` with `perm[old] = new` and the
/// canonical key. Two structures have equal keys iff they are isomorphic
/// (colors and all relations preserved).
pub fn canonical_form(s: &Structure) -> (Vec<usize>, CanonKey) {
    let mut best: Option<(CanonKey, Vec<usize>)> = None;
    let mut nodes = 0usize;
    let start = refine(s, &s.colors);
    canon_search(s, &start, &mut best, &mut nodes);
    let (key, perm) = best.expect("canonical search always reaches a leaf");
    (perm, key)
}

pub fn canonical_key(s: &Structure) -> CanonKey {
    canonical_form(s).1
}

pub fn graph_canon_key(g: &Graph) -> CanonKey {
    canonical_key(&Structure::from_graph(g))
}

pub fn labelled_canon_key(f: &LabelledGraph) -> CanonKey {
    canonical_key(&Structure::from_labelled(f))
}

const CANON_NODE_BUDGET: usize = 4_000_000;

fn canon_search(
    s: &Structure,
    colors: &[u64],
    best: &mut Option<(CanonKey, Vec<usize>)>,
    nodes: &mut usize,
) {
    *nodes += 1;
    assert!(
        *nodes <= CANON_NODE_BUDGET,
        "canonical form search exceeded node budget (structure too symmetric/large)"
    );
    // Group vertices by color.
    let mut classes: BTreeMap<u64, Vec<usize>> = BTreeMap::new();
    for v in 0..s.n {
        classes.entry(colors[v]).or_default().push(v);
    }
    // Discrete?
    if classes.len() == s.n {
        let mut perm = vec![0usize; s.n];
        for (rank, (_, vs)) in classes.iter().enumerate() {
            perm[vs[0]] = rank;
        }
        let key = encode_key(s, &perm);
        match best {
            Some((bk, _)) if *bk <= key => {}
            _ => *best = Some((key, perm)),
        }
        return;
    }
    // Smallest non-singleton class, ties by color id (BTreeMap order).
    let (_, cell) = classes
        .iter()
        .filter(|(_, vs)| vs.len() > 1)
        .min_by_key(|(c, vs)| (vs.len(), **c))
        .expect("non-discrete coloring has a non-singleton class");
    let cell = cell.clone();
    for v in cell {
        // Individualize v: split it off its class, then re-refine.
        let mut next: Vec<u64> = colors.iter().map(|&c| 2 * c + 1).collect();
        next[v] -= 1;
        let refined = refine(s, &next);
        canon_search(s, &refined, best, nodes);
    }
}

fn encode_key(s: &Structure, perm: &[usize]) -> CanonKey {
    let mut key = vec![s.n as u64, s.rels.len() as u64];
    // Initial colors in canonical position order.
    let mut inv = vec![0usize; s.n];
    for v in 0..s.n {
        inv[perm[v]] = v;
    }
    for i in 0..s.n {
        key.push(s.colors[inv[i]]);
    }
    for r in &s.rels {
        key.push(u64::MAX);
        for b in r.name.as_bytes() {
            key.push(*b as u64);
        }
        key.push(u64::MAX);
        let mut pairs: Vec<u64> = r
            .pairs
            .iter()
            .map(|&(u, v)| (perm[u] * s.n + perm[v]) as u64)
            .collect();
        pairs.sort_unstable();
        key.extend(pairs);
    }
    CanonKey(key)
}

// ----- isomorphism search -----

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum IsoVerdict {
    /// Witness map `m[a_vertex] = b_vertex`, verified in both directions.
    Iso(Vec<usize>),
    NonIso,
    /// Search budget exhausted before a conclusion.
    Unknown,
}

/// Backtracking isomorphism search with joint refinement. `budget` bounds
/// the number of search nodes; exhausting the space proves `NonIso`.
pub fn iso_search(a: &Structure, b: &Structure, budget: usize) -> IsoVerdict {
    if a.n != b.n
        || a.rels.len() != b.rels.len()
        || a.rels
            .iter()
            .zip(&b.rels)
            .any(|(x, y)| x.name != y.name || x.pairs.len() != y.pairs.len())
        || color_histogram(&a.colors) != color_histogram(&b.colors)
    {
        return IsoVerdict::NonIso;
    }
    if a.n == 0 {
        return IsoVerdict::Iso(Vec::new());
    }
    let union = a.disjoint_union(b);
    let start = refine(&union, &union.colors);
    let mut nodes = 0usize;
    let mut result = None;
    let exhausted = iso_rec(a, b, &union, &start, budget, &mut nodes, &mut result, false)
        .map(|maps| maps.into_iter().next());
    match exhausted {
        None => IsoVerdict::Unknown,
        Some(_) => match result {
            Some(m) => IsoVerdict::Iso(m),
            None => IsoVerdict::NonIso,
        },
    }
}

/// All isomorphisms a -> b (used with `a = b` for automorphism groups).
/// Returns `None` if the node budget or `cap` many maps is exceeded.
pub fn all_isomorphisms(
    a: &Structure,
    b: &Structure,
    cap: usize,
    budget: usize,
) -> Option<Vec<Vec<usize>>> {
    if a.n != b.n
        || a.rels.len() != b.rels.len()
        || a.rels
            .iter()
            .zip(&b.rels)
            .any(|(x, y)| x.name != y.name || x.pairs.len() != y.pairs.len())
        || color_histogram(&a.colors) != color_histogram(&b.colors)
    {
        return Some(Vec::new());
    }
    if a.n == 0 {
        return Some(vec![Vec::new()]);
    }
    let union = a.disjoint_union(b);
    let start = refine(&union, &union.colors);
    let mut nodes = 0usize;
    let mut first_only = None;
    let maps = iso_rec(
        a,
        b,
        &union,
        &start,
        budget,
        &mut nodes,
        &mut first_only,
        true,
    )?;
    if maps.len() > cap {
        return None;
    }
    Some(maps)
}

/// Automorphism group (as a list of permutations, identity included), or
/// `None` if it exceeds the cap.
pub fn automorphisms(s: &Structure, cap: usize) -> Option<Vec<Vec<usize>>> {
    all_isomorphisms(s, s, cap, 50_000_000)
}

/// Core recursion. `colors` is a stable joint coloring of `union`. Returns
/// `None` on budget exhaustion; otherwise the list of verified maps found in
/// this subtree (all of them if `collect_all`, else at most one, also stored
/// in `first`).
#[allow(clippy::too_many_arguments)]
fn iso_rec(
    a: &Structure,
    b: &Structure,
    union: &Structure,
    colors: &[u64],
    budget: usize,
    nodes: &mut usize,
    first: &mut Option<Vec<usize>>,
    collect_all: bool,
) -> Option<Vec<Vec<usize>>> {
    *nodes += 1;
    if *nodes > budget {
        return None;
    }
    if first.is_some() && !collect_all {
        return Some(Vec::new());
    }
    let na = a.n;
    // Class balance check, and find a branching class.
    let mut classes: BTreeMap<u64, (Vec<usize>, Vec<usize>)> = BTreeMap::new();
    for v in 0..union.n {
        let e = classes.entry(colors[v]).or_default();
        if v < na {
            e.0.push(v);
        } else {
            e.1.push(v - na);
        }
    }
    for (_, (av, bv)) in &classes {
        if av.len() != bv.len() {
            return Some(Vec::new()); // unbalanced: no iso below this node
        }
    }
    // All classes balanced; branch on the smallest class with >= 2 members.
    let branch = classes
        .iter()
        .filter(|(_, (av, _))| av.len() > 1)
        .min_by_key(|(c, (av, _))| (av.len(), **c));
    match branch {
        None => {
            // Discrete matching: each class has exactly one vertex per side.
            let mut m = vec![usize::MAX; na];
            for (_, (av, bv)) in &classes {
                m[av[0]] = bv[0];
            }
            if verify_iso(a, b, &m) {
                if first.is_none() {
                    *first = Some(m.clone());
                }
                Some(vec![m])
            } else {
                Some(Vec::new())
            }
        }
        Some((_, (av, bv))) => {
            let u = av[0];
            let bv = bv.clone();
            let mut out = Vec::new();
            for v in bv {
                let mut next: Vec<u64> = colors.iter().map(|&c| 2 * c + 1).collect();
                next[u] -= 1;
                next[na + v] -= 1;
                let refined = refine(union, &next);
                let sub = iso_rec(a, b, union, &refined, budget, nodes, first, collect_all)?;
                out.extend(sub);
                if first.is_some() && !collect_all {
                    return Some(out);
                }
            }
            Some(out)
        }
    }
}

/// Full check that `m` is an isomorphism a -> b.
pub fn verify_iso(a: &Structure, b: &Structure, m: &[usize]) -> bool {
    if a.n != b.n || m.len() != a.n {
        return false;
    }
    let mut seen = vec![false; b.n];
    for &x in m {
        if x >= b.n || seen[x] {
            return false;
        }
        seen[x] = true;
    }
    for v in 0..a.n {
        if a.colors[v] != b.colors[m[v]] {
            return false;
        }
    }
    for (ra, rb) in a.rels.iter().zip(&b.rels) {
        if ra.pairs.len() != rb.pairs.len() {
            return false;
        }
        for &(u, v) in &ra.pairs {
            if !rb.pairs.contains(&(m[u], m[v])) {
                return false;
            }
        }
    }
    true
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn refinement_separates_degrees() {
        let s = Structure::from_graph(&Graph::star(3));
        let c = refine(&s, &s.colors);
        // Center vs leaves: two classes.
        assert_eq!(count_classes(&c), 2);
        assert_eq!(c[1], c[2]);
        assert_ne!(c[0], c[1]);
    }

    #[test]
    fn canon_key_invariant_under_relabeling() {
        let g = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (0, 2)]).unwrap();
        let key = graph_canon_key(&g);
        let perm = vec![3, 0, 4, 1, 2];
        let h = g.relabel(&perm);
        assert_eq!(graph_canon_key(&h), key);
        // A different graph with the same degree sequence gets another key.
        let g2 = Graph::from_edges(5, [(0, 1), (1, 2), (2, 3), (3, 4), (4, 0), (1, 3)]).unwrap();
        assert_eq!(graph_canon_key(&g2), key); // C5 + chord is unique up to iso
        let p = Graph::path(5);
        assert_ne!(graph_canon_key(&p), key);
    }

    #[test]
    fn canon_distinguishes_c6_from_two_triangles() {
        // Same degree sequence, refinement alone cannot split them.
        let c6 = Graph::cycle(6);
        let two_k3 = Graph::complete(3).disjoint_union(&Graph::complete(3));
        assert_ne!(graph_canon_key(&c6), graph_canon_key(&two_k3));
    }

    #[test]
    fn labelled_keys_track_label_positions() {
        let f1 = LabelledGraph::new(Graph::path(3), vec![0, 2]).unwrap();
        let f2 = LabelledGraph::new(Graph::path(3), vec![2, 0]).unwrap();
        let f3 = LabelledGraph::new(Graph::path(3), vec![0, 1]).unwrap();
        // Swapping the two end labels is an automorphism of the path.
        assert_eq!(labelled_canon_key(&f1), labelled_canon_key(&f2));
        assert_ne!(labelled_canon_key(&f1), labelled_canon_key(&f3));
    }

    #[test]
    fn iso_search_finds_cycle_relabelings() {
        let g = Graph::cycle(8);
        let h = g.relabel(&[2, 5, 0, 7, 1, 4, 6, 3]);
        match iso_search(
            &Structure::from_graph(&g),
            &Structure::from_graph(&h),
            100_000,
        ) {
            IsoVerdict::Iso(m) => {
                assert!(verify_iso(
                    &Structure::from_graph(&g),
                    &Structure::from_graph(&h),
                    &m
                ));
            }
            other => panic!("expected iso, got {other:?}"),
        }
    }

    #[test]
    fn iso_search_refutes_non_isomorphic_pairs() {
        let c6 = Structure::from_graph(&Graph::cycle(6));
        let two_k3 = Structure::from_graph(&Graph::complete(3).disjoint_union(&Graph::complete(3)));
        assert_eq!(iso_search(&c6, &two_k3, 100_000), IsoVerdict::NonIso);
        let p4 = Structure::from_graph(&Graph::path(4));
        let s3 = Structure::from_graph(&Graph::star(3));
        assert_eq!(iso_search(&p4, &s3, 100_000), IsoVerdict::NonIso);
    }

    #[test]
    fn automorphism_counts_of_known_graphs() {
        let count = |g: &Graph| {
            automorphisms(&Structure::from_graph(g), 1_000_000)
                .unwrap()
                .len()
        };
        assert_eq!(count(&Graph::complete(4)), 24);
        assert_eq!(count(&Graph::cycle(5)), 10); // dihedral
        assert_eq!(count(&Graph::path(4)), 2);
        assert_eq!(count(&Graph::star(3)), 6); // leaves permute
        assert_eq!(count(&petersen()), 120);
    }

    fn petersen() -> Graph {
        let mut g = Graph::new(10);
        for i in 0..5 {
            g.add_edge(i, (i + 1) % 5).unwrap();
            g.add_edge(i, i + 5).unwrap();
            g.add_edge(i + 5, 5 + (i + 2) % 5).unwrap();
        }
        g
    }

    #[test]
    fn colored_automorphisms_respect_colors() {
        // Path 0-1-2 with endpoint colors distinct: only the identity.
        let g = Graph::path(3);
        let s = Structure::from_graph_with_colors(&g, vec![1, 0, 2]);
        let autos = automorphisms(&s, 1000).unwrap();
        assert_eq!(autos, vec![vec![0, 1, 2]]);
    }
}
