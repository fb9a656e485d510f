//! The Coxeter presentation of `W^{⊥x}`.
//!
//! Generators are indexed by classes of pairs `(y,s)` (`y` in the odd
//! component of `x`, `m(y,s)` even); relations come from eleven
//! three-vertex subgraph patterns. Whether each class contributes a single
//! generator is decided by the uniform-root condition, which is certified
//! exactly by folding the loop images of the class into a Stallings graph.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::f64::consts::PI;
use std::fmt;

use serde::Serialize;

use crate::error::{CoxError, Result};
use crate::graph::{cycle_analysis, CoxeterGraph, CoxeterMatrix, Label, Vertex, VertexSet};
use crate::oracle::{geometric_form, simple_root, GroupWord, RootVector};

/// A generator descriptor `(y, s)`: `y` in the odd component of `x`,
/// `m(y,s)` even and finite.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct EdgePair {
    pub y: Vertex,
    pub s: Vertex,
}

impl EdgePair {
    pub fn new(y: Vertex, s: Vertex) -> Self {
        EdgePair { y, s }
    }

    pub fn display(&self, g: &CoxeterGraph) -> String {
        format!("({},{})", g.name(self.y), g.name(self.s))
    }
}

/// The eleven three-vertex subgraph patterns.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
pub enum Pattern {
    I,
    II,
    III,
    IV,
    V,
    VI,
    VII,
    VIII,
    IX,
    X,
    XI,
}

impl fmt::Display for Pattern {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Debug::fmt(self, f)
    }
}

/// One relation `left ~^k right` found in a pattern match.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RelationInstance {
    pub left: EdgePair,
    pub right: EdgePair,
    pub k: u32,
    pub pattern: Pattern,
    /// Walk in the odd graph from `left.y` to `right.y`.
    pub q: Vec<Vertex>,
}

/// A `~`-equivalence class of pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairClass {
    pub members: Vec<EdgePair>,
    pub representative: EdgePair,
    pub uniform_root_certified: bool,
    pub certificate: Certificate,
}

/// Why a class satisfies (or fails) the uniform-root condition.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Certificate {
    /// The odd component is a tree.
    AcyclicOddComponent,
    /// A member `(y,s)` with `m(y,s)=2` whose slice `O₂(s)` around `y`
    /// carries every cycle of the odd component.
    CycleCarryingSlice,
    /// The loop images of the class generate the whole fundamental group.
    LoopImagesGenerate,
    /// The loop images generate a proper subgroup.
    Uncertified,
}

/// The Coxeter system `(W^{⊥x}, R_x)`.
#[derive(Clone, Debug)]
pub struct PerpPresentation {
    pub x: Vertex,
    pub classes: Vec<PairClass>,
    /// Orders between class generators (diagonal 1).
    pub orders: CoxeterMatrix,
    /// Root of each class generator, with the word producing it.
    pub roots: Vec<GammaRoot>,
}

/// Outcome of [`perp_coxeter_matrix`].
#[derive(Clone, Debug)]
pub enum PerpResult {
    Presentation(PerpPresentation),
    /// Some class fails the uniform-root condition, so the generators are
    /// not indexed by classes; `uncertified` lists the offending classes.
    Unsupported {
        classes: Vec<PairClass>,
        uncertified: Vec<usize>,
    },
}

impl PerpResult {
    pub fn presentation(&self) -> Option<&PerpPresentation> {
        match self {
            PerpResult::Presentation(p) => Some(p),
            PerpResult::Unsupported { .. } => None,
        }
    }
}

/// `Z_W(x) = ⟨x⟩ × (W^{⊥x} ⋊ Y_x)` summary.
#[derive(Clone, Debug)]
pub struct CentralizerReport {
    pub x: Vertex,
    pub perp: PerpResult,
    /// Rank of the free group `Y_x` (cycle rank of the odd component).
    pub y_rank: usize,
}

/// `γ_x(y,s)` and the word `π(p_{x,y})` that produced it.
#[derive(Clone, Debug, PartialEq)]
pub struct GammaRoot {
    pub word: GroupWord,
    pub root: RootVector,
}

// ----- generators and relations --------------------------------------------

/// The odd component of `x` inside `within`.
pub fn odd_component_within(g: &CoxeterGraph, x: Vertex, within: &VertexSet) -> VertexSet {
    g.odd_components_within(within)
        .into_iter()
        .find(|c| c.contains(&x))
        .unwrap_or_default()
}

/// All pairs `(y,s)` with `y` in the odd component of `x` inside `within`,
/// `s ∈ within` and `m(y,s)` even.
pub fn edge_pairs(g: &CoxeterGraph, x: Vertex, within: &VertexSet) -> Vec<EdgePair> {
    let o = odd_component_within(g, x, within);
    let mut out = Vec::new();
    for &y in &o {
        for &s in within {
            if s != y && g.m(y, s).is_even() {
                out.push(EdgePair::new(y, s));
            }
        }
    }
    out
}

/// Every relation instance among the pairs of [`edge_pairs`].
pub fn relation_instances(g: &CoxeterGraph, x: Vertex, within: &VertexSet) -> Vec<RelationInstance> {
    let o = odd_component_within(g, x, within);
    let m = |a: Vertex, b: Vertex| g.m(a, b);
    let two = Label::Finite(2);
    let four = Label::Finite(4);
    let mut out = BTreeSet::new();
    let mut push = |left: EdgePair, right: EdgePair, k: u32, pattern: Pattern, q: Vec<Vertex>| {
        out.insert(RelationInstance {
            left,
            right,
            k,
            pattern,
            q,
        });
    };
    for &y in &o {
        for &s in within {
            if s == y {
                continue;
            }
            for &t in within {
                if t == y || t == s {
                    continue;
                }
                let (ys, yt, st) = (m(y, s), m(y, t), m(s, t));
                // Same first coordinate: (y,s) ~ (y,t), s < t.
                if s < t {
                    let pair = (EdgePair::new(y, s), EdgePair::new(y, t));
                    if ys == two && yt == two {
                        if let Label::Finite(k) = st {
                            push(pair.0, pair.1, k, Pattern::I, vec![y]);
                        }
                    } else if st == two && ys.is_even() && yt.is_even() {
                        if ys == two {
                            push(pair.0, pair.1, 2, Pattern::II, vec![y]);
                        } else if yt == two {
                            push(pair.0, pair.1, 2, Pattern::IX, vec![y]);
                        }
                    } else if st.is(3) {
                        if ys == two && yt == four {
                            push(pair.0, pair.1, 4, Pattern::III, vec![y]);
                        } else if ys == four && yt == two {
                            push(pair.0, pair.1, 4, Pattern::X, vec![y]);
                        }
                    }
                }
            }
        }
    }
    for &y in &o {
        for &z in &o {
            if z <= y {
                continue;
            }
            let yz = m(y, z);
            if !yz.is_odd() {
                continue;
            }
            // Same second coordinate: (y,s) ~ (z,s).
            for &s in within {
                if s == y || s == z {
                    continue;
                }
                let (ys, zs) = (m(y, s), m(z, s));
                let pair = (EdgePair::new(y, s), EdgePair::new(z, s));
                if ys == two && zs == two {
                    push(pair.0, pair.1, 1, Pattern::IV, vec![y, z]);
                } else if yz.is(3) && ys == two && zs == four {
                    push(pair.0, pair.1, 2, Pattern::VIII, vec![y, z]);
                } else if yz.is(3) && ys == four && zs == two {
                    push(pair.0, pair.1, 2, Pattern::XI, vec![y, z]);
                }
            }
        }
    }
    for &y in &o {
        for &s in &o {
            if s <= y || m(y, s) != two {
                continue;
            }
            // Swapped pair: (y,s) ~ (s,y) through a common odd neighbour.
            for &w in &o {
                if w == y || w == s {
                    continue;
                }
                let (yw, sw) = (m(y, w), m(s, w));
                let pair = (EdgePair::new(y, s), EdgePair::new(s, y));
                if yw.is(3) && sw.is(3) {
                    push(pair.0, pair.1, 1, Pattern::V, vec![y, w, s]);
                } else if yw.is(3) && sw.is(5) {
                    push(pair.0, pair.1, 2, Pattern::VI, vec![y, w, s]);
                } else if yw.is(5) && sw.is(3) {
                    push(pair.0, pair.1, 2, Pattern::VII, vec![y, w, s]);
                }
            }
        }
    }
    out.into_iter().collect()
}

// ----- classes ---------------------------------------------------------------

struct UnionFind {
    parent: Vec<usize>,
}

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind {
            parent: (0..n).collect(),
        }
    }

    fn find(&mut self, i: usize) -> usize {
        let mut r = i;
        while self.parent[r] != r {
            r = self.parent[r];
        }
        let mut c = i;
        while self.parent[c] != r {
            let next = self.parent[c];
            self.parent[c] = r;
            c = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (ra, rb) = (self.find(a), self.find(b));
        if ra != rb {
            let (lo, hi) = (ra.min(rb), ra.max(rb));
            self.parent[hi] = lo;
        }
    }
}

/// Group pairs into classes: the transitive closure of the `k = 1`
/// relations, ordered by representative (least member). Certification is
/// left `false` here; see [`classify_pairs`].
pub fn pair_classes(pairs: &[EdgePair], instances: &[RelationInstance]) -> Vec<Vec<EdgePair>> {
    let mut sorted: Vec<EdgePair> = pairs.to_vec();
    sorted.sort();
    sorted.dedup();
    let index: BTreeMap<EdgePair, usize> = sorted.iter().enumerate().map(|(i, p)| (*p, i)).collect();
    let mut uf = UnionFind::new(sorted.len());
    for r in instances.iter().filter(|r| r.k == 1) {
        if let (Some(&a), Some(&b)) = (index.get(&r.left), index.get(&r.right)) {
            uf.union(a, b);
        }
    }
    let mut groups: BTreeMap<usize, Vec<EdgePair>> = BTreeMap::new();
    for (i, p) in sorted.iter().enumerate() {
        groups.entry(uf.find(i)).or_default().push(*p);
    }
    let mut out: Vec<Vec<EdgePair>> = groups.into_values().collect();
    out.sort_by_key(|c| c[0]);
    out
}

/// Freely reduce a walk given as its vertex sequence (remove backtracks).
fn reduce_walk(walk: &[Vertex]) -> Vec<Vertex> {
    let mut out: Vec<Vertex> = Vec::with_capacity(walk.len());
    for &v in walk {
        if out.len() >= 2 && out[out.len() - 2] == v {
            out.pop();
        } else if out.last() != Some(&v) {
            out.push(v);
        }
    }
    out
}

/// Append `next` (which starts where `acc` ends) to `acc`.
fn concat_walk(acc: &mut Vec<Vertex>, next: &[Vertex]) {
    debug_assert_eq!(acc.last(), next.first());
    acc.extend_from_slice(&next[1..]);
}

/// Closed walks (based at the representative's first coordinate) forming a
/// generating set of the image of the class's loop group under the map
/// sending each `k = 1` relation to its walk.
fn class_loop_images(members: &[EdgePair], instances: &[RelationInstance]) -> Vec<Vec<Vertex>> {
    let member_set: BTreeSet<EdgePair> = members.iter().copied().collect();
    let edges: Vec<&RelationInstance> = instances
        .iter()
        .filter(|r| r.k == 1 && member_set.contains(&r.left) && member_set.contains(&r.right))
        .collect();
    let base = members[0];
    // Spanning tree by BFS: walk from base.y to each member's y.
    let mut reach: BTreeMap<EdgePair, Vec<Vertex>> = BTreeMap::from([(base, vec![base.y])]);
    let mut tree_edges = BTreeSet::new();
    let mut queue = VecDeque::from([base]);
    while let Some(p) = queue.pop_front() {
        for (i, e) in edges.iter().enumerate() {
            let (other, piece): (EdgePair, Vec<Vertex>) = if e.left == p {
                (e.right, e.q.clone())
            } else if e.right == p {
                (e.left, e.q.iter().rev().copied().collect())
            } else {
                continue;
            };
            if reach.contains_key(&other) {
                continue;
            }
            let mut walk = reach[&p].clone();
            concat_walk(&mut walk, &piece);
            reach.insert(other, walk);
            tree_edges.insert(i);
            queue.push_back(other);
        }
    }
    let mut loops = Vec::new();
    for (i, e) in edges.iter().enumerate() {
        if tree_edges.contains(&i) {
            continue;
        }
        let mut walk = reach[&e.left].clone();
        concat_walk(&mut walk, &e.q);
        let back: Vec<Vertex> = reach[&e.right].iter().rev().copied().collect();
        concat_walk(&mut walk, &back);
        let reduced = reduce_walk(&walk);
        if reduced.len() > 1 {
            loops.push(reduced);
        }
    }
    loops
}

/// Stallings folding of a bouquet of closed walks in a simple graph.
/// Returns `(labels of folded vertices, folded edge count)`.
fn fold_loops(base: Vertex, loops: &[Vec<Vertex>]) -> (Vec<Vertex>, usize) {
    let mut labels = vec![base];
    let mut adj: Vec<BTreeSet<usize>> = vec![BTreeSet::new()];
    for walk in loops {
        let mut prev = 0usize;
        for (i, &v) in walk.iter().enumerate().skip(1) {
            let node = if i == walk.len() - 1 {
                0
            } else {
                labels.push(v);
                adj.push(BTreeSet::new());
                labels.len() - 1
            };
            adj[prev].insert(node);
            adj[node].insert(prev);
            prev = node;
        }
    }
    let mut alive: Vec<bool> = vec![true; labels.len()];
    loop {
        let mut fold: Option<(usize, usize)> = None;
        'search: for u in 0..labels.len() {
            if !alive[u] {
                continue;
            }
            let mut by_label: BTreeMap<Vertex, usize> = BTreeMap::new();
            for &w in &adj[u] {
                if let Some(&other) = by_label.get(&labels[w]) {
                    fold = Some((other.min(w), other.max(w)));
                    break 'search;
                }
                by_label.insert(labels[w], w);
            }
        }
        let Some((keep, gone)) = fold else { break };
        let moved: Vec<usize> = adj[gone].iter().copied().collect();
        for w in moved {
            adj[w].remove(&gone);
            if w != keep {
                adj[w].insert(keep);
                adj[keep].insert(w);
            }
        }
        adj[gone].clear();
        alive[gone] = false;
    }
    let live: Vec<usize> = (0..labels.len()).filter(|&u| alive[u]).collect();
    let edge_count = live.iter().map(|&u| adj[u].len()).sum::<usize>() / 2;
    (live.iter().map(|&u| labels[u]).collect(), edge_count)
}

/// Decide the uniform-root condition for a class (given as sorted members).
fn certify_members(
    g: &CoxeterGraph,
    o: &VertexSet,
    members: &[EdgePair],
    instances: &[RelationInstance],
) -> Certificate {
    let cycles = cycle_analysis(g, o);
    if cycles.acyclic {
        return Certificate::AcyclicOddComponent;
    }
    for p in members {
        if g.m(p.y, p.s).is(2) {
            let slice: VertexSet = o.iter().copied().filter(|&z| g.m(z, p.s).is(2)).collect();
            let around = odd_component_within(g, p.y, &slice);
            if cycles.cycle_vertices.is_subset(&around) {
                return Certificate::CycleCarryingSlice;
            }
        }
    }
    let loops = class_loop_images(members, instances);
    let (labels, edges) = fold_loops(members[0].y, &loops);
    let distinct: BTreeSet<Vertex> = labels.iter().copied().collect();
    let injective = distinct.len() == labels.len();
    let rank = (edges + 1).saturating_sub(labels.len());
    if injective && rank == cycles.cycle_rank {
        Certificate::LoopImagesGenerate
    } else {
        Certificate::Uncertified
    }
}

/// Whether a class satisfies the uniform-root condition: `γ_x(c;y,s)` does
/// not depend on the element `c` of the fundamental group.
pub fn certify_uniform_root(g: &CoxeterGraph, x: Vertex, class: &[EdgePair]) -> bool {
    let all: VertexSet = g.vertices().collect();
    let o = g.odd_component(x);
    let instances = relation_instances(g, x, &all);
    let mut members = class.to_vec();
    members.sort();
    certify_members(g, &o, &members, &instances) != Certificate::Uncertified
}

/// Pairs, relations and certified classes for `x` inside `within`.
pub fn classify_pairs(g: &CoxeterGraph, x: Vertex, within: &VertexSet) -> (Vec<PairClass>, Vec<RelationInstance>) {
    let pairs = edge_pairs(g, x, within);
    let instances = relation_instances(g, x, within);
    let o = odd_component_within(g, x, within);
    let classes = pair_classes(&pairs, &instances)
        .into_iter()
        .map(|members| {
            let certificate = certify_members(g, &o, &members, &instances);
            PairClass {
                representative: members[0],
                uniform_root_certified: certificate != Certificate::Uncertified,
                certificate,
                members,
            }
        })
        .collect();
    (classes, instances)
}

/// Assemble the class-level Coxeter matrix from relation instances.
fn class_orders(classes: &[PairClass], instances: &[RelationInstance]) -> Result<CoxeterMatrix> {
    let mut class_of: BTreeMap<EdgePair, usize> = BTreeMap::new();
    for (i, c) in classes.iter().enumerate() {
        for p in &c.members {
            class_of.insert(*p, i);
        }
    }
    let n = classes.len();
    let mut found: BTreeMap<(usize, usize), u32> = BTreeMap::new();
    for r in instances.iter().filter(|r| r.k >= 2) {
        let (a, b) = (class_of[&r.left], class_of[&r.right]);
        let key = (a.min(b), a.max(b));
        if let Some(&prev) = found.get(&key) {
            if prev != r.k {
                return Err(CoxError::InconsistentOrders {
                    left: key.0,
                    right: key.1,
                    first: prev,
                    second: r.k,
                });
            }
        }
        if a == b {
            return Err(CoxError::InconsistentOrders {
                left: a,
                right: b,
                first: 1,
                second: r.k,
            });
        }
        found.insert(key, r.k);
    }
    let mut m = CoxeterMatrix::new(n);
    for i in 0..n {
        for j in i + 1..n {
            m.set(i, j, found.get(&(i, j)).map_or(Label::Infinite, |&k| Label::Finite(k)));
        }
    }
    Ok(m)
}

/// The Coxeter matrix of `(W^{⊥x}, R_x)`, or `Unsupported` when some class
/// fails the uniform-root condition.
pub fn perp_coxeter_matrix(g: &CoxeterGraph, x: Vertex) -> Result<PerpResult> {
    let all: VertexSet = g.vertices().collect();
    let (classes, instances) = classify_pairs(g, x, &all);
    let uncertified: Vec<usize> = classes
        .iter()
        .enumerate()
        .filter(|(_, c)| !c.uniform_root_certified)
        .map(|(i, _)| i)
        .collect();
    if !uncertified.is_empty() {
        return Ok(PerpResult::Unsupported { classes, uncertified });
    }
    let orders = class_orders(&classes, &instances)?;
    let roots = classes
        .iter()
        .map(|c| gamma_root(g, x, c.representative))
        .collect();
    Ok(PerpResult::Presentation(PerpPresentation {
        x,
        classes,
        orders,
        roots,
    }))
}

/// Bundle the presentation with the rank of `Y_x`.
pub fn centralizer_report(g: &CoxeterGraph, x: Vertex) -> Result<CentralizerReport> {
    let perp = perp_coxeter_matrix(g, x)?;
    let y_rank = cycle_analysis(g, &g.odd_component(x)).cycle_rank;
    Ok(CentralizerReport { x, perp, y_rank })
}

// ----- roots and words -------------------------------------------------------

/// `π(y,z) = (zy)^{(m−1)/2}` for an odd edge, mapping `α_z` to `α_y`.
pub fn brink_word(g: &CoxeterGraph, y: Vertex, z: Vertex) -> GroupWord {
    let m = g.m(y, z).value().expect("odd edges have finite labels");
    debug_assert!(m % 2 == 1 && m >= 3);
    (0..(m - 1) / 2).flat_map(|_| [z, y]).collect()
}

/// `π` of a walk `z₀, z₁, …, z_k` in Γ^odd: the word
/// `π(z_k,z_{k−1}) ⋯ π(z₁,z₀)`, mapping `α_{z₀}` to `α_{z_k}`.
pub fn walk_word(g: &CoxeterGraph, walk: &[Vertex]) -> GroupWord {
    let mut word = Vec::new();
    for i in (0..walk.len().saturating_sub(1)).rev() {
        word.extend(brink_word(g, walk[i + 1], walk[i]));
    }
    word
}

/// The walk from `y` to `x` in the deterministic BFS tree of the odd
/// component rooted at `x`.
pub fn tree_path_to(g: &CoxeterGraph, x: Vertex, y: Vertex) -> Vec<Vertex> {
    let o = g.odd_component(x);
    let parent = g.odd_bfs_tree(x, &o);
    let mut walk = vec![y];
    let mut cur = y;
    while let Some(Some(p)) = parent.get(&cur) {
        walk.push(*p);
        cur = *p;
    }
    assert_eq!(cur, x, "y must lie in the odd component of x");
    walk
}

/// `α̃_{y,s}`: for even `m(y,s)` the unique positive root of `W_{y,s}`
/// orthogonal to `α_y`; for odd `m` the highest root of `W_{y,s}`.
pub fn tilde_alpha(g: &CoxeterGraph, y: Vertex, s: Vertex) -> RootVector {
    let n = g.len();
    let m = g.m(y, s).value().expect("finite label") as f64;
    let mut v = vec![0.0; n];
    if g.m(y, s).is_even() {
        let (c, sn) = ((PI / m).cos(), (PI / m).sin());
        v[y] = c / sn;
        v[s] = 1.0 / sn;
    } else {
        let k = 1.0 / (2.0 * (PI / (2.0 * m)).sin());
        v[y] = k;
        v[s] = k;
    }
    v
}

/// `γ_x(y,s) = π(p_{x,y}) · α̃_{y,s}`.
pub fn gamma_root(g: &CoxeterGraph, x: Vertex, pair: EdgePair) -> GammaRoot {
    let word = walk_word(g, &tree_path_to(g, x, pair.y));
    let root = geometric_form(g).apply_word(&word, &tilde_alpha(g, pair.y, pair.s));
    GammaRoot { word, root }
}

/// Words `π(p)` for closed walks `p` at `x` through each non-tree edge of the
/// BFS tree: a free basis of `Y_x`.
pub fn cycle_words(g: &CoxeterGraph, x: Vertex) -> Vec<GroupWord> {
    let o = g.odd_component(x);
    let parent = g.odd_bfs_tree(x, &o);
    let mut out = Vec::new();
    for (a, b) in g.odd_edges_within(&o) {
        if parent[&a] == Some(b) || parent[&b] == Some(a) {
            continue;
        }
        // x → … → a → b → … → x
        let mut walk: Vec<Vertex> = tree_path_to(g, x, a).into_iter().rev().collect();
        walk.extend(tree_path_to(g, x, b));
        out.push(walk_word(g, &walk));
    }
    out
}

/// `α_x` as a vector.
pub fn alpha(g: &CoxeterGraph, x: Vertex) -> RootVector {
    simple_root(g.len(), x)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::approx_eq;
    use crate::types::{component_types, IrreducibleType};

    fn graph(src: &str) -> CoxeterGraph {
        CoxeterGraph::parse_text(src).unwrap()
    }

    fn all(g: &CoxeterGraph) -> VertexSet {
        g.vertices().collect()
    }

    fn pairs_named(g: &CoxeterGraph, pairs: &[EdgePair]) -> Vec<String> {
        pairs.iter().map(|p| p.display(g)).collect()
    }

    const A4: &str = "edge x1 x2 3\nedge x2 x3 3\nedge x3 x4 3";

    #[test]
    fn a4_pairs_and_classes() {
        let g = graph(A4);
        let pairs = edge_pairs(&g, 0, &all(&g));
        assert_eq!(
            pairs_named(&g, &pairs),
            ["(x1,x3)", "(x1,x4)", "(x2,x4)", "(x3,x1)", "(x4,x1)", "(x4,x2)"]
        );
        let inst = relation_instances(&g, 0, &all(&g));
        let classes = pair_classes(&pairs, &inst);
        let named: Vec<Vec<String>> = classes.iter().map(|c| pairs_named(&g, c)).collect();
        assert_eq!(
            named,
            vec![
                vec!["(x1,x3)", "(x3,x1)", "(x4,x1)"],
                vec!["(x1,x4)", "(x2,x4)", "(x4,x2)"]
            ]
        );
        // (x1,x3) ~^3 (x1,x4) through pattern I.
        assert!(inst.iter().any(|r| r.pattern == Pattern::I
            && r.k == 3
            && r.left == EdgePair::new(0, 2)
            && r.right == EdgePair::new(0, 3)));
    }

    #[test]
    fn a3_and_h3_swaps() {
        let g = graph("edge x1 x2 3\nedge x2 x3 3");
        let inst = relation_instances(&g, 0, &all(&g));
        assert!(inst.iter().any(|r| r.pattern == Pattern::V && r.k == 1
            && r.left == EdgePair::new(0, 2) && r.right == EdgePair::new(2, 0)));
        let g = graph("edge x1 x2 3\nedge x2 x3 5");
        let inst = relation_instances(&g, 0, &all(&g));
        assert!(inst.iter().any(|r| r.pattern == Pattern::VI && r.k == 2
            && r.left == EdgePair::new(0, 2) && r.right == EdgePair::new(2, 0)));
    }

    #[test]
    fn b2_pairs() {
        let g = graph("edge x s 4");
        let x = g.vertex("x").unwrap();
        assert_eq!(pairs_named(&g, &edge_pairs(&g, x, &all(&g))), ["(x,s)"]);
        let tri = graph("edge a b 3\nedge b c 3\nedge a c 3");
        assert!(edge_pairs(&tri, 0, &all(&tri)).is_empty());
    }

    #[test]
    fn p_m_classes() {
        let g = graph("edge x1 x2 5\nedge x2 x3 3\nedge x3 x4 3\nedge x1 x3 inf");
        let pairs = edge_pairs(&g, 0, &all(&g));
        let inst = relation_instances(&g, 0, &all(&g));
        let named: Vec<Vec<String>> = pair_classes(&pairs, &inst)
            .iter()
            .map(|c| pairs_named(&g, c))
            .collect();
        assert_eq!(
            named,
            vec![vec!["(x1,x4)", "(x2,x4)", "(x4,x2)"], vec!["(x4,x1)"]]
        );
        // Members of one class share their root; the two class roots span I2(5).
        let form = geometric_form(&g);
        let r14 = gamma_root(&g, 0, EdgePair::new(0, 3)).root;
        let r42 = gamma_root(&g, 0, EdgePair::new(3, 1)).root;
        let r41 = gamma_root(&g, 0, EdgePair::new(3, 0)).root;
        assert!(approx_eq(&r14, &r42, 1e-9));
        assert!((form.inner(&r14, &r41) + (PI / 5.0).cos()).abs() < 1e-8);
    }

    #[test]
    fn presentations_of_worked_examples() {
        let types = |src: &str, x: &str| {
            let g = graph(src);
            let p = perp_coxeter_matrix(&g, g.vertex(x).unwrap()).unwrap();
            let mut t = component_types(&p.presentation().unwrap().orders);
            t.sort();
            t
        };
        use IrreducibleType::*;
        assert_eq!(types(A4, "x1"), vec![A(2)]);
        assert_eq!(types("edge 1 2 3\nedge 2 3 3\nedge 3 4 5", "1"), vec![H(3)]);
        assert_eq!(types("edge 1 2 3\nedge 2 3 5", "2"), vec![A(1), A(1)]);
        assert_eq!(types("edge x1 x2 7\nedge x2 x3 3\nedge x3 x4 3\nedge x1 x3 inf", "x3"), vec![I2(7)]);
    }

    #[test]
    fn gamma_roots() {
        let g = graph("edge x1 x2 3\nedge x2 x3 3");
        let gr = gamma_root(&g, 0, EdgePair::new(2, 0));
        assert_eq!(gr.word, vec![1, 0, 2, 1]);
        assert!(approx_eq(&gr.root, &[0.0, 0.0, 1.0], 1e-12));
        let same = gamma_root(&g, 0, EdgePair::new(0, 2));
        assert!(approx_eq(&same.root, &gr.root, 1e-12));
        // Odd highest root: m = 3 gives α_y + α_z.
        assert!(approx_eq(&tilde_alpha(&g, 0, 1), &[1.0, 1.0, 0.0], 1e-12));
        // m = 2 gives α_s.
        assert!(approx_eq(&tilde_alpha(&g, 0, 2), &[0.0, 0.0, 1.0], 1e-12));
    }

    #[test]
    fn certification() {
        // Bipyramid: (x1,x2) is certified although the literal slice rule fails.
        let g = graph("edge x1 y 3\nedge x1 yp 3\nedge x2 y 3\nedge x2 yp 3\nedge y yp inf");
        let x1 = g.vertex("x1").unwrap();
        let x2 = g.vertex("x2").unwrap();
        assert!(certify_uniform_root(&g, x1, &[EdgePair::new(x1, x2), EdgePair::new(x2, x1)]));
        // Triangle with an even edge of label 4: singleton, trivial loop image.
        let g = graph("edge a b 3\nedge b c 3\nedge a c 3\nedge a s 4");
        let a = g.vertex("a").unwrap();
        let s = g.vertex("s").unwrap();
        assert!(!certify_uniform_root(&g, a, &[EdgePair::new(a, s)]));
        assert!(matches!(perp_coxeter_matrix(&g, a).unwrap(), PerpResult::Unsupported { .. }));
        // Acyclic component.
        let g = graph(A4);
        assert!(certify_uniform_root(&g, 0, &[EdgePair::new(0, 2)]));
    }

    #[test]
    fn centralizer_reports() {
        let g = graph("edge a b 3\nedge b c 3\nedge a c 3");
        let r = centralizer_report(&g, 0).unwrap();
        assert_eq!(r.y_rank, 1);
        assert_eq!(r.perp.presentation().unwrap().classes.len(), 0);
        let g = graph("edge x s 4");
        let r = centralizer_report(&g, g.vertex("x").unwrap()).unwrap();
        assert_eq!((r.y_rank, r.perp.presentation().unwrap().classes.len()), (0, 1));
    }

    #[test]
    fn cycle_words_fix_bipyramid_root() {
        let g = graph("edge x1 y 3\nedge x1 yp 3\nedge x2 y 3\nedge x2 yp 3\nedge y yp inf");
        let x1 = g.vertex("x1").unwrap();
        let words = cycle_words(&g, x1);
        assert_eq!(words.len(), 1);
        let gamma = gamma_root(&g, x1, EdgePair::new(x1, g.vertex("x2").unwrap())).root;
        let form = geometric_form(&g);
        assert!(approx_eq(&form.apply_word(&words[0], &gamma), &gamma, 1e-9));
        // And the word itself is nontrivial: it moves α_y.
        let y = g.vertex("y").unwrap();
        assert!(!approx_eq(&form.apply_word(&words[0], &alpha(&g, y)), &alpha(&g, y), 1e-9));
    }
}
