//! Coxeter graphs, their odd subgraphs, and the graph/poset utilities used by
//! the rest of the crate (cycle analysis, tree decompositions, tree orders).
//!
//! Vertices are stored in lexicographic order of their names, so the vertex
//! index order *is* the lexicographic order used for all tie-breaking.

use std::collections::{BTreeMap, BTreeSet, VecDeque};
use std::fmt;

use serde::{Deserialize, Serialize};

use crate::error::{CoxError, Result};

/// Index of a vertex inside a [`CoxeterGraph`] (lexicographic rank of its name).
pub type Vertex = usize;

/// An ordered set of vertices.
pub type VertexSet = BTreeSet<Vertex>;

/// A Coxeter label `m(s,t)`: a positive integer or infinity.
///
/// `Finite(1)` only ever appears on the diagonal.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Label {
    Finite(u32),
    Infinite,
}

impl Label {
    /// The integer value, or `None` for infinity.
    pub fn value(self) -> Option<u32> {
        match self {
            Label::Finite(m) => Some(m),
            Label::Infinite => None,
        }
    }

    pub fn is_finite(self) -> bool {
        matches!(self, Label::Finite(_))
    }

    /// Odd finite label `m ≥ 3` (an edge of the odd Coxeter graph).
    pub fn is_odd(self) -> bool {
        matches!(self, Label::Finite(m) if m >= 3 && m % 2 == 1)
    }

    /// Even finite label (2, 4, 6, ...).
    pub fn is_even(self) -> bool {
        matches!(self, Label::Finite(m) if m >= 2 && m % 2 == 0)
    }

    pub fn is(self, m: u32) -> bool {
        self == Label::Finite(m)
    }

    /// Parse `"inf"` / `"∞"` or an integer.
    pub fn parse(token: &str) -> Option<Label> {
        match token {
            "inf" | "∞" | "infinity" => Some(Label::Infinite),
            _ => token.parse::<u32>().ok().map(Label::Finite),
        }
    }
}

impl fmt::Display for Label {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Label::Finite(m) => write!(f, "{m}"),
            Label::Infinite => f.write_str("inf"),
        }
    }
}

impl Serialize for Label {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Label::Finite(m) => s.serialize_u32(*m),
            Label::Infinite => s.serialize_str("inf"),
        }
    }
}

impl<'de> Deserialize<'de> for Label {
    fn deserialize<D: serde::Deserializer<'de>>(d: D) -> std::result::Result<Self, D::Error> {
        #[derive(Deserialize)]
        #[serde(untagged)]
        enum Raw {
            Int(u64),
            Text(String),
        }
        match Raw::deserialize(d)? {
            Raw::Int(m) => u32::try_from(m)
                .map(Label::Finite)
                .map_err(|_| serde::de::Error::custom("label too large")),
            Raw::Text(t) => Label::parse(&t)
                .ok_or_else(|| serde::de::Error::custom(format!("invalid label {t:?}"))),
        }
    }
}

/// A symmetric Coxeter matrix over `0..n` with `1` on the diagonal.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterMatrix {
    n: usize,
    data: Vec<Label>,
}

impl CoxeterMatrix {
    /// The matrix of `n` pairwise commuting generators.
    pub fn new(n: usize) -> Self {
        let mut data = vec![Label::Finite(2); n * n];
        for i in 0..n {
            data[i * n + i] = Label::Finite(1);
        }
        CoxeterMatrix { n, data }
    }

    pub fn rank(&self) -> usize {
        self.n
    }

    pub fn get(&self, i: usize, j: usize) -> Label {
        self.data[i * self.n + j]
    }

    /// Set `m(i,j) = m(j,i) = label` for `i ≠ j`.
    pub fn set(&mut self, i: usize, j: usize, label: Label) {
        assert!(i != j, "diagonal entries are fixed to 1");
        self.data[i * self.n + j] = label;
        self.data[j * self.n + i] = label;
    }

    /// Rows as nested vectors (for reports).
    pub fn rows(&self) -> Vec<Vec<Label>> {
        (0..self.n)
            .map(|i| (0..self.n).map(|j| self.get(i, j)).collect())
            .collect()
    }

    /// Connected components of the graph whose edges are the entries `≠ 2`.
    pub fn components(&self) -> Vec<Vec<usize>> {
        let mut seen = vec![false; self.n];
        let mut out = Vec::new();
        for start in 0..self.n {
            if seen[start] {
                continue;
            }
            let mut comp = vec![start];
            seen[start] = true;
            let mut i = 0;
            while i < comp.len() {
                let v = comp[i];
                for (w, seen_w) in seen.iter_mut().enumerate() {
                    if w != v && !*seen_w && self.get(v, w) != Label::Finite(2) {
                        *seen_w = true;
                        comp.push(w);
                    }
                }
                i += 1;
            }
            comp.sort_unstable();
            out.push(comp);
        }
        out
    }

    /// The principal submatrix on `indices` (in the given order).
    pub fn restrict(&self, indices: &[usize]) -> CoxeterMatrix {
        let mut out = CoxeterMatrix::new(indices.len());
        for (a, &i) in indices.iter().enumerate() {
            for (b, &j) in indices.iter().enumerate().skip(a + 1) {
                out.set(a, b, self.get(i, j));
            }
        }
        out
    }
}

/// An immutable Coxeter graph: named vertices plus the label matrix.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct CoxeterGraph {
    names: Vec<String>,
    matrix: CoxeterMatrix,
}

/// One `edge A B M` directive.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeSpec {
    pub a: String,
    pub b: String,
    pub label: Label,
    /// Source line (1-based) for error messages; 0 when unknown.
    pub line: usize,
}

#[derive(Serialize, Deserialize)]
struct JsonGraph {
    #[serde(default)]
    vertices: Vec<String>,
    #[serde(default)]
    edges: Vec<(String, String, Label)>,
}

fn valid_name(name: &str) -> bool {
    !name.is_empty() && !name.contains('#') && !name.chars().any(char::is_whitespace)
}

impl CoxeterGraph {
    /// Build a normalized graph from vertex names and an edge list.
    ///
    /// Vertices mentioned only in edges are added automatically; unspecified
    /// pairs get label 2. Repeating an edge with the same label is allowed.
    pub fn build(vertices: &[String], edges: &[EdgeSpec]) -> Result<CoxeterGraph> {
        let mut names: BTreeSet<String> = BTreeSet::new();
        for v in vertices {
            if !valid_name(v) {
                return Err(CoxError::InvalidName(v.clone()));
            }
            names.insert(v.clone());
        }
        for e in edges {
            for v in [&e.a, &e.b] {
                if !valid_name(v) {
                    return Err(CoxError::InvalidName(v.clone()));
                }
                names.insert(v.clone());
            }
        }
        if names.is_empty() {
            return Err(CoxError::EmptyGraph);
        }
        let names: Vec<String> = names.into_iter().collect();
        let index: BTreeMap<&str, usize> =
            names.iter().enumerate().map(|(i, s)| (s.as_str(), i)).collect();
        let mut given: BTreeMap<(usize, usize), Label> = BTreeMap::new();
        let mut matrix = CoxeterMatrix::new(names.len());
        for e in edges {
            if e.a == e.b {
                return Err(CoxError::SelfLoop(e.a.clone()));
            }
            if matches!(e.label, Label::Finite(m) if m < 2) {
                return Err(CoxError::InvalidLabel {
                    a: e.a.clone(),
                    b: e.b.clone(),
                    label: e.label.to_string(),
                });
            }
            let (i, j) = (index[e.a.as_str()], index[e.b.as_str()]);
            let key = (i.min(j), i.max(j));
            if let Some(&prev) = given.get(&key) {
                if prev != e.label {
                    return Err(CoxError::ContradictoryEdge {
                        a: e.a.clone(),
                        b: e.b.clone(),
                        first: prev.to_string(),
                        second: e.label.to_string(),
                    });
                }
            }
            given.insert(key, e.label);
            matrix.set(i, j, e.label);
        }
        Ok(CoxeterGraph { names, matrix })
    }

    /// Build from names (any order, distinct) and a matrix indexed like `names`.
    pub fn from_matrix(names: &[String], matrix: &CoxeterMatrix) -> Result<CoxeterGraph> {
        assert_eq!(names.len(), matrix.rank(), "one name per matrix row");
        let mut edges = Vec::new();
        for i in 0..names.len() {
            for j in i + 1..names.len() {
                edges.push(EdgeSpec {
                    a: names[i].clone(),
                    b: names[j].clone(),
                    label: matrix.get(i, j),
                    line: 0,
                });
            }
        }
        CoxeterGraph::build(names, &edges)
    }

    /// Parse the line-oriented text format (`vertex NAME`, `edge A B M`, `#` comments).
    pub fn parse_text(src: &str) -> Result<CoxeterGraph> {
        let mut vertices = Vec::new();
        let mut edges = Vec::new();
        for (lineno, raw) in src.lines().enumerate() {
            let line = lineno + 1;
            let content = raw.split('#').next().unwrap_or("").trim();
            if content.is_empty() {
                continue;
            }
            let tokens: Vec<&str> = content.split_whitespace().collect();
            let err = |message: String| CoxError::Parse { line, message };
            match tokens.as_slice() {
                ["vertex", name] => vertices.push((*name).to_string()),
                ["edge", a, b, m] => {
                    let label = Label::parse(m)
                        .ok_or_else(|| err(format!("invalid label {m:?}")))?;
                    if matches!(label, Label::Finite(v) if v < 2) {
                        return Err(CoxError::InvalidLabel {
                            a: (*a).to_string(),
                            b: (*b).to_string(),
                            label: label.to_string(),
                        });
                    }
                    edges.push(EdgeSpec {
                        a: (*a).to_string(),
                        b: (*b).to_string(),
                        label,
                        line,
                    });
                }
                ["vertex", ..] => return Err(err("expected `vertex NAME`".into())),
                ["edge", ..] => return Err(err("expected `edge A B M`".into())),
                [other, ..] => return Err(err(format!("unknown directive {other:?}"))),
                [] => unreachable!("empty lines are skipped"),
            }
        }
        CoxeterGraph::build(&vertices, &edges).map_err(|e| match e {
            CoxError::ContradictoryEdge { .. } | CoxError::SelfLoop(_) => {
                let line = edges
                    .iter()
                    .rev()
                    .find(|ed| match &e {
                        CoxError::SelfLoop(v) => &ed.a == v && &ed.b == v,
                        CoxError::ContradictoryEdge { a, b, .. } => &ed.a == a && &ed.b == b,
                        _ => false,
                    })
                    .map_or(0, |ed| ed.line);
                CoxError::Parse {
                    line,
                    message: e.to_string(),
                }
            }
            other => other,
        })
    }

    /// Parse the JSON format `{"vertices":[...],"edges":[["a","b",3],["a","c","inf"]]}`.
    pub fn parse_json(src: &str) -> Result<CoxeterGraph> {
        let raw: JsonGraph = serde_json::from_str(src).map_err(|e| CoxError::Parse {
            line: e.line(),
            message: e.to_string(),
        })?;
        let edges: Vec<EdgeSpec> = raw
            .edges
            .into_iter()
            .map(|(a, b, label)| EdgeSpec { a, b, label, line: 0 })
            .collect();
        CoxeterGraph::build(&raw.vertices, &edges)
    }

    /// Parse either format, choosing JSON when the input starts with `{`.
    pub fn parse(src: &str) -> Result<CoxeterGraph> {
        if src.trim_start().starts_with('{') {
            CoxeterGraph::parse_json(src)
        } else {
            CoxeterGraph::parse_text(src)
        }
    }

    /// Serialize to the text format (all vertices, then every label ≠ 2).
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for name in &self.names {
            out.push_str(&format!("vertex {name}\n"));
        }
        for (i, j, m) in self.edges() {
            out.push_str(&format!("edge {} {} {}\n", self.names[i], self.names[j], m));
        }
        out
    }

    /// Serialize to the JSON format.
    pub fn to_json_value(&self) -> serde_json::Value {
        let raw = JsonGraph {
            vertices: self.names.clone(),
            edges: self
                .edges()
                .into_iter()
                .map(|(i, j, m)| (self.names[i].clone(), self.names[j].clone(), m))
                .collect(),
        };
        serde_json::to_value(raw).expect("graph serialization cannot fail")
    }

    pub fn len(&self) -> usize {
        self.names.len()
    }

    pub fn is_empty(&self) -> bool {
        self.names.is_empty()
    }

    pub fn vertices(&self) -> std::ops::Range<Vertex> {
        0..self.names.len()
    }

    pub fn names(&self) -> &[String] {
        &self.names
    }

    pub fn name(&self, v: Vertex) -> &str {
        &self.names[v]
    }

    pub fn matrix(&self) -> &CoxeterMatrix {
        &self.matrix
    }

    /// Look up a vertex by name.
    pub fn vertex(&self, name: &str) -> Result<Vertex> {
        self.names
            .binary_search_by(|n| n.as_str().cmp(name))
            .map_err(|_| CoxError::UnknownVertex(name.to_string()))
    }

    /// The label `m(s,t)` (1 on the diagonal, 2 when no edge is drawn).
    pub fn m(&self, s: Vertex, t: Vertex) -> Label {
        self.matrix.get(s, t)
    }

    /// Drawn edges `(i, j, m)` with `i < j` and `m ≠ 2`.
    pub fn edges(&self) -> Vec<(Vertex, Vertex, Label)> {
        let mut out = Vec::new();
        for i in self.vertices() {
            for j in i + 1..self.len() {
                let m = self.m(i, j);
                if m != Label::Finite(2) {
                    out.push((i, j, m));
                }
            }
        }
        out
    }

    /// Format a vertex set as sorted names.
    pub fn set_names<'a>(&self, set: impl IntoIterator<Item = &'a Vertex>) -> Vec<String> {
        set.into_iter().map(|&v| self.names[v].clone()).collect()
    }

    /// A copy with every vertex renamed through `rename` (must stay injective).
    pub fn relabeled(&self, rename: impl Fn(&str) -> String) -> Result<CoxeterGraph> {
        let names: Vec<String> = self.names.iter().map(|n| rename(n)).collect();
        CoxeterGraph::from_matrix(&names, &self.matrix)
    }

    /// The full subgraph on `set`, keeping names.
    pub fn induced(&self, set: &VertexSet) -> CoxeterGraph {
        let idx: Vec<usize> = set.iter().copied().collect();
        CoxeterGraph {
            names: idx.iter().map(|&v| self.names[v].clone()).collect(),
            matrix: self.matrix.restrict(&idx),
        }
    }

    /// Whether all labels are finite (2-spherical).
    pub fn is_two_spherical(&self) -> bool {
        self.edges().iter().all(|(_, _, m)| m.is_finite())
    }

    /// Connected components of Γ (edges: labels ≥ 3 or ∞), ordered by least vertex.
    pub fn components(&self) -> Vec<VertexSet> {
        self.matrix
            .components()
            .into_iter()
            .map(|c| c.into_iter().collect())
            .collect()
    }

    /// Connected components of the subgraph of Γ induced on `set`.
    pub fn components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        components_by(set, |a, b| self.m(a, b) != Label::Finite(2))
    }

    // ----- odd Coxeter graph -------------------------------------------------

    /// Neighbours of `v` in Γ^odd, ascending.
    pub fn odd_neighbors(&self, v: Vertex) -> Vec<Vertex> {
        self.vertices().filter(|&w| w != v && self.m(v, w).is_odd()).collect()
    }

    /// The odd component of `x`: its conjugacy class within the generators.
    pub fn odd_component(&self, x: Vertex) -> VertexSet {
        let all: VertexSet = self.vertices().collect();
        self.odd_components_within(&all)
            .into_iter()
            .find(|c| c.contains(&x))
            .expect("every vertex lies in some component")
    }

    /// All components of Γ^odd, ordered by least vertex.
    pub fn odd_components(&self) -> Vec<VertexSet> {
        let all: VertexSet = self.vertices().collect();
        self.odd_components_within(&all)
    }

    /// Components of the odd graph induced on `set`.
    pub fn odd_components_within(&self, set: &VertexSet) -> Vec<VertexSet> {
        components_by(set, |a, b| self.m(a, b).is_odd())
    }

    /// Whether `set` is nonempty and induces a connected subgraph of Γ^odd.
    pub fn is_odd_connected(&self, set: &VertexSet) -> bool {
        !set.is_empty() && self.odd_components_within(set).len() == 1
    }

    /// Odd edges `(a, b)`, `a < b`, with both ends in `set`.
    pub fn odd_edges_within(&self, set: &VertexSet) -> Vec<(Vertex, Vertex)> {
        let mut out = Vec::new();
        for &a in set {
            for &b in set.range(a + 1..) {
                if self.m(a, b).is_odd() {
                    out.push((a, b));
                }
            }
        }
        out
    }

    /// Breadth-first spanning tree of Γ^odd restricted to `within`, rooted at
    /// `root`, visiting neighbours in lexicographic order. Returns parent links
    /// for the vertices reachable from `root`.
    pub fn odd_bfs_tree(&self, root: Vertex, within: &VertexSet) -> BTreeMap<Vertex, Option<Vertex>> {
        let mut parent = BTreeMap::new();
        parent.insert(root, None);
        let mut queue = VecDeque::from([root]);
        while let Some(v) = queue.pop_front() {
            for w in self.odd_neighbors(v) {
                if within.contains(&w) && !parent.contains_key(&w) {
                    parent.insert(w, Some(v));
                    queue.push_back(w);
                }
            }
        }
        parent
    }
}

/// Connected components of the graph on `set` with adjacency `adj`.
fn components_by(set: &VertexSet, adj: impl Fn(Vertex, Vertex) -> bool) -> Vec<VertexSet> {
    let mut seen = VertexSet::new();
    let mut out = Vec::new();
    for &start in set {
        if seen.contains(&start) {
            continue;
        }
        let mut comp = VertexSet::from([start]);
        seen.insert(start);
        let mut stack = vec![start];
        while let Some(v) = stack.pop() {
            for &w in set {
                if w != v && !seen.contains(&w) && adj(v, w) {
                    seen.insert(w);
                    comp.insert(w);
                    stack.push(w);
                }
            }
        }
        out.push(comp);
    }
    out
}

// ----- cycles ----------------------------------------------------------------

/// Cycle structure of a connected component of Γ^odd.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CycleInfo {
    pub acyclic: bool,
    /// Union of the vertex sets of all simple closed paths.
    pub cycle_vertices: VertexSet,
    /// Rank of the fundamental group: `#edges − #vertices + 1`.
    pub cycle_rank: usize,
}

/// Analyse the cycles of the odd graph on `component` (assumed connected).
///
/// A vertex lies on a simple closed path exactly when it is incident to a
/// non-bridge edge, i.e. when it belongs to a 2-edge-connected block with at
/// least three vertices.
pub fn cycle_analysis(g: &CoxeterGraph, component: &VertexSet) -> CycleInfo {
    let edges = g.odd_edges_within(component);
    let cycle_rank = (edges.len() + 1).saturating_sub(component.len());
    let mut cycle_vertices = VertexSet::new();
    if cycle_rank > 0 {
        for (idx, &(a, b)) in edges.iter().enumerate() {
            // `a`–`b` lies on a cycle iff b is reachable from a without it.
            let mut seen = VertexSet::from([a]);
            let mut stack = vec![a];
            while let Some(v) = stack.pop() {
                for (j, &(p, q)) in edges.iter().enumerate() {
                    if j == idx {
                        continue;
                    }
                    let w = if p == v {
                        q
                    } else if q == v {
                        p
                    } else {
                        continue;
                    };
                    if seen.insert(w) {
                        stack.push(w);
                    }
                }
            }
            if seen.contains(&b) {
                cycle_vertices.insert(a);
                cycle_vertices.insert(b);
            }
        }
    }
    CycleInfo {
        acyclic: cycle_rank == 0,
        cycle_vertices,
        cycle_rank,
    }
}

// ----- tree orders -----------------------------------------------------------

/// The tree order `⪯` of a rooted tree: `a ⪯ b` iff `a` lies on the path from
/// the root to `b`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeOrder {
    root: Vertex,
    parent: BTreeMap<Vertex, Option<Vertex>>,
    depth: BTreeMap<Vertex, usize>,
}

impl TreeOrder {
    /// Build from parent links; exactly one vertex (the root) has no parent.
    pub fn new(root: Vertex, parent: BTreeMap<Vertex, Option<Vertex>>) -> TreeOrder {
        let mut depth = BTreeMap::new();
        for &v in parent.keys() {
            let mut d = 0;
            let mut cur = v;
            while let Some(Some(p)) = parent.get(&cur) {
                d += 1;
                cur = *p;
                assert!(d <= parent.len(), "parent links contain a cycle");
            }
            assert_eq!(cur, root, "every vertex must lead back to the root");
            depth.insert(v, d);
        }
        TreeOrder { root, parent, depth }
    }

    /// The tree order of the odd graph on `set` rooted at `root`
    /// (requires `set` to induce a tree of Γ^odd).
    pub fn of_odd_tree(g: &CoxeterGraph, root: Vertex, set: &VertexSet) -> TreeOrder {
        TreeOrder::new(root, g.odd_bfs_tree(root, set))
    }

    pub fn root(&self) -> Vertex {
        self.root
    }

    pub fn contains(&self, v: Vertex) -> bool {
        self.parent.contains_key(&v)
    }

    pub fn vertices(&self) -> VertexSet {
        self.parent.keys().copied().collect()
    }

    pub fn len(&self) -> usize {
        self.parent.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parent.is_empty()
    }

    pub fn parent(&self, v: Vertex) -> Option<Vertex> {
        self.parent.get(&v).copied().flatten()
    }

    pub fn depth(&self, v: Vertex) -> Option<usize> {
        self.depth.get(&v).copied()
    }

    fn check(&self, v: Vertex) -> Result<()> {
        if self.contains(v) {
            Ok(())
        } else {
            Err(CoxError::UnknownVertex(format!("#{v} (outside the tree)")))
        }
    }

    /// `a ⪯ b`; false when either vertex is outside the tree.
    pub fn leq(&self, a: Vertex, b: Vertex) -> bool {
        if !self.contains(a) || !self.contains(b) {
            return false;
        }
        let mut cur = b;
        loop {
            if cur == a {
                return true;
            }
            match self.parent(cur) {
                Some(p) => cur = p,
                None => return false,
            }
        }
    }

    /// `a ≺ b` (strict).
    pub fn lt(&self, a: Vertex, b: Vertex) -> bool {
        a != b && self.leq(a, b)
    }

    /// Whether `a` and `b` are comparable.
    pub fn comparable(&self, a: Vertex, b: Vertex) -> bool {
        self.leq(a, b) || self.leq(b, a)
    }

    /// `b` covers `a` (`a ≺ b` with nothing in between).
    pub fn covers(&self, a: Vertex, b: Vertex) -> bool {
        self.contains(a) && self.parent(b) == Some(a)
    }

    /// The deepest common ancestor `a ∧ b`.
    pub fn meet(&self, a: Vertex, b: Vertex) -> Result<Vertex> {
        self.check(a)?;
        self.check(b)?;
        let (mut a, mut b) = (a, b);
        while self.depth[&a] > self.depth[&b] {
            a = self.parent(a).expect("non-root has a parent");
        }
        while self.depth[&b] > self.depth[&a] {
            b = self.parent(b).expect("non-root has a parent");
        }
        while a != b {
            a = self.parent(a).expect("non-root has a parent");
            b = self.parent(b).expect("non-root has a parent");
        }
        Ok(a)
    }

    /// Minimal elements above the root (the root's children), ascending.
    pub fn atoms(&self) -> VertexSet {
        self.parent
            .iter()
            .filter(|(_, p)| **p == Some(self.root))
            .map(|(&v, _)| v)
            .collect()
    }

    /// Whether `set` is downward closed (and contained in the tree).
    pub fn is_order_ideal(&self, set: &VertexSet) -> bool {
        set.iter().all(|&v| {
            self.contains(v)
                && match self.parent(v) {
                    Some(p) => set.contains(&p),
                    None => true,
                }
        })
    }

    /// The saturated chain `a = c₀ ⋖ c₁ ⋖ … ⋖ c_k = b`, if `a ⪯ b`.
    pub fn saturated_chain(&self, a: Vertex, b: Vertex) -> Result<Option<Vec<Vertex>>> {
        self.check(a)?;
        self.check(b)?;
        if !self.leq(a, b) {
            return Ok(None);
        }
        let mut chain = vec![b];
        let mut cur = b;
        while cur != a {
            cur = self.parent(cur).expect("a lies on the root path of b");
            chain.push(cur);
        }
        chain.reverse();
        Ok(Some(chain))
    }
}

/// The decomposition of a connected odd component into a core `K` and trees
/// `T_k` (one hanging off each `k ∈ K`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TreeDecomposition {
    pub core: VertexSet,
    pub trees: BTreeMap<Vertex, TreeOrder>,
}

impl TreeDecomposition {
    /// The tree containing `v`, with its core vertex.
    pub fn tree_of(&self, v: Vertex) -> Option<(Vertex, &TreeOrder)> {
        self.trees
            .iter()
            .find(|(_, t)| t.contains(v))
            .map(|(&k, t)| (k, t))
    }
}

/// Decompose the odd component `component` around the core `core`.
///
/// `core` must be nonempty, connected in Γ^odd and contain every vertex that
/// lies on a simple closed path; each remaining vertex then hangs off exactly
/// one core vertex through a tree.
pub fn tree_decomposition(
    g: &CoxeterGraph,
    component: &VertexSet,
    core: &VertexSet,
) -> Result<TreeDecomposition> {
    if core.is_empty() {
        return Err(CoxError::InvalidCore("core is empty".into()));
    }
    if !core.is_subset(component) {
        return Err(CoxError::InvalidCore("core is not inside the component".into()));
    }
    if !g.is_odd_connected(core) {
        return Err(CoxError::InvalidCore("core is not connected in the odd graph".into()));
    }
    let cycles = cycle_analysis(g, component);
    if let Some(&v) = cycles.cycle_vertices.difference(core).next() {
        return Err(CoxError::InvalidCore(format!(
            "cycle vertex {} lies outside the core",
            g.name(v)
        )));
    }
    // Multi-source BFS from the core, never re-entering it.
    let mut owner: BTreeMap<Vertex, Vertex> = core.iter().map(|&k| (k, k)).collect();
    let mut parent: BTreeMap<Vertex, Option<Vertex>> = core.iter().map(|&k| (k, None)).collect();
    let mut queue: VecDeque<Vertex> = core.iter().copied().collect();
    while let Some(v) = queue.pop_front() {
        for w in g.odd_neighbors(v) {
            if component.contains(&w) && !owner.contains_key(&w) {
                owner.insert(w, owner[&v]);
                parent.insert(w, Some(v));
                queue.push_back(w);
            }
        }
    }
    if owner.len() != component.len() {
        return Err(CoxError::InvalidCore("component is not connected".into()));
    }
    let mut trees = BTreeMap::new();
    for &k in core {
        let links: BTreeMap<Vertex, Option<Vertex>> = owner
            .iter()
            .filter(|(_, &o)| o == k)
            .map(|(&v, _)| (v, parent[&v]))
            .collect();
        trees.insert(k, TreeOrder::new(k, links));
    }
    Ok(TreeDecomposition {
        core: core.clone(),
        trees,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(src: &str) -> CoxeterGraph {
        CoxeterGraph::parse_text(src).unwrap()
    }

    fn set(g: &CoxeterGraph, names: &[&str]) -> VertexSet {
        names.iter().map(|n| g.vertex(n).unwrap()).collect()
    }

    #[test]
    fn build_defaults_and_errors() {
        let g = graph("edge a b 3\nedge b c 3\n");
        assert_eq!(g.len(), 3);
        assert_eq!(g.m(0, 2), Label::Finite(2));
        let err = CoxeterGraph::parse_text("edge a b 3\nedge b a 4\n").unwrap_err();
        assert!(matches!(err, CoxError::Parse { line: 2, .. }), "{err}");
        let g = graph("edge a b inf");
        assert_eq!(g.m(0, 1), Label::Infinite);
        assert!(CoxeterGraph::parse_text("edge a a 3").is_err());
        assert!(matches!(
            CoxeterGraph::parse_text("edge a b 1"),
            Err(CoxError::InvalidLabel { .. })
        ));
        assert!(matches!(
            CoxeterGraph::parse_text("edge a b x"),
            Err(CoxError::Parse { line: 1, .. })
        ));
    }

    #[test]
    fn json_round_trip() {
        let g = CoxeterGraph::parse_json(
            r#"{"vertices":["a","b","c","d"],"edges":[["a","b",3],["a","c","inf"]]}"#,
        )
        .unwrap();
        assert_eq!(g.m(0, 2), Label::Infinite);
        assert_eq!(g.len(), 4);
        let back = CoxeterGraph::parse_json(&g.to_json_value().to_string()).unwrap();
        assert_eq!(back, g);
        assert_eq!(CoxeterGraph::parse_text(&g.to_text()).unwrap(), g);
    }

    #[test]
    fn odd_components() {
        let g = graph("edge a b 3\nedge b c 4\n");
        assert_eq!(g.odd_component(0), set(&g, &["a", "b"]));
        let g = graph("edge x1 x2 3\nedge x2 x3 3\nedge x3 x4 3\n");
        assert_eq!(g.odd_component(1).len(), 4);
        let g = graph("edge a b inf");
        assert_eq!(g.odd_component(0), set(&g, &["a"]));
    }

    #[test]
    fn cycles() {
        let g = graph("edge a b 3\nedge b c 3\nedge a c 3\n");
        let info = cycle_analysis(&g, &g.odd_component(0));
        assert_eq!(info.cycle_rank, 1);
        assert_eq!(info.cycle_vertices.len(), 3);
        let g = graph("edge a b 3\nedge b c 5\nedge c d 3\nedge b e 3\n");
        let info = cycle_analysis(&g, &g.odd_component(0));
        assert!(info.acyclic);
        assert!(info.cycle_vertices.is_empty());
        // Square x-u-s-v-x with labels 3.
        let g = graph("edge x u 3\nedge u s 3\nedge s v 3\nedge v x 3\n");
        let info = cycle_analysis(&g, &g.odd_component(0));
        assert_eq!((info.cycle_rank, info.cycle_vertices.len()), (1, 4));
        // Triangle with a pendant vertex: the pendant is not a cycle vertex.
        let g = graph("edge a b 3\nedge b c 3\nedge a c 3\nedge a d 3\n");
        let info = cycle_analysis(&g, &g.odd_component(0));
        assert_eq!(info.cycle_vertices, set(&g, &["a", "b", "c"]));
    }

    #[test]
    fn decompositions() {
        let g = graph("edge a b 3\nedge b c 3\n");
        let comp = g.odd_component(0);
        let d = tree_decomposition(&g, &comp, &set(&g, &["b"])).unwrap();
        let t = &d.trees[&1];
        assert_eq!(t.atoms(), set(&g, &["a", "c"]));
        let g = graph("edge a b 3\nedge b c 3\nedge a c 3\nedge a d 3\n");
        let comp = g.odd_component(0);
        let d = tree_decomposition(&g, &comp, &set(&g, &["a", "b", "c"])).unwrap();
        assert_eq!(d.trees[&0].vertices(), set(&g, &["a", "d"]));
        assert!(tree_decomposition(&g, &comp, &set(&g, &["a", "d"])).is_err());
        let d = tree_decomposition(&g, &comp, &comp).unwrap();
        assert!(d.trees.values().all(|t| t.len() == 1));
        let g2 = graph("edge a b 3\nedge c d 3\nedge b c 2\n");
        let comp = set(&g2, &["a", "b", "c", "d"]);
        assert!(tree_decomposition(&g2, &comp, &set(&g2, &["a", "c"])).is_err());
    }

    #[test]
    fn tree_order_queries() {
        // root r with children a, b; a has child c.
        let parent = BTreeMap::from([(0, None), (1, Some(0)), (2, Some(0)), (3, Some(1))]);
        let t = TreeOrder::new(0, parent);
        assert_eq!(t.meet(1, 2).unwrap(), 0);
        assert_eq!(t.meet(3, 2).unwrap(), 0);
        assert_eq!(t.meet(3, 1).unwrap(), 1);
        assert!(t.leq(0, 3) && t.leq(1, 3) && !t.leq(2, 3));
        assert!(t.covers(1, 3) && !t.covers(0, 3));
        assert_eq!(t.atoms(), VertexSet::from([1, 2]));
        assert!(t.is_order_ideal(&VertexSet::from([0, 1])));
        assert!(!t.is_order_ideal(&VertexSet::from([1, 3])));
        assert_eq!(t.saturated_chain(0, 3).unwrap(), Some(vec![0, 1, 3]));
        assert_eq!(t.saturated_chain(2, 3).unwrap(), None);
        assert!(t.meet(0, 9).is_err());
    }
}
