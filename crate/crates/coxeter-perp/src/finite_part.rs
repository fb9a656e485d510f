//! The finite part `(W^{⊥x})_fin`: the product of the finite irreducible
//! components of `W^{⊥x}`.
//!
//! The computation is purely graph-combinatorial. It evaluates three
//! mutually exclusive hypothesis chains in order:
//!
//! 1. the chains where a generator from inside the odd component `O` of `x`
//!    is finite (type-B, trunk-acyclic, trunk-cyclic);
//! 2. the chains where a generator `(y,s₀)` with `m(y,s₀) ≠ 2` is finite
//!    (F₄, B, non-trunk);
//! 3. the generic product of the families `K₁` and `K₂`.
//!
//! Every condition is a named predicate, and its verdict is recorded in the
//! report's `case_trace`.

use std::collections::BTreeSet;
use std::fmt;

use serde::Serialize;

use crate::error::Result;
use crate::graph::{cycle_analysis, tree_decomposition, CoxeterGraph, CycleInfo, Label, TreeDecomposition, TreeOrder, Vertex, VertexSet};
use crate::oracle::{GroupWord, RootVector};
use crate::presentation::{edge_pairs, gamma_root, pair_classes, perp_coxeter_matrix, relation_instances, EdgePair, PerpResult};
use crate::types::{classify_irreducible, classify_matrix, detect_sequence, is_finite_group, IrreducibleType};

/// `O`, `E` and the remaining vertices for a base vertex `x`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OEPartition {
    /// The odd component of `x` (its conjugacy class among generators).
    pub o: VertexSet,
    /// `{s ∉ O : m(s,z) < ∞ for some z ∈ O}`.
    pub e: VertexSet,
    /// Vertices joined to all of `O` by `∞`; they never interact with `x`.
    pub rest: VertexSet,
}

impl OEPartition {
    /// `O_k(s) = {z ∈ O : m(z,s) = k}`.
    pub fn slice(&self, g: &CoxeterGraph, s: Vertex, k: Label) -> VertexSet {
        self.o.iter().copied().filter(|&z| z != s && g.m(z, s) == k).collect()
    }

    /// `O_even(s)`.
    pub fn even_slice(&self, g: &CoxeterGraph, s: Vertex) -> VertexSet {
        self.o.iter().copied().filter(|&z| z != s && g.m(z, s).is_even()).collect()
    }

    /// Whether every `z ∈ O ∖ except` has `m(z,s)` among `allowed`.
    pub fn labels_within(&self, g: &CoxeterGraph, s: Vertex, allowed: &[Label], except: &[Vertex]) -> bool {
        self.o
            .iter()
            .filter(|z| !except.contains(z))
            .all(|&z| allowed.contains(&g.m(z, s)))
    }
}

/// Split the vertices into `O`, `E` and the rest.
pub fn o_e_partition(g: &CoxeterGraph, x: Vertex) -> OEPartition {
    let o = g.odd_component(x);
    let (mut e, mut rest) = (VertexSet::new(), VertexSet::new());
    for s in g.vertices().filter(|s| !o.contains(s)) {
        if o.iter().any(|&z| g.m(s, z).is_finite()) {
            e.insert(s);
        } else {
            rest.insert(s);
        }
    }
    OEPartition { o, e, rest }
}

/// The theorem (hypothesis chain) that produced a component.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Theorem {
    /// Irreducible, infinite and 2-spherical: trivial finite part.
    TwoSphericalShortcut,
    /// Trunk of type `A_n` completed to `B_{n+1}` by some `s₀ ∈ E`.
    TypeB,
    /// Acyclic odd component with a trunk of finite type.
    TrunkAcyclic,
    /// Bipyramid or `A₃` trunk: a single reflection from inside `O`.
    TrunkCyclic,
    /// A sequence `(y′,y,s₀,s₁)` of type `F₄`.
    F4Case,
    /// A sequence `(s_n,…,s₀,y)` of type `B_{n+2}` or `I₂(m)`.
    BCase,
    /// Non-trunk case with a unique atom: `{y,y′,s₀}` of type `B₃`.
    NonTrunkB3,
    /// Non-trunk case: the single reflection `r_y(y,s₀)`.
    NonTrunkSingle,
    /// Generic family `K₁` (components of `E`).
    GenericFamily1,
    /// Generic family `K₂` (singletons with `O₄(s) ≠ ∅`).
    GenericFamily2,
}

impl fmt::Display for Theorem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let s = serde_json::to_value(self).expect("unit variants serialize");
        f.write_str(s.as_str().unwrap_or_default())
    }
}

/// Which part of the dispatcher produced the result.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Stage {
    TwoSpherical,
    InO,
    NonO,
    Generic,
}

/// How a finite component is generated.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum FinKind {
    /// One reflection `r_x(pair)`.
    SingleReflection { pair: EdgePair },
    /// `G_K = ⟨r_x(base, s) : s ∈ K⟩ ≅ W_K` for a component `K ⊆ E`.
    IsoToStandard { set: VertexSet, base: Vertex },
    /// An irreducible component of the explicit group `W_J^{⊥base}`.
    ExplicitPerp { set: VertexSet, base: Vertex },
}

/// A generator `r_x(pair)` of a finite component, with its root.
#[derive(Clone, Debug, PartialEq)]
pub struct Generator {
    pub pair: EdgePair,
    pub word: GroupWord,
    pub root: RootVector,
}

/// One finite irreducible component of `W^{⊥x}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinComponent {
    pub kind: FinKind,
    pub ty: IrreducibleType,
    pub generators: Vec<Generator>,
    pub provenance: Theorem,
}

/// One evaluated hypothesis.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TraceStep {
    pub hypothesis: String,
    pub holds: bool,
    pub detail: String,
}

/// The finite part of `W^{⊥x}`.
#[derive(Clone, Debug, PartialEq)]
pub struct FinitePartReport {
    pub x: Vertex,
    pub stage: Stage,
    /// The vertex the deciding theorem is stated for; the result at `x` is
    /// its transport along the odd component.
    pub base: Vertex,
    pub components: Vec<FinComponent>,
    /// `(𝓔_x)_fin`: every pair whose generator lies in a finite component.
    pub efin: BTreeSet<EdgePair>,
    pub case_trace: Vec<TraceStep>,
}

impl FinitePartReport {
    /// Sorted component types.
    pub fn types(&self) -> Vec<IrreducibleType> {
        let mut t: Vec<IrreducibleType> = self.components.iter().map(|c| c.ty).collect();
        t.sort();
        t
    }

    pub fn is_trivial(&self) -> bool {
        self.components.is_empty()
    }
}

/// Output of a single stage.
#[derive(Clone, Debug, PartialEq)]
pub struct PartialReport {
    pub theorem: Theorem,
    pub base: Vertex,
    pub components: Vec<FinComponent>,
}

// ----- shared context --------------------------------------------------------

struct Ctx<'a> {
    g: &'a CoxeterGraph,
    x: Vertex,
    p: &'a OEPartition,
    cycles: CycleInfo,
    /// Vertices of `O` having an even-label partner inside `O`.
    even_vertices: VertexSet,
    trace: Vec<TraceStep>,
}

const TWO: Label = Label::Finite(2);
const FOUR: Label = Label::Finite(4);
const INF: Label = Label::Infinite;

impl<'a> Ctx<'a> {
    fn new(g: &'a CoxeterGraph, x: Vertex, p: &'a OEPartition) -> Self {
        let cycles = cycle_analysis(g, &p.o);
        let even_vertices = p
            .o
            .iter()
            .copied()
            .filter(|&a| p.o.iter().any(|&b| b != a && g.m(a, b).is_even()))
            .collect();
        Ctx {
            g,
            x,
            p,
            cycles,
            even_vertices,
            trace: Vec::new(),
        }
    }

    fn note(&mut self, hypothesis: &str, holds: bool, detail: impl Into<String>) -> bool {
        self.trace.push(TraceStep {
            hypothesis: hypothesis.to_string(),
            holds,
            detail: detail.into(),
        });
        holds
    }

    fn names(&self, set: impl IntoIterator<Item = Vertex>) -> String {
        let v: Vec<&str> = set.into_iter().map(|s| self.g.name(s)).collect();
        format!("{{{}}}", v.join(","))
    }

    fn seq(&self, seq: &[Vertex]) -> String {
        let v: Vec<&str> = seq.iter().map(|&s| self.g.name(s)).collect();
        format!("({})", v.join(","))
    }

    fn o2(&self, s: Vertex) -> VertexSet {
        self.p.slice(self.g, s, TWO)
    }

    /// `Γ^odd_{set}` is (nonempty and) connected and contains `required`.
    fn connected_containing(&self, set: &VertexSet, required: &VertexSet) -> bool {
        self.g.is_odd_connected(set) && required.is_subset(set)
    }

    /// Every pair in `O` has label 2, odd or ∞.
    fn labels_two_odd_inf(&self) -> Option<(Vertex, Vertex)> {
        pairs(&self.p.o).find(|&(a, b)| {
            let m = self.g.m(a, b);
            !(m == TWO || m.is_odd() || m == INF)
        })
    }

    /// Every pair in `O` has label odd or ∞.
    fn labels_odd_inf(&self) -> bool {
        pairs(&self.p.o).all(|(a, b)| {
            let m = self.g.m(a, b);
            m.is_odd() || m == INF
        })
    }

    /// `∀ s ∈ E ∖ skip`: `O = O_{2,∞}(s)` and `Γ^odd_{O₂(s)}` is connected and
    /// contains `required`.
    fn others_slice_condition(&self, skip: &VertexSet, required: &VertexSet) -> Option<Vertex> {
        self.p.e.iter().copied().filter(|s| !skip.contains(s)).find(|&s| {
            !(self.p.labels_within(self.g, s, &[TWO, INF], &[]) && self.connected_containing(&self.o2(s), required))
        })
    }

    /// Finite irreducible components of `Γ_set`, generated by `r(base, s)`.
    fn standard_factors(&self, set: &VertexSet, base: Vertex, theorem: Theorem) -> Vec<FinComponent> {
        self.g
            .components_within(set)
            .into_iter()
            .filter_map(|c| {
                let ty = classify_irreducible(self.g, &c).ty;
                ty.is_finite().then(|| self.iso_to_standard(c, base, ty, theorem))
            })
            .collect()
    }

    fn iso_to_standard(&self, set: VertexSet, base: Vertex, ty: IrreducibleType, theorem: Theorem) -> FinComponent {
        let generators = set.iter().map(|&s| self.generator(EdgePair::new(base, s))).collect();
        FinComponent {
            kind: FinKind::IsoToStandard { set, base },
            ty,
            generators,
            provenance: theorem,
        }
    }

    fn generator(&self, pair: EdgePair) -> Generator {
        let gr = gamma_root(self.g, self.x, pair);
        Generator {
            pair,
            word: gr.word,
            root: gr.root,
        }
    }

    fn single(&self, pair: EdgePair, theorem: Theorem) -> FinComponent {
        FinComponent {
            kind: FinKind::SingleReflection { pair },
            ty: IrreducibleType::A(1),
            generators: vec![self.generator(pair)],
            provenance: theorem,
        }
    }

    /// The irreducible components of `W_J^{⊥base}`, computed from the
    /// presentation of the parabolic subgraph on `J`.
    fn explicit_perp(&mut self, j: &VertexSet, base: Vertex, theorem: Theorem) -> Result<Vec<FinComponent>> {
        let verts: Vec<Vertex> = j.iter().copied().collect();
        let sub = self.g.induced(j);
        let local = verts.iter().position(|&v| v == base).expect("base lies in J");
        let PerpResult::Presentation(p) = perp_coxeter_matrix(&sub, local)? else {
            self.note("explicit perp presentation", false, "uncertified class inside J");
            return Ok(Vec::new());
        };
        let mut out = Vec::new();
        for comp in p.orders.components() {
            let ty = classify_matrix(&p.orders, &comp).ty;
            if !ty.is_finite() {
                self.note("explicit perp component is finite", false, format!("{ty}"));
                continue;
            }
            let generators = comp
                .iter()
                .map(|&c| {
                    let r = p.classes[c].representative;
                    self.generator(EdgePair::new(verts[r.y], verts[r.s]))
                })
                .collect();
            out.push(FinComponent {
                kind: FinKind::ExplicitPerp {
                    set: j.clone(),
                    base,
                },
                ty,
                generators,
                provenance: theorem,
            });
        }
        Ok(out)
    }

    /// The base vertex for theorems valid for every `x′ ∈ K`.
    fn base_in(&self, k: &VertexSet) -> Vertex {
        if k.contains(&self.x) {
            self.x
        } else {
            *k.iter().next().expect("nonempty trunk")
        }
    }
}

fn pairs(set: &VertexSet) -> impl Iterator<Item = (Vertex, Vertex)> + '_ {
    set.iter()
        .flat_map(move |&a| set.range(a + 1..).map(move |&b| (a, b)))
}

/// Minimal subtree of the acyclic odd graph on `o` spanning `terminals`.
fn steiner_tree(g: &CoxeterGraph, o: &VertexSet, terminals: &VertexSet) -> VertexSet {
    let mut tree = o.clone();
    loop {
        let leaf = tree.iter().copied().find(|&v| {
            !terminals.contains(&v) && g.odd_neighbors(v).iter().filter(|w| tree.contains(w)).count() <= 1
        });
        match leaf {
            Some(v) if tree.len() > 1 => {
                tree.remove(&v);
            }
            _ => return tree,
        }
    }
}

fn is_trunk_type(ty: IrreducibleType) -> bool {
    use IrreducibleType::*;
    matches!(ty, A(n) if n >= 3)
        || matches!(ty, D(n) if n >= 4)
        || matches!(ty, E(6..=8) | H(3) | H(4) | P(_))
}

// ----- stage 1: a finite generator inside O ----------------------------------

/// The trunk `K` forced by the trunk condition on an acyclic odd component:
/// the smallest subtree containing every vertex with an even partner in `O`.
fn acyclic_trunk(ctx: &mut Ctx) -> Option<(VertexSet, IrreducibleType, Vec<Vertex>)> {
    if !ctx.cycles.acyclic {
        ctx.note("odd component acyclic", false, "Γ^odd_O has a cycle");
        return None;
    }
    if ctx.even_vertices.is_empty() {
        ctx.note("trunk K exists", false, "no even label inside O");
        return None;
    }
    let k = steiner_tree(ctx.g, &ctx.p.o, &ctx.even_vertices);
    let cl = classify_irreducible(ctx.g, &k);
    let detail = format!("K = {} of type {}", ctx.names(k.iter().copied()), cl.ty);
    ctx.note("trunk K = span of even-label vertices", true, detail);
    Some((k, cl.ty, cl.witness))
}

fn thm_type_b(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    const H: &str = "type-B";
    let Some((k, ty, witness)) = acyclic_trunk(ctx) else {
        ctx.note(H, false, "no trunk");
        return Ok(None);
    };
    if !matches!(ty, IrreducibleType::A(n) if n >= 3) {
        ctx.note(H, false, format!("trunk is {ty}, not A_n with n ≥ 3"));
        return Ok(None);
    }
    let n = k.len();
    let mut orientations = vec![witness.clone()];
    orientations.push(witness.iter().rev().copied().collect());
    for seq in orientations {
        let xn = seq[n - 1];
        for &s0 in &ctx.p.e {
            let mut full = seq.clone();
            full.push(s0);
            if !detect_sequence(ctx.g, &full, IrreducibleType::B(n + 1)) {
                continue;
            }
            let label = format!("{H} with {}", ctx.seq(&full));
            let singleton = VertexSet::from([s0]);
            let c2 = ctx.g.components_within(&ctx.p.e).contains(&singleton)
                && ctx.p.labels_within(ctx.g, s0, &[TWO, INF], &[xn])
                && ctx.g.is_odd_connected(&ctx.o2(s0));
            if !ctx.note(&format!("{label}: condition (2)"), c2, "{s₀} component of E, O = O_{2,∞}(s₀) ∪ x_n, O₂(s₀) connected") {
                continue;
            }
            if let Some(bad) = ctx.others_slice_condition(&singleton, &k) {
                let detail = format!("fails at s = {}", ctx.g.name(bad));
                ctx.note(&format!("{label}: condition (3)"), false, detail);
                continue;
            }
            ctx.note(H, true, label);
            let base = ctx.base_in(&k);
            let mut j = k.clone();
            j.insert(s0);
            let mut components = ctx.explicit_perp(&j, base, Theorem::TypeB)?;
            let mut rest = ctx.p.e.clone();
            rest.remove(&s0);
            components.extend(ctx.standard_factors(&rest, base, Theorem::TypeB));
            return Ok(Some(PartialReport {
                theorem: Theorem::TypeB,
                base,
                components,
            }));
        }
    }
    ctx.note(H, false, "no s₀ ∈ E completing the trunk to B_{n+1} with conditions (2), (3)");
    Ok(None)
}

fn thm_trunk_acyclic(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    const H: &str = "trunk-acyclic";
    let Some((k, ty, _)) = acyclic_trunk(ctx) else {
        ctx.note(H, false, "no trunk");
        return Ok(None);
    };
    if !is_trunk_type(ty) {
        ctx.note(H, false, format!("trunk type {ty} not among A_n, D_n, E_6–8, H_3, H_4, P(m)"));
        return Ok(None);
    }
    trunk_acyclic_with(ctx, &k, Theorem::TrunkAcyclic).inspect(|r| {
        if r.is_none() {
            ctx.note(H, false, "E-condition fails");
        }
    })
}

/// The conclusion of the trunk-acyclic theorem for a given trunk `K`, if the
/// condition on `E` holds.
fn trunk_acyclic_with(ctx: &mut Ctx, k: &VertexSet, theorem: Theorem) -> Result<Option<PartialReport>> {
    if let Some(bad) = ctx.others_slice_condition(&VertexSet::new(), k) {
        let detail = format!("fails at s = {}", ctx.g.name(bad));
        ctx.note("∀ s ∈ E: O = O_{2,∞}(s), O₂(s) connected ⊇ K", false, detail);
        return Ok(None);
    }
    let detail = format!("K = {}", ctx.names(k.iter().copied()));
    ctx.note("trunk-acyclic", true, detail);
    let base = ctx.base_in(k);
    let mut components = ctx.explicit_perp(k, base, theorem)?;
    components.extend(ctx.standard_factors(&ctx.p.e.clone(), base, theorem));
    Ok(Some(PartialReport {
        theorem,
        base,
        components,
    }))
}

/// A candidate for the trunk-cyclic theorem: the two special vertices, the
/// rest of the trunk, and the tree decomposition around the trunk.
struct CyclicCandidate {
    x1: Vertex,
    x2: Vertex,
    k: VertexSet,
    kminus: VertexSet,
    decomposition: TreeDecomposition,
    acyclic_case: bool,
}

fn bipyramid_candidates(ctx: &mut Ctx) -> Vec<CyclicCandidate> {
    let k = ctx.cycles.cycle_vertices.clone();
    let mut out = Vec::new();
    if k.len() < 4 {
        ctx.note("bipyramid trunk", false, format!("|K| = {} < 4", k.len()));
        return out;
    }
    for (a, b) in pairs(&k) {
        if ctx.g.m(a, b) != TWO {
            continue;
        }
        let kminus: VertexSet = k.iter().copied().filter(|&v| v != a && v != b).collect();
        let spokes = kminus.iter().all(|&y| ctx.g.m(a, y).is(3) && ctx.g.m(b, y).is(3));
        let apart = pairs(&kminus).all(|(y, z)| ctx.g.m(y, z) == INF);
        if spokes && apart {
            if let Ok(decomposition) = tree_decomposition(ctx.g, &ctx.p.o, &k) {
                out.push(CyclicCandidate {
                    x1: a,
                    x2: b,
                    k: k.clone(),
                    kminus,
                    decomposition,
                    acyclic_case: false,
                });
            }
        }
    }
    let holds = !out.is_empty();
    let detail = format!("K = cycle vertices {}", ctx.names(k.iter().copied()));
    ctx.note("bipyramid trunk", holds, detail);
    out
}

fn a3_candidates(ctx: &mut Ctx) -> Vec<CyclicCandidate> {
    let o = ctx.p.o.clone();
    let mut out = Vec::new();
    for &x2 in &o {
        for (x1, x3) in pairs(&o) {
            if x1 == x2 || x3 == x2 {
                continue;
            }
            if ctx.g.m(x1, x3) == TWO && ctx.g.m(x1, x2).is(3) && ctx.g.m(x2, x3).is(3) {
                let k = VertexSet::from([x1, x2, x3]);
                if let Ok(decomposition) = tree_decomposition(ctx.g, &o, &k) {
                    out.push(CyclicCandidate {
                        x1,
                        x2: x3,
                        k,
                        kminus: VertexSet::from([x2]),
                        decomposition,
                        acyclic_case: true,
                    });
                }
            }
        }
    }
    out
}

fn tree(c: &CyclicCandidate, y: Vertex) -> &TreeOrder {
    &c.decomposition.trees[&y]
}

/// Label condition: every label in `O` is 2, odd or ∞, and label-2 pairs
/// are the special pair, a special vertex with a vertex of some `T_y ∖ y`, or
/// comparable elements of some `T_y` (`y ∈ K⁻`).
fn cond_labels(ctx: &Ctx, c: &CyclicCandidate) -> bool {
    if ctx.labels_two_odd_inf().is_some() {
        return false;
    }
    pairs(&ctx.p.o).all(|(s, t)| {
        if ctx.g.m(s, t) != TWO {
            return true;
        }
        if (s, t) == (c.x1.min(c.x2), c.x1.max(c.x2)) {
            return true;
        }
        c.kminus.iter().any(|&y| {
            let ty = tree(c, y);
            let special_and_branch = |p: Vertex, q: Vertex| (p == c.x1 || p == c.x2) && q != y && ty.contains(q);
            special_and_branch(s, t) || special_and_branch(t, s) || ty.comparable(s, t)
        })
    })
}

/// Order-ideal condition; returns `T_y^o` for each `y ∈ K⁻`.
fn cond_order_ideal(ctx: &Ctx, c: &CyclicCandidate) -> Option<Vec<(Vertex, VertexSet)>> {
    let mut out = Vec::new();
    for &y in &c.kminus {
        let ty = tree(c, y);
        let ideal = |xi: Vertex| -> VertexSet {
            ty.vertices()
                .into_iter()
                .filter(|&s| s == y || ctx.g.m(xi, s) == TWO)
                .collect()
        };
        let (t1, t2) = (ideal(c.x1), ideal(c.x2));
        if !ty.is_order_ideal(&t1) || !ty.is_order_ideal(&t2) || t1 != t2 {
            return None;
        }
        if ty.atoms().iter().any(|&a| t1.contains(&a) && !ctx.g.m(y, a).is(3)) {
            return None;
        }
        out.push((y, t1));
    }
    Some(out)
}

/// The same-tree condition on label-2 pairs `s ≺ t` inside `T_y`, `y ∈ K⁻`.
fn cond_same_tree(ctx: &Ctx, c: &CyclicCandidate, ideals: &[(Vertex, VertexSet)]) -> bool {
    ideals.iter().all(|(y, to)| chain_condition(ctx, tree(c, *y), Some(to)))
}

/// For `s ≺ t` in `tree` with `m(s,t) = 2`: (optionally) `t ∈ T^o ∖ root`;
/// `m(s′,t′) = 2` for non-adjacent `s′ ≺ t′ ⪯ t` with `s′ ⪯ s`; and if `t`
/// covers `z` covering `s` then `m(s,z) = m(z,t) = 3`.
fn chain_condition(ctx: &Ctx, tree: &TreeOrder, ideal: Option<&VertexSet>) -> bool {
    let verts = tree.vertices();
    for &s in &verts {
        for &t in &verts {
            if !tree.lt(s, t) || ctx.g.m(s, t) != TWO {
                continue;
            }
            if let Some(to) = ideal {
                if t == tree.root() || !to.contains(&t) {
                    return false;
                }
            }
            for &sp in &verts {
                for &tp in &verts {
                    if sp == tp || !tree.lt(sp, tp) || !tree.leq(tp, t) || !tree.leq(sp, s) {
                        continue;
                    }
                    if !tree.covers(sp, tp) && ctx.g.m(sp, tp) != TWO {
                        return false;
                    }
                }
            }
            if let Some(z) = tree.parent(t) {
                if tree.covers(s, z) && !(ctx.g.m(s, z).is(3) && ctx.g.m(z, t).is(3)) {
                    return false;
                }
            }
        }
    }
    true
}

fn thm_trunk_cyclic(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    const H: &str = "trunk-cyclic";
    let candidates = if ctx.cycles.acyclic {
        a3_candidates(ctx)
    } else {
        bipyramid_candidates(ctx)
    };
    if candidates.is_empty() {
        ctx.note(H, false, "no bipyramid / A₃ trunk");
        return Ok(None);
    }
    for c in candidates {
        let label = format!(
            "{H} with (x′₁,x′₂) = {}, K = {}",
            ctx.seq(&[c.x1, c.x2]),
            ctx.names(c.k.iter().copied())
        );
        if !ctx.note(&format!("{label}: label condition"), cond_labels(ctx, &c), "") {
            continue;
        }
        let Some(ideals) = cond_order_ideal(ctx, &c) else {
            ctx.note(&format!("{label}: order-ideal condition"), false, "");
            continue;
        };
        ctx.note(&format!("{label}: order-ideal condition"), true, "");
        if !ctx.note(&format!("{label}: same-tree condition"), cond_same_tree(ctx, &c, &ideals), "") {
            continue;
        }
        let specials = VertexSet::from([c.x1, c.x2]);
        let e_ok = ctx.p.e.clone().into_iter().find(|&s| {
            let o2 = ctx.o2(s);
            !(ctx.p.labels_within(ctx.g, s, &[TWO, INF], &[])
                && specials.is_subset(&o2)
                && ctx
                    .g
                    .odd_components_within(&o2)
                    .iter()
                    .all(|comp| comp.contains(&c.x1) || comp.contains(&c.x2)))
        });
        if let Some(bad) = e_ok {
            let detail = format!("fails at s = {}", ctx.g.name(bad));
            ctx.note(&format!("{label}: condition on E"), false, detail);
            continue;
        }
        let mut kprime = c.k.clone();
        for (_, to) in &ideals {
            kprime.extend(to.iter().copied());
        }
        if c.acyclic_case {
            let ty = classify_irreducible(ctx.g, &kprime).ty;
            let shape = matches!(ty, IrreducibleType::A(3)) || matches!(ty, IrreducibleType::D(n) if n >= 4);
            let e_contains = ctx
                .p
                .e
                .iter()
                .all(|&s| ctx.connected_containing(&ctx.o2(s), &kprime));
            if shape && e_contains {
                let detail = format!("K′ = {} of type {ty}", ctx.names(kprime.iter().copied()));
                ctx.note(&format!("{label}: reduces to trunk-acyclic"), true, detail);
                return trunk_acyclic_with(ctx, &kprime, Theorem::TrunkAcyclic);
            }
        }
        ctx.note(H, true, label);
        let base = c.x1;
        let mut components = vec![ctx.single(EdgePair::new(c.x1, c.x2), Theorem::TrunkCyclic)];
        let eprime: VertexSet = ctx
            .g
            .components_within(&ctx.p.e)
            .into_iter()
            .filter(|comp| comp.iter().all(|&s| kprime.is_subset(&ctx.o2(s))))
            .flatten()
            .collect();
        components.extend(ctx.standard_factors(&eprime, base, Theorem::TrunkCyclic));
        return Ok(Some(PartialReport {
            theorem: Theorem::TrunkCyclic,
            base,
            components,
        }));
    }
    ctx.note(H, false, "no candidate satisfies all conditions");
    Ok(None)
}

fn stage_in_o(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    if let Some(r) = thm_type_b(ctx)? {
        return Ok(Some(r));
    }
    if let Some(r) = thm_trunk_acyclic(ctx)? {
        return Ok(Some(r));
    }
    thm_trunk_cyclic(ctx)
}

// ----- stage 2: a finite generator (y,s₀) with m(y,s₀) ≠ 2 --------------------

fn thm_f4(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    const H: &str = "F4-case";
    if !(ctx.cycles.acyclic && ctx.labels_odd_inf()) {
        ctx.note(H, false, "O not acyclic with only odd/∞ labels");
        return Ok(None);
    }
    let (o, e) = (ctx.p.o.clone(), ctx.p.e.clone());
    let e_components = ctx.g.components_within(&e);
    for &y in &o {
        for &yp in &o {
            for &s0 in &e {
                for &s1 in &e {
                    let seq = [yp, y, s0, s1];
                    if !detect_sequence(ctx.g, &seq, IrreducibleType::F4) {
                        continue;
                    }
                    let label = format!("{H} with {}", ctx.seq(&seq));
                    let pair = VertexSet::from([s0, s1]);
                    let c2 = e_components.contains(&pair)
                        && ctx.p.labels_within(ctx.g, s0, &[TWO, INF], &[y])
                        && ctx.g.is_odd_connected(&ctx.o2(s0));
                    if !ctx.note(&format!("{label}: condition (2)"), c2, "") {
                        continue;
                    }
                    if let Some(bad) = ctx.others_slice_condition(&VertexSet::from([s0]), &VertexSet::from([y, yp])) {
                        let detail = format!("fails at s = {}", ctx.g.name(bad));
                        ctx.note(&format!("{label}: condition (3)"), false, detail);
                        continue;
                    }
                    ctx.note(H, true, label);
                    let j = VertexSet::from([yp, y, s0, s1]);
                    let mut components = ctx.explicit_perp(&j, y, Theorem::F4Case)?;
                    let rest: VertexSet = e.difference(&j).copied().collect();
                    components.extend(ctx.standard_factors(&rest, y, Theorem::F4Case));
                    return Ok(Some(PartialReport {
                        theorem: Theorem::F4Case,
                        base: y,
                        components,
                    }));
                }
            }
        }
    }
    ctx.note(H, false, "no F₄ sequence satisfying the conditions");
    Ok(None)
}

/// Order a path-shaped component starting at its endpoint `start`.
fn path_from(g: &CoxeterGraph, comp: &VertexSet, start: Vertex) -> Option<Vec<Vertex>> {
    let mut seq = vec![start];
    let mut prev: Option<Vertex> = None;
    let mut cur = start;
    loop {
        let next: Vec<Vertex> = comp
            .iter()
            .copied()
            .filter(|&w| w != cur && Some(w) != prev && g.m(cur, w) != TWO)
            .collect();
        match next.as_slice() {
            [] => break,
            [w] if !seq.contains(w) => {
                prev = Some(cur);
                cur = *w;
                seq.push(cur);
            }
            _ => return None,
        }
    }
    (seq.len() == comp.len()).then_some(seq)
}

fn thm_b(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    const H: &str = "B-case";
    if !(ctx.cycles.acyclic && ctx.labels_odd_inf()) {
        ctx.note(H, false, "O not acyclic with only odd/∞ labels");
        return Ok(None);
    }
    let (o, e) = (ctx.p.o.clone(), ctx.p.e.clone());
    let e_components = ctx.g.components_within(&e);
    for &y in &o {
        for &s0 in &e {
            let m = ctx.g.m(y, s0);
            if !(m.is_even() && m != TWO) {
                continue;
            }
            let comp = e_components.iter().find(|c| c.contains(&s0)).expect("s₀ lies in a component").clone();
            let shape_ok = if comp.len() == 1 {
                true
            } else {
                match path_from(ctx.g, &comp, s0) {
                    Some(mut seq) => {
                        seq.reverse();
                        seq.push(y);
                        detect_sequence(ctx.g, &seq, IrreducibleType::B(seq.len()))
                    }
                    None => false,
                }
            };
            let label = format!("{H} with y = {}, s₀ = {}", ctx.g.name(y), ctx.g.name(s0));
            if !ctx.note(&format!("{label}: B_(n+2) / I₂(m) shape"), shape_ok, "") {
                continue;
            }
            let c2 = ctx.p.labels_within(ctx.g, s0, &[INF], &[y]);
            if !ctx.note(&format!("{label}: O = O_∞(s₀) ∪ y"), c2, "") {
                continue;
            }
            if let Some(bad) = ctx.others_slice_condition(&VertexSet::from([s0]), &VertexSet::from([y])) {
                let detail = format!("fails at s = {}", ctx.g.name(bad));
                ctx.note(&format!("{label}: condition (3)"), false, detail);
                continue;
            }
            ctx.note(H, true, label);
            let mut j = comp.clone();
            j.insert(y);
            let mut components = ctx.explicit_perp(&j, y, Theorem::BCase)?;
            let rest: VertexSet = e.difference(&j).copied().collect();
            components.extend(ctx.standard_factors(&rest, y, Theorem::BCase));
            return Ok(Some(PartialReport {
                theorem: Theorem::BCase,
                base: y,
                components,
            }));
        }
    }
    ctx.note(H, false, "no (y,s₀) satisfying the conditions");
    Ok(None)
}

/// Conditions (1)–(6) of the non-trunk theorems for a `B₂` pair `(y,s₀)`;
/// returns the tree `T = O₂(s₀) ∪ y` ordered from `y`.
fn nontrunk_conditions(ctx: &mut Ctx, y: Vertex, s0: Vertex) -> Option<TreeOrder> {
    let label = format!("non-trunk with (y,s₀) = {}", ctx.seq(&[y, s0]));
    let singleton = VertexSet::from([s0]);
    let o2 = ctx.o2(s0);
    let mut t = o2.clone();
    t.insert(y);
    let c2 = ctx.g.components_within(&ctx.p.e).contains(&singleton)
        && ctx.p.labels_within(ctx.g, s0, &[TWO, INF], &[y])
        && !o2.is_empty()
        && ctx.g.is_odd_connected(&t);
    if !ctx.note(&format!("{label}: condition (2)"), c2, "") {
        return None;
    }
    let order = TreeOrder::of_odd_tree(ctx.g, y, &t);
    let c3 = ctx.labels_two_odd_inf().is_none()
        && pairs(&ctx.p.o).all(|(a, b)| ctx.g.m(a, b) != TWO || order.comparable(a, b));
    if !ctx.note(&format!("{label}: condition (3)"), c3, "") {
        return None;
    }
    let c4 = order.atoms().iter().all(|&a| ctx.g.m(y, a).is(3));
    if !ctx.note(&format!("{label}: condition (4)"), c4, "") {
        return None;
    }
    let c5 = chain_condition(ctx, &order, None);
    if !ctx.note(&format!("{label}: condition (5)"), c5, "") {
        return None;
    }
    if let Some(bad) = ctx.others_slice_condition(&singleton, &VertexSet::from([y])) {
        let detail = format!("fails at s = {}", ctx.g.name(bad));
        ctx.note(&format!("{label}: condition (6)"), false, detail);
        return None;
    }
    Some(order)
}

fn thm_nontrunk(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    const H: &str = "non-trunk";
    if !ctx.cycles.acyclic {
        ctx.note(H, false, "Γ^odd_O has a cycle");
        return Ok(None);
    }
    let (o, e) = (ctx.p.o.clone(), ctx.p.e.clone());
    for &y in &o {
        for &s0 in &e {
            if ctx.g.m(y, s0) != FOUR {
                continue;
            }
            let Some(order) = nontrunk_conditions(ctx, y, s0) else {
                continue;
            };
            let others: Vec<Vertex> = e.iter().copied().filter(|&s| s != s0).collect();
            let t_o: VertexSet = o.iter().copied().filter(|&z| z == y || ctx.g.m(y, z).is_finite()).collect();
            // The chain case is the type-B theorem in disguise.
            let chain: Option<Vec<Vertex>> = {
                let mut c: Vec<Vertex> = t_o.iter().copied().collect();
                c.sort_by_key(|&v| order.depth(v).unwrap_or(usize::MAX));
                let is_chain = c.windows(2).all(|w| order.covers(w[0], w[1]));
                is_chain.then_some(c)
            };
            if let Some(c) = chain {
                let n = c.len() - 1;
                if n >= 2
                    && ctx.g.m(c[n - 2], c[n]) == TWO
                    && others.iter().all(|&s| ctx.o2(s).contains(&c[n]))
                {
                    let detail = format!("T^o = chain {}", ctx.seq(&c));
                    ctx.note(&format!("{H}: reduces to type-B"), true, detail);
                    continue;
                }
            }
            let atoms = order.atoms();
            if ctx.labels_odd_inf() && atoms.len() == 1 {
                let yp = *atoms.iter().next().expect("one atom");
                if others.iter().all(|&s| ctx.o2(s).contains(&yp)) {
                    let detail = format!("J = {}", ctx.names([y, yp, s0]));
                    ctx.note(&format!("{H}: unique-atom case"), true, detail);
                    let j = VertexSet::from([y, yp, s0]);
                    let mut components = ctx.explicit_perp(&j, y, Theorem::NonTrunkB3)?;
                    let rest: VertexSet = others.iter().copied().collect();
                    components.extend(ctx.standard_factors(&rest, y, Theorem::NonTrunkB3));
                    return Ok(Some(PartialReport {
                        theorem: Theorem::NonTrunkB3,
                        base: y,
                        components,
                    }));
                }
            }
            let detail = format!("T^o = {}", ctx.names(t_o.iter().copied()));
            ctx.note(&format!("{H}: single-reflection case"), true, detail);
            let mut components = vec![ctx.single(EdgePair::new(y, s0), Theorem::NonTrunkSingle)];
            let rest: VertexSet = others.iter().copied().collect();
            let eprime: VertexSet = ctx
                .g
                .components_within(&rest)
                .into_iter()
                .filter(|comp| comp.iter().all(|&s| t_o.is_subset(&ctx.o2(s))))
                .flatten()
                .collect();
            components.extend(ctx.standard_factors(&eprime, y, Theorem::NonTrunkSingle));
            return Ok(Some(PartialReport {
                theorem: Theorem::NonTrunkSingle,
                base: y,
                components,
            }));
        }
    }
    ctx.note(H, false, "no (y,s₀) of type B₂ satisfying conditions (1)–(6)");
    Ok(None)
}

fn stage_non_o(ctx: &mut Ctx) -> Result<Option<PartialReport>> {
    if let Some(r) = thm_f4(ctx)? {
        return Ok(Some(r));
    }
    if let Some(r) = thm_b(ctx)? {
        return Ok(Some(r));
    }
    thm_nontrunk(ctx)
}

// ----- stage 3: the generic families -------------------------------------------

/// The generic families: finite components of `E` (`K₁`) and singletons
/// `{s}` with `O₄(s) ≠ ∅` (`K₂`), each with its chosen base vertex `y_K`.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct GeneralFamilies {
    pub k1: Vec<(VertexSet, Vertex)>,
    pub k2: Vec<(VertexSet, Vertex)>,
}

/// `O_even(t) ∖ O₂(t) ⊆ O₂(s)` and every component of `Γ^odd_{O₂(t)}` meets `O₂(s)`.
fn cond_other(ctx: &Ctx, s: Vertex, t: Vertex) -> bool {
    let o2s = ctx.o2(s);
    let o2t = ctx.o2(t);
    let even_ok = ctx
        .p
        .even_slice(ctx.g, t)
        .difference(&o2t)
        .all(|z| o2s.contains(z));
    even_ok
        && ctx
            .g
            .odd_components_within(&o2t)
            .iter()
            .all(|c| !c.is_disjoint(&o2s))
}

/// `Γ^odd_{O₂(s)}` connected, containing every cycle vertex and both ends of
/// every even label inside `O`.
fn cond_trunk_slice(ctx: &Ctx, s: Vertex) -> bool {
    let o2 = ctx.o2(s);
    ctx.g.is_odd_connected(&o2) && ctx.cycles.cycle_vertices.is_subset(&o2) && ctx.even_vertices.is_subset(&o2)
}

fn general(ctx: &mut Ctx) -> GeneralFamilies {
    let mut fam = GeneralFamilies::default();
    let e = ctx.p.e.clone();
    for comp in ctx.g.components_within(&e) {
        let ty = classify_irreducible(ctx.g, &comp).ty;
        let label = format!("generic: K = {}", ctx.names(comp.iter().copied()));
        let others: Vec<Vertex> = e.difference(&comp).copied().collect();
        let inter = comp
            .iter()
            .map(|&s| ctx.o2(s))
            .reduce(|a, b| a.intersection(&b).copied().collect())
            .unwrap_or_default();
        let base = if inter.contains(&ctx.x) {
            Some(ctx.x)
        } else {
            inter.iter().next().copied()
        };
        if ty.is_finite() {
            let c1 = comp
                .iter()
                .all(|&s| ctx.p.labels_within(ctx.g, s, &[TWO, INF], &[]) && cond_trunk_slice(ctx, s));
            let c3 = comp.iter().all(|&s| others.iter().all(|&t| cond_other(ctx, s, t)));
            let holds = c1 && base.is_some() && c3;
            let detail = format!("type {ty}; (1) {c1}, (2) {}, (3) {c3}", base.is_some());
            if ctx.note(&format!("{label} in K₁"), holds, detail) {
                fam.k1.push((comp.clone(), base.expect("checked")));
                continue;
            }
        }
        if comp.len() == 1 {
            let s = *comp.iter().next().expect("singleton");
            let c1 = cond_trunk_slice(ctx, s);
            let o2 = ctx.o2(s);
            let o4 = ctx.p.slice(ctx.g, s, FOUR);
            let c2 = ctx.p.labels_within(ctx.g, s, &[TWO, FOUR, INF], &[])
                && !o4.is_empty()
                && o4.iter().all(|&z| o2.iter().any(|&w| ctx.g.m(z, w).is(3)));
            let c3 = others.iter().all(|&t| cond_other(ctx, s, t));
            let holds = c1 && c2 && c3;
            let detail = format!("(1) {c1}, (2) {c2}, (3) {c3}");
            if ctx.note(&format!("{label} in K₂"), holds, detail) {
                fam.k2.push((comp, base.expect("O₂(s) is nonempty")));
            }
        }
    }
    fam
}

fn stage_generic(ctx: &mut Ctx) -> PartialReport {
    let fam = general(ctx);
    let mut components = Vec::new();
    for (set, base, theorem) in fam
        .k1
        .iter()
        .map(|(k, b)| (k, b, Theorem::GenericFamily1))
        .chain(fam.k2.iter().map(|(k, b)| (k, b, Theorem::GenericFamily2)))
    {
        let ty = classify_irreducible(ctx.g, set).ty;
        components.push(ctx.iso_to_standard(set.clone(), *base, ty, theorem));
    }
    PartialReport {
        theorem: Theorem::GenericFamily1,
        base: ctx.x,
        components,
    }
}

// ----- public entry points -------------------------------------------------------

/// Evaluate the in-`O` hypothesis chain on its own.
pub fn finite_part_in_o(g: &CoxeterGraph, x: Vertex, p: &OEPartition) -> Result<Option<PartialReport>> {
    stage_in_o(&mut Ctx::new(g, x, p))
}

/// Evaluate the `m(y,s₀) ≠ 2` hypothesis chain on its own.
pub fn finite_part_non_o(g: &CoxeterGraph, x: Vertex, p: &OEPartition) -> Result<Option<PartialReport>> {
    stage_non_o(&mut Ctx::new(g, x, p))
}

/// The generic families `K₁` and `K₂`.
pub fn general_families(g: &CoxeterGraph, x: Vertex, p: &OEPartition) -> GeneralFamilies {
    general(&mut Ctx::new(g, x, p))
}

/// Whether `Γ` is irreducible, infinite and 2-spherical (then the finite
/// part is trivial at finite rank).
pub fn two_spherical_shortcut_applies(g: &CoxeterGraph) -> bool {
    g.is_two_spherical() && g.components().len() == 1 && !is_finite_group(g)
}

/// The finite part of `W^{⊥x}`.
pub fn finite_part(g: &CoxeterGraph, x: Vertex) -> Result<FinitePartReport> {
    run(g, x, true)
}

/// As [`finite_part`], but without the 2-spherical shortcut.
pub fn finite_part_staged(g: &CoxeterGraph, x: Vertex) -> Result<FinitePartReport> {
    run(g, x, false)
}

fn run(g: &CoxeterGraph, x: Vertex, shortcut: bool) -> Result<FinitePartReport> {
    let p = o_e_partition(g, x);
    let mut ctx = Ctx::new(g, x, &p);
    if shortcut {
        let holds = two_spherical_shortcut_applies(g);
        ctx.note("2-spherical, irreducible and infinite", holds, "");
        if holds {
            return Ok(finish(ctx, Stage::TwoSpherical, x, Vec::new()));
        }
    }
    if let Some(r) = stage_in_o(&mut ctx)? {
        return Ok(finish(ctx, Stage::InO, r.base, r.components));
    }
    if let Some(r) = stage_non_o(&mut ctx)? {
        return Ok(finish(ctx, Stage::NonO, r.base, r.components));
    }
    let r = stage_generic(&mut ctx);
    Ok(finish(ctx, Stage::Generic, r.base, r.components))
}

fn finish(mut ctx: Ctx, stage: Stage, base: Vertex, components: Vec<FinComponent>) -> FinitePartReport {
    if base != ctx.x {
        let detail = format!(
            "theorem stated for {}; result transported to {} along the odd component",
            ctx.g.name(base),
            ctx.g.name(ctx.x)
        );
        ctx.note("transport to x", true, detail);
    }
    let all: VertexSet = ctx.g.vertices().collect();
    let classes = pair_classes(&edge_pairs(ctx.g, ctx.x, &all), &relation_instances(ctx.g, ctx.x, &all));
    let mut efin = BTreeSet::new();
    for gen in components.iter().flat_map(|c| &c.generators) {
        match classes.iter().find(|c| c.contains(&gen.pair)) {
            Some(class) => efin.extend(class.iter().copied()),
            None => {
                efin.insert(gen.pair);
            }
        }
    }
    FinitePartReport {
        x: ctx.x,
        stage,
        base,
        components,
        efin,
        case_trace: ctx.trace,
    }
}

/// Which of the in-`O` and non-`O` chains hold, each evaluated on its own.
pub fn stage_verdicts(g: &CoxeterGraph, x: Vertex) -> Result<(Option<Theorem>, Option<Theorem>)> {
    let p = o_e_partition(g, x);
    let a = finite_part_in_o(g, x, &p)?.map(|r| r.theorem);
    let b = finite_part_non_o(g, x, &p)?.map(|r| r.theorem);
    Ok((a, b))
}

#[cfg(test)]
mod tests {
    use super::*;
    use IrreducibleType::*;

    fn graph(src: &str) -> CoxeterGraph {
        CoxeterGraph::parse_text(src).unwrap()
    }

    fn fin(src: &str, x: &str) -> FinitePartReport {
        let g = graph(src);
        finite_part(&g, g.vertex(x).unwrap()).unwrap()
    }

    const BIPYRAMID: &str = "edge x1 y 3\nedge x1 yp 3\nedge x2 y 3\nedge x2 yp 3\nedge y yp inf";

    #[test]
    fn partitions() {
        let g = graph("edge x1 x2 3\nedge x2 x3 4");
        let p = o_e_partition(&g, 0);
        assert_eq!((p.o, p.e), (VertexSet::from([0, 1]), VertexSet::from([2])));
        let g = graph("edge a c 3\nedge b c 4\nedge c d inf");
        let p = o_e_partition(&g, g.vertex("a").unwrap());
        // m(a,d) = 2 is finite, so d ∈ E although m(c,d) = ∞.
        assert_eq!(g.set_names(&p.e), ["b", "d"]);
        assert!(p.rest.is_empty());
        let g = graph("edge a b 3\nedge a d inf\nedge b d inf");
        let p = o_e_partition(&g, 0);
        assert_eq!(g.set_names(&p.rest), ["d"]);
    }

    #[test]
    fn worked_examples() {
        let r = fin(BIPYRAMID, "x1");
        assert_eq!((r.stage, r.types()), (Stage::InO, vec![A(1)]));
        assert_eq!(r.efin, BTreeSet::from([EdgePair::new(0, 1), EdgePair::new(1, 0)]));
        let r = fin("edge a b 3\nedge b c 3\nedge c d 3\nedge d e 3", "c");
        assert_eq!((r.stage, r.types()), (Stage::InO, vec![A(3)]));
        let r = fin("edge 1 2 3\nedge 2 3 3\nedge 3 4 3\nedge 4 5 3\nedge 3 6 3", "1");
        assert_eq!(r.types(), vec![A(5)]);
        assert!(fin("edge a b 3\nedge b c 3\nedge a c 3", "a").is_trivial());
        assert_eq!(fin("edge a b 3\nedge b c 3\nedge a c 4", "a").stage, Stage::TwoSpherical);
        let r = fin("edge x s 4", "x");
        assert_eq!((r.stage, r.types()), (Stage::NonO, vec![A(1)]));
        let r = fin("edge yp y 3\nedge y s0 4\nedge s0 s1 3", "y");
        assert_eq!(r.components[0].provenance, Theorem::F4Case);
        let r = fin("edge a b 3\nvertex s", "a");
        assert_eq!((r.stage, r.types()), (Stage::Generic, vec![A(1)]));
        let r = fin("edge a b 3\nedge b c 3\nedge a c 3\nvertex s", "a");
        assert_eq!((r.stage, r.types()), (Stage::Generic, vec![A(1)]));
    }
}
