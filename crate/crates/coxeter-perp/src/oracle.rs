//! Independent numeric model of the geometric representation.
//!
//! Roots are enumerated by closing the simple roots under the simple
//! reflections; group elements of finite Coxeter groups are signed
//! permutations of the positive roots. Nothing here depends on the
//! combinatorial modules, so it serves as a brute-force oracle for them.

use std::collections::{HashMap, HashSet, VecDeque};
use std::f64::consts::PI;

use serde::Serialize;

use crate::error::{CoxError, Result};
use crate::graph::{CoxeterGraph, CoxeterMatrix, Label, Vertex};

/// Default equality tolerance for inner products and coordinates.
pub const DEFAULT_TOL: f64 = 1e-8;
/// Grid used to build deduplication keys for root coordinates.
pub const KEY_GRID: f64 = 1e-6;
/// Default cap on the number of enumerated roots.
pub const DEFAULT_MAX_ROOTS: usize = 20_000;
/// Default cap on the number of enumerated group elements.
pub const DEFAULT_MAX_GROUP: usize = 200_000;
/// Largest finite dihedral order recognized from an inner product.
pub const MAX_DIHEDRAL_ORDER: u32 = 360;

/// A real vector in the geometric representation space, one coordinate per
/// vertex (in vertex index order).
pub type RootVector = Vec<f64>;

/// Word in the generators; `word[0]` acts last (right-to-left convention).
pub type GroupWord = Vec<Vertex>;

/// The symmetric bilinear form `⟨α_s, α_t⟩ = −cos(π/m)` (−1 for `m = ∞`).
#[derive(Clone, Debug, PartialEq)]
pub struct FormMatrix {
    n: usize,
    data: Vec<f64>,
}

/// `−cos(π/m)`, or −1 for `m = ∞`.
pub fn form_value(m: Label) -> f64 {
    match m {
        Label::Finite(1) => 1.0,
        Label::Finite(2) => 0.0,
        Label::Finite(m) => -(PI / m as f64).cos(),
        Label::Infinite => -1.0,
    }
}

impl FormMatrix {
    pub fn rank(&self) -> usize {
        self.n
    }

    /// `⟨α_s, α_t⟩`.
    pub fn get(&self, s: usize, t: usize) -> f64 {
        self.data[s * self.n + t]
    }

    /// `⟨u, v⟩` for vectors in simple-root coordinates.
    pub fn inner(&self, u: &[f64], v: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (i, &ui) in u.iter().enumerate() {
            if ui == 0.0 {
                continue;
            }
            let row = &self.data[i * self.n..(i + 1) * self.n];
            for (j, &vj) in v.iter().enumerate() {
                acc += ui * row[j] * vj;
            }
        }
        acc
    }

    /// `⟨α_s, v⟩`.
    pub fn inner_simple(&self, s: usize, v: &[f64]) -> f64 {
        let row = &self.data[s * self.n..(s + 1) * self.n];
        row.iter().zip(v).map(|(a, b)| a * b).sum()
    }

    /// `s · v = v − 2⟨α_s, v⟩ α_s`.
    pub fn reflect_simple(&self, s: usize, v: &[f64]) -> RootVector {
        let c = 2.0 * self.inner_simple(s, v);
        let mut out = v.to_vec();
        out[s] -= c;
        out
    }

    /// `s_β · v = v − 2⟨β, v⟩ β` for a unit vector `β`.
    pub fn reflect_along(&self, beta: &[f64], v: &[f64]) -> RootVector {
        let c = 2.0 * self.inner(beta, v);
        v.iter().zip(beta).map(|(a, b)| a - c * b).collect()
    }

    /// Apply a word (rightmost letter first) to `v`.
    pub fn apply_word(&self, word: &[Vertex], v: &[f64]) -> RootVector {
        word.iter().rev().fold(v.to_vec(), |acc, &s| self.reflect_simple(s, &acc))
    }
}

/// The form matrix of a Coxeter graph.
pub fn geometric_form(g: &CoxeterGraph) -> FormMatrix {
    form_of_matrix(g.matrix())
}

/// The form matrix of an abstract Coxeter matrix.
pub fn form_of_matrix(m: &CoxeterMatrix) -> FormMatrix {
    let n = m.rank();
    let mut data = vec![0.0; n * n];
    for i in 0..n {
        for j in 0..n {
            data[i * n + j] = form_value(m.get(i, j));
        }
    }
    FormMatrix { n, data }
}

/// The simple root `α_s`.
pub fn simple_root(n: usize, s: usize) -> RootVector {
    let mut v = vec![0.0; n];
    v[s] = 1.0;
    v
}

/// Deduplication key on the rounding grid.
pub fn root_key(v: &[f64]) -> Vec<i64> {
    v.iter().map(|x| (x / KEY_GRID).round() as i64).collect()
}

/// Whether a root is positive (no coordinate is negative beyond `tol`).
pub fn is_positive(v: &[f64], tol: f64) -> bool {
    v.iter().all(|&c| c > -tol) && v.iter().any(|&c| c > tol)
}

/// Whether two vectors agree coordinate-wise within `tol`.
pub fn approx_eq(u: &[f64], v: &[f64], tol: f64) -> bool {
    u.len() == v.len() && u.iter().zip(v).all(|(a, b)| (a - b).abs() <= tol)
}

/// Result of a root enumeration.
#[derive(Clone, Debug)]
pub struct RootEnumeration {
    /// Positive roots first, then their negatives in the same order, so that
    /// root `i + P` is `−(root i)` where `P = positive_count`.
    pub roots: Vec<RootVector>,
    pub positive_count: usize,
    pub complete: bool,
}

impl RootEnumeration {
    pub fn positives(&self) -> &[RootVector] {
        &self.roots[..self.positive_count]
    }

    /// Index of a root by coordinates (via the rounding grid).
    pub fn index_of(&self, v: &[f64]) -> Option<usize> {
        let key = root_key(v);
        self.roots.iter().position(|r| root_key(r) == key)
    }

    fn lookup_table(&self) -> HashMap<Vec<i64>, usize> {
        self.roots.iter().enumerate().map(|(i, r)| (root_key(r), i)).collect()
    }
}

/// Close the simple roots under simple reflections, stopping after `cap`
/// roots (then `complete = false` and the partial set is returned).
pub fn enumerate_roots(g: &CoxeterGraph, cap: usize) -> RootEnumeration {
    let form = geometric_form(g);
    let n = g.len();
    let mut seen: HashSet<Vec<i64>> = HashSet::new();
    let mut found: Vec<RootVector> = Vec::new();
    let mut queue = VecDeque::new();
    for s in 0..n {
        let a = simple_root(n, s);
        seen.insert(root_key(&a));
        found.push(a.clone());
        queue.push_back(a);
    }
    let mut complete = true;
    'outer: while let Some(v) = queue.pop_front() {
        for s in 0..n {
            let w = form.reflect_simple(s, &v);
            if seen.insert(root_key(&w)) {
                if found.len() >= cap {
                    complete = false;
                    break 'outer;
                }
                found.push(w.clone());
                queue.push_back(w);
            }
        }
    }
    let mut positives: Vec<RootVector> = found
        .iter()
        .filter(|r| is_positive(r, DEFAULT_TOL))
        .cloned()
        .collect();
    positives.sort_by_key(|a| root_key(a));
    if complete {
        let negatives: Vec<RootVector> = positives
            .iter()
            .map(|r| r.iter().map(|c| -c).collect())
            .collect();
        let positive_count = positives.len();
        let mut roots = positives;
        roots.extend(negatives);
        RootEnumeration {
            roots,
            positive_count,
            complete,
        }
    } else {
        let positive_count = positives.len();
        let mut roots = positives;
        roots.extend(found.into_iter().filter(|r| !is_positive(r, DEFAULT_TOL)));
        RootEnumeration {
            roots,
            positive_count,
            complete,
        }
    }
}

/// A group element of a finite Coxeter group: the image index of every root
/// (roots ordered as in [`RootEnumeration`]), i.e. a signed permutation of
/// the positive roots.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GroupElement {
    pub images: Vec<u32>,
}

impl GroupElement {
    pub fn identity(len: usize) -> Self {
        GroupElement {
            images: (0..len as u32).collect(),
        }
    }

    /// `self ∘ other` (apply `other` first).
    pub fn compose(&self, other: &GroupElement) -> GroupElement {
        GroupElement {
            images: other.images.iter().map(|&i| self.images[i as usize]).collect(),
        }
    }

    pub fn inverse(&self) -> GroupElement {
        let mut inv = vec![0u32; self.images.len()];
        for (i, &j) in self.images.iter().enumerate() {
            inv[j as usize] = i as u32;
        }
        GroupElement { images: inv }
    }

    pub fn apply(&self, root: usize) -> usize {
        self.images[root] as usize
    }
}

/// The permutation of the enumerated roots induced by the linear map `f`.
fn permutation_of(
    roots: &RootEnumeration,
    table: &HashMap<Vec<i64>, usize>,
    f: impl Fn(&[f64]) -> RootVector,
) -> GroupElement {
    let images = roots
        .roots
        .iter()
        .map(|r| {
            *table
                .get(&root_key(&f(r)))
                .expect("the root system is closed under reflections") as u32
        })
        .collect();
    GroupElement { images }
}

/// Permutations induced by the simple reflections.
pub fn simple_permutations(g: &CoxeterGraph, roots: &RootEnumeration) -> Vec<GroupElement> {
    let form = geometric_form(g);
    let table = roots.lookup_table();
    (0..g.len())
        .map(|s| permutation_of(roots, &table, |v| form.reflect_simple(s, v)))
        .collect()
}

/// Permutation induced by the reflection along the root `beta`.
pub fn reflection_permutation(g: &CoxeterGraph, roots: &RootEnumeration, beta: &[f64]) -> GroupElement {
    let form = geometric_form(g);
    let table = roots.lookup_table();
    permutation_of(roots, &table, |v| form.reflect_along(beta, v))
}

/// Closure of `generators` under composition, up to `cap` elements.
pub fn generate_subgroup(generators: &[GroupElement], len: usize, cap: usize) -> Result<Vec<GroupElement>> {
    let id = GroupElement::identity(len);
    let mut seen: HashSet<GroupElement> = HashSet::from([id.clone()]);
    let mut elements = vec![id.clone()];
    let mut queue = VecDeque::from([id]);
    while let Some(w) = queue.pop_front() {
        for s in generators {
            let ws = w.compose(s);
            if !seen.contains(&ws) {
                if elements.len() >= cap {
                    return Err(CoxError::CapExceeded { what: "group", cap });
                }
                seen.insert(ws.clone());
                elements.push(ws.clone());
                queue.push_back(ws);
            }
        }
    }
    Ok(elements)
}

/// A complete enumeration of a finite Coxeter group.
#[derive(Clone, Debug)]
pub struct GroupEnumeration {
    pub roots: RootEnumeration,
    pub generators: Vec<GroupElement>,
    pub elements: Vec<GroupElement>,
}

impl GroupEnumeration {
    pub fn order(&self) -> usize {
        self.elements.len()
    }
}

/// Enumerate a finite Coxeter group as signed permutations of its positive roots.
pub fn enumerate_group(g: &CoxeterGraph, max_roots: usize, max_group: usize) -> Result<GroupEnumeration> {
    let roots = enumerate_roots(g, max_roots);
    if !roots.complete {
        return Err(CoxError::CapExceeded {
            what: "root",
            cap: max_roots,
        });
    }
    let generators = simple_permutations(g, &roots);
    let elements = generate_subgroup(&generators, roots.roots.len(), max_group)?;
    Ok(GroupEnumeration {
        roots,
        generators,
        elements,
    })
}

/// Number of distinct conjugates of simple reflections in an enumerated group.
pub fn reflection_count(group: &GroupEnumeration) -> usize {
    let mut reflections: HashSet<GroupElement> = HashSet::new();
    for w in &group.elements {
        let winv = w.inverse();
        for s in &group.generators {
            reflections.insert(w.compose(s).compose(&winv));
        }
    }
    reflections.len()
}

/// The reflection subsystem orthogonal to `α_x`.
#[derive(Clone, Debug, Serialize)]
pub struct PerpSubsystem {
    /// Positive roots `γ` with `⟨γ, α_x⟩ = 0`.
    pub perp_positive: Vec<RootVector>,
    /// Canonical simple roots of the reflection subgroup they generate.
    pub simples: Vec<RootVector>,
}

/// Compute `Φ^{⊥x} ∩ Φ⁺` and its simple system.
///
/// A perp-positive root `β` is simple iff `s_β` maps every other
/// perp-positive root to a positive root (canonical generators of a
/// reflection subgroup).
pub fn perp_subsystem(g: &CoxeterGraph, x: Vertex, roots: &RootEnumeration, tol: f64) -> PerpSubsystem {
    let form = geometric_form(g);
    let perp_positive: Vec<RootVector> = roots
        .positives()
        .iter()
        .filter(|r| form.inner_simple(x, r).abs() <= tol)
        .cloned()
        .collect();
    let simples = perp_positive
        .iter()
        .enumerate()
        .filter(|(i, beta)| {
            perp_positive
                .iter()
                .enumerate()
                .all(|(j, gamma)| j == *i || is_positive(&form.reflect_along(beta, gamma), tol))
        })
        .map(|(_, b)| b.clone())
        .collect();
    PerpSubsystem {
        perp_positive,
        simples,
    }
}

/// Secondary (partial) check of simplicity: `β` is not a positive
/// combination `aβ₁ + bβ₂` of two other perp-positive roots. Only two-term
/// combinations are tested.
pub fn is_two_term_indecomposable(beta: &[f64], others: &[RootVector], tol: f64) -> bool {
    for (i, b1) in others.iter().enumerate() {
        for b2 in &others[i + 1..] {
            if let Some((a, b)) = solve_two_term(beta, b1, b2, tol) {
                if a > tol && b > tol {
                    return false;
                }
            }
        }
    }
    true
}

/// Solve `v = a u₁ + b u₂` by least squares in coordinates; returns the
/// coefficients when the residual vanishes.
fn solve_two_term(v: &[f64], u1: &[f64], u2: &[f64], tol: f64) -> Option<(f64, f64)> {
    let dot = |p: &[f64], q: &[f64]| p.iter().zip(q).map(|(a, b)| a * b).sum::<f64>();
    let (g11, g12, g22) = (dot(u1, u1), dot(u1, u2), dot(u2, u2));
    let det = g11 * g22 - g12 * g12;
    if det.abs() <= tol {
        return None;
    }
    let (r1, r2) = (dot(v, u1), dot(v, u2));
    let a = (r1 * g22 - r2 * g12) / det;
    let b = (g11 * r2 - g12 * r1) / det;
    let residual: f64 = v
        .iter()
        .zip(u1.iter().zip(u2))
        .map(|(vi, (p, q))| (vi - a * p - b * q).abs())
        .fold(0.0, f64::max);
    (residual <= 1e3 * tol).then_some((a, b))
}

/// The dihedral order `m` with `⟨β,γ⟩ = −cos(π/m)`, or ∞ when `⟨β,γ⟩ ≤ −1`.
pub fn order_from_inner_product(v: f64, tol: f64) -> Result<Label> {
    if v > tol {
        return Err(CoxError::NumericAmbiguity(v));
    }
    for m in 2..=MAX_DIHEDRAL_ORDER {
        if (v + (PI / m as f64).cos()).abs() <= tol {
            return Ok(Label::Finite(m));
        }
    }
    if v <= -1.0 + tol {
        return Ok(Label::Infinite);
    }
    Err(CoxError::NumericAmbiguity(v))
}

/// Coxeter matrix of the reflections along `simples` (pairwise orders from
/// inner products).
pub fn perp_matrix_from_simples(form: &FormMatrix, simples: &[RootVector], tol: f64) -> Result<CoxeterMatrix> {
    let mut m = CoxeterMatrix::new(simples.len());
    for i in 0..simples.len() {
        for j in i + 1..simples.len() {
            m.set(i, j, order_from_inner_product(form.inner(&simples[i], &simples[j]), tol)?);
        }
    }
    Ok(m)
}

/// Simples and Coxeter matrix of `W^{⊥x}` for a finite Coxeter group.
#[derive(Clone, Debug)]
pub struct OraclePerp {
    pub simples: Vec<RootVector>,
    pub matrix: CoxeterMatrix,
}

/// The oracle's perp Coxeter matrix of a finite Coxeter group.
pub fn oracle_perp_matrix(g: &CoxeterGraph, x: Vertex, max_roots: usize, tol: f64) -> Result<OraclePerp> {
    let roots = enumerate_roots(g, max_roots);
    if !roots.complete {
        return Err(CoxError::CapExceeded {
            what: "root",
            cap: max_roots,
        });
    }
    let sub = perp_subsystem(g, x, &roots, tol);
    let matrix = perp_matrix_from_simples(&geometric_form(g), &sub.simples, tol)?;
    Ok(OraclePerp {
        simples: sub.simples,
        matrix,
    })
}

/// Orders of the centralizer `Z_W(x)` and of `W^{⊥x}` in a finite group.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CentralizerOrders {
    pub z_order: usize,
    pub perp_order: usize,
}

/// Count `Z_W(x)` and `W^{⊥x}` by brute force over an enumerated group.
pub fn oracle_centralizer_order(g: &CoxeterGraph, x: Vertex, group: &GroupEnumeration, tol: f64, max_group: usize) -> Result<CentralizerOrders> {
    let roots = &group.roots;
    let n = g.len();
    let ax = roots
        .index_of(&simple_root(n, x))
        .expect("simple roots are enumerated");
    let neg_ax = ax + roots.positive_count;
    // w x w⁻¹ = x  ⇔  w·α_x = ±α_x.
    let z_order = group
        .elements
        .iter()
        .filter(|w| {
            let img = w.apply(ax);
            img == ax || img == neg_ax
        })
        .count();
    let sub = perp_subsystem(g, x, roots, tol);
    let gens: Vec<GroupElement> = sub
        .perp_positive
        .iter()
        .map(|b| reflection_permutation(g, roots, b))
        .collect();
    let perp_order = generate_subgroup(&gens, roots.roots.len(), max_group)?.len();
    Ok(CentralizerOrders { z_order, perp_order })
}

/// Whether the root `gamma` lies in the W-orbit of `α_x` (finite groups only).
pub fn in_orbit_of_simple(g: &CoxeterGraph, roots: &RootEnumeration, x: Vertex, gamma: &[f64]) -> bool {
    let gens = simple_permutations(g, roots);
    let start = roots
        .index_of(&simple_root(g.len(), x))
        .expect("simple roots are enumerated");
    let Some(target) = roots.index_of(gamma) else {
        return false;
    };
    let mut seen = HashSet::from([start]);
    let mut queue = VecDeque::from([start]);
    while let Some(r) = queue.pop_front() {
        if r == target {
            return true;
        }
        for s in &gens {
            let next = s.apply(r);
            if seen.insert(next) {
                queue.push_back(next);
            }
        }
    }
    false
}

#[cfg(test)]
mod tests {
    use super::*;

    fn graph(src: &str) -> CoxeterGraph {
        CoxeterGraph::parse_text(src).unwrap()
    }

    #[test]
    fn form_values() {
        assert!((form_value(Label::Finite(3)) + 0.5).abs() < 1e-15);
        assert_eq!(form_value(Label::Finite(2)), 0.0);
        assert_eq!(form_value(Label::Infinite), -1.0);
    }

    #[test]
    fn root_counts() {
        assert_eq!(enumerate_roots(&graph("edge a b 3"), 100).roots.len(), 6);
        assert_eq!(enumerate_roots(&graph("edge a b 4"), 100).roots.len(), 8);
        let inf = enumerate_roots(&graph("edge a b inf"), 50);
        assert!(!inf.complete);
    }

    #[test]
    fn group_orders() {
        let order = |src: &str| enumerate_group(&graph(src), 1000, 100_000).unwrap().order();
        assert_eq!(order("edge a b 3\nedge b c 3"), 24);
        assert_eq!(order("edge a b 3\nedge b c 5"), 120);
        assert_eq!(order("edge a b 3\nedge b c 4"), 48);
    }

    #[test]
    fn orders_from_products() {
        assert_eq!(order_from_inner_product(0.0, 1e-8).unwrap(), Label::Finite(2));
        assert_eq!(order_from_inner_product(-0.5, 1e-8).unwrap(), Label::Finite(3));
        assert_eq!(order_from_inner_product(-1.2, 1e-8).unwrap(), Label::Infinite);
        assert!(order_from_inner_product(-0.3, 1e-8).is_err());
        assert!(order_from_inner_product(0.3, 1e-8).is_err());
    }

    #[test]
    fn perp_subsystems() {
        let a3 = graph("edge a b 3\nedge b c 3");
        let roots = enumerate_roots(&a3, 100);
        let sub = perp_subsystem(&a3, 1, &roots, 1e-8);
        assert_eq!(sub.simples.len(), 1);
        let b2 = graph("edge x s 4");
        let roots = enumerate_roots(&b2, 100);
        let sub = perp_subsystem(&b2, 0, &roots, 1e-8);
        assert_eq!(sub.simples.len(), 1);
        let (c, s) = ((PI / 4.0).cos(), (PI / 4.0).sin());
        assert!(approx_eq(&sub.simples[0], &[c / s, 1.0 / s], 1e-12));
        let a2 = graph("edge a b 3");
        let roots = enumerate_roots(&a2, 100);
        assert!(perp_subsystem(&a2, 0, &roots, 1e-8).simples.is_empty());
    }

    #[test]
    fn centralizer_orders() {
        let check = |src: &str, x: &str, z: usize, p: usize| {
            let g = graph(src);
            let grp = enumerate_group(&g, 1000, 100_000).unwrap();
            let o = oracle_centralizer_order(&g, g.vertex(x).unwrap(), &grp, 1e-8, 100_000).unwrap();
            assert_eq!((o.z_order, o.perp_order), (z, p), "{src}");
        };
        check("edge a b 3\nedge b c 3", "a", 4, 2);
        check("edge x s 4", "x", 4, 2);
        check("edge a b 3", "a", 2, 1);
    }
}
