//! Recognition of the finite irreducible Coxeter types and of the auxiliary
//! four-vertex type `P(m)`.
//!
//! A component is matched against each candidate type by a cheap invariant
//! pre-filter (size, label multiset, degree sequence) followed by an exact
//! backtracking search for a vertex ordering that realizes the type's
//! standard labelling.

use std::fmt;

use serde::{Serialize, Serializer};

use crate::graph::{CoxeterGraph, CoxeterMatrix, Label, Vertex, VertexSet};

/// Isomorphism type of a connected Coxeter diagram.
#[derive(Copy, Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum IrreducibleType {
    A(usize),
    B(usize),
    D(usize),
    E(usize),
    F4,
    H(usize),
    /// Dihedral `I₂(m)` with `m = 5` or `m ≥ 6` (`I₂(3) = A₂`, `I₂(4) = B₂`).
    I2(u32),
    /// The infinite four-vertex type `P(m)` (`m` odd).
    P(u32),
    NotFiniteType,
}

impl IrreducibleType {
    /// Whether the type names a finite group.
    pub fn is_finite(self) -> bool {
        !matches!(self, IrreducibleType::P(_) | IrreducibleType::NotFiniteType)
    }

    /// Number of generators, when defined.
    pub fn rank(self) -> Option<usize> {
        use IrreducibleType::*;
        match self {
            A(n) | B(n) | D(n) | E(n) | H(n) => Some(n),
            F4 | P(_) => Some(4),
            I2(_) => Some(2),
            NotFiniteType => None,
        }
    }

    /// Group order for finite types (saturating on overflow).
    pub fn group_order(self) -> Option<u128> {
        use IrreducibleType::*;
        let fact = |n: usize| (1..=n as u128).product::<u128>();
        Some(match self {
            A(n) => fact(n + 1),
            B(n) => (1u128 << n) * fact(n),
            D(n) => (1u128 << (n - 1)) * fact(n),
            E(6) => 51_840,
            E(7) => 2_903_040,
            E(8) => 696_729_600,
            F4 => 1152,
            H(3) => 120,
            H(4) => 14_400,
            I2(m) => 2 * m as u128,
            _ => return None,
        })
    }

    /// Number of positive roots (= number of reflections) for finite types.
    pub fn positive_roots(self) -> Option<usize> {
        use IrreducibleType::*;
        Some(match self {
            A(n) => n * (n + 1) / 2,
            B(n) => n * n,
            D(n) => n * (n - 1),
            E(6) => 36,
            E(7) => 63,
            E(8) => 120,
            F4 => 24,
            H(3) => 15,
            H(4) => 60,
            I2(m) => m as usize,
            _ => return None,
        })
    }

    /// The standard labelling of the type as a Coxeter matrix: the sequence
    /// `(s₁,…,s_n)` is of this type iff `m(s_i,s_j)` equals entry `(i,j)`.
    pub fn pattern(self) -> Option<CoxeterMatrix> {
        use IrreducibleType::*;
        let three = Label::Finite(3);
        let path = |n: usize| {
            let mut m = CoxeterMatrix::new(n);
            for i in 0..n.saturating_sub(1) {
                m.set(i, i + 1, three);
            }
            m
        };
        Some(match self {
            A(n) if n >= 1 => path(n),
            B(n) if n >= 2 => {
                let mut m = path(n);
                m.set(n - 2, n - 1, Label::Finite(4));
                m
            }
            D(n) if n >= 4 => {
                let mut m = CoxeterMatrix::new(n);
                for i in 0..n - 2 {
                    m.set(i, i + 1, three);
                }
                m.set(n - 3, n - 1, three);
                m
            }
            E(n) if (6..=8).contains(&n) => {
                let mut m = CoxeterMatrix::new(n);
                m.set(0, 2, three);
                m.set(1, 3, three);
                for i in 2..n - 1 {
                    m.set(i, i + 1, three);
                }
                m
            }
            F4 => {
                let mut m = path(4);
                m.set(1, 2, Label::Finite(4));
                m
            }
            H(n) if n == 3 || n == 4 => {
                let mut m = path(n);
                m.set(n - 2, n - 1, Label::Finite(5));
                m
            }
            I2(m) if m >= 2 => {
                let mut mat = CoxeterMatrix::new(2);
                mat.set(0, 1, Label::Finite(m));
                mat
            }
            P(m) if m >= 3 && m % 2 == 1 => {
                let mut mat = CoxeterMatrix::new(4);
                mat.set(0, 1, Label::Finite(m));
                mat.set(1, 2, three);
                mat.set(2, 3, three);
                mat.set(0, 2, Label::Infinite);
                mat
            }
            _ => return None,
        })
    }
}

impl fmt::Display for IrreducibleType {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        use IrreducibleType::*;
        match self {
            A(n) => write!(f, "A{n}"),
            B(n) => write!(f, "B{n}"),
            D(n) => write!(f, "D{n}"),
            E(n) => write!(f, "E{n}"),
            F4 => f.write_str("F4"),
            H(n) => write!(f, "H{n}"),
            I2(m) => write!(f, "I2({m})"),
            P(m) => write!(f, "P({m})"),
            NotFiniteType => f.write_str("not-finite-type"),
        }
    }
}

impl Serialize for IrreducibleType {
    fn serialize<S: Serializer>(&self, s: S) -> Result<S::Ok, S::Error> {
        s.serialize_str(&self.to_string())
    }
}

/// A classification result together with an ordering realizing the pattern.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Classification {
    pub ty: IrreducibleType,
    /// Vertex ordering `(s₁,…,s_n)` of type `ty`; empty for `NotFiniteType`.
    pub witness: Vec<usize>,
}

/// Candidate types for a connected diagram on `n` vertices whose drawn labels
/// are `labels` (in canonical precedence order).
fn candidates(n: usize, labels: &[Label]) -> Vec<IrreducibleType> {
    use IrreducibleType::*;
    let mut out = Vec::new();
    if n == 2 {
        match labels.first() {
            Some(Label::Finite(3)) => out.push(A(2)),
            Some(Label::Finite(4)) => out.push(B(2)),
            Some(&Label::Finite(m)) if m >= 5 => out.push(I2(m)),
            _ => {}
        }
        return out;
    }
    out.push(A(n));
    if n >= 3 {
        out.push(B(n));
    }
    if n >= 4 {
        out.push(D(n));
    }
    if (6..=8).contains(&n) {
        out.push(E(n));
    }
    if n == 4 {
        out.push(F4);
        for l in labels {
            if let &Label::Finite(m) = l {
                if m % 2 == 1 && !out.contains(&P(m)) {
                    out.push(P(m));
                }
            }
        }
    }
    if n == 3 || n == 4 {
        out.push(H(n));
    }
    out
}

fn label_profile(m: &CoxeterMatrix, verts: &[usize]) -> (Vec<Label>, Vec<Vec<Label>>) {
    let mut labels = Vec::new();
    let mut degrees = Vec::new();
    for (a, &i) in verts.iter().enumerate() {
        let mut row: Vec<Label> = verts
            .iter()
            .filter(|&&j| j != i && m.get(i, j) != Label::Finite(2))
            .map(|&j| m.get(i, j))
            .collect();
        row.sort();
        degrees.push(row);
        for &j in &verts[a + 1..] {
            if m.get(i, j) != Label::Finite(2) {
                labels.push(m.get(i, j));
            }
        }
    }
    labels.sort();
    degrees.sort();
    (labels, degrees)
}

/// Backtracking search for an ordering of `verts` realizing `pattern`.
fn match_pattern(m: &CoxeterMatrix, verts: &[usize], pattern: &CoxeterMatrix) -> Option<Vec<usize>> {
    let n = verts.len();
    if pattern.rank() != n {
        return None;
    }
    let all: Vec<usize> = (0..n).collect();
    if label_profile(m, verts) != label_profile(pattern, &all) {
        return None;
    }
    let mut order = Vec::with_capacity(n);
    let mut used = vec![false; n];
    fn extend(
        m: &CoxeterMatrix,
        verts: &[usize],
        pattern: &CoxeterMatrix,
        order: &mut Vec<usize>,
        used: &mut [bool],
    ) -> bool {
        let k = order.len();
        if k == verts.len() {
            return true;
        }
        for c in 0..verts.len() {
            if used[c] {
                continue;
            }
            let fits = order
                .iter()
                .enumerate()
                .all(|(j, &o)| m.get(verts[o], verts[c]) == pattern.get(j, k));
            if fits {
                used[c] = true;
                order.push(c);
                if extend(m, verts, pattern, order, used) {
                    return true;
                }
                order.pop();
                used[c] = false;
            }
        }
        false
    }
    if extend(m, verts, pattern, &mut order, &mut used) {
        Some(order.into_iter().map(|i| verts[i]).collect())
    } else {
        None
    }
}

/// Classify the connected component `component` of the matrix `m`.
pub fn classify_matrix(m: &CoxeterMatrix, component: &[usize]) -> Classification {
    let mut verts = component.to_vec();
    verts.sort_unstable();
    let n = verts.len();
    let (labels, _) = label_profile(m, &verts);
    if n == 1 {
        return Classification {
            ty: IrreducibleType::A(1),
            witness: verts,
        };
    }
    for ty in candidates(n, &labels) {
        let pattern = ty.pattern().expect("candidate types have patterns");
        if let Some(witness) = match_pattern(m, &verts, &pattern) {
            return Classification { ty, witness };
        }
    }
    Classification {
        ty: IrreducibleType::NotFiniteType,
        witness: Vec::new(),
    }
}

/// Classify a connected vertex set of a Coxeter graph.
pub fn classify_irreducible(g: &CoxeterGraph, component: &VertexSet) -> Classification {
    let verts: Vec<usize> = component.iter().copied().collect();
    classify_matrix(g.matrix(), &verts)
}

/// Whether the ordered tuple `seq` is of type `ty`.
pub fn detect_sequence(g: &CoxeterGraph, seq: &[Vertex], ty: IrreducibleType) -> bool {
    let Some(pattern) = ty.pattern() else {
        return false;
    };
    if pattern.rank() != seq.len() {
        return false;
    }
    let distinct: VertexSet = seq.iter().copied().collect();
    if distinct.len() != seq.len() {
        return false;
    }
    (0..seq.len()).all(|i| (i + 1..seq.len()).all(|j| g.m(seq[i], seq[j]) == pattern.get(i, j)))
}

/// Types of all connected components of a Coxeter matrix, one per component
/// (ordered by least index).
pub fn component_types(m: &CoxeterMatrix) -> Vec<IrreducibleType> {
    m.components()
        .iter()
        .map(|c| classify_matrix(m, c).ty)
        .collect()
}

/// Types of the connected components of Γ restricted to `set`.
pub fn set_component_types(g: &CoxeterGraph, set: &VertexSet) -> Vec<(VertexSet, IrreducibleType)> {
    g.components_within(set)
        .into_iter()
        .map(|c| {
            let ty = classify_irreducible(g, &c).ty;
            (c, ty)
        })
        .collect()
}

/// Whether `W_set` is finite (every component of Γ_set is of finite type).
pub fn is_finite_set(g: &CoxeterGraph, set: &VertexSet) -> bool {
    set_component_types(g, set).iter().all(|(_, t)| t.is_finite())
}

/// Whether the whole Coxeter group is finite.
pub fn is_finite_group(g: &CoxeterGraph) -> bool {
    let all: VertexSet = g.vertices().collect();
    is_finite_set(g, &all)
}

/// Sorted multiset of the finite component types of a matrix (the type of its
/// finite part).
pub fn finite_part_types(m: &CoxeterMatrix) -> Vec<IrreducibleType> {
    let mut out: Vec<IrreducibleType> = component_types(m).into_iter().filter(|t| t.is_finite()).collect();
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::IrreducibleType::*;
    use super::*;

    fn graph(src: &str) -> CoxeterGraph {
        CoxeterGraph::parse_text(src).unwrap()
    }

    fn classify_all(g: &CoxeterGraph) -> IrreducibleType {
        let all: VertexSet = g.vertices().collect();
        classify_irreducible(g, &all).ty
    }

    #[test]
    fn paper_examples() {
        assert_eq!(classify_all(&graph("edge a b 3\nedge b c 3\nedge c d 4")), B(4));
        assert_eq!(classify_all(&graph("edge a b 3\nedge b c 4\nedge c d 3")), F4);
        let p = graph("edge x1 x2 5\nedge x2 x3 3\nedge x3 x4 3\nedge x1 x3 inf");
        let c = classify_all(&p);
        assert_eq!(c, P(5));
        assert!(!c.is_finite());
    }

    #[test]
    fn low_rank_normalizations() {
        assert_eq!(classify_all(&graph("edge a b 3")), A(2));
        assert_eq!(classify_all(&graph("edge a b 4")), B(2));
        assert_eq!(classify_all(&graph("edge a b 6")), I2(6));
        assert_eq!(classify_all(&graph("edge a b inf")), NotFiniteType);
        assert_eq!(classify_all(&graph("vertex a")), A(1));
        // D3 is A3.
        assert_eq!(classify_all(&graph("edge a b 3\nedge b c 3")), A(3));
        assert_eq!(classify_all(&graph("edge c a 3\nedge c b 3\nedge c d 3")), D(4));
    }

    #[test]
    fn exceptional_and_infinite() {
        let e8 = "edge 1 3 3\nedge 2 4 3\nedge 3 4 3\nedge 4 5 3\nedge 5 6 3\nedge 6 7 3\nedge 7 8 3";
        assert_eq!(classify_all(&graph(e8)), E(8));
        assert_eq!(classify_all(&graph("edge a b 3\nedge b c 5")), H(3));
        assert_eq!(classify_all(&graph("edge a b 3\nedge b c 3\nedge c a 3")), NotFiniteType);
        assert_eq!(classify_all(&graph("edge a b 4\nedge b c 4")), NotFiniteType);
        assert_eq!(classify_all(&graph("edge a b 5\nedge b c 5")), NotFiniteType);
        // Affine D4 tilde: star with four arms.
        assert_eq!(
            classify_all(&graph("edge c a 3\nedge c b 3\nedge c d 3\nedge c e 3")),
            NotFiniteType
        );
        // P(m) needs m odd.
        let p4 = graph("edge x1 x2 4\nedge x2 x3 3\nedge x3 x4 3\nedge x1 x3 inf");
        assert_eq!(classify_all(&p4), NotFiniteType);
    }

    #[test]
    fn sequences() {
        let g = graph("edge a b 3\nedge b c 3");
        assert!(detect_sequence(&g, &[0, 1, 2], A(3)));
        assert!(detect_sequence(&g, &[2, 1, 0], A(3)));
        assert!(!detect_sequence(&g, &[0, 2, 1], A(3)));
        let g = graph("edge a b 3\nedge b c 3\nedge a c 3");
        assert!(!detect_sequence(&g, &[0, 1, 2], A(3)));
        let g = graph("edge yp y 3\nedge y s0 4\nedge s0 s1 3");
        let seq = ["yp", "y", "s0", "s1"].map(|n| g.vertex(n).unwrap());
        assert!(detect_sequence(&g, &seq, F4));
    }

    #[test]
    fn finiteness() {
        assert!(!is_finite_group(&graph("edge a b 3\nedge b c 3\nedge a c 3")));
        assert!(is_finite_group(&graph("edge a b 3\nedge c d 3\nedge d e 4")));
        assert!(is_finite_group(&graph("vertex a")));
    }

    #[test]
    fn witness_realizes_pattern() {
        let g = graph("edge q b 3\nedge b z 3\nedge z a 4");
        let all: VertexSet = g.vertices().collect();
        let c = classify_irreducible(&g, &all);
        assert_eq!(c.ty, B(4));
        assert!(detect_sequence(&g, &c.witness, c.ty));
    }
}
