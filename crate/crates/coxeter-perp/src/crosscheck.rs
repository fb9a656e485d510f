//! Comparison of the combinatorial presentation of `W^{⊥x}` with the numeric
//! oracle on finite Coxeter groups.

use serde::Serialize;

use crate::error::Result;
use crate::graph::{CoxeterGraph, CoxeterMatrix, Vertex};
use crate::oracle::{geometric_form, oracle_perp_matrix, OraclePerp};
use crate::presentation::{perp_coxeter_matrix, PerpPresentation, PerpResult};

/// Outcome of a presentation-versus-oracle comparison at one generator.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Crosscheck {
    pub agree: bool,
    /// Whether the presentation was available (every class certified).
    pub supported: bool,
    pub presentation_rank: usize,
    pub oracle_rank: usize,
    /// `matching[i]` is the oracle simple root equal to the root of class `i`.
    pub matching: Vec<Option<usize>>,
    pub mismatches: Vec<String>,
}

/// Match class roots to oracle simple roots and compare the two matrices.
pub fn compare(g: &CoxeterGraph, p: &PerpPresentation, oracle: &OraclePerp, tol: f64) -> Crosscheck {
    let form = geometric_form(g);
    let mut mismatches = Vec::new();
    let matching: Vec<Option<usize>> = p
        .roots
        .iter()
        .map(|r| {
            oracle
                .simples
                .iter()
                .position(|b| (form.inner(&r.root, b) - 1.0).abs() <= tol)
        })
        .collect();
    for (i, m) in matching.iter().enumerate() {
        if m.is_none() {
            mismatches.push(format!("class {i} root is not an oracle simple root"));
        }
    }
    let mut used: Vec<usize> = matching.iter().flatten().copied().collect();
    used.sort_unstable();
    used.dedup();
    if used.len() != matching.len() || matching.len() != oracle.simples.len() {
        mismatches.push(format!(
            "no bijection: {} classes, {} oracle simples, {} matched",
            matching.len(),
            oracle.simples.len(),
            used.len()
        ));
    }
    if mismatches.is_empty() {
        let perm: Vec<usize> = matching.iter().map(|m| m.expect("checked")).collect();
        let permuted = permute(&oracle.matrix, &perm);
        for i in 0..perm.len() {
            for j in i + 1..perm.len() {
                if p.orders.get(i, j) != permuted.get(i, j) {
                    mismatches.push(format!(
                        "order between classes {i} and {j}: presentation {} oracle {}",
                        p.orders.get(i, j),
                        permuted.get(i, j)
                    ));
                }
            }
        }
    }
    Crosscheck {
        agree: mismatches.is_empty(),
        supported: true,
        presentation_rank: p.classes.len(),
        oracle_rank: oracle.simples.len(),
        matching,
        mismatches,
    }
}

fn permute(m: &CoxeterMatrix, perm: &[usize]) -> CoxeterMatrix {
    let mut out = CoxeterMatrix::new(perm.len());
    for i in 0..perm.len() {
        for j in i + 1..perm.len() {
            out.set(i, j, m.get(perm[i], perm[j]));
        }
    }
    out
}

/// Run both computations at `x` (finite groups only) and compare them.
pub fn crosscheck(g: &CoxeterGraph, x: Vertex, max_roots: usize, tol: f64) -> Result<Crosscheck> {
    let oracle = oracle_perp_matrix(g, x, max_roots, tol)?;
    match perp_coxeter_matrix(g, x)? {
        PerpResult::Presentation(p) => Ok(compare(g, &p, &oracle, tol)),
        PerpResult::Unsupported { classes, .. } => Ok(Crosscheck {
            agree: false,
            supported: false,
            presentation_rank: classes.len(),
            oracle_rank: oracle.simples.len(),
            matching: Vec::new(),
            mismatches: vec!["presentation unsupported: uniform-root condition not certified".into()],
        }),
    }
}
