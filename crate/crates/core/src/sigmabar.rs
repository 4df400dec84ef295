//! The finite set `Σ̄_G` of spherically closed spherical roots and the subsets
//! `Π_σ ⊂ Supp σ`.
//!
//! An element is a nonzero non-negative combination of simple roots whose
//! support, numbered in Bourbaki order, carries one of thirteen coefficient
//! patterns (see [`row_patterns`]).

use std::collections::{BTreeMap, BTreeSet};

use serde::Serialize;
use thiserror::Error;

use crate::rootsys::{support_of, RootSystem, SimpleType, WeightVec};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum SigmaError {
    #[error("expected {expected} simple-root coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a nonzero non-negative combination of simple roots")]
    NotPositive(Vec<i64>),
}

/// An element of `Σ̄_G` with its table data.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize)]
pub struct SphericalRoot {
    /// Coefficients over all simple roots of the ambient root system.
    pub coeffs: Vec<i64>,
    /// Table row, 1 to 13.
    pub row: u8,
    pub support: BTreeSet<usize>,
    /// `A1xA1` for row 3, otherwise a single component such as `B3`.
    pub support_type: String,
    /// Bourbaki position to global simple-root index. For row 3 the two
    /// orthogonal roots, lower index first.
    pub renumbering: Vec<usize>,
    /// The tabulated `Π_σ`. Equal to [`pi_sigma`] except in row 11.
    pub pi_sigma: BTreeSet<usize>,
}

impl SphericalRoot {
    pub fn weight(&self, rs: &RootSystem) -> WeightVec {
        rs.root_weight(&self.coeffs)
    }

    /// `Some(i)` if this is the simple root `α_i`.
    pub fn simple_root(&self) -> Option<usize> {
        (self.row == 1).then(|| self.renumbering[0])
    }

    pub fn label(&self) -> String {
        crate::rootsys::coeffs_label(&self.coeffs)
    }
}

/// Coefficient patterns of the rows whose support is connected of the given
/// type, in Bourbaki order. Type `A1` patterns are rows 1 and 2.
pub fn row_patterns(kind: SimpleType, r: usize) -> Vec<(u8, Vec<i64>)> {
    let mut out = Vec::new();
    match (kind, r) {
        (SimpleType::A, 1) => {
            out.push((1, vec![1]));
            out.push((2, vec![2]));
        }
        (SimpleType::A, _) => {
            out.push((4, vec![1; r]));
            if r == 3 {
                out.push((5, vec![1, 2, 1]));
            }
        }
        (SimpleType::B, _) => {
            out.push((6, vec![1; r]));
            out.push((7, vec![2; r]));
            if r == 3 {
                out.push((8, vec![1, 2, 3]));
            }
        }
        (SimpleType::C, _) if r >= 3 => {
            let mut p = vec![2; r];
            p[0] = 1;
            p[r - 1] = 1;
            out.push((9, p));
        }
        (SimpleType::D, _) if r >= 4 => {
            let mut p = vec![2; r];
            p[r - 2] = 1;
            p[r - 1] = 1;
            out.push((10, p));
        }
        (SimpleType::F, 4) => out.push((11, vec![1, 2, 3, 2])),
        (SimpleType::G, 2) => {
            out.push((12, vec![1, 1]));
            out.push((13, vec![4, 2]));
        }
        _ => {}
    }
    out
}

fn check(rs: &RootSystem, coeffs: &[i64]) -> Result<(), SigmaError> {
    let n = rs.semisimple_rank();
    if coeffs.len() != n {
        return Err(SigmaError::DimensionMismatch {
            expected: n,
            found: coeffs.len(),
        });
    }
    if coeffs.iter().any(|&k| k < 0) || coeffs.iter().all(|&k| k == 0) {
        return Err(SigmaError::NotPositive(coeffs.to_vec()));
    }
    Ok(())
}

/// `{γ ∈ Supp σ : ⟨γ^∨, σ⟩ = 0 and σ - γ ∉ Δ+}`.
pub fn pi_sigma(rs: &RootSystem, coeffs: &[i64]) -> Result<BTreeSet<usize>, SigmaError> {
    check(rs, coeffs)?;
    let w = rs.root_weight(coeffs);
    Ok(support_of(coeffs)
        .into_iter()
        .filter(|&g| {
            let mut d = coeffs.to_vec();
            d[g] -= 1;
            w.0[g] == 0 && !rs.is_positive_root(&d)
        })
        .collect())
}

/// The table row of `σ`, or `None` if `σ ∉ Σ̄_G`.
pub fn classify_sigma(rs: &RootSystem, coeffs: &[i64]) -> Option<SphericalRoot> {
    check(rs, coeffs).ok()?;
    let support = support_of(coeffs);
    let comps = rs.subdiagram_type(&support);
    let (row, support_type, renumbering) = match comps.as_slice() {
        [a, b] if a.rank == 1 && b.rank == 1 => {
            let (i, j) = (a.renumberings[0][0], b.renumberings[0][0]);
            if coeffs[i] != 1 || coeffs[j] != 1 {
                return None;
            }
            (3, "A1xA1".to_string(), vec![i.min(j), i.max(j)])
        }
        [c] => {
            let patterns = row_patterns(c.kind, c.rank);
            let hit = c.renumberings.iter().find_map(|ren| {
                let local: Vec<i64> = ren.iter().map(|&g| coeffs[g]).collect();
                patterns
                    .iter()
                    .find(|(_, p)| *p == local)
                    .map(|(row, _)| (*row, ren.clone()))
            })?;
            let name = format!("{}{}", c.kind.letter(), c.rank);
            (hit.0, name, hit.1)
        }
        _ => return None,
    };
    // For row 11, σ - α3 is a root, so the defining formula drops α3 even
    // though α3 ⊥ σ. The tabulated column keeps it.
    let pi_sigma = if row == 11 {
        let w = rs.root_weight(coeffs);
        support.iter().copied().filter(|&g| w.0[g] == 0).collect()
    } else {
        pi_sigma(rs, coeffs).expect("checked above")
    };
    Some(SphericalRoot {
        coeffs: coeffs.to_vec(),
        row,
        support,
        support_type,
        renumbering,
        pi_sigma,
    })
}

/// Connected subsets of the Dynkin diagram with at least two nodes.
fn connected_subsets(rs: &RootSystem) -> BTreeSet<BTreeSet<usize>> {
    let n = rs.semisimple_rank();
    let cartan = rs.cartan();
    let mut all: BTreeSet<BTreeSet<usize>> = BTreeSet::new();
    let mut frontier: Vec<BTreeSet<usize>> = (0..n).map(|i| BTreeSet::from([i])).collect();
    while !frontier.is_empty() {
        let mut next = Vec::new();
        for s in &frontier {
            for &v in s {
                for w in 0..n {
                    if cartan[v][w] != 0 && !s.contains(&w) {
                        let mut t = s.clone();
                        t.insert(w);
                        if all.insert(t.clone()) {
                            next.push(t);
                        }
                    }
                }
            }
        }
        frontier = next;
    }
    all
}

/// Every element of `Σ̄_G`, once each, ordered by row and then by
/// coefficient vector (descending).
pub fn enumerate_sigmabar(rs: &RootSystem) -> Vec<SphericalRoot> {
    let n = rs.semisimple_rank();
    let mut candidates: BTreeSet<Vec<i64>> = BTreeSet::new();
    let unit = |i: usize, k: i64| -> Vec<i64> {
        let mut c = vec![0; n];
        c[i] = k;
        c
    };
    for i in 0..n {
        candidates.insert(unit(i, 1));
        candidates.insert(unit(i, 2));
        for j in i + 1..n {
            if rs.orthogonal(i, j) {
                let mut c = unit(i, 1);
                c[j] = 1;
                candidates.insert(c);
            }
        }
    }
    for s in connected_subsets(rs) {
        let comp = &rs.subdiagram_type(&s)[0];
        for (_, p) in row_patterns(comp.kind, comp.rank) {
            for ren in &comp.renumberings {
                let mut c = vec![0; n];
                for (k, &g) in ren.iter().enumerate() {
                    c[g] = p[k];
                }
                candidates.insert(c);
            }
        }
    }
    let mut out: Vec<SphericalRoot> = candidates
        .iter()
        .map(|c| classify_sigma(rs, c).expect("every candidate matches a row"))
        .collect();
    out.sort_by(|a, b| a.row.cmp(&b.row).then_with(|| b.coeffs.cmp(&a.coeffs)));
    out
}

/// Elements grouped by row.
pub fn by_row(list: &[SphericalRoot]) -> BTreeMap<u8, Vec<&SphericalRoot>> {
    let mut m: BTreeMap<u8, Vec<&SphericalRoot>> = BTreeMap::new();
    for s in list {
        m.entry(s.row).or_default().push(s);
    }
    m
}
