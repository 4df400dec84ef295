//! Applications of `Φ(Γ)`: the doubling rule for spherical roots, validation
//! of candidate `Σ̄` sets, component dimensions and canonical fingerprints of
//! a pair `(Γ, Σ̄)`.

use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cones::{monoid_membership, ConeError, MonoidSpec};
use crate::exactlin::{rank, LinError, SubLattice};
use crate::scalar::{lift, Int};
use crate::sigmabar::classify_sigma;
use crate::tangent::{compute_phi, gamma_perp, TangentError};

/// Above this many elements of `Φ(Γ)` the subset enumeration is refused.
pub const MAX_PHI_FOR_ENUMERATION: usize = 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ModuliError {
    #[error(transparent)]
    Tangent(#[from] TangentError),
    #[error(transparent)]
    Cone(#[from] ConeError),
    #[error(transparent)]
    Lin(#[from] LinError),
    #[error("expected {expected} simple-root coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("{0:?} is not a nonzero non-negative combination of simple roots")]
    NotPositive(Vec<i64>),
    #[error("{0:?} is not in the lattice generated by the monoid")]
    NotInLattice(Vec<i64>),
    #[error("{0:?} is not primitive in the lattice generated by the monoid")]
    NotPrimitive(Vec<i64>),
    #[error("the set fails validation: {0}")]
    Invalid(String),
    #[error("Φ(Γ) has {0} elements; subset enumeration is limited to {MAX_PHI_FOR_ENUMERATION}")]
    TooMany(usize),
}

fn check_positive<T: Int>(m: &MonoidSpec<T>, c: &[i64]) -> Result<(), ModuliError> {
    let n = m.root_system().semisimple_rank();
    if c.len() != n {
        return Err(ModuliError::DimensionMismatch {
            expected: n,
            found: c.len(),
        });
    }
    if c.iter().any(|&k| k < 0) || c.iter().all(|&k| k == 0) {
        return Err(ModuliError::NotPositive(c.to_vec()));
    }
    Ok(())
}

/// Outcome of the doubling rule for one `σ`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct LosevResult {
    pub sigma: Vec<i64>,
    pub sigma_bar: Vec<i64>,
    /// Which of the three doubling cases fired, if any.
    pub case: Option<u8>,
}

/// `σ̄ ∈ {σ, 2σ}` for `σ` primitive in `ZΓ`.
///
/// `2σ` exactly when `σ ∉ Σ̄_G` (case 1), when `σ = α` is simple and
/// `ι(α^∨)` spans an extremal ray of `𝒦` (case 2), or when `σ` has the
/// `α_1 + … + α_r` pattern of type `B_r` and `α_r ∈ Γ^⊥` (case 3).
pub fn losev_bar<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<LosevResult, ModuliError> {
    check_positive(m, coeffs)?;
    let rs = m.root_system();
    let w = lift::<T>(&rs.root_weight(coeffs).0);
    if !m.lattice().is_member(&w)? {
        return Err(ModuliError::NotInLattice(coeffs.to_vec()));
    }
    if m.lattice().primitive_part(&w)? != w {
        return Err(ModuliError::NotPrimitive(coeffs.to_vec()));
    }
    let case = match classify_sigma(rs, coeffs) {
        None => Some(1),
        Some(s) if s.row == 1 => {
            let iota = m.iota_simple(s.renumbering[0]);
            let on_ray = !iota.is_zero() && m.k1().iter().any(|r| iota.positive_ratio(r).is_some());
            on_ray.then_some(2)
        }
        Some(s) if s.row == 6 => {
            let ar = *s.renumbering.last().expect("row 6 has rank >= 2");
            gamma_perp(m).contains(&ar).then_some(3)
        }
        Some(_) => None,
    };
    let k = if case.is_some() { 2 } else { 1 };
    Ok(LosevResult {
        sigma: coeffs.to_vec(),
        sigma_bar: coeffs.iter().map(|x| k * x).collect(),
        case,
    })
}

/// Per-check outcome of [`validate_sigmabar`]. Each list names offenders.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ValidationReport {
    pub not_in_phi: Vec<Vec<i64>>,
    pub linearly_independent: bool,
    pub proportional_pairs: Vec<(Vec<i64>, Vec<i64>)>,
    pub not_primitive_in_span: Vec<Vec<i64>>,
    pub in_monoid_of_rest: Vec<Vec<i64>>,
    pub valid: bool,
}

impl ValidationReport {
    fn summary(&self) -> String {
        let mut parts = Vec::new();
        if !self.not_in_phi.is_empty() {
            parts.push(format!("not in Φ(Γ): {:?}", self.not_in_phi));
        }
        if !self.linearly_independent {
            parts.push("linearly dependent".to_string());
        }
        if !self.proportional_pairs.is_empty() {
            parts.push(format!("proportional pairs: {:?}", self.proportional_pairs));
        }
        if !self.not_primitive_in_span.is_empty() {
            parts.push(format!("not primitive: {:?}", self.not_primitive_in_span));
        }
        if !self.in_monoid_of_rest.is_empty() {
            parts.push(format!("generated by the others: {:?}", self.in_monoid_of_rest));
        }
        parts.join("; ")
    }
}

/// Check a candidate `Σ̄` against `Φ(Γ)` and the necessary conditions on
/// such sets. Requires a saturated monoid.
pub fn validate_sigmabar<T: Int>(m: &MonoidSpec<T>, s: &[Vec<i64>]) -> Result<ValidationReport, ModuliError> {
    for c in s {
        check_positive(m, c)?;
    }
    let phi: Vec<Vec<i64>> = compute_phi(m)?.phi.into_iter().map(|c| c.coeffs).collect();
    validate_against::<T>(m, &phi, s)
}

fn validate_against<T: Int>(
    m: &MonoidSpec<T>,
    phi: &[Vec<i64>],
    s: &[Vec<i64>],
) -> Result<ValidationReport, ModuliError> {
    let n = m.root_system().semisimple_rank();
    let not_in_phi: Vec<Vec<i64>> = s.iter().filter(|c| !phi.contains(c)).cloned().collect();
    let linearly_independent = rank(s) == s.len();
    let mut proportional_pairs = Vec::new();
    for i in 0..s.len() {
        for j in i + 1..s.len() {
            if rank(&[s[i].clone(), s[j].clone()]) < 2 {
                proportional_pairs.push((s[i].clone(), s[j].clone()));
            }
        }
    }
    let lifted: Vec<Vec<T>> = s.iter().map(|c| lift(c)).collect();
    let span = SubLattice::from_generators(n, &lifted)?;
    let mut not_primitive_in_span = Vec::new();
    for (c, l) in s.iter().zip(&lifted) {
        if span.primitive_part(l)? != *l {
            not_primitive_in_span.push(c.clone());
        }
    }
    let mut in_monoid_of_rest = Vec::new();
    for (i, l) in lifted.iter().enumerate() {
        let rest: Vec<Vec<T>> = lifted
            .iter()
            .enumerate()
            .filter(|&(j, _)| j != i)
            .map(|(_, v)| v.clone())
            .collect();
        if monoid_membership(n, &rest, l)? {
            in_monoid_of_rest.push(s[i].clone());
        }
    }
    let valid = not_in_phi.is_empty()
        && linearly_independent
        && proportional_pairs.is_empty()
        && not_primitive_in_span.is_empty()
        && in_monoid_of_rest.is_empty();
    Ok(ValidationReport {
        not_in_phi,
        linearly_independent,
        proportional_pairs,
        not_primitive_in_span,
        in_monoid_of_rest,
        valid,
    })
}

/// A validated `Σ̄` for a monoid.
#[derive(Debug, Clone)]
pub struct SigmaBarSet<'a, T: Int> {
    monoid: &'a MonoidSpec<T>,
    elements: Vec<Vec<i64>>,
}

impl<'a, T: Int> SigmaBarSet<'a, T> {
    pub fn new(monoid: &'a MonoidSpec<T>, elements: &[Vec<i64>]) -> Result<Self, ModuliError> {
        let report = validate_sigmabar(monoid, elements)?;
        if !report.valid {
            return Err(ModuliError::Invalid(report.summary()));
        }
        let mut elements = elements.to_vec();
        elements.sort();
        Ok(SigmaBarSet { monoid, elements })
    }

    pub fn monoid(&self) -> &MonoidSpec<T> {
        self.monoid
    }

    /// Sorted by coefficient vector.
    pub fn elements(&self) -> &[Vec<i64>] {
        &self.elements
    }

    /// Dimension of the corresponding component: `|Σ̄|`.
    pub fn component_dimension(&self) -> usize {
        self.elements.len()
    }

    /// For each `σ̄`, the primitive element of `ZΓ` on `Q+σ̄`, in weight
    /// coordinates.
    pub fn sigma_from_sigmabar(&self) -> Result<Vec<Vec<T>>, ModuliError> {
        let rs = self.monoid.root_system();
        self.elements
            .iter()
            .map(|c| {
                let w = lift::<T>(&rs.root_weight(c).0);
                Ok(self.monoid.lattice().primitive_part(&w)?)
            })
            .collect()
    }

    pub fn fingerprint(&self) -> Fingerprint<T> {
        let hb = self
            .monoid
            .hilbert_basis()
            .expect("a valid set implies a saturated, pointed monoid")
            .to_vec();
        Fingerprint {
            dynkin: self.monoid.root_system().spec().to_string(),
            hilbert_basis: hb,
            sigma_bar: self.elements.clone(),
        }
    }
}

pub fn component_dimension<T: Int>(s: &SigmaBarSet<'_, T>) -> usize {
    s.component_dimension()
}

pub fn sigma_from_sigmabar<T: Int>(s: &SigmaBarSet<'_, T>) -> Result<Vec<Vec<T>>, ModuliError> {
    s.sigma_from_sigmabar()
}

/// All subsets of `Φ(Γ)` that pass validation, by size and then
/// lexicographically. Realizability by an actual variety is not decided; the
/// result is an upper bound.
pub fn enumerate_candidate_components<T: Int>(m: &MonoidSpec<T>) -> Result<Vec<SigmaBarSet<'_, T>>, ModuliError> {
    let phi: Vec<Vec<i64>> = compute_phi(m)?.phi.into_iter().map(|c| c.coeffs).collect();
    if phi.len() > MAX_PHI_FOR_ENUMERATION {
        return Err(ModuliError::TooMany(phi.len()));
    }
    let subsets: Vec<Vec<Vec<i64>>> = (0u32..(1 << phi.len()))
        .map(|mask| {
            (0..phi.len())
                .filter(|&i| mask & (1 << i) != 0)
                .map(|i| phi[i].clone())
                .collect()
        })
        .collect();
    let checked = subsets
        .par_iter()
        .map(|s| validate_against(m, &phi, s).map(|r| r.valid))
        .collect::<Result<Vec<bool>, _>>()?;
    let mut out: Vec<SigmaBarSet<'_, T>> = subsets
        .into_iter()
        .zip(checked)
        .filter(|(_, ok)| *ok)
        .map(|(mut s, _)| {
            s.sort();
            SigmaBarSet { monoid: m, elements: s }
        })
        .collect();
    out.sort_by(|a, b| {
        a.elements
            .len()
            .cmp(&b.elements.len())
            .then_with(|| a.elements.cmp(&b.elements))
    });
    Ok(out)
}

/// Canonical data of a pair `(Γ, Σ̄)`: the root datum, the Hilbert basis of
/// `Γ` and the sorted `Σ̄`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Fingerprint<T> {
    pub dynkin: String,
    pub hilbert_basis: Vec<Vec<T>>,
    pub sigma_bar: Vec<Vec<i64>>,
}

fn render<X: std::fmt::Display>(vs: &[Vec<X>]) -> String {
    let inner: Vec<String> = vs
        .iter()
        .map(|v| {
            let xs: Vec<String> = v.iter().map(|x| x.to_string()).collect();
            format!("[{}]", xs.join(","))
        })
        .collect();
    format!("[{}]", inner.join(","))
}

impl<T: Int> Fingerprint<T> {
    /// Byte-stable serialization; two fingerprints are equal iff these agree.
    pub fn canonical(&self) -> String {
        format!(
            "{};{};{}",
            self.dynkin,
            render(&self.hilbert_basis),
            render(&self.sigma_bar)
        )
    }
}

pub fn fingerprint<T: Int>(m: &MonoidSpec<T>, s: &[Vec<i64>]) -> Result<Fingerprint<T>, ModuliError> {
    Ok(SigmaBarSet::new(m, s)?.fingerprint())
}

pub fn fingerprints_equal<T: Int>(f: &Fingerprint<T>, g: &Fingerprint<T>) -> bool {
    f.canonical() == g.canonical()
}
