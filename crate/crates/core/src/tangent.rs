//! Conditions (Φ1)–(Φ8) on a candidate weight `σ` and the set `Φ(Γ)` of
//! those satisfying all of them.
//!
//! Conditions quantified over `Γ` are linear or parity conditions, so they
//! are checked on the generators only.

use std::collections::BTreeSet;

use num_rational::Ratio;
use num_traits::{One, Signed};
use rayon::prelude::*;
use serde::Serialize;
use thiserror::Error;

use crate::cones::MonoidSpec;
use crate::exactlin::{rank, solve_combination, DualVector, LinError};
use crate::scalar::{content, int, Int, Rat};
use crate::sigmabar::{classify_sigma, enumerate_sigmabar, SphericalRoot};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum TangentError {
    #[error("Γ not saturated; its saturation is given by `saturate`")]
    Unsaturated,
    #[error("saturation is undecided because the cone of the monoid is not pointed")]
    SaturationUndecided,
    #[error("{0:?} does not lie in the lattice generated by the monoid")]
    NotInLattice(Vec<i64>),
    #[error("{0:?} is not a simple root")]
    NotSimple(Vec<i64>),
    #[error("{0:?} is a simple root; use the simple-root condition")]
    IsSimple(Vec<i64>),
    #[error("expected {expected} simple-root coefficients, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error(transparent)]
    Lin(#[from] LinError),
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Verdict {
    Pass,
    Fail,
    NotApplicable,
    /// Skipped because an earlier condition it depends on failed.
    Unchecked,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Witness<T: Int> {
    None,
    Note(String),
    /// Per ray of `𝒦¹(σ)`: the simple root `δ` with `ι(δ^∨)` on it, if any.
    Rays(Vec<(DualVector<T>, Option<usize>)>),
    /// `ι(α^∨) = b1 ϱ1 + b2 ϱ2` with `⟨ϱ1, α⟩ = ⟨ϱ2, α⟩ = 1`.
    Pair {
        rho1: DualVector<T>,
        rho2: DualVector<T>,
        b1: Rat<T>,
        b2: Rat<T>,
    },
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ConditionResult<T: Int> {
    pub verdict: Verdict,
    pub witness: Witness<T>,
}

impl<T: Int> ConditionResult<T> {
    fn new(verdict: Verdict, witness: Witness<T>) -> Self {
        ConditionResult { verdict, witness }
    }

    fn na() -> Self {
        Self::new(Verdict::NotApplicable, Witness::None)
    }

    fn unchecked() -> Self {
        Self::new(Verdict::Unchecked, Witness::None)
    }

    fn bool(ok: bool, note: impl Into<String>) -> Self {
        let v = if ok { Verdict::Pass } else { Verdict::Fail };
        Self::new(v, Witness::Note(note.into()))
    }
}

/// Verdicts on (Φ1)–(Φ8) for one `σ`; `conditions[k]` is condition `k + 1`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PhiCertificate<T: Int> {
    pub coeffs: Vec<i64>,
    /// Table data if `σ ∈ Σ̄_G`.
    pub sigma: Option<SphericalRoot>,
    pub conditions: Vec<ConditionResult<T>>,
    pub member: bool,
}

#[derive(Debug, Clone)]
pub struct PhiResult<T: Int> {
    /// Members of `Φ(Γ)` sorted by coefficient vector.
    pub phi: Vec<PhiCertificate<T>>,
    /// Every candidate of `Σ̄_G ∩ ZΓ` that was examined, members or not.
    pub examined: Vec<PhiCertificate<T>>,
    pub dimension: usize,
    /// Reported only; no claim is made either way.
    pub linearly_independent: bool,
}

/// `Γ^⊥`: simple roots orthogonal to every generator.
pub fn gamma_perp<T: Int>(m: &MonoidSpec<T>) -> BTreeSet<usize> {
    (0..m.root_system().semisimple_rank())
        .filter(|&i| m.generators().iter().all(|g| g.0[i] == 0))
        .collect()
}

fn check_len<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<(), TangentError> {
    let n = m.root_system().semisimple_rank();
    if coeffs.len() != n {
        return Err(TangentError::DimensionMismatch {
            expected: n,
            found: coeffs.len(),
        });
    }
    Ok(())
}

fn sigma_coords<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<Vec<T>, TangentError> {
    check_len(m, coeffs)?;
    let w = m.root_system().root_weight(coeffs);
    m.coords(&w)?.ok_or_else(|| TangentError::NotInLattice(coeffs.to_vec()))
}

/// `𝒦¹(σ) = {ϱ ∈ 𝒦¹ : ⟨ϱ, σ⟩ > 0}`.
pub fn k1_sigma<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<Vec<DualVector<T>>, TangentError> {
    let c = sigma_coords(m, coeffs)?;
    Ok(m.k1().iter().filter(|r| r.pair(&c).is_positive()).cloned().collect())
}

fn require_saturated<T: Int>(m: &MonoidSpec<T>) -> Result<(), TangentError> {
    match m.is_saturated() {
        Some(true) => Ok(()),
        Some(false) => Err(TangentError::Unsaturated),
        None => Err(TangentError::SaturationUndecided),
    }
}

fn simple_index(coeffs: &[i64]) -> Option<usize> {
    let nz: Vec<usize> = (0..coeffs.len()).filter(|&i| coeffs[i] != 0).collect();
    (nz.len() == 1 && coeffs[nz[0]] == 1).then(|| nz[0])
}

/// (Φ7) for `σ ∉ Π`: every ray of `𝒦¹(σ)` carries some `ι(δ^∨)` with
/// `δ ∈ Π ∖ Γ^⊥`.
pub fn check_phi7<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<ConditionResult<T>, TangentError> {
    if simple_index(coeffs).is_some() {
        return Err(TangentError::IsSimple(coeffs.to_vec()));
    }
    let rays = k1_sigma(m, coeffs)?;
    let perp = gamma_perp(m);
    let iotas: Vec<(usize, DualVector<T>)> = (0..m.root_system().semisimple_rank())
        .filter(|d| !perp.contains(d))
        .map(|d| (d, m.iota_simple(d)))
        .collect();
    let matched: Vec<(DualVector<T>, Option<usize>)> = rays
        .into_iter()
        .map(|r| {
            let hit = iotas.iter().find(|(_, i)| i.positive_ratio(&r).is_some()).map(|(d, _)| *d);
            (r, hit)
        })
        .collect();
    let ok = matched.iter().all(|(_, h)| h.is_some());
    let v = if ok { Verdict::Pass } else { Verdict::Fail };
    Ok(ConditionResult::new(v, Witness::Rays(matched)))
}

/// (Φ8) for a simple root `α = α_i`.
pub fn check_phi8<T: Int>(m: &MonoidSpec<T>, i: usize) -> Result<ConditionResult<T>, TangentError> {
    let n = m.root_system().semisimple_rank();
    if i >= n {
        return Err(TangentError::NotSimple(vec![]));
    }
    let mut alpha = vec![0; n];
    alpha[i] = 1;
    let a = sigma_coords(m, &alpha)?;
    let rays = k1_sigma(m, &alpha)?;
    let iota = m.iota_simple(i);
    let fail = |s: String| Ok(ConditionResult::bool(false, s));
    match rays.as_slice() {
        [] => fail("no ray of 𝒦 pairs positively with α".into()),
        [r1, r2] => {
            if !r1.pair(&a).is_one() || !r2.pair(&a).is_one() {
                return fail("a ray of 𝒦¹(α) does not pair to 1 with α".into());
            }
            let Some(b) = solve_combination(&[r1.0.clone(), r2.0.clone()], &iota.0) else {
                return fail("ι(α^∨) is not in the span of 𝒦¹(α)".into());
            };
            if !(b[0].is_positive() && b[1].is_positive()) {
                return fail("ι(α^∨) is not a strictly positive combination of 𝒦¹(α)".into());
            }
            Ok(ConditionResult::new(
                Verdict::Pass,
                Witness::Pair {
                    rho1: r1.clone(),
                    rho2: r2.clone(),
                    b1: b[0].clone(),
                    b2: b[1].clone(),
                },
            ))
        }
        [r0] => {
            if !r0.pair(&a).is_one() {
                return fail(format!("⟨ϱ, α⟩ = {} for the only ray of 𝒦¹(α)", r0.pair(&a)));
            }
            let two: T = int(2);
            let d: Vec<T> = iota
                .0
                .iter()
                .zip(&r0.0)
                .map(|(x, y)| x.clone() - two.clone() * y.clone())
                .collect();
            if d.iter().all(|x| x.is_zero()) {
                return fail("ι(α^∨) = 2ϱ, so no second ray exists".into());
            }
            let Some(t) = choose_t(m, r0, &d) else {
                return fail("no lattice point ϱ + t(ι(α^∨) - 2ϱ) of 𝒦 with t > 1/2".into());
            };
            let rho2: Vec<T> = r0
                .0
                .iter()
                .zip(&d)
                .map(|(x, y)| {
                    let v = Ratio::from_integer(x.clone()) + t.clone() * Ratio::from_integer(y.clone());
                    debug_assert!(v.is_integer());
                    v.to_integer()
                })
                .collect();
            let b2 = t.recip();
            let b1 = Ratio::from_integer(two) - b2.clone();
            Ok(ConditionResult::new(
                Verdict::Pass,
                Witness::Pair {
                    rho1: r0.clone(),
                    rho2: DualVector(rho2),
                    b1,
                    b2,
                },
            ))
        }
        _ => fail(format!("𝒦¹(α) has {} rays", rays.len())),
    }
}

/// A `t > 1/2` with `ϱ0 + t d ∈ 𝒦 ∩ ℒ`, preferring `t = 1`, else the
/// smallest admissible one.
fn choose_t<T: Int>(m: &MonoidSpec<T>, r0: &DualVector<T>, d: &[T]) -> Option<Rat<T>> {
    let k = m.dual_cone();
    let g = content(d);
    let mut hi: Option<Rat<T>> = None;
    for f in k.facets() {
        let fd = crate::scalar::dot(f, d);
        let fr = crate::scalar::dot(f, &r0.0);
        if fd.is_negative() {
            let bound = Ratio::new(fr, -fd);
            hi = Some(match hi {
                Some(h) if h < bound => h,
                _ => bound,
            });
        }
    }
    // equations of 𝒦 vanish on ι(α^∨) and ϱ0 alike, hence on d
    debug_assert!(k.equations().iter().all(|e| crate::scalar::dot(e, d).is_zero()));
    let one = Rat::<T>::one();
    if hi.as_ref().map_or(true, |h| *h >= one) {
        return Some(one);
    }
    let kk = g.clone() / int::<T>(2) + T::one();
    let t = Ratio::new(kk, g);
    (t <= hi.unwrap()).then_some(t)
}

fn parity_even<T: Int>(m: &MonoidSpec<T>, i: usize) -> bool {
    m.generators().iter().all(|g| g.0[i] % 2 == 0)
}

/// Decide every condition for one candidate. Requires a saturated monoid.
pub fn certify<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<PhiCertificate<T>, TangentError> {
    require_saturated(m)?;
    certify_unchecked(m, coeffs)
}

fn certify_unchecked<T: Int>(m: &MonoidSpec<T>, coeffs: &[i64]) -> Result<PhiCertificate<T>, TangentError> {
    check_len(m, coeffs)?;
    let rs = m.root_system();
    let mut c: Vec<ConditionResult<T>> = Vec::with_capacity(8);
    let phi1 = m.in_lattice(&rs.root_weight(coeffs));
    c.push(ConditionResult::bool(phi1, if phi1 { "σ ∈ ZΓ" } else { "σ ∉ ZΓ" }));
    let sigma = classify_sigma(rs, coeffs);
    c.push(match &sigma {
        Some(s) => ConditionResult::bool(true, format!("row {}", s.row)),
        None => ConditionResult::bool(false, "σ ∉ Σ̄_G"),
    });
    let perp = gamma_perp(m);
    match &sigma {
        Some(s) => {
            let bad: Vec<String> = s.pi_sigma.difference(&perp).map(|i| format!("α{}", i + 1)).collect();
            c.push(ConditionResult::bool(
                bad.is_empty(),
                format!("Π_σ ∖ Γ^⊥ = {{{}}}", bad.join(", ")),
            ));
            c.push(if s.row == 6 {
                let ar = *s.renumbering.last().expect("row 6 has rank >= 2");
                ConditionResult::bool(!perp.contains(&ar), format!("α_r = α{}", ar + 1))
            } else {
                ConditionResult::na()
            });
            c.push(if s.row == 3 {
                let (a, b) = (s.renumbering[0], s.renumbering[1]);
                let ok = m.generators().iter().all(|g| g.0[a] == g.0[b]);
                ConditionResult::bool(ok, format!("pairings with α{} and α{}", a + 1, b + 1))
            } else {
                ConditionResult::na()
            });
            c.push(if s.row == 2 {
                let a = s.renumbering[0];
                ConditionResult::bool(parity_even(m, a), format!("parity of pairings with α{}", a + 1))
            } else {
                ConditionResult::na()
            });
        }
        None => {
            for _ in 3..=6 {
                c.push(ConditionResult::unchecked());
            }
        }
    }
    let simple = simple_index(coeffs);
    if phi1 {
        match simple {
            Some(i) => {
                c.push(ConditionResult::na());
                c.push(check_phi8(m, i)?);
            }
            None => {
                c.push(check_phi7(m, coeffs)?);
                c.push(ConditionResult::na());
            }
        }
    } else {
        let (u7, u8) = if simple.is_some() {
            (ConditionResult::na(), ConditionResult::unchecked())
        } else {
            (ConditionResult::unchecked(), ConditionResult::na())
        };
        c.push(u7);
        c.push(u8);
    }
    let member = c
        .iter()
        .all(|r| matches!(r.verdict, Verdict::Pass | Verdict::NotApplicable));
    Ok(PhiCertificate {
        coeffs: coeffs.to_vec(),
        sigma,
        conditions: c,
        member,
    })
}

/// `Φ(Γ)` and the tangent-space dimension `|Φ(Γ)|`.
pub fn compute_phi<T: Int>(m: &MonoidSpec<T>) -> Result<PhiResult<T>, TangentError> {
    require_saturated(m)?;
    let rs = m.root_system();
    let candidates: Vec<SphericalRoot> = enumerate_sigmabar(rs)
        .into_iter()
        .filter(|s| m.in_lattice(&s.weight(rs)))
        .collect();
    let mut examined = candidates
        .par_iter()
        .map(|s| certify_unchecked(m, &s.coeffs))
        .collect::<Result<Vec<_>, _>>()?;
    examined.sort_by(|a, b| a.coeffs.cmp(&b.coeffs));
    let phi: Vec<PhiCertificate<T>> = examined.iter().filter(|c| c.member).cloned().collect();
    let vecs: Vec<Vec<i64>> = phi.iter().map(|c| c.coeffs.clone()).collect();
    Ok(PhiResult {
        dimension: phi.len(),
        linearly_independent: rank(&vecs) == vecs.len(),
        phi,
        examined,
    })
}
