//! Rational polyhedral cones and affine monoids.
//!
//! A [`ConeRep`] carries both descriptions of a cone in `Q^d`: generators
//! (extremal rays plus a lineality basis) and inequalities (facet normals plus
//! equations). Conversion is by double description over the integers.
//!
//! [`MonoidSpec`] bundles a finitely generated monoid of dominant weights with
//! its lattice, its cone, the dual cone and the primitive generators of the
//! dual's extremal rays.

use std::collections::{BTreeSet, HashSet};

use num_bigint::BigInt;
use num_traits::Zero;
use thiserror::Error;

use crate::exactlin::{hnf, inverse_with_det, rref, DualVector, LinError, SubLattice};
use crate::rootsys::{RootSystem, WeightVec};
use crate::scalar::{clear_denominators, dot, is_zero_vec, lift, primitive, Int, Rat};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ConeError {
    #[error("cone is not pointed (lineality space of dimension {0})")]
    NotPointed(usize),
    #[error("generator {index} is not dominant: {weight:?}")]
    NonDominant { index: usize, weight: Vec<i64> },
    #[error("generator {index} has length {found}, expected {expected}")]
    WrongLength {
        index: usize,
        expected: usize,
        found: usize,
    },
    #[error(transparent)]
    Lin(#[from] LinError),
}

fn check_lengths<T>(vs: &[Vec<T>], d: usize) -> Result<(), ConeError> {
    for v in vs {
        if v.len() != d {
            return Err(LinError::DimensionMismatch {
                expected: d,
                found: v.len(),
            }
            .into());
        }
    }
    Ok(())
}

fn scale_sub<T: Int>(a: &T, x: &[T], b: &T, y: &[T]) -> Vec<T> {
    x.iter()
        .zip(y)
        .map(|(p, q)| a.clone() * p.clone() - b.clone() * q.clone())
        .collect()
}

fn neg<T: Int>(v: &[T]) -> Vec<T> {
    v.iter().map(|x| -x.clone()).collect()
}

/// Nonzero, primitive, deduplicated and sorted copies of `vs`.
fn clean<T: Int>(vs: &[Vec<T>]) -> Vec<Vec<T>> {
    let set: BTreeSet<Vec<T>> = vs
        .iter()
        .filter(|v| !is_zero_vec(v))
        .map(|v| primitive(v))
        .collect();
    set.into_iter().collect()
}

/// Canonical representative of `v` modulo the span of `basis`: zero in every
/// pivot column of the span's RREF, scaled primitive.
fn reduce_mod_span<T: Int>(v: &[T], span: &(Vec<Vec<Rat<T>>>, Vec<usize>)) -> Vec<T> {
    let mut w: Vec<Rat<T>> = v.iter().map(|x| Rat::from_integer(x.clone())).collect();
    for (row, &p) in span.0.iter().zip(&span.1) {
        let f = w[p].clone();
        if f.is_zero() {
            continue;
        }
        for (x, y) in w.iter_mut().zip(row) {
            *x = x.clone() - f.clone() * y.clone();
        }
    }
    clear_denominators(&w)
}

/// Bitset over the inequalities processed so far.
#[derive(Clone)]
struct Tight(Vec<u64>);

impl Tight {
    fn full(n: usize) -> Self {
        let mut t = Tight(vec![0; n.div_ceil(64)]);
        for k in 0..n {
            t.set(k);
        }
        t
    }

    fn set(&mut self, k: usize) {
        if self.0.len() <= k / 64 {
            self.0.resize(k / 64 + 1, 0);
        }
        self.0[k / 64] |= 1 << (k % 64);
    }

    fn and(&self, other: &Tight) -> Tight {
        Tight(self.0.iter().zip(&other.0).map(|(a, b)| a & b).collect())
    }

    fn count(&self) -> usize {
        self.0.iter().map(|w| w.count_ones() as usize).sum()
    }

    fn subset_of(&self, other: &Tight) -> bool {
        self.0
            .iter()
            .enumerate()
            .all(|(i, a)| a & !other.0.get(i).copied().unwrap_or(0) == 0)
    }
}

/// Double description: generators of `{x in Q^d : a.x >= 0 for all a}`.
/// Returns `(rays, lineality)`, both canonical.
///
/// Each ray carries the set of processed inequalities it makes tight, and
/// adjacency is decided combinatorially: two rays are adjacent iff no third
/// ray is tight on everything both are tight on.
fn double_description<T: Int>(d: usize, ineqs: &[Vec<T>]) -> (Vec<Vec<T>>, Vec<Vec<T>>) {
    let ineqs = clean(ineqs);
    let mut lin: Vec<Vec<T>> = (0..d)
        .map(|i| (0..d).map(|j| if i == j { T::one() } else { T::zero() }).collect())
        .collect();
    let mut rays: Vec<(Vec<T>, Tight)> = Vec::new();
    for (step, a) in ineqs.iter().enumerate() {
        if let Some(k) = lin.iter().position(|l| !dot(a, l).is_zero()) {
            let mut l = lin.remove(k);
            if dot(a, &l).is_negative() {
                l = neg(&l);
            }
            let al = dot(a, &l);
            for v in lin.iter_mut() {
                let c = dot(a, v);
                if !c.is_zero() {
                    *v = primitive(&scale_sub(&al, v, &c, &l));
                }
            }
            // l is tight on everything before `a`; shifting by it keeps
            // earlier tightness and makes every old ray tight on `a`
            for (v, t) in rays.iter_mut() {
                let c = dot(a, v);
                if !c.is_zero() {
                    *v = primitive(&scale_sub(&al, v, &c, &l));
                }
                t.set(step);
            }
            rays.push((l, Tight::full(step)));
        } else {
            let vals: Vec<T> = rays.iter().map(|(r, _)| dot(a, r)).collect();
            let mut next: Vec<(Vec<T>, Tight)> = Vec::new();
            let mut pos = Vec::new();
            let mut negs = Vec::new();
            for (i, v) in vals.iter().enumerate() {
                if v.is_negative() {
                    negs.push(i);
                } else {
                    if v.is_positive() {
                        pos.push(i);
                    }
                    let mut r = rays[i].clone();
                    if v.is_zero() {
                        r.1.set(step);
                    }
                    next.push(r);
                }
            }
            let eff = d - lin.len();
            if eff >= 2 && !pos.is_empty() && !negs.is_empty() {
                let target = eff - 2;
                for &p in &pos {
                    for &n in &negs {
                        let z = rays[p].1.and(&rays[n].1);
                        if z.count() < target {
                            continue;
                        }
                        let blocked = rays
                            .iter()
                            .enumerate()
                            .any(|(i, (_, t))| i != p && i != n && z.subset_of(t));
                        if blocked {
                            continue;
                        }
                        let c = scale_sub(&vals[p], &rays[n].0, &vals[n], &rays[p].0);
                        let mut z = z;
                        z.set(step);
                        next.push((primitive(&c), z));
                    }
                }
            }
            rays = next;
        }
    }
    let lineality = crate::exactlin::row_space_basis(&lin);
    let span = rref(&lineality);
    let rays: BTreeSet<Vec<T>> = rays
        .iter()
        .map(|(r, _)| reduce_mod_span(r, &span))
        .filter(|r| !is_zero_vec(r))
        .collect();
    (rays.into_iter().collect(), lineality)
}

/// A rational polyhedral cone in `Q^d`, held in both descriptions.
///
/// `cone = cone(rays) + span(lineality) = {x : f.x >= 0 for f in facets,
/// e.x = 0 for e in equations}`. All four lists are canonical for the cone,
/// so two `ConeRep`s of the same dimension describe the same cone iff those
/// lists agree.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct ConeRep<T> {
    dim: usize,
    generators: Vec<Vec<T>>,
    rays: Vec<Vec<T>>,
    lineality: Vec<Vec<T>>,
    facets: Vec<Vec<T>>,
    equations: Vec<Vec<T>>,
}

impl<T: Int> ConeRep<T> {
    /// `Q+ gens`. The empty list gives the zero cone.
    pub fn from_generators(dim: usize, gens: &[Vec<T>]) -> Result<Self, ConeError> {
        check_lengths(gens, dim)?;
        let generators = clean(gens);
        let (facets, equations) = double_description(dim, &generators);
        let mut h = facets.clone();
        h.extend(equations.iter().cloned());
        h.extend(equations.iter().map(|e| neg(e)));
        let (rays, lineality) = double_description(dim, &h);
        Ok(ConeRep {
            dim,
            generators,
            rays,
            lineality,
            facets,
            equations,
        })
    }

    /// `{x : f.x >= 0 for f in ineqs}`.
    pub fn from_inequalities(dim: usize, ineqs: &[Vec<T>]) -> Result<Self, ConeError> {
        Ok(ConeRep::from_generators(dim, ineqs)?.dual())
    }

    /// The dual cone `{ξ : ξ(q) >= 0 for all q}` in the dual coordinates.
    pub fn dual(&self) -> Self {
        let mut generators = self.facets.clone();
        generators.extend(self.equations.iter().cloned());
        generators.extend(self.equations.iter().map(|e| neg(e)));
        ConeRep {
            dim: self.dim,
            generators: clean(&generators),
            rays: self.facets.clone(),
            lineality: self.equations.clone(),
            facets: self.rays.clone(),
            equations: self.lineality.clone(),
        }
    }

    pub fn ambient_dim(&self) -> usize {
        self.dim
    }

    /// The generators this cone was built from (primitive, deduplicated).
    pub fn generators(&self) -> &[Vec<T>] {
        &self.generators
    }

    /// One primitive integer vector per extremal ray, modulo the lineality
    /// space. For a pointed cone these are the extremal rays proper.
    pub fn rays(&self) -> &[Vec<T>] {
        &self.rays
    }

    pub fn lineality(&self) -> &[Vec<T>] {
        &self.lineality
    }

    /// Primitive inward facet normals.
    pub fn facets(&self) -> &[Vec<T>] {
        &self.facets
    }

    /// Basis of the linear functionals vanishing on the cone.
    pub fn equations(&self) -> &[Vec<T>] {
        &self.equations
    }

    pub fn is_pointed(&self) -> bool {
        self.lineality.is_empty()
    }

    /// Dimension of the linear span.
    pub fn dimension(&self) -> usize {
        self.dim - self.equations.len()
    }

    pub fn contains(&self, x: &[T]) -> bool {
        x.len() == self.dim
            && self.facets.iter().all(|f| !dot(f, x).is_negative())
            && self.equations.iter().all(|e| dot(e, x).is_zero())
    }

    /// Rational-point membership.
    pub fn contains_rational(&self, x: &[Rat<T>]) -> bool {
        self.contains(&clear_denominators(x))
    }

    pub fn contains_cone(&self, other: &ConeRep<T>) -> bool {
        other.dim == self.dim
            && other.rays.iter().all(|r| self.contains(r))
            && other
                .lineality
                .iter()
                .all(|l| self.contains(l) && self.contains(&neg(l)))
    }

    /// True iff `x` lies in the relative interior.
    pub fn in_relative_interior(&self, x: &[T]) -> bool {
        self.contains(x) && self.facets.iter().all(|f| dot(f, x).is_positive())
    }
}

pub fn dual_cone<T: Int>(c: &ConeRep<T>) -> ConeRep<T> {
    c.dual()
}

/// Primitive generators (relative to `lattice`) of the extremal rays of a
/// pointed cone, in lexicographic order.
pub fn extremal_rays<T: Int>(c: &ConeRep<T>, lattice: &SubLattice<T>) -> Result<Vec<Vec<T>>, ConeError> {
    if !c.is_pointed() {
        return Err(ConeError::NotPointed(c.lineality.len()));
    }
    let mut out = c
        .rays
        .iter()
        .map(|r| lattice.primitive_part(r))
        .collect::<Result<Vec<_>, _>>()?;
    out.sort();
    Ok(out)
}

/// A pulling triangulation of `cone(rays[idx])`, a pointed cone of
/// dimension `dim`: each simplex is a set of `dim` independent rays.
fn triangulate<T: Int>(ambient: usize, rays: &[Vec<T>], idx: &[usize], dim: usize) -> Vec<Vec<usize>> {
    if idx.len() == dim {
        return vec![idx.to_vec()];
    }
    let gens: Vec<Vec<T>> = idx.iter().map(|&i| rays[i].clone()).collect();
    let cone = ConeRep::from_generators(ambient, &gens).expect("lengths checked by the caller");
    let apex = &rays[idx[0]];
    let mut out = Vec::new();
    for f in cone.facets() {
        if dot(f, apex).is_zero() {
            continue;
        }
        let face: Vec<usize> = idx.iter().copied().filter(|&i| dot(f, &rays[i]).is_zero()).collect();
        for mut s in triangulate(ambient, rays, &face, dim - 1) {
            s.insert(0, idx[0]);
            out.push(s);
        }
    }
    out
}

/// Lattice points of `Z^r` in the half-open parallelepiped `sum [0,1) m_i`
/// of a nonsingular square matrix `m`.
fn parallelepiped_points<T: Int>(m: &[Vec<T>]) -> Vec<Vec<T>> {
    let r = m.len();
    let Some((adj, det)) = inverse_with_det(m) else {
        return Vec::new();
    };
    let h = hnf(m);
    let diag: Vec<T> = (0..r).map(|i| h[i][i].clone()).collect();
    let mut y = vec![T::zero(); r];
    let mut out = Vec::new();
    loop {
        // c = y adj / det, reduced into [0, 1)
        let c: Vec<T> = (0..r)
            .map(|j| {
                let s = (0..r).fold(T::zero(), |s, i| s + y[i].clone() * adj[i][j].clone());
                s.mod_floor(&det)
            })
            .collect();
        let x: Vec<T> = (0..r)
            .map(|j| {
                let s = (0..r).fold(T::zero(), |s, i| s + c[i].clone() * m[i][j].clone());
                debug_assert!((s.clone() % det.clone()).is_zero());
                s / det.clone()
            })
            .collect();
        out.push(x);
        let mut k = 0;
        loop {
            if k == r {
                return out;
            }
            y[k] = y[k].clone() + T::one();
            if y[k] < diag[k] {
                break;
            }
            y[k] = T::zero();
            k += 1;
        }
    }
}

/// Hilbert basis of `Z^r ∩ cone` for a full-dimensional pointed cone in `Q^r`.
///
/// Every irreducible element is a ray or lies in the half-open
/// parallelepiped of a simplex of a triangulation. Candidates are then
/// taken in order of a positive grading, and one is kept iff subtracting no
/// earlier kept element stays in the cone.
fn hilbert_basis_full<T: Int>(cone: &ConeRep<T>) -> Vec<Vec<T>> {
    let r = cone.ambient_dim();
    let rays = cone.rays();
    if r == 0 {
        return Vec::new();
    }
    let all: Vec<usize> = (0..rays.len()).collect();
    let mut cand: BTreeSet<Vec<T>> = rays.iter().cloned().collect();
    for simplex in triangulate(r, rays, &all, r) {
        let m: Vec<Vec<T>> = simplex.iter().map(|&i| rays[i].clone()).collect();
        for x in parallelepiped_points(&m) {
            if !is_zero_vec(&x) {
                cand.insert(x);
            }
        }
    }
    // facet values; x - y lies in the cone iff they dominate componentwise
    let facets = cone.facets();
    let mut graded: Vec<(T, Vec<T>, Vec<T>)> = cand
        .into_iter()
        .map(|x| {
            let vals: Vec<T> = facets.iter().map(|f| dot(f, &x)).collect();
            let deg = vals.iter().fold(T::zero(), |a, b| a + b.clone());
            (deg, vals, x)
        })
        .collect();
    graded.sort();
    let mut kept: Vec<(T, Vec<T>, Vec<T>)> = Vec::new();
    for (deg, vals, x) in graded {
        let reducible = kept
            .iter()
            .any(|(d, v, _)| *d < deg && v.iter().zip(&vals).all(|(a, b)| a <= b));
        if !reducible {
            kept.push((deg, vals, x));
        }
    }
    kept.into_iter().map(|(_, _, x)| x).collect()
}

fn lattice_and_cone<T: Int>(
    dim: usize,
    gens: &[Vec<T>],
) -> Result<(SubLattice<T>, Vec<Vec<T>>, ConeRep<T>), ConeError> {
    check_lengths(gens, dim)?;
    let lattice = SubLattice::from_generators(dim, gens)?;
    let coords = gens
        .iter()
        .map(|g| lattice.coordinates(g).map(|c| c.expect("generator lies in its own span")))
        .collect::<Result<Vec<_>, _>>()?;
    let cone = ConeRep::from_generators(lattice.rank(), &coords)?;
    Ok((lattice, coords, cone))
}

/// The Hilbert basis of `ZE ∩ Q+E`, sorted lexicographically.
pub fn hilbert_basis<T: Int>(dim: usize, gens: &[Vec<T>]) -> Result<Vec<Vec<T>>, ConeError> {
    let (lattice, _, cone) = lattice_and_cone(dim, gens)?;
    if !cone.is_pointed() {
        return Err(ConeError::NotPointed(cone.lineality().len()));
    }
    let mut out: Vec<Vec<T>> = hilbert_basis_full(&cone)
        .iter()
        .map(|c| lattice.combine(c))
        .collect();
    out.sort();
    Ok(out)
}

/// Generators of the saturation `ZE ∩ Q+E`, i.e. its Hilbert basis.
pub fn saturate<T: Int>(dim: usize, gens: &[Vec<T>]) -> Result<Vec<Vec<T>>, ConeError> {
    hilbert_basis(dim, gens)
}

/// Whether `Z+E = ZE ∩ Q+E`.
pub fn is_saturated<T: Int>(dim: usize, gens: &[Vec<T>]) -> Result<bool, ConeError> {
    let (_, coords, cone) = lattice_and_cone(dim, gens)?;
    if !cone.is_pointed() {
        return Err(ConeError::NotPointed(cone.lineality().len()));
    }
    let search = Search::new(&cone, &coords);
    Ok(hilbert_basis_full(&cone).iter().all(|h| search.reaches(h.clone())))
}

/// Whether `v ∈ Z+E`.
///
/// After the lattice and cone tests, this is a graph search subtracting
/// generators while staying in the cone. The sum of the facet normals is
/// positive on every nonzero generator, so the search space is finite.
pub fn monoid_membership<T: Int>(dim: usize, gens: &[Vec<T>], v: &[T]) -> Result<bool, ConeError> {
    check_lengths(std::slice::from_ref(&v.to_vec()), dim)?;
    if is_zero_vec(v) {
        return Ok(true);
    }
    let (lattice, coords, cone) = lattice_and_cone(dim, gens)?;
    let Some(target) = lattice.coordinates(v)? else {
        return Ok(false);
    };
    if !cone.contains(&target) {
        return Ok(false);
    }
    if !cone.is_pointed() {
        return Err(ConeError::NotPointed(cone.lineality().len()));
    }
    Ok(Search::new(&cone, &coords).reaches(target))
}

/// Membership search in lattice coordinates for a pointed cone.
struct Search<'a, T> {
    cone: &'a ConeRep<T>,
    steps: Vec<Vec<T>>,
}

impl<'a, T: Int> Search<'a, T> {
    fn new(cone: &'a ConeRep<T>, coords: &[Vec<T>]) -> Self {
        let w: Vec<T> = cone.facets().iter().fold(vec![T::zero(); cone.ambient_dim()], |acc, f| {
            acc.iter().zip(f).map(|(a, b)| a.clone() + b.clone()).collect()
        });
        let mut steps: Vec<Vec<T>> = coords
            .iter()
            .filter(|c| !is_zero_vec(c))
            .cloned()
            .collect::<BTreeSet<_>>()
            .into_iter()
            .collect();
        // larger steps first reach zero sooner on typical inputs
        steps.sort_by(|a, b| dot(&w, b).cmp(&dot(&w, a)));
        Search { cone, steps }
    }

    /// `target` must already lie in the cone.
    fn reaches(&self, target: Vec<T>) -> bool {
        if self.steps.contains(&target) {
            return true;
        }
        let mut seen: HashSet<Vec<T>> = HashSet::new();
        let mut stack = vec![target];
        while let Some(x) = stack.pop() {
            if is_zero_vec(&x) {
                return true;
            }
            for s in &self.steps {
                let y: Vec<T> = x.iter().zip(s).map(|(a, b)| a.clone() - b.clone()).collect();
                if self.cone.contains(&y) && !seen.contains(&y) {
                    seen.insert(y.clone());
                    stack.push(y);
                }
            }
        }
        false
    }
}

/// A finitely generated monoid of dominant weights with its derived data.
///
/// `ZΓ` is stored as a [`SubLattice`] of weight space. The cone `Q+Γ` is held
/// in coordinates of the HNF basis of `ZΓ`, and `𝒦` in the dual coordinates,
/// so elements of `𝒦` are [`DualVector`]s.
#[derive(Debug, Clone)]
pub struct MonoidSpec<T: Int = BigInt> {
    rs: RootSystem,
    generators: Vec<WeightVec>,
    lattice: SubLattice<T>,
    gen_coords: Vec<Vec<T>>,
    cone: ConeRep<T>,
    dual: ConeRep<T>,
    k1: Vec<DualVector<T>>,
    hilbert: Option<Vec<Vec<T>>>,
    saturated: Option<bool>,
}

pub fn build_monoid<T: Int>(rs: &RootSystem, gens: &[WeightVec]) -> Result<MonoidSpec<T>, ConeError> {
    MonoidSpec::build(rs, gens)
}

impl<T: Int> MonoidSpec<T> {
    pub fn build(rs: &RootSystem, gens: &[WeightVec]) -> Result<Self, ConeError> {
        for (index, g) in gens.iter().enumerate() {
            if g.len() != rs.dim() {
                return Err(ConeError::WrongLength {
                    index,
                    expected: rs.dim(),
                    found: g.len(),
                });
            }
            if !rs.is_dominant(g) {
                return Err(ConeError::NonDominant {
                    index,
                    weight: g.0.clone(),
                });
            }
        }
        let lifted: Vec<Vec<T>> = gens.iter().map(|g| lift(&g.0)).collect();
        let (lattice, gen_coords, cone) = lattice_and_cone(rs.dim(), &lifted)?;
        let dual = cone.dual();
        // Q+Γ spans QΓ, so 𝒦 is pointed and its rays are the facets of Q+Γ.
        let k1: Vec<DualVector<T>> = dual.rays().iter().map(|r| DualVector(r.clone())).collect();
        let (hilbert, saturated) = if cone.is_pointed() {
            let hb: Vec<Vec<T>> = hilbert_basis_full(&cone);
            let search = Search::new(&cone, &gen_coords);
            let sat = hb.iter().all(|h| search.reaches(h.clone()));
            let mut amb: Vec<Vec<T>> = hb.iter().map(|c| lattice.combine(c)).collect();
            amb.sort();
            (Some(amb), Some(sat))
        } else {
            (None, None)
        };
        Ok(MonoidSpec {
            rs: rs.clone(),
            generators: gens.to_vec(),
            lattice,
            gen_coords,
            cone,
            dual,
            k1,
            hilbert,
            saturated,
        })
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    pub fn generators(&self) -> &[WeightVec] {
        &self.generators
    }

    /// `ZΓ`.
    pub fn lattice(&self) -> &SubLattice<T> {
        &self.lattice
    }

    /// Generators in the coordinates of the HNF basis of `ZΓ`.
    pub fn generator_coords(&self) -> &[Vec<T>] {
        &self.gen_coords
    }

    /// `Q+Γ` in lattice coordinates.
    pub fn cone(&self) -> &ConeRep<T> {
        &self.cone
    }

    /// `𝒦 = (Q+Γ)^∨` in dual coordinates.
    pub fn dual_cone(&self) -> &ConeRep<T> {
        &self.dual
    }

    /// Primitive generators of the extremal rays of `𝒦`, sorted.
    pub fn k1(&self) -> &[DualVector<T>] {
        &self.k1
    }

    pub fn is_pointed(&self) -> bool {
        self.cone.is_pointed()
    }

    /// `None` when `Q+Γ` is not pointed; saturation is then left undecided.
    pub fn is_saturated(&self) -> Option<bool> {
        self.saturated
    }

    /// Hilbert basis of `ZΓ ∩ Q+Γ` in weight coordinates, when pointed.
    pub fn hilbert_basis(&self) -> Option<&[Vec<T>]> {
        self.hilbert.as_deref()
    }

    /// Lattice coordinates of a weight, or `None` if it is not in `ZΓ`.
    pub fn coords(&self, v: &WeightVec) -> Result<Option<Vec<T>>, LinError> {
        self.lattice.coordinates(&lift(&v.0))
    }

    pub fn in_lattice(&self, v: &WeightVec) -> bool {
        matches!(self.coords(v), Ok(Some(_)))
    }

    /// `⟨ϱ, v⟩` for `v ∈ ZΓ`.
    pub fn pair(&self, rho: &DualVector<T>, v: &WeightVec) -> Result<Option<T>, LinError> {
        Ok(self.coords(v)?.map(|c| rho.pair(&c)))
    }

    /// `ι(β^∨)`: the coroot of the positive root `β` restricted to `ZΓ`.
    pub fn iota_coroot(&self, beta: &[i64]) -> Option<DualVector<T>> {
        let f = self.rs.coroot_functional(beta).ok()?;
        self.lattice.restrict_functional(&lift(&f)).ok()
    }

    /// `ι` of the `i`-th simple coroot.
    pub fn iota_simple(&self, i: usize) -> DualVector<T> {
        let mut beta = vec![0; self.rs.semisimple_rank()];
        beta[i] = 1;
        self.iota_coroot(&beta).expect("simple roots are positive")
    }

    /// Whether `v ∈ Z+E`. Errors only for non-pointed cones.
    pub fn contains(&self, v: &WeightVec) -> Result<bool, ConeError> {
        let Some(c) = self.coords(v)? else {
            return Ok(false);
        };
        if !self.cone.contains(&c) {
            return Ok(false);
        }
        if !self.cone.is_pointed() {
            return Err(ConeError::NotPointed(self.cone.lineality().len()));
        }
        Ok(is_zero_vec(&c) || Search::new(&self.cone, &self.gen_coords).reaches(c))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn v(rows: &[&[i64]]) -> Vec<Vec<i64>> {
        rows.iter().map(|r| r.to_vec()).collect()
    }

    fn cone(d: usize, rows: &[&[i64]]) -> ConeRep<i64> {
        ConeRep::from_generators(d, &v(rows)).unwrap()
    }

    #[test]
    fn dual_examples() {
        let orth = cone(2, &[&[1, 0], &[0, 1]]);
        assert_eq!(orth.dual().rays(), &v(&[&[0, 1], &[1, 0]])[..]);

        let ray = cone(2, &[&[1, 0]]);
        let d = ray.dual();
        assert!(d.rays().len() == 1 && d.lineality().len() == 1);
        assert!(!d.is_pointed());
        assert!(d.contains(&[0, 5]) && d.contains(&[0, -5]) && d.contains(&[1, -3]));
        assert!(!d.contains(&[-1, 0]));
        assert!(extremal_rays(&d, &SubLattice::full(2)).is_err());

        let c = cone(2, &[&[2, 1], &[1, 2]]);
        assert_eq!(c.dual().rays(), &v(&[&[-1, 2], &[2, -1]])[..]);
        let dd = c.dual().dual();
        assert_eq!((dd.rays(), dd.facets()), (c.rays(), c.facets()));
    }

    #[test]
    fn extremal_ray_examples() {
        let full = SubLattice::<i64>::full(2);
        let c = cone(2, &[&[1, 0], &[1, 1], &[0, 1]]);
        assert_eq!(extremal_rays(&c, &full).unwrap(), v(&[&[0, 1], &[1, 0]]));

        let l = SubLattice::from_generators(2, &v(&[&[2, 4]])).unwrap();
        let c = cone(2, &[&[2, 4]]);
        assert_eq!(extremal_rays(&c, &l).unwrap(), v(&[&[2, 4]]));

        let c = cone(3, &[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1], &[1, 1, 1]]);
        assert_eq!(extremal_rays(&c, &SubLattice::full(3)).unwrap().len(), 3);
    }

    #[test]
    fn degenerate_cones() {
        let z = ConeRep::<i64>::from_generators(3, &[]).unwrap();
        assert_eq!(z.dimension(), 0);
        assert!(z.contains(&[0, 0, 0]) && !z.contains(&[1, 0, 0]));
        let whole = z.dual();
        assert_eq!(whole.lineality().len(), 3);
        let line = cone(2, &[&[1, 1], &[-1, -1]]);
        assert_eq!(line.dimension(), 1);
        assert!(line.contains(&[-3, -3]) && !line.contains(&[1, 0]));
    }

    #[test]
    fn membership_examples() {
        assert!(!monoid_membership(1, &v(&[&[2], &[3]]), &[1]).unwrap());
        assert!(monoid_membership(1, &v(&[&[2], &[3]]), &[7]).unwrap());
        assert!(monoid_membership(2, &v(&[&[1, 0], &[1, 2]]), &[2, 2]).unwrap());
        assert!(!monoid_membership(2, &v(&[&[1, 0], &[1, 2]]), &[1, 1]).unwrap());
        assert!(monoid_membership(2, &v(&[&[1, 0]]), &[0, 0]).unwrap());
    }

    #[test]
    fn hilbert_examples() {
        assert_eq!(hilbert_basis(1, &v(&[&[2], &[3]])).unwrap(), v(&[&[1]]));
        assert!(!is_saturated(1, &v(&[&[2], &[3]])).unwrap());
        // (1,1) is not in ZE here, so the monoid is already saturated
        assert_eq!(
            hilbert_basis(2, &v(&[&[1, 0], &[1, 2]])).unwrap(),
            v(&[&[1, 0], &[1, 2]])
        );
        assert!(is_saturated(2, &v(&[&[1, 0], &[1, 2]])).unwrap());
        // over the full lattice the middle point appears
        assert_eq!(
            hilbert_basis(2, &v(&[&[1, 0], &[1, 2], &[0, 1]])).unwrap(),
            v(&[&[0, 1], &[1, 0]])
        );
        assert_eq!(
            hilbert_basis(2, &v(&[&[1, 0], &[1, 2], &[1, 1]])).unwrap(),
            v(&[&[1, 0], &[1, 1], &[1, 2]])
        );
        assert!(!is_saturated(2, &v(&[&[1, 0], &[1, 2], &[2, 1]])).unwrap());
        assert_eq!(
            saturate(2, &v(&[&[1, 0], &[0, 1]])).unwrap(),
            v(&[&[0, 1], &[1, 0]])
        );
        assert!(is_saturated(2, &v(&[&[1, 0], &[0, 1]])).unwrap());
        assert!(is_saturated(2, &v(&[&[2, 0], &[1, 1], &[0, 2]])).unwrap());
        assert!(hilbert_basis(2, &v(&[&[1, 0], &[-1, 0]])).is_err());
    }

    // Irreducible lattice points of a 2-d cone found by brute force in a box.
    fn brute_hilbert(gens: &[Vec<i64>], bound: i64) -> Vec<Vec<i64>> {
        let c = ConeRep::from_generators(2, gens).unwrap();
        let l = SubLattice::from_generators(2, gens).unwrap();
        let pts: Vec<Vec<i64>> = (-bound..=bound)
            .flat_map(|x| (-bound..=bound).map(move |y| vec![x, y]))
            .filter(|p| p != &vec![0, 0] && c.contains(p) && l.is_member(p).unwrap())
            .collect();
        let mut out: Vec<Vec<i64>> = pts
            .iter()
            .filter(|p| {
                !pts.iter().any(|q| {
                    q != *p && {
                        let d = vec![p[0] - q[0], p[1] - q[1]];
                        d != vec![0, 0] && c.contains(&d)
                    }
                })
            })
            .cloned()
            .collect();
        out.sort();
        out
    }

    #[test]
    fn hilbert_matches_brute_force() {
        let cases = [
            v(&[&[1, 0], &[1, 5]]),
            v(&[&[3, 1], &[1, 3]]),
            v(&[&[2, 1], &[-1, 3], &[0, 1]]),
            v(&[&[2, 0], &[2, 4]]),
            v(&[&[4, -1], &[1, 4]]),
        ];
        for g in &cases {
            assert_eq!(hilbert_basis(2, g).unwrap(), brute_hilbert(g, 12), "{g:?}");
        }
    }

    #[test]
    fn monoid_examples() {
        let a1 = RootSystem::build(&"A1".parse().unwrap()).unwrap();
        let m: MonoidSpec = build_monoid(&a1, &[WeightVec(vec![2])]).unwrap();
        assert_eq!(m.k1().len(), 1);
        assert_eq!(m.pair(&m.k1()[0], &WeightVec(vec![2])).unwrap(), Some(BigInt::from(1)));
        assert_eq!(m.is_saturated(), Some(true));

        let a1t = RootSystem::build(&"A1+T1".parse().unwrap()).unwrap();
        let g = [WeightVec(vec![1, 1]), WeightVec(vec![1, -1])];
        let m: MonoidSpec<i64> = build_monoid(&a1t, &g).unwrap();
        assert_eq!(m.k1().len(), 2);
        let mut table: Vec<Vec<i64>> = m
            .k1()
            .iter()
            .map(|r| g.iter().map(|l| m.pair(r, l).unwrap().unwrap()).collect())
            .collect();
        table.sort();
        assert_eq!(table, v(&[&[0, 1], &[1, 0]]));
        assert!(m.lattice().rank() == 2 && m.is_saturated() == Some(true));

        let m: MonoidSpec<i64> = build_monoid(&a1, &[WeightVec(vec![0])]).unwrap();
        assert_eq!(m.lattice().rank(), 0);
        assert!(m.k1().is_empty());

        let err = build_monoid::<i64>(&a1t, &[WeightVec(vec![-1, 0])]).unwrap_err();
        assert_eq!(err, ConeError::NonDominant { index: 0, weight: vec![-1, 0] });

        let m: MonoidSpec<i64> = build_monoid(&a1, &[WeightVec(vec![2]), WeightVec(vec![3])]).unwrap();
        assert_eq!(m.is_saturated(), Some(false));
        assert_eq!(m.hilbert_basis().unwrap(), &v(&[&[1]])[..]);
    }

    #[test]
    fn coroots_lie_in_k() {
        let b2 = RootSystem::build(&"B2".parse().unwrap()).unwrap();
        let m: MonoidSpec<i64> =
            build_monoid(&b2, &[WeightVec(vec![1, 0]), WeightVec(vec![1, 3])]).unwrap();
        for i in 0..2 {
            assert!(m.dual_cone().contains(&m.iota_simple(i).0));
        }
    }
}
