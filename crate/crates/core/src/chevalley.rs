//! Chevalley bases: structure constants `N_{α,β}` with `[e_α, e_β] = N_{α,β} e_{α+β}`.
//!
//! Signs of `N_{α,β}` for positive `α, β` come from one of two sources:
//!
//! * the explicit sign tables for types A–D in terms of the composite labels
//!   `α_ij`, `β_ij` (see [`tabulated_sign`]);
//! * the inductive extraspecial-pair construction, with `+` on every
//!   extraspecial pair. This is the only source for F4 and G2.
//!
//! All remaining constants follow from `|N_{α,β}| = p + 1`, antisymmetry,
//! `N_{-α,-β} = -N_{α,β}` and the length-ratio rule for `N_{α,-β}`.

use std::collections::{BTreeMap, HashMap};

use rayon::prelude::*;
use thiserror::Error;

use crate::rootsys::{RootSystem, SimpleType};

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum ChevalleyError {
    #[error("structure-constant signs are not available for type {0}")]
    UnsupportedType(String),
    #[error("sign tables of type {kind} do not cover the pair ({a:?}, {b:?})")]
    UncoveredPair { kind: String, a: Vec<i64>, b: Vec<i64> },
    #[error("sign tables of type {kind} disagree with antisymmetry on ({a:?}, {b:?})")]
    InconsistentTable { kind: String, a: Vec<i64>, b: Vec<i64> },
    #[error("non-integral structure constant for ({a:?}, {b:?})")]
    NonIntegral { a: Vec<i64>, b: Vec<i64> },
}

/// Where the positive-positive signs come from.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum SignConvention {
    /// Tables for A–D, extraspecial pairs for F4 and G2.
    Tables,
    /// Extraspecial pairs for every type.
    Extraspecial,
}

/// A basis element of the Chevalley basis: `h_i` for a simple coroot, or
/// `e_α` for a root identified by its index in [`StructureConstants::roots`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum BasisElement {
    H(usize),
    E(usize),
}

/// Composite labels of positive roots in the sign tables (1-based indices).
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Label {
    Alpha(usize, usize),
    Beta(usize, usize),
}

/// Map from local coefficient vectors to composite labels, for types A–D.
pub fn composite_labels(kind: SimpleType, r: usize) -> HashMap<Vec<i64>, Label> {
    let mut out = HashMap::new();
    let mut put = |c: Vec<i64>, l: Label| {
        out.insert(c, l);
    };
    // 1-based inclusive range helper
    let ones = |i: usize, j: usize| -> Vec<i64> {
        (1..=r).map(|t| i64::from(t >= i && t <= j)).collect()
    };
    match kind {
        SimpleType::A => {
            for i in 1..=r {
                for j in i..=r {
                    put(ones(i, j), Label::Alpha(i, j));
                }
            }
        }
        SimpleType::B => {
            for i in 1..=r {
                for j in i..=r {
                    put(ones(i, j), Label::Alpha(i, j));
                }
            }
            for i in 1..=r {
                for j in i + 1..=r {
                    let c = (1..=r)
                        .map(|t| i64::from(t >= i) + i64::from(t >= j))
                        .collect();
                    put(c, Label::Beta(i, j));
                }
            }
        }
        SimpleType::C => {
            for i in 1..r {
                for j in i..r {
                    put(ones(i, j), Label::Alpha(i, j));
                }
            }
            for i in 1..=r {
                put(ones(i, r), Label::Beta(i, r));
            }
            for i in 1..r {
                for j in i..r {
                    let c = (1..=r)
                        .map(|t| {
                            if t == r {
                                1
                            } else {
                                i64::from(t >= i) + i64::from(t >= j)
                            }
                        })
                        .collect();
                    put(c, Label::Beta(i, j));
                }
            }
        }
        SimpleType::D => {
            for i in 1..r {
                for j in i..r {
                    put(ones(i, j), Label::Alpha(i, j));
                }
            }
            for i in 1..r {
                let mut c = ones(i, r - 1);
                c[r - 2] -= 1;
                c[r - 1] += 1;
                put(c, Label::Beta(i, r));
            }
            for i in 1..r {
                for j in i + 1..r {
                    let mut c: Vec<i64> = (0..r).map(|t| ones(i, r - 1)[t] + ones(j, r - 1)[t]).collect();
                    c[r - 2] -= 1;
                    c[r - 1] += 1;
                    put(c, Label::Beta(i, j));
                }
            }
        }
        _ => {}
    }
    out
}

/// Sign of `N_{x,y}` from the A–D tables, if a table condition covers the
/// ordered pair `(x, y)`. Conditions are tried in table order.
pub fn tabulated_sign(kind: SimpleType, r: usize, x: Label, y: Label) -> Option<i64> {
    use Label::{Alpha, Beta};
    match (kind, x, y) {
        (SimpleType::B, Alpha(i, j), Alpha(k, l)) => {
            if k == j + 1 {
                Some(1)
            } else if i == l + 1 {
                Some(-1)
            } else if j == r && l == r && i < k {
                Some(-1)
            } else if j == r && l == r && k < i {
                Some(1)
            } else {
                None
            }
        }
        (SimpleType::A | SimpleType::C | SimpleType::D, Alpha(i, j), Alpha(k, l)) => {
            if k == j + 1 {
                Some(1)
            } else if i == l + 1 {
                Some(-1)
            } else {
                None
            }
        }
        (SimpleType::B | SimpleType::D, Beta(i, j), Alpha(k, l)) => {
            if i == l + 1 {
                Some(-1)
            } else if j == l + 1 && k < i {
                Some(1)
            } else if j == l + 1 && i < k {
                Some(-1)
            } else {
                None
            }
        }
        (SimpleType::C, Beta(i, j), Alpha(_, l)) => {
            if i == l + 1 || j == l + 1 {
                Some(-1)
            } else {
                None
            }
        }
        _ => None,
    }
}

/// Report of a Jacobi-identity sweep.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct JacobiReport {
    pub triples_checked: usize,
    pub violations: usize,
    /// Up to ten offending triples.
    pub witnesses: Vec<[BasisElement; 3]>,
}

#[derive(Debug, Clone)]
pub struct StructureConstants {
    rs: RootSystem,
    roots: Vec<Vec<i64>>,
    index: HashMap<Vec<i64>, usize>,
    npos: usize,
    n: HashMap<(usize, usize), i64>,
}

impl StructureConstants {
    /// Build with [`SignConvention::Tables`].
    pub fn build(rs: &RootSystem) -> Result<Self, ChevalleyError> {
        Self::build_with(rs, SignConvention::Tables)
    }

    pub fn build_with(rs: &RootSystem, convention: SignConvention) -> Result<Self, ChevalleyError> {
        for c in &rs.spec().components {
            if c.kind == SimpleType::E {
                return Err(ChevalleyError::UnsupportedType(c.to_string()));
            }
        }
        let pos: Vec<Vec<i64>> = rs.positive_roots().iter().map(|r| r.coeffs.clone()).collect();
        let npos = pos.len();
        let mut roots = pos.clone();
        roots.extend(pos.iter().map(|c| c.iter().map(|x| -x).collect::<Vec<_>>()));
        let index: HashMap<Vec<i64>, usize> =
            roots.iter().enumerate().map(|(i, c)| (c.clone(), i)).collect();
        let mut sc = StructureConstants {
            rs: rs.clone(),
            roots,
            index,
            npos,
            n: HashMap::new(),
        };

        let mut pp: HashMap<(usize, usize), i64> = HashMap::new();
        for (ci, comp) in rs.spec().components.iter().enumerate() {
            let use_tables = convention == SignConvention::Tables
                && matches!(
                    comp.kind,
                    SimpleType::A | SimpleType::B | SimpleType::C | SimpleType::D
                );
            if use_tables {
                sc.table_signs(ci, &mut pp)?;
            } else {
                sc.extraspecial_signs(ci, &mut pp)?;
            }
        }

        let total = sc.roots.len();
        let mut n = HashMap::new();
        for a in 0..total {
            for b in 0..total {
                let v = sc.n_general(&pp, a, b)?;
                if v != 0 {
                    n.insert((a, b), v);
                }
            }
        }
        sc.n = n;
        Ok(sc)
    }

    fn sum_id(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x + y).collect();
        self.index.get(&s).copied()
    }

    fn diff_id(&self, a: usize, b: usize) -> Option<usize> {
        let s: Vec<i64> = self.roots[a].iter().zip(&self.roots[b]).map(|(x, y)| x - y).collect();
        self.index.get(&s).copied()
    }

    fn neg(&self, a: usize) -> usize {
        if a < self.npos {
            a + self.npos
        } else {
            a - self.npos
        }
    }

    fn length(&self, a: usize) -> i64 {
        self.rs.positive_roots()[a % self.npos].length
    }

    /// Largest `p` with `b - p a` a root.
    pub fn string_p(&self, a: usize, b: usize) -> i64 {
        let mut p = 0;
        let mut cur = self.roots[b].clone();
        loop {
            for (c, x) in cur.iter_mut().zip(&self.roots[a]) {
                *c -= x;
            }
            if self.index.contains_key(&cur) {
                p += 1;
            } else {
                return p;
            }
        }
    }

    fn local(&self, comp: usize, a: usize) -> Vec<i64> {
        let off = self.rs.component_offset(comp);
        let r = self.rs.spec().components[comp].rank;
        self.roots[a][off..off + r].to_vec()
    }

    fn positives_in(&self, comp: usize) -> Vec<usize> {
        (0..self.npos)
            .filter(|&i| self.rs.positive_roots()[i].component == comp)
            .collect()
    }

    fn table_signs(&self, comp: usize, pp: &mut HashMap<(usize, usize), i64>) -> Result<(), ChevalleyError> {
        let c = self.rs.spec().components[comp];
        let labels = composite_labels(c.kind, c.rank);
        let ids = self.positives_in(comp);
        for &a in &ids {
            for &b in &ids {
                if self.sum_id(a, b).is_none() {
                    continue;
                }
                let la = labels[&self.local(comp, a)];
                let lb = labels[&self.local(comp, b)];
                let direct = tabulated_sign(c.kind, c.rank, la, lb);
                let reverse = tabulated_sign(c.kind, c.rank, lb, la).map(|s| -s);
                let sign = match (direct, reverse) {
                    (Some(x), Some(y)) if x != y => {
                        return Err(ChevalleyError::InconsistentTable {
                            kind: c.to_string(),
                            a: self.roots[a].clone(),
                            b: self.roots[b].clone(),
                        })
                    }
                    (Some(x), _) | (None, Some(x)) => x,
                    (None, None) => {
                        return Err(ChevalleyError::UncoveredPair {
                            kind: c.to_string(),
                            a: self.roots[a].clone(),
                            b: self.roots[b].clone(),
                        })
                    }
                };
                pp.insert((a, b), sign * (self.string_p(a, b) + 1));
            }
        }
        Ok(())
    }

    /// Extraspecial pairs get `+(p+1)`; the other special pairs are forced by
    /// the four-root identity applied to `α + β - γ - δ = 0`.
    fn extraspecial_signs(
        &self,
        comp: usize,
        pp: &mut HashMap<(usize, usize), i64>,
    ) -> Result<(), ChevalleyError> {
        // positive_roots() is sorted by height, which is a valid total order.
        let ids = self.positives_in(comp);
        let order: HashMap<usize, usize> = ids.iter().enumerate().map(|(k, &i)| (i, k)).collect();
        for &xi in &ids {
            let mut special: Vec<(usize, usize)> = ids
                .iter()
                .filter_map(|&g| {
                    let d = self.diff_id(xi, g)?;
                    (d < self.npos && order[&g] < order[&d]).then_some((g, d))
                })
                .collect();
            if special.is_empty() {
                continue;
            }
            special.sort_by_key(|&(g, _)| order[&g]);
            let (alpha, beta) = special[0];
            let nab = self.string_p(alpha, beta) + 1;
            pp.insert((alpha, beta), nab);
            pp.insert((beta, alpha), -nab);
            let len_xi = self.length(xi);
            for &(gamma, delta) in &special[1..] {
                let mgamma = self.neg(gamma);
                let mdelta = self.neg(delta);
                // N_{γ,δ} = (ξ,ξ)/N_{α,β} [ N_{β,-γ}N_{α,-δ}/|β-γ|² + N_{-γ,α}N_{β,-δ}/|α-γ|² ]
                let mut num = 0i64;
                let mut den = 1i64;
                let add = |t: i64, len: i64, num: &mut i64, den: &mut i64| {
                    // num/den + t/len
                    *num = *num * len + t * *den;
                    *den *= len;
                };
                if let Some(bg) = self.sum_id(beta, mgamma) {
                    let t = self.n_general(pp, beta, mgamma)? * self.n_general(pp, alpha, mdelta)?;
                    add(t, self.length(bg), &mut num, &mut den);
                }
                if let Some(ag) = self.sum_id(alpha, mgamma) {
                    let t = self.n_general(pp, mgamma, alpha)? * self.n_general(pp, beta, mdelta)?;
                    add(t, self.length(ag), &mut num, &mut den);
                }
                let top = len_xi * num;
                let bottom = nab * den;
                if top % bottom != 0 {
                    return Err(ChevalleyError::NonIntegral {
                        a: self.roots[gamma].clone(),
                        b: self.roots[delta].clone(),
                    });
                }
                let v = top / bottom;
                pp.insert((gamma, delta), v);
                pp.insert((delta, gamma), -v);
            }
        }
        Ok(())
    }

    /// `N_{a,b}` for arbitrary roots, derived from the positive-positive data.
    fn n_general(&self, pp: &HashMap<(usize, usize), i64>, a: usize, b: usize) -> Result<i64, ChevalleyError> {
        if self.sum_id(a, b).is_none() {
            return Ok(0);
        }
        let ap = a < self.npos;
        let bp = b < self.npos;
        let get = |x: usize, y: usize| -> i64 {
            *pp.get(&(x, y))
                .unwrap_or_else(|| panic!("missing positive constant for {:?}, {:?}", self.roots[x], self.roots[y]))
        };
        let ratio = |v: i64, num_len: i64, den_len: i64| -> Result<i64, ChevalleyError> {
            if (v * num_len) % den_len != 0 {
                return Err(ChevalleyError::NonIntegral {
                    a: self.roots[a].clone(),
                    b: self.roots[b].clone(),
                });
            }
            Ok(v * num_len / den_len)
        };
        match (ap, bp) {
            (true, true) => Ok(get(a, b)),
            (false, false) => Ok(-get(self.neg(a), self.neg(b))),
            (true, false) => {
                let beta = self.neg(b);
                if let Some(d) = self.diff_id(a, beta).filter(|&d| d < self.npos) {
                    ratio(-get(beta, d), self.length(d), self.length(a))
                } else {
                    let d = self
                        .diff_id(beta, a)
                        .filter(|&d| d < self.npos)
                        .expect("a - b is a root, so one of a - β, β - a is positive");
                    ratio(get(d, a), self.length(d), self.length(beta))
                }
            }
            (false, true) => Ok(-self.n_general(pp, b, a)?),
        }
    }

    pub fn root_system(&self) -> &RootSystem {
        &self.rs
    }

    /// All roots: positive ones first (in the root system's order), then
    /// their negatives in the same order.
    pub fn roots(&self) -> &[Vec<i64>] {
        &self.roots
    }

    pub fn root_id(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// `N_{a,b}` by coefficient vectors; `None` if either is not a root,
    /// zero if `a + b` is not a root.
    pub fn constant(&self, a: &[i64], b: &[i64]) -> Option<i64> {
        let (a, b) = (self.root_id(a)?, self.root_id(b)?);
        Some(self.n.get(&(a, b)).copied().unwrap_or(0))
    }

    pub fn constant_by_id(&self, a: usize, b: usize) -> i64 {
        self.n.get(&(a, b)).copied().unwrap_or(0)
    }

    /// Overwrite a single constant, leaving every other entry alone.
    pub fn set_constant(&mut self, a: &[i64], b: &[i64], value: i64) {
        let (a, b) = (self.root_id(a).expect("root"), self.root_id(b).expect("root"));
        self.n.insert((a, b), value);
    }

    /// Every nonzero `N_{α,β}`, sorted by `(α, β)`.
    pub fn entries(&self) -> Vec<(Vec<i64>, Vec<i64>, i64)> {
        let mut out: Vec<_> = self
            .n
            .iter()
            .map(|(&(a, b), &v)| (self.roots[a].clone(), self.roots[b].clone(), v))
            .collect();
        out.sort();
        out
    }

    pub fn basis(&self) -> Vec<BasisElement> {
        (0..self.rs.semisimple_rank())
            .map(BasisElement::H)
            .chain((0..self.roots.len()).map(BasisElement::E))
            .collect()
    }

    fn coroot_of(&self, a: usize) -> Vec<i64> {
        let base = &self.roots[a % self.npos];
        let c = self.rs.coroot_coeffs(base).expect("positive root");
        if a < self.npos {
            c
        } else {
            c.into_iter().map(|x| -x).collect()
        }
    }

    /// `[x, y]` as a sparse combination of basis elements.
    pub fn bracket(&self, x: BasisElement, y: BasisElement) -> Vec<(BasisElement, i64)> {
        use BasisElement::{E, H};
        let mut out = match (x, y) {
            (H(_), H(_)) => Vec::new(),
            (H(i), E(a)) => {
                let p = self.rs.root_weight(&self.roots[a]).0[i];
                vec![(E(a), p)]
            }
            (E(a), H(i)) => {
                let p = self.rs.root_weight(&self.roots[a]).0[i];
                vec![(E(a), -p)]
            }
            (E(a), E(b)) => {
                if self.neg(a) == b {
                    self.coroot_of(a)
                        .into_iter()
                        .enumerate()
                        .map(|(i, c)| (H(i), c))
                        .collect()
                } else if let Some(s) = self.sum_id(a, b) {
                    vec![(E(s), self.constant_by_id(a, b))]
                } else {
                    Vec::new()
                }
            }
        };
        out.retain(|&(_, c)| c != 0);
        out
    }

    fn bracket_with(&self, x: BasisElement, v: &[(BasisElement, i64)], acc: &mut BTreeMap<BasisElement, i64>) {
        for &(b, c) in v {
            for (e, d) in self.bracket(x, b) {
                *acc.entry(e).or_insert(0) += c * d;
            }
        }
    }

    /// `[x,[y,z]] + [y,[z,x]] + [z,[x,y]]`, zero entries dropped.
    pub fn jacobiator(&self, x: BasisElement, y: BasisElement, z: BasisElement) -> Vec<(BasisElement, i64)> {
        let mut acc = BTreeMap::new();
        self.bracket_with(x, &self.bracket(y, z), &mut acc);
        self.bracket_with(y, &self.bracket(z, x), &mut acc);
        self.bracket_with(z, &self.bracket(x, y), &mut acc);
        acc.into_iter().filter(|&(_, c)| c != 0).collect()
    }

    /// Check the Jacobi identity on every unordered triple of distinct basis
    /// elements.
    pub fn verify_jacobi(&self) -> JacobiReport {
        let basis = self.basis();
        let n = basis.len();
        let bad: Vec<[BasisElement; 3]> = (0..n)
            .into_par_iter()
            .flat_map_iter(|i| {
                let basis = &basis;
                (i + 1..n).flat_map(move |j| {
                    (j + 1..n).filter_map(move |k| {
                        let t = [basis[i], basis[j], basis[k]];
                        (!self.jacobiator(t[0], t[1], t[2]).is_empty()).then_some(t)
                    })
                })
            })
            .collect();
        let triples = if n < 3 { 0 } else { n * (n - 1) * (n - 2) / 6 };
        JacobiReport {
            triples_checked: triples,
            violations: bad.len(),
            witnesses: bad.into_iter().take(10).collect(),
        }
    }

    /// Check `|N| = p + 1`, both antisymmetry relations and the `N_{α,-β}`
    /// length-ratio rule on every pair. Returns human-readable violations.
    pub fn check_relations(&self) -> Vec<String> {
        let mut bad = Vec::new();
        let total = self.roots.len();
        for a in 0..total {
            for b in 0..total {
                let v = self.constant_by_id(a, b);
                let ra = &self.roots[a];
                let rb = &self.roots[b];
                if self.sum_id(a, b).is_none() {
                    if v != 0 {
                        bad.push(format!("N({ra:?},{rb:?}) = {v} but the sum is not a root"));
                    }
                    continue;
                }
                let p = self.string_p(a, b);
                if v.abs() != p + 1 {
                    bad.push(format!("|N({ra:?},{rb:?})| = {} != p+1 = {}", v.abs(), p + 1));
                }
                if self.constant_by_id(b, a) != -v {
                    bad.push(format!("N({ra:?},{rb:?}) != -N({rb:?},{ra:?})"));
                }
                if self.constant_by_id(self.neg(a), self.neg(b)) != -v {
                    bad.push(format!("N(-{ra:?},-{rb:?}) != -N({ra:?},{rb:?})"));
                }
                // α, β positive with α - β or β - α positive
                if a < self.npos && b < self.npos {
                    let mb = self.neg(b);
                    let lhs = self.constant_by_id(a, mb);
                    if let Some(d) = self.diff_id(a, b).filter(|&d| d < self.npos) {
                        let rhs = -self.constant_by_id(b, d) * self.length(d);
                        if lhs * self.length(a) != rhs {
                            bad.push(format!("N({ra:?},-{rb:?}) violates the a-b rule"));
                        }
                    } else if let Some(d) = self.diff_id(b, a).filter(|&d| d < self.npos) {
                        let rhs = self.constant_by_id(d, a) * self.length(d);
                        if lhs * self.length(b) != rhs {
                            bad.push(format!("N({ra:?},-{rb:?}) violates the b-a rule"));
                        }
                    }
                }
            }
        }
        bad
    }
}
