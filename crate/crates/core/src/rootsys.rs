//! Root systems of reductive groups given by Dynkin data.
//!
//! Weights live in `Z^n` with `n = semisimple rank + torus rank`: the first
//! coordinates are coefficients on the fundamental weights of each simple
//! component (so coordinate `i` of `λ` is `⟨α_i^∨, λ⟩`), the last ones are
//! standard characters of the central torus. Roots are also carried as
//! coefficient vectors over the simple roots. Simple roots are numbered
//! globally, component by component, each component in Bourbaki order.

use std::collections::{BTreeSet, HashMap, VecDeque};
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};
use thiserror::Error;

use crate::exactlin::inverse_with_det;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum SimpleType {
    A,
    B,
    C,
    D,
    E,
    F,
    G,
}

impl SimpleType {
    pub fn letter(self) -> char {
        match self {
            SimpleType::A => 'A',
            SimpleType::B => 'B',
            SimpleType::C => 'C',
            SimpleType::D => 'D',
            SimpleType::E => 'E',
            SimpleType::F => 'F',
            SimpleType::G => 'G',
        }
    }

    fn from_letter(c: char) -> Option<Self> {
        Some(match c.to_ascii_uppercase() {
            'A' => SimpleType::A,
            'B' => SimpleType::B,
            'C' => SimpleType::C,
            'D' => SimpleType::D,
            'E' => SimpleType::E,
            'F' => SimpleType::F,
            'G' => SimpleType::G,
            _ => return None,
        })
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct Component {
    #[serde(rename = "type")]
    pub kind: SimpleType,
    pub rank: usize,
}

impl Component {
    pub fn new(kind: SimpleType, rank: usize) -> Self {
        Component { kind, rank }
    }
}

impl fmt::Display for Component {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}{}", self.kind.letter(), self.rank)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct DynkinSpec {
    pub components: Vec<Component>,
    #[serde(default)]
    pub torus_rank: usize,
}

impl DynkinSpec {
    pub fn simple(kind: SimpleType, rank: usize) -> Self {
        DynkinSpec {
            components: vec![Component::new(kind, rank)],
            torus_rank: 0,
        }
    }

    pub fn with_torus(mut self, torus_rank: usize) -> Self {
        self.torus_rank = torus_rank;
        self
    }

    /// Check rank constraints and rewrite `C2 -> B2`, `D3 -> A3`. Returns the
    /// canonical spec and a note per rewrite.
    pub fn canonicalize(&self) -> Result<(DynkinSpec, Vec<String>), RootSystemError> {
        let mut notes = Vec::new();
        let mut components = Vec::with_capacity(self.components.len());
        for (pos, c) in self.components.iter().enumerate() {
            let ok = match c.kind {
                SimpleType::A => c.rank >= 1,
                SimpleType::B | SimpleType::C => c.rank >= 2,
                SimpleType::D => c.rank >= 3,
                SimpleType::E => (6..=8).contains(&c.rank),
                SimpleType::F => c.rank == 4,
                SimpleType::G => c.rank == 2,
            };
            if !ok {
                return Err(RootSystemError::InvalidRank {
                    position: pos,
                    component: c.to_string(),
                });
            }
            let canon = match (c.kind, c.rank) {
                (SimpleType::C, 2) => Component::new(SimpleType::B, 2),
                (SimpleType::D, 3) => Component::new(SimpleType::A, 3),
                _ => *c,
            };
            if canon != *c {
                notes.push(format!("component {pos}: {c} canonicalized to {canon}"));
            }
            components.push(canon);
        }
        Ok((
            DynkinSpec {
                components,
                torus_rank: self.torus_rank,
            },
            notes,
        ))
    }
}

impl fmt::Display for DynkinSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.components.iter().map(|c| c.to_string()).collect();
        let mut s = parts.join("x");
        if self.torus_rank > 0 {
            if !s.is_empty() {
                s.push('+');
            }
            s.push_str(&format!("T{}", self.torus_rank));
        }
        if s.is_empty() {
            s.push_str("T0");
        }
        f.write_str(&s)
    }
}

/// Parses strings like `A2`, `B2xG2`, `A1+T1`, `T2`.
impl FromStr for DynkinSpec {
    type Err = RootSystemError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let bad = || RootSystemError::Parse(s.to_string());
        let (semisimple, torus) = match s.split_once('+') {
            Some((a, b)) => (a.trim(), Some(b.trim())),
            None if s.trim().starts_with(['T', 't']) => ("", Some(s.trim())),
            None => (s.trim(), None),
        };
        let torus_rank = match torus {
            Some(t) => t
                .strip_prefix(['T', 't'])
                .and_then(|n| n.parse().ok())
                .ok_or_else(bad)?,
            None => 0,
        };
        let mut components = Vec::new();
        if !semisimple.is_empty() {
            for part in semisimple.split(['x', 'X', '*']) {
                let part = part.trim();
                let mut chars = part.chars();
                let kind = chars.next().and_then(SimpleType::from_letter).ok_or_else(bad)?;
                let rank = chars.as_str().parse().map_err(|_| bad())?;
                components.push(Component::new(kind, rank));
            }
        }
        Ok(DynkinSpec {
            components,
            torus_rank,
        })
    }
}

/// A weight in fundamental-weight + torus coordinates.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct WeightVec(pub Vec<i64>);

impl WeightVec {
    pub fn zero(n: usize) -> Self {
        WeightVec(vec![0; n])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&x| x == 0)
    }
}

impl From<Vec<i64>> for WeightVec {
    fn from(v: Vec<i64>) -> Self {
        WeightVec(v)
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum RootSystemError {
    #[error("component {position} ({component}) violates the rank constraints of its type")]
    InvalidRank { position: usize, component: String },
    #[error("cannot parse Dynkin spec {0:?}")]
    Parse(String),
    #[error("simple root index {index} out of range (semisimple rank {rank})")]
    IndexOutOfRange { index: usize, rank: usize },
    #[error("expected a vector of length {expected}, got {found}")]
    DimensionMismatch { expected: usize, found: usize },
    #[error("weight {0:?} is not in the root lattice")]
    NotInRootLattice(Vec<i64>),
    #[error("{0:?} is not a positive root")]
    NotAPositiveRoot(Vec<i64>),
}

/// Bourbaki Cartan matrix, `a[i][j] = ⟨α_i^∨, α_j⟩`.
pub fn cartan_matrix(kind: SimpleType, rank: usize) -> Vec<Vec<i64>> {
    let n = rank;
    let mut a = vec![vec![0i64; n]; n];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let mut edge = |i: usize, j: usize, aij: i64, aji: i64| {
        a[i][j] = aij;
        a[j][i] = aji;
    };
    match kind {
        SimpleType::A => (0..n.saturating_sub(1)).for_each(|i| edge(i, i + 1, -1, -1)),
        SimpleType::B => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1, -1));
            // α_n short
            edge(n - 2, n - 1, -1, -2);
        }
        SimpleType::C => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1, -1));
            // α_n long
            edge(n - 2, n - 1, -2, -1);
        }
        SimpleType::D => {
            (0..n - 2).for_each(|i| edge(i, i + 1, -1, -1));
            edge(n - 3, n - 1, -1, -1);
        }
        SimpleType::E => {
            for (i, j) in [(0, 2), (2, 3), (3, 4), (4, 5), (5, 6), (6, 7), (1, 3)] {
                if j < n {
                    edge(i, j, -1, -1);
                }
            }
        }
        SimpleType::F => {
            edge(0, 1, -1, -1);
            edge(1, 2, -1, -2);
            edge(2, 3, -1, -1);
        }
        SimpleType::G => edge(0, 1, -3, -1),
    }
    a
}

/// Squared lengths of the simple roots, short roots normalized to 2.
pub fn simple_root_lengths(kind: SimpleType, rank: usize) -> Vec<i64> {
    match kind {
        SimpleType::A | SimpleType::D | SimpleType::E => vec![2; rank],
        SimpleType::B => (0..rank).map(|i| if i + 1 == rank { 2 } else { 4 }).collect(),
        SimpleType::C => (0..rank).map(|i| if i + 1 == rank { 4 } else { 2 }).collect(),
        SimpleType::F => vec![4, 4, 2, 2],
        SimpleType::G => vec![2, 6],
    }
}

/// A positive root.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Root {
    /// Coefficients over the simple roots.
    pub coeffs: Vec<i64>,
    pub weight: WeightVec,
    pub height: i64,
    /// Squared length under the invariant form.
    pub length: i64,
    pub component: usize,
}

/// One connected piece of an induced subdiagram.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SubdiagramComponent {
    pub kind: SimpleType,
    pub rank: usize,
    /// Each entry maps Bourbaki position `k` (0-based) to a global simple-root
    /// index. More than one entry when the diagram has automorphisms.
    pub renumberings: Vec<Vec<usize>>,
}

impl SubdiagramComponent {
    pub fn nodes(&self) -> BTreeSet<usize> {
        self.renumberings[0].iter().copied().collect()
    }
}

#[derive(Debug, Clone)]
pub struct RootSystem {
    spec: DynkinSpec,
    notes: Vec<String>,
    rank: usize,
    torus_rank: usize,
    cartan: Vec<Vec<i64>>,
    lengths: Vec<i64>,
    component_of: Vec<usize>,
    offsets: Vec<usize>,
    positive: Vec<Root>,
    index: HashMap<Vec<i64>, usize>,
    inv_cartan: (Vec<Vec<i64>>, i64),
}

impl RootSystem {
    pub fn build(spec: &DynkinSpec) -> Result<Self, RootSystemError> {
        let (spec, notes) = spec.canonicalize()?;
        let rank: usize = spec.components.iter().map(|c| c.rank).sum();
        let mut cartan = vec![vec![0i64; rank]; rank];
        let mut lengths = Vec::with_capacity(rank);
        let mut component_of = Vec::with_capacity(rank);
        let mut offsets = Vec::with_capacity(spec.components.len());
        let mut off = 0;
        for (ci, c) in spec.components.iter().enumerate() {
            let local = cartan_matrix(c.kind, c.rank);
            for i in 0..c.rank {
                for j in 0..c.rank {
                    cartan[off + i][off + j] = local[i][j];
                }
            }
            lengths.extend(simple_root_lengths(c.kind, c.rank));
            component_of.extend(std::iter::repeat(ci).take(c.rank));
            offsets.push(off);
            off += c.rank;
        }
        let inv_cartan = if rank == 0 {
            (Vec::new(), 1)
        } else {
            let (adj, d) = inverse_with_det(&cartan).expect("Cartan matrices are nonsingular");
            (adj, d)
        };
        let mut rs = RootSystem {
            spec,
            notes,
            rank,
            torus_rank: 0,
            cartan,
            lengths,
            component_of,
            offsets,
            positive: Vec::new(),
            index: HashMap::new(),
            inv_cartan,
        };
        rs.torus_rank = rs.spec.torus_rank;
        rs.close_positive_roots();
        Ok(rs)
    }

    /// Generate positive roots by height using root strings.
    fn close_positive_roots(&mut self) {
        let n = self.rank;
        let mut queue: VecDeque<Vec<i64>> = VecDeque::new();
        let mut found: Vec<Vec<i64>> = Vec::new();
        let mut seen: HashMap<Vec<i64>, ()> = HashMap::new();
        for i in 0..n {
            let mut e = vec![0; n];
            e[i] = 1;
            seen.insert(e.clone(), ());
            queue.push_back(e);
        }
        while let Some(beta) = queue.pop_front() {
            found.push(beta.clone());
            let pair = self.cartan_times(&beta);
            for i in 0..n {
                // Roots stay inside one component.
                let comp = self.component_of[beta.iter().position(|&k| k != 0).unwrap()];
                if self.component_of[i] != comp {
                    continue;
                }
                let mut p = 0;
                let mut down = beta.clone();
                loop {
                    down[i] -= 1;
                    if seen.contains_key(&down) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let q = p - pair[i];
                if q > 0 {
                    let mut up = beta.clone();
                    up[i] += 1;
                    if !seen.contains_key(&up) {
                        seen.insert(up.clone(), ());
                        queue.push_back(up);
                    }
                }
            }
        }
        found.sort_by(|a, b| {
            let ha: i64 = a.iter().sum();
            let hb: i64 = b.iter().sum();
            ha.cmp(&hb).then_with(|| b.cmp(a))
        });
        self.positive = found
            .into_iter()
            .map(|coeffs| {
                let weight = self.root_weight(&coeffs);
                let height = coeffs.iter().sum();
                let length = self.form(&coeffs, &coeffs);
                let component = self.component_of[coeffs.iter().position(|&k| k != 0).unwrap()];
                Root {
                    coeffs,
                    weight,
                    height,
                    length,
                    component,
                }
            })
            .collect();
        self.index = self
            .positive
            .iter()
            .enumerate()
            .map(|(i, r)| (r.coeffs.clone(), i))
            .collect();
    }

    fn cartan_times(&self, coeffs: &[i64]) -> Vec<i64> {
        (0..self.rank)
            .map(|i| (0..self.rank).map(|j| self.cartan[i][j] * coeffs[j]).sum())
            .collect()
    }

    pub fn spec(&self) -> &DynkinSpec {
        &self.spec
    }

    /// Canonicalization notes (e.g. `C2` rewritten to `B2`).
    pub fn notes(&self) -> &[String] {
        &self.notes
    }

    pub fn semisimple_rank(&self) -> usize {
        self.rank
    }

    pub fn torus_rank(&self) -> usize {
        self.torus_rank
    }

    /// Length of weight vectors.
    pub fn dim(&self) -> usize {
        self.rank + self.torus_rank
    }

    pub fn cartan(&self) -> &[Vec<i64>] {
        &self.cartan
    }

    pub fn simple_lengths(&self) -> &[i64] {
        &self.lengths
    }

    pub fn component_of(&self, simple: usize) -> usize {
        self.component_of[simple]
    }

    pub fn component_offset(&self, component: usize) -> usize {
        self.offsets[component]
    }

    pub fn positive_roots(&self) -> &[Root] {
        &self.positive
    }

    pub fn positive_root_index(&self, coeffs: &[i64]) -> Option<usize> {
        self.index.get(coeffs).copied()
    }

    /// Invariant form on the root lattice, in simple-root coefficients.
    pub fn form(&self, a: &[i64], b: &[i64]) -> i64 {
        let mut s = 0;
        for i in 0..self.rank {
            if a[i] == 0 {
                continue;
            }
            for j in 0..self.rank {
                if b[j] != 0 {
                    s += a[i] * b[j] * self.cartan[i][j] * self.lengths[i] / 2;
                }
            }
        }
        s
    }

    /// Weight coordinates of a root-lattice element.
    pub fn root_weight(&self, coeffs: &[i64]) -> WeightVec {
        let mut w = self.cartan_times(coeffs);
        w.extend(std::iter::repeat(0).take(self.torus_rank));
        WeightVec(w)
    }

    /// Simple-root coefficients of `λ`, if it lies in the root lattice.
    pub fn root_coeffs(&self, lambda: &WeightVec) -> Result<Vec<i64>, RootSystemError> {
        self.check_dim(lambda)?;
        if lambda.0[self.rank..].iter().any(|&x| x != 0) {
            return Err(RootSystemError::NotInRootLattice(lambda.0.clone()));
        }
        let (adj, d) = &self.inv_cartan;
        let mut out = Vec::with_capacity(self.rank);
        for row in adj.iter() {
            let s: i64 = row.iter().zip(&lambda.0).map(|(a, b)| a * b).sum();
            if s % d != 0 {
                return Err(RootSystemError::NotInRootLattice(lambda.0.clone()));
            }
            out.push(s / d);
        }
        Ok(out)
    }

    fn check_dim(&self, lambda: &WeightVec) -> Result<(), RootSystemError> {
        if lambda.len() != self.dim() {
            return Err(RootSystemError::DimensionMismatch {
                expected: self.dim(),
                found: lambda.len(),
            });
        }
        Ok(())
    }

    /// `⟨α_i^∨, λ⟩`.
    pub fn pairing(&self, i: usize, lambda: &WeightVec) -> Result<i64, RootSystemError> {
        if i >= self.rank {
            return Err(RootSystemError::IndexOutOfRange {
                index: i,
                rank: self.rank,
            });
        }
        self.check_dim(lambda)?;
        Ok(lambda.0[i])
    }

    /// Coefficients of `β^∨` over the simple coroots.
    pub fn coroot_coeffs(&self, beta: &[i64]) -> Result<Vec<i64>, RootSystemError> {
        let idx = self
            .positive_root_index(beta)
            .ok_or_else(|| RootSystemError::NotAPositiveRoot(beta.to_vec()))?;
        let len = self.positive[idx].length;
        Ok(beta
            .iter()
            .zip(&self.lengths)
            .map(|(k, l)| {
                debug_assert_eq!((k * l) % len, 0);
                k * l / len
            })
            .collect())
    }

    /// `β^∨` as a functional on weight coordinates (zero on the torus part).
    pub fn coroot_functional(&self, beta: &[i64]) -> Result<Vec<i64>, RootSystemError> {
        let mut f = self.coroot_coeffs(beta)?;
        f.extend(std::iter::repeat(0).take(self.torus_rank));
        Ok(f)
    }

    /// `⟨β^∨, λ⟩ = 2(β, λ)/(β, β)` for a positive root `β`.
    pub fn coroot_pairing(&self, beta: &[i64], lambda: &WeightVec) -> Result<i64, RootSystemError> {
        self.check_dim(lambda)?;
        let idx = self
            .positive_root_index(beta)
            .ok_or_else(|| RootSystemError::NotAPositiveRoot(beta.to_vec()))?;
        let len = self.positive[idx].length;
        // (α_i, λ) = λ_i (α_i, α_i) / 2
        let twice: i64 = (0..self.rank).map(|i| beta[i] * lambda.0[i] * self.lengths[i]).sum();
        debug_assert_eq!(twice % len, 0);
        Ok(twice / len)
    }

    /// Indices with nonzero coefficient.
    pub fn support(&self, sigma: &WeightVec) -> Result<BTreeSet<usize>, RootSystemError> {
        Ok(support_of(&self.root_coeffs(sigma)?))
    }

    pub fn is_positive_root(&self, coeffs: &[i64]) -> bool {
        self.index.contains_key(coeffs)
    }

    pub fn is_root(&self, coeffs: &[i64]) -> bool {
        if self.is_positive_root(coeffs) {
            return true;
        }
        let neg: Vec<i64> = coeffs.iter().map(|x| -x).collect();
        self.is_positive_root(&neg)
    }

    pub fn is_positive_root_weight(&self, sigma: &WeightVec) -> bool {
        self.root_coeffs(sigma)
            .map(|c| self.is_positive_root(&c))
            .unwrap_or(false)
    }

    /// All simple-coroot pairings are non-negative. Torus coordinates are free.
    pub fn is_dominant(&self, lambda: &WeightVec) -> bool {
        lambda.len() == self.dim() && lambda.0[..self.rank].iter().all(|&x| x >= 0)
    }

    pub fn orthogonal(&self, i: usize, j: usize) -> bool {
        self.cartan[i][j] == 0
    }

    /// Classify the induced Dynkin diagram on `nodes`.
    pub fn subdiagram_type(&self, nodes: &BTreeSet<usize>) -> Vec<SubdiagramComponent> {
        let mut remaining: BTreeSet<usize> = nodes.clone();
        let mut out = Vec::new();
        while let Some(&start) = remaining.iter().next() {
            let mut comp = BTreeSet::new();
            let mut stack = vec![start];
            remaining.remove(&start);
            while let Some(v) = stack.pop() {
                comp.insert(v);
                let next: Vec<usize> = remaining
                    .iter()
                    .copied()
                    .filter(|&w| self.cartan[v][w] != 0)
                    .collect();
                for w in next {
                    remaining.remove(&w);
                    stack.push(w);
                }
            }
            out.push(self.classify_connected(&comp.into_iter().collect::<Vec<_>>()));
        }
        out
    }

    fn classify_connected(&self, nodes: &[usize]) -> SubdiagramComponent {
        let n = nodes.len();
        let mut candidates = vec![(SimpleType::A, n)];
        if n >= 2 {
            candidates.push((SimpleType::B, n));
        }
        if n >= 3 {
            candidates.push((SimpleType::C, n));
        }
        if n >= 4 {
            candidates.push((SimpleType::D, n));
        }
        if (6..=8).contains(&n) {
            candidates.push((SimpleType::E, n));
        }
        if n == 4 {
            candidates.push((SimpleType::F, 4));
        }
        if n == 2 {
            candidates.push((SimpleType::G, 2));
        }
        for (kind, rank) in candidates {
            let std = cartan_matrix(kind, rank);
            let maps = diagram_isomorphisms(&std, nodes, &self.cartan);
            if !maps.is_empty() {
                return SubdiagramComponent {
                    kind,
                    rank,
                    renumberings: maps,
                };
            }
        }
        unreachable!("every connected subdiagram of a finite Dynkin diagram is of finite type")
    }

    /// Human-readable label such as `α1+2α2` (1-based).
    pub fn root_label(&self, coeffs: &[i64]) -> String {
        coeffs_label(coeffs)
    }
}

pub fn support_of(coeffs: &[i64]) -> BTreeSet<usize> {
    coeffs
        .iter()
        .enumerate()
        .filter(|(_, &k)| k != 0)
        .map(|(i, _)| i)
        .collect()
}

pub fn coeffs_label(coeffs: &[i64]) -> String {
    let mut s = String::new();
    for (i, &k) in coeffs.iter().enumerate() {
        if k == 0 {
            continue;
        }
        if k < 0 {
            s.push('-');
        } else if !s.is_empty() {
            s.push('+');
        }
        if k.abs() != 1 {
            s.push_str(&k.abs().to_string());
        }
        s.push_str(&format!("α{}", i + 1));
    }
    if s.is_empty() {
        s.push('0');
    }
    s
}

/// All maps `std position -> node` under which the Cartan matrices agree.
fn diagram_isomorphisms(std: &[Vec<i64>], nodes: &[usize], cartan: &[Vec<i64>]) -> Vec<Vec<usize>> {
    let n = std.len();
    if nodes.len() != n {
        return Vec::new();
    }
    // BFS order of the standard diagram so every later position has an
    // already-placed neighbour.
    let mut order = vec![0];
    let mut parent = vec![usize::MAX; n];
    let mut placed = vec![false; n];
    placed[0] = true;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        head += 1;
        for w in 0..n {
            if !placed[w] && std[v][w] != 0 {
                placed[w] = true;
                parent[w] = v;
                order.push(w);
            }
        }
    }
    let mut assign = vec![usize::MAX; n];
    let mut used = vec![false; nodes.len()];
    let mut out = Vec::new();
    iso_search(0, &order, &parent, std, nodes, cartan, &mut assign, &mut used, &mut out);
    out.sort();
    out
}

#[allow(clippy::too_many_arguments)]
fn iso_search(
    pos: usize,
    order: &[usize],
    parent: &[usize],
    std: &[Vec<i64>],
    nodes: &[usize],
    cartan: &[Vec<i64>],
    assign: &mut Vec<usize>,
    used: &mut Vec<bool>,
    out: &mut Vec<Vec<usize>>,
) {
    if pos == order.len() {
        out.push(assign.clone());
        return;
    }
    let s = order[pos];
    for (ni, &cand) in nodes.iter().enumerate() {
        if used[ni] {
            continue;
        }
        if pos > 0 && cartan[assign[parent[s]]][cand] == 0 {
            continue;
        }
        let consistent = order[..pos].iter().all(|&t| {
            std[s][t] == cartan[cand][assign[t]] && std[t][s] == cartan[assign[t]][cand]
        });
        if !consistent {
            continue;
        }
        assign[s] = cand;
        used[ni] = true;
        iso_search(pos + 1, order, parent, std, nodes, cartan, assign, used, out);
        used[ni] = false;
        assign[s] = usize::MAX;
    }
}
