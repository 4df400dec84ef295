//! Reference data computed from first principles, sharing no code with the
//! library beyond the types needed to call it.
#![allow(dead_code)]

use std::collections::{BTreeMap, BTreeSet, HashSet};

/// Cartan matrix `a[i][j] = ⟨α_i^∨, α_j⟩`, Bourbaki numbering.
pub fn cartan(kind: char, r: usize) -> Vec<Vec<i64>> {
    let mut a = vec![vec![0; r]; r];
    for (i, row) in a.iter_mut().enumerate() {
        row[i] = 2;
    }
    let chain = |a: &mut Vec<Vec<i64>>, upto: usize| {
        for i in 0..upto {
            a[i][i + 1] = -1;
            a[i + 1][i] = -1;
        }
    };
    match kind {
        'A' => chain(&mut a, r - 1),
        'B' => {
            chain(&mut a, r - 1);
            a[r - 1][r - 2] = -2;
        }
        'C' => {
            chain(&mut a, r - 1);
            a[r - 2][r - 1] = -2;
        }
        'D' => {
            chain(&mut a, r - 2);
            a[r - 3][r - 1] = -1;
            a[r - 1][r - 3] = -1;
        }
        'F' => {
            chain(&mut a, 3);
            a[2][1] = -2;
        }
        'G' => {
            a[0][1] = -3;
            a[1][0] = -1;
        }
        _ => panic!("unknown type {kind}"),
    }
    a
}

/// Squared lengths of the simple roots, short roots having length 2.
pub fn lengths(kind: char, r: usize) -> Vec<i64> {
    match kind {
        'A' | 'D' => vec![2; r],
        'B' => (0..r).map(|i| if i == r - 1 { 2 } else { 4 }).collect(),
        'C' => (0..r).map(|i| if i == r - 1 { 4 } else { 2 }).collect(),
        'F' => vec![4, 4, 2, 2],
        'G' => vec![2, 6],
        _ => panic!("unknown type {kind}"),
    }
}

/// Positive roots grown height by height with root strings.
pub fn positive_roots(a: &[Vec<i64>]) -> BTreeSet<Vec<i64>> {
    let n = a.len();
    let mut layer: BTreeSet<Vec<i64>> = (0..n)
        .map(|i| {
            let mut e = vec![0; n];
            e[i] = 1;
            e
        })
        .collect();
    let mut all = layer.clone();
    while !layer.is_empty() {
        let mut next = BTreeSet::new();
        for b in &layer {
            for i in 0..n {
                let mut p = 0;
                loop {
                    let mut c = b.clone();
                    c[i] -= p + 1;
                    if all.contains(&c) {
                        p += 1;
                    } else {
                        break;
                    }
                }
                let pairing: i64 = (0..n).map(|j| a[i][j] * b[j]).sum();
                if p - pairing > 0 {
                    let mut c = b.clone();
                    c[i] += 1;
                    next.insert(c);
                }
            }
        }
        all.extend(next.iter().cloned());
        layer = next;
    }
    all
}

pub fn all_roots(a: &[Vec<i64>]) -> HashSet<Vec<i64>> {
    let pos = positive_roots(a);
    pos.iter()
        .cloned()
        .chain(pos.iter().map(|r| r.iter().map(|x| -x).collect()))
        .collect()
}

fn sub_scaled(b: &[i64], a: &[i64], k: i64) -> Vec<i64> {
    b.iter().zip(a).map(|(x, y)| x - k * y).collect()
}

/// Largest `p` with `b - p a` a root.
pub fn string_p(roots: &HashSet<Vec<i64>>, a: &[i64], b: &[i64]) -> i64 {
    let mut p = 0;
    while roots.contains(&sub_scaled(b, a, p + 1)) {
        p += 1;
    }
    p
}

pub fn is_sum_root(roots: &HashSet<Vec<i64>>, a: &[i64], b: &[i64]) -> bool {
    let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
    roots.contains(&s)
}

/// Every `(coefficients, row, Π_σ)` expected in the spherical-root table for
/// an ambient simple type, found by brute-force embedding of each pattern.
pub fn table_expected(kind: char, r: usize) -> BTreeMap<Vec<i64>, (u8, BTreeSet<usize>)> {
    let amb = cartan(kind, r);
    let mut out: BTreeMap<Vec<i64>, (u8, BTreeSet<usize>)> = BTreeMap::new();
    let mut put = |coeffs: Vec<i64>, row: u8, pi: BTreeSet<usize>| {
        if let Some(old) = out.insert(coeffs.clone(), (row, pi.clone())) {
            assert_eq!(old, (row, pi), "conflicting table entries for {coeffs:?}");
        }
    };
    for i in 0..r {
        for (row, k) in [(1u8, 1), (2, 2)] {
            let mut c = vec![0; r];
            c[i] = k;
            put(c, row, BTreeSet::new());
        }
        for j in i + 1..r {
            if amb[i][j] == 0 {
                let mut c = vec![0; r];
                c[i] = 1;
                c[j] = 1;
                put(c, 3, BTreeSet::new());
            }
        }
    }
    for (pk, pr, row, pattern, pi) in patterns(r) {
        let pc = cartan(pk, pr);
        for emb in embeddings(&pc, &amb) {
            let mut c = vec![0; r];
            for (p, &g) in emb.iter().enumerate() {
                c[g] = pattern[p];
            }
            let pi_global = pi.iter().map(|&p| emb[p - 1]).collect();
            put(c, row, pi_global);
        }
    }
    out
}

/// Connected patterns up to rank `max`: type, rank, row, coefficients and
/// the `Π_σ` column as 1-based Bourbaki positions.
fn patterns(max: usize) -> Vec<(char, usize, u8, Vec<i64>, Vec<usize>)> {
    let mut v = Vec::new();
    for r in 2..=max {
        let inner: Vec<usize> = if r == 2 { vec![] } else { (2..r).collect() };
        v.push(('A', r, 4, vec![1; r], inner.clone()));
        v.push(('B', r, 6, vec![1; r], inner));
        v.push(('B', r, 7, vec![2; r], (2..=r).collect()));
        if r >= 3 {
            let mut c = vec![2; r];
            c[0] = 1;
            c[r - 1] = 1;
            v.push(('C', r, 9, c, (3..=r).collect()));
        }
        if r >= 4 {
            let mut c = vec![2; r];
            c[r - 2] = 1;
            c[r - 1] = 1;
            v.push(('D', r, 10, c, (2..=r).collect()));
        }
    }
    if max >= 3 {
        v.push(('A', 3, 5, vec![1, 2, 1], vec![1, 3]));
        v.push(('B', 3, 8, vec![1, 2, 3], vec![1, 2]));
    }
    if max >= 4 {
        v.push(('F', 4, 11, vec![1, 2, 3, 2], vec![1, 2, 3]));
    }
    v.push(('G', 2, 12, vec![1, 1], vec![]));
    v.push(('G', 2, 13, vec![4, 2], vec![2]));
    v
}

/// Injective maps of the pattern's nodes into the ambient diagram that
/// preserve every off-diagonal Cartan entry.
fn embeddings(p: &[Vec<i64>], amb: &[Vec<i64>]) -> Vec<Vec<usize>> {
    fn go(p: &[Vec<i64>], amb: &[Vec<i64>], cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == p.len() {
            out.push(cur.clone());
            return;
        }
        let k = cur.len();
        for g in 0..amb.len() {
            if cur.contains(&g) {
                continue;
            }
            if cur.iter().enumerate().all(|(q, &h)| p[k][q] == amb[g][h] && p[q][k] == amb[h][g]) {
                cur.push(g);
                go(p, amb, cur, out);
                cur.pop();
            }
        }
    }
    let mut out = Vec::new();
    if p.len() <= amb.len() {
        go(p, amb, &mut Vec::new(), &mut out);
    }
    out
}

/// Labels of the positive roots used by the sign tables, 1-based.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum L {
    A(usize, usize),
    B(usize, usize),
}

fn alpha(r: usize, i: usize, j: usize) -> Vec<i64> {
    (1..=r).map(|t| i64::from(i <= t && t <= j)).collect()
}

fn add(a: &[i64], b: &[i64]) -> Vec<i64> {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Root coefficients of every label for a classical type.
pub fn labels(kind: char, r: usize) -> Vec<(L, Vec<i64>)> {
    let mut v = Vec::new();
    let amax = if kind == 'A' || kind == 'B' { r } else { r - 1 };
    for i in 1..=amax {
        for j in i..=amax {
            v.push((L::A(i, j), alpha(r, i, j)));
        }
    }
    let mut er = vec![0; r];
    er[r - 1] = 1;
    match kind {
        'B' => {
            for i in 1..=r {
                for j in i + 1..=r {
                    v.push((L::B(i, j), add(&alpha(r, i, r), &alpha(r, j, r))));
                }
            }
        }
        'C' => {
            for i in 1..=r {
                v.push((L::B(i, r), alpha(r, i, r)));
                for j in i..r {
                    let t = add(&add(&alpha(r, i, r - 1), &er), &alpha(r, j, r - 1));
                    v.push((L::B(i, j), t));
                }
            }
        }
        'D' => {
            for i in 1..r {
                let mut base = alpha(r, i, r - 1);
                base[r - 2] -= 1;
                base[r - 1] += 1;
                v.push((L::B(i, r), base.clone()));
                for j in i + 1..r {
                    v.push((L::B(i, j), add(&base, &alpha(r, j, r - 1))));
                }
            }
        }
        _ => {}
    }
    v
}

/// Signs of every condition in the `N_{x,y}` table that `(x, y)` satisfies,
/// in table order.
fn table_hits(kind: char, r: usize, x: L, y: L) -> Vec<i64> {
    let mut hits = Vec::new();
    match (x, y) {
        (L::A(i, j), L::A(k, l)) => {
            if k == j + 1 {
                hits.push(1);
            }
            if i == l + 1 {
                hits.push(-1);
            }
            if kind == 'B' && j == r && l == r {
                if i < k {
                    hits.push(-1);
                }
                if k < i {
                    hits.push(1);
                }
            }
        }
        (L::B(i, j), L::A(k, l)) => match kind {
            'B' | 'D' => {
                if i == l + 1 {
                    hits.push(-1);
                }
                if j == l + 1 && k < i {
                    hits.push(1);
                }
                if j == l + 1 && i < k {
                    hits.push(-1);
                }
            }
            'C' => {
                if i == l + 1 {
                    hits.push(-1);
                }
                if j == l + 1 {
                    hits.push(-1);
                }
            }
            _ => {}
        },
        _ => {}
    }
    hits
}

/// The sign of `N_{x,y}` read off the tables, directly or through
/// `N_{y,x} = -N_{x,y}`. `Err` if no cell covers the pair or cells disagree.
pub fn table_sign(kind: char, r: usize, x: L, y: L) -> Result<i64, String> {
    let mut all = table_hits(kind, r, x, y);
    all.extend(table_hits(kind, r, y, x).into_iter().map(|s| -s));
    match all.first() {
        None => Err(format!("{kind}{r}: no cell for ({x:?}, {y:?})")),
        Some(&s) if all.iter().all(|&t| t == s) => Ok(s),
        Some(_) => Err(format!("{kind}{r}: cells disagree for ({x:?}, {y:?})")),
    }
}

/// Basis element of a Chevalley basis: `h_i` or `e_β`.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum X {
    H(usize),
    E(Vec<i64>),
}

pub type Elt = BTreeMap<X, i64>;

/// A bracket built from the Cartan matrix, the simple-root lengths and a
/// lookup for `N_{α,β}`.
pub struct Bracket<'a> {
    pub a: Vec<Vec<i64>>,
    pub d: Vec<i64>,
    pub roots: HashSet<Vec<i64>>,
    pub n: &'a dyn Fn(&[i64], &[i64]) -> i64,
}

impl Bracket<'_> {
    fn form(&self, x: &[i64], y: &[i64]) -> i64 {
        let k = self.a.len();
        let mut s = 0;
        for i in 0..k {
            for j in 0..k {
                s += x[i] * y[j] * self.d[i] * self.a[i][j];
            }
        }
        s / 2
    }

    fn basic(&self, x: &X, y: &X) -> Elt {
        let mut out = Elt::new();
        match (x, y) {
            (X::H(_), X::H(_)) => {}
            (X::H(i), X::E(b)) => {
                let p: i64 = (0..b.len()).map(|j| self.a[*i][j] * b[j]).sum();
                out.insert(X::E(b.clone()), p);
            }
            (X::E(b), X::H(i)) => {
                let p: i64 = (0..b.len()).map(|j| self.a[*i][j] * b[j]).sum();
                out.insert(X::E(b.clone()), -p);
            }
            (X::E(a), X::E(b)) => {
                let s: Vec<i64> = a.iter().zip(b).map(|(x, y)| x + y).collect();
                if s.iter().all(|&t| t == 0) {
                    // h_a = Σ a_i (α_i, α_i) / (a, a) h_i
                    let len = self.form(a, a);
                    for (i, &c) in a.iter().enumerate() {
                        out.insert(X::H(i), c * self.d[i] / len);
                    }
                } else if self.roots.contains(&s) {
                    out.insert(X::E(s), (self.n)(a, b));
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn bracket(&self, x: &Elt, y: &Elt) -> Elt {
        let mut out = Elt::new();
        for (bx, cx) in x {
            for (by, cy) in y {
                for (k, c) in self.basic(bx, by) {
                    *out.entry(k).or_insert(0) += cx * cy * c;
                }
            }
        }
        out.retain(|_, c| *c != 0);
        out
    }

    pub fn basis(&self) -> Vec<X> {
        let mut roots: Vec<&Vec<i64>> = self.roots.iter().collect();
        roots.sort();
        (0..self.a.len()).map(X::H).chain(roots.into_iter().map(|r| X::E(r.clone()))).collect()
    }

    /// Number of triples of distinct basis elements violating Jacobi.
    pub fn jacobi_violations(&self) -> (usize, usize) {
        let basis: Vec<Elt> = self.basis().into_iter().map(|b| Elt::from([(b, 1)])).collect();
        let n = basis.len();
        let mut bad = 0;
        let mut total = 0;
        for i in 0..n {
            for j in i + 1..n {
                let xy = self.bracket(&basis[i], &basis[j]);
                for k in j + 1..n {
                    total += 1;
                    let mut acc = self.bracket(&basis[k], &xy);
                    let yz = self.bracket(&basis[j], &basis[k]);
                    let zx = self.bracket(&basis[k], &basis[i]);
                    for (e, c) in self.bracket(&basis[i], &yz).into_iter().chain(self.bracket(&basis[j], &zx)) {
                        *acc.entry(e).or_insert(0) += c;
                    }
                    if acc.values().any(|&c| c != 0) {
                        bad += 1;
                    }
                }
            }
        }
        (bad, total)
    }
}
