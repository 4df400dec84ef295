//! Acceptance suite: one PASS/FAIL line per criterion, with time limits.
//! Exits nonzero if any criterion fails.

mod common;
mod oracle;

use std::collections::{BTreeMap, BTreeSet};
use std::time::{Duration, Instant};

use mfmoduli::chevalley::{SignConvention, StructureConstants};
use mfmoduli::cones::{hilbert_basis, is_saturated, monoid_membership, saturate, ConeRep, MonoidSpec};
use mfmoduli::exactlin::{rank, SubLattice};
use mfmoduli::moduli::losev_bar;
use mfmoduli::rootsys::{RootSystem, WeightVec};
use mfmoduli::scalar::{lift, narrow};
use mfmoduli::sigmabar::{classify_sigma, enumerate_sigmabar};
use mfmoduli::tangent::compute_phi;
use num_bigint::BigInt;

use common::{random_pointed_cone, random_saturated_monoids, rng, root_system, SEED};

const RANDOM_MONOIDS: usize = 1000;
const RANDOM_CONES: usize = 100;

type Check = Result<String, String>;

fn ensure(ok: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if ok {
        Ok(())
    } else {
        Err(msg())
    }
}

fn run(name: &str, limit: Duration, f: impl FnOnce() -> Check) -> bool {
    let start = Instant::now();
    let out = f();
    let took = start.elapsed();
    let (ok, detail) = match out {
        Ok(d) if took <= limit => (true, d),
        Ok(d) => (false, format!("{d}; over the time limit")),
        Err(e) => (false, e),
    };
    println!(
        "{} {name} [{:.3}s, limit {}s] {detail}",
        if ok { "PASS" } else { "FAIL" },
        took.as_secs_f64(),
        limit.as_secs()
    );
    ok
}

fn spherical_root_catalogue() -> Check {
    let mut count = 0;
    for (kind, r) in [('A', 4), ('B', 4), ('C', 4), ('D', 4), ('F', 4), ('G', 2)] {
        let rs = root_system(&format!("{kind}{r}"));
        ensure(rs.cartan() == oracle::cartan(kind, r).as_slice(), || {
            format!("{kind}{r}: Cartan matrix differs")
        })?;
        let expected = oracle::table_expected(kind, r);
        let got: BTreeMap<Vec<i64>, (u8, BTreeSet<usize>)> = enumerate_sigmabar(&rs)
            .into_iter()
            .map(|s| (s.coeffs, (s.row, s.pi_sigma)))
            .collect();
        if got != expected {
            let missing: Vec<_> = expected.iter().filter(|(k, v)| got.get(*k) != Some(v)).collect();
            let extra: Vec<_> = got.iter().filter(|(k, v)| expected.get(*k) != Some(v)).collect();
            return Err(format!("{kind}{r}: missing or wrong {missing:?}; unexpected {extra:?}"));
        }
        count += got.len();
    }
    Ok(format!("{count} elements with Π_σ over A4 B4 C4 D4 F4 G2"))
}

fn sign_tables_and_jacobi() -> Check {
    let mut cells = 0;
    for (kind, r) in [('A', 3), ('B', 3), ('C', 3), ('D', 4)] {
        let rs = root_system(&format!("{kind}{r}"));
        let table = StructureConstants::build(&rs).map_err(|e| e.to_string())?;
        let roots = oracle::all_roots(&oracle::cartan(kind, r));
        let labels = oracle::labels(kind, r);
        let distinct: BTreeSet<&Vec<i64>> = labels.iter().map(|(_, c)| c).collect();
        ensure(
            distinct.len() == labels.len() && labels.len() * 2 == roots.len(),
            || format!("{kind}{r}: labels do not enumerate the positive roots"),
        )?;
        for (x, cx) in &labels {
            ensure(roots.contains(cx), || format!("{kind}{r}: {x:?} is not a root"))?;
            for (y, cy) in &labels {
                if !oracle::is_sum_root(&roots, cx, cy) {
                    continue;
                }
                let want = oracle::table_sign(kind, r, *x, *y)?;
                let got = table.constant(cx, cy).unwrap_or(0);
                ensure(got.signum() == want, || {
                    format!("{kind}{r}: N({x:?},{y:?}) = {got}, table sign {want}")
                })?;
                cells += 1;
            }
        }
    }
    let mut triples = 0;
    for (kind, r) in [('A', 3), ('B', 3), ('C', 3), ('D', 4), ('G', 2), ('F', 4)] {
        let rs = root_system(&format!("{kind}{r}"));
        let table = StructureConstants::build(&rs).map_err(|e| e.to_string())?;
        let report = table.verify_jacobi();
        ensure(report.violations == 0, || {
            format!("{kind}{r}: {} Jacobi violations, e.g. {:?}", report.violations, report.witnesses)
        })?;
        let n = |a: &[i64], b: &[i64]| table.constant(a, b).unwrap_or(0);
        let own = oracle::Bracket {
            a: oracle::cartan(kind, r),
            d: oracle::lengths(kind, r),
            roots: oracle::all_roots(&oracle::cartan(kind, r)),
            n: &n,
        };
        let (bad, total) = own.jacobi_violations();
        ensure(bad == 0 && total == report.triples_checked, || {
            format!("{kind}{r}: independent sweep found {bad} of {total} triples failing")
        })?;
        triples += total;
    }
    Ok(format!("{cells} sign cells agree; {triples} triples satisfy Jacobi"))
}

fn magnitudes() -> Check {
    let mut pairs = 0;
    let types: &[(char, usize)] = &[
        ('A', 1),
        ('A', 2),
        ('A', 3),
        ('A', 4),
        ('B', 2),
        ('B', 3),
        ('B', 4),
        ('C', 3),
        ('C', 4),
        ('D', 4),
        ('D', 5),
        ('F', 4),
        ('G', 2),
    ];
    for &(kind, r) in types {
        let rs = root_system(&format!("{kind}{r}"));
        let roots = oracle::all_roots(&oracle::cartan(kind, r));
        for conv in [SignConvention::Tables, SignConvention::Extraspecial] {
            let table = StructureConstants::build_with(&rs, conv).map_err(|e| e.to_string())?;
            let lib_roots: BTreeSet<&Vec<i64>> = table.roots().iter().collect();
            ensure(lib_roots.len() == roots.len() && lib_roots.iter().all(|c| roots.contains(*c)), || {
                format!("{kind}{r}: root set differs")
            })?;
            for a in &roots {
                for b in &roots {
                    let v = table.constant(a, b).unwrap_or(0);
                    if oracle::is_sum_root(&roots, a, b) {
                        let p = oracle::string_p(&roots, a, b);
                        ensure(v.abs() == p + 1, || {
                            format!("{kind}{r} {conv:?}: |N({a:?},{b:?})| = {}, p + 1 = {}", v.abs(), p + 1)
                        })?;
                        pairs += 1;
                    } else {
                        ensure(v == 0, || format!("{kind}{r}: N({a:?},{b:?}) = {v} off the root set"))?;
                    }
                }
            }
        }
    }
    Ok(format!("{pairs} bracketable pairs over {} types, both sign conventions", types.len()))
}

fn monoid(spec: &str, gens: &[&[i64]]) -> MonoidSpec {
    let rs = root_system(spec);
    let g: Vec<WeightVec> = gens.iter().map(|v| WeightVec(v.to_vec())).collect();
    MonoidSpec::build(&rs, &g).unwrap()
}

fn phi_of(m: &MonoidSpec) -> Result<Vec<Vec<i64>>, String> {
    let r = compute_phi(m).map_err(|e| e.to_string())?;
    ensure(r.dimension == r.phi.len(), || "dimension differs from |Φ|".into())?;
    Ok(r.phi.into_iter().map(|c| c.coeffs).collect())
}

fn hand_oracles() -> bool {
    let one = Duration::from_secs(1);
    let cases: [(&str, &str, &[&[i64]], Vec<Vec<i64>>); 4] = [
        ("A1-double", "A1", &[&[2]], vec![vec![2]]),
        ("A1-fundamental", "A1", &[&[1]], vec![]),
        ("A1-torus", "A1+T1", &[&[1, 1], &[1, -1]], vec![vec![1]]),
        ("B2-first-fundamental", "B2", &[&[1, 0]], vec![vec![2, 2]]),
    ];
    let mut ok = true;
    for (name, spec, gens, want) in cases {
        ok &= run(&format!("hand-oracle-{name}"), one, || {
            let m = monoid(spec, gens);
            let got = phi_of(&m)?;
            ensure(got == want, || format!("Φ = {got:?}, expected {want:?}"))?;
            if spec == "B2" {
                let l = losev_bar(&m, &[1, 1]).map_err(|e| e.to_string())?;
                ensure(l.sigma_bar == vec![2, 2] && l.case == Some(3), || {
                    format!("doubling rule gave {l:?}")
                })?;
            }
            Ok(format!("Φ = {got:?}"))
        });
    }
    ok
}

fn weight(rs: &RootSystem, coeffs: &[i64]) -> Vec<BigInt> {
    lift(&rs.root_weight(coeffs).0)
}

fn proportional(a: &[i64], b: &[i64]) -> bool {
    rank(&[a.to_vec(), b.to_vec()]) < 2
}

fn phi_properties(monoids: &[MonoidSpec]) -> Check {
    let mut elements = 0;
    for (idx, m) in monoids.iter().enumerate() {
        let rs = m.root_system();
        let ctx = || format!("monoid #{idx} {} {:?}", rs.spec(), m.generators());
        let phi = phi_of(m)?;
        // the same computation over machine integers
        let small: MonoidSpec<i128> = MonoidSpec::build(rs, m.generators()).map_err(|e| e.to_string())?;
        let phi_small: Vec<Vec<i64>> = compute_phi(&small)
            .map_err(|e| e.to_string())?
            .phi
            .into_iter()
            .map(|c| c.coeffs)
            .collect();
        ensure(phi == phi_small, || format!("{}: BigInt and i128 disagree", ctx()))?;
        let weights: Vec<Vec<BigInt>> = phi.iter().map(|s| weight(rs, s)).collect();
        let span = if phi.is_empty() {
            None
        } else {
            Some(SubLattice::from_generators(rs.dim(), &weights).map_err(|e| e.to_string())?)
        };
        for (i, s) in phi.iter().enumerate() {
            elements += 1;
            ensure(s.iter().any(|&c| c != 0), || format!("{}: 0 ∈ Φ", ctx()))?;
            ensure(classify_sigma(rs, s).is_some(), || format!("{}: {s:?} ∉ Σ̄", ctx()))?;
            ensure(m.lattice().is_member(&weights[i]).unwrap(), || {
                format!("{}: {s:?} ∉ ZΓ", ctx())
            })?;
            for t in &phi[i + 1..] {
                ensure(!proportional(s, t), || format!("{}: {s:?} and {t:?} proportional", ctx()))?;
            }
            let span = span.as_ref().expect("nonempty");
            ensure(span.primitive_part(&weights[i]).unwrap() == weights[i], || {
                format!("{}: {s:?} not primitive in ZΦ", ctx())
            })?;
            let rest: Vec<Vec<BigInt>> = (0..phi.len()).filter(|&j| j != i).map(|j| weights[j].clone()).collect();
            if !rest.is_empty() {
                let inside = monoid_membership(rs.dim(), &rest, &weights[i]).map_err(|e| e.to_string())?;
                ensure(!inside, || format!("{}: {s:?} in the monoid of the rest", ctx()))?;
            }
            let support: Vec<usize> = (0..s.len()).filter(|&k| s[k] != 0).collect();
            // 2α ∈ Φ with α ∈ ZΓ forces α primitive in ZΓ
            if let [a] = support[..] {
                if s[a] == 2 {
                    let mut alpha = vec![0; s.len()];
                    alpha[a] = 1;
                    let w = weight(rs, &alpha);
                    if m.lattice().is_member(&w).unwrap() {
                        ensure(m.lattice().primitive_part(&w).unwrap() == w, || {
                            format!("{}: 2α ∈ Φ but α not primitive", ctx())
                        })?;
                    }
                }
            }
            // α + β ∈ Φ with α ⊥ β keeps α and β out of Φ
            if let [a, b] = support[..] {
                if s[a] == 1 && s[b] == 1 && rs.orthogonal(a, b) {
                    for k in [a, b] {
                        let mut e = vec![0; s.len()];
                        e[k] = 1;
                        ensure(!phi.contains(&e), || format!("{}: {s:?} and {e:?} both in Φ", ctx()))?;
                    }
                }
            }
        }
    }
    Ok(format!("{} monoids, {elements} elements of Φ checked", monoids.len()))
}

fn cone_engine(monoids: &[MonoidSpec]) -> Check {
    let mut r = rng(SEED ^ 0xc0e5);
    for n in 0..RANDOM_CONES {
        let (d, gens) = random_pointed_cone::<BigInt>(&mut r);
        let c = ConeRep::from_generators(d, &gens).map_err(|e| e.to_string())?;
        let dd = c.dual().dual();
        ensure(dd.contains_cone(&c) && c.contains_cone(&dd), || {
            format!("cone #{n} {gens:?}: double dual differs")
        })?;
        let facets_ok = c
            .facets()
            .iter()
            .all(|f| gens.iter().all(|g| f.iter().zip(g).map(|(x, y)| x * y).sum::<BigInt>() >= BigInt::from(0)));
        ensure(facets_ok, || format!("cone #{n}: a facet cuts a generator"))?;
        let h = saturate(d, &gens).map_err(|e| e.to_string())?;
        let h2 = saturate(d, &h).map_err(|e| e.to_string())?;
        let mut hs = h.clone();
        hs.sort();
        let mut h2s = h2;
        h2s.sort();
        ensure(hs == h2s, || format!("cone #{n}: saturate is not idempotent"))?;
        ensure(is_saturated(d, &h).map_err(|e| e.to_string())?, || {
            format!("cone #{n}: saturation reported unsaturated")
        })?;
        ensure(hilbert_basis(d, &h).map_err(|e| e.to_string())?.len() == h.len(), || {
            format!("cone #{n}: Hilbert basis of the saturation changed size")
        })?;
    }
    let mut rays = 0;
    for (idx, m) in monoids.iter().enumerate() {
        let hb = m.hilbert_basis().ok_or("criterion monoid not pointed")?;
        for rho in m.k1() {
            let hit = hb.iter().any(|h| {
                let w = WeightVec(narrow(h).expect("small"));
                m.pair(rho, &w).unwrap() == Some(BigInt::from(1))
            });
            ensure(hit, || format!("monoid #{idx}: no Hilbert basis element pairs to 1 with {rho:?}"))?;
            rays += 1;
        }
    }
    Ok(format!("{RANDOM_CONES} cones; {rays} rays of 𝒦 hit value one"))
}

fn doubling_rule(monoids: &[MonoidSpec]) -> Check {
    let mut checked = 0;
    for (idx, m) in monoids.iter().enumerate() {
        let rs = m.root_system();
        let phi = phi_of(m)?;
        // every σ with Z+σ ∩ Φ ≠ ∅ is the primitive part of some φ ∈ Φ
        let mut sigmas: BTreeSet<Vec<i64>> = BTreeSet::new();
        for s in &phi {
            let w = weight(rs, s);
            let p = m.lattice().primitive_part(&w).map_err(|e| e.to_string())?;
            let pw = WeightVec(narrow(&p).expect("small"));
            sigmas.insert(rs.root_coeffs(&pw).map_err(|e| e.to_string())?);
        }
        for sigma in sigmas {
            let multiples: Vec<&Vec<i64>> = phi
                .iter()
                .filter(|s| {
                    let k = s.iter().zip(&sigma).find(|(_, &b)| b != 0).map(|(&a, &b)| a / b).unwrap_or(0);
                    k > 0 && s.iter().zip(&sigma).all(|(&a, &b)| a == k * b)
                })
                .collect();
            let got = losev_bar(m, &sigma).map_err(|e| e.to_string())?;
            ensure(multiples.len() == 1 && *multiples[0] == got.sigma_bar, || {
                format!(
                    "monoid #{idx} {:?}: σ = {sigma:?}, rule gives {:?}, Φ has {multiples:?}",
                    m.generators(),
                    got.sigma_bar
                )
            })?;
            checked += 1;
        }
    }
    Ok(format!("{checked} primitive σ checked"))
}

fn main() {
    let mut ok = true;
    ok &= run("spherical-root-catalogue", Duration::from_secs(1), spherical_root_catalogue);
    ok &= run("sign-tables-and-jacobi", Duration::from_secs(60), sign_tables_and_jacobi);
    ok &= run("structure-constant-magnitudes", Duration::from_secs(60), magnitudes);
    ok &= hand_oracles();

    let start = Instant::now();
    let monoids: Vec<MonoidSpec> = random_saturated_monoids(SEED, RANDOM_MONOIDS);
    let build = start.elapsed();
    ok &= run("phi-properties", Duration::from_secs(120).saturating_sub(build), || {
        phi_properties(&monoids).map(|d| format!("{d}; generation {:.3}s", build.as_secs_f64()))
    });
    ok &= run("cone-engine", Duration::from_secs(60), || cone_engine(&monoids));
    ok &= run("doubling-rule", Duration::from_secs(120), || doubling_rule(&monoids));

    if !ok {
        std::process::exit(1);
    }
}
