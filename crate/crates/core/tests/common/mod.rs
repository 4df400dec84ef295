#![allow(dead_code)]

use mfmoduli::cones::{build_monoid, saturate, ConeRep, MonoidSpec};
use mfmoduli::rootsys::{RootSystem, WeightVec};
use mfmoduli::scalar::{int, narrow, Int};
use rand::seq::SliceRandom;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

pub const SEED: u64 = 0x5eed_2024;

/// Semisimple parts of rank at most three.
pub const SEMISIMPLE: &[&str] = &[
    "A1", "A2", "A3", "B2", "B3", "C3", "G2", "A1xA1", "A1xA2", "A1xB2", "A1xG2", "A1xA1xA1",
];

pub fn rng(seed: u64) -> ChaCha8Rng {
    ChaCha8Rng::seed_from_u64(seed)
}

pub fn root_system(spec: &str) -> RootSystem {
    RootSystem::build(&spec.parse().unwrap()).unwrap()
}

/// A random dominant generator list: semisimple coordinates in `[0, 4]`,
/// torus coordinates in `[-4, 4]`, between one and five generators.
/// Zeros are drawn with extra weight; uniform draws almost never put a
/// spherical root in `ZΓ` once a torus is present.
pub fn random_generators(rng: &mut ChaCha8Rng, rs: &RootSystem) -> Vec<WeightVec> {
    let n = rng.gen_range(1..=5);
    let coord = |rng: &mut ChaCha8Rng, lo: i64| {
        if rng.gen_bool(0.4) {
            0
        } else {
            rng.gen_range(lo..=4)
        }
    };
    (0..n)
        .map(|_| {
            let mut v: Vec<i64> = (0..rs.semisimple_rank()).map(|_| coord(rng, 0)).collect();
            v.extend((0..rs.torus_rank()).map(|_| coord(rng, -4)));
            WeightVec(v)
        })
        .collect()
}

/// A random saturated monoid: draw generators, reject non-pointed cones,
/// replace the generators by the Hilbert basis of the saturation.
pub fn random_saturated_monoid<T: Int>(rng: &mut ChaCha8Rng) -> MonoidSpec<T> {
    loop {
        let base = SEMISIMPLE.choose(rng).unwrap();
        let torus = rng.gen_range(0..=2);
        let spec = if torus == 0 {
            base.to_string()
        } else {
            format!("{base}+T{torus}")
        };
        let rs = root_system(&spec);
        let gens = random_generators(rng, &rs);
        let m: MonoidSpec<T> = build_monoid(&rs, &gens).unwrap();
        if !m.is_pointed() {
            continue;
        }
        let lifted: Vec<Vec<T>> = gens.iter().map(|g| mfmoduli::scalar::lift(&g.0)).collect();
        let hb = saturate(rs.dim(), &lifted).unwrap();
        let sat: Vec<WeightVec> = hb.iter().map(|h| WeightVec(narrow(h).unwrap())).collect();
        let m: MonoidSpec<T> = build_monoid(&rs, &sat).unwrap();
        assert_eq!(m.is_saturated(), Some(true));
        return m;
    }
}

pub fn random_saturated_monoids<T: Int>(seed: u64, count: usize) -> Vec<MonoidSpec<T>> {
    let mut r = rng(seed);
    (0..count).map(|_| random_saturated_monoid(&mut r)).collect()
}

/// A random pointed cone in dimension at most five with at most eight
/// generators, entries in `[-3, 3]`.
pub fn random_pointed_cone<T: Int>(rng: &mut ChaCha8Rng) -> (usize, Vec<Vec<T>>) {
    loop {
        let d = rng.gen_range(1..=5);
        let n = rng.gen_range(1..=8);
        let gens: Vec<Vec<T>> = (0..n)
            .map(|_| (0..d).map(|_| int(rng.gen_range(-3..=3))).collect())
            .collect();
        if let Ok(c) = ConeRep::from_generators(d, &gens) {
            if c.is_pointed() && c.dimension() > 0 {
                return (d, gens);
            }
        }
    }
}
