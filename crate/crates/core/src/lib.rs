//! Tangent spaces of moduli schemes of multiplicity-free affine varieties.
//!
//! Layers, bottom up: [`rootsys`] and [`chevalley`] for the reductive group,
//! [`exactlin`] and [`cones`] for lattices, cones and monoids, [`sigmabar`]
//! for the finite set `Σ̄_G`, [`tangent`] for the conditions defining `Φ(Γ)`,
//! and [`moduli`] for what is built on top of `Φ(Γ)`.
//!
//! Weights are written in fundamental-weight coordinates followed by torus
//! coordinates, so entry `i < rank` of a weight `λ` is `⟨α_i^∨, λ⟩`.
//!
//! Everything past [`rootsys`] is generic over an exact integer type; the
//! aliases below fix it to `BigInt`.

pub mod chevalley;
pub mod cones;
pub mod exactlin;
pub mod moduli;
pub mod rootsys;
pub mod scalar;
pub mod sigmabar;
pub mod tangent;

use num_bigint::BigInt;

pub type Rational = scalar::Rat<BigInt>;
pub type Lattice = exactlin::SubLattice<BigInt>;
pub type Cone = cones::ConeRep<BigInt>;
pub type Monoid = cones::MonoidSpec<BigInt>;
pub type Functional = exactlin::DualVector<BigInt>;
