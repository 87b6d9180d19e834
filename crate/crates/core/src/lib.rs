//! Low-weight codewords of cyclic codes over prime fields.
//!
//! The crate covers finite-field arithmetic ([`gf`]), polynomials over GF(p)
//! ([`fpoly`]), cyclic codes and brute-force weight distributions
//! ([`cyclic`]), closed forms for `A_2` and `A_3` ([`lowweight`]), the
//! partition combinatorics ([`partitions`]) and the relation between weight
//! distributions and solution counts of diagonal equation systems
//! ([`relation`]).

pub mod arith;
pub mod cyclic;
pub mod error;
pub mod fpoly;
pub mod gf;
pub mod lowweight;
pub mod partitions;
pub mod relation;

pub use cyclic::{
    brute_weight_distribution, min_distance_upto, weight_distribution_by_encoding, Budget, Codeword, CyclicCode,
    MinDistance, WeightPrefix,
};
pub use error::{Error, Result};
pub use fpoly::{
    coset_membership, cyclotomic_coset, minimal_polynomial, poly_gcd, pow_x_mod, u_gcd, u_poly, CyclotomicCoset,
    Degree, FpPolynomial,
};
pub use gf::{Field, FieldElement};
pub use partitions::PartitionTuple;
pub use relation::{DiagonalSystem, NwSequence};
