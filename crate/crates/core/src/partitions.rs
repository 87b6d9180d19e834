//! Nondecreasing positive tuples and the exact combinatorics over them:
//! assemblies of `w`, repetition patterns of tuples, odd/even subtuples,
//! factorials and multinomials.

use std::fmt;

use num_bigint::BigUint;
use num_traits::One;

use crate::arith::factorial;
use crate::error::{Error, Result};

/// Nondecreasing tuple of positive integers.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct PartitionTuple(Vec<u64>);

impl PartitionTuple {
    /// Sorts `parts`; zero entries are dropped.
    pub fn new(mut parts: Vec<u64>) -> Self {
        parts.retain(|&a| a > 0);
        parts.sort_unstable();
        PartitionTuple(parts)
    }

    pub fn empty() -> Self {
        PartitionTuple(Vec::new())
    }

    pub fn parts(&self) -> &[u64] {
        &self.0
    }

    /// `|v|`: sum of entries.
    pub fn sum(&self) -> u64 {
        self.0.iter().sum()
    }

    /// `#v`: number of entries.
    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// True for `(1, 1, ..., 1)`.
    pub fn is_all_ones(&self) -> bool {
        self.0.iter().all(|&a| a == 1)
    }
}

impl fmt::Display for PartitionTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(","))
    }
}

/// `S(w)`: nondecreasing positive tuples summing to `w` with entries at most
/// `cap`, in lexicographic order.
pub fn assembly(w: u64, cap: u64) -> Vec<PartitionTuple> {
    fn extend(rest: u64, min: u64, cap: u64, cur: &mut Vec<u64>, out: &mut Vec<PartitionTuple>) {
        if rest == 0 {
            out.push(PartitionTuple(cur.clone()));
            return;
        }
        for part in min..=rest.min(cap) {
            // the remainder must still be expressible with parts >= part
            if rest - part != 0 && rest - part < part {
                continue;
            }
            cur.push(part);
            extend(rest - part, part, cap, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    if w > 0 {
        extend(w, 1, cap, &mut Vec::new(), &mut out);
    }
    out
}

/// `P(v)`: sorted multiplicities of the distinct values of `values`.
pub fn partition_of<T: PartialEq>(values: &[T]) -> PartitionTuple {
    let mut distinct: Vec<(&T, u64)> = Vec::new();
    for v in values {
        match distinct.iter_mut().find(|(d, _)| *d == v) {
            Some((_, count)) => *count += 1,
            None => distinct.push((v, 1)),
        }
    }
    PartitionTuple::new(distinct.into_iter().map(|(_, c)| c).collect())
}

/// `(θ(v), ε(v))`: the odd and the even entries of `v`, order preserved.
pub fn theta_epsilon(v: &PartitionTuple) -> (PartitionTuple, PartitionTuple) {
    let (odd, even): (Vec<u64>, Vec<u64>) = v.0.iter().partition(|&&a| a % 2 == 1);
    (PartitionTuple(odd), PartitionTuple(even))
}

/// `w! / (a_1! ... a_k!)`.
pub fn multinomial(w: u64, v: &PartitionTuple) -> Result<BigUint> {
    let found = v.sum();
    if found != w {
        return Err(Error::PartitionSum { expected: w, found });
    }
    Ok(factorial(w) / partition_factorial(v))
}

/// `v! = a_1! ... a_k!`; the empty product is 1.
pub fn partition_factorial(v: &PartitionTuple) -> BigUint {
    v.0.iter().fold(BigUint::one(), |acc, &a| acc * factorial(a))
}
