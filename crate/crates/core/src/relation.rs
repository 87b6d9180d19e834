//! Binary cyclic codes and diagonal equation systems.
//!
//! `N_w` counts the tuples `(x_1, ..., x_w) ∈ F_q^w` with
//! `x_1^{t_j} + ... + x_w^{t_j} = 0` for every exponent `t_j`. Grouping the
//! solutions by their repetition pattern `v ∈ S(w)` gives
//!
//! ```text
//! N_w = Σ_v (A_{#θ} + A_{#θ-1}) · #θ!/P(θ)! · C(q - #θ, #ε) · #ε!/P(ε)! · (w choose v)
//! ```
//!
//! with `θ = θ(v)`, `ε = ε(v)`. The all-ones pattern is the only one with
//! `#θ = w`, so the relation can be solved for `A_w` one weight at a time.

use std::sync::Arc;

use num_bigint::{BigInt, BigUint, Sign};
use num_integer::Integer;
use num_traits::{One, Zero};
use rayon::prelude::*;

use crate::arith::{binomial, factorial};
use crate::cyclic::{Budget, WeightPrefix};
use crate::error::{Error, Result};
use crate::gf::Field;
use crate::partitions::{assembly, multinomial, partition_factorial, partition_of, theta_epsilon, PartitionTuple};

/// The system `x_1^{t_j} + ... + x_w^{t_j} = 0`, `j = 1..s`, over a binary field.
#[derive(Debug, Clone)]
pub struct DiagonalSystem {
    field: Arc<Field>,
    exponents: Vec<u64>,
    arity: usize,
}

impl DiagonalSystem {
    /// Exponents are reduced modulo `q - 1` but otherwise kept as given.
    pub fn new(field: Arc<Field>, exponents: &[u64], arity: usize) -> Result<Self> {
        if field.p() != 2 {
            return Err(Error::NotBinary(field.p()));
        }
        if exponents.is_empty() {
            return Err(Error::EmptyExponents);
        }
        if arity == 0 {
            return Err(Error::ZeroArity);
        }
        let n = field.order();
        let exponents = exponents.iter().map(|&t| t % n).collect();
        Ok(DiagonalSystem { field, exponents, arity })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn arity(&self) -> usize {
        self.arity
    }
}

/// `N_2, ..., N_W`, indexed by arity.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct NwSequence {
    values: Vec<BigUint>,
}

impl NwSequence {
    /// `values[0]` is `N_2`.
    pub fn from_arity2(values: Vec<BigUint>) -> Self {
        NwSequence { values }
    }

    pub fn from_u64s(values: &[u64]) -> Self {
        Self::from_arity2(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// Largest arity `W` present (1 when empty).
    pub fn max_arity(&self) -> usize {
        self.values.len() + 1
    }

    /// `N_w`; `N_1 = 1` always.
    pub fn get(&self, w: usize) -> Option<BigUint> {
        match w {
            0 => None,
            1 => Some(BigUint::one()),
            w => self.values.get(w - 2).cloned(),
        }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }
}

/// Coefficient of `(A_{#θ} + A_{#θ-1})` in the term for pattern `v`.
fn pattern_coefficient(q: u64, w: u64, v: &PartitionTuple) -> BigUint {
    let (theta, eps) = theta_epsilon(v);
    let (nt, ne) = (theta.len() as u64, eps.len() as u64);
    let theta_arrangements = factorial(nt) / partition_factorial(&partition_of(theta.parts()));
    let eps_arrangements = factorial(ne) / partition_factorial(&partition_of(eps.parts()));
    let eps_values = if nt > q { BigUint::zero() } else { binomial(q - nt, ne) };
    theta_arrangements * eps_values * eps_arrangements * multinomial(w, v).expect("v ∈ S(w)")
}

fn check_prefix(a: &WeightPrefix, w: usize) -> Result<()> {
    if a.max_weight() < w {
        return Err(Error::PrefixTooShort { have: a.max_weight(), need: w });
    }
    Ok(())
}

/// `(v, N_w(v))` for every `v ∈ S(w)`.
///
/// Parts are not capped at `n = q - 1`: the cap changes nothing for
/// `w <= n`, and for `w > n` only the uncapped sum counts correctly (a value
/// may repeat more than `n` times).
pub fn nw_terms(q: u64, a: &WeightPrefix, w: usize) -> Result<Vec<(PartitionTuple, BigUint)>> {
    if w == 0 {
        return Err(Error::ZeroArity);
    }
    check_prefix(a, w)?;
    Ok(assembly(w as u64, w as u64)
        .into_iter()
        .map(|v| {
            let nt = theta_epsilon(&v).0.len() as i64;
            let weights = a.get(nt).expect("nt <= w") + a.get(nt - 1).expect("nt - 1 >= -1");
            let term = weights * pattern_coefficient(q, w as u64, &v);
            (v, term)
        })
        .collect())
}

/// `N_w` from `A_0, ..., A_w` for a binary cyclic code of length `q - 1`.
pub fn nw_from_weights(q: u64, a: &WeightPrefix, w: usize) -> Result<BigUint> {
    Ok(nw_terms(q, a, w)?.into_iter().map(|(_, t)| t).sum())
}

/// Recovers `A_0, ..., A_W` from `N_2, ..., N_W`, seeded with `A_0 = 1`,
/// `A_1 = 0`.
pub fn weights_from_nw(q: u64, n: &NwSequence) -> Result<WeightPrefix> {
    let max = n.max_arity();
    let mut a: Vec<BigUint> = vec![BigUint::one(), BigUint::zero()];
    for w in 2..=max {
        let nw = BigInt::from(n.get(w).expect("w <= max arity"));
        // A_w placeholder so the prefix reaches w; its term is excluded below
        let mut with_placeholder = a.clone();
        with_placeholder.push(BigUint::zero());
        let prefix = WeightPrefix::new(with_placeholder)?;
        let rest: BigUint =
            nw_terms(q, &prefix, w)?.into_iter().filter(|(v, _)| !v.is_all_ones()).map(|(_, t)| t).sum();
        let diff = nw - BigInt::from(rest);
        let wf = BigInt::from(factorial(w as u64));
        let (quot, rem) = diff.div_rem(&wf);
        if !rem.is_zero() {
            return Err(Error::NonIntegral {
                what: format!("A_{w} + A_{}", w - 1),
                numerator: diff.to_string(),
                denominator: wf.to_string(),
            });
        }
        let aw = quot - BigInt::from(a[w - 1].clone());
        match aw.sign() {
            Sign::Minus => return Err(Error::NegativeWeight { w, value: aw.to_string() }),
            _ => a.push(aw.to_biguint().expect("nonnegative")),
        }
    }
    a.truncate(max + 1);
    WeightPrefix::new(a)
}

/// Tuples enumerated by [`diagonal_count_bruteforce`]: `q^{w-1}`.
pub fn diagonal_cost(sys: &DiagonalSystem) -> BigUint {
    BigUint::from(sys.field.q()).pow(sys.arity as u32 - 1)
}

/// Counts solutions of the system by enumerating the first `w - 1`
/// variables; the last variable ranges over the preimages of the required
/// value of `x^{t_1}`, and the remaining equations are checked directly.
///
/// Powers use exponent classes modulo `q - 1` with `0 ↦ 0`, so exponent 0
/// acts as `x^{q-1}`.
pub fn diagonal_count_bruteforce(sys: &DiagonalSystem, budget: Budget) -> Result<BigUint> {
    budget.check(&diagonal_cost(sys))?;
    let f = &*sys.field;
    let q = f.q() as usize;
    let n = f.order();
    let s = sys.exponents.len();
    let power = |x: u64, t: u64| if x == 0 { 0 } else { f.pow(x, if t == 0 { n } else { t }) };
    // powers[x * s + j] = x^{t_j}
    let powers: Vec<u64> = (0..q as u64).flat_map(|x| sys.exponents.iter().map(move |&t| power(x, t))).collect();
    let mut preimages: Vec<Vec<u32>> = vec![Vec::new(); q];
    for x in 0..q {
        preimages[powers[x * s] as usize].push(x as u32);
    }
    let ctx = DiagonalKernel { s, q, depth: sys.arity - 1, powers: &powers, preimages: &preimages };

    let total: u64 = if ctx.depth == 0 {
        ctx.close(&vec![0u64; s])
    } else {
        (0..q)
            .into_par_iter()
            .map(|x0| {
                let mut stack = vec![0u64; (ctx.depth + 1) * s];
                stack[s..2 * s].copy_from_slice(&powers[x0 * s..(x0 + 1) * s]);
                ctx.descend(1, &mut stack)
            })
            .sum()
    };
    Ok(BigUint::from(total))
}

struct DiagonalKernel<'a> {
    s: usize,
    q: usize,
    depth: usize,
    powers: &'a [u64],
    preimages: &'a [Vec<u32>],
}

impl DiagonalKernel<'_> {
    fn descend(&self, d: usize, stack: &mut [u64]) -> u64 {
        let s = self.s;
        if d == self.depth {
            return self.close(&stack[d * s..(d + 1) * s]);
        }
        let mut count = 0;
        for x in 0..self.q {
            let (head, tail) = stack.split_at_mut((d + 1) * s);
            let cur = &head[d * s..];
            for ((slot, &a), &b) in tail[..s].iter_mut().zip(cur).zip(&self.powers[x * s..(x + 1) * s]) {
                *slot = a ^ b;
            }
            count += self.descend(d + 1, stack);
        }
        count
    }

    /// Number of last variables completing the partial sums to zero.
    fn close(&self, sums: &[u64]) -> u64 {
        self.preimages[sums[0] as usize]
            .iter()
            .filter(|&&x| {
                let row = &self.powers[x as usize * self.s..(x as usize + 1) * self.s];
                row[1..].iter().zip(&sums[1..]).all(|(a, b)| a == b)
            })
            .count() as u64
    }
}

fn check_family(f: u64, k: u64) -> Result<u64> {
    if f == 0 || k == 0 {
        return Err(Error::FamilyParams);
    }
    let modulus = 2 * f + 1;
    if k.gcd(&modulus) != 1 {
        return Err(Error::FamilyGcd { k, modulus });
    }
    Ok(modulus)
}

/// `q` for the family: `2^{2f+1}`.
pub fn family_q(f: u64) -> BigUint {
    BigUint::one() << (2 * f + 1)
}

/// Closed-form `N_w` for exponents `(1, 2^k + 1)` over `GF(2^{2f+1})`:
/// `q^{w-2} + (q-1) 2^{(w-2)(f+1)}` for even `w`,
/// `q^{w-2} + (q-1) 2^{(w-3)(f+1)+1}` for odd `w`.
pub fn family_nw(f: u64, k: u64, w: usize) -> Result<BigUint> {
    check_family(f, k)?;
    if w < 2 {
        return Err(Error::ZeroArity);
    }
    let q = family_q(f);
    let w = w as u64;
    let shift = if w.is_multiple_of(2) { (w - 2) * (f + 1) } else { (w - 3) * (f + 1) + 1 };
    Ok(q.pow(w as u32 - 2) + ((&q - 1u32) << shift))
}

/// `A_0, ..., A_6` for `C_{1, 2^k + 1}` over `GF(2^{2f+1})`:
/// zero through weight 4, then `A_5 = (q-1)(q-2)(q-8)/120` and
/// `A_6 = (q-1)(q-2)(q-6)(q-8)/720`.
pub fn family_low_weights(f: u64, k: u64) -> Result<WeightPrefix> {
    check_family(f, k)?;
    let q = BigInt::from(family_q(f));
    let a5_num = (&q - 1) * (&q - 2) * (&q - 8);
    let a6_num = (&q - 1) * (&q - 2) * (&q - 6) * (&q - 8);
    let exact = |num: BigInt, den: u32, what: &str| -> Result<BigUint> {
        let (quot, rem) = num.div_rem(&BigInt::from(den));
        if !rem.is_zero() {
            return Err(Error::NonIntegral {
                what: what.into(),
                numerator: num.to_string(),
                denominator: den.to_string(),
            });
        }
        quot.to_biguint().ok_or_else(|| Error::Internal(format!("{what} negative")))
    };
    let mut values = vec![BigUint::zero(); 7];
    values[0] = BigUint::one();
    values[5] = exact(a5_num, 120, "A_5")?;
    values[6] = exact(a6_num, 720, "A_6")?;
    WeightPrefix::new(values)
}

/// `N_2, ..., N_W` from the family closed form.
pub fn family_nw_sequence(f: u64, k: u64, max_arity: usize) -> Result<NwSequence> {
    let values = (2..=max_arity).map(|w| family_nw(f, k, w)).collect::<Result<_>>()?;
    Ok(NwSequence::from_arity2(values))
}
