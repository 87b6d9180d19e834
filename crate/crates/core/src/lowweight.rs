//! Closed forms and criteria for codewords of weight 2 and 3.

use std::sync::Arc;

use num_bigint::BigUint;
use num_integer::Integer;
use num_traits::Zero;

use crate::arith::{checked_pow, inv_mod, is_prime, prime_factors};
use crate::cyclic::{Codeword, CyclicCode};
use crate::error::{Error, Result};
use crate::fpoly::{cyclotomic_coset, u_gcd, FpPolynomial};
use crate::gf::Field;

fn gcd(a: u64, b: u64) -> u64 {
    a.gcd(&b)
}

/// `D(t_1, ..., t_s) = gcd(q - 1, t_1 (p - 1), t_2 - t_1, ..., t_s - t_1)`,
/// with `t_1` the first canonical exponent.
pub fn d_value(code: &CyclicCode) -> u64 {
    let f = code.field();
    let n = f.order();
    let exps = code.exponents();
    let t1 = exps[0];
    let mut d = gcd(n, t1 * (f.p() - 1));
    for &t in &exps[1..] {
        d = gcd(d, t.abs_diff(t1));
    }
    d
}

fn exact_div(num: BigUint, den: u64, what: &str) -> Result<BigUint> {
    let (quot, rem) = num.div_rem(&BigUint::from(den));
    if !rem.is_zero() {
        return Err(Error::NonIntegral { what: what.into(), numerator: num.to_string(), denominator: den.to_string() });
    }
    Ok(quot)
}

/// `A_2 = (p - 1)(q - 1)(D - 1) / 2`.
pub fn a2_count(code: &CyclicCode) -> Result<BigUint> {
    let f = code.field();
    let num = BigUint::from(f.p() - 1) * f.order() * (d_value(code) - 1);
    exact_div(num, 2, "A_2")
}

/// Inputs of the weight-3 lower bound over `K_g(t)`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Weight3Params {
    pub p: u64,
    pub m: u32,
    pub g: u32,
    pub t: u64,
    pub exponents: Vec<u64>,
}

impl Weight3Params {
    pub fn new(p: u64, m: u32, g: u32, t: u64, exponents: &[u64]) -> Self {
        Weight3Params { p, m, g, t, exponents: exponents.to_vec() }
    }

    /// `p^g - 1`.
    fn sub_order(&self) -> u64 {
        self.p.pow(self.g) - 1
    }

    /// Checks every precondition; returns `t^{-1} mod (p^g - 1)`.
    pub fn validate(&self) -> Result<u64> {
        let bad = |msg: String| Err(Error::Weight3Params(msg));
        if !is_prime(self.p) || self.p == 2 {
            return bad(format!("p = {} must be an odd prime", self.p));
        }
        if self.g == 0 || self.m == 0 || !self.m.is_multiple_of(self.g) {
            return bad(format!("g = {} must be a positive divisor of m = {}", self.g, self.m));
        }
        let q = match checked_pow(self.p, self.m) {
            Some(q) if q <= crate::gf::MAX_ORDER => q,
            _ => return Err(Error::FieldTooLarge { p: self.p, m: self.m }),
        };
        if self.exponents.is_empty() {
            return Err(Error::EmptyExponents);
        }
        if self.g == self.m && self.exponents.len() > 1 {
            return bad("with g = m the exponents cannot share K_g(t) while lying in distinct K_m cosets".into());
        }
        let k = self.sub_order();
        if self.t.is_multiple_of(k) {
            return bad(format!("t = {} is 0 modulo p^g - 1 = {k}", self.t));
        }
        let Some(t_inv) = inv_mod(self.t % k, k) else {
            return bad(format!("t = {} is not invertible modulo p^g - 1 = {k}", self.t));
        };
        let kg = cyclotomic_coset(self.p, self.g, self.t % k);
        for &e in &self.exponents {
            if !kg.contains(e) {
                return bad(format!("exponent {e} is not in K_{}({})", self.g, self.t));
            }
        }
        let n = q - 1;
        let mut reps: Vec<(u64, u64)> = Vec::new();
        for &e in &self.exponents {
            let rep = cyclotomic_coset(self.p, self.m, e % n).representative();
            if let Some(&(first, _)) = reps.iter().find(|(_, r)| *r == rep) {
                return Err(Error::SameCoset { first, second: e, p: self.p });
            }
            reps.push((e, rep));
        }
        Ok(t_inv)
    }

    /// `(p - 1)^2 (p^g - 2) - (p - 2)(3p - 5)`: the number of valid
    /// `(a, b, i, j)` tuples.
    pub fn tuple_count(&self) -> u64 {
        let p = self.p;
        (p - 1) * (p - 1) * (p.pow(self.g) - 2) - (p - 2) * (3 * p - 5)
    }
}

/// `A_3 >= (p - 1)(p^m - 1)/6 · [(p - 1)^2 (p^g - 2) - (p - 2)(3p - 5)]`.
pub fn a3_lower_bound(params: &Weight3Params) -> Result<BigUint> {
    params.validate()?;
    let q = params.p.pow(params.m);
    let num = BigUint::from(params.p - 1) * (q - 1) * params.tuple_count();
    exact_div(num, 6, "weight-3 lower bound")
}

/// One weight-3 codeword `1 + a x^{u i t^{-1}} + b x^{u j t^{-1}}`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Weight3Witness {
    pub a: u64,
    pub b: u64,
    pub i: u64,
    pub j: u64,
    /// Positions of the `a` and `b` terms.
    pub positions: (u64, u64),
    pub codeword: Codeword,
}

/// All witnesses of the weight-3 construction.
#[derive(Debug, Clone)]
pub struct Weight3Witnesses {
    /// Valid `(a, b, i, j)` tuples before merging `(a,b,i,j)` with `(b,a,j,i)`.
    pub tuple_count: usize,
    pub witnesses: Vec<Weight3Witness>,
}

/// Enumerates `a, b ∈ GF(p)*`, `1 <= i <= p^g - 2`, solves
/// `1 + a β^i + b β^j = 0` for `j` with `β = γ^u`, `u = (p^m - 1)/(p^g - 1)`,
/// and drops tuples where `j` is undefined, zero, or equal to `i`.
/// Every resulting codeword is checked for membership in `C_{t_1,...,t_s}`.
/// Uses the default field GF(p^m).
pub fn weight3_witnesses(params: &Weight3Params) -> Result<Weight3Witnesses> {
    params.validate()?;
    weight3_witnesses_in(&Arc::new(Field::new(params.p, params.m)?), params)
}

/// [`weight3_witnesses`] over a caller-chosen field (the witnesses depend on γ).
pub fn weight3_witnesses_in(field: &Arc<Field>, params: &Weight3Params) -> Result<Weight3Witnesses> {
    let t_inv = params.validate()?;
    if field.p() != params.p || field.m() != params.m {
        return Err(Error::MixedFields);
    }
    let code = CyclicCode::new(field.clone(), &params.exponents)?;
    let n = field.order();
    let k = params.sub_order();
    let u = n / k;
    let p = params.p;
    let mut tuples = Vec::new();
    for a in 1..p {
        for b in 1..p {
            let b_inv = inv_mod(b, p).expect("p prime");
            for i in 1..k {
                let beta_i = field.exp(u * i);
                // β^j = b^{-1}(-1 - a β^i)
                let rhs = field.scale(b_inv, field.neg(field.add(1, field.scale(a, beta_i))));
                if rhs == 0 {
                    continue;
                }
                let log = field.log(rhs)?;
                if log % u != 0 {
                    return Err(Error::Internal("β^j outside the subfield".into()));
                }
                let j = log / u;
                if j == 0 || j == i {
                    continue;
                }
                tuples.push((a, b, i, j));
            }
        }
    }
    let tuple_count = tuples.len();
    let mut witnesses = Vec::new();
    for &(a, b, i, j) in &tuples {
        if (b, a, j, i) < (a, b, i, j) {
            continue;
        }
        let pos_i = u * (i * t_inv % k);
        let pos_j = u * (j * t_inv % k);
        let mut coeffs = vec![0u64; n as usize];
        coeffs[0] = 1;
        coeffs[pos_i as usize] = a;
        coeffs[pos_j as usize] = b;
        let codeword = Codeword::new(coeffs);
        if codeword.weight() != 3 || !code.contains(&codeword)? {
            return Err(Error::Internal(format!("witness ({a},{b},{i},{j}) is not a weight-3 codeword")));
        }
        witnesses.push(Weight3Witness { a, b, i, j, positions: (pos_i, pos_j), codeword });
    }
    Ok(Weight3Witnesses { tuple_count, witnesses })
}

fn check_c1t(field: &Field, t: u64) -> Result<()> {
    if field.p() != 2 {
        return Err(Error::NotBinary(field.p()));
    }
    if cyclotomic_coset(2, field.m(), t % field.order()).contains(1) {
        return Err(Error::TInCosetOfOne { t });
    }
    Ok(())
}

/// `gcd(U_t(x), x^q + x)` for the binary code `C_{1,t}`.
///
/// `t` is taken modulo `q - 1` (0 as `q - 1`): the roots of `U_t` in `F_q`
/// only depend on that class, and `x^q + x` is squarefree.
pub fn c1t_gcd(field: &Field, t: u64) -> Result<FpPolynomial> {
    check_c1t(field, t)?;
    let n = field.order();
    let t = match t % n {
        0 => n,
        r => r,
    };
    u_gcd(t, field.q())
}

/// Whether `C_{1,t}` has weight-3 codewords: `gcd(U_t, x^q + x) != x(x + 1)`.
pub fn has_weight3_c1t(field: &Field, t: u64) -> Result<bool> {
    Ok(c1t_gcd(field, t)? != FpPolynomial::new(2, [0, 1, 1]))
}

/// Sufficient condition for `d > 3` in `C_{1,t}`: `t < r + 3` for every
/// prime factor `r` of `m`.
pub fn easy_no_weight3(m: u64, t: u64) -> bool {
    prime_factors(m).into_iter().all(|r| t < r + 3)
}

/// `A_3 = (q - 1)(deg gcd(U_t, x^q + x) - 2) / 6` for `C_{1,t}`.
pub fn a3_c1t(field: &Field, t: u64) -> Result<BigUint> {
    let g = c1t_gcd(field, t)?;
    let deg = g.deg().unwrap_or(0) as u64;
    if deg < 2 {
        return Err(Error::Internal(format!("gcd(U_t, x^q + x) = {g} lacks x(x + 1)")));
    }
    exact_div(BigUint::from(field.order()) * (deg - 2), 6, "A_3")
}
