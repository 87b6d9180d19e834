//! Dense polynomials over a prime field GF(p), cyclotomic cosets, minimal
//! polynomials, and the weight-3 certificate polynomial `U_t(x)`.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{inv_mod, mul_mod, prime_factors};
use crate::error::{Error, Result};
use crate::gf::Field;

/// Degree of a polynomial, with `NegInfinity` for the zero polynomial.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum Degree {
    NegInfinity,
    Finite(usize),
}

impl fmt::Display for Degree {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Degree::NegInfinity => f.write_str("-inf"),
            Degree::Finite(d) => write!(f, "{d}"),
        }
    }
}

/// Polynomial over GF(p) stored as coefficients in increasing degree.
/// The highest stored coefficient is always nonzero.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct FpPolynomial {
    p: u64,
    coeffs: Vec<u64>,
}

impl FpPolynomial {
    /// Builds a polynomial, reducing every coefficient modulo `p`.
    pub fn new(p: u64, coeffs: impl IntoIterator<Item = u64>) -> Self {
        let mut poly = FpPolynomial { p, coeffs: coeffs.into_iter().map(|c| c % p).collect() };
        poly.normalize();
        poly
    }

    pub fn zero(p: u64) -> Self {
        FpPolynomial { p, coeffs: Vec::new() }
    }

    pub fn one(p: u64) -> Self {
        Self::new(p, [1])
    }

    pub fn x(p: u64) -> Self {
        Self::monomial(p, 1, 1)
    }

    /// `c * x^k`.
    pub fn monomial(p: u64, k: usize, c: u64) -> Self {
        let mut coeffs = vec![0; k + 1];
        coeffs[k] = c;
        Self::new(p, coeffs)
    }

    fn normalize(&mut self) {
        while self.coeffs.last() == Some(&0) {
            self.coeffs.pop();
        }
    }

    pub fn characteristic(&self) -> u64 {
        self.p
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.coeffs
    }

    /// Coefficient of `x^k` (zero past the degree).
    pub fn coeff(&self, k: usize) -> u64 {
        self.coeffs.get(k).copied().unwrap_or(0)
    }

    pub fn degree(&self) -> Degree {
        match self.coeffs.len() {
            0 => Degree::NegInfinity,
            n => Degree::Finite(n - 1),
        }
    }

    /// Degree as an option, `None` for zero.
    pub fn deg(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs == [1]
    }

    pub fn leading(&self) -> Option<u64> {
        self.coeffs.last().copied()
    }

    pub fn is_monic(&self) -> bool {
        self.leading() == Some(1)
    }

    /// Scales to a monic polynomial; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading() {
            None | Some(1) => self.clone(),
            Some(lead) => {
                let inv = inv_mod(lead, self.p).expect("p is prime");
                self.scale(inv)
            }
        }
    }

    pub fn scale(&self, c: u64) -> Self {
        Self::new(self.p, self.coeffs.iter().map(|&a| mul_mod(a, c, self.p)))
    }

    /// Evaluates at a point of GF(p).
    pub fn eval(&self, x: u64) -> u64 {
        self.coeffs.iter().rev().fold(0, |acc, &c| (mul_mod(acc, x, self.p) + c) % self.p)
    }

    fn check_same(&self, other: &Self) {
        assert_eq!(self.p, other.p, "polynomials over different prime fields");
    }

    /// Quotient and remainder of Euclidean division.
    pub fn div_rem(&self, divisor: &Self) -> Result<(Self, Self)> {
        if self.p != divisor.p {
            return Err(Error::MixedCharacteristic);
        }
        let dd = divisor.deg().ok_or(Error::DivisionByZero)?;
        let p = self.p;
        let lead_inv = inv_mod(divisor.coeffs[dd], p).expect("p is prime");
        let mut rem = self.coeffs.clone();
        let Some(nd) = self.deg().filter(|&nd| nd >= dd) else {
            return Ok((Self::zero(p), self.clone()));
        };
        let mut quot = vec![0; nd - dd + 1];
        for k in (dd..=nd).rev() {
            let c = rem[k];
            if c == 0 {
                continue;
            }
            let factor = mul_mod(c, lead_inv, p);
            quot[k - dd] = factor;
            for (i, &dc) in divisor.coeffs.iter().enumerate() {
                let sub = mul_mod(factor, dc, p);
                let slot = &mut rem[k - dd + i];
                *slot = (*slot + p - sub) % p;
            }
        }
        Ok((Self::new(p, quot), Self::new(p, rem)))
    }

    pub fn rem(&self, divisor: &Self) -> Result<Self> {
        self.div_rem(divisor).map(|(_, r)| r)
    }

    /// True when `divisor` divides `self` exactly.
    pub fn divisible_by(&self, divisor: &Self) -> bool {
        matches!(self.rem(divisor), Ok(r) if r.is_zero())
    }

    pub fn mul_mod(&self, other: &Self, modulus: &Self) -> Result<Self> {
        (self * other).rem(modulus)
    }

    /// `self^e mod modulus` by square-and-multiply.
    pub fn pow_mod(&self, mut e: u64, modulus: &Self) -> Result<Self> {
        if modulus.deg().unwrap_or(0) == 0 {
            return Err(Error::ConstantModulus);
        }
        let mut base = self.rem(modulus)?;
        let mut acc = Self::one(self.p).rem(modulus)?;
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul_mod(&base, modulus)?;
            }
            e >>= 1;
            if e > 0 {
                base = base.mul_mod(&base, modulus)?;
            }
        }
        Ok(acc)
    }

    /// Rabin's irreducibility test.
    pub fn is_irreducible(&self) -> bool {
        let Some(n) = self.deg() else { return false };
        if n == 0 {
            return false;
        }
        if n == 1 {
            return true;
        }
        let f = self.monic();
        let p = self.p;
        // x^(p^k) mod f for k = 0..=n
        let mut frob = vec![Self::x(p).rem(&f).expect("deg f >= 2")];
        for _ in 0..n {
            let next = frob.last().unwrap().pow_mod(p, &f).expect("deg f >= 2");
            frob.push(next);
        }
        if frob[n] != frob[0] {
            return false;
        }
        prime_factors(n as u64).into_iter().all(|r| {
            let k = n / r as usize;
            let h = &frob[k] - &Self::x(p);
            poly_gcd(&h, &f).map(|g| g.is_one()).unwrap_or(false)
        })
    }
}

impl fmt::Display for FpPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return f.write_str("0");
        }
        let mut first = true;
        for (k, &c) in self.coeffs.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match (k, c) {
                (0, c) => write!(f, "{c}")?,
                (1, 1) => f.write_str("x")?,
                (1, c) => write!(f, "{c}x")?,
                (k, 1) => write!(f, "x^{k}")?,
                (k, c) => write!(f, "{c}x^{k}")?,
            }
        }
        Ok(())
    }
}

impl Add for &FpPolynomial {
    type Output = FpPolynomial;
    fn add(self, rhs: &FpPolynomial) -> FpPolynomial {
        self.check_same(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        FpPolynomial::new(self.p, (0..n).map(|k| (self.coeff(k) + rhs.coeff(k)) % self.p))
    }
}

impl Neg for &FpPolynomial {
    type Output = FpPolynomial;
    fn neg(self) -> FpPolynomial {
        FpPolynomial::new(self.p, self.coeffs.iter().map(|&c| (self.p - c) % self.p))
    }
}

impl Sub for &FpPolynomial {
    type Output = FpPolynomial;
    fn sub(self, rhs: &FpPolynomial) -> FpPolynomial {
        self + &(-rhs)
    }
}

impl Mul for &FpPolynomial {
    type Output = FpPolynomial;
    fn mul(self, rhs: &FpPolynomial) -> FpPolynomial {
        self.check_same(rhs);
        if self.is_zero() || rhs.is_zero() {
            return FpPolynomial::zero(self.p);
        }
        let p = self.p;
        let mut out = vec![0u64; self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a == 0 {
                continue;
            }
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                out[i + j] = (out[i + j] + mul_mod(a, b, p)) % p;
            }
        }
        FpPolynomial::new(p, out)
    }
}

/// Monic greatest common divisor by Euclid's algorithm.
pub fn poly_gcd(a: &FpPolynomial, b: &FpPolynomial) -> Result<FpPolynomial> {
    if a.p != b.p {
        return Err(Error::MixedCharacteristic);
    }
    if a.is_zero() && b.is_zero() {
        return Err(Error::GcdOfZeros);
    }
    let (mut a, mut b) = (a.clone(), b.clone());
    while !b.is_zero() {
        let r = a.rem(&b)?;
        a = b;
        b = r;
    }
    Ok(a.monic())
}

/// `x^e mod f`.
pub fn pow_x_mod(e: u64, f: &FpPolynomial) -> Result<FpPolynomial> {
    if f.deg().unwrap_or(0) == 0 {
        return Err(Error::ConstantModulus);
    }
    FpPolynomial::x(f.p).pow_mod(e, f)
}

/// `U_t(x) = 1 + x^t + (1 + x)^t` over GF(2).
///
/// `(1 + x)^t` is the product of `1 + x^(2^i)` over the set bits of `t`, so
/// its coefficient at `x^k` is 1 exactly when the bits of `k` are a subset of
/// the bits of `t`.
pub fn u_poly(t: u64) -> FpPolynomial {
    let t = t as usize;
    let mut coeffs = vec![0u64; t + 1];
    for (k, c) in coeffs.iter_mut().enumerate() {
        if k & !t == 0 {
            *c = 1;
        }
    }
    coeffs[0] ^= 1;
    coeffs[t] ^= 1;
    FpPolynomial::new(2, coeffs)
}

/// `gcd(U_t(x), x^q + x)` without materializing `x^q + x`.
pub fn u_gcd(t: u64, q: u64) -> Result<FpPolynomial> {
    let u = u_poly(t);
    if u.is_one() {
        // t = 0
        return Ok(u);
    }
    if u.is_zero() {
        // t is a power of two; the gcd is x^q + x itself
        let xq_plus_x = &FpPolynomial::monomial(2, q as usize, 1) + &FpPolynomial::x(2);
        return poly_gcd(&u, &xq_plus_x);
    }
    let r = &pow_x_mod(q, &u)? + &FpPolynomial::x(2);
    poly_gcd(&u, &r)
}

/// Orbit of `t` under multiplication by `p` modulo `p^g - 1`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct CyclotomicCoset {
    p: u64,
    g: u32,
    modulus: u64,
    members: Vec<u64>,
}

impl CyclotomicCoset {
    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn g(&self) -> u32 {
        self.g
    }

    /// `p^g - 1`.
    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    /// Smallest member.
    pub fn representative(&self) -> u64 {
        self.members[0]
    }

    /// Members in increasing order.
    pub fn members(&self) -> &[u64] {
        &self.members
    }

    pub fn len(&self) -> usize {
        self.members.len()
    }

    pub fn is_empty(&self) -> bool {
        self.members.is_empty()
    }

    /// Whether `i * p^j == t (mod p^g - 1)` for some `0 <= j < g`.
    pub fn contains(&self, i: u64) -> bool {
        let t = self.representative();
        let mut x = i % self.modulus;
        for _ in 0..self.g {
            if x == t {
                return true;
            }
            x = mul_mod(x, self.p, self.modulus);
        }
        false
    }
}

/// `K_g(t)`: the p-cyclotomic coset of `t` modulo `p^g - 1`.
///
/// # Panics
/// If `g == 0` or `p^g` overflows `u64`.
pub fn cyclotomic_coset(p: u64, g: u32, t: u64) -> CyclotomicCoset {
    assert!(g >= 1, "coset modulus exponent must be positive");
    let modulus = p.checked_pow(g).expect("p^g overflows u64") - 1;
    let start = t % modulus;
    let mut members = vec![start];
    let mut x = mul_mod(start, p, modulus);
    while x != start {
        members.push(x);
        x = mul_mod(x, p, modulus);
    }
    members.sort_unstable();
    members.dedup();
    CyclotomicCoset { p, g, modulus, members }
}

/// Membership test `i ∈ K_g(t)`.
pub fn coset_membership(i: u64, coset: &CyclotomicCoset) -> bool {
    coset.contains(i)
}

/// Minimal polynomial of `γ^j` over GF(p): the product of `x - γ^k` over the
/// cyclotomic coset of `j` modulo `q - 1`.
pub fn minimal_polynomial(field: &Field, j: u64) -> Result<FpPolynomial> {
    let n = field.q() - 1;
    let coset = cyclotomic_coset(field.p(), field.m(), j % n);
    // product over GF(q), coefficients stored as field elements
    let mut prod: Vec<u64> = vec![field.one()];
    for &k in coset.members() {
        let root = field.exp(k);
        let neg_root = field.neg(root);
        let mut next = vec![field.zero(); prod.len() + 1];
        for (i, &c) in prod.iter().enumerate() {
            next[i + 1] = field.add(next[i + 1], c);
            next[i] = field.add(next[i], field.mul(c, neg_root));
        }
        prod = next;
    }
    let mut coeffs = Vec::with_capacity(prod.len());
    for c in prod {
        let base = field
            .to_prime_subfield(c)
            .ok_or_else(|| Error::Internal(format!("minimal polynomial of γ^{j} has a coefficient outside GF(p)")))?;
        coeffs.push(base);
    }
    Ok(FpPolynomial::new(field.p(), coeffs))
}
