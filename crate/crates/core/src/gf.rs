//! Arithmetic in GF(p^m).
//!
//! Elements are packed integers in the polynomial basis: the value
//! `c_0 + c_1 p + ... + c_{m-1} p^{m-1}` stands for `c_0 + c_1 γ + ... `
//! where γ is the residue class of `x` modulo the field's defining
//! polynomial. The modulus is always primitive, so γ generates the
//! multiplicative group. For `q <= 2^20` exp/log tables are built and
//! multiplication is a table lookup; larger fields fall back to polynomial
//! arithmetic and have no discrete logarithm.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::arith::{checked_pow, is_prime, mul_mod, prime_factors};
use crate::error::{Error, Result};
use crate::fpoly::FpPolynomial;

/// Largest field order for which exp/log tables are built.
pub const TABLE_LIMIT: u64 = 1 << 20;

/// Largest supported field order.
pub const MAX_ORDER: u64 = 1 << 48;

struct Tables {
    exp: Vec<u32>,
    log: Vec<u32>,
}

/// A finite field GF(p^m) with a fixed primitive element γ.
pub struct Field {
    p: u64,
    m: u32,
    q: u64,
    modulus: FpPolynomial,
    /// `-(modulus - x^m)` as packed digits, so `x^m ≡ reduction`.
    reduction: Vec<u64>,
    tables: Option<Tables>,
}

impl fmt::Debug for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Field")
            .field("p", &self.p)
            .field("m", &self.m)
            .field("modulus", &self.modulus.to_string())
            .field("tables", &self.tables.is_some())
            .finish()
    }
}

impl PartialEq for Field {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.m == other.m && self.modulus == other.modulus
    }
}

impl Eq for Field {}

impl Field {
    /// GF(p^m) with the smallest primitive polynomial of degree `m`.
    ///
    /// Candidates `x^m + c_{m-1} x^{m-1} + ... + c_0` are ordered by the
    /// integer `c_0 + c_1 p + ... + c_{m-1} p^{m-1}`, i.e. lexicographically
    /// starting from the coefficient of `x^{m-1}`.
    pub fn new(p: u64, m: u32) -> Result<Field> {
        let q = Self::check_params(p, m)?;
        let mut candidate = vec![0u64; m as usize + 1];
        candidate[m as usize] = 1;
        for code in 0..q {
            let mut v = code;
            for c in candidate.iter_mut().take(m as usize) {
                *c = v % p;
                v /= p;
            }
            if candidate[0] == 0 {
                continue;
            }
            let f = FpPolynomial::new(p, candidate.iter().copied());
            if is_primitive(&f, q) {
                return Self::build(p, m, q, f);
            }
        }
        Err(Error::NoPrimitivePolynomial { p, m })
    }

    /// GF(p^m) defined by a caller-supplied primitive polynomial.
    pub fn with_modulus(p: u64, m: u32, modulus: FpPolynomial) -> Result<Field> {
        let q = Self::check_params(p, m)?;
        if modulus.characteristic() != p {
            return Err(Error::MixedCharacteristic);
        }
        let found = modulus.deg().unwrap_or(0);
        if found != m as usize {
            return Err(Error::ModulusDegree { expected: m as usize, found });
        }
        if !modulus.is_monic() {
            return Err(Error::ModulusNotMonic);
        }
        if !modulus.is_irreducible() {
            return Err(Error::ReducibleModulus(p));
        }
        if !is_primitive(&modulus, q) {
            return Err(Error::NonPrimitiveModulus);
        }
        Self::build(p, m, q, modulus)
    }

    /// Like [`Field::with_modulus`], taking coefficients `c_0, ..., c_m`.
    pub fn from_coefficients(p: u64, m: u32, coeffs: &[u64]) -> Result<Field> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if let Some(&coeff) = coeffs.iter().find(|&&c| c >= p) {
            return Err(Error::CoefficientOutOfRange { coeff, p });
        }
        Self::with_modulus(p, m, FpPolynomial::new(p, coeffs.iter().copied()))
    }

    fn check_params(p: u64, m: u32) -> Result<u64> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if m == 0 {
            return Err(Error::ZeroDegree);
        }
        match checked_pow(p, m) {
            Some(q) if q <= MAX_ORDER => Ok(q),
            _ => Err(Error::FieldTooLarge { p, m }),
        }
    }

    fn build(p: u64, m: u32, q: u64, modulus: FpPolynomial) -> Result<Field> {
        let reduction = (0..m as usize).map(|i| (p - modulus.coeff(i)) % p).collect();
        let mut field = Field { p, m, q, modulus, reduction, tables: None };
        if q <= TABLE_LIMIT {
            let n = (q - 1) as usize;
            let mut exp = vec![0u32; n];
            let mut log = vec![u32::MAX; q as usize];
            let mut v = 1u64;
            for (i, slot) in exp.iter_mut().enumerate() {
                if log[v as usize] != u32::MAX {
                    return Err(Error::NonPrimitiveModulus);
                }
                *slot = v as u32;
                log[v as usize] = i as u32;
                v = field.mul_slow(v, field.gamma());
            }
            if v != 1 {
                return Err(Error::Internal("γ^(q-1) != 1".into()));
            }
            field.tables = Some(Tables { exp, log });
        }
        Ok(field)
    }

    pub fn p(&self) -> u64 {
        self.p
    }

    pub fn m(&self) -> u32 {
        self.m
    }

    pub fn q(&self) -> u64 {
        self.q
    }

    /// Order of the multiplicative group, `q - 1`.
    pub fn order(&self) -> u64 {
        self.q - 1
    }

    pub fn modulus(&self) -> &FpPolynomial {
        &self.modulus
    }

    pub fn has_tables(&self) -> bool {
        self.tables.is_some()
    }

    #[inline]
    pub fn zero(&self) -> u64 {
        0
    }

    #[inline]
    pub fn one(&self) -> u64 {
        1
    }

    /// The primitive element γ (the class of `x`).
    pub fn gamma(&self) -> u64 {
        if self.m == 1 {
            self.reduction[0]
        } else {
            self.p
        }
    }

    /// Wraps a packed value as an element of this field.
    pub fn element(&self, value: u64) -> Result<FieldElement<'_>> {
        if value >= self.q {
            return Err(Error::ElementOutOfRange { value, q: self.q });
        }
        Ok(FieldElement { field: self, value })
    }

    /// Element from polynomial-basis coordinates `c_0, ..., c_{m-1}`.
    pub fn from_coords(&self, coords: &[u64]) -> Result<FieldElement<'_>> {
        if coords.len() > self.m as usize {
            return Err(Error::ModulusDegree { expected: self.m as usize, found: coords.len() });
        }
        if let Some(&coeff) = coords.iter().find(|&&c| c >= self.p) {
            return Err(Error::CoefficientOutOfRange { coeff, p: self.p });
        }
        let value = coords.iter().rev().fold(0, |acc, &c| acc * self.p + c);
        self.element(value)
    }

    /// Polynomial-basis coordinates of a packed value.
    pub fn coords(&self, mut a: u64) -> Vec<u64> {
        (0..self.m)
            .map(|_| {
                let c = a % self.p;
                a /= self.p;
                c
            })
            .collect()
    }

    /// `Some(c)` when `a` lies in the prime subfield GF(p).
    pub fn to_prime_subfield(&self, a: u64) -> Option<u64> {
        (a < self.p).then_some(a)
    }

    #[inline]
    pub fn add(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + y) % self.p)
    }

    #[inline]
    pub fn sub(&self, a: u64, b: u64) -> u64 {
        if self.p == 2 {
            return a ^ b;
        }
        self.digitwise(a, b, |x, y| (x + self.p - y) % self.p)
    }

    pub fn neg(&self, a: u64) -> u64 {
        self.sub(0, a)
    }

    fn digitwise(&self, mut a: u64, mut b: u64, op: impl Fn(u64, u64) -> u64) -> u64 {
        let (mut out, mut scale) = (0, 1);
        while a > 0 || b > 0 {
            out += op(a % self.p, b % self.p) * scale;
            a /= self.p;
            b /= self.p;
            scale *= self.p;
        }
        out
    }

    #[inline]
    pub fn mul(&self, a: u64, b: u64) -> u64 {
        if a == 0 || b == 0 {
            return 0;
        }
        match &self.tables {
            Some(t) => {
                let n = self.q - 1;
                let mut s = t.log[a as usize] as u64 + t.log[b as usize] as u64;
                if s >= n {
                    s -= n;
                }
                t.exp[s as usize] as u64
            }
            None => self.mul_slow(a, b),
        }
    }

    /// Schoolbook multiplication modulo the defining polynomial.
    fn mul_slow(&self, a: u64, b: u64) -> u64 {
        let (p, m) = (self.p, self.m as usize);
        let x = self.coords(a);
        let y = self.coords(b);
        let mut prod = vec![0u64; 2 * m];
        for (i, &xi) in x.iter().enumerate() {
            if xi == 0 {
                continue;
            }
            for (j, &yj) in y.iter().enumerate() {
                prod[i + j] = (prod[i + j] + mul_mod(xi, yj, p)) % p;
            }
        }
        for k in (m..2 * m).rev() {
            let top = prod[k];
            if top == 0 {
                continue;
            }
            prod[k] = 0;
            for (i, &r) in self.reduction.iter().enumerate() {
                prod[k - m + i] = (prod[k - m + i] + mul_mod(top, r, p)) % p;
            }
        }
        prod[..m].iter().rev().fold(0, |acc, &c| acc * p + c)
    }

    pub fn inv(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(a, self.q - 2))
    }

    /// `a^e`; for nonzero `a` the exponent is reduced modulo `q - 1`.
    pub fn pow(&self, a: u64, e: u64) -> u64 {
        if a == 0 {
            return if e == 0 { 1 } else { 0 };
        }
        let n = self.q - 1;
        if let Some(t) = &self.tables {
            let idx = mul_mod(t.log[a as usize] as u64, e % n, n);
            return t.exp[idx as usize] as u64;
        }
        let (mut base, mut e, mut acc) = (a, e % n, 1);
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul_slow(acc, base);
            }
            base = self.mul_slow(base, base);
            e >>= 1;
        }
        acc
    }

    /// `γ^i`.
    pub fn exp(&self, i: u64) -> u64 {
        let n = self.q - 1;
        match &self.tables {
            Some(t) => t.exp[(i % n) as usize] as u64,
            None => self.pow(self.gamma(), i),
        }
    }

    /// The unique `i` in `[0, q - 2]` with `γ^i = a`.
    pub fn log(&self, a: u64) -> Result<u64> {
        if a == 0 {
            return Err(Error::LogOfZero);
        }
        match &self.tables {
            Some(t) => Ok(t.log[a as usize] as u64),
            None => Err(Error::NoLogTables(self.q)),
        }
    }

    /// Multiplies by an element of the prime subfield.
    pub fn scale(&self, c: u64, a: u64) -> u64 {
        if self.p == 2 {
            return if c & 1 == 1 { a } else { 0 };
        }
        self.digitwise(a, 0, |x, _| mul_mod(x, c, self.p))
    }
}

/// Whether `f` is primitive for a field of order `q` (so `x` has order `q - 1`).
fn is_primitive(f: &FpPolynomial, q: u64) -> bool {
    if f.coeff(0) == 0 || !f.is_irreducible() {
        return false;
    }
    let n = q - 1;
    let one = FpPolynomial::one(f.characteristic());
    let x = FpPolynomial::x(f.characteristic());
    let order_divides = |e: u64| x.pow_mod(e, f).map(|r| r == one).unwrap_or(false);
    order_divides(n) && prime_factors(n).into_iter().all(|r| !order_divides(n / r))
}

/// An element bound to its field, for checked arithmetic.
#[derive(Clone, Copy)]
pub struct FieldElement<'f> {
    field: &'f Field,
    value: u64,
}

impl fmt::Debug for FieldElement<'_> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "FieldElement({:?})", self.field.coords(self.value))
    }
}

impl PartialEq for FieldElement<'_> {
    fn eq(&self, other: &Self) -> bool {
        self.value == other.value && self.same_field(other)
    }
}

impl Eq for FieldElement<'_> {}

impl<'f> FieldElement<'f> {
    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn field(&self) -> &'f Field {
        self.field
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn coords(&self) -> Vec<u64> {
        self.field.coords(self.value)
    }

    fn same_field(&self, other: &Self) -> bool {
        std::ptr::eq(self.field, other.field) || self.field == other.field
    }

    fn with(&self, value: u64) -> Self {
        FieldElement { field: self.field, value }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        Ok(self.with(self.field.add(self.value, other.value)))
    }

    pub fn checked_sub(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        Ok(self.with(self.field.sub(self.value, other.value)))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        if !self.same_field(other) {
            return Err(Error::MixedFields);
        }
        Ok(self.with(self.field.mul(self.value, other.value)))
    }

    pub fn inv(&self) -> Result<Self> {
        self.field.inv(self.value).map(|v| self.with(v))
    }

    pub fn pow(&self, e: u64) -> Self {
        self.with(self.field.pow(self.value, e))
    }

    pub fn log(&self) -> Result<u64> {
        self.field.log(self.value)
    }
}

impl<'f> Add for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn add(self, rhs: Self) -> Self {
        self.checked_add(&rhs).expect("operands from different fields")
    }
}

impl<'f> Sub for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn sub(self, rhs: Self) -> Self {
        self.checked_sub(&rhs).expect("operands from different fields")
    }
}

impl<'f> Mul for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn mul(self, rhs: Self) -> Self {
        self.checked_mul(&rhs).expect("operands from different fields")
    }
}

impl<'f> Neg for FieldElement<'f> {
    type Output = FieldElement<'f>;
    fn neg(self) -> Self {
        self.with(self.field.neg(self.value))
    }
}
