//! Cyclic codes `C_{t1,...,ts}` of length `q - 1` over GF(p), membership by
//! evaluation at `γ^{t_j}`, and brute-force weight distributions.

use std::fmt;
use std::sync::Arc;

use num_bigint::BigUint;
use num_traits::{ToPrimitive, Zero};
use rayon::prelude::*;

use crate::arith::binomial;
use crate::error::{Error, Result};
use crate::fpoly::{cyclotomic_coset, minimal_polynomial, FpPolynomial};
use crate::gf::Field;

/// Cap on the number of elementary steps an enumeration may take.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct Budget(pub u64);

impl Default for Budget {
    fn default() -> Self {
        Budget(1_000_000_000)
    }
}

impl Budget {
    pub(crate) fn check(&self, needed: &BigUint) -> Result<()> {
        if *needed > BigUint::from(self.0) {
            return Err(Error::BudgetExceeded { needed: needed.to_string(), budget: self.0 });
        }
        Ok(())
    }
}

/// Cyclic code of length `n = q - 1` over GF(p) whose generator is the
/// product of the minimal polynomials of `γ^{t_j}`.
#[derive(Debug, Clone)]
pub struct CyclicCode {
    field: Arc<Field>,
    exponents: Vec<u64>,
    generator: FpPolynomial,
}

impl CyclicCode {
    /// Builds `C_{t1,...,ts}`. Each exponent is reduced modulo `q - 1` and
    /// replaced by the smallest member of its cyclotomic coset; order is
    /// kept. Two exponents in one coset are rejected.
    pub fn new(field: Arc<Field>, exponents: &[u64]) -> Result<Self> {
        Self::build(field, exponents, true)
    }

    /// Code with the given zeros, merging exponents that share a coset.
    /// The generator is then the lcm of the minimal polynomials, as for BCH
    /// codes given by a run of consecutive exponents.
    pub fn from_zeros(field: Arc<Field>, exponents: &[u64]) -> Result<Self> {
        Self::build(field, exponents, false)
    }

    fn build(field: Arc<Field>, exponents: &[u64], strict: bool) -> Result<Self> {
        if exponents.is_empty() {
            return Err(Error::EmptyExponents);
        }
        let n = field.order();
        let mut canonical: Vec<u64> = Vec::with_capacity(exponents.len());
        let mut supplied: Vec<u64> = Vec::with_capacity(exponents.len());
        for &t in exponents {
            let rep = cyclotomic_coset(field.p(), field.m(), t % n).representative();
            if let Some(pos) = canonical.iter().position(|&c| c == rep) {
                if strict {
                    return Err(Error::SameCoset { first: supplied[pos], second: t, p: field.p() });
                }
                continue;
            }
            canonical.push(rep);
            supplied.push(t);
        }
        let mut generator = FpPolynomial::one(field.p());
        for &t in &canonical {
            generator = &generator * &minimal_polynomial(&field, t)?;
        }
        Ok(CyclicCode { field, exponents: canonical, generator })
    }

    pub fn field(&self) -> &Arc<Field> {
        &self.field
    }

    /// Canonical exponents (smallest coset representatives), in the order supplied.
    pub fn exponents(&self) -> &[u64] {
        &self.exponents
    }

    pub fn length(&self) -> usize {
        self.field.order() as usize
    }

    pub fn generator(&self) -> &FpPolynomial {
        &self.generator
    }

    /// `n - deg g`.
    pub fn dimension(&self) -> usize {
        self.length() - self.generator.deg().unwrap_or(0)
    }

    /// True when the generator is `x^n - 1`, i.e. the code is `{0}`.
    pub fn is_zero_code(&self) -> bool {
        self.dimension() == 0
    }

    /// Lemma test: `c(γ^{t_j}) = 0` for every exponent.
    pub fn contains(&self, word: &Codeword) -> Result<bool> {
        let n = self.length();
        if word.len() != n {
            return Err(Error::LengthMismatch { expected: n, found: word.len() });
        }
        let f = &*self.field;
        Ok(self.exponents.iter().all(|&t| {
            let mut acc = 0;
            for (i, &c) in word.coeffs().iter().enumerate() {
                if c != 0 {
                    let term = f.exp(i as u64 * t % f.order());
                    acc = f.add(acc, f.scale(c, term));
                }
            }
            acc == 0
        }))
    }

    /// `γ^{i t_j}` laid out as `n` rows of `s` values.
    fn power_rows(&self) -> Vec<u64> {
        let f = &*self.field;
        let n = f.order();
        (0..n).flat_map(|i| self.exponents.iter().map(move |&t| f.exp(i * t % n))).collect()
    }
}

impl fmt::Display for CyclicCode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let exps: Vec<String> = self.exponents.iter().map(u64::to_string).collect();
        write!(f, "C_({}) over GF({}), n = {}", exps.join(","), self.field.p(), self.length())
    }
}

/// A word of length `n` over GF(p), coefficient `i` multiplying `x^i`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Codeword(Vec<u64>);

impl Codeword {
    pub fn new(coeffs: Vec<u64>) -> Self {
        Codeword(coeffs)
    }

    pub fn zero(n: usize) -> Self {
        Codeword(vec![0; n])
    }

    /// Word with ones on `support`.
    pub fn from_support(n: usize, support: &[usize]) -> Self {
        let mut v = vec![0; n];
        for &i in support {
            v[i % n] = 1;
        }
        Codeword(v)
    }

    pub fn coeffs(&self) -> &[u64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn weight(&self) -> usize {
        self.0.iter().filter(|&&c| c != 0).count()
    }

    pub fn support(&self) -> Vec<usize> {
        (0..self.len()).filter(|&i| self.0[i] != 0).collect()
    }

    /// Multiplication by `x^k` modulo `x^n - 1`.
    pub fn shift(&self, k: usize) -> Self {
        let n = self.len();
        let mut v = vec![0; n];
        for (i, &c) in self.0.iter().enumerate() {
            v[(i + k) % n] = c;
        }
        Codeword(v)
    }

    pub fn scale(&self, c: u64, p: u64) -> Self {
        Codeword(self.0.iter().map(|&a| a * c % p).collect())
    }
}

impl fmt::Display for Codeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(u64::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Exact counts `A_0, ..., A_W` with the convention `A_{-1} = 0`.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct WeightPrefix {
    values: Vec<BigUint>,
}

impl WeightPrefix {
    pub fn new(values: Vec<BigUint>) -> Result<Self> {
        if values.is_empty() {
            return Err(Error::EmptyPrefix);
        }
        Ok(WeightPrefix { values })
    }

    pub fn from_u64s(values: &[u64]) -> Result<Self> {
        Self::new(values.iter().map(|&v| BigUint::from(v)).collect())
    }

    /// Largest index `W` stored.
    pub fn max_weight(&self) -> usize {
        self.values.len() - 1
    }

    /// `A_w`, with `A_{-1} = 0`; `None` outside `-1..=W`.
    pub fn get(&self, w: i64) -> Option<BigUint> {
        match w {
            -1 => Some(BigUint::zero()),
            w if w >= 0 => self.values.get(w as usize).cloned(),
            _ => None,
        }
    }

    pub fn values(&self) -> &[BigUint] {
        &self.values
    }

    /// Keeps `A_0..=A_w`.
    pub fn truncate(&self, w: usize) -> Self {
        WeightPrefix { values: self.values[..=w.min(self.max_weight())].to_vec() }
    }
}

impl fmt::Display for WeightPrefix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.values.iter().map(BigUint::to_string).collect();
        write!(f, "({})", parts.join(", "))
    }
}

/// Membership tests needed to enumerate all words of weight `1..=w_max`.
pub fn enumeration_cost(n: usize, p: u64, w_max: usize) -> BigUint {
    (1..=w_max.min(n)).map(|w| binomial(n as u64, w as u64) * BigUint::from(p - 1).pow(w as u32 - 1)).sum()
}

/// `A_0..=A_{w_max}` by enumerating every support of size `w <= w_max` and
/// every nonzero value assignment with the first coordinate fixed to 1.
pub fn brute_weight_distribution(code: &CyclicCode, w_max: usize, budget: Budget) -> Result<WeightPrefix> {
    let f = &*code.field;
    let (n, p, s) = (code.length(), f.p(), code.exponents.len());
    budget.check(&enumeration_cost(n, p, w_max))?;
    let depth = w_max.min(n);
    let rows = code.power_rows();

    // terms[(i * (p - 1) + (v - 1)) * s + j] = v * γ^{i t_j}
    let terms: Vec<u64> = (0..n)
        .flat_map(|i| {
            let rows = &rows;
            (1..p).flat_map(move |v| (0..s).map(move |j| f.scale(v, rows[i * s + j])))
        })
        .collect();
    let kernel = Kernel { field: f, n, s, p, depth, terms: &terms };

    let counts = (0..n)
        .into_par_iter()
        .map(|first| {
            let mut counts = vec![0u64; depth + 1];
            // first nonzero coordinate fixed to value 1
            let mut stack = vec![0u64; (depth + 1) * s];
            stack[s..2 * s].copy_from_slice(kernel.term(first, 1));
            kernel.descend(first, 1, &mut stack, &mut counts);
            counts
        })
        .reduce(
            || vec![0u64; depth + 1],
            |mut a, b| {
                a.iter_mut().zip(b).for_each(|(x, y)| *x += y);
                a
            },
        );

    let mut values = vec![BigUint::zero(); w_max + 1];
    values[0] = BigUint::from(1u32);
    for w in 1..=depth {
        values[w] = BigUint::from(counts[w]) * (p - 1);
    }
    WeightPrefix::new(values)
}

struct Kernel<'a> {
    field: &'a Field,
    n: usize,
    s: usize,
    p: u64,
    depth: usize,
    terms: &'a [u64],
}

impl Kernel<'_> {
    fn term(&self, i: usize, v: u64) -> &[u64] {
        let at = (i * (self.p as usize - 1) + (v as usize - 1)) * self.s;
        &self.terms[at..at + self.s]
    }

    /// `stack[d*s..(d+1)*s]` holds the syndrome of the current partial word of weight `d`.
    fn descend(&self, last: usize, d: usize, stack: &mut [u64], counts: &mut [u64]) {
        let s = self.s;
        if stack[d * s..(d + 1) * s].iter().all(|&x| x == 0) {
            counts[d] += 1;
        }
        if d == self.depth {
            return;
        }
        for i in last + 1..self.n {
            for v in 1..self.p {
                let (head, tail) = stack.split_at_mut((d + 1) * s);
                let cur = &head[d * s..];
                let next = &mut tail[..s];
                for ((slot, &a), &b) in next.iter_mut().zip(cur).zip(self.term(i, v)) {
                    *slot = self.field.add(a, b);
                }
                self.descend(i, d + 1, stack, counts);
            }
        }
    }
}

/// Result of a bounded minimum-distance search.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum MinDistance {
    Exact(usize),
    GreaterThan(usize),
}

impl fmt::Display for MinDistance {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MinDistance::Exact(d) => write!(f, "{d}"),
            MinDistance::GreaterThan(w) => write!(f, "> {w}"),
        }
    }
}

/// Smallest `w >= 1` with `A_w > 0`, searched up to `w_max`.
pub fn min_distance_upto(code: &CyclicCode, w_max: usize, budget: Budget) -> Result<MinDistance> {
    let dist = brute_weight_distribution(code, w_max, budget)?;
    Ok((1..=w_max).find(|&w| !dist.values[w].is_zero()).map_or(MinDistance::GreaterThan(w_max), MinDistance::Exact))
}

/// Full weight distribution by encoding every message `m(x) g(x)`.
/// Independent of [`CyclicCode::contains`]; used to cross-check the
/// support enumeration on short codes.
pub fn weight_distribution_by_encoding(code: &CyclicCode, budget: Budget) -> Result<WeightPrefix> {
    let n = code.length();
    let p = code.field.p();
    let k = code.dimension();
    budget.check(&BigUint::from(p).pow(k as u32))?;
    let g = code.generator.coeffs();
    let mut word = vec![0u64; n];
    let mut message = vec![0u64; k];
    let mut counts = vec![0u64; n + 1];
    counts[0] = 1;
    // odometer over messages; each digit change adds x^j g(x)
    'outer: loop {
        let mut j = 0;
        loop {
            if j == k {
                break 'outer;
            }
            for (i, &c) in g.iter().enumerate() {
                word[i + j] = (word[i + j] + c) % p;
            }
            message[j] = (message[j] + 1) % p;
            if message[j] != 0 {
                break;
            }
            j += 1;
        }
        counts[word.iter().filter(|&&c| c != 0).count()] += 1;
    }
    WeightPrefix::new(counts.into_iter().map(BigUint::from).collect())
}

/// Convenience: `A_w` as `u64` for tests and reports.
pub fn prefix_to_u64(prefix: &WeightPrefix) -> Vec<u64> {
    prefix.values().iter().map(|v| v.to_u64().expect("count fits in u64")).collect()
}
