//! Field, polynomial and membership invariants.

use std::sync::Arc;

use cycweight::{
    brute_weight_distribution, poly_gcd, pow_x_mod, u_gcd, u_poly, weight_distribution_by_encoding, Budget, Codeword,
    CyclicCode, Field, FpPolynomial,
};
use proptest::prelude::*;

fn poly(p: u64, max_len: usize) -> impl Strategy<Value = FpPolynomial> {
    prop::collection::vec(0..p, 0..max_len).prop_map(move |c| FpPolynomial::new(p, c))
}

fn prime() -> impl Strategy<Value = u64> {
    prop::sample::select(vec![2u64, 3, 5, 7, 13])
}

proptest! {
    #[test]
    fn division_identity((p, a, b) in prime().prop_flat_map(|p| (Just(p), poly(p, 12), poly(p, 8)))) {
        prop_assume!(!b.is_zero());
        let (quot, rem) = a.div_rem(&b).unwrap();
        prop_assert_eq!(&(&quot * &b) + &rem, a);
        prop_assert!(rem.degree() < b.degree());
        prop_assert_eq!(rem.characteristic(), p);
    }

    #[test]
    fn gcd_divides_both((a, b) in prime().prop_flat_map(|p| (poly(p, 10), poly(p, 10)))) {
        prop_assume!(!(a.is_zero() && b.is_zero()));
        let g = poly_gcd(&a, &b).unwrap();
        prop_assert!(g.is_monic());
        prop_assert!(a.divisible_by(&g) && b.divisible_by(&g));
        // any common divisor of the form a*x + b*y is a multiple: gcd(a/g, b/g) = 1
        if !a.is_zero() && !b.is_zero() {
            let (a1, _) = a.div_rem(&g).unwrap();
            let (b1, _) = b.div_rem(&g).unwrap();
            prop_assert!(poly_gcd(&a1, &b1).unwrap().is_one());
        }
    }

    #[test]
    fn pow_x_mod_matches_materialized(e in 0u64..300, f in poly(3, 7)) {
        prop_assume!(f.deg().unwrap_or(0) >= 1);
        let direct = FpPolynomial::monomial(3, e as usize, 1).rem(&f).unwrap();
        prop_assert_eq!(pow_x_mod(e, &f).unwrap(), direct);
    }

    #[test]
    fn field_axioms((m, a, b, c) in (1u32..=6).prop_flat_map(|m| {
        let q = 3u64.pow(m);
        (Just(m), 0..q, 0..q, 0..q)
    })) {
        let f = Field::new(3, m).unwrap();
        prop_assert_eq!(f.mul(a, f.mul(b, c)), f.mul(f.mul(a, b), c));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), 0);
        if a != 0 {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), 1);
            prop_assert_eq!(f.exp(f.log(a).unwrap()), a);
        }
    }
}

#[test]
fn u_gcd_matches_materialized_gcd() {
    for m in 2..=14u32 {
        let q = 1u64 << m;
        let xq_plus_x = &FpPolynomial::monomial(2, q as usize, 1) + &FpPolynomial::x(2);
        for t in (0..=40).chain([63, 100, 255]) {
            let u = u_poly(t);
            if u.is_zero() {
                continue;
            }
            assert_eq!(u_gcd(t, q).unwrap(), poly_gcd(&u, &xq_plus_x).unwrap(), "q = {q}, t = {t}");
        }
    }
}

#[test]
fn u_has_simple_roots_at_zero_and_one() {
    let x_x1 = FpPolynomial::new(2, [0, 1, 1]);
    for t in (3..=64).step_by(2) {
        let u = u_poly(t);
        let (quot, rem) = u.div_rem(&x_x1).unwrap();
        assert!(rem.is_zero(), "t = {t}");
        assert!(!quot.divisible_by(&FpPolynomial::x(2)), "x^2 | U_{t}");
        assert!(!quot.divisible_by(&FpPolynomial::new(2, [1, 1])), "(x+1)^2 | U_{t}");
    }
    // even t: U_t = U_{t/2}^2
    for t in (4..=64).step_by(2) {
        let half = u_poly(t / 2);
        assert_eq!(u_poly(t), &half * &half, "t = {t}");
    }
}

fn random_codeword(code: &CyclicCode, message: &[u64]) -> Codeword {
    let p = code.field().p();
    let msg = FpPolynomial::new(p, message.iter().copied());
    let n = code.length();
    let c = &msg * code.generator();
    let mut coeffs = vec![0u64; n];
    for (i, &a) in c.coeffs().iter().enumerate() {
        coeffs[i % n] = (coeffs[i % n] + a) % p;
    }
    Codeword::new(coeffs)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn membership_is_shift_and_scale_invariant(
        (p, m, exps, msg, k, c) in prop::sample::select(vec![(2u64, 4u32), (2, 5), (3, 2), (3, 3), (5, 2)])
            .prop_flat_map(|(p, m)| {
                let n = p.pow(m) - 1;
                (Just(p), Just(m), prop::collection::vec(0..n, 1..3), prop::collection::vec(0..p, 0..n as usize),
                 0..n as usize, 1..p)
            })
    ) {
        let code = CyclicCode::from_zeros(Arc::new(Field::new(p, m).unwrap()), &exps).unwrap();
        let word = random_codeword(&code, &msg);
        prop_assert!(code.contains(&word).unwrap());
        prop_assert!(code.contains(&word.shift(k)).unwrap());
        prop_assert!(code.contains(&word.scale(c, p)).unwrap());
        // a single nonzero coordinate is never a codeword of a proper code
        if !code.exponents().is_empty() {
            prop_assert!(!code.contains(&Codeword::from_support(code.length(), &[k])).unwrap());
        }
    }
}

#[test]
fn support_enumeration_matches_encoding() {
    let cases: [(u64, u32, &[u64]); 8] = [
        (2, 4, &[1]),
        (2, 4, &[1, 3]),
        (2, 4, &[0, 1]),
        (2, 5, &[1, 5]),
        (2, 5, &[1, 3, 5]),
        (3, 2, &[1, 5]),
        (3, 3, &[1, 2, 4, 5]),
        (5, 2, &[1, 2, 3, 4, 6, 7, 8, 9]),
    ];
    for (p, m, exps) in cases {
        let code = CyclicCode::new(Arc::new(Field::new(p, m).unwrap()), exps).unwrap();
        let full = weight_distribution_by_encoding(&code, Budget::default()).unwrap();
        let w = 6.min(code.length());
        let brute = brute_weight_distribution(&code, w, Budget::default()).unwrap();
        assert_eq!(brute, full.truncate(w), "{code}");
    }
}
