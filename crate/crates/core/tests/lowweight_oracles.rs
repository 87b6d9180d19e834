//! Closed forms for weights 2 and 3 against brute-force enumeration.

use std::sync::Arc;

use cycweight::lowweight::{
    a2_count, a3_c1t, a3_lower_bound, easy_no_weight3, has_weight3_c1t, weight3_witnesses_in, Weight3Params,
};
use cycweight::{brute_weight_distribution, cyclotomic_coset, Budget, CyclicCode, Error, Field};
use num_bigint::BigUint;

fn field(p: u64, m: u32) -> Arc<Field> {
    Arc::new(Field::new(p, m).unwrap())
}

/// Smallest members of the distinct p-cyclotomic cosets modulo q - 1.
fn coset_reps(p: u64, m: u32) -> Vec<u64> {
    let n = p.pow(m) - 1;
    let mut reps: Vec<u64> = (0..n).map(|t| cyclotomic_coset(p, m, t).representative()).collect();
    reps.sort_unstable();
    reps.dedup();
    reps
}

fn brute_a(code: &CyclicCode, w: usize) -> BigUint {
    brute_weight_distribution(code, w, Budget::default()).unwrap().get(w as i64).unwrap()
}

#[test]
fn a2_matches_brute_force_binary() {
    for m in 2..=6 {
        let f = field(2, m);
        let reps = coset_reps(2, m);
        for (i, &t1) in reps.iter().enumerate() {
            let mut sets = vec![vec![t1]];
            sets.extend(reps[i + 1..].iter().map(|&t2| vec![t1, t2]));
            for exps in sets {
                let code = CyclicCode::new(f.clone(), &exps).unwrap();
                assert_eq!(a2_count(&code).unwrap(), brute_a(&code, 2), "q = {}, {exps:?}", f.q());
            }
        }
    }
}

#[test]
fn a2_matches_brute_force_odd_characteristic_any_order() {
    for (p, m) in [(3, 2), (3, 3), (3, 4), (5, 2)] {
        let f = field(p, m);
        let reps = coset_reps(p, m);
        for &t1 in &reps {
            let code = CyclicCode::new(f.clone(), &[t1]).unwrap();
            assert_eq!(a2_count(&code).unwrap(), brute_a(&code, 2), "q = {}, ({t1})", f.q());
            for &t2 in &reps {
                if t2 == t1 {
                    continue;
                }
                // both orders: the closed form privileges the first exponent
                let code = CyclicCode::new(f.clone(), &[t1, t2]).unwrap();
                assert_eq!(a2_count(&code).unwrap(), brute_a(&code, 2), "q = {}, ({t1}, {t2})", f.q());
            }
        }
    }
}

/// Valid weight-3 parameter sets with p^m <= 125, at most two exponents each.
fn weight3_cases() -> Vec<Weight3Params> {
    let mut cases = Vec::new();
    for (p, m) in [(3u64, 2u32), (3, 3), (3, 4), (5, 2), (5, 3), (7, 2), (11, 2)] {
        let n = p.pow(m) - 1;
        for g in (1..=m).filter(|g| m % g == 0) {
            let k = p.pow(g) - 1;
            for t in 1..k {
                let kg = cyclotomic_coset(p, g, t);
                if kg.representative() != t || num_integer::gcd(t, k) != 1 {
                    continue;
                }
                // members of K_g(t) lifted to exponents modulo n, one per K_m coset
                let mut lifted: Vec<u64> = (0..n).filter(|&e| kg.contains(e)).collect();
                lifted.retain(|&e| cyclotomic_coset(p, m, e).representative() == e);
                // brute force over q > 100 is the slow part: one exponent set per (g, t)
                let per_t = if n > 100 { 1 } else { 3 };
                for (i, &e1) in lifted.iter().enumerate().take(per_t) {
                    cases.push(Weight3Params::new(p, m, g, t, &[e1]));
                    if g < m && n <= 100 {
                        for &e2 in lifted[i + 1..].iter().take(2) {
                            cases.push(Weight3Params::new(p, m, g, t, &[e1, e2]));
                        }
                    }
                }
            }
        }
    }
    cases
}

#[test]
fn a3_bound_never_exceeds_brute_force() {
    let cases = weight3_cases();
    assert!(cases.len() > 50, "{} cases", cases.len());
    let mut brute_cache = std::collections::HashMap::new();
    for params in cases {
        let f = field(params.p, params.m);
        let bound = a3_lower_bound(&params).unwrap();
        let witnesses = weight3_witnesses_in(&f, &params).unwrap();
        let code = CyclicCode::new(f.clone(), &params.exponents).unwrap();
        assert!(witnesses.witnesses.iter().all(|w| code.contains(&w.codeword).unwrap()));
        // each tuple class yields (p - 1)(q - 1)/3 codewords by shifting and scaling, halved by the (b,a,j,i) pairing
        let from_tuples = BigUint::from(params.tuple_count()) * (params.p - 1) * f.order() / 6u32;
        assert_eq!(bound, from_tuples, "{params:?}");
        assert_eq!(witnesses.tuple_count as u64, params.tuple_count(), "{params:?}");
        let a3 = brute_cache.entry((params.p, params.m, params.exponents.clone())).or_insert_with(|| brute_a(&code, 3));
        assert!(&bound <= a3, "{params:?}: bound {bound} > A3 {a3}");
    }
}

#[test]
fn a3_bound_rejects_invalid_parameters() {
    let invalid = [
        Weight3Params::new(2, 4, 1, 1, &[1]),
        Weight3Params::new(3, 3, 2, 1, &[1]),
        Weight3Params::new(3, 2, 2, 1, &[1, 5]),
        Weight3Params::new(5, 2, 1, 4, &[1]),
        Weight3Params::new(5, 2, 1, 2, &[2]),
        Weight3Params::new(5, 2, 1, 1, &[2]),
        Weight3Params::new(3, 4, 2, 1, &[]),
    ];
    for params in invalid {
        assert!(a3_lower_bound(&params).is_err(), "{params:?}");
    }
    assert!(matches!(a3_lower_bound(&Weight3Params::new(3, 4, 2, 1, &[1, 3])), Err(Error::SameCoset { .. })));
}

/// Weight-3 codewords of binary C_{1,t}: pairs of positions fix the third
/// through `γ^k = γ^i + γ^j`, then the t-th powers are checked.
fn a3_by_pairs(f: &Field, t: u64) -> u64 {
    let n = f.order();
    let mut count = 0;
    for i in 0..n {
        for j in i + 1..n {
            let (xi, xj) = (f.exp(i), f.exp(j));
            let k = f.log(f.add(xi, xj)).unwrap();
            if k > j && f.add(f.pow(xi, t), f.pow(xj, t)) == f.pow(f.exp(k), t) {
                count += 1;
            }
        }
    }
    count
}

#[test]
fn a3_c1t_matches_enumeration() {
    for m in 3..=10 {
        let f = field(2, m);
        for t in 0..=50 {
            if cyclotomic_coset(2, m, t % f.order()).contains(1) {
                assert!(matches!(a3_c1t(&f, t), Err(Error::TInCosetOfOne { .. })));
                continue;
            }
            let formula = a3_c1t(&f, t).unwrap();
            assert_eq!(formula, BigUint::from(a3_by_pairs(&f, t)), "q = {}, t = {t}", f.q());
            if m <= 8 {
                let code = CyclicCode::from_zeros(f.clone(), &[1, t]).unwrap();
                assert_eq!(formula, brute_a(&code, 3), "q = {}, t = {t}", f.q());
            }
            assert_eq!(has_weight3_c1t(&f, t).unwrap(), formula > BigUint::from(0u32));
        }
    }
}

#[test]
fn easy_criterion_is_sufficient() {
    for m in 2..=20 {
        let f = Field::new(2, m).unwrap();
        for t in 3..=25 {
            match has_weight3_c1t(&f, t) {
                Ok(has) => assert!(!(easy_no_weight3(m as u64, t) && has), "m = {m}, t = {t}"),
                Err(Error::TInCosetOfOne { .. }) => {}
                Err(e) => panic!("m = {m}, t = {t}: {e}"),
            }
        }
    }
}
