//! The weight/solution-count relation against brute-force counts.

use std::collections::HashMap;
use std::sync::Arc;

use cycweight::partitions::partition_of;
use cycweight::relation::{
    diagonal_count_bruteforce, family_low_weights, family_nw, family_nw_sequence, nw_from_weights, nw_terms,
    weights_from_nw,
};
use cycweight::{
    brute_weight_distribution, weight_distribution_by_encoding, Budget, CyclicCode, DiagonalSystem, Field, NwSequence,
    PartitionTuple, WeightPrefix,
};
use num_bigint::BigUint;

fn field(m: u32) -> Arc<Field> {
    Arc::new(Field::new(2, m).unwrap())
}

fn brute_nw(f: &Arc<Field>, exps: &[u64], w: usize) -> BigUint {
    let sys = DiagonalSystem::new(f.clone(), exps, w).unwrap();
    diagonal_count_bruteforce(&sys, Budget::default()).unwrap()
}

/// Every exponent set with one or two entries in `0..=q-2`, including pairs
/// from a single coset.
fn exponent_sets(q: u64) -> Vec<Vec<u64>> {
    let mut sets: Vec<Vec<u64>> = (0..=q - 2).map(|t| vec![t]).collect();
    for t1 in 0..=q - 2 {
        sets.extend((t1 + 1..=q - 2).map(|t2| vec![t1, t2]));
    }
    sets
}

fn sweep(m: u32, w_max: usize) -> usize {
    let f = field(m);
    let q = f.q();
    let mut weights: HashMap<Vec<u64>, WeightPrefix> = HashMap::new();
    let mut checked = 0;
    for exps in exponent_sets(q) {
        let code = CyclicCode::from_zeros(f.clone(), &exps).unwrap();
        let a = weights
            .entry(code.exponents().to_vec())
            .or_insert_with(|| brute_weight_distribution(&code, w_max, Budget::default()).unwrap());
        let mut nws = Vec::new();
        for w in 1..=w_max {
            let count = brute_nw(&f, &exps, w);
            assert_eq!(nw_from_weights(q, a, w).unwrap(), count, "q = {q}, {exps:?}, w = {w}");
            if w >= 2 {
                nws.push(count);
            }
        }
        assert_eq!(&weights_from_nw(q, &NwSequence::from_arity2(nws)).unwrap(), a, "q = {q}, {exps:?}");
        checked += 1;
    }
    checked
}

#[test]
fn oracle_sweep_q8() {
    assert_eq!(sweep(3, 6), 7 + 21);
}

#[test]
fn oracle_sweep_q16() {
    assert_eq!(sweep(4, 6), 15 + 105);
}

#[test]
fn oracle_sweep_q32() {
    assert_eq!(sweep(5, 5), 31 + 465);
    // arity 6 on one code per coset pair (1, t)
    let f = field(5);
    for t in [0, 3, 5, 7, 11, 15] {
        let code = CyclicCode::new(f.clone(), &[1, t]).unwrap();
        let a = brute_weight_distribution(&code, 6, Budget::default()).unwrap();
        assert_eq!(nw_from_weights(32, &a, 6).unwrap(), brute_nw(&f, &[1, t], 6), "(1, {t})");
    }
}

#[test]
fn relation_holds_beyond_code_length() {
    // w > n = q - 1: parts of S(w) may exceed n
    for m in 1..=3 {
        let f = field(m);
        let q = f.q();
        for exps in exponent_sets(q.max(2)) {
            let code = CyclicCode::from_zeros(f.clone(), &exps).unwrap();
            let full = weight_distribution_by_encoding(&code, Budget::default()).unwrap();
            for w in 1..=7 {
                let mut values = full.values().to_vec();
                values.resize(w + 1, BigUint::default());
                let a = WeightPrefix::new(values).unwrap();
                assert_eq!(nw_from_weights(q, &a, w).unwrap(), brute_nw(&f, &exps, w), "q = {q}, {exps:?}, w = {w}");
            }
        }
    }
}

/// Solutions grouped by the repetition pattern of their entries, by full scan.
fn solutions_by_pattern(f: &Field, exps: &[u64], w: usize) -> HashMap<PartitionTuple, u64> {
    let q = f.q();
    let n = f.order();
    let power = |x: u64, t: u64| if x == 0 { 0 } else { f.pow(x, if t.is_multiple_of(n) { n } else { t }) };
    let mut out = HashMap::new();
    let mut tuple = vec![0u64; w];
    loop {
        if exps.iter().all(|&t| tuple.iter().fold(0, |acc, &x| acc ^ power(x, t)) == 0) {
            *out.entry(partition_of(&tuple)).or_insert(0) += 1;
        }
        let mut i = 0;
        while i < w && tuple[i] == q - 1 {
            tuple[i] = 0;
            i += 1;
        }
        if i == w {
            return out;
        }
        tuple[i] += 1;
    }
}

#[test]
fn per_pattern_terms_match_classified_solutions() {
    for (m, exps, w_max) in
        [(3u32, vec![1u64], 5), (3, vec![1, 3], 5), (4, vec![1, 3], 4), (4, vec![1, 7], 4), (4, vec![3], 4)]
    {
        let f = field(m);
        let code = CyclicCode::new(f.clone(), &exps).unwrap();
        let a = brute_weight_distribution(&code, w_max, Budget::default()).unwrap();
        for w in 1..=w_max {
            let classified = solutions_by_pattern(&f, &exps, w);
            let terms = nw_terms(f.q(), &a, w).unwrap();
            for (v, term) in &terms {
                let seen = classified.get(v).copied().unwrap_or(0);
                assert_eq!(term, &BigUint::from(seen), "q = {}, {exps:?}, w = {w}, v = {v}", f.q());
            }
            assert_eq!(classified.len(), terms.iter().filter(|(_, t)| *t > BigUint::default()).count());
        }
    }
}

#[test]
fn family_matches_brute_force() {
    for (f, k) in [(1u64, 1u64), (2, 2), (2, 1)] {
        let gf = field(2 * f as u32 + 1);
        let t = (1 << k) + 1;
        for w in 2..=5 {
            assert_eq!(family_nw(f, k, w).unwrap(), brute_nw(&gf, &[1, t], w), "f = {f}, k = {k}, w = {w}");
        }
    }
    for (f, k) in [(1u64, 1u64), (2, 2), (2, 1)] {
        let gf = field(2 * f as u32 + 1);
        let code = CyclicCode::new(gf, &[1, (1 << k) + 1]).unwrap();
        let a = brute_weight_distribution(&code, 6, Budget::default()).unwrap();
        assert_eq!(family_low_weights(f, k).unwrap(), a, "f = {f}, k = {k}");
    }
}

#[test]
fn family_inversion_is_exact_for_large_fields() {
    for f in 1..=20u64 {
        for k in (1..=2 * f).filter(|k| num_integer::gcd(*k, 2 * f + 1) == 1).take(3) {
            let q = 1u64 << (2 * f + 1);
            let inverted = weights_from_nw(q, &family_nw_sequence(f, k, 6).unwrap()).unwrap();
            assert_eq!(inverted, family_low_weights(f, k).unwrap(), "f = {f}, k = {k}");
        }
    }
}
