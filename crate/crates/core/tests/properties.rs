use insdel::bounds::{exact_iq, near_maximal_distance_cap, singleton_insdel, sub_singleton_bound};
use insdel::galois::{Field, Poly};
use insdel::lift::lift;
use insdel::metrics::{
    hamming_distance, insdel_distance, johnson_space, l1_distance, lcs_length, phi, psi,
};
use insdel::{Code, Composition, Word};
use num_bigint::BigUint;
use proptest::prelude::*;
use std::sync::OnceLock;

fn word(q: u32, max_len: usize) -> impl Strategy<Value = Word> {
    prop::collection::vec(0..q, 0..=max_len).prop_map(move |s| Word::new(q, s).unwrap())
}

fn triple() -> impl Strategy<Value = (Word, Word, Word)> {
    (2u32..=4).prop_flat_map(|q| (word(q, 8), word(q, 8), word(q, 8)))
}

fn equal_length_pair() -> impl Strategy<Value = (Word, Word)> {
    (2u32..=4, 0usize..=8).prop_flat_map(|(q, n)| {
        let w = prop::collection::vec(0..q, n).prop_map(move |s| Word::new(q, s).unwrap());
        (w.clone(), w)
    })
}

fn large_fields() -> &'static [Field] {
    static FIELDS: OnceLock<Vec<Field>> = OnceLock::new();
    FIELDS.get_or_init(|| {
        [1u64 << 20, 1 << 16, 3u64.pow(12), 65521, 1_048_573]
            .iter()
            .map(|&q| Field::of_order(q).unwrap())
            .collect()
    })
}

fn binary_words(n: usize) -> Vec<Word> {
    (0..1u32 << n)
        .map(|x| Word::new(2, (0..n).map(|i| x >> i & 1).collect()).unwrap())
        .collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(1000))]

    #[test]
    fn insdel_is_a_metric((u, v, w) in triple()) {
        let d = |a: &Word, b: &Word| insdel_distance(a, b).unwrap();
        prop_assert_eq!(d(&u, &u), 0);
        prop_assert_eq!(d(&u, &v) == 0, u == v);
        prop_assert_eq!(d(&u, &v), d(&v, &u));
        prop_assert!(d(&u, &w) <= d(&u, &v) + d(&v, &w));
        prop_assert_eq!(lcs_length(&u, &v).unwrap(), lcs_length(&v, &u).unwrap());
        prop_assert_eq!(lcs_length(&u, &u).unwrap(), u.len());
    }

    #[test]
    fn insdel_at_most_twice_hamming((u, v) in equal_length_pair()) {
        prop_assert!(insdel_distance(&u, &v).unwrap() <= 2 * hamming_distance(&u, &v).unwrap());
    }

    #[test]
    fn sampled_large_field_axioms(which in 0usize..5, seeds in prop::array::uniform3(any::<u64>())) {
        let f = &large_fields()[which];
        let order = f.order() as u64;
        let [a, b, c] = seeds.map(|s| f.elem(s % order).unwrap());
        prop_assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
        prop_assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
        prop_assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
        prop_assert_eq!(f.add(a, f.neg(a)), f.zero());
        if !a.is_zero() {
            prop_assert_eq!(f.mul(a, f.inv(a).unwrap()), f.one());
        }
    }

    #[test]
    fn polynomial_division(order in prop::sample::select(vec![2u64, 7, 9, 16, 101]),
                           a in prop::collection::vec(any::<u64>(), 0..8),
                           b in prop::collection::vec(any::<u64>(), 1..5)) {
        let f = Field::of_order(order).unwrap();
        let pa = Poly::from_codes(&f, &a.iter().map(|x| x % order).collect::<Vec<_>>()).unwrap();
        let pb = Poly::from_codes(&f, &b.iter().map(|x| x % order).collect::<Vec<_>>()).unwrap();
        prop_assume!(!pb.is_zero());
        let (quot, rem) = pa.div_rem(&pb).unwrap();
        prop_assert_eq!(quot.mul(&pb).unwrap().add(&rem).unwrap(), pa);
        prop_assert!(rem.degree().is_none_or(|d| d < pb.degree().unwrap()));
    }
}

#[test]
fn insdel_metric_exhaustive_binary() {
    let words: Vec<Word> = binary_words(3).into_iter().chain(binary_words(4)).collect();
    let d = |a: &Word, b: &Word| insdel_distance(a, b).unwrap();
    for u in &words {
        for v in &words {
            assert_eq!(d(u, v), d(v, u));
            assert_eq!(d(u, v) == 0, u == v);
            for w in &words {
                assert!(d(u, w) <= d(u, v) + d(v, w));
            }
        }
    }
}

#[test]
fn sorted_words_carry_l1_distance() {
    for q in 1..=4 {
        for n in 0..=6 {
            let space: Vec<Composition> = johnson_space(q, n).collect();
            for a in &space {
                let w = psi(a);
                assert!(w.is_sorted());
                assert_eq!(&phi(&w), a);
                for b in &space {
                    assert_eq!(
                        l1_distance(a, b).unwrap(),
                        insdel_distance(&w, &psi(b)).unwrap() as u64
                    );
                }
            }
        }
    }
}

#[test]
fn lifted_distance_equals_source_distance() {
    for (q, n) in [(2u32, 4u32), (3, 3), (4, 2)] {
        let space: Vec<Composition> = johnson_space(q, n).collect();
        let picked: Vec<Composition> = space.iter().step_by(2).cloned().collect();
        let source = Code::cwl1(q, n, picked).unwrap();
        let lifted = lift(&source, u128::MAX).unwrap();
        assert_eq!(lifted.report.min_insdel, lifted.report.min_l1);
        assert!(lifted.code.words().unwrap().iter().all(Word::is_sorted));
    }
}

#[test]
fn exact_values_respect_bounds() {
    for q in [2u32, 3] {
        for n in 1..=5u32 {
            for d in (2..=2 * n).step_by(2) {
                let exact = BigUint::from(exact_iq(q, n, d, None).unwrap().size);
                let (sub_singleton, _) = sub_singleton_bound(q, n, d).unwrap();
                let singleton = singleton_insdel(q, n, d).unwrap();
                assert!(
                    exact <= sub_singleton && sub_singleton <= singleton,
                    "q={q} n={n} d={d}: {exact} {sub_singleton} {singleton}"
                );
                if d > 2 && d < 2 * n {
                    assert!(exact < singleton, "q={q} n={n} d={d}");
                }
                if d == 2 {
                    assert_eq!(exact, BigUint::from(q).pow(n));
                }
                if d == 2 * n {
                    assert_eq!(exact, BigUint::from(q));
                }
            }
        }
    }
}

#[test]
fn near_maximal_distance_caps() {
    for n in [3u32, 4] {
        let size = exact_iq(2, n, 2 * n - 2, None).unwrap().size as u64;
        assert!(size <= near_maximal_distance_cap(2));
        assert_eq!(near_maximal_distance_cap(2), 3);
        assert!(size <= 2);
    }
}
