use hecke_core::alcove::{associated_critical_point, block_criteria, canonical_path, LatticePoint};
use hecke_core::arith::{Poly, RationalFunction as Rf};
use hecke_core::tableaux::{enumerate_standard_tableaux, Partition, StandardTableau};
use proptest::prelude::*;

fn small_poly() -> impl Strategy<Value = Poly> {
    prop::collection::vec(-4i64..=4, 1..5).prop_map(|c| Poly::from_ints(&c))
}

fn nonzero_rf() -> impl Strategy<Value = Rf> {
    (small_poly(), small_poly())
        .prop_filter("nonzero", |(p, q)| !p.is_zero() && !q.is_zero())
        .prop_map(|(p, q)| Rf::new(p, q).unwrap())
}

fn partition(max_n: u32, max_rows: usize) -> impl Strategy<Value = Partition> {
    prop::collection::vec(0u32..=max_n, 0..=max_rows)
        .prop_map(|v| Partition::from_unsorted(&v))
        .prop_filter("size", move |p| p.size() <= max_n)
}

/// Interior points with `y_k` in `0..3` and consecutive gaps in `l..l+2l`.
fn interior_point(l: u32, k: usize) -> impl Strategy<Value = LatticePoint> {
    let l = l as i64;
    (0i64..3, prop::collection::vec(l..3 * l, k - 1)).prop_map(|(last, gaps)| {
        let mut y = vec![last];
        for g in gaps.iter().rev() {
            y.push(y.last().unwrap() + g);
        }
        y.reverse();
        LatticePoint(y)
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn division_inverts_multiplication(a in nonzero_rf(), b in nonzero_rf()) {
        prop_assert_eq!(&(&a * &b) / &b, a.clone());
        prop_assert!((&a * &a.inv().unwrap()).is_one());
    }

    #[test]
    fn root_evaluation_is_multiplicative(a in nonzero_rf(), b in nonzero_rf(), l in 2u32..=4) {
        prop_assume!(a.is_evaluable_at(l) && b.is_evaluable_at(l));
        let ab = &a * &b;
        prop_assert!(ab.is_evaluable_at(l));
        prop_assert_eq!(
            ab.evaluate_at_root(l).unwrap(),
            &a.evaluate_at_root(l).unwrap() * &b.evaluate_at_root(l).unwrap()
        );
    }

    #[test]
    fn composing_with_a_power_is_a_homomorphism(a in nonzero_rf(), b in nonzero_rf(), k in 1u32..=3) {
        prop_assert_eq!((&a * &b).compose_power(k), &a.compose_power(k) * &b.compose_power(k));
        prop_assert_eq!((&a + &b).compose_power(k), &a.compose_power(k) + &b.compose_power(k));
    }

    #[test]
    fn hook_formula_counts_tableaux(lambda in partition(7, 4)) {
        let ts = enumerate_standard_tableaux(&lambda, &Partition::empty()).unwrap();
        prop_assert_eq!(ts.len() as u64, lambda.hook_length_count());
    }

    #[test]
    fn conjugation_is_an_involution(lambda in partition(12, 6)) {
        prop_assert_eq!(lambda.conjugate().conjugate(), lambda.clone());
        prop_assert_eq!(lambda.conjugate().size(), lambda.size());
    }

    #[test]
    fn cores_have_no_rim_hooks(lambda in partition(12, 6), l in 2u32..=4) {
        let core = lambda.l_core(l);
        prop_assert!(core.rim_hook_removals(l).is_empty());
        prop_assert_eq!((lambda.size() - core.size()) % l, 0);
    }

    #[test]
    fn row_words_round_trip(lambda in partition(7, 4), pick in any::<prop::sample::Index>()) {
        let ts = enumerate_standard_tableaux(&lambda, &Partition::empty()).unwrap();
        prop_assume!(!ts.is_empty());
        let t: &StandardTableau = pick.get(&ts);
        let back = StandardTableau::from_row_word(t.inner(), &t.row_word()).unwrap();
        prop_assert_eq!(&back, t);
        for i in 1..t.size() {
            if let Some(s) = t.swap(i) {
                prop_assert_eq!(s.swap(i), Some(t.clone()));
                prop_assert_eq!(s.axial_distance(i, i + 1).unwrap(), -t.axial_distance(i, i + 1).unwrap());
            }
        }
    }

    #[test]
    fn canonical_paths_are_valid(
        (l, k, y) in (2u32..=4, 2usize..=4).prop_flat_map(|(l, k)| (Just(l), Just(k), interior_point(l, k)))
    ) {
        let (c, r) = associated_critical_point(&y, l).unwrap();
        prop_assert!(c.in_d());
        prop_assert!(c.0.windows(2).all(|w| (w[0] - w[1]) % l as i64 == 0));
        prop_assert!(r.iter().all(|&ri| (0..l as i64).contains(&ri)));
        let (path, _) = canonical_path(&y, l).unwrap();
        prop_assert!(path.is_valid());
        prop_assert_eq!(path.end(), y.clone());
        prop_assert_eq!(path.start.clone(), c.clone());
        let bound = (l as i64 - 1) * (k * (k - 1) / 2) as i64;
        prop_assert!(y.size() - c.size() <= bound);
        prop_assert_eq!(path.len() as i64, y.size() - c.size());
    }

    #[test]
    fn canonical_path_prefixes_stay_in_the_chamber((l, y) in (2u32..=4).prop_flat_map(|l| (Just(l), interior_point(l, 3)))) {
        let (path, r) = canonical_path(&y, l).unwrap();
        let pts = path.points();
        prop_assert_eq!(pts.len(), 1 + 2 * r[1] as usize + r[0] as usize);
        for p in &pts {
            prop_assert!(p.in_d());
        }
    }

    #[test]
    fn block_criteria_agree(lambda in partition(8, 3), l in 2u32..=4) {
        let n = lambda.size();
        for mu in Partition::all_with_max_rows(n, 3) {
            let [a, b, c] = block_criteria(&lambda, &mu, l, 3).unwrap();
            prop_assert!(a == b && b == c, "{} {} l={}: {:?}", lambda, mu, l, [a, b, c]);
        }
    }
}
