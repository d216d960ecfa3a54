mod common;

use batchcode::algebra::{in_span, CoordSet, Field};
use batchcode::batch::{serve_query, verify_batch, QueryMultiset};
use batchcode::bounds::{
    cor1_n_lower, cor1_term, cor2_term, singleton_d, thm1_d_upper, asymptotic_delta_upper,
};
use batchcode::cli::{parse_matrix_file, render_matrix_file, TableSpec};
use batchcode::recovery::{determined_witnesses, is_recovery_set, minimal_recovery_sets};
use batchcode::subcode::{run_algorithm, DefaultChooser};
use batchcode::{LinearCode, RecoveryCatalog};
use common::BinCode;
use num_rational::Ratio;
use proptest::prelude::*;

fn bin_code() -> impl Strategy<Value = BinCode> {
    (1usize..=3)
        .prop_flat_map(|k| (Just(k), k..=6))
        .prop_flat_map(|(k, n)| (Just(k), Just(n), prop::collection::vec(0u64..1 << n, k)))
        .prop_map(|(k, n, rows)| BinCode { k, n, rows })
        .prop_filter("full rank", BinCode::is_injective)
}

fn mask_to_set(mask: u64) -> CoordSet {
    CoordSet::from_mask(mask)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn batch_monotone_in_t_and_r(code in bin_code(), r in 1usize..=2, t in 1usize..=2) {
        let lin = code.to_linear();
        let here = verify_batch(&lin, r, t).unwrap().holds;
        if verify_batch(&lin, r, t + 1).unwrap().holds {
            prop_assert!(here);
        }
        if here {
            prop_assert!(verify_batch(&lin, r + 1, t).unwrap().holds);
        }
    }

    #[test]
    fn batch_matches_oracle(code in bin_code(), r in 1usize..=3, t in 1usize..=3) {
        let lin = code.to_linear();
        prop_assert_eq!(verify_batch(&lin, r, t).unwrap().holds, common::naive_batch(&code, r, t));
    }

    #[test]
    fn query_order_is_irrelevant(code in bin_code(), raw in prop::collection::vec(0usize..3, 1..=3), seed in any::<u64>()) {
        let k = code.k;
        let indices: Vec<usize> = raw.iter().map(|i| i % k).collect();
        let mut shuffled = indices.clone();
        shuffled.rotate_left((seed as usize) % indices.len());
        let a = QueryMultiset::new(indices, k).unwrap();
        let b = QueryMultiset::new(shuffled, k).unwrap();
        prop_assert_eq!(&a, &b);
        let catalog = RecoveryCatalog::build(&code.to_linear(), 2).unwrap();
        let served = serve_query(&catalog, &a);
        if let Some(assignment) = served {
            let mut used = CoordSet::EMPTY;
            for (set, &i) in assignment.sets.iter().zip(a.indices()) {
                prop_assert!(set.coords.is_disjoint(used));
                prop_assert!(set.coords.len() <= 2);
                prop_assert!(code.recovers(i, set.coords.mask()));
                used = used.union(set.coords);
            }
        }
    }

    #[test]
    fn batch_implies_distance_at_least_t(code in bin_code(), r in 1usize..=2, t in 1usize..=3) {
        let lin = code.to_linear();
        if verify_batch(&lin, r, t).unwrap().holds {
            prop_assert!(lin.min_distance().unwrap() >= t);
        }
        prop_assert_eq!(lin.min_distance().unwrap(), code.min_distance());
    }

    #[test]
    fn recovery_is_span_membership(code in bin_code(), mask in 0u64..64, i in 0usize..3) {
        let i = i % code.k;
        let mask = mask & ((1 << code.n) - 1);
        let lin = code.to_linear();
        prop_assert_eq!(is_recovery_set(&lin, i, mask_to_set(mask)).unwrap(), code.recovers(i, mask));
    }

    #[test]
    fn minimal_sets_match_oracle(code in bin_code(), r in 1usize..=3) {
        let lin = code.to_linear();
        for i in 0..code.k {
            let got: Vec<u64> = minimal_recovery_sets(&lin, i, r).unwrap().iter().map(|s| s.coords.mask()).collect();
            let mut want = common::naive_minimal_sets(&code, i, r);
            want.sort_by_key(|&m| mask_to_set(m));
            prop_assert_eq!(got, want);
        }
    }

    #[test]
    fn witnesses_are_determined(code in bin_code(), i in 0usize..3, t in 2usize..=3) {
        let i = i % code.k;
        let lin = code.to_linear();
        let catalog = RecoveryCatalog::build(&lin, code.n).unwrap();
        let Some(sets) = catalog.first_disjoint_family(i, t) else { return Ok(()); };
        let witnesses = determined_witnesses(&lin, i, &sets).unwrap();
        prop_assert_eq!(witnesses.len(), t - 1);
        let mut fixed = sets[0].mask();
        for (s, &l) in sets[1..].iter().zip(&witnesses) {
            prop_assert!(s.contains(l));
            prop_assert!(code.determined(l, s.without(l).mask(), i));
            fixed |= s.without(l).mask();
        }
        for &l in &witnesses {
            // x_i itself is pinned down by the first set.
            prop_assert!(code.determined(l, fixed, i));
            prop_assert!(code.determined(l, fixed | sets[0].mask(), i));
        }
    }

    #[test]
    fn span_matches_enumeration(
        q in prop::sample::select(vec![2usize, 3, 4, 5, 7]),
        basis in prop::collection::vec(prop::collection::vec(0u8..7, 3), 0..=2),
        v in prop::collection::vec(0u8..7, 3),
    ) {
        let field = Field::new(q).unwrap();
        let m = q as u8;
        let basis: Vec<Vec<u8>> = basis.into_iter().map(|b| b.into_iter().map(|x| x % m).collect()).collect();
        let v: Vec<u8> = v.into_iter().map(|x| x % m).collect();
        let mut reachable = false;
        let combos = q.pow(basis.len() as u32);
        for c in 0..combos {
            let mut acc = vec![0u8; 3];
            let mut rest = c;
            for b in &basis {
                let coef = (rest % q) as u8;
                rest /= q;
                for (a, &x) in acc.iter_mut().zip(b) {
                    *a = field.add(*a, field.mul(coef, x));
                }
            }
            reachable |= acc == v;
        }
        prop_assert_eq!(in_span(&field, &v, &basis).unwrap(), reachable);
    }

    #[test]
    fn bound_relations(k in 1usize..40, extra in 0usize..30, r in 1usize..6, t in 1usize..6, d in 1usize..10) {
        let n = k + extra;
        prop_assert!(thm1_d_upper(n, k, r, t).unwrap() <= singleton_d(n, k).unwrap());
        prop_assert!(cor1_n_lower(k, d, r, t + 1).unwrap().value >= cor1_n_lower(k, d, r, t).unwrap().value);
        for beta in 1..=t {
            if let Some(c2) = cor2_term(k, d, r, beta) {
                prop_assert!(c2 >= cor1_term(k, d, r, beta));
            }
        }
    }

    #[test]
    fn asymptotic_identity(m in 1i64..8, extra in 0usize..40, r in 1usize..5, t in 1usize..5) {
        let denom = (r * t - t + 1) as i64;
        let k = (m * denom) as usize;
        let n = k + extra;
        let thm1 = Ratio::new(thm1_d_upper(n, k, r, t).unwrap(), n as i64);
        let asym = asymptotic_delta_upper(Ratio::new(k as i64, n as i64), r, t).unwrap();
        prop_assert_eq!(thm1 - asym, Ratio::new(t as i64, n as i64));
    }

    #[test]
    fn matrix_file_round_trip(
        q in prop::sample::select(vec![2usize, 3, 4, 8, 11, 16, 256]),
        k in 1usize..=3,
        extra in 0usize..=4,
        seed in prop::collection::vec(any::<u8>(), 21),
    ) {
        let n = k + extra;
        let field = Field::new(q).unwrap();
        let rows: Vec<Vec<usize>> = (0..k)
            .map(|i| (0..n).map(|j| if j < k { usize::from(i == j) } else { seed[i * 7 + j] as usize % q }).collect())
            .collect();
        let code = LinearCode::from_rows(field, &rows).unwrap();
        let text = render_matrix_file(&code);
        prop_assert_eq!(parse_matrix_file(&text).unwrap(), code);
    }

    #[test]
    fn step_count_lower_bound(code in bin_code(), r in 1usize..=2, t in 1usize..=3) {
        let lin = code.to_linear();
        prop_assume!(verify_batch(&lin, r, t).unwrap().holds);
        let trace = run_algorithm(&lin, r, t, &mut DefaultChooser).unwrap();
        let floor = common::ceil_div(code.k as i64, (r * t - t + 1) as i64) - 1;
        prop_assert!(trace.tau as i64 >= floor);
        prop_assert!(trace.is_valid(), "{:?}", trace.violations(2));
    }
}

#[test]
fn table_is_byte_stable() {
    let a = TableSpec::default().render().unwrap();
    let b = TableSpec::default().render().unwrap();
    assert_eq!(a, b);
}
