use num_bigint::BigInt;
use num_rational::BigRational;
use proptest::prelude::*;
use solweights::lie::{degree_v2, value_v2, Branch, CycloDegree};
use solweights::par;
use solweights::poly::{interpolate, GoldenTable, LinearForm, RationalPoly};

fn small_rat() -> impl Strategy<Value = BigRational> {
    (-50i64..50, 1i64..12).prop_map(|(n, d)| BigRational::new(n.into(), d.into()))
}

fn poly(max_deg: usize) -> impl Strategy<Value = RationalPoly> {
    prop::collection::vec(small_rat(), 0..=max_deg + 1).prop_map(RationalPoly::new)
}

fn cyclo() -> impl Strategy<Value = CycloDegree> {
    (small_rat().prop_filter("nonzero", |c| *c != BigRational::from_integer(0.into())), any::<bool>(), 0u32..10, prop::collection::btree_map(prop::sample::select(vec![1u32, 2, 3, 4, 6, 7, 14]), 1u32..4, 0..4))
        .prop_map(|(c, unit7, qpow, phi)| CycloDegree { c, unit7, qpow, phi })
}

proptest! {
    #[test]
    fn interpolation_recovers_cubics(p in poly(3)) {
        let samples: Vec<_> = (1..=5u32).map(|l| {
            let x = BigRational::from_integer(BigInt::from(1u32 << l));
            (x.clone(), p.eval(&x))
        }).collect();
        prop_assert_eq!(interpolate(&samples, 3).unwrap(), p.clone());
        let fit = interpolate(&samples[..4], 3).unwrap();
        for (x, y) in &samples {
            prop_assert_eq!(&fit.eval(x), y);
        }
    }

    #[test]
    fn polynomial_arithmetic(a in poly(3), b in poly(3), x in -20i64..20) {
        prop_assert_eq!((&a + &b).eval_int(x), a.eval_int(x) + b.eval_int(x));
        prop_assert!((&a - &a).is_zero());
        let text = a.to_coeff_string();
        prop_assert_eq!(RationalPoly::parse_coeffs(text.split_whitespace()).unwrap(), a);
    }

    #[test]
    fn linear_forms_round_trip(a in -5i64..5, b in -20i64..20) {
        let f = LinearForm::new(a, b);
        prop_assert_eq!(f.to_string().parse::<LinearForm>().unwrap(), f);
    }

    #[test]
    fn valuations_are_additive_and_match_values(a in cyclo(), b in cyclo(), q in prop::sample::select(vec![3i64, 5, 7, 9, 17, 23, 31, 41, 47, 97, 127])) {
        prop_assert_eq!(a.to_string().parse::<CycloDegree>().unwrap(), a.clone());
        let qb = BigInt::from(q);
        let branch = Branch::of_q(&qb).unwrap();
        let l = Branch::level_of(&qb).unwrap();
        let va = degree_v2(&a, branch).unwrap();
        let vb = degree_v2(&b, branch).unwrap();
        prop_assert_eq!(degree_v2(&a.mul(&b), branch).unwrap(), va + vb);
        prop_assert_eq!(value_v2(&a.eval_without_unit(&qb).unwrap()), Some(va.at(l)));
    }

    #[test]
    fn parallel_and_sequential_maps_agree(v in prop::collection::vec(any::<u32>(), 0..200)) {
        let f = |x: &u32| x.wrapping_mul(2654435761) >> 3;
        let seq: Vec<u32> = v.iter().map(f).collect();
        prop_assert_eq!(par::map_collect(v, f), seq);
    }
}

#[test]
fn golden_tables_round_trip_through_text_and_json() {
    for t in [GoldenTable::table1(), GoldenTable::table2(), GoldenTable::table3()] {
        assert_eq!(GoldenTable::parse(&t.to_text()).unwrap(), t);
        let js = serde_json::to_string(&t).unwrap();
        assert_eq!(serde_json::from_str::<GoldenTable>(&js).unwrap(), t);
    }
}
