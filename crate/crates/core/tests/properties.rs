use proptest::prelude::*;

use numsgp::cli::report::{self, Row};
use numsgp::closed_forms::{self, EvalMode};
use numsgp::herzog;
use numsgp::hilbert;
use numsgp::NumericalSemigroup;

/// Minimal generating sets with small entries.
fn semigroup() -> impl Strategy<Value = NumericalSemigroup> {
    prop::collection::vec(2i64..60, 2..5).prop_filter_map("gcd 1", |gens| {
        NumericalSemigroup::from_generating_set(&gens).ok()
    })
}

fn three_generated() -> impl Strategy<Value = NumericalSemigroup> {
    (2i64..40, 1i64..40, 1i64..40).prop_filter_map("minimal triple", |(a, x, y)| {
        NumericalSemigroup::new(&[a, a + x, a + x + y]).ok()
    })
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(200))]

    #[test]
    fn apery_set_invariants(h in semigroup(), k in 0usize..4) {
        let base = h.generators()[k % h.embedding_dimension()];
        let ap = h.apery_set(base).unwrap();
        prop_assert!(ap.satisfies_invariants(&h));
        for (i, &w) in ap.omegas().iter().enumerate() {
            prop_assert_eq!(w.rem_euclid(base), i as i64);
            prop_assert!(h.contains(w));
            prop_assert!(!h.contains(w - base));
        }
        prop_assert_eq!(h.genus_by_apery(base).unwrap(), h.genus_by_gaps());
        prop_assert_eq!(ap.max() - base, h.frobenius());
    }

    #[test]
    fn frobenius_and_genus(h in semigroup()) {
        let f = h.frobenius();
        let g = h.genus();
        prop_assert!(!h.contains(f));
        prop_assert!((f + 1..f + 1 + h.multiplicity()).all(|x| h.contains(x)));
        prop_assert_eq!(g, h.genus_by_gaps());
        prop_assert!(2 * g > f);
        prop_assert_eq!(h.is_symmetric(), 2 * g == f + 1);
        for x in 0..=f {
            prop_assert!(h.contains(x) != h.contains(f - x) || !h.is_symmetric());
        }
    }

    #[test]
    fn order_is_superadditive(h in semigroup(), x in 0i64..400, y in 0i64..400) {
        if let (Ok(ox), Ok(oy)) = (h.order(x), h.order(y)) {
            prop_assert!(h.order(x + y).unwrap() >= ox + oy);
        }
    }

    #[test]
    fn hilbert_function_and_e1(h in three_generated()) {
        let n1 = h.multiplicity();
        let mut prev = 0;
        for n in 0..8 {
            let hf = hilbert::hilbert_function(&h, n);
            prop_assert!(hf > prev);
            prop_assert!(hf - prev <= n1);
            prev = hf;
        }
        let e1 = hilbert::e1_by_genus(&h);
        prop_assert_eq!(hilbert::e1_by_apery_delta(&h).unwrap(), e1);
        prop_assert_eq!(hilbert::e1_by_hilbert_poly(&h).unwrap().e1, e1);
        let (lo, hi) = hilbert::kirby_bounds(&h);
        prop_assert!(lo <= e1 && e1 <= hi);
    }

    #[test]
    fn herzog_parameters_reproduce_invariants(h in three_generated()) {
        prop_assume!(!h.is_symmetric());
        let p = herzog::herzog_parameters(&h).unwrap();
        let gens = [h.generators()[0], h.generators()[1], h.generators()[2]];
        prop_assert!(p.all_positive());
        prop_assert!(p.degree_identities_hold(gens));
        prop_assert_eq!(herzog::frobenius_from_parameters(&h, &p).unwrap(), h.frobenius());
        prop_assert_eq!(herzog::genus_from_parameters(&h, &p).unwrap(), h.genus());
        match herzog::graded_cm_from_parameters(&p) {
            herzog::CmVerdict::CohenMacaulay => prop_assert!(herzog::graded_cm_oracle(&h)),
            herzog::CmVerdict::NotCohenMacaulay => prop_assert!(!herzog::graded_cm_oracle(&h)),
            herzog::CmVerdict::Undetermined => {}
        }
    }

    #[test]
    fn apery_min_formula_matches_oracle(a in 3i64..80, offset in 2i64..320) {
        let b = a + offset.min(4 * a);
        if let Ok(p) = closed_forms::family_decompose(a, b) {
            let h = NumericalSemigroup::new(&p.generators()).unwrap();
            prop_assert_eq!(p.apery_min_table().unwrap(), h.apery_multiplicity().omegas().to_vec());
        }
    }

    #[test]
    fn mainthm_formula_matches_oracle(a in 3i64..400, d in 2i64..30) {
        if closed_forms::mainthm_precondition(a, d).is_ok() {
            let h = NumericalSemigroup::new(&[a, a + 1, a + d]).unwrap();
            prop_assert_eq!(closed_forms::frobenius_mainthm(a, d, EvalMode::Strict).unwrap(), h.frobenius());
            prop_assert_eq!(hilbert::e1_mainthm(a, d, EvalMode::Strict).unwrap(), hilbert::e1_by_genus(&h));
        }
    }

    #[test]
    fn csv_and_json_round_trip(
        gens in prop::collection::vec(1i64..1000, 1..5),
        fam in prop::option::of((1i64..100, 1i64..100, 0i64..100, 0i64..100)),
        values in prop::option::of((-5i64..1000, -5i64..1000)),
        precond in any::<bool>(),
        note in prop::option::of("[a-z ,\"]{0,12}"),
    ) {
        let mut row = Row::new(&gens, "some-formula").precond(precond);
        if let Some((a, d, q, r)) = fam {
            row = row.family(a, d, q, r);
        }
        if let Some((f, o)) = values {
            row = row.values(f, o);
        }
        if let Some(n) = note {
            row = row.anomaly(n);
        }
        let rows = vec![row];
        let mut buf = Vec::new();
        report::write_csv(&rows, &mut buf).unwrap();
        let back = report::read_csv(&buf[..]).unwrap();
        // An empty anomaly string and no anomaly share the empty CSV field.
        let normalize = |mut r: Row| { if r.anomaly.as_deref() == Some("") { r.anomaly = None; } r };
        prop_assert_eq!(back.into_iter().map(normalize).collect::<Vec<_>>(), rows.clone().into_iter().map(normalize).collect::<Vec<_>>());
        let mut buf = Vec::new();
        report::write_json(&rows, &mut buf).unwrap();
        prop_assert_eq!(report::read_json(&buf[..]).unwrap(), rows);
    }
}
