use proptest::prelude::*;

use homhopf::catalog::lookup;
use homhopf::constructions::{
    canonical_cocycles, cocycle_twist, drinfeld_double, dual, heisenberg_double, opposite, Precheck,
};
use homhopf::exactlin::{format_scalar, frac, parse_scalar, Elem, Matrix};
use homhopf::format::{parse, serialize, AlgebraFile, Block};
use homhopf::structures::{check_hopf_suite, sweep};
use homhopf::verify::compare_products;

fn gcd(a: usize, b: usize) -> usize {
    if b == 0 {
        a
    } else {
        gcd(b, a % b)
    }
}

fn twisted_cyclic() -> impl Strategy<Value = (usize, usize)> {
    (2usize..6, 1usize..6).prop_filter("exponent must be a unit", |&(n, k)| k < n && gcd(n, k) == 1)
}

fn rational() -> impl Strategy<Value = (i64, i64)> {
    (-20i64..21, 1i64..9)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(24))]

    #[test]
    fn scalars_round_trip_through_text((p, q) in rational()) {
        let x = frac(p, q);
        prop_assert_eq!(parse_scalar(&format_scalar(&x)).unwrap(), x);
    }

    #[test]
    fn slot_map_agrees_with_matrix_apply(v in proptest::collection::vec(rational(), 3), m in proptest::collection::vec(rational(), 9)) {
        let v: Vec<_> = v.into_iter().map(|(p, q)| frac(p, q)).collect();
        let m = Matrix::from_fn(3, 3, |i, j| { let (p, q) = m[i * 3 + j]; frac(p, q) });
        let via_elem = Elem::from_vector(&v).map(0, &m).to_dense();
        prop_assert_eq!(via_elem, m.apply(&v).unwrap());
    }

    #[test]
    fn merge_undoes_unmerge(v in proptest::collection::vec(rational(), 12)) {
        let v: Vec<_> = v.into_iter().map(|(p, q)| frac(p, q)).collect();
        let e = Elem::from_dense(&[12], &v);
        let split = e.unmerge(0, 3, 4);
        prop_assert_eq!(split.dims(), &[3, 4]);
        prop_assert_eq!(split.merge(0), e);
    }

    #[test]
    fn sweep_reports_the_first_failure(bad in proptest::collection::btree_set(0usize..60, 0..6)) {
        let entry = sweep("probe", &[3, 4, 5], |i| {
            let flat = (i[0] * 4 + i[1]) * 5 + i[2];
            let lhs = Elem::from_vector(&[frac(flat as i64 + 1, 1)]);
            let rhs = if bad.contains(&flat) { Elem::zero(&[1]) } else { lhs.clone() };
            (lhs, rhs)
        });
        match bad.iter().next() {
            None => prop_assert!(entry.passed),
            Some(&first) => {
                let w = entry.witness.expect("witness");
                prop_assert_eq!(w.index, vec![first / 20, (first / 5) % 4, first % 5]);
            }
        }
    }

    #[test]
    fn files_round_trip(entries in proptest::collection::btree_map((0usize..3, 0usize..3, 0usize..3), rational(), 0..12)) {
        let mut f = AlgebraFile::new("random", 3, None);
        let mut b = Block { shape: vec![3, 3, 3], entries: Default::default() };
        for ((i, j, k), (p, q)) in entries {
            if p != 0 {
                b.entries.insert(vec![i, j, k], frac(p, q));
            }
        }
        f.set_block("mul", b);
        let text = serialize(&f);
        prop_assert_eq!(parse(&text).unwrap(), f);
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(10))]

    #[test]
    fn twisted_group_algebras_are_hom_hopf((n, k) in twisted_cyclic()) {
        let h = lookup(&format!("zn_aut:{n}:{k}")).unwrap().hopf;
        prop_assert!(check_hopf_suite(&h).passed());
        prop_assert!(check_hopf_suite(&dual(&h).unwrap()).passed());
        prop_assert!(check_hopf_suite(&drinfeld_double(&h).unwrap()).passed());
    }

    #[test]
    fn left_twist_is_heisenberg_of_opposite((n, k) in twisted_cyclic()) {
        let a = lookup(&format!("zn_aut:{n}:{k}")).unwrap().hopf;
        let (sigma, _) = canonical_cocycles(&a).unwrap();
        let t = cocycle_twist(drinfeld_double(&a).unwrap().bialgebra(), &sigma, Precheck::Verify).unwrap();
        let h = heisenberg_double(&opposite(&a)).unwrap();
        prop_assert!(compare_products("product", t.mul(), h.mul()).passed);
    }

    #[test]
    fn sweedler_family_is_hom_hopf((p, q) in rational()) {
        prop_assume!(p != 0);
        let h = lookup(&format!("sweedler_hom:{p}/{q}")).unwrap().hopf;
        prop_assert!(check_hopf_suite(&h).passed());
        prop_assert!(check_hopf_suite(&drinfeld_double(&h).unwrap()).passed());
    }
}

#[test]
fn reports_do_not_depend_on_thread_count() {
    let d = drinfeld_double(&lookup("ax1").unwrap().hopf).unwrap();
    let run = |threads: usize| {
        let pool = rayon::ThreadPoolBuilder::new().num_threads(threads).build().unwrap();
        pool.install(|| serde_json::to_string(&check_hopf_suite(&d)).unwrap())
    };
    let one = run(1);
    assert_eq!(one, run(4));
    assert_eq!(one, run(7));
}
