use proptest::prelude::*;
use zetakit::arith_equiv::{
    factor_degrees_mod_p, gassmann_check, gl32_demo, group_closure, splitting_types,
    splitting_types_equal, NumberFieldPoly, Permutation, Subgroup,
};
use zetakit::fp_poly::{is_prime, PrimeField};

fn poly() -> impl Strategy<Value = NumberFieldPoly> {
    (2usize..7)
        .prop_flat_map(|d| prop::collection::vec(-20i64..20, d))
        .prop_filter_map("zero constant term", |tail| {
            let mut c = vec![1];
            c.extend(tail);
            NumberFieldPoly::from_high_to_low(&c).ok()
        })
}

fn squarefree(d: i64) -> bool {
    let n = d.unsigned_abs();
    (2..).take_while(|k| k * k <= n).all(|k| n % (k * k) != 0)
}

fn random_perm(seed: &[usize], n: usize) -> Permutation {
    let mut images: Vec<usize> = (0..n).collect();
    for (i, &r) in seed.iter().enumerate().take(n) {
        images.swap(i, i + r % (n - i));
    }
    Permutation::from_images(images).unwrap()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(60))]

    #[test]
    fn clean_degrees_sum_to_degree(f in poly(), p in 2u64..400) {
        prop_assume!(is_prime(p));
        let t = factor_degrees_mod_p(&f, p).unwrap();
        if t.is_clean() {
            prop_assert_eq!(t.degrees.iter().sum::<usize>(), f.degree());
        }
    }

    #[test]
    fn quadratic_frobenius_matches_euler(d in -200i64..200, p in 3u64..5000) {
        prop_assume!(d != 0 && squarefree(d) && is_prime(p) && (d.unsigned_abs() % p != 0));
        let f = NumberFieldPoly::from_high_to_low(&[1, 0, d]).unwrap();
        let t = factor_degrees_mod_p(&f, p).unwrap();
        prop_assert!(t.is_clean());
        let field = PrimeField::new(p).unwrap();
        let minus_d = (-d).rem_euclid(p as i64) as u64;
        let qr = field.pow(minus_d, (p - 1) / 2) == 1;
        prop_assert_eq!(t.degrees == vec![1, 1], qr);
    }

    #[test]
    fn comparison_symmetric_reflexive_deterministic(f in poly(), g in poly()) {
        let fg = splitting_types_equal(&f, &g, 300).unwrap();
        let gf = splitting_types_equal(&g, &f, 300).unwrap();
        prop_assert_eq!(&fg, &gf);
        prop_assert_eq!(&fg, &splitting_types_equal(&f, &g, 300).unwrap());
        let ff = splitting_types_equal(&f, &f, 300).unwrap();
        prop_assert!(ff.agree);
        prop_assert_eq!(splitting_types(&f, 300).unwrap(), splitting_types(&f, 300).unwrap());
    }

    #[test]
    fn conjugate_subgroups_are_equivalent(
        gens in prop::collection::vec(prop::collection::vec(0usize..8, 6), 1..3),
        g_seed in prop::collection::vec(0usize..8, 6),
    ) {
        let n = 6;
        let group = group_closure(n, vec![
            Permutation::from_cycles(n, &[&[0, 1]]).unwrap(),
            Permutation::from_cycles(n, &[&[0, 1, 2, 3, 4, 5]]).unwrap(),
        ]).unwrap();
        let h_gens: Vec<Permutation> = gens.iter().map(|s| random_perm(s, n)).collect();
        let h1 = Subgroup::from_generators(&group, h_gens.clone()).unwrap();
        let g = random_perm(&g_seed, n);
        let conj: Vec<Permutation> = h_gens.iter().map(|h| h.conjugate_by(&g)).collect();
        let h2 = Subgroup::from_generators(&group, conj).unwrap();
        let r = gassmann_check(&group, &h1, &h2);
        prop_assert!(r.conjugate);
        prop_assert!(r.equivalent);
        prop_assert_eq!(h1.order(), h2.order());
    }
}

#[test]
fn gassmann_table_sums_to_orders() {
    let (g, h1, h2) = gl32_demo().unwrap();
    let r = gassmann_check(&g, &h1, &h2);
    assert_eq!(r.table.iter().map(|c| c.in_first).sum::<usize>(), h1.order());
    assert_eq!(r.table.iter().map(|c| c.in_second).sum::<usize>(), h2.order());
    assert_eq!(r.table.iter().map(|c| c.class_size).sum::<usize>(), g.order());
    let identity = &r.table[0];
    assert_eq!((identity.class_size, identity.in_first, identity.in_second), (1, 1, 1));
}
