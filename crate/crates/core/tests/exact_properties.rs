use num_traits::{One, Zero};
use polyimage::exact::{
    factor_rational, isolate_complex_roots, rat, resultant, squarefree_part, sturm_real_root_count, Ext, Rat, UPoly,
};
use proptest::prelude::*;

fn poly(deg: usize) -> impl Strategy<Value = UPoly> {
    prop::collection::vec(-5i64..=5, 1..=deg + 1)
        .prop_map(|c| UPoly::from_ints(&c))
        .prop_filter("nonconstant", |p| !p.is_constant())
}

fn distinct_roots() -> impl Strategy<Value = Vec<i64>> {
    prop::collection::btree_set(-6i64..=6, 1..=5).prop_map(|s| s.into_iter().collect())
}

fn from_roots(roots: &[Rat]) -> UPoly {
    roots.iter().fold(UPoly::one(), |acc, r| &acc * &UPoly::new(vec![-r.clone(), Rat::one()]))
}

fn sign(n: usize) -> Rat {
    if n % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn resultant_detects_common_factors(f in poly(3), g in poly(3), c in poly(2)) {
        let fc = &f * &c;
        let gc = &g * &c;
        prop_assert!(resultant(&fc, &gc).unwrap().is_zero());
        let r = resultant(&f, &g).unwrap();
        prop_assert_eq!(r.is_zero(), !f.gcd(&g).is_constant());
    }

    #[test]
    fn resultant_symmetry_and_multiplicativity(f in poly(3), g in poly(3), h in poly(2)) {
        let rfg = resultant(&f, &g).unwrap();
        let rgf = resultant(&g, &f).unwrap();
        prop_assert_eq!(rfg.clone(), sign(f.deg() * g.deg()) * rgf);
        let gh = &g * &h;
        prop_assert_eq!(resultant(&f, &gh).unwrap(), rfg * resultant(&f, &h).unwrap());
    }

    #[test]
    fn gcd_is_a_bezout_combination(f in poly(4), g in poly(4)) {
        let d = f.gcd(&g);
        prop_assert!(d.divides(&f) && d.divides(&g));
        prop_assert!(d.lc().is_one());
        let (dd, s, t) = f.ext_gcd(&g);
        prop_assert_eq!(&(&s * &f) + &(&t * &g), dd.clone());
        prop_assert_eq!(dd, d);
    }

    #[test]
    fn sturm_counts_constructed_roots(roots in distinct_roots(), extra in 0u32..2) {
        let rs: Vec<Rat> = roots.iter().map(|&r| rat(r, 1)).collect();
        // t^2 + 1 adds roots off the real line
        let f = &from_roots(&rs) * &UPoly::from_ints(&[1, 0, 1]).pow(extra);
        prop_assert_eq!(sturm_real_root_count(&f, &Ext::NegInf, &Ext::PosInf).unwrap(), rs.len());
        let lo = rat(roots[0], 1);
        // (lo, +inf) excludes the smallest root
        prop_assert_eq!(sturm_real_root_count(&f, &Ext::Fin(lo), &Ext::PosInf).unwrap(), rs.len() - 1);
    }

    #[test]
    fn factorization_reconstructs(f in poly(5), g in poly(2)) {
        let h = &(&f * &g) * &g;
        let factors = factor_rational(&h).unwrap();
        let prod = factors.iter().fold(UPoly::one(), |acc, (p, e)| &acc * &p.pow(*e as u32));
        prop_assert_eq!(prod, h.monic());
        for (p, _) in &factors {
            prop_assert!(p.gcd(&p.derivative()).is_constant());
        }
    }

    #[test]
    fn isolation_counts_every_root(f in poly(6)) {
        let s = squarefree_part(&f).unwrap();
        let roots = isolate_complex_roots(&s).unwrap();
        prop_assert_eq!(roots.len(), s.deg());
        let real = roots.iter().filter(|r| r.is_real()).count();
        prop_assert_eq!(real, sturm_real_root_count(&s, &Ext::NegInf, &Ext::PosInf).unwrap());
    }
}
