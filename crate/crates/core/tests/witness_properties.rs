use polyimage::exact::{rat, MPoly, QuadExt, Rat};
use polyimage::oracle::{directed_hausdorff, hausdorff, winding_number, SampleCloud};
use polyimage::witness::{laurent_from_real, real_from_laurent, sphere_normal_form, Gauss, LaurentPoly};
use proptest::prelude::*;

fn q(n: i64, d: i64) -> QuadExt {
    QuadExt::from(rat(n, d))
}

fn laurent(max_k: i32) -> impl Strategy<Value = LaurentPoly> {
    prop::collection::vec((-max_k..=max_k, -4i64..=4, -4i64..=4, 1i64..=3), 1..=5).prop_map(|terms| {
        let mut l = LaurentPoly::zero();
        for (k, re, im, d) in terms {
            l.add_term(k, Gauss::new(q(re, d), q(im, d)));
        }
        l
    })
}

fn sphere_poly() -> impl Strategy<Value = MPoly<QuadExt>> {
    prop::collection::vec(((0u32..=3, 0u32..=3, 0u32..=4), -5i64..=5), 1..=6).prop_map(|terms| {
        let mut p = MPoly::zero(3);
        for ((a, b, c), v) in terms {
            p.add_term(vec![a, b, c], q(v, 1));
        }
        p
    })
}

/// Rational point of the unit sphere by inverse stereographic projection.
fn sphere_point(u: Rat, v: Rat) -> Vec<QuadExt> {
    let s = u.clone() * u.clone() + v.clone() * v.clone();
    let den = s.clone() + rat(1, 1);
    [rat(2, 1) * u / den.clone(), rat(2, 1) * v / den.clone(), (s - rat(1, 1)) / den]
        .into_iter()
        .map(QuadExt::from)
        .collect()
}

fn cloud(pts: &[(f64, f64)]) -> SampleCloud {
    let points: Vec<Vec<f64>> = pts.iter().map(|&(x, y)| vec![x, y]).collect();
    let params: Vec<f64> = (0..pts.len()).map(|i| i as f64).collect();
    SampleCloud::from_points(&points, &params, false).unwrap()
}

fn points() -> impl Strategy<Value = Vec<(f64, f64)>> {
    prop::collection::vec((-10.0f64..10.0, -10.0f64..10.0), 1..40)
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(64))]

    #[test]
    fn laurent_round_trip(l in laurent(4)) {
        let g = real_from_laurent(&l).unwrap();
        prop_assert_eq!(laurent_from_real(&g).unwrap(), l);
    }

    #[test]
    fn circle_map_agrees_with_laurent_values(l in laurent(4), theta in 0.0f64..std::f64::consts::TAU) {
        let g = real_from_laurent(&l).unwrap();
        let v = g.eval_f64(&[theta.cos(), theta.sin()]);
        let (re, im) = l.eval_angle(theta);
        let scale = 1.0 + re.abs() + im.abs();
        prop_assert!((v[0] - re).abs() <= 1e-9 * scale && (v[1] - im).abs() <= 1e-9 * scale);
    }

    #[test]
    fn laurent_products_stay_on_the_circle_map(a in laurent(2), b in laurent(2)) {
        let ab = &a * &b;
        let ga = real_from_laurent(&a).unwrap();
        let gb = real_from_laurent(&b).unwrap();
        let gab = real_from_laurent(&ab).unwrap();
        let pt = [q(3, 5), q(4, 5)];
        let (x, y) = (ga.eval(&pt), gb.eval(&pt));
        let re = x[0].clone() * y[0].clone() - x[1].clone() * y[1].clone();
        let im = x[0].clone() * y[1].clone() + x[1].clone() * y[0].clone();
        prop_assert_eq!(gab.eval(&pt), vec![re, im]);
    }

    #[test]
    fn sphere_normal_form_is_idempotent_and_exact(p in sphere_poly(), u in -5i64..=5, v in -5i64..=5, d in 1i64..=4) {
        let n = sphere_normal_form(&p);
        prop_assert_eq!(sphere_normal_form(&n), n.clone());
        prop_assert!(n.degree_in(2) <= 1);
        let x = sphere_point(rat(u, d), rat(v, d));
        prop_assert_eq!(n.eval(&x), p.eval(&x));
    }

    #[test]
    fn dominant_term_fixes_the_winding_number(l in laurent(3), k in -3i32..=3) {
        let others: f64 = l.terms().filter(|(j, _)| *j != k).map(|(_, c)| {
            let (re, im) = c.to_f64();
            re.hypot(im)
        }).sum();
        let mut m = l.clone();
        let lead = m.coeff(k);
        m.add_term(k, Gauss::real(q((others.ceil() as i64) + 1, 1)) - lead);
        prop_assume!(!m.coeff(k).is_zero());
        prop_assert_eq!(winding_number(|t| m.eval_angle(t), 256).unwrap(), k as i64);
    }

    #[test]
    fn hausdorff_is_a_metric(a in points(), b in points(), c in points()) {
        let (ca, cb, cc) = (cloud(&a), cloud(&b), cloud(&c));
        prop_assert_eq!(hausdorff(&ca, &ca).unwrap(), 0.0);
        let ab = hausdorff(&ca, &cb).unwrap();
        prop_assert_eq!(ab, hausdorff(&cb, &ca).unwrap());
        prop_assert!(ab >= directed_hausdorff(&ca, &cb));
        let bc = hausdorff(&cb, &cc).unwrap();
        let ac = hausdorff(&ca, &cc).unwrap();
        prop_assert!(ac <= ab + bc + 1e-12);
    }
}

#[test]
fn zero_laurent_polynomial_maps_to_zero() {
    assert!(real_from_laurent(&LaurentPoly::zero()).unwrap().is_zero());
}
