use std::collections::BTreeSet;
use std::io::Write;
use std::panic::{catch_unwind, AssertUnwindSafe};
use std::time::{Duration, Instant};

use num_traits::{One, Zero};
use polyimage::classify::{classify, CaseLabel, Classification, Inv};
use polyimage::curve::{generic_fiber_degree, implicitize_plane, is_real_trace_bounded, PLANE_VARS};
use polyimage::exact::{
    factor_rational, rat, resultant, squarefree_part, sturm_real_root_count, Ext, QuadExt, Rat, UPoly,
};
use polyimage::oracle::{curve_hausdorff, probe_bounded, projective_line_degree, winding_number};
use polyimage::param::{parse_poly, HPoly2, Mobius, ProjParam, ProjPoint, SemialgInput};
use polyimage::witness::{
    force_interval_witness, laurent_from_real, real_from_laurent, verify_witness, witness_circle, witness_interval,
    Gauss, LaurentPoly, MapCurve, RealPolyMap, Source, Witness,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

type Check = Result<String, String>;

fn ensure(cond: bool, msg: impl Into<String>) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg.into())
    }
}

fn within(start: Instant, limit: Duration, what: &str) -> Result<f64, String> {
    let s = start.elapsed().as_secs_f64();
    ensure(start.elapsed() < limit, format!("{what} took {s:.2} s, limit {} s", limit.as_secs_f64()))?;
    Ok(s)
}

fn param(comps: &[&str]) -> ProjParam {
    ProjParam::from_strings(comps).unwrap()
}

fn circle() -> ProjParam {
    param(&["t0^2+t1^2", "2*t0*t1", "t1^2-t0^2"])
}

fn gerono() -> ProjParam {
    param(&["(t0^2+t1^2)^2", "t1^4-t0^4", "2*t0*t1*(t1^2-t0^2)"])
}

fn line() -> ProjParam {
    param(&["t0", "t1", "0"])
}

fn parabola() -> ProjParam {
    param(&["t0^2", "t0*t1", "t1^2"])
}

fn q(n: i64, d: i64) -> QuadExt {
    QuadExt::from(rat(n, d))
}

fn i_unit() -> QuadExt {
    QuadExt::sqrt(-1)
}

fn exact_points(c: &Classification) -> Result<BTreeSet<Vec<String>>, String> {
    c.report
        .fibers
        .iter()
        .map(|f| match &f.point {
            ProjPoint::Exact(v) => Ok(v.iter().map(|x| x.to_string()).collect()),
            ProjPoint::Approx(_) => Err("point at infinity is not exact".to_string()),
        })
        .collect()
}

fn key(v: &[QuadExt]) -> Vec<String> {
    v.iter().map(|x| x.to_string()).collect()
}

fn circle_fixture() -> Check {
    let start = Instant::now();
    let c = classify(&SemialgInput::full(circle())).map_err(|e| e.to_string())?;
    let expected: BTreeSet<_> =
        [key(&[q(0, 1), q(1, 1), i_unit()]), key(&[q(0, 1), q(1, 1), -i_unit()])].into_iter().collect();
    ensure(exact_points(&c)? == expected, format!("points at infinity {:?}", exact_points(&c)?))?;
    ensure(c.case_label == CaseLabel::Case3, format!("case {:?}", c.case_label))?;
    ensure(c.p_ball == Inv::Infinity, "p_ball should be infinity")?;
    ensure(c.p_sphere1 == Inv::One, "p_sphere1 should be 1")?;
    ensure(!c.p_sphere_k_ge2, "p_sphere_k_ge2 should be NO")?;
    ensure(c.r_ball_sphere == Inv::One && c.rs_ball_sphere == Inv::One, "r and rs should be 1")?;
    let s = within(start, Duration::from_secs(1), "classification")?;
    Ok(format!("CASE3, points [0:1:+-i], p_B=inf p_S=1 S^k=NO r=rs=1 in {s:.3} s"))
}

fn gerono_fixture() -> Check {
    let start = Instant::now();
    let input = SemialgInput::full(gerono());
    let c = classify(&input).map_err(|e| e.to_string())?;
    let expected: BTreeSet<_> = [key(&[q(0, 1), q(0, 1), q(1, 1)])].into_iter().collect();
    ensure(exact_points(&c)? == expected, format!("points at infinity {:?}", exact_points(&c)?))?;
    let f = &c.report.fibers[0];
    ensure(f.fiber.len() == 2 && f.fiber_is_conjugate_pair, "fiber should be a conjugate pair")?;
    ensure(c.case_label == CaseLabel::Case2, format!("case {:?}", c.case_label))?;
    ensure(c.p_sphere1 == Inv::One, "p_sphere1 should be 1")?;
    let implicit = implicitize_plane(&gerono()).map_err(|e| e.to_string())?;
    ensure(implicit == parse_poly("x0^2*(x2^2-x1^2)+x1^4", &PLANE_VARS).unwrap(), "implicit equation differs")?;
    let g = witness_circle(&input).map_err(|e| e.to_string())?;
    let vars = ["x", "y"];
    let comp = |s: &str| parse_poly(s, &vars).unwrap().map(|c| QuadExt::from(c.clone()));
    let paper = MapCurve::new(&RealPolyMap::new(Source::Sphere(1), vec![comp("x"), comp("x*y")]).unwrap());
    let h4 = curve_hausdorff(&MapCurve::new(&g), &paper, 10_000).map_err(|e| e.to_string())?;
    ensure(h4 <= 1e-3, format!("Hausdorff {h4:e} at 10^4 samples"))?;
    let s = within(start, Duration::from_secs(5), "exact part and 10^4-sample comparison")?;
    let fine = Instant::now();
    let h6 = curve_hausdorff(&MapCurve::new(&g), &paper, 1_000_000).map_err(|e| e.to_string())?;
    ensure(h6 <= 1e-6, format!("Hausdorff {h6:e} at 10^6 samples"))?;
    Ok(format!(
        "CASE2, point [0:0:1], conjugate fiber, implicit exact, Hausdorff {h4:.1e} (10^4, {s:.2} s) {h6:.1e} (10^6, {:.2} s)",
        fine.elapsed().as_secs_f64()
    ))
}

fn segment_fixture() -> Check {
    let input = SemialgInput::arc(line(), rat(-1, 1), rat(1, 1)).map_err(|e| e.to_string())?;
    let c = classify(&input).map_err(|e| e.to_string())?;
    ensure(c.case_label == CaseLabel::Case1, format!("case {:?}", c.case_label))?;
    ensure(c.p_ball == Inv::One && c.p_sphere1 == Inv::One && c.p_sphere_k_ge2, "p_B, p_S, p_S^k should be 1")?;
    ensure(c.r_ball_sphere == Inv::One && c.rs_ball_sphere == Inv::One, "r and rs should be 1")?;
    let g = witness_interval(&input).map_err(|e| e.to_string())?;
    let ends: BTreeSet<_> = [g.eval(&[q(-1, 1)]), g.eval(&[q(1, 1)])].iter().map(|v| key(v)).collect();
    let expected: BTreeSet<_> = [key(&[q(-1, 1), q(0, 1)]), key(&[q(1, 1), q(0, 1)])].into_iter().collect();
    ensure(ends == expected, format!("witness endpoints {ends:?}"))?;
    let report = verify_witness(&Witness::Map(g), &input, 1e-9, 2_000).map_err(|e| e.to_string())?;
    ensure(report.endpoints == Some(true) && report.pass(), "witness check failed")?;
    Ok("CASE1, p_B=p_S=p_S^k=r=rs=1, witness endpoints (+-1, 0) exact".into())
}

fn parabola_fixture() -> Check {
    let c = classify(&SemialgInput::full(parabola())).map_err(|e| e.to_string())?;
    ensure(!c.s_compact, "full trace should be non-compact")?;
    ensure(c.p_ball == Inv::Infinity && c.p_sphere1 == Inv::Infinity, "p_B and p_S should be infinity")?;
    ensure(c.r_ball_sphere == Inv::Infinity, "r_B should be infinity")?;
    let arc = SemialgInput::arc(parabola(), rat(-1, 1), rat(1, 1)).map_err(|e| e.to_string())?;
    let a = classify(&arc).map_err(|e| e.to_string())?;
    ensure(a.case_label == CaseLabel::Case1 && a.p_ball == Inv::One, "arc should be CASE1 with p_B=1")?;
    Ok("full trace p_B=p_S=r_B=inf, arc [-1,1] CASE1 p_B=1".into())
}

fn circle_not_a_ball_image() -> Check {
    let input = SemialgInput::full(circle());
    let c = classify(&input).map_err(|e| e.to_string())?;
    ensure(c.p_ball == Inv::Infinity, "p_ball should be infinity")?;
    ensure(witness_interval(&input).is_err(), "an interval witness was emitted for the circle")?;
    let forced = force_interval_witness(&input).map_err(|e| e.to_string())?;
    let report = verify_witness(&Witness::Map(forced), &input, 1e-3, 10_000).map_err(|e| e.to_string())?;
    ensure(!report.pass(), "forced interval witness passed the check")?;
    Ok(format!("no ball witness; forced witness rejected (Hausdorff {:.2})", report.hausdorff))
}

fn random_gauss(rng: &mut ChaCha8Rng) -> Gauss {
    let part = |rng: &mut ChaCha8Rng| q(rng.gen_range(-9..=9), rng.gen_range(1..=5));
    Gauss::new(part(rng), part(rng))
}

fn laurent_dictionary() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(6);
    for n in 0..100 {
        let mut l = LaurentPoly::zero();
        for _ in 0..rng.gen_range(1..=9) {
            l.add_term(rng.gen_range(-4..=4), random_gauss(&mut rng));
        }
        let back = laurent_from_real(&real_from_laurent(&l).map_err(|e| e.to_string())?).map_err(|e| e.to_string())?;
        ensure(back == l, format!("round trip differs on instance {n}"))?;
    }
    let vars = ["x", "y"];
    let p = |s: &str| parse_poly(s, &vars).unwrap().map(|c| QuadExt::from(c.clone()));
    let g = RealPolyMap::new(Source::Sphere(1), vec![p("x^2-y^2"), p("2*x*y")]).unwrap();
    let z2 = LaurentPoly::monomial(2, Gauss::real(QuadExt::one()));
    ensure(laurent_from_real(&g).map_err(|e| e.to_string())? == z2, "(x^2-y^2, 2xy) should give z^2")?;
    ensure(real_from_laurent(&z2).map_err(|e| e.to_string())? == g, "z^2 should give (x^2-y^2, 2xy)")?;
    Ok("100 random round trips exact; (x^2-y^2, 2xy) <-> z^2".into())
}

fn random_affine_poly(rng: &mut ChaCha8Rng, d: usize) -> UPoly {
    UPoly::from_ints(&(0..=d).map(|_| rng.gen_range(-5..=5)).collect::<Vec<i64>>())
}

fn random_form(rng: &mut ChaCha8Rng, d: usize) -> HPoly2<Rat> {
    HPoly2::from_affine(&random_affine_poly(rng, d), d)
}

/// `A^2 + B^2` for random forms of degree `d/2`, positive on the real line
/// unless `A` and `B` share a real root.
fn sum_of_squares(rng: &mut ChaCha8Rng, d: usize) -> HPoly2<Rat> {
    let (a, b) = (random_affine_poly(rng, d / 2), random_affine_poly(rng, d / 2));
    HPoly2::from_affine(&(&(&a * &a) + &(&b * &b)), d)
}

fn boundedness_criterion() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(7);
    let (mut done, mut bounded) = (0, 0);
    while done < 50 {
        let (d, p0) = if done % 2 == 0 {
            let d = 2 * rng.gen_range(1..=3);
            (d, sum_of_squares(&mut rng, d))
        } else {
            let d = rng.gen_range(1..=6);
            (d, random_form(&mut rng, d))
        };
        let comps = vec![p0, random_form(&mut rng, d), random_form(&mut rng, d)];
        let Ok(p) = ProjParam::reduce(comps) else { continue };
        if generic_fiber_degree(&p) != 1 {
            continue;
        }
        let exact = is_real_trace_bounded(&p);
        let probe = probe_bounded(&p, 10_000, 1e6);
        ensure(exact == probe, format!("exact {exact} probe {probe} on {:?}", p.to_strings()))?;
        done += 1;
        bounded += exact as usize;
    }
    Ok(format!("50 proper parameterizations agree ({bounded} bounded)"))
}

fn random_mobius(rng: &mut ChaCha8Rng) -> Mobius {
    loop {
        let mut e = || rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let (a, b, c, d) = (e(), e(), e(), e());
        if let Ok(m) = Mobius::rational(a, b, c, d) {
            if !m.det().is_zero() {
                return m;
            }
        }
    }
}

fn random_affine(rng: &mut ChaCha8Rng) -> (Vec<Vec<Rat>>, Vec<Rat>) {
    loop {
        let mut e = || rat(rng.gen_range(-5..=5), rng.gen_range(1..=3));
        let a = vec![vec![e(), e()], vec![e(), e()]];
        let b = vec![e(), e()];
        if !(a[0][0].clone() * a[1][1].clone() - a[0][1].clone() * a[1][0].clone()).is_zero() {
            return (a, b);
        }
    }
}

/// Fiber sizes and reality, which an affine change of target keeps while
/// moving the points at infinity.
fn shape(c: &Classification) -> Vec<(usize, bool, bool)> {
    let mut v: Vec<_> = c.report.signature().into_iter().map(|(_, n, r, cj)| (n, r, cj)).collect();
    v.sort();
    v
}

fn invariance_suite() -> Check {
    let mut rng = ChaCha8Rng::seed_from_u64(8);
    let mut runs = (0, 0);
    for (name, p) in [("circle", circle()), ("gerono", gerono()), ("parabola", parabola())] {
        let base = classify(&SemialgInput::full(p.clone())).map_err(|e| e.to_string())?;
        for _ in 0..25 {
            let m = random_mobius(&mut rng);
            let r = p.apply_rational_mobius(&m).map_err(|e| e.to_string())?;
            let c = classify(&SemialgInput::full(r)).map_err(|e| e.to_string())?;
            ensure(c.verdict() == base.verdict(), format!("{name}: verdict changed under {m:?}"))?;
            ensure(c.report.signature() == base.report.signature(), format!("{name}: infinity changed under {m:?}"))?;
            runs.0 += 1;
        }
        for _ in 0..25 {
            let (a, b) = random_affine(&mut rng);
            let r = p.apply_affine_target(&a, &b).map_err(|e| e.to_string())?;
            let c = classify(&SemialgInput::full(r)).map_err(|e| e.to_string())?;
            ensure(c.verdict() == base.verdict(), format!("{name}: verdict changed under {a:?} {b:?}"))?;
            ensure(shape(&c) == shape(&base), format!("{name}: fibers changed under {a:?} {b:?}"))?;
            runs.1 += 1;
        }
    }
    Ok(format!("{} Mobius and {} affine runs unchanged", runs.0, runs.1))
}

fn winding_numbers() -> Check {
    for k in (-3..=3).filter(|&k| k != 0) {
        let z = LaurentPoly::monomial(k, Gauss::real(QuadExt::one()));
        let w = winding_number(|t| z.eval_angle(t), 64).map_err(|e| e.to_string())?;
        ensure(w == k as i64, format!("z^{k} has winding number {w}"))?;
    }
    // [x0 : x1] -> [-Im(l (x0 + i x1)^2) : Re(l (x0 + i x1)^2)] with |l| = 1
    let (lr, li) = (0.6, 0.8);
    let deg = projective_line_degree(
        |x0, x1| {
            let (zr, zi) = (x0 * x0 - x1 * x1, 2.0 * x0 * x1);
            let (re, im) = (lr * zr - li * zi, lr * zi + li * zr);
            (-im, re)
        },
        64,
    )
    .map_err(|e| e.to_string())?;
    ensure(deg == 2, format!("projective line map has degree {deg}"))?;
    Ok("z^k -> k for k in -3..3 \\ 0; k1=2 self-map of RP^1 has degree 2".into())
}

fn random_poly(rng: &mut ChaCha8Rng, max_deg: usize) -> UPoly {
    loop {
        let d = rng.gen_range(1..=max_deg);
        let c: Vec<i64> = (0..=d).map(|_| rng.gen_range(-5..=5)).collect();
        let p = UPoly::from_ints(&c);
        if !p.is_constant() {
            return p;
        }
    }
}

fn exact_core_suite() -> Check {
    let start = Instant::now();
    let mut rng = ChaCha8Rng::seed_from_u64(10);
    for n in 0..1000 {
        let (f, g, h) = (random_poly(&mut rng, 4), random_poly(&mut rng, 4), random_poly(&mut rng, 2));
        let fail = |what: &str| format!("{what} on instance {n}: f={f:?} g={g:?} h={h:?}");
        let rfg = resultant(&f, &g).unwrap();
        ensure(rfg.is_zero() == !f.gcd(&g).is_constant(), fail("resultant vs gcd"))?;
        ensure(resultant(&(&f * &h), &(&g * &h)).unwrap().is_zero(), fail("common factor resultant"))?;
        let sign = if f.deg() * g.deg() % 2 == 0 { Rat::one() } else { -Rat::one() };
        ensure(rfg.clone() == sign * resultant(&g, &f).unwrap(), fail("resultant symmetry"))?;
        ensure(resultant(&f, &(&g * &h)).unwrap() == rfg * resultant(&f, &h).unwrap(), fail("multiplicativity"))?;
        let (d, s, t) = f.ext_gcd(&g);
        ensure(&(&s * &f) + &(&t * &g) == d && d.divides(&f) && d.divides(&g), fail("Bezout gcd"))?;
        let roots: BTreeSet<i64> = (0..rng.gen_range(1..=5)).map(|_| rng.gen_range(-6..=6)).collect();
        let r = roots.iter().fold(UPoly::one(), |acc, &x| &acc * &UPoly::from_ints(&[-x, 1]));
        let r = &r * &UPoly::from_ints(&[1, 0, 1]);
        let count = sturm_real_root_count(&r, &Ext::NegInf, &Ext::PosInf).unwrap();
        ensure(count == roots.len(), fail("Sturm count"))?;
        let lo = Ext::Fin(rat(*roots.iter().next().unwrap(), 1));
        ensure(sturm_real_root_count(&r, &lo, &Ext::PosInf).unwrap() == roots.len() - 1, fail("Sturm half-line"))?;
        let sq = &(&f * &h) * &h;
        let factors = factor_rational(&sq).unwrap();
        let prod = factors.iter().fold(UPoly::one(), |acc, (p, e)| &acc * &p.pow(*e as u32));
        ensure(prod == sq.monic(), fail("factorization product"))?;
        let sf = squarefree_part(&sq).unwrap();
        ensure(sf.gcd(&sf.derivative()).is_constant(), fail("squarefree part"))?;
    }
    let s = within(start, Duration::from_secs(60), "exact-core suite")?;
    Ok(format!("1000 instances of resultant/gcd/Sturm/factorization in {s:.2} s"))
}

#[test]
fn acceptance_criteria() {
    let criteria: [(&str, fn() -> Check); 10] = [
        ("circle fixture", circle_fixture),
        ("Gerono fixture", gerono_fixture),
        ("segment fixture", segment_fixture),
        ("parabola fixture", parabola_fixture),
        ("circle is no ball image", circle_not_a_ball_image),
        ("Laurent dictionary", laurent_dictionary),
        ("boundedness criterion", boundedness_criterion),
        ("Mobius and affine invariance", invariance_suite),
        ("winding numbers", winding_numbers),
        ("exact-core suite", exact_core_suite),
    ];
    let mut failed = vec![];
    let mut err = std::io::stderr().lock();
    for (i, (name, run)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = catch_unwind(AssertUnwindSafe(run)).unwrap_or_else(|p| {
            let msg = p.downcast_ref::<String>().cloned().or_else(|| p.downcast_ref::<&str>().map(|s| s.to_string()));
            Err(format!("panic: {}", msg.unwrap_or_default()))
        });
        let secs = start.elapsed().as_secs_f64();
        let (tag, detail) = match outcome {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed.push(i + 1);
                ("FAIL", d)
            }
        };
        writeln!(err, "{tag} {:>2} {name}: {detail} [{secs:.2} s]", i + 1).unwrap();
    }
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
