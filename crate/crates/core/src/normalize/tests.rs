use super::*;
use crate::coeffs::Rational;
use crate::idealops::radical_membership;
use crate::polyring::{MonomialOrder, PolyRing};

fn ring(vars: &[&str]) -> RingRef<Rational> {
    PolyRing::new(
        (),
        vars.iter().map(|s| s.to_string()).collect(),
        MonomialOrder::DegRevLex,
    )
    .unwrap()
}

fn var(r: &RingRef<Rational>, name: &str) -> Polynomial<Rational> {
    Polynomial::var(r, r.var_index(name).unwrap())
}

fn presentation(
    r: &RingRef<Rational>,
    gens: Vec<Polynomial<Rational>>,
) -> AffinePresentation<Rational> {
    AffinePresentation::new(Ideal::new(r, gens)).unwrap()
}

fn cusp() -> AffinePresentation<Rational> {
    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    presentation(&r, vec![&(&y * &y) - &x.pow(3)])
}

fn node() -> AffinePresentation<Rational> {
    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    presentation(&r, vec![&(&y * &y) - &(&x * &x)])
}

/// Sends every variable to a polynomial in one parameter `s` and checks
/// that all relations vanish.
fn vanishes_on(ideal: &Ideal<Rational>, images: &[(&str, Polynomial<Rational>)]) -> bool {
    let ring = ideal.ring();
    let target = images[0].1.ring().clone();
    let imgs: Vec<Polynomial<Rational>> = ring
        .vars()
        .iter()
        .map(|v| images.iter().find(|(n, _)| n == v).unwrap().1.clone())
        .collect();
    ideal
        .generators()
        .iter()
        .all(|g| g.substitute(&target, &imgs).is_zero())
}

#[test]
fn test_ideal_examples() {
    let s = RadicalStrategy::Auto;
    let c = cusp();
    let (x, y) = (var(c.ring(), "x"), var(c.ring(), "y"));
    let m = Ideal::new(c.ring(), vec![x.clone(), y.clone()]);
    assert!(choose_test_ideal(&c, s).unwrap().same_ideal(&m));
    assert!(choose_test_ideal(&node(), s)
        .unwrap()
        .same_ideal(&m.in_ring(node().ring())));
    let r = ring(&["x", "y"]);
    let conic = presentation(
        &r,
        vec![
            &(&(&var(&r, "x") * &var(&r, "x")) + &(&var(&r, "y") * &var(&r, "y")))
                - &Polynomial::one(&r),
        ],
    );
    assert!(choose_test_ideal(&conic, s).unwrap().is_unit());
}

#[test]
fn pick_examples() {
    let c = cusp();
    let x = var(c.ring(), "x");
    let i = choose_test_ideal(&c, RadicalStrategy::Auto).unwrap();
    match pick_nzd_or_split(&c, &i).unwrap() {
        SplitDecision::NonZeroDivisor(f) => assert_eq!(f, x),
        other => panic!("expected a nonzerodivisor, got {other:?}"),
    }

    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let cross = presentation(&r, vec![&x * &y]);
    let i = Ideal::new(&r, vec![x.clone(), y.clone()]);
    match pick_nzd_or_split(&cross, &i).unwrap() {
        SplitDecision::Split(f, ann) => {
            assert_eq!(f, x);
            assert!(ann.same_ideal(&Ideal::new(&r, vec![y.clone()])));
        }
        other => panic!("expected a split, got {other:?}"),
    }
    assert_eq!(
        pick_nzd_or_split(&cross, &Ideal::new(&r, vec![&x * &y])).unwrap_err(),
        Error::EmptyIdeal
    );
}

#[test]
fn cusp_endomorphism_ring() {
    let c = cusp();
    let r = c.ring().clone();
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let i = Ideal::new(&r, vec![x.clone(), y.clone()]);
    let endo = endomorphism_ring(&c, &i, &x).unwrap();
    assert_eq!(endo.numerators, vec![x.clone(), y.clone()]);
    assert!(!is_fixed_point(&endo));
    let d = c.defining();
    for l in &endo.linear {
        let s = &(&l[0] * &x) + &(&l[1] * &y);
        assert!(d.contains(&s));
    }
    let syz = crate::groebner::syzygies(&endo.numerators, d).unwrap();
    assert!(syz.contains(&[y.clone(), -&x], d));
    assert!(syz.contains(&[-&(&x * &x), y.clone()], d));
    let (a, b, beta) = &endo.quadratic[0];
    assert_eq!((*a, *b), (1, 1));
    let cleared = &(&y * &y) - &(&x * &(&(&beta[0] * &x) + &(&beta[1] * &y)));
    assert!(d.contains(&cleared));

    let ext = extend_ring(&c, &endo).unwrap();
    let big = ext.ring().clone();
    assert_eq!(big.vars(), &["x".to_string(), "y".into(), "T1_1".into()]);
    let (x, y, t) = (var(&big, "x"), var(&big, "y"), var(&big, "T1_1"));
    let expected = Ideal::new(
        &big,
        vec![
            &(&y * &y) - &x.pow(3),
            &(&x * &t) - &y,
            &(&y * &t) - &(&x * &x),
            &(&t * &t) - &x,
        ],
    );
    assert!(ext.defining().same_ideal(&expected));
    let s_ring = ring(&["s"]);
    let s = var(&s_ring, "s");
    assert!(vanishes_on(
        ext.defining(),
        &[("x", s.pow(2)), ("y", s.pow(3)), ("T1_1", s.clone())]
    ));
    let contracted = crate::groebner::eliminate(ext.defining(), &[2]).unwrap();
    assert!(contracted.same_ideal(&Ideal::new(&big, vec![&(&y * &y) - &x.pow(3)])));
}

#[test]
fn node_endomorphism_ring() {
    let n = node();
    let r = n.ring().clone();
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let i = Ideal::new(&r, vec![x.clone(), y.clone()]);
    let endo = endomorphism_ring(&n, &i, &x).unwrap();
    assert_eq!(endo.t(), 1);
    let ext = extend_ring(&n, &endo).unwrap();
    let big = ext.ring().clone();
    let (x, y, t) = (var(&big, "x"), var(&big, "y"), var(&big, "T1_1"));
    let one = Polynomial::one(&big);
    let expected = Ideal::new(
        &big,
        vec![
            &(&y * &y) - &(&x * &x),
            &(&x * &t) - &y,
            &(&y * &t) - &x,
            &(&t * &t) - &one,
        ],
    );
    assert!(ext.defining().same_ideal(&expected));
}

#[test]
fn smooth_point_is_fixed() {
    let r = ring(&["x"]);
    let x = var(&r, "x");
    let line = AffinePresentation::new(Ideal::zero(&r)).unwrap();
    let endo = endomorphism_ring(&line, &Ideal::new(&r, vec![x.clone()]), &x).unwrap();
    assert!(is_fixed_point(&endo));
    assert_eq!(endo.t(), 0);
}

#[test]
fn nonzerodivisor_is_required() {
    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let cross = presentation(&r, vec![&x * &y]);
    let err = endomorphism_ring(&cross, &Ideal::new(&r, vec![x.clone(), y]), &x).unwrap_err();
    assert_eq!(err, Error::NotNonZeroDivisor);
}

#[test]
fn normalize_cusp() {
    let c = cusp();
    let res = normalize(&c, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.components.len(), 1);
    assert_eq!(res.productive_steps(), 1);
    assert_eq!(res.fixed_points(), 1);
    let comp = &res.components[0];
    let adj = &comp.presentation.adjoined()[0];
    assert_eq!(
        (adj.numerator.to_string(), adj.denominator.to_string()),
        ("y".into(), "x".into())
    );
    let report = verify_result(&c, &res).unwrap();
    assert_eq!(report.checks, vec!['a', 'b', 'c', 'd']);
}

#[test]
fn normalize_node() {
    let n = node();
    let res = normalize(&n, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.components.len(), 2);
    assert_eq!(res.splits(), 1);
    let base = n.ring();
    let (x, y) = (var(base, "x"), var(base, "y"));
    let branches = [&y - &x, &y + &x];
    for comp in &res.components {
        let p = &comp.presentation;
        let extra: Vec<usize> = (2..p.ring().nvars()).collect();
        let elim = crate::groebner::eliminate(p.defining(), &extra).unwrap();
        let lin: Vec<&Polynomial<Rational>> = elim
            .basis()
            .iter()
            .filter(|g| !extra.iter().any(|&v| g.uses_var(v)))
            .collect();
        assert_eq!(lin.len(), 1);
        assert_eq!(lin[0].total_degree(), 1);
        let moved = lin[0].embed(base, &[0, 1, 0]);
        assert!(branches.iter().any(|b| b.monic() == moved.monic()));
    }
    verify_result(&n, &res).unwrap();
}

#[test]
fn normalize_smooth_inputs() {
    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let conic = presentation(&r, vec![&(&(&x * &x) + &(&y * &y)) - &Polynomial::one(&r)]);
    let res = normalize(&conic, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.components.len(), 1);
    assert_eq!(res.productive_steps(), 0);
    assert_eq!(res.components[0].iterations, 0);
    assert!(matches!(
        res.trace.last(),
        Some(TraceEvent::FixedPoint {
            via: FixedPointVia::UnitTestIdeal,
            ..
        })
    ));
    verify_result(&conic, &res).unwrap();

    let line = AffinePresentation::new(Ideal::zero(&ring(&["x"]))).unwrap();
    let res = normalize(&line, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.productive_steps(), 0);
    assert_eq!(res.components.len(), 1);
}

#[test]
fn normalize_umbrella() {
    let r = ring(&["x", "y", "z"]);
    let (x, y, z) = (var(&r, "x"), var(&r, "y"), var(&r, "z"));
    let u = presentation(&r, vec![&(&x * &x) - &(&(&y * &y) * &z)]);
    let test = choose_test_ideal(&u, RadicalStrategy::Auto).unwrap();
    assert!(test.same_ideal(&Ideal::new(&r, vec![x.clone(), y.clone()])));
    let res = normalize(&u, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.components.len(), 1);
    let p = &res.components[0].presentation;
    let big = p.ring();
    let t = var(big, &p.adjoined()[0].name);
    let (x, y, z) = (var(big, "x"), var(big, "y"), var(big, "z"));
    assert!(p.defining().contains(&(&(&t * &t) - &z)));
    assert!(p.defining().contains(&(&(&y * &t) - &x)));
    verify_result(&u, &res).unwrap();
}

#[test]
fn normalize_a4_curve() {
    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let a4 = presentation(&r, vec![&(&y * &y) - &x.pow(5)]);
    let res = normalize(&a4, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.components.len(), 1);
    assert_eq!(res.productive_steps(), 2);
    verify_result(&a4, &res).unwrap();
    let p = &res.components[0].presentation;
    let s_ring = ring(&["s"]);
    let s = var(&s_ring, "s");
    let names: Vec<String> = p.adjoined().iter().map(|a| a.name.clone()).collect();
    assert_eq!(names, vec!["T1_1".to_string(), "T2_1".into()]);
    assert!(vanishes_on(
        p.defining(),
        &[
            ("x", s.pow(2)),
            ("y", s.pow(5)),
            ("T1_1", s.pow(3)),
            ("T2_1", s.clone())
        ]
    ));
}

#[test]
fn iteration_limit() {
    let opts = NormalizeOptions {
        max_iterations: 0,
        ..NormalizeOptions::default()
    };
    match normalize(&cusp(), &opts).unwrap_err() {
        Error::IterationLimitExceeded {
            limit,
            component,
            trace,
        } => {
            assert_eq!((limit, component), (0, 0));
            assert!(!trace.is_empty());
        }
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn tampered_result_fails_fixed_point_check() {
    let c = cusp();
    let mut res = normalize(&c, &NormalizeOptions::default()).unwrap();
    let p = res.components[0].presentation.clone();
    let big = p.ring().clone();
    let (x, y, t) = (var(&big, "x"), var(&big, "y"), var(&big, "T1_1"));
    let mutilated = p
        .with_relations(vec![
            &(&y * &y) - &x.pow(3),
            &(&x * &t) - &y,
            &(&y * &t) - &(&x * &x),
        ])
        .unwrap();
    res.components[0].presentation = mutilated;
    match verify_result(&c, &res).unwrap_err() {
        Error::VerificationFailed { check, .. } => assert_eq!(check, 'a'),
        other => panic!("unexpected {other:?}"),
    }
}

#[test]
fn outputs_are_fixed_points() {
    for input in [cusp(), node()] {
        let res = normalize(&input, &NormalizeOptions::default()).unwrap();
        for comp in &res.components {
            let again = AffinePresentation::new(comp.presentation.defining().clone()).unwrap();
            let res2 = normalize(&again, &NormalizeOptions::default()).unwrap();
            assert_eq!(res2.productive_steps(), 0);
            assert_eq!(res2.components.len(), 1);
            assert!(res2.components[0]
                .presentation
                .defining()
                .same_ideal(comp.presentation.defining()));
        }
    }
}

#[test]
fn split_factors_are_reduced_and_cover() {
    let r = ring(&["x", "y"]);
    let (x, y) = (var(&r, "x"), var(&r, "y"));
    let cross = presentation(&r, vec![&x * &y]);
    let res = normalize(&cross, &NormalizeOptions::default()).unwrap();
    assert_eq!(res.components.len(), 2);
    for comp in &res.components {
        let d = comp.presentation.defining();
        assert!(d.basis().iter().all(|g| radical_membership(g, d)));
    }
    verify_result(&cross, &res).unwrap();
}
