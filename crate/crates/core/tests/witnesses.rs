//! Closed-form curvature components for individual families, checked at
//! fixed metrics.

use curvlab::verify::{appendix_oracle, Appendix};
use curvlab::*;
use num_traits::One;

type G = GaussianRational;

fn q(s: &str) -> G {
    s.parse().unwrap()
}

fn fam(id: FamilyId, p: &[(&str, &str)]) -> FamilySpec {
    FamilySpec::with(id, p).unwrap()
}

fn metric(p: &[(&str, &str)]) -> MetricParams {
    MetricParams::from_assignments(p.iter().copied()).unwrap()
}

/// A metric with every off-diagonal entry switched on.
fn generic() -> MetricParams {
    metric(&[("r2", "2"), ("s2", "3/2"), ("t2", "1/2"), ("u", "1/3+1/4*i"), ("v", "1/5-1/3*i"), ("z", "1/4+1/2*i")])
}

fn curv(f: &FamilySpec, m: &MetricParams, s: ConnectionSpec) -> CurvatureTensor {
    evaluate(&s, &build_metric(m).unwrap(), &f.instantiate())
}

fn r(t: &CurvatureTensor, labels: &str) -> G {
    t.component(labels).unwrap()
}

fn b(t: &CurvatureTensor, labels: &str) -> G {
    BTensor::new(t).component(labels).unwrap().clone()
}

struct P {
    r2: G,
    s2: G,
    t2: G,
    u2: G,
    z2: G,
    ds: G,
}

fn p(m: &MetricParams) -> P {
    P {
        r2: G::real(m.r2.clone()),
        s2: G::real(m.s2.clone()),
        t2: G::real(m.t2.clone()),
        u2: G::real(m.u.norm_sqr()),
        z2: G::real(m.z.norm_sqr()),
        ds: G::real(m.det_scaled()),
    }
}

fn eps(s: &str) -> (Rational, G) {
    let e: Rational = s.parse::<G>().unwrap().re().clone();
    (e.clone(), G::real(e))
}

#[test]
fn np_bismut_like_component() {
    let m = generic();
    let P { r2, t2, z2, ds, .. } = p(&m);
    let f = fam(FamilyId::Np, &[("rho", "1")]);
    for e in ["1/3", "1/2", "-2/5"] {
        let (er, eg) = eps(e);
        let t = curv(&f, &m, ConnectionSpec::gauduchon(er));
        let expect = q("2") * &eg * &eg * &t2 * &t2 * (&r2 * &t2 - &z2) / &ds;
        assert_eq!(b(&t, "1 1b 3 3b"), expect, "eps = {e}");
    }
}

#[test]
fn si_b_component_general_metric() {
    let m = generic();
    let P { r2, s2, u2, ds, .. } = p(&m);
    let a = q("3/5+4/5*i");
    let f = fam(FamilyId::Si, &[("A", "3/5+4/5*i")]);
    let (er, eg) = eps("1/4");
    let t = curv(&f, &m, ConnectionSpec::gauduchon(er));
    let w = &r2 * &s2 - &u2;
    let re_a = G::real(a.re().clone());
    let expect = q("8") * &eg * &eg * &w * (&re_a * &re_a * &w + G::real(a.norm_sqr()) * &u2) / &ds;
    assert_eq!(b(&t, "1 1b 2 2b"), expect);
}

#[test]
fn siv3_components() {
    let m = generic();
    let P { r2, s2, u2, ds, .. } = p(&m);
    let a = q("2+i");
    let f = fam(FamilyId::Siv3, &[("A", "2+i")]);
    let w = &r2 * &s2 - &u2;
    let chern =
        curv(&f, &metric(&[("r2", "2"), ("s2", "3/2"), ("t2", "1/2"), ("u", "1/3+1/4*i")]), ConnectionSpec::chern());
    assert_eq!(b(&chern, "1 3b 3 1b"), q("2") * &r2 * &u2 / &w);

    let (er, eg) = eps("1/3");
    let t = curv(&f, &m, ConnectionSpec::gauduchon(er));
    let am = G::real((&a - &G::one()).norm_sqr());
    let ap = G::real((&a + &G::one()).norm_sqr());
    let expect = q("2") * &eg * &eg * &w * (&r2 * &s2 * &am + &u2 * &ap) / &ds;
    assert_eq!(b(&t, "1 1b 2 2b"), expect);
}

#[test]
fn siv1_components() {
    let m = generic();
    let P { r2, s2, u2, ds, .. } = p(&m);
    let f = fam(FamilyId::Siv1, &[]);
    for e in ["1/6", "2/3"] {
        let (er, eg) = eps(e);
        let t = curv(&f, &m, ConnectionSpec::gauduchon(er));
        assert_eq!(r(&t, "1 3 3 1b"), -(q("2") * &eg - G::one()) * &eg * &r2, "eps = {e}");
    }
    let t = curv(&f, &m, ConnectionSpec::bismut());
    let expect = (&r2 * &r2 * &s2 * &s2 - &u2 * &u2) / (q("2") * &ds);
    assert_eq!(b(&t, "1 1b 2 2b"), expect);
}

#[test]
fn ni_normalized_components() {
    let m = metric(&[("r2", "1"), ("s2", "5/2"), ("t2", "3/4"), ("u", "1/2-1/3*i")]);
    let P { s2, t2, u2, ds, .. } = p(&m);
    let f = fam(FamilyId::Ni, &[("rho", "1"), ("lambda", "1/2"), ("D", "1/3+i")]);
    let (er, eg) = eps("1/6");
    let t = curv(&f, &m, ConnectionSpec::gauduchon(er));
    let t6 = &t2 * &t2 * &t2;
    assert_eq!(r(&t, "2 3 1 3b"), q("2") * &eg * &eg * &s2 * &t6 / &ds);
    let chern = curv(&f, &m, ConnectionSpec::chern());
    assert_eq!(b(&chern, "1 1b 3 3b"), -(&s2 * &t2 * &t2) / (q("2") * (&s2 - &u2)));
}

#[test]
fn h2_and_g4_bismut() {
    let f = fam(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "i")]);
    let m = metric(&[("r2", "1"), ("s2", "1"), ("t2", "7/3")]);
    let t = curv(&f, &m, ConnectionSpec::bismut());
    assert_eq!(r(&t, "1 1b 1 1b"), q("7/3"));
    assert_eq!(r(&t, "2 2b 2 2b"), q("7/3"));
    assert!(kahler_like_check(&t).verdict);

    let g4 = fam(FamilyId::Siii1, &[("sign", "1")]);
    let m = metric(&[("r2", "3"), ("s2", "2/5"), ("t2", "5/4")]);
    let t = curv(&g4, &m, ConnectionSpec::bismut());
    assert_eq!(r(&t, "1 1b 1 1b"), q("5/4"));
}

#[test]
fn levi_civita_witnesses() {
    let m = metric(&[("r2", "2"), ("s2", "3/2"), ("t2", "1/2")]);
    let P { r2, s2, t2, .. } = p(&m);

    let siv1 = curv(&fam(FamilyId::Siv1, &[]), &m, ConnectionSpec::lc());
    assert_eq!(r(&siv1, "1 3 3 1b"), &r2 / &q("8"));

    let niii = curv(&fam(FamilyId::Niii, &[("rho", "0"), ("sign", "1")]), &m, ConnectionSpec::lc());
    assert_eq!(r(&niii, "3 2b 2 3b"), -(&s2 * &s2 + &t2 * &t2) / (q("8") * &r2));

    let x = q("1/3");
    let sii = curv(&fam(FamilyId::Sii, &[("x", "1/3")]), &m, ConnectionSpec::lc());
    let x2 = &x * &x;
    let expect = (G::one() + q("4") * &x2) * (&t2 * &t2 + q("4") * &s2 * &s2 * &x2) / (q("128") * &r2 * &x2);
    assert_eq!(r(&sii, "2 3 2b 3b"), expect);

    let siii2 = curv(&fam(FamilyId::Siii2, &[]), &m, ConnectionSpec::lc());
    assert_eq!(r(&siii2, "2 3 3 1b"), -&t2 / &q("2"));
}

#[test]
fn levi_civita_with_u() {
    let m = metric(&[("r2", "2"), ("s2", "3/2"), ("t2", "1/2"), ("u", "1/3")]);
    let P { r2, s2, t2, u2, .. } = p(&m);

    // Balanced on g7 means r2 = s2 as well.
    let g7 = metric(&[("r2", "3/2"), ("s2", "3/2"), ("t2", "1/2"), ("u", "1/3")]);
    let siii4 = curv(&fam(FamilyId::Siii4, &[("sign", "1")]), &g7, ConnectionSpec::lc());
    let expect = &s2 * (&t2 * &t2 + q("4") * &u2) / (q("8") * (&s2 * &s2 - &u2));
    assert_eq!(r(&siii4, "2 3 2b 3b"), expect);

    let a = q("2+i");
    let siv3 = curv(&fam(FamilyId::Siv3, &[("A", "2+i")]), &m, ConnectionSpec::lc());
    let am = &a - &G::one();
    let expect =
        &r2 * (&am * &am * &r2 * &s2 - (&a * &a - q("6") * &a + G::one()) * &u2) / (q("8") * (&r2 * &s2 - &u2));
    assert_eq!(r(&siv3, "1 3 3 1b"), expect);

    let si = curv(&fam(FamilyId::Si, &[("A", "3/5+4/5*i")]), &m, ConnectionSpec::lc());
    let a = q("3/5+4/5*i");
    let w = &r2 * &s2 - &u2;
    let expect =
        ((&a * &a + a.conj() * a.conj()) * &w + q("2") * G::real(a.norm_sqr()) * (&r2 * &s2 + &u2)) / (q("4") * &t2);
    assert_eq!(r(&si, "1 2 1b 2b"), expect);
}

#[test]
fn ni_balanced_lc_witness_is_nonzero() {
    // Balanced Ni point: r2 = 1, v = z = 0, s2 + D = i conj(u) lambda.
    let f = fam(FamilyId::Ni, &[("rho", "1"), ("lambda", "1"), ("D", "-1")]);
    let m = metric(&[("r2", "1"), ("s2", "1"), ("t2", "2/3")]);
    let h = build_metric(&m).unwrap();
    assert!(classify_metric(&h, &f.instantiate()).balanced);
    let t = curv(&f, &m, ConnectionSpec::lc());
    assert_eq!(r(&t, "1 1b 1 2"), q("3/8") * q("2/3"));
}

#[test]
fn appendix_c_sign_follows_from_automorphism() {
    // Swapping phi1 and phi2 and negating phi3 preserves g2^0.
    let f = fam(FamilyId::Si, &[("A", "i")]);
    let m = metric(&[("r2", "2"), ("s2", "3/2"), ("t2", "1/2"), ("v", "1/5-1/3*i"), ("z", "1/4+1/2*i")]);
    let image = MetricParams {
        r2: m.s2.clone(),
        s2: m.r2.clone(),
        t2: m.t2.clone(),
        u: -m.u.conj(),
        v: -m.z.clone(),
        z: -m.v.clone(),
    };
    for e in ["0", "1/3", "1/2"] {
        let (er, _) = eps(e);
        let spec = ConnectionSpec::gauduchon(er.clone());
        let here = curv(&f, &m, spec.clone());
        let there = curv(&f, &image, spec);
        let lookup = |which: &MetricParams, label: &str| {
            appendix_oracle(Appendix::C, &f, which, &er)
                .unwrap()
                .into_iter()
                .find(|o| o.label() == label)
                .unwrap()
                .expected
        };
        assert_eq!(r(&there, "2 3 1 3b"), r(&here, "1 3 2 3b"), "eps = {e}");
        assert_eq!(lookup(&image, "R[2,3,1,3b]"), lookup(&m, "R[1,3,2,3b]"), "eps = {e}");
    }
}
