use curvlab::verify::{check_appendix_point, verify_appendix, Appendix, SamplePlan};
use curvlab::{FamilyId, FamilySpec, MetricParams, VerifyError};

fn report(which: Appendix) {
    let plan = SamplePlan::new(11).with_points(2);
    let rep = verify_appendix(which, &plan).unwrap();
    if let Some((p, c)) = rep.first_mismatch() {
        panic!(
            "{:?}: {} at {} {} {}: expected {}, observed {}",
            which,
            c.label,
            p.family,
            curvlab::verify::metric_label(&p.metric),
            p.spec,
            c.expected,
            c.observed
        );
    }
    assert!(rep.pass());
}

#[test]
fn table_a_matches() {
    report(Appendix::A);
}

#[test]
fn table_b_matches() {
    report(Appendix::B);
}

#[test]
fn table_c_matches() {
    report(Appendix::C);
}

#[test]
fn normalization_is_enforced() {
    let f = FamilySpec::with(FamilyId::Ni, &[("rho", "1"), ("lambda", "0"), ("D", "0")]).unwrap();
    let mut m = MetricParams::identity();
    m.r2 = "2".parse().unwrap();
    let e = check_appendix_point(Appendix::A, &f, &m, &"1/3".parse().unwrap());
    assert!(matches!(e, Err(VerifyError::Normalization(_))));
}
