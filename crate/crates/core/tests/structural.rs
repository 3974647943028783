use curvlab::verify::{structural_sweep, SamplePlan};

#[test]
fn structural_identities_hold() {
    let plan = SamplePlan::new(3).with_points(2);
    for r in structural_sweep(&plan).unwrap() {
        assert!(r.pass, "{}: {:?}", r.name, r.counterexample);
        assert!(r.checks > 0, "{}", r.name);
    }
}
