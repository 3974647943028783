use curvlab::verify::{theorem_suite, SamplePlan};

#[test]
fn scoreboard_passes() {
    let plan = SamplePlan::new(7).with_points(3);
    let sb = theorem_suite(&plan).unwrap();
    for c in sb.cases.iter().filter(|c| !c.pass) {
        println!(
            "FAIL {} {} [{}] {}: expected {}, observed {}; {}",
            c.id, c.family, c.metric, c.spec, c.expected, c.observed, c.witness
        );
    }
    for c in &sb.conjectures {
        println!("{} hyp={} viol={} {:?}", c.name, c.hypotheses, c.violations, c.first_violation);
    }
    assert!(sb.pass());
}
