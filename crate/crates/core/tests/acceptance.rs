//! Acceptance criteria 1 to 7, one PASS/FAIL line each.

use std::time::{Duration, Instant};

use curvlab::catalog::{representatives, LocusKind};
use curvlab::flow::{pure_type_ricci, rk4_order_check};
use curvlab::verify::{metric_label, structural_sweep, SamplePlan};
use curvlab::*;

const SEED: u64 = 20_240_601;

struct Line {
    n: usize,
    pass: bool,
    detail: String,
}

fn appendix(which: Appendix, plan: &SamplePlan, r: usize, b: usize) -> (bool, String) {
    let rep = verify_appendix(which, plan).expect("appendix sampling");
    let first = &rep.points[0].checks;
    let nr = first.iter().filter(|c| c.label.starts_with("R[")).count();
    let nb = first.iter().filter(|c| c.label.starts_with("B[")).count();
    let mismatch = rep.first_mismatch().map(|(p, c)| {
        format!(
            "{} at {} {} {}: expected {}, observed {}",
            c.label,
            p.family,
            metric_label(&p.metric),
            p.spec,
            c.expected,
            c.observed
        )
    });
    let pass = rep.pass() && nr == r && nb == b;
    let detail = format!(
        "{:?}: {} points, {} R + {} B entries each{}",
        which,
        rep.points.len(),
        nr,
        nb,
        mismatch.map(|m| format!("; {m}")).unwrap_or_default()
    );
    (pass, detail)
}

fn criterion_1() -> Line {
    let plan = SamplePlan::new(SEED).with_points(5);
    let start = Instant::now();
    let (ok, detail) = appendix(Appendix::A, &plan, 12, 13);
    let took = start.elapsed();
    Line { n: 1, pass: ok && took < Duration::from_secs(60), detail: format!("{detail}; {took:.1?}") }
}

fn criterion_2() -> Line {
    let plan = SamplePlan::new(SEED).with_points(5);
    let (b_ok, b) = appendix(Appendix::B, &plan, 0, 4);
    let (c_ok, c) = appendix(Appendix::C, &plan, 6, 10);
    Line { n: 2, pass: b_ok && c_ok, detail: format!("{b}; {c}") }
}

fn criteria_3_4() -> (Line, Line) {
    let plan = SamplePlan::new(SEED);
    let start = Instant::now();
    let sb = theorem_suite(&plan).expect("scoreboard sampling");
    let took = start.elapsed();
    let failed: Vec<&str> = sb.cases.iter().filter(|c| !c.pass).map(|c| c.id.as_str()).collect();
    for c in sb.cases.iter().filter(|c| !c.pass) {
        println!("  case {} {}: expected {}, observed {}; {}", c.id, c.spec, c.expected, c.observed, c.witness);
    }
    let min_points = sb.cases.iter().map(|c| c.points).min().unwrap_or(0);
    let three = Line {
        n: 3,
        pass: failed.is_empty() && min_points >= 5 && took < Duration::from_secs(300),
        detail: format!("{} cases at {} points, {} unexpected; {took:.1?}", sb.cases.len(), min_points, failed.len()),
    };
    let mut parts = Vec::new();
    for c in &sb.conjectures {
        parts.push(format!("{} ({} hyp, {} viol)", c.name, c.hypotheses, c.violations));
        if let Some(v) = &c.first_violation {
            println!("  conjecture {}: {v}", c.name);
        }
    }
    let four = Line {
        n: 4,
        pass: sb.conjectures.iter().all(|c| c.violations == 0 && c.hypotheses > 0),
        detail: parts.join("; "),
    };
    (three, four)
}

fn criterion_5() -> Line {
    let plan = SamplePlan::new(SEED).with_points(5);
    let results = structural_sweep(&plan).expect("structural sampling");
    let mut pass = true;
    let mut parts = Vec::new();
    for r in &results {
        pass &= r.pass && r.checks > 0;
        parts.push(format!("{} x{}", r.name, r.checks));
        if let Some(c) = &r.counterexample {
            println!("  identity {}: {c}", r.name);
        }
    }
    Line { n: 5, pass, detail: parts.join(", ") }
}

fn criterion_6() -> Line {
    let plan = SamplePlan::new(SEED);
    let families = [
        FamilySpec::with(FamilyId::Np, &[("rho", "0")]).unwrap(),
        FamilySpec::with(FamilyId::Np, &[("rho", "1")]).unwrap(),
        FamilySpec::bare(FamilyId::Siv1).unwrap(),
        FamilySpec::bare(FamilyId::Sl2c).unwrap(),
    ];
    let mut rng = plan.rng(6_006);
    let mut checked = 0;
    let mut bad = Vec::new();
    for f in &families {
        let lie = f.instantiate();
        for c in [MetricConstraint::any(), MetricConstraint::generic()] {
            for _ in 0..plan.points_per_case {
                let m = sample_metric(&mut rng, &c, plan.height).unwrap();
                let r = evaluate(&ConnectionSpec::chern(), &build_metric(&m).unwrap(), &lie);
                checked += 1;
                if !r.is_zero() {
                    bad.push(format!("{} at {}", f.label(), metric_label(&m)));
                }
            }
        }
    }
    Line {
        n: 6,
        pass: bad.is_empty(),
        detail: format!(
            "{checked} metrics over Np rho=0, Np rho=1, Siv1, sl2c; {} nonflat {:?}",
            bad.len(),
            bad.first()
        ),
    }
}

fn criterion_7() -> Line {
    let plan = SamplePlan::new(SEED);
    let mut rng = plan.rng(7_007);
    let torus = FamilySpec::with(FamilyId::Np, &[("rho", "0")]).unwrap();
    let g20 = FamilySpec::with(FamilyId::Si, &[("A", "i")]).unwrap();
    let mut details = Vec::new();
    let mut pass = true;

    for (name, f, c) in [("torus", &torus, MetricConstraint::any()), ("g2^0", &g20, MetricConstraint::diagonal())] {
        let m = sample_metric(&mut rng, &c, plan.height).unwrap();
        let state = FlowState::new(&build_metric(&m).unwrap(), &f.instantiate());
        let trace = integrate_flow(&state, 1.0, 0.01).unwrap();
        let ok = trace.halt.is_none()
            && trace.samples.len() == 101
            && trace.max_deviation() <= 1e-12
            && trace.drift() <= 1e-12;
        pass &= ok;
        details.push(format!("{name} deviation {:.1e} drift {:.1e}", trace.max_deviation(), trace.drift()));
    }

    let mut kl_points = 0;
    for f in representatives() {
        let lie = f.instantiate();
        let loci = special_metric_loci(&f);
        let Some(kahler) = loci.iter().find(|l| l.kind == LocusKind::Kahler) else { continue };
        for c in [MetricConstraint::any(), MetricConstraint::diagonal()] {
            for _ in 0..plan.points_per_case {
                let m = sample_metric(&mut rng, &c, plan.height).unwrap();
                let h = build_metric(&m).unwrap();
                let lc_kl = kahler_like_check(&evaluate(&ConnectionSpec::lc(), &h, &lie)).verdict;
                if lc_kl != kahler.contains(&f, &m) {
                    pass = false;
                    details.push(format!("locus disagreement at {} {}", f.label(), metric_label(&m)));
                }
                if lc_kl {
                    kl_points += 1;
                    let pure = pure_type_ricci(&h, &lie);
                    if !pure.is_empty() {
                        pass = false;
                        details.push(format!("{} at {} {} = {}", f.label(), metric_label(&m), pure[0].0, pure[0].1));
                    }
                }
            }
        }
    }
    pass &= kl_points > 0;
    details.push(format!("pure-type Ricci zero at {kl_points} LC-Kahler-like points"));

    let order = rk4_order_check(1.0, 0.25, 3);
    pass &= order.pass(8.0);
    let ratios: Vec<String> = order.ratios.iter().map(|r| format!("{r:.2}")).collect();
    details.push(format!("rk4 ratios {}", ratios.join(", ")));
    Line { n: 7, pass, detail: details.join("; ") }
}

#[test]
fn acceptance() {
    let (three, four) = criteria_3_4();
    let lines = [criterion_1(), criterion_2(), three, four, criterion_5(), criterion_6(), criterion_7()];
    for l in &lines {
        println!("criterion {}: {} {}", l.n, if l.pass { "PASS" } else { "FAIL" }, l.detail);
    }
    let failed: Vec<usize> = lines.iter().filter(|l| !l.pass).map(|l| l.n).collect();
    assert!(failed.is_empty(), "failed criteria {failed:?}");
}
