use curvlab::catalog::representatives;
use curvlab::verify::{sample_metric, MetricConstraint};
use curvlab::*;
use proptest::prelude::*;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn flag(c: &MetricClass, kind: LocusKind) -> bool {
    match kind {
        LocusKind::Kahler => c.kahler,
        LocusKind::Balanced => c.balanced,
        LocusKind::Pluriclosed => c.pluriclosed,
    }
}

fn small() -> impl Strategy<Value = (i64, i64)> {
    (-9i64..=9, 1i64..=5)
}

fn text((p, q): (i64, i64)) -> String {
    format!("{p}/{q}")
}

fn cx(re: (i64, i64), (p, q): (i64, i64)) -> String {
    let sign = if p < 0 { '-' } else { '+' };
    format!("{}{sign}{}/{q}*i", text(re), p.abs())
}

fn drawn_family() -> impl Strategy<Value = FamilySpec> {
    prop_oneof![
        (0i64..=1, 0i64..=9, small(), 0i64..=9).prop_map(|(rho, l, d, dim)| {
            let d = cx(d, (dim, 1));
            FamilySpec::with(FamilyId::Ni, &[("rho", &rho.to_string()), ("lambda", &l.to_string()), ("D", &d)]).unwrap()
        }),
        (small(), small(), 1i64..=9).prop_map(|(b, bi, c)| {
            let b = cx(b, bi);
            FamilySpec::with(FamilyId::Nii, &[("rho", "1"), ("B", &b), ("c", &c.to_string())]).unwrap()
        }),
        (1i64..=9, 1i64..=9).prop_map(|(p, q)| FamilySpec::with(FamilyId::Sii, &[("x", &format!("{p}/{q}"))]).unwrap()),
        (0i64..=12).prop_map(|t| {
            // Rational point (1 - t^2, 2t) / (1 + t^2) on the upper unit semicircle.
            let n = 1 + t * t;
            let a = format!("{}/{n}+{}/{n}*i", 1 - t * t, 2 * t);
            FamilySpec::with(FamilyId::Si, &[("A", &a)]).unwrap()
        }),
        (small(), small())
            .prop_filter("|A| != 1", |(a, b)| (a.0 * b.1).pow(2) + (b.0 * a.1).pow(2) != (a.1 * b.1).pow(2))
            .prop_map(|(a, b)| FamilySpec::with(FamilyId::Siv3, &[("A", &cx(a, b))]).unwrap()),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(40))]

    #[test]
    fn drawn_structures_are_lie_algebras(f in drawn_family()) {
        let report = f.instantiate().validate();
        prop_assert!(report.skew.passed() && report.reality.passed() && report.jacobi.passed(), "{}: {:?}", f.label(), report);
    }

    #[test]
    fn loci_agree_with_classifier(n in 0usize..25, pick in 0usize..6, seed in any::<u64>()) {
        let reps = representatives();
        let f = &reps[n % reps.len()];
        let c = [
            MetricConstraint::any(),
            MetricConstraint::diagonal(),
            MetricConstraint::u_only(),
            MetricConstraint::u_only().with_r2_one(),
            MetricConstraint::zeros(&[curvlab::catalog::MetricVar::U, curvlab::catalog::MetricVar::Z]),
            MetricConstraint { u_real: true, ..MetricConstraint::zeros(&[curvlab::catalog::MetricVar::V, curvlab::catalog::MetricVar::Z]) },
        ][pick].clone();
        let m = sample_metric(&mut ChaCha8Rng::seed_from_u64(seed), &c, 5).unwrap();
        let class = classify_metric(&build_metric(&m).unwrap(), &f.instantiate());
        for locus in special_metric_loci(f) {
            if locus.applies_to(f, &m) {
                prop_assert_eq!(locus.contains(f, &m), flag(&class, locus.kind), "{} {:?} at {:?}", f.label(), locus.kind, m);
            }
        }
    }
}

#[test]
fn ni_balanced_locus_is_hit() {
    // Choose D so that s2 + D = i conj(u) lambda.
    let m = MetricParams::from_assignments([("r2", "1"), ("s2", "3/2"), ("t2", "2/5"), ("u", "1/2+1/3*i")]).unwrap();
    let f = FamilySpec::with(FamilyId::Ni, &[("rho", "1"), ("lambda", "2"), ("D", "-5/6+1*i")]).unwrap();
    let class = classify_metric(&build_metric(&m).unwrap(), &f.instantiate());
    let balanced = special_metric_loci(&f).into_iter().find(|l| l.kind == LocusKind::Balanced).unwrap();
    assert!(balanced.contains(&f, &m));
    assert!(class.balanced);
    let mut off = m.clone();
    off.s2 = "2".parse().unwrap();
    assert!(!balanced.contains(&f, &off));
    assert!(!classify_metric(&build_metric(&off).unwrap(), &f.instantiate()).balanced);
}

#[test]
fn sl2c_metrics_are_balanced() {
    let f = FamilySpec::bare(FamilyId::Sl2c).unwrap();
    assert!(special_metric_loci(&f).is_empty());
    let mut rng = ChaCha8Rng::seed_from_u64(4);
    for _ in 0..6 {
        let m = sample_metric(&mut rng, &MetricConstraint::generic(), 5).unwrap();
        let class = classify_metric(&build_metric(&m).unwrap(), &f.instantiate());
        assert!(class.balanced && !class.kahler && !class.pluriclosed);
    }
}
