//! Fixtures shared by the benchmarks.

use curvlab::{build_metric, FamilyId, FamilySpec, HermitianData, LieAlgebraCx, MetricParams};

/// A dense point: every metric entry nonzero on a family with many structure constants.
pub fn dense_point() -> (LieAlgebraCx, HermitianData) {
    let f = FamilySpec::with(FamilyId::Nii, &[("rho", "1"), ("B", "1+2*i"), ("c", "3")]).expect("in domain");
    let m = MetricParams::from_assignments([
        ("r2", "7/3"),
        ("s2", "5/2"),
        ("t2", "4/5"),
        ("u", "1/3-2/5*i"),
        ("v", "-1/4+1/3*i"),
        ("z", "2/5+1/5*i"),
    ])
    .expect("parses");
    (f.instantiate(), build_metric(&m).expect("positive"))
}

/// The identity metric on the Iwasawa-type structure.
pub fn sparse_point() -> (LieAlgebraCx, HermitianData) {
    let f = FamilySpec::with(FamilyId::Np, &[("rho", "1")]).expect("in domain");
    (f.instantiate(), build_metric(&MetricParams::identity()).expect("positive"))
}
