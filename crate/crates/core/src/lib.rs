//! Curvature of invariant Hermitian metrics on six-dimensional Lie algebras
//! with complex structure, computed in exact Gaussian-rational arithmetic.

pub mod catalog;
pub mod connection;
pub mod error;
pub mod flow;
pub mod forms;
pub mod frame;
mod kernel;
pub mod lie;
pub mod metric;
pub mod scalar;
pub mod symmetry;
pub mod tensor;
pub mod verify;

pub use catalog::{special_metric_loci, FamilyId, FamilySpec, LocusKind, MetricLocus, Predicate};
pub use connection::{
    christoffel, curvature, evaluate, ricci_and_scalar, torsion_and_bianchi_defect, ChristoffelParts, ChristoffelTable,
    ConnectionSpec, CurvatureTensor, GauduchonPencil, Preset, RicciData,
};
pub use error::{CatalogError, FlowError, MetricError, ParseError, TensorError, VerifyError};
pub use flow::{hermitian_deviation, integrate_flow, ricci_rhs, FlowState, FlowTrace};
pub use forms::{exterior_d, wedge, FormTensor};
pub use frame::FrameIndex;
pub use lie::{Check, DiffTerm, LieAlgebraCx, ValidationReport};
pub use metric::{build_metric, classify_metric, HermitianData, MetricClass, MetricParams};
pub use scalar::{rat, Field, GaussianRational, Rational};
pub use symmetry::{flatness_check, gray_check_lc, kahler_like_check, BTensor, FlatnessReport, KahlerLikeReport};
pub use tensor::{Component, MultiTensor};
pub use verify::{
    appendix_oracle, sample_metric, theorem_cases, theorem_suite, verify_appendix, verify_identity_zero, Appendix,
    AppendixReport, MetricConstraint, SamplePlan, Scoreboard,
};
