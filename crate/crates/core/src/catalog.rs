//! The families of invariant complex structures on six-dimensional nil- and
//! solvmanifolds, plus sl(2,C), with parameter domains and special-metric loci.

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{CatalogError, ParseError};
use crate::frame::FrameIndex;
use crate::lie::{DiffTerm, LieAlgebraCx};
use crate::metric::MetricParams;
use crate::scalar::{rat, GaussianRational, Rational};

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize, Deserialize)]
pub enum FamilyId {
    Np,
    Ni,
    Nii,
    Niii,
    Si,
    Sii,
    Siii1,
    Siii2,
    Siii3,
    Siii4,
    Siv1,
    Siv2,
    Siv3,
    Sv,
    #[serde(rename = "sl2c")]
    Sl2c,
}

impl FamilyId {
    pub const ALL: [FamilyId; 15] = [
        FamilyId::Np,
        FamilyId::Ni,
        FamilyId::Nii,
        FamilyId::Niii,
        FamilyId::Si,
        FamilyId::Sii,
        FamilyId::Siii1,
        FamilyId::Siii2,
        FamilyId::Siii3,
        FamilyId::Siii4,
        FamilyId::Siv1,
        FamilyId::Siv2,
        FamilyId::Siv3,
        FamilyId::Sv,
        FamilyId::Sl2c,
    ];

    pub fn name(self) -> &'static str {
        match self {
            FamilyId::Np => "Np",
            FamilyId::Ni => "Ni",
            FamilyId::Nii => "Nii",
            FamilyId::Niii => "Niii",
            FamilyId::Si => "Si",
            FamilyId::Sii => "Sii",
            FamilyId::Siii1 => "Siii1",
            FamilyId::Siii2 => "Siii2",
            FamilyId::Siii3 => "Siii3",
            FamilyId::Siii4 => "Siii4",
            FamilyId::Siv1 => "Siv1",
            FamilyId::Siv2 => "Siv2",
            FamilyId::Siv3 => "Siv3",
            FamilyId::Sv => "Sv",
            FamilyId::Sl2c => "sl2c",
        }
    }

    pub fn is_nilpotent(self) -> bool {
        matches!(self, FamilyId::Np | FamilyId::Ni | FamilyId::Nii | FamilyId::Niii)
    }

    /// Parameters with a human-readable domain.
    pub fn params(self) -> &'static [ParamDef] {
        const RHO: ParamDef = ParamDef { name: "rho", domain: "{0,1}" };
        const SIGN: ParamDef = ParamDef { name: "sign", domain: "{1,-1}, default 1" };
        match self {
            FamilyId::Np => &[RHO],
            FamilyId::Ni => &[
                RHO,
                ParamDef { name: "lambda", domain: "real, >= 0" },
                ParamDef { name: "D", domain: "complex, Im D >= 0" },
            ],
            FamilyId::Nii => &[
                RHO,
                ParamDef { name: "B", domain: "complex" },
                ParamDef { name: "c", domain: "real, >= 0; (rho,B,c) != (0,0,0)" },
            ],
            FamilyId::Niii => &[RHO, SIGN],
            FamilyId::Si => &[ParamDef { name: "A", domain: "|A| = 1, Im A >= 0, A != -1" }],
            FamilyId::Sii => &[ParamDef { name: "x", domain: "real, > 0" }],
            FamilyId::Siii1 | FamilyId::Siii4 => &[SIGN],
            FamilyId::Siv2 => &[ParamDef { name: "x", domain: "{0,1}" }],
            FamilyId::Siv3 => &[ParamDef { name: "A", domain: "complex, |A| != 1" }],
            FamilyId::Siii2 | FamilyId::Siii3 | FamilyId::Siv1 | FamilyId::Sv | FamilyId::Sl2c => &[],
        }
    }

    /// Underlying real Lie algebras over the whole family.
    pub fn lie_algebras(self) -> &'static [&'static str] {
        match self {
            FamilyId::Np => &["h1", "h5"],
            FamilyId::Ni => &["h2", "h3", "h4", "h5", "h6", "h8"],
            FamilyId::Nii => &["h7", "h9", "h10", "h11", "h12", "h13", "h14", "h15", "h16"],
            FamilyId::Niii => &["h19-", "h26+"],
            FamilyId::Si => &["g1", "g2^alpha"],
            FamilyId::Sii => &["g3"],
            FamilyId::Siii1 => &["g4"],
            FamilyId::Siii2 => &["g5"],
            FamilyId::Siii3 => &["g6"],
            FamilyId::Siii4 => &["g7"],
            FamilyId::Siv1 | FamilyId::Siv2 | FamilyId::Siv3 => &["g8"],
            FamilyId::Sv => &["g9"],
            FamilyId::Sl2c => &["sl(2,C)"],
        }
    }
}

impl fmt::Display for FamilyId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for FamilyId {
    type Err = ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().trim_start_matches('(').trim_end_matches(')');
        FamilyId::ALL
            .into_iter()
            .find(|f| f.name().eq_ignore_ascii_case(t))
            .ok_or_else(|| ParseError::Family(s.to_string()))
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct ParamDef {
    pub name: &'static str,
    pub domain: &'static str,
}

/// A family with concrete structure parameters.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FamilySpec {
    pub id: FamilyId,
    pub params: BTreeMap<String, GaussianRational>,
}

fn in_set(x: &GaussianRational, allowed: &[i64]) -> bool {
    allowed.iter().any(|&a| *x == GaussianRational::from_int(a))
}

impl FamilySpec {
    /// Validates names and domains; `sign` defaults to 1.
    pub fn new(id: FamilyId, params: BTreeMap<String, GaussianRational>) -> Result<Self, CatalogError> {
        let mut spec = Self { id, params };
        let defs = id.params();
        for key in spec.params.keys() {
            if !defs.iter().any(|d| d.name == key) {
                return Err(CatalogError::UnknownParam { family: id.to_string(), param: key.clone() });
            }
        }
        for d in defs {
            if !spec.params.contains_key(d.name) {
                if d.name == "sign" {
                    spec.params.insert("sign".into(), GaussianRational::one());
                } else {
                    return Err(CatalogError::MissingParam { family: id.to_string(), param: d.name.into() });
                }
            }
        }
        spec.check_domain()?;
        Ok(spec)
    }

    pub fn bare(id: FamilyId) -> Result<Self, CatalogError> {
        Self::new(id, BTreeMap::new())
    }

    pub fn with(id: FamilyId, params: &[(&str, &str)]) -> Result<Self, CatalogError> {
        let mut map = BTreeMap::new();
        for (k, v) in params {
            let val = v.parse::<GaussianRational>().map_err(|_| CatalogError::Domain {
                family: id.to_string(),
                constraint: format!("{k}: unparsable value `{v}`"),
            })?;
            map.insert(k.to_string(), val);
        }
        Self::new(id, map)
    }

    /// Parses `k=v,k=v` (the empty string is allowed).
    pub fn parse(id: FamilyId, assignments: &str) -> Result<Self, FamilyParseError> {
        let mut map = BTreeMap::new();
        for part in assignments.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (k, v) = part.split_once('=').ok_or_else(|| ParseError::Assignment(part.to_string()))?;
            map.insert(k.trim().to_string(), v.parse::<GaussianRational>()?);
        }
        Ok(Self::new(id, map)?)
    }

    pub fn param(&self, name: &str) -> &GaussianRational {
        &self.params[name]
    }

    fn real_param(&self, name: &str) -> Rational {
        self.params[name].re().clone()
    }

    fn fail(&self, constraint: &str) -> CatalogError {
        CatalogError::Domain { family: self.id.to_string(), constraint: constraint.into() }
    }

    fn check_domain(&self) -> Result<(), CatalogError> {
        let p = |n: &str| &self.params[n];
        let need = |ok: bool, c: &str| if ok { Ok(()) } else { Err(self.fail(c)) };
        match self.id {
            FamilyId::Np => need(in_set(p("rho"), &[0, 1]), "rho in {0,1}"),
            FamilyId::Ni => {
                need(in_set(p("rho"), &[0, 1]), "rho in {0,1}")?;
                need(p("lambda").is_real() && !p("lambda").re().is_negative(), "lambda real and >= 0")?;
                need(!p("D").im().is_negative(), "Im D >= 0")
            }
            FamilyId::Nii => {
                need(in_set(p("rho"), &[0, 1]), "rho in {0,1}")?;
                need(p("c").is_real() && !p("c").re().is_negative(), "c real and >= 0")?;
                need(!(p("rho").is_zero() && p("B").is_zero() && p("c").is_zero()), "(rho,B,c) != (0,0,0)")
            }
            FamilyId::Niii => {
                need(in_set(p("rho"), &[0, 1]), "rho in {0,1}")?;
                need(in_set(p("sign"), &[1, -1]), "sign in {1,-1}")
            }
            FamilyId::Si => {
                let a = p("A");
                need(a.norm_sqr().is_one(), "|A| = 1")?;
                need(!a.im().is_negative(), "Im A >= 0")?;
                need(*a != GaussianRational::from_int(-1), "A != -1")
            }
            FamilyId::Sii => need(p("x").is_real() && p("x").re().is_positive(), "x real and > 0"),
            FamilyId::Siii1 | FamilyId::Siii4 => need(in_set(p("sign"), &[1, -1]), "sign in {1,-1}"),
            FamilyId::Siv2 => need(in_set(p("x"), &[0, 1]), "x in {0,1}"),
            FamilyId::Siv3 => need(!p("A").norm_sqr().is_one(), "|A| != 1"),
            _ => Ok(()),
        }
    }

    /// Lie algebra at these parameters, when determined by them.
    pub fn lie_algebra(&self) -> Option<String> {
        match self.id {
            FamilyId::Np => Some(if self.param("rho").is_zero() { "h1" } else { "h5" }.into()),
            FamilyId::Niii => Some(if self.param("rho").is_zero() { "h19-" } else { "h26+" }.into()),
            FamilyId::Si => {
                let a = self.param("A");
                if a.is_one() {
                    Some("g1".into())
                } else {
                    Some(format!("g2^{}", a.re() / a.im()))
                }
            }
            FamilyId::Ni | FamilyId::Nii => None,
            _ => Some(self.id.lie_algebras()[0].into()),
        }
    }

    /// Structure equations dφ^k as (target, coefficient, a, b) terms.
    pub fn differentials(&self) -> Vec<DiffTerm> {
        let g = |s: &str| s.parse::<GaussianRational>().expect("literal");
        let i = GaussianRational::i();
        let one = GaussianRational::one();
        let half = g("1/2");
        let mut out = Vec::new();
        let mut t = |k: usize, coef: GaussianRational, a: &str, b: &str| {
            if !coef.is_zero() {
                out.push(DiffTerm::new(FrameIndex::hol(k), coef, a.parse().unwrap(), b.parse().unwrap()));
            }
        };
        match self.id {
            FamilyId::Np => t(3, self.param("rho").clone(), "1", "2"),
            FamilyId::Ni => {
                t(3, self.param("rho").clone(), "1", "2");
                t(3, one, "1", "1b");
                t(3, self.param("lambda").clone(), "1", "2b");
                t(3, self.param("D").clone(), "2", "2b");
            }
            FamilyId::Nii => {
                t(2, one, "1", "1b");
                t(3, self.param("rho").clone(), "1", "2");
                t(3, self.param("B").clone(), "1", "2b");
                t(3, self.param("c").clone(), "2", "1b");
            }
            FamilyId::Niii => {
                let s = self.param("sign");
                t(2, one.clone(), "1", "3");
                t(2, one, "1", "3b");
                t(3, &i * self.param("rho"), "1", "1b");
                t(3, &i * s, "1", "2b");
                t(3, -(&i * s), "2", "1b");
            }
            FamilyId::Si | FamilyId::Siv3 => {
                let a = self.param("A").clone();
                let second = if self.id == FamilyId::Si { a.clone() } else { -one.clone() };
                t(1, a.clone(), "1", "3");
                t(1, second.clone(), "1", "3b");
                t(2, -a, "2", "3");
                t(2, -second, "2", "3b");
            }
            FamilyId::Sii => {
                let x = self.param("x").clone();
                let ix = &i * &x;
                let i4x = &i / &(&x * &GaussianRational::from_int(4));
                t(2, -half.clone(), "1", "3");
                t(2, -(&half + &ix), "1", "3b");
                t(2, ix, "3", "1b");
                t(3, half.clone(), "1", "2");
                t(3, &half - &i4x, "1", "2b");
                t(3, i4x, "2", "1b");
            }
            FamilyId::Siii1 | FamilyId::Siii3 | FamilyId::Siii4 => {
                t(1, i.clone(), "1", "3");
                t(1, i.clone(), "1", "3b");
                t(2, -i.clone(), "2", "3");
                t(2, -i, "2", "3b");
                let (a, b) = match self.id {
                    FamilyId::Siii1 => (self.param("sign").clone(), GaussianRational::zero()),
                    FamilyId::Siii3 => (one.clone(), one),
                    _ => (self.param("sign").clone(), -self.param("sign").clone()),
                };
                t(3, a, "1", "1b");
                t(3, b, "2", "2b");
            }
            FamilyId::Siii2 => {
                t(1, one.clone(), "1", "3");
                t(1, one.clone(), "1", "3b");
                t(2, -one.clone(), "2", "3");
                t(2, -one.clone(), "2", "3b");
                t(3, one.clone(), "1", "2b");
                t(3, one, "2", "1b");
            }
            FamilyId::Siv1 => {
                t(1, -one.clone(), "1", "3");
                t(2, one, "2", "3");
            }
            FamilyId::Siv2 => {
                t(1, g("2*i"), "1", "3");
                t(1, one, "3", "3b");
                t(2, g("-2*i"), "2", "3");
                t(2, self.param("x").clone(), "3", "3b");
            }
            FamilyId::Sv => {
                t(1, -one, "3", "3b");
                t(2, g("1/2*i"), "1", "2");
                t(2, half.clone(), "1", "3b");
                t(2, g("-1/2*i"), "2", "1b");
                t(3, g("-1/2*i"), "1", "3");
                t(3, g("1/2*i"), "3", "1b");
            }
            FamilyId::Sl2c => {
                t(1, one.clone(), "2", "3");
                t(2, -one.clone(), "1", "3");
                t(3, one, "1", "2");
            }
        }
        out
    }

    pub fn instantiate(&self) -> LieAlgebraCx {
        LieAlgebraCx::from_differentials(&self.differentials())
    }

    /// Compact label such as `Ni(D=i,lambda=0,rho=0)`.
    pub fn label(&self) -> String {
        if self.params.is_empty() {
            return self.id.to_string();
        }
        let inner: Vec<String> = self.params.iter().map(|(k, v)| format!("{k}={v}")).collect();
        format!("{}({})", self.id, inner.join(","))
    }
}

/// Error from [`FamilySpec::parse`].
#[derive(Debug, thiserror::Error, Clone, PartialEq)]
pub enum FamilyParseError {
    #[error(transparent)]
    Parse(#[from] ParseError),
    #[error(transparent)]
    Catalog(#[from] CatalogError),
}

pub fn instantiate(f: &FamilySpec) -> LieAlgebraCx {
    f.instantiate()
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum LocusKind {
    Kahler,
    Balanced,
    Pluriclosed,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MetricVar {
    U,
    V,
    Z,
}

impl MetricVar {
    pub fn get(self, m: &MetricParams) -> &GaussianRational {
        match self {
            MetricVar::U => &m.u,
            MetricVar::V => &m.v,
            MetricVar::Z => &m.z,
        }
    }

    pub fn name(self) -> &'static str {
        match self {
            MetricVar::U => "u",
            MetricVar::V => "v",
            MetricVar::Z => "z",
        }
    }
}

/// Locus conditions as data.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum Predicate {
    Always,
    Never,
    Vanishes {
        var: MetricVar,
    },
    IsReal {
        var: MetricVar,
    },
    R2EqualsOne,
    R2EqualsS2,
    ParamEquals {
        name: String,
        value: GaussianRational,
    },
    /// ρ + λ² − 2 Re D = 0.
    NiPluriclosed,
    /// s² + D = i ū λ.
    NiBalanced,
    All {
        of: Vec<Predicate>,
    },
}

impl Predicate {
    pub fn eval(&self, f: &FamilySpec, m: &MetricParams) -> bool {
        match self {
            Predicate::Always => true,
            Predicate::Never => false,
            Predicate::Vanishes { var } => var.get(m).is_zero(),
            Predicate::IsReal { var } => var.get(m).is_real(),
            Predicate::R2EqualsOne => m.r2.is_one(),
            Predicate::R2EqualsS2 => m.r2 == m.s2,
            Predicate::ParamEquals { name, value } => f.params.get(name) == Some(value),
            Predicate::NiPluriclosed => {
                let l = f.real_param("lambda");
                f.real_param("rho") + &l * &l - f.param("D").re() * rat(2, 1) == Rational::zero()
            }
            Predicate::NiBalanced => {
                let lhs = GaussianRational::real(m.s2.clone()) + f.param("D");
                let rhs = GaussianRational::i() * m.u.conj() * f.param("lambda");
                lhs == rhs
            }
            Predicate::All { of } => of.iter().all(|p| p.eval(f, m)),
        }
    }

    fn vanish(vars: &[MetricVar]) -> Self {
        Predicate::All { of: vars.iter().map(|&var| Predicate::Vanishes { var }).collect() }
    }
}

impl fmt::Display for Predicate {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Predicate::Always => f.write_str("any metric"),
            Predicate::Never => f.write_str("none"),
            Predicate::Vanishes { var } => write!(f, "{}=0", var.name()),
            Predicate::IsReal { var } => write!(f, "{} real", var.name()),
            Predicate::R2EqualsOne => f.write_str("r2=1"),
            Predicate::R2EqualsS2 => f.write_str("r2=s2"),
            Predicate::ParamEquals { name, value } => write!(f, "{name}={value}"),
            Predicate::NiPluriclosed => f.write_str("rho+lambda^2-2*Re(D)=0"),
            Predicate::NiBalanced => f.write_str("s2+D=i*conj(u)*lambda"),
            Predicate::All { of } => {
                let parts: Vec<String> = of.iter().map(ToString::to_string).collect();
                f.write_str(&parts.join(" and "))
            }
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricLocus {
    pub family: FamilyId,
    pub kind: LocusKind,
    pub constraint: Predicate,
    /// When set, the constraint characterizes the locus only among metrics
    /// satisfying this normalization.
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub within: Option<Predicate>,
}

impl MetricLocus {
    pub fn contains(&self, f: &FamilySpec, m: &MetricParams) -> bool {
        self.constraint.eval(f, m)
    }

    pub fn applies_to(&self, f: &FamilySpec, m: &MetricParams) -> bool {
        self.within.as_ref().is_none_or(|w| w.eval(f, m))
    }
}

pub const SL2C_NOTE: &str = "sl2c carries no locus list; its invariant metrics are all balanced";

/// Loci for one family; sl2c returns an empty list (see [`SL2C_NOTE`]).
pub fn special_metric_loci(f: &FamilySpec) -> Vec<MetricLocus> {
    use LocusKind::*;
    use MetricVar::*;
    use Predicate as P;
    let locus = |kind, constraint| MetricLocus { family: f.id, kind, constraint, within: None };
    let rho_zero = f.params.get("rho").is_some_and(Zero::is_zero);
    let a_is_i = P::ParamEquals { name: "A".into(), value: GaussianRational::i() };
    match f.id {
        FamilyId::Np if rho_zero => {
            vec![locus(Kahler, P::Always), locus(Balanced, P::Always), locus(Pluriclosed, P::Always)]
        }
        FamilyId::Np => vec![locus(Kahler, P::Never), locus(Balanced, P::Always), locus(Pluriclosed, P::Never)],
        FamilyId::Ni => vec![
            locus(Kahler, P::Never),
            MetricLocus {
                family: f.id,
                kind: Balanced,
                constraint: P::All { of: vec![P::R2EqualsOne, P::vanish(&[V, Z]), P::NiBalanced] },
                within: Some(P::R2EqualsOne),
            },
            locus(Pluriclosed, P::NiPluriclosed),
        ],
        FamilyId::Niii if rho_zero => {
            vec![locus(Kahler, P::Never), locus(Balanced, P::vanish(&[U, Z])), locus(Pluriclosed, P::Never)]
        }
        FamilyId::Si => vec![
            locus(Kahler, P::All { of: vec![a_is_i.clone(), P::vanish(&[U, V, Z])] }),
            locus(Balanced, P::vanish(&[V, Z])),
            locus(Pluriclosed, P::All { of: vec![a_is_i, P::vanish(&[U])] }),
        ],
        FamilyId::Sii => {
            vec![locus(Kahler, P::Never), locus(Balanced, P::vanish(&[U, Z])), locus(Pluriclosed, P::Never)]
        }
        FamilyId::Siii1 => {
            vec![locus(Kahler, P::Never), locus(Balanced, P::Never), locus(Pluriclosed, P::vanish(&[U]))]
        }
        FamilyId::Siii2 => vec![
            locus(Kahler, P::Never),
            locus(Balanced, P::All { of: vec![P::vanish(&[V, Z]), P::IsReal { var: U }] }),
            locus(Pluriclosed, P::Never),
        ],
        FamilyId::Siii4 => vec![
            locus(Kahler, P::Never),
            locus(Balanced, P::All { of: vec![P::vanish(&[V, Z]), P::R2EqualsS2] }),
            locus(Pluriclosed, P::Never),
        ],
        FamilyId::Siv1 => vec![locus(Kahler, P::Never), locus(Balanced, P::Always), locus(Pluriclosed, P::Never)],
        FamilyId::Siv3 => {
            vec![locus(Kahler, P::Never), locus(Balanced, P::vanish(&[V, Z])), locus(Pluriclosed, P::Never)]
        }
        FamilyId::Nii | FamilyId::Niii | FamilyId::Siii3 | FamilyId::Siv2 | FamilyId::Sv => {
            vec![locus(Kahler, P::Never), locus(Balanced, P::Never), locus(Pluriclosed, P::Never)]
        }
        FamilyId::Sl2c => Vec::new(),
    }
}

/// Default structure parameters per family, used by listings and sweeps.
pub fn representatives() -> Vec<FamilySpec> {
    let w = |id, p: &[(&str, &str)]| FamilySpec::with(id, p).expect("representative in domain");
    vec![
        w(FamilyId::Np, &[("rho", "0")]),
        w(FamilyId::Np, &[("rho", "1")]),
        w(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "i")]),
        w(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "0")]),
        w(FamilyId::Ni, &[("rho", "1"), ("lambda", "0"), ("D", "0")]),
        w(FamilyId::Ni, &[("rho", "1"), ("lambda", "2"), ("D", "1+i")]),
        w(FamilyId::Nii, &[("rho", "1"), ("B", "1+2*i"), ("c", "3")]),
        w(FamilyId::Nii, &[("rho", "0"), ("B", "1"), ("c", "0")]),
        w(FamilyId::Niii, &[("rho", "0"), ("sign", "1")]),
        w(FamilyId::Niii, &[("rho", "1"), ("sign", "-1")]),
        w(FamilyId::Si, &[("A", "1")]),
        w(FamilyId::Si, &[("A", "i")]),
        w(FamilyId::Si, &[("A", "3/5+4/5*i")]),
        w(FamilyId::Sii, &[("x", "1/3")]),
        w(FamilyId::Siii1, &[("sign", "1")]),
        w(FamilyId::Siii1, &[("sign", "-1")]),
        w(FamilyId::Siii2, &[]),
        w(FamilyId::Siii3, &[]),
        w(FamilyId::Siii4, &[("sign", "1")]),
        w(FamilyId::Siii4, &[("sign", "-1")]),
        w(FamilyId::Siv1, &[]),
        w(FamilyId::Siv2, &[("x", "0")]),
        w(FamilyId::Siv2, &[("x", "1")]),
        w(FamilyId::Siv3, &[("A", "2+i")]),
        w(FamilyId::Sv, &[]),
        w(FamilyId::Sl2c, &[]),
    ]
}
