//! Invariant Hermitian metrics: parameters, validation, the metric matrix,
//! torsion 3-forms and special-metric classification.

use std::fmt;

use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{MetricError, ParseError};
use crate::forms::{exterior_d, wedge, FormTensor};
use crate::frame::{is_hol, DIM};
use crate::lie::LieAlgebraCx;
use crate::scalar::{parse_rational_str, rat, rational_str, GaussianRational, Rational};
use crate::tensor::{invert, MultiTensor};

/// Coefficients of 2ω = i r²φ^{11̄} + i s²φ^{22̄} + i t²φ^{33̄} + uφ^{12̄} − ūφ^{21̄}
/// + vφ^{23̄} − v̄φ^{32̄} + zφ^{13̄} − z̄φ^{31̄}.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct MetricParams {
    #[serde(with = "rational_str")]
    pub r2: Rational,
    #[serde(with = "rational_str")]
    pub s2: Rational,
    #[serde(with = "rational_str")]
    pub t2: Rational,
    #[serde(default)]
    pub u: GaussianRational,
    #[serde(default)]
    pub v: GaussianRational,
    #[serde(default)]
    pub z: GaussianRational,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Inequality {
    R2Positive,
    S2Positive,
    T2Positive,
    RsOverU,
    RtOverZ,
    StOverV,
    Determinant,
}

impl fmt::Display for Inequality {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Inequality::R2Positive => "r2 > 0",
            Inequality::S2Positive => "s2 > 0",
            Inequality::T2Positive => "t2 > 0",
            Inequality::RsOverU => "r2*s2 > |u|^2",
            Inequality::RtOverZ => "r2*t2 > |z|^2",
            Inequality::StOverV => "s2*t2 > |v|^2",
            Inequality::Determinant => "r2*s2*t2 + 2*Re(i*conj(u)*conj(v)*z) > t2*|u|^2 + r2*|v|^2 + s2*|z|^2",
        })
    }
}

impl MetricParams {
    pub fn diagonal(r2: Rational, s2: Rational, t2: Rational) -> Self {
        Self { r2, s2, t2, u: Zero::zero(), v: Zero::zero(), z: Zero::zero() }
    }

    pub fn identity() -> Self {
        Self::diagonal(Rational::one(), Rational::one(), Rational::one())
    }

    pub fn is_diagonal(&self) -> bool {
        self.u.is_zero() && self.v.is_zero() && self.z.is_zero()
    }

    /// Builds parameters from `key=value` pairs; unset off-diagonal entries
    /// default to 0 and unset diagonal entries to 1.
    pub fn from_assignments<'a>(pairs: impl IntoIterator<Item = (&'a str, &'a str)>) -> Result<Self, ParseError> {
        let mut p = Self::identity();
        for (k, v) in pairs {
            match k {
                "r2" => p.r2 = parse_rational_str(v)?,
                "s2" => p.s2 = parse_rational_str(v)?,
                "t2" => p.t2 = parse_rational_str(v)?,
                "u" => p.u = v.parse()?,
                "v" => p.v = v.parse()?,
                "z" => p.z = v.parse()?,
                _ => return Err(ParseError::UnknownKey(k.to_string())),
            }
        }
        Ok(p)
    }

    /// 8i·detΩ = r²s²t² − r²|v|² − s²|z|² − t²|u|² + 2Re(i ū v̄ z).
    pub fn det_scaled(&self) -> Rational {
        let triple = self.u.conj() * self.v.conj() * &self.z;
        &self.r2 * &self.s2 * &self.t2
            - &self.r2 * self.v.norm_sqr()
            - &self.s2 * self.z.norm_sqr()
            - &self.t2 * self.u.norm_sqr()
            - triple.im() * rat(2, 1)
    }

    pub fn validate(&self) -> Result<(), MetricError> {
        let checks = [
            (self.r2.is_positive(), Inequality::R2Positive),
            (self.s2.is_positive(), Inequality::S2Positive),
            (self.t2.is_positive(), Inequality::T2Positive),
            (&self.r2 * &self.s2 > self.u.norm_sqr(), Inequality::RsOverU),
            (&self.r2 * &self.t2 > self.z.norm_sqr(), Inequality::RtOverZ),
            (&self.s2 * &self.t2 > self.v.norm_sqr(), Inequality::StOverV),
            (self.det_scaled().is_positive(), Inequality::Determinant),
        ];
        match checks.into_iter().find(|(ok, _)| !ok) {
            Some((_, which)) => Err(MetricError::Violated(which)),
            None => Ok(()),
        }
    }

    /// 2ω as listed in the type docs, stored as a skew tensor.
    fn two_omega(&self) -> MultiTensor {
        let i = GaussianRational::i();
        let mut w = MultiTensor::zeros(2);
        let mut put = |a: usize, b: usize, val: GaussianRational| {
            w[[b, a]] = -val.clone();
            w[[a, b]] = val;
        };
        put(0, 3, i.scale(&self.r2));
        put(1, 4, i.scale(&self.s2));
        put(2, 5, i.scale(&self.t2));
        put(0, 4, self.u.clone());
        put(1, 3, -self.u.conj());
        put(1, 5, self.v.clone());
        put(2, 4, -self.v.conj());
        put(0, 5, self.z.clone());
        put(2, 3, -self.z.conj());
        w
    }
}

/// Metric data: g is the positive-definite metric with ω(x,y) = g(Jx,y).
#[derive(Clone, Debug, PartialEq)]
pub struct HermitianData {
    pub params: MetricParams,
    pub g: MultiTensor,
    pub g_inv: MultiTensor,
    pub omega: MultiTensor,
    pub det_scaled: GaussianRational,
}

/// Eigenvalue of J on a frame vector: i on φ_k, −i on φ̄_k.
pub fn j_eigen(a: usize) -> GaussianRational {
    if is_hol(a) {
        GaussianRational::i()
    } else {
        -GaussianRational::i()
    }
}

pub fn build_metric(p: &MetricParams) -> Result<HermitianData, MetricError> {
    p.validate()?;
    let half = GaussianRational::real(rat(1, 2));
    let omega = p.two_omega().scaled(&half);
    // g_{ab} = ω_{ab} / j_a
    let g = MultiTensor::from_fn(2, |ix| {
        let w = omega.at(ix);
        if is_hol(ix[0]) {
            -w.times_i()
        } else {
            w.times_i()
        }
    });
    let g_inv = invert(&g).expect("validated metric is invertible");
    Ok(HermitianData { params: p.clone(), g, g_inv, omega, det_scaled: GaussianRational::real(p.det_scaled()) })
}

impl HermitianData {
    pub fn omega_form(&self) -> FormTensor {
        FormTensor::new(self.omega.clone()).expect("omega is skew")
    }

    /// The bilinear form b = −g, for which ω = b(·, J·); curvature is lowered
    /// and traced with it.
    pub fn pairing(&self) -> MultiTensor {
        self.g.scaled(&-GaussianRational::one())
    }

    pub fn pairing_inv(&self) -> MultiTensor {
        self.g_inv.scaled(&-GaussianRational::one())
    }
}

/// T = −dω(J·,J·,J·) and C = dω(J·,·,·). T is a 3-form; C is skew in its
/// last two slots only.
pub fn torsion_forms(h: &HermitianData, c: &LieAlgebraCx) -> (FormTensor, MultiTensor) {
    let dw = exterior_d(&h.omega_form(), c);
    let t = FormTensor::new(MultiTensor::from_fn(3, |ix| {
        let v = dw.tensor().at(ix);
        if v.is_zero() {
            return GaussianRational::zero();
        }
        -(j_eigen(ix[0]) * j_eigen(ix[1]) * j_eigen(ix[2]) * v)
    }))
    .expect("T is skew");
    let cform = MultiTensor::from_fn(3, |ix| {
        let v = dw.tensor().at(ix);
        if v.is_zero() {
            return GaussianRational::zero();
        }
        j_eigen(ix[0]) * v
    });
    (t, cform)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricClass {
    pub kahler: bool,
    pub balanced: bool,
    pub pluriclosed: bool,
}

/// Kähler: dω = 0; balanced: d(ω²) = 0; pluriclosed: ∂∂̄ω = 0 via bidegree
/// projections of d.
pub fn classify_metric(h: &HermitianData, c: &LieAlgebraCx) -> MetricClass {
    let w = h.omega_form();
    let dw = exterior_d(&w, c);
    let kahler = dw.is_zero();
    let balanced = kahler || exterior_d(&wedge(&w, &w), c).is_zero();
    let pluriclosed = kahler || {
        let dbar_w = dw.project_type(1, 2);
        exterior_d(&dbar_w, c).project_type(2, 2).is_zero()
    };
    MetricClass { kahler, balanced, pluriclosed }
}

/// Balanced test through dω∧ω = 0, used to cross-check [`classify_metric`].
pub fn balanced_via_product(h: &HermitianData, c: &LieAlgebraCx) -> bool {
    let w = h.omega_form();
    wedge(&exterior_d(&w, c), &w).is_zero()
}

/// True when ω(Jx,Jy) = ω(x,y) on all frame pairs.
pub fn omega_is_j_invariant(h: &HermitianData) -> bool {
    (0..DIM).all(|a| {
        (0..DIM).all(|b| {
            let w = h.omega.at(&[a, b]);
            j_eigen(a) * j_eigen(b) * w == *w
        })
    })
}
