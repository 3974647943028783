//! Christoffel symbols of ∇^{ε,ρ}, curvature, Ricci traces, torsion and the
//! Bianchi-with-torsion defect.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::error::ParseError;
use crate::frame::{is_hol, FrameIndex, DIM};
use crate::lie::LieAlgebraCx;
use crate::metric::{torsion_forms, HermitianData};
use crate::scalar::{parse_rational_str, rat, rational_str, Field, GaussianRational, Rational, RefArith};
use crate::tensor::MultiTensor;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum Preset {
    Lc,
    Chern,
    Bismut,
    AntiBismut,
    FirstCanonical,
    MinimalGauduchon,
}

impl Preset {
    pub const ALL: [Preset; 6] = [
        Preset::Lc,
        Preset::Chern,
        Preset::Bismut,
        Preset::AntiBismut,
        Preset::FirstCanonical,
        Preset::MinimalGauduchon,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Preset::Lc => "lc",
            Preset::Chern => "chern",
            Preset::Bismut => "bismut",
            Preset::AntiBismut => "anti-bismut",
            Preset::FirstCanonical => "first-canonical",
            Preset::MinimalGauduchon => "minimal-gauduchon",
        }
    }

    fn values(self) -> (Rational, Rational) {
        match self {
            Preset::Lc => (rat(0, 1), rat(0, 1)),
            Preset::Chern => (rat(0, 1), rat(1, 2)),
            Preset::Bismut => (rat(1, 2), rat(0, 1)),
            Preset::AntiBismut => (rat(-1, 2), rat(0, 1)),
            Preset::FirstCanonical => (rat(1, 4), rat(1, 4)),
            Preset::MinimalGauduchon => (rat(1, 6), rat(1, 3)),
        }
    }
}

/// The connection ∇^{ε,ρ}; ε + ρ = ½ is the Gauduchon line.
#[derive(Clone, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ConnectionSpec {
    #[serde(with = "rational_str")]
    pub eps: Rational,
    #[serde(with = "rational_str")]
    pub rho: Rational,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub name: Option<Preset>,
}

impl ConnectionSpec {
    pub fn new(eps: Rational, rho: Rational) -> Self {
        let name = Preset::ALL.into_iter().find(|p| p.values() == (eps.clone(), rho.clone()));
        Self { eps, rho, name }
    }

    pub fn preset(p: Preset) -> Self {
        let (eps, rho) = p.values();
        Self { eps, rho, name: Some(p) }
    }

    pub fn lc() -> Self {
        Self::preset(Preset::Lc)
    }

    pub fn chern() -> Self {
        Self::preset(Preset::Chern)
    }

    pub fn bismut() -> Self {
        Self::preset(Preset::Bismut)
    }

    /// ∇^ε = (ε, ½ − ε).
    pub fn gauduchon(eps: Rational) -> Self {
        let rho = rat(1, 2) - &eps;
        Self::new(eps, rho)
    }

    pub fn on_gauduchon_line(&self) -> bool {
        &self.eps + &self.rho == rat(1, 2)
    }

    pub fn is_lc(&self) -> bool {
        self.eps.is_zero() && self.rho.is_zero()
    }
}

impl fmt::Display for ConnectionSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self.name {
            Some(p) => f.write_str(p.name()),
            None => write!(f, "eps={},rho={}", self.eps, self.rho),
        }
    }
}

impl FromStr for ConnectionSpec {
    type Err = ParseError;

    /// A preset name, `eps=a/b,rho=c/d`, or `eps=a/b` alone for the Gauduchon line.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let t = s.trim().to_ascii_lowercase();
        let alias = match t.as_str() {
            "lc" | "levi-civita" => Some(Preset::Lc),
            "chern" => Some(Preset::Chern),
            "bismut" | "strominger-bismut" => Some(Preset::Bismut),
            "anti-bismut" | "antibismut" => Some(Preset::AntiBismut),
            "first-canonical" | "firstcanonical" | "lichnerowicz" => Some(Preset::FirstCanonical),
            "minimal-gauduchon" | "minimalgauduchon" => Some(Preset::MinimalGauduchon),
            _ => None,
        };
        if let Some(p) = alias {
            return Ok(Self::preset(p));
        }
        let mut eps = None;
        let mut rho = None;
        for part in t.split(',') {
            let (k, v) = part.split_once('=').ok_or_else(|| ParseError::Spec(s.to_string()))?;
            let val = parse_rational_str(v).map_err(|_| ParseError::Spec(s.to_string()))?;
            match k.trim() {
                "eps" | "epsilon" => eps = Some(val),
                "rho" => rho = Some(val),
                _ => return Err(ParseError::Spec(s.to_string())),
            }
        }
        match (eps, rho) {
            (Some(e), Some(r)) => Ok(Self::new(e, r)),
            (Some(e), None) => Ok(Self::gauduchon(e)),
            _ => Err(ParseError::Spec(s.to_string())),
        }
    }
}

/// Γ[I][H][K] = Γ_{IH}^K with ∇_{φ_I} φ_H = Γ_{IH}^K φ_K.
#[derive(Clone, Debug, PartialEq)]
pub struct ChristoffelTable(pub MultiTensor);

/// R[I][H][K][L] = R_{IHKL}.
#[derive(Clone, Debug, PartialEq)]
pub struct CurvatureTensor {
    pub r: MultiTensor,
    pub spec: ConnectionSpec,
}

/// Levi-Civita symbols from the Koszul formula; valid for any nondegenerate
/// symmetric g, Hermitian or not.
pub fn levi_civita<S: Field>(c: &MultiTensor<S>, g: &MultiTensor<S>, g_inv: &MultiTensor<S>) -> MultiTensor<S>
where
    for<'a> &'a S: RefArith<S>,
{
    let half = (S::one() + S::one()).inverse().expect("2 is invertible");
    // lowered: ½(c_{IH}^B g_{BA} − c_{HA}^B g_{BI} − c_{IA}^B g_{BH})
    let mut low = MultiTensor::<S>::zeros(3);
    for i in 0..DIM {
        for h in 0..DIM {
            for a in 0..DIM {
                let mut s = S::zero();
                for b in 0..DIM {
                    let x = &c[[i, h, b]];
                    if !x.is_zero() {
                        s += &(x * &g[[b, a]]);
                    }
                    let y = &c[[h, a, b]];
                    if !y.is_zero() {
                        s -= &(y * &g[[b, i]]);
                    }
                    let z = &c[[i, a, b]];
                    if !z.is_zero() {
                        s -= &(z * &g[[b, h]]);
                    }
                }
                low[[i, h, a]] = &s * &half;
            }
        }
    }
    raise_last(&low, g_inv)
}

/// X_{IH}^K = g^{KA} X_{IHA}.
fn raise_last<S: Field>(low: &MultiTensor<S>, g_inv: &MultiTensor<S>) -> MultiTensor<S>
where
    for<'a> &'a S: RefArith<S>,
{
    let mut out = MultiTensor::<S>::zeros(3);
    for i in 0..DIM {
        for h in 0..DIM {
            for k in 0..DIM {
                let mut s = S::zero();
                for a in 0..DIM {
                    let x = &low[[i, h, a]];
                    if !x.is_zero() {
                        let gi = &g_inv[[k, a]];
                        if !gi.is_zero() {
                            s += &(gi * x);
                        }
                    }
                }
                out[[i, h, k]] = s;
            }
        }
    }
    out
}

/// Pieces of Γ^{ε,ρ} that do not depend on (ε, ρ): Γ^{LC} and the raised
/// torsion terms b^{KL}T_{IHL}, b^{KL}C_{IHL} with b = −g.
#[derive(Clone, Debug)]
pub struct ChristoffelParts {
    pub lc: MultiTensor,
    pub t_raised: MultiTensor,
    pub c_raised: MultiTensor,
}

impl ChristoffelParts {
    pub fn new(h: &HermitianData, c: &LieAlgebraCx) -> Self {
        let lc = levi_civita(c.c(), &h.g, &h.g_inv);
        let (t, cc) = torsion_forms(h, c);
        let b_inv = h.pairing_inv();
        Self { lc, t_raised: raise_last(t.tensor(), &b_inv), c_raised: raise_last(&cc, &b_inv) }
    }

    /// Γ^{LC} + ε b^{KL}T_{IHL} + ρ b^{KL}C_{IHL}.
    pub fn combine(&self, spec: &ConnectionSpec) -> ChristoffelTable {
        let e = GaussianRational::real(spec.eps.clone());
        let r = GaussianRational::real(spec.rho.clone());
        let with_t = if e.is_zero() { self.lc.clone() } else { self.lc.zip_with(&self.t_raised, |a, t| a + &(t * &e)) };
        let out = if r.is_zero() { with_t } else { with_t.zip_with(&self.c_raised, |a, c| a + &(c * &r)) };
        ChristoffelTable(out)
    }
}

pub fn christoffel(spec: &ConnectionSpec, h: &HermitianData, c: &LieAlgebraCx) -> ChristoffelTable {
    ChristoffelParts::new(h, c).combine(spec)
}

/// Curvature endomorphism E[I][H][K][A] = (R(φ_I,φ_H)φ_K)^A with
/// R(x,y) = [∇_x,∇_y] − ∇_{[x,y]}.
pub fn curvature_endomorphism<S: Field>(gamma: &MultiTensor<S>, c: &MultiTensor<S>) -> MultiTensor<S>
where
    for<'a> &'a S: RefArith<S>,
{
    let mut e = MultiTensor::<S>::zeros(4);
    let mut acc: Vec<S> = vec![S::zero(); DIM];
    for i in 0..DIM {
        for h in 0..DIM {
            for k in 0..DIM {
                acc.iter_mut().for_each(|x| *x = S::zero());
                for b in 0..DIM {
                    let hk = &gamma[[h, k, b]];
                    if !hk.is_zero() {
                        for (a, slot) in acc.iter_mut().enumerate() {
                            let ib = &gamma[[i, b, a]];
                            if !ib.is_zero() {
                                *slot += &(hk * ib);
                            }
                        }
                    }
                    let ik = &gamma[[i, k, b]];
                    if !ik.is_zero() {
                        for (a, slot) in acc.iter_mut().enumerate() {
                            let hb = &gamma[[h, b, a]];
                            if !hb.is_zero() {
                                *slot -= &(ik * hb);
                            }
                        }
                    }
                    let cb = &c[[i, h, b]];
                    if !cb.is_zero() {
                        for (a, slot) in acc.iter_mut().enumerate() {
                            let bk = &gamma[[b, k, a]];
                            if !bk.is_zero() {
                                *slot -= &(cb * bk);
                            }
                        }
                    }
                }
                for (a, v) in acc.iter().enumerate() {
                    e[[i, h, k, a]] = v.clone();
                }
            }
        }
    }
    e
}

/// R_{IHKL} = b_{AL} E^A_{IHK} with b = −g.
pub fn curvature(
    gamma: &ChristoffelTable,
    spec: &ConnectionSpec,
    h: &HermitianData,
    c: &LieAlgebraCx,
) -> CurvatureTensor {
    CurvatureTensor { r: crate::kernel::lowered_curvature(&gamma.0, c.c(), &h.pairing()), spec: spec.clone() }
}

#[cfg(test)]
fn lower_last(e: &MultiTensor, b: &MultiTensor) -> MultiTensor {
    let mut r = MultiTensor::zeros(4);
    for i in 0..DIM {
        for h in 0..DIM {
            for k in 0..DIM {
                for l in 0..DIM {
                    let mut s = GaussianRational::zero();
                    for a in 0..DIM {
                        let x = &e[[i, h, k, a]];
                        if !x.is_zero() {
                            let y = &b[[a, l]];
                            if !y.is_zero() {
                                s += &(x * y);
                            }
                        }
                    }
                    r[[i, h, k, l]] = s;
                }
            }
        }
    }
    r
}

/// Christoffel symbols and curvature in one call.
pub fn evaluate(spec: &ConnectionSpec, h: &HermitianData, c: &LieAlgebraCx) -> CurvatureTensor {
    curvature(&christoffel(spec, h, c), spec, h, c)
}

/// Curvature along the Gauduchon line. Γ^ε is affine in ε, so R^ε is a
/// quadratic polynomial in ε and is recovered exactly from ε = 0, ½, 1.
#[derive(Clone, Debug)]
pub struct GauduchonPencil {
    poly: crate::kernel::QuadraticPencil,
}

impl GauduchonPencil {
    pub fn new(parts: &ChristoffelParts, h: &HermitianData, c: &LieAlgebraCx) -> Self {
        let at = |e: Rational| {
            let spec = ConnectionSpec::gauduchon(e);
            curvature(&parts.combine(&spec), &spec, h, c).r
        };
        let (r0, rh, r1) = (at(rat(0, 1)), at(rat(1, 2)), at(rat(1, 1)));
        Self { poly: crate::kernel::QuadraticPencil::from_nodes(&r0, &rh, &r1) }
    }

    pub fn at(&self, eps: &Rational) -> CurvatureTensor {
        CurvatureTensor { r: self.poly.at(eps), spec: ConnectionSpec::gauduchon(eps.clone()) }
    }
}

/// Standard Ricci Ric(y,z) = tr(x ↦ R(x,y)z) from the endomorphism form.
pub fn ricci_from_endomorphism<S: Field>(e: &MultiTensor<S>) -> MultiTensor<S>
where
    for<'a> &'a S: RefArith<S>,
{
    MultiTensor::from_fn(2, |ix| {
        let mut s = S::zero();
        for b in 0..DIM {
            s += &e[[b, ix[0], ix[1], b]];
        }
        s
    })
}

#[derive(Clone, Debug, PartialEq)]
pub struct RicciData {
    pub ric1: MultiTensor,
    pub ric2: MultiTensor,
    pub ric_lc: MultiTensor,
    pub scal: GaussianRational,
}

/// First Ricci ric1_{IH} = Σ_{k} E^k_{IHk} (trace over the (1,0) frame),
/// second Ricci ric2_{KL} = Σ_{i,H} b^{iH} R_{iHKL}, scal = Σ_{i,H} b^{iH} ric1_{iH};
/// b = −g throughout.
pub fn ricci_and_scalar(r: &CurvatureTensor, h: &HermitianData) -> RicciData {
    let b_inv = h.pairing_inv();
    let e = MultiTensor::from_fn(4, |ix| {
        let mut s = GaussianRational::zero();
        for l in 0..DIM {
            let x = &r.r[[ix[0], ix[1], ix[2], l]];
            if !x.is_zero() {
                s += &(&b_inv[[ix[3], l]] * x);
            }
        }
        s
    });
    let ric1 = MultiTensor::from_fn(2, |ix| {
        let mut s = GaussianRational::zero();
        for k in (0..DIM).filter(|&k| is_hol(k)) {
            s += &e[[ix[0], ix[1], k, k]];
        }
        s
    });
    let ric2 = MultiTensor::from_fn(2, |ix| {
        let mut s = GaussianRational::zero();
        for i in (0..DIM).filter(|&i| is_hol(i)) {
            for hh in 0..DIM {
                let bi = &b_inv[[i, hh]];
                if !bi.is_zero() {
                    s += &(bi * &r.r[[i, hh, ix[0], ix[1]]]);
                }
            }
        }
        s
    });
    let mut scal = GaussianRational::zero();
    for i in (0..DIM).filter(|&i| is_hol(i)) {
        for hh in 0..DIM {
            scal += &(&b_inv[[i, hh]] * &ric1[[i, hh]]);
        }
    }
    RicciData { ric1, ric2, ric_lc: ricci_from_endomorphism(&e), scal }
}

/// trace of ric2 with b^{kL} over holomorphic k, equal to `scal`.
pub fn trace_ric2(ric2: &MultiTensor, h: &HermitianData) -> GaussianRational {
    let b_inv = h.pairing_inv();
    let mut s = GaussianRational::zero();
    for k in (0..DIM).filter(|&k| is_hol(k)) {
        for l in 0..DIM {
            s += &(&b_inv[[k, l]] * &ric2[[k, l]]);
        }
    }
    s
}

#[derive(Clone, Debug, PartialEq)]
pub struct BianchiCheck {
    /// T[I][H][K] = (∇_{φ_I}φ_H − ∇_{φ_H}φ_I − [φ_I,φ_H])^K.
    pub torsion: MultiTensor,
    /// D[X][Y][Z][A]: A-component of 𝔖 R(x,y)z − 𝔖 {T(T(x,y),z) + (∇_x T)(y,z)}.
    pub defect: MultiTensor,
}

impl BianchiCheck {
    pub fn holds(&self) -> bool {
        self.defect.is_zero()
    }
}

pub fn torsion_and_bianchi_defect(spec: &ConnectionSpec, h: &HermitianData, c: &LieAlgebraCx) -> BianchiCheck {
    let gamma = christoffel(spec, h, c).0;
    let (torsion, defect) = crate::kernel::torsion_and_defect(&gamma, c.c());
    BianchiCheck { torsion, defect }
}

/// Γ_{IH}^A b_{AL} + Γ_{IL}^A b_{AH}; identically zero for a metric connection.
pub fn metric_compatibility_residue(gamma: &ChristoffelTable, h: &HermitianData) -> MultiTensor {
    let g = &h.g;
    let low = MultiTensor::from_fn(3, |ix| {
        let mut s = GaussianRational::zero();
        for a in 0..DIM {
            s += &(&gamma.0[[ix[0], ix[1], a]] * &g[[a, ix[2]]]);
        }
        s
    });
    MultiTensor::from_fn(3, |ix| &low[[ix[0], ix[1], ix[2]]] + &low[[ix[0], ix[2], ix[1]]])
}

/// ∇J = 0 in frame terms: no Christoffel symbol mixes (1,0) and (0,1) frames.
pub fn preserves_complex_structure(gamma: &ChristoffelTable) -> bool {
    gamma.0.nonzero().all(|(ix, _)| ix[1].is_holomorphic() == ix[2].is_holomorphic())
}

impl CurvatureTensor {
    pub fn is_zero(&self) -> bool {
        self.r.is_zero()
    }

    /// R_{IHKL} + R_{HIKL} and R_{IHKL} + R_{IHLK} both vanish.
    pub fn is_skew_in_pairs(&self) -> bool {
        let r = &self.r;
        (0..DIM.pow(4)).all(|o| {
            let ix = [o / 216, (o / 36) % 6, (o / 6) % 6, o % 6];
            (&r[ix] + &r[[ix[1], ix[0], ix[2], ix[3]]]).is_zero()
                && (&r[ix] + &r[[ix[0], ix[1], ix[3], ix[2]]]).is_zero()
        })
    }

    pub fn is_real(&self) -> bool {
        self.r.conjugate() == self.r
    }

    /// (Symm): R_{IHKL} = R_{KLIH}.
    pub fn has_pair_symmetry(&self) -> bool {
        let r = &self.r;
        (0..DIM.pow(4)).all(|o| {
            let ix = [o / 216, (o / 36) % 6, (o / 6) % 6, o % 6];
            r[ix] == r[[ix[2], ix[3], ix[0], ix[1]]]
        })
    }

    pub fn component(&self, labels: &str) -> Result<GaussianRational, ParseError> {
        let ix = crate::frame::parse_tuple(labels)?;
        if ix.len() != 4 {
            return Err(ParseError::FrameIndex(labels.to_string()));
        }
        Ok(self.r.get(&ix).clone())
    }
}

/// One nonzero curvature component in the JSON dump.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CurvatureRecord {
    pub i: FrameIndex,
    pub h: FrameIndex,
    pub k: FrameIndex,
    pub l: FrameIndex,
    pub value: GaussianRational,
}

impl CurvatureTensor {
    pub fn records(&self) -> Vec<CurvatureRecord> {
        self.r
            .nonzero()
            .map(|(ix, v)| CurvatureRecord { i: ix[0], h: ix[1], k: ix[2], l: ix[3], value: v.clone() })
            .collect()
    }

    pub fn from_records(records: &[CurvatureRecord], spec: ConnectionSpec) -> Self {
        let comps: Vec<crate::tensor::Component> = records
            .iter()
            .map(|r| crate::tensor::Component { index: vec![r.i, r.h, r.k, r.l], value: r.value.clone() })
            .collect();
        Self { r: MultiTensor::from_components(4, &comps).expect("records are rank 4"), spec }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::metric::{build_metric, MetricParams};

    #[test]
    fn spec_parsing() {
        assert_eq!("chern".parse::<ConnectionSpec>().unwrap(), ConnectionSpec::chern());
        let s: ConnectionSpec = "eps=1/6,rho=1/3".parse().unwrap();
        assert_eq!(s.name, Some(Preset::MinimalGauduchon));
        let g: ConnectionSpec = "eps=2/3".parse().unwrap();
        assert_eq!(g.rho, rat(-1, 6));
        assert!(g.on_gauduchon_line());
        assert!("eps=x".parse::<ConnectionSpec>().is_err());
        assert!("foo".parse::<ConnectionSpec>().is_err());
        assert_eq!(ConnectionSpec::new(rat(1, 5), rat(0, 1)).to_string(), "eps=1/5,rho=0");
    }

    #[test]
    fn pencil_interpolates_exactly() {
        let f = crate::catalog::FamilySpec::with(
            crate::catalog::FamilyId::Nii,
            &[("rho", "1"), ("B", "1+2*i"), ("c", "3")],
        )
        .unwrap();
        let lie = f.instantiate();
        let mut m = MetricParams::identity();
        m.u = "1/3-1/2*i".parse().unwrap();
        m.z = "1/4".parse().unwrap();
        m.t2 = rat(3, 2);
        let h = build_metric(&m).unwrap();
        let parts = ChristoffelParts::new(&h, &lie);
        let pencil = GauduchonPencil::new(&parts, &h, &lie);
        for e in [rat(1, 4), rat(-1, 2), rat(2, 3), rat(1, 2)] {
            assert_eq!(pencil.at(&e), evaluate(&ConnectionSpec::gauduchon(e), &h, &lie));
        }
    }

    #[test]
    fn fraction_free_kernel_matches_generic() {
        let f = crate::catalog::FamilySpec::with(crate::catalog::FamilyId::Siii2, &[]).unwrap();
        let lie = f.instantiate();
        let mut m = MetricParams::identity();
        m.u = "1/3-1/2*i".parse().unwrap();
        m.v = "2/7*i".parse().unwrap();
        m.z = "1/4".parse().unwrap();
        m.s2 = rat(5, 3);
        let h = build_metric(&m).unwrap();
        for spec in [ConnectionSpec::lc(), ConnectionSpec::bismut(), ConnectionSpec::new(rat(2, 5), rat(-3, 7))] {
            let g = christoffel(&spec, &h, &lie);
            let generic = lower_last(&curvature_endomorphism(&g.0, lie.c()), &h.pairing());
            assert_eq!(curvature(&g, &spec, &h, &lie).r, generic);
        }
    }

    #[test]
    fn bianchi_defect_vanishes_and_detects_corruption() {
        let f = crate::catalog::FamilySpec::with(crate::catalog::FamilyId::Siii2, &[]).unwrap();
        let lie = f.instantiate();
        let mut m = MetricParams::identity();
        m.u = "1/3-1/2*i".parse().unwrap();
        m.v = "1/5".parse().unwrap();
        let h = build_metric(&m).unwrap();
        for spec in [ConnectionSpec::lc(), ConnectionSpec::bismut(), ConnectionSpec::new(rat(2, 5), rat(-3, 7))] {
            let b = torsion_and_bianchi_defect(&spec, &h, &lie);
            assert!(b.holds(), "{spec}");
            let g = christoffel(&spec, &h, &lie).0;
            let expected = MultiTensor::from_fn(3, |ix| {
                &(&g[[ix[0], ix[1], ix[2]]] - &g[[ix[1], ix[0], ix[2]]]) - &lie.c()[[ix[0], ix[1], ix[2]]]
            });
            assert_eq!(b.torsion, expected);
        }
    }

    #[test]
    fn torus_is_flat() {
        let h = build_metric(&MetricParams::identity()).unwrap();
        let c = LieAlgebraCx::abelian();
        for p in Preset::ALL {
            let spec = ConnectionSpec::preset(p);
            assert!(christoffel(&spec, &h, &c).0.is_zero());
            assert!(evaluate(&spec, &h, &c).is_zero());
        }
    }
}
