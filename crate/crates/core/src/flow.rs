//! Invariant Ricci flow dg/dt = −Ric(g) as an ODE on the 6×6 metric matrix in
//! the complexified frame, with a monitor for the pure-type (non-Hermitian)
//! block.

use nalgebra::{Cholesky, Matrix6};
use num_complex::Complex64;
use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::connection::{curvature_endomorphism, levi_civita, ricci_from_endomorphism};
use crate::error::FlowError;
use crate::frame::{bar, is_hol, tuple_label, FrameIndex, DIM};
use crate::lie::LieAlgebraCx;
use crate::metric::HermitianData;
use crate::scalar::{Field, GaussianRational, RefArith};
use crate::tensor::{invert, MultiTensor};

#[derive(Clone, Debug)]
pub struct FlowState {
    pub t: f64,
    pub g6: MultiTensor<Complex64>,
    pub structure: LieAlgebraCx,
}

impl FlowState {
    pub fn new(h: &HermitianData, structure: &LieAlgebraCx) -> Self {
        Self { t: 0.0, g6: h.g.to_complex(), structure: structure.clone() }
    }

    pub fn validate(&self) -> Result<(), FlowError> {
        if positive_definite(&self.g6) {
            Ok(())
        } else {
            Err(FlowError::NotPositive)
        }
    }
}

/// −Ric of the Levi-Civita connection of `g`; None when `g` is singular.
pub fn ricci_rhs<S: Field>(g: &MultiTensor<S>, c: &MultiTensor<S>) -> Option<MultiTensor<S>>
where
    for<'a> &'a S: RefArith<S>,
{
    let g_inv = invert(g)?;
    let gamma = levi_civita(c, g, &g_inv);
    let ric = ricci_from_endomorphism(&curvature_endomorphism(&gamma, c));
    let mut minus_one = S::zero();
    minus_one -= &S::one();
    Some(ric.scaled(&minus_one))
}

/// Exact right-hand side at a rational metric.
pub fn ricci_rhs_exact(h: &HermitianData, c: &LieAlgebraCx) -> MultiTensor {
    ricci_rhs(&h.g, c.c()).expect("validated metric is invertible")
}

/// Pure-type entries Ric_{jk}, Ric_{j̄k̄} of the LC Ricci tensor at `h`,
/// nonzero ones only.
pub fn pure_type_ricci(h: &HermitianData, c: &LieAlgebraCx) -> Vec<(String, GaussianRational)> {
    let rhs = ricci_rhs_exact(h, c);
    let mut out = Vec::new();
    for a in 0..DIM {
        for b in 0..DIM {
            if is_hol(a) == is_hol(b) && !rhs[[a, b]].is_zero() {
                let label = format!("Ric{}", tuple_label(&[FrameIndex::ALL[a], FrameIndex::ALL[b]]));
                out.push((label, -rhs[[a, b]].clone()));
            }
        }
    }
    out
}

/// Largest modulus over the pure-type blocks g_{jk} and g_{j̄k̄}.
pub fn hermitian_deviation(g6: &MultiTensor<Complex64>) -> f64 {
    let mut m: f64 = 0.0;
    for a in 0..DIM {
        for b in 0..DIM {
            if is_hol(a) == is_hol(b) {
                m = m.max(g6[[a, b]].norm());
            }
        }
    }
    m
}

/// Real frame X_k = φ_k + φ̄_k, Y_k = i(φ_k − φ̄_k), ordered X1 Y1 X2 Y2 X3 Y3;
/// column n holds the complex-frame coordinates of the n-th real vector.
fn real_frame() -> [[Complex64; DIM]; DIM] {
    let mut p = [[Complex64::zero(); DIM]; DIM];
    for k in 0..3 {
        p[k][2 * k] = Complex64::new(1.0, 0.0);
        p[bar(k)][2 * k] = Complex64::new(1.0, 0.0);
        p[k][2 * k + 1] = Complex64::new(0.0, 1.0);
        p[bar(k)][2 * k + 1] = Complex64::new(0.0, -1.0);
    }
    p
}

/// The metric in the real frame, Pᵀ g P. Imaginary parts vanish for
/// conjugation-real g.
pub fn real_matrix(g6: &MultiTensor<Complex64>) -> [[Complex64; DIM]; DIM] {
    let p = real_frame();
    let mut out = [[Complex64::zero(); DIM]; DIM];
    for (m, row) in out.iter_mut().enumerate() {
        for (n, slot) in row.iter_mut().enumerate() {
            let mut s = Complex64::zero();
            for a in 0..DIM {
                for b in 0..DIM {
                    s += p[a][m] * g6[[a, b]] * p[b][n];
                }
            }
            *slot = s;
        }
    }
    out
}

/// Inverse of [`real_matrix`] restricted to real symmetric input.
pub fn from_real_matrix(g: &[[f64; DIM]; DIM]) -> MultiTensor<Complex64> {
    // φ_k = (X_k − i Y_k)/2, φ̄_k = (X_k + i Y_k)/2
    let mut q = [[Complex64::zero(); DIM]; DIM];
    for k in 0..3 {
        q[2 * k][k] = Complex64::new(0.5, 0.0);
        q[2 * k + 1][k] = Complex64::new(0.0, -0.5);
        q[2 * k][bar(k)] = Complex64::new(0.5, 0.0);
        q[2 * k + 1][bar(k)] = Complex64::new(0.0, 0.5);
    }
    MultiTensor::from_fn(2, |ix| {
        let mut s = Complex64::zero();
        for m in 0..DIM {
            for n in 0..DIM {
                s += q[m][ix[0]] * g[m][n] * q[n][ix[1]];
            }
        }
        s
    })
}

/// Upper triangle of the real-frame matrix, row by row (21 entries).
pub fn real_components(g6: &MultiTensor<Complex64>) -> Vec<f64> {
    let r = real_matrix(g6);
    (0..DIM).flat_map(|m| (m..DIM).map(move |n| (m, n))).map(|(m, n)| r[m][n].re).collect()
}

pub fn real_component_names() -> Vec<String> {
    let name = |n: usize| format!("{}{}", if n % 2 == 0 { "x" } else { "y" }, n / 2 + 1);
    (0..DIM).flat_map(|m| (m..DIM).map(move |n| format!("g_{}_{}", name(m), name(n)))).collect()
}

/// Cholesky in the real frame; also rejects g that is not conjugation-real.
pub fn positive_definite(g6: &MultiTensor<Complex64>) -> bool {
    let r = real_matrix(g6);
    let scale = r.iter().flatten().map(|z| z.norm()).fold(0.0, f64::max).max(1.0);
    if r.iter().flatten().any(|z| z.im.abs() > 1e-9 * scale || !z.re.is_finite()) {
        return false;
    }
    let m = Matrix6::from_fn(|i, j| r[i][j].re);
    Cholesky::new(m).is_some()
}

fn frobenius(t: &MultiTensor<Complex64>) -> f64 {
    t.as_slice().iter().map(|z| z.norm_sqr()).sum::<f64>().sqrt()
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowSample {
    pub t: f64,
    /// Real-frame metric, see [`real_component_names`].
    pub g: Vec<f64>,
    pub deviation: f64,
    pub ricci_norm: f64,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlowTrace {
    pub samples: Vec<FlowSample>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub halt: Option<String>,
}

impl FlowTrace {
    pub fn max_deviation(&self) -> f64 {
        self.samples.iter().map(|s| s.deviation).fold(0.0, f64::max)
    }

    /// Largest change of any real component from the initial sample.
    pub fn drift(&self) -> f64 {
        let Some(first) = self.samples.first() else { return 0.0 };
        self.samples.iter().flat_map(|s| s.g.iter().zip(&first.g).map(|(a, b)| (a - b).abs())).fold(0.0, f64::max)
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        let mut header = vec!["t".to_string()];
        header.extend(real_component_names());
        header.extend(["deviation".to_string(), "ricci_norm".to_string()]);
        w.write_record(&header).expect("in-memory write");
        for s in &self.samples {
            let mut row = vec![format!("{}", s.t)];
            row.extend(s.g.iter().map(|x| format!("{x:e}")));
            row.push(format!("{:e}", s.deviation));
            row.push(format!("{:e}", s.ricci_norm));
            w.write_record(&row).expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

fn axpy(g: &MultiTensor<Complex64>, k: &MultiTensor<Complex64>, h: f64) -> MultiTensor<Complex64> {
    g.zip_with(k, |a, b| a + b * h)
}

/// One classical RK4 step; None if an intermediate metric is singular.
pub fn rk4_step(g: &MultiTensor<Complex64>, c: &MultiTensor<Complex64>, h: f64) -> Option<MultiTensor<Complex64>> {
    let k1 = ricci_rhs(g, c)?;
    let k2 = ricci_rhs(&axpy(g, &k1, h / 2.0), c)?;
    let k3 = ricci_rhs(&axpy(g, &k2, h / 2.0), c)?;
    let k4 = ricci_rhs(&axpy(g, &k3, h), c)?;
    Some(MultiTensor::from_fn(2, |ix| {
        let [a, b] = [ix[0], ix[1]];
        g[[a, b]] + (k1[[a, b]] + k2[[a, b]] * 2.0 + k3[[a, b]] * 2.0 + k4[[a, b]]) * (h / 6.0)
    }))
}

/// Integrates up to `horizon` in steps of `step` (the last step is shortened
/// to land on the horizon). A loss of positivity truncates the trace.
pub fn integrate_flow(g0: &FlowState, horizon: f64, step: f64) -> Result<FlowTrace, FlowError> {
    if !(step > 0.0 && horizon > 0.0 && step.is_finite() && horizon.is_finite()) {
        return Err(FlowError::BadSchedule { step, horizon });
    }
    g0.validate()?;
    let c = g0.structure.c().to_complex();
    let sample = |t: f64, g: &MultiTensor<Complex64>| {
        let ricci_norm = ricci_rhs(g, &c).map_or(f64::NAN, |r| frobenius(&r));
        FlowSample { t, g: real_components(g), deviation: hermitian_deviation(g), ricci_norm }
    };
    let n = (horizon / step - 1e-9).ceil() as usize;
    let mut g = g0.g6.clone();
    let mut t = g0.t;
    let mut samples = vec![sample(t, &g)];
    for k in 0..n {
        let h = if k + 1 == n { g0.t + horizon - t } else { step };
        let next = rk4_step(&g, &c, h).filter(positive_definite);
        match next {
            Some(ng) => {
                g = ng;
                t = if k + 1 == n { g0.t + horizon } else { g0.t + (k + 1) as f64 * step };
                samples.push(sample(t, &g));
            }
            None => {
                return Ok(FlowTrace { samples, halt: Some(format!("metric lost positivity after t = {t}")) });
            }
        }
    }
    Ok(FlowTrace { samples, halt: None })
}

/// Result of the RK4 convergence test.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OrderCheck {
    pub steps: Vec<f64>,
    pub errors: Vec<f64>,
    pub ratios: Vec<f64>,
}

impl OrderCheck {
    pub fn pass(&self, min_ratio: f64) -> bool {
        !self.ratios.is_empty() && self.ratios.iter().all(|&r| r >= min_ratio)
    }
}

/// Closed-form flow on h8 (dφ³ = φ^{11̄}) from a diagonal metric: with
/// a = g(X1,X1) = g(Y1,Y1) and c = g(Y3,Y3), ac is conserved and
/// a³ grows linearly.
pub fn h8_exact(a0: f64, c0: f64, t: f64) -> (f64, f64) {
    let k = a0 * c0;
    let a = (a0.powi(3) + H8_RATE * k * t).cbrt();
    (a, k / a)
}

/// Growth rate of a³ along the h8 flow; fixed by [`h8_rate_matches`] in the
/// tests against the exact right-hand side.
pub const H8_RATE: f64 = 6.0;

/// Integrates the h8 flow from a diagonal metric with steps `h, h/2, …` and
/// compares with [`h8_exact`].
pub fn rk4_order_check(horizon: f64, step: f64, halvings: usize) -> OrderCheck {
    use crate::catalog::{FamilyId, FamilySpec};
    let lie = FamilySpec::with(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "0")])
        .expect("h8 in domain")
        .instantiate();
    let c = lie.c().to_complex();
    let (a0, c0) = (1.0, 2.0);
    let mut diag = [[0.0; DIM]; DIM];
    for (n, v) in [a0, a0, 1.5, 1.5, 0.75, c0].into_iter().enumerate() {
        diag[n][n] = v;
    }
    let g0 = from_real_matrix(&diag);
    let (a_end, c_end) = h8_exact(a0, c0, horizon);
    let mut steps = Vec::new();
    let mut errors = Vec::new();
    for level in 0..=halvings {
        let h = step / f64::powi(2.0, level as i32);
        let n = (horizon / h).round() as usize;
        let mut g = g0.clone();
        for _ in 0..n {
            g = rk4_step(&g, &c, h).expect("h8 flow stays nondegenerate");
        }
        let r = real_matrix(&g);
        errors.push((r[0][0].re - a_end).abs().max((r[5][5].re - c_end).abs()));
        steps.push(h);
    }
    let ratios = errors.windows(2).map(|w| w[0] / w[1]).collect();
    OrderCheck { steps, errors, ratios }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalog::{FamilyId, FamilySpec};
    use crate::metric::{build_metric, MetricParams};
    use crate::scalar::rat;

    #[test]
    fn injected_deviation() {
        let mut g = build_metric(&MetricParams::identity()).unwrap().g.to_complex();
        assert_eq!(hermitian_deviation(&g), 0.0);
        g[[0, 0]] = Complex64::new(0.1, 0.0);
        assert_eq!(hermitian_deviation(&g), 0.1);
    }

    #[test]
    fn real_frame_round_trip() {
        let mut p = MetricParams::identity();
        p.u = "1/3+1/4*i".parse().unwrap();
        p.z = "-1/5".parse().unwrap();
        let g = build_metric(&p).unwrap().g.to_complex();
        let r = real_matrix(&g);
        let re: [[f64; DIM]; DIM] = std::array::from_fn(|i| std::array::from_fn(|j| r[i][j].re));
        let back = from_real_matrix(&re);
        assert!(g.as_slice().iter().zip(back.as_slice()).all(|(a, b)| (a - b).norm() < 1e-14));
        assert!(positive_definite(&g));
        assert_eq!(real_components(&g).len(), 21);
    }

    #[test]
    fn h8_rate_matches() {
        // d(a³)/dt = 3a²·a' at a diagonal metric with r² = s² = t² = 2
        let lie = FamilySpec::with(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "0")]).unwrap().instantiate();
        let h = build_metric(&MetricParams::diagonal(rat(2, 1), rat(2, 1), rat(2, 1))).unwrap();
        let rhs = ricci_rhs_exact(&h, &lie).to_complex();
        let g = h.g.to_complex();
        let (a, c) = (real_matrix(&g)[0][0].re, real_matrix(&g)[5][5].re);
        let da = real_matrix(&rhs)[0][0].re;
        let dc = real_matrix(&rhs)[5][5].re;
        assert!((a * dc + c * da).abs() < 1e-12);
        assert!((3.0 * a * a * da - H8_RATE * a * c).abs() < 1e-12);
    }

    #[test]
    fn rk4_is_fourth_order_on_h8() {
        let chk = rk4_order_check(1.0, 0.25, 3);
        assert!(chk.pass(8.0), "{chk:?}");
    }
}
