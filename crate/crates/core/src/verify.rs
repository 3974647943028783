//! Exact multi-point verification: seeded metric sampling, identity checks,
//! closed-form component oracles and the Kähler-like scoreboard.

use std::fmt;

use num_traits::{One, Signed, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::catalog::{FamilyId, FamilySpec, MetricVar};
use crate::connection::{curvature, ChristoffelParts, ConnectionSpec, CurvatureTensor, GauduchonPencil};
use crate::error::VerifyError;
use crate::frame::{parse_tuple, tuple_label, FrameIndex};
use crate::lie::LieAlgebraCx;
use crate::metric::{build_metric, classify_metric, HermitianData, MetricClass, MetricParams};
use crate::scalar::{rat, GaussianRational, Rational};
use crate::symmetry::{flatness_check, gray_check_lc, kahler_like_check, label, KahlerLikeReport};

const MAX_ATTEMPTS: usize = 10_000;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SamplePlan {
    pub seed: u64,
    pub points_per_case: usize,
    /// Gauduchon-line ε values; LC is always added separately.
    #[serde(with = "rational_vec")]
    pub eps_set: Vec<Rational>,
    /// Bound on numerators and denominators of sampled values.
    pub height: i64,
}

mod rational_vec {
    use super::*;
    use serde::{Deserializer, Serializer};

    pub fn serialize<S: Serializer>(v: &[Rational], s: S) -> Result<S::Ok, S::Error> {
        s.collect_seq(v.iter().map(ToString::to_string))
    }

    pub fn deserialize<'de, D: Deserializer<'de>>(d: D) -> Result<Vec<Rational>, D::Error> {
        let raw = Vec::<String>::deserialize(d)?;
        raw.iter().map(|s| crate::scalar::parse_rational_str(s).map_err(serde::de::Error::custom)).collect()
    }
}

impl Default for SamplePlan {
    fn default() -> Self {
        Self::new(0)
    }
}

impl SamplePlan {
    pub fn new(seed: u64) -> Self {
        let mut eps_set: Vec<Rational> =
            [(0, 1), (1, 6), (1, 4), (1, 3), (1, 2), (2, 3), (-1, 2)].iter().map(|&(p, q)| rat(p, q)).collect();
        eps_set.push(random_eps(seed, &eps_set));
        Self { seed, points_per_case: 7, eps_set, height: 5 }
    }

    pub fn with_points(mut self, n: usize) -> Self {
        self.points_per_case = n;
        self
    }

    /// Gauduchon specs for every ε plus LC, in a fixed order.
    pub fn specs(&self) -> Vec<ConnectionSpec> {
        let mut v: Vec<ConnectionSpec> = self.eps_set.iter().cloned().map(ConnectionSpec::gauduchon).collect();
        v.push(ConnectionSpec::lc());
        v
    }

    pub fn rng(&self, stream: u64) -> ChaCha8Rng {
        let mut r = ChaCha8Rng::seed_from_u64(self.seed);
        r.set_stream(stream);
        r
    }
}

/// A rational ε ∉ {0, ½} not already in `taken`, derived from the seed.
fn random_eps(seed: u64, taken: &[Rational]) -> Rational {
    let mut r = ChaCha8Rng::seed_from_u64(seed ^ 0x5eed_e951);
    loop {
        let q = r.gen_range(2..=12i64);
        let p = r.gen_range(-q..=q);
        let e = rat(p, q);
        if !e.is_zero() && e != rat(1, 2) && !taken.contains(&e) {
            return e;
        }
    }
}

/// Restrictions imposed on sampled metrics.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct MetricConstraint {
    pub r2_one: bool,
    pub r2_eq_s2: bool,
    pub zero: Vec<MetricVar>,
    pub nonzero: Vec<MetricVar>,
    pub u_real: bool,
}

impl MetricConstraint {
    /// No restriction; off-diagonal entries may happen to vanish.
    pub fn any() -> Self {
        Self::default()
    }

    /// u, v, z all nonzero.
    pub fn generic() -> Self {
        Self { nonzero: vec![MetricVar::U, MetricVar::V, MetricVar::Z], ..Self::default() }
    }

    pub fn diagonal() -> Self {
        Self { zero: vec![MetricVar::U, MetricVar::V, MetricVar::Z], ..Self::default() }
    }

    /// r² = 1 and diagonal.
    pub fn unit_diagonal() -> Self {
        Self { r2_one: true, ..Self::diagonal() }
    }

    /// u ≠ 0 and v = z = 0.
    pub fn u_only() -> Self {
        Self { zero: vec![MetricVar::V, MetricVar::Z], nonzero: vec![MetricVar::U], ..Self::default() }
    }

    pub fn zeros(vars: &[MetricVar]) -> Self {
        Self { zero: vars.to_vec(), ..Self::default() }
    }

    pub fn with_r2_one(mut self) -> Self {
        self.r2_one = true;
        self
    }

    pub fn admits(&self, m: &MetricParams) -> bool {
        let get = |v: &MetricVar| v.get(m);
        (!self.r2_one || m.r2.is_one())
            && (!self.r2_eq_s2 || m.r2 == m.s2)
            && (!self.u_real || m.u.is_real())
            && self.zero.iter().all(|v| get(v).is_zero())
            && self.nonzero.iter().all(|v| !get(v).is_zero())
    }
}

impl fmt::Display for MetricConstraint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = |v: &MetricVar| v.name();
        let mut parts = Vec::new();
        if self.r2_one {
            parts.push("r2=1".to_string());
        }
        if self.r2_eq_s2 {
            parts.push("r2=s2".to_string());
        }
        if !self.zero.is_empty() {
            parts.push(format!("{}=0", self.zero.iter().map(name).collect::<Vec<_>>().join("=")));
        }
        for v in &self.nonzero {
            parts.push(format!("{}!=0", name(v)));
        }
        if self.u_real {
            parts.push("u real".to_string());
        }
        if parts.is_empty() {
            f.write_str("any")
        } else {
            f.write_str(&parts.join(","))
        }
    }
}

fn rand_rational<R: Rng>(rng: &mut R, h: i64, positive: bool, nonzero: bool) -> Rational {
    loop {
        let q = rng.gen_range(1..=h);
        let p = if positive { rng.gen_range(1..=h) } else { rng.gen_range(-h..=h) };
        if !nonzero || p != 0 {
            return rat(p, q);
        }
    }
}

fn rand_gaussian<R: Rng>(rng: &mut R, h: i64, nonzero: bool, real: bool) -> GaussianRational {
    loop {
        let re = rand_rational(rng, h, false, false);
        let im = if real { Rational::zero() } else { rand_rational(rng, h, false, false) };
        let z = GaussianRational::new(re, im);
        if !nonzero || !z.is_zero() {
            return z;
        }
    }
}

/// Rejection-samples a valid metric satisfying `c`.
pub fn sample_metric<R: Rng>(rng: &mut R, c: &MetricConstraint, height: i64) -> Result<MetricParams, VerifyError> {
    for _ in 0..MAX_ATTEMPTS {
        let r2 = if c.r2_one { Rational::one() } else { rand_rational(rng, height, true, true) };
        let s2 = if c.r2_eq_s2 { r2.clone() } else { rand_rational(rng, height, true, true) };
        let t2 = rand_rational(rng, height, true, true);
        let mut off = |v: MetricVar| {
            if c.zero.contains(&v) {
                GaussianRational::zero()
            } else {
                let real = v == MetricVar::U && c.u_real;
                rand_gaussian(rng, height, c.nonzero.contains(&v), real)
            }
        };
        let (u, v, z) = (off(MetricVar::U), off(MetricVar::V), off(MetricVar::Z));
        let p = MetricParams { r2, s2, t2, u, v, z };
        if p.validate().is_ok() {
            return Ok(p);
        }
    }
    Err(VerifyError::DegenerateSampling(MAX_ATTEMPTS))
}

/// Everything a residue predicate may inspect at one sampled point.
pub struct PointContext<'a> {
    pub family: &'a FamilySpec,
    pub lie: &'a LieAlgebraCx,
    pub metric: &'a HermitianData,
    pub spec: &'a ConnectionSpec,
    pub curvature: &'a CurvatureTensor,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Counterexample {
    pub family: String,
    pub metric: MetricParams,
    pub spec: ConnectionSpec,
    pub label: String,
    pub residue: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityVerdict {
    pub pass: bool,
    pub points: usize,
    pub counterexample: Option<Counterexample>,
}

/// Evaluates `residues` at `plan.points_per_case` sampled metrics for every
/// spec; PASS when all residues vanish exactly.
pub fn verify_identity_zero<F>(
    family: &FamilySpec,
    constraint: &MetricConstraint,
    specs: &[ConnectionSpec],
    plan: &SamplePlan,
    stream: u64,
    residues: F,
) -> Result<IdentityVerdict, VerifyError>
where
    F: Fn(&PointContext) -> Vec<(String, GaussianRational)>,
{
    let lie = family.instantiate();
    let mut rng = plan.rng(stream);
    for _ in 0..plan.points_per_case {
        let params = sample_metric(&mut rng, constraint, plan.height)?;
        let h = build_metric(&params)?;
        let parts = ChristoffelParts::new(&h, &lie);
        for spec in specs {
            let r = curvature(&parts.combine(spec), spec, &h, &lie);
            let ctx = PointContext { family, lie: &lie, metric: &h, spec, curvature: &r };
            if let Some((label, residue)) = residues(&ctx).into_iter().find(|(_, v)| !v.is_zero()) {
                return Ok(IdentityVerdict {
                    pass: false,
                    points: plan.points_per_case,
                    counterexample: Some(Counterexample {
                        family: family.label(),
                        metric: params,
                        spec: spec.clone(),
                        label,
                        residue,
                    }),
                });
            }
        }
    }
    Ok(IdentityVerdict { pass: true, points: plan.points_per_case, counterexample: None })
}

// ---------------------------------------------------------------------------
// Closed-form component tables

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Appendix {
    /// Family Ni, r² = 1, v = z = 0, Gauduchon line.
    A,
    /// Family Si, v = z = 0, Chern.
    B,
    /// Family Si with A = i, u = 0, Gauduchon line.
    C,
}

impl std::str::FromStr for Appendix {
    type Err = crate::error::ParseError;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.trim().to_ascii_uppercase().as_str() {
            "A" => Ok(Appendix::A),
            "B" => Ok(Appendix::B),
            "C" => Ok(Appendix::C),
            _ => Err(crate::error::ParseError::UnknownKey(s.to_string())),
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum ComponentKind {
    R,
    B,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct OracleEntry {
    pub kind: ComponentKind,
    pub index: Vec<FrameIndex>,
    pub expected: GaussianRational,
}

impl OracleEntry {
    fn new(kind: ComponentKind, labels: &str, expected: GaussianRational) -> Self {
        Self { kind, index: parse_tuple(labels).expect("static label"), expected }
    }

    pub fn label(&self) -> String {
        let p = match self.kind {
            ComponentKind::R => "R",
            ComponentKind::B => "B",
        };
        format!("{p}{}", tuple_label(&self.index))
    }

    pub fn observe(&self, r: &CurvatureTensor) -> GaussianRational {
        match self.kind {
            ComponentKind::R => r.r.get(&self.index).clone(),
            ComponentKind::B => {
                let [i, j, k, l] = [&self.index[0], &self.index[1], &self.index[2], &self.index[3]];
                r.r.get(&[*i, *j, *k, *l]) - r.r.get(&[*k, *j, *i, *l])
            }
        }
    }
}

fn gr(x: Rational) -> GaussianRational {
    GaussianRational::real(x)
}

fn gi(n: i64) -> GaussianRational {
    GaussianRational::from_int(n)
}

/// The connection an appendix table refers to at parameter ε.
pub fn appendix_spec(which: Appendix, eps: &Rational) -> ConnectionSpec {
    match which {
        Appendix::B => ConnectionSpec::chern(),
        _ => ConnectionSpec::gauduchon(eps.clone()),
    }
}

/// Closed-form components of the requested table at one point. `eps` is
/// ignored for table B.
pub fn appendix_oracle(
    which: Appendix,
    f: &FamilySpec,
    m: &MetricParams,
    eps: &Rational,
) -> Result<Vec<OracleEntry>, VerifyError> {
    let outside = |why: &str| Err(VerifyError::Normalization(why.to_string()));
    match which {
        Appendix::A => {
            if f.id != FamilyId::Ni {
                return outside("table A needs family Ni");
            }
            if !m.r2.is_one() || !m.v.is_zero() || !m.z.is_zero() {
                return outside("table A needs r2=1 and v=z=0");
            }
            Ok(table_a(f, m, eps))
        }
        Appendix::B => {
            if f.id != FamilyId::Si {
                return outside("table B needs family Si");
            }
            if !m.v.is_zero() || !m.z.is_zero() {
                return outside("table B needs v=z=0");
            }
            Ok(table_b(m))
        }
        Appendix::C => {
            if f.id != FamilyId::Si || *f.param("A") != GaussianRational::i() {
                return outside("table C needs family Si with A=i");
            }
            if !m.u.is_zero() {
                return outside("table C needs u=0");
            }
            Ok(table_c(m, eps))
        }
    }
}

fn table_a(f: &FamilySpec, m: &MetricParams, eps: &Rational) -> Vec<OracleEntry> {
    use ComponentKind::{B, R};
    let i = GaussianRational::i();
    let e = gr(eps.clone());
    let rho = f.param("rho").clone();
    let lam = f.param("lambda").clone();
    let d = f.param("D").clone();
    let db = d.conj();
    let u = m.u.clone();
    let ub = u.conj();
    let s2 = gr(m.s2.clone());
    let t2 = gr(m.t2.clone());
    let t4 = &t2 * &t2;
    let den = gr(&m.s2 - m.u.norm_sqr());
    let two = gi(2);
    let tem1 = &two * &e - gi(1); // 2ε − 1
    let fem1 = gi(4) * &e - gi(1); // 4ε − 1
    let quad = gi(4) * &e * &e - gi(6) * &e + gi(1); // 4ε² − 6ε + 1
    let e2 = &e * &e;
    let ilu = &i * &lam * &u; // iλu
    let im_u = gr(m.u.im().clone());
    let im_ud = gr((&u * &d).im().clone());
    let t4e_den = &t4 * &e / &den;

    let r121 = &two * &t2 * &e * (gi(1) - &e) * &rho;
    let b1121 = -(&t2 / &two) * &tem1 * &tem1 * &lam;
    let b1233 = -(&t4 / (&two * &den)) * (gi(4) * &i * &rho * &u * &e2 + &tem1 * &fem1 * (&lam * &s2 + &i * &u * &d));
    let b1323 = &t4e_den * (&fem1 * (&lam * &s2 + &i * &u * &d) - &two * &e * &db * (&lam + &i * &u));
    vec![
        OracleEntry::new(R, "1 2 1 1b", r121.clone()),
        OracleEntry::new(R, "1 2 2 1b", &lam * &r121),
        OracleEntry::new(R, "1 2 2 2b", &db * &r121),
        OracleEntry::new(R, "1 2 3 3b", &t4e_den * &rho * &tem1 * (&s2 + &ilu + &db)),
        OracleEntry::new(R, "1 3 1 3b", -(&two * &i * &t4 * &e2 / &den) * &rho * &u),
        OracleEntry::new(R, "1 3 2 3b", -(&two * &t4 * &e2 / &den) * &rho * (&ilu + &db)),
        OracleEntry::new(R, "1 3 3 1b", -(&t4e_den * &tem1) * (&s2 + &ilu)),
        OracleEntry::new(R, "1 3 3 2b", -(&i * &t4e_den * &tem1) * &u * &db),
        OracleEntry::new(R, "2 3 1 3b", &two * &s2 * &t4 * &e2 / &den * &rho),
        OracleEntry::new(R, "2 3 2 3b", &two * &t4 * &e2 / &den * &rho * (&lam * &s2 - &i * &ub * &db)),
        OracleEntry::new(R, "2 3 3 1b", -(&t4e_den * &tem1) * (&lam * (&s2 + &ilu + &db) - &i * &ub * &db)),
        OracleEntry::new(R, "2 3 3 2b", -(&t4e_den * &tem1) * &db * (&ilu + &db)),
        OracleEntry::new(B, "1 1b 2 1b", b1121.clone()),
        OracleEntry::new(
            B,
            "1 1b 2 2b",
            -(&t2 / &two) * (&two * &e * (&lam * &lam - &d + gi(4) * &rho * &e) + &db * &quad),
        ),
        OracleEntry::new(B, "1 1b 3 3b", &t4 / (&two * &den) * (gi(4) * &rho * &e2 - &s2 * &tem1 * &fem1)),
        OracleEntry::new(
            B,
            "1 2b 2 1b",
            &t2 / &two * (&two * &e * (gi(4) * &rho * &e - &db) + (&d - &lam * &lam) * &quad),
        ),
        OracleEntry::new(B, "1 2b 2 2b", &db * &b1121),
        OracleEntry::new(B, "1 2b 3 3b", b1233.clone()),
        OracleEntry::new(B, "1 3b 2 3b", &two * &t4 * &e2 / &den * &rho * (&d + &s2 - &i * &lam * &ub)),
        OracleEntry::new(B, "1 3b 3 1b", -(&t4e_den) * (&s2 + &two * &e * (&lam * &lam - &s2 - &two * &lam * &im_u))),
        OracleEntry::new(B, "1 3b 3 2b", b1323.clone()),
        OracleEntry::new(B, "2 1b 3 3b", b1233.conj()),
        OracleEntry::new(
            B,
            "2 2b 3 3b",
            -(&t4 / (&two * &den))
                * (&tem1 * &fem1 * (&lam * &lam * &s2 - &two * &lam * &im_ud + gr(d.norm_sqr()))
                    - gi(4) * &s2 * &rho * &e2),
        ),
        OracleEntry::new(B, "2 3b 3 1b", b1323.conj()),
        OracleEntry::new(
            B,
            "2 3b 3 2b",
            &t4e_den * (&tem1 * gr(d.norm_sqr()) + &fem1 * &lam * (&lam * &s2 - &two * &im_ud)),
        ),
    ]
}

fn table_b(m: &MetricParams) -> Vec<OracleEntry> {
    use ComponentKind::B;
    let i = GaussianRational::i();
    let r2 = gr(m.r2.clone());
    let s2 = gr(m.s2.clone());
    let nu = gr(m.u.norm_sqr());
    let den = &r2 * &s2 - &nu;
    let b1332 = -(gi(2) * &i * &r2 * &s2 * &m.u) / &den;
    vec![
        OracleEntry::new(B, "1 3b 3 1b", gi(2) * &r2 * &nu / &den),
        OracleEntry::new(B, "1 3b 3 2b", b1332.clone()),
        OracleEntry::new(B, "2 3b 3 1b", b1332.conj()),
        OracleEntry::new(B, "2 3b 3 2b", gi(2) * &s2 * &nu / &den),
    ]
}

/// Table C, with R[2,3,1,3b] = +R[1,3,2,3b].
fn table_c(m: &MetricParams, eps: &Rational) -> Vec<OracleEntry> {
    use ComponentKind::{B, R};
    let i = GaussianRational::i();
    let e = gr(eps.clone());
    let (r2, s2, t2) = (gr(m.r2.clone()), gr(m.s2.clone()), gr(m.t2.clone()));
    let (v, z) = (m.v.clone(), m.z.clone());
    let (nv, nz) = (gr(m.v.norm_sqr()), gr(m.z.norm_sqr()));
    let ds = gr(m.det_scaled());
    // 8√−1 detΩ = det_scaled, 8 detΩ = −i det_scaled
    let d8i = ds.clone();
    let d8 = -(&i * &ds);
    let d16i = gi(2) * &ds;
    let d16 = gi(2) * &d8;
    let tem1 = gi(2) * &e - gi(1);
    let fem1 = gi(4) * &e - gi(1);
    let rs = &r2 * &s2;
    let rst = &rs * &t2;
    let e2 = &e * &e;
    let quad = gi(2) * &e2 - gi(4) * &e + gi(1);

    let r1323 = -(&e * &tem1 * &rs * &v * &z) / &d8i;
    let b1233 = &e * &tem1 * &rs * v.conj() * &z / &d8i;
    let b1332 = -(&tem1 * &fem1 * &rs * v.conj() * &z) / &d16i;
    vec![
        OracleEntry::new(R, "1 3 1 3b", &e * &tem1 * &rs * &z * &z / &d8i),
        OracleEntry::new(R, "1 3 2 3b", r1323.clone()),
        OracleEntry::new(
            R,
            "1 3 3 3b",
            &e * &z / &d8 * (&rst - gi(2) * &e * &r2 * &nv + gi(2) * (&e - gi(1)) * &s2 * &nz),
        ),
        OracleEntry::new(R, "2 3 1 3b", r1323),
        OracleEntry::new(R, "2 3 2 3b", &e * &tem1 * &rs * &v * &v / &d8i),
        OracleEntry::new(
            R,
            "2 3 3 3b",
            &e * &v / &d8 * (&rst + gi(2) * (&e - gi(1)) * &r2 * &nv - gi(2) * &e * &s2 * &nz),
        ),
        OracleEntry::new(B, "1 1b 3 3b", -(&e * &tem1 * &rs * &nz) / &d8i),
        OracleEntry::new(B, "1 2b 3 3b", b1233.clone()),
        OracleEntry::new(B, "1 3b 3 1b", &tem1 * &fem1 * &rs * &nz / &d16i),
        OracleEntry::new(B, "1 3b 3 2b", b1332.clone()),
        OracleEntry::new(
            B,
            "1 3b 3 3b",
            &z / &d16 * (&fem1 * &rst + gi(2) * &quad * &r2 * &nv - gi(4) * &e2 * &s2 * &nz),
        ),
        OracleEntry::new(B, "2 1b 3 3b", b1233.conj()),
        OracleEntry::new(B, "2 2b 3 3b", -(&e * &tem1 * &rs * &nv) / &d8i),
        OracleEntry::new(B, "2 3b 3 1b", b1332.conj()),
        OracleEntry::new(B, "2 3b 3 2b", &tem1 * &fem1 * &rs * &nv / &d16i),
        OracleEntry::new(
            B,
            "2 3b 3 3b",
            &v / &d16 * (&fem1 * &rst - gi(4) * &e2 * &r2 * &nv + gi(2) * &quad * &s2 * &nz),
        ),
    ]
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ComponentCheck {
    pub label: String,
    pub expected: GaussianRational,
    pub observed: GaussianRational,
    pub ok: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AppendixPoint {
    pub family: String,
    pub metric: MetricParams,
    pub spec: ConnectionSpec,
    pub checks: Vec<ComponentCheck>,
}

impl AppendixPoint {
    pub fn pass(&self) -> bool {
        self.checks.iter().all(|c| c.ok)
    }
}

/// Compares a table against the pipeline at one point.
pub fn check_appendix_point(
    which: Appendix,
    f: &FamilySpec,
    m: &MetricParams,
    eps: &Rational,
) -> Result<AppendixPoint, VerifyError> {
    let entries = appendix_oracle(which, f, m, eps)?;
    let lie = f.instantiate();
    let h = build_metric(m)?;
    let spec = appendix_spec(which, eps);
    let r = crate::connection::evaluate(&spec, &h, &lie);
    let checks = entries
        .into_iter()
        .map(|e| {
            let observed = e.observe(&r);
            ComponentCheck { label: e.label(), ok: observed == e.expected, expected: e.expected, observed }
        })
        .collect();
    Ok(AppendixPoint { family: f.label(), metric: m.clone(), spec, checks })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AppendixReport {
    pub appendix: Appendix,
    pub entries_per_point: usize,
    pub points: Vec<AppendixPoint>,
}

impl AppendixReport {
    pub fn pass(&self) -> bool {
        !self.points.is_empty() && self.points.iter().all(AppendixPoint::pass)
    }

    pub fn first_mismatch(&self) -> Option<(&AppendixPoint, &ComponentCheck)> {
        self.points.iter().find_map(|p| p.checks.iter().find(|c| !c.ok).map(|c| (p, c)))
    }
}

/// Structure parameters and ε values swept for a table.
fn appendix_grid(which: Appendix, plan: &SamplePlan, rng: &mut ChaCha8Rng) -> Vec<(FamilySpec, Rational)> {
    let five: Vec<Rational> = [(0, 1), (1, 6), (1, 4), (1, 3), (1, 2)].iter().map(|&(p, q)| rat(p, q)).collect();
    match which {
        Appendix::A => {
            let mut fams = Vec::new();
            for rho in ["0", "1"] {
                // a fixed pair of draws per ρ plus the λ = D = 0 corner
                fams.push(FamilySpec::with(FamilyId::Ni, &[("rho", rho), ("lambda", "0"), ("D", "0")]).unwrap());
                for _ in 0..2 {
                    let lam = rand_rational(rng, plan.height, true, false);
                    let d = GaussianRational::new(
                        rand_rational(rng, plan.height, false, false),
                        rand_rational(rng, plan.height, true, false).abs(),
                    );
                    let mut p = std::collections::BTreeMap::new();
                    p.insert("rho".to_string(), rho.parse().unwrap());
                    p.insert("lambda".to_string(), gr(lam));
                    p.insert("D".to_string(), d);
                    fams.push(FamilySpec::new(FamilyId::Ni, p).unwrap());
                }
            }
            fams.into_iter().flat_map(|f| five.iter().map(move |e| (f.clone(), e.clone()))).collect()
        }
        Appendix::B => ["1", "i", "3/5+4/5*i", "-7/25+24/25*i"]
            .iter()
            .map(|a| (FamilySpec::with(FamilyId::Si, &[("A", a)]).unwrap(), Rational::zero()))
            .collect(),
        Appendix::C => {
            let f = FamilySpec::with(FamilyId::Si, &[("A", "i")]).unwrap();
            plan.eps_set.iter().map(|e| (f.clone(), e.clone())).collect()
        }
    }
}

fn appendix_constraint(which: Appendix) -> MetricConstraint {
    match which {
        Appendix::A => MetricConstraint::u_only().with_r2_one(),
        Appendix::B => MetricConstraint::u_only(),
        Appendix::C => MetricConstraint {
            zero: vec![MetricVar::U],
            nonzero: vec![MetricVar::V, MetricVar::Z],
            ..MetricConstraint::default()
        },
    }
}

/// Checks a table at `plan.points_per_case` random points for each grid entry.
pub fn verify_appendix(which: Appendix, plan: &SamplePlan) -> Result<AppendixReport, VerifyError> {
    let stream = match which {
        Appendix::A => 1_001,
        Appendix::B => 1_002,
        Appendix::C => 1_003,
    };
    let mut rng = plan.rng(stream);
    let grid = appendix_grid(which, plan, &mut rng);
    let constraint = appendix_constraint(which);
    let mut jobs = Vec::new();
    for (f, e) in grid {
        for _ in 0..plan.points_per_case {
            jobs.push((f.clone(), e.clone(), sample_metric(&mut rng, &constraint, plan.height)?));
        }
    }
    let points: Result<Vec<AppendixPoint>, VerifyError> =
        jobs.par_iter().map(|(f, e, m)| check_appendix_point(which, f, m, e)).collect();
    let points = points?;
    let entries_per_point = points.first().map_or(0, |p| p.checks.len());
    Ok(AppendixReport { appendix: which, entries_per_point, points })
}

// ---------------------------------------------------------------------------
// Kähler-like scoreboard

/// Which connections a case speaks about.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum SpecSet {
    Chern,
    Bismut,
    /// Gauduchon ε ∉ {0, ½}.
    OffLine,
    /// Every Gauduchon ε in the plan.
    Gauduchon,
    /// Gauduchon ε ≠ 0.
    NonChern,
    /// Gauduchon ε ≠ ½.
    NonBismut,
    Lc,
}

impl SpecSet {
    pub fn name(self) -> &'static str {
        match self {
            SpecSet::Chern => "chern",
            SpecSet::Bismut => "bismut",
            SpecSet::OffLine => "gauduchon eps not in {0,1/2}",
            SpecSet::Gauduchon => "gauduchon all eps",
            SpecSet::NonChern => "gauduchon eps != 0",
            SpecSet::NonBismut => "gauduchon eps != 1/2",
            SpecSet::Lc => "lc",
        }
    }

    pub fn contains(self, spec: &ConnectionSpec) -> bool {
        let zero = spec.eps.is_zero();
        let half = spec.eps == rat(1, 2);
        if spec.is_lc() {
            return self == SpecSet::Lc;
        }
        if !spec.on_gauduchon_line() {
            return false;
        }
        match self {
            SpecSet::Chern => zero,
            SpecSet::Bismut => half,
            SpecSet::OffLine => !zero && !half,
            SpecSet::Gauduchon => true,
            SpecSet::NonChern => !zero,
            SpecSet::NonBismut => !half,
            SpecSet::Lc => false,
        }
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(rename_all = "kebab-case")]
pub enum CaseGroup {
    ChernKahlerLike,
    BismutKahlerLike,
    GauduchonKahlerLike,
    NeverKahlerLike,
    LeviCivita,
    ParallelizableFlat,
}

/// Expected verdict for every sampled point and every spec of the set.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Expectation {
    pub kahler_like: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub flat: Option<bool>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TheoremCase {
    pub id: String,
    pub group: CaseGroup,
    pub lie_algebra: String,
    pub family: FamilySpec,
    pub metric: MetricConstraint,
    pub specs: SpecSet,
    pub expect: Expectation,
}

/// The checked-in expectation table.
pub fn theorem_cases() -> Vec<TheoremCase> {
    use CaseGroup::*;
    use MetricConstraint as M;
    use SpecSet::*;
    let fam = |id, p: &[(&str, &str)]| FamilySpec::with(id, p).expect("case family in domain");
    let kl = |flat: Option<bool>| Expectation { kahler_like: true, flat };
    let never = Expectation { kahler_like: false, flat: None };
    let mut cases = Vec::new();
    let mut add = |id: &str, group, alg: &str, family: FamilySpec, metric: MetricConstraint, specs, expect| {
        cases.push(TheoremCase { id: id.into(), group, lie_algebra: alg.into(), family, metric, specs, expect });
    };
    let np0 = fam(FamilyId::Np, &[("rho", "0")]);
    let np1 = fam(FamilyId::Np, &[("rho", "1")]);
    let g1 = fam(FamilyId::Si, &[("A", "1")]);
    let g20 = fam(FamilyId::Si, &[("A", "i")]);
    let g2a = fam(FamilyId::Si, &[("A", "3/5+4/5*i")]);
    let siv1 = fam(FamilyId::Siv1, &[]);
    let siv3 = fam(FamilyId::Siv3, &[("A", "2+i")]);
    let siv3b = fam(FamilyId::Siv3, &[("A", "1/3")]);
    let h2 = fam(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "i")]);
    let h8 = fam(FamilyId::Ni, &[("rho", "0"), ("lambda", "0"), ("D", "0")]);
    let g4p = fam(FamilyId::Siii1, &[("sign", "1")]);
    let g4m = fam(FamilyId::Siii1, &[("sign", "-1")]);

    // Chern connection
    add("chern/h1", ChernKahlerLike, "h1", np0.clone(), M::any(), Chern, kl(Some(true)));
    add("chern/h5", ChernKahlerLike, "h5", np1.clone(), M::any(), Chern, kl(Some(true)));
    add("chern/g1", ChernKahlerLike, "g1", g1.clone(), M::diagonal(), Chern, kl(Some(true)));
    add("chern/g2^0", ChernKahlerLike, "g2^0", g20.clone(), M::diagonal(), Chern, kl(Some(true)));
    add("chern/g2^alpha", ChernKahlerLike, "g2^3/4", g2a.clone(), M::diagonal(), Chern, kl(Some(true)));
    add("chern/g8-siv1", ChernKahlerLike, "g8", siv1.clone(), M::any(), Chern, kl(Some(true)));
    add("chern/g8-siv3", ChernKahlerLike, "g8", siv3.clone(), M::diagonal(), Chern, kl(Some(true)));
    add("chern/g8-siv3-real-A", ChernKahlerLike, "g8", siv3b.clone(), M::diagonal(), Chern, kl(Some(true)));

    // Bismut connection
    add("bismut/h1", BismutKahlerLike, "h1", np0.clone(), M::any(), Bismut, kl(Some(true)));
    add("bismut/g2^0", BismutKahlerLike, "g2^0", g20.clone(), M::diagonal(), Bismut, kl(Some(true)));
    add("bismut/h2", BismutKahlerLike, "h2", h2.clone(), M::unit_diagonal(), Bismut, kl(Some(false)));
    add("bismut/h8", BismutKahlerLike, "h8", h8.clone(), M::any(), Bismut, kl(Some(false)));
    add("bismut/g4+", BismutKahlerLike, "g4", g4p.clone(), M::diagonal(), Bismut, kl(Some(false)));
    add("bismut/g4-", BismutKahlerLike, "g4", g4m.clone(), M::diagonal(), Bismut, kl(Some(false)));

    // Gauduchon connections off {0, 1/2}
    add("gauduchon/h1", GauduchonKahlerLike, "h1", np0.clone(), M::any(), OffLine, kl(Some(true)));
    add("gauduchon/g2^0", GauduchonKahlerLike, "g2^0", g20.clone(), M::diagonal(), OffLine, kl(Some(true)));

    // Negative statements, family by family
    add("never/np-eps", NeverKahlerLike, "h5", np1.clone(), M::any(), NonChern, never);
    for (n, f) in [
        ("never/ni-rho1", fam(FamilyId::Ni, &[("rho", "1"), ("lambda", "0"), ("D", "0")])),
        ("never/ni-generic", fam(FamilyId::Ni, &[("rho", "1"), ("lambda", "2"), ("D", "1+i")])),
        ("never/ni-rho0-lambda", fam(FamilyId::Ni, &[("rho", "0"), ("lambda", "1"), ("D", "1/4")])),
    ] {
        add(n, NeverKahlerLike, "", f, M::any(), Gauduchon, never);
    }
    add("never/h2-not-bismut", NeverKahlerLike, "h2", h2.clone(), M::any(), NonBismut, never);
    add("never/h2-bismut-u", NeverKahlerLike, "h2", h2.clone(), M::u_only().with_r2_one(), Bismut, never);
    add("never/h8-not-bismut", NeverKahlerLike, "h8", h8.clone(), M::any(), NonBismut, never);
    for (n, p) in [
        ("never/nii-a", [("rho", "1"), ("B", "1+2*i"), ("c", "3")]),
        ("never/nii-b", [("rho", "0"), ("B", "1"), ("c", "0")]),
        ("never/nii-c", [("rho", "0"), ("B", "2-i"), ("c", "1")]),
    ] {
        add(n, NeverKahlerLike, "", fam(FamilyId::Nii, &p), M::any(), Gauduchon, never);
    }
    add(
        "never/niii-h19",
        NeverKahlerLike,
        "h19-",
        fam(FamilyId::Niii, &[("rho", "0"), ("sign", "1")]),
        M::any(),
        Gauduchon,
        never,
    );
    add(
        "never/niii-h19-neg",
        NeverKahlerLike,
        "h19-",
        fam(FamilyId::Niii, &[("rho", "0"), ("sign", "-1")]),
        M::any(),
        Gauduchon,
        never,
    );
    add(
        "never/niii-h26",
        NeverKahlerLike,
        "h26+",
        fam(FamilyId::Niii, &[("rho", "1"), ("sign", "1")]),
        M::any(),
        Gauduchon,
        never,
    );
    for (n, f) in [("g1", &g1), ("g2^0", &g20), ("g2^alpha", &g2a)] {
        add(&format!("never/si-{n}-chern-u"), NeverKahlerLike, "", f.clone(), M::u_only(), Chern, never);
        add(&format!("never/si-{n}-chern-generic"), NeverKahlerLike, "", f.clone(), M::generic(), Chern, never);
    }
    add("never/si-g1-eps", NeverKahlerLike, "g1", g1.clone(), M::any(), NonChern, never);
    add("never/si-g2^alpha-eps", NeverKahlerLike, "g2^3/4", g2a.clone(), M::any(), NonChern, never);
    add("never/si-g2^0-eps-nonkahler", NeverKahlerLike, "g2^0", g20.clone(), M::generic(), NonChern, never);
    add("never/si-g2^0-eps-u", NeverKahlerLike, "g2^0", g20.clone(), M::u_only(), NonChern, never);
    add("never/sii", NeverKahlerLike, "g3", fam(FamilyId::Sii, &[("x", "1/3")]), M::any(), Gauduchon, never);
    add("never/sii-half", NeverKahlerLike, "g3", fam(FamilyId::Sii, &[("x", "1/2")]), M::any(), Gauduchon, never);
    add("never/siii1-chern", NeverKahlerLike, "g4", g4p.clone(), M::any(), Chern, never);
    add("never/siii1-offline", NeverKahlerLike, "g4", g4p.clone(), M::any(), OffLine, never);
    add("never/siii1-bismut-generic", NeverKahlerLike, "g4", g4p.clone(), M::generic(), Bismut, never);
    add("never/siii1-bismut-u", NeverKahlerLike, "g4", g4m.clone(), M::u_only(), Bismut, never);
    add("never/siii2", NeverKahlerLike, "g5", fam(FamilyId::Siii2, &[]), M::any(), Gauduchon, never);
    add("never/siii3", NeverKahlerLike, "g6", fam(FamilyId::Siii3, &[]), M::any(), Gauduchon, never);
    add("never/siii4+", NeverKahlerLike, "g7", fam(FamilyId::Siii4, &[("sign", "1")]), M::any(), Gauduchon, never);
    add("never/siii4-", NeverKahlerLike, "g7", fam(FamilyId::Siii4, &[("sign", "-1")]), M::any(), Gauduchon, never);
    add(
        "never/siii4-balanced",
        NeverKahlerLike,
        "g7",
        fam(FamilyId::Siii4, &[("sign", "1")]),
        MetricConstraint { r2_eq_s2: true, ..M::zeros(&[MetricVar::V, MetricVar::Z]) },
        Chern,
        never,
    );
    add("never/siv1-eps", NeverKahlerLike, "g8", siv1.clone(), M::any(), NonChern, never);
    add("never/siv2-x0", NeverKahlerLike, "g8", fam(FamilyId::Siv2, &[("x", "0")]), M::any(), Gauduchon, never);
    add("never/siv2-x1", NeverKahlerLike, "g8", fam(FamilyId::Siv2, &[("x", "1")]), M::any(), Gauduchon, never);
    add("never/siv3-eps", NeverKahlerLike, "g8", siv3.clone(), M::any(), NonChern, never);
    add("never/siv3-chern-u", NeverKahlerLike, "g8", siv3.clone(), M::u_only(), Chern, never);
    add("never/sv", NeverKahlerLike, "g9", fam(FamilyId::Sv, &[]), M::any(), Gauduchon, never);

    // Levi-Civita: Kähler-like exactly at Kähler metrics
    add("lc/h1", LeviCivita, "h1", np0.clone(), M::any(), Lc, kl(Some(true)));
    add("lc/g2^0-kahler", LeviCivita, "g2^0", g20.clone(), M::diagonal(), Lc, kl(Some(true)));
    add("lc/g2^0-u", LeviCivita, "g2^0", g20.clone(), M::u_only(), Lc, never);
    add("lc/g2^0-generic", LeviCivita, "g2^0", g20, M::generic(), Lc, never);
    for f in crate::catalog::representatives() {
        if f.id == FamilyId::Np && f.param("rho").is_zero() {
            continue;
        }
        if f.id == FamilyId::Si && *f.param("A") == GaussianRational::i() {
            continue;
        }
        let alg = f.lie_algebra().unwrap_or_default();
        add(&format!("lc/{}", f.label()), LeviCivita, &alg, f.clone(), M::any(), Lc, never);
        add(&format!("lc/{}-diag", f.label()), LeviCivita, &alg, f, M::diagonal(), Lc, never);
    }
    add(
        "lc/ni-balanced",
        LeviCivita,
        "",
        fam(FamilyId::Ni, &[("rho", "1"), ("lambda", "2"), ("D", "1+i")]),
        M::u_only().with_r2_one(),
        Lc,
        never,
    );

    // Holomorphically parallelizable structures are Chern-flat
    add("flat/sl2c", ParallelizableFlat, "sl(2,C)", fam(FamilyId::Sl2c, &[]), M::any(), Chern, kl(Some(true)));
    add(
        "flat/sl2c-generic",
        ParallelizableFlat,
        "sl(2,C)",
        fam(FamilyId::Sl2c, &[]),
        M::generic(),
        Chern,
        kl(Some(true)),
    );
    add("flat/np1-generic", ParallelizableFlat, "h5", np1, M::generic(), Chern, kl(Some(true)));
    add("flat/siv1-generic", ParallelizableFlat, "g8", siv1, M::generic(), Chern, kl(Some(true)));
    cases
}

/// Verdicts for every spec at one sampled configuration.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SweepPoint {
    pub case: String,
    pub family: FamilySpec,
    pub metric: MetricParams,
    pub class: MetricClass,
    pub outcomes: Vec<SpecOutcome>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SpecOutcome {
    pub spec: ConnectionSpec,
    pub kahler_like: bool,
    pub flat: bool,
    pub gray: Option<bool>,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub witness: Option<String>,
}

fn outcome(spec: &ConnectionSpec, r: &CurvatureTensor) -> SpecOutcome {
    let rep: KahlerLikeReport = kahler_like_check(r);
    let flat = flatness_check(r);
    let witness = rep
        .witness()
        .map(|w| {
            let prefix = if rep.bianchi_residues.first() == Some(w) { "B" } else { "R" };
            format!("{}={}", label(prefix, w), w.value)
        })
        .or_else(|| flat.witness.as_ref().map(|w| format!("{}={}", label("R", w), w.value)));
    SpecOutcome {
        spec: spec.clone(),
        kahler_like: rep.verdict,
        flat: flat.flat,
        gray: spec.is_lc().then(|| gray_check_lc(r)),
        witness,
    }
}

pub fn evaluate_point(
    case: &str,
    f: &FamilySpec,
    lie: &LieAlgebraCx,
    m: &MetricParams,
    specs: &[ConnectionSpec],
) -> Result<SweepPoint, VerifyError> {
    let h = build_metric(m)?;
    let parts = ChristoffelParts::new(&h, lie);
    let pencil = GauduchonPencil::new(&parts, &h, lie);
    let outcomes = specs
        .iter()
        .map(|s| {
            let r = if s.on_gauduchon_line() { pencil.at(&s.eps) } else { curvature(&parts.combine(s), s, &h, lie) };
            outcome(s, &r)
        })
        .collect();
    Ok(SweepPoint {
        case: case.into(),
        family: f.clone(),
        metric: m.clone(),
        class: classify_metric(&h, lie),
        outcomes,
    })
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CaseResult {
    pub id: String,
    pub group: CaseGroup,
    pub lie_algebra: String,
    pub family: String,
    pub metric: String,
    pub spec: String,
    pub expected: String,
    pub observed: String,
    pub witness: String,
    pub points: usize,
    pub pass: bool,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ConjectureResult {
    pub name: String,
    /// Configurations where the hypothesis held.
    pub hypotheses: usize,
    pub violations: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub first_violation: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Scoreboard {
    pub plan: SamplePlan,
    pub cases: Vec<CaseResult>,
    pub conjectures: Vec<ConjectureResult>,
}

impl Scoreboard {
    pub fn pass(&self) -> bool {
        self.cases.iter().all(|c| c.pass) && self.conjectures.iter().all(|c| c.violations == 0)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("scoreboard serializes")
    }

    pub fn to_csv(&self) -> String {
        let mut w = csv::Writer::from_writer(Vec::new());
        w.write_record(["case", "family", "spec", "expected", "observed", "witness", "pass"]).expect("in-memory write");
        for c in &self.cases {
            let fam = format!("{} [{}]", c.family, c.metric);
            let pass = if c.pass { "PASS" } else { "FAIL" };
            w.write_record([&c.id, &fam, &c.spec, &c.expected, &c.observed, &c.witness, pass])
                .expect("in-memory write");
        }
        String::from_utf8(w.into_inner().expect("flush")).expect("utf8")
    }
}

fn describe(e: &Expectation) -> String {
    let mut s = if e.kahler_like { "kahler-like" } else { "not kahler-like" }.to_string();
    match e.flat {
        Some(true) => s.push_str(", flat"),
        Some(false) => s.push_str(", not flat"),
        None => {}
    }
    s
}

fn judge(case: &TheoremCase, points: &[SweepPoint]) -> CaseResult {
    let mut failures = Vec::new();
    let mut witness = String::new();
    let mut seen = 0;
    let mut kl_true = 0;
    let mut flat_true = 0;
    for p in points {
        for o in p.outcomes.iter().filter(|o| case.specs.contains(&o.spec)) {
            seen += 1;
            kl_true += o.kahler_like as usize;
            flat_true += o.flat as usize;
            let ok_kl = o.kahler_like == case.expect.kahler_like;
            let ok_flat = case.expect.flat.is_none_or(|f| f == o.flat);
            if !case.expect.kahler_like && witness.is_empty() {
                if let Some(w) = &o.witness {
                    witness = format!("{}: {}", o.spec, w);
                }
            }
            if case.expect.kahler_like && !case.expect.flat.unwrap_or(true) && witness.is_empty() && !o.flat {
                if let Some(w) = &o.witness {
                    witness = format!("{}: {}", o.spec, w);
                }
            }
            if !(ok_kl && ok_flat) {
                failures.push(format!(
                    "{} at {}: {}",
                    o.spec,
                    metric_label(&p.metric),
                    o.witness.clone().unwrap_or_default()
                ));
            }
        }
    }
    let observed = if seen == 0 {
        "no evaluations".to_string()
    } else {
        let kl = match kl_true {
            0 => "not kahler-like".to_string(),
            n if n == seen => "kahler-like".to_string(),
            n => format!("kahler-like at {n}/{seen}"),
        };
        match (case.expect.flat, flat_true) {
            (None, _) => kl,
            (_, 0) => format!("{kl}, not flat"),
            (_, n) if n == seen => format!("{kl}, flat"),
            (_, n) => format!("{kl}, flat at {n}/{seen}"),
        }
    };
    if let Some(f) = failures.first() {
        witness = f.clone();
    }
    let pass = seen > 0 && failures.is_empty() && (case.expect.kahler_like || !witness.is_empty());
    CaseResult {
        id: case.id.clone(),
        group: case.group,
        lie_algebra: case.lie_algebra.clone(),
        family: case.family.label(),
        metric: case.metric.to_string(),
        spec: case.specs.name().to_string(),
        expected: describe(&case.expect),
        observed,
        witness,
        points: points.len(),
        pass,
    }
}

pub fn metric_label(m: &MetricParams) -> String {
    format!("r2={},s2={},t2={},u={},v={},z={}", m.r2, m.s2, m.t2, m.u, m.v, m.z)
}

/// Samples every case, evaluates every spec of the plan at each point.
pub fn sweep(plan: &SamplePlan, cases: &[TheoremCase]) -> Result<Vec<Vec<SweepPoint>>, VerifyError> {
    let specs = plan.specs();
    let jobs: Vec<(usize, MetricParams)> = cases
        .iter()
        .enumerate()
        .map(|(n, c)| {
            let mut rng = plan.rng(n as u64);
            (0..plan.points_per_case)
                .map(|_| sample_metric(&mut rng, &c.metric, plan.height).map(|m| (n, m)))
                .collect::<Result<Vec<_>, _>>()
        })
        .collect::<Result<Vec<_>, _>>()?
        .into_iter()
        .flatten()
        .collect();
    let lies: Vec<LieAlgebraCx> = cases.iter().map(|c| c.family.instantiate()).collect();
    let evaluated: Result<Vec<(usize, SweepPoint)>, VerifyError> = jobs
        .par_iter()
        .map(|(n, m)| evaluate_point(&cases[*n].id, &cases[*n].family, &lies[*n], m, &specs).map(|p| (*n, p)))
        .collect();
    let mut grouped: Vec<Vec<SweepPoint>> = vec![Vec::new(); cases.len()];
    for (n, p) in evaluated? {
        grouped[n].push(p);
    }
    Ok(grouped)
}

/// Conjecture-style implications over every evaluated configuration.
pub fn conjecture_checks(points: &[SweepPoint]) -> Vec<ConjectureResult> {
    type Check = (&'static str, fn(&SpecOutcome) -> bool, fn(&SpecOutcome, &MetricClass) -> bool);
    let checks: [Check; 7] = [
        (
            "(a) bismut kahler-like => pluriclosed",
            |o| !o.spec.is_lc() && o.spec.eps == rat(1, 2) && o.kahler_like,
            |_, c| c.pluriclosed,
        ),
        (
            "(b) gauduchon kahler-like with eps not in {0,1/2} => kahler",
            |o| !o.spec.is_lc() && !o.spec.eps.is_zero() && o.spec.eps != rat(1, 2) && o.kahler_like,
            |_, c| c.kahler,
        ),
        (
            "(c) chern or lc kahler-like => balanced",
            |o| (o.spec.is_lc() || o.spec.eps.is_zero()) && o.kahler_like,
            |_, c| c.balanced,
        ),
        ("(d) lc kahler-like => kahler", |o| o.spec.is_lc() && o.kahler_like, |_, c| c.kahler),
        ("(d) kahler => lc kahler-like", |o| o.spec.is_lc(), |o, c| !c.kahler || o.kahler_like),
        ("bismut flat => pluriclosed", |o| !o.spec.is_lc() && o.spec.eps == rat(1, 2) && o.flat, |_, c| c.pluriclosed),
        ("lc gray conditions <=> kahler-like", |o| o.spec.is_lc(), |o, _| o.gray == Some(o.kahler_like)),
    ];
    checks
        .iter()
        .map(|(name, hyp, concl)| {
            let mut hypotheses = 0;
            let mut violations = 0;
            let mut first = None;
            for p in points {
                for o in p.outcomes.iter().filter(|o| hyp(o)) {
                    hypotheses += 1;
                    if !concl(o, &p.class) {
                        violations += 1;
                        first.get_or_insert_with(|| {
                            format!("{} {} at {}", p.family.label(), o.spec, metric_label(&p.metric))
                        });
                    }
                }
            }
            ConjectureResult { name: name.to_string(), hypotheses, violations, first_violation: first }
        })
        .collect()
}

pub fn theorem_suite(plan: &SamplePlan) -> Result<Scoreboard, VerifyError> {
    let cases = theorem_cases();
    let grouped = sweep(plan, &cases)?;
    let results = cases.iter().zip(&grouped).map(|(c, pts)| judge(c, pts)).collect();
    let all: Vec<SweepPoint> = grouped.into_iter().flatten().collect();
    Ok(Scoreboard { plan: plan.clone(), cases: results, conjectures: conjecture_checks(&all) })
}

// ---------------------------------------------------------------------------
// Structural identities

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct IdentityResult {
    pub name: String,
    pub checks: usize,
    pub pass: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub counterexample: Option<String>,
}

const IDENTITIES: [&str; 8] = [
    "curvature skew in both pairs",
    "curvature reality",
    "bianchi identity with torsion",
    "pair symmetry for lc",
    "J parallel on the gauduchon line",
    "metric compatibility",
    "d^2 = 0",
    "g * g_inv = identity",
];

/// Per-point failures as (identity index, description).
fn structural_point(
    f: &FamilySpec,
    lie: &LieAlgebraCx,
    m: &MetricParams,
    specs: &[ConnectionSpec],
) -> Result<(Vec<usize>, Vec<(usize, String)>), VerifyError> {
    use crate::connection::{metric_compatibility_residue, preserves_complex_structure};
    use crate::forms::{exterior_d, FormTensor};
    let h = build_metric(m)?;
    let parts = ChristoffelParts::new(&h, lie);
    let mut counts = vec![0; IDENTITIES.len()];
    let mut fails = Vec::new();
    let at = |s: &ConnectionSpec| format!("{} {} at {}", f.label(), s, metric_label(m));
    for s in specs {
        let gamma = parts.combine(s);
        let r = curvature(&gamma, s, &h, lie);
        let (_, defect) = crate::kernel::torsion_and_defect(&gamma.0, lie.c());
        let mut check = |n: usize, ok: bool| {
            counts[n] += 1;
            if !ok {
                fails.push((n, at(s)));
            }
        };
        check(0, r.is_skew_in_pairs());
        check(1, r.is_real());
        check(2, defect.is_zero());
        if s.is_lc() {
            check(3, r.has_pair_symmetry());
        }
        if s.on_gauduchon_line() {
            check(4, preserves_complex_structure(&gamma));
        }
        check(5, metric_compatibility_residue(&gamma, &h).is_zero());
    }
    let omega = h.omega_form();
    let d2 = (0..crate::frame::DIM)
        .map(FormTensor::basis1)
        .chain(std::iter::once(omega))
        .all(|a| exterior_d(&exterior_d(&a, lie), lie).is_zero());
    counts[6] += 1;
    if !d2 {
        fails.push((6, format!("{} at {}", f.label(), metric_label(m))));
    }
    counts[7] += 1;
    if h.g.contract(&h.g_inv, 1, 0).ok() != Some(crate::tensor::MultiTensor::identity()) {
        fails.push((7, format!("{} at {}", f.label(), metric_label(m))));
    }
    Ok((counts, fails))
}

/// Exact structural identities over every catalog representative, sampled
/// metrics and every spec of the plan plus one connection off the line.
pub fn structural_sweep(plan: &SamplePlan) -> Result<Vec<IdentityResult>, VerifyError> {
    let mut specs = plan.specs();
    specs.push(ConnectionSpec::new(rat(1, 5), rat(-3, 7)));
    let reps = crate::catalog::representatives();
    let lies: Vec<LieAlgebraCx> = reps.iter().map(FamilySpec::instantiate).collect();
    let mut jobs = Vec::new();
    for (n, _) in reps.iter().enumerate() {
        let mut rng = plan.rng(2_000 + n as u64);
        for _ in 0..plan.points_per_case {
            jobs.push((n, sample_metric(&mut rng, &MetricConstraint::any(), plan.height)?));
        }
    }
    let per_point: Result<Vec<_>, VerifyError> =
        jobs.par_iter().map(|(n, m)| structural_point(&reps[*n], &lies[*n], m, &specs)).collect();
    let mut results: Vec<IdentityResult> = IDENTITIES
        .iter()
        .map(|n| IdentityResult { name: n.to_string(), checks: 0, pass: true, counterexample: None })
        .collect();
    for (counts, fails) in per_point? {
        for (r, c) in results.iter_mut().zip(counts) {
            r.checks += c;
        }
        for (n, why) in fails {
            results[n].pass = false;
            results[n].counterexample.get_or_insert(why);
        }
    }
    Ok(results)
}
