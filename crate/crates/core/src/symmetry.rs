//! Kähler-like verdicts: type condition, B-tensor, flatness and the Gray
//! conditions for Levi-Civita.

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::connection::{CurvatureRecord, CurvatureTensor};
use crate::frame::{bar, is_hol, tuple_label, FrameIndex, DIM};
use crate::scalar::GaussianRational;

pub const DEFAULT_WITNESS_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct KahlerLikeReport {
    pub verdict: bool,
    pub type_residues: Vec<CurvatureRecord>,
    pub bianchi_residues: Vec<CurvatureRecord>,
    /// Number of nonzero residues before the witness cap.
    pub type_count: usize,
    pub bianchi_count: usize,
}

impl KahlerLikeReport {
    /// First witness, B residues preferred.
    pub fn witness(&self) -> Option<&CurvatureRecord> {
        self.bianchi_residues.first().or(self.type_residues.first())
    }
}

/// B_{i j̄ k l̄} = R_{i j̄ k l̄} − R_{k j̄ i l̄} over holomorphic (i,j,k,l).
#[derive(Clone, Debug, PartialEq)]
pub struct BTensor {
    data: Vec<GaussianRational>,
}

impl BTensor {
    pub fn new(r: &CurvatureTensor) -> Self {
        let mut data = Vec::with_capacity(81);
        for i in 0..3 {
            for j in 0..3 {
                for k in 0..3 {
                    for l in 0..3 {
                        data.push(&r.r[[i, bar(j), k, bar(l)]] - &r.r[[k, bar(j), i, bar(l)]]);
                    }
                }
            }
        }
        Self { data }
    }

    /// Holomorphic indices 0..3 for (i, j, k, l).
    pub fn get(&self, i: usize, j: usize, k: usize, l: usize) -> &GaussianRational {
        &self.data[((i * 3 + j) * 3 + k) * 3 + l]
    }

    /// Looks up a label such as "1 1b 3 3b"; barred positions must be the
    /// second and fourth.
    pub fn component(&self, labels: &str) -> Option<&GaussianRational> {
        let ix = crate::frame::parse_tuple(labels).ok()?;
        if ix.len() != 4
            || !ix[0].is_holomorphic()
            || ix[1].is_holomorphic()
            || !ix[2].is_holomorphic()
            || ix[3].is_holomorphic()
        {
            return None;
        }
        Some(self.get(ix[0].slot(), ix[1].bar().slot(), ix[2].slot(), ix[3].bar().slot()))
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(Zero::is_zero)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<FrameIndex>, &GaussianRational)> + '_ {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(|(n, v)| {
            let (i, j, k, l) = (n / 27, (n / 9) % 3, (n / 3) % 3, n % 3);
            (
                vec![
                    FrameIndex::hol(i + 1),
                    FrameIndex::antihol(j + 1),
                    FrameIndex::hol(k + 1),
                    FrameIndex::antihol(l + 1),
                ],
                v,
            )
        })
    }
}

fn record(ix: &[usize], value: &GaussianRational) -> CurvatureRecord {
    let f = |a: usize| FrameIndex::ALL[a];
    CurvatureRecord { i: f(ix[0]), h: f(ix[1]), k: f(ix[2]), l: f(ix[3]), value: value.clone() }
}

pub fn label(prefix: &str, rec: &CurvatureRecord) -> String {
    format!("{prefix}{}", tuple_label(&[rec.i, rec.h, rec.k, rec.l]))
}

fn same_type(a: usize, b: usize) -> bool {
    is_hol(a) == is_hol(b)
}

fn all_tuples() -> impl Iterator<Item = [usize; 4]> {
    (0..DIM.pow(4)).map(|o| [o / 216, (o / 36) % 6, (o / 6) % 6, o % 6])
}

pub fn kahler_like_check(r: &CurvatureTensor) -> KahlerLikeReport {
    kahler_like_check_capped(r, DEFAULT_WITNESS_CAP)
}

pub fn kahler_like_check_capped(r: &CurvatureTensor, cap: usize) -> KahlerLikeReport {
    let mut type_residues = Vec::new();
    let mut type_count = 0;
    for ix in all_tuples() {
        if !(same_type(ix[0], ix[1]) || same_type(ix[2], ix[3])) {
            continue;
        }
        let v = &r.r[ix];
        if !v.is_zero() {
            type_count += 1;
            if type_residues.len() < cap {
                type_residues.push(record(&ix, v));
            }
        }
    }
    let b = BTensor::new(r);
    let mut bianchi_residues = Vec::new();
    let mut bianchi_count = 0;
    for (ix, v) in b.nonzero() {
        bianchi_count += 1;
        if bianchi_residues.len() < cap {
            bianchi_residues.push(CurvatureRecord { i: ix[0], h: ix[1], k: ix[2], l: ix[3], value: v.clone() });
        }
    }
    KahlerLikeReport {
        verdict: type_count == 0 && bianchi_count == 0,
        type_residues,
        bianchi_residues,
        type_count,
        bianchi_count,
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct FlatnessReport {
    pub flat: bool,
    pub witness: Option<CurvatureRecord>,
}

pub fn flatness_check(r: &CurvatureTensor) -> FlatnessReport {
    let witness = all_tuples().find(|ix| !r.r[*ix].is_zero()).map(|ix| record(&ix, &r.r[ix]));
    FlatnessReport { flat: witness.is_none(), witness }
}

/// R(X,Y,Z̄,W̄) = R(X,Y,Z,W̄) = R(X,Y,Z,W) = 0 on (1,0) vectors, together with
/// the conjugate conditions.
pub fn gray_check_lc(r: &CurvatureTensor) -> bool {
    all_tuples().all(|ix| !same_type(ix[0], ix[1]) || r.r[ix].is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::connection::{evaluate, ConnectionSpec};
    use crate::lie::{DiffTerm, LieAlgebraCx};
    use crate::metric::{build_metric, MetricParams};
    use num_traits::One;

    fn iwasawa() -> LieAlgebraCx {
        let f = |s: &str| s.parse::<FrameIndex>().unwrap();
        LieAlgebraCx::from_differentials(&[DiffTerm::new(f("3"), GaussianRational::one(), f("1"), f("2"))])
    }

    #[test]
    fn iwasawa_chern_flat_bismut_not_kahler_like() {
        let h = build_metric(&MetricParams::identity()).unwrap();
        let c = iwasawa();
        let ch = evaluate(&ConnectionSpec::chern(), &h, &c);
        assert!(flatness_check(&ch).flat);
        assert!(kahler_like_check(&ch).verdict);
        let bi = evaluate(&ConnectionSpec::bismut(), &h, &c);
        let rep = kahler_like_check(&bi);
        assert!(!rep.verdict);
        // 2ε²t⁴(r²t²−|z|²)/det_scaled at ε = ½ and the identity metric
        let b = BTensor::new(&bi);
        assert_eq!(b.component("1 1b 3 3b").unwrap(), &"1/2".parse::<GaussianRational>().unwrap());
        assert!(b.component("1 1 3 3b").is_none());
    }

    #[test]
    fn report_json_shape() {
        let h = build_metric(&MetricParams::identity()).unwrap();
        let rep = kahler_like_check(&evaluate(&ConnectionSpec::bismut(), &h, &iwasawa()));
        let v: serde_json::Value = serde_json::to_value(&rep).unwrap();
        assert_eq!(v["verdict"], false);
        assert!(v["bianchi_residues"].as_array().unwrap().len() <= DEFAULT_WITNESS_CAP);
        let back: KahlerLikeReport = serde_json::from_value(v).unwrap();
        assert_eq!(back, rep);
    }
}
