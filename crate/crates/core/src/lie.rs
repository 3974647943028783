//! Complexified structure constants c_{IH}^K of a Lie algebra with invariant
//! complex structure.

use serde::{Deserialize, Serialize};

use crate::error::TensorError;
use crate::frame::{bar, FrameIndex, DIM};
use crate::scalar::GaussianRational;
use crate::tensor::{Component, MultiTensor};
use num_traits::Zero;

/// One term `coef · φ^{ab}` of `dφ^k` (k holomorphic).
#[derive(Clone, Debug)]
pub struct DiffTerm {
    pub target: FrameIndex,
    pub coef: GaussianRational,
    pub a: FrameIndex,
    pub b: FrameIndex,
}

impl DiffTerm {
    pub fn new(target: FrameIndex, coef: GaussianRational, a: FrameIndex, b: FrameIndex) -> Self {
        Self { target, coef, a, b }
    }
}

/// c[I][H][K] = c_{IH}^K, with [φ_I, φ_H] = c_{IH}^K φ_K.
#[derive(Clone, Debug, PartialEq)]
pub struct LieAlgebraCx {
    c: MultiTensor,
}

/// JSON record for one nonzero structure constant.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct StructureRecord {
    pub i: FrameIndex,
    pub h: FrameIndex,
    pub k: FrameIndex,
    pub value: GaussianRational,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(tag = "status", rename_all = "lowercase")]
pub enum Check {
    Pass,
    Fail { witness: Vec<FrameIndex>, residue: GaussianRational },
}

impl Check {
    pub fn passed(&self) -> bool {
        matches!(self, Check::Pass)
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ValidationReport {
    pub skew: Check,
    pub reality: Check,
    pub jacobi: Check,
}

impl ValidationReport {
    pub fn passed(&self) -> bool {
        self.skew.passed() && self.reality.passed() && self.jacobi.passed()
    }
}

fn idx(v: &[usize]) -> Vec<FrameIndex> {
    v.iter().map(|&s| FrameIndex::ALL[s]).collect()
}

impl LieAlgebraCx {
    pub fn abelian() -> Self {
        Self { c: MultiTensor::zeros(3) }
    }

    /// Takes the tensor as given; call [`validate`](Self::validate) to check it.
    pub fn from_tensor(c: MultiTensor) -> Result<Self, TensorError> {
        if c.rank() != 3 {
            return Err(TensorError::RankMismatch { expected: 3, found: c.rank() });
        }
        Ok(Self { c })
    }

    /// Reads c off dφ^k(φ_a, φ_b) = −φ^k([φ_a, φ_b]) and adds the conjugate
    /// equations for dφ^{k̄}.
    pub fn from_differentials(terms: &[DiffTerm]) -> Self {
        let mut c = MultiTensor::zeros(3);
        for t in terms {
            assert!(t.target.is_holomorphic(), "differentials are given for φ¹, φ², φ³");
            let (a, b, k) = (t.a.slot(), t.b.slot(), t.target.slot());
            if a == b || t.coef.is_zero() {
                continue;
            }
            c[[a, b, k]] -= &t.coef;
            c[[b, a, k]] += &t.coef;
            let cc = t.coef.conj();
            c[[bar(a), bar(b), bar(k)]] -= &cc;
            c[[bar(b), bar(a), bar(k)]] += &cc;
        }
        Self { c }
    }

    pub fn c(&self) -> &MultiTensor {
        &self.c
    }

    pub fn is_abelian(&self) -> bool {
        self.c.is_zero()
    }

    pub fn records(&self) -> Vec<StructureRecord> {
        self.c.nonzero().map(|(ix, v)| StructureRecord { i: ix[0], h: ix[1], k: ix[2], value: v.clone() }).collect()
    }

    pub fn from_records(records: &[StructureRecord]) -> Self {
        let comps: Vec<Component> =
            records.iter().map(|r| Component { index: vec![r.i, r.h, r.k], value: r.value.clone() }).collect();
        Self { c: MultiTensor::from_components(3, &comps).expect("records are rank 3") }
    }

    pub fn validate(&self) -> ValidationReport {
        let c = &self.c;
        let mut skew = Check::Pass;
        let mut reality = Check::Pass;
        'outer: for i in 0..DIM {
            for h in 0..DIM {
                for k in 0..DIM {
                    let s = &c[[i, h, k]] + &c[[h, i, k]];
                    if !s.is_zero() && skew.passed() {
                        skew = Check::Fail { witness: idx(&[h, i, k]), residue: s };
                    }
                    let r = &c[[bar(i), bar(h), bar(k)]] - &c[[i, h, k]].conj();
                    if !r.is_zero() && reality.passed() {
                        reality = Check::Fail { witness: idx(&[i, h, k]), residue: r };
                    }
                    if !skew.passed() && !reality.passed() {
                        break 'outer;
                    }
                }
            }
        }
        ValidationReport { skew, reality, jacobi: self.jacobi() }
    }

    fn jacobi(&self) -> Check {
        let c = &self.c;
        for i in 0..DIM {
            for h in 0..DIM {
                for k in 0..DIM {
                    for b in 0..DIM {
                        let mut s = GaussianRational::zero();
                        for a in 0..DIM {
                            for (x, y, z) in [(i, h, k), (h, k, i), (k, i, h)] {
                                let p = &c[[x, y, a]];
                                if p.is_zero() {
                                    continue;
                                }
                                let q = &c[[a, z, b]];
                                if !q.is_zero() {
                                    s += &(p * q);
                                }
                            }
                        }
                        if !s.is_zero() {
                            return Check::Fail { witness: idx(&[i, h, k, b]), residue: s };
                        }
                    }
                }
            }
        }
        Check::Pass
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    fn f(s: &str) -> FrameIndex {
        s.parse().unwrap()
    }

    #[test]
    fn torus_passes() {
        assert!(LieAlgebraCx::abelian().validate().passed());
    }

    #[test]
    fn iwasawa_structure_constants() {
        let l = LieAlgebraCx::from_differentials(&[DiffTerm::new(f("3"), GaussianRational::one(), f("1"), f("2"))]);
        assert_eq!(*l.c().get(&[f("1"), f("2"), f("3")]), -GaussianRational::one());
        assert_eq!(*l.c().get(&[f("1b"), f("2b"), f("3b")]), -GaussianRational::one());
        assert_eq!(l.records().len(), 4);
        assert!(l.validate().passed());
    }

    #[test]
    fn skew_violation_reports_witness() {
        let mut c = MultiTensor::zeros(3);
        c[[0, 1, 2]] = GaussianRational::one();
        c[[1, 0, 2]] = GaussianRational::one();
        let rep = LieAlgebraCx::from_tensor(c).unwrap().validate();
        match rep.skew {
            Check::Fail { witness, .. } => assert_eq!(witness, vec![f("2"), f("1"), f("3")]),
            Check::Pass => panic!("expected failure"),
        }
    }

    #[test]
    fn records_round_trip() {
        let l = LieAlgebraCx::from_differentials(&[DiffTerm::new(f("3"), GaussianRational::i(), f("1"), f("1b"))]);
        let json = serde_json::to_string(&l.records()).unwrap();
        let back: Vec<StructureRecord> = serde_json::from_str(&json).unwrap();
        assert_eq!(LieAlgebraCx::from_records(&back), l);
    }
}
