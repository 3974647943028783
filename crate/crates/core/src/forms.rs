//! Invariant differential forms stored as fully skew tensors, with
//! φ^{ab}(φ_a, φ_b) = 1.

use num_traits::{One, Zero};

use crate::error::TensorError;
use crate::frame::{is_hol, DIM};
use crate::lie::LieAlgebraCx;
use crate::scalar::{rat, GaussianRational};
use crate::tensor::MultiTensor;

#[derive(Clone, Debug, PartialEq)]
pub struct FormTensor {
    t: MultiTensor,
}

/// Strictly increasing k-tuples from 0..6.
pub(crate) fn increasing(k: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if k == 0 {
            out.push(cur.clone());
            return;
        }
        for a in start..DIM {
            cur.push(a);
            go(a + 1, k - 1, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, k, &mut Vec::new(), &mut out);
    out
}

/// All permutations of 0..n with their signs (+1 even).
pub(crate) fn signed_permutations(n: usize) -> Vec<(Vec<usize>, i64)> {
    fn go(rest: &mut Vec<usize>, cur: &mut Vec<usize>, sign: i64, out: &mut Vec<(Vec<usize>, i64)>) {
        if rest.is_empty() {
            out.push((cur.clone(), sign));
            return;
        }
        for pos in 0..rest.len() {
            let x = rest.remove(pos);
            cur.push(x);
            go(rest, cur, if pos % 2 == 0 { sign } else { -sign }, out);
            cur.pop();
            rest.insert(pos, x);
        }
    }
    let mut out = Vec::new();
    go(&mut (0..n).collect(), &mut Vec::new(), 1, &mut out);
    out
}

impl FormTensor {
    /// Wraps a tensor, rejecting anything that is not fully skew.
    pub fn new(t: MultiTensor) -> Result<Self, TensorError> {
        let f = Self { t };
        if !f.is_skew() {
            return Err(TensorError::NotSkew);
        }
        Ok(f)
    }

    pub fn zero(degree: usize) -> Self {
        Self { t: MultiTensor::zeros(degree) }
    }

    /// The 2-form φ^{ab}.
    pub fn basis2(a: usize, b: usize) -> Self {
        let mut t = MultiTensor::zeros(2);
        if a != b {
            t[[a, b]] = GaussianRational::one();
            t[[b, a]] = -GaussianRational::one();
        }
        Self { t }
    }

    /// The 1-form φ^a.
    pub fn basis1(a: usize) -> Self {
        let mut t = MultiTensor::zeros(1);
        t[[a]] = GaussianRational::one();
        Self { t }
    }

    /// Builds a form from its values on increasing index tuples.
    pub fn from_sorted(degree: usize, mut value: impl FnMut(&[usize]) -> GaussianRational) -> Self {
        let mut t = MultiTensor::zeros(degree);
        let perms = signed_permutations(degree);
        for xs in increasing(degree) {
            let v = value(&xs);
            if v.is_zero() {
                continue;
            }
            let neg = -v.clone();
            for (p, s) in &perms {
                let ix: Vec<usize> = p.iter().map(|&k| xs[k]).collect();
                *t.at_mut(&ix) = if *s > 0 { v.clone() } else { neg.clone() };
            }
        }
        Self { t }
    }

    pub fn degree(&self) -> usize {
        self.t.rank()
    }

    pub fn tensor(&self) -> &MultiTensor {
        &self.t
    }

    pub fn into_tensor(self) -> MultiTensor {
        self.t
    }

    pub fn is_zero(&self) -> bool {
        self.t.is_zero()
    }

    pub fn is_skew(&self) -> bool {
        let k = self.degree();
        (0..k).all(|a| {
            (a + 1..k).all(|b| {
                let s = self.t.swap_slots(a, b).expect("slots in range");
                s.zip_with(&self.t, |x, y| x + y).is_zero()
            })
        })
    }

    /// Components whose index carries exactly p holomorphic and q
    /// antiholomorphic slots.
    pub fn project_type(&self, p: usize, q: usize) -> Self {
        assert_eq!(p + q, self.degree());
        let t = MultiTensor::from_fn(self.degree(), |ix| {
            if ix.iter().filter(|&&a| is_hol(a)).count() == p {
                self.t.at(ix).clone()
            } else {
                GaussianRational::zero()
            }
        });
        Self { t }
    }

    pub fn add(&self, other: &Self) -> Self {
        Self { t: self.t.zip_with(&other.t, |a, b| a + b) }
    }

    pub fn scale(&self, k: &GaussianRational) -> Self {
        Self { t: self.t.scaled(k) }
    }
}

/// Chevalley-Eilenberg differential:
/// dα(x₀..x_k) = Σ_{i<j} (−1)^{i+j} α([x_i,x_j], x₀..x̂_i..x̂_j..x_k).
pub fn exterior_d(alpha: &FormTensor, lie: &LieAlgebraCx) -> FormTensor {
    let k = alpha.degree();
    let c = lie.c();
    FormTensor::from_sorted(k + 1, |xs| {
        let mut s = GaussianRational::zero();
        let mut arg = vec![0; k];
        for i in 0..=k {
            for j in i + 1..=k {
                let rest: Vec<usize> = (0..=k).filter(|&m| m != i && m != j).map(|m| xs[m]).collect();
                let mut term = GaussianRational::zero();
                for a in 0..DIM {
                    let cc = &c[[xs[i], xs[j], a]];
                    if cc.is_zero() {
                        continue;
                    }
                    arg[0] = a;
                    arg[1..].copy_from_slice(&rest);
                    let v = alpha.t.at(&arg);
                    if !v.is_zero() {
                        term += &(cc * v);
                    }
                }
                if (i + j) % 2 == 0 {
                    s += &term;
                } else {
                    s -= &term;
                }
            }
        }
        s
    })
}

/// (α∧β)(x₁..x_{p+q}) = 1/(p!q!) Σ_σ sgn σ · α(x_σ..)·β(x_σ..).
pub fn wedge(alpha: &FormTensor, beta: &FormTensor) -> FormTensor {
    let (p, q) = (alpha.degree(), beta.degree());
    let n = p + q;
    if n > DIM {
        return FormTensor::zero(n);
    }
    let fact = |m: usize| (1..=m as i64).product::<i64>();
    let norm = GaussianRational::real(rat(1, fact(p) * fact(q)));
    let perms = signed_permutations(n);
    FormTensor::from_sorted(n, |xs| {
        let mut s = GaussianRational::zero();
        for (perm, sign) in &perms {
            let x: Vec<usize> = perm.iter().map(|&k| xs[k]).collect();
            let a = alpha.t.at(&x[..p]);
            if a.is_zero() {
                continue;
            }
            let b = beta.t.at(&x[p..]);
            if b.is_zero() {
                continue;
            }
            let prod = a * b;
            if *sign > 0 {
                s += &prod;
            } else {
                s -= &prod;
            }
        }
        &s * &norm
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::frame::FrameIndex;
    use crate::lie::DiffTerm;

    #[test]
    fn permutation_signs() {
        let p = signed_permutations(3);
        assert_eq!(p.len(), 6);
        assert_eq!(p.iter().map(|x| x.1).sum::<i64>(), 0);
        let odd = p.iter().find(|(x, _)| x == &vec![1, 0, 2]).unwrap();
        assert_eq!(odd.1, -1);
    }

    #[test]
    fn d_phi3_on_iwasawa() {
        let l = LieAlgebraCx::from_differentials(&[DiffTerm::new(
            FrameIndex::hol(3),
            GaussianRational::one(),
            FrameIndex::hol(1),
            FrameIndex::hol(2),
        )]);
        let d = exterior_d(&FormTensor::basis1(2), &l);
        assert_eq!(d, FormTensor::basis2(0, 1));
        assert!(exterior_d(&d, &l).is_zero());
    }

    #[test]
    fn wedge_of_one_forms() {
        let w = wedge(&FormTensor::basis1(0), &FormTensor::basis1(1));
        assert_eq!(w, FormTensor::basis2(0, 1));
        assert!(w.is_skew());
    }
}
