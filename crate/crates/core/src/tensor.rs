//! Dense tensors over the six-element complexified frame.

use std::ops::{Index, IndexMut};

use serde::{Deserialize, Serialize};

use crate::error::TensorError;
use crate::frame::{bar, FrameIndex, DIM};
use crate::scalar::{Field, GaussianRational, RefArith};

/// Rank-k array with 6^k entries, row-major in the slot order.
#[derive(Clone, PartialEq, Debug)]
pub struct MultiTensor<S = GaussianRational> {
    rank: usize,
    data: Vec<S>,
}

pub(crate) fn pow6(k: usize) -> usize {
    DIM.pow(k as u32)
}

fn decode(mut off: usize, rank: usize) -> Vec<usize> {
    let mut idx = vec![0; rank];
    for slot in (0..rank).rev() {
        idx[slot] = off % DIM;
        off /= DIM;
    }
    idx
}

fn encode(idx: &[usize]) -> usize {
    idx.iter().fold(0, |acc, &i| acc * DIM + i)
}

impl<S: Field> MultiTensor<S> {
    pub fn zeros(rank: usize) -> Self {
        Self { rank, data: vec![S::zero(); pow6(rank)] }
    }

    pub fn from_fn(rank: usize, mut f: impl FnMut(&[usize]) -> S) -> Self {
        let data = (0..pow6(rank)).map(|o| f(&decode(o, rank))).collect();
        Self { rank, data }
    }

    /// Kronecker delta δ_I^K.
    pub fn identity() -> Self {
        Self::from_fn(2, |i| if i[0] == i[1] { S::one() } else { S::zero() })
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    pub fn as_slice(&self) -> &[S] {
        &self.data
    }

    pub fn get(&self, idx: &[FrameIndex]) -> &S {
        assert_eq!(idx.len(), self.rank, "index length must equal rank");
        &self.data[idx.iter().fold(0, |acc, i| acc * DIM + i.slot())]
    }

    pub fn set(&mut self, idx: &[FrameIndex], value: S) {
        assert_eq!(idx.len(), self.rank, "index length must equal rank");
        let off = idx.iter().fold(0, |acc, i| acc * DIM + i.slot());
        self.data[off] = value;
    }

    pub fn at(&self, idx: &[usize]) -> &S {
        &self.data[encode(idx)]
    }

    pub fn at_mut(&mut self, idx: &[usize]) -> &mut S {
        &mut self.data[encode(idx)]
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(S::is_zero)
    }

    /// Nonzero entries in lexicographic index order.
    pub fn nonzero(&self) -> impl Iterator<Item = (Vec<FrameIndex>, &S)> + '_ {
        self.data.iter().enumerate().filter(|(_, v)| !v.is_zero()).map(move |(o, v)| {
            let idx = decode(o, self.rank).into_iter().map(|s| FrameIndex::ALL[s]).collect();
            (idx, v)
        })
    }

    pub fn map<T: Field>(&self, f: impl Fn(&S) -> T) -> MultiTensor<T> {
        MultiTensor { rank: self.rank, data: self.data.iter().map(f).collect() }
    }

    /// result[I₁..I_k] = conj(T[Ī₁..Ī_k]).
    pub fn conjugate(&self) -> Self {
        Self::from_fn(self.rank, |idx| {
            let barred: Vec<usize> = idx.iter().map(|&a| bar(a)).collect();
            self.at(&barred).conj()
        })
    }

    /// Same entries with two slots exchanged.
    pub fn swap_slots(&self, a: usize, b: usize) -> Result<Self, TensorError> {
        for s in [a, b] {
            if s >= self.rank {
                return Err(TensorError::SlotOutOfRange { slot: s, rank: self.rank });
            }
        }
        Ok(Self::from_fn(self.rank, |idx| {
            let mut j = idx.to_vec();
            j.swap(a, b);
            self.at(&j).clone()
        }))
    }
}

impl<S: Field> MultiTensor<S>
where
    for<'a> &'a S: RefArith<S>,
{
    /// Σ_X T[.., X at slot_t, ..] A[.., X at slot_a, ..]; remaining slots of T
    /// come first, then those of A.
    pub fn contract(&self, other: &Self, slot_t: usize, slot_a: usize) -> Result<Self, TensorError> {
        if slot_t >= self.rank {
            return Err(TensorError::SlotOutOfRange { slot: slot_t, rank: self.rank });
        }
        if slot_a >= other.rank {
            return Err(TensorError::SlotOutOfRange { slot: slot_a, rank: other.rank });
        }
        let rt = self.rank - 1;
        let rank = rt + other.rank - 1;
        let mut ti = vec![0; self.rank];
        let mut ai = vec![0; other.rank];
        Ok(Self::from_fn(rank, |idx| {
            let (left, right) = idx.split_at(rt);
            let mut acc = S::zero();
            for x in 0..DIM {
                fill_with_slot(&mut ti, left, slot_t, x);
                fill_with_slot(&mut ai, right, slot_a, x);
                let t = self.at(&ti);
                if t.is_zero() {
                    continue;
                }
                let a = other.at(&ai);
                if !a.is_zero() {
                    acc += &(t * a);
                }
            }
            acc
        }))
    }

    /// (T − T with `slots` swapped) / 2.
    pub fn antisymmetrize(&self, slots: (usize, usize)) -> Result<Self, TensorError> {
        if self.rank < 2 {
            return Err(TensorError::RankTooSmall(self.rank));
        }
        let swapped = self.swap_slots(slots.0, slots.1)?;
        let half = (S::one() + S::one()).inverse().expect("2 is invertible");
        Ok(self.zip_with(&swapped, |a, b| &(a - b) * &half))
    }

    pub fn zip_with(&self, other: &Self, f: impl Fn(&S, &S) -> S) -> Self {
        assert_eq!(self.rank, other.rank);
        Self { rank: self.rank, data: self.data.iter().zip(&other.data).map(|(a, b)| f(a, b)).collect() }
    }

    pub fn scaled(&self, k: &S) -> Self {
        Self { rank: self.rank, data: self.data.iter().map(|x| x * k).collect() }
    }
}

fn fill_with_slot(out: &mut [usize], rest: &[usize], slot: usize, x: usize) {
    let mut r = 0;
    for (s, o) in out.iter_mut().enumerate() {
        if s == slot {
            *o = x;
        } else {
            *o = rest[r];
            r += 1;
        }
    }
}

impl<S, const N: usize> Index<[usize; N]> for MultiTensor<S> {
    type Output = S;
    fn index(&self, idx: [usize; N]) -> &S {
        debug_assert_eq!(N, self.rank);
        &self.data[encode(&idx)]
    }
}

impl<S, const N: usize> IndexMut<[usize; N]> for MultiTensor<S> {
    fn index_mut(&mut self, idx: [usize; N]) -> &mut S {
        debug_assert_eq!(N, self.rank);
        &mut self.data[encode(&idx)]
    }
}

/// One nonzero tensor component, as dumped in JSON reports.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct Component {
    pub index: Vec<FrameIndex>,
    pub value: GaussianRational,
}

impl MultiTensor<GaussianRational> {
    pub fn components(&self) -> Vec<Component> {
        self.nonzero().map(|(index, v)| Component { index, value: v.clone() }).collect()
    }

    pub fn from_components(rank: usize, comps: &[Component]) -> Result<Self, TensorError> {
        let mut t = Self::zeros(rank);
        for c in comps {
            if c.index.len() != rank {
                return Err(TensorError::RankMismatch { expected: rank, found: c.index.len() });
            }
            t.set(&c.index, c.value.clone());
        }
        Ok(t)
    }

    pub fn to_complex(&self) -> MultiTensor<num_complex::Complex64> {
        self.map(|x| x.to_complex64())
    }
}

/// Inverse of a 6×6 matrix by Gauss-Jordan elimination with magnitude pivoting.
pub fn invert<S: Field>(m: &MultiTensor<S>) -> Option<MultiTensor<S>>
where
    for<'a> &'a S: RefArith<S>,
{
    assert_eq!(m.rank(), 2);
    let mut a: Vec<Vec<S>> = (0..DIM).map(|i| (0..DIM).map(|j| m[[i, j]].clone()).collect()).collect();
    let mut inv: Vec<Vec<S>> =
        (0..DIM).map(|i| (0..DIM).map(|j| if i == j { S::one() } else { S::zero() }).collect()).collect();
    for col in 0..DIM {
        let pivot = (col..DIM)
            .filter(|&r| !a[r][col].is_zero())
            .max_by(|&x, &y| a[x][col].magnitude().total_cmp(&a[y][col].magnitude()))?;
        a.swap(col, pivot);
        inv.swap(col, pivot);
        let p = a[col][col].inverse()?;
        for j in 0..DIM {
            a[col][j] = &a[col][j] * &p;
            inv[col][j] = &inv[col][j] * &p;
        }
        for r in 0..DIM {
            if r == col || a[r][col].is_zero() {
                continue;
            }
            let f = a[r][col].clone();
            for j in 0..DIM {
                let da = &f * &a[col][j];
                let di = &f * &inv[col][j];
                a[r][j] -= &da;
                inv[r][j] -= &di;
            }
        }
    }
    Some(MultiTensor::from_fn(2, |i| inv[i[0]][i[1]].clone()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::{One, Zero};

    type G = GaussianRational;

    #[test]
    fn conjugate_moves_and_conjugates() {
        let mut t = MultiTensor::<G>::zeros(1);
        t[[0]] = G::i();
        let c = t.conjugate();
        assert_eq!(c[[3]], -G::i());
        assert!(c[[0]].is_zero());
        assert!(MultiTensor::<G>::zeros(3).conjugate().is_zero());
    }

    #[test]
    fn identity_contraction() {
        let v = MultiTensor::<G>::from_fn(1, |i| G::from_int(i[0] as i64 + 1));
        let id = MultiTensor::<G>::identity();
        assert_eq!(id.contract(&v, 1, 0).unwrap(), v);
        assert!(id.contract(&v, 2, 0).is_err());
    }

    #[test]
    fn antisymmetrize_basics() {
        let sym = MultiTensor::<G>::from_fn(2, |i| G::from_int((i[0] + i[1]) as i64));
        assert!(sym.antisymmetrize((0, 1)).unwrap().is_zero());
        let mut e12 = MultiTensor::<G>::zeros(2);
        e12[[0, 1]] = G::one();
        let a = e12.antisymmetrize((0, 1)).unwrap();
        assert_eq!(a[[0, 1]], G::from_ratios(1, 2, 0, 1));
        assert_eq!(a[[1, 0]], G::from_ratios(-1, 2, 0, 1));
        assert_eq!(a.antisymmetrize((0, 1)).unwrap(), a);
        assert!(MultiTensor::<G>::zeros(1).antisymmetrize((0, 0)).is_err());
    }

    #[test]
    fn invert_exact() {
        let m = MultiTensor::<G>::from_fn(2, |i| {
            if i[0] == i[1] {
                G::from_int(2)
            } else if i[0] + 1 == i[1] {
                G::i()
            } else {
                G::zero()
            }
        });
        let inv = invert(&m).unwrap();
        assert_eq!(m.contract(&inv, 1, 0).unwrap(), MultiTensor::identity());
    }
}
