//! Fraction-free curvature kernel: tensors are lifted to Gaussian integers
//! over one common denominator, contracted without gcd work, and divided
//! back once per entry.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Zero};

use crate::frame::DIM;
use crate::scalar::{GaussianRational, Rational};
use crate::tensor::MultiTensor;

#[derive(Clone, Debug, Default)]
struct GInt {
    re: BigInt,
    im: BigInt,
}

impl GInt {
    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn mul_add(&mut self, a: &GInt, b: &GInt, sign: bool) {
        let re = &a.re * &b.re - &a.im * &b.im;
        let im = &a.re * &b.im + &a.im * &b.re;
        if sign {
            self.re += re;
            self.im += im;
        } else {
            self.re -= re;
            self.im -= im;
        }
    }

    fn scale(&self, k: &BigInt) -> GInt {
        GInt { re: &self.re * k, im: &self.im * k }
    }
}

/// Entries times a common denominator.
struct Lifted {
    data: Vec<GInt>,
    den: BigInt,
}

fn lift(t: &MultiTensor) -> Lifted {
    let den =
        t.as_slice().iter().flat_map(|z| [z.re().denom(), z.im().denom()]).fold(BigInt::one(), |acc, d| acc.lcm(d));
    let num = |q: &Rational| q.numer() * (&den / q.denom());
    let data = t.as_slice().iter().map(|z| GInt { re: num(z.re()), im: num(z.im()) }).collect();
    Lifted { data, den }
}

fn at3(i: usize, j: usize, k: usize) -> usize {
    (i * DIM + j) * DIM + k
}

/// Numerators of the quadratic and linear parts of the curvature
/// endomorphism: Γ_{HK}^B Γ_{IB}^A − Γ_{IK}^B Γ_{HB}^A and c_{IH}^B Γ_{BK}^A.
fn endomorphism_parts(g: &[GInt], c: &[GInt]) -> (Vec<GInt>, Vec<GInt>) {
    let mut quad = vec![GInt::default(); DIM.pow(4)];
    let mut lin = vec![GInt::default(); DIM.pow(4)];
    for i in 0..DIM {
        for h in 0..DIM {
            for k in 0..DIM {
                let base = at3(i, h, k) * DIM;
                for bb in 0..DIM {
                    let hk = &g[at3(h, k, bb)];
                    if !hk.is_zero() {
                        for a in 0..DIM {
                            let ib = &g[at3(i, bb, a)];
                            if !ib.is_zero() {
                                quad[base + a].mul_add(hk, ib, true);
                            }
                        }
                    }
                    let ik = &g[at3(i, k, bb)];
                    if !ik.is_zero() {
                        for a in 0..DIM {
                            let hb = &g[at3(h, bb, a)];
                            if !hb.is_zero() {
                                quad[base + a].mul_add(ik, hb, false);
                            }
                        }
                    }
                    let cb = &c[at3(i, h, bb)];
                    if !cb.is_zero() {
                        for a in 0..DIM {
                            let bk = &g[at3(bb, k, a)];
                            if !bk.is_zero() {
                                lin[base + a].mul_add(cb, bk, true);
                            }
                        }
                    }
                }
            }
        }
    }
    (quad, lin)
}

fn to_rational(data: &[GInt], den: &BigInt) -> MultiTensor {
    let den = Rational::from_integer(den.clone());
    MultiTensor::from_fn(4, |ix| {
        let s = &data[((ix[0] * DIM + ix[1]) * DIM + ix[2]) * DIM + ix[3]];
        if s.is_zero() {
            GaussianRational::zero()
        } else {
            GaussianRational::new(
                Rational::from_integer(s.re.clone()) / &den,
                Rational::from_integer(s.im.clone()) / &den,
            )
        }
    })
}

/// R_{IHKL} = Σ_A E^A_{IHK} b_{AL} for connection symbols `gamma`, structure
/// constants `c` and pairing `b`; equal to lowering
/// [`crate::connection::curvature_endomorphism`] with `b`.
pub(crate) fn lowered_curvature(gamma: &MultiTensor, c: &MultiTensor, b: &MultiTensor) -> MultiTensor {
    let g = lift(gamma);
    let cl = lift(c);
    let bl = lift(b);
    // E·(D²·Dc) = Dc·(ΓΓ terms) − D·(cΓ term)
    let (quad, lin) = endomorphism_parts(&g.data, &cl.data);
    let e: Vec<GInt> = quad
        .iter()
        .zip(&lin)
        .map(|(q, l)| {
            let (q, l) = (q.scale(&cl.den), l.scale(&g.den));
            GInt { re: q.re - l.re, im: q.im - l.im }
        })
        .collect();
    let mut r = vec![GInt::default(); DIM.pow(4)];
    for (n, slot) in r.iter_mut().enumerate() {
        let (ihk, l) = (n / DIM, n % DIM);
        for a in 0..DIM {
            let x = &e[ihk * DIM + a];
            let y = &bl.data[a * DIM + l];
            if !x.is_zero() && !y.is_zero() {
                slot.mul_add(x, y, true);
            }
        }
    }
    to_rational(&r, &(&g.den * &g.den * &cl.den * &bl.den))
}

/// Torsion T_{IH}^K = Γ_{IH}^K − Γ_{HI}^K − c_{IH}^K and the cyclic defect
/// 𝔖[R(x,y)z − T(T(x,y),z) − (∇_x T)(y,z)], computed over one denominator.
pub(crate) fn torsion_and_defect(gamma: &MultiTensor, c: &MultiTensor) -> (MultiTensor, MultiTensor) {
    let den = [gamma, c]
        .iter()
        .flat_map(|t| t.as_slice().iter().flat_map(|z| [z.re().denom(), z.im().denom()]))
        .fold(BigInt::one(), |acc, d| acc.lcm(d));
    let num = |q: &Rational| q.numer() * (&den / q.denom());
    let lifted = |t: &MultiTensor| -> Vec<GInt> {
        t.as_slice().iter().map(|z| GInt { re: num(z.re()), im: num(z.im()) }).collect()
    };
    let (g, cl) = (lifted(gamma), lifted(c));
    let tor: Vec<GInt> = (0..DIM.pow(3))
        .map(|n| {
            let (i, h, k) = (n / 36, (n / 6) % 6, n % 6);
            let (a, b, cc) = (&g[n], &g[at3(h, i, k)], &cl[n]);
            GInt { re: &a.re - &b.re - &cc.re, im: &a.im - &b.im - &cc.im }
        })
        .collect();
    let (quad, lin) = endomorphism_parts(&g, &cl);
    let term = |s: &mut GInt, x: usize, y: usize, z: usize, a: usize| {
        let n = at3(x, y, z) * DIM + a;
        s.re += &quad[n].re - &lin[n].re;
        s.im += &quad[n].im - &lin[n].im;
        for k in 0..DIM {
            let pairs = [
                (&tor[at3(x, y, k)], &tor[at3(k, z, a)], false),
                (&tor[at3(y, z, k)], &g[at3(x, k, a)], false),
                (&g[at3(x, y, k)], &tor[at3(k, z, a)], true),
                (&g[at3(x, z, k)], &tor[at3(y, k, a)], true),
            ];
            for (p, q, sign) in pairs {
                if !p.is_zero() && !q.is_zero() {
                    s.mul_add(p, q, sign);
                }
            }
        }
    };
    let defect: Vec<GInt> = (0..DIM.pow(4))
        .map(|n| {
            let (x, y, z, a) = (n / 216, (n / 36) % 6, (n / 6) % 6, n % 6);
            let mut s = GInt::default();
            term(&mut s, x, y, z, a);
            term(&mut s, y, z, x, a);
            term(&mut s, z, x, y, a);
            s
        })
        .collect();
    let dq = Rational::from_integer(den.clone());
    let torsion = MultiTensor::from_fn(3, |ix| {
        let s = &tor[at3(ix[0], ix[1], ix[2])];
        GaussianRational::new(Rational::from_integer(s.re.clone()) / &dq, Rational::from_integer(s.im.clone()) / &dq)
    });
    (torsion, to_rational(&defect, &(&den * &den)))
}

/// R(ε) = A + Bε + Cε² with integer coefficient tensors over one denominator.
#[derive(Clone, Debug)]
pub(crate) struct QuadraticPencil {
    coeffs: [Vec<GInt>; 3],
    den: BigInt,
}

impl QuadraticPencil {
    /// From values at ε = 0, ½, 1.
    pub(crate) fn from_nodes(r0: &MultiTensor, rh: &MultiTensor, r1: &MultiTensor) -> Self {
        let den = [r0, rh, r1]
            .iter()
            .flat_map(|t| t.as_slice().iter().flat_map(|z| [z.re().denom(), z.im().denom()]))
            .fold(BigInt::one(), |acc, d| acc.lcm(d));
        let num = |q: &Rational| q.numer() * (&den / q.denom());
        let lifted = |t: &MultiTensor| -> Vec<GInt> {
            t.as_slice().iter().map(|z| GInt { re: num(z.re()), im: num(z.im()) }).collect()
        };
        let (n0, nh, n1) = (lifted(r0), lifted(rh), lifted(r1));
        let comb = |k: [i64; 3]| -> Vec<GInt> {
            let k = k.map(BigInt::from);
            (0..n0.len())
                .map(|n| GInt {
                    re: &n0[n].re * &k[0] + &nh[n].re * &k[1] + &n1[n].re * &k[2],
                    im: &n0[n].im * &k[0] + &nh[n].im * &k[1] + &n1[n].im * &k[2],
                })
                .collect()
        };
        Self { coeffs: [comb([1, 0, 0]), comb([-3, 4, -1]), comb([2, -4, 2])], den }
    }

    pub(crate) fn at(&self, eps: &Rational) -> MultiTensor {
        let (p, q) = (eps.numer(), eps.denom());
        let w = [q * q, p * q, p * p];
        let den = Rational::from_integer(&self.den * q * q);
        let [a, b, c] = &self.coeffs;
        MultiTensor::from_fn(4, |ix| {
            let n = ((ix[0] * DIM + ix[1]) * DIM + ix[2]) * DIM + ix[3];
            let mut s = GInt::default();
            for (t, k) in [(&a[n], &w[0]), (&b[n], &w[1]), (&c[n], &w[2])] {
                if !t.is_zero() {
                    s.re += &t.re * k;
                    s.im += &t.im * k;
                }
            }
            if s.is_zero() {
                GaussianRational::zero()
            } else {
                GaussianRational::new(Rational::from_integer(s.re) / &den, Rational::from_integer(s.im) / &den)
            }
        })
    }
}
