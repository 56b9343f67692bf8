//! The Hopf algebra E(n): a grouplike c with c^2 = 1 and skew-primitive
//! generators x_1, ..., x_n with x_i^2 = 0, x_i x_j = -x_j x_i and
//! c x_i = -x_i c. PBW basis {c^i x_P}, dimension 2^(n+1).

use crate::error::{Error, Result};
use crate::hopf::{self, Elem, HopfAlgebra, Tensor2};
use crate::mask;
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// A PBW basis vector c^c x_{xs}: `c` is the grouplike exponent, `xs` the
/// subset mask of the x-factors.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct EnBasis {
    pub c: u8,
    pub xs: u32,
}

impl EnBasis {
    pub fn one() -> Self {
        EnBasis { c: 0, xs: 0 }
    }

    pub fn grouplike() -> Self {
        EnBasis { c: 1, xs: 0 }
    }

    pub fn x(i: u32) -> Self {
        EnBasis { c: 0, xs: 1 << (i - 1) }
    }
}

pub type EnElem = Elem<EnBasis>;
pub type EnTensor = Tensor2<EnBasis>;

/// The algebra context: rank and ground field.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct En {
    n: usize,
    field: FieldSpec,
}

impl En {
    pub fn new(n: usize, field: FieldSpec) -> Result<Self> {
        if n == 0 || n > 16 {
            return Err(Error::BadRank(n));
        }
        Ok(En { n, field })
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn one(&self) -> EnElem {
        Elem::basis(EnBasis::one(), self.field.one())
    }

    pub fn c(&self) -> EnElem {
        Elem::basis(EnBasis::grouplike(), self.field.one())
    }

    pub fn x(&self, i: u32) -> EnElem {
        assert!(i >= 1 && i as usize <= self.n, "generator index out of range");
        Elem::basis(EnBasis::x(i), self.field.one())
    }

    pub fn basis_elem(&self, c: u8, xs: u32) -> EnElem {
        debug_assert!(xs < 1 << self.n);
        Elem::basis(EnBasis { c, xs }, self.field.one())
    }

    /// Generators c, x_1, ..., x_n.
    pub fn generators(&self) -> Vec<EnElem> {
        let mut g = vec![self.c()];
        for i in 1..=self.n as u32 {
            g.push(self.x(i));
        }
        g
    }

    pub fn mul(&self, a: &EnElem, b: &EnElem) -> EnElem {
        hopf::mul(self, a, b)
    }

    pub fn coproduct(&self, a: &EnElem) -> EnTensor {
        hopf::comul(self, a)
    }

    pub fn counit(&self, a: &EnElem) -> Scalar {
        hopf::counit(self, a)
    }

    pub fn antipode(&self, a: &EnElem) -> EnElem {
        hopf::antipode(self, a)
    }

    /// The dual basis functional (c^i x_P)^*.
    pub fn dual_basis(&self, c: u8, xs: u32) -> EnFunctional {
        let mut coeffs = vec![self.field.zero(); self.dim()];
        coeffs[self.index_of(EnBasis { c, xs })] = self.field.one();
        EnFunctional { n: self.n, field: self.field, coeffs }
    }

    /// The Hopf automorphism associated to an invertible n x n matrix T:
    /// c -> c, x_i -> sum_j t_{ji} x_j.
    pub fn hopf_automorphism(&self, t: &Matrix) -> Result<EnAutomorphism> {
        assert_eq!(t.field(), self.field, "field mismatch");
        if t.rows() != self.n || t.cols() != self.n {
            return Err(Error::Shape(format!(
                "automorphism matrix must be {0}x{0}",
                self.n
            )));
        }
        if t.det().is_zero() {
            return Err(Error::Singular);
        }
        // Generator images; basis images are built multiplicatively on demand.
        let mut x_images = Vec::with_capacity(self.n);
        for i in 0..self.n {
            let mut img = Elem::zero();
            for j in 0..self.n {
                img.add_term(EnBasis::x(j as u32 + 1), t.get(j, i).clone());
            }
            x_images.push(img);
        }
        Ok(EnAutomorphism { algebra: *self, t: t.clone(), x_images })
    }
}

impl HopfAlgebra for En {
    type B = EnBasis;

    fn field(&self) -> FieldSpec {
        self.field
    }

    fn dim(&self) -> usize {
        1 << (self.n + 1)
    }

    fn index_of(&self, b: EnBasis) -> usize {
        (b.c as usize) << self.n | b.xs as usize
    }

    fn basis_at(&self, idx: usize) -> EnBasis {
        EnBasis { c: (idx >> self.n) as u8, xs: (idx & ((1 << self.n) - 1)) as u32 }
    }

    fn unit(&self) -> EnElem {
        self.one()
    }

    fn mul_bb(&self, a: EnBasis, b: EnBasis) -> EnElem {
        if a.xs & b.xs != 0 {
            return Elem::zero();
        }
        // x_P . c^j = (-1)^(j|P|) c^j x_P, then x_P x_Q sorted by inversions.
        let sign = b.c as u32 * mask::card(a.xs) + mask::merge_inversions(a.xs, b.xs);
        Elem::basis(
            EnBasis { c: a.c ^ b.c, xs: a.xs | b.xs },
            self.field.sign(sign),
        )
    }

    fn comul_b(&self, a: EnBasis) -> EnTensor {
        // Delta(x_P) = sum_{F subset P} (-1)^S(F,P) x_F (x) c^|F| x_{P\F},
        // and Delta(c^i h) = (c^i (x) c^i) Delta(h).
        let mut out = Tensor2::zero();
        for f in mask::submasks(a.xs) {
            let sign = self.field.sign(mask::position_sign_exp(f, a.xs));
            let left = EnBasis { c: a.c, xs: f };
            let right = EnBasis { c: a.c ^ (mask::card(f) as u8 & 1), xs: a.xs & !f };
            out.add_term((left, right), sign);
        }
        out
    }

    fn counit_b(&self, a: EnBasis) -> Scalar {
        if a.xs == 0 {
            self.field.one()
        } else {
            self.field.zero()
        }
    }

    fn antipode_b(&self, a: EnBasis) -> EnElem {
        // Anti-multiplicative extension of S(c) = c, S(x_i) = c x_i:
        // S(c^i x_P) = S(x_{p_r}) ... S(x_{p_1}) c^i.
        let mut acc = self.one();
        for &p in mask::indices(a.xs).iter().rev() {
            let img = self.mul(&self.c(), &self.x(p));
            acc = self.mul(&acc, &img);
        }
        if a.c == 1 {
            acc = self.mul(&acc, &self.c());
        }
        acc
    }
}

/// The sign exponent S(F, P) from the coproduct formula, exposed with the
/// subset-check error the callers expect.
pub fn en_sign_s(f: u32, p: u32) -> Result<i64> {
    if f & !p != 0 {
        return Err(Error::Shape("F must be a subset of P".into()));
    }
    Ok(mask::position_sign_exp(f, p) as i64)
}

/// A linear functional on E(n), stored densely on the PBW basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct EnFunctional {
    pub n: usize,
    pub field: FieldSpec,
    pub coeffs: Vec<Scalar>,
}

impl EnFunctional {
    pub fn eval(&self, en: &En, a: &EnElem) -> Scalar {
        let mut acc = self.field.zero();
        for (b, c) in &a.terms {
            acc += &self.coeffs[en.index_of(*b)] * c;
        }
        acc
    }
}

/// A Hopf automorphism of E(n), applied by multiplicative extension of the
/// generator images.
#[derive(Debug, Clone)]
pub struct EnAutomorphism {
    algebra: En,
    t: Matrix,
    x_images: Vec<EnElem>,
}

impl EnAutomorphism {
    pub fn matrix(&self) -> &Matrix {
        &self.t
    }

    pub fn apply(&self, a: &EnElem) -> EnElem {
        let en = &self.algebra;
        let mut out = Elem::zero();
        for (b, coeff) in &a.terms {
            let mut img = if b.c == 1 { en.c() } else { en.one() };
            for p in mask::indices(b.xs) {
                img = en.mul(&img, &self.x_images[p as usize - 1]);
            }
            for (w, c) in img.terms {
                out.add_term(w, c * coeff.clone());
            }
        }
        out
    }

    pub fn apply_tensor(&self, t: &EnTensor) -> EnTensor {
        let en = &self.algebra;
        let mut out = Tensor2::zero();
        for ((u, v), c) in &t.terms {
            let iu = self.apply(&Elem::basis(*u, en.field().one()));
            let iv = self.apply(&Elem::basis(*v, en.field().one()));
            for (k, d) in Tensor2::pure(&iu, &iv).terms {
                out.add_term(k, &d * c);
            }
        }
        out
    }
}
