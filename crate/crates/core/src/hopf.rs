//! Generic sparse arithmetic for finite-dimensional Hopf algebras with an
//! enumerated basis.
//!
//! Both E(n) and its Drinfeld double implement [`HopfAlgebra`]; everything
//! that only needs products, coproducts, counits and antipodes (tensor-square
//! algebra, invertibility, axiom checks, dual algebras) is written once here.

use std::collections::BTreeMap;
use std::fmt::Debug;
use std::hash::Hash;

use crate::error::{Error, Result};
use crate::matrix::Matrix;
use crate::scalar::{FieldSpec, Scalar};

/// A sparse linear combination of basis elements. Zero coefficients are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Elem<B: Ord> {
    pub terms: BTreeMap<B, Scalar>,
}

/// A sparse element of the tensor square.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor2<B: Ord> {
    pub terms: BTreeMap<(B, B), Scalar>,
}

/// A sparse element of the triple tensor power.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Tensor3<B: Ord> {
    pub terms: BTreeMap<(B, B, B), Scalar>,
}

impl<B: Ord + Copy> Elem<B> {
    pub fn zero() -> Self {
        Elem { terms: BTreeMap::new() }
    }

    pub fn basis(b: B, one: Scalar) -> Self {
        let mut e = Elem::zero();
        e.add_term(b, one);
        e
    }

    pub fn add_term(&mut self, b: B, c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(b) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (b, c) in &other.terms {
            out.add_term(*b, -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Elem::zero();
        for (b, c) in &self.terms {
            out.add_term(*b, c * s);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, b: &B) -> Option<&Scalar> {
        self.terms.get(b)
    }
}

impl<B: Ord + Copy> Tensor2<B> {
    pub fn zero() -> Self {
        Tensor2 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, k: (B, B), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, c.clone());
        }
        out
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn scale(&self, s: &Scalar) -> Self {
        let mut out = Tensor2::zero();
        for (k, c) in &self.terms {
            out.add_term(*k, c * s);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Pure tensor a (x) b.
    pub fn pure(a: &Elem<B>, b: &Elem<B>) -> Self {
        let mut out = Tensor2::zero();
        for (u, cu) in &a.terms {
            for (v, cv) in &b.terms {
                out.add_term((*u, *v), cu * cv);
            }
        }
        out
    }

    /// Swaps the two legs.
    pub fn flip(&self) -> Self {
        let mut out = Tensor2::zero();
        for ((u, v), c) in &self.terms {
            out.add_term((*v, *u), c.clone());
        }
        out
    }
}

impl<B: Ord + Copy> Tensor3<B> {
    pub fn zero() -> Self {
        Tensor3 { terms: BTreeMap::new() }
    }

    pub fn add_term(&mut self, k: (B, B, B), c: Scalar) {
        if c.is_zero() {
            return;
        }
        match self.terms.entry(k) {
            std::collections::btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            std::collections::btree_map::Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (k, c) in &other.terms {
            out.add_term(*k, -c);
        }
        out
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }
}

/// A finite-dimensional Hopf algebra with an enumerated basis and sparse
/// structure maps. The unit need not be a basis vector.
pub trait HopfAlgebra {
    type B: Copy + Ord + Eq + Hash + Debug;

    fn field(&self) -> FieldSpec;
    fn dim(&self) -> usize;
    fn index_of(&self, b: Self::B) -> usize;
    fn basis_at(&self, idx: usize) -> Self::B;
    fn unit(&self) -> Elem<Self::B>;
    fn mul_bb(&self, a: Self::B, b: Self::B) -> Elem<Self::B>;
    fn comul_b(&self, a: Self::B) -> Tensor2<Self::B>;
    fn counit_b(&self, a: Self::B) -> Scalar;
    fn antipode_b(&self, a: Self::B) -> Elem<Self::B>;

    fn basis_iter(&self) -> Box<dyn Iterator<Item = Self::B> + '_> {
        Box::new((0..self.dim()).map(move |i| self.basis_at(i)))
    }
}

pub fn mul<H: HopfAlgebra>(h: &H, a: &Elem<H::B>, b: &Elem<H::B>) -> Elem<H::B> {
    let mut out = Elem::zero();
    for (u, cu) in &a.terms {
        for (v, cv) in &b.terms {
            let c = cu * cv;
            for (w, cw) in h.mul_bb(*u, *v).terms {
                out.add_term(w, &c * &cw);
            }
        }
    }
    out
}

pub fn comul<H: HopfAlgebra>(h: &H, a: &Elem<H::B>) -> Tensor2<H::B> {
    let mut out = Tensor2::zero();
    for (u, cu) in &a.terms {
        for (k, c) in h.comul_b(*u).terms {
            out.add_term(k, cu * &c);
        }
    }
    out
}

pub fn counit<H: HopfAlgebra>(h: &H, a: &Elem<H::B>) -> Scalar {
    let mut acc = h.field().zero();
    for (u, cu) in &a.terms {
        acc += cu * &h.counit_b(*u);
    }
    acc
}

pub fn antipode<H: HopfAlgebra>(h: &H, a: &Elem<H::B>) -> Elem<H::B> {
    let mut out = Elem::zero();
    for (u, cu) in &a.terms {
        for (w, cw) in h.antipode_b(*u).terms {
            out.add_term(w, cu * &cw);
        }
    }
    out
}

/// The antipode as a dim x dim matrix in the basis ordering of `index_of`.
pub fn antipode_matrix<H: HopfAlgebra>(h: &H) -> Matrix {
    let d = h.dim();
    let mut m = Matrix::zero(d, d, h.field());
    for j in 0..d {
        for (w, c) in h.antipode_b(h.basis_at(j)).terms {
            m.set(h.index_of(w), j, c);
        }
    }
    m
}

/// Applies a linear operator given in matrix form to an element.
pub fn apply_operator<H: HopfAlgebra>(h: &H, op: &Matrix, a: &Elem<H::B>) -> Elem<H::B> {
    let mut out = Elem::zero();
    for (u, cu) in &a.terms {
        let j = h.index_of(*u);
        for i in 0..h.dim() {
            let c = op.get(i, j);
            if !c.is_zero() {
                out.add_term(h.basis_at(i), c * cu);
            }
        }
    }
    out
}

/// Componentwise product in the tensor-square algebra.
pub fn mul2<H: HopfAlgebra>(h: &H, a: &Tensor2<H::B>, b: &Tensor2<H::B>) -> Tensor2<H::B> {
    let mut out = Tensor2::zero();
    for ((u1, u2), cu) in &a.terms {
        for ((v1, v2), cv) in &b.terms {
            let c = cu * cv;
            for (w1, c1) in h.mul_bb(*u1, *v1).terms {
                let c1 = &c * &c1;
                for (w2, c2) in h.mul_bb(*u2, *v2).terms {
                    out.add_term((w1, w2), &c1 * &c2);
                }
            }
        }
    }
    out
}

/// Componentwise product in the triple tensor power.
pub fn mul3<H: HopfAlgebra>(h: &H, a: &Tensor3<H::B>, b: &Tensor3<H::B>) -> Tensor3<H::B> {
    let mut out = Tensor3::zero();
    for ((u1, u2, u3), cu) in &a.terms {
        for ((v1, v2, v3), cv) in &b.terms {
            let c = cu * cv;
            for (w1, c1) in h.mul_bb(*u1, *v1).terms {
                let c1 = &c * &c1;
                for (w2, c2) in h.mul_bb(*u2, *v2).terms {
                    let c2 = &c1 * &c2;
                    for (w3, c3) in h.mul_bb(*u3, *v3).terms {
                        out.add_term((w1, w2, w3), &c2 * &c3);
                    }
                }
            }
        }
    }
    out
}

pub fn tensor_unit2<H: HopfAlgebra>(h: &H) -> Tensor2<H::B> {
    Tensor2::pure(&h.unit(), &h.unit())
}

/// (Delta (x) id) applied to a tensor-square element.
pub fn comul_left<H: HopfAlgebra>(h: &H, t: &Tensor2<H::B>) -> Tensor3<H::B> {
    let mut out = Tensor3::zero();
    for ((u, v), c) in &t.terms {
        for ((a, b), d) in h.comul_b(*u).terms {
            out.add_term((a, b, *v), c * &d);
        }
    }
    out
}

/// (id (x) Delta) applied to a tensor-square element.
pub fn comul_right<H: HopfAlgebra>(h: &H, t: &Tensor2<H::B>) -> Tensor3<H::B> {
    let mut out = Tensor3::zero();
    for ((u, v), c) in &t.terms {
        for ((a, b), d) in h.comul_b(*v).terms {
            out.add_term((*u, a, b), c * &d);
        }
    }
    out
}

/// Embeds r = sum a_i (x) b_i into legs (1,2), (1,3) or (2,3) of the triple
/// tensor power, filling the remaining leg with the unit.
pub fn embed3<H: HopfAlgebra>(h: &H, t: &Tensor2<H::B>, legs: (usize, usize)) -> Tensor3<H::B> {
    let unit = h.unit();
    let mut out = Tensor3::zero();
    for ((a, b), c) in &t.terms {
        for (u, cu) in &unit.terms {
            let coeff = c * cu;
            let key = match legs {
                (0, 1) => (*a, *b, *u),
                (0, 2) => (*a, *u, *b),
                (1, 2) => (*u, *a, *b),
                _ => panic!("bad legs"),
            };
            out.add_term(key, coeff);
        }
    }
    out
}

/// Left-multiplication operator by `t` on the tensor-square algebra, as a
/// dim^2 x dim^2 matrix.
fn left_mul_operator<H: HopfAlgebra>(h: &H, t: &Tensor2<H::B>) -> Matrix {
    let d = h.dim();
    let mut m = Matrix::zero(d * d, d * d, h.field());
    for j1 in 0..d {
        for j2 in 0..d {
            let col = j1 * d + j2;
            let target = Tensor2::pure(
                &Elem::basis(h.basis_at(j1), h.field().one()),
                &Elem::basis(h.basis_at(j2), h.field().one()),
            );
            for ((w1, w2), c) in mul2(h, t, &target).terms {
                let row = h.index_of(w1) * d + h.index_of(w2);
                let v = m.get(row, col) + &c;
                m.set(row, col, v);
            }
        }
    }
    m
}

/// Inverse of `t` in the tensor-square algebra, if it exists, via an exact
/// linear solve in the regular representation.
pub fn invert_in_tensor_square<H: HopfAlgebra>(h: &H, t: &Tensor2<H::B>) -> Result<Tensor2<H::B>> {
    let d = h.dim();
    let op = left_mul_operator(h, t);
    let mut rhs = vec![h.field().zero(); d * d];
    for ((u, v), c) in tensor_unit2(h).terms {
        rhs[h.index_of(u) * d + h.index_of(v)] = c;
    }
    let x = op.solve(&rhs).ok_or(Error::NotInvertible)?;
    let mut inv = Tensor2::zero();
    for (i, c) in x.into_iter().enumerate() {
        if !c.is_zero() {
            inv.add_term((h.basis_at(i / d), h.basis_at(i % d)), c);
        }
    }
    // A right inverse in a finite-dimensional algebra is two-sided; check anyway.
    if mul2(h, &inv, t) != tensor_unit2(h) {
        return Err(Error::Inconsistent("one-sided tensor inverse".into()));
    }
    Ok(inv)
}

/// The dual Hopf algebra of `H`, with basis the dual basis (indexed by the
/// indices of `H`'s basis). Structure constants are obtained by transposing
/// those of `H`: multiplication is convolution, comultiplication dualizes
/// multiplication.
pub struct DualHopf<'a, H: HopfAlgebra> {
    pub inner: &'a H,
    /// When true, the comultiplication is the opposite one (the "cop" dual).
    pub cop: bool,
}

impl<'a, H: HopfAlgebra> HopfAlgebra for DualHopf<'a, H> {
    type B = usize;

    fn field(&self) -> FieldSpec {
        self.inner.field()
    }

    fn dim(&self) -> usize {
        self.inner.dim()
    }

    fn index_of(&self, b: usize) -> usize {
        b
    }

    fn basis_at(&self, idx: usize) -> usize {
        idx
    }

    fn unit(&self) -> Elem<usize> {
        // The unit of H* is the counit of H.
        let mut e = Elem::zero();
        for i in 0..self.dim() {
            e.add_term(i, self.inner.counit_b(self.inner.basis_at(i)));
        }
        e
    }

    fn mul_bb(&self, a: usize, b: usize) -> Elem<usize> {
        let ba = self.inner.basis_at(a);
        let bb = self.inner.basis_at(b);
        let mut out = Elem::zero();
        for w in 0..self.dim() {
            let t = self.inner.comul_b(self.inner.basis_at(w));
            if let Some(c) = t.terms.get(&(ba, bb)) {
                out.add_term(w, c.clone());
            }
        }
        out
    }

    fn comul_b(&self, a: usize) -> Tensor2<usize> {
        let ba = self.inner.basis_at(a);
        let mut out = Tensor2::zero();
        for v in 0..self.dim() {
            for w in 0..self.dim() {
                let prod = self.inner.mul_bb(self.inner.basis_at(v), self.inner.basis_at(w));
                if let Some(c) = prod.coeff(&ba) {
                    let key = if self.cop { (w, v) } else { (v, w) };
                    out.add_term(key, c.clone());
                }
            }
        }
        out
    }

    fn counit_b(&self, a: usize) -> Scalar {
        // epsilon_{H*}(f) = f(1_H).
        let unit = self.inner.unit();
        unit.coeff(&self.inner.basis_at(a)).cloned().unwrap_or_else(|| self.field().zero())
    }

    fn antipode_b(&self, a: usize) -> Elem<usize> {
        // S_{H*} is the transpose of S_H; the cop dual carries its inverse.
        let s = antipode_matrix(self.inner);
        let s = if self.cop { s.inverse().expect("antipode is invertible") } else { s };
        let mut out = Elem::zero();
        for w in 0..self.dim() {
            let c = s.get(a, w);
            if !c.is_zero() {
                out.add_term(w, c.clone());
            }
        }
        out
    }
}

/// Axiom batteries shared by the test suites.
pub mod axioms {
    use super::*;

    pub fn associative_on<H: HopfAlgebra>(h: &H, a: &Elem<H::B>, b: &Elem<H::B>, c: &Elem<H::B>) -> bool {
        mul(h, &mul(h, a, b), c) == mul(h, a, &mul(h, b, c))
    }

    pub fn coassociative_on<H: HopfAlgebra>(h: &H, a: H::B) -> bool {
        let t = h.comul_b(a);
        comul_left(h, &t) == comul_right(h, &t)
    }

    pub fn counit_axiom_on<H: HopfAlgebra>(h: &H, a: H::B) -> bool {
        let t = h.comul_b(a);
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for ((u, v), c) in &t.terms {
            left.add_term(*v, c * &h.counit_b(*u));
            right.add_term(*u, c * &h.counit_b(*v));
        }
        let e = Elem::basis(a, h.field().one());
        left == e && right == e
    }

    /// m(S (x) id)Delta = eta . epsilon = m(id (x) S)Delta.
    pub fn antipode_axiom_on<H: HopfAlgebra>(h: &H, a: H::B) -> bool {
        let t = h.comul_b(a);
        let mut left = Elem::zero();
        let mut right = Elem::zero();
        for ((u, v), c) in &t.terms {
            let su = h.antipode_b(*u);
            let ev = Elem::basis(*v, h.field().one());
            for (w, cw) in mul(h, &su, &ev).terms {
                left.add_term(w, c * &cw);
            }
            let sv = h.antipode_b(*v);
            let eu = Elem::basis(*u, h.field().one());
            for (w, cw) in mul(h, &eu, &sv).terms {
                right.add_term(w, c * &cw);
            }
        }
        let expect = h.unit().scale(&h.counit_b(a));
        left == expect && right == expect
    }

    /// Delta(ab) = Delta(a)Delta(b) on a pair of basis elements.
    pub fn comul_multiplicative_on<H: HopfAlgebra>(h: &H, a: H::B, b: H::B) -> bool {
        let lhs = {
            let mut t = Tensor2::zero();
            for (w, c) in h.mul_bb(a, b).terms {
                for (k, d) in h.comul_b(w).terms {
                    t.add_term(k, &c * &d);
                }
            }
            t
        };
        let rhs = mul2(h, &h.comul_b(a), &h.comul_b(b));
        lhs == rhs
    }
}
