//! Quasi-triangular structures: the family R_A on E(n), the canonical
//! R-matrix of the double, axiom checking, and the triangularity criterion.

use crate::double::{Dbl, DoubleBasis};
use crate::en::{En, EnBasis, EnTensor};
use crate::error::Result;
use crate::hopf::{self, HopfAlgebra, Tensor2};
use crate::mask;
use crate::matrix::Matrix;
use crate::scalar::FieldSpec;

/// An R-matrix candidate, living on E(n) or on D(E(n)).
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RMatrix {
    En { n: usize, field: FieldSpec, tensor: EnTensor },
    Double { n: usize, field: FieldSpec, tensor: Tensor2<DoubleBasis> },
}

impl RMatrix {
    pub fn field(&self) -> FieldSpec {
        match self {
            RMatrix::En { field, .. } | RMatrix::Double { field, .. } => *field,
        }
    }

    pub fn en_tensor(&self) -> Option<&EnTensor> {
        match self {
            RMatrix::En { tensor, .. } => Some(tensor),
            _ => None,
        }
    }
}

/// Outcome of the three quasi-triangularity axioms.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct QtReport {
    /// Delta^op(g) R = R Delta(g) on every algebra generator.
    pub intertwines: bool,
    /// (Delta (x) id)(R) = R13 R23.
    pub hexagon_left: bool,
    /// (id (x) Delta)(R) = R13 R12.
    pub hexagon_right: bool,
}

impl QtReport {
    pub fn all_pass(&self) -> bool {
        self.intertwines && self.hexagon_left && self.hexagon_right
    }
}

fn all_subsets_of_size(n: usize, k: usize) -> Vec<u32> {
    (0u32..1 << n).filter(|m| m.count_ones() as usize == k).collect()
}

/// The quasi-triangular structure R_A attached to an n x n matrix A:
///
///   R_A = 1/2 sum_{i=0}^{n} (-1)^(i(i-1)/2) sum_{|P|=|F|=i} [A]_{F,P}
///         (x_P (x) x_F + x_P (x) c x_F + (-1)^i c x_P (x) x_F
///          + (-1)^(i+1) c x_P (x) c x_F),
///
/// with the empty minor equal to 1. The minor pairs the column set with the
/// left tensor leg and the row set with the right leg, which is the
/// orientation under which the pushforward identity (f (x) f)(R) = R_{AB^t}
/// holds on the nose.
pub fn build_ra(en: &En, a: &Matrix) -> EnTensor {
    let n = en.n();
    let field = en.field();
    assert_eq!((a.rows(), a.cols()), (n, n), "R-matrix parameter must be n x n");
    assert_eq!(a.field(), field, "field mismatch");
    let half = field.from_ratio(1, 2);
    let mut out = Tensor2::zero();
    for i in 0..=n {
        let outer_sign = field.sign((i * i.saturating_sub(1) / 2) as u32);
        for &p in &all_subsets_of_size(n, i) {
            for &f in &all_subsets_of_size(n, i) {
                let rows: Vec<usize> = mask::indices(f).iter().map(|k| *k as usize - 1).collect();
                let cols: Vec<usize> = mask::indices(p).iter().map(|k| *k as usize - 1).collect();
                let minor = a.minor(&rows, &cols);
                if minor.is_zero() {
                    continue;
                }
                let coeff = &(&half * &outer_sign) * &minor;
                let sign_i = field.sign(i as u32);
                out.add_term((EnBasis { c: 0, xs: p }, EnBasis { c: 0, xs: f }), coeff.clone());
                out.add_term((EnBasis { c: 0, xs: p }, EnBasis { c: 1, xs: f }), coeff.clone());
                out.add_term(
                    (EnBasis { c: 1, xs: p }, EnBasis { c: 0, xs: f }),
                    &coeff * &sign_i,
                );
                out.add_term(
                    (EnBasis { c: 1, xs: p }, EnBasis { c: 1, xs: f }),
                    -(&coeff * &sign_i),
                );
            }
        }
    }
    out
}

/// The other display of the same family: the i = 0 block written out
/// explicitly and the remaining terms grouped with c-powers on the right leg.
/// Used as a cross-check oracle against [`build_ra`].
pub fn build_ra_first_display(en: &En, a: &Matrix) -> EnTensor {
    let n = en.n();
    let field = en.field();
    let half = field.from_ratio(1, 2);
    let mut out = Tensor2::zero();
    let one = EnBasis::one();
    let c = EnBasis::grouplike();
    out.add_term((one, one), half.clone());
    out.add_term((one, c), half.clone());
    out.add_term((c, one), half.clone());
    out.add_term((c, c), -half.clone());
    for i in 1..=n {
        let outer_sign = field.sign((i * (i - 1) / 2) as u32);
        for &p in &all_subsets_of_size(n, i) {
            for &f in &all_subsets_of_size(n, i) {
                let rows: Vec<usize> = mask::indices(f).iter().map(|k| *k as usize - 1).collect();
                let cols: Vec<usize> = mask::indices(p).iter().map(|k| *k as usize - 1).collect();
                let minor = a.minor(&rows, &cols);
                if minor.is_zero() {
                    continue;
                }
                let coeff = &(&half * &outer_sign) * &minor;
                let ci = (i % 2) as u8;
                out.add_term((EnBasis { c: 0, xs: p }, EnBasis { c: ci, xs: f }), coeff.clone());
                out.add_term((EnBasis { c: 1, xs: p }, EnBasis { c: ci, xs: f }), coeff.clone());
                out.add_term(
                    (EnBasis { c: 0, xs: p }, EnBasis { c: ci ^ 1, xs: f }),
                    coeff.clone(),
                );
                out.add_term(
                    (EnBasis { c: 1, xs: p }, EnBasis { c: ci ^ 1, xs: f }),
                    -coeff.clone(),
                );
            }
        }
    }
    out
}

pub fn rmatrix_from_a(en: &En, a: &Matrix) -> RMatrix {
    RMatrix::En { n: en.n(), field: en.field(), tensor: build_ra(en, a) }
}

pub fn rmatrix_canonical(dbl: &Dbl) -> RMatrix {
    RMatrix::Double {
        n: dbl.n(),
        field: dbl.field(),
        tensor: crate::double::canonical_r(dbl),
    }
}

fn qt_check_generic<H: HopfAlgebra>(
    h: &H,
    r: &Tensor2<H::B>,
    generators: &[hopf::Elem<H::B>],
) -> Result<QtReport> {
    // Invertibility is a precondition; a non-invertible candidate is an error.
    hopf::invert_in_tensor_square(h, r)?;

    let mut intertwines = true;
    for g in generators {
        let d = hopf::comul(h, g);
        let dop = d.flip();
        if hopf::mul2(h, &dop, r) != hopf::mul2(h, r, &d) {
            intertwines = false;
            break;
        }
    }

    let r13 = hopf::embed3(h, r, (0, 2));
    let r23 = hopf::embed3(h, r, (1, 2));
    let r12 = hopf::embed3(h, r, (0, 1));
    let hexagon_left = hopf::comul_left(h, r) == hopf::mul3(h, &r13, &r23);
    let hexagon_right = hopf::comul_right(h, r) == hopf::mul3(h, &r13, &r12);

    Ok(QtReport { intertwines, hexagon_left, hexagon_right })
}

/// Checks the quasi-triangularity axioms. Errors when R is not invertible in
/// the tensor-square algebra.
pub fn qt_check(r: &RMatrix) -> Result<QtReport> {
    match r {
        RMatrix::En { n, field, tensor } => {
            let en = En::new(*n, *field)?;
            qt_check_generic(&en, tensor, &en.generators())
        }
        RMatrix::Double { n, field, tensor } => {
            let dbl = Dbl::new(*n, *field)?;
            qt_check_generic(&dbl, tensor, &dbl.generators())
        }
    }
}

/// Triangularity: flip(R) . R = 1 (x) 1.
pub fn is_triangular(r: &RMatrix) -> bool {
    match r {
        RMatrix::En { n, field, tensor } => {
            let en = En::new(*n, *field).expect("valid rank");
            hopf::mul2(&en, &tensor.flip(), tensor) == hopf::tensor_unit2(&en)
        }
        RMatrix::Double { n, field, tensor } => {
            let dbl = Dbl::new(*n, *field).expect("valid rank");
            hopf::mul2(&dbl, &tensor.flip(), tensor) == hopf::tensor_unit2(&dbl)
        }
    }
}
