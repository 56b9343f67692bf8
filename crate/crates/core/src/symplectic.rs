//! The symplectic space (k^2n, omega), the groups Sp and PSp, Lagrangian
//! subspaces with canonical RREF representatives, enumeration over small
//! prime fields, and decomposition of symplectic matrices into the three
//! generator families Diag(A), Lower(B), Upper(B).

use std::collections::BTreeSet;

use crate::error::{Error, Result};
use crate::matrix::{row_space_canonical, Matrix};
use crate::scalar::{FieldSpec, Scalar};

/// omega(a, b) = sum_i (a_i b_{n+i} - a_{n+i} b_i) on vectors of length 2n.
pub fn omega(a: &[Scalar], b: &[Scalar]) -> Scalar {
    assert_eq!(a.len(), b.len(), "vectors must have equal length");
    assert_eq!(a.len() % 2, 0, "vectors must have even length");
    let n = a.len() / 2;
    let field = a[0].field();
    let mut acc = field.zero();
    for i in 0..n {
        acc += &(&a[i] * &b[n + i]) - &(&a[n + i] * &b[i]);
    }
    acc
}

/// The Gram matrix of omega: [[0, I], [-I, 0]].
pub fn gram(n: usize, field: FieldSpec) -> Matrix {
    let id = Matrix::identity(n, field);
    let zero = Matrix::zero(n, n, field);
    Matrix::block2x2(&zero, &id, &id.neg(), &zero)
}

/// Membership in Sp_2n: M^t Omega M = Omega.
pub fn is_symplectic(m: &Matrix) -> bool {
    if m.rows() != m.cols() || m.rows() % 2 != 0 {
        return false;
    }
    let g = gram(m.rows() / 2, m.field());
    m.transpose().mul(&g).mul(m) == g
}

/// An element of PSp_2n: a symplectic matrix up to sign.
#[derive(Debug, Clone)]
pub struct PSpElement {
    pub mat: Matrix,
}

impl PSpElement {
    pub fn new(mat: Matrix) -> Result<Self> {
        if !is_symplectic(&mat) {
            return Err(Error::NotSymplectic);
        }
        Ok(PSpElement { mat })
    }
}

/// Equality in PSp: M1 = +-M2.
pub fn psp_equal(m1: &Matrix, m2: &Matrix) -> bool {
    m1 == m2 || *m1 == m2.neg()
}

/// A Lagrangian subspace, stored as the canonical RREF of a spanning matrix.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct LagSubspace {
    rref: Matrix,
}

impl LagSubspace {
    /// Canonicalizes the row span; rejects spans that are not Lagrangian.
    pub fn new(rows: &Matrix) -> Result<Self> {
        if !is_lagrangian(rows) {
            return Err(Error::NotLagrangian);
        }
        Ok(LagSubspace { rref: row_space_canonical(rows) })
    }

    pub fn rref(&self) -> &Matrix {
        &self.rref
    }

    pub fn n(&self) -> usize {
        self.rref.cols() / 2
    }

    /// The image subspace under a symplectic transformation: rows map by
    /// r -> r M^t, i.e. columns of M act on coordinate vectors.
    pub fn transform(&self, m: &Matrix) -> Result<LagSubspace> {
        LagSubspace::new(&self.rref.mul(&m.transpose()))
    }
}

/// The two isotropy tests for an n x 2n matrix of row vectors: all pairwise
/// omega values vanish, and, writing rows = (A | B), AB^t is symmetric. They
/// are equivalent and both are exposed so the agreement itself can be
/// verified.
pub fn lagrangian_tests(rows: &Matrix) -> (bool, bool) {
    let n = rows.rows();
    assert_eq!(rows.cols(), 2 * n, "expected an n x 2n matrix");
    let pairwise = (0..n).all(|i| {
        (0..n).all(|j| omega(&rows.row(i), &rows.row(j)).is_zero())
    });
    let all_rows: Vec<usize> = (0..n).collect();
    let a_cols: Vec<usize> = (0..n).collect();
    let b_cols: Vec<usize> = (n..2 * n).collect();
    let a = rows.submatrix(&all_rows, &a_cols);
    let b = rows.submatrix(&all_rows, &b_cols);
    let ab = a.mul(&b.transpose());
    (pairwise, ab == ab.transpose())
}

/// Lagrangian test: full rank n and isotropic rows. Both isotropy tests are
/// run and must agree.
pub fn is_lagrangian(rows: &Matrix) -> bool {
    if rows.cols() != 2 * rows.rows() {
        return false;
    }
    if rows.rank() != rows.rows() {
        return false;
    }
    let (pairwise, sym) = lagrangian_tests(rows);
    assert_eq!(pairwise, sym, "the two Lagrangian tests must agree");
    pairwise && sym
}

/// All Lagrangian subspaces of (GF(q)^2n, omega), enumerated over RREF cells
/// (pivot-column choices with free entries) and filtered by isotropy.
/// Desk-scale guard: n <= 2 and q <= 7.
pub fn enumerate_lagrangians(n: usize, q: u64) -> Result<Vec<LagSubspace>> {
    if n > 2 || q > 7 {
        return Err(Error::Unsupported(format!(
            "Lagrangian enumeration is capped at n <= 2, q <= 7 (got n = {n}, q = {q})"
        )));
    }
    let field = FieldSpec::prime_field(q)?;
    let cols = 2 * n;
    let mut out = BTreeSet::new();
    // choose pivot columns
    let mut pivot_sets: Vec<Vec<usize>> = Vec::new();
    for mask in 0u32..1 << cols {
        if mask.count_ones() as usize == n {
            pivot_sets.push((0..cols).filter(|i| mask >> i & 1 == 1).collect());
        }
    }
    for pivots in &pivot_sets {
        // free positions: to the right of each pivot, excluding pivot columns
        let mut free: Vec<(usize, usize)> = Vec::new();
        for (r, &p) in pivots.iter().enumerate() {
            for c in p + 1..cols {
                if !pivots.contains(&c) {
                    free.push((r, c));
                }
            }
        }
        let total = (q as usize).pow(free.len() as u32);
        for assignment in 0..total {
            let mut m = Matrix::zero(n, cols, field);
            for (r, &p) in pivots.iter().enumerate() {
                m.set(r, p, field.one());
            }
            let mut a = assignment;
            for &(r, c) in &free {
                m.set(r, c, field.from_i64((a % q as usize) as i64));
                a /= q as usize;
            }
            if is_lagrangian(&m) {
                out.insert(LagSubspace { rref: row_space_canonical(&m) });
            }
        }
    }
    Ok(out.into_iter().collect())
}

/// One generator token of the symplectic group.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SpToken {
    /// diag(A, (A^t)^{-1}) for invertible A.
    Diag(Matrix),
    /// [[I, 0], [B, I]] for symmetric B.
    Lower(Matrix),
    /// [[I, B], [0, I]] for symmetric B.
    Upper(Matrix),
}

impl SpToken {
    pub fn to_matrix(&self) -> Matrix {
        match self {
            SpToken::Diag(a) => {
                let n = a.rows();
                let field = a.field();
                let inv_t = a.transpose().inverse().expect("Diag token needs invertible A");
                Matrix::block2x2(
                    a,
                    &Matrix::zero(n, n, field),
                    &Matrix::zero(n, n, field),
                    &inv_t,
                )
            }
            SpToken::Lower(b) => {
                let n = b.rows();
                let field = b.field();
                Matrix::block2x2(
                    &Matrix::identity(n, field),
                    &Matrix::zero(n, n, field),
                    b,
                    &Matrix::identity(n, field),
                )
            }
            SpToken::Upper(b) => {
                let n = b.rows();
                let field = b.field();
                Matrix::block2x2(
                    &Matrix::identity(n, field),
                    b,
                    &Matrix::zero(n, n, field),
                    &Matrix::identity(n, field),
                )
            }
        }
    }

    fn is_trivial(&self) -> bool {
        match self {
            SpToken::Diag(a) => *a == Matrix::identity(a.rows(), a.field()),
            SpToken::Lower(b) | SpToken::Upper(b) => b.is_zero(),
        }
    }
}

pub fn word_to_matrix(n: usize, field: FieldSpec, word: &[SpToken]) -> Matrix {
    let mut m = Matrix::identity(2 * n, field);
    for t in word {
        m = m.mul(&t.to_matrix());
    }
    m
}

fn blocks(m: &Matrix) -> (Matrix, Matrix, Matrix, Matrix) {
    let n = m.rows() / 2;
    let lo: Vec<usize> = (0..n).collect();
    let hi: Vec<usize> = (n..2 * n).collect();
    (
        m.submatrix(&lo, &lo),
        m.submatrix(&lo, &hi),
        m.submatrix(&hi, &lo),
        m.submatrix(&hi, &hi),
    )
}

/// XYZ factorization M = Diag(A) Lower(B) Upper(C) for symplectic M with
/// invertible top-left block; trivial tokens are omitted.
fn xyz(m: &Matrix) -> Result<Vec<SpToken>> {
    let (p, q, r, _s) = blocks(m);
    let a = p.clone();
    let c = p.inverse().map_err(|_| Error::Inconsistent("xyz needs invertible block".into()))?.mul(&q);
    let b = a.transpose().mul(&r);
    if !b.is_symmetric() || !c.is_symmetric() {
        return Err(Error::Inconsistent("factor blocks not symmetric".into()));
    }
    let word: Vec<SpToken> = [SpToken::Diag(a), SpToken::Lower(b), SpToken::Upper(c)]
        .into_iter()
        .filter(|t| !t.is_trivial())
        .collect();
    Ok(word)
}

/// Decomposes a symplectic matrix into generator tokens whose product is the
/// input, exactly. When the top-left n x n block is invertible the result is
/// the unique [Diag, Lower, Upper] word (trivial tokens omitted); otherwise
/// the matrix is first corrected by a left Upper(B) factor chosen so that the
/// block becomes invertible, giving a word of length at most 4.
pub fn sp_decompose(m: &Matrix) -> Result<Vec<SpToken>> {
    if !is_symplectic(m) {
        return Err(Error::NotSymplectic);
    }
    let n = m.rows() / 2;
    let field = m.field();
    let (p, _q, r, _s) = blocks(m);
    if !p.det().is_zero() {
        let word = xyz(m)?;
        debug_assert_eq!(word_to_matrix(n, field, &word), *m);
        return Ok(word);
    }
    // Search a symmetric B with P + BR invertible; -I first (so that the
    // classical [[0, I], [-I, 0]] comes out as Upper(I) Lower(-I) Upper(I)),
    // then I, then 0/1 diagonals of both signs, then scalar matrices.
    let mut candidates: Vec<Matrix> = Vec::new();
    candidates.push(Matrix::identity(n, field).neg());
    candidates.push(Matrix::identity(n, field));
    for mask in 1u32..1 << n {
        for sgn in [1i64, -1] {
            let mut d = Matrix::zero(n, n, field);
            for i in 0..n {
                if mask >> i & 1 == 1 {
                    d.set(i, i, field.from_i64(sgn));
                }
            }
            candidates.push(d);
        }
    }
    let scalar_range: Vec<i64> = match field {
        FieldSpec::Rational => (2..=9).collect(),
        FieldSpec::PrimeField(pm) => (2..pm as i64).collect(),
    };
    for t in scalar_range {
        candidates.push(Matrix::identity(n, field).scale(&field.from_i64(t)));
    }
    for b in candidates {
        if !p.add(&b.mul(&r)).det().is_zero() {
            let corrected = SpToken::Upper(b.clone()).to_matrix().mul(m);
            let mut word = vec![SpToken::Upper(b.neg())];
            word.extend(xyz(&corrected)?);
            debug_assert_eq!(word_to_matrix(n, field, &word), *m);
            return Ok(word);
        }
    }
    Err(Error::Inconsistent("no Upper correction restored invertibility".into()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use rand::{Rng, SeedableRng};
    use rand_chacha::ChaCha8Rng;

    const Q: FieldSpec = FieldSpec::Rational;

    fn vecq(vals: &[i64]) -> Vec<Scalar> {
        vals.iter().map(|v| Q.from_i64(*v)).collect()
    }

    #[test]
    fn omega_examples() {
        assert_eq!(omega(&vecq(&[1, 0]), &vecq(&[0, 1])), Q.one());
        let mut rng = ChaCha8Rng::seed_from_u64(1);
        for _ in 0..20 {
            let a: Vec<Scalar> = (0..4).map(|_| Q.from_i64(rng.gen_range(-5..=5))).collect();
            let b: Vec<Scalar> = (0..4).map(|_| Q.from_i64(rng.gen_range(-5..=5))).collect();
            assert!(omega(&a, &a).is_zero());
            assert_eq!(omega(&a, &b), -omega(&b, &a));
        }
    }

    #[test]
    fn symplectic_membership_matches_pairwise_definition() {
        let mut rng = ChaCha8Rng::seed_from_u64(2);
        let n = 2;
        for _ in 0..100 {
            let m = Matrix::from_fn(2 * n, 2 * n, Q, |_, _| Q.from_i64(rng.gen_range(-2..=2)));
            let gram_test = is_symplectic(&m);
            let basis: Vec<Vec<Scalar>> = (0..2 * n)
                .map(|j| {
                    (0..2 * n)
                        .map(|i| m.get(i, j).clone())
                        .collect()
                })
                .collect();
            let e = |k: usize| {
                let mut v = vec![Q.zero(); 2 * n];
                v[k] = Q.one();
                v
            };
            let pairwise = (0..2 * n).all(|i| {
                (0..2 * n).all(|j| omega(&basis[i], &basis[j]) == omega(&e(i), &e(j)))
            });
            assert_eq!(gram_test, pairwise);
        }
    }

    #[test]
    fn lagrangian_examples() {
        // (I | 0) is Lagrangian
        let rows = Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[0, 1, 0, 0]]);
        assert!(is_lagrangian(&rows));
        // every line in the plane is isotropic
        assert!(is_lagrangian(&Matrix::from_i64(Q, &[&[1, 1]])));
        // (I | B) with non-symmetric B is not
        let rows = Matrix::from_i64(Q, &[&[1, 0, 0, 1], &[0, 1, 0, 0]]);
        assert!(!is_lagrangian(&rows));
        // rank-deficient spans are rejected
        assert!(!is_lagrangian(&Matrix::from_i64(Q, &[&[1, 0, 0, 0], &[1, 0, 0, 0]])));
    }

    #[test]
    fn lagrangian_counts_and_brute_force_oracle() {
        // independent oracle: spans of all linearly independent tuples
        let brute = |n: usize, q: u64| -> BTreeSet<Matrix> {
            let field = FieldSpec::prime_field(q).unwrap();
            let cols = 2 * n;
            let total = (q as usize).pow(cols as u32);
            let dec = |mut v: usize| -> Vec<Scalar> {
                (0..cols)
                    .map(|_| {
                        let s = field.from_i64((v % q as usize) as i64);
                        v /= q as usize;
                        s
                    })
                    .collect()
            };
            let mut set = BTreeSet::new();
            if n == 1 {
                for i in 1..total {
                    let m = Matrix::from_rows(field, &[dec(i)]);
                    if m.rank() == 1 && is_lagrangian(&m) {
                        set.insert(row_space_canonical(&m));
                    }
                }
            } else {
                for i in 1..total {
                    for j in 1..total {
                        let m = Matrix::from_rows(field, &[dec(i), dec(j)]);
                        if m.rank() == 2 && is_lagrangian(&m) {
                            set.insert(row_space_canonical(&m));
                        }
                    }
                }
            }
            set
        };

        for (n, q, expect) in [(1usize, 3u64, 4usize), (2, 3, 40), (1, 5, 6)] {
            let fast = enumerate_lagrangians(n, q).unwrap();
            assert_eq!(fast.len(), expect);
            let slow = brute(n, q);
            assert_eq!(slow.len(), expect);
            let fast_set: BTreeSet<Matrix> =
                fast.iter().map(|l| l.rref().clone()).collect();
            assert_eq!(fast_set, slow);
            // product formula, verified not assumed
            let product: usize = (1..=n).map(|i| (q.pow(i as u32) + 1) as usize).product();
            assert_eq!(fast.len(), product);
        }

        assert!(enumerate_lagrangians(3, 3).is_err());
        assert!(enumerate_lagrangians(2, 11).is_err());
    }

    #[test]
    fn psp_equality() {
        let m = Matrix::from_i64(Q, &[&[1, 1], &[0, 1]]);
        assert!(psp_equal(&m, &m));
        assert!(psp_equal(&m, &m.neg()));
        let other = m.mul(&SpToken::Lower(Matrix::from_i64(Q, &[&[1]])).to_matrix());
        assert!(!psp_equal(&m, &other));
    }

    #[test]
    fn decompose_identity_and_rotation() {
        assert!(sp_decompose(&Matrix::identity(4, Q)).unwrap().is_empty());

        // [[0, 1], [-1, 0]] = Upper(1) Lower(-1) Upper(1)
        let rot = Matrix::from_i64(Q, &[&[0, 1], &[-1, 0]]);
        let word = sp_decompose(&rot).unwrap();
        assert_eq!(
            word,
            vec![
                SpToken::Upper(Matrix::from_i64(Q, &[&[1]])),
                SpToken::Lower(Matrix::from_i64(Q, &[&[-1]])),
                SpToken::Upper(Matrix::from_i64(Q, &[&[1]])),
            ]
        );
        assert_eq!(word_to_matrix(1, Q, &word), rot);

        assert!(sp_decompose(&Matrix::from_i64(Q, &[&[1, 1], &[1, 1]])).is_err());
    }

    pub fn random_word(rng: &mut ChaCha8Rng, n: usize, field: FieldSpec, len: usize) -> Vec<SpToken> {
        let mut word = Vec::new();
        for _ in 0..len {
            let entry = |rng: &mut ChaCha8Rng| match field {
                FieldSpec::Rational => field.from_i64(rng.gen_range(-3..=3)),
                FieldSpec::PrimeField(p) => field.from_i64(rng.gen_range(0..p as i64)),
            };
            match rng.gen_range(0..3) {
                0 => {
                    let a = loop {
                        let cand = Matrix::from_fn(n, n, field, |_, _| entry(rng));
                        if !cand.det().is_zero() {
                            break cand;
                        }
                    };
                    word.push(SpToken::Diag(a));
                }
                1 | 2 => {
                    let mut b = Matrix::zero(n, n, field);
                    for i in 0..n {
                        for j in i..n {
                            let v = entry(rng);
                            b.set(i, j, v.clone());
                            b.set(j, i, v);
                        }
                    }
                    if rng.gen_bool(0.5) {
                        word.push(SpToken::Lower(b));
                    } else {
                        word.push(SpToken::Upper(b));
                    }
                }
                _ => unreachable!(),
            }
        }
        word
    }

    #[test]
    fn decompose_roundtrip_on_random_words() {
        let f7 = FieldSpec::prime_field(7).unwrap();
        let mut rng = ChaCha8Rng::seed_from_u64(3);
        for _ in 0..100 {
            let len = rng.gen_range(1..=5);
            let word = random_word(&mut rng, 2, f7, len);
            let m = word_to_matrix(2, f7, &word);
            let decomposed = sp_decompose(&m).unwrap();
            assert_eq!(word_to_matrix(2, f7, &decomposed), m);
            assert!(decomposed.len() <= 4);
            let (p, _, _, _) = blocks(&m);
            if !p.det().is_zero() {
                assert!(decomposed.len() <= 3);
            }
        }
    }

    /// Pads omitted trivial tokens back into [Diag, Lower, Upper] order.
    fn pad_xyz(got: Vec<SpToken>, n: usize, field: FieldSpec) -> Vec<SpToken> {
        let mut diag = SpToken::Diag(Matrix::identity(n, field));
        let mut lower = SpToken::Lower(Matrix::zero(n, n, field));
        let mut upper = SpToken::Upper(Matrix::zero(n, n, field));
        for t in got {
            match t {
                SpToken::Diag(_) => diag = t,
                SpToken::Lower(_) => lower = t,
                SpToken::Upper(_) => upper = t,
            }
        }
        vec![diag, lower, upper]
    }

    #[test]
    fn xyz_unique_over_gf3_when_block_invertible() {
        // enumerate all Diag/Lower/Upper triples over GF(3), n = 1; their
        // products are pairwise distinct, cover exactly the symplectic
        // matrices with invertible top-left entry, and sp_decompose recovers
        // each triple on the nose.
        let f3 = FieldSpec::prime_field(3).unwrap();
        let mut products = BTreeSet::new();
        let mut count = 0;
        for a in [1i64, 2] {
            for b in 0i64..3 {
                for c in 0i64..3 {
                    let word = vec![
                        SpToken::Diag(Matrix::from_i64(f3, &[&[a]])),
                        SpToken::Lower(Matrix::from_i64(f3, &[&[b]])),
                        SpToken::Upper(Matrix::from_i64(f3, &[&[c]])),
                    ];
                    let m = word_to_matrix(1, f3, &word);
                    assert!(products.insert(m.clone()), "duplicate product");
                    count += 1;
                    let got = pad_xyz(sp_decompose(&m).unwrap(), 1, f3);
                    assert_eq!(got, word);
                }
            }
        }
        assert_eq!(count, 18);
        // every symplectic 2x2 over GF(3) with invertible (0,0) entry shows up
        let mut all_invertible_corner = 0;
        for e in 0i64..81 {
            let vals = [e % 3, e / 3 % 3, e / 9 % 3, e / 27 % 3];
            let m = Matrix::from_i64(f3, &[&[vals[0], vals[1]], &[vals[2], vals[3]]]);
            if is_symplectic(&m) && !m.get(0, 0).is_zero() {
                all_invertible_corner += 1;
                assert!(products.contains(&m));
            }
        }
        assert_eq!(all_invertible_corner, 18);
    }

    #[test]
    fn every_sp2_gf3_element_decomposes() {
        let f3 = FieldSpec::prime_field(3).unwrap();
        let mut total = 0;
        for e in 0i64..81 {
            let vals = [e % 3, e / 3 % 3, e / 9 % 3, e / 27 % 3];
            let m = Matrix::from_i64(f3, &[&[vals[0], vals[1]], &[vals[2], vals[3]]]);
            if is_symplectic(&m) {
                total += 1;
                let word = sp_decompose(&m).unwrap();
                assert_eq!(word_to_matrix(1, f3, &word), m);
            }
        }
        // |Sp_2(GF(3))| = |SL_2(GF(3))| = 24
        assert_eq!(total, 24);
    }
}
