//! Exact dense linear algebra over the rationals or a prime field.
//!
//! Everything downstream (Hom spaces, resolutions, Ext) reduces to rank,
//! kernel and quotient computations on small dense matrices, so determinism
//! and exactness matter more than asymptotics here. Elimination always picks
//! the first nonzero pivot; there is no floating point anywhere.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::fmt;
use std::ops::{Add, Div, Mul, Neg, Sub};

/// The coefficient field: exact rationals or `F_p` for a prime `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Field {
    Rational,
    Prime(u64),
}

impl Field {
    pub fn zero(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::zero()),
            Field::Prime(p) => Scalar::Fp { p, v: 0 },
        }
    }

    pub fn one(self) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::one()),
            Field::Prime(p) => Scalar::Fp { p, v: 1 % p },
        }
    }

    pub fn from_i64(self, n: i64) -> Scalar {
        match self {
            Field::Rational => Scalar::Q(BigRational::from_integer(BigInt::from(n))),
            Field::Prime(p) => {
                let r = n.rem_euclid(p as i64) as u64;
                Scalar::Fp { p, v: r }
            }
        }
    }
}

impl Default for Field {
    fn default() -> Self {
        Field::Rational
    }
}

/// An element of the active field. The tag must agree between operands;
/// mixing tags is a programming error and panics.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum Scalar {
    Q(BigRational),
    Fp { p: u64, v: u64 },
}

fn fp_pow(mut b: u64, mut e: u64, p: u64) -> u64 {
    let mut acc: u64 = 1 % p;
    b %= p;
    while e > 0 {
        if e & 1 == 1 {
            acc = ((acc as u128 * b as u128) % p as u128) as u64;
        }
        b = ((b as u128 * b as u128) % p as u128) as u64;
        e >>= 1;
    }
    acc
}

impl Scalar {
    pub fn field(&self) -> Field {
        match self {
            Scalar::Q(_) => Field::Rational,
            Scalar::Fp { p, .. } => Field::Prime(*p),
        }
    }

    pub fn is_zero(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_zero(),
            Scalar::Fp { v, .. } => *v == 0,
        }
    }

    pub fn is_one(&self) -> bool {
        match self {
            Scalar::Q(r) => r.is_one(),
            Scalar::Fp { p, v } => *v == 1 % p,
        }
    }

    pub fn inv(&self) -> Scalar {
        match self {
            Scalar::Q(r) => {
                assert!(!r.is_zero(), "inverse of zero");
                Scalar::Q(r.recip())
            }
            Scalar::Fp { p, v } => {
                assert!(*v != 0, "inverse of zero");
                Scalar::Fp { p: *p, v: fp_pow(*v, *p - 2, *p) }
            }
        }
    }
}

macro_rules! scalar_binop {
    ($trait:ident, $method:ident, $qop:tt, $fp:expr) => {
        impl $trait<&Scalar> for &Scalar {
            type Output = Scalar;
            fn $method(self, rhs: &Scalar) -> Scalar {
                match (self, rhs) {
                    (Scalar::Q(a), Scalar::Q(b)) => Scalar::Q(a $qop b),
                    (Scalar::Fp { p: pa, v: a }, Scalar::Fp { p: pb, v: b }) => {
                        assert_eq!(pa, pb, "scalar field mismatch");
                        let f: fn(u64, u64, u64) -> u64 = $fp;
                        Scalar::Fp { p: *pa, v: f(*a, *b, *pa) }
                    }
                    _ => panic!("scalar field mismatch"),
                }
            }
        }
    };
}

scalar_binop!(Add, add, +, |a, b, p| (a + b) % p);
scalar_binop!(Sub, sub, -, |a, b, p| (a + p - b) % p);
scalar_binop!(Mul, mul, *, |a, b, p| ((a as u128 * b as u128) % p as u128) as u64);
scalar_binop!(Div, div, /, |a, b, p| {
    assert!(b != 0, "division by zero");
    ((a as u128 * fp_pow(b, p - 2, p) as u128) % p as u128) as u64
});

impl Neg for &Scalar {
    type Output = Scalar;
    fn neg(self) -> Scalar {
        match self {
            Scalar::Q(a) => Scalar::Q(-a),
            Scalar::Fp { p, v } => Scalar::Fp { p: *p, v: (*p - *v) % *p },
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Scalar::Q(r) => {
                if r.denom().is_one() {
                    write!(f, "{}", r.numer())
                } else {
                    write!(f, "{}/{}", r.numer(), r.denom())
                }
            }
            Scalar::Fp { v, .. } => write!(f, "{}", v),
        }
    }
}

/// Dense matrix over a fixed field. Zero-dimension matrices are legal and
/// represent the identity of the empty space.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Mat {
    pub field: Field,
    pub rows: usize,
    pub cols: usize,
    e: Vec<Scalar>,
}

impl Mat {
    pub fn zero(field: Field, rows: usize, cols: usize) -> Mat {
        Mat { field, rows, cols, e: vec![field.zero(); rows * cols] }
    }

    pub fn identity(field: Field, n: usize) -> Mat {
        let mut m = Mat::zero(field, n, n);
        for i in 0..n {
            m.set(i, i, field.one());
        }
        m
    }

    pub fn from_fn(field: Field, rows: usize, cols: usize, f: impl Fn(usize, usize) -> Scalar) -> Mat {
        let mut e = Vec::with_capacity(rows * cols);
        for i in 0..rows {
            for j in 0..cols {
                e.push(f(i, j));
            }
        }
        Mat { field, rows, cols, e }
    }

    pub fn from_int_rows(field: Field, rows: &[&[i64]]) -> Mat {
        let r = rows.len();
        let c = if r == 0 { 0 } else { rows[0].len() };
        Mat::from_fn(field, r, c, |i, j| field.from_i64(rows[i][j]))
    }

    /// Builds an `n_rows x cols.len()` matrix whose columns are the given vectors.
    pub fn from_cols(field: Field, n_rows: usize, cols: &[Vec<Scalar>]) -> Mat {
        for c in cols {
            assert_eq!(c.len(), n_rows, "column length mismatch");
        }
        Mat::from_fn(field, n_rows, cols.len(), |i, j| cols[j][i].clone())
    }

    pub fn at(&self, i: usize, j: usize) -> &Scalar {
        debug_assert!(i < self.rows && j < self.cols);
        &self.e[i * self.cols + j]
    }

    pub fn set(&mut self, i: usize, j: usize, s: Scalar) {
        debug_assert!(i < self.rows && j < self.cols);
        self.e[i * self.cols + j] = s;
    }

    pub fn is_zero(&self) -> bool {
        self.e.iter().all(|s| s.is_zero())
    }

    pub fn col(&self, j: usize) -> Vec<Scalar> {
        (0..self.rows).map(|i| self.at(i, j).clone()).collect()
    }

    pub fn transpose(&self) -> Mat {
        Mat::from_fn(self.field, self.cols, self.rows, |i, j| self.at(j, i).clone())
    }

    pub fn scale(&self, s: &Scalar) -> Mat {
        Mat::from_fn(self.field, self.rows, self.cols, |i, j| self.at(i, j) * s)
    }

    pub fn mul(&self, rhs: &Mat) -> Mat {
        assert_eq!(self.cols, rhs.rows, "matrix dimension mismatch in mul");
        let mut out = Mat::zero(self.field, self.rows, rhs.cols);
        for i in 0..self.rows {
            for k in 0..self.cols {
                let a = self.at(i, k);
                if a.is_zero() {
                    continue;
                }
                for j in 0..rhs.cols {
                    let b = rhs.at(k, j);
                    if b.is_zero() {
                        continue;
                    }
                    let cur = out.at(i, j) + &(a * b);
                    out.set(i, j, cur);
                }
            }
        }
        out
    }

    pub fn mul_vec(&self, v: &[Scalar]) -> Vec<Scalar> {
        assert_eq!(self.cols, v.len(), "vector length mismatch in mul_vec");
        (0..self.rows)
            .map(|i| {
                let mut acc = self.field.zero();
                for j in 0..self.cols {
                    if !self.at(i, j).is_zero() && !v[j].is_zero() {
                        acc = &acc + &(self.at(i, j) * &v[j]);
                    }
                }
                acc
            })
            .collect()
    }

    /// Horizontal concatenation. All matrices must share the row count.
    pub fn hstack(field: Field, rows: usize, mats: &[&Mat]) -> Mat {
        let cols: usize = mats.iter().map(|m| m.cols).sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut off = 0;
        for m in mats {
            assert_eq!(m.rows, rows, "row count mismatch in hstack");
            for i in 0..rows {
                for j in 0..m.cols {
                    out.set(i, off + j, m.at(i, j).clone());
                }
            }
            off += m.cols;
        }
        out
    }

    pub fn select(&self, row_idx: &[usize], col_idx: &[usize]) -> Mat {
        Mat::from_fn(self.field, row_idx.len(), col_idx.len(), |i, j| {
            self.at(row_idx[i], col_idx[j]).clone()
        })
    }

    /// Assembles a block matrix from block row/column dimension lists. The
    /// callback returns the block at `(bi, bj)` or `None` for a zero block.
    pub fn assemble(
        field: Field,
        row_dims: &[usize],
        col_dims: &[usize],
        block: impl Fn(usize, usize) -> Option<Mat>,
    ) -> Mat {
        let rows: usize = row_dims.iter().sum();
        let cols: usize = col_dims.iter().sum();
        let mut out = Mat::zero(field, rows, cols);
        let mut roff = 0;
        for (bi, &rd) in row_dims.iter().enumerate() {
            let mut coff = 0;
            for (bj, &cd) in col_dims.iter().enumerate() {
                if let Some(b) = block(bi, bj) {
                    assert_eq!((b.rows, b.cols), (rd, cd), "block dimension mismatch");
                    for i in 0..rd {
                        for j in 0..cd {
                            out.set(roff + i, coff + j, b.at(i, j).clone());
                        }
                    }
                }
                coff += cd;
            }
            roff += rd;
        }
        out
    }

    /// Reduced row echelon form; returns the reduced matrix and pivot columns.
    pub fn rref(&self) -> (Mat, Vec<usize>) {
        let mut m = self.clone();
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..m.cols {
            if r == m.rows {
                break;
            }
            // first nonzero entry in column c at or below row r
            let mut pr = None;
            for i in r..m.rows {
                if !m.at(i, c).is_zero() {
                    pr = Some(i);
                    break;
                }
            }
            let Some(pr) = pr else { continue };
            if pr != r {
                for j in 0..m.cols {
                    let a = m.at(r, j).clone();
                    let b = m.at(pr, j).clone();
                    m.set(r, j, b);
                    m.set(pr, j, a);
                }
            }
            let inv = m.at(r, c).inv();
            for j in 0..m.cols {
                let v = m.at(r, j) * &inv;
                m.set(r, j, v);
            }
            for i in 0..m.rows {
                if i != r && !m.at(i, c).is_zero() {
                    let f = m.at(i, c).clone();
                    for j in 0..m.cols {
                        let v = m.at(i, j) - &(m.at(r, j) * &f);
                        m.set(i, j, v);
                    }
                }
            }
            pivots.push(c);
            r += 1;
        }
        (m, pivots)
    }

    pub fn rank(&self) -> usize {
        self.rref().1.len()
    }

    /// Columns spanning the null space; column count is `cols - rank`.
    pub fn kernel_basis(&self) -> Mat {
        let (r, pivots) = self.rref();
        let free: Vec<usize> = (0..self.cols).filter(|c| !pivots.contains(c)).collect();
        let mut out = Mat::zero(self.field, self.cols, free.len());
        for (k, &fc) in free.iter().enumerate() {
            out.set(fc, k, self.field.one());
            for (pi, &pc) in pivots.iter().enumerate() {
                out.set(pc, k, -r.at(pi, fc));
            }
        }
        out
    }

    /// Columns of `self` forming a basis of the column space.
    pub fn image_basis(&self) -> Mat {
        let (_, pivots) = self.rref();
        self.select(&(0..self.rows).collect::<Vec<_>>(), &pivots)
    }

    /// A particular solution of `self * x = b`, free variables set to zero.
    pub fn solve(&self, b: &[Scalar]) -> Option<Vec<Scalar>> {
        assert_eq!(b.len(), self.rows, "rhs length mismatch in solve");
        let aug = Mat::from_fn(self.field, self.rows, self.cols + 1, |i, j| {
            if j < self.cols {
                self.at(i, j).clone()
            } else {
                b[i].clone()
            }
        });
        let (r, pivots) = aug.rref();
        if pivots.contains(&self.cols) {
            return None;
        }
        let mut x = vec![self.field.zero(); self.cols];
        for (pi, &pc) in pivots.iter().enumerate() {
            x[pc] = r.at(pi, self.cols).clone();
        }
        Some(x)
    }

    /// Solves `self * X = B` column by column.
    pub fn solve_mat(&self, b: &Mat) -> Option<Mat> {
        assert_eq!(b.rows, self.rows);
        let mut cols = Vec::with_capacity(b.cols);
        for j in 0..b.cols {
            cols.push(self.solve(&b.col(j))?);
        }
        Some(Mat::from_cols(self.field, self.cols, &cols))
    }

    /// Coset representatives and projection for `ambient / colspace(sub)`.
    ///
    /// Returns `(reps, proj)` where the columns of `reps` are standard basis
    /// vectors spanning a complement of the subspace and `proj` maps the
    /// ambient space onto quotient coordinates with `proj * reps = identity`
    /// and `proj * sub = 0`.
    pub fn quotient_basis(field: Field, ambient: usize, sub: &Mat) -> (Mat, Mat) {
        assert_eq!(sub.rows, ambient, "subspace ambient mismatch");
        // Row-reduce the transpose: rref rows are a basis of the column
        // space with pivot coordinates `piv`.
        let (rt, piv) = sub.transpose().rref();
        let nonpiv: Vec<usize> = (0..ambient).filter(|c| !piv.contains(c)).collect();
        let mut reps = Mat::zero(field, ambient, nonpiv.len());
        for (k, &r) in nonpiv.iter().enumerate() {
            reps.set(r, k, field.one());
        }
        // proj(v)_k = v[r_k] - sum_i v[p_i] * basisrow_i[r_k]
        let mut proj = Mat::zero(field, nonpiv.len(), ambient);
        for (k, &r) in nonpiv.iter().enumerate() {
            proj.set(k, r, field.one());
            for (i, &p) in piv.iter().enumerate() {
                let v = proj.at(k, p) - rt.at(i, r);
                proj.set(k, p, v);
            }
        }
        (reps, proj)
    }

    pub fn pretty(&self) -> String {
        let strs: Vec<Vec<String>> = (0..self.rows)
            .map(|i| (0..self.cols).map(|j| self.at(i, j).to_string()).collect())
            .collect();
        let width = strs
            .iter()
            .flat_map(|r| r.iter().map(|s| s.len()))
            .max()
            .unwrap_or(1);
        strs.iter()
            .map(|r| {
                let row: Vec<String> = r.iter().map(|s| format!("{s:>width$}")).collect();
                format!("[{}]", row.join(" "))
            })
            .collect::<Vec<_>>()
            .join("\n")
    }
}

/// Integer square-free-ish display helper used by rational scalars.
impl Scalar {
    pub fn to_i64_lossy(&self) -> Option<i64> {
        match self {
            Scalar::Q(r) if r.denom().is_one() => {
                let n = r.numer();
                if n.abs() <= BigInt::from(i64::MAX) {
                    let (sign, digits) = n.to_u64_digits();
                    let mag = digits.first().copied().unwrap_or(0) as i64;
                    Some(if sign == num_bigint::Sign::Minus { -mag } else { mag })
                } else {
                    None
                }
            }
            Scalar::Fp { v, .. } => Some(*v as i64),
            _ => None,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    const QQ: Field = Field::Rational;

    #[test]
    fn rank_identity_and_zero() {
        for k in 0..5 {
            assert_eq!(Mat::identity(QQ, k).rank(), k);
            assert_eq!(Mat::zero(QQ, k, k).rank(), 0);
        }
    }

    #[test]
    fn rank_proportional_rows() {
        let a = Mat::from_int_rows(QQ, &[&[1, 2], &[2, 4]]);
        assert_eq!(a.rank(), 1);
    }

    #[test]
    fn kernel_of_invertible_is_trivial() {
        let a = Mat::from_int_rows(QQ, &[&[1, 1], &[0, 1]]);
        assert_eq!(a.kernel_basis().cols, 0);
    }

    #[test]
    fn kernel_of_zero_map() {
        let a = Mat::zero(QQ, 3, 4);
        assert_eq!(a.kernel_basis().cols, 4);
    }

    #[test]
    fn kernel_of_sum_functional() {
        let a = Mat::from_int_rows(QQ, &[&[1, 1]]);
        let k = a.kernel_basis();
        assert_eq!(k.cols, 1);
        assert!(a.mul(&k).is_zero());
        // spanned by (1, -1)
        let ratio = k.at(0, 0) + k.at(1, 0);
        assert!(ratio.is_zero());
    }

    #[test]
    fn solve_identity() {
        let a = Mat::identity(QQ, 3);
        let b = vec![QQ.from_i64(5), QQ.from_i64(-1), QQ.from_i64(0)];
        assert_eq!(a.solve(&b).unwrap(), b);
    }

    #[test]
    fn solve_inconsistent() {
        let a = Mat::from_int_rows(QQ, &[&[1, 0], &[1, 0]]);
        let b = vec![QQ.from_i64(1), QQ.from_i64(2)];
        assert!(a.solve(&b).is_none());
    }

    #[test]
    fn quotient_by_self_and_by_zero() {
        let full = Mat::identity(QQ, 3);
        let (reps, _) = Mat::quotient_basis(QQ, 3, &full);
        assert_eq!(reps.cols, 0);

        let none = Mat::zero(QQ, 3, 0);
        let (reps, proj) = Mat::quotient_basis(QQ, 3, &none);
        assert_eq!(reps.cols, 3);
        assert_eq!(proj.mul(&reps), Mat::identity(QQ, 3));
    }

    #[test]
    fn quotient_projection_contract() {
        let sub = Mat::from_int_rows(QQ, &[&[1], &[1], &[0]]);
        let (reps, proj) = Mat::quotient_basis(QQ, 3, &sub);
        assert_eq!(reps.cols, 2);
        assert!(proj.mul(&sub).is_zero());
        assert_eq!(proj.mul(&reps), Mat::identity(QQ, 2));
    }

    #[test]
    fn fp_arithmetic_roundtrip() {
        let f = Field::Prime(32003);
        let a = f.from_i64(-7);
        let b = f.from_i64(9);
        let c = &(&a * &b) + &f.one();
        assert_eq!(c, f.from_i64(-62));
        assert!((&a * &a.inv()).is_one());
    }

    fn small_mat(field: Field) -> impl Strategy<Value = Mat> {
        (0usize..5, 0usize..5).prop_flat_map(move |(r, c)| {
            proptest::collection::vec(-3i64..=3, r * c).prop_map(move |vals| {
                Mat::from_fn(field, r, c, |i, j| field.from_i64(vals[i * c + j]))
            })
        })
    }

    proptest! {
        #[test]
        fn rank_nullity(a in small_mat(Field::Rational)) {
            let k = a.kernel_basis();
            prop_assert_eq!(a.rank() + k.cols, a.cols);
            if k.cols > 0 {
                prop_assert!(a.mul(&k).is_zero());
            }
        }

        // Entries are tiny integers, so all elimination pivots stay far below
        // 32003 and the mod-p rank must agree with the rational rank.
        #[test]
        fn rank_agrees_with_prime_field(a in small_mat(Field::Rational)) {
            let p = Field::Prime(32003);
            let b = Mat::from_fn(p, a.rows, a.cols, |i, j| {
                p.from_i64(a.at(i, j).to_i64_lossy().unwrap())
            });
            prop_assert_eq!(a.rank(), b.rank());
        }

        #[test]
        fn image_plus_kernel_consistent(a in small_mat(Field::Rational)) {
            let im = a.image_basis();
            prop_assert_eq!(im.cols, a.rank());
            prop_assert_eq!(im.rank(), a.rank());
        }
    }
}
