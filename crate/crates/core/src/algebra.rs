//! Exact arithmetic in GF(2), GF(3), GF(4) and dense matrices over them.
//!
//! GF(4) elements use the codes `0, 1, 2 = ξ, 3 = ξ²` with `ξ² = ξ + 1`.
//! In that encoding addition is the XOR of the two-bit codes and
//! multiplication goes through a table.

use std::fmt;

use serde::{Deserialize, Serialize};

use crate::{Error, Result};

/// One of the three supported fields.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Field {
    Gf2,
    Gf3,
    Gf4,
}

/// The bilinear (Euclidean) or sesquilinear (Hermitian) inner product.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Form {
    Euclidean,
    Hermitian,
}

impl fmt::Display for Form {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Form::Euclidean => f.write_str("euclidean"),
            Form::Hermitian => f.write_str("hermitian"),
        }
    }
}

impl std::str::FromStr for Form {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "euclidean" | "e" | "E" => Ok(Form::Euclidean),
            "hermitian" | "h" | "H" => Ok(Form::Hermitian),
            other => Err(Error::Domain(format!("unknown form '{other}'"))),
        }
    }
}

/// A field element in canonical integer encoding.
///
/// The value alone does not identify the field; arithmetic always goes
/// through a [`Field`].
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Default)]
pub struct Fe(u8);

impl Fe {
    pub const ZERO: Fe = Fe(0);
    pub const ONE: Fe = Fe(1);
    /// The primitive element ξ of GF(4) (also the element `2` of GF(3)).
    pub const XI: Fe = Fe(2);
    /// ξ² in GF(4).
    pub const XI2: Fe = Fe(3);

    /// Wraps a raw code without validation; see [`Field::elem`] for the checked form.
    pub const fn raw(value: u8) -> Fe {
        Fe(value)
    }

    pub const fn value(self) -> u8 {
        self.0
    }

    pub const fn is_zero(self) -> bool {
        self.0 == 0
    }
}

impl fmt::Display for Fe {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

const ADD: [[[u8; 4]; 4]; 3] = [
    // GF(2)
    [[0, 1, 0, 0], [1, 0, 0, 0], [0; 4], [0; 4]],
    // GF(3)
    [[0, 1, 2, 0], [1, 2, 0, 0], [2, 0, 1, 0], [0; 4]],
    // GF(4): XOR of the coordinates over the basis {1, ξ}
    [[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]],
];

const MUL: [[[u8; 4]; 4]; 3] = [
    [[0, 0, 0, 0], [0, 1, 0, 0], [0; 4], [0; 4]],
    [[0, 0, 0, 0], [0, 1, 2, 0], [0, 2, 1, 0], [0; 4]],
    // ξ·ξ = ξ², ξ·ξ² = 1, ξ²·ξ² = ξ
    [[0, 0, 0, 0], [0, 1, 2, 3], [0, 2, 3, 1], [0, 3, 1, 2]],
];

const NEG: [[u8; 4]; 3] = [[0, 1, 0, 0], [0, 2, 1, 0], [0, 1, 2, 3]];
const INV: [[u8; 4]; 3] = [[0, 1, 0, 0], [0, 1, 2, 0], [0, 1, 3, 2]];
const CONJ: [[u8; 4]; 3] = [[0, 1, 0, 0], [0, 1, 2, 0], [0, 1, 3, 2]];

impl Field {
    pub const ALL: [Field; 3] = [Field::Gf2, Field::Gf3, Field::Gf4];

    pub fn new(q: u32) -> Result<Field> {
        match q {
            2 => Ok(Field::Gf2),
            3 => Ok(Field::Gf3),
            4 => Ok(Field::Gf4),
            other => Err(Error::UnsupportedField(other)),
        }
    }

    #[inline]
    fn idx(self) -> usize {
        match self {
            Field::Gf2 => 0,
            Field::Gf3 => 1,
            Field::Gf4 => 2,
        }
    }

    pub const fn order(self) -> u8 {
        match self {
            Field::Gf2 => 2,
            Field::Gf3 => 3,
            Field::Gf4 => 4,
        }
    }

    pub fn q(self) -> usize {
        self.order() as usize
    }

    pub const fn characteristic(self) -> u8 {
        match self {
            Field::Gf2 | Field::Gf4 => 2,
            Field::Gf3 => 3,
        }
    }

    pub fn contains(self, x: Fe) -> bool {
        x.0 < self.order()
    }

    /// Checked conversion from a canonical code.
    pub fn elem(self, value: u8) -> Result<Fe> {
        if value < self.order() {
            Ok(Fe(value))
        } else {
            Err(Error::InvalidElement { q: self.order(), value })
        }
    }

    pub fn elements(self) -> impl Iterator<Item = Fe> + Clone {
        (0..self.order()).map(Fe)
    }

    pub fn nonzero(self) -> impl Iterator<Item = Fe> + Clone {
        (1..self.order()).map(Fe)
    }

    #[inline]
    pub fn add(self, x: Fe, y: Fe) -> Fe {
        Fe(ADD[self.idx()][x.0 as usize][y.0 as usize])
    }

    #[inline]
    pub fn sub(self, x: Fe, y: Fe) -> Fe {
        self.add(x, self.neg(y))
    }

    #[inline]
    pub fn mul(self, x: Fe, y: Fe) -> Fe {
        Fe(MUL[self.idx()][x.0 as usize][y.0 as usize])
    }

    #[inline]
    pub fn neg(self, x: Fe) -> Fe {
        Fe(NEG[self.idx()][x.0 as usize])
    }

    pub fn inv(self, x: Fe) -> Result<Fe> {
        if x.is_zero() {
            Err(Error::ZeroInverse)
        } else {
            Ok(Fe(INV[self.idx()][x.0 as usize]))
        }
    }

    /// `x^q`-style conjugation for GF(4) viewed as GF(2²): `x ↦ x²`.
    /// Identity on GF(2) and GF(3).
    #[inline]
    pub fn conj(self, x: Fe) -> Fe {
        Fe(CONJ[self.idx()][x.0 as usize])
    }

    /// The image of an integer in the prime subfield.
    #[inline]
    pub fn from_int(self, n: usize) -> Fe {
        Fe((n % self.characteristic() as usize) as u8)
    }

    /// `n · x`, i.e. `x` added to itself `n` times.
    #[inline]
    pub fn scale_int(self, n: usize, x: Fe) -> Fe {
        self.mul(self.from_int(n), x)
    }

    pub fn pow(self, x: Fe, mut e: u32) -> Fe {
        let mut base = x;
        let mut acc = Fe::ONE;
        while e > 0 {
            if e & 1 == 1 {
                acc = self.mul(acc, base);
            }
            base = self.mul(base, base);
            e >>= 1;
        }
        acc
    }

    /// `Σ u_i v_i` (Euclidean) or `Σ u_i conj(v_i)` (Hermitian).
    pub fn inner(self, form: Form, u: &[Fe], v: &[Fe]) -> Fe {
        debug_assert_eq!(u.len(), v.len());
        match form {
            Form::Euclidean => u
                .iter()
                .zip(v)
                .fold(Fe::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, b))),
            Form::Hermitian => u
                .iter()
                .zip(v)
                .fold(Fe::ZERO, |acc, (&a, &b)| self.add(acc, self.mul(a, self.conj(b)))),
        }
    }

    /// Fails unless `form` is meaningful over this field.
    pub fn check_form(self, form: Form) -> Result<()> {
        match (self, form) {
            (_, Form::Euclidean) | (Field::Gf4, Form::Hermitian) => Ok(()),
            (f, Form::Hermitian) => Err(Error::UnsupportedForm(f.order())),
        }
    }
}

impl fmt::Display for Field {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "GF({})", self.order())
    }
}

/// Hamming weight of a word.
pub fn weight(word: &[Fe]) -> usize {
    word.iter().filter(|x| !x.is_zero()).count()
}

/// Dense row-major matrix over one of the small fields.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct Matrix {
    field: Field,
    rows: usize,
    cols: usize,
    data: Vec<Fe>,
}

/// Result of row reduction.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Rref {
    pub matrix: Matrix,
    pub rank: usize,
    pub pivots: Vec<usize>,
}

impl Matrix {
    pub fn new(field: Field, rows: usize, cols: usize, data: Vec<Fe>) -> Result<Matrix> {
        if data.len() != rows * cols {
            return Err(Error::Shape(format!(
                "{} entries for a {rows}x{cols} matrix",
                data.len()
            )));
        }
        if let Some(bad) = data.iter().find(|&&x| !field.contains(x)) {
            return Err(Error::InvalidElement { q: field.order(), value: bad.0 });
        }
        Ok(Matrix { field, rows, cols, data })
    }

    /// Builds a matrix from rows of canonical codes.
    pub fn from_rows<R: AsRef<[u8]>>(field: Field, rows: &[R]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, |r| r.as_ref().len());
        let mut data = Vec::with_capacity(rows.len() * cols);
        for r in rows {
            let r = r.as_ref();
            if r.len() != cols {
                return Err(Error::Shape("rows of unequal length".into()));
            }
            for &v in r {
                data.push(field.elem(v)?);
            }
        }
        Ok(Matrix { field, rows: rows.len(), cols, data })
    }

    pub fn from_fe_rows(field: Field, rows: &[Vec<Fe>]) -> Result<Matrix> {
        let cols = rows.first().map_or(0, Vec::len);
        if rows.iter().any(|r| r.len() != cols) {
            return Err(Error::Shape("rows of unequal length".into()));
        }
        Matrix::new(field, rows.len(), cols, rows.concat())
    }

    pub fn zeros(field: Field, rows: usize, cols: usize) -> Matrix {
        Matrix { field, rows, cols, data: vec![Fe::ZERO; rows * cols] }
    }

    pub fn identity(field: Field, size: usize) -> Matrix {
        let mut m = Matrix::zeros(field, size, size);
        for i in 0..size {
            m.data[i * size + i] = Fe::ONE;
        }
        m
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn rows(&self) -> usize {
        self.rows
    }

    pub fn cols(&self) -> usize {
        self.cols
    }

    pub fn is_square(&self) -> bool {
        self.rows == self.cols
    }

    pub fn entries(&self) -> &[Fe] {
        &self.data
    }

    #[inline]
    pub fn get(&self, r: usize, c: usize) -> Fe {
        self.data[r * self.cols + c]
    }

    pub fn row(&self, r: usize) -> &[Fe] {
        &self.data[r * self.cols..(r + 1) * self.cols]
    }

    pub fn row_vecs(&self) -> Vec<Vec<Fe>> {
        (0..self.rows).map(|r| self.row(r).to_vec()).collect()
    }

    pub fn column(&self, c: usize) -> Vec<Fe> {
        (0..self.rows).map(|r| self.get(r, c)).collect()
    }

    pub fn is_zero(&self) -> bool {
        self.data.iter().all(|x| x.is_zero())
    }

    pub fn transpose(&self) -> Matrix {
        let mut data = Vec::with_capacity(self.data.len());
        for c in 0..self.cols {
            for r in 0..self.rows {
                data.push(self.get(r, c));
            }
        }
        Matrix { field: self.field, rows: self.cols, cols: self.rows, data }
    }

    /// Entrywise conjugate.
    pub fn conj(&self) -> Matrix {
        let f = self.field;
        Matrix { data: self.data.iter().map(|&x| f.conj(x)).collect(), ..self.clone() }
    }

    pub fn mul(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field {
            return Err(Error::Shape("matrices over different fields".into()));
        }
        if self.cols != other.rows {
            return Err(Error::Shape(format!(
                "cannot multiply {}x{} by {}x{}",
                self.rows, self.cols, other.rows, other.cols
            )));
        }
        let f = self.field;
        let mut data = vec![Fe::ZERO; self.rows * other.cols];
        for i in 0..self.rows {
            for l in 0..self.cols {
                let a = self.get(i, l);
                if a.is_zero() {
                    continue;
                }
                for j in 0..other.cols {
                    let cell = &mut data[i * other.cols + j];
                    *cell = f.add(*cell, f.mul(a, other.get(l, j)));
                }
            }
        }
        Ok(Matrix { field: f, rows: self.rows, cols: other.cols, data })
    }

    /// Rows of `self` followed by rows of `other`.
    pub fn stack(&self, other: &Matrix) -> Result<Matrix> {
        if self.field != other.field || self.cols != other.cols {
            return Err(Error::Shape("cannot stack matrices of different width or field".into()));
        }
        let mut data = self.data.clone();
        data.extend_from_slice(&other.data);
        Ok(Matrix { field: self.field, rows: self.rows + other.rows, cols: self.cols, data })
    }

    pub fn push_row(&self, row: &[Fe]) -> Result<Matrix> {
        let extra = Matrix::new(self.field, 1, row.len(), row.to_vec())?;
        self.stack(&extra)
    }

    /// Appends `count` zero columns on the right.
    pub fn pad_zero_columns(&self, count: usize) -> Matrix {
        let cols = self.cols + count;
        let mut data = Vec::with_capacity(self.rows * cols);
        for r in 0..self.rows {
            data.extend_from_slice(self.row(r));
            data.extend(std::iter::repeat_n(Fe::ZERO, count));
        }
        Matrix { field: self.field, rows: self.rows, cols, data }
    }

    /// Reduced row echelon form by Gauss–Jordan elimination.
    pub fn rref(&self) -> Rref {
        let f = self.field;
        let mut m = self.data.clone();
        let (rows, cols) = (self.rows, self.cols);
        let mut pivots = Vec::new();
        let mut r = 0;
        for c in 0..cols {
            if r == rows {
                break;
            }
            let Some(p) = (r..rows).find(|&i| !m[i * cols + c].is_zero()) else {
                continue;
            };
            if p != r {
                for j in 0..cols {
                    m.swap(p * cols + j, r * cols + j);
                }
            }
            let inv = f.inv(m[r * cols + c]).expect("pivot is nonzero");
            for j in 0..cols {
                m[r * cols + j] = f.mul(m[r * cols + j], inv);
            }
            for i in 0..rows {
                if i == r {
                    continue;
                }
                let factor = m[i * cols + c];
                if factor.is_zero() {
                    continue;
                }
                for j in 0..cols {
                    let sub = f.mul(factor, m[r * cols + j]);
                    m[i * cols + j] = f.sub(m[i * cols + j], sub);
                }
            }
            pivots.push(c);
            r += 1;
        }
        Rref {
            matrix: Matrix { field: f, rows, cols, data: m },
            rank: r,
            pivots,
        }
    }

    pub fn rank(&self) -> usize {
        self.rref().rank
    }

    /// Determinant by Gaussian elimination.
    pub fn det(&self) -> Result<Fe> {
        if !self.is_square() {
            return Err(Error::Shape(format!(
                "determinant of a non-square {}x{} matrix",
                self.rows, self.cols
            )));
        }
        Ok(det_in_place(self.field, self.rows, &mut self.data.clone()))
    }

    /// `G·Gᵀ` for the Euclidean form, `G·conj(G)ᵀ` for the Hermitian one.
    pub fn gram(&self, form: Form) -> Result<Matrix> {
        self.field.check_form(form)?;
        let f = self.field;
        let k = self.rows;
        let mut data = Vec::with_capacity(k * k);
        for i in 0..k {
            for j in 0..k {
                data.push(f.inner(form, self.row(i), self.row(j)));
            }
        }
        Ok(Matrix { field: f, rows: k, cols: k, data })
    }

    /// Keeps only the nonzero rows.
    pub fn nonzero_rows(&self) -> Matrix {
        let rows: Vec<Vec<Fe>> = self
            .row_vecs()
            .into_iter()
            .filter(|r| r.iter().any(|x| !x.is_zero()))
            .collect();
        Matrix {
            field: self.field,
            rows: rows.len(),
            cols: self.cols,
            data: rows.concat(),
        }
    }
}

/// Determinant of a row-major `n×n` buffer; the buffer is clobbered.
pub(crate) fn det_in_place(f: Field, n: usize, m: &mut [Fe]) -> Fe {
    let mut det = Fe::ONE;
    for c in 0..n {
        let Some(p) = (c..n).find(|&i| !m[i * n + c].is_zero()) else {
            return Fe::ZERO;
        };
        if p != c {
            for j in 0..n {
                m.swap(p * n + j, c * n + j);
            }
            det = f.neg(det);
        }
        let pivot = m[c * n + c];
        det = f.mul(det, pivot);
        let inv = f.inv(pivot).expect("pivot is nonzero");
        for i in c + 1..n {
            let factor = f.mul(m[i * n + c], inv);
            if factor.is_zero() {
                continue;
            }
            for j in c..n {
                let sub = f.mul(factor, m[c * n + j]);
                m[i * n + j] = f.sub(m[i * n + j], sub);
            }
        }
    }
    det
}

impl fmt::Display for Matrix {
    /// `[[a,b],[c,d]]`
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for r in 0..self.rows {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (j, x) in self.row(r).iter().enumerate() {
                if j > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn m(field: Field, rows: &[&[u8]]) -> Matrix {
        Matrix::from_rows(field, rows).unwrap()
    }

    #[test]
    fn gf4_table_follows_xi_squared_is_xi_plus_one() {
        let f = Field::Gf4;
        assert_eq!(f.mul(Fe::XI, Fe::XI), Fe::XI2);
        assert_eq!(f.mul(Fe::XI, Fe::XI), f.add(Fe::XI, Fe::ONE));
        assert_eq!(f.pow(Fe::XI, 3), Fe::ONE);
        assert_eq!(f.mul(Fe::XI2, Fe::XI2), Fe::XI);
    }

    #[test]
    fn conjugation() {
        let f = Field::Gf4;
        assert_eq!(f.conj(Fe::XI), Fe::XI2);
        assert_eq!(f.conj(Fe::XI2), Fe::XI);
        for x in f.elements() {
            assert_eq!(f.conj(x), f.pow(x, 2));
            assert_eq!(f.conj(f.conj(x)), x);
        }
        for fld in [Field::Gf2, Field::Gf3] {
            for x in fld.elements() {
                assert_eq!(fld.conj(x), x);
            }
        }
        assert_eq!(f.conj(Fe::ZERO), Fe::ZERO);
        assert_eq!(f.conj(Fe::ONE), Fe::ONE);
    }

    #[test]
    fn inverses() {
        assert_eq!(Field::Gf3.inv(Fe::raw(2)), Ok(Fe::raw(2)));
        assert_eq!(Field::Gf2.inv(Fe::ZERO), Err(Error::ZeroInverse));
        for f in Field::ALL {
            for x in f.nonzero() {
                assert_eq!(f.mul(x, f.inv(x).unwrap()), Fe::ONE);
            }
            for x in f.elements() {
                assert_eq!(f.add(x, f.neg(x)), Fe::ZERO);
            }
        }
    }

    #[test]
    fn field_axioms_exhaustive() {
        for f in Field::ALL {
            for a in f.elements() {
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements() {
                        assert_eq!(f.mul(a, f.add(b, c)), f.add(f.mul(a, b), f.mul(a, c)));
                        assert_eq!(f.mul(f.mul(a, b), c), f.mul(a, f.mul(b, c)));
                        assert_eq!(f.add(f.add(a, b), c), f.add(a, f.add(b, c)));
                    }
                    // conj is a field automorphism
                    assert_eq!(f.conj(f.mul(a, b)), f.mul(f.conj(a), f.conj(b)));
                    assert_eq!(f.conj(f.add(a, b)), f.add(f.conj(a), f.conj(b)));
                }
            }
        }
    }

    #[test]
    fn elem_rejects_out_of_range() {
        assert!(Field::Gf3.elem(3).is_err());
        assert!(Field::Gf4.elem(3).is_ok());
        assert!(Field::new(5).is_err());
    }

    #[test]
    fn rref_examples() {
        let r = m(Field::Gf2, &[&[1, 1], &[1, 1]]).rref();
        assert_eq!(r.rank, 1);
        assert_eq!(r.matrix, m(Field::Gf2, &[&[1, 1], &[0, 0]]));

        let id = Matrix::identity(Field::Gf3, 2);
        let r = id.rref();
        assert_eq!((r.matrix, r.rank), (id, 2));

        let g = m(Field::Gf2, &[&[1, 0, 1], &[0, 1, 1]]);
        let r = g.rref();
        assert_eq!((r.matrix, r.rank, r.pivots), (g, 2, vec![0, 1]));
    }

    #[test]
    fn det_examples() {
        assert_eq!(m(Field::Gf2, &[&[0, 1], &[1, 0]]).det(), Ok(Fe::ONE));
        assert_eq!(m(Field::Gf3, &[&[1, 0], &[0, 2]]).det(), Ok(Fe::raw(2)));
        assert_eq!(m(Field::Gf3, &[&[2, 1], &[1, 2]]).det(), Ok(Fe::ZERO));
        assert!(matches!(m(Field::Gf3, &[&[1, 0, 0]]).det(), Err(Error::Shape(_))));
        // row swap flips the sign over GF(3)
        assert_eq!(m(Field::Gf3, &[&[0, 1], &[1, 0]]).det(), Ok(Fe::raw(2)));
        assert_eq!(Matrix::zeros(Field::Gf3, 0, 0).det(), Ok(Fe::ONE));
    }

    #[test]
    fn gram_examples() {
        let id = Matrix::identity(Field::Gf2, 2);
        assert_eq!(id.gram(Form::Euclidean).unwrap(), id);

        let g = m(Field::Gf4, &[&[1, 2]]);
        assert_eq!(g.gram(Form::Hermitian).unwrap(), Matrix::zeros(Field::Gf4, 1, 1));
        // 1 + ξ² = ξ under the Euclidean form
        assert_eq!(g.gram(Form::Euclidean).unwrap().get(0, 0), Fe::XI);

        assert_eq!(
            m(Field::Gf3, &[&[1, 2]]).gram(Form::Hermitian),
            Err(Error::UnsupportedForm(3))
        );
    }

    #[test]
    fn hermitian_gram_is_conjugate_symmetric() {
        let g = m(Field::Gf4, &[&[1, 2, 3, 0, 2], &[3, 3, 1, 2, 0], &[0, 1, 2, 2, 1]]);
        let h = g.gram(Form::Hermitian).unwrap();
        assert_eq!(h.transpose(), h.conj());
        let e = g.gram(Form::Euclidean).unwrap();
        assert_eq!(e.transpose(), e);
    }

    #[test]
    fn display_is_nested_lists() {
        assert_eq!(Matrix::identity(Field::Gf2, 2).to_string(), "[[1,0],[0,1]]");
    }
}
