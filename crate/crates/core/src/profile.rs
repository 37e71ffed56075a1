//! Column profiles of two-row generator matrices.
//!
//! A `2×n` generator is determined up to column order by the number of
//! times each column type `(i, j)ᵀ` occurs. Weights of the `q + 1` scalar
//! classes of nonzero codewords and the Gram matrix are linear in those
//! counts, which is what makes exhaustive `k = 2` search cheap.

use std::collections::BTreeMap;

use serde::{Deserialize, Serialize};

use crate::algebra::{Fe, Field, Form, Matrix};
use crate::{Error, Result};

/// Multiplicity of every column type `(i, j)`, the zero column included.
///
/// Counts are stored row-major by type: index `i·q + j`.
#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct ColumnProfile {
    field: Field,
    counts: Vec<u32>,
}

/// Weight shared by all codewords `c·(λα₁ + μα₂)`, `c ≠ 0`.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct ClassWeight {
    /// Lexicographically smallest message of the class.
    pub class: (Fe, Fe),
    pub weight: usize,
}

/// Projective points of GF(q)², each normalized so its first nonzero
/// coordinate is 1, in lexicographic order: `(0,1), (1,0), (1,1), …`.
///
/// The same list labels the scalar classes of messages.
pub fn projective_points(field: Field) -> Vec<(Fe, Fe)> {
    std::iter::once((Fe::ZERO, Fe::ONE))
        .chain(field.elements().map(|mu| (Fe::ONE, mu)))
        .collect()
}

/// Scales a nonzero pair so its first nonzero coordinate is 1.
pub fn normalize(field: Field, (a, b): (Fe, Fe)) -> Option<(Fe, Fe)> {
    let lead = if a.is_zero() { b } else { a };
    let inv = field.inv(lead).ok()?;
    Some((field.mul(a, inv), field.mul(b, inv)))
}

pub(crate) fn type_index(field: Field, i: Fe, j: Fe) -> usize {
    i.value() as usize * field.q() + j.value() as usize
}

pub(crate) fn type_of(field: Field, t: usize) -> (Fe, Fe) {
    let q = field.q();
    (Fe::raw((t / q) as u8), Fe::raw((t % q) as u8))
}

/// Index into [`projective_points`] of the point spanned by a column type.
pub(crate) fn point_index(field: Field, ty: (Fe, Fe)) -> Option<usize> {
    let (a, b) = normalize(field, ty)?;
    Some(if a.is_zero() { 0 } else { 1 + b.value() as usize })
}

impl ColumnProfile {
    pub fn new(field: Field, counts: Vec<u32>) -> Result<ColumnProfile> {
        let q = field.q();
        if counts.len() != q * q {
            return Err(Error::Shape(format!(
                "a GF({q}) profile has {} column types, got {}",
                q * q,
                counts.len()
            )));
        }
        Ok(ColumnProfile { field, counts })
    }

    pub fn zero(field: Field) -> ColumnProfile {
        ColumnProfile { field, counts: vec![0; field.q() * field.q()] }
    }

    /// Builds a profile from `((i, j), count)` entries; unlisted types are 0.
    pub fn from_pairs(field: Field, pairs: &[((u8, u8), u32)]) -> Result<ColumnProfile> {
        let mut p = ColumnProfile::zero(field);
        for &((i, j), c) in pairs {
            let t = type_index(field, field.elem(i)?, field.elem(j)?);
            p.counts[t] += c;
        }
        Ok(p)
    }

    /// `profile_of`: counts the columns of a two-row matrix.
    pub fn of_matrix(g: &Matrix) -> Result<ColumnProfile> {
        if g.rows() != 2 {
            return Err(Error::Shape(format!("column profiles need 2 rows, got {}", g.rows())));
        }
        let f = g.field();
        let mut p = ColumnProfile::zero(f);
        for c in 0..g.cols() {
            p.counts[type_index(f, g.get(0, c), g.get(1, c))] += 1;
        }
        Ok(p)
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn counts(&self) -> &[u32] {
        &self.counts
    }

    pub fn count(&self, i: Fe, j: Fe) -> u32 {
        self.counts[type_index(self.field, i, j)]
    }

    pub fn n(&self) -> usize {
        self.counts.iter().map(|&c| c as usize).sum()
    }

    /// Multiplicity of each projective point (scalar multiples merged).
    pub fn point_counts(&self) -> Vec<u32> {
        let f = self.field;
        let mut out = vec![0; f.q() + 1];
        for (t, &c) in self.counts.iter().enumerate() {
            if let Some(p) = point_index(f, type_of(f, t)) {
                out[p] += c;
            }
        }
        out
    }

    /// The support contains two projectively independent column types,
    /// i.e. the profile describes a rank-2 matrix.
    pub fn is_admissible(&self) -> bool {
        self.point_counts().iter().filter(|&&c| c > 0).count() >= 2
    }

    fn require_admissible(&self) -> Result<()> {
        if self.is_admissible() {
            Ok(())
        } else {
            Err(Error::RankDeficient { rank: self.rank(), rows: 2 })
        }
    }

    fn rank(&self) -> usize {
        self.point_counts().iter().filter(|&&c| c > 0).count().min(2)
    }

    /// `matrix_of`: column types in lexicographic order, each repeated by its count.
    pub fn to_matrix(&self) -> Result<Matrix> {
        self.require_admissible()?;
        let f = self.field;
        let n = self.n();
        let mut top = Vec::with_capacity(n);
        let mut bottom = Vec::with_capacity(n);
        for (t, &c) in self.counts.iter().enumerate() {
            let (i, j) = type_of(f, t);
            for _ in 0..c {
                top.push(i);
                bottom.push(j);
            }
        }
        top.extend(bottom);
        Matrix::new(f, 2, n, top)
    }

    /// One weight per scalar class, in the order of [`projective_points`].
    pub fn weights(&self) -> Result<Vec<ClassWeight>> {
        self.require_admissible()?;
        let f = self.field;
        let n = self.n();
        Ok(projective_points(f)
            .into_iter()
            .map(|(lambda, mu)| {
                let vanishing: usize = self
                    .counts
                    .iter()
                    .enumerate()
                    .filter(|&(t, _)| {
                        let (i, j) = type_of(f, t);
                        f.add(f.mul(lambda, i), f.mul(mu, j)).is_zero()
                    })
                    .map(|(_, &c)| c as usize)
                    .sum();
                ClassWeight { class: (lambda, mu), weight: n - vanishing }
            })
            .collect())
    }

    pub fn min_weight(&self) -> Result<usize> {
        Ok(self.weights()?.iter().map(|w| w.weight).min().unwrap_or(0))
    }

    /// Gram matrix of the generator computed directly from the counts.
    pub fn gram(&self, form: Form) -> Result<Matrix> {
        let f = self.field;
        f.check_form(form)?;
        let mut g = [Fe::ZERO; 3];
        for (t, &c) in self.counts.iter().enumerate() {
            let coeff = gram_coefficients(f, form, type_of(f, t));
            for (acc, x) in g.iter_mut().zip(coeff) {
                *acc = f.add(*acc, f.scale_int(c as usize, x));
            }
        }
        let g21 = match form {
            Form::Euclidean => g[1],
            Form::Hermitian => f.conj(g[1]),
        };
        Matrix::new(f, 2, 2, vec![g[0], g[1], g21, g[2]])
    }

    /// Adds `extra` zero columns.
    pub fn pad_zero_columns(&self, extra: u32) -> ColumnProfile {
        let mut p = self.clone();
        p.counts[0] += extra;
        p
    }

    pub fn to_json(&self) -> ProfileJson {
        let f = self.field;
        let counts = self
            .counts
            .iter()
            .enumerate()
            .map(|(t, &c)| {
                let (i, j) = type_of(f, t);
                (format!("{i},{j}"), c)
            })
            .collect();
        ProfileJson { q: f.order(), n: self.n(), counts }
    }

    pub fn from_json(doc: &ProfileJson) -> Result<ColumnProfile> {
        let f = Field::new(doc.q as u32)?;
        let mut p = ColumnProfile::zero(f);
        for (key, &c) in &doc.counts {
            let bad = || Error::Parse { line: 0, msg: format!("bad column type key '{key}'") };
            let (i, j) = key.split_once(',').ok_or_else(bad)?;
            let i: u8 = i.trim().parse().map_err(|_| bad())?;
            let j: u8 = j.trim().parse().map_err(|_| bad())?;
            p.counts[type_index(f, f.elem(i)?, f.elem(j)?)] += c;
        }
        if p.n() != doc.n {
            return Err(Error::Parse {
                line: 0,
                msg: format!("counts sum to {} but n = {}", p.n(), doc.n),
            });
        }
        Ok(p)
    }
}

/// Per-column contribution `(g11, g12, g22)` of a column type.
fn gram_coefficients(f: Field, form: Form, (i, j): (Fe, Fe)) -> [Fe; 3] {
    let (ci, cj) = match form {
        Form::Euclidean => (i, j),
        Form::Hermitian => (f.conj(i), f.conj(j)),
    };
    [f.mul(i, ci), f.mul(i, cj), f.mul(j, cj)]
}

/// Wire form of a profile: `{"q": 3, "n": 5, "counts": {"0,1": 1, ...}}`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct ProfileJson {
    pub q: u8,
    pub n: usize,
    pub counts: BTreeMap<String, u32>,
}

/// Precomputed tables for evaluating raw count vectors in a hot loop.
#[derive(Debug, Clone)]
pub struct ProfileKernel {
    field: Field,
    form: Form,
    /// For each scalar class, the column types on which it vanishes.
    vanishing: Vec<Vec<usize>>,
    /// Projective point of each column type; `usize::MAX` for the zero column.
    point: Vec<usize>,
    coeff: Vec<[Fe; 3]>,
}

impl ProfileKernel {
    pub fn new(field: Field, form: Form) -> Result<ProfileKernel> {
        field.check_form(form)?;
        let types = field.q() * field.q();
        let vanishing = projective_points(field)
            .into_iter()
            .map(|(lambda, mu)| {
                (0..types)
                    .filter(|&t| {
                        let (i, j) = type_of(field, t);
                        field.add(field.mul(lambda, i), field.mul(mu, j)).is_zero()
                    })
                    .collect()
            })
            .collect();
        let point = (0..types)
            .map(|t| point_index(field, type_of(field, t)).unwrap_or(usize::MAX))
            .collect();
        let coeff = (0..types)
            .map(|t| gram_coefficients(field, form, type_of(field, t)))
            .collect();
        Ok(ProfileKernel { field, form, vanishing, point, coeff })
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn form(&self) -> Form {
        self.form
    }

    pub fn is_admissible(&self, counts: &[u32]) -> bool {
        let mut first = usize::MAX;
        for (t, &c) in counts.iter().enumerate() {
            if c == 0 || self.point[t] == usize::MAX {
                continue;
            }
            if first == usize::MAX {
                first = self.point[t];
            } else if self.point[t] != first {
                return true;
            }
        }
        false
    }

    pub fn min_weight(&self, counts: &[u32], n: usize) -> usize {
        self.vanishing
            .iter()
            .map(|types| n - types.iter().map(|&t| counts[t] as usize).sum::<usize>())
            .min()
            .unwrap_or(0)
    }

    pub fn gram_det(&self, counts: &[u32]) -> Fe {
        let f = self.field;
        let mut g = [Fe::ZERO; 3];
        for (&c, coeff) in counts.iter().zip(&self.coeff) {
            if c == 0 {
                continue;
            }
            for (acc, &x) in g.iter_mut().zip(coeff) {
                *acc = f.add(*acc, f.scale_int(c as usize, x));
            }
        }
        let g21 = match self.form {
            Form::Euclidean => g[1],
            Form::Hermitian => f.conj(g[1]),
        };
        f.sub(f.mul(g[0], g[2]), f.mul(g[1], g21))
    }

    pub fn is_lcd(&self, counts: &[u32]) -> bool {
        !self.gram_det(counts).is_zero()
    }
}

/// Calls `visit` with every vector of `parts` nonnegative counts summing
/// to `total`, in lexicographic order, starting from a fixed `prefix`.
pub fn for_each_composition<F: FnMut(&[u32])>(total: u32, parts: usize, prefix: &[u32], mut visit: F) {
    let used: u32 = prefix.iter().sum();
    if used > total || prefix.len() > parts {
        return;
    }
    let mut buf = vec![0u32; parts];
    buf[..prefix.len()].copy_from_slice(prefix);
    fill(&mut buf, prefix.len(), total - used, &mut visit);
}

fn fill<F: FnMut(&[u32])>(buf: &mut [u32], pos: usize, remaining: u32, visit: &mut F) {
    if pos + 1 == buf.len() {
        buf[pos] = remaining;
        visit(buf);
        return;
    }
    for c in 0..=remaining {
        buf[pos] = c;
        fill(buf, pos + 1, remaining - c, visit);
    }
    buf[pos] = 0;
}
