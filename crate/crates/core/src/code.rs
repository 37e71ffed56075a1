//! Linear codes: duals, hulls, the LCD predicate and minimum distance.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use crate::algebra::{weight, Fe, Field, Form, Matrix};
use crate::{Error, Result};

/// Largest number of codewords the enumerating routines will visit.
pub const CODEWORD_BUDGET: u128 = 1 << 24;

/// A linear code given by a full-rank generator matrix.
///
/// The code is the row space of the generator. The zero code (`k = 0`)
/// only ever appears as the dual of an `[n, n]` code.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LinearCode {
    field: Field,
    n: usize,
    generator: Matrix,
}

/// Number of codewords of each Hamming weight `0..=n`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct WeightDistribution {
    counts: Vec<u64>,
}

impl WeightDistribution {
    pub fn counts(&self) -> &[u64] {
        &self.counts
    }

    pub fn count(&self, w: usize) -> u64 {
        self.counts.get(w).copied().unwrap_or(0)
    }

    pub fn total(&self) -> u64 {
        self.counts.iter().sum()
    }

    /// Nonzero entries only, keyed by weight.
    pub fn to_map(&self) -> BTreeMap<usize, u64> {
        self.counts
            .iter()
            .enumerate()
            .filter(|(_, &c)| c > 0)
            .map(|(w, &c)| (w, c))
            .collect()
    }

    pub fn min_nonzero_weight(&self) -> Option<usize> {
        self.counts.iter().enumerate().skip(1).find(|(_, &c)| c > 0).map(|(w, _)| w)
    }
}

impl LinearCode {
    /// Wraps a generator matrix, refusing rank-deficient input.
    pub fn new(generator: Matrix) -> Result<LinearCode> {
        if generator.rows() == 0 || generator.cols() == 0 {
            return Err(Error::Shape("generator must have at least one row and column".into()));
        }
        let rank = generator.rank();
        if rank < generator.rows() {
            return Err(Error::RankDeficient { rank, rows: generator.rows() });
        }
        Ok(LinearCode { field: generator.field(), n: generator.cols(), generator })
    }

    pub fn from_rows<R: AsRef<[u8]>>(field: Field, rows: &[R]) -> Result<LinearCode> {
        LinearCode::new(Matrix::from_rows(field, rows)?)
    }

    fn zero(field: Field, n: usize) -> LinearCode {
        LinearCode { field, n, generator: Matrix::zeros(field, 0, n) }
    }

    pub fn field(&self) -> Field {
        self.field
    }

    pub fn n(&self) -> usize {
        self.n
    }

    pub fn k(&self) -> usize {
        self.generator.rows()
    }

    pub fn generator(&self) -> &Matrix {
        &self.generator
    }

    pub fn is_zero_code(&self) -> bool {
        self.k() == 0
    }

    /// Same code with its generator in reduced row echelon form.
    pub fn reduced(&self) -> LinearCode {
        LinearCode { generator: self.generator.rref().matrix, ..self.clone() }
    }

    /// Whether both generators span the same row space.
    pub fn same_code(&self, other: &LinearCode) -> bool {
        self.field == other.field
            && self.n == other.n
            && self.k() == other.k()
            && self.generator.rref().matrix == other.generator.rref().matrix
    }

    pub fn contains(&self, word: &[Fe]) -> bool {
        if word.len() != self.n {
            return false;
        }
        match self.generator.push_row(word) {
            Ok(m) => m.rank() == self.k(),
            Err(_) => false,
        }
    }

    /// Every codeword of `self` lies in `other`.
    pub fn is_subcode_of(&self, other: &LinearCode) -> bool {
        (0..self.k()).all(|r| other.contains(self.generator.row(r)))
    }

    /// Euclidean dual, or Hermitian dual over GF(4).
    ///
    /// The returned generator is in reduced row echelon form. The dual of
    /// an `[n, n]` code is the zero code.
    pub fn dual(&self, form: Form) -> Result<LinearCode> {
        self.field.check_form(form)?;
        // u is Hermitian-orthogonal to C iff u is Euclidean-orthogonal to conj(C).
        let base = match form {
            Form::Euclidean => self.generator.clone(),
            Form::Hermitian => self.generator.conj(),
        };
        let f = self.field;
        let rref = base.rref();
        let free: Vec<usize> = (0..self.n).filter(|c| !rref.pivots.contains(c)).collect();
        if free.is_empty() {
            return Ok(LinearCode::zero(f, self.n));
        }
        let mut rows = Vec::with_capacity(free.len());
        for &fc in &free {
            let mut v = vec![Fe::ZERO; self.n];
            v[fc] = Fe::ONE;
            for (r, &pc) in rref.pivots.iter().enumerate() {
                v[pc] = f.neg(rref.matrix.get(r, fc));
            }
            rows.push(v);
        }
        let generator = Matrix::from_fe_rows(f, &rows)?.rref().matrix;
        Ok(LinearCode { field: f, n: self.n, generator })
    }

    /// `dim(C ∩ C^⊥)`, computed as `k + (n − k) − dim(C + C^⊥)`.
    pub fn hull_dim(&self, form: Form) -> Result<usize> {
        let dual = self.dual(form)?;
        let sum_rank = self.generator.stack(dual.generator())?.rank();
        Ok(self.k() + dual.k() - sum_rank)
    }

    /// LCD test through nonsingularity of the Gram matrix.
    pub fn is_lcd(&self, form: Form) -> Result<bool> {
        Ok(!self.generator.gram(form)?.det()?.is_zero())
    }

    pub fn gram(&self, form: Form) -> Result<Matrix> {
        self.generator.gram(form)
    }

    fn check_budget(&self) -> Result<()> {
        let needed = (self.field.q() as u128)
            .checked_pow(self.k() as u32)
            .unwrap_or(u128::MAX);
        if needed > CODEWORD_BUDGET {
            return Err(Error::Budget { needed, budget: CODEWORD_BUDGET as u64 });
        }
        Ok(())
    }

    pub fn encode(&self, message: &[Fe]) -> Vec<Fe> {
        let f = self.field;
        let mut word = vec![Fe::ZERO; self.n];
        for (r, &m) in message.iter().enumerate() {
            if m.is_zero() {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(self.generator.row(r)) {
                *w = f.add(*w, f.mul(m, g));
            }
        }
        word
    }

    /// All `q^k` codewords, messages in lexicographic order.
    pub fn codewords(&self) -> Result<Codewords<'_>> {
        self.check_budget()?;
        Ok(Codewords { code: self, message: Some(vec![Fe::ZERO; self.k()]) })
    }

    /// Minimum Hamming weight of a nonzero codeword.
    pub fn min_distance(&self) -> Result<usize> {
        if self.is_zero_code() {
            return Err(Error::Domain("the zero code has no nonzero codeword".into()));
        }
        if self.k() == 2 {
            // one codeword per scalar class: (0,1), (1,0), (1,1), ..., (1,q-1)
            let f = self.field;
            let mut best = usize::MAX;
            best = best.min(weight(self.generator.row(1)));
            for mu in f.elements() {
                best = best.min(weight(&self.encode(&[Fe::ONE, mu])));
            }
            return Ok(best);
        }
        self.check_budget()?;
        let mut best = usize::MAX;
        for word in self.codewords()?.skip(1) {
            best = best.min(weight(&word));
        }
        Ok(best)
    }

    pub fn weight_distribution(&self) -> Result<WeightDistribution> {
        let mut counts = vec![0u64; self.n + 1];
        for word in self.codewords()? {
            counts[weight(&word)] += 1;
        }
        Ok(WeightDistribution { counts })
    }

    /// Parses the generator-matrix text format: a header line `q n k`
    /// followed by `k` rows of `n` digits.
    pub fn parse(text: &str) -> Result<LinearCode> {
        LinearCode::new(parse_generator(text)?)
    }

    /// Serializes to the generator-matrix text format (trailing newline included).
    pub fn to_text(&self) -> String {
        format_generator(&self.generator)
    }
}

pub struct Codewords<'a> {
    code: &'a LinearCode,
    message: Option<Vec<Fe>>,
}

impl Iterator for Codewords<'_> {
    type Item = Vec<Fe>;

    fn next(&mut self) -> Option<Vec<Fe>> {
        let msg = self.message.as_mut()?;
        let word = self.code.encode(msg);
        // odometer, last coordinate fastest
        let q = self.code.field.order();
        let mut i = msg.len();
        loop {
            if i == 0 {
                self.message = None;
                break;
            }
            i -= 1;
            let v = msg[i].value() + 1;
            if v < q {
                msg[i] = Fe::raw(v);
                break;
            }
            msg[i] = Fe::ZERO;
        }
        Some(word)
    }
}

pub fn parse_generator(text: &str) -> Result<Matrix> {
    let mut lines = text.lines().enumerate();
    let (_, header) = lines
        .next()
        .ok_or(Error::Parse { line: 1, msg: "empty input".into() })?;
    let nums: Vec<&str> = header.split_whitespace().collect();
    if nums.len() != 3 {
        return Err(Error::Parse { line: 1, msg: "header must be `q n k`".into() });
    }
    let parse_num = |s: &str| {
        s.parse::<usize>()
            .map_err(|_| Error::Parse { line: 1, msg: format!("'{s}' is not a nonnegative integer") })
    };
    let (q, n, k) = (parse_num(nums[0])?, parse_num(nums[1])?, parse_num(nums[2])?);
    let field = Field::new(q as u32).map_err(|e| Error::Parse { line: 1, msg: e.to_string() })?;
    if k == 0 || n == 0 {
        return Err(Error::Parse { line: 1, msg: "n and k must be positive".into() });
    }
    let mut data = Vec::with_capacity(n * k);
    for r in 0..k {
        let (idx, line) = lines.next().ok_or(Error::Parse {
            line: r + 2,
            msg: format!("expected {k} rows, found {r}"),
        })?;
        let line = line.strip_suffix('\r').unwrap_or(line);
        let lineno = idx + 1;
        if line.chars().count() != n {
            return Err(Error::Parse {
                line: lineno,
                msg: format!("row has {} symbols, expected {n}", line.chars().count()),
            });
        }
        for ch in line.chars() {
            let v = ch
                .to_digit(10)
                .filter(|&d| d < q as u32)
                .ok_or_else(|| Error::Parse {
                    line: lineno,
                    msg: format!("'{ch}' is not a symbol of GF({q})"),
                })?;
            data.push(Fe::raw(v as u8));
        }
    }
    for (idx, line) in lines {
        if !line.trim().is_empty() {
            return Err(Error::Parse { line: idx + 1, msg: "unexpected trailing row".into() });
        }
    }
    Matrix::new(field, k, n, data)
}

pub fn format_generator(g: &Matrix) -> String {
    let mut out = String::new();
    let _ = writeln!(out, "{} {} {}", g.field().order(), g.cols(), g.rows());
    for r in 0..g.rows() {
        for x in g.row(r) {
            let _ = write!(out, "{x}");
        }
        out.push('\n');
    }
    out
}
