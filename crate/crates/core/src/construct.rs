//! Explicit optimal `[n, 2]` LCD codes and the LCD extension step.
//!
//! Every construction is a [`ConstructionRecipe`]: a family of column
//! profiles indexed by `t`, valid for `n = modulus·t + shift`. The binary
//! and ternary families are the published ones. The GF(4) families start
//! from a searched base profile at the smallest length of each residue
//! class mod 5 and add one column per projective point for each step in
//! `t`; that adds 4 to every nonzero class weight and leaves the
//! Hermitian Gram matrix unchanged.

use std::fmt;

use serde::Serialize;

use crate::algebra::{Fe, Field, Form, Matrix};
use crate::bounds::ld2_exact;
use crate::code::LinearCode;
use crate::profile::{projective_points, type_index, ColumnProfile};
use crate::{Error, Result};

/// An affine expression `(a·t + b) / den`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct TExpr {
    pub a: i64,
    pub b: i64,
    pub den: i64,
}

const fn half(a: i64, b: i64) -> TExpr {
    TExpr { a, b, den: 2 }
}

const fn lin(a: i64, b: i64) -> TExpr {
    TExpr { a, b, den: 1 }
}

impl TExpr {
    /// Value at `t`, if it is a nonnegative integer.
    pub fn eval(&self, t: i64) -> Option<u32> {
        let num = self.a * t + self.b;
        if num < 0 || num % self.den != 0 {
            return None;
        }
        u32::try_from(num / self.den).ok()
    }
}

impl fmt::Display for TExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = match (self.a, self.b) {
            (0, b) => format!("{b}"),
            (a, 0) => format!("{a}t"),
            (a, b) if b < 0 => format!("{a}t-{}", -b),
            (a, b) => format!("{a}t+{b}"),
        };
        let body = body.replace("1t", "t").replace("-t", "-1t");
        let body = if body.starts_with("-1t") { body.replacen("-1t", "-t", 1) } else { body };
        if self.den == 1 {
            write!(f, "{body}")
        } else if self.a != 0 && self.b != 0 {
            write!(f, "({body})/{}", self.den)
        } else {
            write!(f, "{body}/{}", self.den)
        }
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "snake_case")]
pub enum Parity {
    Odd,
    Even,
}

impl Parity {
    fn matches(self, t: i64) -> bool {
        (t % 2 == 0) == (self == Parity::Even)
    }
}

/// A `t`-parametrized family of `[n, 2]` LCD codes.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct ConstructionRecipe {
    pub q: u8,
    pub form: Form,
    pub modulus: usize,
    /// `n = modulus·t + shift`.
    pub shift: i64,
    pub parity: Option<Parity>,
    pub t_min: i64,
    pub t_max: Option<i64>,
    /// Column-type counts; types not listed have count 0.
    pub assignment: Vec<((u8, u8), TExpr)>,
    pub distance: TExpr,
    /// Gram matrix shared by every member of the family, when it is constant.
    pub gram: Option<[[u8; 2]; 2]>,
    /// Whether `gram` is the matrix shown alongside the published construction.
    pub gram_published: bool,
}

impl ConstructionRecipe {
    pub fn field(&self) -> Field {
        Field::new(self.q as u32).expect("recipes use supported fields")
    }

    pub fn residue(&self) -> usize {
        self.shift.rem_euclid(self.modulus as i64) as usize
    }

    pub fn label(&self) -> String {
        let mut s = match self.shift {
            0 => format!("n={}t", self.modulus),
            b if b < 0 => format!("n={}t{b}", self.modulus),
            b => format!("n={}t+{b}", self.modulus),
        };
        match self.parity {
            Some(Parity::Odd) => s.push_str(", t odd"),
            Some(Parity::Even) => s.push_str(", t even"),
            None => {}
        }
        match self.t_max {
            Some(hi) if hi == self.t_min => s.push_str(&format!(", t={hi} only")),
            Some(hi) => s.push_str(&format!(", {}<=t<={hi}", self.t_min)),
            None if self.t_min > 0 => s.push_str(&format!(", t>={}", self.t_min)),
            None => {}
        }
        s
    }

    pub fn accepts(&self, t: i64) -> bool {
        t >= self.t_min
            && self.t_max.is_none_or(|hi| t <= hi)
            && self.parity.is_none_or(|p| p.matches(t))
            && self.length(t) >= 2
    }

    pub fn length(&self, t: i64) -> i64 {
        self.modulus as i64 * t + self.shift
    }

    /// The `t` with `length(t) = n`, if `n` is in this recipe's range.
    pub fn t_for(&self, n: usize) -> Option<i64> {
        let m = self.modulus as i64;
        let diff = n as i64 - self.shift;
        if diff.rem_euclid(m) != 0 {
            return None;
        }
        let t = diff / m;
        self.accepts(t).then_some(t)
    }

    pub fn claimed_distance(&self, t: i64) -> Result<usize> {
        self.distance.eval(t).map(|d| d as usize).ok_or_else(|| self.bad_t(t))
    }

    pub fn profile(&self, t: i64) -> Result<ColumnProfile> {
        if !self.accepts(t) {
            return Err(self.bad_t(t));
        }
        let field = self.field();
        let mut counts = vec![0u32; field.q() * field.q()];
        for &((i, j), expr) in &self.assignment {
            let v = expr.eval(t).ok_or_else(|| self.bad_t(t))?;
            counts[type_index(field, field.elem(i)?, field.elem(j)?)] += v;
        }
        ColumnProfile::new(field, counts)
    }

    fn bad_t(&self, t: i64) -> Error {
        Error::Domain(format!("t = {t} is outside the recipe {}", self.label()))
    }
}

fn binary_recipes() -> Vec<ConstructionRecipe> {
    let family = |shift, t_min, s01, s10, s11, distance, gram, gram_published| ConstructionRecipe {
        q: 2,
        form: Form::Euclidean,
        modulus: 6,
        shift,
        parity: None,
        t_min,
        t_max: None,
        assignment: vec![((0, 1), s01), ((1, 0), s10), ((1, 1), s11)],
        distance,
        gram: Some(gram),
        gram_published,
    };
    vec![
        family(1, 1, lin(2, -1), lin(2, 1), lin(2, 1), lin(4, 0), [[0, 1], [1, 0]], false),
        family(-2, 1, lin(2, -1), lin(2, -1), lin(2, 0), lin(4, -2), [[1, 0], [0, 1]], false),
        family(2, 0, lin(2, 0), lin(2, 1), lin(2, 1), lin(4, 1), [[0, 1], [1, 1]], false),
        family(3, 0, lin(2, 1), lin(2, 1), lin(2, 1), lin(4, 2), [[0, 1], [1, 0]], true),
    ]
}

fn ternary(
    shift: i64,
    parity: Parity,
    t_min: i64,
    assignment: &[((u8, u8), TExpr)],
    distance: TExpr,
    gram: [[u8; 2]; 2],
) -> ConstructionRecipe {
    ConstructionRecipe {
        q: 3,
        form: Form::Euclidean,
        modulus: 4,
        shift,
        parity: Some(parity),
        t_min,
        t_max: None,
        assignment: assignment.to_vec(),
        distance,
        gram: Some(gram),
        gram_published: true,
    }
}

fn ternary_recipes() -> Vec<ConstructionRecipe> {
    use Parity::{Even, Odd};
    let (up, dn) = (half(1, 1), half(1, -1));
    let (h, h_up, h_dn) = (half(1, 0), half(1, 2), half(1, -2));
    let mut out = vec![
        ternary(
            1,
            Odd,
            1,
            &[((0, 1), up), ((0, 2), up), ((1, 0), up), ((1, 2), up), ((2, 1), up), ((1, 1), dn), ((2, 0), dn), ((2, 2), dn)],
            lin(3, 0),
            [[0, 1], [1, 1]],
        ),
        ternary(
            1,
            Even,
            2,
            &[((0, 1), h), ((0, 2), h), ((1, 0), h), ((1, 1), h), ((1, 2), h), ((2, 1), h_dn), ((2, 0), h_up), ((2, 2), h_up)],
            lin(3, 0),
            [[1, 2], [2, 0]],
        ),
        ternary(
            2,
            Odd,
            1,
            &[((0, 1), up), ((0, 2), up), ((1, 1), up), ((1, 2), up), ((2, 0), up), ((2, 2), up), ((1, 0), dn), ((2, 1), dn)],
            lin(3, 1),
            [[1, 1], [1, 2]],
        ),
        ternary(
            2,
            Even,
            0,
            &[((0, 1), h), ((0, 2), h), ((1, 2), h), ((2, 0), h), ((2, 1), h), ((2, 2), h), ((1, 0), h_up), ((1, 1), h_up)],
            lin(3, 1),
            [[2, 1], [1, 1]],
        ),
        ternary(
            0,
            Odd,
            1,
            &[((0, 1), dn), ((0, 2), dn), ((1, 1), dn), ((1, 2), dn), ((1, 0), up), ((2, 0), up), ((2, 1), up), ((2, 2), up)],
            lin(3, -1),
            [[1, 0], [0, 2]],
        ),
        ternary(
            0,
            Even,
            2,
            &[((0, 1), h), ((0, 2), h), ((1, 0), h), ((1, 1), h), ((1, 2), h), ((2, 0), h), ((2, 1), h_dn), ((2, 2), h_up)],
            lin(3, -1),
            [[0, 2], [2, 0]],
        ),
        ternary(
            3,
            Odd,
            3,
            &[
                ((0, 1), up),
                ((0, 2), up),
                ((1, 0), up),
                ((1, 1), up),
                ((1, 2), up),
                ((2, 0), up),
                ((2, 1), half(1, 3)),
                ((2, 2), half(1, -3)),
            ],
            lin(3, 1),
            [[2, 0], [0, 2]],
        ),
        ternary(
            3,
            Even,
            0,
            &[((0, 1), h), ((0, 2), h), ((1, 0), h), ((1, 1), h), ((2, 2), h), ((1, 2), h_up), ((2, 0), h_up), ((2, 1), h_up)],
            lin(3, 1),
            [[0, 1], [1, 2]],
        ),
    ];
    // n = 7 falls outside the odd 4t+3 family (it would need S22 = -1);
    // the [6, 2, 4] code plus a zero column has the required distance 4.
    let one = lin(0, 1);
    out.push(ConstructionRecipe {
        t_max: Some(1),
        gram_published: false,
        ..ternary(
            3,
            Odd,
            1,
            &[((0, 0), one), ((0, 1), one), ((0, 2), one), ((1, 1), one), ((1, 2), one), ((2, 0), one), ((2, 2), one)],
            lin(0, 4),
            [[1, 1], [1, 2]],
        )
    });
    out
}

/// Base profiles for GF(4), Hermitian: the first LCD profile (in
/// lexicographic count order) of length `n0 = 2..=6` with minimum distance
/// `LD(n0, 2)`. Counts are listed in type order `(0,0), (0,1), ..., (3,3)`.
/// Regenerate with `lcd recipes --derive`.
pub const QUATERNARY_BASES: [(usize, [u32; 16]); 5] = [
    (2, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1]),
    (3, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1]),
    (4, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2]),
    (5, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 1, 2]),
    (6, [0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 0, 1, 1, 2, 2]),
];

fn quaternary_recipes() -> Vec<ConstructionRecipe> {
    let field = Field::Gf4;
    let points: Vec<usize> = projective_points(field).into_iter().map(|(a, b)| type_index(field, a, b)).collect();
    QUATERNARY_BASES
        .iter()
        .map(|&(n0, counts)| {
            // n = 5t + (n0 mod 5), with the base profile at t = t_min
            let t_min = (n0 / 5) as i64;
            let mut assignment = Vec::new();
            for (idx, &c) in counts.iter().enumerate() {
                let step = points.contains(&idx) as i64;
                if c > 0 || step > 0 {
                    let ty = ((idx / 4) as u8, (idx % 4) as u8);
                    assignment.push((ty, lin(step, c as i64 - step * t_min)));
                }
            }
            let d0 = ld2_exact(field, n0, Form::Hermitian).expect("n0 >= 2").value as i64;
            let base = ColumnProfile::new(field, counts.to_vec()).expect("16 counts");
            let g = base.gram(Form::Hermitian).expect("GF(4) supports the Hermitian form");
            let gram = [[g.get(0, 0).value(), g.get(0, 1).value()], [g.get(1, 0).value(), g.get(1, 1).value()]];
            ConstructionRecipe {
                q: 4,
                form: Form::Hermitian,
                modulus: 5,
                shift: (n0 % 5) as i64,
                parity: None,
                t_min,
                t_max: None,
                assignment,
                distance: lin(4, d0 - 4 * t_min),
                gram: Some(gram),
                gram_published: false,
            }
        })
        .collect()
}

/// All construction recipes for a field, in lookup order.
pub fn recipes(field: Field) -> Vec<ConstructionRecipe> {
    match field {
        Field::Gf2 => binary_recipes(),
        Field::Gf3 => ternary_recipes(),
        Field::Gf4 => quaternary_recipes(),
    }
}

/// The recipe (and its `t`) used for length `n`.
pub fn recipe_for(field: Field, n: usize) -> Result<(ConstructionRecipe, i64)> {
    if n < 2 {
        return Err(Error::Domain(format!("optimal [n, 2] constructions need n >= 2, got {n}")));
    }
    if field == Field::Gf2 && matches!(n % 6, 0 | 5) {
        return Err(Error::NoOptimalLcd { n, target: 2 * n / 3, residue: n % 6 });
    }
    recipes(field)
        .into_iter()
        .find_map(|r| r.t_for(n).map(|t| (r, t)))
        .ok_or_else(|| Error::Domain(format!("no recipe covers n = {n} over {field}")))
}

/// Builds the recipe's code at `t` and checks LCD, distance and Gram.
pub fn build_recipe(recipe: &ConstructionRecipe, t: i64) -> Result<LinearCode> {
    let profile = recipe.profile(t)?;
    let code = LinearCode::new(profile.to_matrix()?)?;
    let claimed = recipe.claimed_distance(t)?;
    let d = code.min_distance()?;
    if !code.is_lcd(recipe.form)? || d != claimed {
        return Err(Error::Postcondition(format!(
            "recipe {} at t = {t} gives d = {d} (claimed {claimed}) or a non-LCD code",
            recipe.label()
        )));
    }
    if let Some(g) = recipe.gram {
        let expect = Matrix::from_rows(code.field(), &g)?;
        if code.gram(recipe.form)? != expect {
            return Err(Error::Postcondition(format!("recipe {} at t = {t}: Gram differs from {expect}", recipe.label())));
        }
    }
    Ok(code)
}

fn optimal_n2(field: Field, n: usize) -> Result<LinearCode> {
    let (recipe, t) = recipe_for(field, n)?;
    let code = build_recipe(&recipe, t)?;
    let exact = ld2_exact(field, n, recipe.form)?.value;
    if code.min_distance()? != exact {
        return Err(Error::Postcondition(format!("recipe {} misses LD({n}, 2) = {exact}", recipe.label())));
    }
    Ok(code)
}

/// An `[n, 2, ⌊2n/3⌋]` binary Euclidean LCD code, for `n mod 6 ∈ {1, 2, 3, 4}`.
pub fn optimal_binary_n2(n: usize) -> Result<LinearCode> {
    optimal_n2(Field::Gf2, n)
}

/// An `[n, 2, LD(n, 2)]` ternary Euclidean LCD code.
pub fn optimal_ternary_n2(n: usize) -> Result<LinearCode> {
    optimal_n2(Field::Gf3, n)
}

/// An `[n, 2, LD(n, 2)]` Hermitian LCD code over GF(4).
pub fn optimal_quaternary_n2(n: usize) -> Result<LinearCode> {
    optimal_n2(Field::Gf4, n)
}

/// The optimal construction for whichever field is given.
pub fn optimal_n2_for(field: Field, n: usize) -> Result<LinearCode> {
    optimal_n2(field, n)
}

fn check_extendable(code: &LinearCode) -> Result<()> {
    let field = code.field();
    if field.characteristic() == 2 {
        return Err(Error::UnsupportedCharacteristic { q: field.order() });
    }
    if code.k() >= code.n() {
        return Err(Error::Precondition(format!("the code is [{}, {}]; its dual is zero", code.n(), code.k())));
    }
    if !code.is_lcd(Form::Euclidean)? {
        return Err(Error::Precondition("the code is not Euclidean LCD".into()));
    }
    Ok(())
}

/// A dual codeword `β` with `β·β ≠ 0`.
///
/// Candidates are the rows of the reduced dual generator in order, then
/// sums `β_i + β_j` for `i < j` in lexicographic order.
pub fn find_nonisotropic_dual_vector(code: &LinearCode) -> Result<Vec<Fe>> {
    check_extendable(code)?;
    let field = code.field();
    let dual = code.dual(Form::Euclidean)?;
    let rows = dual.generator().row_vecs();
    let norm = |v: &[Fe]| field.inner(Form::Euclidean, v, v);
    if let Some(b) = rows.iter().find(|b| !norm(b).is_zero()) {
        return Ok(b.clone());
    }
    for i in 0..rows.len() {
        for j in i + 1..rows.len() {
            let sum: Vec<Fe> = rows[i].iter().zip(&rows[j]).map(|(&x, &y)| field.add(x, y)).collect();
            if !norm(&sum).is_zero() {
                return Ok(sum);
            }
        }
    }
    Err(Error::Postcondition("LCD code whose dual has no nonisotropic vector".into()))
}

/// The `[n, k + 1]` code spanned by `code` and [`find_nonisotropic_dual_vector`].
///
/// Its Gram matrix is block diagonal `diag(A, β·β)`, so it is again LCD.
pub fn extend_lcd(code: &LinearCode) -> Result<LinearCode> {
    let beta = find_nonisotropic_dual_vector(code)?;
    let extended = LinearCode::new(code.generator().push_row(&beta)?)?;
    if !extended.is_lcd(Form::Euclidean)? {
        return Err(Error::Postcondition("extension lost the LCD property".into()));
    }
    Ok(extended)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::oracle::first_profile_with_distance;

    #[test]
    fn texpr_eval_and_display() {
        assert_eq!(half(1, 1).eval(3), Some(2));
        assert_eq!(half(1, 1).eval(2), None);
        assert_eq!(lin(2, -1).eval(0), None);
        assert_eq!(lin(2, -1).to_string(), "2t-1");
        assert_eq!(half(1, 3).to_string(), "(t+3)/2");
        assert_eq!(half(1, 0).to_string(), "t/2");
        assert_eq!(lin(0, 4).to_string(), "4");
        assert_eq!(lin(1, 0).to_string(), "t");
    }

    #[test]
    fn binary_examples() {
        let c = optimal_binary_n2(7).unwrap();
        let p = ColumnProfile::of_matrix(c.generator()).unwrap();
        assert_eq!((p.count(Fe::ZERO, Fe::ONE), p.count(Fe::ONE, Fe::ZERO), p.count(Fe::ONE, Fe::ONE)), (1, 3, 3));
        assert_eq!(c.min_distance().unwrap(), 4);
        assert_eq!(c.gram(Form::Euclidean).unwrap().to_string(), "[[0,1],[1,0]]");

        let c = optimal_binary_n2(9).unwrap();
        let p = ColumnProfile::of_matrix(c.generator()).unwrap();
        assert_eq!(p.counts()[1..], [3, 3, 3]);
        assert_eq!(c.min_distance().unwrap(), 6);

        let c = optimal_binary_n2(4).unwrap();
        let p = ColumnProfile::of_matrix(c.generator()).unwrap();
        assert_eq!(p.counts()[1..], [1, 1, 2]);
        assert_eq!(c.min_distance().unwrap(), 2);

        for n in [5, 6, 11, 12] {
            assert!(matches!(optimal_binary_n2(n), Err(Error::NoOptimalLcd { .. })));
        }
        assert!(optimal_binary_n2(1).is_err());
    }

    #[test]
    fn ternary_examples() {
        let c = optimal_ternary_n2(5).unwrap();
        let p = ColumnProfile::of_matrix(c.generator()).unwrap();
        let expect = ColumnProfile::from_pairs(
            Field::Gf3,
            &[((0, 1), 1), ((0, 2), 1), ((1, 0), 1), ((1, 2), 1), ((2, 1), 1)],
        )
        .unwrap();
        assert_eq!(p, expect);
        assert_eq!(c.gram(Form::Euclidean).unwrap().to_string(), "[[0,1],[1,1]]");

        let c = optimal_ternary_n2(6).unwrap();
        assert_eq!(c.min_distance().unwrap(), 4);
        assert_eq!(c.gram(Form::Euclidean).unwrap().to_string(), "[[1,1],[1,2]]");

        let c = optimal_ternary_n2(4).unwrap();
        let p = ColumnProfile::of_matrix(c.generator()).unwrap();
        let expect =
            ColumnProfile::from_pairs(Field::Gf3, &[((1, 0), 1), ((2, 0), 1), ((2, 1), 1), ((2, 2), 1)]).unwrap();
        assert_eq!(p, expect);
        assert_eq!(c.min_distance().unwrap(), 2);
        assert_eq!(c.gram(Form::Euclidean).unwrap().to_string(), "[[1,0],[0,2]]");
    }

    #[test]
    fn every_length_is_covered() {
        for n in 2..=40 {
            for field in Field::ALL {
                if field == Field::Gf2 && matches!(n % 6, 0 | 5) {
                    continue;
                }
                let matching: Vec<_> = recipes(field).into_iter().filter(|r| r.t_for(n).is_some()).collect();
                assert_eq!(matching.len(), 1, "q={} n={n}", field.q());
            }
        }
    }

    #[test]
    fn constructions_are_optimal() {
        for n in 2..=40 {
            for field in Field::ALL {
                if field == Field::Gf2 && matches!(n % 6, 0 | 5) {
                    continue;
                }
                let code = optimal_n2_for(field, n).unwrap();
                assert_eq!(code.n(), n);
                assert_eq!(code.k(), 2);
            }
        }
    }

    #[test]
    fn assignments_sum_to_n() {
        for field in Field::ALL {
            for r in recipes(field) {
                for t in 0..=8 {
                    if r.accepts(t) {
                        assert_eq!(r.profile(t).unwrap().n() as i64, r.length(t), "{}", r.label());
                    }
                }
            }
        }
    }

    #[test]
    fn quaternary_examples() {
        let c = optimal_quaternary_n2(6).unwrap();
        assert_eq!(c.min_distance().unwrap(), 4);
        assert!(!c.gram(Form::Hermitian).unwrap().det().unwrap().is_zero());
        assert_eq!(optimal_quaternary_n2(7).unwrap().min_distance().unwrap(), 5);
        assert_eq!(optimal_quaternary_n2(5).unwrap().min_distance().unwrap(), 3);
    }

    #[test]
    fn quaternary_bases_match_search() {
        for &(n0, counts) in &QUATERNARY_BASES {
            let d = ld2_exact(Field::Gf4, n0, Form::Hermitian).unwrap().value;
            let found = first_profile_with_distance(Field::Gf4, n0, Form::Hermitian, d).unwrap().unwrap();
            assert_eq!(found.counts(), &counts[..], "n0 = {n0}");
        }
    }

    #[test]
    fn nonisotropic_examples() {
        let f = Field::Gf3;
        let c = LinearCode::from_rows(f, &[[1, 1, 0]]).unwrap();
        let b = find_nonisotropic_dual_vector(&c).unwrap();
        assert_eq!(b, f.elem(1).map(|one| vec![one, f.elem(2).unwrap(), Fe::ZERO]).unwrap());
        assert_eq!(f.inner(Form::Euclidean, &b, &b), f.elem(2).unwrap());

        let c = LinearCode::from_rows(f, &[[1, 0, 0], [0, 1, 0]]).unwrap();
        assert_eq!(find_nonisotropic_dual_vector(&c).unwrap(), vec![Fe::ZERO, Fe::ZERO, Fe::ONE]);

        let rep = LinearCode::from_rows(Field::Gf2, &[[1, 1, 1]]).unwrap();
        assert!(matches!(find_nonisotropic_dual_vector(&rep), Err(Error::UnsupportedCharacteristic { q: 2 })));
        let dual = rep.dual(Form::Euclidean).unwrap();
        assert!(dual.codewords().unwrap().all(|w| crate::algebra::weight(&w).is_multiple_of(2)));

        let not_lcd = LinearCode::from_rows(f, &[[1, 1, 1]]).unwrap();
        assert!(matches!(find_nonisotropic_dual_vector(&not_lcd), Err(Error::Precondition(_))));
        let full = LinearCode::from_rows(f, &[[1, 0], [0, 1]]).unwrap();
        assert!(matches!(extend_lcd(&full), Err(Error::Precondition(_))));
    }

    #[test]
    fn extension_examples() {
        let f = Field::Gf3;
        let c = LinearCode::from_rows(f, &[[1, 1, 0]]).unwrap();
        let e = extend_lcd(&c).unwrap();
        assert_eq!(e.k(), 2);
        assert!(c.is_subcode_of(&e));
        assert!(e.min_distance().unwrap() <= 2);

        let c = LinearCode::from_rows(f, &[[1, 0]]).unwrap();
        let e = extend_lcd(&c).unwrap();
        assert_eq!(e.generator(), &Matrix::identity(f, 2));
        assert_eq!(e.min_distance().unwrap(), 1);

        let mut c = LinearCode::from_rows(f, &[[1, 1, 0, 0]]).unwrap();
        while c.k() < 3 {
            c = extend_lcd(&c).unwrap();
            assert!(c.is_lcd(Form::Euclidean).unwrap());
        }
    }
}
