//! Monomial equivalence and canonical forms of two-dimensional codes.
//!
//! Two codes are equivalent when one is obtained from the other by
//! permuting coordinates and scaling them by nonzero constants. Because a
//! code is a row space, the generator basis may also be re-chosen freely;
//! for `k = 2` the combined action on a column profile is the action of
//! PGL(2, q) on the `q + 1` projective points, with the zero column fixed.

use std::sync::OnceLock;

use serde::{Serialize, Serializer};

use crate::algebra::{Fe, Field, Matrix};
use crate::code::LinearCode;
use crate::profile::{normalize, point_index, projective_points, type_index, ColumnProfile};
use crate::{Error, Result};

/// A coordinate permutation combined with nonzero coordinate scalings.
///
/// Applied to a generator, output column `l` is `scales[sigma[l]]` times
/// input column `sigma[l]`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct MonomialMap {
    sigma: Vec<usize>,
    scales: Vec<Fe>,
}

impl MonomialMap {
    pub fn new(sigma: Vec<usize>, scales: Vec<Fe>) -> Result<MonomialMap> {
        let n = sigma.len();
        if scales.len() != n {
            return Err(Error::Shape(format!("{n} positions but {} scales", scales.len())));
        }
        let mut seen = vec![false; n];
        for &s in &sigma {
            if s >= n || std::mem::replace(&mut seen[s], true) {
                return Err(Error::Domain("sigma is not a permutation".into()));
            }
        }
        if scales.iter().any(|a| a.is_zero()) {
            return Err(Error::Domain("monomial scales must be nonzero".into()));
        }
        Ok(MonomialMap { sigma, scales })
    }

    pub fn identity(n: usize) -> MonomialMap {
        MonomialMap { sigma: (0..n).collect(), scales: vec![Fe::ONE; n] }
    }

    pub fn permutation(sigma: Vec<usize>) -> Result<MonomialMap> {
        let n = sigma.len();
        MonomialMap::new(sigma, vec![Fe::ONE; n])
    }

    pub fn scaling(scales: Vec<Fe>) -> Result<MonomialMap> {
        MonomialMap::new((0..scales.len()).collect(), scales)
    }

    pub fn len(&self) -> usize {
        self.sigma.len()
    }

    pub fn is_empty(&self) -> bool {
        self.sigma.is_empty()
    }

    pub fn sigma(&self) -> &[usize] {
        &self.sigma
    }

    pub fn scales(&self) -> &[Fe] {
        &self.scales
    }

    pub fn apply_matrix(&self, g: &Matrix) -> Result<Matrix> {
        if g.cols() != self.len() {
            return Err(Error::Shape(format!(
                "map of length {} applied to {} columns",
                self.len(),
                g.cols()
            )));
        }
        let f = g.field();
        if let Some(bad) = self.scales.iter().find(|&&a| !f.contains(a)) {
            return Err(Error::InvalidElement { q: f.order(), value: bad.value() });
        }
        let mut data = Vec::with_capacity(g.rows() * g.cols());
        for r in 0..g.rows() {
            for &src in &self.sigma {
                data.push(f.mul(self.scales[src], g.get(r, src)));
            }
        }
        Matrix::new(f, g.rows(), g.cols(), data)
    }
}

pub fn apply_monomial(code: &LinearCode, map: &MonomialMap) -> Result<LinearCode> {
    LinearCode::new(map.apply_matrix(code.generator())?)
}

/// One equivalence class of `k = 2` codes, represented by its canonical profile.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CanonicalClass {
    pub canonical_profile: ColumnProfile,
    /// Number of raw profiles in the search that landed in this class.
    pub class_size_hint: u64,
}

impl CanonicalClass {
    pub fn field(&self) -> Field {
        self.canonical_profile.field()
    }

    pub fn n(&self) -> usize {
        self.canonical_profile.n()
    }
}

impl Serialize for CanonicalClass {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        #[derive(Serialize)]
        struct Wire<'a> {
            #[serde(flatten)]
            profile: &'a crate::profile::ProfileJson,
            class_size_hint: u64,
        }
        Wire { profile: &self.canonical_profile.to_json(), class_size_hint: self.class_size_hint }
            .serialize(s)
    }
}

/// Distinct permutations of the projective points induced by GL(2, q).
pub fn point_permutations(field: Field) -> &'static [Vec<usize>] {
    static TABLES: [OnceLock<Vec<Vec<usize>>>; 3] = [OnceLock::new(), OnceLock::new(), OnceLock::new()];
    let slot = match field {
        Field::Gf2 => &TABLES[0],
        Field::Gf3 => &TABLES[1],
        Field::Gf4 => &TABLES[2],
    };
    slot.get_or_init(|| build_point_permutations(field))
}

fn build_point_permutations(f: Field) -> Vec<Vec<usize>> {
    let points = projective_points(f);
    let mut perms: Vec<Vec<usize>> = Vec::new();
    for a in f.elements() {
        for b in f.elements() {
            for c in f.elements() {
                for d in f.elements() {
                    let det = f.sub(f.mul(a, d), f.mul(b, c));
                    if det.is_zero() {
                        continue;
                    }
                    let perm: Vec<usize> = points
                        .iter()
                        .map(|&(x, y)| {
                            let image = (f.add(f.mul(a, x), f.mul(b, y)), f.add(f.mul(c, x), f.mul(d, y)));
                            point_index(f, image).expect("invertible maps send points to points")
                        })
                        .collect();
                    perms.push(perm);
                }
            }
        }
    }
    perms.sort();
    perms.dedup();
    perms
}

/// Orbit minimum of a `k = 2` profile under basis change and column scaling.
///
/// Nonzero columns are merged onto their normalized projective point; the
/// result is the lexicographically smallest count vector reachable by
/// relabeling points through PGL(2, q). The zero-column count is kept.
pub fn canonical_profile(p: &ColumnProfile) -> Result<ColumnProfile> {
    if !p.is_admissible() {
        return Err(Error::RankDeficient { rank: 1, rows: 2 });
    }
    let f = p.field();
    let mult = p.point_counts();
    let mut best: Option<Vec<u32>> = None;
    for perm in point_permutations(f) {
        let mut image = vec![0u32; mult.len()];
        for (src, &dst) in perm.iter().enumerate() {
            image[dst] = mult[src];
        }
        if best.as_ref().is_none_or(|b| image < *b) {
            best = Some(image);
        }
    }
    let best = best.expect("the group contains the identity");
    let mut counts = vec![0u32; f.q() * f.q()];
    counts[0] = p.count(Fe::ZERO, Fe::ZERO);
    for (idx, &(i, j)) in projective_points(f).iter().enumerate() {
        debug_assert_eq!(normalize(f, (i, j)), Some((i, j)));
        counts[type_index(f, i, j)] = best[idx];
    }
    ColumnProfile::new(f, counts)
}

/// Equivalence test for two `[n, 2]` codes over the same field.
pub fn are_equivalent_k2(a: &LinearCode, b: &LinearCode) -> Result<bool> {
    if a.k() != 2 || b.k() != 2 {
        return Err(Error::Unsupported(
            "equivalence testing is only implemented for two-dimensional codes".into(),
        ));
    }
    if a.field() != b.field() || a.n() != b.n() {
        return Err(Error::Shape("codes over different fields or lengths".into()));
    }
    let pa = canonical_profile(&ColumnProfile::of_matrix(a.generator())?)?;
    let pb = canonical_profile(&ColumnProfile::of_matrix(b.generator())?)?;
    Ok(pa == pb)
}
