//! Ground truth by exhaustive search.
//!
//! Two-dimensional codes are enumerated as column profiles (column order
//! never changes a code's parameters, so this removes the `n!` factor).
//! Other dimensions are enumerated as reduced row echelon generators,
//! one per subspace, grouped by pivot pattern. Work is split into
//! [`SearchPartition`]s which are evaluated independently and merged by
//! order-independent reductions, so results do not depend on `jobs`.

use std::collections::BTreeMap;

use rayon::prelude::*;
use serde::Serialize;

use crate::algebra::{det_in_place, Fe, Field, Form};
use crate::bounds::{ld2_exact, BoundKind, LdRecord, Parameter, Provenance};
use crate::code::LinearCode;
use crate::equiv::{canonical_profile, CanonicalClass};
use crate::profile::{for_each_composition, ColumnProfile, ProfileKernel};
use crate::{Error, Result};

pub const DEFAULT_BUDGET: u64 = 1 << 26;

/// Search limits. `jobs = 0` uses rayon's default thread count.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub struct SearchOptions {
    /// Maximum number of candidate codes a single search may visit.
    pub budget: u64,
    pub jobs: usize,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions { budget: DEFAULT_BUDGET, jobs: 0 }
    }
}

impl SearchOptions {
    pub fn with_jobs(jobs: usize) -> Self {
        SearchOptions { jobs, ..Default::default() }
    }
}

/// A disjoint slice of the search space.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub enum SearchPartition {
    /// Profiles whose first two counts (zero column, then `(0,1)`) are fixed.
    ProfilePrefix([u32; 2]),
    /// RREF generators with these pivot columns.
    PivotPattern(Vec<usize>),
}

pub fn profile_partitions(n: usize) -> Vec<SearchPartition> {
    let n = n as u32;
    let mut out = Vec::new();
    for a in 0..=n {
        for b in 0..=n - a {
            out.push(SearchPartition::ProfilePrefix([a, b]));
        }
    }
    out
}

pub fn pivot_partitions(n: usize, k: usize) -> Vec<SearchPartition> {
    let mut out = Vec::new();
    let mut combo: Vec<usize> = (0..k).collect();
    if k > n {
        return out;
    }
    loop {
        out.push(SearchPartition::PivotPattern(combo.clone()));
        let Some(i) = (0..k).rev().find(|&i| combo[i] != i + n - k) else {
            break;
        };
        combo[i] += 1;
        for j in i + 1..k {
            combo[j] = combo[j - 1] + 1;
        }
    }
    out
}

pub fn binomial(n: u128, k: u128) -> u128 {
    let k = k.min(n - k.min(n));
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc.saturating_mul(n - i) / (i + 1);
    }
    acc
}

/// Number of column profiles of length `n` (zero columns and
/// rank-deficient ones included).
pub fn profile_count(field: Field, n: usize) -> u128 {
    let parts = (field.q() * field.q()) as u128;
    binomial(n as u128 + parts - 1, parts - 1)
}

/// Number of `k`-dimensional subspaces of GF(q)^n, saturating at `u128::MAX`.
pub fn gaussian_binomial(field: Field, n: usize, k: usize) -> u128 {
    if k > n {
        return 0;
    }
    let q = field.q() as u128;
    let (mut num, mut den) = (1u128, 1u128);
    for i in 0..k as u32 {
        let a = q.checked_pow(n as u32 - i).map(|x| x - 1);
        let b = q.checked_pow(i + 1).map(|x| x - 1);
        match (a.and_then(|a| num.checked_mul(a)), b.and_then(|b| den.checked_mul(b))) {
            (Some(x), Some(y)) => {
                num = x;
                den = y;
            }
            _ => return u128::MAX,
        }
        let g = gcd(num, den);
        num /= g;
        den /= g;
    }
    num / den
}

fn gcd(mut a: u128, mut b: u128) -> u128 {
    while b != 0 {
        (a, b) = (b, a % b);
    }
    a
}

fn check_budget(needed: u128, opts: &SearchOptions) -> Result<()> {
    if needed > opts.budget as u128 {
        Err(Error::Budget { needed, budget: opts.budget })
    } else {
        Ok(())
    }
}

fn run_partitions<T, F>(opts: &SearchOptions, parts: &[SearchPartition], work: F) -> Result<Vec<T>>
where
    T: Send,
    F: Fn(&SearchPartition) -> T + Sync,
{
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs)
        .build()
        .map_err(|e| Error::Domain(format!("cannot start worker pool: {e}")))?;
    Ok(pool.install(|| parts.par_iter().map(&work).collect()))
}

fn check_params(field: Field, n: usize, k: usize, form: Form) -> Result<()> {
    field.check_form(form)?;
    if k == 0 || k > n {
        return Err(Error::Domain(format!("need 1 <= k <= n, got k = {k}, n = {n}")));
    }
    Ok(())
}

fn prefix_of(part: &SearchPartition) -> &[u32] {
    match part {
        SearchPartition::ProfilePrefix(head) => head,
        SearchPartition::PivotPattern(_) => unreachable!("profile search over a pivot partition"),
    }
}

/// Exact `LD(n, k)` by exhaustive search.
pub fn brute_ld(field: Field, n: usize, k: usize, form: Form, opts: &SearchOptions) -> Result<LdRecord> {
    check_params(field, n, k, form)?;
    let value = if k == 2 { ld_k2(field, n, form, opts)? } else { ld_rref(field, n, k, form, opts)? };
    Ok(LdRecord {
        q: field.order(),
        n,
        parameter: Parameter::Dimension(k),
        form,
        value,
        provenance: Provenance::Oracle,
        kind: BoundKind::Exact,
    })
}

/// Same as [`brute_ld`] but always through RREF enumeration, even for `k = 2`.
pub fn brute_ld_rref(field: Field, n: usize, k: usize, form: Form, opts: &SearchOptions) -> Result<usize> {
    check_params(field, n, k, form)?;
    ld_rref(field, n, k, form, opts)
}

fn ld_k2(field: Field, n: usize, form: Form, opts: &SearchOptions) -> Result<usize> {
    check_budget(profile_count(field, n), opts)?;
    let kernel = ProfileKernel::new(field, form)?;
    let parts = profile_partitions(n);
    let parts_q = field.q() * field.q();
    let best = run_partitions(opts, &parts, |part| {
        let mut best = 0usize;
        for_each_composition(n as u32, parts_q, prefix_of(part), |c| {
            if !kernel.is_admissible(c) {
                return;
            }
            let w = kernel.min_weight(c, n);
            if w > best && kernel.is_lcd(c) {
                best = w;
            }
        });
        best
    })?;
    Ok(best.into_iter().max().unwrap_or(0))
}

/// Calls `visit` on every RREF `k×n` generator with the given pivots.
fn for_each_rref<F: FnMut(&[Fe])>(field: Field, n: usize, pivots: &[usize], mut visit: F) {
    let k = pivots.len();
    let mut g = vec![Fe::ZERO; k * n];
    let mut free = Vec::new();
    for (r, &p) in pivots.iter().enumerate() {
        g[r * n + p] = Fe::ONE;
        for c in p + 1..n {
            if !pivots.contains(&c) {
                free.push(r * n + c);
            }
        }
    }
    let q = field.order();
    loop {
        visit(&g);
        let mut i = free.len();
        loop {
            if i == 0 {
                return;
            }
            i -= 1;
            let pos = free[i];
            let v = g[pos].value() + 1;
            if v < q {
                g[pos] = Fe::raw(v);
                break;
            }
            g[pos] = Fe::ZERO;
        }
    }
}

fn gram_singular(field: Field, form: Form, k: usize, n: usize, g: &[Fe], buf: &mut Vec<Fe>) -> bool {
    buf.clear();
    for i in 0..k {
        for j in 0..k {
            buf.push(field.inner(form, &g[i * n..(i + 1) * n], &g[j * n..(j + 1) * n]));
        }
    }
    det_in_place(field, k, buf).is_zero()
}

/// Minimum weight of the code spanned by the `k` rows of `g`, or `None`
/// as soon as some nonzero codeword has weight `<= floor`.
fn min_weight_above(field: Field, k: usize, n: usize, g: &[Fe], floor: usize, word: &mut [Fe]) -> Option<usize> {
    let q = field.order();
    let mut best = usize::MAX;
    let mut msg = vec![Fe::ZERO; k];
    for lead in 0..k {
        msg.iter_mut().for_each(|m| *m = Fe::ZERO);
        msg[lead] = Fe::ONE;
        loop {
            word.iter_mut().for_each(|w| *w = Fe::ZERO);
            for (r, &m) in msg.iter().enumerate().skip(lead) {
                if m.is_zero() {
                    continue;
                }
                for (w, &x) in word.iter_mut().zip(&g[r * n..(r + 1) * n]) {
                    *w = field.add(*w, field.mul(m, x));
                }
            }
            let wt = word.iter().filter(|x| !x.is_zero()).count();
            if wt <= floor {
                return None;
            }
            best = best.min(wt);
            // advance the coordinates after the leading 1
            let mut i = k;
            loop {
                if i == lead + 1 {
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
            if i == lead + 1 && msg[lead + 1..].iter().all(|m| m.is_zero()) {
                break;
            }
        }
    }
    Some(best)
}

fn ld_rref(field: Field, n: usize, k: usize, form: Form, opts: &SearchOptions) -> Result<usize> {
    check_budget(gaussian_binomial(field, n, k), opts)?;
    let parts = pivot_partitions(n, k);
    let best = run_partitions(opts, &parts, |part| {
        let SearchPartition::PivotPattern(pivots) = part else { unreachable!() };
        let mut best = 0usize;
        let mut buf = Vec::with_capacity(k * k);
        let mut word = vec![Fe::ZERO; n];
        for_each_rref(field, n, pivots, |g| {
            if gram_singular(field, form, k, n, g, &mut buf) {
                return;
            }
            if let Some(w) = min_weight_above(field, k, n, g, best, &mut word) {
                best = w;
            }
        });
        best
    })?;
    Ok(best.into_iter().max().unwrap_or(0))
}

#[derive(Debug, Clone, Copy, Default)]
struct DimScan {
    any_at_least_d: bool,
    lcd_exactly_d: bool,
}

impl DimScan {
    fn merge(self, other: DimScan) -> DimScan {
        DimScan {
            any_at_least_d: self.any_at_least_d || other.any_at_least_d,
            lcd_exactly_d: self.lcd_exactly_d || other.lcd_exactly_d,
        }
    }
}

/// Largest `k` such that some `[n, k]` LCD code has minimum distance
/// exactly `d`; 0 if there is none.
///
/// Dimensions are scanned upward and the scan stops at the first `k`
/// without any code (LCD or not) of distance `>= d`, because every such
/// code of dimension `k + 1` contains one of dimension `k`.
pub fn brute_max_dim(field: Field, n: usize, d: usize, form: Form, opts: &SearchOptions) -> Result<usize> {
    field.check_form(form)?;
    if d == 0 || n == 0 {
        return Err(Error::Domain("need n >= 1 and d >= 1".into()));
    }
    let mut best = 0;
    for k in 1..=n {
        let scan = if k == 2 { scan_k2(field, n, d, form, opts)? } else { scan_rref(field, n, k, d, form, opts)? };
        if scan.lcd_exactly_d {
            best = k;
        }
        if !scan.any_at_least_d {
            break;
        }
    }
    Ok(best)
}

fn scan_k2(field: Field, n: usize, d: usize, form: Form, opts: &SearchOptions) -> Result<DimScan> {
    check_budget(profile_count(field, n), opts)?;
    let kernel = ProfileKernel::new(field, form)?;
    let parts_q = field.q() * field.q();
    let scans = run_partitions(opts, &profile_partitions(n), |part| {
        let mut s = DimScan::default();
        for_each_composition(n as u32, parts_q, prefix_of(part), |c| {
            if !kernel.is_admissible(c) {
                return;
            }
            let w = kernel.min_weight(c, n);
            if w >= d {
                s.any_at_least_d = true;
                if w == d && kernel.is_lcd(c) {
                    s.lcd_exactly_d = true;
                }
            }
        });
        s
    })?;
    Ok(scans.into_iter().fold(DimScan::default(), DimScan::merge))
}

fn scan_rref(field: Field, n: usize, k: usize, d: usize, form: Form, opts: &SearchOptions) -> Result<DimScan> {
    check_budget(gaussian_binomial(field, n, k), opts)?;
    let scans = run_partitions(opts, &pivot_partitions(n, k), |part| {
        let SearchPartition::PivotPattern(pivots) = part else { unreachable!() };
        let mut s = DimScan::default();
        let mut buf = Vec::with_capacity(k * k);
        let mut word = vec![Fe::ZERO; n];
        for_each_rref(field, n, pivots, |g| {
            if s.lcd_exactly_d {
                return;
            }
            let Some(w) = min_weight_above(field, k, n, g, d.saturating_sub(1), &mut word) else {
                return;
            };
            s.any_at_least_d = true;
            if w == d && !gram_singular(field, form, k, n, g, &mut buf) {
                s.lcd_exactly_d = true;
            }
        });
        s
    })?;
    Ok(scans.into_iter().fold(DimScan::default(), DimScan::merge))
}

/// A class-count claim that disagrees with the search.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct Discrepancy {
    pub claimed: usize,
    pub computed: usize,
    pub note: String,
}

/// All optimal `[n, 2]` LCD codes of a given distance, up to equivalence.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct EnumerationReport {
    pub q: u8,
    pub n: usize,
    pub k: usize,
    pub form: Form,
    pub target_distance: usize,
    /// Admissible LCD profiles with minimum weight equal to the target.
    pub raw_lcd_count: u64,
    pub computed_count: usize,
    /// Classes whose codes have a zero coordinate (padded shorter codes).
    pub zero_column_classes: usize,
    pub paper_claim: Option<usize>,
    pub discrepancy: Option<Discrepancy>,
    pub classes: Vec<CanonicalClass>,
}

/// Published class count for binary optimal `[n, 2]` LCD codes, when one exists.
pub fn published_binary_class_count(n: usize) -> Option<usize> {
    // n = 6t+1, 6t-2, 6t+2 (t >= 1): two classes; n = 6t+3 (t >= 1): one.
    match n % 6 {
        1 if n >= 7 => Some(2),
        4 if n >= 4 => Some(2),
        2 if n >= 8 => Some(2),
        3 if n >= 9 => Some(1),
        _ => None,
    }
}

/// Enumerates admissible LCD profiles of minimum weight `target` (default:
/// the searched `LD(n, 2)`) and groups them by canonical form.
pub fn enumerate_optimal_k2(
    field: Field,
    n: usize,
    form: Form,
    target: Option<usize>,
    opts: &SearchOptions,
) -> Result<EnumerationReport> {
    check_params(field, n, 2, form)?;
    check_budget(profile_count(field, n), opts)?;
    let target = match target {
        Some(d) => d,
        None => brute_ld(field, n, 2, form, opts)?.value,
    };
    let kernel = ProfileKernel::new(field, form)?;
    let parts_q = field.q() * field.q();
    let maps = run_partitions(opts, &profile_partitions(n), |part| {
        let mut found: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
        for_each_composition(n as u32, parts_q, prefix_of(part), |c| {
            if !kernel.is_admissible(c) || kernel.min_weight(c, n) != target || !kernel.is_lcd(c) {
                return;
            }
            let p = ColumnProfile::new(field, c.to_vec()).expect("kernel-sized counts");
            let canon = canonical_profile(&p).expect("admissible profile");
            *found.entry(canon.counts().to_vec()).or_default() += 1;
        });
        found
    })?;
    let mut merged: BTreeMap<Vec<u32>, u64> = BTreeMap::new();
    for m in maps {
        for (key, c) in m {
            *merged.entry(key).or_default() += c;
        }
    }
    let raw_lcd_count = merged.values().sum();
    let classes: Vec<CanonicalClass> = merged
        .into_iter()
        .map(|(counts, size)| CanonicalClass {
            canonical_profile: ColumnProfile::new(field, counts).expect("kernel-sized counts"),
            class_size_hint: size,
        })
        .collect();

    for class in &classes {
        let code = LinearCode::new(class.canonical_profile.to_matrix()?)?;
        if !code.is_lcd(form)? || code.min_distance()? != target {
            return Err(Error::Postcondition(format!(
                "class representative {:?} does not re-validate",
                class.canonical_profile.counts()
            )));
        }
    }

    let optimal_binary = field == Field::Gf2
        && form == Form::Euclidean
        && ld2_exact(field, n, form).is_ok_and(|r| r.value == target && target == 2 * n / 3);
    let paper_claim = if optimal_binary { published_binary_class_count(n) } else { None };
    let computed_count = classes.len();
    let zero_column_classes = classes.iter().filter(|c| c.canonical_profile.counts()[0] > 0).count();
    let discrepancy = paper_claim.filter(|&c| c != computed_count).map(|claimed| Discrepancy {
        claimed,
        computed: computed_count,
        note: "published count treats some permutations of (S01, S10, S11) as inequivalent; \
               change of generator basis permutes all three column types"
            .into(),
    });
    Ok(EnumerationReport {
        q: field.order(),
        n,
        k: 2,
        form,
        target_distance: target,
        raw_lcd_count,
        computed_count,
        zero_column_classes,
        paper_claim,
        discrepancy,
        classes,
    })
}

/// First admissible LCD profile (in lexicographic count order) whose
/// minimum weight equals `target`.
pub fn first_profile_with_distance(field: Field, n: usize, form: Form, target: usize) -> Result<Option<ColumnProfile>> {
    let kernel = ProfileKernel::new(field, form)?;
    let mut found: Option<Vec<u32>> = None;
    for_each_composition(n as u32, field.q() * field.q(), &[], |c| {
        if found.is_none() && kernel.is_admissible(c) && kernel.min_weight(c, n) == target && kernel.is_lcd(c) {
            found = Some(c.to_vec());
        }
    });
    found.map(|c| ColumnProfile::new(field, c)).transpose()
}
