//! Exhaustive and budgeted exploration of determinant spectra over bounded
//! coefficient boxes: minimal non-trivial values, full value spectra, and the
//! `2^5 p^l` boundary sweep for `Q_{4p}`.
//!
//! Enumeration is the documented lexicographic odometer over coefficient
//! vectors `(f_0, ..., f_{m-1}, g_0, ..., g_{m-1})`, each coordinate running
//! `-b, ..., b` with the last coordinate fastest, starting from the all-`(-b)`
//! vector. Work is partitioned by the leading coordinate into equal shards;
//! shards are merged by a deterministic reduction, so parallel and serial
//! runs produce identical reports. Budgets count visited vectors and truncate
//! the enumeration to a prefix, which keeps budgeted runs reproducible too.
//!
//! The hot loop evaluates determinants exactly through a CRT-modular
//! resultant over the fixed 62-bit prime list against the deterministic bound
//! `||B||_1^N`; every value entering a report is recomputed with
//! [`det_exact`](crate::detengine::det_exact).

use crate::arith::{self, valuation};
use crate::detengine::det_exact;
use crate::groupring::{GroupFamily, GroupSpec, RingElement};
use crate::intpoly::resultant_mod_prime;
use crate::laws::{lambda_formula, LambdaReport, LambdaValue};
use crate::linalg::{crt_reconstruct, PRIMES_62};
use crate::witnesses::{witness_basic, witness_coprime, BasicKind};
use crate::{Error, Result};
use num_bigint::BigInt;
use num_traits::{Signed, ToPrimitive, Zero};
use rayon::prelude::*;
use std::collections::BTreeMap;

/// What a box search is asked to produce.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum SearchMode {
    /// Track the value of minimal magnitude >= 2.
    MinNontrivial,
    /// Collect the sorted distinct-value spectrum with multiplicities.
    Spectrum,
    /// Restrict the spectrum to the open `2^5 p^l` boundary forms.
    Frontier,
}

/// A reproducible search specification.
#[derive(Clone, Debug)]
pub struct SearchSpec {
    pub group: GroupSpec,
    /// Coefficients range over `[-coeff_bound, coeff_bound]`.
    pub coeff_bound: i64,
    /// Magnitude cap for spectrum collection (`None` = unlimited).
    pub value_cap: Option<BigInt>,
    pub mode: SearchMode,
    /// Maximum number of vectors to visit (`None` = exhaust the box).
    pub budget: Option<u64>,
    /// When set, visit `budget` seeded-random vectors instead of the prefix.
    pub seed: Option<u64>,
    /// Conservative screening filter (provably value-preserving; tests
    /// compare screened and unscreened runs).
    pub use_screen: bool,
}

impl SearchSpec {
    pub fn new(group: GroupSpec, coeff_bound: i64, mode: SearchMode) -> Self {
        SearchSpec {
            group,
            coeff_bound,
            value_cap: None,
            mode,
            budget: None,
            seed: None,
            use_screen: true,
        }
    }
}

/// One spectrum line: a value, how often it was seen, and one example element.
#[derive(Clone, Debug)]
pub struct SpectrumEntry {
    pub value: BigInt,
    pub multiplicity: u64,
    pub example: RingElement,
}

/// The outcome of a search.
#[derive(Clone, Debug)]
pub struct SearchReport {
    /// Value of minimal magnitude >= 2 among visited elements; ties broken by
    /// the smaller value, then by enumeration order.
    pub best_value: Option<BigInt>,
    pub best_element: Option<RingElement>,
    /// Sorted distinct values (spectrum and frontier modes).
    pub spectrum: Option<Vec<SpectrumEntry>>,
    /// True when the whole box (or orbit-representative grid) was visited.
    pub exhausted: bool,
    pub elements_visited: u64,
    pub seed: Option<u64>,
}

// ---- exact determinant kernel over machine integers ----

/// Per-group scratch for the CRT determinant of small-coefficient vectors.
struct DetKernel {
    family: GroupFamily,
    n: usize,
    modulus: usize,
}

impl DetKernel {
    fn new(group: GroupSpec) -> Self {
        DetKernel { family: group.family(), n: group.n(), modulus: group.x_modulus() }
    }

    /// Measure-polynomial coefficients of `(f, g)` as i64 (exact; inputs are
    /// small enough that no intermediate exceeds i64).
    fn measure(&self, f: &[i64], g: &[i64], out: &mut [i64]) {
        let n = self.modulus;
        out.fill(0);
        match self.family {
            GroupFamily::Cyclic => out.copy_from_slice(f),
            GroupFamily::Dihedral | GroupFamily::Dicyclic => {
                // autocorrelation of f minus (shifted) autocorrelation of g
                let shift = if self.family == GroupFamily::Dicyclic { self.n } else { 0 };
                for k in 0..n {
                    let mut acc = 0i64;
                    for l in 0..n {
                        acc += f[(l + k) % n] * f[l];
                    }
                    out[k] += acc;
                    let mut acc = 0i64;
                    for l in 0..n {
                        acc += g[(l + k) % n] * g[l];
                    }
                    out[(k + shift) % n] -= acc;
                }
            }
        }
    }

    /// Exact determinant from measure coefficients via CRT-modular resultants
    /// against `x^N - 1`, with the deterministic bound `(sum |B_i|)^N`.
    fn det_from_measure(&self, b: &[i64]) -> BigInt {
        let s: u128 = b.iter().map(|&c| c.unsigned_abs() as u128).sum();
        if s == 0 {
            return BigInt::zero();
        }
        let n = self.modulus;
        let bits_s = 128 - s.leading_zeros() as u64;
        let need_bits = bits_s * n as u64 + 2;
        let count = (need_bits / 61 + 1) as usize;
        assert!(count <= PRIMES_62.len(), "coefficient bound too large for the fixed prime list");
        let mut xn1 = vec![0u64; n + 1];
        let mut residues = Vec::with_capacity(count);
        let moduli = &PRIMES_62[..count];
        let mut bp = vec![0u64; n];
        for &q in moduli {
            xn1[0] = q - 1;
            xn1[n] = 1;
            for (i, &c) in b.iter().enumerate() {
                bp[i] = c.rem_euclid(q as i64) as u64;
            }
            residues.push(resultant_mod_prime(&xn1, &bp, q));
        }
        crt_reconstruct(&residues, moduli)
    }

    fn det(&self, f: &[i64], g: &[i64], scratch: &mut [i64]) -> BigInt {
        self.measure(f, g, scratch);
        self.det_from_measure(scratch)
    }
}

fn element_from_parts(group: GroupSpec, f: &[i64], g: &[i64]) -> RingElement {
    let gp = group.has_y().then_some(g);
    RingElement::from_i64s(group, f, gp).unwrap()
}

// ---- lexicographic odometer ----

/// Maps a vector index (row-major, first coordinate most significant) to the
/// coefficient vector over `[-b, b]`.
fn vector_at(index: u128, len: usize, b: i64) -> Vec<i64> {
    let base = (2 * b + 1) as u128;
    let mut v = vec![-b; len];
    let mut ix = index;
    for k in (0..len).rev() {
        v[k] = (ix % base) as i64 - b;
        ix /= base;
    }
    debug_assert_eq!(ix, 0);
    v
}

/// Advances the odometer; returns false on wrap-around.
fn advance(v: &mut [i64], b: i64) -> bool {
    for k in (0..v.len()).rev() {
        if v[k] < b {
            v[k] += 1;
            return true;
        }
        v[k] = -b;
    }
    false
}

#[derive(Clone)]
struct ShardResult {
    best: Option<(BigInt, u128)>, // (value, first index attaining it)
    spectrum: BTreeMap<BigInt, (u64, u128)>, // value -> (multiplicity, first index)
    visited: u64,
}

fn better(a: &(BigInt, u128), b: &(BigInt, u128)) -> bool {
    let (av, ai) = a;
    let (bv, bi) = b;
    (av.magnitude(), av, ai) < (bv.magnitude(), bv, bi)
}

/// Exhaustive (or budget-truncated) search over the coefficient box.
///
/// Visits all `(2b+1)^{|G|}` coefficient vectors when within budget
/// (`exhausted = true`), otherwise the deterministic enumeration prefix.
/// Every reported value is recomputed with `det_exact`.
pub fn search_box(spec: &SearchSpec) -> Result<SearchReport> {
    if spec.coeff_bound < 1 {
        return Err(Error::Precondition("coefficient bound must be >= 1".into()));
    }
    if spec.budget == Some(0) {
        return Err(Error::Precondition("budget must be positive".into()));
    }
    if spec.mode == SearchMode::Frontier {
        return frontier_from_spec(spec);
    }
    if let Some(seed) = spec.seed {
        return random_sample_search(spec, seed);
    }
    let group = spec.group;
    let len = group.order();
    let b = spec.coeff_bound;
    let base = (2 * b + 1) as u128;
    let total: u128 = base.checked_pow(len as u32).ok_or_else(|| {
        Error::Precondition("box too large to enumerate".into())
    })?;
    let budget = spec.budget.map(|q| q as u128).unwrap_or(total).min(total);
    // shard by the leading coordinate
    let shard_size = total / base;
    let shards: Vec<(u128, u128)> = (0..base)
        .map(|s| {
            let lo = s * shard_size;
            let hi = ((s + 1) * shard_size).min(budget);
            (lo, hi)
        })
        .filter(|(lo, hi)| lo < hi)
        .collect();
    let results: Vec<ShardResult> = shards
        .par_iter()
        .map(|&(lo, hi)| run_shard(spec, lo, hi))
        .collect();
    let mut merged = ShardResult { best: None, spectrum: BTreeMap::new(), visited: 0 };
    for r in results {
        merged.visited += r.visited;
        if let Some(cand) = r.best {
            merged.best = Some(match merged.best.take() {
                Some(cur) if better(&cur, &cand) => cur,
                _ => cand,
            });
        }
        for (v, (mult, ix)) in r.spectrum {
            let e = merged.spectrum.entry(v).or_insert((0, ix));
            e.0 += mult;
            e.1 = e.1.min(ix);
        }
    }
    finish_report(spec, merged, budget >= total)
}

fn run_shard(spec: &SearchSpec, lo: u128, hi: u128) -> ShardResult {
    let group = spec.group;
    let m = group.x_modulus();
    let len = group.order();
    let b = spec.coeff_bound;
    let kernel = DetKernel::new(group);
    let mut scratch = vec![0i64; m];
    let mut vec = vector_at(lo, len, b);
    let mut out = ShardResult { best: None, spectrum: BTreeMap::new(), visited: 0 };
    let collect_spectrum = spec.mode == SearchMode::Spectrum;
    let mut ix = lo;
    while ix < hi {
        let (f, g) = vec.split_at(m);
        let g = if group.has_y() { g } else { &[] };
        out.visited += 1;
        // screen: in min mode, skip elements whose determinant is provably 0
        let mut skip = false;
        if spec.use_screen && spec.mode == SearchMode::MinNontrivial && group.has_y() {
            let f1: i64 = f.iter().sum();
            let g1: i64 = g.iter().sum();
            if f1 * f1 == g1 * g1 {
                skip = true; // B(1) = 0 forces determinant 0
            }
        }
        if !skip {
            let d = kernel.det(f, g, &mut scratch);
            if d.magnitude() >= &num_bigint::BigUint::from(2u32) {
                let cand = (d.clone(), ix);
                out.best = Some(match out.best.take() {
                    Some(cur) if better(&cur, &cand) => cur,
                    _ => cand,
                });
            }
            if collect_spectrum {
                let within = spec
                    .value_cap
                    .as_ref()
                    .map_or(true, |cap| d.magnitude() <= cap.magnitude());
                if within {
                    let e = out.spectrum.entry(d).or_insert((0, ix));
                    e.0 += 1;
                    e.1 = e.1.min(ix);
                }
            }
        }
        ix += 1;
        if ix < hi && !advance(&mut vec, b) {
            break;
        }
    }
    out
}

fn random_sample_search(spec: &SearchSpec, seed: u64) -> Result<SearchReport> {
    use rand::{Rng, SeedableRng};
    let group = spec.group;
    let m = group.x_modulus();
    let b = spec.coeff_bound;
    let count = spec.budget.ok_or_else(|| {
        Error::Precondition("random mode needs an explicit budget".into())
    })?;
    let kernel = DetKernel::new(group);
    let mut scratch = vec![0i64; m];
    let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
    let mut merged = ShardResult { best: None, spectrum: BTreeMap::new(), visited: 0 };
    let len = group.order();
    for ix in 0..count {
        let vec: Vec<i64> = (0..len).map(|_| rng.gen_range(-b..=b)).collect();
        let (f, g) = vec.split_at(m);
        let d = kernel.det(f, g, &mut scratch);
        merged.visited += 1;
        if d.magnitude() >= &num_bigint::BigUint::from(2u32) {
            let cand = (d.clone(), ix as u128);
            // in random mode ties keep the earliest draw; elements are
            // reconstructed from the spectrum examples below, so store index 0
            merged.best = Some(match merged.best.take() {
                Some(cur) if better(&cur, &cand) => cur,
                _ => cand,
            });
        }
        if spec.mode == SearchMode::Spectrum {
            let e = merged.spectrum.entry(d).or_insert((0, ix as u128));
            e.0 += 1;
        }
    }
    // random mode cannot reconstruct elements from indices; re-derive the
    // best element by a second identical pass when needed
    let mut report = SearchReport {
        best_value: merged.best.as_ref().map(|(v, _)| v.clone()),
        best_element: None,
        spectrum: None,
        exhausted: false,
        elements_visited: merged.visited,
        seed: Some(seed),
    };
    if let Some((bv, bix)) = &merged.best {
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(seed);
        for ix in 0..=*bix {
            let vec: Vec<i64> = (0..len).map(|_| rng.gen_range(-b..=b)).collect();
            if ix == *bix {
                let (f, g) = vec.split_at(m);
                let e = element_from_parts(group, f, g);
                debug_assert_eq!(&det_exact(&e), bv);
                report.best_element = Some(e);
            }
        }
    }
    if spec.mode == SearchMode::Spectrum {
        report.spectrum = Some(
            merged
                .spectrum
                .into_iter()
                .map(|(v, (mult, _))| SpectrumEntry {
                    value: v,
                    multiplicity: mult,
                    example: RingElement::zero(group),
                })
                .collect(),
        );
    }
    Ok(report)
}

fn finish_report(spec: &SearchSpec, merged: ShardResult, exhausted: bool) -> Result<SearchReport> {
    let group = spec.group;
    let len = group.order();
    let m = group.x_modulus();
    let b = spec.coeff_bound;
    let rebuild = |ix: u128| {
        let v = vector_at(ix, len, b);
        let (f, g) = v.split_at(m);
        element_from_parts(group, f, g)
    };
    let (best_value, best_element) = match merged.best {
        Some((v, ix)) => {
            let e = rebuild(ix);
            // reported values are recomputed with the reference engine
            let check = det_exact(&e);
            debug_assert_eq!(check, v);
            if check != v {
                return Err(Error::WitnessMismatch { claimed: v, computed: check });
            }
            (Some(check), Some(e))
        }
        None => (None, None),
    };
    let spectrum = (spec.mode != SearchMode::MinNontrivial).then(|| {
        merged
            .spectrum
            .into_iter()
            .map(|(v, (mult, ix))| {
                let example = rebuild(ix);
                debug_assert_eq!(det_exact(&example), v);
                SpectrumEntry { value: v, multiplicity: mult, example }
            })
            .collect::<Vec<_>>()
    });
    Ok(SearchReport {
        best_value,
        best_element,
        spectrum,
        exhausted,
        elements_visited: merged.visited as u64,
        seed: spec.seed,
    })
}

// ---- frontier search ----

fn frontier_from_spec(spec: &SearchSpec) -> Result<SearchReport> {
    if spec.group.family() != GroupFamily::Dicyclic {
        return Err(Error::Precondition("frontier search runs on dicyclic groups".into()));
    }
    let p = spec.group.n() as u64;
    search_frontier(p, spec.coeff_bound, spec.budget)
}

/// Sweeps the `Q_{4p}` coefficient box for determinants of the open boundary
/// form `±2^5 p^l m`, `l` in `{0, 3, 5}`, `gcd(m, 2p) = 1`,
/// `|m| < (p^2+1)/2`. Reports the restricted spectrum, or an inconclusive
/// exhaustion when the budget runs out first.
///
/// The determinant only depends on `f` and `g` through rotation, negation,
/// and reversal, so when the per-part box is small enough the sweep runs
/// over canonical orbit representatives — value-complete for the box at a
/// fraction of the cost (cross-checked against the raw sweep in tests).
/// Multiplicities then count representative pairs, not raw vectors.
pub fn search_frontier(p: u64, coeff_bound: i64, budget: Option<u64>) -> Result<SearchReport> {
    if !arith::is_prime_u64(p) || p % 2 == 0 {
        return Err(Error::Precondition("frontier search needs an odd prime p".into()));
    }
    if coeff_bound < 1 {
        return Err(Error::Precondition("coefficient bound must be >= 1".into()));
    }
    if budget == Some(0) {
        return Err(Error::Precondition("budget must be positive".into()));
    }
    let group = GroupSpec::dicyclic(p as usize)?;
    let m = group.x_modulus();
    let base = (2 * coeff_bound + 1) as u128;
    let per_part = base.checked_pow(m as u32);
    const ORBIT_LIMIT: u128 = 1 << 24;
    match per_part {
        Some(sz) if sz <= ORBIT_LIMIT => frontier_orbit_sweep(group, coeff_bound, budget),
        _ => frontier_raw_prefix(group, coeff_bound, budget),
    }
}

fn frontier_value(p: u64, d: &BigInt) -> Option<(u64, BigInt)> {
    if d.is_zero() {
        return None;
    }
    if valuation(d, 2) != 5 {
        return None;
    }
    let l = valuation(d, p);
    if l != 0 && l != 3 && l != 5 {
        return None;
    }
    let unit = d / (BigInt::from(32u32) * BigInt::from(p).pow(l as u32));
    let mhalf = BigInt::from((p * p + 1) / 2);
    if unit.abs() < mhalf {
        Some((l, unit))
    } else {
        None
    }
}

/// All distinct vectors in the rotation/negation/reversal orbit of `v`.
fn orbit_canonical(v: &[i64], scratch: &mut Vec<i64>) -> bool {
    let n = v.len();
    for rev in [false, true] {
        for sgn in [1i64, -1] {
            for rot in 0..n {
                scratch.clear();
                for k in 0..n {
                    let idx = if rev { (n - k) % n } else { k };
                    scratch.push(sgn * v[(idx + rot) % n]);
                }
                if scratch.as_slice() < v {
                    return false; // a smaller representative exists
                }
            }
        }
    }
    true
}

struct RepData {
    coeffs: Vec<i64>,
    autocorr: Vec<i64>,
    sum_one: i64,
    sum_alt: i64,
}

fn collect_reps(m: usize, b: i64) -> Vec<RepData> {
    let mut reps = Vec::new();
    let mut v = vec![-b; m];
    let mut scratch = Vec::with_capacity(m);
    loop {
        if orbit_canonical(&v, &mut scratch) {
            let mut ac = vec![0i64; m];
            for k in 0..m {
                for l in 0..m {
                    ac[k] += v[(l + k) % m] * v[l];
                }
            }
            let sum_one: i64 = v.iter().sum();
            let sum_alt: i64 = v.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).sum();
            reps.push(RepData { coeffs: v.clone(), autocorr: ac, sum_one, sum_alt });
        }
        if !advance(&mut v, b) {
            break;
        }
    }
    reps
}

fn frontier_orbit_sweep(group: GroupSpec, b: i64, budget: Option<u64>) -> Result<SearchReport> {
    let p = group.n() as u64;
    let m = group.x_modulus();
    let kernel = DetKernel::new(group);
    let reps = collect_reps(m, b);
    let total_pairs = (reps.len() as u128) * (reps.len() as u128);
    let budget_pairs = budget.map(|q| q as u128).unwrap_or(total_pairs).min(total_pairs);
    let rows: Vec<usize> = (0..reps.len()).collect();
    let per_row = reps.len() as u128;
    let results: Vec<ShardResult> = rows
        .par_iter()
        .map(|&fi| {
            let row_start = fi as u128 * per_row;
            if row_start >= budget_pairs {
                return ShardResult { best: None, spectrum: BTreeMap::new(), visited: 0 };
            }
            let row_budget = (budget_pairs - row_start).min(per_row) as usize;
            let f = &reps[fi];
            let mut scratch = vec![0i64; m];
            let mut out = ShardResult { best: None, spectrum: BTreeMap::new(), visited: 0 };
            for (gi, g) in reps[..row_budget].iter().enumerate() {
                out.visited += 1;
                // v_2 screen: M = B(1) B(-1) * squares, so v_2(B(1) B(-1))
                // must be odd and at most 5 for 2^5 || M
                let m1 = f.sum_one * f.sum_one - g.sum_one * g.sum_one;
                let m2 = f.sum_alt * f.sum_alt + g.sum_alt * g.sum_alt; // p odd
                let m12 = m1 as i128 * m2 as i128;
                if m12 == 0 {
                    continue;
                }
                let v2 = m12.trailing_zeros();
                if v2 > 5 || v2 % 2 == 0 {
                    continue;
                }
                // B = autocorr(f) - rot_p(autocorr(g))
                for k in 0..m {
                    scratch[(k + p as usize) % m] = -g.autocorr[k];
                }
                for k in 0..m {
                    scratch[k] += f.autocorr[k];
                }
                let d = kernel.det_from_measure(&scratch);
                if frontier_value(p, &d).is_some() {
                    let ix = row_start + gi as u128;
                    let e = out.spectrum.entry(d).or_insert((0, ix));
                    e.0 += 1;
                    e.1 = e.1.min(ix);
                }
            }
            out
        })
        .collect();
    let mut merged = ShardResult { best: None, spectrum: BTreeMap::new(), visited: 0 };
    for r in results {
        merged.visited += r.visited;
        for (v, (mult, ix)) in r.spectrum {
            let e = merged.spectrum.entry(v).or_insert((0, ix));
            e.0 += mult;
            e.1 = e.1.min(ix);
        }
    }
    let spectrum: Vec<SpectrumEntry> = merged
        .spectrum
        .into_iter()
        .map(|(v, (mult, ix))| {
            let fi = (ix / per_row) as usize;
            let gi = (ix % per_row) as usize;
            let example = element_from_parts(group, &reps[fi].coeffs, &reps[gi].coeffs);
            assert_eq!(det_exact(&example), v, "frontier value failed recomputation");
            SpectrumEntry { value: v, multiplicity: mult, example }
        })
        .collect();
    let best = spectrum
        .iter()
        .filter(|e| e.value.magnitude() >= &num_bigint::BigUint::from(2u32))
        .min_by_key(|e| (e.value.magnitude().clone(), e.value.clone()));
    Ok(SearchReport {
        best_value: best.map(|e| e.value.clone()),
        best_element: best.map(|e| e.example.clone()),
        spectrum: Some(spectrum),
        exhausted: budget_pairs >= total_pairs,
        elements_visited: merged.visited as u64,
        seed: None,
    })
}

fn frontier_raw_prefix(group: GroupSpec, b: i64, budget: Option<u64>) -> Result<SearchReport> {
    let p = group.n() as u64;
    let m = group.x_modulus();
    let len = group.order();
    let budget = budget.ok_or_else(|| {
        Error::Precondition("box too large to exhaust; an explicit budget is required".into())
    })?;
    let kernel = DetKernel::new(group);
    let mut scratch = vec![0i64; m];
    let mut vec = vec![-b; len];
    let mut spectrum: BTreeMap<BigInt, (u64, Vec<i64>)> = BTreeMap::new();
    let mut visited = 0u64;
    while visited < budget {
        visited += 1;
        let (f, g) = vec.split_at(m);
        let f1: i64 = f.iter().sum();
        let g1: i64 = g.iter().sum();
        let m1 = f1 * f1 - g1 * g1;
        if m1 != 0 {
            let fa: i64 = f.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).sum();
            let ga: i64 = g.iter().enumerate().map(|(i, &c)| if i % 2 == 0 { c } else { -c }).sum();
            let m12 = m1 as i128 * (fa * fa + ga * ga) as i128;
            if m12 != 0 {
                let v2 = m12.trailing_zeros();
                if v2 <= 5 && v2 % 2 == 1 {
                    let d = kernel.det(f, g, &mut scratch);
                    if frontier_value(p, &d).is_some() {
                        let e = spectrum.entry(d).or_insert((0, vec.clone()));
                        e.0 += 1;
                    }
                }
            }
        }
        if !advance(&mut vec, b) {
            break;
        }
    }
    let total = ((2 * b + 1) as u128).checked_pow(len as u32);
    let exhausted = total.map_or(false, |t| (visited as u128) >= t);
    let spectrum: Vec<SpectrumEntry> = spectrum
        .into_iter()
        .map(|(v, (mult, coeffs))| {
            let (f, g) = coeffs.split_at(m);
            let example = element_from_parts(group, f, g);
            assert_eq!(det_exact(&example), v);
            SpectrumEntry { value: v, multiplicity: mult, example }
        })
        .collect();
    Ok(SearchReport {
        best_value: None,
        best_element: None,
        spectrum: Some(spectrum),
        exhausted,
        elements_visited: visited,
        seed: None,
    })
}

// ---- lambda verification ----

/// Certifies the minimal non-trivial determinant of `Q_{4n}` for odd `n >= 3`
/// without any box search: builds the attaining element (the 16-element or
/// the coprime prime element) and law-based exclusion certificates for every
/// smaller magnitude.
pub fn verify_lambda(n: u64) -> Result<LambdaReport> {
    if n % 2 == 0 {
        return Err(Error::Precondition("lambda verification needs odd n".into()));
    }
    if n < 3 {
        return Err(Error::Precondition("lambda verification needs n >= 3".into()));
    }
    let group = GroupSpec::dicyclic(n as usize)?;
    let mut report = lambda_formula(&group)?;
    let lambda = match &report.value {
        LambdaValue::Exact(v) => v.clone(),
        LambdaValue::UpperBound(_) => unreachable!("odd n yields an exact value"),
    };
    let witness = if lambda == BigInt::from(16) {
        witness_basic(group, BasicKind::Sixteen)?
    } else {
        let p0 = lambda.to_u64().unwrap();
        witness_coprime(n, &BigInt::from(p0))?
    };
    witness.verify()?;
    report.witness = Some(witness);
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::laws::Status;

    fn q(n: usize) -> GroupSpec {
        GroupSpec::dicyclic(n).unwrap()
    }

    #[test]
    fn q8_box_minimum_is_seven() {
        let spec = SearchSpec::new(q(2), 1, SearchMode::MinNontrivial);
        let r = search_box(&spec).unwrap();
        assert!(r.exhausted);
        assert_eq!(r.elements_visited, 6561);
        assert_eq!(r.best_value.as_ref().unwrap().magnitude().to_string(), "7");
        // the attained value is -7 (7 itself is not a Q_8 value)
        assert_eq!(r.best_value.unwrap(), BigInt::from(-7));
        assert_eq!(det_exact(r.best_element.as_ref().unwrap()), BigInt::from(-7));
    }

    #[test]
    fn z2_box_needs_bound_two() {
        // coefficients in [-1, 1] only reach {0, ±1}; bound 2 attains 3
        let z2 = GroupSpec::cyclic(2).unwrap();
        let r = search_box(&SearchSpec::new(z2, 1, SearchMode::MinNontrivial)).unwrap();
        assert!(r.exhausted && r.best_value.is_none());
        let r = search_box(&SearchSpec::new(z2, 2, SearchMode::MinNontrivial)).unwrap();
        assert_eq!(r.best_value.as_ref().unwrap().magnitude().to_string(), "3");
    }

    #[test]
    fn budget_prefix_and_errors() {
        let spec = SearchSpec { budget: Some(100), ..SearchSpec::new(q(2), 1, SearchMode::Spectrum) };
        let r = search_box(&spec).unwrap();
        assert!(!r.exhausted);
        assert_eq!(r.elements_visited, 100);
        let bad = SearchSpec { budget: Some(0), ..SearchSpec::new(q(2), 1, SearchMode::Spectrum) };
        assert!(search_box(&bad).is_err());
        let bad = SearchSpec::new(q(2), 0, SearchMode::Spectrum);
        assert!(search_box(&bad).is_err());
    }

    #[test]
    fn screen_is_conservative_on_q8() {
        let mut spec = SearchSpec::new(q(2), 1, SearchMode::MinNontrivial);
        let screened = search_box(&spec).unwrap();
        spec.use_screen = false;
        let raw = search_box(&spec).unwrap();
        assert_eq!(screened.best_value, raw.best_value);
        assert_eq!(screened.best_element, raw.best_element);
    }

    #[test]
    fn spectrum_is_sorted_and_recomputed() {
        let spec = SearchSpec::new(GroupSpec::cyclic(4).unwrap(), 1, SearchMode::Spectrum);
        let r = search_box(&spec).unwrap();
        let sp = r.spectrum.unwrap();
        assert!(sp.windows(2).all(|w| w[0].value < w[1].value));
        for e in &sp {
            assert_eq!(det_exact(&e.example), e.value);
        }
        let total: u64 = sp.iter().map(|e| e.multiplicity).sum();
        assert_eq!(total, 81);
    }

    #[test]
    fn value_cap_restricts_spectrum() {
        let mut spec = SearchSpec::new(q(2), 1, SearchMode::Spectrum);
        spec.value_cap = Some(BigInt::from(100));
        let r = search_box(&spec).unwrap();
        for e in r.spectrum.unwrap() {
            assert!(e.value.magnitude() <= &num_bigint::BigUint::from(100u32));
        }
    }

    #[test]
    fn frontier_p3_finds_nothing_small() {
        // no 2^5 m with |m| < 5 exists for p = 3
        let r = search_frontier(3, 1, None).unwrap();
        assert!(r.exhausted);
        assert!(r.spectrum.unwrap().is_empty());
    }

    #[test]
    fn frontier_reduced_matches_raw_prefix() {
        // the orbit sweep and a full raw sweep agree on the value set (p = 3)
        let reduced = search_frontier(3, 1, None).unwrap();
        let raw = frontier_raw_prefix(q(3), 1, Some(3u64.pow(12))).unwrap();
        assert!(raw.exhausted);
        let rv: Vec<&BigInt> = reduced.spectrum.as_ref().unwrap().iter().map(|e| &e.value).collect();
        let wv: Vec<&BigInt> = raw.spectrum.as_ref().unwrap().iter().map(|e| &e.value).collect();
        assert_eq!(rv, wv);
    }

    #[test]
    fn frontier_budget_semantics() {
        let r = search_frontier(13, 1, Some(2000)).unwrap();
        assert!(!r.exhausted);
        assert_eq!(r.elements_visited, 2000);
    }

    #[test]
    fn verify_lambda_small() {
        let r = verify_lambda(3).unwrap();
        assert_eq!(r.value, LambdaValue::Exact(BigInt::from(5)));
        assert_eq!(r.witness.as_ref().unwrap().claimed, BigInt::from(5));
        // certificates exclude 2, 3, 4
        assert_eq!(r.certificate.len(), 3);
        assert!(r.certificate.iter().all(|s| s.verdict.status == Status::Out));
        let r = verify_lambda(9).unwrap();
        assert_eq!(r.value, LambdaValue::Exact(BigInt::from(5)));
        assert!(verify_lambda(4).is_err());
        assert!(verify_lambda(1).is_err());
    }

    #[test]
    fn parallel_matches_forced_serial() {
        // run the same spec under a single-thread pool and compare reports
        let spec = SearchSpec::new(q(2), 1, SearchMode::Spectrum);
        let par = search_box(&spec).unwrap();
        let pool = rayon::ThreadPoolBuilder::new().num_threads(1).build().unwrap();
        let ser = pool.install(|| search_box(&spec)).unwrap();
        assert_eq!(par.best_value, ser.best_value);
        assert_eq!(par.elements_visited, ser.elements_visited);
        let pv: Vec<_> = par.spectrum.as_ref().unwrap().iter().map(|e| (&e.value, e.multiplicity)).collect();
        let sv: Vec<_> = ser.spectrum.as_ref().unwrap().iter().map(|e| (&e.value, e.multiplicity)).collect();
        assert_eq!(pv, sv);
    }

    #[test]
    fn seeded_random_mode_is_reproducible() {
        let mut spec = SearchSpec::new(q(3), 2, SearchMode::MinNontrivial);
        spec.seed = Some(42);
        spec.budget = Some(500);
        let a = search_box(&spec).unwrap();
        let b = search_box(&spec).unwrap();
        assert_eq!(a.best_value, b.best_value);
        assert_eq!(a.seed, Some(42));
    }
}
