//! Batch verification sweeps over whole families of inputs.
//!
//! Each sweep enumerates (or randomly draws, from a seeded generator) a
//! family of cases, runs the relevant check on every case in parallel, and
//! reports the failures. Randomness is always drawn *before* the parallel
//! phase, so a sweep's outcome depends only on its options and seed, never
//! on thread scheduling.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;

use crate::error::Result;
use crate::hive::{count_anti_hives, count_hives};
use crate::lr::{lr_coeff_tableaux, subshapes, verify_tao};
use crate::rational::{random_nonzero_rat, rat, Rat};
use crate::schur::{schur_dual_check, schur_jacobi_trudi, schur_ssyt, DEFAULT_ORACLE_CAP};
use crate::unramified::{
    delta_cancellation_check, delta_exponent_positive_roots, delta_exponent_q, paired_weight,
    trace_sym_cauchy, trace_sym_schur, verify_unramified, SatakeConfig, SatakeData,
};
use crate::weights::{
    central_weight, enumerate_dominant, enumerate_dominant_bounded, GLWeight, Partition,
};

/// Progress callback: receives `(cases_done, cases_total)` after each case.
pub type Progress<'a> = &'a (dyn Fn(usize, usize) + Sync);

/// A progress callback that does nothing.
pub fn silent_progress() -> Progress<'static> {
    &|_, _| {}
}

/// Result of one sweep: how many cases ran and which ones failed.
#[derive(Clone, Debug)]
pub struct SweepReport {
    pub target: &'static str,
    pub cases: usize,
    pub failures: Vec<String>,
}

impl SweepReport {
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Runs `check` over every case in parallel; failure messages come back in
/// case order regardless of scheduling.
fn run_cases<T, F>(target: &'static str, cases: Vec<T>, check: F, progress: Progress) -> SweepReport
where
    T: Send + Sync,
    F: Fn(&T) -> Option<String> + Sync,
{
    use std::sync::atomic::{AtomicUsize, Ordering};
    let total = cases.len();
    let done = AtomicUsize::new(0);
    let mut failures: Vec<(usize, String)> = cases
        .par_iter()
        .enumerate()
        .filter_map(|(i, case)| {
            let outcome = check(case).map(|msg| (i, msg));
            progress(done.fetch_add(1, Ordering::Relaxed) + 1, total);
            outcome
        })
        .collect();
    failures.sort();
    SweepReport {
        target,
        cases: total,
        failures: failures.into_iter().map(|(_, msg)| msg).collect(),
    }
}

fn err_to_failure<T>(label: &str, r: Result<T>, judge: impl FnOnce(T) -> Option<String>) -> Option<String> {
    match r {
        Ok(v) => judge(v),
        Err(e) => Some(format!("{label}: error: {e}")),
    }
}

/// All partitions with at most `max_parts` parts and entries at most
/// `max_part`, every size, ordered by size.
fn bounded_partitions(max_parts: usize, max_part: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    for s in 0..=(max_parts as i64 * max_part) {
        out.extend(enumerate_dominant_bounded(max_parts, s, max_part));
    }
    out
}

// ---------------------------------------------------------------------------
// Hive-based squares: the LR square identity over a grid of shapes
// ---------------------------------------------------------------------------

/// Options for [`tao_sweep`]: every part value is at most `max_part`, the
/// first two ranks are at most `max_rank`, the ambient rank runs up to
/// `max_l`, and the common degree gap is at most `max_gap`.
#[derive(Clone, Copy, Debug)]
pub struct TaoSweepOptions {
    pub max_part: i64,
    pub max_rank: usize,
    pub max_l: usize,
    pub max_gap: i64,
}

impl Default for TaoSweepOptions {
    fn default() -> Self {
        TaoSweepOptions {
            max_part: 3,
            max_rank: 2,
            max_l: 5,
            max_gap: 3,
        }
    }
}

/// Exhaustively checks the square identity relating one large LR
/// coefficient to a sum of products of small ones, over all shape tuples
/// within the option bounds.
pub fn tao_sweep(opts: &TaoSweepOptions, progress: Progress) -> SweepReport {
    let mut cases: Vec<(Partition, Partition, Partition, Partition, usize, usize, usize)> =
        Vec::new();
    for m in 0..=opts.max_rank {
        let shapes_m = bounded_partitions(m, opts.max_part);
        for n in 0..=opts.max_rank {
            let shapes_n = bounded_partitions(n, opts.max_part);
            for l in (m + n + 1)..=opts.max_l {
                for x in &shapes_m {
                    for u in &shapes_m {
                        let gap = u.size() - x.size();
                        if gap < 0 || gap > opts.max_gap {
                            continue;
                        }
                        for y in &shapes_n {
                            for v in &shapes_n {
                                if v.size() - y.size() != gap {
                                    continue;
                                }
                                cases.push((
                                    x.clone(),
                                    u.clone(),
                                    y.clone(),
                                    v.clone(),
                                    l,
                                    m,
                                    n,
                                ));
                            }
                        }
                    }
                }
            }
        }
    }
    run_cases(
        "tao",
        cases,
        |(x, u, y, v, l, m, n)| {
            let label = format!("x={x} u={u} y={y} v={v} l={l} m={m} n={n}");
            err_to_failure(&label, verify_tao(x, u, y, v, *l, *m, *n), |out| {
                if out.equal {
                    None
                } else {
                    Some(format!("{label}: lhs {} != rhs {}", out.lhs, out.rhs))
                }
            })
        },
        progress,
    )
}

// ---------------------------------------------------------------------------
// Three-way LR agreement
// ---------------------------------------------------------------------------

/// Options for [`lr_sweep`]: an exhaustive pass over outer shapes of size
/// up to `exhaustive_max_size` with at most `exhaustive_max_parts` parts,
/// then `random_cases` larger draws.
#[derive(Clone, Copy, Debug)]
pub struct LrSweepOptions {
    pub exhaustive_max_size: i64,
    pub exhaustive_max_parts: usize,
    pub random_cases: usize,
    pub random_max_parts: usize,
    pub random_max_part: i64,
    pub seed: u64,
}

impl Default for LrSweepOptions {
    fn default() -> Self {
        LrSweepOptions {
            exhaustive_max_size: 10,
            exhaustive_max_parts: 4,
            random_cases: 500,
            random_max_parts: 6,
            random_max_part: 8,
            seed: 0,
        }
    }
}

fn random_partition<R: Rng>(rng: &mut R, max_parts: usize, max_part: i64) -> Partition {
    let rows = rng.gen_range(1..=max_parts);
    let mut parts = Vec::new();
    let mut cur = rng.gen_range(1..=max_part);
    for _ in 0..rows {
        parts.push(cur);
        if cur == 0 {
            break;
        }
        cur = rng.gen_range(0..=cur);
    }
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect::<Vec<_>>()).expect("descending")
}

fn random_subshape<R: Rng>(rng: &mut R, bound: &Partition) -> Partition {
    let mut parts = Vec::new();
    let mut cap = bound.first();
    for i in 0..bound.num_parts() {
        let hi = cap.min(bound.part(i));
        let p = rng.gen_range(0..=hi);
        parts.push(p);
        cap = p;
    }
    Partition::new(parts.into_iter().filter(|&p| p > 0).collect::<Vec<_>>()).expect("descending")
}

fn lr_check_case(x: &Partition, y: &Partition, u: &Partition, rank: usize) -> Option<String> {
    let label = format!("x={x} y={y} u={u} rank={rank}");
    let tableaux = lr_coeff_tableaux(x, y, u);
    let hives = match count_hives(x, y, u, rank) {
        Ok(h) => h,
        Err(e) => return Some(format!("{label}: hive error: {e}")),
    };
    let anti = match count_anti_hives(x, y, u, rank) {
        Ok(h) => h,
        Err(e) => return Some(format!("{label}: anti-hive error: {e}")),
    };
    if tableaux != hives.count || hives.count != anti.count {
        return Some(format!(
            "{label}: tableaux {tableaux}, hives {}, anti-hives {}",
            hives.count, anti.count
        ));
    }
    None
}

/// Checks that the tableau, hive, and anti-hive computations of the LR
/// coefficient agree: exhaustively on small shapes, then on seeded random
/// larger ones.
pub fn lr_sweep(opts: &LrSweepOptions, progress: Progress) -> SweepReport {
    let mut cases: Vec<(Partition, Partition, Partition, usize)> = Vec::new();
    let max_parts = opts.exhaustive_max_parts;
    for s in 0..=opts.exhaustive_max_size {
        for u in enumerate_dominant(max_parts, s) {
            for x in subshapes(&u, max_parts) {
                for y in enumerate_dominant_bounded(max_parts, s - x.size(), u.first()) {
                    cases.push((x.clone(), y, u.clone(), max_parts.max(1)));
                }
            }
        }
    }
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    for _ in 0..opts.random_cases {
        let u = random_partition(&mut rng, opts.random_max_parts, opts.random_max_part);
        let x = random_subshape(&mut rng, &u);
        let gap = u.size() - x.size();
        let bound = u
            .first()
            .max((gap + opts.random_max_parts as i64 - 1) / opts.random_max_parts.max(1) as i64);
        let choices = enumerate_dominant_bounded(opts.random_max_parts, gap, bound);
        let y = choices[rng.gen_range(0..choices.len())].clone();
        let rank = u
            .num_parts()
            .max(x.num_parts())
            .max(y.num_parts())
            .max(1);
        cases.push((x, y, u, rank));
    }
    run_cases(
        "lr",
        cases,
        |(x, y, u, rank)| lr_check_case(x, y, u, *rank),
        progress,
    )
}

// ---------------------------------------------------------------------------
// Local zeta identity
// ---------------------------------------------------------------------------

/// Options for [`unramified_sweep`]: every admissible `(m, n, j)` for each
/// rank `l` in `2..=max_l`, with `draws` random parameter sets per
/// configuration, expanded to the given caps.
#[derive(Clone, Debug)]
pub struct UnramifiedSweepOptions {
    pub max_l: usize,
    pub caps: (usize, usize),
    pub draws: usize,
    pub q_half: Rat,
    pub seed: u64,
    pub num_max: i64,
    pub den_max: i64,
}

impl Default for UnramifiedSweepOptions {
    fn default() -> Self {
        UnramifiedSweepOptions {
            max_l: 5,
            caps: (5, 5),
            draws: 5,
            q_half: rat(2, 1),
            seed: 0,
            num_max: 7,
            den_max: 5,
        }
    }
}

/// Verifies the zeta-sum/L-factor identity coefficientwise for every
/// admissible configuration and several seeded random parameter draws each.
pub fn unramified_sweep(opts: &UnramifiedSweepOptions, progress: Progress) -> Result<SweepReport> {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cases: Vec<(SatakeData, usize)> = Vec::new();
    for l in 2..=opts.max_l {
        for config in SatakeConfig::admissible_for_rank(l) {
            for draw in 0..opts.draws {
                let d = SatakeData::random_in(
                    config,
                    opts.q_half.clone(),
                    &mut rng,
                    opts.num_max,
                    opts.den_max,
                )?;
                cases.push((d, draw));
            }
        }
    }
    let caps = opts.caps;
    Ok(run_cases(
        "unramified",
        cases,
        |(d, draw)| {
            let c = &d.config;
            let label = format!(
                "l={} m={} n={} j={} draw={draw}",
                c.l, c.m, c.n, c.j
            );
            err_to_failure(&label, verify_unramified(d, caps), |out| {
                if out.equal {
                    None
                } else {
                    Some(format!(
                        "{label}: first mismatch at {:?}",
                        out.first_mismatch
                    ))
                }
            })
        },
        progress,
    ))
}

// ---------------------------------------------------------------------------
// Symmetric-power traces
// ---------------------------------------------------------------------------

/// Options for [`cauchy_sweep`]: all rank pairs up to `max_m` × `max_n`,
/// all degrees up to `max_e`, with `draws` random eigenvalue sets per pair.
#[derive(Clone, Copy, Debug)]
pub struct CauchySweepOptions {
    pub max_m: usize,
    pub max_n: usize,
    pub max_e: usize,
    pub draws: usize,
    pub seed: u64,
    pub num_max: i64,
    pub den_max: i64,
}

impl Default for CauchySweepOptions {
    fn default() -> Self {
        CauchySweepOptions {
            max_m: 4,
            max_n: 4,
            max_e: 8,
            draws: 50,
            seed: 0,
            num_max: 7,
            den_max: 5,
        }
    }
}

/// Checks that the two routes to the symmetric-power trace of a tensor
/// product — complete homogeneous values at pairwise products, and the sum
/// of Schur-value pairs — agree on seeded random eigenvalues.
pub fn cauchy_sweep(opts: &CauchySweepOptions, progress: Progress) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cases: Vec<(Vec<Rat>, Vec<Rat>, usize)> = Vec::new();
    for draw in 0..opts.draws {
        for m in 1..=opts.max_m {
            for n in 1..=opts.max_n {
                let alpha: Vec<Rat> = (0..m)
                    .map(|_| random_nonzero_rat(&mut rng, opts.num_max, opts.den_max))
                    .collect();
                let beta: Vec<Rat> = (0..n)
                    .map(|_| random_nonzero_rat(&mut rng, opts.num_max, opts.den_max))
                    .collect();
                cases.push((alpha, beta, draw));
            }
        }
    }
    let max_e = opts.max_e;
    run_cases(
        "cauchy",
        cases,
        |(alpha, beta, draw)| {
            for e in 0..=max_e {
                let lhs = trace_sym_cauchy(alpha, beta, e);
                let rhs = trace_sym_schur(alpha, beta, e);
                if lhs != rhs {
                    return Some(format!(
                        "m={} n={} e={e} draw={draw}: {lhs} != {rhs}",
                        alpha.len(),
                        beta.len()
                    ));
                }
            }
            None
        },
        progress,
    )
}

// ---------------------------------------------------------------------------
// Modulus-character cancellation
// ---------------------------------------------------------------------------

/// Options for [`delta_sweep`]: all admissible configurations up to rank
/// `max_l`, all partition pairs with sizes up to `max_size`.
#[derive(Clone, Debug)]
pub struct DeltaSweepOptions {
    pub max_l: usize,
    pub max_size: i64,
    pub q_half: Rat,
}

impl Default for DeltaSweepOptions {
    fn default() -> Self {
        DeltaSweepOptions {
            max_l: 5,
            max_size: 4,
            q_half: rat(2, 1),
        }
    }
}

/// Checks, for every admissible configuration and partition pair, that the
/// modulus-character exponent formula matches the positive-root product on
/// all four weights involved, and that the cancellation identity holds.
pub fn delta_sweep(opts: &DeltaSweepOptions, progress: Progress) -> SweepReport {
    let mut cases: Vec<(SatakeConfig, Partition, Partition)> = Vec::new();
    for l in 2..=opts.max_l {
        for config in SatakeConfig::admissible_for_rank(l) {
            for xs in 0..=opts.max_size {
                for x in enumerate_dominant(config.m, xs) {
                    for ys in 0..=opts.max_size {
                        for y in enumerate_dominant(config.n, ys) {
                            cases.push((config, x.clone(), y.clone()));
                        }
                    }
                }
            }
        }
    }
    let q_half = opts.q_half.clone();
    run_cases(
        "delta",
        cases,
        |(c, x, y)| {
            let label = format!("l={} m={} n={} j={} x={x} y={y}", c.l, c.m, c.n, c.j);
            let weights: Vec<GLWeight> = match (|| -> Result<_> {
                Ok(vec![
                    central_weight(x, y, c.l, c.m, c.n)?,
                    GLWeight::new(x.padded(c.m)?),
                    GLWeight::new(y.padded(c.n)?),
                    paired_weight(x, y, c.m, c.n)?,
                ])
            })() {
                Ok(w) => w,
                Err(e) => return Some(format!("{label}: error: {e}")),
            };
            for w in &weights {
                if delta_exponent_q(w) != delta_exponent_positive_roots(w) {
                    return Some(format!(
                        "{label}: exponent routes disagree on {w}: {} vs {}",
                        delta_exponent_q(w),
                        delta_exponent_positive_roots(w)
                    ));
                }
            }
            err_to_failure(
                &label,
                delta_cancellation_check(x, y, c.l, c.m, c.n, c.j, &q_half),
                |ok| {
                    if ok {
                        None
                    } else {
                        Some(format!("{label}: cancellation exponents differ"))
                    }
                },
            )
        },
        progress,
    )
}

// ---------------------------------------------------------------------------
// Dual-variable Schur relation
// ---------------------------------------------------------------------------

/// Options for [`dual_sweep`]: all partitions of size up to `max_size`
/// inside each rank up to `max_l`, with `points` random evaluation points
/// per shape.
#[derive(Clone, Copy, Debug)]
pub struct DualSweepOptions {
    pub max_size: i64,
    pub max_l: usize,
    pub points: usize,
    pub seed: u64,
    pub num_max: i64,
    pub den_max: i64,
}

impl Default for DualSweepOptions {
    fn default() -> Self {
        DualSweepOptions {
            max_size: 6,
            max_l: 5,
            points: 20,
            seed: 0,
            num_max: 7,
            den_max: 5,
        }
    }
}

/// Checks the inverse-variable Schur relation: the Schur value of a padded
/// shape at the coordinatewise inverse point equals the value of the
/// reversed negated shape at the original point.
pub fn dual_sweep(opts: &DualSweepOptions, progress: Progress) -> SweepReport {
    let mut rng = ChaCha8Rng::seed_from_u64(opts.seed);
    let mut cases: Vec<(Partition, usize, Vec<Rat>, usize)> = Vec::new();
    for l in 1..=opts.max_l {
        for s in 0..=opts.max_size {
            for v in enumerate_dominant(l, s) {
                for pt in 0..opts.points {
                    let point: Vec<Rat> = (0..l)
                        .map(|_| random_nonzero_rat(&mut rng, opts.num_max, opts.den_max))
                        .collect();
                    cases.push((v.clone(), l, point, pt));
                }
            }
        }
    }
    run_cases(
        "dual",
        cases,
        |(v, l, point, pt)| {
            let label = format!("v={v} l={l} point#{pt}");
            err_to_failure(&label, schur_dual_check(v, *l, point), |ok| {
                if ok {
                    None
                } else {
                    Some(format!("{label}: sides differ"))
                }
            })
        },
        progress,
    )
}

// ---------------------------------------------------------------------------
// Determinant vs tableau Schur polynomials
// ---------------------------------------------------------------------------

/// Options for [`schur_sweep`]: all partitions of size up to `max_size`, in
/// every variable count up to `max_nvars`, compared symbolically.
#[derive(Clone, Copy, Debug)]
pub struct SchurSweepOptions {
    pub max_size: i64,
    pub max_nvars: usize,
}

impl Default for SchurSweepOptions {
    fn default() -> Self {
        SchurSweepOptions {
            max_size: 8,
            max_nvars: 4,
        }
    }
}

/// Checks that the determinant and tableau constructions of the Schur
/// polynomial produce identical polynomials on every shape in range.
pub fn schur_sweep(opts: &SchurSweepOptions, progress: Progress) -> SweepReport {
    let mut cases: Vec<(Partition, usize)> = Vec::new();
    for s in 0..=opts.max_size {
        for lam in enumerate_dominant(s.max(1) as usize, s) {
            for nvars in 1..=opts.max_nvars {
                cases.push((lam.clone(), nvars));
            }
        }
    }
    let cap = DEFAULT_ORACLE_CAP.max(opts.max_size as usize);
    run_cases(
        "schur",
        cases,
        |(lam, nvars)| {
            let label = format!("lam={lam} nvars={nvars}");
            let det = schur_jacobi_trudi(lam, *nvars);
            err_to_failure(&label, schur_ssyt(lam, *nvars, cap), |tab| {
                if det == tab {
                    None
                } else {
                    Some(format!("{label}: determinant and tableau routes differ"))
                }
            })
        },
        progress,
    )
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn tao_sweep_tiny_passes() {
        let opts = TaoSweepOptions {
            max_part: 2,
            max_rank: 1,
            max_l: 4,
            max_gap: 2,
        };
        let report = tao_sweep(&opts, silent_progress());
        assert!(report.cases > 0);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn lr_sweep_tiny_passes() {
        let opts = LrSweepOptions {
            exhaustive_max_size: 6,
            exhaustive_max_parts: 3,
            random_cases: 25,
            random_max_parts: 4,
            random_max_part: 5,
            seed: 7,
        };
        let report = lr_sweep(&opts, silent_progress());
        assert!(report.cases > 25);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn unramified_sweep_tiny_passes() {
        let opts = UnramifiedSweepOptions {
            max_l: 3,
            caps: (3, 3),
            draws: 2,
            ..Default::default()
        };
        let report = unramified_sweep(&opts, silent_progress()).unwrap();
        assert_eq!(report.cases, 2 * (4 + 10));
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn cauchy_sweep_tiny_passes() {
        let opts = CauchySweepOptions {
            max_m: 3,
            max_n: 3,
            max_e: 5,
            draws: 4,
            ..Default::default()
        };
        let report = cauchy_sweep(&opts, silent_progress());
        assert_eq!(report.cases, 4 * 9);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn delta_sweep_tiny_passes() {
        let opts = DeltaSweepOptions {
            max_l: 3,
            max_size: 3,
            q_half: rat(3, 1),
        };
        let report = delta_sweep(&opts, silent_progress());
        assert!(report.cases > 0);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn dual_sweep_tiny_passes() {
        let opts = DualSweepOptions {
            max_size: 4,
            max_l: 3,
            points: 3,
            ..Default::default()
        };
        let report = dual_sweep(&opts, silent_progress());
        assert!(report.cases > 0);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn schur_sweep_tiny_passes() {
        let opts = SchurSweepOptions {
            max_size: 5,
            max_nvars: 3,
        };
        let report = schur_sweep(&opts, silent_progress());
        assert!(report.cases > 0);
        assert!(report.passed(), "{:?}", report.failures);
    }

    #[test]
    fn sweeps_are_deterministic() {
        let opts = LrSweepOptions {
            exhaustive_max_size: 3,
            exhaustive_max_parts: 2,
            random_cases: 10,
            random_max_parts: 3,
            random_max_part: 4,
            seed: 42,
        };
        let a = lr_sweep(&opts, silent_progress());
        let b = lr_sweep(&opts, silent_progress());
        assert_eq!(a.cases, b.cases);
        assert_eq!(a.failures, b.failures);
    }
}
