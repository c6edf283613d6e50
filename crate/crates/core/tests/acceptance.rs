//! The acceptance gate: eight end-to-end checks covering the worked
//! examples and the exhaustive/randomized sweeps. Each test prints one
//! `PASS` line (visible with `--nocapture`) and enforces its runtime
//! budget where one is defined.

use std::time::Instant;

use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use schurhive::hive::{count_anti_hives, count_hives, enumerate_fillings, grid_rows, HiveMode};
use schurhive::lr::lr_coeff_tableaux;
use schurhive::rational::{random_nonzero_rat, Rat};
use schurhive::schur::{schur_glweight, schur_glweight_eval};
use schurhive::sweep::{
    cauchy_sweep, delta_sweep, dual_sweep, lr_sweep, schur_sweep, silent_progress, tao_sweep,
    unramified_sweep, CauchySweepOptions, DeltaSweepOptions, DualSweepOptions, LrSweepOptions,
    SchurSweepOptions, TaoSweepOptions, UnramifiedSweepOptions,
};
use schurhive::weights::{GLWeight, Partition};

fn p(parts: &[i64]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn w(entries: &[i64]) -> GLWeight {
    GLWeight::new(entries.to_vec())
}

fn budget(start: Instant, limit_secs: f64, label: &str) -> f64 {
    let elapsed = start.elapsed().as_secs_f64();
    assert!(
        elapsed < limit_secs,
        "{label} took {elapsed:.2}s, budget {limit_secs}s"
    );
    elapsed
}

#[test]
fn criterion_1_hive_worked_example() {
    let start = Instant::now();
    let (x, y, z) = (p(&[2, 1]), p(&[2, 1]), p(&[3, 2, 1]));

    let tableaux = lr_coeff_tableaux(&x, &y, &z);
    let hives = count_hives(&x, &y, &z, 3).unwrap();
    let anti = count_anti_hives(&x, &y, &z, 3).unwrap();
    assert_eq!(tableaux, 2);
    assert_eq!(hives.count, 2);
    assert_eq!(anti.count, 2);

    let fillings = enumerate_fillings(&x, &y, &z, 3, HiveMode::Hive, 100).unwrap();
    let mut grids: Vec<Vec<Vec<i64>>> =
        fillings.iter().map(|f| grid_rows(f, 3)).collect();
    grids.sort();
    let expected: Vec<Vec<Vec<i64>>> = [4, 5]
        .iter()
        .map(|&t| vec![vec![3], vec![3, 5], vec![2, t, 6], vec![0, 3, 5, 6]])
        .collect();
    assert_eq!(grids, expected, "witness grids with interior value 4 and 5");

    let elapsed = budget(start, 1.0, "criterion 1");
    println!("PASS criterion-1: hive worked example count 2 with witnesses 4,5 ({elapsed:.2}s)");
}

#[test]
fn criterion_2_rank4_schur_identity() {
    let start = Instant::now();
    let lhs_a = w(&[2, 1, 0, 0]);
    let lhs_b = w(&[0, 0, 0, -2]);
    let rhs = [
        w(&[2, 1, 0, -2]),
        w(&[1, 0, 0, 0]),
        w(&[1, 1, 0, -1]),
        w(&[2, 0, 0, -1]),
    ];

    // symbolic, in 4 variables
    let lhs_poly = schur_glweight(&lhs_a)
        .unwrap()
        .mul(&schur_glweight(&lhs_b).unwrap());
    let mut rhs_poly = schurhive::LaurentPoly::zero(4);
    for mu in &rhs {
        rhs_poly = rhs_poly.add(&schur_glweight(mu).unwrap());
    }
    assert_eq!(lhs_poly, rhs_poly, "symbolic identity in 4 variables");

    // 20 random rational points
    let mut rng = ChaCha8Rng::seed_from_u64(12);
    for round in 0..20 {
        let point: Vec<Rat> = (0..4).map(|_| random_nonzero_rat(&mut rng, 7, 5)).collect();
        let lhs_val = schur_glweight_eval(&lhs_a, &point).unwrap()
            * schur_glweight_eval(&lhs_b, &point).unwrap();
        let rhs_val: Rat = rhs
            .iter()
            .map(|mu| schur_glweight_eval(mu, &point).unwrap())
            .sum();
        assert_eq!(lhs_val, rhs_val, "point draw {round}");
    }

    let elapsed = budget(start, 5.0, "criterion 2");
    println!("PASS criterion-2: rank-4 Schur product identity, symbolic and at 20 points ({elapsed:.2}s)");
}

#[test]
fn criterion_3_square_identity_sweep() {
    let start = Instant::now();
    let report = tao_sweep(&TaoSweepOptions::default(), silent_progress());
    assert!(report.cases > 0);
    assert!(
        report.passed(),
        "{} failures, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
    let elapsed = budget(start, 60.0, "criterion 3");
    println!(
        "PASS criterion-3: LR square identity on {} exhaustive cases ({elapsed:.2}s)",
        report.cases
    );
}

#[test]
fn criterion_4_zeta_series_identity() {
    let start = Instant::now();
    let report = unramified_sweep(&UnramifiedSweepOptions::default(), silent_progress()).unwrap();
    // 4 + 10 + 20 + 35 admissible configurations, 5 draws each
    assert_eq!(report.cases, 69 * 5);
    assert!(
        report.passed(),
        "{} failures, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
    let elapsed = budget(start, 300.0, "criterion 4");
    println!(
        "PASS criterion-4: zeta-series identity on {} configuration draws ({elapsed:.2}s)",
        report.cases
    );
}

#[test]
fn criterion_5_three_way_lr_agreement() {
    let start = Instant::now();
    let report = lr_sweep(&LrSweepOptions::default(), silent_progress());
    assert!(report.cases > 500);
    assert!(
        report.passed(),
        "{} failures, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "PASS criterion-5: tableau/hive/anti-hive agreement on {} cases ({elapsed:.2}s)",
        report.cases
    );
}

#[test]
fn criterion_6_symmetric_power_traces() {
    let start = Instant::now();
    let report = cauchy_sweep(&CauchySweepOptions::default(), silent_progress());
    assert_eq!(report.cases, 50 * 16);
    assert!(
        report.passed(),
        "{} failures, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "PASS criterion-6: symmetric-power trace identity on {} draws ({elapsed:.2}s)",
        report.cases
    );
}

#[test]
fn criterion_7_modulus_cancellation() {
    let start = Instant::now();
    let report = delta_sweep(&DeltaSweepOptions::default(), silent_progress());
    assert!(report.cases > 0);
    assert!(
        report.passed(),
        "{} failures, first: {:?}",
        report.failures.len(),
        report.failures.first()
    );
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "PASS criterion-7: modulus-character cancellation on {} cases ({elapsed:.2}s)",
        report.cases
    );
}

#[test]
fn criterion_8_schur_oracle_equivalence() {
    let start = Instant::now();
    let schur_report = schur_sweep(&SchurSweepOptions::default(), silent_progress());
    assert!(schur_report.cases > 0);
    assert!(
        schur_report.passed(),
        "{} failures, first: {:?}",
        schur_report.failures.len(),
        schur_report.failures.first()
    );
    let dual_report = dual_sweep(&DualSweepOptions::default(), silent_progress());
    assert!(dual_report.cases > 0);
    assert!(
        dual_report.passed(),
        "{} failures, first: {:?}",
        dual_report.failures.len(),
        dual_report.failures.first()
    );
    let elapsed = start.elapsed().as_secs_f64();
    println!(
        "PASS criterion-8: determinant/tableau equivalence ({} cases) and inverse-point duality ({} cases) ({elapsed:.2}s)",
        schur_report.cases, dual_report.cases
    );
}

// Shared-pool sanity: the random draws must not depend on how many worker
// threads the sweeps run on.
#[test]
fn sweeps_identical_across_thread_counts() {
    let opts = LrSweepOptions {
        exhaustive_max_size: 4,
        exhaustive_max_parts: 2,
        random_cases: 20,
        random_max_parts: 3,
        random_max_part: 4,
        seed: 9,
    };
    let single = rayon::ThreadPoolBuilder::new()
        .num_threads(1)
        .build()
        .unwrap()
        .install(|| lr_sweep(&opts, silent_progress()));
    let multi = lr_sweep(&opts, silent_progress());
    assert_eq!(single.cases, multi.cases);
    assert_eq!(single.failures, multi.failures);
}
