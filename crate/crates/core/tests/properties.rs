//! Randomized and exhaustive property tests for the algebraic layers:
//! ring axioms, evaluation homomorphisms, series inversion, and the
//! cross-consistency between Schur products and LR coefficients.

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use schurhive::lr::{lr_coeff_tableaux, schur_product_expand};
use schurhive::rational::{random_nonzero_rat, rat_int, Rat};
use schurhive::schur::{schur_eval, schur_jacobi_trudi, schur_ssyt};
use schurhive::unramified::{zeta_lhs_series, zeta_rhs_series, SatakeConfig, SatakeData};
use schurhive::weights::{enumerate_dominant, Partition};
use schurhive::{BiSeries, LaurentPoly};

fn random_rat<R: Rng>(rng: &mut R) -> Rat {
    if rng.gen_bool(0.15) {
        rat_int(0)
    } else {
        random_nonzero_rat(rng, 6, 4)
    }
}

fn random_poly<R: Rng>(rng: &mut R, nvars: usize) -> LaurentPoly {
    let mut p = LaurentPoly::zero(nvars);
    for _ in 0..rng.gen_range(0..=4) {
        let exps: Vec<i64> = (0..nvars).map(|_| rng.gen_range(-3..=3)).collect();
        let c = random_rat(rng);
        p = p.add(&LaurentPoly::monomial(exps, c));
    }
    p
}

fn random_series<R: Rng>(rng: &mut R, caps: (usize, usize)) -> BiSeries<Rat> {
    let mut s = BiSeries::constant(caps.0, caps.1, rat_int(0));
    for a in 0..=caps.0 {
        for b in 0..=caps.1 {
            s.set_coeff(a, b, random_rat(rng));
        }
    }
    s
}

#[test]
fn laurent_ring_axioms_hold_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(101);
    for round in 0..1000 {
        let nvars = rng.gen_range(1..=3);
        let a = random_poly(&mut rng, nvars);
        let b = random_poly(&mut rng, nvars);
        let c = random_poly(&mut rng, nvars);
        assert_eq!(a.add(&b), b.add(&a), "add commutes, round {round}");
        assert_eq!(
            a.add(&b).add(&c),
            a.add(&b.add(&c)),
            "add associates, round {round}"
        );
        assert_eq!(a.mul(&b), b.mul(&a), "mul commutes, round {round}");
        assert_eq!(
            a.mul(&b).mul(&c),
            a.mul(&b.mul(&c)),
            "mul associates, round {round}"
        );
        assert_eq!(
            a.mul(&b.add(&c)),
            a.mul(&b).add(&a.mul(&c)),
            "mul distributes, round {round}"
        );
        assert_eq!(a.add(&a.neg()), LaurentPoly::zero(nvars), "additive inverse");
        assert_eq!(a.mul(&LaurentPoly::one(nvars)), a, "multiplicative unit");
    }
}

#[test]
fn series_ring_axioms_hold_on_random_triples() {
    let mut rng = ChaCha8Rng::seed_from_u64(202);
    let caps = (3, 3);
    for round in 0..250 {
        let a = random_series(&mut rng, caps);
        let b = random_series(&mut rng, caps);
        let c = random_series(&mut rng, caps);
        let ab = a.mul(&b).unwrap();
        let ba = b.mul(&a).unwrap();
        assert_eq!(ab.first_mismatch(&ba).unwrap(), None, "mul commutes, round {round}");
        let left = ab.mul(&c).unwrap();
        let right = a.mul(&b.mul(&c).unwrap()).unwrap();
        assert_eq!(left.first_mismatch(&right).unwrap(), None, "mul associates");
        let dist_l = a.mul(&b.add(&c).unwrap()).unwrap();
        let dist_r = a.mul(&b).unwrap().add(&a.mul(&c).unwrap()).unwrap();
        assert_eq!(dist_l.first_mismatch(&dist_r).unwrap(), None, "mul distributes");
    }
}

#[test]
fn geometric_inverse_times_factor_is_one_randomized() {
    let mut rng = ChaCha8Rng::seed_from_u64(303);
    for _ in 0..100 {
        let c = random_nonzero_rat(&mut rng, 9, 5);
        let (a, b) = loop {
            let a = rng.gen_range(0..=2usize);
            let b = rng.gen_range(0..=2usize);
            if a + b > 0 {
                break (a, b);
            }
        };
        let caps = (4, 4);
        let inv = BiSeries::geom_inverse(c.clone(), a, b, caps.0, caps.1).unwrap();
        let fac = BiSeries::one_minus_term(c, a, b, caps.0, caps.1);
        assert!(inv.mul(&fac).unwrap().is_one());
    }
}

#[test]
fn evaluation_is_a_ring_homomorphism() {
    let mut rng = ChaCha8Rng::seed_from_u64(404);
    for _ in 0..300 {
        let nvars = rng.gen_range(1..=3);
        let p = random_poly(&mut rng, nvars);
        let q = random_poly(&mut rng, nvars);
        let point: Vec<Rat> = (0..nvars)
            .map(|_| random_nonzero_rat(&mut rng, 5, 4))
            .collect();
        let pe = p.eval(&point).unwrap();
        let qe = q.eval(&point).unwrap();
        assert_eq!(p.add(&q).eval(&point).unwrap(), &pe + &qe);
        assert_eq!(p.mul(&q).eval(&point).unwrap(), pe * qe);
    }
}

#[test]
fn schur_product_matches_lr_expansion_exhaustively() {
    // the product of two Schur polynomials equals the coefficient-weighted
    // sum from the LR expansion, as exact polynomials
    for total in 0..=8i64 {
        for sx in 0..=total {
            for x in enumerate_dominant(4, sx) {
                for z in enumerate_dominant(4, total - sx) {
                    let expansion = schur_product_expand(&x, &z);
                    for nvars in 1..=4usize {
                        let lhs = schur_jacobi_trudi(&x, nvars).mul(&schur_jacobi_trudi(&z, nvars));
                        let mut rhs = LaurentPoly::zero(nvars);
                        for (u, coeff) in &expansion {
                            rhs = rhs.add(
                                &schur_jacobi_trudi(u, nvars).scale(&rat_int(*coeff as i64)),
                            );
                        }
                        assert_eq!(lhs, rhs, "x={x} z={z} nvars={nvars}");
                    }
                }
            }
        }
    }
}

#[test]
fn lr_coefficients_respect_degree_and_containment() {
    let mut rng = ChaCha8Rng::seed_from_u64(505);
    for _ in 0..400 {
        let mut draw = || {
            let parts: Vec<i64> = {
                let rows = rng.gen_range(0..=4usize);
                let mut v: Vec<i64> = (0..rows).map(|_| rng.gen_range(0..=5i64)).collect();
                v.sort_unstable_by(|a, b| b.cmp(a));
                v
            };
            Partition::new(parts).unwrap()
        };
        let x = draw();
        let z = draw();
        let u = draw();
        let c = lr_coeff_tableaux(&x, &z, &u);
        if c > 0 {
            assert_eq!(x.size() + z.size(), u.size(), "x={x} z={z} u={u}");
            assert!(u.contains(&x), "x={x} u={u}");
            assert!(u.contains(&z), "z={z} u={u}");
        }
    }
}

#[test]
fn jacobi_trudi_matches_tableaux_on_larger_random_shapes_at_points() {
    let mut rng = ChaCha8Rng::seed_from_u64(606);
    let mut done = 0;
    while done < 100 {
        let size = rng.gen_range(9..=12i64);
        let nvars = rng.gen_range(1..=5usize);
        let shapes = enumerate_dominant(nvars, size);
        let lam = shapes[rng.gen_range(0..shapes.len())].clone();
        let det = schur_jacobi_trudi(&lam, nvars);
        let tab = schur_ssyt(&lam, nvars, 12).unwrap();
        let point: Vec<Rat> = (0..nvars)
            .map(|_| random_nonzero_rat(&mut rng, 4, 3))
            .collect();
        assert_eq!(det.eval(&point).unwrap(), tab.eval(&point).unwrap(), "{lam} in {nvars} vars");
        // the numeric fast path agrees with both
        assert_eq!(schur_eval(&lam, &point), det.eval(&point).unwrap());
        done += 1;
    }
}

#[test]
fn absent_variable_degenerations_concentrate_at_degree_zero() {
    let mut rng = ChaCha8Rng::seed_from_u64(707);
    // n = 0: nothing can contribute in the second variable
    let c = SatakeConfig::new(3, 1, 0, 1).unwrap();
    let d = SatakeData::random(c, rat_int(2), &mut rng).unwrap();
    let lhs = zeta_lhs_series(&d, (4, 4)).unwrap();
    let rhs = zeta_rhs_series(&d, (4, 4)).unwrap();
    for a in 0..=4usize {
        for b in 1..=4usize {
            assert_eq!(lhs.coeff(a, b), &rat_int(0));
            assert_eq!(rhs.coeff(a, b), &rat_int(0));
        }
    }
    // m = 0: nothing in the first variable
    let c = SatakeConfig::new(3, 0, 1, 0).unwrap();
    let d = SatakeData::random(c, rat_int(2), &mut rng).unwrap();
    let lhs = zeta_lhs_series(&d, (4, 4)).unwrap();
    let rhs = zeta_rhs_series(&d, (4, 4)).unwrap();
    for a in 1..=4usize {
        for b in 0..=4usize {
            assert_eq!(lhs.coeff(a, b), &rat_int(0));
            assert_eq!(rhs.coeff(a, b), &rat_int(0));
        }
    }
}
