//! Schur polynomials for partitions and for dominant GL weights.
//!
//! Two independent algorithms are provided. The fast path expands the
//! Jacobi–Trudi determinant `det(h_{λ_i - i + j})` in cached complete
//! homogeneous symmetric polynomials; the oracle path sums monomials over
//! semistandard Young tableaux and is size-capped. Weights with negative
//! entries are handled by shifting into partition range and dividing by a
//! power of the product of all variables (a determinant-character twist).

use std::collections::{BTreeMap, HashMap};
use std::sync::Mutex;

use num::traits::{One, Zero};
use once_cell::sync::Lazy;

use crate::error::{Error, Result};
use crate::polyring::laurent::LaurentPoly;
use crate::rational::Rat;
use crate::weights::{star_dual, GLWeight, Partition};

/// Largest `|λ|` the tableau-enumeration oracle accepts by default.
pub const DEFAULT_ORACLE_CAP: usize = 12;

static H_CACHE: Lazy<Mutex<BTreeMap<(usize, usize), LaurentPoly>>> =
    Lazy::new(|| Mutex::new(BTreeMap::new()));

fn h_polys_to(max_k: usize, nvars: usize) -> Vec<LaurentPoly> {
    let mut h = vec![LaurentPoly::zero(nvars); max_k + 1];
    h[0] = LaurentPoly::one(nvars);
    for v in 0..nvars {
        let x = LaurentPoly::var(nvars, v);
        // forward sweep so each variable may repeat
        for d in 1..=max_k {
            let t = x.mul(&h[d - 1]);
            h[d] = h[d].add(&t);
        }
    }
    h
}

/// Complete homogeneous symmetric polynomial `h_k` in `nvars` variables;
/// zero for negative `k`. Results are memoized process-wide.
pub fn complete_homogeneous(k: i64, nvars: usize) -> LaurentPoly {
    if k < 0 {
        return LaurentPoly::zero(nvars);
    }
    let k = k as usize;
    {
        let cache = H_CACHE.lock().unwrap();
        if let Some(p) = cache.get(&(nvars, k)) {
            return p.clone();
        }
    }
    let hs = h_polys_to(k, nvars);
    let out = hs[k].clone();
    let mut cache = H_CACHE.lock().unwrap();
    for (d, p) in hs.into_iter().enumerate() {
        cache.entry((nvars, d)).or_insert(p);
    }
    out
}

/// Complete homogeneous values `h_0..h_max_k` at a rational point.
pub(crate) fn h_values_at(max_k: usize, point: &[Rat]) -> Vec<Rat> {
    let mut h = vec![Rat::zero(); max_k + 1];
    h[0] = Rat::one();
    for p in point {
        for d in 1..=max_k {
            let add = &h[d - 1] * p;
            h[d] = &h[d] + &add;
        }
    }
    h
}

fn det_sub(
    mat: &[Vec<LaurentPoly>],
    mask: u32,
    nvars: usize,
    memo: &mut HashMap<u32, LaurentPoly>,
) -> LaurentPoly {
    if let Some(d) = memo.get(&mask) {
        return d.clone();
    }
    let ell = mat.len();
    let row = ell - mask.count_ones() as usize;
    let mut acc = LaurentPoly::zero(nvars);
    let mut negate = false;
    for (j, col) in mat[row].iter().enumerate() {
        let bit = 1u32 << j;
        if mask & bit == 0 {
            continue;
        }
        if !col.is_zero() {
            let sub = det_sub(mat, mask & !bit, nvars, memo);
            let term = col.mul(&sub);
            acc = if negate { acc.sub(&term) } else { acc.add(&term) };
        }
        negate = !negate;
    }
    memo.insert(mask, acc.clone());
    acc
}

/// Determinant of a square polynomial matrix by memoized Laplace expansion.
/// Shared minors make this exponential only in the matrix size, which stays
/// small here (one row per partition part).
fn det_poly(mat: &[Vec<LaurentPoly>], nvars: usize) -> LaurentPoly {
    let ell = mat.len();
    assert!(ell < 32, "determinant size out of supported range");
    if ell == 0 {
        return LaurentPoly::one(nvars);
    }
    let mut memo = HashMap::new();
    memo.insert(0u32, LaurentPoly::one(nvars));
    let full = if ell == 32 { u32::MAX } else { (1u32 << ell) - 1 };
    det_sub(mat, full, nvars, &mut memo)
}

/// Exact determinant of a rational matrix by Gaussian elimination.
pub(crate) fn det_rat(mut m: Vec<Vec<Rat>>) -> Rat {
    let n = m.len();
    let mut det = Rat::one();
    for col in 0..n {
        let Some(pivot) = (col..n).find(|&r| !m[r][col].is_zero()) else {
            return Rat::zero();
        };
        if pivot != col {
            m.swap(pivot, col);
            det = -det;
        }
        let pv = m[col][col].clone();
        det = &det * &pv;
        for r in col + 1..n {
            if m[r][col].is_zero() {
                continue;
            }
            let factor = &m[r][col] / &pv;
            for c in col..n {
                let sub = &factor * &m[col][c];
                m[r][c] = &m[r][c] - &sub;
            }
        }
    }
    det
}

fn jt_entry_index(lam: &Partition, i: usize, j: usize) -> i64 {
    lam.part(i) - i as i64 + j as i64
}

/// Schur polynomial `s_λ(x_1..x_N)` via the Jacobi–Trudi determinant.
/// Returns the zero polynomial when `λ` has more parts than variables.
pub fn schur_jacobi_trudi(lam: &Partition, nvars: usize) -> LaurentPoly {
    let ell = lam.num_parts();
    if ell == 0 {
        return LaurentPoly::one(nvars);
    }
    if ell > nvars {
        return LaurentPoly::zero(nvars);
    }
    let mat: Vec<Vec<LaurentPoly>> = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| complete_homogeneous(jt_entry_index(lam, i, j), nvars))
                .collect()
        })
        .collect();
    det_poly(&mat, nvars)
}

/// Value of `s_λ` at a rational point, via the Jacobi–Trudi determinant with
/// numeric entries (no symbolic expansion).
pub fn schur_eval(lam: &Partition, point: &[Rat]) -> Rat {
    let ell = lam.num_parts();
    if ell == 0 {
        return Rat::one();
    }
    if ell > point.len() {
        return Rat::zero();
    }
    let max_k = (lam.part(0) + ell as i64 - 1) as usize;
    let h = h_values_at(max_k, point);
    let mat: Vec<Vec<Rat>> = (0..ell)
        .map(|i| {
            (0..ell)
                .map(|j| {
                    let k = jt_entry_index(lam, i, j);
                    if k < 0 {
                        Rat::zero()
                    } else {
                        h[k as usize].clone()
                    }
                })
                .collect()
        })
        .collect();
    det_rat(mat)
}

fn ssyt_fill(
    rows: &[usize],
    nvars: usize,
    r: usize,
    c: usize,
    tab: &mut [Vec<usize>],
    content: &mut [i64],
    terms: &mut BTreeMap<Vec<i64>, Rat>,
) {
    if r == rows.len() {
        let entry = terms.entry(content.to_vec()).or_insert_with(Rat::zero);
        *entry = &*entry + &Rat::one();
        return;
    }
    let (nr, nc) = if c + 1 < rows[r] { (r, c + 1) } else { (r + 1, 0) };
    let mut lo = 1usize;
    if c > 0 {
        lo = lo.max(tab[r][c - 1]);
    }
    if r > 0 {
        lo = lo.max(tab[r - 1][c] + 1);
    }
    for v in lo..=nvars {
        tab[r][c] = v;
        content[v - 1] += 1;
        ssyt_fill(rows, nvars, nr, nc, tab, content, terms);
        content[v - 1] -= 1;
    }
}

/// Schur polynomial as a monomial sum over semistandard Young tableaux with
/// entries in `1..=nvars`. Independent of the determinant route; refuses
/// shapes larger than `cap` cells.
pub fn schur_ssyt(lam: &Partition, nvars: usize, cap: usize) -> Result<LaurentPoly> {
    if lam.size() as usize > cap {
        return Err(Error::OracleRefused(format!(
            "shape with {} cells exceeds tableau-enumeration cap {}",
            lam.size(),
            cap
        )));
    }
    let ell = lam.num_parts();
    if ell == 0 {
        return Ok(LaurentPoly::one(nvars));
    }
    if ell > nvars {
        return Ok(LaurentPoly::zero(nvars));
    }
    let rows: Vec<usize> = (0..ell).map(|i| lam.part(i) as usize).collect();
    let mut tab: Vec<Vec<usize>> = rows.iter().map(|&w| vec![0; w]).collect();
    let mut content = vec![0i64; nvars];
    let mut terms = BTreeMap::new();
    ssyt_fill(&rows, nvars, 0, 0, &mut tab, &mut content, &mut terms);
    Ok(LaurentPoly::from_terms(nvars, terms))
}

fn glweight_shift_parts(mu: &GLWeight, shift: i64) -> Result<Partition> {
    let shifted = mu.shifted(shift);
    debug_assert!(shifted.min_entry() >= 0);
    shifted.to_partition()
}

fn schur_glweight_with_shift(mu: &GLWeight, shift: i64) -> Result<LaurentPoly> {
    if !mu.dominant() {
        return Err(Error::NonDominant(format!("{}", mu)));
    }
    let n = mu.rank();
    let lam = glweight_shift_parts(mu, shift)?;
    let poly = schur_jacobi_trudi(&lam, n);
    if shift == 0 {
        return Ok(poly);
    }
    Ok(poly.mul_monomial(&vec![-shift; n], &Rat::one()))
}

/// Schur polynomial of a dominant GL weight, as a Laurent polynomial in
/// rank-many variables. Negative entries are absorbed by a power of
/// `(x_1⋯x_N)^{-1}`.
pub fn schur_glweight(mu: &GLWeight) -> Result<LaurentPoly> {
    let shift = (-mu.min_entry()).max(0);
    schur_glweight_with_shift(mu, shift)
}

/// Value of the GL-weight Schur polynomial at a point of nonzero rationals.
pub fn schur_glweight_eval(mu: &GLWeight, point: &[Rat]) -> Result<Rat> {
    if !mu.dominant() {
        return Err(Error::NonDominant(format!("{}", mu)));
    }
    if point.len() != mu.rank() {
        return Err(Error::RankMismatch(format!(
            "weight of rank {} evaluated at {} coordinates",
            mu.rank(),
            point.len()
        )));
    }
    let shift = (-mu.min_entry()).max(0);
    let lam = glweight_shift_parts(mu, shift)?;
    let base = schur_eval(&lam, point);
    if shift == 0 {
        return Ok(base);
    }
    let mut scale = Rat::one();
    for p in point {
        if p.is_zero() {
            return Err(Error::Eval(
                "zero coordinate with a negative-degree weight".into(),
            ));
        }
        scale = &scale * p;
    }
    let denom = crate::rational::rat_pow(&scale, shift)?;
    Ok(base / denom)
}

/// Checks the inversion symmetry: the Schur value of `(v, 0…0)` at the
/// entrywise inverses of `point` equals that of `(0…0, v*)` at `point`.
pub fn schur_dual_check(v: &Partition, l: usize, point: &[Rat]) -> Result<bool> {
    if v.num_parts() > l {
        return Err(Error::RankMismatch(format!(
            "partition {} does not fit in rank {}",
            v, l
        )));
    }
    if point.len() != l {
        return Err(Error::RankMismatch(format!(
            "expected {} coordinates, got {}",
            l,
            point.len()
        )));
    }
    let mut inv_point = Vec::with_capacity(l);
    for p in point {
        if p.is_zero() {
            return Err(Error::Eval("cannot invert a zero coordinate".into()));
        }
        inv_point.push(Rat::one() / p);
    }
    let n = v.num_parts();
    let front = GLWeight::new(v.padded(l)?);
    let mut back_entries = vec![0i64; l - n];
    back_entries.extend_from_slice(star_dual(v, n)?.entries());
    let back = GLWeight::new(back_entries);
    let lhs = schur_glweight_eval(&front, &inv_point)?;
    let rhs = schur_glweight_eval(&back, point)?;
    Ok(lhs == rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};
    use rand::rngs::StdRng;
    use rand::{Rng, SeedableRng};

    fn p(parts: &[i64]) -> Partition {
        Partition::new(parts.to_vec()).unwrap()
    }

    fn w(entries: &[i64]) -> GLWeight {
        GLWeight::new(entries.to_vec())
    }

    /// Ratio-of-alternants evaluation: `det(p_j^{λ_i+N-1-i}) / det(p_j^{N-1-i})`.
    /// Requires pairwise distinct nonzero coordinates. Third independent
    /// route used only as a test oracle.
    fn bialternant_eval(lam: &Partition, point: &[Rat]) -> Rat {
        let n = point.len();
        if lam.num_parts() > n {
            return Rat::zero();
        }
        let padded = lam.padded(n).unwrap();
        let power = |base: &Rat, e: i64| crate::rational::rat_pow(base, e).unwrap();
        let num: Vec<Vec<Rat>> = (0..n)
            .map(|i| {
                (0..n)
                    .map(|j| power(&point[j], padded[i] + (n - 1 - i) as i64))
                    .collect()
            })
            .collect();
        let den: Vec<Vec<Rat>> = (0..n)
            .map(|i| (0..n).map(|j| power(&point[j], (n - 1 - i) as i64)).collect())
            .collect();
        det_rat(num) / det_rat(den)
    }

    fn random_point(rng: &mut StdRng, n: usize) -> Vec<Rat> {
        (0..n)
            .map(|_| loop {
                let num = rng.gen_range(-7i64..=7);
                let den = rng.gen_range(1i64..=5);
                if num != 0 {
                    return rat(num, den);
                }
            })
            .collect()
    }

    #[test]
    fn h_small_cases() {
        // h_1 = x1+x2, h_2 = x1^2+x1x2+x2^2
        let h1 = complete_homogeneous(1, 2);
        assert_eq!(h1, LaurentPoly::var(2, 0).add(&LaurentPoly::var(2, 1)));
        let h2 = complete_homogeneous(2, 2);
        assert_eq!(h2.num_terms(), 3);
        assert_eq!(h2.coefficient(&[1, 1]), Rat::one());
        assert!(complete_homogeneous(-1, 2).is_zero());
        assert!(!complete_homogeneous(0, 3).is_zero());
    }

    #[test]
    fn jacobi_trudi_base_cases() {
        // single-box shape gives the sum of the variables
        let s1 = schur_jacobi_trudi(&p(&[1]), 2);
        assert_eq!(s1, complete_homogeneous(1, 2));
        // empty shape gives 1
        assert!(schur_jacobi_trudi(&Partition::empty(), 3).num_terms() == 1);
        // more rows than variables vanishes
        assert!(schur_jacobi_trudi(&p(&[1, 1, 1]), 2).is_zero());
    }

    #[test]
    fn tableau_count_at_ones() {
        // 8 semistandard tableaux of shape (2,1) with entries <= 3
        let s = schur_jacobi_trudi(&p(&[2, 1]), 3);
        let v = s.eval(&[rat_int(1), rat_int(1), rat_int(1)]).unwrap();
        assert_eq!(v, rat_int(8));
    }

    #[test]
    fn ssyt_spot_examples() {
        let s2 = schur_ssyt(&p(&[2]), 2, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(s2.coefficient(&[2, 0]), Rat::one());
        assert_eq!(s2.coefficient(&[1, 1]), Rat::one());
        assert_eq!(s2.coefficient(&[0, 2]), Rat::one());
        assert_eq!(s2.num_terms(), 3);

        let s11 = schur_ssyt(&p(&[1, 1]), 2, DEFAULT_ORACLE_CAP).unwrap();
        assert_eq!(s11, LaurentPoly::monomial(vec![1, 1], Rat::one()));

        let s111 = schur_ssyt(&p(&[1, 1, 1]), 2, DEFAULT_ORACLE_CAP).unwrap();
        assert!(s111.is_zero());
    }

    #[test]
    fn ssyt_cap_is_enforced() {
        let big = p(&[7, 6]);
        assert!(matches!(
            schur_ssyt(&big, 3, DEFAULT_ORACLE_CAP),
            Err(Error::OracleRefused(_))
        ));
        assert!(schur_ssyt(&big, 3, 13).is_ok());
    }

    #[test]
    fn jt_matches_ssyt_exhaustively() {
        for n in 1..=3usize {
            for size in 0..=6i64 {
                for lam in crate::weights::enumerate_dominant(4, size) {
                    let a = schur_jacobi_trudi(&lam, n);
                    let b = schur_ssyt(&lam, n, DEFAULT_ORACLE_CAP).unwrap();
                    assert_eq!(a, b, "shape {} in {} vars", lam, n);
                }
            }
        }
    }

    #[test]
    fn numeric_eval_matches_symbolic_and_bialternant() {
        let mut rng = StdRng::seed_from_u64(7);
        for lam in [p(&[3, 1]), p(&[2, 2, 1]), p(&[4]), p(&[1, 1, 1])] {
            for n in 2..=4usize {
                let sym = schur_jacobi_trudi(&lam, n);
                for _ in 0..5 {
                    let pt = random_point(&mut rng, n);
                    assert_eq!(schur_eval(&lam, &pt), sym.eval(&pt).unwrap());
                    // bialternant needs distinct coordinates
                    let distinct: Vec<Rat> =
                        (1..=n as i64).map(|i| rat(i + 1, 2 * i + 1)).collect();
                    assert_eq!(schur_eval(&lam, &distinct), bialternant_eval(&lam, &distinct));
                }
            }
        }
    }

    #[test]
    fn symmetry_under_transposition() {
        let s = schur_jacobi_trudi(&p(&[3, 1]), 3);
        assert_eq!(s, s.permute_vars(&[1, 0, 2]));
        assert_eq!(s, s.permute_vars(&[0, 2, 1]));
    }

    #[test]
    fn homogeneity() {
        let lam = p(&[3, 2]);
        let s = schur_jacobi_trudi(&lam, 3);
        for (exps, _) in s.terms() {
            assert_eq!(exps.iter().sum::<i64>(), lam.size());
        }
    }

    #[test]
    fn glweight_negative_tail() {
        // weight (0,0,0,-2) equals shape (2,2,2) divided by the squared
        // product of all four variables
        let mu = w(&[0, 0, 0, -2]);
        let viaweight = schur_glweight(&mu).unwrap();
        let shifted = schur_jacobi_trudi(&p(&[2, 2, 2]), 4);
        let expected = shifted.mul_monomial(&[-2, -2, -2, -2], &Rat::one());
        assert_eq!(viaweight, expected);

        assert_eq!(schur_glweight(&w(&[0, 0, 0])).unwrap(), LaurentPoly::one(3));
    }

    #[test]
    fn glweight_shift_independence_and_covariance() {
        let mu = w(&[1, 0, -1]);
        let a = schur_glweight_with_shift(&mu, 1).unwrap();
        let b = schur_glweight_with_shift(&mu, 3).unwrap();
        assert_eq!(a, b);

        // adding a constant to the weight multiplies by that determinant power
        let shifted = schur_glweight(&w(&[3, 2, 1])).unwrap();
        let base = schur_glweight(&w(&[2, 1, 0])).unwrap();
        assert_eq!(shifted, base.mul_monomial(&[1, 1, 1], &Rat::one()));
    }

    #[test]
    fn glweight_eval_matches_shift_and_divide() {
        let mu = w(&[1, 0, -1]);
        let pt = vec![rat_int(2), rat_int(1), rat(1, 2)];
        let direct = schur_glweight_eval(&mu, &pt).unwrap();
        let prod = rat_int(2) * rat_int(1) * rat(1, 2);
        let expected = schur_eval(&p(&[2, 1]), &pt) / prod;
        assert_eq!(direct, expected);
    }

    #[test]
    fn glweight_rejects_bad_input() {
        assert!(matches!(
            schur_glweight(&w(&[0, 1])),
            Err(Error::NonDominant(_))
        ));
        let mu = w(&[0, -1]);
        assert!(schur_glweight_eval(&mu, &[rat_int(0), rat_int(1)]).is_err());
        assert!(schur_glweight_eval(&w(&[1, 0]), &[rat_int(1)]).is_err());
    }

    #[test]
    fn dual_check_hand_case() {
        // single-box shape, rank 2, point (2,3): 1/2+1/3 = (2+3)/(2*3)
        assert!(schur_dual_check(&p(&[1]), 2, &[rat_int(2), rat_int(3)]).unwrap());
        assert!(schur_dual_check(&Partition::empty(), 3, &[rat_int(1), rat_int(2), rat_int(5)])
            .unwrap());
    }

    #[test]
    fn dual_check_random_points() {
        let mut rng = StdRng::seed_from_u64(11);
        for (v, l) in [(p(&[2, 1]), 3), (p(&[3]), 4), (p(&[2, 2]), 5), (p(&[1, 1, 1]), 4)] {
            for _ in 0..10 {
                let pt = random_point(&mut rng, l);
                assert!(schur_dual_check(&v, l, &pt).unwrap(), "{} rank {}", v, l);
            }
        }
    }

    #[test]
    fn dual_check_rejects_zero_point() {
        assert!(schur_dual_check(&p(&[1]), 2, &[rat_int(0), rat_int(1)]).is_err());
    }
}
