//! Littlewood–Richardson coefficients and the hive-based product identity.
//!
//! The tableau counter here is the deliberately low-tech reference
//! implementation: it enumerates skew semistandard fillings whose reverse
//! reading word is a lattice word, with pruning that only ever discards
//! fillings violating a rule. The hive counter in [`crate::hive`] is the
//! fast path; [`verify_tao`] pits one against the other on the two sides of
//! the product identity, so every verification is also a cross-algorithm
//! check.

use std::collections::BTreeMap;

use crate::error::{Error, Result};
use crate::hive::{count_hives, HiveCount};
use crate::rational::{rat_int, Rat};
use crate::schur::{schur_eval, schur_glweight_eval};
use crate::weights::{
    central_weight, enumerate_dominant, lambda_shift, star_dual, v_tilde, GLWeight, Partition,
};

struct SkewFill<'a> {
    u_rows: Vec<i64>,
    x_rows: Vec<i64>,
    content_cap: &'a [i64],
    // counts per value, 1-based in slot value-1
    content: Vec<i64>,
    // current values by (row, column); only skew cells are meaningful
    cells: Vec<Vec<i64>>,
    count: u64,
}

impl SkewFill<'_> {
    /// Fill cells row by row, each row right-to-left, so the sequence of
    /// placed values is exactly the reverse reading word; the lattice
    /// condition then becomes a running-count comparison.
    fn fill(&mut self, row: usize, col_back: i64) {
        if row == self.u_rows.len() {
            self.count += 1;
            return;
        }
        let col = col_back;
        if col < self.x_rows[row] {
            self.fill(row + 1, self.u_rows.get(row + 1).map_or(0, |w| w - 1));
            return;
        }
        let c = col as usize;
        let nvals = self.content_cap.len();
        for val in 1..=nvals as i64 {
            let vi = (val - 1) as usize;
            // content bound
            if self.content[vi] >= self.content_cap[vi] {
                continue;
            }
            // lattice: a later value needs a strictly larger running count
            // of its predecessor
            if val > 1 && self.content[vi] + 1 > self.content[vi - 1] {
                continue;
            }
            // weak increase along the row (right neighbour already placed)
            if col + 1 < self.u_rows[row] && val > self.cells[row][c + 1] {
                continue;
            }
            // strict increase down the column
            if row > 0 && col < self.u_rows[row - 1] && col >= self.x_rows[row - 1] {
                if val <= self.cells[row - 1][c] {
                    continue;
                }
            }
            self.cells[row][c] = val;
            self.content[vi] += 1;
            self.fill(row, col_back - 1);
            self.content[vi] -= 1;
        }
    }
}

/// The coefficient `c_{x,z}^u`: skew semistandard fillings of `u/x` with
/// content `z` and lattice reverse reading word. Degree or containment
/// failures simply count zero.
pub fn lr_coeff_tableaux(x: &Partition, z: &Partition, u: &Partition) -> u64 {
    if x.size() + z.size() != u.size() {
        return 0;
    }
    if !u.contains(x) || !u.contains(z) {
        return 0;
    }
    if x == u {
        return if z.is_empty() { 1 } else { 0 };
    }
    let rows = u.num_parts();
    let u_rows: Vec<i64> = (0..rows).map(|i| u.part(i)).collect();
    let x_rows: Vec<i64> = (0..rows).map(|i| x.part(i)).collect();
    let content_cap: Vec<i64> = (0..z.num_parts()).map(|i| z.part(i)).collect();
    let mut f = SkewFill {
        cells: u_rows.iter().map(|&w| vec![0; w as usize]).collect(),
        u_rows,
        x_rows,
        content_cap: &content_cap,
        content: vec![0; content_cap.len()],
        count: 0,
    };
    let start_col = f.u_rows[0] - 1;
    f.fill(0, start_col);
    f.count
}

/// Expansion of the product of two Schur functions: every `u` with
/// `c_{x,z}^u > 0`, with its coefficient.
pub fn schur_product_expand(x: &Partition, z: &Partition) -> BTreeMap<Partition, u64> {
    let total = x.size() + z.size();
    let max_parts = x.num_parts() + z.num_parts();
    let max_part = x.first() + z.first();
    let mut out = BTreeMap::new();
    for u in crate::weights::enumerate_dominant_bounded(max_parts, total, max_part.max(0)) {
        let c = lr_coeff_tableaux(x, z, &u);
        if c > 0 {
            out.insert(u, c);
        }
    }
    out
}

/// Outcome of one instance of the hive product identity.
#[derive(Clone, Debug)]
pub struct TaoOutcome {
    /// Hive count of `c_{ṽ,u}^λ` at rank `l`.
    pub lhs: u64,
    /// Tableau-rule sum over the intermediate shapes.
    pub rhs: u64,
    /// Intermediate shapes with their two coefficients; only nonzero
    /// products listed.
    pub witness_z: Vec<(Partition, u64, u64)>,
    pub equal: bool,
    /// True when the two factor pairs were exchanged to reach the
    /// normal-form case `m ≥ n`.
    pub swapped: bool,
}

/// Checks `c_{ṽ,u}^λ = Σ_z c_{x,z}^u · c_{y,z}^v` with the left side
/// counted by hives at rank `l` and the right side by tableaux.
pub fn verify_tao(
    x: &Partition,
    u: &Partition,
    y: &Partition,
    v: &Partition,
    l: usize,
    m: usize,
    n: usize,
) -> Result<TaoOutcome> {
    if x.num_parts() > m || u.num_parts() > m {
        return Err(Error::RankMismatch(format!(
            "{} and {} must fit in {} parts",
            x, u, m
        )));
    }
    if y.num_parts() > n || v.num_parts() > n {
        return Err(Error::RankMismatch(format!(
            "{} and {} must fit in {} parts",
            y, v, n
        )));
    }
    if l < m + n + 1 {
        return Err(Error::Config(format!(
            "need rank l ≥ m + n + 1, got l = {}, m = {}, n = {}",
            l, m, n
        )));
    }
    let gap = u.size() - x.size();
    if gap < 0 || v.size() - y.size() != gap {
        return Err(Error::DegreeMismatch(format!(
            "|u| - |x| = {} but |v| - |y| = {} (both must be equal and ≥ 0)",
            gap,
            v.size() - y.size()
        )));
    }

    // the identity is stated for m ≥ n; the other half follows by swapping
    // the two factor pairs, which the coefficient symmetry allows
    let swapped = m < n;
    let (x, u, m, y, v, n) = if swapped {
        (y, v, n, x, u, m)
    } else {
        (x, u, m, y, v, n)
    };

    let v1 = v.first();
    let lam = lambda_shift(x, y, v1, l, m, n)?;
    let lhs = if lam.min_entry() < 0 {
        // a weight with a negative entry indexes no polynomial
        // representation of GL_l, so the coefficient is zero
        0
    } else {
        let vt = v_tilde(v, l, n)?.to_partition()?;
        let u_pad = Partition::new(u.padded(l)?)?;
        let lam_p = lam.to_partition()?;
        let HiveCount {
            count,
            structural_zero,
        } = count_hives(&vt, &u_pad, &lam_p, l)?;
        debug_assert!(!structural_zero, "degrees are compatible by construction");
        count
    };

    let mut rhs = 0u64;
    let mut witness_z = Vec::new();
    for z in enumerate_dominant(n, gap) {
        let a = lr_coeff_tableaux(x, &z, u);
        let b = lr_coeff_tableaux(y, &z, v);
        if a > 0 && b > 0 {
            rhs += a * b;
            witness_z.push((z, a, b));
        }
    }

    Ok(TaoOutcome {
        lhs,
        rhs,
        witness_z,
        equal: lhs == rhs,
        swapped,
    })
}

/// All partitions contained in `bound` cell-wise, with at most `max_parts`
/// parts, ordered by size then lexicographically.
pub fn subshapes(bound: &Partition, max_parts: usize) -> Vec<Partition> {
    let mut out = Vec::new();
    for s in 0..=bound.size() {
        for cand in enumerate_dominant(max_parts, s) {
            if bound.contains(&cand) {
                out.push(cand);
            }
        }
    }
    out
}

/// Checks the Schur-product reduction at a rational point: the product of
/// the two rank-`l` Schur values attached to `u` and `v` equals the
/// LR-weighted sum of central-weight Schur values.
pub fn verify_reduction2(
    u: &Partition,
    v: &Partition,
    l: usize,
    m: usize,
    n: usize,
    point: &[Rat],
) -> Result<bool> {
    if u.num_parts() > m || v.num_parts() > n {
        return Err(Error::RankMismatch(format!(
            "{} must fit in {} parts and {} in {}",
            u, m, v, n
        )));
    }
    if m + n >= l {
        return Err(Error::Config(format!(
            "need m + n < l, got l = {}, m = {}, n = {}",
            l, m, n
        )));
    }
    if point.len() != l {
        return Err(Error::RankMismatch(format!(
            "expected {} coordinates, got {}",
            l,
            point.len()
        )));
    }

    // left side: S_{(u,0…0)} · S_{(0…0,v*)}
    let mut back = vec![0i64; l - v.num_parts()];
    back.extend_from_slice(star_dual(v, v.num_parts())?.entries());
    let lhs = schur_eval(u, point) * schur_glweight_eval(&GLWeight::new(back), point)?;

    // right side: Σ_{x,y,z} c_{x,z}^u c_{y,z}^v S_{(x,0,y*)}
    let mut rhs = rat_int(0);
    for x in subshapes(u, m) {
        let gap = u.size() - x.size();
        for y in subshapes(v, n) {
            if v.size() - y.size() != gap {
                continue;
            }
            let mut coeff = 0u64;
            for z in enumerate_dominant(n, gap) {
                coeff += lr_coeff_tableaux(&x, &z, u) * lr_coeff_tableaux(&y, &z, v);
            }
            if coeff == 0 {
                continue;
            }
            let w = central_weight(&x, &y, l, m, n)?;
            let val = schur_glweight_eval(&w, point)?;
            rhs += rat_int(coeff as i64) * val;
        }
    }
    Ok(lhs == rhs)
}
