//! Truncated bivariate power series in `T1`, `T2`.
//!
//! Every series carries per-variable caps; the coefficient of `T1^a T2^b` of
//! a product depends only on coefficients of the factors with indices at most
//! `(a, b)`, so truncation commutes with multiplication. Coefficients are
//! generic: exact rationals by default, Laurent polynomials in symbolic mode.

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::polyring::laurent::LaurentPoly;
use crate::rational::{rat_json, Rat};

/// Coefficient ring for [`BiSeries`]. The `_like` constructors exist because
/// a Laurent-polynomial zero needs to know its variable count.
pub trait Coeff: Clone + PartialEq + std::fmt::Debug {
    fn zero_like(&self) -> Self;
    fn one_like(&self) -> Self;
    fn is_zero(&self) -> bool;
    fn add(&self, other: &Self) -> Self;
    fn mul(&self, other: &Self) -> Self;
    fn neg(&self) -> Self;
    fn to_json(&self) -> serde_json::Value;
}

impl Coeff for Rat {
    fn zero_like(&self) -> Self {
        Rat::zero()
    }
    fn one_like(&self) -> Self {
        Rat::one()
    }
    fn is_zero(&self) -> bool {
        Zero::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        self + other
    }
    fn mul(&self, other: &Self) -> Self {
        self * other
    }
    fn neg(&self) -> Self {
        -self
    }
    fn to_json(&self) -> serde_json::Value {
        rat_json(self)
    }
}

impl Coeff for LaurentPoly {
    fn zero_like(&self) -> Self {
        LaurentPoly::zero(self.num_vars())
    }
    fn one_like(&self) -> Self {
        LaurentPoly::one(self.num_vars())
    }
    fn is_zero(&self) -> bool {
        LaurentPoly::is_zero(self)
    }
    fn add(&self, other: &Self) -> Self {
        LaurentPoly::add(self, other)
    }
    fn mul(&self, other: &Self) -> Self {
        LaurentPoly::mul(self, other)
    }
    fn neg(&self) -> Self {
        LaurentPoly::neg(self)
    }
    fn to_json(&self) -> serde_json::Value {
        LaurentPoly::to_json(self)
    }
}

/// Bivariate power series truncated at `T1^cap1 T2^cap2`, dense storage.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct BiSeries<C: Coeff> {
    cap1: usize,
    cap2: usize,
    // (cap1+1) * (cap2+1) cells, row-major in the T1 index
    cells: Vec<C>,
    zero: C,
}

impl<C: Coeff> BiSeries<C> {
    /// The constant series `c`.
    pub fn constant(cap1: usize, cap2: usize, c: C) -> Self {
        let zero = c.zero_like();
        let mut s = BiSeries {
            cap1,
            cap2,
            cells: vec![zero.clone(); (cap1 + 1) * (cap2 + 1)],
            zero,
        };
        s.cells[0] = c;
        s
    }

    /// The series `1`.
    pub fn one(cap1: usize, cap2: usize, exemplar: &C) -> Self {
        Self::constant(cap1, cap2, exemplar.one_like())
    }

    /// `c * T1^a T2^b`; silently zero if the monomial is beyond the caps.
    pub fn monomial(cap1: usize, cap2: usize, a: usize, b: usize, c: C) -> Self {
        let zero = c.zero_like();
        let mut s = BiSeries {
            cap1,
            cap2,
            cells: vec![zero.clone(); (cap1 + 1) * (cap2 + 1)],
            zero,
        };
        if a <= cap1 && b <= cap2 {
            s.cells[a * (cap2 + 1) + b] = c;
        }
        s
    }

    pub fn caps(&self) -> (usize, usize) {
        (self.cap1, self.cap2)
    }

    pub fn coeff(&self, a: usize, b: usize) -> &C {
        assert!(a <= self.cap1 && b <= self.cap2, "index beyond caps");
        &self.cells[a * (self.cap2 + 1) + b]
    }

    pub fn set_coeff(&mut self, a: usize, b: usize, c: C) {
        assert!(a <= self.cap1 && b <= self.cap2, "index beyond caps");
        self.cells[a * (self.cap2 + 1) + b] = c;
    }

    pub fn is_one(&self) -> bool {
        self.cells[0] == self.zero.one_like()
            && self.cells[1..].iter().all(|c| c.is_zero())
    }

    fn check_caps(&self, other: &Self) -> Result<()> {
        if self.caps() != other.caps() {
            return Err(Error::CapMismatch(format!(
                "({},{}) vs ({},{})",
                self.cap1, self.cap2, other.cap1, other.cap2
            )));
        }
        Ok(())
    }

    pub fn add(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let mut out = self.clone();
        for (c, o) in out.cells.iter_mut().zip(&other.cells) {
            *c = c.add(o);
        }
        Ok(out)
    }

    /// Cauchy product truncated at the shared caps.
    pub fn mul(&self, other: &Self) -> Result<Self> {
        self.check_caps(other)?;
        let mut out = BiSeries {
            cap1: self.cap1,
            cap2: self.cap2,
            cells: vec![self.zero.clone(); self.cells.len()],
            zero: self.zero.clone(),
        };
        let w = self.cap2 + 1;
        for a1 in 0..=self.cap1 {
            for b1 in 0..=self.cap2 {
                let x = &self.cells[a1 * w + b1];
                if x.is_zero() {
                    continue;
                }
                for a2 in 0..=(self.cap1 - a1) {
                    for b2 in 0..=(self.cap2 - b1) {
                        let y = &other.cells[a2 * w + b2];
                        if y.is_zero() {
                            continue;
                        }
                        let idx = (a1 + a2) * w + (b1 + b2);
                        out.cells[idx] = out.cells[idx].add(&x.mul(y));
                    }
                }
            }
        }
        Ok(out)
    }

    /// Geometric expansion of `(1 - c T1^a T2^b)^{-1}` up to the caps:
    /// `sum_{e >= 0} c^e T1^{ea} T2^{eb}`. Requires `(a, b) != (0, 0)`.
    pub fn geom_inverse(c: C, a: usize, b: usize, cap1: usize, cap2: usize) -> Result<Self> {
        if a == 0 && b == 0 {
            return Err(Error::Config(
                "geometric inverse needs a nonconstant monomial".into(),
            ));
        }
        let mut s = Self::constant(cap1, cap2, c.one_like());
        let mut power = c.one_like();
        let mut e = 1usize;
        loop {
            let (ea, eb) = (e * a, e * b);
            if ea > cap1 || eb > cap2 {
                break;
            }
            power = power.mul(&c);
            if power.is_zero() {
                break;
            }
            s.cells[ea * (cap2 + 1) + eb] = power.clone();
            e += 1;
        }
        Ok(s)
    }

    /// The two-term factor `1 - c T1^a T2^b`.
    pub fn one_minus_term(c: C, a: usize, b: usize, cap1: usize, cap2: usize) -> Self {
        let mut s = Self::constant(cap1, cap2, c.one_like());
        if (a, b) != (0, 0) && a <= cap1 && b <= cap2 {
            s.cells[a * (cap2 + 1) + b] = c.neg();
        }
        s
    }

    /// First index pair (graded, then by `T1` degree) where the two series
    /// differ, if any.
    pub fn first_mismatch(&self, other: &Self) -> Result<Option<(usize, usize)>> {
        self.check_caps(other)?;
        let mut idx: Vec<(usize, usize)> = (0..=self.cap1)
            .flat_map(|a| (0..=self.cap2).map(move |b| (a, b)))
            .collect();
        idx.sort_by_key(|&(a, b)| (a + b, a));
        for (a, b) in idx {
            if self.coeff(a, b) != other.coeff(a, b) {
                return Ok(Some((a, b)));
            }
        }
        Ok(None)
    }

    /// JSON rendering: `[{"t1": a, "t2": b, "coeff": ...}, ...]` for the
    /// nonzero coefficients in graded order.
    pub fn to_json(&self) -> serde_json::Value {
        let mut idx: Vec<(usize, usize)> = (0..=self.cap1)
            .flat_map(|a| (0..=self.cap2).map(move |b| (a, b)))
            .collect();
        idx.sort_by_key(|&(a, b)| (a + b, a));
        serde_json::Value::Array(
            idx.into_iter()
                .filter(|&(a, b)| !self.coeff(a, b).is_zero())
                .map(|(a, b)| {
                    serde_json::json!({
                        "t1": a,
                        "t2": b,
                        "coeff": self.coeff(a, b).to_json(),
                    })
                })
                .collect(),
        )
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    fn t1(cap: (usize, usize)) -> BiSeries<Rat> {
        BiSeries::monomial(cap.0, cap.1, 1, 0, Rat::one())
    }

    fn t2(cap: (usize, usize)) -> BiSeries<Rat> {
        BiSeries::monomial(cap.0, cap.1, 0, 1, Rat::one())
    }

    #[test]
    fn mul_identity_and_monomials() {
        let cap = (3, 3);
        let one = BiSeries::one(cap.0, cap.1, &Rat::zero());
        let b = BiSeries::geom_inverse(rat(1, 2), 1, 1, cap.0, cap.1).unwrap();
        assert_eq!(one.mul(&b).unwrap(), b);
        let prod = t1(cap).mul(&t2(cap)).unwrap();
        assert_eq!(prod.coeff(1, 1), &Rat::one());
        assert_eq!(prod.coeff(1, 0), &Rat::zero());
    }

    #[test]
    fn truncation_drops_high_terms() {
        // (1+T1)(1-T1) with caps (2,0) is 1 - T1^2
        let cap = (2, 0);
        let a = BiSeries::one(2, 0, &Rat::zero()).add(&t1(cap)).unwrap();
        let b = BiSeries::one_minus_term(Rat::one(), 1, 0, 2, 0);
        let prod = a.mul(&b).unwrap();
        assert_eq!(prod.coeff(0, 0), &rat_int(1));
        assert_eq!(prod.coeff(1, 0), &rat_int(0));
        assert_eq!(prod.coeff(2, 0), &rat_int(-1));
    }

    #[test]
    fn cap_mismatch_is_an_error() {
        let a = BiSeries::one(2, 2, &Rat::zero());
        let b = BiSeries::one(3, 2, &Rat::zero());
        assert!(a.mul(&b).is_err());
        assert!(a.add(&b).is_err());
    }

    #[test]
    fn geom_inverse_examples() {
        // c=1, (a,b)=(1,0), cap1=3: 1 + T1 + T1^2 + T1^3
        let s = BiSeries::geom_inverse(Rat::one(), 1, 0, 3, 0).unwrap();
        for a in 0..=3 {
            assert_eq!(s.coeff(a, 0), &Rat::one());
        }
        // c=2, (1,1), caps (2,2): 1 + 2 T1T2 + 4 T1^2T2^2
        let s = BiSeries::geom_inverse(rat_int(2), 1, 1, 2, 2).unwrap();
        assert_eq!(s.coeff(1, 1), &rat_int(2));
        assert_eq!(s.coeff(2, 2), &rat_int(4));
        assert_eq!(s.coeff(1, 0), &rat_int(0));
        // c=0 gives 1
        let s = BiSeries::geom_inverse(Rat::zero(), 1, 1, 2, 2).unwrap();
        assert!(s.is_one());
        // constant-term factor refused
        assert!(BiSeries::geom_inverse(rat_int(2), 0, 0, 2, 2).is_err());
    }

    #[test]
    fn geom_inverse_times_factor_is_one() {
        for (c, a, b) in [(rat(3, 5), 1, 0), (rat(-2, 7), 1, 1), (rat_int(4), 0, 2), (rat_int(1), 2, 1)] {
            let inv = BiSeries::geom_inverse(c.clone(), a, b, 6, 6).unwrap();
            let fac = BiSeries::one_minus_term(c, a, b, 6, 6);
            assert!(inv.mul(&fac).unwrap().is_one());
        }
    }

    #[test]
    fn symbolic_coefficients() {
        // (1 - x T1)^{-1} * (1 - x T1) = 1 with a polynomial coefficient
        let x = LaurentPoly::var(1, 0);
        let inv = BiSeries::geom_inverse(x.clone(), 1, 0, 4, 0).unwrap();
        let fac = BiSeries::one_minus_term(x, 1, 0, 4, 0);
        assert!(inv.mul(&fac).unwrap().is_one());
    }

    #[test]
    fn json_ordering_is_graded() {
        let s = BiSeries::geom_inverse(rat_int(1), 0, 1, 1, 2).unwrap();
        let j = s.to_json();
        let keys: Vec<(u64, u64)> = j
            .as_array()
            .unwrap()
            .iter()
            .map(|e| (e["t1"].as_u64().unwrap(), e["t2"].as_u64().unwrap()))
            .collect();
        assert_eq!(keys, vec![(0, 0), (0, 1), (0, 2)]);
    }
}
