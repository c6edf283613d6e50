//! Sparse multivariate Laurent polynomials over the rationals.
//!
//! Terms map integer exponent vectors (entries may be negative) to nonzero
//! rational coefficients. The term store is a `BTreeMap`, so iteration order
//! is deterministic; display and JSON rendering sort graded-lexicographically.

use std::collections::BTreeMap;
use std::fmt;

use num::traits::{One, Zero};

use crate::error::{Error, Result};
use crate::rational::{rat_json, rat_pow, Rat};

/// Sparse Laurent polynomial in a fixed number of variables.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct LaurentPoly {
    nvars: usize,
    terms: BTreeMap<Vec<i64>, Rat>,
}

impl LaurentPoly {
    pub fn zero(nvars: usize) -> Self {
        LaurentPoly { nvars, terms: BTreeMap::new() }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rat::one())
    }

    pub fn constant(nvars: usize, c: Rat) -> Self {
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(vec![0; nvars], c);
        }
        p
    }

    /// The single variable `x_i` (0-based).
    pub fn var(nvars: usize, i: usize) -> Self {
        assert!(i < nvars, "variable index out of range");
        let mut exp = vec![0i64; nvars];
        exp[i] = 1;
        Self::monomial(exp, Rat::one())
    }

    /// `c * x^exps`.
    pub fn monomial(exps: Vec<i64>, c: Rat) -> Self {
        let nvars = exps.len();
        let mut p = Self::zero(nvars);
        if !c.is_zero() {
            p.terms.insert(exps, c);
        }
        p
    }

    /// Build from an exponent→coefficient map, dropping zero coefficients.
    pub fn from_terms(nvars: usize, terms: BTreeMap<Vec<i64>, Rat>) -> Self {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            debug_assert_eq!(exps.len(), nvars);
            if !c.is_zero() {
                p.terms.insert(exps, c);
            }
        }
        p
    }

    pub fn num_vars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coefficient(&self, exps: &[i64]) -> Rat {
        self.terms.get(exps).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<i64>, &Rat)> {
        self.terms.iter()
    }

    fn insert_term(&mut self, exps: Vec<i64>, c: Rat) {
        debug_assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get() + &c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "mixed variable counts");
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.insert_term(e.clone(), c.clone());
        }
        out
    }

    pub fn sub(&self, other: &LaurentPoly) -> LaurentPoly {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> LaurentPoly {
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }

    pub fn scale(&self, c: &Rat) -> LaurentPoly {
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self.terms.iter().map(|(e, k)| (e.clone(), k * c)).collect(),
        }
    }

    pub fn mul(&self, other: &LaurentPoly) -> LaurentPoly {
        assert_eq!(self.nvars, other.nvars, "mixed variable counts");
        let mut out = Self::zero(self.nvars);
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<i64> = ea.iter().zip(eb).map(|(a, b)| a + b).collect();
                out.insert_term(exps, ca * cb);
            }
        }
        out
    }

    /// Multiply by the monomial `c * x^exps` in place of a full product.
    pub fn mul_monomial(&self, exps: &[i64], c: &Rat) -> LaurentPoly {
        assert_eq!(exps.len(), self.nvars);
        if c.is_zero() {
            return Self::zero(self.nvars);
        }
        LaurentPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(e, k)| (e.iter().zip(exps).map(|(a, b)| a + b).collect(), k * c))
                .collect(),
        }
    }

    /// Exact substitution. Zero entries are fine unless the variable occurs
    /// with a negative exponent somewhere.
    pub fn eval(&self, point: &[Rat]) -> Result<Rat> {
        if point.len() != self.nvars {
            return Err(Error::Eval(format!(
                "point has {} entries, polynomial has {} variables",
                point.len(),
                self.nvars
            )));
        }
        let mut acc = Rat::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (x, &e) in point.iter().zip(exps) {
                if e == 0 {
                    continue;
                }
                if x.is_zero() && e < 0 {
                    return Err(Error::Eval("zero value at negatively-exponentiated variable".into()));
                }
                term *= rat_pow(x, e)?;
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Reinterpret in a larger variable set, original variables starting at
    /// `offset`.
    pub fn embed(&self, total_vars: usize, offset: usize) -> LaurentPoly {
        assert!(offset + self.nvars <= total_vars, "embedding out of range");
        LaurentPoly {
            nvars: total_vars,
            terms: self
                .terms
                .iter()
                .map(|(e, c)| {
                    let mut exps = vec![0i64; total_vars];
                    exps[offset..offset + self.nvars].copy_from_slice(e);
                    (exps, c.clone())
                })
                .collect(),
        }
    }

    /// Apply a permutation of the variables: variable `i` becomes `perm[i]`.
    pub fn permute_vars(&self, perm: &[usize]) -> LaurentPoly {
        assert_eq!(perm.len(), self.nvars);
        let mut out = Self::zero(self.nvars);
        for (e, c) in &self.terms {
            let mut exps = vec![0i64; self.nvars];
            for (i, &ei) in e.iter().enumerate() {
                exps[perm[i]] = ei;
            }
            out.insert_term(exps, c.clone());
        }
        out
    }

    /// Total degree of each term in graded-lex display order, largest first.
    fn sorted_terms(&self) -> Vec<(&Vec<i64>, &Rat)> {
        let mut ts: Vec<_> = self.terms.iter().collect();
        ts.sort_by(|(ea, _), (eb, _)| {
            let da: i64 = ea.iter().sum();
            let db: i64 = eb.iter().sum();
            db.cmp(&da).then_with(|| eb.cmp(ea))
        });
        ts
    }

    /// JSON rendering: a list of `{"exp": [...], "num": "...", "den": "..."}`
    /// in graded-lex order.
    pub fn to_json(&self) -> serde_json::Value {
        serde_json::Value::Array(
            self.sorted_terms()
                .into_iter()
                .map(|(exps, c)| {
                    let mut obj = serde_json::Map::new();
                    obj.insert("exp".into(), serde_json::json!(exps));
                    if let serde_json::Value::Object(rc) = rat_json(c) {
                        obj.extend(rc);
                    }
                    serde_json::Value::Object(obj)
                })
                .collect(),
        )
    }
}

impl fmt::Display for LaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (exps, c)) in self.sorted_terms().into_iter().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "{c}")?;
            for (v, &e) in exps.iter().enumerate() {
                if e != 0 {
                    write!(f, "*x{}^{}", v + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::{rat, rat_int};

    #[test]
    fn eval_examples() {
        // x1 + x2 at (1,1) = 2
        let p = LaurentPoly::var(2, 0).add(&LaurentPoly::var(2, 1));
        assert_eq!(p.eval(&[rat_int(1), rat_int(1)]).unwrap(), rat_int(2));
        // x1 * x2^-1 at (3, 1/2) = 6
        let q = LaurentPoly::monomial(vec![1, -1], Rat::one());
        assert_eq!(q.eval(&[rat_int(3), rat(1, 2)]).unwrap(), rat_int(6));
        // empty polynomial evaluates to 0 anywhere
        let z = LaurentPoly::zero(2);
        assert_eq!(z.eval(&[rat_int(5), rat_int(7)]).unwrap(), rat_int(0));
    }

    #[test]
    fn eval_rejects_zero_at_negative_exponent() {
        let q = LaurentPoly::monomial(vec![1, -1], Rat::one());
        assert!(q.eval(&[rat_int(3), rat_int(0)]).is_err());
        // zero at a positive exponent is fine
        let p = LaurentPoly::monomial(vec![2, 0], Rat::one());
        assert_eq!(p.eval(&[rat_int(0), rat_int(9)]).unwrap(), rat_int(0));
    }

    #[test]
    fn cancellation_drops_terms() {
        let p = LaurentPoly::var(1, 0);
        let d = p.sub(&p);
        assert!(d.is_zero());
        assert_eq!(d.num_terms(), 0);
    }

    #[test]
    fn json_shape() {
        let p = LaurentPoly::monomial(vec![1, -1], rat(3, 4));
        let j = p.to_json();
        assert_eq!(j, serde_json::json!([{"exp": [1, -1], "num": "3", "den": "4"}]));
    }

    #[test]
    fn embed_keeps_values() {
        let p = LaurentPoly::var(2, 1); // x2 of two vars
        let q = p.embed(4, 1); // becomes x3 of four vars
        let pt = [rat_int(2), rat_int(3), rat_int(5), rat_int(7)];
        assert_eq!(q.eval(&pt).unwrap(), rat_int(5));
    }
}
