//! Partitions, dominant GL weights, and weight surgery.
//!
//! A [`Partition`] is canonical: weakly decreasing, nonnegative, no trailing
//! zeros. A [`GLWeight`] is an integer tuple whose length is part of its
//! identity (the GL rank it lives in); entries may be negative and padding is
//! always an explicit, lossless conversion.

use std::fmt;
use std::str::FromStr;

use crate::error::{Error, Result};

/// Weakly decreasing sequence of nonnegative integers, stored without
/// trailing zeros.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    parts: Vec<i64>,
}

impl Partition {
    /// Validates monotonicity and nonnegativity; strips trailing zeros.
    pub fn new(parts: impl Into<Vec<i64>>) -> Result<Self> {
        let mut parts = parts.into();
        for w in parts.windows(2) {
            if w[0] < w[1] {
                return Err(Error::Parse(format!("parts not weakly decreasing: {parts:?}")));
            }
        }
        if parts.iter().any(|&p| p < 0) {
            return Err(Error::Parse(format!("negative part in {parts:?}")));
        }
        while parts.last() == Some(&0) {
            parts.pop();
        }
        Ok(Partition { parts })
    }

    pub fn empty() -> Self {
        Partition { parts: Vec::new() }
    }

    pub fn parts(&self) -> &[i64] {
        &self.parts
    }

    pub fn num_parts(&self) -> usize {
        self.parts.len()
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `i`-th part (0-based), zero beyond the last stored part.
    pub fn part(&self, i: usize) -> i64 {
        self.parts.get(i).copied().unwrap_or(0)
    }

    /// Largest part, zero for the empty partition.
    pub fn first(&self) -> i64 {
        self.part(0)
    }

    /// Sum of the parts.
    pub fn size(&self) -> i64 {
        self.parts.iter().sum()
    }

    /// Parts padded with zeros to length `n`; errors if more than `n` parts.
    pub fn padded(&self, n: usize) -> Result<Vec<i64>> {
        if self.parts.len() > n {
            return Err(Error::RankMismatch(format!(
                "partition {self} has {} parts, rank {n}",
                self.parts.len()
            )));
        }
        let mut v = self.parts.clone();
        v.resize(n, 0);
        Ok(v)
    }

    /// Containment of Young diagrams: `other` fits inside `self`.
    pub fn contains(&self, other: &Partition) -> bool {
        other
            .parts
            .iter()
            .enumerate()
            .all(|(i, &p)| self.part(i) >= p)
    }
}

impl fmt::Display for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, p) in self.parts.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "]")
    }
}

impl FromStr for Partition {
    type Err = Error;

    /// Parses `"[2,1]"`; `"[]"` is the empty partition.
    fn from_str(s: &str) -> Result<Self> {
        let inner = s
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("partition literal must be bracketed: {s:?}")))?;
        let inner = inner.trim();
        if inner.is_empty() {
            return Ok(Partition::empty());
        }
        let parts = inner
            .split(',')
            .map(|t| {
                t.trim()
                    .parse::<i64>()
                    .map_err(|_| Error::Parse(format!("bad part {t:?} in {s:?}")))
            })
            .collect::<Result<Vec<_>>>()?;
        Partition::new(parts)
    }
}

/// Integer weight of a fixed GL rank; entries may be negative.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct GLWeight {
    entries: Vec<i64>,
}

impl GLWeight {
    pub fn new(entries: Vec<i64>) -> Self {
        GLWeight { entries }
    }

    /// Zero weight of rank `n`.
    pub fn zero(n: usize) -> Self {
        GLWeight { entries: vec![0; n] }
    }

    /// Partition padded to rank `n` (lossless; see [`Partition::padded`]).
    pub fn from_partition(p: &Partition, n: usize) -> Result<Self> {
        Ok(GLWeight { entries: p.padded(n)? })
    }

    pub fn rank(&self) -> usize {
        self.entries.len()
    }

    pub fn entries(&self) -> &[i64] {
        &self.entries
    }

    pub fn entry(&self, i: usize) -> i64 {
        self.entries[i]
    }

    /// Weakly decreasing?
    pub fn dominant(&self) -> bool {
        self.entries.windows(2).all(|w| w[0] >= w[1])
    }

    pub fn size(&self) -> i64 {
        self.entries.iter().sum()
    }

    pub fn min_entry(&self) -> i64 {
        self.entries.iter().copied().min().unwrap_or(0)
    }

    /// Entrywise `self + c`.
    pub fn shifted(&self, c: i64) -> GLWeight {
        GLWeight {
            entries: self.entries.iter().map(|e| e + c).collect(),
        }
    }

    /// Dominant, nonnegative weights convert back to partitions losslessly.
    pub fn to_partition(&self) -> Result<Partition> {
        if !self.dominant() {
            return Err(Error::NonDominant(format!("{self}")));
        }
        Partition::new(self.entries.clone())
    }
}

impl fmt::Display for GLWeight {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[")?;
        for (i, e) in self.entries.iter().enumerate() {
            if i > 0 {
                write!(f, ",")?;
            }
            write!(f, "{e}")?;
        }
        write!(f, "]@{}", self.entries.len())
    }
}

impl FromStr for GLWeight {
    type Err = Error;

    /// Parses `"[2,1,0,-2]@4"`; the rank suffix is optional and must match
    /// the entry count when present.
    fn from_str(s: &str) -> Result<Self> {
        let s = s.trim();
        let (body, rank) = match s.rsplit_once('@') {
            Some((body, r)) => {
                let rank: usize = r
                    .trim()
                    .parse()
                    .map_err(|_| Error::Parse(format!("bad rank suffix in {s:?}")))?;
                (body, Some(rank))
            }
            None => (s, None),
        };
        let inner = body
            .trim()
            .strip_prefix('[')
            .and_then(|t| t.strip_suffix(']'))
            .ok_or_else(|| Error::Parse(format!("weight literal must be bracketed: {s:?}")))?;
        let inner = inner.trim();
        let entries: Vec<i64> = if inner.is_empty() {
            Vec::new()
        } else {
            inner
                .split(',')
                .map(|t| {
                    t.trim()
                        .parse::<i64>()
                        .map_err(|_| Error::Parse(format!("bad entry {t:?} in {s:?}")))
                })
                .collect::<Result<Vec<_>>>()?
        };
        if let Some(r) = rank {
            if r != entries.len() {
                return Err(Error::RankMismatch(format!(
                    "literal {s:?} declares rank {r} but has {} entries",
                    entries.len()
                )));
            }
        }
        Ok(GLWeight::new(entries))
    }
}

/// `y* = (-y_n, ..., -y_1)` as a rank-`n` weight.
pub fn star_dual(y: &Partition, n: usize) -> Result<GLWeight> {
    let padded = y.padded(n)?;
    Ok(GLWeight::new(padded.iter().rev().map(|&p| -p).collect()))
}

/// The rank-`l` weight `(x, 0, y*)`: `x` padded to `m` parts, `l - m - n`
/// zeros, then the star dual of `y`.
pub fn central_weight(x: &Partition, y: &Partition, l: usize, m: usize, n: usize) -> Result<GLWeight> {
    if m + n >= l {
        return Err(Error::Config(format!("need m + n < l, got l={l} m={m} n={n}")));
    }
    let mut entries = x.padded(m)?;
    entries.resize(l - n, 0);
    entries.extend_from_slice(star_dual(y, n)?.entries());
    Ok(GLWeight::new(entries))
}

/// `(v_1, ..., v_1, v_1 - v_n, ..., v_1 - v_2, 0)` of rank `l`: the partition
/// that twists `(0, v*)` back into nonnegative entries by `det^{v_1}`.
pub fn v_tilde(v: &Partition, l: usize, n: usize) -> Result<GLWeight> {
    if n >= l {
        return Err(Error::Config(format!("need n < l, got l={l} n={n}")));
    }
    let padded = v.padded(n)?;
    let v1 = v.first();
    let mut entries = vec![v1; l - n];
    // star dual of v shifted by v_1: (v1 - v_n, ..., v1 - v_2, 0)
    entries.extend(padded.iter().rev().map(|p| v1 - p));
    Ok(GLWeight::new(entries))
}

/// `(x, 0, y*) + (v1, ..., v1)` of rank `l`. Dominant for all valid inputs;
/// entries can go negative when `v1 < y_1`.
pub fn lambda_shift(
    x: &Partition,
    y: &Partition,
    v1: i64,
    l: usize,
    m: usize,
    n: usize,
) -> Result<GLWeight> {
    Ok(central_weight(x, y, l, m, n)?.shifted(v1))
}

/// All partitions of `s` with at most `m` parts, in lexicographic-descending
/// order, each exactly once.
pub fn enumerate_dominant(m: usize, s: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(s, s, m, &mut stack, &mut out);
    out
}

/// As [`enumerate_dominant`] with an additional bound on the largest part.
pub fn enumerate_dominant_bounded(m: usize, s: i64, max_part: i64) -> Vec<Partition> {
    let mut out = Vec::new();
    let mut stack = Vec::new();
    gen_partitions(s, max_part.min(s), m, &mut stack, &mut out);
    out
}

fn gen_partitions(remaining: i64, max_part: i64, slots: usize, stack: &mut Vec<i64>, out: &mut Vec<Partition>) {
    if remaining == 0 {
        out.push(Partition { parts: stack.clone() });
        return;
    }
    if slots == 0 || max_part == 0 {
        return;
    }
    let hi = max_part.min(remaining);
    // largest first part first gives lex-descending output
    for p in (1..=hi).rev() {
        // smallest achievable remainder with the slots left
        if remaining - p > p * (slots as i64 - 1) {
            continue;
        }
        stack.push(p);
        gen_partitions(remaining - p, p, slots - 1, stack, out);
        stack.pop();
    }
}
