//! Flat key–value configuration file support.
//!
//! A config file is plain text, one `key = value` pair per line; blank
//! lines and `#` comments are ignored. Every key has a built-in default,
//! so an absent file is equivalent to an empty one. Command-line flags
//! override file values.

use std::path::Path;

use schurhive::rational::{parse_rat, Rat};
use schurhive::{Error, Result};

#[derive(Clone, Debug)]
pub struct Config {
    /// Truncation caps for the two series variables.
    pub caps: (usize, usize),
    /// Seed for every randomized draw.
    pub seed: u64,
    /// Largest shape size the tableau oracle will enumerate.
    pub oracle_cap: usize,
    /// Worker threads for parallel sweeps; 0 means automatic.
    pub workers: usize,
    /// Numerator bound for random rational draws.
    pub num_max: i64,
    /// Denominator bound for random rational draws.
    pub den_max: i64,
    /// Most variables allowed in fully symbolic series mode.
    pub symbolic_vars: usize,
    /// The square root `Q` of the residue-field cardinality.
    pub q_half: Rat,
}

impl Default for Config {
    fn default() -> Self {
        Config {
            caps: (5, 5),
            seed: 0,
            oracle_cap: 12,
            workers: 0,
            num_max: 7,
            den_max: 5,
            symbolic_vars: 7,
            q_half: Rat::from_integer(2.into()),
        }
    }
}

/// Parses `"A,B"` into a cap pair.
pub fn parse_caps(text: &str) -> Result<(usize, usize)> {
    let err = || Error::Config(format!("caps must look like \"5,5\", got {text:?}"));
    let (a, b) = text.split_once(',').ok_or_else(err)?;
    let a = a.trim().parse::<usize>().map_err(|_| err())?;
    let b = b.trim().parse::<usize>().map_err(|_| err())?;
    Ok((a, b))
}

fn apply_line(cfg: &mut Config, key: &str, value: &str, lineno: usize) -> Result<()> {
    let bad = |what: &str| Error::Config(format!("config line {lineno}: {what}: {value:?}"));
    match key {
        "caps" => {
            cfg.caps = parse_caps(value)
                .map_err(|_| bad("expected two comma-separated nonnegative integers"))?
        }
        "seed" => cfg.seed = value.parse().map_err(|_| bad("expected an unsigned integer"))?,
        "oracle_cap" => {
            cfg.oracle_cap = value.parse().map_err(|_| bad("expected a nonnegative integer"))?
        }
        "workers" => {
            cfg.workers = value.parse().map_err(|_| bad("expected a nonnegative integer"))?
        }
        "num_max" => {
            cfg.num_max = value.parse().map_err(|_| bad("expected a positive integer"))?;
            if cfg.num_max < 1 {
                return Err(bad("numerator bound must be at least 1"));
            }
        }
        "den_max" => {
            cfg.den_max = value.parse().map_err(|_| bad("expected a positive integer"))?;
            if cfg.den_max < 1 {
                return Err(bad("denominator bound must be at least 1"));
            }
        }
        "symbolic_vars" => {
            cfg.symbolic_vars =
                value.parse().map_err(|_| bad("expected a nonnegative integer"))?
        }
        "q_half" => {
            let q = parse_rat(value).map_err(|_| bad("expected a rational like 2 or 9/4"))?;
            if q <= Rat::from_integer(0.into()) {
                return Err(bad("Q must be positive"));
            }
            cfg.q_half = q;
        }
        other => {
            return Err(Error::Config(format!(
                "config line {lineno}: unknown key {other:?}"
            )))
        }
    }
    Ok(())
}

fn parse(text: &str) -> Result<Config> {
    let mut cfg = Config::default();
    for (i, raw) in text.lines().enumerate() {
        let line = raw.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let lineno = i + 1;
        let (key, value) = line.split_once('=').ok_or_else(|| {
            Error::Config(format!("config line {lineno}: expected \"key = value\", got {line:?}"))
        })?;
        apply_line(&mut cfg, key.trim(), value.trim(), lineno)?;
    }
    Ok(cfg)
}

/// Default config file name looked up in the working directory.
pub const DEFAULT_PATH: &str = "schurhive.conf";

/// Loads configuration. An explicit path must exist; the default path is
/// optional and silently skipped when absent.
pub fn load(explicit: Option<&Path>) -> Result<Config> {
    let (path, required) = match explicit {
        Some(p) => (p.to_path_buf(), true),
        None => (Path::new(DEFAULT_PATH).to_path_buf(), false),
    };
    match std::fs::read_to_string(&path) {
        Ok(text) => parse(&text),
        Err(e) if !required && e.kind() == std::io::ErrorKind::NotFound => Ok(Config::default()),
        Err(e) => Err(Error::Config(format!(
            "cannot read config {}: {e}",
            path.display()
        ))),
    }
}
