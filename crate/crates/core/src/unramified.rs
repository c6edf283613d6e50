//! Modulus characters, Whittaker values, and the local zeta-series identity.
//!
//! Everything here is stated in two formal variables `T1`, `T2`; the complex
//! parameters of the analytic theory never appear as numbers. The main entry
//! point [`verify_unramified`] expands the zeta sum (a bigraded sum of
//! triple Schur products over partition pairs) and the L-factor ratio (a
//! product of geometric series) through entirely separate code paths and
//! compares them coefficient by coefficient as exact rationals.
//!
//! Half-integral powers of `q` arise from square roots of modulus
//! characters; the engine works with integer exponents of `Q = q^{1/2}`
//! throughout, so all scalars stay rational.

use rand::Rng;

use crate::error::{Error, Result};
use crate::polyring::halfpow::HalfPowerScalar;
use crate::polyring::laurent::LaurentPoly;
use crate::polyring::series::{BiSeries, Coeff};
use crate::rational::{random_nonzero_rat, rat_int, Rat};
use crate::schur::{h_values_at, schur_eval, schur_glweight, schur_glweight_eval, schur_jacobi_trudi};
use crate::weights::{central_weight, enumerate_dominant, star_dual, GLWeight, Partition};

/// Largest total variable count for which symbolic series coefficients are
/// attempted by default.
pub const DEFAULT_SYMBOLIC_VAR_LIMIT: usize = 7;

/// Default numerator bound for random Satake draws.
pub const DEFAULT_SATAKE_NUM_MAX: i64 = 7;
/// Default denominator bound for random Satake draws.
pub const DEFAULT_SATAKE_DEN_MAX: i64 = 5;

/// The discrete shape of one local configuration: three ranks and the
/// auxiliary integer `j`, with `k` derived.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct SatakeConfig {
    pub l: usize,
    pub m: usize,
    pub n: usize,
    pub j: usize,
}

impl SatakeConfig {
    pub fn new(l: usize, m: usize, n: usize, j: usize) -> Result<Self> {
        if m + n >= l {
            return Err(Error::Config(format!(
                "need m + n < l, got l = {l}, m = {m}, n = {n}"
            )));
        }
        if j > l - m - n - 1 {
            return Err(Error::Config(format!(
                "need 0 ≤ j ≤ l - m - n - 1 = {}, got j = {j}",
                l - m - n - 1
            )));
        }
        Ok(SatakeConfig { l, m, n, j })
    }

    /// The complementary index `k = l - m - n - 1 - j`.
    pub fn k(&self) -> usize {
        self.l - self.m - self.n - 1 - self.j
    }

    /// Every admissible `(m, n, j)` at a fixed rank `l`, in lexicographic
    /// order.
    pub fn admissible_for_rank(l: usize) -> Vec<SatakeConfig> {
        let mut out = Vec::new();
        for m in 0..l {
            for n in 0..l - m {
                for j in 0..=(l - m - n - 1) {
                    out.push(SatakeConfig { l, m, n, j });
                }
            }
        }
        out
    }
}

/// One fully specified local datum: a configuration plus rational Satake
/// parameters for the three groups and the square-root base `Q`.
#[derive(Clone, Debug)]
pub struct SatakeData {
    pub config: SatakeConfig,
    pub alpha: Vec<Rat>,
    pub beta1: Vec<Rat>,
    pub beta2: Vec<Rat>,
    pub q_half: Rat,
}

impl SatakeData {
    pub fn new(
        config: SatakeConfig,
        alpha: Vec<Rat>,
        beta1: Vec<Rat>,
        beta2: Vec<Rat>,
        q_half: Rat,
    ) -> Result<Self> {
        if alpha.len() != config.l || beta1.len() != config.m || beta2.len() != config.n {
            return Err(Error::RankMismatch(format!(
                "expected {}+{}+{} parameters, got {}+{}+{}",
                config.l,
                config.m,
                config.n,
                alpha.len(),
                beta1.len(),
                beta2.len()
            )));
        }
        if alpha.iter().chain(&beta1).chain(&beta2).any(|r| r.is_zero()) {
            return Err(Error::Config("Satake parameters must be nonzero".into()));
        }
        // constructing a scalar validates Q > 0
        HalfPowerScalar::new(q_half.clone(), 0)?;
        Ok(SatakeData {
            config,
            alpha,
            beta1,
            beta2,
            q_half,
        })
    }

    /// Random draw with the default numerator/denominator bounds.
    pub fn random<R: Rng>(config: SatakeConfig, q_half: Rat, rng: &mut R) -> Result<Self> {
        Self::random_in(
            config,
            q_half,
            rng,
            DEFAULT_SATAKE_NUM_MAX,
            DEFAULT_SATAKE_DEN_MAX,
        )
    }

    /// Random draw with explicit bounds on the drawn fractions.
    pub fn random_in<R: Rng>(
        config: SatakeConfig,
        q_half: Rat,
        rng: &mut R,
        num_max: i64,
        den_max: i64,
    ) -> Result<Self> {
        let mut draw = |count: usize| -> Vec<Rat> {
            (0..count)
                .map(|_| random_nonzero_rat(rng, num_max, den_max))
                .collect()
        };
        let alpha = draw(config.l);
        let beta1 = draw(config.m);
        let beta2 = draw(config.n);
        Self::new(config, alpha, beta1, beta2, q_half)
    }
}

/// Exponent of `q` in the Borel modulus character at `ϖ^μ`:
/// `δ_B(ϖ^μ) = q^{-Σ_i μ_i (N+1-2i)}` for rank `N`.
pub(crate) fn delta_exponent_q(mu: &GLWeight) -> i64 {
    let n = mu.rank() as i64;
    mu.entries()
        .iter()
        .enumerate()
        .map(|(i, &e)| -e * (n + 1 - 2 * (i as i64 + 1)))
        .sum()
}

/// Independent route to the same exponent: product over positive roots
/// `e_i - e_j` (`i < j`) of `|ϖ^{μ_i - μ_j}| = q^{-(μ_i - μ_j)}`. Shares no
/// code with [`delta_exponent_q`]; the two must agree on every weight.
pub(crate) fn delta_exponent_positive_roots(mu: &GLWeight) -> i64 {
    let e = mu.entries();
    let mut total = 0;
    for i in 0..e.len() {
        for j in i + 1..e.len() {
            total -= e[i] - e[j];
        }
    }
    total
}

fn check_rank(mu: &GLWeight, rank: usize) -> Result<()> {
    if mu.rank() != rank {
        return Err(Error::RankMismatch(format!(
            "weight {} does not have rank {}",
            mu, rank
        )));
    }
    Ok(())
}

/// `δ_B(ϖ^μ)` as an integer power of `Q = q^{1/2}`.
pub fn delta_b(mu: &GLWeight, rank: usize, q_half: &Rat) -> Result<HalfPowerScalar> {
    check_rank(mu, rank)?;
    HalfPowerScalar::new(q_half.clone(), 2 * delta_exponent_q(mu))
}

/// `δ_B^{1/2}(ϖ^μ)` as an integer power of `Q`.
pub fn delta_b_half(mu: &GLWeight, rank: usize, q_half: &Rat) -> Result<HalfPowerScalar> {
    check_rank(mu, rank)?;
    HalfPowerScalar::new(q_half.clone(), delta_exponent_q(mu))
}

/// A spherical Whittaker value split into its modulus-character scalar and
/// its Schur-polynomial value.
#[derive(Clone, Debug)]
pub struct WhittakerValue {
    /// True when the torus exponent is not dominant, in which case the
    /// function vanishes identically.
    pub vanishes: bool,
    pub delta_half: HalfPowerScalar,
    pub schur_value: Rat,
}

impl WhittakerValue {
    pub fn value(&self) -> Rat {
        if self.vanishes {
            rat_int(0)
        } else {
            self.delta_half.value() * &self.schur_value
        }
    }
}

/// The normalized spherical Whittaker value at `ϖ^μ`: zero off the dominant
/// cone, otherwise `δ_B^{1/2}(ϖ^μ) · S_μ(α)`.
pub fn cs_whittaker(mu: &GLWeight, alpha: &[Rat], q_half: &Rat) -> Result<WhittakerValue> {
    check_rank(mu, alpha.len())?;
    let delta_half = delta_b_half(mu, mu.rank(), q_half)?;
    if !mu.dominant() {
        return Ok(WhittakerValue {
            vanishes: true,
            delta_half,
            schur_value: rat_int(0),
        });
    }
    Ok(WhittakerValue {
        vanishes: false,
        schur_value: schur_glweight_eval(mu, alpha)?,
        delta_half,
    })
}

/// Trace of the `e`-th symmetric power of a tensor product, computed as the
/// complete homogeneous symmetric polynomial of all pairwise eigenvalue
/// products.
pub fn trace_sym_cauchy(alpha: &[Rat], beta: &[Rat], e: usize) -> Rat {
    if e == 0 {
        return rat_int(1);
    }
    let prods: Vec<Rat> = alpha
        .iter()
        .flat_map(|a| beta.iter().map(move |b| a * b))
        .collect();
    h_values_at(e, &prods)[e].clone()
}

/// The same trace as a sum of Schur-value pairs over partitions of `e`.
/// Must agree with [`trace_sym_cauchy`]; the agreement is a theorem the
/// test suite checks, not something either function assumes.
pub fn trace_sym_schur(alpha: &[Rat], beta: &[Rat], e: usize) -> Rat {
    let max_parts = alpha.len().min(beta.len());
    let mut acc = rat_int(0);
    for z in enumerate_dominant(max_parts, e as i64) {
        acc += schur_eval(&z, alpha) * schur_eval(&z, beta);
    }
    acc
}

/// The weight `(x, y*)` of rank `m + n` appearing in the torus modulus
/// factor.
pub(crate) fn paired_weight(x: &Partition, y: &Partition, m: usize, n: usize) -> Result<GLWeight> {
    let mut entries = x.padded(m)?;
    entries.extend_from_slice(star_dual(y, n)?.entries());
    Ok(GLWeight::new(entries))
}

/// Residual `Q`-exponents on the two sides of the modulus-character
/// cancellation, for one partition pair.
fn cancellation_exponents(
    x: &Partition,
    y: &Partition,
    c: &SatakeConfig,
) -> Result<(i64, i64)> {
    let (l, m, n, j) = (c.l, c.m, c.n, c.j as i64);
    let k = c.k() as i64;
    let mu = central_weight(x, y, l, m, n)?;
    let wx = GLWeight::new(x.padded(m)?);
    let wy = GLWeight::new(y.padded(n)?);
    let nu = paired_weight(x, y, m, n)?;
    let (ax, ay) = (x.size(), y.size());
    let lhs = delta_exponent_q(&mu) + delta_exponent_q(&wx) + delta_exponent_q(&wy)
        - 2 * delta_exponent_q(&nu)
        - ax * (n as i64 - 1 - 2 * j)
        - ay * (m as i64 - 1 - 2 * k);
    let rhs = -ax * (k - j) - ay * (j - k);
    Ok((lhs, rhs))
}

/// Checks that the product of the four modulus-character factors together
/// with the determinant bookkeeping collapses to pure `T1^{|x|} T2^{|y|}`
/// grading — i.e. the two residual `Q`-exponents agree exactly.
pub fn delta_cancellation_check(
    x: &Partition,
    y: &Partition,
    l: usize,
    m: usize,
    n: usize,
    j: usize,
    q_half: &Rat,
) -> Result<bool> {
    let c = SatakeConfig::new(l, m, n, j)?;
    // validates Q > 0
    HalfPowerScalar::new(q_half.clone(), 0)?;
    let (lhs, rhs) = cancellation_exponents(x, y, &c)?;
    Ok(lhs == rhs)
}

/// The zeta sum as a truncated series: the `(a, b)` coefficient is
/// `Σ_{|x|=a, |y|=b} S_{(x,0,y*)}(α) · S_x(β¹) · S_y(β²)`, with `x` over
/// partitions with at most `m` parts and `y` at most `n`.
pub fn zeta_lhs_series(d: &SatakeData, caps: (usize, usize)) -> Result<BiSeries<Rat>> {
    let c = &d.config;
    let mut s = BiSeries::constant(caps.0, caps.1, rat_int(0));
    for a in 0..=caps.0 {
        for x in enumerate_dominant(c.m, a as i64) {
            let sx = schur_eval(&x, &d.beta1);
            if sx.is_zero() {
                continue;
            }
            for b in 0..=caps.1 {
                for y in enumerate_dominant(c.n, b as i64) {
                    let sy = schur_eval(&y, &d.beta2);
                    if sy.is_zero() {
                        continue;
                    }
                    let w = central_weight(&x, &y, c.l, c.m, c.n)?;
                    let sa = schur_glweight_eval(&w, &d.alpha)?;
                    let term = sa * &sx * sy;
                    let cur = s.coeff(a, b).clone();
                    s.set_coeff(a, b, cur + term);
                }
            }
        }
    }
    Ok(s)
}

/// The same series assembled the long way: spherical Whittaker values for
/// the three groups, the inverse torus modulus factor, and the residual
/// determinant exponents, term by term. Every `Q`-power is kept explicit,
/// so this route only matches [`zeta_lhs_series`] if the cancellation
/// identity actually holds at the chosen `Q`.
pub fn zeta_lhs_series_precancel(d: &SatakeData, caps: (usize, usize)) -> Result<BiSeries<Rat>> {
    let c = &d.config;
    let (l, m, n, j) = (c.l, c.m, c.n, c.j as i64);
    let k = c.k() as i64;
    let mut s = BiSeries::constant(caps.0, caps.1, rat_int(0));
    for a in 0..=caps.0 {
        for x in enumerate_dominant(c.m, a as i64) {
            for b in 0..=caps.1 {
                for y in enumerate_dominant(c.n, b as i64) {
                    let mu = central_weight(&x, &y, l, m, n)?;
                    let w_pi = cs_whittaker(&mu, &d.alpha, &d.q_half)?;
                    let w_tau1 =
                        cs_whittaker(&GLWeight::new(x.padded(m)?), &d.beta1, &d.q_half)?;
                    let w_tau2 =
                        cs_whittaker(&GLWeight::new(y.padded(n)?), &d.beta2, &d.q_half)?;
                    let nu = paired_weight(&x, &y, m, n)?;
                    let inv_torus = HalfPowerScalar::new(
                        d.q_half.clone(),
                        -2 * delta_exponent_q(&nu),
                    )?;
                    let residual = -x.size() * (n as i64 - 1 - 2 * j)
                        - y.size() * (m as i64 - 1 - 2 * k)
                        + x.size() * (k - j)
                        + y.size() * (j - k);
                    let det_twist = HalfPowerScalar::new(d.q_half.clone(), residual)?;
                    let scalar = inv_torus.mul(&det_twist)?.value();
                    let term = w_pi.value() * w_tau1.value() * w_tau2.value() * scalar;
                    if term.is_zero() {
                        continue;
                    }
                    let cur = s.coeff(a, b).clone();
                    s.set_coeff(a, b, cur + term);
                }
            }
        }
    }
    Ok(s)
}

fn rhs_series_generic<C: Coeff>(
    caps: (usize, usize),
    zero: C,
    num1: Vec<C>,
    num2: Vec<C>,
    den: Vec<C>,
) -> Result<BiSeries<C>> {
    let mut s = BiSeries::one(caps.0, caps.1, &zero);
    for c in num1 {
        s = s.mul(&BiSeries::geom_inverse(c, 1, 0, caps.0, caps.1)?)?;
    }
    for c in num2 {
        s = s.mul(&BiSeries::geom_inverse(c, 0, 1, caps.0, caps.1)?)?;
    }
    for c in den {
        s = s.mul(&BiSeries::one_minus_term(c, 1, 1, caps.0, caps.1))?;
    }
    Ok(s)
}

/// The L-factor ratio as a truncated series: geometric factors
/// `(1 - α_i β¹_a T1)^{-1}` and `(1 - α_i^{-1} β²_b T2)^{-1}` for the two
/// numerator L-functions, times the polynomial `Π (1 - β¹_a β²_b T1 T2)`
/// for the inverted denominator.
pub fn zeta_rhs_series(d: &SatakeData, caps: (usize, usize)) -> Result<BiSeries<Rat>> {
    let mut num1 = Vec::new();
    for ai in &d.alpha {
        for ba in &d.beta1 {
            num1.push(ai * ba);
        }
    }
    let mut num2 = Vec::new();
    for ai in &d.alpha {
        for bb in &d.beta2 {
            num2.push(bb / ai);
        }
    }
    let mut den = Vec::new();
    for ba in &d.beta1 {
        for bb in &d.beta2 {
            den.push(ba * bb);
        }
    }
    rhs_series_generic(caps, rat_int(0), num1, num2, den)
}

/// Outcome of one coefficientwise series comparison.
#[derive(Clone, Debug)]
pub struct UnramifiedOutcome<C: Coeff> {
    pub equal: bool,
    pub first_mismatch: Option<(usize, usize)>,
    pub lhs: BiSeries<C>,
    pub rhs: BiSeries<C>,
}

/// Expands both sides of the local identity up to the caps and compares
/// exactly.
pub fn verify_unramified(d: &SatakeData, caps: (usize, usize)) -> Result<UnramifiedOutcome<Rat>> {
    let lhs = zeta_lhs_series(d, caps)?;
    let rhs = zeta_rhs_series(d, caps)?;
    let first_mismatch = lhs.first_mismatch(&rhs)?;
    Ok(UnramifiedOutcome {
        equal: first_mismatch.is_none(),
        first_mismatch,
        lhs,
        rhs,
    })
}

fn symbolic_vars(c: &SatakeConfig) -> usize {
    c.l + c.m + c.n
}

/// Symbolic zeta sum: coefficients are Laurent polynomials in the
/// concatenated variables `(α, β¹, β²)`.
pub fn zeta_lhs_series_symbolic(
    c: &SatakeConfig,
    caps: (usize, usize),
) -> Result<BiSeries<LaurentPoly>> {
    let total = symbolic_vars(c);
    let mut s = BiSeries::constant(caps.0, caps.1, LaurentPoly::zero(total));
    for a in 0..=caps.0 {
        for x in enumerate_dominant(c.m, a as i64) {
            let sx = schur_jacobi_trudi(&x, c.m).embed(total, c.l);
            if sx.is_zero() {
                continue;
            }
            for b in 0..=caps.1 {
                for y in enumerate_dominant(c.n, b as i64) {
                    let sy = schur_jacobi_trudi(&y, c.n).embed(total, c.l + c.m);
                    if sy.is_zero() {
                        continue;
                    }
                    let w = central_weight(&x, &y, c.l, c.m, c.n)?;
                    let sa = schur_glweight(&w)?.embed(total, 0);
                    let term = sa.mul(&sx).mul(&sy);
                    let cur = s.coeff(a, b).add(&term);
                    s.set_coeff(a, b, cur);
                }
            }
        }
    }
    Ok(s)
}

/// Symbolic L-factor ratio over the same variable layout.
pub fn zeta_rhs_series_symbolic(
    c: &SatakeConfig,
    caps: (usize, usize),
) -> Result<BiSeries<LaurentPoly>> {
    let total = symbolic_vars(c);
    let mono = |pairs: &[(usize, i64)]| {
        let mut exps = vec![0i64; total];
        for &(v, e) in pairs {
            exps[v] = e;
        }
        LaurentPoly::monomial(exps, Rat::from_integer(1.into()))
    };
    let mut num1 = Vec::new();
    for i in 0..c.l {
        for a in 0..c.m {
            num1.push(mono(&[(i, 1), (c.l + a, 1)]));
        }
    }
    let mut num2 = Vec::new();
    for i in 0..c.l {
        for b in 0..c.n {
            num2.push(mono(&[(i, -1), (c.l + c.m + b, 1)]));
        }
    }
    let mut den = Vec::new();
    for a in 0..c.m {
        for b in 0..c.n {
            den.push(mono(&[(c.l + a, 1), (c.l + c.m + b, 1)]));
        }
    }
    rhs_series_generic(caps, LaurentPoly::zero(total), num1, num2, den)
}

/// Fully symbolic comparison; refuses configurations with more than
/// `var_limit` total variables (coefficient blow-up).
pub fn verify_unramified_symbolic(
    c: &SatakeConfig,
    caps: (usize, usize),
    var_limit: usize,
) -> Result<UnramifiedOutcome<LaurentPoly>> {
    if symbolic_vars(c) > var_limit {
        return Err(Error::OracleRefused(format!(
            "symbolic mode limited to {} variables, configuration needs {}",
            var_limit,
            symbolic_vars(c)
        )));
    }
    let lhs = zeta_lhs_series_symbolic(c, caps)?;
    let rhs = zeta_rhs_series_symbolic(c, caps)?;
    let first_mismatch = lhs.first_mismatch(&rhs)?;
    Ok(UnramifiedOutcome {
        equal: first_mismatch.is_none(),
        first_mismatch,
        lhs,
        rhs,
    })
}
