//! Bounded enumeration of the two auxiliary Diophantine systems,
//! λ + μ = 1 in S-units and α + β = γ² with S-unit α, β and S-integral γ,
//! together with the valuation-bound predicates and transformation steps
//! used by the local criteria.
//!
//! The searches are bounded exponent scans: every solution whose exponents
//! fit the box is found, and nothing beyond the box is claimed.

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::numfield::{
    element_valuation, primes_above, FieldElement, FieldKind, NumberField, NumberFieldDesc,
    PrimeData,
};
use crate::Error;

pub const DEFAULT_EXPONENT_BOUND: u32 = 8;

/// Configuration of a bounded S-unit search: the field (Q or a real
/// quadratic field), the rational primes generating the S-support, and the
/// exponent box.
#[derive(Clone, Debug, Serialize, Deserialize)]
pub struct SUnitConfig {
    pub field: NumberFieldDesc,
    pub s_primes: Vec<u64>,
    pub exponent_bound: u32,
}

impl SUnitConfig {
    pub fn new(field: NumberFieldDesc, mut s_primes: Vec<u64>) -> Result<Self, Error> {
        s_primes.sort_unstable();
        s_primes.dedup();
        if s_primes.is_empty() {
            return Err(Error::InvalidInput("S must be nonempty".into()));
        }
        for &q in &s_primes {
            if !arith::is_prime(q) {
                return Err(Error::InvalidInput(format!("{q} in S is not prime")));
            }
        }
        match field.kind {
            FieldKind::Rationals | FieldKind::RealQuadratic { .. } => {}
            _ => {
                return Err(Error::UnsupportedField(
                    "S-unit enumeration supports Q and real quadratic fields".into(),
                ))
            }
        }
        Ok(SUnitConfig {
            field,
            s_primes,
            exponent_bound: DEFAULT_EXPONENT_BOUND,
        })
    }

    pub fn with_bound(mut self, bound: u32) -> Self {
        self.exponent_bound = bound.max(1);
        self
    }
}

/// Valuations of (λ, μ) at one prime ideal above q; `index` numbers the
/// primes above q in the deterministic `primes_above` order.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeValuation {
    pub q: u64,
    pub index: usize,
    pub v_lambda: i64,
    pub v_mu: i64,
}

/// One solution of λ + μ = 1 in S-units, with its valuation vector over the
/// primes of S.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct SUnitSolution {
    pub lambda: FieldElement,
    pub mu: FieldElement,
    pub valuations: Vec<PrimeValuation>,
}

impl SUnitSolution {
    pub fn lambda_rational(&self) -> Option<BigRational> {
        self.lambda.as_rational()
    }

    pub fn mu_rational(&self) -> Option<BigRational> {
        self.mu.as_rational()
    }
}

fn s_primes_data(cfg: &SUnitConfig) -> Result<Vec<(u64, Vec<PrimeData>)>, Error> {
    cfg.s_primes
        .iter()
        .map(|&q| Ok((q, primes_above(q, &cfg.field)?)))
        .collect()
}

fn valuation_vector(
    field: &NumberField,
    primes: &[(u64, Vec<PrimeData>)],
    lambda: &FieldElement,
    mu: &FieldElement,
) -> Result<Vec<PrimeValuation>, Error> {
    let mut out = Vec::new();
    for (q, pds) in primes {
        for (index, pd) in pds.iter().enumerate() {
            let v_lambda = element_valuation(lambda, pd, field)?
                .ok_or_else(|| Error::InvalidInput("zero S-unit".into()))?;
            let v_mu = element_valuation(mu, pd, field)?
                .ok_or_else(|| Error::InvalidInput("zero S-unit".into()))?;
            out.push(PrimeValuation {
                q: *q,
                index,
                v_lambda,
                v_mu,
            });
        }
    }
    Ok(out)
}

/// Is x an S-unit? Its norm must be supported on the S-primes (sufficient
/// here because the candidates are differences 1 − λ of S-units, hence
/// S-integral outside S).
fn is_s_unit(field: &NumberField, x: &FieldElement, s: &[u64]) -> bool {
    if x.is_zero() {
        return false;
    }
    let n = field.norm(x);
    let mut num = n.numer().abs();
    let mut den = n.denom().abs();
    for &q in s {
        let bq = BigInt::from(q);
        while num.mod_floor(&bq).is_zero() {
            num /= &bq;
        }
        while den.mod_floor(&bq).is_zero() {
            den /= &bq;
        }
    }
    num.is_one() && den.is_one()
}

/// Minimal (x, y) with x² − t y² = ±1, via the continued fraction of √t.
fn pell_fundamental(t: u64) -> Result<(BigInt, BigInt), Error> {
    let mut a0 = (t as f64).sqrt() as u64;
    while (a0 + 1) * (a0 + 1) <= t {
        a0 += 1;
    }
    while a0 * a0 > t {
        a0 -= 1;
    }
    if a0 * a0 == t {
        return Err(Error::InvalidInput(format!("{t} is a perfect square")));
    }
    let (mut m, mut d, mut a) = (0i64, 1i64, a0 as i64);
    let (mut h_prev, mut h) = (BigInt::one(), BigInt::from(a0));
    let (mut k_prev, mut k) = (BigInt::zero(), BigInt::one());
    for _ in 0..1_000_000 {
        let val = &h * &h - BigInt::from(t) * &k * &k;
        if val == BigInt::one() || val == BigInt::from(-1) {
            return Ok((h, k));
        }
        m = d * a - m;
        d = (t as i64 - m * m) / d;
        a = (a0 as i64 + m) / d;
        let h_next = BigInt::from(a) * &h + &h_prev;
        let k_next = BigInt::from(a) * &k + &k_prev;
        h_prev = h;
        h = h_next;
        k_prev = k;
        k = k_next;
    }
    Err(Error::Undecided("Pell expansion did not terminate".into()))
}

fn exponent_boxes(dims: usize, bound: i64) -> impl Iterator<Item = Vec<i64>> {
    let width = (2 * bound + 1) as usize;
    let total = width.pow(dims as u32);
    (0..total).map(move |mut idx| {
        (0..dims)
            .map(|_| {
                let e = (idx % width) as i64 - bound;
                idx /= width;
                e
            })
            .collect()
    })
}

/// All solutions of λ + μ = 1 with λ, μ S-units and every exponent in the
/// box [−bound, bound]; deterministic order by (exponent vector, sign) of λ.
/// Over a quadratic field λ ranges over ±ε^u Π q^(e_q) for the fundamental
/// unit ε of Z[√t]; the search is a bounded subgroup scan and completeness
/// beyond the box is not claimed.
pub fn enumerate_sunit(cfg: &SUnitConfig) -> Result<Vec<SUnitSolution>, Error> {
    let field = NumberField::new(cfg.field.clone());
    let primes = s_primes_data(cfg)?;
    let bound = cfg.exponent_bound as i64;

    let unit: Option<FieldElement> = match cfg.field.kind {
        FieldKind::Rationals => None,
        FieldKind::RealQuadratic { t } => {
            let (x, y) = pell_fundamental(t)?;
            Some(
                field
                    .from_coords(vec![BigRational::from(x), BigRational::from(y)])
                    .unwrap(),
            )
        }
        _ => unreachable!("validated in SUnitConfig::new"),
    };
    let dims = cfg.s_primes.len() + usize::from(unit.is_some());

    let mut out = Vec::new();
    for exps in exponent_boxes(dims, bound) {
        for sign in [1i64, -1] {
            let mut lambda = field.from_int(sign);
            for (i, &q) in cfg.s_primes.iter().enumerate() {
                lambda = field.mul(&lambda, &rational_power(&field, q, exps[i]));
            }
            if let Some(eps) = &unit {
                let e = exps[cfg.s_primes.len()];
                let powed = element_power(&field, eps, e)?;
                lambda = field.mul(&lambda, &powed);
            }
            let mu = field.sub(&field.one(), &lambda);
            if mu.is_zero() || !is_s_unit(&field, &mu, &cfg.s_primes) {
                continue;
            }
            let vals = valuation_vector(&field, &primes, &lambda, &mu)?;
            // both sides must respect the exponent box: at a prime P above q
            // the valuation of a box element is at most bound · e(P/q)
            let within = vals.iter().all(|pv| {
                let e_ram = primes
                    .iter()
                    .find(|(q, _)| *q == pv.q)
                    .map(|(_, pds)| pds[pv.index].e as i64)
                    .unwrap_or(1);
                pv.v_lambda.abs() <= bound * e_ram && pv.v_mu.abs() <= bound * e_ram
            });
            if within {
                out.push(SUnitSolution {
                    lambda,
                    mu,
                    valuations: vals,
                });
            }
        }
    }
    Ok(out)
}

fn rational_power(field: &NumberField, q: u64, e: i64) -> FieldElement {
    let mut x = BigRational::one();
    let bq = BigRational::from(BigInt::from(q));
    for _ in 0..e.unsigned_abs() {
        if e >= 0 {
            x *= &bq;
        } else {
            x /= &bq;
        }
    }
    field.from_rational(x)
}

fn element_power(field: &NumberField, x: &FieldElement, e: i64) -> Result<FieldElement, Error> {
    let base = if e < 0 { field.inv(x)? } else { x.clone() };
    Ok(field.pow(&base, e.unsigned_abs() as u32))
}

/// max{|v_P(λ)|, |v_P(μ)|} ≤ 4 v_P(2) at a prime P above 2.
pub fn check_bound_rrp(
    sol: &SUnitSolution,
    prime: &PrimeData,
    field: &NumberField,
) -> Result<bool, Error> {
    if prime.q != 2 {
        return Err(Error::InvalidInput(
            "the bound is a condition above 2".into(),
        ));
    }
    let v2 = element_valuation(&field.from_int(2), prime, field)?.unwrap();
    let vl = element_valuation(&sol.lambda, prime, field)?
        .ok_or_else(|| Error::InvalidInput("zero λ".into()))?;
    let vm = element_valuation(&sol.mu, prime, field)?
        .ok_or_else(|| Error::InvalidInput("zero μ".into()))?;
    Ok(vl.abs().max(vm.abs()) <= 4 * v2)
}

/// Replace (λ, μ) by a P-integral pair with the same bound value:
/// identity when v_P(λ) ≥ 0, else (1/λ, μ/(μ−1)). Idempotent, and preserves
/// max{|v_P(λ)|, |v_P(μ)|}.
pub fn integral_form(
    sol: &SUnitSolution,
    prime: &PrimeData,
    field: &NumberField,
) -> Result<SUnitSolution, Error> {
    let vl = element_valuation(&sol.lambda, prime, field)?
        .ok_or_else(|| Error::InvalidInput("zero λ".into()))?;
    if vl >= 0 {
        return Ok(sol.clone());
    }
    let lambda = field.inv(&sol.lambda)?;
    let mu_minus_1 = field.sub(&sol.mu, &field.one());
    let mu = field.div(&sol.mu, &mu_minus_1)?;
    let qs: std::collections::BTreeSet<u64> = sol.valuations.iter().map(|pv| pv.q).collect();
    let primes: Vec<(u64, Vec<PrimeData>)> = qs
        .into_iter()
        .map(|q| Ok((q, primes_above(q, field.desc())?)))
        .collect::<Result<_, Error>>()?;
    let valuations = valuation_vector(field, &primes, &lambda, &mu)?;
    Ok(SUnitSolution {
        lambda,
        mu,
        valuations,
    })
}

/// The descent map γ ↦ (λ'', μ'') = ((1+γ)²/(4γ), −(1−γ)²/(4γ)), with
/// λ'' + μ'' = 1 identically.
pub fn descent_step(gamma: &BigRational) -> Result<(BigRational, BigRational), Error> {
    let one = BigRational::one();
    if gamma.is_zero() || *gamma == one || *gamma == -one.clone() {
        return Err(Error::DegenerateDescent);
    }
    let four_gamma = BigRational::from(BigInt::from(4)) * gamma;
    let p = &one + gamma;
    let m = &one - gamma;
    let lambda = &p * &p / &four_gamma;
    let mu = -(&m * &m) / &four_gamma;
    Ok((lambda, mu))
}

/// One solution of α + β = γ² with α, β S-units and γ an S-integer, reduced
/// to the canonical representative of its δ²-scaling class:
/// min(v_q(α), v_q(β)) ∈ {0, 1} for every q ∈ S, and γ ≥ 0.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct SquareSumSolution {
    #[serde(with = "crate::serde_big::rat")]
    pub alpha: BigRational,
    #[serde(with = "crate::serde_big::rat")]
    pub beta: BigRational,
    #[serde(with = "crate::serde_big::rat")]
    pub gamma: BigRational,
}

impl SquareSumSolution {
    /// Canonical representative of the class of (α, β, γ) under
    /// (α, β, γ) ~ (δ²α, δ²β, δγ) for S-units δ.
    pub fn canonicalize(
        alpha: &BigRational,
        beta: &BigRational,
        gamma: &BigRational,
        s: &[u64],
    ) -> Self {
        let mut scale = BigRational::one();
        for &q in s {
            let va = arith::rat_valuation(alpha, q).expect("nonzero alpha");
            let vb = arith::rat_valuation(beta, q).expect("nonzero beta");
            let half = va.min(vb).div_euclid(2);
            // multiply by q^(-2·floor(m/2))
            let bq = BigRational::from(BigInt::from(q));
            for _ in 0..(2 * half).unsigned_abs() {
                if half >= 0 {
                    scale /= &bq;
                } else {
                    scale *= &bq;
                }
            }
        }
        let alpha = alpha * &scale;
        let beta = beta * &scale;
        let gamma_scale = arith::exact_sqrt_rational(&scale).expect("scale is a square");
        let gamma = (gamma * gamma_scale).abs();
        SquareSumSolution { alpha, beta, gamma }
    }
}

/// All inequivalent solutions of α + β = γ² with S-unit exponents in the
/// box, over Q. γ is recovered by exact rational square-root extraction and
/// must be an S-integer; triples are reduced to canonical class
/// representatives and sorted by (α, β).
pub fn enumerate_square_sum(cfg: &SUnitConfig) -> Result<Vec<SquareSumSolution>, Error> {
    if !matches!(cfg.field.kind, FieldKind::Rationals) {
        return Err(Error::UnsupportedField(
            "the square-sum enumeration runs over Q".into(),
        ));
    }
    let bound = cfg.exponent_bound as i64;
    let k = cfg.s_primes.len();
    let field = NumberField::rationals();
    let mut seen = std::collections::BTreeSet::new();
    let mut out = Vec::new();
    let alphas: Vec<BigRational> = exponent_boxes(k, bound)
        .flat_map(|e| {
            [1i64, -1]
                .into_iter()
                .map(move |s| (e.clone(), s))
        })
        .map(|(e, s)| signed_power_product(&field, &cfg.s_primes, &e, s))
        .collect();
    for alpha in &alphas {
        for beta in &alphas {
            let sum = alpha + beta;
            let gamma = match arith::exact_sqrt_rational(&sum) {
                Some(g) => g,
                None => continue,
            };
            // γ ∈ O_S: denominator supported on S
            let mut den = gamma.denom().abs();
            for &q in &cfg.s_primes {
                let bq = BigInt::from(q);
                while den.mod_floor(&bq).is_zero() {
                    den /= &bq;
                }
            }
            if !den.is_one() {
                continue;
            }
            let canon = SquareSumSolution::canonicalize(alpha, beta, &gamma, &cfg.s_primes);
            let key = format!("{}|{}|{}", canon.alpha, canon.beta, canon.gamma);
            if seen.insert(key) {
                out.push(canon);
            }
        }
    }
    out.sort_by(|x, y| (&x.alpha, &x.beta).cmp(&(&y.alpha, &y.beta)));
    Ok(out)
}

fn signed_power_product(
    field: &NumberField,
    primes: &[u64],
    exps: &[i64],
    sign: i64,
) -> BigRational {
    let mut x = BigRational::from(BigInt::from(sign));
    for (&q, &e) in primes.iter().zip(exps) {
        x *= rational_power(field, q, e).as_rational().unwrap();
    }
    x
}

/// |v_P(α/β)| ≤ 6 v_P(2) at a prime P above 2 (rational solutions: both
/// sides scale by e(P/2), so the check reduces to |v₂(α/β)| ≤ 6).
pub fn check_bound_55p(sol: &SquareSumSolution, prime: &PrimeData) -> Result<bool, Error> {
    if prime.q != 2 {
        return Err(Error::InvalidInput(
            "the bound is a condition above 2".into(),
        ));
    }
    let va = arith::rat_valuation(&sol.alpha, 2)
        .ok_or_else(|| Error::InvalidInput("zero α".into()))?;
    let vb = arith::rat_valuation(&sol.beta, 2)
        .ok_or_else(|| Error::InvalidInput("zero β".into()))?;
    Ok((va - vb).abs() <= 6)
}
