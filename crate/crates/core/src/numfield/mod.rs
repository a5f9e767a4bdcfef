//! Supported number fields (Q, real quadratic, real cyclotomic, and their
//! composites), power-basis element arithmetic, prime splitting, element
//! valuations, and residue rings `O/P^n`.

mod residue;
mod splitting;
mod valuation;

pub use residue::{is_square_in_residue_ring, ResidueRing};
pub use splitting::{primes_above, splitting_type, PrimeData};
pub use valuation::element_valuation;

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::arith::{self, IntPolynomial, RatPolynomial};
use crate::Error;

/// Which of the supported fields a descriptor denotes.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum FieldKind {
    Rationals,
    RealQuadratic { t: u64 },
    RealCyclotomic { r: u64 },
    Composite { t: u64, r: u64 },
}

/// A supported number field with its defining polynomial.
///
/// The generator θ is: 0 for Q, √t for the real quadratic field,
/// ζ_r + ζ_r⁻¹ for the real cyclotomic field `Q(ζ_r)^+`, and
/// √t + ζ_r + ζ_r⁻¹ for the composite. Elements are represented by their
/// coordinates in the power basis of θ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberFieldDesc {
    #[serde(flatten)]
    pub kind: FieldKind,
    pub degree: usize,
    pub min_poly: IntPolynomial,
}

fn is_squarefree(t: u64) -> bool {
    let mut n = t;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            n /= p;
            if n.is_multiple_of(p) {
                return false;
            }
        } else {
            p += 1;
        }
    }
    true
}

impl NumberFieldDesc {
    pub fn rationals() -> Self {
        NumberFieldDesc {
            kind: FieldKind::Rationals,
            degree: 1,
            min_poly: IntPolynomial::x(),
        }
    }

    pub fn real_quadratic(t: u64) -> Result<Self, Error> {
        if t < 2 || !is_squarefree(t) {
            return Err(Error::UnsupportedField(format!(
                "t = {t} must be squarefree and at least 2"
            )));
        }
        Ok(NumberFieldDesc {
            kind: FieldKind::RealQuadratic { t },
            degree: 2,
            min_poly: IntPolynomial::from_i64(&[-(t as i64), 0, 1]),
        })
    }

    pub fn real_cyclotomic(r: u64) -> Result<Self, Error> {
        if r < 3 || !arith::is_prime(r) {
            return Err(Error::UnsupportedField(format!("r = {r} must be an odd prime")));
        }
        Ok(NumberFieldDesc {
            kind: FieldKind::RealCyclotomic { r },
            degree: ((r - 1) / 2) as usize,
            min_poly: real_cyclotomic_min_poly(r)?,
        })
    }

    pub fn composite(t: u64, r: u64) -> Result<Self, Error> {
        if t < 2 || !is_squarefree(t) {
            return Err(Error::UnsupportedField(format!(
                "t = {t} must be squarefree and at least 2"
            )));
        }
        if r < 5 || !arith::is_prime(r) {
            return Err(Error::UnsupportedField(format!("r = {r} must be a prime >= 5")));
        }
        if t.is_multiple_of(r) {
            return Err(Error::UnsupportedField(
                "composite field requires t coprime to r".into(),
            ));
        }
        let psi = real_cyclotomic_min_poly(r)?;
        let min_poly = composite_min_poly(t, &psi);
        let degree = (r - 1) as usize;
        debug_assert_eq!(min_poly.degree(), Some(degree));
        Ok(NumberFieldDesc {
            kind: FieldKind::Composite { t, r },
            degree,
            min_poly,
        })
    }

    /// The rational prime(s) whose ideals the paper's criteria care about:
    /// r for the cyclotomic layer, when present.
    pub fn cyclotomic_r(&self) -> Option<u64> {
        match self.kind {
            FieldKind::RealCyclotomic { r } | FieldKind::Composite { r, .. } => Some(r),
            _ => None,
        }
    }
}

/// Monic minimal polynomial of θ = ζ_r + ζ_r⁻¹, of degree (r-1)/2.
///
/// Uses x^k + x^{-k} = T_k(y) with T_0 = 2, T_1 = y, T_{k+1} = y·T_k − T_{k−1}
/// and Φ_r(x) = x^((r-1)/2) ψ_r(x + 1/x), so ψ_r = 1 + Σ_{k=1}^{(r-1)/2} T_k.
pub fn real_cyclotomic_min_poly(r: u64) -> Result<IntPolynomial, Error> {
    if r < 3 || !arith::is_prime(r) {
        return Err(Error::UnsupportedField(format!("r = {r} must be an odd prime")));
    }
    let n = ((r - 1) / 2) as usize;
    let mut t_prev = IntPolynomial::constant(BigInt::from(2));
    let mut t_cur = IntPolynomial::x();
    let mut psi = IntPolynomial::one();
    for _ in 1..=n {
        psi = psi.add(&t_cur);
        let t_next = shift_up(&t_cur).sub(&t_prev);
        t_prev = t_cur;
        t_cur = t_next;
    }
    Ok(psi)
}

fn shift_up(p: &IntPolynomial) -> IntPolynomial {
    let mut c = vec![BigInt::zero()];
    c.extend_from_slice(p.coeffs());
    IntPolynomial::new(c)
}

/// Minimal polynomial of η = √t + θ over Q: the product over the conjugates
/// θ_k of (x − θ_k)² − t, computed by evaluation/interpolation from scalar
/// resultants.
fn composite_min_poly(t: u64, psi: &IntPolynomial) -> IntPolynomial {
    let half = psi.degree().unwrap();
    let degree = 2 * half;
    // h(u) = Res_y(psi(y), (u - y)^2 - t) up to sign conventions; evaluate at
    // degree+1 points and interpolate.
    let mut points = Vec::with_capacity(degree + 1);
    for u in 0..=(degree as i64) {
        // (u - y)^2 - t as a polynomial in y
        let g = IntPolynomial::new(vec![
            BigInt::from(u * u - t as i64),
            BigInt::from(-2 * u),
            BigInt::one(),
        ]);
        // psi monic: Res(psi, g) = prod_k g(theta_k) = prod_k ((u - theta_k)^2 - t)
        points.push((BigInt::from(u), psi.resultant(&g)));
    }
    interpolate_int_poly(&points)
}

/// Lagrange interpolation through integer points, with an integer result.
fn interpolate_int_poly(points: &[(BigInt, BigInt)]) -> IntPolynomial {
    let n = points.len();
    let mut acc = vec![BigRational::zero(); n];
    for (i, (xi, yi)) in points.iter().enumerate() {
        // basis polynomial prod_{j != i} (x - xj)/(xi - xj)
        let mut num = vec![BigRational::one()];
        let mut den = BigRational::one();
        for (j, (xj, _)) in points.iter().enumerate() {
            if i == j {
                continue;
            }
            let mut next = vec![BigRational::zero(); num.len() + 1];
            for (k, c) in num.iter().enumerate() {
                next[k] -= c * BigRational::from(xj.clone());
                next[k + 1] += c.clone();
            }
            num = next;
            den *= BigRational::from(xi - xj);
        }
        let w = BigRational::from(yi.clone()) / den;
        for (k, c) in num.into_iter().enumerate() {
            acc[k] += c * &w;
        }
    }
    IntPolynomial::new(
        acc.into_iter()
            .map(|c| {
                debug_assert!(c.is_integer());
                c.to_integer()
            })
            .collect(),
    )
}

/// Element of a number field in the power basis of θ.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct FieldElement {
    #[serde(with = "crate::serde_big::rat_vec")]
    pub coords: Vec<BigRational>,
}

impl FieldElement {
    pub fn is_zero(&self) -> bool {
        self.coords.iter().all(|c| c.is_zero())
    }

    /// The element as a rational number, when it lies in Q.
    pub fn as_rational(&self) -> Option<BigRational> {
        if self.coords.iter().skip(1).all(|c| c.is_zero()) {
            Some(self.coords.first().cloned().unwrap_or_else(BigRational::zero))
        } else {
            None
        }
    }

    fn to_rat_poly(&self) -> RatPolynomial {
        RatPolynomial::new(self.coords.clone())
    }

    /// Clear denominators: returns (integral coordinates, common denominator).
    pub fn integral_scaled(&self) -> (Vec<BigInt>, BigInt) {
        let mut den = BigInt::one();
        for c in &self.coords {
            den = den.lcm(c.denom());
        }
        let ints = self
            .coords
            .iter()
            .map(|c| {
                let scaled = c * BigRational::from(den.clone());
                debug_assert!(scaled.is_integer());
                scaled.to_integer()
            })
            .collect();
        (ints, den)
    }
}

impl std::fmt::Display for FieldElement {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        let mut first = true;
        for (i, c) in self.coords.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if first {
                if c.is_negative() {
                    write!(f, "-")?;
                }
                first = false;
            } else if c.is_negative() {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let one = mag.is_one();
            match i {
                0 => write!(f, "{}", crate::serde_big::rat_to_string(&mag))?,
                1 => {
                    if !one {
                        write!(f, "{}*", crate::serde_big::rat_to_string(&mag))?;
                    }
                    write!(f, "θ")?;
                }
                _ => {
                    if !one {
                        write!(f, "{}*", crate::serde_big::rat_to_string(&mag))?;
                    }
                    write!(f, "θ^{}", i)?;
                }
            }
        }
        if first {
            write!(f, "0")?;
        }
        Ok(())
    }
}

/// Arithmetic context for a [`NumberFieldDesc`]: all field-element operations
/// go through this wrapper, which caches the minimal polynomial over Q.
#[derive(Clone, Debug)]
pub struct NumberField {
    desc: NumberFieldDesc,
    min_poly_q: RatPolynomial,
}

impl NumberField {
    pub fn new(desc: NumberFieldDesc) -> Self {
        let min_poly_q = RatPolynomial::from_int(&desc.min_poly);
        NumberField { desc, min_poly_q }
    }

    pub fn rationals() -> Self {
        Self::new(NumberFieldDesc::rationals())
    }

    pub fn real_cyclotomic(r: u64) -> Result<Self, Error> {
        Ok(Self::new(NumberFieldDesc::real_cyclotomic(r)?))
    }

    pub fn real_quadratic(t: u64) -> Result<Self, Error> {
        Ok(Self::new(NumberFieldDesc::real_quadratic(t)?))
    }

    pub fn desc(&self) -> &NumberFieldDesc {
        &self.desc
    }

    pub fn degree(&self) -> usize {
        self.desc.degree
    }

    fn element(&self, mut coords: Vec<BigRational>) -> FieldElement {
        coords.resize(self.degree(), BigRational::zero());
        FieldElement { coords }
    }

    pub fn zero(&self) -> FieldElement {
        self.element(vec![])
    }

    pub fn one(&self) -> FieldElement {
        self.element(vec![BigRational::one()])
    }

    pub fn from_rational(&self, c: BigRational) -> FieldElement {
        self.element(vec![c])
    }

    pub fn from_int(&self, c: i64) -> FieldElement {
        self.from_rational(BigRational::from(BigInt::from(c)))
    }

    pub fn from_bigint(&self, c: BigInt) -> FieldElement {
        self.from_rational(BigRational::from(c))
    }

    pub fn from_coords(&self, coords: Vec<BigRational>) -> Result<FieldElement, Error> {
        if coords.len() > self.degree() {
            return Err(Error::InvalidInput(format!(
                "element has {} coordinates in a degree-{} field",
                coords.len(),
                self.degree()
            )));
        }
        Ok(self.element(coords))
    }

    pub fn from_int_coords(&self, coords: &[i64]) -> Result<FieldElement, Error> {
        self.from_coords(
            coords
                .iter()
                .map(|&c| BigRational::from(BigInt::from(c)))
                .collect(),
        )
    }

    /// The power-basis generator θ. Zero in the rational field.
    pub fn theta(&self) -> FieldElement {
        if self.degree() == 1 {
            // the generator of a degree-1 field is 0 (min poly x)
            return self.zero();
        }
        self.element(vec![BigRational::zero(), BigRational::one()])
    }

    /// ζ_r^k + ζ_r^{-k} as an element of the real cyclotomic field:
    /// T_k(θ) with the Chebyshev-style recurrence (T_0 = 2).
    pub fn theta_k(&self, k: u64) -> Result<FieldElement, Error> {
        let r = match self.desc.kind {
            FieldKind::RealCyclotomic { r } => r,
            _ => {
                return Err(Error::UnsupportedField(
                    "theta_k is defined for real cyclotomic fields".into(),
                ))
            }
        };
        let k = k % r;
        let mut prev = self.from_int(2);
        let mut cur = self.theta();
        if k == 0 {
            return Ok(prev);
        }
        for _ in 1..k {
            let next = self.sub(&self.mul(&self.theta(), &cur), &prev);
            prev = cur;
            cur = next;
        }
        Ok(cur)
    }

    pub fn add(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.element(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x + y)
                .collect(),
        )
    }

    pub fn sub(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        self.element(
            a.coords
                .iter()
                .zip(&b.coords)
                .map(|(x, y)| x - y)
                .collect(),
        )
    }

    pub fn neg(&self, a: &FieldElement) -> FieldElement {
        self.element(a.coords.iter().map(|x| -x).collect())
    }

    pub fn mul(&self, a: &FieldElement, b: &FieldElement) -> FieldElement {
        let prod = a.to_rat_poly().mul(&b.to_rat_poly());
        let rem = prod.divrem(&self.min_poly_q).1;
        self.element(rem.coeffs().to_vec())
    }

    pub fn scale(&self, a: &FieldElement, c: &BigRational) -> FieldElement {
        self.element(a.coords.iter().map(|x| x * c).collect())
    }

    pub fn inv(&self, a: &FieldElement) -> Result<FieldElement, Error> {
        if a.is_zero() {
            return Err(Error::NotAUnit);
        }
        let (g, s, _) = a.to_rat_poly().xgcd(&self.min_poly_q);
        if g.degree() != Some(0) {
            // min poly irreducible: this can only happen for invalid descriptors
            return Err(Error::NotAUnit);
        }
        let rem = s.divrem(&self.min_poly_q).1;
        Ok(self.element(rem.coeffs().to_vec()))
    }

    pub fn div(&self, a: &FieldElement, b: &FieldElement) -> Result<FieldElement, Error> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn pow(&self, a: &FieldElement, e: u32) -> FieldElement {
        let mut acc = self.one();
        for _ in 0..e {
            acc = self.mul(&acc, a);
        }
        acc
    }

    /// Field norm down to Q through the resultant: for x with integral
    /// representative y and denominator m, Norm(x) = Res(ψ, y) / m^degree.
    /// In particular Norm(c) = c^degree for rational c.
    pub fn norm(&self, x: &FieldElement) -> BigRational {
        if x.is_zero() {
            return BigRational::zero();
        }
        let (ints, den) = x.integral_scaled();
        let y = IntPolynomial::new(ints);
        let res = self.desc.min_poly.resultant(&y);
        BigRational::new(res, num_traits::pow(den, self.degree()))
    }

    /// Image of x under the i-th power-basis coordinate map, for tests.
    pub fn coord(&self, x: &FieldElement, i: usize) -> BigRational {
        x.coords.get(i).cloned().unwrap_or_else(BigRational::zero)
    }
}
