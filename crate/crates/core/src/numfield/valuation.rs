//! Element valuations at primes of the supported fields.
//!
//! At an unramified prime with local factor g the valuation of an integral
//! element y is read off from the representative of y modulo (q^n, g): in an
//! unramified completion with residue basis 1, x, ..., x^(f-1) the valuation
//! is the minimum q-adic valuation of the coordinates. The precision n is
//! raised until the answer is certain.
//!
//! At the unique prime above q with f = 1 (the totally ramified prime θ − 2
//! above r in the real cyclotomic field, and ramified quadratic primes) the
//! valuation equals v_q(Norm(x)).

use num_bigint::BigInt;
use num_traits::Zero;

use super::splitting::PrimeData;
use super::{FieldElement, NumberField};
use crate::arith::{self, hensel_lift_factor, ModPolynomial};
use crate::Error;

/// Hard cap on the q-adic precision of the escalation loop.
const PRECISION_CAP: u32 = 1 << 12;

/// v_P(x) as `Some(v)`, or `None` for x = 0 (v = +∞).
pub fn element_valuation(
    x: &FieldElement,
    prime: &PrimeData,
    field: &NumberField,
) -> Result<Option<i64>, Error> {
    if x.is_zero() {
        return Ok(None);
    }
    if prime.e == 1 {
        let base = prime.local_factor.as_ref().ok_or_else(|| {
            Error::UnsupportedPrime(format!(
                "no local factor available above q = {} in this field",
                prime.q
            ))
        })?;
        let (ints, den) = x.integral_scaled();
        let v_num = unramified_integral_valuation(&ints, base, prime, field)?;
        let v_den = arith::int_valuation(&den, prime.q).unwrap();
        return Ok(Some(v_num - v_den));
    }
    if prime.norm_route() {
        // single prime above q with residue degree 1: v_P = v_q ∘ Norm
        let n = field.norm(x);
        return Ok(arith::rat_valuation(&n, prime.q));
    }
    Err(Error::UnsupportedPrime(format!(
        "valuations above q = {} are not supported at e = {}, f = {}, g = {}",
        prime.q, prime.e, prime.f, prime.g
    )))
}

fn unramified_integral_valuation(
    ints: &[BigInt],
    base: &ModPolynomial,
    prime: &PrimeData,
    field: &NumberField,
) -> Result<i64, Error> {
    let q = BigInt::from(prime.q);
    let mut n: u32 = 8;
    loop {
        let modulus = num_traits::pow(q.clone(), n as usize);
        let lifted = if n <= prime.precision {
            base.reduce_modulus(&modulus)
        } else {
            let base_mod_q = base.reduce_modulus(&q);
            hensel_lift_factor(&field.desc().min_poly, &base_mod_q, n)?
        };
        let y = ModPolynomial::new(ints.to_vec(), modulus);
        let rem = y.divrem(&lifted)?.1;
        if !rem.is_zero() {
            let v = rem
                .coeffs()
                .iter()
                .filter(|c| !c.is_zero())
                .map(|c| arith::int_valuation(c, prime.q).unwrap())
                .min()
                .unwrap();
            // coefficients are reduced into [0, q^n), so a nonzero one has
            // valuation < n and the answer is exact
            debug_assert!(v < n as i64);
            return Ok(v);
        }
        if n >= PRECISION_CAP {
            return Err(Error::PrecisionCapExceeded);
        }
        n *= 2;
    }
}
