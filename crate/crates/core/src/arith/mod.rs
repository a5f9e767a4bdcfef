//! Exact arithmetic substrate: big integers and rationals, integer and
//! residue-ring polynomials, factorization over prime fields, Hensel lifting,
//! and elementary number-theoretic utilities.
//!
//! Everything here is integer-exact; no floating point is used anywhere.

mod modpoly;
mod poly;

pub use modpoly::{factor_mod_p, hensel_lift_factor, mod_inverse, ModPolynomial};
pub use poly::{IntPolynomial, RatPolynomial};

use num_bigint::BigInt;
use num_integer::Integer;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use std::collections::BTreeSet;

use crate::Error;

/// `p`-adic valuation of a nonzero integer; `None` for zero (v = +inf).
pub fn int_valuation(n: &BigInt, p: u64) -> Option<i64> {
    if n.is_zero() {
        return None;
    }
    let p = BigInt::from(p);
    let mut v = 0i64;
    let mut m = n.abs();
    loop {
        let (q, r) = m.div_rem(&p);
        if !r.is_zero() {
            return Some(v);
        }
        v += 1;
        m = q;
    }
}

/// `p`-adic valuation of a nonzero rational; `None` for zero.
pub fn rat_valuation(x: &BigRational, p: u64) -> Option<i64> {
    if x.is_zero() {
        return None;
    }
    let vn = int_valuation(x.numer(), p).unwrap();
    let vd = int_valuation(x.denom(), p).unwrap();
    Some(vn - vd)
}

/// Deterministic trial-division primality test, adequate for desk-scale inputs.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    if n.is_multiple_of(3) {
        return n == 3;
    }
    let mut i = 5u64;
    while i.saturating_mul(i) <= n {
        if n.is_multiple_of(i) || n.is_multiple_of(i + 2) {
            return false;
        }
        i += 6;
    }
    true
}

/// All primes up to and including `n`, by sieve.
pub fn primes_up_to(n: u64) -> Vec<u64> {
    if n < 2 {
        return vec![];
    }
    let n = n as usize;
    let mut sieve = vec![true; n + 1];
    sieve[0] = false;
    sieve[1] = false;
    let mut i = 2;
    while i * i <= n {
        if sieve[i] {
            let mut j = i * i;
            while j <= n {
                sieve[j] = false;
                j += i;
            }
        }
        i += 1;
    }
    sieve
        .iter()
        .enumerate()
        .filter_map(|(i, &b)| if b { Some(i as u64) } else { None })
        .collect()
}

/// Trial-factor `|n|` over primes up to `bound`. Returns the found
/// `(prime, exponent)` pairs and the unfactored cofactor (always positive).
pub fn trial_factor(n: &BigInt, bound: u64) -> (Vec<(u64, u32)>, BigInt) {
    let mut m = n.abs();
    let mut out = Vec::new();
    if m.is_zero() || m.is_one() {
        return (out, m);
    }
    for p in primes_up_to(bound) {
        let bp = BigInt::from(p);
        let mut e = 0u32;
        loop {
            let (q, r) = m.div_rem(&bp);
            if !r.is_zero() {
                break;
            }
            m = q;
            e += 1;
        }
        if e > 0 {
            out.push((p, e));
        }
        if m.is_one() {
            break;
        }
    }
    (out, m)
}

/// Euler totient by trial division.
pub fn euler_phi(m: u64) -> u64 {
    let mut n = m;
    let mut phi = m;
    let mut p = 2u64;
    while p * p <= n {
        if n.is_multiple_of(p) {
            while n.is_multiple_of(p) {
                n /= p;
            }
            phi -= phi / p;
        }
        p += 1;
    }
    if n > 1 {
        phi -= phi / n;
    }
    phi
}

fn mul_mod(a: u64, b: u64, m: u64) -> u64 {
    ((a as u128 * b as u128) % m as u128) as u64
}

/// `a^e mod m` for u64 operands.
pub fn pow_mod(a: u64, mut e: u64, m: u64) -> u64 {
    if m == 1 {
        return 0;
    }
    let mut base = a % m;
    let mut acc = 1u64;
    while e > 0 {
        if e & 1 == 1 {
            acc = mul_mod(acc, base, m);
        }
        base = mul_mod(base, base, m);
        e >>= 1;
    }
    acc
}

/// Order of `a` in `(Z/m)^*`. Errors when `gcd(a, m) != 1`.
pub fn multiplicative_order(a: u64, m: u64) -> Result<u64, Error> {
    if m == 0 || a.gcd(&m) != 1 {
        return Err(Error::NotAUnit);
    }
    let a = a % m;
    if m == 1 || a == 1 {
        return Ok(1);
    }
    let mut x = a;
    let mut k = 1u64;
    let phi = euler_phi(m);
    while x != 1 {
        x = mul_mod(x, a, m);
        k += 1;
        if k > phi {
            unreachable!("order exceeds phi(m)");
        }
    }
    Ok(k)
}

/// Order of `a` in `(Z/r)^* / {±1}`: the least `k` with `a^k ≡ ±1 (mod r)`.
pub fn order_mod_pm1(a: u64, r: u64) -> Result<u64, Error> {
    if r == 0 || a.gcd(&r) != 1 {
        return Err(Error::NotAUnit);
    }
    let a = a % r;
    if r <= 2 || a == 1 || a == r - 1 {
        return Ok(1);
    }
    let mut x = a;
    let mut k = 1u64;
    while x != 1 && x != r - 1 {
        x = mul_mod(x, a, r);
        k += 1;
    }
    Ok(k)
}

/// Residues of odd squares modulo 32, computed by enumeration: {1, 9, 17, 25}.
pub fn odd_square_classes_mod32() -> BTreeSet<u64> {
    square_unit_classes_mod_2k(5)
}

/// Residues of odd squares modulo `2^k`, by enumeration.
pub fn square_unit_classes_mod_2k(k: u32) -> BTreeSet<u64> {
    let m = 1u64 << k;
    (1..m).step_by(2).map(|x| (x * x) % m).collect()
}

/// Legendre symbol `(a/p)` for an odd prime `p`: 1, -1, or 0.
pub fn legendre_symbol(a: i64, p: u64) -> i64 {
    debug_assert!(p > 2 && is_prime(p));
    let a = a.rem_euclid(p as i64) as u64;
    if a == 0 {
        return 0;
    }
    let e = pow_mod(a, (p - 1) / 2, p);
    if e == 1 {
        1
    } else {
        -1
    }
}

/// Exact integer `n`-th root: `Some(c)` with `c^n == x`, else `None`.
/// For odd `n` negative inputs are allowed.
pub fn exact_nth_root(x: &BigInt, n: u32) -> Option<BigInt> {
    assert!(n >= 1);
    if x.is_negative() && n.is_multiple_of(2) {
        return None;
    }
    let mag = x.abs().nth_root(n);
    let cand = if x.is_negative() { -mag } else { mag };
    if num_traits::pow(cand.clone(), n as usize) == *x {
        Some(cand)
    } else {
        None
    }
}

/// Exact rational square root, if the argument is a square in Q.
pub fn exact_sqrt_rational(x: &BigRational) -> Option<BigRational> {
    if x.is_negative() {
        return None;
    }
    let n = exact_nth_root(x.numer(), 2)?;
    let d = exact_nth_root(x.denom(), 2)?;
    Some(BigRational::new(n, d))
}
