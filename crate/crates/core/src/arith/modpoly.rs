//! Polynomials over Z/m, factorization over prime fields, and Hensel lifting
//! of simple factors to prime-power moduli.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::{One, ToPrimitive, Zero};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};
use std::fmt;

use super::poly::IntPolynomial;
use crate::Error;

/// Polynomial with coefficients reduced into `[0, m)` for a modulus `m`
/// (prime or prime power), ascending degree order.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct ModPolynomial {
    #[serde(with = "crate::serde_big::int_vec")]
    coeffs: Vec<BigInt>,
    #[serde(with = "crate::serde_big::int")]
    modulus: BigInt,
}

impl ModPolynomial {
    pub fn new(coeffs: Vec<BigInt>, modulus: BigInt) -> Self {
        assert!(modulus > BigInt::one());
        let mut coeffs: Vec<BigInt> = coeffs
            .into_iter()
            .map(|c| c.mod_floor(&modulus))
            .collect();
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        ModPolynomial { coeffs, modulus }
    }

    pub fn from_int_poly(f: &IntPolynomial, modulus: BigInt) -> Self {
        Self::new(f.coeffs().to_vec(), modulus)
    }

    pub fn zero(modulus: BigInt) -> Self {
        Self::new(vec![], modulus)
    }

    pub fn one(modulus: BigInt) -> Self {
        Self::new(vec![BigInt::one()], modulus)
    }

    pub fn constant(c: BigInt, modulus: BigInt) -> Self {
        Self::new(vec![c], modulus)
    }

    pub fn x(modulus: BigInt) -> Self {
        Self::new(vec![BigInt::zero(), BigInt::one()], modulus)
    }

    pub fn modulus(&self) -> &BigInt {
        &self.modulus
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    pub fn is_monic(&self) -> bool {
        self.coeffs.last().is_some_and(|c| c.is_one())
    }

    fn same_modulus(&self, rhs: &Self) {
        assert_eq!(self.modulus, rhs.modulus, "modulus mismatch");
    }

    pub fn add(&self, rhs: &Self) -> Self {
        self.same_modulus(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect(),
            self.modulus.clone(),
        )
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        self.same_modulus(rhs);
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new(
            (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect(),
            self.modulus.clone(),
        )
    }

    pub fn neg(&self) -> Self {
        Self::new(
            self.coeffs.iter().map(|c| -c).collect(),
            self.modulus.clone(),
        )
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        self.same_modulus(rhs);
        if self.is_zero() || rhs.is_zero() {
            return Self::zero(self.modulus.clone());
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out, self.modulus.clone())
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(
            self.coeffs.iter().map(|a| a * c).collect(),
            self.modulus.clone(),
        )
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = (acc * x + c).mod_floor(&self.modulus);
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero(self.modulus.clone());
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
            self.modulus.clone(),
        )
    }

    /// Multiply by the inverse of the leading coefficient; errors when the
    /// leading coefficient is not a unit mod m.
    pub fn make_monic(&self) -> Result<Self, Error> {
        let lc = self.coeffs.last().ok_or(Error::VanishingPolynomial)?;
        let inv = mod_inverse(lc, &self.modulus).ok_or(Error::NotAUnit)?;
        Ok(self.scale(&inv))
    }

    /// Division with remainder by a divisor whose leading coefficient is a
    /// unit mod m (in practice the divisor is monic).
    pub fn divrem(&self, rhs: &Self) -> Result<(Self, Self), Error> {
        self.same_modulus(rhs);
        let db = rhs.degree().ok_or(Error::VanishingPolynomial)?;
        let lcb = rhs.coeffs.last().unwrap();
        let inv = mod_inverse(lcb, &self.modulus).ok_or(Error::NotAUnit)?;
        let mut r = self.clone();
        let mut q = vec![BigInt::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = (r.coeffs.last().unwrap() * &inv).mod_floor(&self.modulus);
            q[dr - db] = c.clone();
            let mut t = vec![BigInt::zero(); dr - db + 1];
            t[dr - db] = c;
            let t = Self::new(t, self.modulus.clone());
            r = r.sub(&t.mul(rhs));
        }
        Ok((Self::new(q, self.modulus.clone()), r))
    }

    /// `self^e mod (m, modpoly)` by square-and-multiply.
    pub fn pow_mod(&self, e: &BigUint, modpoly: &Self) -> Result<Self, Error> {
        let mut base = self.divrem(modpoly)?.1;
        let mut acc = Self::one(self.modulus.clone());
        let bits = e.bits();
        for i in 0..bits {
            if e.bit(i) {
                acc = acc.mul(&base).divrem(modpoly)?.1;
            }
            if i + 1 < bits {
                base = base.mul(&base).divrem(modpoly)?.1;
            }
        }
        Ok(acc)
    }

    /// Monic gcd; requires a prime modulus.
    pub fn gcd(&self, rhs: &Self) -> Result<Self, Error> {
        let (mut a, mut b) = (self.clone(), rhs.clone());
        while !b.is_zero() {
            let r = a.divrem(&b)?.1;
            a = b;
            b = r;
        }
        if a.is_zero() {
            Ok(a)
        } else {
            a.make_monic()
        }
    }

    /// Extended gcd over a prime modulus: (g, s, t) with s*self + t*rhs = g,
    /// g monic.
    pub fn xgcd(&self, rhs: &Self) -> Result<(Self, Self, Self), Error> {
        let m = self.modulus.clone();
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::one(m.clone()), Self::zero(m.clone()));
        let (mut t0, mut t1) = (Self::zero(m.clone()), Self::one(m));
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1)?;
            let ns = s0.sub(&q.mul(&s1));
            let nt = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        if r0.is_zero() {
            return Ok((r0, s0, t0));
        }
        let lc = r0.coeffs.last().unwrap();
        let inv = mod_inverse(lc, &r0.modulus).ok_or(Error::NotAUnit)?;
        Ok((r0.scale(&inv), s0.scale(&inv), t0.scale(&inv)))
    }

    /// Reinterpret the (canonical, floor-reduced) coefficients as integers.
    pub fn to_int_poly(&self) -> IntPolynomial {
        IntPolynomial::new(self.coeffs.clone())
    }

    /// Reinterpret with coefficients in the symmetric range `(-m/2, m/2]`.
    pub fn to_int_poly_symmetric(&self) -> IntPolynomial {
        let half = &self.modulus / 2;
        IntPolynomial::new(
            self.coeffs
                .iter()
                .map(|c| {
                    if c > &half {
                        c - &self.modulus
                    } else {
                        c.clone()
                    }
                })
                .collect(),
        )
    }

    /// Rebase into a divisor of the current modulus.
    pub fn reduce_modulus(&self, new_modulus: &BigInt) -> Self {
        debug_assert!((&self.modulus % new_modulus).is_zero());
        Self::new(self.coeffs.clone(), new_modulus.clone())
    }
}

impl fmt::Debug for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.to_int_poly(), self.modulus)
    }
}

impl fmt::Display for ModPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.to_int_poly())
    }
}

/// Inverse of `a` mod `m`, when it exists.
pub fn mod_inverse(a: &BigInt, m: &BigInt) -> Option<BigInt> {
    let e = a.extended_gcd(m);
    if e.gcd.is_one() {
        Some(e.x.mod_floor(m))
    } else {
        None
    }
}

fn lex_key(p: &ModPolynomial) -> (usize, Vec<BigInt>) {
    (p.degree().map_or(0, |d| d), p.coeffs().to_vec())
}

/// Complete factorization of `f` over the prime field F_p: returns monic
/// irreducible factors with multiplicities, deterministically ordered by
/// (degree, coefficient vector). The product of the factors equals `f` mod p
/// up to the unit `lc(f)`.
///
/// Errors with `VanishingPolynomial` when `f ≡ 0 (mod p)`.
pub fn factor_mod_p(f: &IntPolynomial, p: u64) -> Result<Vec<(ModPolynomial, u32)>, Error> {
    assert!(super::is_prime(p), "factor_mod_p requires a prime modulus");
    let m = BigInt::from(p);
    let fp = ModPolynomial::from_int_poly(f, m);
    if fp.is_zero() {
        return Err(Error::VanishingPolynomial);
    }
    if fp.degree() == Some(0) {
        return Ok(vec![]);
    }
    let monic = fp.make_monic()?;
    let mut out = Vec::new();
    for (g, mult) in squarefree_decomposition(&monic, p)? {
        for h in factor_squarefree(&g, p)? {
            out.push((h, mult));
        }
    }
    out.sort_by(|a, b| lex_key(&a.0).cmp(&lex_key(&b.0)).then(a.1.cmp(&b.1)));
    Ok(out)
}

/// Char-p squarefree decomposition of a monic polynomial.
fn squarefree_decomposition(
    f: &ModPolynomial,
    p: u64,
) -> Result<Vec<(ModPolynomial, u32)>, Error> {
    let mut out = Vec::new();
    sqf_rec(f, 1, p, &mut out)?;
    Ok(out)
}

fn sqf_rec(
    f: &ModPolynomial,
    mult: u32,
    p: u64,
    out: &mut Vec<(ModPolynomial, u32)>,
) -> Result<(), Error> {
    if f.degree().is_none_or(|d| d == 0) {
        return Ok(());
    }
    let fd = f.derivative();
    if fd.is_zero() {
        // f = h(x^p); in F_p the coefficients are fixed by Frobenius
        return sqf_rec(&pth_root(f, p), mult * p as u32, p, out);
    }
    let mut c = f.gcd(&fd)?;
    let mut w = f.divrem(&c)?.0;
    let mut i = 1u32;
    while !w.is_one() {
        let y = w.gcd(&c)?;
        let z = w.divrem(&y)?.0;
        if z.degree().is_some_and(|d| d > 0) {
            out.push((z, mult * i));
        }
        i += 1;
        w = y;
        c = c.divrem(&w)?.0;
    }
    if !c.is_one() {
        sqf_rec(&pth_root(&c, p), mult * p as u32, p, out)?;
    }
    Ok(())
}

/// p-th root of `h(x^p)` over F_p (Frobenius fixes the coefficients).
fn pth_root(f: &ModPolynomial, p: u64) -> ModPolynomial {
    let p = p as usize;
    let coeffs: Vec<BigInt> = f
        .coeffs()
        .iter()
        .step_by(p)
        .cloned()
        .collect();
    ModPolynomial::new(coeffs, f.modulus().clone())
}

/// Distinct-degree then equal-degree factorization of a monic squarefree
/// polynomial over F_p.
fn factor_squarefree(f: &ModPolynomial, p: u64) -> Result<Vec<ModPolynomial>, Error> {
    let mut out = Vec::new();
    let mut rest = f.clone();
    let x = ModPolynomial::x(f.modulus().clone());
    let mut frob = x.clone(); // x^(p^d) mod rest
    let pe = BigUint::from(p);
    let mut d = 0usize;
    while let Some(deg) = rest.degree() {
        if deg == 0 {
            break;
        }
        d += 1;
        if 2 * d > deg {
            // what is left is irreducible
            out.push(rest.clone());
            break;
        }
        frob = frob.pow_mod(&pe, &rest)?;
        let split = frob.sub(&x).gcd(&rest)?;
        if split.degree().is_some_and(|dd| dd > 0) {
            equal_degree_split(&split, d, p, &mut out)?;
            rest = rest.divrem(&split)?.0;
            frob = frob.divrem(&rest)?.1;
        }
    }
    Ok(out)
}

/// Cantor–Zassenhaus equal-degree splitting (trace construction for p = 2).
/// Deterministic across runs: the generator is seeded from (p, deg f).
fn equal_degree_split(
    f: &ModPolynomial,
    d: usize,
    p: u64,
    out: &mut Vec<ModPolynomial>,
) -> Result<(), Error> {
    let deg = f.degree().unwrap();
    if deg == d {
        out.push(f.make_monic()?);
        return Ok(());
    }
    let mut rng = ChaCha8Rng::seed_from_u64(0xF5EE_D000 ^ p ^ ((deg as u64) << 32));
    loop {
        let t = random_poly(&mut rng, deg, f.modulus());
        let g = if p == 2 {
            // trace map: T + T^2 + T^4 + ... + T^(2^(d-1))
            let mut acc = t.clone();
            let mut cur = t.clone();
            for _ in 1..d {
                cur = cur.pow_mod(&BigUint::from(2u32), f)?;
                acc = acc.add(&cur);
            }
            acc.gcd(f)?
        } else {
            // T^((p^d - 1)/2) - 1
            let e = (BigUint::from(p).pow(d as u32) - BigUint::one()) / BigUint::from(2u32);
            let tp = t.pow_mod(&e, f)?;
            tp.sub(&ModPolynomial::one(f.modulus().clone())).gcd(f)?
        };
        if let Some(dg) = g.degree() {
            if dg > 0 && dg < deg {
                equal_degree_split(&g, d, p, out)?;
                equal_degree_split(&f.divrem(&g)?.0, d, p, out)?;
                return Ok(());
            }
        }
    }
}

fn random_poly(rng: &mut ChaCha8Rng, below_degree: usize, m: &BigInt) -> ModPolynomial {
    let mu = m.to_u64().expect("prime modulus fits u64");
    let coeffs = (0..below_degree)
        .map(|_| BigInt::from(rng.gen_range(0..mu)))
        .collect();
    ModPolynomial::new(coeffs, m.clone())
}

/// Hensel-lift a simple factor `g0` of `f` mod p to a monic factor of `f`
/// mod `p^n`. The returned polynomial is congruent to `g0` mod p and divides
/// `f` mod `p^n` (after `f` is normalized monic; p must not divide `lc(f)`).
///
/// Errors with `NonSeparableLift` when `g0` is not coprime to its cofactor.
pub fn hensel_lift_factor(
    f: &IntPolynomial,
    g0: &ModPolynomial,
    n: u32,
) -> Result<ModPolynomial, Error> {
    assert!(n >= 1);
    let p = g0.modulus().clone();
    let fp = ModPolynomial::from_int_poly(f, p.clone());
    if fp.is_zero() {
        return Err(Error::VanishingPolynomial);
    }
    if fp.degree() != f.degree() {
        // leading coefficient vanished mod p; monic normalization impossible
        return Err(Error::NotAUnit);
    }
    let target = num_traits::pow(p.clone(), n as usize);
    let fp = fp.make_monic()?;
    let g = g0.make_monic()?;
    let (q, r) = fp.divrem(&g)?;
    if !r.is_zero() {
        return Err(Error::NonSeparableLift);
    }
    let h = q;
    let (gcd, s, t) = g.xgcd(&h)?;
    if !gcd.is_one() {
        return Err(Error::NonSeparableLift);
    }
    if h.degree() == Some(0) {
        // g0 is the whole of f; the lift is f itself, normalized monic
        let fm = ModPolynomial::from_int_poly(f, target.clone());
        return fm.make_monic();
    }

    let mut modulus = p.clone();
    let mut g = g;
    let mut h = h;
    let mut s = s;
    let mut t = t;
    while modulus < target {
        let m2 = &modulus * &modulus;
        let rebase = |x: &ModPolynomial| ModPolynomial::new(x.coeffs().to_vec(), m2.clone());
        let fm = ModPolynomial::from_int_poly(f, m2.clone()).make_monic()?;
        let (g2, h2, s2, t2) = (rebase(&g), rebase(&h), rebase(&s), rebase(&t));

        // factor update: e = f - g h; g += (t e mod g); h += s e + q h
        let e = fm.sub(&g2.mul(&h2));
        let (q, r) = t2.mul(&e).divrem(&g2)?;
        let g_new = g2.add(&r);
        let h_new = h2.add(&s2.mul(&e)).add(&q.mul(&h2));

        // Bezout update: b = s g + t h - 1; t -= (t b mod g); s -= s b + q2 h
        let b = s2
            .mul(&g_new)
            .add(&t2.mul(&h_new))
            .sub(&ModPolynomial::one(m2.clone()));
        let (q2, r2) = t2.mul(&b).divrem(&g_new)?;
        let s_new = s2.sub(&s2.mul(&b)).sub(&q2.mul(&h_new));
        let t_new = t2.sub(&r2);

        g = g_new;
        h = h_new;
        s = s_new;
        t = t_new;
        modulus = m2;
    }
    Ok(g.reduce_modulus(&target))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::arith::is_prime;
    use rand::Rng;

    fn poly(coeffs: &[i64], m: u64) -> ModPolynomial {
        ModPolynomial::new(
            coeffs.iter().map(|&c| BigInt::from(c)).collect(),
            BigInt::from(m),
        )
    }

    fn refold(factors: &[(ModPolynomial, u32)], m: u64) -> ModPolynomial {
        let mut acc = ModPolynomial::one(BigInt::from(m));
        for (g, e) in factors {
            for _ in 0..*e {
                acc = acc.mul(g);
            }
        }
        acc
    }

    #[test]
    fn factor_examples() {
        // x^2 + x - 1 irreducible mod 2 (equals x^2 + x + 1)
        let f = IntPolynomial::from_i64(&[-1, 1, 1]);
        let fac = factor_mod_p(&f, 2).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0, poly(&[1, 1, 1], 2));
        assert_eq!(fac[0].1, 1);

        // x^2 - 1 = (x+1)(x+4) mod 5
        let f = IntPolynomial::from_i64(&[-1, 0, 1]);
        let fac = factor_mod_p(&f, 5).unwrap();
        assert_eq!(fac.len(), 2);
        assert_eq!(fac[0].0, poly(&[1, 1], 5));
        assert_eq!(fac[1].0, poly(&[4, 1], 5));

        // x^3 + x^2 - 2x - 1 is an irreducible cubic mod 2
        let f = IntPolynomial::from_i64(&[-1, -2, 1, 1]);
        let fac = factor_mod_p(&f, 2).unwrap();
        assert_eq!(fac.len(), 1);
        assert_eq!(fac[0].0.degree(), Some(3));
        // oracle: no roots in F_2 and not divisible by the irreducible quadratic
        let g = fac[0].0.clone();
        assert!(!g.eval(&BigInt::from(0)).is_zero());
        assert!(!g.eval(&BigInt::from(1)).is_zero());
        let quad = poly(&[1, 1, 1], 2);
        assert!(!g.divrem(&quad).unwrap().1.is_zero());
    }

    #[test]
    fn factor_vanishing() {
        let f = IntPolynomial::from_i64(&[10, 5]);
        assert!(matches!(
            factor_mod_p(&f, 5),
            Err(Error::VanishingPolynomial)
        ));
    }

    #[test]
    fn factor_with_multiplicity() {
        // (x+1)^2 (x^2+x+1) mod 2 = careful: build over Z then reduce
        let f = IntPolynomial::from_i64(&[1, 2, 1]) // (x+1)^2
            .mul(&IntPolynomial::from_i64(&[1, 1, 1]));
        let fac = factor_mod_p(&f, 2).unwrap();
        assert_eq!(refold(&fac, 2), poly(&[1, 2, 1], 2).mul(&poly(&[1, 1, 1], 2)));
        assert!(fac.iter().any(|(g, e)| g.degree() == Some(1) && *e == 2));
        assert!(fac.iter().any(|(g, e)| g.degree() == Some(2) && *e == 1));
    }

    #[test]
    fn factor_random_refold() {
        // 1000 random polynomials of degree <= 8 over p <= 97: product of
        // factors equals the monic normalization of the input.
        let primes: Vec<u64> = crate::arith::primes_up_to(97);
        let mut rng = rand_chacha::ChaCha8Rng::seed_from_u64(42);
        for trial in 0..1000 {
            let p = primes[trial % primes.len()];
            assert!(is_prime(p));
            let deg = rng.gen_range(1..=8usize);
            let mut coeffs: Vec<i64> = (0..=deg).map(|_| rng.gen_range(-50..=50)).collect();
            if coeffs[deg] == 0 {
                coeffs[deg] = 1;
            }
            let f = IntPolynomial::from_i64(&coeffs);
            match factor_mod_p(&f, p) {
                Ok(fac) => {
                    let lhs = refold(&fac, p);
                    let rhs = ModPolynomial::from_int_poly(&f, BigInt::from(p))
                        .make_monic()
                        .unwrap();
                    assert_eq!(lhs, rhs, "p={p} f={f}");
                    for (g, _) in &fac {
                        assert!(g.is_monic());
                    }
                }
                Err(Error::VanishingPolynomial) => {}
                Err(e) => panic!("unexpected error {e}"),
            }
        }
    }

    #[test]
    fn factor_is_deterministic() {
        let f = IntPolynomial::from_i64(&[3, 1, 4, 1, 5, 9, 2, 6, 1]);
        let a = factor_mod_p(&f, 13).unwrap();
        let b = factor_mod_p(&f, 13).unwrap();
        assert_eq!(a, b);
    }

    #[test]
    fn hensel_exact_factor() {
        // x^2 - 1, factor x+1 mod 3 lifts to x+1 mod 9
        let f = IntPolynomial::from_i64(&[-1, 0, 1]);
        let g0 = poly(&[1, 1], 3);
        let g = hensel_lift_factor(&f, &g0, 2).unwrap();
        assert_eq!(g, poly(&[1, 1], 9));
    }

    #[test]
    fn hensel_newton_root() {
        // x^2 + x - 1 = (x-3)(x-7) mod 11; the root 3 lifts to 36 mod 11^3
        let f = IntPolynomial::from_i64(&[-1, 1, 1]);
        let g0 = poly(&[-3, 1], 11);
        let g = hensel_lift_factor(&f, &g0, 3).unwrap();
        assert_eq!(g.degree(), Some(1));
        // oracle: substitute the root back into f modulo 11^3
        let root = (BigInt::from(1331) - g.coeff(0)).mod_floor(&BigInt::from(1331));
        assert_eq!(root, BigInt::from(36));
        assert!(f.eval(&root).mod_floor(&BigInt::from(1331)).is_zero());
        assert_eq!(root.mod_floor(&BigInt::from(11)), BigInt::from(3));
    }

    #[test]
    fn hensel_sqrt2() {
        // x^2 - 2, x - 3 mod 7 lifts to x - 10 mod 49 (10^2 = 100 = 2 mod 49)
        let f = IntPolynomial::from_i64(&[-2, 0, 1]);
        let g0 = poly(&[-3, 1], 7);
        let g = hensel_lift_factor(&f, &g0, 2).unwrap();
        assert_eq!(g, poly(&[-10, 1], 49));
    }

    #[test]
    fn hensel_rejects_repeated_factor() {
        // x^2 mod 2 has the non-simple factor x
        let f = IntPolynomial::from_i64(&[0, 0, 1]);
        let g0 = poly(&[0, 1], 2);
        assert!(matches!(
            hensel_lift_factor(&f, &g0, 3),
            Err(Error::NonSeparableLift)
        ));
    }

    #[test]
    fn hensel_divides_to_precision() {
        // lifted factors divide f mod p^n across a small corpus
        let corpus = [
            (IntPolynomial::from_i64(&[-1, -2, 1, 1]), 5u64, 6u32),
            (IntPolynomial::from_i64(&[-1, 1, 1]), 11, 5),
            (IntPolynomial::from_i64(&[2, 0, 0, 1]), 7, 4),
            (IntPolynomial::from_i64(&[1, 3, 0, 1, 1]), 3, 7),
        ];
        for (f, p, n) in corpus {
            let fac = factor_mod_p(&f, p).unwrap();
            for (g0, mult) in fac {
                if mult > 1 {
                    continue;
                }
                // only lift when the factor is coprime to its cofactor
                match hensel_lift_factor(&f, &g0, n) {
                    Ok(g) => {
                        let pn = num_traits::pow(BigInt::from(p), n as usize);
                        let fm = ModPolynomial::from_int_poly(&f, pn).make_monic().unwrap();
                        let (_, r) = fm.divrem(&g).unwrap();
                        assert!(r.is_zero(), "f={f} p={p} n={n}");
                        assert_eq!(g.reduce_modulus(&BigInt::from(p)), g0);
                    }
                    Err(Error::NonSeparableLift) => {}
                    Err(e) => panic!("unexpected {e}"),
                }
            }
        }
    }
}
