//! Residue rings O/P^n at unramified primes, with exact arithmetic and a
//! complete squareness decision.

use num_bigint::{BigInt, BigUint};
use num_integer::Integer;
use num_traits::Zero;

use super::splitting::PrimeData;
use super::{FieldElement, NumberField};
use crate::arith::{hensel_lift_factor, ModPolynomial};
use crate::Error;

/// Ring size threshold below which squareness is decided by exhaustive
/// enumeration; larger rings (above 2) go through the lifting criterion.
const EXHAUSTIVE_BITS: u64 = 20;

/// The finite ring O/P^n at an unramified prime P above q: represented as
/// Z\[x\]/(q^n, g) for the Hensel-lifted monic local factor g of degree f.
/// For an inert prime g is the defining polynomial itself; over Q it is x.
#[derive(Clone, Debug)]
pub struct ResidueRing {
    pub q: u64,
    pub n: u32,
    /// q^n.
    pub modulus: BigInt,
    /// Monic polynomial modulus of degree f, coefficients mod q^n.
    pub poly: ModPolynomial,
}

impl ResidueRing {
    /// Build O/P^n. Only unramified primes (with a local factor) are
    /// supported; ramified quotients are refused rather than misrepresented.
    pub fn new(prime: &PrimeData, n: u32, field: &NumberField) -> Result<Self, Error> {
        assert!(n >= 1);
        if prime.e != 1 {
            return Err(Error::UnsupportedPrime(format!(
                "residue rings at ramified primes (q = {}) are not supported",
                prime.q
            )));
        }
        let base = prime.local_factor.as_ref().ok_or_else(|| {
            Error::UnsupportedPrime(format!("no local factor above q = {}", prime.q))
        })?;
        let q = BigInt::from(prime.q);
        let modulus = num_traits::pow(q.clone(), n as usize);
        let poly = if n <= prime.precision {
            base.reduce_modulus(&modulus)
        } else {
            hensel_lift_factor(&field.desc().min_poly, &base.reduce_modulus(&q), n)?
        };
        Ok(ResidueRing {
            q: prime.q,
            n,
            modulus,
            poly,
        })
    }

    /// Residue degree f.
    pub fn residue_degree(&self) -> usize {
        self.poly.degree().unwrap()
    }

    /// Number of elements, q^(n·f).
    pub fn size(&self) -> BigUint {
        BigUint::from(self.q).pow(self.n * self.residue_degree() as u32)
    }

    fn enumerable(&self) -> bool {
        self.size() <= BigUint::from(1u32) << EXHAUSTIVE_BITS
    }

    pub fn zero(&self) -> ModPolynomial {
        ModPolynomial::zero(self.modulus.clone())
    }

    pub fn one(&self) -> ModPolynomial {
        ModPolynomial::one(self.modulus.clone())
    }

    /// Image of a field element; the coordinate denominator must be a unit
    /// at q.
    pub fn from_field_element(
        &self,
        x: &FieldElement,
        _field: &NumberField,
    ) -> Result<ModPolynomial, Error> {
        let (ints, den) = x.integral_scaled();
        let inv = crate::arith::mod_inverse(&den, &self.modulus).ok_or(Error::NotAUnit)?;
        let y = ModPolynomial::new(ints, self.modulus.clone());
        let y = y.scale(&inv);
        Ok(self.reduce(&y))
    }

    pub fn from_bigint(&self, c: &BigInt) -> ModPolynomial {
        self.reduce(&ModPolynomial::constant(c.clone(), self.modulus.clone()))
    }

    pub fn reduce(&self, x: &ModPolynomial) -> ModPolynomial {
        x.divrem(&self.poly).expect("monic modulus").1
    }

    pub fn mul(&self, a: &ModPolynomial, b: &ModPolynomial) -> ModPolynomial {
        self.reduce(&a.mul(b))
    }

    pub fn add(&self, a: &ModPolynomial, b: &ModPolynomial) -> ModPolynomial {
        a.add(b)
    }

    pub fn sub(&self, a: &ModPolynomial, b: &ModPolynomial) -> ModPolynomial {
        a.sub(b)
    }

    pub fn sqr(&self, a: &ModPolynomial) -> ModPolynomial {
        self.mul(a, a)
    }

    /// Units are exactly the elements nonzero modulo P (the ring is local).
    pub fn is_unit(&self, a: &ModPolynomial) -> bool {
        let q = BigInt::from(self.q);
        a.coeffs().iter().any(|c| !c.mod_floor(&q).is_zero())
    }

    /// Iterate every element, coefficient odometer in ascending order.
    pub fn elements(&self) -> ResidueIter<'_> {
        ResidueIter {
            ring: self,
            state: vec![BigInt::zero(); self.residue_degree()],
            done: false,
        }
    }
}

pub struct ResidueIter<'a> {
    ring: &'a ResidueRing,
    state: Vec<BigInt>,
    done: bool,
}

impl Iterator for ResidueIter<'_> {
    type Item = ModPolynomial;

    fn next(&mut self) -> Option<Self::Item> {
        if self.done {
            return None;
        }
        let out = ModPolynomial::new(self.state.clone(), self.ring.modulus.clone());
        // increment the odometer
        let mut i = 0;
        loop {
            if i == self.state.len() {
                self.done = true;
                break;
            }
            self.state[i] += 1;
            if self.state[i] < self.ring.modulus {
                break;
            }
            self.state[i] = BigInt::zero();
            i += 1;
        }
        Some(out)
    }
}

/// Decide whether `u` is a square in the ring, with a witness ν (ν² = u) on
/// success.
///
/// Strategy: exhaustive enumeration for rings of at most 2^20 elements;
/// above that, for q = 2, the decision reduces to squareness modulo P³
/// (squares of units contain 1 + P³ in the unramified 2-adic completion)
/// followed by a Hensel-style lift of the witness. Large odd-characteristic
/// rings and large non-unit inputs report `Undecided`.
pub fn is_square_in_residue_ring(
    u: &ModPolynomial,
    ring: &ResidueRing,
) -> Result<(bool, Option<ModPolynomial>), Error> {
    let u = ring.reduce(u);
    if ring.enumerable() {
        for nu in ring.elements() {
            if ring.sqr(&nu) == u {
                return Ok((true, Some(nu)));
            }
        }
        return Ok((false, None));
    }
    if !ring.is_unit(&u) {
        return Err(Error::Undecided(
            "non-unit squareness in a large ring".into(),
        ));
    }
    if ring.q != 2 {
        return Err(Error::Undecided(
            "large odd-characteristic residue ring".into(),
        ));
    }
    // q = 2: decide modulo P^min(n,3), then lift the witness.
    let base_n = ring.n.min(3);
    if base_n as u64 * ring.residue_degree() as u64 > EXHAUSTIVE_BITS {
        return Err(Error::Undecided("residue degree too large to seed".into()));
    }
    let base_modulus = BigInt::from(2).pow(base_n);
    let base_ring = ResidueRing {
        q: 2,
        n: base_n,
        modulus: base_modulus.clone(),
        poly: ring.poly.reduce_modulus(&base_modulus),
    };
    let u_base = base_ring.reduce(&u.reduce_modulus(&base_modulus));
    let mut witness = None;
    for nu in base_ring.elements() {
        if base_ring.sqr(&nu) == u_base {
            witness = Some(nu);
            break;
        }
    }
    let seed = match witness {
        Some(w) => w,
        None => return Ok((false, None)),
    };
    // lift: given ν² ≡ u mod P^k (k ≥ 3), the correction δ = c 2^(k-1) with
    // c ≡ (u - ν²)/2^k · ν^{-1} mod P gives ν + δ with (ν+δ)² ≡ u mod P^(k+1)
    let two = BigInt::from(2);
    let f2 = ring.poly.reduce_modulus(&two);
    let mut nu_full = ModPolynomial::new(seed.coeffs().to_vec(), ring.modulus.clone());
    for k in base_n..ring.n {
        let diff = ring.sub(&u, &ring.sqr(&nu_full));
        // all coefficients of diff are divisible by 2^k
        let shift = num_traits::pow(two.clone(), k as usize);
        let w_coeffs: Vec<BigInt> = diff
            .coeffs()
            .iter()
            .map(|c| {
                let (quot, rem) = c.div_rem(&shift);
                debug_assert!(rem.is_zero(), "lift invariant violated");
                quot
            })
            .collect();
        let w = ModPolynomial::new(w_coeffs, two.clone());
        let nu_mod2 = nu_full.reduce_modulus(&two);
        let (g, s, _) = nu_mod2.xgcd(&f2)?;
        debug_assert!(g.is_one());
        let c = s.mul(&w).divrem(&f2)?.1;
        // δ = c · 2^(k-1)
        let delta = ModPolynomial::new(
            c.coeffs()
                .iter()
                .map(|x| x * num_traits::pow(two.clone(), (k - 1) as usize))
                .collect(),
            ring.modulus.clone(),
        );
        nu_full = ring.add(&nu_full, &delta);
    }
    let nu = ring.reduce(&nu_full);
    if ring.sqr(&nu) == u {
        Ok((true, Some(nu)))
    } else {
        Err(Error::Undecided("witness lift failed".into()))
    }
}
