//! Prime splitting in the supported fields.

use num_bigint::BigInt;
use serde::{Deserialize, Serialize};

use super::{FieldKind, NumberFieldDesc};
use crate::arith::{
    factor_mod_p, hensel_lift_factor, is_prime, legendre_symbol, order_mod_pm1, ModPolynomial,
};
use crate::Error;

/// Default q-adic precision of the cached local factor.
pub(crate) const DEFAULT_PRECISION: u32 = 16;

/// One prime ideal above a rational prime `q`: the splitting data (e, f, g)
/// plus, at unramified primes, a Hensel-lifted local factor of the defining
/// polynomial that drives element valuations.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct PrimeData {
    pub q: u64,
    /// Ramification index.
    pub e: u32,
    /// Residue degree.
    pub f: u32,
    /// Number of primes above q in the field.
    pub g: u32,
    /// Monic local factor modulo `q^precision`, present when e = 1 and the
    /// defining polynomial is separable mod q.
    pub local_factor: Option<ModPolynomial>,
    pub precision: u32,
}

impl PrimeData {
    /// Valuations can be routed through v_q(Norm(x)) exactly when this prime
    /// is alone above q with trivial residue degree.
    pub fn norm_route(&self) -> bool {
        self.f == 1 && self.g == 1 && self.e > 1
    }

    /// Residue field size q^f as a BigInt.
    pub fn residue_size(&self) -> BigInt {
        num_traits::pow(BigInt::from(self.q), self.f as usize)
    }
}

/// Splitting data of the rational prime q in the quadratic field Q(√t),
/// by discriminant and quadratic-residue rules. Returns (e, f, g).
fn quadratic_efg(q: u64, t: u64) -> (u32, u32, u32) {
    let disc_is_t = t % 4 == 1;
    if q == 2 {
        if !disc_is_t {
            (2, 1, 1)
        } else if t % 8 == 1 {
            (1, 1, 2)
        } else {
            (1, 2, 1)
        }
    } else if t.is_multiple_of(q) {
        (2, 1, 1)
    } else {
        match legendre_symbol(t as i64, q) {
            1 => (1, 1, 2),
            _ => (1, 2, 1),
        }
    }
}

/// Splitting data of q in the real cyclotomic field Q(ζ_r)^+.
fn cyclotomic_efg(q: u64, r: u64) -> Result<(u32, u32, u32), Error> {
    let degree = ((r - 1) / 2) as u32;
    if q == r {
        return Ok((degree, 1, 1));
    }
    let f = order_mod_pm1(q, r)? as u32;
    Ok((1, f, degree / f))
}

/// Compute (e, f, g) for `q` in `F` and pick one representative prime. The
/// local factor is attached whenever the defining polynomial is separable
/// mod q, choosing the lexicographically least irreducible factor.
pub fn splitting_type(q: u64, desc: &NumberFieldDesc) -> Result<PrimeData, Error> {
    let mut all = primes_above_impl(q, desc, false)?;
    Ok(all.swap_remove(0))
}

/// All primes above q, one `PrimeData` per prime ideal. Requires local
/// factors (hence separability of the defining polynomial mod q) unless
/// there is a single prime above q.
pub fn primes_above(q: u64, desc: &NumberFieldDesc) -> Result<Vec<PrimeData>, Error> {
    primes_above_impl(q, desc, true)
}

fn primes_above_impl(
    q: u64,
    desc: &NumberFieldDesc,
    need_all: bool,
) -> Result<Vec<PrimeData>, Error> {
    if !is_prime(q) {
        return Err(Error::InvalidInput(format!("{q} is not prime")));
    }
    let degree = desc.degree as u32;
    let (e, f, g) = match desc.kind {
        FieldKind::Rationals => (1, 1, 1),
        FieldKind::RealQuadratic { t } => quadratic_efg(q, t),
        FieldKind::RealCyclotomic { r } => cyclotomic_efg(q, r)?,
        FieldKind::Composite { t, r } => {
            let (e1, f1, _) = quadratic_efg(q, t);
            let (e2, f2, _) = cyclotomic_efg(q, r)?;
            let e = e1 * e2;
            let f = num_integer::lcm(f1, f2);
            if !degree.is_multiple_of(e * f) {
                return Err(Error::UnsupportedPrime(format!(
                    "inconsistent composite splitting at q = {q}"
                )));
            }
            (e, f, degree / (e * f))
        }
    };
    debug_assert_eq!(e * f * g, degree, "e*f*g must equal the degree at q = {q}");

    // Local factors through factorization of the defining polynomial mod q.
    let factors = separable_factors(q, desc)?;
    match factors {
        Some(mut fs) => {
            debug_assert_eq!(e, 1, "separable defining polynomial at a ramified prime");
            debug_assert_eq!(fs.len(), g as usize);
            if !need_all {
                // the representative prime is the lexicographically least factor
                fs.truncate(1);
            }
            let mut out = Vec::with_capacity(fs.len());
            for f0 in fs {
                debug_assert_eq!(f0.degree(), Some(f as usize));
                let lifted = hensel_lift_factor(&desc.min_poly, &f0, DEFAULT_PRECISION)?;
                out.push(PrimeData {
                    q,
                    e,
                    f,
                    g,
                    local_factor: Some(lifted),
                    precision: DEFAULT_PRECISION,
                });
            }
            Ok(out)
        }
        None => {
            if g == 1 {
                Ok(vec![PrimeData {
                    q,
                    e,
                    f,
                    g,
                    local_factor: None,
                    precision: 0,
                }])
            } else if need_all {
                Err(Error::UnsupportedPrime(format!(
                    "cannot enumerate the {g} primes above {q}: defining polynomial \
                     is not separable mod {q}"
                )))
            } else {
                Ok(vec![PrimeData {
                    q,
                    e,
                    f,
                    g,
                    local_factor: None,
                    precision: 0,
                }])
            }
        }
    }
}

/// Irreducible factors of the defining polynomial mod q when it is
/// separable there (so that the order Z[θ] is q-maximal and the factors
/// biject with the primes above q); `None` otherwise.
fn separable_factors(
    q: u64,
    desc: &NumberFieldDesc,
) -> Result<Option<Vec<ModPolynomial>>, Error> {
    let fac = factor_mod_p(&desc.min_poly, q)?;
    if fac.iter().any(|(_, m)| *m > 1) {
        return Ok(None);
    }
    Ok(Some(fac.into_iter().map(|(g, _)| g).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numfield::NumberFieldDesc;

    #[test]
    fn cyclotomic_splitting() {
        let f7 = NumberFieldDesc::real_cyclotomic(7).unwrap();
        // 2 is inert: order of 2 in (Z/7)*/± is 3
        let p2 = splitting_type(2, &f7).unwrap();
        assert_eq!((p2.e, p2.f, p2.g), (1, 3, 1));
        // 5 is inert as well
        let p5 = splitting_type(5, &f7).unwrap();
        assert_eq!((p5.e, p5.f, p5.g), (1, 3, 1));
        // 7 is totally ramified with uniformizer θ - 2
        let p7 = splitting_type(7, &f7).unwrap();
        assert_eq!((p7.e, p7.f, p7.g), (3, 1, 1));
        assert!(p7.norm_route());

        // 11 splits completely in Q(ζ_5)^+ (x² + x - 1 splits mod 11)
        let f5 = NumberFieldDesc::real_cyclotomic(5).unwrap();
        let p11 = primes_above(11, &f5).unwrap();
        assert_eq!(p11.len(), 2);
        assert!(p11.iter().all(|p| (p.e, p.f, p.g) == (1, 1, 2)));
    }

    #[test]
    fn quadratic_splitting() {
        let k2 = NumberFieldDesc::real_quadratic(2).unwrap();
        // 2 ramifies in Q(√2)
        let p2 = splitting_type(2, &k2).unwrap();
        assert_eq!((p2.e, p2.f, p2.g), (2, 1, 1));
        // 7 splits: 2 is a square mod 7
        let p7 = splitting_type(7, &k2).unwrap();
        assert_eq!((p7.e, p7.f, p7.g), (1, 1, 2));
        // 5 is inert
        let p5 = splitting_type(5, &k2).unwrap();
        assert_eq!((p5.e, p5.f, p5.g), (1, 2, 1));

        // q = 2 with t = 5: inert (5 ≡ 5 mod 8)
        let k5 = NumberFieldDesc::real_quadratic(5).unwrap();
        let p2 = splitting_type(2, &k5).unwrap();
        assert_eq!((p2.e, p2.f, p2.g), (1, 2, 1));
        // x^2 - 5 mod 2 is not separable, so no local factor there
        assert!(p2.local_factor.is_none());
    }

    #[test]
    fn composite_unique_prime_above_2() {
        // t = 2, r ∈ {5, 11, 13}: unique prime above 2 by the lcm rule
        for (t, r, ef) in [(2u64, 5u64, (2, 2)), (2, 11, (2, 5)), (2, 13, (2, 6))] {
            let k = NumberFieldDesc::composite(t, r).unwrap();
            let p = splitting_type(2, &k).unwrap();
            assert_eq!((p.e, p.f), ef, "t={t} r={r}");
            assert_eq!(p.g, 1, "t={t} r={r}");
        }
        // t = 5, r = 7: 2 inert in both layers, f = lcm(2,3) = 6
        let k = NumberFieldDesc::composite(5, 7).unwrap();
        let p = splitting_type(2, &k).unwrap();
        assert_eq!((p.e, p.f, p.g), (1, 6, 1));
    }

    #[test]
    fn composite_split_matches_factorization() {
        // an unramified split prime in the composite: factors of the defining
        // polynomial must agree in degree and count with the lcm rule
        let k = NumberFieldDesc::composite(2, 5).unwrap();
        for q in [3u64, 7, 11, 13, 17, 19, 23] {
            let p = splitting_type(q, &k).unwrap();
            assert_eq!(p.e * p.f * p.g, 4, "q = {q}");
            if p.e == 1 {
                if let Ok(all) = primes_above(q, &k) {
                    assert_eq!(all.len(), p.g as usize, "q = {q}");
                    for pd in &all {
                        let lf = pd.local_factor.as_ref().unwrap();
                        assert_eq!(lf.degree(), Some(p.f as usize), "q = {q}");
                    }
                }
            }
        }
    }

    #[test]
    fn efg_identity_across_fields() {
        let fields = [
            NumberFieldDesc::rationals(),
            NumberFieldDesc::real_quadratic(2).unwrap(),
            NumberFieldDesc::real_quadratic(5).unwrap(),
            NumberFieldDesc::real_cyclotomic(5).unwrap(),
            NumberFieldDesc::real_cyclotomic(7).unwrap(),
            NumberFieldDesc::real_cyclotomic(11).unwrap(),
            NumberFieldDesc::composite(2, 5).unwrap(),
            NumberFieldDesc::composite(5, 7).unwrap(),
        ];
        for desc in &fields {
            for q in crate::arith::primes_up_to(50) {
                let p = splitting_type(q, desc).unwrap();
                assert_eq!(
                    (p.e * p.f * p.g) as usize,
                    desc.degree,
                    "q = {q}, field = {:?}",
                    desc.kind
                );
            }
        }
    }

    #[test]
    fn rejects_non_prime() {
        let f = NumberFieldDesc::real_cyclotomic(7).unwrap();
        assert!(splitting_type(6, &f).is_err());
    }
}
