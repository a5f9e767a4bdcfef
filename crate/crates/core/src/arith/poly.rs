//! Univariate polynomials over Z and over Q, with exact resultants.

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};
use std::fmt;

/// Polynomial over Z, coefficients in ascending degree order.
/// The zero polynomial is the empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(transparent)]
pub struct IntPolynomial {
    #[serde(with = "crate::serde_big::int_vec")]
    coeffs: Vec<BigInt>,
}

impl IntPolynomial {
    pub fn new(mut coeffs: Vec<BigInt>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        IntPolynomial { coeffs }
    }

    pub fn from_i64(coeffs: &[i64]) -> Self {
        Self::new(coeffs.iter().map(|&c| BigInt::from(c)).collect())
    }

    pub fn zero() -> Self {
        IntPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::new(vec![BigInt::one()])
    }

    /// The monomial x.
    pub fn x() -> Self {
        Self::from_i64(&[0, 1])
    }

    pub fn constant(c: BigInt) -> Self {
        Self::new(vec![c])
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Degree; the zero polynomial reports degree 0 through `None`.
    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigInt] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_else(BigInt::zero)
    }

    pub fn leading(&self) -> Option<&BigInt> {
        self.coeffs.last()
    }

    pub fn is_monic(&self) -> bool {
        self.leading().is_some_and(|c| c.is_one())
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn neg(&self) -> Self {
        Self::new(self.coeffs.iter().map(|c| -c).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigInt::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn scale(&self, c: &BigInt) -> Self {
        Self::new(self.coeffs.iter().map(|a| a * c).collect())
    }

    pub fn eval(&self, x: &BigInt) -> BigInt {
        let mut acc = BigInt::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_rational(&self, x: &BigRational) -> BigRational {
        let mut acc = BigRational::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + BigRational::from(c.clone());
        }
        acc
    }

    pub fn derivative(&self) -> Self {
        if self.coeffs.len() <= 1 {
            return Self::zero();
        }
        Self::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(i, c)| c * BigInt::from(i + 1))
                .collect(),
        )
    }

    /// Substitute `x -> x + a`.
    pub fn shift(&self, a: &BigInt) -> Self {
        // Horner on p(x+a)
        let mut acc = Self::zero();
        let xa = Self::new(vec![a.clone(), BigInt::one()]);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(&xa).add(&Self::constant(c.clone()));
        }
        acc
    }

    /// Resultant Res(f, g), computed by the subresultant PRS. With `f` monic
    /// this equals the product of `g` over the roots of `f`, so
    /// `Res(f, c) = c^(deg f)` for constants.
    pub fn resultant(&self, other: &Self) -> BigInt {
        resultant(self, other)
    }
}

impl fmt::Debug for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

impl fmt::Display for IntPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
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
            match i {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if !mag.is_one() {
                        write!(f, "{}*", mag)?;
                    }
                    if i == 1 {
                        write!(f, "x")?;
                    } else {
                        write!(f, "x^{}", i)?;
                    }
                }
            }
        }
        Ok(())
    }
}

/// Resultant through the Euclidean algorithm over Q with exact factor
/// tracking. Desk-scale degrees keep this fast, and it is straightforwardly
/// correct: Res(a,b) = (-1)^(deg a * deg b) lc(b)^(deg a - deg r) Res(b, r)
/// for r = a mod b over Q.
fn resultant(f: &IntPolynomial, g: &IntPolynomial) -> BigInt {
    fn to_rat(p: &IntPolynomial) -> Vec<BigRational> {
        p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect()
    }
    fn deg(p: &[BigRational]) -> Option<usize> {
        if p.is_empty() {
            None
        } else {
            Some(p.len() - 1)
        }
    }
    fn trim(mut p: Vec<BigRational>) -> Vec<BigRational> {
        while p.last().is_some_and(|c| c.is_zero()) {
            p.pop();
        }
        p
    }
    fn rem(mut a: Vec<BigRational>, b: &[BigRational]) -> Vec<BigRational> {
        let db = b.len() - 1;
        let lcb = b.last().unwrap().clone();
        while a.len() >= b.len() && !a.is_empty() {
            let da = a.len() - 1;
            let c = a.last().unwrap() / &lcb;
            for i in 0..=db {
                let t = &b[i] * &c;
                a[da - db + i] -= t;
            }
            a = trim(a);
        }
        a
    }

    let mut a = to_rat(f);
    let mut b = to_rat(g);
    let mut acc = BigRational::one();
    let mut neg = false;
    loop {
        let da = match deg(&a) {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        let db = match deg(&b) {
            Some(d) => d,
            None => return BigInt::zero(),
        };
        if db == 0 {
            let c = b[0].clone();
            let r = acc * num_traits::pow(c, da);
            let r = if neg { -r } else { r };
            debug_assert!(r.is_integer());
            return r.to_integer();
        }
        if da < db {
            if da % 2 == 1 && db % 2 == 1 {
                neg = !neg;
            }
            std::mem::swap(&mut a, &mut b);
            continue;
        }
        let r = rem(a.clone(), &b);
        let dr = deg(&r).map_or(0, |d| d);
        if r.is_empty() {
            return BigInt::zero();
        }
        if (da * db) % 2 == 1 {
            neg = !neg;
        }
        let lcb = b.last().unwrap().clone();
        acc *= num_traits::pow(lcb, da - dr);
        a = b;
        b = r;
    }
}

/// Polynomial over Q, ascending coefficients, used for arithmetic modulo a
/// number-field minimal polynomial.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct RatPolynomial {
    coeffs: Vec<BigRational>,
}

impl RatPolynomial {
    pub fn new(mut coeffs: Vec<BigRational>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        RatPolynomial { coeffs }
    }

    pub fn zero() -> Self {
        RatPolynomial { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::new(vec![BigRational::one()])
    }

    pub fn from_int(p: &IntPolynomial) -> Self {
        Self::new(p.coeffs().iter().map(|c| BigRational::from(c.clone())).collect())
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> Option<usize> {
        if self.coeffs.is_empty() {
            None
        } else {
            Some(self.coeffs.len() - 1)
        }
    }

    pub fn coeffs(&self) -> &[BigRational] {
        &self.coeffs
    }

    pub fn coeff(&self, i: usize) -> BigRational {
        self.coeffs.get(i).cloned().unwrap_or_else(BigRational::zero)
    }

    pub fn add(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect())
    }

    pub fn sub(&self, rhs: &Self) -> Self {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        Self::new((0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect())
    }

    pub fn mul(&self, rhs: &Self) -> Self {
        if self.is_zero() || rhs.is_zero() {
            return Self::zero();
        }
        let mut out = vec![BigRational::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                out[i + j] += a * b;
            }
        }
        Self::new(out)
    }

    pub fn divrem(&self, rhs: &Self) -> (Self, Self) {
        let db = rhs.degree().expect("division by zero polynomial");
        let lcb = rhs.coeffs.last().unwrap().clone();
        let mut r = self.clone();
        let mut q = vec![BigRational::zero(); self.coeffs.len().saturating_sub(db)];
        while let Some(dr) = r.degree() {
            if dr < db {
                break;
            }
            let c = r.coeffs.last().unwrap() / &lcb;
            q[dr - db] = c.clone();
            let mut t = vec![BigRational::zero(); dr - db + 1];
            t[dr - db] = c;
            r = r.sub(&Self::new(t).mul(rhs));
        }
        (Self::new(q), r)
    }

    /// Extended gcd: returns (g, s, t) with s*self + t*rhs = g, g monic.
    pub fn xgcd(&self, rhs: &Self) -> (Self, Self, Self) {
        let (mut r0, mut r1) = (self.clone(), rhs.clone());
        let (mut s0, mut s1) = (Self::one(), Self::zero());
        let (mut t0, mut t1) = (Self::zero(), Self::one());
        while !r1.is_zero() {
            let (q, r) = r0.divrem(&r1);
            let ns = s0.sub(&q.mul(&s1));
            let nt = t0.sub(&q.mul(&t1));
            r0 = r1;
            r1 = r;
            s0 = s1;
            s1 = ns;
            t0 = t1;
            t1 = nt;
        }
        if let Some(lc) = r0.coeffs.last().cloned() {
            let inv = lc.recip();
            let scale = |p: &Self| Self::new(p.coeffs.iter().map(|c| c * &inv).collect());
            (scale(&r0), scale(&s0), scale(&t0))
        } else {
            (r0, s0, t0)
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn basic_ops() {
        let f = IntPolynomial::from_i64(&[-1, 0, 1]); // x^2 - 1
        let g = IntPolynomial::from_i64(&[1, 1]); // x + 1
        assert_eq!(f.eval(&BigInt::from(3)), BigInt::from(8));
        assert_eq!(f.degree(), Some(2));
        assert_eq!(g.mul(&g), IntPolynomial::from_i64(&[1, 2, 1]));
        assert_eq!(f.derivative(), IntPolynomial::from_i64(&[0, 2]));
        assert_eq!(
            f.shift(&BigInt::from(1)),
            IntPolynomial::from_i64(&[0, 2, 1])
        );
    }

    #[test]
    fn resultant_constant_rule() {
        // Res(f, c) = c^(deg f) for monic f
        let f = IntPolynomial::from_i64(&[-1, -2, 1, 1]);
        let c = IntPolynomial::from_i64(&[5]);
        assert_eq!(f.resultant(&c), BigInt::from(125));
    }

    #[test]
    fn resultant_linear() {
        // Res(x^2+x-1, x-2) = value of x^2+x-1 at 2 = 5
        let f = IntPolynomial::from_i64(&[-1, 1, 1]);
        let g = IntPolynomial::from_i64(&[-2, 1]);
        assert_eq!(f.resultant(&g), BigInt::from(5));
    }

    #[test]
    fn resultant_shared_root() {
        let f = IntPolynomial::from_i64(&[-1, 0, 1]);
        let g = IntPolynomial::from_i64(&[1, 1]);
        assert_eq!(f.resultant(&g), BigInt::zero());
    }

    #[test]
    fn rat_xgcd_inverse() {
        // invert x modulo x^2 + x - 1: x * (x + 1) = x^2 + x = 1 mod psi
        let psi = RatPolynomial::from_int(&IntPolynomial::from_i64(&[-1, 1, 1]));
        let x = RatPolynomial::from_int(&IntPolynomial::from_i64(&[0, 1]));
        let (g, s, _) = x.xgcd(&psi);
        assert_eq!(g, RatPolynomial::one());
        let prod = s.mul(&x).divrem(&psi).1;
        assert_eq!(prod, RatPolynomial::one());
    }

    mod properties {
        use super::*;
        use proptest::prelude::*;

        fn small_poly() -> impl Strategy<Value = IntPolynomial> {
            proptest::collection::vec(-20i64..=20, 1..=5)
                .prop_map(|c| IntPolynomial::from_i64(&c))
        }

        fn monic_poly() -> impl Strategy<Value = IntPolynomial> {
            proptest::collection::vec(-20i64..=20, 1..=4).prop_map(|mut c| {
                c.push(1);
                IntPolynomial::from_i64(&c)
            })
        }

        proptest! {
            #[test]
            fn resultant_is_multiplicative(f in monic_poly(), g in small_poly(), h in small_poly()) {
                // Res(f, g h) = Res(f, g) · Res(f, h) for monic f
                let lhs = f.resultant(&g.mul(&h));
                let rhs = f.resultant(&g) * f.resultant(&h);
                prop_assert_eq!(lhs, rhs);
            }

            #[test]
            fn resultant_detects_shared_roots(root in -15i64..=15, g in small_poly()) {
                // (x - r) divides both inputs: the resultant vanishes
                let lin = IntPolynomial::from_i64(&[-root, 1]);
                let f = lin.mul(&g);
                if !f.is_zero() {
                    prop_assert_eq!(f.resultant(&lin), BigInt::zero());
                }
            }

            #[test]
            fn shift_preserves_evaluation(f in small_poly(), a in -30i64..=30, x in -30i64..=30) {
                // f(x + a) evaluated at x equals f at x + a
                let shifted = f.shift(&BigInt::from(a));
                prop_assert_eq!(shifted.eval(&BigInt::from(x)), f.eval(&BigInt::from(x + a)));
            }
        }
    }
}
