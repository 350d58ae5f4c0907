//! Exact scalars over the rationals or a prime field.
//!
//! Every computation in this crate reduces to linear algebra over one of
//! these two kinds of field. Rationals are arbitrary-precision normalized
//! fractions; prime-field elements are canonical residues in `0..p`.

use std::fmt;

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};

/// The ground field: ℚ or F_p for a prime p.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum FieldSpec {
    Rationals,
    PrimeField(u64),
}

impl FieldSpec {
    /// Prime-field constructor; rejects composite or oversized moduli.
    pub fn prime(p: u64) -> Result<FieldSpec> {
        if !is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        // Residue products are formed in u128, so any u64 prime below
        // 2^32 is safe; larger primes are pointless at desk scale.
        if p >= 1 << 32 {
            return Err(Error::NotPrime(p));
        }
        Ok(FieldSpec::PrimeField(p))
    }

    pub fn characteristic(&self) -> u64 {
        match self {
            FieldSpec::Rationals => 0,
            FieldSpec::PrimeField(p) => *p,
        }
    }

    pub fn zero(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::zero()),
            FieldSpec::PrimeField(_) => Scalar::Mod(0),
        }
    }

    pub fn one(&self) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::one()),
            FieldSpec::PrimeField(_) => Scalar::Mod(1),
        }
    }

    pub fn from_integer(&self, n: i64) -> Scalar {
        match self {
            FieldSpec::Rationals => Scalar::Rat(BigRational::from_integer(BigInt::from(n))),
            FieldSpec::PrimeField(p) => Scalar::Mod(n.rem_euclid(*p as i64) as u64),
        }
    }

    /// Builds a/b, reducing mod p for prime fields. Errors when b is not
    /// invertible (b = 0, or p | b).
    pub fn from_fraction(&self, a: i64, b: i64) -> Result<Scalar> {
        if b == 0 {
            return Err(Error::DivisionByZero);
        }
        match self {
            FieldSpec::Rationals => Ok(Scalar::Rat(BigRational::new(
                BigInt::from(a),
                BigInt::from(b),
            ))),
            FieldSpec::PrimeField(_) => {
                let num = self.from_integer(a);
                let den = self.from_integer(b);
                let inv = self.inv(&den)?;
                Ok(self.mul(&num, &inv))
            }
        }
    }

    pub fn add(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x + y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod((x + y) % p)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn sub(&self, a: &Scalar, b: &Scalar) -> Scalar {
        self.add(a, &self.neg(b))
    }

    pub fn neg(&self, a: &Scalar) -> Scalar {
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Scalar::Rat(-x),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => Scalar::Mod((p - x) % p),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn mul(&self, a: &Scalar, b: &Scalar) -> Scalar {
        match (self, a, b) {
            (FieldSpec::Rationals, Scalar::Rat(x), Scalar::Rat(y)) => Scalar::Rat(x * y),
            (FieldSpec::PrimeField(p), Scalar::Mod(x), Scalar::Mod(y)) => {
                Scalar::Mod(((*x as u128 * *y as u128) % *p as u128) as u64)
            }
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn inv(&self, a: &Scalar) -> Result<Scalar> {
        if self.is_zero(a) {
            return Err(Error::DivisionByZero);
        }
        match (self, a) {
            (FieldSpec::Rationals, Scalar::Rat(x)) => Ok(Scalar::Rat(x.recip())),
            (FieldSpec::PrimeField(p), Scalar::Mod(x)) => Ok(Scalar::Mod(mod_inverse(*x, *p))),
            _ => panic!("scalar does not belong to field {self:?}"),
        }
    }

    pub fn div(&self, a: &Scalar, b: &Scalar) -> Result<Scalar> {
        Ok(self.mul(a, &self.inv(b)?))
    }

    pub fn is_zero(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(x) => x.is_zero(),
            Scalar::Mod(x) => *x == 0,
        }
    }

    pub fn is_one(&self, a: &Scalar) -> bool {
        match a {
            Scalar::Rat(x) => x.is_one(),
            Scalar::Mod(x) => *x == 1,
        }
    }
}

impl fmt::Display for FieldSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            FieldSpec::Rationals => write!(f, "Q"),
            FieldSpec::PrimeField(p) => write!(f, "Fp({p})"),
        }
    }
}

/// An exact field element. The field it belongs to is carried by the
/// surrounding container (matrix, algebra, module), not by the scalar.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub enum Scalar {
    Rat(BigRational),
    Mod(u64),
}

impl Scalar {
    /// Numerator/denominator display, `a/b` or plain integer.
    pub fn render(&self) -> String {
        match self {
            Scalar::Rat(x) => {
                if x.denom().is_one() {
                    x.numer().to_string()
                } else {
                    format!("{}/{}", x.numer(), x.denom())
                }
            }
            Scalar::Mod(x) => x.to_string(),
        }
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.render())
    }
}

fn mod_inverse(a: u64, p: u64) -> u64 {
    // Extended Euclid on (a, p); p prime and a nonzero mod p.
    let (mut r0, mut r1) = (a as i128, p as i128);
    let (mut s0, mut s1) = (1i128, 0i128);
    while r1 != 0 {
        let q = r0 / r1;
        (r0, r1) = (r1, r0 - q * r1);
        (s0, s1) = (s1, s0 - q * s1);
    }
    debug_assert_eq!(r0, 1, "inverse of non-unit");
    s0.rem_euclid(p as i128) as u64
}

fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n.is_multiple_of(2) {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).is_some_and(|sq| sq <= n) {
        if n.is_multiple_of(d) {
            return false;
        }
        d += 2;
    }
    true
}

/// Rational roots of a polynomial with rational coefficients
/// (`coeffs[i]` is the coefficient of x^i). Used by module decomposition
/// to locate eigenvalues of endomorphisms. Returns distinct roots.
pub fn rational_roots(field: &FieldSpec, coeffs: &[Scalar]) -> Vec<Scalar> {
    match field {
        FieldSpec::PrimeField(p) => {
            // Exhaust the field.
            let mut roots = Vec::new();
            for c in 0..*p {
                let x = Scalar::Mod(c);
                if eval_poly(field, coeffs, &x).is_some_and(|v| field.is_zero(&v)) {
                    roots.push(x);
                }
            }
            roots
        }
        FieldSpec::Rationals => {
            let mut roots = Vec::new();
            let zero = field.zero();
            if coeffs.iter().all(|c| field.is_zero(c)) {
                return vec![zero];
            }
            if eval_poly(field, coeffs, &zero).is_some_and(|v| field.is_zero(&v)) {
                roots.push(zero);
            }
            // Clear denominators, then apply the rational root test.
            let mut lcm = BigInt::one();
            for c in coeffs {
                if let Scalar::Rat(x) = c {
                    lcm = num_integer::lcm(lcm, x.denom().clone());
                }
            }
            let ints: Vec<BigInt> = coeffs
                .iter()
                .map(|c| match c {
                    Scalar::Rat(x) => x.numer() * (&lcm / x.denom()),
                    Scalar::Mod(_) => unreachable!(),
                })
                .collect();
            let lead = ints.iter().rposition(|c| !c.is_zero()).unwrap();
            let low = ints.iter().position(|c| !c.is_zero()).unwrap();
            let p0 = ints[low].abs();
            let q0 = ints[lead].abs();
            for num in divisors(&p0) {
                for den in divisors(&q0) {
                    for sign in [1, -1] {
                        let cand = Scalar::Rat(BigRational::new(&num * sign, den.clone()));
                        if roots.contains(&cand) {
                            continue;
                        }
                        if eval_poly(field, coeffs, &cand)
                            .is_some_and(|v| field.is_zero(&v))
                        {
                            roots.push(cand);
                        }
                    }
                }
            }
            roots
        }
    }
}

fn eval_poly(field: &FieldSpec, coeffs: &[Scalar], x: &Scalar) -> Option<Scalar> {
    let mut acc = field.zero();
    for c in coeffs.iter().rev() {
        acc = field.add(&field.mul(&acc, x), c);
    }
    Some(acc)
}

fn divisors(n: &BigInt) -> Vec<BigInt> {
    // Trial division; fine for the digit sizes that appear in
    // characteristic polynomials of desk-scale endomorphisms.
    let mut out = Vec::new();
    if n.is_zero() {
        return out;
    }
    let mut d = BigInt::one();
    while &d * &d <= *n {
        if (n % &d).is_zero() {
            out.push(d.clone());
            let other = n / &d;
            if other != d {
                out.push(other);
            }
        }
        d += 1;
    }
    out.sort();
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn prime_detection() {
        assert!(FieldSpec::prime(2).is_ok());
        assert!(FieldSpec::prime(97).is_ok());
        assert!(FieldSpec::prime(1).is_err());
        assert!(FieldSpec::prime(91).is_err());
    }

    #[test]
    fn mod_arithmetic() {
        let f5 = FieldSpec::prime(5).unwrap();
        let two = f5.from_integer(2);
        let three = f5.from_integer(3);
        assert_eq!(f5.mul(&two, &three), f5.from_integer(1));
        assert_eq!(f5.inv(&two).unwrap(), f5.from_integer(3));
        assert_eq!(f5.from_integer(-1), f5.from_integer(4));
    }

    #[test]
    fn rational_fraction() {
        let q = FieldSpec::Rationals;
        let half = q.from_fraction(1, 2).unwrap();
        assert_eq!(q.add(&half, &half), q.one());
        assert!(q.from_fraction(1, 0).is_err());
    }

    #[test]
    fn roots_of_quadratic() {
        let q = FieldSpec::Rationals;
        // (x - 2)(x + 3) = x^2 + x - 6
        let coeffs = vec![q.from_integer(-6), q.from_integer(1), q.from_integer(1)];
        let mut roots = rational_roots(&q, &coeffs);
        roots.sort_by_key(|r| r.render());
        assert_eq!(roots.len(), 2);
        assert!(roots.contains(&q.from_integer(2)));
        assert!(roots.contains(&q.from_integer(-3)));
    }

    #[test]
    fn roots_over_prime_field() {
        let f7 = FieldSpec::prime(7).unwrap();
        // x^2 - 2 has roots 3, 4 mod 7
        let coeffs = vec![f7.from_integer(-2), f7.zero(), f7.one()];
        let roots = rational_roots(&f7, &coeffs);
        assert_eq!(roots, vec![Scalar::Mod(3), Scalar::Mod(4)]);
    }
}
