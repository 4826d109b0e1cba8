//! Prime-field scalars and base-p combinatorics: Lucas binomials,
//! multinomials, factorial valuations, digit expansions.

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::Error;

/// Deterministic trial-division primality test; inputs here are desk-scale.
pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    if n % 2 == 0 {
        return n == 2;
    }
    let mut d = 3u64;
    while d.checked_mul(d).map(|sq| sq <= n).unwrap_or(false) {
        if n % d == 0 {
            return false;
        }
        d += 2;
    }
    true
}

/// Checks that `p` is an odd prime > 2, the only ground fields used here.
pub fn check_modulus(p: u64) -> Result<(), Error> {
    if p > 2 && is_prime(p) {
        Ok(())
    } else {
        Err(Error::BadModulus(p))
    }
}

/// A residue modulo an odd prime `p`. All coefficient arithmetic runs
/// through this type; mixing moduli panics.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct FpScalar {
    value: u64,
    modulus: u64,
}

impl FpScalar {
    pub fn new(value: i128, p: u64) -> Self {
        debug_assert!(p > 2);
        let m = p as i128;
        let mut v = value % m;
        if v < 0 {
            v += m;
        }
        FpScalar {
            value: v as u64,
            modulus: p,
        }
    }

    pub fn from_u64(value: u64, p: u64) -> Self {
        FpScalar {
            value: value % p,
            modulus: p,
        }
    }

    pub fn zero(p: u64) -> Self {
        FpScalar { value: 0, modulus: p }
    }

    pub fn one(p: u64) -> Self {
        FpScalar { value: 1 % p, modulus: p }
    }

    pub fn value(&self) -> u64 {
        self.value
    }

    pub fn modulus(&self) -> u64 {
        self.modulus
    }

    pub fn is_zero(&self) -> bool {
        self.value == 0
    }

    pub fn pow(&self, mut e: u64) -> Self {
        let mut base = *self;
        let mut acc = FpScalar::one(self.modulus);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc * base;
            }
            base = base * base;
            e >>= 1;
        }
        acc
    }

    /// Multiplicative inverse by Fermat exponentiation.
    pub fn inv(&self) -> Result<Self, Error> {
        if self.value == 0 {
            return Err(Error::ZeroInverse);
        }
        Ok(self.pow(self.modulus - 2))
    }
}

impl Add for FpScalar {
    type Output = FpScalar;
    fn add(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        FpScalar {
            value: (self.value + rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Sub for FpScalar {
    type Output = FpScalar;
    fn sub(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        FpScalar {
            value: (self.value + self.modulus - rhs.value) % self.modulus,
            modulus: self.modulus,
        }
    }
}

impl Mul for FpScalar {
    type Output = FpScalar;
    fn mul(self, rhs: FpScalar) -> FpScalar {
        assert_eq!(self.modulus, rhs.modulus, "mixed moduli");
        let prod = (self.value as u128 * rhs.value as u128) % self.modulus as u128;
        FpScalar {
            value: prod as u64,
            modulus: self.modulus,
        }
    }
}

impl Neg for FpScalar {
    type Output = FpScalar;
    fn neg(self) -> FpScalar {
        FpScalar {
            value: if self.value == 0 { 0 } else { self.modulus - self.value },
            modulus: self.modulus,
        }
    }
}

impl fmt::Debug for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{} (mod {})", self.value, self.modulus)
    }
}

impl fmt::Display for FpScalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// Base-p digits of a nonnegative integer, least significant first.
/// No trailing zero digit is stored except for the single digit of 0.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PadicDigits {
    pub base: u64,
    pub digits: Vec<u64>,
}

impl PadicDigits {
    /// Reassembles the original integer.
    pub fn value(&self) -> u64 {
        let mut acc = 0u64;
        for &d in self.digits.iter().rev() {
            acc = acc * self.base + d;
        }
        acc
    }
}

pub fn padic_digits(n: u64, p: u64) -> PadicDigits {
    debug_assert!(p >= 2);
    if n == 0 {
        return PadicDigits { base: p, digits: vec![0] };
    }
    let mut digits = Vec::new();
    let mut n = n;
    while n > 0 {
        digits.push(n % p);
        n /= p;
    }
    PadicDigits { base: p, digits }
}

/// C(a, b) mod p for 0 <= a, b < p, by the multiplicative formula.
fn binom_digit(a: u64, b: u64, p: u64) -> FpScalar {
    if b > a {
        return FpScalar::zero(p);
    }
    let mut acc = FpScalar::one(p);
    for i in 1..=b {
        acc = acc * FpScalar::from_u64(a - b + i, p);
        acc = acc * FpScalar::from_u64(i, p).inv().expect("i < p is nonzero");
    }
    acc
}

/// C(a, b) mod p by Lucas' theorem: the product of digitwise binomials of
/// the base-p expansions. Zero exactly when some digit of b exceeds the
/// matching digit of a, i.e. when b -> a-b carries in base p.
pub fn binom_mod_p(a: u64, b: u64, p: u64) -> FpScalar {
    if b > a {
        return FpScalar::zero(p);
    }
    let mut acc = FpScalar::one(p);
    let mut a = a;
    let mut b = b;
    while b > 0 {
        let da = a % p;
        let db = b % p;
        if db > da {
            return FpScalar::zero(p);
        }
        acc = acc * binom_digit(da, db, p);
        a /= p;
        b /= p;
    }
    acc
}

/// Multinomial coefficient (total; parts) mod p as a product of successive
/// binomials. Vanishes iff adding the parts in base p carries somewhere.
pub fn multinomial_mod_p(total: u64, parts: &[u64], p: u64) -> Result<FpScalar, Error> {
    let sum: u64 = parts.iter().sum();
    if sum != total {
        return Err(Error::SumMismatch { total, parts_sum: sum });
    }
    let mut acc = FpScalar::one(p);
    let mut rest = total;
    for &part in parts {
        acc = acc * binom_mod_p(rest, part, p);
        rest -= part;
    }
    Ok(acc)
}

/// Legendre valuation v_p(n!) = sum(floor(n / p^i)).
pub fn factorial_valuation(n: u64, p: u64) -> u64 {
    let mut acc = 0u64;
    let mut q = p;
    loop {
        acc += n / q;
        match q.checked_mul(p) {
            Some(next) if next <= n => q = next,
            _ => break,
        }
    }
    acc
}

/// n! mod p. Zero for n >= p.
pub fn factorial_mod_p(n: u64, p: u64) -> FpScalar {
    if n >= p {
        return FpScalar::zero(p);
    }
    let mut acc = FpScalar::one(p);
    for i in 2..=n {
        acc = acc * FpScalar::from_u64(i, p);
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_bigint::BigUint;

    fn big_binom(a: u64, b: u64) -> BigUint {
        if b > a {
            return BigUint::from(0u32);
        }
        let mut acc = BigUint::from(1u32);
        for i in 1..=b {
            acc *= BigUint::from(a - b + i);
            acc /= BigUint::from(i);
        }
        acc
    }

    #[test]
    fn binom_examples() {
        // C(4,2) = 6 = 0 mod 3, the base-3 digit pair C(1,2) vanishes
        assert_eq!(binom_mod_p(4, 2, 3).value(), 0);
        assert_eq!(binom_mod_p(17, 0, 3).value(), 1);
        assert_eq!(binom_mod_p(0, 0, 5).value(), 1);
        // C(7,3) = 35 = 2 mod 3
        assert_eq!(binom_mod_p(7, 3, 3).value(), 2);
        // b > a gives 0, not an error
        assert_eq!(binom_mod_p(2, 5, 3).value(), 0);
    }

    #[test]
    fn binom_against_big_integer_oracle() {
        for p in [3u64, 5] {
            for a in 0..120u64 {
                for b in 0..=a {
                    let want = (big_binom(a, b) % BigUint::from(p))
                        .to_u64_digits()
                        .first()
                        .copied()
                        .unwrap_or(0);
                    assert_eq!(binom_mod_p(a, b, p).value(), want, "C({a},{b}) mod {p}");
                }
            }
        }
    }

    #[test]
    fn binom_large_sampled_against_oracle() {
        // deterministic stride sampling up to 2000
        for p in [3u64, 5] {
            let mut a = 1u64;
            while a <= 2000 {
                let mut b = 0u64;
                while b <= a {
                    let want = (big_binom(a, b) % BigUint::from(p))
                        .to_u64_digits()
                        .first()
                        .copied()
                        .unwrap_or(0);
                    assert_eq!(binom_mod_p(a, b, p).value(), want, "C({a},{b}) mod {p}");
                    b += 97;
                }
                a += 131;
            }
        }
    }

    #[test]
    fn kummer_carry_criterion() {
        // C(a+b, a) = 0 mod p iff adding a and b in base p carries
        for p in [3u64, 5] {
            for a in 0..200u64 {
                for b in 0..200u64 {
                    let mut carries = false;
                    let (mut x, mut y, mut carry) = (a, b, 0u64);
                    while x > 0 || y > 0 || carry > 0 {
                        let s = x % p + y % p + carry;
                        if s >= p {
                            carries = true;
                        }
                        carry = s / p;
                        x /= p;
                        y /= p;
                    }
                    assert_eq!(binom_mod_p(a + b, a, p).is_zero(), carries, "a={a} b={b} p={p}");
                }
            }
        }
    }

    #[test]
    fn multinomial_examples() {
        assert_eq!(multinomial_mod_p(2, &[2, 0], 3).unwrap().value(), 1);
        // 3!/(1!1!1!) = 6 = 0 mod 3
        assert_eq!(multinomial_mod_p(3, &[1, 1, 1], 3).unwrap().value(), 0);
        // 4!/(2!2!) = 6 = 1 mod 5
        assert_eq!(multinomial_mod_p(4, &[2, 2], 5).unwrap().value(), 1);
        assert_eq!(
            multinomial_mod_p(4, &[2, 1], 5),
            Err(Error::SumMismatch { total: 4, parts_sum: 3 })
        );
    }

    #[test]
    fn multinomial_against_big_integer_oracle() {
        for p in [3u64, 5] {
            for t in 0..=40u64 {
                for a in 0..=t {
                    for b in 0..=(t - a) {
                        let c = t - a - b;
                        let mut big = big_binom(t, a);
                        big *= big_binom(t - a, b);
                        let want = (big % BigUint::from(p))
                            .to_u64_digits()
                            .first()
                            .copied()
                            .unwrap_or(0);
                        assert_eq!(
                            multinomial_mod_p(t, &[a, b, c], p).unwrap().value(),
                            want
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn factorial_valuation_examples() {
        assert_eq!(factorial_valuation(0, 3), 0);
        assert_eq!(factorial_valuation(3, 3), 1);
        assert_eq!(factorial_valuation(10, 3), 4);
    }

    #[test]
    fn factorial_valuation_against_count() {
        // independent oracle: sum of per-factor valuations
        for p in [3u64, 5] {
            let mut acc = 0u64;
            for n in 1..=500u64 {
                let mut k = n;
                while k % p == 0 {
                    acc += 1;
                    k /= p;
                }
                assert_eq!(factorial_valuation(n, p), acc, "n={n} p={p}");
            }
        }
    }

    #[test]
    fn digits_roundtrip() {
        assert_eq!(padic_digits(0, 3).digits, vec![0]);
        assert_eq!(padic_digits(7, 3).digits, vec![1, 2]);
        assert_eq!(padic_digits(9, 3).digits, vec![0, 0, 1]);
        for n in 0..2000u64 {
            for p in [3u64, 5, 7] {
                let d = padic_digits(n, p);
                assert_eq!(d.value(), n);
                if n > 0 {
                    assert_ne!(d.digits.last(), Some(&0));
                }
            }
        }
    }

    #[test]
    fn scalar_field_ops() {
        let p = 5;
        let a = FpScalar::new(-3, p);
        assert_eq!(a.value(), 2);
        assert_eq!((a + FpScalar::from_u64(4, p)).value(), 1);
        assert_eq!((a * FpScalar::from_u64(3, p)).value(), 1);
        assert_eq!((-a).value(), 3);
        assert_eq!(a.inv().unwrap().value(), 3);
        assert_eq!(FpScalar::zero(p).inv(), Err(Error::ZeroInverse));
        for v in 1..p {
            let s = FpScalar::from_u64(v, p);
            assert_eq!((s * s.inv().unwrap()).value(), 1);
        }
    }

    #[test]
    fn primality() {
        assert!(is_prime(3) && is_prime(5) && is_prime(97));
        assert!(!is_prime(1) && !is_prime(9) && !is_prime(91));
        assert!(check_modulus(2).is_err());
        assert!(check_modulus(3).is_ok());
    }
}
