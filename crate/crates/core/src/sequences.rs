//! Supporting identities: finite geometric sums, Fibonacci numbers by
//! fast doubling and by an exact Binet formula over the ring of numbers
//! `a + b*sqrt(5)`, and the square-sum identity
//! `F_1^2 + ... + F_n^2 = F_n * F_{n+1}`.

use std::fmt;
use std::ops::Mul;

use num_traits::{One, Zero};

use crate::rational::{self, from_int, Integer, Rational};

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum SequenceError {
    /// Binet's formula must produce an integer; anything else signals a
    /// bug in the quadratic-ring arithmetic.
    NonIntegralBinet { n: u64 },
}

impl fmt::Display for SequenceError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            SequenceError::NonIntegralBinet { n } => {
                write!(f, "Binet value for F_{n} is not an integer")
            }
        }
    }
}

impl std::error::Error for SequenceError {}

/// An element `a + b*sqrt(5)` of the quadratic extension of the
/// rationals that the golden ratio lives in. Equality is componentwise;
/// arithmetic is exact.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Surd5 {
    pub a: Rational,
    pub b: Rational,
}

impl Surd5 {
    pub fn new(a: Rational, b: Rational) -> Self {
        Surd5 { a, b }
    }

    pub fn one() -> Self {
        Surd5::new(Rational::one(), Rational::zero())
    }

    /// The golden ratio `(1 + sqrt(5))/2`.
    pub fn golden_ratio() -> Self {
        Surd5::new(Rational::new(1.into(), 2.into()), Rational::new(1.into(), 2.into()))
    }

    /// `a + b*sqrt(5) -> a - b*sqrt(5)`; a ring homomorphism, and the
    /// map that sends the golden ratio to its Binet partner.
    pub fn conj(&self) -> Surd5 {
        Surd5::new(self.a.clone(), -&self.b)
    }

    /// Exponentiation by squaring.
    pub fn pow(&self, mut e: u64) -> Surd5 {
        let mut base = self.clone();
        let mut acc = Surd5::one();
        while e > 0 {
            if e & 1 == 1 {
                acc = &acc * &base;
            }
            e >>= 1;
            if e > 0 {
                base = &base * &base;
            }
        }
        acc
    }
}

impl Mul for &Surd5 {
    type Output = Surd5;

    // (a + b sqrt5)(c + d sqrt5) = (ac + 5bd) + (ad + bc) sqrt5
    fn mul(self, rhs: &Surd5) -> Surd5 {
        let five = from_int(5);
        Surd5::new(
            &self.a * &rhs.a + five * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl Mul for Surd5 {
    type Output = Surd5;

    fn mul(self, rhs: Surd5) -> Surd5 {
        &self * &rhs
    }
}

/// `a0 * (1 + r + r^2 + ... + r^n)` in closed form:
/// `a0 (1 - r^(n+1))/(1 - r)` for `r != 1`, and `a0 (n+1)` at `r = 1`
/// where the sum is just `n + 1` copies of `a0`.
pub fn geometric_sum(a0: &Rational, r: &Rational, n: u32) -> Rational {
    if r.is_one() {
        return a0 * from_int(i64::from(n) + 1);
    }
    let numer = Rational::one() - rational::pow(r, i64::from(n) + 1);
    a0 * numer / (Rational::one() - r)
}

/// `F_n` by fast doubling over the binary digits of `n`:
/// `F_{2m} = F_m (2 F_{m+1} - F_m)` and `F_{2m+1} = F_m^2 + F_{m+1}^2`.
pub fn fib_doubling(n: u64) -> Integer {
    if n == 0 {
        return Integer::zero();
    }
    let mut a = Integer::zero(); // F_k
    let mut b = Integer::one(); // F_{k+1}
    for i in (0..u64::BITS - n.leading_zeros()).rev() {
        let c = &a * &(&b + &b - &a); // F_{2k}
        let d = &a * &a + &b * &b; // F_{2k+1}
        if (n >> i) & 1 == 1 {
            b = c + &d;
            a = d;
        } else {
            a = c;
            b = d;
        }
    }
    a
}

/// `F_n` by Binet's formula evaluated exactly: with
/// `phi = (1 + sqrt(5))/2` and `psi` its conjugate,
/// `F_n = (phi^n - psi^n)/sqrt(5)`. Writing `phi^n = a + b*sqrt(5)`,
/// conjugation gives `psi^n = a - b*sqrt(5)`, so the quotient collapses
/// to `2b` — which must be an integer.
pub fn fib_binet(n: u64) -> Result<Integer, SequenceError> {
    let phi_n = Surd5::golden_ratio().pow(n);
    let two_b = &phi_n.b + &phi_n.b;
    if !two_b.is_integer() {
        return Err(SequenceError::NonIntegralBinet { n });
    }
    Ok(two_b.to_integer())
}

/// The pair `(F_1^2 + ... + F_n^2, F_n * F_{n+1})`. The square-sum
/// identity says the components are equal; the left side accumulates
/// squares along the additive recurrence while the right side goes
/// through fast doubling, so equality cross-checks the two routes.
pub fn fib_square_sum(n: u64) -> (Integer, Integer) {
    let mut sum = Integer::zero();
    let mut a = Integer::zero(); // F_0
    let mut b = Integer::one(); // F_1
    for _ in 0..n {
        let next = &a + &b;
        a = std::mem::replace(&mut b, next);
        sum += &a * &a;
    }
    (sum, fib_doubling(n) * fib_doubling(n + 1))
}
