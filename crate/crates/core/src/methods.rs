//! The four independent routes to the power-sum polynomial
//! `p_d(n) = 0^d + 1^d + ... + n^d`, plus the brute-force oracle they
//! are all checked against.
//!
//! Each route goes through genuinely different machinery:
//!
//! * [`power_sum_lhopital`] — differentiate the closed form of the
//!   finite geometric series `d` times via `x d/dx`, then take the
//!   limit `x -> 1` by iterated L'Hopital.
//! * [`power_sum_matrix`] — interpolate the coefficients from the
//!   values `p_d(1), ..., p_d(d+1)` by solving a Vandermonde system
//!   with Cramer's rule.
//! * [`power_sum_stirling`] — expand `m^d` in falling powers via
//!   Stirling numbers of the second kind and telescope each falling
//!   power with the hockey-stick identity.
//! * [`power_sum_euler_maclaurin`] — the Bernoulli-number closed form.
//!
//! The polynomials use the convention `0^0 = 1`, so `p_0(n) = n + 1`
//! (the sum has `n + 1` terms).

use std::fmt;
use std::str::FromStr;

use num_traits::{One, Pow, Zero};

use crate::linalg::{self, LinAlgError};
use crate::poly::Polynomial;
use crate::rational::{self, Integer, Rational};
use crate::symbolic::{geometric_seed, SymbolicError};

/// Selects one of the four computation routes.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum Method {
    Lhopital,
    Matrix,
    Stirling,
    EulerMaclaurin,
}

impl Method {
    pub const ALL: [Method; 4] = [
        Method::Lhopital,
        Method::Matrix,
        Method::Stirling,
        Method::EulerMaclaurin,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Method::Lhopital => "lhopital",
            Method::Matrix => "matrix",
            Method::Stirling => "stirling",
            Method::EulerMaclaurin => "euler-maclaurin",
        }
    }
}

impl fmt::Display for Method {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Method {
    type Err = UnknownMethod;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "lhopital" => Ok(Method::Lhopital),
            "matrix" => Ok(Method::Matrix),
            "stirling" => Ok(Method::Stirling),
            "euler-maclaurin" => Ok(Method::EulerMaclaurin),
            _ => Err(UnknownMethod(s.to_string())),
        }
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct UnknownMethod(pub String);

impl fmt::Display for UnknownMethod {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "unknown method '{}'", self.0)
    }
}

impl std::error::Error for UnknownMethod {}

/// Failure of a computation route; wraps the underlying module error.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum MethodError {
    Symbolic(SymbolicError),
    LinAlg(LinAlgError),
}

impl fmt::Display for MethodError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            MethodError::Symbolic(e) => e.fmt(f),
            MethodError::LinAlg(e) => e.fmt(f),
        }
    }
}

impl std::error::Error for MethodError {}

impl From<SymbolicError> for MethodError {
    fn from(e: SymbolicError) -> Self {
        MethodError::Symbolic(e)
    }
}

impl From<LinAlgError> for MethodError {
    fn from(e: LinAlgError) -> Self {
        MethodError::LinAlg(e)
    }
}

/// `0^d + 1^d + ... + n^d` summed term by term; the oracle every
/// symbolic route is checked against. Uses `0^0 = 1`.
pub fn brute_force_power_sum(d: u32, n: u64) -> Integer {
    let mut acc = if d == 0 { Integer::one() } else { Integer::zero() };
    for k in 1..=n {
        acc += Integer::from(k).pow(d);
    }
    acc
}

/// Dispatches to the chosen route.
pub fn power_sum(d: u32, method: Method) -> Result<Polynomial, MethodError> {
    match method {
        Method::Lhopital => Ok(power_sum_lhopital(d)?),
        Method::Matrix => Ok(power_sum_matrix(d)?),
        Method::Stirling => Ok(power_sum_stirling(d)),
        Method::EulerMaclaurin => Ok(power_sum_euler_maclaurin(d)),
    }
}

/// Route 1: apply `x d/dx` to the geometric closed form `d` times, so
/// the numerator of the rational function carries `sum k^d x^k`, then
/// take `lim_{x->1}` by iterated L'Hopital.
pub fn power_sum_lhopital(d: u32) -> Result<Polynomial, SymbolicError> {
    let mut g = geometric_seed();
    for _ in 0..d {
        g = g.x_ddx();
    }
    g.lhopital_limit()
}

/// Route 2: `p_d` has degree `d + 1` and zero constant term (for
/// `d >= 1`), so its coefficients `a_1, ..., a_{d+1}` solve the
/// Vandermonde system built from the sampled values
/// `p_d(1), ..., p_d(d+1)`. Solved exactly by Cramer's rule.
///
/// `d = 0` is handled directly: `p_0(n) = n + 1` has a nonzero
/// constant term, so the zero-constant ansatz does not apply.
pub fn power_sum_matrix(d: u32) -> Result<Polynomial, LinAlgError> {
    if d == 0 {
        return Ok(Polynomial::from_integers(&[1, 1]));
    }
    let m = linalg::vandermonde(d);
    let b: Vec<Rational> = (1..=u64::from(d) + 1)
        .map(|i| Rational::from_integer(brute_force_power_sum(d, i)))
        .collect();
    let a = linalg::cramer_solve(&m, &b)?;
    let mut coeffs = Vec::with_capacity(a.len() + 1);
    coeffs.push(Rational::zero());
    coeffs.extend(a);
    Ok(Polynomial::from_coeffs(coeffs))
}

/// Stirling numbers of the second kind `S(k, j)` for all
/// `0 <= j <= k <= kmax`, from the additive recurrence
/// `S(k, j) = j S(k-1, j) + S(k-1, j-1)`.
#[derive(Debug, Clone)]
pub struct StirlingTable {
    rows: Vec<Vec<Integer>>,
}

impl StirlingTable {
    pub fn new(kmax: u32) -> Self {
        let kmax = kmax as usize;
        let mut rows: Vec<Vec<Integer>> = Vec::with_capacity(kmax + 1);
        rows.push(vec![Integer::one()]);
        for k in 1..=kmax {
            let prev = &rows[k - 1];
            let mut row = Vec::with_capacity(k + 1);
            row.push(Integer::zero());
            for j in 1..=k {
                let carry = if j < k { &prev[j] * j } else { Integer::zero() };
                row.push(carry + &prev[j - 1]);
            }
            rows.push(row);
        }
        StirlingTable { rows }
    }

    pub fn get(&self, k: u32, j: u32) -> &Integer {
        &self.rows[k as usize][j as usize]
    }
}

/// The falling power `(n)_j = n (n-1) ... (n-j+1)` as a polynomial in
/// `n`, with `(n)_0 = 1`.
pub fn falling_factorial_poly(j: u32) -> Polynomial {
    let mut p = Polynomial::one();
    for i in 0..i64::from(j) {
        p = &p * &Polynomial::from_ratios(&[(-i, 1), (1, 1)]);
    }
    p
}

/// `sum_{m=0}^{n} (m)_j` in closed form: the hockey-stick identity
/// telescopes the sum to `(n+1)_{j+1} / (j+1)`. The building block of
/// the Stirling route.
fn falling_basis_sum_poly(j: u32) -> Polynomial {
    falling_factorial_poly(j + 1)
        .scale_shift(&Rational::one(), &Rational::one())
        .scalar_div(&rational::from_int(i64::from(j) + 1))
}

/// `q_k(n) = sum_{m=0}^{n} (m+k)_k` in closed form: shifting the index
/// telescopes the sum to `(n+k+1)_{k+1} / (k+1)`, a polynomial of
/// degree `k + 1`.
pub fn falling_power_sum_poly(k: u32) -> Polynomial {
    falling_factorial_poly(k + 1)
        .scale_shift(&Rational::one(), &rational::from_int(i64::from(k) + 1))
        .scalar_div(&rational::from_int(i64::from(k) + 1))
}

/// Route 3: expand `m^d = sum_j S(d, j) (m)_j`, then sum each falling
/// power over `m = 0..=n` with the hockey-stick identity. The `j = 0`
/// term of `S(0, 0) (m)_0` makes `d = 0` come out as `n + 1` without a
/// special case.
pub fn power_sum_stirling(d: u32) -> Polynomial {
    let table = StirlingTable::new(d);
    let mut p = Polynomial::zero();
    for j in 0..=d {
        let s = table.get(d, j);
        if s.is_zero() {
            continue;
        }
        p = &p + &falling_basis_sum_poly(j).scalar_mul(&Rational::from_integer(s.clone()));
    }
    p
}

/// Bernoulli numbers `B_0..B_mmax` in the convention `B_1 = +1/2`, the
/// one under which the Euler-Maclaurin closed form for sums over
/// `0..=n` needs no correction term.
#[derive(Debug, Clone)]
pub struct BernoulliTable {
    values: Vec<Rational>,
}

impl BernoulliTable {
    pub fn new(mmax: u32) -> Self {
        // Classical recurrence (B_1 = -1/2 convention):
        //   B_m = -1/(m+1) * sum_{j=0}^{m-1} C(m+1, j) B_j
        // then flip the sign of B_1.
        let mmax = mmax as usize;
        let mut values = Vec::with_capacity(mmax + 1);
        values.push(Rational::one());
        for m in 1..=mmax {
            let mut acc = Rational::zero();
            let mut binom = Integer::one(); // C(m+1, j), starting at j = 0
            for (j, b) in values.iter().enumerate() {
                acc += Rational::from_integer(binom.clone()) * b;
                binom = binom * Integer::from(m + 1 - j) / Integer::from(j + 1);
            }
            values.push(-acc / rational::from_int(m as i64 + 1));
        }
        if mmax >= 1 {
            let b1 = -values[1].clone();
            values[1] = b1;
        }
        BernoulliTable { values }
    }

    pub fn get(&self, m: u32) -> &Rational {
        &self.values[m as usize]
    }
}

/// Route 4: the Euler-Maclaurin closed form
///
/// ```text
/// p_d(n) = n^{d+1}/(d+1) + sum_{j=1}^{d} B_j/j! * d!/(d-j+1)! * n^{d-j+1}
/// ```
///
/// with `B_1 = +1/2`. The formula presumes the summand vanishes at 0,
/// which fails for `d = 0` (where `0^0 = 1`), so that case is returned
/// directly as `n + 1`.
pub fn power_sum_euler_maclaurin(d: u32) -> Polynomial {
    if d == 0 {
        return Polynomial::from_integers(&[1, 1]);
    }
    let bernoulli = BernoulliTable::new(d);
    let d_fact = rational::factorial(d);
    let mut coeffs = vec![Rational::zero(); d as usize + 2];
    coeffs[d as usize + 1] = Rational::new(Integer::one(), Integer::from(d) + 1);
    for j in 1..=d {
        let b = bernoulli.get(j);
        if b.is_zero() {
            continue;
        }
        // B_j/j! * d!/(d-j+1)! multiplies n^{d-j+1}
        let weight = Rational::new(d_fact.clone(), rational::factorial(j) * rational::factorial(d - j + 1));
        coeffs[(d - j + 1) as usize] = b * weight;
    }
    Polynomial::from_coeffs(coeffs)
}

/// `sum_{k=0}^{n} k(k-1)` via the plain-derivative pipeline:
/// differentiating the geometric closed form twice gives
/// `sum k(k-1) x^(k-2)`, and at `x = 1` the lingering `x^(k-2)` factors
/// drop away, so the limit is the sum itself: `(n^3 - n)/3`.
pub fn second_derivative_sum() -> Result<Polynomial, SymbolicError> {
    geometric_seed().ddx().ddx().lhopital_limit()
}

/// Recovers `p_2` from plain `d/dx` instead of `x d/dx`:
/// `sum k^2 = sum k(k-1) + sum k`.
pub fn recover_p2_via_plain_derivative() -> Result<Polynomial, SymbolicError> {
    let s = second_derivative_sum()?;
    let p1 = power_sum_lhopital(1)?;
    Ok(&s + &p1)
}
