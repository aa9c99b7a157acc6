//! Elements of cyclotomic fields `Q(zeta_N)` in the power basis.
//!
//! An element of conductor `N` is stored as the vector of its coordinates on
//! `{1, zeta, ..., zeta^(phi(N)-1)}`, i.e. reduced modulo the `N`-th
//! cyclotomic polynomial. This makes equality at a common conductor a plain
//! coefficient comparison; mixed-conductor arithmetic lifts both operands to
//! the lcm of the conductors.

use std::collections::HashMap;
use std::fmt;
use std::sync::{Mutex, OnceLock};

use num::{BigInt, One, Zero};

use super::{euler_phi, format_rational, ExactError, Rational};

/// Integer coefficients of the `n`-th cyclotomic polynomial, ascending,
/// memoized process-wide.
fn phi_poly(n: u32) -> Vec<BigInt> {
    static CACHE: OnceLock<Mutex<HashMap<u32, Vec<BigInt>>>> = OnceLock::new();
    let cache = CACHE.get_or_init(|| Mutex::new(HashMap::new()));
    if let Some(p) = cache.lock().unwrap().get(&n) {
        return p.clone();
    }
    // q^n - 1 divided by the product of Phi_d over proper divisors d of n.
    let mut num = vec![BigInt::zero(); n as usize + 1];
    num[0] = -BigInt::one();
    num[n as usize] = BigInt::one();
    for d in 1..n {
        if n.is_multiple_of(d) {
            num = int_poly_divexact(&num, &phi_poly(d));
        }
    }
    cache.lock().unwrap().insert(n, num.clone());
    num
}

/// Exact division of integer polynomials (ascending coefficients), used only
/// for building cyclotomic polynomials where divisibility is guaranteed.
fn int_poly_divexact(num: &[BigInt], den: &[BigInt]) -> Vec<BigInt> {
    let mut rem: Vec<BigInt> = num.to_vec();
    let dd = den.len() - 1;
    assert!(den[dd].is_one(), "divisor must be monic");
    let mut quot = vec![BigInt::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = std::mem::replace(&mut rem[i], BigInt::zero());
        if c.is_zero() {
            continue;
        }
        let qi = i - dd;
        for (j, dc) in den.iter().enumerate().take(dd) {
            rem[qi + j] -= &c * dc;
        }
        quot[qi] = c;
    }
    assert!(rem.iter().all(|c| c.is_zero()), "division not exact");
    quot
}

/// Public access to the integer coefficients of `Phi_n`, ascending.
pub(crate) fn phi_poly_coeffs(n: u32) -> Vec<BigInt> {
    phi_poly(n)
}

/// An exact element of `Q(zeta_N)`.
#[derive(Clone)]
pub struct Cyclotomic {
    conductor: u32,
    /// Exactly `phi(conductor)` coordinates, trailing zeros retained.
    coeffs: Vec<Rational>,
}

impl Cyclotomic {
    /// The zero element at the given conductor.
    pub fn zero(conductor: u32) -> Self {
        Cyclotomic {
            conductor,
            coeffs: vec![Rational::zero(); euler_phi(conductor) as usize],
        }
    }

    /// The unit element at the given conductor.
    pub fn one(conductor: u32) -> Self {
        Self::from_rational_at(Rational::one(), conductor)
    }

    /// A rational embedded at conductor 1.
    pub fn from_rational(r: Rational) -> Self {
        Self::from_rational_at(r, 1)
    }

    /// A rational embedded at the given conductor.
    pub fn from_rational_at(r: Rational, conductor: u32) -> Self {
        let mut z = Self::zero(conductor);
        z.coeffs[0] = r;
        z
    }

    /// `zeta_n^k`, stored at conductor `n`.
    pub fn root_of_unity(n: u32, k: i64) -> Self {
        let k = k.rem_euclid(n as i64) as usize;
        let mut dense = vec![Rational::zero(); n as usize];
        dense[k] = Rational::one();
        Self::from_dense(n, dense)
    }

    /// Builds an element from an arbitrary polynomial in `zeta_n` (ascending
    /// coefficients, any length), reducing modulo `Phi_n`.
    pub fn from_dense(conductor: u32, mut dense: Vec<Rational>) -> Self {
        // First fold exponents modulo n (zeta^n = 1), then reduce mod Phi_n.
        let n = conductor as usize;
        if dense.len() > n {
            let tail = dense.split_off(n);
            for (i, c) in tail.into_iter().enumerate() {
                let idx = (n + i) % n;
                dense[idx] += c;
            }
        }
        let phi: Vec<Rational> = phi_poly(conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        let deg = phi.len() - 1;
        while dense.len() > deg {
            let c = dense.pop().unwrap();
            if c.is_zero() {
                continue;
            }
            let shift = dense.len() - deg;
            for (j, pc) in phi.iter().enumerate().take(deg) {
                dense[shift + j] -= &c * pc;
            }
        }
        dense.resize(deg, Rational::zero());
        Cyclotomic {
            conductor,
            coeffs: dense,
        }
    }

    pub fn conductor(&self) -> u32 {
        self.conductor
    }

    /// Coordinates on the power basis, length `phi(conductor)`.
    pub fn coeffs(&self) -> &[Rational] {
        &self.coeffs
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    pub fn is_one(&self) -> bool {
        self.coeffs[0].is_one() && self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// True when all coordinates beyond index 0 vanish.
    pub fn is_rational(&self) -> bool {
        self.coeffs[1..].iter().all(|c| c.is_zero())
    }

    /// The rational value, when `is_rational` holds.
    pub fn to_rational(&self) -> Option<Rational> {
        if self.is_rational() {
            Some(self.coeffs[0].clone())
        } else {
            None
        }
    }

    /// Lifts the element into `Q(zeta_m)`; `m` must be a multiple of the
    /// current conductor.
    pub fn lift(&self, m: u32) -> Self {
        assert!(
            m.is_multiple_of(self.conductor),
            "cannot lift conductor {} into {}",
            self.conductor,
            m
        );
        if m == self.conductor {
            return self.clone();
        }
        let step = (m / self.conductor) as usize;
        let mut dense = vec![Rational::zero(); m as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            dense[i * step] = c.clone();
        }
        Self::from_dense(m, dense)
    }

    fn common(a: &Self, b: &Self) -> (Self, Self) {
        let m = num::integer::lcm(a.conductor, b.conductor);
        (a.lift(m), b.lift(m))
    }

    pub fn add(&self, other: &Self) -> Self {
        let (mut a, b) = Self::common(self, other);
        for (x, y) in a.coeffs.iter_mut().zip(&b.coeffs) {
            *x += y;
        }
        a
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| -c.clone()).collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Self {
        let (a, b) = Self::common(self, other);
        let mut dense = vec![Rational::zero(); a.coeffs.len() + b.coeffs.len()];
        for (i, x) in a.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            for (j, y) in b.coeffs.iter().enumerate() {
                if y.is_zero() {
                    continue;
                }
                dense[i + j] += x * y;
            }
        }
        Self::from_dense(a.conductor, dense)
    }

    pub fn scale(&self, r: &Rational) -> Self {
        Cyclotomic {
            conductor: self.conductor,
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiplicative inverse via the extended Euclidean algorithm against
    /// the conductor's cyclotomic polynomial.
    pub fn inverse(&self) -> Result<Self, ExactError> {
        if self.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if let Some(r) = self.to_rational() {
            return Ok(Self::from_rational_at(r.recip(), self.conductor));
        }
        let phi: Vec<Rational> = phi_poly(self.conductor)
            .into_iter()
            .map(Rational::from_integer)
            .collect();
        // Extended Euclid over Q[x]: u * self + v * phi = gcd = constant.
        let mut r0 = phi;
        let mut r1 = trim(self.coeffs.clone());
        let mut u0: Vec<Rational> = vec![];
        let mut u1 = vec![Rational::one()];
        while !r1.is_empty() {
            let (q, rem) = rat_poly_divrem(&r0, &r1);
            let unew = rat_poly_sub(&u0, &rat_poly_mul(&q, &u1));
            r0 = r1;
            r1 = rem;
            u0 = u1;
            u1 = unew;
        }
        // r0 is a nonzero constant since Phi_N is irreducible over Q.
        assert_eq!(r0.len(), 1, "cyclotomic polynomial must be irreducible");
        let scale = r0[0].recip();
        let inv: Vec<Rational> = u0.iter().map(|c| c * &scale).collect();
        Ok(Self::from_dense(self.conductor, inv))
    }

    pub fn div(&self, other: &Self) -> Result<Self, ExactError> {
        Ok(self.mul(&other.inverse()?))
    }

    /// Applies the Galois automorphism `zeta -> zeta^u`; `u` must be coprime
    /// to the conductor.
    pub fn galois(&self, u: i64) -> Self {
        let n = self.conductor as i64;
        let u = u.rem_euclid(n);
        assert_eq!(
            num::integer::gcd(u, n),
            1,
            "galois exponent must be coprime to the conductor"
        );
        let mut dense = vec![Rational::zero(); self.conductor as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let e = ((i as i64 * u).rem_euclid(n)) as usize;
            dense[e] += c;
        }
        Self::from_dense(self.conductor, dense)
    }

    /// Complex conjugation, `zeta -> zeta^(-1)`.
    pub fn conjugate(&self) -> Self {
        if self.conductor == 1 {
            return self.clone();
        }
        self.galois(self.conductor as i64 - 1)
    }

    /// `z * conj(z)`, the squared absolute value (totally real, and rational
    /// whenever `z` lies in a CM field over Q closed under conjugation).
    pub fn norm_squared(&self) -> Self {
        self.mul(&self.conjugate())
    }

    pub fn pow(&self, mut e: u32) -> Self {
        let mut base = self.clone();
        let mut acc = Self::one(self.conductor);
        while e > 0 {
            if e & 1 == 1 {
                acc = acc.mul(&base);
            }
            base = base.mul(&base);
            e >>= 1;
        }
        acc
    }
}

impl PartialEq for Cyclotomic {
    fn eq(&self, other: &Self) -> bool {
        if self.conductor == other.conductor {
            return self.coeffs == other.coeffs;
        }
        let (a, b) = Self::common(self, other);
        a.coeffs == b.coeffs
    }
}

impl Eq for Cyclotomic {}

impl fmt::Display for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let var = format!("z{}", self.conductor);
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let cs = format_rational(c);
            let (sign, mag) = match cs.strip_prefix('-') {
                Some(rest) => ("-", rest.to_string()),
                None => ("+", cs),
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            if i == 0 {
                write!(f, "{}", mag)?;
            } else {
                if mag != "1" {
                    write!(f, "{}*", mag)?;
                }
                if i == 1 {
                    write!(f, "{}", var)?;
                } else {
                    write!(f, "{}^{}", var, i)?;
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Cyclotomic {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

fn trim(mut v: Vec<Rational>) -> Vec<Rational> {
    while v.last().is_some_and(|c| c.is_zero()) {
        v.pop();
    }
    v
}

fn rat_poly_mul(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    if a.is_empty() || b.is_empty() {
        return vec![];
    }
    let mut out = vec![Rational::zero(); a.len() + b.len() - 1];
    for (i, x) in a.iter().enumerate() {
        for (j, y) in b.iter().enumerate() {
            out[i + j] += x * y;
        }
    }
    trim(out)
}

fn rat_poly_sub(a: &[Rational], b: &[Rational]) -> Vec<Rational> {
    let mut out = a.to_vec();
    out.resize(out.len().max(b.len()), Rational::zero());
    for (i, y) in b.iter().enumerate() {
        out[i] -= y;
    }
    trim(out)
}

fn rat_poly_divrem(num: &[Rational], den: &[Rational]) -> (Vec<Rational>, Vec<Rational>) {
    let den = trim(den.to_vec());
    assert!(!den.is_empty());
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    if rem.len() <= dd {
        return (vec![], trim(rem));
    }
    let lead = den[dd].clone();
    let mut quot = vec![Rational::zero(); rem.len() - dd];
    for i in (dd..rem.len()).rev() {
        let c = &rem[i] / &lead;
        if c.is_zero() {
            rem[i] = Rational::zero();
            continue;
        }
        let qi = i - dd;
        for (j, dc) in den.iter().enumerate() {
            let sub = &c * dc;
            rem[qi + j] -= sub;
        }
        quot[qi] = c;
    }
    (trim(quot), trim(rem))
}
