//! Univariate polynomials in `q` with cyclotomic coefficients.
//!
//! Coefficients are stored lowest degree first with no trailing zero; the
//! zero polynomial has an empty coefficient vector. Valuation and degree of
//! nonzero polynomials are exposed directly; generic degrees read their two
//! span invariants off them.

use std::fmt;

use num::One;

use super::cyclotomic::phi_poly_coeffs;
use super::{Cyclotomic, ExactError, Rational};

#[derive(Clone, PartialEq, Eq)]
pub struct UniPoly {
    /// Ascending coefficients, no trailing zero.
    coeffs: Vec<Cyclotomic>,
}

impl UniPoly {
    pub fn zero() -> Self {
        UniPoly { coeffs: vec![] }
    }

    pub fn one() -> Self {
        Self::constant(Cyclotomic::from_rational(Rational::one()))
    }

    pub fn constant(c: Cyclotomic) -> Self {
        let mut p = UniPoly { coeffs: vec![c] };
        p.trim();
        p
    }

    /// The monomial `c * q^k`.
    pub fn monomial(c: Cyclotomic, k: usize) -> Self {
        if c.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Cyclotomic::zero(c.conductor()); k];
        coeffs.push(c);
        UniPoly { coeffs }
    }

    /// The variable `q`.
    pub fn var() -> Self {
        Self::monomial(Cyclotomic::from_rational(Rational::one()), 1)
    }

    /// Builds a polynomial from ascending rational coefficients.
    pub fn from_rationals(coeffs: &[Rational]) -> Self {
        let mut p = UniPoly {
            coeffs: coeffs
                .iter()
                .map(|c| Cyclotomic::from_rational(c.clone()))
                .collect(),
        };
        p.trim();
        p
    }

    /// Builds a polynomial from ascending integer coefficients.
    pub fn from_ints(coeffs: &[i64]) -> Self {
        Self::from_rationals(&coeffs.iter().map(|&c| super::rat(c)).collect::<Vec<_>>())
    }

    /// `q^e - 1`.
    pub fn q_pow_minus_one(e: u32) -> Self {
        let mut coeffs = vec![Cyclotomic::from_rational(-Rational::one())];
        coeffs.extend((1..e).map(|_| Cyclotomic::zero(1)));
        coeffs.push(Cyclotomic::from_rational(Rational::one()));
        UniPoly { coeffs }
    }

    /// The monic product of `(q - root)` over the given roots.
    pub fn from_roots(roots: &[Cyclotomic]) -> Self {
        let mut p = Self::one();
        for r in roots {
            p = p.mul(&UniPoly {
                coeffs: vec![r.neg(), Cyclotomic::one(r.conductor())],
            });
        }
        p
    }

    fn trim(&mut self) {
        while self.coeffs.last().is_some_and(|c| c.is_zero()) {
            self.coeffs.pop();
        }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn is_one(&self) -> bool {
        self.coeffs.len() == 1 && self.coeffs[0].is_one()
    }

    /// Ascending coefficients (no trailing zero).
    pub fn coeffs(&self) -> &[Cyclotomic] {
        &self.coeffs
    }

    /// Degree of a nonzero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// Valuation (order of vanishing at 0) of a nonzero polynomial.
    pub fn valuation(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn coeff(&self, k: usize) -> Cyclotomic {
        self.coeffs
            .get(k)
            .cloned()
            .unwrap_or_else(|| Cyclotomic::zero(1))
    }

    /// True when every coefficient is rational.
    pub fn is_rational(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_rational())
    }

    /// True when every coefficient is a rational integer.
    pub fn has_integer_coeffs(&self) -> bool {
        self.coeffs.iter().all(|c| {
            c.to_rational()
                .map(|r| r.denom().is_one())
                .unwrap_or(false)
        })
    }

    pub fn add(&self, other: &Self) -> Self {
        let mut coeffs = self.coeffs.clone();
        if coeffs.len() < other.coeffs.len() {
            coeffs.resize(other.coeffs.len(), Cyclotomic::zero(1));
        }
        for (i, c) in other.coeffs.iter().enumerate() {
            coeffs[i] = coeffs[i].add(c);
        }
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn neg(&self) -> Self {
        UniPoly {
            coeffs: self.coeffs.iter().map(|c| c.neg()).collect(),
        }
    }

    pub fn sub(&self, other: &Self) -> Self {
        self.add(&other.neg())
    }

    pub fn mul(&self, other: &Self) -> Self {
        if self.is_zero() || other.is_zero() {
            return Self::zero();
        }
        let mut coeffs = vec![Cyclotomic::zero(1); self.coeffs.len() + other.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                coeffs[i + j] = coeffs[i + j].add(&a.mul(b));
            }
        }
        let mut p = UniPoly { coeffs };
        p.trim();
        p
    }

    pub fn scale(&self, c: &Cyclotomic) -> Self {
        let mut p = UniPoly {
            coeffs: self.coeffs.iter().map(|x| x.mul(c)).collect(),
        };
        p.trim();
        p
    }

    pub fn pow(&self, e: u32) -> Self {
        let mut acc = Self::one();
        for _ in 0..e {
            acc = acc.mul(self);
        }
        acc
    }

    /// Exact division; fails if the remainder is nonzero.
    pub fn divexact(&self, den: &Self) -> Result<Self, ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        if self.is_zero() {
            return Ok(Self::zero());
        }
        let (q, r) = self.divrem(den)?;
        if r.is_zero() {
            Ok(q)
        } else {
            Err(ExactError::InexactDivision(r.to_string()))
        }
    }

    /// Euclidean division by a nonzero polynomial.
    pub fn divrem(&self, den: &Self) -> Result<(Self, Self), ExactError> {
        if den.is_zero() {
            return Err(ExactError::DivisionByZero);
        }
        let dd = den.coeffs.len() - 1;
        let lead_inv = den.coeffs[dd].inverse()?;
        let mut rem = self.coeffs.clone();
        if rem.len() <= dd {
            return Ok((Self::zero(), self.clone()));
        }
        let mut quot = vec![Cyclotomic::zero(1); rem.len() - dd];
        for i in (dd..rem.len()).rev() {
            if rem[i].is_zero() {
                continue;
            }
            let c = rem[i].mul(&lead_inv);
            for (j, dc) in den.coeffs.iter().enumerate() {
                rem[i - dd + j] = rem[i - dd + j].sub(&c.mul(dc));
            }
            quot[i - dd] = c;
        }
        let mut q = UniPoly { coeffs: quot };
        q.trim();
        let mut r = UniPoly { coeffs: rem };
        r.trim();
        Ok((q, r))
    }

    pub fn evaluate(&self, x: &Cyclotomic) -> Cyclotomic {
        let mut acc = Cyclotomic::zero(x.conductor());
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x).add(c);
        }
        acc
    }

    /// Largest `m` such that `(q - alpha)^m` divides the polynomial; the zero
    /// polynomial has no well-defined multiplicity.
    pub fn root_multiplicity(&self, alpha: &Cyclotomic) -> Result<u32, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let lin = UniPoly {
            coeffs: vec![alpha.neg(), Cyclotomic::one(alpha.conductor())],
        };
        let mut m = 0;
        let mut p = self.clone();
        loop {
            let (q, r) = p.divrem(&lin)?;
            if !r.is_zero() {
                return Ok(m);
            }
            m += 1;
            p = q;
        }
    }

    /// Largest `m` such that `divisor^m` divides the polynomial exactly.
    pub fn adic_valuation(&self, divisor: &Self) -> Result<u32, ExactError> {
        if self.is_zero() {
            return Err(ExactError::ZeroPolynomial);
        }
        let mut m = 0;
        let mut p = self.clone();
        loop {
            let (q, r) = p.divrem(divisor)?;
            if !r.is_zero() {
                return Ok(m);
            }
            m += 1;
            p = q;
        }
    }
}

/// The `e`-th cyclotomic polynomial with integer coefficients.
pub fn cyclotomic_polynomial(e: u32) -> UniPoly {
    assert!(e >= 1);
    let coeffs: Vec<Rational> = phi_poly_coeffs(e)
        .into_iter()
        .map(Rational::from_integer)
        .collect();
    UniPoly::from_rationals(&coeffs)
}

impl fmt::Display for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            let (sign, mag) = if c.is_rational() {
                let cs = super::format_rational(&c.to_rational().unwrap());
                match cs.strip_prefix('-') {
                    Some(rest) => ("-", rest.to_string()),
                    None => ("+", cs),
                }
            } else {
                ("+", format!("({})", c))
            };
            if first {
                if sign == "-" {
                    write!(f, "-")?;
                }
                first = false;
            } else {
                write!(f, " {} ", sign)?;
            }
            match k {
                0 => write!(f, "{}", mag)?,
                _ => {
                    if mag != "1" {
                        write!(f, "{}*", mag)?;
                    }
                    if k == 1 {
                        write!(f, "q")?;
                    } else {
                        write!(f, "q^{}", k)?;
                    }
                }
            }
        }
        Ok(())
    }
}

impl fmt::Debug for UniPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn cyclotomic_polys_small() {
        assert_eq!(cyclotomic_polynomial(1), UniPoly::from_ints(&[-1, 1]));
        assert_eq!(cyclotomic_polynomial(4), UniPoly::from_ints(&[1, 0, 1]));
        assert_eq!(cyclotomic_polynomial(6), UniPoly::from_ints(&[1, -1, 1]));
    }

    #[test]
    fn product_over_divisors_is_q_pow_minus_one() {
        for n in 1..=60u32 {
            let mut prod = UniPoly::one();
            let mut degree_sum = 0;
            for e in 1..=n {
                if n % e == 0 {
                    let phi = cyclotomic_polynomial(e);
                    degree_sum += phi.degree().unwrap();
                    prod = prod.mul(&phi);
                }
            }
            assert_eq!(prod, UniPoly::q_pow_minus_one(n));
            assert_eq!(degree_sum, n as usize);
        }
    }

    #[test]
    fn root_multiplicity_examples() {
        // q^2 * (q - 4): multiplicity 2 at 0.
        let p = UniPoly::from_ints(&[0, 0, -4, 1]);
        assert_eq!(p.root_multiplicity(&Cyclotomic::zero(1)).unwrap(), 2);
        // Phi_4 has a simple root at zeta_4.
        let i = Cyclotomic::root_of_unity(4, 1);
        assert_eq!(cyclotomic_polynomial(4).root_multiplicity(&i).unwrap(), 1);
        // q^2 + q at -1.
        let p = UniPoly::from_ints(&[0, 1, 1]);
        assert_eq!(
            p.root_multiplicity(&Cyclotomic::from_rational(rat(-1)))
                .unwrap(),
            1
        );
        assert!(UniPoly::zero()
            .root_multiplicity(&Cyclotomic::zero(1))
            .is_err());
    }

    #[test]
    fn evaluate_examples() {
        let p = UniPoly::from_ints(&[0, 1, 1]);
        assert!(p.evaluate(&Cyclotomic::from_rational(rat(-1))).is_zero());
        assert_eq!(
            p.evaluate(&Cyclotomic::from_rational(rat(2))),
            Cyclotomic::from_rational(rat(6))
        );
    }

    #[test]
    fn mul_and_display() {
        let a = UniPoly::from_ints(&[-1, 1]);
        let b = UniPoly::from_ints(&[1, 1]);
        let p = a.mul(&b);
        assert_eq!(p, UniPoly::from_ints(&[-1, 0, 1]));
        assert_eq!(p.to_string(), "q^2 - 1");
        assert_eq!(UniPoly::from_ints(&[0, 1, 1]).to_string(), "q^2 + q");
    }

    #[test]
    fn valuation_degree_multiplicative() {
        let p = UniPoly::from_ints(&[0, 0, 3, 1]);
        let r = UniPoly::from_ints(&[0, 5, 1]);
        let prod = p.mul(&r);
        assert_eq!(
            prod.valuation().unwrap(),
            p.valuation().unwrap() + r.valuation().unwrap()
        );
        assert_eq!(
            prod.degree().unwrap(),
            p.degree().unwrap() + r.degree().unwrap()
        );
        assert_eq!(prod.divexact(&r).unwrap(), p);
    }
}
