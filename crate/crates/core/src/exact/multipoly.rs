//! Sparse multivariate polynomials over the rationals.
//!
//! Terms are kept in a sorted map from exponent tuples to nonzero rational
//! coefficients, so iteration order and printing are deterministic.

use std::collections::BTreeMap;
use std::fmt;

use num::Zero;

use super::{format_rational, Cyclotomic, ExactError, Rational, UniPoly};

#[derive(Clone, PartialEq, Eq)]
pub struct MultiPoly {
    variables: Vec<String>,
    /// Exponent tuple (one entry per variable) -> nonzero coefficient.
    terms: BTreeMap<Vec<u32>, Rational>,
}

/// Assignment of one variable for [`MultiPoly::collapse`]: either a constant
/// or a univariate polynomial in the single survivor variable.
#[derive(Clone)]
pub enum VarAssignment {
    Constant(Rational),
    Poly(UniPoly),
}

impl MultiPoly {
    pub fn zero(variables: &[&str]) -> Self {
        MultiPoly {
            variables: variables.iter().map(|s| s.to_string()).collect(),
            terms: BTreeMap::new(),
        }
    }

    /// Builds a polynomial from `(coefficient, exponents)` pairs.
    pub fn new(variables: &[&str], terms: &[(Rational, &[u32])]) -> Result<Self, ExactError> {
        let mut p = Self::zero(variables);
        for (c, exps) in terms {
            if exps.len() != p.variables.len() {
                return Err(ExactError::ShapeMismatch(format!(
                    "term has {} exponents for {} variables",
                    exps.len(),
                    p.variables.len()
                )));
            }
            p.add_term(exps.to_vec(), c.clone());
        }
        Ok(p)
    }

    /// Convenience constructor with integer coefficients.
    pub fn from_int_terms(variables: &[&str], terms: &[(i64, &[u32])]) -> Self {
        let owned: Vec<(Rational, &[u32])> = terms
            .iter()
            .map(|(c, e)| (super::rat(*c), *e))
            .collect();
        Self::new(variables, &owned).expect("exponent tuples must match variable count")
    }

    fn add_term(&mut self, exps: Vec<u32>, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exps) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    pub fn variables(&self) -> &[String] {
        &self.variables
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Vec<u32>, &Rational)> {
        self.terms.iter()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    fn var_index(&self, var: &str) -> Result<usize, ExactError> {
        self.variables
            .iter()
            .position(|v| v == var)
            .ok_or_else(|| ExactError::ShapeMismatch(format!("unknown variable {var:?}")))
    }

    pub fn add(&self, other: &Self) -> Result<Self, ExactError> {
        if self.variables != other.variables {
            return Err(ExactError::ShapeMismatch(
                "variable sets differ".to_string(),
            ));
        }
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn neg(&self) -> Self {
        MultiPoly {
            variables: self.variables.clone(),
            terms: self
                .terms
                .iter()
                .map(|(e, c)| (e.clone(), -c.clone()))
                .collect(),
        }
    }

    pub fn mul(&self, other: &Self) -> Result<Self, ExactError> {
        if self.variables != other.variables {
            return Err(ExactError::ShapeMismatch(
                "variable sets differ".to_string(),
            ));
        }
        let mut out = Self::zero(&self.variables.iter().map(|s| s.as_str()).collect::<Vec<_>>());
        for (ea, ca) in &self.terms {
            for (eb, cb) in &other.terms {
                let exps: Vec<u32> = ea.iter().zip(eb).map(|(x, y)| x + y).collect();
                out.add_term(exps, ca * cb);
            }
        }
        Ok(out)
    }

    /// Evaluates at a full rational point (one value per variable).
    pub fn evaluate(&self, point: &[Rational]) -> Result<Rational, ExactError> {
        if point.len() != self.variables.len() {
            return Err(ExactError::ShapeMismatch(format!(
                "point has {} coordinates for {} variables",
                point.len(),
                self.variables.len()
            )));
        }
        let mut acc = Rational::zero();
        for (exps, c) in &self.terms {
            let mut term = c.clone();
            for (e, x) in exps.iter().zip(point) {
                for _ in 0..*e {
                    term *= x;
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Substitutes constants for some variables; the substituted variables
    /// are removed from the result's variable list.
    pub fn substitute(&self, assignments: &[(&str, Rational)]) -> Result<Self, ExactError> {
        let mut indices = Vec::new();
        for (var, _) in assignments {
            indices.push(self.var_index(var)?);
        }
        let keep: Vec<usize> = (0..self.variables.len())
            .filter(|i| !indices.contains(i))
            .collect();
        let kept_vars: Vec<&str> = keep.iter().map(|&i| self.variables[i].as_str()).collect();
        let mut out = Self::zero(&kept_vars);
        for (exps, c) in &self.terms {
            let mut coeff = c.clone();
            for (&idx, (_, value)) in indices.iter().zip(assignments) {
                for _ in 0..exps[idx] {
                    coeff *= value;
                }
                if coeff.is_zero() {
                    break;
                }
            }
            if coeff.is_zero() {
                continue;
            }
            let new_exps: Vec<u32> = keep.iter().map(|&i| exps[i]).collect();
            out.add_term(new_exps, coeff);
        }
        Ok(out)
    }

    /// Collapses the polynomial to a univariate polynomial by assigning every
    /// variable either a constant or a polynomial in one survivor variable.
    pub fn collapse(&self, assignments: &[(&str, VarAssignment)]) -> Result<UniPoly, ExactError> {
        if assignments.len() != self.variables.len() {
            return Err(ExactError::ShapeMismatch(
                "every variable needs an assignment".to_string(),
            ));
        }
        let mut per_var = Vec::with_capacity(self.variables.len());
        for var in &self.variables {
            let a = assignments
                .iter()
                .find(|(v, _)| v == var)
                .ok_or_else(|| ExactError::ShapeMismatch(format!("missing variable {var:?}")))?;
            per_var.push(match &a.1 {
                VarAssignment::Constant(r) => {
                    UniPoly::constant(Cyclotomic::from_rational(r.clone()))
                }
                VarAssignment::Poly(p) => p.clone(),
            });
        }
        let mut acc = UniPoly::zero();
        for (exps, c) in &self.terms {
            let mut term = UniPoly::constant(Cyclotomic::from_rational(c.clone()));
            for (e, base) in exps.iter().zip(&per_var) {
                for _ in 0..*e {
                    term = term.mul(base);
                }
                if term.is_zero() {
                    break;
                }
            }
            acc = acc.add(&term);
        }
        Ok(acc)
    }

    /// The common weighted degree of all terms under the given per-variable
    /// weights, or `None` if the polynomial mixes weights (or is zero).
    pub fn weighted_degree(&self, weights: &[i64]) -> Option<i64> {
        assert_eq!(weights.len(), self.variables.len());
        let mut degree = None;
        for exps in self.terms.keys() {
            let w: i64 = exps
                .iter()
                .zip(weights)
                .map(|(&e, &w)| e as i64 * w)
                .sum();
            match degree {
                None => degree = Some(w),
                Some(d) if d != w => return None,
                _ => {}
            }
        }
        degree
    }
}

impl fmt::Display for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (exps, c) in &self.terms {
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
            let monomial: Vec<String> = exps
                .iter()
                .zip(&self.variables)
                .filter(|(&e, _)| e > 0)
                .map(|(&e, v)| {
                    if e == 1 {
                        v.clone()
                    } else {
                        format!("{v}^{e}")
                    }
                })
                .collect();
            if monomial.is_empty() {
                write!(f, "{}", mag)?;
            } else {
                if mag != "1" {
                    write!(f, "{}*", mag)?;
                }
                write!(f, "{}", monomial.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::exact::rat;

    #[test]
    fn term_erasure_on_substitution() {
        // a*b + 12*c*e with a = b = 0 leaves 12*c*e.
        let p = MultiPoly::from_int_terms(
            &["a", "b", "c", "e"],
            &[(1, &[1, 1, 0, 0]), (12, &[0, 0, 1, 1])],
        );
        let q = p.substitute(&[("a", rat(0)), ("b", rat(0))]).unwrap();
        assert_eq!(q.variables(), &["c".to_string(), "e".to_string()]);
        assert_eq!(q, MultiPoly::from_int_terms(&["c", "e"], &[(12, &[1, 1])]));
    }

    #[test]
    fn ring_ops_and_eval() {
        let x = MultiPoly::from_int_terms(&["x", "y"], &[(1, &[1, 0])]);
        let y = MultiPoly::from_int_terms(&["x", "y"], &[(1, &[0, 1])]);
        let p = x.add(&y).unwrap().mul(&x.add(&y.neg()).unwrap()).unwrap();
        // (x+y)(x-y) = x^2 - y^2
        assert_eq!(
            p,
            MultiPoly::from_int_terms(&["x", "y"], &[(1, &[2, 0]), (-1, &[0, 2])])
        );
        assert_eq!(p.evaluate(&[rat(3), rat(2)]).unwrap(), rat(5));
    }

    #[test]
    fn weighted_degree_detects_mixing() {
        let p = MultiPoly::from_int_terms(&["x", "y"], &[(1, &[2, 0]), (-1, &[0, 2])]);
        assert_eq!(p.weighted_degree(&[1, -1]), None);
        assert_eq!(p.weighted_degree(&[1, 1]), Some(2));
    }

    #[test]
    fn collapse_to_unipoly() {
        // x*y + e^2 with x -> e, y -> e+1 gives 2e^2 + e.
        let p = MultiPoly::from_int_terms(&["x", "y", "e"], &[(1, &[1, 1, 0]), (1, &[0, 0, 2])]);
        let u = p
            .collapse(&[
                ("x", VarAssignment::Poly(UniPoly::var())),
                ("y", VarAssignment::Poly(UniPoly::from_ints(&[1, 1]))),
                ("e", VarAssignment::Poly(UniPoly::var())),
            ])
            .unwrap();
        assert_eq!(u, UniPoly::from_ints(&[0, 1, 2]));
    }

    #[test]
    fn variable_mismatch_is_an_error() {
        let p = MultiPoly::from_int_terms(&["x"], &[(1, &[1])]);
        let q = MultiPoly::from_int_terms(&["y"], &[(1, &[1])]);
        assert!(p.add(&q).is_err());
        assert!(p.substitute(&[("z", rat(0))]).is_err());
    }
}
