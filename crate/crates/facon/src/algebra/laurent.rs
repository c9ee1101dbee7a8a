//! Laurent polynomials in the curve parameter `u`.
//!
//! A substituted mapping component `F_k(c_1 u^{e_1}, ..., c_n u^{e_n})`
//! groups exactly by integer powers of `u`, with coefficients that are
//! polynomials in the curve coefficient symbols `c_i`. The `u`-grading
//! carries the divergence/decay degrees of the curve.

use std::collections::BTreeMap;
use std::fmt;

use super::{MultiPoly, VarSpace};

/// Laurent polynomial in `u` with [`MultiPoly`] coefficients in the
/// parameter space. Entries with identically-zero coefficient are never
/// stored.
#[derive(Debug, Clone, PartialEq, Eq, Default)]
pub struct ULaurentPoly {
    terms: BTreeMap<i64, MultiPoly>,
}

impl ULaurentPoly {
    pub fn zero() -> Self {
        ULaurentPoly::default()
    }

    /// Add `coeff * u^exp`.
    pub fn insert_add(&mut self, exp: i64, coeff: MultiPoly) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(exp) {
            Entry::Vacant(e) => {
                e.insert(coeff);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().add(&coeff);
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms as `(u-exponent, coefficient)`, ascending exponent.
    pub fn terms(&self) -> impl Iterator<Item = (i64, &MultiPoly)> {
        self.terms.iter().map(|(&e, p)| (e, p))
    }

    /// Largest `u`-exponent present.
    pub fn max_exponent(&self) -> Option<i64> {
        self.terms.keys().next_back().copied()
    }

    /// `true` when no positive power of `u` carries a nonzero coefficient,
    /// so the value converges as `u -> infinity` for generic coefficients.
    pub fn converges(&self) -> bool {
        self.max_exponent().map(|e| e <= 0).unwrap_or(true)
    }

    /// Coefficient of `u^0` (the limit as `u -> infinity` when [`converges`]
    /// holds); the zero polynomial if absent.
    ///
    /// [`converges`]: ULaurentPoly::converges
    pub fn constant_coefficient(&self) -> MultiPoly {
        self.terms.get(&0).cloned().unwrap_or_else(|| MultiPoly::zero(VarSpace::Parameter))
    }
}

impl fmt::Display for ULaurentPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (e, p)) in self.terms.iter().rev().enumerate() {
            if i > 0 {
                write!(f, " + ")?;
            }
            write!(f, "({})", p)?;
            match e {
                0 => {}
                1 => write!(f, "*u")?,
                _ => write!(f, "*u^{}", e)?,
            }
        }
        Ok(())
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::algebra::Rational;
    use num_traits::One;

    fn c(i: usize) -> MultiPoly {
        MultiPoly::var(VarSpace::Parameter, i)
    }

    #[test]
    fn zero_coefficients_never_stored() {
        let mut l = ULaurentPoly::zero();
        l.insert_add(2, c(0));
        l.insert_add(2, c(0).neg());
        assert!(l.is_zero());
        assert!(l.converges());
    }

    #[test]
    fn convergence_and_limit() {
        let mut l = ULaurentPoly::zero();
        l.insert_add(-1, c(0));
        assert!(l.converges());
        assert!(l.constant_coefficient().is_zero());

        let mut l = ULaurentPoly::zero();
        l.insert_add(0, c(0).mul(&c(1)).mul(&c(2)));
        assert!(l.converges());
        assert_eq!(l.constant_coefficient(), c(0).mul(&c(1)).mul(&c(2)));

        let mut l = ULaurentPoly::zero();
        l.insert_add(1, c(0).mul(&c(1)));
        l.insert_add(-1, c(2));
        assert!(!l.converges());
    }

    #[test]
    fn display_orders_descending() {
        let mut l = ULaurentPoly::zero();
        l.insert_add(-2, MultiPoly::constant(VarSpace::Parameter, Rational::one()));
        l.insert_add(1, c(1));
        assert_eq!(l.to_string(), "(c2)*u + (1)*u^-2");
    }
}
