//! Sparse multivariate polynomials with exact rational coefficients.

use std::collections::BTreeMap;
use std::fmt;

use num_traits::{One, Signed, Zero};

use super::{AlgebraError, Rational};

/// Variable space a polynomial lives in. Source coordinates `x`, curve
/// coefficient symbols `c`, target coordinates `a`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum VarSpace {
    /// Source coordinates `x1..xn` of the mapping.
    Ambient,
    /// Coefficient symbols `c1..cn` of a monomial curve.
    Parameter,
    /// Target coordinates `a1..an` (implicit equations of strata).
    Target,
}

impl VarSpace {
    /// Canonical name of variable `idx` (0-based) in this space.
    pub fn var_name(self, idx: usize) -> String {
        let prefix = match self {
            VarSpace::Ambient => "x",
            VarSpace::Parameter => "c",
            VarSpace::Target => "a",
        };
        format!("{}{}", prefix, idx + 1)
    }
}

/// A power product of variables. Only nonzero exponents are stored; the unit
/// monomial is the empty map.
///
/// Ordered graded-lexicographically: total degree first, then lexicographic
/// with `x1 > x2 > ...`. This fixes one canonical term order everywhere so
/// printed polynomials and reports are byte-deterministic.
#[derive(Debug, Clone, PartialEq, Eq, Hash, Default)]
pub struct Monomial {
    exps: BTreeMap<usize, u32>,
}

impl Monomial {
    /// The unit monomial.
    pub fn one() -> Self {
        Monomial::default()
    }

    /// Single variable `idx` to the given power.
    pub fn var(idx: usize, power: u32) -> Self {
        let mut exps = BTreeMap::new();
        if power > 0 {
            exps.insert(idx, power);
        }
        Monomial { exps }
    }

    pub fn is_one(&self) -> bool {
        self.exps.is_empty()
    }

    pub fn total_degree(&self) -> u32 {
        self.exps.values().sum()
    }

    pub fn exponent(&self, idx: usize) -> u32 {
        self.exps.get(&idx).copied().unwrap_or(0)
    }

    /// Iterate `(variable, exponent)` pairs, ascending variable index.
    pub fn iter(&self) -> impl Iterator<Item = (usize, u32)> + '_ {
        self.exps.iter().map(|(&v, &e)| (v, e))
    }

    /// Largest variable index used, if any.
    pub fn max_var(&self) -> Option<usize> {
        self.exps.keys().next_back().copied()
    }

    /// Product of two monomials.
    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut exps = self.exps.clone();
        for (&v, &e) in &other.exps {
            *exps.entry(v).or_insert(0) += e;
        }
        Monomial { exps }
    }

    /// Divide by `var` once; `None` if the variable does not occur.
    fn div_var(&self, var: usize) -> Option<Monomial> {
        let e = *self.exps.get(&var)?;
        let mut exps = self.exps.clone();
        if e == 1 {
            exps.remove(&var);
        } else {
            exps.insert(var, e - 1);
        }
        Some(Monomial { exps })
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> std::cmp::Ordering {
        use std::cmp::Ordering;
        match self.total_degree().cmp(&other.total_degree()) {
            Ordering::Equal => {}
            ord => return ord,
        }
        // Equal degree: lexicographic with earlier variables dominating.
        let mut a = self.exps.iter();
        let mut b = other.exps.iter();
        loop {
            match (a.next(), b.next()) {
                (None, None) => return Ordering::Equal,
                (None, Some(_)) => return Ordering::Less,
                (Some(_), None) => return Ordering::Greater,
                (Some((&va, &ea)), Some((&vb, &eb))) => {
                    if va != vb {
                        // The monomial with a positive exponent at the earlier
                        // variable wins.
                        return if va < vb { Ordering::Greater } else { Ordering::Less };
                    }
                    if ea != eb {
                        return ea.cmp(&eb);
                    }
                }
            }
        }
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<std::cmp::Ordering> {
        Some(self.cmp(other))
    }
}

/// Sparse multivariate polynomial over [`Rational`] in a tagged variable
/// space. No zero coefficients are stored; terms iterate in the canonical
/// graded-lex order.
#[derive(Debug, Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    space: VarSpace,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(space: VarSpace) -> Self {
        MultiPoly { space, terms: BTreeMap::new() }
    }

    pub fn constant(space: VarSpace, value: Rational) -> Self {
        let mut p = MultiPoly::zero(space);
        if !value.is_zero() {
            p.terms.insert(Monomial::one(), value);
        }
        p
    }

    pub fn from_int(space: VarSpace, value: i64) -> Self {
        MultiPoly::constant(space, Rational::from_integer(value.into()))
    }

    /// The variable `idx` as a polynomial.
    pub fn var(space: VarSpace, idx: usize) -> Self {
        MultiPoly::monomial(space, Monomial::var(idx, 1), Rational::one())
    }

    pub fn monomial(space: VarSpace, m: Monomial, coeff: Rational) -> Self {
        let mut p = MultiPoly::zero(space);
        if !coeff.is_zero() {
            p.terms.insert(m, coeff);
        }
        p
    }

    pub fn space(&self) -> VarSpace {
        self.space
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn is_constant(&self) -> bool {
        self.terms.keys().all(Monomial::is_one)
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn total_degree(&self) -> u32 {
        self.terms.keys().map(Monomial::total_degree).max().unwrap_or(0)
    }

    /// Terms in ascending graded-lex order.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter()
    }

    /// Leading (graded-lex largest) term.
    pub fn leading(&self) -> Option<(&Monomial, &Rational)> {
        self.terms.iter().next_back()
    }

    /// Variable indices occurring with nonzero exponent, sorted.
    pub fn occurring_vars(&self) -> Vec<usize> {
        let mut vars: Vec<usize> = Vec::new();
        for m in self.terms.keys() {
            for (v, _) in m.iter() {
                if let Err(pos) = vars.binary_search(&v) {
                    vars.insert(pos, v);
                }
            }
        }
        vars
    }

    fn insert_term(&mut self, m: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                let sum = e.get().clone() + c;
                if sum.is_zero() {
                    e.remove();
                } else {
                    *e.get_mut() = sum;
                }
            }
        }
    }

    /// Exact sum. Errors when the operands live in different spaces.
    pub fn try_add(&self, other: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        if self.space != other.space {
            return Err(AlgebraError::SpaceMismatch(self.space, other.space));
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.insert_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    /// Exact product. Errors when the operands live in different spaces.
    pub fn try_mul(&self, other: &MultiPoly) -> Result<MultiPoly, AlgebraError> {
        if self.space != other.space {
            return Err(AlgebraError::SpaceMismatch(self.space, other.space));
        }
        let mut out = MultiPoly::zero(self.space);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.insert_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn add(&self, other: &MultiPoly) -> MultiPoly {
        self.try_add(other).expect("space mismatch in add")
    }

    pub fn mul(&self, other: &MultiPoly) -> MultiPoly {
        self.try_mul(other).expect("space mismatch in mul")
    }

    pub fn neg(&self) -> MultiPoly {
        MultiPoly {
            space: self.space,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect(),
        }
    }

    pub fn sub(&self, other: &MultiPoly) -> MultiPoly {
        self.add(&other.neg())
    }

    pub fn scale(&self, k: &Rational) -> MultiPoly {
        if k.is_zero() {
            return MultiPoly::zero(self.space);
        }
        MultiPoly {
            space: self.space,
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c * k)).collect(),
        }
    }

    pub fn pow(&self, k: u32) -> MultiPoly {
        let mut out = MultiPoly::constant(self.space, Rational::one());
        for _ in 0..k {
            out = out.mul(self);
        }
        out
    }

    /// Exact evaluation at a rational point. The point must cover every
    /// variable index used by the polynomial.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, AlgebraError> {
        if let Some(max) = self.terms.keys().filter_map(Monomial::max_var).max() {
            if max >= point.len() {
                return Err(AlgebraError::PointLength { needed: max, got: point.len() });
            }
        }
        let mut acc = Rational::zero();
        for (m, c) in &self.terms {
            let mut term = c.clone();
            for (v, e) in m.iter() {
                for _ in 0..e {
                    term *= &point[v];
                }
            }
            acc += term;
        }
        Ok(acc)
    }

    /// Floating-point evaluation, used only by the numeric oracles.
    pub fn eval_f64(&self, point: &[f64]) -> f64 {
        let mut acc = 0.0;
        for (m, c) in &self.terms {
            let mut term = rational_to_f64(c);
            for (v, e) in m.iter() {
                term *= point[v].powi(e as i32);
            }
            acc += term;
        }
        acc
    }

    /// Formal partial derivative with respect to variable `var`.
    pub fn partial(&self, var: usize) -> MultiPoly {
        let mut out = MultiPoly::zero(self.space);
        for (m, c) in &self.terms {
            let e = m.exponent(var);
            if e == 0 {
                continue;
            }
            let dm = m.div_var(var).expect("exponent checked nonzero");
            out.insert_term(dm, c * Rational::from_integer(e.into()));
        }
        out
    }

    /// Substitute `var = 0`: drop every term in which `var` occurs.
    pub fn substitute_zero(&self, var: usize) -> MultiPoly {
        MultiPoly {
            space: self.space,
            terms: self
                .terms
                .iter()
                .filter(|(m, _)| m.exponent(var) == 0)
                .map(|(m, c)| (m.clone(), c.clone()))
                .collect(),
        }
    }

    /// Rescale so coefficients are coprime integers and the leading
    /// coefficient is positive. Canonical representative of the scalar class.
    pub fn normalized(&self) -> MultiPoly {
        use num_bigint::BigInt;
        use num_integer::Integer as _;
        if self.is_zero() {
            return self.clone();
        }
        let mut denom_lcm = BigInt::one();
        for c in self.terms.values() {
            denom_lcm = denom_lcm.lcm(c.denom());
        }
        let mut numer_gcd = BigInt::zero();
        for c in self.terms.values() {
            let scaled = c.numer() * (&denom_lcm / c.denom());
            numer_gcd = numer_gcd.gcd(&scaled);
        }
        let mut factor = Rational::new(denom_lcm, numer_gcd);
        if self.leading().map(|(_, c)| c.is_negative()).unwrap_or(false) {
            factor = -factor;
        }
        self.scale(&factor)
    }

    /// `true` when `other` equals a nonzero scalar multiple of `self`.
    pub fn proportional_to(&self, other: &MultiPoly) -> bool {
        self.normalized() == other.normalized()
    }
}

pub(crate) fn rational_to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

impl fmt::Display for MultiPoly {
    /// Canonical text form: terms in descending graded-lex order, integer or
    /// `p/q` coefficients, explicit `*` between factors, `^` for powers.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (i, (m, c)) in self.terms.iter().rev().enumerate() {
            let neg = c.is_negative();
            let abs = if neg { -c.clone() } else { c.clone() };
            if i == 0 {
                if neg {
                    write!(f, "-")?;
                }
            } else if neg {
                write!(f, " - ")?;
            } else {
                write!(f, " + ")?;
            }
            let coeff_is_one = abs.is_one();
            if m.is_one() {
                write!(f, "{}", format_rational(&abs))?;
            } else {
                let mut first_factor = true;
                if !coeff_is_one {
                    write!(f, "{}", format_rational(&abs))?;
                    first_factor = false;
                }
                for (v, e) in m.iter() {
                    if !first_factor {
                        write!(f, "*")?;
                    }
                    first_factor = false;
                    write!(f, "{}", self.space.var_name(v))?;
                    if e > 1 {
                        write!(f, "^{}", e)?;
                    }
                }
            }
        }
        Ok(())
    }
}

fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64) -> Rational {
        Rational::from_integer(n.into())
    }

    fn x(i: usize) -> MultiPoly {
        MultiPoly::var(VarSpace::Ambient, i)
    }

    fn c(i: usize) -> MultiPoly {
        MultiPoly::var(VarSpace::Parameter, i)
    }

    #[test]
    fn additive_inverse_cancels() {
        let p = x(0).add(&x(0).neg());
        assert!(p.is_zero());
    }

    #[test]
    fn difference_of_squares() {
        let one = MultiPoly::from_int(VarSpace::Ambient, 1);
        let p = x(0).add(&one).mul(&x(0).sub(&one));
        let expected = x(0).mul(&x(0)).sub(&one);
        assert_eq!(p, expected);
    }

    #[test]
    fn squaring_parameter_product() {
        let c1c2 = c(0).mul(&c(1));
        let sq = c1c2.mul(&c1c2);
        let expected = c(0).pow(2).mul(&c(1).pow(2));
        assert_eq!(sq, expected);
        assert_eq!(sq.to_string(), "c1^2*c2^2");
    }

    #[test]
    fn eval_examples() {
        let one = MultiPoly::from_int(VarSpace::Ambient, 1);
        let p = x(0).mul(&x(0)).sub(&one);
        assert_eq!(p.eval(&[q(1)]).unwrap(), q(0));

        let m = c(0).mul(&c(1).pow(2)).mul(&c(2));
        assert_eq!(m.eval(&[q(2), q(1), q(3)]).unwrap(), q(6));

        let five = MultiPoly::from_int(VarSpace::Parameter, 5);
        assert_eq!(five.eval(&[]).unwrap(), q(5));
    }

    #[test]
    fn eval_length_mismatch_is_error() {
        let p = x(1);
        assert!(matches!(p.eval(&[q(1)]), Err(AlgebraError::PointLength { .. })));
    }

    #[test]
    fn space_mismatch_is_error() {
        assert!(matches!(x(0).try_add(&c(0)), Err(AlgebraError::SpaceMismatch(..))));
        assert!(matches!(x(0).try_mul(&c(0)), Err(AlgebraError::SpaceMismatch(..))));
    }

    #[test]
    fn partial_derivatives() {
        // d(x1^2 x2)/dx1 = 2 x1 x2
        let p = x(0).pow(2).mul(&x(1));
        assert_eq!(p.partial(0), x(0).mul(&x(1)).scale(&q(2)));
        // d(c2)/dc1 = 0
        assert!(c(1).partial(0).is_zero());
        // d((c1 c2)^3)/dc2 = 3 c1^3 c2^2
        let p = c(0).mul(&c(1)).pow(3);
        let expected = c(0).pow(3).mul(&c(1).pow(2)).scale(&q(3));
        assert_eq!(p.partial(1), expected);
    }

    #[test]
    fn graded_lex_order() {
        // x1^2 > x1*x2 > x2^2 > x1 > x2 > 1
        let m = |a: u32, b: u32| Monomial::var(0, a).mul(&Monomial::var(1, b));
        let mut mons = vec![m(0, 0), m(1, 0), m(0, 1), m(2, 0), m(1, 1), m(0, 2)];
        mons.sort();
        mons.reverse();
        assert_eq!(mons, vec![m(2, 0), m(1, 1), m(0, 2), m(1, 0), m(0, 1), m(0, 0)]);
    }

    #[test]
    fn display_canonical() {
        let p = x(0).pow(2).scale(&q(3)).add(&x(1).neg()).add(&MultiPoly::from_int(VarSpace::Ambient, 7));
        assert_eq!(p.to_string(), "3*x1^2 - x2 + 7");
        assert_eq!(MultiPoly::zero(VarSpace::Ambient).to_string(), "0");
        assert_eq!(x(0).neg().to_string(), "-x1");
    }

    #[test]
    fn normalization_is_canonical() {
        let p = x(0).pow(3).sub(&x(1).pow(2));
        let scaled = p.scale(&Rational::new((-6).into(), 35.into()));
        assert_eq!(scaled.normalized(), p);
        assert!(scaled.proportional_to(&p));
        assert!(!x(0).proportional_to(&x(1)));
    }

    #[test]
    fn substitute_zero_drops_terms() {
        let p = c(0).mul(&c(1)).add(&c(1).pow(2));
        assert_eq!(p.substitute_zero(0), c(1).pow(2));
        assert!(p.substitute_zero(1).is_zero());
    }
}
