//! Monomial test curves and their limits.
//!
//! A curve `gamma(u) = (c_1 u^{e_1}, ..., c_n u^{e_n})` with symbolic
//! coefficients is substituted into the mapping; grouping by powers of `u`
//! decides, for generic coefficients, whether each component diverges or
//! converges, and the `u^0` coefficients parametrize the limit point. The
//! sign pattern of the exponent vector labels the way the curve tends to
//! infinity; the magnitudes form its degree tuple, and curves with
//! proportional tuples are equivalent.

use std::fmt;

use crate::algebra::{primitive_vector, MultiPoly, Monomial, Rational, ULaurentPoly, VarSpace};
use crate::parser::PolynomialMapping;

/// Errors from curve classification.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum CurveError {
    /// Exponent vector with no strictly positive entry: the curve does not
    /// tend to infinity.
    NoPositiveEntry,
    /// A façon was requested for a curve whose image diverges.
    DivergentCurve,
    /// Exponent vector length differs from the mapping dimension.
    DimensionMismatch { expected: usize, got: usize },
}

impl fmt::Display for CurveError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            CurveError::NoPositiveEntry => {
                write!(f, "exponent vector needs at least one positive entry")
            }
            CurveError::DivergentCurve => write!(f, "curve image diverges for generic coefficients"),
            CurveError::DimensionMismatch { expected, got } => {
                write!(f, "exponent vector of length {got}, mapping has {expected} variables")
            }
        }
    }
}

impl std::error::Error for CurveError {}

/// Integer exponent vector `e` of a monomial curve. At least one entry is
/// strictly positive, so some coordinate tends to infinity.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct ExponentVector(Vec<i64>);

impl ExponentVector {
    pub fn new(e: Vec<i64>) -> Result<Self, CurveError> {
        if e.iter().all(|&x| x <= 0) {
            return Err(CurveError::NoPositiveEntry);
        }
        Ok(ExponentVector(e))
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    /// The curve `gamma_{k e}` reparametrizes `gamma_e` via `u -> u^k`.
    pub fn scaled(&self, k: i64) -> ExponentVector {
        debug_assert!(k >= 1);
        ExponentVector(self.0.iter().map(|&x| x * k).collect())
    }
}

impl fmt::Display for ExponentVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let items: Vec<String> = self.0.iter().map(|x| x.to_string()).collect();
        write!(f, "({})", items.join(","))
    }
}

/// Outcome of letting `u -> infinity` in one substituted component.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum LimitOutcome {
    /// Some positive power of `u` survives with a not-identically-zero
    /// coefficient, so the component diverges for generic coefficients.
    DivergesGeneric,
    /// Every surviving power is `<= 0`; the limit is the `u^0` coefficient.
    Converges(MultiPoly),
}

/// The label of a way of tending to infinity: coordinates going to infinity,
/// coordinates decaying to zero, and the remaining free coordinates whose
/// limits vary with the target point. Indices are 1-based and sorted.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Facon {
    infinity: Vec<usize>,
    zero: Vec<usize>,
    free: Vec<usize>,
}

impl Facon {
    /// Classify the sign pattern of an exponent vector.
    pub fn from_exponents(e: &ExponentVector) -> Result<Self, CurveError> {
        let mut infinity = Vec::new();
        let mut zero = Vec::new();
        let mut free = Vec::new();
        for (i, &x) in e.entries().iter().enumerate() {
            if x > 0 {
                infinity.push(i + 1);
            } else if x < 0 {
                zero.push(i + 1);
            } else {
                free.push(i + 1);
            }
        }
        if infinity.is_empty() {
            return Err(CurveError::NoPositiveEntry);
        }
        Ok(Facon { infinity, zero, free })
    }

    pub fn infinity_indices(&self) -> &[usize] {
        &self.infinity
    }

    pub fn zero_indices(&self) -> &[usize] {
        &self.zero
    }

    pub fn free_indices(&self) -> &[usize] {
        &self.free
    }

    pub fn n(&self) -> usize {
        self.infinity.len() + self.zero.len() + self.free.len()
    }

    /// Label in the established notation, e.g. `(1,3)[2]`.
    pub fn label(&self) -> String {
        let join = |v: &[usize]| v.iter().map(|i| i.to_string()).collect::<Vec<_>>().join(",");
        format!("({})[{}]", join(&self.infinity), join(&self.zero))
    }
}

impl fmt::Display for Facon {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.label())
    }
}

/// Divergence and decay degrees of a curve: `e_i` for coordinates tending to
/// infinity and `-e_j` for coordinates tending to zero, in index order.
/// Curves with proportional tuples are equivalent; the primitive form (gcd 1)
/// is the canonical representative of the class.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct DegreeTuple {
    infinity: Vec<i64>,
    zero: Vec<i64>,
}

impl DegreeTuple {
    pub fn from_exponents(e: &ExponentVector) -> Result<Self, CurveError> {
        let infinity: Vec<i64> = e.entries().iter().copied().filter(|&x| x > 0).collect();
        let zero: Vec<i64> = e.entries().iter().copied().filter(|&x| x < 0).map(|x| -x).collect();
        if infinity.is_empty() {
            return Err(CurveError::NoPositiveEntry);
        }
        Ok(DegreeTuple { infinity, zero })
    }

    pub fn infinity_degrees(&self) -> &[i64] {
        &self.infinity
    }

    pub fn zero_degrees(&self) -> &[i64] {
        &self.zero
    }

    /// Divide all entries by their gcd.
    pub fn primitive(&self) -> DegreeTuple {
        let mut all: Vec<i64> = self.infinity.clone();
        all.extend_from_slice(&self.zero);
        let prim = primitive_vector(&all).expect("tuple entries are positive");
        DegreeTuple {
            infinity: prim[..self.infinity.len()].to_vec(),
            zero: prim[self.infinity.len()..].to_vec(),
        }
    }

    pub fn is_proportional_to(&self, other: &DegreeTuple) -> bool {
        self.infinity.len() == other.infinity.len()
            && self.zero.len() == other.zero.len()
            && self.primitive() == other.primitive()
    }
}

impl fmt::Display for DegreeTuple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let join = |v: &[i64]| v.iter().map(|x| x.to_string()).collect::<Vec<_>>().join(",");
        write!(f, "({};{})", join(&self.infinity), join(&self.zero))
    }
}

/// Exact limit of `F` along a converging curve family: `n` polynomials in
/// the coefficient symbols, the symbols that actually occur, and the
/// coefficients required nonzero for the curve to genuinely carry its label.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LimitMapping {
    components: Vec<MultiPoly>,
    free_params: Vec<usize>,
    constraints: Vec<usize>,
}

impl LimitMapping {
    pub fn new(components: Vec<MultiPoly>, constraints: Vec<usize>) -> Self {
        let mut free_params = Vec::new();
        for p in &components {
            for v in p.occurring_vars() {
                if let Err(pos) = free_params.binary_search(&v) {
                    free_params.insert(pos, v);
                }
            }
        }
        LimitMapping { components, free_params, constraints }
    }

    pub fn components(&self) -> &[MultiPoly] {
        &self.components
    }

    /// Indices (0-based) of coefficient symbols occurring in the components.
    pub fn free_params(&self) -> &[usize] {
        &self.free_params
    }

    /// Indices (0-based) of coefficients that must be nonzero.
    pub fn constraints(&self) -> &[usize] {
        &self.constraints
    }

    /// Exact evaluation at a full coefficient vector.
    pub fn eval(&self, coeffs: &[Rational]) -> Vec<Rational> {
        self.components.iter().map(|p| p.eval(coeffs).expect("coefficient vector covers all symbols")).collect()
    }

    /// Substitute one coefficient by zero in every component.
    pub fn degenerate(&self, param: usize) -> LimitMapping {
        let components: Vec<MultiPoly> =
            self.components.iter().map(|p| p.substitute_zero(param)).collect();
        let constraints = self.constraints.iter().copied().filter(|&i| i != param).collect();
        LimitMapping::new(components, constraints)
    }

    pub fn component_strings(&self) -> Vec<String> {
        self.components.iter().map(|p| p.to_string()).collect()
    }
}

/// Result of taking the limit of `F` along a curve family.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Limit {
    Converges(LimitMapping),
    Divergent,
}

/// Substitute `x_i -> c_i u^{e_i}` into every component of `F`, grouping by
/// powers of `u`. Exact.
pub fn substitute(f: &PolynomialMapping, e: &ExponentVector) -> Vec<ULaurentPoly> {
    assert_eq!(f.n(), e.len(), "exponent vector length must match mapping dimension");
    f.components()
        .iter()
        .map(|p| {
            let mut out = ULaurentPoly::zero();
            for (m, coeff) in p.terms() {
                let mut u_exp: i64 = 0;
                let mut c_mon = Monomial::one();
                for (v, k) in m.iter() {
                    u_exp += e.entries()[v] * i64::from(k);
                    c_mon = c_mon.mul(&Monomial::var(v, k));
                }
                out.insert_add(u_exp, MultiPoly::monomial(VarSpace::Parameter, c_mon, coeff.clone()));
            }
            out
        })
        .collect()
}

/// Decide convergence of one substituted component for generic coefficients.
pub fn classify_limit(l: &ULaurentPoly) -> LimitOutcome {
    if l.converges() {
        LimitOutcome::Converges(l.constant_coefficient())
    } else {
        LimitOutcome::DivergesGeneric
    }
}

/// Limit of `F` along the curve family `e`, or `Divergent` when any
/// component diverges generically. The genericity constraints record that
/// `c_i != 0` is required for every coordinate with `e_i != 0`.
pub fn limit_mapping(f: &PolynomialMapping, e: &ExponentVector) -> Limit {
    let mut components = Vec::with_capacity(f.n());
    for l in substitute(f, e) {
        match classify_limit(&l) {
            LimitOutcome::DivergesGeneric => return Limit::Divergent,
            LimitOutcome::Converges(v) => components.push(v),
        }
    }
    let constraints: Vec<usize> =
        e.entries().iter().enumerate().filter(|(_, &x)| x != 0).map(|(i, _)| i).collect();
    Limit::Converges(LimitMapping::new(components, constraints))
}

/// The façon of a converging curve family. Errors when the family diverges.
pub fn facon_of(f: &PolynomialMapping, e: &ExponentVector) -> Result<Facon, CurveError> {
    if e.len() != f.n() {
        return Err(CurveError::DimensionMismatch { expected: f.n(), got: e.len() });
    }
    match limit_mapping(f, e) {
        Limit::Divergent => Err(CurveError::DivergentCurve),
        Limit::Converges(_) => Facon::from_exponents(e),
    }
}

/// The degree tuple of a curve family together with its primitive class.
pub fn associated_tuple(e: &ExponentVector) -> Result<(DegreeTuple, DegreeTuple), CurveError> {
    let tuple = DegreeTuple::from_exponents(e)?;
    let primitive = tuple.primitive();
    Ok((tuple, primitive))
}
