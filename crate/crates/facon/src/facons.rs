//! Bounded enumeration of curve families and the façon catalog.
//!
//! All exponent vectors in the box `[-E, E]^n` with at least one positive
//! entry are tested; the admissible ones are grouped by façon and, within a
//! façon, by proportionality class of their degree tuples. The catalog also
//! exposes the closed-form bound on the number of distinct façons and a
//! dominance test for the mapping.

use std::collections::BTreeMap;

use crate::algebra::MultiPoly;
use crate::curves::{
    associated_tuple, limit_mapping, DegreeTuple, ExponentVector, Facon, Limit, LimitMapping,
};
use crate::parser::PolynomialMapping;

/// One equivalence class of curves within a façon: the primitive degree
/// tuple, the lexicographically smallest exponent vector realizing it inside
/// the box, and the exact limit mapping (identical for every member of the
/// class).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaconClass {
    pub tuple: DegreeTuple,
    pub representative: ExponentVector,
    pub limit: LimitMapping,
}

/// Catalog of façons of a mapping within an enumeration box.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct FaconCatalog {
    entries: BTreeMap<Facon, Vec<FaconClass>>,
    bound: i64,
}

impl FaconCatalog {
    pub fn bound(&self) -> i64 {
        self.bound
    }

    pub fn is_empty(&self) -> bool {
        self.entries.is_empty()
    }

    pub fn facon_count(&self) -> usize {
        self.entries.len()
    }

    pub fn facons(&self) -> impl Iterator<Item = &Facon> {
        self.entries.keys()
    }

    pub fn labels(&self) -> Vec<String> {
        self.entries.keys().map(Facon::label).collect()
    }

    pub fn classes(&self, facon: &Facon) -> &[FaconClass] {
        self.entries.get(facon).map(Vec::as_slice).unwrap_or(&[])
    }

    pub fn iter(&self) -> impl Iterator<Item = (&Facon, &[FaconClass])> {
        self.entries.iter().map(|(f, c)| (f, c.as_slice()))
    }
}

/// All exponent vectors in `[-bound, bound]^n` with at least one strictly
/// positive entry, in ascending lexicographic order.
pub fn enumerate_exponents(n: usize, bound: i64) -> Vec<ExponentVector> {
    assert!(n >= 1 && bound >= 1);
    let mut out = Vec::new();
    let mut current = vec![-bound; n];
    loop {
        if current.iter().any(|&x| x > 0) {
            out.push(ExponentVector::new(current.clone()).expect("positive entry checked"));
        }
        // Odometer increment, last coordinate fastest.
        let mut i = n;
        loop {
            if i == 0 {
                return out;
            }
            i -= 1;
            if current[i] < bound {
                current[i] += 1;
                for x in current.iter_mut().skip(i + 1) {
                    *x = -bound;
                }
                break;
            }
        }
    }
}

/// Build the façon catalog of `F` over the box `[-bound, bound]^n`.
/// Exponent vectors with proportional tuples and identical façon merge into
/// one class keyed by the primitive tuple; the stored representative is the
/// lexicographically smallest member (the first one the ascending
/// enumeration meets). Deterministic for fixed `(F, bound)`.
pub fn collect_facons(f: &PolynomialMapping, bound: i64) -> FaconCatalog {
    let mut entries: BTreeMap<Facon, Vec<FaconClass>> = BTreeMap::new();
    for e in enumerate_exponents(f.n(), bound) {
        let Limit::Converges(limit) = limit_mapping(f, &e) else {
            continue;
        };
        let facon = Facon::from_exponents(&e).expect("enumeration yields admissible vectors");
        let (_, primitive) = associated_tuple(&e).expect("admissible vector");
        let classes = entries.entry(facon).or_default();
        if !classes.iter().any(|c| c.tuple == primitive) {
            classes.push(FaconClass { tuple: primitive, representative: e, limit });
        }
    }
    for classes in entries.values_mut() {
        classes.sort_by(|a, b| a.tuple.cmp(&b.tuple));
    }
    FaconCatalog { entries, bound }
}

/// Closed-form maximum number of distinct façons for a dominant mapping
/// `C^n -> C^n`:
///
/// ```text
/// sum_{k=1}^{n} C(n,k) + sum_{k=1}^{n-1} C(n,k) + sum_{k=2}^{n-1} A(n,k)
/// ```
///
/// with binomials `C(n,k)` and arrangements `A(n,k) = n!/(n-k)!`. The three
/// sums count labels whose index sets cover all of `{1..n}`, labels with no
/// zero-indices that do not cover, and covering-failures with both parts
/// nonempty (ordered selections).
pub fn max_facons_count(n: u32) -> u128 {
    let full: u128 = (1..=n).map(|k| binomial(n, k)).sum();
    let no_zero_part: u128 = (1..n).map(|k| binomial(n, k)).sum();
    let mixed: u128 = (2..n).map(|k| arrangements(n, k)).sum();
    full + no_zero_part + mixed
}

fn binomial(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    let mut acc: u128 = 1;
    for i in 0..k {
        acc = acc * u128::from(n - i) / u128::from(i + 1);
    }
    acc
}

fn arrangements(n: u32, k: u32) -> u128 {
    if k > n {
        return 0;
    }
    (0..k).map(|i| u128::from(n - i)).product()
}

/// Dominance test: a polynomial mapping `C^n -> C^n` is dominant exactly
/// when its Jacobian determinant is not the zero polynomial.
pub fn is_dominant(f: &PolynomialMapping) -> bool {
    !jacobian_determinant(f).is_zero()
}

/// The symbolic Jacobian determinant of the mapping.
pub fn jacobian_determinant(f: &PolynomialMapping) -> MultiPoly {
    let n = f.n();
    let rows: Vec<Vec<MultiPoly>> =
        f.components().iter().map(|p| (0..n).map(|j| p.partial(j)).collect()).collect();
    determinant(&rows)
}

fn determinant(m: &[Vec<MultiPoly>]) -> MultiPoly {
    let n = m.len();
    if n == 1 {
        return m[0][0].clone();
    }
    let space = m[0][0].space();
    let mut acc = MultiPoly::zero(space);
    for (j, entry) in m[0].iter().enumerate() {
        if entry.is_zero() {
            continue;
        }
        let minor: Vec<Vec<MultiPoly>> = m[1..]
            .iter()
            .map(|row| {
                row.iter().enumerate().filter(|(k, _)| *k != j).map(|(_, p)| p.clone()).collect()
            })
            .collect();
        let cofactor = entry.mul(&determinant(&minor));
        acc = if j % 2 == 0 { acc.add(&cofactor) } else { acc.sub(&cofactor) };
    }
    acc
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_mapping;

    fn exfacon() -> PolynomialMapping {
        parse_mapping("vars x1 x2 x3; x1; x2; x1*x2*x3").unwrap()
    }

    fn cusp() -> PolynomialMapping {
        parse_mapping("vars x1 x2; (x1*x2)^2; (x1*x2)^3 + x1").unwrap()
    }

    #[test]
    fn enumerate_small_boxes() {
        let one = enumerate_exponents(1, 1);
        assert_eq!(one.len(), 1);
        assert_eq!(one[0].entries(), &[1]);

        let expected: Vec<Vec<i64>> =
            vec![vec![-1, 1], vec![0, 1], vec![1, -1], vec![1, 0], vec![1, 1]];
        let got: Vec<Vec<i64>> =
            enumerate_exponents(2, 1).iter().map(|e| e.entries().to_vec()).collect();
        assert_eq!(got, expected);
    }

    #[test]
    fn enumerate_count_matches_direct_filter() {
        // Independent oracle: walk the whole box and filter.
        let mut count = 0usize;
        for a in -2i64..=2 {
            for b in -2i64..=2 {
                if a > 0 || b > 0 {
                    count += 1;
                }
            }
        }
        assert_eq!(enumerate_exponents(2, 2).len(), count);
        assert_eq!(count, 16);
    }

    #[test]
    fn enumeration_is_lexicographic() {
        let vectors = enumerate_exponents(3, 2);
        for w in vectors.windows(2) {
            assert!(w[0] < w[1]);
        }
    }

    #[test]
    fn exfacon_catalog_has_exactly_three_facons() {
        let catalog = collect_facons(&exfacon(), 2);
        assert_eq!(catalog.labels(), vec!["(3)[1]", "(3)[1,2]", "(3)[2]"]);
    }

    #[test]
    fn cusp_catalog_single_facon_two_classes() {
        let catalog = collect_facons(&cusp(), 2);
        assert_eq!(catalog.labels(), vec!["(2)[1]"]);
        let facon = catalog.facons().next().unwrap().clone();
        let tuples: Vec<String> =
            catalog.classes(&facon).iter().map(|c| c.tuple.to_string()).collect();
        assert_eq!(tuples, vec!["(1;1)", "(1;2)"]);
    }

    #[test]
    fn plane_catalog_contains_both_facons() {
        let f = parse_mapping("vars x1 x2 x3; x1*x2 + x3; x2*x3 + x3*x1; x1*x2 + x2*x3 + x3*x1")
            .unwrap();
        let labels = collect_facons(&f, 2).labels();
        assert!(labels.contains(&"(1)[2,3]".to_string()), "{labels:?}");
        assert!(labels.contains(&"(2)[1,3]".to_string()), "{labels:?}");
    }

    #[test]
    fn classes_within_a_facon_are_non_proportional() {
        for f in [exfacon(), cusp()] {
            let catalog = collect_facons(&f, 2);
            for (_, classes) in catalog.iter() {
                for i in 0..classes.len() {
                    for j in i + 1..classes.len() {
                        assert!(!classes[i].tuple.is_proportional_to(&classes[j].tuple));
                    }
                }
            }
        }
    }

    #[test]
    fn catalog_monotone_in_bound() {
        for f in [exfacon(), cusp()] {
            let small = collect_facons(&f, 1).labels();
            let large = collect_facons(&f, 2).labels();
            for label in &small {
                assert!(large.contains(label));
            }
            assert!(collect_facons(&f, 2).facon_count() as u128 <= max_facons_count(f.n() as u32));
        }
    }

    #[test]
    fn counting_formula_values() {
        assert_eq!(max_facons_count(1), 1);
        assert_eq!(max_facons_count(2), 5);
        assert_eq!(max_facons_count(3), 19);
    }

    #[test]
    fn dominance_examples() {
        assert!(is_dominant(&exfacon()));
        assert!(is_dominant(&cusp()));
        let degenerate = parse_mapping("vars x1 x2; x1; x1").unwrap();
        assert!(!is_dominant(&degenerate));
    }

    #[test]
    fn exfacon_jacobian_is_x1x2() {
        use crate::algebra::VarSpace;
        let det = jacobian_determinant(&exfacon());
        let expected = MultiPoly::var(VarSpace::Ambient, 0).mul(&MultiPoly::var(VarSpace::Ambient, 1));
        assert_eq!(det, expected);
    }
}
