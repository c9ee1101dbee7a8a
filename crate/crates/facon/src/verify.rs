//! Floating-point and brute-force oracles.
//!
//! Everything in this module re-derives results along an independent route:
//! curve limits are approached numerically along a schedule of parameter
//! magnitudes, and the catalog's façon set is re-computed by thresholding
//! floating-point values instead of symbolic cancellation. Mismatches here
//! point at bugs in the exact pipeline.

use crate::algebra::Rational;
use crate::curves::{ExponentVector, Facon};
use crate::facons::{enumerate_exponents, FaconCatalog};
use crate::parser::PolynomialMapping;
use crate::rng::SplitMix64;

/// Parameter magnitudes at which curve images are probed.
pub const DEFAULT_SCHEDULE: [f64; 4] = [1e3, 1e4, 1e5, 1e6];
/// Relative deviation below which a probed limit counts as reached.
pub const DEFAULT_TOLERANCE: f64 = 1e-2;
/// Component magnitude at `u = 1e6` above which it counts as divergent.
pub const DIVERGENCE_THRESHOLD: f64 = 1e3;
/// Probe magnitude for the brute-force convergence decisions.
pub const DIVERGENCE_PROBE_U: f64 = 1e6;

/// Outcome of approaching one expected limit point along a curve.
#[derive(Debug, Clone)]
pub struct NumericCheckReport {
    pub schedule: Vec<f64>,
    /// Max-norm relative deviation `|F(gamma(u)) - a|` at each schedule point.
    pub deviations: Vec<f64>,
    pub passed: bool,
    pub tolerance: f64,
    /// Set when the schedule had to be shrunk to avoid overflow.
    pub note: Option<String>,
}

fn to_f64(r: &Rational) -> f64 {
    use num_traits::ToPrimitive;
    r.to_f64().unwrap_or(f64::NAN)
}

/// Evaluate `F(gamma(u))` in floating point for each `u` in the schedule and
/// compare against the expected limit. Passes when the final deviation is
/// below the tolerance and the deviations are non-increasing over the last
/// three schedule points.
pub fn numeric_curve_check(
    f: &PolynomialMapping,
    e: &ExponentVector,
    coeffs: &[Rational],
    expected: &[Rational],
    schedule: &[f64],
    tolerance: f64,
) -> NumericCheckReport {
    assert_eq!(e.len(), f.n());
    assert_eq!(expected.len(), f.n());
    let coeffs: Vec<f64> = coeffs.iter().map(to_f64).collect();
    let target: Vec<f64> = expected.iter().map(to_f64).collect();

    let mut used = Vec::new();
    let mut deviations = Vec::new();
    let mut note = None;
    for &u in schedule {
        let point: Vec<f64> =
            coeffs.iter().zip(e.entries()).map(|(c, &k)| c * u.powi(k as i32)).collect();
        let image: Vec<f64> = f.components().iter().map(|p| p.eval_f64(&point)).collect();
        if image.iter().any(|v| !v.is_finite()) {
            note = Some(format!("schedule shrunk: overflow at u = {u:e}"));
            break;
        }
        let dev = image
            .iter()
            .zip(&target)
            .map(|(v, a)| (v - a).abs() / a.abs().max(1.0))
            .fold(0.0f64, f64::max);
        used.push(u);
        deviations.push(dev);
    }

    let final_ok = deviations.last().map(|&d| d < tolerance).unwrap_or(false);
    // Deviations far below the tolerance are a converged plateau; clamping
    // them keeps sub-epsilon float noise from breaking the monotone tail.
    let floor = tolerance * 1e-6;
    let clamped: Vec<f64> = deviations.iter().map(|d| d.max(floor)).collect();
    let tail_monotone = if clamped.len() >= 3 {
        let t = &clamped[clamped.len() - 3..];
        t[0] >= t[1] && t[1] >= t[2]
    } else {
        true
    };
    NumericCheckReport {
        schedule: used,
        deviations,
        passed: final_ok && tail_monotone,
        tolerance,
        note,
    }
}

/// Re-enumerate the exponent box and decide convergence per component
/// numerically (threshold at `u = 1e6` with random unit-scale coefficients),
/// then compare the resulting façon set against the symbolic catalog.
/// Returns `true` and an empty list when the two sets agree.
pub fn oracle_cross_check(
    f: &PolynomialMapping,
    bound_small: i64,
    seed: u64,
) -> (bool, Vec<String>) {
    assert!((1..=2).contains(&bound_small), "the brute-force oracle runs at E <= 2");
    let mut rng = SplitMix64::for_task(seed, "oracle-cross-check");
    let mut numeric: Vec<String> = Vec::new();
    for e in enumerate_exponents(f.n(), bound_small) {
        let coeffs: Vec<f64> = (0..f.n()).map(|_| rng.range_f64(0.5, 1.5)).collect();
        let point: Vec<f64> = coeffs
            .iter()
            .zip(e.entries())
            .map(|(c, &k)| c * DIVERGENCE_PROBE_U.powi(k as i32))
            .collect();
        let admissible = f
            .components()
            .iter()
            .all(|p| p.eval_f64(&point).abs() <= DIVERGENCE_THRESHOLD);
        if admissible {
            let label = Facon::from_exponents(&e).expect("enumerated vectors are admissible").label();
            if !numeric.contains(&label) {
                numeric.push(label);
            }
        }
    }
    numeric.sort();

    let symbolic = crate::facons::collect_facons(f, bound_small).labels();
    let mut mismatches = Vec::new();
    for l in &numeric {
        if !symbolic.contains(l) {
            mismatches.push(format!("numeric oracle found façon {l} missing from the catalog"));
        }
    }
    for l in &symbolic {
        if !numeric.contains(l) {
            mismatches.push(format!("catalog façon {l} not confirmed by the numeric oracle"));
        }
    }
    (mismatches.is_empty(), mismatches)
}

/// One per-class numeric confirmation of the catalog.
#[derive(Debug, Clone)]
pub struct ClassCheck {
    pub facon: String,
    pub tuple: String,
    pub report: NumericCheckReport,
}

/// Run a numeric curve check for every class of the catalog, against the
/// exact value of its limit mapping at the same coefficients.
pub fn catalog_numeric_checks(
    f: &PolynomialMapping,
    catalog: &FaconCatalog,
    seed: u64,
) -> Vec<ClassCheck> {
    let mut out = Vec::new();
    for (facon, classes) in catalog.iter() {
        for class in classes {
            let tag = format!("verify|{}|{}", facon.label(), class.tuple);
            let mut rng = SplitMix64::for_task(seed, &tag);
            let coeffs: Vec<Rational> = (0..f.n()).map(|_| rng.rational(true)).collect();
            let expected = class.limit.eval(&coeffs);
            let report = numeric_curve_check(
                f,
                &class.representative,
                &coeffs,
                &expected,
                &DEFAULT_SCHEDULE,
                DEFAULT_TOLERANCE,
            );
            out.push(ClassCheck {
                facon: facon.label(),
                tuple: class.tuple.to_string(),
                report,
            });
        }
    }
    out
}
