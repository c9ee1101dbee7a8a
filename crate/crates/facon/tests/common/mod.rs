//! Shared fixtures for the integration suites.
#![allow(dead_code)]

use std::path::PathBuf;

use facon::parser::{parse_mapping, PolynomialMapping};
use facon::strata::AnalysisConfig;

pub fn testdata(name: &str) -> PathBuf {
    PathBuf::from(env!("CARGO_MANIFEST_DIR")).join("testdata").join(name)
}

pub fn load(name: &str) -> PolynomialMapping {
    let path = testdata(name);
    let text = std::fs::read_to_string(&path)
        .unwrap_or_else(|e| panic!("read {}: {e}", path.display()));
    parse_mapping(&text).unwrap_or_else(|e| panic!("parse {}: {e}", path.display()))
}

/// Desk-scale configuration the acceptance criteria run at: `E = 2` with the
/// default degree bound, seed, trials and sample budget.
pub fn desk_config() -> AnalysisConfig {
    AnalysisConfig { max_exponent: 2, ..AnalysisConfig::default() }
}

/// Every bundled dominant example.
pub const DOMINANT_EXAMPLES: [&str; 6] =
    ["exfacon.map", "cusp.map", "cone.map", "whitney.map", "plane.map", "triple.map"];
