//! Deterministic JSON and text rendering of analysis results.
//!
//! The same `(mapping, E, D, seed, trials, samples)` input always produces
//! byte-identical output: collections are ordered, polynomials print in
//! their canonical form, and the scope block records every knob.

use num_traits::One;
use serde::Serialize;

use crate::algebra::Rational;
use crate::strata::{AsymptoticSetReport, Stratification, Stratum};

#[derive(Debug, Serialize)]
pub struct JsonReport {
    pub mapping: String,
    pub n: usize,
    pub dominant: bool,
    pub warnings: Vec<String>,
    pub facons: Vec<JsonFacon>,
    pub strata: Vec<JsonStratum>,
    pub filtration: Vec<JsonFiltrationLevel>,
    pub frontier: bool,
    pub frontier_violations: Vec<String>,
    pub top_dimension: Option<usize>,
    pub hypersurface: bool,
    pub scope: JsonScope,
}

#[derive(Debug, Serialize)]
pub struct JsonFacon {
    pub label: String,
    pub classes: Vec<JsonClass>,
}

#[derive(Debug, Serialize)]
pub struct JsonClass {
    pub tuple: JsonTuple,
    pub representative: Vec<i64>,
    pub limit: Vec<String>,
    pub constraints: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct JsonTuple {
    pub infinity: Vec<i64>,
    pub zero: Vec<i64>,
}

#[derive(Debug, Serialize)]
pub struct JsonStratum {
    pub id: String,
    pub dimension: usize,
    pub facons: Vec<String>,
    pub etoile_level: usize,
    pub etoile_labels: Vec<String>,
    pub implicit_eqs: Vec<String>,
    pub equation_degree: u32,
    pub parametrizations: Vec<Vec<String>>,
    pub sample_points: Vec<Vec<String>>,
    pub contains: Vec<String>,
    pub rank_constant: bool,
}

#[derive(Debug, Serialize)]
pub struct JsonFiltrationLevel {
    pub dimension: usize,
    pub strata: Vec<String>,
}

#[derive(Debug, Serialize)]
pub struct JsonScope {
    pub max_exponent: i64,
    pub degree: u32,
    pub seed: u64,
    pub trials: u32,
    pub samples: usize,
    pub version: String,
    pub notes: Vec<String>,
}

fn rational_str(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

fn scope_notes() -> Vec<String> {
    vec![
        "curve family: monomial curves c_i*u^{e_i} with integer exponents |e_i| <= E; \
         the catalog is certified only within this box"
            .to_string(),
        "divergence is judged for generic coefficients; cancellations at special \
         coefficient values are not explored"
            .to_string(),
        "implicit equations, closure containment and frontier membership are heuristic \
         up to total degree D on the recorded sample budget"
            .to_string(),
        "numeric oracle constants: divergence threshold 1e3 at u = 1e6, convergence \
         tolerance 1e-2 in the max-norm"
            .to_string(),
    ]
}

impl JsonReport {
    pub fn from_report(r: &AsymptoticSetReport) -> JsonReport {
        let facons = r
            .catalog
            .iter()
            .map(|(facon, classes)| JsonFacon {
                label: facon.label(),
                classes: classes
                    .iter()
                    .map(|c| JsonClass {
                        tuple: JsonTuple {
                            infinity: c.tuple.infinity_degrees().to_vec(),
                            zero: c.tuple.zero_degrees().to_vec(),
                        },
                        representative: c.representative.entries().to_vec(),
                        limit: c.limit.component_strings(),
                        constraints: c
                            .limit
                            .constraints()
                            .iter()
                            .map(|&i| format!("c{}", i + 1))
                            .collect(),
                    })
                    .collect(),
            })
            .collect();

        JsonReport {
            mapping: r.mapping.canonical_text(),
            n: r.mapping.n(),
            dominant: r.dominant,
            warnings: r.warnings.clone(),
            facons,
            strata: json_strata(&r.stratification),
            filtration: r
                .stratification
                .filtration
                .iter()
                .map(|l| JsonFiltrationLevel {
                    dimension: l.dimension,
                    strata: l.strata.iter().map(|&i| r.stratification.strata[i].id.clone()).collect(),
                })
                .collect(),
            frontier: r.frontier,
            frontier_violations: r.frontier_violations.clone(),
            top_dimension: r.top_dimension,
            hypersurface: r.hypersurface,
            scope: JsonScope {
                max_exponent: r.config.max_exponent,
                degree: r.config.degree,
                seed: r.config.seed,
                trials: r.config.trials,
                samples: r.config.samples,
                version: env!("CARGO_PKG_VERSION").to_string(),
                notes: scope_notes(),
            },
        }
    }

    pub fn to_json_string(&self) -> String {
        let mut s = serde_json::to_string_pretty(self).expect("report serializes");
        s.push('\n');
        s
    }
}

fn json_strata(s: &Stratification) -> Vec<JsonStratum> {
    s.strata
        .iter()
        .enumerate()
        .map(|(i, st)| {
            let contains: Vec<String> = s
                .containment
                .iter()
                .filter(|&&(a, _)| a == i)
                .map(|&(_, b)| s.strata[b].id.clone())
                .collect();
            JsonStratum {
                id: st.id.clone(),
                dimension: st.dimension,
                facons: st.facon_labels(),
                etoile_level: st.etoile_level(),
                etoile_labels: st.etoile_labels(),
                implicit_eqs: st.implicit_eqs.iter().map(|p| p.to_string()).collect(),
                equation_degree: st.equation_degree,
                parametrizations: st
                    .parametrizations
                    .iter()
                    .map(|p| p.limit.component_strings())
                    .collect(),
                sample_points: st
                    .sample_points
                    .iter()
                    .map(|pt| pt.iter().map(rational_str).collect())
                    .collect(),
                contains,
                rank_constant: st.rank_constant,
            }
        })
        .collect()
}

fn stratum_line(st: &Stratum, contains: &[String]) -> String {
    let eqs: Vec<String> = st.implicit_eqs.iter().map(|p| p.to_string()).collect();
    format!(
        "  {}  dim {}  facons {{{}}}  etoile {{{}}}  eqs {{{}}}  contains {{{}}}",
        st.id,
        st.dimension,
        st.facon_labels().join(", "),
        st.etoile_labels().join(", "),
        eqs.join(", "),
        contains.join(", "),
    )
}

/// Human-readable rendering; façon labels in the `(i..)[j..]` notation and
/// star levels as `κ^{i*}`.
pub fn render_text(r: &AsymptoticSetReport) -> String {
    let mut out = String::new();
    let s = &r.stratification;
    out.push_str(&format!("mapping: {}\n", r.mapping.canonical_text()));
    out.push_str(&format!("n: {}\n", r.mapping.n()));
    out.push_str(&format!("dominant: {}\n", r.dominant));
    for w in &r.warnings {
        out.push_str(&format!("warning: {}\n", w));
    }
    out.push_str(&format!(
        "facons (E = {}): {}\n",
        r.config.max_exponent,
        r.catalog.facon_count()
    ));
    for (facon, classes) in r.catalog.iter() {
        out.push_str(&format!("  {}\n", facon.label()));
        for c in classes {
            let constraints: Vec<String> =
                c.limit.constraints().iter().map(|&i| format!("c{}", i + 1)).collect();
            out.push_str(&format!(
                "    class {}  e = {}  limit = ({})  nonzero: {{{}}}\n",
                c.tuple,
                c.representative,
                c.limit.component_strings().join(", "),
                constraints.join(", "),
            ));
        }
    }
    out.push_str(&format!("strata: {}\n", s.strata.len()));
    for (i, st) in s.strata.iter().enumerate() {
        let contains: Vec<String> = s
            .containment
            .iter()
            .filter(|&&(a, _)| a == i)
            .map(|&(_, b)| s.strata[b].id.clone())
            .collect();
        out.push_str(&stratum_line(st, &contains));
        out.push('\n');
    }
    let levels: Vec<String> = s
        .filtration
        .iter()
        .map(|l| {
            let ids: Vec<&str> = l.strata.iter().map(|&i| s.strata[i].id.as_str()).collect();
            format!("dim {} {{{}}}", l.dimension, ids.join(", "))
        })
        .collect();
    out.push_str(&format!("filtration: {}\n", levels.join(" > ")));
    out.push_str(&format!("frontier: {}\n", r.frontier));
    for v in &r.frontier_violations {
        out.push_str(&format!("frontier violation: {}\n", v));
    }
    match r.top_dimension {
        Some(d) => out.push_str(&format!(
            "top dimension: {} (hypersurface: {})\n",
            d, r.hypersurface
        )),
        None => out.push_str("top dimension: none (empty asymptotic set)\n"),
    }
    out.push_str(&format!(
        "scope: E={} D={} seed={} trials={} samples={} version={}\n",
        r.config.max_exponent,
        r.config.degree,
        r.config.seed,
        r.config.trials,
        r.config.samples,
        env!("CARGO_PKG_VERSION"),
    ));
    out
}

/// Minimal JSON-schema checker covering the subset used by the bundled
/// schema: `type`, `properties`, `required`, `additionalProperties` (bool),
/// `items`, `enum`, `minimum`. Returns the first violation found.
pub fn validate_schema(
    instance: &serde_json::Value,
    schema: &serde_json::Value,
    path: &str,
) -> Result<(), String> {
    use serde_json::Value;

    if let Some(types) = schema.get("type") {
        let allowed: Vec<String> = match types {
            Value::String(s) => vec![s.clone()],
            Value::Array(a) => a.iter().filter_map(|v| v.as_str().map(String::from)).collect(),
            _ => return Err(format!("{path}: malformed 'type' in schema")),
        };
        let actual = match instance {
            Value::Null => "null",
            Value::Bool(_) => "boolean",
            Value::Number(n) => {
                if n.is_u64() || n.is_i64() {
                    "integer"
                } else {
                    "number"
                }
            }
            Value::String(_) => "string",
            Value::Array(_) => "array",
            Value::Object(_) => "object",
        };
        let ok = allowed.iter().any(|t| t == actual || (t == "number" && actual == "integer"));
        if !ok {
            return Err(format!("{path}: expected type {allowed:?}, got {actual}"));
        }
    }

    if let Some(min) = schema.get("minimum").and_then(|m| m.as_i64()) {
        if let Some(v) = instance.as_i64() {
            if v < min {
                return Err(format!("{path}: {v} below minimum {min}"));
            }
        }
    }

    if let Some(allowed) = schema.get("enum").and_then(|e| e.as_array()) {
        if !allowed.contains(instance) {
            return Err(format!("{path}: value not in enum"));
        }
    }

    if let Some(obj) = instance.as_object() {
        if let Some(required) = schema.get("required").and_then(|r| r.as_array()) {
            for key in required.iter().filter_map(|k| k.as_str()) {
                if !obj.contains_key(key) {
                    return Err(format!("{path}: missing required key '{key}'"));
                }
            }
        }
        let props = schema.get("properties").and_then(|p| p.as_object());
        if let Some(props) = props {
            for (key, value) in obj {
                match props.get(key) {
                    Some(sub) => validate_schema(value, sub, &format!("{path}/{key}"))?,
                    None => {
                        if schema.get("additionalProperties").and_then(|a| a.as_bool())
                            == Some(false)
                        {
                            return Err(format!("{path}: unexpected key '{key}'"));
                        }
                    }
                }
            }
        }
    }

    if let Some(arr) = instance.as_array() {
        if let Some(items) = schema.get("items") {
            for (i, item) in arr.iter().enumerate() {
                validate_schema(item, items, &format!("{path}[{i}]"))?;
            }
        }
    }

    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::parser::parse_mapping;
    use crate::strata::{asymptotic_set, AnalysisConfig};

    fn small_cfg() -> AnalysisConfig {
        AnalysisConfig { max_exponent: 2, samples: 60, ..AnalysisConfig::default() }
    }

    #[test]
    fn json_report_is_deterministic() {
        let f = parse_mapping("vars x1 x2; (x1*x2)^2; (x1*x2)^3 + x1").unwrap();
        let a = JsonReport::from_report(&asymptotic_set(&f, &small_cfg())).to_json_string();
        let b = JsonReport::from_report(&asymptotic_set(&f, &small_cfg())).to_json_string();
        assert_eq!(a, b);
    }

    #[test]
    fn text_report_mentions_star_labels() {
        let f = parse_mapping("vars x1 x2; (x1*x2)^2; (x1*x2)^3 + x1").unwrap();
        let text = render_text(&asymptotic_set(&f, &small_cfg()));
        assert!(text.contains("(2)[1]^{1*}"), "{text}");
        assert!(text.contains("frontier: true"), "{text}");
    }

    #[test]
    fn schema_validator_flags_problems() {
        let schema: serde_json::Value = serde_json::json!({
            "type": "object",
            "required": ["a"],
            "additionalProperties": false,
            "properties": {
                "a": {"type": "integer", "minimum": 0},
                "b": {"type": ["string", "null"]}
            }
        });
        let good = serde_json::json!({"a": 1, "b": null});
        assert!(validate_schema(&good, &schema, "$").is_ok());
        let missing = serde_json::json!({"b": "x"});
        assert!(validate_schema(&missing, &schema, "$").is_err());
        let wrong_type = serde_json::json!({"a": "one"});
        assert!(validate_schema(&wrong_type, &schema, "$").is_err());
        let negative = serde_json::json!({"a": -2});
        assert!(validate_schema(&negative, &schema, "$").is_err());
        let extra = serde_json::json!({"a": 0, "zzz": 1});
        assert!(validate_schema(&extra, &schema, "$").is_err());
    }
}
