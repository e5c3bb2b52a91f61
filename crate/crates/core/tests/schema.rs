//! Every report kind validates against the bundled JSON Schema. The
//! validator covers only the keywords the schema uses.

use serde_json::Value;

use ecci::extremal::{
    enumerate_strong_digraphs, verify_theorem, Objective, SearchOptions, TheoremId, VerifyParams,
};
use ecci::families::{fixture, FamilySpec, FixtureId};
use ecci::index::index_report;
use ecci::io::{
    GeneratePayload, IndexPayload, JsonReport, ProfilePayload, ReportKind, REPORT_SCHEMA,
};
use ecci::metrics::{all_pairs_distances, ecc_profile};

fn resolve<'a>(root: &'a Value, reference: &str) -> &'a Value {
    let path = reference.strip_prefix("#/").expect("local ref");
    path.split('/').fold(root, |v, key| &v[key])
}

fn type_matches(ty: &str, v: &Value) -> bool {
    match ty {
        "object" => v.is_object(),
        "array" => v.is_array(),
        "string" => v.is_string(),
        "boolean" => v.is_boolean(),
        "null" => v.is_null(),
        "integer" => v.is_u64() || v.is_i64(),
        "number" => v.is_number(),
        other => panic!("unsupported type {other}"),
    }
}

fn validate(root: &Value, schema: &Value, v: &Value, path: &str, errors: &mut Vec<String>) {
    let Some(schema) = schema.as_object() else {
        return;
    };
    for (key, rule) in schema {
        match key.as_str() {
            "$ref" => validate(root, resolve(root, rule.as_str().unwrap()), v, path, errors),
            "type" => {
                let ok = match rule {
                    Value::String(t) => type_matches(t, v),
                    Value::Array(ts) => ts.iter().any(|t| type_matches(t.as_str().unwrap(), v)),
                    _ => unreachable!(),
                };
                if !ok {
                    errors.push(format!("{path}: expected {rule}, got {v}"));
                }
            }
            "const" if v != rule => errors.push(format!("{path}: expected const {rule}")),
            "enum" if !rule.as_array().unwrap().contains(v) => {
                errors.push(format!("{path}: {v} not in {rule}"))
            }
            "minimum" => {
                if v.as_f64().is_some_and(|x| x < rule.as_f64().unwrap()) {
                    errors.push(format!("{path}: below minimum"));
                }
            }
            "required" => {
                if let Some(obj) = v.as_object() {
                    for k in rule.as_array().unwrap() {
                        if !obj.contains_key(k.as_str().unwrap()) {
                            errors.push(format!("{path}: missing {k}"));
                        }
                    }
                }
            }
            "properties" => {
                if let Some(obj) = v.as_object() {
                    for (k, sub) in rule.as_object().unwrap() {
                        if let Some(child) = obj.get(k) {
                            validate(root, sub, child, &format!("{path}/{k}"), errors);
                        }
                    }
                }
            }
            "additionalProperties" if rule == &Value::Bool(false) => {
                if let Some(obj) = v.as_object() {
                    let allowed = schema["properties"].as_object().unwrap();
                    for k in obj.keys().filter(|k| !allowed.contains_key(*k)) {
                        errors.push(format!("{path}: unexpected key {k}"));
                    }
                }
            }
            "items" => {
                if let Some(items) = v.as_array() {
                    for (i, item) in items.iter().enumerate() {
                        validate(root, rule, item, &format!("{path}/{i}"), errors);
                    }
                }
            }
            "oneOf" => {
                let passing = rule
                    .as_array()
                    .unwrap()
                    .iter()
                    .filter(|sub| {
                        let mut e = Vec::new();
                        validate(root, sub, v, path, &mut e);
                        e.is_empty()
                    })
                    .count();
                if passing != 1 {
                    errors.push(format!("{path}: {passing} oneOf branches match"));
                }
            }
            _ => {}
        }
    }
}

fn check(report: &JsonReport) -> Vec<String> {
    let schema: Value = serde_json::from_str(REPORT_SCHEMA).unwrap();
    let value: Value = serde_json::from_str(&report.to_json()).unwrap();
    let mut errors = Vec::new();
    validate(&schema, &schema, &value, "", &mut errors);
    errors
}

fn assert_valid(report: &JsonReport) {
    let errors = check(report);
    assert!(errors.is_empty(), "{:?}: {errors:#?}", report.kind);
}

#[test]
fn index_and_profile_reports() {
    for id in FixtureId::ALL {
        let d = fixture(id);
        let p = ecc_profile(&d).unwrap();
        let dist = all_pairs_distances(&d);
        let payload = IndexPayload::new(&d, index_report(&d, &p), p.clone(), Some(&dist));
        assert_valid(&JsonReport::new(ReportKind::Index, &payload));
        let payload = ProfilePayload {
            n: d.order(),
            profile: p,
        };
        assert_valid(&JsonReport::new(ReportKind::Profile, &payload));
    }
}

#[test]
fn generate_reports() {
    for (name, set) in [
        ("pn-plus", None),
        ("circulant", Some(vec![1, 3])),
        ("kn-orientation", None),
    ] {
        let spec = FamilySpec::parse(name, Some(7), None, set).unwrap();
        let d = spec.generate().unwrap();
        assert_valid(&JsonReport::new(
            ReportKind::Generate,
            &GeneratePayload::new(spec, &d),
        ));
    }
}

#[test]
fn enumerate_reports() {
    let r = enumerate_strong_digraphs(4, Objective::Min, &SearchOptions::default()).unwrap();
    assert_valid(&JsonReport::new(ReportKind::Enumerate, &r));
}

#[test]
fn verify_reports_for_every_theorem() {
    for id in TheoremId::ALL {
        let params = VerifyParams {
            n_range: Some(match id {
                TheoremId::StarMin => (4, 4),
                TheoremId::ComplementSum => (5, 6),
                _ => (3, 5),
            }),
            samples: Some(10),
            ..VerifyParams::default()
        };
        let r = verify_theorem(id, &params).unwrap();
        assert_valid(&JsonReport::new(ReportKind::Verify, &r));
    }
}

#[test]
fn validator_rejects_bad_reports() {
    let d = fixture(FixtureId::Fig1);
    let p = ecc_profile(&d).unwrap();
    let mut report = JsonReport::new(
        ReportKind::Index,
        &IndexPayload::new(&d, index_report(&d, &p), p, None),
    );
    report.payload["index"]
        .as_object_mut()
        .unwrap()
        .remove("xi");
    assert!(!check(&report).is_empty());
    report.kind = ReportKind::Profile;
    assert!(!check(&report).is_empty());
}
