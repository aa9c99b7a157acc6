//! A small structural validator for the shipped report schema: enough of
//! the JSON-Schema vocabulary (type, properties, required, items, enum,
//! additionalProperties, $ref into #/definitions) to check our own outputs.

use serde_json::Value;

/// The schema file shipped under docs/, embedded for offline validation.
pub const REPORT_SCHEMA: &str = include_str!("../../../docs/report-schema.json");

pub fn schema() -> Value {
    serde_json::from_str(REPORT_SCHEMA).expect("shipped schema is valid JSON")
}

fn resolve<'a>(root: &'a Value, node: &'a Value) -> &'a Value {
    if let Some(reference) = node.get("$ref").and_then(Value::as_str) {
        let path = reference
            .strip_prefix("#/")
            .expect("only local references are used");
        let mut cur = root;
        for seg in path.split('/') {
            cur = cur.get(seg).expect("reference target exists");
        }
        return cur;
    }
    node
}

fn validate_node(root: &Value, node: &Value, value: &Value, path: &str) -> Result<(), String> {
    let node = resolve(root, node);
    if let Some(allowed) = node.get("enum").and_then(Value::as_array) {
        if !allowed.contains(value) {
            return Err(format!("{path}: {value} not in enum"));
        }
    }
    if let Some(ty) = node.get("type").and_then(Value::as_str) {
        let ok = match ty {
            "object" => value.is_object(),
            "array" => value.is_array(),
            "string" => value.is_string(),
            "integer" => value.is_i64() || value.is_u64(),
            "number" => value.is_number(),
            "boolean" => value.is_boolean(),
            _ => return Err(format!("{path}: unsupported schema type {ty}")),
        };
        if !ok {
            return Err(format!("{path}: expected {ty}, got {value}"));
        }
    }
    if let Some(required) = node.get("required").and_then(Value::as_array) {
        for key in required {
            let key = key.as_str().unwrap();
            if value.get(key).is_none() {
                return Err(format!("{path}: missing required field {key:?}"));
            }
        }
    }
    if let Some(props) = node.get("properties").and_then(Value::as_object) {
        if let Some(obj) = value.as_object() {
            let strict = node
                .get("additionalProperties")
                .and_then(Value::as_bool)
                .map(|b| !b)
                .unwrap_or(false);
            for (key, sub) in obj {
                match props.get(key) {
                    Some(schema_node) => {
                        validate_node(root, schema_node, sub, &format!("{path}.{key}"))?
                    }
                    None if strict => {
                        return Err(format!("{path}: unexpected field {key:?}"));
                    }
                    None => {}
                }
            }
        }
    }
    if let Some(items) = node.get("items") {
        if let Some(arr) = value.as_array() {
            for (i, sub) in arr.iter().enumerate() {
                validate_node(root, items, sub, &format!("{path}[{i}]"))?;
            }
        }
    }
    Ok(())
}

/// Validates a value against a named definition of the shipped schema
/// (`"report"` or `"bundle"`).
pub fn validate(definition: &str, value: &Value) -> Result<(), String> {
    let root = schema();
    let node = root
        .get("definitions")
        .and_then(|d| d.get(definition))
        .ok_or_else(|| format!("unknown schema definition {definition:?}"))?;
    validate_node(&root, node, value, "$")
}
