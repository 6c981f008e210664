use std::collections::BTreeMap;

use serde_json::{Map, Value};

/// One result: exact value as a string, its nearest double (`None` when the
/// exact value is not a number), the parameters it was computed from, and
/// command-specific extras flattened into the top level on output.
#[derive(Clone, Debug, PartialEq)]
pub struct OutputRecord {
    pub command: String,
    pub params: BTreeMap<String, String>,
    pub exact: String,
    pub decimal: Option<f64>,
    pub extras: Map<String, Value>,
}

const RESERVED: [&str; 4] = ["command", "params", "exact", "decimal"];

impl OutputRecord {
    pub fn new(command: &str, exact: impl ToString, decimal: Option<f64>) -> OutputRecord {
        OutputRecord {
            command: command.to_string(),
            params: BTreeMap::new(),
            exact: exact.to_string(),
            decimal,
            extras: Map::new(),
        }
    }

    pub fn param(mut self, key: &str, value: impl ToString) -> Self {
        self.params.insert(key.to_string(), value.to_string());
        self
    }

    pub fn extra(mut self, key: &str, value: impl Into<Value>) -> Self {
        assert!(!RESERVED.contains(&key), "extra key {key} collides with a record field");
        self.extras.insert(key.to_string(), value.into());
        self
    }

    pub fn to_json(&self) -> Value {
        let mut obj = self.extras.clone();
        obj.insert("command".into(), self.command.clone().into());
        obj.insert(
            "params".into(),
            Value::Object(
                self.params
                    .iter()
                    .map(|(k, v)| (k.clone(), Value::String(v.clone())))
                    .collect(),
            ),
        );
        obj.insert("exact".into(), self.exact.clone().into());
        obj.insert(
            "decimal".into(),
            self.decimal
                .and_then(serde_json::Number::from_f64)
                .map_or(Value::Null, Value::Number),
        );
        Value::Object(obj)
    }

    /// Compact single-line JSON with sorted keys.
    pub fn to_json_line(&self) -> String {
        self.to_json().to_string()
    }

    pub fn from_json(value: &Value) -> Option<OutputRecord> {
        let mut obj = value.as_object()?.clone();
        let command = obj.remove("command")?.as_str()?.to_string();
        let params = obj
            .remove("params")?
            .as_object()?
            .iter()
            .map(|(k, v)| Some((k.clone(), v.as_str()?.to_string())))
            .collect::<Option<BTreeMap<_, _>>>()?;
        let exact = obj.remove("exact")?.as_str()?.to_string();
        let decimal = match obj.remove("decimal")? {
            Value::Null => None,
            v => Some(v.as_f64()?),
        };
        Some(OutputRecord {
            command,
            params,
            exact,
            decimal,
            extras: obj,
        })
    }

    pub fn to_text(&self) -> String {
        let mut out = String::new();
        match self.decimal {
            Some(x) => out.push_str(&format!("{} = {} ≈ {}\n", self.command, self.exact, x)),
            None => out.push_str(&format!("{}: {}\n", self.command, self.exact)),
        }
        for (k, v) in &self.params {
            out.push_str(&format!("  {k} = {v}\n"));
        }
        for (k, v) in &self.extras {
            out.push_str(&format!("  {k}: {}\n", text_value(v)));
        }
        out
    }
}

fn text_value(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        Value::Array(items) => {
            let parts: Vec<String> = items.iter().map(text_value).collect();
            format!("[{}]", parts.join(", "))
        }
        other => other.to_string(),
    }
}
