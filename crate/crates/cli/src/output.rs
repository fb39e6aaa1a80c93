//! Key/value reports rendered either as aligned text or as one JSON object.

use std::io::{self, Write};

use serde_json::{Map, Number, Value};

/// Rounds to 9 significant digits so repeated runs diff cleanly.
pub fn round9(x: f64) -> f64 {
    if x == 0.0 || !x.is_finite() {
        return x;
    }
    format!("{x:.8e}").parse().unwrap_or(x)
}

/// Text form of a rounded number, shared by the human and CSV outputs.
pub fn fmt_num(x: f64) -> String {
    if x.is_nan() {
        "nan".into()
    } else if x.is_infinite() {
        if x > 0.0 {
            "inf".into()
        } else {
            "-inf".into()
        }
    } else {
        Number::from_f64(round9(x))
            .map(|n| n.to_string())
            .unwrap_or_default()
    }
}

#[derive(Debug, Default)]
pub struct Report {
    fields: Vec<(String, Value)>,
}

impl Report {
    pub fn new(command: &str) -> Self {
        let mut r = Self::default();
        r.text("command", command);
        r
    }

    /// Non-finite numbers become `null` in JSON; the text form spells them out.
    pub fn num(&mut self, key: &str, x: f64) -> &mut Self {
        let v = Number::from_f64(round9(x))
            .map(Value::Number)
            .unwrap_or(Value::Null);
        self.fields.push((key.into(), v));
        self
    }

    pub fn opt_num(&mut self, key: &str, x: Option<f64>) -> &mut Self {
        match x {
            Some(x) => self.num(key, x),
            None => self.raw(key, Value::Null),
        }
    }

    pub fn int(&mut self, key: &str, n: u64) -> &mut Self {
        self.raw(key, Value::from(n))
    }

    pub fn text(&mut self, key: &str, s: &str) -> &mut Self {
        self.raw(key, Value::from(s))
    }

    pub fn flag(&mut self, key: &str, b: bool) -> &mut Self {
        self.raw(key, Value::from(b))
    }

    pub fn raw(&mut self, key: &str, v: Value) -> &mut Self {
        self.fields.push((key.into(), v));
        self
    }

    pub fn write_json(&self, out: &mut dyn Write) -> io::Result<()> {
        let map: Map<String, Value> = self.fields.iter().cloned().collect();
        serde_json::to_writer(&mut *out, &Value::Object(map))?;
        writeln!(out)
    }

    pub fn write_human(&self, out: &mut dyn Write) -> io::Result<()> {
        let width = self.fields.iter().map(|(k, _)| k.len()).max().unwrap_or(0);
        for (key, value) in &self.fields {
            let shown = match value {
                Value::Null => "-".to_string(),
                Value::String(s) => s.clone(),
                other => other.to_string(),
            };
            writeln!(out, "{key:<width$}  {shown}")?;
        }
        Ok(())
    }

    pub fn write(&self, json: bool, out: &mut dyn Write) -> io::Result<()> {
        if json {
            self.write_json(out)
        } else {
            self.write_human(out)
        }
    }
}
