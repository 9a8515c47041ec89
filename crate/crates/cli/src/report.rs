//! The JSON envelope shared by every subcommand.

use serde_json::{json, Map, Value};

pub const VERSION: u64 = 1;

/// One named check. `pass` is `None` when the check was not applicable, for instance when a
/// hypothesis of the underlying lemma does not hold.
#[derive(Debug, Clone)]
pub struct Check {
    name: String,
    pass: Option<bool>,
    fields: Map<String, Value>,
}

impl Check {
    pub fn new(name: impl Into<String>, pass: bool) -> Self {
        Check {
            name: name.into(),
            pass: Some(pass),
            fields: Map::new(),
        }
    }

    /// A result that only carries data.
    pub fn info(name: impl Into<String>) -> Self {
        Check {
            name: name.into(),
            pass: None,
            fields: Map::new(),
        }
    }

    pub fn skipped(name: impl Into<String>, reason: impl Into<String>) -> Self {
        Check::info(name).with("skipped", reason.into())
    }

    pub fn with(mut self, key: &str, value: impl Into<Value>) -> Self {
        self.fields.insert(key.to_string(), value.into());
        self
    }

    /// Adds `witness` only when one is present.
    pub fn witness(self, witness: Option<impl Into<Value>>) -> Self {
        match witness {
            Some(w) => self.with("witness", w),
            None => self,
        }
    }

    fn into_value(self) -> Value {
        let mut m = self.fields;
        m.insert("name".into(), Value::String(self.name));
        m.insert("pass".into(), self.pass.map_or(Value::Null, Value::Bool));
        Value::Object(m)
    }
}

#[derive(Debug, Clone)]
pub struct Report {
    command: String,
    results: Vec<Check>,
}

impl Report {
    pub fn new(command: impl Into<String>) -> Self {
        Report {
            command: command.into(),
            results: Vec::new(),
        }
    }

    pub fn push(&mut self, check: Check) {
        self.results.push(check);
    }

    pub fn failed(&self) -> bool {
        self.results.iter().any(|c| c.pass == Some(false))
    }

    pub fn to_json(&self) -> String {
        let results: Vec<Value> = self.results.iter().cloned().map(Check::into_value).collect();
        render(&json!({ "version": VERSION, "command": self.command, "results": results }))
    }
}

/// An input error: unreadable file, malformed line, or data violating a precondition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct InputError {
    pub kind: String,
    pub message: String,
    pub file: Option<String>,
    pub line: Option<usize>,
}

impl InputError {
    pub fn new(kind: impl Into<String>, message: impl Into<String>) -> Self {
        InputError {
            kind: kind.into(),
            message: message.into(),
            file: None,
            line: None,
        }
    }

    pub fn in_file(mut self, file: impl Into<String>) -> Self {
        self.file.get_or_insert(file.into());
        self
    }

    pub fn to_json(&self, command: &str) -> String {
        let mut error = Map::new();
        error.insert("kind".into(), self.kind.clone().into());
        error.insert("message".into(), self.message.clone().into());
        if let Some(f) = &self.file {
            error.insert("file".into(), f.clone().into());
        }
        if let Some(l) = self.line {
            error.insert("line".into(), l.into());
        }
        render(&json!({ "version": VERSION, "command": command, "error": error }))
    }
}

fn render(v: &Value) -> String {
    let mut s = serde_json::to_string_pretty(v).expect("JSON values always serialize");
    s.push('\n');
    s
}
