use serde::Serialize;
use serde_json::{Map, Value};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
    Error,
}

impl Status {
    pub fn exit_code(self) -> i32 {
        match self {
            Status::Pass => 0,
            Status::Fail => 1,
            Status::Error => 2,
        }
    }
}

/// Machine-readable result of one command. Field names are stable; maps are
/// emitted with sorted keys.
#[derive(Clone, Debug, Serialize)]
pub struct RunReport {
    pub command: String,
    pub status: Status,
    pub exit_code: i32,
    pub inputs: Map<String, Value>,
    pub verdicts: Map<String, Value>,
    pub witnesses: Map<String, Value>,
    /// Intermediate storage measured in cells, for commands that evaluate.
    pub footprint: Option<Value>,
    /// Wall-clock milliseconds; `null` under `--no-timing`.
    pub timing: Option<Map<String, Value>>,
    pub error: Option<String>,
}

impl RunReport {
    pub fn new(command: &str) -> Self {
        RunReport {
            command: command.to_string(),
            status: Status::Pass,
            exit_code: 0,
            inputs: Map::new(),
            verdicts: Map::new(),
            witnesses: Map::new(),
            footprint: None,
            timing: None,
            error: None,
        }
    }

    pub fn input(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.inputs.insert(key.to_string(), value.into());
        self
    }

    pub fn verdict(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.verdicts.insert(key.to_string(), value.into());
        self
    }

    pub fn witness(&mut self, key: &str, value: impl Into<Value>) -> &mut Self {
        self.witnesses.insert(key.to_string(), value.into());
        self
    }

    pub fn fail(&mut self) -> &mut Self {
        self.set_status(Status::Fail, None)
    }

    pub fn set_status(&mut self, status: Status, code: Option<i32>) -> &mut Self {
        self.status = status;
        self.exit_code = code.unwrap_or_else(|| status.exit_code());
        self
    }

    /// Canonical text: sorted keys, two-space indent, trailing newline.
    pub fn render(&self) -> String {
        let value = serde_json::to_value(self).expect("reports serialize");
        let mut text = serde_json::to_string_pretty(&value).expect("values serialize");
        text.push('\n');
        text
    }
}

/// Drops `timing` from a rendered report so two runs can be compared.
pub fn strip_timing(report: &str) -> Option<Value> {
    let mut value: Value = serde_json::from_str(report).ok()?;
    value.as_object_mut()?.remove("timing");
    Some(value)
}
