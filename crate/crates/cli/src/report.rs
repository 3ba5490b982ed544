use std::fmt::Write as _;

/// Output of one command: a human-readable body, then `---`, then
/// `key: value` lines for scripts.
#[derive(Debug, Clone, Default)]
pub struct Report {
    pub body: Vec<String>,
    pub fields: Vec<(String, String)>,
}

impl Report {
    pub fn new(command: &str) -> Report {
        let mut r = Report::default();
        r.field("command", command);
        r
    }

    pub fn line(&mut self, s: impl Into<String>) {
        self.body.push(s.into());
    }

    pub fn field(&mut self, key: &str, value: impl ToString) {
        self.fields.push((key.to_string(), value.to_string()));
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.fields.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }

    pub fn render(&self) -> String {
        let mut out = String::new();
        for l in &self.body {
            out.push_str(l);
            out.push('\n');
        }
        out.push_str("---\n");
        for (k, v) in &self.fields {
            let _ = writeln!(out, "{k}: {v}");
        }
        out
    }
}
