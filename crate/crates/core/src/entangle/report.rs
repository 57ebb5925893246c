//! Plain key/value reports for command-line output.

use std::fmt;

/// An ordered list of `key: value` lines under an optional title.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    pub title: Option<String>,
    pub entries: Vec<(String, String)>,
}

impl Report {
    pub fn new(title: impl Into<String>) -> Self {
        Self { title: Some(title.into()), entries: Vec::new() }
    }

    pub fn push(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        self.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn get(&self, key: &str) -> Option<&str> {
        self.entries.iter().find(|(k, _)| k == key).map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if let Some(t) = &self.title {
            writeln!(f, "{t}")?;
        }
        let width = self.entries.iter().map(|(k, _)| k.chars().count()).max().unwrap_or(0);
        for (k, v) in &self.entries {
            writeln!(f, "  {k:<width$}  {v}")?;
        }
        Ok(())
    }
}
