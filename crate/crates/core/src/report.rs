//! Line-oriented `key = value` reports grouped in `[section]` blocks.

use std::fmt;

#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Report {
    sections: Vec<Section>,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Section {
    pub name: String,
    pub entries: Vec<(String, String)>,
}

impl Report {
    pub fn new() -> Self {
        Self::default()
    }

    /// Starts a new section; subsequent [`Report::kv`] calls append to it.
    pub fn section(&mut self, name: impl Into<String>) -> &mut Self {
        self.sections.push(Section { name: name.into(), entries: Vec::new() });
        self
    }

    pub fn kv(&mut self, key: impl Into<String>, value: impl fmt::Display) -> &mut Self {
        if self.sections.is_empty() {
            self.section("report");
        }
        let last = self.sections.last_mut().expect("a section");
        last.entries.push((key.into(), value.to_string()));
        self
    }

    pub fn sections(&self) -> &[Section] {
        &self.sections
    }

    /// Value of `key` in section `name`.
    pub fn get(&self, name: &str, key: &str) -> Option<&str> {
        self.sections
            .iter()
            .filter(|s| s.name == name)
            .flat_map(|s| s.entries.iter())
            .find(|(k, _)| k == key)
            .map(|(_, v)| v.as_str())
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, s) in self.sections.iter().enumerate() {
            if i > 0 {
                writeln!(f)?;
            }
            writeln!(f, "[{}]", s.name)?;
            for (k, v) in &s.entries {
                writeln!(f, "{k} = {v}")?;
            }
        }
        Ok(())
    }
}

/// `inf` for `None`.
pub fn rank_str(r: Option<usize>) -> String {
    r.map_or_else(|| "inf".to_string(), |r| r.to_string())
}

pub fn join<T: fmt::Display>(items: impl IntoIterator<Item = T>, sep: &str) -> String {
    items.into_iter().map(|x| x.to_string()).collect::<Vec<_>>().join(sep)
}
