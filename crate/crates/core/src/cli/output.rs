use clap::ValueEnum;
use serde::Serialize;

use crate::error::{Error, Result};

#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, ValueEnum)]
pub enum Format {
    #[default]
    Text,
    Json,
    Csv,
}

/// One command result in all three output formats.
#[derive(Clone, Debug, PartialEq)]
pub struct Rendered {
    pub text: String,
    pub json: String,
    /// Header row first.
    pub csv: Vec<Vec<String>>,
}

impl Rendered {
    pub fn new<T: Serialize>(text: String, doc: &T, csv: Vec<Vec<String>>) -> Result<Self> {
        let json = serde_json::to_string_pretty(doc)?;
        Ok(Rendered { text, json, csv })
    }

    pub fn render(&self, format: Format) -> Result<String> {
        let mut out = match format {
            Format::Text => self.text.clone(),
            Format::Json => self.json.clone(),
            Format::Csv => {
                let mut w = csv::Writer::from_writer(Vec::new());
                for row in &self.csv {
                    w.write_record(row).map_err(|e| Error::InvalidInput(e.to_string()))?;
                }
                let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
                String::from_utf8(bytes).expect("csv output is utf-8")
            }
        };
        if !out.ends_with('\n') {
            out.push('\n');
        }
        Ok(out)
    }
}

pub(crate) fn row<I, S>(items: I) -> Vec<String>
where
    I: IntoIterator<Item = S>,
    S: ToString,
{
    items.into_iter().map(|s| s.to_string()).collect()
}
