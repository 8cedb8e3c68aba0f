//! Presentation serialization.
//!
//! JSON layout (field order fixed):
//!
//! ```text
//! {"n": 2, "genus": 0, "generators": ["s1", "t1"],
//!  "relations": [{"family": "R3", "params": {}, "lhs": [], "rhs": ["s1", "s1"]}, ...]}
//! ```
//!
//! Text layout: a `#` header line, then one `lhs = rhs  # <family> <params>`
//! line per relation.

use std::str::FromStr;

use serde::ser::SerializeMap;
use serde::{Serialize, Serializer};

use crate::presentation::{Presentation, Relation};
use crate::word::Word;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Default)]
pub enum ExportFormat {
    Json,
    #[default]
    Text,
}

impl FromStr for ExportFormat {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "json" => Ok(ExportFormat::Json),
            "text" => Ok(ExportFormat::Text),
            other => Err(format!("unknown format {other:?}, expected json or text")),
        }
    }
}

struct Params<'a>(&'a [(char, usize)]);

impl Serialize for Params<'_> {
    fn serialize<S: Serializer>(&self, serializer: S) -> Result<S::Ok, S::Error> {
        let mut map = serializer.serialize_map(Some(self.0.len()))?;
        for (name, value) in self.0 {
            map.serialize_entry(&name.to_string(), value)?;
        }
        map.end()
    }
}

#[derive(Serialize)]
struct RelationJson<'a> {
    family: String,
    params: Params<'a>,
    lhs: Vec<String>,
    rhs: Vec<String>,
}

#[derive(Serialize)]
struct PresentationJson<'a> {
    n: usize,
    genus: usize,
    generators: Vec<String>,
    relations: Vec<RelationJson<'a>>,
}

fn word_tokens(word: &Word) -> Vec<String> {
    word.iter().map(ToString::to_string).collect()
}

fn relation_json(rel: &Relation) -> RelationJson<'_> {
    RelationJson {
        family: rel.family.to_string(),
        params: Params(&rel.params),
        lhs: word_tokens(&rel.lhs),
        rhs: word_tokens(&rel.rhs),
    }
}

pub fn to_json(pres: &Presentation) -> String {
    let doc = PresentationJson {
        n: pres.params.n(),
        genus: pres.params.genus(),
        generators: pres.generators.iter().map(ToString::to_string).collect(),
        relations: pres.relations.iter().map(relation_json).collect(),
    };
    let mut out = serde_json::to_string_pretty(&doc).expect("presentation is always serializable");
    out.push('\n');
    out
}

/// `lhs = rhs  # R9 i=1`
pub fn relation_line(rel: &Relation) -> String {
    format!("{}  # {}", rel, rel.label())
}

pub fn to_text(pres: &Presentation) -> String {
    let generators: Vec<String> = pres.generators.iter().map(ToString::to_string).collect();
    let mut out = format!(
        "# n={} genus={} generators: {}\n",
        pres.params.n(),
        pres.params.genus(),
        generators.join(" ")
    );
    for rel in &pres.relations {
        out.push_str(&relation_line(rel));
        out.push('\n');
    }
    out
}

pub fn export_presentation(pres: &Presentation, format: ExportFormat) -> Vec<u8> {
    match format {
        ExportFormat::Json => to_json(pres).into_bytes(),
        ExportFormat::Text => to_text(pres).into_bytes(),
    }
}
