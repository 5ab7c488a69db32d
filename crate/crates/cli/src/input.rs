//! Turning `--pd/--braid/--montesinos/--file/--name` into a diagram.

use std::path::{Path, PathBuf};

use clap::Args;
use serde_json::{json, Value};

use knotstate::montesinos::{self, MontesinosNormalForm};
use knotstate::notation::{parse_braid, parse_montesinos, parse_pd, BraidWord, PDCode};
use knotstate::LinkDiagram;

use crate::error::{CliError, Result};
use crate::ingest;

#[derive(Debug, Clone, Default, Args)]
pub struct InputArgs {
    /// PD code, e.g. "X(4,2,5,1) X(8,6,1,5) X(6,3,7,4) X(2,7,3,8)".
    #[arg(long)]
    pub pd: Option<String>,
    /// Braid word, e.g. "B3: s1^3 s2^-2".
    #[arg(long)]
    pub braid: Option<String>,
    /// Montesinos slope vector, e.g. "M(1/3, -1/2, 2/5)".
    #[arg(long, alias = "slopes")]
    pub montesinos: Option<String>,
    /// File holding one description in any of the above forms.
    #[arg(long)]
    pub file: Option<PathBuf>,
    /// Fixture name from an ingested knot table.
    #[arg(long)]
    pub name: Option<String>,
    /// Fixture file written by `ingest`.
    #[arg(long, default_value = "knotstate-fixtures.json")]
    pub fixtures: PathBuf,
}

#[derive(Debug, Clone)]
pub enum Source {
    Pd(PDCode),
    Braid(BraidWord),
    Montesinos(MontesinosNormalForm),
}

#[derive(Debug, Clone)]
pub struct Input {
    pub source: Source,
    /// Text as given.
    pub text: String,
    pub name: Option<String>,
    pub diagram: LinkDiagram,
}

impl Input {
    pub fn echo(&self) -> Value {
        let kind = match self.source {
            Source::Pd(_) => "pd",
            Source::Braid(_) => "braid",
            Source::Montesinos(_) => "montesinos",
        };
        let mut v = json!({ "kind": kind, "text": self.text });
        if let Some(n) = &self.name {
            v["name"] = json!(n);
        }
        if let Source::Montesinos(n) = &self.source {
            v["normal_form"] = json!(n.to_vector().to_string());
        }
        v
    }
}

/// `X(..)` form, or the KnotInfo list form `[[..],..]`.
fn pd(text: &str) -> Result<PDCode> {
    if text.trim_start().starts_with('[') {
        Ok(ingest::parse_knotinfo_pd(text)?)
    } else {
        Ok(parse_pd(text)?)
    }
}

/// Parses text in whichever notation it is written in.
pub fn parse_any(text: &str) -> Result<Source> {
    let t = text.trim();
    if t.starts_with('B') && t.contains(':') {
        Ok(Source::Braid(parse_braid(t)?))
    } else if t.starts_with("M(") {
        Ok(Source::Montesinos(montesinos::normalize(&parse_montesinos(t)?)))
    } else {
        Ok(Source::Pd(pd(t)?))
    }
}

pub fn diagram_of(source: &Source) -> Result<LinkDiagram> {
    Ok(match source {
        Source::Pd(pd) => LinkDiagram::from_pd(pd)?,
        Source::Braid(b) => LinkDiagram::braid_closure(b)?,
        Source::Montesinos(n) => montesinos::build_diagram(n)?,
    })
}

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::Io { path: path.display().to_string(), message: e.to_string() })
}

impl InputArgs {
    pub fn resolve(&self) -> Result<Input> {
        let given = [
            self.pd.is_some(),
            self.braid.is_some(),
            self.montesinos.is_some(),
            self.file.is_some(),
            self.name.is_some(),
        ]
        .iter()
        .filter(|&&b| b)
        .count();
        if given != 1 {
            return Err(CliError::Usage("give exactly one of --pd, --braid, --montesinos, --file, --name".to_string()));
        }
        let (source, text, name) = if let Some(t) = &self.pd {
            (Source::Pd(pd(t)?), t.clone(), None)
        } else if let Some(t) = &self.braid {
            (Source::Braid(parse_braid(t)?), t.clone(), None)
        } else if let Some(t) = &self.montesinos {
            (Source::Montesinos(montesinos::normalize(&parse_montesinos(t)?)), t.clone(), None)
        } else if let Some(path) = &self.file {
            let t = read(path)?;
            (parse_any(&t)?, t.trim().to_string(), None)
        } else {
            let name = self.name.clone().unwrap_or_default();
            let fixtures = ingest::load_fixtures(&self.fixtures)?;
            let f = fixtures.into_iter().find(|f| f.name == name).ok_or_else(|| CliError::UnknownName(name.clone()))?;
            (Source::Pd(parse_pd(&f.pd)?), f.pd, Some(name))
        };
        let diagram = diagram_of(&source)?;
        Ok(Input { source, text, name, diagram })
    }
}
