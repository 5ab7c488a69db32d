//! KnotInfo CSV ingestion. The header must carry `name` and `pd_notation`
//! columns; PDs may be written `[[1,5,2,4],[3,1,4,6],...]` or `X(1,5,2,4) ...`.

use std::io::Read;
use std::path::Path;

use serde::{Deserialize, Serialize};

use knotstate::notation::{parse_pd, PDCode};
use knotstate::LinkDiagram;

use crate::error::{CliError, Result};

#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct Fixture {
    pub name: String,
    /// PD in this crate's `X(a,b,c,d)` form.
    pub pd: String,
}

#[derive(Debug, Clone, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct FixtureSet {
    pub fixtures: Vec<Fixture>,
    pub warnings: Vec<String>,
}

impl FixtureSet {
    pub fn get(&self, name: &str) -> Option<&Fixture> {
        self.fixtures.iter().find(|f| f.name == name)
    }
}

/// Reads a PD in either KnotInfo's nested-list form or `X(...)` form.
pub fn parse_knotinfo_pd(text: &str) -> knotstate::Result<PDCode> {
    let t = text.trim();
    if !t.starts_with('[') {
        return parse_pd(t);
    }
    let numbers: Vec<&str> = t.split(|c: char| !c.is_ascii_digit()).filter(|s| !s.is_empty()).collect();
    if numbers.is_empty() || !numbers.len().is_multiple_of(4) {
        return Err(knotstate::Error::Syntax { pos: 0, msg: "expected groups of four labels".to_string() });
    }
    let x: Vec<String> = numbers.chunks(4).map(|c| format!("X({})", c.join(","))).collect();
    parse_pd(&x.join(" "))
}

pub fn ingest_reader<R: Read>(reader: R) -> Result<FixtureSet> {
    let mut rdr = csv::ReaderBuilder::new().flexible(true).from_reader(reader);
    let headers = rdr.headers().map_err(|e| CliError::Csv(e.to_string()))?.clone();
    let col = |name: &str| {
        headers.iter().position(|h| h.trim() == name).ok_or_else(|| CliError::MissingColumn(name.to_string()))
    };
    let (name_col, pd_col) = (col("name")?, col("pd_notation")?);
    let mut set = FixtureSet::default();
    for (i, row) in rdr.records().enumerate() {
        let line = i + 2;
        let row = match row {
            Ok(r) => r,
            Err(e) => {
                set.warnings.push(format!("row {line}: {e}"));
                continue;
            }
        };
        let name = row.get(name_col).unwrap_or("").trim().to_string();
        let pd = match parse_knotinfo_pd(row.get(pd_col).unwrap_or("")) {
            Ok(pd) => pd,
            Err(e) => {
                set.warnings.push(format!("row {line} ({name}): {e}"));
                continue;
            }
        };
        if let Err(e) = LinkDiagram::from_pd(&pd) {
            set.warnings.push(format!("row {line} ({name}): {e}"));
            continue;
        }
        set.fixtures.push(Fixture { name, pd: pd.to_string() });
    }
    Ok(set)
}

pub fn ingest_knotinfo(path: &Path) -> Result<FixtureSet> {
    let file = std::fs::File::open(path).map_err(|e| io(path, e))?;
    ingest_reader(file)
}

fn io(path: &Path, e: impl ToString) -> CliError {
    CliError::Io { path: path.display().to_string(), message: e.to_string() }
}

pub fn save_fixtures(path: &Path, set: &FixtureSet) -> Result<()> {
    let text = serde_json::to_string_pretty(set).map_err(|e| io(path, e))?;
    std::fs::write(path, text + "\n").map_err(|e| io(path, e))
}

pub fn load_fixtures(path: &Path) -> Result<Vec<Fixture>> {
    let text = std::fs::read_to_string(path).map_err(|e| io(path, e))?;
    let set: FixtureSet = serde_json::from_str(&text).map_err(|e| io(path, e))?;
    Ok(set.fixtures)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn nested_list_form() {
        let pd = parse_knotinfo_pd("[[1,5,2,4],[3,1,4,6],[5,3,6,2]]").unwrap();
        assert_eq!(pd.to_string(), "X(1,5,2,4) X(3,1,4,6) X(5,3,6,2)");
    }

    #[test]
    fn three_rows_one_bad() {
        let csv = "name,pd_notation\n\
                   3_1,\"[[1,5,2,4],[3,1,4,6],[5,3,6,2]]\"\n\
                   4_1,\"[[4,2,5,1],[8,6,1,5],[6,3,7,4],[2,7,3,8]]\"\n\
                   bad,\"[[1,2,3]]\"\n";
        let set = ingest_reader(csv.as_bytes()).unwrap();
        assert_eq!(set.fixtures.len(), 2);
        assert_eq!(set.warnings.len(), 1);
        assert!(set.get("4_1").is_some());
    }

    #[test]
    fn missing_column() {
        let err = ingest_reader("name,pd\nx,y\n".as_bytes()).unwrap_err();
        assert_eq!(err.kind(), "MissingColumn");
    }
}
