//! The shipped knot fixtures and loaders for `.braid` and `.vkd` files.
//!
//! A `.braid` file names the strand count and the word:
//!
//! ```text
//! # Kishino knot K3
//! strands 3
//! word v2 s1 s2 s1 v2 -s1 -s2 -s1
//! ```

use std::fs;
use std::path::{Path, PathBuf};

use crate::braidrep::{parse_braid, BraidError, VirtualBraidWord};
use crate::diagmod::{
    parse_diagram, presentation_from_braid, presentation_from_diagram, CrossingDiagram, DiagramError,
    PresentationMatrix,
};
use crate::switchlab::{Switch, SwitchError};

#[derive(Debug, thiserror::Error)]
pub enum KnotError {
    #[error("unknown knot {0:?}")]
    Unknown(String),
    #[error("{0}: {1}")]
    Io(PathBuf, std::io::Error),
    #[error("bad braid file: {0}")]
    BadBraidFile(String),
    #[error(transparent)]
    Braid(#[from] BraidError),
    #[error(transparent)]
    Diagram(#[from] DiagramError),
}

#[derive(Clone, Debug)]
pub struct Knot {
    pub name: String,
    pub note: String,
    pub braid: Option<VirtualBraidWord>,
    pub diagram: Option<CrossingDiagram>,
}

impl Knot {
    /// Braid closure matrix when a word is known, else the diagram matrix.
    pub fn presentation(&self, s: &Switch) -> Result<PresentationMatrix, SwitchError> {
        match (&self.braid, &self.diagram) {
            (Some(w), _) => presentation_from_braid(w, s),
            (None, Some(d)) => presentation_from_diagram(d, s),
            (None, None) => unreachable!("a knot always has a source"),
        }
    }

    pub fn diagram_presentation(&self, s: &Switch) -> Option<Result<PresentationMatrix, SwitchError>> {
        self.diagram.as_ref().map(|d| presentation_from_diagram(d, s))
    }

    fn from_texts(name: &str, braid: Option<&str>, diagram: Option<&str>) -> Result<Knot, KnotError> {
        let note = braid.or(diagram).map(leading_comment).unwrap_or_default();
        Ok(Knot {
            name: name.to_string(),
            note,
            braid: braid.map(parse_braid_file).transpose()?,
            diagram: diagram.map(parse_diagram).transpose()?,
        })
    }
}

fn leading_comment(text: &str) -> String {
    text.lines().find_map(|l| l.trim().strip_prefix('#')).map(|s| s.trim().to_string()).unwrap_or_default()
}

pub fn parse_braid_file(text: &str) -> Result<VirtualBraidWord, KnotError> {
    let mut strands = None;
    let mut word = None;
    for raw in text.lines() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (key, rest) = line.split_once(char::is_whitespace).unwrap_or((line, ""));
        match key {
            "strands" => {
                let n =
                    rest.trim().parse().map_err(|_| KnotError::BadBraidFile(format!("bad strand count {rest:?}")))?;
                strands = Some(n);
            }
            "word" => word = Some(rest.trim().to_string()),
            _ => return Err(KnotError::BadBraidFile(format!("unexpected line {line:?}"))),
        }
    }
    let n = strands.ok_or_else(|| KnotError::BadBraidFile("missing 'strands'".into()))?;
    let w = word.ok_or_else(|| KnotError::BadBraidFile("missing 'word'".into()))?;
    Ok(parse_braid(&w, n)?)
}

macro_rules! fixture {
    ($f:literal) => {
        include_str!(concat!(env!("CARGO_MANIFEST_DIR"), "/fixtures/", $f))
    };
}

type Builtin = (&'static str, Option<&'static str>, Option<&'static str>);

const BUILTINS: &[Builtin] = &[
    ("unknot", Some(fixture!("unknot.braid")), None),
    ("classical_trefoil", Some(fixture!("classical_trefoil.braid")), Some(fixture!("classical_trefoil.vkd"))),
    ("figure_eight", Some(fixture!("figure_eight.braid")), Some(fixture!("figure_eight.vkd"))),
    ("virtual_trefoil", Some(fixture!("virtual_trefoil.braid")), Some(fixture!("virtual_trefoil.vkd"))),
    ("virtual_trefoil_r2", None, Some(fixture!("virtual_trefoil_r2.vkd"))),
    ("kishino1", Some(fixture!("kishino1.braid")), Some(fixture!("kishino1.vkd"))),
    ("kishino2", Some(fixture!("kishino2.braid")), Some(fixture!("kishino2.vkd"))),
    ("kishino3", Some(fixture!("kishino3.braid")), Some(fixture!("kishino3.vkd"))),
];

pub fn knot_names() -> Vec<&'static str> {
    BUILTINS.iter().map(|b| b.0).collect()
}

/// A shipped knot by name.
pub fn builtin(name: &str) -> Result<Knot, KnotError> {
    let (n, b, d) = BUILTINS.iter().find(|b| b.0 == name).ok_or_else(|| KnotError::Unknown(name.into()))?;
    Knot::from_texts(n, *b, *d)
}

fn read(path: &Path) -> Result<String, KnotError> {
    fs::read_to_string(path).map_err(|e| KnotError::Io(path.to_path_buf(), e))
}

/// Looks for `name.braid` and `name.vkd` in `dir`.
pub fn load_from_dir(dir: &Path, name: &str) -> Result<Knot, KnotError> {
    let bp = dir.join(format!("{name}.braid"));
    let dp = dir.join(format!("{name}.vkd"));
    let b = if bp.is_file() { Some(read(&bp)?) } else { None };
    let d = if dp.is_file() { Some(read(&dp)?) } else { None };
    if b.is_none() && d.is_none() {
        return Err(KnotError::Unknown(name.into()));
    }
    Knot::from_texts(name, b.as_deref(), d.as_deref())
}

/// A single `.braid` or `.vkd` file; any other extension is read as a diagram.
pub fn load_file(path: &Path) -> Result<Knot, KnotError> {
    let text = read(path)?;
    let name = path.file_stem().map(|s| s.to_string_lossy().into_owned()).unwrap_or_default();
    if path.extension().is_some_and(|e| e == "braid") {
        Knot::from_texts(&name, Some(&text), None)
    } else {
        Knot::from_texts(&name, None, Some(&text))
    }
}
