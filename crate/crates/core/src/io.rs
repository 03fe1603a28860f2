//! File formats (`latder-lattice-v1`, `latder-labels-v1`, `latder-covers-v1`)
//! and Graphviz export. Field-level documentation lives in FORMATS.md.

use std::fmt::Write as _;
use std::path::Path;

use serde::{Deserialize, Serialize};
use serde_json::Value;
use sha2::{Digest, Sha256};

use crate::bounded::FacetLabelling;
use crate::cover::{Cover, CoverPoset};
use crate::error::{Error, Result};
use crate::order::{build_lattice, FiniteLattice};
use crate::quotient::Congruence;

pub const LATTICE_FORMAT: &str = "latder-lattice-v1";
pub const LABELS_FORMAT: &str = "latder-labels-v1";
pub const COVERS_FORMAT: &str = "latder-covers-v1";

/// Where a lattice came from.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct Provenance {
    pub family: String,
    #[serde(default, skip_serializing_if = "Value::is_null")]
    pub params: Value,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub seed: Option<u64>,
}

impl Provenance {
    pub fn new(family: impl Into<String>, params: Value) -> Self {
        Provenance {
            family: family.into(),
            params,
            seed: None,
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LatticeFile {
    pub format: String,
    pub size: usize,
    pub covers: Vec<[usize; 2]>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub names: Option<Vec<String>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub provenance: Option<Provenance>,
}

fn json<T: Serialize + ?Sized>(v: &T) -> String {
    serde_json::to_string(v).expect("plain data serializes")
}

/// Line and column of the first occurrence of `"key"` in `text`.
fn locate(text: &str, key: &str) -> (usize, usize) {
    let needle = format!("\"{key}\"");
    for (i, line) in text.lines().enumerate() {
        if let Some(c) = line.find(&needle) {
            return (i + 1, c + 1);
        }
    }
    (1, 1)
}

fn parse_error(text: &str, key: &str, msg: impl Into<String>) -> Error {
    let (line, column) = locate(text, key);
    Error::Parse {
        line,
        column,
        msg: msg.into(),
    }
}

fn from_json<T: for<'de> Deserialize<'de>>(text: &str) -> Result<T> {
    serde_json::from_str(text).map_err(|e| Error::Parse {
        line: e.line(),
        column: e.column(),
        msg: e.to_string(),
    })
}

impl LatticeFile {
    pub fn from_lattice(l: &FiniteLattice, provenance: Option<Provenance>) -> Self {
        LatticeFile {
            format: LATTICE_FORMAT.into(),
            size: l.size(),
            covers: l.hasse().iter().map(|&(a, b)| [a, b]).collect(),
            names: l.poset().names().map(<[String]>::to_vec),
            provenance,
        }
    }

    /// One top-level key per line, values in compact JSON.
    pub fn to_canonical_string(&self) -> String {
        let mut fields = vec![
            format!("\"format\": {}", json(&self.format)),
            format!("\"size\": {}", self.size),
            format!("\"covers\": {}", json(&self.covers)),
        ];
        if let Some(n) = &self.names {
            fields.push(format!("\"names\": {}", json(n)));
        }
        if let Some(p) = &self.provenance {
            fields.push(format!("\"provenance\": {}", json(p)));
        }
        format!("{{\n  {}\n}}\n", fields.join(",\n  "))
    }

    pub fn parse(text: &str) -> Result<Self> {
        let file: LatticeFile = from_json(text)?;
        if file.format != LATTICE_FORMAT {
            return Err(parse_error(
                text,
                "format",
                format!("expected format {LATTICE_FORMAT:?}, found {:?}", file.format),
            ));
        }
        if let Some(w) = file.covers.windows(2).position(|w| w[0] >= w[1]) {
            return Err(parse_error(
                text,
                "covers",
                format!("covers must be sorted and distinct (entry {})", w + 1),
            ));
        }
        Ok(file)
    }

    pub fn to_lattice(&self, text: &str) -> Result<FiniteLattice> {
        let edges: Vec<(usize, usize)> = self.covers.iter().map(|&[a, b]| (a, b)).collect();
        build_lattice(self.size, &edges, self.names.clone()).map_err(|e| match e {
            Error::Cycle(_) | Error::NotReduced { .. } | Error::Index { .. } => {
                parse_error(text, "covers", e.to_string())
            }
            Error::NotLattice(_) => parse_error(text, "covers", e.to_string()),
            Error::Invalid(_) => parse_error(text, "names", e.to_string()),
            other => other,
        })
    }
}

/// Canonical file text for a lattice.
pub fn lattice_to_string(l: &FiniteLattice, provenance: Option<Provenance>) -> String {
    LatticeFile::from_lattice(l, provenance).to_canonical_string()
}

pub fn parse_lattice(text: &str) -> Result<(FiniteLattice, Option<Provenance>)> {
    let file = LatticeFile::parse(text)?;
    let l = file.to_lattice(text)?;
    Ok((l, file.provenance))
}

pub fn load(path: impl AsRef<Path>) -> Result<FiniteLattice> {
    Ok(parse_lattice(&std::fs::read_to_string(path)?)?.0)
}

pub fn save(l: &FiniteLattice, path: impl AsRef<Path>) -> Result<()> {
    save_with_provenance(l, None, path)
}

pub fn save_with_provenance(l: &FiniteLattice, provenance: Option<Provenance>, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, lattice_to_string(l, provenance))?;
    Ok(())
}

/// SHA-256 of the lattice's canonical file without provenance, in hex.
pub fn lattice_hash(l: &FiniteLattice) -> String {
    let digest = Sha256::digest(lattice_to_string(l, None).as_bytes());
    digest.iter().fold(String::new(), |mut s, b| {
        let _ = write!(s, "{b:02x}");
        s
    })
}

/// Provenance of `Cov(L, γ)` (iterated along `seeds`), keyed by the hash of `L`.
pub fn derived_provenance(base: &FiniteLattice, seeds: &[Cover]) -> Provenance {
    Provenance::new(
        "derived",
        serde_json::json!({
            "base_sha256": lattice_hash(base),
            "covers": seeds.iter().map(|c| [c.lo, c.hi]).collect::<Vec<_>>(),
        }),
    )
}

pub fn quotient_provenance(base: &FiniteLattice, theta: &Congruence) -> Provenance {
    Provenance::new(
        "quotient",
        serde_json::json!({
            "base_sha256": lattice_hash(base),
            "classes": theta.classes(),
        }),
    )
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct LabelFile {
    pub format: String,
    pub entries: Vec<(usize, usize, u64)>,
}

pub fn labels_to_string(f: &FacetLabelling) -> String {
    let entries: Vec<(usize, usize, u64)> = f.clone().into();
    format!(
        "{{\n  \"format\": {},\n  \"entries\": {}\n}}\n",
        json(LABELS_FORMAT),
        json(&entries)
    )
}

pub fn parse_labels(text: &str) -> Result<FacetLabelling> {
    let file: LabelFile = from_json(text)?;
    if file.format != LABELS_FORMAT {
        return Err(parse_error(
            text,
            "format",
            format!("expected format {LABELS_FORMAT:?}"),
        ));
    }
    if file.entries.windows(2).any(|w| (w[0].0, w[0].1) >= (w[1].0, w[1].1)) {
        return Err(parse_error(
            text,
            "entries",
            "entries must be sorted by cover and distinct",
        ));
    }
    Ok(file.entries.into())
}

pub fn load_labels(path: impl AsRef<Path>) -> Result<FacetLabelling> {
    parse_labels(&std::fs::read_to_string(path)?)
}

pub fn save_labels(f: &FacetLabelling, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, labels_to_string(f))?;
    Ok(())
}

/// The poset of covers: cover list, Hasse diagram over cover indices, components.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct CoversFile {
    pub format: String,
    pub base_size: usize,
    pub covers: Vec<Cover>,
    pub order: Vec<[usize; 2]>,
    pub components: Vec<Vec<usize>>,
}

impl CoversFile {
    pub fn from_cover_poset(cp: &CoverPoset<'_>) -> Self {
        CoversFile {
            format: COVERS_FORMAT.into(),
            base_size: cp.base().size(),
            covers: cp.covers().to_vec(),
            order: cp.poset().hasse().iter().map(|&(a, b)| [a, b]).collect(),
            components: cp.components().into_iter().map(|c| c.elements).collect(),
        }
    }

    pub fn to_canonical_string(&self) -> String {
        format!(
            "{{\n  \"format\": {},\n  \"base_size\": {},\n  \"covers\": {},\n  \"order\": {},\n  \"components\": {}\n}}\n",
            json(&self.format),
            self.base_size,
            json(&self.covers),
            json(&self.order),
            json(&self.components)
        )
    }
}

fn dot_escape(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

fn dot(name: &str, labels: impl Iterator<Item = String>, edges: &[(usize, usize)]) -> String {
    let mut out = format!("digraph {name} {{\n  rankdir=BT;\n");
    for (i, label) in labels.enumerate() {
        let _ = writeln!(out, "  {i} [label=\"{}\"];", dot_escape(&label));
    }
    for &(a, b) in edges {
        let _ = writeln!(out, "  {a} -> {b};");
    }
    out.push_str("}\n");
    out
}

/// Graphviz rendering: one node per id, one edge per Hasse cover, bottom first.
pub trait ToDot {
    fn to_dot(&self) -> String;
}

impl ToDot for FiniteLattice {
    fn to_dot(&self) -> String {
        dot("lattice", (0..self.size()).map(|x| self.label(x)), self.hasse())
    }
}

impl ToDot for CoverPoset<'_> {
    fn to_dot(&self) -> String {
        let p = self.poset();
        dot("covers", (0..p.size()).map(|x| p.label(x)), p.hasse())
    }
}

pub fn export_dot(x: &impl ToDot, path: impl AsRef<Path>) -> Result<()> {
    std::fs::write(path, x.to_dot())?;
    Ok(())
}
