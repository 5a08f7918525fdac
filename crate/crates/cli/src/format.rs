//! The `PolytopeFile` JSON format.
//!
//! ```json
//! { "format": 1, "dim": 2, "vertices": [["0", "0"], ["1", "0"], ["0", "1/2"]] }
//! { "format": 1, "dim": 2, "facets": [[0, 1], [1, 2], [0, 2]] }
//! ```
//!
//! Coordinates are exact rational strings `"p"` or `"p/q"` with `q > 0`.
//! When both `vertices` and `facets` are present the facets must match the
//! hull of the vertices.

use std::collections::BTreeSet;
use std::path::Path;

use facecycle::geometry::{facet_enumeration, format_rational, parse_rational};
use facecycle::{Point, Polytope};
use serde::{Deserialize, Serialize};
use sha2::{Digest, Sha256};

use crate::CliError;

pub const FORMAT_VERSION: u32 = 1;

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(deny_unknown_fields)]
pub struct PolytopeFile {
    pub format: u32,
    pub dim: usize,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub vertices: Option<Vec<Vec<String>>>,
    #[serde(default, skip_serializing_if = "Option::is_none")]
    pub facets: Option<Vec<Vec<usize>>>,
}

/// A parsed input with the digest of its raw bytes.
pub struct Loaded {
    pub polytope: Polytope,
    pub digest: String,
}

impl PolytopeFile {
    pub fn from_points(points: &[Point]) -> Self {
        PolytopeFile {
            format: FORMAT_VERSION,
            dim: points.first().map_or(0, Point::dim),
            vertices: Some(
                points
                    .iter()
                    .map(|p| p.coords().iter().map(format_rational).collect())
                    .collect(),
            ),
            facets: None,
        }
    }

    pub fn parse(text: &str) -> Result<Self, CliError> {
        serde_json::from_str(text).map_err(|e| CliError::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    }

    pub fn to_polytope(&self) -> Result<Polytope, CliError> {
        if self.format != FORMAT_VERSION {
            return Err(CliError::field("format", format!("unsupported version {}", self.format)));
        }
        let polytope = match (&self.vertices, &self.facets) {
            (None, None) => return Err(CliError::field("vertices", "neither vertices nor facets given")),
            (Some(rows), facets) => {
                let points = self.points(rows)?;
                if let Some(facets) = facets {
                    self.check_facets(&points, facets)?;
                }
                Polytope::from_points(points)?
            }
            (None, Some(facets)) => {
                let n = facets.iter().flatten().max().map_or(0, |m| m + 1);
                Polytope::from_facets(facets, n)?
            }
        };
        if polytope.dim() != self.dim {
            return Err(CliError::field(
                "dim",
                format!("declared {} but the polytope has dimension {}", self.dim, polytope.dim()),
            ));
        }
        Ok(polytope)
    }

    fn points(&self, rows: &[Vec<String>]) -> Result<Vec<Point>, CliError> {
        rows.iter()
            .enumerate()
            .map(|(i, row)| {
                if row.len() != self.dim {
                    return Err(CliError::field(
                        format!("vertices[{i}]"),
                        format!("expected {} coordinates, found {}", self.dim, row.len()),
                    ));
                }
                row.iter()
                    .enumerate()
                    .map(|(k, s)| {
                        parse_rational(s).ok_or_else(|| {
                            CliError::field(format!("vertices[{i}][{k}]"), format!("invalid rational {s:?}"))
                        })
                    })
                    .collect::<Result<Vec<_>, _>>()
                    .map(Point::new)
            })
            .collect()
    }

    fn check_facets(&self, points: &[Point], facets: &[Vec<usize>]) -> Result<(), CliError> {
        for (i, f) in facets.iter().enumerate() {
            if let Some(&v) = f.iter().find(|&&v| v >= points.len()) {
                return Err(CliError::field(format!("facets[{i}]"), format!("vertex {v} out of range")));
            }
        }
        let given: BTreeSet<BTreeSet<usize>> =
            facets.iter().map(|f| f.iter().copied().collect()).collect();
        let hull: BTreeSet<BTreeSet<usize>> = facet_enumeration(points)?
            .into_iter()
            .map(|f| f.vertices.into_iter().collect())
            .collect();
        if given != hull {
            return Err(CliError::field("facets", "do not match the hull of the vertices"));
        }
        Ok(())
    }
}

pub fn digest(bytes: &[u8]) -> String {
    Sha256::digest(bytes).iter().map(|b| format!("{b:02x}")).collect()
}

pub fn load(path: &Path) -> Result<Loaded, CliError> {
    let bytes = std::fs::read(path).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let text = String::from_utf8(bytes.clone())
        .map_err(|_| CliError::field("file", "not valid UTF-8"))?;
    let polytope = PolytopeFile::parse(&text)?.to_polytope()?;
    Ok(Loaded { polytope, digest: digest(&bytes) })
}
