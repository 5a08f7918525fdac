//! Generated test polytopes.

use std::path::Path;

use facecycle::{families, Point};
use serde_json::json;

use crate::format::{digest, PolytopeFile};
use crate::{CliError, Outcome, Report};

pub const DIMS: std::ops::RangeInclusive<usize> = 2..=6;
pub const MAX_POINTS: usize = 40;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Family {
    Simplex,
    Cube,
    Crosspolytope,
    Cyclic,
    Random,
}

impl Family {
    pub fn name(self) -> &'static str {
        match self {
            Family::Simplex => "simplex",
            Family::Cube => "cube",
            Family::Crosspolytope => "crosspolytope",
            Family::Cyclic => "cyclic",
            Family::Random => "random",
        }
    }

    fn takes_n(self) -> bool {
        matches!(self, Family::Cyclic | Family::Random)
    }
}

/// Vertex coordinates for one family member. `n` is required for cyclic and
/// random polytopes and ignored otherwise; `seed` only affects random ones.
pub fn generate(family: Family, dim: usize, n: Option<usize>, seed: u64) -> Result<Vec<Point>, CliError> {
    if !DIMS.contains(&dim) {
        return Err(CliError::field("dim", format!("must be in 2..=6, got {dim}")));
    }
    let count = || -> Result<usize, CliError> {
        let n = n.ok_or_else(|| CliError::field("n", format!("required for {}", family.name())))?;
        if n <= dim || n > MAX_POINTS {
            return Err(CliError::field("n", format!("must be in {}..={MAX_POINTS}, got {n}", dim + 1)));
        }
        Ok(n)
    };
    Ok(match family {
        Family::Simplex => families::simplex(dim),
        Family::Cube => families::cube(dim),
        Family::Crosspolytope => families::cross_polytope(dim),
        Family::Cyclic => families::cyclic(count()?, dim),
        Family::Random => families::random_sphere(dim, count()?, seed)?,
    })
}

pub fn file_name(family: Family, dim: usize, n: Option<usize>, seed: u64) -> String {
    match family {
        Family::Random => format!("random-d{dim}-n{}-s{seed}.json", n.unwrap_or(0)),
        Family::Cyclic => format!("cyclic-d{dim}-n{}.json", n.unwrap_or(0)),
        _ => format!("{}-d{dim}.json", family.name()),
    }
}

pub fn cmd_corpus(
    family: Family,
    dim: usize,
    n: Option<usize>,
    seed: u64,
    out: &Path,
) -> Result<Outcome, CliError> {
    let points = generate(family, dim, n, seed)?;
    let n = family.takes_n().then_some(points.len());
    let mut text = serde_json::to_string_pretty(&PolytopeFile::from_points(&points))
        .expect("polytope files serialize");
    text.push('\n');
    std::fs::create_dir_all(out).map_err(|e| CliError::Io(out.display().to_string(), e))?;
    let name = file_name(family, dim, n, seed);
    let path = out.join(&name);
    std::fs::write(&path, &text).map_err(|e| CliError::Io(path.display().to_string(), e))?;
    let params = format!("family={};dim={dim};n={n:?};seed={seed}", family.name());
    Ok(Outcome {
        report: Report {
            command: "corpus".into(),
            input_digest: digest(params.as_bytes()),
            seed: family.takes_n().then_some(seed).filter(|_| family == Family::Random),
            results: json!({
                "file": name,
                "vertices": points.len(),
                "file_digest": digest(text.as_bytes()),
            }),
        },
        passed: true,
        summary: vec![format!("wrote {} ({} vertices)", path.display(), points.len())],
        dot: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn sizes_and_ranges() {
        assert_eq!(generate(Family::Cube, 4, None, 0).unwrap().len(), 16);
        assert_eq!(generate(Family::Cyclic, 4, Some(7), 0).unwrap().len(), 7);
        assert_eq!(generate(Family::Crosspolytope, 5, None, 0).unwrap().len(), 10);
        assert!(generate(Family::Cube, 7, None, 0).is_err());
        assert!(generate(Family::Random, 3, Some(41), 0).is_err());
        assert!(generate(Family::Random, 3, None, 0).is_err());
        assert!(generate(Family::Cyclic, 4, Some(4), 0).is_err());
    }
}
