use std::collections::BTreeMap;
use std::str::FromStr;

use facecycle::complex::{Cycle, EdgeSet};
use facecycle::cyclespace::{
    bipartite_via_2faces, cycle_space_dimension, is_bipartite, odd_vertices, random_even_subgraph, Bipartiteness,
    Decomposition, EvenSubgraph, FacialBasis,
};
use facecycle::decompose::Decomposer;
use facecycle::geometry::format_rational;
use facecycle::shelling::{line_shelling, Shelling, StepReport};
use facecycle::Polytope;
use serde_json::{json, Value};

use crate::dot::graph_dot;
use crate::{CliError, Loaded, Outcome, Report};

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Method {
    Proof,
    Oracle,
    Both,
}

/// `--target`: an edge list `"u-v,u-v,…"` or `"random:<k>:<seed>"` (XOR of
/// `k` distinct fundamental cycles chosen with `seed`).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TargetSpec {
    Edges(Vec<(usize, usize)>),
    Random { chords: usize, seed: u64 },
}

impl FromStr for TargetSpec {
    type Err = CliError;

    fn from_str(s: &str) -> Result<Self, CliError> {
        let bad = |m: String| CliError::field("target", m);
        if let Some(rest) = s.strip_prefix("random:") {
            let (k, seed) = rest
                .split_once(':')
                .ok_or_else(|| bad("expected random:<k>:<seed>".into()))?;
            return Ok(TargetSpec::Random {
                chords: k.parse().map_err(|_| bad(format!("invalid count {k:?}")))?,
                seed: seed.parse().map_err(|_| bad(format!("invalid seed {seed:?}")))?,
            });
        }
        let mut edges = Vec::new();
        for part in s.split(',').map(str::trim).filter(|p| !p.is_empty()) {
            let (u, v) = part
                .split_once('-')
                .ok_or_else(|| bad(format!("expected u-v, found {part:?}")))?;
            let u = u.trim().parse().map_err(|_| bad(format!("invalid vertex in {part:?}")))?;
            let v = v.trim().parse().map_err(|_| bad(format!("invalid vertex in {part:?}")))?;
            edges.push((u, v));
        }
        Ok(TargetSpec::Edges(edges))
    }
}

impl TargetSpec {
    pub fn resolve(&self, polytope: &Polytope) -> Result<EvenSubgraph, CliError> {
        let graph = polytope.graph();
        let edges = match self {
            TargetSpec::Random { chords, seed } => {
                return Ok(random_even_subgraph(graph, Some(*chords), *seed));
            }
            TargetSpec::Edges(list) => {
                let mut set = EdgeSet::empty(graph);
                for &(u, v) in list {
                    let e = graph
                        .edge_id(u, v)
                        .ok_or_else(|| CliError::field("target", format!("{u}-{v} is not an edge")))?;
                    if set.contains(e) {
                        return Err(CliError::field("target", format!("edge {u}-{v} listed twice")));
                    }
                    set.insert(e);
                }
                set
            }
        };
        let odd = odd_vertices(graph, &edges);
        if !odd.is_empty() {
            return Err(CliError::TargetNotEven(odd));
        }
        Ok(EvenSubgraph::new(graph, edges)?)
    }
}

fn report(command: &str, input: &Loaded, seed: Option<u64>, results: Value) -> Report {
    Report {
        command: command.to_string(),
        input_digest: input.digest.clone(),
        seed,
        results,
    }
}

fn edge_list(polytope: &Polytope, edges: &EdgeSet) -> Vec<[usize; 2]> {
    edges
        .iter()
        .map(|e| {
            let (u, v) = polytope.graph().edge(e);
            [u, v]
        })
        .collect()
}

fn verdict(passed: bool) -> &'static str {
    if passed {
        "PASS"
    } else {
        "FAIL"
    }
}

pub fn cmd_lattice(input: &Loaded) -> Outcome {
    let p = &input.polytope;
    let lattice = p.lattice();
    let faces: BTreeMap<String, &[Vec<usize>]> =
        (0..lattice.dim()).map(|k| (k.to_string(), lattice.faces(k))).collect();
    let f = lattice.f_vector();
    let results = json!({
        "dim": lattice.dim(),
        "f_vector": f,
        "faces": faces,
    });
    Outcome {
        report: report("lattice", input, None, results),
        passed: true,
        summary: vec![format!("dim {}, f-vector {f:?}", lattice.dim())],
        dot: Some(graph_dot("G(P)", p.graph(), None)),
    }
}

fn step_json(r: &StepReport) -> Value {
    json!({
        "step": r.step_index,
        "intersection_nonempty": r.intersection_nonempty,
        "intersection_pure_codim2": r.intersection_pure_codim2,
        "intersection_strongly_connected": r.intersection_strongly_connected,
        "prefix_strongly_connected": r.prefix_strongly_connected,
        "intersection_graph_connected": r.intersection_graph_connected,
    })
}

fn shelling_json(s: &Shelling) -> Value {
    let certificate = s.certificate.as_ref().map(|c| {
        json!({
            "base_point": c.base_point.coords().iter().map(format_rational).collect::<Vec<_>>(),
            "direction": c.direction.coords().iter().map(format_rational).collect::<Vec<_>>(),
            "pierce_params": c.pierce_params.iter().map(format_rational).collect::<Vec<_>>(),
            "attempt": c.attempt,
        })
    });
    json!({
        "order": s.order,
        "certificate": certificate,
        "steps": s.reports.iter().map(step_json).collect::<Vec<_>>(),
        "all_passed": s.is_valid(),
    })
}

pub fn cmd_shelling(input: &Loaded, seed: u64) -> Result<Outcome, CliError> {
    let p = &input.polytope;
    let points = p.points().ok_or(facecycle::Error::NoCoordinates)?;
    let s = line_shelling(p.lattice(), points, seed)?;
    let passed = s.is_valid();
    Ok(Outcome {
        report: report("shelling", input, Some(seed), shelling_json(&s)),
        passed,
        summary: vec![
            format!("order {:?}", s.order),
            format!("step flags {}", verdict(passed)),
        ],
        dot: Some(graph_dot("G(P)", p.graph(), None)),
    })
}

fn decomposition_json(p: &Polytope, d: &Decomposition, exact: bool) -> Value {
    json!({
        "two_face_ids": d.two_face_ids,
        "two_faces": d.two_face_ids.iter().map(|&i| &p.two_faces()[i]).collect::<Vec<_>>(),
        "RECONSTRUCTION": if exact { "EXACT" } else { "MISMATCH" },
    })
}

pub fn cmd_decompose(
    input: &Loaded,
    target: &TargetSpec,
    seed: u64,
    method: Method,
) -> Result<Outcome, CliError> {
    let p = &input.polytope;
    let target = target.resolve(p)?;
    let mut results = serde_json::Map::new();
    results.insert("target_edges".into(), json!(edge_list(p, target.edge_set())));
    let mut summary = Vec::new();
    let mut passed = true;
    let mut rebuilt = Vec::new();

    if matches!(method, Method::Proof | Method::Both) {
        let dec = Decomposer::new(p, seed)?;
        let (d, trace) = dec.decompose_with_trace(&target)?;
        log::debug!("decomposition trace:\n{trace}");
        let r = d.reconstruct(p)?;
        let exact = r == *target.edge_set();
        passed &= exact;
        summary.push(format!("proof: {} faces, RECONSTRUCTION={}", d.two_face_ids.len(), if exact { "EXACT" } else { "MISMATCH" }));
        results.insert("proof".into(), decomposition_json(p, &d, exact));
        rebuilt.push(r);
    }
    if matches!(method, Method::Oracle | Method::Both) {
        let basis = FacialBasis::new(p)?;
        match basis.oracle_decompose(&target)? {
            Some(d) => {
                let r = d.reconstruct(p)?;
                let exact = r == *target.edge_set();
                passed &= exact;
                summary.push(format!("oracle: {} faces, RECONSTRUCTION={}", d.two_face_ids.len(), if exact { "EXACT" } else { "MISMATCH" }));
                results.insert("oracle".into(), decomposition_json(p, &d, exact));
                rebuilt.push(r);
            }
            None => {
                passed = false;
                summary.push("oracle: target outside the row space".into());
                results.insert("oracle".into(), json!({ "RECONSTRUCTION": "OUTSIDE_ROW_SPACE" }));
            }
        }
    }
    if method == Method::Both {
        let agree = rebuilt.len() == 2 && rebuilt[0] == rebuilt[1];
        passed &= agree;
        summary.push(format!("AGREE_ON_TARGET={agree}"));
        results.insert("AGREE_ON_TARGET".into(), json!(agree));
    }
    Ok(Outcome {
        report: report("decompose", input, Some(seed), Value::Object(results)),
        passed,
        summary,
        dot: Some(graph_dot("target", p.graph(), Some(target.edge_set()))),
    })
}

/// Decomposes `edges` with the proof method when the polytope supports it,
/// otherwise with the oracle.
fn decompose_any(p: &Polytope, target: &EvenSubgraph, seed: u64) -> Result<Decomposition, CliError> {
    if p.dim() == 2 || p.points().is_some() {
        return Ok(Decomposer::new(p, seed)?.decompose(target)?);
    }
    FacialBasis::new(p)?
        .oracle_decompose(target)?
        .ok_or_else(|| facecycle::Error::InternalAssertion("even subgraph outside the facial span".into()).into())
}

struct BipartiteVerdict {
    graph: bool,
    faces: bool,
}

fn bipartite_summary(p: &Polytope) -> BipartiteVerdict {
    BipartiteVerdict {
        graph: is_bipartite(p.graph()).is_bipartite(),
        faces: bipartite_via_2faces(p),
    }
}

pub fn cmd_bipartite(input: &Loaded) -> Result<Outcome, CliError> {
    let p = &input.polytope;
    let summary_info = bipartite_summary(p);
    let mut results = serde_json::Map::new();
    results.insert("is_bipartite".into(), json!(summary_info.graph));
    results.insert("bipartite_via_2faces".into(), json!(summary_info.faces));
    let equivalent = summary_info.graph == summary_info.faces;
    results.insert("EQUIVALENT".into(), json!(equivalent));
    let mut summary = vec![format!(
        "{}, EQUIVALENT={equivalent}",
        if summary_info.graph { "bipartite" } else { "nonbipartite" }
    )];
    let mut passed = equivalent;
    let mut highlight = None;
    if let Bipartiteness::OddCycle(cycle) = is_bipartite(p.graph()) {
        let target = EvenSubgraph::new(p.graph(), cycle.edge_set().clone())?;
        let d = decompose_any(p, &target, 0)?;
        // |C| ≡ Σ |F_i| (mod 2), so some member has odd length.
        let witness = d
            .two_face_ids
            .iter()
            .copied()
            .find(|&i| p.facial_cycles()[i].len() % 2 == 1);
        passed &= witness.is_some();
        results.insert("odd_cycle".into(), json!(cycle.vertices()));
        results.insert("decomposition".into(), json!(d.two_face_ids));
        if let Some(w) = witness {
            let face: &Cycle = &p.facial_cycles()[w];
            results.insert(
                "odd_facial_witness".into(),
                json!({ "two_face_id": w, "cycle": face.vertices() }),
            );
            summary.push(format!("odd facial cycle {:?} (2-face {w})", face.vertices()));
        }
        highlight = Some(cycle.edge_set().clone());
    }
    Ok(Outcome {
        report: report("bipartite", input, None, Value::Object(results)),
        passed,
        summary,
        dot: Some(graph_dot("G(P)", p.graph(), highlight.as_ref())),
    })
}

struct Check {
    passed: bool,
    detail: Value,
}

fn check_rank(p: &Polytope, basis: &FacialBasis) -> Check {
    let expected = cycle_space_dimension(p.graph());
    let rank = basis.rank();
    Check {
        passed: rank == expected,
        detail: json!({
            "rank": rank,
            "edges": p.graph().edge_count(),
            "vertices": p.graph().vertex_count(),
            "expected": expected,
        }),
    }
}

fn check_samples(p: &Polytope, basis: &FacialBasis, samples: u64) -> Check {
    let proof = if p.dim() == 2 || p.points().is_some() {
        Decomposer::new(p, 0).ok()
    } else {
        None
    };
    let mut failures = Vec::new();
    for s in 0..samples {
        let target = random_even_subgraph(p.graph(), None, s);
        let want = target.edge_set();
        let mut problems = Vec::new();
        if let Some(dec) = &proof {
            match dec.decompose(&target) {
                Ok(d) if d.reconstruct(p).ok().as_ref() == Some(want) => {}
                Ok(_) => problems.push("proof reconstruction differs".to_string()),
                Err(e) => problems.push(format!("proof: {e}")),
            }
        }
        match basis.oracle_decompose(&target) {
            Ok(Some(d)) if d.reconstruct(p).ok().as_ref() == Some(want) => {}
            Ok(Some(_)) => problems.push("oracle reconstruction differs".to_string()),
            Ok(None) => problems.push("oracle: outside the row space".to_string()),
            Err(e) => problems.push(format!("oracle: {e}")),
        }
        if !problems.is_empty() {
            failures.push(json!({
                "sample_seed": s,
                "target_edges": edge_list(p, want),
                "problems": problems,
            }));
        }
    }
    // Keep the dump small: the first failing sample is enough to reproduce.
    failures.truncate(1);
    Check {
        passed: failures.is_empty(),
        detail: json!({
            "samples": samples,
            "methods": if proof.is_some() { vec!["oracle", "proof"] } else { vec!["oracle"] },
            "first_failure": failures.pop(),
        }),
    }
}

fn check_shellings(p: &Polytope, seeds: u64) -> Option<Check> {
    let points = p.points()?;
    let mut runs = Vec::new();
    let mut passed = true;
    for seed in 0..seeds {
        match line_shelling(p.lattice(), points, seed) {
            Ok(s) => {
                passed &= s.is_valid();
                let failed: Vec<Value> = s.reports.iter().filter(|r| !r.passed()).map(step_json).collect();
                runs.push(json!({ "seed": seed, "order": s.order, "failed_steps": failed }));
            }
            Err(e) => {
                passed = false;
                runs.push(json!({ "seed": seed, "error": e.to_string() }));
            }
        }
    }
    Some(Check { passed, detail: json!({ "runs": runs }) })
}

fn check_bipartite(p: &Polytope) -> Check {
    let b = bipartite_summary(p);
    Check {
        passed: b.graph == b.faces,
        detail: json!({ "is_bipartite": b.graph, "bipartite_via_2faces": b.faces }),
    }
}

fn check_facial_relation(p: &Polytope) -> Check {
    let mut acc = EdgeSet::empty(p.graph());
    for c in p.facial_cycles() {
        acc.xor_assign(c.edge_set()).expect("same graph");
    }
    Check {
        passed: acc.is_empty(),
        detail: json!({ "leftover_edges": edge_list(p, &acc) }),
    }
}

/// The whole property battery on one polytope.
pub fn cmd_verify(input: &Loaded, seeds: u64, samples: u64) -> Result<Outcome, CliError> {
    let p = &input.polytope;
    let basis = FacialBasis::new(p)?;
    let mut checks: BTreeMap<&str, Check> = BTreeMap::new();
    checks.insert("rank", check_rank(p, &basis));
    checks.insert("decompose_samples", check_samples(p, &basis, samples));
    if let Some(c) = check_shellings(p, seeds) {
        checks.insert("shellings", c);
    }
    checks.insert("bipartite_equivalence", check_bipartite(p));
    if p.dim() == 3 {
        checks.insert("facial_relation_d3", check_facial_relation(p));
    }
    let passed = checks.values().all(|c| c.passed);
    let summary = checks
        .iter()
        .map(|(id, c)| format!("{id}: {}", verdict(c.passed)))
        .chain(std::iter::once(verdict(passed).to_string()))
        .collect();
    let results = json!({
        "checks": checks
            .iter()
            .map(|(id, c)| json!({ "id": id, "passed": c.passed, "detail": c.detail }))
            .collect::<Vec<_>>(),
        "seeds": seeds,
        "samples": samples,
        "passed": passed,
    });
    Ok(Outcome {
        report: report("verify", input, None, results),
        passed,
        summary,
        dot: None,
    })
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn target_syntax() {
        assert_eq!(
            "0-1, 1-2,0-2".parse::<TargetSpec>().unwrap(),
            TargetSpec::Edges(vec![(0, 1), (1, 2), (0, 2)])
        );
        assert_eq!(
            "random:3:7".parse::<TargetSpec>().unwrap(),
            TargetSpec::Random { chords: 3, seed: 7 }
        );
        assert!("random:3".parse::<TargetSpec>().is_err());
        assert!("0-x".parse::<TargetSpec>().is_err());
        assert!("01".parse::<TargetSpec>().is_err());
    }
}
