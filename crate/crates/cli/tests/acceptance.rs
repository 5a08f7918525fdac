//! Acceptance suite. Runs with a custom harness so that one PASS/FAIL line
//! per criterion is always printed; exits nonzero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use facecycle::complex::EdgeSet;
use facecycle::cyclespace::{
    bipartite_via_2faces, cycle_space_dimension, is_bipartite, random_even_subgraph, FacialBasis,
};
use facecycle::decompose::{Decomposer, TraceKind};
use facecycle::shelling::line_shelling;
use facecycle::{Error, Polytope};
use facecycle_cli::corpus::generate;
use facecycle_cli::format::digest;
use facecycle_cli::{cmd_bipartite, cmd_verify, Family, Loaded, PolytopeFile};
use serde_json::Value;

const SAMPLES: u64 = 50;
const SHELLING_SEEDS: u64 = 5;

#[derive(Clone, Copy, PartialEq, Eq)]
enum Kind {
    Simplex,
    Cube,
    Cross,
    Cyclic,
    Random,
}

struct Entry {
    name: String,
    kind: Kind,
    file: PolytopeFile,
    polytope: Polytope,
}

fn corpus_specs() -> Vec<(String, Kind, Family, usize, Option<usize>, u64)> {
    let mut out = Vec::new();
    for d in 2..=6 {
        out.push((format!("simplex d={d}"), Kind::Simplex, Family::Simplex, d, None, 0));
    }
    for d in 2..=5 {
        out.push((format!("cube d={d}"), Kind::Cube, Family::Cube, d, None, 0));
    }
    for d in 3..=4 {
        out.push((format!("cross d={d}"), Kind::Cross, Family::Crosspolytope, d, None, 0));
    }
    for n in 6..=8 {
        out.push((format!("cyclic C({n},4)"), Kind::Cyclic, Family::Cyclic, 4, Some(n), 0));
    }
    for i in 0..20u64 {
        let n = 8 + (i as usize % 7);
        out.push((format!("random d=3 n={n} seed={i}"), Kind::Random, Family::Random, 3, Some(n), i));
    }
    for i in 0..10u64 {
        let n = 8 + (i as usize % 5);
        out.push((format!("random d=4 n={n} seed={i}"), Kind::Random, Family::Random, 4, Some(n), i));
    }
    out
}

fn build_corpus() -> Vec<Entry> {
    corpus_specs()
        .into_iter()
        .map(|(name, kind, family, dim, n, seed)| {
            let points = generate(family, dim, n, seed).unwrap_or_else(|e| panic!("{name}: {e}"));
            let file = PolytopeFile::from_points(&points);
            let polytope = Polytope::from_points(points).unwrap_or_else(|e| panic!("{name}: {e}"));
            assert_eq!(polytope.dim(), dim, "{name}");
            Entry { name, kind, file, polytope }
        })
        .collect()
}

struct Criterion {
    number: u32,
    title: &'static str,
    failures: Vec<String>,
    elapsed: Duration,
    limit: Option<Duration>,
    note: String,
}

impl Criterion {
    fn passed(&self) -> bool {
        self.failures.is_empty() && self.limit.is_none_or(|l| self.elapsed <= l)
    }

    fn print(&self) {
        let status = if self.passed() { "PASS" } else { "FAIL" };
        let limit = self.limit.map_or(String::new(), |l| format!(" (limit {}s)", l.as_secs()));
        println!(
            "[{status}] criterion {}: {} | {:.2}s{limit} | {}",
            self.number,
            self.title,
            self.elapsed.as_secs_f64(),
            self.note
        );
        for f in self.failures.iter().take(10) {
            println!("         {f}");
        }
    }
}

fn criterion(number: u32, title: &'static str, limit: Option<u64>) -> Criterion {
    Criterion {
        number,
        title,
        failures: Vec::new(),
        elapsed: Duration::ZERO,
        limit: limit.map(Duration::from_secs),
        note: String::new(),
    }
}

fn rank_identity(corpus: &[Entry], build_time: Duration) -> Criterion {
    let mut c = criterion(1, "GF(2) rank of facial cycles = |E| - |V| + 1", Some(60));
    let start = Instant::now();
    for e in corpus {
        let g = e.polytope.graph();
        let expected = g.edge_count() + 1 - g.vertex_count();
        if cycle_space_dimension(g) != expected {
            c.failures.push(format!("{}: graph not connected", e.name));
        }
        match FacialBasis::new(&e.polytope) {
            Ok(b) if b.rank() == expected => {}
            Ok(b) => c.failures.push(format!("{}: rank {} != {expected}", e.name, b.rank())),
            Err(err) => c.failures.push(format!("{}: {err}", e.name)),
        }
    }
    c.elapsed = start.elapsed() + build_time;
    c.note = format!("{} polytopes (includes {:.2}s hull construction)", corpus.len(), build_time.as_secs_f64());
    c
}

/// Criteria 2, 3 and 7 share one workload.
fn reconstruction(corpus: &[Entry]) -> (Criterion, Criterion, Criterion) {
    let mut c2 = criterion(2, "proof decomposition reconstructs exactly; oracle always succeeds", Some(120));
    let mut c3 = criterion(3, "proof and oracle reconstruct identical targets", None);
    let mut c7 = criterion(7, "zero proof-shape assertion failures", None);
    let start = Instant::now();
    let (mut total, mut surgeries, mut facet_steps) = (0, 0, 0);
    for e in corpus {
        let p = &e.polytope;
        let basis = FacialBasis::new(p).expect("basis");
        let dec = Decomposer::new(p, 0).expect("decomposer");
        for s in 0..SAMPLES {
            total += 1;
            let target = random_even_subgraph(p.graph(), None, s);
            let want = target.edge_set();
            let tag = format!("{} sample {s}", e.name);
            let proof: Option<EdgeSet> = match dec.decompose_with_trace(&target) {
                Ok((d, trace)) => {
                    for ev in &trace.events {
                        match ev.kind {
                            TraceKind::Surgery { j, measure_c, measure_w, .. } => {
                                surgeries += 1;
                                if j < 2 || measure_w >= measure_c {
                                    c7.failures.push(format!("{tag}: surgery j={j} measure {measure_c}->{measure_w}"));
                                }
                            }
                            TraceKind::Facet { .. } => facet_steps += 1,
                            _ => {}
                        }
                    }
                    d.reconstruct(p).ok()
                }
                Err(Error::InternalAssertion(m)) => {
                    c7.failures.push(format!("{tag}: {m}"));
                    None
                }
                Err(err) => {
                    c2.failures.push(format!("{tag}: proof method error {err}"));
                    None
                }
            };
            if proof.as_ref() != Some(want) {
                c2.failures.push(format!("{tag}: proof reconstruction differs"));
            }
            let oracle = match basis.oracle_decompose(&target) {
                Ok(Some(d)) => d.reconstruct(p).ok(),
                Ok(None) => {
                    c2.failures.push(format!("{tag}: oracle reports outside row space"));
                    None
                }
                Err(err) => {
                    c2.failures.push(format!("{tag}: oracle error {err}"));
                    None
                }
            };
            if oracle.as_ref() != Some(want) {
                c2.failures.push(format!("{tag}: oracle reconstruction differs"));
            }
            if proof.is_none() || proof != oracle {
                c3.failures.push(format!("{tag}: methods disagree"));
            }
        }
    }
    let elapsed = start.elapsed();
    for c in [&mut c2, &mut c3, &mut c7] {
        c.elapsed = elapsed;
    }
    c2.note = format!("{total} targets over {} polytopes", corpus.len());
    c3.note = format!("{total} targets compared by reconstruction");
    c7.note = format!("{surgeries} crossing surgeries, {facet_steps} facet recursions checked");
    (c2, c3, c7)
}

fn bipartite_equivalence(corpus: &[Entry]) -> Criterion {
    let mut c = criterion(4, "is_bipartite(G) == bipartite_via_2faces; odd facial witnesses", None);
    let start = Instant::now();
    for e in corpus {
        let p = &e.polytope;
        let graph = is_bipartite(p.graph()).is_bipartite();
        if graph != bipartite_via_2faces(p) {
            c.failures.push(format!("{}: verdicts differ", e.name));
        }
        let expected = match e.kind {
            Kind::Cube => Some(true),
            Kind::Simplex | Kind::Cross => Some(false),
            _ => None,
        };
        if expected.is_some_and(|x| x != graph) {
            c.failures.push(format!("{}: expected bipartite = {:?}", e.name, expected));
        }
        let loaded = Loaded { polytope: p.clone(), digest: String::new() };
        match cmd_bipartite(&loaded) {
            Ok(o) => {
                let r = &o.report.results;
                if r["EQUIVALENT"] != Value::Bool(true) || !o.passed {
                    c.failures.push(format!("{}: report not equivalent", e.name));
                }
                if !graph {
                    let w = &r["odd_facial_witness"]["two_face_id"];
                    match w.as_u64() {
                        Some(id) if p.facial_cycles()[id as usize].len() % 2 == 1 => {}
                        _ => c.failures.push(format!("{}: no odd facial witness", e.name)),
                    }
                }
            }
            Err(err) => c.failures.push(format!("{}: {err}", e.name)),
        }
    }
    c.elapsed = start.elapsed();
    c.note = format!("{} polytopes", corpus.len());
    c
}

fn shelling_validity(corpus: &[Entry]) -> Criterion {
    let mut c = criterion(5, "line shellings pass every step check for seeds 0..4", None);
    let start = Instant::now();
    let mut steps = 0;
    for e in corpus {
        let p = &e.polytope;
        for seed in 0..SHELLING_SEEDS {
            match line_shelling(p.lattice(), p.points().unwrap(), seed) {
                Ok(s) => {
                    steps += s.reports.len();
                    for r in s.reports.iter().filter(|r| !r.passed()) {
                        c.failures.push(format!("{} seed {seed}: step {} {:?}", e.name, r.step_index, r));
                    }
                }
                Err(err) => c.failures.push(format!("{} seed {seed}: {err}", e.name)),
            }
        }
    }
    c.elapsed = start.elapsed();
    c.note = format!("{steps} steps checked");
    c
}

fn facial_relation(corpus: &[Entry]) -> Criterion {
    let mut c = criterion(6, "XOR of all facial cycles is empty in dimension 3", None);
    let start = Instant::now();
    let mut count = 0;
    for e in corpus.iter().filter(|e| e.polytope.dim() == 3) {
        count += 1;
        let p = &e.polytope;
        let mut acc = EdgeSet::empty(p.graph());
        for f in p.facial_cycles() {
            acc.xor_assign(f.edge_set()).unwrap();
        }
        if !acc.is_empty() {
            c.failures.push(format!("{}: {} edges left", e.name, acc.count()));
        }
    }
    c.elapsed = start.elapsed();
    c.note = format!("{count} 3-polytopes");
    c
}

fn determinism(corpus: &[Entry]) -> Criterion {
    let mut c = criterion(8, "repeated cmd_verify runs give byte-identical reports", None);
    let start = Instant::now();
    let dir = tempfile::tempdir().expect("temp dir");
    let picks = ["cube d=3", "cross d=4", "cyclic C(7,4)", "random d=3 n=12 seed=4", "random d=4 n=10 seed=2"];
    for e in corpus.iter().filter(|e| picks.contains(&e.name.as_str())) {
        let path = dir.path().join(format!("{}.json", digest(e.name.as_bytes())));
        std::fs::write(&path, serde_json::to_string_pretty(&e.file).unwrap()).unwrap();
        let run = || {
            Command::new(env!("CARGO_BIN_EXE_facecycle"))
                .args(["verify", "--seeds", "3", "--samples", "10"])
                .arg(&path)
                .output()
                .expect("run facecycle")
        };
        let (a, b) = (run(), run());
        if !a.status.success() {
            c.failures.push(format!("{}: verify exited with {}", e.name, a.status));
        }
        if a.stdout != b.stdout || a.stdout.is_empty() {
            c.failures.push(format!("{}: binary reports differ", e.name));
        }
        let loaded = facecycle_cli::load(&path).unwrap();
        let x = cmd_verify(&loaded, 3, 10).unwrap().report.to_json();
        let y = cmd_verify(&loaded, 3, 10).unwrap().report.to_json();
        if x != y || x.as_bytes() != a.stdout.as_slice() {
            c.failures.push(format!("{}: library reports differ", e.name));
        }
    }
    c.elapsed = start.elapsed();
    c.note = format!("{} files, binary and library", picks.len());
    c
}

fn main() -> ExitCode {
    let start = Instant::now();
    let corpus = build_corpus();
    let build_time = start.elapsed();
    println!("acceptance corpus: {} polytopes built in {:.2}s", corpus.len(), build_time.as_secs_f64());

    let (c2, c3, c7) = reconstruction(&corpus);
    let mut all = vec![
        rank_identity(&corpus, build_time),
        c2,
        c3,
        bipartite_equivalence(&corpus),
        shelling_validity(&corpus),
        facial_relation(&corpus),
        c7,
        determinism(&corpus),
    ];
    all.sort_by_key(|c| c.number);
    for c in &all {
        c.print();
    }
    let failed = all.iter().filter(|c| !c.passed()).count();
    println!("acceptance: {} of {} criteria passed", all.len() - failed, all.len());
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
