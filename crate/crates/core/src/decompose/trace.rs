use std::fmt;

/// What happened at one recursion node.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum TraceKind {
    /// A polygon's boundary, answered by its single 2-face.
    Polygon,
    /// An even subgraph split into this many cycles.
    Split { cycles: usize },
    /// The cycle lies in the facet at shelling position `n` (lattice index `facet`).
    Facet { n: usize, facet: usize },
    /// A crossing surgery at prefix `n`; path lengths count edges.
    Surgery {
        n: usize,
        j: usize,
        l: usize,
        l_prime: usize,
        m: usize,
        measure_c: usize,
        measure_w: usize,
        w_cycles: usize,
    },
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TraceEvent {
    pub depth: usize,
    /// Dimension of the polytope being worked in.
    pub dim: usize,
    pub kind: TraceKind,
}

/// Ordered record of a decomposition run. Its `Display` form is stable and
/// suitable for golden files.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Trace {
    pub events: Vec<TraceEvent>,
}

impl Trace {
    pub fn is_empty(&self) -> bool {
        self.events.is_empty()
    }

    pub fn max_depth(&self) -> usize {
        self.events.iter().map(|e| e.depth).max().unwrap_or(0)
    }

    pub fn surgeries(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, TraceKind::Surgery { .. }))
            .count()
    }

    pub fn facet_recursions(&self) -> usize {
        self.events
            .iter()
            .filter(|e| matches!(e.kind, TraceKind::Facet { .. }))
            .count()
    }
}

impl fmt::Display for TraceEvent {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:indent$}d={} ", "", self.dim, indent = 2 * self.depth)?;
        match &self.kind {
            TraceKind::Polygon => write!(f, "polygon"),
            TraceKind::Split { cycles } => write!(f, "split cycles={cycles}"),
            TraceKind::Facet { n, facet } => write!(f, "facet n={n} index={facet}"),
            TraceKind::Surgery { n, j, l, l_prime, m, measure_c, measure_w, w_cycles } => write!(
                f,
                "surgery n={n} j={j} |L|={l} |L'|={l_prime} |M|={m} measure={measure_c}->{measure_w} W_cycles={w_cycles}"
            ),
        }
    }
}

impl fmt::Display for Trace {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for e in &self.events {
            writeln!(f, "{e}")?;
        }
        Ok(())
    }
}
