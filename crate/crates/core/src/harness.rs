//! Graph enumeration and sampling, batch verification and extremal search.

use std::cmp::Ordering;
use std::collections::BTreeSet;
use std::path::PathBuf;
use std::str::FromStr;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};
use rand_chacha::rand_core::{RngCore, SeedableRng};
use rand_chacha::ChaCha8Rng;
use rayon::prelude::*;
use serde::Serialize;

use crate::canon::{canonical_form, CanonicalKey, DEFAULT_CANONICAL_CAP};
use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::hyperbolicity::hyperbolicity_constant;
use crate::index::{compute_index_vector, INDEX_NAMES};
use crate::io::graph6::{emit_graph6, parse_graph6};
use crate::io::report::{GraphRecord, RunMeta, RunReport};
use crate::theorems::{CheckContext, TheoremId};
use crate::value::{format_rational, Value, REAL_TOLERANCE};
use crate::Rational;

/// Largest order produced by internal enumeration.
pub const ENUMERATION_CAP: usize = 8;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
#[serde(tag = "kind", rename_all = "snake_case")]
pub enum GraphSource {
    Internal,
    /// One graph6 string per line; blank lines and `>>graph6<<` headers are skipped.
    Graph6File {
        path: PathBuf,
    },
    /// `count` samples of G(n, p); sample `i` uses seed `seed + i`.
    Sampled {
        n: usize,
        #[serde(serialize_with = "ser_rational")]
        p: Rational,
        count: usize,
        seed: u64,
    },
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct EnumerationSpec {
    pub n_min: usize,
    pub n_max: usize,
    pub connected_only: bool,
    pub non_trivial_only: bool,
    pub source: GraphSource,
}

impl EnumerationSpec {
    pub fn internal(n_min: usize, n_max: usize) -> Self {
        EnumerationSpec {
            n_min,
            n_max,
            connected_only: false,
            non_trivial_only: false,
            source: GraphSource::Internal,
        }
    }

    pub fn connected(mut self) -> Self {
        self.connected_only = true;
        self
    }

    pub fn non_trivial(mut self) -> Self {
        self.non_trivial_only = true;
        self
    }

    fn accepts(&self, g: &Graph) -> bool {
        (self.n_min..=self.n_max).contains(&g.n())
            && (!self.connected_only || (g.n() > 0 && g.is_connected()))
            && (!self.non_trivial_only || (g.n() > 0 && g.degree_stats().is_non_trivial))
    }
}

/// All graphs on `n` vertices up to isomorphism, as sorted canonical keys.
///
/// Level `n` extends each class on `n - 1` vertices by a new vertex joined to
/// every subset of the old ones; deleting the last vertex of any graph shows
/// every class is reached.
pub fn all_graph_keys(n: usize) -> Result<Vec<CanonicalKey>> {
    if n > ENUMERATION_CAP {
        return Err(Error::EnumerationCap {
            n,
            cap: ENUMERATION_CAP,
        });
    }
    let mut level = vec![canonical_form(&Graph::empty(0))?];
    for size in 1..=n {
        let next: BTreeSet<CanonicalKey> = level
            .par_iter()
            .flat_map_iter(|key| {
                let base = key.to_graph();
                let old = size - 1;
                (0u32..1 << old).map(move |mask| {
                    let mut edges = base.edges().to_vec();
                    edges.extend((0..old).filter(|&v| mask >> v & 1 == 1).map(|v| (v, old)));
                    let g = Graph::new(size, &edges).expect("valid extension");
                    canonical_form(&g).expect("within canonical cap")
                })
            })
            .collect::<Vec<_>>()
            .into_iter()
            .collect();
        level = next.into_iter().collect();
    }
    Ok(level)
}

fn read_graph6_file(path: &PathBuf) -> Result<Vec<Graph>> {
    let text = std::fs::read_to_string(path).map_err(|source| Error::Io {
        path: path.clone(),
        source,
    })?;
    text.lines()
        .enumerate()
        .map(|(i, l)| (i, l.trim().trim_start_matches(">>graph6<<")))
        .filter(|(_, l)| !l.is_empty())
        .map(|(i, l)| {
            parse_graph6(l).map_err(|e| Error::Domain(format!("{}:{}: {e}", path.display(), i + 1)))
        })
        .collect()
}

/// Sort key: canonical graph6 when small enough, labelled graph6 otherwise.
pub fn graph_key(g: &Graph) -> String {
    if g.n() <= DEFAULT_CANONICAL_CAP {
        if let Ok(k) = canonical_form(g) {
            return k.to_graph6();
        }
    }
    emit_graph6(g).unwrap_or_else(|_| format!("n{}m{}", g.n(), g.m()))
}

/// Graphs selected by `spec`, one per isomorphism class for the internal and
/// file sources, ordered by `(n, key)`. Samples keep their generation order.
pub fn enumerate_graphs(spec: &EnumerationSpec) -> Result<Vec<Graph>> {
    if spec.n_min > spec.n_max {
        return Ok(Vec::new());
    }
    match &spec.source {
        GraphSource::Internal => {
            if spec.n_max > ENUMERATION_CAP {
                return Err(Error::EnumerationCap {
                    n: spec.n_max,
                    cap: ENUMERATION_CAP,
                });
            }
            let mut out = Vec::new();
            for n in spec.n_min..=spec.n_max {
                out.extend(
                    all_graph_keys(n)?
                        .into_iter()
                        .map(|k| k.to_graph())
                        .filter(|g| spec.accepts(g)),
                );
            }
            Ok(out)
        }
        GraphSource::Graph6File { path } => {
            let mut keyed: Vec<(usize, String, Graph)> = read_graph6_file(path)?
                .into_iter()
                .filter(|g| spec.accepts(g))
                .map(|g| (g.n(), graph_key(&g), g))
                .collect();
            keyed.sort_by(|a, b| (a.0, &a.1).cmp(&(b.0, &b.1)));
            keyed.dedup_by(|a, b| a.0 == b.0 && a.1 == b.1);
            Ok(keyed.into_iter().map(|(_, _, g)| g).collect())
        }
        GraphSource::Sampled { n, p, count, seed } => (0..*count as u64)
            .map(|i| sample_gnp(*n, p, seed.wrapping_add(i)))
            .filter(|g| g.as_ref().map_or(true, |g| spec.accepts(g)))
            .collect(),
    }
}

/// Erdős–Rényi sample from ChaCha8 seeded with `seed_from_u64(seed)`.
///
/// Pairs are visited in graph6 order, `(0,1), (0,2), (1,2), (0,3), ...`. Each
/// consumes one `u64` draw `x`, and the edge is present iff
/// `x * q < p_num * 2^64` where `p = p_num / q`.
pub fn sample_gnp(n: usize, p: &Rational, seed: u64) -> Result<Graph> {
    if p.is_negative() || *p > Rational::one() {
        return Err(Error::Domain(format!(
            "edge probability {} outside [0, 1]",
            format_rational(p)
        )));
    }
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let threshold: BigInt = p.numer() << 64;
    let mut edges = Vec::new();
    for j in 1..n {
        for i in 0..j {
            let x = BigInt::from(rng.next_u64());
            if !p.is_zero() && x * p.denom() < threshold {
                edges.push((i, j));
            }
        }
    }
    Graph::new(n, &edges)
}

fn graph_record(g: &Graph, theorems: &[TheoremId]) -> GraphRecord {
    let ctx = CheckContext::new(g);
    let stats = g.degree_stats();
    GraphRecord {
        graph_key: graph_key(g),
        graph6: emit_graph6(g).unwrap_or_default(),
        n: stats.n,
        m: stats.m,
        max_degree: stats.max_degree,
        min_degree: stats.min_degree,
        indices: ctx.indices().cloned(),
        line_indices: ctx.line().map(|(_, iv)| iv.clone()),
        checks: theorems.iter().map(|&t| ctx.check(t)).collect(),
    }
}

/// Checks every graph against every listed theorem, in parallel, keeping input order.
pub fn run_verification_on(graphs: Vec<Graph>, theorems: &[TheoremId], meta: RunMeta) -> RunReport {
    let records = graphs
        .par_iter()
        .map(|g| graph_record(g, theorems))
        .collect();
    RunReport::new(meta, records)
}

pub fn run_verification(spec: &EnumerationSpec, theorems: &[TheoremId]) -> Result<RunReport> {
    let graphs = enumerate_graphs(spec)?;
    let mut meta = RunMeta::new(Some(spec.clone()), theorems.to_vec());
    if let GraphSource::Sampled { seed, .. } = spec.source {
        meta.seed = Some(seed);
    }
    Ok(run_verification_on(graphs, theorems, meta))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum Objective {
    Max,
    Min,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum ExtremalClass {
    All,
    Trees,
    Unicyclic,
    Connected,
}

impl ExtremalClass {
    pub fn contains(self, g: &Graph) -> bool {
        match self {
            ExtremalClass::All => true,
            ExtremalClass::Connected => g.is_connected(),
            ExtremalClass::Trees => g.is_connected() && g.m() + 1 == g.n(),
            ExtremalClass::Unicyclic => g.is_connected() && g.m() == g.n(),
        }
    }
}

impl FromStr for Objective {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "max" => Ok(Objective::Max),
            "min" => Ok(Objective::Min),
            _ => Err(Error::Domain(format!(
                "objective must be max or min, got `{s}`"
            ))),
        }
    }
}

impl FromStr for ExtremalClass {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "all" => Ok(ExtremalClass::All),
            "trees" => Ok(ExtremalClass::Trees),
            "unicyclic" => Ok(ExtremalClass::Unicyclic),
            "connected" => Ok(ExtremalClass::Connected),
            _ => Err(Error::Domain(format!(
                "class must be one of all, trees, unicyclic, connected; got `{s}`"
            ))),
        }
    }
}

/// Index names accepted by [`extremal_search`].
pub const EXTREMAL_INDEX_NAMES: [&str; 7] =
    ["m1", "m2", "forgotten", "harmonic", "ga1", "platt", "delta"];

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExtremalQuery {
    pub index: String,
    pub objective: Objective,
    pub class: ExtremalClass,
    pub n: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalGraph {
    pub graph_key: String,
    pub graph6: String,
    #[serde(skip)]
    pub graph: Graph,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct ExtremalResult {
    pub query: ExtremalQuery,
    /// `None` when the index is defined on no graph of the class.
    pub value: Option<Value>,
    pub graphs: Vec<ExtremalGraph>,
    /// Graphs of the class on which the index was evaluated.
    pub candidates: usize,
}

/// Exact for two rationals, `REAL_TOLERANCE` otherwise.
fn compare_values(a: &Value, b: &Value) -> Ordering {
    match (a, b) {
        (Value::Exact(x), Value::Exact(y)) => x.cmp(y),
        _ => {
            let (x, y) = (a.to_f64(), b.to_f64());
            if (x - y).abs() <= REAL_TOLERANCE {
                Ordering::Equal
            } else {
                x.total_cmp(&y)
            }
        }
    }
}

fn index_value(g: &Graph, index: &str) -> Option<Value> {
    if index == "delta" {
        return hyperbolicity_constant(g)
            .ok()
            .map(|h| Value::Exact(h.delta));
    }
    compute_index_vector(g).ok()?.get(index)
}

/// Every graph of order `n` in the class attaining the objective, ties included.
///
/// Graphs on which the index is undefined (isolated vertices) are skipped.
pub fn extremal_search(q: &ExtremalQuery) -> Result<ExtremalResult> {
    if !EXTREMAL_INDEX_NAMES.contains(&q.index.as_str()) {
        return Err(Error::UnknownIndex {
            name: q.index.clone(),
            valid: EXTREMAL_INDEX_NAMES.join(", "),
        });
    }
    let mut spec = EnumerationSpec::internal(q.n, q.n);
    spec.connected_only = q.class != ExtremalClass::All;
    let scored: Vec<(Graph, Value)> = enumerate_graphs(&spec)?
        .into_par_iter()
        .filter(|g| q.class.contains(g))
        .filter_map(|g| index_value(&g, &q.index).map(|v| (g, v)))
        .collect();
    let better = |a: &Value, b: &Value| match q.objective {
        Objective::Max => compare_values(a, b) == Ordering::Greater,
        Objective::Min => compare_values(a, b) == Ordering::Less,
    };
    let mut best: Option<&Value> = None;
    for (_, v) in &scored {
        if best.is_none_or(|b| better(v, b)) {
            best = Some(v);
        }
    }
    let value = best.cloned();
    let graphs = match &value {
        Some(b) => scored
            .iter()
            .filter(|(_, v)| compare_values(v, b) == Ordering::Equal)
            .map(|(g, _)| ExtremalGraph {
                graph_key: graph_key(g),
                graph6: emit_graph6(g).unwrap_or_default(),
                graph: g.clone(),
            })
            .collect(),
        None => Vec::new(),
    };
    Ok(ExtremalResult {
        query: q.clone(),
        value,
        graphs,
        candidates: scored.len(),
    })
}

/// Names of the index-vector fields, for error messages.
pub fn index_names() -> &'static [&'static str] {
    &INDEX_NAMES
}
