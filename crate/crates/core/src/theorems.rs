//! Executable bound checks.
//!
//! Each check evaluates one inequality or identity on one graph and returns a
//! [`BoundCheckResult`] with both sides, the slack and equality flags. Checks
//! whose preconditions fail return a not-applicable result rather than being
//! skipped, so coverage is visible in reports.
//!
//! Rational sides are compared exactly. Anything involving a square root is
//! compared in `f64` with tolerance [`REAL_TOLERANCE`](crate::value::REAL_TOLERANCE).

use std::collections::BTreeMap;
use std::fmt;
use std::str::FromStr;
use std::sync::OnceLock;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::{ComponentDecomposition, DegreeStats, Graph};
use crate::hyperbolicity::{
    hyperbolicity_constant_with, HyperbolicityOptions, HyperbolicityResult,
};
use crate::index::{compute_index_vector, IndexVectorOf};
use crate::line_graph::{line_graph, LineGraphResult};
use crate::scalar::Scalar;
use crate::value::Value;
use crate::Rational;

type IndexVector = IndexVectorOf<Rational, f64>;

#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
pub enum TheoremId {
    T1,
    T2,
    T3,
    T4,
    T5,
    T6,
    T7,
    T8,
    T9,
    T10,
    T11,
}

impl TheoremId {
    pub const ALL: [TheoremId; 11] = [
        TheoremId::T1,
        TheoremId::T2,
        TheoremId::T3,
        TheoremId::T4,
        TheoremId::T5,
        TheoremId::T6,
        TheoremId::T7,
        TheoremId::T8,
        TheoremId::T9,
        TheoremId::T10,
        TheoremId::T11,
    ];

    /// The checked statement, in plain notation.
    pub fn statement(self) -> &'static str {
        match self {
            TheoremId::T1 => {
                "M1(G) <= max{2D^2 + m^2 + (6 - 2D)m - 2D - 4, 2D^2 + m^2 + (4 - 2D)m + 4, m(m - 1)}"
            }
            TheoremId::T2 => "GA1(G) + GA1(L(G)) <= (1/2) * (T1 maximum), G non-trivial",
            TheoremId::T3 => "m_L = P/2, P = M1 - 2m, m = (M1 - P)/2, G non-trivial",
            TheoremId::T4 => {
                "sqrt((D-1)(d-1))/(D+d-2) P <= GA1(L(G)) <= P/2 and sqrt(Dd)/(D+d) (M1-P) <= GA1(G) <= (M1-P)/2"
            }
            TheoremId::T5 => "GA1(L(G)) >= (4 delta - 1)^(3/2) / (2 delta), G non-trivial and not a tree",
            TheoremId::T6 => "GA1(G) >= min{1/(2D), 2 sqrt(Dd)/(D+d)^2} M1(G), equality for regular G",
            TheoremId::T7 => "M1(L(G)) = 4m - 4 M1(G) + 2 M2(G) + F(G), G non-trivial",
            TheoremId::T8 => {
                "GA1(L(G)) >= min{1/(4(D-1)), sqrt((D-1)(d-1))/(D+d-2)^2} (4m - 4M1 + 2M2 + F)"
            }
            TheoremId::T9 => {
                "H(G) <= n/2 (equality iff all components regular); H(L(G)) <= m/2 (equality iff all components regular or biregular)"
            }
            TheoremId::T10 => {
                "2/(k-1) T <= S <= 2(D+2k-3)/(k^2-1) T and 2/(D-1) T <= S <= (D+3)/4 T, S = sum 1/(x_j+k), T = sum_{i<j} 1/(x_i+x_j+2k-4)"
            }
            TheoremId::T11 => {
                "c_low H(G) <= H(L(G)) <= c_high H(G): (8/11, 1) if D < 3; (4/(D+3), D-1) if 3 <= D <= 4; (3/(2D-1), D-1) if D > 4"
            }
        }
    }
}

impl fmt::Display for TheoremId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self:?}")
    }
}

impl FromStr for TheoremId {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        let t = s.trim();
        TheoremId::ALL
            .into_iter()
            .find(|id| id.to_string().eq_ignore_ascii_case(t))
            .ok_or_else(|| Error::Domain(format!("unknown theorem `{t}`, expected T1..T11")))
    }
}

/// Parses `all` or a comma-separated list such as `T1,T3,T7`.
pub fn parse_theorem_list(s: &str) -> Result<Vec<TheoremId>> {
    if s.trim().eq_ignore_ascii_case("all") {
        return Ok(TheoremId::ALL.to_vec());
    }
    let mut ids: Vec<TheoremId> = s
        .split(',')
        .filter(|t| !t.trim().is_empty())
        .map(str::parse)
        .collect::<Result<_>>()?;
    ids.sort_unstable();
    ids.dedup();
    if ids.is_empty() {
        return Err(Error::Domain("empty theorem list".into()));
    }
    Ok(ids)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum BoundKind {
    /// `lhs <= rhs`.
    Upper,
    /// `lhs >= rhs`.
    Lower,
    /// `lhs == rhs`.
    Identity,
}

/// One inequality or identity inside a check.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundPart {
    pub label: String,
    pub kind: BoundKind,
    pub lhs: Value,
    pub rhs: Value,
    /// `rhs - lhs` for upper bounds, `lhs - rhs` for lower bounds, `-|lhs - rhs|` for identities.
    pub slack: Value,
    pub satisfied: bool,
    pub equality: bool,
    /// Equality predicted by a structural characterization, when one applies.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub expected_equality: Option<bool>,
}

impl BoundPart {
    pub fn new(label: impl Into<String>, kind: BoundKind, lhs: Value, rhs: Value) -> Self {
        let slack = match kind {
            BoundKind::Upper => rhs.sub(&lhs),
            BoundKind::Lower => lhs.sub(&rhs),
            BoundKind::Identity => lhs.sub(&rhs).abs().neg(),
        };
        let satisfied = slack.is_nonnegative();
        let equality = slack.is_zero();
        BoundPart {
            label: label.into(),
            kind,
            lhs,
            rhs,
            slack,
            satisfied,
            equality,
            expected_equality: None,
        }
    }

    pub fn upper(label: impl Into<String>, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Self::new(label, BoundKind::Upper, lhs.into(), rhs.into())
    }

    pub fn lower(label: impl Into<String>, lhs: impl Into<Value>, rhs: impl Into<Value>) -> Self {
        Self::new(label, BoundKind::Lower, lhs.into(), rhs.into())
    }

    pub fn identity(
        label: impl Into<String>,
        lhs: impl Into<Value>,
        rhs: impl Into<Value>,
    ) -> Self {
        Self::new(label, BoundKind::Identity, lhs.into(), rhs.into())
    }

    /// Requires the equality flag to match `expected`; a mismatch counts as a violation.
    pub fn expecting(mut self, expected: Option<bool>) -> Self {
        self.expected_equality = expected;
        self
    }

    /// Replaces the numeric equality test with an exact structural criterion.
    fn with_symbolic_equality(mut self, equality: bool) -> Self {
        self.equality = equality && self.satisfied;
        self
    }

    pub fn holds(&self) -> bool {
        self.satisfied && self.expected_equality.is_none_or(|e| e == self.equality)
    }
}

/// One check evaluated on one graph.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct BoundCheckResult {
    pub theorem: TheoremId,
    pub applicable: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub reason: Option<String>,
    /// Sides of the binding part (smallest slack).
    pub lhs: Option<Value>,
    pub rhs: Option<Value>,
    pub slack: Option<Value>,
    pub satisfied: bool,
    pub equality: bool,
    pub parts: Vec<BoundPart>,
    pub details: BTreeMap<String, Value>,
}

impl BoundCheckResult {
    pub fn from_parts(
        theorem: TheoremId,
        parts: Vec<BoundPart>,
        details: BTreeMap<String, Value>,
    ) -> Self {
        let binding = parts
            .iter()
            .enumerate()
            .min_by(|(ia, a), (ib, b)| {
                a.slack
                    .to_f64()
                    .total_cmp(&b.slack.to_f64())
                    .then(ia.cmp(ib))
            })
            .map(|(_, p)| p);
        let satisfied = parts.iter().all(BoundPart::holds);
        let equality = satisfied && parts.iter().any(|p| p.equality);
        BoundCheckResult {
            theorem,
            applicable: true,
            reason: None,
            lhs: binding.map(|p| p.lhs.clone()),
            rhs: binding.map(|p| p.rhs.clone()),
            slack: binding.map(|p| p.slack.clone()),
            satisfied,
            equality,
            parts,
            details,
        }
    }

    pub fn not_applicable(theorem: TheoremId, reason: impl Into<String>) -> Self {
        BoundCheckResult {
            theorem,
            applicable: false,
            reason: Some(reason.into()),
            lhs: None,
            rhs: None,
            slack: None,
            satisfied: true,
            equality: false,
            parts: Vec::new(),
            details: BTreeMap::new(),
        }
    }

    pub fn part(&self, label: &str) -> Option<&BoundPart> {
        self.parts.iter().find(|p| p.label == label)
    }
}

type Checked = std::result::Result<BoundCheckResult, Box<BoundCheckResult>>;

fn na(theorem: TheoremId, reason: impl Into<String>) -> Box<BoundCheckResult> {
    Box::new(BoundCheckResult::not_applicable(theorem, reason))
}

fn int(v: i64) -> Rational {
    Rational::from_integer(BigInt::from(v))
}

fn frac(n: i64, d: i64) -> Rational {
    Rational::new(BigInt::from(n), BigInt::from(d))
}

fn to_f64(r: &Rational) -> f64 {
    ToPrimitive::to_f64(r).unwrap_or(f64::NAN)
}

/// Per-graph data shared by all checks.
pub struct CheckContext<'a> {
    g: &'a Graph,
    stats: DegreeStats,
    components: ComponentDecomposition,
    indices: Option<IndexVector>,
    line: Option<(LineGraphResult, IndexVector)>,
    hyperbolicity_options: HyperbolicityOptions,
    hyperbolicity: OnceLock<std::result::Result<HyperbolicityResult, String>>,
}

impl<'a> CheckContext<'a> {
    pub fn new(g: &'a Graph) -> Self {
        Self::with_hyperbolicity_options(g, HyperbolicityOptions::default())
    }

    pub fn with_hyperbolicity_options(g: &'a Graph, opts: HyperbolicityOptions) -> Self {
        let indices = compute_index_vector(g).ok();
        let line = line_graph(g)
            .ok()
            .and_then(|l| compute_index_vector(&l.line_graph).ok().map(|iv| (l, iv)));
        CheckContext {
            g,
            stats: g.degree_stats(),
            components: g.classify_components(),
            indices,
            line,
            hyperbolicity_options: opts,
            hyperbolicity: OnceLock::new(),
        }
    }

    pub fn graph(&self) -> &Graph {
        self.g
    }

    pub fn indices(&self) -> Option<&IndexVector> {
        self.indices.as_ref()
    }

    pub fn line(&self) -> Option<&(LineGraphResult, IndexVector)> {
        self.line.as_ref()
    }

    pub fn hyperbolicity(&self) -> std::result::Result<&HyperbolicityResult, &str> {
        self.hyperbolicity
            .get_or_init(|| {
                hyperbolicity_constant_with(self.g, self.hyperbolicity_options)
                    .map_err(|e| e.to_string())
            })
            .as_ref()
            .map_err(String::as_str)
    }

    fn max_deg(&self) -> i64 {
        self.stats.max_degree as i64
    }

    fn min_deg(&self) -> i64 {
        self.stats.min_degree as i64
    }

    fn m(&self) -> i64 {
        self.stats.m as i64
    }

    fn require_indices(
        &self,
        id: TheoremId,
    ) -> std::result::Result<&IndexVector, Box<BoundCheckResult>> {
        match &self.indices {
            Some(iv) if self.stats.m > 0 => Ok(iv),
            _ => Err(na(id, "graph has an isolated vertex or no edges")),
        }
    }

    fn require_line(
        &self,
        id: TheoremId,
    ) -> std::result::Result<(&IndexVector, &LineGraphResult, &IndexVector), Box<BoundCheckResult>>
    {
        let iv = self.require_indices(id)?;
        match &self.line {
            Some((l, liv)) if self.stats.is_non_trivial => Ok((iv, l, liv)),
            _ => Err(na(
                id,
                "trivial graph: some component has fewer than two edges",
            )),
        }
    }

    pub fn check(&self, id: TheoremId) -> BoundCheckResult {
        let out = match id {
            TheoremId::T1 => self.t1(),
            TheoremId::T2 => self.t2(),
            TheoremId::T3 => self.t3(),
            TheoremId::T4 => self.t4(),
            TheoremId::T5 => self.t5(),
            TheoremId::T6 => self.t6(),
            TheoremId::T7 => self.t7(),
            TheoremId::T8 => self.t8(),
            TheoremId::T9 => self.t9(),
            TheoremId::T10 => self.t10(),
            TheoremId::T11 => self.t11(),
        };
        out.unwrap_or_else(|na| *na)
    }

    fn t1_branches(&self) -> [Rational; 3] {
        let (d, m) = (self.max_deg(), self.m());
        [
            int(2 * d * d + m * m + (6 - 2 * d) * m - 2 * d - 4),
            int(2 * d * d + m * m + (4 - 2 * d) * m + 4),
            int(m * (m - 1)),
        ]
    }

    fn t1_max(&self) -> Rational {
        self.t1_branches()
            .into_iter()
            .max()
            .expect("three branches")
    }

    fn t1(&self) -> Checked {
        if self.stats.m == 0 {
            return Err(na(TheoremId::T1, "graph has no edges"));
        }
        let m1 = int(self.g.degrees().iter().map(|&d| (d * d) as i64).sum());
        let branches = self.t1_branches();
        let rhs = self.t1_max();
        let details = branches
            .into_iter()
            .enumerate()
            .map(|(i, b)| (format!("branch_{}", i + 1), Value::Exact(b)))
            .collect();
        Ok(BoundCheckResult::from_parts(
            TheoremId::T1,
            vec![BoundPart::upper("M1(G) <= T1 max", m1, rhs)],
            details,
        ))
    }

    fn t2(&self) -> Checked {
        let (iv, _, liv) = self.require_line(TheoremId::T2)?;
        let rhs = self.t1_max() / int(2);
        let part = BoundPart::upper("GA1(G) + GA1(L(G)) <= T1 max / 2", iv.ga1 + liv.ga1, rhs);
        Ok(BoundCheckResult::from_parts(
            TheoremId::T2,
            vec![part],
            BTreeMap::new(),
        ))
    }

    fn t3(&self) -> Checked {
        let (iv, l, _) = self.require_line(TheoremId::T3)?;
        let m = int(self.m());
        let m_line = int(l.line_graph.m() as i64);
        let parts = vec![
            BoundPart::identity("m_L = P/2", m_line, iv.platt.clone() / int(2)),
            BoundPart::identity(
                "P = M1 - 2m",
                iv.platt.clone(),
                iv.m1.clone() - int(2) * m.clone(),
            ),
            BoundPart::identity(
                "m = (M1 - P)/2",
                m,
                (iv.m1.clone() - iv.platt.clone()) / int(2),
            ),
        ];
        Ok(BoundCheckResult::from_parts(
            TheoremId::T3,
            parts,
            BTreeMap::new(),
        ))
    }

    fn t4(&self) -> Checked {
        let (iv, l, liv) = self.require_line(TheoremId::T4)?;
        let (d, dl) = (self.max_deg(), self.min_deg());
        let p = to_f64(&iv.platt);
        let line_coef = (((d - 1) * (dl - 1)) as f64).sqrt() / (d + dl - 2) as f64;
        let graph_coef = ((d * dl) as f64).sqrt() / (d + dl) as f64;
        let m1_minus_p = iv.m1.clone() - iv.platt.clone();
        let balanced = |g: &Graph| g.edges().iter().all(|&(u, v)| g.degree(u) == g.degree(v));
        let parts = vec![
            BoundPart::lower("GA1(L(G)) >= line coefficient * P", liv.ga1, line_coef * p),
            BoundPart::upper("GA1(L(G)) <= P/2", liv.ga1, iv.platt.clone() / int(2))
                .with_symbolic_equality(balanced(&l.line_graph)),
            BoundPart::lower(
                "GA1(G) >= graph coefficient * (M1 - P)",
                iv.ga1,
                graph_coef * to_f64(&m1_minus_p),
            ),
            BoundPart::upper("GA1(G) <= (M1 - P)/2", iv.ga1, m1_minus_p / int(2))
                .with_symbolic_equality(balanced(self.g)),
        ];
        let details = BTreeMap::from([
            ("line_coefficient".to_string(), Value::Real(line_coef)),
            ("graph_coefficient".to_string(), Value::Real(graph_coef)),
        ]);
        Ok(BoundCheckResult::from_parts(TheoremId::T4, parts, details))
    }

    fn t5(&self) -> Checked {
        let (_, _, liv) = self.require_line(TheoremId::T5)?;
        if self.components.is_forest() {
            return Err(na(TheoremId::T5, "graph is a forest"));
        }
        let hyp = self.hyperbolicity().map_err(|e| na(TheoremId::T5, e))?;
        let delta = to_f64(&hyp.delta);
        let rhs = (4.0 * delta - 1.0).powf(1.5) / (2.0 * delta);
        let details = BTreeMap::from([("delta".to_string(), Value::Exact(hyp.delta.clone()))]);
        Ok(BoundCheckResult::from_parts(
            TheoremId::T5,
            vec![BoundPart::lower(
                "GA1(L(G)) >= (4 delta - 1)^(3/2) / (2 delta)",
                liv.ga1,
                rhs,
            )],
            details,
        ))
    }

    fn t6(&self) -> Checked {
        let iv = self.require_indices(TheoremId::T6)?;
        let (d, dl) = (self.max_deg() as f64, self.min_deg() as f64);
        let coef = (1.0 / (2.0 * d)).min(2.0 * (d * dl).sqrt() / ((d + dl) * (d + dl)));
        let regular = self.stats.max_degree == self.stats.min_degree;
        let part = BoundPart::lower(
            "GA1(G) >= coefficient * M1(G)",
            iv.ga1,
            coef * to_f64(&iv.m1),
        )
        .expecting(regular.then_some(true));
        let details = BTreeMap::from([("coefficient".to_string(), Value::Real(coef))]);
        Ok(BoundCheckResult::from_parts(
            TheoremId::T6,
            vec![part],
            details,
        ))
    }

    fn t7(&self) -> Checked {
        let (iv, _, liv) = self.require_line(TheoremId::T7)?;
        let rhs = int(4 * self.m()) - int(4) * iv.m1.clone()
            + int(2) * iv.m2.clone()
            + iv.forgotten.clone();
        let part = BoundPart::identity("M1(L(G)) = 4m - 4M1 + 2M2 + F", liv.m1.clone(), rhs);
        Ok(BoundCheckResult::from_parts(
            TheoremId::T7,
            vec![part],
            BTreeMap::new(),
        ))
    }

    fn t8(&self) -> Checked {
        let (iv, _, liv) = self.require_line(TheoremId::T8)?;
        let (d, dl) = (self.max_deg() as f64, self.min_deg() as f64);
        let coef =
            (1.0 / (4.0 * (d - 1.0))).min(((d - 1.0) * (dl - 1.0)).sqrt() / (d + dl - 2.0).powi(2));
        let expr = int(4 * self.m()) - int(4) * iv.m1.clone()
            + int(2) * iv.m2.clone()
            + iv.forgotten.clone();
        let part = BoundPart::lower(
            "GA1(L(G)) >= coefficient * (4m - 4M1 + 2M2 + F)",
            liv.ga1,
            coef * to_f64(&expr),
        );
        let details = BTreeMap::from([
            ("coefficient".to_string(), Value::Real(coef)),
            ("line_m1_expression".to_string(), Value::Exact(expr)),
        ]);
        Ok(BoundCheckResult::from_parts(
            TheoremId::T8,
            vec![part],
            details,
        ))
    }

    fn t9(&self) -> Checked {
        let iv = self.require_indices(TheoremId::T9)?;
        let mut parts = vec![BoundPart::upper(
            "H(G) <= n/2",
            iv.harmonic.clone(),
            frac(self.stats.n as i64, 2),
        )
        .expecting(Some(self.components.all_regular()))];
        let mut reason = None;
        match &self.line {
            Some((_, liv)) if self.stats.is_non_trivial => parts.push(
                BoundPart::upper("H(L(G)) <= m/2", liv.harmonic.clone(), frac(self.m(), 2))
                    .expecting(Some(self.components.all_regular_or_biregular())),
            ),
            _ => reason = Some("trivial graph: line-graph branch skipped".to_string()),
        }
        let mut out = BoundCheckResult::from_parts(TheoremId::T9, parts, BTreeMap::new());
        out.reason = reason;
        Ok(out)
    }

    fn t10(&self) -> Checked {
        let max_degree = self.stats.max_degree;
        let mut parts = Vec::new();
        for u in 0..self.g.n() {
            let k = self.g.degree(u);
            if k < 3 {
                continue;
            }
            let xs = self
                .g
                .neighbors(u)
                .iter()
                .map(|&v| self.g.degree(v))
                .collect();
            let inst =
                LemmaInstance::new(k, max_degree, xs).expect("degrees satisfy the lemma ranges");
            parts.extend(lemma_parts(&inst).into_iter().map(|mut p| {
                p.label = format!("vertex {u}: {}", p.label);
                p
            }));
        }
        if parts.is_empty() {
            return Err(na(TheoremId::T10, "no vertex of degree >= 3"));
        }
        Ok(BoundCheckResult::from_parts(
            TheoremId::T10,
            parts,
            BTreeMap::new(),
        ))
    }

    fn t11(&self) -> Checked {
        let (iv, _, liv) = self.require_line(TheoremId::T11)?;
        let (low, high) = t11_coefficients(self.stats.max_degree);
        let h = iv.harmonic.clone();
        let parts = vec![
            BoundPart::lower(
                "H(L(G)) >= c_low H(G)",
                liv.harmonic.clone(),
                low.clone() * h.clone(),
            ),
            BoundPart::upper(
                "H(L(G)) <= c_high H(G)",
                liv.harmonic.clone(),
                high.clone() * h,
            ),
        ];
        let details = BTreeMap::from([
            ("c_low".to_string(), Value::Exact(low)),
            ("c_high".to_string(), Value::Exact(high)),
        ]);
        Ok(BoundCheckResult::from_parts(TheoremId::T11, parts, details))
    }
}

/// `(c_low, c_high)` for the harmonic sandwich, selected by maximum degree.
pub fn t11_coefficients(max_degree: usize) -> (Rational, Rational) {
    let d = max_degree as i64;
    if d < 3 {
        (frac(8, 11), int(1))
    } else if d <= 4 {
        (frac(4, d + 3), int(d - 1))
    } else {
        (frac(3, 2 * d - 1), int(d - 1))
    }
}

/// Evaluates one check on one graph.
pub fn check_theorem(g: &Graph, id: TheoremId) -> BoundCheckResult {
    CheckContext::new(g).check(id)
}

pub fn check_t1_m1_upper(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T1)
}

pub fn check_t2_ga_sum(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T2)
}

pub fn check_t3_line_identities(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T3)
}

pub fn check_t4_ga_platt(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T4)
}

pub fn check_t5_ga_hyperbolicity(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T5)
}

pub fn check_t6_ga_vs_m1(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T6)
}

pub fn check_t7_m1_line_identity(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T7)
}

pub fn check_t8_ga_line_lower(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T8)
}

pub fn check_t9_harmonic_bounds(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T9)
}

pub fn check_t11_harmonic_sandwich(g: &Graph) -> BoundCheckResult {
    check_theorem(g, TheoremId::T11)
}

/// Integers `3 <= k <= max_degree` and `k` values `xs` in `1..=max_degree`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct LemmaInstance {
    k: usize,
    max_degree: usize,
    xs: Vec<usize>,
}

impl LemmaInstance {
    pub fn new(k: usize, max_degree: usize, xs: Vec<usize>) -> Result<Self> {
        if k < 3 || k > max_degree {
            return Err(Error::Domain(format!(
                "need 3 <= k <= max degree, got k = {k}, max degree = {max_degree}"
            )));
        }
        if xs.len() != k {
            return Err(Error::Domain(format!(
                "expected {k} values, got {}",
                xs.len()
            )));
        }
        if let Some(&x) = xs.iter().find(|&&x| x < 1 || x > max_degree) {
            return Err(Error::Domain(format!("value {x} outside 1..={max_degree}")));
        }
        Ok(LemmaInstance { k, max_degree, xs })
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn max_degree(&self) -> usize {
        self.max_degree
    }

    pub fn xs(&self) -> &[usize] {
        &self.xs
    }

    /// `(S, T)` with `S = sum_j 1/(x_j + k)` and `T = sum_{i<j} 1/(x_i + x_j + 2k - 4)`.
    pub fn sums<Q: Scalar>(&self) -> (Q, Q) {
        let k = self.k as i64;
        let s = self
            .xs
            .iter()
            .fold(Q::zero(), |acc, &x| acc + Q::from_frac(1, x as i64 + k));
        let mut t = Q::zero();
        for (i, &a) in self.xs.iter().enumerate() {
            for &b in &self.xs[i + 1..] {
                t = t + Q::from_frac(1, (a + b) as i64 + 2 * k - 4);
            }
        }
        (s, t)
    }

    /// Lemma and corollary coefficients, lower then upper:
    /// `[2/(k-1), 2(D+2k-3)/(k^2-1), 2/(D-1), (D+3)/4]`.
    pub fn coefficients<Q: Scalar>(&self) -> [Q; 4] {
        let (k, d) = (self.k as i64, self.max_degree as i64);
        [
            Q::from_frac(2, k - 1),
            Q::from_frac(2 * (d + 2 * k - 3), k * k - 1),
            Q::from_frac(2, d - 1),
            Q::from_frac(d + 3, 4),
        ]
    }
}

fn lemma_parts(inst: &LemmaInstance) -> Vec<BoundPart> {
    let (s, t) = inst.sums::<Rational>();
    let [lemma_low, lemma_high, cor_low, cor_high] = inst.coefficients::<Rational>();
    vec![
        BoundPart::lower("lemma lower", s.clone(), lemma_low * t.clone()),
        BoundPart::upper("lemma upper", s.clone(), lemma_high * t.clone()),
        BoundPart::lower("corollary lower", s.clone(), cor_low * t.clone()),
        BoundPart::upper("corollary upper", s, cor_high * t),
    ]
}

/// The four reciprocal-sum inequalities on one instance, in exact arithmetic.
pub fn check_t10_lemma(inst: &LemmaInstance) -> BoundCheckResult {
    let (s, t) = inst.sums::<Rational>();
    let details = BTreeMap::from([
        ("S".to_string(), Value::Exact(s)),
        ("T".to_string(), Value::Exact(t)),
    ]);
    BoundCheckResult::from_parts(TheoremId::T10, lemma_parts(inst), details)
}

/// Whether an exact value is zero; used by identity assertions in tests.
pub fn is_exact_zero(v: &Value) -> bool {
    matches!(v, Value::Exact(r) if r.is_zero())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn exact(v: &Option<Value>) -> Rational {
        match v {
            Some(Value::Exact(r)) => r.clone(),
            other => panic!("expected exact value, got {other:?}"),
        }
    }

    fn real(v: &Option<Value>) -> f64 {
        v.as_ref().expect("value present").to_f64()
    }

    #[test]
    fn t1_examples() {
        let r = check_t1_m1_upper(&Graph::cycle(4));
        assert_eq!(exact(&r.lhs), int(16));
        assert_eq!(exact(&r.rhs), int(28));
        assert_eq!(r.details["branch_1"], Value::int(24));
        assert_eq!(r.details["branch_2"], Value::int(28));
        assert_eq!(r.details["branch_3"], Value::int(12));
        assert!(r.satisfied);

        let r = check_t1_m1_upper(&Graph::path(2));
        assert_eq!(exact(&r.lhs), int(2));
        assert_eq!(exact(&r.rhs), int(9));
        assert!(r.satisfied);

        // K3: D = 2, m = 3: branches 15, 21, 6; M1 = 12.
        let r = check_t1_m1_upper(&Graph::complete(3));
        assert_eq!(exact(&r.lhs), int(12));
        assert_eq!(exact(&r.rhs), int(21));
        assert_eq!(r.details["branch_1"], Value::int(15));
        assert!(r.satisfied && !r.equality);

        assert!(!check_t1_m1_upper(&Graph::empty(3)).applicable);
    }

    #[test]
    fn t2_examples() {
        let r = check_t2_ga_sum(&Graph::cycle(4));
        assert!((real(&r.lhs) - 8.0).abs() < 1e-12);
        assert_eq!(exact(&r.rhs), int(14));
        assert!(r.satisfied);

        // S4: D = 3, m = 3 gives branches 17, 25, 6.
        let r = check_t2_ga_sum(&Graph::star(4));
        assert!((real(&r.lhs) - (1.5 * 3f64.sqrt() + 3.0)).abs() < 1e-12);
        assert_eq!(exact(&r.rhs), frac(25, 2));
        assert!(r.satisfied);

        // P3: D = 2, m = 2 gives branches 12, 16, 2.
        let r = check_t2_ga_sum(&Graph::path(3));
        assert!((real(&r.lhs) - (2.0 * 2f64.sqrt() / 1.5 + 1.0)).abs() < 1e-12);
        assert_eq!(exact(&r.rhs), int(8));

        let na = check_t2_ga_sum(&Graph::path(2));
        assert!(!na.applicable && na.satisfied);
    }

    #[test]
    fn t3_examples() {
        for g in [Graph::cycle(4), Graph::star(4), Graph::path(3)] {
            let r = check_t3_line_identities(&g);
            assert!(r.satisfied && r.equality);
            assert!(r.parts.iter().all(|p| is_exact_zero(&p.slack)));
        }
        let r = check_t3_line_identities(&Graph::star(4));
        assert_eq!(r.part("m_L = P/2").unwrap().lhs, Value::int(3));
        assert_eq!(r.part("P = M1 - 2m").unwrap().lhs, Value::int(6));
    }

    #[test]
    fn t4_examples() {
        let r = check_t4_ga_platt(&Graph::path(3));
        let up = r.part("GA1(L(G)) <= P/2").unwrap();
        assert!(up.equality);
        assert!(r.satisfied);

        let r = check_t4_ga_platt(&Graph::cycle(4));
        assert!(r.parts.iter().all(|p| p.equality), "{r:?}");

        let r = check_t4_ga_platt(&Graph::star(4));
        let low = r.part("GA1(L(G)) >= line coefficient * P").unwrap();
        assert_eq!(low.rhs.to_f64(), 0.0);
        assert!((low.lhs.to_f64() - 3.0).abs() < 1e-12);
        assert!(r.part("GA1(L(G)) <= P/2").unwrap().equality);
        assert!(r.satisfied);
    }

    #[test]
    fn t5_examples() {
        let r = check_t5_ga_hyperbolicity(&Graph::cycle(4));
        assert!((real(&r.lhs) - 4.0).abs() < 1e-12);
        assert!((real(&r.rhs) - 3f64.powf(1.5) / 2.0).abs() < 1e-12);
        assert!(r.satisfied);

        let r = check_t5_ga_hyperbolicity(&Graph::cycle(3));
        assert_eq!(r.details["delta"], Value::Exact(frac(3, 4)));
        assert!((real(&r.rhs) - 2f64.powf(1.5) / 1.5).abs() < 1e-12);
        assert!(r.satisfied);

        // L(K4) is the octahedron: 12 edges, 4-regular; delta(K4) = 1.
        let r = check_t5_ga_hyperbolicity(&Graph::complete(4));
        assert!((real(&r.lhs) - 12.0).abs() < 1e-12);
        assert_eq!(r.details["delta"], Value::int(1));
        assert!(r.satisfied);

        assert!(!check_t5_ga_hyperbolicity(&Graph::path(5)).applicable);
        assert!(!check_t5_ga_hyperbolicity(&Graph::cycle(9)).applicable);
    }

    #[test]
    fn t6_examples() {
        let r = check_t6_ga_vs_m1(&Graph::cycle(4));
        assert!(r.equality && r.satisfied);
        assert!((real(&r.rhs) - 4.0).abs() < 1e-12);

        let r = check_t6_ga_vs_m1(&Graph::star(4));
        assert!((real(&r.rhs) - 2.0).abs() < 1e-12);
        assert!(r.satisfied && !r.equality);

        let r = check_t6_ga_vs_m1(&Graph::path(3));
        let coef = (0.25f64).min(2.0 * 2f64.sqrt() / 9.0);
        assert!((real(&r.rhs) - coef * 6.0).abs() < 1e-12);
        assert!(r.satisfied);
    }

    #[test]
    fn t7_examples() {
        for (g, lhs) in [
            (Graph::path(3), 2),
            (Graph::star(4), 12),
            (Graph::cycle(4), 16),
        ] {
            let r = check_t7_m1_line_identity(&g);
            assert_eq!(exact(&r.lhs), int(lhs));
            assert_eq!(exact(&r.rhs), int(lhs));
            assert!(r.equality);
        }
    }

    #[test]
    fn t8_examples() {
        let r = check_t8_ga_line_lower(&Graph::cycle(4));
        assert!(r.equality);
        assert!((real(&r.rhs) - 4.0).abs() < 1e-12);

        let r = check_t8_ga_line_lower(&Graph::star(4));
        assert_eq!(r.details["coefficient"], Value::Real(0.0));
        assert!(r.satisfied && !r.equality);

        // K4: coefficient 1/8, expression 96, octahedron GA1 = 12.
        let r = check_t8_ga_line_lower(&Graph::complete(4));
        assert_eq!(r.details["line_m1_expression"], Value::int(96));
        assert!((real(&r.rhs) - 12.0).abs() < 1e-12);
        assert!(r.equality);
    }

    #[test]
    fn t9_examples() {
        let r = check_t9_harmonic_bounds(&Graph::cycle(4));
        let a = r.part("H(G) <= n/2").unwrap();
        assert!(a.equality && a.holds());

        let r = check_t9_harmonic_bounds(&Graph::star(4));
        assert!(!r.part("H(G) <= n/2").unwrap().equality);
        let b = r.part("H(L(G)) <= m/2").unwrap();
        assert_eq!(b.lhs, Value::Exact(frac(3, 2)));
        assert!(b.equality && b.holds());
        assert!(r.satisfied);

        let r = check_t9_harmonic_bounds(&Graph::path(4));
        assert_eq!(
            r.part("H(G) <= n/2").unwrap().lhs,
            Value::Exact(frac(11, 6))
        );
        let b = r.part("H(L(G)) <= m/2").unwrap();
        assert_eq!(b.lhs, Value::Exact(frac(4, 3)));
        assert!(!b.equality && r.satisfied);

        let r = check_t9_harmonic_bounds(&Graph::path(2));
        assert_eq!(r.parts.len(), 1);
        assert!(r.reason.is_some());
    }

    #[test]
    fn t10_examples() {
        let inst = LemmaInstance::new(3, 3, vec![1, 1, 1]).unwrap();
        let r = check_t10_lemma(&inst);
        assert_eq!(r.details["S"], Value::Exact(frac(3, 4)));
        assert_eq!(r.details["T"], Value::Exact(frac(3, 4)));
        let low = r.part("lemma lower").unwrap();
        assert!(low.equality);
        assert_eq!(r.part("lemma upper").unwrap().rhs, Value::Exact(frac(9, 8)));
        assert!(r.satisfied);

        let inst = LemmaInstance::new(3, 5, vec![5, 5, 5]).unwrap();
        let r = check_t10_lemma(&inst);
        assert_eq!(r.details["S"], Value::Exact(frac(3, 8)));
        assert_eq!(r.details["T"], Value::Exact(frac(1, 4)));
        assert!(r.satisfied);

        assert!(LemmaInstance::new(2, 3, vec![1, 1]).is_err());
        assert!(LemmaInstance::new(4, 3, vec![1; 4]).is_err());
        assert!(LemmaInstance::new(3, 3, vec![1, 4, 1]).is_err());
        assert!(LemmaInstance::new(3, 3, vec![1, 1]).is_err());
    }

    #[test]
    fn t10_on_graphs_uses_high_degree_vertices() {
        let r = check_theorem(&Graph::star(5), TheoremId::T10);
        assert_eq!(r.parts.len(), 4);
        assert!(r.satisfied);
        assert!(!check_theorem(&Graph::cycle(5), TheoremId::T10).applicable);
    }

    #[test]
    fn t11_examples() {
        let r = check_t11_harmonic_sandwich(&Graph::path(4));
        let low = r.part("H(L(G)) >= c_low H(G)").unwrap();
        assert_eq!(low.rhs, Value::Exact(frac(4, 3)));
        assert!(low.equality);

        let r = check_t11_harmonic_sandwich(&Graph::cycle(5));
        let up = r.part("H(L(G)) <= c_high H(G)").unwrap();
        assert_eq!(up.lhs, Value::Exact(frac(5, 2)));
        assert!(up.equality);

        let r = check_t11_harmonic_sandwich(&Graph::star(4));
        assert_eq!(r.part("H(L(G)) >= c_low H(G)").unwrap().rhs, Value::int(1));
        assert_eq!(r.part("H(L(G)) <= c_high H(G)").unwrap().rhs, Value::int(3));
        assert!(r.satisfied);
    }

    #[test]
    fn coefficient_regimes() {
        assert_eq!(t11_coefficients(2), (frac(8, 11), int(1)));
        assert_eq!(t11_coefficients(4), (frac(4, 7), int(3)));
        assert_eq!(t11_coefficients(5), (frac(3, 9), int(4)));
    }

    #[test]
    fn theorem_lists() {
        assert_eq!(parse_theorem_list("all").unwrap().len(), 11);
        assert_eq!(
            parse_theorem_list("t7,T3,T3").unwrap(),
            vec![TheoremId::T3, TheoremId::T7]
        );
        assert!(parse_theorem_list("T12").is_err());
        assert!(parse_theorem_list("").is_err());
    }

    #[test]
    fn mismatched_characterization_is_a_violation() {
        let part = BoundPart::upper("x", Value::int(1), Value::int(2)).expecting(Some(true));
        assert!(part.satisfied && !part.holds());
        let r = BoundCheckResult::from_parts(TheoremId::T9, vec![part], BTreeMap::new());
        assert!(!r.satisfied && !r.equality);
    }
}
