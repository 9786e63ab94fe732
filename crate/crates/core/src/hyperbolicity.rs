//! Exact Gromov hyperbolicity of small unit-edge graphs.
//!
//! Every edge is split into `k` segments of length `1/k` and distances are
//! measured in steps on the subdivided graph. Triangle corners range over the
//! quarter lattice and points of the measured side over the full `1/k`
//! lattice.
//!
//! For corners `x, y, z` and a point `p` on a geodesic from `x` to `y`, the
//! worst choice of the other two sides is independent per side, so
//!
//! ```text
//! delta = max over x, y, z and p in I(x, y) of min(F(p; y, z), F(p; z, x))
//! ```
//!
//! where `I(x, y)` is the set of points on some `x`-`y` geodesic and
//! `F(p; a, b)` is the largest distance from `p` to a single `a`-`b` geodesic.
//! `F` is a bottleneck path value over the geodesic interval, found by a
//! forward pass ordered by distance from `a`. The sampled supremum is within
//! `1/(2k)` of the true value, which is a multiple of `1/4`, so rounding to
//! the nearest quarter is exact for `k >= 4`.

use std::collections::VecDeque;

use num_bigint::BigInt;
use rayon::prelude::*;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::value::format_rational;
use crate::Rational;

pub const DEFAULT_HYPERBOLICITY_CAP: usize = 8;
pub const DEFAULT_GRANULARITY: usize = 8;
pub const CORNER_GRANULARITY: usize = 4;

const UNREACHABLE: u32 = u32::MAX;

/// A point of the metric graph: a position along an edge `(u, v)`, `u < v`,
/// measured from `u`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct MetricPoint {
    pub edge: (usize, usize),
    #[serde(serialize_with = "ser_rational")]
    pub offset: Rational,
}

fn ser_rational<S: serde::Serializer>(r: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&format_rational(r))
}

/// All-pairs distances on the `k`-subdivision of a graph.
///
/// Point ids: vertex `v` is `v`; the `j`-th interior point (`1 <= j < k`) of
/// edge `e` is `n + e (k - 1) + j - 1`.
#[derive(Clone, Debug)]
pub struct SubdividedMetric {
    granularity: usize,
    vertex_count: usize,
    edges: Vec<(usize, usize)>,
    adj: Vec<Vec<u32>>,
    dist: Vec<u32>,
}

impl SubdividedMetric {
    pub fn granularity(&self) -> usize {
        self.granularity
    }

    pub fn point_count(&self) -> usize {
        self.adj.len()
    }

    pub fn vertex_point(&self, v: usize) -> usize {
        v
    }

    /// Point `step / k` of the way along edge `edge` from its smaller endpoint.
    pub fn edge_point(&self, edge: usize, step: usize) -> usize {
        let (u, v) = self.edges[edge];
        match step {
            0 => u,
            s if s == self.granularity => v,
            s => self.vertex_count + edge * (self.granularity - 1) + s - 1,
        }
    }

    /// Distance in lattice steps.
    pub fn distance_steps(&self, a: usize, b: usize) -> Option<u32> {
        let d = self.dist[a * self.point_count() + b];
        (d != UNREACHABLE).then_some(d)
    }

    pub fn distance(&self, a: usize, b: usize) -> Option<Rational> {
        self.distance_steps(a, b)
            .map(|d| Rational::new(BigInt::from(d), BigInt::from(self.granularity)))
    }

    fn d(&self, a: usize, b: usize) -> u32 {
        self.dist[a * self.point_count() + b]
    }

    pub fn neighbors(&self, id: usize) -> &[u32] {
        &self.adj[id]
    }

    /// Edge index and step of a point; vertices report their first incident edge.
    fn locate(&self, id: usize) -> Option<(usize, usize)> {
        if id < self.vertex_count {
            let e = self.edges.iter().position(|&(u, v)| u == id || v == id)?;
            let step = if self.edges[e].0 == id {
                0
            } else {
                self.granularity
            };
            Some((e, step))
        } else {
            let rel = id - self.vertex_count;
            Some((
                rel / (self.granularity - 1),
                rel % (self.granularity - 1) + 1,
            ))
        }
    }

    /// `None` for isolated vertices.
    pub fn metric_point(&self, id: usize) -> Option<MetricPoint> {
        let (e, step) = self.locate(id)?;
        Some(MetricPoint {
            edge: self.edges[e],
            offset: Rational::new(BigInt::from(step), BigInt::from(self.granularity)),
        })
    }

    /// Whether the point lies on the `1/corner_granularity` lattice.
    pub fn on_lattice(&self, id: usize, corner_granularity: usize) -> bool {
        match self.locate(id) {
            None => true,
            Some((_, step)) => {
                let stride = (self.granularity / corner_granularity).max(1);
                step % stride == 0
            }
        }
    }
}

/// Exact all-pairs distances on the `k`-subdivision, `k` in `{2, 4, 8}`.
pub fn subdivided_distances(g: &Graph, k: usize) -> Result<SubdividedMetric> {
    if ![2, 4, 8].contains(&k) {
        return Err(Error::InvalidGranularity(k));
    }
    let n = g.n();
    let points = n + g.m() * (k - 1);
    let mut adj = vec![Vec::new(); points];
    let mut link = |a: usize, b: usize| {
        adj[a].push(b as u32);
        adj[b].push(a as u32);
    };
    for (e, &(u, v)) in g.edges().iter().enumerate() {
        let base = n + e * (k - 1);
        let mut prev = u;
        for j in 0..k - 1 {
            link(prev, base + j);
            prev = base + j;
        }
        link(prev, v);
    }
    for list in &mut adj {
        list.sort_unstable();
    }
    let dist: Vec<u32> = (0..points)
        .into_par_iter()
        .flat_map_iter(|src| bfs(&adj, src))
        .collect();
    Ok(SubdividedMetric {
        granularity: k,
        vertex_count: n,
        edges: g.edges().to_vec(),
        adj,
        dist,
    })
}

fn bfs(adj: &[Vec<u32>], src: usize) -> Vec<u32> {
    let mut dist = vec![UNREACHABLE; adj.len()];
    dist[src] = 0;
    let mut queue = VecDeque::from([src]);
    while let Some(v) = queue.pop_front() {
        for &w in &adj[v] {
            let w = w as usize;
            if dist[w] == UNREACHABLE {
                dist[w] = dist[v] + 1;
                queue.push_back(w);
            }
        }
    }
    dist
}

/// `m / 4`.
pub fn hyperbolicity_upper_bound(g: &Graph) -> Rational {
    Rational::new(BigInt::from(g.m()), BigInt::from(4))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct HyperbolicityOptions {
    /// Largest component order computed exactly.
    pub cap: usize,
    /// Sampling granularity `k`, 4 or 8.
    pub granularity: usize,
}

impl Default for HyperbolicityOptions {
    fn default() -> Self {
        HyperbolicityOptions {
            cap: DEFAULT_HYPERBOLICITY_CAP,
            granularity: DEFAULT_GRANULARITY,
        }
    }
}

/// A geodesic triangle attaining the constant.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct GeodesicTriangle {
    /// `x, y, z`.
    pub corners: [MetricPoint; 3],
    /// Geodesics `x -> y` (the measured side), `y -> z` and `z -> x`.
    pub sides: [Vec<MetricPoint>; 3],
    /// Point of the first side farthest from the other two.
    pub farthest_point: MetricPoint,
    #[serde(serialize_with = "ser_rational")]
    pub farthest_distance: Rational,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct HyperbolicityResult {
    #[serde(serialize_with = "ser_rational")]
    pub delta: Rational,
    pub witness: Option<GeodesicTriangle>,
    pub granularity: usize,
    pub corner_granularity: usize,
    pub triangles_examined: u64,
    /// Supremum on the sampling lattice before rounding.
    #[serde(serialize_with = "ser_rational")]
    pub sampled_sup: Rational,
}

pub fn hyperbolicity_constant(g: &Graph) -> Result<HyperbolicityResult> {
    hyperbolicity_constant_with(g, HyperbolicityOptions::default())
}

/// Exact hyperbolicity constant; for disconnected graphs the maximum over components.
pub fn hyperbolicity_constant_with(
    g: &Graph,
    opts: HyperbolicityOptions,
) -> Result<HyperbolicityResult> {
    let k = opts.granularity;
    if k != 4 && k != 8 {
        return Err(Error::InvalidGranularity(k));
    }
    let components = g.components();
    if let Some(big) = components.iter().find(|c| c.len() > opts.cap) {
        return Err(Error::HyperbolicityCap {
            n: big.len(),
            cap: opts.cap,
            upper_bound: format_rational(&hyperbolicity_upper_bound(g)),
        });
    }
    let mut best: Option<(u32, Option<GeodesicTriangle>)> = None;
    let mut triangles = 0;
    for comp in &components {
        let sub = g.induced_subgraph(comp);
        let found = component_sup(&sub, k);
        triangles += found.triangles;
        if best.as_ref().is_none_or(|(v, _)| found.steps > *v) {
            let witness = found.witness.map(|w| relabel(w, comp));
            best = Some((found.steps, witness));
        }
    }
    let (steps, witness) = best.unwrap_or((0, None));
    let k32 = k as u32;
    let quarters = (4 * steps + k32 / 2) / k32;
    Ok(HyperbolicityResult {
        delta: Rational::new(BigInt::from(quarters), BigInt::from(4)),
        witness,
        granularity: k,
        corner_granularity: CORNER_GRANULARITY,
        triangles_examined: triangles,
        sampled_sup: Rational::new(BigInt::from(steps), BigInt::from(k)),
    })
}

fn relabel(mut w: GeodesicTriangle, comp: &[usize]) -> GeodesicTriangle {
    let map = |p: &mut MetricPoint| {
        let (a, b) = (comp[p.edge.0], comp[p.edge.1]);
        p.edge = (a.min(b), a.max(b));
    };
    w.corners.iter_mut().for_each(map);
    w.sides.iter_mut().flatten().for_each(map);
    map(&mut w.farthest_point);
    w
}

struct ComponentSup {
    steps: u32,
    triangles: u64,
    witness: Option<GeodesicTriangle>,
}

/// Points of the geodesic interval between two corners, ordered by distance
/// from the first, with predecessor lists in local indices.
struct Interval {
    points: Vec<u32>,
    preds: Vec<Vec<u32>>,
}

fn interval(metric: &SubdividedMetric, a: usize, b: usize) -> Interval {
    let total = metric.d(a, b);
    let mut points: Vec<u32> = (0..metric.point_count())
        .filter(|&q| {
            let (da, db) = (metric.d(a, q), metric.d(q, b));
            da != UNREACHABLE && db != UNREACHABLE && da + db == total
        })
        .map(|q| q as u32)
        .collect();
    points.sort_by_key(|&q| (metric.d(a, q as usize), q));
    let mut local = vec![u32::MAX; metric.point_count()];
    for (i, &q) in points.iter().enumerate() {
        local[q as usize] = i as u32;
    }
    let preds = points
        .iter()
        .map(|&q| {
            let dq = metric.d(a, q as usize);
            metric
                .neighbors(q as usize)
                .iter()
                .filter(|&&r| local[r as usize] != u32::MAX && metric.d(a, r as usize) + 1 == dq)
                .map(|&r| local[r as usize])
                .collect()
        })
        .collect();
    Interval { points, preds }
}

/// Largest distance from `p` to one geodesic of the interval, with the
/// optimal choice recorded in `parent` when requested.
fn bottleneck(
    metric: &SubdividedMetric,
    iv: &Interval,
    p: usize,
    parent: Option<&mut Vec<u32>>,
) -> u32 {
    let mut val = vec![0u32; iv.points.len()];
    let mut par = vec![u32::MAX; iv.points.len()];
    for i in 0..iv.points.len() {
        let here = metric.d(p, iv.points[i] as usize);
        val[i] = if iv.preds[i].is_empty() {
            here
        } else {
            let mut best = 0;
            let mut arg = u32::MAX;
            for &r in &iv.preds[i] {
                let v = val[r as usize];
                if arg == u32::MAX
                    || v > best
                    || (v == best && iv.points[r as usize] < iv.points[arg as usize])
                {
                    best = v;
                    arg = r;
                }
            }
            par[i] = arg;
            here.min(best)
        };
    }
    if let Some(out) = parent {
        *out = par;
    }
    *val.last().expect("interval contains both endpoints")
}

fn component_sup(g: &Graph, k: usize) -> ComponentSup {
    if g.m() == 0 {
        return ComponentSup {
            steps: 0,
            triangles: 0,
            witness: None,
        };
    }
    let metric = subdivided_distances(g, k).expect("granularity validated");
    let corners: Vec<usize> = (0..metric.point_count())
        .filter(|&id| metric.on_lattice(id, CORNER_GRANULARITY))
        .collect();
    let c = corners.len();
    let pair_index = |i: usize, j: usize| {
        let (i, j) = (i.min(j), i.max(j));
        i * c - i * (i + 1) / 2 + j
    };
    let pairs: Vec<(usize, usize)> = (0..c).flat_map(|i| (i..c).map(move |j| (i, j))).collect();
    let tables: Vec<(Interval, Vec<u32>)> = pairs
        .par_iter()
        .map(|&(i, j)| {
            let iv = interval(&metric, corners[i], corners[j]);
            let far = (0..metric.point_count())
                .map(|p| bottleneck(&metric, &iv, p, None))
                .collect();
            (iv, far)
        })
        .collect();

    // (steps, x, y, z, p) with the largest steps and the smallest tail.
    type Candidate = (u32, usize, usize, usize, u32);
    let better = |a: Candidate, b: Candidate| -> Candidate {
        if b.0 > a.0 || (b.0 == a.0 && (b.1, b.2, b.3, b.4) < (a.1, a.2, a.3, a.4)) {
            b
        } else {
            a
        }
    };
    let best = pairs
        .par_iter()
        .map(|&(xi, yi)| {
            let side = &tables[pair_index(xi, yi)].0;
            let mut local: Candidate = (0, xi, yi, 0, side.points[0]);
            for zi in 0..c {
                let yz = &tables[pair_index(yi, zi)].1;
                let zx = &tables[pair_index(zi, xi)].1;
                for &p in &side.points {
                    let v = yz[p as usize].min(zx[p as usize]);
                    local = better(local, (v, xi, yi, zi, p));
                }
            }
            local
        })
        .reduce_with(better)
        .expect("at least one corner pair");
    let (steps, xi, yi, zi, p) = best;
    let witness = build_witness(&metric, &corners, (xi, yi, zi), p as usize, steps);
    ComponentSup {
        steps,
        triangles: (pairs.len() * c) as u64,
        witness: Some(witness),
    }
}

fn walk_toward(metric: &SubdividedMetric, from: usize, target: usize) -> Vec<usize> {
    let mut path = vec![from];
    let mut cur = from;
    while cur != target {
        let next = metric
            .neighbors(cur)
            .iter()
            .map(|&r| r as usize)
            .find(|&r| metric.d(r, target) + 1 == metric.d(cur, target))
            .expect("geodesic continues");
        path.push(next);
        cur = next;
    }
    path
}

fn bottleneck_path(metric: &SubdividedMetric, a: usize, b: usize, p: usize) -> Vec<usize> {
    let iv = interval(metric, a, b);
    let mut parent = Vec::new();
    bottleneck(metric, &iv, p, Some(&mut parent));
    let mut path = Vec::new();
    let mut cur = (iv.points.len() - 1) as u32;
    while cur != u32::MAX {
        path.push(iv.points[cur as usize] as usize);
        cur = parent[cur as usize];
    }
    path.reverse();
    path
}

fn build_witness(
    metric: &SubdividedMetric,
    corners: &[usize],
    (xi, yi, zi): (usize, usize, usize),
    p: usize,
    steps: u32,
) -> GeodesicTriangle {
    let (x, y, z) = (corners[xi], corners[yi], corners[zi]);
    let mut first = walk_toward(metric, p, x);
    first.reverse();
    first.extend(walk_toward(metric, p, y).into_iter().skip(1));
    let second = bottleneck_path(metric, y, z, p);
    let third = bottleneck_path(metric, z, x, p);
    let to_points = |ids: Vec<usize>| -> Vec<MetricPoint> {
        ids.into_iter()
            .map(|id| metric.metric_point(id).expect("component has edges"))
            .collect()
    };
    let point = |id: usize| metric.metric_point(id).expect("component has edges");
    GeodesicTriangle {
        corners: [point(x), point(y), point(z)],
        sides: [to_points(first), to_points(second), to_points(third)],
        farthest_point: point(p),
        farthest_distance: Rational::new(BigInt::from(steps), BigInt::from(metric.granularity())),
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn antipodal_midpoints_of_c4() {
        let g = Graph::cycle(4);
        let metric = subdivided_distances(&g, 2).unwrap();
        assert_eq!(metric.point_count(), 8);
        // C4 edges sorted: (0,1), (0,3), (1,2), (2,3); (0,1) and (2,3) are opposite.
        let a = metric.edge_point(0, 1);
        let b = metric.edge_point(3, 1);
        assert_eq!(metric.distance(a, b), Some(q(2, 1)));
    }

    #[test]
    fn vertex_distances_match_graph() {
        let g = Graph::path(3);
        for k in [2, 4, 8] {
            let metric = subdivided_distances(&g, k).unwrap();
            assert_eq!(metric.distance(0, 1), Some(q(1, 1)));
            assert_eq!(metric.distance(0, 2), Some(q(2, 1)));
        }
        assert!(matches!(
            subdivided_distances(&g, 3),
            Err(Error::InvalidGranularity(3))
        ));
    }

    #[test]
    fn disconnected_points_are_unreachable() {
        let g = Graph::path(2).disjoint_union(&Graph::path(2));
        let metric = subdivided_distances(&g, 2).unwrap();
        assert_eq!(metric.distance(0, 3), None);
    }

    #[test]
    fn metric_points() {
        let metric = subdivided_distances(&Graph::path(3), 4).unwrap();
        let p = metric.metric_point(metric.edge_point(1, 3)).unwrap();
        assert_eq!(p.edge, (1, 2));
        assert_eq!(p.offset, q(3, 4));
        assert_eq!(metric.metric_point(2).unwrap().offset, q(1, 1));
        assert!(metric.on_lattice(metric.edge_point(0, 2), 4));
        assert!(metric.on_lattice(metric.edge_point(0, 1), 4));
        let fine = subdivided_distances(&Graph::path(3), 8).unwrap();
        assert!(!fine.on_lattice(fine.edge_point(0, 1), 4));
    }

    #[test]
    fn small_constants() {
        assert_eq!(
            hyperbolicity_constant(&Graph::path(5)).unwrap().delta,
            q(0, 1)
        );
        assert_eq!(
            hyperbolicity_constant(&Graph::star(5)).unwrap().delta,
            q(0, 1)
        );
        assert_eq!(
            hyperbolicity_constant(&Graph::cycle(3)).unwrap().delta,
            q(3, 4)
        );
        assert_eq!(
            hyperbolicity_constant(&Graph::cycle(4)).unwrap().delta,
            q(1, 1)
        );
        assert_eq!(
            hyperbolicity_constant(&Graph::complete(4)).unwrap().delta,
            q(1, 1)
        );
    }

    #[test]
    fn upper_bound_examples() {
        assert_eq!(hyperbolicity_upper_bound(&Graph::cycle(4)), q(1, 1));
        assert_eq!(hyperbolicity_upper_bound(&Graph::path(5)), q(1, 1));
        assert_eq!(hyperbolicity_upper_bound(&Graph::complete(4)), q(3, 2));
    }

    #[test]
    fn cap_and_granularity_errors() {
        let err = hyperbolicity_constant(&Graph::cycle(9)).unwrap_err();
        assert!(matches!(err, Error::HyperbolicityCap { n: 9, cap: 8, .. }));
        let opts = HyperbolicityOptions {
            cap: 10,
            granularity: 2,
        };
        assert!(matches!(
            hyperbolicity_constant_with(&Graph::cycle(4), opts),
            Err(Error::InvalidGranularity(2))
        ));
    }

    #[test]
    fn disconnected_takes_maximum() {
        let g = Graph::cycle(3).disjoint_union(&Graph::cycle(5));
        let r = hyperbolicity_constant(&g).unwrap();
        assert_eq!(r.delta, q(5, 4));
        let w = r.witness.unwrap();
        assert!(w.corners.iter().all(|p| p.edge.0 >= 3));
    }

    #[test]
    fn witness_is_consistent() {
        let g = Graph::cycle(6);
        let r = hyperbolicity_constant(&g).unwrap();
        let w = r.witness.unwrap();
        assert_eq!(w.farthest_distance, r.sampled_sup);
        assert_eq!(w.sides[0].first(), Some(&w.corners[0]));
        assert_eq!(w.sides[0].last(), Some(&w.corners[1]));
        assert_eq!(w.sides[1].first(), Some(&w.corners[1]));
        assert_eq!(w.sides[1].last(), Some(&w.corners[2]));
        assert_eq!(w.sides[2].first(), Some(&w.corners[2]));
        assert_eq!(w.sides[2].last(), Some(&w.corners[0]));
        assert!(w.sides[0].contains(&w.farthest_point));
    }
}
