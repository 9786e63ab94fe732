//! Vertex-degree-based topological indices.
//!
//! Every edge-sum index has the form `sum over uv in E of f(d_u, d_v)` and is
//! evaluated through [`evaluate_vdb_index`]. Root-free indices are computed in
//! an exact scalar `Q`; the geometric-arithmetic index needs square roots and
//! is computed in a real scalar `R`.

use serde::ser::SerializeStruct;
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::graph::Graph;
use crate::scalar::{RealScalar, Scalar};
use crate::value::Value;
use crate::Rational;

/// All indices of one graph.
#[derive(Clone, Debug, PartialEq)]
pub struct IndexVectorOf<Q, R> {
    /// First Zagreb index, `sum d_v^2`.
    pub m1: Q,
    /// Second Zagreb index, `sum over edges of d_u d_v`.
    pub m2: Q,
    /// Forgotten index, `sum d_v^3`.
    pub forgotten: Q,
    /// Harmonic index, `sum over edges of 2 / (d_u + d_v)`.
    pub harmonic: Q,
    /// Geometric-arithmetic index, `sum over edges of sqrt(d_u d_v) / ((d_u + d_v) / 2)`.
    pub ga1: R,
    /// Platt number, `sum over edges of (d_u + d_v - 2)`.
    pub platt: Q,
}

/// Sum of `weight(d_u, d_v)` over all edges.
///
/// Fails with [`Error::IsolatedVertex`] when some vertex has degree zero.
pub fn evaluate_vdb_index<T, F>(g: &Graph, weight: F) -> Result<T>
where
    T: Scalar,
    F: Fn(usize, usize) -> T,
{
    if let Some(v) = g.isolated_vertex() {
        return Err(Error::IsolatedVertex(v));
    }
    Ok(g.edges().iter().fold(T::zero(), |acc, &(u, v)| {
        acc + weight(g.degree(u), g.degree(v))
    }))
}

/// Samples `weight` on `1..=max_degree` squared and reports the first
/// asymmetric pair.
pub fn check_symmetric<T, F>(weight: F, max_degree: usize) -> Option<(usize, usize)>
where
    T: Scalar,
    F: Fn(usize, usize) -> T,
{
    for a in 1..=max_degree {
        for b in a + 1..=max_degree {
            if !weight(a, b).approx_eq(&weight(b, a)) {
                return Some((a, b));
            }
        }
    }
    None
}

/// `sqrt(a b) / ((a + b) / 2)`, exactly one when `a == b`.
pub fn ga_edge_weight<R: RealScalar>(a: usize, b: usize) -> R {
    if a == b {
        return R::one();
    }
    let a = R::from_int(a as i64);
    let b = R::from_int(b as i64);
    let two = R::from_int(2);
    two * (a * b).sqrt() / (a + b)
}

pub fn harmonic_edge_weight<Q: Scalar>(a: usize, b: usize) -> Q {
    Q::from_frac(2, (a + b) as i64)
}

fn power_sum<Q: Scalar>(g: &Graph, exponent: u32) -> Q {
    (0..g.n()).fold(Q::zero(), |acc, v| {
        acc + Q::from_int((g.degree(v) as i64).pow(exponent))
    })
}

pub fn compute_index_vector_in<Q: Scalar, R: RealScalar>(g: &Graph) -> Result<IndexVectorOf<Q, R>> {
    let m1 = evaluate_vdb_index(g, |a, b| Q::from_int((a + b) as i64))?;
    let m2 = evaluate_vdb_index(g, |a, b| Q::from_int((a * b) as i64))?;
    let harmonic = evaluate_vdb_index(g, harmonic_edge_weight::<Q>)?;
    let ga1 = evaluate_vdb_index(g, ga_edge_weight::<R>)?;
    let platt = evaluate_vdb_index(g, |a, b| Q::from_int(a as i64 + b as i64 - 2))?;
    let forgotten = power_sum::<Q>(g, 3);

    let m1_by_vertices = power_sum::<Q>(g, 2);
    if m1 != m1_by_vertices {
        return Err(Error::Invariant(format!(
            "edge-sum M1 {m1:?} differs from degree-square sum {m1_by_vertices:?}"
        )));
    }
    let two_m = Q::from_int(2 * g.m() as i64);
    if platt != m1.clone() - two_m {
        return Err(Error::Invariant(format!(
            "Platt number {platt:?} differs from M1 - 2m"
        )));
    }
    Ok(IndexVectorOf {
        m1,
        m2,
        forgotten,
        harmonic,
        ga1,
        platt,
    })
}

/// Indices with exact rationals and `f64` for the geometric-arithmetic index.
pub fn compute_index_vector(g: &Graph) -> Result<IndexVectorOf<Rational, f64>> {
    compute_index_vector_in(g)
}

/// Harmonic index of `P_n`: 1 for `n = 2`, `(3n - 1) / 6` otherwise.
pub fn harmonic_of_path<Q: Scalar>(n: usize) -> Result<Q> {
    match n {
        0 | 1 => Err(Error::Domain(format!(
            "harmonic_of_path needs n >= 2, got {n}"
        ))),
        2 => Ok(Q::one()),
        _ => Ok(Q::from_frac(3 * n as i64 - 1, 6)),
    }
}

/// Names accepted wherever an index is selected by string.
pub const INDEX_NAMES: [&str; 6] = ["m1", "m2", "forgotten", "harmonic", "ga1", "platt"];

impl IndexVectorOf<Rational, f64> {
    pub fn get(&self, name: &str) -> Option<Value> {
        Some(match name {
            "m1" => Value::Exact(self.m1.clone()),
            "m2" => Value::Exact(self.m2.clone()),
            "forgotten" => Value::Exact(self.forgotten.clone()),
            "harmonic" => Value::Exact(self.harmonic.clone()),
            "ga1" => Value::Real(self.ga1),
            "platt" => Value::Exact(self.platt.clone()),
            _ => return None,
        })
    }
}

impl Serialize for IndexVectorOf<Rational, f64> {
    fn serialize<S: Serializer>(&self, serializer: S) -> std::result::Result<S::Ok, S::Error> {
        let mut s = serializer.serialize_struct("IndexVector", INDEX_NAMES.len())?;
        for name in INDEX_NAMES {
            s.serialize_field(name, &self.get(name).expect("known index"))?;
        }
        s.end()
    }
}

#[cfg(test)]
mod tests {
    use num_rational::Ratio;

    use super::*;

    fn q(n: i64, d: i64) -> Rational {
        Rational::new(n.into(), d.into())
    }

    #[test]
    fn vdb_examples() {
        let sum: i64 = evaluate_vdb_index(&Graph::cycle(4), |a, b| {
            Ratio::<i64>::from_int((a + b) as i64)
        })
        .unwrap()
        .to_integer();
        assert_eq!(sum, 16);
        let h: Rational = evaluate_vdb_index(&Graph::path(2), harmonic_edge_weight).unwrap();
        assert_eq!(h, q(1, 1));
        let m2: f64 = evaluate_vdb_index(&Graph::star(4), |a, b| (a * b) as f64).unwrap();
        assert_eq!(m2, 9.0);
    }

    #[test]
    fn isolated_vertex_is_rejected() {
        let g = Graph::new(3, &[(0, 1)]).unwrap();
        assert!(matches!(
            evaluate_vdb_index(&g, |_, _| 1.0f64),
            Err(Error::IsolatedVertex(2))
        ));
    }

    #[test]
    fn index_vector_of_p3() {
        let iv = compute_index_vector(&Graph::path(3)).unwrap();
        assert_eq!(iv.m1, q(6, 1));
        assert_eq!(iv.m2, q(4, 1));
        assert_eq!(iv.forgotten, q(10, 1));
        assert_eq!(iv.harmonic, q(4, 3));
        assert_eq!(iv.platt, q(2, 1));
        assert!((iv.ga1 - 2.0 * 2f64.sqrt() / 1.5).abs() < 1e-12);
        assert!((iv.ga1 - 1.885618083164127).abs() < 1e-9);
    }

    #[test]
    fn index_vector_of_c4() {
        let iv = compute_index_vector(&Graph::cycle(4)).unwrap();
        assert_eq!(
            (iv.m1, iv.m2, iv.forgotten, iv.harmonic, iv.platt),
            (q(16, 1), q(16, 1), q(32, 1), q(2, 1), q(8, 1))
        );
        assert_eq!(iv.ga1, 4.0);
    }

    #[test]
    fn index_vector_of_s4() {
        let iv = compute_index_vector(&Graph::star(4)).unwrap();
        assert_eq!(
            (iv.m1, iv.m2, iv.forgotten, iv.harmonic, iv.platt),
            (q(12, 1), q(9, 1), q(30, 1), q(3, 2), q(6, 1))
        );
        assert!((iv.ga1 - 1.5 * 3f64.sqrt()).abs() < 1e-12);
    }

    #[test]
    fn generic_over_scalars() {
        let exact = compute_index_vector_in::<Ratio<i64>, f32>(&Graph::star(4)).unwrap();
        assert_eq!(exact.harmonic, Ratio::new(3, 2));
        assert!((exact.ga1 - 2.598_076).abs() < 1e-5);
        let float = compute_index_vector_in::<f64, f64>(&Graph::path(4)).unwrap();
        assert!((float.harmonic - 11.0 / 6.0).abs() < 1e-12);
    }

    #[test]
    fn path_harmonic_formula() {
        assert_eq!(harmonic_of_path::<Rational>(2).unwrap(), q(1, 1));
        assert_eq!(harmonic_of_path::<Rational>(4).unwrap(), q(11, 6));
        assert_eq!(harmonic_of_path::<Rational>(7).unwrap(), q(10, 3));
        assert!(harmonic_of_path::<Rational>(1).is_err());
        for n in 2..=50 {
            let direct = compute_index_vector(&Graph::path(n)).unwrap().harmonic;
            assert_eq!(direct, harmonic_of_path::<Rational>(n).unwrap(), "P_{n}");
        }
    }

    #[test]
    fn weights_are_symmetric() {
        assert_eq!(check_symmetric(ga_edge_weight::<f64>, 12), None);
        assert_eq!(check_symmetric(harmonic_edge_weight::<Rational>, 12), None);
        assert_eq!(
            check_symmetric(|a, b| (a as f64) - (b as f64), 3),
            Some((1, 2))
        );
    }
}
