//! Segment summands of polytopes: the greatest zonotopal summand and the
//! zonotope recognition procedure.
//!
//! Both start from the edge graph of `P`, grouping edges into classes of
//! parallel edges. A segment `s` is a summand of `P` iff `P` and `P + s`
//! have the same number of vertices; when it is, the shortest edge of its
//! class is the longest such summand.

use std::collections::{BTreeMap, HashSet};
use std::fmt;

use crate::error::{Error, Result};
use crate::exactlp::Rational;
use crate::oracle::PointSet;
use crate::point::{rank, Direction, RationalPoint};
use crate::polygraph::{graph_of_vertices, hull_vertices, minkowski_sum_vertices, PolytopeGraph};
use crate::zonotope::GeneratorSet;

/// Edges of a polytope sharing one direction.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct EdgeClass {
    /// Shortest member, anchored at the origin and canonically oriented.
    pub representative: RationalPoint,
    pub multiplicity: usize,
    pub min_length_sq: Rational,
    pub max_length_sq: Rational,
}

impl EdgeClass {
    pub fn has_uniform_length(&self) -> bool {
        self.min_length_sq == self.max_length_sq
    }
}

/// Groups the edges of a polytope graph by direction, ordered by
/// representative.
pub fn edge_classes_of(graph: &PolytopeGraph) -> Vec<EdgeClass> {
    let mut classes: BTreeMap<Direction, EdgeClass> = BTreeMap::new();
    for (i, j) in graph.edges() {
        let e = (&graph.vertices[j] - &graph.vertices[i]).canonically_oriented();
        let len = e.norm_sq();
        classes
            .entry(e.direction())
            .and_modify(|c| {
                c.multiplicity += 1;
                if len < c.min_length_sq {
                    c.min_length_sq = len.clone();
                    c.representative = e.clone();
                }
                if len > c.max_length_sq {
                    c.max_length_sq = len.clone();
                }
            })
            .or_insert_with(|| EdgeClass {
                representative: e.clone(),
                multiplicity: 1,
                min_length_sq: len.clone(),
                max_length_sq: len.clone(),
            });
    }
    let mut out: Vec<EdgeClass> = classes.into_values().collect();
    out.sort_by(|a, b| a.representative.cmp(&b.representative));
    out
}

/// Edge classes of `conv(V)`. `V` must be its own vertex set.
pub fn edge_classes(v: &PointSet) -> Result<Vec<EdgeClass>> {
    Ok(edge_classes_of(&graph_of_vertices(v.points().to_vec())?))
}

fn segment(dim: usize, s: &RationalPoint) -> PointSet {
    PointSet::new(dim, vec![RationalPoint::origin(dim), s.clone()]).expect("nonzero segment")
}

/// Whether the segment `[0, s]` is a summand of `conv(W)`, by comparing the
/// vertex counts of `conv(W)` and `conv(W) + [0, s]`. `W` must be its own
/// vertex set.
pub fn has_segment_summand(w: &PointSet, s: &RationalPoint) -> Result<bool> {
    if s.is_zero() {
        return Err(Error::ZeroVector);
    }
    if s.dim() != w.dim() {
        return Err(Error::DimensionMismatch(w.dim(), s.dim()));
    }
    Ok(minkowski_sum_vertices(w, &segment(w.dim(), s))?.len() == w.len())
}

/// `P = z(P) + r(P)`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SummandDecomposition {
    /// Generators of the greatest zonotopal summand.
    pub zono_generators: GeneratorSet,
    /// Vertices of the residual polytope, sorted.
    pub residual_vertices: Vec<RationalPoint>,
}

/// Greatest zonotopal summand of `conv(V)` and the residual polytope.
pub fn greatest_zonotopal_summand(v: &PointSet) -> Result<SummandDecomposition> {
    let graph = graph_of_vertices(hull_vertices(v)?)?;
    let classes = edge_classes_of(&graph);
    let dim = edge_space_dim(&classes);
    extract_summands(v.dim(), graph.vertices, &classes, dim)
}

/// Rank of the edge directions: the dimension of the polytope.
pub fn edge_space_dim(classes: &[EdgeClass]) -> usize {
    rank(&classes.iter().map(|c| c.representative.clone()).collect::<Vec<_>>())
}

/// Peels segment summands off the vertex set `vertices`, visiting `classes`
/// in the given order. Classes with fewer than `dim` edges are skipped: a
/// segment summand of a `dim`-polytope has at least that many parallel edges.
pub fn extract_summands(
    ambient_dim: usize,
    vertices: Vec<RationalPoint>,
    classes: &[EdgeClass],
    dim: usize,
) -> Result<SummandDecomposition> {
    let mut w = vertices;
    let mut gens = Vec::new();
    for class in classes {
        if class.multiplicity < dim {
            continue;
        }
        let s = &class.representative;
        let current = PointSet::new(ambient_dim, w.clone())?;
        let grown = minkowski_sum_vertices(&current, &segment(ambient_dim, s))?;
        if grown.len() != w.len() {
            continue;
        }
        gens.push(s.clone());
        // Points of W that survive as vertices of conv(W) + s are the
        // vertices of the remainder; the others are remainder vertices
        // shifted by s.
        let kept: HashSet<&RationalPoint> = grown.iter().collect();
        let mut next: Vec<RationalPoint> = w
            .iter()
            .map(|x| if kept.contains(x) { x.clone() } else { x - s })
            .collect();
        next.sort();
        next.dedup();
        w = next;
    }
    Ok(SummandDecomposition {
        zono_generators: GeneratorSet::from_canonical(ambient_dim, gens)?,
        residual_vertices: w,
    })
}

/// Why a polytope is not a zonotope: the first failed check, cheapest first.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum NotZonotopeReason {
    OddVertexCount,
    UnequalParallelEdges,
    ParallelClassTooSmall,
    NotASummand,
}

impl fmt::Display for NotZonotopeReason {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NotZonotopeReason::OddVertexCount => "OddVertexCount",
            NotZonotopeReason::UnequalParallelEdges => "UnequalParallelEdges",
            NotZonotopeReason::ParallelClassTooSmall => "ParallelClassTooSmall",
            NotZonotopeReason::NotASummand => "NotASummand",
        })
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ZonotopeDecision {
    Zonotope(GeneratorSet),
    NotZonotope(NotZonotopeReason),
}

impl ZonotopeDecision {
    pub fn generators(&self) -> Option<&GeneratorSet> {
        match self {
            ZonotopeDecision::Zonotope(g) => Some(g),
            ZonotopeDecision::NotZonotope(_) => None,
        }
    }
}

/// Decides whether `conv(V)` is a zonotope and, if so, recovers its
/// generators.
pub fn decide_zonotope(v: &PointSet) -> Result<ZonotopeDecision> {
    use NotZonotopeReason::*;

    let vertices = hull_vertices(v)?;
    let n = vertices.len();
    if n == 1 {
        return Ok(ZonotopeDecision::Zonotope(GeneratorSet::empty(v.dim())));
    }
    if n % 2 == 1 {
        return Ok(ZonotopeDecision::NotZonotope(OddVertexCount));
    }
    let graph = graph_of_vertices(vertices)?;
    let classes = edge_classes_of(&graph);
    if !classes.iter().all(EdgeClass::has_uniform_length) {
        return Ok(ZonotopeDecision::NotZonotope(UnequalParallelEdges));
    }
    let dim = edge_space_dim(&classes);
    let min_class = 1usize << (dim - 1);
    if classes.iter().any(|c| c.multiplicity < min_class) {
        return Ok(ZonotopeDecision::NotZonotope(ParallelClassTooSmall));
    }
    let p = PointSet::new(v.dim(), graph.vertices)?;
    for class in &classes {
        if !has_segment_summand(&p, &class.representative)? {
            return Ok(ZonotopeDecision::NotZonotope(NotASummand));
        }
    }
    let gens = classes.into_iter().map(|c| c.representative).collect();
    Ok(ZonotopeDecision::Zonotope(GeneratorSet::from_canonical(v.dim(), gens)?))
}
