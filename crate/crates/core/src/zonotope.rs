//! Vertex enumeration of a zonotope from its generators.
//!
//! A subset `X` of the generators `G` sums to a vertex exactly when the cone
//! spanned by `[−X] ∪ [G ∖ X]` is pointed, and the neighbors of that vertex
//! are the sums with those elements of `[−X] ∪ [G ∖ X]` that span rays of
//! that cone. [`enumerate_vertices`] runs a breadth-first search from the
//! origin over the zonotope graph, probing only forward moves `x + g` with
//! `g ∉ X`; every vertex stays reachable along a path of subsums of its own
//! generator subset, so nothing is lost.

use std::collections::{BTreeMap, HashMap, VecDeque};

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{is_pointed, is_ray_at, PointSet};
use crate::point::{rank, Direction, RationalPoint};
use crate::subset::Subset;

/// Canonical generators of a zonotope: nonzero, pairwise non-parallel,
/// first nonzero coordinate positive, sorted lexicographically.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GeneratorSet {
    points: PointSet,
}

impl GeneratorSet {
    pub fn empty(dim: usize) -> Self {
        GeneratorSet {
            points: PointSet::new(dim, Vec::new()).expect("empty set is valid"),
        }
    }

    /// Canonicalizes free endpoints of segments anchored at the origin.
    /// Zero vectors are rejected.
    pub fn from_vectors(dim: usize, vectors: Vec<RationalPoint>) -> Result<Self> {
        let origin = RationalPoint::origin(dim);
        let segments: Vec<_> = vectors.into_iter().map(|v| (origin.clone(), v)).collect();
        canonicalize(dim, &segments).map_err(|e| match e {
            Error::DegenerateSegment(_) => Error::ZeroVector,
            e => e,
        })
    }

    /// Accepts vectors that already satisfy every invariant, in any order.
    /// Fails if one of them does not.
    pub fn from_canonical(dim: usize, vectors: Vec<RationalPoint>) -> Result<Self> {
        let n = vectors.len();
        let g = Self::from_vectors(dim, vectors.clone())?;
        let mut sorted = vectors;
        sorted.sort();
        if g.len() != n || g.generators() != sorted.as_slice() {
            return Err(Error::NotCanonical(format!("{sorted:?}")));
        }
        Ok(g)
    }

    pub fn dim(&self) -> usize {
        self.points.dim()
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn generators(&self) -> &[RationalPoint] {
        self.points.points()
    }

    pub fn as_point_set(&self) -> &PointSet {
        &self.points
    }

    /// Dimension of the zonotope: the rank of its generators.
    pub fn intrinsic_dim(&self) -> usize {
        rank(self.generators())
    }

    /// `Σ_{i ∈ subset} g_i`.
    pub fn subset_sum(&self, subset: &Subset) -> RationalPoint {
        subset
            .iter()
            .fold(RationalPoint::origin(self.dim()), |acc, i| &acc + &self.generators()[i])
    }

    /// Sum of all generators; the vertex opposite the origin.
    pub fn total(&self) -> RationalPoint {
        self.subset_sum(&Subset::full(self.len()))
    }
}

/// Turns arbitrary segments into a canonical generator set: each one is
/// translated to start at the origin and flipped so the free endpoint's
/// first nonzero coordinate is positive; parallel segments are merged by
/// adding them.
pub fn canonicalize(dim: usize, segments: &[(RationalPoint, RationalPoint)]) -> Result<GeneratorSet> {
    let mut merged: HashMap<Direction, RationalPoint> = HashMap::new();
    for (index, (a, b)) in segments.iter().enumerate() {
        for p in [a, b] {
            if p.dim() != dim {
                return Err(Error::Dimension { index, found: p.dim(), expected: dim });
            }
        }
        let v = b - a;
        if v.is_zero() {
            return Err(Error::DegenerateSegment(a.to_string()));
        }
        let v = v.canonically_oriented();
        merged
            .entry(v.direction())
            .and_modify(|acc| *acc = &*acc + &v)
            .or_insert(v);
    }
    let mut gens: Vec<RationalPoint> = merged.into_values().collect();
    gens.sort();
    Ok(GeneratorSet {
        points: PointSet::new(dim, gens)?,
    })
}

/// A zonotope vertex with the generator subset summing to it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct VertexRecord {
    pub point: RationalPoint,
    pub xi: Subset,
}

/// `[−X] ∪ [G ∖ X]` in generator order.
fn transformed(g: &GeneratorSet, x: &Subset) -> PointSet {
    let pts = g
        .generators()
        .iter()
        .enumerate()
        .map(|(i, p)| if x.contains(i) { -p } else { p.clone() })
        .collect();
    PointSet::new(g.dim(), pts).expect("non-parallel generators stay distinct under sign flips")
}

fn check_subset(g: &GeneratorSet, x: &Subset) -> Result<()> {
    if x.universe() != g.len() {
        return Err(Error::IndexOutOfRange { index: x.universe(), len: g.len() });
    }
    Ok(())
}

/// Whether `Σ_{i ∈ X} g_i` is a vertex of the zonotope.
pub fn is_zonotope_vertex(g: &GeneratorSet, x: &Subset) -> Result<bool> {
    check_subset(g, x)?;
    is_pointed(g.as_point_set(), x)
}

/// All neighbors of a vertex in the zonotope graph.
pub fn neighbors(g: &GeneratorSet, rec: &VertexRecord) -> Result<Vec<VertexRecord>> {
    check_subset(g, &rec.xi)?;
    let t = transformed(g, &rec.xi);
    let flags = (0..g.len())
        .into_par_iter()
        .map(|i| is_ray_at(&t, i))
        .collect::<Result<Vec<bool>>>()?;
    Ok(flags
        .into_iter()
        .enumerate()
        .filter(|&(_, is_ray)| is_ray)
        .map(|(i, _)| VertexRecord {
            point: &rec.point + &t.points()[i],
            xi: rec.xi.toggled(i),
        })
        .collect())
}

/// Which moves the search probes from each vertex.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum Traversal {
    /// Only `x + g` for generators `g` not yet in the vertex's subset.
    #[default]
    Forward,
    /// Every element of `[−X] ∪ [G ∖ X]`.
    Full,
}

/// Vertices of the zonotope `Σ [0, g]`, sorted lexicographically by point.
pub fn enumerate_vertices(g: &GeneratorSet) -> Result<Vec<VertexRecord>> {
    enumerate_vertices_with(g, Traversal::Forward)
}

pub fn enumerate_vertices_with(g: &GeneratorSet, traversal: Traversal) -> Result<Vec<VertexRecord>> {
    let origin = RationalPoint::origin(g.dim());
    let mut visited: BTreeMap<RationalPoint, Subset> = BTreeMap::new();
    visited.insert(origin.clone(), Subset::empty(g.len()));
    let mut queue = VecDeque::from([origin]);

    while let Some(x) = queue.pop_front() {
        let xi = visited[&x].clone();
        let t = transformed(g, &xi);
        let candidates: Vec<(usize, RationalPoint)> = (0..g.len())
            .filter(|&i| traversal == Traversal::Full || !xi.contains(i))
            .map(|i| (i, &x + &t.points()[i]))
            .filter(|(_, y)| !visited.contains_key(y))
            .collect();
        let flags = candidates
            .par_iter()
            .map(|(i, _)| is_ray_at(&t, *i))
            .collect::<Result<Vec<bool>>>()?;
        for ((i, y), is_ray) in candidates.into_iter().zip(flags) {
            if is_ray {
                visited.insert(y.clone(), xi.toggled(i));
                queue.push_back(y);
            }
        }
    }

    Ok(visited
        .into_iter()
        .map(|(point, xi)| VertexRecord { point, xi })
        .collect())
}

/// Vertex count alone.
pub fn count_vertices(g: &GeneratorSet) -> Result<usize> {
    Ok(enumerate_vertices(g)?.len())
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(c: &[i64]) -> RationalPoint {
        RationalPoint::from_ints(c)
    }

    fn gens(v: &[&[i64]]) -> GeneratorSet {
        GeneratorSet::from_vectors(v[0].len(), v.iter().map(|c| p(c)).collect()).unwrap()
    }

    fn points(recs: &[VertexRecord]) -> Vec<RationalPoint> {
        recs.iter().map(|r| r.point.clone()).collect()
    }

    #[test]
    fn canonicalize_examples() {
        let g = canonicalize(2, &[(p(&[0, 0]), p(&[1, 0])), (p(&[2, 3]), p(&[2, 4]))]).unwrap();
        assert_eq!(g.generators(), &[p(&[0, 1]), p(&[1, 0])]);
        let g = canonicalize(2, &[(p(&[0, 0]), p(&[-1, 0]))]).unwrap();
        assert_eq!(g.generators(), &[p(&[1, 0])]);
        let g = canonicalize(2, &[(p(&[0, 0]), p(&[1, 1])), (p(&[5, 5]), p(&[7, 7]))]).unwrap();
        assert_eq!(g.generators(), &[p(&[3, 3])]);
        // Opposite orientations still add lengths.
        let g = canonicalize(2, &[(p(&[0, 0]), p(&[1, 1])), (p(&[0, 0]), p(&[-2, -2]))]).unwrap();
        assert_eq!(g.generators(), &[p(&[3, 3])]);
        assert!(matches!(
            canonicalize(2, &[(p(&[1, 1]), p(&[1, 1]))]),
            Err(Error::DegenerateSegment(_))
        ));
        assert_eq!(GeneratorSet::from_vectors(2, vec![p(&[0, 0])]), Err(Error::ZeroVector));
        assert!(GeneratorSet::from_canonical(2, vec![p(&[1, 0]), p(&[0, 1])]).is_ok());
        assert!(GeneratorSet::from_canonical(2, vec![p(&[-1, 0])]).is_err());
    }

    #[test]
    fn vertex_test_examples() {
        let hex = gens(&[&[1, 0], &[0, 1], &[1, 1]]);
        // Generator order is (0,1), (1,0), (1,1).
        assert!(is_zonotope_vertex(&hex, &Subset::empty(3)).unwrap());
        assert!(!is_zonotope_vertex(&hex, &Subset::from_indices(3, [0, 1])).unwrap());
        assert!(is_zonotope_vertex(&hex, &Subset::full(3)).unwrap());
        assert!(is_zonotope_vertex(&hex, &Subset::empty(2)).is_err());
    }

    #[test]
    fn neighbor_examples() {
        let sq = gens(&[&[1, 0], &[0, 1]]);
        let origin = VertexRecord { point: p(&[0, 0]), xi: Subset::empty(2) };
        let ns = neighbors(&sq, &origin).unwrap();
        assert_eq!(points(&ns), vec![p(&[0, 1]), p(&[1, 0])]);

        let hex = gens(&[&[1, 0], &[0, 1], &[1, 1]]);
        let origin = VertexRecord { point: p(&[0, 0]), xi: Subset::empty(3) };
        let ns = neighbors(&hex, &origin).unwrap();
        assert_eq!(points(&ns), vec![p(&[0, 1]), p(&[1, 0])]);

        let cube = gens(&[&[1, 0, 0], &[0, 1, 0], &[0, 0, 1]]);
        let top = VertexRecord { point: p(&[1, 1, 1]), xi: Subset::full(3) };
        let ns = neighbors(&cube, &top).unwrap();
        assert_eq!(ns.len(), 3);
        for n in &ns {
            assert_eq!(n.xi.count(), 2);
            assert_eq!(cube.subset_sum(&n.xi), n.point);
        }
    }

    #[test]
    fn enumerate_examples() {
        let sq = enumerate_vertices(&gens(&[&[1, 0], &[0, 1]])).unwrap();
        assert_eq!(sq.len(), 4);
        let xis: Vec<String> = sq.iter().map(|r| r.xi.to_bitstring()).collect();
        assert_eq!(xis, vec!["00", "10", "01", "11"]);

        let hex = enumerate_vertices(&gens(&[&[1, 0], &[0, 1], &[1, 1]])).unwrap();
        assert_eq!(
            points(&hex),
            vec![p(&[0, 0]), p(&[0, 1]), p(&[1, 0]), p(&[1, 2]), p(&[2, 1]), p(&[2, 2])]
        );

        let rd = gens(&[&[1, 1, 1], &[1, 1, -1], &[1, -1, 1], &[1, -1, -1]]);
        let recs = enumerate_vertices(&rd).unwrap();
        assert_eq!(recs.len(), 14);
        for r in &recs {
            assert_eq!(rd.subset_sum(&r.xi), r.point);
        }
    }

    #[test]
    fn degenerate_generator_sets() {
        let empty = enumerate_vertices(&GeneratorSet::empty(2)).unwrap();
        assert_eq!(empty, vec![VertexRecord { point: p(&[0, 0]), xi: Subset::empty(0) }]);

        let seg = enumerate_vertices(&gens(&[&[2, -1]])).unwrap();
        assert_eq!(points(&seg), vec![p(&[0, 0]), p(&[2, -1])]);

        // A planar hexagon living in 3-space.
        let flat = gens(&[&[1, 0, 0], &[0, 1, 0], &[1, 1, 0]]);
        assert_eq!(flat.intrinsic_dim(), 2);
        assert_eq!(enumerate_vertices(&flat).unwrap().len(), 6);
    }

    #[test]
    fn forward_and_full_traversals_agree() {
        let g = gens(&[&[1, 2, 0], &[-1, 1, 1], &[0, 1, -2], &[2, 0, 1], &[1, 1, 1]]);
        let fwd = enumerate_vertices_with(&g, Traversal::Forward).unwrap();
        let full = enumerate_vertices_with(&g, Traversal::Full).unwrap();
        assert_eq!(fwd, full);
    }
}
