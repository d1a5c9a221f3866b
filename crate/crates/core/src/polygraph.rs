//! Vertices, edge graphs, small faces and Minkowski sums of polytopes given
//! as finite point sets.

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::oracle::{is_edge_at, is_face, is_vertex_at, FaceCandidate, PointSet};
use crate::point::RationalPoint;

/// Default upper bound on the face size accepted by [`small_faces`].
pub const DEFAULT_MAX_FACE_SIZE: usize = 3;

/// Vertex-edge graph of a polytope.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PolytopeGraph {
    /// Lexicographically sorted.
    pub vertices: Vec<RationalPoint>,
    /// Sorted neighbor lists, indexed like `vertices`.
    pub adjacency: Vec<Vec<usize>>,
}

impl PolytopeGraph {
    /// Edges as `(i, j)` with `i < j`, in lexicographic order.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        self.adjacency
            .iter()
            .enumerate()
            .flat_map(|(i, ns)| ns.iter().filter(move |&&j| j > i).map(move |&j| (i, j)))
            .collect()
    }

    pub fn num_edges(&self) -> usize {
        self.adjacency.iter().map(Vec::len).sum::<usize>() / 2
    }

    pub fn degree(&self, v: usize) -> usize {
        self.adjacency[v].len()
    }

    pub fn is_connected(&self) -> bool {
        if self.vertices.is_empty() {
            return true;
        }
        let mut seen = vec![false; self.vertices.len()];
        let mut stack = vec![0];
        seen[0] = true;
        while let Some(v) = stack.pop() {
            for &w in &self.adjacency[v] {
                if !seen[w] {
                    seen[w] = true;
                    stack.push(w);
                }
            }
        }
        seen.into_iter().all(|s| s)
    }
}

/// The points of `A` that are vertices of `conv(A)`, sorted lexicographically.
pub fn hull_vertices(a: &PointSet) -> Result<Vec<RationalPoint>> {
    if a.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let flags = (0..a.len())
        .into_par_iter()
        .map(|i| is_vertex_at(a, i))
        .collect::<Result<Vec<bool>>>()?;
    let mut out: Vec<RationalPoint> = a
        .points()
        .iter()
        .zip(flags)
        .filter(|(_, v)| *v)
        .map(|(p, _)| p.clone())
        .collect();
    out.sort();
    Ok(out)
}

/// Graph of `conv(V)` where `V` is already known to be its own vertex set.
pub fn graph_of_vertices(vertices: Vec<RationalPoint>) -> Result<PolytopeGraph> {
    let dim = vertices.first().map(RationalPoint::dim).ok_or(Error::EmptyPointSet)?;
    let mut vertices = vertices;
    vertices.sort();
    let v = PointSet::new(dim, vertices)?;
    let n = v.len();
    let pairs: Vec<(usize, usize)> = (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))).collect();
    let flags = pairs
        .par_iter()
        .map(|&(i, j)| is_edge_at(&v, i, j))
        .collect::<Result<Vec<bool>>>()?;
    let mut adjacency = vec![Vec::new(); n];
    for (&(i, j), is_edge) in pairs.iter().zip(flags) {
        if is_edge {
            adjacency[i].push(j);
            adjacency[j].push(i);
        }
    }
    for ns in &mut adjacency {
        ns.sort_unstable();
    }
    Ok(PolytopeGraph {
        vertices: v.into_points(),
        adjacency,
    })
}

/// Graph of `conv(A)`: vertex filtering, then pairwise edge tests on the
/// reduced vertex set.
pub fn graph_of(a: &PointSet) -> Result<PolytopeGraph> {
    graph_of_vertices(hull_vertices(a)?)
}

/// Faces of `conv(A)` with at most `k` vertices, as index sets into `A`.
/// Ordered by size, then lexicographically by indices.
pub fn small_faces(a: &PointSet, k: usize) -> Result<Vec<FaceCandidate>> {
    small_faces_capped(a, k, DEFAULT_MAX_FACE_SIZE)
}

/// [`small_faces`] with an explicit limit on `k`.
pub fn small_faces_capped(a: &PointSet, k: usize, cap: usize) -> Result<Vec<FaceCandidate>> {
    if k == 0 {
        return Err(Error::EmptyFace);
    }
    if k > cap {
        return Err(Error::FaceSizeLimit { k, cap });
    }
    let vertex_indices: Vec<usize> = {
        let flags = (0..a.len())
            .into_par_iter()
            .map(|i| is_vertex_at(a, i))
            .collect::<Result<Vec<bool>>>()?;
        (0..a.len()).filter(|&i| flags[i]).collect()
    };
    let vertices = PointSet::new(
        a.dim(),
        vertex_indices.iter().map(|&i| a.points()[i].clone()).collect(),
    )?;

    let mut out = Vec::new();
    for size in 1..=k.min(vertices.len()) {
        let candidates = combinations(vertices.len(), size);
        let flags = candidates
            .par_iter()
            .map(|c| is_face(&vertices, &FaceCandidate::new(c.iter().copied())?))
            .collect::<Result<Vec<bool>>>()?;
        for (c, is_face) in candidates.into_iter().zip(flags) {
            if is_face {
                out.push(FaceCandidate::new(c.into_iter().map(|i| vertex_indices[i]))?);
            }
        }
    }
    Ok(out)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    fn rec(start: usize, n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            cur.push(i);
            rec(i + 1, n, k, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    rec(0, n, k, &mut Vec::with_capacity(k), &mut out);
    out
}

/// The deduplicated cloud `{a + b}`.
pub fn minkowski_sum_cloud(a: &PointSet, b: &PointSet) -> Result<PointSet> {
    if a.dim() != b.dim() {
        return Err(Error::DimensionMismatch(a.dim(), b.dim()));
    }
    if a.is_empty() || b.is_empty() {
        return Err(Error::EmptyPointSet);
    }
    let cloud = a
        .points()
        .iter()
        .flat_map(|p| b.points().iter().map(move |q| p + q))
        .collect();
    PointSet::dedup(a.dim(), cloud)
}

/// Vertices of `conv(A) + conv(B)`, sorted lexicographically.
pub fn minkowski_sum_vertices(a: &PointSet, b: &PointSet) -> Result<Vec<RationalPoint>> {
    hull_vertices(&minkowski_sum_cloud(a, b)?)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::point::affine_dimension;

    fn p(c: &[i64]) -> RationalPoint {
        RationalPoint::from_ints(c)
    }

    fn set(pts: &[&[i64]]) -> PointSet {
        PointSet::new(pts[0].len(), pts.iter().map(|c| p(c)).collect()).unwrap()
    }

    fn pts(pts: &[&[i64]]) -> Vec<RationalPoint> {
        pts.iter().map(|c| p(c)).collect()
    }

    fn square() -> PointSet {
        set(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1]])
    }

    fn cube_cloud() -> PointSet {
        let pts = (0..8u32)
            .map(|m| p(&[(m & 1) as i64, (m >> 1 & 1) as i64, (m >> 2 & 1) as i64]))
            .collect();
        PointSet::new(3, pts).unwrap()
    }

    fn hexagon_cloud() -> PointSet {
        set(&[&[0, 0], &[1, 0], &[0, 1], &[1, 1], &[2, 1], &[1, 2], &[2, 2]])
    }

    #[test]
    fn hull_examples() {
        let kite = set(&[&[0, 0], &[2, 0], &[0, 2], &[1, 1]]);
        assert_eq!(hull_vertices(&kite).unwrap(), pts(&[&[0, 0], &[0, 2], &[2, 0]]));
        assert_eq!(hull_vertices(&square()).unwrap().len(), 4);
        assert_eq!(
            hull_vertices(&hexagon_cloud()).unwrap(),
            pts(&[&[0, 0], &[0, 1], &[1, 0], &[1, 2], &[2, 1], &[2, 2]])
        );
        assert_eq!(hull_vertices(&PointSet::new(2, vec![]).unwrap()), Err(Error::EmptyPointSet));
    }

    #[test]
    fn hull_is_idempotent() {
        let h = hull_vertices(&hexagon_cloud()).unwrap();
        let again = hull_vertices(&PointSet::new(2, h.clone()).unwrap()).unwrap();
        assert_eq!(h, again);
    }

    #[test]
    fn graph_examples() {
        let g = graph_of(&square()).unwrap();
        assert_eq!(g.num_edges(), 4);
        assert!((0..4).all(|v| g.degree(v) == 2));
        assert!(g.is_connected());

        let cube = graph_of(&cube_cloud()).unwrap();
        assert_eq!(cube.vertices.len(), 8);
        assert_eq!(cube.num_edges(), 12);
        assert!((0..8).all(|v| cube.degree(v) == 3));
        for (i, j) in cube.edges() {
            let d = &cube.vertices[j] - &cube.vertices[i];
            assert_eq!(d.norm_sq(), 1.into());
        }

        let hex = graph_of(&hexagon_cloud()).unwrap();
        assert_eq!(hex.vertices.len(), 6);
        assert_eq!(hex.num_edges(), 6);
        assert!(hex.is_connected() && (0..6).all(|v| hex.degree(v) == 2));

        let single = graph_of(&set(&[&[4, 2]])).unwrap();
        assert_eq!((single.vertices.len(), single.num_edges()), (1, 0));
    }

    #[test]
    fn graph_degree_at_least_dimension() {
        for cloud in [square(), cube_cloud(), hexagon_cloud()] {
            let g = graph_of(&cloud).unwrap();
            let d = affine_dimension(&g.vertices);
            assert!((0..g.vertices.len()).all(|v| g.degree(v) >= d));
        }
    }

    #[test]
    fn small_face_examples() {
        let sq = square();
        assert_eq!(small_faces(&sq, 1).unwrap().len(), 4);
        let faces = small_faces(&sq, 2).unwrap();
        assert_eq!(faces.len(), 8);
        assert!(!faces.contains(&FaceCandidate::new([0, 3]).unwrap()));
        assert!(!faces.contains(&FaceCandidate::new([1, 2]).unwrap()));

        let cube = small_faces(&cube_cloud(), 2).unwrap();
        assert_eq!(cube.iter().filter(|f| f.len() == 1).count(), 8);
        assert_eq!(cube.iter().filter(|f| f.len() == 2).count(), 12);
        // Square faces of the cube show up at k = 3 only through their
        // non-face triples, so no 3-subset qualifies.
        assert_eq!(small_faces(&cube_cloud(), 3).unwrap().len(), 20);

        // Indices refer to the input set, skipping its non-vertices.
        let kite = set(&[&[1, 1], &[0, 0], &[2, 0], &[0, 2]]);
        let f = small_faces(&kite, 1).unwrap();
        assert_eq!(f.iter().map(|f| f.indices()[0]).collect::<Vec<_>>(), vec![1, 2, 3]);

        assert_eq!(small_faces(&sq, 4), Err(Error::FaceSizeLimit { k: 4, cap: 3 }));
        assert_eq!(small_faces(&sq, 0), Err(Error::EmptyFace));
        assert_eq!(small_faces_capped(&sq, 4, 4).unwrap().len(), 9);
    }

    #[test]
    fn minkowski_examples() {
        let e1 = set(&[&[0, 0], &[1, 0]]);
        let e2 = set(&[&[0, 0], &[0, 1]]);
        assert_eq!(minkowski_sum_vertices(&e1, &e2).unwrap(), hull_vertices(&square()).unwrap());

        let tri = set(&[&[0, 0], &[1, 0], &[0, 1]]);
        assert_eq!(
            minkowski_sum_vertices(&tri, &e1).unwrap(),
            pts(&[&[0, 0], &[0, 1], &[1, 1], &[2, 0]])
        );

        let pt = set(&[&[3, -1]]);
        assert_eq!(
            minkowski_sum_vertices(&tri, &pt).unwrap(),
            pts(&[&[3, -1], &[3, 0], &[4, -1]])
        );

        let line = set(&[&[0]]);
        assert_eq!(minkowski_sum_vertices(&tri, &line), Err(Error::DimensionMismatch(2, 1)));
    }
}
