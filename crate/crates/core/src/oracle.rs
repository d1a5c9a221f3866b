//! Geometric predicates over finite point sets, each decided by a single
//! exact feasibility problem.
//!
//! The central test asks whether the affine hull of a subset `F ⊆ A` meets
//! the convex hull of the remaining points `A ∖ F`. It is feasible exactly
//! when there are coefficients `α` with
//!
//! ```text
//!   Σ_{a ∉ F} α_a·a − Σ_{a ∈ F} α_a·a = 0
//!   Σ_{a ∉ F} α_a = 1,   Σ_{a ∈ F} α_a = 1,   α_a ≥ 0 for a ∉ F.
//! ```
//!
//! `conv(F)` is a face of `conv(A)` iff that system is infeasible; vertices,
//! edges and cone rays are special cases.

use std::collections::HashSet;

use crate::error::{Error, Result};
use crate::exactlp::{solve_feasibility, Feasibility, FeasibilitySystem, Rational};
use crate::point::RationalPoint;
use crate::subset::Subset;

/// A finite set of pairwise distinct points of a common dimension.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PointSet {
    dim: usize,
    points: Vec<RationalPoint>,
}

impl PointSet {
    /// Rejects wrong-dimension rows and duplicates.
    pub fn new(dim: usize, points: Vec<RationalPoint>) -> Result<Self> {
        let mut seen = HashSet::with_capacity(points.len());
        for (index, p) in points.iter().enumerate() {
            if p.dim() != dim {
                return Err(Error::Dimension { index, found: p.dim(), expected: dim });
            }
            if !seen.insert(p) {
                return Err(Error::DuplicatePoint(p.to_string()));
            }
        }
        Ok(PointSet { dim, points })
    }

    /// Sorts and removes duplicates instead of rejecting them.
    pub fn dedup(dim: usize, mut points: Vec<RationalPoint>) -> Result<Self> {
        points.sort();
        points.dedup();
        Self::new(dim, points)
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn len(&self) -> usize {
        self.points.len()
    }

    pub fn is_empty(&self) -> bool {
        self.points.is_empty()
    }

    pub fn points(&self) -> &[RationalPoint] {
        &self.points
    }

    pub fn into_points(self) -> Vec<RationalPoint> {
        self.points
    }

    pub fn get(&self, i: usize) -> Option<&RationalPoint> {
        self.points.get(i)
    }

    pub fn index_of(&self, x: &RationalPoint) -> Option<usize> {
        self.points.iter().position(|p| p == x)
    }

    fn require(&self, x: &RationalPoint) -> Result<usize> {
        self.index_of(x).ok_or_else(|| Error::NotInSet(x.to_string()))
    }

    fn check_index(&self, index: usize) -> Result<()> {
        if index < self.len() {
            Ok(())
        } else {
            Err(Error::IndexOutOfRange { index, len: self.len() })
        }
    }
}

/// A non-empty set of indices into a [`PointSet`].
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FaceCandidate(Vec<usize>);

impl FaceCandidate {
    pub fn new(indices: impl IntoIterator<Item = usize>) -> Result<Self> {
        let mut v: Vec<usize> = indices.into_iter().collect();
        v.sort_unstable();
        v.dedup();
        if v.is_empty() {
            return Err(Error::EmptyFace);
        }
        Ok(FaceCandidate(v))
    }

    pub fn indices(&self) -> &[usize] {
        &self.0
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }
}

/// Builds the feasibility system over one `α` per point. `in_face[i]`
/// marks the members of `F`.
fn meets_system(points: &[&RationalPoint], in_face: &[bool], dim: usize) -> FeasibilitySystem {
    let n = points.len();
    let mut sys = FeasibilitySystem::new(n);
    for k in 0..dim {
        let row = points
            .iter()
            .zip(in_face)
            .map(|(p, &f)| if f { -&p[k] } else { p[k].clone() })
            .collect();
        sys.add_equality(row, Rational::zero());
    }
    let indicator = |want: bool| {
        in_face
            .iter()
            .map(|&f| if f == want { Rational::one() } else { Rational::zero() })
            .collect()
    };
    sys.add_equality(indicator(false), Rational::one());
    sys.add_equality(indicator(true), Rational::one());
    for (i, &f) in in_face.iter().enumerate() {
        if !f {
            sys.set_nonneg(i);
        }
    }
    sys
}

fn meets(points: &[&RationalPoint], in_face: &[bool], dim: usize) -> bool {
    let sys = meets_system(points, in_face, dim);
    solve_feasibility(&sys)
        .expect("meets_system builds well-formed rows")
        .is_feasible()
}

/// The feasibility system deciding whether `aff(F)` meets `conv(A ∖ F)`.
pub fn affine_meets_convex_system(a: &PointSet, f: &FaceCandidate) -> Result<FeasibilitySystem> {
    for &i in f.indices() {
        a.check_index(i)?;
    }
    if f.len() == a.len() {
        return Err(Error::WholeSet);
    }
    let mut in_face = vec![false; a.len()];
    for &i in f.indices() {
        in_face[i] = true;
    }
    let refs: Vec<&RationalPoint> = a.points().iter().collect();
    Ok(meets_system(&refs, &in_face, a.dim()))
}

/// True iff `aff(F) ∩ conv(A ∖ F) ≠ ∅`. Requires `∅ ≠ F ⊊ A`.
pub fn affine_meets_convex(a: &PointSet, f: &FaceCandidate) -> Result<bool> {
    let sys = affine_meets_convex_system(a, f)?;
    Ok(solve_feasibility(&sys)?.is_feasible())
}

/// Whether the point at `index` is a vertex of `conv(A)`.
pub fn is_vertex_at(a: &PointSet, index: usize) -> Result<bool> {
    a.check_index(index)?;
    if a.len() == 1 {
        return Ok(true);
    }
    Ok(!affine_meets_convex(a, &FaceCandidate(vec![index]))?)
}

/// Whether `x ∈ A` is a vertex of `conv(A)`, i.e. `x ∉ conv(A ∖ {x})`.
pub fn is_vertex(a: &PointSet, x: &RationalPoint) -> Result<bool> {
    is_vertex_at(a, a.require(x)?)
}

/// Whether `conv(F)` is a face of `conv(A)`. `F = A` is the improper face.
pub fn is_face(a: &PointSet, f: &FaceCandidate) -> Result<bool> {
    for &i in f.indices() {
        a.check_index(i)?;
    }
    if f.len() == a.len() {
        return Ok(true);
    }
    Ok(!affine_meets_convex(a, f)?)
}

pub fn is_edge_at(a: &PointSet, i: usize, j: usize) -> Result<bool> {
    if i == j {
        return Err(Error::SamePoint);
    }
    is_face(a, &FaceCandidate::new([i, j])?)
}

/// Whether the segment `[x, y]` is an edge of `conv(A)`.
pub fn is_edge(a: &PointSet, x: &RationalPoint, y: &RationalPoint) -> Result<bool> {
    if x == y {
        return Err(Error::SamePoint);
    }
    is_edge_at(a, a.require(x)?, a.require(y)?)
}

fn pairwise_independent(points: &[RationalPoint]) -> bool {
    let mut seen = HashSet::new();
    points.iter().all(|p| seen.insert(p.direction()))
}

/// Whether the half-line spanned by `A[index]` is a ray of `cone(A)`:
/// the line through 0 and that point misses `conv(A ∖ {x})`.
///
/// The cone must be pointed and `A` pairwise linearly independent; neither
/// is checked here outside of debug builds.
pub fn is_ray_at(a: &PointSet, index: usize) -> Result<bool> {
    a.check_index(index)?;
    if a.points().iter().any(RationalPoint::is_zero) {
        return Err(Error::ZeroVector);
    }
    debug_assert!(pairwise_independent(a.points()), "ray test needs pairwise independent generators");
    let origin = RationalPoint::origin(a.dim());
    let mut refs: Vec<&RationalPoint> = a.points().iter().collect();
    refs.push(&origin);
    let mut in_face = vec![false; refs.len()];
    in_face[index] = true;
    in_face[a.len()] = true;
    Ok(!meets(&refs, &in_face, a.dim()))
}

pub fn is_ray(a: &PointSet, x: &RationalPoint) -> Result<bool> {
    is_ray_at(a, a.require(x)?)
}

/// The system `c·g ≥ 1 (g ∈ X)`, `−c·g ≥ 1 (g ∈ G ∖ X)` over `c ∈ Q^d`.
pub fn pointedness_system(g: &PointSet, x: &Subset) -> Result<FeasibilitySystem> {
    if g.points().iter().any(RationalPoint::is_zero) {
        return Err(Error::ZeroVector);
    }
    if x.universe() != g.len() {
        return Err(Error::IndexOutOfRange { index: x.universe(), len: g.len() });
    }
    let mut sys = FeasibilitySystem::new(g.dim());
    for (i, p) in g.points().iter().enumerate() {
        let row = if x.contains(i) {
            p.coords().to_vec()
        } else {
            p.coords().iter().map(|c| -c).collect()
        };
        sys.add_inequality(row, Rational::one());
    }
    Ok(sys)
}

/// A vector `c` separating the cone of `[−X] ∪ [G ∖ X]` from the origin, if
/// one exists.
pub fn pointedness_witness(g: &PointSet, x: &Subset) -> Result<Option<Vec<Rational>>> {
    let sys = pointedness_system(g, x)?;
    Ok(match solve_feasibility(&sys)? {
        Feasibility::Feasible(c) => Some(c),
        Feasibility::Infeasible => None,
    })
}

/// Whether `cone([−X] ∪ [G ∖ X])` is pointed.
pub fn is_pointed(g: &PointSet, x: &Subset) -> Result<bool> {
    Ok(pointedness_witness(g, x)?.is_some())
}
