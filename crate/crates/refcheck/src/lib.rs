//! Brute-force reference oracles for the zonoracle test suites.
//!
//! Everything here trades speed for obviousness. Apart from
//! [`brute_zonotope_vertices`], which filters the subset-sum cloud with the
//! library's own vertex test, none of these routines touch the LP kernel.

use std::collections::BTreeSet;
use std::fmt;

use zonoracle::oracle::{is_vertex_at, PointSet};
use zonoracle::{FeasibilitySystem, GeneratorSet, Rational, RationalPoint};

pub const MAX_GENERATORS: usize = 12;
pub const MAX_POINTS: usize = 512;
/// Limit for the combinatorial (Carathéodory) hull tests.
pub const MAX_BRUTE_POINTS: usize = 16;

#[derive(Debug, Clone, PartialEq, Eq)]
pub enum RefError {
    CapExceeded { size: usize, cap: usize },
    Library(zonoracle::Error),
}

impl fmt::Display for RefError {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            RefError::CapExceeded { size, cap } => write!(f, "size {size} exceeds cap {cap}"),
            RefError::Library(e) => write!(f, "{e}"),
        }
    }
}

impl std::error::Error for RefError {}

impl From<zonoracle::Error> for RefError {
    fn from(e: zonoracle::Error) -> Self {
        RefError::Library(e)
    }
}

fn cap(size: usize, cap: usize) -> Result<(), RefError> {
    if size > cap {
        Err(RefError::CapExceeded { size, cap })
    } else {
        Ok(())
    }
}

/// All `2^m` subset sums of `g`, deduplicated and sorted.
pub fn subset_sum_cloud(g: &GeneratorSet) -> Result<Vec<RationalPoint>, RefError> {
    cap(g.len(), MAX_GENERATORS)?;
    let mut cloud = BTreeSet::new();
    for mask in 0u32..(1 << g.len()) {
        let sum = (0..g.len())
            .filter(|i| mask >> i & 1 == 1)
            .fold(RationalPoint::origin(g.dim()), |acc, i| &acc + &g.generators()[i]);
        cloud.insert(sum);
    }
    Ok(cloud.into_iter().collect())
}

/// Vertices of the zonotope as the hull of its subset-sum cloud, sorted.
pub fn brute_zonotope_vertices(g: &GeneratorSet) -> Result<Vec<RationalPoint>, RefError> {
    let cloud = PointSet::new(g.dim(), subset_sum_cloud(g)?)?;
    cap(cloud.len(), MAX_POINTS)?;
    let mut out = Vec::new();
    for i in 0..cloud.len() {
        if is_vertex_at(&cloud, i)? {
            out.push(cloud.points()[i].clone());
        }
    }
    Ok(out)
}

/// Exact solution of `rows · x = rhs` by Gauss-Jordan elimination, or
/// `None` when inconsistent. Free variables are set to zero.
pub fn gauss_solve(rows: &[Vec<Rational>], rhs: &[Rational], num_vars: usize) -> Option<Vec<Rational>> {
    let mut m: Vec<Vec<Rational>> = rows
        .iter()
        .zip(rhs)
        .map(|(r, b)| {
            let mut row = r.clone();
            row.push(b.clone());
            row
        })
        .collect();
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..num_vars {
        let Some(p) = (r..m.len()).find(|&i| !m[i][c].is_zero()) else {
            continue;
        };
        m.swap(r, p);
        let inv = m[r][c].recip();
        for v in m[r].iter_mut() {
            *v = &*v * &inv;
        }
        let pivot_row = m[r].clone();
        for (i, row) in m.iter_mut().enumerate() {
            if i != r && !row[c].is_zero() {
                let f = row[c].clone();
                for (v, p) in row.iter_mut().zip(&pivot_row) {
                    *v = &*v - &(&f * p);
                }
            }
        }
        pivots.push(c);
        r += 1;
    }
    if m[r..].iter().any(|row| !row[num_vars].is_zero()) {
        return None;
    }
    let mut x = vec![Rational::zero(); num_vars];
    for (i, &c) in pivots.iter().enumerate() {
        x[c] = m[i][num_vars].clone();
    }
    Some(x)
}

/// Unique solution of a square-or-tall system, if it has full column rank
/// and is consistent.
fn unique_solution(rows: &[Vec<Rational>], rhs: &[Rational], num_vars: usize) -> Option<Vec<Rational>> {
    let pts: Vec<RationalPoint> = rows.iter().map(|r| RationalPoint::new(r.clone())).collect();
    let cols: Vec<RationalPoint> = (0..num_vars)
        .map(|c| RationalPoint::new(pts.iter().map(|r| r[c].clone()).collect()))
        .collect();
    if zonoracle::point::rank(&cols) < num_vars {
        return None;
    }
    gauss_solve(rows, rhs, num_vars)
}

/// Feasibility by enumerating basic solutions: every choice of `num_vars`
/// constraint boundaries (equalities, inequalities, sign bounds) is solved
/// exactly and the intersection point checked against the full system.
///
/// Only sound when every variable is sign-constrained, so that a non-empty
/// feasible region has a vertex.
pub fn brute_feasible(sys: &FeasibilitySystem) -> Result<bool, RefError> {
    let n = sys.num_vars();
    cap(n, 3)?;
    let mut boundaries: Vec<(Vec<Rational>, Rational)> = Vec::new();
    for c in sys.equalities().iter().chain(sys.inequalities()) {
        boundaries.push((c.coeffs.clone(), c.rhs.clone()));
    }
    for &v in sys.nonneg_vars() {
        let mut row = vec![Rational::zero(); n];
        row[v] = Rational::one();
        boundaries.push((row, Rational::zero()));
    }
    cap(boundaries.len(), 9)?;
    if n == 0 {
        return Ok(sys.is_satisfied_by(&[]));
    }
    for combo in combinations(boundaries.len(), n) {
        let rows: Vec<_> = combo.iter().map(|&i| boundaries[i].0.clone()).collect();
        let rhs: Vec<_> = combo.iter().map(|&i| boundaries[i].1.clone()).collect();
        if let Some(x) = unique_solution(&rows, &rhs, n) {
            if sys.is_satisfied_by(&x) {
                return Ok(true);
            }
        }
    }
    Ok(false)
}

fn combinations(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(k);
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
    rec(0, n, k, &mut cur, &mut out);
    out
}

/// Whether `x` lies in `conv(others)`, by Carathéodory: it does iff it is
/// a convex combination of some affinely independent subset of at most
/// `d + 1` of them.
pub fn brute_in_hull(x: &RationalPoint, others: &[RationalPoint]) -> Result<bool, RefError> {
    cap(others.len(), MAX_BRUTE_POINTS)?;
    let d = x.dim();
    for k in 1..=(d + 1).min(others.len()) {
        for combo in combinations(others.len(), k) {
            // Rows: one per coordinate plus the affine row; columns: the
            // chosen points.
            let mut rows: Vec<Vec<Rational>> = (0..d)
                .map(|c| combo.iter().map(|&i| others[i][c].clone()).collect())
                .collect();
            rows.push(vec![Rational::one(); k]);
            let mut rhs: Vec<Rational> = x.coords().to_vec();
            rhs.push(Rational::one());
            if let Some(lambda) = unique_solution(&rows, &rhs, k) {
                if lambda.iter().all(|l| !l.is_negative()) {
                    return Ok(true);
                }
            }
        }
    }
    Ok(false)
}

/// Vertices of `conv(points)` by brute hull membership, sorted.
pub fn brute_vertices(points: &[RationalPoint]) -> Result<Vec<RationalPoint>, RefError> {
    cap(points.len(), MAX_BRUTE_POINTS)?;
    let mut out = Vec::new();
    for (i, x) in points.iter().enumerate() {
        let others: Vec<_> = points.iter().enumerate().filter(|&(j, _)| j != i).map(|(_, p)| p.clone()).collect();
        if !brute_in_hull(x, &others)? {
            out.push(x.clone());
        }
    }
    out.sort();
    out.dedup();
    Ok(out)
}

fn cross(o: &RationalPoint, a: &RationalPoint, b: &RationalPoint) -> Rational {
    (&a[0] - &o[0]) * (&b[1] - &o[1]) - (&a[1] - &o[1]) * (&b[0] - &o[0])
}

/// Counterclockwise hull cycle of planar points, starting from the
/// lexicographically smallest, collinear points dropped (monotone chain).
pub fn brute_hull_2d(points: &[RationalPoint]) -> Vec<RationalPoint> {
    let mut pts: Vec<RationalPoint> = points.to_vec();
    pts.sort();
    pts.dedup();
    if pts.len() <= 2 {
        return pts;
    }
    let mut lower: Vec<RationalPoint> = Vec::new();
    for p in &pts {
        while lower.len() >= 2 && !cross(&lower[lower.len() - 2], &lower[lower.len() - 1], p).is_positive() {
            lower.pop();
        }
        lower.push(p.clone());
    }
    let mut upper: Vec<RationalPoint> = Vec::new();
    for p in pts.iter().rev() {
        while upper.len() >= 2 && !cross(&upper[upper.len() - 2], &upper[upper.len() - 1], p).is_positive() {
            upper.pop();
        }
        upper.push(p.clone());
    }
    lower.pop();
    upper.pop();
    lower.extend(upper);
    lower
}

/// Hull edges of a planar cycle as sorted point pairs.
pub fn cycle_edges(cycle: &[RationalPoint]) -> BTreeSet<(RationalPoint, RationalPoint)> {
    let n = cycle.len();
    let mut out = BTreeSet::new();
    if n < 2 {
        return out;
    }
    let count = if n == 2 { 1 } else { n };
    for i in 0..count {
        let (a, b) = (cycle[i].clone(), cycle[(i + 1) % n].clone());
        out.insert(if a < b { (a, b) } else { (b, a) });
    }
    out
}
