use std::fmt;
use std::ops::{Add, Index, Neg, Sub};

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{Signed, Zero};

use crate::exactlp::Rational;

/// A point (or vector) of Q^d. Ordered lexicographically by coordinates.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct RationalPoint(Vec<Rational>);

impl RationalPoint {
    pub fn new(coords: Vec<Rational>) -> Self {
        RationalPoint(coords)
    }

    pub fn origin(dim: usize) -> Self {
        RationalPoint(vec![Rational::zero(); dim])
    }

    /// Convenience constructor from integer coordinates.
    pub fn from_ints(coords: &[i64]) -> Self {
        RationalPoint(coords.iter().map(|&c| Rational::from_integer(c)).collect())
    }

    pub fn dim(&self) -> usize {
        self.0.len()
    }

    pub fn coords(&self) -> &[Rational] {
        &self.0
    }

    pub fn into_coords(self) -> Vec<Rational> {
        self.0
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(Rational::is_zero)
    }

    pub fn dot(&self, other: &RationalPoint) -> Rational {
        debug_assert_eq!(self.dim(), other.dim());
        self.0.iter().zip(&other.0).map(|(a, b)| a * b).sum()
    }

    pub fn norm_sq(&self) -> Rational {
        self.dot(self)
    }

    pub fn scale(&self, factor: &Rational) -> RationalPoint {
        RationalPoint(self.0.iter().map(|c| c * factor).collect())
    }

    fn first_nonzero(&self) -> Option<&Rational> {
        self.0.iter().find(|c| !c.is_zero())
    }

    /// True when the first nonzero coordinate is positive.
    pub fn is_canonically_oriented(&self) -> bool {
        self.first_nonzero().is_some_and(Rational::is_positive)
    }

    /// `self` or `-self`, whichever has a positive first nonzero coordinate.
    /// The zero vector is returned unchanged.
    pub fn canonically_oriented(&self) -> RationalPoint {
        match self.first_nonzero() {
            Some(c) if c.is_negative() => -self,
            _ => self.clone(),
        }
    }

    /// The primitive integer vector spanning the same line, oriented so its
    /// first nonzero entry is positive. Two nonzero vectors are parallel
    /// exactly when their directions are equal.
    pub fn direction(&self) -> Direction {
        let lcm = self
            .0
            .iter()
            .fold(BigInt::from(1), |acc, c| acc.lcm(&c.denom()));
        let mut ints: Vec<BigInt> = self
            .0
            .iter()
            .map(|c| c.numer() * (&lcm / c.denom()))
            .collect();
        let g = ints.iter().fold(BigInt::zero(), |acc, v| acc.gcd(v));
        if !g.is_zero() {
            for v in &mut ints {
                *v /= &g;
            }
        }
        if ints.iter().find(|v| !v.is_zero()).is_some_and(Signed::is_negative) {
            for v in &mut ints {
                *v = -&*v;
            }
        }
        Direction(ints)
    }
}

/// Exact key for the line spanned by a nonzero vector.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Direction(pub Vec<BigInt>);

impl Index<usize> for RationalPoint {
    type Output = Rational;
    fn index(&self, i: usize) -> &Rational {
        &self.0[i]
    }
}

impl Add<&RationalPoint> for &RationalPoint {
    type Output = RationalPoint;
    fn add(self, rhs: &RationalPoint) -> RationalPoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        RationalPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub<&RationalPoint> for &RationalPoint {
    type Output = RationalPoint;
    fn sub(self, rhs: &RationalPoint) -> RationalPoint {
        debug_assert_eq!(self.dim(), rhs.dim());
        RationalPoint(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &RationalPoint {
    type Output = RationalPoint;
    fn neg(self) -> RationalPoint {
        RationalPoint(self.0.iter().map(|c| -c).collect())
    }
}

impl fmt::Display for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        for (i, c) in self.0.iter().enumerate() {
            if i > 0 {
                f.write_str(" ")?;
            }
            write!(f, "{c}")?;
        }
        Ok(())
    }
}

impl fmt::Debug for RationalPoint {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})", self.0.iter().map(|c| c.to_string()).collect::<Vec<_>>().join(", "))
    }
}

/// Rank of a family of vectors, by exact Gaussian elimination.
pub fn rank(vectors: &[RationalPoint]) -> usize {
    let Some(dim) = vectors.first().map(RationalPoint::dim) else {
        return 0;
    };
    let mut rows: Vec<Vec<Rational>> = vectors.iter().map(|v| v.coords().to_vec()).collect();
    let mut rank = 0;
    for col in 0..dim {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][col].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = rows[rank][col].recip();
        let (done, rest) = rows.split_at_mut(rank + 1);
        let pivot_row = &done[rank];
        for row in rest {
            if row[col].is_zero() {
                continue;
            }
            let factor = &row[col] * &inv;
            for (v, p) in row[col..dim].iter_mut().zip(&pivot_row[col..dim]) {
                *v -= &(&factor * p);
            }
        }
        rank += 1;
        if rank == rows.len() {
            break;
        }
    }
    rank
}

/// Dimension of the affine hull of a point set (`0` for a single point).
pub fn affine_dimension(points: &[RationalPoint]) -> usize {
    match points.split_first() {
        None => 0,
        Some((base, rest)) => rank(&rest.iter().map(|p| p - base).collect::<Vec<_>>()),
    }
}
