#![allow(dead_code)]

use proptest::prelude::*;
use zonoracle::{GeneratorSet, PointSet, RationalPoint};

pub fn p(c: &[i64]) -> RationalPoint {
    RationalPoint::from_ints(c)
}

pub fn int_point(dim: usize, range: i64) -> impl Strategy<Value = RationalPoint> {
    prop::collection::vec(-range..=range, dim).prop_map(|c| RationalPoint::from_ints(&c))
}

/// Distinct points of one dimension.
pub fn point_set(dim: usize, max_len: usize, range: i64) -> impl Strategy<Value = PointSet> {
    prop::collection::btree_set(prop::collection::vec(-range..=range, dim), 1..=max_len)
        .prop_map(move |s| PointSet::new(dim, s.iter().map(|c| p(c)).collect()).unwrap())
}

/// Canonical generator set from random nonzero integer vectors; parallel
/// draws merge, so the final size can be below `max_len`.
pub fn generator_set(dim: usize, max_len: usize, range: i64) -> impl Strategy<Value = GeneratorSet> {
    prop::collection::vec(int_point(dim, range), 0..=max_len).prop_map(move |v| {
        let v = v.into_iter().filter(|x| !x.is_zero()).collect();
        GeneratorSet::from_vectors(dim, v).unwrap()
    })
}

pub fn any_dim_generator_set(dims: std::ops::RangeInclusive<usize>, max_len: usize, range: i64)
    -> impl Strategy<Value = GeneratorSet> {
    dims.prop_flat_map(move |d| generator_set(d, max_len, range))
}
