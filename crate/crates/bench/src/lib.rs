//! Fixed workloads for the benchmarks.

use zonoracle::{GeneratorSet, RationalPoint, Subset};

/// `m` pairwise non-parallel generators in dimension `d`, drawn from the
/// moment curve `(1, t, t², …)` so every `d` of them are independent.
pub fn generators(d: usize, m: usize) -> GeneratorSet {
    let vs = (1..=m as i64)
        .map(|t| RationalPoint::from_ints(&(0..d as u32).map(|k| t.pow(k)).collect::<Vec<_>>()))
        .collect();
    GeneratorSet::from_vectors(d, vs).expect("moment curve points are non-parallel")
}

/// All distinct subset sums of `g`, sorted.
pub fn subset_sum_cloud(g: &GeneratorSet) -> Vec<RationalPoint> {
    let mut cloud: Vec<_> = (0u64..1 << g.len()).map(|m| g.subset_sum(&Subset::from_mask(g.len(), m))).collect();
    cloud.sort();
    cloud.dedup();
    cloud
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn workloads_have_the_requested_size() {
        let g = generators(4, 10);
        assert_eq!((g.dim(), g.len(), g.intrinsic_dim()), (4, 10, 4));
        assert_eq!(subset_sum_cloud(&generators(2, 3)).len(), 8);
    }
}
