mod common;

use std::collections::BTreeSet;

use common::{any_dim_generator_set, p};
use proptest::prelude::*;
use zonoracle::polygraph::{graph_of_vertices, hull_vertices};
use zonoracle::zonotope::{enumerate_vertices, enumerate_vertices_with, is_zonotope_vertex, Traversal};
use zonoracle::{GeneratorSet, PointSet, RationalPoint, Subset};
use zonoracle_refcheck::{brute_zonotope_vertices, subset_sum_cloud};

fn points(g: &GeneratorSet) -> Vec<RationalPoint> {
    enumerate_vertices(g).unwrap().into_iter().map(|r| r.point).collect()
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn matches_exhaustive_subset_scan(g in any_dim_generator_set(2..=4, 8, 4)) {
        let got = points(&g);
        let scanned: BTreeSet<RationalPoint> = (0u64..(1 << g.len()))
            .map(|m| Subset::from_mask(g.len(), m))
            .filter(|x| is_zonotope_vertex(&g, x).unwrap())
            .map(|x| g.subset_sum(&x))
            .collect();
        prop_assert_eq!(&got, &scanned.into_iter().collect::<Vec<_>>());
        prop_assert_eq!(&got, &brute_zonotope_vertices(&g).unwrap());
        let cloud = PointSet::new(g.dim(), subset_sum_cloud(&g).unwrap()).unwrap();
        prop_assert_eq!(&got, &hull_vertices(&cloud).unwrap());
    }

    #[test]
    fn records_are_consistent_and_symmetric(g in any_dim_generator_set(1..=4, 9, 5)) {
        let records = enumerate_vertices(&g).unwrap();
        let set: BTreeSet<_> = records.iter().map(|r| r.point.clone()).collect();
        let total = g.total();
        for r in &records {
            prop_assert_eq!(&g.subset_sum(&r.xi), &r.point);
            prop_assert!(set.contains(&(&total - &r.point)));
        }
        prop_assert!(records.len() >= 1 << g.intrinsic_dim());
    }

    #[test]
    fn edges_are_translates_of_generators(g in any_dim_generator_set(1..=4, 8, 4)) {
        let graph = graph_of_vertices(points(&g)).unwrap();
        let mut counts = vec![0usize; g.len()];
        for (i, j) in graph.edges() {
            let e = &graph.vertices[j] - &graph.vertices[i];
            let k = g.generators().iter().position(|x| *x == e || *x == -&e);
            prop_assert!(k.is_some(), "edge {:?} is no generator", e);
            counts[k.unwrap()] += 1;
        }
        let floor = 1usize << g.intrinsic_dim().saturating_sub(1);
        for (k, c) in counts.into_iter().enumerate() {
            prop_assert!(c >= floor, "generator {:?} has {} edges", g.generators()[k], c);
        }
    }

    #[test]
    fn forward_restriction_is_complete(g in any_dim_generator_set(2..=4, 7, 4)) {
        prop_assert_eq!(
            enumerate_vertices_with(&g, Traversal::Forward).unwrap(),
            enumerate_vertices_with(&g, Traversal::Full).unwrap()
        );
    }
}

#[test]
fn full_dimensional_bound_is_tight_for_cubes() {
    for d in 1..=4 {
        let gens = (0..d)
            .map(|i| {
                let mut c = vec![0; d];
                c[i] = 1;
                p(&c)
            })
            .collect();
        let g = GeneratorSet::from_vectors(d, gens).unwrap();
        assert_eq!(points(&g).len(), 1 << d);
    }
}

#[test]
fn ten_generators_in_four_dimensions() {
    let rows: [[i64; 4]; 10] = [
        [1, 0, 0, 0], [0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0],
        [1, 0, 1, 0], [1, 0, 0, 1], [0, 1, 1, 0], [0, 1, 0, 1], [1, 1, 1, 1],
    ];
    let g = GeneratorSet::from_vectors(4, rows.iter().map(|r| p(r)).collect()).unwrap();
    let got = points(&g);
    let scanned: BTreeSet<RationalPoint> = (0u64..1 << 10)
        .map(|m| Subset::from_mask(10, m))
        .filter(|x| is_zonotope_vertex(&g, x).unwrap())
        .map(|x| g.subset_sum(&x))
        .collect();
    assert_eq!(got, scanned.into_iter().collect::<Vec<_>>());
}
