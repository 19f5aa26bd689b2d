use std::collections::BTreeSet;

use fibcube_core::formulas::{
    c_kd, cube_poly, distance_cube_poly, h_k_formula, maximal_cube_poly, maximal_top_vertices,
    weight_poly,
};
use fibcube_core::graphs::{FamilySpec, Graph};
use fibcube_core::numbers::{fib_p, fib_pth_order};
use fibcube_core::oracle::{cube_counts, distance_classified_counts, enumerate_maximal_cubes};
use fibcube_core::poly::IntPolynomial;
use fibcube_core::series::{catalog, GfName};
use fibcube_core::{BigInt, BitString};

fn poly_from_counts(counts: &[usize]) -> IntPolynomial {
    IntPolynomial::new(counts.iter().map(|&c| BigInt::from(c)).collect())
}

#[test]
fn pth_order_cubes_match_closed_forms() {
    for p in 2..=4 {
        for n in 0..=10 {
            let g = Graph::build(FamilySpec::pth_order(n, p).unwrap()).unwrap();
            assert_eq!(BigInt::from(g.order()), fib_pth_order(n + p, p).unwrap());
            assert_eq!(
                poly_from_counts(&g.weight_distribution()),
                weight_poly(n, p).unwrap()
            );
            assert_eq!(poly_from_counts(&cube_counts(&g)), cube_poly(n, p).unwrap());

            let kd = distance_classified_counts(&g).unwrap();
            let d = distance_cube_poly(n, p).unwrap();
            for k in 0..=n {
                for dist in 0..=n - k {
                    let census = kd.get(&(k, dist)).copied().unwrap_or(0);
                    assert_eq!(BigInt::from(census), c_kd(n, p, k, dist).unwrap());
                    assert_eq!(
                        BigInt::from(census),
                        d.coeff(k, dist),
                        "n={n} p={p} k={k} d={dist}"
                    );
                }
            }
        }
    }
}

#[test]
fn p_cube_maximal_cubes_match_closed_forms() {
    for p in 1..=3 {
        for n in 0..=11 {
            let g = Graph::build(FamilySpec::p_cube(n, p).unwrap()).unwrap();
            assert_eq!(BigInt::from(g.order()), fib_p(n + p + 1, p).unwrap());

            let maximal = enumerate_maximal_cubes(&g);
            assert!(maximal.iter().all(|c| c.bottom() == &BitString::zeros(n)));
            let mut counts = vec![0usize; n + 1];
            for c in &maximal {
                counts[c.dimension()] += 1;
            }
            assert_eq!(poly_from_counts(&counts), maximal_cube_poly(n, p).unwrap());
            for (k, &count) in counts.iter().enumerate().skip(1) {
                assert_eq!(BigInt::from(count), h_k_formula(n, p, k).unwrap());
                let tops: BTreeSet<BitString> = maximal
                    .iter()
                    .filter(|c| c.dimension() == k)
                    .map(|c| c.top().clone())
                    .collect();
                let formula: BTreeSet<BitString> =
                    maximal_top_vertices(n, p, k).unwrap().into_iter().collect();
                assert_eq!(tops, formula, "n={n} p={p} k={k}");
            }
        }
    }
}

#[test]
fn size_series_matches_built_graphs() {
    for p in 2..=4 {
        let sizes = catalog(GfName::SizePthOrder, p)
            .unwrap()
            .expand_integers(12)
            .unwrap();
        for (n, s) in sizes.iter().enumerate() {
            let g = Graph::build(FamilySpec::pth_order(n, p).unwrap()).unwrap();
            assert_eq!(&BigInt::from(g.size()), s);
        }
    }
}
