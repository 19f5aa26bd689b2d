//! Brute-force census of induced hypercubes.
//!
//! An induced `Q_k` of a subgraph of `Q_n` is determined by its bottom and
//! top vertices. The census walks every vertex as a candidate top and grows
//! its support one coordinate at a time among the top's ones, abandoning a
//! support as soon as one of the cube's vertices is missing from the graph.
//! Every later extension of a failed support would contain the same
//! missing vertex.

use alloc::collections::BTreeMap;
use alloc::vec;
use alloc::vec::Vec;

use crate::error::{Error, Result};
use crate::graphs::Graph;
use crate::strings::BitString;

#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct InducedHypercube {
    bottom: BitString,
    top: BitString,
}

impl InducedHypercube {
    /// Pairs `bottom <= top` coordinatewise.
    pub fn new(bottom: BitString, top: BitString) -> Result<Self> {
        if !bottom.is_below(&top) {
            return Err(Error::Precondition("bottom must lie below top"));
        }
        Ok(InducedHypercube { bottom, top })
    }

    fn from_masks(bottom: u64, top: u64, n: usize) -> Self {
        InducedHypercube {
            bottom: BitString::from_mask(bottom, n),
            top: BitString::from_mask(top, n),
        }
    }

    pub fn bottom(&self) -> &BitString {
        &self.bottom
    }

    pub fn top(&self) -> &BitString {
        &self.top
    }

    /// Coordinates (1-based) where the top has a one and the bottom a zero.
    pub fn support(&self) -> Vec<usize> {
        (1..=self.top.len())
            .filter(|&j| self.top.bit(j) && !self.bottom.bit(j))
            .collect()
    }

    pub fn dimension(&self) -> usize {
        self.top.weight() - self.bottom.weight()
    }

    /// Distance of the bottom vertex to `0^n`.
    pub fn distance(&self) -> usize {
        self.bottom.weight()
    }
}

/// Calls `visit(bottom, top)` once for every induced hypercube of `g`,
/// including single vertices. Cubes come grouped by top vertex in
/// lexicographic order.
pub fn for_each_induced_cube<F: FnMut(u64, u64)>(g: &Graph, mut visit: F) {
    let mut cube: Vec<u64> = Vec::new();
    for &top in g.masks() {
        cube.clear();
        cube.push(top);
        extend(g, top, top, &mut cube, &mut visit);
    }
}

// `cube` holds the vertices of the cube with the given top and bottom.
// Coordinates are only added below the lowest bit already removed, so each
// support is generated once.
fn extend<F: FnMut(u64, u64)>(
    g: &Graph,
    top: u64,
    bottom: u64,
    cube: &mut Vec<u64>,
    visit: &mut F,
) {
    visit(bottom, top);
    let removed = top ^ bottom;
    let limit = if removed == 0 {
        64
    } else {
        removed.trailing_zeros()
    };
    let mut candidates = bottom & low_bits(limit);
    while candidates != 0 {
        let bit = candidates & candidates.wrapping_neg();
        candidates ^= bit;
        let size = cube.len();
        if cube[..size].iter().all(|&v| g.contains_mask(v & !bit)) {
            for i in 0..size {
                let v = cube[i] & !bit;
                cube.push(v);
            }
            extend(g, top, bottom & !bit, cube, visit);
            cube.truncate(size);
        }
    }
}

fn low_bits(count: u32) -> u64 {
    if count >= 64 {
        u64::MAX
    } else {
        (1u64 << count) - 1
    }
}

/// Every induced hypercube of `g`, sorted by `(bottom, top)`.
pub fn enumerate_induced_cubes(g: &Graph) -> Vec<InducedHypercube> {
    let mut pairs = Vec::new();
    for_each_induced_cube(g, |b, t| pairs.push((b, t)));
    pairs.sort_unstable();
    pairs
        .into_iter()
        .map(|(b, t)| InducedHypercube::from_masks(b, t, g.n()))
        .collect()
}

/// `c_k(g)` indexed by `k`, without trailing zeros.
pub fn cube_counts(g: &Graph) -> Vec<usize> {
    let mut counts = vec![0usize; g.n() + 1];
    for_each_induced_cube(g, |b, t| counts[(t ^ b).count_ones() as usize] += 1);
    trim(&mut counts);
    counts
}

/// `c_(k,d)(g)`: cubes of dimension `k` whose bottom has weight `d`.
pub fn distance_classified_counts(g: &Graph) -> Result<BTreeMap<(usize, usize), usize>> {
    if !g.contains_mask(0) {
        return Err(Error::Precondition(
            "distance census needs 0^n in the graph",
        ));
    }
    let mut counts = BTreeMap::new();
    for_each_induced_cube(g, |b, t| {
        let key = ((t ^ b).count_ones() as usize, b.count_ones() as usize);
        *counts.entry(key).or_insert(0) += 1;
    });
    Ok(counts)
}

/// Whether the cube `(bottom, top)` of `g` lies in no larger induced cube.
///
/// A coordinate outside the support extends the cube upward when both
/// bottom and top have a zero there and downward when both have a one.
pub fn is_maximal(g: &Graph, bottom: u64, top: u64) -> bool {
    let support = top ^ bottom;
    let vertices = cube_vertices(bottom, support);
    (0..g.n()).all(|dir| {
        let bit = 1u64 << dir;
        support & bit != 0 || !vertices.iter().all(|&v| g.contains_mask(v ^ bit))
    })
}

fn cube_vertices(bottom: u64, support: u64) -> Vec<u64> {
    let mut out = Vec::with_capacity(1 << support.count_ones());
    let mut sub = support;
    loop {
        out.push(bottom | sub);
        if sub == 0 {
            break;
        }
        sub = (sub - 1) & support;
    }
    out
}

/// The maximal induced hypercubes of `g`, sorted by `(bottom, top)`.
pub fn enumerate_maximal_cubes(g: &Graph) -> Vec<InducedHypercube> {
    let mut pairs = Vec::new();
    for_each_induced_cube(g, |b, t| {
        if is_maximal(g, b, t) {
            pairs.push((b, t));
        }
    });
    pairs.sort_unstable();
    pairs
        .into_iter()
        .map(|(b, t)| InducedHypercube::from_masks(b, t, g.n()))
        .collect()
}

/// `h_k(g)` indexed by `k`, without trailing zeros.
pub fn maximal_counts(g: &Graph) -> Vec<usize> {
    let mut counts = vec![0usize; g.n() + 1];
    for cube in enumerate_maximal_cubes(g) {
        counts[cube.dimension()] += 1;
    }
    trim(&mut counts);
    counts
}

fn trim(counts: &mut Vec<usize>) {
    while counts.len() > 1 && counts.last() == Some(&0) {
        counts.pop();
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use alloc::collections::BTreeSet;
    use hashbrown::HashSet;

    use crate::graphs::FamilySpec;

    fn build(spec: FamilySpec) -> Graph {
        Graph::build(spec).unwrap()
    }

    fn bs(s: &str) -> BitString {
        s.parse().unwrap()
    }

    // Independent reference: check every (bottom, top) pair of the graph.
    fn pairwise_census(g: &Graph) -> BTreeSet<(u64, u64)> {
        let mut out = BTreeSet::new();
        for &t in g.masks() {
            for &b in g.masks() {
                if b & !t == 0 && cube_vertices(b, t ^ b).iter().all(|&v| g.contains_mask(v)) {
                    out.insert((b, t));
                }
            }
        }
        out
    }

    #[test]
    fn hypercube_q2() {
        let g = build(FamilySpec::hypercube(2));
        assert_eq!(cube_counts(&g), vec![4, 4, 1]);
        let maximal = enumerate_maximal_cubes(&g);
        assert_eq!(maximal.len(), 1);
        assert_eq!(maximal[0].dimension(), 2);
    }

    #[test]
    fn gamma_3_census() {
        let g = build(FamilySpec::pth_order(3, 2).unwrap());
        assert_eq!(cube_counts(&g), vec![5, 5, 1]);
        let kd = distance_classified_counts(&g).unwrap();
        assert_eq!(kd[&(1, 1)], 2);
        assert_eq!(kd[&(0, 0)], 1);
        assert_eq!(kd.values().sum::<usize>(), 11);
    }

    #[test]
    fn gamma_4_3_census() {
        let g = build(FamilySpec::pth_order(4, 3).unwrap());
        assert_eq!(cube_counts(&g), vec![13, 22, 12, 2]);
    }

    #[test]
    fn matches_pairwise_reference() {
        for spec in [
            FamilySpec::pth_order(7, 3).unwrap(),
            FamilySpec::p_cube(8, 1).unwrap(),
            FamilySpec::pth_order(6, 2).unwrap(),
            FamilySpec::hypercube(5),
        ] {
            let g = build(spec);
            let mut fast = BTreeSet::new();
            for_each_induced_cube(&g, |b, t| assert!(fast.insert((b, t)), "duplicate cube"));
            assert_eq!(fast, pairwise_census(&g), "{spec:?}");
        }
    }

    #[test]
    fn cube_list_is_closed_under_restriction() {
        let g = build(FamilySpec::pth_order(8, 3).unwrap());
        let cubes: HashSet<(u64, u64)> = {
            let mut s = HashSet::new();
            for_each_induced_cube(&g, |b, t| {
                s.insert((b, t));
            });
            s
        };
        for &(b, t) in &cubes {
            let support = t ^ b;
            let mut bits = support;
            while bits != 0 {
                let bit = bits & bits.wrapping_neg();
                bits ^= bit;
                // drop `bit` from the support on either side
                assert!(cubes.contains(&(b, t & !bit)));
                assert!(cubes.contains(&(b | bit, t)));
            }
        }
    }

    #[test]
    fn maximal_examples() {
        let path = build(FamilySpec::pth_order(2, 2).unwrap());
        let m = enumerate_maximal_cubes(&path);
        assert_eq!(m.len(), 2);
        assert!(m.iter().all(|c| c.dimension() == 1));

        let gamma4 = build(FamilySpec::p_cube(4, 1).unwrap());
        let m = enumerate_maximal_cubes(&gamma4);
        let tops: BTreeSet<_> = m.iter().map(|c| c.top().clone()).collect();
        assert_eq!(
            tops,
            [bs("0101"), bs("1001"), bs("1010")].into_iter().collect()
        );
        assert!(m
            .iter()
            .all(|c| c.dimension() == 2 && c.bottom() == &BitString::zeros(4)));

        let q = build(FamilySpec::hypercube(4));
        let m = enumerate_maximal_cubes(&q);
        assert_eq!(m.len(), 1);
        assert_eq!(m[0].top(), &bs("1111"));
        assert_eq!(m[0].bottom(), &bs("0000"));

        let k1 = build(FamilySpec::p_cube(0, 2).unwrap());
        assert_eq!(maximal_counts(&k1), vec![1]);
    }

    #[test]
    fn downward_extension_is_detected() {
        // The edges 01-11 and 10-11 only grow into the square by flipping a
        // coordinate where both ends have a one.
        let q = build(FamilySpec::hypercube(2));
        assert!(!is_maximal(&q, 0b01, 0b11));
        assert!(!is_maximal(&q, 0b10, 0b11));
        assert!(is_maximal(&q, 0b00, 0b11));
    }

    #[test]
    fn cube_accessors() {
        let c = InducedHypercube::new(bs("0100"), bs("1101")).unwrap();
        assert_eq!(c.support(), vec![1, 4]);
        assert_eq!(c.dimension(), 2);
        assert_eq!(c.distance(), 1);
        assert!(InducedHypercube::new(bs("0110"), bs("1100")).is_err());
    }

    #[test]
    fn sorted_unique_output() {
        let g = build(FamilySpec::pth_order(6, 3).unwrap());
        let all = enumerate_induced_cubes(&g);
        assert!(all
            .windows(2)
            .all(|w| (w[0].bottom(), w[0].top()) < (w[1].bottom(), w[1].top())));
        assert!(all
            .iter()
            .all(|c| c.top().hamming_distance(c.bottom()) == Some(c.dimension())));
        assert_eq!(all.len(), cube_counts(&g).iter().sum::<usize>());
    }
}
