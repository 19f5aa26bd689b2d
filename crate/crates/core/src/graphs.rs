//! Explicit hypercubes, p-th order Fibonacci cubes and Fibonacci p-cubes.

use alloc::vec;
use alloc::vec::Vec;

use hashbrown::HashMap;

use crate::error::{Error, Result};
use crate::strings::{self, BitString};

/// Default cap on the dimension of explicitly built graphs.
pub const DEFAULT_MAX_N: usize = 24;

/// Hard ceiling: vertices are packed into one machine word.
pub const HARD_MAX_N: usize = 40;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Family {
    Hypercube,
    /// Strings without `p` consecutive ones.
    PthOrder,
    /// Strings whose ones are separated by at least `p` zeros.
    PCube,
}

/// A graph family together with its dimension `n` and parameter `p`.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct FamilySpec {
    family: Family,
    n: usize,
    p: usize,
}

impl FamilySpec {
    pub fn hypercube(n: usize) -> Self {
        FamilySpec {
            family: Family::Hypercube,
            n,
            p: 0,
        }
    }

    pub fn pth_order(n: usize, p: usize) -> Result<Self> {
        if p < 2 {
            return Err(Error::domain("p", p, "p >= 2"));
        }
        Ok(FamilySpec {
            family: Family::PthOrder,
            n,
            p,
        })
    }

    pub fn p_cube(n: usize, p: usize) -> Result<Self> {
        if p < 1 {
            return Err(Error::domain("p", p, "p >= 1"));
        }
        Ok(FamilySpec {
            family: Family::PCube,
            n,
            p,
        })
    }

    pub fn new(family: Family, n: usize, p: usize) -> Result<Self> {
        match family {
            Family::Hypercube => Ok(Self::hypercube(n)),
            Family::PthOrder => Self::pth_order(n, p),
            Family::PCube => Self::p_cube(n, p),
        }
    }

    pub fn family(&self) -> Family {
        self.family
    }

    pub fn n(&self) -> usize {
        self.n
    }

    /// Zero for hypercubes.
    pub fn p(&self) -> usize {
        self.p
    }

    /// Membership of the packed string `mask` (length `n`, `n <= 64`).
    pub fn contains_mask(&self, mask: u64) -> bool {
        if self.n < 64 && mask >> self.n != 0 {
            return false;
        }
        match self.family {
            Family::Hypercube => true,
            Family::PthOrder => {
                // survives iff some run of ones has length >= p
                let mut runs = mask;
                for _ in 1..self.p {
                    runs &= runs >> 1;
                }
                runs == 0
            }
            Family::PCube => (1..=self.p).all(|shift| shift >= 64 || mask & (mask >> shift) == 0),
        }
    }

    pub fn contains(&self, u: &BitString) -> bool {
        u.len() == self.n
            && match self.family {
                Family::Hypercube => true,
                Family::PthOrder => u.is_pth_order(self.p),
                Family::PCube => u.is_p_string(self.p),
            }
    }
}

/// Subgraph of `Q_n` induced by a string family.
///
/// Vertices are indexed by their position in lexicographic order and are
/// stored packed; adjacency is kept in compressed sparse rows.
#[derive(Debug, Clone)]
pub struct Graph {
    spec: FamilySpec,
    vertices: Vec<u64>,
    index: HashMap<u64, u32>,
    offsets: Vec<usize>,
    targets: Vec<u32>,
}

impl Graph {
    /// Builds the graph with the default dimension cap.
    pub fn build(spec: FamilySpec) -> Result<Self> {
        Self::build_with_cap(spec, DEFAULT_MAX_N)
    }

    pub fn build_with_cap(spec: FamilySpec, max_n: usize) -> Result<Self> {
        let cap = max_n.min(HARD_MAX_N);
        if spec.n > cap {
            return Err(Error::DimensionCap { n: spec.n, cap });
        }
        let vertices = strings::family_masks(&spec)?;
        let index: HashMap<u64, u32> = vertices
            .iter()
            .enumerate()
            .map(|(i, &m)| (m, i as u32))
            .collect();
        let mut offsets = Vec::with_capacity(vertices.len() + 1);
        let mut targets = Vec::new();
        offsets.push(0);
        for &v in &vertices {
            let start = targets.len();
            for dir in 0..spec.n {
                if let Some(&j) = index.get(&(v ^ (1u64 << dir))) {
                    targets.push(j);
                }
            }
            targets[start..].sort_unstable();
            offsets.push(targets.len());
        }
        Ok(Graph {
            spec,
            vertices,
            index,
            offsets,
            targets,
        })
    }

    pub fn spec(&self) -> &FamilySpec {
        &self.spec
    }

    pub fn n(&self) -> usize {
        self.spec.n
    }

    /// Number of vertices.
    pub fn order(&self) -> usize {
        self.vertices.len()
    }

    /// Number of edges.
    pub fn size(&self) -> usize {
        self.targets.len() / 2
    }

    /// Packed vertices in lexicographic order.
    pub fn masks(&self) -> &[u64] {
        &self.vertices
    }

    pub fn vertex(&self, i: usize) -> BitString {
        BitString::from_mask(self.vertices[i], self.spec.n)
    }

    pub fn vertices(&self) -> impl Iterator<Item = BitString> + '_ {
        (0..self.order()).map(|i| self.vertex(i))
    }

    pub fn index_of_mask(&self, mask: u64) -> Option<usize> {
        self.index.get(&mask).map(|&i| i as usize)
    }

    pub fn index_of(&self, u: &BitString) -> Option<usize> {
        if u.len() != self.spec.n {
            return None;
        }
        self.index_of_mask(u.as_mask()?)
    }

    pub fn contains_mask(&self, mask: u64) -> bool {
        self.index.contains_key(&mask)
    }

    /// Sorted neighbor indices of vertex `i`.
    pub fn neighbors(&self, i: usize) -> &[u32] {
        &self.targets[self.offsets[i]..self.offsets[i + 1]]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.offsets[i + 1] - self.offsets[i]
    }

    /// Edges as sorted index pairs `(i, j)` with `i < j`.
    pub fn edges(&self) -> Vec<(usize, usize)> {
        let mut out = Vec::with_capacity(self.size());
        for i in 0..self.order() {
            for &j in self.neighbors(i) {
                if (j as usize) > i {
                    out.push((i, j as usize));
                }
            }
        }
        out
    }

    /// Number of vertices of each Hamming weight, indexed by weight.
    pub fn weight_distribution(&self) -> Vec<usize> {
        let mut census = vec![0usize; self.spec.n + 1];
        for &v in &self.vertices {
            census[v.count_ones() as usize] += 1;
        }
        while census.len() > 1 && census.last() == Some(&0) {
            census.pop();
        }
        census
    }

    /// Splits a p-th order Fibonacci cube with `n >= p` into the blocks
    /// `1^(i-1) 0 F_(n-i)` for `i = 1..=p` and checks the structure of each
    /// block and of the edges between blocks.
    pub fn fundamental_decomposition(&self) -> Result<Decomposition> {
        let (n, p) = (self.spec.n, self.spec.p);
        if self.spec.family != Family::PthOrder || n < p {
            return Err(Error::Precondition(
                "fundamental decomposition needs a p-th order Fibonacci cube with n >= p",
            ));
        }
        let block_of = |v: u64| -> usize {
            // leading ones before the first zero, plus one
            let leading = (!v << (64 - n)).leading_zeros() as usize;
            leading.min(n) + 1
        };

        let mut members: Vec<Vec<u32>> = vec![Vec::new(); p];
        for (idx, &v) in self.vertices.iter().enumerate() {
            members[block_of(v) - 1].push(idx as u32);
        }

        let mut blocks = Vec::with_capacity(p);
        for (slot, verts) in members.iter().enumerate() {
            let i = slot + 1;
            let suffix_len = n - i;
            let suffix_mask = if suffix_len == 0 {
                0
            } else {
                (1u64 << suffix_len) - 1
            };
            let suffixes: Vec<u64> = verts
                .iter()
                .map(|&idx| self.vertices[idx as usize] & suffix_mask)
                .collect();
            let internal_edges = verts
                .iter()
                .map(|&idx| {
                    self.neighbors(idx as usize)
                        .iter()
                        .filter(|&&j| block_of(self.vertices[j as usize]) == i)
                        .count()
                })
                .sum::<usize>()
                / 2;
            let smaller = Graph::build_with_cap(FamilySpec::pth_order(suffix_len, p)?, n)?;
            let isomorphic_by_suffix =
                suffixes == smaller.vertices && internal_edges == smaller.size();
            blocks.push(Block {
                index: i,
                vertices: verts.clone(),
                internal_edges,
                isomorphic_by_suffix,
            });
        }

        let mut matchings = Vec::new();
        for i in 2..=p {
            for j in 1..i {
                // Flipping coordinate j of 1^(i-1)0x gives 1^(j-1)01^(i-j-1)0x.
                let bit = 1u64 << (n - j);
                let predicted = members[i - 1]
                    .iter()
                    .filter(|&&idx| {
                        self.index_of_mask(self.vertices[idx as usize] ^ bit)
                            .is_some_and(|t| block_of(self.vertices[t]) == j)
                    })
                    .count();
                let edges = members[i - 1]
                    .iter()
                    .map(|&idx| {
                        self.neighbors(idx as usize)
                            .iter()
                            .filter(|&&t| block_of(self.vertices[t as usize]) == j)
                            .count()
                    })
                    .sum::<usize>();
                matchings.push(Matching {
                    upper: i,
                    lower: j,
                    edges,
                    saturates_upper: predicted == members[i - 1].len() && edges == predicted,
                });
            }
        }
        Ok(Decomposition { blocks, matchings })
    }
}

/// One block `1^(i-1) 0 F_(n-i)` of the fundamental decomposition.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Block {
    /// `i` in `1..=p`.
    pub index: usize,
    pub vertices: Vec<u32>,
    pub internal_edges: usize,
    /// Stripping the prefix maps the block onto `Γ_(n-i)` with the same
    /// edge count.
    pub isomorphic_by_suffix: bool,
}

/// Edges between block `upper` and block `lower < upper`.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Matching {
    pub upper: usize,
    pub lower: usize,
    pub edges: usize,
    /// Every vertex of the upper block has exactly one neighbor in the lower
    /// block, the predicted one.
    pub saturates_upper: bool,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Decomposition {
    pub blocks: Vec<Block>,
    pub matchings: Vec<Matching>,
}

impl Decomposition {
    pub fn block_sizes(&self) -> Vec<usize> {
        self.blocks.iter().map(|b| b.vertices.len()).collect()
    }

    pub fn cross_edges(&self) -> usize {
        self.matchings.iter().map(|m| m.edges).sum()
    }

    pub fn is_consistent(&self) -> bool {
        self.blocks.iter().all(|b| b.isomorphic_by_suffix)
            && self.matchings.iter().all(|m| m.saturates_upper)
    }
}
