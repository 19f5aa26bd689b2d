//! Oracle-vs-formula verification suites.
//!
//! Each suite runs independently per `(n, p)` instance. Instances are
//! farmed out to a rayon pool and the results are collected back in
//! `(n, p)` order, so reports do not depend on scheduling.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;

use anyhow::{bail, Result};
use clap::ValueEnum;
use rayon::prelude::*;

use fibcube_core::formulas::{
    c_k, cube_poly, distance_cube_poly, h_k_formula, higher_order_string_to_top, max_weight,
    maximal_cube_poly, maximal_cube_poly_direct, maximal_cube_polys_recurrence,
    maximal_top_vertices, top_to_higher_order_string, weight_poly,
};
use fibcube_core::graphs::HARD_MAX_N;
use fibcube_core::numbers::{
    compositions_total, enumerate_compositions, fib_p, fib_pth_order, pnomial,
};
use fibcube_core::oracle::{distance_classified_counts, enumerate_maximal_cubes};
use fibcube_core::series::{c_k_gf_via_derivative, catalog, maxcube_auxiliary};
use fibcube_core::strings::{composition_to_string, enumerate_family, string_to_composition};
use fibcube_core::{BiPolynomial, BigInt, BitString, FamilySpec, GfName, Graph, IntPolynomial};

use crate::range::ParamRange;
use crate::report::{Check, CheckReport, Instance, Params};

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, ValueEnum)]
pub enum Suite {
    Weights,
    Orders,
    Edges,
    Cubes,
    DistanceCubes,
    Maxcubes,
    GfConsistency,
    Bijections,
    All,
}

impl Suite {
    /// Every suite except `All`, in report order.
    pub const CONCRETE: [Suite; 8] = [
        Suite::Weights,
        Suite::Orders,
        Suite::Edges,
        Suite::Cubes,
        Suite::DistanceCubes,
        Suite::Maxcubes,
        Suite::GfConsistency,
        Suite::Bijections,
    ];

    pub fn name(&self) -> &'static str {
        match self {
            Suite::Weights => "weights",
            Suite::Orders => "orders",
            Suite::Edges => "edges",
            Suite::Cubes => "cubes",
            Suite::DistanceCubes => "distance-cubes",
            Suite::Maxcubes => "maxcubes",
            Suite::GfConsistency => "gf-consistency",
            Suite::Bijections => "bijections",
            Suite::All => "all",
        }
    }

    /// Smallest `p` the suite accepts. Suites over `Γ_n^(p)` need `p >= 2`;
    /// the ones that also cover Fibonacci p-cubes start at 1.
    pub fn min_p(&self) -> usize {
        match self {
            Suite::Orders | Suite::Maxcubes | Suite::GfConsistency | Suite::Bijections => 1,
            Suite::All => 1,
            _ => 2,
        }
    }

    /// Whether the suite builds explicit graphs and is therefore subject
    /// to the dimension cap.
    pub fn builds_graphs(&self) -> bool {
        !matches!(self, Suite::GfConsistency)
    }

    fn run_instance(&self, n: usize, p: usize, max_n: usize) -> Result<Vec<Check>> {
        let at = Instance::new(n, p);
        match self {
            Suite::Weights => weights(at, max_n),
            Suite::Orders => orders(at, max_n),
            Suite::Edges => edges(at, max_n),
            Suite::Cubes => cubes(at, max_n),
            Suite::DistanceCubes => distance_cubes(at, max_n),
            Suite::Maxcubes => maxcubes(at, max_n),
            Suite::GfConsistency => gf_consistency(at),
            Suite::Bijections => bijections(at, max_n),
            Suite::All => unreachable!("`all` is expanded before running"),
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

#[derive(Debug, Clone)]
pub struct VerifyOptions {
    pub suite: Suite,
    pub n: ParamRange,
    pub p: ParamRange,
    pub max_n: usize,
    /// Worker threads; `None` lets rayon decide.
    pub jobs: Option<usize>,
}

/// Runs the selected suite over the `(n, p)` grid.
///
/// For `all`, each suite runs on the part of the `p` range it supports and
/// check names are prefixed with the suite name.
pub fn run_verify(opts: &VerifyOptions) -> Result<CheckReport> {
    let cap = opts.max_n.min(HARD_MAX_N);
    let plan: Vec<(Suite, ParamRange)> = if opts.suite == Suite::All {
        Suite::CONCRETE
            .iter()
            .filter_map(|s| opts.p.at_least(s.min_p()).map(|p| (*s, p)))
            .collect()
    } else {
        if opts.p.start < opts.suite.min_p() {
            bail!(
                "suite {} needs p >= {} (got {})",
                opts.suite,
                opts.suite.min_p(),
                opts.p
            );
        }
        vec![(opts.suite, opts.p)]
    };
    if opts.n.end > cap && plan.iter().any(|(s, _)| s.builds_graphs()) {
        bail!(
            "n = {} exceeds the dimension cap {cap}; raise it with --max-n or FIBCUBE_MAX_N (hard limit {HARD_MAX_N})",
            opts.n.end
        );
    }

    let mut tasks = Vec::new();
    for &(suite, p_range) in &plan {
        for n in opts.n.iter() {
            for p in p_range.iter() {
                tasks.push((suite, n, p));
            }
        }
    }
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(opts.jobs.unwrap_or(0))
        .build()?;
    let results: Vec<Vec<Check>> = pool.install(|| {
        tasks
            .par_iter()
            .map(|&(suite, n, p)| {
                let mut checks = suite.run_instance(n, p, cap)?;
                if opts.suite == Suite::All {
                    for c in &mut checks {
                        c.name = format!("{}.{}", suite, c.name);
                    }
                }
                Ok(checks)
            })
            .collect::<Result<_>>()
    })?;

    let params = Params {
        n: opts.n,
        p: opts.p,
        max_n: cap,
    };
    Ok(CheckReport::new(
        opts.suite.name(),
        params,
        results.into_iter().flatten().collect(),
    ))
}

fn build(spec: FamilySpec, max_n: usize) -> Result<Graph> {
    Ok(Graph::build_with_cap(spec, max_n)?)
}

fn poly_from_counts(counts: impl IntoIterator<Item = usize>) -> IntPolynomial {
    IntPolynomial::new(counts.into_iter().map(BigInt::from).collect())
}

fn join<T: ToString>(items: impl IntoIterator<Item = T>) -> String {
    items
        .into_iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(" ")
}

fn weights(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let g = build(FamilySpec::pth_order(n, p)?, max_n)?;
    let census = poly_from_counts(g.weight_distribution());
    Ok(vec![
        Check::compare("order", at, fib_pth_order(n + p, p)?, g.order()),
        Check::compare("weight_distribution", at, weight_poly(n, p)?, &census),
        Check::compare(
            "max_weight",
            at,
            max_weight(n, p)?,
            census.degree().unwrap_or(0),
        ),
    ])
}

fn orders(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let mut checks = Vec::new();
    if p >= 2 {
        let g = build(FamilySpec::pth_order(n, p)?, max_n)?;
        checks.push(Check::compare(
            "pth_order_order",
            at,
            fib_pth_order(n + p, p)?,
            g.order(),
        ));
    }
    let g = build(FamilySpec::p_cube(n, p)?, max_n)?;
    checks.push(Check::compare(
        "p_cube_order",
        at,
        fib_p(n + p + 1, p)?,
        g.order(),
    ));
    Ok(checks)
}

fn edges(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let first = n.saturating_sub(p);
    let graphs = (first..=n)
        .map(|m| build(FamilySpec::pth_order(m, p)?, max_n))
        .collect::<Result<Vec<_>>>()?;
    let g = graphs.last().expect("at least one graph");
    let sizes = catalog(GfName::SizePthOrder, p)?
        .expand_integers(n)
        .expect("integer series");
    let mut checks = vec![Check::compare("size_gf", at, &sizes[n], g.size())];
    if n >= p {
        // graphs[p - i] is Γ_(n-i)
        let recurrence: usize = (1..=p).map(|i| graphs[p - i].size()).sum::<usize>()
            + (2..=p)
                .map(|i| (i - 1) * graphs[p - i].order())
                .sum::<usize>();
        checks.push(Check::compare("edge_recurrence", at, recurrence, g.size()));
    }
    Ok(checks)
}

fn cubes(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let g = build(FamilySpec::pth_order(n, p)?, max_n)?;
    let census = poly_from_counts(fibcube_core::oracle::cube_counts(&g));
    Ok(vec![Check::compare(
        "cube_poly",
        at,
        cube_poly(n, p)?,
        census,
    )])
}

fn distance_cubes(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let g = build(FamilySpec::pth_order(n, p)?, max_n)?;
    let kd = distance_classified_counts(&g)?;
    let mut d_census = BiPolynomial::zero();
    let mut by_k: BTreeMap<usize, usize> = BTreeMap::new();
    for (&(k, d), &count) in &kd {
        d_census.add_term(k, d, BigInt::from(count));
        *by_k.entry(k).or_default() += count;
    }
    let c_census = poly_from_counts((0..=n).map(|k| by_k.get(&k).copied().unwrap_or(0)));
    let w_census = poly_from_counts(g.weight_distribution());
    Ok(vec![
        Check::compare(
            "distance_cube_poly",
            at,
            distance_cube_poly(n, p)?,
            &d_census,
        ),
        Check::compare(
            "daisy_cube",
            at,
            w_census.substitute_shift(&BigInt::from(1)),
            &c_census,
        ),
        Check::compare("daisy_distance", at, w_census.substitute_xq(), &d_census),
        Check::compare(
            "distance_symmetry",
            at,
            d_census.swap_variables(),
            &d_census,
        ),
    ])
}

fn maxcubes(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let g = build(FamilySpec::p_cube(n, p)?, max_n)?;
    let maximal = enumerate_maximal_cubes(&g);
    let mut counts = vec![0usize; n + 1];
    let mut tops: Vec<BTreeSet<BitString>> = vec![BTreeSet::new(); n + 1];
    for cube in &maximal {
        counts[cube.dimension()] += 1;
        tops[cube.dimension()].insert(cube.top().clone());
    }
    let zero = BitString::zeros(n);
    let off_zero = maximal.iter().filter(|c| c.bottom() != &zero).count();
    let mut checks = vec![
        Check::compare(
            "maximal_cube_poly",
            at,
            maximal_cube_poly(n, p)?,
            poly_from_counts(counts.iter().copied()),
        ),
        Check::compare("nonzero_bottoms", at, 0, off_zero),
    ];
    for k in 1..=n {
        let at = at.with_k(k);
        checks.push(Check::compare("h_k", at, h_k_formula(n, p, k)?, counts[k]));
        checks.push(Check::compare(
            "top_vertices",
            at,
            join(maximal_top_vertices(n, p, k)?),
            join(&tops[k]),
        ));
    }
    Ok(checks)
}

fn gf_consistency(at: Instance) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    let mut checks = Vec::new();

    let fib = catalog(GfName::FibP, p)?
        .expand_integers(n)
        .expect("integer series");
    checks.push(Check::compare("fib_p_gf", at, fib_p(n, p)?, &fib[n]));

    let h = catalog(GfName::MaxCubePoly, p)?.expand(n);
    let h_n = h[n].to_univariate_x().expect("series in x only");
    checks.push(Check::compare(
        "maxcube_gf_direct",
        at,
        maximal_cube_poly_direct(n, p)?,
        &h_n,
    ));
    let recurrence = maximal_cube_polys_recurrence(n, p)?;
    checks.push(Check::compare(
        "maxcube_gf_recurrence",
        at,
        &recurrence[n],
        &h_n,
    ));

    // coefficient of t^n in t^p H = A - (1 + ... + t^(p-1))
    let a = maxcube_auxiliary(p)?.expand(n);
    let lhs = if n >= p {
        h[n - p].clone()
    } else {
        BiPolynomial::zero()
    };
    let rhs = if n < p {
        &a[n] - &BiPolynomial::one()
    } else {
        a[n].clone()
    };
    checks.push(Check::compare("auxiliary_identity", at, rhs, lhs));

    if p >= 2 {
        let series = |name| -> Result<Vec<BiPolynomial>> { Ok(catalog(name, p)?.expand(n)) };
        let int_at = |s: &[BiPolynomial]| s[n].as_constant().expect("integer series");
        let order = series(GfName::OrderPthOrder)?;
        let size = series(GfName::SizePthOrder)?;
        let fib_pth = series(GfName::FibPthOrder)?;
        let weight = series(GfName::WeightPoly)?;
        let cube = series(GfName::CubePoly)?;
        let distance = series(GfName::DistanceCubePoly)?;
        let derivative = c_k_gf_via_derivative(p, 1, n)?;
        checks.extend([
            Check::compare("order_gf", at, fib_pth_order(n + p, p)?, int_at(&order)),
            Check::compare(
                "fib_pth_order_gf",
                at,
                fib_pth_order(n, p)?,
                int_at(&fib_pth),
            ),
            Check::compare("size_gf", at, c_k(n, p, 1)?, int_at(&size)),
            Check::compare("size_derivative", at, int_at(&size), &derivative[n]),
            Check::compare(
                "weight_gf",
                at,
                weight_poly(n, p)?.to_bivariate(),
                &weight[n],
            ),
            Check::compare("cube_gf", at, cube_poly(n, p)?.to_bivariate(), &cube[n]),
            Check::compare("distance_gf", at, distance_cube_poly(n, p)?, &distance[n]),
            Check::compare(
                "shift_substitution",
                at,
                &cube[n],
                weight[n]
                    .to_univariate_x()
                    .expect("series in x only")
                    .substitute_shift(&BigInt::from(1))
                    .to_bivariate(),
            ),
        ]);
    }
    Ok(checks)
}

fn bijections(at: Instance, max_n: usize) -> Result<Vec<Check>> {
    let (n, p) = (at.n, at.p);
    if n > max_n {
        bail!("n = {n} exceeds the dimension cap {max_n}");
    }
    let mut checks = Vec::new();
    if p >= 2 {
        let strings = enumerate_family(&FamilySpec::pth_order(n, p)?)?;
        let mut images = BTreeSet::new();
        let mut ok = 0usize;
        for u in &strings {
            let parts = string_to_composition(u, p)?;
            let valid = parts.iter().sum::<usize>() == n + 1
                && parts.len() == n + 1 - u.weight()
                && parts.iter().all(|&x| (1..=p).contains(&x));
            if valid && composition_to_string(&parts, p)? == *u {
                ok += 1;
            }
            images.insert(parts);
        }
        let total = compositions_total(n + 1, p)?;
        checks.push(Check::compare(
            "string_composition_round_trip",
            at,
            strings.len(),
            ok,
        ));
        checks.push(Check::compare(
            "composition_count",
            at,
            &total,
            images.len(),
        ));

        let mut back = 0usize;
        let mut visited = 0usize;
        for k in 1..=n + 1 {
            for parts in enumerate_compositions(n + 1, k, p) {
                visited += 1;
                let u = composition_to_string(&parts, p)?;
                if u.len() == n && u.is_pth_order(p) && string_to_composition(&u, p)? == parts {
                    back += 1;
                }
            }
        }
        checks.push(Check::compare(
            "composition_string_round_trip",
            at,
            visited,
            back,
        ));
    }

    for k in 1..=n {
        let at = at.with_k(k);
        let tops = maximal_top_vertices(n, p, k)?;
        let mut images = BTreeSet::new();
        let mut ok = 0usize;
        for t in &tops {
            let s = top_to_higher_order_string(t, p)?;
            if s.is_pth_order(p + 1) && higher_order_string_to_top(&s, p)? == *t {
                ok += 1;
            }
            images.insert(s);
        }
        checks.push(Check::compare("top_string_round_trip", at, tops.len(), ok));
        if n + p >= (p + 1) * k {
            let weight = n + p - (p + 1) * k;
            let expected = pnomial(k + 1, weight as i64, p + 1)?;
            checks.push(Check::compare(
                "top_string_image_count",
                at,
                expected,
                images.len(),
            ));
        }
    }
    Ok(checks)
}
