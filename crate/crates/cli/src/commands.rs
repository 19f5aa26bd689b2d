use std::io::Write;

use anyhow::{bail, Context, Result};
use clap::ValueEnum;
use serde::Serialize;

use fibcube_core::formulas::{cube_poly, distance_cube_poly, maximal_cube_poly, weight_poly};
use fibcube_core::numbers::{diagonal_sum, PNomialTable, SequenceSpec};
use fibcube_core::oracle::{
    cube_counts, distance_classified_counts, enumerate_induced_cubes, enumerate_maximal_cubes,
    maximal_counts,
};
use fibcube_core::series::catalog;
use fibcube_core::{
    BiPolynomial, BigInt, Family, FamilySpec, GfName, Graph, InducedHypercube, IntPolynomial,
};

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Csv,
    Json,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum FamilyArg {
    Hypercube,
    #[value(name = "pth_order")]
    PthOrder,
    #[value(name = "p_cube")]
    PCube,
}

impl FamilyArg {
    pub fn spec(&self, n: usize, p: Option<usize>) -> Result<FamilySpec> {
        let family = match self {
            FamilyArg::Hypercube => return Ok(FamilySpec::hypercube(n)),
            FamilyArg::PthOrder => Family::PthOrder,
            FamilyArg::PCube => Family::PCube,
        };
        let p = p.context("--p is required for this family")?;
        Ok(FamilySpec::new(family, n, p)?)
    }
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum TableKind {
    Pnomial,
    #[value(name = "fib_p")]
    FibP,
    #[value(name = "fib_pth_order")]
    FibPthOrder,
    Weights,
}

/// Triangle rows `b = 0..=rows`, sequence terms `0..=n`, or weight
/// distributions of `Γ_m^(p)` for `m = 0..=n`.
pub fn table(
    out: &mut dyn Write,
    kind: TableKind,
    p: usize,
    rows: usize,
    n: usize,
    diagonals: bool,
    format: Format,
) -> Result<()> {
    if format == Format::Json {
        bail!("tables are available as text or csv");
    }
    let csv = format == Format::Csv;
    match kind {
        TableKind::Pnomial => {
            let mut t = PNomialTable::new(p)?;
            if csv {
                writeln!(out, "b,a,value")?;
            }
            for b in 0..=rows {
                let row = t.row(b);
                if csv {
                    for (a, v) in row.iter().enumerate() {
                        writeln!(out, "{b},{a},{v}")?;
                    }
                } else {
                    writeln!(out, "{}", join(row, " "))?;
                }
            }
            if diagonals {
                let sums = (0..=rows)
                    .map(|m| diagonal_sum(m, p))
                    .collect::<fibcube_core::Result<Vec<_>>>()?;
                if csv {
                    writeln!(out, "m,diagonal_sum")?;
                    for (m, s) in sums.iter().enumerate() {
                        writeln!(out, "{m},{s}")?;
                    }
                } else {
                    writeln!(out, "diagonals: {}", join(&sums, " "))?;
                }
            }
        }
        TableKind::FibP | TableKind::FibPthOrder => {
            let spec = if kind == TableKind::FibP {
                SequenceSpec::fib_p(p)?
            } else {
                SequenceSpec::fib_pth_order(p)?
            };
            let terms = spec.terms(n);
            if csv {
                writeln!(out, "n,value")?;
                for (i, v) in terms.iter().enumerate() {
                    writeln!(out, "{i},{v}")?;
                }
            } else {
                writeln!(out, "{}", join(&terms, " "))?;
            }
        }
        TableKind::Weights => {
            if csv {
                writeln!(out, "n,w,count")?;
            }
            for m in 0..=n {
                let w = weight_poly(m, p)?;
                if csv {
                    for (i, c) in w.coeffs().iter().enumerate() {
                        writeln!(out, "{m},{i},{c}")?;
                    }
                } else {
                    writeln!(out, "{m}: {}", join(w.coeffs(), " "))?;
                }
            }
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum PolyKind {
    Weight,
    Cube,
    Distance,
    Maxcube,
}

/// Closed form of the requested polynomial, if one exists for the family.
fn poly_formula(kind: PolyKind, spec: &FamilySpec) -> Result<Option<BiPolynomial>> {
    let (n, p) = (spec.n(), spec.p());
    let poly = match (kind, spec.family()) {
        (PolyKind::Weight, Family::PthOrder) => weight_poly(n, p)?.to_bivariate(),
        (PolyKind::Cube, Family::PthOrder) => cube_poly(n, p)?.to_bivariate(),
        (PolyKind::Distance, Family::PthOrder) => distance_cube_poly(n, p)?,
        (PolyKind::Maxcube, Family::PCube) => maximal_cube_poly(n, p)?.to_bivariate(),
        _ => return Ok(None),
    };
    Ok(Some(poly))
}

fn poly_census(kind: PolyKind, spec: FamilySpec, max_n: usize) -> Result<BiPolynomial> {
    let g = Graph::build_with_cap(spec, max_n)?;
    let from_counts = |c: Vec<usize>| {
        IntPolynomial::new(c.into_iter().map(BigInt::from).collect()).to_bivariate()
    };
    Ok(match kind {
        PolyKind::Weight => from_counts(g.weight_distribution()),
        PolyKind::Cube => from_counts(cube_counts(&g)),
        PolyKind::Maxcube => from_counts(maximal_counts(&g)),
        PolyKind::Distance => {
            let mut d = BiPolynomial::zero();
            for ((k, dist), count) in distance_classified_counts(&g)? {
                d.add_term(k, dist, BigInt::from(count));
            }
            d
        }
    })
}

/// Prints the polynomial. With `oracle`, the census of the built graph is
/// computed as well; returns `false` if it disagrees with the closed form.
pub fn poly(
    out: &mut dyn Write,
    err: &mut dyn Write,
    kind: PolyKind,
    spec: FamilySpec,
    oracle: bool,
    max_n: usize,
) -> Result<bool> {
    let formula = poly_formula(kind, &spec)?;
    if !oracle {
        let Some(formula) = formula else {
            bail!("no closed form for this polynomial on this family; pass --oracle for a census");
        };
        writeln!(out, "{formula}")?;
        return Ok(true);
    }
    let census = poly_census(kind, spec, max_n)?;
    match formula {
        None => {
            writeln!(out, "{census}")?;
            Ok(true)
        }
        Some(formula) => {
            writeln!(out, "{formula}")?;
            if formula != census {
                writeln!(err, "oracle mismatch: census gives {census}")?;
            }
            Ok(formula == census)
        }
    }
}

/// Expands a catalog GF to order `order`. Integer series print as a comma
/// separated list, polynomial series as `n; coefficient` rows.
pub fn gf(out: &mut dyn Write, name: GfName, p: usize, order: usize, format: Format) -> Result<()> {
    let series = catalog(name, p)?.expand(order);
    let integers: Option<Vec<BigInt>> = series.iter().map(BiPolynomial::as_constant).collect();
    match format {
        Format::Text => match &integers {
            Some(values) => writeln!(out, "{}", join(values, ","))?,
            None => {
                for (i, c) in series.iter().enumerate() {
                    writeln!(out, "{i}; {c}")?;
                }
            }
        },
        Format::Csv => {
            writeln!(out, "n,coefficient")?;
            for (i, c) in series.iter().enumerate() {
                writeln!(out, "{i},{c}")?;
            }
        }
        Format::Json => {
            #[derive(Serialize)]
            struct Expansion {
                name: &'static str,
                p: usize,
                order: usize,
                coefficients: Vec<String>,
            }
            let e = Expansion {
                name: name.as_str(),
                p,
                order,
                coefficients: series.iter().map(|c| c.to_string()).collect(),
            };
            writeln!(out, "{}", serde_json::to_string_pretty(&e)?)?;
        }
    }
    Ok(())
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum CensusKind {
    Cubes,
    Maximal,
    Graph,
}

#[derive(Serialize)]
struct CubeRecord {
    bottom: String,
    top: String,
    k: usize,
    d: usize,
}

impl From<&InducedHypercube> for CubeRecord {
    fn from(c: &InducedHypercube) -> Self {
        CubeRecord {
            bottom: c.bottom().to_string(),
            top: c.top().to_string(),
            k: c.dimension(),
            d: c.distance(),
        }
    }
}

#[derive(Serialize)]
struct GraphDump {
    n: usize,
    order: usize,
    size: usize,
    vertices: Vec<String>,
    edges: Vec<(usize, usize)>,
}

/// JSON dump of the induced cubes, the maximal cubes or the graph itself.
/// Cube records are sorted by `(bottom, top)`.
pub fn census(out: &mut dyn Write, kind: CensusKind, spec: FamilySpec, max_n: usize) -> Result<()> {
    let g = Graph::build_with_cap(spec, max_n)?;
    let json = match kind {
        CensusKind::Cubes => {
            let records: Vec<CubeRecord> =
                enumerate_induced_cubes(&g).iter().map(Into::into).collect();
            serde_json::to_string_pretty(&records)?
        }
        CensusKind::Maximal => {
            let records: Vec<CubeRecord> =
                enumerate_maximal_cubes(&g).iter().map(Into::into).collect();
            serde_json::to_string_pretty(&records)?
        }
        CensusKind::Graph => serde_json::to_string_pretty(&GraphDump {
            n: g.n(),
            order: g.order(),
            size: g.size(),
            vertices: g.vertices().map(|v| v.to_string()).collect(),
            edges: g.edges(),
        })?,
    };
    writeln!(out, "{json}")?;
    Ok(())
}

fn join<T: ToString>(items: &[T], sep: &str) -> String {
    items
        .iter()
        .map(|s| s.to_string())
        .collect::<Vec<_>>()
        .join(sep)
}
