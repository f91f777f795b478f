use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::{json, Value};

use permuto::algebra::{Int, Rational};
use permuto::{brion, eulerian, genperm, minkowski, permutohedron, rootpoly, tableaux, weyl};

#[derive(Parser)]
#[command(
    name = "permuto",
    version,
    about = "Exact computations on permutohedra, nestohedra, root polytopes, and weight polytopes"
)]
struct Cli {
    /// Output format
    #[arg(long, global = true, value_enum, default_value_t = Format::Json)]
    format: Format,
    /// Additionally run cross-route consistency checks and report them
    #[arg(long, global = true)]
    verify: bool,
    /// Seed for randomized cross-checks (fixed default for reproducibility)
    #[arg(long, global = true, default_value_t = 20240824)]
    seed: u64,
    /// Lift resource guards where an operation supports it
    #[arg(long, global = true)]
    force: bool,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Volume of the permutohedron with coordinate multiset x
    PermVolume {
        /// Comma-separated rational coordinates, e.g. 2,1,0
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<String>,
    },
    /// Lattice-point count of the permutohedron with integer coordinates x
    PermLattice {
        #[arg(long, value_delimiter = ',', required = true)]
        x: Vec<String>,
    },
    /// Nestohedron data for a graphical building set
    Genperm {
        /// Graph description: path:N, cycle:N, complete:N, or star:N
        #[arg(long)]
        graph: String,
        #[arg(long, value_enum)]
        op: GenpermOp,
    },
    /// Minkowski sums of coordinate simplices
    Minkowski {
        /// JSON file with {"n": ..., "subsets": [[...]], "weights": ["..."]}
        #[arg(long)]
        family: PathBuf,
        #[arg(long, value_enum)]
        op: MinkowskiOp,
        /// Count the trimmed polytope instead of the full one
        #[arg(long)]
        trimmed: bool,
    },
    /// Root polytopes of bipartite graphs
    Rootpoly {
        /// JSON file with {"m": ..., "n": ..., "edges": [[i, j], ...]}
        #[arg(long)]
        graph: PathBuf,
        #[arg(long, value_enum)]
        op: RootpolyOp,
    },
    /// Mixed Eulerian number A_c for a composition of n
    MixedEulerian {
        #[arg(long)]
        n: usize,
        #[arg(long, value_delimiter = ',', required = true)]
        c: Vec<usize>,
    },
    /// Weight-polytope volume for a Cartan matrix
    WeylVolume {
        /// JSON file with {"cartan": [[2,-1],[-1,2]]}
        #[arg(long)]
        cartan: PathBuf,
        /// Fundamental-weight coefficients, e.g. 1,1
        #[arg(long, value_delimiter = ',', required = true)]
        u: Vec<String>,
    },
    /// Vertex-cone summation
    Brion {
        #[command(subcommand)]
        cmd: BrionCmd,
    },
    /// Shifted staircase tableaux
    Tableaux {
        #[command(subcommand)]
        cmd: TableauxCmd,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum GenpermOp {
    /// Generalized Catalan number (number of maximal nested sets)
    Catalan,
    /// f-polynomial coefficients of the nestohedron
    FPoly,
    /// Number of nested sets
    Nested,
    /// Number of vertices (rooted-forest count)
    Vertices,
}

#[derive(Clone, Copy, ValueEnum)]
enum MinkowskiOp {
    Volume,
    Lattice,
    Draconian,
    Duality,
}

#[derive(Clone, Copy, ValueEnum)]
enum RootpolyOp {
    Triangulate,
    Volume,
    Bijection,
}

#[derive(Subcommand)]
enum BrionCmd {
    /// Lattice count from a vertex-cone representation
    Count {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Volume from a vertex-cone representation
    Volume {
        #[arg(long)]
        rep: PathBuf,
    },
    /// Todd-operator lattice count for a simplex family
    Todd {
        #[arg(long)]
        family: PathBuf,
    },
}

#[derive(Subcommand)]
enum TableauxCmd {
    /// Diagonal-vector census for the staircase of order n
    Diagonals {
        #[arg(long)]
        n: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(value) => {
            emit(cli.format, &value);
            ExitCode::SUCCESS
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                permuto::Error::Domain(_) => 3,
                permuto::Error::Resource(_) => 4,
                permuto::Error::Internal(_) => 5,
            })
        }
    }
}

fn emit(format: Format, value: &Value) {
    match format {
        Format::Json => println!("{value}"),
        Format::Csv => {
            if let Value::Object(map) = value {
                for (k, v) in map {
                    match v {
                        Value::String(s) => println!("{k},{s}"),
                        Value::Object(inner) => {
                            for (ik, iv) in inner {
                                println!("{k}.{ik},{}", plain(iv));
                            }
                        }
                        Value::Array(items) => {
                            let joined: Vec<String> = items.iter().map(plain).collect();
                            println!("{k},{}", joined.join(";"));
                        }
                        other => println!("{k},{other}"),
                    }
                }
            } else {
                println!("{}", plain(value));
            }
        }
    }
}

fn plain(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

fn parse_rationals(parts: &[String]) -> permuto::Result<Vec<Rational>> {
    parts.iter().map(|s| permutohedron::parse_rational(s.trim())).collect()
}

fn read_json(path: &PathBuf) -> permuto::Result<Value> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| permuto::Error::Domain(format!("cannot read {}: {e}", path.display())))?;
    serde_json::from_str(&text)
        .map_err(|e| permuto::Error::Domain(format!("bad JSON in {}: {e}", path.display())))
}

fn int_str(x: &Int) -> Value {
    Value::String(x.to_string())
}

fn rat_str(x: &Rational) -> Value {
    Value::String(x.to_string())
}

fn check(name: &str, pass: bool) -> Value {
    json!({ "check": name, "pass": pass })
}

fn run(cli: &Cli) -> permuto::Result<Value> {
    match &cli.cmd {
        Cmd::PermVolume { x } => perm_volume(cli, x),
        Cmd::PermLattice { x } => perm_lattice(cli, x),
        Cmd::Genperm { graph, op } => genperm_cmd(graph, *op),
        Cmd::Minkowski { family, op, trimmed } => minkowski_cmd(cli, family, *op, *trimmed),
        Cmd::Rootpoly { graph, op } => rootpoly_cmd(graph, *op),
        Cmd::MixedEulerian { n, c } => mixed_eulerian_cmd(cli, *n, c),
        Cmd::WeylVolume { cartan, u } => weyl_volume_cmd(cli, cartan, u),
        Cmd::Brion { cmd } => brion_cmd(cmd),
        Cmd::Tableaux {
            cmd: TableauxCmd::Diagonals { n },
        } => tableaux_cmd(*n),
    }
}

fn sorted_decreasing(x: &[Rational]) -> Vec<Rational> {
    let mut x = x.to_vec();
    x.sort();
    x.reverse();
    x
}

fn strictly_decreasing(x: &[Rational]) -> bool {
    x.windows(2).all(|w| w[0] > w[1])
}

fn perm_volume(cli: &Cli, x: &[String]) -> permuto::Result<Value> {
    let x = sorted_decreasing(&parse_rationals(x)?);
    let spec = permutohedron::PermutohedronSpec::new(x.clone())?;
    let volume = permutohedron::volume_numeric_symmetrization(&spec);
    let mut out = json!({ "volume": rat_str(&volume) });
    if cli.verify {
        let mut checks = Vec::new();
        checks.push(check(
            "dilation-oracle",
            permutohedron::volume_oracle_ehrhart(&spec)? == volume,
        ));
        let u = permutohedron::coords_x_to_u(&x);
        checks.push(check(
            "binary-tree-sum",
            eulerian::volume_binary_trees(&u)? == volume,
        ));
        if strictly_decreasing(&x) {
            let rep = brion::permutohedron_rep(&x)?;
            checks.push(check("vertex-cone-sum", brion::volume_brion(&rep)? == volume));
        }
        out["checks"] = Value::Array(checks);
    }
    Ok(out)
}

fn perm_lattice(cli: &Cli, x: &[String]) -> permuto::Result<Value> {
    let x = sorted_decreasing(&parse_rationals(x)?);
    let spec = permutohedron::PermutohedronSpec::new(x.clone())?;
    let count = permutohedron::lattice_count(&spec)?;
    let mut out = json!({ "count": int_str(&count) });
    if cli.verify && strictly_decreasing(&x) {
        let rep = brion::permutohedron_rep(&x)?;
        out["checks"] = Value::Array(vec![check(
            "vertex-cone-sum",
            brion::lattice_count_brion(&rep)? == count,
        )]);
    }
    Ok(out)
}

fn parse_graph(desc: &str) -> permuto::Result<genperm::SimpleGraph> {
    let (kind, size) = desc
        .split_once(':')
        .ok_or_else(|| permuto::Error::Domain("graph must look like path:4".into()))?;
    let n: usize = size
        .parse()
        .map_err(|_| permuto::Error::Domain(format!("bad graph size {size}")))?;
    if n == 0 || n > 10 {
        return Err(permuto::Error::Domain("graph size must be 1..=10".into()));
    }
    Ok(match kind {
        "path" => genperm::SimpleGraph::path(n),
        "cycle" => genperm::SimpleGraph::cycle(n),
        "complete" => genperm::SimpleGraph::complete(n),
        "star" => genperm::SimpleGraph::star(&vec![1; n]),
        other => {
            return Err(permuto::Error::Domain(format!(
                "unknown graph kind {other}; use path, cycle, complete, or star"
            )))
        }
    })
}

fn genperm_cmd(graph: &str, op: GenpermOp) -> permuto::Result<Value> {
    let building = genperm::graphical_building(&parse_graph(graph)?)?;
    Ok(match op {
        GenpermOp::Catalan => json!({ "catalan": int_str(&building.generalized_catalan()) }),
        GenpermOp::FPoly => {
            let coeffs: Vec<Value> = building.f_polynomial()?.iter().map(int_str).collect();
            json!({ "f_polynomial": coeffs })
        }
        GenpermOp::Nested => json!({ "nested_sets": building.nested_sets().len() }),
        GenpermOp::Vertices => json!({ "vertices": building.b_forests().len() }),
    })
}

fn minkowski_cmd(
    cli: &Cli,
    family: &PathBuf,
    op: MinkowskiOp,
    trimmed: bool,
) -> permuto::Result<Value> {
    let f = minkowski::SubsetFamily::from_json(&read_json(family)?)?;
    match op {
        MinkowskiOp::Volume => {
            let volume = minkowski::volume(&f, cli.force)?;
            let mut out = json!({ "volume": rat_str(&volume) });
            if cli.verify {
                let js: Vec<u64> = f.subsets.clone();
                let weights_ok = f.weights.iter().all(|w| w.denom() == &Int::from(1));
                let mut checks = Vec::new();
                if weights_ok
                    && f.m() == f.n - 1
                    && f.weights.iter().all(|w| w == &Rational::from_integer(Int::from(1)))
                {
                    let bernstein = minkowski::mixed_volume_simplices(f.n, &js, cli.seed)?;
                    checks.push(check("bernstein-count", bernstein == volume));
                }
                checks.push(check(
                    "vertex-sum",
                    minkowski::volume_vertex_sum(f.n, &minkowski::weight_map(&f))? == volume,
                ));
                out["checks"] = Value::Array(checks);
            }
            Ok(out)
        }
        MinkowskiOp::Lattice => {
            let count = minkowski::lattice_points(&f, trimmed, cli.force)?;
            let mut out = json!({ "count": int_str(&count) });
            if cli.verify {
                let zp = if trimmed {
                    minkowski::trim_z(&minkowski::z_from_y(&f))
                } else {
                    minkowski::z_from_y(&f)
                };
                let brute = minkowski::lattice_points_brute_z(&zp)?;
                out["checks"] = Value::Array(vec![check(
                    "brute-force-enumeration",
                    Int::from(brute.len() as u64) == count,
                )]);
            }
            Ok(out)
        }
        MinkowskiOp::Draconian => {
            let seqs = minkowski::g_draconian_sequences(&f, cli.force)?;
            Ok(json!({ "draconian_sequences": seqs.len() }))
        }
        MinkowskiOp::Duality => {
            let (primal, dual) = minkowski::duality_check(&f, cli.force)?;
            Ok(json!({
                "primal": int_str(&primal),
                "dual": int_str(&dual),
                "equal": primal == dual,
            }))
        }
    }
}

fn rootpoly_cmd(graph: &PathBuf, op: RootpolyOp) -> permuto::Result<Value> {
    let g = rootpoly::BipartiteGraph::from_json(&read_json(graph)?)?;
    match op {
        RootpolyOp::Triangulate => {
            let tri = rootpoly::triangulate(&g)?;
            Ok(json!({ "simplices": tri.trees.len() }))
        }
        RootpolyOp::Volume => {
            let volume = rootpoly::volume_root_polytope(&g)?;
            Ok(json!({ "volume": rat_str(&volume) }))
        }
        RootpolyOp::Bijection => {
            let tri = rootpoly::triangulate(&g)?;
            let map = rootpoly::rd_ld_bijection(&g, &tri)?;
            let pairs: Vec<Value> = map
                .iter()
                .map(|(rd, ld)| json!({ "right": rd, "left": ld }))
                .collect();
            Ok(json!({ "pairs": pairs }))
        }
    }
}

fn mixed_eulerian_cmd(cli: &Cli, n: usize, c: &[usize]) -> permuto::Result<Value> {
    if c.len() != n {
        return Err(permuto::Error::Domain(format!(
            "composition has {} parts but n = {n}",
            c.len()
        )));
    }
    let value = eulerian::mixed_eulerian(c)?;
    let mut out = json!({ "value": int_str(&value) });
    if cli.verify {
        let routes = eulerian::mixed_eulerian_routes(c)?;
        let mut report = serde_json::Map::new();
        for (name, route_value) in &routes {
            report.insert(name.clone(), int_str(route_value));
        }
        out["routes"] = Value::Object(report);
        out["checks"] = Value::Array(vec![check(
            "route-agreement",
            routes.iter().all(|(_, v)| v == &value),
        )]);
    }
    Ok(out)
}

fn weyl_volume_cmd(cli: &Cli, cartan: &PathBuf, u: &[String]) -> permuto::Result<Value> {
    let rs = weyl::root_system_from_json(&read_json(cartan)?)?;
    let u = parse_rationals(u)?;
    let volume = weyl::weight_polytope_volume(&rs, &u)?;
    let mut out = json!({
        "volume": rat_str(&volume),
        "weyl_order": int_str(&rs.weyl_order),
    });
    if cli.verify {
        let mut checks = Vec::new();
        if rs.n <= 4 {
            checks.push(check(
                "facet-derivative-recurrence",
                weyl::volume_recurrence_check(&rs)?,
            ));
        }
        out["checks"] = Value::Array(checks);
    }
    Ok(out)
}

fn brion_cmd(cmd: &BrionCmd) -> permuto::Result<Value> {
    match cmd {
        BrionCmd::Count { rep } => {
            let rep = brion::SimplePolytopeRep::from_json(&read_json(rep)?)?;
            Ok(json!({ "count": int_str(&brion::lattice_count_brion(&rep)?) }))
        }
        BrionCmd::Volume { rep } => {
            let rep = brion::SimplePolytopeRep::from_json(&read_json(rep)?)?;
            Ok(json!({ "volume": rat_str(&brion::volume_brion(&rep)?) }))
        }
        BrionCmd::Todd { family } => {
            let f = minkowski::SubsetFamily::from_json(&read_json(family)?)?;
            Ok(json!({ "count": int_str(&brion::todd_count_genperm(&f)?) }))
        }
    }
}

fn tableaux_cmd(n: usize) -> permuto::Result<Value> {
    let count = tableaux::count_diagonal_vectors(n)?;
    let map = tableaux::diagonal_count_map(n)?;
    let mut vectors = serde_json::Map::new();
    for (a, value) in &map {
        let key = a
            .iter()
            .map(|x| x.to_string())
            .collect::<Vec<_>>()
            .join(",");
        vectors.insert(key, int_str(value));
    }
    Ok(json!({ "count": count, "vectors": Value::Object(vectors) }))
}
