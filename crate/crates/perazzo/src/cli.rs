//! Command-line front end: argument types, the dispatcher, and the
//! composite verification suites.  Kept in the library so other front ends
//! (and the C interface) can drive the same entry points.

use std::io::Write;
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_rational::BigRational;
use serde_json::json;

use crate::error::Error;
use crate::exact::field::{PrimeField, Rationals};
use crate::exact::mpoly::MPoly;
use crate::report::Report;
use crate::wreath::gamma::GammaElt;
use crate::wreath::subgroup::GammaSubgroup;

pub const DEFAULT_SEED: u64 = 0x5EED_CA5C;
pub const OUTPUT_DIR_ENV: &str = "PERAZZO_OUTPUT_DIR";

/// Exit statuses: 0 pass, 1 check failure, 2 usage error.
pub const EXIT_PASS: i32 = 0;
pub const EXIT_CHECK_FAILED: i32 = 1;
pub const EXIT_USAGE: i32 = 2;

#[derive(Parser, Debug)]
#[command(
    name = "perazzo",
    about = "Exact verification of the torsor, lattice and incidence structures of 9- and 10-nodal cubic threefolds",
    version
)]
pub struct CliArgs {
    #[command(subcommand)]
    pub command: Command,

    /// Seed for the pseudo-random choices (slice directions, sample
    /// matrices); echoed in every report.
    #[arg(long, global = true, default_value_t = DEFAULT_SEED)]
    pub seed: u64,

    /// Print the JSON report on standard output instead of the text summary.
    #[arg(long, global = true)]
    pub json: bool,

    /// Write the JSON report to this path (defaults to
    /// `$PERAZZO_OUTPUT_DIR/<command>.json` when the variable is set).
    #[arg(long, global = true)]
    pub output: Option<PathBuf>,

    /// Truncation cap for local-algebra dimensions.
    #[arg(long, global = true, default_value_t = 10)]
    pub trunc: u32,
}

#[derive(Subcommand, Debug)]
pub enum Command {
    /// Run verification suites.
    Verify {
        /// Which suite: all, lattice, brauer, torsor, geometry, segre.
        #[arg(default_value = "all")]
        suite: String,
    },
    /// The subgroup-by-subgroup cohomology classification table.
    BrauerTable,
    /// First cohomology of a subgroup on a standard module.
    Cohomology {
        /// Generators in cycle notation, separated by semicolons,
        /// e.g. "((123),1,0);((12),(12),1)".
        #[arg(long)]
        group: String,
        /// One of F, Q, P, E, PicTilde, S_hat, S0_hat, M_hat.
        #[arg(long)]
        module: String,
    },
    /// Incidence graph of the plane configuration of a hyperplane section.
    IncidenceGraph {
        /// Six comma-separated rational coefficients.
        #[arg(long)]
        hyperplane: String,
    },
    /// Chart-map checks: identity, equivariance, double-three, censuses.
    TorsorMap {
        #[arg(long, default_value_t = true)]
        check: bool,
    },
    /// Finite-field censuses.
    Census {
        /// Object: segre or perazzo.
        #[arg(long)]
        object: CensusObject,
        #[arg(long)]
        q: u64,
    },
    /// Milnor data of a polynomial at a point.
    Milnor {
        /// Path to a polynomial file: JSON (vars + terms) or text with
        /// `--vars`.
        #[arg(long)]
        poly: PathBuf,
        /// Comma-separated rational coordinates of a projective point.
        #[arg(long)]
        point: String,
        /// Variable names for the text format, comma-separated.
        #[arg(long)]
        vars: Option<String>,
    },
    /// The ten-nodal cubic via one of its two models.
    Segre {
        #[arg(long)]
        model: SegreModelChoice,
    },
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum CensusObject {
    Segre,
    Perazzo,
}

#[derive(Clone, Copy, Debug, ValueEnum)]
pub enum SegreModelChoice {
    Quadrics,
    Matrix,
}

#[derive(Args, Debug)]
pub struct NoArgs {}

/// Parse and dispatch an argument vector (for embedding front ends);
/// `Err` carries the usage message.
pub fn run_from_args<I>(args: I) -> Result<(Report, i32), String>
where
    I: IntoIterator<Item = String>,
{
    let parsed = CliArgs::try_parse_from(args).map_err(|e| e.to_string())?;
    Ok(run(&parsed))
}

/// Dispatch a parsed command line; returns the report and the exit status.
pub fn run(args: &CliArgs) -> (Report, i32) {
    let seed = args.seed;
    let result = match &args.command {
        Command::Verify { suite } => run_verify(suite, seed, args.trunc),
        Command::BrauerTable => run_brauer_table(seed),
        Command::Cohomology { group, module } => run_cohomology(group, module, seed),
        Command::IncidenceGraph { hyperplane } => run_incidence(hyperplane, seed, args.trunc),
        Command::TorsorMap { .. } => run_torsor(seed),
        Command::Census { object, q } => run_census(*object, *q, seed),
        Command::Milnor { poly, point, vars } => {
            run_milnor(poly, point, vars.as_deref(), seed, args.trunc)
        }
        Command::Segre { model } => run_segre_model(*model, seed),
    };
    match result {
        Ok(report) => {
            let code = if report.passed {
                EXIT_PASS
            } else {
                EXIT_CHECK_FAILED
            };
            (report, code)
        }
        Err(Error::Usage(msg)) | Err(Error::Parse(msg)) => {
            let mut report = Report::new("error", seed);
            report.push("usage", &msg, false, serde_json::Value::Null);
            (report, EXIT_USAGE)
        }
        Err(e) => {
            let mut report = Report::new("error", seed);
            report.push("error", &e.to_string(), false, serde_json::Value::Null);
            (report, EXIT_CHECK_FAILED)
        }
    }
}

/// Write the report per the output conventions and print the summary.
pub fn emit(args: &CliArgs, report: &Report) -> std::io::Result<()> {
    let json_text = report.to_json_string();
    let path = args.output.clone().or_else(|| {
        std::env::var_os(OUTPUT_DIR_ENV).map(|dir| {
            let mut p = PathBuf::from(dir);
            p.push(format!("{}.json", report.command.replace(' ', "-")));
            p
        })
    });
    if let Some(path) = path {
        if let Some(parent) = path.parent() {
            std::fs::create_dir_all(parent)?;
        }
        std::fs::write(&path, &json_text)?;
    }
    let mut stdout = std::io::stdout().lock();
    if args.json {
        writeln!(stdout, "{json_text}")?;
    } else {
        write!(stdout, "{}", report.render_text())?;
    }
    Ok(())
}

fn parse_generators(text: &str) -> Result<Vec<GammaElt>, Error> {
    text.split(';')
        .map(|s| GammaElt::parse(s.trim()))
        .collect()
}

fn parse_rationals(text: &str) -> Result<Vec<BigRational>, Error> {
    text.split(',')
        .map(|s| {
            let s = s.trim();
            let parsed: Result<BigRational, _> = if let Some((n, d)) = s.split_once('/') {
                match (n.trim().parse(), d.trim().parse()) {
                    (Ok(n), Ok(d)) => Ok(BigRational::new(n, d)),
                    _ => Err(()),
                }
            } else {
                s.parse()
                    .map(BigRational::from_integer)
                    .map_err(|_| ())
            };
            parsed.map_err(|_| Error::Parse(format!("bad rational `{s}`")))
        })
        .collect()
}

// ---- individual commands ----

fn run_brauer_table(seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("brauer-table", seed);
    let rows = crate::brauer::brauer_table()?;
    let all_ok = rows
        .iter()
        .all(|r| r.dichotomy_ok && r.blowup_comparison_ok && r.exceptional_vanishes);
    report.push_serializable(
        "classification-table",
        "one row per conjugacy class of subgroups",
        all_ok,
        &rows,
    );
    Ok(report)
}

fn run_cohomology(group: &str, module: &str, seed: u64) -> Result<Report, Error> {
    let gens = parse_generators(group)?;
    let w = GammaSubgroup::generated_by(&gens);
    let m = crate::lattice::standard_module(module)
        .map_err(|e| Error::Usage(e.to_string()))?;
    let h = crate::lattice::h1(&w, &m)?;
    let mut report = Report::new("cohomology", seed);
    let cyclic_cross = if w.is_cyclic() {
        let via_tate = crate::lattice::h1_cyclic(&w, &m)?;
        Some(via_tate == h)
    } else {
        None
    };
    report.push(
        "h1",
        &format!("H1 of the subgroup generated by {group} on {module}"),
        cyclic_cross != Some(false),
        json!({
            "subgroup_order": w.order(),
            "module": module,
            "invariant_factors": h.factors,
            "cyclic_cross_check": cyclic_cross,
        }),
    );
    Ok(report)
}

fn run_incidence(hyperplane: &str, seed: u64, trunc: u32) -> Result<Report, Error> {
    let coeffs = parse_rationals(hyperplane)?;
    if coeffs.len() != 6 {
        return Err(Error::Usage("expected six hyperplane coefficients".into()));
    }
    let mut report = Report::new("incidence-graph", seed);
    let section = crate::geometry::nine_nodal_section(&coeffs)?;
    let cert = section.certify(trunc, seed, 3)?;
    let ig = section.incidence()?;
    let skeleton = ig.check_torus_skeleton();
    report.push(
        "incidence-graph",
        "plane incidence graph of the section",
        skeleton.pass,
        json!({
            "edges": ig.graph.edges(),
            "triangles": ig.triangles,
            "aut_order": skeleton.automorphism_order,
            "skeleton": skeleton,
            "good_primes": cert.good_primes,
            "singular_points": cert.node_reports,
            "dual_degree": cert.dual_degree,
        }),
    );
    Ok(report)
}

fn run_torsor(seed: u64) -> Result<Report, Error> {
    let mut report = Report::new("torsor-map", seed);
    let identity_ok = crate::torsor::verify_identity();
    report.push("identity", "chart map satisfies the defining cubic", identity_ok, json!({}));

    let equivariance = crate::torsor::check_equivariance_all();
    report.push(
        "equivariance",
        "lift is equivariant for all 72 group elements",
        equivariance == Ok(72),
        json!({ "elements_checked": equivariance.unwrap_or(0) }),
    );

    let dt = crate::torsor::verify_double_three_structure();
    report.push_serializable(
        "double-three",
        "base locus is a double-three with 36 double-vanishing checks",
        dt.pass,
        &dt,
    );

    for q in [2u64, 3, 5] {
        let census = crate::torsor::torsor_census(&PrimeField::new(q));
        report.push_serializable(
            &format!("census-q{q}"),
            "fibers are constant of size (q-1)^5 onto the open locus",
            census.pass,
            &census,
        );
    }
    Ok(report)
}

fn run_census(object: CensusObject, q: u64, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new(&format!("census {object:?} q={q}").to_lowercase(), seed);
    match object {
        CensusObject::Perazzo => {
            if !(2..=7).contains(&q) {
                return Err(Error::Usage("chart census is budgeted for q <= 7".into()));
            }
            let census = crate::torsor::torsor_census(&PrimeField::new(q));
            report.push_serializable(
                "chart-census",
                "fiber size and surjectivity over the open locus",
                census.pass,
                &census,
            );
        }
        CensusObject::Segre => {
            let fitted = crate::segre::standard_fitted_cubic()?;
            let census = crate::segre::census(q, fitted)?;
            report.push_serializable(
                "quotient-census",
                "free locus count equals smooth points times the group order",
                census.pass,
                &census,
            );
        }
    }
    Ok(report)
}

fn run_milnor(
    poly_path: &PathBuf,
    point: &str,
    vars: Option<&str>,
    seed: u64,
    trunc: u32,
) -> Result<Report, Error> {
    let text = std::fs::read_to_string(poly_path)?;
    let poly: MPoly<Rationals> = if text.trim_start().starts_with('{') {
        let value: serde_json::Value =
            serde_json::from_str(&text).map_err(|e| Error::Parse(e.to_string()))?;
        MPoly::from_json(&value)?.0
    } else {
        let vars = vars.ok_or_else(|| {
            Error::Usage("text polynomials need --vars with the variable names".into())
        })?;
        let names: Vec<&str> = vars.split(',').map(str::trim).collect();
        MPoly::parse(&text, &names)?
    };
    let coords = parse_rationals(point)?;
    if coords.len() != poly.nvars() {
        return Err(Error::Usage(format!(
            "point has {} coordinates, polynomial has {} variables",
            coords.len(),
            poly.nvars()
        )));
    }
    let x = crate::geometry::Hypersurface::new(poly);
    if !x.contains_point(&coords) {
        return Err(Error::Usage("point is not on the hypersurface".into()));
    }
    let singular = x
        .partials()
        .iter()
        .all(|d| d.eval(&coords).expect("arity") == BigRational::from_integer(0.into()));
    if !singular {
        return Err(Error::Usage("point is a smooth point".into()));
    }
    let rep = crate::geometry::classify_singularity(&x, &coords, trunc, seed)?;
    let mut report = Report::new("milnor", seed);
    report.push_serializable("milnor", "Milnor data at the point", true, &rep);
    Ok(report)
}

fn run_segre_model(model: SegreModelChoice, seed: u64) -> Result<Report, Error> {
    let mut report = Report::new(&format!("segre {model:?}").to_lowercase(), seed);
    let cubic = match model {
        SegreModelChoice::Quadrics => crate::segre::quadrics_model_cubic(60, seed)?,
        SegreModelChoice::Matrix => crate::segre::standard_fitted_cubic()?.clone(),
    };
    let (sing, planes, points) = crate::segre::fitted_cubic_census(&cubic, 7)?;
    let names = ["m0", "m1", "m2", "m3", "m4"];
    report.push(
        "fitted-cubic",
        "fitted model cubic with its census over F_7",
        sing == 10 && planes == 15,
        json!({
            "equation": cubic.to_text(&names),
            "f7_singular_points": sing,
            "f7_planes": planes,
            "f7_points": points,
        }),
    );
    Ok(report)
}

// ---- the composite suites ----

fn run_verify(suite: &str, seed: u64, trunc: u32) -> Result<Report, Error> {
    let mut report = Report::new(&format!("verify {suite}"), seed);
    match suite {
        "all" => {
            crate::suites::lattice_suite(&mut report)?;
            crate::suites::brauer_suite(&mut report)?;
            crate::suites::torsor_suite(&mut report)?;
            crate::suites::geometry_suite(&mut report, seed, trunc)?;
            crate::suites::segre_suite(&mut report, seed)?;
            crate::suites::bookkeeping_suite(&mut report)?;
        }
        "lattice" => crate::suites::lattice_suite(&mut report)?,
        "brauer" => crate::suites::brauer_suite(&mut report)?,
        "torsor" => crate::suites::torsor_suite(&mut report)?,
        "geometry" => crate::suites::geometry_suite(&mut report, seed, trunc)?,
        "segre" => crate::suites::segre_suite(&mut report, seed)?,
        "bookkeeping" => crate::suites::bookkeeping_suite(&mut report)?,
        other => {
            return Err(Error::Usage(format!(
                "unknown suite `{other}`; expected all, lattice, brauer, torsor, geometry, segre or bookkeeping"
            )))
        }
    }
    Ok(report)
}
