use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use vondyck::cayley::build_cayley;
use vondyck::coset::build_coset_geometry;
use vondyck::export;
use vondyck::group::GroupModel;
use vondyck::presentation::{classify_curvature, CurvatureClass, VonDyckParams};
use vondyck::svg::{self, RenderStyle};
use vondyck::tiling::{build_polygon_tiling, derived_tiling, enumerate_dnnn};
use vondyck::verify::{run_verification, store_for};

#[derive(Parser)]
#[command(
    name = "vondyck",
    about = "Von Dyck groups: Cayley graphs, coset geometries, tilings and their duality",
    version
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum ModelArg {
    Geometric,
    Z6,
    B23,
}

#[derive(Clone, Copy, ValueEnum)]
enum FormatArg {
    Dot,
    Json,
}

#[derive(Clone, Copy, ValueEnum)]
enum BuildWhat {
    Cayley,
    Coset,
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderWhat {
    Coset,
    Cayley,
    Tiling,
    Derived,
}

#[derive(Args)]
struct ModelArgs {
    #[arg(long, value_enum)]
    model: ModelArg,
    #[arg(long, requires_all = ["b", "c"])]
    a: Option<u32>,
    #[arg(long)]
    b: Option<u32>,
    #[arg(long)]
    c: Option<u32>,
    /// Search depth; required for Euclidean and hyperbolic parameters.
    #[arg(long)]
    depth: Option<u32>,
}

#[derive(Subcommand)]
enum Command {
    /// Classify the curvature of (a,b,c) and report the group order when finite.
    Classify {
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
    },
    /// Emit a Cayley graph or coset geometry as DOT or JSON.
    Build {
        #[arg(value_enum)]
        what: BuildWhat,
        #[command(flatten)]
        model: ModelArgs,
        #[arg(long, value_enum)]
        format: FormatArg,
        /// Output file; stdout when omitted.
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the duality verification suite and print a pass/fail table.
    Verify {
        #[command(flatten)]
        model: ModelArgs,
    },
    /// Enumerate the elements of D(n,n,n) by ring enlargement.
    Enumerate {
        #[arg(long)]
        n: u32,
        #[arg(long)]
        rings: u32,
        /// Also print per-ring tile counts checked against the angle formula.
        #[arg(long)]
        check: bool,
    },
    /// Render a structure to SVG (Euclidean and hyperbolic models only).
    Render {
        #[arg(long, value_enum)]
        what: RenderWhat,
        #[arg(long)]
        a: u32,
        #[arg(long)]
        b: u32,
        #[arg(long)]
        c: u32,
        #[arg(long, default_value_t = 2)]
        depth: u32,
        #[arg(long)]
        out: PathBuf,
    },
}

fn usage_error(message: &str) -> ExitCode {
    eprintln!("error: {message}");
    ExitCode::from(2)
}

fn parse_params(a: u32, b: u32, c: u32) -> Result<VonDyckParams, ExitCode> {
    VonDyckParams::new(a, b, c).map_err(|e| usage_error(&e.to_string()))
}

fn resolve_model(args: &ModelArgs) -> Result<GroupModel, ExitCode> {
    match args.model {
        ModelArg::Z6 => Ok(GroupModel::ToyZ6),
        ModelArg::B23 => Ok(GroupModel::BurnsideB23),
        ModelArg::Geometric => {
            let (Some(a), Some(b), Some(c)) = (args.a, args.b, args.c) else {
                return Err(usage_error("--model geometric requires --a, --b and --c"));
            };
            Ok(GroupModel::Geometric(parse_params(a, b, c)?))
        }
    }
}

fn write_output(out: &Option<PathBuf>, content: &str) -> Result<(), ExitCode> {
    match out {
        Some(path) => fs::write(path, content).map_err(|e| usage_error(&e.to_string())),
        None => {
            print!("{content}");
            Ok(())
        }
    }
}

fn cmd_classify(a: u32, b: u32, c: u32) -> Result<ExitCode, ExitCode> {
    let params = parse_params(a, b, c)?;
    let class = classify_curvature(params);
    match class {
        CurvatureClass::Spherical => {
            let store = store_for(GroupModel::Geometric(params), None)
                .map_err(|e| usage_error(&e.to_string()))?;
            println!("Spherical, order {}", store.len());
        }
        other => println!("{other}"),
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_build(
    what: BuildWhat,
    model_args: &ModelArgs,
    format: FormatArg,
    out: &Option<PathBuf>,
) -> Result<ExitCode, ExitCode> {
    let model = resolve_model(model_args)?;
    let store = store_for(model, model_args.depth).map_err(|e| usage_error(&e.to_string()))?;
    let content = match what {
        BuildWhat::Cayley => {
            let graph = build_cayley(&store);
            match format {
                FormatArg::Dot => export::cayley_dot(&graph, &store),
                FormatArg::Json => export::cayley_json(&graph, &store),
            }
        }
        BuildWhat::Coset => {
            let geometry = build_coset_geometry(&store);
            match format {
                FormatArg::Dot => export::coset_dot(&geometry, &store),
                FormatArg::Json => export::coset_json(&geometry, &store),
            }
        }
    };
    write_output(out, &content)?;
    Ok(ExitCode::SUCCESS)
}

fn cmd_verify(model_args: &ModelArgs) -> Result<ExitCode, ExitCode> {
    let model = resolve_model(model_args)?;
    let reports =
        run_verification(model, model_args.depth).map_err(|e| usage_error(&e.to_string()))?;
    let mut all_pass = true;
    for report in &reports {
        println!("{report}");
        all_pass &= report.passed();
    }
    Ok(if all_pass {
        ExitCode::SUCCESS
    } else {
        ExitCode::from(1)
    })
}

fn cmd_enumerate(n: u32, rings: u32, check: bool) -> Result<ExitCode, ExitCode> {
    if n < 3 {
        return Err(usage_error("enumeration requires n >= 3"));
    }
    let enumeration = enumerate_dnnn(n, rings).map_err(|e| usage_error(&e.to_string()))?;
    for row in &enumeration.rows {
        println!("{}\t{}", row.index, row.word);
    }
    if check {
        for s in &enumeration.stats {
            let expected = s.boundary_edges as i64 * (n as i64 - 1) - s.hinge_sum as i64;
            let ok = expected == s.added_tiles as i64;
            println!(
                "# ring {}: boundary {}, angle sum {}, added {} (formula {expected}): {}",
                s.ring,
                s.boundary_edges,
                s.hinge_sum,
                s.added_tiles,
                if ok { "ok" } else { "MISMATCH" }
            );
            if !ok {
                return Ok(ExitCode::from(1));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn cmd_render(
    what: RenderWhat,
    a: u32,
    b: u32,
    c: u32,
    depth: u32,
    out: &PathBuf,
) -> Result<ExitCode, ExitCode> {
    let params = parse_params(a, b, c)?;
    if classify_curvature(params) == CurvatureClass::Spherical {
        return Err(usage_error("spherical models are not rendered"));
    }
    let (tiling, mut store, skeleton) =
        build_polygon_tiling(params, depth).map_err(|e| usage_error(&e.to_string()))?;
    let style = RenderStyle::default();
    let content = match what {
        RenderWhat::Coset => svg::render_coset(&tiling, &skeleton, style),
        RenderWhat::Tiling => svg::render_tiling(&tiling, style),
        RenderWhat::Derived => {
            let derived = derived_tiling(&tiling, &mut store);
            svg::render_derived(&tiling, &derived, style)
        }
        RenderWhat::Cayley => {
            let derived = derived_tiling(&tiling, &mut store);
            svg::render_cayley(&tiling, &derived, style)
        }
    }
    .map_err(|e| usage_error(&e.to_string()))?;
    fs::write(out, content).map_err(|e| usage_error(&e.to_string()))?;
    Ok(ExitCode::SUCCESS)
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match &cli.command {
        Command::Classify { a, b, c } => cmd_classify(*a, *b, *c),
        Command::Build {
            what,
            model,
            format,
            out,
        } => cmd_build(*what, model, *format, out),
        Command::Verify { model } => cmd_verify(model),
        Command::Enumerate { n, rings, check } => cmd_enumerate(*n, *rings, *check),
        Command::Render {
            what,
            a,
            b,
            c,
            depth,
            out,
        } => cmd_render(*what, *a, *b, *c, *depth, out),
    };
    match result {
        Ok(code) | Err(code) => code,
    }
}
