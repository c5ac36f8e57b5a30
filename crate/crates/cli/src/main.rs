//! Command-line front door: computation, verification suites, sequence
//! export, and numeric root approximation.
//!
//! Exit codes: 0 success, 1 verification failure, 2 usage errors.

mod verify;

use std::process::ExitCode;
use std::str::FromStr;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num_bigint::{BigInt, BigUint};
use num_traits::Zero;

use hypercat_core::closedform::{
    fuss_catalan_power, fuss_number, geode_consecutive_closed, hyper_catalan,
};
use hypercat_core::geode::{build_g, build_h, build_u};
use hypercat_core::numroot::{evaluate_truncated_s, residual_norm};
use hypercat_core::oracle::enumerate_subdigons;
use hypercat_core::recurrence::{
    geode_expand, geode_recurrence_value, hyper_catalan_recurrence, two_shape_alternating_sum,
    SignedCombination, XStrategy,
};
use hypercat_core::sequences::{
    geode_slice, projected_sequence, ProjectedTable, ProjectionFamily, SeriesTarget, SlicePattern,
};
use hypercat_core::series::{format_term_json, BuildMethod, MonomialRule, PolySeries, Truncation};
use hypercat_core::TypeVec;

#[derive(Parser)]
#[command(
    name = "hypercat",
    version,
    about = "Hyper-Catalan numbers, the Geode array, and their verification suites"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Hyper-Catalan number of a type, e.g. `hc 1,1`
    Hc {
        /// Type vector as `m2,m3,...` (brackets optional)
        type_vec: String,
        /// Computation route
        #[arg(long, value_enum, default_value_t = HcRoute::Closed)]
        via: HcRoute,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Multiparameter Fuss-Catalan number [t^m] S^r
    Fuss {
        type_vec: String,
        /// Power of the series
        #[arg(short, long)]
        r: u64,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Geode coefficients: values and hyper-Catalan expansions
    Geode {
        #[command(subcommand)]
        command: GeodeCommand,
    },
    /// Build truncated series and print them
    Series {
        #[command(subcommand)]
        command: SeriesCommand,
    },
    /// Sequence tables: Geode slices and projections
    Seq(SeqArgs),
    /// Verification suites (exit 0 on full pass, 1 on any failure)
    Verify(verify::VerifyArgs),
    /// Approximate the root of a geometric polynomial by the truncated series
    Solve {
        /// Coefficients c2,c3,... of 1 - a + c2 a^2 + c3 a^3 + ...
        #[arg(long, value_delimiter = ',', required = true, allow_negative_numbers = true)]
        coeffs: Vec<f64>,
        /// Number of face levels to sum
        #[arg(long, default_value_t = 30)]
        levels: u32,
    },
}

#[derive(Subcommand)]
enum GeodeCommand {
    /// A single Geode coefficient
    Value {
        type_vec: String,
        #[arg(long, value_enum, default_value_t = GeodeRoute::Recurrence)]
        via: GeodeRoute,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
    /// Expand a Geode coefficient into a signed hyper-Catalan combination
    Expand {
        type_vec: String,
        /// Index strategy: `max` or a constant gon index like `2`
        #[arg(long, default_value = "max")]
        x: String,
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
    },
}

#[derive(Subcommand)]
enum SeriesCommand {
    /// Build S, G, U or H under a truncation and print it
    Build {
        /// Face bound for S (G and H come out one level lower)
        #[arg(long)]
        faces: u32,
        /// Gon bound (largest variable index)
        #[arg(long)]
        gons: u32,
        #[arg(long, value_enum)]
        which: Which,
        /// Regrade by face count (t_k -> f t_k) or vertex weight (t_k -> v^{k-1} t_k)
        #[arg(long, value_enum)]
        layer: Option<Layer>,
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
    },
}

#[derive(Args)]
struct SeqArgs {
    /// Slice pattern with one free index (`n,1`, `1,0,n`, ...) or a
    /// projection family: `little-schroeder`, `riordan`, `cayley`
    name: String,
    /// Number of terms (or Cayley rows)
    #[arg(long)]
    count: u32,
    /// Projection target for the family sequences
    #[arg(long, value_enum, default_value_t = Target::G)]
    target: Target,
    #[arg(long, value_enum, default_value_t = SeqFormat::Bfile)]
    format: SeqFormat,
}

#[derive(Clone, Copy, ValueEnum)]
enum HcRoute {
    Closed,
    Recurrence,
    Enumeration,
}

#[derive(Clone, Copy, ValueEnum)]
enum GeodeRoute {
    Recurrence,
    Division,
    Closed,
}

#[derive(Clone, Copy, ValueEnum)]
enum Which {
    S,
    G,
    U,
    H,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Layer {
    Face,
    Vertex,
}

#[derive(Clone, Copy, ValueEnum)]
enum Target {
    S,
    G,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SeqFormat {
    Bfile,
    Json,
}

fn main() -> ExitCode {
    // die quietly when the consumer closes the pipe (e.g. `seq ... | head`)
    #[cfg(unix)]
    unsafe {
        libc::signal(libc::SIGPIPE, libc::SIG_DFL);
    }
    let cli = Cli::parse();
    match run(cli) {
        Ok(code) => code,
        Err(message) => {
            eprintln!("error: {message}");
            ExitCode::from(2)
        }
    }
}

fn run(cli: Cli) -> Result<ExitCode, String> {
    match cli.command {
        Command::Hc {
            type_vec,
            via,
            format,
        } => {
            let m = parse_type(&type_vec)?;
            let value = match via {
                HcRoute::Closed => hyper_catalan(&m),
                HcRoute::Recurrence => hyper_catalan_recurrence(&m),
                HcRoute::Enumeration => {
                    let max_gon = m.max_gon().unwrap_or(2);
                    enumerate_subdigons(m.faces(), max_gon)
                        .remove(&m)
                        .unwrap_or_else(|| BigUint::from(0u32))
                }
            };
            print_value(&m, &value, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Fuss {
            type_vec,
            r,
            format,
        } => {
            if r < 1 {
                return Err("the power r must be at least 1".into());
            }
            let m = parse_type(&type_vec)?;
            let value = fuss_catalan_power(&m, r);
            print_value(&m, &value, format);
            Ok(ExitCode::SUCCESS)
        }
        Command::Geode { command } => run_geode(command),
        Command::Series { command } => run_series(command),
        Command::Seq(args) => run_seq(args),
        Command::Verify(args) => Ok(verify::run(args)),
        Command::Solve { coeffs, levels } => {
            let eval = evaluate_truncated_s(&coeffs, levels);
            let residual = residual_norm(&coeffs, eval.value);
            println!("value {}", eval.value);
            println!("residual {residual}");
            println!(
                "divergence-suspected {}",
                if eval.divergence_suspected {
                    "yes"
                } else {
                    "no"
                }
            );
            println!("level increments:");
            for (level, inc) in eval.increments.iter().enumerate() {
                println!("{level} {inc}");
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn parse_type(text: &str) -> Result<TypeVec, String> {
    TypeVec::from_str(text).map_err(|e| e.to_string())
}

fn print_value(m: &TypeVec, value: &BigUint, format: Format) {
    match format {
        Format::Text => println!("{value}"),
        Format::Json => println!("{{\"type\":{},\"value\":\"{}\"}}", dense_json(m), value),
    }
}

fn dense_json(m: &TypeVec) -> String {
    let dense: Vec<String> = m.dense().iter().map(|x| x.to_string()).collect();
    format!("[{}]", dense.join(","))
}

fn run_geode(command: GeodeCommand) -> Result<ExitCode, String> {
    match command {
        GeodeCommand::Value {
            type_vec,
            via,
            format,
        } => {
            let m = parse_type(&type_vec)?;
            let value = match via {
                GeodeRoute::Recurrence => {
                    geode_recurrence_value(&m, XStrategy::LargestComponentSmallestIndex)
                        .map_err(|e| e.to_string())?
                }
                GeodeRoute::Division => {
                    let trunc = Truncation::new(m.faces() + 1, m.max_gon().unwrap_or(2));
                    build_g(trunc)
                        .coefficient(&m)
                        .try_into()
                        .expect("Geode coefficients are natural")
                }
                GeodeRoute::Closed => closed_geode_value(&m)?,
            };
            print_value(&m, &value, format);
            Ok(ExitCode::SUCCESS)
        }
        GeodeCommand::Expand {
            type_vec,
            x,
            format,
        } => {
            let m = parse_type(&type_vec)?;
            let strategy = parse_strategy(&x)?;
            let combination = geode_expand(&m, strategy).map_err(|e| e.to_string())?;
            match format {
                Format::Text => println!("{} = {}", combination, combination.evaluate()),
                Format::Json => println!("{}", combination_json(&combination)),
            }
            Ok(ExitCode::SUCCESS)
        }
    }
}

/// Closed forms cover the empty type, single shapes (Fuss numbers), and two
/// distinct shapes (consecutive-shape formula or alternating sum).
fn closed_geode_value(m: &TypeVec) -> Result<BigUint, String> {
    let shapes: Vec<(u32, u32)> = m.iter().collect();
    match shapes.as_slice() {
        [] => Ok(BigUint::from(1u32)),
        [(k, mult)] => Ok(fuss_number(*k, mult + 1)),
        [(j, mj), (k, mk)] if *k == j + 1 => {
            Ok(geode_consecutive_closed(*j as u64, *mj as u64, *mk as u64))
        }
        [(j, mj), (k, mk)] => Ok(two_shape_alternating_sum(*j, *k, *mj, *mk)
            .map_err(|e| e.to_string())?
            .try_into()
            .expect("Geode coefficients are natural")),
        _ => Err(format!(
            "no closed form is known for {} distinct shapes (type {m}); use --via recurrence",
            m.distinct_shapes()
        )),
    }
}

fn parse_strategy(text: &str) -> Result<XStrategy, String> {
    if text == "max" {
        return Ok(XStrategy::LargestComponentSmallestIndex);
    }
    match text.parse::<u32>() {
        Ok(k) if k >= 2 => Ok(XStrategy::ConstantIndex(k)),
        _ => Err(format!(
            "strategy must be `max` or a gon index >= 2, got {text:?}"
        )),
    }
}

fn combination_json(combination: &SignedCombination) -> String {
    let entries: Vec<String> = combination
        .sorted_terms()
        .iter()
        .map(|(m, c)| format_term_json(m, c))
        .collect();
    format!(
        "{{\"terms\":[{}],\"value\":\"{}\"}}",
        entries.join(","),
        combination.evaluate()
    )
}

fn run_series(command: SeriesCommand) -> Result<ExitCode, String> {
    let SeriesCommand::Build {
        faces,
        gons,
        which,
        layer,
        format,
    } = command;
    if gons < 2 {
        return Err("the gon bound must be at least 2".into());
    }
    let trunc = Truncation::new(faces, gons);
    let series = match which {
        Which::S => PolySeries::build_s(trunc, BuildMethod::ClosedForm),
        Which::G | Which::H if faces < 1 => {
            return Err("G and H need a face bound of at least 1".into());
        }
        Which::G => build_g(trunc),
        Which::U => build_u(trunc),
        Which::H => build_h(trunc),
    };
    match layer {
        None => match format {
            Format::Json => println!("{}", series.to_json()),
            Format::Text => println!("{series}"),
        },
        Some(which_layer) => {
            let substituted = series.substitute(|k| MonomialRule {
                coeff: BigInt::from(1),
                v_pow: if which_layer == Layer::Vertex {
                    k - 1
                } else {
                    0
                },
                f_pow: if which_layer == Layer::Face { 1 } else { 0 },
                keep_t: true,
            });
            let layers = match which_layer {
                Layer::Vertex => substituted.layers_by_v(),
                Layer::Face => substituted.layers_by_f(),
            };
            let mut rendered_layers = Vec::new();
            for (degree, terms) in &layers {
                let mut sorted: Vec<(&TypeVec, &BigInt)> = terms.iter().collect();
                sorted
                    .sort_by(|(a, _), (b, _)| a.faces().cmp(&b.faces()).then_with(|| b.lex_cmp(a)));
                match format {
                    Format::Json => {
                        let entries: Vec<String> =
                            sorted.iter().map(|(m, c)| format_term_json(m, c)).collect();
                        rendered_layers.push(format!(
                            "{{\"layer\":{degree},\"terms\":[{}]}}",
                            entries.join(",")
                        ));
                    }
                    Format::Text => {
                        let entries: Vec<String> =
                            sorted.iter().map(|(m, c)| format!("{c}*{m}")).collect();
                        println!("{degree}: {}", entries.join(" + "));
                    }
                }
            }
            if format == Format::Json {
                println!("[{}]", rendered_layers.join(","));
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn run_seq(args: SeqArgs) -> Result<ExitCode, String> {
    if args.count < 1 {
        return Err("count must be at least 1".into());
    }
    let family = match args.name.as_str() {
        "little-schroeder" => Some(ProjectionFamily::LittleSchroeder),
        "riordan" => Some(ProjectionFamily::Riordan),
        "cayley" => Some(ProjectionFamily::Cayley),
        _ => None,
    };
    let Some(family) = family else {
        let pattern: SlicePattern = args.name.parse().map_err(|e| format!("{e}"))?;
        let values = geode_slice(&pattern, args.count).map_err(|e| e.to_string())?;
        let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
        print_sequence(&rendered, args.format);
        return Ok(ExitCode::SUCCESS);
    };
    let target = match args.target {
        Target::S => SeriesTarget::S,
        Target::G => SeriesTarget::G,
    };
    match projected_sequence(family, target, args.count) {
        ProjectedTable::Coefficients(values) => {
            let rendered: Vec<String> = values.iter().map(|v| v.to_string()).collect();
            print_sequence(&rendered, args.format);
        }
        ProjectedTable::Rows(rows) => {
            // dovetailed by v-degree then f-degree, descending f within a row
            // as the tables display them; the all-zero f^0 slot is dropped on
            // rows past the constant
            let display_rows: Vec<Vec<String>> = rows
                .iter()
                .enumerate()
                .map(|(v, row)| {
                    row.iter()
                        .enumerate()
                        .rev()
                        .filter(|(f, coeff)| !(*f == 0 && v > 0 && coeff.is_zero()))
                        .map(|(_, coeff)| coeff.to_string())
                        .collect()
                })
                .collect();
            match args.format {
                SeqFormat::Bfile => {
                    let mut index = 0u32;
                    for row in &display_rows {
                        for coeff in row {
                            println!("{index} {coeff}");
                            index += 1;
                        }
                    }
                }
                SeqFormat::Json => {
                    let rendered: Vec<String> = display_rows
                        .iter()
                        .map(|row| {
                            let quoted: Vec<String> =
                                row.iter().map(|c| format!("\"{c}\"")).collect();
                            format!("[{}]", quoted.join(","))
                        })
                        .collect();
                    println!("[{}]", rendered.join(","));
                }
            }
        }
    }
    Ok(ExitCode::SUCCESS)
}

fn print_sequence(values: &[String], format: SeqFormat) {
    match format {
        SeqFormat::Bfile => {
            for (i, v) in values.iter().enumerate() {
                println!("{i} {v}");
            }
        }
        SeqFormat::Json => {
            let quoted: Vec<String> = values.iter().map(|v| format!("\"{v}\"")).collect();
            println!("[{}]", quoted.join(","));
        }
    }
}
