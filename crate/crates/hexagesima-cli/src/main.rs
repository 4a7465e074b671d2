//! Command-line driver: every library operation as a subcommand with
//! text, JSON, or SVG output.
//!
//! Exit codes: 0 on success, 1 on domain/overflow/layout errors (reason on
//! stderr), 2 on usage errors. All output is byte-deterministic for fixed
//! arguments.

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde_json::json;

use hexagesima::divisions::{
    circle_division_unequal, equal_division, nearest_to_one_degree, triangle_growth, wedge_angles,
    ChordMode,
};
use hexagesima::hexlattice::{build_packing, cumulative_discs, divisor_partition, orbit_size};
use hexagesima::numfmt::{format_sig, round_sig};
use hexagesima::render::{render, FigureKind, FigureSpec};
use hexagesima::sexagesimal::{
    abacus_add, abacus_layout, parse_numeral, AbacusState, CarryStep, SexagesimalNumeral,
};
use hexagesima::SCHEMA;

#[derive(Parser)]
#[command(
    name = "hexagesima",
    version,
    about = "Hexagonal disc orbits, a base-60 abacus, circle divisions, and SVG figures"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct OutputArgs {
    /// Emit JSON instead of text.
    #[arg(long)]
    json: bool,
    /// Write the output to a file instead of stdout.
    #[arg(long, value_name = "PATH")]
    out: Option<PathBuf>,
}

#[derive(Subcommand)]
enum Command {
    /// Disc counts of an orbit and of the packing through it
    Orbits {
        /// Orbit rank (1 or more).
        #[arg(long)]
        rank: u32,
        /// Print only the orbit's disc count.
        #[arg(long)]
        count_only: bool,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Equal-size groupings of the 60-disc figure, one per divisor
    Divisors {
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Base-60 numerals and the six-place token abacus
    Abacus {
        #[command(subcommand)]
        op: AbacusCommand,
    },
    /// Equal circle division by the hexagon-and-bisection chain
    Divide {
        /// Sector count: 6, 12, 24, 48, 96, 192 or 384.
        #[arg(long)]
        parts: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Wedge-angle table from equal chord subdivision
    Table(TableArgs),
    /// Table row closest to one degree
    Nearest(TableArgs),
    /// Unit-triangle growth of the six wedge triangles
    Growth {
        /// Growth stage (1 or more).
        #[arg(long)]
        stage: u32,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Render a figure as SVG
    Render {
        /// Figure to draw.
        #[arg(long, value_enum)]
        kind: RenderKind,
        /// Orbit count for the orbits figure.
        #[arg(long)]
        max_rank: Option<u32>,
        /// Numeral shown on the abacus figure, e.g. 6:27:49.
        #[arg(long)]
        numeral: Option<String>,
        /// Sector count for the equal-division figure.
        #[arg(long)]
        parts: Option<u32>,
        /// Chord parts per wedge for the unequal-division figure.
        #[arg(long)]
        n_per_wedge: Option<u32>,
        #[command(flatten)]
        canvas: CanvasArgs,
        /// Write the SVG here; a directory picks <kind>-<params>.svg.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
    /// Side-by-side rescaled packings approaching the limit hexagon
    Limit {
        /// Comma-separated orbit counts, e.g. 1,3,10.
        #[arg(long, value_delimiter = ',', required = true)]
        ranks: Vec<u32>,
        #[command(flatten)]
        canvas: CanvasArgs,
        /// Write the SVG here; a directory picks <kind>-<params>.svg.
        #[arg(long, value_name = "PATH")]
        out: Option<PathBuf>,
    },
}

#[derive(Args)]
struct TableArgs {
    /// Chord parts per wedge (half-chord parts with --half).
    #[arg(long)]
    n: u32,
    /// Subdivide only the half-chord from the altitude foot.
    #[arg(long, conflicts_with = "full")]
    half: bool,
    /// Subdivide the whole wedge chord (default).
    #[arg(long)]
    full: bool,
    /// Replicate the full-chord wedge angles across all six wedges
    /// (table subcommand only).
    #[arg(long, conflicts_with = "half")]
    circle: bool,
    #[command(flatten)]
    output: OutputArgs,
}

#[derive(Args)]
struct CanvasArgs {
    /// Canvas width in pixels (kind-specific default).
    #[arg(long)]
    width: Option<u32>,
    /// Canvas height in pixels (kind-specific default).
    #[arg(long)]
    height: Option<u32>,
}

#[derive(Subcommand)]
enum AbacusCommand {
    /// Decimal value of a numeral
    Eval {
        /// Numeral in colon (6:27:49) or prime (6' 27' 49) notation.
        numeral: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Numeral for a decimal value
    Encode {
        value: u128,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Sum of two numerals with the per-place carry trace
    Add {
        a: String,
        b: String,
        #[command(flatten)]
        output: OutputArgs,
    },
    /// Token slots filled when one place displays a digit
    Layout {
        digit: u8,
        #[command(flatten)]
        output: OutputArgs,
    },
}

#[derive(Clone, Copy, ValueEnum)]
enum RenderKind {
    Orbits,
    Abacus,
    DivisionEqual,
    DivisionUnequal,
    Star,
    Calendar,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::FAILURE
        }
    }
}

fn run(command: Command) -> hexagesima::Result<()> {
    match command {
        Command::Orbits {
            rank,
            count_only,
            output,
        } => {
            let orbit = orbit_size(rank)?;
            let with_center = cumulative_discs(rank, true);
            let without_center = cumulative_discs(rank, false);
            let text = if count_only {
                format!("{orbit}\n")
            } else {
                format!(
                    "orbit rank {rank}: {orbit} discs\n\
                     packing through rank {rank}: {with_center} discs with the center, \
                     {without_center} without\n"
                )
            };
            let payload = json!({
                "schema": SCHEMA,
                "rank": rank,
                "orbit_discs": orbit,
                "total_with_center": with_center,
                "total_without_center": without_center,
            });
            emit(&output, text, payload)
        }
        Command::Divisors { output } => {
            let packing = build_packing(4)?;
            let report = divisor_partition(&packing)?;
            let mut text =
                String::from("divisors of the 60-disc figure (four orbits, six wedges of ten)\n");
            for part in &report.partitions {
                text.push_str(&format!(
                    "d={}: {} groups of {} discs\n",
                    part.divisor, part.divisor, part.group_size
                ));
            }
            let partitions: Vec<_> = report
                .partitions
                .iter()
                .map(|p| {
                    json!({
                        "divisor": p.divisor,
                        "group_size": p.group_size,
                        "groups": p.groups,
                    })
                })
                .collect();
            let payload = json!({
                "schema": SCHEMA,
                "max_rank": 4,
                "disc_total": 60,
                "partitions": partitions,
            });
            emit(&output, text, payload)
        }
        Command::Abacus { op } => run_abacus(op),
        Command::Divide { parts, output } => {
            let division = equal_division(parts)?;
            let mut text = format!(
                "{parts} equal parts, sectors of {} degrees\n",
                format_sig(360.0 / f64::from(parts), 9)
            );
            for angle in &division.boundary_angles_deg {
                text.push_str(&format_sig(*angle, 9));
                text.push('\n');
            }
            let payload = json!({
                "schema": SCHEMA,
                "parts": parts,
                "sector_deg": round_sig(360.0 / f64::from(parts), 9),
                "boundary_angles_deg": division
                    .boundary_angles_deg
                    .iter()
                    .map(|&a| round_sig(a, 9))
                    .collect::<Vec<_>>(),
            });
            emit(&output, text, payload)
        }
        Command::Table(args) => {
            if args.circle {
                return run_circle_table(&args);
            }
            let report = wedge_angles(args.n, chord_mode(&args))?;
            let text = report.to_text_table();
            let json_text = report.to_json();
            match (&args.output.out, args.output.json) {
                (Some(path), true) => write_file(path, &json_text),
                (Some(path), false) => write_file(path, &text),
                (None, true) => {
                    println!("{json_text}");
                    Ok(())
                }
                (None, false) => {
                    print!("{text}");
                    Ok(())
                }
            }
        }
        Command::Nearest(args) => {
            let report = wedge_angles(args.n, chord_mode(&args))?;
            let nearest = nearest_to_one_degree(&report)?;
            // Surface the adjacent rows too; near the winner the table
            // straddles 1° and both sides are worth seeing.
            let neighbors: Vec<_> = report
                .rows
                .iter()
                .filter(|r| r.index + 1 == nearest.index || r.index == nearest.index + 1)
                .collect();
            let mut text = format!(
                "angle {}: {} degrees, absolute error {}\n",
                nearest.index,
                format_sig(nearest.value_deg, 9),
                format_sig(nearest.abs_error_deg, 9),
            );
            for r in &neighbors {
                text.push_str(&format!(
                    "neighbor angle {}: {} degrees, absolute error {}\n",
                    r.index,
                    format_sig(r.value_deg, 9),
                    format_sig(r.abs_error_deg, 9),
                ));
            }
            let payload = json!({
                "schema": SCHEMA,
                "n": args.n,
                "mode": chord_mode(&args).as_str(),
                "index": nearest.index,
                "value_deg": round_sig(nearest.value_deg, 9),
                "abs_error_deg": round_sig(nearest.abs_error_deg, 9),
                "neighbors": neighbors
                    .iter()
                    .map(|r| {
                        json!({
                            "index": r.index,
                            "value_deg": round_sig(r.value_deg, 9),
                            "abs_error_deg": round_sig(r.abs_error_deg, 9),
                        })
                    })
                    .collect::<Vec<_>>(),
            });
            emit(&args.output, text, payload)
        }
        Command::Growth { stage, output } => {
            if stage == 0 {
                return Err(hexagesima::Error::Domain(
                    "growth stages start at 1".to_string(),
                ));
            }
            let growth = triangle_growth(stage);
            let text = format!(
                "stage {}: {} unit triangles per wedge triangle (increment {})\n",
                growth.stage, growth.triangles, growth.increment
            );
            let payload = json!({
                "schema": SCHEMA,
                "stage": growth.stage,
                "triangles": growth.triangles,
                "increment": growth.increment,
            });
            emit(&output, text, payload)
        }
        Command::Render {
            kind,
            max_rank,
            numeral,
            parts,
            n_per_wedge,
            canvas,
            out,
        } => {
            let kind = figure_kind(kind, max_rank, numeral, parts, n_per_wedge)?;
            let spec = apply_canvas(FigureSpec::new(kind), &canvas);
            let svg = render(&spec)?;
            write_svg(&spec, out, &svg)
        }
        Command::Limit { ranks, canvas, out } => {
            let spec = apply_canvas(FigureSpec::new(FigureKind::Limit { ranks }), &canvas);
            let svg = render(&spec)?;
            write_svg(&spec, out, &svg)
        }
    }
}

/// The 6n angles of the whole circle under full-chord subdivision.
fn run_circle_table(args: &TableArgs) -> hexagesima::Result<()> {
    let angles = circle_division_unequal(args.n)?;
    let sum: f64 = angles.iter().sum();
    let min = angles.iter().cloned().fold(f64::INFINITY, f64::min);
    let max = angles.iter().cloned().fold(0.0f64, f64::max);
    let mut text = format!(
        "{} unequal angles (6 wedges x {}), sum {} degrees, \
         between {} and {} degrees\n",
        angles.len(),
        args.n,
        format_sig(sum, 9),
        format_sig(min, 9),
        format_sig(max, 9),
    );
    for angle in &angles {
        text.push_str(&format_sig(*angle, 9));
        text.push('\n');
    }
    let payload = json!({
        "schema": SCHEMA,
        "n_per_wedge": args.n,
        "count": angles.len(),
        "sum_deg": round_sig(sum, 9),
        "min_deg": round_sig(min, 9),
        "max_deg": round_sig(max, 9),
        "angles_deg": angles.iter().map(|&a| round_sig(a, 9)).collect::<Vec<_>>(),
    });
    emit(&args.output, text, payload)
}

fn run_abacus(op: AbacusCommand) -> hexagesima::Result<()> {
    match op {
        AbacusCommand::Eval { numeral, output } => {
            let parsed = parse_numeral(&numeral)?;
            let value = parsed.to_decimal();
            let payload = json!({
                "schema": SCHEMA,
                "numeral": parsed.to_string(),
                "decimal": value.to_string(),
            });
            emit(&output, format!("{value}\n"), payload)
        }
        AbacusCommand::Encode { value, output } => {
            let numeral = SexagesimalNumeral::from_decimal(value);
            let payload = json!({
                "schema": SCHEMA,
                "decimal": value.to_string(),
                "numeral": numeral.to_string(),
            });
            emit(&output, format!("{numeral}\n"), payload)
        }
        AbacusCommand::Add { a, b, output } => {
            let lhs = AbacusState::from_numeral(&parse_numeral(&a)?)?;
            let rhs = AbacusState::from_numeral(&parse_numeral(&b)?)?;
            let (sum, trace) = abacus_add(&lhs, &rhs)?;
            let mut text = format!("sum: {} (decimal {})\n", sum.to_numeral(), sum.value());
            for step in &trace {
                text.push_str(&describe_step(step));
            }
            let payload = json!({
                "schema": SCHEMA,
                "a": lhs.to_numeral().to_string(),
                "b": rhs.to_numeral().to_string(),
                "sum": sum.to_numeral().to_string(),
                "decimal": sum.value(),
                "trace": trace,
            });
            emit(&output, text, payload)
        }
        AbacusCommand::Layout { digit, output } => {
            let slots = abacus_layout(digit)?;
            let mut text = format!("digit {digit}: {} of 60 slots filled\n", digit);
            // One line per orbit of the slot figure: ranks hold 6, 12, 18, 24 slots.
            let mut cursor = 0usize;
            for rank in 1..=4usize {
                let len = 6 * rank;
                let row: String = slots[cursor..cursor + len]
                    .iter()
                    .map(|&f| if f { '#' } else { '.' })
                    .collect();
                text.push_str(&format!("orbit {rank}: {row}\n"));
                cursor += len;
            }
            let payload = json!({
                "schema": SCHEMA,
                "digit": digit,
                "slots": slots,
            });
            emit(&output, text, payload)
        }
    }
}

fn describe_step(step: &CarryStep) -> String {
    if step.carry_out {
        format!(
            "place {}: {} tokens, sixty reduce to one carry token, {} remain\n",
            step.place,
            step.before,
            step.before - 60
        )
    } else {
        format!("place {}: {} tokens, no carry\n", step.place, step.before)
    }
}

fn chord_mode(args: &TableArgs) -> ChordMode {
    if args.half {
        ChordMode::Half
    } else {
        ChordMode::Full
    }
}

fn figure_kind(
    kind: RenderKind,
    max_rank: Option<u32>,
    numeral: Option<String>,
    parts: Option<u32>,
    n_per_wedge: Option<u32>,
) -> hexagesima::Result<FigureKind> {
    let missing = |flag: &str, kind: &str| {
        hexagesima::Error::Domain(format!("the {kind} figure requires --{flag}"))
    };
    Ok(match kind {
        RenderKind::Orbits => FigureKind::Orbits {
            max_rank: max_rank.ok_or_else(|| missing("max-rank", "orbits"))?,
        },
        RenderKind::Abacus => FigureKind::Abacus {
            numeral: parse_numeral(&numeral.ok_or_else(|| missing("numeral", "abacus"))?)?,
        },
        RenderKind::DivisionEqual => FigureKind::DivisionEqual {
            parts: parts.ok_or_else(|| missing("parts", "division-equal"))?,
        },
        RenderKind::DivisionUnequal => FigureKind::DivisionUnequal {
            n_per_wedge: n_per_wedge.ok_or_else(|| missing("n-per-wedge", "division-unequal"))?,
        },
        RenderKind::Star => FigureKind::Star,
        RenderKind::Calendar => FigureKind::Calendar,
    })
}

fn apply_canvas(spec: FigureSpec, canvas: &CanvasArgs) -> FigureSpec {
    let width = canvas.width.unwrap_or(spec.width);
    let height = canvas.height.unwrap_or(spec.height);
    spec.with_canvas(width, height)
}

fn emit(output: &OutputArgs, text: String, payload: serde_json::Value) -> hexagesima::Result<()> {
    let rendered = if output.json {
        format!("{payload}\n")
    } else {
        text
    };
    match &output.out {
        Some(path) => write_file(path, &rendered),
        None => {
            print!("{rendered}");
            Ok(())
        }
    }
}

fn write_svg(spec: &FigureSpec, out: Option<PathBuf>, svg: &str) -> hexagesima::Result<()> {
    match out {
        None => {
            print!("{svg}");
            Ok(())
        }
        Some(path) => {
            let target = if path.is_dir() {
                path.join(spec.kind.suggested_filename())
            } else {
                path
            };
            write_file(&target, svg)
        }
    }
}

fn write_file(path: &PathBuf, content: &str) -> hexagesima::Result<()> {
    fs::write(path, content)
        .map_err(|e| hexagesima::Error::Domain(format!("cannot write {}: {e}", path.display())))
}
