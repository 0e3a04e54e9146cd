use std::fs;
use std::io::{self, Write};
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use gns::enumeration::{enumerate_family_with, maximal_elements};
use gns::export::{export_tree, gapset_list_document, ExportFormat};
use gns::fixtures;
use gns::plot::svg_plot;
use gns::theorems::{registry, verify_proposition, verify_teo_ani, GapPair};
use gns::{FamilyQuery, GapSet, Gns, GnsError, Mode, MonomialOrder, Point};

const EXIT_PARSE: u8 = 1;
const EXIT_INVALID: u8 = 2;
const EXIT_REFUTED: u8 = 3;
const EXIT_USAGE: u8 = 64;

#[derive(Parser)]
#[command(name = "gns", version, about = "Generalized numerical semigroups: invariants, families and checks")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Print the invariants of a gap set.
    Analyze(AnalyzeArgs),
    /// Print the enumeration tree of a family F(c; h1, ..., hn).
    Enumerate(FamilyArgs),
    /// Print the inclusion-maximal members of a family, canonically sorted.
    Maximals(FamilyArgs),
    /// Check a registered statement exhaustively up to a bound.
    Verify(VerifyArgs),
    /// Write the worked examples as JSON documents.
    Fixtures(FixturesArgs),
}

#[derive(Args)]
struct AnalyzeArgs {
    /// JSON gap-set document `{"d":2,"gaps":[[0,1],...]}`.
    #[arg(conflicts_with = "gaps", required_unless_present = "gaps")]
    file: Option<PathBuf>,
    /// Inline gaps, e.g. "0,1;1,0;1,1".
    #[arg(long, allow_hyphen_values = true)]
    gaps: Option<String>,
    /// Dimension, needed only for an empty inline gap list.
    #[arg(long)]
    dim: Option<usize>,
    /// Also write an SVG diagram (d = 2 only).
    #[arg(long, value_name = "PATH")]
    plot: Option<PathBuf>,
}

#[derive(Clone, Copy, ValueEnum)]
enum OnOff {
    On,
    Off,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Dot,
}

#[derive(Clone, Copy, ValueEnum)]
enum Order {
    Lex,
    Grlex,
}

#[derive(Args)]
struct FamilyArgs {
    /// Corner element, e.g. "3,2".
    #[arg(long)]
    corner: String,
    /// Forced gaps, e.g. "2,2;3,3".
    #[arg(long, default_value = "")]
    avoid: String,
    #[arg(long, value_enum, default_value = "lex")]
    order: Order,
    /// Generation rule (on) or visited-set deduplication (off).
    #[arg(long, value_enum, default_value = "on")]
    dedup: OnOff,
    /// Tree format; ignored by `maximals`.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Statement id; omit together with --list to print the registry.
    #[arg(long, required_unless_present = "list")]
    id: Option<String>,
    /// Sweep bound: every semigroup with corner <= bound.
    #[arg(long)]
    bound: Option<String>,
    /// First gap of a pair (teo-ani only).
    #[arg(long, requires = "g2")]
    g1: Option<String>,
    /// Second gap of a pair (teo-ani only).
    #[arg(long, requires = "g1")]
    g2: Option<String>,
    /// List the registered statements.
    #[arg(long)]
    list: bool,
}

#[derive(Args)]
struct FixturesArgs {
    /// Output directory, created if missing.
    #[arg(long, default_value = "fixtures")]
    dir: PathBuf,
}

/// A failure with its exit code.
struct Failure {
    code: u8,
    message: String,
}

impl Failure {
    fn new(code: u8, message: impl Into<String>) -> Self {
        Failure {
            code,
            message: message.into(),
        }
    }

    fn usage(e: GnsError) -> Self {
        Failure::new(EXIT_USAGE, e.to_string())
    }
}

type CliResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { EXIT_USAGE } else { 0 });
        }
    };
    let result = match cli.command {
        Command::Analyze(a) => analyze(a),
        Command::Enumerate(a) => enumerate(a),
        Command::Maximals(a) => maximals(a),
        Command::Verify(a) => verify(a),
        Command::Fixtures(a) => write_fixtures(a),
    };
    match result {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn emit(s: &str) -> Result<(), Failure> {
    let mut out = io::stdout().lock();
    out.write_all(s.as_bytes())
        .and_then(|()| out.flush())
        .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot write output: {e}")))
}

fn parse_point(s: &str) -> Result<Point, String> {
    let s = s.trim().trim_start_matches('(').trim_end_matches(')');
    let coords: Result<Vec<u32>, _> = s.split(',').map(|c| c.trim().parse::<u32>()).collect();
    match coords {
        Ok(c) if !c.is_empty() => Ok(Point::new(c)),
        _ => Err(format!("malformed point `{s}`")),
    }
}

/// Semicolon-separated points; the empty string is the empty list.
fn parse_points(s: &str) -> Result<Vec<Point>, String> {
    s.split(';')
        .filter(|p| !p.trim().is_empty())
        .map(parse_point)
        .collect()
}

fn usage_point(s: &str) -> Result<Point, Failure> {
    parse_point(s).map_err(|m| Failure::new(EXIT_USAGE, m))
}

/// Reads `{"d": n, "gaps": [[...], ...]}` into raw points.
fn read_document(text: &str) -> Result<(usize, Vec<Point>), Failure> {
    let parse = |m: String| Failure::new(EXIT_PARSE, format!("malformed document: {m}"));
    let v: serde_json::Value = serde_json::from_str(text).map_err(|e| parse(e.to_string()))?;
    let d = v
        .get("d")
        .and_then(serde_json::Value::as_u64)
        .ok_or_else(|| parse("missing integer field `d`".into()))?;
    let gaps = v
        .get("gaps")
        .and_then(serde_json::Value::as_array)
        .ok_or_else(|| parse("missing array field `gaps`".into()))?;
    let points = gaps
        .iter()
        .map(|g| {
            g.as_array()
                .and_then(|cs| {
                    cs.iter()
                        .map(|c| c.as_u64().and_then(|c| u32::try_from(c).ok()))
                        .collect::<Option<Vec<u32>>>()
                })
                .map(Point::new)
                .ok_or_else(|| parse(format!("gap `{g}` is not a list of coordinates")))
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok((d as usize, points))
}

fn analyze(a: AnalyzeArgs) -> CliResult {
    let (dim, points) = match (&a.file, &a.gaps) {
        (Some(path), _) => {
            let text = fs::read_to_string(path)
                .map_err(|e| Failure::new(EXIT_PARSE, format!("cannot read {}: {e}", path.display())))?;
            read_document(&text)?
        }
        (None, Some(inline)) => {
            let points = parse_points(inline).map_err(|m| Failure::new(EXIT_PARSE, m))?;
            let dim = match (a.dim, points.first()) {
                (Some(d), _) => d,
                (None, Some(p)) => p.dim(),
                (None, None) => {
                    return Err(Failure::new(EXIT_USAGE, "an empty gap list needs --dim"));
                }
            };
            (dim, points)
        }
        (None, None) => unreachable!("clap requires a file or --gaps"),
    };
    let invalid = |e: GnsError| Failure::new(EXIT_INVALID, format!("not a semigroup: {e}"));
    let gaps = GapSet::new(dim, points).map_err(invalid)?;
    let s = Gns::new(gaps).map_err(invalid)?;
    if let Some(path) = &a.plot {
        let svg = svg_plot(&s).map_err(|_| Failure::new(EXIT_USAGE, "--plot needs d = 2"))?;
        fs::write(path, svg)
            .map_err(|e| Failure::new(EXIT_USAGE, format!("cannot write {}: {e}", path.display())))?;
    }
    emit(&format!("{}\n", s.profile().to_json()))?;
    Ok(0)
}

fn query(a: &FamilyArgs) -> Result<FamilyQuery, Failure> {
    let corner = usage_point(&a.corner)?;
    let forced = parse_points(&a.avoid).map_err(|m| Failure::new(EXIT_USAGE, m))?;
    let order = match a.order {
        Order::Lex => MonomialOrder::Lex,
        Order::Grlex => MonomialOrder::Grlex,
    };
    let q = FamilyQuery::new(corner).forcing(forced).with_order(order);
    // validates the corner, the forced gaps and the box size up front
    q.frame().map_err(Failure::usage)?;
    Ok(q)
}

fn enumerate(a: FamilyArgs) -> CliResult {
    let q = query(&a)?;
    let mode = match a.dedup {
        OnOff::On => Mode::Dedup,
        OnOff::Off => Mode::Visited,
    };
    let tree = enumerate_family_with(&q, mode).map_err(Failure::usage)?;
    let format = match a.format {
        Format::Json => ExportFormat::Json,
        Format::Dot => ExportFormat::Dot,
    };
    emit(&export_tree(&tree, format))?;
    Ok(0)
}

fn maximals(a: FamilyArgs) -> CliResult {
    let q = query(&a)?;
    let list = maximal_elements(&q).map_err(Failure::usage)?;
    emit(&gapset_list_document(&q.corner, &q.forced_gaps, &list))?;
    Ok(0)
}

fn registry_listing() -> String {
    registry()
        .iter()
        .map(|s| format!("  {:<34} {}\n", s.id, s.summary))
        .collect()
}

fn verify(a: VerifyArgs) -> CliResult {
    if a.list {
        emit(&registry_listing())?;
        return Ok(0);
    }
    let id = a.id.expect("clap requires --id without --list");
    let report = match (&a.g1, &a.g2, &a.bound) {
        (Some(g1), Some(g2), _) => {
            if id != "teo-ani" {
                return Err(Failure::new(EXIT_USAGE, "--g1/--g2 apply to teo-ani only"));
            }
            let pair = GapPair::new(usage_point(g1)?, usage_point(g2)?).map_err(Failure::usage)?;
            verify_teo_ani(&pair).map_err(Failure::usage)?
        }
        (_, _, Some(bound)) => {
            let bound = usage_point(bound)?;
            verify_proposition(&id, &bound).map_err(|e| match e {
                GnsError::UnknownStatement(_) => Failure::new(
                    EXIT_USAGE,
                    format!("{e}; registered statements:\n{}", registry_listing()),
                ),
                other => Failure::usage(other),
            })?
        }
        _ => return Err(Failure::new(EXIT_USAGE, "verify needs --bound, or --g1 and --g2")),
    };
    emit(&format!("{}\n", report.to_json()))?;
    Ok(if report.counterexamples.is_empty() {
        0
    } else {
        EXIT_REFUTED
    })
}

fn write_fixtures(a: FixturesArgs) -> CliResult {
    let io_err = |e: io::Error| Failure::new(EXIT_USAGE, format!("cannot write fixtures: {e}"));
    fs::create_dir_all(&a.dir).map_err(io_err)?;
    let single = |s: Gns| format!("{}\n", s.gaps().to_json());
    let p = |c: [u32; 2]| Point::from(c);
    let family = |corner: Point, forced: Point, members: Vec<fixtures::Labelled>| {
        let mut list: Vec<Gns> = members.into_iter().map(|l| l.gns).collect();
        list.sort();
        gapset_list_document(&corner, [&forced], &list)
    };
    let maximal = |forced: [Point; 2], mut list: Vec<Gns>| {
        list.sort();
        gapset_list_document(&p([4, 4]), &forced, &list)
    };
    let files = [
        ("corner_43_example.json", single(fixtures::corner_43_example())),
        ("irreducible_53.json", single(fixtures::irreducible_53())),
        ("non_atom_44.json", single(fixtures::non_atom_44())),
        ("atom_three_special.json", single(fixtures::atom_three_special())),
        (
            "family_32_forcing_21.json",
            family(p([3, 2]), p([2, 1]), fixtures::family_32_forcing_21()),
        ),
        (
            "family_32_forcing_20.json",
            family(p([3, 2]), p([2, 0]), fixtures::family_32_forcing_20()),
        ),
        (
            "maximal_44_forcing_22_33.json",
            maximal([p([2, 2]), p([3, 3])], fixtures::maximal_44_forcing_22_33()),
        ),
        (
            "maximal_44_forcing_11_33.json",
            maximal([p([1, 1]), p([3, 3])], fixtures::maximal_44_forcing_11_33()),
        ),
    ];
    for (name, body) in &files {
        fs::write(a.dir.join(name), body).map_err(io_err)?;
    }
    let names: Vec<&str> = files.iter().map(|(n, _)| *n).collect();
    emit(&format!("{}\n", names.join("\n")))?;
    Ok(0)
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn point_lists() {
        assert_eq!(parse_points("2,2;3,3").unwrap(), vec![Point::from([2, 2]), Point::from([3, 3])]);
        assert_eq!(parse_points("").unwrap(), vec![]);
        assert_eq!(parse_point("(4, 3)").unwrap(), Point::from([4, 3]));
        assert!(parse_point("4,x").is_err());
        assert!(parse_points("1,2;;").unwrap().len() == 1);
    }
}
