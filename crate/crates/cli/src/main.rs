//! Command-line front end: parameter parsing, pipeline dispatch, and
//! deterministic JSON/CSV/SVG emission.

mod emit;
mod graph;
mod render;

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};
use num::rational::BigRational;
use num::FromPrimitive;

use pqtiling::geom::build::{generation_ceiling, Tessellation};
use pqtiling::geom::types::TypedTessellation;
use pqtiling::verify::{run_all, ClaimStatus};
use pqtiling::{spectral, Error, Substitution, TilingParams};

use emit::{array, esc, f17, write_out};
use render::ColorBy;

/// A command failure carrying its process exit code.
pub struct Failure {
    pub code: u8,
    pub message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Failure {
        let code = match &e {
            Error::NotATiling { .. } | Error::UnsupportedFamily { .. } => 2,
            Error::CeilingExceeded { .. }
            | Error::WordCapExceeded { .. }
            | Error::ToleranceCollision { .. } => 3,
            _ => 1,
        };
        Failure { code, message: e.to_string() }
    }
}

const COUNTS_SCHEMA: &str = "Output schemas:\n  csv:  header `n,u,utilde`, one row per generation; `u` is the face \
     count of generation n, `utilde` is the seeded count driving it \
     (u[n] = p * utilde[n-1]) and is empty on the n = 0 row.\n  json: {\"p\",\"q\",\"n_max\",\"rows\":[{\"n\",\"u\",\"utilde\"}]} in that field \
     order; `u`/`utilde` are decimal strings, `utilde` null at n = 0.\n  text: the same table, aligned.";

const SPECTRUM_SCHEMA: &str = "Output schema (json): {\"p\",\"q\",\"alphabet\",\"matrix\",\"char_poly\",\
     \"closed_form\",\"closed_form_match\",\"nontrivial_factor\",\"sccs\",\
     \"perron\",\"growth\",\"recurrence\",\"unit_circle\"} in that field order.\n  matrix[i][j] = multiplicity of letter j in the image of letter i;\n  polynomial coefficient lists are exact integers, ascending by degree;\n  closed_form/closed_form_match are null when no closed form is recorded;\n  sccs lists {\"members\",\"imprimitivity\"} over alphabet indices;\n  perron = {\"lo\",\"hi\",\"exact\"} with exact rational endpoint strings\n  plus float renderings at 17 significant digits;\n  recurrence = {\"start\",\"coefficients\"}: counts obey\n  utilde[n] = sum_i coefficients[i] * utilde[n-1-i] for n >= start;\n  unit_circle = {\"moduli\",\"max_deviation\"} over the nontrivial factor's\n  roots other than the growth rate and its reciprocal.";

const VERIFY_SCHEMA: &str = "Output schema (json): array of {\"claim\",\"p\",\"q\",\"status\",\"reason\",\
     \"evidence\"} in that field order; status is \"pass\", \"fail\" or \
     \"skipped\"; reason is null unless skipped. Exit code 0 iff no check \
     fails. Output is byte-identical across runs with identical flags.";

const DUMP_SCHEMA: &str = "Output schema (json): {\"params\":{\"p\",\"q\"},\"max_gen\",\"vertices\",\
     \"edges\",\"faces\"} in that field order. The vertices are the tiles \
     of the ball (the dual graph) as {\"id\",\"gen\",\"x\",\"y\"[,\"z\"]}, with \
     center coordinates at 17 significant digits (z only for hyperbolic \
     tilings); edges are [id,id] pairs of tiles sharing an edge, ascending; \
     faces are counterclockwise tile rings around fully surrounded tiling \
     vertices, in vertex creation order.";

const RENDER_SCHEMA: &str = "Output is a standalone SVG: one <path> per face of generation <= n \
     (fill cycles a fixed 10-color palette by generation or by decoded \
     type), a boundary <circle> for hyperbolic tilings, and with --tree one \
     <line> per production edge of the face tree.";

#[derive(Parser)]
#[command(
    name = "pqtiling",
    version,
    about = "Substitution combinatorics and geometry of regular tilings {p,q}",
    long_about = "Substitution combinatorics and geometry of regular tilings {p,q}: \
        per-generation face counts, exact spectral data of the substitution \
        matrix, an independent geometric cross-check suite, SVG rendering \
        and dual-graph dumps.\n\nThe environment variable TESSEL_CEILING \
        overrides the built-in depth ceiling of the geometric engine."
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Csv,
    Json,
    Svg,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum ColorArg {
    Gen,
    Type,
}

#[derive(Args)]
struct ParamArgs {
    /// Edges per tile (the p of {p,q}).
    #[arg(short)]
    p: u32,
    /// Tiles around each vertex (the q of {p,q}).
    #[arg(short)]
    q: u32,
}

#[derive(Subcommand)]
enum Command {
    /// Per-generation face counts u_n and seeded counts utilde_n.
    #[command(after_help = COUNTS_SCHEMA)]
    Counts {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest generation to report.
        #[arg(short, default_value_t = 10)]
        n: u32,
        /// Output format.
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(short)]
        output: Option<PathBuf>,
        /// Ceiling on materialized word length for the internal word/count
        /// cross-check; generations whose word would exceed it are checked
        /// by count vectors alone.
        #[arg(long, default_value_t = 10_000_000)]
        word_cap: usize,
    },
    /// Exact spectral data of the substitution transition matrix.
    #[command(after_help = SPECTRUM_SCHEMA)]
    Spectrum {
        #[command(flatten)]
        params: ParamArgs,
        /// Output format (text or json).
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(short)]
        output: Option<PathBuf>,
        /// Width tolerance for the certified growth-rate bracket.
        #[arg(long, default_value_t = 1e-9)]
        tol: f64,
    },
    /// Run the verification suite of combinatorial claims.
    #[command(after_help = VERIFY_SCHEMA)]
    Verify {
        #[command(flatten)]
        params: ParamArgs,
        /// Depth budget for the geometric checks (clamped to the engine
        /// ceiling per check).
        #[arg(short, default_value_t = 4)]
        n: u32,
        /// Output format (text or json).
        #[arg(long, value_enum, default_value_t = Format::Text)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Render the tiling ball as an SVG image.
    #[command(after_help = RENDER_SCHEMA)]
    Render {
        #[command(flatten)]
        params: ParamArgs,
        /// Largest generation to draw.
        #[arg(short, default_value_t = 3)]
        n: u32,
        /// Color faces by generation or by decoded type.
        #[arg(long, value_enum, default_value_t = ColorArg::Gen)]
        color: ColorArg,
        /// Overlay the production tree (each face joined to the children
        /// its type's rule produces).
        #[arg(long)]
        tree: bool,
        /// Output format (svg).
        #[arg(long, value_enum, default_value_t = Format::Svg)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(short)]
        output: Option<PathBuf>,
    },
    /// Dump the dual graph of the tiling ball as JSON.
    #[command(name = "dump-graph", after_help = DUMP_SCHEMA)]
    DumpGraph {
        #[command(flatten)]
        params: ParamArgs,
        /// Depth of the ball to build.
        #[arg(short, default_value_t = 3)]
        n: u32,
        /// Output format (json).
        #[arg(long, value_enum, default_value_t = Format::Json)]
        format: Format,
        /// Write to this file instead of stdout.
        #[arg(short)]
        output: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result = match cli.command {
        Command::Counts { params, n, format, output, word_cap } => {
            cmd_counts(&params, n, format, &output, word_cap)
        }
        Command::Spectrum { params, format, output, tol } => {
            cmd_spectrum(&params, format, &output, tol)
        }
        Command::Verify { params, n, format, output } => cmd_verify(&params, n, format, &output),
        Command::Render { params, n, color, tree, format, output } => {
            cmd_render(&params, n, color, tree, format, &output)
        }
        Command::DumpGraph { params, n, format, output } => {
            cmd_dump_graph(&params, n, format, &output)
        }
    };
    match result {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

/// Validates `{p,q}`, spelling out the rejection rule for the one family
/// of admissible tilings the substitution construction does not cover.
fn validated(args: &ParamArgs) -> Result<TilingParams, Failure> {
    TilingParams::new(args.p, args.q).map_err(|e| {
        let mut f = Failure::from(e);
        if args.q == 4 && args.p >= 5 {
            f.message =
                format!("{}: q=4 with p>=5 is not covered by the rule set (q=4 only at p=4)", f.message);
        }
        f
    })
}

fn format_guard(format: Format, allowed: &[Format], command: &str) -> Result<(), Failure> {
    if allowed.contains(&format) {
        Ok(())
    } else {
        Err(Failure {
            code: 2,
            message: format!("format not supported by `{command}`"),
        })
    }
}

fn cmd_counts(
    args: &ParamArgs,
    n: u32,
    format: Format,
    output: &Option<PathBuf>,
    word_cap: usize,
) -> Result<(), Failure> {
    format_guard(format, &[Format::Text, Format::Csv, Format::Json], "counts")?;
    let params = validated(args)?;
    let subst = Substitution::new(params);
    let u = subst.u_sequence(n);
    let ut = if n == 0 { Vec::new() } else { subst.utilde_sequence(n - 1) };

    // Cross-check the count vectors against literally materialized words,
    // as far as the cap allows.
    let mut word = vec![pqtiling::Letter::axiom()];
    for m in 0..=n {
        if m > 0 {
            let next_len: usize = word.iter().map(|&l| subst.image(l).len()).sum();
            if next_len > word_cap {
                break;
            }
            word = subst.apply(&word);
        }
        if num::BigUint::from(word.len()) != u[m as usize] {
            return Err(Failure {
                code: 1,
                message: format!(
                    "internal disagreement at n={m}: word length {} vs count {}",
                    word.len(),
                    u[m as usize]
                ),
            });
        }
    }

    let content = match format {
        Format::Csv => {
            let mut s = String::from("n,u,utilde\n");
            for m in 0..=n as usize {
                let tilde = if m == 0 { String::new() } else { ut[m - 1].to_string() };
                s.push_str(&format!("{m},{},{tilde}\n", u[m]));
            }
            s
        }
        Format::Json => {
            let rows = (0..=n as usize).map(|m| {
                let tilde = if m == 0 {
                    "null".to_string()
                } else {
                    format!("\"{}\"", ut[m - 1])
                };
                format!("{{\"n\":{m},\"u\":\"{}\",\"utilde\":{tilde}}}", u[m])
            });
            format!(
                "{{\"p\":{},\"q\":{},\"n_max\":{n},\"rows\":{}}}\n",
                params.p(),
                params.q(),
                array(rows)
            )
        }
        _ => {
            let wu = u.iter().map(|x| x.to_string().len()).max().unwrap_or(1).max(1);
            let mut s = format!("face counts of {{{},{}}} by generation\n", params.p(), params.q());
            s.push_str(&format!("{:>4}  {:>wu$}  {}\n", "n", "u", "utilde"));
            for m in 0..=n as usize {
                let tilde = if m == 0 { "-".to_string() } else { ut[m - 1].to_string() };
                s.push_str(&format!("{m:>4}  {:>wu$}  {tilde}\n", u[m].to_string()));
            }
            s
        }
    };
    write_out(output, &content)
}

fn poly_json(p: &pqtiling::IntPolynomial) -> String {
    array(p.coeffs().iter().map(|c| c.to_string()))
}

fn poly_text(p: &pqtiling::IntPolynomial) -> String {
    let coeffs: Vec<String> = p.coeffs().iter().map(|c| c.to_string()).collect();
    format!("[{}]", coeffs.join(", "))
}

fn cmd_spectrum(
    args: &ParamArgs,
    format: Format,
    output: &Option<PathBuf>,
    tol: f64,
) -> Result<(), Failure> {
    format_guard(format, &[Format::Text, Format::Json], "spectrum")?;
    let params = validated(args)?;
    if !(tol > 0.0) {
        return Err(Failure { code: 2, message: "--tol must be positive".into() });
    }
    let tol = BigRational::from_f64(tol)
        .ok_or_else(|| Failure { code: 2, message: "--tol must be finite".into() })?;
    let subst = Substitution::new(params);
    let report = spectral::analyze(&subst, &tol)?;

    let content = if format == Format::Json {
        let alphabet = array(report.alphabet.iter().map(|a| format!("\"{}\"", esc(a))));
        let matrix = array(
            (0..report.matrix.dim())
                .map(|i| array(report.matrix.row(i).iter().map(|x| x.to_string()))),
        );
        let closed_form =
            report.closed_form.as_ref().map_or("null".to_string(), poly_json);
        let closed_match = report
            .closed_form_match
            .map_or("null".to_string(), |b| b.to_string());
        let sccs = array(report.sccs.iter().map(|s| {
            format!(
                "{{\"members\":{},\"imprimitivity\":{}}}",
                array(s.members.iter().map(|m| m.to_string())),
                s.imprimitivity
            )
        }));
        let growth = match report.growth {
            spectral::GrowthClass::Linear => "linear",
            spectral::GrowthClass::Exponential => "exponential",
        };
        let recurrence = format!(
            "{{\"start\":{},\"coefficients\":{}}}",
            report.recurrence_start + report.recurrence.len(),
            array(report.recurrence.iter().map(|c| c.to_string()))
        );
        let unit_circle = format!(
            "{{\"moduli\":{},\"max_deviation\":{}}}",
            array(report.unit_circle.moduli.iter().map(|m| f17(*m))),
            f17(report.unit_circle.max_deviation)
        );
        format!(
            "{{\"p\":{},\"q\":{},\"alphabet\":{alphabet},\"matrix\":{matrix},\
             \"char_poly\":{},\"closed_form\":{closed_form},\"closed_form_match\":{closed_match},\
             \"nontrivial_factor\":{},\"sccs\":{sccs},\
             \"perron\":{{\"lo\":\"{}\",\"hi\":\"{}\",\"lo_f64\":{},\"hi_f64\":{},\"exact\":{}}},\
             \"growth\":\"{growth}\",\"recurrence\":{recurrence},\"unit_circle\":{unit_circle}}}\n",
            params.p(),
            params.q(),
            poly_json(&report.char_poly),
            poly_json(&report.nontrivial_factor),
            report.perron.lo,
            report.perron.hi,
            f17(pqtiling::roots::rational_to_f64(&report.perron.lo)),
            f17(pqtiling::roots::rational_to_f64(&report.perron.hi)),
            report.perron.exact,
        )
    } else {
        let mut s = format!("spectral data of {{{},{}}}\n", params.p(), params.q());
        s.push_str(&format!("alphabet: {}\n", report.alphabet.join(", ")));
        s.push_str("transition matrix (row i, column j: letters j in the image of i):\n");
        for i in 0..report.matrix.dim() {
            let row: Vec<String> = report.matrix.row(i).iter().map(|x| x.to_string()).collect();
            s.push_str(&format!("  [{}]\n", row.join(" ")));
        }
        s.push_str(&format!(
            "characteristic polynomial (ascending): {}\n",
            poly_text(&report.char_poly)
        ));
        match (&report.closed_form, report.closed_form_match) {
            (Some(cf), Some(ok)) => {
                s.push_str(&format!(
                    "recorded closed form: {} (match up to sign: {ok})\n",
                    poly_text(cf)
                ));
            }
            _ => s.push_str("recorded closed form: none for this family\n"),
        }
        s.push_str(&format!(
            "nontrivial factor after unit-root split: {}\n",
            poly_text(&report.nontrivial_factor)
        ));
        for scc in &report.sccs {
            let members: Vec<&str> =
                scc.members.iter().map(|&i| report.alphabet[i].as_str()).collect();
            s.push_str(&format!(
                "component {{{}}}: imprimitivity {}\n",
                members.join(", "),
                scc.imprimitivity
            ));
        }
        if report.perron.exact {
            s.push_str(&format!("growth rate: exactly {}\n", report.perron.lo));
        } else {
            s.push_str(&format!(
                "growth rate in [{:.12}, {:.12}] (width <= {:.1e})\n",
                pqtiling::roots::rational_to_f64(&report.perron.lo),
                pqtiling::roots::rational_to_f64(&report.perron.hi),
                pqtiling::roots::rational_to_f64(&report.perron.width()),
            ));
        }
        s.push_str(&format!(
            "growth class: {}\n",
            match report.growth {
                spectral::GrowthClass::Linear => "linear",
                spectral::GrowthClass::Exponential => "exponential",
            }
        ));
        let coeffs: Vec<String> = report.recurrence.iter().map(|c| c.to_string()).collect();
        s.push_str(&format!(
            "recurrence: utilde[n] = {} for n >= {}\n",
            coeffs
                .iter()
                .enumerate()
                .map(|(i, c)| format!("({c})*utilde[n-{}]", i + 1))
                .collect::<Vec<_>>()
                .join(" + "),
            report.recurrence_start + report.recurrence.len(),
        ));
        if report.unit_circle.moduli.is_empty() {
            s.push_str("other nontrivial-factor roots: none\n");
        } else {
            let moduli: Vec<String> =
                report.unit_circle.moduli.iter().map(|m| format!("{m:.12}")).collect();
            s.push_str(&format!(
                "other nontrivial-factor root moduli: {} (max distance from 1: {:.3e})\n",
                moduli.join(", "),
                report.unit_circle.max_deviation
            ));
        }
        s
    };
    write_out(output, &content)
}

fn cmd_verify(
    args: &ParamArgs,
    n: u32,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    format_guard(format, &[Format::Text, Format::Json], "verify")?;
    let params = validated(args)?;
    let reports = run_all(params.p(), params.q(), n);
    let failed = reports.iter().filter(|r| r.status == ClaimStatus::Fail).count();

    let content = if format == Format::Json {
        let items = reports.iter().map(|r| {
            let (status, reason) = match &r.status {
                ClaimStatus::Pass => ("pass", "null".to_string()),
                ClaimStatus::Fail => ("fail", "null".to_string()),
                ClaimStatus::Skipped(why) => ("skipped", format!("\"{}\"", esc(why))),
            };
            format!(
                "{{\"claim\":\"{}\",\"p\":{},\"q\":{},\"status\":\"{status}\",\"reason\":{reason},\"evidence\":\"{}\"}}",
                esc(r.claim),
                r.p,
                r.q,
                esc(&r.evidence)
            )
        });
        format!("{}\n", array(items))
    } else {
        let wide = reports.iter().map(|r| r.claim.len()).max().unwrap_or(5);
        let mut s = format!("verification of {{{},{}}} at depth {n}\n", params.p(), params.q());
        for r in &reports {
            let status = match &r.status {
                ClaimStatus::Pass => "pass".to_string(),
                ClaimStatus::Fail => "FAIL".to_string(),
                ClaimStatus::Skipped(why) => format!("skipped ({why})"),
            };
            s.push_str(&format!("{:<wide$}  {:<7} {}\n", r.claim, status, r.evidence));
        }
        let skipped = reports
            .iter()
            .filter(|r| matches!(r.status, ClaimStatus::Skipped(_)))
            .count();
        s.push_str(&format!(
            "{} checks: {} pass, {failed} fail, {skipped} skipped\n",
            reports.len(),
            reports.len() - failed - skipped,
        ));
        s
    };
    write_out(output, &content)?;
    if failed > 0 {
        return Err(Failure { code: 1, message: format!("{failed} check(s) failed") });
    }
    Ok(())
}

fn cmd_render(
    args: &ParamArgs,
    n: u32,
    color: ColorArg,
    tree: bool,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    format_guard(format, &[Format::Svg], "render")?;
    let params = validated(args)?;
    let needs_types = tree || color == ColorArg::Type;
    let build_depth = if needs_types { n + params.k() } else { n };
    let ceiling = generation_ceiling(params);
    if build_depth > ceiling {
        return Err(Failure {
            code: 3,
            message: format!(
                "drawing generation {n}{} needs a depth-{build_depth} ball, above the ceiling {ceiling} for {{{},{}}}",
                if needs_types { " with type decoding" } else { "" },
                params.p(),
                params.q(),
            ),
        });
    }
    let tess = Tessellation::build(params, build_depth)?;
    let subst = Substitution::new(params);
    let typed = needs_types.then(|| TypedTessellation::analyze(&tess, &subst));
    let color = match color {
        ColorArg::Gen => ColorBy::Gen,
        ColorArg::Type => ColorBy::Type,
    };
    let content = render::svg(&tess, typed.as_ref(), n, color, tree)?;
    write_out(output, &content)
}

fn cmd_dump_graph(
    args: &ParamArgs,
    n: u32,
    format: Format,
    output: &Option<PathBuf>,
) -> Result<(), Failure> {
    format_guard(format, &[Format::Json], "dump-graph")?;
    let params = validated(args)?;
    let tess = Tessellation::build(params, n)?;
    write_out(output, &graph::dump(&tess))
}
