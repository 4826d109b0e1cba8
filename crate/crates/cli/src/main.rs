//! Command line surface over the divided-powers library.
//!
//! Exit codes: 0 for success / affirmative verdicts, 1 for negative
//! verdicts (not supersymmetric, span gaps, failed suites, failed family
//! postconditions), 2 for usage, parse, and configuration errors.

mod doc;

use std::fs;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde::Serialize;

use divsym::catalog::{self, FamilySpec, GeneratorCase, PowerVariant};
use divsym::divalg::Context;
use divsym::spanalg::{span_check, SpanReport, SpanTarget};
use divsym::supersym::{basis_sk, expected_dim_11, marked_monomials, oracle_supersymmetric};
use divsym::verify;
use divsym::Element;

use doc::ElementDoc;

#[derive(Parser)]
#[command(
    name = "divsym",
    version,
    about = "Exact computations with supersymmetric elements of divided power algebras over F_p"
)]
struct Cli {
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, PartialEq, Eq, Default, ValueEnum)]
enum Format {
    #[default]
    Json,
    Text,
}

#[derive(Subcommand)]
enum Cmd {
    /// Per-degree dimensions of the supersymmetric components
    Dims {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, default_value_t = 0)]
        max_degree: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Echelonized basis of one degree, with its pivot (marked) monomials
    Basis {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Marked / unmarked split of the symmetrized monomials of one degree
    Marked {
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        degree: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Decide supersymmetry of an element file (ElementDoc JSON)
    Check {
        /// path to the element document
        file: PathBuf,
        /// print the witness when the element passes
        #[arg(long)]
        verbose: bool,
        /// read the file as text-format instead of JSON (context taken
        /// from --p/--m/--n)
        #[arg(long)]
        text: bool,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
    },
    /// Construct one catalog family element
    Family {
        /// family spec, e.g. E:t=4 or JEDEN:i=2,1;j=0
        #[arg(long)]
        spec: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
        #[arg(long, default_value_t = 1)]
        m: usize,
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Degree-by-degree span comparison of a generator list
    SpanCheck {
        /// one of: sym, m1, one-two, two-two, custom
        #[arg(long)]
        case: String,
        #[arg(long, default_value_t = 3)]
        p: u64,
        /// x-variable count for the sym / m1 cases
        #[arg(long, default_value_t = 2)]
        m: usize,
        /// y-variable count for the custom case
        #[arg(long, default_value_t = 1)]
        n: usize,
        #[arg(long)]
        max_degree: u64,
        /// pure-power range for the m1 case: s-ge-1 (default) or s-gt-1
        #[arg(long)]
        variant: Option<String>,
        /// generator file (JSON array of ElementDoc) for the custom case
        #[arg(long)]
        gens: Option<PathBuf>,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Run the verification suites
    Verify {
        /// suite id or `all`
        #[arg(long, default_value = "all")]
        suite: String,
        /// seed for any sampled checks (the shipped suites are exhaustive)
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, value_enum, default_value_t)]
        format: Format,
        #[arg(long)]
        out: Option<PathBuf>,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.cmd) {
        Ok(code) => code,
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn emit(text: String, out: &Option<PathBuf>) -> Result<(), String> {
    match out {
        Some(path) => fs::write(path, text.as_bytes()).map_err(|e| e.to_string()),
        None => {
            println!("{text}");
            Ok(())
        }
    }
}

fn context(p: u64, m: usize, n: usize) -> Result<Context, String> {
    Context::new(p, m, n).map_err(|e| e.to_string())
}

fn run(cmd: Cmd) -> Result<ExitCode, String> {
    match cmd {
        Cmd::Dims { p, m, n, max_degree, format, out } => {
            let ctx = context(p, m, n)?;
            let rows: Vec<DimRow> = (0..=max_degree)
                .map(|k| {
                    let dim = basis_sk(ctx, k).dim();
                    let predicted =
                        (m == 1 && n == 1).then(|| expected_dim_11(k, p));
                    DimRow { degree: k, dim, predicted, agree: predicted.map(|e| e == dim) }
                })
                .collect();
            let doc = DimsDoc { p, m, n, max_degree, rows };
            let text = match format {
                Format::Json => to_json(&doc)?,
                Format::Text => {
                    let mut lines = vec![format!("# dim S_k for p={p}, m={m}, n={n}")];
                    for r in &doc.rows {
                        match r.predicted {
                            Some(e) => lines.push(format!(
                                "{}\t{}\tpredicted {}\t{}",
                                r.degree,
                                r.dim,
                                e,
                                if r.agree == Some(true) { "ok" } else { "MISMATCH" }
                            )),
                            None => lines.push(format!("{}\t{}", r.degree, r.dim)),
                        }
                    }
                    lines.join("\n")
                }
            };
            emit(text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Basis { p, m, n, degree, format, out } => {
            let ctx = context(p, m, n)?;
            let basis = basis_sk(ctx, degree);
            let elements = basis.elements();
            let marked: Vec<String> = basis.pivots().iter().map(|mo| mo.to_string()).collect();
            let text = match format {
                Format::Json => {
                    let doc = BasisDoc {
                        p,
                        m,
                        n,
                        degree,
                        dimension: basis.dim(),
                        marked,
                        elements: elements.iter().map(ElementDoc::from_element).collect(),
                    };
                    to_json(&doc)?
                }
                Format::Text => {
                    let mut lines =
                        vec![format!("# basis of S_{degree}, dim {}", basis.dim())];
                    for (mono, elt) in basis.pivots().iter().zip(&elements) {
                        lines.push(format!("{mono}: {}", doc::render_text(elt)));
                    }
                    lines.join("\n")
                }
            };
            emit(text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Marked { p, m, n, degree, format, out } => {
            let ctx = context(p, m, n)?;
            let report = marked_monomials(ctx, degree);
            let marked: Vec<String> = report.marked.iter().map(|mo| mo.to_string()).collect();
            let unmarked: Vec<String> =
                report.unmarked.iter().map(|mo| mo.to_string()).collect();
            let text = match format {
                Format::Json => to_json(&MarkedDoc { p, m, n, degree, marked, unmarked })?,
                Format::Text => {
                    let mut lines = vec![format!("# degree {degree}")];
                    for mo in &marked {
                        lines.push(format!("marked\t{mo}"));
                    }
                    for mo in &unmarked {
                        lines.push(format!("unmarked\t{mo}"));
                    }
                    lines.join("\n")
                }
            };
            emit(text, &out)?;
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Check { file, verbose, text, p, m, n, format } => {
            let raw = fs::read_to_string(&file).map_err(|e| e.to_string())?;
            let element = if text {
                doc::parse_text(&raw, context(p, m, n)?)?
            } else {
                let parsed: ElementDoc =
                    serde_json::from_str(&raw).map_err(|e| e.to_string())?;
                parsed.to_element()?
            };
            match oracle_supersymmetric(&element) {
                Some(witness) => {
                    match format {
                        Format::Json => {
                            let doc = CheckDoc {
                                supersymmetric: true,
                                witness: verbose
                                    .then(|| ElementDoc::from_element(&witness)),
                            };
                            println!("{}", to_json(&doc)?);
                        }
                        Format::Text => {
                            println!("supersymmetric");
                            if verbose {
                                println!("witness: {}", doc::render_text(&witness));
                            }
                        }
                    }
                    Ok(ExitCode::SUCCESS)
                }
                None => {
                    match format {
                        Format::Json => println!(
                            "{}",
                            to_json(&CheckDoc { supersymmetric: false, witness: None })?
                        ),
                        Format::Text => println!("not supersymmetric"),
                    }
                    Ok(ExitCode::from(1))
                }
            }
        }
        Cmd::Family { spec, p, m, n, format, out } => {
            let ctx = context(p, m, n)?;
            let parsed = FamilySpec::parse(&spec).map_err(|e| e.to_string())?;
            match catalog::family_element(&parsed, ctx) {
                Ok(element) => {
                    let text = match format {
                        Format::Json => to_json(&ElementDoc::from_element(&element))?,
                        Format::Text => doc::render_text(&element),
                    };
                    emit(text, &out)?;
                    Ok(ExitCode::SUCCESS)
                }
                Err(divsym::Error::PostconditionFailed(msg)) => {
                    eprintln!("refused: {msg}");
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e.to_string()),
            }
        }
        Cmd::SpanCheck { case, p, m, n, max_degree, variant, gens, format, out } => {
            let powers = match variant.as_deref() {
                None | Some("s-ge-1") => PowerVariant::SGe1,
                Some("s-gt-1") => PowerVariant::SGt1,
                Some(other) => return Err(format!("unknown variant `{other}`")),
            };
            let (ctx, generators, target, label) = match case.to_lowercase().as_str() {
                "sym" => {
                    let ctx = context(p, m, 0)?;
                    let gens = catalog::theorem_generators(
                        GeneratorCase::Sym { m },
                        p,
                        max_degree,
                        powers,
                    )
                    .map_err(|e| e.to_string())?;
                    (ctx, gens, SpanTarget::SymX, format!("sym(m={m})"))
                }
                "m1" => {
                    let ctx = context(p, m, 1)?;
                    let gens = catalog::theorem_generators(
                        GeneratorCase::M1 { m },
                        p,
                        max_degree,
                        powers,
                    )
                    .map_err(|e| e.to_string())?;
                    (ctx, gens, SpanTarget::Supersym, format!("m1(m={m})"))
                }
                "one-two" => {
                    let ctx = context(p, 1, 2)?;
                    let gens =
                        catalog::theorem_generators(GeneratorCase::OneTwo, p, max_degree, powers)
                            .map_err(|e| e.to_string())?;
                    (ctx, gens, SpanTarget::Supersym, "one-two".to_string())
                }
                "two-two" => {
                    let ctx = context(p, 2, 2)?;
                    let gens =
                        catalog::theorem_generators(GeneratorCase::TwoTwo, p, max_degree, powers)
                            .map_err(|e| e.to_string())?;
                    (ctx, gens, SpanTarget::Supersym, "two-two".to_string())
                }
                "custom" => {
                    let path = gens.ok_or("custom case needs --gens FILE")?;
                    let raw = fs::read_to_string(&path).map_err(|e| e.to_string())?;
                    let docs: Vec<ElementDoc> =
                        serde_json::from_str(&raw).map_err(|e| e.to_string())?;
                    let ctx = context(p, m, n)?;
                    let mut gens = Vec::new();
                    for (i, d) in docs.iter().enumerate() {
                        if (d.p, d.m, d.n) != (p, m, n) {
                            return Err(format!("generator #{i} has a different context"));
                        }
                        gens.push((format!("custom#{i}"), d.to_element()?));
                    }
                    let target =
                        if n == 0 { SpanTarget::SymX } else { SpanTarget::Supersym };
                    (ctx, gens, target, "custom".to_string())
                }
                other => return Err(format!("unknown case `{other}`")),
            };
            let elements: Vec<Element> = generators.iter().map(|(_, e)| e.clone()).collect();
            let report =
                span_check(ctx, &elements, target, max_degree).map_err(|e| e.to_string())?;
            let doc = SpanDoc::build(&label, p, ctx.m(), ctx.n(), max_degree, &generators, &report);
            let text = match format {
                Format::Json => to_json(&doc)?,
                Format::Text => {
                    let mut lines = vec![format!(
                        "# span check {label}, p={p}, bound {max_degree}, {} generators",
                        generators.len()
                    )];
                    for d in &doc.degrees {
                        lines.push(format!(
                            "{}\t{}/{}\t{}",
                            d.degree,
                            d.achieved_dim,
                            d.target_dim,
                            if d.missing.is_empty() {
                                "full".to_string()
                            } else {
                                format!("missing {}", d.missing.join(", "))
                            }
                        ));
                    }
                    lines.join("\n")
                }
            };
            emit(text, &out)?;
            Ok(if report.has_gaps() { ExitCode::from(1) } else { ExitCode::SUCCESS })
        }
        Cmd::Verify { suite, seed, format, out } => {
            let _ = seed; // the shipped suites are exhaustive, not sampled
            let outcomes = if suite == "all" {
                verify::run_all().map_err(|e| e.to_string())?
            } else {
                match verify::run_suite(&suite) {
                    Some(res) => vec![res.map_err(|e| e.to_string())?],
                    None => {
                        return Err(format!(
                            "unknown suite `{suite}`; known: {} or all",
                            verify::SUITE_IDS.join(", ")
                        ))
                    }
                }
            };
            let all_passed = outcomes.iter().all(|o| o.passed);
            let text = match format {
                Format::Json => {
                    let docs: Vec<SuiteDoc> = outcomes
                        .iter()
                        .map(|o| SuiteDoc {
                            id: o.id.to_string(),
                            title: o.title.to_string(),
                            passed: o.passed,
                            details: o.details.clone(),
                        })
                        .collect();
                    to_json(&docs)?
                }
                Format::Text => {
                    let mut lines = Vec::new();
                    for o in &outcomes {
                        lines.push(format!(
                            "{} {}: {}",
                            if o.passed { "PASS" } else { "FAIL" },
                            o.id,
                            o.title
                        ));
                        for d in &o.details {
                            lines.push(format!("    {d}"));
                        }
                    }
                    lines.join("\n")
                }
            };
            emit(text, &out)?;
            Ok(if all_passed { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
    }
}

fn to_json<T: Serialize>(value: &T) -> Result<String, String> {
    serde_json::to_string_pretty(value).map_err(|e| e.to_string())
}

#[derive(Serialize)]
struct DimRow {
    degree: u64,
    dim: usize,
    #[serde(skip_serializing_if = "Option::is_none")]
    predicted: Option<usize>,
    #[serde(skip_serializing_if = "Option::is_none")]
    agree: Option<bool>,
}

#[derive(Serialize)]
struct DimsDoc {
    p: u64,
    m: usize,
    n: usize,
    max_degree: u64,
    rows: Vec<DimRow>,
}

#[derive(Serialize)]
struct BasisDoc {
    p: u64,
    m: usize,
    n: usize,
    degree: u64,
    dimension: usize,
    marked: Vec<String>,
    elements: Vec<ElementDoc>,
}

#[derive(Serialize)]
struct MarkedDoc {
    p: u64,
    m: usize,
    n: usize,
    degree: u64,
    marked: Vec<String>,
    unmarked: Vec<String>,
}

#[derive(Serialize)]
struct CheckDoc {
    supersymmetric: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    witness: Option<ElementDoc>,
}

#[derive(Serialize)]
struct SpanDegreeDoc {
    degree: u64,
    target_dim: usize,
    achieved_dim: usize,
    missing: Vec<String>,
}

#[derive(Serialize)]
struct SpanDoc {
    case: String,
    p: u64,
    m: usize,
    n: usize,
    max_degree: u64,
    generators: Vec<String>,
    degrees: Vec<SpanDegreeDoc>,
    gaps: bool,
}

impl SpanDoc {
    fn build(
        label: &str,
        p: u64,
        m: usize,
        n: usize,
        max_degree: u64,
        generators: &[(String, Element)],
        report: &SpanReport,
    ) -> Self {
        SpanDoc {
            case: label.to_string(),
            p,
            m,
            n,
            max_degree,
            generators: generators.iter().map(|(l, _)| l.clone()).collect(),
            degrees: report
                .degrees
                .iter()
                .map(|d| SpanDegreeDoc {
                    degree: d.degree,
                    target_dim: d.target_dim,
                    achieved_dim: d.achieved_dim,
                    missing: d.missing.iter().map(|mo| mo.to_string()).collect(),
                })
                .collect(),
            gaps: report.has_gaps(),
        }
    }
}

#[derive(Serialize)]
struct SuiteDoc {
    id: String,
    title: String,
    passed: bool,
    details: Vec<String>,
}
