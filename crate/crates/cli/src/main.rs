//! Command-line front end: every library operation as a subcommand reading
//! and writing JSON, plus the full reproduction audit.

use std::collections::{BTreeMap, BTreeSet};
use std::fs;
use std::io::Write;
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use braidrep::analysis::{equal_image_witness, find_separating, reducibility_audit};
use braidrep::audit::{run_audit, AuditConfig, AuditSummary, Verdict};
use braidrep::catalog::{
    rep_burau, rep_lkb, symbolic_params, FamilyId, FamilyParams, ParamSampler, RelationReport,
    Representation, RepresentationJson,
};
use braidrep::classifier::{classify_solution, generate_system};
use braidrep::phi::{
    phi_extend, phi_match_closed_form, promote_to_group, solve_phi_match, PhiCoefficients, PhiMatch,
};
use braidrep::presentation::{build_presentation, Presentation, PresentationJson, Structure, Word};
use braidrep::scalar::{Field, RatFunc, Rational, Ring};
use clap::{Parser, Subcommand};
use serde_json::{json, Value};
use thiserror::Error;

#[derive(Parser)]
#[command(
    name = "braidrep",
    version,
    about = "Exact local representations of braid-like groups and monoids"
)]
struct Cli {
    /// Print human-readable tables instead of JSON.
    #[arg(long, global = true)]
    pretty: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Emit the presentation of a structure on n strands.
    Presentation { structure: String, n: usize },
    /// Emit a catalog representation: a local family (sampled, symbolic or
    /// with given parameters), burau or lkb.
    Catalog {
        family: String,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Comma-separated bindings such as `b=1,d=2,x=3`; missing ones are sampled.
        #[arg(long)]
        params: Option<String>,
        #[arg(long)]
        symbolic: bool,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Check a representation against the relations of a presentation file.
    Check {
        presentation: PathBuf,
        representation: PathBuf,
    },
    /// Match two-strand local images against the classified families.
    Classify { representation: PathBuf },
    /// Split off the last axis and look for further invariant lines.
    Reduce { representation: PathBuf },
    /// Compare the images of two words.
    Witness {
        representation: PathBuf,
        word_a: String,
        word_b: String,
        /// Search the catalog for a representation separating the words.
        #[arg(long)]
        certify: bool,
    },
    /// Extend a twisted virtual braid representation by t*S + u*S^-1 + v*I.
    PhiExtend {
        representation: PathBuf,
        #[arg(long, allow_hyphen_values = true)]
        t: String,
        #[arg(long, allow_hyphen_values = true)]
        u: String,
        #[arg(long, allow_hyphen_values = true)]
        v: String,
    },
    /// Match the first singular family against the extension family; bindings
    /// such as `a=2,b=1,x=1,f=3,g=1`, or --symbolic.
    PhiMatch {
        params: Option<String>,
        #[arg(long)]
        symbolic: bool,
    },
    /// Add inverses of the tau images.
    Promote { representation: PathBuf },
    /// Emit the polynomial system of the two-strand local ansatz.
    GenSystem {
        structure: String,
        /// Comma-separated rational values such as `q=0,r=0,s=1`.
        #[arg(long)]
        substitute: Option<String>,
    },
    /// Check every published claim.
    Audit {
        #[arg(long, default_value_t = 1)]
        seed: u64,
        #[arg(long, default_value_t = 50)]
        samples: usize,
        /// Comma-separated entry ids.
        #[arg(long)]
        only: Option<String>,
    },
}

#[derive(Debug, Error)]
enum CliError {
    /// Unreadable or malformed input.
    #[error("{0}")]
    Input(String),
    /// Valid input on which the operation is undefined.
    #[error("{0}")]
    Compute(String),
}

impl CliError {
    fn input(e: impl std::fmt::Display) -> Self {
        CliError::Input(e.to_string())
    }
    fn compute(e: impl std::fmt::Display) -> Self {
        CliError::Compute(e.to_string())
    }
}

/// Output document, human-readable rendering and success flag.
struct Output {
    json: Value,
    text: String,
    success: bool,
}

impl Output {
    fn ok(json: Value) -> Self {
        let text = serde_json::to_string_pretty(&json).expect("serializable");
        Output {
            json,
            text,
            success: true,
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(out) => {
            let body = if cli.pretty {
                out.text
            } else {
                serde_json::to_string_pretty(&out.json).expect("serializable")
            };
            // A closed pipe (e.g. `| head`) is not an error of the tool.
            let _ = writeln!(std::io::stdout().lock(), "{body}");
            ExitCode::from(if out.success { 0 } else { 1 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(match e {
                CliError::Input(_) => 2,
                CliError::Compute(_) => 1,
            })
        }
    }
}

fn run(command: Command) -> Result<Output, CliError> {
    match command {
        Command::Presentation { structure, n } => {
            let s: Structure = structure.parse().map_err(CliError::input)?;
            let p = build_presentation(s, n).map_err(CliError::input)?;
            Ok(Output::ok(
                serde_json::to_value(p.to_json()).expect("serializable"),
            ))
        }
        Command::Catalog {
            family,
            n,
            params,
            symbolic,
            seed,
        } => catalog(&family, n, params.as_deref(), symbolic, seed),
        Command::Check {
            presentation,
            representation,
        } => {
            let pj: PresentationJson = read_json(&presentation)?;
            let p = Presentation::from_json(&pj).map_err(CliError::input)?;
            match load(&representation)? {
                AnyRep::Rational(r) => check(&r, &p),
                AnyRep::Func(r) => check(&r, &p),
            }
        }
        Command::Classify { representation } => match load(&representation)? {
            AnyRep::Rational(r) => classify(&r),
            AnyRep::Func(r) => classify(&r),
        },
        Command::Reduce { representation } => match load(&representation)? {
            AnyRep::Rational(r) => reduce(&r),
            AnyRep::Func(r) => reduce(&r),
        },
        Command::Witness {
            representation,
            word_a,
            word_b,
            certify,
        } => {
            let a: Word = word_a.parse().map_err(CliError::input)?;
            let b: Word = word_b.parse().map_err(CliError::input)?;
            match load(&representation)? {
                AnyRep::Rational(r) => witness(&r, &a, &b, certify),
                AnyRep::Func(r) => witness(&r, &a, &b, certify),
            }
        }
        Command::PhiExtend {
            representation,
            t,
            u,
            v,
        } => match load(&representation)? {
            AnyRep::Rational(r) => extend(&r, [&t, &u, &v]),
            AnyRep::Func(r) => extend(&r, [&t, &u, &v]),
        },
        Command::PhiMatch { params, symbolic } => {
            if symbolic {
                phi_match(&symbolic_params(FamilyId::Eta(1), 2).map_err(CliError::compute)?)
            } else {
                let text =
                    params.ok_or_else(|| CliError::Input("give bindings or --symbolic".into()))?;
                let bindings = parse_bindings(&text)?;
                let p = FamilyParams::new(FamilyId::Eta(1), 2, bindings, ())
                    .map_err(CliError::input)?;
                phi_match(&p)
            }
        }
        Command::Promote { representation } => match load(&representation)? {
            AnyRep::Rational(r) => promote(&r),
            AnyRep::Func(r) => promote(&r),
        },
        Command::GenSystem {
            structure,
            substitute,
        } => {
            let s: Structure = structure.parse().map_err(CliError::input)?;
            let mut system = generate_system(s).map_err(CliError::input)?;
            if let Some(text) = substitute {
                system = system.substitute(&parse_bindings(&text)?);
            }
            let mut out = Output::ok(system.to_json());
            out.text = system
                .equations
                .iter()
                .map(|e| format!("{:<40} {}", e.provenance, e.poly))
                .collect::<Vec<_>>()
                .join("\n");
            Ok(out)
        }
        Command::Audit {
            seed,
            samples,
            only,
        } => {
            let only = only.map(|s| {
                s.split(',')
                    .map(|x| x.trim().to_string())
                    .collect::<BTreeSet<_>>()
            });
            let summary = run_audit(&AuditConfig {
                seed,
                samples,
                only,
            })
            .map_err(CliError::input)?;
            Ok(audit_output(&summary))
        }
    }
}

fn read_json<T: serde::de::DeserializeOwned>(path: &Path) -> Result<T, CliError> {
    let text = fs::read_to_string(path)
        .map_err(|e| CliError::Input(format!("{}: {e}", path.display())))?;
    serde_json::from_str(&text).map_err(|e| CliError::Input(format!("{}: {e}", path.display())))
}

enum AnyRep {
    Rational(Representation<Rational>),
    Func(Representation<RatFunc>),
}

/// Rational representations stay rational; every other ring is lifted into
/// its fraction field.
fn load(path: &Path) -> Result<AnyRep, CliError> {
    let json: RepresentationJson = read_json(path)?;
    let rep = if json.ring == "rational" {
        AnyRep::Rational(Representation::from_json(&json).map_err(CliError::input)?)
    } else {
        AnyRep::Func(Representation::from_json_lifted(&json).map_err(CliError::input)?)
    };
    Ok(rep)
}

fn parse_bindings(text: &str) -> Result<BTreeMap<String, Rational>, CliError> {
    text.split(',')
        .filter(|s| !s.trim().is_empty())
        .map(|pair| {
            let (k, v) = pair
                .split_once('=')
                .ok_or_else(|| CliError::Input(format!("expected name=value, got {pair}")))?;
            let value = Rational::parse_in(v.trim(), &()).map_err(CliError::input)?;
            Ok((k.trim().to_string(), value))
        })
        .collect()
}

fn rep_output<T: Ring>(rep: &Representation<T>) -> Output {
    let json = serde_json::to_value(rep.to_json()).expect("serializable");
    let mut out = Output::ok(json);
    out.text = rep
        .images()
        .iter()
        .map(|(g, m)| format!("{g}: {m}"))
        .collect::<Vec<_>>()
        .join("\n");
    out
}

fn catalog(
    family: &str,
    n: usize,
    params: Option<&str>,
    symbolic: bool,
    seed: u64,
) -> Result<Output, CliError> {
    let id: FamilyId = family.parse().map_err(CliError::input)?;
    match id {
        FamilyId::Burau => return Ok(rep_output(&rep_burau(n).map_err(CliError::input)?)),
        FamilyId::Lkb => return Ok(rep_output(&rep_lkb(n).map_err(CliError::input)?)),
        _ => {}
    }
    if symbolic {
        let p = symbolic_params(id, n).map_err(CliError::input)?;
        return Ok(rep_output(&p.build().map_err(CliError::compute)?));
    }
    let fixed = params.map(parse_bindings).transpose()?.unwrap_or_default();
    let p = ParamSampler::new(seed)
        .params(id, n, &fixed)
        .map_err(CliError::input)?;
    Ok(rep_output(&p.build().map_err(CliError::compute)?))
}

fn report_text<T: Ring>(report: &RelationReport<T>) -> String {
    report
        .checks
        .iter()
        .map(|c| {
            format!(
                "{} {:<32} {}",
                if c.holds { "PASS" } else { "FAIL" },
                c.tag,
                c.relation
            )
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn check<T: Ring>(rep: &Representation<T>, p: &Presentation) -> Result<Output, CliError> {
    let report = rep.check_against(p).map_err(CliError::input)?;
    Ok(Output {
        json: json!({
            "structure": p.structure.to_string(),
            "n": p.n,
            "passed": report.passed(),
            "total": report.checks.len(),
            "checks": report.to_json(),
        }),
        text: report_text(&report),
        success: report.all_hold(),
    })
}

fn classify<F: Field>(rep: &Representation<F>) -> Result<Output, CliError> {
    let c = classify_solution(rep).map_err(CliError::input)?;
    let text = match &c.first {
        Some(m) => format!(
            "family: {}\nbindings: {}\nall matches: {}",
            m.family,
            m.bindings
                .iter()
                .map(|(k, v)| format!("{k}={v}"))
                .collect::<Vec<_>>()
                .join(", "),
            c.all_matches
                .iter()
                .map(|f| f.to_string())
                .collect::<Vec<_>>()
                .join(", ")
        ),
        None => format!(
            "no family matches\nfailing relations: {}",
            c.failing_relations.join(", ")
        ),
    };
    Ok(Output {
        json: c.to_json(),
        text,
        success: c.first.is_some(),
    })
}

fn reduce<F: Field>(rep: &Representation<F>) -> Result<Output, CliError> {
    let r = reducibility_audit(rep).map_err(CliError::input)?;
    Ok(Output::ok(r.to_json()))
}

fn witness<T: Ring>(
    rep: &Representation<T>,
    a: &Word,
    b: &Word,
    certify: bool,
) -> Result<Output, CliError> {
    let mut w = equal_image_witness(rep, a, b).map_err(CliError::input)?;
    if certify {
        w.separating = find_separating(rep.n(), a, b);
    }
    Ok(Output::ok(w.to_json()))
}

fn extend<T: Ring>(rep: &Representation<T>, coeffs: [&str; 3]) -> Result<Output, CliError> {
    let [t, u, v] = coeffs.map(|s| T::parse_in(s, rep.ctx()));
    let c = PhiCoefficients::new(
        t.map_err(CliError::input)?,
        u.map_err(CliError::input)?,
        v.map_err(CliError::input)?,
    );
    Ok(rep_output(&phi_extend(rep, &c).map_err(CliError::compute)?))
}

fn phi_match<F: Field>(p: &FamilyParams<F>) -> Result<Output, CliError> {
    let m = solve_phi_match(p).map_err(CliError::compute)?;
    let closed = phi_match_closed_form(p).ok();
    let json = match &m {
        PhiMatch::Unique(c) => {
            let mut o = c.to_json();
            o["status"] = json!("unique");
            o["matches_closed_form"] = json!(closed.as_ref() == Some(c));
            o
        }
        PhiMatch::Underdetermined {
            rank,
            augmented_rank,
        } => json!({
            "status": "underdetermined", "rank": rank, "augmented_rank": augmented_rank,
            "matches_closed_form": false,
        }),
        PhiMatch::Inconsistent {
            rank,
            augmented_rank,
        } => json!({
            "status": "inconsistent", "rank": rank, "augmented_rank": augmented_rank,
            "matches_closed_form": false,
        }),
    };
    Ok(Output {
        success: !m.is_singular(),
        ..Output::ok(json)
    })
}

fn promote<T: Ring>(rep: &Representation<T>) -> Result<Output, CliError> {
    Ok(rep_output(
        &promote_to_group(rep).map_err(CliError::compute)?,
    ))
}

fn audit_output(summary: &AuditSummary) -> Output {
    let mut text = String::new();
    for e in &summary.entries {
        text.push_str(&format!(
            "{:<24} {:<8} {}\n",
            e.id,
            e.verdict.to_string().to_uppercase(),
            e.claim
        ));
        for d in &e.details {
            text.push_str(&format!("    {d}\n"));
        }
    }
    Output {
        json: serde_json::to_value(summary).expect("serializable"),
        text,
        success: summary.entries.iter().all(|e| e.verdict != Verdict::Fail),
    }
}
