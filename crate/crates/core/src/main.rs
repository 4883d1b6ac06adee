use std::fs;
use std::io::{self, Read, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use revlex_core::closedform::ClosedFormSpec;
use revlex_core::harness::{self, TrialConfig, DEFAULT_MAX_RESAMPLES};
use revlex_core::poly::text::{format_ideal_text, parse_polynomial_at};
use revlex_core::poly::variable_names;
use revlex_core::render::{staircase_ascii, staircase_svg};
use revlex_core::{buchberger, closed_form_initial_ideal, Domain, Error, Ideal, MonomialIdeal};

const EXIT_OK: u8 = 0;
const EXIT_FINDING: u8 = 1;
const EXIT_USAGE: u8 = 2;
const EXIT_DEGENERATE: u8 = 3;

#[derive(Parser)]
#[command(
    name = "revlex",
    version,
    about = "Grevlex Gröbner bases and weakly reverse lexicographic initial ideals"
)]
struct Cli {
    /// Coefficient field: `rational` or `prime:<p>`.
    #[arg(long, global = true)]
    field: Option<Domain>,

    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,

    #[arg(long, global = true, value_enum, default_value_t = Format::Text)]
    format: Format,

    /// Write output here instead of stdout (for `verify`: the JSON-lines trial log).
    #[arg(long, global = true)]
    out: Option<PathBuf>,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Text,
    Json,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Render {
    Ascii,
    Svg,
}

#[derive(Subcommand)]
enum Command {
    /// Reduced Gröbner basis and initial ideal of an ideal file or inline generators.
    Gb {
        /// Ideal file (`ring <k> vars over <domain>` then one generator per line); `-` for stdin.
        file: Option<PathBuf>,
        /// Inline generator, repeatable; used when no file is given.
        #[arg(long = "gen")]
        generators: Vec<String>,
        /// Variable count for inline generators.
        #[arg(long, default_value_t = 2)]
        nvars: usize,
    },
    /// Cross-check the two-variable closed form against Buchberger on a random generic pair.
    ClosedForm {
        n: u32,
        m: u32,
        #[arg(long, default_value_t = DEFAULT_MAX_RESAMPLES)]
        max_resamples: u32,
    },
    /// Weakly revlex / revlex classification of a JSON monomial ideal.
    CheckIdeal {
        /// JSON ideal `{"nvars": k, "generators": [[..], ..]}`; `-` for stdin.
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        closed_form: Option<Vec<u32>>,
        /// Degree bound for ideals that are not Artinian.
        #[arg(long)]
        bound: Option<u32>,
    },
    /// Draw the staircase of a two-variable monomial ideal.
    Staircase {
        file: Option<PathBuf>,
        #[arg(long, num_args = 2, value_names = ["N", "M"])]
        closed_form: Option<Vec<u32>>,
        #[arg(long, value_enum, default_value_t = Render::Ascii)]
        render: Render,
    },
    /// Randomized weakly-revlex campaign over generic ideals.
    Verify {
        #[arg(long, default_value_t = 2)]
        nvars: usize,
        #[arg(long, value_delimiter = ',', required_unless_present = "replay")]
        degrees: Vec<u32>,
        #[arg(long, default_value_t = 50)]
        trials: u64,
        #[arg(long, default_value_t = DEFAULT_MAX_RESAMPLES)]
        max_resamples: u32,
        /// Replay every record of an existing log and compare initial ideals.
        #[arg(long, conflicts_with = "degrees")]
        replay: Option<PathBuf>,
    },
}

struct Failure {
    code: u8,
    message: String,
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        let code = match e {
            Error::Degenerate(_) => EXIT_DEGENERATE,
            Error::Mismatch(_) => EXIT_FINDING,
            _ => EXIT_USAGE,
        };
        Failure {
            code,
            message: e.to_string(),
        }
    }
}

impl From<io::Error> for Failure {
    fn from(e: io::Error) -> Self {
        Error::from(e).into()
    }
}

type CmdResult = Result<u8, Failure>;

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(code) => ExitCode::from(code),
        Err(f) => {
            eprintln!("error: {}", f.message);
            ExitCode::from(f.code)
        }
    }
}

fn run(cli: &Cli) -> CmdResult {
    match &cli.command {
        Command::Gb {
            file,
            generators,
            nvars,
        } => cmd_gb(cli, file.as_deref(), generators, *nvars),
        Command::ClosedForm {
            n,
            m,
            max_resamples,
        } => cmd_closed_form(cli, *n, *m, *max_resamples),
        Command::CheckIdeal {
            file,
            closed_form,
            bound,
        } => cmd_check_ideal(
            cli,
            load_monomial_ideal(file.as_deref(), closed_form.as_deref())?,
            *bound,
        ),
        Command::Staircase {
            file,
            closed_form,
            render,
        } => cmd_staircase(
            cli,
            load_monomial_ideal(file.as_deref(), closed_form.as_deref())?,
            *render,
        ),
        Command::Verify {
            nvars,
            degrees,
            trials,
            max_resamples,
            replay,
        } => match replay {
            Some(log) => cmd_replay(cli, log, *max_resamples),
            None => {
                let mut config = TrialConfig::new(
                    *nvars,
                    degrees.clone(),
                    cli.field.unwrap_or_else(Domain::default_prime),
                    *trials,
                    cli.seed,
                );
                config.max_resamples = *max_resamples;
                cmd_verify(cli, &config)
            }
        },
    }
}

fn read_input(file: Option<&Path>) -> Result<String, Failure> {
    let mut text = String::new();
    match file {
        None => {
            io::stdin().read_to_string(&mut text)?;
        }
        Some(p) if p == Path::new("-") => {
            io::stdin().read_to_string(&mut text)?;
        }
        Some(p) => {
            text = fs::read_to_string(p)
                .map_err(|e| Failure::from(Error::InvalidSpec(format!("{}: {e}", p.display()))))?
        }
    }
    Ok(text)
}

fn emit(cli: &Cli, text: &str) -> Result<(), Failure> {
    match &cli.out {
        Some(path) => fs::write(path, text)?,
        None => io::stdout().write_all(text.as_bytes())?,
    }
    Ok(())
}

fn closed_form_spec(args: &[u32]) -> Result<ClosedFormSpec, Failure> {
    Ok(ClosedFormSpec::new(args[0], args[1])?)
}

fn load_monomial_ideal(
    file: Option<&Path>,
    closed_form: Option<&[u32]>,
) -> Result<MonomialIdeal, Failure> {
    if let Some(args) = closed_form {
        return Ok(closed_form_initial_ideal(closed_form_spec(args)?));
    }
    let text = read_input(file)?;
    serde_json::from_str(&text).map_err(|e| {
        Failure::from(Error::Parse {
            line: e.line(),
            column: e.column(),
            message: e.to_string(),
        })
    })
}

fn cmd_gb(cli: &Cli, file: Option<&Path>, inline: &[String], nvars: usize) -> CmdResult {
    let ideal = if file.is_some() || inline.is_empty() {
        let mut text = read_input(file)?;
        if let Some(field) = cli.field {
            text = override_header_domain(&text, field);
        }
        Ideal::parse(&text)?
    } else {
        let domain = cli.field.unwrap_or(Domain::Rationals);
        let names = variable_names(nvars);
        let gens = inline
            .iter()
            .enumerate()
            .map(|(k, g)| parse_polynomial_at(g, domain, &names, k + 1))
            .collect::<Result<Vec<_>, _>>()?;
        Ideal::new(domain, nvars, gens)?
    };
    let gb = buchberger(&ideal)?;
    let initial = gb.initial_ideal();
    let out = match cli.format {
        Format::Text => format!(
            "{}initial ideal: {}\n",
            format_ideal_text(gb.domain(), gb.nvars(), gb.elements()),
            serde_json::to_string(&initial).map_err(Error::from)?
        ),
        Format::Json => {
            let v = json!({
                "domain": gb.domain(),
                "nvars": gb.nvars(),
                "basis": gb.elements().iter().map(|g| g.to_string()).collect::<Vec<_>>(),
                "leading_monomials": gb.leading_monomials().iter().map(|m| m.to_string()).collect::<Vec<_>>(),
                "initial_ideal": initial,
            });
            format!(
                "{}\n",
                serde_json::to_string_pretty(&v).map_err(Error::from)?
            )
        }
    };
    emit(cli, &out)?;
    Ok(EXIT_OK)
}

/// Replaces the domain named in the header line when `--field` is given.
fn override_header_domain(text: &str, field: Domain) -> String {
    let mut done = false;
    text.lines()
        .map(|l| {
            let t = l.trim();
            if !done && t.starts_with("ring ") {
                done = true;
                if let Some(idx) = l.rfind(" over ") {
                    return format!("{} over {field}", &l[..idx]);
                }
            }
            l.to_string()
        })
        .collect::<Vec<_>>()
        .join("\n")
}

fn cmd_closed_form(cli: &Cli, n: u32, m: u32, max_resamples: u32) -> CmdResult {
    let spec = ClosedFormSpec::new(n, m)?;
    let domain = cli.field.unwrap_or_else(Domain::default_prime);
    let run = harness::run_closed_form(spec, domain, cli.seed, max_resamples)?;
    let report = &run.report;
    let out = match cli.format {
        Format::Json => format!("{}\n", serde_json::to_string(report).map_err(Error::from)?),
        Format::Text => {
            let mut s = format!(
                "closed form n = {n}, m = {m}, mu = {} over {domain} (seed {})\n",
                spec.mu(),
                cli.seed
            );
            let gens: Vec<String> = report
                .initial_ideal
                .generators()
                .iter()
                .rev()
                .map(|g| g.to_string())
                .collect();
            s.push_str(&format!("initial ideal: <{}>\n", gens.join(", ")));
            s.push_str(&format!(
                "agreement: {} (resamples {}, {} ms)\n",
                report.agreement, report.resamples, report.elapsed_ms
            ));
            if let Some(cv) = &run.validation {
                for (t, f) in cv.closed_form.polynomials().iter().enumerate() {
                    s.push_str(&format!("f{} = {f}\n", t + 1));
                }
            }
            if let Some(msg) = &report.mismatch {
                s.push_str(&format!("mismatch: {msg}\n"));
            }
            s
        }
    };
    emit(cli, &out)?;
    Ok(if report.agreement {
        EXIT_OK
    } else {
        EXIT_FINDING
    })
}

fn cmd_check_ideal(cli: &Cli, ideal: MonomialIdeal, bound: Option<u32>) -> CmdResult {
    let max_deg = ideal
        .generators()
        .iter()
        .map(|g| g.degree())
        .max()
        .unwrap_or(0);
    let bound = bound.unwrap_or(max_deg * ideal.nvars() as u32).max(max_deg);
    let wrl = ideal.is_weakly_revlex();
    let rl = ideal.is_revlex(bound);
    let count = ideal.standard_monomial_count().ok();
    let out = match cli.format {
        Format::Json => {
            let v = json!({
                "ideal": ideal,
                "artinian": ideal.is_artinian(),
                "weakly_revlex": wrl,
                "revlex": rl,
                "standard_monomials": count,
            });
            format!("{}\n", serde_json::to_string(&v).map_err(Error::from)?)
        }
        Format::Text => {
            let mut s = format!("weakly revlex: {}\n", wrl.holds);
            if let Some(w) = &wrl.witness {
                s.push_str(&format!(
                    "  generator {} is preceded by {} (not in the ideal)\n",
                    w.member, w.predecessor
                ));
            }
            let scope = if rl.exact {
                "exact".to_string()
            } else {
                format!("through degree {}", rl.checked_through)
            };
            s.push_str(&format!("revlex: {} ({scope})\n", rl.holds));
            if let Some(w) = &rl.witness {
                s.push_str(&format!(
                    "  member {} is preceded by {} (not in the ideal)\n",
                    w.member, w.predecessor
                ));
            }
            if let Some(c) = count {
                s.push_str(&format!("standard monomials: {c}\n"));
            }
            s
        }
    };
    emit(cli, &out)?;
    Ok(if wrl.holds { EXIT_OK } else { EXIT_FINDING })
}

fn cmd_staircase(cli: &Cli, ideal: MonomialIdeal, render: Render) -> CmdResult {
    let stairs = ideal.staircase()?;
    let out = match render {
        Render::Ascii => staircase_ascii(&stairs),
        Render::Svg => staircase_svg(&stairs),
    };
    emit(cli, &out)?;
    Ok(EXIT_OK)
}

fn cmd_verify(cli: &Cli, config: &TrialConfig) -> CmdResult {
    let summary = harness::run_campaign(config, cli.out.as_deref())?;
    let degrees = config.sorted_degrees();
    let line = match cli.format {
        Format::Json => serde_json::to_string(&json!({
            "nvars": config.nvars,
            "degrees": degrees,
            "domain": config.domain,
            "trials": summary.trials,
            "wrl_pass": summary.wrl_pass,
            "rl_pass": summary.rl_pass,
            "resumed": summary.resumed,
            "resamples": summary.resamples,
            "elapsed_ms": summary.elapsed_ms,
            "failures": summary.failures.iter().map(|r| r.trial).collect::<Vec<_>>(),
        }))
        .map_err(Error::from)?,
        Format::Text => format!(
            "nvars {} degrees {:?} over {}: {}/{} weakly revlex, {}/{} revlex ({} resumed, {} resamples, {} ms)",
            config.nvars,
            degrees,
            config.domain,
            summary.wrl_pass,
            summary.trials,
            summary.rl_pass,
            summary.trials,
            summary.resumed,
            summary.resamples,
            summary.elapsed_ms
        ),
    };
    println!("{line}");
    for rec in &summary.failures {
        eprintln!(
            "trial {} (seed {}) not weakly revlex: {}",
            rec.trial,
            rec.seed,
            serde_json::to_string(rec).map_err(Error::from)?
        );
    }
    if summary.all_wrl() {
        return Ok(EXIT_OK);
    }
    if config.theorem_applies() {
        eprintln!("error: a two-variable generic initial ideal failed the weakly revlex check; this contradicts the proved case and indicates a bug");
    }
    Ok(EXIT_FINDING)
}

fn cmd_replay(cli: &Cli, log: &Path, max_resamples: u32) -> CmdResult {
    let records = harness::read_log(log)?;
    let mut mismatched = Vec::new();
    for rec in &records {
        let again = harness::replay(rec, max_resamples)?;
        if again.initial_ideal != rec.initial_ideal
            || again.wrl != rec.wrl
            || again.resamples != rec.resamples
        {
            mismatched.push(rec.trial);
        }
    }
    let line = match cli.format {
        Format::Json => serde_json::to_string(&json!({
            "records": records.len(),
            "reproduced": records.len() - mismatched.len(),
            "mismatched": mismatched,
        }))
        .map_err(Error::from)?,
        Format::Text => format!(
            "{}/{} records reproduced{}",
            records.len() - mismatched.len(),
            records.len(),
            if mismatched.is_empty() {
                String::new()
            } else {
                format!("; mismatched trials {mismatched:?}")
            }
        ),
    };
    println!("{line}");
    Ok(if mismatched.is_empty() {
        EXIT_OK
    } else {
        EXIT_FINDING
    })
}
