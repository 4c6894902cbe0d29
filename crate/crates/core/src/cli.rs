//! Command-line front end.
//!
//! Exit codes: 0 when every check passed, 2 when a mathematical violation
//! was found, 1 on usage, parse, or validation errors.

use std::fs::File;
use std::io::{BufWriter, Write};
use std::path::PathBuf;

use clap::{Args, Parser, Subcommand, ValueEnum};
use serde::Serialize;

use crate::constructors::Builder;
use crate::error::{Error, Result};
use crate::group::{Element, FiniteGroup, Subgroup};
use crate::group_spec::GroupSpec;
use crate::psi::{psi, psi_rel};
use crate::structure::{all_subgroups, generated_subgroup, generators, is_nilpotent, is_normal};
use crate::verify::{self, Family, ScanOptions, Suite, VerificationReport};
use crate::BitSet;

pub const EXIT_OK: u8 = 0;
pub const EXIT_ERROR: u8 = 1;
pub const EXIT_VIOLATION: u8 = 2;

/// Group specs: cyclic:N | abelian:a,b,.. | dihedral:M (order 2M) | dicyclic:M (order 4M) |
/// sym:K | alt:K | heisenberg:P | product(SPEC;SPEC) | file:PATH | perm:PATH
#[derive(Debug, Parser)]
#[command(
    name = "psigroup",
    version,
    about = "Sums of relative element orders over finite groups",
    verbatim_doc_comment
)]
pub struct Cli {
    /// Largest group order any command will build.
    #[arg(long, global = true, env = "PSIGROUP_CAP", default_value_t = crate::DEFAULT_CAP)]
    cap: usize,

    #[command(subcommand)]
    command: Command,
}

#[derive(Debug, Subcommand)]
enum Command {
    /// Print ψ(G), or ψ_H(G) for a chosen subgroup H.
    Psi(PsiArgs),
    /// List the subgroup lattice.
    Subgroups(SubgroupsArgs),
    /// Run verification suites over catalog families or explicit groups.
    Verify(VerifyArgs),
    /// Print the subgroups attaining equality with the cyclic bound.
    CheckEquality(SpecArg),
}

#[derive(Debug, Args)]
struct SpecArg {
    /// Group spec, e.g. dihedral:4 or product(cyclic:3;sym:3).
    spec: String,
}

#[derive(Debug, Args)]
struct PsiArgs {
    spec: String,
    /// Comma-separated element indices generating H.
    #[arg(
        long,
        alias = "subgroup-gen",
        value_delimiter = ',',
        conflicts_with = "subgroup_bits"
    )]
    subgroup: Option<Vec<Element>>,
    /// H as a hex membership bitset (bit i = element i).
    #[arg(long)]
    subgroup_bits: Option<String>,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ListFormat {
    Table,
    Json,
}

#[derive(Debug, Args)]
struct SubgroupsArgs {
    spec: String,
    #[arg(long, value_enum, default_value_t = ListFormat::Table)]
    format: ListFormat,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq, ValueEnum)]
enum SuiteArg {
    Theorem,
    Conjecture,
    Lemmas,
    Multiplicativity,
    All,
}

#[derive(Debug, Clone, Copy, ValueEnum)]
enum ReportFormat {
    Jsonl,
    Csv,
}

#[derive(Debug, Args)]
struct VerifyArgs {
    #[arg(value_enum)]
    suite: SuiteArg,
    /// Comma-separated catalog families (cyclic, abelian, dihedral, dicyclic, sym, alt,
    /// heisenberg, product, or all).
    #[arg(long)]
    family: Option<String>,
    /// An explicit group; may be repeated.
    #[arg(long)]
    group: Vec<String>,
    /// Largest catalog group order.
    #[arg(long, default_value_t = 32)]
    max_order: usize,
    /// Write the report here instead of stdout.
    #[arg(long)]
    out: Option<PathBuf>,
    #[arg(long, value_enum, default_value_t = ReportFormat::Jsonl)]
    format: ReportFormat,
    /// Concurrent group verifications (0 = one per core).
    #[arg(long, default_value_t = 0)]
    jobs: usize,
}

/// Parses `args` (including the program name) and runs the command.
pub fn run<I, T>(args: I, out: &mut dyn Write, err: &mut dyn Write) -> u8
where
    I: IntoIterator<Item = T>,
    T: Into<std::ffi::OsString> + Clone,
{
    let cli = match Cli::try_parse_from(args) {
        Ok(cli) => cli,
        Err(e) => {
            let code = if e.use_stderr() { EXIT_ERROR } else { EXIT_OK };
            let rendered = e.render().to_string();
            let _ = if e.use_stderr() {
                err.write_all(rendered.as_bytes())
            } else {
                out.write_all(rendered.as_bytes())
            };
            return code;
        }
    };
    match execute(&cli, out) {
        Ok(code) => code,
        Err(e) => {
            let _ = writeln!(err, "error: {e}");
            EXIT_ERROR
        }
    }
}

fn build(builder: &Builder, text: &str) -> Result<FiniteGroup> {
    builder.build(&text.parse::<GroupSpec>()?)
}

fn io(e: std::io::Error) -> Error {
    Error::Io {
        path: "<stdout>".into(),
        source: e,
    }
}

fn execute(cli: &Cli, out: &mut dyn Write) -> Result<u8> {
    let builder = Builder::new(cli.cap);
    match &cli.command {
        Command::Psi(a) => {
            let g = build(&builder, &a.spec)?;
            let value = if let Some(gens) = &a.subgroup {
                psi_rel(&g, &generated_subgroup(&g, gens)?)?
            } else if let Some(hex) = &a.subgroup_bits {
                let bits = BitSet::from_hex(hex, g.order()).ok_or_else(|| {
                    Error::Domain(format!(
                        "'{hex}' is not a membership bitset for order {}",
                        g.order()
                    ))
                })?;
                psi_rel(&g, &Subgroup::from_members(&g, bits)?)?
            } else {
                psi(&g)
            };
            writeln!(out, "{value}").map_err(io)?;
            Ok(EXIT_OK)
        }
        Command::Subgroups(a) => {
            let g = build(&builder, &a.spec)?;
            list_subgroups(&g, a.format, out)?;
            Ok(EXIT_OK)
        }
        Command::Verify(a) => verify_command(cli, a, out),
        Command::CheckEquality(a) => {
            let g = build(&builder, &a.spec)?;
            let r = verify::verify_conjecture(&g)?;
            writeln!(
                out,
                "# {} (order {}, nilpotent {})",
                g.name(),
                g.order(),
                is_nilpotent(&g)
            )
            .map_err(io)?;
            writeln!(
                out,
                "subgroup_order\tsubgroup_key\tpsi_h\tbound\tnormal\tquotient_cyclic"
            )
            .map_err(io)?;
            for rec in r.records.iter().filter(|r| r.equality) {
                let qc = rec
                    .quotient_cyclic
                    .map_or("-".to_string(), |b| b.to_string());
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}\t{}\t{}",
                    rec.subgroup_order, rec.subgroup_key, rec.psi_h, rec.bound, rec.normal, qc
                )
                .map_err(io)?;
            }
            Ok(if r.passed() { EXIT_OK } else { EXIT_VIOLATION })
        }
    }
}

#[derive(Serialize)]
struct SubgroupEntry {
    order: usize,
    normal: bool,
    generators: Vec<Element>,
    key: String,
}

fn list_subgroups(g: &FiniteGroup, format: ListFormat, out: &mut dyn Write) -> Result<()> {
    let entries: Vec<SubgroupEntry> = all_subgroups(g)
        .into_iter()
        .map(|h| {
            Ok(SubgroupEntry {
                order: h.order(),
                normal: is_normal(g, &h)?,
                generators: generators(g, &h),
                key: h.key(),
            })
        })
        .collect::<Result<_>>()?;
    match format {
        ListFormat::Json => {
            serde_json::to_writer_pretty(&mut *out, &entries)
                .map_err(|e| Error::Inconsistent(e.to_string()))?;
            writeln!(out).map_err(io)?;
        }
        ListFormat::Table => {
            writeln!(
                out,
                "# {} (order {}): {} subgroups",
                g.name(),
                g.order(),
                entries.len()
            )
            .map_err(io)?;
            writeln!(out, "order\tnormal\tgenerators\tkey").map_err(io)?;
            for e in &entries {
                let gens: Vec<_> = e.generators.iter().map(|x| x.to_string()).collect();
                writeln!(
                    out,
                    "{}\t{}\t{}\t{}",
                    e.order,
                    e.normal,
                    gens.join(","),
                    e.key
                )
                .map_err(io)?;
            }
        }
    }
    Ok(())
}

fn verify_command(cli: &Cli, a: &VerifyArgs, out: &mut dyn Write) -> Result<u8> {
    let suites: Vec<Suite> = match a.suite {
        SuiteArg::Theorem => vec![Suite::Theorem],
        SuiteArg::Conjecture => vec![Suite::Conjecture],
        SuiteArg::Lemmas => vec![Suite::Lemmas],
        SuiteArg::Multiplicativity => vec![Suite::Multiplicativity],
        SuiteArg::All => Suite::ALL.to_vec(),
    };
    if a.family.is_none() && a.group.is_empty() {
        return Err(Error::Domain("verify needs --family or --group".into()));
    }
    if a.max_order > cli.cap {
        return Err(Error::CapExceeded {
            order: a.max_order,
            cap: cli.cap,
        });
    }
    let families = a
        .family
        .as_deref()
        .map(Family::parse_list)
        .transpose()?
        .unwrap_or_default();
    let mut specs = verify::catalog(&families, a.max_order);
    let builder = Builder::new(cli.cap);
    for text in &a.group {
        let spec: GroupSpec = text.parse()?;
        if suites == [Suite::Theorem] {
            let g = builder.build(&spec)?;
            if !is_nilpotent(&g) {
                return Err(Error::NotNilpotent(g.name().to_string()));
            }
        }
        specs.push(spec);
    }
    let opts = ScanOptions {
        max_order: a.max_order,
        suites,
        jobs: a.jobs,
        cap: cli.cap,
    };
    let report = verify::scan_specs(&specs, &opts)?;

    match &a.out {
        Some(path) => {
            let file = File::create(path).map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            let mut w = BufWriter::new(file);
            write_report(&report, a.format, &mut w)?;
            w.flush().map_err(|source| Error::Io {
                path: path.clone(),
                source,
            })?;
            writeln!(
                out,
                "{}: {} groups, {} checks, {} violations, {} equalities",
                report.suite,
                report.groups_checked,
                report.pairs_checked,
                report.violations,
                report.equalities
            )
            .map_err(io)?;
        }
        None => write_report(&report, a.format, out)?,
    }
    Ok(if report.passed() {
        EXIT_OK
    } else {
        EXIT_VIOLATION
    })
}

fn write_report(
    report: &VerificationReport,
    format: ReportFormat,
    w: &mut dyn Write,
) -> Result<()> {
    match format {
        ReportFormat::Jsonl => report.write_jsonl(w),
        ReportFormat::Csv => report.write_csv(w),
    }
}
