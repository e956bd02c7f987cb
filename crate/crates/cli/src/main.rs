//! `symplectic`: check, derive and enumerate symplectic matroids from family files.
//!
//! Exit codes: 0 when the property holds or the command succeeds, 1 when the
//! property fails, 2 on usage or input errors. Data goes to stdout,
//! diagnostics to stderr.

use std::fs;
use std::io::{self, BufWriter, Write};
use std::path::{Path, PathBuf};
use std::process::ExitCode;

use anyhow::{bail, Context, Result};
use clap::{Args, Parser, Subcommand};

use symplectic::axioms::counterexample_under;
use symplectic::enumeration::{sweep_basis_families_with, sweep_downsets, SweepOptions};
use symplectic::{
    axiom_holds, catalog, check_definition, downward_closure, format_family, greedy_solution, parse_family,
    wxyz_witness, AdmissibleOrdering, BasisFamily, GroundSize, IndependenceFamily,
};

#[derive(Parser)]
#[command(name = "symplectic", version, about = "Symplectic matroid checks over E±n")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Args)]
struct Input {
    /// Family file: one set per line, `{}` for the empty set.
    file: PathBuf,
    /// Ground size; defaults to the largest magnitude in the file.
    #[arg(long = "n")]
    n: Option<i64>,
}

#[derive(Subcommand)]
enum Command {
    /// Check a basis family against the greedy definition.
    CheckBases {
        #[command(flatten)]
        input: Input,
        /// Also compare threshold optimality with this many sampled weights per ordering.
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Check an independence family against the independent-set axiom.
    CheckIndependent {
        #[command(flatten)]
        input: Input,
    },
    /// Print the downward closure of a basis family.
    IndependentSets {
        #[command(flatten)]
        input: Input,
    },
    /// Print the inclusion-maximal members of an independence family.
    Bases {
        #[command(flatten)]
        input: Input,
    },
    /// Trace the greedy algorithm under one ordering.
    Greedy {
        #[command(flatten)]
        input: Input,
        /// Top row of the ordering, largest first, e.g. "-2 1 3".
        #[arg(long, allow_hyphen_values = true)]
        ordering: String,
    },
    /// Find an ordering and threshold weight under which greedy is not optimal.
    Witness {
        #[command(flatten)]
        input: Input,
        /// Restrict the search to this ordering.
        #[arg(long, allow_hyphen_values = true)]
        ordering: Option<String>,
        /// Build the witness from an axiom violation via WXYZ orderings.
        #[arg(long, conflicts_with = "ordering")]
        wxyz: bool,
    },
    /// Sweep every family of admissible K-subsets of E±N.
    Enumerate {
        n: i64,
        k: Option<usize>,
        /// Write every symplectic matroid found to this file.
        #[arg(long)]
        catalog: Option<PathBuf>,
        /// Sweep downward-closed families instead (N <= 2).
        #[arg(long, conflicts_with_all = ["k", "catalog"])]
        downsets: bool,
        /// Sampled compatible weights per (family, ordering); 0 disables.
        #[arg(long, default_value_t = 0)]
        samples: u64,
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let stdout = io::stdout();
    let mut out = BufWriter::new(stdout.lock());
    let result = run(cli.command, &mut out).and_then(|code| {
        out.flush()?;
        Ok(code)
    });
    match result {
        Ok(code) => ExitCode::from(code),
        Err(err) => {
            let _ = out.flush();
            eprintln!("error: {err:#}");
            ExitCode::from(2)
        }
    }
}

fn status(holds: bool) -> u8 {
    if holds {
        0
    } else {
        1
    }
}

fn read_family(input: &Input) -> Result<symplectic::FamilyFile> {
    let text =
        fs::read_to_string(&input.file).with_context(|| format!("cannot read {}", input.file.display()))?;
    let n = input.n.map(GroundSize::new).transpose()?;
    parse_family(&text, n).with_context(|| format!("malformed family file {}", input.file.display()))
}

fn read_bases(input: &Input) -> Result<BasisFamily> {
    let file = read_family(input)?;
    Ok(BasisFamily::new(file.n, file.sets)?)
}

fn read_independent(input: &Input) -> Result<IndependenceFamily> {
    let file = read_family(input)?;
    Ok(IndependenceFamily::new(file.n, file.sets)?)
}

fn ground_size(n: i64) -> Result<GroundSize> {
    Ok(GroundSize::new(n)?)
}

fn run(command: Command, out: &mut impl Write) -> Result<u8> {
    match command {
        Command::CheckBases { input, samples, seed } => {
            let family = read_bases(&input)?;
            let check = check_definition(&family);
            writeln!(out, "symplectic_matroid: {}", check.holds)?;
            writeln!(out, "n: {}", family.n())?;
            writeln!(out, "rank: {}", check.rank)?;
            writeln!(out, "lagrangian: {}", check.lagrangian)?;
            writeln!(out, "members: {}", family.len())?;
            writeln!(out, "orderings_checked: {}", check.orderings_checked)?;
            if samples > 0 {
                let discrepancies = symplectic::enumeration::threshold_reduction_discrepancies(
                    &family,
                    seed..seed.wrapping_add(samples),
                );
                writeln!(out, "sampled_weight_discrepancies: {discrepancies}")?;
            }
            if let Some(w) = &check.witness {
                writeln!(out, "{w}")?;
            }
            Ok(status(check.holds))
        }
        Command::CheckIndependent { input } => {
            let family = read_independent(&input)?;
            let result = axiom_holds(&family);
            writeln!(out, "axiom_holds: {}", result.holds)?;
            writeln!(out, "n: {}", family.n())?;
            writeln!(out, "rank: {}", result.rank)?;
            writeln!(out, "lagrangian: {}", result.lagrangian)?;
            writeln!(out, "members: {}", family.len())?;
            if let Some(v) = result.violation {
                writeln!(out, "violation_i: {}", v.i)?;
                writeln!(out, "violation_j: {}", v.j)?;
                writeln!(out, "failure: {}", v.kind)?;
            }
            Ok(status(result.holds))
        }
        Command::IndependentSets { input } => {
            let family = read_bases(&input)?;
            write!(out, "{}", format_family(downward_closure(&family).sets()))?;
            Ok(0)
        }
        Command::Bases { input } => {
            let family = read_independent(&input)?;
            let maxima = family.maximal_sets();
            write!(out, "{}", format_family(&maxima))?;
            let equal = maxima.iter().all(|s| s.len() == maxima[0].len());
            if !equal {
                eprintln!("warning: maximal members have unequal sizes");
            }
            Ok(status(equal))
        }
        Command::Greedy { input, ordering } => {
            let family = read_bases(&input)?;
            let ordering = AdmissibleOrdering::parse(&ordering, family.n()).context("bad --ordering")?;
            let trace = greedy_solution(&family, &ordering);
            for step in &trace.steps {
                writeln!(out, "{step}")?;
            }
            writeln!(out, "chosen: {}", trace.chosen)?;
            Ok(0)
        }
        Command::Witness {
            input,
            ordering,
            wxyz,
        } => {
            let family = read_bases(&input)?;
            if wxyz {
                let Some(trace) = wxyz_witness(&family) else {
                    eprintln!("no witness: the family is a symplectic matroid");
                    return Ok(1);
                };
                let Some(witness) = &trace.witness else {
                    bail!("axiom violated but no witness found");
                };
                writeln!(out, "{witness}")?;
                writeln!(out, "stage: {}", trace.stage)?;
                writeln!(out, "violation_i: {}", trace.violation.i)?;
                writeln!(out, "violation_j: {}", trace.violation.j)?;
                writeln!(out, "failure: {}", trace.violation.kind)?;
                writeln!(out, "w: {}", trace.decomposition.w)?;
                writeln!(out, "y: {}", trace.decomposition.y)?;
                writeln!(out, "z: {}", trace.decomposition.z)?;
                writeln!(out, "s: {}", trace.s)?;
                writeln!(out, "half: {}", trace.minimizing_half)?;
                return Ok(0);
            }
            let witness = match ordering {
                Some(text) => {
                    let o = AdmissibleOrdering::parse(&text, family.n()).context("bad --ordering")?;
                    counterexample_under(family.sets(), o)
                }
                None => symplectic::find_counterexample(&family),
            };
            match witness {
                Some(w) => {
                    writeln!(out, "{w}")?;
                    Ok(0)
                }
                None => {
                    eprintln!("no witness: greedy is optimal");
                    Ok(1)
                }
            }
        }
        Command::Enumerate {
            n,
            k,
            catalog: catalog_path,
            downsets,
            samples,
            seed,
        } => {
            let n = ground_size(n)?;
            if downsets {
                let report = sweep_downsets(n)?;
                writeln!(out, "{report}")?;
                return Ok(status(report.mismatches.is_empty()));
            }
            let Some(k) = k else {
                bail!("enumerate needs K unless --downsets is given");
            };
            let options = SweepOptions {
                sampled_weights: samples,
                seed,
                ..SweepOptions::default()
            };
            let report = sweep_basis_families_with(n, k, options)?;
            writeln!(out, "{report}")?;
            if let Some(path) = catalog_path {
                let written = write_catalog(&path, n, k)?;
                writeln!(out, "catalog_written: {written}")?;
            }
            let clean = report.mismatches.is_empty() && report.sampled_weight_discrepancies.unwrap_or(0) == 0;
            Ok(status(clean))
        }
    }
}

fn write_catalog(path: &Path, n: GroundSize, k: usize) -> Result<usize> {
    let file = fs::File::create(path).with_context(|| format!("cannot create {}", path.display()))?;
    let mut sink = BufWriter::new(file);
    let written = catalog(n, k, &mut sink).with_context(|| format!("cannot write {}", path.display()))?;
    Ok(written)
}
