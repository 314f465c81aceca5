use std::io::Read;
use std::process::ExitCode;

use clap::{Parser, Subcommand};
use serde_json::json;

use frieze::census::{run_census_with, CensusOptions, DEFAULT_CAP};
use frieze::cyclo::{default_generators, unicode_generators, Renderer};
use frieze::document::parse_input;
use frieze::frieze::{build_from_dissection, FriezePattern};
use frieze::output::{render_frieze, Format, RenderOptions};
use frieze::qpoly::{alt_root_entries, q_closed_form, q_recurrence, weight_identities_hold};
use frieze::quiddity::{cc_weights, reconstruct, QuidditySequence};
use frieze::{BigInt, Sign};

#[derive(Parser)]
#[command(name = "frieze", version, about = "Exact frieze patterns from polygon dissections")]
struct Cli {
    /// Report errors (and census/identity results) as JSON.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(clap::Args)]
struct TableArgs {
    #[arg(long, value_enum, default_value_t = Format::Ascii)]
    format: Format,
    /// Append decimal approximations with this many digits.
    #[arg(long, value_name = "DIGITS")]
    numeric: Option<usize>,
    /// Print √2 instead of s.
    #[arg(long)]
    unicode: bool,
}

#[derive(Subcommand)]
enum Command {
    /// Build and print the frieze of a dissection ("8: 0-3, 3-7", JSON, a file, or - for stdin).
    Frieze {
        input: String,
        #[command(flatten)]
        table: TableArgs,
        /// Also verify the unimodular rule and positivity.
        #[arg(long)]
        check: bool,
    },
    /// Run the property suite over every dissection with m <= max-m.
    Census {
        #[arg(long, default_value_t = 7)]
        max_m: usize,
        #[arg(long, default_value_t = DEFAULT_CAP)]
        cap: usize,
    },
    /// Check Q_{n-2}(w_n) = 1, Q_{n-1}(w_n) = 0 and the closed form of Q_n.
    Identities {
        #[arg(long, default_value_t = 30)]
        max_n: usize,
        #[arg(long, default_value_t = 64)]
        max_closed_form: usize,
    },
    /// Frieze of the n-gon with weight 2cos(kπ/n).
    Altroot {
        n: usize,
        k: usize,
        #[command(flatten)]
        table: TableArgs,
    },
    /// Reconstruct a triangulation from a quiddity like 1,3,2,1,3,2 and print its frieze.
    Quiddity {
        list: String,
        #[command(flatten)]
        table: TableArgs,
    },
}

struct Failure {
    kind: &'static str,
    message: String,
    code: u8,
}

fn fail(kind: &'static str, message: impl ToString, code: u8) -> Failure {
    Failure { kind, message: message.to_string(), code }
}

fn read_input(arg: &str) -> Result<String, Failure> {
    if arg == "-" {
        let mut s = String::new();
        std::io::stdin().read_to_string(&mut s).map_err(|e| fail("io", e, 2))?;
        return Ok(s);
    }
    let path = std::path::Path::new(arg);
    if path.is_file() {
        return std::fs::read_to_string(path).map_err(|e| fail("io", e, 2));
    }
    Ok(arg.to_string())
}

fn renderer(f: &FriezePattern<BigInt>, sizes: Vec<usize>, unicode: bool) -> Result<Renderer<BigInt>, Failure> {
    let gens = if unicode { unicode_generators(sizes) } else { default_generators(sizes) };
    Renderer::new(f.ring(), gens).map_err(|e| fail("ring", e, 2))
}

fn print_table(f: &FriezePattern<BigInt>, sizes: Vec<usize>, table: &TableArgs, json: bool) -> Result<(), Failure> {
    let r = renderer(f, sizes, table.unicode)?;
    let format = if json { Format::Json } else { table.format };
    let options = RenderOptions { format, numeric: table.numeric };
    print!("{}", render_frieze(f, &r, &options));
    Ok(())
}

fn run(cli: &Cli) -> Result<(), Failure> {
    match &cli.command {
        Command::Frieze { input, table, check } => {
            let text = read_input(input)?;
            let doc = parse_input(&text).map_err(|e| fail("input", e, 2))?;
            let d = doc.dissection().map_err(|e| fail("input", e, 2))?;
            let f = build_from_dissection::<BigInt>(&d).map_err(|e| fail("closure", e, 1))?;
            print_table(&f, d.part_sizes(), table, cli.json)?;
            if *check {
                if let Some((i, k)) = f.unimodular_violation() {
                    return Err(fail("check", format!("unimodular rule fails at row {i}, column {k}"), 1));
                }
                if let Some((i, j)) = f.positivity_violation() {
                    return Err(fail("check", format!("entry ({i}, {j}) is not positive"), 1));
                }
                eprintln!("check: closure, unimodular rule and positivity hold");
            }
            Ok(())
        }
        Command::Census { max_m, cap } => {
            let options = CensusOptions::<BigInt> { cap: *cap, ..Default::default() };
            let reports = run_census_with(*max_m, &options).map_err(|e| fail("census", e, 2))?;
            if cli.json {
                println!("{}", serde_json::to_string_pretty(&reports).unwrap());
            } else {
                for r in &reports {
                    println!("{r}");
                }
            }
            let failures: usize = reports.iter().map(|r| r.failures.len()).sum();
            if failures > 0 {
                return Err(fail("census", format!("{failures} property failures"), 1));
            }
            Ok(())
        }
        Command::Identities { max_n, max_closed_form } => {
            let mut bad = Vec::new();
            let mut results = Vec::new();
            for n in 3..=*max_n {
                let ok = weight_identities_hold::<BigInt>(n).map_err(|e| fail("ring", e, 2))?;
                results.push(json!({"n": n, "weight_identities": ok}));
                if !cli.json {
                    println!("n={n:3}  Q_{{n-2}}(w_n) = 1, Q_{{n-1}}(w_n) = 0: {}", if ok { "ok" } else { "FAIL" });
                }
                if !ok {
                    bad.push(format!("weight identities n={n}"));
                }
            }
            let mismatched: Vec<usize> =
                (1..=*max_closed_form).filter(|&n| q_recurrence::<BigInt>(n) != q_closed_form::<BigInt>(n)).collect();
            if cli.json {
                println!(
                    "{}",
                    serde_json::to_string_pretty(&json!({
                        "weight_identities": results,
                        "closed_form_max_n": max_closed_form,
                        "closed_form_mismatches": mismatched,
                    }))
                    .unwrap()
                );
            } else {
                println!(
                    "closed form = recurrence for 1 <= n <= {max_closed_form}: {}",
                    if mismatched.is_empty() { "ok".to_string() } else { format!("FAIL at {mismatched:?}") }
                );
            }
            bad.extend(mismatched.iter().map(|n| format!("closed form n={n}")));
            if bad.is_empty() {
                Ok(())
            } else {
                Err(fail("identities", bad.join(", "), 1))
            }
        }
        Command::Altroot { n, k, table } => {
            let report = alt_root_entries::<BigInt>(*n, *k).map_err(|e| fail("altroot", e, 2))?;
            print_table(&report.pattern, vec![*n], table, cli.json)?;
            let total: usize = report.signs.iter().map(Vec::len).sum();
            eprintln!(
                "weight 2cos({k}π/{n}) has sign {:?}; {} of {total} interior entries are negative",
                report.weight.sign(),
                report.negative_count()
            );
            debug_assert!(report.signs.iter().flatten().all(|s| *s != Sign::Zero) || *n <= 4);
            Ok(())
        }
        Command::Quiddity { list, table } => {
            let entries = list
                .split(',')
                .map(|s| s.trim().parse::<u64>())
                .collect::<Result<Vec<_>, _>>()
                .map_err(|e| fail("input", format!("bad quiddity list: {e}"), 2))?;
            let q = QuidditySequence(entries);
            let t = reconstruct(&q).map_err(|e| fail("quiddity", e, 1))?;
            debug_assert_eq!(cc_weights(&t).ok().as_ref(), Some(&q));
            eprintln!("triangulation: {t}");
            let f = build_from_dissection::<BigInt>(&t).map_err(|e| fail("closure", e, 1))?;
            print_table(&f, t.part_sizes(), table, cli.json)
        }
    }
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(&cli) {
        Ok(()) => ExitCode::SUCCESS,
        Err(f) => {
            if cli.json {
                println!("{}", json!({"error": f.kind, "message": f.message}));
            } else {
                eprintln!("error ({}): {}", f.kind, f.message);
            }
            ExitCode::from(f.code)
        }
    }
}
