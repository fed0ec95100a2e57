//! Command line front end: build the code families, verify a stored code
//! document, or run the whole ten-part reproduction battery.

use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{anyhow, bail, Context};
use clap::{Args, Parser, Subcommand};
use serde_json::{json, Value};

use crcodes::analysis::{
    predicted_c3, predicted_dual_weights, predicted_extended_ii_design_lambda, predicted_ia,
    predicted_ia_extended_ii, verify_design, Family,
};
use crcodes::constructions::{construction_i, construction_ii, sporadic_code, SporadicId};
use crcodes::cosets::{uniformly_packed_params, verify_completely_regular};
use crcodes::suite::{all_passed, run_all, Status};
use crcodes::{Budget, CodeDocument, Error, IntersectionArray, LinearCode};

/// Exit codes for `verify`: 0 verified clean, 1 not completely regular,
/// 2 a computed quantity disagrees with its prediction, 3 enumeration
/// budget exceeded. Exit 4 is an operational error (arguments, I/O,
/// malformed document) for every subcommand; `reproduce` exits 0 only
/// when all ten checks pass.
const EXIT_OK: u8 = 0;
const EXIT_NOT_CR: u8 = 1;
const EXIT_MISMATCH: u8 = 2;
const EXIT_BUDGET: u8 = 3;
const EXIT_ERROR: u8 = 4;

#[derive(Parser)]
#[command(
    name = "crcodes",
    version,
    about = "Construct and verify completely regular codes"
)]
struct Cli {
    /// Enumeration cap applied to every exhaustive loop: a number,
    /// "tiny" (16), or "default". Overrides the CRCODES_BUDGET variable.
    #[arg(long, global = true)]
    budget: Option<String>,
    /// Machine-readable JSON output where the default is a table.
    #[arg(long, global = true)]
    json: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Build a code and write it to a JSON document.
    Construct(ConstructArgs),
    /// Verify a code document and print a report (JSON) to stdout.
    Verify(VerifyArgs),
    /// Run the ten-part verification battery and print its table.
    Reproduce,
}

#[derive(Args)]
struct ConstructArgs {
    /// "I", "II", "sporadic1", "sporadic1x", "sporadic2", or "sporadic3".
    #[arg(long)]
    family: String,
    /// Field order (families I and II).
    #[arg(long)]
    q: Option<u16>,
    /// Parity degree of the underlying Hamming matrix (families I and II).
    #[arg(long)]
    k: Option<usize>,
    /// Number of shifted blocks (families I and II).
    #[arg(long)]
    c: Option<usize>,
    /// Append the overall parity coordinate to the constructed code.
    #[arg(long)]
    extend: bool,
    /// Output path.
    #[arg(long)]
    out: PathBuf,
}

#[derive(Args)]
struct VerifyArgs {
    /// Code document written by `construct`.
    input: PathBuf,
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let budget = match resolve_budget(cli.budget.as_deref()) {
        Ok(b) => b,
        Err(e) => {
            eprintln!("error: {e}");
            return ExitCode::from(EXIT_ERROR);
        }
    };
    let outcome = match &cli.command {
        Command::Construct(args) => cmd_construct(args, cli.json),
        Command::Verify(args) => cmd_verify(&args.input, &budget),
        Command::Reproduce => Ok(cmd_reproduce(&budget, cli.json)),
    };
    match outcome {
        Ok(code) => ExitCode::from(code),
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(EXIT_ERROR)
        }
    }
}

fn resolve_budget(flag: Option<&str>) -> anyhow::Result<Budget> {
    let Some(flag) = flag else {
        return Ok(Budget::from_env());
    };
    match flag {
        "tiny" => Ok(Budget::uniform(16)),
        "default" => Ok(Budget::default()),
        other => other
            .parse::<u64>()
            .map(Budget::uniform)
            .map_err(|_| anyhow!("--budget takes a number, \"tiny\", or \"default\"")),
    }
}

fn cmd_construct(args: &ConstructArgs, json_out: bool) -> anyhow::Result<u8> {
    let (mut code, family, params) = match args.family.as_str() {
        "I" | "i" | "1" | "II" | "ii" | "2" => {
            let family: Family = args.family.parse().map_err(|e: Error| anyhow!(e))?;
            let q = args
                .q
                .ok_or_else(|| anyhow!("--q is required for families I and II"))?;
            let k = args
                .k
                .ok_or_else(|| anyhow!("--k is required for families I and II"))?;
            let c = args
                .c
                .ok_or_else(|| anyhow!("--c is required for families I and II"))?;
            let (code, name) = match family {
                Family::I => (construction_i(q, k, c)?, "I"),
                Family::II => (construction_ii(q, k, c)?, "II"),
            };
            (
                code,
                name.to_string(),
                json!({"q": q, "k": k, "c": c, "extend": args.extend}),
            )
        }
        other => {
            if args.q.is_some() || args.k.is_some() || args.c.is_some() {
                bail!("--q/--k/--c do not apply to sporadic items");
            }
            let id: SporadicId = other.parse().map_err(|e: Error| anyhow!(e))?;
            let canonical = match id {
                SporadicId::S1 => "sporadic1",
                SporadicId::S1Ext => "sporadic1x",
                SporadicId::S2 => "sporadic2",
                SporadicId::S3 => "sporadic3",
            };
            (
                sporadic_code(id),
                canonical.to_string(),
                json!({"extend": args.extend}),
            )
        }
    };
    if args.extend {
        code = code.extend();
    }
    let doc = CodeDocument::from_code(&code, &family, params);
    let text = serde_json::to_string_pretty(&doc)?;
    std::fs::write(&args.out, text + "\n")
        .with_context(|| format!("writing {}", args.out.display()))?;
    if json_out {
        println!(
            "{}",
            json!({
                "schema": 1,
                "path": args.out.display().to_string(),
                "family": family,
                "n": code.n(),
                "k": code.k(),
                "q": code.q(),
            })
        );
    } else {
        println!(
            "wrote [{},{}] code over GF({}) to {}",
            code.n(),
            code.k(),
            code.q(),
            args.out.display()
        );
    }
    Ok(EXIT_OK)
}

fn cmd_verify(path: &Path, budget: &Budget) -> anyhow::Result<u8> {
    let text =
        std::fs::read_to_string(path).with_context(|| format!("reading {}", path.display()))?;
    let doc: CodeDocument = serde_json::from_str(&text)
        .with_context(|| format!("parsing {} as a code document", path.display()))?;
    let code = doc
        .build()
        .map_err(|e| anyhow!(e).context("document does not rebuild"))?;
    let start = Instant::now();
    match verify_pipeline(&doc, &code, budget) {
        Ok((mut report, exit)) => {
            report["timing_ms"] = json!(start.elapsed().as_millis() as u64);
            println!("{}", serde_json::to_string_pretty(&report)?);
            Ok(exit)
        }
        Err(e) if e.is_budget() => {
            eprintln!("budget exceeded: {e}");
            Ok(EXIT_BUDGET)
        }
        Err(e) => Err(anyhow!(e)),
    }
}

/// Everything `verify` computes, every prediction it compares, and the
/// exit code the comparison earns.
fn verify_pipeline(
    doc: &CodeDocument,
    code: &LinearCode,
    budget: &Budget,
) -> crcodes::Result<(Value, u8)> {
    let mut mismatches: Vec<String> = Vec::new();
    let report = verify_completely_regular(code, budget)?;
    let d = code.min_distance(budget)?;
    let e = code.packing_radius(budget)?;
    let dual = code.dual_weight_distribution(budget)?;
    let s = dual.support().len();
    let quasi_perfect = report.rho == e + 1;
    let up = match uniformly_packed_params(code, budget) {
        Ok(p) => p,
        Err(Error::NotQuasiPerfect { .. }) => None,
        Err(err) => return Err(err),
    };
    let c3 = code.codewords_of_weight(3, budget)?.len() as u64;

    let ex = expectations(doc);
    if let Some(pred) = &ex.ia {
        match report.ia.as_ref() {
            Some(found) if found == pred => {}
            Some(found) => mismatches.push(format!(
                "intersection array {found} differs from predicted {pred}"
            )),
            None => mismatches.push(format!(
                "predicted intersection array {pred} but the code is not completely regular"
            )),
        }
    }
    if let Some(pred) = &ex.dual_weights {
        let weights: Vec<usize> = pred.iter().map(|&(w, _)| w).collect();
        if dual.support() != weights {
            mismatches.push(format!(
                "dual support {:?} differs from predicted {weights:?}",
                dual.support()
            ));
        }
        for &(w, count) in pred {
            if let Some(count) = count {
                if dual.count_u64(w) != Some(count) {
                    mismatches.push(format!(
                        "{:?} dual words of weight {w}, predicted {count}",
                        dual.count_u64(w)
                    ));
                }
            }
        }
    }
    if let Some(pred) = ex.c3 {
        if c3 != pred {
            mismatches.push(format!("{c3} words of weight 3, predicted {pred}"));
        }
    }

    // For a completely regular code the weight-d words form a t-design
    // with t = e for d = 2e+1 and t = e+1 for d = 2e+2, i.e. t = d-1-e.
    let mut design_checks = Vec::new();
    if report.is_cr && d >= 2 {
        let t = d - 1 - e;
        let words = code.codewords_of_weight(d, budget)?;
        let lambda = verify_design(code.q(), &words, t, budget)?;
        if lambda.is_none() {
            mismatches.push(format!("weight-{d} words do not form a {t}-design"));
        }
        if let (Some(expected), Some(found)) = (ex.design_lambda, lambda) {
            if expected != found {
                mismatches.push(format!(
                    "design index {found} differs from predicted {expected}"
                ));
            }
        }
        design_checks.push(json!({
            "w": d,
            "t": t,
            "blocks": words.len(),
            "lambda": lambda,
            "lambda_predicted": ex.design_lambda,
        }));
    }

    let dual_weights: Vec<Value> = dual
        .support()
        .into_iter()
        .map(|w| match dual.count_u64(w) {
            Some(count) => json!([w, count]),
            None => json!([w, dual.count(w).to_string()]),
        })
        .collect();
    let dual_weights_predicted = ex.dual_weights.as_ref().map(|pred| {
        pred.iter()
            .map(|&(w, count)| json!([w, count]))
            .collect::<Vec<Value>>()
    });

    let exit = if !report.is_cr {
        EXIT_NOT_CR
    } else if !mismatches.is_empty() {
        EXIT_MISMATCH
    } else {
        EXIT_OK
    };
    let value = json!({
        "schema": 1,
        "code": {
            "family": doc.family,
            "params": doc.params,
            "n": code.n(),
            "k": code.k(),
            "q": code.q(),
            "d": d,
        },
        "is_cr": report.is_cr,
        "rho": report.rho,
        "ia": report.ia.as_ref().map(|ia| ia.to_string()),
        "b": report.ia.as_ref().map(|ia| ia.b.clone()),
        "c": report.ia.as_ref().map(|ia| ia.c.clone()),
        "ia_predicted": ex.ia.as_ref().map(|ia| ia.to_string()),
        "coset_counts": report.coset_counts,
        "witness": report.witness.map(|(a, b)| vec![a, b]),
        "dual_weights": dual_weights,
        "dual_weights_predicted": dual_weights_predicted,
        "external_distance": s,
        "packing_radius": e,
        "c3": c3,
        "c3_predicted": ex.c3,
        "quasi_perfect": quasi_perfect,
        "up_params": up.map(|(l, m)| vec![l, m]),
        "design_checks": design_checks,
        "mismatches": mismatches,
    });
    Ok((value, exit))
}

/// Closed-form predictions that apply to the document's construction, if
/// any. Unknown or out-of-range parameters simply predict nothing.
#[derive(Default)]
struct Expectations {
    ia: Option<IntersectionArray>,
    dual_weights: Option<Vec<(usize, Option<u64>)>>,
    c3: Option<u64>,
    design_lambda: Option<u64>,
}

fn frozen_ia(degree: u64, b: &[u64], c: &[u64]) -> IntersectionArray {
    IntersectionArray {
        degree,
        b: b.to_vec(),
        c: c.to_vec(),
    }
}

fn expectations(doc: &CodeDocument) -> Expectations {
    let mut ex = Expectations::default();
    let extend = doc
        .params
        .get("extend")
        .and_then(Value::as_bool)
        .unwrap_or(false);
    match doc.family.as_str() {
        "I" | "II" => {
            let family = if doc.family == "I" {
                Family::I
            } else {
                Family::II
            };
            let q = doc.params.get("q").and_then(Value::as_u64);
            let k = doc.params.get("k").and_then(Value::as_u64);
            let c = doc.params.get("c").and_then(Value::as_u64);
            let (Some(q), Some(k), Some(c)) = (q, k, c) else {
                return ex;
            };
            if !(2..=256).contains(&q) || !(1..=32).contains(&k) {
                return ex;
            }
            let (q, k, c) = (q as u16, k as usize, c as usize);
            if extend {
                let applies = match family {
                    Family::II => true,
                    Family::I => q == 2 && c == (1usize << (k - 1)) + 1,
                };
                if applies {
                    ex.ia = predicted_ia_extended_ii(k).ok();
                    ex.design_lambda = predicted_extended_ii_design_lambda(k).ok();
                }
            } else {
                ex.ia = predicted_ia(family, q, k, c).ok();
                ex.dual_weights = predicted_dual_weights(family, q, k, c).ok();
                ex.c3 = predicted_c3(family, q, k, c).ok();
            }
        }
        "sporadic1" if extend => ex.ia = Some(frozen_ia(16, &[16, 15, 12, 1], &[1, 4, 15, 16])),
        "sporadic1" => ex.ia = Some(frozen_ia(15, &[15, 12, 1], &[1, 4, 15])),
        "sporadic1x" => ex.ia = Some(frozen_ia(16, &[16, 15, 12, 1], &[1, 4, 15, 16])),
        "sporadic2" => ex.ia = Some(frozen_ia(18, &[18, 15], &[1, 6])),
        "sporadic3" => ex.ia = Some(frozen_ia(15, &[15, 12, 1], &[1, 4, 15])),
        _ => {}
    }
    ex
}

fn cmd_reproduce(budget: &Budget, json_out: bool) -> u8 {
    let results = run_all(budget);
    let all = all_passed(&results);
    if json_out {
        let value = json!({
            "schema": 1,
            "all_passed": all,
            "results": results,
        });
        println!(
            "{}",
            serde_json::to_string_pretty(&value).expect("serializable results")
        );
    } else {
        for r in &results {
            println!(
                "criterion {:2}  {:<34} {:>7}  ({:>5} ms)  {}",
                r.number,
                r.id,
                r.status.to_string(),
                r.millis,
                r.detail
            );
        }
        let passed = results.iter().filter(|r| r.status == Status::Pass).count();
        let skipped = results
            .iter()
            .filter(|r| r.status == Status::Skipped)
            .count();
        let failed = results.len() - passed - skipped;
        println!("{passed} passed, {failed} failed, {skipped} skipped");
    }
    if all {
        EXIT_OK
    } else {
        1
    }
}
