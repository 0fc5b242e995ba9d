use std::io::{self, Write};
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use invkostka::{
    enumerate_chains_s, enumerate_chains_t, f_polynomial, g_polynomial, h_polynomial,
    inv_kostka_bruteforce, inv_kostka_duan, inv_kostka_er, inverse_kostka_matrix, kostka_matrix,
    monomial_to_schur, signed_count_s, signed_count_t, steenrod_p, steenrod_sq, verify_suite,
    Error, Partition,
};
use serde_json::json;

mod render;

use render::{chain_json, expansion_json, int, partition_json, Output};

#[derive(Parser)]
#[command(name = "invkostka", version, about = "Exact inverse Kostka numbers and related expansions")]
struct Cli {
    /// Output format.
    #[arg(long, global = true, value_enum, default_value_t = Format::Plain)]
    format: Format,

    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Plain,
    Json,
    Csv,
}

#[derive(Clone, Copy, ValueEnum)]
enum Engine {
    Duan,
    Er,
    Brute,
    All,
}

#[derive(Clone, Copy, ValueEnum)]
enum Family {
    #[value(name = "S", alias = "s")]
    S,
    #[value(name = "T", alias = "t")]
    T,
}

#[derive(Clone, Copy, ValueEnum)]
enum Op {
    #[value(name = "P", alias = "p")]
    P,
    #[value(name = "Sq", alias = "sq")]
    Sq,
}

#[derive(Subcommand)]
enum Command {
    /// One entry K⁻¹_{λ,μ}.
    Entry {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_enum, default_value_t = Engine::Duan)]
        engine: Engine,
    },
    /// The Schur expansion of m_λ.
    Row {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
    },
    /// The Kostka matrix of a given weight, or its inverse.
    Matrix {
        #[arg(long)]
        weight: usize,
        #[arg(long)]
        inverse: bool,
    },
    /// Signed chain enumeration.
    Chains {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        #[arg(long, value_enum)]
        family: Family,
    },
    /// f_{λ,μ}(t), the inversion generating polynomial of the solution pairs.
    Fpoly {
        #[arg(long, value_parser = partition)]
        lambda: Partition,
        #[arg(long, value_parser = partition)]
        mu: Partition,
        /// Number of variables; defaults to max(l(λ), l(μ)).
        #[arg(long)]
        n: Option<usize>,
    },
    /// h_b(t).
    Hpoly {
        b: usize,
        /// Reduce coefficients mod this integer.
        #[arg(long = "mod", value_name = "P")]
        modulus: Option<u64>,
    },
    /// g_{k,l}(t).
    Gpoly { k: usize, l: usize },
    /// Schur expansion of P^k(c_m) mod p or Sq^k(w_m) mod 2.
    Steenrod {
        #[arg(long, value_enum)]
        op: Op,
        #[arg(long)]
        k: usize,
        #[arg(long)]
        m: usize,
        /// Odd prime for P (default 3).
        #[arg(long)]
        p: Option<u64>,
    },
    /// Cross-check every engine up to a weight.
    Verify {
        #[arg(long)]
        max_weight: usize,
    },
}

fn partition(s: &str) -> Result<Partition, String> {
    s.parse().map_err(|e: Error| e.to_string())
}

fn default_n(lambda: &Partition, mu: &Partition) -> usize {
    lambda.len().max(mu.len()).max(1)
}

fn run(command: &Command) -> Result<Output, Error> {
    match command {
        Command::Entry { lambda, mu, engine } => {
            let n = default_n(lambda, mu);
            let compute = |e: Engine| match e {
                Engine::Duan => inv_kostka_duan(lambda, mu),
                Engine::Er => inv_kostka_er(lambda, mu),
                Engine::Brute => inv_kostka_bruteforce(lambda, mu, n),
                Engine::All => unreachable!(),
            };
            let query = json!({
                "subcommand": "entry",
                "lambda": partition_json(lambda),
                "mu": partition_json(mu),
                "engine": engine_name(*engine),
            });
            if let Engine::All = engine {
                let values = [Engine::Duan, Engine::Er, Engine::Brute]
                    .into_iter()
                    .map(|e| Ok((engine_name(e), compute(e)?)))
                    .collect::<Result<Vec<_>, Error>>()?;
                let agree = values.windows(2).all(|w| w[0].1 == w[1].1);
                let plain = values.iter().map(|(n, v)| format!("{n}: {v}\n")).collect();
                let result = values.iter().map(|(n, v)| (n.to_string(), int(v))).collect();
                let csv = values
                    .iter()
                    .map(|(n, v)| vec![lambda.to_string(), mu.to_string(), n.to_string(), v.to_string()])
                    .collect();
                return Ok(Output {
                    query,
                    result: serde_json::Value::Object(result),
                    plain,
                    csv_header: header(&["lambda", "mu", "engine", "value"]),
                    csv,
                    failed: !agree,
                });
            }
            let v = compute(*engine)?;
            Ok(Output {
                query,
                result: int(&v),
                plain: format!("{v}\n"),
                csv_header: header(&["lambda", "mu", "engine", "value"]),
                csv: vec![vec![lambda.to_string(), mu.to_string(), engine_name(*engine).into(), v.to_string()]],
                failed: false,
            })
        }
        Command::Row { lambda } => {
            let row = monomial_to_schur(lambda);
            let terms: Vec<_> = row.iter().map(|(mu, c)| (mu.clone(), c.to_string())).collect();
            Ok(Output {
                query: json!({"subcommand": "row", "lambda": partition_json(lambda)}),
                result: expansion_json(&terms),
                plain: format!("{row}\n"),
                csv_header: header(&["partition", "coeff"]),
                csv: terms.iter().map(|(mu, c)| vec![mu.to_string(), c.clone()]).collect(),
                failed: false,
            })
        }
        Command::Matrix { weight, inverse } => {
            let matrix = if *inverse {
                inverse_kostka_matrix(*weight)
            } else {
                kostka_matrix(*weight)
            };
            let labels: Vec<String> = matrix.labels().iter().map(|l| l.to_string()).collect();
            let cells: Vec<Vec<String>> = matrix
                .rows()
                .iter()
                .map(|r| r.iter().map(|v| v.to_string()).collect())
                .collect();
            let label_width = labels.iter().map(String::len).max().unwrap_or(0);
            let widths: Vec<usize> = (0..labels.len())
                .map(|j| cells.iter().map(|r| r[j].len()).chain([labels[j].len()]).max().unwrap_or(0))
                .collect();
            let line = |first: &str, row: &[String]| {
                let padded: Vec<String> = row.iter().zip(&widths).map(|(c, w)| format!("{c:>w$}")).collect();
                format!("{first:label_width$}  {}\n", padded.join(" "))
            };
            let mut plain = line("", &labels);
            let mut csv = Vec::new();
            for (label, row) in labels.iter().zip(cells) {
                plain.push_str(&line(label, &row));
                csv.push(std::iter::once(label.clone()).chain(row).collect());
            }
            let rows: Vec<Vec<serde_json::Value>> =
                matrix.rows().iter().map(|r| r.iter().map(int).collect()).collect();
            let mut header = vec!["row".to_string()];
            header.extend(labels.iter().cloned());
            Ok(Output {
                query: json!({"subcommand": "matrix", "weight": weight, "inverse": inverse}),
                result: json!({
                    "labels": matrix.labels().iter().map(partition_json).collect::<Vec<_>>(),
                    "rows": rows,
                }),
                plain,
                csv_header: header,
                csv,
                failed: false,
            })
        }
        Command::Chains { lambda, mu, family } => {
            let (chains, values, signs, total, name) = match family {
                Family::S => {
                    let cs = enumerate_chains_s(lambda, mu)?;
                    let total = signed_count_s(&cs);
                    let steps = cs.iter().map(|c| c.steps.clone()).collect::<Vec<_>>();
                    let values = cs.iter().map(|c| c.b_values()).collect::<Vec<_>>();
                    let signs = cs.iter().map(|c| c.sign()).collect::<Vec<_>>();
                    (steps, values, signs, total, "S")
                }
                Family::T => {
                    let cs = enumerate_chains_t(lambda, mu)?;
                    let total = signed_count_t(&cs);
                    let steps = cs.iter().map(|c| c.steps.clone()).collect::<Vec<_>>();
                    let values = cs.iter().map(|c| c.a_values()).collect::<Vec<_>>();
                    let signs = cs.iter().map(|c| c.sign()).collect::<Vec<_>>();
                    (steps, values, signs, total, "T")
                }
            };
            let mut plain = String::new();
            let mut csv = Vec::new();
            for ((steps, vals), sign) in chains.iter().zip(&values).zip(&signs) {
                let path: Vec<String> = steps.iter().map(|s| format!("{}({})", s.partition, s.index)).collect();
                let path = path.join(" -> ");
                plain.push_str(&format!("{sign:+} {path}\n"));
                csv.push(vec![sign.to_string(), path, format!("{vals:?}")]);
            }
            plain.push_str(&format!("signed count: {total}\n"));
            let list: Vec<_> = chains
                .iter()
                .zip(&values)
                .zip(&signs)
                .map(|((s, v), g)| chain_json(s, v, *g))
                .collect();
            Ok(Output {
                query: json!({
                    "subcommand": "chains",
                    "lambda": partition_json(lambda),
                    "mu": partition_json(mu),
                    "family": name,
                }),
                result: json!({"chains": list, "signed_count": int(&total)}),
                plain,
                csv_header: header(&["sign", "steps", "values"]),
                csv,
                failed: false,
            })
        }
        Command::Fpoly { lambda, mu, n } => {
            let n = n.unwrap_or_else(|| default_n(lambda, mu));
            let f = f_polynomial(lambda, mu, n)?;
            Ok(Output::poly(
                json!({"subcommand": "fpoly", "lambda": partition_json(lambda), "mu": partition_json(mu), "n": n}),
                &f,
            ))
        }
        Command::Hpoly { b, modulus } => {
            let mut h = h_polynomial(*b);
            if let Some(p) = modulus {
                if *p < 2 {
                    return Err(Error::Precondition(format!("modulus must be at least 2, got {p}")));
                }
                h = h.reduce_mod(*p);
            }
            Ok(Output::poly(json!({"subcommand": "hpoly", "b": b, "mod": modulus}), &h))
        }
        Command::Gpoly { k, l } => {
            let g = g_polynomial(*k, *l);
            Ok(Output::poly(json!({"subcommand": "gpoly", "k": k, "l": l}), &g))
        }
        Command::Steenrod { op, k, m, p } => {
            let (row, p, name) = match op {
                Op::P => {
                    let p = p.unwrap_or(3);
                    (steenrod_p(*k, *m, p)?, p, "P")
                }
                Op::Sq => {
                    if p.is_some_and(|p| p != 2) {
                        return Err(Error::Precondition("Sq is defined mod 2 only".into()));
                    }
                    (steenrod_sq(*k, *m)?, 2, "Sq")
                }
            };
            let terms: Vec<_> = row.iter().map(|(mu, c)| (mu.clone(), c.to_string())).collect();
            Ok(Output {
                query: json!({"subcommand": "steenrod", "op": name, "k": k, "m": m, "p": p}),
                result: expansion_json(&terms),
                plain: format!("{row}\n"),
                csv_header: header(&["partition", "coeff"]),
                csv: terms.iter().map(|(mu, c)| vec![mu.to_string(), c.clone()]).collect(),
                failed: false,
            })
        }
        Command::Verify { max_weight } => {
            let report = verify_suite(*max_weight);
            let suites: Vec<_> = report
                .suites
                .iter()
                .map(|s| json!({"name": s.name, "checks": s.checks, "failures": s.failures.len(), "messages": s.failures}))
                .collect();
            Ok(Output {
                query: json!({"subcommand": "verify", "max_weight": max_weight}),
                result: json!({
                    "suites": suites,
                    "total_checks": report.total_checks(),
                    "total_failures": report.total_failures(),
                }),
                plain: format!("{report}\n"),
                csv_header: header(&["suite", "checks", "failures"]),
                csv: report
                    .suites
                    .iter()
                    .map(|s| vec![s.name.to_string(), s.checks.to_string(), s.failures.len().to_string()])
                    .collect(),
                failed: !report.passed(),
            })
        }
    }
}

fn engine_name(e: Engine) -> &'static str {
    match e {
        Engine::Duan => "duan",
        Engine::Er => "er",
        Engine::Brute => "brute",
        Engine::All => "all",
    }
}

fn header(names: &[&str]) -> Vec<String> {
    names.iter().map(|s| s.to_string()).collect()
}

fn emit(out: &Output, format: Format) -> io::Result<()> {
    let stdout = io::stdout();
    let mut lock = stdout.lock();
    match format {
        Format::Plain => lock.write_all(out.plain.as_bytes())?,
        Format::Json => {
            let doc = json!({"query": out.query, "result": out.result});
            serde_json::to_writer(&mut lock, &doc)?;
            writeln!(lock)?;
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(lock);
            w.write_record(&out.csv_header)?;
            for row in &out.csv {
                w.write_record(row)?;
            }
            w.flush()?;
        }
    }
    Ok(())
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 1 } else { 0 });
        }
    };
    match run(&cli.command) {
        Ok(out) => {
            if let Err(e) = emit(&out, cli.format) {
                eprintln!("error: {e}");
                return ExitCode::from(1);
            }
            ExitCode::from(if out.failed { 3 } else { 0 })
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(2)
        }
    }
}
