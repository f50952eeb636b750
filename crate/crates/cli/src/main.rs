//! `qild`: decompose polynomials over `Z[q, 1/q]` from the command line.

use std::fs;
use std::io::{self, Read};
use std::process::ExitCode;
use std::time::{Duration, Instant};

use clap::{Parser, ValueEnum};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde::Serialize;

use qild::generator::{random_instance, InstanceShape};
use qild::mpoly::MultiPoly;
use qild::oracle::brute_force_decompose;
use qild::qild::{
    decompose_bivariate_iter, decompose_newton, linearity_report, verify_report, QilDecomposition,
};
use qild::text::{format_poly, parse};
use qild::Error;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Algorithm {
    Newton,
    Bivariate,
    Oracle,
}

#[derive(Debug, Parser)]
#[command(
    name = "qild",
    version,
    about = "q-integer linear decomposition of polynomials over Z[q, 1/q]"
)]
struct Args {
    /// Input file with one polynomial; standard input when absent.
    file: Option<String>,

    #[arg(long, value_enum, default_value_t = Algorithm::Newton)]
    algorithm: Algorithm,

    /// Only decide whether the input is q-integer linear.
    #[arg(long)]
    linearity_only: bool,

    /// Re-expand the result and check all invariants.
    #[arg(long)]
    verify: bool,

    #[arg(long)]
    json: bool,

    /// Variable order, e.g. `x1,x2,x3`.
    #[arg(long, value_delimiter = ',')]
    vars: Option<Vec<String>>,

    /// Repeat the computation k times and report wall times.
    #[arg(long, value_name = "K")]
    bench: Option<usize>,

    /// Use a random instance of shape `n,m,d0,d` instead of reading input.
    #[arg(long, value_name = "N,M,D0,D", value_delimiter = ',')]
    generate: Option<Vec<u32>>,

    /// Print the generated instance and exit.
    #[arg(long, requires = "generate")]
    generate_only: bool,

    #[arg(long, default_value_t = 0)]
    seed: u64,
}

#[derive(Serialize)]
struct JsonFactor {
    #[serde(rename = "type")]
    ty: Vec<i64>,
    poly: String,
}

#[derive(Serialize)]
struct JsonDecomposition {
    nvars: usize,
    content: String,
    monomial: Vec<i64>,
    p0: String,
    factors: Vec<JsonFactor>,
}

#[derive(Serialize)]
struct JsonLinearity {
    linear: bool,
    witness: Option<String>,
    extractions: usize,
}

enum Failure {
    Parse(String),
    Contract(String),
}

impl From<Error> for Failure {
    fn from(e: Error) -> Self {
        match e {
            Error::Parse { .. } => Failure::Parse(e.to_string()),
            other => Failure::Contract(other.to_string()),
        }
    }
}

fn main() -> ExitCode {
    let args = Args::parse();
    match run(&args) {
        Ok(()) => ExitCode::SUCCESS,
        Err(Failure::Parse(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(1)
        }
        Err(Failure::Contract(msg)) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

fn read_input(args: &Args) -> Result<(MultiPoly, Vec<String>), Failure> {
    if let Some(shape) = &args.generate {
        if shape.len() != 4 {
            return Err(Failure::Contract(
                "--generate expects four values n,m,d0,d".into(),
            ));
        }
        let shape = InstanceShape::new(shape[0] as usize, shape[1] as usize, shape[2], shape[3]);
        if shape.nvars == 0 {
            return Err(Failure::Contract(
                "generated instances need at least one variable".into(),
            ));
        }
        let mut rng = ChaCha8Rng::seed_from_u64(args.seed);
        let p = random_instance(&mut rng, shape);
        let names = args
            .vars
            .clone()
            .unwrap_or_else(|| (1..=shape.nvars).map(|i| format!("x{i}")).collect());
        if names.len() != shape.nvars {
            return Err(Failure::Contract(format!(
                "{} variable names given for {} variables",
                names.len(),
                shape.nvars
            )));
        }
        return Ok((p, names));
    }
    let src = match &args.file {
        Some(path) => {
            fs::read_to_string(path).map_err(|e| Failure::Contract(format!("{path}: {e}")))?
        }
        None => {
            let mut s = String::new();
            io::stdin()
                .read_to_string(&mut s)
                .map_err(|e| Failure::Contract(format!("stdin: {e}")))?;
            s
        }
    };
    let parsed = parse(&src)?;
    let names = args.vars.clone().unwrap_or_else(|| parsed.default_order());
    let p = parsed.to_poly(&names)?;
    Ok((p, names))
}

fn decompose(alg: Algorithm, p: &MultiPoly) -> qild::Result<QilDecomposition> {
    match alg {
        Algorithm::Newton => decompose_newton(p),
        Algorithm::Bivariate => decompose_bivariate_iter(p),
        Algorithm::Oracle => brute_force_decompose(p),
    }
}

fn run(args: &Args) -> Result<(), Failure> {
    let (p, names) = read_input(args)?;
    let refs: Vec<&str> = names.iter().map(String::as_str).collect();
    if args.generate_only {
        println!("{}", format_poly(&p, &names));
        return Ok(());
    }
    if p.is_zero() {
        return Err(Error::ZeroPolynomial.into());
    }

    let mut times = Vec::new();
    let reps = args.bench.unwrap_or(1).max(1);

    if args.linearity_only {
        let mut report = None;
        for _ in 0..reps {
            let t = Instant::now();
            report = Some(linearity_report(&p)?);
            times.push(t.elapsed());
        }
        let r = report.unwrap();
        let witness = r.witness.as_ref().map(|w| w.describe(&refs));
        if args.json {
            let out = JsonLinearity {
                linear: r.linear,
                witness,
                extractions: r.extractions,
            };
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
        } else {
            println!("q-integer-linear: {}", r.linear);
            if let Some(w) = witness {
                println!("witness: {w}");
            }
        }
        report_bench(args, &times);
        return Ok(());
    }

    let mut result = None;
    for _ in 0..reps {
        let t = Instant::now();
        result = Some(decompose(args.algorithm, &p)?);
        times.push(t.elapsed());
    }
    let d = result.unwrap();
    if args.json {
        println!(
            "{}",
            serde_json::to_string_pretty(&to_json(&d, &names)).unwrap()
        );
    } else {
        print_text(&d, &names);
    }
    report_bench(args, &times);
    if args.verify {
        match verify_report(&p, &d) {
            Ok(()) => eprintln!("verify: ok"),
            Err(msg) => return Err(Failure::Contract(format!("verification failed: {msg}"))),
        }
    }
    Ok(())
}

fn to_json(d: &QilDecomposition, names: &[String]) -> JsonDecomposition {
    JsonDecomposition {
        nvars: d.nvars(),
        content: d.content.to_string(),
        monomial: d.monomial.clone(),
        p0: format_poly(&d.p0, names),
        factors: d
            .factors
            .iter()
            .map(|f| JsonFactor {
                ty: f.ty.entries().to_vec(),
                poly: f.poly.to_string_with(&["y"]),
            })
            .collect(),
    }
}

fn print_text(d: &QilDecomposition, names: &[String]) {
    println!("content: {}", d.content);
    let m: Vec<String> = d.monomial.iter().map(i64::to_string).collect();
    println!("monomial: [{}]", m.join(","));
    println!("p0: {}", format_poly(&d.p0, names));
    if d.factors.is_empty() {
        println!("factors: []");
    } else {
        println!("factors:");
        for f in &d.factors {
            println!("  {} {}", f.ty, f.poly.to_string_with(&["y"]));
        }
    }
}

fn report_bench(args: &Args, times: &[Duration]) {
    if args.bench.is_none() {
        return;
    }
    let mut sorted = times.to_vec();
    sorted.sort();
    let ms = |d: Duration| d.as_secs_f64() * 1e3;
    eprintln!(
        "bench: {} runs, min {:.3} ms, median {:.3} ms, max {:.3} ms",
        sorted.len(),
        ms(sorted[0]),
        ms(sorted[sorted.len() / 2]),
        ms(sorted[sorted.len() - 1])
    );
}
