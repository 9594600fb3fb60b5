//! Command-line entry point: seeded property-suite runs with JSON reports,
//! plus one-shot commands for splitting idempotents, completing registry
//! functors, and the shin/tsadi round trip. Exit codes: 0 all checks pass,
//! 1 a property failed or the mathematical input was invalid, 2 usage.

use std::process::ExitCode;

use clap::{Parser, Subcommand};

use karoubi::bifunctor::{HomBifunctor, TildeBifunctor};
use karoubi::completion::{complete_functor, Completion};
use karoubi::equivalence::{shin, tsadi};
use karoubi::error::Error;
use karoubi::extensions::ExtObject;
use karoubi::generate::{rand_completed_object, rand_matrix};
use karoubi::jsonio;
use karoubi::laws::rng_from;
use karoubi::matcat::MatCat;
use karoubi::matrix::rank_factorize_idempotent;
use karoubi::registry::scaling_functor;
use karoubi::ring::Ring;
use karoubi::suite::{run_suite, SuiteConfig};

#[derive(Parser)]
#[command(name = "karoubi", version, about = "Idempotent completions and categories of extensions over exact matrix categories")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Run property suites and emit a JSON report.
    Run {
        /// Suite name or `all`.
        #[arg(long, default_value = "all")]
        suite: String,
        /// Seed for all generators (overridden by KAROUBI_SEED).
        #[arg(long, default_value_t = 1)]
        seed: u64,
        /// Cases per property.
        #[arg(long, default_value_t = 200)]
        cases: usize,
        /// Maximum matrix dimension.
        #[arg(long, default_value_t = 4)]
        max_dim: usize,
        /// Comma-separated list of primes.
        #[arg(long, default_value = "2,5", value_delimiter = ',')]
        primes: Vec<u64>,
        /// Include the rationals (on by default; use --without-q to drop).
        #[arg(long, default_value_t = false)]
        with_q: bool,
        /// Exclude the rationals.
        #[arg(long, default_value_t = false)]
        without_q: bool,
        /// Write the JSON report to this path.
        #[arg(long)]
        out: Option<std::path::PathBuf>,
    },
    /// Split an idempotent matrix by rank factorization.
    Split {
        /// Matrix JSON (full object or bare entries array).
        matrix: String,
        /// Ring tag: `q` or `fp<prime>`, e.g. `fp2`.
        #[arg(long)]
        ring: String,
    },
    /// Apply the completion of a registry functor to a seeded sample.
    Complete {
        /// Functor name: identity, doubling or tripling.
        functor: String,
        #[arg(long)]
        ring: String,
        #[arg(long, default_value_t = 1)]
        seed: u64,
    },
    /// Apply shin then tsadi to a lifted extension and assert exactness of
    /// the round trip.
    Roundtrip {
        /// Lifted extension JSON with fields A, C, alpha, e_A, e_C.
        extension: String,
        #[arg(long)]
        ring: String,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match dispatch(cli) {
        Ok(code) => code,
        Err(Error::Usage(msg)) => {
            eprintln!("usage error: {msg}");
            ExitCode::from(2)
        }
        Err(e) => {
            eprintln!("error: {e}");
            ExitCode::from(1)
        }
    }
}

fn env_seed(cli_seed: u64) -> Result<u64, Error> {
    match std::env::var("KAROUBI_SEED") {
        Ok(v) => v
            .parse::<u64>()
            .map_err(|_| Error::Usage(format!("KAROUBI_SEED must be an integer, got `{v}`"))),
        Err(_) => Ok(cli_seed),
    }
}

fn dispatch(cli: Cli) -> Result<ExitCode, Error> {
    match cli.command {
        Command::Run { suite, seed, cases, max_dim, primes, with_q, without_q, out } => {
            let cfg = SuiteConfig {
                seed: env_seed(seed)?,
                cases,
                max_dim,
                primes,
                // rationals are part of the default instance set; --with-q
                // is accepted for explicitness, --without-q drops them
                with_q: with_q || !without_q,
                suites: vec![suite],
            };
            let report = run_suite(&cfg)?;
            for entry in &report.entries {
                if entry.pass() {
                    println!("PASS {}", entry.name());
                } else {
                    println!(
                        "FAIL {}: {}",
                        entry.name(),
                        entry.counterexample().unwrap_or("no counterexample recorded")
                    );
                }
            }
            println!(
                "{} checks, {} passed, {} failed in {} ms",
                report.total, report.passed, report.failed, report.wall_clock_ms
            );
            if let Some(path) = out {
                let json = serde_json::to_string_pretty(&report)
                    .map_err(|e| Error::Json(e.to_string()))?;
                std::fs::write(&path, json)
                    .map_err(|e| Error::Usage(format!("cannot write {}: {e}", path.display())))?;
            }
            Ok(if report.all_pass() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Split { matrix, ring } => {
            let ring = Ring::parse(&ring)?;
            let value: serde_json::Value =
                serde_json::from_str(&matrix).map_err(|e| Error::Json(e.to_string()))?;
            let m = jsonio::matrix_from_json_with_ring(&value, ring)?;
            if !m.is_square() || !m.is_idempotent()? {
                return Err(Error::NotIdempotent);
            }
            let w = rank_factorize_idempotent(&m)?;
            println!("{}", serde_json::to_string_pretty(&jsonio::split_witness_to_json(&w)).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Complete { functor, ring, seed } => {
            let ring = Ring::parse(&ring)?;
            let seed = env_seed(seed)?;
            let k = match functor.as_str() {
                "identity" => 1,
                "doubling" => 2,
                "tripling" => 3,
                other => {
                    return Err(Error::Usage(format!(
                        "unknown functor `{other}`; registry: identity, doubling, tripling"
                    )))
                }
            };
            let f = scaling_functor(ring, k);
            let lifted = complete_functor(&f);
            let completed = Completion::new(MatCat::new(ring));
            let mut rng = rng_from(seed);
            let obj = rand_completed_object(ring, 3, &mut rng);
            let img = lifted.apply_obj(&obj);
            let raw = rand_matrix(ring, obj.base, obj.base, &mut rng);
            let mid = obj.e.mul(&raw)?.mul(&obj.e)?;
            let mor = completed.morphism(obj.e.clone(), mid, obj.e.clone())?;
            let img_mor = lifted.apply_mor(&mor);
            let out = serde_json::json!({
                "functor": f.name,
                "ring": ring.name(),
                "seed": seed,
                "object": {"base": obj.base, "e": jsonio::matrix_to_json(&obj.e)},
                "image_object": {"base": img.base, "e": jsonio::matrix_to_json(&img.e)},
                "morphism": jsonio::completed_morphism_to_json(&mor),
                "image_morphism": jsonio::completed_morphism_to_json(&img_mor),
            });
            println!("{}", serde_json::to_string_pretty(&out).unwrap());
            Ok(ExitCode::SUCCESS)
        }
        Command::Roundtrip { extension, ring } => {
            let ring = Ring::parse(&ring)?;
            let value: serde_json::Value =
                serde_json::from_str(&extension).map_err(|e| Error::Json(e.to_string()))?;
            let (a_dim, c_dim, x) = jsonio::tilde_extension_from_json(&value)?;
            let bif = HomBifunctor::new(MatCat::new(ring));
            let tilde = TildeBifunctor::new(bif);
            let completed = tilde.completed_cat().clone();
            let a_obj = completed.object(a_dim, x.e_a.clone())?;
            let c_obj = completed.object(c_dim, x.e_c.clone())?;
            let elem = tilde.element(x.e_a.clone(), x.alpha.clone(), x.e_c.clone())?;
            let obj = ExtObject { a: a_obj, c: c_obj, alpha: elem };

            let shin_f = shin::<TildeBifunctor<HomBifunctor>, HomBifunctor>(&tilde);
            let tsadi_f = tsadi::<TildeBifunctor<HomBifunctor>, HomBifunctor>(&tilde, &bif);
            let image = shin_f.apply_obj(&obj);
            let back = tsadi_f.apply_obj(&image);

            let shin_json = serde_json::json!({
                "object": jsonio::ext_object_to_json(&image.base),
                "e_A": jsonio::matrix_to_json(&image.e.a),
                "e_C": jsonio::matrix_to_json(&image.e.c),
            });
            println!("shin: {}", serde_json::to_string_pretty(&shin_json).unwrap());
            let tsadi_json = jsonio::tilde_extension_to_json(
                back.a.base,
                back.c.base,
                &back.alpha,
            );
            println!("tsadi: {}", serde_json::to_string_pretty(&tsadi_json).unwrap());
            if back == obj {
                println!("roundtrip: exact");
                Ok(ExitCode::SUCCESS)
            } else {
                println!("roundtrip: MISMATCH");
                Ok(ExitCode::from(1))
            }
        }
    }
}
