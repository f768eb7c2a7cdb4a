// Flag checks negate comparisons on purpose: `!(x >= 0.0)` rejects NaN along
// with the out-of-range values.
#![allow(clippy::neg_cmp_op_on_partial_ord)]
#![allow(clippy::manual_range_contains)]

use std::env;
use std::fs;
use std::io::Write;
use std::process;

use clap::{Args, Parser, Subcommand};

use wpdb::config::{resolve_seed, OutputFormat, RunConfig, VariantName, SEED_ENV_VAR};
use wpdb::output::{format_sig10, write_csv, write_json};
use wpdb::runner::{estimate_mean_snr_parallel, init_worker_pool};
use wpdb::sweep::{run_sweep, PolicyKind};
use wpdb::validate::{all_passed, run_battery};
use wpdb_core::{predict_mean_snr, snr_to_db, EhPolicy, SystemParams};

/// Exit codes: 0 success, 1 usage/parse error, 2 configuration or parameter
/// validation error, 3 I/O error, 4 validation battery failure.
const EXIT_USAGE: i32 = 1;
const EXIT_CONFIG: i32 = 2;
const EXIT_IO: i32 = 3;
const EXIT_VALIDATE: i32 = 4;

#[derive(Parser)]
#[command(
    name = "wpdb",
    version,
    about = "Wirelessly powered distributed-beamforming relay network: \
             mean-SNR predictions and Monte-Carlo simulation"
)]
struct Cli {
    /// Cap the number of worker threads. Changes throughput, never results.
    #[arg(long, global = true)]
    workers: Option<usize>,
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Closed-form mean-SNR prediction for one parameter point.
    Predict(PredictArgs),
    /// Monte-Carlo estimate with the matching prediction side by side.
    Simulate(SimulateArgs),
    /// Run a parameter sweep from a JSON config; write CSV or JSON.
    Sweep(SweepArgs),
    /// Run the self-check property battery (PASS/FAIL per property).
    Validate(ValidateArgs),
}

#[derive(Args)]
struct PredictArgs {
    /// Energy-harvesting policy family.
    #[arg(long, value_enum)]
    policy: PolicyKind,
    /// Harvesting fraction: alpha for ts, rho for ps.
    #[arg(long)]
    fraction: f64,
    /// Number of relays.
    #[arg(long)]
    n: usize,
    /// RF-to-DC conversion efficiency, in [0, 1].
    #[arg(long)]
    eta: f64,
    /// Source transmit power P_S, linear watts.
    #[arg(long = "ps-power")]
    ps_power: f64,
    /// Variance of the net phase error, rad^2.
    #[arg(long = "sigma-theta-sq")]
    sigma_theta_sq: f64,
    /// Destination noise variance.
    #[arg(long = "noise-var", default_value_t = 1.0)]
    noise_var: f64,
    /// Prediction variant.
    #[arg(long, value_enum, default_value = "corrected")]
    variant: VariantName,
    /// Also print the mean SNR in dB.
    #[arg(long)]
    db: bool,
}

#[derive(Args)]
struct SimulateArgs {
    #[command(flatten)]
    point: PredictArgs,
    /// Number of Monte-Carlo trials (>= 2).
    #[arg(long)]
    trials: u64,
    /// Master seed; trial t draws from substream t.
    #[arg(long)]
    seed: u64,
}

#[derive(Args)]
struct SweepArgs {
    /// Path to the JSON sweep configuration.
    config: std::path::PathBuf,
    /// Override the config's master seed (beats WPDB_SEED, which beats the
    /// config value).
    #[arg(long)]
    seed: Option<u64>,
}

#[derive(Args)]
struct ValidateArgs {
    /// Monte-Carlo trials per checked grid point.
    #[arg(long, default_value_t = 100_000)]
    trials: u64,
    /// Master seed for the battery's simulations.
    #[arg(long, default_value_t = 42)]
    seed: u64,
}

enum CliError {
    Config(String),
    Io(String),
    ValidationFailed,
}

impl CliError {
    fn exit_code(&self) -> i32 {
        match self {
            CliError::Config(_) => EXIT_CONFIG,
            CliError::Io(_) => EXIT_IO,
            CliError::ValidationFailed => EXIT_VALIDATE,
        }
    }
}

fn main() {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            // Help and version render to stdout and exit 0; real parse
            // errors exit 1.
            let code = if e.use_stderr() { EXIT_USAGE } else { 0 };
            let _ = e.print();
            process::exit(code);
        }
    };

    if let Err(e) = init_worker_pool(cli.workers) {
        eprintln!("error: {e}");
        process::exit(EXIT_CONFIG);
    }

    let result = match cli.command {
        Command::Predict(args) => cmd_predict(&args),
        Command::Simulate(args) => cmd_simulate(&args),
        Command::Sweep(args) => cmd_sweep(&args),
        Command::Validate(args) => cmd_validate(&args),
    };

    if let Err(e) = result {
        match &e {
            CliError::Config(msg) | CliError::Io(msg) => eprintln!("error: {msg}"),
            CliError::ValidationFailed => {}
        }
        process::exit(e.exit_code());
    }
}

/// Validate the shared parameter flags, naming the offending flag in every
/// message.
fn build_point(args: &PredictArgs) -> Result<(SystemParams, EhPolicy), CliError> {
    let policy = match args.policy {
        PolicyKind::Ts => EhPolicy::time_switching(args.fraction),
        PolicyKind::Ps => EhPolicy::power_splitting(args.fraction),
    }
    .map_err(|e| CliError::Config(format!("--fraction: {e}")))?;

    if args.n < 1 {
        return Err(CliError::Config("--n must be >= 1".into()));
    }
    if !(args.ps_power > 0.0) {
        return Err(CliError::Config("--ps-power must be > 0".into()));
    }
    if !(args.eta >= 0.0 && args.eta <= 1.0) {
        return Err(CliError::Config("--eta must be in [0, 1]".into()));
    }
    if !(args.eta > 0.0) {
        return Err(CliError::Config(
            "--eta: 0 collapses the power distribution (degenerate policy)".into(),
        ));
    }
    if !(args.sigma_theta_sq >= 0.0) {
        return Err(CliError::Config("--sigma-theta-sq must be >= 0".into()));
    }
    if !(args.noise_var > 0.0) {
        return Err(CliError::Config("--noise-var must be > 0".into()));
    }

    let params = SystemParams {
        n_relays: args.n,
        source_power: args.ps_power,
        eta: args.eta,
        sigma_theta_sq: args.sigma_theta_sq,
        noise_var: args.noise_var,
    };
    params
        .validate()
        .map_err(|e| CliError::Config(e.to_string()))?;
    Ok((params, policy))
}

fn print_point(args: &PredictArgs) {
    println!("policy={}", args.policy);
    println!("fraction={}", format_sig10(args.fraction));
    println!("n_relays={}", args.n);
    println!("eta={}", format_sig10(args.eta));
    println!("ps_power={}", format_sig10(args.ps_power));
    println!("sigma_theta_sq={}", format_sig10(args.sigma_theta_sq));
    println!("noise_var={}", format_sig10(args.noise_var));
}

fn cmd_predict(args: &PredictArgs) -> Result<(), CliError> {
    let (params, policy) = build_point(args)?;
    let pred = predict_mean_snr(&params, policy, args.variant.to_variant())
        .map_err(|e| CliError::Config(e.to_string()))?;

    print_point(args);
    println!(
        "variant={}",
        match args.variant {
            VariantName::Corrected => "corrected",
            VariantName::Literal => "literal",
        }
    );
    println!("m_i={}", format_sig10(pred.m_i));
    println!("m_q={}", format_sig10(pred.m_q));
    println!("var_i={}", format_sig10(pred.var_i));
    println!("var_q={}", format_sig10(pred.var_q));
    println!("mean_snr={}", format_sig10(pred.mean_snr));
    if args.db {
        let db = snr_to_db(pred.mean_snr).map_err(|e| CliError::Config(e.to_string()))?;
        println!("mean_snr_db={}", format_sig10(db));
    }
    Ok(())
}

fn cmd_simulate(args: &SimulateArgs) -> Result<(), CliError> {
    let (params, policy) = build_point(&args.point)?;
    if args.trials < 2 {
        return Err(CliError::Config("--trials must be >= 2".into()));
    }
    let (mc, redraws) = estimate_mean_snr_parallel(&params, policy, args.trials, args.seed)
        .map_err(|e| CliError::Config(e.to_string()))?;
    let predicted = wpdb_core::exact_mean_snr(&params, policy)
        .map_err(|e| CliError::Config(e.to_string()))?;

    print_point(&args.point);
    println!("trials={}", mc.trials);
    println!("seed={}", args.seed);
    println!("mean={}", format_sig10(mc.mean));
    println!("sample_var={}", format_sig10(mc.sample_var));
    println!("std_error={}", format_sig10(mc.std_error));
    println!("ci95_lo={}", format_sig10(mc.ci95_lo));
    println!("ci95_hi={}", format_sig10(mc.ci95_hi));
    println!("redraws={redraws}");
    println!("predicted_corrected={}", format_sig10(predicted));
    println!(
        "prediction_in_ci95={}",
        mc.ci95_lo <= predicted && predicted <= mc.ci95_hi
    );
    if args.point.db {
        let mc_db = snr_to_db(mc.mean).map_err(|e| CliError::Config(e.to_string()))?;
        let pred_db = snr_to_db(predicted).map_err(|e| CliError::Config(e.to_string()))?;
        println!("mean_db={}", format_sig10(mc_db));
        println!("predicted_corrected_db={}", format_sig10(pred_db));
    }
    Ok(())
}

fn cmd_sweep(args: &SweepArgs) -> Result<(), CliError> {
    let text = fs::read_to_string(&args.config)
        .map_err(|e| CliError::Io(format!("reading {}: {e}", args.config.display())))?;
    let cfg = RunConfig::from_json(&text).map_err(CliError::Config)?;

    let env_seed = match env::var(SEED_ENV_VAR) {
        Ok(v) => Some(v),
        Err(env::VarError::NotPresent) => None,
        Err(env::VarError::NotUnicode(_)) => {
            return Err(CliError::Config(format!("{SEED_ENV_VAR} is not valid UTF-8")))
        }
    };
    let seed_override =
        resolve_seed(args.seed, env_seed.as_deref()).map_err(CliError::Config)?;

    let output_path = cfg.output_path.clone();
    let output_format = cfg.output_format;
    let spec = cfg.into_spec(seed_override).map_err(CliError::Config)?;
    let run = run_sweep(&spec).map_err(CliError::Config)?;

    let mut buffer = Vec::new();
    match output_format {
        OutputFormat::Csv => write_csv(&mut buffer, &run),
        OutputFormat::Json => write_json(&mut buffer, &run, spec.master_seed, spec.trials),
    }
    .map_err(|e| CliError::Io(e.to_string()))?;

    if output_path == "-" {
        std::io::stdout()
            .write_all(&buffer)
            .map_err(|e| CliError::Io(e.to_string()))?;
    } else {
        fs::write(&output_path, &buffer)
            .map_err(|e| CliError::Io(format!("writing {output_path}: {e}")))?;
    }
    Ok(())
}

fn cmd_validate(args: &ValidateArgs) -> Result<(), CliError> {
    if args.trials < 2 {
        return Err(CliError::Config("--trials must be >= 2".into()));
    }
    let results = run_battery(args.trials, args.seed);
    for r in &results {
        println!("{}", r.line());
    }
    let checked = results.iter().filter(|r| !r.informational).count();
    let passed = results
        .iter()
        .filter(|r| !r.informational && r.pass)
        .count();
    println!("RESULT: {} ({passed}/{checked} properties)", if all_passed(&results) { "PASS" } else { "FAIL" });
    if all_passed(&results) {
        Ok(())
    } else {
        Err(CliError::ValidationFailed)
    }
}
