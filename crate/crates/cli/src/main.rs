//! Command-line front end: reproducible computations with JSON or CSV
//! output on stdout.
//!
//! Exit codes: 0 on success, 2 on usage or precondition errors, 3 on
//! numerical failures (root finder non-convergence).

mod output;

use clap::{Args, Parser, Subcommand, ValueEnum};
use fejerstab::control::{
    closed_loop_multipliers, min_depth, simulate, synthesize, Controller, LogisticMap, ScalarMap,
    TraceStatus,
};
use fejerstab::extremal::optimal_coeffs;
use fejerstab::oracle::{
    verify_theorem1_with, DEFAULT_SEARCH_PASSES, DEFAULT_SEARCH_SAMPLES, DEFAULT_SEARCH_SEED,
};
use fejerstab::schur::{critical_gains, max_k2_bound, stability_interval_with, GainMargin};
use fejerstab::trigpoly::CoeffVector;
use fejerstab::Error;
use output::{fmt12, sig12, sig12_slice, Envelope};
use serde_json::json;
use std::process::ExitCode;

#[derive(Parser)]
#[command(
    name = "fejerstab",
    version,
    about = "Extremal trigonometric polynomial pairs, robust Schur stability margins, and optimal delayed-feedback stabilization of chaotic maps"
)]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Args)]
struct FormatArg {
    /// Output format.
    #[arg(long, value_enum, default_value = "json")]
    format: Format,
}

#[derive(Subcommand)]
enum Command {
    /// Optimal coefficients, parity sums and the extremal value for a
    /// given degree count.
    Coeffs {
        /// Degree count n (number of coefficients).
        #[arg(long)]
        n: usize,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Run the extremal-value verification checks (closed forms plus a
    /// seeded brute-force search) at desk scale (n <= 4).
    Verify {
        #[arg(long)]
        n: usize,
        /// Coarse hyperplane samples for the search.
        #[arg(long, default_value_t = DEFAULT_SEARCH_SAMPLES)]
        samples: usize,
        /// Polish passes after the coarse stage.
        #[arg(long, default_value_t = DEFAULT_SEARCH_PASSES)]
        polish_passes: usize,
        /// Seed for the counter-based sampler.
        #[arg(long, default_value_t = DEFAULT_SEARCH_SEED)]
        seed: u64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Robust stability margins k1, k2 and the segment length phi for a
    /// normalized coefficient family.
    Schur {
        /// Explicit comma-separated coefficients (must sum to 1).
        #[arg(long, value_delimiter = ',', conflicts_with = "optimal_n")]
        coeffs: Option<Vec<f64>>,
        /// Use the optimal coefficients for this n instead.
        #[arg(long)]
        optimal_n: Option<usize>,
        /// Scan cap: a side with no stability loss below this is reported
        /// as unbounded.
        #[arg(long, default_value_t = 1e6)]
        k_cap: f64,
        /// Bisection width for the margins.
        #[arg(long, default_value_t = 1e-10)]
        tol: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Synthesize the minimal-depth delayed-feedback controller for
    /// multipliers in (-mu_star, -1).
    Synthesize {
        #[arg(long)]
        mu_star: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Simulate the logistic map, optionally under delayed-feedback
    /// control; CSV rows are (step, x, deviation from x*).
    Simulate {
        /// Map family; only `logistic` ships.
        #[arg(long, default_value = "logistic")]
        map: String,
        /// Logistic parameter h in [0, 4].
        #[arg(long)]
        h: f64,
        /// Initial state (also the constant prehistory).
        #[arg(long)]
        x0: f64,
        #[arg(long, default_value_t = 1000)]
        steps: usize,
        /// `none`, `auto` (synthesize from the map multiplier), or
        /// comma-separated gains summing to 0.
        #[arg(long, default_value = "none")]
        control: String,
        #[arg(long, default_value_t = 1e-8)]
        conv_tol: f64,
        #[command(flatten)]
        format: FormatArg,
    },
    /// Post-transient states over a parameter range (bifurcation-diagram
    /// data); CSV rows are (h, x).
    Sweep {
        #[arg(long, default_value = "logistic")]
        map: String,
        #[arg(long)]
        h_min: f64,
        #[arg(long)]
        h_max: f64,
        #[arg(long)]
        h_steps: usize,
        /// Iterations discarded before recording.
        #[arg(long, default_value_t = 500)]
        transient: usize,
        /// States recorded per parameter value.
        #[arg(long, default_value_t = 100)]
        keep: usize,
        /// `none` or `auto`.
        #[arg(long, default_value = "none")]
        control: String,
        /// Initial state for every h.
        #[arg(long, default_value_t = 0.5)]
        x0: f64,
        #[command(flatten)]
        format: FormatArg,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(()) => ExitCode::SUCCESS,
        Err(err) => {
            eprintln!("error: {err}");
            match err {
                Error::RootsNotConverged { .. } => ExitCode::from(3),
                _ => ExitCode::from(2),
            }
        }
    }
}

fn run(command: Command) -> Result<(), Error> {
    match command {
        Command::Coeffs { n, format } => cmd_coeffs(n, format.format),
        Command::Verify {
            n,
            samples,
            polish_passes,
            seed,
            format,
        } => cmd_verify(n, samples, polish_passes, seed, format.format),
        Command::Schur {
            coeffs,
            optimal_n,
            k_cap,
            tol,
            format,
        } => cmd_schur(coeffs, optimal_n, k_cap, tol, format.format),
        Command::Synthesize { mu_star, format } => cmd_synthesize(mu_star, format.format),
        Command::Simulate {
            map,
            h,
            x0,
            steps,
            control,
            conv_tol,
            format,
        } => cmd_simulate(&map, h, x0, steps, &control, conv_tol, format.format),
        Command::Sweep {
            map,
            h_min,
            h_max,
            h_steps,
            transient,
            keep,
            control,
            x0,
            format,
        } => cmd_sweep(
            &map, h_min, h_max, h_steps, transient, keep, &control, x0, format.format,
        ),
    }
}

fn cmd_coeffs(n: usize, format: Format) -> Result<(), Error> {
    let sol = optimal_coeffs(n)?;
    let env = Envelope::new("coeffs", json!({ "n": n }));
    match format {
        Format::Json => env.print_json(json!({
            "a0": sig12_slice(sol.a0.coeffs()),
            "gamma0": sig12_slice(sol.g0.values()),
            "extremal_value": sig12(sol.value),
            "max_k2": sig12(max_k2_bound(n)?),
            "abs_sum": sig12(sol.a0.abs_sum()),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = (0..n)
                .map(|j| {
                    vec![
                        (j + 1).to_string(),
                        fmt12(sol.a0.coeffs()[j]),
                        fmt12(sol.g0.values()[j]),
                    ]
                })
                .collect();
            env.print_csv(
                &["j", "a0", "gamma0"],
                &rows,
                &[
                    ("extremal_value", fmt12(sol.value)),
                    ("max_k2", fmt12(max_k2_bound(n)?)),
                    ("abs_sum", fmt12(sol.a0.abs_sum())),
                ],
            );
        }
    }
    Ok(())
}

fn cmd_verify(
    n: usize,
    samples: usize,
    polish_passes: usize,
    seed: u64,
    format: Format,
) -> Result<(), Error> {
    let report = verify_theorem1_with(n, samples, polish_passes, seed)?;
    let env = Envelope::new(
        "verify",
        json!({ "n": n, "samples": samples, "polish_passes": polish_passes, "seed": seed }),
    );
    match format {
        Format::Json => env.print_json(json!({
            "checks": report.checks.iter().map(|c| json!({
                "check": c.name,
                "measured": sig12(c.measured),
                "tolerance": sig12(c.tolerance),
                "pass": c.pass,
            })).collect::<Vec<_>>(),
            "all_pass": report.all_pass(),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = report
                .checks
                .iter()
                .map(|c| {
                    vec![
                        c.name.to_string(),
                        fmt12(c.measured),
                        fmt12(c.tolerance),
                        if c.pass { "pass" } else { "fail" }.to_string(),
                    ]
                })
                .collect();
            env.print_csv(
                &["check", "measured", "tolerance", "result"],
                &rows,
                &[("all_pass", report.all_pass().to_string())],
            );
        }
    }
    if report.all_pass() {
        Ok(())
    } else {
        Err(Error::Domain("verification checks failed".into()))
    }
}

fn cmd_schur(
    coeffs: Option<Vec<f64>>,
    optimal_n: Option<usize>,
    k_cap: f64,
    tol: f64,
    format: Format,
) -> Result<(), Error> {
    let (a, params) = match (coeffs, optimal_n) {
        (Some(c), None) => {
            let v = CoeffVector::new(c.clone())?;
            if !v.is_normalized() {
                return Err(Error::NotNormalized { sum: v.sum() });
            }
            (v, json!({ "coeffs": c, "k_cap": k_cap, "tol": tol }))
        }
        (None, Some(n)) => (
            optimal_coeffs(n)?.a0,
            json!({ "optimal_n": n, "k_cap": k_cap, "tol": tol }),
        ),
        _ => {
            return Err(Error::Domain(
                "provide exactly one of --coeffs or --optimal-n".into(),
            ))
        }
    };
    let iv = stability_interval_with(&a, k_cap, tol)?;
    let gains = critical_gains(&a)?;
    let margin_json = |m: GainMargin| match m {
        GainMargin::Lost(k) => json!(sig12(k)),
        GainMargin::AtLeast(cap) => json!(format!(">={}", fmt12(cap))),
    };
    let margin_str = |m: GainMargin| match m {
        GainMargin::Lost(k) => fmt12(k),
        GainMargin::AtLeast(cap) => format!(">={}", fmt12(cap)),
    };
    let env = Envelope::new("schur", params);
    match format {
        Format::Json => env.print_json(json!({
            "k1": margin_json(iv.k1),
            "k2": margin_json(iv.k2),
            "phi": iv.phi().map(sig12),
            "critical_gains": sig12_slice(&gains),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = gains.iter().map(|&g| vec![fmt12(g)]).collect();
            env.print_csv(
                &["critical_gain"],
                &rows,
                &[
                    ("k1", margin_str(iv.k1)),
                    ("k2", margin_str(iv.k2)),
                    ("phi", iv.phi().map_or("none".to_string(), fmt12)),
                ],
            );
        }
    }
    Ok(())
}

fn cmd_synthesize(mu_star: f64, format: Format) -> Result<(), Error> {
    let controller = synthesize(mu_star)?;
    let depth = min_depth(mu_star)?;
    // predicted closed-loop root moduli just inside the covered range
    let mu_edge = -(mu_star - 1e-6);
    let moduli: Vec<f64> = closed_loop_multipliers(mu_edge, &controller)?
        .iter()
        .map(|z| z.norm())
        .collect();
    let env = Envelope::new("synthesize", json!({ "mu_star": mu_star }));
    match format {
        Format::Json => env.print_json(json!({
            "depth": depth,
            "taps": controller.taps(),
            "eps": sig12_slice(controller.gains()),
            "gain_budget": sig12(controller.gain_budget()),
            "edge_multiplier": sig12(mu_edge),
            "edge_root_moduli": sig12_slice(&moduli),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = controller
                .gains()
                .iter()
                .enumerate()
                .map(|(j, &e)| vec![(j + 1).to_string(), fmt12(e)])
                .collect();
            env.print_csv(
                &["j", "eps"],
                &rows,
                &[
                    ("depth", depth.to_string()),
                    ("taps", controller.taps().to_string()),
                    ("gain_budget", fmt12(controller.gain_budget())),
                    (
                        "edge_root_moduli",
                        moduli.iter().map(|&m| fmt12(m)).collect::<Vec<_>>().join(";"),
                    ),
                ],
            );
        }
    }
    Ok(())
}

fn require_logistic(map: &str) -> Result<(), Error> {
    if map == "logistic" {
        Ok(())
    } else {
        Err(Error::Domain(format!(
            "unknown map family '{map}' (only 'logistic' ships with the CLI)"
        )))
    }
}

/// Controller requested on the command line: `none`, `auto`, or explicit
/// comma-separated gains. `auto` synthesizes from the map multiplier and
/// uses no control where |mu| <= 1 (the equilibrium is already stable).
fn parse_control(spec: &str, mu: Option<f64>) -> Result<Option<Controller>, Error> {
    match spec {
        "none" => Ok(None),
        "auto" => {
            let mu = mu.ok_or(Error::NoInteriorEquilibrium)?;
            let mu_star = mu.abs() + 1e-9;
            if mu_star <= 1.0 + 1e-9 {
                return Ok(None);
            }
            Ok(Some(synthesize(mu_star)?))
        }
        list => {
            let gains: Result<Vec<f64>, _> =
                list.split(',').map(str::trim).map(str::parse).collect();
            let gains = gains
                .map_err(|e| Error::Domain(format!("cannot parse control gains '{list}': {e}")))?;
            Ok(Some(Controller::new(gains)?))
        }
    }
}

fn cmd_simulate(
    map_name: &str,
    h: f64,
    x0: f64,
    steps: usize,
    control: &str,
    conv_tol: f64,
    format: Format,
) -> Result<(), Error> {
    require_logistic(map_name)?;
    let map = LogisticMap::new(h)?;
    let mu = map.equilibrium().map(|xs| map.derivative(xs));
    let controller = parse_control(control, mu)?;
    let trace = simulate(&map, controller.as_ref(), x0, steps, conv_tol)?;

    let params = json!({
        "map": map_name, "h": h, "x0": x0, "steps": steps,
        "control": control, "conv_tol": conv_tol,
        "gains": controller.as_ref().map(|c| sig12_slice(c.gains())),
    });
    let env = Envelope::new("simulate", params);
    let status = match trace.status {
        TraceStatus::Completed => "completed".to_string(),
        TraceStatus::EscapedDomain { step } => format!("escaped at step {step}"),
    };
    match format {
        Format::Json => env.print_json(json!({
            "target": trace.target.map(sig12),
            "converged": trace.converged,
            "settling_index": trace.settling_index,
            "status": status,
            "trace": sig12_slice(&trace.states),
        })),
        Format::Csv => {
            let rows: Vec<Vec<String>> = trace
                .states
                .iter()
                .enumerate()
                .map(|(i, &x)| {
                    vec![
                        i.to_string(),
                        fmt12(x),
                        trace
                            .target
                            .map_or(String::new(), |xs| fmt12((x - xs).abs())),
                    ]
                })
                .collect();
            env.print_csv(
                &["step", "x", "deviation"],
                &rows,
                &[
                    (
                        "target",
                        trace.target.map_or("none".to_string(), fmt12),
                    ),
                    ("converged", trace.converged.to_string()),
                    (
                        "settling_index",
                        trace
                            .settling_index
                            .map_or("none".to_string(), |i| i.to_string()),
                    ),
                    ("status", status),
                ],
            );
        }
    }
    Ok(())
}

#[allow(clippy::too_many_arguments)]
fn cmd_sweep(
    map_name: &str,
    h_min: f64,
    h_max: f64,
    h_steps: usize,
    transient: usize,
    keep: usize,
    control: &str,
    x0: f64,
    format: Format,
) -> Result<(), Error> {
    require_logistic(map_name)?;
    if !(h_min < h_max) {
        return Err(Error::Domain(format!(
            "empty parameter range: h_min = {h_min}, h_max = {h_max}"
        )));
    }
    if h_steps < 2 {
        return Err(Error::Domain("h_steps must be at least 2".into()));
    }
    if !(0.0..=4.0).contains(&h_min) || !(0.0..=4.0).contains(&h_max) {
        return Err(Error::Domain(
            "parameter range must lie within [0, 4]".into(),
        ));
    }
    if keep == 0 {
        return Err(Error::Domain("keep must be at least 1".into()));
    }

    // rows: (h, state, flag); escaped parameter values get a single
    // flagged row with no state
    let mut rows: Vec<(f64, Option<f64>, &str)> = Vec::with_capacity(h_steps * keep);
    for i in 0..h_steps {
        let h = h_min + (h_max - h_min) * i as f64 / (h_steps - 1) as f64;
        let map = LogisticMap::new(h)?;
        let mu = map.equilibrium().map(|xs| map.derivative(xs));
        let controller = parse_control(control, mu)?;
        let trace = simulate(
            &map,
            controller.as_ref(),
            x0,
            transient + keep,
            f64::MIN_POSITIVE,
        )?;
        match trace.status {
            TraceStatus::Completed => {
                for &x in trace.states.iter().skip(transient + 1) {
                    rows.push((h, Some(x), "ok"));
                }
            }
            TraceStatus::EscapedDomain { .. } => rows.push((h, None, "escaped")),
        }
    }

    let env = Envelope::new(
        "sweep",
        json!({
            "map": map_name, "h_min": h_min, "h_max": h_max, "h_steps": h_steps,
            "transient": transient, "keep": keep, "control": control, "x0": x0,
        }),
    );
    match format {
        Format::Json => env.print_json(json!({
            "points": rows.iter().map(|(h, x, flag)| json!({
                "h": sig12(*h),
                "x": x.map(sig12),
                "flag": flag,
            })).collect::<Vec<_>>(),
        })),
        Format::Csv => {
            let str_rows: Vec<Vec<String>> = rows
                .iter()
                .map(|(h, x, flag)| {
                    vec![
                        fmt12(*h),
                        x.map_or(String::new(), fmt12),
                        flag.to_string(),
                    ]
                })
                .collect();
            env.print_csv(&["h", "x", "flag"], &str_rows, &[]);
        }
    }
    Ok(())
}

