//! Command-line front end: Chebyshev tables, transition-probability curves,
//! tomography round-trip demos, and identity verification reports.
//!
//! Output is deterministic: identical invocations produce identical bytes,
//! numeric fields carry 17 significant digits, and every payload names a
//! schema version.

use std::process::ExitCode;

use clap::{Args, Parser, Subcommand, ValueEnum};

use spincheb::cheb::ChebTable;
use spincheb::half::HalfInt;
use spincheb::tomography::{
    husimi_wigner_samples, reconstruct_density, reconstruct_from_husimi,
    reconstruct_from_wigner, tomogram_of, DensityMatrix, SphericalGrid,
};
use spincheb::transitions::{
    meckler_probability, spin_flip_extreme, RfDrive, TransitionSpec,
};
use spincheb::verify::{run_suite, Suite};

#[derive(Parser)]
#[command(name = "spincheb", version, about = "Spin-j Chebyshev operator calculus")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Csv,
    Json,
}

#[derive(Subcommand)]
enum Command {
    /// Print the table of f_lambda(m) values for one j.
    ChebTable(ChebTableArgs),
    /// Transition probability curves P_{m m'} with closed-form cross-checks.
    Transition(TransitionArgs),
    /// Seeded tomography round trip: tomogram / Husimi / Wigner routes.
    TomographyDemo(TomographyArgs),
    /// Run identity suites and report residuals; exit 1 on any failure.
    Verify(VerifyArgs),
}

#[derive(Args)]
struct ChebTableArgs {
    /// Spin, e.g. "2" or "3/2".
    #[arg(long)]
    j: String,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct TransitionArgs {
    /// Spin, e.g. "2" or "3/2".
    #[arg(long)]
    j: String,
    /// Initial projection m.
    #[arg(long, allow_hyphen_values = true)]
    m: String,
    /// Final projection m'.
    #[arg(long, allow_hyphen_values = true)]
    mp: String,
    /// Relative axis angle beta in radians (geometry mode).
    #[arg(long, allow_negative_numbers = true, conflicts_with_all = ["omega1", "detuning", "t"])]
    beta: Option<f64>,
    /// Radiofrequency field strength omega_1 (drive mode).
    #[arg(long, requires = "detuning", requires = "t")]
    omega1: Option<f64>,
    /// Resonance offset omega_0 - omega (drive mode).
    #[arg(long, allow_negative_numbers = true)]
    detuning: Option<f64>,
    /// Evolution time (drive mode).
    #[arg(long)]
    t: Option<f64>,
    /// Number of curve samples from 0 to the endpoint.
    #[arg(long, default_value_t = 1)]
    curve: usize,
    /// Interpret input angles as degrees.
    #[arg(long, default_value_t = false)]
    degrees: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct TomographyArgs {
    /// Spin, e.g. "2" or "3/2".
    #[arg(long)]
    j: String,
    /// Seed for the random density matrix.
    #[arg(long, default_value_t = 1)]
    seed: u64,
    /// Use the doubled-resolution grid.
    #[arg(long, default_value_t = false)]
    doubled_grid: bool,
    #[arg(long, value_enum, default_value = "csv")]
    format: Format,
}

#[derive(Args)]
struct VerifyArgs {
    /// Identity suite to run.
    #[arg(long, default_value = "all")]
    suite: String,
    /// Tolerance override applied to every identity.
    #[arg(long)]
    tol: Option<f64>,
    /// Residual perturbation for self-testing the failure path.
    #[arg(long, default_value_t = 0.0, hide = true)]
    perturb: f64,
}

/// 17 significant digits, locale-free.
fn fmt_real(x: f64) -> String {
    format!("{x:.16e}")
}

enum Cell {
    Int(i64),
    Text(String),
    Real(f64),
}

impl Cell {
    fn csv(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => s.clone(),
            Cell::Real(x) => fmt_real(*x),
        }
    }

    fn json(&self) -> String {
        match self {
            Cell::Int(v) => v.to_string(),
            Cell::Text(s) => format!("\"{}\"", escape_json(s)),
            Cell::Real(x) => format!("\"{}\"", fmt_real(*x)),
        }
    }
}

fn escape_json(s: &str) -> String {
    s.replace('\\', "\\\\").replace('"', "\\\"")
}

/// One versioned payload: command, parameters, column header, rows, footer.
struct OutputRecord {
    schema: String,
    command: String,
    parameters: Vec<(String, String)>,
    columns: Vec<String>,
    rows: Vec<Vec<Cell>>,
    footer: Vec<(String, String)>,
}

impl OutputRecord {
    fn new(command: &str) -> OutputRecord {
        OutputRecord {
            schema: format!("spincheb.{command}.v1"),
            command: command.to_string(),
            parameters: Vec::new(),
            columns: Vec::new(),
            rows: Vec::new(),
            footer: Vec::new(),
        }
    }

    fn render(&self, format: Format) -> String {
        match format {
            Format::Csv => self.render_csv(),
            Format::Json => self.render_json(),
        }
    }

    fn render_csv(&self) -> String {
        let mut out = String::new();
        out.push_str(&format!("# schema: {}\n", self.schema));
        for (k, v) in &self.parameters {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out.push_str(&self.columns.join(","));
        out.push('\n');
        for row in &self.rows {
            let cells: Vec<String> = row.iter().map(Cell::csv).collect();
            out.push_str(&cells.join(","));
            out.push('\n');
        }
        for (k, v) in &self.footer {
            out.push_str(&format!("# {k}: {v}\n"));
        }
        out
    }

    fn render_json(&self) -> String {
        let mut out = String::new();
        out.push_str("{\n");
        out.push_str(&format!("  \"schema\": \"{}\",\n", escape_json(&self.schema)));
        out.push_str(&format!("  \"command\": \"{}\",\n", escape_json(&self.command)));
        out.push_str("  \"parameters\": {");
        let params: Vec<String> = self
            .parameters
            .iter()
            .map(|(k, v)| format!("\"{}\": \"{}\"", escape_json(k), escape_json(v)))
            .collect();
        out.push_str(&params.join(", "));
        out.push_str("},\n");
        let cols: Vec<String> = self
            .columns
            .iter()
            .map(|c| format!("\"{}\"", escape_json(c)))
            .collect();
        out.push_str(&format!("  \"columns\": [{}],\n", cols.join(", ")));
        out.push_str("  \"rows\": [\n");
        for (i, row) in self.rows.iter().enumerate() {
            let cells: Vec<String> = row.iter().map(Cell::json).collect();
            let sep = if i + 1 == self.rows.len() { "" } else { "," };
            out.push_str(&format!("    [{}]{sep}\n", cells.join(", ")));
        }
        out.push_str("  ],\n");
        out.push_str("  \"footer\": {");
        let foot: Vec<String> = self
            .footer
            .iter()
            .map(|(k, v)| format!("\"{}\": \"{}\"", escape_json(k), escape_json(v)))
            .collect();
        out.push_str(&foot.join(", "));
        out.push_str("}\n}\n");
        out
    }
}

fn parse_half(label: &str, s: &str) -> Result<HalfInt, String> {
    s.parse::<HalfInt>().map_err(|e| format!("--{label}: {e}"))
}

fn cmd_cheb_table(args: &ChebTableArgs) -> Result<String, String> {
    let j = parse_half("j", &args.j)?;
    let table = ChebTable::build(j).map_err(|e| e.to_string())?;
    let mut rec = OutputRecord::new("cheb-table");
    rec.parameters.push(("j".into(), j.to_string()));
    rec.columns = vec!["lambda".into(), "m".into(), "value".into()];
    for lambda in 0..=j.twice() as u32 {
        for m in HalfInt::projections(j) {
            rec.rows.push(vec![
                Cell::Int(lambda as i64),
                Cell::Text(m.to_string()),
                Cell::Real(table.value(lambda, m)),
            ]);
        }
    }
    rec.footer.push((
        "orthonormality_residual".into(),
        fmt_real(table.orthonormality_residual()),
    ));
    Ok(rec.render(args.format))
}

fn cmd_transition(args: &TransitionArgs) -> Result<String, String> {
    let j = parse_half("j", &args.j)?;
    let m = parse_half("m", &args.m)?;
    let mp = parse_half("mp", &args.mp)?;
    let samples = args.curve.max(1);
    let is_flip = m == j && mp == -j;

    let mut rec = OutputRecord::new("transition");
    rec.parameters.push(("j".into(), j.to_string()));
    rec.parameters.push(("m".into(), m.to_string()));
    rec.parameters.push(("mp".into(), mp.to_string()));

    // (x label, samples of (x, cos beta))
    let (x_name, points) = if let Some(beta) = args.beta {
        let beta = if args.degrees { beta.to_radians() } else { beta };
        rec.parameters.push(("beta".into(), fmt_real(beta)));
        let pts: Vec<(f64, f64)> = (0..samples)
            .map(|i| {
                let x = if samples == 1 {
                    beta
                } else {
                    beta * i as f64 / (samples - 1) as f64
                };
                (x, x.cos())
            })
            .collect();
        ("beta", pts)
    } else if let (Some(omega1), Some(detuning), Some(t)) =
        (args.omega1, args.detuning, args.t)
    {
        rec.parameters.push(("omega1".into(), fmt_real(omega1)));
        rec.parameters.push(("detuning".into(), fmt_real(detuning)));
        rec.parameters.push(("t".into(), fmt_real(t)));
        let pts: Vec<(f64, f64)> = (0..samples)
            .map(|i| {
                let x = if samples == 1 { t } else { t * i as f64 / (samples - 1) as f64 };
                (x, RfDrive { omega1, detuning, t: x }.cos_beta())
            })
            .collect();
        ("t", pts)
    } else {
        return Err("either --beta or all of --omega1/--detuning/--t are required".into());
    };

    rec.columns = vec![x_name.into(), "probability".into()];
    if is_flip {
        rec.columns.push("closed_form".into());
        rec.columns.push("deviation".into());
    }
    let mut max_dev: f64 = 0.0;
    for (x, cos_beta) in points {
        let spec =
            TransitionSpec::from_cos_beta(j, m, mp, cos_beta).map_err(|e| e.to_string())?;
        let p = meckler_probability(&spec).map_err(|e| e.to_string())?;
        let mut row = vec![Cell::Real(x), Cell::Real(p)];
        if is_flip {
            let closed = spin_flip_extreme(j, cos_beta.clamp(-1.0, 1.0).acos());
            let dev = (p - closed).abs();
            max_dev = max_dev.max(dev);
            row.push(Cell::Real(closed));
            row.push(Cell::Real(dev));
        }
        rec.rows.push(row);
    }
    if is_flip {
        rec.footer
            .push(("max_closed_form_deviation".into(), fmt_real(max_dev)));
    }
    Ok(rec.render(args.format))
}

fn cmd_tomography_demo(args: &TomographyArgs) -> Result<String, String> {
    let j = parse_half("j", &args.j)?;
    let grid = if args.doubled_grid {
        SphericalGrid::for_spin_doubled(j)
    } else {
        SphericalGrid::for_spin(j)
    };
    let mut rec = OutputRecord::new("tomography-demo");
    rec.parameters.push(("j".into(), j.to_string()));
    rec.parameters.push(("seed".into(), args.seed.to_string()));
    rec.columns = vec!["state".into(), "route".into(), "frobenius_error".into()];

    let states: Vec<(&str, DensityMatrix)> = vec![
        ("random", DensityMatrix::random(j, args.seed)),
        ("maximally_mixed", DensityMatrix::maximally_mixed(j)),
        (
            "coherent_top",
            DensityMatrix::basis_state(j, j).map_err(|e| e.to_string())?,
        ),
    ];

    let mut husimi_cond = 0.0;
    for (label, rho) in &states {
        let w = tomogram_of(rho, &grid).map_err(|e| e.to_string())?;
        let back = reconstruct_density(&w, &grid).map_err(|e| e.to_string())?;
        rec.rows.push(vec![
            Cell::Text((*label).into()),
            Cell::Text("tomogram".into()),
            Cell::Real(rho.frobenius_diff(&back)),
        ]);

        let (q, wv) = husimi_wigner_samples(rho, &grid).map_err(|e| e.to_string())?;
        let (back, cond) =
            reconstruct_from_husimi(j, &q, &grid).map_err(|e| e.to_string())?;
        husimi_cond = cond;
        rec.rows.push(vec![
            Cell::Text((*label).into()),
            Cell::Text("husimi".into()),
            Cell::Real(rho.frobenius_diff(&back)),
        ]);

        let back = reconstruct_from_wigner(j, &wv, &grid).map_err(|e| e.to_string())?;
        rec.rows.push(vec![
            Cell::Text((*label).into()),
            Cell::Text("wigner".into()),
            Cell::Real(rho.frobenius_diff(&back)),
        ]);
    }

    rec.footer.push(("grid_nodes".into(), grid.len().to_string()));
    rec.footer.push((
        "grid_exactness_degree".into(),
        grid.exactness_degree().to_string(),
    ));
    rec.footer
        .push(("husimi_condition".into(), fmt_real(husimi_cond)));
    Ok(rec.render(args.format))
}

fn cmd_verify(args: &VerifyArgs) -> Result<(String, bool), String> {
    let suite = Suite::parse(&args.suite)
        .ok_or_else(|| format!("unknown suite: {}", args.suite))?;
    let results = run_suite(suite, args.tol, args.perturb).map_err(|e| e.to_string())?;
    let all_passed = results.iter().all(|r| r.passed());
    let mut out = String::new();
    out.push_str("{\n");
    out.push_str("  \"schema\": \"spincheb.verify.v1\",\n");
    out.push_str(&format!("  \"suite\": \"{}\",\n", escape_json(&args.suite)));
    out.push_str("  \"results\": [\n");
    for (i, r) in results.iter().enumerate() {
        let sep = if i + 1 == results.len() { "" } else { "," };
        out.push_str(&format!(
            "    {{\"suite\": \"{}\", \"name\": \"{}\", \"residual\": \"{}\", \"tolerance\": \"{}\", \"passed\": {}}}{sep}\n",
            r.suite,
            r.name,
            fmt_real(r.residual),
            fmt_real(r.tolerance),
            r.passed()
        ));
    }
    out.push_str("  ],\n");
    out.push_str(&format!("  \"passed\": {all_passed}\n}}\n"));
    Ok((out, all_passed))
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    let result: Result<(String, bool), String> = match &cli.command {
        Command::ChebTable(args) => cmd_cheb_table(args).map(|s| (s, true)),
        Command::Transition(args) => cmd_transition(args).map(|s| (s, true)),
        Command::TomographyDemo(args) => cmd_tomography_demo(args).map(|s| (s, true)),
        Command::Verify(args) => cmd_verify(args),
    };
    match result {
        Ok((text, passed)) => {
            print!("{text}");
            if passed {
                ExitCode::SUCCESS
            } else {
                ExitCode::from(1)
            }
        }
        Err(msg) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}
