//! `pga`: constructions, rigid-body simulation, expression evaluation,
//! invariant checks and product benchmarks.

mod scene;

use std::fs::File;
use std::hint::black_box;
use std::io::{self, BufWriter, Write};
use std::path::PathBuf;
use std::process::ExitCode;
use std::time::Instant;

use anyhow::{bail, Context, Result};
use clap::{Parser, Subcommand};
use pga_core::check::{self, sample};
use pga_core::duality::operator_interpretation;
use pga_core::dynamics;
use pga_core::{dsl, Algebra, Multivector, Pga};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

use scene::{Kind, SceneConfig};

#[derive(Parser)]
#[command(name = "pga", version, about = "Euclidean projective geometric algebra toolkit")]
struct Cli {
    #[command(subcommand)]
    command: Command,
}

#[derive(Subcommand)]
enum Command {
    /// Evaluate the scene's expression and report incidence and orthogonality.
    Construct {
        #[arg(long)]
        scene: PathBuf,
        /// Overrides the scene's expression.
        #[arg(long)]
        expr: Option<String>,
    },
    /// Integrate the scene's rigid body and write the trajectory as CSV.
    Simulate {
        #[arg(long)]
        scene: PathBuf,
        #[arg(long)]
        steps: Option<usize>,
        #[arg(long)]
        h: Option<f64>,
        #[arg(long)]
        no_renormalize: bool,
        #[arg(long)]
        out: Option<PathBuf>,
    },
    /// Evaluate an expression, with the scene's entities bound if given.
    Eval {
        expression: String,
        #[arg(long)]
        scene: Option<PathBuf>,
        /// Dimension of the PGA when no scene is given.
        #[arg(long, default_value_t = 3)]
        n: usize,
    },
    /// Run the invariant suite of every module.
    Check {
        #[arg(long, default_value_t = 0)]
        seed: u64,
    },
    /// Geometric-product throughput, dense and sparse kernels.
    Bench {
        #[arg(long, default_value_t = 0)]
        seed: u64,
        #[arg(long, default_value_t = 200_000)]
        iters: usize,
    },
}

fn main() -> ExitCode {
    let cli = Cli::parse();
    match run(cli.command) {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e:#}");
            ExitCode::from(1)
        }
    }
}

fn run(cmd: Command) -> Result<ExitCode> {
    match cmd {
        Command::Construct { scene, expr } => construct(&SceneConfig::load(&scene)?, expr),
        Command::Simulate { scene, steps, h, no_renormalize, out } => {
            simulate(&SceneConfig::load(&scene)?, steps, h, no_renormalize, out)
        }
        Command::Eval { expression, scene, n } => eval(&expression, scene, n),
        Command::Check { seed } => {
            let report = check::run_all(seed);
            println!("{report}");
            Ok(if report.all_passed() { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Command::Bench { seed, iters } => {
            bench(seed, iters)?;
            Ok(ExitCode::SUCCESS)
        }
    }
}

fn yes_no(b: bool) -> &'static str {
    if b {
        "yes"
    } else {
        "no"
    }
}

fn construct(scene: &SceneConfig, expr: Option<String>) -> Result<ExitCode> {
    let pga = scene.pga()?;
    let src = expr.or_else(|| scene.expression.clone()).context("no expression in scene or --expr")?;
    let bindings = scene.bindings(&pga)?;
    let mut env = dsl::Environment::new(pga.algebra());
    for (name, mv, _) in &bindings {
        env.bind(name, mv.clone())?;
    }
    let ast = dsl::parse(&src)?;
    let result = dsl::eval(&ast, &env)?;
    println!("algebra: {}", pga.algebra().signature());
    println!("operators: {}", operator_interpretation(pga.algebra().orientation()));
    println!("expression: {ast}");
    let scale = bindings.iter().map(|(_, m, _)| m.coeff_norm()).fold(1.0, f64::max);
    if result.max_abs() <= 1e-12 * scale {
        bail!("meet degenerates: the construction is the zero blade (is the point incident to the line?)");
    }
    let shown = pga.normalize(&result).map(|f| f.into_mv()).unwrap_or(result);
    println!("result: {shown}");
    let mut incident = true;
    let mut orthogonal = true;
    for (name, mv, kind) in &bindings {
        match kind {
            Kind::Point => {
                let on = pga.incident(mv, &shown);
                println!("  {name}: incident {}", yes_no(on));
                incident &= on;
            }
            Kind::Line | Kind::Plane => {
                let orth = pga.orthogonal(mv, &shown);
                let both_lines = *kind == Kind::Line && pga.n() == 3 && shown.grade() == Some(2);
                let meets = !both_lines || pga.lines_coplanar(mv, &shown);
                println!("  {name}: meets {}, orthogonal {}", yes_no(meets), yes_no(orth));
                incident &= meets;
                orthogonal &= orth;
            }
            Kind::Other => {}
        }
    }
    println!("incident: {}, orthogonal: {}", yes_no(incident), yes_no(orthogonal));
    Ok(ExitCode::SUCCESS)
}

fn simulate(
    scene: &SceneConfig,
    steps: Option<usize>,
    h: Option<f64>,
    no_renormalize: bool,
    out: Option<PathBuf>,
) -> Result<ExitCode> {
    let pga = scene.pga()?;
    let cfg = scene.dynamics.as_ref().context("scene has no dynamics block")?;
    let (state, inertia) = cfg.build(&pga)?;
    let steps = steps.unwrap_or(cfg.steps);
    let h = h.unwrap_or(cfg.h);
    if steps < 1 {
        bail!("--steps must be at least 1");
    }
    let renormalize = cfg.renormalize && !no_renormalize;
    let traj = dynamics::simulate(&state, &inertia, h, steps, renormalize)?;
    match out {
        Some(path) => {
            let file = File::create(&path).with_context(|| format!("creating {}", path.display()))?;
            let mut w = BufWriter::new(file);
            traj.write_csv(&mut w)?;
            w.flush()?;
        }
        None => {
            let stdout = io::stdout();
            let mut w = BufWriter::new(stdout.lock());
            traj.write_csv(&mut w)?;
            w.flush()?;
        }
    }
    let last = traj.last();
    eprintln!("final <g~g>0 - 1 = {:.3e}", last.state.norm_deviation());
    eprintln!("max relative energy drift = {:.3e}", traj.max_energy_drift());
    eprintln!("max space momentum drift = {:.3e}", traj.max_momentum_drift());
    Ok(ExitCode::SUCCESS)
}

fn eval(src: &str, scene: Option<PathBuf>, n: usize) -> Result<ExitCode> {
    let (pga, bindings) = match scene {
        Some(path) => {
            let scene = SceneConfig::load(&path)?;
            let pga = scene.pga()?;
            let b = scene.bindings(&pga)?;
            (pga, b)
        }
        None => (Pga::new(n)?, Vec::new()),
    };
    let mut env = dsl::Environment::new(pga.algebra());
    for (name, mv, _) in bindings {
        env.bind(&name, mv)?;
    }
    let value = dsl::eval(&dsl::parse(src)?, &env)?;
    println!("{value}");
    Ok(ExitCode::SUCCESS)
}

fn ops_per_sec(
    iters: usize,
    pairs: &[(Multivector<f64>, Multivector<f64>)],
    f: impl Fn(&Multivector<f64>, &Multivector<f64>) -> Multivector<f64>,
) -> f64 {
    let start = Instant::now();
    for i in 0..iters {
        let (a, b) = &pairs[i % pairs.len()];
        black_box(f(black_box(a), black_box(b)));
    }
    iters as f64 / start.elapsed().as_secs_f64()
}

fn bench(seed: u64, iters: usize) -> Result<()> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let pga = Pga::new(3)?;
    let cga = Algebra::cga(3)?;
    println!("gp throughput, {iters} products per row, rng ChaCha8 seed {seed}");
    println!("{:<16} {:>6} {:<14} {:<6} {:>14}", "algebra", "coeffs", "inputs", "kernel", "ops/sec");
    let full = |rng: &mut ChaCha8Rng, alg: &std::sync::Arc<Algebra>| -> Vec<_> {
        (0..64).map(|_| (sample::multivector(rng, alg), sample::multivector(rng, alg))).collect()
    };
    let motor_point: Vec<_> =
        (0..64).map(|_| (sample::motor(&mut rng, &pga).into_mv(), sample::point(&mut rng, &pga, 10.0))).collect();
    let cga_vectors: Vec<_> = (0..64)
        .map(|_| {
            let a = sample::multivector(&mut rng, &cga).grade_project(1);
            let b = sample::multivector(&mut rng, &cga).grade_project(2);
            (a, b)
        })
        .collect();
    let rows = [
        ("PGA(3,0,1)", 16, "full", full(&mut rng, pga.algebra())),
        ("PGA(3,0,1)", 16, "motor*point", motor_point),
        ("CGA(4,1,0)", 32, "full", full(&mut rng, &cga)),
        ("CGA(4,1,0)", 32, "vector*bivec", cga_vectors),
    ];
    for (name, coeffs, inputs, pairs) in &rows {
        let dense = ops_per_sec(iters, pairs, |a, b| a.gp(b));
        let sparse = ops_per_sec(iters, pairs, |a, b| a.gp_sparse(b));
        println!("{name:<16} {coeffs:>6} {inputs:<14} {:<6} {dense:>14.0}", "dense");
        println!("{name:<16} {coeffs:>6} {inputs:<14} {:<6} {sparse:>14.0}", "sparse");
    }
    Ok(())
}
