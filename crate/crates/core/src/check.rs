//! Seeded invariant suite covering every module, plus the random samplers it
//! uses. The same seed always produces the same report.

use std::fmt;
use std::sync::Arc;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::algebra::{Algebra, Orientation, Signature};
use crate::cga::Cga;
use crate::dsl;
use crate::dynamics::{self, BodyState, InertiaOperator, Model};
use crate::motor::{exp_bivector, log_versor, Versor};
use crate::multivector::Multivector;
use crate::pga::Pga;

/// Random inputs for property checks.
pub mod sample {
    use super::*;

    pub fn coords<R: Rng>(rng: &mut R, n: usize, range: f64) -> Vec<f64> {
        (0..n).map(|_| rng.gen_range(-range..range)).collect()
    }

    /// Unit vector, rejection sampled from the cube.
    pub fn unit<R: Rng>(rng: &mut R, n: usize) -> Vec<f64> {
        loop {
            let v = coords(rng, n, 1.0);
            let len = v.iter().map(|c| c * c).sum::<f64>().sqrt();
            if (0.1..=1.0).contains(&len) {
                return v.into_iter().map(|c| c / len).collect();
            }
        }
    }

    pub fn multivector<R: Rng>(rng: &mut R, alg: &Arc<Algebra>) -> Multivector<f64> {
        let c = (0..alg.size()).map(|_| rng.gen_range(-1.0..1.0)).collect();
        Multivector::from_coeffs(alg, c).expect("finite")
    }

    pub fn point<R: Rng>(rng: &mut R, pga: &Pga, range: f64) -> Multivector<f64> {
        pga.point(&coords(rng, pga.n(), range)).expect("point").into_mv()
    }

    /// Normalized hyperplane.
    pub fn plane<R: Rng>(rng: &mut R, pga: &Pga, range: f64) -> Multivector<f64> {
        let mut c = unit(rng, pga.n());
        c.push(rng.gen_range(-range..range));
        pga.plane(&c).expect("plane").into_mv()
    }

    /// Normalized line through two random points (3D) or normalized
    /// hyperplane (2D).
    pub fn line<R: Rng>(rng: &mut R, pga: &Pga, range: f64) -> Multivector<f64> {
        if pga.n() == 2 {
            return plane(rng, pga, range);
        }
        let p = coords(rng, 3, range);
        let d = unit(rng, 3);
        let q: Vec<f64> = p.iter().zip(&d).map(|(a, b)| a + b).collect();
        let l =
            pga.line_from_points(pga.point(&p).unwrap().mv(), pga.point(&q).unwrap().mv()).expect("distinct points");
        pga.normalize(l.mv()).expect("line").into_mv()
    }

    /// Random euclidean bivector: rotation up to `max_angle` plus translation.
    pub fn bivector<R: Rng>(rng: &mut R, pga: &Pga, max_angle: f64, range: f64) -> Multivector<f64> {
        let alg = pga.algebra();
        let mut b = Multivector::zero(alg);
        let angle = rng.gen_range(0.0..max_angle);
        let rot: Vec<_> = alg.blades_of_grade(2).filter(|b| !b.contains(0)).collect();
        let axis = unit(rng, rot.len());
        for (blade, a) in rot.iter().zip(axis) {
            b.set(*blade, a * angle * 0.5);
        }
        for blade in alg.blades_of_grade(2).filter(|b| b.contains(0)) {
            b.set(blade, rng.gen_range(-range..range));
        }
        b
    }

    pub fn motor<R: Rng>(rng: &mut R, pga: &Pga) -> Versor<f64> {
        exp_bivector(&bivector(rng, pga, std::f64::consts::PI, 5.0)).expect("motor")
    }
}

/// Outcome of a single invariant.
#[derive(Clone, Debug)]
pub struct CheckResult {
    pub suite: &'static str,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
}

/// All results of one seeded run.
#[derive(Clone, Debug)]
pub struct Report {
    pub seed: u64,
    pub results: Vec<CheckResult>,
}

impl Report {
    pub fn all_passed(&self) -> bool {
        self.results.iter().all(|r| r.passed)
    }
}

impl fmt::Display for Report {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        writeln!(f, "invariant suite, rng ChaCha8 seed {}", self.seed)?;
        for r in &self.results {
            let tag = if r.passed { "PASS" } else { "FAIL" };
            writeln!(f, "[{tag}] {:<9} {:<36} {}", r.suite, r.name, r.detail)?;
        }
        let failed = self.results.iter().filter(|r| !r.passed).count();
        write!(f, "{} checks, {} failed", self.results.len(), failed)
    }
}

struct Runner {
    rng: ChaCha8Rng,
    results: Vec<CheckResult>,
}

impl Runner {
    fn record(&mut self, suite: &'static str, name: &'static str, worst: f64, tol: f64) {
        let passed = worst.is_finite() && worst <= tol;
        self.results.push(CheckResult { suite, name, passed, detail: format!("worst {worst:.3e} (tol {tol:.0e})") });
    }

    fn flag(&mut self, suite: &'static str, name: &'static str, passed: bool, detail: String) {
        self.results.push(CheckResult { suite, name, passed, detail });
    }
}

fn rel(a: &Multivector<f64>, b: &Multivector<f64>) -> f64 {
    a.max_abs_diff(b) / a.max_abs().max(b.max_abs()).max(1.0)
}

fn core_suite(r: &mut Runner) {
    let mut assoc = 0.0f64;
    let mut rev = 0.0f64;
    let mut sparse = 0.0f64;
    for sig in [Signature::pga(3), Signature::cga(3), Signature::new(2, 1, 1, Orientation::Standard)] {
        let alg = Algebra::new(sig).unwrap();
        for _ in 0..50 {
            let (a, b, c) = (
                sample::multivector(&mut r.rng, &alg),
                sample::multivector(&mut r.rng, &alg),
                sample::multivector(&mut r.rng, &alg),
            );
            assoc = assoc.max(rel(&a.gp(&b).gp(&c), &a.gp(&b.gp(&c))));
            rev = rev.max(rel(&a.gp(&b).reverse(), &b.reverse().gp(&a.reverse())));
            sparse = sparse.max(a.gp(&b).max_abs_diff(&a.gp_sparse(&b)));
        }
    }
    r.record("ga-core", "associativity", assoc, 1e-12);
    r.record("ga-core", "reverse anti-automorphism", rev, 1e-12);
    r.record("ga-core", "sparse equals dense", sparse, 0.0);
    let alg = Algebra::pga(3).unwrap();
    let i = Multivector::<f64>::pseudoscalar(&alg);
    r.flag("ga-core", "degenerate pseudoscalar squares to 0", i.gp(&i).is_zero(), String::new());
}

fn duality_suite(r: &mut Runner) {
    let mut demorgan = 0.0f64;
    let mut metric = true;
    for d in 1..=4u8 {
        let alg = Algebra::pga(d - 1).unwrap();
        let other = Algebra::new(Signature::new(d, 0, 0, Orientation::Standard)).unwrap();
        for &a in alg.basis() {
            let x = Multivector::<f64>::blade(&alg, a, 1.0);
            let xo = Multivector::<f64>::blade(&other, a, 1.0);
            metric &= x.j_map().coeffs() == xo.j_map().coeffs();
            for &b in alg.basis() {
                let y = Multivector::<f64>::blade(&alg, b, 1.0);
                demorgan = demorgan.max(x.outer(&y).j_map().max_abs_diff(&x.j_map().join(&y.j_map())));
            }
        }
    }
    r.record("duality", "De Morgan exhaustive (dim <= 4)", demorgan, 0.0);
    r.flag("duality", "J metric independent", metric, String::new());
    let pga = Pga::new(3).unwrap();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let a = sample::plane(&mut r.rng, &pga, 10.0);
        let mut b = a.clone();
        b.set(crate::algebra::BladeIndex::generator(0), r.rng.gen_range(-10.0..10.0));
        worst = worst.max(a.polarity().max_abs_diff(&b.polarity()));
    }
    r.record("duality", "parallel planes share polar point", worst, 0.0);
}

fn pga_suite(r: &mut Runner) {
    let pga = Pga::new(3).unwrap();
    let mut routes = 0.0f64;
    let mut oracle = 0.0f64;
    for _ in 0..200 {
        let (x, y) = (sample::coords(&mut r.rng, 3, 100.0), sample::coords(&mut r.rng, 3, 100.0));
        let (p, q) = (pga.point(&x).unwrap().into_mv(), pga.point(&y).unwrap().into_mv());
        let (a, b) = (pga.distance_via_join(&p, &q), pga.distance_via_product(&p, &q));
        let d = x.iter().zip(&y).map(|(s, t)| (s - t) * (s - t)).sum::<f64>().sqrt();
        routes = routes.max((a - b).abs() / d.max(1.0));
        oracle = oracle.max((a - d).abs() / d);
    }
    r.record("pga", "distance routes agree", routes, 1e-12);
    r.record("pga", "distance equals |x - y|", oracle, 1e-10);
    let mut perp = 0.0f64;
    for _ in 0..100 {
        let line = sample::line(&mut r.rng, &pga, 5.0);
        let p = sample::point(&mut r.rng, &pga, 5.0);
        if let Ok(s) = pga.perpendicular_through_point(&line, &p) {
            perp = perp.max(pga.incidence_residual(&p, s.mv()));
            perp = perp.max(s.mv().scalar_product(&line).scalar_part().abs());
        }
    }
    r.record("pga", "perpendicular incident and orthogonal", perp, 1e-9);
}

fn motor_suite(r: &mut Runner) {
    let pga = Pga::new(3).unwrap();
    let mut iso = 0.0f64;
    let mut roundtrip = 0.0f64;
    let mut hom = 0.0f64;
    for _ in 0..100 {
        let g = sample::motor(&mut r.rng, &pga);
        let (p, q) = (sample::point(&mut r.rng, &pga, 10.0), sample::point(&mut r.rng, &pga, 10.0));
        let d0 = pga.distance(&p, &q).unwrap();
        let d1 = pga.distance(&g.apply(&p).unwrap(), &g.apply(&q).unwrap()).unwrap();
        iso = iso.max((d0 - d1).abs());
        let b = sample::bivector(&mut r.rng, &pga, std::f64::consts::PI * 1.9, 5.0);
        let back = log_versor(&exp_bivector(&b).unwrap()).unwrap();
        roundtrip = roundtrip.max(back.max_abs_diff(&b));
        let (x, y) = (
            sample::multivector(&mut r.rng, pga.algebra()).even_part(),
            sample::multivector(&mut r.rng, pga.algebra()).even_part(),
        );
        let lhs = x.gp(&y).to_biquaternion().unwrap();
        let rhs = x.to_biquaternion().unwrap() * y.to_biquaternion().unwrap();
        hom = hom.max(lhs.max_abs_diff(rhs));
    }
    r.record("motor", "motors preserve distance", iso, 1e-10);
    r.record("motor", "log(exp(B)) = B", roundtrip, 1e-10);
    r.record("motor", "biquaternion homomorphism", hom, 1e-14);
}

fn dynamics_suite(r: &mut Runner) {
    let p = dynamics::solution_space_dims(Model::Pga).unwrap();
    let c = dynamics::solution_space_dims(Model::Cga).unwrap();
    r.flag(
        "dynamics",
        "solution space dimensions",
        (p.bivector_dim, p.even_dim, p.codim, c.bivector_dim, c.even_dim, c.codim, p.valid_dim)
            == (6, 8, 2, 10, 16, 14, 12),
        format!("PGA {:?}, CGA {:?}", (p.bivector_dim, p.even_dim, p.codim), (c.bivector_dim, c.even_dim, c.codim)),
    );
    let alg = Algebra::pga(3).unwrap();
    let inertia = InertiaOperator::new(&alg, [1.0, 2.0, 3.0], 2.0).unwrap();
    let m: [f64; 6] = std::array::from_fn(|_| r.rng.gen_range(-3.0..3.0));
    let state = BodyState::at_rest_pose(&alg, m).unwrap();
    let tr = dynamics::simulate(&state, &inertia, 1e-3, 1000, true).unwrap();
    r.record("dynamics", "energy conserved (1000 steps)", tr.max_energy_drift(), 1e-9);
    r.record("dynamics", "space momentum conserved", tr.max_momentum_drift(), 1e-8);
}

fn cga_suite(r: &mut Runner) {
    let cga = Cga::new(3).unwrap();
    let pga = Pga::new(3).unwrap();
    let mut null = 0.0f64;
    let mut agree = 0.0f64;
    for _ in 0..200 {
        let (x, y) = (sample::coords(&mut r.rng, 3, 100.0), sample::coords(&mut r.rng, 3, 100.0));
        let (u, v) = (cga.up(&x).unwrap(), cga.up(&y).unwrap());
        null = null.max(u.mv().gp(u.mv()).max_abs() / u.mv().coeff_norm().powi(2));
        let dc = cga.distance(&u, &v).unwrap();
        let dp = pga.distance(pga.point(&x).unwrap().mv(), pga.point(&y).unwrap().mv()).unwrap();
        agree = agree.max((dc - dp).abs() / dp);
    }
    r.record("cga", "up() is null (relative)", null, 1e-12);
    r.record("cga", "distance agrees with PGA", agree, 1e-10);
}

fn dsl_suite(r: &mut Runner) {
    let pga = Pga::new(3).unwrap();
    let expr = dsl::parse("((Pi | P) ^ Pi) & P").unwrap();
    let mut worst = 0.0f64;
    for _ in 0..50 {
        let line = sample::line(&mut r.rng, &pga, 5.0);
        let p = sample::point(&mut r.rng, &pga, 5.0);
        let env = dsl::Environment::new(pga.algebra()).with("Pi", line.clone()).unwrap().with("P", p.clone()).unwrap();
        let via_dsl = dsl::eval(&expr, &env).unwrap();
        let direct = line.left_contraction(&p).outer(&line).join(&p);
        worst = worst.max(via_dsl.max_abs_diff(&direct));
    }
    r.record("dsl", "evaluator matches library calls", worst, 0.0);
    let printed = expr.to_string();
    r.flag("dsl", "print/parse round trip", dsl::parse(&printed).as_ref() == Ok(&expr), printed);
}

/// Runs every suite with a ChaCha8 generator seeded by `seed`.
pub fn run_all(seed: u64) -> Report {
    let mut r = Runner { rng: ChaCha8Rng::seed_from_u64(seed), results: Vec::new() };
    core_suite(&mut r);
    duality_suite(&mut r);
    pga_suite(&mut r);
    motor_suite(&mut r);
    dynamics_suite(&mut r);
    cga_suite(&mut r);
    dsl_suite(&mut r);
    Report { seed, results: r.results }
}
