//! Acceptance suite. Runs every criterion, prints one PASS/FAIL line each and
//! exits non-zero if any criterion fails.

use std::process::{Command, ExitCode};
use std::time::{Duration, Instant};

use extremal_zeros::closed_bounds::{
    asymptotic_gap, cor1, gupta_muldoon, ratio_decomposition, rho, thm1_e1, thm_a, thm_c,
};
use extremal_zeros::euler_rayleigh::{extreme_zero_bracket, rayleigh_sequences};
use extremal_zeros::poly_core::{gegenbauer_as_jacobi, transformed_coeffs};
use extremal_zeros::power_sums::{closed_form_p, lemma1_power_sum, newton_power_sums};
use extremal_zeros::scalar::parse_rational;
use extremal_zeros::verification::grid::{identity_sample, JacobiGrid, Param};
use extremal_zeros::verification::inequalities::{
    foster_krasikov_check, foster_krasikov_eq14_factor, laguerre_inequality_at, laguerre_inequality_check,
    INEQUALITY_SLACK,
};
use extremal_zeros::verification::limits::{laguerre_limit_check, q_ratio_limit, scaled_q_ratio};
use extremal_zeros::verification::{run_grid, verify_identity_r2, verify_identity_s2, GridSpec};
use extremal_zeros::zero_oracle::{jacobi_zeros, laguerre_zeros, largest_zero_shifted};
use extremal_zeros::{GegenbauerParams, JacobiParams, LaguerreParams, Rational, Scalar};

const PARAMS: [&str; 8] = ["-0.9", "-0.5", "0", "0.5", "1", "2.5", "5", "10"];
const LAMBDAS: [&str; 8] = ["-0.49", "-0.25", "0", "0.5", "1", "2", "5", "10"];
const LAGUERRE_ALPHAS: [&str; 4] = ["-0.5", "0", "1", "5"];

type Check = Result<String, String>;

fn q(s: &str) -> Rational {
    parse_rational(s).unwrap()
}

fn ensure(cond: bool, msg: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(msg())
    }
}

fn err<E: std::fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rel(a: f64, b: f64) -> f64 {
    ((a - b) / b).abs()
}

// 1. Legendre n = 4, k = 3.
fn legendre_four() -> Check {
    let p = JacobiParams::new(4, q("0"), q("0")).map_err(err)?;
    let (lo, hi) = extreme_zero_bracket(&p, 3).map_err(err)?;
    let (lo, hi) = (lo.to_f64(), hi.to_f64());
    // Largest root of 35x^4 - 30x^2 + 3.
    let x = ((3.0 + 2.0 * (6.0_f64 / 5.0).sqrt()) / 7.0).sqrt();
    let y = 1.0 - x;
    ensure((x - 0.8611363116).abs() < 1e-10, || format!("closed-form zero {x}"))?;
    ensure((lo - 0.138365).abs() <= 1e-5, || format!("lower endpoint {lo}"))?;
    ensure((hi - 0.140074).abs() <= 1e-5, || format!("upper endpoint {hi}"))?;
    ensure(lo < y && y < hi, || format!("{y} not in ({lo}, {hi})"))?;
    ensure((y - 0.138864).abs() < 5e-7, || format!("oracle 1 - x = {y}"))?;
    Ok(format!("({lo:.6}, {hi:.6}) contains {y:.6}"))
}

// 2. Power sums three ways.
fn power_sum_agreement() -> Check {
    let mut cases = 0;
    let set = ["0", "1/2", "-1/2", "3/2", "5"];
    for n in 4..=16 {
        for al in set {
            for be in set {
                let p = JacobiParams::new(n, q(al), q(be)).map_err(err)?;
                let poly = transformed_coeffs(&p);
                let ps = newton_power_sums(&poly, 4);
                for r in 1..=4 {
                    let lemma = lemma1_power_sum(r, &poly.coeffs).map_err(err)?;
                    let closed = closed_form_p(r, &p.a(), &p.b(), &p.t()).map_err(err)?;
                    ensure(ps.values[r] == lemma && lemma == closed, || {
                        format!("n={n} alpha={al} beta={be} r={r}: disagreement")
                    })?;
                }
                cases += 1;
            }
        }
    }
    let p = JacobiParams::new(4, q("0"), q("0")).map_err(err)?;
    let ps = newton_power_sums(&transformed_coeffs(&p), 4);
    let want: Vec<Rational> = ["20", "220", "3020", "43120"].iter().map(|s| q(s)).collect();
    ensure(ps.values[1..] == want[..], || format!("Legendre-4 sums {:?}", ps.values))?;
    Ok(format!("{cases} parameter sets, r = 1..4 exact; Legendre-4 20/220/3020/43120"))
}

/// Bounds on the zeros of the transformed polynomial and the exact tie-break
/// by the sign of `Q` between its two largest zeros.
struct TransformedOracle {
    p: JacobiParams<Rational>,
    z: f64,
    rel_error: f64,
    second_upper: f64,
}

impl TransformedOracle {
    fn new(p: &JacobiParams<Rational>) -> Result<Self, String> {
        let shifted = largest_zero_shifted(p).map_err(err)?;
        let zs = jacobi_zeros(p).map_err(err)?;
        let x2 = zs.zeros[zs.zeros.len() - 2];
        let second_upper = 2.0 / (1.0 - x2 - zs.certified_abs_error) * (1.0 + 1e-9);
        Ok(TransformedOracle { p: p.clone(), z: shifted.z, rel_error: shifted.rel_error, second_upper })
    }

    /// Strictly below the largest zero.
    fn below(&self, v: &Rational) -> bool {
        let f = v.to_f64();
        if f * (1.0 + 1e-15) < self.z * (1.0 - self.rel_error) {
            return true;
        }
        f > self.second_upper && transformed_coeffs(&self.p).eval(v) < Rational::from_int(0)
    }

    /// Strictly above the largest zero.
    fn above(&self, v: &Rational) -> bool {
        let f = v.to_f64();
        if f * (1.0 - 1e-15) > self.z * (1.0 + self.rel_error) {
            return true;
        }
        f > self.second_upper && transformed_coeffs(&self.p).eval(v) > Rational::from_int(0)
    }
}

// 3. Monotone Euler-Rayleigh sequences.
fn rayleigh_properties() -> Check {
    let mut cases = 0;
    for n in [4, 8, 16] {
        for al in PARAMS {
            for be in PARAMS {
                let p = JacobiParams::new(n, q(al), q(be)).map_err(err)?;
                let br = rayleigh_sequences(&transformed_coeffs(&p), 12).map_err(err)?;
                let tag = || format!("n={n} alpha={al} beta={be}");
                for w in br.lower_seq.windows(2) {
                    ensure(w[0] < w[1], || format!("{}: l_k not increasing", tag()))?;
                }
                for w in br.upper_seq.windows(2) {
                    ensure(w[0] > w[1], || format!("{}: u_k not decreasing", tag()))?;
                }
                let oracle = TransformedOracle::new(&p)?;
                for k in 0..12 {
                    ensure(oracle.below(&br.lower_seq[k]), || format!("{}: l_{} >= z", tag(), k + 1))?;
                    ensure(oracle.above(&br.upper_seq[k]), || format!("{}: u_{} <= z", tag(), k + 1))?;
                }
                cases += 1;
            }
        }
    }
    Ok(format!("{cases} parameter sets, k = 1..12"))
}

// 4. Closed-form Jacobi bounds over the full grid.
fn jacobi_grid() -> Check {
    let params: Vec<Param> = PARAMS.iter().map(|&s| Param::from(s)).collect();
    let spec = GridSpec {
        name: "acceptance-jacobi".into(),
        k_max: 0,
        jacobi: Some(JacobiGrid { n: (4..=40).collect(), alpha: params.clone(), beta: params }),
        ..GridSpec::empty()
    };
    let report = run_grid(&spec, 0).map_err(err)?;
    if let Some(row) = report.first_failure() {
        return Err(format!("failing row: {row:?}"));
    }
    let mut claimed = [0usize; 4];
    for row in &report.rows {
        let slot = match row.method.as_str() {
            "THM1_E1" => 0,
            "THM1_E2" => 1,
            "THM2_E1" => 2,
            "THM2_E2" => 3,
            _ => continue,
        };
        if row.applicable {
            ensure(row.pass == Some(true), || format!("unchecked row {row:?}"))?;
            claimed[slot] += 1;
        }
    }
    let mut want_e2 = 0;
    let mut want_mirror = 0;
    for n in 4..=40 {
        for al in PARAMS {
            for be in PARAMS {
                let (a, b, nf) = (al.parse::<f64>().unwrap(), be.parse::<f64>().unwrap(), n as f64);
                if nf >= (a + b + 3.0).max(4.0) || b <= 4.0 * a + 7.0 {
                    want_e2 += 1;
                }
                if nf >= (a + b + 3.0).max(4.0) || a <= 4.0 * b + 7.0 {
                    want_mirror += 1;
                }
            }
        }
    }
    let total = 37 * PARAMS.len() * PARAMS.len();
    ensure(claimed == [total, want_e2, total, want_mirror], || {
        format!("claimed rows {claimed:?}, expected [{total}, {want_e2}, {total}, {want_mirror}]")
    })?;
    Ok(format!("{} rows, 0 failures; THM1_E2 claimed on {want_e2} of {total}", report.rows.len()))
}

// 5. Gegenbauer sandwich and the bound ratio.
fn gegenbauer_ratio() -> Check {
    let mut cases = 0;
    let mut worst_ratio = 0.0_f64;
    for lam in LAMBDAS {
        for n in 4..=40 {
            let g = GegenbauerParams::new(n, q(lam)).map_err(err)?;
            let lower = thm_c(&g).value;
            let upper = cor1(&g).value;
            let shifted = largest_zero_shifted(&gegenbauer_as_jacobi(&g).map_err(err)?).map_err(err)?;
            let y = shifted.one_minus_x;
            let truth = y * (2.0 - y);
            let slack = 2.0 * shifted.rel_error + 1e-15;
            let (lo, hi) = (lower.to_f64(), upper.to_f64());
            ensure(lo < truth * (1.0 - slack) && truth * (1.0 + slack) < hi, || {
                format!("n={n} lambda={lam}: {truth} not in ({lo}, {hi})")
            })?;
            let dec = ratio_decomposition(&g);
            ensure(upper.clone() / lower.clone() == dec.r, || format!("n={n} lambda={lam}: exact ratio"))?;
            let gf = g.to_f64();
            let r = cor1(&gf).value / thm_c(&gf).value;
            let fd = ratio_decomposition(&gf);
            let e = rel(r, fd.rho * fd.phi);
            worst_ratio = worst_ratio.max(e);
            ensure(e <= 1e-12, || format!("n={n} lambda={lam}: ratio error {e:e}"))?;
            cases += 1;
        }
    }
    ensure(rho(&q("0")) == q("168/153"), || "rho(0) != 168/153".into())?;
    let mut grid: Vec<Rational> = LAMBDAS.iter().map(|s| q(s)).collect();
    grid.extend((0..=2000).map(|i| q("-0.49") + Rational::new(i.into(), 2.into())));
    grid.sort();
    grid.dedup();
    let rhos: Vec<Rational> = grid.iter().map(rho).collect();
    for (w, l) in rhos.windows(2).zip(&grid) {
        ensure(w[0] < w[1], || format!("rho not increasing after lambda = {}", l.to_f64()))?;
    }
    ensure(rhos.iter().all(|r| *r < q("1.6")), || "rho reaches 1.6".into())?;
    let r1000 = rho(&q("1000"));
    ensure(r1000 > q("1.59"), || format!("rho(1000) = {}", r1000.to_f64()))?;
    Ok(format!(
        "{cases} cases; max ratio error {worst_ratio:.1e}; rho(0) = 168/153; rho(1000) = {:.6}",
        r1000.to_f64()
    ))
}

// 6. Asymptotic gap between the two Jacobi bounds.
fn asymptotic() -> Check {
    let n = 10_000usize;
    let mut parts = Vec::new();
    for al in [0i64, 1, 2] {
        let alpha = Rational::from_int(al);
        let p = JacobiParams::new(n, alpha.clone(), alpha.clone()).map_err(err)?;
        let nn = Rational::from_usize(n);
        let gap = (nn.clone() * nn * (thm_a(&p).value - thm1_e1(&p).value)).to_f64();
        let a1 = (al + 1) as f64;
        let target = a1 * a1 * a1 / (5 * al + 11) as f64;
        ensure((asymptotic_gap(&alpha).to_f64() - target).abs() < 1e-15, || "library limit".into())?;
        let e = rel(gap, target);
        ensure(e < 1e-2, || format!("alpha={al}: n^2 gap {gap} vs {target}"))?;
        parts.push(format!("alpha={al} rel {e:.1e}"));
    }
    Ok(parts.join(", "))
}

// 7. Exact proof identities.
fn identities() -> Check {
    let sample = identity_sample(100, 0);
    ensure(sample.len() == 100, || "sample size".into())?;
    let zero = Rational::from_int(0);
    let twenty = Rational::from_int(20);
    let mut hyp = [0usize; 2];
    for (a, b) in &sample {
        ensure(*a > zero && *a <= twenty && *b > zero && *b <= twenty, || "sample outside (0, 20]".into())?;
        let r2 = verify_identity_r2(a, b).map_err(err)?;
        let s2 = verify_identity_s2(a, b).map_err(err)?;
        ensure(r2.residual_coeffs.iter().all(|c| *c == zero), || "r2 residual".into())?;
        ensure(s2.residual_coeffs.iter().all(|c| *c == zero), || "s2 residual".into())?;
        for c in r2.checks.iter().chain(&s2.checks) {
            ensure(!c.applicable || (c.min_value > zero && !c.degrees_checked.is_empty()), || {
                format!("{} fails at a = {}, b = {}", c.hypothesis, a.to_f64(), b.to_f64())
            })?;
        }
        ensure(r2.checks.iter().all(|c| c.applicable), || "r2 positivity not checked".into())?;
        for (i, c) in s2.checks.iter().enumerate().take(2) {
            hyp[i] += c.applicable as usize;
        }
    }
    Ok(format!("100 samples, residuals zero; s2 hypotheses exercised {} and {} times", hyp[0], hyp[1]))
}

// 8. Gupta-Muldoon bound on the smallest Laguerre zero.
fn laguerre_bound() -> Check {
    let mut cases = 0;
    for n in 2..=20 {
        for al in LAGUERRE_ALPHAS {
            let l = LaguerreParams::new(n, q(al)).map_err(err)?;
            let bound = gupta_muldoon(&l).value.to_f64();
            let zs = laguerre_zeros(&l).map_err(err)?;
            let x = zs.smallest();
            let e = zs.certified_abs_error * x.max(1.0);
            ensure(bound > x + e, || format!("n={n} alpha={al}: bound {bound} <= zero {x}"))?;
            cases += 1;
        }
    }
    let l2 = LaguerreParams::new(2, q("0")).map_err(err)?;
    let gm2 = gupta_muldoon(&l2).value;
    ensure(gm2 == q("40/68"), || "n=2 bound is not 40/68".into())?;
    let margin = gm2.to_f64() - laguerre_zeros(&l2).map_err(err)?.smallest();
    let want = 40.0 / 68.0 - (2.0 - 2f64.sqrt());
    ensure((margin - want).abs() <= 1e-6 && (margin - 2.45e-3).abs() < 5e-6, || format!("margin {margin}"))?;
    let l1 = LaguerreParams::new(1, q("0")).map_err(err)?;
    let (b1, z1) = (gupta_muldoon(&l1).value.to_f64(), laguerre_zeros(&l1).map_err(err)?.smallest());
    ensure((b1 - 1.0).abs() <= 1e-12 && (z1 - 1.0).abs() <= 1e-12, || format!("n=1: {b1} vs {z1}"))?;
    Ok(format!("{cases} cases strict; n=2 margin {margin:.6e}; n=1 bound = zero = 1"))
}

// 9. The beta -> infinity limit.
fn laguerre_limit() -> Check {
    let l = LaguerreParams::new(5, 0.0).map_err(err)?;
    let rep = laguerre_limit_check(&l, &[1e2, 1e3, 1e4]).map_err(err)?;
    ensure(rep.monotone, || format!("errors not decreasing: {:?}", rep.errors))?;
    ensure(rep.error_ratios.iter().all(|r| (8.0..=12.0).contains(r)), || {
        format!("error ratios {:?}", rep.error_ratios)
    })?;
    ensure(rep.final_rel_error < 1e-2, || format!("final error {}", rep.final_rel_error))?;

    // Limit expression exactly as displayed, numerator 2n + a + 1.
    let (n, a) = (5usize, q("1"));
    let b = q("100000001");
    let nn = Rational::from_usize(n);
    let k = |v: i64| Rational::from_int(v);
    let displayed = (k(2) * nn.clone() + a.clone() + k(1))
        / ((k(5) * a.clone() + k(6)) * nn.clone() * (nn + a.clone()) + a.clone() * a.clone() * (a.clone() + k(1)));
    let ratio = scaled_q_ratio(n, &a, &b);
    let e_disp = ((displayed - ratio.clone()) / ratio.clone()).to_f64().abs();
    let e_fixed = ((q_ratio_limit(n, &a) - ratio.clone()) / ratio).to_f64().abs();
    let ratios: Vec<String> = rep.error_ratios.iter().map(|r| format!("{r:.2}")).collect();
    ensure(e_disp <= 1e-6, || {
        format!(
            "displayed limit (2n+a+1)/[...] off by {e_disp:.3e} relative at beta = 1e8 \
             (numerator 2n+a: {e_fixed:.1e}); convergence part ok, ratios {}",
            ratios.join(", ")
        )
    })?;
    Ok(format!("ratios {}, final error {:.2e}", ratios.join(", "), rep.final_rel_error))
}

// 10. Laguerre's inequality and Foster-Krasikov sums.
fn inequalities() -> Check {
    let mut lag = 0;
    for lam in LAMBDAS {
        for n in 3..=30 {
            let rep = laguerre_inequality_check(&GegenbauerParams::new(n, q(lam)).map_err(err)?).map_err(err)?;
            ensure(rep.normalized >= INEQUALITY_SLACK, || format!("n={n} lambda={lam}: {rep:?}"))?;
            lag += 1;
        }
    }
    let mut fk = 0;
    let mut worst = 0.0_f64;
    for n in 4..=10 {
        let p = JacobiParams::new(n, 0.0, 0.0).map_err(err)?;
        for m in 0..=2 {
            for i in 0..=20 {
                let x = -1.0 + i as f64 / 10.0;
                let rep = foster_krasikov_check(&p, m, x).map_err(err)?;
                ensure(rep.normalized >= INEQUALITY_SLACK, || format!("n={n} m={m} x={x}: {rep:?}"))?;
                fk += 1;
            }
        }
        for &x0 in &jacobi_zeros(&p).map_err(err)?.zeros {
            let sum = foster_krasikov_check(&p, 2, x0).map_err(err)?.value;
            let lhs = laguerre_inequality_at(&p, x0).value;
            let e = rel(sum, foster_krasikov_eq14_factor(n) * lhs);
            worst = worst.max(e);
            ensure(e <= 1e-9, || format!("n={n} x0={x0}: m=2 sum {sum} vs {lhs}"))?;
        }
    }
    Ok(format!("{lag} Laguerre checks, {fk} sums, m=2 agreement {worst:.1e}"))
}

// 11. CLI determinism and exit codes.
fn cli() -> Check {
    let exe = env!("CARGO_BIN_EXE_extremal-zeros");
    let dir = tempfile::tempdir().map_err(err)?;
    let run = |args: &[&str]| -> Result<i32, String> {
        let out = Command::new(exe).args(args).output().map_err(err)?;
        out.status.code().ok_or_else(|| "killed by signal".to_string())
    };
    let mut csvs = Vec::new();
    for name in ["a.csv", "b.csv"] {
        let path = dir.path().join(name);
        let code = run(&["verify", "--grid", "default", "--out", path.to_str().unwrap()])?;
        ensure(code == 0, || format!("verify --grid default exited {code}"))?;
        csvs.push(std::fs::read(&path).map_err(err)?);
    }
    ensure(csvs[0] == csvs[1], || "CSV reports differ".into())?;
    ensure(!csvs[0].contains(&b'\r'), || "CRLF in CSV".into())?;

    let code = run(&["verify", "--grid", "nonexistent"])?;
    ensure(code == 2, || format!("unknown grid exited {code}"))?;
    let code = run(&["bounds", "jacobi", "-n", "4", "-a", "0"])?;
    ensure(code == 2, || format!("missing -b exited {code}"))?;
    let grid = dir.path().join("uncertifiable.toml");
    std::fs::write(&grid, "k_max = 1\njacobi = { n = [250], alpha = [0], beta = [0] }\n").map_err(err)?;
    let code = run(&["verify", "--grid", grid.to_str().unwrap()])?;
    ensure(code == 1, || format!("uncertifiable grid exited {code}"))?;
    Ok(format!("{} identical CSV bytes; exit codes 0/1/2", csvs[0].len()))
}

fn main() -> ExitCode {
    let criteria: [(&str, Option<f64>, fn() -> Check); 11] = [
        ("Legendre n=4 sandwich", Some(0.1), legendre_four),
        ("power-sum triple agreement", Some(2.0), power_sum_agreement),
        ("Euler-Rayleigh monotonicity", Some(10.0), rayleigh_properties),
        ("Jacobi grid validity", Some(30.0), jacobi_grid),
        ("Gegenbauer sandwich and ratio", Some(30.0), gegenbauer_ratio),
        ("asymptotic gap", Some(1.0), asymptotic),
        ("proof identities", Some(5.0), identities),
        ("Gupta-Muldoon bound", Some(5.0), laguerre_bound),
        ("Laguerre limit", Some(5.0), laguerre_limit),
        ("Laguerre and Foster-Krasikov inequalities", Some(10.0), inequalities),
        ("CLI determinism and exit codes", None, cli),
    ];
    let mut failed = 0;
    for (i, (title, budget, check)) in criteria.into_iter().enumerate() {
        let start = Instant::now();
        let result = check();
        let elapsed = start.elapsed();
        let result = match (result, budget) {
            (Ok(_), Some(limit)) if elapsed > Duration::from_secs_f64(limit) => {
                Err(format!("took {:.3}s, budget {limit}s", elapsed.as_secs_f64()))
            }
            (r, _) => r,
        };
        let (status, detail) = match result {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("criterion {:>2} {status} {title} [{:.3}s]: {detail}", i + 1, elapsed.as_secs_f64());
    }
    println!("acceptance: {} passed, {failed} failed", 11 - failed);
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
