//! The acceptance suite: nine end-to-end checks with pinned tolerances.
//!
//! `Suite::Full` runs every check at full range; `Suite::Quick` trims the sweep
//! ranges of criteria 3 and 5 so the whole suite stays well under a minute.

use std::fmt;
use std::time::{Duration, Instant};

use hyperrho_core::alpha_normal::{certificate_from_eigenvector, classify};
use hyperrho_core::constructions::build_layout;
use hyperrho_core::extremal::{min_rho_bicyclic, verify_main_theorem, SweepOptions};
use hyperrho_core::mobius::{alpha_star, closed_form, iterate_direct, symmetric_y0, MobiusParams};
use hyperrho_core::spectral::{spectral_radius, SolverOptions};
use hyperrho_core::transforms::{release_vertices, splitting_is_rho_decreasing, ReleaseSpec, SplitSpec};
use hyperrho_core::{build, Classification, FamilySpec, Hypergraph};
use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::parallel::Rayon;

#[derive(Debug, Clone, Copy, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    /// Every check at full range.
    #[value(name = "paper")]
    Full,
    /// Trimmed sweep ranges.
    Quick,
}

#[derive(Debug, Clone)]
pub struct Outcome {
    pub id: u8,
    pub name: &'static str,
    pub passed: bool,
    pub detail: String,
    pub elapsed: Duration,
}

impl fmt::Display for Outcome {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(
            f,
            "criterion {} {:<28} {} ({:.2}s) {}",
            self.id,
            self.name,
            if self.passed { "PASS" } else { "FAIL" },
            self.elapsed.as_secs_f64(),
            self.detail
        )
    }
}

pub const CRITERIA: [(u8, &str); 9] = [
    (1, "worked_example"),
    (2, "loose_cycle_baseline"),
    (3, "closed_form_vs_iteration"),
    (4, "c1_c2_equality"),
    (5, "sweep_minimality"),
    (6, "certificate_round_trip"),
    (7, "mobius_analytic_suite"),
    (8, "operation_monotonicity"),
    (9, "subgraph_monotonicity"),
];

/// Strict comparisons must clear this margin.
const MARGIN: f64 = 1e-7;

type Check = Result<String, String>;

fn fail<E: fmt::Display>(e: E) -> String {
    e.to_string()
}

fn rho(h: &Hypergraph) -> Result<f64, String> {
    spectral_radius(h, &SolverOptions::default()).map(|r| r.rho).map_err(fail)
}

/// Largest spectral radius over the components.
fn rho_any(h: &Hypergraph) -> Result<f64, String> {
    h.components().iter().map(|(c, _)| rho(c)).try_fold(0.0f64, |acc, r| Ok(acc.max(r?)))
}

fn rho_of(spec: &FamilySpec, k: usize) -> Result<f64, String> {
    rho(&build(spec, k).map_err(fail)?)
}

fn within_budget(elapsed: Duration, limit_secs: u64, detail: String) -> Check {
    if elapsed > Duration::from_secs(limit_secs) {
        Err(format!("{detail}; took {:.1}s, budget {limit_secs}s", elapsed.as_secs_f64()))
    } else {
        Ok(detail)
    }
}

fn worked_example() -> Check {
    let start = Instant::now();
    let s = min_rho_bicyclic(14, 3).map_err(fail)?;
    let detail = format!("theta0={:.6} alpha={:.6} rho={:.7}", s.theta0, s.alpha, s.rho);
    if (s.theta0 - 0.35581).abs() > 5e-5 || (s.alpha - 0.22084).abs() > 5e-5 || (s.rho - 1.654396).abs() > 5e-6 {
        return Err(detail);
    }
    within_budget(start.elapsed(), 5, detail)
}

fn loose_cycle_baseline() -> Check {
    let mut worst = 0.0f64;
    for k in 3..=5 {
        let target = 4f64.powf(1.0 / k as f64);
        for n in 2..=10 {
            let err = (rho_of(&FamilySpec::LooseCycle(n), k)? - target).abs();
            if err > 1e-6 {
                return Err(format!("LooseCycle({n}) k={k} off by {err:.3e}"));
            }
            worst = worst.max(err);
        }
    }
    Ok(format!("27 cycles, max error {worst:.2e}"))
}

fn closed_form_vs_iteration(suite: Suite) -> Check {
    let start = Instant::now();
    let top = if suite == Suite::Full { 14 } else { 10 };
    let mut worst = 0.0f64;
    for m in 6..=top {
        for k in [3, 4] {
            let s = min_rho_bicyclic(m, k).map_err(fail)?;
            let err = (s.rho - rho_of(&s.witnesses[0], k)?).abs();
            if err > 2e-6 {
                return Err(format!("m={m} k={k}: {} off by {err:.3e}", s.witnesses[0]));
            }
            worst = worst.max(err);
        }
    }
    within_budget(start.elapsed(), 120, format!("m=6..{top}, k=3,4, max error {worst:.2e}"))
}

fn c1_c2_equality() -> Check {
    let mut worst = 0.0f64;
    for (p, q) in [(1, 1), (2, 1), (2, 2), (3, 2), (4, 4)] {
        for k in [3, 4] {
            let a = rho_of(&FamilySpec::C1(p, p, q), k)?;
            let b = rho_of(&FamilySpec::C2(p, p, q), k)?;
            if (a - b).abs() > 2e-6 {
                return Err(format!("C1({p},{p},{q}) vs C2({p},{p},{q}) at k={k}: {a} vs {b}"));
            }
            worst = worst.max((a - b).abs());
        }
    }
    Ok(format!("10 pairs, max difference {worst:.2e}"))
}

fn sweep_minimality(suite: Suite) -> Check {
    let start = Instant::now();
    let top = if suite == Suite::Full { 11 } else { 9 };
    let opts = SweepOptions::default();
    let mut pairs = 0;
    for m in 6..=top {
        for k in [3, 4] {
            let report = verify_main_theorem(m, k, &opts, &Rayon).map_err(fail)?;
            if !report.passed() {
                return Err(format!("m={m} k={k}: {}", report.failures.join("; ")));
            }
            if k == 4 && report.pair.is_none() {
                return Err(format!("m={m} k=4: no C2/C3 witness pair"));
            }
            pairs += usize::from(report.pair.is_some());
        }
    }
    within_budget(start.elapsed(), 300, format!("m=6..{top}, k=3,4, {pairs} C2/C3 pairs"))
}

fn certificate_corpus() -> Vec<(FamilySpec, usize)> {
    use FamilySpec::*;
    let k4_power = PowerHypergraph(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    vec![
        (LoosePath(1), 3),
        (LoosePath(2), 3),
        (LoosePath(4), 3),
        (LoosePath(3), 4),
        (LooseCycle(2), 3),
        (LooseCycle(3), 3),
        (LooseCycle(5), 3),
        (LooseCycle(4), 5),
        (CycleStar(2), 3),
        (CycleStar(3), 3),
        (CycleStar(6), 3),
        (CycleStar(3), 4),
        (CyclePendantJoint(2), 3),
        (CyclePendantJoint(4), 3),
        (CyclePendantJoint(3), 4),
        (C1(1, 1, 1), 3),
        (C1(2, 3, 1), 3),
        (C1(1, 2, 2), 4),
        (C2(1, 1, 1), 3),
        (C2(3, 2, 1), 3),
        (C2(2, 2, 2), 4),
        (C3(1, 1), 4),
        (C3(2, 2), 4),
        (C3(3, 1), 4),
        (C3(2, 1), 5),
        (PowerHypergraph(vec![(0, 1), (1, 2), (2, 0), (2, 3)]), 3),
        (k4_power, 3),
    ]
}

fn certificate_round_trip() -> Check {
    let corpus = certificate_corpus();
    for (spec, k) in &corpus {
        let h = build(spec, *k).map_err(fail)?;
        let r = spectral_radius(&h, &SolverOptions::default()).map_err(fail)?;
        let b = certificate_from_eigenvector(&h, &r).map_err(fail)?;
        let report = classify(&h, &b, r.alpha(*k), 1e-8).map_err(fail)?;
        if report.classification != Classification::AlphaNormal || !report.consistent {
            return Err(format!(
                "{spec} k={k}: {} consistent={}",
                report.classification.as_str(),
                report.consistent
            ));
        }
    }
    Ok(format!("{} instances alpha_normal and consistent", corpus.len()))
}

fn mobius_analytic_suite() -> Check {
    let mut rng = StdRng::seed_from_u64(0x6d6f6269);
    let mut violations = Vec::new();

    for _ in 0..200 {
        let alpha = rng.gen_range(0.01..0.25);
        let p = MobiusParams::new(alpha).map_err(fail)?;
        let x0 = p.r2 + rng.gen_range(0.01..0.99) * (p.r1 - p.r2);
        let n = rng.gen_range(0..=50i64);
        let direct = iterate_direct(alpha, x0, n).map_err(fail)?[n as usize].value();
        let closed = closed_form(alpha, x0, n).map_err(fail)?.value();
        match (direct, closed) {
            (Some(d), Some(c)) if (d - c).abs() <= 1e-10 * d.abs().max(1.0) => {}
            _ => violations.push(format!("orbit alpha={alpha} x0={x0} n={n}")),
        }
    }

    // reflection symmetry of symmetric orbits; alpha >= 0.1 keeps y0 -> y_l well conditioned
    for i in 0..15 {
        let alpha = 0.1 + 0.01 * i as f64;
        for l in 0..12usize {
            let y0 = symmetric_y0(alpha, l).map_err(fail)?;
            for s in -20..=20i64 {
                let ahead = closed_form(alpha, y0, l as i64 + s).map_err(fail)?.value();
                let behind = closed_form(alpha, y0, -s).map_err(fail)?.value();
                match (ahead, behind) {
                    (Some(a), Some(b)) if (a + b - 1.0).abs() <= 1e-10 => {}
                    _ => violations.push(format!("symmetry alpha={alpha} l={l} s={s}")),
                }
            }
        }
    }

    let h = 0.05;
    for i in 0..12 {
        let p = MobiusParams::new(0.1 + 0.0125 * i as f64).map_err(fail)?;
        // F0 strictly decreasing and convex on (0, 20]
        for j in 1..400 {
            let x = j as f64 * h;
            let (a, b, c) = (p.f0(x - h), p.f0(x), p.f0(x + h));
            if !(c < b) || a - 2.0 * b + c < 0.0 {
                violations.push(format!("F0 shape alpha={} x={x}", p.alpha));
            }
        }
        // F0* log-concave on [-1, 20]
        for j in 0..=420 {
            let x = -1.0 + j as f64 * h;
            let d2 = p.f0_star(x - h).ln() - 2.0 * p.f0_star(x).ln() + p.f0_star(x + h).ln();
            if d2 > 1e-12 {
                violations.push(format!("F0* log-concavity alpha={} x={x}", p.alpha));
            }
        }
    }

    for _ in 0..500 {
        let p = MobiusParams::new(rng.gen_range(0.01..0.25)).map_err(fail)?;
        let f = |x: f64| p.f0_star(x);
        // a < b <= c < d with a + d = b + c
        let a = rng.gen_range(-1.0..5.0);
        let b = a + rng.gen_range(0.01..5.0);
        let c = b + rng.gen_range(0.0..5.0);
        let d = b + c - a;
        if !(f(a) * f(d) < f(b) * f(c)) {
            violations.push(format!("product ordering alpha={} a={a} b={b} c={c} d={d}", p.alpha));
        }
        // the second inequality needs a > 0: at a = 0 both sides coincide
        let a2 = rng.gen_range(0.01..5.0);
        let b3 = a2 + rng.gen_range(0.01..5.0);
        if !(f(b3) * f(-a2) < f(0.0) * f(b3 - a2)) {
            violations.push(format!("reflected product alpha={} a={a2} b={b3}", p.alpha));
        }
    }

    let star = alpha_star();
    for i in 1..250 {
        let alpha = 0.001 * i as f64;
        if (alpha - star).abs() < 1e-9 {
            continue;
        }
        if hyperrho_core::mobius::pendant_bound_exceeds_r2(alpha).map_err(fail)? != (alpha < star) {
            violations.push(format!("threshold alpha={alpha}"));
        }
    }

    if violations.is_empty() {
        Ok("200 orbits, symmetry grid, shape grids, 500 quadruples, threshold grid: 0 violations".into())
    } else {
        Err(format!("{} violations, first: {}", violations.len(), violations[0]))
    }
}

fn release_instances() -> Vec<(FamilySpec, usize, bool)> {
    use FamilySpec::*;
    let k4_power = PowerHypergraph(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    // (host, k, release all but one shared vertex instead of just one)
    vec![
        (LooseCycle(3), 3, false),
        (LooseCycle(5), 4, false),
        (CycleStar(4), 3, false),
        (C1(1, 1, 1), 3, false),
        (C1(2, 3, 1), 3, true),
        (C2(2, 2, 2), 3, true),
        (C2(1, 2, 3), 4, false),
        (C3(1, 1), 4, true),
        (C3(2, 3), 5, false),
        (k4_power, 3, false),
    ]
}

fn split_instances() -> Vec<(FamilySpec, usize, usize, usize)> {
    use FamilySpec::*;
    // (host, k, path index, joint index on that path)
    vec![
        (C1(2, 2, 2), 3, 0, 1),
        (C1(1, 3, 2), 3, 2, 0),
        (C2(2, 2, 1), 3, 2, 1),
        (C2(3, 1, 1), 4, 0, 2),
        (C3(2, 2), 4, 0, 1),
        (C3(3, 1), 4, 1, 0),
        (C1(1, 1, 3), 4, 2, 2),
        (C2(1, 1, 1), 3, 1, 0),
        (C2(4, 2, 2), 3, 0, 3),
        (C3(4, 2), 5, 0, 2),
    ]
}

fn cyclic_non_cycles() -> Result<Vec<(String, Hypergraph)>, String> {
    use FamilySpec::*;
    let mut out = Vec::new();
    for (spec, k) in [
        (CycleStar(2), 3),
        (CycleStar(5), 3),
        (CyclePendantJoint(2), 3),
        (CyclePendantJoint(6), 4),
        (C1(1, 1, 1), 3),
        (C2(3, 3, 3), 3),
        (C3(5, 5), 4),
        (C1(4, 1, 2), 5),
        (PowerHypergraph(vec![(0, 1), (1, 2), (2, 0), (2, 3), (3, 4)]), 3),
    ] {
        out.push((format!("{spec} k={k}"), build(&spec, k).map_err(fail)?));
    }
    let twin = Hypergraph::new(4, 5, vec![vec![0, 1, 2, 3], vec![0, 1, 2, 4]]).map_err(fail)?;
    out.push(("two edges sharing three vertices k=4".into(), twin));
    Ok(out)
}

fn operation_monotonicity() -> Check {
    let mut smallest = f64::INFINITY;

    for (spec, k, many) in release_instances() {
        let h = build(&spec, k).map_err(fail)?;
        let (edge, shared) = (0..h.m())
            .map(|e| {
                let shared: Vec<usize> = h.edge(e).vertices().iter().copied().filter(|&v| h.degree(v).unwrap_or(0) >= 2).collect();
                (e, shared)
            })
            .max_by_key(|(_, s)| s.len())
            .ok_or("empty hypergraph")?;
        let t = if many { shared.len() - 1 } else { 1 };
        let released = release_vertices(&h, &ReleaseSpec { edge, release: shared[..t].to_vec() }).map_err(fail)?;
        let (before, after) = (rho(&h)?, rho_any(&released.graph)?);
        if !(after < before - MARGIN) {
            return Err(format!("release on {spec} k={k}: {after} !< {before}"));
        }
        smallest = smallest.min(before - after);
    }

    for (spec, k, path, joint) in split_instances() {
        let built = build_layout(&spec, k).map_err(fail)?;
        let w = built.paths[path].joints[joint];
        let h = built.graph;
        let split = SplitSpec::degree_two(&h, w).map_err(fail)?;
        if !splitting_is_rho_decreasing(&h, &split, &SolverOptions::default(), MARGIN).map_err(fail)? {
            return Err(format!("split of joint {w} on {spec} k={k} did not lower rho"));
        }
    }

    let star = alpha_star();
    for (name, h) in cyclic_non_cycles()? {
        let alpha = rho(&h)?.powf(-(h.k() as f64));
        if !(alpha < star - MARGIN) {
            return Err(format!("alpha({name}) = {alpha} !< alpha*"));
        }
        smallest = smallest.min(star - alpha);
    }

    for k in [3, 4] {
        for n in 2..=8 {
            let a_joint = rho_of(&FamilySpec::CyclePendantJoint(n), k)?.powf(-(k as f64));
            let a_star = rho_of(&FamilySpec::CycleStar(n), k)?.powf(-(k as f64));
            if !(a_joint < a_star - MARGIN && a_star < star - MARGIN) {
                return Err(format!("n={n} k={k}: {a_joint} < {a_star} < {star} fails"));
            }
            smallest = smallest.min((a_star - a_joint).min(star - a_star));
        }
    }

    Ok(format!("10 releases, 10 splits, 10 alpha* bounds, 14 chains; smallest margin {smallest:.2e}"))
}

fn subgraph_monotonicity() -> Check {
    use FamilySpec::*;
    let k4_power = PowerHypergraph(vec![(0, 1), (0, 2), (0, 3), (1, 2), (1, 3), (2, 3)]);
    let hosts = [
        (LooseCycle(4), 3),
        (CycleStar(3), 3),
        (C1(2, 2, 2), 3),
        (C2(1, 1, 1), 3),
        (C3(2, 2), 4),
        (CyclePendantJoint(4), 3),
        (LoosePath(5), 3),
        (k4_power, 3),
        (C2(3, 2, 1), 4),
        (C1(1, 1, 1), 5),
    ];
    let mut smallest = f64::INFINITY;
    for (spec, k) in hosts {
        let host = build(&spec, k).map_err(fail)?;
        let (sub, embedding) = (0..host.m())
            .rev()
            .filter_map(|e| host.without_edges(&[e]).ok())
            .find(|(g, _)| g.is_connected())
            .ok_or_else(|| format!("{spec}: no connected proper subgraph"))?;
        if !sub.is_subhypergraph(&host, &embedding).map_err(fail)? {
            return Err(format!("{spec}: embedding check failed"));
        }
        let (small, big) = (rho(&sub)?, rho(&host)?);
        if !(small < big - MARGIN) {
            return Err(format!("{spec} k={k}: subgraph rho {small} !< {big}"));
        }
        smallest = smallest.min(big - small);
    }
    Ok(format!("10 pairs, smallest gap {smallest:.2e}"))
}

pub fn run(id: u8, suite: Suite) -> Outcome {
    let start = Instant::now();
    let result = match id {
        1 => worked_example(),
        2 => loose_cycle_baseline(),
        3 => closed_form_vs_iteration(suite),
        4 => c1_c2_equality(),
        5 => sweep_minimality(suite),
        6 => certificate_round_trip(),
        7 => mobius_analytic_suite(),
        8 => operation_monotonicity(),
        9 => subgraph_monotonicity(),
        _ => Err(format!("no criterion {id}")),
    };
    let name = CRITERIA.iter().find(|(i, _)| *i == id).map_or("unknown", |(_, n)| n);
    let (passed, detail) = match result {
        Ok(d) => (true, d),
        Err(d) => (false, d),
    };
    Outcome { id, name, passed, detail, elapsed: start.elapsed() }
}

pub fn run_all(suite: Suite) -> Vec<Outcome> {
    CRITERIA.iter().map(|&(id, _)| run(id, suite)).collect()
}
