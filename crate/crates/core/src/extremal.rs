//! Bicyclic hypergraphs of a given size with the smallest spectral radius.
//!
//! The minimum over all three bicyclic base shapes is attained by the balanced
//! `C1(p,p,q)` and `C2(p,p,q)` with `2p + q = m - 2`. Its value comes from a scalar
//! equation in `theta`; the sweeps here confirm it by brute force over every
//! member of each family.

use alloc::format;
use alloc::string::String;
use alloc::vec::Vec;

use crate::alpha_normal::WeightedIncidence;
use crate::constructions::{build, build_layout, Family, FamilySpec, PathLayout};
use crate::error::{invalid, Error, Result};
use crate::hypergraph::Hypergraph;
use crate::math;
use crate::mobius::MobiusParams;
use crate::roots::find_root;
use crate::spectral::{spectral_radius, SolverOptions};

/// Bracket for the `theta0` root search.
pub const THETA_BRACKET: (f64, f64) = (1e-6, 5.0);

/// Default cap on spectral solves per sweep.
pub const DEFAULT_SWEEP_CAP: usize = 2000;

/// Closed-form minimum over bicyclic `k`-graphs with `m` edges.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct ExtremalSolution {
    /// Number of edges.
    pub m: usize,
    /// Uniformity.
    pub k: usize,
    /// `floor((m - 2) / 3)`.
    pub q: usize,
    /// Positive root of the `theta` equation.
    pub theta0: f64,
    /// `sech^2(theta0) / 4`.
    pub alpha: f64,
    /// `(2 cosh theta0)^(2/k)`.
    pub rho: f64,
    /// The minimisers, `C1(p,p,q')` and `C2` with the same lengths (canonical form).
    pub witnesses: Vec<FamilySpec>,
}

fn check_m(m: usize) -> Result<()> {
    if m < 5 {
        return Err(invalid(format!("need m >= 5 for balanced bicyclic candidates, got {m}")));
    }
    Ok(())
}

/// `(p, q')` with `2p + q' = m - 2` and `|p - q'| <= 1`.
pub fn balanced_lengths(m: usize) -> Result<(usize, usize)> {
    check_m(m)?;
    let q = (m - 2) / 3;
    Ok(match m % 3 {
        2 => (q, q),
        0 => (q, q + 1),
        _ => (q + 1, q),
    })
}

/// Left side of the `theta` equation: products of `F0*` at `q` and `q + 1`
/// chosen by `m mod 3`, minus `sech^2(theta) / 4`.
pub fn theta_equation(m: usize, theta: f64) -> Result<f64> {
    check_m(m)?;
    let params = MobiusParams::from_theta(theta)?;
    let q = ((m - 2) / 3) as f64;
    let a = params.f0_star(q);
    let b = params.f0_star(q + 1.0);
    let product = match m % 3 {
        0 => a * a * b,
        1 => a * b * b,
        _ => a * a * a,
    };
    Ok(product - 0.25 * math::sech2(theta))
}

/// The positive root `theta0` of [`theta_equation`], to `1e-12`.
///
/// The function is negative near zero and positive for large `theta`; the search
/// uses [`THETA_BRACKET`].
pub fn theta0_solve(m: usize) -> Result<f64> {
    check_m(m)?;
    let (lo, hi) = THETA_BRACKET;
    find_root(|t| theta_equation(m, t).unwrap_or(f64::NAN), lo, hi, 1e-12)
}

/// Closed-form minimum spectral radius over bicyclic `k`-graphs with `m` edges.
pub fn min_rho_bicyclic(m: usize, k: usize) -> Result<ExtremalSolution> {
    if k < 3 {
        return Err(invalid(format!("uniformity must be at least 3, got {k}")));
    }
    let theta0 = theta0_solve(m)?;
    let (p, q1) = balanced_lengths(m)?;
    Ok(ExtremalSolution {
        m,
        k,
        q: (m - 2) / 3,
        theta0,
        alpha: 0.25 * math::sech2(theta0),
        rho: math::powf(2.0 * math::cosh(theta0), 2.0 / k as f64),
        witnesses: alloc::vec![FamilySpec::C1(p, p, q1), FamilySpec::C2(p, p, q1).canonical()],
    })
}

/// One member of a sweep with its spectral radius.
#[derive(Debug, Clone, PartialEq)]
#[cfg_attr(feature = "serde", derive(serde::Serialize, serde::Deserialize))]
pub struct SweepRow {
    /// Family member (canonical form).
    pub spec: FamilySpec,
    /// Spectral radius (bracket midpoint if the solve did not converge).
    pub rho: f64,
    /// `rho^(-k)`.
    pub alpha: f64,
    /// Whether the solve met its tolerance.
    pub converged: bool,
}

/// Canonical members of `family` with `m` edges.
pub fn sweep_specs(m: usize, family: Family) -> Vec<FamilySpec> {
    let mut out = Vec::new();
    match family {
        Family::C1 | Family::C2 => {
            let total = match m.checked_sub(2) {
                Some(t) if t >= 3 => t,
                _ => return out,
            };
            for a in 1..total {
                for b in 1..total - a {
                    let c = total - a - b;
                    let spec = if family == Family::C1 { FamilySpec::C1(a, b, c) } else { FamilySpec::C2(a, b, c) };
                    if spec.canonical() == spec {
                        out.push(spec);
                    }
                }
            }
        }
        Family::C3 => {
            let total = match m.checked_sub(1) {
                Some(t) if t >= 2 => t,
                _ => return out,
            };
            for q in 1..=total / 2 {
                out.push(FamilySpec::C3(total - q, q));
            }
        }
    }
    out
}

/// Maps specs to rows. Implementations may run in parallel but must return rows
/// in input order.
pub trait RowExecutor {
    /// Applies `f` to every spec.
    fn map_rows(&self, specs: &[FamilySpec], f: &(dyn Fn(&FamilySpec) -> SweepRow + Sync)) -> Vec<SweepRow>;
}

/// Runs rows one after another.
#[derive(Debug, Clone, Copy, Default)]
pub struct Sequential;

impl RowExecutor for Sequential {
    fn map_rows(&self, specs: &[FamilySpec], f: &(dyn Fn(&FamilySpec) -> SweepRow + Sync)) -> Vec<SweepRow> {
        specs.iter().map(f).collect()
    }
}

/// Settings for [`family_sweep`].
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct SweepOptions {
    /// Maximum number of spectral solves.
    pub cap: usize,
    /// Solver settings for each row.
    pub solver: SolverOptions,
}

impl Default for SweepOptions {
    fn default() -> Self {
        SweepOptions { cap: DEFAULT_SWEEP_CAP, solver: SolverOptions::default() }
    }
}

/// Spectral radius of one family member as a sweep row.
pub fn sweep_row(spec: &FamilySpec, k: usize, solver: &SolverOptions) -> Result<SweepRow> {
    let h = build(spec, k)?;
    let (rho, converged) = match spectral_radius(&h, solver) {
        Ok(r) => (r.rho, true),
        Err(Error::ConvergenceFailure { lower, upper, .. }) => (0.5 * (lower + upper), false),
        Err(e) => return Err(e),
    };
    Ok(SweepRow { spec: spec.canonical(), rho, alpha: math::powf(rho, -(k as f64)), converged })
}

/// Every canonical member of `family` with `m` edges, sorted by `rho` then parameters.
pub fn family_sweep(
    m: usize,
    k: usize,
    family: Family,
    opts: &SweepOptions,
    exec: &dyn RowExecutor,
) -> Result<Vec<SweepRow>> {
    if k < 3 {
        return Err(invalid(format!("uniformity must be at least 3, got {k}")));
    }
    if family == Family::C3 && k < 4 {
        return Err(invalid("C3 needs k >= 4"));
    }
    let specs = sweep_specs(m, family);
    if specs.is_empty() {
        return Err(invalid(format!("no {family} member has {m} edges")));
    }
    if specs.len() > opts.cap {
        return Err(Error::CapExceeded { needed: specs.len(), cap: opts.cap });
    }
    let solver = opts.solver;
    let row = move |s: &FamilySpec| match sweep_row(s, k, &solver) {
        Ok(r) => r,
        Err(_) => SweepRow { spec: s.clone(), rho: f64::NAN, alpha: f64::NAN, converged: false },
    };
    let mut rows = exec.map_rows(&specs, &row);
    rows.sort_by(|a, b| a.rho.total_cmp(&b.rho).then_with(|| a.spec.cmp(&b.spec)));
    Ok(rows)
}

/// Whether a sweep minimiser has the balanced shape.
pub fn is_balanced(spec: &FamilySpec) -> bool {
    match spec.canonical() {
        FamilySpec::C1(a, b, c) => a == b && a.abs_diff(c) <= 1,
        FamilySpec::C2(a, _, c) => a - c <= 1,
        FamilySpec::C3(a, b) => a - b <= 1,
        _ => false,
    }
}

fn weigh_path(b: &mut WeightedIncidence, params: &MobiusParams, path: &PathLayout, shift: i64) {
    let f = |x: i64| params.f0_star(x as f64);
    let l = path.edges.len() as i64;
    let joints = &path.joints;
    b.set(joints[0], path.start_edge, f(shift));
    for (j, &e) in path.edges.iter().enumerate() {
        let j = j as i64;
        b.set(joints[j as usize], e, f(2 * j - shift));
        b.set(joints[j as usize + 1], e, f(shift - 2 * (j + 1)));
    }
    b.set(joints[l as usize], path.end_edge, f(2 * l - shift));
}

/// Weighted incidence matrix of a bicyclic base built from symmetric orbits at `alpha`.
///
/// Every vertex sum is one and every path edge has product `alpha`; only the
/// branch edges can deviate. Along a path of length `l` started with shift `a`,
/// joint `j` weighs `F0*(2j - a)` towards the next edge. Loops of `C1` and all
/// paths of `C2`/`C3` use `a = l`; the `C1` bridge uses `a = l2 + l3 - l1`, so
/// both branch edges of `C1(l1,l2,l3)` match the balanced case exactly when the
/// loops are equal.
pub fn orbit_incidence(spec: &FamilySpec, k: usize, alpha: f64) -> Result<(Hypergraph, WeightedIncidence)> {
    let params = MobiusParams::new(alpha)?;
    let built = build_layout(spec, k)?;
    let lengths = spec
        .lengths()
        .ok_or_else(|| invalid(format!("{spec} is not a bicyclic base")))?;
    let shifts: Vec<i64> = match *spec {
        FamilySpec::C1(l1, l2, l3) => {
            let (l1, l2, l3) = (l1 as i64, l2 as i64, l3 as i64);
            alloc::vec![l1, l2, l2 + l3 - l1]
        }
        _ => lengths.iter().map(|&l| l as i64).collect(),
    };
    let h = built.graph;
    let mut b = WeightedIncidence::from_fn(&h, |_, _| 1.0);
    for (path, &shift) in built.paths.iter().zip(&shifts) {
        weigh_path(&mut b, &params, path, shift);
    }
    Ok((h, b))
}

/// Outcome of [`verify_main_theorem`].
#[derive(Debug, Clone, PartialEq)]
pub struct MainTheoremReport {
    /// Number of edges.
    pub m: usize,
    /// Uniformity.
    pub k: usize,
    /// Closed-form minimum.
    pub solution: ExtremalSolution,
    /// Smallest `C1` row.
    pub c1_min: SweepRow,
    /// Smallest `C2` row.
    pub c2_min: SweepRow,
    /// Smallest `C3` row (`k >= 4` only).
    pub c3_min: Option<SweepRow>,
    /// `(rho(C2(p-1, q-1, 1)), rho(C3(p, q)))` for the `C3` minimiser, when defined.
    pub pair: Option<(FamilySpec, f64, FamilySpec, f64)>,
    /// Failed checks; empty on success.
    pub failures: Vec<String>,
}

impl MainTheoremReport {
    /// True when every check held.
    pub fn passed(&self) -> bool {
        self.failures.is_empty()
    }
}

/// Tolerance for comparing a closed-form value with a sweep.
pub const AGREEMENT_TOL: f64 = 2e-6;

/// Sweeps all families at `(m, k)` and checks that the `C1` and `C2` minima agree,
/// are balanced, match the closed form, and lie strictly below every `C3` member.
pub fn verify_main_theorem(m: usize, k: usize, opts: &SweepOptions, exec: &dyn RowExecutor) -> Result<MainTheoremReport> {
    let solution = min_rho_bicyclic(m, k)?;
    let mut failures = Vec::new();
    let c1 = family_sweep(m, k, Family::C1, opts, exec)?;
    let c2 = family_sweep(m, k, Family::C2, opts, exec)?;
    for row in c1.iter().chain(&c2).filter(|r| !r.converged) {
        failures.push(format!("{} did not converge", row.spec));
    }
    let (c1_min, c2_min) = (c1[0].clone(), c2[0].clone());
    if math::abs(c1_min.rho - c2_min.rho) > AGREEMENT_TOL {
        failures.push(format!("C1 minimum {} != C2 minimum {}", c1_min.rho, c2_min.rho));
    }
    if math::abs(c1_min.rho - solution.rho) > AGREEMENT_TOL {
        failures.push(format!("C1 minimum {} != closed form {}", c1_min.rho, solution.rho));
    }
    for (row, witness) in [(&c1_min, &solution.witnesses[0]), (&c2_min, &solution.witnesses[1])] {
        if row.spec != *witness {
            failures.push(format!("minimiser {} is not the balanced {}", row.spec, witness));
        }
    }
    let mut c3_min = None;
    let mut pair = None;
    if k >= 4 {
        let c3 = family_sweep(m, k, Family::C3, opts, exec)?;
        let best = c3[0].clone();
        if !is_balanced(&best.spec) {
            failures.push(format!("C3 minimiser {} is not balanced", best.spec));
        }
        if !(c1_min.rho < best.rho) {
            failures.push(format!("C1 minimum {} is not below C3 minimum {}", c1_min.rho, best.rho));
        }
        if let FamilySpec::C3(p, q) = best.spec {
            if p >= 2 && q >= 2 {
                let theta = FamilySpec::C2(p - 1, q - 1, 1);
                let rho_theta = sweep_row(&theta, k, &opts.solver)?.rho;
                if !(rho_theta < best.rho) {
                    failures.push(format!("rho({theta}) = {rho_theta} is not below rho({}) = {}", best.spec, best.rho));
                }
                pair = Some((theta, rho_theta, best.spec.clone(), best.rho));
            }
        }
        c3_min = Some(best);
    }
    Ok(MainTheoremReport { m, k, solution, c1_min, c2_min, c3_min, pair, failures })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::alpha_normal::{classify, Classification};

    #[test]
    fn worked_example() {
        let s = min_rho_bicyclic(14, 3).unwrap();
        assert!((s.theta0 - 0.35581).abs() < 5e-5);
        assert!((s.alpha - 0.22084).abs() < 5e-5);
        assert!((s.rho - 1.654396).abs() < 5e-6);
        assert_eq!(s.q, 4);
        assert_eq!(s.witnesses, alloc::vec![FamilySpec::C1(4, 4, 4), FamilySpec::C2(4, 4, 4)]);
        assert!((s.alpha - math::powf(s.rho, -3.0)).abs() < 1e-12);
    }

    #[test]
    fn theta_equation_changes_sign_once() {
        for m in 5..30 {
            assert!(theta_equation(m, THETA_BRACKET.0).unwrap() < 0.0);
            assert!(theta_equation(m, THETA_BRACKET.1).unwrap() > 0.0);
            let t = theta0_solve(m).unwrap();
            assert!(theta_equation(m, t).unwrap().abs() < 1e-10);
        }
        assert!(theta0_solve(4).is_err());
    }

    #[test]
    fn balanced_lengths_sum() {
        for m in 5..40 {
            let (p, q) = balanced_lengths(m).unwrap();
            assert_eq!(2 * p + q, m - 2);
            assert!(p.abs_diff(q) <= 1);
        }
    }

    #[test]
    fn closed_form_matches_power_iteration() {
        let s = min_rho_bicyclic(8, 3).unwrap();
        let h = build(&FamilySpec::C1(2, 2, 2), 3).unwrap();
        let r = spectral_radius(&h, &SolverOptions::default()).unwrap();
        assert!((s.rho - r.rho).abs() < 2e-6);
        assert!(s.alpha < 0.25);
    }

    #[test]
    fn sweep_spec_counts() {
        assert_eq!(sweep_specs(8, Family::C1).len(), 6);
        assert_eq!(sweep_specs(8, Family::C2).len(), 3);
        assert_eq!(sweep_specs(9, Family::C3), alloc::vec![FamilySpec::C3(7, 1), FamilySpec::C3(6, 2), FamilySpec::C3(5, 3), FamilySpec::C3(4, 4)]);
        assert!(sweep_specs(4, Family::C1).is_empty());
    }

    #[test]
    fn sweep_finds_balanced_minimiser() {
        let rows = family_sweep(8, 3, Family::C1, &SweepOptions::default(), &Sequential).unwrap();
        assert_eq!(rows[0].spec, FamilySpec::C1(2, 2, 2));
        assert!(rows.windows(2).all(|w| w[0].rho <= w[1].rho));
        let c3 = family_sweep(9, 4, Family::C3, &SweepOptions::default(), &Sequential).unwrap();
        assert_eq!(c3[0].spec, FamilySpec::C3(4, 4));
    }

    #[test]
    fn sweep_guards() {
        let tight = SweepOptions { cap: 2, ..Default::default() };
        assert!(matches!(family_sweep(8, 3, Family::C1, &tight, &Sequential), Err(Error::CapExceeded { needed: 6, cap: 2 })));
        assert!(family_sweep(8, 3, Family::C3, &SweepOptions::default(), &Sequential).is_err());
    }

    #[test]
    fn main_theorem_small() {
        let report = verify_main_theorem(8, 4, &SweepOptions::default(), &Sequential).unwrap();
        assert!(report.passed(), "{:?}", report.failures);
        let (_, a, _, b) = report.pair.clone().unwrap();
        assert!(a < b);
    }

    #[test]
    fn orbit_incidence_is_normal_at_balance() {
        let s = min_rho_bicyclic(11, 3).unwrap();
        for spec in &s.witnesses {
            let (h, b) = orbit_incidence(spec, 3, s.alpha).unwrap();
            let report = classify(&h, &b, s.alpha, 1e-8).unwrap();
            assert_eq!(report.classification, Classification::AlphaNormal, "{spec}");
            assert!(report.consistent, "{spec}");
        }
    }

    #[test]
    fn unbalanced_c1_is_strictly_supernormal() {
        let s = min_rho_bicyclic(11, 3).unwrap();
        for spec in [FamilySpec::C1(2, 4, 3), FamilySpec::C1(1, 1, 7), FamilySpec::C1(4, 4, 1)] {
            let (h, b) = orbit_incidence(&spec, 3, s.alpha).unwrap();
            let report = classify(&h, &b, s.alpha, 1e-8).unwrap();
            assert_eq!(report.classification, Classification::StrictlySupernormal, "{spec}");
        }
    }
}
