//! Library results against independent oracles implemented here.

use hyperrho_core::constructions::{build, FamilySpec};
use hyperrho_core::extremal::{min_rho_bicyclic, theta0_solve};
use hyperrho_core::mobius::{alpha_star, symmetric_y0, MobiusParams};
use hyperrho_core::spectral::{apply_adjacency, rayleigh, spectral_radius, SolverOptions};
use hyperrho_core::Hypergraph;

/// `(m, theta0, rho for k = 3, alpha)` from a 30-digit evaluation of the theta
/// equation written directly in tanh/sech form.
const THETA_TABLE: [(usize, f64, f64, f64); 10] = [
    (5, 0.562399148645924, 1.75487766624669, 0.185037375248639),
    (6, 0.519687596800525, 1.73037953129625, 0.193008258641673),
    (7, 0.483250436092647, 1.71101747485734, 0.199634991111315),
    (8, 0.452174801978812, 1.69562076955986, 0.205122743849271),
    (9, 0.430805700771428, 1.6856288555669, 0.208792131787592),
    (10, 0.411158712218595, 1.67687009605916, 0.21208098909627),
    (11, 0.393177790980956, 1.66921314915032, 0.215012945366137),
    (12, 0.380101410477505, 1.66386017221092, 0.21709485020224),
    (13, 0.367636797953266, 1.65892645254007, 0.21903756516057),
    (14, 0.35580643248136, 1.65439615429654, 0.220841894632106),
];

fn factorial(n: usize) -> f64 {
    (1..=n).map(|i| i as f64).product()
}

/// `(Ax)_i` summed over every ordered tuple of the symmetric adjacency tensor,
/// whose entries are `1/(k-1)!` on permutations of edges.
fn tensor_apply(h: &Hypergraph, x: &[f64]) -> Vec<f64> {
    let (n, k) = (h.n(), h.k());
    let weight = 1.0 / factorial(k - 1);
    let mut out = vec![0.0; n];
    let mut tuple = vec![0usize; k - 1];
    for (i, slot) in out.iter_mut().enumerate() {
        loop {
            let mut members: Vec<usize> = tuple.clone();
            members.push(i);
            members.sort_unstable();
            members.dedup();
            if members.len() == k && h.edges().iter().any(|e| e.vertices() == members.as_slice()) {
                *slot += weight * tuple.iter().map(|&j| x[j]).product::<f64>();
            }
            // next tuple in base n
            let mut pos = 0;
            while pos < k - 1 {
                tuple[pos] += 1;
                if tuple[pos] < n {
                    break;
                }
                tuple[pos] = 0;
                pos += 1;
            }
            if pos == k - 1 {
                break;
            }
        }
    }
    out
}

/// Shifted power iteration normalised by `sum x = 1`, using the brute-force tensor.
fn oracle_rho(h: &Hypergraph, steps: usize) -> f64 {
    let k = h.k();
    let mut x = vec![1.0 / h.n() as f64; h.n()];
    for _ in 0..steps {
        let ax = tensor_apply(h, &x);
        for (xi, a) in x.iter_mut().zip(&ax) {
            *xi = (a + xi.powi(k as i32 - 1)).powf(1.0 / (k - 1) as f64);
        }
        let s: f64 = x.iter().sum();
        x.iter_mut().for_each(|v| *v /= s);
    }
    let ax = tensor_apply(h, &x);
    let ratios: Vec<f64> = ax.iter().zip(&x).map(|(a, xi)| a / xi.powi(k as i32 - 1)).collect();
    let lo = ratios.iter().cloned().fold(f64::INFINITY, f64::min);
    let hi = ratios.iter().cloned().fold(0.0, f64::max);
    assert!(hi - lo < 1e-9, "oracle did not converge: [{lo}, {hi}]");
    0.5 * (lo + hi)
}

fn small_corpus() -> Vec<(FamilySpec, usize)> {
    vec![
        (FamilySpec::LoosePath(3), 3),
        (FamilySpec::LooseCycle(3), 3),
        (FamilySpec::CycleStar(3), 3),
        (FamilySpec::CyclePendantJoint(3), 3),
        (FamilySpec::C1(1, 1, 1), 3),
        (FamilySpec::C2(2, 1, 1), 3),
        (FamilySpec::C3(1, 1), 4),
        (FamilySpec::LooseCycle(2), 4),
    ]
}

#[test]
fn adjacency_matches_brute_force_tensor() {
    for (spec, k) in small_corpus() {
        let h = build(&spec, k).unwrap();
        let x: Vec<f64> = (0..h.n()).map(|i| 0.3 + 0.17 * i as f64).collect();
        let fast = apply_adjacency(&h, &x).unwrap();
        let slow = tensor_apply(&h, &x);
        for (a, b) in fast.iter().zip(&slow) {
            assert!((a - b).abs() < 1e-12 * b.max(1.0), "{spec}");
        }
    }
}

#[test]
fn spectral_radius_matches_oracle_iteration() {
    for (spec, k) in small_corpus() {
        let h = build(&spec, k).unwrap();
        let r = spectral_radius(&h, &SolverOptions::default()).unwrap();
        let o = oracle_rho(&h, 4000);
        assert!((r.rho - o).abs() < 1e-8, "{spec}: {} vs {o}", r.rho);
    }
}

#[test]
fn rayleigh_quotient_equals_rho() {
    for (spec, k) in small_corpus() {
        let h = build(&spec, k).unwrap();
        let r = spectral_radius(&h, &SolverOptions::default()).unwrap();
        assert!((rayleigh(&h, &r.eigenvector).unwrap() - r.rho).abs() < 1e-9, "{spec}");
    }
}

#[test]
fn loose_cycles_have_alpha_one_quarter() {
    for k in 3..=5 {
        for n in 2..=10 {
            let h = build(&FamilySpec::LooseCycle(n), k).unwrap();
            let r = spectral_radius(&h, &SolverOptions::default()).unwrap();
            assert!((r.rho - 4f64.powf(1.0 / k as f64)).abs() < 1e-6, "n={n} k={k}");
        }
    }
}

#[test]
fn theta_table() {
    for (m, theta, rho3, alpha) in THETA_TABLE {
        assert!((theta0_solve(m).unwrap() - theta).abs() < 1e-11, "m={m}");
        let s = min_rho_bicyclic(m, 3).unwrap();
        assert!((s.rho - rho3).abs() < 1e-11, "m={m}");
        assert!((s.alpha - alpha).abs() < 1e-11, "m={m}");
    }
}

#[test]
fn closed_form_matches_balanced_c1() {
    for m in [5, 9, 13] {
        for k in [3, 4] {
            let s = min_rho_bicyclic(m, k).unwrap();
            for spec in &s.witnesses {
                let r = spectral_radius(&build(spec, k).unwrap(), &SolverOptions::default()).unwrap();
                assert!((r.rho - s.rho).abs() < 2e-6, "{spec} k={k}");
            }
        }
    }
}

#[test]
fn alpha_star_matches_bisection() {
    let (mut lo, mut hi) = (0.0f64, 1.0f64);
    for _ in 0..200 {
        let mid = 0.5 * (lo + hi);
        if (1.0 - mid).powi(5) - mid > 0.0 {
            lo = mid;
        } else {
            hi = mid;
        }
    }
    assert!((alpha_star() - lo).abs() < 1e-14);
}

#[test]
fn symmetric_start_matches_quadratic_root() {
    for alpha in [0.05, 0.15, 0.22, 0.249] {
        let theta = MobiusParams::new(alpha).unwrap().theta;
        for l in 1..15usize {
            let lf = l as f64;
            let nu1 = (((lf - 1.0) * theta).sinh() + theta.sinh()) / (2.0 * (lf * theta).sinh() * theta.cosh());
            assert!((symmetric_y0(alpha, l).unwrap() - nu1).abs() < 1e-12, "alpha={alpha} l={l}");
        }
    }
}
