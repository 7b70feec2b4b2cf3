//! Acceptance grid: one test per criterion, each printing a PASS/FAIL line.

use std::io::Write;
use std::sync::Mutex;
use std::time::{Duration, Instant};

use ribbonres::cli::{criterion, Grid};
use ribbonres::derived_functors::{hom_dims, hom_shift, tor, verify_tor};
use ribbonres::report::{CheckReport, Fault};
use ribbonres::CoefficientRing;

const Q: CoefficientRing = CoefficientRing::Rationals;
const F2: CoefficientRing = CoefficientRing::PrimeField(2);
const F3: CoefficientRing = CoefficientRing::PrimeField(3);

// criteria run one at a time so their wall-clock bounds are meaningful
static SERIAL: Mutex<()> = Mutex::new(());

fn grid(ns: &[usize], rings: &[CoefficientRing]) -> Grid {
    Grid { ns: ns.to_vec(), rings: rings.to_vec(), full: true }
}

fn line(s: &str) {
    // bypass the harness capture so the summary is always visible
    let mut out = std::io::stdout().lock();
    let _ = writeln!(out, "{s}");
    let _ = out.flush();
}

fn accept(k: usize, name: &str, bound: Duration, body: impl FnOnce() -> Vec<CheckReport>) {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let t = Instant::now();
    let reports = body();
    let elapsed = t.elapsed();
    let failed: Vec<&CheckReport> = reports.iter().filter(|r| !r.passed()).collect();
    let ok = failed.is_empty() && !reports.is_empty() && elapsed < bound;
    line(&format!(
        "{} criterion {k:2} {name}: {} checks, {} failed, {:.2}s (bound {}s)",
        if ok { "PASS" } else { "FAIL" },
        reports.len(),
        failed.len(),
        elapsed.as_secs_f64(),
        bound.as_secs()
    ));
    if let Some(f) = failed.first() {
        line(&format!("  first failure: {} {} expected {} computed {}", f.check, f.params, f.expected, f.computed));
    }
    assert!(!reports.is_empty(), "criterion {k} produced no checks");
    assert!(failed.is_empty(), "criterion {k}: {} failing checks", failed.len());
    assert!(elapsed < bound, "criterion {k} took {elapsed:?}, bound {bound:?}");
}

fn secs(s: u64) -> Duration {
    Duration::from_secs(s)
}

#[test]
fn criterion_01_split_ses() {
    accept(1, "split short exact sequence", secs(60), || criterion(1, &grid(&[2, 3], &[Q, F2, F3]), None).unwrap());
}

#[test]
fn criterion_02_ribbon_cross_oracle() {
    accept(2, "ribbon Schur cross-oracle", secs(30), || criterion(2, &grid(&[1, 2, 3, 4], &[Q]), None).unwrap());
}

#[test]
fn criterion_03_hamel_goulden() {
    accept(3, "Hamel-Goulden complex", secs(300), || criterion(3, &grid(&[2], &[Q, F2]), None).unwrap());
}

#[test]
fn criterion_04_complex_of_ribbons() {
    accept(4, "complex of ribbons", secs(120), || {
        let reports = criterion(4, &grid(&[1, 2, 3], &[Q, F2, F3]), None).unwrap();
        let witness = reports.iter().filter(|r| r.check == "unrestricted_counterexample").count();
        assert_eq!(witness, 9);
        reports
    });
}

#[test]
fn criterion_05_kernel_lemma() {
    accept(5, "kernel lemma", secs(120), || criterion(5, &grid(&[2], &[Q, F2, F3]), None).unwrap());
}

#[test]
fn criterion_06_resolution() {
    accept(6, "minimal resolution", secs(600), || {
        let reports = criterion(6, &grid(&[2, 3], &[Q, F2, F3]), None).unwrap();
        let independent = reports.iter().filter(|r| r.check == "resolution_ring_independence").count();
        assert_eq!(independent, 12);
        reports
    });
}

#[test]
fn criterion_07_generating_identity() {
    accept(7, "Veronese generating identity", secs(30), || criterion(7, &grid(&[2], &[Q]), None).unwrap());
}

#[test]
fn criterion_08_tensor() {
    accept(8, "tensor product splitting", secs(180), || {
        let reports = criterion(8, &grid(&[2, 3], &[Q, F2]), None).unwrap();
        // over F2 the binomial section must be refused exactly when C(r+r′,r) is even
        let refused = reports.iter().filter(|r| r.check == "splitting_binomial_precondition").count();
        let even = (1..=3usize)
            .flat_map(|r| (1..=3usize).map(move |rp| ribbonres::monomial::binomial(r + rp, r)))
            .filter(|c| c % 2 == 0)
            .count();
        assert_eq!(refused, even * 3 * 2);
        reports
    });
}

#[test]
fn criterion_09_higher_tor() {
    accept(9, "higher Tor", secs(600), || {
        let mut reports = criterion(9, &grid(&[2], &[Q]), None).unwrap();
        let w = tor(1, 2, 3, 3, Q, 3, 9).unwrap();
        reports.push(verify_tor(&w).unwrap());
        reports
    });
}

#[test]
fn criterion_10_hom() {
    accept(10, "Hom module", secs(180), || {
        let reports = criterion(10, &grid(&[1, 2, 3], &[Q]), None).unwrap();
        for d in 1..=3 {
            for r in 1..=4 {
                for rp in 1..=4 {
                    let t_max = (hom_shift(d, r, rp) + 3 * d) as i64;
                    for (t, dim) in hom_dims(d, r, rp, 1, Q, t_max).unwrap() {
                        let live = t >= rp as i64 - r as i64 && (t - (rp as i64 - r as i64)).rem_euclid(d as i64) == 0;
                        assert_eq!(dim, live as usize, "univariate Hom at d={d} r={r} r′={rp} t={t}");
                    }
                }
            }
        }
        reports
    });
}

#[test]
fn criterion_11_poset_homology() {
    accept(11, "rank-selected poset homology", secs(300), || criterion(11, &grid(&[2, 3], &[Q]), None).unwrap());
}

#[test]
fn criterion_12_intersection() {
    accept(12, "intersection of tensor subspaces", secs(120), || criterion(12, &grid(&[2], &[Q, F2]), None).unwrap());
}

#[test]
fn injected_sign_flip_is_caught() {
    let _guard = SERIAL.lock().unwrap_or_else(|e| e.into_inner());
    let reports = criterion(4, &Grid { ns: vec![2], rings: vec![Q], full: false }, Some(Fault::SignFlip)).unwrap();
    assert!(reports.iter().any(|r| r.check == "d2_zero" && !r.passed()));
    let reports = criterion(6, &Grid { ns: vec![2], rings: vec![Q], full: false }, Some(Fault::SignFlip)).unwrap();
    assert!(reports.iter().any(|r| r.check == "resolution_exact" && !r.passed()));
}
