//! Command runner behind the `ribbonres` binary: builds the requested
//! objects, runs the matching verifications and renders the report.

use std::collections::BTreeMap;
use std::path::PathBuf;
use std::sync::Arc;
use std::time::Instant;

use rayon::prelude::*;
use serde::Serialize;
use serde_json::{json, Value};

use crate::combinatorics::Composition;
use crate::derived_functors::{self, SplittingVariant};
use crate::error::{Error, Result};
use crate::linalg::CoefficientRing;
use crate::poset_homology;
use crate::report::{CheckReport, Fault, Status};
use crate::ribbon_complex;
use crate::schur_module::{self, RealizationCache};
use crate::symfunc;
use crate::veronese::{self, build_resolution_cached};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum Command {
    Resolve,
    Betti,
    Tensor,
    Tor,
    Hom,
    Poset,
    Symcheck,
    VerifyAll,
}

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum Format {
    Json,
    Csv,
}

#[derive(Debug, Clone)]
pub struct RunConfig {
    pub command: Command,
    pub d: Option<usize>,
    pub r: Option<usize>,
    pub r_prime: Option<usize>,
    pub n: usize,
    pub ring: CoefficientRing,
    pub i_max: Option<usize>,
    pub deg_max: Option<usize>,
    pub i: Option<usize>,
    pub alpha: Option<Composition>,
    /// use the full acceptance bounds in `verify-all`
    pub full: bool,
    pub format: Format,
    pub output: Option<PathBuf>,
    pub threads: Option<usize>,
    pub timings: bool,
    pub fault: Option<Fault>,
    pub verbose: u8,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            d: None,
            r: None,
            r_prime: None,
            n: 2,
            ring: CoefficientRing::Rationals,
            i_max: None,
            deg_max: None,
            i: None,
            alpha: None,
            full: false,
            format: Format::Json,
            output: None,
            threads: None,
            timings: true,
            fault: None,
            verbose: 0,
        }
    }

    fn need(&self, v: Option<usize>, flag: &str) -> Result<usize> {
        v.ok_or_else(|| Error::InvalidInput(format!("--{flag} is required for {}", self.command_name())))
    }

    fn positive(&self, v: Option<usize>, flag: &str) -> Result<usize> {
        let x = self.need(v, flag)?;
        if x == 0 {
            return Err(Error::InvalidInput(format!("--{flag} must be positive")));
        }
        Ok(x)
    }

    pub fn command_name(&self) -> String {
        serde_json::to_value(self.command)
            .ok()
            .and_then(|v| v.as_str().map(str::to_string))
            .unwrap_or_default()
    }

    pub fn validate(&self) -> Result<()> {
        if self.n == 0 || self.n > crate::monomial::MAX_VARS {
            return Err(Error::InvalidInput(format!("--n must lie in 1..={}", crate::monomial::MAX_VARS)));
        }
        if self.threads == Some(0) {
            return Err(Error::InvalidInput("--threads must be positive".into()));
        }
        Ok(())
    }
}

/// Parameter sets over which a suite is run.
#[derive(Debug, Clone)]
pub struct Grid {
    pub ns: Vec<usize>,
    pub rings: Vec<CoefficientRing>,
    /// acceptance-size bounds rather than the quick defaults
    pub full: bool,
}

impl Grid {
    pub fn single(n: usize, ring: CoefficientRing, full: bool) -> Self {
        Grid { ns: vec![n], rings: vec![ring], full }
    }

    fn pick(&self, full: usize, quick: usize) -> usize {
        if self.full {
            full
        } else {
            quick
        }
    }

    fn cells(&self) -> Vec<(usize, CoefficientRing)> {
        self.ns.iter().flat_map(|&n| self.rings.iter().map(move |&k| (n, k))).collect()
    }
}

type Job = Box<dyn Fn() -> Result<CheckReport> + Send + Sync>;

/// Runs jobs on the current pool; output order is job order.
fn run_jobs(jobs: Vec<Job>) -> Result<Vec<CheckReport>> {
    jobs.par_iter()
        .map(|job| {
            let t = Instant::now();
            let mut r = job()?;
            r.millis = t.elapsed().as_millis() as u64;
            Ok(r)
        })
        .collect()
}

fn timed(f: impl FnOnce() -> Result<CheckReport>) -> Result<CheckReport> {
    let t = Instant::now();
    let mut r = f()?;
    r.millis = t.elapsed().as_millis() as u64;
    Ok(r)
}

/// Compositions of every size in `lo..=hi`.
pub fn compositions_up_to(lo: usize, hi: usize) -> Vec<Composition> {
    (lo..=hi).flat_map(Composition::all_of).collect()
}

/// Tuples of `l` compositions with total size at most `max_total`.
pub fn composition_tuples(l: usize, max_total: usize) -> Vec<Vec<Composition>> {
    if l == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for first in compositions_up_to(1, max_total.saturating_sub(l - 1)) {
        for mut rest in composition_tuples(l - 1, max_total - first.size()) {
            rest.insert(0, first.clone());
            out.push(rest);
        }
    }
    out
}

pub const RESOLUTION_GRID: [(usize, usize); 6] = [(1, 1), (1, 2), (2, 1), (2, 2), (3, 2), (3, 4)];

fn caches(grid: &Grid) -> BTreeMap<(usize, String), Arc<RealizationCache>> {
    grid.cells()
        .into_iter()
        .map(|(n, k)| ((n, k.to_string()), Arc::new(RealizationCache::new(n, k))))
        .collect()
}

fn cache_for(cs: &BTreeMap<(usize, String), Arc<RealizationCache>>, n: usize, k: CoefficientRing) -> Arc<RealizationCache> {
    cs[&(n, k.to_string())].clone()
}

/// Criterion `k` (1..=12) of the verification suite over `grid`.
pub fn criterion(k: usize, grid: &Grid, fault: Option<Fault>) -> Result<Vec<CheckReport>> {
    let cs = caches(grid);
    let mut jobs: Vec<Job> = Vec::new();
    match k {
        1 => {
            let total = grid.pick(7, 5);
            for (n, ring) in grid.cells() {
                for pair in composition_tuples(2, total) {
                    jobs.push(Box::new(move || schur_module::verify_split_ses(&pair[0], &pair[1], n, ring)));
                }
            }
        }
        2 => {
            let size = grid.pick(8, 6);
            for &n in &grid.ns {
                for alpha in compositions_up_to(1, size) {
                    jobs.push(Box::new(move || symfunc::verify_ribbon_oracle(&alpha, n)));
                }
            }
        }
        3 => {
            let total = grid.pick(7, 5);
            for (n, ring) in grid.cells() {
                let cache = cache_for(&cs, n, ring);
                let mut tuples = composition_tuples(2, total);
                tuples.extend(composition_tuples(3, total));
                tuples.push(vec![Composition::new(vec![1])?, Composition::new(vec![2])?, Composition::new(vec![1])?, Composition::new(vec![1])?]);
                for t in tuples {
                    let cache = cache.clone();
                    jobs.push(Box::new(move || ribbon_complex::verify_hg_cached(&cache, &t)));
                }
            }
        }
        4 => {
            let size = grid.pick(6, 4);
            let p_max = grid.pick(4, 3);
            for (n, ring) in grid.cells() {
                let cache = cache_for(&cs, n, ring);
                for alpha in compositions_up_to(2, size).into_iter().filter(|a| a.len() >= 2) {
                    for p in 0..=p_max {
                        let (cache, alpha) = (cache.clone(), alpha.clone());
                        jobs.push(Box::new(move || ribbon_complex::check_d2_zero_with(&cache, &alpha, p, fault)));
                    }
                }
                jobs.push(Box::new(move || ribbon_complex::verify_unrestricted_counterexample(n, ring)));
            }
        }
        5 => {
            let p_max = grid.pick(4, 3);
            let alphas: Vec<Composition> =
                [vec![1], vec![2], vec![2, 1], vec![1, 2]].into_iter().map(Composition::new).collect::<Result<_>>()?;
            for (n, ring) in grid.cells() {
                let cache = cache_for(&cs, n, ring);
                for alpha in &alphas {
                    for p in 1..=p_max {
                        for q in 1..=p {
                            let (cache, alpha) = (cache.clone(), alpha.clone());
                            jobs.push(Box::new(move || ribbon_complex::kernel_image_lemma_cached(&cache, &alpha, p, q)));
                        }
                    }
                }
            }
        }
        6 => return resolution_criterion(grid, &cs, fault),
        7 => {
            for &n in &grid.ns {
                for (d, r) in RESOLUTION_GRID {
                    jobs.push(Box::new(move || symfunc::verify_veronese_series(d, r, n, 4)));
                }
            }
        }
        8 => {
            let extra = grid.pick(3, 2);
            for (n, ring) in grid.cells() {
                for d in 1..=3 {
                    for r in 0..=3 {
                        for rp in 0..=3 {
                            if r == 0 && rp == 0 {
                                continue;
                            }
                            let deg_max = r + rp + extra * d;
                            jobs.push(Box::new(move || derived_functors::verify_tensor(d, r, rp, n, ring, deg_max)));
                            if r >= 1 && rp >= 1 {
                                let deg = r + rp + d;
                                jobs.push(Box::new(move || {
                                    derived_functors::splitting_psi(d, r, rp, n, ring, SplittingVariant::Lex, deg)
                                }));
                                jobs.push(Box::new(move || binomial_splitting(d, r, rp, n, ring, deg)));
                            }
                        }
                    }
                }
            }
        }
        9 => {
            let is: &[usize] = &[1, 2];
            for (n, ring) in grid.cells() {
                let cache = cache_for(&cs, n, ring);
                for d in 1..=3 {
                    for r in 1..=3 {
                        for rp in 1..=3 {
                            for &i in is {
                                let cache = cache.clone();
                                jobs.push(Box::new(move || {
                                    let w = derived_functors::tor_cached(&cache, d, r, rp, i, d * i + r + rp + d)?;
                                    derived_functors::verify_tor(&w)
                                }));
                            }
                        }
                        jobs.push(Box::new(move || derived_functors::verify_tor0_tensor(d, r, 1, n, ring, r + 1 + 2 * d)));
                    }
                }
                let cache = cache.clone();
                jobs.push(Box::new(move || {
                    let w = derived_functors::tor_cached(&cache, 1, 2, 3, 3, 9)?;
                    derived_functors::verify_tor(&w)
                }));
            }
        }
        10 => {
            for (n, ring) in grid.cells() {
                for d in 1..=3 {
                    for r in 1..=4 {
                        for rp in 1..=4 {
                            let t_max = (derived_functors::hom_shift(d, r, rp) + 3 * d) as i64;
                            jobs.push(Box::new(move || derived_functors::verify_hom(d, r, rp, n, ring, t_max)));
                        }
                    }
                }
            }
        }
        11 => {
            let m_max = grid.pick(7, 5);
            for alpha in compositions_up_to(1, m_max) {
                jobs.push(Box::new(move || poset_homology::verify_solomon(&alpha)));
            }
            let link_max = grid.pick(7, 5);
            for n in grid.ns.iter().copied().filter(|&n| n <= 3) {
                for d in 1..=link_max {
                    for i in 1..=link_max {
                        for r in 1..=link_max {
                            if d * i + r <= link_max {
                                jobs.push(Box::new(move || poset_homology::verify_tor_poset_link(d, r, i, n)));
                            }
                        }
                    }
                }
            }
        }
        12 => {
            let total = grid.pick(6, 5);
            for (n, ring) in grid.cells() {
                for t in composition_tuples(3, total) {
                    jobs.push(Box::new(move || schur_module::verify_intersection(&t[0], &t[1], &t[2], n, ring)));
                }
            }
        }
        _ => return Err(Error::InvalidInput(format!("no criterion {k}"))),
    }
    run_jobs(jobs)
}

/// The binomial section when `C(r+r′, r)` is a unit, otherwise the
/// precondition error it must raise.
pub fn binomial_splitting(
    d: usize,
    r: usize,
    rp: usize,
    n: usize,
    ring: CoefficientRing,
    deg_max: usize,
) -> Result<CheckReport> {
    let c = crate::monomial::binomial(r + rp, r) as i64;
    if ring.is_unit(c) {
        return derived_functors::splitting_psi(d, r, rp, n, ring, SplittingVariant::Binomial, deg_max);
    }
    let got = match derived_functors::splitting_psi(d, r, rp, n, ring, SplittingVariant::Binomial, deg_max) {
        Err(Error::Precondition(_)) => "precondition_error",
        Err(e) => return Err(e),
        Ok(_) => "accepted",
    };
    Ok(CheckReport::compare(
        "splitting_binomial_precondition",
        "the symmetric splitting needs the binomial coefficient to be invertible",
        json!({"d": d, "r": r, "r_prime": rp, "n": n, "ring": ring.to_string(), "binomial": c}),
        json!("precondition_error"),
        json!(got),
    ))
}

fn resolution_criterion(
    grid: &Grid,
    cs: &BTreeMap<(usize, String), Arc<RealizationCache>>,
    fault: Option<Fault>,
) -> Result<Vec<CheckReport>> {
    let i_max = grid.pick(3, 2);
    let extra = grid.pick(4, 3);
    let mut specs = Vec::new();
    for (n, ring) in grid.cells() {
        for (d, r) in RESOLUTION_GRID {
            specs.push((n, ring, d, r));
        }
    }
    let per: Vec<Vec<CheckReport>> = specs
        .par_iter()
        .map(|&(n, ring, d, r)| {
            let cache = cache_for(cs, n, ring);
            let t = Instant::now();
            let mut w = build_resolution_cached(&cache, d, r, i_max, r + extra * d)?;
            if let Some(f) = fault {
                w.inject_fault(f);
            }
            let build = t.elapsed().as_millis() as u64;
            let mut out = vec![
                timed(|| veronese::verify_exactness(&w))?,
                timed(|| veronese::verify_minimality(&w))?,
                timed(|| veronese::verify_betti(&w))?,
                timed(|| veronese::verify_euler(&w))?,
            ];
            out[0].millis += build;
            Ok(out)
        })
        .collect::<Result<_>>()?;
    let mut reports: Vec<CheckReport> = per.into_iter().flatten().collect();
    if grid.rings.len() > 1 {
        reports.extend(ring_independence(&reports));
    }
    Ok(reports)
}

fn without_ring(params: &Value) -> Value {
    let mut p = params.clone();
    if let Some(o) = p.as_object_mut() {
        o.remove("ring");
    }
    p
}

/// Resolution tables computed over different rings must coincide.
fn ring_independence(reports: &[CheckReport]) -> Vec<CheckReport> {
    let mut groups: BTreeMap<String, Vec<(String, Value)>> = BTreeMap::new();
    for r in reports.iter().filter(|r| r.check == "betti") {
        let ring = r.params.get("ring").and_then(Value::as_str).unwrap_or("").to_string();
        groups.entry(without_ring(&r.params).to_string()).or_default().push((ring, r.computed.clone()));
    }
    groups
        .into_iter()
        .map(|(params, tables)| {
            let first = tables[0].1.clone();
            let computed: BTreeMap<String, Value> = tables.iter().cloned().collect();
            let expected: BTreeMap<String, Value> = tables.iter().map(|(k, _)| (k.clone(), first.clone())).collect();
            CheckReport::compare(
                "resolution_ring_independence",
                "Betti numbers of the Veronese module do not depend on the characteristic",
                serde_json::from_str(&params).unwrap_or(Value::Null),
                json!(expected),
                json!(computed),
            )
        })
        .collect()
}

/// Every criterion over `grid`, in order.
pub fn verify_suite(grid: &Grid, fault: Option<Fault>) -> Result<Vec<CheckReport>> {
    let mut out = Vec::new();
    for k in 1..=12 {
        out.extend(criterion(k, grid, fault)?);
    }
    out.push(timed(|| symfunc::omega_stability_check(4))?);
    Ok(out)
}

/// Result of one command: a summary table plus the verification reports.
#[derive(Debug, Clone, Serialize)]
pub struct RunOutcome {
    pub command: Command,
    pub params: Value,
    pub summary: Value,
    pub reports: Vec<CheckReport>,
}

impl RunOutcome {
    pub fn passed(&self) -> bool {
        self.reports.iter().all(CheckReport::passed)
    }

    pub fn first_failure(&self) -> Option<&CheckReport> {
        self.reports.iter().find(|r| !r.passed())
    }

    pub fn exit_code(&self) -> i32 {
        if self.passed() {
            0
        } else {
            2
        }
    }
}

/// Exit status for a failed run: 2 for a failed verification, 1 otherwise.
pub fn error_exit_code(e: &Error) -> i32 {
    match e {
        Error::Verification(_) => 2,
        _ => 1,
    }
}

pub fn verify_all(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let grid = Grid::single(config.n, config.ring, config.full);
    let reports = verify_suite(&grid, config.fault)?;
    let mut counts: BTreeMap<String, (usize, usize)> = BTreeMap::new();
    for r in &reports {
        let e = counts.entry(r.check.clone()).or_default();
        e.0 += 1;
        if r.passed() {
            e.1 += 1;
        }
    }
    let summary: Vec<Value> =
        counts.into_iter().map(|(c, (total, passed))| json!({"check": c, "total": total, "passed": passed})).collect();
    finish(config, json!({"n": config.n, "ring": config.ring.to_string(), "full": config.full}), json!(summary), reports)
}

fn finish(config: &RunConfig, params: Value, summary: Value, mut reports: Vec<CheckReport>) -> Result<RunOutcome> {
    if !config.timings {
        for r in &mut reports {
            r.millis = 0;
        }
    }
    Ok(RunOutcome { command: config.command, params, summary, reports })
}

pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let (n, ring) = (config.n, config.ring);
    let cache = RealizationCache::new(n, ring);
    match config.command {
        Command::VerifyAll => verify_all(config),
        Command::Resolve => {
            let d = config.positive(config.d, "d")?;
            let r = config.positive(config.r, "r")?;
            let i_max = config.i_max.unwrap_or(2);
            let deg_max = config.deg_max.unwrap_or(r + d * (i_max + 1));
            let t = Instant::now();
            let mut w = build_resolution_cached(&cache, d, r, i_max, deg_max)?;
            if let Some(f) = config.fault {
                w.inject_fault(f);
            }
            let build = t.elapsed().as_millis() as u64;
            let steps: Vec<Value> = w
                .steps
                .iter()
                .map(|s| json!({"i": s.i, "shape": s.shape.to_string(), "generator_degree": s.generator_degree, "generators": s.generators}))
                .collect();
            let mut reports = vec![
                timed(|| veronese::verify_exactness(&w))?,
                timed(|| veronese::verify_minimality(&w))?,
                timed(|| veronese::verify_betti(&w))?,
                timed(|| veronese::verify_euler(&w))?,
            ];
            reports[0].millis += build;
            let params = json!({"d": d, "r": r, "n": n, "ring": ring.to_string(), "i_max": i_max, "deg_max": deg_max});
            finish(config, params, json!({"steps": steps}), reports)
        }
        Command::Betti => {
            let d = config.positive(config.d, "d")?;
            let r = config.positive(config.r, "r")?;
            let i_max = config.i_max.unwrap_or(3);
            let deg_max = config.deg_max.unwrap_or(r + d * (i_max + 1));
            let table: Vec<Value> = (0..=i_max)
                .map(|i| veronese::betti(d, r, n, i).map(|(deg, dim)| json!({"i": i, "degree": deg, "dim": dim})))
                .collect::<Result<_>>()?;
            let w = build_resolution_cached(&cache, d, r, i_max, deg_max)?;
            let reports = vec![timed(|| veronese::verify_betti(&w))?];
            let params = json!({"d": d, "r": r, "n": n, "ring": ring.to_string(), "i_max": i_max, "deg_max": deg_max});
            finish(config, params, json!({"betti": table}), reports)
        }
        Command::Tensor => {
            let d = config.positive(config.d, "d")?;
            let r = config.need(config.r, "r")?;
            let rp = config.need(config.r_prime, "rprime")?;
            let deg_max = config.deg_max.unwrap_or(r + rp + 3 * d);
            let dims = derived_functors::tensor_dims(d, r, rp, n, ring, deg_max)?;
            let mut reports = vec![timed(|| derived_functors::verify_tensor(d, r, rp, n, ring, deg_max))?];
            if r >= 1 && rp >= 1 {
                let deg = (r + rp + d).min(deg_max.max(r + rp));
                reports.push(timed(|| derived_functors::splitting_psi(d, r, rp, n, ring, SplittingVariant::Lex, deg))?);
                reports.push(timed(|| binomial_splitting(d, r, rp, n, ring, deg))?);
            }
            let table: Vec<Value> = dims.iter().map(|&(j, dim)| json!({"degree": j, "dim": dim})).collect();
            let params = json!({"d": d, "r": r, "r_prime": rp, "n": n, "ring": ring.to_string(), "deg_max": deg_max});
            finish(config, params, json!({"dims": table}), reports)
        }
        Command::Tor => {
            let d = config.positive(config.d, "d")?;
            let r = config.need(config.r, "r")?;
            let rp = config.positive(config.r_prime, "rprime")?;
            let i = config.need(config.i, "i")?;
            let deg_max = config.deg_max.unwrap_or(d * i + r + rp + d);
            let t = Instant::now();
            let w = derived_functors::tor_cached(&cache, d, r, rp, i, deg_max)?;
            let build = t.elapsed().as_millis() as u64;
            let table: Vec<Value> = w
                .degrees
                .iter()
                .map(|(j, dim, by_weight)| {
                    let mw: Vec<Value> = by_weight
                        .iter()
                        .map(|(&a, &k)| json!({"multidegree": crate::monomial::unpack(a, n), "dim": k}))
                        .collect();
                    json!({"degree": j, "dim": dim, "multidegrees": mw})
                })
                .collect();
            let mut reports = vec![timed(|| derived_functors::verify_tor(&w))?];
            reports[0].millis += build;
            let params = json!({"d": d, "r": r, "r_prime": rp, "i": i, "n": n, "ring": ring.to_string(), "deg_max": deg_max});
            finish(config, params, json!({"degrees": table}), reports)
        }
        Command::Hom => {
            let d = config.positive(config.d, "d")?;
            let r = config.positive(config.r, "r")?;
            let rp = config.positive(config.r_prime, "rprime")?;
            let t_max = config.deg_max.map(|x| x as i64).unwrap_or((derived_functors::hom_shift(d, r, rp) + 3 * d) as i64);
            let dims = derived_functors::hom_dims_cached(&cache, d, r, rp, t_max)?;
            let reports = vec![timed(|| derived_functors::verify_hom(d, r, rp, n, ring, t_max))?];
            let table: Vec<Value> = dims.iter().map(|&(t, dim)| json!({"degree": t, "dim": dim})).collect();
            let params = json!({"d": d, "r": r, "r_prime": rp, "n": n, "ring": ring.to_string(), "t_max": t_max,
                "shift": derived_functors::hom_shift(d, r, rp)});
            finish(config, params, json!({"dims": table}), reports)
        }
        Command::Poset => {
            if let Some(alpha) = &config.alpha {
                let reports = vec![timed(|| poset_homology::verify_solomon(alpha))?];
                let params = json!({"alpha": alpha.to_string()});
                return finish(config, params, json!({"ranks": alpha.partial_sums()}), reports);
            }
            let d = config.positive(config.d, "d")?;
            let r = config.positive(config.r, "r")?;
            let i = config.positive(config.i, "i")?;
            let reports = vec![timed(|| poset_homology::verify_tor_poset_link(d, r, i, n))?];
            let ranks: Vec<usize> = (0..i).map(|k| r + k * d).collect();
            let params = json!({"d": d, "r": r, "i": i, "n": n});
            finish(config, params, json!({"m": d * i + r, "ranks": ranks}), reports)
        }
        Command::Symcheck => {
            let size = config.deg_max.unwrap_or(6);
            let mut jobs: Vec<Job> = Vec::new();
            for alpha in compositions_up_to(1, size) {
                jobs.push(Box::new(move || symfunc::verify_ribbon_oracle(&alpha, n)));
            }
            let pairs: Vec<(usize, usize)> = match (config.d, config.r) {
                (Some(d), Some(r)) => vec![(d, r)],
                _ => RESOLUTION_GRID.to_vec(),
            };
            for (d, r) in pairs.clone() {
                jobs.push(Box::new(move || symfunc::verify_veronese_series(d, r, n, 4)));
            }
            for t in composition_tuples(3, size.min(5)) {
                jobs.push(Box::new(move || symfunc::hamel_goulden_det(&t, n)));
            }
            let i_max = config.i_max.unwrap_or(4);
            jobs.push(Box::new(move || symfunc::omega_stability_check(i_max)));
            let reports = run_jobs(jobs)?;
            let params = json!({"n": n, "size": size});
            finish(config, params, json!({"series": pairs}), reports)
        }
    }
}

fn csv_field(v: &Value) -> String {
    match v {
        Value::String(s) => s.clone(),
        other => other.to_string(),
    }
}

/// JSON document or CSV table (one row per report).
pub fn render(outcome: &RunOutcome, format: Format) -> Result<String> {
    match format {
        Format::Json => {
            let status = if outcome.passed() { Status::Pass } else { Status::Fail };
            let doc = json!({
                "command": outcome.command,
                "params": outcome.params,
                "status": status,
                "summary": outcome.summary,
                "reports": outcome.reports,
                "first_failure": outcome.first_failure(),
            });
            serde_json::to_string_pretty(&doc).map(|s| s + "\n").map_err(|e| Error::InvalidInput(e.to_string()))
        }
        Format::Csv => {
            let mut w = csv::Writer::from_writer(Vec::new());
            let io = |e: csv::Error| Error::InvalidInput(e.to_string());
            w.write_record(["check", "anchor", "params", "expected", "computed", "status", "millis"]).map_err(io)?;
            for r in &outcome.reports {
                let status = if r.passed() { "pass" } else { "fail" };
                w.write_record([
                    r.check.clone(),
                    r.anchor.clone(),
                    csv_field(&r.params),
                    csv_field(&r.expected),
                    csv_field(&r.computed),
                    status.to_string(),
                    r.millis.to_string(),
                ])
                .map_err(io)?;
            }
            let bytes = w.into_inner().map_err(|e| Error::InvalidInput(e.to_string()))?;
            String::from_utf8(bytes).map_err(|e| Error::InvalidInput(e.to_string()))
        }
    }
}
