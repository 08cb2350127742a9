//! Verification suites over the default parameter grid, run concurrently
//! and assembled into a sorted, versioned report document.

use crate::casimir::{check_central, check_quotient, CasimirParams};
use crate::coaction::{check_classification, check_coideal, check_comodule, check_ergodic, check_infinitesimal_compat, spin1_check};
use crate::error::{QgalError, Result};
use crate::freealg::{check_rule_confluence, qbinomial_identity_check, random_element, seeded_rng, NcPoly, Presentation};
use crate::homspace::{build_v_rep, check_action_consistency, check_embedding, check_theta, check_v_rep, make_b};
use crate::pairing::{check_gram_rank, check_pairing_axioms};
use crate::pol::{check_delta0_grid, check_pol_hopf, make_pol, PolVariant};
use crate::report::{params, CheckEntry, Report, Status};
use crate::scalar::Rational;
use crate::text::parse_params;
use crate::uq::{
    build_colinking, check_antipode_identities, check_antipode_relations, check_coassociativity, check_counit_laws,
    check_delta_relations, check_flip_law, check_module_star, commutator_trace, make_uq, param_text, standard_params,
    uq_generators,
};
use rayon::prelude::*;
use serde::{Deserialize, Serialize};
use std::fmt;
use std::str::FromStr;
use std::sync::Arc;
use std::time::Instant;

pub const SCHEMA_VERSION: u32 = 1;
pub const TOOL: &str = "qgal";
pub const WORKERS_ENV: &str = "QGAL_WORKERS";

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Suite {
    Confluence,
    Hopf,
    WeakHopf,
    Casimir,
    Homspace,
    Vrep,
    Pairing,
    Coaction,
    Ergodic,
    Coideal,
    Classify,
    All,
}

impl Suite {
    pub const EACH: [Suite; 11] = [
        Suite::Confluence,
        Suite::Hopf,
        Suite::WeakHopf,
        Suite::Casimir,
        Suite::Homspace,
        Suite::Vrep,
        Suite::Pairing,
        Suite::Coaction,
        Suite::Ergodic,
        Suite::Coideal,
        Suite::Classify,
    ];

    pub fn name(self) -> &'static str {
        match self {
            Suite::Confluence => "confluence",
            Suite::Hopf => "hopf",
            Suite::WeakHopf => "weakhopf",
            Suite::Casimir => "casimir",
            Suite::Homspace => "homspace",
            Suite::Vrep => "vrep",
            Suite::Pairing => "pairing",
            Suite::Coaction => "coaction",
            Suite::Ergodic => "ergodic",
            Suite::Coideal => "coideal",
            Suite::Classify => "classify",
            Suite::All => "all",
        }
    }

    /// Random samples per check when none are requested.
    fn default_samples(self) -> usize {
        match self {
            Suite::WeakHopf => 100,
            Suite::Hopf | Suite::Homspace => 50,
            Suite::Casimir | Suite::Pairing => 20,
            _ => 10,
        }
    }
}

impl fmt::Display for Suite {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for Suite {
    type Err = QgalError;

    fn from_str(s: &str) -> Result<Suite> {
        Suite::EACH
            .into_iter()
            .chain([Suite::All])
            .find(|x| x.name() == s)
            .ok_or_else(|| QgalError::InvalidParams(format!("unknown suite '{s}'")))
    }
}

/// `(mu, nu) in {-1,0,1}^2`, `tau in {-2,...,2}`.
pub fn default_grid() -> Vec<CasimirParams> {
    let mut g = Vec::new();
    for mu in -1..=1 {
        for nu in -1..=1 {
            for tau in -2..=2 {
                g.push(CasimirParams::ints(mu, nu, tau));
            }
        }
    }
    g
}

/// `default`, or triples `mu,nu,tau` separated by `;` or whitespace.
pub fn parse_grid(s: &str) -> Result<Vec<CasimirParams>> {
    if s.trim() == "default" {
        return Ok(default_grid());
    }
    let g: Vec<CasimirParams> = s
        .split(|c: char| c == ';' || c.is_whitespace())
        .filter(|t| !t.is_empty())
        .map(|t| {
            if t.split(',').count() != 3 {
                return Err(QgalError::InvalidParams(format!("grid point '{t}' is not mu,nu,tau")));
            }
            parse_params(t)
        })
        .collect::<Result<_>>()?;
    if g.is_empty() {
        return Err(QgalError::InvalidParams("empty grid".into()));
    }
    Ok(g)
}

#[derive(Clone, Debug)]
pub struct VerifyOptions {
    pub suite: Suite,
    /// Word length of random samples.
    pub degree: usize,
    /// Degree bound of the ergodicity kernel.
    pub ergodic_degree: u32,
    pub samples: Option<usize>,
    pub seed: u64,
    pub grid: Vec<CasimirParams>,
    pub workers: usize,
}

impl Default for VerifyOptions {
    fn default() -> Self {
        VerifyOptions {
            suite: Suite::All,
            degree: 3,
            ergodic_degree: 6,
            samples: None,
            seed: 0,
            grid: default_grid(),
            workers: default_workers(),
        }
    }
}

/// Worker count from the environment, else the available parallelism.
pub fn default_workers() -> usize {
    std::env::var(WORKERS_ENV)
        .ok()
        .and_then(|v| v.parse().ok())
        .filter(|&n| n > 0)
        .unwrap_or_else(|| std::thread::available_parallelism().map_or(1, |n| n.get()))
}

#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize, Deserialize)]
pub struct Summary {
    pub total: usize,
    pub pass: usize,
    pub fail: usize,
    pub skipped: usize,
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ReportDocument {
    pub schema_version: u32,
    pub tool: String,
    pub tool_version: String,
    pub seed: u64,
    pub suite: String,
    pub degree: usize,
    pub ergodic_degree: u32,
    pub grid_size: usize,
    pub entries: Vec<CheckEntry>,
    pub summary: Summary,
    pub elapsed_ms: f64,
}

impl ReportDocument {
    pub fn all_passed(&self) -> bool {
        self.summary.fail == 0
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("report serializes")
    }

    /// Plain text: one line per entry, witnesses indented below failures.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for e in &self.entries {
            let tag = match e.status {
                Status::Pass => "PASS",
                Status::Fail => "FAIL",
                Status::Skipped => "SKIP",
            };
            out.push_str(&format!("{tag} {}", e.id));
            if let Some(n) = &e.note {
                out.push_str(&format!("  ({n})"));
            }
            out.push('\n');
            if let Some(w) = &e.witness {
                out.push_str(&format!("    element: {}\n    lhs: {}\n    rhs: {}\n", w.element, w.lhs, w.rhs));
            }
        }
        let s = &self.summary;
        out.push_str(&format!(
            "suite {}: {} checks, {} passed, {} failed, {} skipped\n",
            self.suite, s.total, s.pass, s.fail, s.skipped
        ));
        out
    }
}

type Job = Box<dyn Fn() -> Report + Send + Sync>;

fn job(f: impl Fn() -> Report + Send + Sync + 'static) -> Job {
    Box::new(f)
}

fn grid_params(p: &CasimirParams) -> std::collections::BTreeMap<String, String> {
    params(&[("mu", param_text(&p.mu)), ("nu", param_text(&p.nu)), ("tau", param_text(&p.tau))])
}

fn label_params(vals: &[(&str, &Rational)]) -> std::collections::BTreeMap<String, String> {
    vals.iter().map(|(k, v)| (k.to_string(), param_text(v))).collect()
}

fn over_grid(grid: &[CasimirParams], jobs: &mut Vec<Job>, f: impl Fn(&CasimirParams) -> Report + Send + Sync + Clone + 'static) {
    for p in grid {
        let (p, f) = (p.clone(), f.clone());
        jobs.push(job(move || f(&p).with_params(&grid_params(&p))));
    }
}

fn confluence_of(pres: Arc<Presentation>) -> Report {
    let len = 2 * pres.longest_lhs();
    check_rule_confluence(&pres, len)
}

fn jobs_for(suite: Suite, o: &VerifyOptions) -> Vec<Job> {
    let mut jobs = Vec::new();
    let labels = standard_params();
    let samples = o.samples.unwrap_or(suite.default_samples());
    let (degree, seed) = (o.degree, o.seed);
    let grid = &o.grid;
    match suite {
        Suite::All => {
            for s in Suite::EACH {
                jobs.extend(jobs_for(s, o));
            }
        }
        Suite::Confluence => {
            for mu in &labels {
                for nu in &labels {
                    let (mu, nu) = (mu.clone(), nu.clone());
                    jobs.push(job(move || confluence_of(make_uq(&mu, &nu))));
                }
            }
            over_grid(grid, &mut jobs, |p| {
                let mut r = confluence_of(crate::casimir::make_quotient(p));
                r.extend(confluence_of(make_b(p)));
                r
            });
            for v in PolVariant::ALL {
                jobs.push(job(move || confluence_of(make_pol(v))));
            }
            jobs.push(job(|| confluence_of(crate::freealg::qbinomial_presentation())));
        }
        Suite::Hopf => {
            for mu in &labels {
                for nu in &labels {
                    for ups in &labels {
                        let (mu, nu, ups) = (mu.clone(), nu.clone(), ups.clone());
                        let lp = labels.clone();
                        jobs.push(job(move || {
                            let mut r = check_delta_relations(&mu, &nu, &ups);
                            r.extend(commutator_trace(&mu, &nu, &ups));
                            r.extend(check_flip_law(&mu, &nu, &ups));
                            for om in &lp {
                                r.extend(check_coassociativity(&mu, &nu, &ups, om));
                            }
                            r.with_params(&label_params(&[("mu", &mu), ("nu", &nu), ("ups", &ups)]))
                        }));
                    }
                    let (mu, nu) = (mu.clone(), nu.clone());
                    jobs.push(job(move || {
                        let mut r = check_antipode_relations(&mu, &nu);
                        r.extend(antipode_identities(&mu, &nu, samples, degree, seed));
                        r.with_params(&label_params(&[("mu", &mu), ("nu", &nu)]))
                    }));
                }
            }
            for v in PolVariant::ALL {
                jobs.push(job(move || check_pol_hopf(v, samples, degree, seed)));
            }
            jobs.push(job(|| {
                let mut r = qbinomial_identity_check(8);
                r.extend(check_delta0_grid());
                r
            }));
        }
        Suite::WeakHopf => {
            let r = |k: i64| Rational::from_integer(k.into());
            for set in [vec![r(-1), r(0)], vec![r(0), r(1)], vec![r(-1), r(1)], vec![r(-1), r(0), r(1)]] {
                jobs.push(job(move || match build_colinking(&set) {
                    Ok(sys) => crate::uq::check_weak_hopf_axioms(&sys, samples, degree, seed),
                    Err(e) => {
                        let mut rep = Report::new();
                        rep.push(CheckEntry::compare_result::<u8, _>("weakhopf.build", "labels", Err(e), |x| x.to_string()));
                        rep
                    }
                }));
            }
        }
        Suite::Casimir => {
            for mu in &labels {
                for nu in &labels {
                    let (mu, nu) = (mu.clone(), nu.clone());
                    jobs.push(job(move || {
                        let mut r = check_central(&mu, &nu);
                        r.extend(check_module_star(&mu, &nu, samples, degree, seed));
                        r.with_params(&label_params(&[("mu", &mu), ("nu", &nu)]))
                    }));
                }
            }
            over_grid(grid, &mut jobs, move |p| check_quotient(p, samples, degree, seed));
        }
        Suite::Homspace => {
            over_grid(grid, &mut jobs, move |p| {
                let mut r = check_embedding(p);
                r.extend(check_action_consistency(p, samples, degree, seed));
                r.extend(check_theta(p, samples.min(20), degree, seed));
                r
            });
        }
        Suite::Vrep => over_grid(grid, &mut jobs, |p| check_v_rep(&build_v_rep(p, 4))),
        Suite::Pairing => {
            for v in PolVariant::REAL {
                jobs.push(job(move || check_pairing_axioms(v, samples, degree, seed)));
                jobs.push(job(move || check_gram_rank(v, 2, seed)));
            }
        }
        Suite::Coaction => {
            over_grid(grid, &mut jobs, move |p| {
                let mut r = check_comodule(p, samples, degree, seed);
                r.extend(check_infinitesimal_compat(p, samples, degree, seed));
                r
            });
            for v in PolVariant::ALL {
                jobs.push(job(move || spin1_check(v)));
            }
        }
        Suite::Ergodic => {
            let d = o.ergodic_degree;
            over_grid(grid, &mut jobs, move |p| check_ergodic(p, d, seed));
        }
        Suite::Coideal => over_grid(grid, &mut jobs, move |p| check_coideal(p, seed)),
        Suite::Classify => {
            for mu in -1..=1 {
                for nu in -1..=1 {
                    for nu2 in -1..=1 {
                        jobs.push(job(move || {
                            let mut r = Report::new();
                            for tau in -2..=2 {
                                for tau2 in -2..=2 {
                                    let (src, dst) = (CasimirParams::ints(mu, nu, tau), CasimirParams::ints(mu, nu2, tau2));
                                    r.extend(check_classification(&src, &dst));
                                }
                            }
                            r
                        }));
                    }
                }
            }
        }
    }
    jobs
}

/// Antipode identities and counit laws on the generators of `U(mu,mu)`
/// plus `samples` random elements.
fn antipode_identities(mu: &Rational, nu: &Rational, samples: usize, degree: usize, seed: u64) -> Report {
    let pres = make_uq(mu, mu);
    let mut elems: Vec<NcPoly> = uq_generators(&pres).into();
    let mut rng = seeded_rng(seed, &format!("antipode[{},{}]", param_text(mu), param_text(nu)));
    for _ in 0..samples {
        if let Ok(p) = random_element(&pres, degree, 3, &mut rng) {
            elems.push(p);
        }
    }
    let mut r = Report::new();
    let mut tallies: std::collections::BTreeMap<String, (usize, Option<CheckEntry>)> = Default::default();
    for (i, p) in elems.iter().enumerate() {
        let id = if i < 4 { p.render() } else { "random".to_string() };
        let mut sub = check_antipode_identities(mu, nu, p, &id);
        if mu == nu {
            sub.extend(check_counit_laws(mu, p, &id));
        }
        for e in sub.entries {
            if i < 4 {
                r.push(e);
                continue;
            }
            let slot = tallies.entry(e.id.clone()).or_default();
            slot.0 += 1;
            if e.status == Status::Fail && slot.1.is_none() {
                slot.1 = Some(e);
            }
        }
    }
    for (id, (n, fail)) in tallies {
        r.push(fail.unwrap_or_else(|| CheckEntry::pass(id)).with_note(format!("{n} instances")));
    }
    r
}

fn summarize(entries: &[CheckEntry]) -> Summary {
    let c = |s| entries.iter().filter(|e| e.status == s).count();
    Summary { total: entries.len(), pass: c(Status::Pass), fail: c(Status::Fail), skipped: c(Status::Skipped) }
}

/// Run a suite with `o.workers` threads; entries come back sorted by id.
pub fn run_verify(o: &VerifyOptions) -> Result<ReportDocument> {
    let start = Instant::now();
    let jobs = jobs_for(o.suite, o);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(o.workers.max(1))
        .build()
        .map_err(|e| QgalError::InvalidParams(format!("worker pool: {e}")))?;
    let reports: Vec<Report> = pool.install(|| {
        jobs.par_iter()
            .map(|j| {
                let t = Instant::now();
                let mut r = j();
                let ms = t.elapsed().as_secs_f64() * 1e3;
                for e in &mut r.entries {
                    e.elapsed_ms = Some(ms);
                }
                r
            })
            .collect()
    });
    let mut entries: Vec<CheckEntry> = reports.into_iter().flat_map(|r| r.entries).collect();
    entries.sort_by(|a, b| a.id.cmp(&b.id).then_with(|| a.params.cmp(&b.params)));
    let summary = summarize(&entries);
    Ok(ReportDocument {
        schema_version: SCHEMA_VERSION,
        tool: TOOL.into(),
        tool_version: env!("CARGO_PKG_VERSION").into(),
        seed: o.seed,
        suite: o.suite.name().into(),
        degree: o.degree,
        ergodic_degree: o.ergodic_degree,
        grid_size: o.grid.len(),
        entries,
        summary,
        elapsed_ms: start.elapsed().as_secs_f64() * 1e3,
    })
}
