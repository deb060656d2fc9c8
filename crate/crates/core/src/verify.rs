//! The all-in-one verification pipeline with per-check time budgets.

use std::fmt;
use std::sync::mpsc;
use std::sync::Arc;
use std::thread;
use std::time::{Duration, Instant};

use rayon::prelude::*;
use serde::Serialize;

use crate::auto::{evaluate, Automorphism};
use crate::error::Result;
use crate::gadget;
use crate::graph::Graph;
use crate::hat;
use crate::presentation::{self, kp_presentation};
use crate::rho;
use crate::sil;

pub const DEFAULT_TIMEOUT: Duration = Duration::from_secs(60);

#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(rename_all = "kebab-case")]
pub enum CheckId {
    KpSoundness,
    SilReadings,
    LocalCriterion,
    ArrowDiagram,
    RhoRelations,
    RhoSubdirect,
    RhoInfiniteOrder,
    HatPhi,
    HatIota,
    HatNontrivial,
    HatNormality,
    HatInnerCommutator,
    HatRank,
    HatCollapse,
    Gadget,
}

impl CheckId {
    pub const ALL: [CheckId; 15] = [
        CheckId::KpSoundness,
        CheckId::SilReadings,
        CheckId::LocalCriterion,
        CheckId::ArrowDiagram,
        CheckId::RhoRelations,
        CheckId::RhoSubdirect,
        CheckId::RhoInfiniteOrder,
        CheckId::HatPhi,
        CheckId::HatIota,
        CheckId::HatNontrivial,
        CheckId::HatNormality,
        CheckId::HatInnerCommutator,
        CheckId::HatRank,
        CheckId::HatCollapse,
        CheckId::Gadget,
    ];

    pub const RHO: [CheckId; 3] = [CheckId::RhoRelations, CheckId::RhoSubdirect, CheckId::RhoInfiniteOrder];

    pub const HAT: [CheckId; 7] = [
        CheckId::HatPhi,
        CheckId::HatIota,
        CheckId::HatNontrivial,
        CheckId::HatNormality,
        CheckId::HatInnerCommutator,
        CheckId::HatRank,
        CheckId::HatCollapse,
    ];

    pub fn name(self) -> &'static str {
        match self {
            CheckId::KpSoundness => "kp-soundness",
            CheckId::SilReadings => "sil-readings",
            CheckId::LocalCriterion => "local-criterion",
            CheckId::ArrowDiagram => "arrow-diagram",
            CheckId::RhoRelations => "rho-relations",
            CheckId::RhoSubdirect => "rho-subdirect",
            CheckId::RhoInfiniteOrder => "rho-infinite-order",
            CheckId::HatPhi => "hat-phi",
            CheckId::HatIota => "hat-iota",
            CheckId::HatNontrivial => "hat-nontrivial",
            CheckId::HatNormality => "hat-normality",
            CheckId::HatInnerCommutator => "hat-inner-commutator",
            CheckId::HatRank => "hat-rank",
            CheckId::HatCollapse => "hat-collapse",
            CheckId::Gadget => "gadget",
        }
    }

    pub fn from_name(s: &str) -> Option<CheckId> {
        CheckId::ALL.iter().copied().find(|c| c.name() == s)
    }

    fn needs_connected(self) -> bool {
        CheckId::HAT.contains(&self) || self == CheckId::LocalCriterion
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
#[serde(tag = "status", content = "detail", rename_all = "kebab-case")]
pub enum Status {
    Pass,
    Fail(String),
    Skipped(String),
}

impl fmt::Display for Status {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Status::Pass => f.write_str("pass"),
            Status::Fail(w) => write!(f, "FAIL: {w}"),
            Status::Skipped(why) => write!(f, "skipped({why})"),
        }
    }
}

#[derive(Debug, Clone, Serialize)]
pub struct CheckResult {
    pub check: CheckId,
    #[serde(flatten)]
    pub status: Status,
    pub millis: u128,
}

#[derive(Debug, Clone, Serialize)]
pub struct VerificationReport {
    pub graph: String,
    pub checks: Vec<CheckResult>,
    pub millis: u128,
}

impl VerificationReport {
    pub fn failed(&self) -> usize {
        self.checks.iter().filter(|c| matches!(c.status, Status::Fail(_))).count()
    }

    pub fn passed(&self) -> bool {
        self.failed() == 0
    }

    /// One line per check, without timings.
    pub fn render(&self) -> String {
        self.checks.iter().map(|c| format!("{} {} {}\n", self.graph, c.check.name(), c.status)).collect()
    }
}

/// Relators of the Koban–Piggott presentation that are not the identity
/// automorphism.
pub fn kp_soundness(g: &Arc<Graph>) -> Result<Vec<String>> {
    let p = kp_presentation(g);
    let gens = p.partials().iter().map(|pc| Automorphism::partial(g, pc)).collect::<Result<Vec<_>>>()?;
    let invs = gens.iter().map(Automorphism::invert).collect::<Result<Vec<_>>>()?;
    let mut failures = Vec::new();
    for (i, r) in p.relators.iter().enumerate() {
        if !evaluate(g, &gens, &invs, &r.word())?.is_identity() {
            failures.push(format!("relator {i} ({})", r.kind.tag()));
        }
    }
    Ok(failures)
}

fn from_failures(f: Result<Vec<String>>) -> Status {
    match f {
        Ok(v) if v.is_empty() => Status::Pass,
        Ok(v) => Status::Fail(v.join("; ")),
        Err(e) => Status::Fail(e.to_string()),
    }
}

fn from_bool(b: Result<bool>, witness: &str) -> Status {
    match b {
        Ok(true) => Status::Pass,
        Ok(false) => Status::Fail(witness.to_string()),
        Err(e) => Status::Fail(e.to_string()),
    }
}

/// Runs a single check to completion.
pub fn run_check(g: &Arc<Graph>, check: CheckId) -> Status {
    if check.needs_connected() && !g.is_connected() {
        return Status::Skipped("disconnected".into());
    }
    match check {
        CheckId::KpSoundness => from_failures(kp_soundness(g)),
        CheckId::SilReadings => {
            let d = presentation::sil_reading_discrepancies(g);
            from_failures(Ok(d.iter().map(|w| format!("{} {}", g.label(w.v), g.label(w.w))).collect()))
        }
        CheckId::LocalCriterion => from_bool(sil::no_sil_local(g).map(|l| l == !sil::has_sil(g)), "local criterion disagrees"),
        CheckId::ArrowDiagram => match presentation::arrow_diagram(g) {
            Ok(d) if d.arrows.len() % 2 == 0 => Status::Pass,
            Ok(_) => Status::Fail("odd number of arrows".into()),
            Err(e) => Status::Fail(e.to_string()),
        },
        CheckId::RhoRelations => from_failures(rho::rho_verify_relations(g)),
        CheckId::RhoSubdirect => from_bool(rho::rho_subdirect_check(g), "image is not subdirect"),
        CheckId::RhoInfiniteOrder => from_bool(rho::rho_infinite_order_check(g), "a generator maps to the identity"),
        CheckId::HatPhi => from_failures(hat::phi_verify(g)),
        CheckId::HatIota => from_failures(hat::iota_check(g)),
        CheckId::HatNontrivial => from_failures(hat::hat_graph(g).map(|h| h.nontrivial_check())),
        CheckId::HatNormality => from_failures(hat::normality_check(g)),
        CheckId::HatInnerCommutator => from_failures(hat::inner_commutator_check(g)),
        CheckId::HatRank => match hat::hat_graph(g).and_then(|h| Ok((h.quotient_rank(), h.quotient_rank_oracle()?))) {
            Ok((a, b)) if a == b => Status::Pass,
            Ok((a, b)) => Status::Fail(format!("formula {a}, Smith normal form {b}")),
            Err(e) => Status::Fail(e.to_string()),
        },
        CheckId::HatCollapse => match hat::hat_graph(g) {
            Ok(h) if h.collapses_to_kp() == !sil::has_sil(g) => Status::Pass,
            Ok(_) => Status::Fail("Γ̂ collapse disagrees with SIL detection".into()),
            Err(e) => Status::Fail(e.to_string()),
        },
        CheckId::Gadget => gadget_check(g),
    }
}

fn gadget_check(g: &Arc<Graph>) -> Status {
    let pairs = match sil::sil_pairs(g) {
        Ok(p) => p,
        Err(e) => return Status::Fail(e.to_string()),
    };
    let Some((u, v, shared)) = pairs.into_iter().next() else {
        return Status::Skipped("no SIL pair".into());
    };
    let c = &shared[0];
    let w = c.first().expect("components are nonempty");
    match gadget::gadget_embedding(g, u, v, c, w) {
        Ok(e) if gadget::all_pass(&e.report) => Status::Pass,
        Ok(e) => Status::Fail(
            e.report.iter().filter(|(_, ok)| !ok).map(|(r, _)| r.clone()).collect::<Vec<_>>().join(", "),
        ),
        Err(e) => Status::Fail(e.to_string()),
    }
}

/// Runs `check` on a worker thread; gives up after `timeout`. A timed-out
/// worker is left to finish in the background.
pub fn run_check_with_timeout(g: &Arc<Graph>, check: CheckId, timeout: Duration) -> Status {
    let (tx, rx) = mpsc::channel();
    let g = g.clone();
    thread::spawn(move || {
        let _ = tx.send(run_check(&g, check));
    });
    match rx.recv_timeout(timeout) {
        Ok(s) => s,
        Err(mpsc::RecvTimeoutError::Timeout) => Status::Skipped("timeout".into()),
        Err(mpsc::RecvTimeoutError::Disconnected) => Status::Fail("check panicked".into()),
    }
}

pub fn run_verify(g: &Arc<Graph>, id: &str, checks: &[CheckId], timeout: Duration) -> VerificationReport {
    let start = Instant::now();
    let checks = checks
        .iter()
        .map(|&check| {
            let t = Instant::now();
            let status = run_check_with_timeout(g, check, timeout);
            log::debug!("{id} {} {status}", check.name());
            CheckResult { check, status, millis: t.elapsed().as_millis() }
        })
        .collect();
    VerificationReport { graph: id.to_string(), checks, millis: start.elapsed().as_millis() }
}

/// Verifies every graph, `jobs` at a time; reports keep input order.
pub fn run_verify_all(
    graphs: &[(String, Arc<Graph>)],
    checks: &[CheckId],
    timeout: Duration,
    jobs: usize,
) -> Result<Vec<VerificationReport>> {
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs)
        .build()
        .map_err(|e| crate::Error::Internal(e.to_string()))?;
    Ok(pool.install(|| graphs.par_iter().map(|(id, g)| run_verify(g, id, checks, timeout)).collect()))
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn edgeless_three() {
        let g = Arc::new(Graph::edgeless(3));
        let r = run_verify(&g, "edgeless-3", &CheckId::ALL, DEFAULT_TIMEOUT);
        assert!(r.passed(), "{}", r.render());
        let hat = r.checks.iter().find(|c| c.check == CheckId::HatPhi).unwrap();
        assert_eq!(hat.status, Status::Skipped("disconnected".into()));
    }

    #[test]
    fn complete_graph() {
        let g = Arc::new(Graph::complete(4));
        let r = run_verify(&g, "k4", &CheckId::ALL, DEFAULT_TIMEOUT);
        assert!(r.passed(), "{}", r.render());
        let gadget = r.checks.iter().find(|c| c.check == CheckId::Gadget).unwrap();
        assert_eq!(gadget.status, Status::Skipped("no SIL pair".into()));
    }

    #[test]
    fn timeouts_are_skips() {
        let g = Arc::new(Graph::edgeless(5));
        let r = run_verify(&g, "e5", &[CheckId::KpSoundness], Duration::ZERO);
        assert!(matches!(&r.checks[0].status, Status::Skipped(s) if s == "timeout") || r.passed());
    }

    #[test]
    fn names_round_trip() {
        for c in CheckId::ALL {
            assert_eq!(CheckId::from_name(c.name()), Some(c));
        }
    }
}
