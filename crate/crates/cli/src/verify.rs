//! Verification suites: every identity is a named case returning pass/fail
//! with a short detail string. Cases run on a bounded thread pool; the report
//! keeps declaration order.

use std::time::{Duration, Instant};

use qchar_core::character::{self, chi_closed_numeric, chi_cn_recurrence, chi_polynomial, chi_series};
use qchar_core::free::{self, build_cn, casimir_by_recurrence, verify_index_symmetry};
use qchar_core::natrep;
use qchar_core::pbw;
use qchar_core::structure::{self, signed_indices};
use qchar_core::{AlgebraElement, MultiPoly, Rational};
use rayon::prelude::*;
use serde::Serialize;

#[derive(Clone, Copy, Debug, PartialEq, Eq, clap::ValueEnum)]
pub enum Suite {
    Identities,
    Pbw,
    Natrep,
    Cross,
    All,
}

impl Suite {
    pub fn name(&self) -> &'static str {
        match self {
            Suite::Identities => "identities",
            Suite::Pbw => "pbw",
            Suite::Natrep => "natrep",
            Suite::Cross => "cross",
            Suite::All => "all",
        }
    }
}

/// Bounds for one run. `None` means the suite's own default.
#[derive(Clone, Copy, Debug, Default)]
pub struct Bounds {
    pub max_rank: Option<usize>,
    pub max_m: Option<usize>,
    pub max_n: Option<usize>,
    /// Also run the expensive centrality check for `c_5`.
    pub long: bool,
}

pub const IDENTITIES_RANK: usize = 3;
pub const PBW_RANK: usize = 2;
pub const PBW_MAX_N: usize = 5;
pub const NATREP_RANK: usize = 3;
pub const NATREP_MAX_N: usize = 7;
pub const CROSS_RANK: usize = 4;
pub const CROSS_MAX_M: usize = 6;
/// Random admissible points per `(m, N)` in the closed-form check.
pub const CLOSED_FORM_POINTS: usize = 20;

#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct CaseResult {
    pub id: String,
    pub passed: bool,
    pub detail: String,
}

#[derive(Clone, Debug, Serialize)]
pub struct VerifyReport {
    pub suite: String,
    pub cases: Vec<CaseResult>,
    #[serde(skip)]
    pub elapsed: Duration,
}

impl VerifyReport {
    pub fn passed(&self) -> bool {
        self.cases.iter().all(|c| c.passed)
    }

    pub fn failures(&self) -> usize {
        self.cases.iter().filter(|c| !c.passed).count()
    }
}

type Check = Box<dyn Fn() -> Result<String, String> + Send + Sync>;

pub struct Case {
    pub id: String,
    check: Check,
}

impl Case {
    fn new(id: String, check: impl Fn() -> Result<String, String> + Send + Sync + 'static) -> Self {
        Case {
            id,
            check: Box::new(check),
        }
    }

    pub fn run(&self) -> CaseResult {
        let (passed, detail) = match (self.check)() {
            Ok(d) => (true, d),
            Err(d) => (false, d),
        };
        CaseResult {
            id: self.id.clone(),
            passed,
            detail,
        }
    }
}

fn ensure(ok: bool, pass: impl Into<String>, fail: impl Into<String>) -> Result<String, String> {
    if ok {
        Ok(pass.into())
    } else {
        Err(fail.into())
    }
}

fn identities_cases(b: &Bounds) -> Vec<Case> {
    let top = b.max_rank.unwrap_or(IDENTITIES_RANK);
    let mut cases = Vec::new();
    for rank in 1..=top {
        cases.push(Case::new(format!("identities/antisymmetry N={rank}"), move || {
            let gens = structure::all_generators(rank);
            for &a in &gens {
                for &x in &gens {
                    let ab = structure::superbracket(a, x);
                    let ba = structure::superbracket(x, a);
                    let sign = if a.parity() * x.parity() == 1 { 1 } else { -1 };
                    if gens.iter().any(|&g| ab.coeff(g) != sign * ba.coeff(g)) {
                        return Err(format!("[{a},{x}]"));
                    }
                }
            }
            Ok(format!("{} pairs", gens.len() * gens.len()))
        }));
        cases.push(Case::new(format!("identities/grading N={rank}"), move || {
            let gens = structure::all_generators(rank);
            for &a in &gens {
                for &x in &gens {
                    let w = a.weight(rank).add(&x.weight(rank));
                    let p = (a.parity() + x.parity()) % 2;
                    for &(_, g) in structure::superbracket(a, x).terms() {
                        if g.weight(rank) != w || g.parity() != p {
                            return Err(format!("[{a},{x}] contains {g}"));
                        }
                    }
                }
            }
            Ok("weights and parities add".into())
        }));
        cases.push(Case::new(format!("identities/jacobi N={rank}"), move || {
            let gens = structure::all_generators(rank);
            let el = |g| AlgebraElement::generator(rank, g);
            for &a in &gens {
                for &x in &gens {
                    for &y in &gens {
                        let lhs = el(a).lie_bracket(&el(x).lie_bracket(&el(y)));
                        let sign = Rational::sign((a.parity() * x.parity()) as u32);
                        let rhs = el(a)
                            .lie_bracket(&el(x))
                            .lie_bracket(&el(y))
                            .add(&el(x).lie_bracket(&el(a).lie_bracket(&el(y))).scale(&sign));
                        if lhs != rhs {
                            return Err(format!("({a}, {x}, {y})"));
                        }
                    }
                }
            }
            Ok(format!("{} triples", gens.len().pow(3)))
        }));
        cases.push(Case::new(format!("identities/even-vanishing N={rank}"), move || {
            for m in 1..=3 {
                if !build_cn(2 * m, rank).is_zero() {
                    return Err(format!("c_{} is nonzero", 2 * m));
                }
            }
            Ok("c_2, c_4, c_6 cancel word by word".into())
        }));
        cases.push(Case::new(format!("identities/index-symmetry N={rank}"), move || {
            for n in 1..=6 {
                if !verify_index_symmetry(n, rank) {
                    return Err(format!("fails at n={n}"));
                }
            }
            Ok("n <= 6".into())
        }));
        if rank <= 2 {
            cases.push(Case::new(format!("identities/c-recurrence N={rank}"), move || {
                for n in 1..=3 {
                    for i in signed_indices(rank) {
                        for j in signed_indices(rank) {
                            let direct = free::build_casimir_entry(n + 1, i, j, rank)
                                .map_err(|e| e.to_string())?;
                            if casimir_by_recurrence(n, i, j, rank) != direct {
                                return Err(format!("C^({})_({i},{j})", n + 1));
                            }
                        }
                    }
                }
                Ok("n <= 4".into())
            }));
            for n in 1..=3 {
                cases.push(Case::new(
                    format!("identities/commutator n={n} N={rank}"),
                    move || match pbw::verify_commutator_identity(n, rank) {
                        Ok(()) => Ok(format!("{} index quadruples", (2 * rank).pow(4))),
                        Err(q) => Err(format!("fails at (i,j,k,l) = {q:?}")),
                    },
                ));
            }
        }
    }
    cases
}

fn pbw_cases(b: &Bounds) -> Vec<Case> {
    let top = b.max_rank.unwrap_or(PBW_RANK);
    let max_n = b.max_n.unwrap_or(PBW_MAX_N);
    let mut cases = Vec::new();
    for rank in 1..=top {
        for n in (1..=max_n).step_by(2) {
            cases.push(Case::new(format!("pbw/hc n={n} N={rank}"), move || {
                let oracle = pbw::hc_of_cn(n, rank).map_err(|e| e.to_string())?;
                let engine = chi_polynomial((n - 1) / 2, rank)
                    .map_err(|e| e.to_string())?
                    .poly;
                ensure(
                    oracle == engine && oracle.is_integral(),
                    oracle.to_string(),
                    format!("oracle {oracle} vs engine {engine}"),
                )
            }));
        }
        let centrality_orders: &[usize] = if b.long { &[1, 3, 5] } else { &[1, 3] };
        for &n in centrality_orders {
            cases.push(Case::new(format!("pbw/centrality n={n} N={rank}"), move || {
                match pbw::verify_centrality(n, rank) {
                    Ok(()) => Ok(format!("{} generators", 2 * rank * rank)),
                    Err(g) => Err(format!("[{g}, c_{n}] != 0")),
                }
            }));
        }
        cases.push(Case::new(format!("pbw/entry-identities m<=2 N={rank}"), move || {
            let report = pbw::verify_entry_identities(2, rank);
            let failed: Vec<&str> = report
                .checks
                .iter()
                .filter(|c| !c.passed)
                .map(|c| c.name.as_str())
                .collect();
            ensure(
                failed.is_empty(),
                format!("{} checks", report.checks.len()),
                failed.join("; "),
            )
        }));
        cases.push(Case::new(format!("pbw/confluence N={rank}"), move || {
            match pbw::confluence_check(rank, 200, 5, 0x5eed + rank as u64) {
                Ok(()) => Ok("200 random words, three strategies".into()),
                Err(w) => Err(format!("strategies disagree on {w}")),
            }
        }));
    }
    cases
}

fn natrep_cases(b: &Bounds) -> Vec<Case> {
    let top = b.max_rank.unwrap_or(NATREP_RANK);
    let max_n = b.max_n.unwrap_or(NATREP_MAX_N);
    let mut cases = Vec::new();
    for rank in 1..=top {
        cases.push(Case::new(format!("natrep/representation N={rank}"), move || {
            match natrep::verify_representation(rank) {
                Ok(()) => Ok("brackets preserved".into()),
                Err((a, x)) => Err(format!("fails on ({a}, {x})")),
            }
        }));
        for n in 1..=max_n {
            cases.push(Case::new(format!("natrep/scalar n={n} N={rank}"), move || {
                let r = natrep::scalar_check(n, rank).map_err(|e| e.to_string())?;
                Ok(format!("scalar {}", r.scalar))
            }));
        }
        for n in 1..=max_n.min(5) {
            cases.push(Case::new(format!("natrep/paths-vs-dense n={n} N={rank}"), move || {
                let paths = natrep::rho_cn(n, rank).map_err(|e| e.to_string())?;
                ensure(
                    paths == natrep::rho_cn_dense(n, rank),
                    "identical matrices",
                    "path enumeration and recurrence disagree",
                )
            }));
        }
    }
    cases
}

fn identity_images(rank: usize) -> Vec<MultiPoly> {
    (0..rank).map(|i| MultiPoly::var(rank, i)).collect()
}

fn permutations(n: usize) -> Vec<Vec<usize>> {
    if n == 0 {
        return vec![vec![]];
    }
    let mut out = Vec::new();
    for p in permutations(n - 1) {
        for slot in 0..=p.len() {
            let mut q = p.clone();
            q.insert(slot, n - 1);
            out.push(q);
        }
    }
    out
}

fn cross_cases(b: &Bounds) -> Vec<Case> {
    let top = b.max_rank.unwrap_or(CROSS_RANK);
    let max_m = b.max_m.unwrap_or(CROSS_MAX_M);
    let mut cases = Vec::new();
    for rank in 1..=top {
        cases.push(Case::new(format!("cross/engines m<={max_m} N={rank}"), move || {
            let series = chi_series(max_m, rank).map_err(|e| e.to_string())?;
            for s in &series {
                let rec = chi_cn_recurrence(s.m, rank);
                if rec.poly != s.poly {
                    return Err(format!("m={}: series {} vs recurrence {}", s.m, s.poly, rec.poly));
                }
            }
            Ok(format!("{} orders identical", series.len()))
        }));
        let closed_m = max_m.min(4);
        cases.push(Case::new(format!("cross/closed-form m<={closed_m} N={rank}"), move || {
            let series = chi_series(closed_m, rank).map_err(|e| e.to_string())?;
            for s in &series {
                let seed = 1000 + 17 * rank as u64 + s.m as u64;
                for pt in character::admissible_points(rank, CLOSED_FORM_POINTS, seed) {
                    let closed = chi_closed_numeric(s.m, &pt).map_err(|e| e.to_string())?;
                    let value = s.poly.eval(&pt).map_err(|e| e.to_string())?;
                    if closed != value {
                        return Err(format!("m={} at {pt:?}: {closed} vs {value}", s.m));
                    }
                }
            }
            Ok(format!("{CLOSED_FORM_POINTS} points per order"))
        }));
        cases.push(Case::new(format!("cross/structure m<={max_m} N={rank}"), move || {
            let series = chi_series(max_m, rank).map_err(|e| e.to_string())?;
            let perms: Vec<Vec<usize>> = if rank <= 3 {
                permutations(rank)
            } else {
                (0..rank)
                    .flat_map(|a| ((a + 1)..rank).map(move |c| (a, c)))
                    .map(|(a, c)| {
                        let mut p: Vec<usize> = (0..rank).collect();
                        p.swap(a, c);
                        p
                    })
                    .collect()
            };
            let lower = if rank > 1 { Some(chi_series(max_m, rank - 1).map_err(|e| e.to_string())?) } else { None };
            for s in &series {
                if !s.poly.is_integral() {
                    return Err(format!("m={}: non-integer coefficient", s.m));
                }
                let vars = identity_images(rank);
                for p in &perms {
                    let images: Vec<MultiPoly> = p.iter().map(|&k| vars[k].clone()).collect();
                    if s.poly.substitute(&images).map_err(|e| e.to_string())? != s.poly {
                        return Err(format!("m={}: not symmetric under {p:?}", s.m));
                    }
                }
                if let Some(lower) = &lower {
                    let mut images = identity_images(rank - 1);
                    images.push(MultiPoly::zero(rank - 1));
                    let restricted = s.poly.substitute(&images).map_err(|e| e.to_string())?;
                    if restricted != lower[s.m].poly {
                        return Err(format!("m={}: l{rank} = 0 does not give the N={} answer", s.m, rank - 1));
                    }
                }
            }
            Ok(format!("integral, symmetric ({} permutations), stable", perms.len()))
        }));
        if rank == 2 {
            cases.push(Case::new(format!("cross/q-cancellation m<={max_m} N=2"), move || {
                let l1 = MultiPoly::var(1, 0);
                let images = [l1.clone(), -&l1];
                for s in chi_series(max_m, 2).map_err(|e| e.to_string())? {
                    let r = s.poly.substitute(&images).map_err(|e| e.to_string())?;
                    if !r.is_zero() {
                        return Err(format!("m={}: l2 = -l1 leaves {r}", s.m));
                    }
                }
                Ok("vanishes identically".into())
            }));
        }
    }
    cases
}

pub fn cases(suite: Suite, bounds: &Bounds) -> Vec<Case> {
    match suite {
        Suite::Identities => identities_cases(bounds),
        Suite::Pbw => pbw_cases(bounds),
        Suite::Natrep => natrep_cases(bounds),
        Suite::Cross => cross_cases(bounds),
        Suite::All => [Suite::Identities, Suite::Pbw, Suite::Natrep, Suite::Cross]
            .iter()
            .flat_map(|s| cases(*s, bounds))
            .collect(),
    }
}

/// Runs every case of `suite` on at most `jobs` threads.
pub fn run_suite(suite: Suite, bounds: &Bounds, jobs: usize) -> VerifyReport {
    let start = Instant::now();
    let cases = cases(suite, bounds);
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(jobs.max(1))
        .build()
        .expect("thread pool");
    let results: Vec<CaseResult> = pool.install(|| cases.par_iter().map(Case::run).collect());
    VerifyReport {
        suite: suite.name().to_string(),
        cases: results,
        elapsed: start.elapsed(),
    }
}
