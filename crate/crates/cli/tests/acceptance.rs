//! The ten acceptance criteria, one PASS/FAIL line each. Set `QCHAR_LONG=1`
//! to add the `c_5` centrality check.

use std::process::Command;
use std::time::Instant;

use qchar_core::character::{self, chi_closed_numeric, chi_cn_recurrence, chi_polynomial, chi_series};
use qchar_core::free::{build_casimir_entry, build_cn, casimir_by_recurrence, verify_index_symmetry};
use qchar_core::structure::{all_generators, signed_indices, superbracket};
use qchar_core::{natrep, pbw, AlgebraElement, MultiPoly, Rational};

type Outcome = Result<String, String>;

fn check(cond: bool, what: impl FnOnce() -> String) -> Result<(), String> {
    if cond {
        Ok(())
    } else {
        Err(what())
    }
}

fn engines_agree() -> Outcome {
    for rank in 1..=4 {
        for s in chi_series(6, rank).map_err(|e| e.to_string())? {
            let r = chi_cn_recurrence(s.m, rank);
            check(r.poly == s.poly, || format!("m={} N={rank}", s.m))?;
        }
    }
    Ok("recurrence = series for m <= 6, N <= 4".into())
}

fn closed_form() -> Outcome {
    let mut points = 0;
    for rank in 1..=3 {
        for m in 0..=4 {
            let p = chi_polynomial(m, rank).map_err(|e| e.to_string())?.poly;
            for pt in character::admissible_points(rank, 20, 77 + 10 * rank as u64 + m as u64) {
                let closed = chi_closed_numeric(m, &pt).map_err(|e| e.to_string())?;
                check(closed == p.eval(&pt).unwrap(), || format!("m={m} at {pt:?}"))?;
                points += 1;
            }
        }
    }
    Ok(format!("{points} rational points, exact"))
}

fn pbw_oracle() -> Outcome {
    for rank in 1..=2 {
        for m in 0..=2 {
            let oracle = pbw::hc_of_cn(2 * m + 1, rank).map_err(|e| e.to_string())?;
            let engine = chi_polynomial(m, rank).map_err(|e| e.to_string())?.poly;
            check(oracle == engine, || format!("m={m} N={rank}: {oracle} vs {engine}"))?;
        }
    }
    Ok("hc(c_{2m+1}) = chi for m <= 2, N <= 2".into())
}

fn free_identities() -> Outcome {
    for rank in 1..=3 {
        for m in 1..=3 {
            check(build_cn(2 * m, rank).is_zero(), || format!("c_{} N={rank}", 2 * m))?;
        }
        for n in 1..=6 {
            check(verify_index_symmetry(n, rank), || format!("symmetry n={n} N={rank}"))?;
        }
    }
    for rank in 1..=2 {
        for n in 1..=3 {
            for i in signed_indices(rank) {
                for j in signed_indices(rank) {
                    let direct = build_casimir_entry(n + 1, i, j, rank).unwrap();
                    check(casimir_by_recurrence(n, i, j, rank) == direct, || {
                        format!("C^({}) ({i},{j}) N={rank}", n + 1)
                    })?;
                }
            }
        }
    }
    Ok("even vanishing, index symmetry, C-recurrence".into())
}

fn centrality() -> Outcome {
    let long = std::env::var("QCHAR_LONG").is_ok_and(|v| v == "1");
    let orders: &[usize] = if long { &[1, 3, 5] } else { &[1, 3] };
    for &n in orders {
        pbw::verify_centrality(n, 2).map_err(|g| format!("[{g}, c_{n}] != 0"))?;
    }
    Ok(format!("N=2, n in {orders:?}"))
}

fn entry_identities() -> Outcome {
    let mut total = 0;
    for rank in 1..=2 {
        let report = pbw::verify_entry_identities(2, rank);
        for c in &report.checks {
            check(c.passed, || format!("N={rank}: {}", c.name))?;
        }
        total += report.checks.len();
    }
    Ok(format!("{total} checks"))
}

fn natural_rep() -> Outcome {
    for rank in 1..=3 {
        for n in 1..=7 {
            let r = natrep::scalar_check(n, rank).map_err(|e| e.to_string())?;
            let want = if n == 1 { Rational::from(2) } else { Rational::zero() };
            check(r.scalar == want, || format!("n={n} N={rank}: scalar {}", r.scalar))?;
        }
    }
    Ok("scalars 2, 0, .. for n <= 7, N <= 3".into())
}

fn structural() -> Outcome {
    for rank in 1..=4 {
        let lower = if rank > 1 { Some(chi_series(6, rank - 1).unwrap()) } else { None };
        for s in chi_series(6, rank).map_err(|e| e.to_string())? {
            check(s.poly.is_integral(), || format!("m={} N={rank}: fractional", s.m))?;
            let vars: Vec<MultiPoly> = (0..rank).map(|i| MultiPoly::var(rank, i)).collect();
            for a in 0..rank {
                for b in a + 1..rank {
                    let mut images = vars.clone();
                    images.swap(a, b);
                    check(s.poly.substitute(&images).unwrap() == s.poly, || {
                        format!("m={} N={rank}: swap {a},{b}", s.m)
                    })?;
                }
            }
            if let Some(lower) = &lower {
                let mut images: Vec<MultiPoly> = (0..rank - 1).map(|i| MultiPoly::var(rank - 1, i)).collect();
                images.push(MultiPoly::zero(rank - 1));
                check(s.poly.substitute(&images).unwrap() == lower[s.m].poly, || {
                    format!("m={} N={rank}: stability", s.m)
                })?;
            }
            if rank == 2 {
                let l = MultiPoly::var(1, 0);
                let r = s.poly.substitute(&[l.clone(), -&l]).unwrap();
                check(r.is_zero(), || format!("m={}: l2 = -l1 leaves {r}", s.m))?;
            }
        }
    }
    Ok("integral, symmetric, stable, cancels at l2 = -l1".into())
}

fn jacobi_and_rep() -> Outcome {
    for rank in 1..=2 {
        let gens = all_generators(rank);
        let el = |g| AlgebraElement::generator(rank, g);
        for &a in &gens {
            for &b in &gens {
                // super-antisymmetry on the structure constants as well
                let s = if a.is_odd() && b.is_odd() { 1 } else { -1 };
                check(gens.iter().all(|&g| superbracket(a, b).coeff(g) == s * superbracket(b, a).coeff(g)), || {
                    format!("antisymmetry ({a}, {b})")
                })?;
                for &c in &gens {
                    let lhs = el(a).lie_bracket(&el(b).lie_bracket(&el(c)));
                    let sign = Rational::sign((a.parity() * b.parity()) as u32);
                    let rhs = el(a)
                        .lie_bracket(&el(b))
                        .lie_bracket(&el(c))
                        .add(&el(b).lie_bracket(&el(a).lie_bracket(&el(c))).scale(&sign));
                    check(lhs == rhs, || format!("Jacobi ({a}, {b}, {c})"))?;
                }
            }
        }
    }
    for rank in 1..=3 {
        natrep::verify_representation(rank).map_err(|(a, b)| format!("rho fails on ({a}, {b})"))?;
    }
    Ok("Jacobi exhaustive N <= 2, representation N <= 3".into())
}

fn determinism() -> Outcome {
    let bin = env!("CARGO_BIN_EXE_qchar");
    let run = |jobs: &str| {
        Command::new(bin)
            .args(["verify", "--suite", "all", "--jobs", jobs])
            .env_remove("QCHAR_CACHE_DIR")
            .output()
            .map_err(|e| e.to_string())
    };
    let a = run("1")?;
    let b = run("4")?;
    check(a.status.code() == Some(0), || format!("exit {:?}", a.status.code()))?;
    check(b.status.code() == Some(0), || format!("exit {:?}", b.status.code()))?;
    check(a.stdout == b.stdout, || "stdout differs between --jobs 1 and 4".into())?;
    let lines = a.stdout.iter().filter(|&&c| c == b'\n').count();
    Ok(format!("{lines} identical lines, exit 0"))
}

fn main() {
    let criteria: [(&str, fn() -> Outcome); 10] = [
        ("cross-engine identity", engines_agree),
        ("closed-form polynomiality", closed_form),
        ("PBW oracle equivalence", pbw_oracle),
        ("free-algebra identities", free_identities),
        ("centrality", centrality),
        ("Casimir entry identities", entry_identities),
        ("natural-representation oracle", natural_rep),
        ("structural polynomial properties", structural),
        ("super Jacobi and representation", jacobi_and_rep),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (k, (name, f)) in criteria.iter().enumerate() {
        let t = Instant::now();
        let (tag, detail) = match f() {
            Ok(d) => ("PASS", d),
            Err(d) => {
                failed += 1;
                ("FAIL", d)
            }
        };
        println!("{tag} criterion {:>2} {name}: {detail} ({:.2?})", k + 1, t.elapsed());
    }
    println!("acceptance: {} of {} criteria passed", criteria.len() - failed, criteria.len());
    if failed > 0 {
        std::process::exit(1);
    }
}
