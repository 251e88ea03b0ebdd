//! Command-line interface: exact reproduction commands over the
//! arrangement/ranking-pattern library, with JSON or CSV output.
//!
//! Exit codes: 0 success, 1 verification mismatch or internal error,
//! 2 usage error, 3 budget exceeded.

use std::path::PathBuf;
use std::process::ExitCode;

use clap::{Parser, Subcommand, ValueEnum};
use serde_json::json;

use rank_arrange::arrangement::{
    all_subset_restricted, braid, braid_restricted, check_generic, mid_hyperplane,
    union, unfolding_arrangement, Arrangement, Family, ObjectConfig, ObjectConfigJson,
};
use rank_arrange::bounds::{bounds_table, ell_asymptotic_within_5pct, u_asymptotic_within_5pct};
use rank_arrange::budget::RunBudget;
use rank_arrange::chambers::{enumerate_chambers, is_bounded, verify_poset_isomorphism};
use rank_arrange::error::Error;
use rank_arrange::exactmath::{factorial, Int};
use rank_arrange::finitefield::{charpoly, CountsCache};
use rank_arrange::reference::reference;
use rank_arrange::unfolding::{
    admissible_rankings, count_admissible, pattern_1d, q_enumerate, q_from_charpoly,
    q_ie_upper, r0_enumerate, r0_from_charpoly, random_generic_config, v_map,
    braid_slice_pattern,
};

#[derive(Parser)]
#[command(name = "rank-arrange", version, about = "Exact chamber counts and \
ranking patterns of unfolding models via hyperplane arrangements")]
struct Cli {
    /// Worker thread cap (default: machine parallelism).
    #[arg(long, global = true)]
    threads: Option<usize>,
    /// Path to the counts.tsv point-count cache.
    #[arg(long, global = true)]
    counts_cache: Option<PathBuf>,
    /// Lift the default computation budgets (expensive recomputations).
    #[arg(long, global = true)]
    extended: bool,
    /// Seed for commands that sample random configurations.
    #[arg(long, global = true, default_value_t = 0)]
    seed: u64,
    #[command(subcommand)]
    cmd: Cmd,
}

#[derive(Clone, Copy, ValueEnum)]
enum Scope {
    Fast,
    Full,
    Extended,
}

#[derive(Clone, Copy, ValueEnum)]
enum Method {
    Enumerate,
    Charpoly,
}

#[derive(Clone, Copy, ValueEnum)]
enum Format {
    Json,
    Csv,
}

#[derive(Subcommand)]
enum Cmd {
    /// Run the reproduction suite.
    Verify {
        #[arg(long, value_enum, default_value = "fast")]
        scope: Scope,
    },
    /// Interpolate a characteristic polynomial over finite fields.
    Charpoly {
        #[arg(long)]
        family: Family,
        #[arg(long)]
        m: usize,
    },
    /// Enumerate chambers of a named family or an unfolding configuration.
    Chambers {
        #[arg(long)]
        family: Option<Family>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        config: Option<PathBuf>,
    },
    /// Ranking pattern of an object configuration.
    Pattern {
        #[arg(long)]
        config: PathBuf,
    },
    /// Unidimensional pattern count r0(m).
    R0 {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "charpoly")]
        method: Method,
    },
    /// Codimension-one pattern count q(m).
    Q {
        #[arg(long)]
        m: usize,
        #[arg(long, value_enum, default_value = "charpoly")]
        method: Method,
    },
    /// Upper bound for inequivalent codimension-one patterns.
    QieUpper {
        #[arg(long)]
        m: usize,
    },
    /// Reproduce the bounds comparison table.
    Bounds {
        #[arg(long, default_value_t = 10)]
        max_m: usize,
        #[arg(long, value_enum, default_value = "json")]
        format: Format,
    },
    /// Check the intersection poset against the truncated partition
    /// lattice.
    PosetCheck {
        #[arg(long)]
        config: Option<PathBuf>,
        #[arg(long)]
        m: Option<usize>,
        #[arg(long)]
        n: Option<usize>,
    },
}

fn load_config(path: &PathBuf) -> Result<ObjectConfig, Error> {
    let text = std::fs::read_to_string(path)?;
    let j: ObjectConfigJson = serde_json::from_str(&text)?;
    ObjectConfig::from_json(&j)
}

fn family_arrangement(family: Family, m: usize) -> Result<Arrangement, Error> {
    Ok(match family {
        Family::Braid => braid(m),
        Family::BraidRestricted => braid_restricted(m),
        Family::Mid => mid_hyperplane(m),
        Family::AllSubset0 => all_subset_restricted(m),
        Family::AllSubset0UnionBraid0 => {
            union(&all_subset_restricted(m), &braid_restricted(m))?
        }
        Family::Unfolding | Family::Other => {
            return Err(Error::Parse(
                "this family needs a --config, not a --family/--m pair".into(),
            ))
        }
    })
}

struct Check {
    name: String,
    expected: String,
    actual: String,
}

impl Check {
    fn passed(&self) -> bool {
        self.expected == self.actual
    }
}

fn run_verify(
    scope: Scope,
    seed: u64,
    budget: &RunBudget,
    cache: &mut Option<CountsCache>,
) -> Result<Vec<Check>, Error> {
    let mut checks: Vec<Check> = Vec::new();
    let push = |name: &str, expected: String, actual: String, checks: &mut Vec<Check>| {
        checks.push(Check { name: name.into(), expected, actual });
    };
    let show = |r: Result<Int, Error>| match r {
        Ok(v) => v.to_string(),
        Err(e) => format!("error: {e}"),
    };

    // r0 via both routes.
    let r0_char_ms: &[usize] = match scope {
        Scope::Fast => &[4, 5],
        _ => &[4, 5, 6, 7],
    };
    for &m in r0_char_ms {
        push(
            &format!("r0({m}) charpoly"),
            reference().r0[&m].to_string(),
            show(r0_from_charpoly(m, budget, cache.as_mut())),
            &mut checks,
        );
    }
    let r0_enum_ms: &[usize] = match scope {
        Scope::Fast => &[4, 5],
        Scope::Full => &[4, 5, 6],
        Scope::Extended => &[4, 5, 6, 7],
    };
    for &m in r0_enum_ms {
        push(
            &format!("r0({m}) enumerate"),
            reference().r0[&m].to_string(),
            show(r0_enumerate(m, budget)),
            &mut checks,
        );
    }

    // Chamber-count theorem on sampled generic configurations.
    let sample_pairs: &[(usize, usize)] = match scope {
        Scope::Fast => &[(4, 1), (4, 2), (5, 2)],
        _ => &[(4, 1), (4, 2), (5, 1), (5, 2), (5, 3), (6, 2), (6, 3)],
    };
    for (i, &(m, n)) in sample_pairs.iter().enumerate() {
        let cfg = random_generic_config(m, n, seed.wrapping_add(i as u64));
        let want = count_admissible(m, n)?.0.to_string();
        let got = match admissible_rankings(&cfg, budget) {
            Ok(p) => p.len().to_string(),
            Err(e) => format!("error: {e}"),
        };
        push(&format!("rankings m={m} n={n}"), want, got, &mut checks);
    }
    // n >= m-1: all m! rankings.
    let cfg = random_generic_config(4, 3, seed.wrapping_add(99));
    push(
        "rankings m=4 n=3",
        "24".into(),
        match admissible_rankings(&cfg, budget) {
            Ok(p) => p.len().to_string(),
            Err(e) => format!("error: {e}"),
        },
        &mut checks,
    );

    // Poset isomorphism.
    let poset_pairs: &[(usize, usize)] = match scope {
        Scope::Fast => &[(4, 1), (4, 2)],
        _ => &[(4, 1), (4, 2), (5, 2), (5, 3)],
    };
    for (i, &(m, n)) in poset_pairs.iter().enumerate() {
        let cfg = random_generic_config(m, n, seed.wrapping_add(200 + i as u64));
        push(
            &format!("poset m={m} n={n}"),
            "ok".into(),
            match verify_poset_isomorphism(&cfg) {
                Ok(()) => "ok".into(),
                Err(e) => format!("error: {e}"),
            },
            &mut checks,
        );
    }

    // q by both routes.
    let q_char_ms: &[usize] = match scope {
        Scope::Fast => &[3, 4, 5],
        Scope::Full => &[3, 4, 5, 6],
        Scope::Extended => &[3, 4, 5, 6, 7, 8],
    };
    for &m in q_char_ms {
        push(
            &format!("q({m}) charpoly"),
            reference().q[&m].to_string(),
            show(q_from_charpoly(m, budget, cache.as_mut())),
            &mut checks,
        );
    }
    let q_enum_ms: &[usize] = match scope {
        Scope::Fast => &[3, 4],
        _ => &[3, 4, 5],
    };
    for &m in q_enum_ms {
        let got = match q_enumerate(m, m <= 4, budget) {
            Ok(e) => e.q.to_string(),
            Err(e) => format!("error: {e}"),
        };
        push(
            &format!("q({m}) enumerate"),
            reference().q[&m].to_string(),
            got,
            &mut checks,
        );
    }

    // q_IE upper bound (exact for m <= 6).
    let qie_ms: &[usize] = match scope {
        Scope::Fast => &[3, 4, 5],
        _ => &[3, 4, 5, 6],
    };
    for &m in qie_ms {
        push(
            &format!("q_ie({m})"),
            reference().q_ie[&m].to_string(),
            show(q_ie_upper(m, budget, cache.as_mut())),
            &mut checks,
        );
    }

    // Slice pipeline equals the chamber pipeline.
    let slice_specs: &[(usize, usize)] = match scope {
        Scope::Fast => &[(4, 3)],
        _ => &[(4, 10), (5, 10)],
    };
    for &(m, reps) in slice_specs {
        let mut ok = 0usize;
        for i in 0..reps {
            let cfg = random_generic_config(m, m - 2, seed.wrapping_add(300 + i as u64));
            let via_slice = braid_slice_pattern(&v_map(&cfg)?, m, budget)?;
            if via_slice == admissible_rankings(&cfg, budget)? {
                ok += 1;
            }
        }
        push(
            &format!("slice pattern m={m}"),
            format!("{reps}/{reps}"),
            format!("{ok}/{reps}"),
            &mut checks,
        );
    }

    // Bounds table against the printed reference.
    let rows = bounds_table(10)?;
    let table_ok = rows.iter().zip(&reference().table1).all(|(row, want)| {
        row.m == want.m
            && row.r0 == want.r0
            && row.a == want.a
            && row.ell_display == want.ell
            && row.u_display == want.u
            && row.f == want.f
    });
    push(
        "bounds table",
        "matches".into(),
        if table_ok { "matches".into() } else { "differs".into() },
        &mut checks,
    );
    push(
        "asymptotic window m=1000",
        "inside".into(),
        if u_asymptotic_within_5pct(1000)? && ell_asymptotic_within_5pct(1000)? {
            "inside".into()
        } else {
            "outside".into()
        },
        &mut checks,
    );

    // Embedded polynomial consistency.
    let v9 = -reference().chi_mid_9.eval(&Int::from(-1));
    push(
        "embedded chi(mid_9)",
        (reference().r0[&9].clone() * factorial(9)).to_string(),
        v9.to_string(),
        &mut checks,
    );
    let v10 = reference().chi_mid_10.eval(&Int::from(-1));
    push(
        "embedded chi(mid_10)",
        (reference().r0[&10].clone() * factorial(10)).to_string(),
        v10.to_string(),
        &mut checks,
    );

    if matches!(scope, Scope::Extended) {
        push(
            "r0(8) charpoly",
            reference().r0[&8].to_string(),
            show(r0_from_charpoly(8, budget, cache.as_mut())),
            &mut checks,
        );
    }
    Ok(checks)
}

fn real_main() -> Result<ExitCode, Error> {
    let cli = Cli::parse();
    if let Some(t) = cli.threads {
        rayon::ThreadPoolBuilder::new()
            .num_threads(t)
            .build_global()
            .map_err(|e| Error::Parse(format!("thread pool: {e}")))?;
    }
    let budget = if cli.extended {
        RunBudget::unlimited()
    } else {
        RunBudget::default()
    };
    let mut cache: Option<CountsCache> = match &cli.counts_cache {
        Some(p) => Some(CountsCache::open(p)?),
        None => None,
    };

    match &cli.cmd {
        Cmd::Verify { scope } => {
            let checks = run_verify(*scope, cli.seed, &budget, &mut cache)?;
            let all_pass = checks.iter().all(Check::passed);
            let out = json!({
                "schema": "1",
                "scope": match scope {
                    Scope::Fast => "fast",
                    Scope::Full => "full",
                    Scope::Extended => "extended",
                },
                "checks": checks.iter().map(|c| json!({
                    "name": c.name,
                    "passed": c.passed(),
                    "expected": c.expected,
                    "actual": c.actual,
                })).collect::<Vec<_>>(),
                "passed": all_pass,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(if all_pass { ExitCode::SUCCESS } else { ExitCode::from(1) })
        }
        Cmd::Charpoly { family, m } => {
            let r = charpoly(*family, *m, &budget, cache.as_mut())?;
            let out = json!({
                "schema": "1",
                "family": family.to_string(),
                "m": m,
                "coefficients": r.poly.to_decimal_strings(),
                "primes_used": r.primes_used,
                "verified": r.consistency_verified,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Chambers { family, m, config } => {
            let a = match (family, m, config) {
                (Some(f), Some(m), None) => family_arrangement(*f, *m)?,
                (None, None, Some(path)) => {
                    let cfg = load_config(path)?;
                    check_generic(&cfg).map_err(|v| Error::NotGeneric(v.to_string()))?;
                    unfolding_arrangement(&cfg)?
                }
                _ => {
                    return Err(Error::Parse(
                        "pass either --family with --m, or --config".into(),
                    ))
                }
            };
            let chambers = enumerate_chambers(&a, None, &budget)?;
            let mut bounded = 0usize;
            let mut rendered = Vec::with_capacity(chambers.len());
            for c in &chambers {
                let b = is_bounded(c, &a, None)?;
                bounded += b as usize;
                let cj = c.to_json();
                rendered.push(json!({
                    "signs": cj.signs,
                    "witness": cj.witness,
                    "bounded": b,
                }));
            }
            let out = json!({
                "schema": "1",
                "family": a.family.to_string(),
                "dim": a.dim,
                "hyperplanes": a.len(),
                "chambers": chambers.len(),
                "bounded": bounded,
                "cells": rendered,
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Pattern { config } => {
            let cfg = load_config(config)?;
            let pattern = if cfg.n == 1 {
                pattern_1d(&cfg)?
            } else {
                admissible_rankings(&cfg, &budget)?
            };
            let out = json!({
                "schema": "1",
                "m": cfg.m,
                "n": cfg.n,
                "size": pattern.len(),
                "rankings": pattern.to_strings(),
            });
            println!("{}", serde_json::to_string_pretty(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::R0 { m, method } => {
            let (value, name) = match method {
                Method::Enumerate => (r0_enumerate(*m, &budget)?, "enumerate"),
                Method::Charpoly => {
                    (r0_from_charpoly(*m, &budget, cache.as_mut())?, "charpoly")
                }
            };
            let out = json!({
                "schema": "1",
                "m": m,
                "r0": value.to_string(),
                "method": name,
            });
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Q { m, method } => {
            let out = match method {
                Method::Charpoly => {
                    let v = q_from_charpoly(*m, &budget, cache.as_mut())?;
                    json!({"schema": "1", "m": m, "q": v.to_string(),
                           "method": "charpoly"})
                }
                Method::Enumerate => {
                    let e = q_enumerate(*m, *m <= 4, &budget)?;
                    json!({"schema": "1", "m": m, "q": e.q.to_string(),
                           "method": "enumerate",
                           "chambers": e.chambers,
                           "d_type": e.d_type,
                           "neg_d_type": e.neg_d_type,
                           "v2_type": e.v2_type,
                           "distinct_patterns": e.distinct_patterns})
                }
            };
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::QieUpper { m } => {
            let v = q_ie_upper(*m, &budget, cache.as_mut())?;
            let out = json!({
                "schema": "1",
                "m": m,
                "qie_upper": v.to_string(),
                "exact_for": "m <= 6",
            });
            println!("{}", serde_json::to_string(&out)?);
            Ok(ExitCode::SUCCESS)
        }
        Cmd::Bounds { max_m, format } => {
            let rows = bounds_table(*max_m)?;
            match format {
                Format::Json => {
                    let out = json!({
                        "schema": "1",
                        "rows": rows.iter().map(|r| json!({
                            "m": r.m,
                            "r0": r.r0,
                            "a": r.a,
                            "ell": r.ell_display,
                            "u": r.u_display,
                            "f": r.f,
                        })).collect::<Vec<_>>(),
                    });
                    println!("{}", serde_json::to_string_pretty(&out)?);
                }
                Format::Csv => {
                    println!("m,r0,a,ell,u,f");
                    for r in &rows {
                        println!(
                            "{},{},{},{},{},{}",
                            r.m, r.r0, r.a, r.ell_display, r.u_display, r.f
                        );
                    }
                }
            }
            Ok(ExitCode::SUCCESS)
        }
        Cmd::PosetCheck { config, m, n } => {
            let cfg = match (config, m, n) {
                (Some(path), None, None) => load_config(path)?,
                (None, Some(m), Some(n)) => random_generic_config(*m, *n, cli.seed),
                _ => {
                    return Err(Error::Parse(
                        "pass either --config, or --m with --n".into(),
                    ))
                }
            };
            match verify_poset_isomorphism(&cfg) {
                Ok(()) => {
                    println!(
                        "{}",
                        json!({"schema": "1", "m": cfg.m, "n": cfg.n, "passed": true})
                    );
                    Ok(ExitCode::SUCCESS)
                }
                Err(Error::ConsistencyFailure(msg)) => {
                    println!(
                        "{}",
                        json!({"schema": "1", "m": cfg.m, "n": cfg.n,
                               "passed": false, "detail": msg})
                    );
                    Ok(ExitCode::from(1))
                }
                Err(e) => Err(e),
            }
        }
    }
}

fn main() -> ExitCode {
    match real_main() {
        Ok(code) => code,
        Err(e) => {
            eprintln!("error: {e}");
            match e {
                Error::BudgetExceeded(_) => ExitCode::from(3),
                Error::Parse(_) | Error::RangeViolation(_) => ExitCode::from(2),
                _ => ExitCode::from(1),
            }
        }
    }
}
