//! Acceptance run: every criterion at its stated range, one line each.
//!
//! Exits nonzero if any criterion fails or exceeds its time budget. The
//! coefficientwise `t`-graded criterion is reported as a deviation together
//! with the parts of it that do hold.

use std::collections::BTreeMap;
use std::process::ExitCode;
use std::time::{Duration, Instant};

use shpf_core::counting::okrew;
use shpf_core::symfunc::{big_p, expand_odd_v, naive_v_expansion, sh_symfunc, t_graded, v_combination};
use shpf_core::verify::{find_claim, SuiteConfig, PAIRS_PER_DEGREE};
use shpf_core::{Partition, Rational};

type Outcome = Result<String, String>;

enum Status {
    Pass,
    Fail,
    Deviation,
}

fn claim(name: &str, ns: impl IntoIterator<Item = usize>) -> Result<usize, String> {
    let cfg = SuiteConfig { max_n: usize::MAX, brute_bound: usize::MAX, seed: SuiteConfig::default().seed };
    let c = find_claim(name).ok_or_else(|| format!("unknown claim {name}"))?;
    let mut runs = 0;
    for n in ns {
        let check = c.check(n, &cfg);
        check.outcome.map_err(|why| format!("{name} [n={n}]: {why}"))?;
        runs += 1;
    }
    Ok(runs)
}

fn p(parts: &[usize]) -> Partition {
    Partition::new(parts.to_vec()).unwrap()
}

fn int(k: i64) -> Rational {
    Rational::from_integer(k.into())
}

fn closed_form_expansions() -> Outcome {
    claim("odd V-coefficients of SH_n are OKrew", 1..=9)?;
    type Golden<'a> = (usize, &'a [(&'a [usize], i64)]);
    let golden: [Golden; 4] = [
        (1, &[(&[1], 2)]),
        (2, &[(&[1, 1], 6)]),
        (3, &[(&[3], 2), (&[1, 1, 1], 20)]),
        (4, &[(&[3, 1], 20), (&[1, 1, 1, 1], 70)]),
    ];
    for (n, terms) in golden {
        let want: BTreeMap<Partition, Rational> = terms.iter().map(|(l, c)| (p(l), int(*c))).collect();
        let sh = sh_symfunc(n).map_err(|e| e.to_string())?;
        if expand_odd_v(&sh).map_err(|e| e.to_string())? != want {
            return Err(format!("SH_{n} golden expansion"));
        }
        let naive = v_combination(n, &naive_v_expansion(n));
        if expand_odd_v(&naive).map_err(|e| e.to_string())? != want {
            return Err(format!("SH_{n} through the naive V-expansion"));
        }
        for (l, c) in &want {
            if Rational::from_integer(okrew(l).map_err(|e| e.to_string())?.into()) != *c {
                return Err(format!("OKrew{l}"));
            }
        }
    }
    Ok("n <= 9, golden SH_1..SH_4 by two routes".into())
}

fn combinatorial_v_expansion() -> Outcome {
    claim("sum of V over sorted odd is SH_n", 1..=8)?;
    Ok("n <= 8".into())
}

fn garage_r_expansion() -> Outcome {
    claim("sum of R over garages is SH_n", 1..=8)?;
    claim("garage fibers sum to R_shape", 1..=7)?;
    Ok("sum over garages n <= 8, per-garage fibers n <= 7".into())
}

fn counting() -> Outcome {
    claim("|Pf(n)| = (n+1)^(n-1)", 1..=6)?;
    claim("sorted Pf counted by Catalan", 1..=10)?;
    claim("sorted naive counted by Schroeder", 1..=8)?;
    claim("sorted odd counted by Schroeder", 1..=8)?;
    claim("Kreweras numbers sum to Catalan", 1..=10)?;
    Ok("Pf n <= 6, sorted Pf n <= 10, Schroeder n <= 8, Kreweras n <= 10".into())
}

fn bijections() -> Outcome {
    claim("Schroeder path bijection", 1..=7)?;
    claim("naive/odd bijection preserves area", 1..=7)?;
    Ok("n <= 7".into())
}

fn identity_suite() -> Outcome {
    claim("P-relation", 1..=6)?;
    claim("P_k forms agree", 1..=10)?;
    let degrees = claim("shiftification is self-adjoint", 1..=6)?;
    let pairs = degrees * PAIRS_PER_DEGREE;
    if pairs < 200 {
        return Err(format!("only {pairs} random pairs"));
    }
    claim("h_lambda * 2P_n = sh(h_lambda)", 1..=7)?;
    Ok(format!("P-relation k <= 6, P forms k <= 10, {pairs} random pairs, Kronecker n <= 7"))
}

fn character_suite() -> Outcome {
    claim("Frobenius of naive character is SH_n", 1..=7)?;
    claim("class traces sum to the naive character", 1..=5)?;
    claim("class characters decompose by shape", 1..=5)?;
    Ok("Frobenius n <= 7, trace oracle and class decompositions n <= 5".into())
}

fn clifford_suite() -> Outcome {
    claim("trace of pi_lambda is 2^((n+l)/2)", 1..=8)?;
    claim("spin character of C_n is 2^(n/2+1) P_n", 1..=8)?;
    claim("spin character of Pf x C_n is 2^(n/2) SH_n", 1..=6)?;
    Ok("traces n <= 8, ch'(C_n) n <= 8, Pf x C_n n <= 6".into())
}

fn odd_kreweras_ratio() -> Outcome {
    claim("odd Kreweras ratio", 1..=12)?;
    Ok("every odd partition of n <= 12".into())
}

/// Coefficientwise equality holds only for `n <= 3`; this returns the
/// evidence as the deviation detail, or an error if any part of it breaks.
fn t_graded_suite() -> Outcome {
    claim("t-graded sums agree at t = 1 and against h_n", 1..=7)?;
    let mut equal_up_to = 0;
    for n in 1..=7 {
        let (naive, odd) = t_graded(n);
        if naive == odd {
            equal_up_to = n;
        } else {
            break;
        }
    }
    if equal_up_to != 3 {
        return Err(format!("coefficientwise agreement stops at n = {equal_up_to}, expected 3"));
    }
    let (naive, odd) = t_graded(4);
    let top = naive.t_coefficient(6);
    if top != big_p(4).scale(&int(2)) {
        return Err("top coefficient of SH_4(1,t) is not 2P_4".into());
    }
    let expansion = expand_odd_v(&top).map_err(|e| e.to_string())?;
    let witness = expansion.get(&p(&[1, 1, 1, 1])).cloned().unwrap_or_default();
    if witness >= int(0) {
        return Err("2P_4 has no negative V-coefficient".into());
    }
    let odd_top = expand_odd_v(&odd.t_coefficient(6)).map_err(|e| e.to_string())?;
    let odd_top: Vec<String> = odd_top.iter().map(|(l, c)| format!("{c}·V{l}")).collect();
    Ok(format!(
        "equal for n <= 3 only; t=1 and h_n pairing agree for n <= 7; \
         t^6 coefficient of SH_4(1,t) is 2P_4 with V(1,1,1,1)-coefficient {witness}, odd sum gives {}",
        odd_top.join(" + ")
    ))
}

fn dimension_audit() -> Outcome {
    claim("dimension audit", 1..=8)?;
    Ok("n <= 8".into())
}

struct Criterion {
    number: usize,
    name: &'static str,
    budget: Duration,
    run: fn() -> Outcome,
    expect_deviation: bool,
}

fn main() -> ExitCode {
    let secs = Duration::from_secs;
    let criteria = [
        Criterion {
            number: 1,
            name: "closed-form odd V-expansion",
            budget: secs(30),
            run: closed_form_expansions,
            expect_deviation: false,
        },
        Criterion {
            number: 2,
            name: "combinatorial V-expansion",
            budget: secs(60),
            run: combinatorial_v_expansion,
            expect_deviation: false,
        },
        Criterion {
            number: 3,
            name: "garage R-expansion",
            budget: secs(120),
            run: garage_r_expansion,
            expect_deviation: false,
        },
        Criterion { number: 4, name: "counting", budget: secs(120), run: counting, expect_deviation: false },
        Criterion { number: 5, name: "bijections", budget: secs(120), run: bijections, expect_deviation: false },
        Criterion {
            number: 6,
            name: "identity suite",
            budget: secs(120),
            run: identity_suite,
            expect_deviation: false,
        },
        Criterion {
            number: 7,
            name: "character suite",
            budget: secs(120),
            run: character_suite,
            expect_deviation: false,
        },
        Criterion {
            number: 8,
            name: "Clifford and spin suite",
            budget: secs(60),
            run: clifford_suite,
            expect_deviation: false,
        },
        Criterion {
            number: 9,
            name: "odd Kreweras ratio",
            budget: secs(5),
            run: odd_kreweras_ratio,
            expect_deviation: false,
        },
        Criterion { number: 10, name: "t-graded sums", budget: secs(120), run: t_graded_suite, expect_deviation: true },
        Criterion {
            number: 11,
            name: "dimension audit",
            budget: secs(60),
            run: dimension_audit,
            expect_deviation: false,
        },
    ];
    let mut failures = 0;
    let mut deviations = 0;
    for c in &criteria {
        let start = Instant::now();
        let outcome = (c.run)();
        let elapsed = start.elapsed();
        let (status, detail) = match outcome {
            Ok(_) if elapsed > c.budget => (Status::Fail, format!("took {elapsed:.1?}, budget {:?}", c.budget)),
            Ok(detail) if c.expect_deviation => (Status::Deviation, detail),
            Ok(detail) => (Status::Pass, detail),
            Err(why) => (Status::Fail, why),
        };
        let label = match status {
            Status::Pass => "PASS",
            Status::Fail => {
                failures += 1;
                "FAIL"
            }
            Status::Deviation => {
                deviations += 1;
                "DEVIATION"
            }
        };
        println!("{label:<9} criterion {:>2} {} ({elapsed:.2?}): {detail}", c.number, c.name);
    }
    let passed = criteria.len() - failures - deviations;
    println!("acceptance: {passed} passed, {failures} failed, {deviations} deviation(s)");
    if failures == 0 {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}
