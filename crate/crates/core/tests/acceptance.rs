//! Acceptance suite: one pass/fail line per criterion.
//!
//! Run with `cargo test -p ftau-core --test acceptance -- --nocapture`.

mod common;

use std::time::{Duration, Instant};

use common::*;
use ftau_core::test_ideal::find_test_element;
use ftau_core::{
    bracket_power, fedder_ci_check, frobenius_root, is_purely_f_regular,
    is_strongly_f_regular_quotient, monomial_test_ideal_oracle, restriction_report, test_ideal,
    test_ideal_along, verify_claim2, Error, Exponent, FormalCombination, FrobeniusLevel, Ideal,
    LinkageProblem, RingRef,
};
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

struct Verdict {
    id: u32,
    name: &'static str,
    pass: bool,
    detail: String,
    log: Vec<String>,
    elapsed: Duration,
}

fn verdict(
    id: u32,
    name: &'static str,
    budget: Duration,
    f: impl FnOnce(&mut Vec<String>) -> (bool, String),
) -> Verdict {
    let start = Instant::now();
    let mut log = Vec::new();
    let (ok, mut detail) = f(&mut log);
    let elapsed = start.elapsed();
    let in_time = elapsed <= budget;
    if !in_time {
        detail.push_str(&format!("; over the {}s budget", budget.as_secs()));
    }
    Verdict {
        id,
        name,
        pass: ok && in_time,
        detail,
        log,
        elapsed,
    }
}

fn lvl(r: &RingRef, e: u32) -> FrobeniusLevel {
    FrobeniusLevel::new(r, e).unwrap()
}

fn criterion_1(log: &mut Vec<String>) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC1);
    let mut bad = 0;
    for k in 0..500 {
        let p = [2u64, 3, 5][k % 3];
        let r = ring(p, rng.gen_range(1..=3));
        let j = random_ideal(&r, 3, 6, &mut rng);
        let l = lvl(&r, 1);
        let down = frobenius_root(&bracket_power(&j, l).unwrap(), l)
            .unwrap()
            .equals(&j)
            .unwrap();
        let up = bracket_power(&frobenius_root(&j, l).unwrap(), l)
            .unwrap()
            .contains(&j)
            .unwrap();
        if !(down && up) {
            bad += 1;
            log.push(format!("p={p} J={j} down={down} up={up}"));
        }
    }
    (bad == 0, format!("500 ideals, {bad} failures"))
}

fn criterion_2(log: &mut Vec<String>) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC2);
    let mut bad = 0;
    for k in 0..100 {
        let p = [2u64, 3, 5][k % 3];
        let n = rng.gen_range(1..=3);
        let c = rng.gen_range(1..=2.min(n));
        let r = ring(p, n);
        let fs = random_regular_sequence(&r, c, 3, &mut rng);
        if !fedder_ci_check(&fs, 1).unwrap() {
            bad += 1;
            log.push(format!("p={p} fs={fs:?}"));
        }
    }
    (bad == 0, format!("100 regular sequences, {bad} failures"))
}

fn criterion_3(log: &mut Vec<String>) -> (bool, String) {
    let mut matched = 0;
    let mut mismatches = Vec::new();
    let mut slow = false;
    for p in [7u64, 11, 13] {
        let start = Instant::now();
        let r = ring(p, 2);
        let i = Ideal::parse(&r, &["x^3 + y^5"]).unwrap();
        let te = find_test_element(&i).unwrap();
        let got = test_ideal_along(&i, &FormalCombination::trivial(&r), &te, 4);
        let want = Ideal::parse(&r, &["x^2", "x*y", "y^3"]).unwrap();
        let ok = matches!(&got, Ok(j) if j.equals(&want).unwrap());
        slow |= start.elapsed() > Duration::from_secs(300);
        log.push(format!(
            "p={p} gamma={} result={} ({} ms)",
            te.gamma,
            got.as_ref()
                .map(|j| j.to_string())
                .unwrap_or_else(|e| e.to_string()),
            start.elapsed().as_millis()
        ));
        if ok {
            matched += 1;
        } else {
            mismatches.push(p);
        }
    }
    (
        matched >= 2 && !slow,
        format!("{matched}/3 primes give (x^2, x*y, y^3); mismatches {mismatches:?}"),
    )
}

fn criterion_4(log: &mut Vec<String>) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC4);
    let (mut disagree, mut inconclusive, mut both_true) = (0, 0, 0);
    let mut k = 0;
    while k < 30 {
        let p = [3u64, 5][k % 2];
        let n = rng.gen_range(2..=3);
        let c = rng.gen_range(1..n);
        let r = ring(p, n);
        let fs = random_graded_ci(&r, c, 3, &mut rng);
        let i = Ideal::new(&r, fs.clone()).unwrap();
        let te = match find_test_element(&i) {
            Ok(te) => te,
            Err(Error::NoTestElementFound) => {
                // non-reduced draws have no test element; redraw
                log.push(format!("redraw: no test element for {i}"));
                continue;
            }
            Err(e) => panic!("{e}"),
        };
        k += 1;
        let pfr = is_purely_f_regular(&i, &FormalCombination::trivial(&r), &te, 3);
        let sfr = is_strongly_f_regular_quotient(&i, &fs, &te, 3).unwrap();
        let pfr_s = match &pfr {
            Ok(b) => b.to_string(),
            Err(e) => e.kind().to_string(),
        };
        let line = format!(
            "p={p} I={i} gamma={} pfr={pfr_s} sfr={}",
            te.gamma, sfr.holds
        );
        match pfr {
            Ok(b) if b == sfr.holds => {
                if b {
                    both_true += 1;
                }
            }
            Ok(_) => {
                disagree += 1;
                log.push(format!("DISAGREE {line}"));
                continue;
            }
            Err(_) if sfr.holds => {
                disagree += 1;
                log.push(format!("DISAGREE {line}"));
                continue;
            }
            Err(_) => {
                inconclusive += 1;
                log.push(format!("inconclusive {line}"));
                continue;
            }
        }
        log.push(line);
    }
    (
        disagree == 0,
        format!("30 instances: {both_true} both true, {inconclusive} inconclusive, {disagree} disagreements"),
    )
}

const GORENSTEIN_H3: [&str; 5] = ["x*y", "x*z", "y*z", "x^3 - y^3", "y^3 - z^3"];

fn criterion_5(log: &mut Vec<String>) -> (bool, String) {
    let mut bad = 0;
    let mut runs = 0;
    for p in [2u64, 5, 7] {
        let r = ring(p, 3);
        let i = Ideal::parse(&r, &GORENSTEIN_H3).unwrap();
        for seed in 1..=3u64 {
            let lp = LinkageProblem::generic(&i, 3, seed).unwrap();
            for e in 1..=2 {
                runs += 1;
                let rep = verify_claim2(&lp, e).unwrap();
                log.push(format!(
                    "p={p} seed={seed} e={e} f={} holds={} equality={} method={:?}",
                    lp.link, rep.holds, rep.equality, rep.method
                ));
                if !rep.holds {
                    bad += 1;
                }
            }
        }
    }
    (bad == 0, format!("{runs} runs, {bad} failures"))
}

struct Battery {
    name: &'static str,
    vars: usize,
    gens: &'static [&'static str],
    a: &'static [&'static str],
}

const BATTERY: [Battery; 10] = [
    Battery {
        name: "cusp x^3+y^5",
        vars: 2,
        gens: &["x^3 + y^5"],
        a: &["x", "y"],
    },
    Battery {
        name: "node",
        vars: 2,
        gens: &["y^2 - x^2 - x^3"],
        a: &["x", "y"],
    },
    Battery {
        name: "A1 cone",
        vars: 3,
        gens: &["x*y - z^2"],
        a: &["x", "y", "z"],
    },
    Battery {
        name: "cubic cone",
        vars: 3,
        gens: &["x^3 + y^3 + z^3"],
        a: &["x", "y", "z"],
    },
    Battery {
        name: "E8",
        vars: 3,
        gens: &["x^2 + y^3 + z^5"],
        a: &["x", "y", "z"],
    },
    Battery {
        name: "Gorenstein height 3",
        vars: 3,
        gens: &GORENSTEIN_H3,
        a: &["x + 1", "y"],
    },
    Battery {
        name: "space cusp",
        vars: 3,
        gens: &["z - x^2", "y^2 - x^3"],
        a: &["x", "y", "z"],
    },
    Battery {
        name: "monomial curve",
        vars: 3,
        gens: &["z^2 - x", "x^2 - y^3"],
        a: &["x", "y", "z"],
    },
    Battery {
        name: "nodal plane section",
        vars: 3,
        gens: &["x*y - z^3", "x + y + z"],
        a: &["x", "y", "z"],
    },
    Battery {
        name: "cusp in a hyperplane",
        vars: 3,
        gens: &["x^2 + y^3", "z"],
        a: &["x", "y"],
    },
];

fn criterion_6(log: &mut Vec<String>) -> (bool, String) {
    let (mut runs, mut bad, mut equal) = (0, 0, 0);
    for b in &BATTERY {
        for p in [5u64, 7] {
            let r = ring(p, b.vars);
            let i = Ideal::parse(&r, b.gens).unwrap();
            let a = Ideal::parse(&r, b.a).unwrap();
            let combos = [
                ("trivial", FormalCombination::trivial(&r)),
                (
                    "a^1/2",
                    FormalCombination::single(a.clone(), Exponent::new(1, 2)).unwrap(),
                ),
                (
                    "a^1",
                    FormalCombination::single(a.clone(), Exponent::new(1, 1)).unwrap(),
                ),
            ];
            for (label, at) in combos {
                runs += 1;
                let start = Instant::now();
                match restriction_report(&i, &at, 1, 4) {
                    Ok(rep) => {
                        equal += rep.equality_holds as usize;
                        log.push(format!(
                            "{} p={p} {label}: containment={} equality={} nzd_link={} lhs={:?} rhs={:?} ({} ms)",
                            b.name,
                            rep.containment_holds,
                            rep.equality_holds,
                            rep.diagnostics.link_is_nonzerodivisor,
                            rep.lhs,
                            rep.rhs,
                            start.elapsed().as_millis()
                        ));
                    }
                    Err(e) => {
                        bad += 1;
                        log.push(format!("FAIL {} p={p} {label}: {e}", b.name));
                    }
                }
            }
        }
    }
    (
        bad == 0,
        format!(
            "{runs} runs over {} ideals, {bad} failures, equality in {equal}",
            BATTERY.len()
        ),
    )
}

fn criterion_7(log: &mut Vec<String>) -> (bool, String) {
    let mut rng = ChaCha8Rng::seed_from_u64(0xC7);
    let ts = [
        Exponent::new(1, 2),
        Exponent::new(1, 1),
        Exponent::new(3, 2),
        Exponent::new(2, 1),
    ];
    let mut bad = 0;
    for k in 0..50 {
        let p = [2u64, 3, 5][k % 3];
        let r = ring(p, rng.gen_range(1..=3));
        let nf = rng.gen_range(1..=2);
        let factors = (0..nf)
            .map(|_| {
                (
                    random_monomial_ideal(&r, 3, 4, &mut rng),
                    ts[rng.gen_range(0..4)],
                )
            })
            .collect();
        let at = FormalCombination::new(&r, factors).unwrap();
        let want = monomial_test_ideal_oracle(&at, 64).unwrap();
        let got = test_ideal(&at, 8);
        if !matches!(&got, Ok(j) if j.equals(&want).unwrap()) {
            bad += 1;
            let shown: Vec<String> = at
                .factors()
                .iter()
                .map(|(a, t)| format!("{a}^{t}"))
                .collect();
            log.push(format!(
                "p={p} {} oracle={want} got={got:?}",
                shown.join(" ")
            ));
        }
    }
    (bad == 0, format!("50 combinations, {bad} disagreements"))
}

#[test]
fn acceptance() {
    let secs = Duration::from_secs;
    let results: Vec<Verdict> = std::thread::scope(|s| {
        let hs = vec![
            s.spawn(|| verdict(1, "Frobenius round trips", secs(60), criterion_1)),
            s.spawn(|| verdict(2, "Fedder CI identity", secs(120), criterion_2)),
            s.spawn(|| verdict(3, "cusp adjoint ideal", secs(900), criterion_3)),
            s.spawn(|| verdict(4, "predicate equivalence", secs(600), criterion_4)),
            s.spawn(|| {
                verdict(
                    5,
                    "linkage colon containment, height-3 ideal",
                    secs(600),
                    criterion_5,
                )
            }),
            s.spawn(|| verdict(6, "restriction containment", secs(1800), criterion_6)),
            s.spawn(|| verdict(7, "monomial oracle agreement", secs(300), criterion_7)),
        ];
        hs.into_iter().map(|h| h.join().unwrap()).collect()
    });
    for v in &results {
        for l in &v.log {
            println!("  [{}] {l}", v.id);
        }
    }
    for v in &results {
        println!(
            "criterion {}: {} | {} | {} ({:.1}s)",
            v.id,
            if v.pass { "PASS" } else { "FAIL" },
            v.name,
            v.detail,
            v.elapsed.as_secs_f64()
        );
    }
    println!("criterion 8: SKIP | Veronese cone stretch goal | not attempted");
    let failed: Vec<u32> = results.iter().filter(|v| !v.pass).map(|v| v.id).collect();
    assert!(failed.is_empty(), "failed criteria: {failed:?}");
}
