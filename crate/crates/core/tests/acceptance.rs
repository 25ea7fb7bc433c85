//! Acceptance run: one PASS/FAIL line per criterion, nonzero exit on failure.

use std::process::ExitCode;
use std::time::Instant;

use num_traits::Signed;
use schurq::identity::{check_lemma, lhs_l, verify_main_identity, LemmaId};
use schurq::partition::{partitions_bounded, partitions_of};
use schurq::schur::{jacobi_trudi_expand, monomial_oracle_expand};
use schurq::specialization::{
    central_values, coefficient_bridge_with, power_m_counterexample, qlc_defect, shuffle_relations_check, w,
};
use schurq::suite::{run, Command, ExpandTarget, OutputFormat, QlcSource, RunConfig};
use schurq::tableaux::SsytCounter;
use schurq::transforms::{
    alpha_factorization_check_with, default_corpus, factorization_applies, is_log_convex, preservation_suite,
    sign_change_index, FPolys, NumberSequence, TriangularArray,
};
use schurq::{EProduct, SchurExpansion};

type Outcome = Result<String, Vec<String>>;

fn finish(failures: Vec<String>, summary: String) -> Outcome {
    if failures.is_empty() {
        Ok(summary)
    } else {
        Err(failures)
    }
}

fn main_identity() -> Outcome {
    let mut failures = Vec::new();
    for r in 1..=12 {
        let report = verify_main_identity(r);
        if !report.passed {
            failures.push(format!("r={r} discrepancy: {}", report.discrepancy));
        }
    }
    let reference = [
        (3, "s[1,1,1,1] + s[2,2] + s[4]"),
        (4, "s[1,1,1,1,1,1] + s[2,2,1,1] + s[4,1,1] + s[3,3]"),
        (
            5,
            "s[4,2,2] + s[4,4] + s[1,1,1,1,1,1,1,1] + s[2,2,1,1,1,1] + s[2,2,2,2] + s[4,1,1,1,1] + s[3,3,1,1]",
        ),
    ];
    for (r, text) in reference {
        let expected: SchurExpansion = text.parse().expect("reference expansion parses");
        let got = lhs_l(r);
        if got != expected {
            failures.push(format!("L({r}) = {got}, expected {expected}"));
        }
    }
    finish(failures, "L(r) = R(r) for r = 1..12; L(3), L(4), L(5) match the reference sums".into())
}

fn lemma_chain() -> Outcome {
    let mut failures = Vec::new();
    let mut count = 0;
    for lemma in LemmaId::ALL {
        for t in 0..=4 {
            for report in check_lemma(lemma, t) {
                count += 1;
                if !report.passed {
                    failures.push(report.to_string());
                }
            }
        }
    }
    finish(failures, format!("{count} lemma checks for t = 0..4, including every (k,i,j) of 3.3"))
}

fn oracle_equivalence() -> Outcome {
    let mut failures = Vec::new();
    let mut products = 0;
    for d in 1..=8 {
        for mu in partitions_of(d) {
            let p = EProduct::new(mu.parts().iter().map(|&x| i64::from(x)));
            products += 1;
            match monomial_oracle_expand(&p, d) {
                Ok(oracle) if oracle == p.expand() => {}
                Ok(oracle) => failures.push(format!("{p}: Pieri {} vs oracle {oracle}", p.expand())),
                Err(e) => failures.push(format!("{p}: oracle error {e}")),
            }
        }
    }
    let mut shapes = 0;
    for d in 0..=8 {
        for lambda in partitions_bounded(d, 4) {
            shapes += 1;
            let jt = jacobi_trudi_expand(&lambda);
            if jt != SchurExpansion::term(lambda.clone()) {
                failures.push(format!("Jacobi-Trudi at {lambda} gives {jt}"));
            }
        }
    }
    finish(
        failures,
        format!("{products} e-products of degree <= 8 agree with the monomial oracle; {shapes} Jacobi-Trudi determinants"),
    )
}

fn q_log_convexity() -> Outcome {
    let mut failures = Vec::new();
    for n in 1..=30 {
        let d = qlc_defect(w, n);
        if let Some((r, c)) = d.first_negative() {
            failures.push(format!("n={n}: coefficient of q^{r} is {c}"));
        }
    }
    for (n, expected) in [(1, "2*q"), (2, "2*q + 2*q^3")] {
        let got = qlc_defect(w, n).to_string();
        if got != expected {
            failures.push(format!("defect at n={n} is {got}, expected {expected}"));
        }
    }
    finish(failures, "W defects nonnegative for n = 1..30; n=1,2 defects are 2q and 2q + 2q^3".into())
}

fn bridge() -> Outcome {
    let mut failures = Vec::new();
    let ls: Vec<SchurExpansion> = (0..=20).map(lhs_l).collect();
    let mut counter = SsytCounter::new();
    for n in 2..=10 {
        for r in 1..=2 * n {
            let check = coefficient_bridge_with(n, r, &ls[r as usize], &mut counter).expect("valid range");
            if !check.holds {
                failures.push(format!(
                    "n={n} r={r}: defect {} vs 2 ps(L) {}",
                    check.defect_coefficient, check.specialized
                ));
            }
        }
    }
    for r in 1..=8 {
        let ok = shuffle_relations_check(r);
        if ok != [true; 5] {
            failures.push(format!("shuffle relations at r={r}: {ok:?}"));
        }
    }
    finish(failures, "bridge for 2 <= n <= 10, 1 <= r <= 2n; five shuffle relations for r = 1..8".into())
}

fn transform_criterion() -> Outcome {
    let mut failures = Vec::new();
    let b2 = TriangularArray::BinomialSquared;
    let mut factor_points = 0;
    for n in 1..=40u32 {
        for r in 0..=2 * n {
            let fp = FPolys::new(n, r);
            if n <= 20 {
                for k in 0..=i64::from(r / 2) {
                    if factorization_applies(n, r, k) {
                        factor_points += 1;
                        if !alpha_factorization_check_with(&fp, k).expect("in range") {
                            failures.push(format!("factorization fails at ({n},{r},{k})"));
                        }
                    }
                }
            }
            if let Err(e) = sign_change_index(&b2, n, r) {
                failures.push(format!("({n},{r}): {e}"));
            }
            let v = fp.f_at_half_r();
            if v != fp.f_at_half_r_closed_form() || v.is_positive() {
                failures.push(format!("f(r/2) at ({n},{r}) is {v}"));
            }
        }
    }
    match preservation_suite(&b2, &default_corpus(25), 25) {
        Ok(entries) => {
            for e in entries.into_iter().filter(|e| !e.passed) {
                failures.push(format!("preservation fails for {} at {:?}", e.name, e.first_violation));
            }
        }
        Err(e) => failures.push(format!("preservation: {e}")),
    }
    finish(
        failures,
        format!("{factor_points} factorization points (n <= 20); sign change and f(r/2) for n <= 40; corpus preserved to n = 25"),
    )
}

fn central_log_convexity() -> Outcome {
    let (b, d): (Vec<_>, Vec<_>) = (0..=30).map(central_values).unzip();
    let mut failures = Vec::new();
    for (name, v) in [("central binomial", b), ("central Delannoy", d)] {
        let lc = is_log_convex(&NumberSequence::from_integers(v), 30);
        if !lc.convex {
            failures.push(format!("{name} fails at {:?}", lc.first_violation));
        }
    }
    finish(failures, "C(2n,n) and d_n log-convex for n <= 30".into())
}

fn higher_powers() -> Outcome {
    let mut found = Vec::new();
    let mut failures = Vec::new();
    for m in [3, 4] {
        match power_m_counterexample(m, 20) {
            Some(wt) => found.push(format!("m={m}: n={} r={} coefficient={}", wt.n, wt.r, wt.coefficient)),
            None => failures.push(format!("no witness for m={m} up to n=20")),
        }
    }
    finish(failures, found.join("; "))
}

fn determinism() -> Outcome {
    let commands = vec![
        Command::VerifyIdentity { r_max: 12 },
        Command::VerifyLemmas { t_max: 4, lemma: None },
        Command::VerifyQlc { n_max: 30, source: QlcSource::W },
        Command::VerifyBridge { n_max: 10, shuffle_r_max: 8 },
        Command::VerifyTransform {
            n_max: 40,
            factor_n_max: 20,
            corpus_n_max: 25,
            array: TriangularArray::BinomialSquared,
            corpus: None,
        },
        Command::Counterexample { m: 3, n_max: 20 },
        Command::Counterexample { m: 4, n_max: 20 },
        Command::Expand(ExpandTarget::EProduct("e2*e2".parse().expect("valid"))),
    ];
    let mut failures = Vec::new();
    let mut runs = 0;
    for cmd in commands {
        for format in [OutputFormat::Text, OutputFormat::Json] {
            let reports: Vec<_> = [1, 8]
                .into_iter()
                .map(|workers| run(&RunConfig::new(cmd.clone()).workers(workers).output(format)))
                .collect();
            runs += 1;
            match (&reports[0], &reports[1]) {
                (Ok(a), Ok(b)) if a.report == b.report && a.all_passed() => {}
                (Ok(a), Ok(b)) if a.report == b.report => {
                    failures.push(format!("{} ({format:?}): {} checks failed", cmd.name(), a.failed()))
                }
                (Ok(_), Ok(_)) => failures.push(format!("{} ({format:?}): reports differ", cmd.name())),
                (Err(e), _) | (_, Err(e)) => failures.push(format!("{}: {e}", cmd.name())),
            }
        }
    }
    finish(failures, format!("{runs} suite reports byte-identical at 1 and 8 workers"))
}

type Criterion = (&'static str, fn() -> Outcome);

fn main() -> ExitCode {
    let criteria: [Criterion; 9] = [
        ("main identity", main_identity),
        ("lemma chain", lemma_chain),
        ("oracle equivalence", oracle_equivalence),
        ("q-log-convexity of W_n", q_log_convexity),
        ("coefficient bridge", bridge),
        ("transform criterion", transform_criterion),
        ("log-convexity of specializations", central_log_convexity),
        ("failure for m >= 3", higher_powers),
        ("determinism", determinism),
    ];
    let mut failed = 0;
    for (i, (name, check)) in criteria.iter().enumerate() {
        let start = Instant::now();
        let outcome = check();
        let secs = start.elapsed().as_secs_f64();
        match outcome {
            Ok(summary) => println!("criterion {}: PASS {name} ({summary}) [{secs:.1}s]", i + 1),
            Err(failures) => {
                failed += 1;
                println!("criterion {}: FAIL {name} [{secs:.1}s]", i + 1);
                for f in failures {
                    println!("    {f}");
                }
            }
        }
    }
    if failed == 0 {
        ExitCode::SUCCESS
    } else {
        println!("{failed} criteria failed");
        ExitCode::FAILURE
    }
}
