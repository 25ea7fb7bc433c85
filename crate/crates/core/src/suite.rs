//! Batch verification runs with deterministic reports.
//!
//! Every suite is split into independent jobs that run on a dedicated rayon
//! pool. Results are collected in job order, so the rendered report does not
//! depend on the number of workers.

use std::collections::BTreeMap;
use std::fmt::Write as _;

use num_bigint::BigInt;
use num_traits::Signed;
use rayon::prelude::*;
use serde::ser::{SerializeMap, Serializer};
use serde::Serialize;

use crate::error::{Error, Result};
use crate::identity::{check_lemma, family_sum, lhs_l, verify_main_identity, FamilyId, LemmaId, LemmaReport, Parameters};
use crate::partition::Partition;
use crate::poly::Poly;
use crate::schur::{jacobi_trudi_e, EProduct};
use crate::specialization::{
    central_values, coefficient_bridge_with, narayana, power_m_counterexample, qlc_defect,
    shuffle_relation_sides, w,
};
use crate::tableaux::SsytCounter;
use crate::transforms::{
    alpha_factorization_check_with, default_corpus, factorization_applies, is_log_convex,
    preservation_suite, sign_change_index, FPolys, NumberSequence, TriangularArray,
};

pub const SCHEMA: u32 = 1;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Default)]
pub enum OutputFormat {
    #[default]
    Text,
    Json,
}

/// Where the polynomial sequence for `verify-qlc` comes from.
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum QlcSource {
    W,
    Narayana,
    /// Explicit polynomials `f_0, f_1, ...`.
    Table(Vec<Poly>),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum ExpandTarget {
    EProduct(EProduct),
    Family(FamilyId),
    /// The dual Jacobi–Trudi determinant of a shape.
    JacobiTrudi(Partition),
    /// `L(r)`.
    Lhs(u32),
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub enum Command {
    VerifyIdentity {
        r_max: u32,
    },
    VerifyLemmas {
        t_max: u32,
        lemma: Option<LemmaId>,
    },
    VerifyQlc {
        n_max: u32,
        source: QlcSource,
    },
    VerifyBridge {
        n_max: u32,
        /// Shuffle relations are checked for `1..=shuffle_r_max`.
        shuffle_r_max: u32,
    },
    VerifyTransform {
        /// Sign changes and the closed form of `f(r/2)` for `n <= n_max`.
        n_max: u32,
        /// The factorization of `α` for `n <= factor_n_max` (binomial-squared only).
        factor_n_max: u32,
        /// Preservation is checked on `0..=corpus_n_max`.
        corpus_n_max: u32,
        array: TriangularArray,
        /// `None` selects the built-in five-sequence corpus.
        corpus: Option<Vec<(String, NumberSequence)>>,
    },
    Counterexample {
        m: u32,
        n_max: u32,
    },
    Expand(ExpandTarget),
}

impl Command {
    pub fn name(&self) -> &'static str {
        match self {
            Command::VerifyIdentity { .. } => "verify-identity",
            Command::VerifyLemmas { .. } => "verify-lemmas",
            Command::VerifyQlc { .. } => "verify-qlc",
            Command::VerifyBridge { .. } => "verify-bridge",
            Command::VerifyTransform { .. } => "verify-transform",
            Command::Counterexample { .. } => "counterexample",
            Command::Expand(_) => "expand",
        }
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunConfig {
    pub command: Command,
    pub workers: usize,
    pub output: OutputFormat,
}

impl RunConfig {
    pub fn new(command: Command) -> Self {
        RunConfig {
            command,
            workers: 1,
            output: OutputFormat::Text,
        }
    }

    pub fn workers(mut self, workers: usize) -> Self {
        self.workers = workers;
        self
    }

    pub fn output(mut self, output: OutputFormat) -> Self {
        self.output = output;
        self
    }

    pub fn validate(&self) -> Result<()> {
        let fail = |msg: String| Err(Error::Precondition(msg));
        if self.workers == 0 {
            return fail("workers must be at least 1".into());
        }
        match &self.command {
            Command::VerifyQlc { n_max, source: QlcSource::Table(seq) } if (*n_max as usize) + 1 >= seq.len() => {
                fail(format!("checking up to n={n_max} needs {} polynomials, got {}", n_max + 2, seq.len()))
            }
            Command::VerifyTransform { n_max, array, .. } => match array.last_row() {
                Some(last) if last < *n_max as usize + 1 => {
                    fail(format!("sign changes up to n={n_max} need array rows up to {}, got {last}", n_max + 1))
                }
                _ => Ok(()),
            },
            _ => Ok(()),
        }
    }
}

/// One line of a report.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Record {
    pub suite: &'static str,
    /// `"lemma"` for lemma-style checks, `"check"` otherwise.
    pub key: &'static str,
    pub name: String,
    pub parameter: Parameters,
    pub passed: bool,
    /// Short facts, always shown.
    pub detail: BTreeMap<&'static str, String>,
    /// Bulky evidence, shown in text output only for failures.
    pub evidence: BTreeMap<&'static str, String>,
}

impl Record {
    fn new(suite: &'static str, name: impl Into<String>, parameter: Parameters, passed: bool) -> Self {
        Record {
            suite,
            key: "check",
            name: name.into(),
            parameter,
            passed,
            detail: BTreeMap::new(),
            evidence: BTreeMap::new(),
        }
    }

    fn detail(mut self, key: &'static str, value: impl ToString) -> Self {
        self.detail.insert(key, value.to_string());
        self
    }

    fn evidence(mut self, key: &'static str, value: impl ToString) -> Self {
        self.evidence.insert(key, value.to_string());
        self
    }

    fn from_lemma(suite: &'static str, r: LemmaReport) -> Self {
        let mut rec = Record::new(suite, r.lemma, r.parameter, r.passed)
            .evidence("lhs", r.lhs)
            .evidence("rhs", r.rhs)
            .evidence("discrepancy", r.discrepancy);
        rec.key = "lemma";
        rec
    }

    pub fn to_text(&self) -> String {
        let mut line = format!("{} {}", if self.passed { "PASS" } else { "FAIL" }, self.name);
        if self.parameter.iter().next().is_some() {
            write!(line, " {}", self.parameter).unwrap();
        }
        for (k, v) in &self.detail {
            write!(line, " {k}={v}").unwrap();
        }
        if !self.passed {
            for (k, v) in &self.evidence {
                write!(line, " {k}: {v};").unwrap();
            }
            if line.ends_with(';') {
                line.pop();
            }
        }
        line
    }
}

impl Serialize for Record {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let mut map = s.serialize_map(None)?;
        map.serialize_entry("schema", &SCHEMA)?;
        map.serialize_entry("suite", self.suite)?;
        map.serialize_entry(self.key, &self.name)?;
        map.serialize_entry("parameter", &self.parameter)?;
        map.serialize_entry("passed", &self.passed)?;
        for (k, v) in self.detail.iter().chain(&self.evidence) {
            map.serialize_entry(k, v)?;
        }
        map.end()
    }
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RunOutcome {
    pub records: Vec<Record>,
    /// The full rendered report, byte-stable for a given configuration.
    pub report: String,
}

impl RunOutcome {
    pub fn all_passed(&self) -> bool {
        self.records.iter().all(|r| r.passed)
    }

    pub fn failed(&self) -> usize {
        self.records.iter().filter(|r| !r.passed).count()
    }

    /// 0 when every check passed, 1 otherwise.
    pub fn exit_code(&self) -> i32 {
        if self.all_passed() {
            0
        } else {
            1
        }
    }
}

/// Runs a configured suite. Errors mean the configuration itself is invalid.
///
/// ```
/// use schurq::suite::{run, Command, RunConfig};
/// let out = run(&RunConfig::new(Command::VerifyIdentity { r_max: 4 }).workers(2)).unwrap();
/// assert_eq!(out.exit_code(), 0);
/// assert!(out.report.starts_with("PASS main r=1\n"));
/// ```
pub fn run(config: &RunConfig) -> Result<RunOutcome> {
    config.validate()?;
    let pool = rayon::ThreadPoolBuilder::new()
        .num_threads(config.workers)
        .build()
        .map_err(|e| Error::Precondition(format!("cannot start worker pool: {e}")))?;
    let suite = config.command.name();
    let records = pool.install(|| collect_records(&config.command))?;
    let report = match (&config.command, config.output) {
        (Command::Expand(_), OutputFormat::Text) => {
            let mut out = String::new();
            for r in &records {
                out.push_str(&r.detail["result"]);
                out.push('\n');
            }
            out
        }
        (_, format) => render(suite, &records, format),
    };
    Ok(RunOutcome { records, report })
}

fn render(suite: &str, records: &[Record], format: OutputFormat) -> String {
    let passed = records.iter().filter(|r| r.passed).count();
    let failed = records.len() - passed;
    let mut out = String::new();
    match format {
        OutputFormat::Text => {
            for r in records {
                out.push_str(&r.to_text());
                out.push('\n');
            }
            writeln!(out, "SUMMARY {suite}: {} checks, {passed} passed, {failed} failed", records.len()).unwrap();
        }
        OutputFormat::Json => {
            for r in records {
                out.push_str(&serde_json::to_string(r).expect("records serialize"));
                out.push('\n');
            }
            let summary = serde_json::json!({
                "schema": SCHEMA,
                "suite": suite,
                "summary": {"checks": records.len(), "passed": passed, "failed": failed},
            });
            out.push_str(&summary.to_string());
            out.push('\n');
        }
    }
    out
}

/// Runs independent jobs on the current pool, keeping job order.
fn par_jobs<T, F>(jobs: Vec<T>, f: F) -> Vec<Record>
where
    T: Send + Sync,
    F: Fn(&T) -> Vec<Record> + Send + Sync,
{
    let chunks: Vec<Vec<Record>> = jobs.par_iter().map(f).collect();
    chunks.into_iter().flatten().collect()
}

fn collect_records(command: &Command) -> Result<Vec<Record>> {
    let suite = command.name();
    Ok(match command {
        Command::VerifyIdentity { r_max } => par_jobs((1..=*r_max).collect(), |&r| {
            vec![Record::from_lemma(suite, verify_main_identity(r))]
        }),
        Command::VerifyLemmas { t_max, lemma } => {
            let lemmas: Vec<LemmaId> = match lemma {
                Some(l) => vec![*l],
                None => LemmaId::ALL.to_vec(),
            };
            let jobs: Vec<(LemmaId, u32)> = lemmas
                .iter()
                .flat_map(|&l| (0..=*t_max).map(move |t| (l, t)))
                .collect();
            par_jobs(jobs, |&(l, t)| {
                check_lemma(l, t).into_iter().map(|r| Record::from_lemma(suite, r)).collect()
            })
        }
        Command::VerifyQlc { n_max, source } => qlc_records(suite, *n_max, source)?,
        Command::VerifyBridge { n_max, shuffle_r_max } => bridge_records(suite, *n_max, *shuffle_r_max),
        Command::VerifyTransform {
            n_max,
            factor_n_max,
            corpus_n_max,
            array,
            corpus,
        } => transform_records(suite, *n_max, *factor_n_max, *corpus_n_max, array, corpus.as_deref())?,
        Command::Counterexample { m, n_max } => {
            let found = power_m_counterexample(*m, *n_max);
            // Squares are q-log-convex; powers m >= 3 are expected to fail.
            let expect_witness = *m >= 3;
            let params = Parameters::new().with("m", (*m).into()).with("n_max", (*n_max).into());
            let rec = Record::new(suite, "power-m", params, found.is_some() == expect_witness)
                .detail("expect", if expect_witness { "witness" } else { "none" });
            vec![match found {
                Some(wt) => rec
                    .detail("n", wt.n)
                    .detail("r", wt.r)
                    .detail("coefficient", wt.coefficient),
                None => rec.detail("witness", "none"),
            }]
        }
        Command::Expand(target) => vec![expand_record(suite, target)?],
    })
}

fn qlc_records(suite: &'static str, n_max: u32, source: &QlcSource) -> Result<Vec<Record>> {
    let seq: Box<dyn Fn(u32) -> Poly + Send + Sync> = match source {
        QlcSource::W => Box::new(w),
        QlcSource::Narayana => {
            // Narayana polynomials start at n = 1; index 0 is the constant 1.
            Box::new(|n| if n == 0 { Poly::one() } else { narayana(n).expect("n >= 1") })
        }
        QlcSource::Table(polys) => {
            let polys = polys.clone();
            Box::new(move |n| polys[n as usize].clone())
        }
    };
    let mut records = par_jobs((1..=n_max).collect(), |&n| {
        let d = qlc_defect(&seq, n);
        let params = Parameters::new().with("n", n.into());
        let mut rec = Record::new(suite, "defect", params, d.has_nonnegative_coeffs()).evidence("defect", &d);
        if let Some((r, c)) = d.first_negative() {
            rec = rec.detail("r", r).detail("coefficient", c);
        }
        vec![rec]
    });
    if *source == QlcSource::W {
        let n_top = n_max + 1;
        let (b, d): (Vec<BigInt>, Vec<BigInt>) = (0..=n_top).map(central_values).unzip();
        for (name, values) in [("central-binomial", b), ("central-delannoy", d)] {
            let lc = is_log_convex(&NumberSequence::from_integers(values), n_top);
            let params = Parameters::new().with("n_max", n_top.into());
            let mut rec = Record::new(suite, format!("log-convex/{name}"), params, lc.convex);
            if let Some(k) = lc.first_violation {
                rec = rec.detail("first_violation", k);
            }
            records.push(rec);
        }
    }
    Ok(records)
}

fn bridge_records(suite: &'static str, n_max: u32, shuffle_r_max: u32) -> Vec<Record> {
    let r_top = 2 * n_max;
    let ls: Vec<_> = (0..=r_top).into_par_iter().map(lhs_l).collect();
    let mut records = par_jobs((1..=n_max).collect(), |&n| {
        let mut counter = SsytCounter::new();
        (0..=2 * n)
            .map(|r| {
                let check = coefficient_bridge_with(n, r, &ls[r as usize], &mut counter).expect("r <= 2n");
                let params = Parameters::new().with("n", n.into()).with("r", r.into());
                Record::new(suite, "bridge", params, check.holds)
                    .detail("defect_coefficient", check.defect_coefficient)
                    .evidence("specialized", check.specialized)
            })
            .collect()
    });
    records.extend(par_jobs((1..=shuffle_r_max).collect(), |&r| {
        shuffle_relation_sides(r)
            .iter()
            .enumerate()
            .map(|(i, sides)| {
                let params = Parameters::new().with("r", r.into());
                let mut rec = Record::new(suite, format!("shuffle/{}", i + 1), params, sides.windows(2).all(|w| w[0] == w[1]));
                for (side, key) in sides.iter().zip(["side1", "side2", "side3"]) {
                    rec = rec.evidence(key, side);
                }
                rec
            })
            .collect()
    }));
    records
}

fn transform_records(
    suite: &'static str,
    n_max: u32,
    factor_n_max: u32,
    corpus_n_max: u32,
    array: &TriangularArray,
    corpus: Option<&[(String, NumberSequence)]>,
) -> Result<Vec<Record>> {
    let binomial = *array == TriangularArray::BinomialSquared;
    let points: Vec<(u32, u32)> = (1..=n_max).flat_map(|n| (0..=2 * n).map(move |r| (n, r))).collect();
    let mut records = par_jobs(points, |&(n, r)| {
        let params = || Parameters::new().with("n", n.into()).with("r", r.into());
        let mut out = Vec::new();
        out.push(match sign_change_index(array, n, r) {
            Ok(k) => Record::new(suite, "sign-change", params(), true).detail("k_split", k),
            Err(e) => Record::new(suite, "sign-change", params(), false).detail("error", e),
        });
        if binomial {
            let fp = FPolys::new(n, r);
            let value = fp.f_at_half_r();
            let ok = value == fp.f_at_half_r_closed_form() && !value.is_positive();
            out.push(Record::new(suite, "f-half-r", params(), ok).detail("value", &value));
            if n <= factor_n_max {
                let ks: Vec<i64> = (0..=i64::from(r / 2)).filter(|&k| factorization_applies(n, r, k)).collect();
                let bad: Vec<i64> = ks
                    .iter()
                    .copied()
                    .filter(|&k| !alpha_factorization_check_with(&fp, k).expect("k in range"))
                    .collect();
                let mut rec = Record::new(suite, "factorization", params(), bad.is_empty())
                    .detail("k_checked", ks.len());
                if !bad.is_empty() {
                    rec = rec.detail("k_failed", format!("{bad:?}"));
                }
                out.push(rec);
                out.push(Record::new(suite, "derivative", params(), fp.derivative_identities_hold()));
            }
        }
        out
    });
    let default;
    let corpus = match corpus {
        Some(c) => c,
        None => {
            default = default_corpus(corpus_n_max);
            &default
        }
    };
    for entry in preservation_suite(array, corpus, corpus_n_max)? {
        let params = Parameters::new().with("n_max", entry.n_max.into());
        let mut rec = Record::new(suite, format!("preservation/{}", entry.name), params, entry.passed);
        if let Some(k) = entry.first_violation {
            rec = rec.detail("first_violation", k);
        }
        records.push(rec);
    }
    Ok(records)
}

fn expand_record(suite: &'static str, target: &ExpandTarget) -> Result<Record> {
    let (input, result) = match target {
        ExpandTarget::EProduct(p) => (p.to_string(), p.expand().to_string()),
        ExpandTarget::Family(id) => (id.to_string(), family_sum(id).to_string()),
        ExpandTarget::Lhs(r) => (format!("L({r})"), lhs_l(*r).to_string()),
        ExpandTarget::JacobiTrudi(lambda) => {
            let mut text = String::new();
            for (i, term) in jacobi_trudi_e(lambda).iter().enumerate() {
                let mag = term.coeff.abs();
                let sign = match (i, term.coeff < 0) {
                    (0, true) => "-",
                    (0, false) => "",
                    (_, true) => " - ",
                    (_, false) => " + ",
                };
                text.push_str(sign);
                if mag != 1 {
                    write!(text, "{mag}*").unwrap();
                }
                text.push_str(&term.product.to_string());
            }
            if text.is_empty() {
                text.push('0');
            }
            (lambda.to_string(), text)
        }
    };
    Ok(Record::new(suite, "expand", Parameters::new(), true)
        .detail("input", input)
        .detail("result", result))
}
