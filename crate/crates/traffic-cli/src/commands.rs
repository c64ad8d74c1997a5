use std::collections::{BTreeMap, BTreeSet};
use std::fmt::Write as _;
use std::path::Path;

use num_complex::Complex64;
use num_traits::Zero;
use serde::Serialize;
use traffic_graph::coeff::to_c64;
use traffic_graph::dsl::parse_dsl;
use traffic_graph::{Coeff, TestGraph};
use traffic_independence::{
    audit_double_trees, free_prediction, freeness_moment_test, label_moments, singleton_families,
    traffic_prediction, verify_traffic_independence, Families, FreenessReport, IndependenceReport,
    Value,
};
use traffic_ltd::{
    classify_double_tree, classify_orthogonal_cactus, fixed_band_ltd, EntryMoments, HaarLtd,
    LtdEvaluator, Regime,
};
use traffic_moments::{parse_polynomial, traffic_moment, QuotientSum};
use traffic_trace::{central_moment_estimate, estimate_traffic_state, log_log_slope, Estimate};

use crate::args::{
    ConcentrationArgs, EstimateArgs, IndependenceArgs, LtdArgs, MomentsArgs, SelftestArgs,
};
use crate::config::{pick, pick_list, Config};
use crate::error::CliError;
use crate::selftest;
use crate::specs::{self, ModelSpec};

/// Text for stdout, notes for stderr and the exit code.
#[derive(Clone, Debug, Default, PartialEq, Eq)]
pub struct Output {
    pub stdout: String,
    pub stderr: String,
    pub code: i32,
}

impl Output {
    fn text(stdout: String) -> Self {
        Output {
            stdout,
            ..Output::default()
        }
    }
}

pub const CSV_HEADER: &str = "n,samples,mean_re,mean_im,stderr,theory_re,theory_im,z";

fn read(path: &Path) -> Result<String, CliError> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn read_graph(path: &Path) -> Result<TestGraph, CliError> {
    Ok(parse_dsl(&read(path)?)?.graph().clone())
}

/// Documents separated by lines holding only `---`.
fn read_corpus(path: &Path) -> Result<Vec<TestGraph>, CliError> {
    let text = read(path)?;
    let mut docs = vec![String::new()];
    for line in text.lines() {
        if line.trim() == "---" {
            docs.push(String::new());
        } else {
            let doc = docs.last_mut().expect("at least one document");
            doc.push_str(line);
            doc.push('\n');
        }
    }
    docs.iter()
        .filter(|d| {
            d.lines()
                .any(|l| !l.split('#').next().unwrap_or("").trim().is_empty())
        })
        .enumerate()
        .map(|(i, d)| {
            parse_dsl(d)
                .map(|p| p.graph().clone())
                .map_err(|e| CliError::input(format!("graph {}: {e}", i + 1)))
        })
        .collect()
}

fn labels_of(t: &TestGraph) -> BTreeSet<String> {
    t.labels().into_iter().map(String::from).collect()
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("reports serialize");
    s.push('\n');
    s
}

pub fn ltd(args: &LtdArgs, config: &Config) -> Result<Output, CliError> {
    let t = read_graph(&args.graph)?;
    let labels = labels_of(&t);
    let mut out = String::new();
    if args.haar {
        let value = HaarLtd.ltd(&t)?;
        let report = classify_orthogonal_cactus(&t);
        writeln!(out, "{} ≈ {}", specs::exact(&value), specs::approx(&value)).unwrap();
        if report.is_orthogonal_cactus() {
            let cycles: Vec<String> = report.cycles.iter().map(usize::to_string).collect();
            writeln!(
                out,
                "orthogonal cactus with cycles of length {}",
                cycles.join(",")
            )
            .unwrap();
        } else if report.is_cactus {
            writeln!(out, "cactus with a cycle that is not anti-directed").unwrap();
        } else {
            writeln!(out, "not a cactus").unwrap();
        }
        return Ok(Output::text(out));
    }
    let regimes = specs::label_map(
        &pick_list(&args.regime, config, "regime"),
        &labels,
        specs::regime,
    )?;
    let betas = specs::betas(&pick_list(&args.beta, config, "beta"), &labels)?;
    if !regimes.is_empty() && regimes.values().all(|r| matches!(r, Regime::Fixed(_))) {
        return fixed_ltd(&t, &regimes, &specs::grid(&args.grid)?);
    }
    let evaluator: Box<dyn LtdEvaluator> = if regimes.is_empty() {
        specs::evaluator_for_regimes(
            labels.iter().map(|l| (l.clone(), Regime::Full)).collect(),
            betas,
        )?
    } else {
        specs::evaluator_for_regimes(regimes, betas)?
    };
    let value = evaluator.ltd(&t)?;
    writeln!(out, "{} ≈ {}", specs::exact(&value), specs::approx(&value)).unwrap();
    let report = classify_double_tree(&t);
    if report.is_double_tree {
        let counts = |m: &BTreeMap<String, usize>| {
            labels
                .iter()
                .map(|l| format!("{l}={}", m.get(l).copied().unwrap_or(0)))
                .collect::<Vec<_>>()
                .join(",")
        };
        writeln!(
            out,
            "colored double tree with {} pads; congruent {}; opposing {}",
            report.pads.len(),
            counts(&report.congruent),
            counts(&report.opposing)
        )
        .unwrap();
    } else {
        let why = report
            .witness
            .map_or_else(|| "no witness".to_string(), |w| w.to_string());
        writeln!(out, "not a colored double tree: {why}").unwrap();
    }
    Ok(Output::text(out))
}

fn fixed_ltd(
    t: &TestGraph,
    regimes: &BTreeMap<String, Regime>,
    grid: &[usize],
) -> Result<Output, CliError> {
    let widths: BTreeMap<String, usize> = regimes
        .iter()
        .map(|(l, r)| match r {
            Regime::Fixed(b) => (l.clone(), *b),
            _ => unreachable!("only fixed regimes reach here"),
        })
        .collect();
    let laws: BTreeMap<String, EntryMoments> = widths
        .keys()
        .map(|l| (l.clone(), EntryMoments::gaussian(t.edge_count())))
        .collect();
    let est = fixed_band_ltd(t, &widths, &laws, grid)?;
    let mut out = String::new();
    writeln!(
        out,
        "≈ {:.6} (lower estimate from max A_n/n; |ltd| ≤ {:.6})",
        est.ltd, est.bound
    )
    .unwrap();
    writeln!(out, "n,A_n").unwrap();
    for (n, a) in &est.counts {
        writeln!(out, "{n},{a}").unwrap();
    }
    let note = if est.monotone {
        String::new()
    } else {
        "A_n/n is not monotone on this grid\n".into()
    };
    Ok(Output {
        stdout: out,
        stderr: note,
        code: 0,
    })
}

struct Sampling {
    grid: Vec<usize>,
    samples: usize,
    seed: u64,
}

fn sampling(
    n: &Option<String>,
    samples: Option<usize>,
    seed: Option<u64>,
    config: &Config,
    grid: &str,
    count: usize,
) -> Result<Sampling, CliError> {
    let grid_text = match n {
        Some(s) => s.clone(),
        None => config.raw("n").unwrap_or(grid).to_string(),
    };
    let samples = pick(samples, config, "samples", count)?;
    if samples < 2 {
        return Err(CliError::usage(
            "at least two samples are needed for a standard error",
        ));
    }
    Ok(Sampling {
        grid: specs::grid(&grid_text)?,
        samples,
        seed: pick(seed, config, "seed", 0)?,
    })
}

fn float(x: f64) -> String {
    format!("{x}")
}

fn csv_row(est: &Estimate, theory: Option<Complex64>) -> String {
    let (tr, ti, z) = match theory {
        Some(c) => (float(c.re), float(c.im), float(est.z_score(c))),
        None => (String::new(), String::new(), String::new()),
    };
    format!(
        "{},{},{},{},{},{tr},{ti},{z}\n",
        est.n,
        est.samples,
        float(est.mean.re),
        float(est.mean.im),
        float(est.stderr)
    )
}

fn models_and_betas(
    ensemble: &[String],
    beta: &[String],
    labels: &BTreeSet<String>,
    config: &Config,
) -> Result<(BTreeMap<String, ModelSpec>, traffic_ltd::Betas), CliError> {
    let mut ens = pick_list(ensemble, config, "ensemble");
    if ens.is_empty() {
        ens.push("wigner".into());
    }
    let models = specs::models(&ens, labels)?;
    let betas = specs::betas(&pick_list(beta, config, "beta"), labels)?;
    Ok((models, betas))
}

pub fn estimate(args: &EstimateArgs, config: &Config) -> Result<Output, CliError> {
    let t = read_graph(&args.graph)?;
    let labels = labels_of(&t);
    let (models, betas) = models_and_betas(&args.ensemble, &args.beta, &labels, config)?;
    let run = sampling(&args.n, args.samples, args.seed, config, "100,200,400", 200)?;
    let ens = specs::ensemble(&models, &betas)?;
    let mut stderr = String::new();
    let theory = match specs::theory_for_models(&models, &betas) {
        None => {
            stderr.push_str("no exact limit for this ensemble; theory columns are empty\n");
            None
        }
        Some(ltd) => {
            let value = if args.injective {
                ltd.ltd(&t)?
            } else {
                QuotientSum::new(ltd.as_ref()).sum(&t, &[])?
            };
            Some(to_c64(&value))
        }
    };
    let mut out = format!("{CSV_HEADER}\n");
    for &n in &run.grid {
        let est = estimate_traffic_state(&t, &ens, n, run.samples, run.seed, args.injective)?;
        out.push_str(&csv_row(&est, theory));
    }
    Ok(Output {
        stdout: out,
        stderr,
        code: 0,
    })
}

pub fn concentration(args: &ConcentrationArgs, config: &Config) -> Result<Output, CliError> {
    let t = read_graph(&args.graph)?;
    let labels = labels_of(&t);
    let (models, betas) = models_and_betas(&args.ensemble, &args.beta, &labels, config)?;
    let run = sampling(
        &args.n,
        args.samples,
        args.seed,
        config,
        "50,100,200,400",
        500,
    )?;
    let order = pick(args.order, config, "order", 2)?;
    if order == 0 || order % 2 == 1 {
        return Err(CliError::usage(format!(
            "order must be positive and even, got {order}"
        )));
    }
    let ens = specs::ensemble(&models, &betas)?;
    let mut out = "n,samples,moment,stderr\n".to_string();
    let mut points = Vec::new();
    for &n in &run.grid {
        let est = central_moment_estimate(&t, &ens, n, run.samples, order, run.seed)?;
        writeln!(
            out,
            "{n},{},{},{}",
            run.samples,
            float(est.mean.re),
            float(est.stderr)
        )
        .unwrap();
        points.push((n as f64, est.mean.re));
    }
    let m = order / 2;
    let bound = -(m as i64) * (t.loop_count() as i64 + 1);
    let stderr = if points.len() >= 2 && points.iter().all(|p| p.1 > 0.0) {
        format!(
            "slope {:.4}; bound exponent -m(#L+1) = {bound} with m = {m}, #L = {}\n",
            log_log_slope(&points),
            t.loop_count()
        )
    } else {
        format!("no slope fitted; bound exponent -m(#L+1) = {bound}\n")
    };
    Ok(Output {
        stdout: out,
        stderr,
        code: 0,
    })
}

#[derive(Serialize)]
struct FreenessSummary {
    word: Vec<String>,
    free_prediction: Value,
    traffic_prediction: Value,
    estimates: Vec<FreenessReport>,
}

pub fn independence(args: &IndependenceArgs, config: &Config) -> Result<Output, CliError> {
    if let Some(word) = &args.word {
        return freeness(word, args, config);
    }
    let (corpus, labels): (Option<Vec<TestGraph>>, BTreeSet<String>) =
        match (&args.corpus, args.double_trees) {
            (Some(path), _) => {
                let corpus = read_corpus(path)?;
                let labels = corpus.iter().flat_map(labels_of).collect();
                (Some(corpus), labels)
            }
            (None, Some(_)) => {
                let text = args
                    .labels
                    .clone()
                    .or_else(|| config.raw("labels").map(String::from))
                    .unwrap_or_else(|| "x,y".into());
                let labels: BTreeSet<String> =
                    text.split(',').map(|s| s.trim().to_string()).collect();
                if labels
                    .iter()
                    .any(|l| !l.starts_with(|c: char| c.is_ascii_alphabetic()))
                {
                    return Err(CliError::usage(format!("bad label list `{text}`")));
                }
                (None, labels)
            }
            (None, None) => return Err(CliError::usage("give --corpus, --double-trees or --word")),
        };
    let families: Families = if args.family.is_empty() {
        singleton_families(labels.iter().map(String::as_str))
    } else {
        let given = specs::label_map(&args.family, &labels, |f| Ok(f.to_string()))?;
        labels
            .iter()
            .map(|l| {
                (
                    l.clone(),
                    given.get(l).cloned().unwrap_or_else(|| l.clone()),
                )
            })
            .collect()
    };
    let regimes = specs::label_map(
        &pick_list(&args.regime, config, "regime"),
        &labels,
        specs::regime,
    )?;
    let betas = specs::betas(&pick_list(&args.beta, config, "beta"), &labels)?;
    let ltd = if regimes.is_empty() {
        specs::evaluator_for_regimes(
            labels.iter().map(|l| (l.clone(), Regime::Full)).collect(),
            betas,
        )?
    } else {
        specs::evaluator_for_regimes(regimes, betas)?
    };
    let report: IndependenceReport = match corpus {
        Some(c) => {
            let r = verify_traffic_independence(ltd.as_ref(), &families, &c);
            if args.violations_only {
                r.violations_only()
            } else {
                r
            }
        }
        None => {
            let max = args.double_trees.expect("checked above");
            if max > 8 {
                return Err(CliError {
                    error: "guard",
                    message: format!("double-tree corpus above 8 vertices ({max})"),
                });
            }
            let names: Vec<&str> = labels.iter().map(String::as_str).collect();
            audit_double_trees(ltd.as_ref(), &families, max, &names)
        }
    };
    let code = if report.all_passed() { 0 } else { 2 };
    Ok(Output {
        stdout: json(&report),
        stderr: String::new(),
        code,
    })
}

fn freeness(word_text: &str, args: &IndependenceArgs, config: &Config) -> Result<Output, CliError> {
    let word: Vec<&str> = word_text.split(',').map(str::trim).collect();
    let labels: BTreeSet<String> = word.iter().map(|s| s.to_string()).collect();
    let (models, betas) = models_and_betas(&args.ensemble, &args.beta, &labels, config)?;
    let run = sampling(&args.n, args.samples, args.seed, config, "200", 100)?;
    let ltd = specs::theory_for_models(&models, &betas)
        .ok_or_else(|| CliError::usage("the ensemble has no exact limit to compare against"))?;
    let mut moments = BTreeMap::new();
    for l in &labels {
        moments.insert(l.clone(), label_moments(l, ltd.as_ref(), word.len())?);
    }
    let free = free_prediction(&word, &moments)?;
    let traffic = traffic_prediction(&word, ltd.as_ref())?;
    let ens = specs::ensemble(&models, &betas)?;
    let free_f = to_c64(&Coeff::new(free.clone(), Zero::zero())).re;
    let estimates = run
        .grid
        .iter()
        .map(|&n| freeness_moment_test(&ens, &word, n, run.samples, run.seed, free_f))
        .collect::<Result<Vec<_>, _>>()?;
    let summary = FreenessSummary {
        word: word.iter().map(|s| s.to_string()).collect(),
        free_prediction: Value::from(&Coeff::new(free, Zero::zero())),
        traffic_prediction: Value::from(&traffic),
        estimates,
    };
    Ok(Output::text(json(&summary)))
}

pub fn moments(args: &MomentsArgs, config: &Config) -> Result<Output, CliError> {
    let poly = parse_polynomial(&args.poly)?;
    let labels: BTreeSet<String> = poly
        .terms()
        .flat_map(|(m, _)| labels_of(m.graph()))
        .collect();
    let order = pick(args.order, config, "order", 4)?;
    if order == 0 {
        return Err(CliError::usage("order must be positive"));
    }
    let regimes = specs::label_map(
        &pick_list(&args.regime, config, "regime"),
        &labels,
        specs::regime,
    )?;
    let betas = specs::betas(&pick_list(&args.beta, config, "beta"), &labels)?;
    let ltd = if regimes.is_empty() {
        specs::evaluator_for_regimes(
            labels.iter().map(|l| (l.clone(), Regime::Full)).collect(),
            betas,
        )?
    } else {
        specs::evaluator_for_regimes(regimes, betas)?
    };
    let mut out = "m,exact,approx\n".to_string();
    for m in 1..=order {
        let v = traffic_moment(&poly, m, ltd.as_ref())?;
        writeln!(out, "{m},{},{}", specs::exact(&v), specs::approx(&v)).unwrap();
    }
    Ok(Output::text(out))
}

pub fn selftest(args: &SelftestArgs, config: &Config) -> Result<Output, CliError> {
    let seed = pick(args.seed, config, "seed", 1)?;
    let results = selftest::run(seed);
    let stdout: String = results.iter().map(|r| format!("{r}\n")).collect();
    let code = if results.iter().all(|r| r.failure.is_none()) {
        0
    } else {
        1
    };
    Ok(Output {
        stdout,
        stderr: String::new(),
        code,
    })
}
