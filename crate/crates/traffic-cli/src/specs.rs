//! Parsers for the small value languages used on the command line.

use std::collections::{BTreeMap, BTreeSet};

use num_complex::Complex64;
use num_rational::BigRational;
use num_traits::{One, Zero};
use traffic_ensembles::{BandProfile, BandWidth, Ensemble, EntrySpec, MatrixModel};
use traffic_graph::coeff::{parse_decimal, real, to_c64};
use traffic_graph::Coeff;
use traffic_ltd::{Betas, HaarLtd, LtdEvaluator, RbmLtd, Regime, WignerLtd};

use crate::error::CliError;

/// Splits `label=value`.
pub fn assignment(text: &str) -> Result<(String, String), CliError> {
    let (label, value) = text
        .split_once('=')
        .ok_or_else(|| CliError::usage(format!("expected `label=value`, got `{text}`")))?;
    let label = label.trim();
    if label.is_empty() || !label.starts_with(|c: char| c.is_ascii_alphabetic()) {
        return Err(CliError::usage(format!("bad label in `{text}`")));
    }
    Ok((label.to_string(), value.trim().to_string()))
}

/// A rational from a decimal such as `0.25`, `-3` or `1e-2`, or a ratio `1/4`.
pub fn rational(text: &str) -> Result<BigRational, CliError> {
    let bad = || CliError::usage(format!("bad number `{text}`"));
    let t = text.trim();
    let (neg, body) = match t.strip_prefix('-') {
        Some(rest) => (true, rest),
        None => (false, t.strip_prefix('+').unwrap_or(t)),
    };
    let value = match body.split_once('/') {
        Some((a, b)) => {
            let d = parse_decimal(b).filter(|d| !d.is_zero()).ok_or_else(bad)?;
            parse_decimal(a).ok_or_else(bad)? / d
        }
        None => parse_decimal(body).ok_or_else(bad)?,
    };
    Ok(if neg { -value } else { value })
}

/// A complex `β` such as `1`, `0`, `-0.5`, `i`, `-i`, `0.5i` or `1/2-1/2i`.
pub fn beta(text: &str) -> Result<Coeff, CliError> {
    let t: String = text.chars().filter(|c| !c.is_whitespace()).collect();
    let bad = || CliError::usage(format!("bad β `{text}`"));
    if t.is_empty() {
        return Err(bad());
    }
    let Some(body) = t.strip_suffix('i') else {
        return Ok(real(rational(&t)?));
    };
    // The imaginary part starts at the last sign that is not the first character
    // and does not follow an exponent marker.
    let bytes = body.as_bytes();
    let split = (1..bytes.len())
        .rev()
        .find(|&k| matches!(bytes[k], b'+' | b'-') && !matches!(bytes[k - 1], b'e' | b'E'));
    let (re, im) = match split {
        Some(k) => (rational(&body[..k])?, &body[k..]),
        None => (BigRational::zero(), body),
    };
    let im = match im {
        "" | "+" => BigRational::one(),
        "-" => -BigRational::one(),
        s => rational(s)?,
    };
    Ok(Coeff::new(re, im))
}

/// `slow | full | periodic-slow | periodic-proportional | proportional:C | fixed:B`.
pub fn regime(text: &str) -> Result<Regime, CliError> {
    let bad = || CliError::usage(format!("unknown regime `{text}`"));
    Ok(match text.split_once(':') {
        None => match text {
            "slow" => Regime::Slow,
            "full" => Regime::Full,
            "periodic-slow" => Regime::PeriodicSlow,
            "periodic-proportional" => Regime::PeriodicProportional,
            _ => return Err(bad()),
        },
        Some(("proportional", c)) => Regime::Proportional(rational(c)?),
        Some(("fixed", b)) => Regime::Fixed(b.parse().map_err(|_| bad())?),
        _ => return Err(bad()),
    })
}

/// A comma-separated list of dimensions.
pub fn grid(text: &str) -> Result<Vec<usize>, CliError> {
    let out: Vec<usize> = text
        .split(',')
        .map(|s| s.trim().parse::<usize>().ok().filter(|&n| n > 0))
        .collect::<Option<_>>()
        .ok_or_else(|| CliError::usage(format!("bad dimension list `{text}`")))?;
    if out.is_empty() {
        return Err(CliError::usage("empty dimension list"));
    }
    Ok(out)
}

/// Per-label values from repeated `label=value` flags. Labels outside
/// `known` are rejected.
pub fn label_map<T>(
    items: &[String],
    known: &BTreeSet<String>,
    parse: impl Fn(&str) -> Result<T, CliError>,
) -> Result<BTreeMap<String, T>, CliError> {
    let mut out = BTreeMap::new();
    for item in items {
        let (label, value) = assignment(item)?;
        if !known.contains(&label) {
            return Err(CliError::usage(format!(
                "label `{label}` does not occur in the input"
            )));
        }
        if out.insert(label.clone(), parse(&value)?).is_some() {
            return Err(CliError::usage(format!("label `{label}` given twice")));
        }
    }
    Ok(out)
}

/// `β` for every label in `labels`, defaulting to 1.
pub fn betas(items: &[String], labels: &BTreeSet<String>) -> Result<Betas, CliError> {
    let mut given = label_map(items, labels, beta)?;
    Ok(labels
        .iter()
        .map(|l| {
            (
                l.clone(),
                given.remove(l).unwrap_or_else(traffic_graph::coeff::one),
            )
        })
        .collect())
}

/// One random matrix model as written on the command line.
#[derive(Clone, Debug, PartialEq)]
pub enum ModelSpec {
    Band(BandProfile),
    Haar,
}

/// `wigner | full | slow:S:E | periodic:B | periodic:S:E | proportional:C | fixed:B | haar`.
pub fn model(text: &str) -> Result<ModelSpec, CliError> {
    if text == "haar" {
        return Ok(ModelSpec::Haar);
    }
    text.parse::<BandProfile>()
        .map(ModelSpec::Band)
        .map_err(|e| CliError::usage(e.to_string()))
}

/// Models per label: a bare model applies to every label, `label=model`
/// entries override it.
pub fn models(
    items: &[String],
    labels: &BTreeSet<String>,
) -> Result<BTreeMap<String, ModelSpec>, CliError> {
    let mut fallback = None;
    let mut specific = Vec::new();
    for item in items {
        if item.contains('=') {
            specific.push(item.clone());
        } else if fallback.replace(model(item)?).is_some() {
            return Err(CliError::usage("more than one default ensemble"));
        }
    }
    let mut given = label_map(&specific, labels, model)?;
    labels
        .iter()
        .map(|l| {
            given
                .remove(l)
                .or_else(|| fallback.clone())
                .map(|m| (l.clone(), m))
                .ok_or_else(|| CliError::usage(format!("no ensemble for label `{l}`")))
        })
        .collect()
}

/// Sampling ensemble for the models with Gaussian entries of the given `β`.
pub fn ensemble(models: &BTreeMap<String, ModelSpec>, betas: &Betas) -> Result<Ensemble, CliError> {
    let mut ens = Ensemble::new();
    for (label, spec) in models {
        let m = match spec {
            ModelSpec::Haar => MatrixModel::HaarOrthogonal,
            ModelSpec::Band(profile) => {
                let b: Complex64 = to_c64(&betas[label]);
                MatrixModel::Band {
                    profile: *profile,
                    entries: EntrySpec::gaussian(b)?,
                }
            }
        };
        ens = ens.with(label, m);
    }
    Ok(ens)
}

/// The regime whose limit a sampled band profile approaches, if any.
fn limit_regime(profile: &BandProfile) -> Option<Regime> {
    match *profile {
        BandProfile::Wigner | BandProfile::Full => Some(Regime::Full),
        BandProfile::Slow(BandWidth::Power { exponent, .. })
            if exponent > 0.0 && exponent < 1.0 =>
        {
            Some(Regime::Slow)
        }
        BandProfile::Periodic(BandWidth::Power { exponent, .. })
            if exponent > 0.0 && exponent < 1.0 =>
        {
            Some(Regime::PeriodicSlow)
        }
        BandProfile::Periodic(BandWidth::Power { exponent: 1.0, .. }) => {
            Some(Regime::PeriodicProportional)
        }
        BandProfile::Proportional(c) if c >= 1.0 => Some(Regime::Full),
        BandProfile::Proportional(c) => parse_decimal(&c.to_string()).map(Regime::Proportional),
        _ => None,
    }
}

/// Exact limit for sampled models: independent Wigner matrices, band
/// matrices in a limiting regime, or one Haar matrix. `None` when no
/// evaluator applies.
pub fn theory_for_models(
    models: &BTreeMap<String, ModelSpec>,
    betas: &Betas,
) -> Option<Box<dyn LtdEvaluator>> {
    if models.values().any(|m| *m == ModelSpec::Haar) {
        return (models.len() == 1).then(|| Box::new(HaarLtd) as Box<dyn LtdEvaluator>);
    }
    let regimes: Option<BTreeMap<String, Regime>> = models
        .iter()
        .map(|(l, m)| match m {
            ModelSpec::Band(p) => limit_regime(p).map(|r| (l.clone(), r)),
            ModelSpec::Haar => None,
        })
        .collect();
    evaluator_for_regimes(regimes?, betas.clone()).ok()
}

/// Wigner when every regime is full, band evaluator otherwise. Fixed
/// widths have no exact evaluator.
pub fn evaluator_for_regimes(
    regimes: BTreeMap<String, Regime>,
    betas: Betas,
) -> Result<Box<dyn LtdEvaluator>, CliError> {
    if let Some((l, _)) = regimes.iter().find(|(_, r)| matches!(r, Regime::Fixed(_))) {
        return Err(CliError::usage(format!(
            "label `{l}` has a fixed width; fixed widths are estimated on their own"
        )));
    }
    if regimes.values().all(|r| *r == Regime::Full) {
        return Ok(Box::new(WignerLtd { betas }));
    }
    Ok(Box::new(RbmLtd { regimes, betas }))
}

/// `re` or `re + im i` in exact form.
pub fn exact(c: &Coeff) -> String {
    if c.im.is_zero() {
        c.re.to_string()
    } else if c.re.is_zero() {
        format!("{}i", c.im)
    } else if c.im < BigRational::zero() {
        format!("{} - {}i", c.re, -c.im.clone())
    } else {
        format!("{} + {}i", c.re, c.im)
    }
}

/// Six decimals, with an imaginary part when present.
pub fn approx(c: &Coeff) -> String {
    let z = to_c64(c);
    if c.im.is_zero() {
        format!("{:.6}", z.re)
    } else {
        format!("{:.6}{:+.6}i", z.re, z.im)
    }
}
