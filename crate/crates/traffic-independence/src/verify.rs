//! Audits of the factorization `τ⁰[T] = ∏ τ⁰[T_{i,ℓ}]` over free products
//! and `τ⁰[T] = 0` elsewhere.

use num_traits::Zero;
use rayon::prelude::*;
use serde::Serialize;
use traffic_graph::coeff::{one, to_c64};
use traffic_graph::dsl::{serialize, ParsedGraph};
use traffic_graph::{Coeff, TestGraph};
use traffic_ltd::LtdEvaluator;

use crate::chi::{chi_graph, ChiNode, Families};
use crate::corpus::for_each_double_tree;

/// An exact value with a floating rendering.
#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Value {
    pub re: String,
    pub im: String,
    pub approx: [f64; 2],
}

impl From<&Coeff> for Value {
    fn from(c: &Coeff) -> Self {
        let z = to_c64(c);
        Value {
            re: c.re.to_string(),
            im: c.im.to_string(),
            approx: [z.re, z.im],
        }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct Verdict {
    /// The graph in the line format of `traffic_graph::dsl`.
    pub graph: String,
    pub free_product: bool,
    /// A cycle of χ(T) when `T` is not a free product.
    pub chi_cycle: Option<Vec<ChiNode>>,
    pub value: Option<Value>,
    /// The product over components, or zero.
    pub expected: Option<Value>,
    pub passed: bool,
    pub error: Option<String>,
}

#[derive(Clone, Debug, PartialEq, Serialize)]
pub struct IndependenceReport {
    pub checked: usize,
    pub passed: usize,
    pub verdicts: Vec<Verdict>,
}

impl IndependenceReport {
    pub fn violations(&self) -> impl Iterator<Item = &Verdict> {
        self.verdicts.iter().filter(|v| !v.passed)
    }

    pub fn all_passed(&self) -> bool {
        self.passed == self.checked
    }

    /// Keeps only the failing verdicts.
    pub fn violations_only(mut self) -> Self {
        self.verdicts.retain(|v| !v.passed);
        self
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string_pretty(self).expect("reports serialize")
    }
}

struct Outcome {
    free_product: bool,
    chi_cycle: Option<Vec<ChiNode>>,
    value: Coeff,
    expected: Coeff,
}

fn evaluate(t: &TestGraph, ltd: &dyn LtdEvaluator, families: &Families) -> Result<Outcome, String> {
    let chi = chi_graph(t, families).map_err(|e| e.to_string())?;
    let free_product = chi.is_tree();
    let value = ltd.ltd(t).map_err(|e| e.to_string())?;
    let (expected, chi_cycle) = if free_product {
        let mut product = one();
        for c in &chi.components {
            product *= ltd.ltd(&c.graph(t)).map_err(|e| e.to_string())?;
        }
        (product, None)
    } else {
        (Coeff::zero(), chi.find_cycle())
    };
    Ok(Outcome {
        free_product,
        chi_cycle,
        value,
        expected,
    })
}

fn verdict(t: &TestGraph, outcome: Result<Outcome, String>) -> Verdict {
    let graph = serialize(&ParsedGraph::Graph(t.clone()));
    match outcome {
        Ok(o) => Verdict {
            graph,
            free_product: o.free_product,
            chi_cycle: o.chi_cycle,
            passed: o.value == o.expected,
            value: Some(Value::from(&o.value)),
            expected: Some(Value::from(&o.expected)),
            error: None,
        },
        Err(e) => Verdict {
            graph,
            free_product: false,
            chi_cycle: None,
            value: None,
            expected: None,
            passed: false,
            error: Some(e),
        },
    }
}

/// Checks every graph of `corpus` against traffic independence of the
/// label families under `ltd`. Graphs are checked in parallel; verdicts
/// keep the corpus order.
pub fn verify_traffic_independence(
    ltd: &dyn LtdEvaluator,
    families: &Families,
    corpus: &[TestGraph],
) -> IndependenceReport {
    let verdicts: Vec<Verdict> = corpus
        .par_iter()
        .map(|t| verdict(t, evaluate(t, ltd, families)))
        .collect();
    let passed = verdicts.iter().filter(|v| v.passed).count();
    IndependenceReport {
        checked: verdicts.len(),
        passed,
        verdicts,
    }
}

/// Audits every colored double tree up to `max_vertices` vertices in
/// `labels`, keeping only the failing verdicts. Graphs are checked in
/// parallel batches as they are generated.
pub fn audit_double_trees(
    ltd: &dyn LtdEvaluator,
    families: &Families,
    max_vertices: usize,
    labels: &[&str],
) -> IndependenceReport {
    const BATCH: usize = 1 << 14;
    let mut report = IndependenceReport {
        checked: 0,
        passed: 0,
        verdicts: Vec::new(),
    };
    let mut batch = Vec::with_capacity(BATCH);
    let flush = |batch: &mut Vec<TestGraph>, report: &mut IndependenceReport| {
        let failed: Vec<Verdict> = batch
            .par_iter()
            .filter_map(|t| {
                let outcome = evaluate(t, ltd, families);
                let ok = matches!(&outcome, Ok(o) if o.value == o.expected);
                (!ok).then(|| verdict(t, outcome))
            })
            .collect();
        report.checked += batch.len();
        report.passed += batch.len() - failed.len();
        report.verdicts.extend(failed);
        batch.clear();
    };
    for_each_double_tree(max_vertices, labels, |g| {
        batch.push(g);
        if batch.len() == BATCH {
            flush(&mut batch, &mut report);
        }
    });
    flush(&mut batch, &mut report);
    report
}
