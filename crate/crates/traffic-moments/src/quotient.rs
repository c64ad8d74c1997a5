//! Sums of a limit evaluator over the quotients of a test graph.

use std::collections::{BTreeSet, HashMap};
use std::sync::Mutex;

use traffic_graph::coeff::zero;
use traffic_graph::partition::for_each_rgs;
use traffic_graph::{canonical_key, CanonKey, Coeff, TestGraph, VertexId};
use traffic_ltd::{classify_double_tree, LtdEvaluator};

use crate::error::MomentError;

fn find(parent: &mut [usize], mut x: usize) -> usize {
    while parent[x] != x {
        parent[x] = parent[parent[x]];
        x = parent[x];
    }
    x
}

fn rgs_of(parent: &mut [usize]) -> Vec<usize> {
    let mut label = vec![usize::MAX; parent.len()];
    let mut next = 0;
    (0..parent.len())
        .map(|v| {
            let r = find(parent, v);
            if label[r] == usize::MAX {
                label[r] = next;
                next += 1;
            }
            label[r]
        })
        .collect()
}

/// Block assignments `π` (as restricted growth strings over vertex
/// positions) for which `T^π` is a colored double tree.
///
/// Such a `π` pairs the edges into pads and fixes each pad's orientation,
/// and conversely the finest partition realizing a pairing and orientation
/// already has `|E|/2 + 1` blocks whenever its quotient is a double tree.
/// So enumerating pairings of same-label edges with both orientations and
/// keeping the double-tree quotients finds every such `π` exactly once.
pub fn double_tree_partitions(t: &TestGraph) -> Vec<Vec<usize>> {
    let edges: Vec<(usize, usize, &str)> = t
        .edges()
        .iter()
        .map(|e| {
            (
                t.index_of(e.src).unwrap(),
                t.index_of(e.tar).unwrap(),
                e.label.as_str(),
            )
        })
        .collect();
    if edges.len() % 2 == 1 || edges.iter().any(|e| e.0 == e.1) {
        return Vec::new();
    }
    let mut found = BTreeSet::new();
    let mut parent: Vec<usize> = (0..t.vertex_count()).collect();
    let mut used = vec![false; edges.len()];
    fn rec(
        edges: &[(usize, usize, &str)],
        used: &mut [bool],
        parent: &mut [usize],
        t: &TestGraph,
        found: &mut BTreeSet<Vec<usize>>,
    ) {
        let Some(i) = used.iter().position(|u| !u) else {
            let rgs = rgs_of(parent);
            let blocks = rgs.iter().max().map_or(0, |m| m + 1);
            if blocks == edges.len() / 2 + 1
                && classify_double_tree(&t.quotient_by_rgs(&rgs)).is_double_tree
            {
                found.insert(rgs);
            }
            return;
        };
        used[i] = true;
        let (a, b, label) = edges[i];
        for j in i + 1..edges.len() {
            if used[j] || edges[j].2 != label {
                continue;
            }
            used[j] = true;
            let (c, d, _) = edges[j];
            for (x, y) in [(c, d), (d, c)] {
                let mut p = parent.to_vec();
                let (ra, rx) = (find(&mut p, a), find(&mut p, x));
                p[ra] = rx;
                let (rb, ry) = (find(&mut p, b), find(&mut p, y));
                p[rb] = ry;
                if find(&mut p, a) != find(&mut p, b) {
                    rec(edges, used, &mut p, t, found);
                }
            }
            used[j] = false;
        }
        used[i] = false;
    }
    rec(&edges, &mut used, &mut parent, t, &mut found);
    found.into_iter().collect()
}

/// `Σ_π ltd(T^π)` over partitions that keep the vertices in `distinct`
/// pairwise apart, memoizing evaluator calls by canonical form.
pub struct QuotientSum<'a> {
    ltd: &'a dyn LtdEvaluator,
    cache: Mutex<HashMap<CanonKey, Coeff>>,
}

impl<'a> QuotientSum<'a> {
    pub fn new(ltd: &'a dyn LtdEvaluator) -> Self {
        QuotientSum {
            ltd,
            cache: Mutex::new(HashMap::new()),
        }
    }

    fn value(&self, q: &TestGraph) -> Result<Coeff, MomentError> {
        let key = canonical_key(q)?;
        if let Some(v) = self.cache.lock().unwrap().get(&key) {
            return Ok(v.clone());
        }
        let v = self.ltd.ltd(&key.to_test_graph())?;
        self.cache.lock().unwrap().insert(key, v.clone());
        Ok(v)
    }

    pub fn sum(&self, t: &TestGraph, distinct: &[VertexId]) -> Result<Coeff, MomentError> {
        let apart: Vec<usize> = distinct.iter().map(|&v| t.index_of(v).unwrap()).collect();
        let keep = |rgs: &[usize]| {
            apart
                .iter()
                .enumerate()
                .all(|(i, &a)| apart[..i].iter().all(|&b| rgs[a] != rgs[b]))
        };
        let mut total = zero();
        if self.ltd.supported_on_double_trees() {
            for rgs in double_tree_partitions(t) {
                if keep(&rgs) {
                    total += self.value(&t.quotient_by_rgs(&rgs))?;
                }
            }
        } else {
            let mut err = None;
            for_each_rgs(t.vertex_count(), None, |rgs| {
                if err.is_some() || !keep(rgs) {
                    return;
                }
                match self.value(&t.quotient_by_rgs(rgs)) {
                    Ok(v) => total += v,
                    Err(e) => err = Some(e),
                }
            })?;
            if let Some(e) = err {
                return Err(e);
            }
        }
        Ok(total)
    }
}
