//! Band matrices with a fixed band width.
//!
//! The limit is `(p / ∏_e √(2b_e + 1)) · S(T)` where `p = lim A_n / n` and
//! `A_n` counts injective labelings `φ: V → [n]` with `|φ(u) − φ(v)| ≤ b`
//! on every twin-edge class. The sequence `A_n` is superadditive, so `A_n/n`
//! approaches its supremum from below.

use std::collections::BTreeMap;

use rayon::prelude::*;
use traffic_graph::{TestGraph, VertexId};

use crate::error::LtdError;

/// Largest number of enumeration steps `n·∏(2b)` attempted.
pub const COUNT_GUARD: f64 = 1e8;

/// Moments `E X^k` indexed by `k`, off the diagonal and on it.
#[derive(Clone, Debug, PartialEq)]
pub struct EntryMoments {
    pub offdiag: Vec<f64>,
    pub diag: Vec<f64>,
}

impl EntryMoments {
    /// Standard Gaussian moments up to order `max` in both places.
    pub fn gaussian(max: usize) -> Self {
        let m: Vec<f64> = (0..=max)
            .map(|k| {
                if k % 2 == 1 {
                    0.0
                } else {
                    (1..k).step_by(2).map(|j| j as f64).product()
                }
            })
            .collect();
        EntryMoments {
            offdiag: m.clone(),
            diag: m,
        }
    }
}

struct Layout {
    /// Vertex positions in placement order; `parent[k] < k` for `k > 0`.
    order: Vec<usize>,
    parent: Vec<usize>,
    parent_width: Vec<usize>,
    /// Constraints `(earlier placement index, width)` checked at each step.
    checks: Vec<Vec<(usize, usize)>>,
    /// `rank[k]`: position of placed vertex `k` in the ordering `ψ`.
    rank: Option<Vec<usize>>,
}

fn class_widths(
    t: &TestGraph,
    widths: &BTreeMap<String, usize>,
) -> Result<Vec<(usize, usize, usize)>, LtdError> {
    let mut out = Vec::new();
    for class in t.edge_classes() {
        let mut b = usize::MAX;
        for label in class.counts.keys() {
            b = b.min(
                *widths
                    .get(label)
                    .ok_or_else(|| LtdError::MissingWidth(label.clone()))?,
            );
        }
        if !class.is_loop() {
            let (u, v) = class.endpoints;
            out.push((t.index_of(u).unwrap(), t.index_of(v).unwrap(), b));
        }
    }
    Ok(out)
}

fn layout(
    t: &TestGraph,
    classes: &[(usize, usize, usize)],
    ordering: Option<&[VertexId]>,
) -> Result<Layout, LtdError> {
    let k = t.vertex_count();
    let mut adj: Vec<Vec<(usize, usize)>> = vec![Vec::new(); k];
    for &(u, v, b) in classes {
        adj[u].push((v, b));
        adj[v].push((u, b));
    }
    let mut placed = vec![usize::MAX; k];
    let mut order = vec![0];
    let mut parent = vec![0];
    let mut parent_width = vec![0];
    placed[0] = 0;
    let mut head = 0;
    while head < order.len() {
        let v = order[head];
        for &(u, b) in &adj[v] {
            if placed[u] == usize::MAX {
                placed[u] = order.len();
                order.push(u);
                parent.push(head);
                parent_width.push(b);
            }
        }
        head += 1;
    }
    let mut checks = vec![Vec::new(); k];
    for &(u, v, b) in classes {
        let (a, c) = (placed[u].min(placed[v]), placed[u].max(placed[v]));
        checks[c].push((a, b));
    }
    let rank = match ordering {
        None => None,
        Some(psi) => {
            let mut sorted: Vec<VertexId> = psi.to_vec();
            sorted.sort_unstable();
            if sorted != t.vertices() {
                return Err(LtdError::OutOfDomain(
                    "ordering must list every vertex once".into(),
                ));
            }
            let mut rank = vec![0; k];
            for (r, v) in psi.iter().enumerate() {
                rank[placed[t.index_of(*v).unwrap()]] = r;
            }
            Some(rank)
        }
    };
    Ok(Layout {
        order,
        parent,
        parent_width,
        checks,
        rank,
    })
}

fn count_from(layout: &Layout, n: usize, phi: &mut Vec<usize>) -> u64 {
    let step = phi.len();
    if step == layout.order.len() {
        return 1;
    }
    let center = phi[layout.parent[step]];
    let b = layout.parent_width[step];
    let lo = center.saturating_sub(b);
    let hi = (center + b).min(n - 1);
    let mut total = 0;
    'candidates: for x in lo..=hi {
        if phi.contains(&x) {
            continue;
        }
        for &(a, w) in &layout.checks[step] {
            if phi[a].abs_diff(x) > w {
                continue 'candidates;
            }
        }
        if let Some(rank) = &layout.rank {
            for (a, &y) in phi.iter().enumerate() {
                if (rank[a] < rank[step]) != (y < x) {
                    continue 'candidates;
                }
            }
        }
        phi.push(x);
        total += count_from(layout, n, phi);
        phi.pop();
    }
    total
}

/// Number of injective band-constrained labelings of `t` into `[n]`,
/// restricted to those whose value order is `ordering` (listed from the
/// smallest value up) when one is given.
pub fn fixed_band_count(
    t: &TestGraph,
    widths: &BTreeMap<String, usize>,
    n: usize,
    ordering: Option<&[VertexId]>,
) -> Result<u64, LtdError> {
    let classes = class_widths(t, widths)?;
    let layout = layout(t, &classes, ordering)?;
    let work = n as f64
        * layout.parent_width[1..]
            .iter()
            .map(|&b| 2.0 * b as f64)
            .product::<f64>();
    if work > COUNT_GUARD {
        return Err(LtdError::CountGuard { work });
    }
    if n < t.vertex_count() {
        return Ok(0);
    }
    Ok((0..n)
        .into_par_iter()
        .map(|r| count_from(&layout, n, &mut vec![r]))
        .sum())
}

/// `∏` over the spanning tree used for counting of `2b`: `A_n ≤ n` times this.
pub fn count_bound(t: &TestGraph, widths: &BTreeMap<String, usize>) -> Result<f64, LtdError> {
    let classes = class_widths(t, widths)?;
    let layout = layout(t, &classes, None)?;
    Ok(layout.parent_width[1..]
        .iter()
        .map(|&b| 2.0 * b as f64)
        .product())
}

/// `S(T)`: the product over twin-edge classes of the entry moments of each
/// label raised to its multiplicity, diagonal moments for loops.
pub fn moment_factor(
    t: &TestGraph,
    laws: &BTreeMap<String, EntryMoments>,
) -> Result<f64, LtdError> {
    let mut s = 1.0;
    for class in t.edge_classes() {
        for (label, count) in &class.counts {
            let law = laws.get(label).ok_or_else(|| LtdError::MissingMoment {
                label: label.clone(),
                order: 0,
            })?;
            let seq = if class.is_loop() {
                &law.diag
            } else {
                &law.offdiag
            };
            let k = count.total();
            s *= *seq.get(k).ok_or_else(|| LtdError::MissingMoment {
                label: label.clone(),
                order: k,
            })?;
        }
    }
    Ok(s)
}

/// Fixed-band estimate over a grid of dimensions.
#[derive(Clone, Debug, PartialEq)]
pub struct FixedBandEstimate {
    /// `(n, A_n)` for each grid point.
    pub counts: Vec<(usize, u64)>,
    /// `max_n A_n / n`, a lower bound on the limit `p`.
    pub p_lower: f64,
    /// Whether `A_n / n` is non-decreasing along the grid.
    pub monotone: bool,
    /// `∏_e √(2b_e + 1)` over all edges.
    pub normalization: f64,
    pub moment_factor: f64,
    /// `p_lower / normalization · moment_factor`.
    pub ltd: f64,
    /// `∏_tree 2b / normalization · |moment_factor|`, an upper bound on `|ltd|`.
    pub bound: f64,
}

/// Estimates the fixed-band limit of `t` for real entry laws.
pub fn fixed_band_ltd(
    t: &TestGraph,
    widths: &BTreeMap<String, usize>,
    laws: &BTreeMap<String, EntryMoments>,
    grid: &[usize],
) -> Result<FixedBandEstimate, LtdError> {
    if grid.is_empty() {
        return Err(LtdError::OutOfDomain("empty dimension grid".into()));
    }
    let factor = moment_factor(t, laws)?;
    let mut counts = Vec::with_capacity(grid.len());
    for &n in grid {
        counts.push((n, fixed_band_count(t, widths, n, None)?));
    }
    let ratios: Vec<f64> = counts.iter().map(|&(n, a)| a as f64 / n as f64).collect();
    let p_lower = ratios.iter().copied().fold(0.0, f64::max);
    let monotone = ratios.windows(2).all(|w| w[0] <= w[1]);
    let mut normalization = 1.0;
    for e in t.edges() {
        let b = *widths
            .get(&e.label)
            .ok_or_else(|| LtdError::MissingWidth(e.label.clone()))?;
        normalization *= (2.0 * b as f64 + 1.0).sqrt();
    }
    let bound = count_bound(t, widths)? / normalization * factor.abs();
    Ok(FixedBandEstimate {
        counts,
        p_lower,
        monotone,
        normalization,
        moment_factor: factor,
        ltd: p_lower / normalization * factor,
        bound,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use traffic_graph::Edge;

    fn widths(b: usize) -> BTreeMap<String, usize> {
        BTreeMap::from([("x".to_string(), b)])
    }

    #[test]
    fn single_pad_counts() {
        let t = TestGraph::from_edges(vec![Edge::new(0, 1, "x"), Edge::new(1, 0, "x")]).unwrap();
        // Ordered pairs at distance 1 or 2 in [10].
        assert_eq!(
            fixed_band_count(&t, &widths(2), 10, None).unwrap(),
            2 * (9 + 8)
        );
        assert_eq!(
            fixed_band_count(&t, &widths(2), 10, Some(&[0, 1])).unwrap(),
            17
        );
        assert_eq!(fixed_band_count(&t, &widths(2), 1, None).unwrap(), 0);
    }

    #[test]
    fn guard() {
        let t = TestGraph::from_edges(vec![Edge::new(0, 1, "x"), Edge::new(1, 0, "x")]).unwrap();
        assert!(matches!(
            fixed_band_count(&t, &widths(100), 1_000_000, None),
            Err(LtdError::CountGuard { .. })
        ));
    }
}
