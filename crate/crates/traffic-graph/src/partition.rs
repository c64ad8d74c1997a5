//! Set partitions, the Möbius function of the partition lattice, and pair
//! partitions.
//!
//! Partitions are enumerated in restricted-growth-string order: position `i`
//! of the string holds the block index of the `i`-th ground element, and each
//! entry exceeds the running maximum by at most one.

use std::collections::BTreeMap;

use crate::error::GraphError;
use crate::graph::VertexId;

/// Largest ground set accepted by the enumerators.
pub const BELL_GUARD: usize = 14;

/// A set partition with blocks sorted internally and ordered by their
/// smallest element.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Partition {
    blocks: Vec<Vec<VertexId>>,
}

impl Partition {
    /// Validates disjointness and non-emptiness, then normalizes the order.
    pub fn new(blocks: Vec<Vec<VertexId>>) -> Result<Self, GraphError> {
        let mut blocks = blocks;
        for b in &mut blocks {
            if b.is_empty() {
                return Err(GraphError::MalformedPartition);
            }
            b.sort_unstable();
            if b.windows(2).any(|w| w[0] == w[1]) {
                return Err(GraphError::MalformedPartition);
            }
        }
        blocks.sort();
        let mut all: Vec<VertexId> = blocks.iter().flatten().copied().collect();
        all.sort_unstable();
        if all.windows(2).any(|w| w[0] == w[1]) {
            return Err(GraphError::MalformedPartition);
        }
        Ok(Partition { blocks })
    }

    /// The finest partition `0_V`.
    pub fn singletons(ground: &[VertexId]) -> Self {
        let mut blocks: Vec<Vec<VertexId>> = ground.iter().map(|&v| vec![v]).collect();
        blocks.sort();
        blocks.dedup();
        Partition { blocks }
    }

    /// The coarsest partition `1_V`.
    pub fn single_block(ground: &[VertexId]) -> Self {
        let mut b = ground.to_vec();
        b.sort_unstable();
        b.dedup();
        Partition { blocks: vec![b] }
    }

    /// Builds the partition of `ground` whose block indices are `labels`.
    pub fn from_block_labels(ground: &[VertexId], labels: &[usize]) -> Self {
        let mut map: BTreeMap<usize, Vec<VertexId>> = BTreeMap::new();
        for (&v, &l) in ground.iter().zip(labels) {
            map.entry(l).or_default().push(v);
        }
        let mut blocks: Vec<Vec<VertexId>> = map.into_values().collect();
        for b in &mut blocks {
            b.sort_unstable();
        }
        blocks.sort();
        Partition { blocks }
    }

    pub fn blocks(&self) -> &[Vec<VertexId>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    /// Sorted ground set.
    pub fn ground(&self) -> Vec<VertexId> {
        let mut g: Vec<VertexId> = self.blocks.iter().flatten().copied().collect();
        g.sort_unstable();
        g
    }

    /// Index of the block containing `v`.
    pub fn block_of(&self, v: VertexId) -> Option<usize> {
        self.blocks.iter().position(|b| b.binary_search(&v).is_ok())
    }

    /// True if every block of `self` lies inside a block of `other`.
    pub fn refines(&self, other: &Partition) -> bool {
        self.ground() == other.ground()
            && self.blocks.iter().all(|b| {
                let target = other.block_of(b[0]);
                b.iter().all(|&v| other.block_of(v) == target)
            })
    }

    /// Least upper bound in the refinement order.
    pub fn join(&self, other: &Partition) -> Partition {
        let ground = self.ground();
        let mut parent: BTreeMap<VertexId, VertexId> = ground.iter().map(|&v| (v, v)).collect();
        fn find(parent: &mut BTreeMap<VertexId, VertexId>, mut x: VertexId) -> VertexId {
            while parent[&x] != x {
                x = parent[&x];
            }
            x
        }
        for b in self.blocks.iter().chain(other.blocks.iter()) {
            for w in b.windows(2) {
                let (ra, rb) = (find(&mut parent, w[0]), find(&mut parent, w[1]));
                if ra != rb {
                    parent.insert(ra.max(rb), ra.min(rb));
                }
            }
        }
        let mut groups: BTreeMap<VertexId, Vec<VertexId>> = BTreeMap::new();
        for &v in &ground {
            let r = find(&mut parent, v);
            groups.entry(r).or_default().push(v);
        }
        Partition {
            blocks: groups.into_values().collect(),
        }
    }
}

/// Iterator over all partitions of a ground set in restricted-growth order.
#[derive(Clone, Debug)]
pub struct PartitionIter {
    ground: Vec<VertexId>,
    rgs: Vec<usize>,
    maxes: Vec<usize>,
    done: bool,
}

impl Iterator for PartitionIter {
    type Item = Partition;

    fn next(&mut self) -> Option<Partition> {
        if self.done {
            return None;
        }
        let out = Partition::from_block_labels(&self.ground, &self.rgs);
        self.done = !advance_rgs(&mut self.rgs, &mut self.maxes);
        Some(out)
    }
}

/// Advances a restricted growth string; `maxes[i]` is the maximum of
/// `rgs[..i]`. Returns false once the last string has been produced.
fn advance_rgs(rgs: &mut [usize], maxes: &mut [usize]) -> bool {
    let n = rgs.len();
    for i in (1..n).rev() {
        if rgs[i] <= maxes[i] {
            rgs[i] += 1;
            for j in i + 1..n {
                rgs[j] = 0;
                maxes[j] = maxes[j - 1].max(rgs[j - 1]);
            }
            return true;
        }
    }
    false
}

/// All partitions of `ground`, each exactly once. The ground set must not
/// exceed [`BELL_GUARD`] elements.
pub fn enumerate_partitions(ground: &[VertexId]) -> Result<PartitionIter, GraphError> {
    let mut g = ground.to_vec();
    g.sort_unstable();
    g.dedup();
    if g.len() > BELL_GUARD {
        return Err(GraphError::PartitionGuard {
            size: g.len(),
            cap: BELL_GUARD,
        });
    }
    let n = g.len();
    Ok(PartitionIter {
        ground: g,
        rgs: vec![0; n],
        maxes: vec![0; n],
        done: n == 0,
    })
}

/// Calls `f` with every restricted growth string of length `n`, optionally
/// restricted to exactly `blocks` blocks. Strings arrive in lexicographic
/// order.
pub fn for_each_rgs(
    n: usize,
    blocks: Option<usize>,
    mut f: impl FnMut(&[usize]),
) -> Result<(), GraphError> {
    if n > BELL_GUARD {
        return Err(GraphError::PartitionGuard {
            size: n,
            cap: BELL_GUARD,
        });
    }
    if n == 0 {
        return Ok(());
    }
    if let Some(k) = blocks {
        if k == 0 || k > n {
            return Ok(());
        }
    }
    let mut rgs = vec![0usize; n];
    fn rec(
        i: usize,
        used: usize,
        rgs: &mut Vec<usize>,
        target: Option<usize>,
        f: &mut dyn FnMut(&[usize]),
    ) {
        let n = rgs.len();
        if i == n {
            if target.is_none_or(|k| used == k) {
                f(rgs);
            }
            return;
        }
        let remaining = n - i;
        let limit = match target {
            Some(k) => {
                if used + remaining < k {
                    return;
                }
                used.min(k - 1)
            }
            None => used,
        };
        for b in 0..=limit {
            rgs[i] = b;
            rec(i + 1, used.max(b + 1), rgs, target, f);
        }
    }
    rgs[0] = 0;
    rec(1, 1, &mut rgs, blocks, &mut f);
    Ok(())
}

/// `μ(0_V, π) = ∏_B (−1)^{|B|−1} (|B|−1)!`.
pub fn mobius_zero(pi: &Partition) -> i64 {
    mobius_from_sizes(pi.blocks.iter().map(Vec::len))
}

/// Möbius value from block sizes alone.
pub fn mobius_from_sizes(sizes: impl IntoIterator<Item = usize>) -> i64 {
    sizes
        .into_iter()
        .map(|s| {
            let fact: i64 = (1..s as i64).product();
            if s % 2 == 0 {
                -fact
            } else {
                fact
            }
        })
        .product()
}

/// Möbius value of the partition described by a restricted growth string.
pub fn mobius_rgs(rgs: &[usize]) -> i64 {
    let k = rgs.iter().copied().max().map_or(0, |m| m + 1);
    let mut sizes = vec![0usize; k];
    for &b in rgs {
        sizes[b] += 1;
    }
    mobius_from_sizes(sizes)
}

/// All pairings of `{0, …, size−1}`; there are `(size−1)!!` of them.
pub fn pair_partitions(size: usize) -> Result<Vec<Partition>, GraphError> {
    if size % 2 == 1 {
        return Err(GraphError::OddPairing(size));
    }
    if size > BELL_GUARD {
        return Err(GraphError::PartitionGuard {
            size,
            cap: BELL_GUARD,
        });
    }
    let mut out = Vec::new();
    let mut current: Vec<Vec<VertexId>> = Vec::new();
    let mut free: Vec<VertexId> = (0..size as VertexId).collect();
    fn rec(free: &mut Vec<VertexId>, current: &mut Vec<Vec<VertexId>>, out: &mut Vec<Partition>) {
        if free.is_empty() {
            out.push(Partition {
                blocks: current.clone(),
            });
            return;
        }
        let first = free.remove(0);
        for i in 0..free.len() {
            let partner = free.remove(i);
            current.push(vec![first, partner]);
            rec(free, current, out);
            current.pop();
            free.insert(i, partner);
        }
        free.insert(0, first);
    }
    if size > 0 {
        rec(&mut free, &mut current, &mut out);
    } else {
        out.push(Partition { blocks: Vec::new() });
    }
    Ok(out)
}
