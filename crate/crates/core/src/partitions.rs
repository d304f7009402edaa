//! Set partitions of {1,…,n}, noncrossing structure, the nesting order on
//! blocks, label functions, and enumeration of the admissible labeled
//! partition classes whose weighted cardinalities give the vacuum
//! moments.
//!
//! The two classes of interest collect noncrossing partitions with block
//! sizes at most two, no outer singletons, every singleton labeled like
//! the block that immediately nests it, and labels that grow weakly
//! (weakly monotone class) or strictly on strictly nested two-blocks
//! (monotone class) when moving inward along the nesting order.

use serde::{Deserialize, Serialize};
use std::collections::BTreeSet;
use std::fmt;
use thiserror::Error;

/// Default enumeration cap for the labeled classes.
pub const ENUMERATION_CAP: usize = 12;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum PartitionError {
    #[error("blocks do not form a partition of 1..={n}")]
    NotAPartition { n: usize },
    #[error("operation requires a noncrossing partition")]
    Crossing,
    #[error("label count {labels} does not match block count {blocks}")]
    LabelMismatch { labels: usize, blocks: usize },
    #[error("label {label} outside 1..={m}")]
    LabelRange { label: usize, m: usize },
    #[error("size {n} exceeds the enumeration cap {cap}")]
    SizeCap { n: usize, cap: usize },
}

/// Partition of {1,…,n}. Blocks are sorted internally and ordered by
/// minimum element, so equality is structural.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct Partition {
    n: usize,
    blocks: Vec<Vec<usize>>,
}

impl Partition {
    pub fn new(n: usize, mut blocks: Vec<Vec<usize>>) -> Result<Self, PartitionError> {
        let mut seen = BTreeSet::new();
        for b in &mut blocks {
            b.sort_unstable();
            if b.is_empty() {
                return Err(PartitionError::NotAPartition { n });
            }
            for &x in b.iter() {
                if x < 1 || x > n || !seen.insert(x) {
                    return Err(PartitionError::NotAPartition { n });
                }
            }
        }
        if seen.len() != n {
            return Err(PartitionError::NotAPartition { n });
        }
        blocks.sort_by_key(|b| b[0]);
        Ok(Partition { n, blocks })
    }

    pub fn ground_size(&self) -> usize {
        self.n
    }

    pub fn blocks(&self) -> &[Vec<usize>] {
        &self.blocks
    }

    pub fn block_count(&self) -> usize {
        self.blocks.len()
    }

    pub fn singleton_count(&self) -> usize {
        self.blocks.iter().filter(|b| b.len() == 1).count()
    }

    /// True iff no two blocks interleave as v₁ < w₁ < v₂ < w₂.
    pub fn is_noncrossing(&self) -> bool {
        // scan left to right with a stack of open blocks
        let mut owner = vec![0usize; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x] = i;
            }
        }
        let mut open: Vec<usize> = Vec::new();
        for x in 1..=self.n {
            let b = owner[x];
            let block = &self.blocks[b];
            if block[0] == x {
                if block.len() > 1 {
                    open.push(b);
                }
            } else {
                // a non-minimal element must close or continue the innermost open block
                match open.last() {
                    Some(&top) if top == b => {
                        if *block.last().unwrap() == x {
                            open.pop();
                        }
                    }
                    _ => return false,
                }
            }
        }
        true
    }

    /// Nesting structure of a noncrossing partition: for every block its
    /// immediately enclosing block, if any.
    pub fn nesting(&self) -> Result<Nesting, PartitionError> {
        if !self.is_noncrossing() {
            return Err(PartitionError::Crossing);
        }
        let mut parent = vec![None; self.blocks.len()];
        let mut owner = vec![0usize; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x] = i;
            }
        }
        let mut open: Vec<usize> = Vec::new();
        for x in 1..=self.n {
            let b = owner[x];
            if self.blocks[b][0] == x {
                parent[b] = open.last().copied();
                if self.blocks[b].len() > 1 {
                    open.push(b);
                }
            } else if *self.blocks[b].last().unwrap() == x {
                open.pop();
            }
        }
        Ok(Nesting { parent })
    }

    /// Splits at the points where every block seen so far is closed; each
    /// factor is renumbered to its own ground set {1,…,k}.
    pub fn irreducible_factors(&self) -> Result<Vec<Partition>, PartitionError> {
        if !self.is_noncrossing() {
            return Err(PartitionError::Crossing);
        }
        let mut owner = vec![0usize; self.n + 1];
        for (i, b) in self.blocks.iter().enumerate() {
            for &x in b {
                owner[x] = i;
            }
        }
        let mut factors = Vec::new();
        let mut start = 1usize;
        let mut max_reach = 0usize;
        for x in 1..=self.n {
            max_reach = max_reach.max(*self.blocks[owner[x]].last().unwrap());
            if max_reach == x {
                let len = x - start + 1;
                let blocks: Vec<Vec<usize>> = self
                    .blocks
                    .iter()
                    .filter(|b| b[0] >= start && b[0] <= x)
                    .map(|b| b.iter().map(|&v| v - start + 1).collect())
                    .collect();
                factors.push(Partition::new(len, blocks).expect("factor is a valid partition"));
                start = x + 1;
            }
        }
        Ok(factors)
    }
}

impl fmt::Debug for Partition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Partition{:?}", self.blocks)
    }
}

/// Parent links of the nesting order. Blocks are indexed in the canonical
/// (minimum-element) order of the partition they came from. The order
/// runs outward-to-inward: an inner block is larger, and it covers the
/// block that immediately encloses it.
#[derive(Debug, Clone)]
pub struct Nesting {
    parent: Vec<Option<usize>>,
}

impl Nesting {
    /// Immediately enclosing block, i.e. the unique block the given block
    /// covers in the nesting order.
    pub fn parent(&self, block: usize) -> Option<usize> {
        self.parent[block]
    }

    pub fn is_outer(&self, block: usize) -> bool {
        self.parent[block].is_none()
    }

    /// True iff `inner` is nested (strictly or not) inside `outer`.
    pub fn encloses(&self, outer: usize, inner: usize) -> bool {
        let mut cur = Some(inner);
        while let Some(b) = cur {
            if b == outer {
                return true;
            }
            cur = self.parent[b];
        }
        false
    }

    pub fn depth(&self, block: usize) -> usize {
        let mut d = 0;
        let mut cur = self.parent[block];
        while let Some(b) = cur {
            d += 1;
            cur = self.parent[b];
        }
        d
    }

    pub fn block_count(&self) -> usize {
        self.parent.len()
    }
}

/// A partition together with one label per block (same order as the
/// canonical block order), labels in {1,…,m}.
#[derive(Clone, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub struct LabeledPartition {
    pub partition: Partition,
    pub labels: Vec<usize>,
}

impl LabeledPartition {
    pub fn new(
        partition: Partition,
        labels: Vec<usize>,
        m: usize,
    ) -> Result<Self, PartitionError> {
        if labels.len() != partition.block_count() {
            return Err(PartitionError::LabelMismatch {
                labels: labels.len(),
                blocks: partition.block_count(),
            });
        }
        for &l in &labels {
            if l < 1 || l > m {
                return Err(PartitionError::LabelRange { label: l, m });
            }
        }
        Ok(LabeledPartition { partition, labels })
    }

    pub fn singleton_count(&self) -> usize {
        self.partition.singleton_count()
    }

    /// True iff every singleton carries the label of the block that
    /// immediately encloses it. Outer singletons are unconstrained.
    pub fn respects_singleton_labels(&self) -> bool {
        let nesting = match self.partition.nesting() {
            Ok(n) => n,
            Err(_) => return false,
        };
        self.partition.blocks().iter().enumerate().all(|(i, b)| {
            b.len() > 1
                || match nesting.parent(i) {
                    Some(p) => self.labels[i] == self.labels[p],
                    None => true,
                }
        })
    }

    /// Weak monotonicity: labels never decrease moving inward along the
    /// nesting order.
    pub fn is_weakly_monotone(&self) -> bool {
        let nesting = match self.partition.nesting() {
            Ok(n) => n,
            Err(_) => return false,
        };
        (0..self.labels.len()).all(|i| match nesting.parent(i) {
            Some(p) => self.labels[p] <= self.labels[i],
            None => true,
        })
    }

    /// Monotonicity: weakly monotone, and labels strictly increase
    /// between strictly nested blocks that both have two elements.
    pub fn is_monotone(&self) -> bool {
        if !self.is_weakly_monotone() {
            return false;
        }
        let blocks = self.partition.blocks();
        let nesting = self.partition.nesting().expect("checked noncrossing");
        for i in 0..blocks.len() {
            if blocks[i].len() < 2 {
                continue;
            }
            // walk outward: every enclosing 2-block must carry a smaller label
            let mut cur = nesting.parent(i);
            while let Some(p) = cur {
                if blocks[p].len() >= 2 && self.labels[p] >= self.labels[i] {
                    return false;
                }
                cur = nesting.parent(p);
            }
        }
        true
    }
}

impl fmt::Debug for LabeledPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LabeledPartition{:?}/{:?}", self.partition.blocks(), self.labels)
    }
}

/// Nesting forest of a labeled noncrossing partition: one tree per outer
/// block, children ordered by minimum element.
#[derive(Debug, Clone)]
pub struct NestingForest {
    pub roots: Vec<usize>,
    pub children: Vec<Vec<usize>>,
    pub labels: Vec<usize>,
    pub blocks: Vec<Vec<usize>>,
}

impl NestingForest {
    pub fn tree_count(&self) -> usize {
        self.roots.len()
    }

    pub fn depth(&self) -> usize {
        fn rec(f: &NestingForest, b: usize) -> usize {
            1 + f.children[b].iter().map(|&c| rec(f, c)).max().unwrap_or(0)
        }
        self.roots.iter().map(|&r| rec(self, r)).max().unwrap_or(0)
    }

    /// Indented text rendering, one line per block.
    pub fn render_text(&self) -> String {
        fn rec(f: &NestingForest, b: usize, indent: usize, out: &mut String) {
            out.push_str(&"  ".repeat(indent));
            out.push_str(&format!("{:?} [{}]\n", f.blocks[b], f.labels[b]));
            for &c in &f.children[b] {
                rec(f, c, indent + 1, out);
            }
        }
        let mut out = String::new();
        for &r in &self.roots {
            rec(self, r, 0, &mut out);
        }
        out
    }

    /// Graphviz DOT rendering; node names are block indices, node labels
    /// show the block contents and its label.
    pub fn render_dot(&self) -> String {
        let mut out = String::from("digraph nesting_forest {\n");
        for (i, b) in self.blocks.iter().enumerate() {
            out.push_str(&format!(
                "  b{} [label=\"{:?} / {}\"];\n",
                i, b, self.labels[i]
            ));
        }
        for (p, kids) in self.children.iter().enumerate() {
            for &c in kids {
                out.push_str(&format!("  b{p} -> b{c};\n"));
            }
        }
        out.push_str("}\n");
        out
    }
}

/// Builds the nesting forest of a labeled noncrossing partition.
pub fn nesting_forest(lp: &LabeledPartition) -> Result<NestingForest, PartitionError> {
    let nesting = lp.partition.nesting()?;
    let count = lp.partition.block_count();
    let mut roots = Vec::new();
    let mut children = vec![Vec::new(); count];
    for b in 0..count {
        match nesting.parent(b) {
            Some(p) => children[p].push(b),
            None => roots.push(b),
        }
    }
    Ok(NestingForest {
        roots,
        children,
        labels: lp.labels.clone(),
        blocks: lp.partition.blocks().to_vec(),
    })
}

/// All noncrossing partitions of {1,…,n} with block sizes ≤ 2 and no
/// outer singletons, in the deterministic order produced by recursing on
/// the leftmost unassigned element (singleton first, then pairs by
/// increasing partner).
pub fn enumerate_nc_le2_no_outer_singletons(n: usize) -> Result<Vec<Partition>, PartitionError> {
    if n > ENUMERATION_CAP {
        return Err(PartitionError::SizeCap { n, cap: ENUMERATION_CAP });
    }
    // Block lists covering the segment lo..=hi. Singletons are admitted
    // only when the segment sits inside some enclosing pair.
    fn gen(lo: usize, hi: usize, inner: bool) -> Vec<Vec<Vec<usize>>> {
        if lo > hi {
            return vec![Vec::new()];
        }
        let mut out = Vec::new();
        if inner {
            for rest in gen(lo + 1, hi, inner) {
                let mut blocks = vec![vec![lo]];
                blocks.extend(rest);
                out.push(blocks);
            }
        }
        for j in (lo + 1)..=hi {
            for mid in gen(lo + 1, j - 1, true) {
                for rest in gen(j + 1, hi, inner) {
                    let mut blocks = vec![vec![lo, j]];
                    blocks.extend(mid.iter().cloned());
                    blocks.extend(rest);
                    out.push(blocks);
                }
            }
        }
        out
    }
    gen(1, n, false)
        .into_iter()
        .map(|blocks| Partition::new(n, blocks))
        .collect()
}

/// Labeling order for the admissible classes.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum LabelOrder {
    /// Weakly increasing labels inward.
    WeaklyMonotone,
    /// Strictly increasing labels between nested two-blocks.
    Monotone,
}

/// Enumerates the admissible labeled class on {1,…,n} with labels in
/// {1,…,m}: noncrossing, block sizes ≤ 2, no outer singletons, singleton
/// labels inherited from the enclosing block, and label order as given.
pub fn enumerate_admissible(
    order: LabelOrder,
    m: usize,
    n: usize,
) -> Result<Vec<LabeledPartition>, PartitionError> {
    assert!(m >= 1, "label set must be nonempty");
    let shapes = enumerate_nc_le2_no_outer_singletons(n)?;
    let mut out = Vec::new();
    for shape in shapes {
        let nesting = shape.nesting().expect("shapes are noncrossing");
        let blocks = shape.blocks();
        let count = blocks.len();
        // assign labels in canonical block order; a parent always precedes
        // its children because it has the smaller minimum
        let mut labels = vec![0usize; count];
        fn assign(
            i: usize,
            m: usize,
            order: LabelOrder,
            blocks: &[Vec<usize>],
            nesting: &Nesting,
            labels: &mut Vec<usize>,
            shape: &Partition,
            out: &mut Vec<LabeledPartition>,
        ) {
            if i == blocks.len() {
                out.push(LabeledPartition {
                    partition: shape.clone(),
                    labels: labels.clone(),
                });
                return;
            }
            if blocks[i].len() == 1 {
                let p = nesting.parent(i).expect("no outer singletons here");
                labels[i] = labels[p];
                assign(i + 1, m, order, blocks, nesting, labels, shape, out);
                return;
            }
            // nearest enclosing two-block dictates the lower bound
            let mut lower = 1usize;
            let mut cur = nesting.parent(i);
            while let Some(p) = cur {
                if blocks[p].len() >= 2 {
                    lower = match order {
                        LabelOrder::WeaklyMonotone => labels[p],
                        LabelOrder::Monotone => labels[p] + 1,
                    };
                    break;
                }
                cur = nesting.parent(p);
            }
            for l in lower..=m {
                labels[i] = l;
                assign(i + 1, m, order, blocks, nesting, labels, shape, out);
            }
        }
        assign(0, m, order, blocks, &nesting, &mut labels, &shape, &mut out);
    }
    Ok(out)
}

/// The weakly monotone admissible class.
pub fn enumerate_anc_wm(m: usize, n: usize) -> Result<Vec<LabeledPartition>, PartitionError> {
    enumerate_admissible(LabelOrder::WeaklyMonotone, m, n)
}

/// The monotone admissible class.
pub fn enumerate_anc_mono(m: usize, n: usize) -> Result<Vec<LabeledPartition>, PartitionError> {
    enumerate_admissible(LabelOrder::Monotone, m, n)
}

/// All partitions of {1,…,n} into consecutive intervals, in bijection
/// with the 2^(n-1) compositions of n; ordered by composition
/// lexicographically.
pub fn enumerate_interval_partitions(n: usize) -> Vec<Partition> {
    compositions(n)
        .into_iter()
        .map(|parts| {
            let mut blocks = Vec::with_capacity(parts.len());
            let mut start = 1usize;
            for q in parts {
                blocks.push((start..start + q).collect());
                start += q;
            }
            Partition::new(n, blocks).expect("intervals form a partition")
        })
        .collect()
}

/// Compositions of n into positive parts, lexicographic.
pub fn compositions(n: usize) -> Vec<Vec<usize>> {
    fn rec(n: usize, acc: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if n == 0 {
            out.push(acc.clone());
            return;
        }
        for q in 1..=n {
            acc.push(q);
            rec(n - q, acc, out);
            acc.pop();
        }
    }
    let mut out = Vec::new();
    if n == 0 {
        return vec![Vec::new()];
    }
    rec(n, &mut Vec::new(), &mut out);
    out
}
