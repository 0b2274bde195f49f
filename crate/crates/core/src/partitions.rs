//! The monoid of set partitions of `{1..n}` under the join product, with the
//! refinement order, the symmetric-group action and the quotient/product
//! operators used by closure combinatorics.
//!
//! A partition is stored as its restricted growth string: `rgs[i]` is the
//! index of the block containing point `i+1`, blocks numbered by first
//! occurrence. This is exactly the standard indexation (blocks ordered by
//! minimum), so equality, hashing and ordering are structural.

use std::fmt;
use std::str::FromStr;

use rand::Rng;
use thiserror::Error;

use crate::perm::Perm;

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum PartitionError {
    #[error("pair indices must satisfy 1 <= i < j <= n, got ({i}, {j}) with n = {n}")]
    BadPair { i: usize, j: usize, n: usize },
    #[error("invalid partition of {{1..{n}}}: {msg}")]
    Invalid { n: usize, msg: String },
    #[error("partition parse error: {0}")]
    Parse(String),
}

#[derive(Debug, Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct SetPartition {
    rgs: Vec<u8>,
}

impl SetPartition {
    /// The all-singletons partition, identity of the join monoid.
    pub fn singletons(n: usize) -> Self {
        assert!(n >= 1, "ground set must be non-empty");
        SetPartition {
            rgs: (0..n as u8).collect(),
        }
    }

    /// The single-block partition.
    pub fn full(n: usize) -> Self {
        assert!(n >= 1);
        SetPartition { rgs: vec![0; n] }
    }

    /// Partition with one block `{i, j}`, all other points singletons.
    pub fn mu(i: usize, j: usize, n: usize) -> Result<Self, PartitionError> {
        if !(1 <= i && i < j && j <= n) {
            return Err(PartitionError::BadPair { i, j, n });
        }
        let mut p = Self::singletons(n);
        p.union_points(i - 1, j - 1);
        Ok(p)
    }

    /// Build from blocks over 1-based points. Blocks may be listed in any
    /// order; they must be disjoint, non-empty and cover `{1..n}`.
    pub fn from_blocks(n: usize, blocks: &[Vec<usize>]) -> Result<Self, PartitionError> {
        let invalid = |msg: &str| PartitionError::Invalid {
            n,
            msg: msg.to_string(),
        };
        if n == 0 {
            return Err(invalid("empty ground set"));
        }
        let mut owner = vec![usize::MAX; n];
        for (bi, block) in blocks.iter().enumerate() {
            if block.is_empty() {
                return Err(invalid("empty block"));
            }
            for &p in block {
                if p < 1 || p > n {
                    return Err(invalid(&format!("point {} out of range", p)));
                }
                if owner[p - 1] != usize::MAX {
                    return Err(invalid(&format!("point {} repeated", p)));
                }
                owner[p - 1] = bi;
            }
        }
        if owner.iter().any(|&o| o == usize::MAX) {
            return Err(invalid("blocks do not cover the ground set"));
        }
        // Canonicalize block numbering by first occurrence.
        let mut relabel = vec![u8::MAX; blocks.len()];
        let mut next = 0u8;
        let mut rgs = Vec::with_capacity(n);
        for &o in &owner {
            if relabel[o] == u8::MAX {
                relabel[o] = next;
                next += 1;
            }
            rgs.push(relabel[o]);
        }
        Ok(SetPartition { rgs })
    }

    fn from_owner(owner: Vec<usize>) -> Self {
        let mut relabel = std::collections::HashMap::new();
        let mut next = 0u8;
        let mut rgs = Vec::with_capacity(owner.len());
        for o in owner {
            let id = *relabel.entry(o).or_insert_with(|| {
                let v = next;
                next += 1;
                v
            });
            rgs.push(id);
        }
        SetPartition { rgs }
    }

    fn union_points(&mut self, p: usize, q: usize) {
        let (bp, bq) = (self.rgs[p], self.rgs[q]);
        if bp == bq {
            return;
        }
        let owner: Vec<usize> = self
            .rgs
            .iter()
            .map(|&b| if b == bq { bp as usize } else { b as usize })
            .collect();
        *self = Self::from_owner(owner);
    }

    pub fn n(&self) -> usize {
        self.rgs.len()
    }

    pub fn num_blocks(&self) -> usize {
        self.rgs.iter().map(|&b| b as usize + 1).max().unwrap_or(0)
    }

    /// Standard-indexed blocks with 1-based sorted points.
    pub fn blocks(&self) -> Vec<Vec<usize>> {
        let mut out = vec![Vec::new(); self.num_blocks()];
        for (i, &b) in self.rgs.iter().enumerate() {
            out[b as usize].push(i + 1);
        }
        out
    }

    /// 1-based index of the block containing a 1-based point.
    pub fn block_of(&self, point: usize) -> usize {
        self.rgs[point - 1] as usize + 1
    }

    pub fn is_singletons(&self) -> bool {
        self.num_blocks() == self.n()
    }

    /// Join: the least partition refined by neither operand alone, i.e. the
    /// least upper bound in the refinement order.
    pub fn join(&self, other: &SetPartition) -> SetPartition {
        assert_eq!(self.n(), other.n(), "size mismatch");
        let mut acc = self.clone();
        for block in other.blocks() {
            for pair in block.windows(2) {
                acc.union_points(pair[0] - 1, pair[1] - 1);
            }
        }
        acc
    }

    /// Refinement order: true iff every block of `self` is contained in a
    /// block of `coarser`.
    pub fn leq(&self, coarser: &SetPartition) -> bool {
        assert_eq!(self.n(), coarser.n(), "size mismatch");
        let mut image = vec![u8::MAX; self.num_blocks()];
        for i in 0..self.n() {
            let mine = self.rgs[i] as usize;
            let theirs = coarser.rgs[i];
            if image[mine] == u8::MAX {
                image[mine] = theirs;
            } else if image[mine] != theirs {
                return false;
            }
        }
        true
    }

    /// Image partition `{w(B_1), ..., w(B_m)}`, re-standard-indexed.
    pub fn apply_perm(&self, w: &Perm) -> SetPartition {
        assert_eq!(self.n(), w.n(), "size mismatch");
        let mut owner = vec![0usize; self.n()];
        for i in 0..self.n() {
            owner[w.apply(i + 1) - 1] = self.rgs[i] as usize;
        }
        Self::from_owner(owner)
    }

    /// The multiset of block sizes, sorted.
    fn block_sizes(&self) -> Vec<usize> {
        let mut sizes: Vec<usize> = self.blocks().iter().map(|b| b.len()).collect();
        sizes.sort_unstable();
        sizes
    }

    /// A canonical witness `w` with `w(self) == other` together with the
    /// induced permutation of standard block indices, or `None` when the
    /// block-size multisets differ. Blocks are matched sorted by
    /// (size, min), elements mapped in increasing order.
    pub fn conjugate_witness(&self, other: &SetPartition) -> Option<(Perm, Perm)> {
        assert_eq!(self.n(), other.n(), "size mismatch");
        if self.block_sizes() != other.block_sizes() {
            return None;
        }
        let sort_key = |blocks: &[Vec<usize>]| -> Vec<usize> {
            let mut idx: Vec<usize> = (0..blocks.len()).collect();
            idx.sort_by_key(|&k| (blocks[k].len(), blocks[k][0]));
            idx
        };
        let ours = self.blocks();
        let theirs = other.blocks();
        let our_order = sort_key(&ours);
        let their_order = sort_key(&theirs);
        let mut images = vec![0usize; self.n()];
        for (&bi, &bj) in our_order.iter().zip(their_order.iter()) {
            for (&p, &q) in ours[bi].iter().zip(theirs[bj].iter()) {
                images[p - 1] = q;
            }
        }
        let w = Perm::from_images(&images);
        let block_perm = self.induced_block_perm(other, &w);
        Some((w, block_perm))
    }

    /// For a caller-supplied `w` with `w(self) == other`, the induced
    /// permutation of standard block indices.
    pub fn induced_block_perm(&self, other: &SetPartition, w: &Perm) -> Perm {
        assert_eq!(self.apply_perm(w), *other, "w does not map the partitions");
        let blocks = self.blocks();
        let images: Vec<usize> = blocks
            .iter()
            .map(|block| other.block_of(w.apply(block[0])))
            .collect();
        Perm::from_images(&images)
    }

    /// Quotient `self / parts`: requires `parts` to refine `self` with `m`
    /// blocks; block `i` of the result collects the standard indices of
    /// `parts`-blocks inside block `i` of `self`.
    pub fn quotient(&self, parts: &SetPartition) -> SetPartition {
        assert!(parts.leq(self), "quotient requires a refinement");
        let m = parts.num_blocks();
        let mut owner = vec![0usize; m];
        for block in parts.blocks().iter().enumerate() {
            let (k, pts) = block;
            owner[k] = self.rgs[pts[0] - 1] as usize;
        }
        Self::from_owner(owner)
    }

    /// Product `self x grouping`: `grouping` partitions the block indices of
    /// `self`; block `i` of the result merges the `self`-blocks indexed by
    /// block `i` of `grouping`. The result is coarser than `self`.
    pub fn times(&self, grouping: &SetPartition) -> SetPartition {
        assert_eq!(
            self.num_blocks(),
            grouping.n(),
            "block count does not match the grouping's ground set"
        );
        let owner: Vec<usize> = self
            .rgs
            .iter()
            .map(|&b| grouping.rgs[b as usize] as usize)
            .collect();
        Self::from_owner(owner)
    }

    /// Partition whose blocks are the cycles of `w`, fixed points included.
    pub fn from_cycles(w: &Perm) -> SetPartition {
        let mut owner = vec![0usize; w.n()];
        for (k, cycle) in w.cycles().iter().enumerate() {
            for &p in cycle {
                owner[p - 1] = k;
            }
        }
        Self::from_owner(owner)
    }

    /// Append the singleton block `{n+1}`.
    pub fn embed(&self) -> SetPartition {
        let mut rgs = self.rgs.clone();
        rgs.push(self.num_blocks() as u8);
        SetPartition { rgs }
    }

    /// Delete point `n` from its block (dropping the block if it becomes
    /// empty) and re-standardize.
    pub fn remove_last(&self) -> SetPartition {
        assert!(self.n() >= 2, "cannot shrink below one point");
        let owner: Vec<usize> = self.rgs[..self.n() - 1]
            .iter()
            .map(|&b| b as usize)
            .collect();
        Self::from_owner(owner)
    }

    /// Whether point `n` is a singleton block.
    pub fn last_is_singleton(&self) -> bool {
        let last = self.rgs[self.n() - 1];
        self.rgs[..self.n() - 1].iter().all(|&b| b != last)
    }

    /// The mates of a 1-based point (other members of its block).
    pub fn mates(&self, point: usize) -> Vec<usize> {
        let b = self.rgs[point - 1];
        (1..=self.n())
            .filter(|&p| p != point && self.rgs[p - 1] == b)
            .collect()
    }

    /// Arc generators: each point paired with the least larger element of
    /// its block. Joining `mu(i, j, n)` over the list reproduces `self`.
    pub fn gen_decomp(&self) -> Vec<(usize, usize)> {
        let mut arcs = Vec::new();
        for block in self.blocks() {
            for pair in block.windows(2) {
                arcs.push((pair[0], pair[1]));
            }
        }
        arcs.sort_unstable();
        arcs
    }

    /// All partitions of `{1..n}` in restricted-growth-string order.
    pub fn enumerate_all(n: usize) -> Vec<SetPartition> {
        let mut out = Vec::new();
        let mut rgs = vec![0u8; n];
        loop {
            out.push(SetPartition { rgs: rgs.clone() });
            // next restricted growth string
            let mut i = n;
            loop {
                if i == 1 {
                    return out;
                }
                i -= 1;
                let cap = rgs[..i].iter().copied().max().unwrap() + 1;
                if rgs[i] < cap {
                    rgs[i] += 1;
                    for k in i + 1..n {
                        rgs[k] = 0;
                    }
                    break;
                }
            }
        }
    }

    /// Uniformly random restricted growth string (not uniform over
    /// partitions, which is fine for fuzzing).
    pub fn random(n: usize, rng: &mut impl Rng) -> SetPartition {
        let mut rgs = vec![0u8; n];
        let mut max = 0u8;
        for i in 1..n {
            let v = rng.gen_range(0..=max + 1);
            rgs[i] = v;
            max = max.max(v);
        }
        SetPartition { rgs }
    }

    /// Blocks of `other` placed after `self`'s points.
    pub fn disjoint_sum(&self, other: &SetPartition) -> SetPartition {
        let shift = self.num_blocks() as u8;
        let mut rgs = self.rgs.clone();
        rgs.extend(other.rgs.iter().map(|&b| b + shift));
        SetPartition { rgs }
    }
}

/// Bell numbers `b_0..=b_n` by the Bell-triangle recurrence.
pub fn bell_numbers(n: usize) -> Vec<u128> {
    let mut row = vec![1u128];
    let mut bells = vec![1u128];
    for _ in 0..n {
        let mut next = Vec::with_capacity(row.len() + 1);
        next.push(*row.last().unwrap());
        for &v in &row {
            let last = *next.last().unwrap();
            next.push(last + v);
        }
        bells.push(next[0]);
        row = next;
    }
    bells
}

impl fmt::Display for SetPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, block) in self.blocks().iter().enumerate() {
            if k > 0 {
                write!(f, " | ")?;
            }
            let strs: Vec<String> = block.iter().map(|p| p.to_string()).collect();
            write!(f, "{}", strs.join(" "))?;
        }
        write!(f, "}}")
    }
}

/// Parses `{1 3 | 2 5 6 | 4}`. Singleton blocks may be omitted; the ground
/// set size must be supplied since it cannot be inferred from the text.
pub fn parse_partition(text: &str, n: usize) -> Result<SetPartition, PartitionError> {
    let trimmed = text.trim();
    let inner = trimmed
        .strip_prefix('{')
        .and_then(|t| t.strip_suffix('}'))
        .ok_or_else(|| PartitionError::Parse("expected '{...}'".to_string()))?;
    let mut blocks: Vec<Vec<usize>> = Vec::new();
    for chunk in inner.split('|') {
        let mut block = Vec::new();
        for token in chunk.split_whitespace() {
            let p: usize = token
                .parse()
                .map_err(|_| PartitionError::Parse(format!("bad point '{}'", token)))?;
            block.push(p);
        }
        if !block.is_empty() {
            blocks.push(block);
        }
    }
    // Add omitted singletons.
    let mut covered = vec![false; n];
    for block in &blocks {
        for &p in block {
            if p < 1 || p > n {
                return Err(PartitionError::Parse(format!(
                    "point {} out of range for n = {}",
                    p, n
                )));
            }
            covered[p - 1] = true;
        }
    }
    for p in 1..=n {
        if !covered[p - 1] {
            blocks.push(vec![p]);
        }
    }
    SetPartition::from_blocks(n, &blocks).map_err(|e| PartitionError::Parse(e.to_string()))
}

impl FromStr for SetPartition {
    type Err = PartitionError;

    /// Parses with the ground set inferred as the maximum point mentioned.
    fn from_str(s: &str) -> Result<Self, Self::Err> {
        let max = s
            .split(|c: char| !c.is_ascii_digit())
            .filter(|t| !t.is_empty())
            .map(|t| t.parse::<usize>().unwrap_or(0))
            .max()
            .unwrap_or(0);
        if max == 0 {
            return Err(PartitionError::Parse("no points found".to_string()));
        }
        parse_partition(s, max)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;
    use rand::rngs::StdRng;
    use rand::SeedableRng;

    fn pt(text: &str, n: usize) -> SetPartition {
        parse_partition(text, n).unwrap()
    }

    /// Independent join oracle: union-find transitive closure over the arcs
    /// of both partitions.
    fn join_oracle(lhs: &SetPartition, rhs: &SetPartition) -> SetPartition {
        let n = lhs.n();
        let mut parent: Vec<usize> = (0..n).collect();
        fn find(parent: &mut Vec<usize>, x: usize) -> usize {
            if parent[x] != x {
                let root = find(parent, parent[x]);
                parent[x] = root;
            }
            parent[x]
        }
        for p in [lhs, rhs] {
            for block in p.blocks() {
                for pair in block.windows(2) {
                    let (a, b) = (
                        find(&mut parent, pair[0] - 1),
                        find(&mut parent, pair[1] - 1),
                    );
                    parent[a] = b;
                }
            }
        }
        let owner: Vec<usize> = (0..n).map(|i| find(&mut parent, i)).collect();
        SetPartition::from_owner(owner)
    }

    #[test]
    fn mu_examples() {
        assert_eq!(SetPartition::mu(1, 2, 3).unwrap(), pt("{1 2 | 3}", 3));
        assert_eq!(SetPartition::mu(3, 6, 6).unwrap(), pt("{3 6}", 6));
        assert!(SetPartition::mu(2, 2, 3).is_err());
    }

    #[test]
    fn join_examples() {
        let i = pt("{1 2 | 3}", 3);
        let m = SetPartition::mu(2, 3, 3).unwrap();
        assert_eq!(i.join(&m), SetPartition::full(3));
        assert_eq!(i.join(&i), i);
        // I <= J implies I * J = J
        let j = pt("{1 2 3 | 4}", 4);
        let fine = pt("{1 2 | 3 | 4}", 4);
        assert!(fine.leq(&j));
        assert_eq!(fine.join(&j), j);
    }

    #[test]
    fn leq_examples() {
        let n = 4;
        let ones = SetPartition::singletons(n);
        let j = pt("{1 2 | 3 4}", n);
        assert!(ones.leq(&j));
        assert!(j.leq(&pt("{1 2 3 4}", n)));
        assert!(!pt("{1 3}", 3).leq(&pt("{1 2 | 3}", 3)));
    }

    #[test]
    fn apply_perm_worked_example() {
        // w = (1,6)(2,3,4,5) sends {{1,2},{3},{4,5},{6}} to
        // {{1},{2,5},{3,6},{4}} with induced block permutation (1,3,2,4).
        let i = pt("{1 2 | 3 | 4 5 | 6}", 6);
        let w = Perm::from_cycles(6, &[vec![1, 6], vec![2, 3, 4, 5]]);
        let image = i.apply_perm(&w);
        assert_eq!(image, pt("{1 | 2 5 | 3 6 | 4}", 6));
        let block_perm = i.induced_block_perm(&image, &w);
        assert_eq!(block_perm, Perm::from_cycles(4, &[vec![1, 3, 2, 4]]));
        // identity fixes everything
        assert_eq!(i.apply_perm(&Perm::identity(6)), i);
        // s1 relabels
        let p = pt("{1 3 | 2}", 3);
        assert_eq!(p.apply_perm(&Perm::transposition(3, 1)), pt("{2 3 | 1}", 3));
    }

    #[test]
    fn conjugate_witness_examples() {
        let i = pt("{1 2 | 3 | 4 5 | 6}", 6);
        let (w, bp) = i.conjugate_witness(&i).unwrap();
        assert_eq!(i.apply_perm(&w), i);
        assert!(bp.is_identity());
        assert!(pt("{1 2}", 2)
            .conjugate_witness(&SetPartition::singletons(2))
            .is_none());
        let j = pt("{1 | 2 5 | 3 6 | 4}", 6);
        let (w, _) = i.conjugate_witness(&j).unwrap();
        assert_eq!(i.apply_perm(&w), j);
    }

    #[test]
    fn quotient_examples() {
        let i = pt("{1 2 5 | 3 4}", 5);
        let k = pt("{1 2 | 3 4 | 5}", 5);
        assert_eq!(i.quotient(&k), pt("{1 3 | 2}", 3));
        assert_eq!(i.quotient(&i), SetPartition::singletons(2));
        assert_eq!(i.quotient(&SetPartition::singletons(5)), i);
    }

    #[test]
    fn times_examples() {
        let k = pt("{1 2 | 3 4 | 5}", 5);
        let j = pt("{1 3 | 2}", 3);
        assert_eq!(k.times(&j), pt("{1 2 5 | 3 4}", 5));
        assert_eq!(k.times(&SetPartition::singletons(3)), k);
    }

    #[test]
    fn times_quotient_roundtrip_random() {
        let mut rng = StdRng::seed_from_u64(17);
        for _ in 0..300 {
            let n = rng.gen_range(1..=8usize);
            let k = SetPartition::random(n, &mut rng);
            let j = SetPartition::random(k.num_blocks(), &mut rng);
            let prod = k.times(&j);
            assert!(k.leq(&prod));
            assert_eq!(prod.quotient(&k), j);
        }
    }

    #[test]
    fn from_cycles_examples() {
        let w = Perm::from_cycles(6, &[vec![1, 2], vec![3, 6]]);
        assert_eq!(SetPartition::from_cycles(&w), pt("{1 2 | 3 6 | 4 | 5}", 6));
        assert_eq!(
            SetPartition::from_cycles(&Perm::identity(4)),
            SetPartition::singletons(4)
        );
        let full = Perm::from_cycles(5, &[vec![1, 2, 3, 4, 5]]);
        assert_eq!(SetPartition::from_cycles(&full), SetPartition::full(5));
    }

    #[test]
    fn embed_remove_roundtrip() {
        let i = pt("{1 2}", 2);
        assert_eq!(i.embed(), pt("{1 2 | 3}", 3));
        assert_eq!(i.embed().remove_last(), i);
        assert_eq!(pt("{1 3 | 2}", 3).remove_last(), SetPartition::singletons(2));
    }

    #[test]
    fn gen_decomp_examples() {
        let i = pt("{1 3 | 2 5 6 | 4}", 6);
        assert_eq!(i.gen_decomp(), vec![(1, 3), (2, 5), (5, 6)]);
        assert!(SetPartition::singletons(4).gen_decomp().is_empty());
        assert_eq!(SetPartition::full(3).gen_decomp(), vec![(1, 2), (2, 3)]);
        // re-join equals input
        let mut acc = SetPartition::singletons(6);
        for (a, b) in i.gen_decomp() {
            acc = acc.join(&SetPartition::mu(a, b, 6).unwrap());
        }
        assert_eq!(acc, i);
    }

    #[test]
    fn bell_counts() {
        let bells = bell_numbers(6);
        assert_eq!(&bells[1..], &[1, 2, 5, 15, 52, 203]);
        for n in 1..=6 {
            assert_eq!(
                SetPartition::enumerate_all(n).len() as u128,
                bells[n],
                "partition count mismatch at n = {}",
                n
            );
        }
    }

    #[test]
    fn display_parse_roundtrip() {
        let i = pt("{1 3 | 2 5 6 | 4}", 6);
        assert_eq!(i.to_string(), "{1 3 | 2 5 6 | 4}");
        assert_eq!(parse_partition(&i.to_string(), 6).unwrap(), i);
        // singletons may be omitted on input
        assert_eq!(parse_partition("{1 3}", 4).unwrap(), pt("{1 3 | 2 | 4}", 4));
    }

    proptest! {
        #[test]
        fn join_monoid_axioms(seed in 0u64..500) {
            let mut rng = StdRng::seed_from_u64(seed);
            let n = 1 + (seed as usize % 7);
            let a = SetPartition::random(n, &mut rng);
            let b = SetPartition::random(n, &mut rng);
            let c = SetPartition::random(n, &mut rng);
            prop_assert_eq!(a.join(&b), b.join(&a));
            prop_assert_eq!(a.join(&b).join(&c), a.join(&b.join(&c)));
            prop_assert_eq!(a.join(&a), a.clone());
            prop_assert_eq!(a.join(&SetPartition::singletons(n)), a.clone());
            prop_assert_eq!(a.join(&b), join_oracle(&a, &b));
            // join is the least upper bound
            prop_assert!(a.leq(&a.join(&b)));
            prop_assert!(b.leq(&a.join(&b)));
        }

        #[test]
        fn perm_action_properties(seed in 0u64..300) {
            let mut rng = StdRng::seed_from_u64(seed ^ 0xa5a5);
            let n = 2 + (seed as usize % 6);
            let i = SetPartition::random(n, &mut rng);
            let vp = Perm::random(n, &mut rng);
            let wp = Perm::random(n, &mut rng);
            // (v*w)(I) = v(w(I))
            prop_assert_eq!(
                i.apply_perm(&wp).apply_perm(&vp),
                i.apply_perm(&vp.compose(&wp))
            );
            // block sizes preserved
            prop_assert_eq!(i.apply_perm(&vp).block_sizes(), i.block_sizes());
            // I * J = I * w_I(J) where w_I has the blocks of I as cycles
            let j = SetPartition::random(n, &mut rng);
            let w_i = Perm::from_cycles(n, &i.blocks());
            prop_assert_eq!(i.join(&j), i.join(&j.apply_perm(&w_i)));
        }
    }
}
