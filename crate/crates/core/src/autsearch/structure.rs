//! Incidence structures and their invariant colour refinement.
//!
//! A structure is a set of points 0..n together with coloured blocks; each
//! block lists (point, label) incidences. A permutation preserving the
//! multiset of coloured, labelled blocks preserves every colouring computed
//! here, which is what makes the search sound.

use crate::gf2::{BinaryCode, BinaryWord};

/// Final avalanche of splitmix64.
#[inline]
pub(crate) fn mix(mut x: u64) -> u64 {
    x = x.wrapping_add(0x9e37_79b9_7f4a_7c15);
    x = (x ^ (x >> 30)).wrapping_mul(0xbf58_476d_1ce4_e5b9);
    x = (x ^ (x >> 27)).wrapping_mul(0x94d0_49bb_1331_11eb);
    x ^ (x >> 31)
}

#[inline]
pub(crate) fn combine(a: u64, b: u64) -> u64 {
    mix(a.rotate_left(17) ^ b)
}

#[derive(Clone, Debug, Default)]
pub struct Structure {
    n: usize,
    block_color: Vec<u64>,
    block_start: Vec<u32>,
    /// (point, label) per incidence, grouped by block.
    block_pts: Vec<(u32, u8)>,
    point_start: Vec<u32>,
    /// (block, label) per incidence, grouped by point.
    point_blocks: Vec<(u32, u8)>,
}

/// Builder collecting blocks before the incidence index is frozen.
#[derive(Clone, Debug)]
pub struct StructureBuilder {
    n: usize,
    blocks: Vec<(u64, Vec<(u32, u8)>)>,
}

impl StructureBuilder {
    pub fn new(n: usize) -> Self {
        StructureBuilder { n, blocks: Vec::new() }
    }

    pub fn add_block(&mut self, color: u64, incidences: Vec<(u32, u8)>) {
        debug_assert!(incidences.iter().all(|&(p, _)| (p as usize) < self.n));
        self.blocks.push((color, incidences));
    }

    /// One block per word, label 1 on the support.
    pub fn add_words(&mut self, color: u64, words: &[BinaryWord]) {
        for w in words {
            let inc = w.support().into_iter().map(|p| (p as u32, 1u8)).collect();
            self.add_block(combine(color, w.weight() as u64), inc);
        }
    }

    /// Blocks from the low-weight words of `code` or of its dual, whichever
    /// has smaller dimension. Weight classes up to n/2 are taken in
    /// increasing order until there are at least 4n blocks.
    pub fn add_code(&mut self, color: u64, code: &BinaryCode) {
        let n = code.len();
        let side = if code.dim() <= n - code.dim() { code.clone() } else { code.dual() };
        let Ok(dist) = side.weight_distribution() else { return };
        let mut total = 0usize;
        for (m, &count) in dist.iter().enumerate().take(n / 2 + 1).skip(1) {
            if count == 0 {
                continue;
            }
            let words = side.weight_words(m).expect("within the enumeration cap");
            total += words.len();
            self.add_words(color, &words);
            if total >= 4 * n {
                break;
            }
        }
    }

    pub fn build(self) -> Structure {
        let n = self.n;
        let mut s = Structure {
            n,
            ..Default::default()
        };
        let mut degree = vec![0u32; n];
        for (color, inc) in &self.blocks {
            s.block_start.push(s.block_pts.len() as u32);
            s.block_color.push(*color);
            for &(p, l) in inc {
                s.block_pts.push((p, l));
                degree[p as usize] += 1;
            }
        }
        s.block_start.push(s.block_pts.len() as u32);
        let mut start = 0u32;
        for d in &degree {
            s.point_start.push(start);
            start += d;
        }
        s.point_start.push(start);
        let mut fill = s.point_start.clone();
        s.point_blocks = vec![(0, 0); start as usize];
        for b in 0..s.block_color.len() {
            for &(p, l) in &s.block_pts[s.block_start[b] as usize..s.block_start[b + 1] as usize] {
                s.point_blocks[fill[p as usize] as usize] = (b as u32, l);
                fill[p as usize] += 1;
            }
        }
        s
    }
}

/// A refined colouring of the points, plus a trace of how it was reached.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Coloring {
    pub colors: Vec<u64>,
    pub trace: u64,
}

impl Coloring {
    pub fn is_discrete(&self) -> bool {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c.windows(2).all(|w| w[0] != w[1])
    }

    /// The multiset of colours, sorted; equal for nodes related by an
    /// automorphism of the structure.
    pub fn signature(&self) -> Vec<u64> {
        let mut c = self.colors.clone();
        c.sort_unstable();
        c
    }

    /// The smallest non-singleton cell, ties broken by the smaller colour.
    /// Returns the colour and the cell's points in increasing order.
    pub fn target_cell(&self) -> Option<(u64, Vec<usize>)> {
        let sig = self.signature();
        let mut best: Option<(usize, u64)> = None;
        let mut i = 0;
        while i < sig.len() {
            let mut j = i;
            while j < sig.len() && sig[j] == sig[i] {
                j += 1;
            }
            let size = j - i;
            if size > 1 && best.is_none_or(|(s, _)| size < s) {
                best = Some((size, sig[i]));
            }
            i = j;
        }
        let (_, color) = best?;
        let cell = (0..self.colors.len()).filter(|&p| self.colors[p] == color).collect();
        Some((color, cell))
    }

    pub fn cell_of(&self, color: u64) -> Vec<usize> {
        (0..self.colors.len()).filter(|&p| self.colors[p] == color).collect()
    }

    /// Relabelling by colour rank: point p goes to the rank of its colour.
    /// Only meaningful on a discrete colouring.
    pub fn ranks(&self) -> Vec<usize> {
        let sig = self.signature();
        self.colors
            .iter()
            .map(|c| sig.binary_search(c).expect("own colour"))
            .collect()
    }
}

const INDIVIDUALIZED: u64 = 0x5151_a5a5_0f0f_3c3c;

impl Structure {
    pub fn len(&self) -> usize {
        self.n
    }

    pub fn is_empty(&self) -> bool {
        self.n == 0
    }

    pub fn block_count(&self) -> usize {
        self.block_color.len()
    }

    /// Refines the uniform colouring.
    pub fn root(&self) -> Coloring {
        self.refine(Coloring {
            colors: vec![mix(0); self.n],
            trace: 0,
        })
    }

    /// Gives `point` a colour of its own and refines. The trace enters the
    /// new colour so points individualized at different depths stay apart.
    pub fn individualize(&self, node: &Coloring, point: usize) -> Coloring {
        let mut next = node.clone();
        next.colors[point] = combine(combine(node.colors[point], INDIVIDUALIZED), node.trace);
        next.trace = combine(node.trace, next.colors[point]);
        self.refine(next)
    }

    fn count_classes(colors: &[u64]) -> usize {
        let mut c = colors.to_vec();
        c.sort_unstable();
        c.dedup();
        c.len()
    }

    /// Alternating block and point recolouring until the number of point
    /// classes stops growing. New colours hash the old colour together with
    /// the multiset of (label, neighbour colour), summed after mixing, so the
    /// result depends only on the structure and the input colouring.
    pub fn refine(&self, mut node: Coloring) -> Coloring {
        let mut classes = Self::count_classes(&node.colors);
        if self.block_color.is_empty() {
            return node;
        }
        let mut block_colors = vec![0u64; self.block_color.len()];
        let mut next = vec![0u64; self.n];
        loop {
            for (b, bc) in block_colors.iter_mut().enumerate() {
                let sum = self.block_pts[self.block_start[b] as usize..self.block_start[b + 1] as usize]
                    .iter()
                    .fold(0u64, |acc, &(p, l)| acc.wrapping_add(combine(l as u64, node.colors[p as usize])));
                *bc = combine(self.block_color[b], sum);
            }
            for (p, nc) in next.iter_mut().enumerate() {
                let sum = self.point_blocks[self.point_start[p] as usize..self.point_start[p + 1] as usize]
                    .iter()
                    .fold(0u64, |acc, &(b, l)| acc.wrapping_add(combine(l as u64, block_colors[b as usize])));
                *nc = combine(node.colors[p], sum);
            }
            let mut sorted = next.clone();
            sorted.sort_unstable();
            node.trace = sorted.iter().fold(node.trace, |acc, &x| combine(acc, x));
            sorted.dedup();
            std::mem::swap(&mut node.colors, &mut next);
            if sorted.len() == classes || sorted.len() == self.n {
                return node;
            }
            classes = sorted.len();
        }
    }
}
