//! Ordered partitions and equitable refinement.
//!
//! Refinement is label-invariant: cells are split by neighbor counts into
//! fragments ordered by count, and every decision is folded into a trace hash
//! that depends only on positions and counts. Two nodes whose traces differ
//! cannot be related by an isomorphism.

use std::collections::VecDeque;

use super::{CellRule, Structure};

const MIX: u64 = 0x9e37_79b9_7f4a_7c15;

#[inline]
fn mix(h: u64, x: u64) -> u64 {
    (h.rotate_left(23) ^ x).wrapping_mul(MIX) ^ (h >> 29)
}

#[derive(Clone, Debug)]
pub(crate) struct Partition {
    /// Position -> vertex.
    pub lab: Vec<u32>,
    /// Vertex -> position.
    pos: Vec<u32>,
    /// Vertex -> start position of its cell.
    start: Vec<u32>,
    /// Cell start -> cell length (meaningful at cell starts only).
    len: Vec<u32>,
    pub cells: usize,
}

/// Reusable buffers for refinement.
pub(crate) struct Scratch {
    count: Vec<u32>,
    touched: Vec<u32>,
    cell_touched: Vec<bool>,
    in_queue: Vec<bool>,
    queue: VecDeque<u32>,
    touched_cells: Vec<u32>,
    splitter: Vec<u32>,
}

impl Scratch {
    pub fn new(n: usize) -> Self {
        Scratch {
            count: vec![0; n],
            touched: Vec::new(),
            cell_touched: vec![false; n],
            in_queue: vec![false; n],
            queue: VecDeque::new(),
            touched_cells: Vec::new(),
            splitter: Vec::new(),
        }
    }
}

impl Partition {
    /// Cells are the vertex color classes, ordered by color.
    pub fn from_colors(colors: &[u32]) -> Self {
        let n = colors.len();
        let mut lab: Vec<u32> = (0..n as u32).collect();
        lab.sort_by_key(|&v| (colors[v as usize], v));
        let mut p = Partition {
            pos: vec![0; n],
            start: vec![0; n],
            len: vec![0; n],
            lab,
            cells: 0,
        };
        let mut s = 0;
        while s < n {
            let c = colors[p.lab[s] as usize];
            let mut e = s;
            while e < n && colors[p.lab[e] as usize] == c {
                e += 1;
            }
            p.set_cell(s, e);
            p.cells += 1;
            s = e;
        }
        p
    }

    fn set_cell(&mut self, s: usize, e: usize) {
        self.len[s] = (e - s) as u32;
        for q in s..e {
            let v = self.lab[q] as usize;
            self.pos[v] = q as u32;
            self.start[v] = s as u32;
        }
    }

    pub fn n(&self) -> usize {
        self.lab.len()
    }

    pub fn is_discrete(&self) -> bool {
        self.cells == self.n()
    }

    /// Start positions of all cells, in order.
    pub fn cell_starts(&self) -> impl Iterator<Item = usize> + '_ {
        let mut s = 0;
        std::iter::from_fn(move || {
            (s < self.n()).then(|| {
                let c = s;
                s += self.len[c] as usize;
                c
            })
        })
    }

    pub fn cell(&self, s: usize) -> &[u32] {
        &self.lab[s..s + self.len[s] as usize]
    }

    /// The non-singleton cell chosen by `rule`, lowest position among ties.
    pub fn target_cell(&self, rule: CellRule) -> Option<usize> {
        let mut cells = self.cell_starts().filter(|&s| self.len[s] > 1);
        match rule {
            CellRule::Smallest => cells.min_by_key(|&s| (self.len[s], s)),
            CellRule::Largest => cells.min_by_key(|&s| (std::cmp::Reverse(self.len[s]), s)),
            CellRule::First => cells.next(),
        }
    }

    /// Splits `v` off the front of its cell; returns the trace seed.
    fn individualize(&mut self, v: u32) -> usize {
        let s = self.start[v as usize] as usize;
        let l = self.len[s] as usize;
        let p = self.pos[v as usize] as usize;
        self.lab.swap(s, p);
        let moved = self.lab[p];
        self.pos[moved as usize] = p as u32;
        self.pos[v as usize] = s as u32;
        self.len[s] = 1;
        self.set_cell(s + 1, s + l);
        self.cells += 1;
        s
    }

    /// Refines to the coarsest equitable partition below the current one,
    /// with all cells as initial splitters. Returns the trace hash.
    pub fn refine_all(&mut self, st: &Structure, sc: &mut Scratch) -> u64 {
        let starts: Vec<usize> = self.cell_starts().collect();
        for s in starts {
            sc.in_queue[s] = true;
            sc.queue.push_back(s as u32);
        }
        self.refine(st, sc, self.cells as u64)
    }

    /// Individualizes `v` (its cell must be non-singleton) and refines.
    pub fn individualize_refine(&mut self, v: u32, st: &Structure, sc: &mut Scratch) -> u64 {
        let s = self.individualize(v);
        sc.in_queue[s] = true;
        sc.queue.push_back(s as u32);
        self.refine(st, sc, mix(s as u64, self.len[s + 1] as u64))
    }

    fn refine(&mut self, st: &Structure, sc: &mut Scratch, seed: u64) -> u64 {
        let mut trace = seed;
        while let Some(w) = sc.queue.pop_front() {
            let w = w as usize;
            sc.in_queue[w] = false;
            if self.is_discrete() {
                continue;
            }
            sc.splitter.clear();
            sc.splitter.extend_from_slice(self.cell(w));
            for rel in &st.relations {
                for &y in &sc.splitter {
                    for &x in rel.in_neighbors(y as usize) {
                        if sc.count[x as usize] == 0 {
                            sc.touched.push(x);
                        }
                        sc.count[x as usize] += 1;
                    }
                }
                for &x in &sc.touched {
                    let c = self.start[x as usize];
                    if !sc.cell_touched[c as usize] {
                        sc.cell_touched[c as usize] = true;
                        sc.touched_cells.push(c);
                    }
                }
                sc.touched_cells.sort_unstable();
                for i in 0..sc.touched_cells.len() {
                    let c = sc.touched_cells[i] as usize;
                    sc.cell_touched[c] = false;
                    if self.len[c] > 1 {
                        trace = self.split(c, sc, trace);
                    }
                }
                sc.touched_cells.clear();
                for &x in &sc.touched {
                    sc.count[x as usize] = 0;
                }
                sc.touched.clear();
            }
        }
        mix(trace, self.cells as u64)
    }

    fn split(&mut self, c: usize, sc: &mut Scratch, mut trace: u64) -> u64 {
        let l = self.len[c] as usize;
        let count = &sc.count;
        let cell = &mut self.lab[c..c + l];
        let first = count[cell[0] as usize];
        if cell.iter().all(|&v| count[v as usize] == first) {
            return trace;
        }
        cell.sort_by_key(|&v| count[v as usize]);
        let mut frags = Vec::new();
        let mut s = c;
        while s < c + l {
            let k = count[self.lab[s] as usize];
            let mut e = s + 1;
            while e < c + l && count[self.lab[e] as usize] == k {
                e += 1;
            }
            frags.push((s, e));
            trace = mix(mix(trace, k as u64), (e - s) as u64);
            s = e;
        }
        trace = mix(trace, c as u64);
        for &(s, e) in &frags {
            self.set_cell(s, e);
        }
        self.cells += frags.len() - 1;
        let skip = if sc.in_queue[c] {
            Some(c)
        } else {
            frags
                .iter()
                .enumerate()
                .max_by_key(|&(i, &(s, e))| (e - s, std::cmp::Reverse(i)))
                .map(|(_, &(s, _))| s)
        };
        for &(s, _) in &frags {
            if Some(s) != skip && !sc.in_queue[s] {
                sc.in_queue[s] = true;
                sc.queue.push_back(s as u32);
            }
        }
        trace
    }
}
