//! Individualization-refinement search for automorphisms and isomorphisms.

use std::time::{Duration, Instant};

use crate::error::{Error, Result};
use crate::permgrp::Permutation;

use super::partition::{Partition, Scratch};
use super::Structure;

/// One node of the first path: the equitable partition before the base
/// point was individualized, and the trace after.
#[derive(Clone, Debug)]
pub(crate) struct PathLevel {
    pub part: Partition,
    pub target: usize,
    pub base: u32,
    pub trace: u64,
}

#[derive(Clone, Debug)]
pub(crate) struct FirstPath {
    pub root_trace: u64,
    pub levels: Vec<PathLevel>,
    pub leaf: Vec<u32>,
}

pub(crate) struct Outcome {
    pub path: FirstPath,
    pub gens: Vec<Permutation>,
    /// Level at which each generator was found; it fixes all earlier base points.
    pub gen_levels: Vec<usize>,
    pub orbit_lengths: Vec<usize>,
    pub nodes: u64,
}

pub(crate) struct Clock {
    start: Instant,
    budget: Option<Duration>,
}

impl Clock {
    pub fn new(budget: Option<Duration>) -> Self {
        Clock {
            start: Instant::now(),
            budget,
        }
    }

    fn check(&self) -> Result<()> {
        match self.budget {
            Some(b) if self.start.elapsed() > b => Err(Error::Timeout(b)),
            _ => Ok(()),
        }
    }
}

struct UnionFind(Vec<u32>);

impl UnionFind {
    fn new(n: usize) -> Self {
        UnionFind((0..n as u32).collect())
    }

    fn find(&mut self, x: usize) -> usize {
        let mut r = x;
        while self.0[r] as usize != r {
            r = self.0[r] as usize;
        }
        let mut x = x;
        while self.0[x] as usize != r {
            let next = self.0[x] as usize;
            self.0[x] = r as u32;
            x = next;
        }
        r
    }

    fn union(&mut self, a: usize, b: usize) {
        let (a, b) = (self.find(a), self.find(b));
        if a != b {
            let (lo, hi) = (a.min(b), a.max(b));
            self.0[hi] = lo as u32;
        }
    }

    fn absorb(&mut self, g: &Permutation) {
        for x in 0..g.degree() {
            self.union(x, g.image(x));
        }
    }
}

pub(crate) fn first_path(st: &Structure, sc: &mut Scratch) -> FirstPath {
    let mut part = Partition::from_colors(&st.vertex_colors);
    let root_trace = part.refine_all(st, sc);
    let mut levels = Vec::new();
    while let Some(target) = part.target_cell(st.rule) {
        let base = *part.cell(target).iter().min().expect("non-empty cell");
        let before = part.clone();
            let trace = part.individualize_refine(base, st, sc);
        levels.push(PathLevel {
            part: before,
            target,
            base,
            trace,
        });
    }
    FirstPath {
        root_trace,
        levels,
        leaf: part.lab,
    }
}

/// Searches the subtree below `node` (at depth `level` of the reference path)
/// for a leaf whose map from the reference leaf satisfies `accept`.
pub(crate) struct Descent<'a> {
    pub st: &'a Structure<'a>,
    pub reference: &'a FirstPath,
    pub clock: &'a Clock,
    pub nodes: u64,
}

impl Descent<'_> {
    /// Individualizes `v` in `node` and explores below it.
    pub fn explore(
        &mut self,
        sc: &mut Scratch,
        node: &Partition,
        level: usize,
        v: u32,
        accept: &mut dyn FnMut(&Permutation) -> bool,
    ) -> Result<Option<Permutation>> {
        self.nodes += 1;
        self.clock.check()?;
        let mut part = node.clone();
        let trace = part.individualize_refine(v, self.st, sc);
        let reference = &self.reference.levels[level];
        if trace != reference.trace {
            return Ok(None);
        }
        let Some(next) = self.reference.levels.get(level + 1) else {
            if !part.is_discrete() {
                return Ok(None);
            }
            let mut images = vec![0u32; part.n()];
            for (p, &x) in self.reference.leaf.iter().enumerate() {
                images[x as usize] = part.lab[p];
            }
            let g = Permutation::from_images_unchecked(images);
            return Ok(accept(&g).then_some(g));
        };
        let target = part.target_cell(self.st.rule);
        if target != Some(next.target) || part.cell(next.target).len() != next.part.cell(next.target).len() {
            return Ok(None);
        }
        let mut candidates = part.cell(next.target).to_vec();
        candidates.sort_unstable();
        for w in candidates {
            if let Some(g) = self.explore(sc, &part, level + 1, w, accept)? {
                return Ok(Some(g));
            }
        }
        Ok(None)
    }
}

/// Computes generators of the automorphism group of `st`, one level at a
/// time from the bottom of the first path upwards.
pub(crate) fn automorphism_search(st: &Structure, clock: &Clock) -> Result<Outcome> {
    let n = st.n;
    let mut sc = Scratch::new(n);
    let path = first_path(st, &mut sc);
    let mut gens: Vec<Permutation> = Vec::new();
    let mut gen_levels = Vec::new();
    let mut orbit_lengths = vec![1; path.levels.len()];
    let mut nodes = 0;
    for i in (0..path.levels.len()).rev() {
        let lvl = &path.levels[i];
        let mut uf = UnionFind::new(n);
        for g in &gens {
            uf.absorb(g);
        }
        let mut failed = vec![false; n];
        let mut candidates = lvl.part.cell(lvl.target).to_vec();
        candidates.sort_unstable();
        let b = lvl.base as usize;
        for &v in &candidates {
            let v = v as usize;
            let root = uf.find(v);
            if root == uf.find(b) || failed[root] {
                continue;
            }
            let mut descent = Descent {
                st,
                reference: &path,
                clock,
                nodes: 0,
            };
            let found =
                descent.explore(&mut sc, &lvl.part, i, v as u32, &mut |g| st.preserves(g))?;
            nodes += descent.nodes;
            match found {
                Some(g) => {
                    uf.absorb(&g);
                    gens.push(g);
                    gen_levels.push(i);
                }
                None => failed[root] = true,
            }
        }
        let rb = uf.find(b);
        orbit_lengths[i] = candidates.iter().filter(|&&v| uf.find(v as usize) == rb).count();
    }
    Ok(Outcome {
        path,
        gens,
        gen_levels,
        orbit_lengths,
        nodes,
    })
}

/// Looks for an isomorphism from the structure whose first path is
/// `reference` onto `target`, using the automorphisms of `target` to visit
/// one candidate per orbit while the search stays on the target's own first
/// path.
pub(crate) fn isomorphism_search(
    reference: &FirstPath,
    target: &Structure,
    target_aut: &Outcome,
    clock: &Clock,
    accept: &mut dyn FnMut(&Permutation) -> bool,
) -> Result<Option<Permutation>> {
    let mut sc = Scratch::new(target.n);
    let mut root = Partition::from_colors(&target.vertex_colors);
    if root.refine_all(target, &mut sc) != reference.root_trace {
        return Ok(None);
    }
    if reference.levels.is_empty() {
        let mut images = vec![0u32; target.n];
        for (p, &x) in reference.leaf.iter().enumerate() {
            images[x as usize] = root.lab[p];
        }
        let g = Permutation::from_images_unchecked(images);
        return Ok(accept(&g).then_some(g));
    }
    let mut search = IsoSearch {
        descent: Descent {
            st: target,
            reference,
            clock,
            nodes: 0,
        },
        aut: target_aut,
    };
    search.level(&mut sc, &root, 0, true, accept)
}

struct IsoSearch<'a> {
    descent: Descent<'a>,
    aut: &'a Outcome,
}

impl IsoSearch<'_> {
    fn level(
        &mut self,
        sc: &mut Scratch,
        node: &Partition,
        level: usize,
        on_base: bool,
        accept: &mut dyn FnMut(&Permutation) -> bool,
    ) -> Result<Option<Permutation>> {
        let Some(reference) = self.descent.reference.levels.get(level) else {
            return Ok(None);
        };
        if node.target_cell(self.descent.st.rule) != Some(reference.target) {
            return Ok(None);
        }
        let mut candidates = node.cell(reference.target).to_vec();
        candidates.sort_unstable();
        let base = self.aut.path.levels.get(level).filter(|_| on_base);
        let mut uf = None;
        if let Some(bl) = base {
            // On the target's base path: only one candidate per orbit of the
            // pointwise stabilizer of the earlier base points is needed.
            let mut u = UnionFind::new(node.n());
            for (g, &l) in self.aut.gens.iter().zip(&self.aut.gen_levels) {
                if l >= level {
                    u.absorb(g);
                }
            }
            if let Some(p) = candidates.iter().position(|&v| v == bl.base) {
                candidates[..=p].rotate_right(1);
            }
            uf = Some(u);
        }
        let mut tried_roots = Vec::new();
        for v in candidates {
            if let Some(u) = uf.as_mut() {
                let r = u.find(v as usize);
                if tried_roots.contains(&r) {
                    continue;
                }
                tried_roots.push(r);
            }
            let still_on_base = base.is_some_and(|bl| bl.base == v);
            if !still_on_base {
                let found = self.descent.explore(sc, node, level, v, accept)?;
                if found.is_some() {
                    return Ok(found);
                }
                continue;
            }
            self.descent.nodes += 1;
            let mut part = node.clone();
            let trace = part.individualize_refine(v, self.descent.st, sc);
            if trace != reference.trace {
                continue;
            }
            if level + 1 == self.descent.reference.levels.len() {
                if let Some(found) = self.descent_leaf(&part, accept) {
                    return Ok(Some(found));
                }
                continue;
            }
            if let Some(found) = self.level(sc, &part, level + 1, true, accept)? {
                return Ok(Some(found));
            }
        }
        Ok(None)
    }

    fn descent_leaf(
        &self,
        part: &Partition,
        accept: &mut dyn FnMut(&Permutation) -> bool,
    ) -> Option<Permutation> {
        if !part.is_discrete() {
            return None;
        }
        let mut images = vec![0u32; part.n()];
        for (p, &x) in self.descent.reference.leaf.iter().enumerate() {
            images[x as usize] = part.lab[p];
        }
        let g = Permutation::from_images_unchecked(images);
        accept(&g).then_some(g)
    }
}
