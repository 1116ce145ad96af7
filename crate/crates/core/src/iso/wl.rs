use std::collections::HashMap;

use rayon::prelude::*;

use crate::error::{Error, Result};
use crate::graphs::DenseGraph;
use crate::permgrp::{OrbitalDecomposition, Permutation};

use super::{automorphisms, Input, SearchOptions};

/// Default vertex cap for 2-dimensional refinement.
pub const WL_CAP: usize = 2048;

/// A coloring of ordered pairs with colors `0..class_count`, numbered by first
/// occurrence in row-major order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct PairColoring {
    n: usize,
    color: Vec<u32>,
    classes: usize,
}

impl PairColoring {
    /// Builds a coloring from an arbitrary row-major color matrix; colors are
    /// renumbered canonically. Diagonal colors are kept apart from
    /// off-diagonal ones.
    pub fn from_matrix(n: usize, raw: &[u32]) -> Result<Self> {
        if raw.len() != n * n {
            return Err(Error::InvalidParameter(format!(
                "color matrix has {} entries, expected {}",
                raw.len(),
                n * n
            )));
        }
        let mut ids: HashMap<(bool, u32), u32> = HashMap::new();
        let mut color = Vec::with_capacity(n * n);
        for i in 0..n {
            for j in 0..n {
                let key = (i == j, raw[i * n + j]);
                let next = ids.len() as u32;
                color.push(*ids.entry(key).or_insert(next));
            }
        }
        Ok(PairColoring {
            n,
            color,
            classes: ids.len(),
        })
    }

    /// Diagonal, edges and non-edges.
    pub fn from_graph(g: &DenseGraph) -> Self {
        let n = g.order();
        let raw: Vec<u32> = (0..n * n)
            .map(|k| {
                let (i, j) = (k / n, k % n);
                if i == j {
                    0
                } else {
                    1 + g.has_edge(i, j) as u32
                }
            })
            .collect();
        Self::from_matrix(n, &raw).expect("square matrix")
    }

    pub fn from_orbitals(orb: &OrbitalDecomposition) -> Self {
        let n = orb.degree();
        let raw: Vec<u32> = (0..n * n).map(|k| orb.color(k / n, k % n) as u32).collect();
        Self::from_matrix(n, &raw).expect("square matrix")
    }

    pub fn n(&self) -> usize {
        self.n
    }

    #[inline]
    pub fn color(&self, i: usize, j: usize) -> u32 {
        self.color[i * self.n + j]
    }

    pub fn class_count(&self) -> usize {
        self.classes
    }

    pub fn is_preserved_by(&self, g: &Permutation) -> bool {
        let n = self.n;
        g.degree() == n
            && (0..n).into_par_iter().all(|i| {
                let gi = g.image(i);
                (0..n).all(|j| self.color(i, j) == self.color(gi, g.image(j)))
            })
    }

    /// One refinement round.
    fn step(&self) -> PairColoring {
        let n = self.n;
        let c = self.classes;
        let words = n.div_ceil(64);
        let use_bits = c <= 16;
        let (rows, cols) = if use_bits {
            let mut rows = vec![0u64; c * n * words];
            let mut cols = vec![0u64; c * n * words];
            for i in 0..n {
                for k in 0..n {
                    let a = self.color(i, k) as usize;
                    rows[(a * n + i) * words + k / 64] |= 1 << (k % 64);
                    cols[(a * n + k) * words + i / 64] |= 1 << (i % 64);
                }
            }
            (rows, cols)
        } else {
            (Vec::new(), Vec::new())
        };
        let signature = |i: usize, j: usize| -> Vec<u32> {
            let mut sig = vec![self.color(i, j)];
            if use_bits {
                for a in 0..c {
                    let r = &rows[(a * n + i) * words..(a * n + i + 1) * words];
                    for b in 0..c {
                        let col = &cols[(b * n + j) * words..(b * n + j + 1) * words];
                        sig.push(r.iter().zip(col).map(|(x, y)| (x & y).count_ones()).sum());
                    }
                }
            } else {
                let mut pairs: Vec<u32> = (0..n)
                    .map(|k| self.color(i, k) * c as u32 + self.color(k, j))
                    .collect();
                pairs.sort_unstable();
                sig.extend(pairs);
            }
            sig
        };
        let mut ids: HashMap<Vec<u32>, u32> = HashMap::new();
        let mut color = Vec::with_capacity(n * n);
        const CHUNK: usize = 32;
        for lo in (0..n).step_by(CHUNK) {
            let hi = (lo + CHUNK).min(n);
            let sigs: Vec<Vec<u32>> = (lo * n..hi * n)
                .into_par_iter()
                .map(|k| signature(k / n, k % n))
                .collect();
            for s in sigs {
                let next = ids.len() as u32;
                color.push(*ids.entry(s).or_insert(next));
            }
        }
        PairColoring {
            n,
            color,
            classes: ids.len(),
        }
    }
}

/// The coarsest coherent refinement of the input coloring.
pub fn wl2_closure<'a>(start: impl Into<Input<'a>>) -> Result<PairColoring> {
    wl2_closure_capped(start, WL_CAP)
}

pub fn wl2_closure_capped<'a>(start: impl Into<Input<'a>>, cap: usize) -> Result<PairColoring> {
    let start = start.into();
    let n = start.order();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "2-dimensional refinement",
            size: n as u128,
            cap: cap as u128,
        });
    }
    let mut current = match start {
        Input::Graph(g) => PairColoring::from_graph(g),
        Input::Coloring(c) => PairColoring::from_matrix(c.n, &c.color)?,
    };
    loop {
        let next = current.step();
        if next.classes == current.classes {
            return Ok(next);
        }
        current = next;
    }
}

/// True iff the graph's coherent closure has exactly three classes and its
/// automorphism group has exactly three orbits on ordered pairs.
pub fn certify_rank3(g: &DenseGraph, opts: &SearchOptions) -> Result<bool> {
    if wl2_closure_capped(g, opts.cap)?.class_count() != 3 {
        return Ok(false);
    }
    let aut = automorphisms(g, opts)?;
    if !aut.group.is_transitive() {
        return Ok(false);
    }
    Ok(aut.group.orbitals()?.rank() == 3)
}
