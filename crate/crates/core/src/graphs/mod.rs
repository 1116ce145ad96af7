//! Dense undirected graphs and the explicit rank-3 families.

pub(crate) mod families;
mod forms;
mod format;

pub use families::{
    affine_polar, alternating_forms5, bilinear_forms, hamming2, paley, peisert, suzuki_tits,
    van_lint_schrijver, Family, Sign, CONSTRUCTION_CAP,
};
pub use forms::{matrix_rank, standard_form, QuadraticForm};
pub use format::{from_graph6, to_dimacs, to_graph6};

use serde::Serialize;

use crate::permgrp::Permutation;

/// Descriptive metadata carried alongside a graph.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct GraphLabel {
    pub family: String,
    pub params: serde_json::Value,
    /// Field modulus used by the construction, when there is one.
    #[serde(skip_serializing_if = "Option::is_none")]
    pub modulus: Option<String>,
}

/// A simple undirected graph on `0..n` with bit-packed adjacency rows.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct DenseGraph {
    n: usize,
    words: usize,
    bits: Vec<u64>,
    label: GraphLabel,
}

impl DenseGraph {
    pub fn empty(n: usize) -> Self {
        let words = n.div_ceil(64);
        DenseGraph {
            n,
            words,
            bits: vec![0; n * words],
            label: GraphLabel::default(),
        }
    }

    pub fn from_edges(n: usize, edges: impl IntoIterator<Item = (usize, usize)>) -> Self {
        let mut g = Self::empty(n);
        for (u, v) in edges {
            g.add_edge(u, v);
        }
        g
    }

    /// The cycle `C_n`.
    pub fn cycle(n: usize) -> Self {
        Self::from_edges(n, (0..n).map(|i| (i, (i + 1) % n)))
    }

    /// The path on `n` vertices.
    pub fn path(n: usize) -> Self {
        Self::from_edges(n, (1..n).map(|i| (i - 1, i)))
    }

    pub fn complete(n: usize) -> Self {
        Self::from_edges(n, (0..n).flat_map(|i| (i + 1..n).map(move |j| (i, j))))
    }

    pub fn with_label(mut self, label: GraphLabel) -> Self {
        self.label = label;
        self
    }

    pub fn label(&self) -> &GraphLabel {
        &self.label
    }

    pub fn order(&self) -> usize {
        self.n
    }

    /// Adds the edge `{u, v}`; loops are ignored.
    pub fn add_edge(&mut self, u: usize, v: usize) {
        if u == v {
            return;
        }
        self.bits[u * self.words + v / 64] |= 1 << (v % 64);
        self.bits[v * self.words + u / 64] |= 1 << (u % 64);
    }

    #[inline]
    pub fn has_edge(&self, u: usize, v: usize) -> bool {
        self.bits[u * self.words + v / 64] >> (v % 64) & 1 == 1
    }

    #[inline]
    pub fn row(&self, v: usize) -> &[u64] {
        &self.bits[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn row_mut(&mut self, v: usize) -> &mut [u64] {
        &mut self.bits[v * self.words..(v + 1) * self.words]
    }

    pub(crate) fn rows_mut(&mut self) -> std::slice::ChunksMut<'_, u64> {
        self.bits.chunks_mut(self.words.max(1))
    }

    pub fn neighbors(&self, v: usize) -> impl Iterator<Item = usize> + '_ {
        self.row(v).iter().enumerate().flat_map(|(w, &word)| {
            let mut bits = word;
            std::iter::from_fn(move || {
                if bits == 0 {
                    return None;
                }
                let b = bits.trailing_zeros() as usize;
                bits &= bits - 1;
                Some(w * 64 + b)
            })
        })
    }

    pub fn degree(&self, v: usize) -> usize {
        self.row(v).iter().map(|w| w.count_ones() as usize).sum()
    }

    pub fn edge_count(&self) -> usize {
        (0..self.n).map(|v| self.degree(v)).sum::<usize>() / 2
    }

    /// The common degree, if the graph is regular.
    pub fn regular_degree(&self) -> Option<usize> {
        let k = if self.n == 0 { 0 } else { self.degree(0) };
        (0..self.n).all(|v| self.degree(v) == k).then_some(k)
    }

    pub fn common_neighbors(&self, u: usize, v: usize) -> usize {
        self.row(u)
            .iter()
            .zip(self.row(v))
            .map(|(a, b)| (a & b).count_ones() as usize)
            .sum()
    }

    /// The complement, without loops.
    pub fn complement(&self) -> DenseGraph {
        let mut out = self.clone();
        let n = self.n;
        for (v, row) in out.rows_mut().enumerate().take(n) {
            for (w, word) in row.iter_mut().enumerate() {
                *word = !*word;
                let hi = (w + 1) * 64;
                if hi > n {
                    let keep = 64 - (hi - n);
                    *word &= if keep == 0 { 0 } else { u64::MAX >> (64 - keep) };
                }
            }
            row[v / 64] &= !(1 << (v % 64));
        }
        out.label = GraphLabel {
            family: format!("complement({})", self.label.family),
            ..self.label.clone()
        };
        out
    }

    /// The graph with vertex `v` renamed to `perm(v)`.
    pub fn relabel(&self, perm: &Permutation) -> DenseGraph {
        let mut out = DenseGraph::empty(self.n);
        for u in 0..self.n {
            for v in self.neighbors(u) {
                if u < v {
                    out.add_edge(perm.image(u), perm.image(v));
                }
            }
        }
        out.label = self.label.clone();
        out
    }

    /// True iff `perm` maps edges to edges (and hence non-edges to non-edges).
    pub fn is_automorphism(&self, perm: &Permutation) -> bool {
        perm.degree() == self.n
            && (0..self.n).all(|u| {
                let pu = perm.image(u);
                self.degree(u) == self.degree(pu)
                    && self.neighbors(u).all(|v| self.has_edge(pu, perm.image(v)))
            })
    }

    /// Strongly regular parameters `(n, k, lambda, mu)`, if any. Complete and
    /// edgeless graphs report `None`.
    pub fn srg_parameters(&self) -> Option<SrgParameters> {
        use rayon::prelude::*;
        let k = self.regular_degree()?;
        let n = self.n;
        if k == 0 || k + 1 == n {
            return None;
        }
        let counts = (0..n)
            .into_par_iter()
            .map(|u| {
                let mut lambda = None;
                let mut mu = None;
                for v in 0..n {
                    if u == v {
                        continue;
                    }
                    let c = self.common_neighbors(u, v);
                    let slot = if self.has_edge(u, v) { &mut lambda } else { &mut mu };
                    match *slot {
                        None => *slot = Some(c),
                        Some(x) if x != c => return None,
                        _ => {}
                    }
                }
                Some((lambda, mu))
            })
            .collect::<Option<Vec<_>>>()?;
        let (lambda, mu) = counts[0];
        counts
            .iter()
            .all(|&c| c == (lambda, mu))
            .then(|| SrgParameters {
                n,
                k,
                lambda: lambda.unwrap_or(0),
                mu: mu.unwrap_or(0),
            })
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct SrgParameters {
    pub n: usize,
    pub k: usize,
    pub lambda: usize,
    pub mu: usize,
}

impl std::fmt::Display for SrgParameters {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        write!(f, "SRG({}, {}, {}, {})", self.n, self.k, self.lambda, self.mu)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn complement_examples() {
        let c4 = DenseGraph::cycle(4);
        let m = c4.complement();
        assert_eq!(m.edge_count(), 2);
        assert!(m.has_edge(0, 2) && m.has_edge(1, 3));
        assert_eq!(m.complement().bits, c4.bits);
        for n in [1, 63, 64, 65, 130] {
            let g = DenseGraph::path(n);
            let cc = g.complement().complement();
            assert_eq!(cc.bits, g.bits, "n = {n}");
            assert_eq!(g.complement().edge_count(), n * (n - 1) / 2 - g.edge_count());
        }
    }

    #[test]
    fn srg_of_small_graphs() {
        let c5 = DenseGraph::cycle(5);
        assert_eq!(
            c5.srg_parameters(),
            Some(SrgParameters { n: 5, k: 2, lambda: 0, mu: 1 })
        );
        assert_eq!(DenseGraph::cycle(6).srg_parameters(), None);
        assert_eq!(DenseGraph::complete(5).srg_parameters(), None);
        assert_eq!(DenseGraph::path(4).srg_parameters(), None);
    }

    #[test]
    fn relabel_preserves_structure() {
        let g = DenseGraph::path(5);
        let p = Permutation::from_images(vec![4, 2, 0, 1, 3]).unwrap();
        let h = g.relabel(&p);
        assert_eq!(h.edge_count(), 4);
        assert!(h.has_edge(4, 2) && h.has_edge(0, 1) && h.has_edge(1, 3));
        assert!(!g.is_automorphism(&p));
        let flip = Permutation::from_images(vec![4, 3, 2, 1, 0]).unwrap();
        assert!(g.is_automorphism(&flip));
    }
}
