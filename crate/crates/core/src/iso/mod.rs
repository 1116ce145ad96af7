//! Automorphism groups, isomorphism testing and coherent closure.

mod partition;
mod search;
mod wl;

pub use wl::{certify_rank3, wl2_closure, wl2_closure_capped, PairColoring, WL_CAP};

use std::time::Duration;

use num_bigint::BigUint;
use serde::Serialize;

use crate::error::{Error, Result};
use crate::graphs::DenseGraph;
use crate::permgrp::{GeneratedGroup, Permutation, StabChain};

use search::{automorphism_search, first_path, isomorphism_search, Clock};

/// Default vertex cap for automorphism and isomorphism searches.
pub const AUT_CAP: usize = 2048;

/// Something whose color-preserving automorphisms can be searched for.
#[derive(Clone, Copy, Debug)]
pub enum Input<'a> {
    Graph(&'a DenseGraph),
    Coloring(&'a PairColoring),
}

impl<'a> From<&'a DenseGraph> for Input<'a> {
    fn from(g: &'a DenseGraph) -> Self {
        Input::Graph(g)
    }
}

impl<'a> From<&'a PairColoring> for Input<'a> {
    fn from(c: &'a PairColoring) -> Self {
        Input::Coloring(c)
    }
}

impl Input<'_> {
    pub fn order(&self) -> usize {
        match self {
            Input::Graph(g) => g.order(),
            Input::Coloring(c) => c.n(),
        }
    }
}

/// Which non-singleton cell the search individualizes next.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Serialize)]
#[serde(rename_all = "lowercase")]
pub enum CellRule {
    Smallest,
    #[default]
    Largest,
    First,
}

#[derive(Clone, Copy, Debug)]
pub struct SearchOptions {
    pub cap: usize,
    pub rule: CellRule,
    /// Wall-clock budget; `None` means unlimited.
    pub budget: Option<Duration>,
}

impl Default for SearchOptions {
    fn default() -> Self {
        SearchOptions {
            cap: AUT_CAP,
            rule: CellRule::Largest,
            budget: None,
        }
    }
}

impl SearchOptions {
    pub fn with_cap(self, cap: usize) -> Self {
        SearchOptions { cap, ..self }
    }

    pub fn with_rule(self, rule: CellRule) -> Self {
        SearchOptions { rule, ..self }
    }

    pub fn with_budget(self, budget: Duration) -> Self {
        SearchOptions {
            budget: Some(budget),
            ..self
        }
    }
}

/// A relation given by in-neighbor lists: `x` is listed under `y` iff `(x, y)`
/// is in the relation.
pub(crate) struct Relation {
    offsets: Vec<u32>,
    adj: Vec<u32>,
}

impl Relation {
    fn from_lists(lists: Vec<Vec<u32>>) -> Self {
        let mut offsets = Vec::with_capacity(lists.len() + 1);
        offsets.push(0);
        let mut adj = Vec::new();
        for l in lists {
            adj.extend(l);
            offsets.push(adj.len() as u32);
        }
        Relation { offsets, adj }
    }

    #[inline]
    pub fn in_neighbors(&self, y: usize) -> &[u32] {
        &self.adj[self.offsets[y] as usize..self.offsets[y + 1] as usize]
    }
}

/// The search-side view of an input: vertex colors plus relations that
/// determine all pair colors. The largest class is left out since its
/// counts follow from the others.
pub(crate) struct Structure<'a> {
    pub n: usize,
    pub vertex_colors: Vec<u32>,
    pub relations: Vec<Relation>,
    pub rule: CellRule,
    input: Input<'a>,
}

impl<'a> Structure<'a> {
    fn new(input: Input<'a>, use_complement: Option<bool>, rule: CellRule) -> Self {
        match input {
            Input::Graph(g) => {
                let n = g.order();
                let complement =
                    use_complement.unwrap_or(2 * g.edge_count() > n * n.saturating_sub(1) / 2);
                let lists = (0..n)
                    .map(|y| {
                        (0..n as u32)
                            .filter(|&x| x as usize != y && g.has_edge(x as usize, y) != complement)
                            .collect()
                    })
                    .collect();
                Structure {
                    n,
                    vertex_colors: vec![0; n],
                    relations: vec![Relation::from_lists(lists)],
                    rule,
                    input,
                }
            }
            Input::Coloring(c) => {
                let n = c.n();
                let vertex_colors = (0..n).map(|i| c.color(i, i)).collect();
                let mut sizes = vec![0usize; c.class_count()];
                for i in 0..n {
                    for j in 0..n {
                        if i != j {
                            sizes[c.color(i, j) as usize] += 1;
                        }
                    }
                }
                let largest = (0..sizes.len()).max_by_key(|&k| (sizes[k], std::cmp::Reverse(k)));
                let relations = (0..sizes.len() as u32)
                    .filter(|&k| sizes[k as usize] > 0 && Some(k as usize) != largest)
                    .map(|k| {
                        Relation::from_lists(
                            (0..n)
                                .map(|y| {
                                    (0..n as u32)
                                        .filter(|&x| x as usize != y && c.color(x as usize, y) == k)
                                        .collect()
                                })
                                .collect(),
                        )
                    })
                    .collect();
                Structure {
                    n,
                    vertex_colors,
                    relations,
                    rule,
                    input,
                }
            }
        }
    }

    /// Exhaustive check that `g` preserves the input.
    pub fn preserves(&self, g: &Permutation) -> bool {
        match self.input {
            Input::Graph(graph) => graph.is_automorphism(g),
            Input::Coloring(c) => c.is_preserved_by(g),
        }
    }
}

fn check_cap(n: usize, cap: usize, what: &'static str) -> Result<()> {
    if n > cap {
        Err(Error::CapExceeded {
            what,
            size: n as u128,
            cap: cap as u128,
        })
    } else {
        Ok(())
    }
}

/// The full automorphism group of a graph or pair coloring.
#[derive(Clone, Debug)]
pub struct AutResult {
    pub group: GeneratedGroup,
    pub order: BigUint,
    /// Base points of the search and the orbit length of each under the
    /// stabilizer of the earlier ones; their product is the order.
    pub base: Vec<usize>,
    pub orbit_lengths: Vec<usize>,
    /// One entry per generator: the exhaustive preservation check result.
    pub certificate: Vec<bool>,
    pub nodes: u64,
}

#[derive(Serialize)]
struct AutSummary<'a> {
    order: String,
    base: &'a [usize],
    orbit_lengths: &'a [usize],
    generators: usize,
    nodes: u64,
}

impl AutResult {
    pub fn summary_json(&self) -> serde_json::Value {
        serde_json::to_value(AutSummary {
            order: self.order.to_string(),
            base: &self.base,
            orbit_lengths: &self.orbit_lengths,
            generators: self.group.generators().len(),
            nodes: self.nodes,
        })
        .expect("summary serializes")
    }
}

pub fn automorphisms<'a>(input: impl Into<Input<'a>>, opts: &SearchOptions) -> Result<AutResult> {
    let input = input.into();
    check_cap(input.order(), opts.cap, "automorphism search")?;
    let st = Structure::new(input, None, opts.rule);
    let clock = Clock::new(opts.budget);
    let out = automorphism_search(&st, &clock)?;
    Ok(finish(&st, out))
}

fn finish(st: &Structure, out: search::Outcome) -> AutResult {
    let certificate = out.gens.iter().map(|g| st.preserves(g)).collect();
    let base: Vec<usize> = out.path.levels.iter().map(|l| l.base as usize).collect();
    // The generators found at level i and below generate the pointwise
    // stabilizer of the first i base points, so they form a strong generating
    // set. Orbital computations expect the chain to start at point 0.
    let group = if base.first() == Some(&0) {
        let chain = StabChain::from_strong_generators(st.n, &base, &out.gens, &out.gen_levels);
        GeneratedGroup::with_chain(out.gens, chain)
    } else {
        GeneratedGroup::new(st.n, out.gens).expect("generators have the right degree")
    };
    let order = group.order();
    debug_assert_eq!(
        order,
        out.orbit_lengths.iter().map(|&l| BigUint::from(l)).product::<BigUint>()
    );
    AutResult {
        group,
        order,
        base,
        orbit_lengths: out.orbit_lengths,
        certificate,
        nodes: out.nodes,
    }
}

fn sorted_degrees(g: &DenseGraph) -> Vec<usize> {
    let mut d: Vec<usize> = (0..g.order()).map(|v| g.degree(v)).collect();
    d.sort_unstable();
    d
}

/// True iff `phi` maps edges of `a` onto edges of `b` and non-edges onto
/// non-edges.
pub fn is_isomorphism(a: &DenseGraph, b: &DenseGraph, phi: &Permutation) -> bool {
    let n = a.order();
    n == b.order()
        && phi.degree() == n
        && (0..n).all(|u| {
            let pu = phi.image(u);
            (0..n).all(|v| a.has_edge(u, v) == b.has_edge(pu, phi.image(v)))
        })
}

/// An isomorphism `a -> b` (vertex `u` of `a` goes to `phi(u)`), or `None`
/// if the graphs are not isomorphic.
pub fn is_isomorphic(
    a: &DenseGraph,
    b: &DenseGraph,
    opts: &SearchOptions,
) -> Result<Option<Permutation>> {
    let n = a.order();
    if n != b.order() || a.edge_count() != b.edge_count() || sorted_degrees(a) != sorted_degrees(b) {
        return Ok(None);
    }
    check_cap(n, opts.cap, "isomorphism search")?;
    let complement = 2 * a.edge_count() > n * n.saturating_sub(1) / 2;
    let sa = Structure::new(Input::Graph(a), Some(complement), opts.rule);
    let sb = Structure::new(Input::Graph(b), Some(complement), opts.rule);
    let clock = Clock::new(opts.budget);
    let mut sc = partition::Scratch::new(n);
    let path_a = first_path(&sa, &mut sc);
    let path_b = first_path(&sb, &mut sc);
    let same_shape = path_a.root_trace == path_b.root_trace
        && path_a.levels.len() == path_b.levels.len()
        && path_a.levels.iter().zip(&path_b.levels).all(|(x, y)| x.trace == y.trace);
    if same_shape {
        // Cheap attempt: the two first leaves may already match.
        let mut images = vec![0u32; n];
        for (p, &x) in path_a.leaf.iter().enumerate() {
            images[x as usize] = path_b.leaf[p];
        }
        let phi = Permutation::from_images_unchecked(images);
        if is_isomorphism(a, b, &phi) {
            return Ok(Some(phi));
        }
    }
    let aut_a = automorphism_search(&sa, &clock)?;
    let aut_b = automorphism_search(&sb, &clock)?;
    let order = |o: &search::Outcome| {
        o.orbit_lengths
            .iter()
            .map(|&l| BigUint::from(l))
            .product::<BigUint>()
    };
    if order(&aut_a) != order(&aut_b) {
        return Ok(None);
    }
    isomorphism_search(&aut_a.path, &sb, &aut_b, &clock, &mut |phi| {
        is_isomorphism(a, b, phi)
    })
}

#[cfg(test)]
mod tests;
