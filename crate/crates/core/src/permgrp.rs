//! Permutation groups given by generators.
//!
//! Points are `0..n` and permutations act on the right: `i^(gh) = (i^g)^h`.
//! Group order and membership go through a deterministic Schreier–Sims
//! construction whose first base point is always 0, so the first stabilizer in
//! the chain is the point stabilizer `G_0` used for subdegrees and orbitals.

use std::collections::VecDeque;
use std::fmt;
use std::sync::OnceLock;

use num_bigint::BigUint;
use num_traits::One;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{invalid, Error, Result};
use crate::gf::{FieldElem, FieldTable};
use crate::iso::{automorphisms, PairColoring, SearchOptions};

/// Default cap for orbital computations (the colour matrix is `n^2` cells).
pub const ORBITAL_CAP: usize = 8192;

/// A permutation of `0..n`, stored as its image list.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
#[serde(transparent)]
pub struct Permutation(Vec<u32>);

impl fmt::Debug for Permutation {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_identity() {
            return write!(f, "()");
        }
        let mut seen = vec![false; self.0.len()];
        for start in 0..self.0.len() {
            if seen[start] || self.0[start] as usize == start {
                continue;
            }
            write!(f, "(")?;
            let mut i = start;
            let mut first = true;
            while !seen[i] {
                seen[i] = true;
                if !first {
                    write!(f, " ")?;
                }
                write!(f, "{i}")?;
                first = false;
                i = self.0[i] as usize;
            }
            write!(f, ")")?;
        }
        Ok(())
    }
}

impl Permutation {
    pub fn identity(n: usize) -> Self {
        Permutation((0..n as u32).collect())
    }

    /// Checks that `images` is a bijection of `0..images.len()`.
    pub fn from_images(images: Vec<u32>) -> Result<Self> {
        let n = images.len();
        let mut seen = vec![false; n];
        for &x in &images {
            let x = x as usize;
            if x >= n || seen[x] {
                return Err(invalid(format!("image list of length {n} is not a bijection")));
            }
            seen[x] = true;
        }
        Ok(Permutation(images))
    }

    pub(crate) fn from_images_unchecked(images: Vec<u32>) -> Self {
        debug_assert!(Self::from_images(images.clone()).is_ok());
        Permutation(images)
    }

    /// Builds a permutation of degree `n` from disjoint cycles.
    pub fn from_cycles(n: usize, cycles: &[&[u32]]) -> Result<Self> {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for cycle in cycles {
            for (i, &a) in cycle.iter().enumerate() {
                let b = cycle[(i + 1) % cycle.len()];
                if a as usize >= n || b as usize >= n {
                    return Err(invalid(format!("cycle point out of range for degree {n}")));
                }
                images[a as usize] = b;
            }
        }
        Self::from_images(images)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    #[inline]
    pub fn image(&self, i: usize) -> usize {
        self.0[i] as usize
    }

    pub fn images(&self) -> &[u32] {
        &self.0
    }

    pub fn is_identity(&self) -> bool {
        self.0.iter().enumerate().all(|(i, &x)| i == x as usize)
    }

    /// `self` followed by `other`.
    pub fn then(&self, other: &Permutation) -> Permutation {
        Permutation(self.0.iter().map(|&x| other.0[x as usize]).collect())
    }

    pub fn inverse(&self) -> Permutation {
        let mut inv = vec![0u32; self.0.len()];
        for (i, &x) in self.0.iter().enumerate() {
            inv[x as usize] = i as u32;
        }
        Permutation(inv)
    }

    pub fn first_moved(&self) -> Option<usize> {
        self.0.iter().enumerate().position(|(i, &x)| i != x as usize)
    }
}

/// One level of a stabilizer chain: the orbit of the base point under the
/// strong generators that fix all earlier base points, as a Schreier tree.
#[derive(Clone, Debug)]
struct Level {
    base: usize,
    gens: Vec<Permutation>,
    inv_gens: Vec<Permutation>,
    /// `parent[x] = (y, s)` with `x = y^gens[s]`; the base point maps to itself.
    parent: Vec<Option<(u32, u32)>>,
    orbit: Vec<u32>,
}

impl Level {
    fn new(base: usize, n: usize) -> Self {
        let mut parent = vec![None; n];
        parent[base] = Some((base as u32, u32::MAX));
        Level {
            base,
            gens: Vec::new(),
            inv_gens: Vec::new(),
            parent,
            orbit: vec![base as u32],
        }
    }

    fn add_gen(&mut self, g: Permutation) {
        self.inv_gens.push(g.inverse());
        self.gens.push(g);
        self.rebuild_orbit();
    }

    fn rebuild_orbit(&mut self) {
        let n = self.parent.len();
        self.parent = vec![None; n];
        self.parent[self.base] = Some((self.base as u32, u32::MAX));
        self.orbit = vec![self.base as u32];
        let mut queue = VecDeque::from([self.base]);
        while let Some(x) = queue.pop_front() {
            for (s, g) in self.gens.iter().enumerate() {
                let y = g.image(x);
                if self.parent[y].is_none() {
                    self.parent[y] = Some((x as u32, s as u32));
                    self.orbit.push(y as u32);
                    queue.push_back(y);
                }
            }
        }
    }

    fn contains(&self, x: usize) -> bool {
        self.parent[x].is_some()
    }

    /// `g * u_x^{-1}` where `u_x` maps the base point to `x`.
    fn strip_step(&self, g: &Permutation, x: usize) -> Permutation {
        let mut out = g.clone();
        let mut cur = x;
        while cur != self.base {
            let (prev, s) = self.parent[cur].unwrap();
            out = out.then(&self.inv_gens[s as usize]);
            cur = prev as usize;
        }
        out
    }

    /// The transversal element `u_x`.
    fn representative(&self, x: usize) -> Permutation {
        let mut path = Vec::new();
        let mut cur = x;
        while cur != self.base {
            let (prev, s) = self.parent[cur].unwrap();
            path.push(s as usize);
            cur = prev as usize;
        }
        let mut u = Permutation::identity(self.parent.len());
        for &s in path.iter().rev() {
            u = u.then(&self.gens[s]);
        }
        u
    }
}

/// A base and strong generating set.
#[derive(Clone, Debug)]
pub struct StabChain {
    degree: usize,
    levels: Vec<Level>,
}

impl StabChain {
    /// Deterministic Schreier–Sims. The base starts at 0; further base points
    /// are the least points moved by the elements that need them.
    pub fn build(degree: usize, generators: &[Permutation]) -> Self {
        let mut chain = StabChain {
            degree,
            levels: Vec::new(),
        };
        if degree == 0 {
            return chain;
        }
        chain.levels.push(Level::new(0, degree));
        for g in generators {
            if g.is_identity() {
                continue;
            }
            chain.levels[0].add_gen(g.clone());
        }
        if chain.levels[0].gens.is_empty() {
            return chain;
        }
        // Every generator must move some base point.
        for g in generators {
            if !g.is_identity() && chain.fixes_base(g) {
                let b = g.first_moved().unwrap();
                chain.levels.push(Level::new(b, degree));
            }
        }
        chain.complete();
        chain
    }

    /// Chain for a known base and strong generating set: `levels[k]` is the
    /// deepest base index fixed pointwise before generator `k` acts, so
    /// generator `k` fixes `base[..levels[k]]`. No sifting is done; the caller
    /// guarantees that the generators at index `>= i` generate the pointwise
    /// stabilizer of `base[..i]`.
    pub(crate) fn from_strong_generators(
        degree: usize,
        base: &[usize],
        generators: &[Permutation],
        levels: &[usize],
    ) -> Self {
        let mut chain = StabChain {
            degree,
            levels: base.iter().map(|&b| Level::new(b, degree)).collect(),
        };
        for (i, level) in chain.levels.iter_mut().enumerate() {
            for (g, &l) in generators.iter().zip(levels) {
                if l >= i {
                    level.inv_gens.push(g.inverse());
                    level.gens.push(g.clone());
                }
            }
            level.rebuild_orbit();
        }
        chain
    }

    fn fixes_base(&self, g: &Permutation) -> bool {
        self.levels.iter().all(|l| g.image(l.base) == l.base)
    }

    /// Sifts `g` through levels `from..`; returns the residue and the level
    /// at which sifting stopped (`levels.len()` if it passed every level).
    fn strip(&self, g: &Permutation, from: usize) -> (Permutation, usize) {
        let mut h = g.clone();
        for (i, level) in self.levels.iter().enumerate().skip(from) {
            let x = h.image(level.base);
            if !level.contains(x) {
                return (h, i);
            }
            h = level.strip_step(&h, x);
        }
        (h, self.levels.len())
    }

    fn complete(&mut self) {
        // done[i] holds the Schreier generators already verified at level i,
        // keyed by (orbit point, generator index).
        let mut done: Vec<std::collections::HashSet<(u32, u32)>> = vec![Default::default(); self.levels.len()];
        let mut i = self.levels.len() - 1;
        loop {
            let mut restart = None;
            'scan: for oi in 0..self.levels[i].orbit.len() {
                let beta = self.levels[i].orbit[oi] as usize;
                for s in 0..self.levels[i].gens.len() {
                    if !done[i].insert((beta as u32, s as u32)) {
                        continue;
                    }
                    let level = &self.levels[i];
                    let img = level.gens[s].image(beta);
                    let sg = level
                        .representative(beta)
                        .then(&level.gens[s])
                        .then(&level.representative(img).inverse());
                    if sg.is_identity() {
                        continue;
                    }
                    let (h, j) = self.strip(&sg, i + 1);
                    if h.is_identity() {
                        continue;
                    }
                    if j == self.levels.len() {
                        let b = h.first_moved().unwrap();
                        self.levels.push(Level::new(b, self.degree));
                        done.push(Default::default());
                    }
                    for l in i + 1..=j {
                        self.levels[l].add_gen(h.clone());
                    }
                    restart = Some(j);
                    break 'scan;
                }
            }
            match restart {
                Some(j) => i = j,
                None if i == 0 => break,
                None => i -= 1,
            }
        }
    }

    pub fn order(&self) -> BigUint {
        self.levels
            .iter()
            .fold(BigUint::one(), |acc, l| acc * BigUint::from(l.orbit.len()))
    }

    pub fn base(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.base).collect()
    }

    pub fn basic_orbit_lengths(&self) -> Vec<usize> {
        self.levels.iter().map(|l| l.orbit.len()).collect()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        if g.degree() != self.degree {
            return false;
        }
        let (h, j) = self.strip(g, 0);
        j == self.levels.len() && h.is_identity()
    }

    /// Generators of the stabilizer of the first base point (point 0).
    fn point_stabilizer_gens(&self) -> &[Permutation] {
        self.levels.get(1).map(|l| l.gens.as_slice()).unwrap_or(&[])
    }
}

/// A permutation group given by generators, with a lazily built stabilizer chain.
#[derive(Debug)]
pub struct GeneratedGroup {
    degree: usize,
    generators: Vec<Permutation>,
    chain: OnceLock<StabChain>,
}

impl Clone for GeneratedGroup {
    fn clone(&self) -> Self {
        let chain = OnceLock::new();
        if let Some(c) = self.chain.get() {
            let _ = chain.set(c.clone());
        }
        GeneratedGroup {
            degree: self.degree,
            generators: self.generators.clone(),
            chain,
        }
    }
}

impl GeneratedGroup {
    pub fn new(degree: usize, generators: Vec<Permutation>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.degree() != degree) {
            return Err(invalid(format!(
                "generator of degree {} in a group of degree {degree}",
                g.degree()
            )));
        }
        Ok(GeneratedGroup {
            degree,
            generators,
            chain: OnceLock::new(),
        })
    }

    /// A group whose stabilizer chain is already known.
    pub(crate) fn with_chain(generators: Vec<Permutation>, chain: StabChain) -> Self {
        GeneratedGroup {
            degree: chain.degree,
            generators,
            chain: OnceLock::from(chain),
        }
    }

    pub fn trivial(degree: usize) -> Self {
        GeneratedGroup {
            degree,
            generators: Vec::new(),
            chain: OnceLock::new(),
        }
    }

    /// Parses a JSON array of image lists.
    pub fn from_json(text: &str) -> Result<Self> {
        let raw: Vec<Vec<u32>> =
            serde_json::from_str(text).map_err(|e| Error::Parse(e.to_string()))?;
        let degree = raw
            .first()
            .map(Vec::len)
            .ok_or_else(|| Error::Parse("empty generator list".into()))?;
        let gens = raw
            .into_iter()
            .map(Permutation::from_images)
            .collect::<Result<Vec<_>>>()?;
        Self::new(degree, gens)
    }

    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.generators).expect("image lists serialize")
    }

    pub fn degree(&self) -> usize {
        self.degree
    }

    pub fn generators(&self) -> &[Permutation] {
        &self.generators
    }

    pub fn chain(&self) -> &StabChain {
        self.chain
            .get_or_init(|| StabChain::build(self.degree, &self.generators))
    }

    pub fn order(&self) -> BigUint {
        self.chain().order()
    }

    pub fn contains(&self, g: &Permutation) -> bool {
        self.chain().contains(g)
    }

    pub fn orbit(&self, point: usize) -> Vec<usize> {
        orbit_of(self.degree, &self.generators, point)
    }

    pub fn is_transitive(&self) -> bool {
        self.degree == 0 || self.orbit(0).len() == self.degree
    }

    pub fn orbitals(&self) -> Result<OrbitalDecomposition> {
        orbitals_capped(self, ORBITAL_CAP)
    }
}

/// Breadth-first orbit of `point`, sorted.
pub fn orbit_of(degree: usize, gens: &[Permutation], point: usize) -> Vec<usize> {
    let mut seen = vec![false; degree];
    seen[point] = true;
    let mut out = vec![point];
    let mut queue = VecDeque::from([point]);
    while let Some(x) = queue.pop_front() {
        for g in gens {
            let y = g.image(x);
            if !seen[y] {
                seen[y] = true;
                out.push(y);
                queue.push_back(y);
            }
        }
    }
    out.sort_unstable();
    out
}

/// Orbit partition of `0..degree` as a label per point; labels are the least
/// point of each orbit.
pub fn orbit_labels(degree: usize, gens: &[Permutation]) -> Vec<usize> {
    let mut label: Vec<usize> = (0..degree).collect();
    fn find(label: &mut [usize], x: usize) -> usize {
        let mut r = x;
        while label[r] != r {
            r = label[r];
        }
        let mut c = x;
        while label[c] != r {
            let next = label[c];
            label[c] = r;
            c = next;
        }
        r
    }
    for g in gens {
        for x in 0..degree {
            let (a, b) = (find(&mut label, x), find(&mut label, g.image(x)));
            if a != b {
                let (lo, hi) = if a < b { (a, b) } else { (b, a) };
                label[hi] = lo;
            }
        }
    }
    for x in 0..degree {
        label[x] = find(&mut label, x);
    }
    label
}

/// The orbits of a transitive group on ordered pairs.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct OrbitalDecomposition {
    degree: usize,
    color: Vec<u16>,
    rank: usize,
    subdegrees: Vec<usize>,
}

impl OrbitalDecomposition {
    pub fn degree(&self) -> usize {
        self.degree
    }

    /// Orbital id of `(i, j)`: 0 is the diagonal, the others are numbered by
    /// the least point of the corresponding suborbit of `G_0`.
    #[inline]
    pub fn color(&self, i: usize, j: usize) -> usize {
        self.color[i * self.degree + j] as usize
    }

    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Sizes of the non-trivial suborbits, sorted increasingly.
    pub fn subdegrees(&self) -> &[usize] {
        &self.subdegrees
    }

    pub fn is_invariant_under(&self, g: &Permutation) -> bool {
        let n = self.degree;
        (0..n).all(|i| {
            let gi = g.image(i);
            (0..n).all(|j| self.color(i, j) == self.color(gi, g.image(j)))
        })
    }
}

/// Orbitals of a transitive group, refusing degrees above `cap`.
pub fn orbitals_capped(group: &GeneratedGroup, cap: usize) -> Result<OrbitalDecomposition> {
    let n = group.degree();
    if n > cap {
        return Err(Error::CapExceeded {
            what: "orbital computation",
            size: n as u128,
            cap: cap as u128,
        });
    }
    if n == 0 {
        return Err(invalid("empty permutation domain"));
    }
    let orbit0 = group.orbit(0);
    if orbit0.len() != n {
        return Err(Error::Intransitive {
            orbit: orbit0.len(),
            degree: n,
        });
    }
    let chain = group.chain();
    let level0 = &chain.levels[0];
    let labels = orbit_labels(n, chain.point_stabilizer_gens());

    // Suborbit ids in order of their least point; label 0 is {0}.
    let mut suborbit_id = vec![u16::MAX; n];
    let mut sizes = Vec::new();
    for x in 0..n {
        let l = labels[x];
        if suborbit_id[l] == u16::MAX {
            suborbit_id[l] = sizes.len() as u16;
            sizes.push(0usize);
        }
        suborbit_id[x] = suborbit_id[l];
        sizes[suborbit_id[x] as usize] += 1;
    }

    let mut color = vec![0u16; n * n];
    use rayon::prelude::*;
    color.par_chunks_mut(n).enumerate().for_each(|(i, row)| {
        // u_i maps 0 to i; (i, j) lies in the orbital of (0, j^{u_i^{-1}}).
        let u_inv = level0.representative(i).inverse();
        for (j, c) in row.iter_mut().enumerate() {
            *c = suborbit_id[u_inv.image(j)];
        }
    });

    let mut subdegrees: Vec<usize> = sizes[1..].to_vec();
    subdegrees.sort_unstable();
    Ok(OrbitalDecomposition {
        degree: n,
        color,
        rank: sizes.len(),
        subdegrees,
    })
}

/// Symmetric group on `n` points, generated by a transposition and an n-cycle.
pub fn symmetric_group(n: usize) -> GeneratedGroup {
    GeneratedGroup::new(n, sym_gens(n)).expect("degrees agree")
}

fn sym_gens(n: usize) -> Vec<Permutation> {
    if n < 2 {
        return Vec::new();
    }
    let t = Permutation::from_cycles(n, &[&[0, 1]]).unwrap();
    if n == 2 {
        return vec![t];
    }
    let cyc: Vec<u32> = (0..n as u32).collect();
    vec![t, Permutation::from_cycles(n, &[&cyc]).unwrap()]
}

pub fn cyclic_group(n: usize) -> GeneratedGroup {
    let cyc: Vec<u32> = (0..n as u32).collect();
    let gens = if n < 2 {
        Vec::new()
    } else {
        vec![Permutation::from_cycles(n, &[&cyc]).unwrap()]
    };
    GeneratedGroup::new(n, gens).expect("degrees agree")
}

/// Dihedral group of order `2n` acting on the vertices of an n-gon.
pub fn dihedral_group(n: usize) -> GeneratedGroup {
    let rot = Permutation::from_images((0..n as u32).map(|i| (i + 1) % n as u32).collect())
        .expect("rotation");
    let refl = Permutation::from_images((0..n as u32).map(|i| (n as u32 - i) % n as u32).collect())
        .expect("reflection");
    GeneratedGroup::new(n, vec![rot, refl]).expect("degrees agree")
}

/// `Sym(delta) wr Sym(x)` in the imprimitive action on `delta * x` points.
/// Point `a + delta * b` is element `a` of block `b`.
pub fn imprimitive_wreath(delta: usize, x: usize) -> Result<GeneratedGroup> {
    if delta < 2 || x < 2 {
        return Err(invalid("imprimitive wreath product needs delta, x >= 2"));
    }
    let n = delta * x;
    let mut gens = Vec::new();
    for g in sym_gens(delta) {
        let mut images: Vec<u32> = (0..n as u32).collect();
        for a in 0..delta {
            images[a] = g.image(a) as u32;
        }
        gens.push(Permutation::from_images_unchecked(images));
    }
    for h in sym_gens(x) {
        let images = (0..n)
            .map(|p| (p % delta + delta * h.image(p / delta)) as u32)
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    GeneratedGroup::new(n, gens)
}

/// `G0 wr Sym(m)` in the product action on `degree(G0)^m` points, with tuples
/// indexed little-endian.
pub fn product_action(g0: &GeneratedGroup, m: usize, cap: usize) -> Result<GeneratedGroup> {
    if m < 1 {
        return Err(invalid("product action needs m >= 1"));
    }
    let d = g0.degree();
    let n = (d as u128).checked_pow(m as u32).unwrap_or(u128::MAX);
    if n > cap as u128 {
        return Err(Error::CapExceeded {
            what: "product action degree",
            size: n,
            cap: cap as u128,
        });
    }
    let n = n as usize;
    let digits = |mut p: usize| -> Vec<usize> {
        let mut out = vec![0; m];
        for c in out.iter_mut() {
            *c = p % d;
            p /= d;
        }
        out
    };
    let undigits = |ds: &[usize]| ds.iter().rev().fold(0, |acc, &c| acc * d + c);

    let mut gens = Vec::new();
    for g in g0.generators() {
        let images = (0..n)
            .map(|p| {
                let mut t = digits(p);
                t[0] = g.image(t[0]);
                undigits(&t) as u32
            })
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    for h in sym_gens(m) {
        // coordinate i of the image is coordinate h^{-1}(i) of the source
        let images = (0..n)
            .map(|p| {
                let t = digits(p);
                let mut s = vec![0; m];
                for (i, &c) in t.iter().enumerate() {
                    s[h.image(i)] = c;
                }
                undigits(&s) as u32
            })
            .collect();
        gens.push(Permutation::from_images_unchecked(images));
    }
    GeneratedGroup::new(n, gens)
}

/// `Sym(delta) wr Sym(m)` in the product action.
pub fn product_wreath(delta: usize, m: usize, cap: usize) -> Result<GeneratedGroup> {
    if delta < 2 || m < 2 {
        return Err(invalid("product wreath needs delta, m >= 2"));
    }
    product_action(&symmetric_group(delta), m, cap)
}

/// Rank of `G0 wr Sym(m)` computed from its orbitals, next to the closed form
/// `binom(r + m - 1, m)` where `r` is the rank of `G0`.
pub fn wreath_rank_check(g0: &GeneratedGroup, m: usize, cap: usize) -> Result<(usize, u128)> {
    let r = g0.orbitals()?.rank();
    let w = product_action(g0, m, cap)?;
    let computed = orbitals_capped(&w, cap)?.rank();
    let formula = arith::binomial((r + m - 1) as u64, m as u64)
        .ok_or(Error::Overflow("binomial"))?;
    Ok((computed, formula))
}

/// `{x -> a x^(p^j) + b}` on GF(q), with `a` in the subgroup of index
/// `mult_index` of `F^x` and `j` ranging over all Frobenius powers when
/// `with_frobenius` is set.
pub fn affine_1dim_group(
    field: &FieldTable,
    mult_index: usize,
    with_frobenius: bool,
) -> Result<GeneratedGroup> {
    let q = field.order();
    if mult_index == 0 || !(q - 1).is_multiple_of(mult_index) {
        return Err(invalid(format!("{mult_index} does not divide q - 1 = {}", q - 1)));
    }
    let mut gens = Vec::new();
    // translations by the additive basis 1, x, x^2, ...
    let p = field.characteristic() as usize;
    for i in 0..field.degree() {
        let t = FieldElem::from_index(p.pow(i));
        gens.push(Permutation::from_images_unchecked(
            field.elements().map(|x| field.add(x, t).index() as u32).collect(),
        ));
    }
    let a = field.exp(mult_index as u64);
    if a != FieldElem::ONE {
        gens.push(Permutation::from_images_unchecked(
            field.elements().map(|x| field.mul(a, x).index() as u32).collect(),
        ));
    }
    if with_frobenius && field.degree() > 1 {
        gens.push(Permutation::from_images_unchecked(
            field.elements().map(|x| field.frobenius(x, 1).index() as u32).collect(),
        ));
    }
    GeneratedGroup::new(q, gens)
}

/// The 2-closure of a transitive group, under the default search options.
pub fn two_closure(group: &GeneratedGroup) -> Result<GeneratedGroup> {
    two_closure_with(group, &SearchOptions::default())
}

/// The largest subgroup of `Sym(n)` with the same orbitals as `group`,
/// computed as the automorphism group of the orbital coloring.
pub fn two_closure_with(group: &GeneratedGroup, opts: &SearchOptions) -> Result<GeneratedGroup> {
    let n = group.degree();
    if n > opts.cap {
        return Err(Error::CapExceeded {
            what: "2-closure",
            size: n as u128,
            cap: opts.cap as u128,
        });
    }
    let orbitals = group.orbitals()?;
    let coloring = PairColoring::from_orbitals(&orbitals);
    let closure = automorphisms(&coloring, opts)?.group;
    if let Some(g) = group.generators().iter().find(|g| !closure.contains(g)) {
        return Err(Error::Verification(format!(
            "generator {g:?} is missing from the computed 2-closure"
        )));
    }
    if closure.orbitals()? != orbitals {
        return Err(Error::Verification(
            "the computed 2-closure has different orbitals".into(),
        ));
    }
    Ok(closure)
}
