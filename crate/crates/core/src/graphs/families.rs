//! Constructions of the rank-3 graph families.
//!
//! Apart from the Hamming graphs every family here is a Cayley graph on the
//! additive group of a vector space: `u ~ v` iff `u - v` lies in a connection
//! set `S = -S`. Vertices are the little-endian vector indices.

use std::fmt;
use std::str::FromStr;
use std::sync::Arc;

use rayon::prelude::*;
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{invalid, Error, Result};
use crate::gf::{FieldElem, FieldTable, VectorIndexing};

use super::forms::{matrix_rank, standard_form};
use super::{DenseGraph, GraphLabel};

/// Default vertex cap for constructions.
pub const CONSTRUCTION_CAP: usize = 4096;

/// Type of a quadratic form, or sign of an affine polar graph.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub enum Sign {
    #[serde(rename = "+")]
    Plus,
    #[serde(rename = "-")]
    Minus,
}

impl Sign {
    pub fn as_i64(self) -> i64 {
        match self {
            Sign::Plus => 1,
            Sign::Minus => -1,
        }
    }
}

impl fmt::Display for Sign {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Sign::Plus => "+",
            Sign::Minus => "-",
        })
    }
}

impl FromStr for Sign {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "+" | "plus" => Ok(Sign::Plus),
            "-" | "minus" => Ok(Sign::Minus),
            _ => Err(invalid(format!("sign must be + or -, got {s:?}"))),
        }
    }
}

/// One member of a constructible family, with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "family", rename_all = "lowercase")]
pub enum Family {
    /// Hamming graph H(2, s).
    Hamming2 { s: u64 },
    /// Bilinear forms graph H_q(2, m).
    Bilinear { q: u64, m: u32 },
    /// Affine polar graph VO^eps_{2m}(q).
    Polar { sign: Sign, m: u32, q: u64 },
    /// Alternating forms graph A(5, q).
    AltForms5 { q: u64 },
    /// Suzuki–Tits ovoid graph VSz(q).
    Vsz { q: u64 },
    Paley { q: u64 },
    Peisert { p: u64, t: u32 },
    /// Van Lint–Schrijver graph.
    Vls { p: u64, e: u64, t: u32 },
}

impl fmt::Display for Family {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            Family::Hamming2 { s } => write!(f, "H(2,{s})"),
            Family::Bilinear { q, m } => write!(f, "H_{q}(2,{m})"),
            Family::Polar { sign, m, q } => write!(f, "VO^{sign}_{}({q})", 2 * m),
            Family::AltForms5 { q } => write!(f, "A(5,{q})"),
            Family::Vsz { q } => write!(f, "VSz({q})"),
            Family::Paley { q } => write!(f, "Paley({q})"),
            Family::Peisert { p, t } => write!(f, "Peisert({p}^{})", 2 * t),
            Family::Vls { p, e, t } => write!(f, "VLS({p},{e},{t})"),
        }
    }
}

fn prime_power_field(q: u64) -> Result<Arc<FieldTable>> {
    if !arith::is_prime_power(q as u128) {
        return Err(invalid(format!("{q} is not a prime power")));
    }
    Ok(Arc::new(FieldTable::of_order(q)?))
}

fn pow_checked(base: u64, exp: u64) -> Result<u128> {
    u32::try_from(exp)
        .ok()
        .and_then(|e| (base as u128).checked_pow(e))
        .ok_or(Error::Overflow("vertex count"))
}

/// `Some(e)` if `q = 2^(2e+1)` with `e >= 1`.
pub(crate) fn suzuki_exponent(q: u64) -> Option<u32> {
    if !q.is_power_of_two() {
        return None;
    }
    let k = q.trailing_zeros();
    (k >= 3 && k % 2 == 1).then(|| (k - 1) / 2)
}

impl Family {
    /// Checks the parameter constraints and returns the vertex count.
    pub fn vertex_count(&self) -> Result<u128> {
        match *self {
            Family::Hamming2 { s } => {
                if s < 2 {
                    return Err(invalid("hamming2 needs s >= 2"));
                }
                pow_checked(s, 2)
            }
            Family::Bilinear { q, m } => {
                check_prime_power(q)?;
                if m < 2 {
                    return Err(invalid("bilinear forms graph needs m >= 2"));
                }
                pow_checked(q, 2 * m as u64)
            }
            Family::Polar { m, q, .. } => {
                check_prime_power(q)?;
                if m < 2 {
                    return Err(invalid("affine polar graph needs m >= 2"));
                }
                pow_checked(q, 2 * m as u64)
            }
            Family::AltForms5 { q } => {
                check_prime_power(q)?;
                pow_checked(q, 10)
            }
            Family::Vsz { q } => {
                if suzuki_exponent(q).is_none() {
                    return Err(invalid(format!("q must be 2^(2e+1) with e >= 1, got {q}")));
                }
                pow_checked(q, 4)
            }
            Family::Paley { q } => {
                check_prime_power(q)?;
                if q % 4 != 1 {
                    return Err(invalid(format!("Paley graph needs q = 1 mod 4, got {q}")));
                }
                Ok(q as u128)
            }
            Family::Peisert { p, t } => {
                if !arith::is_prime(p) || p % 4 != 3 {
                    return Err(invalid(format!("Peisert graph needs a prime p = 3 mod 4, got {p}")));
                }
                if t < 1 {
                    return Err(invalid("Peisert graph needs t >= 1"));
                }
                pow_checked(p, 2 * t as u64)
            }
            Family::Vls { p, e, t } => {
                if !arith::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if e <= 2 || !arith::is_prime(e) {
                    return Err(invalid(format!("e must be an odd prime, got {e}")));
                }
                if arith::mult_order(p, e) != Some(e - 1) {
                    return Err(invalid(format!("{p} is not primitive modulo {e}")));
                }
                if t < 1 {
                    return Err(invalid("Van Lint-Schrijver graph needs t >= 1"));
                }
                pow_checked(p, (e - 1) * t as u64)
            }
        }
    }

    /// Builds the graph, refusing vertex counts above `cap`.
    pub fn build(&self, cap: usize) -> Result<DenseGraph> {
        let n = self.vertex_count()?;
        if n > cap as u128 {
            return Err(Error::CapExceeded {
                what: "graph construction",
                size: n,
                cap: cap as u128,
            });
        }
        let (graph, field) = match *self {
            Family::Hamming2 { s } => (build_hamming2(s as usize), None),
            Family::Bilinear { q, m } => {
                let f = prime_power_field(q)?;
                (build_bilinear(&f, m as usize)?, Some(f))
            }
            Family::Polar { sign, m, q } => {
                let f = prime_power_field(q)?;
                (build_polar(sign, m as usize, f.clone())?, Some(f))
            }
            Family::AltForms5 { q } => {
                let f = prime_power_field(q)?;
                (build_altforms5(&f)?, Some(f))
            }
            Family::Vsz { q } => {
                let f = prime_power_field(q)?;
                (build_suzuki_tits(&f)?, Some(f))
            }
            Family::Paley { q } => {
                let f = prime_power_field(q)?;
                let s: Vec<usize> = f
                    .nonzero()
                    .filter(|&x| f.is_square(x))
                    .map(FieldElem::index)
                    .collect();
                (cayley(&f, 1, &s)?, Some(f))
            }
            Family::Peisert { p, t } => {
                let f = Arc::new(FieldTable::new(p, 2 * t)?);
                let s: Vec<usize> = f
                    .nonzero()
                    .filter(|&x| f.log(x).expect("nonzero") % 4 <= 1)
                    .map(FieldElem::index)
                    .collect();
                (cayley(&f, 1, &s)?, Some(f))
            }
            Family::Vls { p, e, t } => {
                let f = Arc::new(FieldTable::new(p, (e as u32 - 1) * t)?);
                let s: Vec<usize> = f
                    .nonzero()
                    .filter(|&x| f.power_class(x, e as u32).expect("e divides q - 1") == 0)
                    .map(FieldElem::index)
                    .collect();
                (cayley(&f, 1, &s)?, Some(f))
            }
        };
        let params = serde_json::to_value(self).expect("family serializes");
        Ok(graph.with_label(GraphLabel {
            family: self.to_string(),
            params,
            modulus: field.map(|f| f.modulus_string()),
        }))
    }
}

fn check_prime_power(q: u64) -> Result<()> {
    if arith::is_prime_power(q as u128) {
        Ok(())
    } else {
        Err(invalid(format!("{q} is not a prime power")))
    }
}

/// Cayley graph on GF(q)^dim with connection set `s` (vector indices).
fn cayley(field: &FieldTable, dim: usize, s: &[usize]) -> Result<DenseGraph> {
    let vi = VectorIndexing::new(field, dim)?;
    debug_assert!(s.iter().all(|&x| x != 0));
    debug_assert!({
        let set: std::collections::HashSet<_> = s.iter().copied().collect();
        s.iter().all(|&x| set.contains(&vi.neg(field, x)))
    });
    let mut g = DenseGraph::empty(vi.total());
    g.rows_mut().enumerate().par_bridge().for_each(|(u, row)| {
        for &x in s {
            let v = vi.add(field, u, x);
            row[v / 64] |= 1 << (v % 64);
        }
    });
    Ok(g)
}

fn build_hamming2(s: usize) -> DenseGraph {
    let n = s * s;
    let mut g = DenseGraph::empty(n);
    for u in 0..n {
        let (a, b) = (u % s, u / s);
        let row = g.row_mut(u);
        for c in 0..s {
            for v in [c + s * b, a + s * c] {
                if v != u {
                    row[v / 64] |= 1 << (v % 64);
                }
            }
        }
    }
    g
}

/// 2 x m matrices, first row in coordinates `0..m`; edges join matrices whose
/// difference has rank 1.
fn build_bilinear(field: &FieldTable, m: usize) -> Result<DenseGraph> {
    let vi = VectorIndexing::new(field, 2 * m)?;
    let s: Vec<usize> = (1..vi.total())
        .filter(|&i| {
            let v = vi.vector(i).expect("in range");
            let (a, b) = v.split_at(m);
            (0..m).all(|i| {
                (i + 1..m).all(|j| field.mul(a[i], b[j]) == field.mul(a[j], b[i]))
            })
        })
        .collect();
    cayley(field, 2 * m, &s)
}

fn build_polar(sign: Sign, m: usize, field: Arc<FieldTable>) -> Result<DenseGraph> {
    let form = standard_form(sign, m, field.clone())?;
    let s = form.isotropic_vectors()?;
    cayley(&field, 2 * m, &s)
}

/// Upper-triangle positions `(i, j)`, `i < j`, of a 5 x 5 alternating matrix,
/// in lexicographic order; coordinate `c` of a vertex is entry `PAIRS[c]`.
const ALT5_PAIRS: [(usize, usize); 10] = [
    (0, 1), (0, 2), (0, 3), (0, 4), (1, 2), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4),
];

fn build_altforms5(field: &FieldTable) -> Result<DenseGraph> {
    let vi = VectorIndexing::new(field, 10)?;
    let s: Vec<usize> = (1..vi.total())
        .filter(|&i| {
            let v = vi.vector(i).expect("in range");
            let mut mat = vec![vec![FieldElem::ZERO; 5]; 5];
            for (c, &(a, b)) in ALT5_PAIRS.iter().enumerate() {
                mat[a][b] = v[c];
                mat[b][a] = field.neg(v[c]);
            }
            matrix_rank(field, mat) == 2
        })
        .collect();
    cayley(field, 10, &s)
}

/// Points of the Suzuki–Tits ovoid in GF(q)^4: `(0,0,1,0)` together with the
/// vectors `(x, y, xy + x^(2+sigma) + y^sigma, 1)`, `sigma = x -> x^(2^(e+1))`.
pub(crate) fn suzuki_tits_ovoid(field: &FieldTable) -> Result<Vec<[FieldElem; 4]>> {
    let q = field.order() as u64;
    let e = suzuki_exponent(q)
        .ok_or_else(|| invalid(format!("q must be 2^(2e+1) with e >= 1, got {q}")))?;
    let sigma = |x: FieldElem| field.frobenius(x, e + 1);
    let mut points = vec![[FieldElem::ZERO, FieldElem::ZERO, FieldElem::ONE, FieldElem::ZERO]];
    for x in field.elements() {
        for y in field.elements() {
            let z = field.add(
                field.add(field.mul(x, y), field.mul(field.mul(x, x), sigma(x))),
                sigma(y),
            );
            points.push([x, y, z, FieldElem::ONE]);
        }
    }
    Ok(points)
}

fn build_suzuki_tits(field: &FieldTable) -> Result<DenseGraph> {
    let vi = VectorIndexing::new(field, 4)?;
    let mut s = Vec::new();
    for point in suzuki_tits_ovoid(field)? {
        for c in field.nonzero() {
            let scaled: Vec<FieldElem> = point.iter().map(|&x| field.mul(c, x)).collect();
            s.push(vi.index(&scaled)?);
        }
    }
    s.sort_unstable();
    s.dedup();
    cayley(field, 4, &s)
}

pub fn hamming2(s: u64) -> Result<DenseGraph> {
    Family::Hamming2 { s }.build(CONSTRUCTION_CAP)
}

pub fn bilinear_forms(q: u64, m: u32) -> Result<DenseGraph> {
    Family::Bilinear { q, m }.build(CONSTRUCTION_CAP)
}

pub fn affine_polar(sign: Sign, m: u32, q: u64) -> Result<DenseGraph> {
    Family::Polar { sign, m, q }.build(CONSTRUCTION_CAP)
}

pub fn alternating_forms5(q: u64) -> Result<DenseGraph> {
    Family::AltForms5 { q }.build(CONSTRUCTION_CAP)
}

pub fn suzuki_tits(q: u64) -> Result<DenseGraph> {
    Family::Vsz { q }.build(CONSTRUCTION_CAP)
}

pub fn paley(q: u64) -> Result<DenseGraph> {
    Family::Paley { q }.build(CONSTRUCTION_CAP)
}

pub fn peisert(p: u64, t: u32) -> Result<DenseGraph> {
    Family::Peisert { p, t }.build(CONSTRUCTION_CAP)
}

pub fn van_lint_schrijver(p: u64, e: u64, t: u32) -> Result<DenseGraph> {
    Family::Vls { p, e, t }.build(CONSTRUCTION_CAP)
}
