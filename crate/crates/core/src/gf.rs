//! Finite fields GF(p^k) backed by log/exp tables.
//!
//! Elements are encoded by their index in `[0, q)`: the base-`p` digits of the
//! index are the polynomial coefficients of the element, constant term first.
//! The defining modulus is the lexicographically least monic irreducible
//! polynomial, comparing coefficient tuples constant term first, and the
//! reference primitive element is the least index of multiplicative order
//! `q - 1`. Both choices are deterministic so that every table and graph built
//! on top of a field is reproducible.

use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::error::{invalid, Error, Result};

/// Largest field order supported by the eager tables.
pub const MAX_FIELD_ORDER: u64 = 1 << 16;

/// A field element, identified by its index.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Default, Serialize)]
pub struct FieldElem(u32);

impl FieldElem {
    pub const ZERO: FieldElem = FieldElem(0);
    pub const ONE: FieldElem = FieldElem(1);

    pub fn index(self) -> usize {
        self.0 as usize
    }

    pub fn is_zero(self) -> bool {
        self.0 == 0
    }

    pub(crate) fn from_index(i: usize) -> Self {
        FieldElem(i as u32)
    }
}

impl fmt::Display for FieldElem {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

/// Arithmetic tables for one field.
#[derive(Clone)]
pub struct FieldTable {
    p: u32,
    k: u32,
    q: u32,
    /// Monic modulus, `modulus[i]` is the coefficient of `x^i`, length `k + 1`.
    modulus: Vec<u32>,
    generator: FieldElem,
    /// `exp[i] = g^i`, stored twice over so that `log a + log b` needs no reduction.
    exp: Vec<u32>,
    /// `log[x]` for nonzero `x`; `log[0]` is unused.
    log: Vec<u32>,
    /// Powers of `p` used to split an index into digits.
    place: Vec<u32>,
}

impl fmt::Debug for FieldTable {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("FieldTable")
            .field("p", &self.p)
            .field("k", &self.k)
            .field("modulus", &self.modulus)
            .field("generator", &self.generator)
            .finish()
    }
}

impl PartialEq for FieldTable {
    fn eq(&self, other: &Self) -> bool {
        self.p == other.p && self.k == other.k && self.modulus == other.modulus
    }
}

impl Eq for FieldTable {}

impl FieldTable {
    /// Builds GF(p^k).
    pub fn new(p: u64, k: u32) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        if k == 0 {
            return Err(invalid("extension degree must be at least 1"));
        }
        let q = (p as u128)
            .checked_pow(k)
            .filter(|&q| q <= MAX_FIELD_ORDER as u128)
            .ok_or(Error::CapExceeded {
                what: "field order",
                size: (p as u128).saturating_pow(k),
                cap: MAX_FIELD_ORDER as u128,
            })? as u32;
        let p = p as u32;

        let modulus = least_irreducible(p, k);
        let place: Vec<u32> = (0..k).map(|i| p.pow(i)).collect();
        let mulmod = |a: u32, b: u32| poly_mulmod(a, b, p, k, &modulus);

        let order = q - 1;
        let factors = arith::prime_divisors(order as u64);
        let generator = (1..q)
            .find(|&g| {
                order == 1
                    || factors
                        .iter()
                        .all(|&r| poly_pow(g, (order as u64) / r, &mulmod) != 1)
            })
            .expect("multiplicative group of a finite field is cyclic");

        let mut exp = vec![0u32; 2 * order as usize];
        let mut log = vec![0u32; q as usize];
        let mut x = 1u32;
        for i in 0..order {
            exp[i as usize] = x;
            log[x as usize] = i;
            x = mulmod(x, generator);
        }
        debug_assert_eq!(x, 1);
        for i in 0..order as usize {
            exp[i + order as usize] = exp[i];
        }

        Ok(FieldTable {
            p,
            k,
            q,
            modulus,
            generator: FieldElem(generator),
            exp,
            log,
            place,
        })
    }

    /// Builds GF(q) for a prime power `q`.
    pub fn of_order(q: u64) -> Result<Self> {
        let (p, k) = arith::prime_power(q as u128)
            .ok_or_else(|| invalid(format!("{q} is not a prime power")))?;
        Self::new(p, k)
    }

    pub fn characteristic(&self) -> u64 {
        self.p as u64
    }

    pub fn degree(&self) -> u32 {
        self.k
    }

    pub fn order(&self) -> usize {
        self.q as usize
    }

    /// Coefficients of the modulus, constant term first, leading 1 included.
    pub fn modulus(&self) -> &[u32] {
        &self.modulus
    }

    /// Human-readable modulus, e.g. `x^3 + x^2 + 1`.
    pub fn modulus_string(&self) -> String {
        let mut terms = Vec::new();
        for (i, &c) in self.modulus.iter().enumerate().rev() {
            if c == 0 {
                continue;
            }
            let coef = if c == 1 && i > 0 { String::new() } else { c.to_string() };
            terms.push(match i {
                0 => coef,
                1 => format!("{coef}x"),
                _ => format!("{coef}x^{i}"),
            });
        }
        terms.join(" + ")
    }

    pub fn generator(&self) -> FieldElem {
        self.generator
    }

    pub fn elem(&self, index: usize) -> Result<FieldElem> {
        if index < self.q as usize {
            Ok(FieldElem(index as u32))
        } else {
            Err(Error::OutOfRange {
                index: index as u128,
                limit: self.q as u128,
            })
        }
    }

    pub fn elements(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (0..self.q).map(FieldElem)
    }

    pub fn nonzero(&self) -> impl Iterator<Item = FieldElem> + '_ {
        (1..self.q).map(FieldElem)
    }

    /// Image of an element of the prime field.
    pub fn from_int(&self, n: i64) -> FieldElem {
        FieldElem(n.rem_euclid(self.p as i64) as u32)
    }

    pub fn add(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if self.p == 2 {
            return FieldElem(a.0 ^ b.0);
        }
        if self.k == 1 {
            let s = a.0 + b.0;
            return FieldElem(if s >= self.p { s - self.p } else { s });
        }
        let (mut x, mut y, mut out) = (a.0, b.0, 0);
        for &w in &self.place {
            let d = (x % self.p + y % self.p) % self.p;
            out += d * w;
            x /= self.p;
            y /= self.p;
        }
        FieldElem(out)
    }

    pub fn neg(&self, a: FieldElem) -> FieldElem {
        if self.p == 2 {
            return a;
        }
        let (mut x, mut out) = (a.0, 0);
        for &w in &self.place {
            let d = x % self.p;
            out += ((self.p - d) % self.p) * w;
            x /= self.p;
        }
        FieldElem(out)
    }

    pub fn sub(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        self.add(a, self.neg(b))
    }

    pub fn mul(&self, a: FieldElem, b: FieldElem) -> FieldElem {
        if a.0 == 0 || b.0 == 0 {
            return FieldElem::ZERO;
        }
        FieldElem(self.exp[(self.log[a.0 as usize] + self.log[b.0 as usize]) as usize])
    }

    pub fn inv(&self, a: FieldElem) -> Result<FieldElem> {
        if a.0 == 0 {
            return Err(Error::ZeroInverse);
        }
        let order = self.q - 1;
        Ok(FieldElem(self.exp[((order - self.log[a.0 as usize]) % order) as usize]))
    }

    pub fn div(&self, a: FieldElem, b: FieldElem) -> Result<FieldElem> {
        Ok(self.mul(a, self.inv(b)?))
    }

    /// `a^e`; `0^0` is taken to be 1.
    pub fn pow(&self, a: FieldElem, e: u64) -> FieldElem {
        if e == 0 {
            return FieldElem::ONE;
        }
        if a.0 == 0 {
            return FieldElem::ZERO;
        }
        let order = (self.q - 1) as u64;
        let l = (self.log[a.0 as usize] as u64 * (e % order)) % order;
        FieldElem(self.exp[l as usize])
    }

    /// Discrete logarithm relative to the reference primitive element.
    pub fn log(&self, a: FieldElem) -> Result<u32> {
        if a.0 == 0 {
            return Err(invalid("logarithm of zero"));
        }
        Ok(self.log[a.0 as usize])
    }

    /// `g^i` for the reference primitive element `g`.
    pub fn exp(&self, i: u64) -> FieldElem {
        FieldElem(self.exp[(i % (self.q as u64 - 1)) as usize])
    }

    /// `x^(p^j)`, the `j`-th power of the Frobenius automorphism.
    pub fn frobenius(&self, a: FieldElem, j: u32) -> FieldElem {
        self.pow(a, (self.p as u64).pow(j % self.k))
    }

    /// True iff `a` is a square; zero counts as a square.
    pub fn is_square(&self, a: FieldElem) -> bool {
        a.0 == 0 || self.p == 2 || self.log[a.0 as usize].is_multiple_of(2)
    }

    /// Coset index of `a` in `F^x / (F^x)^e`, i.e. `log(a) mod e`.
    pub fn power_class(&self, a: FieldElem, e: u32) -> Result<u32> {
        if e == 0 || !(self.q - 1).is_multiple_of(e) {
            return Err(invalid(format!("{e} does not divide q - 1 = {}", self.q - 1)));
        }
        Ok(self.log(a)? % e)
    }
}

/// Multiplication of two polynomials given as base-`p` indices, reduced by the
/// monic `modulus` of degree `k`.
fn poly_mulmod(a: u32, b: u32, p: u32, k: u32, modulus: &[u32]) -> u32 {
    let k = k as usize;
    let da = digits(a, p, k);
    let db = digits(b, p, k);
    let mut prod = vec![0u32; 2 * k];
    for (i, &x) in da.iter().enumerate() {
        if x == 0 {
            continue;
        }
        for (j, &y) in db.iter().enumerate() {
            prod[i + j] = (prod[i + j] + x * y) % p;
        }
    }
    for deg in (k..2 * k).rev() {
        let c = prod[deg];
        if c == 0 {
            continue;
        }
        for (i, &m) in modulus.iter().enumerate().take(k) {
            let idx = deg - k + i;
            prod[idx] = (prod[idx] + (p - c) * m) % p;
        }
        prod[deg] = 0;
    }
    undigits(&prod[..k], p)
}

fn poly_pow(base: u32, mut e: u64, mulmod: &impl Fn(u32, u32) -> u32) -> u32 {
    let mut acc = 1u32;
    let mut b = base;
    while e > 0 {
        if e & 1 == 1 {
            acc = mulmod(acc, b);
        }
        b = mulmod(b, b);
        e >>= 1;
    }
    acc
}

fn digits(mut x: u32, p: u32, len: usize) -> Vec<u32> {
    let mut out = vec![0; len];
    for d in out.iter_mut() {
        *d = x % p;
        x /= p;
    }
    out
}

fn undigits(ds: &[u32], p: u32) -> u32 {
    ds.iter().rev().fold(0, |acc, &d| acc * p + d)
}

/// Remainder of `num` modulo the monic `den`, both dense coefficient vectors.
fn poly_rem(num: &[u32], den: &[u32], p: u32) -> Vec<u32> {
    let mut r = num.to_vec();
    let dd = den.len() - 1;
    while r.len() > dd {
        let c = *r.last().unwrap();
        let shift = r.len() - 1 - dd;
        if c != 0 {
            for (i, &m) in den.iter().enumerate() {
                r[shift + i] = (r[shift + i] + (p - c) * m) % p;
            }
        }
        r.pop();
    }
    r
}

/// Monic polynomials of degree `deg` over GF(p) in lexicographic order of their
/// coefficient tuples, constant term first.
fn monic_polys(p: u32, deg: u32) -> impl Iterator<Item = Vec<u32>> {
    let count = p.pow(deg);
    (0..count).map(move |i| {
        // Read `i` big-endian so the constant term is the most significant
        // digit of the enumeration counter.
        let mut coeffs = vec![0u32; deg as usize + 1];
        let mut x = i;
        for c in coeffs[..deg as usize].iter_mut().rev() {
            *c = x % p;
            x /= p;
        }
        coeffs[deg as usize] = 1;
        coeffs
    })
}

fn is_irreducible(poly: &[u32], p: u32) -> bool {
    let k = (poly.len() - 1) as u32;
    (1..=k / 2).all(|deg| {
        monic_polys(p, deg).all(|d| poly_rem(poly, &d, p).iter().any(|&c| c != 0))
    })
}

fn least_irreducible(p: u32, k: u32) -> Vec<u32> {
    monic_polys(p, k)
        .find(|f| is_irreducible(f, p))
        .expect("irreducible polynomials exist in every degree")
}

/// Little-endian base-`q` indexing of GF(q)^n.
#[derive(Clone, Debug)]
pub struct VectorIndexing {
    q: usize,
    dim: usize,
    total: usize,
    char2: bool,
}

impl VectorIndexing {
    pub fn new(field: &FieldTable, dim: usize) -> Result<Self> {
        let total = (field.order() as u128)
            .checked_pow(dim as u32)
            .filter(|&t| t <= usize::MAX as u128 / 2)
            .ok_or(Error::Overflow("vector space size"))? as usize;
        Ok(VectorIndexing {
            q: field.order(),
            dim,
            total,
            char2: field.characteristic() == 2,
        })
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn total(&self) -> usize {
        self.total
    }

    pub fn index(&self, v: &[FieldElem]) -> Result<usize> {
        if v.len() != self.dim {
            return Err(invalid(format!(
                "vector has length {}, expected {}",
                v.len(),
                self.dim
            )));
        }
        let mut acc = 0usize;
        for &x in v.iter().rev() {
            if x.index() >= self.q {
                return Err(Error::OutOfRange {
                    index: x.index() as u128,
                    limit: self.q as u128,
                });
            }
            acc = acc * self.q + x.index();
        }
        Ok(acc)
    }

    pub fn vector(&self, mut i: usize) -> Result<Vec<FieldElem>> {
        if i >= self.total {
            return Err(Error::OutOfRange {
                index: i as u128,
                limit: self.total as u128,
            });
        }
        let mut out = Vec::with_capacity(self.dim);
        for _ in 0..self.dim {
            out.push(FieldElem((i % self.q) as u32));
            i /= self.q;
        }
        Ok(out)
    }

    /// Index of the sum of the vectors with indices `a` and `b`.
    pub fn add(&self, field: &FieldTable, a: usize, b: usize) -> usize {
        if self.char2 {
            return a ^ b;
        }
        let (mut x, mut y, mut out, mut w) = (a, b, 0, 1);
        for _ in 0..self.dim {
            let s = field.add(FieldElem((x % self.q) as u32), FieldElem((y % self.q) as u32));
            out += s.index() * w;
            w *= self.q;
            x /= self.q;
            y /= self.q;
        }
        out
    }

    /// Index of the negated vector.
    pub fn neg(&self, field: &FieldTable, a: usize) -> usize {
        if self.char2 {
            return a;
        }
        let (mut x, mut out, mut w) = (a, 0, 1);
        for _ in 0..self.dim {
            out += field.neg(FieldElem((x % self.q) as u32)).index() * w;
            w *= self.q;
            x /= self.q;
        }
        out
    }

    /// Index of the scalar multiple `c * v`.
    pub fn scale(&self, field: &FieldTable, c: FieldElem, a: usize) -> usize {
        let (mut x, mut out, mut w) = (a, 0, 1);
        for _ in 0..self.dim {
            out += field.mul(c, FieldElem((x % self.q) as u32)).index() * w;
            w *= self.q;
            x /= self.q;
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    /// Irreducibility of a monic quadratic by searching for a root.
    fn quadratic_has_root(c0: u32, c1: u32, p: u32) -> bool {
        (0..p).any(|x| (x * x + c1 * x + c0).is_multiple_of(p))
    }

    #[test]
    fn prime_field_gf2() {
        let f = FieldTable::new(2, 1).unwrap();
        assert_eq!(f.order(), 2);
        assert_eq!(f.modulus(), &[0, 1]);
        assert_eq!(f.generator(), FieldElem::ONE);
    }

    #[test]
    fn gf4_modulus_is_the_unique_irreducible_quadratic() {
        let f = FieldTable::new(2, 2).unwrap();
        assert_eq!(f.modulus(), &[1, 1, 1]);
        assert_eq!(f.modulus_string(), "x^2 + x + 1");
    }

    #[test]
    fn gf9_modulus_matches_root_search() {
        let f = FieldTable::new(3, 2).unwrap();
        assert_eq!(f.order(), 9);
        // Oracle: first monic quadratic (constant term first) without roots.
        let mut expected = None;
        'outer: for c0 in 0..3 {
            for c1 in 0..3 {
                if !quadratic_has_root(c0, c1, 3) {
                    expected = Some(vec![c0, c1, 1]);
                    break 'outer;
                }
            }
        }
        assert_eq!(f.modulus(), expected.unwrap().as_slice());
        let mut x = FieldElem::ONE;
        let g = f.generator();
        for i in 1..=8 {
            x = f.mul(x, g);
            assert_eq!(x == FieldElem::ONE, i == 8, "g^{i}");
        }
        assert_eq!(f.pow(g, 8), FieldElem::ONE);
    }

    #[test]
    fn small_examples() {
        let f5 = FieldTable::new(5, 1).unwrap();
        assert_eq!(f5.mul(FieldElem(2), FieldElem(3)), FieldElem(1));
        assert!(f5.is_square(FieldElem(4)));
        let squares: Vec<u32> = (0..5)
            .filter(|&y| f5.is_square(FieldElem(y)))
            .collect();
        assert_eq!(squares, vec![0, 1, 4]);
        assert!(!f5.is_square(FieldElem(2)));

        let f4 = FieldTable::new(2, 2).unwrap();
        for x in f4.elements() {
            assert_eq!(f4.add(x, x), FieldElem::ZERO);
            assert_eq!(f4.frobenius(x, 1), f4.mul(x, x));
            assert_eq!(f4.frobenius(f4.frobenius(x, 1), 1), x);
            assert_eq!(f4.frobenius(x, 0), x);
        }

        let f8 = FieldTable::new(2, 3).unwrap();
        let g = f8.generator();
        assert_eq!(f8.frobenius(g, 1), f8.pow(g, 2));
        assert_eq!(f8.modulus(), &[1, 0, 1, 1]);
    }

    #[test]
    fn square_and_power_class_counts() {
        let f13 = FieldTable::new(13, 1).unwrap();
        assert_eq!(f13.nonzero().filter(|&x| f13.is_square(x)).count(), 6);

        let f16 = FieldTable::new(2, 4).unwrap();
        let class0 = f16
            .nonzero()
            .filter(|&x| f16.power_class(x, 3).unwrap() == 0)
            .count();
        assert_eq!(class0, 5);
        assert_eq!(f16.power_class(FieldElem::ONE, 3).unwrap(), 0);
        assert!(f16.power_class(FieldElem::ZERO, 3).is_err());
        assert!(f16.power_class(FieldElem::ONE, 4).is_err());

        let f9 = FieldTable::new(3, 2).unwrap();
        assert_eq!(f9.power_class(f9.generator(), 2).unwrap(), 1);
    }

    #[test]
    fn errors() {
        assert_eq!(FieldTable::new(4, 1).unwrap_err(), Error::NotPrime(4));
        assert!(FieldTable::new(2, 0).is_err());
        assert!(FieldTable::new(2, 17).is_err());
        let f5 = FieldTable::new(5, 1).unwrap();
        assert_eq!(f5.inv(FieldElem::ZERO), Err(Error::ZeroInverse));
    }

    #[test]
    fn vector_indexing() {
        let f2 = FieldTable::new(2, 1).unwrap();
        let v4 = VectorIndexing::new(&f2, 4).unwrap();
        let e1 = [FieldElem(1), FieldElem(0), FieldElem(0), FieldElem(0)];
        assert_eq!(v4.index(&e1).unwrap(), 1);
        assert_eq!(v4.index(&[FieldElem::ZERO; 4]).unwrap(), 0);
        assert_eq!(v4.vector(0).unwrap(), vec![FieldElem::ZERO; 4]);

        let f3 = FieldTable::new(3, 1).unwrap();
        let v2 = VectorIndexing::new(&f3, 2).unwrap();
        assert_eq!(v2.index(&[FieldElem(2), FieldElem(1)]).unwrap(), 5);
        assert_eq!(v2.vector(5).unwrap(), vec![FieldElem(2), FieldElem(1)]);
        assert!(v2.vector(9).is_err());
        assert!(v2.index(&[FieldElem(3), FieldElem(0)]).is_err());
    }

    #[test]
    fn field_axioms_exhaustive_small() {
        for (p, k) in [(2, 3), (3, 2), (5, 1), (2, 4), (7, 2)] {
            let f = FieldTable::new(p, k).unwrap();
            for a in f.elements() {
                assert_eq!(f.add(a, f.neg(a)), FieldElem::ZERO);
                if !a.is_zero() {
                    assert_eq!(f.mul(a, f.inv(a).unwrap()), FieldElem::ONE);
                }
                for b in f.elements() {
                    assert_eq!(f.add(a, b), f.add(b, a));
                    assert_eq!(f.mul(a, b), f.mul(b, a));
                    for c in f.elements().step_by(3) {
                        assert_eq!(
                            f.mul(a, f.add(b, c)),
                            f.add(f.mul(a, b), f.mul(a, c))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn frobenius_is_automorphism_up_to_256() {
        for (p, k) in [(2, 2), (2, 3), (3, 2), (2, 4), (5, 2), (3, 3), (2, 8)] {
            let f = FieldTable::new(p, k).unwrap();
            for j in 0..k {
                let image: std::collections::HashSet<_> =
                    f.elements().map(|x| f.frobenius(x, j)).collect();
                assert_eq!(image.len(), f.order());
                for a in f.elements() {
                    for b in f.elements().step_by(7) {
                        assert_eq!(
                            f.frobenius(f.add(a, b), j),
                            f.add(f.frobenius(a, j), f.frobenius(b, j))
                        );
                        assert_eq!(
                            f.frobenius(f.mul(a, b), j),
                            f.mul(f.frobenius(a, j), f.frobenius(b, j))
                        );
                    }
                }
            }
        }
    }

    #[test]
    fn exp_log_inverse() {
        let f = FieldTable::new(3, 4).unwrap();
        for x in f.nonzero() {
            assert_eq!(f.exp(f.log(x).unwrap() as u64), x);
        }
    }

    #[test]
    fn vector_arithmetic_matches_componentwise() {
        let f = FieldTable::new(3, 1).unwrap();
        let v = VectorIndexing::new(&f, 3).unwrap();
        for a in 0..v.total() {
            for b in 0..v.total() {
                let va = v.vector(a).unwrap();
                let vb = v.vector(b).unwrap();
                let sum: Vec<_> = va.iter().zip(&vb).map(|(&x, &y)| f.add(x, y)).collect();
                assert_eq!(v.add(&f, a, b), v.index(&sum).unwrap());
            }
            assert_eq!(v.add(&f, a, v.neg(&f, a)), 0);
            assert_eq!(v.scale(&f, FieldElem(2), a), v.neg(&f, a));
        }
    }

    mod props {
        use super::super::*;
        use proptest::prelude::*;

        proptest! {
            #[test]
            fn square_and_class_partition(idx in 0usize..12) {
                let orders = [5u64, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64];
                let f = FieldTable::of_order(orders[idx]).unwrap();
                let q = f.order();
                let squares = f.nonzero().filter(|&x| f.is_square(x)).count();
                prop_assert_eq!(squares, (q - 1) / arith::gcd(2, q as u64 - 1) as usize);
                for e in 1..=(q as u32 - 1) {
                    if !(q as u32 - 1).is_multiple_of(e) { continue; }
                    let mut sizes = vec![0usize; e as usize];
                    for x in f.nonzero() {
                        sizes[f.power_class(x, e).unwrap() as usize] += 1;
                    }
                    prop_assert!(sizes.iter().all(|&s| s == (q - 1) / e as usize));
                }
            }

            #[test]
            fn index_vector_roundtrip(q in prop::sample::select(vec![2u64, 3, 4, 5, 9]), dim in 1usize..5, seed in any::<u64>()) {
                let f = FieldTable::of_order(q).unwrap();
                let v = VectorIndexing::new(&f, dim).unwrap();
                let i = (seed as usize) % v.total();
                prop_assert_eq!(v.index(&v.vector(i).unwrap()).unwrap(), i);
            }
        }
    }
}
