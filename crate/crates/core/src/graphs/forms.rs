use std::sync::Arc;

use crate::error::{invalid, Result};
use crate::gf::{FieldElem, FieldTable, VectorIndexing};

use super::Sign;

/// Rank of a matrix over `field` by Gaussian elimination.
pub fn matrix_rank(field: &FieldTable, mut rows: Vec<Vec<FieldElem>>) -> usize {
    let cols = rows.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(pivot) = (rank..rows.len()).find(|&r| !rows[r][c].is_zero()) else {
            continue;
        };
        rows.swap(rank, pivot);
        let inv = field.inv(rows[rank][c]).expect("pivot is nonzero");
        for r in 0..rows.len() {
            if r == rank || rows[r][c].is_zero() {
                continue;
            }
            let factor = field.mul(rows[r][c], inv);
            for k in c..cols {
                let t = field.mul(factor, rows[rank][k]);
                rows[r][k] = field.sub(rows[r][k], t);
            }
        }
        rank += 1;
    }
    rank
}

/// A quadratic form `kappa(x) = sum_{i <= j} Q[i][j] x_i x_j` on GF(q)^(2m).
#[derive(Clone, Debug)]
pub struct QuadraticForm {
    field: Arc<FieldTable>,
    dim: usize,
    /// Upper-triangular coefficients, row-major `dim x dim`.
    coeffs: Vec<FieldElem>,
    sign: Sign,
}

impl QuadraticForm {
    pub fn field(&self) -> &FieldTable {
        &self.field
    }

    pub fn dim(&self) -> usize {
        self.dim
    }

    pub fn sign(&self) -> Sign {
        self.sign
    }

    pub fn coeff(&self, i: usize, j: usize) -> FieldElem {
        self.coeffs[i * self.dim + j]
    }

    pub fn eval(&self, x: &[FieldElem]) -> FieldElem {
        let f = &*self.field;
        let mut acc = FieldElem::ZERO;
        for i in 0..self.dim {
            if x[i].is_zero() {
                continue;
            }
            for j in i..self.dim {
                let c = self.coeff(i, j);
                if !c.is_zero() {
                    acc = f.add(acc, f.mul(c, f.mul(x[i], x[j])));
                }
            }
        }
        acc
    }

    /// Gram matrix of the polar form `f(x, y) = kappa(x + y) - kappa(x) - kappa(y)`.
    pub fn polar_gram(&self) -> Vec<Vec<FieldElem>> {
        let f = &*self.field;
        let d = self.dim;
        let mut gram = vec![vec![FieldElem::ZERO; d]; d];
        for i in 0..d {
            for j in i..d {
                let c = self.coeff(i, j);
                if i == j {
                    gram[i][i] = f.add(c, c);
                } else {
                    gram[i][j] = c;
                    gram[j][i] = c;
                }
            }
        }
        gram
    }

    /// True iff the polar form has zero radical.
    pub fn is_nondegenerate(&self) -> bool {
        matrix_rank(&self.field, self.polar_gram()) == self.dim
    }

    /// Indices (little-endian) of the nonzero isotropic vectors.
    pub fn isotropic_vectors(&self) -> Result<Vec<usize>> {
        let vi = VectorIndexing::new(&self.field, self.dim)?;
        Ok((1..vi.total())
            .filter(|&i| self.eval(&vi.vector(i).expect("in range")).is_zero())
            .collect())
    }
}

/// The standard non-degenerate form of the given type on GF(q)^(2m).
///
/// Plus type is `x1 x2 + x3 x4 + ... + x_{2m-1} x_{2m}`. Minus type replaces the
/// last hyperbolic pair by `x^2 + x y + b y^2` with `b` the least field index
/// for which `t^2 + t + b` has no root.
pub fn standard_form(sign: Sign, m: usize, field: Arc<FieldTable>) -> Result<QuadraticForm> {
    if m < 1 {
        return Err(invalid("quadratic form needs m >= 1"));
    }
    let dim = 2 * m;
    let mut coeffs = vec![FieldElem::ZERO; dim * dim];
    let hyperbolic = match sign {
        Sign::Plus => m,
        Sign::Minus => m - 1,
    };
    for i in 0..hyperbolic {
        coeffs[(2 * i) * dim + 2 * i + 1] = FieldElem::ONE;
    }
    if sign == Sign::Minus {
        let f = &*field;
        let b = f
            .elements()
            .find(|&b| {
                f.elements()
                    .all(|t| !f.add(f.add(f.mul(t, t), t), b).is_zero())
            })
            .expect("an irreducible t^2 + t + b exists over every finite field");
        let (x, y) = (dim - 2, dim - 1);
        coeffs[x * dim + x] = FieldElem::ONE;
        coeffs[x * dim + y] = FieldElem::ONE;
        coeffs[y * dim + y] = b;
    }
    Ok(QuadraticForm {
        field,
        dim,
        coeffs,
        sign,
    })
}
