//! Closed-form subdegrees of the affine rank-3 classes, the wreath-product
//! rank formula and orders of 2-closures.

use std::fmt;

use num_bigint::BigUint;
use num_traits::{One, Pow};
use serde::{Deserialize, Serialize};

use crate::arith;
use crate::error::{invalid, Error, Result};
use crate::graphs::Sign;

/// Degree `n = p^d` of an affine rank-3 group together with its two
/// non-trivial subdegrees `m1 <= m2`.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord, Serialize, Deserialize)]
pub struct ParameterTriple {
    pub p: u64,
    pub d: u32,
    pub n: u128,
    pub m1: u128,
    pub m2: u128,
}

impl ParameterTriple {
    /// Orders the subdegrees and checks `m1 + m2 = p^d - 1`, `m1 >= 1`.
    pub fn new(p: u64, d: u32, a: u128, b: u128) -> Result<Self> {
        if !arith::is_prime(p) {
            return Err(Error::NotPrime(p));
        }
        let n = arith::checked_pow(p as u128, d).ok_or(Error::Overflow("degree"))?;
        let (m1, m2) = (a.min(b), a.max(b));
        if m1 == 0 || m1.checked_add(m2) != Some(n - 1) {
            return Err(invalid(format!(
                "subdegrees {m1}, {m2} do not partition the {} nonzero vectors of {p}^{d}",
                n - 1
            )));
        }
        Ok(ParameterTriple { p, d, n, m1, m2 })
    }

    /// Like [`ParameterTriple::new`] with the degree given as a prime power.
    pub fn from_degree(n: u128, a: u128, b: u128) -> Result<Self> {
        let (p, d) = arith::prime_power(n)
            .ok_or_else(|| invalid(format!("{n} is not a prime power")))?;
        Self::new(p, d, a, b)
    }
}

impl fmt::Display for ParameterTriple {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({}^{}, {}, {})", self.p, self.d, self.m1, self.m2)
    }
}

/// A row of the affine rank-3 classification with its parameters.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(tag = "class")]
pub enum ClassSpec {
    /// Van Lint–Schrijver: `q = p^((e-1)t)`.
    A1Vls { p: u64, e: u64, t: u32 },
    A1Paley { q: u64 },
    /// Peisert: `q = p^(2t)`.
    A1Peisert { p: u64, t: u32 },
    /// Imprimitive `G_0`, degree `p^(2m)`.
    A2 { p: u64, m: u32 },
    /// Tensor product, degree `q^(2m)`.
    A3 { q: u64, m: u32 },
    /// `G_0 >= SL_m(sqrt q)`, degree `q^m`.
    A4 { q: u64, m: u32 },
    /// `G_0 >= SL_2(cbrt q)`, degree `q^2`.
    A5 { q: u64 },
    /// `G_0 >= SU_m(q)`, degree `q^(2m)`.
    A6 { q: u64, m: u32 },
    /// `G_0 >= Omega^eps_2m(q)`, degree `q^(2m)`.
    A7 { sign: Sign, q: u64, m: u32 },
    A8 { q: u64 },
    A9 { q: u64 },
    A10 { q: u64 },
    A11 { q: u64 },
}

fn prime_power(q: u64) -> Result<(u64, u32)> {
    arith::prime_power(q as u128).ok_or_else(|| invalid(format!("{q} is not a prime power")))
}

/// `x` with `x^k = q`, if `q` is a perfect `k`-th power of a prime power.
fn prime_power_root(q: u64, k: u32) -> Result<u64> {
    let (p, e) = prime_power(q)?;
    if e % k != 0 {
        return Err(invalid(format!("{q} is not a {k}-th power")));
    }
    Ok(p.pow(e / k))
}

fn pow(base: u64, exp: u32) -> Result<u128> {
    arith::checked_pow(base as u128, exp).ok_or(Error::Overflow("subdegree"))
}

fn mul(terms: &[u128]) -> Result<u128> {
    terms
        .iter()
        .try_fold(1u128, |acc, &t| acc.checked_mul(t))
        .ok_or(Error::Overflow("subdegree"))
}

/// Subdegrees of the tensor-product class with field order `r` and `m`.
fn tensor(r: u64, m: u32) -> Result<(u128, u128)> {
    let rm = pow(r, m)?;
    let rm1 = pow(r, m - 1)?;
    let r = r as u128;
    Ok((mul(&[r + 1, rm - 1])?, mul(&[r, rm - 1, rm1 - 1])?))
}

/// Subdegrees of `VO^eps_2m(q)`.
fn polar(sign: Sign, q: u64, m: u32) -> Result<(u128, u128)> {
    let qm = pow(q, m)?;
    let qm1 = pow(q, m - 1)?;
    let q = q as u128;
    Ok(match sign {
        Sign::Plus => (mul(&[qm - 1, qm1 + 1])?, mul(&[qm1, q - 1, qm - 1])?),
        Sign::Minus => (mul(&[qm + 1, qm1 - 1])?, mul(&[qm1, q - 1, qm + 1])?),
    })
}

impl ClassSpec {
    pub fn tag(&self) -> &'static str {
        match self {
            ClassSpec::A1Vls { .. } => "A1_VLS",
            ClassSpec::A1Paley { .. } => "A1_Paley",
            ClassSpec::A1Peisert { .. } => "A1_Peisert",
            ClassSpec::A2 { .. } => "A2",
            ClassSpec::A3 { .. } => "A3",
            ClassSpec::A4 { .. } => "A4",
            ClassSpec::A5 { .. } => "A5",
            ClassSpec::A6 { .. } => "A6",
            ClassSpec::A7 { .. } => "A7",
            ClassSpec::A8 { .. } => "A8",
            ClassSpec::A9 { .. } => "A9",
            ClassSpec::A10 { .. } => "A10",
            ClassSpec::A11 { .. } => "A11",
        }
    }

    /// Degree as `(p, d)` after checking the row's parameter constraints.
    pub fn degree(&self) -> Result<(u64, u32)> {
        let scaled = |q: u64, k: u32| -> Result<(u64, u32)> {
            let (p, e) = prime_power(q)?;
            Ok((p, e.checked_mul(k).ok_or(Error::Overflow("degree"))?))
        };
        let need_m = |m: u32, least: u32| {
            if m < least {
                Err(invalid(format!("m must be at least {least}, got {m}")))
            } else {
                Ok(())
            }
        };
        match *self {
            ClassSpec::A1Vls { p, e, t } => {
                if !arith::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                if e <= 2 || !arith::is_prime(e) {
                    return Err(invalid(format!("e must be an odd prime, got {e}")));
                }
                if arith::mult_order(p, e) != Some(e - 1) {
                    return Err(invalid(format!("{p} is not primitive modulo {e}")));
                }
                need_m(t, 1)?;
                let d = u32::try_from(e - 1).ok().and_then(|k| k.checked_mul(t));
                Ok((p, d.ok_or(Error::Overflow("degree"))?))
            }
            ClassSpec::A1Paley { q } => {
                if q % 4 != 1 {
                    return Err(invalid(format!("Paley class needs q = 1 mod 4, got {q}")));
                }
                prime_power(q)
            }
            ClassSpec::A1Peisert { p, t } => {
                if !arith::is_prime(p) || p % 4 != 3 {
                    return Err(invalid(format!("Peisert class needs a prime p = 3 mod 4, got {p}")));
                }
                need_m(t, 1)?;
                Ok((p, 2 * t))
            }
            ClassSpec::A2 { p, m } => {
                if !arith::is_prime(p) {
                    return Err(Error::NotPrime(p));
                }
                need_m(m, 1)?;
                Ok((p, 2 * m))
            }
            ClassSpec::A3 { q, m } => {
                need_m(m, 2)?;
                scaled(q, 2 * m)
            }
            ClassSpec::A4 { q, m } => {
                need_m(m, 2)?;
                prime_power_root(q, 2)?;
                scaled(q, m)
            }
            ClassSpec::A5 { q } => {
                prime_power_root(q, 3)?;
                scaled(q, 2)
            }
            ClassSpec::A6 { q, m } | ClassSpec::A7 { q, m, .. } => {
                need_m(m, 2)?;
                scaled(q, 2 * m)
            }
            ClassSpec::A8 { q } => scaled(q, 10),
            ClassSpec::A9 { q } => scaled(q, 8),
            ClassSpec::A10 { q } => scaled(q, 16),
            ClassSpec::A11 { q } => {
                if crate::graphs::families::suzuki_exponent(q).is_none() {
                    return Err(invalid(format!("q must be 2^(2e+1) with e >= 1, got {q}")));
                }
                scaled(q, 4)
            }
        }
    }

    /// The row's degree and subdegrees.
    pub fn subdegrees(&self) -> Result<ParameterTriple> {
        let (p, d) = self.degree()?;
        let (a, b) = match *self {
            ClassSpec::A1Vls { e, .. } => {
                let q1 = pow(p, d)? - 1;
                let e = e as u128;
                (q1 / e, (e - 1) * (q1 / e))
            }
            ClassSpec::A1Paley { .. } | ClassSpec::A1Peisert { .. } => {
                let half = (pow(p, d)? - 1) / 2;
                (half, half)
            }
            ClassSpec::A2 { p, m } => {
                let pm = pow(p, m)? - 1;
                (2 * pm, mul(&[pm, pm])?)
            }
            ClassSpec::A3 { q, m } => tensor(q, m)?,
            ClassSpec::A4 { q, m } => tensor(prime_power_root(q, 2)?, m)?,
            // Degree q^2 = r^6 with r the cube root: the tensor formulas at m = 3.
            ClassSpec::A5 { q } => tensor(prime_power_root(q, 3)?, 3)?,
            ClassSpec::A6 { q, m } => {
                let sign = if m % 2 == 0 { Sign::Plus } else { Sign::Minus };
                polar(sign, q, m)?
            }
            ClassSpec::A7 { sign, q, m } => polar(sign, q, m)?,
            ClassSpec::A8 { q } => {
                let (q5, q2, q3) = (pow(q, 5)?, pow(q, 2)?, pow(q, 3)?);
                (mul(&[q5 - 1, q2 + 1])?, mul(&[q2, q5 - 1, q3 - 1])?)
            }
            ClassSpec::A9 { q } => {
                let (q4, q3) = (pow(q, 4)?, pow(q, 3)?);
                (mul(&[q4 - 1, q3 + 1])?, mul(&[q3, q4 - 1, q as u128 - 1])?)
            }
            ClassSpec::A10 { q } => {
                let (q8, q3, q5) = (pow(q, 8)?, pow(q, 3)?, pow(q, 5)?);
                (mul(&[q8 - 1, q3 + 1])?, mul(&[q3, q8 - 1, q5 - 1])?)
            }
            ClassSpec::A11 { q } => {
                let q2 = pow(q, 2)?;
                let q = q as u128;
                (mul(&[q2 + 1, q - 1])?, mul(&[q, q2 + 1, q - 1])?)
            }
        };
        ParameterTriple::new(p, d, a, b)
    }
}

impl fmt::Display for ClassSpec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let params = serde_json::to_value(self).expect("spec serializes");
        let body: Vec<String> = params
            .as_object()
            .expect("tagged struct variant")
            .iter()
            .filter(|(k, _)| *k != "class")
            .map(|(k, v)| format!("{k}={}", v.as_str().map_or_else(|| v.to_string(), str::to_string)))
            .collect();
        write!(f, "{}({})", self.tag(), body.join(", "))
    }
}

pub fn subdegrees_of(spec: &ClassSpec) -> Result<ParameterTriple> {
    spec.subdegrees()
}

/// Rank of `G ↑ Sym(m)` in product action when `G` has rank `r`.
pub fn wreath_rank(r: u64, m: u64) -> Result<u128> {
    if r == 0 || m == 0 {
        return Err(invalid("rank and number of factors must be positive"));
    }
    arith::binomial(r + m - 1, m).ok_or(Error::Overflow("wreath rank"))
}

/// The 2-closures whose orders have a closed form.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
#[serde(tag = "case", rename_all = "snake_case")]
pub enum ClosureCase {
    /// `Sym(delta) wr Sym(x)` in imprimitive action.
    Imprimitive { delta: u64, x: u64 },
    /// `Sym(delta) ↑ Sym(2)` in product action.
    Product { delta: u64 },
    /// Normalizer of a one-dimensional group; structure only.
    OneDimensional,
    /// Bilinear forms graph `H_q(2, m)`.
    Bilinear { q: u64, m: u32 },
    /// Affine polar graph `VO^eps_2m(q)`.
    Polar { sign: Sign, q: u64, m: u32 },
    /// Alternating forms graph `A(5, q)`.
    AltForms { q: u64 },
    /// Affine half-spin graph; structure only.
    HalfSpin { q: u64 },
    /// Suzuki–Tits ovoid graph `VSz(q)`.
    Suzuki { q: u64 },
}

fn factorial(n: u64) -> BigUint {
    (1..=n).map(BigUint::from).product()
}

fn big_pow(q: u64, e: u64) -> BigUint {
    Pow::pow(BigUint::from(q), e)
}

/// `|GL_k(q)| = q^(k(k-1)/2) prod_{i=1..k} (q^i - 1)`.
pub fn gl_order(k: u32, q: u64) -> BigUint {
    let k = k as u64;
    (1..=k).fold(big_pow(q, k * (k - 1) / 2), |acc, i| {
        acc * (big_pow(q, i) - BigUint::one())
    })
}

/// `|GO^eps_2m(q)| = 2 q^(m(m-1)) (q^m - eps) prod_{i=1..m-1} (q^(2i) - 1)`.
pub fn go_order(sign: Sign, m: u32, q: u64) -> BigUint {
    let m = m as u64;
    let qm = big_pow(q, m);
    let twisted = match sign {
        Sign::Plus => qm - BigUint::one(),
        Sign::Minus => qm + BigUint::one(),
    };
    (1..m).fold(BigUint::from(2u32) * big_pow(q, m * (m - 1)) * twisted, |acc, i| {
        acc * (big_pow(q, 2 * i) - BigUint::one())
    })
}

/// `|Sz(q)| = q^2 (q^2 + 1)(q - 1)`.
pub fn suzuki_order(q: u64) -> BigUint {
    let q2 = big_pow(q, 2);
    q2.clone() * (q2 + BigUint::one()) * BigUint::from(q - 1)
}

/// Order of the 2-closure in the given case.
pub fn closure_order(case: &ClosureCase) -> Result<BigUint> {
    let field = |q: u64| -> Result<(BigUint, BigUint)> {
        let (_, e) = prime_power(q)?;
        Ok((BigUint::from(q), BigUint::from(e)))
    };
    match *case {
        ClosureCase::Imprimitive { delta, x } => {
            if delta < 2 || x < 2 {
                return Err(invalid("imprimitive wreath product needs |Delta|, |X| >= 2"));
            }
            Ok(Pow::pow(factorial(delta), x) * factorial(x))
        }
        ClosureCase::Product { delta } => {
            if delta < 2 {
                return Err(invalid("product action needs |Delta| >= 2"));
            }
            Ok(Pow::pow(factorial(delta), 2u32) * BigUint::from(2u32))
        }
        ClosureCase::OneDimensional => Err(Error::NotComputed(
            "the one-dimensional case is described by its structure only",
        )),
        ClosureCase::HalfSpin { .. } => Err(Error::NotComputed(
            "the half-spin case involves an undetermined central factor",
        )),
        ClosureCase::Bilinear { q, m } => {
            if m < 2 {
                return Err(invalid("bilinear forms graph needs m >= 2"));
            }
            let (qq, e) = field(q)?;
            // GL_2 and GL_m share the scalars; for m = 2 the transpose swaps the factors.
            let swap = if m == 2 { 2u32 } else { 1 };
            Ok(Pow::pow(qq, 2 * m) * gl_order(2, q) * gl_order(m, q) / BigUint::from(q - 1)
                * e
                * BigUint::from(swap))
        }
        ClosureCase::Polar { sign, q, m } => {
            if m < 2 {
                return Err(invalid("affine polar graph needs m >= 2"));
            }
            let (qq, e) = field(q)?;
            Ok(Pow::pow(qq, 2 * m) * go_order(sign, m, q) * BigUint::from(q - 1) * e)
        }
        ClosureCase::AltForms { q } => {
            let (qq, e) = field(q)?;
            Ok(Pow::pow(qq, 10u32) * gl_order(5, q) * e)
        }
        ClosureCase::Suzuki { q } => {
            if crate::graphs::families::suzuki_exponent(q).is_none() {
                return Err(invalid(format!("q must be 2^(2e+1) with e >= 1, got {q}")));
            }
            let (qq, e) = field(q)?;
            Ok(Pow::pow(qq, 4u32) * BigUint::from(q - 1) * suzuki_order(q) * e)
        }
    }
}

/// One printed row of a subdegree table.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct TableRow {
    pub class: &'static str,
    pub group: &'static str,
    pub degree: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub a: Option<&'static str>,
    pub subdegrees: &'static str,
    #[serde(skip_serializing_if = "Option::is_none")]
    pub comments: Option<&'static str>,
}

const fn row(
    class: &'static str,
    group: &'static str,
    degree: &'static str,
    a: &'static str,
    subdegrees: &'static str,
) -> TableRow {
    TableRow {
        class,
        group,
        degree,
        a: Some(a),
        subdegrees,
        comments: None,
    }
}

/// Degrees and subdegrees of the classes (A1)–(A11).
pub fn class_a_table() -> Vec<TableRow> {
    vec![
        row("(A1)", "G_0 < ΓL_1(p^d)", "p^d", "1", "see one-dimensional table"),
        row("(A2)", "G_0 imprimitive", "p^(2m)", "2m", "2(p^m - 1), (p^m - 1)^2"),
        row("(A3)", "tensor product", "q^(2m)", "2m", "(q+1)(q^m - 1), q(q^m - 1)(q^(m-1) - 1)"),
        row("(A4)", "G_0 ⊵ SL_m(√q)", "q^m", "m", "(√q+1)(√q^m - 1), √q(√q^m - 1)(√q^(m-1) - 1)"),
        row("(A5)", "G_0 ⊵ SL_2(∛q)", "q^2", "2", "(∛q+1)(q - 1), ∛q(q - 1)(∛q^2 - 1)"),
        row("(A6)", "G_0 ⊵ SU_m(q)", "q^(2m)", "m", "m even: (q^m - 1)(q^(m-1) + 1), q^(m-1)(q-1)(q^m - 1); m odd: (q^m + 1)(q^(m-1) - 1), q^(m-1)(q-1)(q^m + 1)"),
        row("(A7)", "G_0 ⊵ Ω^ε_2m(q)", "q^(2m)", "2m", "ε = +: (q^m - 1)(q^(m-1) + 1), q^(m-1)(q-1)(q^m - 1); ε = -: (q^m + 1)(q^(m-1) - 1), q^(m-1)(q-1)(q^m + 1)"),
        row("(A8)", "G_0 ⊵ SL_5(q)", "q^10", "10", "(q^5 - 1)(q^2 + 1), q^2(q^5 - 1)(q^3 - 1)"),
        row("(A9)", "G_0 ⊵ B_3(q)", "q^8", "8", "(q^4 - 1)(q^3 + 1), q^3(q^4 - 1)(q - 1)"),
        row("(A10)", "G_0 ⊵ D_5(q)", "q^16", "16", "(q^8 - 1)(q^3 + 1), q^3(q^8 - 1)(q^5 - 1)"),
        row("(A11)", "G_0 ⊵ Sz(q)", "q^4", "4", "(q^2 + 1)(q - 1), q(q^2 + 1)(q - 1)"),
    ]
}

/// Subdegrees of the one-dimensional rank-3 graphs.
pub fn one_dimensional_table() -> Vec<TableRow> {
    vec![
        TableRow {
            class: "A1_VLS",
            group: "Van Lint-Schrijver",
            degree: "q = p^((e-1)t)",
            a: None,
            subdegrees: "(q-1)/e, (e-1)(q-1)/e",
            comments: Some("e > 2 prime, p primitive mod e"),
        },
        TableRow {
            class: "A1_Paley",
            group: "Paley",
            degree: "q",
            a: None,
            subdegrees: "(q-1)/2, (q-1)/2",
            comments: Some("q = 1 mod 4"),
        },
        TableRow {
            class: "A1_Peisert",
            group: "Peisert",
            degree: "q = p^(2t)",
            a: None,
            subdegrees: "(q-1)/2, (q-1)/2",
            comments: Some("p = 3 mod 4"),
        },
    ]
}

/// Renders rows as left-aligned columns under a header.
pub fn render_table(rows: &[TableRow]) -> String {
    let with_a = rows.iter().any(|r| r.a.is_some());
    let with_comments = rows.iter().any(|r| r.comments.is_some());
    let mut header = vec!["", "Type of G", "n", "a", "Subdegrees", "Comments"];
    let mut lines: Vec<Vec<&str>> = rows
        .iter()
        .map(|r| {
            vec![
                r.class,
                r.group,
                r.degree,
                r.a.unwrap_or(""),
                r.subdegrees,
                r.comments.unwrap_or(""),
            ]
        })
        .collect();
    let keep: Vec<usize> = (0..6)
        .filter(|&c| (c != 3 || with_a) && (c != 5 || with_comments))
        .collect();
    header = keep.iter().map(|&c| header[c]).collect();
    for l in &mut lines {
        *l = keep.iter().map(|&c| l[c]).collect();
    }
    let widths: Vec<usize> = (0..header.len())
        .map(|c| {
            lines
                .iter()
                .map(|l| l[c].chars().count())
                .chain([header[c].chars().count()])
                .max()
                .unwrap_or(0)
        })
        .collect();
    let fmt_line = |cells: &[&str]| {
        let mut s = String::new();
        for (c, cell) in cells.iter().enumerate() {
            s.push_str(cell);
            if c + 1 < cells.len() {
                s.extend(std::iter::repeat_n(' ', widths[c] - cell.chars().count() + 2));
            }
        }
        s.trim_end().to_string()
    };
    let rule = "-".repeat(widths.iter().sum::<usize>() + 2 * (widths.len() - 1));
    let mut out = vec![rule.clone(), fmt_line(&header), rule.clone()];
    out.extend(lines.iter().map(|l| fmt_line(l)));
    out.push(rule);
    out.join("\n") + "\n"
}

/// Valid class instances with field order at most `q_max` and `m <= m_max`,
/// paired with their subdegrees; rows whose numbers overflow are skipped.
pub fn instances(q_max: u64, m_max: u32) -> Vec<(ClassSpec, ParameterTriple)> {
    let qs = arith::prime_powers_upto(q_max);
    let mut specs = Vec::new();
    for &q in &qs {
        specs.push(ClassSpec::A1Paley { q });
        if arith::is_prime(q) {
            for t in 1..=m_max {
                specs.push(ClassSpec::A1Peisert { p: q, t });
                specs.push(ClassSpec::A2 { p: q, m: t });
                for e in [3u64, 5, 7, 11, 13] {
                    specs.push(ClassSpec::A1Vls { p: q, e, t });
                }
            }
        }
        for m in 2..=m_max {
            specs.push(ClassSpec::A3 { q, m });
            specs.push(ClassSpec::A4 { q, m });
            specs.push(ClassSpec::A6 { q, m });
            specs.push(ClassSpec::A7 { sign: Sign::Plus, q, m });
            specs.push(ClassSpec::A7 { sign: Sign::Minus, q, m });
        }
        specs.extend([
            ClassSpec::A5 { q },
            ClassSpec::A8 { q },
            ClassSpec::A9 { q },
            ClassSpec::A10 { q },
            ClassSpec::A11 { q },
        ]);
    }
    specs
        .into_iter()
        .filter_map(|s| s.subdegrees().ok().map(|t| (s, t)))
        .collect()
}
