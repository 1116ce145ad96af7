//! Arithmetic separation of affine rank-3 graphs by their subdegrees.
//!
//! A one-dimensional rank-3 group of degree `p^d` with subdegrees `m1 < m2`
//! has `m1 | m2` and `(m2 / m1) | d`. The scans below run that test over the
//! other classes and collect the parameters that survive it.

use std::collections::BTreeMap;
use std::fmt;

use serde::Serialize;

use crate::arith;
use crate::error::{invalid, Result};
use crate::formulas::{ClassSpec, ParameterTriple};
use crate::graphs::Sign;

/// Passes iff `m1 | m2` and `(m2 / m1) | d`.
pub fn a1_divisibility(t: &ParameterTriple) -> Result<bool> {
    let (p, d) = arith::prime_power(t.n).ok_or_else(|| invalid(format!("{} is not a prime power", t.n)))?;
    if p != t.p || d != t.d {
        return Err(invalid(format!("{} is not {}^{}", t.n, t.p, t.d)));
    }
    Ok(t.m1 != 0 && t.m2.is_multiple_of(t.m1) && (d as u128).is_multiple_of(t.m2 / t.m1))
}

fn passes(t: &ParameterTriple) -> bool {
    a1_divisibility(t).expect("triples are built from prime powers")
}

/// One transcribed table row: degree `p^d`, subdegrees and the printed
/// quotient column.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
struct Row {
    p: u64,
    d: u32,
    m1: u128,
    m2: u128,
    quotient: Option<u128>,
}

const fn r(p: u64, d: u32, m1: u128, m2: u128, quotient: Option<u128>) -> Row {
    Row { p, d, m1, m2, quotient }
}

#[rustfmt::skip]
const TABLE_B: [Row; 16] = [
    r(2, 6, 27, 36, None),
    r(3, 4, 32, 48, None),
    r(7, 2, 24, 24, Some(1)),
    r(13, 2, 72, 96, None),
    r(17, 2, 96, 192, Some(2)),
    r(19, 2, 144, 216, None),
    r(23, 2, 264, 264, Some(1)),
    r(3, 6, 104, 624, Some(6)),
    r(29, 2, 168, 672, Some(4)),
    r(31, 2, 240, 720, Some(3)),
    r(47, 2, 1104, 1104, Some(1)),
    r(3, 4, 32, 48, None),
    r(3, 4, 16, 64, Some(4)),
    r(5, 4, 240, 384, None),
    r(7, 4, 480, 1920, Some(4)),
    r(3, 8, 1440, 5120, None),
];

#[rustfmt::skip]
const TABLE_C: [Row; 26] = [
    r(3, 4, 40, 40, Some(1)),
    r(2, 8, 15 * 5, 15 * 12, None),
    r(5, 4, 24 * 6, 24 * 20, None),
    r(31, 2, 30 * 12, 30 * 20, None),
    r(41, 2, 40 * 12, 40 * 30, None),
    r(7, 4, 48 * 20, 48 * 30, None),
    r(2, 12, 63 * 5, 63 * 60, Some(12)),
    r(71, 2, 70 * 12, 70 * 60, Some(5)),
    r(79, 2, 78 * 20, 78 * 60, Some(3)),
    r(89, 2, 88 * 30, 88 * 60, Some(2)),
    r(5, 6, 124 * 6, 124 * 120, Some(20)),
    r(2, 6, 18, 45, None),
    r(5, 4, 144, 480, None),
    r(2, 8, 45, 210, None),
    r(7, 4, 720, 1680, None),
    r(2, 8, 120, 135, None),
    r(2, 8, 102, 153, None),
    r(3, 6, 224, 504, None),
    r(7, 4, 240, 2160, Some(9)),
    r(3, 5, 22, 220, Some(10)),
    r(3, 5, 110, 132, None),
    r(2, 11, 276, 1771, None),
    r(2, 11, 759, 1288, None),
    r(3, 12, 65520, 465920, None),
    r(2, 12, 1575, 2520, None),
    r(5, 6, 7560, 8064, None),
];

const CHECKSUM_B: u64 = 0x0025_6051_028d_1409;
const CHECKSUM_C: u64 = 0x0024_366a_62dc_d45b;

fn checksum(rows: &[Row]) -> u64 {
    rows.iter().fold(0xcbf2_9ce4_8422_2325u64, |h, row| {
        [row.p as u128, row.d as u128, row.m1, row.m2, row.quotient.unwrap_or(0)]
            .iter()
            .flat_map(|x| x.to_le_bytes())
            .fold(h, |h, b| (h ^ b as u64).wrapping_mul(0x100_0000_01b3))
    })
}

/// Converts a transcribed table, asserting the quotient column and the
/// subdegree sums against recomputation.
fn load(rows: &[Row], expected_checksum: u64) -> Vec<ParameterTriple> {
    debug_assert_eq!(checksum(rows), expected_checksum, "table data changed");
    rows.iter()
        .map(|row| {
            let t = ParameterTriple::new(row.p, row.d, row.m1, row.m2)
                .unwrap_or_else(|e| panic!("bad table row {row:?}: {e}"));
            let q = t.m2.is_multiple_of(t.m1).then(|| t.m2 / t.m1);
            assert_eq!(q, row.quotient, "quotient column of {t}");
            t
        })
        .collect()
}

/// Degrees and subdegrees of the rank-3 groups in class (B).
pub fn class_b_table() -> Vec<ParameterTriple> {
    load(&TABLE_B, CHECKSUM_B)
}

/// Degrees and subdegrees of the rank-3 groups in class (C).
pub fn class_c_table() -> Vec<ParameterTriple> {
    load(&TABLE_C, CHECKSUM_C)
}

fn survivors(table: Vec<ParameterTriple>) -> Vec<ParameterTriple> {
    let mut out: Vec<_> = table.into_iter().filter(passes).collect();
    out.sort();
    out.dedup();
    out
}

pub fn scan_class_b() -> Vec<ParameterTriple> {
    survivors(class_b_table())
}

pub fn scan_class_c() -> Vec<ParameterTriple> {
    survivors(class_c_table())
}

/// Survivors of the divisibility test in class (A), grouped by the branch
/// of the case analysis that produced them.
#[derive(Clone, Debug, Default, PartialEq, Eq, Serialize)]
pub struct ClassAScan {
    pub a2: Vec<ParameterTriple>,
    pub a3_a5: Vec<ParameterTriple>,
    pub a6_a7_a11: Vec<ParameterTriple>,
    pub a8: Vec<ParameterTriple>,
    pub a9: Vec<ParameterTriple>,
    pub a10: Vec<ParameterTriple>,
}

impl ClassAScan {
    pub fn union(&self) -> Vec<ParameterTriple> {
        let mut all: Vec<_> = [&self.a2, &self.a3_a5, &self.a6_a7_a11, &self.a8, &self.a9, &self.a10]
            .into_iter()
            .flatten()
            .copied()
            .collect();
        all.sort();
        all.dedup();
        all
    }
}

/// Field orders checked in the (A8)–(A10) branches, where the quotient is
/// never an integer.
const LARGE_CLASS_Q_MAX: u64 = 64;

pub fn scan_class_a_branches() -> ClassAScan {
    let keep = |specs: Vec<ClassSpec>| -> Vec<ParameterTriple> {
        let mut out: Vec<_> = specs
            .iter()
            .filter_map(|s| s.subdegrees().ok())
            .filter(passes)
            .collect();
        out.sort();
        out.dedup();
        out
    };

    // p^m - 1 <= 4m forces p^m <= 4m + 1, so m < 8 and p <= 5 suffice.
    let mut a2 = Vec::new();
    for p in arith::prime_powers_upto(5).into_iter().filter(|&p| arith::is_prime(p)) {
        for m in 1..8u32 {
            let pm = p.pow(m);
            if pm >= 3 && pm - 1 <= 4 * m as u64 {
                a2.push(ClassSpec::A2 { p, m });
            }
        }
    }

    // r(r^(m-1) - 1)/(r + 1) must be an integer dividing d.
    let mut a3 = Vec::new();
    for r in arith::prime_powers_upto(44) {
        let (_, f) = arith::prime_power(r as u128).expect("prime power");
        let mut m = 2u32;
        while r.pow(m - 1) <= 44 {
            let top = r * (r.pow(m - 1) - 1);
            if top % (r + 1) == 0 && ((2 * m * f) as u64).is_multiple_of((top / (r + 1)).max(1)) {
                a3.push(ClassSpec::A3 { q: r, m });
            }
            m += 1;
        }
    }

    // Plus type needs (q + 1) | q(q - 1), impossible for q >= 2; minus type
    // with m = 2 gives u = q.
    let a6 = arith::prime_powers_upto(16)
        .into_iter()
        .map(|q| ClassSpec::A7 { sign: Sign::Minus, q, m: 2 })
        .collect();

    let large = |f: fn(u64) -> ClassSpec| {
        arith::prime_powers_upto(LARGE_CLASS_Q_MAX).into_iter().map(f).collect()
    };

    ClassAScan {
        a2: keep(a2),
        a3_a5: keep(a3),
        a6_a7_a11: keep(a6),
        a8: keep(large(|q| ClassSpec::A8 { q })),
        a9: keep(large(|q| ClassSpec::A9 { q })),
        a10: keep(large(|q| ClassSpec::A10 { q })),
    }
}

pub fn scan_class_a() -> Vec<ParameterTriple> {
    scan_class_a_branches().union()
}

/// A graph family compared by subdegrees only.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash, Serialize)]
#[serde(tag = "family", rename_all = "snake_case")]
pub enum SubdegreeFamily {
    Bilinear { q: u64, m: u32 },
    Polar { sign: Sign, q: u64, m: u32 },
    AltForms { q: u64 },
    HalfSpin { q: u64 },
    Suzuki { q: u64 },
}

impl SubdegreeFamily {
    fn spec(&self) -> ClassSpec {
        match *self {
            SubdegreeFamily::Bilinear { q, m } => ClassSpec::A3 { q, m },
            SubdegreeFamily::Polar { sign, q, m } => ClassSpec::A7 { sign, q, m },
            SubdegreeFamily::AltForms { q } => ClassSpec::A8 { q },
            SubdegreeFamily::HalfSpin { q } => ClassSpec::A10 { q },
            SubdegreeFamily::Suzuki { q } => ClassSpec::A11 { q },
        }
    }

    pub fn subdegrees(&self) -> Result<ParameterTriple> {
        self.spec().subdegrees()
    }

    /// The family name with the field order left symbolic.
    pub fn kind(&self) -> String {
        match *self {
            SubdegreeFamily::Bilinear { m, .. } => format!("H_q(2,{m})"),
            SubdegreeFamily::Polar { sign, m, .. } => format!("VO^{sign}_{}(q)", 2 * m),
            SubdegreeFamily::AltForms { .. } => "A(5,q)".into(),
            SubdegreeFamily::HalfSpin { .. } => "VD55(q)".into(),
            SubdegreeFamily::Suzuki { .. } => "VSz(q)".into(),
        }
    }
}

impl fmt::Display for SubdegreeFamily {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match *self {
            SubdegreeFamily::Bilinear { q, m } => write!(f, "H_{q}(2,{m})"),
            SubdegreeFamily::Polar { sign, q, m } => write!(f, "VO^{sign}_{}({q})", 2 * m),
            SubdegreeFamily::AltForms { q } => write!(f, "A(5,{q})"),
            SubdegreeFamily::HalfSpin { q } => write!(f, "VD55({q})"),
            SubdegreeFamily::Suzuki { q } => write!(f, "VSz({q})"),
        }
    }
}

/// Several families sharing degree and subdegrees.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct Coincidence {
    pub triple: ParameterTriple,
    pub members: Vec<SubdegreeFamily>,
}

impl Coincidence {
    /// Sorted symbolic names of the members.
    pub fn kinds(&self) -> Vec<String> {
        let mut k: Vec<String> = self.members.iter().map(|m| m.kind()).collect();
        k.sort();
        k.dedup();
        k
    }
}

/// All families on the grid `q <= q_max`, `2 <= m <= m_max` whose numbers fit.
pub fn family_grid(q_max: u64, m_max: u32) -> Vec<(SubdegreeFamily, ParameterTriple)> {
    let mut fams = Vec::new();
    for q in arith::prime_powers_upto(q_max) {
        for m in 2..=m_max {
            fams.push(SubdegreeFamily::Bilinear { q, m });
            fams.push(SubdegreeFamily::Polar { sign: Sign::Plus, q, m });
            fams.push(SubdegreeFamily::Polar { sign: Sign::Minus, q, m });
        }
        fams.push(SubdegreeFamily::AltForms { q });
        fams.push(SubdegreeFamily::HalfSpin { q });
        fams.push(SubdegreeFamily::Suzuki { q });
    }
    fams.into_iter()
        .filter_map(|f| f.subdegrees().ok().map(|t| (f, t)))
        .collect()
}

/// Groups the grid by `(n, m1, m2)` and returns the groups with more than one
/// member, ordered by triple.
pub fn pairwise_intersections(q_max: u64, m_max: u32) -> Vec<Coincidence> {
    let mut groups: BTreeMap<ParameterTriple, Vec<SubdegreeFamily>> = BTreeMap::new();
    for (f, t) in family_grid(q_max, m_max) {
        groups.entry(t).or_default().push(f);
    }
    groups
        .into_iter()
        .filter(|(_, members)| members.len() > 1)
        .map(|(triple, mut members)| {
            members.sort();
            Coincidence { triple, members }
        })
        .collect()
}

/// The distinct symbolic collision patterns among the coincidences.
pub fn collision_kinds(coincidences: &[Coincidence]) -> Vec<Vec<String>> {
    let mut kinds: Vec<_> = coincidences.iter().map(Coincidence::kinds).collect();
    kinds.sort();
    kinds.dedup();
    kinds
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionEntry {
    pub p: u64,
    pub d: u32,
    pub subdegree: u128,
}

/// Degree and smallest subdegree of every parameter set not ruled out by
/// the divisibility test, per class.
#[derive(Clone, Debug, PartialEq, Eq, Serialize)]
pub struct ExceptionTable {
    #[serde(rename = "A")]
    pub a: Vec<ExceptionEntry>,
    #[serde(rename = "B")]
    pub b: Vec<ExceptionEntry>,
    #[serde(rename = "C")]
    pub c: Vec<ExceptionEntry>,
}

fn entries(triples: Vec<ParameterTriple>) -> Vec<ExceptionEntry> {
    let mut e: Vec<_> = triples
        .into_iter()
        .map(|t| ExceptionEntry { p: t.p, d: t.d, subdegree: t.m1 })
        .collect();
    e.sort_by_key(|x| (x.p, x.d, x.subdegree));
    e.dedup();
    e
}

pub fn emit_exception_table() -> ExceptionTable {
    ExceptionTable {
        a: entries(scan_class_a()),
        b: entries(scan_class_b()),
        c: entries(scan_class_c()),
    }
}

impl ExceptionTable {
    /// Three blocks of two aligned rows, degrees above subdegrees.
    pub fn to_text(&self) -> String {
        let mut out = String::new();
        for (name, rows) in [("A", &self.a), ("B", &self.b), ("C", &self.c)] {
            let degrees: Vec<String> = rows.iter().map(|e| format!("{}^{}", e.p, e.d)).collect();
            let subs: Vec<String> = rows.iter().map(|e| e.subdegree.to_string()).collect();
            let widths: Vec<usize> = degrees.iter().zip(&subs).map(|(a, b)| a.len().max(b.len())).collect();
            let line = |head: &str, cells: &[String]| {
                let mut s = format!("{head:<9}");
                for (c, w) in cells.iter().zip(&widths) {
                    s.push_str(&format!(" | {c:>w$}"));
                }
                s
            };
            out.push_str(&format!("({name})\n{}\n{}\n", line("Degree", &degrees), line("Subdegree", &subs)));
        }
        out
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn t(p: u64, d: u32, m1: u128, m2: u128) -> ParameterTriple {
        ParameterTriple::new(p, d, m1, m2).unwrap()
    }

    #[test]
    fn table_checksums() {
        assert_eq!(checksum(&TABLE_B), CHECKSUM_B);
        assert_eq!(checksum(&TABLE_C), CHECKSUM_C);
        assert_eq!(class_b_table().len(), 16);
        assert_eq!(class_c_table().len(), 26);
    }

    #[test]
    fn divisibility_examples() {
        assert!(!a1_divisibility(&t(29, 2, 168, 672)).unwrap());
        assert!(a1_divisibility(&t(17, 2, 96, 192)).unwrap());
        assert!(a1_divisibility(&t(13, 1, 6, 6)).unwrap());
        let bogus = ParameterTriple { p: 2, d: 1, n: 6, m1: 1, m2: 4 };
        assert!(a1_divisibility(&bogus).is_err());
    }

    #[test]
    fn class_b_and_c_scans() {
        let b = scan_class_b();
        assert_eq!(
            b,
            vec![
                t(3, 4, 16, 64),
                t(3, 6, 104, 624),
                t(7, 2, 24, 24),
                t(7, 4, 480, 1920),
                t(17, 2, 96, 192),
                t(23, 2, 264, 264),
                t(47, 2, 1104, 1104),
            ]
        );
        assert!(!b.contains(&t(13, 2, 72, 96)));
        let c = scan_class_c();
        assert_eq!(c, vec![t(2, 12, 315, 3780), t(3, 4, 40, 40), t(89, 2, 2640, 5280)]);
        assert!(!c.contains(&t(3, 5, 22, 220)));
    }

    #[test]
    fn class_a_scan() {
        let scan = scan_class_a_branches();
        assert!(scan.a8.is_empty() && scan.a9.is_empty() && scan.a10.is_empty());
        assert!(scan.a3_a5.contains(&t(2, 12, 315, 3780)));
        let mut expected = vec![
            t(3, 2, 4, 4),
            t(3, 4, 16, 64),
            t(3, 6, 104, 624),
            t(2, 4, 5, 10),
            t(2, 6, 21, 42),
            t(2, 8, 51, 204),
            t(2, 10, 93, 930),
            t(2, 12, 315, 3780),
            t(2, 16, 3855, 61680),
            t(5, 2, 8, 16),
        ];
        expected.sort();
        assert_eq!(scan.union(), expected);
        assert!(scan.union().iter().all(passes));
    }

    #[test]
    fn exception_table_layout() {
        let table = emit_exception_table();
        assert_eq!((table.a.len(), table.b.len(), table.c.len()), (10, 7, 3));
        assert_eq!(table, emit_exception_table());
        let text = table.to_text();
        assert!(text.contains("(C)\nDegree    | 2^12 | 3^4 | 89^2\nSubdegree |  315 |  40 | 2640\n"));
    }

    #[test]
    fn intersections_on_default_grid() {
        let hits = pairwise_intersections(16, 6);
        let kinds = collision_kinds(&hits);
        assert_eq!(
            kinds,
            vec![
                vec!["H_q(2,2)".to_string(), "VO^+_4(q)".to_string()],
                vec!["VO^-_4(q)".to_string(), "VSz(q)".to_string()],
            ]
        );
        let suzuki: Vec<_> = hits
            .iter()
            .filter(|c| c.members.iter().any(|m| matches!(m, SubdegreeFamily::Suzuki { .. })))
            .collect();
        assert_eq!(suzuki.len(), 1);
        assert_eq!(suzuki[0].triple.n, 4096);
        for c in &hits {
            assert!(c.members.iter().all(|m| !matches!(
                m,
                SubdegreeFamily::AltForms { .. } | SubdegreeFamily::HalfSpin { .. }
            )));
        }
    }

    #[test]
    fn larger_grid_adds_no_new_kinds() {
        let small = collision_kinds(&pairwise_intersections(16, 6));
        let large = pairwise_intersections(32, 8);
        assert_eq!(collision_kinds(&large), small);
        assert!(large
            .iter()
            .any(|c| c.members.contains(&SubdegreeFamily::Suzuki { q: 32 })));
    }
}
