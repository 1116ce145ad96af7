use std::process::ExitCode;
use std::time::Instant;

use clap::ValueEnum;
use rand::seq::SliceRandom;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use serde_json::json;

use rank3kit::distinguisher::{
    collision_kinds, emit_exception_table, pairwise_intersections, scan_class_a_branches,
    scan_class_b, scan_class_c, ExceptionEntry,
};
use rank3kit::formulas::{closure_order, ClassSpec, ClosureCase, ParameterTriple};
use rank3kit::graphs::Family;
use rank3kit::iso::{automorphisms, is_isomorphic, is_isomorphism};
use rank3kit::permgrp::{
    cyclic_group, dihedral_group, imprimitive_wreath, product_wreath, symmetric_group,
    two_closure_with, wreath_rank_check,
};
use rank3kit::{arith, Error, Permutation, Sign};

use crate::report::Recorder;
use crate::tables::DEFAULT_BOUNDS;
use crate::Settings;

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Target {
    ImprimitiveClosure,
    ProductClosure,
    RankFormula,
    Subdegrees,
    LemmaA,
    LemmaB,
    LemmaC,
    Intersections,
    Exceptions,
    #[value(name = "iso-h22-vo4p")]
    IsoH22Vo4p,
    AutOrders,
    All,
}

const SINGLE_TARGETS: [Target; 11] = [
    Target::ImprimitiveClosure,
    Target::ProductClosure,
    Target::RankFormula,
    Target::Subdegrees,
    Target::LemmaA,
    Target::LemmaB,
    Target::LemmaC,
    Target::Intersections,
    Target::Exceptions,
    Target::IsoH22Vo4p,
    Target::AutOrders,
];

impl Target {
    fn name(self) -> String {
        self.to_possible_value()
            .expect("every target has a name")
            .get_name()
            .to_string()
    }
}

type Bounds = (u64, u32);

pub fn run(target: Target, bounds: Option<Bounds>, settings: &Settings) -> ExitCode {
    let bounds = bounds.unwrap_or(DEFAULT_BOUNDS);
    let mut rec = Recorder::new();
    let targets: Vec<Target> = match target {
        Target::All => SINGLE_TARGETS.to_vec(),
        t => vec![t],
    };
    let parts: Vec<(Target, Recorder)> = std::thread::scope(|s| {
        let handles: Vec<_> = targets
            .iter()
            .map(|&t| s.spawn(move || (t, run_one(t, bounds, settings))))
            .collect();
        handles
            .into_iter()
            .map(|h| h.join().expect("check thread panicked"))
            .collect()
    });
    for (t, part) in parts {
        rec.absorb(&t.name(), part);
    }
    let report = rec.finish(json!({
        "target": target.name(),
        "bounds": [bounds.0, bounds.1],
        "construction_cap": settings.construction_cap,
        "search_cap": settings.search.cap,
        "cell_rule": settings.search.rule,
        "budget_secs": settings.search.budget.map(|b| b.as_secs()),
        "seed": settings.seed,
    }));
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    if report.passed {
        ExitCode::SUCCESS
    } else {
        ExitCode::FAILURE
    }
}

fn run_one(target: Target, bounds: Bounds, settings: &Settings) -> Recorder {
    let mut rec = Recorder::new();
    let outcome = match target {
        Target::ImprimitiveClosure => imprimitive_closure(&mut rec, settings),
        Target::ProductClosure => product_closure(&mut rec, settings),
        Target::RankFormula => rank_formula(&mut rec, settings),
        Target::Subdegrees => subdegrees(&mut rec, settings),
        Target::LemmaA => lemma_a(&mut rec),
        Target::LemmaB => lemma_b(&mut rec),
        Target::LemmaC => lemma_c(&mut rec),
        Target::Intersections => intersections(&mut rec, bounds),
        Target::Exceptions => exceptions(&mut rec),
        Target::IsoH22Vo4p => iso_h22_vo4p(&mut rec, settings),
        Target::AutOrders => aut_orders(&mut rec, settings),
        Target::All => unreachable!("expanded by the caller"),
    };
    if let Err(e) = outcome {
        rec.check("error", false, e.to_string());
    }
    rec
}

fn imprimitive_closure(rec: &mut Recorder, settings: &Settings) -> Result<(), Error> {
    for (delta, x) in [(2, 2), (2, 3), (3, 2), (3, 3), (4, 2)] {
        let closure = two_closure_with(&imprimitive_wreath(delta, x)?, &settings.search)?;
        let want = closure_order(&ClosureCase::Imprimitive {
            delta: delta as u64,
            x: x as u64,
        })?;
        let got = closure.order();
        rec.check(
            format!("Sym({delta}) wr Sym({x})"),
            got == want,
            format!("closure order {got}, expected {want}"),
        );
    }
    Ok(())
}

fn product_closure(rec: &mut Recorder, settings: &Settings) -> Result<(), Error> {
    for delta in [3, 4, 5] {
        let closure = two_closure_with(&product_wreath(delta, 2, settings.construction_cap)?, &settings.search)?;
        let want = closure_order(&ClosureCase::Product { delta: delta as u64 })?;
        let got = closure.order();
        rec.check(
            format!("Sym({delta}) up Sym(2)"),
            got == want,
            format!("closure order {got}, expected {want}"),
        );
    }
    Ok(())
}

fn rank_formula(rec: &mut Recorder, settings: &Settings) -> Result<(), Error> {
    let cases = [
        ("Sym(3)", symmetric_group(3), 2),
        ("C5", cyclic_group(5), 2),
        ("Sym(2)", symmetric_group(2), 3),
        ("D4", dihedral_group(4), 2),
        ("C3", cyclic_group(3), 3),
        ("Sym(4)", symmetric_group(4), 3),
    ];
    for (name, g0, m) in cases {
        let (computed, formula) = wreath_rank_check(&g0, m, settings.construction_cap)?;
        rec.check(
            format!("{name} up Sym({m})"),
            computed as u128 == formula,
            format!("rank {computed}, formula {formula}"),
        );
    }
    Ok(())
}

/// Family instances paired with their classification rows.
pub fn family_grid() -> Vec<(Family, ClassSpec)> {
    let mut out = Vec::new();
    for s in arith::prime_powers_upto(64) {
        let (p, m) = arith::prime_power(s as u128).expect("prime power");
        out.push((Family::Hamming2 { s }, ClassSpec::A2 { p, m }));
    }
    for q in [2, 3, 4] {
        for m in [2, 3] {
            out.push((Family::Bilinear { q, m }, ClassSpec::A3 { q, m }));
        }
    }
    for q in [2, 3, 4, 8] {
        for sign in [Sign::Plus, Sign::Minus] {
            out.push((Family::Polar { sign, m: 2, q }, ClassSpec::A7 { sign, q, m: 2 }));
        }
    }
    out.push((Family::AltForms5 { q: 2 }, ClassSpec::A8 { q: 2 }));
    out.push((Family::Vsz { q: 8 }, ClassSpec::A11 { q: 8 }));
    for q in [5, 9, 13, 17, 25] {
        out.push((Family::Paley { q }, ClassSpec::A1Paley { q }));
    }
    for p in [3, 7] {
        out.push((Family::Peisert { p, t: 1 }, ClassSpec::A1Peisert { p, t: 1 }));
    }
    out.push((Family::Vls { p: 2, e: 5, t: 1 }, ClassSpec::A1Vls { p: 2, e: 5, t: 1 }));
    out
}

fn subdegrees(rec: &mut Recorder, settings: &Settings) -> Result<(), Error> {
    let mut skipped = Vec::new();
    for (family, spec) in family_grid() {
        let t = spec.subdegrees()?;
        if t.n > settings.construction_cap as u128 {
            skipped.push(family.to_string());
            continue;
        }
        let g = family.build(settings.construction_cap)?;
        rec.modulus(g.label().modulus.as_ref());
        let n = g.order();
        let k = g.regular_degree();
        let mut found = k.map(|k| [k as u128, (n - 1 - k) as u128]);
        if let Some(f) = found.as_mut() {
            f.sort_unstable();
        }
        let mut ok = found == Some([t.m1, t.m2]);
        let mut detail = format!("degree {k:?}, formula {t}");
        if n <= settings.search.cap {
            let aut = automorphisms(&g, &settings.search)?;
            let subs = aut.group.orbitals()?.subdegrees().to_vec();
            ok &= subs.iter().map(|&s| s as u128).eq([t.m1, t.m2]);
            detail = format!("suborbits {subs:?}, formula {t}");
        }
        rec.check(family.to_string(), ok, detail);
    }
    rec.result("skipped_above_cap", json!(skipped));
    Ok(())
}

fn t(p: u64, d: u32, m1: u128, m2: u128) -> ParameterTriple {
    ParameterTriple::new(p, d, m1, m2).expect("valid reference triple")
}

fn compare(rec: &mut Recorder, name: &str, mut got: Vec<ParameterTriple>, mut want: Vec<ParameterTriple>) {
    got.sort();
    want.sort();
    let show = |v: &[ParameterTriple]| v.iter().map(ToString::to_string).collect::<Vec<_>>();
    rec.result(name, json!(show(&got)));
    rec.check(
        name,
        got == want,
        format!("{} triples, expected {}", got.len(), want.len()),
    );
}

fn lemma_a(rec: &mut Recorder) -> Result<(), Error> {
    let scan = scan_class_a_branches();
    rec.check(
        "large classes empty",
        scan.a8.is_empty() && scan.a9.is_empty() && scan.a10.is_empty(),
        "(A8), (A9), (A10) branches",
    );
    compare(
        rec,
        "class A",
        scan.union(),
        vec![
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
        ],
    );
    Ok(())
}

fn lemma_b(rec: &mut Recorder) -> Result<(), Error> {
    compare(
        rec,
        "class B",
        scan_class_b(),
        vec![
            t(7, 2, 24, 24),
            t(17, 2, 96, 192),
            t(23, 2, 264, 264),
            t(3, 6, 104, 624),
            t(47, 2, 1104, 1104),
            t(3, 4, 16, 64),
            t(7, 4, 480, 1920),
        ],
    );
    Ok(())
}

fn lemma_c(rec: &mut Recorder) -> Result<(), Error> {
    compare(
        rec,
        "class C",
        scan_class_c(),
        vec![t(3, 4, 40, 40), t(2, 12, 315, 3780), t(89, 2, 2640, 5280)],
    );
    Ok(())
}

fn intersections(rec: &mut Recorder, bounds: Bounds) -> Result<(), Error> {
    let hits = pairwise_intersections(bounds.0, bounds.1);
    let kinds = collision_kinds(&hits);
    let want = vec![
        vec!["H_q(2,2)".to_string(), "VO^+_4(q)".to_string()],
        vec!["VO^-_4(q)".to_string(), "VSz(q)".to_string()],
    ];
    let suzuki_possible = bounds.0 >= 8 && bounds.1 >= 2;
    let want: Vec<_> = want
        .into_iter()
        .filter(|k| suzuki_possible || !k.contains(&"VSz(q)".to_string()))
        .collect();
    rec.result("kinds", json!(kinds));
    rec.result(
        "coincidences",
        json!(hits
            .iter()
            .map(|c| json!({
                "triple": c.triple.to_string(),
                "members": c.members.iter().map(ToString::to_string).collect::<Vec<_>>(),
            }))
            .collect::<Vec<_>>()),
    );
    rec.check(
        "collision kinds",
        kinds == want,
        format!("{} coincidences in {} kinds on grid q <= {}, m <= {}", hits.len(), kinds.len(), bounds.0, bounds.1),
    );
    Ok(())
}

fn exceptions(rec: &mut Recorder) -> Result<(), Error> {
    let table = emit_exception_table();
    let rows = |v: &[(u64, u32, u128)]| -> Vec<ExceptionEntry> {
        v.iter()
            .map(|&(p, d, subdegree)| ExceptionEntry { p, d, subdegree })
            .collect()
    };
    let want_a = rows(&[
        (2, 4, 5),
        (2, 6, 21),
        (2, 8, 51),
        (2, 10, 93),
        (2, 12, 315),
        (2, 16, 3855),
        (3, 2, 4),
        (3, 4, 16),
        (3, 6, 104),
        (5, 2, 8),
    ]);
    let want_b = rows(&[
        (3, 4, 16),
        (3, 6, 104),
        (7, 2, 24),
        (7, 4, 480),
        (17, 2, 96),
        (23, 2, 264),
        (47, 2, 1104),
    ]);
    let want_c = rows(&[(2, 12, 315), (3, 4, 40), (89, 2, 2640)]);
    rec.result("text", json!(table.to_text()));
    rec.check("(A)", table.a == want_a, format!("{} entries", table.a.len()));
    rec.check("(B)", table.b == want_b, format!("{} entries", table.b.len()));
    rec.check("(C)", table.c == want_c, format!("{} entries", table.c.len()));
    Ok(())
}

fn iso_h22_vo4p(rec: &mut Recorder, settings: &Settings) -> Result<(), Error> {
    let mut rng = ChaCha8Rng::seed_from_u64(settings.seed);
    for q in [2u64, 3, 4] {
        let a = Family::Bilinear { q, m: 2 }.build(settings.construction_cap)?;
        let b = Family::Polar { sign: Sign::Plus, m: 2, q }.build(settings.construction_cap)?;
        rec.modulus(b.label().modulus.as_ref());
        let mut images: Vec<u32> = (0..b.order() as u32).collect();
        images.shuffle(&mut rng);
        let b = b.relabel(&Permutation::from_images(images)?);
        let start = Instant::now();
        let phi = is_isomorphic(&a, &b, &settings.search)?;
        rec.timed(&format!("q={q}"), start.elapsed().as_secs_f64());
        let verified = phi.as_ref().is_some_and(|p| is_isomorphism(&a, &b, p));
        rec.check(
            format!("H_{q}(2,2) ~ VO^+_4({q})"),
            verified,
            if verified { "isomorphism verified edge by edge" } else { "no isomorphism found" },
        );
    }
    Ok(())
}

fn aut_orders(rec: &mut Recorder, settings: &Settings) -> Result<(), Error> {
    let fixed: [(Family, u64); 6] = [
        (Family::Hamming2 { s: 3 }, 72),
        (Family::Hamming2 { s: 4 }, 1152),
        (Family::Bilinear { q: 2, m: 2 }, 1152),
        (Family::Polar { sign: Sign::Minus, m: 2, q: 2 }, 1920),
        (Family::Paley { q: 13 }, 78),
        (Family::Paley { q: 9 }, 72),
    ];
    let mut cases: Vec<(Family, String)> =
        fixed.iter().map(|(f, o)| (*f, o.to_string())).collect();
    let formula_cases = [
        (Family::Bilinear { q: 3, m: 2 }, ClosureCase::Bilinear { q: 3, m: 2 }),
        (Family::Bilinear { q: 2, m: 3 }, ClosureCase::Bilinear { q: 2, m: 3 }),
        (Family::Bilinear { q: 3, m: 3 }, ClosureCase::Bilinear { q: 3, m: 3 }),
        (Family::Polar { sign: Sign::Minus, m: 2, q: 3 }, ClosureCase::Polar { sign: Sign::Minus, q: 3, m: 2 }),
        (Family::Polar { sign: Sign::Plus, m: 2, q: 4 }, ClosureCase::Polar { sign: Sign::Plus, q: 4, m: 2 }),
        (Family::Polar { sign: Sign::Minus, m: 2, q: 5 }, ClosureCase::Polar { sign: Sign::Minus, q: 5, m: 2 }),
        (Family::AltForms5 { q: 2 }, ClosureCase::AltForms { q: 2 }),
        (Family::Vsz { q: 8 }, ClosureCase::Suzuki { q: 8 }),
        (Family::Polar { sign: Sign::Minus, m: 2, q: 8 }, ClosureCase::Polar { sign: Sign::Minus, q: 8, m: 2 }),
    ];
    for (f, case) in formula_cases {
        cases.push((f, closure_order(&case)?.to_string()));
    }
    let mut skipped = Vec::new();
    for (family, want) in cases {
        if family.vertex_count()? > settings.search.cap as u128 {
            skipped.push(family.to_string());
            continue;
        }
        let g = family.build(settings.construction_cap)?;
        rec.modulus(g.label().modulus.as_ref());
        let start = Instant::now();
        let aut = automorphisms(&g, &settings.search)?;
        rec.timed(&family.to_string(), start.elapsed().as_secs_f64());
        let got = aut.order.to_string();
        let certified = aut.certificate.iter().all(|&c| c);
        rec.check(
            family.to_string(),
            got == want && certified,
            format!("order {got}, expected {want}, generators certified: {certified}"),
        );
    }
    rec.result("skipped_above_cap", json!(skipped));
    Ok(())
}
