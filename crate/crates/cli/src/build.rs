use std::path::{Path, PathBuf};
use std::process::ExitCode;
use std::str::FromStr;

use clap::ValueEnum;
use serde_json::json;

use rank3kit::graphs::{to_dimacs, to_graph6, Family};
use rank3kit::permgrp::two_closure_with;
use rank3kit::{Error, GeneratedGroup, Sign};

use crate::{fail, Settings};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum FamilyName {
    Hamming2,
    Bilinear,
    Polar,
    Altforms5,
    Vsz,
    Paley,
    Peisert,
    Vls,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum OutFormat {
    Graph6,
    Dimacs,
}

fn arg<T: FromStr>(params: &[String], i: usize, name: &str) -> Result<T, Error>
where
    T::Err: std::fmt::Display,
{
    params[i]
        .parse()
        .map_err(|e| Error::InvalidParameter(format!("{name}: {e}")))
}

/// Parses positional family parameters.
pub fn parse_family(name: FamilyName, params: &[String]) -> Result<Family, Error> {
    let names: &[&str] = match name {
        FamilyName::Hamming2 => &["s"],
        FamilyName::Bilinear => &["q", "m"],
        FamilyName::Polar => &["sign", "m", "q"],
        FamilyName::Altforms5 | FamilyName::Vsz | FamilyName::Paley => &["q"],
        FamilyName::Peisert => &["p", "t"],
        FamilyName::Vls => &["p", "e", "t"],
    };
    if params.len() != names.len() {
        return Err(Error::InvalidParameter(format!(
            "expected {} parameter(s) <{}>, got {}",
            names.len(),
            names.join("> <"),
            params.len()
        )));
    }
    let p = |i| arg::<u64>(params, i, names[i]);
    let m = |i| arg::<u32>(params, i, names[i]);
    Ok(match name {
        FamilyName::Hamming2 => Family::Hamming2 { s: p(0)? },
        FamilyName::Bilinear => Family::Bilinear { q: p(0)?, m: m(1)? },
        FamilyName::Polar => Family::Polar {
            sign: arg::<Sign>(params, 0, "sign")?,
            m: m(1)?,
            q: p(2)?,
        },
        FamilyName::Altforms5 => Family::AltForms5 { q: p(0)? },
        FamilyName::Vsz => Family::Vsz { q: p(0)? },
        FamilyName::Paley => Family::Paley { q: p(0)? },
        FamilyName::Peisert => Family::Peisert { p: p(0)?, t: m(1)? },
        FamilyName::Vls => Family::Vls {
            p: p(0)?,
            e: p(1)?,
            t: m(2)?,
        },
    })
}

fn default_path(name: FamilyName, params: &[String], out: OutFormat) -> PathBuf {
    let stem = std::iter::once(format!("{name:?}").to_lowercase())
        .chain(params.iter().map(|p| match p.as_str() {
            "-" => "minus".to_string(),
            "+" => "plus".to_string(),
            other => other.to_string(),
        }))
        .collect::<Vec<_>>()
        .join("_");
    let ext = match out {
        OutFormat::Graph6 => "g6",
        OutFormat::Dimacs => "dimacs",
    };
    PathBuf::from(format!("{stem}.{ext}"))
}

fn sidecar_path(path: &Path) -> PathBuf {
    let mut s = path.as_os_str().to_owned();
    s.push(".json");
    PathBuf::from(s)
}

pub fn run(
    name: FamilyName,
    params: &[String],
    out: OutFormat,
    output: Option<PathBuf>,
    settings: &Settings,
) -> ExitCode {
    let family = match parse_family(name, params) {
        Ok(f) => f,
        Err(e) => return fail(&e),
    };
    let graph = match family.build(settings.construction_cap) {
        Ok(g) => g,
        Err(e) => return fail(&e),
    };
    let path = output.unwrap_or_else(|| default_path(name, params, out));
    let body = match out {
        OutFormat::Graph6 => to_graph6(&graph) + "\n",
        OutFormat::Dimacs => to_dimacs(&graph),
    };
    let sidecar = json!({
        "family": family,
        "name": family.to_string(),
        "vertices": graph.order(),
        "edges": graph.edge_count(),
        "degree": graph.regular_degree(),
        "srg": graph.srg_parameters(),
        "field_modulus": graph.label().modulus,
        "format": format!("{out:?}").to_lowercase(),
        "file": path.display().to_string(),
        "version": env!("CARGO_PKG_VERSION"),
    });
    let text = serde_json::to_string_pretty(&sidecar).expect("sidecar serializes");
    let written = std::fs::write(&path, body)
        .and_then(|_| std::fs::write(sidecar_path(&path), text.clone() + "\n"));
    if let Err(e) = written {
        eprintln!("error: cannot write {}: {e}", path.display());
        return ExitCode::FAILURE;
    }
    println!("{text}");
    ExitCode::SUCCESS
}

pub fn closure(file: &Path, settings: &Settings) -> ExitCode {
    let text = match std::fs::read_to_string(file) {
        Ok(t) => t,
        Err(e) => {
            eprintln!("error: cannot read {}: {e}", file.display());
            return ExitCode::from(crate::EXIT_INVALID);
        }
    };
    let result = GeneratedGroup::from_json(&text).and_then(|group| {
        let closure = two_closure_with(&group, &settings.search)?;
        let orbitals = group.orbitals()?;
        Ok((group, closure, orbitals))
    });
    let (group, closure, orbitals) = match result {
        Ok(r) => r,
        Err(e) => return fail(&e),
    };
    let (order, closure_order) = (group.order(), closure.order());
    let report = json!({
        "degree": group.degree(),
        "rank": orbitals.rank(),
        "subdegrees": orbitals.subdegrees(),
        "group_order": order.to_string(),
        "closure_order": closure_order.to_string(),
        "closure_index": (&closure_order / &order).to_string(),
        "closed": closure_order == order,
        "closure_generators": closure.generators(),
    });
    println!("{}", serde_json::to_string_pretty(&report).expect("report serializes"));
    ExitCode::SUCCESS
}

#[cfg(test)]
mod tests {
    use super::*;

    fn strings(v: &[&str]) -> Vec<String> {
        v.iter().map(|s| s.to_string()).collect()
    }

    #[test]
    fn family_parameters() {
        assert_eq!(
            parse_family(FamilyName::Polar, &strings(&["-", "2", "8"])).unwrap(),
            Family::Polar { sign: Sign::Minus, m: 2, q: 8 }
        );
        assert_eq!(
            parse_family(FamilyName::Vls, &strings(&["2", "5", "1"])).unwrap(),
            Family::Vls { p: 2, e: 5, t: 1 }
        );
        assert!(parse_family(FamilyName::Polar, &strings(&["*", "2", "8"])).is_err());
        assert!(parse_family(FamilyName::Paley, &strings(&[])).is_err());
        assert!(parse_family(FamilyName::Hamming2, &strings(&["x"])).is_err());
    }

    #[test]
    fn output_names() {
        let p = default_path(FamilyName::Polar, &strings(&["+", "2", "3"]), OutFormat::Dimacs);
        assert_eq!(p, PathBuf::from("polar_plus_2_3.dimacs"));
        assert_eq!(sidecar_path(&p), PathBuf::from("polar_plus_2_3.dimacs.json"));
    }
}
