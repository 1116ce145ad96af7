use std::process::ExitCode;

use clap::ValueEnum;
use serde_json::json;

use rank3kit::distinguisher::{collision_kinds, emit_exception_table, pairwise_intersections};
use rank3kit::formulas::{class_a_table, instances, one_dimensional_table, render_table};

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Which {
    /// Degrees and subdegrees of classes (A1)-(A11).
    Classes,
    /// Subdegrees of the one-dimensional graphs.
    OneDim,
    /// Parameters not separated by the divisibility test.
    Exceptions,
    /// Subdegree coincidences between graph families on a grid.
    Intersections,
    /// Evaluated subdegrees for every class instance on a grid.
    Instances,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Text,
    Json,
}

pub const DEFAULT_BOUNDS: (u64, u32) = (16, 6);

pub fn run(which: Which, format: Format, bounds: Option<(u64, u32)>) -> ExitCode {
    let (q_max, m_max) = bounds.unwrap_or(DEFAULT_BOUNDS);
    let out = match (which, format) {
        (Which::Classes, Format::Text) => render_table(&class_a_table()),
        (Which::Classes, Format::Json) => to_json(&class_a_table()),
        (Which::OneDim, Format::Text) => render_table(&one_dimensional_table()),
        (Which::OneDim, Format::Json) => to_json(&one_dimensional_table()),
        (Which::Exceptions, Format::Text) => emit_exception_table().to_text(),
        (Which::Exceptions, Format::Json) => to_json(&emit_exception_table()),
        (Which::Intersections, fmt) => {
            let hits = pairwise_intersections(q_max, m_max);
            match fmt {
                Format::Json => to_json(&json!({
                    "bounds": [q_max, m_max],
                    "kinds": collision_kinds(&hits),
                    "coincidences": hits,
                })),
                Format::Text => hits
                    .iter()
                    .map(|c| {
                        let names: Vec<String> = c.members.iter().map(ToString::to_string).collect();
                        format!("{}  {}\n", c.triple, names.join(" = "))
                    })
                    .collect(),
            }
        }
        (Which::Instances, fmt) => {
            let rows = instances(q_max, m_max);
            match fmt {
                Format::Json => to_json(&rows),
                Format::Text => rows
                    .iter()
                    .map(|(spec, t)| format!("{spec}  {t}\n"))
                    .collect(),
            }
        }
    };
    print!("{out}");
    ExitCode::SUCCESS
}

fn to_json(value: &impl serde::Serialize) -> String {
    serde_json::to_string_pretty(value).expect("table serializes") + "\n"
}
