//! Deterministic csv/json emission. Counts and coefficients are rendered as
//! decimal strings so no consumer ever squeezes them through a fixed-width
//! integer.

use clap::ValueEnum;
use serde::Serialize;

#[derive(Clone, Copy, PartialEq, Eq, ValueEnum)]
pub enum Format {
    Csv,
    Json,
}

#[derive(Serialize)]
struct TableRow<'a> {
    n: usize,
    k: usize,
    count: &'a str,
}

pub fn emit_table(rows: &[(usize, usize, String)], format: Format) {
    match format {
        Format::Csv => {
            println!("n,k,count");
            for (n, k, count) in rows {
                println!("{n},{k},{count}");
            }
        }
        Format::Json => {
            let rows: Vec<TableRow> =
                rows.iter().map(|(n, k, count)| TableRow { n: *n, k: *k, count }).collect();
            println!("{}", serde_json::to_string(&rows).expect("plain data serializes"));
        }
    }
}

#[derive(Serialize)]
struct SeriesTerm<'a> {
    exponent: usize,
    coefficient: &'a str,
}

pub fn emit_series(pairs: &[(usize, String)], format: Format) {
    match format {
        Format::Csv => {
            println!("exponent,coefficient");
            for (e, c) in pairs {
                println!("{e},{c}");
            }
        }
        Format::Json => {
            let terms: Vec<SeriesTerm> = pairs
                .iter()
                .map(|(e, c)| SeriesTerm { exponent: *e, coefficient: c })
                .collect();
            println!("{}", serde_json::to_string(&terms).expect("plain data serializes"));
        }
    }
}
