#![allow(dead_code)]

pub mod reference;

use fslp_core::FractionalOrder;

pub fn fo(a: f64) -> FractionalOrder {
    FractionalOrder::new(a).unwrap()
}

pub fn rel_err(got: f64, want: f64) -> f64 {
    if want == 0.0 {
        got.abs()
    } else {
        ((got - want) / want).abs()
    }
}

/// Rows of the reference eigenvalue table: α, 2N*, Ĩ_0 and Ĩ_{N*-1} as printed (6 significant digits).
pub struct TableRow {
    pub alpha: f64,
    pub count: usize,
    pub first: Option<(&'static str, &'static str)>,
    pub last: Option<(&'static str, &'static str)>,
}

const fn row(alpha: f64, count: usize, first: (&'static str, &'static str), last: (&'static str, &'static str)) -> TableRow {
    TableRow {
        alpha,
        count,
        first: Some(first),
        last: Some(last),
    }
}

pub const TABLE1: [TableRow; 18] = [
    TableRow {
        alpha: 0.78,
        count: 0,
        first: None,
        last: None,
    },
    row(0.80, 2, ("3.82549", "7.22593"), ("3.82549", "7.22593")),
    row(0.82, 2, ("3.70445", "7.04252"), ("3.70445", "7.04252")),
    row(0.84, 2, ("3.60076", "6.88842"), ("3.60076", "6.88842")),
    row(0.86, 4, ("3.51148", "6.75866"), ("10.0058", "13.253")),
    row(0.88, 4, ("3.43428", "6.64934"), ("9.86441", "13.0795")),
    row(0.90, 8, ("3.36728", "6.55734"), ("22.5076", "25.6977")),
    row(0.92, 10, ("3.309", "6.48013"), ("28.678", "31.8492")),
    row(0.94, 18, ("3.25822", "6.41567"), ("53.7774", "56.9349")),
    row(0.96, 32, ("3.21392", "6.36226"), ("97.6639", "100.812")),
    row(0.98, 84, ("3.17528", "6.31849"), ("260.918", "264.062")),
    row(0.981, 90, ("3.17348", "6.31653"), ("279.762", "282.905")),
    row(0.982, 98, ("3.1717", "6.3146"), ("304.89", "308.033")),
    row(0.983, 104, ("3.16993", "6.31268"), ("323.731", "326.873")),
    row(0.984, 114, ("3.16817", "6.31079"), ("355.141", "358.284")),
    row(0.985, 124, ("3.16642", "6.30891"), ("386.55", "389.693")),
    row(0.989, 182, ("3.15955", "6.30162"), ("568.733", "571.875")),
    row(0.9898, 200, ("3.15819", "6.3002"), ("625.275", "628.417")),
];
