#![allow(dead_code)]

use cvector_core::exchange::ExchangeMatrix;
use cvector_core::linalg::{vector, IntMatrix, Vector};
use cvector_core::roots::RootLatticeForms;

pub fn exchange(rows: &[&[i64]]) -> ExchangeMatrix {
    ExchangeMatrix::validate(IntMatrix::from_i64(rows)).unwrap()
}

pub fn forms(rows: &[&[i64]]) -> RootLatticeForms {
    RootLatticeForms::from_exchange(&exchange(rows))
}

pub fn vectors(entries: &[&[i64]]) -> Vec<Vector> {
    entries.iter().map(|e| vector(e)).collect()
}

pub fn path(n: usize) -> ExchangeMatrix {
    let mut b = IntMatrix::zeros(n, n);
    for i in 0..n.saturating_sub(1) {
        b[(i, i + 1)] = 1.into();
        b[(i + 1, i)] = (-1).into();
    }
    ExchangeMatrix::validate(b).unwrap()
}

pub const A1: &[&[i64]] = &[&[0]];
pub const A2: &[&[i64]] = &[&[0, 1], &[-1, 0]];
pub const B2: &[&[i64]] = &[&[0, 1], &[-2, 0]];
pub const C2: &[&[i64]] = &[&[0, 2], &[-1, 0]];
pub const G2: &[&[i64]] = &[&[0, 1], &[-3, 0]];
pub const A1XA1: &[&[i64]] = &[&[0, 0], &[0, 0]];
pub const A3: &[&[i64]] = &[&[0, 1, 0], &[-1, 0, 1], &[0, -1, 0]];
pub const KRONECKER3: &[&[i64]] = &[&[0, 3], &[-3, 0]];
/// B3 with the short root last.
pub const B3: &[&[i64]] = &[&[0, 1, 0], &[-1, 0, 1], &[0, -2, 0]];

/// Finite-type fixtures, including non-simply-laced ones.
pub fn finite_fixtures() -> Vec<(&'static str, ExchangeMatrix)> {
    vec![
        ("A1", exchange(A1)),
        ("A2", exchange(A2)),
        ("B2", exchange(B2)),
        ("C2", exchange(C2)),
        ("G2", exchange(G2)),
        ("A1xA1", exchange(A1XA1)),
        ("A3", exchange(A3)),
        ("B3", exchange(B3)),
        ("A4", path(4)),
        ("A5", path(5)),
    ]
}
