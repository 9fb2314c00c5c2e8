//! Reader for OEIS b-files and the triangle layouts they are compared against.
//!
//! A b-file has one `index value` pair per line; blank lines and lines
//! starting with `#` are ignored. Triangles are flattened row by row.

use num_bigint::BigInt;

use super::views::{t_e, t_o};
use crate::error::{Error, Result};
use crate::exact::{pow2, Rational};

pub fn parse_bfile(text: &str) -> Result<Vec<(usize, BigInt)>> {
    let mut out = Vec::new();
    for (lineno, line) in text.lines().enumerate() {
        let line = line.trim();
        if line.is_empty() || line.starts_with('#') {
            continue;
        }
        let mut parts = line.split_whitespace();
        let bad = || Error::Domain(format!("b-file line {}: {line:?}", lineno + 1));
        let idx = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        let val = parts.next().and_then(|s| s.parse().ok()).ok_or_else(bad)?;
        out.push((idx, val));
    }
    Ok(out)
}

fn to_int(r: Rational) -> BigInt {
    assert!(r.is_integer(), "expected an integer, got {r}");
    r.numer().clone()
}

/// Rows `0..=max_row` of the coefficients of `∏_{j=1}^{n} (x + j²)`,
/// highest power first: entry `k` is `|t_E(n+1, n+1−k)|`.
pub fn even_product_rows(max_row: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    for n in 0..=max_row {
        for k in 0..=n {
            out.push(to_int(t_e(n + 1, n + 1 - k).abs()));
        }
    }
    out
}

/// Rows `0..=max_row` of the coefficients of `∏_{j=0}^{n−1} (x + (2j+1)²)`,
/// highest power first: entry `k` is `4^k |t_O(n, n−k)|`.
pub fn odd_product_rows(max_row: usize) -> Vec<BigInt> {
    let mut out = Vec::new();
    for n in 0..=max_row {
        for k in 0..=n {
            out.push(to_int(t_o(n, n - k).abs() * pow2(2 * k)));
        }
    }
    out
}
