use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cache::RowCache;
use crate::error::{Error, Result};
use crate::exact::{binomial, factorial, Rational};

type Row = Vec<Rational>;

fn get_or_zero(row: &[Rational], k: isize) -> Rational {
    if k < 0 {
        return Rational::zero();
    }
    row.get(k as usize).cloned().unwrap_or_default()
}

// t(n,ν) = t(n−2,ν−2) − ¼(n−2)² t(n−2,ν), t(n,n) = 1
fn first_kind_step(n: usize, prev: &[Arc<Row>]) -> Row {
    let mut row = vec![Rational::zero(); n + 1];
    row[n] = Rational::one();
    if n < 2 {
        return row;
    }
    let back = &prev[n - 2];
    let w = Rational::new(((n - 2) * (n - 2)) as i64, 4);
    for v in (n % 2..n).step_by(2) {
        row[v] = get_or_zero(back, v as isize - 2) - &w * get_or_zero(back, v as isize);
    }
    row
}

// T(n,ν) = T(n−2,ν−2) + ¼ν² T(n−2,ν), T(n,n) = 1
fn second_kind_step(n: usize, prev: &[Arc<Row>]) -> Row {
    let mut row = vec![Rational::zero(); n + 1];
    row[n] = Rational::one();
    if n < 2 {
        return row;
    }
    let back = &prev[n - 2];
    for v in (n % 2..n).step_by(2) {
        let w = Rational::new((v * v) as i64, 4);
        row[v] = get_or_zero(back, v as isize - 2) + w * get_or_zero(back, v as isize);
    }
    row
}

fn stirling2_step(n: usize, prev: &[Arc<Row>]) -> Row {
    let mut row = vec![Rational::zero(); n + 1];
    row[n] = Rational::one();
    if n == 0 {
        return row;
    }
    let back = &prev[n - 1];
    for k in 1..n {
        row[k] = Rational::from_int(k as i64) * &back[k] + &back[k - 1];
    }
    row
}

static FIRST: RowCache<Row> = RowCache::new(first_kind_step);
static SECOND: RowCache<Row> = RowCache::new(second_kind_step);
static STIRLING2: RowCache<Row> = RowCache::new(stirling2_step);

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum TriangleKind {
    /// Central factorial numbers of the first kind `t(n,ν)`.
    #[serde(rename = "t")]
    CentralFirst,
    /// Central factorial numbers of the second kind `T(n,ν)`.
    #[serde(rename = "T")]
    CentralSecond,
    #[serde(rename = "stirling2")]
    Stirling2,
}

impl TriangleKind {
    fn cache(self) -> &'static RowCache<Row> {
        match self {
            TriangleKind::CentralFirst => &FIRST,
            TriangleKind::CentralSecond => &SECOND,
            TriangleKind::Stirling2 => &STIRLING2,
        }
    }

    fn name(self) -> &'static str {
        match self {
            TriangleKind::CentralFirst => "t",
            TriangleKind::CentralSecond => "T",
            TriangleKind::Stirling2 => "stirling2",
        }
    }

    /// Row `n` from the shared cache.
    pub fn row(self, n: usize) -> Arc<Row> {
        self.cache().get(n)
    }

    /// Entry `(n, k)`; fails outside `0 ≤ k ≤ n`.
    pub fn entry(self, n: usize, k: usize) -> Result<Rational> {
        if k > n {
            return Err(Error::Index {
                what: self.name(),
                n,
                k,
            });
        }
        Ok(self.row(n)[k].clone())
    }

    /// Entry `(n, k)`, extended by zero outside the triangle.
    pub fn value(self, n: isize, k: isize) -> Rational {
        if n < 0 || k < 0 || k > n {
            return Rational::zero();
        }
        self.row(n as usize)[k as usize].clone()
    }
}

pub fn central_t(n: usize, v: usize) -> Result<Rational> {
    TriangleKind::CentralFirst.entry(n, v)
}

#[allow(non_snake_case)]
pub fn central_T(n: usize, v: usize) -> Result<Rational> {
    TriangleKind::CentralSecond.entry(n, v)
}

pub fn stirling2(n: usize, k: usize) -> Result<Rational> {
    TriangleKind::Stirling2.entry(n, k)
}

/// `T(n,ν) = (1/ν!) Σ_μ C(ν,μ) (−1)^μ (ν/2 − μ)^n`.
#[allow(non_snake_case)]
pub fn central_T_closed_form(n: usize, v: usize) -> Result<Rational> {
    if v > n {
        return Err(Error::Index {
            what: "T closed form",
            n,
            k: v,
        });
    }
    let sum: Rational = (0..=v)
        .map(|mu| {
            let base = Rational::new(v as i64 - 2 * mu as i64, 2);
            binomial(v, mu) * Rational::sign_pow(mu) * base.pow(n as u32)
        })
        .sum();
    Ok(sum / factorial(v))
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
pub enum CentralFamily {
    #[serde(rename = "t")]
    First,
    #[serde(rename = "T")]
    Second,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Parity {
    Even,
    Odd,
}

/// `f_E(n,ν) = f(2n,2ν)` and `f_O(n,ν) = f(2n+1,2ν+1)`.
pub fn central_even_odd_view(
    family: CentralFamily,
    parity: Parity,
    n: usize,
    v: usize,
) -> Result<Rational> {
    let kind = match family {
        CentralFamily::First => TriangleKind::CentralFirst,
        CentralFamily::Second => TriangleKind::CentralSecond,
    };
    if v > n {
        return Err(Error::Index {
            what: kind.name(),
            n,
            k: v,
        });
    }
    match parity {
        Parity::Even => kind.entry(2 * n, 2 * v),
        Parity::Odd => kind.entry(2 * n + 1, 2 * v + 1),
    }
}

/// Zero-extended even/odd views, convenient inside index sums.
pub mod views {
    use super::TriangleKind::{CentralFirst, CentralSecond};
    use crate::exact::Rational;

    fn i(n: usize) -> isize {
        n as isize
    }

    pub fn t_e(n: usize, v: usize) -> Rational {
        CentralFirst.value(2 * i(n), 2 * i(v))
    }

    pub fn t_o(n: usize, v: usize) -> Rational {
        CentralFirst.value(2 * i(n) + 1, 2 * i(v) + 1)
    }

    #[allow(non_snake_case)]
    pub fn T_e(n: usize, v: usize) -> Rational {
        CentralSecond.value(2 * i(n), 2 * i(v))
    }

    #[allow(non_snake_case)]
    pub fn T_o(n: usize, v: usize) -> Rational {
        CentralSecond.value(2 * i(n) + 1, 2 * i(v) + 1)
    }
}

/// A materialized lower-triangular table `0 ≤ k ≤ n ≤ max_n`.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Triangle {
    pub kind: TriangleKind,
    pub max_n: usize,
    pub entries: Vec<Vec<Rational>>,
}

impl Triangle {
    pub fn build(kind: TriangleKind, max_n: usize) -> Self {
        let entries = (0..=max_n).map(|n| kind.row(n).as_ref().clone()).collect();
        Triangle {
            kind,
            max_n,
            entries,
        }
    }

    pub fn get(&self, n: usize, k: usize) -> Result<&Rational> {
        self.entries
            .get(n)
            .and_then(|row| row.get(k))
            .ok_or(Error::Index {
                what: self.kind.name(),
                n,
                k,
            })
    }

    /// One line per row, entries `ν = 0..=n` separated by commas.
    pub fn to_csv(&self) -> String {
        let mut out = String::new();
        for row in &self.entries {
            let line: Vec<String> = row.iter().map(|r| r.to_string()).collect();
            out.push_str(&line.join(","));
            out.push('\n');
        }
        out
    }

    /// JSON array of rows, each an array of `"p/q"` strings.
    pub fn to_json(&self) -> String {
        serde_json::to_string(&self.entries).expect("triangle serializes")
    }
}
