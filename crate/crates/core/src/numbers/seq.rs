use std::sync::Arc;

use serde::{Deserialize, Serialize};

use crate::cache::RowCache;
use crate::euler::euler_poly;
use crate::exact::{binomial, pow2, Rational};

fn bernoulli_step(n: usize, prev: &[Arc<Rational>]) -> Rational {
    if n == 0 {
        return Rational::one();
    }
    let acc: Rational = prev
        .iter()
        .enumerate()
        .map(|(k, b)| binomial(n + 1, k) * b.as_ref())
        .sum();
    -acc / Rational::from_int(n as i64 + 1)
}

static BERNOULLI: RowCache<Rational> = RowCache::new(bernoulli_step);

/// Bernoulli number `B_n` with `B_1 = −1/2`.
pub fn bernoulli(n: usize) -> Rational {
    BERNOULLI.get(n).as_ref().clone()
}

/// Genocchi number `G_n = 2(1 − 2^n) B_n`, so `G_0 = 0` and `G_1 = 1`.
pub fn genocchi(n: usize) -> Rational {
    Rational::from_int(2) * (Rational::one() - pow2(n)) * bernoulli(n)
}

/// Euler number `E_n = 2^n E_n(1/2)`.
pub fn euler_number(n: usize) -> Rational {
    euler_poly(n).poly.eval(&Rational::half()) * pow2(n)
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum SeqKind {
    Bernoulli,
    Genocchi,
    EulerNumber,
}

impl SeqKind {
    pub fn value(self, n: usize) -> Rational {
        match self {
            SeqKind::Bernoulli => bernoulli(n),
            SeqKind::Genocchi => genocchi(n),
            SeqKind::EulerNumber => euler_number(n),
        }
    }
}

/// The first `max_n + 1` terms of a number sequence.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct NumberSeq {
    pub kind: SeqKind,
    pub values: Vec<Rational>,
}

impl NumberSeq {
    pub fn new(kind: SeqKind, max_n: usize) -> Self {
        NumberSeq {
            kind,
            values: (0..=max_n).map(|n| kind.value(n)).collect(),
        }
    }

    pub fn to_csv(&self) -> String {
        let mut out = String::from("n,value\n");
        for (n, v) in self.values.iter().enumerate() {
            out.push_str(&format!("{n},{v}\n"));
        }
        out
    }
}
