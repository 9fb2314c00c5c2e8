use serde::{Deserialize, Serialize};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum Status {
    Pass,
    Fail,
}

/// Smallest failing order with both sides rendered.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct Witness {
    pub n: usize,
    /// Secondary index or sub-identity, empty when not applicable.
    pub detail: String,
    pub lhs: String,
    pub rhs: String,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdentityReport {
    pub identity_id: String,
    /// Inclusive range of orders checked.
    pub n_range: (usize, usize),
    pub status: Status,
    pub first_failure: Option<Witness>,
}

impl IdentityReport {
    pub fn passed(&self) -> bool {
        self.status == Status::Pass
    }

    /// Runs `case(n)` for `n = 0..=nmax`, stopping at the first failure.
    pub(crate) fn scan(
        id: &str,
        nmax: usize,
        mut case: impl FnMut(usize) -> Option<Witness>,
    ) -> Self {
        let first_failure = (0..=nmax).find_map(&mut case);
        IdentityReport {
            identity_id: id.to_string(),
            n_range: (0, nmax),
            status: if first_failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_failure,
        }
    }

    /// Combines sub-reports; the witness with the smallest `n` wins and its
    /// detail is prefixed with the failing sub-identity.
    pub fn merge(id: &str, parts: Vec<IdentityReport>) -> Self {
        let lo = parts.iter().map(|p| p.n_range.0).min().unwrap_or(0);
        let hi = parts.iter().map(|p| p.n_range.1).max().unwrap_or(0);
        let first_failure = parts
            .into_iter()
            .filter_map(|p| {
                p.first_failure.map(|mut w| {
                    w.detail = if w.detail.is_empty() {
                        p.identity_id
                    } else {
                        format!("{}: {}", p.identity_id, w.detail)
                    };
                    w
                })
            })
            .min_by_key(|w| w.n);
        IdentityReport {
            identity_id: id.to_string(),
            n_range: (lo, hi),
            status: if first_failure.is_some() {
                Status::Fail
            } else {
                Status::Pass
            },
            first_failure,
        }
    }
}

/// `Some(witness)` when `lhs != rhs`.
pub(crate) fn compare<T: PartialEq + std::fmt::Display>(
    n: usize,
    detail: impl Into<String>,
    lhs: &T,
    rhs: &T,
) -> Option<Witness> {
    (lhs != rhs).then(|| Witness {
        n,
        detail: detail.into(),
        lhs: lhs.to_string(),
        rhs: rhs.to_string(),
    })
}

pub(crate) fn broken(n: usize, detail: impl Into<String>, why: impl std::fmt::Display) -> Witness {
    Witness {
        n,
        detail: detail.into(),
        lhs: why.to_string(),
        rhs: String::new(),
    }
}
