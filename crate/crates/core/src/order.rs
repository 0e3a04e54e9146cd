use std::cmp::Ordering;
use std::fmt;
use std::str::FromStr;

use serde::{Deserialize, Serialize};

use crate::error::{GnsError, Result};
use crate::point::Point;

/// Monomial orders on ℕ₀^d: total, compatible with addition, with `0` as the
/// minimum.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "lowercase")]
pub enum MonomialOrder {
    #[default]
    Lex,
    /// Total degree first, ties broken lexicographically.
    Grlex,
}

impl MonomialOrder {
    pub fn cmp(self, x: &Point, y: &Point) -> Ordering {
        debug_assert_eq!(x.dim(), y.dim());
        match self {
            MonomialOrder::Lex => x.coords().cmp(y.coords()),
            MonomialOrder::Grlex => x
                .degree()
                .cmp(&y.degree())
                .then_with(|| x.coords().cmp(y.coords())),
        }
    }

    pub fn less(self, x: &Point, y: &Point) -> bool {
        self.cmp(x, y) == Ordering::Less
    }
}

/// Strict comparison `x ≺ y` under `order`.
pub fn monomial_less(order: MonomialOrder, x: &Point, y: &Point) -> Result<bool> {
    x.check_dim(y)?;
    Ok(order.less(x, y))
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            MonomialOrder::Lex => "lex",
            MonomialOrder::Grlex => "grlex",
        })
    }
}

impl FromStr for MonomialOrder {
    type Err = GnsError;

    fn from_str(s: &str) -> Result<Self> {
        match s {
            "lex" => Ok(MonomialOrder::Lex),
            "grlex" => Ok(MonomialOrder::Grlex),
            other => Err(GnsError::Parse(format!("unknown monomial order `{other}`"))),
        }
    }
}
