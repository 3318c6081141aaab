//! Exact by-size counts of (semitotal, total) dominating sets and the
//! closed-form predictions they are compared against.

use std::fmt;

use num_bigint::{BigInt, BigUint};
use num_traits::{One, Signed, Zero};
use serde::{Deserialize, Serialize};

use crate::error::{domain, Result};

/// `coeffs[i]` is the number of valid vertex sets of size `i`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct CountPolynomial {
    pub coeffs: Vec<BigUint>,
}

impl CountPolynomial {
    pub fn new(coeffs: Vec<BigUint>) -> Self {
        CountPolynomial { coeffs }
    }

    pub fn from_u64s(coeffs: &[u64]) -> Self {
        CountPolynomial {
            coeffs: coeffs.iter().map(|&c| BigUint::from(c)).collect(),
        }
    }

    pub fn coeff(&self, i: usize) -> BigUint {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    /// Horner evaluation.
    pub fn evaluate(&self, x: &BigUint) -> BigUint {
        self.coeffs
            .iter()
            .rev()
            .fold(BigUint::zero(), |acc, c| acc * x + c)
    }

    /// Total number of counted sets.
    pub fn total(&self) -> BigUint {
        self.evaluate(&BigUint::one())
    }

    /// Smallest size with a nonzero count.
    pub fn lowest_degree(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    pub fn equals(&self, other: &CountPolynomial) -> bool {
        self.first_difference(other).is_none()
    }

    /// Least `i` where the zero-padded coefficient sequences differ.
    pub fn first_difference(&self, other: &CountPolynomial) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }

    /// Copy with every coefficient below `from` set to zero.
    pub fn truncated_below(&self, from: usize) -> CountPolynomial {
        let coeffs = self
            .coeffs
            .iter()
            .enumerate()
            .map(|(i, c)| if i < from { BigUint::zero() } else { c.clone() })
            .collect();
        CountPolynomial { coeffs }
    }

    pub fn to_signed(&self) -> SignedCounts {
        SignedCounts {
            coeffs: self.coeffs.iter().map(|c| BigInt::from(c.clone())).collect(),
        }
    }
}

impl fmt::Display for CountPolynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(&self.to_signed().to_string())
    }
}

/// Coefficient sequence that may go negative; produced by closed-form
/// formulas so that an impossible prediction stays visible.
#[derive(Debug, Clone, PartialEq, Eq, Serialize, Deserialize)]
pub struct SignedCounts {
    pub coeffs: Vec<BigInt>,
}

impl SignedCounts {
    pub fn coeff(&self, i: usize) -> BigInt {
        self.coeffs.get(i).cloned().unwrap_or_default()
    }

    pub fn has_negative(&self) -> bool {
        self.coeffs.iter().any(|c| c.is_negative())
    }

    pub fn first_difference(&self, other: &SignedCounts) -> Option<usize> {
        let len = self.coeffs.len().max(other.coeffs.len());
        (0..len).find(|&i| self.coeff(i) != other.coeff(i))
    }
}

impl fmt::Display for SignedCounts {
    /// Ascending powers, zero terms omitted: `2x + x^2`, `x^4`, `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut wrote = false;
        for (i, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let mag = c.abs();
            if wrote {
                f.write_str(if c.is_negative() { " - " } else { " + " })?;
            } else if c.is_negative() {
                f.write_str("-")?;
            }
            wrote = true;
            let unit = mag.is_one() && i > 0;
            if !unit {
                write!(f, "{mag}")?;
            }
            match i {
                0 => {}
                1 => f.write_str("x")?,
                _ => write!(f, "x^{i}")?,
            }
        }
        if !wrote {
            f.write_str("0")?;
        }
        Ok(())
    }
}

pub fn format(p: &CountPolynomial) -> String {
    p.to_string()
}

/// `C(n, k)`, zero outside `0 <= k <= n`.
pub fn binomial(n: i64, k: i64) -> BigInt {
    if n < 0 || k < 0 || k > n {
        return BigInt::zero();
    }
    let k = k.min(n - k);
    let mut acc = BigInt::one();
    for j in 0..k {
        acc = acc * BigInt::from(n - j) / BigInt::from(j + 1);
    }
    acc
}

/// Families with a published counting formula.
#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum ClosedFormFamily {
    /// `K_{1,n}`: the single set of all leaves.
    Star { n: usize },
    /// `F_n`: `2^n C(n, i-n)`.
    Friendship { n: usize },
    /// `K_{m,n}` with `2 <= m <= 3`, `m <= n`.
    BipartiteSmall { m: usize, n: usize },
    /// `K_{m,n}` with `4 <= m <= n`.
    BipartiteLarge { m: usize, n: usize },
}

impl ClosedFormFamily {
    pub fn order(&self) -> usize {
        match *self {
            ClosedFormFamily::Star { n } => n + 1,
            ClosedFormFamily::Friendship { n } => 2 * n + 1,
            ClosedFormFamily::BipartiteSmall { m, n } | ClosedFormFamily::BipartiteLarge { m, n } => m + n,
        }
    }
}

/// Predicted counts for `i = 0..=|V|` evaluated from the published formulas.
pub fn closed_form(family: ClosedFormFamily) -> Result<SignedCounts> {
    let order = family.order();
    let coeffs = match family {
        ClosedFormFamily::Star { n } => {
            if n < 1 {
                return Err(domain("star formula needs n >= 1"));
            }
            (0..=order)
                .map(|i| if i == n { BigInt::one() } else { BigInt::zero() })
                .collect()
        }
        ClosedFormFamily::Friendship { n } => {
            if n < 2 {
                return Err(domain("friendship formula needs n >= 2"));
            }
            let pow = BigInt::one() << n;
            (0..=order as i64)
                .map(|i| &pow * binomial(n as i64, i - n as i64))
                .collect()
        }
        ClosedFormFamily::BipartiteSmall { m, n } => {
            if !(2..=3).contains(&m) || m > n {
                return Err(domain("small bipartite formula needs 2 <= m <= 3 and m <= n"));
            }
            (0..=order as i64)
                .map(|i| bipartite_row(m as i64, n as i64, i, m as i64 - 1))
                .collect()
        }
        ClosedFormFamily::BipartiteLarge { m, n } => {
            if m < 4 || m > n {
                return Err(domain("large bipartite formula needs 4 <= m <= n"));
            }
            (0..=order as i64)
                .map(|i| bipartite_row(m as i64, n as i64, i, 3))
                .collect()
        }
    };
    Ok(SignedCounts { coeffs })
}

/// One row of the piecewise `K_{m,n}` count; rows are tried in the order they
/// are stated, the first match wins. `zero_upto` is the last size forced to
/// zero (`m - 1` or `3`).
fn bipartite_row(m: i64, n: i64, i: i64, zero_upto: i64) -> BigInt {
    let c = binomial;
    if i <= zero_upto {
        BigInt::zero()
    } else if i == m {
        c(m + n, m) - c(n, m) - m * c(n, m - 1)
    } else if i != n {
        c(m + n, i) - c(n, i) - m * c(n, i - 1) - n * c(m, i - 1)
    } else {
        c(m + n, n) - m * n - n * c(m, n - 1)
    }
}
