//! Truncated polynomial series in the deformation parameter `h` with exact
//! rational coefficients.
//!
//! A [`Scalar`] stores `c_0 + c_1 h + ... + c_M h^M`; all arithmetic is
//! performed modulo `h^{M+1}`. Coefficients are exact `BigRational`s, never
//! floats, so rank and kernel computations downstream stay exact.

use crate::Rat;
use num_traits::{One, Zero};
use std::fmt;

#[derive(Clone, PartialEq, Eq, Hash)]
pub struct Scalar {
    /// Coefficient of `h^k` at index `k`; the length is always `order + 1`.
    coeffs: Vec<Rat>,
}

impl Scalar {
    pub fn zero(order: usize) -> Self {
        Scalar {
            coeffs: vec![Rat::zero(); order + 1],
        }
    }

    pub fn one(order: usize) -> Self {
        Scalar::constant(Rat::one(), order)
    }

    pub fn constant(value: Rat, order: usize) -> Self {
        Scalar::monomial(value, 0, order)
    }

    /// `value * h^power`, or zero if the power exceeds the truncation order.
    pub fn monomial(value: Rat, power: usize, order: usize) -> Self {
        let mut coeffs = vec![Rat::zero(); order + 1];
        if power <= order {
            coeffs[power] = value;
        }
        Scalar { coeffs }
    }

    pub fn hbar(order: usize) -> Self {
        Scalar::monomial(Rat::one(), 1, order)
    }

    /// Truncation order `M`.
    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.iter().all(|c| c.is_zero())
    }

    /// Smallest power with a nonzero coefficient, if any.
    pub fn min_power(&self) -> Option<usize> {
        self.coeffs.iter().position(|c| !c.is_zero())
    }

    fn check(&self, other: &Scalar) {
        assert_eq!(
            self.coeffs.len(),
            other.coeffs.len(),
            "scalar truncation orders must match"
        );
    }

    pub fn add(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a + b)
            .collect();
        Scalar { coeffs }
    }

    pub fn sub(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let coeffs = self
            .coeffs
            .iter()
            .zip(&other.coeffs)
            .map(|(a, b)| a - b)
            .collect();
        Scalar { coeffs }
    }

    pub fn neg(&self) -> Scalar {
        Scalar {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }

    pub fn mul(&self, other: &Scalar) -> Scalar {
        self.check(other);
        let order = self.order();
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if i + j > order {
                    break;
                }
                if !b.is_zero() {
                    coeffs[i + j] += a * b;
                }
            }
        }
        Scalar { coeffs }
    }

    pub fn scale(&self, r: &Rat) -> Scalar {
        Scalar {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiply by `h^k`, dropping everything past the truncation order.
    pub fn shift(&self, k: usize) -> Scalar {
        let order = self.order();
        let mut coeffs = vec![Rat::zero(); order + 1];
        for (i, c) in self.coeffs.iter().enumerate() {
            if i + k <= order && !c.is_zero() {
                coeffs[i + k] = c.clone();
            }
        }
        Scalar { coeffs }
    }

    /// Keep only the coefficient of `h^k`, as a constant scalar.
    pub fn layer(&self, k: usize) -> Scalar {
        Scalar::constant(self.coeff(k), self.order())
    }

    /// Drop all terms of order `>= k`.
    pub fn truncate_below(&self, k: usize) -> Scalar {
        let mut coeffs = self.coeffs.clone();
        for c in coeffs.iter_mut().skip(k) {
            *c = Rat::zero();
        }
        Scalar { coeffs }
    }
}

impl fmt::Debug for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Scalar {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut parts = Vec::new();
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            let coeff = if c.is_one() && k > 0 {
                String::new()
            } else {
                format!("{}", c)
            };
            let part = match k {
                0 => coeff,
                1 if coeff.is_empty() => "h".to_string(),
                1 => format!("{}*h", coeff),
                _ if coeff.is_empty() => format!("h^{}", k),
                _ => format!("{}*h^{}", coeff, k),
            };
            parts.push(part);
        }
        if parts.is_empty() {
            write!(f, "0")
        } else {
            write!(f, "{}", parts.join(" + "))
        }
    }
}
