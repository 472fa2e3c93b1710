//! Polynomial algebras truncated at a total-degree bound, with explicit
//! overflow accounting.
//!
//! The basis is every monomial of total degree up to the bound, including
//! the unit. Products whose degree exceeds the bound are never dropped
//! silently; they surface as [`AlgebraError::DegreeOverflow`].

use crate::error::{AlgebraError, Result};
use crate::tensor::{Context, GenId, Monomial};
use crate::Rat;
use itertools::Itertools;
use num_traits::Zero;
use std::collections::{BTreeMap, HashMap};
use std::sync::Arc;

/// An element of the truncated algebra: basis index to coefficient.
pub type AlgElt = BTreeMap<usize, Rat>;

pub fn elt_add_scaled(target: &mut AlgElt, source: &AlgElt, r: &Rat) {
    for (i, c) in source {
        let entry = target.entry(*i).or_insert_with(Rat::zero);
        *entry += c * r;
        if entry.is_zero() {
            target.remove(i);
        }
    }
}

pub fn elt_scale(v: &AlgElt, r: &Rat) -> AlgElt {
    if r.is_zero() {
        return AlgElt::new();
    }
    v.iter().map(|(i, c)| (*i, c * r)).collect()
}

/// A commutative polynomial algebra on `dim` variables with basis all
/// monomials of degree `<= degree_bound`.
#[derive(Debug)]
pub struct TruncatedAlgebra {
    pub ctx: Arc<Context>,
    pub degree_bound: usize,
    pub basis: Vec<Monomial>,
    index: HashMap<Monomial, usize>,
    /// Product overrides keyed by basis-index pairs; used to build the
    /// corrupted-product negative controls.
    overrides: BTreeMap<(usize, usize), AlgElt>,
}

impl TruncatedAlgebra {
    pub fn new(dim: usize, degree_bound: usize, hbar_order: usize) -> Self {
        let ctx = Context::coordinates(dim, hbar_order);
        let mut basis = vec![Monomial::unit()];
        for d in 1..=degree_bound {
            for combo in (0..dim as u32).map(GenId).combinations_with_replacement(d) {
                basis.push(Monomial::new(combo));
            }
        }
        let index = basis
            .iter()
            .enumerate()
            .map(|(i, m)| (m.clone(), i))
            .collect();
        TruncatedAlgebra {
            ctx,
            degree_bound,
            basis,
            index,
            overrides: BTreeMap::new(),
        }
    }

    pub fn dim(&self) -> usize {
        self.ctx.len()
    }

    pub fn basis_len(&self) -> usize {
        self.basis.len()
    }

    pub fn unit_index(&self) -> usize {
        0
    }

    pub fn monomial_index(&self, m: &Monomial) -> Option<usize> {
        self.index.get(m).copied()
    }

    pub fn monomial(&self, i: usize) -> &Monomial {
        &self.basis[i]
    }

    pub fn degree(&self, i: usize) -> usize {
        self.basis[i].degree()
    }

    pub fn display(&self, e: &AlgElt) -> String {
        if e.is_empty() {
            return "0".to_string();
        }
        e.iter()
            .map(|(i, c)| format!("({})*{}", c, self.basis[*i].display(&self.ctx)))
            .join(" + ")
    }

    /// Replace the product of two basis monomials; the negative-control
    /// hook for associativity tests.
    pub fn override_product(&mut self, i: usize, j: usize, value: AlgElt) {
        self.overrides.insert((i, j), value);
    }

    /// Product of two basis monomials.
    pub fn product(&self, i: usize, j: usize) -> Result<AlgElt> {
        if let Some(v) = self.overrides.get(&(i, j)) {
            return Ok(v.clone());
        }
        let m = self.basis[i].mul(&self.basis[j]);
        match self.monomial_index(&m) {
            Some(k) => {
                let mut out = AlgElt::new();
                out.insert(k, Rat::from_integer(1.into()));
                Ok(out)
            }
            None => Err(AlgebraError::DegreeOverflow(format!(
                "{} * {}",
                self.basis[i].display(&self.ctx),
                self.basis[j].display(&self.ctx)
            ))),
        }
    }

    /// Bilinear product of algebra elements.
    pub fn mul(&self, a: &AlgElt, b: &AlgElt) -> Result<AlgElt> {
        let mut out = AlgElt::new();
        for (i, ca) in a {
            for (j, cb) in b {
                let prod = self.product(*i, *j)?;
                elt_add_scaled(&mut out, &prod, &(ca * cb));
            }
        }
        Ok(out)
    }

    pub fn unit(&self) -> AlgElt {
        let mut e = AlgElt::new();
        e.insert(0, Rat::from_integer(1.into()));
        e
    }

    pub fn basis_elt(&self, i: usize) -> AlgElt {
        let mut e = AlgElt::new();
        e.insert(i, Rat::from_integer(1.into()));
        e
    }

    /// Whether the stored product table is associative on every triple of
    /// basis elements whose total degree stays within the bound; returns the
    /// first failing triple otherwise.
    pub fn associativity_witness(&self) -> Option<(usize, usize, usize)> {
        for i in 0..self.basis_len() {
            for j in 0..self.basis_len() {
                for k in 0..self.basis_len() {
                    if self.degree(i) + self.degree(j) + self.degree(k) > self.degree_bound {
                        continue;
                    }
                    let ab_c = self
                        .mul(&self.product(i, j).unwrap(), &self.basis_elt(k))
                        .unwrap();
                    let a_bc = self
                        .mul(&self.basis_elt(i), &self.product(j, k).unwrap())
                        .unwrap();
                    if ab_c != a_bc {
                        return Some((i, j, k));
                    }
                }
            }
        }
        None
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    #[test]
    fn basis_counts_match_binomials() {
        let alg = TruncatedAlgebra::new(2, 3, 0);
        // 1 + 2 + 3 + 4 monomials of degrees 0..3
        assert_eq!(alg.basis_len(), 10);
    }

    #[test]
    fn product_overflow_is_an_error() {
        let alg = TruncatedAlgebra::new(2, 2, 0);
        let x1 = alg
            .monomial_index(&Monomial::new(vec![GenId(0)]))
            .unwrap();
        let sq = alg
            .monomial_index(&Monomial::new(vec![GenId(0), GenId(0)]))
            .unwrap();
        assert!(alg.product(x1, x1).is_ok());
        assert!(alg.product(x1, sq).is_err());
    }

    #[test]
    fn corrupted_product_breaks_associativity() {
        let mut alg = TruncatedAlgebra::new(2, 3, 0);
        assert!(alg.associativity_witness().is_none());
        let x1 = alg.monomial_index(&Monomial::new(vec![GenId(0)])).unwrap();
        let x2 = alg.monomial_index(&Monomial::new(vec![GenId(1)])).unwrap();
        let mut bad = AlgElt::new();
        bad.insert(alg.unit_index(), rat_int(1));
        alg.override_product(x1, x2, bad);
        assert!(alg.associativity_witness().is_some());
    }
}
