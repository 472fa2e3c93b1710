//! Symmetric and exterior coalgebras: basis enumeration, coproducts,
//! coassociativity checks and the cocompleteness filtration.
//!
//! Basis elements are monomials (sorted multisets of coordinate indices)
//! for the symmetric kind, and strictly increasing index sets for the
//! exterior kind. The exterior coproduct carries the shuffle sign of the
//! permutation moving the index set into the two blocks.

use crate::error::{AlgebraError, Result};
use crate::tensor::{Context, Element, GenId, GenInfo, Word};
use crate::Rat;
use itertools::Itertools;
use num_traits::{One, Zero};
use std::collections::HashMap;
use std::fmt;
use std::sync::Arc;

#[derive(Debug, Clone, Copy, PartialEq, Eq)]
pub enum CoalgebraKind {
    Symmetric,
    Exterior,
}

/// A coalgebra of the given kind on `dim` coordinates; `reduced` drops the
/// counit part (the empty basis element) and the two unit terms of the
/// coproduct.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoalgebraSpec {
    pub kind: CoalgebraKind,
    pub reduced: bool,
    pub dim: usize,
    /// Display names of the weight-1 coordinates.
    pub coordinates: Vec<String>,
}

impl CoalgebraSpec {
    pub fn symmetric(dim: usize, reduced: bool) -> Self {
        CoalgebraSpec {
            kind: CoalgebraKind::Symmetric,
            reduced,
            dim,
            coordinates: (1..=dim).map(|i| format!("x{}", i)).collect(),
        }
    }

    pub fn exterior(dim: usize, reduced: bool) -> Self {
        CoalgebraSpec {
            kind: CoalgebraKind::Exterior,
            reduced,
            dim,
            coordinates: (1..=dim).map(|i| format!("x{}", i)).collect(),
        }
    }

    pub fn with_coordinates(mut self, names: Vec<String>) -> Self {
        assert_eq!(names.len(), self.dim);
        self.coordinates = names;
        self
    }
}

/// A coalgebra basis element: sorted indices, with repeats allowed only in
/// the symmetric kind.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct BasisElt(pub Vec<u32>);

impl BasisElt {
    pub fn counit() -> Self {
        BasisElt(Vec::new())
    }

    pub fn weight(&self) -> usize {
        self.0.len()
    }

    /// Cohomological degree as a cobar letter: 0 for monomials, `1 - k` for
    /// a weight-k wedge.
    pub fn degree(&self, kind: CoalgebraKind) -> i64 {
        match kind {
            CoalgebraKind::Symmetric => 0,
            CoalgebraKind::Exterior => 1 - self.0.len() as i64,
        }
    }

    pub fn symbol(&self, spec: &CoalgebraSpec) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        match spec.kind {
            CoalgebraKind::Exterior => {
                if self.0.len() == 1 {
                    spec.coordinates[self.0[0] as usize].clone()
                } else if self.0.iter().all(|&i| i < 9) {
                    format!("xi{}", self.0.iter().map(|i| (i + 1).to_string()).join(""))
                } else {
                    format!("xi{}", self.0.iter().map(|i| (i + 1).to_string()).join("_"))
                }
            }
            CoalgebraKind::Symmetric => {
                let mut parts = Vec::new();
                let mut i = 0;
                while i < self.0.len() {
                    let mut j = i;
                    while j < self.0.len() && self.0[j] == self.0[i] {
                        j += 1;
                    }
                    let name = &spec.coordinates[self.0[i] as usize];
                    if j - i == 1 {
                        parts.push(name.clone());
                    } else {
                        parts.push(format!("{}^{}", name, j - i));
                    }
                    i = j;
                }
                parts.join("")
            }
        }
    }

    fn is_valid(&self, spec: &CoalgebraSpec) -> bool {
        if spec.reduced && self.0.is_empty() {
            return false;
        }
        if self.0.iter().any(|&i| i as usize >= spec.dim) {
            return false;
        }
        match spec.kind {
            CoalgebraKind::Symmetric => self.0.windows(2).all(|w| w[0] <= w[1]),
            CoalgebraKind::Exterior => self.0.windows(2).all(|w| w[0] < w[1]),
        }
    }
}

impl fmt::Display for BasisElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "[{}]", self.0.iter().join(","))
    }
}

/// All basis elements of weight `<= max_weight`, in weight-then-lex order.
/// The counit element is included exactly when the spec is not reduced.
pub fn enumerate_basis(spec: &CoalgebraSpec, max_weight: usize) -> Vec<BasisElt> {
    let mut out = Vec::new();
    if !spec.reduced {
        out.push(BasisElt::counit());
    }
    for w in 1..=max_weight {
        match spec.kind {
            CoalgebraKind::Symmetric => {
                for combo in (0..spec.dim as u32).combinations_with_replacement(w) {
                    out.push(BasisElt(combo));
                }
            }
            CoalgebraKind::Exterior => {
                if w <= spec.dim {
                    for combo in (0..spec.dim as u32).combinations(w) {
                        out.push(BasisElt(combo));
                    }
                }
            }
        }
    }
    out
}

/// Sign of the permutation moving the sorted set `left ∪ right` into
/// `left` followed by `right`: `(-1)^{#{(l, r) : l > r}}`.
fn shuffle_sign(left: &[u32], right: &[u32]) -> Rat {
    let inversions = left
        .iter()
        .map(|&l| right.iter().filter(|&&r| l > r).count())
        .sum::<usize>();
    if inversions % 2 == 0 {
        Rat::one()
    } else {
        -Rat::one()
    }
}

fn binomial(n: u64, k: u64) -> Rat {
    if k > n {
        return Rat::zero();
    }
    let mut out = Rat::one();
    for i in 0..k {
        out = out * crate::rat_int((n - i) as i64) / crate::rat_int((i + 1) as i64);
    }
    out
}

pub(crate) fn coproduct_terms_impl(
    spec: &CoalgebraSpec,
    b: &BasisElt,
    corrupt_sign: bool,
) -> Result<Vec<(BasisElt, BasisElt, Rat)>> {
    if !b.is_valid(spec) {
        return Err(AlgebraError::UnknownBasisElement(b.to_string()));
    }
    let mut out = Vec::new();
    match spec.kind {
        CoalgebraKind::Exterior => {
            let k = b.0.len();
            for left_size in 0..=k {
                if spec.reduced && (left_size == 0 || left_size == k) {
                    continue;
                }
                for left in b.0.iter().copied().combinations(left_size) {
                    let right: Vec<u32> =
                        b.0.iter().copied().filter(|i| !left.contains(i)).collect();
                    let mut sign = shuffle_sign(&left, &right);
                    // negative-control hook: a per-block sign error of the
                    // kind produced by mixing up the shuffle convention
                    if corrupt_sign && left.len() % 2 == 1 {
                        sign = -sign;
                    }
                    out.push((BasisElt(left), BasisElt(right), sign));
                }
            }
        }
        CoalgebraKind::Symmetric => {
            if b.0.is_empty() {
                out.push((BasisElt::counit(), BasisElt::counit(), Rat::one()));
                return Ok(out);
            }
            // distinct indices with multiplicities
            let mut support: Vec<(u32, u64)> = Vec::new();
            for &i in &b.0 {
                match support.last_mut() {
                    Some((j, m)) if *j == i => *m += 1,
                    _ => support.push((i, 1)),
                }
            }
            // choose a sub-multiset for the left factor
            let ranges: Vec<Vec<u64>> = support.iter().map(|&(_, m)| (0..=m).collect()).collect();
            for choice in ranges.into_iter().multi_cartesian_product() {
                let mut left = Vec::new();
                let mut right = Vec::new();
                let mut coeff = Rat::one();
                for (&(idx, mult), &take) in support.iter().zip(&choice) {
                    for _ in 0..take {
                        left.push(idx);
                    }
                    for _ in 0..(mult - take) {
                        right.push(idx);
                    }
                    coeff *= binomial(mult, take);
                }
                if spec.reduced && (left.is_empty() || right.is_empty()) {
                    continue;
                }
                out.push((BasisElt(left), BasisElt(right), coeff));
            }
        }
    }
    Ok(out)
}

/// Coproduct of a basis element as raw `(left, right, coefficient)` terms.
/// Reduced specs omit every term containing the counit element.
pub fn coproduct_terms(
    spec: &CoalgebraSpec,
    b: &BasisElt,
) -> Result<Vec<(BasisElt, BasisElt, Rat)>> {
    coproduct_terms_impl(spec, b, false)
}

/// Indexed basis of a coalgebra up to a weight cap, interned as a generator
/// context so that coproducts and cobar words are tensor [`Element`]s.
#[derive(Debug)]
pub struct BasisIndex {
    pub spec: CoalgebraSpec,
    pub max_weight: usize,
    pub ctx: Arc<Context>,
    pub basis: Vec<BasisElt>,
    ids: HashMap<BasisElt, GenId>,
}

impl BasisIndex {
    pub fn new(spec: CoalgebraSpec, max_weight: usize, hbar_order: usize) -> Result<Self> {
        let basis = enumerate_basis(&spec, max_weight);
        let gens: Vec<GenInfo> = basis
            .iter()
            .map(|b| GenInfo::graded(b.symbol(&spec), b.degree(spec.kind), b.weight()))
            .collect();
        let ctx = Context::new(gens, hbar_order)?;
        let ids = basis
            .iter()
            .enumerate()
            .map(|(i, b)| (b.clone(), GenId(i as u32)))
            .collect();
        Ok(BasisIndex {
            spec,
            max_weight,
            ctx,
            basis,
            ids,
        })
    }

    pub fn id(&self, b: &BasisElt) -> Result<GenId> {
        self.ids
            .get(b)
            .copied()
            .ok_or_else(|| AlgebraError::UnknownBasisElement(b.to_string()))
    }

    pub fn elt(&self, id: GenId) -> &BasisElt {
        &self.basis[id.0 as usize]
    }

    /// Coproduct of a basis element as a two-letter tensor element.
    pub fn coproduct(&self, b: &BasisElt) -> Result<Element> {
        let mut out = Element::zero(&self.ctx);
        for (l, r, c) in coproduct_terms(&self.spec, b)? {
            let word = Word(vec![self.id(&l)?, self.id(&r)?]);
            out.add_term(word, self.ctx.scalar(c));
        }
        Ok(out)
    }

    pub(crate) fn coproduct_flipped(&self, b: &BasisElt) -> Result<Element> {
        let mut out = Element::zero(&self.ctx);
        for (l, r, c) in coproduct_terms_impl(&self.spec, b, true)? {
            let word = Word(vec![self.id(&l)?, self.id(&r)?]);
            out.add_term(word, self.ctx.scalar(c));
        }
        Ok(out)
    }

    /// Apply the coproduct to one slot of every word, with no extra sign.
    fn apply_in_slot(&self, e: &Element, slot: usize, flipped: bool) -> Result<Element> {
        let mut out = Element::zero(&self.ctx);
        for (w, c) in e.terms() {
            let letter = self.elt(w.0[slot]).clone();
            let delta = if flipped {
                self.coproduct_flipped(&letter)?
            } else {
                self.coproduct(&letter)?
            };
            for (dw, dc) in delta.terms() {
                let mut letters = w.0[..slot].to_vec();
                letters.extend_from_slice(&dw.0);
                letters.extend_from_slice(&w.0[slot + 1..]);
                out.add_term(Word(letters), c.mul(dc));
            }
        }
        Ok(out)
    }
}

/// Result of a coassociativity check.
#[derive(Debug)]
pub struct CoassocReport {
    pub ok: bool,
    /// First failing basis element and the nonzero difference.
    pub counterexample: Option<(BasisElt, Element)>,
}

fn check_coassociativity_impl(
    spec: &CoalgebraSpec,
    max_weight: usize,
    flipped: bool,
) -> Result<CoassocReport> {
    let index = BasisIndex::new(spec.clone(), max_weight, 0)?;
    for b in &index.basis {
        let delta = if flipped {
            index.coproduct_flipped(b)?
        } else {
            index.coproduct(b)?
        };
        let left = index.apply_in_slot(&delta, 0, flipped)?;
        let right = index.apply_in_slot(&delta, 1, flipped)?;
        let diff = left.sub(&right)?;
        if !diff.is_zero() {
            return Ok(CoassocReport {
                ok: false,
                counterexample: Some((b.clone(), diff)),
            });
        }
    }
    Ok(CoassocReport {
        ok: true,
        counterexample: None,
    })
}

/// Checks `(Δ ⊗ id)Δ = (id ⊗ Δ)Δ` on every basis element of weight at most
/// `max_weight`.
pub fn check_coassociativity(spec: &CoalgebraSpec, max_weight: usize) -> Result<CoassocReport> {
    check_coassociativity_impl(spec, max_weight, false)
}

#[cfg(test)]
pub(crate) fn check_coassociativity_flipped(
    spec: &CoalgebraSpec,
    max_weight: usize,
) -> Result<CoassocReport> {
    check_coassociativity_impl(spec, max_weight, true)
}

/// Outcome of iterating the reduced coproduct on a basis element.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum FiltrationIndex {
    /// Smallest `n` with `Δ̄^n(b) = 0`.
    Dies(usize),
    /// Still nonzero after `n_max` iterations.
    Exceeds(usize),
}

/// Iterates the reduced coproduct `Δ̄^n = (Δ̄ ⊗ id^{n-1}) ∘ Δ̄^{n-1}` and
/// reports the first `n` at which the result vanishes.
pub fn cocompleteness_filtration(
    spec: &CoalgebraSpec,
    b: &BasisElt,
    n_max: usize,
) -> Result<FiltrationIndex> {
    if !spec.reduced {
        return Err(AlgebraError::CounitalReduction);
    }
    let index = BasisIndex::new(spec.clone(), b.weight().max(1), 0)?;
    let mut current = {
        let mut e = Element::zero(&index.ctx);
        e.add_term(Word(vec![index.id(b)?]), index.ctx.scalar_one());
        e
    };
    for n in 1..=n_max {
        current = index.apply_in_slot(&current, 0, false)?;
        if current.is_zero() {
            return Ok(FiltrationIndex::Dies(n));
        }
    }
    Ok(FiltrationIndex::Exceeds(n_max))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rat_int;

    fn word(index: &BasisIndex, letters: &[&BasisElt]) -> Word {
        Word(letters.iter().map(|b| index.id(b).unwrap()).collect())
    }

    #[test]
    fn symmetric_full_coproduct_of_x1x2() {
        let spec = CoalgebraSpec::symmetric(2, false);
        let index = BasisIndex::new(spec, 2, 0).unwrap();
        let b = BasisElt(vec![0, 1]);
        let delta = index.coproduct(&b).unwrap();
        let one = BasisElt::counit();
        let x1 = BasisElt(vec![0]);
        let x2 = BasisElt(vec![1]);
        assert_eq!(delta.num_terms(), 4);
        for pair in [
            word(&index, &[&one, &b]),
            word(&index, &[&x1, &x2]),
            word(&index, &[&x2, &x1]),
            word(&index, &[&b, &one]),
        ] {
            assert_eq!(delta.coeff(&pair), index.ctx.scalar(rat_int(1)));
        }
    }

    #[test]
    fn symmetric_reduced_coproduct_drops_unit_terms() {
        let spec = CoalgebraSpec::symmetric(2, true);
        let index = BasisIndex::new(spec, 2, 0).unwrap();
        let delta = index.coproduct(&BasisElt(vec![0, 1])).unwrap();
        let x1 = BasisElt(vec![0]);
        let x2 = BasisElt(vec![1]);
        assert_eq!(delta.num_terms(), 2);
        assert_eq!(
            delta.coeff(&word(&index, &[&x1, &x2])),
            index.ctx.scalar(rat_int(1))
        );
        assert_eq!(
            delta.coeff(&word(&index, &[&x2, &x1])),
            index.ctx.scalar(rat_int(1))
        );
    }

    #[test]
    fn symmetric_coproduct_uses_binomials_on_repeats() {
        let spec = CoalgebraSpec::symmetric(1, false);
        let index = BasisIndex::new(spec, 2, 0).unwrap();
        let delta = index.coproduct(&BasisElt(vec![0, 0])).unwrap();
        let x1 = BasisElt(vec![0]);
        assert_eq!(
            delta.coeff(&word(&index, &[&x1, &x1])),
            index.ctx.scalar(rat_int(2))
        );
    }

    #[test]
    fn exterior_reduced_coproduct_of_xi12() {
        let spec = CoalgebraSpec::exterior(2, true);
        let index = BasisIndex::new(spec, 2, 0).unwrap();
        let delta = index.coproduct(&BasisElt(vec![0, 1])).unwrap();
        let x1 = BasisElt(vec![0]);
        let x2 = BasisElt(vec![1]);
        assert_eq!(delta.num_terms(), 2);
        assert_eq!(
            delta.coeff(&word(&index, &[&x1, &x2])),
            index.ctx.scalar(rat_int(1))
        );
        assert_eq!(
            delta.coeff(&word(&index, &[&x2, &x1])),
            index.ctx.scalar(rat_int(-1))
        );
    }

    #[test]
    fn coassociativity_holds_for_all_kinds() {
        for dim in 1..=3 {
            for (kind, reduced) in [
                (CoalgebraKind::Symmetric, false),
                (CoalgebraKind::Symmetric, true),
                (CoalgebraKind::Exterior, false),
                (CoalgebraKind::Exterior, true),
            ] {
                let spec = CoalgebraSpec {
                    kind,
                    reduced,
                    dim,
                    coordinates: (1..=dim).map(|i| format!("x{}", i)).collect(),
                };
                let report = check_coassociativity(&spec, 4).unwrap();
                assert!(
                    report.ok,
                    "failed for {:?} reduced={} dim={}",
                    kind, reduced, dim
                );
            }
        }
    }

    #[test]
    fn flipped_shuffle_sign_breaks_coassociativity() {
        let spec = CoalgebraSpec::exterior(3, true);
        let report = check_coassociativity_flipped(&spec, 3).unwrap();
        assert!(!report.ok);
        let (witness, _) = report.counterexample.unwrap();
        assert_eq!(witness, BasisElt(vec![0, 1, 2]));
    }

    #[test]
    fn cocompleteness_indices() {
        let sym = CoalgebraSpec::symmetric(3, true);
        assert_eq!(
            cocompleteness_filtration(&sym, &BasisElt(vec![0, 1, 2]), 5).unwrap(),
            FiltrationIndex::Dies(3)
        );
        assert_eq!(
            cocompleteness_filtration(&sym, &BasisElt(vec![0]), 5).unwrap(),
            FiltrationIndex::Dies(1)
        );
        let ext = CoalgebraSpec::exterior(2, true);
        assert_eq!(
            cocompleteness_filtration(&ext, &BasisElt(vec![0, 1]), 5).unwrap(),
            FiltrationIndex::Dies(2)
        );
    }

    #[test]
    fn cocompleteness_rejects_counital_coalgebras() {
        let full = CoalgebraSpec::symmetric(2, false);
        assert!(cocompleteness_filtration(&full, &BasisElt(vec![0]), 3).is_err());
    }

    #[test]
    fn projection_intertwines_coproducts_but_inclusion_does_not() {
        // p: full -> reduced kills the counit element; on weight >= 1 the
        // full coproduct projects to the reduced one, and the defect of the
        // inclusion is exactly the two unit terms.
        let full = CoalgebraSpec::symmetric(2, false);
        let red = CoalgebraSpec::symmetric(2, true);
        for b in enumerate_basis(&red, 4) {
            let full_terms = coproduct_terms(&full, &b).unwrap();
            let red_terms = coproduct_terms(&red, &b).unwrap();
            let projected: Vec<_> = full_terms
                .iter()
                .filter(|(l, r, _)| l.weight() > 0 && r.weight() > 0)
                .cloned()
                .collect();
            assert_eq!(projected, red_terms);
            let dropped: Vec<_> = full_terms
                .iter()
                .filter(|(l, r, _)| l.weight() == 0 || r.weight() == 0)
                .cloned()
                .collect();
            assert_eq!(
                dropped,
                vec![
                    (BasisElt::counit(), b.clone(), Rat::one()),
                    (b.clone(), BasisElt::counit(), Rat::one()),
                ]
            );
        }
    }
}
