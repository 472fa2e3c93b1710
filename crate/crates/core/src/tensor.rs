//! Free graded tensor algebras over exact h-truncated scalars.
//!
//! Generators are interned in a [`Context`]; a [`Word`] is an ordered
//! sequence of generator ids, an [`Element`] a finite linear combination of
//! words with [`Scalar`] coefficients. Term maps are kept in canonical
//! (BTreeMap) order, so equality of elements is syntactic.

use crate::error::{AlgebraError, Result};
use crate::scalar::Scalar;
use crate::Rat;
use itertools::Itertools;
use num_traits::One;
use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

/// One generator of a free algebra: a display symbol, a cohomological
/// degree, and a weight (the number of underlying letters; plain variables
/// have weight 1, a wedge of k coordinates has weight k).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct GenInfo {
    pub symbol: String,
    pub degree: i64,
    pub weight: usize,
}

impl GenInfo {
    pub fn variable(symbol: impl Into<String>) -> Self {
        GenInfo {
            symbol: symbol.into(),
            degree: 0,
            weight: 1,
        }
    }

    pub fn graded(symbol: impl Into<String>, degree: i64, weight: usize) -> Self {
        GenInfo {
            symbol: symbol.into(),
            degree,
            weight,
        }
    }
}

/// Index of a generator within its context.
#[derive(Debug, Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct GenId(pub u32);

/// Shared generator context. All elements partaking in one computation must
/// reference the same context and the same h truncation order.
#[derive(Debug, PartialEq, Eq)]
pub struct Context {
    gens: Vec<GenInfo>,
    hbar_order: usize,
}

impl Context {
    pub fn new(gens: Vec<GenInfo>, hbar_order: usize) -> Result<Arc<Self>> {
        let mut seen = std::collections::HashSet::new();
        for g in &gens {
            if !seen.insert(g.symbol.clone()) {
                return Err(AlgebraError::DuplicateSymbol(g.symbol.clone()));
            }
        }
        Ok(Arc::new(Context { gens, hbar_order }))
    }

    /// Context of degree-0 variables, one per name.
    pub fn polynomial(names: &[&str], hbar_order: usize) -> Result<Arc<Self>> {
        Context::new(names.iter().map(|n| GenInfo::variable(*n)).collect(), hbar_order)
    }

    /// Context `x1..xn` of degree-0 variables.
    pub fn coordinates(dim: usize, hbar_order: usize) -> Arc<Self> {
        let gens = (1..=dim).map(|i| GenInfo::variable(format!("x{}", i))).collect();
        Context::new(gens, hbar_order).expect("generated symbols are unique")
    }

    pub fn len(&self) -> usize {
        self.gens.len()
    }

    pub fn is_empty(&self) -> bool {
        self.gens.is_empty()
    }

    pub fn hbar_order(&self) -> usize {
        self.hbar_order
    }

    pub fn info(&self, id: GenId) -> &GenInfo {
        &self.gens[id.0 as usize]
    }

    pub fn ids(&self) -> impl Iterator<Item = GenId> {
        (0..self.gens.len() as u32).map(GenId)
    }

    pub fn find(&self, symbol: &str) -> Option<GenId> {
        self.gens
            .iter()
            .position(|g| g.symbol == symbol)
            .map(|i| GenId(i as u32))
    }

    pub fn scalar_one(&self) -> Scalar {
        Scalar::one(self.hbar_order)
    }

    pub fn scalar(&self, r: Rat) -> Scalar {
        Scalar::constant(r, self.hbar_order)
    }

    pub fn hbar(&self) -> Scalar {
        Scalar::hbar(self.hbar_order)
    }

    fn same_as(&self, other: &Context) -> bool {
        std::ptr::eq(self, other) || self == other
    }
}

/// An ordered sequence of generators; the empty word is the unit.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Word(pub Vec<GenId>);

impl Word {
    pub fn unit() -> Self {
        Word(Vec::new())
    }

    pub fn single(id: GenId) -> Self {
        Word(vec![id])
    }

    pub fn len(&self) -> usize {
        self.0.len()
    }

    pub fn is_empty(&self) -> bool {
        self.0.is_empty()
    }

    pub fn degree(&self, ctx: &Context) -> i64 {
        self.0.iter().map(|&g| ctx.info(g).degree).sum()
    }

    pub fn weight(&self, ctx: &Context) -> usize {
        self.0.iter().map(|&g| ctx.info(g).weight).sum()
    }

    pub fn concat(&self, other: &Word) -> Word {
        let mut letters = self.0.clone();
        letters.extend_from_slice(&other.0);
        Word(letters)
    }

    pub fn display(&self, ctx: &Context) -> String {
        if self.0.is_empty() {
            "1".to_string()
        } else {
            self.0
                .iter()
                .map(|&g| ctx.info(g).symbol.clone())
                .join("*")
        }
    }
}

/// Finite linear combination of words with scalar coefficients. No zero
/// coefficients are stored.
#[derive(Clone, PartialEq, Eq)]
pub struct Element {
    ctx: Arc<Context>,
    terms: BTreeMap<Word, Scalar>,
}

impl Element {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Element {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn unit(ctx: &Arc<Context>) -> Self {
        Element::from_word(ctx, Word::unit())
    }

    pub fn from_word(ctx: &Arc<Context>, word: Word) -> Self {
        let mut e = Element::zero(ctx);
        e.add_term(word, ctx.scalar_one());
        e
    }

    pub fn generator(ctx: &Arc<Context>, id: GenId) -> Self {
        Element::from_word(ctx, Word::single(id))
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Word, &Scalar)> {
        self.terms.iter()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn coeff(&self, word: &Word) -> Scalar {
        self.terms
            .get(word)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ctx.hbar_order()))
    }

    /// Adds `coeff * word` in place, dropping the term if it cancels.
    pub fn add_term(&mut self, word: Word, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(word) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    fn check(&self, other: &Element) -> Result<()> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(AlgebraError::ContextMismatch);
        }
        if self.ctx.hbar_order() != other.ctx.hbar_order() {
            return Err(AlgebraError::TruncationMismatch(
                self.ctx.hbar_order(),
                other.ctx.hbar_order(),
            ));
        }
        Ok(())
    }

    pub fn add(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = self.clone();
        for (w, c) in &other.terms {
            out.add_term(w.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Element) -> Result<Element> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Element {
        Element {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(w, c)| (w.clone(), c.neg())).collect(),
        }
    }

    pub fn scale(&self, s: &Scalar) -> Element {
        let mut out = Element::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.mul(s));
        }
        out
    }

    pub fn scale_rat(&self, r: &Rat) -> Element {
        let mut out = Element::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.scale(r));
        }
        out
    }

    /// Bilinear concatenation product; the unit word is neutral.
    pub fn mul(&self, other: &Element) -> Result<Element> {
        self.check(other)?;
        let mut out = Element::zero(&self.ctx);
        for (wa, ca) in &self.terms {
            for (wb, cb) in &other.terms {
                out.add_term(wa.concat(wb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    /// Smallest h power appearing in any coefficient.
    pub fn min_hbar_order(&self) -> Option<usize> {
        self.terms.values().filter_map(|c| c.min_power()).min()
    }

    /// The h^k coefficient layer as an element with constant scalars.
    pub fn layer(&self, k: usize) -> Element {
        let mut out = Element::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.layer(k));
        }
        out
    }

    /// Multiply by `h^k` mod the truncation.
    pub fn shift_hbar(&self, k: usize) -> Element {
        let mut out = Element::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(w.clone(), c.shift(k));
        }
        out
    }

    pub fn map_words(&self, mut f: impl FnMut(&Word) -> Word) -> Element {
        let mut out = Element::zero(&self.ctx);
        for (w, c) in &self.terms {
            out.add_term(f(w), c.clone());
        }
        out
    }

    /// Checks that every term is homogeneous of the same degree; returns it.
    pub fn homogeneous_degree(&self) -> Option<i64> {
        let mut degs = self.terms.keys().map(|w| w.degree(&self.ctx));
        let first = degs.next()?;
        if degs.all(|d| d == first) {
            Some(first)
        } else {
            None
        }
    }
}

impl fmt::Debug for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Element {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(w, c)| format!("({})*{}", c, w.display(&self.ctx)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Koszul sign of a reordering. `perm[t] = s` means the item originally at
/// position `s` lands at position `t`; the sign is the product of
/// `(-1)^{p q}` over every pair of items that cross, with `p`, `q` their
/// degrees.
pub fn koszul_sign(perm: &[usize], degrees: &[i64]) -> Result<i64> {
    if perm.len() != degrees.len() {
        return Err(AlgebraError::InvalidPermutation(perm.to_vec()));
    }
    let mut seen = vec![false; perm.len()];
    for &p in perm {
        if p >= perm.len() || seen[p] {
            return Err(AlgebraError::InvalidPermutation(perm.to_vec()));
        }
        seen[p] = true;
    }
    let mut parity = 0i64;
    for t1 in 0..perm.len() {
        for t2 in (t1 + 1)..perm.len() {
            if perm[t1] > perm[t2] {
                parity += degrees[perm[t1]] * degrees[perm[t2]];
            }
        }
    }
    Ok(if parity.rem_euclid(2) == 0 { 1 } else { -1 })
}

/// A commutative monomial: a sorted multiset of degree-0 generators.
#[derive(Debug, Clone, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct Monomial(pub Vec<GenId>);

impl Monomial {
    pub fn unit() -> Self {
        Monomial(Vec::new())
    }

    pub fn new(mut ids: Vec<GenId>) -> Self {
        ids.sort();
        Monomial(ids)
    }

    pub fn degree(&self) -> usize {
        self.0.len()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        let mut ids = self.0.clone();
        ids.extend_from_slice(&other.0);
        Monomial::new(ids)
    }

    pub fn display(&self, ctx: &Context) -> String {
        if self.0.is_empty() {
            return "1".to_string();
        }
        let mut parts = Vec::new();
        let mut i = 0;
        while i < self.0.len() {
            let mut j = i;
            while j < self.0.len() && self.0[j] == self.0[i] {
                j += 1;
            }
            let sym = &ctx.info(self.0[i]).symbol;
            if j - i == 1 {
                parts.push(sym.clone());
            } else {
                parts.push(format!("{}^{}", sym, j - i));
            }
            i = j;
        }
        parts.join("*")
    }
}

/// A commutative polynomial with scalar coefficients.
#[derive(Clone, PartialEq, Eq)]
pub struct Poly {
    ctx: Arc<Context>,
    terms: BTreeMap<Monomial, Scalar>,
}

impl Poly {
    pub fn zero(ctx: &Arc<Context>) -> Self {
        Poly {
            ctx: ctx.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn from_monomial(ctx: &Arc<Context>, m: Monomial) -> Self {
        let mut p = Poly::zero(ctx);
        p.add_term(m, ctx.scalar_one());
        p
    }

    pub fn context(&self) -> &Arc<Context> {
        &self.ctx
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Scalar)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Scalar {
        self.terms
            .get(m)
            .cloned()
            .unwrap_or_else(|| Scalar::zero(self.ctx.hbar_order()))
    }

    pub fn add_term(&mut self, m: Monomial, coeff: Scalar) {
        if coeff.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(coeff);
            }
            Entry::Occupied(mut o) => {
                let sum = o.get().add(&coeff);
                if sum.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = sum;
                }
            }
        }
    }

    pub fn add(&self, other: &Poly) -> Result<Poly> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(AlgebraError::ContextMismatch);
        }
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn sub(&self, other: &Poly) -> Result<Poly> {
        self.add(&other.neg())
    }

    pub fn neg(&self) -> Poly {
        Poly {
            ctx: self.ctx.clone(),
            terms: self.terms.iter().map(|(m, c)| (m.clone(), c.neg())).collect(),
        }
    }

    pub fn mul(&self, other: &Poly) -> Result<Poly> {
        if !self.ctx.same_as(&other.ctx) {
            return Err(AlgebraError::ContextMismatch);
        }
        let mut out = Poly::zero(&self.ctx);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca.mul(cb));
            }
        }
        Ok(out)
    }

    pub fn scale(&self, s: &Scalar) -> Poly {
        let mut out = Poly::zero(&self.ctx);
        for (m, c) in &self.terms {
            out.add_term(m.clone(), c.mul(s));
        }
        out
    }
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl fmt::Display for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("({})*{}", c, m.display(&self.ctx)))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

/// Full symmetrization of a commutative monomial into the tensor algebra,
/// normalized by `1/k!` so that [`abelianize`] is a left inverse.
pub fn sym(ctx: &Arc<Context>, monomial: &Monomial) -> Result<Element> {
    for &g in &monomial.0 {
        let info = ctx.info(g);
        if info.degree != 0 {
            return Err(AlgebraError::NonzeroDegree(info.symbol.clone(), info.degree));
        }
    }
    let k = monomial.0.len();
    if k == 0 {
        return Ok(Element::unit(ctx));
    }
    let factorial: Rat = (1..=k as i64).map(crate::rat_int).product();
    let inv = Rat::one() / factorial;
    let mut out = Element::zero(ctx);
    let positions: Vec<usize> = (0..k).collect();
    for perm in positions.iter().permutations(k) {
        let word = Word(perm.into_iter().map(|&p| monomial.0[p]).collect());
        out.add_term(word, ctx.scalar(inv.clone()));
    }
    Ok(out)
}

/// Symmetrization of a polynomial, term by term.
pub fn sym_poly(p: &Poly) -> Result<Element> {
    let mut out = Element::zero(p.context());
    for (m, c) in p.terms() {
        out = out.add(&sym(p.context(), m)?.scale(c))?;
    }
    Ok(out)
}

/// Projection of the free algebra onto the commutative polynomial ring:
/// replaces the tensor product by the commutative product.
pub fn abelianize(e: &Element) -> Result<Poly> {
    let ctx = e.context();
    let mut out = Poly::zero(ctx);
    for (w, c) in e.terms() {
        for &g in &w.0 {
            let info = ctx.info(g);
            if info.degree != 0 {
                return Err(AlgebraError::NonzeroDegree(info.symbol.clone(), info.degree));
            }
        }
        out.add_term(Monomial::new(w.0.clone()), c.clone());
    }
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::{rat, rat_int};
    use proptest::prelude::*;

    fn ctx2() -> Arc<Context> {
        Context::coordinates(2, 3)
    }

    #[test]
    fn concatenation_and_unit() {
        let ctx = ctx2();
        let x1 = Element::generator(&ctx, GenId(0));
        let x2 = Element::generator(&ctx, GenId(1));
        let prod = x1.mul(&x2).unwrap();
        assert_eq!(prod.num_terms(), 1);
        assert_eq!(prod.coeff(&Word(vec![GenId(0), GenId(1)])), ctx.scalar_one());
        let unit = Element::unit(&ctx);
        assert_eq!(unit.mul(&prod).unwrap(), prod);
        assert_eq!(prod.mul(&unit).unwrap(), prod);
    }

    #[test]
    fn hbar_truncation_in_products() {
        let ctx = ctx2();
        let m = ctx.hbar_order();
        let a = Element::generator(&ctx, GenId(0)).scale(&Scalar::hbar(m));
        let b = Element::generator(&ctx, GenId(1)).scale(&Scalar::monomial(rat_int(1), m, m));
        assert!(a.mul(&b).unwrap().is_zero());
    }

    #[test]
    fn koszul_sign_examples() {
        // swapping two odd items
        assert_eq!(koszul_sign(&[1, 0], &[-1, -1]).unwrap(), -1);
        // moving an even item past an odd one
        assert_eq!(koszul_sign(&[1, 0], &[0, -1]).unwrap(), 1);
        // 3-cycle on three odd items: two transpositions
        assert_eq!(koszul_sign(&[2, 0, 1], &[-1, -1, -1]).unwrap(), 1);
    }

    #[test]
    fn koszul_sign_rejects_non_permutations() {
        assert!(koszul_sign(&[0, 0], &[1, 1]).is_err());
        assert!(koszul_sign(&[0, 2], &[1, 1]).is_err());
    }

    #[test]
    fn sym_examples() {
        let ctx = ctx2();
        let x1 = GenId(0);
        let x2 = GenId(1);

        let sq = sym(&ctx, &Monomial::new(vec![x1, x1])).unwrap();
        assert_eq!(sq.num_terms(), 1);
        assert_eq!(sq.coeff(&Word(vec![x1, x1])), ctx.scalar_one());

        let mixed = sym(&ctx, &Monomial::new(vec![x1, x2])).unwrap();
        assert_eq!(mixed.num_terms(), 2);
        assert_eq!(mixed.coeff(&Word(vec![x1, x2])), ctx.scalar(rat(1, 2)));
        assert_eq!(mixed.coeff(&Word(vec![x2, x1])), ctx.scalar(rat(1, 2)));

        let ctx3 = Context::coordinates(3, 3);
        let cube = sym(
            &ctx3,
            &Monomial::new(vec![GenId(0), GenId(1), GenId(2)]),
        )
        .unwrap();
        assert_eq!(cube.num_terms(), 6);
        for (_, c) in cube.terms() {
            assert_eq!(*c, ctx3.scalar(rat(1, 6)));
        }
    }

    #[test]
    fn abelianize_kills_commutators() {
        let ctx = ctx2();
        let x1 = Element::generator(&ctx, GenId(0));
        let x2 = Element::generator(&ctx, GenId(1));
        let comm = x1.mul(&x2).unwrap().sub(&x2.mul(&x1).unwrap()).unwrap();
        assert!(abelianize(&comm).unwrap().is_zero());
    }

    #[test]
    fn abelianize_after_sym_is_identity() {
        let ctx = Context::coordinates(3, 2);
        // all monomials of degree <= 6 in 3 variables would be large; sample a spread
        let monos = vec![
            Monomial::unit(),
            Monomial::new(vec![GenId(0)]),
            Monomial::new(vec![GenId(0), GenId(1)]),
            Monomial::new(vec![GenId(0), GenId(0), GenId(2)]),
            Monomial::new(vec![GenId(1); 4]),
            Monomial::new(vec![GenId(0), GenId(0), GenId(1), GenId(2), GenId(2)]),
            Monomial::new(vec![GenId(0), GenId(1), GenId(2), GenId(0), GenId(1), GenId(2)]),
        ];
        for m in monos {
            let e = sym(&ctx, &m).unwrap();
            let back = abelianize(&e).unwrap();
            assert_eq!(back, Poly::from_monomial(&ctx, m));
        }
    }

    #[test]
    fn abelianize_rejects_graded_generators() {
        let ctx = Context::new(
            vec![GenInfo::variable("x"), GenInfo::graded("xi", -1, 2)],
            2,
        )
        .unwrap();
        let e = Element::generator(&ctx, GenId(1));
        assert!(abelianize(&e).is_err());
    }

    proptest! {
        #[test]
        fn mul_is_associative(seed in 0u64..200) {
            use rand::{Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let ctx = Context::coordinates(2, 2);
            let mut random_element = |rng: &mut rand::rngs::StdRng| {
                let mut e = Element::zero(&ctx);
                for _ in 0..rng.gen_range(0..4) {
                    let len = rng.gen_range(0..4);
                    let word = Word((0..len).map(|_| GenId(rng.gen_range(0..2))).collect());
                    let num = rng.gen_range(-3i64..4);
                    let pow = rng.gen_range(0..3usize);
                    e.add_term(word, Scalar::monomial(rat_int(num), pow, 2));
                }
                e
            };
            let a = random_element(&mut rng);
            let b = random_element(&mut rng);
            let c = random_element(&mut rng);
            let left = a.mul(&b).unwrap().mul(&c).unwrap();
            let right = a.mul(&b.mul(&c).unwrap()).unwrap();
            prop_assert_eq!(left, right);
        }

        #[test]
        fn koszul_sign_composes(seed in 0u64..200) {
            use rand::{seq::SliceRandom, Rng, SeedableRng};
            let mut rng = rand::rngs::StdRng::seed_from_u64(seed);
            let n = rng.gen_range(2..6usize);
            let degrees: Vec<i64> = (0..n).map(|_| rng.gen_range(-2i64..3)).collect();
            let mut sigma: Vec<usize> = (0..n).collect();
            let mut tau: Vec<usize> = (0..n).collect();
            sigma.shuffle(&mut rng);
            tau.shuffle(&mut rng);
            // composite reordering: first apply tau, then sigma
            let composed: Vec<usize> = sigma.iter().map(|&t| tau[t]).collect();
            // degrees seen by sigma are those of the tau-reordered items
            let tau_degrees: Vec<i64> = (0..n).map(|t| degrees[tau[t]]).collect();
            let sign_tau = koszul_sign(&tau, &degrees).unwrap();
            let sign_sigma = koszul_sign(&sigma, &tau_degrees).unwrap();
            let sign_comp = koszul_sign(&composed, &degrees).unwrap();
            prop_assert_eq!(sign_comp, sign_tau * sign_sigma);
        }
    }
}
