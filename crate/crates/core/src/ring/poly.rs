//! Polynomials as normalized sparse term lists, plus substitution between
//! rings.

use std::ops::{Add, Mul, Neg, Sub};
use std::sync::Arc;

use num_traits::Zero;

use super::{same_ring, Monomial, RingCtx};
use crate::error::{Error, Result};
use crate::rational::{int, Rational};

/// A polynomial over [`Rational`] coefficients in a fixed ring.
///
/// Terms are kept strictly descending in the ring's monomial order with no
/// zero coefficients and no repeated monomials, so structural equality is
/// mathematical equality and the first term is the leading term.
#[derive(Clone, Debug)]
pub struct Polynomial {
    ring: Arc<RingCtx>,
    terms: Vec<(Rational, Monomial)>,
}

impl PartialEq for Polynomial {
    fn eq(&self, other: &Self) -> bool {
        same_ring(&self.ring, &other.ring) && self.terms == other.terms
    }
}

impl Eq for Polynomial {}

impl Polynomial {
    pub fn zero(ring: &Arc<RingCtx>) -> Self {
        Polynomial {
            ring: Arc::clone(ring),
            terms: Vec::new(),
        }
    }

    pub fn constant(ring: &Arc<RingCtx>, c: Rational) -> Self {
        let mut terms = Vec::new();
        if !c.is_zero() {
            terms.push((c, Monomial::one(ring.arity())));
        }
        Polynomial {
            ring: Arc::clone(ring),
            terms,
        }
    }

    pub fn one(ring: &Arc<RingCtx>) -> Self {
        Self::constant(ring, int(1))
    }

    /// Build from arbitrary terms: sorts, merges repeated monomials, and
    /// drops zero coefficients.
    pub fn from_terms<I>(ring: &Arc<RingCtx>, terms: I) -> Self
    where
        I: IntoIterator<Item = (Rational, Monomial)>,
    {
        let mut list: Vec<(Rational, Monomial)> = terms.into_iter().collect();
        for (_, m) in &list {
            assert_eq!(m.arity(), ring.arity(), "monomial arity does not match ring");
        }
        list.sort_unstable_by(|(_, a), (_, b)| ring.cmp(b, a));
        let mut merged: Vec<(Rational, Monomial)> = Vec::with_capacity(list.len());
        for (c, m) in list {
            match merged.last_mut() {
                Some((lc, lm)) if *lm == m => {
                    *lc += c;
                    if lc.is_zero() {
                        merged.pop();
                    }
                }
                _ => {
                    if !c.is_zero() {
                        merged.push((c, m));
                    }
                }
            }
        }
        let poly = Polynomial {
            ring: Arc::clone(ring),
            terms: merged,
        };
        poly.debug_check();
        poly
    }

    fn debug_check(&self) {
        debug_assert!(
            self.terms.windows(2).all(|w| {
                self.ring.cmp(&w[0].1, &w[1].1) == std::cmp::Ordering::Greater
            }),
            "terms must be strictly descending"
        );
        debug_assert!(
            self.terms.iter().all(|(c, _)| !c.is_zero()),
            "zero coefficients must be dropped"
        );
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    pub fn terms(&self) -> &[(Rational, Monomial)] {
        &self.terms
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    /// Leading coefficient and monomial, or `None` for the zero polynomial.
    pub fn leading_term(&self) -> Option<(&Rational, &Monomial)> {
        self.terms.first().map(|(c, m)| (c, m))
    }

    pub fn leading_monomial(&self) -> Option<&Monomial> {
        self.terms.first().map(|(_, m)| m)
    }

    pub fn leading_coefficient(&self) -> Option<&Rational> {
        self.terms.first().map(|(c, _)| c)
    }

    /// Largest total degree among the terms; `None` for zero.
    pub fn total_degree(&self) -> Option<u32> {
        self.terms.iter().map(|(_, m)| m.total_degree()).max()
    }

    /// Largest exponent of one variable across the terms.
    pub fn degree_in(&self, var: usize) -> u32 {
        self.terms.iter().map(|(_, m)| m.exp(var)).max().unwrap_or(0)
    }

    /// Whether any term uses the given variable.
    pub fn uses_var(&self, var: usize) -> bool {
        self.terms.iter().any(|(_, m)| m.exp(var) > 0)
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (tc * c, tm.clone()))
                .collect(),
        }
    }

    /// Multiply by the single term `c * m`. Monomial multiplication is
    /// order-preserving, so the term list stays sorted without resorting.
    pub fn mul_term(&self, c: &Rational, m: &Monomial) -> Self {
        if c.is_zero() {
            return Self::zero(&self.ring);
        }
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self
                .terms
                .iter()
                .map(|(tc, tm)| (tc * c, tm.mul(m)))
                .collect(),
        }
    }

    /// `self - c * m * other` in one merge pass; the inner step of
    /// polynomial division.
    pub fn sub_scaled(&self, c: &Rational, m: &Monomial, other: &Polynomial) -> Self {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials belong to different rings"
        );
        if c.is_zero() {
            return self.clone();
        }
        let mut out = Vec::with_capacity(self.terms.len() + other.terms.len());
        let mut left = self.terms.iter().peekable();
        let mut right = other.terms.iter().peekable();
        let mut right_next = || -> Option<(Rational, Monomial)> {
            right.next().map(|(rc, rm)| (-(rc * c), rm.mul(m)))
        };
        let mut pending_right = right_next();
        while let Some((_, lm)) = left.peek() {
            match &pending_right {
                None => break,
                Some((rc, rm)) => match self.ring.cmp(lm, rm) {
                    std::cmp::Ordering::Greater => {
                        let (lc, lm) = left.next().unwrap();
                        out.push((lc.clone(), lm.clone()));
                    }
                    std::cmp::Ordering::Less => {
                        out.push(pending_right.take().unwrap());
                        pending_right = right_next();
                    }
                    std::cmp::Ordering::Equal => {
                        let (lc, lm) = left.next().unwrap();
                        let sum = lc + rc;
                        if !sum.is_zero() {
                            out.push((sum, lm.clone()));
                        }
                        pending_right = right_next();
                    }
                },
            }
        }
        out.extend(left.map(|(c0, m0)| (c0.clone(), m0.clone())));
        while let Some(t) = pending_right.take() {
            out.push(t);
            pending_right = right_next();
        }
        let poly = Polynomial {
            ring: Arc::clone(&self.ring),
            terms: out,
        };
        poly.debug_check();
        poly
    }

    /// The polynomial without its leading term; zero stays zero.
    pub fn tail(&self) -> Self {
        Polynomial {
            ring: Arc::clone(&self.ring),
            terms: self.terms.get(1..).map(<[_]>::to_vec).unwrap_or_default(),
        }
    }

    /// Divide by the leading coefficient; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => self.clone(),
            Some(lc) => {
                let inv = lc.recip();
                self.scale(&inv)
            }
        }
    }

    pub fn pow(&self, n: u32) -> Self {
        let mut acc = Self::one(&self.ring);
        for _ in 0..n {
            acc = &acc * self;
        }
        acc
    }

    /// Apply a substitution; convenience for [`Substitution::apply`].
    pub fn substitute(&self, subst: &Substitution) -> Result<Polynomial> {
        subst.apply(self)
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;

    fn add(self, other: &Polynomial) -> Polynomial {
        // A merge of two sorted lists; sub_scaled with coefficient -1 and
        // monomial 1 is exactly that merge with the sign flipped back.
        self.sub_scaled(&int(-1), &Monomial::one(self.ring.arity()), other)
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;

    fn sub(self, other: &Polynomial) -> Polynomial {
        self.sub_scaled(&int(1), &Monomial::one(self.ring.arity()), other)
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;

    fn neg(self) -> Polynomial {
        self.scale(&int(-1))
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;

    fn mul(self, other: &Polynomial) -> Polynomial {
        assert!(
            same_ring(&self.ring, &other.ring),
            "polynomials belong to different rings"
        );
        if self.is_zero() || other.is_zero() {
            return Polynomial::zero(&self.ring);
        }
        // Accumulate against the shorter factor term by term; each partial
        // product is sorted, so this is a sequence of merges.
        let (short, long) = if self.num_terms() <= other.num_terms() {
            (self, other)
        } else {
            (other, self)
        };
        let mut acc = Polynomial::zero(&self.ring);
        for (c, m) in &short.terms {
            acc = acc.sub_scaled(&-c, m, long);
        }
        acc
    }
}

/// A map from the variables of a source ring to image polynomials in a
/// target ring, applied as a ring homomorphism.
#[derive(Clone, Debug)]
pub struct Substitution {
    source: Arc<RingCtx>,
    target: Arc<RingCtx>,
    images: Vec<Option<Polynomial>>,
}

impl Substitution {
    /// Empty substitution: every variable unmapped.
    pub fn new(source: &Arc<RingCtx>, target: &Arc<RingCtx>) -> Self {
        Substitution {
            source: Arc::clone(source),
            target: Arc::clone(target),
            images: vec![None; source.arity()],
        }
    }

    /// Substitution that maps each source variable to the target variable
    /// of the same name, leaving names absent from the target unmapped.
    pub fn matching_names(source: &Arc<RingCtx>, target: &Arc<RingCtx>) -> Self {
        let mut subst = Self::new(source, target);
        for (i, name) in source.var_names().iter().enumerate() {
            if let Some(j) = target.var_index(name) {
                subst.images[i] = Some(Polynomial::from_terms(
                    target,
                    [(int(1), Monomial::var(target.arity(), j))],
                ));
            }
        }
        subst
    }

    /// Assign the image of a source variable. Builder-style so maps read as
    /// a table.
    pub fn set(mut self, var: &str, image: Polynomial) -> Result<Self> {
        let i = self
            .source
            .var_index(var)
            .ok_or_else(|| Error::UnknownVariable {
                name: var.to_string(),
                position: 0,
            })?;
        if !same_ring(image.ring(), &self.target) {
            return Err(Error::ImageRingMismatch {
                name: var.to_string(),
            });
        }
        self.images[i] = Some(image);
        Ok(self)
    }

    pub fn source(&self) -> &Arc<RingCtx> {
        &self.source
    }

    pub fn target(&self) -> &Arc<RingCtx> {
        &self.target
    }

    /// Apply the substitution to `p`.
    ///
    /// Fails when `p` uses a variable with no assigned image or belongs to
    /// a ring other than the source.
    pub fn apply(&self, p: &Polynomial) -> Result<Polynomial> {
        assert!(
            same_ring(p.ring(), &self.source),
            "polynomial does not live in the substitution's source ring"
        );
        let arity = self.source.arity();
        // Power cache per variable: powers[v][k-1] = image^k.
        let mut powers: Vec<Vec<Polynomial>> = vec![Vec::new(); arity];
        let mut acc = Polynomial::zero(&self.target);
        for (c, m) in &p.terms {
            let mut term_image = Polynomial::constant(&self.target, c.clone());
            for v in 0..arity {
                let e = m.exp(v);
                if e == 0 {
                    continue;
                }
                let image = self.images[v]
                    .as_ref()
                    .ok_or_else(|| Error::UnmappedVariable {
                        name: self.source.var_name(v).to_string(),
                    })?;
                let cache = &mut powers[v];
                while cache.len() < e as usize {
                    let next = match cache.last() {
                        None => image.clone(),
                        Some(prev) => prev * image,
                    };
                    cache.push(next);
                }
                term_image = &term_image * &cache[e as usize - 1];
            }
            acc = &acc + &term_image;
        }
        Ok(acc)
    }
}
