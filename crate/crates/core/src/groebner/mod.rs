//! Groebner machinery: division with cofactors, Buchberger completion,
//! elimination ideals, and ideal membership.
//!
//! All computation is exact over the rationals. [`buchberger`] returns the
//! unique reduced basis (monic, fully auto-reduced, sorted descending by
//! leading monomial), so the output is canonical regardless of the pair
//! processing schedule, together with a transform expressing every basis
//! element over the original generators.

mod buchberger;
mod cache;

pub use buchberger::{buchberger, buchberger_with, PairSelection};
pub use cache::{cached_reduced_basis, BasisStore};

use std::sync::Arc;

use crate::error::{Error, Result};
use crate::rational::Rational;
use crate::ring::{same_ring, Monomial, Polynomial, RingCtx};

/// Division cofactors aligned with a divisor list: the quotient polynomial
/// for each divisor.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Cofactors {
    coefficients: Vec<Polynomial>,
}

impl Cofactors {
    pub fn new(coefficients: Vec<Polynomial>) -> Self {
        Cofactors { coefficients }
    }

    pub fn zero(ring: &Arc<RingCtx>, len: usize) -> Self {
        Cofactors {
            coefficients: vec![Polynomial::zero(ring); len],
        }
    }

    pub fn coefficients(&self) -> &[Polynomial] {
        &self.coefficients
    }

    pub fn len(&self) -> usize {
        self.coefficients.len()
    }

    pub fn is_empty(&self) -> bool {
        self.coefficients.is_empty()
    }

    /// Evaluate the combination `sum_i coefficients[i] * basis[i]`.
    pub fn combine(&self, basis: &[Polynomial]) -> Polynomial {
        assert_eq!(self.coefficients.len(), basis.len());
        let ring = self
            .coefficients
            .first()
            .map(|p| p.ring())
            .expect("empty cofactors have no ring");
        let mut acc = Polynomial::zero(ring);
        for (c, b) in self.coefficients.iter().zip(basis) {
            acc = &acc + &(c * b);
        }
        acc
    }
}

/// Multivariate division: the normal form of `p` modulo `basis` plus the
/// cofactors witnessing `p = sum_i cofactor_i * basis_i + remainder`.
///
/// No monomial of the remainder is divisible by any basis leading monomial.
/// When several basis elements divide the current leading monomial the one
/// with the smallest index wins, which makes the result deterministic for a
/// fixed basis order. Basis elements must be nonzero.
pub fn reduce(p: &Polynomial, basis: &[Polynomial]) -> (Polynomial, Cofactors) {
    let (rem, cofs) = reduce_impl(p, basis);
    debug_assert!(
        {
            let rebuilt = if basis.is_empty() {
                rem.clone()
            } else {
                &cofs.combine(basis) + &rem
            };
            rebuilt == *p
        },
        "division identity violated"
    );
    (rem, cofs)
}

pub(crate) fn reduce_impl(p: &Polynomial, basis: &[Polynomial]) -> (Polynomial, Cofactors) {
    let ring = p.ring();
    for g in basis {
        assert!(!g.is_zero(), "divisor basis elements must be nonzero");
        assert!(
            same_ring(ring, g.ring()),
            "polynomials belong to different rings"
        );
    }
    let heads: Vec<(&Rational, &Monomial)> =
        basis.iter().map(|g| g.leading_term().unwrap()).collect();
    let mut cof_terms: Vec<Vec<(Rational, Monomial)>> = vec![Vec::new(); basis.len()];
    let mut rem_terms: Vec<(Rational, Monomial)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((wc, wm)) = work.leading_term() {
        for (i, (gc, gm)) in heads.iter().enumerate() {
            if gm.divides(wm) {
                let q = wm.div(gm).unwrap();
                let t = wc / *gc;
                cof_terms[i].push((t.clone(), q.clone()));
                work = work.sub_scaled(&t, &q, &basis[i]);
                continue 'outer;
            }
        }
        rem_terms.push((wc.clone(), wm.clone()));
        work = work.tail();
    }
    let cofs = Cofactors::new(
        cof_terms
            .into_iter()
            .map(|terms| Polynomial::from_terms(ring, terms))
            .collect(),
    );
    (Polynomial::from_terms(ring, rem_terms), cofs)
}

/// The S-polynomial `(lcm/lt(f))*f - (lcm/lt(g))*g`, which cancels the two
/// leading terms against their least common multiple. Panics on zero input.
pub fn spoly(f: &Polynomial, g: &Polynomial) -> Polynomial {
    assert!(
        same_ring(f.ring(), g.ring()),
        "polynomials belong to different rings"
    );
    let (fc, fm) = f.leading_term().expect("S-polynomial of the zero polynomial");
    let (gc, gm) = g.leading_term().expect("S-polynomial of the zero polynomial");
    let l = fm.lcm(gm);
    let uf = l.div(fm).unwrap();
    let ug = l.div(gm).unwrap();
    let left = f.mul_term(&fc.recip(), &uf);
    let right = g.mul_term(&gc.recip(), &ug);
    &left - &right
}

/// A reduced Groebner basis together with its provenance.
#[derive(Clone, Debug)]
pub struct GroebnerBasis {
    ring: Arc<RingCtx>,
    generators: Vec<Polynomial>,
    elements: Vec<Polynomial>,
    transform: Option<Vec<Cofactors>>,
}

impl GroebnerBasis {
    pub(crate) fn new(
        ring: Arc<RingCtx>,
        generators: Vec<Polynomial>,
        elements: Vec<Polynomial>,
        transform: Option<Vec<Cofactors>>,
    ) -> Self {
        GroebnerBasis {
            ring,
            generators,
            elements,
            transform,
        }
    }

    /// Rebuild a basis from stored elements (no transform available).
    pub fn from_parts(
        ring: &Arc<RingCtx>,
        generators: Vec<Polynomial>,
        elements: Vec<Polynomial>,
    ) -> Self {
        GroebnerBasis {
            ring: Arc::clone(ring),
            generators,
            elements,
            transform: None,
        }
    }

    pub fn ring(&self) -> &Arc<RingCtx> {
        &self.ring
    }

    /// The reduced basis: monic, auto-reduced, sorted descending by leading
    /// monomial.
    pub fn elements(&self) -> &[Polynomial] {
        &self.elements
    }

    /// The generators the basis was computed from.
    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// Rows expressing each element over the generators, when the basis was
    /// computed rather than loaded from a store.
    pub fn transform(&self) -> Option<&[Cofactors]> {
        self.transform.as_deref()
    }

    /// Normal form of `p` modulo the basis, with cofactors over the basis
    /// elements.
    pub fn reduce(&self, p: &Polynomial) -> (Polynomial, Cofactors) {
        reduce(p, &self.elements)
    }

    /// Whether `p` lies in the ideal: its normal form is zero.
    pub fn contains(&self, p: &Polynomial) -> bool {
        if p.is_zero() {
            return true;
        }
        reduce_impl(p, &self.elements).0.is_zero()
    }

    /// Ideal membership with witnesses: when `p` is a member and the
    /// transform is available, returns cofactors over the original
    /// generators reproducing `p` exactly.
    pub fn membership(&self, p: &Polynomial) -> (bool, Option<Cofactors>) {
        let (rem, elem_cofs) = reduce(p, &self.elements);
        if !rem.is_zero() {
            return (false, None);
        }
        let Some(rows) = &self.transform else {
            return (true, None);
        };
        let mut over_gens = Cofactors::zero(&self.ring, self.generators.len());
        for (c, row) in elem_cofs.coefficients().iter().zip(rows) {
            if c.is_zero() {
                continue;
            }
            for (acc, r) in over_gens.coefficients.iter_mut().zip(row.coefficients()) {
                if !r.is_zero() {
                    *acc = &*acc + &(c * r);
                }
            }
        }
        (true, Some(over_gens))
    }

    /// Recheck the defining property: every pairwise S-polynomial reduces
    /// to zero modulo the basis. Quadratic in the basis size; meant for
    /// verification suites, not hot paths.
    pub fn spolys_reduce_to_zero(&self) -> bool {
        for i in 0..self.elements.len() {
            for j in (i + 1)..self.elements.len() {
                let s = spoly(&self.elements[i], &self.elements[j]);
                if !s.is_zero() && !reduce_impl(&s, &self.elements).0.is_zero() {
                    return false;
                }
            }
        }
        true
    }

    /// Recheck that every transform row reproduces its element from the
    /// generators. True when no transform is present.
    pub fn transform_is_exact(&self) -> bool {
        match &self.transform {
            None => true,
            Some(rows) => rows
                .iter()
                .zip(&self.elements)
                .all(|(row, elem)| row.combine(&self.generators) == *elem),
        }
    }
}

/// Ideal membership of `p` in the ideal described by `gb`, with cofactors
/// over the original generators when the membership holds.
pub fn ideal_membership(p: &Polynomial, gb: &GroebnerBasis) -> (bool, Option<Cofactors>) {
    gb.membership(p)
}

/// Whether two generator lists span the same ideal, decided by mutual
/// reduction of generators to zero.
pub fn ideal_equal(a: &[Polynomial], b: &[Polynomial]) -> bool {
    let gb_a = buchberger_with(a, PairSelection::Normal, false);
    let gb_b = buchberger_with(b, PairSelection::Normal, false);
    a.iter().all(|p| gb_b.contains(p)) && b.iter().all(|p| gb_a.contains(p))
}

/// Basis of the elimination ideal obtained by dropping the first `k`
/// variables of the ring's priority order: the elements of the reduced
/// basis that use none of those variables. For the lexicographic order this
/// is exactly the intersection with the remaining subring.
pub fn elimination_ideal(gens: &[Polynomial], k: usize) -> Result<Vec<Polynomial>> {
    let ring = gens
        .first()
        .map(|p| Arc::clone(p.ring()))
        .ok_or(Error::BadElimination { k, arity: 0 })?;
    if k > ring.arity() {
        return Err(Error::BadElimination {
            k,
            arity: ring.arity(),
        });
    }
    let gb = buchberger_with(gens, PairSelection::Normal, false);
    Ok(restrict_to_subring(gb.elements(), &ring, k))
}

/// Filter `elements` to those free of the first `k` priority variables.
pub fn restrict_to_subring(
    elements: &[Polynomial],
    ring: &Arc<RingCtx>,
    k: usize,
) -> Vec<Polynomial> {
    let dropped: Vec<usize> = ring.order().priority()[..k].to_vec();
    elements
        .iter()
        .filter(|p| dropped.iter().all(|&v| !p.uses_var(v)))
        .cloned()
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rational::int;
    use crate::ring::RingCtx;

    fn ring2() -> Arc<RingCtx> {
        RingCtx::lex(&["x1", "d1"])
    }

    #[test]
    fn division_examples() {
        let r = ring2();
        let p = r.parse("x1*d1 + d1").unwrap();
        let g = r.parse("x1*d1 - d1").unwrap();
        let (rem, cofs) = reduce(&p, std::slice::from_ref(&g));
        assert_eq!(rem, r.parse("2*d1").unwrap());
        assert_eq!(cofs.coefficients()[0], Polynomial::one(&r));

        // Repeated steps accumulate the cofactor x1 + d1.
        let p = r.parse("x1^2").unwrap();
        let g = r.parse("x1 - d1").unwrap();
        let (rem, cofs) = reduce(&p, std::slice::from_ref(&g));
        assert_eq!(rem, r.parse("d1^2").unwrap());
        assert_eq!(cofs.coefficients()[0], r.parse("x1 + d1").unwrap());
    }

    #[test]
    fn division_with_empty_basis_returns_input() {
        let r = ring2();
        let p = r.parse("x1 + 1").unwrap();
        let (rem, cofs) = reduce(&p, &[]);
        assert_eq!(rem, p);
        assert!(cofs.is_empty());
    }

    #[test]
    fn division_tie_break_takes_smallest_index() {
        let r = ring2();
        let g1 = r.parse("x1 - 1").unwrap();
        let g2 = r.parse("x1 - d1").unwrap();
        let p = r.parse("x1").unwrap();
        let (rem, cofs) = reduce(&p, &[g1, g2]);
        // g1 wins, so the remainder is 1, not d1.
        assert_eq!(rem, Polynomial::one(&r));
        assert_eq!(cofs.coefficients()[0], Polynomial::one(&r));
        assert!(cofs.coefficients()[1].is_zero());
    }

    #[test]
    #[should_panic(expected = "nonzero")]
    fn division_rejects_zero_divisor() {
        let r = ring2();
        let p = r.parse("x1").unwrap();
        let _ = reduce(&p, &[Polynomial::zero(&r)]);
    }

    #[test]
    fn spoly_examples() {
        let r = ring2();
        let f = r.parse("x1^2").unwrap();
        let g = r.parse("x1*d1 - d1").unwrap();
        assert_eq!(spoly(&f, &g), r.parse("x1*d1").unwrap());
        assert!(spoly(&f, &f).is_zero());

        let ring3 = RingCtx::lex(&["x1", "d1", "L"]);
        let f = ring3.parse("x1 - d1").unwrap();
        let g = ring3.parse("d1 - L").unwrap();
        assert_eq!(spoly(&f, &g), ring3.parse("x1*L - d1^2").unwrap());
    }

    #[test]
    fn spoly_scales_leading_coefficients() {
        let r = ring2();
        let f = r.parse("2*x1^2 + 1").unwrap();
        let g = r.parse("3*x1*d1 + d1").unwrap();
        // (d1/2)*f - (x1/3)*g: the x1^2*d1 heads cancel exactly.
        let s = spoly(&f, &g);
        assert_eq!(s, r.parse("-1/3*x1*d1 + 1/2*d1").unwrap());
    }

    #[test]
    fn ideal_equality_examples() {
        let r = ring2();
        let a = vec![r.parse("x1^2").unwrap(), r.parse("x1*d1 - d1").unwrap()];
        let b = vec![r.parse("x1^2").unwrap(), r.parse("d1").unwrap()];
        assert!(ideal_equal(&a, &b));
        let c = vec![r.parse("x1").unwrap()];
        let d = vec![r.parse("x1^2").unwrap()];
        assert!(!ideal_equal(&c, &d));
    }

    #[test]
    fn elimination_drops_leading_variables() {
        let r = RingCtx::lex(&["x", "E"]);
        let gens = vec![r.parse("E - x^2").unwrap(), r.parse("x").unwrap()];
        let eliminated = elimination_ideal(&gens, 1).unwrap();
        assert_eq!(eliminated, vec![r.parse("E").unwrap()]);
        // k = 0 keeps the full reduced basis.
        let full = elimination_ideal(&gens, 0).unwrap();
        assert_eq!(full, vec![r.parse("x").unwrap(), r.parse("E").unwrap()]);
        assert!(elimination_ideal(&gens, 3).is_err());
    }

    #[test]
    fn membership_maps_cofactors_to_generators() {
        let r = ring2();
        let gens = vec![r.parse("x1^2").unwrap(), r.parse("x1*d1 - d1").unwrap()];
        let gb = buchberger(&gens);
        let p = r.parse("x1^2 + 3*d1").unwrap();
        let (member, cofs) = ideal_membership(&p, &gb);
        assert!(member);
        let cofs = cofs.unwrap();
        assert_eq!(cofs.len(), gens.len());
        assert_eq!(cofs.combine(&gens), p);

        let (non_member, none) = ideal_membership(&r.parse("x1 + 1").unwrap(), &gb);
        assert!(!non_member);
        assert!(none.is_none());
        // Scalar probe outside a proper ideal.
        assert!(!gb.contains(&Polynomial::one(&r)));
        assert!(gb.contains(&Polynomial::zero(&r)));
        let _ = int(0);
    }
}
