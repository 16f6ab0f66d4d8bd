//! Canonical residual form of a column-1-anchored polynomial.
//!
//! A polynomial invariant under the column-(2,3) swap can be written with
//! `x1` and `d1` confined to the seven residual monomials
//! `x1^2*d1^2, x1*d1, x1^2, d1^2, x1, d1, 1`, with coefficients that are
//! polynomials in the elementary multisymmetric values alone. [`QForm`]
//! holds those seven coefficients in the E-ring, where "contains no `x1`
//! or `d1`" is true by construction; evaluating them through φ and
//! reassembling reproduces the input exactly.
//!
//! The reduction runs in three stages, each an identity on values:
//!
//! 1. Rewrite the swap-invariant part over the tagged partial invariants
//!    `F10, F20, F01, F02, F11` (sums, products, and the cross sum of the
//!    column-2,3 entries) by normal form against a small elimination
//!    basis. This removes `x2, x3, d2, d3` entirely.
//! 2. Substitute each tag by its expression through the full elementary
//!    values and `x1, d1`, landing in the residual ring
//!    `Q[x1, d1, E.., L]`.
//! 3. Divide by the four rewrite rules that cap powers of `x1` and `d1`
//!    at two and eliminate the mixed monomials `x1^2*d1` and `x1*d1^2`.
//!    Ordinary division terminates, and no remainder term is divisible by
//!    a rule head, which is exactly the residual-monomial condition.

use std::sync::Arc;

use once_cell::sync::Lazy;

use super::catalog::catalog;
use super::maps::phi;
use crate::error::{Error, Result};
use crate::groebner::{buchberger_with, reduce, GroebnerBasis, PairSelection};
use crate::rational::Rational;
use crate::ring::{apply_permutation, same_ring, Monomial, Permutation, Polynomial, RingCtx, Substitution};

/// Exponent pairs `(a, b)` of the residual monomials `x1^a * d1^b`, in
/// coefficient order.
pub const RESIDUAL_EXPONENTS: [(u32, u32); 7] =
    [(2, 2), (1, 1), (2, 0), (0, 2), (1, 0), (0, 1), (0, 0)];

/// The seven residual coefficients, named by the `x1`/`d1` exponents they
/// multiply. All live in the E-ring.
#[derive(Clone, Debug)]
pub struct QForm {
    pub q22: Polynomial,
    pub q11: Polynomial,
    pub q20: Polynomial,
    pub q02: Polynomial,
    pub q10: Polynomial,
    pub q01: Polynomial,
    pub q00: Polynomial,
}

impl QForm {
    /// Coefficients in `RESIDUAL_EXPONENTS` order.
    pub fn coefficients(&self) -> [&Polynomial; 7] {
        [
            &self.q22, &self.q11, &self.q20, &self.q02, &self.q10, &self.q01, &self.q00,
        ]
    }

    /// Evaluates the coefficients through φ and reassembles
    /// `Σ φ(Q_ab) · x1^a · d1^b` in the xd-ring. For a form produced by
    /// [`reduce_xd_canonical`] this returns the original input exactly.
    pub fn assemble(&self) -> Polynomial {
        let cat = catalog();
        let x1 = cat.xd.var("x1").expect("xd ring has x1");
        let d1 = cat.xd.var("d1").expect("xd ring has d1");
        let mut acc = Polynomial::zero(&cat.xd);
        for ((a, b), q) in RESIDUAL_EXPONENTS.iter().zip(self.coefficients()) {
            if q.is_zero() {
                continue;
            }
            let monomial = &x1.pow(*a) * &d1.pow(*b);
            acc = &acc + &(&phi(q) * &monomial);
        }
        acc
    }
}

/// Stage-1 machinery: the tag ring, its elimination basis, and the
/// substitutions into and out of it.
struct Stage1 {
    ring: Arc<RingCtx>,
    basis: GroebnerBasis,
    inject: Substitution,
}

static STAGE1: Lazy<Stage1> = Lazy::new(|| {
    let ring = RingCtx::lex(&[
        "x2", "x3", "d2", "d3", "x1", "d1", "F10", "F20", "F01", "F02", "F11", "L",
    ]);
    let gens: Vec<Polynomial> = [
        "F10 - x2 - x3",
        "F20 - x2*x3",
        "F01 - d2 - d3",
        "F02 - d2*d3",
        "F11 - x2*d3 - x3*d2",
    ]
    .iter()
    .map(|t| ring.parse(t).expect("stage-1 generators parse"))
    .collect();
    let basis = buchberger_with(&gens, PairSelection::Normal, false);
    let inject = Substitution::matching_names(&catalog().xd, &ring);
    Stage1 { ring, basis, inject }
});

/// Residual ring of stage 3: `x1` and `d1` above the E-variables.
static RESIDUAL_RING: Lazy<Arc<RingCtx>> = Lazy::new(|| {
    RingCtx::lex(&[
        "x1", "d1", "E21", "E12", "E11", "E30", "E03", "E20", "E02", "E10", "E01", "L",
    ])
});

/// Stage-2 substitution: tags to their expressions through the elementary
/// values, per the column-1 splitting identities.
static STAGE2: Lazy<Substitution> = Lazy::new(|| {
    let source = &STAGE1.ring;
    let target = &*RESIDUAL_RING;
    let image = |t: &str| target.parse(t).expect("stage-2 images parse");
    Substitution::new(source, target)
        .set("x1", image("x1"))
        .and_then(|s| s.set("d1", image("d1")))
        .and_then(|s| s.set("L", image("L")))
        .and_then(|s| s.set("F10", image("E10 - x1")))
        .and_then(|s| s.set("F20", image("E20 - x1*E10 + x1^2")))
        .and_then(|s| s.set("F01", image("E01 - d1")))
        .and_then(|s| s.set("F02", image("E02 - d1*E01 + d1^2")))
        .and_then(|s| s.set("F11", image("E11 - d1*E10 - x1*E01 + 2*d1*x1")))
        .expect("stage-2 substitution builds")
});

/// Stage-3 rewrite rules. Their heads under the residual order are
/// `x1^3`, `d1^3`, `x1^2*d1`, and `x1*d1^2`; dividing by them leaves
/// remainders supported on the seven residual monomials only.
static STAGE3_RULES: Lazy<Vec<Polynomial>> = Lazy::new(|| {
    let ring = &*RESIDUAL_RING;
    [
        "x1^3 - x1^2*E10 + x1*E20 - E30",
        "d1^3 - d1^2*E01 + d1*E02 - E03",
        "x1^2*d1 - 2/3*x1*d1*E10 - 1/3*x1^2*E01 + 1/3*x1*E11 + 1/3*d1*E20 - 1/3*E21",
        "x1*d1^2 - 2/3*x1*d1*E01 - 1/3*d1^2*E10 + 1/3*d1*E11 + 1/3*x1*E02 - 1/3*E12",
    ]
    .iter()
    .map(|t| ring.parse(t).expect("stage-3 rules parse"))
    .collect()
});

/// Rewrites a column-(2,3)-swap-invariant polynomial into its canonical
/// residual form. Errors when the input is not swap-invariant.
pub fn reduce_xd_canonical(p: &Polynomial) -> Result<QForm> {
    let cat = catalog();
    assert!(
        same_ring(p.ring(), &cat.xd),
        "residual reduction expects a polynomial in the xd-ring"
    );
    if apply_permutation(p, &Permutation::swap(2, 3)) != *p {
        return Err(Error::NotSwapInvariant);
    }

    // Stage 1: eliminate x2, x3, d2, d3 in favor of the tags.
    let stage1 = &*STAGE1;
    let lifted = stage1
        .inject
        .apply(p)
        .expect("xd variables all exist in the tag ring");
    let (tagged, _) = stage1.basis.reduce(&lifted);
    for v in 0..4 {
        if tagged.uses_var(v) {
            // Swap invariance was checked above, so the invariant part
            // rewrites completely; a leftover tag variable is a bug.
            return Err(Error::NotEliminated {
                variable: stage1.ring.var_name(v).to_string(),
            });
        }
    }

    // Stage 2: expand the tags through the elementary values.
    let residual = STAGE2.apply(&tagged).expect("every tag variable is mapped");

    // Stage 3: cap x1/d1 powers and remove the mixed monomials.
    let (normal, _) = reduce(&residual, &STAGE3_RULES);

    // Collect the seven coefficients into the E-ring.
    let e_ring = &cat.e;
    let mut buckets: [Vec<(Rational, Monomial)>; 7] = Default::default();
    let res_ring = &*RESIDUAL_RING;
    let e_index: Vec<usize> = (0..res_ring.arity() - 2)
        .map(|k| {
            let name = res_ring.var_name(k + 2);
            e_ring.var_index(name).expect("E-ring shares the tail names")
        })
        .collect();
    for (coeff, mono) in normal.terms() {
        let pair = (mono.exp(0), mono.exp(1));
        let slot = RESIDUAL_EXPONENTS
            .iter()
            .position(|&e| e == pair)
            .expect("remainder supported on residual monomials");
        let mut exps = vec![0u32; e_ring.arity()];
        for k in 2..res_ring.arity() {
            exps[e_index[k - 2]] = mono.exp(k);
        }
        buckets[slot].push((coeff.clone(), Monomial::from_exps(&exps)));
    }
    let mut polys = buckets
        .into_iter()
        .map(|terms| Polynomial::from_terms(e_ring, terms));
    let form = QForm {
        q22: polys.next().unwrap(),
        q11: polys.next().unwrap(),
        q20: polys.next().unwrap(),
        q02: polys.next().unwrap(),
        q10: polys.next().unwrap(),
        q01: polys.next().unwrap(),
        q00: polys.next().unwrap(),
    };
    debug_assert!(form.assemble() == *p, "residual reassembly must be exact");
    Ok(form)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::One;

    #[test]
    fn constant_goes_to_the_free_coefficient() {
        let cat = catalog();
        let form = reduce_xd_canonical(&Polynomial::one(&cat.xd)).unwrap();
        assert!(form.q00.leading_coefficient().unwrap().is_one());
        assert_eq!(form.q00.num_terms(), 1);
        for q in [&form.q22, &form.q11, &form.q20, &form.q02, &form.q10, &form.q01] {
            assert!(q.is_zero());
        }
        assert!(form.assemble() == Polynomial::one(&cat.xd));
    }

    #[test]
    fn x1_cubed_caps_to_degree_two() {
        let cat = catalog();
        let p = cat.xd.parse("x1^3").unwrap();
        let form = reduce_xd_canonical(&p).unwrap();
        assert_eq!(form.q20.to_string(), "E10");
        assert_eq!(form.q10.to_string(), "-E20");
        assert_eq!(form.q00.to_string(), "E30");
        assert!(form.q22.is_zero() && form.q11.is_zero() && form.q02.is_zero() && form.q01.is_zero());
        assert!(form.assemble() == p);
    }

    #[test]
    fn mixed_monomial_reads_off_the_splitting_rule() {
        let cat = catalog();
        let p = cat.xd.parse("x1^2*d1").unwrap();
        let form = reduce_xd_canonical(&p).unwrap();
        assert_eq!(form.q11.to_string(), "2/3*E10");
        assert_eq!(form.q20.to_string(), "1/3*E01");
        assert_eq!(form.q10.to_string(), "-1/3*E11");
        assert_eq!(form.q01.to_string(), "-1/3*E20");
        assert_eq!(form.q00.to_string(), "1/3*E21");
        assert!(form.q22.is_zero() && form.q02.is_zero());
        assert!(form.assemble() == p);
    }

    #[test]
    fn swap_invariant_inputs_reassemble_exactly() {
        let cat = catalog();
        for text in [
            "x2*x3 + d2*d3",
            "x1^4 - d1^4",
            "x2^2 + x3^2 - d1^2",
            "x1*x2*x3*d1*d2*d3",
            "x1^2*d1^2 + x2^2*d2^2 + x3^2*d3^2 - L^4",
            "x2^3 + x3^3 + 5*x1*d1*x2*x3 - 2/7*d2*d3*L",
        ] {
            let p = cat.xd.parse(text).unwrap();
            let form = reduce_xd_canonical(&p).unwrap();
            assert!(form.assemble() == p, "reassembly failed for {text}");
        }
    }

    #[test]
    fn coefficients_are_swap_invariant_images() {
        let cat = catalog();
        let p = cat.xd.parse("x2^2*x3 + x2*x3^2 + x1*d2*d3").unwrap();
        let form = reduce_xd_canonical(&p).unwrap();
        for q in form.coefficients() {
            let image = phi(q);
            assert!(apply_permutation(&image, &Permutation::swap(2, 3)) == image);
        }
        assert!(form.assemble() == p);
    }

    #[test]
    fn non_invariant_input_is_rejected() {
        let cat = catalog();
        let p = cat.xd.parse("x2").unwrap();
        assert!(matches!(
            reduce_xd_canonical(&p),
            Err(Error::NotSwapInvariant)
        ));
    }
}
