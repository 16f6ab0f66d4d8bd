//! The column action of the symmetric group S3.
//!
//! The domain rings carry three matched variable columns `x1,x2,x3` and
//! `d1,d2,d3`; a permutation acts on a polynomial by renaming column `i` to
//! column `sigma(i)` simultaneously in both families and fixing every other
//! variable. Rings without the column variables (for example the ring of
//! elementary-symmetric values) are fixed pointwise.

use std::sync::Arc;

use super::{Monomial, Polynomial, RingCtx};
use crate::rational::ratio;

/// A permutation of the three columns, stored as the images of (1,2,3).
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct Permutation {
    image: [u8; 3],
}

impl Permutation {
    pub const IDENTITY: Permutation = Permutation { image: [1, 2, 3] };

    /// The transposition of columns `a` and `b` (1-based).
    pub fn swap(a: usize, b: usize) -> Self {
        assert!((1..=3).contains(&a) && (1..=3).contains(&b) && a != b);
        let mut image = [1u8, 2, 3];
        image.swap(a - 1, b - 1);
        Permutation { image }
    }

    /// The 3-cycle sending column 1 to 2, 2 to 3, and 3 to 1.
    pub fn cycle() -> Self {
        Permutation { image: [2, 3, 1] }
    }

    /// All six elements of S3, identity first.
    pub fn all() -> [Permutation; 6] {
        [
            Permutation { image: [1, 2, 3] },
            Permutation { image: [2, 1, 3] },
            Permutation { image: [3, 2, 1] },
            Permutation { image: [1, 3, 2] },
            Permutation { image: [2, 3, 1] },
            Permutation { image: [3, 1, 2] },
        ]
    }

    /// Image of a 1-based column index.
    pub fn apply(&self, i: usize) -> usize {
        assert!((1..=3).contains(&i));
        self.image[i - 1] as usize
    }

    /// Composition acting right-to-left: `(a.compose(b)).apply(i)` equals
    /// `a.apply(b.apply(i))`.
    pub fn compose(&self, other: &Permutation) -> Permutation {
        let mut image = [0u8; 3];
        for i in 1..=3 {
            image[i - 1] = self.apply(other.apply(i)) as u8;
        }
        Permutation { image }
    }

    pub fn inverse(&self) -> Permutation {
        let mut image = [0u8; 3];
        for i in 1..=3 {
            image[self.apply(i) - 1] = i as u8;
        }
        Permutation { image }
    }
}

/// Index remap realizing `sigma` on the ring's variables: position `v` of
/// the input exponent vector moves to `remap[v]`.
fn column_remap(ring: &RingCtx, sigma: &Permutation) -> Vec<usize> {
    let mut remap: Vec<usize> = (0..ring.arity()).collect();
    for family in ["x", "d"] {
        for i in 1..=3 {
            if let Some(src) = ring.var_index(&format!("{family}{i}")) {
                let image_name = format!("{family}{}", sigma.apply(i));
                let dst = ring.var_index(&image_name).unwrap_or_else(|| {
                    panic!("ring has {family}{i} but lacks its image {image_name}")
                });
                remap[src] = dst;
            }
        }
    }
    remap
}

/// Rename the columns of `p` by `sigma`: `x_i -> x_sigma(i)` and
/// `d_i -> d_sigma(i)`; all other variables are fixed.
pub fn apply_permutation(p: &Polynomial, sigma: &Permutation) -> Polynomial {
    if *sigma == Permutation::IDENTITY {
        return p.clone();
    }
    let ring = p.ring();
    let remap = column_remap(ring, sigma);
    let terms = p.terms().iter().map(|(c, m)| {
        let mut exps = vec![0u32; ring.arity()];
        for (v, &dst) in remap.iter().enumerate() {
            exps[dst] = m.exp(v);
        }
        (c.clone(), Monomial::from_exps(&exps))
    });
    Polynomial::from_terms(ring, terms.collect::<Vec<_>>())
}

/// The averaging projector onto column-permutation invariants:
/// the sum of `sigma^-1(p)` over all six permutations, divided by 6.
pub fn symmetrize(p: &Polynomial) -> Polynomial {
    let ring: &Arc<RingCtx> = p.ring();
    let mut acc = Polynomial::zero(ring);
    for sigma in Permutation::all() {
        acc = &acc + &apply_permutation(p, &sigma.inverse());
    }
    acc.scale(&ratio(1, 6))
}

/// Whether `p` is invariant under every column permutation. Checking the
/// two group generators suffices.
pub fn is_invariant(p: &Polynomial) -> bool {
    apply_permutation(p, &Permutation::swap(1, 2)) == *p
        && apply_permutation(p, &Permutation::cycle()) == *p
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ring::RingCtx;

    fn xd_ring() -> Arc<RingCtx> {
        RingCtx::lex(&["x1", "x2", "x3", "d1", "d2", "d3", "L"])
    }

    #[test]
    fn group_laws_hold() {
        let all = Permutation::all();
        assert_eq!(all.len(), 6);
        for a in &all {
            assert_eq!(a.compose(&a.inverse()), Permutation::IDENTITY);
            assert_eq!(a.inverse().compose(a), Permutation::IDENTITY);
            for b in &all {
                // Closure: the composition is again one of the six.
                assert!(all.contains(&a.compose(b)));
                for c in &all {
                    let left = a.compose(b).compose(c);
                    let right = a.compose(&b.compose(c));
                    assert_eq!(left, right);
                }
            }
        }
        // S3 is not abelian: the two generators do not commute.
        let s = Permutation::swap(1, 2);
        let r = Permutation::cycle();
        assert_ne!(s.compose(&r), r.compose(&s));
    }

    #[test]
    fn renaming_acts_on_both_families() {
        let ring = xd_ring();
        let p = ring.parse("x1*d2 + L").unwrap();
        let swapped = apply_permutation(&p, &Permutation::swap(1, 2));
        assert_eq!(swapped, ring.parse("x2*d1 + L").unwrap());
        let cycled = apply_permutation(&p, &Permutation::cycle());
        assert_eq!(cycled, ring.parse("x2*d3 + L").unwrap());
    }

    #[test]
    fn action_is_a_group_action() {
        let ring = xd_ring();
        let p = ring.parse("x1^2*d3 - 2*x2 + d1*L").unwrap();
        for a in Permutation::all() {
            for b in Permutation::all() {
                let stepwise = apply_permutation(&apply_permutation(&p, &b), &a);
                let composed = apply_permutation(&p, &a.compose(&b));
                assert_eq!(stepwise, composed);
            }
        }
    }

    #[test]
    fn symmetrize_projects_onto_invariants() {
        let ring = xd_ring();
        let p = ring.parse("x1^2*d2").unwrap();
        let s = symmetrize(&p);
        assert!(is_invariant(&s));
        // Idempotence on the already-invariant image.
        assert_eq!(symmetrize(&s), s);
        // An invariant polynomial is its own average.
        let inv = ring.parse("x1 + x2 + x3").unwrap();
        assert_eq!(symmetrize(&inv), inv);
        assert!(is_invariant(&inv));
        assert!(!is_invariant(&p));
    }

    #[test]
    fn symmetrize_of_single_variable() {
        let ring = xd_ring();
        let s = symmetrize(&ring.parse("3*x1").unwrap());
        assert_eq!(s, ring.parse("x1 + x2 + x3").unwrap());
    }

    #[test]
    fn rings_without_columns_are_fixed() {
        let ring = RingCtx::lex(&["E10", "L"]);
        let p = ring.parse("E10^2 - L").unwrap();
        assert_eq!(apply_permutation(&p, &Permutation::cycle()), p);
        assert!(is_invariant(&p));
    }
}
