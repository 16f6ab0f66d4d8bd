//! Buchberger completion.
//!
//! The working basis is append-only and kept monic. Critical pairs go
//! through the coprime criterion and the chain criterion before their
//! S-polynomial is reduced. Every surviving element records how it was
//! derived (which earlier elements, with which term multipliers), so the
//! transform onto the original generators can be replayed afterwards for
//! exactly the elements that survive minimalization; S-polynomials that
//! reduce to zero never cost transform arithmetic.
//!
//! The final basis is minimalized, fully auto-reduced, made monic, and
//! sorted descending by leading monomial. That form is unique for a given
//! ideal and order, which is what makes the output canonical regardless of
//! the pair schedule.

use std::cmp::Reverse;
use std::collections::{BinaryHeap, HashSet};
use std::sync::Arc;

use num_traits::One;

use super::{Cofactors, GroebnerBasis};
use crate::rational::Rational;
use crate::ring::{same_ring, Monomial, Polynomial, RingCtx};

/// Order in which critical pairs are processed. The reduced result is
/// schedule-independent; the selection only affects running time.
#[derive(Clone, Copy, Debug)]
pub enum PairSelection {
    /// Smallest leading-monomial lcm in the ring's order first, ties broken
    /// by element indices. The default.
    Normal,
    /// Deterministic pseudo-random schedule derived from the seed. Exists
    /// so tests can demonstrate schedule independence.
    Random(u64),
}

/// How a working element came to be: an input generator (divided by its
/// leading coefficient) or a combination of earlier elements (an
/// S-polynomial minus reduction steps, divided by `scale`).
enum Origin {
    Input {
        generator: usize,
        scale: Rational,
    },
    Derived {
        parts: Vec<(usize, Rational, Monomial)>,
        scale: Rational,
    },
}

#[derive(PartialEq, Eq, PartialOrd, Ord)]
struct PairKey {
    primary: Vec<u32>,
    secondary: u64,
    i: usize,
    j: usize,
}

fn splitmix(mut z: u64) -> u64 {
    z = z.wrapping_add(0x9E37_79B9_7F4A_7C15);
    z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
    z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
    z ^ (z >> 31)
}

struct Engine<'a> {
    ring: Arc<RingCtx>,
    selection: PairSelection,
    generators: &'a [Polynomial],
    /// Monic working basis, append-only.
    polys: Vec<Polynomial>,
    lms: Vec<Monomial>,
    origins: Vec<Origin>,
    queue: BinaryHeap<Reverse<PairKey>>,
    pending: HashSet<(usize, usize)>,
}

impl<'a> Engine<'a> {
    fn pair_key(&self, i: usize, j: usize) -> PairKey {
        match self.selection {
            PairSelection::Normal => PairKey {
                primary: self.ring.order_key(&self.lms[i].lcm(&self.lms[j])),
                secondary: 0,
                i,
                j,
            },
            PairSelection::Random(seed) => PairKey {
                primary: Vec::new(),
                secondary: splitmix(seed ^ splitmix((i as u64) << 32 | j as u64)),
                i,
                j,
            },
        }
    }

    fn push_element(&mut self, monic: Polynomial, origin: Origin) {
        debug_assert!(monic.leading_coefficient().is_some_and(One::is_one));
        let idx = self.polys.len();
        self.lms.push(monic.leading_monomial().unwrap().clone());
        self.polys.push(monic);
        self.origins.push(origin);
        for s in 0..idx {
            self.queue.push(Reverse(self.pair_key(s, idx)));
            self.pending.insert((s, idx));
        }
    }

    /// Chain criterion: the pair (i, j) is redundant when some other
    /// element's leading monomial divides the pair's lcm and both pairs it
    /// forms with i and j are already settled.
    fn chain_criterion(&self, i: usize, j: usize, lcm: &Monomial) -> bool {
        (0..self.polys.len()).any(|k| {
            k != i
                && k != j
                && self.lms[k].divides(lcm)
                && !self.pending.contains(&ordered(i, k))
                && !self.pending.contains(&ordered(j, k))
        })
    }

    fn complete(&mut self) {
        while let Some(Reverse(key)) = self.queue.pop() {
            let (i, j) = (key.i, key.j);
            self.pending.remove(&(i, j));
            if self.lms[i].coprime(&self.lms[j]) {
                continue;
            }
            let lcm = self.lms[i].lcm(&self.lms[j]);
            if self.chain_criterion(i, j, &lcm) {
                continue;
            }
            // Monic elements make the S-polynomial multipliers plain
            // monomials.
            let ui = lcm.div(&self.lms[i]).unwrap();
            let uj = lcm.div(&self.lms[j]).unwrap();
            let s = &self.polys[i].mul_term(&Rational::one(), &ui)
                - &self.polys[j].mul_term(&Rational::one(), &uj);
            if s.is_zero() {
                continue;
            }
            let (nf, steps) = normal_form_traced(&s, &self.polys, None);
            if nf.is_zero() {
                continue;
            }
            let scale = nf.leading_coefficient().unwrap().clone();
            let monic = nf.monic();
            let mut parts = Vec::with_capacity(steps.len() + 2);
            parts.push((i, Rational::one(), ui));
            parts.push((j, -Rational::one(), uj));
            parts.extend(
                steps
                    .into_iter()
                    .map(|(k, t, q)| (k, -t, q)),
            );
            self.push_element(monic, Origin::Derived { parts, scale });
        }
    }

    /// Indices of a minimal generating subset: elements whose leading
    /// monomial is not divisible by another kept element's leading
    /// monomial (first occurrence wins on ties).
    fn minimalize(&self) -> Vec<usize> {
        let n = self.polys.len();
        let mut kept = Vec::new();
        for i in 0..n {
            let redundant = (0..n).any(|j| {
                j != i
                    && self.lms[j].divides(&self.lms[i])
                    && (self.lms[j] != self.lms[i] || j < i)
            });
            if !redundant {
                kept.push(i);
            }
        }
        kept
    }

    /// Replay derivations to express working elements over the original
    /// generators. Only elements reachable from `kept` are materialized.
    fn replay_rows(&self, kept: &[usize]) -> Vec<Vec<Polynomial>> {
        let n = self.polys.len();
        let mut needed = vec![false; n];
        let mut stack: Vec<usize> = kept.to_vec();
        while let Some(idx) = stack.pop() {
            if needed[idx] {
                continue;
            }
            needed[idx] = true;
            if let Origin::Derived { parts, .. } = &self.origins[idx] {
                stack.extend(parts.iter().map(|(k, _, _)| *k));
            }
        }
        let zero_row = || vec![Polynomial::zero(&self.ring); self.generators.len()];
        let mut rows: Vec<Option<Vec<Polynomial>>> = (0..n).map(|_| None).collect();
        for idx in 0..n {
            if !needed[idx] {
                continue;
            }
            let row = match &self.origins[idx] {
                Origin::Input { generator, scale } => {
                    let mut row = zero_row();
                    row[*generator] = Polynomial::constant(&self.ring, scale.recip());
                    row
                }
                Origin::Derived { parts, scale } => {
                    let inv = scale.recip();
                    let mut row = zero_row();
                    for (k, c, m) in parts {
                        let source = rows[*k].as_ref().expect("parts refer to earlier elements");
                        let factor = c * &inv;
                        for (acc, r) in row.iter_mut().zip(source) {
                            if !r.is_zero() {
                                *acc = acc.sub_scaled(&-&factor, m, r);
                            }
                        }
                    }
                    row
                }
            };
            rows[idx] = Some(row);
        }
        kept.iter()
            .map(|&idx| rows[idx].take().expect("kept element has a row"))
            .collect()
    }
}

fn ordered(a: usize, b: usize) -> (usize, usize) {
    if a < b {
        (a, b)
    } else {
        (b, a)
    }
}

/// Full normal form with a step trace: each entry `(k, t, q)` subtracts
/// `t * q * basis[k]`. `skip` temporarily hides one basis element (used by
/// auto-reduction). Divisor ties go to the smallest index.
fn normal_form_traced(
    p: &Polynomial,
    basis: &[Polynomial],
    skip: Option<usize>,
) -> (Polynomial, Vec<(usize, Rational, Monomial)>) {
    let mut steps = Vec::new();
    let mut rem_terms: Vec<(Rational, Monomial)> = Vec::new();
    let mut work = p.clone();
    'outer: while let Some((wc, wm)) = work.leading_term() {
        for (k, g) in basis.iter().enumerate() {
            if Some(k) == skip {
                continue;
            }
            let (gc, gm) = g.leading_term().expect("basis elements are nonzero");
            if gm.divides(wm) {
                let q = wm.div(gm).unwrap();
                let t = wc / gc;
                work = work.sub_scaled(&t, &q, g);
                steps.push((k, t, q));
                continue 'outer;
            }
        }
        rem_terms.push((wc.clone(), wm.clone()));
        work = work.tail();
    }
    (Polynomial::from_terms(p.ring(), rem_terms), steps)
}

/// Buchberger's algorithm with the normal selection strategy and transform
/// tracking: the canonical reduced basis plus rows expressing each element
/// over `gens`.
pub fn buchberger(gens: &[Polynomial]) -> GroebnerBasis {
    buchberger_with(gens, PairSelection::Normal, true)
}

/// Buchberger's algorithm with an explicit pair schedule and optional
/// transform tracking. Skipping the transform avoids all replay work; the
/// element list is identical either way.
pub fn buchberger_with(
    gens: &[Polynomial],
    selection: PairSelection,
    track_transform: bool,
) -> GroebnerBasis {
    let ring = gens
        .first()
        .map(|p| Arc::clone(p.ring()))
        .expect("at least one polynomial is required to identify the ring");
    for g in gens {
        assert!(
            same_ring(&ring, g.ring()),
            "polynomials belong to different rings"
        );
    }

    let mut engine = Engine {
        ring: Arc::clone(&ring),
        selection,
        generators: gens,
        polys: Vec::new(),
        lms: Vec::new(),
        origins: Vec::new(),
        queue: BinaryHeap::new(),
        pending: HashSet::new(),
    };
    for (g, poly) in gens.iter().enumerate() {
        if poly.is_zero() {
            continue;
        }
        engine.push_element(
            poly.monic(),
            Origin::Input {
                generator: g,
                scale: poly.leading_coefficient().unwrap().clone(),
            },
        );
    }
    engine.complete();

    let kept = engine.minimalize();
    let mut elements: Vec<Polynomial> = kept.iter().map(|&i| engine.polys[i].clone()).collect();
    let mut rows: Option<Vec<Vec<Polynomial>>> = if track_transform {
        Some(engine.replay_rows(&kept))
    } else {
        None
    };

    // Auto-reduce to the unique reduced basis. Leading monomials are
    // pairwise non-divisible already, so only tails change and the basis
    // stays monic.
    loop {
        let mut changed = false;
        for i in 0..elements.len() {
            let (nf, steps) = normal_form_traced(&elements[i], &elements, Some(i));
            if nf == elements[i] {
                continue;
            }
            changed = true;
            if let Some(rows) = rows.as_mut() {
                for (k, t, q) in &steps {
                    let source = std::mem::take(&mut rows[*k]);
                    for (acc, r) in rows[i].iter_mut().zip(&source) {
                        if !r.is_zero() {
                            *acc = acc.sub_scaled(t, q, r);
                        }
                    }
                    rows[*k] = source;
                }
            }
            elements[i] = nf;
        }
        if !changed {
            break;
        }
    }

    // Canonical presentation: descending leading monomials.
    let mut order: Vec<usize> = (0..elements.len()).collect();
    order.sort_by(|&a, &b| {
        ring.cmp(
            elements[b].leading_monomial().unwrap(),
            elements[a].leading_monomial().unwrap(),
        )
    });
    let elements: Vec<Polynomial> = order.iter().map(|&i| elements[i].clone()).collect();
    let transform = rows.map(|rows| {
        order
            .iter()
            .map(|&i| Cofactors::new(rows[i].clone()))
            .collect()
    });

    GroebnerBasis::new(ring, gens.to_vec(), elements, transform)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::groebner::{ideal_equal, reduce};
    use crate::ring::RingCtx;

    fn ring2() -> Arc<RingCtx> {
        RingCtx::lex(&["x1", "d1"])
    }

    #[test]
    fn two_generator_example() {
        let r = ring2();
        let gens = vec![r.parse("x1^2").unwrap(), r.parse("x1*d1 - d1").unwrap()];
        let gb = buchberger(&gens);
        let expect = vec![r.parse("x1^2").unwrap(), r.parse("d1").unwrap()];
        assert_eq!(gb.elements(), &expect[..]);
        assert!(gb.transform_is_exact());
        assert!(gb.spolys_reduce_to_zero());
    }

    #[test]
    fn zero_ideal_yields_empty_basis() {
        let r = ring2();
        let gb = buchberger(&[Polynomial::zero(&r)]);
        assert!(gb.elements().is_empty());
        assert!(gb.transform_is_exact());
    }

    #[test]
    fn constant_generator_collapses_to_one() {
        let r = ring2();
        let gb = buchberger(&[r.parse("5").unwrap(), r.parse("x1").unwrap()]);
        assert_eq!(gb.elements(), &[Polynomial::one(&r)][..]);
        assert!(gb.transform_is_exact());
    }

    #[test]
    fn output_is_reduced_and_sorted() {
        let r = RingCtx::lex(&["x1", "d1", "L"]);
        let gens = vec![
            r.parse("3*x1 - d1").unwrap(),
            r.parse("x1*d1 - L^2").unwrap(),
            r.parse("d1^2 - d1").unwrap(),
        ];
        let gb = buchberger(&gens);
        for (i, e) in gb.elements().iter().enumerate() {
            assert!(e.leading_coefficient().unwrap().is_one(), "monic");
            // No term of e is divisible by another element's head.
            for (j, other) in gb.elements().iter().enumerate() {
                if i == j {
                    continue;
                }
                let head = other.leading_monomial().unwrap();
                assert!(
                    e.terms().iter().all(|(_, m)| !head.divides(m)),
                    "fully auto-reduced"
                );
            }
        }
        for w in gb.elements().windows(2) {
            assert_eq!(
                r.cmp(
                    w[0].leading_monomial().unwrap(),
                    w[1].leading_monomial().unwrap()
                ),
                std::cmp::Ordering::Greater
            );
        }
        assert!(gb.transform_is_exact());
        assert!(gb.spolys_reduce_to_zero());
    }

    #[test]
    fn schedule_does_not_change_the_basis() {
        let r = RingCtx::lex(&["x1", "d1", "L"]);
        let gens = vec![
            r.parse("x1^2 + d1*L").unwrap(),
            r.parse("x1*d1^2 - L^3").unwrap(),
            r.parse("d1^3 - x1*L^2").unwrap(),
        ];
        let reference = buchberger(&gens);
        for seed in [1u64, 7, 42, 1234] {
            let shuffled = buchberger_with(&gens, PairSelection::Random(seed), true);
            assert_eq!(reference.elements(), shuffled.elements());
            assert!(shuffled.transform_is_exact());
        }
    }

    #[test]
    fn generators_reduce_to_zero_against_their_basis() {
        let r = RingCtx::lex(&["x1", "d1", "L"]);
        let gens = vec![
            r.parse("x1*d1 - L^2").unwrap(),
            r.parse("x1^2*d1 - x1*L + d1").unwrap(),
        ];
        let gb = buchberger(&gens);
        for g in &gens {
            let (rem, _) = reduce(g, gb.elements());
            assert!(rem.is_zero());
        }
        assert!(ideal_equal(&gens, gb.elements()));
    }
}
