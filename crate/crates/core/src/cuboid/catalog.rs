//! The named polynomials of the cuboid theory, parsed once and validated.
//!
//! Everything downstream (the homomorphism, the verification procedures,
//! the command-line surface) works against this catalog, so the entries are
//! frozen here as text in canonical variables and cross-checked on first
//! access: the elementary multisymmetric polynomials must be invariant, the
//! relabeled generators `c1, c2, c3` must be permutation-equivariant, and
//! the symmetrized basis candidates must reproduce their reference
//! expansions term for term. A failure panics naming the entry, since a
//! corrupted catalog invalidates every later result.

use std::sync::Arc;

use once_cell::sync::Lazy;

use crate::ring::{
    apply_permutation, is_invariant, symmetrize, Permutation, Polynomial, RingCtx, Substitution,
};

/// E-ring variable labels in catalog order. Index `k` matches `e_xd[k]`
/// (the φ-image) and `r[k]` (the linking generator).
pub const E_LABELS: [&str; 9] = [
    "E10", "E20", "E30", "E01", "E02", "E03", "E21", "E11", "E12",
];

/// Degree pairs `(i, j)` of the nine elementary multisymmetric
/// polynomials, in catalog order: `e_xd[k]` has degree `i` in the edges and
/// `j` in the face diagonals.
pub const E_DEGREES: [(u32, u32); 9] = [
    (1, 0),
    (2, 0),
    (3, 0),
    (0, 1),
    (0, 2),
    (0, 3),
    (2, 1),
    (1, 1),
    (1, 2),
];

const E_XD_TEXT: [&str; 9] = [
    "x1 + x2 + x3",
    "x1*x2 + x2*x3 + x3*x1",
    "x1*x2*x3",
    "d1 + d2 + d3",
    "d1*d2 + d2*d3 + d3*d1",
    "d1*d2*d3",
    "x1*x2*d3 + x2*x3*d1 + x3*x1*d2",
    "x1*d2 + d1*x2 + x2*d3 + d2*x3 + x3*d1 + d3*x1",
    "x1*d2*d3 + x2*d3*d1 + x3*d1*d2",
];

/// The cuboid equations' left-hand sides: `p[0]` relates the edges to the
/// space diagonal, `p[1..=3]` relate edge pairs to face diagonals, and
/// `p[4..=6]` relate each face diagonal and its opposite edge to the space
/// diagonal.
const P_TEXT: [&str; 7] = [
    "x1^2 + x2^2 + x3^2 - L^2",
    "x1^2 + x2^2 - d3^2",
    "x2^2 + x3^2 - d1^2",
    "x3^2 + x1^2 - d2^2",
    "d3^2 + x3^2 - L^2",
    "d1^2 + x1^2 - L^2",
    "d2^2 + x2^2 - L^2",
];

/// Degree pairs of the five partial (column-1-stabilizer) invariant
/// families, in catalog order for `f`.
pub const F_DEGREES: [(u32, u32); 5] = [(1, 0), (2, 0), (0, 1), (0, 2), (1, 1)];

const F_TEXT: [[&str; 3]; 5] = [
    ["x2 + x3", "x3 + x1", "x1 + x2"],
    ["x2*x3", "x3*x1", "x1*x2"],
    ["d2 + d3", "d3 + d1", "d1 + d2"],
    ["d2*d3", "d3*d1", "d1*d2"],
    ["x2*d3 + x3*d2", "x3*d1 + x1*d3", "x1*d2 + x2*d1"],
];

/// The seven kernel generators in the E-ring.
const Q_TEXT: [&str; 7] = [
    "4*E01*E02*E20 - E02*E10^2*E01 - E01^3*E20 + E10*E11*E01^2 - E11^2*E01 \
     - 2*E10*E01*E12 + 3*E03*E10^2 - 9*E03*E20 - 3*E21*E02 + E21*E01^2 + 3*E11*E12",
    "4*E10*E20*E02 - E20*E01^2*E10 - E10^3*E02 + E01*E11*E10^2 - E11^2*E10 \
     - 2*E01*E10*E21 + 3*E30*E01^2 - 9*E30*E02 - 3*E12*E20 + E12*E10^2 + 3*E11*E21",
    "9*E21*E12 - E01^2*E10*E21 - 6*E10*E11*E12 - 6*E01*E12*E20 + 5*E01*E10^2*E12 \
     - 3*E11^3 + 7*E10*E11^2*E01 + 12*E11*E20*E02 - 3*E01^2*E11*E20 \
     - 3*E02*E10^2*E11 - 4*E01^2*E10^2*E11 - 81*E03*E30 + 18*E01*E02*E30 \
     - 3*E01^3*E30 + 36*E20*E10*E03 - 9*E03*E10^3 - 16*E01*E02*E20*E10 \
     + 4*E01^3*E10*E20 + 4*E01*E10^3*E02",
    "3*E01*E21^2 - 2*E01^2*E21*E20 - 9*E01*E12*E30 + E10*E12*E01*E20 \
     - E11^2*E20*E01 + 3*E01^2*E30*E11 + E11*E20*E01^2*E10 - 3*E01*E30*E02*E10 \
     + 4*E01*E20^2*E02 - E01^3*E20^2 - E01*E20*E10^2*E02",
    "-27*E10*E21*E03 + E10*E01^3*E21 + 9*E10*E12^2 - E11^2*E10*E01^2 \
     - 6*E02*E12*E10^2 - 2*E01^2*E12*E10^2 - 3*E02*E11^2*E10 - E01^2*E10^3*E02 \
     + 9*E11*E03*E10^2 + 3*E01*E02*E10^2*E11 + E01^3*E11*E10^2 - 3*E10^3*E02^2 \
     + 3*E10^3*E01*E03 + 12*E10*E20*E02^2 + E02*E20*E01^2*E10 - E01^4*E20*E10 \
     - 18*E10*E01*E03*E20 + 3*E11*E01*E10*E12",
    "-27*E03*E21 + E21*E01^3 + 9*E12^2 + 3*E12*E01*E11 - 2*E01^2*E10*E12 \
     - 3*E02*E11^2 - E01^2*E11^2 + 9*E03*E11*E10 - 3*E10^2*E02^2 \
     + 3*E01*E02*E11*E10 + E01^3*E11*E10 - 18*E20*E01*E03 + 3*E03*E01*E10^2 \
     - 6*E02*E10*E12 - E01^4*E20 + 12*E02^2*E20 + E01^2*E02*E20 - E01^2*E10^2*E02",
    "3*E21^2 - 2*E20*E01*E21 - 9*E30*E12 + E10*E12*E20 - E20*E11^2 + 3*E30*E11*E01 \
     + E10*E20*E11*E01 - 3*E02*E10*E30 + 4*E20^2*E02 - E01^2*E20^2 - E10^2*E20*E02",
];

/// The previously derived factor equations in E-form, in their derivation
/// order. `eform_prev[0]` maps to `p0` under φ; the others convert to
/// combinations of the symmetrized basis candidates.
const EFORM_PREV_TEXT: [&str; 8] = [
    "E10^2 - 2*E20 - L^2",
    "E01^2 - 2*E02 - 2*L^2",
    "2*E12 + 6*E30 - 2*E01*E11 + E10*E01^2 + 3*E10*L^2 - E10^3",
    "2*E21 + 6*E03 - 2*E10*E11 + E01*E10^2 + 5*E01*L^2 - E01^3",
    "8*E10*E12 - 8*E01*E21 - 8*E11^2 + 4*E01^2*E10^2 - E01^4 - 3*E10^4 \
     + 10*E10^2*L^2 + 4*E01^2*L^2 + L^4",
    "-8*E10*E12 + 8*E01*E21 - 8*E11^2 + 4*E01^2*E10^2 - E10^4 - 3*E01^4 \
     + 20*E01^2*L^2 - 2*E10^2*L^2 - 5*L^4",
    "4*E11*E21 - 2*E11*E01^3 + 6*E12*E01^2 + 2*E12*E10^2 - E10^3*E01^2 \
     + E10*E01^4 - 2*E12*L^2 - E10*E01^2*L^2 + 2*E10^3*L^2 - 2*E10*L^4",
    "4*E11*E12 - 2*E11*E10^3 + 6*E21*E10^2 + 2*E21*E01^2 - E01^3*E10^2 \
     + E01*E10^4 + 2*E21*L^2 - 2*E11*E10*L^2 + 2*E01*E10^2*L^2 + E01^3*L^2 \
     - 3*E01*L^4",
];

/// Reference expansions for the symmetrized basis candidates: each is a sum
/// of a multiplier times the matching relabeled generator, exactly as the
/// expansions are displayed. `ptilde[0]` is `p0` itself (empty multiplier
/// row handled separately).
const PTILDE_MULTIPLIERS: [[&str; 3]; 7] = [
    ["1", "1", "1"],
    ["d1", "d2", "d3"],
    ["x1", "x2", "x3"],
    ["x1*d1", "x2*d2", "x3*d3"],
    ["x1^2", "x2^2", "x3^2"],
    ["d1^2", "d2^2", "d3^2"],
    ["x1^2*d1^2", "x2^2*d2^2", "x3^2*d3^2"],
];

/// Multipliers defining the symmetrized candidates: the k-th candidate
/// (k ≥ 2) is `symmetrize(3 * multiplier * c1)`.
const PTILDE_SYMMETRIZER_MULTIPLIERS: [&str; 7] =
    ["1", "d1", "x1", "x1*d1", "x1^2", "d1^2", "x1^2*d1^2"];

/// Every named polynomial of the theory, with its three rings.
pub struct Catalog {
    /// The multisymmetric working ring: `x1 > x2 > x3 > d1 > d2 > d3 > L`.
    pub xd: Arc<RingCtx>,
    /// The E-ring of formal elementary-multisymmetric values, ordered
    /// `E21 > E12 > E11 > E30 > E03 > E20 > E02 > E10 > E01 > L`.
    pub e: Arc<RingCtx>,
    /// The joint ring containing both variable families, with the xd
    /// variables greatest so they can be eliminated.
    pub joint: Arc<RingCtx>,
    /// Cuboid equation left-hand sides `p0..p6` in the xd-ring.
    pub p: [Polynomial; 7],
    /// Diagonal-labeled ideal generators: `c[i]` contains `d_{i+1}`, so
    /// column permutations act on the labels directly (`c1 = p2`,
    /// `c2 = p3`, `c3 = p1`).
    pub c: [Polynomial; 3],
    /// φ-images of the nine E-variables, in `E_LABELS` order.
    pub e_xd: [Polynomial; 9],
    /// The fifteen partial invariants `f[family][column]`, families in
    /// `F_DEGREES` order.
    pub f: [[Polynomial; 3]; 5],
    /// The seven kernel generators, in the E-ring.
    pub q: [Polynomial; 7],
    /// Linking generators `r[k] = E_k - e_k` in the joint ring; their
    /// elimination ideal is the kernel of φ.
    pub r: [Polynomial; 9],
    /// The eight symmetrized basis candidates, built by group averaging.
    pub ptilde: [Polynomial; 8],
    /// Reference expansions the candidates must match term for term.
    pub ptilde_reference: [Polynomial; 8],
    /// The eight previously derived factor equations in E-form.
    pub eform_prev: [Polynomial; 8],
}

impl Catalog {
    /// Elementary multisymmetric polynomial of degree `i` in the edges and
    /// `j` in the face diagonals, as an xd-ring polynomial.
    pub fn e_by_degrees(&self, i: u32, j: u32) -> Option<&Polynomial> {
        E_DEGREES
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .map(|k| &self.e_xd[k])
    }

    /// E-ring variable of degree pair `(i, j)`.
    pub fn e_var(&self, i: u32, j: u32) -> Option<Polynomial> {
        E_DEGREES
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .map(|k| self.e.var(E_LABELS[k]).expect("E variable exists"))
    }

    /// Partial invariant of degree pair `(i, j)` attached to `column`
    /// (1-based).
    pub fn f_by_degrees(&self, i: u32, j: u32, column: usize) -> Option<&Polynomial> {
        assert!((1..=3).contains(&column), "column must be 1, 2, or 3");
        F_DEGREES
            .iter()
            .position(|&(a, b)| (a, b) == (i, j))
            .map(|k| &self.f[k][column - 1])
    }

    /// Injects an xd-ring polynomial into the joint ring by name.
    pub fn xd_to_joint(&self, p: &Polynomial) -> Polynomial {
        let sub = Substitution::matching_names(&self.xd, &self.joint);
        sub.apply(p).expect("xd variables all exist in the joint ring")
    }

    /// Injects an E-ring polynomial into the joint ring by name.
    pub fn e_to_joint(&self, p: &Polynomial) -> Polynomial {
        let sub = Substitution::matching_names(&self.e, &self.joint);
        sub.apply(p).expect("E variables all exist in the joint ring")
    }

    /// Extracts a joint-ring polynomial that uses only E-variables and `L`
    /// back into the E-ring. Returns `None` when an xd variable occurs.
    pub fn joint_to_e(&self, p: &Polynomial) -> Option<Polynomial> {
        let sub = Substitution::matching_names(&self.joint, &self.e);
        sub.apply(p).ok()
    }
}

fn parse_entry(ring: &Arc<RingCtx>, name: &str, text: &str) -> Polynomial {
    ring.parse(text)
        .unwrap_or_else(|e| panic!("catalog entry {name} does not parse: {e}"))
}

fn build() -> Catalog {
    let xd = RingCtx::lex(&["x1", "x2", "x3", "d1", "d2", "d3", "L"]);
    let e = RingCtx::lex_with_priority(
        &["E10", "E20", "E30", "E01", "E02", "E03", "E21", "E11", "E12", "L"],
        &["E21", "E12", "E11", "E30", "E03", "E20", "E02", "E10", "E01", "L"],
    );
    let joint = RingCtx::lex_with_priority(
        &[
            "x1", "x2", "x3", "d1", "d2", "d3", "E10", "E20", "E30", "E01", "E02", "E03", "E21",
            "E11", "E12", "L",
        ],
        &[
            "x1", "x2", "x3", "d1", "d2", "d3", "E21", "E12", "E11", "E30", "E03", "E20", "E02",
            "E10", "E01", "L",
        ],
    );

    let p: [Polynomial; 7] =
        std::array::from_fn(|k| parse_entry(&xd, &format!("p{k}"), P_TEXT[k]));
    let c = [p[2].clone(), p[3].clone(), p[1].clone()];
    let e_xd: [Polynomial; 9] =
        std::array::from_fn(|k| parse_entry(&xd, E_LABELS[k], E_XD_TEXT[k]));
    let f: [[Polynomial; 3]; 5] = std::array::from_fn(|fam| {
        std::array::from_fn(|col| {
            let (i, j) = F_DEGREES[fam];
            parse_entry(&xd, &format!("f[{i},{j}][{}]", col + 1), F_TEXT[fam][col])
        })
    });
    let q: [Polynomial; 7] =
        std::array::from_fn(|k| parse_entry(&e, &format!("q{}", k + 1), Q_TEXT[k]));

    let xd_in_joint = Substitution::matching_names(&xd, &joint);
    let r: [Polynomial; 9] = std::array::from_fn(|k| {
        let e_var = joint.var(E_LABELS[k]).expect("joint ring has E variables");
        let image = xd_in_joint
            .apply(&e_xd[k])
            .expect("xd variables exist in the joint ring");
        &e_var - &image
    });

    let mut ptilde_vec = Vec::with_capacity(8);
    ptilde_vec.push(p[0].clone());
    for text in PTILDE_SYMMETRIZER_MULTIPLIERS {
        let m = parse_entry(&xd, "multiplier", text);
        let seed = (&m * &c[0]).scale(&crate::rational::int(3));
        ptilde_vec.push(symmetrize(&seed));
    }
    let ptilde: [Polynomial; 8] = ptilde_vec.try_into().expect("eight candidates");

    let mut reference_vec = Vec::with_capacity(8);
    reference_vec.push(p[0].clone());
    for row in PTILDE_MULTIPLIERS {
        let mut acc = Polynomial::zero(&xd);
        for (text, gen) in row.iter().zip(&c) {
            let m = parse_entry(&xd, "reference multiplier", text);
            acc = &acc + &(&m * gen);
        }
        reference_vec.push(acc);
    }
    let ptilde_reference: [Polynomial; 8] =
        reference_vec.try_into().expect("eight reference expansions");

    let eform_prev: [Polynomial; 8] =
        std::array::from_fn(|k| parse_entry(&e, &format!("eform_prev[{k}]"), EFORM_PREV_TEXT[k]));

    let cat = Catalog {
        xd,
        e,
        joint,
        p,
        c,
        e_xd,
        f,
        q,
        r,
        ptilde,
        ptilde_reference,
        eform_prev,
    };
    validate(&cat);
    cat
}

/// Structural sanity checks run once at construction. These guard the
/// catalog itself; the claim-level checks live in the verification
/// procedures.
fn validate(cat: &Catalog) {
    for (k, e) in cat.e_xd.iter().enumerate() {
        assert!(
            is_invariant(e),
            "catalog entry {} is not multisymmetric",
            E_LABELS[k]
        );
    }
    assert!(is_invariant(&cat.p[0]), "catalog entry p0 is not multisymmetric");
    for sigma in Permutation::all() {
        for i in 0..3 {
            let moved = apply_permutation(&cat.c[i], &sigma);
            let target = &cat.c[sigma.apply(i + 1) - 1];
            assert!(
                moved == *target,
                "catalog entries c1..c3 are not equivariant under {sigma:?}"
            );
        }
    }
    for (k, (pt, reference)) in cat.ptilde.iter().zip(&cat.ptilde_reference).enumerate() {
        assert!(
            pt == reference,
            "catalog entry ptilde{} does not match its reference expansion",
            k + 1
        );
    }
}

static CATALOG: Lazy<Catalog> = Lazy::new(build);

/// The process-wide catalog, constructed and validated on first access.
pub fn catalog() -> &'static Catalog {
    &CATALOG
}
