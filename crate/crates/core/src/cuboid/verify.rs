//! Verification procedures. Each one rechecks a cluster of computational
//! claims and reports per-claim outcomes under stable ids.
//!
//! Outcomes are three-valued. `Pass` means the recorded statement holds
//! exactly as written. `PassWithCorrections` means the statement fails as
//! recorded, a specific correction is applied, and the corrected statement
//! holds exactly; the witness describes both readings. `Fail` means neither
//! holds. Corrections are never silent: the defective reading is always
//! recomputed alongside the corrected one, so a claim cannot drift into
//! `Pass` while the correction is still needed.

use std::time::Instant;

use crate::groebner::reduce;
use crate::rational::{int, ratio, Rational};
use crate::ring::{apply_permutation, is_invariant, Permutation, Polynomial};

use super::catalog::catalog;
use super::maps::{phi, sym_cofactors, Session};
use super::report::{ClaimOutcome, VerificationReport};

/// Runs every verification procedure, cheapest first, against one shared
/// session so the expensive bases are computed (or loaded) once.
pub fn verify_all(session: &Session) -> Vec<VerificationReport> {
    vec![
        verify_phi_kernel(),
        verify_partial_relations(),
        verify_sym_basis(session),
        verify_factor_conversions(session),
        verify_kernel_basis(session),
    ]
}

/// The seven candidate kernel generators vanish under φ, and the vanishing
/// check is discriminating (a perturbed generator does not vanish).
pub fn verify_phi_kernel() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("phi-kernel");
    let cat = catalog();
    for (i, q) in cat.q.iter().enumerate() {
        let image = phi(q);
        let witness = if image.is_zero() {
            format!(
                "image of the {}-term generator expands to zero",
                q.terms().len()
            )
        } else {
            format!("image is nonzero with {} terms", image.terms().len())
        };
        report.check(format!("thm2.2/phi/q{}", i + 1), image.is_zero(), witness);
    }
    let perturbed = &cat.q[0] + &cat.e.var("E10").expect("E-ring has E10");
    report.check(
        "thm2.2/phi/control",
        !phi(&perturbed).is_zero(),
        "perturbing a generator by E10 gives a nonzero image, so the zero checks can fail",
    );
    report.set_elapsed(start.elapsed());
    report
}

/// The kernel of φ computed by elimination coincides with the ideal spanned
/// by the seven candidate generators: each candidate reduces to zero against
/// the eliminated basis, each eliminated element reduces to zero against the
/// candidates' own reduced basis, and every eliminated element genuinely
/// vanishes under φ.
pub fn verify_kernel_basis(session: &Session) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("kernel-basis");
    let cat = catalog();
    let kernel = session.kernel_basis();
    report.check(
        "thm2.2/elim/count",
        kernel.len() == 14,
        format!(
            "eliminating the six xd variables leaves {} basis elements",
            kernel.len()
        ),
    );
    let non_vanishing = kernel.iter().filter(|g| !phi(g).is_zero()).count();
    report.check(
        "thm2.2/phi-gk",
        non_vanishing == 0,
        if non_vanishing == 0 {
            format!("all {} eliminated elements vanish under phi", kernel.len())
        } else {
            format!("{non_vanishing} eliminated elements have nonzero images")
        },
    );
    let mut all_q_in_kernel = true;
    for (i, q) in cat.q.iter().enumerate() {
        let (rem, _) = reduce(q, kernel);
        if !rem.is_zero() {
            all_q_in_kernel = false;
        }
        report.check(
            format!("thm2.2/kernel/q{}", i + 1),
            rem.is_zero(),
            if rem.is_zero() {
                "reduces to zero against the eliminated basis"
            } else {
                "leaves a nonzero normal form"
            },
        );
    }
    let candidate = session.kernel_candidate_basis();
    let stuck: Vec<usize> = kernel
        .iter()
        .enumerate()
        .filter(|(_, g)| !candidate.contains(g))
        .map(|(k, _)| k + 1)
        .collect();
    report.check(
        "thm2.2/span/gk-in-q",
        stuck.is_empty(),
        if stuck.is_empty() {
            format!(
                "all {} eliminated elements reduce to zero against the candidates' basis",
                kernel.len()
            )
        } else {
            format!("elements {stuck:?} do not reduce to zero")
        },
    );
    report.check(
        "thm2.2/ideal-eq",
        all_q_in_kernel && stuck.is_empty(),
        "mutual reduction succeeds in both directions, so the two ideals are equal",
    );
    report.set_elapsed(start.elapsed());
    report
}

/// The partially invariant families behave as recorded: they permute with
/// the columns, their duplicated degree tag is corrected, and the rewriting
/// relations expressing column-1 monomials over the elementary polynomials
/// hold exactly (with the one documented sign-of-variable correction).
pub fn verify_partial_relations() -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("partial-relations");
    let cat = catalog();

    for (k, name) in ["f10", "f20", "f01", "f02", "f11"].iter().enumerate() {
        let family = &cat.f[k];
        let mut mismatches = 0;
        for sigma in Permutation::all() {
            for i in 1..=3 {
                let moved = apply_permutation(&family[i - 1], &sigma);
                if moved != family[sigma.apply(i) - 1] {
                    mismatches += 1;
                }
            }
        }
        report.check(
            format!("sec4/equivariance/{name}"),
            mismatches == 0,
            if mismatches == 0 {
                "renaming the columns permutes the family the same way in all 18 cases".to_string()
            } else {
                format!("{mismatches} of 18 permutation cases disagree")
            },
        );
    }

    // The recorded catalog tags the diagonal-product family with the same
    // label as the diagonal-sum family. The duplicated tag is impossible:
    // the tag encodes the homogeneous bidegree, and the two families have
    // different ones. The correction retags the products as degree (0,2).
    let sum_deg = family_bidegree(&cat.f[2]);
    let prod_deg = family_bidegree(&cat.f[3]);
    let outcome = match (sum_deg, prod_deg) {
        (Some((0, 1)), Some((0, 2))) => ClaimOutcome::PassWithCorrections,
        _ => ClaimOutcome::Fail,
    };
    report.push(
        "sec4/eq4.3/f02-label",
        outcome,
        "the diagonal products are homogeneous of bidegree (0,2), not (0,1) as tagged; \
         the retagged family is the one the equivariance statement references",
    );

    let x1 = cat.xd.var("x1").expect("xd ring has x1");
    let d1 = cat.xd.var("d1").expect("xd ring has d1");
    let e10 = cat.e_by_degrees(1, 0).unwrap();
    let e20 = cat.e_by_degrees(2, 0).unwrap();
    let e30 = cat.e_by_degrees(3, 0).unwrap();
    let e01 = cat.e_by_degrees(0, 1).unwrap();
    let e02 = cat.e_by_degrees(0, 2).unwrap();
    let e03 = cat.e_by_degrees(0, 3).unwrap();
    let e21 = cat.e_by_degrees(2, 1).unwrap();
    let e11 = cat.e_by_degrees(1, 1).unwrap();
    let e12 = cat.e_by_degrees(1, 2).unwrap();

    identity_claim(&mut report, "sec5/eq5.7/f10", &cat.f[0][0], &(e10 - &x1));
    identity_claim(
        &mut report,
        "sec5/eq5.7/f20",
        &cat.f[1][0],
        &(&(e20 - &(&x1 * e10)) + &x1.pow(2)),
    );
    // As recorded the right side subtracts the first edge; the identity
    // only holds when it subtracts the first diagonal.
    let f01_recorded = e01 - &x1;
    let f01_corrected = e01 - &d1;
    let f01_outcome = match (cat.f[2][0] == f01_recorded, cat.f[2][0] == f01_corrected) {
        (true, _) => ClaimOutcome::Pass,
        (false, true) => ClaimOutcome::PassWithCorrections,
        (false, false) => ClaimOutcome::Fail,
    };
    report.push(
        "sec5/eq5.7/f01",
        f01_outcome,
        "recorded right side subtracts the first edge and misses by x1 - d1; \
         subtracting the first diagonal matches d2 + d3 exactly",
    );
    identity_claim(
        &mut report,
        "sec5/eq5.7/f02",
        &cat.f[3][0],
        &(&(e02 - &(&d1 * e01)) + &d1.pow(2)),
    );
    identity_claim(
        &mut report,
        "sec5/eq5.8/f11",
        &cat.f[4][0],
        &(&(&(e11 - &(&d1 * e10)) - &(&x1 * e01)) + &(&x1 * &d1).scale(&int(2))),
    );
    identity_claim(
        &mut report,
        "sec5/eq5.9/x1cube",
        &x1.pow(3),
        &(&(&(&x1.pow(2) * e10) - &(&x1 * e20)) + e30),
    );
    identity_claim(
        &mut report,
        "sec5/eq5.9/d1cube",
        &d1.pow(3),
        &(&(&(&d1.pow(2) * e01) - &(&d1 * e02)) + e03),
    );
    let third = ratio(1, 3);
    let two_thirds = ratio(2, 3);
    identity_claim(
        &mut report,
        "sec5/eq5.10/x1sq-d1",
        &(&x1.pow(2) * &d1),
        &sum(&[
            (&(&x1 * &d1) * e10).scale(&two_thirds),
            (&x1.pow(2) * e01).scale(&third),
            (&x1 * e11).scale(&third).scale(&int(-1)),
            (&d1 * e20).scale(&third).scale(&int(-1)),
            e21.scale(&third),
        ]),
    );
    identity_claim(
        &mut report,
        "sec5/eq5.10/x1-d1sq",
        &(&x1 * &d1.pow(2)),
        &sum(&[
            (&(&x1 * &d1) * e01).scale(&two_thirds),
            (&d1.pow(2) * e10).scale(&third),
            (&d1 * e11).scale(&third).scale(&int(-1)),
            (&x1 * e02).scale(&third).scale(&int(-1)),
            e12.scale(&third),
        ]),
    );
    report.set_elapsed(start.elapsed());
    report
}

/// The eight symmetrized generators: their recorded expansions, their
/// invariance, their membership in the cuboid ideal with exact cofactors,
/// the consistency of the recorded factor-equation display, and a
/// randomized completeness probe expressing invariant members of the cuboid
/// ideal over the eight generators with invariant cofactors.
pub fn verify_sym_basis(session: &Session) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("sym-basis");
    let cat = catalog();

    for k in 0..8 {
        let ok = cat.ptilde[k] == cat.ptilde_reference[k];
        report.check(
            format!("thm6.1/expand/ptilde{}", k + 1),
            ok,
            if ok {
                format!(
                    "symmetrized form matches the recorded {}-term expansion",
                    cat.ptilde[k].terms().len()
                )
            } else {
                "symmetrized form differs from the recorded expansion".to_string()
            },
        );
    }
    for k in 0..8 {
        report.check(
            format!("thm6.1/invariant/ptilde{}", k + 1),
            is_invariant(&cat.ptilde[k]),
            "fixed by a transposition and the 3-cycle, hence by the whole group",
        );
    }

    let gb = session.cuboid_ideal_basis();
    let gens = gb.generators().to_vec();
    for k in 0..8 {
        let (member, cofs) = gb.membership(&cat.ptilde[k]);
        let exact = member
            && cofs
                .as_ref()
                .map(|c| c.combine(&gens) == cat.ptilde[k])
                .unwrap_or(false);
        let witness = if exact {
            let parts = cofs.expect("membership returned cofactors");
            format!(
                "= {}",
                render_combination(&["p0", "c1", "c2", "c3"], parts.coefficients())
            )
        } else {
            "no exact cofactors over p0, c1, c2, c3".to_string()
        };
        report.check(format!("thm6.1/member/ptilde{}", k + 1), exact, witness);
    }

    // The recorded display of the eight factor equations writes the last
    // block sum with the third edge cubed. That sum is not invariant and
    // differs from the eighth generator; squaring the edge fixes both.
    let defective = sum(&[
        &cat.xd.parse("x1^2*d1^2").unwrap() * &cat.c[0],
        &cat.xd.parse("x2^2*d2^2").unwrap() * &cat.c[1],
        &cat.xd.parse("x3^3*d3^2").unwrap() * &cat.c[2],
    ]);
    let corrected = sum(&[
        &cat.xd.parse("x1^2*d1^2").unwrap() * &cat.c[0],
        &cat.xd.parse("x2^2*d2^2").unwrap() * &cat.c[1],
        &cat.xd.parse("x3^2*d3^2").unwrap() * &cat.c[2],
    ]);
    let outcome = if defective != cat.ptilde[7]
        && !is_invariant(&defective)
        && corrected == cat.ptilde[7]
    {
        ClaimOutcome::PassWithCorrections
    } else if corrected == cat.ptilde[7] && defective == cat.ptilde[7] {
        ClaimOutcome::Pass
    } else {
        ClaimOutcome::Fail
    };
    report.push(
        "sec6/eq6.10/consistency",
        outcome,
        "the recorded last equation cubes the third edge, breaking invariance; \
         with the square it coincides with the eighth generator, and the other \
         seven equations match the generators as recorded",
    );

    // Completeness probe: random invariant members of the cuboid ideal,
    // built as alpha0*p0 + alpha1*c1 + sigma(alpha1)*c2 + sigma^2(alpha1)*c3
    // with alpha0 invariant and alpha1 drawn from column-1-stable atoms,
    // must all reassemble from the eight generators with invariant
    // cofactors.
    let draws = 120;
    let mut failed: Vec<usize> = Vec::new();
    let mut rng = Rng::new(0x00C0_FFEE);
    let cycle = Permutation::cycle();
    let invariant_atoms: Vec<Polynomial> = cat
        .e_xd
        .iter()
        .cloned()
        .chain(std::iter::once(cat.xd.var("L").unwrap()))
        .collect();
    let partial_atoms: Vec<Polynomial> = vec![
        cat.xd.var("x1").unwrap(),
        cat.xd.var("d1").unwrap(),
        cat.f[0][0].clone(),
        cat.f[1][0].clone(),
        cat.f[2][0].clone(),
        cat.f[3][0].clone(),
        cat.f[4][0].clone(),
        cat.xd.var("L").unwrap(),
    ];
    for t in 0..draws {
        let alpha0 = rng.poly_from_atoms(&invariant_atoms, 3);
        let alpha1 = rng.poly_from_atoms(&partial_atoms, 3);
        let alpha2 = apply_permutation(&alpha1, &cycle);
        let alpha3 = apply_permutation(&alpha2, &cycle);
        let p = sum(&[
            &alpha0 * &cat.ptilde[0],
            &alpha1 * &cat.c[0],
            &alpha2 * &cat.c[1],
            &alpha3 * &cat.c[2],
        ]);
        let ok = is_invariant(&p)
            && matches!(sym_cofactors(session, &p), Ok(Some(_)));
        if !ok {
            failed.push(t);
        }
    }
    report.check(
        "thm6.1/probe",
        failed.is_empty(),
        if failed.is_empty() {
            format!("{draws} random members reassembled exactly from invariant cofactors")
        } else {
            format!("draws {failed:?} of {draws} could not be reassembled")
        },
    );
    report.set_elapsed(start.elapsed());
    report
}

/// The previously derived factor equations convert into combinations of the
/// eight generators: the first maps to the quadric itself; the recorded
/// combinations hold exactly, except the two with a misplaced block (and one
/// dropped operator), which hold after the documented corrections; and every
/// converted equation is a member of the ideal with invariant cofactors.
pub fn verify_factor_conversions(session: &Session) -> VerificationReport {
    let start = Instant::now();
    let mut report = VerificationReport::new("factor-conversions");
    let cat = catalog();

    let first = phi(&cat.eform_prev[0]);
    report.check(
        "sec7/eq7.1/phi",
        first == cat.p[0],
        if first == cat.p[0] {
            "image equals the quadric x1^2 + x2^2 + x3^2 - L^2 exactly"
        } else {
            "image differs from the quadric"
        },
    );

    for conversion in CONVERSIONS {
        let target = phi(&cat.eform_prev[conversion.eform]);
        let recorded = combination_value(conversion.recorded);
        let recorded_ok = recorded == target;
        match conversion.corrected {
            None => {
                report.check(
                    conversion.id,
                    recorded_ok,
                    if recorded_ok {
                        "recorded combination matches the converted equation term for term"
                            .to_string()
                    } else {
                        format!(
                            "recorded combination differs by {} terms",
                            (&recorded - &target).terms().len()
                        )
                    },
                );
            }
            Some(corrected) => {
                let corrected_ok = combination_value(corrected) == target;
                let outcome = match (recorded_ok, corrected_ok) {
                    (true, _) => ClaimOutcome::Pass,
                    (false, true) => ClaimOutcome::PassWithCorrections,
                    (false, false) => ClaimOutcome::Fail,
                };
                report.push(conversion.id, outcome, conversion.note);
            }
        }
    }

    for (id, eform) in MEMBERSHIP_IDS.iter().zip(&cat.eform_prev) {
        let image = phi(eform);
        match sym_cofactors(session, &image) {
            Ok(Some(cofs)) => {
                let nonzero = cofs.iter().filter(|h| !h.is_zero()).count();
                report.pass(
                    *id,
                    format!(
                        "image reassembles exactly from invariant cofactors on {nonzero} of 8 generators"
                    ),
                );
            }
            _ => report.check(*id, false, "image does not lie in the ideal"),
        }
    }
    report.set_elapsed(start.elapsed());
    report
}

/// A frozen conversion: the converted equation index into the catalog's
/// E-form list, the combination as recorded (E-ring coefficient text per
/// generator index), and the corrected combination when the recorded one is
/// defective.
struct Conversion {
    id: &'static str,
    eform: usize,
    recorded: &'static [(&'static str, usize)],
    corrected: Option<&'static [(&'static str, usize)]>,
    note: &'static str,
}

const CONVERSIONS: [Conversion; 7] = [
    Conversion {
        id: "sec7/eq7.3/combination",
        eform: 1,
        recorded: &[("2", 1), ("-1", 2)],
        corrected: None,
        note: "",
    },
    Conversion {
        id: "sec7/eq7.5/combination",
        eform: 2,
        recorded: &[("E10", 2), ("-3*E10", 1), ("-2", 4)],
        corrected: None,
        note: "",
    },
    Conversion {
        id: "sec7/eq7.7/combination",
        eform: 3,
        recorded: &[("3*E01", 2), ("-5*E01", 1), ("-2", 3)],
        corrected: None,
        note: "",
    },
    Conversion {
        id: "sec7/eq7.9/combination",
        eform: 4,
        recorded: &[
            ("18", 6),
            ("6", 5),
            ("-8*E01", 3),
            ("-24*E10", 4),
            ("8*E20 + 3*E01^2 + 4*E10^2 + 6*E02", 2),
            ("2*E20 - 4*E01^2 - 11*E10^2 - L^2", 1),
        ],
        corrected: Some(&[
            ("18", 6),
            ("6", 7),
            ("-8*E01", 3),
            ("-24*E10", 4),
            ("8*E20 + 3*E01^2 + 4*E10^2 + 6*E02", 2),
            ("2*E20 - 4*E01^2 - 11*E10^2 - L^2", 1),
        ]),
        note: "the 6-weighted block is recorded over the mixed xd products; \
               the conversion is exact with the squared-diagonal block there instead",
    },
    Conversion {
        id: "sec7/eq7.11/combination",
        eform: 5,
        recorded: &[
            ("6", 6),
            ("18", 5),
            ("-24*E01", 3),
            ("-8*E10", 4),
            ("8*E20 + 9*E01^2 - 4*E10^2 + 18*E02", 2),
            ("-10*E20 - 20*E01^2 + 7*E10^2 + 5*L^2", 1),
        ],
        corrected: Some(&[
            ("6", 6),
            ("18", 7),
            ("-24*E01", 3),
            ("-8*E10", 4),
            ("8*E20 + 9*E01^2 - 4*E10^2 + 18*E02", 2),
            ("-10*E20 - 20*E01^2 + 7*E10^2 + 5*L^2", 1),
        ]),
        note: "the 18-weighted block is recorded over the mixed xd products and the last \
               coefficient drops an operator; with the squared-diagonal block swapped in, \
               dividing the residual by the quadric recovers the last coefficient \
               -(10*E20 + 20*E01^2 - 7*E10^2 - 5*L^2) exactly, matching the recorded \
               digits with the dropped operator read as a plus",
    },
    Conversion {
        id: "sec7/eq7.13/combination",
        eform: 6,
        recorded: &[
            ("-4*E10", 7),
            ("-8*E01", 5),
            ("-4*E20 - 2*E02 + 2*E10^2 + 3*E01^2", 4),
            ("8*E10*E01", 3),
            (
                "3*E30 - 3*E11*E01 + 3*E20*E10 - 3*E02*E10 - E10^3 - E12 + L^2*E10",
                2,
            ),
            ("2*E12 + 2*E10^3 - 8*E20*E10 + 2*E02*E10 + 2*E10*L^2", 1),
        ],
        corrected: None,
        note: "",
    },
    Conversion {
        id: "sec7/eq7.15/combination",
        eform: 7,
        recorded: &[
            ("-4*E01", 6),
            ("-8*E10", 5),
            ("8*E10*E01", 4),
            ("2*E10^2 + 2*L^2", 3),
            (
                "-4*E11*E10 - 4*E20*E01 + 3*E01*E10^2 - 3*L^2*E01 + 2*E21",
                2,
            ),
            (
                "-4*E21 - 6*E03 + 4*E20*E01 + 4*E11*E10 + 3*L^2*E01 - 5*E01*E10^2",
                1,
            ),
        ],
        corrected: None,
        note: "",
    },
];

const MEMBERSHIP_IDS: [&str; 8] = [
    "sec7/eq7.1/membership",
    "sec7/eq7.3/membership",
    "sec7/eq7.5/membership",
    "sec7/eq7.7/membership",
    "sec7/eq7.9/membership",
    "sec7/eq7.11/membership",
    "sec7/eq7.13/membership",
    "sec7/eq7.15/membership",
];

/// Evaluates a combination table: the sum over rows of φ(coefficient) times
/// the indexed generator.
fn combination_value(table: &[(&str, usize)]) -> Polynomial {
    let cat = catalog();
    let mut acc = Polynomial::zero(&cat.xd);
    for (coeff_text, block) in table {
        let coeff = cat.e.parse(coeff_text).expect("frozen coefficient parses");
        acc = &acc + &(&phi(&coeff) * &cat.ptilde[block - 1]);
    }
    acc
}

fn identity_claim(report: &mut VerificationReport, id: &str, lhs: &Polynomial, rhs: &Polynomial) {
    let ok = lhs == rhs;
    report.check(
        id,
        ok,
        if ok {
            format!("both sides expand to the same {} terms", lhs.terms().len())
        } else {
            format!("sides differ by {} terms", (lhs - rhs).terms().len())
        },
    );
}

fn sum(parts: &[Polynomial]) -> Polynomial {
    let ring = parts.first().expect("nonempty sum").ring();
    let mut acc = Polynomial::zero(ring);
    for p in parts {
        acc = &acc + p;
    }
    acc
}

/// The homogeneous (edge, diagonal) bidegree shared by every term of every
/// family member, when one exists.
fn family_bidegree(family: &[Polynomial; 3]) -> Option<(u32, u32)> {
    let ring = family[0].ring();
    let xs: Vec<usize> = ["x1", "x2", "x3"]
        .iter()
        .filter_map(|n| ring.var_index(n))
        .collect();
    let ds: Vec<usize> = ["d1", "d2", "d3"]
        .iter()
        .filter_map(|n| ring.var_index(n))
        .collect();
    let mut shared: Option<(u32, u32)> = None;
    for member in family {
        for (_, m) in member.terms() {
            let dx: u32 = xs.iter().map(|&v| m.exp(v)).sum();
            let dd: u32 = ds.iter().map(|&v| m.exp(v)).sum();
            match shared {
                None => shared = Some((dx, dd)),
                Some(pair) if pair == (dx, dd) => {}
                _ => return None,
            }
        }
    }
    shared
}

/// Renders `name_i: cofactor_i` pairs, skipping zero cofactors.
fn render_combination(names: &[&str], cofactors: &[Polynomial]) -> String {
    let parts: Vec<String> = names
        .iter()
        .zip(cofactors)
        .filter(|(_, c)| !c.is_zero())
        .map(|(n, c)| format!("({c})*{n}"))
        .collect();
    parts.join(" + ")
}

/// Deterministic generator for the completeness probe (splitmix64 stream).
struct Rng(u64);

impl Rng {
    fn new(seed: u64) -> Self {
        Rng(seed)
    }

    fn next(&mut self) -> u64 {
        self.0 = self.0.wrapping_add(0x9E37_79B9_7F4A_7C15);
        let mut z = self.0;
        z = (z ^ (z >> 30)).wrapping_mul(0xBF58_476D_1CE4_E5B9);
        z = (z ^ (z >> 27)).wrapping_mul(0x94D0_49BB_1331_11EB);
        z ^ (z >> 31)
    }

    fn below(&mut self, n: u64) -> u64 {
        ((u128::from(self.next()) * u128::from(n)) >> 64) as u64
    }

    /// A nonzero integer coefficient in [-5, 5].
    fn coefficient(&mut self) -> Rational {
        let mut v = self.below(11) as i64 - 5;
        if v == 0 {
            v = 1;
        }
        int(v)
    }

    /// A random sum of `terms` products of at most two atoms each, with
    /// small nonzero integer coefficients.
    fn poly_from_atoms(&mut self, atoms: &[Polynomial], terms: usize) -> Polynomial {
        let ring = atoms.first().expect("nonempty atom list").ring();
        let mut acc = Polynomial::zero(ring);
        for _ in 0..terms {
            let mut t = Polynomial::constant(ring, self.coefficient());
            for _ in 0..self.below(3) {
                t = &t * &atoms[self.below(atoms.len() as u64) as usize];
            }
            acc = &acc + &t;
        }
        acc
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn phi_kernel_report_passes_cleanly() {
        let report = verify_phi_kernel();
        assert_eq!(report.status(), ClaimOutcome::Pass);
        assert_eq!(report.claims().len(), 8);
    }

    #[test]
    fn partial_relations_report_has_the_two_documented_corrections() {
        let report = verify_partial_relations();
        assert!(report.passed());
        let outcome = |id: &str| {
            report
                .claims()
                .iter()
                .find(|c| c.id == id)
                .unwrap_or_else(|| panic!("claim {id} missing"))
                .outcome
        };
        assert_eq!(outcome("sec5/eq5.7/f01"), ClaimOutcome::PassWithCorrections);
        assert_eq!(outcome("sec4/eq4.3/f02-label"), ClaimOutcome::PassWithCorrections);
        assert_eq!(outcome("sec5/eq5.7/f10"), ClaimOutcome::Pass);
        assert_eq!(outcome("sec5/eq5.10/x1-d1sq"), ClaimOutcome::Pass);
        assert_eq!(report.claims().len(), 15);
    }

    // Timing probe for the session-backed procedures; the acceptance suite
    // runs them for real.
    #[test]
    #[ignore]
    fn session_reports_probe() {
        let session = Session::in_memory();
        for report in [verify_sym_basis(&session), verify_factor_conversions(&session)] {
            println!("{}", report.render_text());
        }
    }

    // Separate probe for the expensive elimination-backed procedure.
    #[test]
    #[ignore]
    fn kernel_report_probe() {
        let session = Session::in_memory();
        println!("{}", verify_kernel_basis(&session).render_text());
    }

    #[test]
    fn rng_is_deterministic_and_in_range() {
        let mut a = Rng::new(7);
        let mut b = Rng::new(7);
        for _ in 0..100 {
            assert_eq!(a.next(), b.next());
        }
        for _ in 0..100 {
            assert!(a.below(13) < 13);
            let c = b.coefficient();
            assert!(c != int(0));
            assert!(c >= int(-5) && c <= int(5));
        }
    }
}
