//! The four Homflypt-type invariants of tied singular links, computed by
//! the Jones recipe: map the braid into the algebra of braids and ties,
//! take the Markov trace, rescale the crossings by the formal radical and
//! normalize by strand count.
//!
//! The kinds differ in two independent choices: the presentation (plain
//! kinds use the `u`-field generators `T_i`, primed kinds the `v`-field
//! `V_i`) and the image of a singular crossing (`psi` kinds map it to
//! `x + y w G_i`, `phi` kinds tie the smoothing: `x E_i + y w E_i G_i`).

use std::fmt;

use rand::rngs::StdRng;
use rand::{Rng, SeedableRng};

use crate::braids::{self, Letter, RandomBraidSpec, TiedSingularBraid};
use crate::btalgebra::{AlgebraElement, GenKind, Presentation};
use crate::coeffs::{FieldTag, QuadExt, Var};
use crate::partitions::SetPartition;
use crate::report::CheckReport;
use crate::trace::TraceCalculator;

#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash)]
pub enum InvariantKind {
    Phi,
    Psi,
    PhiPrime,
    PsiPrime,
}

impl InvariantKind {
    pub const ALL: [InvariantKind; 4] = [
        InvariantKind::Phi,
        InvariantKind::Psi,
        InvariantKind::PhiPrime,
        InvariantKind::PsiPrime,
    ];

    pub fn presentation(self) -> Presentation {
        match self {
            InvariantKind::Phi | InvariantKind::Psi => Presentation::T,
            InvariantKind::PhiPrime | InvariantKind::PsiPrime => Presentation::V,
        }
    }

    pub fn field_tag(self) -> FieldTag {
        self.presentation().field_tag()
    }

    /// Whether the singular-crossing image carries the tie idempotent.
    pub fn ties_singular_image(self) -> bool {
        matches!(self, InvariantKind::Phi | InvariantKind::PhiPrime)
    }

    pub fn name(self) -> &'static str {
        match self {
            InvariantKind::Phi => "phi",
            InvariantKind::Psi => "psi",
            InvariantKind::PhiPrime => "phi-prime",
            InvariantKind::PsiPrime => "psi-prime",
        }
    }

    /// The strand-count normalizer: `1/(a s)` resp. `v/(a r)`.
    pub fn prefactor(self) -> QuadExt {
        let tag = self.field_tag();
        let a = QuadExt::var(tag, Var::A);
        let rad = QuadExt::radical(tag);
        let base = (&a * &rad).inv();
        match self.presentation() {
            Presentation::T => base,
            Presentation::V => &QuadExt::var(tag, Var::Q) * &base,
        }
    }
}

impl fmt::Display for InvariantKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.name())
    }
}

/// An invariant value with the closure metadata it was computed from.
#[derive(Debug, Clone)]
pub struct InvariantResult {
    pub kind: InvariantKind,
    pub value: QuadExt,
    pub strands: usize,
    pub components: usize,
    pub sc_partition: SetPartition,
    pub singularities: usize,
}

/// The algebra image of a tied singular braid under the chosen kind:
/// crossings map to `w G_i` and `w^{-1} G_i^{-1}`, singular crossings to
/// the kind's two-term sum, all left-multiplied by the tie idempotent of
/// the braid's partition.
pub fn morphism_image(braid: &TiedSingularBraid, kind: InvariantKind) -> AlgebraElement {
    let pres = kind.presentation();
    let tag = kind.field_tag();
    let n = braid.n();
    let rad = QuadExt::radical(tag);
    let x = QuadExt::var(tag, Var::X);
    let y = QuadExt::var(tag, Var::Y);
    let mut acc = AlgebraElement::e_of(braid.ties().clone(), pres);
    for letter in braid.word() {
        let img = match *letter {
            Letter::Sigma(i) => AlgebraElement::braid_gen(n, pres, i).scale(&rad),
            Letter::SigmaInv(i) => {
                AlgebraElement::braid_gen_inv(n, pres, i).scale(&rad.inv())
            }
            Letter::Tau(i) => {
                let g = AlgebraElement::braid_gen(n, pres, i);
                let yw = &y * &rad;
                if kind.ties_singular_image() {
                    let e = AlgebraElement::gen(n, pres, GenKind::Tie(i));
                    e.scale(&x).add(&e.mul(&g).scale(&yw))
                } else {
                    AlgebraElement::unit(n, pres)
                        .scale(&x)
                        .add(&g.scale(&yw))
                }
            }
            Letter::Eta(_) => unreachable!("normal form has no tie letters"),
        };
        acc = acc.mul(&img);
    }
    acc
}

/// Shared evaluator holding one memoized trace per presentation.
pub struct Evaluator {
    t_calc: TraceCalculator,
    v_calc: TraceCalculator,
}

impl Default for Evaluator {
    fn default() -> Self {
        Self::new()
    }
}

impl Evaluator {
    pub fn new() -> Self {
        Evaluator {
            t_calc: TraceCalculator::new(Presentation::T),
            v_calc: TraceCalculator::new(Presentation::V),
        }
    }

    fn calc(&mut self, pres: Presentation) -> &mut TraceCalculator {
        match pres {
            Presentation::T => &mut self.t_calc,
            Presentation::V => &mut self.v_calc,
        }
    }

    /// The invariant value of the braid closure.
    pub fn value(&mut self, braid: &TiedSingularBraid, kind: InvariantKind) -> InvariantResult {
        let image = morphism_image(braid, kind);
        let trace = self.calc(kind.presentation()).rho(&image);
        let value = &kind.prefactor().pow(braid.n() as i64 - 1) * &trace;
        let closure = braid.closure();
        InvariantResult {
            kind,
            value,
            strands: braid.n(),
            components: closure.components,
            sc_partition: closure.sc_partition,
            singularities: braid.singularity_count(),
        }
    }

    /// The rescaled specialization `s^m * Phi` at `x = 1`, `y = 1/s`,
    /// where `m` counts singular crossings.
    pub fn gamma_bar(&mut self, braid: &TiedSingularBraid) -> QuadExt {
        let tag = FieldTag::T;
        let rad = QuadExt::radical(tag);
        let phi = self.value(braid, InvariantKind::Phi).value;
        let substituted = phi
            .subst(&[(Var::X, QuadExt::one(tag)), (Var::Y, rad.inv())])
            .expect("x/y substitution");
        &rad.pow(braid.singularity_count() as i64) * &substituted
    }
}

// ---------------------------------------------------------------------------
// Randomized harnesses
// ---------------------------------------------------------------------------

/// Markov-move invariance: each random braid is hit with a sequence of
/// random t-stabilizations, commutings and stabilizations; every invariant
/// kind must be unchanged exactly.
pub fn check_markov(
    trials: usize,
    moves_per_trial: usize,
    max_n: usize,
    max_len: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new("markov invariance", trials, seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut eval = Evaluator::new();
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let len = rng.gen_range(0..=max_len);
        let mut braid = braids::random_braid(
            RandomBraidSpec {
                n,
                len,
                allow_tau: true,
                allow_ties: true,
            },
            &mut rng,
        );
        let reference: Vec<QuadExt> = InvariantKind::ALL
            .iter()
            .map(|&kind| eval.value(&braid, kind).value)
            .collect();
        let original = braid.clone();
        for step in 0..moves_per_trial {
            braid = apply_random_move(&braid, &mut rng);
            for (&kind, want) in InvariantKind::ALL.iter().zip(reference.iter()) {
                let got = eval.value(&braid, kind).value;
                if !got.eq_val(want) {
                    report.fail(
                        format!(
                            "trial {}, move {}: {} changed (started from {})",
                            trial,
                            step,
                            kind.name(),
                            original.render()
                        ),
                        Some(braid.render()),
                    );
                }
            }
        }
    }
    report
}

fn apply_random_move(braid: &TiedSingularBraid, rng: &mut StdRng) -> TiedSingularBraid {
    for _ in 0..8 {
        match rng.gen_range(0..4) {
            0 => {
                // t-stabilization on a random non-singleton cycle
                let cycles = SetPartition::from_cycles(&braid.perm());
                let candidates: Vec<Vec<usize>> = cycles
                    .blocks()
                    .into_iter()
                    .filter(|b| b.len() >= 2)
                    .collect();
                if candidates.is_empty() {
                    continue;
                }
                let block = &candidates[rng.gen_range(0..candidates.len())];
                let i = block[rng.gen_range(0..block.len())];
                let mut j = block[rng.gen_range(0..block.len())];
                if i == j {
                    j = *block.iter().find(|&&p| p != i).expect("len >= 2");
                }
                return braid.move_m1(i, j).expect("same cycle");
            }
            1 => {
                let split = rng.gen_range(0..=braid.word().len());
                return braid.move_m2_split(split);
            }
            _ => {
                return braid.move_m3(rng.gen_bool(0.5));
            }
        }
    }
    braid.move_m3(true)
}

/// Exact skein/desingularization identities on braid closures. The derived
/// forms are required; the forms with the printed plus sign (and the tied
/// x-term variant of the `psi` desingularization) are evaluated and
/// reported as notes.
pub fn check_skein(
    kind: InvariantKind,
    trials: usize,
    max_n: usize,
    max_len: usize,
    seed: u64,
) -> CheckReport {
    let mut report = CheckReport::new(format!("skein identities ({})", kind.name()), trials, seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut eval = Evaluator::new();
    let tag = kind.field_tag();
    let one = QuadExt::one(tag);
    let rad = QuadExt::radical(tag);
    let x = QuadExt::var(tag, Var::X);
    let y = QuadExt::var(tag, Var::Y);
    let q = QuadExt::var(tag, Var::Q);
    let mut printed_skein_failures = 0usize;
    let mut printed_desing_failures = 0usize;
    for trial in 0..trials {
        let n = rng.gen_range(2..=max_n);
        let i = rng.gen_range(1..n);
        let halves: Vec<Vec<Letter>> = (0..2)
            .map(|_| {
                let len = rng.gen_range(0..=max_len / 2);
                let mut out = Vec::with_capacity(len);
                for _ in 0..len {
                    let idx = rng.gen_range(1..n);
                    out.push(match rng.gen_range(0..4) {
                        0 => Letter::Sigma(idx),
                        1 => Letter::SigmaInv(idx),
                        2 => Letter::Tau(idx),
                        _ => Letter::Eta(idx),
                    });
                }
                out
            })
            .collect();
        let with_mid = |mid: &[Letter]| -> TiedSingularBraid {
            let word: Vec<Letter> = halves[0]
                .iter()
                .chain(mid.iter())
                .chain(halves[1].iter())
                .copied()
                .collect();
            TiedSingularBraid::normalize(n, &word).expect("valid letters")
        };
        let val = |eval: &mut Evaluator, mid: &[Letter]| eval.value(&with_mid(mid), kind).value;

        let ctx = with_mid(&[Letter::Tau(i)]).render();
        // crossing-switch rule
        let plus = val(&mut eval, &[Letter::Sigma(i)]);
        let minus = val(&mut eval, &[Letter::SigmaInv(i)]);
        let smoothing_tied = val(&mut eval, &[Letter::Eta(i)]);
        match kind.presentation() {
            Presentation::T => {
                let crossing_tied = val(&mut eval, &[Letter::Eta(i), Letter::Sigma(i)]);
                let coeff = &one - &q.inv();
                let lhs = &(&rad.inv() * &plus) - &(&rad * &minus);
                let rhs = &coeff * &(&smoothing_tied + &(&rad.inv() * &crossing_tied));
                if !lhs.eq_val(&rhs) {
                    report.fail(format!("trial {}: crossing-switch rule", trial), Some(ctx.clone()));
                }
                let printed_lhs = &(&rad.inv() * &plus) + &(&rad * &minus);
                if !printed_lhs.eq_val(&rhs) {
                    printed_skein_failures += 1;
                }
            }
            Presentation::V => {
                let coeff = &q - &q.inv();
                let lhs = &(&rad.inv() * &plus) - &(&rad * &minus);
                let rhs = &coeff * &smoothing_tied;
                if !lhs.eq_val(&rhs) {
                    report.fail(format!("trial {}: crossing-switch rule", trial), Some(ctx.clone()));
                }
                let printed_lhs = &(&rad.inv() * &plus) + &(&rad * &minus);
                if !printed_lhs.eq_val(&rhs) {
                    printed_skein_failures += 1;
                }
            }
        }
        // desingularization
        let singular = val(&mut eval, &[Letter::Tau(i)]);
        if kind.ties_singular_image() {
            let crossing_tied = val(&mut eval, &[Letter::Eta(i), Letter::Sigma(i)]);
            let rhs = &(&x * &smoothing_tied) + &(&y * &crossing_tied);
            if !singular.eq_val(&rhs) {
                report.fail(format!("trial {}: desingularization", trial), Some(ctx));
            }
        } else {
            let smoothing_untied = val(&mut eval, &[]);
            let crossing_untied = val(&mut eval, &[Letter::Sigma(i)]);
            let rhs = &(&x * &smoothing_untied) + &(&y * &crossing_untied);
            if !singular.eq_val(&rhs) {
                report.fail(format!("trial {}: desingularization", trial), Some(ctx));
            }
            let printed_rhs = &(&x * &smoothing_tied) + &(&y * &crossing_untied);
            if !singular.eq_val(&printed_rhs) {
                printed_desing_failures += 1;
            }
        }
    }
    report.note(format!(
        "crossing-switch rule with the printed plus sign: {}",
        if printed_skein_failures == 0 {
            "holds on all trials".to_string()
        } else {
            format!("fails on {}/{} trials", printed_skein_failures, trials)
        }
    ));
    if !kind.ties_singular_image() {
        report.note(format!(
            "desingularization with tied smoothing in the x-term: {}",
            if printed_desing_failures == 0 {
                "holds on all trials".to_string()
            } else {
                format!("fails on {}/{} trials", printed_desing_failures, trials)
            }
        ));
    }
    report
}

/// Degree-`m` homogeneity in `(x, y)` for braids with `m` singular
/// crossings: the value equals `x^m` times itself at `x = 1, y = y/x`.
pub fn check_homogeneity(kind: InvariantKind, trials: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new(format!("homogeneity ({})", kind.name()), trials, seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut eval = Evaluator::new();
    let tag = kind.field_tag();
    let x = QuadExt::var(tag, Var::X);
    let y = QuadExt::var(tag, Var::Y);
    for trial in 0..trials {
        let n = rng.gen_range(2..=4usize);
        let m = rng.gen_range(1..=3usize);
        let len = rng.gen_range(m..=m + 4);
        let braid = braids::random_singular_braid(n, len, m, &mut rng);
        let value = eval.value(&braid, kind).value;
        let rescaled = value
            .subst(&[
                (Var::X, QuadExt::one(tag)),
                (Var::Y, &y * &x.inv()),
            ])
            .expect("x/y substitution");
        let want = &x.pow(m as i64) * &rescaled;
        if !value.eq_val(&want) {
            report.fail(
                format!("trial {}: not homogeneous of degree {}", trial, m),
                Some(braid.render()),
            );
        }
    }
    report
}

/// On braids without singular crossings the tied and untied singular-image
/// choices agree: `phi = psi` and `phi' = psi'` exactly.
pub fn check_classical_agreement(trials: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("phi = psi without singular crossings", trials, seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut eval = Evaluator::new();
    for trial in 0..trials {
        let n = rng.gen_range(1..=4usize);
        let braid = braids::random_braid(
            RandomBraidSpec {
                n,
                len: rng.gen_range(0..=8usize),
                allow_tau: false,
                allow_ties: true,
            },
            &mut rng,
        );
        let phi = eval.value(&braid, InvariantKind::Phi).value;
        let psi = eval.value(&braid, InvariantKind::Psi).value;
        if !phi.eq_val(&psi) {
            report.fail(format!("trial {}: phi != psi", trial), Some(braid.render()));
        }
        let phi_p = eval.value(&braid, InvariantKind::PhiPrime).value;
        let psi_p = eval.value(&braid, InvariantKind::PsiPrime).value;
        if !phi_p.eq_val(&psi_p) {
            report.fail(
                format!("trial {}: phi' != psi'", trial),
                Some(braid.render()),
            );
        }
    }
    report
}

/// Appending an unused strand multiplies the value by the prefactor.
pub fn check_unused_strand(trials: usize, seed: u64) -> CheckReport {
    let mut report = CheckReport::new("unused strand multiplies by prefactor", trials, seed);
    let mut rng = StdRng::seed_from_u64(seed);
    let mut eval = Evaluator::new();
    for trial in 0..trials {
        let n = rng.gen_range(1..=4usize);
        let braid = braids::random_braid(
            RandomBraidSpec {
                n,
                len: rng.gen_range(0..=6usize),
                allow_tau: true,
                allow_ties: true,
            },
            &mut rng,
        );
        let widened = TiedSingularBraid::from_parts(braid.ties().embed(), braid.word().to_vec());
        for kind in InvariantKind::ALL {
            let base = eval.value(&braid, kind).value;
            let wide = eval.value(&widened, kind).value;
            let want = &base * &kind.prefactor();
            if !wide.eq_val(&want) {
                report.fail(
                    format!("trial {}: {} disagrees", trial, kind.name()),
                    Some(braid.render()),
                );
            }
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::coeffs::PolyFrac;
    use crate::partitions::parse_partition;

    fn qx(text: &str) -> QuadExt {
        QuadExt::parse(FieldTag::T, text).unwrap()
    }

    fn qxv(text: &str) -> QuadExt {
        QuadExt::parse(FieldTag::V, text).unwrap()
    }

    #[test]
    fn radicand_identities() {
        // a*u*c = a + (1-u)*b and a*d = a + (1-v^2)*b
        let c = QuadExt::from_frac(FieldTag::T.radicand());
        let lhs = &(&qx("a") * &qx("u")) * &c;
        assert!(lhs.eq_val(&qx("a + (1-u)*b")));
        let d = QuadExt::from_frac(FieldTag::V.radicand());
        let lhs = &qxv("a") * &d;
        assert!(lhs.eq_val(&qxv("a + (1-v^2)*b")));
        // f = b/a equals (u*c - 1)/(1 - u)
        let f = &(&(&qx("u") * &c) - &qx("1")) / &(&qx("1") - &qx("u"));
        assert!(f.eq_val(&qx("b/a")));
    }

    #[test]
    fn morphism_examples() {
        // psi on a bare singular crossing: x + y s T_1
        let tau = TiedSingularBraid::normalize(2, &[Letter::Tau(1)]).unwrap();
        let image = morphism_image(&tau, InvariantKind::Psi);
        let rad = QuadExt::radical(FieldTag::T);
        let expected = AlgebraElement::unit(2, Presentation::T)
            .scale(&qx("x"))
            .add(
                &AlgebraElement::braid_gen(2, Presentation::T, 1)
                    .scale(&(&qx("y") * &rad)),
            );
        assert!(image.eq_elem(&expected));
        // phi on a pure tie braid is the tie idempotent
        let tied = TiedSingularBraid::from_parts(parse_partition("{2 3}", 3).unwrap(), vec![]);
        let image = morphism_image(&tied, InvariantKind::Phi);
        assert!(image.eq_elem(&AlgebraElement::e_of(
            parse_partition("{2 3}", 3).unwrap(),
            Presentation::T
        )));
    }

    #[test]
    fn anchor_values() {
        let mut eval = Evaluator::new();
        // unknot
        let unknot = TiedSingularBraid::identity(1);
        for kind in InvariantKind::ALL {
            assert!(eval.value(&unknot, kind).value.is_one());
        }
        // two-component unlink
        let unlink = TiedSingularBraid::identity(2);
        let phi = eval.value(&unlink, InvariantKind::Phi).value;
        assert!(phi.eq_val(&qx("1/(a*s)")));
        let psi = eval.value(&unlink, InvariantKind::Psi).value;
        assert!(psi.eq_val(&qx("1/(a*s)")));
        let phi_p = eval.value(&unlink, InvariantKind::PhiPrime).value;
        assert!(phi_p.eq_val(&qxv("v/(a*r)")));
        let psi_p = eval.value(&unlink, InvariantKind::PsiPrime).value;
        assert!(psi_p.eq_val(&qxv("v/(a*r)")));
        // closure of a single positive crossing is the unknot
        let sigma = TiedSingularBraid::normalize(2, &[Letter::Sigma(1)]).unwrap();
        for kind in InvariantKind::ALL {
            assert!(
                eval.value(&sigma, kind).value.is_one(),
                "stabilized unknot under {}",
                kind.name()
            );
        }
        // closure of a single singular crossing
        let tau = TiedSingularBraid::normalize(2, &[Letter::Tau(1)]).unwrap();
        let phi = eval.value(&tau, InvariantKind::Phi).value;
        assert!(phi.eq_val(&qx("x*b/(a*s) + y")));
        let psi = eval.value(&tau, InvariantKind::Psi).value;
        assert!(psi.eq_val(&qx("x/(a*s) + y")));
        let result = eval.value(&tau, InvariantKind::Phi);
        assert_eq!(result.components, 1);
        assert_eq!(result.singularities, 1);
        assert_eq!(result.strands, 2);
    }

    #[test]
    fn gamma_bar_examples() {
        let mut eval = Evaluator::new();
        // on the singular one-crossing closure: b/a + 1
        let tau = TiedSingularBraid::normalize(2, &[Letter::Tau(1)]).unwrap();
        let gamma = eval.gamma_bar(&tau);
        assert!(gamma.eq_val(&qx("b/a + 1")));
        // on a classical braid it is phi at x=1, y=1/s
        let trefoil = TiedSingularBraid::normalize(
            2,
            &[Letter::Sigma(1), Letter::Sigma(1), Letter::Sigma(1)],
        )
        .unwrap();
        let gamma = eval.gamma_bar(&trefoil);
        let phi = eval.value(&trefoil, InvariantKind::Phi).value;
        let rad = QuadExt::radical(FieldTag::T);
        let expected = phi
            .subst(&[(Var::X, QuadExt::one(FieldTag::T)), (Var::Y, rad.inv())])
            .unwrap();
        assert!(gamma.eq_val(&expected));
        // gamma_bar is stable under stabilization
        let gamma_stab = eval.gamma_bar(&trefoil.move_m3(false));
        assert!(gamma.eq_val(&gamma_stab));
    }

    #[test]
    fn markov_small() {
        let report = check_markov(6, 3, 3, 5, 2024);
        assert!(report.pass(), "{}", report);
    }

    #[test]
    fn skein_small() {
        for kind in InvariantKind::ALL {
            let report = check_skein(kind, 6, 3, 4, 77);
            assert!(report.pass(), "{}", report);
        }
    }

    #[test]
    fn homogeneity_small() {
        let report = check_homogeneity(InvariantKind::Phi, 6, 99);
        assert!(report.pass(), "{}", report);
    }

    #[test]
    fn classical_agreement_small() {
        let report = check_classical_agreement(8, 303);
        assert!(report.pass(), "{}", report);
    }

    #[test]
    fn unused_strand_small() {
        let report = check_unused_strand(5, 404);
        assert!(report.pass(), "{}", report);
    }

    #[test]
    fn subst_entrypoint_rejects_radical_vars() {
        let val = qx("x + a*y");
        assert!(val
            .subst(&[(Var::A, QuadExt::one(FieldTag::T))])
            .is_err());
        let ok = val
            .subst(&[(Var::X, QuadExt::from_frac(PolyFrac::one(FieldTag::T)))])
            .unwrap();
        assert!(ok.eq_val(&qx("1 + a*y")));
    }
}
