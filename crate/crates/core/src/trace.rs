//! The Markov trace on the algebra of braids and ties: the unique family of
//! linear functionals with `rho(1) = 1` that is central and reduces the last
//! strand with weight `a` for a crossing and `b` for a tie.
//!
//! A basis term `E_I T_w` of the `n`-strand algebra is reduced by cases on
//! the last strand:
//!
//! * `w(n) = n`, `{n}` a singleton of `I`: the term lives one strand down.
//! * `w(n) = n`, `n` tied to a mate `j`: factor the tie off as
//!   `E_I = E_{I-n} E_{{j,n}}`, expand `E_{{j,n}}` through its conjugating
//!   chain, cycle, and apply the `b` rule.
//! * `w(n) = k < n`: split off the distinguished coset chain
//!   `T_k ... T_{n-1}` (length-additive), cycle the tail to the front,
//!   conjugate any last-strand tie through the final `T_{n-1}`, and apply
//!   the `a` rule.
//!
//! Each case leaves a product in the `(n-1)`-strand algebra which is
//! multiplied out and reduced recursively. The reduction is validated
//! against the defining rules by [`check_trace_rules`]; uniqueness of the
//! trace makes any rule-satisfying reduction correct.

use std::collections::HashMap;

use rand::rngs::StdRng;
use rand::SeedableRng;

use crate::btalgebra::{AlgebraElement, Presentation};
use crate::coeffs::{QuadExt, Var};
use crate::partitions::SetPartition;
use crate::perm::Perm;
use crate::report::CheckReport;

/// Trace evaluator with a per-presentation memo table over basis keys.
/// Values of basis terms are polynomials in `a`, `b` over the parameter
/// field. Not shareable across threads; create one per worker.
pub struct TraceCalculator {
    pres: Presentation,
    memo: HashMap<(SetPartition, Perm), QuadExt>,
}

impl TraceCalculator {
    pub fn new(pres: Presentation) -> Self {
        TraceCalculator {
            pres,
            memo: HashMap::new(),
        }
    }

    pub fn presentation(&self) -> Presentation {
        self.pres
    }

    /// Linear extension of the basis-term trace.
    pub fn rho(&mut self, elem: &AlgebraElement) -> QuadExt {
        assert_eq!(elem.presentation(), self.pres, "presentation mismatch");
        let tag = self.pres.field_tag();
        let mut acc = QuadExt::zero(tag);
        let terms: Vec<_> = elem
            .terms()
            .map(|(k, c)| (k.clone(), c.clone()))
            .collect();
        for ((partition, w), coeff) in terms {
            let val = self.rho_basis(&partition, &w);
            acc = &acc + &(&coeff * &val);
        }
        acc
    }

    fn rho_basis(&mut self, partition: &SetPartition, w: &Perm) -> QuadExt {
        let key = (partition.clone(), w.clone());
        if let Some(hit) = self.memo.get(&key) {
            return hit.clone();
        }
        let val = self.rho_basis_uncached(partition, w);
        self.memo.insert(key, val.clone());
        val
    }

    fn rho_basis_uncached(&mut self, partition: &SetPartition, w: &Perm) -> QuadExt {
        let pres = self.pres;
        let tag = pres.field_tag();
        let n = partition.n();
        if n == 1 {
            return QuadExt::one(tag);
        }
        let a = QuadExt::var(tag, Var::A);
        let b = QuadExt::var(tag, Var::B);
        let m = n - 1;
        let k = w.apply(n);
        if k == n {
            if partition.last_is_singleton() {
                let inner = self.rho_basis(&partition.remove_last(), &w.restrict(m));
                return inner;
            }
            // n tied to a mate j: E_I = E_{I-n} E_{{j,n}} with
            // E_{{j,n}} = C E_{n-1} C^{-1}, C = T_j ... T_{n-2};
            // rho = b * rho_{n-1}(C^{-1} T_w E_{I-n} C).
            let j = *partition.mates(n).last().expect("mate exists");
            let stripped =
                AlgebraElement::e_of(partition.remove_last(), pres);
            let t_w = AlgebraElement::t_basis(m, pres, w.restrict(m));
            let chain = chain_elem(m, pres, j, n - 2);
            let chain_inv = chain_inv_elem(m, pres, j, n - 2);
            let residual = chain_inv.mul(&t_w).mul(&stripped).mul(&chain);
            return &b * &self.rho(&residual);
        }
        // w(n) = k < n: w = d_k u0 with d_k = s_k ... s_{n-1} and u0 fixing
        // n, lengths adding up.
        let d_k = coset_chain_perm(n, k);
        let u0 = d_k.inverse().compose(w);
        debug_assert_eq!(u0.apply(n), n);
        debug_assert_eq!(w.inversions(), (n - k) + u0.inversions());
        let u0_small = u0.restrict(m);
        let t_u0 = AlgebraElement::t_basis(m, pres, u0_small);
        // d' = s_k ... s_{n-2} acting on the first n-1 strands
        let d_prime = coset_chain_perm_upto(m, k, n - 2);
        let t_dprime = AlgebraElement::t_basis(m, pres, d_prime.clone());
        if partition.last_is_singleton() {
            let e_part = AlgebraElement::e_of(partition.remove_last(), pres);
            let residual = t_u0.mul(&e_part).mul(&t_dprime);
            return &a * &self.rho(&residual);
        }
        let j = *partition.mates(n).last().expect("mate exists");
        let e_part = AlgebraElement::e_of(partition.remove_last(), pres);
        // E_{{j,n}} T_{d'} = T_{d'} E_{{g^{-1}(j), n}}
        let j2 = d_prime.inverse().apply(j);
        if j2 == m {
            // the tie became E_{n-1}, absorbed by the a-rule
            let residual = t_u0.mul(&e_part).mul(&t_dprime);
            &a * &self.rho(&residual)
        } else {
            // E_{{j2,n}} T_{n-1} = T_{n-1} E_{{j2,n-1}}
            let tie = AlgebraElement::e_of(
                SetPartition::mu(j2, m, m).expect("indices"),
                pres,
            );
            let residual = tie.mul(&t_u0).mul(&e_part).mul(&t_dprime);
            &a * &self.rho(&residual)
        }
    }
}

/// The distinguished coset representative `d_k = s_k s_{k+1} ... s_{n-1}`
/// sending `n` to `k`.
fn coset_chain_perm(n: usize, k: usize) -> Perm {
    let mut p = Perm::identity(n);
    for i in k..n {
        p = p.compose(&Perm::transposition(n, i));
    }
    p
}

/// `s_k ... s_top` on `m` strands.
fn coset_chain_perm_upto(m: usize, k: usize, top: usize) -> Perm {
    let mut p = Perm::identity(m);
    for i in k..=top {
        p = p.compose(&Perm::transposition(m, i));
    }
    p
}

/// The basis chain `T_j T_{j+1} ... T_top` on `m` strands (unit if empty).
fn chain_elem(m: usize, pres: Presentation, j: usize, top: usize) -> AlgebraElement {
    if j > top {
        return AlgebraElement::unit(m, pres);
    }
    AlgebraElement::t_basis(m, pres, coset_chain_perm_upto(m, j, top))
}

/// Its inverse `T_top^{-1} ... T_j^{-1}`.
fn chain_inv_elem(m: usize, pres: Presentation, j: usize, top: usize) -> AlgebraElement {
    let mut out = AlgebraElement::unit(m, pres);
    if j > top {
        return out;
    }
    for i in (j..=top).rev() {
        out = out.mul(&AlgebraElement::t_gen_inv(m, pres, i));
    }
    out
}

/// Randomized validation of the defining trace rules: centrality
/// `rho(XY) = rho(YX)` on the `n`-strand algebra, and the last-strand
/// reductions `rho(X T_n) = rho(X T_n E_n) = a rho(X)`,
/// `rho(X E_n) = b rho(X)` for `X` embedded one strand up.
pub fn check_trace_rules(
    n: usize,
    trials: usize,
    seed: u64,
    pres: Presentation,
) -> CheckReport {
    let mut report = CheckReport::new(
        format!("trace rules ({:?}-presentation, n <= {})", pres, n),
        trials,
        seed,
    );
    let mut rng = StdRng::seed_from_u64(seed);
    let mut calc = TraceCalculator::new(pres);
    let tag = pres.field_tag();
    let a = QuadExt::var(tag, Var::A);
    let b = QuadExt::var(tag, Var::B);
    use rand::Rng;
    for trial in 0..trials {
        let size = rng.gen_range(2..=n);
        let x = AlgebraElement::random_basis_combination(size, pres, 3, &mut rng);
        let y = AlgebraElement::random_basis_combination(size, pres, 3, &mut rng);
        let xy = calc.rho(&x.mul(&y));
        let yx = calc.rho(&y.mul(&x));
        if !xy.eq_val(&yx) {
            report.fail(
                format!("trial {}: rho(XY) != rho(YX) with X = {}, Y = {}", trial, x, y),
                None,
            );
            continue;
        }
        // embed X into size+1 strands and reduce the fresh strand
        let up = size + 1;
        let xe = x.embed(up);
        let t_top = AlgebraElement::t_basis(up, pres, Perm::transposition(up, size));
        let e_top = AlgebraElement::e_of(
            SetPartition::mu(size, up, up).expect("index"),
            pres,
        );
        let rx = calc.rho(&x);
        let want_a = &a * &rx;
        let want_b = &b * &rx;
        if !calc.rho(&xe.mul(&t_top)).eq_val(&want_a) {
            report.fail(format!("trial {}: rho(X T_n) != a rho(X), X = {}", trial, x), None);
        }
        if !calc.rho(&xe.mul(&t_top).mul(&e_top)).eq_val(&want_a) {
            report.fail(
                format!("trial {}: rho(X T_n E_n) != a rho(X), X = {}", trial, x),
                None,
            );
        }
        if !calc.rho(&xe.mul(&e_top)).eq_val(&want_b) {
            report.fail(format!("trial {}: rho(X E_n) != b rho(X), X = {}", trial, x), None);
        }
    }
    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::btalgebra::GenKind;
    use crate::coeffs::FieldTag;
    use crate::partitions::parse_partition;

    fn t_calc() -> TraceCalculator {
        TraceCalculator::new(Presentation::T)
    }

    fn qx(text: &str) -> QuadExt {
        QuadExt::parse(FieldTag::T, text).unwrap()
    }

    #[test]
    fn anchors() {
        let mut calc = t_calc();
        let pres = Presentation::T;
        assert!(calc.rho(&AlgebraElement::unit(1, pres)).is_one());
        assert!(calc.rho(&AlgebraElement::unit(3, pres)).is_one());
        let t1 = AlgebraElement::braid_gen(2, pres, 1);
        assert!(calc.rho(&t1).eq_val(&qx("a")));
        let e1 = AlgebraElement::gen(2, pres, GenKind::Tie(1));
        assert!(calc.rho(&e1).eq_val(&qx("b")));
        assert!(calc.rho(&e1.mul(&t1)).eq_val(&qx("a")));
        let t1inv = AlgebraElement::braid_gen_inv(2, pres, 1);
        assert!(calc.rho(&t1inv).eq_val(&qx("(a + (1-u)*b)/u")));
    }

    #[test]
    fn distant_tie_reduces_to_b() {
        // rho(E_{{1,3}}) = b by cyclicity through the conjugating chain
        let mut calc = t_calc();
        let e13 = AlgebraElement::e_of(parse_partition("{1 3}", 3).unwrap(), Presentation::T);
        assert!(calc.rho(&e13).eq_val(&qx("b")));
    }

    #[test]
    fn chained_crossings() {
        // rho(T_1 T_2) = a^2 by two application of the a-rule
        let mut calc = t_calc();
        let pres = Presentation::T;
        let t1 = AlgebraElement::braid_gen(3, pres, 1);
        let t2 = AlgebraElement::braid_gen(3, pres, 2);
        assert!(calc.rho(&t1.mul(&t2)).eq_val(&qx("a^2")));
    }

    #[test]
    fn embedding_consistency() {
        let mut calc = t_calc();
        let mut rng = StdRng::seed_from_u64(83);
        for _ in 0..20 {
            let x = AlgebraElement::random_basis_combination(3, Presentation::T, 3, &mut rng);
            let small = calc.rho(&x);
            let big = calc.rho(&x.embed(5));
            assert!(small.eq_val(&big));
        }
    }

    #[test]
    fn v_generator_trace() {
        // rho(V_1) = a * v^{-1}
        let mut calc = TraceCalculator::new(Presentation::V);
        let v1 = AlgebraElement::braid_gen(2, Presentation::V, 1);
        let expected = QuadExt::parse(FieldTag::V, "a/v").unwrap();
        assert!(calc.rho(&v1).eq_val(&expected));
    }

    #[test]
    fn rules_small_sample() {
        for pres in [Presentation::T, Presentation::V] {
            let report = check_trace_rules(3, 40, 12345, pres);
            assert!(report.pass(), "{}", report);
        }
    }

    #[test]
    fn disjoint_sum_multiplicativity() {
        // the trace of a disjoint product splits multiplicatively
        let mut calc = t_calc();
        let pres = Presentation::T;
        let mut rng = StdRng::seed_from_u64(97);
        for _ in 0..10 {
            let x = AlgebraElement::random_basis_combination(2, pres, 2, &mut rng);
            let y = AlgebraElement::random_basis_combination(2, pres, 2, &mut rng);
            // place y on strands 3..4
            let mut shifted = AlgebraElement::zero(4, pres);
            for ((p, w), c) in y.terms() {
                let blocks: Vec<Vec<usize>> = {
                    let mut all: Vec<Vec<usize>> = vec![vec![1], vec![2]];
                    all.extend(
                        p.blocks()
                            .into_iter()
                            .map(|blk| blk.into_iter().map(|pt| pt + 2).collect()),
                    );
                    all
                };
                let part = SetPartition::from_blocks(4, &blocks).unwrap();
                let images: Vec<usize> = (1..=4)
                    .map(|i| if i <= 2 { i } else { w.apply(i - 2) + 2 })
                    .collect();
                let perm = Perm::from_images(&images);
                shifted = shifted.add(&AlgebraElement::basis(4, pres, part, perm).scale(c));
            }
            let product = x.embed(4).mul(&shifted);
            let lhs = calc.rho(&product);
            let rhs = &calc.rho(&x) * &calc.rho(&y);
            assert!(lhs.eq_val(&rhs));
        }
    }
}
