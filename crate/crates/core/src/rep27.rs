//! The representation of the degree-zero subalgebra on `C[x_1..x_27]`.
//!
//! For `u` in G0 the adjoint action on the eta basis, `[u, eta_i] =
//! sum_j phi_{i,j}(u) eta_j`, turns into the first-order operator
//! `sum_{i,j} phi_{i,j}(u) x_j d_i`.  Everything is generated from the
//! Chevalley bracket; the printed operator formulas and the weight table are
//! fixtures that the generated operators must reproduce.

use crate::fixtures::{self, Fixtures};
use crate::lie::{bracket, decompose_grading, g0_basis, BasisKey, LieElt};
use crate::report::{Check, Report};
use crate::roots::{RootSystemData, RootVector};
use crate::weyl::WeylElt;
use crate::{qi, usage, Q, Result};
use num::traits::Zero;
use std::collections::BTreeMap;

/// Adjoint-action coefficients of a G0 element on the eta basis.
pub fn phi_coeffs(roots: &RootSystemData, u: &LieElt) -> Result<Vec<Vec<Q>>> {
    let (minus, _, plus) = decompose_grading(u);
    if !minus.is_zero() || !plus.is_zero() {
        return Err(usage(
            "phi coefficients are defined for degree-zero elements only",
        ));
    }
    let mut out = vec![vec![Q::zero(); 27]; 27];
    for (i, beta) in roots.eta_index.iter().enumerate() {
        let eta = LieElt::root(beta.neg());
        let br = bracket(u, &eta);
        if !br.cartan.is_empty() {
            return Err(usage("bracket left the span of the eta basis"));
        }
        for (root, c) in &br.roots {
            let j = roots
                .eta_position(&root.neg())
                .ok_or_else(|| usage("bracket left the span of the eta basis"))?;
            out[i][j] = c.clone();
        }
    }
    Ok(out)
}

/// The operator `sum_{i,j} phi_{i,j}(u) x_j d_i`.
pub fn operator_of(roots: &RootSystemData, u: &LieElt) -> Result<WeylElt> {
    let phi = phi_coeffs(roots, u)?;
    let mut op = WeylElt::zero();
    for (i, row) in phi.iter().enumerate() {
        for (j, c) in row.iter().enumerate() {
            if !c.is_zero() {
                op.add_assign_scaled(&WeylElt::xd(j + 1, i + 1), c);
            }
        }
    }
    Ok(op)
}

/// Table of generated operators for the whole G0 basis, keyed for reuse.
pub struct G0Operators {
    pub ops: BTreeMap<BasisKey, WeylElt>,
}

impl G0Operators {
    pub fn build(roots: &RootSystemData) -> Result<Self> {
        let mut ops = BTreeMap::new();
        for key in g0_basis(roots) {
            ops.insert(key, operator_of(roots, &key.elt())?);
        }
        Ok(G0Operators { ops })
    }

    pub fn get(&self, key: &BasisKey) -> &WeylElt {
        &self.ops[key]
    }

    /// Operator of an arbitrary G0 element by linearity.
    pub fn of_elt(&self, u: &LieElt) -> WeylElt {
        let mut out = WeylElt::zero();
        for (r, c) in &u.cartan {
            out.add_assign_scaled(&self.ops[&BasisKey::Cartan(*r)], c);
        }
        for (root, c) in &u.roots {
            let key = if root.is_positive() {
                BasisKey::Pos(*root)
            } else {
                BasisKey::Neg(root.neg())
            };
            out.add_assign_scaled(&self.ops[&key], c);
        }
        out
    }

    /// Diagonal weight of x_i under the Cartan generators, in fundamental
    /// coordinates (the a_r eigenvalue IS the r-th fundamental coordinate).
    pub fn weight_of_x(&self, i: usize) -> [i64; 6] {
        let mut w = [0i64; 6];
        for r in 1..=6 {
            let op = &self.ops[&BasisKey::Cartan(r as u8)];
            let f = crate::poly::Poly::var(i);
            let img = op.apply_cfree(&f);
            if let Some(ratio) = img.ratio_to(&f) {
                w[r - 1] = ratio.to_integer().try_into().unwrap();
            }
        }
        w
    }
}

/// Diff the generated operators against the printed formulas and Table 1.
pub fn verify_against_fixtures(
    roots: &RootSystemData,
    ops: &G0Operators,
    fx: &Fixtures,
) -> Result<Report> {
    let mut report = Report::new("rep27");

    // 36 positive-root operator displays
    let mut op_fail = Vec::new();
    for entry in &fx.e6_operators {
        let key = BasisKey::Pos(entry.root);
        let Some(generated) = ops.ops.get(&key) else {
            op_fail.push(format!("{} not a positive E6 root", entry.root));
            continue;
        };
        if generated != &entry.op {
            op_fail.push(format!("{} (eq {})", entry.root, entry.eq));
        }
    }
    report.push(Check::counted(
        "positive-root-operator-fixtures",
        fx.e6_operators.len(),
        &op_fail,
    ));
    let ledgered: Vec<&fixtures::TypoEntry> = fx
        .typo_ledger
        .iter()
        .filter(|t| t.subject.starts_with("eq2."))
        .collect();
    report.push(Check::pass(
        "typo-ledger",
        format!(
            "{} transcription notes carried for section-2 displays",
            ledgered.len()
        ),
    ));

    // Table 1: a_{i,r} for r in 1..7
    let mut t1_fail = Vec::new();
    let mut count = 0;
    for r in 1..=7u8 {
        let op = &ops.ops[&BasisKey::Cartan(r)];
        for i in 1..=27usize {
            count += 1;
            let want = fx.table1[i - 1][r as usize - 1];
            let f = crate::poly::Poly::var(i);
            let img = op.apply_cfree(&f);
            let got = img.ratio_to(&f);
            if got != Some(qi(want)) {
                t1_fail.push(format!("a[{},{}]", i, r));
            }
        }
    }
    report.push(Check::counted("table1-weights", count, &t1_fail));

    // negatives are minus the transpose of the positives
    let mut tau_fail = Vec::new();
    for a in &roots.positive_e6 {
        let pos = &ops.ops[&BasisKey::Pos(*a)];
        let neg = &ops.ops[&BasisKey::Neg(*a)];
        if neg != &pos.tau().scaled(&qi(-1)) {
            tau_fail.push(format!("{}", a));
        }
    }
    report.push(Check::counted(
        "negative-root-tau-relation",
        roots.positive_e6.len(),
        &tau_fail,
    ));

    // representation property on all G0 basis pairs
    let basis = g0_basis(roots);
    let mut hom_fail = Vec::new();
    let mut pairs = 0;
    for (ia, a) in basis.iter().enumerate() {
        for b in basis.iter().skip(ia + 1) {
            pairs += 1;
            let lhs = ops.ops[a].commutator(&ops.ops[b])?;
            let rhs = ops.of_elt(&bracket(&a.elt(), &b.elt()));
            if lhs != rhs {
                hom_fail.push(format!("[{}, {}]", a.label(), b.label()));
            }
        }
    }
    report.push(Check::counted("homomorphism-g0-pairs", pairs, &hom_fail));

    Ok(report)
}

/// Structural invariant of the root operators: six terms, unit coefficients.
pub fn root_operator_shape(roots: &RootSystemData, ops: &G0Operators) -> Result<()> {
    for a in &roots.positive_e6 {
        for key in [BasisKey::Pos(*a), BasisKey::Neg(*a)] {
            let op = &ops.ops[&key];
            if op.terms.len() != 6 {
                return Err(crate::internal(format!(
                    "{} has {} terms, want 6",
                    key.label(),
                    op.terms.len()
                )));
            }
            for ((x, d), c) in &op.terms {
                if x.degree() != 1 || d.degree() != 1 {
                    return Err(crate::internal(format!(
                        "{} has a non-linear term",
                        key.label()
                    )));
                }
                if !c.kc.is_zero() || (c.k != qi(1) && c.k != qi(-1)) {
                    return Err(crate::internal(format!(
                        "{} has a non-unit coefficient",
                        key.label()
                    )));
                }
            }
        }
    }
    Ok(())
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::context::shared;
    use crate::roots::ALPHA_HAT;

    #[test]
    fn alpha_hat_is_minus_twice_degree() {
        // Table 1 forces (a_hat, beta_i) = 2 for every level-one root, so the
        // induced operator is -2D, not the degree operator itself.
        let ctx = shared();
        let hat = LieElt::cartan_vec(&ALPHA_HAT);
        let op = operator_of(&ctx.roots, &hat).unwrap();
        assert_eq!(op, WeylElt::degree_op().scaled(&qi(-2)));
        let phi = phi_coeffs(&ctx.roots, &hat).unwrap();
        for i in 0..27 {
            for j in 0..27 {
                let want = if i == j { qi(-2) } else { qi(0) };
                assert_eq!(phi[i][j], want);
            }
        }
    }

    #[test]
    fn alpha7_matrix_is_table1_column() {
        let ctx = shared();
        let phi = phi_coeffs(&ctx.roots, &LieElt::cartan_basis(7)).unwrap();
        for i in 0..27 {
            for j in 0..27 {
                let want = if i == j {
                    qi(ctx.fixtures.table1[i][6])
                } else {
                    qi(0)
                };
                assert_eq!(phi[i][j], want, "slot ({},{})", i, j);
            }
        }
    }

    #[test]
    fn e_alpha1_slots_match_display() {
        // x5 d8 + x7 d10 + x9 d12 + x11 d13 + x14 d17 + x26 d27
        let ctx = shared();
        let op = operator_of(&ctx.roots, &LieElt::root(RootVector::simple(1))).unwrap();
        let want: Vec<(usize, usize)> = vec![(5, 8), (7, 10), (9, 12), (11, 13), (14, 17), (26, 27)];
        assert_eq!(op.terms.len(), 6);
        for (j, i) in want {
            let key = (crate::poly::Mono::var(j), crate::poly::Mono::var(i));
            assert_eq!(op.terms[&key].k, qi(1), "term x{} d{}", j, i);
        }
    }

    #[test]
    fn rejects_graded_input() {
        let ctx = shared();
        let xi1 = LieElt::root(ctx.roots.eta_index[0]);
        assert!(phi_coeffs(&ctx.roots, &xi1).is_err());
        assert!(operator_of(&ctx.roots, &xi1).is_err());
    }

    #[test]
    fn weight_consistency_against_table1() {
        let ctx = shared();
        for i in 1..=27 {
            let w = ctx.g0ops.weight_of_x(i);
            for r in 1..=6 {
                assert_eq!(w[r - 1], ctx.fixtures.table1[i - 1][r - 1]);
            }
        }
    }

    #[test]
    fn operator_shape_invariant() {
        let ctx = shared();
        root_operator_shape(&ctx.roots, &ctx.g0ops).unwrap();
    }

    #[test]
    fn fixture_verification_clean() {
        let ctx = shared();
        let report = verify_against_fixtures(&ctx.roots, &ctx.g0ops, &ctx.fixtures).unwrap();
        assert!(report.all_pass(), "{}", report.render_text());
    }
}
