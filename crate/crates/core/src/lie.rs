//! The abstract Lie algebras E7 and E6 over the Chevalley basis
//! `{h_1..h_7} u {E_a : a root}`, with the bracket fixed by the sign cocycle,
//! the invariant bilinear form, and exhaustive axiom verification.

use crate::report::{Check, Report};
use crate::roots::{cocycle, inner, RootSystemData, RootVector};
use crate::{qi, Q};
use num::traits::Zero;
use rayon::prelude::*;
use std::collections::BTreeMap;
use std::fmt;

/// Exact linear combination over the Chevalley basis.
///
/// Cartan elements are stored in simple-root coordinates, so that
/// `[E_a, E_{-a}] = -a` literally stores the negated tuple of `a`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct LieElt {
    pub cartan: BTreeMap<u8, Q>,
    pub roots: BTreeMap<RootVector, Q>,
}

impl fmt::Debug for LieElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut parts = Vec::new();
        for (r, c) in &self.cartan {
            parts.push(format!("{}*h{}", c, r));
        }
        for (a, c) in &self.roots {
            parts.push(format!("{}*E{}", c, a));
        }
        write!(f, "{}", parts.join(" + "))
    }
}

impl LieElt {
    pub fn zero() -> Self {
        LieElt::default()
    }

    pub fn is_zero(&self) -> bool {
        self.cartan.is_empty() && self.roots.is_empty()
    }

    /// The Cartan element h_r = a_r (1-based node index).
    pub fn cartan_basis(r: usize) -> Self {
        let mut e = LieElt::zero();
        e.cartan.insert(r as u8, qi(1));
        e
    }

    /// Cartan element with the given simple-root coordinates.
    pub fn cartan_vec(v: &RootVector) -> Self {
        let mut e = LieElt::zero();
        for (i, &c) in v.0.iter().enumerate() {
            if c != 0 {
                e.cartan.insert(i as u8 + 1, qi(c));
            }
        }
        e
    }

    /// Root vector E_a.
    pub fn root(a: RootVector) -> Self {
        debug_assert!(a.is_root(), "E_a requires a root");
        let mut e = LieElt::zero();
        e.roots.insert(a, qi(1));
        e
    }

    pub fn scaled(&self, c: &Q) -> Self {
        if c.is_zero() {
            return LieElt::zero();
        }
        let mut out = self.clone();
        for v in out.cartan.values_mut() {
            *v *= c;
        }
        for v in out.roots.values_mut() {
            *v *= c;
        }
        out
    }

    pub fn add_assign_scaled(&mut self, other: &LieElt, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (r, v) in &other.cartan {
            let e = self.cartan.entry(*r).or_insert_with(Q::zero);
            *e += v * c;
            if e.is_zero() {
                self.cartan.remove(r);
            }
        }
        for (a, v) in &other.roots {
            let e = self.roots.entry(*a).or_insert_with(Q::zero);
            *e += v * c;
            if e.is_zero() {
                self.roots.remove(a);
            }
        }
    }

    pub fn add(&self, other: &LieElt) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &qi(1));
        out
    }

    pub fn sub(&self, other: &LieElt) -> Self {
        let mut out = self.clone();
        out.add_assign_scaled(other, &qi(-1));
        out
    }

    /// Cartan part as a rational 7-vector.
    pub fn cartan_coords(&self) -> [Q; 7] {
        let mut out: [Q; 7] = Default::default();
        for (r, c) in &self.cartan {
            out[*r as usize - 1] = c.clone();
        }
        out
    }

    /// Pairing of the Cartan part with a lattice vector.
    fn cartan_pairing(&self, b: &RootVector) -> Q {
        let mut s = Q::zero();
        for (r, c) in &self.cartan {
            s += c * qi(inner(&RootVector::simple(*r as usize), b));
        }
        s
    }
}

/// Chevalley bracket, extended bilinearly.
pub fn bracket(a: &LieElt, b: &LieElt) -> LieElt {
    let mut out = LieElt::zero();
    // [h, E_b] = (h, b) E_b
    for (root, cb) in &b.roots {
        let p = a.cartan_pairing(root);
        if !p.is_zero() {
            out.add_assign_scaled(&LieElt::root(*root), &(p * cb));
        }
    }
    // [E_a, h] = -(h, a) E_a
    for (root, ca) in &a.roots {
        let p = b.cartan_pairing(root);
        if !p.is_zero() {
            out.add_assign_scaled(&LieElt::root(*root), &(-p * ca));
        }
    }
    // [E_a, E_b]
    for (ra, ca) in &a.roots {
        for (rb, cb) in &b.roots {
            let coeff = ca * cb;
            if coeff.is_zero() {
                continue;
            }
            let sum = ra.add(rb);
            if sum.is_zero() {
                // [E_a, E_{-a}] = -a
                out.add_assign_scaled(&LieElt::cartan_vec(ra), &-coeff);
            } else if sum.is_root() {
                let f = qi(cocycle(ra, rb));
                out.add_assign_scaled(&LieElt::root(sum), &(f * coeff));
            }
        }
    }
    out
}

/// Invariant form: `(h1|h2) = (h1,h2)`, `(h|E_a) = 0`, `(E_a|E_b) = -delta_{a+b,0}`.
pub fn invariant_form(a: &LieElt, b: &LieElt) -> Q {
    let mut s = Q::zero();
    for (r, ca) in &a.cartan {
        for (t, cb) in &b.cartan {
            let g = inner(
                &RootVector::simple(*r as usize),
                &RootVector::simple(*t as usize),
            );
            if g != 0 {
                s += ca * cb * qi(g);
            }
        }
    }
    for (ra, ca) in &a.roots {
        if let Some(cb) = b.roots.get(&ra.neg()) {
            s -= ca * cb;
        }
    }
    s
}

/// Split by the a_7 level of the root keys; the Cartan goes to the middle.
pub fn decompose_grading(a: &LieElt) -> (LieElt, LieElt, LieElt) {
    let mut minus = LieElt::zero();
    let mut zero = LieElt::zero();
    let mut plus = LieElt::zero();
    for (r, c) in &a.cartan {
        zero.cartan.insert(*r, c.clone());
    }
    for (root, c) in &a.roots {
        let part = match root.level() {
            l if l < 0 => &mut minus,
            0 => &mut zero,
            _ => &mut plus,
        };
        part.roots.insert(*root, c.clone());
    }
    (minus, zero, plus)
}

/// A named basis element of E7 (or of a subalgebra, by restriction).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Debug)]
pub enum BasisKey {
    Cartan(u8),
    Pos(RootVector),
    Neg(RootVector),
}

impl BasisKey {
    pub fn elt(&self) -> LieElt {
        match self {
            BasisKey::Cartan(r) => LieElt::cartan_basis(*r as usize),
            BasisKey::Pos(a) => LieElt::root(*a),
            BasisKey::Neg(a) => LieElt::root(a.neg()),
        }
    }

    pub fn label(&self) -> String {
        match self {
            BasisKey::Cartan(r) => format!("h{}", r),
            BasisKey::Pos(a) => format!("E{}", a),
            BasisKey::Neg(a) => format!("E-{}", a),
        }
    }
}

/// Deterministic E7 basis: h_1..h_7, positive roots in enumeration order,
/// then negatives in the same order.
pub fn e7_basis(roots: &RootSystemData) -> Vec<BasisKey> {
    let mut out = Vec::with_capacity(133);
    for r in 1..=7 {
        out.push(BasisKey::Cartan(r));
    }
    for a in &roots.positive_e7 {
        out.push(BasisKey::Pos(*a));
    }
    for a in &roots.positive_e7 {
        out.push(BasisKey::Neg(*a));
    }
    out
}

/// E6 basis: h_1..h_6 and the 72 roots of the subsystem.
pub fn e6_basis(roots: &RootSystemData) -> Vec<BasisKey> {
    let mut out = Vec::with_capacity(78);
    for r in 1..=6 {
        out.push(BasisKey::Cartan(r));
    }
    for a in &roots.positive_e6 {
        out.push(BasisKey::Pos(*a));
    }
    for a in &roots.positive_e6 {
        out.push(BasisKey::Neg(*a));
    }
    out
}

/// G0 basis: the E6 basis together with h_7.
pub fn g0_basis(roots: &RootSystemData) -> Vec<BasisKey> {
    let mut out = e6_basis(roots);
    out.push(BasisKey::Cartan(7));
    out
}

pub enum AxiomMode {
    Exhaustive,
    Sampled(usize),
}

/// Check antisymmetry, Jacobi and form-invariance on basis triples.
pub fn verify_axioms(roots: &RootSystemData, mode: AxiomMode) -> Report {
    let basis = e7_basis(roots);
    let n = basis.len();
    let elts: Vec<LieElt> = basis.iter().map(|k| k.elt()).collect();
    // precomputed pairwise brackets
    let table: Vec<Vec<LieElt>> = elts
        .par_iter()
        .map(|a| elts.iter().map(|b| bracket(a, b)).collect())
        .collect();

    let mut report = Report::new("chevalley");

    let mut anti_fail = Vec::new();
    for i in 0..n {
        for j in 0..n {
            let ab = &table[i][j];
            let ba = &table[j][i];
            if !ab.add(ba).is_zero() {
                anti_fail.push((i, j));
            }
        }
    }
    report.push(Check::counted(
        "antisymmetry",
        n * n,
        &anti_fail
            .iter()
            .map(|(i, j)| format!("({}, {})", basis[*i].label(), basis[*j].label()))
            .collect::<Vec<_>>(),
    ));

    let triples: Vec<(usize, usize, usize)> = match mode {
        AxiomMode::Exhaustive => {
            let mut v = Vec::with_capacity(n * n * n);
            for i in 0..n {
                for j in 0..n {
                    for k in 0..n {
                        v.push((i, j, k));
                    }
                }
            }
            v
        }
        AxiomMode::Sampled(count) => {
            let mut state = 0x9e3779b97f4a7c15u64;
            let mut next = move || {
                state ^= state << 13;
                state ^= state >> 7;
                state ^= state << 17;
                (state as usize) % n
            };
            (0..count).map(|_| (next(), next(), next())).collect()
        }
    };

    let jacobi_fail: Vec<String> = triples
        .par_iter()
        .filter_map(|&(i, j, k)| {
            let mut s = bracket(&table[i][j], &elts[k]);
            s.add_assign_scaled(&bracket(&table[j][k], &elts[i]), &qi(1));
            s.add_assign_scaled(&bracket(&table[k][i], &elts[j]), &qi(1));
            if s.is_zero() {
                None
            } else {
                Some(format!(
                    "({}, {}, {})",
                    basis[i].label(),
                    basis[j].label(),
                    basis[k].label()
                ))
            }
        })
        .collect();
    report.push(Check::counted("jacobi", triples.len(), &jacobi_fail));

    let inv_fail: Vec<String> = triples
        .par_iter()
        .filter_map(|&(i, j, k)| {
            let lhs = invariant_form(&table[i][j], &elts[k]);
            let rhs = -invariant_form(&elts[j], &table[i][k]);
            if lhs == rhs {
                None
            } else {
                Some(format!(
                    "({}, {}, {})",
                    basis[i].label(),
                    basis[j].label(),
                    basis[k].label()
                ))
            }
        })
        .collect();
    report.push(Check::counted("form-invariance", triples.len(), &inv_fail));

    report
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::roots::enumerate_roots;

    fn roots() -> RootSystemData {
        enumerate_roots().unwrap()
    }

    #[test]
    fn bracket_opposite_roots() {
        let a7 = RootVector::simple(7);
        let got = bracket(&LieElt::root(a7), &LieElt::root(a7.neg()));
        let mut want = LieElt::zero();
        want.cartan.insert(7, qi(-1));
        assert_eq!(got, want);
    }

    #[test]
    fn bracket_cartan_root() {
        let a1 = LieElt::cartan_basis(1);
        let e3 = LieElt::root(RootVector::simple(3));
        let got = bracket(&a1, &e3);
        assert_eq!(got, e3.scaled(&qi(-1)));
    }

    #[test]
    fn bracket_root_root_sign_from_cocycle() {
        let a1 = RootVector::simple(1);
        let a3 = RootVector::simple(3);
        let got = bracket(&LieElt::root(a1), &LieElt::root(a3));
        let f = qi(cocycle(&a1, &a3));
        assert_eq!(f, qi(-1));
        assert_eq!(got, LieElt::root(a1.add(&a3)).scaled(&f));
        // non-root sum vanishes
        let a2 = RootVector::simple(2);
        assert!(bracket(&LieElt::root(a1), &LieElt::root(a2)).is_zero());
    }

    #[test]
    fn invariant_form_values() {
        let rs = roots();
        // (xi_i | eta_j) = -delta_{ij}
        for (i, bi) in rs.eta_index.iter().enumerate() {
            for (j, bj) in rs.eta_index.iter().enumerate() {
                let xi = LieElt::root(*bi);
                let eta = LieElt::root(bj.neg());
                let want = if i == j { qi(-1) } else { qi(0) };
                assert_eq!(invariant_form(&xi, &eta), want);
            }
        }
        let h1 = LieElt::cartan_basis(1);
        assert_eq!(invariant_form(&h1, &h1), qi(2));
        let e1 = LieElt::root(RootVector::simple(1));
        let e3 = LieElt::root(RootVector::simple(3));
        assert_eq!(invariant_form(&e1, &e3), qi(0));
    }

    #[test]
    fn grading_examples() {
        let rs = roots();
        let e7 = LieElt::root(RootVector::simple(7));
        let (m, z, p) = decompose_grading(&e7);
        assert!(m.is_zero() && z.is_zero());
        assert_eq!(p, e7);
        let hat = LieElt::cartan_vec(&crate::roots::ALPHA_HAT);
        let (m, z, p) = decompose_grading(&hat);
        assert!(m.is_zero() && p.is_zero());
        assert_eq!(z, hat);
        // [g_plus, g_minus] lands in g_zero on all 27x27 basis pairs
        for bi in &rs.eta_index {
            for bj in &rs.eta_index {
                let br = bracket(&LieElt::root(*bi), &LieElt::root(bj.neg()));
                let (m, _, p) = decompose_grading(&br);
                assert!(m.is_zero() && p.is_zero());
            }
        }
    }

    #[test]
    fn plus_minus_abelian() {
        let rs = roots();
        for bi in &rs.eta_index {
            for bj in &rs.eta_index {
                assert!(bracket(&LieElt::root(*bi), &LieElt::root(*bj)).is_zero());
                assert!(
                    bracket(&LieElt::root(bi.neg()), &LieElt::root(bj.neg())).is_zero()
                );
            }
        }
    }

    #[test]
    fn alpha_hat_centralizes_e6() {
        let rs = roots();
        let hat = LieElt::cartan_vec(&crate::roots::ALPHA_HAT);
        for key in e6_basis(&rs) {
            assert!(bracket(&hat, &key.elt()).is_zero(), "{:?}", key);
        }
    }

    #[test]
    fn axioms_sampled() {
        let rs = roots();
        let report = verify_axioms(&rs, AxiomMode::Sampled(500));
        assert!(report.all_pass(), "{}", report.render_text());
    }

    #[test]
    fn jacobi_cartan_triple() {
        let h1 = LieElt::cartan_basis(1);
        let h2 = LieElt::cartan_basis(2);
        let e = LieElt::root(RootVector::simple(4));
        let mut s = bracket(&bracket(&h1, &h2), &e);
        s.add_assign_scaled(&bracket(&bracket(&h2, &e), &h1), &qi(1));
        s.add_assign_scaled(&bracket(&bracket(&e, &h1), &h2), &qi(1));
        assert!(s.is_zero());
    }

    #[test]
    fn invariance_specific_triple() {
        let a1 = RootVector::simple(1);
        let a3 = RootVector::simple(3);
        let u = LieElt::root(a1);
        let v = LieElt::root(a3);
        let w = LieElt::root(a1.add(&a3).neg());
        let lhs = invariant_form(&bracket(&u, &v), &w);
        let rhs = -invariant_form(&v, &bracket(&u, &w));
        assert_eq!(lhs, rhs);
        assert!(!lhs.is_zero());
    }
}
