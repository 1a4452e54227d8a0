//! Normal-ordered differential operators in 27 variables.
//!
//! A term `x^b d^g` means: first differentiate by `d^g`, then multiply by
//! `x^b` (all multiplications left of all derivatives).  Coefficients are
//! pairs `k + k_c * c` for a formal central-charge parameter `c`; products
//! that would produce a `c^2` term are rejected, since no identity in scope
//! ever needs one.

use crate::poly::{Mono, Poly, NVARS};
use crate::{qi, usage, Q, Result};
use num::traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

/// Coefficient affine in the formal charge: `k + kc * c`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct CLin {
    pub k: Q,
    pub kc: Q,
}

impl fmt::Debug for CLin {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.kc.is_zero() {
            write!(f, "{}", self.k)
        } else if self.k.is_zero() {
            write!(f, "{}c", self.kc)
        } else {
            write!(f, "{}+{}c", self.k, self.kc)
        }
    }
}

impl CLin {
    pub fn zero() -> Self {
        CLin::default()
    }

    pub fn constant(k: Q) -> Self {
        CLin { k, kc: Q::zero() }
    }

    pub fn charge(kc: Q) -> Self {
        CLin { k: Q::zero(), kc }
    }

    pub fn is_zero(&self) -> bool {
        self.k.is_zero() && self.kc.is_zero()
    }

    pub fn add_assign(&mut self, other: &CLin) {
        self.k += &other.k;
        self.kc += &other.kc;
    }

    pub fn scaled(&self, c: &Q) -> CLin {
        CLin {
            k: &self.k * c,
            kc: &self.kc * c,
        }
    }

    pub fn neg(&self) -> CLin {
        CLin {
            k: -self.k.clone(),
            kc: -self.kc.clone(),
        }
    }

    /// Product of affine coefficients; errors on a genuine c^2 term.
    pub fn mul(&self, other: &CLin) -> Result<CLin> {
        if !self.kc.is_zero() && !other.kc.is_zero() {
            return Err(usage(
                "central-charge degree overflow: product of two charge-linear coefficients",
            ));
        }
        Ok(CLin {
            k: &self.k * &other.k,
            kc: &self.k * &other.kc + &self.kc * &other.k,
        })
    }

    pub fn eval(&self, c: &Q) -> Q {
        &self.k + &self.kc * c
    }
}

/// Normal-ordered element of the Weyl algebra on `C[x_1..x_27]`.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct WeylElt {
    pub terms: BTreeMap<(Mono, Mono), CLin>,
}

impl fmt::Debug for WeylElt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|((x, d), c)| {
                let mut s = format!("({:?})", c);
                if !x.is_one() {
                    s.push_str(&format!("{:?}", x));
                }
                if !d.is_one() {
                    let dd = Mono(d.0);
                    s.push_str(&format!("d[{:?}]", dd));
                }
                s
            })
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl WeylElt {
    pub fn zero() -> Self {
        WeylElt::default()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn identity() -> Self {
        let mut e = WeylElt::zero();
        e.terms
            .insert((Mono::one(), Mono::one()), CLin::constant(qi(1)));
        e
    }

    /// d/dx_i (1-based).
    pub fn dvar(i: usize) -> Self {
        let mut e = WeylElt::zero();
        e.terms
            .insert((Mono::one(), Mono::var(i)), CLin::constant(qi(1)));
        e
    }

    /// Multiplication by a polynomial.
    pub fn mul_poly(p: &Poly) -> Self {
        let mut e = WeylElt::zero();
        for (m, c) in &p.terms {
            e.terms.insert((*m, Mono::one()), CLin::constant(c.clone()));
        }
        e
    }

    /// x_j d_i as a single term.
    pub fn xd(j: usize, i: usize) -> Self {
        let mut e = WeylElt::zero();
        e.terms
            .insert((Mono::var(j), Mono::var(i)), CLin::constant(qi(1)));
        e
    }

    /// The degree operator D = sum_i x_i d_i.
    pub fn degree_op() -> Self {
        let mut e = WeylElt::zero();
        for i in 1..=NVARS {
            e.terms
                .insert((Mono::var(i), Mono::var(i)), CLin::constant(qi(1)));
        }
        e
    }

    pub fn add_term(&mut self, key: (Mono, Mono), c: &CLin) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(key).or_insert_with(CLin::zero);
        e.add_assign(c);
        if e.is_zero() {
            self.terms.remove(&key);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &WeylElt, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (key, v) in &other.terms {
            self.add_term(*key, &v.scaled(c));
        }
    }

    pub fn add(&self, other: &WeylElt) -> WeylElt {
        let mut out = self.clone();
        out.add_assign_scaled(other, &qi(1));
        out
    }

    pub fn sub(&self, other: &WeylElt) -> WeylElt {
        let mut out = self.clone();
        out.add_assign_scaled(other, &qi(-1));
        out
    }

    pub fn scaled(&self, c: &Q) -> WeylElt {
        let mut out = WeylElt::zero();
        out.add_assign_scaled(self, c);
        out
    }

    /// Multiply every coefficient by the formal charge.
    pub fn times_charge(&self) -> Result<WeylElt> {
        let mut out = WeylElt::zero();
        for (key, v) in &self.terms {
            if !v.kc.is_zero() {
                return Err(usage("central-charge degree overflow in times_charge"));
            }
            out.terms.insert(
                *key,
                CLin {
                    k: Q::zero(),
                    kc: v.k.clone(),
                },
            );
        }
        Ok(out)
    }

    /// Split into the charge-free part and the coefficient of c.
    pub fn charge_split(&self) -> (WeylElt, WeylElt) {
        let mut a = WeylElt::zero();
        let mut b = WeylElt::zero();
        for (key, v) in &self.terms {
            if !v.k.is_zero() {
                a.terms.insert(*key, CLin::constant(v.k.clone()));
            }
            if !v.kc.is_zero() {
                b.terms.insert(*key, CLin::constant(v.kc.clone()));
            }
        }
        (a, b)
    }

    pub fn has_charge(&self) -> bool {
        self.terms.values().any(|v| !v.kc.is_zero())
    }

    /// Apply to a polynomial.  Charge-carrying operators need a charge value.
    pub fn apply(&self, f: &Poly, charge: Option<&Q>) -> Result<Poly> {
        let mut out = Poly::zero();
        for ((x, d), coeff) in &self.terms {
            let c = match charge {
                Some(cv) => coeff.eval(cv),
                None => {
                    if !coeff.kc.is_zero() {
                        return Err(usage(
                            "applying a charge-symbolic operator without a charge value",
                        ));
                    }
                    coeff.k.clone()
                }
            };
            if c.is_zero() {
                continue;
            }
            'term: for (m, mc) in &f.terms {
                // differentiate monomial m by d
                let mut factor = qi(1);
                let mut m2 = *m;
                for i in 0..NVARS {
                    let di = d.0[i];
                    if di == 0 {
                        continue;
                    }
                    if m2.0[i] < di {
                        continue 'term;
                    }
                    for _ in 0..di {
                        factor *= qi(m2.0[i] as i64);
                        m2.0[i] -= 1;
                    }
                }
                out.add_term(m2.mul(x), &(mc * &c * &factor));
            }
        }
        Ok(out)
    }

    /// Apply a charge-free operator; panics on charge terms (internal use).
    pub fn apply_cfree(&self, f: &Poly) -> Poly {
        self.apply(f, None).expect("operator unexpectedly charge-symbolic")
    }

    /// Normal-ordered product self * other (apply `other` first).
    pub fn compose(&self, other: &WeylElt) -> Result<WeylElt> {
        let mut out = WeylElt::zero();
        for ((xa, da), ca) in &self.terms {
            for ((xb, db), cb) in &other.terms {
                let c = ca.mul(cb)?;
                if c.is_zero() {
                    continue;
                }
                // reorder d^da x^xb: sum over contractions k <= min(da, xb)
                // with coefficient prod_i binom(da_i, k_i) * falling(xb_i, k_i)
                let mut idxs = Vec::new();
                for i in 0..NVARS {
                    if da.0[i] > 0 && xb.0[i] > 0 {
                        idxs.push(i);
                    }
                }
                // iterate contraction exponents over idxs
                let mut k = vec![0u8; idxs.len()];
                loop {
                    let mut factor = qi(1);
                    let mut xr = *xb;
                    let mut dr = *da;
                    for (pos, &i) in idxs.iter().enumerate() {
                        let ki = k[pos];
                        if ki > 0 {
                            // binom(da_i, ki) * xb_i * (xb_i-1) * ... * (xb_i-ki+1)
                            let mut bin = qi(1);
                            for t in 0..ki {
                                bin *= qi((da.0[i] - t) as i64);
                                bin /= qi((t + 1) as i64);
                            }
                            let mut fall = qi(1);
                            for t in 0..ki {
                                fall *= qi((xb.0[i] - t) as i64);
                            }
                            factor *= bin * fall;
                            xr.0[i] -= ki;
                            dr.0[i] -= ki;
                        }
                    }
                    out.add_term((xa.mul(&xr), dr.mul(db)), &c.scaled(&factor));
                    // increment k in mixed radix with digit i bounded by
                    // min(da_i, xb_i)
                    let mut pos = 0;
                    loop {
                        if pos == idxs.len() {
                            break;
                        }
                        let i = idxs[pos];
                        let cap = da.0[i].min(xb.0[i]);
                        if k[pos] < cap {
                            k[pos] += 1;
                            break;
                        }
                        k[pos] = 0;
                        pos += 1;
                    }
                    if pos == idxs.len() {
                        break;
                    }
                }
            }
        }
        Ok(out)
    }

    /// Commutator [self, other], splitting by charge degree so that the
    /// (vanishing) c^2 bracket of the charge parts never overflows.
    pub fn commutator(&self, other: &WeylElt) -> Result<WeylElt> {
        let (a0, a1) = self.charge_split();
        let (b0, b1) = other.charge_split();
        let mut out = a0.compose(&b0)?.sub(&b0.compose(&a0)?);
        if !a1.is_zero() || !b1.is_zero() {
            let c1 = a0
                .compose(&b1)?
                .sub(&b1.compose(&a0)?)
                .add(&a1.compose(&b0)?.sub(&b0.compose(&a1)?));
            out.add_assign_scaled(&c1.times_charge()?, &qi(1));
            let c2 = a1.compose(&b1)?.sub(&b1.compose(&a1)?);
            if !c2.is_zero() {
                return Err(usage(
                    "central-charge degree overflow: charge parts do not commute",
                ));
            }
        }
        Ok(out)
    }

    /// The involution swapping multiplication and derivative exponents.
    pub fn tau(&self) -> WeylElt {
        let mut out = WeylElt::zero();
        for ((x, d), c) in &self.terms {
            out.terms.insert((*d, *x), c.clone());
        }
        out
    }

    /// Largest derivative order among terms.
    pub fn max_d_order(&self) -> u32 {
        self.terms
            .keys()
            .map(|(_, d)| d.degree())
            .max()
            .unwrap_or(0)
    }

    /// Jacobian embedding of a first-order operator: entry (i,j) holds
    /// d_i(f_j) for self = sum_j f_j d_j.  Multiplication-only or
    /// higher-order input is a usage error.
    pub fn jacobian_embed(&self) -> Result<Vec<Vec<Poly>>> {
        // collect coefficient polynomials f_j
        let mut coeffs: Vec<Poly> = vec![Poly::zero(); NVARS];
        for ((x, d), c) in &self.terms {
            if d.degree() != 1 {
                return Err(usage(
                    "jacobian embedding requires a purely first-order operator",
                ));
            }
            if !c.kc.is_zero() {
                return Err(usage("jacobian embedding requires a charge-free operator"));
            }
            let j = d.0.iter().position(|&e| e == 1).unwrap();
            coeffs[j].add_term(*x, &c.k);
        }
        let mut out = vec![vec![Poly::zero(); NVARS]; NVARS];
        for (j, f) in coeffs.iter().enumerate() {
            for i in 0..NVARS {
                out[i][j] = f.derivative(i + 1);
            }
        }
        Ok(out)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::monomials_of_degree;

    #[test]
    fn apply_basics() {
        let d1 = WeylElt::dvar(1);
        let x1sq = Poly::var(1).mul(&Poly::var(1));
        assert_eq!(d1.apply_cfree(&x1sq), Poly::var(1).scaled(&qi(2)));
        let op = WeylElt::xd(5, 8);
        let f = Poly::var(8).mul(&Poly::var(2));
        assert_eq!(op.apply_cfree(&f), Poly::var(5).mul(&Poly::var(2)));
    }

    #[test]
    fn degree_operator_eigenvalues() {
        let d = WeylElt::degree_op();
        for deg in 0..4u32 {
            // a few monomials of each degree
            let mono = {
                let mut m = Mono::one();
                for t in 0..deg {
                    m.0[(t as usize * 7) % NVARS] += 1;
                }
                m
            };
            let f = Poly::monomial(mono, qi(1));
            assert_eq!(d.apply_cfree(&f), f.scaled(&qi(deg as i64)));
        }
    }

    #[test]
    fn canonical_commutation() {
        let d1 = WeylElt::dvar(1);
        let x1 = WeylElt::mul_poly(&Poly::var(1));
        let got = d1.compose(&x1).unwrap();
        let want = WeylElt::xd(1, 1).add(&WeylElt::identity());
        assert_eq!(got, want);
        // [d_i, x_j] = delta_ij
        for i in [1, 5, 27] {
            for j in [1, 5, 27] {
                let com = WeylElt::dvar(i)
                    .commutator(&WeylElt::mul_poly(&Poly::var(j)))
                    .unwrap();
                let want = if i == j {
                    WeylElt::identity()
                } else {
                    WeylElt::zero()
                };
                assert_eq!(com, want);
            }
        }
    }

    #[test]
    fn compose_against_application_oracle() {
        // x1 d2 . x2 d1 = x1 d1 + x1 x2 d1 d2, checked on all monomials of
        // degree <= 3 by applying both factors in sequence.
        let a = WeylElt::xd(1, 2);
        let b = WeylElt::xd(2, 1);
        let ab = a.compose(&b).unwrap();
        let mut want = WeylElt::xd(1, 1);
        let mut t = WeylElt::zero();
        t.terms.insert(
            (Mono::var(1).mul(&Mono::var(2)), Mono::var(1).mul(&Mono::var(2))),
            CLin::constant(qi(1)),
        );
        want.add_assign_scaled(&t, &qi(1));
        assert_eq!(ab, want);
        for d in 0..=3u32 {
            for m in monomials_of_degree(d) {
                let f = Poly::monomial(m, qi(1));
                let seq = a.apply_cfree(&b.apply_cfree(&f));
                let direct = ab.apply_cfree(&f);
                assert_eq!(seq, direct);
            }
        }
    }

    #[test]
    fn higher_order_contraction() {
        // d1^2 . x1^2 = x1^2 d1^2 + 4 x1 d1 + 2
        let mut d2 = WeylElt::zero();
        let mut m = Mono::one();
        m.0[0] = 2;
        d2.terms.insert((Mono::one(), m), CLin::constant(qi(1)));
        let mut x2 = WeylElt::zero();
        x2.terms.insert((m, Mono::one()), CLin::constant(qi(1)));
        let got = d2.compose(&x2).unwrap();
        let mut want = WeylElt::zero();
        want.terms.insert((m, m), CLin::constant(qi(1)));
        want.add_term((Mono::var(1), Mono::var(1)), &CLin::constant(qi(4)));
        want.add_term((Mono::one(), Mono::one()), &CLin::constant(qi(2)));
        assert_eq!(got, want);
    }

    #[test]
    fn tau_involutive_antiautomorphism() {
        let a = WeylElt::xd(5, 8);
        assert_eq!(a.tau(), WeylElt::xd(8, 5));
        assert_eq!(a.tau().tau(), a);
        assert_eq!(WeylElt::degree_op().tau(), WeylElt::degree_op());
        // tau(a.b) = tau(b).tau(a) on a sampled pair with contractions
        let b = WeylElt::dvar(5).add(&WeylElt::xd(8, 2));
        let lhs = a.compose(&b).unwrap().tau();
        let rhs = b.tau().compose(&a.tau()).unwrap();
        assert_eq!(lhs, rhs);
    }

    #[test]
    fn charge_rules() {
        let d1 = WeylElt::dvar(1);
        let c_op = WeylElt::identity().times_charge().unwrap();
        assert!(c_op.has_charge());
        assert!(c_op.apply(&Poly::one(), None).is_err());
        assert_eq!(
            c_op.apply(&Poly::one(), Some(&crate::qr(5, 3))).unwrap(),
            Poly::constant(crate::qr(5, 3))
        );
        // product of two charge-carrying operators errors...
        assert!(c_op.compose(&c_op).is_err());
        // ...but commutators split by charge degree and succeed when the
        // charge parts commute
        let a = d1.add(&WeylElt::mul_poly(&Poly::var(1)).times_charge().unwrap());
        let b = WeylElt::xd(1, 1).add(&WeylElt::mul_poly(&Poly::var(2)).times_charge().unwrap());
        let com = a.commutator(&b).unwrap();
        assert!(!com.is_zero());
    }

    #[test]
    fn jacobian_embedding() {
        // Im1(f d1) with f = x2: slot (2-row, 1-col) per d_i(f_j)
        let mut op = WeylElt::zero();
        op.terms
            .insert((Mono::var(2), Mono::var(1)), CLin::constant(qi(1)));
        let m = op.jacobian_embed().unwrap();
        for i in 0..NVARS {
            for j in 0..NVARS {
                let want = if i == 1 && j == 0 {
                    Poly::one()
                } else {
                    Poly::zero()
                };
                assert_eq!(m[i][j], want, "slot ({},{})", i, j);
            }
        }
        // Im1(D) = identity matrix
        let d = WeylElt::degree_op().jacobian_embed().unwrap();
        for i in 0..NVARS {
            for j in 0..NVARS {
                let want = if i == j { Poly::one() } else { Poly::zero() };
                assert_eq!(d[i][j], want);
            }
        }
        assert!(WeylElt::mul_poly(&Poly::var(3)).jacobian_embed().is_err());
    }
}
