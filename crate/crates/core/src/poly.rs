//! Sparse exact polynomials in 27 variables.

use crate::{qi, Q};
use num::traits::Zero;
use std::collections::BTreeMap;
use std::fmt;

pub const NVARS: usize = 27;

/// Exponent vector of a monomial.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Mono(pub [u8; NVARS]);

impl Mono {
    pub fn one() -> Self {
        Mono([0; NVARS])
    }

    /// x_i as a monomial (1-based).
    pub fn var(i: usize) -> Self {
        debug_assert!((1..=NVARS).contains(&i));
        let mut e = [0; NVARS];
        e[i - 1] = 1;
        Mono(e)
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().map(|&e| e as u32).sum()
    }

    pub fn mul(&self, other: &Mono) -> Mono {
        let mut e = [0; NVARS];
        for i in 0..NVARS {
            e[i] = self.0[i] + other.0[i];
        }
        Mono(e)
    }

    pub fn is_one(&self) -> bool {
        self.0.iter().all(|&e| e == 0)
    }
}

impl fmt::Debug for Mono {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_one() {
            return write!(f, "1");
        }
        let mut first = true;
        for (i, &e) in self.0.iter().enumerate() {
            if e > 0 {
                if !first {
                    write!(f, "*")?;
                }
                first = false;
                if e == 1 {
                    write!(f, "x{}", i + 1)?;
                } else {
                    write!(f, "x{}^{}", i + 1, e)?;
                }
            }
        }
        Ok(())
    }
}

/// Sparse polynomial with exact rational coefficients.
#[derive(Clone, PartialEq, Eq, Default)]
pub struct Poly {
    pub terms: BTreeMap<Mono, Q>,
}

impl fmt::Debug for Poly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let parts: Vec<String> = self
            .terms
            .iter()
            .map(|(m, c)| format!("{}*{:?}", c, m))
            .collect();
        write!(f, "{}", parts.join(" + "))
    }
}

impl Poly {
    pub fn zero() -> Self {
        Poly::default()
    }

    pub fn one() -> Self {
        Poly::constant(qi(1))
    }

    pub fn constant(c: Q) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(Mono::one(), c);
        }
        p
    }

    /// x_i (1-based).
    pub fn var(i: usize) -> Self {
        let mut p = Poly::zero();
        p.terms.insert(Mono::var(i), qi(1));
        p
    }

    pub fn monomial(m: Mono, c: Q) -> Self {
        let mut p = Poly::zero();
        if !c.is_zero() {
            p.terms.insert(m, c);
        }
        p
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn num_terms(&self) -> usize {
        self.terms.len()
    }

    pub fn add_term(&mut self, m: Mono, c: &Q) {
        if c.is_zero() {
            return;
        }
        let e = self.terms.entry(m).or_insert_with(Q::zero);
        *e += c;
        if e.is_zero() {
            self.terms.remove(&m);
        }
    }

    pub fn add_assign_scaled(&mut self, other: &Poly, c: &Q) {
        if c.is_zero() {
            return;
        }
        for (m, v) in &other.terms {
            self.add_term(*m, &(v * c));
        }
    }

    pub fn add(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &qi(1));
        out
    }

    pub fn sub(&self, other: &Poly) -> Poly {
        let mut out = self.clone();
        out.add_assign_scaled(other, &qi(-1));
        out
    }

    pub fn scaled(&self, c: &Q) -> Poly {
        let mut out = Poly::zero();
        out.add_assign_scaled(self, c);
        out
    }

    pub fn neg(&self) -> Poly {
        self.scaled(&qi(-1))
    }

    pub fn mul(&self, other: &Poly) -> Poly {
        let mut out = Poly::zero();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), &(ca * cb));
            }
        }
        out
    }

    /// Partial derivative with respect to x_i (1-based).
    pub fn derivative(&self, i: usize) -> Poly {
        let mut out = Poly::zero();
        for (m, c) in &self.terms {
            let e = m.0[i - 1];
            if e > 0 {
                let mut m2 = *m;
                m2.0[i - 1] -= 1;
                out.add_term(m2, &(c * qi(e as i64)));
            }
        }
        out
    }

    /// Total degree, or None for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(|m| m.degree()).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut deg = None;
        for m in self.terms.keys() {
            match deg {
                None => deg = Some(m.degree()),
                Some(d) if d == m.degree() => {}
                _ => return false,
            }
        }
        true
    }

    /// Coefficient of a monomial (zero if absent).
    pub fn coeff(&self, m: &Mono) -> Q {
        self.terms.get(m).cloned().unwrap_or_else(Q::zero)
    }

    /// Exact division check: self == c * other for some rational c.
    /// Returns the ratio when the polynomials are proportional.
    pub fn ratio_to(&self, other: &Poly) -> Option<Q> {
        if other.is_zero() {
            return if self.is_zero() { Some(Q::zero()) } else { None };
        }
        if self.is_zero() {
            return Some(Q::zero());
        }
        let (m0, c0) = other.terms.iter().next().unwrap();
        let cand = self.coeff(m0) / c0;
        if self == &other.scaled(&cand) {
            Some(cand)
        } else {
            None
        }
    }
}

/// All monomials in NVARS variables of total degree exactly d (small d only).
pub fn monomials_of_degree(d: u32) -> Vec<Mono> {
    let mut out = Vec::new();
    let mut cur = Mono::one();
    fn rec(pos: usize, left: u32, cur: &mut Mono, out: &mut Vec<Mono>) {
        if pos == NVARS - 1 {
            cur.0[pos] = left as u8;
            out.push(*cur);
            cur.0[pos] = 0;
            return;
        }
        for e in 0..=left {
            cur.0[pos] = e as u8;
            rec(pos + 1, left - e, cur, out);
        }
        cur.0[pos] = 0;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn arithmetic_basics() {
        let x1 = Poly::var(1);
        let x2 = Poly::var(2);
        let p = x1.mul(&x1).add(&x2.scaled(&qi(3)));
        assert_eq!(p.num_terms(), 2);
        assert_eq!(p.derivative(1), x1.scaled(&qi(2)));
        assert_eq!(p.derivative(2), Poly::constant(qi(3)));
        assert!(p.sub(&p).is_zero());
    }

    #[test]
    fn ratio_detection() {
        let x1 = Poly::var(1);
        let x2 = Poly::var(2);
        let p = x1.mul(&x2).sub(&x1.mul(&x1));
        let q = p.scaled(&crate::qr(-7, 3));
        assert_eq!(q.ratio_to(&p), Some(crate::qr(-7, 3)));
        assert_eq!(p.ratio_to(&x1), None);
    }
}
