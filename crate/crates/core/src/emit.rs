//! Text and JSON formats for operators, polynomials and root lists.
//!
//! The line grammar for operators, shared with the fixture files, is one term
//! per line:
//!
//! ```text
//! <sign> [<p>[/<q>]] [c] [x<i>[^<e>]]... [d<j>[^<f>]]...
//! ```
//!
//! A missing coefficient means 1; a bare `c` marks the charge-linear part.
//! The JSON mirror is one object per term:
//! `{"coeff":"p/q","ccoeff":"p/q","x":{"5":1},"d":{"8":1}}`.

use crate::poly::{Mono, Poly, NVARS};
use crate::roots::{RootSystemData, RootVector};
use crate::weyl::{CLin, WeylElt};
use crate::{qi, Error, Q, Result};
use num::traits::{One, Signed, Zero};
use serde_json::json;

fn format_q(q: &Q) -> String {
    if q.denom().is_one() {
        q.numer().to_string()
    } else {
        format!("{}/{}", q.numer(), q.denom())
    }
}

fn format_factors(out: &mut String, m: &Mono, letter: char) {
    for (i, &e) in m.0.iter().enumerate() {
        if e > 0 {
            out.push(' ');
            out.push(letter);
            out.push_str(&(i + 1).to_string());
            if e > 1 {
                out.push('^');
                out.push_str(&e.to_string());
            }
        }
    }
}

fn format_term(coeff: &Q, is_charge: bool, x: &Mono, d: &Mono) -> String {
    let mut line = String::new();
    line.push(if coeff.is_negative() { '-' } else { '+' });
    line.push(' ');
    line.push_str(&format_q(&coeff.abs()));
    if is_charge {
        line.push_str(" c");
    }
    format_factors(&mut line, x, 'x');
    format_factors(&mut line, d, 'd');
    line
}

/// One term per line; constant-part terms first, charge terms after.
pub fn weyl_text(op: &WeylElt) -> String {
    let mut lines = Vec::new();
    for ((x, d), c) in &op.terms {
        if !c.k.is_zero() {
            lines.push(format_term(&c.k, false, x, d));
        }
    }
    for ((x, d), c) in &op.terms {
        if !c.kc.is_zero() {
            lines.push(format_term(&c.kc, true, x, d));
        }
    }
    if lines.is_empty() {
        lines.push("+ 0".to_string());
    }
    lines.join("\n")
}

pub fn poly_text(p: &Poly) -> String {
    weyl_text(&WeylElt::mul_poly(p))
}

pub fn weyl_json(op: &WeylElt) -> serde_json::Value {
    let mut terms = Vec::new();
    for ((x, d), c) in &op.terms {
        let xmap: serde_json::Map<String, serde_json::Value> = x
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| ((i + 1).to_string(), json!(e)))
            .collect();
        let dmap: serde_json::Map<String, serde_json::Value> = d
            .0
            .iter()
            .enumerate()
            .filter(|(_, &e)| e > 0)
            .map(|(i, &e)| ((i + 1).to_string(), json!(e)))
            .collect();
        terms.push(json!({
            "coeff": format_q(&c.k),
            "ccoeff": format_q(&c.kc),
            "x": xmap,
            "d": dmap,
        }));
    }
    json!(terms)
}

/// Parse a rational like `3`, `-3`, or `5/3`.
pub fn parse_q(s: &str) -> Option<Q> {
    let (num, den) = match s.split_once('/') {
        Some((a, b)) => (a, b),
        None => (s, "1"),
    };
    let n: num::BigInt = num.trim().parse().ok()?;
    let d: num::BigInt = den.trim().parse().ok()?;
    if d.is_zero() {
        return None;
    }
    Some(Q::new(n, d))
}

/// Parse one term line of the operator grammar.
pub fn parse_weyl_term(line: &str) -> Option<(Mono, Mono, CLin)> {
    let mut toks = line.split_whitespace().peekable();
    let sign = match toks.next()? {
        "+" => qi(1),
        "-" => qi(-1),
        _ => return None,
    };
    let mut coeff = qi(1);
    if let Some(tok) = toks.peek() {
        let c = tok.chars().next()?;
        if c.is_ascii_digit() {
            coeff = parse_q(toks.next()?)?;
        }
    }
    let mut is_charge = false;
    if toks.peek() == Some(&"c") {
        is_charge = true;
        toks.next();
    }
    let mut x = Mono::one();
    let mut d = Mono::one();
    for tok in toks {
        let (target, rest) = match tok.chars().next()? {
            'x' => (&mut x, &tok[1..]),
            'd' => (&mut d, &tok[1..]),
            _ => return None,
        };
        let (idx, exp) = match rest.split_once('^') {
            Some((i, e)) => (i.parse::<usize>().ok()?, e.parse::<u8>().ok()?),
            None => (rest.parse::<usize>().ok()?, 1),
        };
        if !(1..=NVARS).contains(&idx) {
            return None;
        }
        target.0[idx - 1] += exp;
    }
    let value = sign * coeff;
    let clin = if is_charge {
        CLin::charge(value)
    } else {
        CLin::constant(value)
    };
    Some((x, d, clin))
}

/// Parse a multi-line operator in the term grammar.
pub fn parse_weyl_text(text: &str) -> Result<WeylElt> {
    let mut op = WeylElt::zero();
    for (ln, raw) in text.lines().enumerate() {
        let line = raw.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let (x, d, c) = parse_weyl_term(line).ok_or(Error::FixtureParse {
            file: "<operator text>".into(),
            line: ln + 1,
            msg: format!("bad term: {line}"),
        })?;
        op.add_term((x, d), &c);
    }
    Ok(op)
}

/// Parse a polynomial (terms without derivative factors).
pub fn parse_poly_text(text: &str) -> Result<Poly> {
    let op = parse_weyl_text(text)?;
    let mut p = Poly::zero();
    for ((x, d), c) in &op.terms {
        if !d.is_one() || !c.kc.is_zero() {
            return Err(crate::usage("polynomial text contains operator factors"));
        }
        p.add_term(*x, &c.k);
    }
    Ok(p)
}

/// Root list as JSON lines: one object per root, all 126 roots.
pub fn roots_json(roots: &RootSystemData) -> String {
    let mut out = String::new();
    let mut emit = |r: &RootVector, positive: bool| {
        let subsystem = if r.level() == 0 { "E6" } else { "bar" };
        let obj = json!({
            "root": r.0.to_vec(),
            "positive": positive,
            "subsystem": subsystem,
        });
        out.push_str(&obj.to_string());
        out.push('\n');
    };
    for r in &roots.positive_e7 {
        emit(r, true);
    }
    for r in &roots.positive_e7 {
        emit(&r.neg(), false);
    }
    out
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::qr;

    #[test]
    fn term_grammar_round_trip() {
        let mut op = WeylElt::zero();
        op.add_term((Mono::var(5), Mono::var(8)), &CLin::constant(qi(1)));
        op.add_term((Mono::one(), Mono::one()), &CLin::charge(qr(-2, 3)));
        let mut m = Mono::var(1);
        m.0[0] = 2;
        op.add_term((m, Mono::var(3)), &CLin::constant(qr(7, 2)));
        let text = weyl_text(&op);
        let back = parse_weyl_text(&text).unwrap();
        assert_eq!(back, op);
        assert!(text.contains("+ 1 x5 d8"));
        assert!(text.contains("- 2/3 c"));
        assert!(text.contains("+ 7/2 x1^2 d3"));
    }

    #[test]
    fn poly_round_trip() {
        let p = Poly::var(1)
            .mul(&Poly::var(14))
            .sub(&Poly::var(5).mul(&Poly::var(6)));
        let text = poly_text(&p);
        assert_eq!(parse_poly_text(&text).unwrap(), p);
    }

    #[test]
    fn json_shape() {
        let op = WeylElt::xd(5, 8);
        let v = weyl_json(&op);
        let arr = v.as_array().unwrap();
        assert_eq!(arr.len(), 1);
        assert_eq!(arr[0]["coeff"], "1");
        assert_eq!(arr[0]["x"]["5"], 1);
        assert_eq!(arr[0]["d"]["8"], 1);
    }
}
