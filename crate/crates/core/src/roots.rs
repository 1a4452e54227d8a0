//! The E7 root lattice: bilinear form, sign cocycle, and root enumeration.
//!
//! Coordinates are always taken in the simple-root basis `a_1..a_7`, numbered
//! as in the Dynkin diagram with edges 1-3, 3-4, 2-4, 4-5, 5-6, 6-7.  The E6
//! subsystem is spanned by `a_1..a_6`; the 27 positive roots with a_7
//! coefficient 1 index the eta/xi bases of the abelian pieces of the grading.

use crate::{internal, qi, Error, Result, Q};
use std::fmt;

/// Gram matrix of the simple roots (simply laced: diagonal 2, edges -1).
pub const GRAM: [[i64; 7]; 7] = [
    [2, 0, -1, 0, 0, 0, 0],
    [0, 2, 0, -1, 0, 0, 0],
    [-1, 0, 2, -1, 0, 0, 0],
    [0, -1, -1, 2, -1, 0, 0],
    [0, 0, 0, -1, 2, -1, 0],
    [0, 0, 0, 0, -1, 2, -1],
    [0, 0, 0, 0, 0, -1, 2],
];

/// The distinguished Cartan element orthogonal to the E6 subsystem,
/// `2a_1 + 3a_2 + 4a_3 + 6a_4 + 5a_5 + 4a_6 + 3a_7`.
pub const ALPHA_HAT: RootVector = RootVector([2, 3, 4, 6, 5, 4, 3]);

/// Integer vector in the simple-root basis of E7.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct RootVector(pub [i64; 7]);

impl fmt::Debug for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{:?}", self.0)
    }
}

impl fmt::Display for RootVector {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.0.iter().map(|c| c.to_string()).collect();
        write!(f, "({})", parts.join(","))
    }
}

impl RootVector {
    pub fn zero() -> Self {
        RootVector([0; 7])
    }

    /// The r-th simple root (1-based).
    pub fn simple(r: usize) -> Self {
        assert!((1..=7).contains(&r), "simple root index out of range");
        let mut c = [0; 7];
        c[r - 1] = 1;
        RootVector(c)
    }

    pub fn add(&self, other: &RootVector) -> RootVector {
        let mut c = [0; 7];
        for i in 0..7 {
            c[i] = self.0[i] + other.0[i];
        }
        RootVector(c)
    }

    pub fn sub(&self, other: &RootVector) -> RootVector {
        let mut c = [0; 7];
        for i in 0..7 {
            c[i] = self.0[i] - other.0[i];
        }
        RootVector(c)
    }

    pub fn neg(&self) -> RootVector {
        let mut c = [0; 7];
        for i in 0..7 {
            c[i] = -self.0[i];
        }
        RootVector(c)
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&c| c == 0)
    }

    /// A lattice vector is a root iff its squared length is 2.
    pub fn is_root(&self) -> bool {
        inner(self, self) == 2
    }

    /// Sum of coordinates; for roots this is the usual height.
    pub fn height(&self) -> i64 {
        self.0.iter().sum()
    }

    /// Coefficient of a_7, which grades E7 into -1/0/+1 levels on roots.
    pub fn level(&self) -> i64 {
        self.0[6]
    }

    pub fn is_positive(&self) -> bool {
        self.0.iter().all(|&c| c >= 0) && !self.is_zero()
    }

    /// True when all coordinates vanish beyond the E6 nodes.
    pub fn in_e6(&self) -> bool {
        self.0[6] == 0
    }
}

/// Symmetric bilinear form on the root lattice.
pub fn inner(u: &RootVector, v: &RootVector) -> i64 {
    let mut s = 0;
    for i in 0..7 {
        if u.0[i] == 0 {
            continue;
        }
        for j in 0..7 {
            s += u.0[i] * GRAM[i][j] * v.0[j];
        }
    }
    s
}

/// Same form as an exact rational, for mixed computations.
pub fn inner_q(u: &RootVector, v: &RootVector) -> Q {
    qi(inner(u, v))
}

/// The sign cocycle `F(u,v) = (-1)^{sum_i k_i l_i + sum_{i<j} k_i l_j (a_i,a_j)}`.
pub fn cocycle(u: &RootVector, v: &RootVector) -> i64 {
    let mut e = 0i64;
    for i in 0..7 {
        e += u.0[i] * v.0[i];
        for j in (i + 1)..7 {
            e += u.0[i] * v.0[j] * GRAM[i][j];
        }
    }
    if e.rem_euclid(2) == 0 {
        1
    } else {
        -1
    }
}

/// Root enumeration output: the ambient Cartan data plus the graded split.
#[derive(Clone)]
pub struct RootSystemData {
    pub cartan: [[i64; 7]; 7],
    /// All 63 positive roots, ordered by (height, coordinates).
    pub positive_e7: Vec<RootVector>,
    /// The 36 positive roots of the E6 subsystem, same ordering.
    pub positive_e6: Vec<RootVector>,
    /// The 27 level-one roots in the order fixed by the xi/eta numbering.
    pub eta_index: Vec<RootVector>,
}

const ETA_INDEX_FIXTURE: &str = include_str!("../fixtures/eta_index.txt");

/// Parse a whitespace/comma separated 7-tuple.
pub fn parse_tuple7(s: &str) -> Option<RootVector> {
    let mut c = [0i64; 7];
    let mut n = 0;
    for tok in s.split(|ch: char| ch.is_whitespace() || ch == ',') {
        if tok.is_empty() {
            continue;
        }
        if n == 7 {
            return None;
        }
        c[n] = tok.parse().ok()?;
        n += 1;
    }
    if n == 7 {
        Some(RootVector(c))
    } else {
        None
    }
}

fn eta_index_from_fixture() -> Result<Vec<RootVector>> {
    let mut out = Vec::with_capacity(27);
    for (ln, line) in ETA_INDEX_FIXTURE.lines().enumerate() {
        let line = line.split('#').next().unwrap().trim();
        if line.is_empty() {
            continue;
        }
        let v = parse_tuple7(line).ok_or_else(|| Error::FixtureParse {
            file: "eta_index.txt".into(),
            line: ln + 1,
            msg: "expected 7 integers".into(),
        })?;
        out.push(v);
    }
    if out.len() != 27 {
        return Err(internal(format!(
            "eta_index fixture has {} entries, want 27",
            out.len()
        )));
    }
    Ok(out)
}

/// Enumerate all roots by additive closure from the simple roots.
///
/// Starting from the simple roots, repeatedly add simple roots whenever the
/// sum still has squared length 2.  Positive roots of E7 all arise this way;
/// negatives are the mirror image.  A hard iteration bound guards against a
/// broken Gram matrix.
pub fn enumerate_roots() -> Result<RootSystemData> {
    let mut pos: std::collections::BTreeSet<RootVector> =
        (1..=7).map(RootVector::simple).collect();
    let bound = 64;
    let mut rounds = 0;
    loop {
        rounds += 1;
        if rounds > bound {
            return Err(internal(
                "root closure failed to terminate; Gram matrix is inconsistent",
            ));
        }
        let mut grew = false;
        let snapshot: Vec<RootVector> = pos.iter().cloned().collect();
        for r in &snapshot {
            for s in 1..=7 {
                let cand = r.add(&RootVector::simple(s));
                if cand.is_root() && pos.insert(cand) {
                    grew = true;
                }
            }
        }
        if !grew {
            break;
        }
    }
    let mut positive_e7: Vec<RootVector> = pos.into_iter().collect();
    positive_e7.sort_by_key(|r| (r.height(), r.0));
    if positive_e7.len() != 63 {
        return Err(internal(format!(
            "expected 63 positive roots, found {}",
            positive_e7.len()
        )));
    }
    let positive_e6: Vec<RootVector> = positive_e7.iter().filter(|r| r.in_e6()).cloned().collect();
    let eta_index = eta_index_from_fixture()?;
    let bar: std::collections::BTreeSet<RootVector> = positive_e7
        .iter()
        .filter(|r| r.level() == 1)
        .cloned()
        .collect();
    let eta_set: std::collections::BTreeSet<RootVector> = eta_index.iter().cloned().collect();
    if bar != eta_set {
        return Err(internal(
            "eta index fixture disagrees with the enumerated level-one roots",
        ));
    }
    Ok(RootSystemData {
        cartan: GRAM,
        positive_e7,
        positive_e6,
        eta_index,
    })
}

impl RootSystemData {
    /// Position (0-based) of a level-one root in the eta numbering.
    pub fn eta_position(&self, r: &RootVector) -> Option<usize> {
        self.eta_index.iter().position(|x| x == r)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn gram_matches_diagram() {
        for i in 0..7 {
            assert_eq!(GRAM[i][i], 2);
            for j in 0..7 {
                assert_eq!(GRAM[i][j], GRAM[j][i]);
                if i != j {
                    assert!(GRAM[i][j] == 0 || GRAM[i][j] == -1);
                }
            }
        }
        let edges = [(1, 3), (3, 4), (2, 4), (4, 5), (5, 6), (6, 7)];
        for (a, b) in edges {
            assert_eq!(GRAM[a - 1][b - 1], -1);
        }
    }

    #[test]
    fn inner_examples() {
        let a1 = RootVector::simple(1);
        assert_eq!(inner(&a1, &a1), 2);
        let a3 = RootVector::simple(3);
        let a4 = RootVector::simple(4);
        assert_eq!(inner(&a3, &a4), -1);
        for r in 1..=6 {
            assert_eq!(inner(&ALPHA_HAT, &RootVector::simple(r)), 0);
        }
        // a_hat pairs with a_7 by 2, hence with every level-one root by 2.
        assert_eq!(inner(&ALPHA_HAT, &RootVector::simple(7)), 2);
    }

    #[test]
    fn inner_bilinear_symmetric() {
        // deterministic pseudo-random lattice vectors
        let mut state = 0x243f_6a88u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 7) - 3
        };
        for _ in 0..200 {
            let u = RootVector([next(), next(), next(), next(), next(), next(), next()]);
            let v = RootVector([next(), next(), next(), next(), next(), next(), next()]);
            let w = RootVector([next(), next(), next(), next(), next(), next(), next()]);
            assert_eq!(inner(&u, &v), inner(&v, &u));
            assert_eq!(inner(&u.add(&v), &w), inner(&u, &w) + inner(&v, &w));
        }
    }

    #[test]
    fn cocycle_examples() {
        let roots = enumerate_roots().unwrap();
        for a in &roots.positive_e7 {
            assert_eq!(cocycle(a, a), -1, "F(a,a) = (-1)^{{(a,a)/2}} on roots");
        }
        assert_eq!(cocycle(&RootVector::zero(), &RootVector::simple(5)), 1);
        let a1 = RootVector::simple(1);
        let a3 = RootVector::simple(3);
        assert_eq!(cocycle(&a1, &a3), -1);
        assert_eq!(cocycle(&a1, &a3) * cocycle(&a3, &a1), -1); // (-1)^{(a1,a3)}
    }

    #[test]
    fn cocycle_bimultiplicative_sampled() {
        let mut state = 0x452821e6u64;
        let mut next = move || {
            state = state.wrapping_mul(6364136223846793005).wrapping_add(1442695040888963407);
            ((state >> 33) as i64 % 5) - 2
        };
        for _ in 0..1000 {
            let u = RootVector([next(), next(), next(), next(), next(), next(), next()]);
            let v = RootVector([next(), next(), next(), next(), next(), next(), next()]);
            let w = RootVector([next(), next(), next(), next(), next(), next(), next()]);
            assert_eq!(cocycle(&u.add(&v), &w), cocycle(&u, &w) * cocycle(&v, &w));
            assert_eq!(cocycle(&u, &v.add(&w)), cocycle(&u, &v) * cocycle(&u, &w));
        }
    }

    #[test]
    fn cocycle_antisymmetry_on_root_pairs() {
        let roots = enumerate_roots().unwrap();
        let mut all: Vec<RootVector> = roots.positive_e7.clone();
        all.extend(roots.positive_e7.iter().map(|r| r.neg()));
        for a in &all {
            for b in &all {
                let lhs = cocycle(a, b) * cocycle(b, a);
                let rhs = if inner(a, b).rem_euclid(2) == 0 { 1 } else { -1 };
                assert_eq!(lhs, rhs);
                if a.add(b).is_root() {
                    assert_eq!(cocycle(a, b), -cocycle(b, a));
                }
            }
        }
    }

    #[test]
    fn enumeration_counts_and_levels() {
        let roots = enumerate_roots().unwrap();
        assert_eq!(roots.positive_e7.len(), 63);
        assert_eq!(roots.positive_e6.len(), 36);
        let bar: Vec<&RootVector> = roots.positive_e7.iter().filter(|r| !r.in_e6()).collect();
        assert_eq!(bar.len(), 27);
        for r in &bar {
            assert_eq!(r.level(), 1);
        }
        for r in &roots.positive_e7 {
            assert!(r.is_positive());
        }
        assert_eq!(
            *roots.eta_index.last().unwrap(),
            RootVector([2, 2, 3, 4, 3, 2, 1])
        );
    }

    #[test]
    fn e6_sublist_matches_explicit_count() {
        // |Phi+_{E6}| = 36 with highest root (1,2,2,3,2,1).
        let roots = enumerate_roots().unwrap();
        let highest = RootVector([1, 2, 2, 3, 2, 1, 0]);
        assert!(roots.positive_e6.contains(&highest));
        assert_eq!(roots.positive_e6.last().unwrap(), &highest);
    }
}
