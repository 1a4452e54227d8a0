//! Exact linear algebra over the rationals: echelon bases, nullspaces,
//! small dense solves, and a mod-p rank certificate for large systems.

use crate::{qi, Q};
use num::traits::Zero;
use std::collections::BTreeMap;

/// Sparse row: column index -> coefficient.
pub type SparseRow = BTreeMap<usize, Q>;

/// Incremental echelon basis of sparse rows, reduced on insert.
/// Pivots are the smallest surviving column of each stored row.
#[derive(Default)]
pub struct Echelon {
    /// pivot column -> normalized row (pivot coefficient 1)
    rows: BTreeMap<usize, SparseRow>,
}

impl Echelon {
    pub fn new() -> Self {
        Echelon::default()
    }

    pub fn rank(&self) -> usize {
        self.rows.len()
    }

    /// Reduce a row against the basis; the remainder has no basis pivots.
    pub fn reduce(&self, mut row: SparseRow) -> SparseRow {
        loop {
            let hit = row
                .iter()
                .find_map(|(col, c)| {
                    if c.is_zero() {
                        None
                    } else {
                        self.rows.get(col).map(|r| (*col, r))
                    }
                })
                .map(|(col, r)| (col, row[&col].clone(), r.clone()));
            match hit {
                None => break,
                Some((col, factor, basis_row)) => {
                    for (bc, bv) in &basis_row {
                        let e = row.entry(*bc).or_insert_with(Q::zero);
                        *e -= &factor * bv;
                        if e.is_zero() {
                            row.remove(bc);
                        }
                    }
                    debug_assert!(!row.contains_key(&col));
                }
            }
        }
        row.retain(|_, v| !v.is_zero());
        row
    }

    /// Insert a row; returns true when it enlarged the span.
    pub fn insert(&mut self, row: SparseRow) -> bool {
        let red = self.reduce(row);
        if red.is_empty() {
            return false;
        }
        let (&pivot, pc) = red.iter().next().unwrap();
        let inv = qi(1) / pc.clone();
        let mut norm: SparseRow = red
            .iter()
            .map(|(c, v)| (*c, v * &inv))
            .collect();
        norm.retain(|_, v| !v.is_zero());
        // back-substitute into existing rows to keep them fully reduced
        let pivots: Vec<usize> = self.rows.keys().cloned().collect();
        for p in pivots {
            let row_p = self.rows.get(&p).unwrap();
            if let Some(f) = row_p.get(&pivot).cloned() {
                let mut updated = row_p.clone();
                for (c, v) in &norm {
                    let e = updated.entry(*c).or_insert_with(Q::zero);
                    *e -= &f * v;
                    if e.is_zero() {
                        updated.remove(c);
                    }
                }
                self.rows.insert(p, updated);
            }
        }
        self.rows.insert(pivot, norm);
        true
    }

    /// Does the row lie in the current span?
    pub fn contains(&self, row: SparseRow) -> bool {
        self.reduce(row).is_empty()
    }

    /// Express a row over the basis: pivot column -> coefficient.
    /// Returns None when the row is outside the span.
    pub fn coordinates(&self, row: SparseRow) -> Option<BTreeMap<usize, Q>> {
        let mut coords = BTreeMap::new();
        let mut row = row;
        loop {
            row.retain(|_, v| !v.is_zero());
            let Some((&col, c)) = row.iter().next() else {
                return Some(coords);
            };
            let Some(basis_row) = self.rows.get(&col) else {
                return None;
            };
            let factor = c.clone();
            coords.insert(col, factor.clone());
            for (bc, bv) in basis_row {
                let e = row.entry(*bc).or_insert_with(Q::zero);
                *e -= &factor * bv;
                if e.is_zero() {
                    row.remove(bc);
                }
            }
        }
    }
}

/// Dense nullspace of a sparse system: rows are equations over `ncols`
/// unknowns.  Returns a basis of the kernel as dense columns.
pub fn nullspace(rows: &[SparseRow], ncols: usize) -> Vec<Vec<Q>> {
    // gaussian elimination with column pivots recorded
    let mut mat: Vec<SparseRow> = rows.iter().filter(|r| !r.is_empty()).cloned().collect();
    let mut pivot_of_col: BTreeMap<usize, usize> = BTreeMap::new(); // col -> row idx
    let mut reduced: Vec<SparseRow> = Vec::new();
    while let Some(mut row) = mat.pop() {
        // reduce against chosen pivots
        loop {
            let hit = row
                .iter()
                .find_map(|(c, v)| {
                    if v.is_zero() {
                        None
                    } else {
                        pivot_of_col.get(c).map(|ri| (*c, *ri))
                    }
                });
            match hit {
                None => break,
                Some((c, ri)) => {
                    let factor = row[&c].clone();
                    let basis_row = reduced[ri].clone();
                    for (bc, bv) in &basis_row {
                        let e = row.entry(*bc).or_insert_with(Q::zero);
                        *e -= &factor * bv;
                        if e.is_zero() {
                            row.remove(bc);
                        }
                    }
                }
            }
        }
        row.retain(|_, v| !v.is_zero());
        if row.is_empty() {
            continue;
        }
        let (&pc, pv) = row.iter().next().unwrap();
        let inv = qi(1) / pv.clone();
        let norm: SparseRow = row.iter().map(|(c, v)| (*c, v * &inv)).collect();
        pivot_of_col.insert(pc, reduced.len());
        reduced.push(norm);
    }
    // back substitution: make each pivot column appear only in its own row
    let pivots: Vec<(usize, usize)> = pivot_of_col.iter().map(|(c, r)| (*c, *r)).collect();
    for &(c, ri) in &pivots {
        for rj in 0..reduced.len() {
            if rj == ri {
                continue;
            }
            if let Some(f) = reduced[rj].get(&c).cloned() {
                let basis_row = reduced[ri].clone();
                let row = &mut reduced[rj];
                for (bc, bv) in &basis_row {
                    let e = row.entry(*bc).or_insert_with(Q::zero);
                    *e -= &f * bv;
                    if e.is_zero() {
                        row.remove(bc);
                    }
                }
            }
        }
    }
    let pivot_cols: std::collections::BTreeSet<usize> = pivot_of_col.keys().cloned().collect();
    let free_cols: Vec<usize> = (0..ncols).filter(|c| !pivot_cols.contains(c)).collect();
    let mut basis = Vec::new();
    for fc in free_cols {
        let mut v = vec![Q::zero(); ncols];
        v[fc] = qi(1);
        for (c, ri) in &pivot_of_col {
            if let Some(coef) = reduced[*ri].get(&fc) {
                v[*c] = -coef.clone();
            }
        }
        basis.push(v);
    }
    basis
}

/// Solve the small dense square/rectangular system `A x = b` exactly.
/// Returns None when inconsistent; errors-by-None on underdetermined pivots.
pub fn solve_dense(a: &[Vec<Q>], b: &[Q]) -> Option<Vec<Q>> {
    let m = a.len();
    if m == 0 {
        return Some(Vec::new());
    }
    let n = a[0].len();
    let mut aug: Vec<Vec<Q>> = a
        .iter()
        .zip(b)
        .map(|(row, rhs)| {
            let mut r = row.clone();
            r.push(rhs.clone());
            r
        })
        .collect();
    let mut pivot_rows: Vec<usize> = Vec::new();
    let mut pivot_cols: Vec<usize> = Vec::new();
    let mut used = vec![false; m];
    for col in 0..n {
        let Some(pr) = (0..m).find(|&r| !used[r] && !aug[r][col].is_zero()) else {
            continue;
        };
        used[pr] = true;
        pivot_rows.push(pr);
        pivot_cols.push(col);
        let inv = qi(1) / aug[pr][col].clone();
        for c in col..=n {
            let x = aug[pr][c].clone() * &inv;
            aug[pr][c] = x;
        }
        for r in 0..m {
            if r != pr && !aug[r][col].is_zero() {
                let f = aug[r][col].clone();
                for c in col..=n {
                    let delta = &f * &aug[pr][c];
                    aug[r][c] -= delta;
                }
            }
        }
    }
    // inconsistency check
    for r in 0..m {
        if !used[r] && !aug[r][n].is_zero() {
            return None;
        }
    }
    if pivot_cols.len() < n {
        return None; // underdetermined
    }
    let mut x = vec![Q::zero(); n];
    for (pr, pc) in pivot_rows.iter().zip(&pivot_cols) {
        x[*pc] = aug[*pr][n].clone();
    }
    Some(x)
}

const FP: u64 = (1 << 61) - 1;

fn fp_mul(a: u64, b: u64) -> u64 {
    ((a as u128 * b as u128) % FP as u128) as u64
}

fn fp_inv(a: u64) -> u64 {
    // Fermat
    let mut base = a % FP;
    let mut exp = FP - 2;
    let mut acc = 1u64;
    while exp > 0 {
        if exp & 1 == 1 {
            acc = fp_mul(acc, base);
        }
        base = fp_mul(base, base);
        exp >>= 1;
    }
    acc
}

/// Reduce a rational to the prime field; None when the denominator vanishes
/// mod p (callers should treat that as "certificate unavailable").
pub fn fp_of_q(q: &Q) -> Option<u64> {
    use num::bigint::BigInt;
    use num::Integer;
    let p = BigInt::from(FP);
    let num = q.numer().mod_floor(&p);
    let den = q.denom().mod_floor(&p);
    let den_u: u64 = den.try_into().ok()?;
    if den_u == 0 {
        return None;
    }
    let num_u: u64 = num.try_into().ok()?;
    Some(fp_mul(num_u, fp_inv(den_u)))
}

/// Rank over F_p of a sparse rational matrix; a lower bound for the rational
/// rank, so full rank mod p certifies full rank over Q.
pub fn rank_mod_p(rows: &[SparseRow], ncols: usize) -> Option<usize> {
    let mut mat: Vec<Vec<u64>> = Vec::with_capacity(rows.len());
    for r in rows {
        let mut dense = vec![0u64; ncols];
        for (c, v) in r {
            dense[*c] = fp_of_q(v)?;
        }
        mat.push(dense);
    }
    let mut rank = 0;
    let mut row_used = vec![false; mat.len()];
    for col in 0..ncols {
        let Some(pr) = (0..mat.len()).find(|&r| !row_used[r] && mat[r][col] != 0) else {
            continue;
        };
        row_used[pr] = true;
        rank += 1;
        let inv = fp_inv(mat[pr][col]);
        let pivot_row: Vec<u64> = mat[pr].iter().map(|&x| fp_mul(x, inv)).collect();
        for r in 0..mat.len() {
            if r != pr && mat[r][col] != 0 {
                let f = mat[r][col];
                for c in col..ncols {
                    let sub = fp_mul(f, pivot_row[c]);
                    mat[r][c] = (mat[r][c] + FP - sub) % FP;
                }
            }
        }
        mat[pr] = pivot_row;
    }
    Some(rank)
}
