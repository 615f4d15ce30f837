//! Dense exact linear algebra over `Q`.

use std::collections::BTreeMap;

use num_traits::{One, Zero};

use crate::poly::{Coeff, Monomial, Polynomial};

/// Reduced row echelon form in place; returns the pivot columns.
pub fn rref(rows: &mut Vec<Vec<Coeff>>) -> Vec<usize> {
    let ncols = rows.first().map_or(0, Vec::len);
    let mut pivots = Vec::new();
    let mut r = 0;
    for c in 0..ncols {
        let Some(p) = (r..rows.len()).find(|&i| !rows[i][c].is_zero()) else { continue };
        rows.swap(r, p);
        let inv = rows[r][c].recip();
        for x in rows[r].iter_mut().skip(c) {
            *x *= &inv;
        }
        let pivot_row = rows[r].clone();
        for (i, row) in rows.iter_mut().enumerate() {
            if i == r || row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&pivot_row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        pivots.push(c);
        r += 1;
        if r == rows.len() {
            break;
        }
    }
    rows.truncate(r);
    pivots
}

pub fn rank(rows: &[Vec<Coeff>]) -> usize {
    let mut m = rows.to_vec();
    rref(&mut m).len()
}

/// Basis of `{x : A x = 0}` for `A` given by rows with `ncols` columns.
pub fn kernel(rows: &[Vec<Coeff>], ncols: usize) -> Vec<Vec<Coeff>> {
    let mut m: Vec<Vec<Coeff>> = rows.to_vec();
    let pivots = rref(&mut m);
    let mut is_pivot = vec![None; ncols];
    for (r, &c) in pivots.iter().enumerate() {
        is_pivot[c] = Some(r);
    }
    let mut out = Vec::new();
    for free in 0..ncols {
        if is_pivot[free].is_some() {
            continue;
        }
        let mut v = vec![Coeff::zero(); ncols];
        v[free] = Coeff::one();
        for (r, &c) in pivots.iter().enumerate() {
            v[c] = -m[r][free].clone();
        }
        out.push(v);
    }
    out
}

/// Incremental echelon basis, used to test membership in a growing span.
#[derive(Clone, Debug, Default)]
pub struct EchelonBasis {
    /// Rows keyed by pivot column, in reduced row echelon form.
    rows: BTreeMap<usize, Vec<Coeff>>,
}

impl EchelonBasis {
    pub fn new() -> Self {
        Self::default()
    }

    pub fn dim(&self) -> usize {
        self.rows.len()
    }

    /// Reduce `v` against the basis.
    pub fn reduce(&self, v: &mut [Coeff]) {
        for (&c, row) in &self.rows {
            if v[c].is_zero() {
                continue;
            }
            let f = v[c].clone();
            for (x, y) in v.iter_mut().zip(row).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
    }

    /// Insert `v`; returns false when it was already in the span.
    pub fn insert(&mut self, mut v: Vec<Coeff>) -> bool {
        self.reduce(&mut v);
        let Some(c) = v.iter().position(|x| !x.is_zero()) else { return false };
        let inv = v[c].recip();
        for x in v.iter_mut() {
            *x *= &inv;
        }
        // keep every row zero in every other pivot column
        for row in self.rows.values_mut() {
            if row[c].is_zero() {
                continue;
            }
            let f = row[c].clone();
            for (x, y) in row.iter_mut().zip(&v).skip(c) {
                if !y.is_zero() {
                    *x -= &f * y;
                }
            }
        }
        self.rows.insert(c, v);
        true
    }

    pub fn contains(&self, v: &[Coeff]) -> bool {
        let mut w = v.to_vec();
        self.reduce(&mut w);
        w.iter().all(Zero::is_zero)
    }

    pub fn pivots(&self) -> impl Iterator<Item = &usize> {
        self.rows.keys()
    }

    /// Basis rows in pivot order.
    pub fn rows(&self) -> impl Iterator<Item = &Vec<Coeff>> {
        self.rows.values()
    }

    /// Coordinates of `v` in the basis rows, or `None` if `v` is outside the span.
    pub fn coordinates(&self, v: &[Coeff]) -> Option<Vec<Coeff>> {
        if !self.contains(v) {
            return None;
        }
        Some(self.rows.keys().map(|&c| v[c].clone()).collect())
    }
}

/// Coordinates of polynomials in a fixed list of monomials.
#[derive(Clone, Debug)]
pub struct MonomialIndex {
    pub monomials: Vec<Monomial>,
    pos: BTreeMap<Monomial, usize>,
}

impl MonomialIndex {
    pub fn new(monomials: Vec<Monomial>) -> Self {
        let pos = monomials.iter().cloned().enumerate().map(|(i, m)| (m, i)).collect();
        MonomialIndex { monomials, pos }
    }

    pub fn len(&self) -> usize {
        self.monomials.len()
    }

    pub fn is_empty(&self) -> bool {
        self.monomials.is_empty()
    }

    pub fn position(&self, m: &Monomial) -> Option<usize> {
        self.pos.get(m).copied()
    }

    /// Coordinate vector; panics if `f` has a monomial outside the index.
    pub fn vector(&self, f: &Polynomial) -> Vec<Coeff> {
        let mut v = vec![Coeff::zero(); self.len()];
        for (m, c) in f.terms() {
            let i = self.position(m).unwrap_or_else(|| panic!("monomial {m:?} outside index"));
            v[i] = c.clone();
        }
        v
    }

    pub fn polynomial(&self, n: usize, v: &[Coeff]) -> Polynomial {
        Polynomial::from_terms(n, self.monomials.iter().cloned().zip(v.iter().cloned()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::int;

    fn m(rows: &[&[i64]]) -> Vec<Vec<Coeff>> {
        rows.iter().map(|r| r.iter().map(|&x| int(x)).collect()).collect()
    }

    #[test]
    fn rank_and_kernel() {
        let a = m(&[&[1, 2, 3], &[2, 4, 6], &[1, 0, 1]]);
        assert_eq!(rank(&a), 2);
        let k = kernel(&a, 3);
        assert_eq!(k.len(), 1);
        for row in &a {
            let dot: Coeff = row.iter().zip(&k[0]).map(|(x, y)| x * y).sum();
            assert!(dot.is_zero());
        }
        assert_eq!(kernel(&[], 2).len(), 2);
    }

    #[test]
    fn echelon_basis() {
        let mut b = EchelonBasis::new();
        assert!(b.insert(m(&[&[0, 1, 1]]).remove(0)));
        assert!(b.insert(m(&[&[1, 1, 0]]).remove(0)));
        assert!(!b.insert(m(&[&[1, 2, 1]]).remove(0)));
        assert!(b.contains(&m(&[&[2, 3, 1]])[0]));
        assert_eq!(b.dim(), 2);
    }
}
