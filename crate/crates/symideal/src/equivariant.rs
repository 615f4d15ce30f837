//! Isotypic decompositions of S_n-stable spaces and quotient rings, and the
//! dimension of the equivariant tangent space `Hom_P^{S_n}(I, P/I)`.
//!
//! # Tangent spaces
//!
//! For a homogeneous symmetric ideal `I` with `A = P/I` finite dimensional,
//! a homomorphism `f: I -> A` is determined by its values on a graded
//! S_n-stable generating space `N1`. We take `N1_d` to be the apolar
//! orthogonal complement of `(m I)_d` in `I_d`. The values `f(v)` range over
//! all of `A` (maps need not be graded), and are constrained by
//!
//! * syzygies: `sum c_j f(v_j) = 0` in `A` whenever `sum c_j v_j = 0`,
//! * equivariance: `f(sigma v) = sigma f(v)` for a transposition and an n-cycle.
//!
//! Syzygies can be collected in two ways, see [`SyzygyMethod`].

use std::collections::{BTreeMap, HashMap};
use std::time::Instant;

use num_bigint::BigInt;
use num_traits::{ToPrimitive, Zero};
use serde::{Deserialize, Serialize};

use crate::combinat::{factorial, irreducible_character, kostka_decomposition, partitions_of, IsotypicDecomposition, Partition, Permutation};
use crate::ideals::{Ideal, MonomialOrder, Reducer};
use crate::linalg::{kernel, EchelonBasis, MonomialIndex};
use crate::poly::{monomials_of_degree, Coeff, Monomial, Polynomial};
use crate::{Error, Result};

/// One permutation per conjugacy class, keyed by cycle type.
pub fn class_representatives(n: usize) -> Vec<(Partition, Permutation)> {
    partitions_of(n).expect("n >= 1").into_iter().map(|mu| (mu.clone(), Permutation::of_cycle_type(&mu))).collect()
}

/// Multiplicities from the character of a representation given by its trace
/// on each class.
pub fn decomposition_from_traces(n: usize, traces: &BTreeMap<Partition, Coeff>) -> Result<IsotypicDecomposition> {
    let order = Coeff::from_integer(BigInt::from(factorial(n)));
    let mut d = IsotypicDecomposition::new(n);
    for lambda in partitions_of(n)? {
        let mut s = Coeff::zero();
        for (mu, tr) in traces {
            let chi = irreducible_character(&lambda, mu)?;
            s += tr * Coeff::from_integer(BigInt::from(mu.class_size()) * chi);
        }
        let m = s / &order;
        if !m.is_integer() || m < Coeff::zero() {
            return Err(Error::Unsupported(format!("trace vector is not a character (multiplicity {m} for {lambda})")));
        }
        d.add(&lambda, m.to_integer().to_usize().expect("small multiplicity"));
    }
    Ok(d)
}

/// Decomposition of the S_n-stable span of `polys`.
pub fn decompose_span(n: usize, polys: &[Polynomial]) -> Result<IsotypicDecomposition> {
    let mut monos: Vec<Monomial> = polys.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let idx = MonomialIndex::new(monos);
    let mut basis = EchelonBasis::new();
    for p in polys {
        basis.insert(idx.vector(p));
    }
    let rows: Vec<Vec<Coeff>> = basis.rows().cloned().collect();
    let pivots: Vec<usize> = basis.pivots().copied().collect();
    let mut traces = BTreeMap::new();
    for (mu, sigma) in class_representatives(n) {
        let mut tr = Coeff::zero();
        for (row, &piv) in rows.iter().zip(&pivots) {
            let img = idx.polynomial(n, row).permuted(&sigma);
            let mut v = vec![Coeff::zero(); idx.len()];
            for (m, c) in img.terms() {
                let i = idx.position(m).ok_or(Error::NotSymmetric)?;
                v[i] = c.clone();
            }
            if !basis.contains(&v) {
                return Err(Error::NotSymmetric);
            }
            tr += &v[piv];
        }
        traces.insert(mu, tr);
    }
    decomposition_from_traces(n, &traces)
}

/// Whether `sigma(g) ∈ I` for every generator `g` and the two generators of S_n.
pub fn is_symmetric(ideal: &Ideal) -> bool {
    let n = ideal.nvars();
    if n < 2 {
        return true;
    }
    let red = ideal.groebner().reducer();
    let gens = [Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)];
    ideal.generators().iter().all(|g| gens.iter().all(|s| red.normal_form(&g.permuted(s)).is_zero()))
}

/// Decomposition of `P/I`, optionally per degree.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct QuotientDecomposition {
    pub total: IsotypicDecomposition,
    /// Present when `I` is homogeneous; entry `d` decomposes `(P/I)_d`.
    pub graded: Option<Vec<IsotypicDecomposition>>,
}

/// The quotient algebra `P/I` with a fixed standard-monomial basis.
pub struct Quotient {
    basis: Vec<Monomial>,
    index: MonomialIndex,
    reducer: Reducer,
    cache: HashMap<Monomial, Vec<Coeff>>,
}

impl Quotient {
    pub fn new(ideal: &Ideal) -> Result<Self> {
        let gb = ideal.groebner();
        let basis = gb.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        Ok(Quotient {
            index: MonomialIndex::new(basis.clone()),
            basis,
            reducer: gb.reducer(),
            cache: HashMap::new(),
        })
    }

    pub fn dim(&self) -> usize {
        self.basis.len()
    }

    pub fn basis(&self) -> &[Monomial] {
        &self.basis
    }

    /// Coordinates of the class of `f`.
    pub fn coords(&self, f: &Polynomial) -> Vec<Coeff> {
        self.index.vector(&self.reducer.normal_form(f))
    }

    /// Coordinates of the class of a monomial, cached.
    pub fn monomial_coords(&mut self, m: &Monomial) -> &Vec<Coeff> {
        if !self.cache.contains_key(m) {
            let v = self.coords(&Polynomial::monomial(m.clone()));
            self.cache.insert(m.clone(), v);
        }
        &self.cache[m]
    }

    /// Coordinates of `f * b` for a basis element `b`, given `f`'s terms.
    fn times_basis(&mut self, f: &Polynomial, b: usize, out: &mut [Coeff]) {
        let bm = self.basis[b].clone();
        for (m, c) in f.terms() {
            let v = self.monomial_coords(&m.mul(&bm)).clone();
            for (o, x) in out.iter_mut().zip(&v) {
                if !x.is_zero() {
                    *o += c * x;
                }
            }
        }
    }
}

pub fn decompose_quotient(ideal: &Ideal) -> Result<QuotientDecomposition> {
    if !is_symmetric(ideal) {
        return Err(Error::NotSymmetric);
    }
    let n = ideal.nvars();
    let q = Quotient::new(ideal)?;
    let homogeneous = ideal.is_homogeneous();
    let maxdeg = q.basis.iter().map(Monomial::degree).max().unwrap_or(0) as usize;
    let mut total = BTreeMap::new();
    let mut graded: Vec<BTreeMap<Partition, Coeff>> = vec![BTreeMap::new(); maxdeg + 1];
    for (mu, sigma) in class_representatives(n) {
        let mut tr = Coeff::zero();
        let mut by_deg = vec![Coeff::zero(); maxdeg + 1];
        for (i, b) in q.basis.iter().enumerate() {
            let img = q.coords(&Polynomial::monomial(b.permute(&sigma)));
            tr += &img[i];
            by_deg[b.degree() as usize] += &img[i];
        }
        total.insert(mu.clone(), tr);
        for (d, t) in by_deg.into_iter().enumerate() {
            graded[d].insert(mu.clone(), t);
        }
    }
    let total = decomposition_from_traces(n, &total)?;
    let graded = if homogeneous && !q.basis.is_empty() {
        Some(graded.iter().map(|t| decomposition_from_traces(n, t)).collect::<Result<Vec<_>>>()?)
    } else {
        None
    };
    Ok(QuotientDecomposition { total, graded })
}

/// Write `rho` as a sum of permutation modules `M^lambda`, if possible.
///
/// `S^lambda` occurs in `M^nu` only for `lambda ⊵ nu`, so a dominance-minimal
/// shape of `rho` must be the index of a summand; peel and repeat.
pub fn is_permutation_module_sum(rho: &IsotypicDecomposition) -> Option<Vec<Partition>> {
    let mut rest: BTreeMap<Partition, i64> = rho.multiplicities.iter().map(|(p, &m)| (p.clone(), m as i64)).collect();
    let mut out = Vec::new();
    loop {
        rest.retain(|_, m| *m != 0);
        // Lexicographically smallest is dominance-minimal among the remaining shapes.
        let Some((lambda, &m)) = rest.iter().next() else { break };
        if m < 0 {
            return None;
        }
        let lambda = lambda.clone();
        for (mu, k) in kostka_decomposition(&lambda).multiplicities {
            *rest.entry(mu).or_default() -= m * k as i64;
        }
        out.extend(std::iter::repeat_n(lambda, m as usize));
    }
    out.sort_by(|a, b| b.cmp(a));
    Some(out)
}

/// How syzygies among the generators `N1` are collected.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum SyzygyMethod {
    /// Kernels of `(P ⊗ N1)_e -> I_e` for every `e < D* + extra_degrees`,
    /// where `D* = N + maxdeg(N1)` and `m^N ⊆ I` with `N` minimal.
    Degreewise { extra_degrees: usize },
    /// The kernel of `⊕_j A v_j -> I/I^2`. Only the classes of syzygy
    /// coefficients modulo `I` enter the constraints, and these classes are
    /// exactly this kernel; it stays small when `D*` is large.
    ModISquared,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct TangentOptions {
    pub equivariant: bool,
    pub method: SyzygyMethod,
}

impl Default for TangentOptions {
    fn default() -> Self {
        TangentOptions { equivariant: true, method: SyzygyMethod::ModISquared }
    }
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct TangentReport {
    pub schema_version: u32,
    pub version: String,
    pub order: String,
    pub ideal_hash: String,
    pub n: usize,
    pub colength: usize,
    /// `(degree, dim N1_degree)` for every degree with a nonzero piece.
    pub n1_dims: Vec<(u32, usize)>,
    pub n2_count: usize,
    pub d_star: u32,
    pub method: String,
    pub equivariant: bool,
    pub tangent_dim: usize,
    pub wall_time_ms: u128,
}

/// `sum_a f_a g_a a!`, the apolar pairing of two forms of equal degree.
pub fn apolar_scalar(f: &Polynomial, g: &Polynomial) -> Coeff {
    let mut s = Coeff::zero();
    for (m, c) in f.terms() {
        let d = g.coeff(m);
        if !d.is_zero() {
            s += c * &d * Coeff::from_integer(m.factorial_weight());
        }
    }
    s
}

/// Basis of the subspace of `span(cands)` cut out by `constraint(v) = 0`,
/// where `constraint` returns a vector linear in its argument.
fn subspace_where(n: usize, d: u32, cands: &[Polynomial], constraint: impl Fn(&Polynomial) -> Vec<Coeff>) -> Vec<Polynomial> {
    if cands.is_empty() {
        return Vec::new();
    }
    let cols: Vec<Vec<Coeff>> = cands.iter().map(&constraint).collect();
    let nrows = cols[0].len();
    let rows: Vec<Vec<Coeff>> = (0..nrows).map(|r| cols.iter().map(|c| c[r].clone()).collect()).collect();
    let ker = kernel(&rows, cands.len());
    let idx = MonomialIndex::new(monomials_of_degree(n, d));
    let mut basis = EchelonBasis::new();
    for k in ker {
        let mut p = Polynomial::zero(n);
        for (c, f) in k.iter().zip(cands) {
            if !c.is_zero() {
                p = &p + &f.scale(c);
            }
        }
        basis.insert(idx.vector(&p));
    }
    basis.rows().map(|r| idx.polynomial(n, r)).collect()
}

/// `(m I)_d^⊥` given `W_{d-1} = I_{d-1}^⊥`: the forms `g` with `∂_k g ∈ W_{d-1}`
/// for all `k`. By Euler's identity such `g` lies in `span{x_k w : w ∈ W_{d-1}}`.
pub(crate) fn perp_of_m_times(n: usize, d: u32, w_prev: &[Polynomial]) -> Vec<Polynomial> {
    if w_prev.is_empty() {
        return Vec::new();
    }
    let prev_idx = MonomialIndex::new(monomials_of_degree(n, d - 1));
    let mut w_basis = EchelonBasis::new();
    for w in w_prev {
        w_basis.insert(prev_idx.vector(w));
    }
    let cands: Vec<Polynomial> = (0..n).flat_map(|k| w_prev.iter().map(move |w| w * &Polynomial::var(n, k))).collect();
    subspace_where(n, d, &cands, |g| {
        let mut v = Vec::new();
        for j in 0..n {
            let mut r = prev_idx.vector(&g.derivative(j));
            w_basis.reduce(&mut r);
            v.extend(r);
        }
        v
    })
}

/// Elements of `span(cands)` apolar to every element of `w`.
pub(crate) fn orthogonal_in(n: usize, d: u32, cands: &[Polynomial], w: &[Polynomial]) -> Vec<Polynomial> {
    subspace_where(n, d, cands, |f| w.iter().map(|g| apolar_scalar(f, g)).collect())
}

/// Graded pieces of `N1`, walking the inverse system `W_d = I_d^⊥` upward:
/// `W_d` is the part of `(m I)_d^⊥` apolar to the degree-`d` Gröbner elements,
/// and `N1_d` the part of `(m I)_d^⊥` apolar to `W_d`.
fn generator_spaces(ideal: &Ideal, top: u32) -> Vec<(u32, Vec<Polynomial>)> {
    let n = ideal.nvars();
    let gb = &ideal.groebner().polys;
    let mut w_prev: Vec<Polynomial> = vec![Polynomial::one(n)];
    let mut out = Vec::new();
    for d in 1..=top {
        if w_prev.is_empty() {
            break;
        }
        let u = perp_of_m_times(n, d, &w_prev);
        let gens_d: Vec<Polynomial> = gb.iter().filter(|g| g.degree() == Some(d)).cloned().collect();
        let w_d = orthogonal_in(n, d, &u, &gens_d);
        let n1_d = orthogonal_in(n, d, &u, &w_d);
        if !n1_d.is_empty() {
            out.push((d, n1_d));
        }
        w_prev = w_d;
    }
    out
}

pub fn tangent_dimension(ideal: &Ideal) -> Result<TangentReport> {
    tangent_dimension_with(ideal, TangentOptions::default())
}

pub fn tangent_dimension_with(ideal: &Ideal, opts: TangentOptions) -> Result<TangentReport> {
    let start = Instant::now();
    let n = ideal.nvars();
    if !ideal.is_homogeneous() {
        return Err(Error::Unsupported("tangent_dimension needs a homogeneous ideal".into()));
    }
    if !is_symmetric(ideal) {
        return Err(Error::NotSymmetric);
    }
    let mut q = Quotient::new(ideal)?;
    if q.dim() == 0 {
        return Err(Error::Unsupported("unit ideal".into()));
    }
    let l = q.dim();
    let big_n = q.basis.iter().map(Monomial::degree).max().unwrap() + 1;

    let spaces = generator_spaces(ideal, big_n);
    let mut gens: Vec<(u32, Polynomial)> = Vec::new();
    let mut blocks: Vec<(u32, usize, usize)> = Vec::new();
    for (d, basis) in &spaces {
        blocks.push((*d, gens.len(), basis.len()));
        gens.extend(basis.iter().map(|p| (*d, p.clone())));
    }
    let r = gens.len();
    let maxdeg = spaces.iter().map(|s| s.0).max().unwrap_or(0);
    let d_star = big_n + maxdeg;
    let nunk = r * l;

    let mut eqs = EchelonBasis::new();
    let push_eq = |eqs: &mut EchelonBasis, v: Vec<Coeff>| {
        if v.iter().any(|x| !x.is_zero()) {
            eqs.insert(v);
        }
    };

    // Syzygy constraints, one coefficient list per syzygy.
    let syzygies: Vec<Vec<(usize, Polynomial)>> = match opts.method {
        SyzygyMethod::Degreewise { extra_degrees } => degreewise_syzygies(n, &gens, d_star + extra_degrees as u32),
        SyzygyMethod::ModISquared => syzygies_mod_i_squared(ideal, &gens, &mut q),
    };
    let n2_count = syzygies.len();
    for syz in &syzygies {
        // sum_j c_j f(v_j), with f(v_j) = sum_b u_{j,b} b
        let mut rows = vec![vec![Coeff::zero(); nunk]; l];
        for (j, c) in syz {
            for b in 0..l {
                let mut col = vec![Coeff::zero(); l];
                q.times_basis(c, b, &mut col);
                for (bp, x) in col.into_iter().enumerate() {
                    if !x.is_zero() {
                        rows[bp][j * l + b] += x;
                    }
                }
            }
        }
        for row in rows {
            push_eq(&mut eqs, row);
        }
    }

    if opts.equivariant && n >= 2 {
        for sigma in [Permutation::transposition(n, 0, 1), Permutation::long_cycle(n)] {
            let act: Vec<Vec<Coeff>> = q.basis.clone().iter().map(|b| q.coords(&Polynomial::monomial(b.permute(&sigma)))).collect();
            for &(d, off, len) in &blocks {
                let idx = MonomialIndex::new(monomials_of_degree(n, d));
                let mut basis = EchelonBasis::new();
                let mut vecs = Vec::new();
                for g in &gens[off..off + len] {
                    let v = idx.vector(&g.1);
                    basis.insert(v.clone());
                    vecs.push(v);
                }
                // coordinates of sigma v_j in the block basis {v_i}
                let to_rows: Vec<Vec<Coeff>> = vecs.iter().map(|v| basis.coordinates(v).unwrap()).collect();
                let change = invert(&to_rows);
                for j in 0..len {
                    let img = idx.vector(&gens[off + j].1.permuted(&sigma));
                    let in_rows = basis.coordinates(&img).ok_or(Error::NotSymmetric)?;
                    // a_i = sum_k in_rows[k] * change[k][i]
                    let a: Vec<Coeff> =
                        (0..len).map(|i| (0..len).map(|k| &in_rows[k] * &change[k][i]).sum()).collect();
                    for bp in 0..l {
                        let mut row = vec![Coeff::zero(); nunk];
                        for (i, ai) in a.iter().enumerate() {
                            row[(off + i) * l + bp] += ai;
                        }
                        for (b, img_b) in act.iter().enumerate() {
                            if !img_b[bp].is_zero() {
                                row[(off + j) * l + b] -= &img_b[bp];
                            }
                        }
                        push_eq(&mut eqs, row);
                    }
                }
            }
        }
    }

    let tangent_dim = nunk - eqs.dim();
    let method = match opts.method {
        SyzygyMethod::Degreewise { extra_degrees } => format!("degreewise(+{extra_degrees})"),
        SyzygyMethod::ModISquared => "mod-I-squared".into(),
    };
    Ok(TangentReport {
        schema_version: crate::SCHEMA_VERSION,
        version: crate::VERSION.into(),
        order: MonomialOrder::DegRevLex.tag(),
        ideal_hash: ideal.hash_hex(),
        n,
        colength: l,
        n1_dims: spaces.iter().map(|(d, b)| (*d, b.len())).collect(),
        n2_count,
        d_star,
        method,
        equivariant: opts.equivariant,
        tangent_dim,
        wall_time_ms: start.elapsed().as_millis(),
    })
}

/// Inverse of a square invertible matrix.
fn invert(m: &[Vec<Coeff>]) -> Vec<Vec<Coeff>> {
    let k = m.len();
    let mut aug: Vec<Vec<Coeff>> = m
        .iter()
        .enumerate()
        .map(|(i, row)| {
            let mut r = row.clone();
            r.extend((0..k).map(|j| if i == j { Coeff::from_integer(1.into()) } else { Coeff::zero() }));
            r
        })
        .collect();
    let piv = crate::linalg::rref(&mut aug);
    assert_eq!(piv.len(), k, "singular change of basis");
    aug.into_iter().map(|r| r[k..].to_vec()).collect()
}

/// Kernel of `(P ⊗ N1)_e -> P_e` for `e < bound`.
fn degreewise_syzygies(n: usize, gens: &[(u32, Polynomial)], bound: u32) -> Vec<Vec<(usize, Polynomial)>> {
    let mut out = Vec::new();
    let mindeg = gens.iter().map(|g| g.0).min().unwrap_or(0);
    for e in mindeg..bound {
        let idx = MonomialIndex::new(monomials_of_degree(n, e));
        let mut cols: Vec<(usize, Monomial)> = Vec::new();
        let mut vecs: Vec<Vec<Coeff>> = Vec::new();
        for (j, (d, g)) in gens.iter().enumerate() {
            if *d > e {
                continue;
            }
            for m in monomials_of_degree(n, e - d) {
                vecs.push(idx.vector(&g.mul_monomial(&m)));
                cols.push((j, m));
            }
        }
        if cols.is_empty() {
            continue;
        }
        let rows: Vec<Vec<Coeff>> = (0..idx.len()).map(|r| vecs.iter().map(|v| v[r].clone()).collect()).collect();
        for k in kernel(&rows, cols.len()) {
            let mut coeffs: BTreeMap<usize, Polynomial> = BTreeMap::new();
            for ((j, m), c) in cols.iter().zip(&k) {
                if !c.is_zero() {
                    coeffs.entry(*j).or_insert_with(|| Polynomial::zero(n)).add_term(m.clone(), c.clone());
                }
            }
            out.push(coeffs.into_iter().collect());
        }
    }
    out
}

/// Kernel of `⊕_j A -> I/I^2`, `(c_j) -> sum c_j v_j`, with `c_j` over the
/// standard monomials of `A = P/I`.
fn syzygies_mod_i_squared(ideal: &Ideal, gens: &[(u32, Polynomial)], q: &mut Quotient) -> Vec<Vec<(usize, Polynomial)>> {
    let n = ideal.nvars();
    let gb = &ideal.groebner().polys;
    let mut sq = Vec::new();
    for i in 0..gb.len() {
        for j in i..gb.len() {
            sq.push(&gb[i] * &gb[j]);
        }
    }
    let sq = Ideal::new(n, sq).expect("arity");
    let red = sq.groebner().reducer();
    let l = q.dim();
    let mut cols: Vec<(usize, usize)> = Vec::new();
    let mut vecs: Vec<Polynomial> = Vec::new();
    for (j, (_, g)) in gens.iter().enumerate() {
        for b in 0..l {
            vecs.push(red.normal_form(&g.mul_monomial(&q.basis[b])));
            cols.push((j, b));
        }
    }
    let mut monos: Vec<Monomial> = vecs.iter().flat_map(|p| p.terms().map(|(m, _)| m.clone())).collect();
    monos.sort();
    monos.dedup();
    let idx = MonomialIndex::new(monos);
    let vv: Vec<Vec<Coeff>> = vecs.iter().map(|p| idx.vector(p)).collect();
    let rows: Vec<Vec<Coeff>> = (0..idx.len()).map(|r| vv.iter().map(|v| v[r].clone()).collect()).collect();
    kernel(&rows, cols.len())
        .into_iter()
        .map(|k| {
            let mut coeffs: BTreeMap<usize, Polynomial> = BTreeMap::new();
            for ((j, b), c) in cols.iter().zip(&k) {
                if !c.is_zero() {
                    coeffs.entry(*j).or_insert_with(|| Polynomial::zero(n)).add_term(q.basis[*b].clone(), c.clone());
                }
            }
            coeffs.into_iter().collect()
        })
        .collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::ideals::maximal_power;
    use crate::poly::power_sum;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    #[test]
    fn coinvariant_decomposition() {
        let i = Ideal::new(3, (1..=3).map(|k| power_sum(k, 3).unwrap()).collect()).unwrap();
        let d = decompose_quotient(&i).unwrap();
        let expected = IsotypicDecomposition::from_pairs(3, &[(&[3], 1), (&[2, 1], 2), (&[1, 1, 1], 1)]).unwrap();
        assert_eq!(d.total, expected);
        let graded = d.graded.unwrap();
        assert_eq!(graded.len(), 4);
        assert_eq!(graded[3], IsotypicDecomposition::from_pairs(3, &[(&[1, 1, 1], 1)]).unwrap());
    }

    #[test]
    fn maximal_ideal_is_trivial_module() {
        for n in 2..=4 {
            let m = maximal_power(n, 1).unwrap();
            let d = decompose_quotient(&m).unwrap().total;
            assert_eq!(d, IsotypicDecomposition::from_pairs(n, &[(&[n], 1)]).unwrap());
        }
    }

    #[test]
    fn symmetry_checks() {
        assert!(is_symmetric(&maximal_power(3, 2).unwrap()));
        assert!(!is_symmetric(&Ideal::parse(2, &["x1"]).unwrap()));
        assert!(decompose_quotient(&Ideal::parse(2, &["x1", "x2^2"]).unwrap()).is_err());
    }

    #[test]
    fn permutation_module_peeling() {
        for n in 2..=5 {
            let rho = IsotypicDecomposition::from_pairs(n, &[(&[n], 2), (&[n - 1, 1], 1)]).unwrap();
            assert_eq!(is_permutation_module_sum(&rho), Some(vec![part(&[n]), part(&[n - 1, 1])]));
            let row6 = IsotypicDecomposition::from_pairs(n, &[(&[n], 1), (&[n - 1, 1], 2)]).unwrap();
            assert_eq!(is_permutation_module_sum(&row6), None);
            for l in partitions_of(n).unwrap() {
                assert_eq!(is_permutation_module_sum(&kostka_decomposition(&l)), Some(vec![l.clone()]));
            }
        }
    }

    #[test]
    fn span_decomposition() {
        let diffs: Vec<Polynomial> = (1..4).map(|j| &Polynomial::var(4, 0) - &Polynomial::var(4, j)).collect();
        assert_eq!(decompose_span(4, &diffs).unwrap(), IsotypicDecomposition::from_pairs(4, &[(&[3, 1], 1)]).unwrap());
        assert!(decompose_span(3, &[Polynomial::var(3, 0)]).is_err());
    }

    #[test]
    fn tangent_of_maximal_ideal() {
        for n in 2..=4 {
            let m = maximal_power(n, 1).unwrap();
            let eq = tangent_dimension(&m).unwrap();
            assert_eq!(eq.tangent_dim, 1);
            let full = tangent_dimension_with(&m, TangentOptions { equivariant: false, method: SyzygyMethod::ModISquared }).unwrap();
            assert_eq!(full.tangent_dim, n);
            let dw = tangent_dimension_with(&m, TangentOptions { equivariant: false, method: SyzygyMethod::Degreewise { extra_degrees: 0 } }).unwrap();
            assert_eq!(dw.tangent_dim, n);
        }
    }

    #[test]
    fn tangent_of_m_squared_hilbert_scheme_of_points() {
        // Hilb^3(C^2) is smooth of dimension 6.
        let m2 = maximal_power(2, 2).unwrap();
        for method in [SyzygyMethod::ModISquared, SyzygyMethod::Degreewise { extra_degrees: 0 }] {
            let r = tangent_dimension_with(&m2, TangentOptions { equivariant: false, method }).unwrap();
            assert_eq!(r.tangent_dim, 6);
            assert_eq!(r.n1_dims, vec![(2, 3)]);
        }
    }
}
