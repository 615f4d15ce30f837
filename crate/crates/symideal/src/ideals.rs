//! Groebner bases and zero-dimensional ideal operations.
//!
//! Buchberger's algorithm with the Gebauer-Moeller criteria and the normal
//! selection strategy. Output bases are reduced and sorted by leading
//! monomial, so results are deterministic.

use std::collections::{BTreeMap, BTreeSet};
use std::fmt;
use std::sync::OnceLock;

use num_traits::{One, Zero};
use serde::{Deserialize, Serialize};

use crate::poly::{monomials_of_degree, Coeff, Monomial, Polynomial};
use crate::{Error, Result};

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, Default)]
pub enum MonomialOrder {
    #[default]
    DegRevLex,
    DegLex,
    /// Variables with index `>= split` are eliminated: monomials compare first
    /// by their degree in those variables, then by degrevlex.
    Elimination { split: usize },
}

impl MonomialOrder {
    /// A vector whose lexicographic order is the monomial order. It is linear
    /// in the exponents, so `key(a*b) = key(a) + key(b)`.
    pub fn key(&self, m: &Monomial) -> Vec<i64> {
        let e = &m.0;
        let deg = m.degree() as i64;
        match *self {
            MonomialOrder::DegRevLex => {
                let mut k = Vec::with_capacity(e.len() + 1);
                k.push(deg);
                k.extend(e.iter().rev().map(|&a| -(a as i64)));
                k
            }
            MonomialOrder::DegLex => {
                let mut k = Vec::with_capacity(e.len() + 1);
                k.push(deg);
                k.extend(e.iter().map(|&a| a as i64));
                k
            }
            MonomialOrder::Elimination { split } => {
                let mut k = Vec::with_capacity(e.len() + 2);
                k.push(e[split.min(e.len())..].iter().map(|&a| a as i64).sum());
                k.push(deg);
                k.extend(e.iter().rev().map(|&a| -(a as i64)));
                k
            }
        }
    }

    pub fn cmp(&self, a: &Monomial, b: &Monomial) -> std::cmp::Ordering {
        self.key(a).cmp(&self.key(b))
    }

    pub fn is_graded(&self) -> bool {
        !matches!(self, MonomialOrder::Elimination { .. })
    }

    pub fn tag(&self) -> String {
        match self {
            MonomialOrder::DegRevLex => "degrevlex".into(),
            MonomialOrder::DegLex => "deglex".into(),
            MonomialOrder::Elimination { split } => format!("elim({split})"),
        }
    }

    pub fn from_tag(s: &str) -> Result<Self> {
        match s {
            "degrevlex" => Ok(MonomialOrder::DegRevLex),
            "deglex" => Ok(MonomialOrder::DegLex),
            _ => s
                .strip_prefix("elim(")
                .and_then(|r| r.strip_suffix(')'))
                .and_then(|r| r.parse().ok())
                .map(|split| MonomialOrder::Elimination { split })
                .ok_or_else(|| Error::Parse(format!("unknown monomial order {s:?}"))),
        }
    }

    /// Leading monomial and coefficient of `f`.
    pub fn leading<'a>(&self, f: &'a Polynomial) -> Option<(&'a Monomial, &'a Coeff)> {
        f.terms().max_by(|a, b| self.cmp(a.0, b.0))
    }
}

impl fmt::Display for MonomialOrder {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.tag())
    }
}

type Key = Vec<i64>;

fn add_keys(a: &[i64], b: &[i64]) -> Key {
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// A polynomial with terms sorted by decreasing order key.
#[derive(Clone, Debug)]
struct IPoly {
    terms: Vec<(Key, Monomial, Coeff)>,
}

impl IPoly {
    fn from_poly(f: &Polynomial, order: &MonomialOrder) -> IPoly {
        let mut terms: Vec<_> = f.terms().map(|(m, c)| (order.key(m), m.clone(), c.clone())).collect();
        terms.sort_by(|a, b| b.0.cmp(&a.0));
        IPoly { terms }
    }

    fn from_map(map: BTreeMap<Key, (Monomial, Coeff)>) -> IPoly {
        IPoly { terms: map.into_iter().rev().map(|(k, (m, c))| (k, m, c)).collect() }
    }

    fn to_poly(&self, n: usize) -> Polynomial {
        Polynomial::from_terms(n, self.terms.iter().map(|(_, m, c)| (m.clone(), c.clone())))
    }

    fn lm(&self) -> &Monomial {
        &self.terms[0].1
    }

    fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    fn make_monic(&mut self) {
        if let Some(c) = self.terms.first().map(|t| t.2.clone()) {
            if !c.is_one() {
                let inv = c.recip();
                for t in &mut self.terms {
                    t.2 *= &inv;
                }
            }
        }
    }
}

fn add_scaled(work: &mut BTreeMap<Key, (Monomial, Coeff)>, g: &IPoly, skip_lead: bool, qk: &[i64], q: &Monomial, c: &Coeff) {
    use std::collections::btree_map::Entry;
    for (k, m, gc) in g.terms.iter().skip(usize::from(skip_lead)) {
        let key = add_keys(qk, k);
        let v = c * gc;
        match work.entry(key) {
            Entry::Vacant(e) => {
                e.insert((q.mul(m), v));
            }
            Entry::Occupied(mut e) => {
                e.get_mut().1 += v;
                if e.get().1.is_zero() {
                    e.remove();
                }
            }
        }
    }
}

/// Full reduction of `work` by the monic polynomials `basis`.
fn reduce_map(mut work: BTreeMap<Key, (Monomial, Coeff)>, basis: &[&IPoly], order: &MonomialOrder) -> IPoly {
    let mut rem = BTreeMap::new();
    while let Some((k, (m, c))) = work.pop_last() {
        match basis.iter().find(|g| g.lm().divides(&m)) {
            Some(g) => {
                let q = g.lm().quotient_of(&m);
                let qk = order.key(&q);
                add_scaled(&mut work, g, true, &qk, &q, &-c);
            }
            None => {
                rem.insert(k, (m, c));
            }
        }
    }
    IPoly::from_map(rem)
}

fn to_map(f: &IPoly) -> BTreeMap<Key, (Monomial, Coeff)> {
    f.terms.iter().map(|(k, m, c)| (k.clone(), (m.clone(), c.clone()))).collect()
}

fn s_poly(f: &IPoly, g: &IPoly, order: &MonomialOrder) -> BTreeMap<Key, (Monomial, Coeff)> {
    let l = f.lm().lcm(g.lm());
    let qf = f.lm().quotient_of(&l);
    let qg = g.lm().quotient_of(&l);
    let mut work = BTreeMap::new();
    add_scaled(&mut work, f, true, &order.key(&qf), &qf, &Coeff::one());
    add_scaled(&mut work, g, true, &order.key(&qg), &qg, &-Coeff::one());
    work
}

struct Pair {
    i: usize,
    j: usize,
    lcm: Monomial,
    key: Key,
}

/// Reduced Groebner basis of the ideal generated by `gens`.
pub fn groebner_basis(gens: &[Polynomial], n: usize, order: MonomialOrder) -> Vec<Polynomial> {
    let mut polys: Vec<IPoly> = Vec::new();
    let mut active: Vec<usize> = Vec::new();
    let mut pairs: Vec<Pair> = Vec::new();

    let mut inputs: Vec<IPoly> = gens.iter().filter(|g| !g.is_zero()).map(|g| IPoly::from_poly(g, &order)).collect();
    // Smallest generators first keeps the initial reductions cheap.
    inputs.sort_by(|a, b| a.terms[0].0.cmp(&b.terms[0].0));
    for f in inputs {
        let basis: Vec<&IPoly> = active.iter().map(|&i| &polys[i]).collect();
        let mut h = reduce_map(to_map(&f), &basis, &order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, &order);
    }

    while !pairs.is_empty() {
        let best = (0..pairs.len())
            .min_by(|&a, &b| pairs[a].key.cmp(&pairs[b].key).then((pairs[a].i, pairs[a].j).cmp(&(pairs[b].i, pairs[b].j))))
            .unwrap();
        let p = pairs.swap_remove(best);
        let basis: Vec<&IPoly> = active.iter().map(|&i| &polys[i]).collect();
        let mut h = reduce_map(s_poly(&polys[p.i], &polys[p.j], &order), &basis, &order);
        if h.is_zero() {
            continue;
        }
        h.make_monic();
        polys.push(h);
        update(&polys, &mut active, &mut pairs, polys.len() - 1, &order);
    }

    // Interreduce the minimal basis.
    let mut lead: Vec<usize> = active.clone();
    lead.sort_by(|&a, &b| polys[a].terms[0].0.cmp(&polys[b].terms[0].0));
    let mut out: Vec<IPoly> = Vec::new();
    for (pos, &i) in lead.iter().enumerate() {
        let others: Vec<&IPoly> = lead.iter().enumerate().filter(|(p, _)| *p != pos).map(|(_, &j)| &polys[j]).collect();
        let f = &polys[i];
        let mut tail = to_map(f);
        let (k, (m, c)) = tail.pop_last().unwrap();
        let mut r = reduce_map(tail, &others, &order);
        r.terms.insert(0, (k, m, c));
        r.make_monic();
        out.push(r);
    }
    out.iter().map(|f| f.to_poly(n)).collect()
}

/// Gebauer-Moeller update with the new element `h`.
fn update(polys: &[IPoly], active: &mut Vec<usize>, pairs: &mut Vec<Pair>, h: usize, order: &MonomialOrder) {
    let lh = polys[h].lm().clone();
    let mk = |g: usize| {
        let lcm = lh.lcm(polys[g].lm());
        let key = order.key(&lcm);
        Pair { i: g, j: h, lcm, key }
    };
    let candidates: Vec<Pair> = active.iter().map(|&g| mk(g)).collect();

    // Chain criterion among the new pairs.
    let mut kept: Vec<Pair> = Vec::new();
    for (idx, p) in candidates.iter().enumerate() {
        let coprime = lh.is_coprime(polys[p.i].lm());
        let dominated = candidates
            .iter()
            .enumerate()
            .any(|(jdx, q)| jdx > idx && q.lcm.divides(&p.lcm))
            || kept.iter().any(|q| q.lcm.divides(&p.lcm));
        if coprime || !dominated {
            kept.push(Pair { i: p.i, j: p.j, lcm: p.lcm.clone(), key: p.key.clone() });
        }
    }
    // Product criterion.
    kept.retain(|p| !lh.is_coprime(polys[p.i].lm()));

    pairs.retain(|p| {
        !(lh.divides(&p.lcm) && lh.lcm(polys[p.i].lm()) != p.lcm && lh.lcm(polys[p.j].lm()) != p.lcm)
    });
    pairs.extend(kept);

    active.retain(|&g| !lh.divides(polys[g].lm()));
    active.push(h);
}

/// A reduced Groebner basis together with its order.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct GroebnerBasis {
    pub n: usize,
    pub order: MonomialOrder,
    pub polys: Vec<Polynomial>,
}

impl GroebnerBasis {
    pub fn compute(gens: &[Polynomial], n: usize, order: MonomialOrder) -> Self {
        GroebnerBasis { n, order, polys: groebner_basis(gens, n, order) }
    }

    pub fn leading_monomials(&self) -> Vec<Monomial> {
        self.polys.iter().map(|f| self.order.leading(f).unwrap().0.clone()).collect()
    }

    pub fn is_unit(&self) -> bool {
        self.polys.iter().any(|f| f.degree() == Some(0))
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        assert_eq!(f.nvars(), self.n, "ambient mismatch");
        let basis: Vec<IPoly> = self.polys.iter().map(|g| IPoly::from_poly(g, &self.order)).collect();
        let refs: Vec<&IPoly> = basis.iter().collect();
        reduce_map(to_map(&IPoly::from_poly(f, &self.order)), &refs, &self.order).to_poly(self.n)
    }

    pub fn reducer(&self) -> Reducer {
        Reducer {
            n: self.n,
            order: self.order,
            basis: self.polys.iter().map(|g| IPoly::from_poly(g, &self.order)).collect(),
        }
    }

    pub fn is_zero_dimensional(&self) -> bool {
        let lms = self.leading_monomials();
        (0..self.n).all(|i| lms.iter().any(|m| m.0[i] > 0 && m.degree() == m.0[i]))
    }

    /// Standard monomials sorted by degree then lex, or `None` if infinitely many.
    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        if !self.is_zero_dimensional() {
            return None;
        }
        let lms = self.leading_monomials();
        let mut seen = BTreeSet::new();
        let mut frontier = vec![Monomial::one(self.n)];
        if lms.iter().any(|l| l.divides(&frontier[0])) {
            return Some(Vec::new());
        }
        seen.insert(frontier[0].clone());
        while let Some(m) = frontier.pop() {
            for i in 0..self.n {
                let mut e = m.clone();
                e.0[i] += 1;
                if !seen.contains(&e) && !lms.iter().any(|l| l.divides(&e)) {
                    seen.insert(e.clone());
                    frontier.push(e);
                }
            }
        }
        let mut v: Vec<Monomial> = seen.into_iter().collect();
        v.sort_by(|a, b| a.degree().cmp(&b.degree()).then_with(|| b.0.cmp(&a.0)));
        Some(v)
    }

    /// Buchberger criterion: every S-polynomial reduces to zero.
    pub fn satisfies_buchberger_criterion(&self) -> bool {
        let basis: Vec<IPoly> = self.polys.iter().map(|g| IPoly::from_poly(g, &self.order)).collect();
        let mut normed = basis.clone();
        for b in &mut normed {
            b.make_monic();
        }
        let refs: Vec<&IPoly> = normed.iter().collect();
        for i in 0..normed.len() {
            for j in i + 1..normed.len() {
                if !reduce_map(s_poly(&normed[i], &normed[j], &self.order), &refs, &self.order).is_zero() {
                    return false;
                }
            }
        }
        true
    }
}

/// Reusable normal-form engine over a fixed basis.
#[derive(Clone, Debug)]
pub struct Reducer {
    n: usize,
    order: MonomialOrder,
    basis: Vec<IPoly>,
}

impl Reducer {
    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        let refs: Vec<&IPoly> = self.basis.iter().collect();
        reduce_map(to_map(&IPoly::from_poly(f, &self.order)), &refs, &self.order).to_poly(self.n)
    }
}

/// The value of a colength computation.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub enum Colength {
    Finite(usize),
    Infinite,
}

impl Colength {
    pub fn finite(self) -> Option<usize> {
        match self {
            Colength::Finite(k) => Some(k),
            Colength::Infinite => None,
        }
    }
}

impl fmt::Display for Colength {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Colength::Finite(k) => write!(f, "{k}"),
            Colength::Infinite => write!(f, "infinite"),
        }
    }
}

/// An ideal of `Q[x1, ..., xn]` with a lazily computed degrevlex basis.
#[derive(Clone, Debug)]
pub struct Ideal {
    n: usize,
    generators: Vec<Polynomial>,
    gb: OnceLock<GroebnerBasis>,
}

impl PartialEq for Ideal {
    /// Equality of ideals, not of generator lists.
    fn eq(&self, other: &Ideal) -> bool {
        self.n == other.n && self.groebner().polys == other.groebner().polys
    }
}

impl Ideal {
    pub fn new(n: usize, generators: Vec<Polynomial>) -> Result<Self> {
        if let Some(g) = generators.iter().find(|g| g.nvars() != n) {
            return Err(Error::VariableMismatch(g.nvars(), n));
        }
        let generators = generators.into_iter().filter(|g| !g.is_zero()).collect();
        Ok(Ideal { n, generators, gb: OnceLock::new() })
    }

    /// Parse generators in the text format.
    pub fn parse(n: usize, gens: &[&str]) -> Result<Self> {
        Ideal::new(n, gens.iter().map(|s| Polynomial::parse(n, s)).collect::<Result<_>>()?)
    }

    pub fn zero(n: usize) -> Self {
        Ideal { n, generators: Vec::new(), gb: OnceLock::new() }
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn generators(&self) -> &[Polynomial] {
        &self.generators
    }

    /// The reduced degrevlex basis, computed once.
    pub fn groebner(&self) -> &GroebnerBasis {
        self.gb.get_or_init(|| GroebnerBasis::compute(&self.generators, self.n, MonomialOrder::DegRevLex))
    }

    pub fn groebner_in(&self, order: MonomialOrder) -> GroebnerBasis {
        if order == MonomialOrder::DegRevLex {
            return self.groebner().clone();
        }
        GroebnerBasis::compute(&self.generators, self.n, order)
    }

    pub fn normal_form(&self, f: &Polynomial) -> Polynomial {
        self.groebner().normal_form(f)
    }

    pub fn contains(&self, f: &Polynomial) -> bool {
        self.normal_form(f).is_zero()
    }

    pub fn contains_ideal(&self, other: &Ideal) -> bool {
        let r = self.groebner().reducer();
        other.generators.iter().all(|g| r.normal_form(g).is_zero())
    }

    pub fn colength(&self) -> Colength {
        match self.groebner().standard_monomials() {
            Some(v) => Colength::Finite(v.len()),
            None => Colength::Infinite,
        }
    }

    pub fn standard_monomials(&self) -> Option<Vec<Monomial>> {
        self.groebner().standard_monomials()
    }

    pub fn is_homogeneous(&self) -> bool {
        self.generators.iter().all(Polynomial::is_homogeneous)
    }

    /// `dim (P/I)_d` for `d = 0, 1, ...` up to the last nonzero value.
    pub fn hilbert_function(&self) -> Result<Vec<usize>> {
        if !self.is_homogeneous() {
            return Err(Error::Unsupported("hilbert_function needs homogeneous generators".into()));
        }
        let std = self.standard_monomials().ok_or(Error::NotZeroDimensional)?;
        let mut h = Vec::new();
        for m in std {
            let d = m.degree() as usize;
            if h.len() <= d {
                h.resize(d + 1, 0);
            }
            h[d] += 1;
        }
        Ok(h)
    }

    pub fn sum(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.n, other.n, "ambient mismatch");
        let mut g = self.generators.clone();
        g.extend(other.generators.iter().cloned());
        Ideal { n: self.n, generators: g, gb: OnceLock::new() }
    }

    pub fn with_generators(&self, extra: impl IntoIterator<Item = Polynomial>) -> Ideal {
        let mut g = self.generators.clone();
        g.extend(extra.into_iter().filter(|f| !f.is_zero()));
        Ideal { n: self.n, generators: g, gb: OnceLock::new() }
    }

    /// The ideal generated by the reduced basis; cheap to reuse downstream.
    pub fn minimized(&self) -> Ideal {
        let gb = self.groebner().clone();
        let cell = OnceLock::new();
        let _ = cell.set(gb.clone());
        Ideal { n: self.n, generators: gb.polys, gb: cell }
    }

    /// `I ∩ J` by eliminating `t` from `t*I + (1-t)*J`.
    pub fn intersect(&self, other: &Ideal) -> Ideal {
        assert_eq!(self.n, other.n, "ambient mismatch");
        let n = self.n;
        let t = Polynomial::var(n + 1, n);
        let one_minus_t = &Polynomial::one(n + 1) - &t;
        let mut gens = Vec::new();
        for f in &self.groebner().polys {
            gens.push(&t * &f.extend_vars(n + 1));
        }
        for g in &other.groebner().polys {
            gens.push(&one_minus_t * &g.extend_vars(n + 1));
        }
        let gb = groebner_basis(&gens, n + 1, MonomialOrder::Elimination { split: n });
        let kept: Vec<Polynomial> = gb.iter().filter_map(|f| f.restrict_vars(n)).collect();
        let out = Ideal { n, generators: kept, gb: OnceLock::new() };
        out.minimized()
    }

    /// Ideal of top-degree forms, via homogenizing a degrevlex basis and setting
    /// the homogenizing variable to zero.
    pub fn associated_graded(&self) -> Result<Ideal> {
        if self.colength() == Colength::Infinite {
            return Err(Error::NotZeroDimensional);
        }
        let gens = self.groebner().polys.iter().map(|f| f.homogenize().drop_last_var(true)).collect();
        Ok(Ideal { n: self.n, generators: gens, gb: OnceLock::new() })
    }

    pub fn to_json(&self, include_gb: bool) -> IdealJson {
        IdealJson {
            n: self.n,
            generators: self.generators.iter().map(|g| g.to_string()).collect(),
            groebner: include_gb.then(|| GroebnerJson {
                order: self.groebner().order.tag(),
                basis: self.groebner().polys.iter().map(|g| g.to_string()).collect(),
            }),
        }
    }

    pub fn from_json(j: &IdealJson) -> Result<Ideal> {
        let gens = j.generators.iter().map(|s| Polynomial::parse(j.n, s)).collect::<Result<Vec<_>>>()?;
        let ideal = Ideal::new(j.n, gens)?;
        if let Some(g) = &j.groebner {
            let order = MonomialOrder::from_tag(&g.order)?;
            if order == MonomialOrder::DegRevLex {
                let polys = g.basis.iter().map(|s| Polynomial::parse(j.n, s)).collect::<Result<Vec<_>>>()?;
                let _ = ideal.gb.set(GroebnerBasis { n: j.n, order, polys });
            }
        }
        Ok(ideal)
    }

    /// Stable content hash of the reduced basis.
    pub fn hash_hex(&self) -> String {
        use sha2::{Digest, Sha256};
        let mut h = Sha256::new();
        h.update(self.n.to_le_bytes());
        for g in &self.groebner().polys {
            h.update(g.to_string().as_bytes());
            h.update(b";");
        }
        hex::encode(&h.finalize()[..8])
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let g: Vec<String> = self.generators.iter().map(|g| g.to_string()).collect();
        write!(f, "({})", g.join(", "))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct GroebnerJson {
    pub order: String,
    pub basis: Vec<String>,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct IdealJson {
    pub n: usize,
    pub generators: Vec<String>,
    #[serde(skip_serializing_if = "Option::is_none", default)]
    pub groebner: Option<GroebnerJson>,
}

/// `m^d`, generated by all monomials of degree `d`.
pub fn maximal_power(n: usize, d: u32) -> Result<Ideal> {
    if d == 0 {
        return Err(Error::OutOfRange("m^0 is the unit ideal; use d >= 1".into()));
    }
    Ideal::new(n, monomials_of_degree(n, d).into_iter().map(Polynomial::monomial).collect())
}

/// Maximal ideal of a rational point.
pub fn point_ideal(point: &[Coeff]) -> Ideal {
    let n = point.len();
    let gens = (0..n)
        .map(|i| &Polynomial::var(n, i) - &Polynomial::constant(n, point[i].clone()))
        .collect();
    Ideal::new(n, gens).expect("arity")
}

/// Distinct points of the S_n-orbit of `point`, sorted.
pub fn orbit_points(point: &[Coeff]) -> Vec<Vec<Coeff>> {
    let mut v = point.to_vec();
    v.sort();
    let mut out = Vec::new();
    // iterate distinct permutations of the sorted multiset
    loop {
        out.push(v.clone());
        let n = v.len();
        let Some(i) = (1..n).rev().find(|&i| v[i - 1] < v[i]) else { break };
        let j = (i..n).rev().find(|&j| v[j] > v[i - 1]).unwrap();
        v.swap(i - 1, j);
        v[i..].reverse();
    }
    out
}

/// Vanishing ideal of a finite point set, by a balanced tree of intersections.
pub fn vanishing_ideal(points: &[Vec<Coeff>]) -> Ideal {
    assert!(!points.is_empty(), "empty point set");
    if points.len() == 1 {
        return point_ideal(&points[0]).minimized();
    }
    let (a, b) = points.split_at(points.len() / 2);
    vanishing_ideal(a).intersect(&vanishing_ideal(b))
}

/// Radical vanishing ideal of the S_n-orbit of `point`.
pub fn orbit_ideal(point: &[Coeff]) -> Result<Ideal> {
    if point.len() > 6 {
        return Err(Error::Unsupported("orbit_ideal is limited to n <= 6".into()));
    }
    Ok(vanishing_ideal(&orbit_points(point)))
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::poly::{int, power_sum};

    fn ideal(n: usize, gens: &[&str]) -> Ideal {
        Ideal::parse(n, gens).unwrap()
    }

    #[test]
    fn order_keys_are_linear() {
        let a = Monomial(vec![1, 0, 2]);
        let b = Monomial(vec![0, 3, 1]);
        for o in [MonomialOrder::DegRevLex, MonomialOrder::DegLex, MonomialOrder::Elimination { split: 2 }] {
            assert_eq!(o.key(&a.mul(&b)), add_keys(&o.key(&a), &o.key(&b)));
            assert_eq!(MonomialOrder::from_tag(&o.tag()).unwrap(), o);
        }
        // degrevlex: x1*x3 < x2^2 in three variables
        let o = MonomialOrder::DegRevLex;
        assert!(o.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])).is_lt());
        assert!(MonomialOrder::DegLex.cmp(&Monomial(vec![1, 0, 1]), &Monomial(vec![0, 2, 0])).is_gt());
    }

    #[test]
    fn linear_generator_is_its_own_basis() {
        let i = ideal(2, &["x1 - x2"]);
        assert_eq!(i.groebner().polys, vec![Polynomial::parse(2, "x1 - x2").unwrap()]);
        assert_eq!(i.colength(), Colength::Infinite);
    }

    #[test]
    fn coinvariants() {
        for n in 1..=4 {
            let gens = (1..=n as u32).map(|k| power_sum(k, n).unwrap()).collect();
            let i = Ideal::new(n, gens).unwrap();
            let fact: usize = (1..=n).product();
            assert_eq!(i.colength(), Colength::Finite(fact));
            assert!(i.groebner().satisfies_buchberger_criterion());
        }
    }

    #[test]
    fn maximal_powers() {
        for n in 1..=4 {
            assert_eq!(maximal_power(n, 2).unwrap().colength(), Colength::Finite(n + 1));
            assert_eq!(maximal_power(n, 2).unwrap().hilbert_function().unwrap(), vec![1, n]);
            for d in 1..=4u32 {
                // binom(n+d-1, n)
                let mut b = 1usize;
                for k in 0..n {
                    b = b * (d as usize - 1 + n - k) / (k + 1);
                }
                assert_eq!(maximal_power(n, d).unwrap().colength(), Colength::Finite(b));
            }
        }
        assert_eq!(maximal_power(2, 1).unwrap(), ideal(2, &["x1", "x2"]));
        assert!(maximal_power(2, 0).is_err());
    }

    #[test]
    fn normal_forms() {
        let i = ideal(3, &["x1^2 - x2", "x2*x3 - 1", "x3^2 + x1"]);
        for g in i.generators() {
            assert!(i.contains(g));
        }
        let f = Polynomial::parse(3, "x1^5*x3 + 7*x2^3 - x3").unwrap();
        let r = i.normal_form(&f);
        assert_eq!(i.normal_form(&r), r);
        assert!(i.contains(&(&f - &r)));
        assert!(i.groebner().satisfies_buchberger_criterion());
        let dl = i.groebner_in(MonomialOrder::DegLex);
        assert!(dl.satisfies_buchberger_criterion());
        assert_eq!(dl.standard_monomials().unwrap().len(), i.colength().finite().unwrap());
    }

    #[test]
    fn intersections() {
        let i = ideal(2, &["x1^2", "x2"]);
        assert_eq!(i.intersect(&i), i);
        let pts: Vec<Vec<Coeff>> = vec![vec![int(0), int(0)], vec![int(1), int(2)], vec![int(-1), int(3)]];
        let v = vanishing_ideal(&pts);
        assert_eq!(v.colength(), Colength::Finite(3));
        for p in &pts {
            for g in v.generators() {
                assert!(g.evaluate(p).unwrap().is_zero());
            }
        }
    }

    #[test]
    fn orbit_ideals() {
        let c = orbit_ideal(&[int(2), int(2), int(2)]).unwrap();
        assert_eq!(c, ideal(3, &["x1 - 2", "x2 - 2", "x3 - 2"]));
        let o = orbit_ideal(&[int(2), int(-1), int(-1)]).unwrap();
        assert_eq!(o.colength(), Colength::Finite(3));
        let gr = o.associated_graded().unwrap();
        assert_eq!(gr.colength(), Colength::Finite(3));
        assert_eq!(gr.hilbert_function().unwrap().iter().sum::<usize>(), 3);
        assert_eq!(gr.associated_graded().unwrap(), gr);
    }

    #[test]
    fn json_roundtrip() {
        let i = ideal(3, &["x1 + x2 + x3", "x1^2"]);
        let j = i.to_json(true);
        let s = serde_json::to_string(&j).unwrap();
        let back = Ideal::from_json(&serde_json::from_str(&s).unwrap()).unwrap();
        assert_eq!(back, i);
        assert_eq!(back.hash_hex(), i.hash_hex());
    }
}
