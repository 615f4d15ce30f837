//! Sparse multivariate polynomials over `Q`, the S_n action on variables and
//! the apolarity pairing.
//!
//! A [`Polynomial`] lives in a fixed ambient ring `Q[x1, ..., xn]`. Terms are
//! stored in a map keyed by exponent vectors; printing sorts them by graded
//! lexicographic order, largest first.

use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

use crate::combinat::{factorial, Permutation};
use crate::{Error, Result};

pub type Coeff = BigRational;

pub fn rat(p: i64, q: i64) -> Coeff {
    BigRational::new(BigInt::from(p), BigInt::from(q))
}

pub fn int(p: i64) -> Coeff {
    BigRational::from_integer(BigInt::from(p))
}

/// Exponent vector of a monomial.
#[derive(Clone, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Monomial(pub Vec<u32>);

impl Monomial {
    pub fn one(n: usize) -> Self {
        Monomial(vec![0; n])
    }

    /// The variable `x_{i+1}` (0-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        let mut e = vec![0; n];
        e[i] = 1;
        Monomial(e)
    }

    pub fn nvars(&self) -> usize {
        self.0.len()
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    pub fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }

    pub fn divides(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    /// `other / self`, assuming `self` divides `other`.
    pub fn quotient_of(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| b - a).collect())
    }

    pub fn lcm(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| *a.max(b)).collect())
    }

    pub fn is_coprime(&self, other: &Monomial) -> bool {
        self.0.iter().zip(&other.0).all(|(a, b)| *a == 0 || *b == 0)
    }

    /// `sigma . x^a`: variable `i` is sent to variable `sigma(i)`.
    pub fn permute(&self, sigma: &Permutation) -> Monomial {
        let mut e = vec![0; self.0.len()];
        for (i, &a) in self.0.iter().enumerate() {
            e[sigma.apply(i)] = a;
        }
        Monomial(e)
    }

    /// `prod a_i!`.
    pub fn factorial_weight(&self) -> BigInt {
        self.0.iter().map(|&a| BigInt::from(factorial(a as usize))).product()
    }

    /// Graded lexicographic comparison.
    pub fn cmp_deglex(&self, other: &Monomial) -> std::cmp::Ordering {
        self.degree().cmp(&other.degree()).then_with(|| self.0.cmp(&other.0))
    }
}

/// All monomials of total degree `d` in `n` variables, in descending lex order.
pub fn monomials_of_degree(n: usize, d: u32) -> Vec<Monomial> {
    let mut out = Vec::new();
    let mut cur = vec![0u32; n];
    fn rec(i: usize, left: u32, cur: &mut Vec<u32>, out: &mut Vec<Monomial>) {
        if i + 1 == cur.len() {
            cur[i] = left;
            out.push(Monomial(cur.clone()));
            return;
        }
        for a in (0..=left).rev() {
            cur[i] = a;
            rec(i + 1, left - a, cur, out);
        }
        cur[i] = 0;
    }
    if n == 0 {
        if d == 0 {
            out.push(Monomial(vec![]));
        }
        return out;
    }
    rec(0, d, &mut cur, &mut out);
    out
}

/// A polynomial in `Q[x1, ..., xn]`.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct Polynomial {
    n: usize,
    terms: BTreeMap<Monomial, Coeff>,
}

impl Polynomial {
    pub fn zero(n: usize) -> Self {
        Polynomial { n, terms: BTreeMap::new() }
    }

    pub fn constant(n: usize, c: Coeff) -> Self {
        Self::term(n, Monomial::one(n), c)
    }

    pub fn one(n: usize) -> Self {
        Self::constant(n, Coeff::one())
    }

    pub fn term(n: usize, m: Monomial, c: Coeff) -> Self {
        assert_eq!(m.nvars(), n, "monomial arity");
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(m, c);
        }
        Polynomial { n, terms }
    }

    pub fn monomial(m: Monomial) -> Self {
        Self::term(m.nvars(), m, Coeff::one())
    }

    /// `x_{i+1}` (0-based `i`).
    pub fn var(n: usize, i: usize) -> Self {
        Self::monomial(Monomial::var(n, i))
    }

    pub fn from_terms(n: usize, terms: impl IntoIterator<Item = (Monomial, Coeff)>) -> Self {
        let mut p = Self::zero(n);
        for (m, c) in terms {
            p.add_term(m, c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Coeff)> {
        self.terms.iter()
    }

    pub fn coeff(&self, m: &Monomial) -> Coeff {
        self.terms.get(m).cloned().unwrap_or_else(Coeff::zero)
    }

    pub fn add_term(&mut self, m: Monomial, c: Coeff) {
        assert_eq!(m.nvars(), self.n, "monomial arity");
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(m) {
            Entry::Vacant(v) => {
                v.insert(c);
            }
            Entry::Occupied(mut o) => {
                *o.get_mut() += c;
                if o.get().is_zero() {
                    o.remove();
                }
            }
        }
    }

    /// Total degree; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<u32> {
        self.terms.keys().map(Monomial::degree).max()
    }

    pub fn is_homogeneous(&self) -> bool {
        let mut it = self.terms.keys().map(Monomial::degree);
        match it.next() {
            None => true,
            Some(d) => it.all(|e| e == d),
        }
    }

    pub fn homogeneous_component(&self, d: u32) -> Polynomial {
        Polynomial {
            n: self.n,
            terms: self.terms.iter().filter(|(m, _)| m.degree() == d).map(|(m, c)| (m.clone(), c.clone())).collect(),
        }
    }

    /// The top-degree form.
    pub fn top_form(&self) -> Polynomial {
        match self.degree() {
            None => self.clone(),
            Some(d) => self.homogeneous_component(d),
        }
    }

    pub fn scale(&self, c: &Coeff) -> Polynomial {
        if c.is_zero() {
            return Self::zero(self.n);
        }
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, a)| (m.clone(), a * c)).collect() }
    }

    pub fn mul_monomial(&self, m: &Monomial) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(k, a)| (k.mul(m), a.clone())).collect() }
    }

    pub fn pow(&self, k: u32) -> Polynomial {
        let mut r = Self::one(self.n);
        for _ in 0..k {
            r = &r * self;
        }
        r
    }

    /// Leading coefficient under graded lex order.
    pub fn deglex_leading(&self) -> Option<(&Monomial, &Coeff)> {
        self.terms.iter().max_by(|a, b| a.0.cmp_deglex(b.0))
    }

    /// Scale so that the graded-lex leading coefficient is 1.
    pub fn normalized(&self) -> Polynomial {
        match self.deglex_leading() {
            None => self.clone(),
            Some((_, c)) => self.scale(&c.recip()),
        }
    }

    /// `sigma . f` with `sigma . x_i = x_{sigma(i)}`.
    pub fn apply_permutation(&self, sigma: &Permutation) -> Result<Polynomial> {
        if sigma.degree() != self.n {
            return Err(Error::VariableMismatch(sigma.degree(), self.n));
        }
        Ok(self.permuted(sigma))
    }

    pub(crate) fn permuted(&self, sigma: &Permutation) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.permute(sigma), c.clone())).collect() }
    }

    /// Average over all of S_n.
    pub fn reynolds(&self) -> Polynomial {
        let perms = Permutation::all(self.n);
        let mut acc = Self::zero(self.n);
        for s in &perms {
            for (m, c) in &self.terms {
                acc.add_term(m.permute(s), c.clone());
            }
        }
        acc.scale(&Coeff::from_integer(BigInt::from(perms.len())).recip())
    }

    pub fn is_symmetric(&self) -> bool {
        if self.n < 2 {
            return true;
        }
        let t = Permutation::transposition(self.n, 0, 1);
        let c = Permutation::long_cycle(self.n);
        self.permuted(&t) == *self && self.permuted(&c) == *self
    }

    pub fn evaluate(&self, point: &[Coeff]) -> Result<Coeff> {
        if point.len() != self.n {
            return Err(Error::VariableMismatch(point.len(), self.n));
        }
        let mut acc = Coeff::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(&m.0) {
                for _ in 0..e {
                    t *= x;
                }
            }
            acc += t;
        }
        Ok(acc)
    }

    /// Partial derivative in variable `i` (0-based).
    pub fn derivative(&self, i: usize) -> Polynomial {
        let mut p = Self::zero(self.n);
        for (m, c) in &self.terms {
            if m.0[i] > 0 {
                let mut e = m.clone();
                e.0[i] -= 1;
                p.add_term(e, c * int(m.0[i] as i64));
            }
        }
        p
    }

    /// `<f, g> = f(d/dx1, ..., d/dxn)(g)`.
    pub fn apolar_pair(&self, g: &Polynomial) -> Result<Polynomial> {
        if self.n != g.n {
            return Err(Error::VariableMismatch(self.n, g.n));
        }
        let mut out = Self::zero(self.n);
        for (a, fa) in &self.terms {
            for (b, gb) in &g.terms {
                if !a.divides(b) {
                    continue;
                }
                // d^a x^b = b!/(b-a)! x^{b-a}
                let mut w = BigInt::one();
                for (&ai, &bi) in a.0.iter().zip(&b.0) {
                    for k in (bi - ai + 1)..=bi {
                        w *= BigInt::from(k);
                    }
                }
                out.add_term(a.quotient_of(b), fa * gb * Coeff::from_integer(w));
            }
        }
        Ok(out)
    }

    /// Re-embed into `m >= n` variables; new variables appended at the end.
    pub fn extend_vars(&self, m: usize) -> Polynomial {
        assert!(m >= self.n);
        Polynomial {
            n: m,
            terms: self
                .terms
                .iter()
                .map(|(k, c)| {
                    let mut e = k.0.clone();
                    e.resize(m, 0);
                    (Monomial(e), c.clone())
                })
                .collect(),
        }
    }

    /// Drop trailing variables, which must not occur.
    pub fn restrict_vars(&self, m: usize) -> Option<Polynomial> {
        let mut terms = BTreeMap::new();
        for (k, c) in &self.terms {
            if k.0[m..].iter().any(|&e| e > 0) {
                return None;
            }
            terms.insert(Monomial(k.0[..m].to_vec()), c.clone());
        }
        Some(Polynomial { n: m, terms })
    }

    /// Substitute the last variable by 1 (dehomogenize) or 0 (`zero = true`) and drop it.
    pub fn drop_last_var(&self, zero: bool) -> Polynomial {
        let m = self.n - 1;
        let mut p = Self::zero(m);
        for (k, c) in &self.terms {
            if zero && k.0[m] > 0 {
                continue;
            }
            p.add_term(Monomial(k.0[..m].to_vec()), c.clone());
        }
        p
    }

    /// Homogenize with a new trailing variable.
    pub fn homogenize(&self) -> Polynomial {
        let d = self.degree().unwrap_or(0);
        let mut p = Self::zero(self.n + 1);
        for (k, c) in &self.terms {
            let mut e = k.0.clone();
            e.push(d - k.degree());
            p.add_term(Monomial(e), c.clone());
        }
        p
    }

    /// Terms sorted by graded lex order, largest first.
    pub fn sorted_terms(&self) -> Vec<(&Monomial, &Coeff)> {
        let mut v: Vec<_> = self.terms.iter().collect();
        v.sort_by(|a, b| b.0.cmp_deglex(a.0));
        v
    }

    /// Parse the text format, e.g. `x1^2*x2 - 3/2*x3`, in `n` variables.
    pub fn parse(n: usize, s: &str) -> Result<Polynomial> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        if s.is_empty() {
            return Err(Error::Parse("empty polynomial".into()));
        }
        let mut p = Polynomial::zero(n);
        let bytes = s.as_bytes();
        let mut start = 0;
        let mut i = 0;
        let mut chunks = Vec::new();
        while i <= bytes.len() {
            let at_split = i == bytes.len() || ((bytes[i] == b'+' || bytes[i] == b'-') && i > start);
            if at_split {
                chunks.push(&s[start..i]);
                start = i;
            }
            i += 1;
        }
        for chunk in chunks {
            let (neg, body) = match chunk.as_bytes()[0] {
                b'+' => (false, &chunk[1..]),
                b'-' => (true, &chunk[1..]),
                _ => (false, chunk),
            };
            if body.is_empty() {
                return Err(Error::Parse(format!("dangling sign in {s:?}")));
            }
            let mut c = Coeff::one();
            let mut m = Monomial::one(n);
            for f in body.split('*') {
                if let Some(v) = f.strip_prefix('x') {
                    let (idx, e) = match v.split_once('^') {
                        Some((a, b)) => (a, b.parse::<u32>().map_err(|e| Error::Parse(format!("{f:?}: {e}")))?),
                        None => (v, 1),
                    };
                    let idx: usize = idx.parse().map_err(|e| Error::Parse(format!("{f:?}: {e}")))?;
                    if idx == 0 || idx > n {
                        return Err(Error::Parse(format!("variable {f:?} outside x1..x{n}")));
                    }
                    m.0[idx - 1] += e;
                } else {
                    c *= parse_rational(f)?;
                }
            }
            if neg {
                c = -c;
            }
            p.add_term(m, c);
        }
        Ok(p)
    }
}

fn parse_rational(s: &str) -> Result<Coeff> {
    let err = |e: &dyn fmt::Display| Error::Parse(format!("{s:?}: {e}"));
    match s.split_once('/') {
        Some((a, b)) => {
            let a: BigInt = a.parse().map_err(|e| err(&e))?;
            let b: BigInt = b.parse().map_err(|e| err(&e))?;
            if b.is_zero() {
                return Err(Error::Parse(format!("zero denominator in {s:?}")));
            }
            Ok(BigRational::new(a, b))
        }
        None => Ok(BigRational::from_integer(s.parse().map_err(|e| err(&e))?)),
    }
}

fn fmt_monomial(m: &Monomial) -> String {
    let mut parts = Vec::new();
    for (i, &e) in m.0.iter().enumerate() {
        match e {
            0 => {}
            1 => parts.push(format!("x{}", i + 1)),
            _ => parts.push(format!("x{}^{}", i + 1, e)),
        }
    }
    parts.join("*")
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        for (k, (m, c)) in self.sorted_terms().into_iter().enumerate() {
            let neg = c.is_negative();
            let a = c.abs();
            match (k, neg) {
                (0, true) => write!(f, "-")?,
                (0, false) => {}
                (_, true) => write!(f, " - ")?,
                (_, false) => write!(f, " + ")?,
            }
            let mono = fmt_monomial(m);
            if mono.is_empty() {
                write!(f, "{a}")?;
            } else if a.is_one() {
                write!(f, "{mono}")?;
            } else {
                write!(f, "{a}*{mono}")?;
            }
        }
        Ok(())
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), c.clone());
        }
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut p = self.clone();
        for (m, c) in &rhs.terms {
            p.add_term(m.clone(), -c.clone());
        }
        p
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        assert_eq!(self.n, rhs.n, "ambient mismatch");
        let mut p = Polynomial::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                p.add_term(a.mul(b), x * y);
            }
        }
        p
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        Polynomial { n: self.n, terms: self.terms.iter().map(|(m, c)| (m.clone(), -c.clone())).collect() }
    }
}

macro_rules! forward_owned {
    ($tr:ident, $f:ident) => {
        impl $tr for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                (&self).$f(&rhs)
            }
        }
        impl $tr<&Polynomial> for Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: &Polynomial) -> Polynomial {
                (&self).$f(rhs)
            }
        }
        impl $tr<Polynomial> for &Polynomial {
            type Output = Polynomial;
            fn $f(self, rhs: Polynomial) -> Polynomial {
                self.$f(&rhs)
            }
        }
    };
}
forward_owned!(Add, add);
forward_owned!(Sub, sub);
forward_owned!(Mul, mul);

impl Neg for Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        -&self
    }
}

/// `p_k = x1^k + ... + xn^k`.
pub fn power_sum(k: u32, n: usize) -> Result<Polynomial> {
    if k == 0 {
        return Err(Error::OutOfRange("power sum index must be positive".into()));
    }
    Ok(Polynomial::from_terms(
        n,
        (0..n).map(|i| {
            let mut m = Monomial::one(n);
            m.0[i] = k;
            (m, Coeff::one())
        }),
    ))
}

/// `e_r(x_S)` for a set `S` of 0-based variable indices; `e_0 = 1`.
pub fn elementary_symmetric(r: usize, subset: &[usize], n: usize) -> Result<Polynomial> {
    if r > subset.len() {
        return Err(Error::OutOfRange(format!("e_{r} on {} variables", subset.len())));
    }
    if let Some(&i) = subset.iter().find(|&&i| i >= n) {
        return Err(Error::OutOfRange(format!("variable index {i} >= {n}")));
    }
    let mut p = Polynomial::zero(n);
    for c in combinations(subset, r) {
        let mut m = Monomial::one(n);
        for i in c {
            m.0[i] += 1;
        }
        p.add_term(m, Coeff::one());
    }
    Ok(p)
}

/// `r`-element subsets of `items`, in lexicographic order of positions.
pub fn combinations(items: &[usize], r: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::with_capacity(r);
    fn rec(start: usize, items: &[usize], r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..items.len() {
            if items.len() - i < r - cur.len() {
                break;
            }
            cur.push(items[i]);
            rec(i + 1, items, r, cur, out);
            cur.pop();
        }
    }
    rec(0, items, r, &mut cur, &mut out);
    out
}

#[cfg(test)]
mod tests {
    use super::*;

    fn p(n: usize, s: &str) -> Polynomial {
        Polynomial::parse(n, s).unwrap()
    }

    #[test]
    fn parse_and_print() {
        let f = p(3, "x1^2*x2 - 3/2*x3");
        assert_eq!(f.to_string(), "x1^2*x2 - 3/2*x3");
        assert_eq!(p(3, "-x1 + 2 - 4/6*x2*x2").to_string(), "-2/3*x2^2 - x1 + 2");
        assert_eq!(p(2, "x1 - x1").to_string(), "0");
        assert!(Polynomial::parse(2, "x3").is_err());
        assert!(Polynomial::parse(2, "x1 +").is_err());
        assert!(Polynomial::parse(2, "1/0").is_err());
        assert!(Polynomial::parse(2, "").is_err());
    }

    #[test]
    fn permutation_action() {
        let f = p(2, "x1 - x2");
        let t = Permutation::new(vec![2, 1]).unwrap();
        assert_eq!(f.apply_permutation(&t).unwrap(), -&f);
        assert_eq!(f.apply_permutation(&Permutation::identity(2)).unwrap(), f);
        assert!(f.apply_permutation(&Permutation::identity(3)).is_err());
        // sigma . x1 = x_{sigma(1)}
        let s = Permutation::new(vec![3, 1, 2]).unwrap();
        assert_eq!(p(3, "x1").apply_permutation(&s).unwrap(), p(3, "x3"));
    }

    #[test]
    fn reynolds_examples() {
        for n in 2..=5 {
            let r = Polynomial::var(n, 0).reynolds();
            assert_eq!(r, power_sum(1, n).unwrap().scale(&rat(1, n as i64)));
        }
        for n in 3..=5 {
            let x1 = Polynomial::var(n, 0);
            let x2 = Polynomial::var(n, 1);
            let p1 = power_sum(1, n).unwrap();
            let p2 = power_sum(2, n).unwrap();
            let p3 = power_sum(3, n).unwrap();
            let f = (&(&x1 * &x1) - &(&x2 * &x2)) * &x1;
            let target = &p3.scale(&int(n as i64)) - &(&p2 * &p1);
            assert_proportional(&f.reynolds(), &target);
            let g = &(&p1 * &(&x1 - &x2)) * &x1;
            let target = &p1 * &(&(&p1 * &p1) - &p2.scale(&int(n as i64)));
            assert_proportional(&g.reynolds(), &target);
        }
    }

    fn assert_proportional(a: &Polynomial, b: &Polynomial) {
        assert!(!a.is_zero() && !b.is_zero());
        assert_eq!(a.normalized(), b.normalized(), "{a} vs {b}");
    }

    #[test]
    fn symmetric_builders() {
        assert_eq!(power_sum(1, 3).unwrap().to_string(), "x1 + x2 + x3");
        assert_eq!(elementary_symmetric(0, &[0, 1], 3).unwrap(), Polynomial::one(3));
        assert_eq!(elementary_symmetric(2, &[0, 1, 2], 3).unwrap().to_string(), "x1*x2 + x1*x3 + x2*x3");
        assert!(elementary_symmetric(3, &[0, 1], 3).is_err());
        assert!(power_sum(0, 3).is_err());
    }

    #[test]
    fn newton_identities() {
        // k e_k = sum_{i=1}^k (-1)^{i-1} e_{k-i} p_i
        for n in 1..=6 {
            let all: Vec<usize> = (0..n).collect();
            for k in 1..=n {
                let mut rhs = Polynomial::zero(n);
                for i in 1..=k {
                    let t = &elementary_symmetric(k - i, &all, n).unwrap() * &power_sum(i as u32, n).unwrap();
                    rhs = if i % 2 == 1 { &rhs + &t } else { &rhs - &t };
                }
                let lhs = elementary_symmetric(k, &all, n).unwrap().scale(&int(k as i64));
                assert_eq!(lhs, rhs);
            }
        }
    }

    #[test]
    fn apolar_examples() {
        assert_eq!(p(2, "x1").apolar_pair(&p(2, "x1*x2")).unwrap(), p(2, "x2"));
        let m = p(3, "x1^2*x3^3");
        assert_eq!(m.apolar_pair(&m).unwrap(), Polynomial::constant(3, int(12)));
        assert_eq!(p(2, "x1^2").apolar_pair(&p(2, "x1*x2")).unwrap(), Polynomial::zero(2));
    }

    #[test]
    fn homogenize_roundtrip() {
        let f = p(2, "x1^2 + 3*x2 - 1");
        let h = f.homogenize();
        assert!(h.is_homogeneous());
        assert_eq!(h.drop_last_var(false), f);
        assert_eq!(h.drop_last_var(true), p(2, "x1^2"));
        assert_eq!(f.top_form(), p(2, "x1^2"));
    }

    #[test]
    fn monomial_enumeration() {
        assert_eq!(monomials_of_degree(3, 2).len(), 6);
        assert_eq!(monomials_of_degree(4, 3).len(), 20);
        assert_eq!(monomials_of_degree(2, 0), vec![Monomial::one(2)]);
    }
}
