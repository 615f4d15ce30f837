//! Vandermonde, Specht and higher Specht polynomials, Specht ideals, and
//! explicit spanning sets for the irreducible summands of `P_d`, `d <= 3`.

use std::collections::{BTreeSet, HashSet};

use crate::combinat::{standard_tableaux, Partition, Permutation, Tableau};
use crate::ideals::Ideal;
use crate::poly::{power_sum, Coeff, Monomial, Polynomial};
use crate::{Error, Result};

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i - 1)
}

/// `prod_{j<k} (x_{i_j} - x_{i_k})` over 1-based indices.
pub fn vandermonde(seq: &[usize], n: usize) -> Result<Polynomial> {
    let mut seen = BTreeSet::new();
    for &i in seq {
        if i == 0 || i > n {
            return Err(Error::OutOfRange(format!("index {i} outside 1..={n}")));
        }
        if !seen.insert(i) {
            return Err(Error::OutOfRange(format!("repeated index {i}")));
        }
    }
    let mut p = Polynomial::one(n);
    for j in 0..seq.len() {
        for k in j + 1..seq.len() {
            p = &p * &(&x(n, seq[j]) - &x(n, seq[k]));
        }
    }
    Ok(p)
}

/// Product of the Vandermondes of the columns, each read top to bottom.
pub fn specht_polynomial(t: &Tableau) -> Polynomial {
    let n = t.size();
    t.columns().iter().fold(Polynomial::one(n), |acc, c| &acc * &vandermonde(c, n).expect("tableau entries"))
}

/// All permutations preserving each block (blocks given 1-based).
fn block_group(n: usize, blocks: &[Vec<usize>]) -> Vec<Permutation> {
    let mut group = vec![Permutation::identity(n)];
    for b in blocks {
        if b.len() < 2 {
            continue;
        }
        let support: Vec<usize> = b.iter().map(|i| i - 1).collect();
        let local = Permutation::all_on(n, &support);
        group = group.iter().flat_map(|g| local.iter().map(move |h| g.compose(h))).collect();
    }
    group
}

pub fn row_stabilizer(t: &Tableau) -> Vec<Permutation> {
    block_group(t.size(), t.rows())
}

pub fn column_stabilizer(t: &Tableau) -> Vec<Permutation> {
    block_group(t.size(), &t.columns())
}

/// `x_T^{i(S)} = prod_k x_{w(T)_k}^{i(S)_k}`.
pub fn index_monomial(t: &Tableau, s: &Tableau) -> Result<Monomial> {
    if t.shape() != s.shape() {
        return Err(Error::SizeMismatch(t.size(), s.size()));
    }
    let n = t.size();
    let mut e = vec![0u32; n];
    for (&v, &i) in t.word().iter().zip(&s.index()) {
        e[v - 1] = i as u32;
    }
    Ok(Monomial(e))
}

/// `F_T^S = sum_{sigma in C(T), tau in R(T)} sgn(sigma) sigma tau . x_T^{i(S)}`.
pub fn higher_specht(t: &Tableau, s: &Tableau) -> Result<Polynomial> {
    if t.shape() != s.shape() {
        return Err(Error::InvalidTableau(format!("shapes {} and {} differ", t.shape(), s.shape())));
    }
    if !s.is_standard() {
        return Err(Error::InvalidTableau(format!("{s} is not standard")));
    }
    let n = t.size();
    let m = index_monomial(t, s)?;
    let mut rowsum = Polynomial::zero(n);
    for tau in row_stabilizer(t) {
        rowsum.add_term(m.permute(&tau), Coeff::from_integer(1.into()));
    }
    let mut out = Polynomial::zero(n);
    for sigma in column_stabilizer(t) {
        let sg = Coeff::from_integer(sigma.sign().into());
        for (mono, c) in rowsum.terms() {
            out.add_term(mono.permute(&sigma), c * &sg);
        }
    }
    Ok(out)
}

/// The standard tableau of shape `lambda` whose index sum is smallest; the
/// first in enumeration order if several tie.
pub fn minimal_index_tableau(lambda: &Partition) -> Tableau {
    standard_tableaux(lambda).into_iter().min_by_key(Tableau::charge).expect("nonempty shape")
}

/// `{F_T^S : S, T standard of shape lambda}`.
pub fn coinvariant_isotypic_basis(lambda: &Partition) -> Vec<Polynomial> {
    let st = standard_tableaux(lambda);
    let mut out = Vec::with_capacity(st.len() * st.len());
    for t in &st {
        for s in &st {
            out.push(higher_specht(t, s).expect("standard pair"));
        }
    }
    out
}

/// Keep the first of each family of polynomials equal up to a scalar.
pub fn dedup_up_to_scalar(polys: impl IntoIterator<Item = Polynomial>) -> Vec<Polynomial> {
    let mut seen = HashSet::new();
    let mut out = Vec::new();
    for p in polys {
        if p.is_zero() {
            continue;
        }
        if seen.insert(p.normalized()) {
            out.push(p);
        }
    }
    out
}

/// Specht polynomials of every tableau of shape `lambda`, up to sign.
pub fn specht_generators(lambda: &Partition) -> Vec<Polynomial> {
    let n = lambda.size();
    // spe_T depends, up to sign, only on the set of columns of T.
    let mut seen_cols = BTreeSet::new();
    let mut gens = Vec::new();
    for perm in Permutation::all(n) {
        let entries = perm.one_line();
        let mut rows = Vec::new();
        let mut k = 0;
        for &len in lambda.parts() {
            rows.push(entries[k..k + len].to_vec());
            k += len;
        }
        let t = Tableau::new(rows).expect("bijective filling");
        let mut cols: Vec<Vec<usize>> = t
            .columns()
            .into_iter()
            .map(|mut c| {
                c.sort_unstable();
                c
            })
            .collect();
        cols.sort();
        if seen_cols.insert(cols) {
            gens.push(specht_polynomial(&t));
        }
    }
    dedup_up_to_scalar(gens)
}

pub fn specht_ideal(lambda: &Partition) -> Ideal {
    Ideal::new(lambda.size(), specht_generators(lambda)).expect("arity")
}

/// Ordered tuples of `k` distinct indices from `1..=n`.
pub fn distinct_tuples(n: usize, k: usize) -> Vec<Vec<usize>> {
    let mut out = Vec::new();
    let mut cur = Vec::new();
    fn rec(n: usize, k: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == k {
            out.push(cur.clone());
            return;
        }
        for i in 1..=n {
            if !cur.contains(&i) {
                cur.push(i);
                rec(n, k, cur, out);
                cur.pop();
            }
        }
    }
    rec(n, k, &mut cur, &mut out);
    out
}

/// Orbit of a pattern over all assignments of distinct indices, up to scalar.
pub fn pattern_span(n: usize, k: usize, f: impl Fn(&[usize]) -> Polynomial) -> Vec<Polynomial> {
    dedup_up_to_scalar(distinct_tuples(n, k).iter().map(|t| f(t)))
}

/// Summands of the decomposition of `P_d` into irreducibles, for `d <= 3`.
///
/// Each entry is `(d, tag, min_n)`: the summand exists for `n >= min_n`
/// and its irreducible type is given by [`summand_shape`]. Tags use distinct
/// indices `i, j, k, l, s, t`.
pub const SUMMAND_TAGS: &[(u32, &str, u32)] = &[
    (1, "p1", 3),
    (1, "x_i-x_j", 3),
    (2, "p1^2", 3),
    (2, "p2", 3),
    (2, "p1(x_i-x_j)", 3),
    (2, "x_i^2-x_j^2", 3),
    (2, "(x_i-x_j)(x_k-x_l)", 4),
    (3, "p1^3", 3),
    (3, "p1p2", 3),
    (3, "p3", 3),
    (3, "p1^2(x_i-x_j)", 3),
    (3, "p2(x_i-x_j)", 3),
    (3, "p1(x_i^2-x_j^2)", 3),
    (3, "x_i^3-x_j^3", 4),
    (3, "p1(x_i-x_j)(x_k-x_l)", 4),
    (3, "(x_i+x_j+x_k+x_l)(x_i-x_j)(x_k-x_l)", 5),
    (3, "(x_i-x_j)(x_i-x_k)(x_j-x_k)", 3),
    (3, "(x_i-x_j)(x_k-x_l)(x_s-x_t)", 6),
];

/// Tags valid in degree `d` for `n` variables.
pub fn summand_tags(d: u32, n: usize) -> Vec<&'static str> {
    SUMMAND_TAGS.iter().filter(|(dd, _, m)| *dd == d && n >= *m as usize).map(|(_, t, _)| *t).collect()
}

/// Irreducible type of a summand for given `n`.
pub fn summand_shape(tag: &str, n: usize) -> Result<Partition> {
    let parts = match tag {
        "p1" | "p1^2" | "p2" | "p1^3" | "p1p2" | "p3" => vec![n],
        "x_i-x_j" | "p1(x_i-x_j)" | "x_i^2-x_j^2" | "p1^2(x_i-x_j)" | "p2(x_i-x_j)" | "p1(x_i^2-x_j^2)"
        | "x_i^3-x_j^3" => vec![n - 1, 1],
        "(x_i-x_j)(x_k-x_l)" | "p1(x_i-x_j)(x_k-x_l)" | "(x_i+x_j+x_k+x_l)(x_i-x_j)(x_k-x_l)" => vec![n - 2, 2],
        "(x_i-x_j)(x_i-x_k)(x_j-x_k)" => {
            if n == 3 {
                vec![1, 1, 1]
            } else {
                vec![n - 2, 1, 1]
            }
        }
        "(x_i-x_j)(x_k-x_l)(x_s-x_t)" => vec![n - 3, 3],
        _ => return Err(Error::OutOfRange(format!("unknown tag {tag:?}"))),
    };
    Partition::new(parts)
}

/// Spanning set of one summand of `P_d`.
pub fn summand_component(d: u32, n: usize, tag: &str) -> Result<Vec<Polynomial>> {
    if !(1..=3).contains(&d) || n < 3 {
        return Err(Error::OutOfRange(format!("need 1 <= d <= 3 and n >= 3, got d={d}, n={n}")));
    }
    if !summand_tags(d, n).contains(&tag) {
        return Err(Error::OutOfRange(format!("tag {tag:?} is not a summand for d={d}, n={n}")));
    }
    let p = |k: u32| power_sum(k, n).expect("k >= 1");
    let xi = |i: usize| x(n, i);
    let diff = |i: usize, j: usize| &xi(i) - &xi(j);
    let pow_diff = |i: usize, j: usize, e: u32| &xi(i).pow(e) - &xi(j).pow(e);
    let sym = |f: Polynomial| vec![f];
    let out = match tag {
        "p1" => sym(p(1)),
        "p1^2" => sym(p(1).pow(2)),
        "p2" => sym(p(2)),
        "p1^3" => sym(p(1).pow(3)),
        "p1p2" => sym(&p(1) * &p(2)),
        "p3" => sym(p(3)),
        "x_i-x_j" => pattern_span(n, 2, |t| diff(t[0], t[1])),
        "p1(x_i-x_j)" => pattern_span(n, 2, |t| &p(1) * &diff(t[0], t[1])),
        "x_i^2-x_j^2" => pattern_span(n, 2, |t| pow_diff(t[0], t[1], 2)),
        "p1^2(x_i-x_j)" => pattern_span(n, 2, |t| &p(1).pow(2) * &diff(t[0], t[1])),
        "p2(x_i-x_j)" => pattern_span(n, 2, |t| &p(2) * &diff(t[0], t[1])),
        "p1(x_i^2-x_j^2)" => pattern_span(n, 2, |t| &p(1) * &pow_diff(t[0], t[1], 2)),
        "x_i^3-x_j^3" => pattern_span(n, 2, |t| pow_diff(t[0], t[1], 3)),
        "(x_i-x_j)(x_k-x_l)" => pattern_span(n, 4, |t| &diff(t[0], t[1]) * &diff(t[2], t[3])),
        "p1(x_i-x_j)(x_k-x_l)" => pattern_span(n, 4, |t| &p(1) * &(&diff(t[0], t[1]) * &diff(t[2], t[3]))),
        "(x_i+x_j+x_k+x_l)(x_i-x_j)(x_k-x_l)" => pattern_span(n, 4, |t| {
            let s = &(&xi(t[0]) + &xi(t[1])) + &(&xi(t[2]) + &xi(t[3]));
            &s * &(&diff(t[0], t[1]) * &diff(t[2], t[3]))
        }),
        "(x_i-x_j)(x_i-x_k)(x_j-x_k)" => pattern_span(n, 3, |t| vandermonde(t, n).expect("distinct")),
        "(x_i-x_j)(x_k-x_l)(x_s-x_t)" => {
            pattern_span(n, 6, |t| &(&diff(t[0], t[1]) * &diff(t[2], t[3])) * &diff(t[4], t[5]))
        }
        _ => unreachable!("validated above"),
    };
    Ok(out)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::combinat::partitions_of;
    use crate::linalg::{rank, MonomialIndex};
    use crate::poly::monomials_of_degree;

    fn t(s: &str) -> Tableau {
        s.parse().unwrap()
    }

    fn span_rank(polys: &[Polynomial], n: usize, d: u32) -> usize {
        let idx = MonomialIndex::new(monomials_of_degree(n, d));
        rank(&polys.iter().map(|f| idx.vector(f)).collect::<Vec<_>>())
    }

    #[test]
    fn vandermonde_examples() {
        assert_eq!(vandermonde(&[3], 4).unwrap(), Polynomial::one(4));
        let v = vandermonde(&[9, 2, 5], 9).unwrap();
        let expected = Polynomial::parse(9, "x9 - x2").unwrap()
            * Polynomial::parse(9, "x9 - x5").unwrap()
            * Polynomial::parse(9, "x2 - x5").unwrap();
        assert_eq!(v, expected);
        assert!(vandermonde(&[1, 1], 3).is_err());
        for l in 1..=5usize {
            let seq: Vec<usize> = (1..=l).collect();
            assert_eq!(vandermonde(&seq, 5).unwrap().degree(), Some((l * (l - 1) / 2) as u32));
        }
    }

    #[test]
    fn specht_of_worked_tableau() {
        let tab = t("9,3,6,4/2,1,8/5,7");
        let factors = ["x9 - x2", "x9 - x5", "x2 - x5", "x3 - x1", "x3 - x7", "x1 - x7", "x6 - x8"];
        let expected = factors.iter().fold(Polynomial::one(9), |acc, f| acc * Polynomial::parse(9, f).unwrap());
        assert_eq!(specht_polynomial(&tab), expected);
        assert_eq!(specht_polynomial(&t("1,2,3")), Polynomial::one(3));
    }

    #[test]
    fn specht_degree_is_d_min() {
        for n in 1..=6 {
            for l in partitions_of(n).unwrap() {
                for tab in standard_tableaux(&l).iter().take(3) {
                    assert_eq!(specht_polynomial(tab).degree(), Some(l.d_min() as u32));
                }
            }
        }
    }

    #[test]
    fn minimal_index_gives_specht() {
        for n in 2..=5 {
            for l in partitions_of(n).unwrap() {
                let s0 = minimal_index_tableau(&l);
                assert_eq!(s0.charge(), l.d_min());
                for tab in standard_tableaux(&l) {
                    let f = higher_specht(&tab, &s0).unwrap();
                    assert_eq!(f.normalized(), specht_polynomial(&tab).normalized());
                }
            }
        }
    }

    #[test]
    fn higher_specht_alternates_under_columns() {
        for n in 3..=5 {
            for l in partitions_of(n).unwrap() {
                for tab in standard_tableaux(&l) {
                    for s in standard_tableaux(&l) {
                        let f = higher_specht(&tab, &s).unwrap();
                        for c in tab.columns().iter().filter(|c| c.len() >= 2) {
                            let tau = Permutation::transposition(n, c[0] - 1, c[1] - 1);
                            assert_eq!(f.apply_permutation(&tau).unwrap(), -&f);
                        }
                    }
                }
            }
        }
        assert!(higher_specht(&t("1,2/3"), &t("1,2,3")).is_err());
        assert!(higher_specht(&t("1,2/3"), &t("2,1/3")).is_err());
    }

    #[test]
    fn coinvariant_counts() {
        for n in 1..=5usize {
            let total: usize = partitions_of(n).unwrap().iter().map(|l| coinvariant_isotypic_basis(l).len()).sum();
            assert_eq!(total, (1..=n).product::<usize>());
        }
        let alt = coinvariant_isotypic_basis(&Partition::column(3));
        assert_eq!(alt.len(), 1);
        assert_eq!(alt[0].normalized(), vandermonde(&[1, 2, 3], 3).unwrap().normalized());
    }

    #[test]
    fn specht_ideal_generators() {
        for n in 4..=6 {
            let gens = specht_generators(&Partition::new(vec![n - 2, 2]).unwrap());
            for g in &gens {
                assert_eq!(g.degree(), Some(2));
            }
            let pattern = pattern_span(n, 4, |t| {
                &(&x(n, t[0]) - &x(n, t[1])) * &(&x(n, t[2]) - &x(n, t[3]))
            });
            assert_eq!(gens.len(), pattern.len());
            // vanish on (b, a, ..., a)
            let mut pt = vec![Coeff::from_integer(3.into()); n];
            pt[0] = Coeff::from_integer((-2).into());
            for g in &gens {
                assert!(num_traits::Zero::is_zero(&g.evaluate(&pt).unwrap()));
            }
        }
        for n in 2..=5 {
            let i = specht_ideal(&Partition::new(vec![n - 1, 1]).unwrap());
            let diffs: Vec<Polynomial> = (2..=n).map(|j| &x(n, 1) - &x(n, j)).collect();
            assert_eq!(i, Ideal::new(n, diffs).unwrap());
        }
    }

    #[test]
    fn specht_module_dimensions() {
        for n in 1..=5 {
            for l in partitions_of(n).unwrap() {
                let gens = specht_generators(&l);
                assert_eq!(span_rank(&gens, n, l.d_min() as u32), standard_tableaux(&l).len());
            }
        }
        for n in 4..=6 {
            let gens = summand_component(2, n, "(x_i-x_j)(x_k-x_l)").unwrap();
            assert_eq!(span_rank(&gens, n, 2), n * (n - 3) / 2);
        }
    }

    #[test]
    fn summands_fill_p_d() {
        for n in 3..=6usize {
            for d in 1..=3u32 {
                let mut all = Vec::new();
                let mut expected = 0;
                for tag in summand_tags(d, n) {
                    let comp = summand_component(d, n, tag).unwrap();
                    let shape = summand_shape(tag, n).unwrap();
                    let dim = standard_tableaux(&shape).len();
                    assert_eq!(span_rank(&comp, n, d), dim, "n={n} d={d} {tag}");
                    expected += dim;
                    all.extend(comp);
                }
                let dim_pd = monomials_of_degree(n, d).len();
                assert_eq!(expected, dim_pd, "n={n} d={d}");
                assert_eq!(span_rank(&all, n, d), dim_pd, "n={n} d={d}");
            }
        }
        assert!(summand_component(2, 3, "(x_i-x_j)(x_k-x_l)").is_err());
        assert!(summand_component(3, 5, "(x_i-x_j)(x_k-x_l)(x_s-x_t)").is_err());
        assert!(summand_component(4, 5, "p1").is_err());
    }
}
