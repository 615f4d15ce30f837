//! The homogeneous symmetric ideals of colength at most `2n`, with their
//! quotient modules, and the polynomial relations used to analyse them.

use num_traits::ToPrimitive;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use serde::{Deserialize, Serialize};

use crate::combinat::{IsotypicDecomposition, Partition};
use crate::ideals::{maximal_power, Ideal};
use crate::poly::{int, power_sum, rat, Coeff, Polynomial};
use crate::specht::{pattern_span, specht_ideal, vandermonde};
use crate::{Error, Result};

/// One ideal of the classification at a fixed `n` (and parameter, if any).
#[derive(Clone, Debug)]
pub struct RowIdeal {
    /// Row label such as `"2(a)"`.
    pub row: String,
    pub n: usize,
    /// Exponent of the `m^d` summand for rows 1 and 2.
    pub d: Option<u32>,
    /// `[a:b]` for the one-parameter rows.
    pub param: Option<(Coeff, Coeff)>,
    pub ideal: Ideal,
    pub expected: IsotypicDecomposition,
    /// Dimension of the component of radical ideals with this module.
    pub smoothable_dim: usize,
    /// Whether the ideal is expected to be a smooth point.
    pub smooth: bool,
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct RowLabel {
    pub row: String,
    pub n: usize,
    pub d: Option<u32>,
    pub param: Option<String>,
}

impl RowIdeal {
    pub fn label(&self) -> RowLabel {
        RowLabel {
            row: self.row.clone(),
            n: self.n,
            d: self.d,
            param: self.param.as_ref().map(|(a, b)| format!("[{a}:{b}]")),
        }
    }

    pub fn colength(&self) -> usize {
        self.expected.dimension().to_usize().expect("small dimension")
    }
}

fn x(n: usize, i: usize) -> Polynomial {
    Polynomial::var(n, i - 1)
}

fn p(n: usize, k: u32) -> Polynomial {
    power_sum(k, n).expect("k >= 1")
}

fn diffs(n: usize) -> Vec<Polynomial> {
    pattern_span(n, 2, |t| &x(n, t[0]) - &x(n, t[1]))
}

fn p1_diffs(n: usize) -> Vec<Polynomial> {
    pattern_span(n, 2, |t| &p(n, 1) * &(&x(n, t[0]) - &x(n, t[1])))
}

fn square_diffs(n: usize) -> Vec<Polynomial> {
    pattern_span(n, 2, |t| &x(n, t[0]).pow(2) - &x(n, t[1]).pow(2))
}

/// `(x_i - x_j)(x_k - x_l)` over distinct indices; empty for `n < 4`.
fn double_diffs(n: usize) -> Vec<Polynomial> {
    if n < 4 {
        return Vec::new();
    }
    pattern_span(n, 4, |t| &(&x(n, t[0]) - &x(n, t[1])) * &(&x(n, t[2]) - &x(n, t[3])))
}

/// Degree-two part of the ideal `(x_i - x_j)`: `x_k (x_i - x_j)`.
fn diffs_times_vars(n: usize) -> Vec<Polynomial> {
    let mut out = Vec::new();
    for d in diffs(n) {
        for k in 1..=n {
            out.push(&d * &x(n, k));
        }
    }
    out
}

fn ideal(n: usize, parts: Vec<Vec<Polynomial>>, m_power: Option<u32>) -> Ideal {
    let gens: Vec<Polynomial> = parts.into_iter().flatten().collect();
    let base = Ideal::new(n, gens).expect("arity");
    match m_power {
        Some(d) => base.sum(&maximal_power(n, d).expect("d >= 1")),
        None => base,
    }
}

fn decomposition(n: usize, pairs: &[(Vec<usize>, usize)]) -> IsotypicDecomposition {
    let mut d = IsotypicDecomposition::new(n);
    for (parts, m) in pairs {
        d.add(&Partition::new(parts.clone()).expect("valid shape"), *m);
    }
    d
}

/// `k S^(n) + l S^(n-1,1)`.
fn trivial_and_standard(n: usize, k: usize, l: usize) -> IsotypicDecomposition {
    decomposition(n, &[(vec![n], k), (vec![n - 1, 1], l)])
}

/// `a p_1^2 + b p_2` together with the fixed generators of rows 5 and 11.
fn row5_like(n: usize, a: &Coeff, b: &Coeff, with_double_diffs: bool) -> Ideal {
    let q = &p(n, 1).pow(2).scale(a) + &p(n, 2).scale(b);
    let mut parts = vec![vec![q], p1_diffs(n), square_diffs(n)];
    if with_double_diffs {
        parts.push(double_diffs(n));
    }
    ideal(n, parts, Some(3))
}

fn row7c(n: usize, a: &Coeff, b: &Coeff) -> Ideal {
    let mixed = pattern_span(n, 2, |t| {
        let d = &x(n, t[0]) - &x(n, t[1]);
        let s = &x(n, t[0]).pow(2) - &x(n, t[1]).pow(2);
        &(&p(n, 1) * &d).scale(a) + &s.scale(b)
    });
    ideal(n, vec![vec![p(n, 1).pow(2), p(n, 2)], mixed, double_diffs(n)], Some(3))
}

/// Rows 1 and 2 for a given colength `r`.
pub fn row1(n: usize, r: u32) -> Result<Ideal> {
    if r == 0 {
        return Err(Error::OutOfRange("row 1 needs r >= 1".into()));
    }
    Ok(ideal(n, vec![diffs(n)], Some(r)))
}

/// `(x_i - x_j)_{>=2} + m^d`.
pub fn row2a(n: usize, d: u32) -> Result<Ideal> {
    if d < 2 {
        return Err(Error::OutOfRange("row 2(a) needs d >= 2".into()));
    }
    Ok(ideal(n, vec![diffs_times_vars(n)], Some(d)))
}

/// `(p_1(x_i - x_j), x_i^2 - x_j^2, (x_i - x_j)(x_k - x_l)) + m^d`.
pub fn row2b(n: usize, d: u32) -> Result<Ideal> {
    if d < 3 {
        return Err(Error::OutOfRange("row 2(b) needs d >= 3".into()));
    }
    Ok(ideal(n, vec![p1_diffs(n), square_diffs(n), double_diffs(n)], Some(d)))
}

pub fn row6(n: usize) -> Ideal {
    ideal(n, vec![vec![p(n, 1), p(n, 2)], double_diffs(n)], Some(3))
}

pub fn row7a(n: usize) -> Ideal {
    ideal(n, vec![vec![p(n, 1)], double_diffs(n)], Some(3))
}

pub fn row7c_at(n: usize, a: &Coeff, b: &Coeff) -> Ideal {
    row7c(n, a, b)
}

/// The two torus-fixed parameters of a one-parameter row; the singular one first
/// for rows 5 and 7(c).
pub fn fixed_parameters(row: &str, n: usize) -> Vec<(Coeff, Coeff)> {
    let nn = int(n as i64);
    match row {
        "5" | "11" => vec![(int(-1), nn), (int(1), int(0))],
        "7(c)" => vec![(int(1), int(0)), (int(-2), nn)],
        _ => Vec::new(),
    }
}

/// `count` pseudo-random parameters `[a:b]`, both coordinates nonzero rationals
/// with numerator and denominator of absolute value at most 7.
pub fn random_parameters(seed: u64, count: usize) -> Vec<(Coeff, Coeff)> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let draw = |rng: &mut ChaCha8Rng| {
        let num = rng.gen_range(1..=7i64) * if rng.gen_bool(0.5) { 1 } else { -1 };
        rat(num, rng.gen_range(1..=7))
    };
    (0..count).map(|_| (draw(&mut rng), draw(&mut rng))).collect()
}

fn same_point(a: &(Coeff, Coeff), b: &(Coeff, Coeff)) -> bool {
    &a.0 * &b.1 == &a.1 * &b.0
}

/// Every row ideal applicable at `n` (3 to 5), one-parameter rows evaluated at
/// their torus-fixed points and at `extra_params`.
pub fn table1_rows(n: usize, extra_params: &[(Coeff, Coeff)]) -> Result<Vec<RowIdeal>> {
    if !(3..=5).contains(&n) {
        return Err(Error::OutOfRange(format!("the classification is tabulated for 3 <= n <= 5, got {n}")));
    }
    let mut rows = Vec::new();
    let mut push = |row: &str, d: Option<u32>, param: Option<(Coeff, Coeff)>, ideal: Ideal, expected, smoothable_dim, smooth| {
        rows.push(RowIdeal { row: row.into(), n, d, param, ideal, expected, smoothable_dim, smooth });
    };
    for r in 1..=2 * n as u32 {
        push("1", Some(r), None, row1(n, r)?, trivial_and_standard(n, r as usize, 0), r as usize, true);
    }
    for r in n + 3..=2 * n {
        let k = r - n + 1;
        let da = (r - n + 1) as u32;
        push("2(a)", Some(da), None, row2a(n, da)?, trivial_and_standard(n, k, 1), k + 1, false);
        let db = (r - n) as u32;
        push("2(b)", Some(db), None, row2b(n, db)?, trivial_and_standard(n, k, 1), k + 1, true);
    }
    let p1m2 = ideal(n, vec![vec![p(n, 1)]], Some(2));
    push("3", None, None, p1m2, trivial_and_standard(n, 1, 1), 2, true);
    push("4(a)", None, None, maximal_power(n, 2)?, trivial_and_standard(n, 2, 1), 3, false);
    let r4b = ideal(n, vec![vec![p(n, 1)], square_diffs(n), double_diffs(n)], Some(3));
    push("4(b)", None, None, r4b, trivial_and_standard(n, 2, 1), 3, true);

    let with_extra = |row: &str| {
        let fixed = fixed_parameters(row, n);
        let mut all = fixed.clone();
        for q in extra_params {
            if !all.iter().any(|f| same_point(f, q)) {
                all.push(q.clone());
            }
        }
        (fixed, all)
    };
    let (fixed5, params5) = with_extra("5");
    for q in params5 {
        let smooth = !same_point(&q, &fixed5[0]);
        let i = row5_like(n, &q.0, &q.1, true);
        push("5", None, Some(q), i, trivial_and_standard(n, 3, 1), 4, smooth);
    }
    push("6", None, None, row6(n), trivial_and_standard(n, 1, 2), 1, true);
    push("7(a)", None, None, row7a(n), trivial_and_standard(n, 2, 2), 4, true);
    if n >= 4 {
        let r7b = ideal(n, vec![vec![p(n, 1), p(n, 2)], double_diffs(n)], Some(4));
        push("7(b)", None, None, r7b, trivial_and_standard(n, 2, 2), 4, true);
    }
    let (fixed7, params7) = with_extra("7(c)");
    for q in params7 {
        let smooth = !same_point(&q, &fixed7[0]);
        let i = row7c(n, &q.0, &q.1);
        push("7(c)", None, Some(q), i, trivial_and_standard(n, 2, 2), 4, smooth);
    }
    match n {
        5 => {
            let i = ideal(5, vec![vec![p(5, 1), p(5, 2)], square_diffs(5)], Some(3));
            push("8", None, None, i, decomposition(5, &[(vec![5], 1), (vec![4, 1], 1), (vec![3, 2], 1)]), 2, true);
        }
        4 => {
            let m22 = |k| decomposition(4, &[(vec![4], k), (vec![3, 1], 1), (vec![2, 2], 1)]);
            let i9 = ideal(4, vec![vec![p(4, 1), p(4, 2)], square_diffs(4)], Some(3));
            push("9", None, None, i9, m22(1), 2, true);
            let i10a = ideal(4, vec![vec![p(4, 1)], square_diffs(4)], Some(3));
            push("10(a)", None, None, i10a, m22(2), 3, true);
            let i10b = ideal(4, vec![vec![p(4, 1).pow(2), p(4, 2)], p1_diffs(4), square_diffs(4)], Some(3));
            push("10(b)", None, None, i10b, m22(2), 3, true);
            let (_, params11) = with_extra("11");
            for q in params11 {
                let i = row5_like(4, &q.0, &q.1, false);
                push("11", None, Some(q), i, m22(3), 4, true);
            }
        }
        3 => {
            let i12 = Ideal::new(3, vec![p(3, 1), p(3, 2), p(3, 3)])?;
            push("12", None, None, i12, decomposition(3, &[(vec![3], 1), (vec![2, 1], 2), (vec![1, 1, 1], 1)]), 3, true);
            let i13 = Ideal::new(3, vec![p(3, 1), p(3, 2), vandermonde(&[1, 2, 3], 3)?])?;
            push("13", None, None, i13, decomposition(3, &[(vec![3], 2), (vec![2, 1], 2)]), 4, true);
        }
        _ => {}
    }
    Ok(rows)
}

/// The ideal of polynomials vanishing on every point with at least `n-1`
/// equal coordinates: the Specht ideal of `(n-2,2)` for `n >= 4`, and the
/// Vandermonde ideal for `n = 3`.
pub fn two_equal_ideal(n: usize) -> Result<Ideal> {
    match n {
        3 => Ideal::new(3, vec![vandermonde(&[1, 2, 3], 3)?]),
        n if n >= 4 => Ok(specht_ideal(&Partition::new(vec![n - 2, 2])?)),
        _ => Err(Error::OutOfRange(format!("need n >= 3, got {n}"))),
    }
}

/// `n(n-1)(x_1^3 - x_2^3) - (n^2-3n+3) p_2 (x_1-x_2) - (2n-3) p_1 (x_1^2-x_2^2)
///  + n(n-2) x_n p_1 (x_1-x_2)`.
pub fn relation_f(n: usize) -> Polynomial {
    let ni = n as i64;
    let d = &x(n, 1) - &x(n, 2);
    let d2 = &x(n, 1).pow(2) - &x(n, 2).pow(2);
    let d3 = &x(n, 1).pow(3) - &x(n, 2).pow(3);
    let terms = [
        d3.scale(&int(ni * (ni - 1))),
        (&p(n, 2) * &d).scale(&int(-(ni * ni - 3 * ni + 3))),
        (&p(n, 1) * &d2).scale(&int(-(2 * ni - 3))),
        (&(&x(n, n) * &p(n, 1)) * &d).scale(&int(ni * (ni - 2))),
    ];
    terms.iter().fold(Polynomial::zero(n), |a, b| &a + b)
}

/// `(n-2) p_2 (x_1-x_2) - n x_n p_1 (x_1-x_2) + n x_n (x_1^2-x_2^2)
///  - n(n-2)(x_1-x_2)(x_1^2-x_n^2) + (n-2)(x_1-x_2) sum_{i=2}^n (x_1^2-x_i^2)`.
pub fn relation_g(n: usize) -> Polynomial {
    let ni = n as i64;
    let d = &x(n, 1) - &x(n, 2);
    let d2 = &x(n, 1).pow(2) - &x(n, 2).pow(2);
    let sum = (2..=n).fold(Polynomial::zero(n), |a, i| &a + &(&x(n, 1).pow(2) - &x(n, i).pow(2)));
    let terms = [
        (&p(n, 2) * &d).scale(&int(ni - 2)),
        (&(&x(n, n) * &p(n, 1)) * &d).scale(&int(-ni)),
        (&x(n, n) * &d2).scale(&int(ni)),
        (&d * &(&x(n, 1).pow(2) - &x(n, n).pow(2))).scale(&int(-ni * (ni - 2))),
        (&d * &sum).scale(&int(ni - 2)),
    ];
    terms.iter().fold(Polynomial::zero(n), |a, b| &a + b)
}

/// `x_1 x_2 (x_1-x_2) p_1 - (x_1^2-x_2^2) p_2 + (x_1-x_2) p_3`.
pub fn row6_relation(n: usize) -> Polynomial {
    let d = &x(n, 1) - &x(n, 2);
    let d2 = &x(n, 1).pow(2) - &x(n, 2).pow(2);
    let a = &(&(&x(n, 1) * &x(n, 2)) * &d) * &p(n, 1);
    let b = &d2 * &p(n, 2);
    let c = &d * &p(n, 3);
    &(&a - &b) + &c
}

/// The polynomial used for row 7(a); it coincides with [`relation_f`].
pub fn row7a_relation(n: usize) -> Polynomial {
    relation_f(n)
}

/// `(x_1-x_2)(x_1-x_3)(x_2-x_3) = (x_3-x_1)(x_1-x_2)(x_3-x_4) + (x_1-x_2)(x_1-x_3)(x_2-x_4)`.
pub fn vandermonde_identity_residual(n: usize) -> Result<Polynomial> {
    if n < 4 {
        return Err(Error::OutOfRange(format!("need n >= 4, got {n}")));
    }
    let v = vandermonde(&[1, 2, 3], n)?;
    let dd = |a, b| &x(n, a) - &x(n, b);
    let rhs = &(&dd(3, 1) * &(&dd(1, 2) * &dd(3, 4))) + &(&dd(1, 2) * &(&dd(1, 3) * &dd(2, 4)));
    Ok(&v - &rhs)
}

#[cfg(test)]
mod tests {
    use super::*;
    use num_traits::Zero;

    #[test]
    fn relations_vanish_on_two_value_points() {
        // Oracle: evaluate at (b,a,...,a) and (a,b,a,...,a) and permutations
        // with the odd coordinate elsewhere.
        for n in 3..=6 {
            for rel in [relation_f(n), relation_g(n), row6_relation(n)] {
                for pos in 0..n {
                    for (a, b) in [(2, 7), (-3, 5), (1, -4)] {
                        let mut pt = vec![int(a); n];
                        pt[pos] = int(b);
                        assert!(rel.evaluate(&pt).unwrap().is_zero(), "n={n}");
                    }
                }
            }
        }
    }

    #[test]
    fn relations_lie_in_two_equal_ideal() {
        for n in 3..=5 {
            let i = two_equal_ideal(n).unwrap();
            assert!(i.contains(&relation_f(n)));
            assert!(i.contains(&relation_g(n)));
            assert!(i.contains(&row6_relation(n)));
        }
        assert!(vandermonde_identity_residual(4).unwrap().is_zero());
    }

    #[test]
    fn rows_at_n3_have_expected_colength() {
        for row in table1_rows(3, &[]).unwrap() {
            assert_eq!(row.ideal.colength().finite(), Some(row.colength()), "{:?}", row.label());
            assert!(row.colength() <= 6);
        }
    }

    #[test]
    fn parameter_deduplication() {
        let rows = table1_rows(4, &[(int(-2), int(8))]).unwrap();
        assert_eq!(rows.iter().filter(|r| r.row == "5").count(), 2);
        assert_eq!(rows.iter().filter(|r| r.row == "7(c)").count(), 3);
    }
}
