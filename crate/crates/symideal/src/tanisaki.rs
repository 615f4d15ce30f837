//! Tanisaki ideals `I_λ`, the monomial approximation `Ĩ_μ`, and the chain of
//! inclusions between them.

use std::fmt;
use std::str::FromStr;

use num_traits::Zero;
use serde::{Deserialize, Serialize};

use crate::combinat::{partitions_of, Partition};
use crate::equivariant::{orthogonal_in, perp_of_m_times};
use crate::ideals::Ideal;
use crate::linalg::{EchelonBasis, MonomialIndex};
use crate::poly::{combinations, elementary_symmetric, monomials_of_degree, power_sum, Coeff, Monomial, Polynomial};
use crate::specht::specht_generators;
use crate::{Error, Result};

/// Which generating set to use for `I_λ`.
#[derive(Clone, Copy, Debug, Default, PartialEq, Eq, Hash, Serialize, Deserialize)]
#[serde(rename_all = "snake_case")]
pub enum TanisakiMode {
    /// `e_r(x_S)` for all `S` and `|S| >= r >= r_λ(|S|)`.
    #[default]
    SubsetElementary,
    /// `e_r` for `1 <= r <= len(λ)` plus `e_{r_λ(|S|)}(x_S)` for `|S| >= n - λ_1 + 1`.
    Reduced,
    /// Polynomials annihilating the Specht module `S^λ ⊂ P_{d(λ)}` under the
    /// apolar pairing, in degrees up to `d(λ) + 1`.
    Apolar,
}

impl TanisakiMode {
    pub const ALL: [TanisakiMode; 3] = [TanisakiMode::SubsetElementary, TanisakiMode::Reduced, TanisakiMode::Apolar];

    pub fn tag(self) -> &'static str {
        match self {
            TanisakiMode::SubsetElementary => "subset_elementary",
            TanisakiMode::Reduced => "reduced",
            TanisakiMode::Apolar => "apolar",
        }
    }
}

impl fmt::Display for TanisakiMode {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.tag())
    }
}

impl FromStr for TanisakiMode {
    type Err = Error;

    fn from_str(s: &str) -> Result<Self> {
        Self::ALL
            .into_iter()
            .find(|m| m.tag() == s)
            .ok_or_else(|| Error::Parse(format!("unknown mode {s:?}; expected subset_elementary, reduced or apolar")))
    }
}

#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct TanisakiSpec {
    pub lambda: Partition,
    pub mode: TanisakiMode,
}

impl TanisakiSpec {
    pub fn ideal(&self) -> Ideal {
        tanisaki_ideal(&self.lambda, self.mode)
    }
}

fn subsets(n: usize) -> impl Iterator<Item = Vec<usize>> {
    (1..=n).flat_map(move |s| combinations(&(0..n).collect::<Vec<_>>(), s))
}

fn subset_elementary(lambda: &Partition) -> Vec<Polynomial> {
    let n = lambda.size();
    let mut out = Vec::new();
    for s in subsets(n) {
        let lo = lambda.r_lambda(s.len()).expect("1 <= |S| <= n");
        for r in lo..=s.len() {
            out.push(elementary_symmetric(r, &s, n).expect("r <= |S|"));
        }
    }
    out
}

fn reduced(lambda: &Partition) -> Vec<Polynomial> {
    let n = lambda.size();
    let all: Vec<usize> = (0..n).collect();
    let mut out: Vec<Polynomial> =
        (1..=lambda.len()).map(|r| elementary_symmetric(r, &all, n).expect("r <= n")).collect();
    for s in subsets(n).filter(|s| s.len() > n - lambda.part(0)) {
        let r = lambda.r_lambda(s.len()).expect("1 <= |S| <= n");
        out.push(elementary_symmetric(r, &s, n).expect("r <= |S|"));
    }
    out
}

/// Minimal generators of the annihilator of `S^λ`, computed from its inverse
/// system: `W_{d(λ)} = S^λ` and `W_{k-1}` spanned by first derivatives of `W_k`.
fn apolar(lambda: &Partition) -> Vec<Polynomial> {
    let n = lambda.size();
    let top = lambda.d_min() as u32;
    let mut w: Vec<Vec<Polynomial>> = vec![Vec::new(); top as usize + 2];
    w[top as usize] = specht_generators(lambda);
    for k in (0..top).rev() {
        let idx = MonomialIndex::new(monomials_of_degree(n, k));
        let mut basis = EchelonBasis::new();
        for f in &w[k as usize + 1] {
            for i in 0..n {
                basis.insert(idx.vector(&f.derivative(i)));
            }
        }
        w[k as usize] = basis.rows().map(|r| idx.polynomial(n, r)).collect();
    }
    let mut out = Vec::new();
    for d in 1..=top + 1 {
        let u = perp_of_m_times(n, d, &w[d as usize - 1]);
        out.extend(orthogonal_in(n, d, &u, &w[d as usize]));
    }
    out
}

/// Generators of `I_λ` in the given mode.
pub fn tanisaki_generators(lambda: &Partition, mode: TanisakiMode) -> Vec<Polynomial> {
    match mode {
        TanisakiMode::SubsetElementary => subset_elementary(lambda),
        TanisakiMode::Reduced => reduced(lambda),
        TanisakiMode::Apolar => apolar(lambda),
    }
}

pub fn tanisaki_ideal(lambda: &Partition, mode: TanisakiMode) -> Ideal {
    Ideal::new(lambda.size(), tanisaki_generators(lambda, mode)).expect("arity")
}

/// All square-free monomials of degree `k`, each raised to the power `e`.
fn squarefree_orbit(n: usize, k: usize, e: u32) -> Vec<Polynomial> {
    combinations(&(0..n).collect::<Vec<_>>(), k)
        .into_iter()
        .map(|s| {
            let mut exps = vec![0; n];
            for i in s {
                exps[i] = e;
            }
            Polynomial::monomial(Monomial(exps))
        })
        .collect()
}

/// `(p_1, x_i^2, S_n·(x_1⋯x_{λ_2+1}))` for a two-row shape, or `(p_1, x_i^2)`
/// when `λ_1 <= λ_2 + 1`.
pub fn two_row_presentation(lambda: &Partition) -> Result<Ideal> {
    if lambda.len() != 2 {
        return Err(Error::InvalidPartition(format!("{lambda} does not have exactly two rows")));
    }
    let n = lambda.size();
    let mut gens = vec![power_sum(1, n)?];
    gens.extend(squarefree_orbit(n, 1, 2));
    if lambda.part(0) >= lambda.part(1) + 2 {
        gens.extend(squarefree_orbit(n, lambda.part(1) + 1, 1));
    }
    Ideal::new(n, gens)
}

/// `Ĩ_μ = (p_1, …, p_{m-1}, S_n·x_1^m, S_n·(x_1⋯x_{R_k(μ)})^k : 1 <= k <= m-1)`.
pub fn tilde_ideal(mu: &Partition) -> Ideal {
    let n = mu.size();
    let m = mu.len();
    let mut gens: Vec<Polynomial> = (1..m).map(|k| power_sum(k as u32, n).expect("k >= 1")).collect();
    gens.extend(squarefree_orbit(n, 1, m as u32));
    for k in 1..m {
        gens.extend(squarefree_orbit(n, mu.r_k(k).expect("k <= m"), k as u32));
    }
    Ideal::new(n, gens).expect("arity")
}

/// `(p_1, …, p_n, spe_T : sh(T) does not dominate μ)`.
pub fn specht_lower_ideal(mu: &Partition) -> Ideal {
    let n = mu.size();
    let mut gens: Vec<Polynomial> = (1..=n).map(|k| power_sum(k as u32, n).expect("k >= 1")).collect();
    for lambda in partitions_of(n).expect("n >= 1") {
        if !lambda.dominates(mu).expect("same size") {
            gens.extend(specht_generators(&lambda));
        }
    }
    Ideal::new(n, gens).expect("arity")
}

/// Result of checking `lower ⊆ Ĩ_μ ⊆ I_μ` generator by generator.
#[derive(Clone, Debug, PartialEq, Eq, Serialize, Deserialize)]
pub struct InclusionChainReport {
    pub mu: Partition,
    /// Generators of the lower ideal not in `Ĩ_μ`.
    pub first_failures: Vec<String>,
    /// Generators of `Ĩ_μ` not in `I_μ`.
    pub second_failures: Vec<String>,
    /// A generator of `Ĩ_μ` outside the lower ideal, if any.
    pub first_strict_witness: Option<String>,
    /// A generator of `I_μ` outside `Ĩ_μ`, if any.
    pub second_strict_witness: Option<String>,
}

impl InclusionChainReport {
    pub fn holds(&self) -> bool {
        self.first_failures.is_empty() && self.second_failures.is_empty()
    }
}

fn outside(gens: &[Polynomial], ideal: &Ideal) -> Vec<String> {
    let red = ideal.groebner().reducer();
    gens.iter().filter(|g| !red.normal_form(g).is_zero()).map(ToString::to_string).collect()
}

pub fn inclusion_chain_check(mu: &Partition) -> InclusionChainReport {
    let lower = specht_lower_ideal(mu);
    let tilde = tilde_ideal(mu);
    let full = tanisaki_ideal(mu, TanisakiMode::Reduced);
    InclusionChainReport {
        mu: mu.clone(),
        first_failures: outside(lower.generators(), &tilde),
        second_failures: outside(tilde.generators(), &full),
        first_strict_witness: outside(tilde.generators(), &lower).into_iter().next(),
        second_strict_witness: outside(full.generators(), &tilde).into_iter().next(),
    }
}

/// A point with `λ_i` coordinates equal to the `i`-th of `len(λ)` distinct
/// values, shifted so that the coordinates sum to zero.
pub fn orbit_point(lambda: &Partition) -> Vec<Coeff> {
    let n = lambda.size();
    let mut pt = Vec::with_capacity(n);
    for (i, &part) in lambda.parts().iter().enumerate() {
        pt.extend(std::iter::repeat_n(Coeff::from_integer((i as i64).into()), part));
    }
    let mean = pt.iter().fold(Coeff::zero(), |a, b| a + b) / Coeff::from_integer((n as i64).into());
    pt.into_iter().map(|x| x - &mean).collect()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::equivariant::decompose_quotient;
    use crate::combinat::kostka_decomposition;
    use crate::ideals::maximal_power;
    use num_bigint::BigUint;

    fn part(v: &[usize]) -> Partition {
        Partition::new(v.to_vec()).unwrap()
    }

    fn power_sums(n: usize) -> Ideal {
        Ideal::new(n, (1..=n).map(|k| power_sum(k as u32, n).unwrap()).collect()).unwrap()
    }

    #[test]
    fn extreme_shapes() {
        for n in 2..=4 {
            for mode in TanisakiMode::ALL {
                assert_eq!(tanisaki_ideal(&Partition::row(n), mode), maximal_power(n, 1).unwrap());
                assert_eq!(tanisaki_ideal(&Partition::column(n), mode), power_sums(n));
            }
        }
    }

    #[test]
    fn hook_shape_is_p1_plus_m_squared() {
        for n in 3..=5 {
            let expected = maximal_power(n, 2).unwrap().with_generators([power_sum(1, n).unwrap()]);
            for mode in TanisakiMode::ALL {
                assert_eq!(tanisaki_ideal(&part(&[n - 1, 1]), mode), expected);
            }
        }
    }

    #[test]
    fn colength_and_module_n4() {
        for lambda in partitions_of(4).unwrap() {
            let i = tanisaki_ideal(&lambda, TanisakiMode::SubsetElementary);
            assert_eq!(BigUint::from(i.colength().finite().unwrap()), lambda.multinomial());
            assert_eq!(decompose_quotient(&i).unwrap().total, kostka_decomposition(&lambda));
        }
    }

    #[test]
    fn two_row_matches() {
        for v in [[3, 1], [2, 2], [4, 1], [3, 2], [4, 2], [3, 3]] {
            let l = part(&v);
            assert_eq!(two_row_presentation(&l).unwrap(), tanisaki_ideal(&l, TanisakiMode::Reduced), "{l}");
        }
        assert!(two_row_presentation(&part(&[2, 1, 1])).is_err());
        assert_eq!(two_row_presentation(&part(&[4, 2])).unwrap().colength().finite(), Some(15));
    }

    #[test]
    fn tilde_of_column() {
        let t = tilde_ideal(&Partition::column(4));
        for k in 1..4 {
            assert!(t.contains(&power_sum(k, 4).unwrap()));
        }
        assert!(t.contains(&Polynomial::var(4, 2).pow(4)));
    }

    #[test]
    fn chain_at_21() {
        let r = inclusion_chain_check(&part(&[2, 1]));
        assert!(r.holds());
        assert!(r.first_strict_witness.is_some());
    }

    #[test]
    fn mode_names_round_trip() {
        for m in TanisakiMode::ALL {
            assert_eq!(m.tag().parse::<TanisakiMode>().unwrap(), m);
        }
        assert!("bogus".parse::<TanisakiMode>().is_err());
    }

    #[test]
    fn orbit_point_is_centered() {
        let p = orbit_point(&part(&[2, 1]));
        assert_eq!(p.iter().fold(Coeff::zero(), |a, b| a + b), Coeff::zero());
        assert_eq!(p[0], p[1]);
        assert_ne!(p[1], p[2]);
    }
}
