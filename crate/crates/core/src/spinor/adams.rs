//! Adams operations on graded modules: the eigenmodule form `ψ̄ᵏ` built
//! from the cyclic permutation, and the character form `ψᵏ` built from the
//! isotypic decomposition under `S_k`.

use num_traits::{One, Zero};
use serde::Serialize;

use super::operator::Operator;
use super::symmetric::{character, cycle_type, irrep_dim, partitions, permutations_with_words};
use super::tensor::TensorPower;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rings::{Cyclotomic, Rational, Ring};

/// Largest `k` for which the full symmetric group is enumerated.
pub const MAX_CHARACTER_K: usize = 7;

/// `Σ_j [F_{ω^j}]·ω^j`, recorded by the even and odd dimensions of each
/// eigenmodule `F_{ω^j}`, `0 ≤ j < k`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct VirtualCyclotomicModule {
    pub order: u32,
    pub even: Vec<i64>,
    pub odd: Vec<i64>,
}

impl VirtualCyclotomicModule {
    /// Graded virtual dimensions `d_j = dim F_{ω^j,0} - dim F_{ω^j,1}`.
    pub fn graded(&self) -> Vec<i64> {
        self.even.iter().zip(&self.odd).map(|(a, b)| a - b).collect()
    }

    pub fn total(&self) -> i64 {
        self.even.iter().chain(&self.odd).sum()
    }

    /// `Σ_j d_j ω^j` in `Ω_k`.
    pub fn value(&self) -> Cyclotomic {
        weighted_sum(self.order, self.graded().iter().map(|&d| Rational::from_integer(d.into())))
    }
}

fn weighted_sum(order: u32, coeffs: impl Iterator<Item = Rational>) -> Cyclotomic {
    let zero = Rational::zero();
    coeffs.enumerate().fold(Cyclotomic::constant(order, zero.clone()), |acc, (j, c)| {
        acc.plus(&Cyclotomic::root_power(order, j as i64, &zero).scale(&c))
    })
}

fn to_cyclotomic(op: &Operator, order: u32) -> Operator<Cyclotomic> {
    op.map(|c| Cyclotomic::constant(order, c.clone()))
}

fn descend_integer(c: &Cyclotomic) -> Result<i64> {
    let r = c.descend()?;
    if !r.is_integer() {
        return Err(Error::RelationFailure(format!("non-integral dimension {r}")));
    }
    i64::try_from(r.to_integer()).map_err(|_| Error::RelationFailure("dimension overflow".into()))
}

/// Checks that `projectors` are idempotent, pairwise orthogonal and sum to 1.
fn resolves_identity<R: Ring>(projectors: &[Operator<R>], one: &R) -> bool {
    let dim = projectors[0].dim();
    let id = Operator::identity(dim, one);
    let sum = projectors.iter().fold(Operator::zero(dim), |acc, p| acc.plus(p));
    if sum != id {
        return false;
    }
    for (i, p) in projectors.iter().enumerate() {
        for (j, q) in projectors.iter().enumerate() {
            let pq = p.mul(q);
            let ok = if i == j { &pq == p } else { pq.is_zero() };
            if !ok {
                return false;
            }
        }
    }
    true
}

#[derive(Debug, Clone)]
pub struct EigenModules {
    pub order: u32,
    pub projectors: Vec<Operator<Cyclotomic>>,
    pub identities_hold: bool,
    pub dims: VirtualCyclotomicModule,
}

impl EigenModules {
    /// `tr(w · P_j)`.
    pub fn trace_with(&self, j: usize, w: &Operator) -> Cyclotomic {
        let zero = Cyclotomic::constant(self.order, Rational::zero());
        to_cyclotomic(w, self.order).mul(&self.projectors[j]).trace(&zero)
    }
}

/// Eigenmodules of the Koszul `k`-cycle `T` on `E^{⊗k}` through the
/// projectors `P_j = (1/k) Σ_l ω^{-jl} T^l` over `Q(ω)`.
pub fn adams_bar(t: &TensorPower, caps: &Caps) -> Result<EigenModules> {
    let k = t.k();
    caps.check_order(k as u32)?;
    let order = k as u32;
    let dim = t.dim();
    let cycle = t.cycle();
    let mut powers = vec![Operator::identity(dim, &Rational::one())];
    for l in 1..k {
        powers.push(powers[l - 1].mul(&cycle));
    }
    let zero = Rational::zero();
    let inv_k = Rational::new(1.into(), (k as i64).into());
    let projectors: Vec<Operator<Cyclotomic>> = (0..k as i64)
        .map(|j| {
            powers.iter().enumerate().fold(Operator::zero(dim), |acc, (l, p)| {
                let w = Cyclotomic::root_power(order, -j * l as i64, &zero).scale(&inv_k);
                acc.plus(&to_cyclotomic(p, order).scale(&w))
            })
        })
        .collect();
    let one = Cyclotomic::constant(order, Rational::one());
    let identities_hold = resolves_identity(&projectors, &one);

    let czero = Cyclotomic::constant(order, zero);
    let even_rows: Vec<usize> = (0..dim).filter(|&i| t.parity()[i] == 0).collect();
    let odd_rows: Vec<usize> = (0..dim).filter(|&i| t.parity()[i] == 1).collect();
    let mut even = Vec::with_capacity(k);
    let mut odd = Vec::with_capacity(k);
    for p in &projectors {
        even.push(descend_integer(&p.partial_trace(even_rows.iter().copied(), &czero))?);
        odd.push(descend_integer(&p.partial_trace(odd_rows.iter().copied(), &czero))?);
    }
    Ok(EigenModules {
        order,
        projectors,
        identities_hold,
        dims: VirtualCyclotomicModule { order, even, odd },
    })
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct IsotypicPart {
    pub partition: Vec<usize>,
    pub irrep_dim: i64,
    /// `χ_λ` at the `k`-cycle.
    pub cycle_character: i64,
    /// Even and odd dimensions of the isotypic component.
    pub even: i64,
    pub odd: i64,
}

impl IsotypicPart {
    /// Graded virtual dimension of `Hom_{S_k}(λ, E^{⊗k})`.
    pub fn graded_multiplicity(&self) -> i64 {
        (self.even - self.odd) / self.irrep_dim
    }
}

#[derive(Debug, Clone)]
pub struct CharacterDecomposition {
    pub k: usize,
    pub parts: Vec<IsotypicPart>,
    pub projectors: Vec<Operator>,
    pub identities_hold: bool,
}

impl CharacterDecomposition {
    /// `ψᵏ = Σ_λ χ_λ(c_k)·[Hom(λ, E^{⊗k})]`, as a graded virtual dimension.
    pub fn psi(&self) -> i64 {
        self.parts
            .iter()
            .map(|p| p.cycle_character * p.graded_multiplicity())
            .sum()
    }

    pub fn total(&self) -> i64 {
        self.parts.iter().map(|p| p.even + p.odd).sum()
    }

    /// `tr(w · P_λ)` for the `i`-th part.
    pub fn trace_with(&self, i: usize, w: &Operator) -> Rational {
        w.mul(&self.projectors[i]).trace(&Rational::zero())
    }
}

/// Isotypic decomposition of `E^{⊗k}` under the Koszul action of `S_k`,
/// through `P_λ = (χ_λ(1)/k!) Σ_g χ_λ(g) ρ(g)`.
pub fn adams_character(t: &TensorPower, caps: &Caps) -> Result<CharacterDecomposition> {
    let k = t.k();
    caps.check_order(k as u32)?;
    if k > MAX_CHARACTER_K {
        return Err(Error::CapExceeded {
            what: "symmetric group degree",
            value: k as u64,
            cap: MAX_CHARACTER_K as u64,
        });
    }
    let dim = t.dim();
    let group: Vec<(Vec<usize>, Operator)> = permutations_with_words(k)
        .into_iter()
        .map(|(p, w)| (cycle_type(&p), t.word_operator(&w)))
        .collect();
    let order: i64 = (1..=k as i64).product();
    let even_rows: Vec<usize> = (0..dim).filter(|&i| t.parity()[i] == 0).collect();
    let odd_rows: Vec<usize> = (0..dim).filter(|&i| t.parity()[i] == 1).collect();
    let zero = Rational::zero();

    let mut parts = Vec::new();
    let mut projectors = Vec::new();
    for lambda in partitions(k) {
        let d = irrep_dim(&lambda);
        let mut p = Operator::zero(dim);
        for (ct, op) in &group {
            let chi = character(&lambda, ct);
            if chi != 0 {
                p = p.plus(&op.scale(&Rational::from_integer(chi.into())));
            }
        }
        let p = p.scale(&Rational::new(d.into(), order.into()));
        let int_trace = |rows: &[usize]| -> Result<i64> {
            let v = p.partial_trace(rows.iter().copied(), &zero);
            if !v.is_integer() {
                return Err(Error::RelationFailure(format!("non-integral dimension {v}")));
            }
            i64::try_from(v.to_integer()).map_err(|_| Error::RelationFailure("dimension overflow".into()))
        };
        let even = int_trace(&even_rows)?;
        let odd = int_trace(&odd_rows)?;
        if even % d != 0 || odd % d != 0 {
            return Err(Error::RelationFailure(format!(
                "isotypic component {lambda:?} has dimension not divisible by {d}"
            )));
        }
        parts.push(IsotypicPart {
            cycle_character: character(&lambda, &[k]),
            partition: lambda,
            irrep_dim: d,
            even,
            odd,
        });
        projectors.push(p);
    }
    let identities_hold = resolves_identity(&projectors, &Rational::one());
    Ok(CharacterDecomposition {
        k,
        parts,
        projectors,
        identities_hold,
    })
}

#[cfg(test)]
mod tests {
    use super::super::module::spinor_rep;
    use super::super::tensor::tensor_power;
    use super::*;

    fn power(m: usize, k: usize) -> TensorPower {
        let caps = Caps::default();
        tensor_power(&spinor_rep(m, &caps).unwrap(), k, &caps).unwrap()
    }

    #[test]
    fn eigenmodules_m1_k3() {
        let e = adams_bar(&power(1, 3), &Caps::default()).unwrap();
        assert!(e.identities_hold);
        assert_eq!(e.dims.total(), 8);
        // k prime: the nontrivial eigenmodules look alike
        assert_eq!(e.dims.even[1], e.dims.even[2]);
        assert_eq!(e.dims.odd[1], e.dims.odd[2]);
        let d = e.dims.graded();
        let reduced = Cyclotomic::constant(3, Rational::from_integer(d[0].into()))
            .minus(&Cyclotomic::constant(3, Rational::from_integer(d[1].into())));
        // ω + ω² = -1 collapses the sum to F_1 - F_ω
        assert_eq!(e.dims.value(), reduced);
    }

    #[test]
    fn characters_k2_is_sym_minus_alt() {
        let t = power(1, 2);
        let c = adams_character(&t, &Caps::default()).unwrap();
        assert!(c.identities_hold);
        assert_eq!(c.total(), 4);
        let sym = &c.parts[0];
        let alt = &c.parts[1];
        assert_eq!((sym.partition.clone(), alt.partition.clone()), (vec![2], vec![1, 1]));
        assert_eq!(c.psi(), sym.graded_multiplicity() - alt.graded_multiplicity());
    }

    #[test]
    fn eigen_and_character_agree() {
        for (m, k) in [(1, 2), (1, 3), (2, 2), (1, 4), (2, 3)] {
            let t = power(m, k);
            let e = adams_bar(&t, &Caps::default()).unwrap();
            let c = adams_character(&t, &Caps::default()).unwrap();
            assert!(e.identities_hold && c.identities_hold);
            assert_eq!(c.total(), e.dims.total());
            assert_eq!(e.dims.value(), Cyclotomic::constant(k as u32, Rational::from_integer(c.psi().into())), "m={m} k={k}");
        }
    }
}
