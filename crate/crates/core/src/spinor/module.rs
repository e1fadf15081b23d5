//! Graded modules `E = E₀ ⊕ E₁` over Clifford algebras, given by the odd
//! operators of the generators.

use num_traits::One;

use super::operator::Operator;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quadratic::QuadraticForm;
use crate::rings::{int, Rational};

#[derive(Debug, Clone, PartialEq)]
pub struct GradedModule {
    form: QuadraticForm,
    parity: Vec<u8>,
    gens: Vec<Operator>,
}

impl GradedModule {
    /// Checks `γ_i^2 = q_i`, `γ_iγ_j = -γ_jγ_i` and that each `γ_i` is odd.
    pub fn new(form: QuadraticForm, parity: Vec<u8>, gens: Vec<Operator>) -> Result<Self> {
        let dim = parity.len();
        if gens.len() != form.rank() {
            return Err(Error::RelationFailure(format!(
                "{} generators for a form of rank {}",
                gens.len(),
                form.rank()
            )));
        }
        let one = Operator::identity(dim, &Rational::one());
        for (i, g) in gens.iter().enumerate() {
            if g.dim() != dim {
                return Err(Error::RelationFailure(format!("generator {} has the wrong size", i + 1)));
            }
            if g.entries().any(|(r, c, _)| parity[r] == parity[c]) {
                return Err(Error::RelationFailure(format!("generator {} is not odd", i + 1)));
            }
            if g.mul(g) != one.scale(&form.diag()[i]) {
                return Err(Error::RelationFailure(format!("generator {} does not square to q", i + 1)));
            }
            for (j, h) in gens.iter().enumerate().skip(i + 1) {
                if !g.anticommutes_with(h) {
                    return Err(Error::RelationFailure(format!(
                        "generators {} and {} do not anticommute",
                        i + 1,
                        j + 1
                    )));
                }
            }
        }
        Ok(GradedModule { form, parity, gens })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    /// `(dim E₀, dim E₁)`.
    pub fn dims(&self) -> (usize, usize) {
        let odd = self.parity.iter().filter(|&&p| p == 1).count();
        (self.dim() - odd, odd)
    }

    pub fn generators(&self) -> &[Operator] {
        &self.gens
    }

    /// The grading operator `ε`: `+1` on `E₀`, `-1` on `E₁`.
    pub fn grading(&self) -> Operator {
        grading(&self.parity)
    }

    /// Image of `Σ v_i e_i`.
    pub fn vector_action(&self, v: &[Rational]) -> Operator {
        self.gens
            .iter()
            .zip(v)
            .fold(Operator::zero(self.dim()), |acc, (g, c)| acc.plus(&g.scale(c)))
    }

    /// Image of the volume element `u = s·e_1⋯e_n`.
    pub fn volume_action(&self) -> Result<Operator> {
        let s = self
            .form
            .orientation()
            .witness
            .ok_or_else(|| Error::NotOrientable(self.form.to_string()))?;
        let one = Operator::identity(self.dim(), &Rational::one());
        Ok(self.gens.iter().fold(one.scale(&s), |acc, g| acc.mul(g)))
    }

    /// Whether `u` acts as `ε` (rather than `-ε`).
    pub fn is_first_type(&self) -> Result<bool> {
        Ok(self.volume_action()? == self.grading())
    }

    /// Rank of the algebra map `C(V) → End(E)`, from the images of all blades.
    pub fn structure_rank(&self, caps: &Caps) -> Result<usize> {
        let n = self.form.rank();
        caps.check_dim(n)?;
        let d = self.dim();
        caps.check_tensor((d * d) as u64)?;
        let blades = 1usize << n;
        let mut m = Matrix::zeros(d * d, blades);
        for b in 0..blades {
            let img = (0..n)
                .filter(|i| b >> i & 1 == 1)
                .fold(Operator::identity(d, &Rational::one()), |acc, i| acc.mul(&self.gens[i]));
            for (r, c, v) in img.entries() {
                m.set(c * d + r, b, v.clone());
            }
        }
        Ok(m.rank())
    }

    /// Whether `C(V) → End(E)` is an isomorphism.
    pub fn is_presentation(&self, caps: &Caps) -> Result<bool> {
        let d = self.dim();
        Ok(1usize << self.form.rank() == d * d && self.structure_rank(caps)? == d * d)
    }

    pub fn direct_sum(&self, other: &Self) -> Result<Self> {
        if self.form != other.form {
            return Err(Error::FormMismatch);
        }
        let d = self.dim();
        let dim = d + other.dim();
        let gens = self
            .gens
            .iter()
            .zip(&other.gens)
            .map(|(a, b)| {
                let entries = a
                    .entries()
                    .map(|(i, j, v)| (i, j, v.clone()))
                    .chain(b.entries().map(|(i, j, v)| (i + d, j + d, v.clone())));
                Operator::from_entries(dim, entries.collect::<Vec<_>>())
            })
            .collect();
        let mut parity = self.parity.clone();
        parity.extend_from_slice(&other.parity);
        GradedModule::new(self.form.clone(), parity, gens)
    }

    /// The same generators with the grading exchanged.
    pub fn regraded(&self) -> Self {
        GradedModule {
            form: self.form.clone(),
            parity: self.parity.iter().map(|p| 1 - p).collect(),
            gens: self.gens.clone(),
        }
    }
}

pub(crate) fn grading(parity: &[u8]) -> Operator {
    Operator::diagonal(parity.iter().map(|&p| if p == 0 { int(1) } else { int(-1) }).collect())
}

/// Basis of `Λ(Q^m)`: subsets as bitmasks, even ones first.
pub fn exterior_basis(m: usize) -> Vec<u32> {
    let mut even: Vec<u32> = (0..1u32 << m).filter(|s| s.count_ones() % 2 == 0).collect();
    let odd: Vec<u32> = (0..1u32 << m).filter(|s| s.count_ones() % 2 == 1).collect();
    even.extend(odd);
    even
}

/// The spinor module of `C(H(Q^m))` on `Λ(Q^m)`: `e_{2i-1} ↦ x_i∧ + ι_i`
/// and `e_{2i} ↦ x_i∧ - ι_i`.
pub fn spinor_rep(m: usize, caps: &Caps) -> Result<GradedModule> {
    if m == 0 {
        return Err(Error::InvalidArgument("spinor module needs m >= 1".into()));
    }
    caps.check_dim(2 * m)?;
    caps.check_tensor(1u64 << m)?;
    let basis = exterior_basis(m);
    let mut index = vec![0usize; basis.len()];
    for (pos, &s) in basis.iter().enumerate() {
        index[s as usize] = pos;
    }
    let dim = basis.len();
    let mut gens = Vec::with_capacity(2 * m);
    for i in 0..m {
        let bit = 1u32 << i;
        let mut wedge = Vec::new();
        let mut contract = Vec::new();
        for (col, &s) in basis.iter().enumerate() {
            // moving x_i past the lower generators present in s
            let sign = if (s & (bit - 1)).count_ones() % 2 == 0 { int(1) } else { int(-1) };
            if s & bit == 0 {
                wedge.push((index[(s | bit) as usize], col, sign));
            } else {
                contract.push((index[(s ^ bit) as usize], col, sign));
            }
        }
        let wedge = Operator::from_entries(dim, wedge);
        let contract = Operator::from_entries(dim, contract);
        gens.push(wedge.plus(&contract));
        gens.push(wedge.minus(&contract));
    }
    let parity = basis.iter().map(|s| (s.count_ones() % 2) as u8).collect();
    GradedModule::new(QuadraticForm::hyperbolic(m)?, parity, gens)
}

/// The twisted module `f_k(v) = [[0, kσ(v)], [τ(v), 0]]` over `C(V, kq)`:
/// the `E₁ → E₀` block of every generator is multiplied by `k`.
pub fn twist_rep(module: &GradedModule, k: i64) -> Result<GradedModule> {
    if k < 1 {
        return Err(Error::InvalidArgument(format!("twist needs k >= 1, got {k}")));
    }
    let kq = int(k);
    let parity = module.parity.clone();
    let gens = module
        .gens
        .iter()
        .map(|g| {
            let entries: Vec<_> = g
                .entries()
                .map(|(i, j, v)| (i, j, if parity[i] == 0 { v * &kq } else { v.clone() }))
                .collect();
            Operator::from_entries(module.dim(), entries)
        })
        .collect();
    GradedModule::new(module.form.scale(&kq)?, parity, gens)
}

/// `C(V, -q)`-module structure on `E` given by `v ↦ u·γ(v)`, regraded when
/// needed so that the new volume element acts as the grading.
pub fn opposite_module(module: &GradedModule) -> Result<GradedModule> {
    let u = module.volume_action()?;
    let gens = module.gens.iter().map(|g| u.mul(g)).collect();
    let opp = GradedModule::new(module.form.negated(), module.parity.clone(), gens)?;
    if opp.is_first_type()? {
        Ok(opp)
    } else {
        Ok(opp.regraded())
    }
}
