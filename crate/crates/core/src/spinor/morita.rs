//! Reduction of graded modules over `C(V, q)` to graded vector spaces, and
//! the Hermitian Bott class `ρᵏ(E) = ψᵏ(E) / [E_k]` it produces.

use num_traits::{One, Zero};
use serde::Serialize;

use super::adams::{adams_bar, adams_character, VirtualCyclotomicModule};
use super::module::{opposite_module, spinor_rep, twist_rep, GradedModule};
use super::operator::Operator;
use super::tensor::tensor_power;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rings::{Cyclotomic, Rational, Ring};

#[derive(Debug, Clone, Copy, PartialEq, Eq, Serialize)]
pub struct MoritaRank {
    /// `dim M / dim E`.
    pub multiplicity: usize,
    /// Graded dimension of `Hom_C(E, M)`: `tr(u·ε_M) / dim E`.
    pub graded_rank: i64,
}

/// Reduces `module` against the standard module `standard` of the same
/// algebra, which must be of the first type.
pub fn morita_reduce(module: &GradedModule, standard: &GradedModule) -> Result<MoritaRank> {
    if module.form() != standard.form() {
        return Err(Error::FormMismatch);
    }
    let mismatch = || Error::PresentationMismatch {
        module_dim: module.dim(),
        standard_dim: standard.dim(),
    };
    if !standard.is_first_type()? || module.dim() % standard.dim() != 0 {
        return Err(mismatch());
    }
    let ue = module.volume_action()?.mul(&module.grading());
    let t = ue.trace(&Rational::zero()) / Rational::from_integer((standard.dim() as i64).into());
    if !t.is_integer() {
        return Err(mismatch());
    }
    let graded_rank = i64::try_from(t.to_integer()).map_err(|_| mismatch())?;
    Ok(MoritaRank {
        multiplicity: module.dim() / standard.dim(),
        graded_rank,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct HermitianBott {
    pub form: String,
    pub k: usize,
    pub tensor_relations: bool,
    pub projectors_resolve_identity: bool,
    pub eigenmodules: VirtualCyclotomicModule,
    /// `Σ_j d_j ω^j` from the eigenmodules.
    pub psi_bar: String,
    /// `Σ_λ χ_λ(c_k) [Hom(λ, E^{⊗k})]`.
    pub psi_char: i64,
    /// Reduction of `ψᵏ` against `E_k`, through the isotypic projectors.
    #[serde(serialize_with = "crate::rings::display")]
    pub rho_k: Rational,
    /// The same reduction through the eigenmodules.
    #[serde(serialize_with = "crate::rings::display")]
    pub rho_k_eigen: Rational,
    pub expected: i64,
}

impl HermitianBott {
    pub fn psi_agree(&self) -> bool {
        self.psi_bar == Cyclotomic::constant(self.k as u32, Rational::from_integer(self.psi_char.into())).to_string()
    }

    pub fn passes(&self) -> bool {
        self.tensor_relations
            && self.projectors_resolve_identity
            && self.psi_agree()
            && self.rho_k == self.rho_k_eigen
            && self.rho_k == Rational::from_integer(self.expected.into())
    }
}

/// `ρᵏ` for the standard spinor module of the hyperbolic form of rank `2m`.
pub fn hermitian_bott(m: usize, k: usize, caps: &Caps) -> Result<HermitianBott> {
    hermitian_bott_of(&spinor_rep(m, caps)?, k, caps)
}

/// `ρᵏ(E)` for a module `E` of the first type over `C(V, q)` with `dim V`
/// even: the class of `E^{⊗k}` under the `k`-cycle, reduced against the
/// twisted module `E_k` over `C(V, kq)`.
pub fn hermitian_bott_of(e: &GradedModule, k: usize, caps: &Caps) -> Result<HermitianBott> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("k must be at least 2, got {k}")));
    }
    let n = e.form().rank();
    if n % 2 != 0 {
        return Err(Error::InvalidArgument(format!("rank {n} is odd")));
    }
    if !e.is_first_type()? {
        return Err(Error::RelationFailure("module is not of the first type".into()));
    }
    let t = tensor_power(e, k, caps)?;
    let tensor_relations = t.check().ok();
    let standard = twist_rep(e, k as i64)?;
    let diag = t.diagonal_module()?;
    if diag.form() != standard.form() {
        return Err(Error::FormMismatch);
    }
    let ue = diag.volume_action()?.mul(&diag.grading());
    let dim_e = Rational::from_integer((e.dim() as i64).into());

    let eigen = adams_bar(&t, caps)?;
    let chars = adams_character(&t, caps)?;

    let rho_k = chars
        .parts
        .iter()
        .enumerate()
        .map(|(i, p)| {
            let w = Rational::from_integer((p.cycle_character).into())
                / Rational::from_integer(p.irrep_dim.into());
            chars.trace_with(i, &ue) * w
        })
        .fold(Rational::zero(), |a, b| a + b)
        / dim_e.clone();

    let order = k as u32;
    let zero = Rational::zero();
    let rho_bar = (0..k)
        .map(|j| eigen.trace_with(j, &ue).times(&Cyclotomic::root_power(order, j as i64, &zero)))
        .fold(Cyclotomic::constant(order, zero.clone()), |a, b| a.plus(&b));
    let rho_k_eigen = rho_bar.descend()? / dim_e;

    let expected = (k as i64).pow((n / 2) as u32);
    Ok(HermitianBott {
        form: e.form().to_string(),
        k,
        tensor_relations,
        projectors_resolve_identity: eigen.identities_hold && chars.identities_hold,
        psi_bar: eigen.dims.value().to_string(),
        eigenmodules: eigen.dims,
        psi_char: chars.psi(),
        rho_k,
        rho_k_eigen,
        expected,
    })
}

#[derive(Debug, Clone, Serialize)]
pub struct OppositeCheck {
    pub m: usize,
    pub k: usize,
    #[serde(serialize_with = "crate::rings::display")]
    pub rho_q: Rational,
    #[serde(serialize_with = "crate::rings::display")]
    pub rho_opposite: Rational,
    /// `ε_F = u^{⊗k}` squares to 1, anticommutes with every copy generator and
    /// commutes with the symmetric group.
    pub grading_intertwines: bool,
}

impl OppositeCheck {
    pub fn passes(&self) -> bool {
        self.grading_intertwines && self.rho_q == self.rho_opposite
    }
}

/// Compares `ρᵏ` computed from `C(V, q)` and from `C(V, -q)`, the latter via
/// the opposite module `u·E`.
pub fn opposite_form_check(m: usize, k: usize, caps: &Caps) -> Result<OppositeCheck> {
    let e = spinor_rep(m, caps)?;
    let opp = opposite_module(&e)?;
    let direct = hermitian_bott_of(&e, k, caps)?;
    let flipped = hermitian_bott_of(&opp, k, caps)?;

    let t = tensor_power(&e, k, caps)?;
    let u = e.volume_action()?;
    let uk = (1..k).fold(u.clone(), |acc, _| acc.kron(&u));
    let one = Rational::one();
    let mut ok = uk.mul(&uk) == Operator::identity(t.dim(), &one) && uk == t.grading();
    for c in 0..k {
        ok &= t.copy_generators(c).iter().all(|g| uk.anticommutes_with(g));
    }
    for c in 0..k.saturating_sub(1) {
        ok &= uk.commutes_with(t.transposition(c));
    }
    Ok(OppositeCheck {
        m,
        k,
        rho_q: direct.rho_k,
        rho_opposite: flipped.rho_k,
        grading_intertwines: ok,
    })
}
