//! Inverses, the Clifford group and the volume element.

use std::sync::Arc;

use num_traits::{One, Zero};
use serde::Serialize;

use super::{CliffordAlgebra, Multivector};
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quadratic::QuadraticForm;
use crate::rings::Rational;

/// Above this rank the regular-representation solve is refused.
const SOLVE_RANK: usize = 8;

/// An isometry of `(V, q)` in the basis `e_1..e_n`.
#[derive(Debug, Clone, PartialEq)]
pub struct OrthogonalMatrix {
    pub matrix: Matrix,
    pub form: QuadraticForm,
}

impl OrthogonalMatrix {
    /// `Mᵀ·diag(q)·M = diag(q)`.
    pub fn preserves_form(&self) -> bool {
        let d = Matrix::diagonal(self.form.diag());
        self.matrix.transpose().mul(&d).mul(&self.matrix) == d
    }

    pub fn compose(&self, other: &Self) -> Self {
        OrthogonalMatrix {
            matrix: self.matrix.mul(&other.matrix),
            form: self.form.clone(),
        }
    }

    pub fn determinant(&self) -> Rational {
        self.matrix.determinant()
    }
}

#[derive(Debug, Clone, PartialEq)]
pub enum GroupMembership {
    NotMember {
        reason: String,
    },
    Member {
        degree: u8,
        phi: OrthogonalMatrix,
        norm: Rational,
        in_spin: bool,
    },
}

impl GroupMembership {
    pub fn is_member(&self) -> bool {
        matches!(self, GroupMembership::Member { .. })
    }
}

#[derive(Serialize)]
struct MembershipJson<'a> {
    member: bool,
    #[serde(skip_serializing_if = "Option::is_none")]
    reason: Option<&'a str>,
    #[serde(skip_serializing_if = "Option::is_none")]
    degree: Option<u8>,
    #[serde(skip_serializing_if = "Option::is_none")]
    phi: Option<Vec<Vec<String>>>,
    #[serde(skip_serializing_if = "Option::is_none")]
    norm: Option<String>,
    #[serde(skip_serializing_if = "Option::is_none")]
    in_spin: Option<bool>,
}

impl Serialize for GroupMembership {
    fn serialize<S: serde::Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        let json = match self {
            GroupMembership::NotMember { reason } => MembershipJson {
                member: false,
                reason: Some(reason),
                degree: None,
                phi: None,
                norm: None,
                in_spin: None,
            },
            GroupMembership::Member {
                degree,
                phi,
                norm,
                in_spin,
            } => MembershipJson {
                member: true,
                reason: None,
                degree: Some(*degree),
                phi: Some(
                    phi.matrix
                        .to_rows()
                        .into_iter()
                        .map(|r| r.iter().map(ToString::to_string).collect())
                        .collect(),
                ),
                norm: Some(norm.to_string()),
                in_spin: Some(*in_spin),
            },
        };
        json.serialize(s)
    }
}

impl Multivector<Rational> {
    /// Two-sided inverse, or `None` when the element is not a unit.
    ///
    /// When `a·ā` is a nonzero scalar `N` the inverse is `ā/N`; otherwise the
    /// system `a·x = 1` is solved in the regular representation, which is
    /// refused above rank 8.
    pub fn inverse(&self) -> Result<Option<Self>> {
        if self.is_zero() {
            return Ok(None);
        }
        let alg = self.algebra().clone();
        let bar = self.bar();
        let n = self.mul(&bar);
        if n.is_scalar() {
            if let Some(c) = n.scalar_part() {
                return Ok(Some(bar.scale(&c.recip())));
            }
        }
        if alg.rank() > SOLVE_RANK {
            return Err(Error::CapExceeded {
                what: "rank for regular-representation inverse",
                value: alg.rank() as u64,
                cap: SOLVE_RANK as u64,
            });
        }
        let dim = alg.dim();
        let mut l = Matrix::zeros(dim, dim);
        for b in 0..dim {
            let col = self.mul(&Multivector::blade(&alg, b as u32, Rational::one()));
            for (m, c) in col.terms() {
                l.set(m as usize, b, c.clone());
            }
        }
        let mut rhs = vec![Rational::zero(); dim];
        rhs[0] = Rational::one();
        if l.rank() < dim {
            return Ok(None);
        }
        Ok(l.solve(&rhs).map(|x| Multivector::from_dense(&alg, &x)))
    }
}

/// Decides membership in the Clifford group `Γ(V)`: `a` homogeneous and
/// invertible with `a V a⁻¹ ⊂ V`. For members, returns
/// `φ(a)(v) = (-1)^{deg a} a v a⁻¹`, the norm and the Spin flag.
pub fn clifford_group_test(a: &Multivector) -> Result<GroupMembership> {
    let not_member = |reason: &str| {
        Ok(GroupMembership::NotMember {
            reason: reason.to_string(),
        })
    };
    let Some(degree) = a.degree() else {
        return not_member("not homogeneous");
    };
    if a.is_zero() {
        return not_member("zero");
    }
    let Some(inv) = a.inverse()? else {
        return not_member("not invertible");
    };
    let alg = a.algebra().clone();
    let n = alg.rank();
    let mut m = Matrix::zeros(n, n);
    for j in 0..n {
        let mut w = a.mul(&Multivector::generator(&alg, j)).mul(&inv);
        if degree == 1 {
            w = w.negated();
        }
        for (mask, c) in w.terms() {
            if mask.count_ones() != 1 {
                return not_member(&format!("conjugate of e{} leaves V", j + 1));
            }
            m.set(mask.trailing_zeros() as usize, j, c.clone());
        }
    }
    let norm = match a.spinorial_norm() {
        Ok(v) => v,
        Err(_) => return not_member("norm is not a scalar"),
    };
    let in_spin = degree == 0 && norm.is_one();
    Ok(GroupMembership::Member {
        degree,
        phi: OrthogonalMatrix {
            matrix: m,
            form: alg.form().clone(),
        },
        norm,
        in_spin,
    })
}

/// The volume element `u = s·e_1⋯e_n` with `u^2 = 1`.
pub fn volume_element(algebra: &Arc<CliffordAlgebra>) -> Result<Multivector> {
    let o = algebra.form().orientation();
    match o.witness {
        Some(s) if o.orientable => Ok(Multivector::blade(algebra, algebra.top_mask(), s)),
        _ => Err(Error::NotOrientable(algebra.form().to_string())),
    }
}
