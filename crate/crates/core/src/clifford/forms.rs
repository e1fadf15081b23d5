//! The bilinear forms on `C⁰` and `C¹`, graded tensor decomposition and
//! the untwisting isomorphism.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use serde::Serialize;

use super::group::volume_element;
use super::{blade_name, CliffordAlgebra};
use crate::caps::Caps;
use crate::error::Result;
use crate::linalg::Matrix;
use crate::quadratic::QuadraticForm;
use crate::rings::Rational;

/// Gram matrix of `Φ^parity(a, b) = σ(a·b)` on the blades of `C^parity(V)`
/// (mask order), where `σ` reads off the coefficient of the volume element.
pub fn phi_gram(q: &QuadraticForm, parity: u8, caps: &Caps) -> Result<Matrix> {
    caps.check_dim(q.rank())?;
    let alg = CliffordAlgebra::new(q.clone());
    let u = volume_element(&alg)?;
    let s = u.top_coeff().expect("volume element is a top blade").clone();
    let basis: Vec<u32> = (0..alg.dim() as u32).filter(|m| (m.count_ones() % 2) as u8 == parity % 2).collect();
    let top = alg.top_mask();
    let mut g = Matrix::zeros(basis.len(), basis.len());
    for (i, &a) in basis.iter().enumerate() {
        for (j, &b) in basis.iter().enumerate() {
            let (m, c) = alg.blade_mul(a, b);
            if m == top {
                g.set(i, j, c / &s);
            }
        }
    }
    Ok(g)
}

/// Verifies that `e_i ↦ e_i ⊗ 1`, `f_j ↦ 1 ⊗ f_j` is an algebra isomorphism
/// `C(V ⊕ W) → C(V) ⊗̂ C(W)` onto the graded tensor product, by comparing
/// every structure constant.
pub fn graded_tensor_check(q1: &QuadraticForm, q2: &QuadraticForm, caps: &Caps) -> Result<bool> {
    let n1 = q1.rank();
    let n2 = q2.rank();
    caps.check_dim(n1 + n2)?;
    let a1 = CliffordAlgebra::new(q1.clone());
    let a2 = CliffordAlgebra::new(q2.clone());
    let sum = CliffordAlgebra::new(q1.orthogonal_sum(q2));
    let low = (1u32 << n1) - 1;
    for x in 0..sum.dim() as u32 {
        for y in 0..sum.dim() as u32 {
            let (m, c) = sum.blade_mul(x, y);
            let (a, b) = (x & low, x >> n1);
            let (cc, d) = (y & low, y >> n1);
            let (m1, c1) = a1.blade_mul(a, cc);
            let (m2, c2) = a2.blade_mul(b, d);
            let mut rhs = c1 * c2;
            if (b.count_ones() * cc.count_ones()) % 2 == 1 {
                rhs = -rhs;
            }
            if m != (m1 | m2 << n1) || c != rhs {
                return Ok(false);
            }
        }
    }
    Ok(true)
}

/// Element of an ungraded tensor product `C(V) ⊗ C(⟨1⟩^r)`, keyed by
/// (blade of `V`, blade of the `t` generators).
type TensorElement = BTreeMap<(u32, u32), Rational>;

fn tensor_mul(left: &CliffordAlgebra, right: &CliffordAlgebra, x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = TensorElement::new();
    for (&(a, b), cx) in x {
        for (&(c, d), cy) in y {
            let (m1, c1) = left.blade_mul(a, c);
            let (m2, c2) = right.blade_mul(b, d);
            let v = out.entry((m1, m2)).or_insert_with(Rational::zero);
            *v += cx * cy * c1 * c2;
        }
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn tensor_add(x: &TensorElement, y: &TensorElement) -> TensorElement {
    let mut out = x.clone();
    for (k, c) in y {
        *out.entry(*k).or_insert_with(Rational::zero) += c;
    }
    out.retain(|_, c| !c.is_zero());
    out
}

fn tensor_name(x: &TensorElement) -> String {
    let parts: Vec<String> = x
        .iter()
        .map(|(&(a, b), c)| {
            let left = if a == 0 { "1".to_string() } else { blade_name(a) };
            let right = if b == 0 {
                "1".to_string()
            } else {
                super::bits(b).map(|j| format!("t{}", j + 1)).collect()
            };
            format!("{c}*{left}⊗{right}")
        })
        .collect();
    if parts.is_empty() {
        "0".into()
    } else {
        parts.join(" + ")
    }
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct UntwistReport {
    pub rank: usize,
    pub extra: usize,
    /// Images of `e_1..e_n, t_1..t_r`.
    pub images: Vec<String>,
    pub relations_hold: bool,
    pub bijective: bool,
}

impl UntwistReport {
    pub fn ok(&self) -> bool {
        self.relations_hold && self.bijective
    }
}

/// The map `C(V ⊥ ⟨1⟩^r) → C(V) ⊗ C(⟨1⟩^r)` (ungraded tensor product)
/// sending `v ↦ v ⊗ 1` and `t_j ↦ u ⊗ t_j`, checked against the Clifford
/// relations and for bijectivity on the blade bases.
pub fn untwist_iso(q: &QuadraticForm, r: usize, caps: &Caps) -> Result<UntwistReport> {
    let n = q.rank();
    caps.check_dim(n + r)?;
    let alg = CliffordAlgebra::new(q.clone());
    let u = volume_element(&alg)?;
    let ts = CliffordAlgebra::new(QuadraticForm::from_ints(&vec![1; r])?);
    let domain_form = q.orthogonal_sum(ts.form());

    let mut gens: Vec<TensorElement> = Vec::with_capacity(n + r);
    for i in 0..n {
        gens.push(TensorElement::from([((1u32 << i, 0u32), Rational::one())]));
    }
    for j in 0..r {
        gens.push(u.terms().map(|(m, c)| ((m, 1u32 << j), c.clone())).collect());
    }

    let mut relations_hold = true;
    for i in 0..n + r {
        let sq = tensor_mul(&alg, &ts, &gens[i], &gens[i]);
        let expected = TensorElement::from([((0, 0), domain_form.diag()[i].clone())]);
        relations_hold &= sq == expected;
        for j in i + 1..n + r {
            let ac = tensor_add(&tensor_mul(&alg, &ts, &gens[i], &gens[j]), &tensor_mul(&alg, &ts, &gens[j], &gens[i]));
            relations_hold &= ac.is_empty();
        }
    }

    let dim = 1usize << (n + r);
    let mut m = Matrix::zeros(dim, dim);
    let one = TensorElement::from([((0, 0), Rational::one())]);
    for blade in 0..dim {
        let img = super::bits(blade as u32).fold(one.clone(), |acc, g| tensor_mul(&alg, &ts, &acc, &gens[g]));
        for (&(a, b), c) in &img {
            m.set((a | b << n) as usize, blade, c.clone());
        }
    }
    let bijective = m.rank() == dim;
    Ok(UntwistReport {
        rank: n,
        extra: r,
        images: gens.iter().map(tensor_name).collect(),
        relations_hold,
        bijective,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::error::Error;
    use crate::quadratic::squarefree_part;
    use crate::rings::int;
    use num_bigint::BigInt;

    fn qf(s: &str) -> QuadraticForm {
        QuadraticForm::parse(s).unwrap()
    }

    #[test]
    fn phi_gram_examples() {
        let caps = Caps::default();
        let g0 = phi_gram(&qf("1,-1"), 0, &caps).unwrap();
        assert_eq!(g0.to_rows(), vec![vec![int(0), int(1)], vec![int(1), int(0)]]);
        let g1 = phi_gram(&qf("1,-1"), 1, &caps).unwrap();
        assert_eq!(g1.to_rows(), vec![vec![int(0), int(1)], vec![int(-1), int(0)]]);
        assert!(!g0.determinant().is_zero() && !g1.determinant().is_zero());
        assert!(matches!(phi_gram(&qf("1,1"), 0, &caps), Err(Error::NotOrientable(_))));
    }

    #[test]
    fn phi_gram_hyperbolic() {
        let caps = Caps::default();
        for s in ["1,-1", "1,-1,1,-1", "1,1,1,1", "2,-3,5,-30", "1,-1,1,-1,1,-1"] {
            let q = qf(s);
            let g0 = phi_gram(&q, 0, &caps).unwrap();
            let g1 = phi_gram(&q, 1, &caps).unwrap();
            assert!(g0.is_symmetric() && g1.is_antisymmetric());
            let half = g0.rows() / 2;
            let expected = BigInt::from(if half % 2 == 0 { 1 } else { -1 });
            assert_eq!(squarefree_part(&g0.determinant()), expected, "{s}");
            assert_eq!(squarefree_part(&g1.determinant()), BigInt::from(1), "{s}");
        }
    }

    #[test]
    fn graded_tensor_examples() {
        let caps = Caps::default();
        assert!(graded_tensor_check(&qf("1"), &qf("1"), &caps).unwrap());
        assert!(graded_tensor_check(&qf("1,-1"), &qf("1,-1"), &caps).unwrap());
        assert!(graded_tensor_check(&qf("2"), &qf("3"), &caps).unwrap());
        let tight = Caps {
            max_dim: 3,
            ..Caps::default()
        };
        assert!(matches!(graded_tensor_check(&qf("1,-1"), &qf("1,-1"), &tight), Err(Error::CapExceeded { .. })));
    }

    #[test]
    fn untwist_examples() {
        let caps = Caps::default();
        let r = untwist_iso(&qf("1,-1"), 1, &caps).unwrap();
        assert!(r.ok());
        assert_eq!(r.images[2], "1*e1e2⊗t1");
        assert!(untwist_iso(&qf("1,-1"), 2, &caps).unwrap().ok());
        assert!(untwist_iso(&qf("1,1,1,1"), 1, &caps).unwrap().ok());
        assert!(matches!(untwist_iso(&qf("1,1"), 1, &caps), Err(Error::NotOrientable(_))));
    }
}
