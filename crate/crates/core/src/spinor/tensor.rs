//! Graded tensor powers `E^{⊗k}` with the copy-wise Clifford action, the
//! diagonal action of `C(V, kq)` and the Koszul action of `S_k`.

use num_traits::One;
use serde::Serialize;

use super::module::{grading, GradedModule};
use super::operator::Operator;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rings::{int, rat, Rational};

#[derive(Debug, Clone)]
pub struct TensorPower {
    base: GradedModule,
    k: usize,
    parity: Vec<u8>,
    /// `copies[c][i]`: `ε ⊗ … ⊗ ε ⊗ γ_i ⊗ 1 ⊗ … ⊗ 1` with `γ_i` in slot `c`.
    copies: Vec<Vec<Operator>>,
    diagonal: Vec<Operator>,
    transpositions: Vec<Operator>,
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct TensorReport {
    pub dim: usize,
    pub diagonal_squares: bool,
    pub transpositions_commute_with_diagonal: bool,
    pub involutions: bool,
    pub braid: bool,
    pub far_commute: bool,
}

impl TensorReport {
    pub fn ok(&self) -> bool {
        self.diagonal_squares && self.transpositions_commute_with_diagonal && self.involutions && self.braid && self.far_commute
    }
}

fn kron_all(factors: &[Operator]) -> Operator {
    factors[1..].iter().fold(factors[0].clone(), |acc, f| acc.kron(f))
}

pub fn tensor_power(base: &GradedModule, k: usize, caps: &Caps) -> Result<TensorPower> {
    if k == 0 {
        return Err(Error::InvalidArgument("tensor power needs k >= 1".into()));
    }
    let d = base.dim();
    let dim = (d as u64).checked_pow(k as u32).unwrap_or(u64::MAX);
    caps.check_tensor(dim)?;
    let dim = dim as usize;
    let one = Rational::one();
    let id = Operator::identity(d, &one);
    let eps = base.grading();

    let slot = |c: usize, op: &Operator, before: &Operator| -> Operator {
        let factors: Vec<Operator> = (0..k)
            .map(|j| match j.cmp(&c) {
                std::cmp::Ordering::Less => before.clone(),
                std::cmp::Ordering::Equal => op.clone(),
                std::cmp::Ordering::Greater => id.clone(),
            })
            .collect();
        kron_all(&factors)
    };

    let copies: Vec<Vec<Operator>> = (0..k)
        .map(|c| base.generators().iter().map(|g| slot(c, g, &eps)).collect())
        .collect();
    let diagonal: Vec<Operator> = (0..base.form().rank())
        .map(|i| copies.iter().fold(Operator::zero(dim), |acc, cg| acc.plus(&cg[i])))
        .collect();

    let digits = |mut idx: usize| -> Vec<usize> {
        let mut out = vec![0; k];
        for j in (0..k).rev() {
            out[j] = idx % d;
            idx /= d;
        }
        out
    };
    let parity: Vec<u8> = (0..dim)
        .map(|idx| (digits(idx).iter().map(|&a| base.parity()[a] as usize).sum::<usize>() % 2) as u8)
        .collect();

    let copy_grading: Vec<Operator> = (0..k).map(|c| slot(c, &eps, &id)).collect();
    let full = Operator::identity(dim, &one);
    let half = rat(1, 2);
    let transpositions = (0..k.saturating_sub(1))
        .map(|c| {
            let swap = Operator::from_entries(
                dim,
                (0..dim).map(|idx| {
                    let mut ds = digits(idx);
                    ds.swap(c, c + 1);
                    let target = ds.iter().fold(0, |acc, &a| acc * d + a);
                    (target, idx, int(1))
                }),
            );
            let (ea, eb) = (&copy_grading[c], &copy_grading[c + 1]);
            // (1 + ε_c + ε_{c+1} - ε_c ε_{c+1}) / 2 is -1 exactly on odd ⊗ odd
            let sign = full.plus(ea).plus(eb).minus(&ea.mul(eb)).scale(&half);
            swap.mul(&sign)
        })
        .collect();

    Ok(TensorPower {
        base: base.clone(),
        k,
        parity,
        copies,
        diagonal,
        transpositions,
    })
}

impl TensorPower {
    pub fn base(&self) -> &GradedModule {
        &self.base
    }

    pub fn k(&self) -> usize {
        self.k
    }

    pub fn dim(&self) -> usize {
        self.parity.len()
    }

    pub fn parity(&self) -> &[u8] {
        &self.parity
    }

    pub fn grading(&self) -> Operator {
        grading(&self.parity)
    }

    pub fn copy_generators(&self, c: usize) -> &[Operator] {
        &self.copies[c]
    }

    pub fn diagonal(&self) -> &[Operator] {
        &self.diagonal
    }

    /// Koszul action of `(c, c+1)`, 0-based.
    pub fn transposition(&self, c: usize) -> &Operator {
        &self.transpositions[c]
    }

    /// Koszul action of `s_{w_1} ∘ … ∘ s_{w_l}`.
    pub fn word_operator(&self, word: &[usize]) -> Operator {
        word.iter()
            .fold(Operator::identity(self.dim(), &Rational::one()), |acc, &c| acc.mul(&self.transpositions[c]))
    }

    /// The `k`-cycle `s_1 s_2 ⋯ s_{k-1}`.
    pub fn cycle(&self) -> Operator {
        self.word_operator(&(0..self.k - 1).collect::<Vec<_>>())
    }

    /// `E^{⊗k}` as a module over `C(V^k)` through the copy generators.
    pub fn copy_module(&self) -> Result<GradedModule> {
        GradedModule::new(
            self.base.form().power(self.k),
            self.parity.clone(),
            self.copies.iter().flatten().cloned().collect(),
        )
    }

    /// `E^{⊗k}` as a module over `C(V, kq)` through `Δ(v) = Σ_c v^{(c)}`.
    pub fn diagonal_module(&self) -> Result<GradedModule> {
        GradedModule::new(
            self.base.form().scale(&int(self.k as i64))?,
            self.parity.clone(),
            self.diagonal.clone(),
        )
    }

    pub fn check(&self) -> TensorReport {
        let one = Operator::identity(self.dim(), &Rational::one());
        let kq = self.base.form().scale(&int(self.k as i64)).expect("k >= 1");
        let diagonal_squares = self
            .diagonal
            .iter()
            .zip(kq.diag())
            .all(|(g, a)| g.mul(g) == one.scale(a));
        let transpositions_commute_with_diagonal = self
            .transpositions
            .iter()
            .all(|t| self.diagonal.iter().all(|g| t.commutes_with(g)));
        let involutions = self.transpositions.iter().all(|t| t.mul(t) == one);
        let braid = self
            .transpositions
            .windows(2)
            .all(|w| w[0].mul(&w[1]).mul(&w[0]) == w[1].mul(&w[0]).mul(&w[1]));
        let t = &self.transpositions;
        let far_commute = (0..t.len()).all(|i| (i + 2..t.len()).all(|j| t[i].commutes_with(&t[j])));
        TensorReport {
            dim: self.dim(),
            diagonal_squares,
            transpositions_commute_with_diagonal,
            involutions,
            braid,
            far_commute,
        }
    }
}

#[cfg(test)]
mod tests {
    use super::super::module::spinor_rep;
    use super::*;

    #[test]
    fn square_of_spinor_m1() {
        let caps = Caps::default();
        let e = spinor_rep(1, &caps).unwrap();
        let t = tensor_power(&e, 2, &caps).unwrap();
        assert_eq!(t.dim(), 4);
        assert!(t.check().ok());
        let s = t.transposition(0);
        // basis 00, 01, 10, 11: swaps 01 and 10, fixes 00, negates 11
        assert_eq!(s.trace(&int(0)), int(0));
        assert_eq!(s.get(3, 3), Some(&int(-1)));
        assert_eq!(s.get(0, 0), Some(&int(1)));
        assert!(t.copy_module().is_ok());
        let dm = t.diagonal_module().unwrap();
        assert_eq!(dm.form().diag(), &[int(2), int(-2)]);
    }

    #[test]
    fn cube_braids() {
        let caps = Caps::default();
        let e = spinor_rep(1, &caps).unwrap();
        let t = tensor_power(&e, 3, &caps).unwrap();
        assert_eq!(t.dim(), 8);
        assert!(t.check().ok());
        let c = t.cycle();
        assert_eq!(c.pow(3, &int(1)), Operator::identity(8, &int(1)));
        assert!(t.copy_module().is_ok());
        let t2 = tensor_power(&spinor_rep(2, &caps).unwrap(), 3, &caps).unwrap();
        assert!(t2.check().ok());
        assert!(t2.copy_module().is_ok());
    }

    #[test]
    fn cap() {
        let caps = Caps {
            max_tensor: 16,
            ..Caps::default()
        };
        let e = spinor_rep(1, &caps).unwrap();
        assert!(tensor_power(&e, 4, &caps).is_ok());
        assert!(matches!(tensor_power(&e, 5, &caps), Err(Error::CapExceeded { .. })));
    }
}
