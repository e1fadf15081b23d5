use num_bigint::BigInt;

use super::lines::LineExpr;
use crate::error::{Error, Result};
use crate::rings::Ring;

/// A class of rank `n` given by its exterior powers `λ¹..λⁿ` (with
/// `λ⁰ = 1` and `λʲ = 0` for `j > n`).
#[derive(Debug, Clone, PartialEq)]
pub struct LambdaVector<R> {
    powers: Vec<R>,
}

impl<R: Ring> LambdaVector<R> {
    /// `lambdas` lists `λ¹..λⁿ`; `one` fixes the coefficient ring.
    pub fn new(one: R, lambdas: Vec<R>) -> Self {
        let mut powers = Vec::with_capacity(lambdas.len() + 1);
        powers.push(one.one_like());
        powers.extend(lambdas);
        LambdaVector { powers }
    }

    /// The trivial class of rank `m`: `λʲ = C(m, j)`.
    pub fn trivial(one: R, m: usize) -> Self {
        let mut lambdas = Vec::with_capacity(m);
        let mut binom = BigInt::from(1);
        for j in 1..=m {
            binom = binom * (m + 1 - j) / j;
            lambdas.push(one.integer_like(&binom));
        }
        Self::new(one, lambdas)
    }

    pub fn rank(&self) -> usize {
        self.powers.len() - 1
    }

    pub fn lambda(&self, j: usize) -> R {
        match self.powers.get(j) {
            Some(v) => v.clone(),
            None => self.powers[0].zero_like(),
        }
    }

    pub fn lambdas(&self) -> &[R] {
        &self.powers[1..]
    }

    pub fn one(&self) -> &R {
        &self.powers[0]
    }

    /// `δ = (-1)ⁿ λⁿ`.
    pub fn delta(&self) -> R {
        let top = self.lambda(self.rank());
        if self.rank() % 2 == 1 {
            top.negated()
        } else {
            top
        }
    }

    /// `λʳ(x ⊕ y) = Σ λⁱ(x) λʳ⁻ⁱ(y)`.
    pub fn direct_sum(&self, other: &Self) -> Self {
        let n = self.rank() + other.rank();
        let zero = self.powers[0].zero_like();
        let mut powers = vec![zero; n + 1];
        for (i, a) in self.powers.iter().enumerate() {
            for (j, b) in other.powers.iter().enumerate() {
                powers[i + j] = powers[i + j].plus(&a.times(b));
            }
        }
        LambdaVector { powers }
    }

    /// `Ok(())` when `λʲ = λⁿ⁻ʲ` for every `j`, otherwise the first failing `j`.
    pub fn check_self_dual(&self) -> Result<()> {
        let n = self.rank();
        match (0..=n).find(|&j| self.powers[j] != self.powers[n - j]) {
            Some(j) => Err(Error::NotSelfDual { j }),
            None => Ok(()),
        }
    }

    pub fn map<S: Ring>(&self, f: impl Fn(&R) -> S) -> LambdaVector<S> {
        LambdaVector {
            powers: self.powers.iter().map(f).collect(),
        }
    }
}

impl LambdaVector<LineExpr> {
    /// Elementary symmetric functions of the monomials of an effective
    /// expression.
    pub fn from_lines(x: &LineExpr) -> Result<Self> {
        let lines = x.lines()?;
        let mut powers = vec![LineExpr::constant(1)];
        for l in lines {
            powers.push(LineExpr::zero());
            for j in (1..powers.len()).rev() {
                powers[j] = powers[j].plus(&powers[j - 1].times(&l));
            }
        }
        Ok(LambdaVector { powers })
    }
}

/// `ψᵏ` from `λ¹..λᵏ` by the Newton recurrence
/// `ψᵏ = Σ_{i<k} (-1)^{i-1} λⁱ ψᵏ⁻ⁱ + (-1)^{k-1} k λᵏ`.
pub fn adams_newton<R: Ring>(v: &LambdaVector<R>, k: usize) -> R {
    assert!(k >= 1, "Adams operations are indexed from 1");
    let mut psi: Vec<R> = Vec::with_capacity(k + 1);
    psi.push(v.one().zero_like());
    for m in 1..=k {
        let mut acc = v.lambda(m).scaled(m as i64);
        if m % 2 == 0 {
            acc = acc.negated();
        }
        for i in 1..m {
            let t = v.lambda(i).times(&psi[m - i]);
            acc = if i % 2 == 1 { acc.plus(&t) } else { acc.minus(&t) };
        }
        psi.push(acc);
    }
    psi.pop().expect("k >= 1")
}

/// `ψᵏ` on line expressions: every exponent is multiplied by `k`.
pub fn adams_lines(x: &LineExpr, k: i64) -> LineExpr {
    x.map_exponents(|e| e * k)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{int, Rational};

    fn le(s: &str) -> LineExpr {
        LineExpr::parse(s).unwrap()
    }

    #[test]
    fn newton_low_degrees() {
        let v = LambdaVector::new(int(1), vec![int(5), int(7), int(11)]);
        assert_eq!(adams_newton(&v, 1), int(5));
        assert_eq!(adams_newton(&v, 2), int(25 - 14));
        assert_eq!(adams_newton(&v, 3), int(125 - 3 * 5 * 7 + 3 * 11));
    }

    #[test]
    fn newton_on_lines() {
        let v = LambdaVector::from_lines(&le("L1 + L2")).unwrap();
        assert_eq!(adams_newton(&v, 2), le("L1^2 + L2^2"));
        assert_eq!(adams_newton(&v, 5), le("L1^5 + L2^5"));
    }

    #[test]
    fn adams_on_lines() {
        assert_eq!(adams_lines(&le("L1"), 4), le("L1^4"));
        assert_eq!(adams_lines(&le("1 - L1"), 3), le("1 - L1^3"));
        let x = le("2*L1*L2^-1 - L3 + 4");
        assert_eq!(adams_lines(&adams_lines(&x, 3), 2), adams_lines(&x, 6));
    }

    #[test]
    fn vectors() {
        let t: LambdaVector<Rational> = LambdaVector::trivial(int(1), 4);
        assert_eq!(t.lambdas(), &[int(4), int(6), int(4), int(1)]);
        assert!(t.check_self_dual().is_ok());
        assert_eq!(t.delta(), int(1));
        let s = LambdaVector::trivial(int(1), 1).direct_sum(&LambdaVector::trivial(int(1), 2));
        assert_eq!(s, LambdaVector::trivial(int(1), 3));
        let v = LambdaVector::new(int(1), vec![int(2), int(3)]);
        assert_eq!(v.check_self_dual(), Err(Error::NotSelfDual { j: 0 }));
        assert_eq!(LambdaVector::new(int(1), vec![int(2)]).delta(), int(-2));
        assert_eq!(v.lambda(7), int(0));
        assert!(LambdaVector::from_lines(&le("L1 - 1")).is_err());
    }
}
