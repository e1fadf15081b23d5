use std::fmt;
use std::sync::Arc;

use num_bigint::BigInt;
use num_integer::Integer;

use super::rational::Rational;
use super::text::{format_terms, parse_terms};
use super::{QAlgebra, Ring};
use crate::error::{Error, Result};
use crate::linalg::Matrix;

/// Euler's totient.
pub fn euler_phi(k: u32) -> u32 {
    (1..=k).filter(|j| j.gcd(&k) == 1).count() as u32
}

/// Coefficients of the k-th cyclotomic polynomial, lowest degree first.
///
/// Computed by dividing `x^k - 1` by `Φ_d` for every proper divisor `d`.
pub fn cyclotomic_polynomial(k: u32) -> Vec<i64> {
    assert!(k >= 1, "cyclotomic order must be positive");
    let mut num = vec![0i64; k as usize + 1];
    num[0] = -1;
    num[k as usize] = 1;
    for d in (1..k).filter(|d| k % d == 0) {
        num = exact_div_monic(&num, &cyclotomic_polynomial(d));
    }
    num
}

fn exact_div_monic(num: &[i64], den: &[i64]) -> Vec<i64> {
    let mut rem = num.to_vec();
    let dd = den.len() - 1;
    let qd = rem.len() - 1 - dd;
    let mut q = vec![0i64; qd + 1];
    for i in (0..=qd).rev() {
        let c = rem[i + dd];
        q[i] = c;
        for (t, &dc) in den.iter().enumerate() {
            rem[i + t] -= c * dc;
        }
    }
    debug_assert!(rem.iter().all(|&r| r == 0));
    q
}

/// An element of `R ⊗ Z[ω]`, `ω` a primitive k-th root of unity, stored as
/// the unique representative of degree `< φ(k)` modulo `Φ_k`.
#[derive(Clone)]
pub struct Cyclotomic<R = Rational> {
    order: u32,
    modulus: Arc<[i64]>,
    coeffs: Vec<R>,
}

impl<R: Ring> Cyclotomic<R> {
    /// Builds `Σ coeffs[i]·ω^i` (any length) and reduces it mod `Φ_k`.
    /// `proto` fixes the coefficient ring when `coeffs` is empty.
    pub fn from_poly(order: u32, coeffs: Vec<R>, proto: &R) -> Self {
        let modulus: Arc<[i64]> = cyclotomic_polynomial(order).into();
        Self::reduce(order, modulus, coeffs, proto)
    }

    pub fn constant(order: u32, c: R) -> Self {
        let zero = c.zero_like();
        Self::from_poly(order, vec![c], &zero)
    }

    /// The primitive root `ω`.
    pub fn root(order: u32, proto: &R) -> Self {
        Self::root_power(order, 1, proto)
    }

    /// `ω^e` for any integer exponent.
    pub fn root_power(order: u32, e: i64, proto: &R) -> Self {
        let e = e.rem_euclid(order as i64) as usize;
        let mut coeffs = vec![proto.zero_like(); e + 1];
        coeffs[e] = proto.one_like();
        Self::from_poly(order, coeffs, proto)
    }

    fn reduce(order: u32, modulus: Arc<[i64]>, mut coeffs: Vec<R>, proto: &R) -> Self {
        let deg = modulus.len() - 1;
        let zero = proto.zero_like();
        if coeffs.len() < deg {
            coeffs.resize(deg, zero.clone());
        }
        for i in (deg..coeffs.len()).rev() {
            let c = std::mem::replace(&mut coeffs[i], zero.clone());
            if c.is_nil() {
                continue;
            }
            for t in 0..deg {
                let m = modulus[t];
                if m != 0 {
                    coeffs[i - deg + t] = coeffs[i - deg + t].minus(&c.scaled(m));
                }
            }
        }
        coeffs.truncate(deg);
        Cyclotomic {
            order,
            modulus,
            coeffs,
        }
    }

    pub fn order(&self) -> u32 {
        self.order
    }

    /// Canonical coefficients on `1, ω, …, ω^{φ(k)-1}`.
    pub fn coeffs(&self) -> &[R] {
        &self.coeffs
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len()
    }

    fn same_ring(&self, other: &Self) -> Result<()> {
        if self.order != other.order {
            Err(Error::DistinctRings {
                left: format!("cyclotomic order {}", self.order),
                right: format!("cyclotomic order {}", other.order),
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.plus(other))
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.same_ring(other)?;
        Ok(self.times(other))
    }

    /// Image under the Galois automorphism `ω ↦ ω^j`.
    pub fn galois_act(&self, j: i64) -> Result<Self> {
        let k = self.order as i64;
        if j.gcd(&k) != 1 {
            return Err(Error::NotGaloisElement { j, k: self.order });
        }
        let j = j.rem_euclid(k) as usize;
        let zero = self.coeffs[0].zero_like();
        let mut spread = vec![zero.clone(); self.order as usize];
        for (i, c) in self.coeffs.iter().enumerate() {
            let e = (i * j) % self.order as usize;
            spread[e] = spread[e].plus(c);
        }
        Ok(Self::reduce(self.order, self.modulus.clone(), spread, &zero))
    }

    /// Returns the constant this element equals, provided it is fixed by the
    /// whole Galois group `(Z/k)^×`.
    pub fn descend(&self) -> Result<R> {
        for j in 1..self.order.max(2) {
            if j.gcd(&self.order) != 1 {
                continue;
            }
            if self.galois_act(j as i64)? != *self {
                return Err(Error::DescentFailure { j });
            }
        }
        if self.coeffs[1..].iter().any(|c| !c.is_nil()) {
            // invariant but not constant: only possible for coefficient rings with torsion
            return Err(Error::DescentFailure { j: 1 });
        }
        Ok(self.coeffs[0].clone())
    }

    pub fn map_coeffs<S: Ring>(&self, f: impl Fn(&R) -> S) -> Cyclotomic<S> {
        Cyclotomic {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().map(f).collect(),
        }
    }
}

impl<R: Ring> PartialEq for Cyclotomic<R> {
    fn eq(&self, other: &Self) -> bool {
        self.order == other.order && self.coeffs == other.coeffs
    }
}

impl<R: Ring> fmt::Debug for Cyclotomic<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.debug_struct("Cyclotomic")
            .field("order", &self.order)
            .field("coeffs", &self.coeffs)
            .finish()
    }
}

impl<R: Ring> Ring for Cyclotomic<R> {
    fn zero_like(&self) -> Self {
        let z = self.coeffs[0].zero_like();
        Cyclotomic {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: vec![z; self.coeffs.len()],
        }
    }

    fn one_like(&self) -> Self {
        self.integer_like(&BigInt::from(1))
    }

    fn integer_like(&self, n: &BigInt) -> Self {
        let mut out = self.zero_like();
        out.coeffs[0] = self.coeffs[0].integer_like(n);
        out
    }

    fn is_nil(&self) -> bool {
        self.coeffs.iter().all(Ring::is_nil)
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        Cyclotomic {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.plus(b)).collect(),
        }
    }

    fn minus(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        Cyclotomic {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: self.coeffs.iter().zip(&other.coeffs).map(|(a, b)| a.minus(b)).collect(),
        }
    }

    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.order, other.order, "cyclotomic order mismatch");
        let zero = self.coeffs[0].zero_like();
        let n = self.coeffs.len();
        let mut prod = vec![zero.clone(); 2 * n - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_nil() {
                continue;
            }
            for (j, b) in other.coeffs.iter().enumerate() {
                if !b.is_nil() {
                    prod[i + j] = prod[i + j].plus(&a.times(b));
                }
            }
        }
        Self::reduce(self.order, self.modulus.clone(), prod, &zero)
    }

    fn negated(&self) -> Self {
        self.map_coeffs(Ring::negated)
    }
}

impl<R: QAlgebra> Cyclotomic<R> {
    /// Multiplication by a scalar of the coefficient ring.
    pub fn scale(&self, c: &R) -> Self {
        self.map_coeffs(|x| x.times(c))
    }
}

impl Cyclotomic<Rational> {
    /// Parses `"<polynomial in w>@k"`, e.g. `"1 - 2*w + w^2@3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let (poly, order) = s
            .rsplit_once('@')
            .ok_or_else(|| Error::Parse(format!("missing '@order' in {s:?}")))?;
        let order: u32 = order
            .trim()
            .parse()
            .map_err(|_| Error::Parse(format!("invalid order in {s:?}")))?;
        if order == 0 {
            return Err(Error::Parse("cyclotomic order must be positive".into()));
        }
        let zero = Rational::from_integer(0.into());
        let mut coeffs: Vec<Rational> = Vec::new();
        for term in parse_terms(poly)? {
            let mut e = 0usize;
            for (sym, p) in &term.symbols {
                if sym != "w" || *p < 0 {
                    return Err(Error::Parse(format!("unexpected factor {sym}^{p} in {s:?}")));
                }
                e += *p as usize;
            }
            if coeffs.len() <= e {
                coeffs.resize(e + 1, zero.clone());
            }
            coeffs[e] += term.coeff;
        }
        Ok(Self::from_poly(order, coeffs, &zero))
    }
}

impl QAlgebra for Cyclotomic<Rational> {
    fn rational_like(&self, r: &Rational) -> Self {
        let mut out = self.zero_like();
        out.coeffs[0] = r.clone();
        out
    }

    /// Inverts by solving the multiplication-by-`self` linear system over Q.
    fn try_inverse(&self) -> Option<Self> {
        let n = self.coeffs.len();
        let mut cols = Vec::with_capacity(n);
        for e in 0..n {
            let basis = Cyclotomic::root_power(self.order, e as i64, &self.coeffs[0]);
            cols.push(self.times(&basis).coeffs);
        }
        let m = Matrix::from_rows((0..n).map(|i| (0..n).map(|j| cols[j][i].clone()).collect()).collect());
        let mut rhs = vec![self.coeffs[0].zero_like(); n];
        rhs[0] = self.coeffs[0].one_like();
        if m.rank() < n {
            return None;
        }
        let x = m.solve(&rhs)?;
        Some(Cyclotomic {
            order: self.order,
            modulus: self.modulus.clone(),
            coeffs: x,
        })
    }
}

impl fmt::Display for Cyclotomic<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let body = format_terms(self.coeffs.iter().enumerate().map(|(i, c)| {
            let mono = match i {
                0 => String::new(),
                1 => "w".to_string(),
                _ => format!("w^{i}"),
            };
            (c.clone(), mono)
        }));
        write!(f, "{body}@{}", self.order)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{int, rat};

    fn cyc(s: &str) -> Cyclotomic {
        Cyclotomic::parse(s).unwrap()
    }

    #[test]
    fn small_cyclotomic_polynomials() {
        assert_eq!(cyclotomic_polynomial(1), vec![-1, 1]);
        assert_eq!(cyclotomic_polynomial(2), vec![1, 1]);
        assert_eq!(cyclotomic_polynomial(3), vec![1, 1, 1]);
        assert_eq!(cyclotomic_polynomial(4), vec![1, 0, 1]);
        assert_eq!(cyclotomic_polynomial(6), vec![1, -1, 1]);
        assert_eq!(cyclotomic_polynomial(12), vec![1, 0, -1, 0, 1]);
        for k in 1..=32 {
            assert_eq!(cyclotomic_polynomial(k).len() as u32 - 1, euler_phi(k));
        }
    }

    #[test]
    fn products() {
        let w3 = Cyclotomic::root(3, &int(0));
        assert_eq!(w3.times(&w3), cyc("-1 - w@3"));
        let w4 = Cyclotomic::root(4, &int(0));
        assert_eq!(w4.times(&w4), cyc("-1@4"));
        let a = cyc("1 - w@3");
        let b = cyc("1 - w^2@3");
        assert_eq!(a.times(&b), Cyclotomic::constant(3, int(3)));
    }

    #[test]
    fn order_mismatch_is_an_error() {
        let a = cyc("w@3");
        let b = cyc("w@4");
        assert!(matches!(a.checked_mul(&b), Err(Error::DistinctRings { .. })));
    }

    #[test]
    fn galois_examples() {
        let a = cyc("2 + w@3");
        assert_eq!(a.galois_act(2).unwrap(), cyc("1 - w@3"));
        assert_eq!(a.galois_act(1).unwrap(), a);
        assert_eq!(cyc("3@3").galois_act(2).unwrap(), cyc("3@3"));
        assert!(matches!(cyc("w@6").galois_act(2), Err(Error::NotGaloisElement { .. })));
    }

    #[test]
    fn descent_examples() {
        let w = Cyclotomic::root(3, &int(0));
        let a = w.times(&w.times(&w)).scaled(-3);
        assert_eq!(a.descend().unwrap(), int(-3));
        assert_eq!(Cyclotomic::constant(5, int(5)).descend().unwrap(), int(5));
        assert_eq!(w.descend(), Err(Error::DescentFailure { j: 2 }));
        // ω + ω^2 + ω^4 + ω^8 ... orbit sums over subgroups are not invariant under the full group
        let s = cyc("w + w^4@5");
        assert!(s.descend().is_err());
    }

    #[test]
    fn field_inverse() {
        for s in ["1 - w@3", "2 + w^2@5", "w@8", "7/3@1"] {
            let a = cyc(s);
            assert!(a.times(&a.try_inverse().unwrap()).is_unity());
        }
        assert!(cyc("0@5").try_inverse().is_none());
    }

    #[test]
    fn text_round_trip() {
        for s in ["1 - 2*w + w^2@3", "1/2*w@4", "0@7", "-3@1"] {
            let v = cyc(s);
            assert_eq!(cyc(&v.to_string()), v);
        }
        assert_eq!(cyc("1 - 2*w + w^2@3").to_string(), "-3*w@3");
        assert_eq!(cyc("w/2@4").to_string(), "w/2@4");
        assert_eq!(rat(1, 2), cyc("w/2@4").coeffs()[1]);
    }
}
