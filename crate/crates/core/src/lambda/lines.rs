use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Signed, Zero};

use crate::error::{Error, Result};
use crate::rings::text::{format_terms, parse_terms};
use crate::rings::{Rational, Ring};

/// A Laurent polynomial with integer coefficients in line symbols
/// `L_1, L_2, …`, keyed by exponent vectors without trailing zeros.
#[derive(Clone, PartialEq, Eq, Hash, Default)]
pub struct LineExpr {
    terms: BTreeMap<Vec<i64>, BigInt>,
}

fn trim(mut e: Vec<i64>) -> Vec<i64> {
    while e.last() == Some(&0) {
        e.pop();
    }
    e
}

impl LineExpr {
    pub fn zero() -> Self {
        LineExpr::default()
    }

    pub fn constant(c: i64) -> Self {
        Self::monomial(Vec::new(), BigInt::from(c))
    }

    pub fn monomial(exps: Vec<i64>, c: BigInt) -> Self {
        let mut terms = BTreeMap::new();
        if !c.is_zero() {
            terms.insert(trim(exps), c);
        }
        LineExpr { terms }
    }

    /// The line symbol `L_i` (1-based).
    pub fn line(i: usize) -> Self {
        assert!(i >= 1, "line symbols are 1-based");
        let mut e = vec![0; i];
        e[i - 1] = 1;
        Self::monomial(e, BigInt::one())
    }

    /// `x_{2r} = (L_1 - 1)⋯(L_r - 1)`.
    pub fn sphere_class(r: usize) -> Self {
        (1..=r).fold(Self::constant(1), |acc, i| acc.times(&Self::line(i).minus(&Self::constant(1))))
    }

    pub fn terms(&self) -> impl Iterator<Item = (&[i64], &BigInt)> {
        self.terms.iter().map(|(e, c)| (e.as_slice(), c))
    }

    /// Largest symbol index that occurs.
    pub fn symbol_count(&self) -> usize {
        self.terms.keys().map(Vec::len).max().unwrap_or(0)
    }

    /// Sum of the coefficients: the rank of the virtual class.
    pub fn rank(&self) -> BigInt {
        self.terms.values().sum()
    }

    /// Whether every coefficient is positive, i.e. the class of a genuine
    /// sum of line bundles.
    pub fn is_effective(&self) -> bool {
        self.terms.values().all(Signed::is_positive)
    }

    /// The monomials with multiplicity, for effective expressions.
    pub fn lines(&self) -> Result<Vec<LineExpr>> {
        if !self.is_effective() {
            return Err(Error::NotEffective(self.to_string()));
        }
        let mut out = Vec::new();
        for (e, c) in &self.terms {
            let n = usize::try_from(c).map_err(|_| Error::InvalidArgument("line multiplicity too large".into()))?;
            out.extend(std::iter::repeat_n(Self::monomial(e.clone(), BigInt::one()), n));
        }
        Ok(out)
    }

    /// `L_i ↦ L_i^{-1}`.
    pub fn dual(&self) -> Self {
        self.map_exponents(|e| -e)
    }

    pub(crate) fn map_exponents(&self, f: impl Fn(i64) -> i64) -> Self {
        let mut out = Self::zero();
        for (e, c) in &self.terms {
            out.add_term(e.iter().map(|&x| f(x)).collect(), c.clone());
        }
        out
    }

    fn add_term(&mut self, e: Vec<i64>, c: BigInt) {
        let e = trim(e);
        let v = self.terms.entry(e.clone()).or_insert_with(BigInt::zero);
        *v += c;
        if v.is_zero() {
            self.terms.remove(&e);
        }
    }

    /// Parses integer combinations of products of `Li` and `Li^n`, e.g.
    /// `"1 + 2*L1*L2^-1 - L3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let mut out = Self::zero();
        for term in parse_terms(s)? {
            if !term.coeff.is_integer() {
                return Err(Error::Parse(format!("non-integer coefficient {} in {s:?}", term.coeff)));
            }
            let mut e: Vec<i64> = Vec::new();
            for (sym, p) in &term.symbols {
                let i: usize = sym
                    .strip_prefix('L')
                    .and_then(|d| d.parse().ok())
                    .filter(|&i| i >= 1)
                    .ok_or_else(|| Error::Parse(format!("unknown symbol {sym:?} in {s:?}")))?;
                if e.len() < i {
                    e.resize(i, 0);
                }
                e[i - 1] += p;
            }
            out.add_term(e, term.coeff.to_integer());
        }
        Ok(out)
    }

    fn monomial_name(e: &[i64]) -> String {
        let parts: Vec<String> = e
            .iter()
            .enumerate()
            .filter(|(_, &x)| x != 0)
            .map(|(i, &x)| if x == 1 { format!("L{}", i + 1) } else { format!("L{}^{x}", i + 1) })
            .collect();
        parts.join("*")
    }
}

impl Ring for LineExpr {
    fn zero_like(&self) -> Self {
        Self::zero()
    }
    fn one_like(&self) -> Self {
        Self::constant(1)
    }
    fn integer_like(&self, n: &BigInt) -> Self {
        Self::monomial(Vec::new(), n.clone())
    }
    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }
    fn plus(&self, other: &Self) -> Self {
        let mut out = self.clone();
        for (e, c) in &other.terms {
            out.add_term(e.clone(), c.clone());
        }
        out
    }
    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }
    fn times(&self, other: &Self) -> Self {
        let mut out = Self::zero();
        for (a, ca) in &self.terms {
            for (b, cb) in &other.terms {
                let n = a.len().max(b.len());
                let e = (0..n)
                    .map(|i| a.get(i).copied().unwrap_or(0) + b.get(i).copied().unwrap_or(0))
                    .collect();
                out.add_term(e, ca * cb);
            }
        }
        out
    }
    fn negated(&self) -> Self {
        LineExpr {
            terms: self.terms.iter().map(|(e, c)| (e.clone(), -c)).collect(),
        }
    }
}

impl fmt::Display for LineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<&Vec<i64>> = self.terms.keys().collect();
        let width = self.symbol_count();
        keys.sort_by_key(|e| {
            let mut padded = (*e).clone();
            padded.resize(width, 0);
            (e.iter().map(|x| x.abs()).sum::<i64>(), std::cmp::Reverse(padded))
        });
        f.write_str(&format_terms(
            keys.into_iter()
                .map(|e| (Rational::from_integer(self.terms[e].clone()), Self::monomial_name(e))),
        ))
    }
}

impl fmt::Debug for LineExpr {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "LineExpr({self})")
    }
}
