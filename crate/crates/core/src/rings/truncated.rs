use std::collections::BTreeMap;
use std::fmt;

use num_bigint::BigInt;
use num_traits::{One, Zero};

use super::rational::Rational;
use super::text::{format_terms, parse_terms};
use super::{QAlgebra, Ring};
use crate::error::{Error, Result};

/// Hard limit from the `u32` bitmask representation.
const MAX_VARS: u32 = 31;

/// An element of `Q[x_1..x_r]/(x_1^2, …, x_r^2)`, stored sparsely by the
/// bitmask of the variables in each square-free monomial.
#[derive(Clone, PartialEq, Eq)]
pub struct Truncated {
    vars: u32,
    terms: BTreeMap<u32, Rational>,
}

impl Truncated {
    pub fn zero(vars: u32) -> Self {
        assert!(vars <= MAX_VARS, "too many variables for a bitmask");
        Truncated {
            vars,
            terms: BTreeMap::new(),
        }
    }

    pub fn constant(vars: u32, c: Rational) -> Self {
        Self::monomial(vars, 0, c)
    }

    /// The variable `x_i` (1-based).
    pub fn var(vars: u32, i: u32) -> Self {
        assert!(i >= 1 && i <= vars, "variable index out of range");
        Self::monomial(vars, 1 << (i - 1), Rational::one())
    }

    pub fn monomial(vars: u32, mask: u32, c: Rational) -> Self {
        let mut t = Self::zero(vars);
        assert!(mask < (1u32 << vars), "monomial uses undeclared variables");
        if !c.is_zero() {
            t.terms.insert(mask, c);
        }
        t
    }

    pub fn vars(&self) -> u32 {
        self.vars
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &Rational)> {
        self.terms.iter().map(|(m, c)| (*m, c))
    }

    /// Coefficient of the monomial with variable set `mask`.
    pub fn coeff(&self, mask: u32) -> Rational {
        self.terms.get(&mask).cloned().unwrap_or_else(Rational::zero)
    }

    pub fn constant_term(&self) -> Rational {
        self.coeff(0)
    }

    fn check_arity(&self, other: &Self) -> Result<()> {
        if self.vars != other.vars {
            Err(Error::ArityMismatch {
                left: self.vars,
                right: other.vars,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_mul(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.times(other))
    }

    pub fn checked_add(&self, other: &Self) -> Result<Self> {
        self.check_arity(other)?;
        Ok(self.plus(other))
    }

    /// Multiplicative inverse via the finite geometric series
    /// `c^{-1} Σ_{i=0}^{r} (-n/c)^i` where `a = c + n`, `n` nilpotent.
    pub fn invert(&self) -> Result<Self> {
        let c = self.constant_term();
        if c.is_zero() {
            return Err(Error::NonUnit(self.to_string()));
        }
        let c_inv = c.recip();
        let mut ratio = self.clone();
        ratio.terms.remove(&0);
        let ratio = ratio.scale(&-c_inv.clone());
        let mut acc = Self::constant(self.vars, Rational::one());
        let mut power = acc.clone();
        for _ in 0..self.vars {
            power = power.times(&ratio);
            if power.terms.is_empty() {
                break;
            }
            acc = acc.plus(&power);
        }
        Ok(acc.scale(&c_inv))
    }

    pub fn scale(&self, c: &Rational) -> Self {
        if c.is_zero() {
            return Self::zero(self.vars);
        }
        Truncated {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, v)| (*m, v * c)).collect(),
        }
    }

    /// Parses a sum of terms in `x1 … xr`; `vars` declares `r`.
    pub fn parse(s: &str, vars: u32) -> Result<Self> {
        if vars > MAX_VARS {
            return Err(Error::Parse(format!("at most {MAX_VARS} variables supported")));
        }
        let mut out = Self::zero(vars);
        for term in parse_terms(s)? {
            let mut mono = Self::constant(vars, term.coeff);
            for (sym, p) in &term.symbols {
                let idx: u32 = sym
                    .strip_prefix('x')
                    .and_then(|d| d.parse().ok())
                    .filter(|&i| i >= 1 && i <= vars)
                    .ok_or_else(|| Error::Parse(format!("unknown variable {sym:?} in {s:?}")))?;
                if *p < 0 {
                    return Err(Error::Parse(format!("negative power of {sym} in {s:?}")));
                }
                mono = mono.times(&Self::var(vars, idx).pow(*p as u32));
            }
            out = out.plus(&mono);
        }
        Ok(out)
    }

    fn monomial_name(mask: u32) -> String {
        (0..32)
            .filter(|i| mask >> i & 1 == 1)
            .map(|i| format!("x{}", i + 1))
            .collect::<Vec<_>>()
            .join("*")
    }
}

impl Ring for Truncated {
    fn zero_like(&self) -> Self {
        Self::zero(self.vars)
    }

    fn one_like(&self) -> Self {
        Self::constant(self.vars, Rational::one())
    }

    fn integer_like(&self, n: &BigInt) -> Self {
        Self::constant(self.vars, Rational::from_integer(n.clone()))
    }

    fn is_nil(&self) -> bool {
        self.terms.is_empty()
    }

    fn plus(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "truncated arity mismatch");
        let mut terms = self.terms.clone();
        for (m, c) in &other.terms {
            let e = terms.entry(*m).or_insert_with(Rational::zero);
            *e += c;
            if e.is_zero() {
                terms.remove(m);
            }
        }
        Truncated {
            vars: self.vars,
            terms,
        }
    }

    fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    fn times(&self, other: &Self) -> Self {
        assert_eq!(self.vars, other.vars, "truncated arity mismatch");
        let mut terms: BTreeMap<u32, Rational> = BTreeMap::new();
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                if ma & mb != 0 {
                    continue;
                }
                *terms.entry(ma | mb).or_insert_with(Rational::zero) += ca * cb;
            }
        }
        terms.retain(|_, c| !c.is_zero());
        Truncated {
            vars: self.vars,
            terms,
        }
    }

    fn negated(&self) -> Self {
        Truncated {
            vars: self.vars,
            terms: self.terms.iter().map(|(m, c)| (*m, -c)).collect(),
        }
    }
}

impl QAlgebra for Truncated {
    fn rational_like(&self, r: &Rational) -> Self {
        Self::constant(self.vars, r.clone())
    }

    fn try_inverse(&self) -> Option<Self> {
        self.invert().ok()
    }
}

impl fmt::Display for Truncated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<u32> = self.terms.keys().copied().collect();
        keys.sort_by_key(|m| (m.count_ones(), *m));
        let s = format_terms(keys.iter().map(|m| (self.terms[m].clone(), Self::monomial_name(*m))));
        f.write_str(&s)
    }
}

impl fmt::Debug for Truncated {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "Truncated[{}]({})", self.vars, self)
    }
}
