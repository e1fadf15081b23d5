//! Clifford algebras `C(V, q)` of diagonal forms, in the basis of blades
//! `e_I = e_{i_1} ⋯ e_{i_r}` indexed by bitmasks.

mod forms;
mod group;
mod spin_lift;

use std::collections::BTreeMap;
use std::fmt;
use std::sync::Arc;

use num_traits::{One, Zero};

use crate::error::{Error, Result};
use crate::quadratic::QuadraticForm;
use crate::rings::text::{format_terms, parse_terms};
use crate::rings::{QAlgebra, Rational};

pub use forms::{graded_tensor_check, phi_gram, untwist_iso, UntwistReport};
pub use group::{clifford_group_test, volume_element, GroupMembership, OrthogonalMatrix};
pub use spin_lift::{spin_lift, SpinLift};

/// Largest rank for which the contraction table is precomputed.
const TABLE_RANK: usize = 16;

/// The algebra `C(V, q)` of a diagonal form.
#[derive(Debug)]
pub struct CliffordAlgebra {
    form: QuadraticForm,
    metric: Option<Vec<Rational>>,
}

impl CliffordAlgebra {
    pub fn new(form: QuadraticForm) -> Arc<Self> {
        assert!(form.rank() <= 31, "Clifford rank above 31 is not representable");
        let metric = (form.rank() <= TABLE_RANK).then(|| {
            let mut t = vec![Rational::one(); 1 << form.rank()];
            for mask in 1..t.len() {
                let low = mask.trailing_zeros() as usize;
                t[mask] = &t[mask & (mask - 1)] * &form.diag()[low];
            }
            t
        });
        Arc::new(CliffordAlgebra { form, metric })
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.form
    }

    pub fn rank(&self) -> usize {
        self.form.rank()
    }

    pub fn dim(&self) -> usize {
        1 << self.rank()
    }

    /// `Π_{i ∈ mask} a_i`, the scalar produced when the blades in `mask` contract.
    pub fn metric(&self, mask: u32) -> Rational {
        match &self.metric {
            Some(t) => t[mask as usize].clone(),
            None => bits(mask).map(|i| self.form.diag()[i].clone()).product(),
        }
    }

    /// `e_A · e_B = c · e_{A xor B}`.
    pub fn blade_mul(&self, a: u32, b: u32) -> (u32, Rational) {
        let c = self.metric(a & b);
        (a ^ b, if reorder_is_odd(a, b) { -c } else { c })
    }

    pub fn top_mask(&self) -> u32 {
        ((1u64 << self.rank()) - 1) as u32
    }
}

fn same_algebra(a: &Arc<CliffordAlgebra>, b: &Arc<CliffordAlgebra>) -> bool {
    Arc::ptr_eq(a, b) || a.form == b.form
}

/// Indices of the set bits, ascending.
pub(crate) fn bits(mask: u32) -> impl Iterator<Item = usize> {
    (0..32).filter(move |i| mask >> i & 1 == 1)
}

/// Sign of reordering `e_A e_B` into `e_{A xor B}` before contracting:
/// the parity of pairs `i ∈ A, j ∈ B` with `i > j`.
pub(crate) fn reorder_is_odd(a: u32, b: u32) -> bool {
    let mut a = a >> 1;
    let mut count = 0;
    while a != 0 {
        count += (a & b).count_ones();
        a >>= 1;
    }
    count & 1 == 1
}

/// `(-1)^{r(r-1)/2}` for a blade of grade `r`: the sign of reversing it.
pub(crate) fn reversal_is_odd(mask: u32) -> bool {
    let r = mask.count_ones();
    (r * r.saturating_sub(1) / 2) % 2 == 1
}

/// An element of `C(V, q)` with coefficients in a Q-algebra.
#[derive(Clone)]
pub struct Multivector<R = Rational> {
    algebra: Arc<CliffordAlgebra>,
    terms: BTreeMap<u32, R>,
}

impl<R: QAlgebra> Multivector<R> {
    pub fn zero(algebra: &Arc<CliffordAlgebra>) -> Self {
        Multivector {
            algebra: algebra.clone(),
            terms: BTreeMap::new(),
        }
    }

    pub fn blade(algebra: &Arc<CliffordAlgebra>, mask: u32, c: R) -> Self {
        assert!(mask <= algebra.top_mask(), "blade outside the algebra");
        let mut terms = BTreeMap::new();
        if !c.is_nil() {
            terms.insert(mask, c);
        }
        Multivector {
            algebra: algebra.clone(),
            terms,
        }
    }

    pub fn scalar(algebra: &Arc<CliffordAlgebra>, c: R) -> Self {
        Self::blade(algebra, 0, c)
    }

    pub fn from_terms(algebra: &Arc<CliffordAlgebra>, terms: impl IntoIterator<Item = (u32, R)>) -> Self {
        let mut out = Self::zero(algebra);
        for (mask, c) in terms {
            assert!(mask <= algebra.top_mask(), "blade outside the algebra");
            out.accumulate(mask, c);
        }
        out
    }

    fn accumulate(&mut self, mask: u32, c: R) {
        use std::collections::btree_map::Entry;
        match self.terms.entry(mask) {
            Entry::Vacant(e) => {
                if !c.is_nil() {
                    e.insert(c);
                }
            }
            Entry::Occupied(mut e) => {
                let v = e.get().plus(&c);
                if v.is_nil() {
                    e.remove();
                } else {
                    *e.get_mut() = v;
                }
            }
        }
    }

    pub fn algebra(&self) -> &Arc<CliffordAlgebra> {
        &self.algebra
    }

    pub fn form(&self) -> &QuadraticForm {
        &self.algebra.form
    }

    pub fn terms(&self) -> impl Iterator<Item = (u32, &R)> {
        self.terms.iter().map(|(&m, c)| (m, c))
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn coeff(&self, mask: u32) -> Option<&R> {
        self.terms.get(&mask)
    }

    /// Whether the element lies in the scalars `R·1`.
    pub fn is_scalar(&self) -> bool {
        self.terms.keys().all(|&m| m == 0)
    }

    pub fn scalar_part(&self) -> Option<&R> {
        self.terms.get(&0)
    }

    /// `Some(parity)` when every blade present has the same grade parity.
    /// The zero element is reported as even.
    pub fn degree(&self) -> Option<u8> {
        let mut parities = self.terms.keys().map(|m| (m.count_ones() % 2) as u8);
        let first = parities.next().unwrap_or(0);
        parities.all(|p| p == first).then_some(first)
    }

    pub fn grade_part(&self, r: u32) -> Self {
        Multivector {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().filter(|(m, _)| m.count_ones() == r).map(|(&m, c)| (m, c.clone())).collect(),
        }
    }

    pub fn plus(&self, other: &Self) -> Self {
        assert!(same_algebra(&self.algebra, &other.algebra), "Clifford algebra mismatch");
        let mut out = self.clone();
        for (&m, c) in &other.terms {
            out.accumulate(m, c.clone());
        }
        out
    }

    pub fn minus(&self, other: &Self) -> Self {
        self.plus(&other.negated())
    }

    pub fn negated(&self) -> Self {
        self.map(|_, c| c.negated())
    }

    pub fn scale(&self, k: &R) -> Self {
        let mut out = self.map(|_, c| c.times(k));
        out.terms.retain(|_, c| !c.is_nil());
        out
    }

    fn map(&self, f: impl Fn(u32, &R) -> R) -> Self {
        Multivector {
            algebra: self.algebra.clone(),
            terms: self.terms.iter().map(|(&m, c)| (m, f(m, c))).collect(),
        }
    }

    /// Product in `C(V, q)`; errors when the operands live in different algebras.
    pub fn try_mul(&self, other: &Self) -> Result<Self> {
        if !same_algebra(&self.algebra, &other.algebra) {
            return Err(Error::FormMismatch);
        }
        let mut out = Self::zero(&self.algebra);
        for (&ma, ca) in &self.terms {
            for (&mb, cb) in &other.terms {
                let mut c = ca.times(cb);
                let shared = ma & mb;
                if shared != 0 {
                    let m = self.algebra.metric(shared);
                    if !m.is_one() {
                        c = c.times(&c.rational_like(&m));
                    }
                }
                if reorder_is_odd(ma, mb) {
                    c = c.negated();
                }
                out.accumulate(ma ^ mb, c);
            }
        }
        Ok(out)
    }

    /// Product in `C(V, q)`.
    ///
    /// # Panics
    /// If the operands belong to different algebras; see [`Self::try_mul`].
    pub fn mul(&self, other: &Self) -> Self {
        self.try_mul(other).expect("Clifford algebra mismatch")
    }

    /// The involution `a ↦ ā`, reversing the order of every blade.
    pub fn bar(&self) -> Self {
        self.map(|m, c| if reversal_is_odd(m) { c.negated() } else { c.clone() })
    }

    /// The grade automorphism, `(-1)^r` on blades of grade `r`.
    pub fn grade_involution(&self) -> Self {
        self.map(|m, c| if m.count_ones() % 2 == 1 { c.negated() } else { c.clone() })
    }

    /// The spinorial norm `N(a) = a·ā`, when that product is a scalar.
    pub fn spinorial_norm(&self) -> Result<R> {
        let n = self.mul(&self.bar());
        if !n.is_scalar() {
            return Err(Error::NotInCliffordGroup(format!("{n:?} is not a scalar")));
        }
        match n.scalar_part() {
            Some(c) => Ok(c.clone()),
            None => Err(Error::NotInCliffordGroup("norm is zero".into())),
        }
    }

    /// Coefficient of the top blade `e_1 ⋯ e_n`.
    pub fn top_coeff(&self) -> Option<&R> {
        self.terms.get(&self.algebra.top_mask())
    }

    pub fn commutes_with(&self, other: &Self) -> bool {
        self.mul(other) == other.mul(self)
    }

    pub fn anticommutes_with(&self, other: &Self) -> bool {
        self.mul(other).plus(&other.mul(self)).is_zero()
    }
}

impl Multivector<Rational> {
    /// The generator `e_{i+1}` (0-based index).
    pub fn generator(algebra: &Arc<CliffordAlgebra>, i: usize) -> Self {
        assert!(i < algebra.rank(), "generator index out of range");
        Self::blade(algebra, 1 << i, Rational::one())
    }

    pub fn one(algebra: &Arc<CliffordAlgebra>) -> Self {
        Self::scalar(algebra, Rational::one())
    }

    pub fn pow(&self, e: u32) -> Self {
        (0..e).fold(Self::one(&self.algebra), |acc, _| acc.mul(self))
    }

    /// The vector `Σ v_i e_i`.
    pub fn vector(algebra: &Arc<CliffordAlgebra>, coords: &[Rational]) -> Self {
        assert_eq!(coords.len(), algebra.rank());
        Self::from_terms(algebra, coords.iter().enumerate().map(|(i, c)| (1u32 << i, c.clone())))
    }

    /// Parses a sum of terms such as `"1 + 2*e1e3 - e2/3"`. Generators are
    /// 1-based; a monomial may also be written `e1*e3`, and factors are
    /// multiplied in the order given.
    pub fn parse(algebra: &Arc<CliffordAlgebra>, s: &str) -> Result<Self> {
        let mut out = Self::zero(algebra);
        for term in parse_terms(s)? {
            let mut mono = Self::one(algebra);
            for (sym, exp) in &term.symbols {
                if *exp < 0 {
                    return Err(Error::Parse(format!("negative power of {sym} in {s:?}")));
                }
                let gens = parse_blade_symbol(sym, algebra.rank())
                    .ok_or_else(|| Error::Parse(format!("invalid blade {sym:?} in {s:?}")))?;
                for _ in 0..*exp {
                    for &g in &gens {
                        mono = mono.mul(&Self::generator(algebra, g));
                    }
                }
            }
            out = out.plus(&mono.scale(&term.coeff));
        }
        Ok(out)
    }

    /// Coefficients on the blade basis, indexed by mask.
    pub fn to_dense(&self) -> Vec<Rational> {
        let mut v = vec![Rational::zero(); self.algebra.dim()];
        for (&m, c) in &self.terms {
            v[m as usize] = c.clone();
        }
        v
    }

    pub fn from_dense(algebra: &Arc<CliffordAlgebra>, v: &[Rational]) -> Self {
        Self::from_terms(algebra, v.iter().enumerate().map(|(m, c)| (m as u32, c.clone())))
    }
}

/// Splits `"e1e3"` into `[0, 2]`.
fn parse_blade_symbol(sym: &str, rank: usize) -> Option<Vec<usize>> {
    let mut out = Vec::new();
    for part in sym.split('e').skip(1) {
        let i: usize = part.parse().ok()?;
        if i == 0 || i > rank {
            return None;
        }
        out.push(i - 1);
    }
    (sym.starts_with('e') && !out.is_empty()).then_some(out)
}

pub(crate) fn blade_name(mask: u32) -> String {
    bits(mask).map(|i| format!("e{}", i + 1)).collect()
}

impl<R: QAlgebra> PartialEq for Multivector<R> {
    fn eq(&self, other: &Self) -> bool {
        same_algebra(&self.algebra, &other.algebra) && self.terms == other.terms
    }
}

impl fmt::Display for Multivector<Rational> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut keys: Vec<u32> = self.terms.keys().copied().collect();
        keys.sort_by_key(|&m| (m.count_ones(), m));
        f.write_str(&format_terms(keys.into_iter().map(|m| (self.terms[&m].clone(), blade_name(m)))))
    }
}

impl<R: QAlgebra> fmt::Debug for Multivector<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.terms.iter().map(|(&m, c)| format!("{c:?}*{}", blade_name(m))).collect();
        write!(f, "[{}] in C{}", parts.join(" + "), self.algebra.form)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::{int, Cyclotomic, Ring};

    fn alg(s: &str) -> Arc<CliffordAlgebra> {
        CliffordAlgebra::new(QuadraticForm::parse(s).unwrap())
    }

    fn mv(a: &Arc<CliffordAlgebra>, s: &str) -> Multivector {
        Multivector::parse(a, s).unwrap()
    }

    #[test]
    fn product_examples() {
        let a = alg("2,-1");
        assert_eq!(mv(&a, "e1").mul(&mv(&a, "e1")), mv(&a, "2"));
        let h = alg("1,-1");
        assert_eq!(mv(&h, "e1e2").mul(&mv(&h, "e1")), mv(&h, "-e2"));
        let b = mv(&h, "e1e2");
        assert_eq!(b.mul(&b), mv(&h, "1"));
        assert_eq!(mv(&h, "e2*e1"), mv(&h, "-e1e2"));
        assert_eq!(mv(&a, "e1e1"), mv(&a, "2"));
    }

    #[test]
    fn form_mismatch() {
        let a = alg("1,-1");
        let b = alg("1,1");
        assert_eq!(mv(&a, "e1").try_mul(&mv(&b, "e1")), Err(Error::FormMismatch));
    }

    #[test]
    fn bar_examples() {
        let a = alg("1,-1,3");
        assert_eq!(mv(&a, "e1").bar(), mv(&a, "e1"));
        assert_eq!(mv(&a, "e1e2").bar(), mv(&a, "-e1e2"));
        let x = mv(&a, "1 + 2*e1 - e1e2 + e1e2e3/5");
        assert_eq!(x.bar().bar(), x);
        assert_eq!(x.bar(), mv(&a, "1 + 2*e1 + e1e2 - e1e2e3/5"));
    }

    #[test]
    fn norm_examples() {
        let a = alg("3");
        assert_eq!(mv(&a, "e1").spinorial_norm().unwrap(), int(3));
        let h = alg("1,-1");
        assert_eq!(mv(&h, "e1e2").spinorial_norm().unwrap(), int(-1));
        let x = mv(&h, "e1 + 2*e2");
        assert_eq!(x.scale(&int(5)).spinorial_norm().unwrap(), x.spinorial_norm().unwrap() * int(25));
        assert!(matches!(mv(&h, "1 + e1").spinorial_norm(), Err(Error::NotInCliffordGroup(_))));
    }

    #[test]
    fn degree_and_grades() {
        let a = alg("1,1,1");
        assert_eq!(mv(&a, "e1 + e1e2e3").degree(), Some(1));
        assert_eq!(mv(&a, "1 + e1e2").degree(), Some(0));
        assert_eq!(mv(&a, "1 + e1").degree(), None);
        assert_eq!(mv(&a, "1 + e1 + e2e3").grade_part(2), mv(&a, "e2e3"));
        assert_eq!(mv(&a, "1 + e1").grade_involution(), mv(&a, "1 - e1"));
    }

    #[test]
    fn text_round_trip() {
        let a = alg("1,-1,2/3,5");
        for s in ["0", "1", "-e1", "3*e1e3/4 - e2 + 7", "e1e2e3e4/2 + e4"] {
            let x = mv(&a, s);
            assert_eq!(mv(&a, &x.to_string()), x);
        }
        assert_eq!(mv(&a, "e3e1 + 1").to_string(), "1 - e1e3");
        assert!(Multivector::parse(&a, "e5").is_err());
        assert!(Multivector::parse(&a, "f1").is_err());
        assert!(Multivector::parse(&a, "e0").is_err());
    }

    #[test]
    fn cyclotomic_coefficients() {
        let a = alg("1,-1");
        let w = Cyclotomic::root(3, &int(0));
        let x = Multivector::blade(&a, 0b01, w.clone());
        let y = Multivector::blade(&a, 0b10, w.clone());
        let xy = x.mul(&y);
        assert_eq!(xy, Multivector::blade(&a, 0b11, w.times(&w)));
        assert_eq!(x.mul(&x), Multivector::scalar(&a, w.times(&w)));
        assert!(x.anticommutes_with(&y));
    }
}
