//! Diagonal quadratic forms over Q and their classical invariants.

use std::fmt;

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, ToPrimitive, Zero};
use serde::{Serialize, Serializer};

use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::rings::{int, parse_rational, Rational};

/// A nondegenerate diagonal form `⟨a_1, …, a_n⟩` over Q.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct QuadraticForm {
    diag: Vec<Rational>,
}

impl QuadraticForm {
    pub fn new(diag: Vec<Rational>) -> Result<Self> {
        if let Some(i) = diag.iter().position(Zero::is_zero) {
            return Err(Error::DegenerateForm(format!("diagonal entry {} is zero", i + 1)));
        }
        Ok(QuadraticForm { diag })
    }

    pub fn from_ints(diag: &[i64]) -> Result<Self> {
        Self::new(diag.iter().map(|&a| int(a)).collect())
    }

    /// Parses a comma-separated list of rationals, e.g. `"1,-1,2/3"`.
    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if s.is_empty() {
            return Ok(QuadraticForm { diag: Vec::new() });
        }
        let diag = s.split(',').map(parse_rational).collect::<Result<Vec<_>>>()?;
        Self::new(diag)
    }

    /// The hyperbolic form `H(Q^m) ≅ ⟨1, -1⟩^m`.
    pub fn hyperbolic(m: usize) -> Result<Self> {
        if m == 0 {
            return Err(Error::InvalidArgument("hyperbolic rank must be at least 1".into()));
        }
        Self::from_ints(&[1, -1].repeat(m))
    }

    pub fn rank(&self) -> usize {
        self.diag.len()
    }

    pub fn diag(&self) -> &[Rational] {
        &self.diag
    }

    pub fn determinant(&self) -> Rational {
        self.diag.iter().product()
    }

    /// Evaluates the form on a coordinate vector.
    pub fn eval(&self, v: &[Rational]) -> Rational {
        self.diag.iter().zip(v).map(|(a, x)| a * x * x).sum()
    }

    pub fn scale(&self, k: &Rational) -> Result<Self> {
        if k.is_zero() {
            return Err(Error::DegenerateForm("scaling by zero".into()));
        }
        Ok(QuadraticForm {
            diag: self.diag.iter().map(|a| a * k).collect(),
        })
    }

    pub fn negated(&self) -> Self {
        QuadraticForm {
            diag: self.diag.iter().map(|a| -a).collect(),
        }
    }

    pub fn orthogonal_sum(&self, other: &Self) -> Self {
        let mut diag = self.diag.clone();
        diag.extend(other.diag.iter().cloned());
        QuadraticForm { diag }
    }

    /// `k` orthogonal copies of the form.
    pub fn power(&self, k: usize) -> Self {
        QuadraticForm {
            diag: (0..k).flat_map(|_| self.diag.iter().cloned()).collect(),
        }
    }

    /// Square class of the determinant, as a square-free integer.
    pub fn discriminant_class(&self) -> BigInt {
        squarefree_part(&self.determinant())
    }

    /// Orientability in the sense of the volume element: the rank is even and
    /// `(-1)^{n(n-1)/2}·a_1⋯a_n` is a square. The witness is the positive `s`
    /// with `s^2·(-1)^{n(n-1)/2}·a_1⋯a_n = 1`.
    pub fn orientation(&self) -> Orientation {
        let n = self.rank();
        if n % 2 == 1 {
            return Orientation {
                orientable: false,
                witness: None,
            };
        }
        let mut d = self.determinant();
        if (n * n.saturating_sub(1) / 2) % 2 == 1 {
            d = -d;
        }
        match rational_sqrt(&d) {
            Some(root) => Orientation {
                orientable: true,
                witness: Some(root.recip()),
            },
            None => Orientation {
                orientable: false,
                witness: None,
            },
        }
    }

    pub fn is_orientable(&self) -> bool {
        self.orientation().orientable
    }

    /// Primes dividing a numerator or denominator of some diagonal entry.
    pub fn bad_primes(&self) -> Vec<u64> {
        let mut ps: Vec<u64> = Vec::new();
        for a in &self.diag {
            for n in [a.numer(), a.denom()] {
                for p in prime_factors(n) {
                    let p = p.to_u64().expect("prime factor fits in u64");
                    if !ps.contains(&p) {
                        ps.push(p);
                    }
                }
            }
        }
        ps.sort_unstable();
        ps
    }
}

impl fmt::Display for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let parts: Vec<String> = self.diag.iter().map(|a| a.to_string()).collect();
        write!(f, "<{}>", parts.join(", "))
    }
}

impl fmt::Debug for QuadraticForm {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "QuadraticForm{self}")
    }
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Orientation {
    pub orientable: bool,
    pub witness: Option<Rational>,
}

/// Result of [`diagonalize`]: `basisᵀ · gram · basis = diag(form)`.
#[derive(Debug, Clone)]
pub struct Diagonalization {
    pub form: QuadraticForm,
    pub basis: Matrix,
}

/// Diagonalizes a symmetric nonsingular Gram matrix by symmetric Gaussian
/// elimination, recording the change of basis.
pub fn diagonalize(gram: &Matrix) -> Result<Diagonalization> {
    let n = gram.rows();
    if n != gram.cols() || !gram.is_symmetric() {
        return Err(Error::InvalidArgument("Gram matrix must be square and symmetric".into()));
    }
    let mut g = gram.clone();
    let mut p = Matrix::identity(n);
    for i in 0..n {
        if g.get(i, i).is_zero() {
            if let Some(j) = (i + 1..n).find(|&j| !g.get(j, j).is_zero()) {
                swap_basis(&mut g, &mut p, i, j);
            } else if let Some(j) = (i + 1..n).find(|&j| !g.get(i, j).is_zero()) {
                // e_i += e_j makes the pivot 2·g_ij
                add_basis(&mut g, &mut p, i, j, &Rational::one());
            } else {
                return Err(Error::DegenerateForm("singular Gram matrix".into()));
            }
        }
        let pivot = g.get(i, i).clone();
        for j in i + 1..n {
            let f = g.get(i, j) / &pivot;
            if !f.is_zero() {
                add_basis(&mut g, &mut p, j, i, &-f);
            }
        }
    }
    let form = QuadraticForm::new((0..n).map(|i| g.get(i, i).clone()).collect())?;
    Ok(Diagonalization { form, basis: p })
}

fn swap_basis(g: &mut Matrix, p: &mut Matrix, i: usize, j: usize) {
    let n = g.rows();
    for t in 0..n {
        let (a, b) = (g.get(i, t).clone(), g.get(j, t).clone());
        g.set(i, t, b);
        g.set(j, t, a);
    }
    for t in 0..n {
        let (a, b) = (g.get(t, i).clone(), g.get(t, j).clone());
        g.set(t, i, b);
        g.set(t, j, a);
        let (a, b) = (p.get(t, i).clone(), p.get(t, j).clone());
        p.set(t, i, b);
        p.set(t, j, a);
    }
}

/// Replaces basis vector `e_i` by `e_i + f·e_j`.
fn add_basis(g: &mut Matrix, p: &mut Matrix, i: usize, j: usize, f: &Rational) {
    let n = g.rows();
    for t in 0..n {
        let v = g.get(i, t) + f * g.get(j, t);
        g.set(i, t, v);
    }
    for t in 0..n {
        let v = g.get(t, i) + f * g.get(t, j);
        g.set(t, i, v);
        let v = p.get(t, i) + f * p.get(t, j);
        p.set(t, i, v);
    }
}

/// A place of Q.
#[derive(Debug, Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Place {
    Prime(u64),
    Infinity,
}

impl Place {
    pub fn validate(self) -> Result<Self> {
        match self {
            Place::Prime(p) if !is_prime(p) => Err(Error::InvalidPlace(p)),
            other => Ok(other),
        }
    }

    pub fn parse(s: &str) -> Result<Self> {
        let s = s.trim();
        if matches!(s, "inf" | "infinity" | "oo") {
            return Ok(Place::Infinity);
        }
        let p: u64 = s.parse().map_err(|_| Error::Parse(format!("invalid place {s:?}")))?;
        Place::Prime(p).validate()
    }
}

impl fmt::Display for Place {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Place::Prime(p) => write!(f, "{p}"),
            Place::Infinity => f.write_str("inf"),
        }
    }
}

impl Serialize for Place {
    fn serialize<S: Serializer>(&self, s: S) -> std::result::Result<S::Ok, S::Error> {
        match self {
            Place::Prime(p) => s.serialize_u64(*p),
            Place::Infinity => s.serialize_str("inf"),
        }
    }
}

/// The Hilbert symbol `(a, b)_v`: `1` iff `z^2 = a x^2 + b y^2` has a
/// nontrivial solution over the completion `Q_v`.
pub fn hilbert_symbol(a: &Rational, b: &Rational, place: Place) -> Result<i8> {
    let place = place.validate()?;
    if a.is_zero() || b.is_zero() {
        return Err(Error::InvalidArgument("Hilbert symbol of zero".into()));
    }
    // p/q has the square class of p·q
    let a = a.numer() * a.denom();
    let b = b.numer() * b.denom();
    Ok(match place {
        Place::Infinity => {
            if a.is_negative() && b.is_negative() {
                -1
            } else {
                1
            }
        }
        Place::Prime(2) => {
            let (alpha, u) = split_valuation(&a, 2);
            let (beta, w) = split_valuation(&b, 2);
            let e = eps(&u) * eps(&w) + alpha * omega(&w) + beta * omega(&u);
            if e % 2 == 0 {
                1
            } else {
                -1
            }
        }
        Place::Prime(p) => {
            let (alpha, u) = split_valuation(&a, p);
            let (beta, w) = split_valuation(&b, p);
            let mut s: i8 = if (alpha * beta * ((p - 1) / 2)) % 2 == 0 { 1 } else { -1 };
            if beta % 2 == 1 {
                s *= legendre(&u, p);
            }
            if alpha % 2 == 1 {
                s *= legendre(&w, p);
            }
            s
        }
    })
}

fn split_valuation(n: &BigInt, p: u64) -> (u64, BigInt) {
    let p = BigInt::from(p);
    let mut n = n.clone();
    let mut v = 0;
    while (&n % &p).is_zero() {
        n /= &p;
        v += 1;
    }
    (v, n)
}

/// `(u - 1)/2 mod 2` for odd `u`.
fn eps(u: &BigInt) -> u64 {
    let r = u.mod_floor(&BigInt::from(4)).to_u64().unwrap();
    (r - 1) / 2
}

/// `(u^2 - 1)/8 mod 2` for odd `u`.
fn omega(u: &BigInt) -> u64 {
    let r = u.mod_floor(&BigInt::from(8)).to_u64().unwrap();
    if r == 3 || r == 5 {
        1
    } else {
        0
    }
}

/// Legendre symbol of a unit `u` modulo an odd prime `p`.
fn legendre(u: &BigInt, p: u64) -> i8 {
    let pb = BigInt::from(p);
    let r = u.mod_floor(&pb).modpow(&BigInt::from((p - 1) / 2), &pb);
    if r.is_one() {
        1
    } else {
        -1
    }
}

/// `Π_{i<j} (a_i, a_j)_v`.
pub fn hasse_witt(q: &QuadraticForm, place: Place) -> Result<i8> {
    let place = place.validate()?;
    let mut s = 1;
    for i in 0..q.rank() {
        for j in i + 1..q.rank() {
            s *= hilbert_symbol(&q.diag[i], &q.diag[j], place)?;
        }
    }
    Ok(s)
}

/// Field-case Brauer–Wall data: rank parity, discriminant square class and
/// the places where the Hasse–Witt invariant is `-1`.
#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct BWTriple {
    pub rank_parity: u8,
    #[serde(serialize_with = "serialize_bigint")]
    pub disc_class: BigInt,
    #[serde(rename = "hasse_minus")]
    pub hasse_minus_primes: Vec<Place>,
}

fn serialize_bigint<S: Serializer>(n: &BigInt, s: S) -> std::result::Result<S::Ok, S::Error> {
    match n.to_i64() {
        Some(v) => s.serialize_i64(v),
        None => s.serialize_str(&n.to_string()),
    }
}

pub fn bw_class(q: &QuadraticForm, prime_bound: u64) -> Result<BWTriple> {
    if let Some(&p) = q.bad_primes().iter().find(|&&p| p > prime_bound) {
        return Err(Error::IncompleteScan {
            prime: p.to_string(),
            bound: prime_bound,
        });
    }
    let mut hasse_minus_primes = Vec::new();
    for p in (2..=prime_bound.max(2)).filter(|&p| is_prime(p)) {
        if hasse_witt(q, Place::Prime(p))? == -1 {
            hasse_minus_primes.push(Place::Prime(p));
        }
    }
    if hasse_witt(q, Place::Infinity)? == -1 {
        hasse_minus_primes.push(Place::Infinity);
    }
    debug_assert!(hasse_minus_primes.len() % 2 == 0, "product formula violated");
    Ok(BWTriple {
        rank_parity: (q.rank() % 2) as u8,
        disc_class: q.discriminant_class(),
        hasse_minus_primes,
    })
}

pub fn is_prime(n: u64) -> bool {
    if n < 2 {
        return false;
    }
    let mut d = 2u64;
    while d * d <= n {
        if n % d == 0 {
            return false;
        }
        d += 1;
    }
    true
}

/// Distinct prime factors of `|n|`, by trial division.
pub fn prime_factors(n: &BigInt) -> Vec<BigInt> {
    let mut n = n.abs();
    let mut out = Vec::new();
    let mut d = BigInt::from(2);
    while &d * &d <= n {
        if (&n % &d).is_zero() {
            out.push(d.clone());
            while (&n % &d).is_zero() {
                n /= &d;
            }
        }
        d += 1;
    }
    if n > BigInt::one() {
        out.push(n);
    }
    out
}

/// Square-free integer in the square class of a nonzero rational.
pub fn squarefree_part(r: &Rational) -> BigInt {
    assert!(!r.is_zero(), "square class of zero");
    let n = r.numer() * r.denom();
    let mut m = n.abs();
    let mut out = BigInt::one();
    for p in prime_factors(&n) {
        let mut e = 0;
        while (&m % &p).is_zero() {
            m /= &p;
            e += 1;
        }
        if e % 2 == 1 {
            out *= &p;
        }
    }
    if n.is_negative() {
        -out
    } else {
        out
    }
}

/// Nonnegative rational square root, when it exists.
pub fn rational_sqrt(r: &Rational) -> Option<Rational> {
    if r.is_negative() {
        return None;
    }
    let n = r.numer().sqrt();
    let d = r.denom().sqrt();
    if &(&n * &n) == r.numer() && &(&d * &d) == r.denom() {
        Some(Rational::new(n, d))
    } else {
        None
    }
}

pub fn is_square(r: &Rational) -> bool {
    rational_sqrt(r).is_some()
}
