use serde::Serialize;

use super::lines::LineExpr;
use super::vector::LambdaVector;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rings::{int, Cyclotomic, QAlgebra, Ring, Truncated};

fn check_order(k: u32, caps: &Caps) -> Result<()> {
    if k < 2 {
        return Err(Error::InvalidArgument(format!("Bott class needs k >= 2, got {k}")));
    }
    caps.check_order(k)
}

/// `1 + x + … + x^{k-1}`.
fn geometric<R: Ring>(x: &R, k: u32) -> R {
    let mut acc = x.one_like();
    let mut p = x.one_like();
    for _ in 1..k {
        p = p.times(x);
        acc = acc.plus(&p);
    }
    acc
}

/// `ρᵏ` of an effective sum of lines: `Π_M (1 + M + … + M^{k-1})`.
pub fn bott_lines(x: &LineExpr, k: u32, caps: &Caps) -> Result<LineExpr> {
    check_order(k, caps)?;
    Ok(x.lines()?
        .iter()
        .fold(LineExpr::constant(1), |acc, m| acc.times(&geometric(m, k))))
}

/// `ρᵏ` of a virtual class in `Q[x_1..x_r]/(x_i^2)` with `L_i ↦ 1 + x_i`,
/// negative multiplicities contributing inverses.
pub fn bott_virtual(x: &LineExpr, k: u32, caps: &Caps) -> Result<Truncated> {
    let r = x.symbol_count();
    caps.check_vars(r as u32)?;
    let vars = r as u32;
    let images: Vec<Truncated> = (1..=vars)
        .map(|i| Truncated::constant(vars, int(1)).plus(&Truncated::var(vars, i)))
        .collect();
    bott_virtual_in(x, k, vars, &images, caps)
}

/// As [`bott_virtual`], with explicit unit images of `L_1..L_r`.
pub fn bott_virtual_in(x: &LineExpr, k: u32, vars: u32, images: &[Truncated], caps: &Caps) -> Result<Truncated> {
    check_order(k, caps)?;
    if images.len() < x.symbol_count() {
        return Err(Error::InvalidArgument(format!(
            "{} line symbols but {} images",
            x.symbol_count(),
            images.len()
        )));
    }
    let one = Truncated::constant(vars, int(1));
    let mut inverses: Vec<Option<Truncated>> = vec![None; images.len()];
    let mut acc = one.clone();
    for (exps, c) in x.terms() {
        let mut m = one.clone();
        for (i, &e) in exps.iter().enumerate() {
            let base = if e < 0 {
                if inverses[i].is_none() {
                    inverses[i] = Some(images[i].invert()?);
                }
                inverses[i].clone().expect("just filled")
            } else {
                images[i].clone()
            };
            m = m.times(&base.pow(e.unsigned_abs() as u32));
        }
        let rho = geometric(&m, k);
        let n = u32::try_from(c.magnitude()).map_err(|_| Error::InvalidArgument("multiplicity too large".into()))?;
        let factor = if c.sign() == num_bigint::Sign::Minus {
            rho.invert()?.pow(n)
        } else {
            rho.pow(n)
        };
        acc = acc.times(&factor);
    }
    Ok(acc)
}

/// `G(t) = Σ λʲ tʲ` evaluated at `t = -z^r` in `R ⊗ Ω_k`.
fn g_at<R: Ring>(v: &LambdaVector<R>, k: u32, r: i64) -> Cyclotomic<R> {
    let proto = v.one();
    let mut acc = Cyclotomic::constant(k, proto.zero_like());
    for j in 0..=v.rank() {
        let mut t = Cyclotomic::root_power(k, r * j as i64, proto).times(&Cyclotomic::constant(k, v.lambda(j)));
        if j % 2 == 1 {
            t = t.negated();
        }
        acc = acc.plus(&t);
    }
    acc
}

/// `ρᵏ(v) = Π_{r=1}^{k-1} G_v(-z^r)`, computed over `Ω_k` and descended.
pub fn bott_cyclotomic<R: Ring>(v: &LambdaVector<R>, k: u32, caps: &Caps) -> Result<R> {
    check_order(k, caps)?;
    let prod = (1..k as i64).fold(Cyclotomic::constant(k, v.one().clone()), |acc, r| acc.times(&g_at(v, k, r)));
    prod.descend()
}

#[derive(Debug, Clone, PartialEq, Serialize)]
pub struct SerreRoot<R> {
    pub value: R,
    /// Set when `n(k-1)/4` is not an integer and the sign was left out.
    pub sign_ambiguous: bool,
}

/// Square root of `ρᵏ(v)` for a self-dual class of even rank `n` and odd
/// `k`: `(-1)^{n(k-1)/4} Π_{r=1}^{(k-1)/2} G_v(-z^r) z^{-nr/2}`.
pub fn serre_sqrt<R: Ring>(v: &LambdaVector<R>, k: u32, caps: &Caps) -> Result<SerreRoot<R>> {
    check_order(k, caps)?;
    if k % 2 == 0 {
        return Err(Error::InvalidArgument(format!("square root needs odd k, got {k}")));
    }
    let n = v.rank();
    if n % 2 == 1 {
        return Err(Error::InvalidArgument(format!("square root needs even rank, got {n}")));
    }
    v.check_self_dual()?;
    let mut prod = Cyclotomic::constant(k, v.one().clone());
    for r in 1..=((k - 1) / 2) as i64 {
        let shift = Cyclotomic::root_power(k, -(n as i64) * r / 2, v.one());
        prod = prod.times(&g_at(v, k, r)).times(&shift);
    }
    let twice = n * (k as usize - 1);
    let sign_ambiguous = twice % 4 != 0;
    if !sign_ambiguous && (twice / 4) % 2 == 1 {
        prod = prod.negated();
    }
    Ok(SerreRoot {
        value: prod.descend()?,
        sign_ambiguous,
    })
}

/// `ρ̄_k = ρ_k / √ρᵏ(v)`.
pub fn corrected_bott<R: QAlgebra>(rho_k: &R, v: &LambdaVector<R>, k: u32, caps: &Caps) -> Result<R> {
    let root = serre_sqrt(v, k, caps)?;
    let inv = root
        .value
        .try_inverse()
        .ok_or_else(|| Error::NonUnit(format!("{:?}", root.value)))?;
    Ok(rho_k.times(&inv))
}
