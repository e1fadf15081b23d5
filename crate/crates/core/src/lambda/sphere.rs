use num_bigint::BigInt;
use num_traits::Zero;
use serde::Serialize;

use super::bott::bott_virtual;
use super::lines::LineExpr;
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::rings::{int, Rational};

/// Coefficient of `x_1⋯x_r` in `ρᵏ((L_1 - 1)⋯(L_r - 1))`, computed in the
/// truncated ring.
pub fn sphere_coefficient(r: u32, k: u32, caps: &Caps) -> Result<Rational> {
    if r == 0 {
        return Err(Error::InvalidArgument("sphere dimension index must be positive".into()));
    }
    caps.check_vars(r)?;
    let rho = bott_virtual(&LineExpr::sphere_class(r as usize), k, caps)?;
    let top = (1u32 << r) - 1;
    debug_assert_eq!(rho.constant_term(), int(1));
    Ok(rho.coeff(top))
}

/// `(1 + 2^r + … + (k-1)^r) / k^r`.
pub fn sphere_closed_form(r: u32, k: u32) -> Rational {
    let num: BigInt = (1..k).map(|j| BigInt::from(j).pow(r)).sum();
    Rational::new(num, BigInt::from(k).pow(r))
}

/// Parity of `1 + 2^r + … + (k-1)^r`; `1` means the class reduces to
/// `1 + y` modulo 2.
pub fn sphere_mod2_class(r: u32, k: u32) -> u8 {
    let num: BigInt = (1..k).map(|j| BigInt::from(j).pow(r)).sum();
    u8::from(!(num % 2u32).is_zero())
}

#[derive(Debug, Clone, PartialEq, Eq, Serialize)]
pub struct SphereCheck {
    pub r: u32,
    pub k: u32,
    #[serde(serialize_with = "as_string")]
    pub coefficient: Rational,
    #[serde(serialize_with = "as_string")]
    pub closed_form: Rational,
    pub matches: bool,
}

fn as_string<S: serde::Serializer>(v: &Rational, s: S) -> std::result::Result<S::Ok, S::Error> {
    s.serialize_str(&v.to_string())
}

/// Both computations side by side.
pub fn sphere_check(r: u32, k: u32, caps: &Caps) -> Result<SphereCheck> {
    let coefficient = sphere_coefficient(r, k, caps)?;
    let closed_form = sphere_closed_form(r, k);
    Ok(SphereCheck {
        r,
        k,
        matches: coefficient == closed_form,
        coefficient,
        closed_form,
    })
}

/// The truncated-ring coefficient, asserted equal to the closed form.
pub fn sphere_formula(r: u32, k: u32, caps: &Caps) -> Result<Rational> {
    let c = sphere_check(r, k, caps)?;
    if c.matches {
        Ok(c.coefficient)
    } else {
        Err(Error::FormulaMismatch {
            r,
            k,
            computed: c.coefficient.to_string(),
            closed_form: c.closed_form.to_string(),
        })
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::rings::rat;

    /// Bernoulli numbers with `B_1 = +1/2`.
    fn bernoulli(n: usize) -> Rational {
        let mut b = vec![rat(1, 1)];
        for m in 1..=n {
            let mut s = Rational::zero();
            let mut binom = BigInt::from(1);
            for (j, bj) in b.iter().enumerate() {
                s += Rational::from_integer(binom.clone()) * bj;
                binom = binom * (m + 1 - j) / (j + 1);
            }
            b.push(-s / Rational::from_integer(BigInt::from(m + 1)));
        }
        if n == 1 {
            -b[1].clone()
        } else {
            b[n].clone()
        }
    }

    #[test]
    fn closed_form_values() {
        assert_eq!(sphere_closed_form(1, 2), rat(1, 2));
        assert_eq!(sphere_closed_form(2, 3), rat(5, 9));
        assert_eq!(sphere_mod2_class(4, 3), 1);
        assert_eq!(sphere_mod2_class(8, 7), 1);
        assert_eq!(sphere_mod2_class(4, 5), 0);
    }

    #[test]
    fn agrees_where_the_closed_form_holds() {
        let caps = Caps::default();
        for k in 2..8 {
            assert_eq!(sphere_formula(1, k, &caps).unwrap(), rat(k as i64 - 1, 2));
        }
        assert_eq!(sphere_formula(2, 2, &caps).unwrap(), rat(1, 4));
    }

    #[test]
    fn truncated_ring_matches_bernoulli_oracle() {
        let caps = Caps::default();
        for r in 1..=5u32 {
            for k in 2..8u32 {
                let kr = Rational::from_integer(BigInt::from(k).pow(r));
                let expected = (kr - int(1)) * bernoulli(r as usize) / int(r as i64);
                assert_eq!(sphere_coefficient(r, k, &caps).unwrap(), expected, "r={r} k={k}");
            }
        }
    }

    #[test]
    fn closed_form_disagrees_from_r_two() {
        let caps = Caps::default();
        let c = sphere_check(2, 3, &caps).unwrap();
        assert_eq!((c.coefficient.clone(), c.closed_form.clone(), c.matches), (rat(2, 3), rat(5, 9), false));
        assert!(matches!(sphere_formula(2, 3, &caps), Err(Error::FormulaMismatch { .. })));
    }
}
