//! Lifting the transpositions of `S_k` acting on `V^k` to `Spin(V^k)`.

use serde::{Serialize, Serializer};

use super::group::{clifford_group_test, GroupMembership};
use super::{CliffordAlgebra, Multivector};
use crate::caps::Caps;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::quadratic::QuadraticForm;
use crate::rings::{int, Rational};

#[derive(Debug, Clone, Serialize)]
pub struct SpinLift {
    pub form: String,
    pub copies: usize,
    #[serde(serialize_with = "display_all")]
    pub generators: Vec<Multivector>,
    /// Sign with `τ̃_1 τ̃_2 τ̃_1 = λ·τ̃_2 τ̃_1 τ̃_2` before the correction.
    pub lambda: i8,
    pub squares_one: bool,
    pub braid: bool,
    pub far_commute: bool,
    pub swaps_copies: bool,
    #[serde(serialize_with = "display_all")]
    pub norms: Vec<Rational>,
    pub in_spin: Vec<bool>,
}

fn display_all<T: ToString, S: Serializer>(v: &[T], s: S) -> std::result::Result<S::Ok, S::Error> {
    s.collect_seq(v.iter().map(ToString::to_string))
}

impl SpinLift {
    pub fn relations_hold(&self) -> bool {
        self.squares_one && self.braid && self.far_commute && self.swaps_copies
    }
}

/// Builds `τ̃_1..τ̃_{k-1}` in `C(V^k)`: `τ̃_c` is the volume element of the
/// antidiagonal `{(v, -v)}` in copies `c, c+1`, whose form is `2q`. The
/// braid sign `λ` is computed and then absorbed into the even-indexed
/// generators.
pub fn spin_lift(q: &QuadraticForm, k: usize, caps: &Caps) -> Result<SpinLift> {
    let n = q.rank();
    if k < 2 {
        return Err(Error::InvalidArgument("spin lift needs at least two copies".into()));
    }
    if n == 0 || n % 2 == 1 {
        return Err(Error::NotOrientable(format!("{q} has odd rank")));
    }
    if !q.is_orientable() {
        return Err(Error::NotOrientable(q.to_string()));
    }
    caps.check_dim(n * k)?;
    let s = q
        .scale(&int(2))?
        .orientation()
        .witness
        .ok_or_else(|| Error::NotOrientable(format!("2·{q}")))?;
    let alg = CliffordAlgebra::new(q.power(k));

    let mut taus: Vec<Multivector> = (0..k - 1)
        .map(|c| {
            (0..n).fold(Multivector::scalar(&alg, s.clone()), |acc, i| {
                let f = Multivector::generator(&alg, c * n + i).minus(&Multivector::generator(&alg, (c + 1) * n + i));
                acc.mul(&f)
            })
        })
        .collect();

    let mut lambda = 1i8;
    if k >= 3 {
        let l = taus[0].mul(&taus[1]).mul(&taus[0]);
        let r = taus[1].mul(&taus[0]).mul(&taus[1]);
        lambda = if l == r {
            1
        } else if l == r.negated() {
            -1
        } else {
            return Err(Error::RelationFailure("braid products differ by more than a sign".into()));
        };
        if lambda == -1 {
            for t in taus.iter_mut().skip(1).step_by(2) {
                *t = t.negated();
            }
        }
    }

    let one = Multivector::one(&alg);
    let squares_one = taus.iter().all(|t| t.mul(t) == one);
    let braid = taus
        .windows(2)
        .all(|w| w[0].mul(&w[1]).mul(&w[0]) == w[1].mul(&w[0]).mul(&w[1]));
    let mut far_commute = true;
    for i in 0..taus.len() {
        for j in i + 2..taus.len() {
            far_commute &= taus[i].commutes_with(&taus[j]);
        }
    }

    let mut swaps_copies = true;
    let mut norms = Vec::new();
    let mut in_spin = Vec::new();
    for (c, t) in taus.iter().enumerate() {
        match clifford_group_test(t)? {
            GroupMembership::Member {
                phi,
                norm,
                in_spin: spin,
                ..
            } => {
                swaps_copies &= phi.matrix == block_swap(n, k, c);
                norms.push(norm);
                in_spin.push(spin);
            }
            GroupMembership::NotMember { reason } => {
                return Err(Error::NotInCliffordGroup(format!("lift of transposition {}: {reason}", c + 1)));
            }
        }
    }

    Ok(SpinLift {
        form: q.to_string(),
        copies: k,
        generators: taus,
        lambda,
        squares_one,
        braid,
        far_commute,
        swaps_copies,
        norms,
        in_spin,
    })
}

/// Permutation matrix exchanging copies `c` and `c + 1` of `V` in `V^k`.
fn block_swap(n: usize, k: usize, c: usize) -> Matrix {
    let mut m = Matrix::identity(n * k);
    for i in 0..n {
        let (a, b) = (c * n + i, (c + 1) * n + i);
        m.set(a, a, int(0));
        m.set(b, b, int(0));
        m.set(a, b, int(1));
        m.set(b, a, int(1));
    }
    m
}
