//! The Heisenberg operators extending the `ŝl_n` action to `ĝl_n`, and the
//! reduction from rank `kn` to rank `n` they are built from.

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::module::{chevalley, Generator, ModuleParams};
use crate::op::LinOp;
use crate::partition::enumerate_kostant;
use crate::poly::Polynomial;
use crate::raiz::{Raiz, Residue};
use crate::rational::Q;

/// `P_n = Σ_{κ ∈ FK(α_n)} (-1)^{𝒦(κ)+1} x^κ`.
pub fn poly_p(n: u32) -> Polynomial {
    let mut p = Polynomial::zero(n);
    for k in enumerate_kostant(&DimVec::delta(n)) {
        let sign = if k.count() % 2 == 1 { Q::ONE } else { -Q::ONE };
        p.add_term(k, sign);
    }
    p
}

/// `ζ`: the same interval, read modulo `n` instead of modulo `kn`.
pub fn zeta_raiz(theta: &Raiz, n: u32) -> Raiz {
    assert!(theta.rank().is_multiple_of(n), "rank {} is not a multiple of {n}", theta.rank());
    if theta.is_unit() {
        return Raiz::unit(n);
    }
    Raiz::new(n, theta.p(), theta.q()).unwrap()
}

/// The algebra map `x_ϑ ↦ x_{ζ(ϑ)}`.
pub fn zeta(p: &Polynomial, n: u32) -> Polynomial {
    p.map_vars(n, |t| zeta_raiz(t, n))
}

/// A rank `n` and a multiple `kn` of it.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub struct RankPair {
    pub n: u32,
    pub k: u32,
}

impl RankPair {
    pub fn new(n: u32, k: u32) -> Result<RankPair> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if k < 1 {
            return Err(Error::InvalidRank(k));
        }
        Ok(RankPair { n, k })
    }

    pub fn big(&self) -> u32 {
        self.n * self.k
    }

    /// Rank-`kn` parameters `c_j = c_{j mod n} / k`, so that every orbit
    /// `{i, i+n, ..., i+(k-1)n}` sums back to `c_i`.
    pub fn lift_params(&self, params: &ModuleParams) -> ModuleParams {
        let k = Q::from(self.k);
        ModuleParams::new(
            (0..self.big())
                .map(|j| params.values()[(j % self.n) as usize] / k)
                .collect(),
        )
        .unwrap()
    }

    fn orbit(&self, i: Residue) -> impl Iterator<Item = Residue> + '_ {
        let big = self.big();
        (0..self.k).map(move |a| Residue::new(big, (i.value() + a * self.n) as i64).unwrap())
    }

    /// `μ(ξ_i) = Σ_a ξ_{i + an}` on rank `kn`, with the lifted parameters.
    pub fn mu_chevalley(&self, kind: Generator, i: Residue, params: &ModuleParams) -> LinOp {
        let big = self.lift_params(params);
        LinOp::linear_combination(self.big(), self.orbit(i).map(|j| (Q::ONE, chevalley(kind, j, &big))))
    }

    /// `μ(Ẽ(θ)) = Σ_{ζ(ϑ) = θ} Ẽ(ϑ)`.
    pub fn mu_etilde(&self, theta: &Raiz) -> LinOp {
        let big = self.big();
        LinOp::linear_combination(
            big,
            (0..self.k).map(|a| {
                let end = theta.q() as u32 + a * self.n;
                (Q::ONE, LinOp::etilde(Raiz::from_end(big, end, theta.len())))
            }),
        )
    }
}

/// The `n` raiz of dimension `p·α_n`, one ending at each residue.
pub fn full_cycles(n: u32, p: u32) -> impl Iterator<Item = Raiz> {
    (0..n).map(move |end| Raiz::from_end(n, end, p * n))
}

/// `a_p` for `p != 0`: `Σ_{dim θ = pα_n} Ẽ(θ)` if `p > 0`, multiplication by
/// `c_0 ζ(P_{|p|n})` if `p < 0`.
pub fn heis_a(p: i64, params: &ModuleParams) -> LinOp {
    let n = params.rank();
    assert!(p != 0, "use heis_a0 for p = 0");
    let m = p.unsigned_abs() as u32;
    if p > 0 {
        LinOp::linear_combination(n, full_cycles(n, m).map(|t| (Q::ONE, LinOp::etilde(t))))
    } else {
        let poly = zeta(&poly_p(m * n), n).scale(params.c0());
        LinOp::mul(poly, DimVec::delta(n).scale(m as i64)).unwrap()
    }
}

/// `a_0 = c_0 · id`.
pub fn heis_a0(params: &ModuleParams) -> LinOp {
    LinOp::scalar(params.rank(), params.c0())
}
