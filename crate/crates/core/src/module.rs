//! The Chevalley operators on `N = Q[x_θ]` and the matrix coefficients of
//! the dual module `M` in the basis of Kostant partitions.

use alloc::vec::Vec;
use core::fmt;

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::op::{matrix_of, LinOp};
use crate::partition::{enumerate_kostant, KostantPartition};
use crate::raiz::{Raiz, Residue};
use crate::rational::Q;

/// The lowest weight `(c_i)` of the module.
#[derive(Clone, Debug, PartialEq, Eq, Hash)]
pub struct ModuleParams {
    c: Vec<Q>,
}

impl ModuleParams {
    pub fn new(c: Vec<Q>) -> Result<ModuleParams> {
        if c.len() < 2 {
            return Err(Error::InvalidRank(c.len() as u32));
        }
        Ok(ModuleParams { c })
    }

    /// Parameters of a curve of genus `g` with normal bundle degree `d` and
    /// line bundle degrees `deg_l[0..n]`, extended by `deg L_{p+n} = deg L_p + d`:
    /// `c_i = (2 - 2g) + deg L_{i+1} - deg L_i`.
    pub fn from_geometry(genus: i64, d: i64, deg_l: &[i64]) -> Result<ModuleParams> {
        let n = deg_l.len();
        if n < 2 {
            return Err(Error::InvalidRank(n as u32));
        }
        let l = |p: usize| if p == n { deg_l[0] + d } else { deg_l[p] };
        ModuleParams::new((0..n).map(|i| Q::from_int(2 - 2 * genus + l(i + 1) - l(i))).collect())
    }

    pub fn rank(&self) -> u32 {
        self.c.len() as u32
    }

    pub fn c(&self, i: Residue) -> Q {
        self.c[i.value() as usize]
    }

    pub fn values(&self) -> &[Q] {
        &self.c
    }

    /// The central charge `c_0 = Σ c_i`.
    pub fn c0(&self) -> Q {
        self.c.iter().copied().sum()
    }
}

impl fmt::Display for ModuleParams {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("c=(")?;
        for (k, c) in self.c.iter().enumerate() {
            if k > 0 {
                f.write_str(",")?;
            }
            write!(f, "{c}")?;
        }
        f.write_str(")")
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum Generator {
    E,
    H,
    F,
    /// `f'_i = f_i - c_i x_i`.
    FPrime,
}

impl Generator {
    pub fn as_str(self) -> &'static str {
        match self {
            Generator::E => "e",
            Generator::H => "h",
            Generator::F => "f",
            Generator::FPrime => "f'",
        }
    }
}

/// The operators dual to `e_i`, `h_i`, `f_i` on `N`:
///
/// * `e_i = Ẽ(i)`
/// * `h_i = EE_{i+1} - EE_i + Δ_i`
/// * `f_i = B(i) - E(i) + x_i Δ_i`
///
/// They satisfy the relations of `ŝl_n` after `e ↦ e`, `f ↦ -f`, `h ↦ -h`,
/// which is how transposition acts on commutators.
pub fn chevalley(kind: Generator, i: Residue, params: &ModuleParams) -> LinOp {
    let n = i.rank();
    assert_eq!(n, params.rank(), "rank mismatch");
    let s = Raiz::simple(n, i.value());
    let c = params.c(i);
    match kind {
        Generator::E => LinOp::etilde(s),
        Generator::H => &(&LinOp::esum(i.shift(1)) - &LinOp::esum(i)) + &LinOp::delta(i, c),
        Generator::F => {
            let xd = LinOp::x(s).compose(&LinOp::delta(i, c));
            &(&LinOp::b(s) - &LinOp::e(s)) + &xd
        }
        Generator::FPrime => &chevalley(Generator::F, i, params) - &LinOp::x(s).scale(c),
    }
}

fn check_dims(a: &KostantPartition, a2: &KostantPartition, i: Residue) -> Result<()> {
    let expected = &a.dim() + &DimVec::simple(i.rank(), i.value());
    if a2.dim() != expected {
        return Err(Error::DimensionMismatch(alloc::format!("|{a2}| != |{a}| + {i}")));
    }
    Ok(())
}

/// `ε_i(A, A')`: `m(θ', A')` when `A` is `A'` with `θ' ∈ E_i` replaced by
/// `θ' ⌢ i`, else zero.
pub fn eps_coeff(a: &KostantPartition, a2: &KostantPartition, i: Residue) -> Result<u32> {
    check_dims(a, a2, i)?;
    let s = Raiz::simple(i.rank(), i.value());
    Ok(a2
        .distinct()
        .into_iter()
        .filter(|(t, _)| t.ends_at() == Some(i))
        .filter(|(t, _)| a2.replace(t, t.frown(&s).unwrap()).as_ref() == Some(a))
        .map(|(_, m)| m)
        .sum())
}

/// `M(i, A) = c_i + Σ_{θ ∈ B_{i+1}} (m(i⌣θ, A) - m(θ, A))`, the unit included,
/// i.e. `c_i` plus the number of parts beginning at `i` minus the number
/// beginning at `i+1`.
pub fn m_coeff(a: &KostantPartition, i: Residue, params: &ModuleParams) -> Q {
    let begin = |r: Residue| a.parts().iter().filter(|t| t.begins_at() == Some(r)).count() as i64;
    params.c(i) + Q::from_int(begin(i) - begin(i.shift(1)))
}

/// `φ_i(A', A)`.
pub fn phi_coeff(a2: &KostantPartition, a: &KostantPartition, i: Residue, params: &ModuleParams) -> Result<Q> {
    check_dims(a, a2, i)?;
    let s = Raiz::simple(i.rank(), i.value());
    let mut v = Q::ZERO;
    if a.with_part(s) == *a2 {
        v += m_coeff(a, i, params);
    }
    for (t, m) in a.distinct() {
        if t.ends_at() == Some(i.shift(-1)) && a.replace(&t, t.smile(&s).unwrap()).as_ref() == Some(a2) {
            v -= Q::from(m);
        }
        if t.begins_at() == Some(i.shift(1)) && a.replace(&t, s.smile(&t).unwrap()).as_ref() == Some(a2) {
            v += Q::from(m);
        }
    }
    Ok(v)
}

/// The matrix of `e_i: M_α → M_{α+i}`, entries `ε_i(A, A')`, rows `A' ∈ FK(α+i)`.
pub fn eps_matrix(alpha: &DimVec, i: Residue) -> Matrix {
    let src = enumerate_kostant(alpha);
    let dst = enumerate_kostant(&(alpha + &DimVec::simple(i.rank(), i.value())));
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, a) in src.iter().enumerate() {
        for (r, a2) in dst.iter().enumerate() {
            m[(r, c)] = Q::from(eps_coeff(a, a2, i).unwrap());
        }
    }
    m
}

/// The matrix of `f_i: M_{α+i} → M_α`, entries `φ_i(A', A)`, rows `A ∈ FK(α)`.
pub fn phi_matrix(alpha: &DimVec, i: Residue, params: &ModuleParams) -> Matrix {
    let dst = enumerate_kostant(alpha);
    let src = enumerate_kostant(&(alpha + &DimVec::simple(i.rank(), i.value())));
    let mut m = Matrix::zeros(dst.len(), src.len());
    for (c, a2) in src.iter().enumerate() {
        for (r, a) in dst.iter().enumerate() {
            m[(r, c)] = phi_coeff(a2, a, i, params).unwrap();
        }
    }
    m
}

/// `matrix_of(e_i, α+i)` transposed, to be compared with [`eps_matrix`].
pub fn eps_from_operator(alpha: &DimVec, i: Residue, params: &ModuleParams) -> Matrix {
    let up = alpha + &DimVec::simple(i.rank(), i.value());
    matrix_of(&chevalley(Generator::E, i, params), &up).unwrap().matrix.transpose()
}

/// `matrix_of(f_i, α)` transposed, to be compared with [`phi_matrix`].
pub fn phi_from_operator(alpha: &DimVec, i: Residue, params: &ModuleParams) -> Matrix {
    matrix_of(&chevalley(Generator::F, i, params), alpha).unwrap().matrix.transpose()
}
