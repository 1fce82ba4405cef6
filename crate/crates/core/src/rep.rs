//! Explicit nilpotent representations of the cyclic quiver and recovery of
//! their isomorphism class from ranks of kernel maps.

use alloc::collections::BTreeMap;
use alloc::format;
use alloc::vec::Vec;

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::linalg::Matrix;
use crate::partition::{KappaCoords, KostantPartition};
use crate::rational::Q;

/// Vector spaces `M_i` with arrows `M_i → M_{i+1}` for `i ∈ Z/nZ`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct NilpotentRep {
    dims: DimVec,
    /// `arrows[i]` is a `dims[i+1] × dims[i]` matrix.
    arrows: Vec<Matrix>,
}

impl NilpotentRep {
    /// Validates shapes and nilpotency.
    pub fn new(dims: DimVec, arrows: Vec<Matrix>) -> Result<NilpotentRep> {
        let n = dims.rank();
        if !dims.is_nonnegative() {
            return Err(Error::Shape(format!("negative dimension in {dims}")));
        }
        if arrows.len() != n as usize {
            return Err(Error::Shape(format!("expected {n} arrows, got {}", arrows.len())));
        }
        for (i, a) in arrows.iter().enumerate() {
            let (src, dst) = (dims.get(i as u32) as usize, dims.get(i as u32 + 1) as usize);
            if a.rows() != dst || a.cols() != src {
                return Err(Error::Shape(format!(
                    "arrow {i} is {}x{}, expected {dst}x{src}",
                    a.rows(),
                    a.cols()
                )));
            }
        }
        let rep = NilpotentRep { dims, arrows };
        let len = rep.dims.norm().max(1);
        for i in 0..n as i64 {
            if !rep.path(i, i + len).is_zero() {
                return Err(Error::NotNilpotent);
            }
        }
        Ok(rep)
    }

    pub fn zero(n: u32) -> NilpotentRep {
        NilpotentRep {
            dims: DimVec::zero(n),
            arrows: (0..n).map(|_| Matrix::zeros(0, 0)).collect(),
        }
    }

    /// The direct sum of the indecomposables `M_θ` over the parts of `a`,
    /// each with its standard basis `e_p → e_{p+1} → ... → e_q → 0`.
    pub fn direct_sum(a: &KostantPartition) -> NilpotentRep {
        let n = a.rank();
        let dims = a.dim();
        let mut arrows: Vec<Matrix> = (0..n)
            .map(|i| Matrix::zeros(dims.get(i + 1) as usize, dims.get(i) as usize))
            .collect();
        let mut next_index = alloc::vec![0usize; n as usize];
        for part in a.parts() {
            let mut prev: Option<(usize, usize)> = None;
            for j in part.p()..=part.q() {
                let r = j.rem_euclid(n as i64) as usize;
                let idx = next_index[r];
                next_index[r] += 1;
                if let Some((pr, pidx)) = prev {
                    arrows[pr][(idx, pidx)] = Q::ONE;
                }
                prev = Some((r, idx));
            }
        }
        NilpotentRep { dims, arrows }
    }

    pub fn rank(&self) -> u32 {
        self.dims.rank()
    }

    pub fn dims(&self) -> &DimVec {
        &self.dims
    }

    pub fn arrows(&self) -> &[Matrix] {
        &self.arrows
    }

    /// Replaces every arrow `A_i` by `g_{i+1} A_i g_i^{-1}`.
    pub fn conjugate(&self, g: &[Matrix]) -> Result<NilpotentRep> {
        let n = self.rank() as usize;
        if g.len() != n {
            return Err(Error::Shape(format!("expected {n} basis changes")));
        }
        let mut inverses = Vec::with_capacity(n);
        for (i, gi) in g.iter().enumerate() {
            let d = self.dims.get(i as u32) as usize;
            if gi.rows() != d || gi.cols() != d {
                return Err(Error::Shape(format!("basis change {i} must be {d}x{d}")));
            }
            inverses.push(gi.inverse().ok_or_else(|| Error::Shape(format!("basis change {i} is singular")))?);
        }
        let arrows = (0..n)
            .map(|i| &(&g[(i + 1) % n] * &self.arrows[i]) * &inverses[i])
            .collect();
        Ok(NilpotentRep {
            dims: self.dims.clone(),
            arrows,
        })
    }

    /// The composite `N_from → N_to` of the unrolled periodic representation.
    pub fn path(&self, from: i64, to: i64) -> Matrix {
        assert!(from <= to);
        let n = self.rank() as i64;
        let d = |j: i64| self.dims.get(j.rem_euclid(n) as u32) as usize;
        let mut m = Matrix::identity(d(from));
        for j in from..to {
            m = &self.arrows[j.rem_euclid(n) as usize] * &m;
        }
        m
    }

    /// A basis (as columns) of `N̂_p = ker(N_p → N_{s+n})`.
    pub fn hat_kernel(&self, p: i64, s: i64) -> Matrix {
        self.path(p, s + self.rank() as i64).kernel()
    }

    /// `rk(N̂_p → N̂_q)`, which equals `κ_{<=p}^{>=q}` for `p <= q <= s+n-1`.
    pub fn hat_rank(&self, p: i64, q: i64, s: i64) -> u64 {
        let k = self.hat_kernel(p, s);
        (&self.path(p, q) * &k).rank() as u64
    }
}

/// Recovers the isomorphism class of a nilpotent representation.
///
/// Works in the window `s = 0`: computes `κ_{<=p}^{>=q}` as ranks between the
/// kernels `N̂_p`, then separates them by inclusion–exclusion. Below
/// `s - |dims|` every part has already started, so the cumulative ranks are
/// constant there.
pub fn partition_from_rep(rep: &NilpotentRep) -> Result<KostantPartition> {
    let n = rep.rank() as i64;
    let total = rep.dims().norm();
    let s = 0i64;
    let top = s + n - 1;
    let low = s - total - 1;
    for i in 0..n {
        if !rep.path(i, i + total.max(1)).is_zero() {
            return Err(Error::NotNilpotent);
        }
    }
    let mut cumulative: BTreeMap<(i64, i64), i64> = BTreeMap::new();
    for q in s..=top {
        for p in low..=q {
            cumulative.insert((p, q), rep.hat_rank(p, q, s) as i64);
        }
    }
    let k = |p: i64, q: i64| -> i64 {
        if q > top {
            0
        } else {
            cumulative[&(p, q)]
        }
    };
    let mut map = BTreeMap::new();
    for q in s..=top {
        for p in low + 1..=q {
            let m = k(p, q) - k(p - 1, q) - k(p, q + 1) + k(p - 1, q + 1);
            if m < 0 {
                return Err(Error::Shape(format!("negative multiplicity at ({p},{q})")));
            }
            if m > 0 {
                map.insert((p, q), m as u32);
            }
        }
        if k(low, q) - k(low, q + 1) != 0 {
            return Err(Error::Shape(format!("parts extend below the window at q = {q}")));
        }
    }
    let coords = KappaCoords {
        n: n as u32,
        s,
        map,
    };
    let a = coords.to_partition();
    debug_assert_eq!(&a.dim(), rep.dims());
    Ok(a)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::raiz::Raiz;
    use alloc::vec;

    fn r(n: u32, p: i64, q: i64) -> Raiz {
        Raiz::new(n, p, q).unwrap()
    }

    #[test]
    fn single_indecomposable() {
        for (p, q) in [(0, 0), (-1, 0), (-4, 1), (0, 1)] {
            let a = KostantPartition::from_parts(2, [r(2, p, q)]);
            assert_eq!(partition_from_rep(&NilpotentRep::direct_sum(&a)).unwrap(), a);
        }
    }

    #[test]
    fn zero_rep() {
        assert_eq!(
            partition_from_rep(&NilpotentRep::zero(3)).unwrap(),
            KostantPartition::empty(3)
        );
    }

    #[test]
    fn direct_sum_with_conjugation() {
        let a = KostantPartition::from_parts(3, [r(3, -2, 1), r(3, 0, 0), r(3, 1, 2), r(3, 0, 0)]);
        let rep = NilpotentRep::direct_sum(&a);
        let g: Vec<Matrix> = (0..3)
            .map(|i| {
                let d = rep.dims().get(i) as usize;
                let mut upper = Matrix::identity(d);
                let mut lower = Matrix::identity(d);
                for c in 1..d {
                    upper[(0, c)] = Q::from_int(c as i64 + 1);
                    lower[(c, 0)] = Q::new(1, 2);
                }
                &upper * &lower
            })
            .collect();
        let conj = rep.conjugate(&g).unwrap();
        assert_ne!(conj, rep);
        assert_eq!(partition_from_rep(&conj).unwrap(), a);
    }

    #[test]
    fn rejects_non_nilpotent() {
        let dims = DimVec::from_vec(vec![1, 1]).unwrap();
        let one = Matrix::identity(1);
        assert_eq!(
            NilpotentRep::new(dims, vec![one.clone(), one]).unwrap_err(),
            Error::NotNilpotent
        );
    }

    #[test]
    fn rejects_bad_shapes() {
        let dims = DimVec::from_vec(vec![1, 2]).unwrap();
        let err = NilpotentRep::new(dims, vec![Matrix::zeros(1, 1), Matrix::zeros(1, 2)]);
        assert!(matches!(err, Err(Error::Shape(_))));
    }
}
