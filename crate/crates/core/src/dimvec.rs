use alloc::vec;
use alloc::vec::Vec;
use core::fmt;
use core::ops::{Add, Neg, Sub};

use crate::error::{Error, Result};

/// A signed integer vector indexed by `Z/nZ`.
///
/// Used both for dimension vectors (nonnegative) and for weight shifts.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct DimVec(Vec<i64>);

impl DimVec {
    pub fn zero(n: u32) -> DimVec {
        DimVec(vec![0; n as usize])
    }

    pub fn from_vec(entries: Vec<i64>) -> Result<DimVec> {
        if entries.len() < 2 {
            return Err(Error::InvalidRank(entries.len() as u32));
        }
        Ok(DimVec(entries))
    }

    /// The class of the simple raiz at `i`.
    pub fn simple(n: u32, i: u32) -> DimVec {
        let mut v = DimVec::zero(n);
        v.0[(i % n) as usize] = 1;
        v
    }

    /// `(1, 1, ..., 1)`, the imaginary root.
    pub fn delta(n: u32) -> DimVec {
        DimVec(vec![1; n as usize])
    }

    pub fn rank(&self) -> u32 {
        self.0.len() as u32
    }

    pub fn entries(&self) -> &[i64] {
        &self.0
    }

    pub fn get(&self, i: u32) -> i64 {
        self.0[(i % self.rank()) as usize]
    }

    pub fn add_at(&mut self, i: u32, by: i64) {
        let n = self.rank();
        self.0[(i % n) as usize] += by;
    }

    /// `|α|`, the sum of all coordinates.
    pub fn norm(&self) -> i64 {
        self.0.iter().sum()
    }

    pub fn is_zero(&self) -> bool {
        self.0.iter().all(|&a| a == 0)
    }

    pub fn is_nonnegative(&self) -> bool {
        self.0.iter().all(|&a| a >= 0)
    }

    /// Componentwise `self <= other`.
    pub fn le(&self, other: &DimVec) -> bool {
        self.0.len() == other.0.len() && self.0.iter().zip(&other.0).all(|(a, b)| a <= b)
    }

    pub fn scale(&self, k: i64) -> DimVec {
        DimVec(self.0.iter().map(|a| a * k).collect())
    }

    /// The pairing `<i', α> = 2α_i - α_{i-1} - α_{i+1}`.
    pub fn cartan_pairing(&self, i: u32) -> i64 {
        let n = self.rank();
        let i = i % n;
        2 * self.get(i) - self.get(i + n - 1) - self.get(i + 1)
    }

    fn check_rank(&self, other: &DimVec) {
        assert_eq!(self.0.len(), other.0.len(), "dimension vectors of different rank");
    }

    /// All `β` with `0 <= β` and `|β| <= max_norm`, ordered by norm and then
    /// lexicographically.
    pub fn all_up_to_norm(n: u32, max_norm: i64) -> Vec<DimVec> {
        let mut out = Vec::new();
        for total in 0..=max_norm.max(-1) {
            let mut cur = vec![0i64; n as usize];
            compositions(&mut cur, 0, total, &mut out);
        }
        out
    }

    /// All `β` with `0 <= β <= self` componentwise, in lexicographic order.
    pub fn all_below(&self) -> Vec<DimVec> {
        let mut out = vec![DimVec::zero(self.rank())];
        for (k, &bound) in self.0.iter().enumerate() {
            let mut next = Vec::with_capacity(out.len() * (bound.max(0) as usize + 1));
            for base in &out {
                for v in 0..=bound.max(0) {
                    let mut b = base.clone();
                    b.0[k] = v;
                    next.push(b);
                }
            }
            out = next;
        }
        out.sort();
        out
    }
}

fn compositions(cur: &mut Vec<i64>, pos: usize, remaining: i64, out: &mut Vec<DimVec>) {
    if pos + 1 == cur.len() {
        cur[pos] = remaining;
        out.push(DimVec(cur.clone()));
        cur[pos] = 0;
        return;
    }
    for v in (0..=remaining).rev() {
        cur[pos] = v;
        compositions(cur, pos + 1, remaining - v, out);
    }
    cur[pos] = 0;
}

impl Add for &DimVec {
    type Output = DimVec;
    fn add(self, rhs: &DimVec) -> DimVec {
        self.check_rank(rhs);
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a + b).collect())
    }
}

impl Sub for &DimVec {
    type Output = DimVec;
    fn sub(self, rhs: &DimVec) -> DimVec {
        self.check_rank(rhs);
        DimVec(self.0.iter().zip(&rhs.0).map(|(a, b)| a - b).collect())
    }
}

impl Neg for &DimVec {
    type Output = DimVec;
    fn neg(self) -> DimVec {
        DimVec(self.0.iter().map(|a| -a).collect())
    }
}

impl fmt::Display for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "(")?;
        for (k, a) in self.0.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{a}")?;
        }
        write!(f, ")")
    }
}

impl fmt::Debug for DimVec {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    #[test]
    fn cartan_matrix_entries() {
        // n = 3: 2 on the diagonal, -1 for neighbours
        let n = 3;
        for i in 0..n {
            for j in 0..n {
                let a = DimVec::simple(n, j).cartan_pairing(i);
                let expected = if i == j { 2 } else { -1 };
                assert_eq!(a, expected, "a_{i}{j}");
            }
        }
        // n = 2: off-diagonal -2
        assert_eq!(DimVec::simple(2, 1).cartan_pairing(0), -2);
        assert_eq!(DimVec::simple(2, 0).cartan_pairing(0), 2);
        // n = 4: a_02 = 0
        assert_eq!(DimVec::simple(4, 2).cartan_pairing(0), 0);
    }

    #[test]
    fn delta_is_isotropic() {
        for n in 2..6 {
            let d = DimVec::delta(n);
            for i in 0..n {
                assert_eq!(d.cartan_pairing(i), 0);
            }
        }
    }

    #[test]
    fn enumerate_up_to_norm() {
        let all = DimVec::all_up_to_norm(3, 2);
        // 1 + 3 + 6
        assert_eq!(all.len(), 10);
        assert!(all[0].is_zero());
        assert!(all.iter().all(|a| a.norm() <= 2 && a.is_nonnegative()));
        assert_eq!(DimVec::from_vec(alloc::vec![1, 2]).unwrap().all_below().len(), 6);
    }
}
