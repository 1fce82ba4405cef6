//! Polynomials in the variables `x_θ`, one monomial per Kostant partition.

use alloc::collections::btree_map::{self, BTreeMap};
use core::fmt;
use core::ops::{Add, Mul, Neg, Sub};

use crate::dimvec::DimVec;
use crate::partition::KostantPartition;
use crate::raiz::Raiz;
use crate::rational::Q;

/// A finite exact-rational combination of monomials `x^A`. The empty
/// partition is the monomial `1`. Zero coefficients are never stored.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Polynomial {
    n: u32,
    terms: BTreeMap<KostantPartition, Q>,
}

impl Polynomial {
    pub fn zero(n: u32) -> Polynomial {
        Polynomial {
            n,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(n: u32) -> Polynomial {
        Polynomial::monomial(KostantPartition::empty(n))
    }

    pub fn constant(n: u32, c: Q) -> Polynomial {
        let mut p = Polynomial::zero(n);
        p.add_term(KostantPartition::empty(n), c);
        p
    }

    pub fn monomial(a: KostantPartition) -> Polynomial {
        let mut p = Polynomial::zero(a.rank());
        p.add_term(a, Q::ONE);
        p
    }

    /// `x_θ`; `x_unit = 1`.
    pub fn var(theta: Raiz) -> Polynomial {
        Polynomial::monomial(KostantPartition::from_parts(theta.rank(), [theta]))
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn terms(&self) -> btree_map::Iter<'_, KostantPartition, Q> {
        self.terms.iter()
    }

    pub fn coeff(&self, a: &KostantPartition) -> Q {
        self.terms.get(a).copied().unwrap_or(Q::ZERO)
    }

    pub fn add_term(&mut self, a: KostantPartition, c: Q) {
        debug_assert_eq!(a.rank(), self.n);
        if c.is_zero() {
            return;
        }
        match self.terms.entry(a) {
            btree_map::Entry::Vacant(v) => {
                v.insert(c);
            }
            btree_map::Entry::Occupied(mut o) => {
                let s = *o.get() + c;
                if s.is_zero() {
                    o.remove();
                } else {
                    *o.get_mut() = s;
                }
            }
        }
    }

    pub fn add_scaled(&mut self, other: &Polynomial, c: Q) {
        if c.is_zero() {
            return;
        }
        for (a, v) in &other.terms {
            self.add_term(a.clone(), *v * c);
        }
    }

    pub fn scale(&self, c: Q) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        p.add_scaled(self, c);
        p
    }

    /// The dimension vector shared by all monomials, if the polynomial is
    /// nonzero and homogeneous.
    pub fn homogeneous_dim(&self) -> Option<DimVec> {
        let mut it = self.terms.keys().map(|a| a.dim());
        let first = it.next()?;
        it.all(|d| d == first).then_some(first)
    }

    /// `∂_θ`; `∂_unit = 0`.
    pub fn derivative(&self, theta: &Raiz) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        if theta.is_unit() {
            return p;
        }
        for (a, c) in &self.terms {
            let m = a.multiplicity(theta);
            if m > 0 {
                p.add_term(a.without_part(theta).unwrap(), *c * Q::from(m));
            }
        }
        p
    }

    /// Applies an algebra map `x_θ ↦ x_{f(θ)}` into rank `n`.
    pub fn map_vars(&self, n: u32, f: impl Fn(&Raiz) -> Raiz) -> Polynomial {
        let mut p = Polynomial::zero(n);
        for (a, c) in &self.terms {
            p.add_term(KostantPartition::from_parts(n, a.parts().iter().map(&f)), *c);
        }
        p
    }
}

impl Add for &Polynomial {
    type Output = Polynomial;
    fn add(self, rhs: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.add_scaled(rhs, Q::ONE);
        p
    }
}

impl Sub for &Polynomial {
    type Output = Polynomial;
    fn sub(self, rhs: &Polynomial) -> Polynomial {
        let mut p = self.clone();
        p.add_scaled(rhs, -Q::ONE);
        p
    }
}

impl Neg for &Polynomial {
    type Output = Polynomial;
    fn neg(self) -> Polynomial {
        self.scale(-Q::ONE)
    }
}

impl Mul for &Polynomial {
    type Output = Polynomial;
    fn mul(self, rhs: &Polynomial) -> Polynomial {
        let mut p = Polynomial::zero(self.n);
        for (a, x) in &self.terms {
            for (b, y) in &rhs.terms {
                p.add_term(a.union(b), *x * *y);
            }
        }
        p
    }
}

impl fmt::Display for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (k, (a, c)) in self.terms.iter().enumerate() {
            if k > 0 {
                f.write_str(" + ")?;
            }
            if a.is_empty() {
                write!(f, "{c}")?;
                continue;
            }
            if *c != Q::ONE {
                write!(f, "{c}*")?;
            }
            for (j, t) in a.parts().iter().enumerate() {
                if j > 0 {
                    f.write_str("*")?;
                }
                write!(f, "x[{t}]")?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for Polynomial {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn x(n: u32, p: i64, q: i64) -> Polynomial {
        Polynomial::var(Raiz::new(n, p, q).unwrap())
    }

    #[test]
    fn derivatives() {
        let t = Raiz::new(2, 0, 0).unwrap();
        assert!(Polynomial::one(2).derivative(&t).is_zero());
        let sq = &x(2, 0, 0) * &x(2, 0, 0);
        assert_eq!(sq.derivative(&t), x(2, 0, 0).scale(Q::from_int(2)));
        let p = &x(2, 0, 0) * &x(2, 1, 1);
        assert_eq!(p.derivative(&t), x(2, 1, 1));
        assert!(p.derivative(&Raiz::unit(2)).is_zero());
    }

    #[test]
    fn cancellation() {
        let p = &x(3, 0, 1) - &x(3, 0, 1);
        assert!(p.is_zero());
        assert_eq!((&x(3, 0, 1) + &Polynomial::one(3)).len(), 2);
        assert_eq!(Polynomial::var(Raiz::unit(3)), Polynomial::one(3));
    }

    #[test]
    fn homogeneity() {
        let p = &x(2, 0, 1) + &(&x(2, 0, 0) * &x(2, 1, 1));
        assert_eq!(p.homogeneous_dim(), Some(DimVec::delta(2)));
        assert_eq!((&p + &Polynomial::one(2)).homogeneous_dim(), None);
    }
}
