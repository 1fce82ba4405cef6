//! Raiz: positive roots of the cyclic quiver, i.e. intervals `(p, q)` up to a
//! simultaneous shift by `n`, plus a distinguished unit.

use alloc::format;
use core::cmp::Ordering;
use core::fmt;
use core::str::FromStr;

use crate::dimvec::DimVec;
use crate::error::{Error, Result};

/// An element of `Z/nZ`, `n >= 2`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, PartialOrd, Ord, Debug)]
pub struct Residue {
    n: u32,
    value: u32,
}

impl Residue {
    pub fn new(n: u32, value: i64) -> Result<Residue> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        Ok(Residue {
            n,
            value: value.rem_euclid(n as i64) as u32,
        })
    }

    pub fn rank(self) -> u32 {
        self.n
    }

    pub fn value(self) -> u32 {
        self.value
    }

    pub fn shift(self, by: i64) -> Residue {
        Residue {
            n: self.n,
            value: (self.value as i64 + by).rem_euclid(self.n as i64) as u32,
        }
    }

    pub fn all(n: u32) -> impl Iterator<Item = Residue> {
        (0..n).map(move |value| Residue { n, value })
    }
}

impl fmt::Display for Residue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.value)
    }
}

/// A raiz `(p, q)` stored in the normalization `0 <= q <= n - 1`, or the unit.
///
/// The unit stands for the zero element of the sets `B_i`, `E_i`: it glues
/// neutrally under `smile`, has `x = 1` and `∂ = 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash)]
pub struct Raiz {
    n: u32,
    end: u32,
    len: u32,
}

impl Raiz {
    /// The raiz `(p, q)`, renormalized so that `0 <= q < n`.
    pub fn new(n: u32, p: i64, q: i64) -> Result<Raiz> {
        if n < 2 {
            return Err(Error::InvalidRank(n));
        }
        if p > q {
            return Err(Error::Parse(format!("interval ({p},{q}) has p > q")));
        }
        Ok(Raiz {
            n,
            end: q.rem_euclid(n as i64) as u32,
            len: (q - p + 1) as u32,
        })
    }

    /// The raiz ending at `end` with the given length (`len >= 1`).
    pub fn from_end(n: u32, end: u32, len: u32) -> Raiz {
        assert!(n >= 2 && len >= 1);
        Raiz { n, end: end % n, len }
    }

    pub fn simple(n: u32, i: u32) -> Raiz {
        Raiz::from_end(n, i, 1)
    }

    pub fn unit(n: u32) -> Raiz {
        assert!(n >= 2);
        Raiz { n, end: 0, len: 0 }
    }

    pub fn is_unit(&self) -> bool {
        self.len == 0
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    /// `q - p + 1`; zero for the unit, see [`Raiz::is_unit`].
    #[allow(clippy::len_without_is_empty)]
    pub fn len(&self) -> u32 {
        self.len
    }

    /// Canonical `q` in `[0, n)`.
    pub fn q(&self) -> i64 {
        self.end as i64
    }

    /// Canonical `p = q - len + 1`.
    pub fn p(&self) -> i64 {
        self.end as i64 - self.len as i64 + 1
    }

    pub fn is_simple(&self) -> bool {
        self.len == 1
    }

    pub fn begins_at(&self) -> Option<Residue> {
        (!self.is_unit()).then(|| Residue::new(self.n, self.p()).unwrap())
    }

    pub fn ends_at(&self) -> Option<Residue> {
        (!self.is_unit()).then(|| Residue::new(self.n, self.q()).unwrap())
    }

    /// Membership in `B_i`: the unit, or a raiz beginning at `i`.
    pub fn in_b(&self, i: Residue) -> bool {
        self.begins_at().is_none_or(|b| b == i)
    }

    /// Membership in `E_i`: the unit, or a raiz ending at `i`.
    pub fn in_e(&self, i: Residue) -> bool {
        self.ends_at().is_none_or(|e| e == i)
    }

    /// Residue counts of the interval `[p, q]`.
    pub fn dim(&self) -> DimVec {
        let mut d = DimVec::zero(self.n);
        let full = (self.len / self.n) as i64;
        for r in 0..self.n {
            d.add_at(r, full);
        }
        let rest = self.len % self.n;
        for k in 0..rest {
            d.add_at((self.end + self.n * (rest + 1) - k) % self.n, 1);
        }
        d
    }

    /// `self ⌣ upper`: the extension with `upper` as subobject and `self` as
    /// quotient. `self` occupies the lower indices.
    pub fn smile(&self, upper: &Raiz) -> Result<Raiz> {
        assert_eq!(self.n, upper.n, "raiz of different rank");
        if self.is_unit() {
            return Ok(*upper);
        }
        if upper.is_unit() {
            return Ok(*self);
        }
        if upper.begins_at() != Some(self.ends_at().unwrap().shift(1)) {
            return Err(Error::CompositionUndefined(format!("{self} ⌣ {upper}")));
        }
        Ok(Raiz {
            n: self.n,
            end: upper.end,
            len: self.len + upper.len,
        })
    }

    /// `self ⌢ tail`: removes the terminal segment `tail`.
    pub fn frown(&self, tail: &Raiz) -> Result<Raiz> {
        assert_eq!(self.n, tail.n, "raiz of different rank");
        if tail.is_unit() {
            return Ok(*self);
        }
        if self.is_unit() || self.end != tail.end || tail.len > self.len {
            return Err(Error::NotTerminalSegment(format!("{tail} in {self}")));
        }
        if tail.len == self.len {
            return Ok(Raiz::unit(self.n));
        }
        let len = self.len - tail.len;
        Ok(Raiz {
            n: self.n,
            end: (self.end + self.n - tail.len % self.n) % self.n,
            len,
        })
    }

    /// Coordinates `(p, q)` shifted by a multiple of `n` so that
    /// `s <= q <= s + n - 1`.
    pub fn coords_at(&self, s: i64) -> (i64, i64) {
        let n = self.n as i64;
        let q = s + (self.q() - s).rem_euclid(n);
        (q - self.len as i64 + 1, q)
    }

    fn sort_key(&self) -> (u32, u32, core::cmp::Reverse<u32>) {
        (self.n, self.end, core::cmp::Reverse(self.len))
    }
}

/// Canonical order: by end residue, then by decreasing length.
impl Ord for Raiz {
    fn cmp(&self, other: &Raiz) -> Ordering {
        self.sort_key().cmp(&other.sort_key())
    }
}

impl PartialOrd for Raiz {
    fn partial_cmp(&self, other: &Raiz) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl fmt::Display for Raiz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_unit() {
            write!(f, "unit")
        } else {
            write!(f, "{}..{}", self.p(), self.q())
        }
    }
}

impl fmt::Debug for Raiz {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Parses `"p..q"` for a given rank.
pub fn parse_raiz(n: u32, s: &str) -> Result<Raiz> {
    let s = s.trim();
    let (p, q) = s
        .split_once("..")
        .ok_or_else(|| Error::Parse(format!("expected `p..q`, got `{s}`")))?;
    let p = i64::from_str(&p.replace('\u{2212}', "-"))
        .map_err(|_| Error::Parse(format!("bad start in `{s}`")))?;
    let q = i64::from_str(&q.replace('\u{2212}', "-"))
        .map_err(|_| Error::Parse(format!("bad end in `{s}`")))?;
    Raiz::new(n, p, q)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(n: u32, p: i64, q: i64) -> Raiz {
        Raiz::new(n, p, q).unwrap()
    }

    #[test]
    fn normalization() {
        let a = r(2, 1, 2);
        assert_eq!((a.p(), a.q()), (-1, 0));
        assert_eq!(r(3, 3, 4), r(3, 0, 1));
        assert!(Raiz::new(1, 0, 0).is_err());
        assert!(Raiz::new(3, 2, 1).is_err());
    }

    #[test]
    fn dims() {
        assert!(Raiz::unit(3).dim().is_zero());
        assert_eq!(r(2, 0, 1).dim().entries(), &[1, 1]);
        // {-2,-1,0,1} mod 3 = {1,2,0,1}
        assert_eq!(r(3, -2, 1).dim().entries(), &[1, 2, 1]);
        assert_eq!(r(3, 1, 7).dim().entries(), &[2, 3, 2]);
    }

    #[test]
    fn smile_examples() {
        let t = r(3, 0, 1);
        assert_eq!(Raiz::unit(3).smile(&t).unwrap(), t);
        assert_eq!(t.smile(&Raiz::unit(3)).unwrap(), t);
        assert_eq!(r(2, 1, 1).smile(&r(2, 0, 0)).unwrap(), r(2, -1, 0));
        assert_eq!(r(3, 1, 2).smile(&r(3, 0, 1)).unwrap(), r(3, -2, 1));
        assert!(matches!(
            r(3, 0, 0).smile(&r(3, 0, 0)),
            Err(Error::CompositionUndefined(_))
        ));
    }

    #[test]
    fn frown_examples() {
        let t = r(3, -1, 1);
        assert!(t.frown(&t).unwrap().is_unit());
        assert_eq!(r(2, -1, 0).frown(&r(2, 0, 0)).unwrap(), r(2, 1, 1));
        assert_eq!(t.frown(&Raiz::unit(3)).unwrap(), t);
        assert!(r(2, 0, 0).frown(&r(2, 1, 1)).is_err());
        assert!(r(2, 0, 0).frown(&r(2, -1, 0)).is_err());
    }

    #[test]
    fn membership() {
        let z = Residue::new(2, 0).unwrap();
        let u = Raiz::unit(2);
        assert!(u.in_b(z) && u.in_e(z));
        let t = r(2, -1, 0);
        assert!(t.in_e(z));
        assert!(!t.in_b(z));
    }

    #[test]
    fn coords_shift() {
        assert_eq!(r(2, 0, 0).coords_at(1), (2, 2));
        assert_eq!(r(2, 0, 1).coords_at(1), (0, 1));
        assert_eq!(r(3, -2, 1).coords_at(-3), (-5, -2));
    }

    #[test]
    fn parse_and_order() {
        assert_eq!(parse_raiz(2, "-1..0").unwrap(), r(2, -1, 0));
        assert_eq!(parse_raiz(2, "\u{2212}1..0").unwrap(), r(2, -1, 0));
        assert!(parse_raiz(2, "1-0").is_err());
        // same end: longer first
        assert!(r(2, -1, 0) < r(2, 0, 0));
        assert!(r(2, 0, 0) < r(2, 1, 1));
    }
}
