//! Kostant partitions, multipartitions and their enumeration.

use alloc::collections::BTreeMap;
use alloc::vec::Vec;
use core::fmt;

use crate::dimvec::DimVec;
use crate::raiz::Raiz;

/// A finite multiset of (non-unit) raiz, kept sorted in canonical order.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct KostantPartition {
    n: u32,
    parts: Vec<Raiz>,
}

impl KostantPartition {
    pub fn empty(n: u32) -> KostantPartition {
        assert!(n >= 2);
        KostantPartition { n, parts: Vec::new() }
    }

    /// Builds a partition from parts in any order; unit parts are dropped.
    pub fn from_parts(n: u32, parts: impl IntoIterator<Item = Raiz>) -> KostantPartition {
        let mut parts: Vec<Raiz> = parts.into_iter().filter(|r| !r.is_unit()).collect();
        assert!(parts.iter().all(|r| r.rank() == n), "mixed ranks");
        parts.sort();
        KostantPartition { n, parts }
    }

    pub(crate) fn from_sorted(n: u32, parts: Vec<Raiz>) -> KostantPartition {
        debug_assert!(parts.windows(2).all(|w| w[0] <= w[1]));
        KostantPartition { n, parts }
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn parts(&self) -> &[Raiz] {
        &self.parts
    }

    pub fn is_empty(&self) -> bool {
        self.parts.is_empty()
    }

    /// `|A|`: the sum of the dimension vectors of the parts.
    pub fn dim(&self) -> DimVec {
        let mut d = DimVec::zero(self.n);
        for p in &self.parts {
            d = &d + &p.dim();
        }
        d
    }

    /// `𝒦(A)`: the number of parts counted with multiplicity.
    pub fn count(&self) -> usize {
        self.parts.len()
    }

    /// `m(θ, A)`.
    pub fn multiplicity(&self, theta: &Raiz) -> u32 {
        if theta.is_unit() {
            return 0;
        }
        let lo = self.parts.partition_point(|p| p < theta);
        let hi = self.parts.partition_point(|p| p <= theta);
        (hi - lo) as u32
    }

    /// Distinct parts with their multiplicities, in canonical order.
    pub fn distinct(&self) -> Vec<(Raiz, u32)> {
        let mut out: Vec<(Raiz, u32)> = Vec::new();
        for p in &self.parts {
            match out.last_mut() {
                Some((q, m)) if q == p => *m += 1,
                _ => out.push((*p, 1)),
            }
        }
        out
    }

    /// `A ∪ {θ}` (the unit leaves `A` unchanged).
    pub fn with_part(&self, theta: Raiz) -> KostantPartition {
        let mut parts = self.parts.clone();
        if !theta.is_unit() {
            let at = parts.partition_point(|p| *p <= theta);
            parts.insert(at, theta);
        }
        KostantPartition { n: self.n, parts }
    }

    /// `A ∖ {θ}` removing one copy, or `None` if `θ ∉ A`.
    pub fn without_part(&self, theta: &Raiz) -> Option<KostantPartition> {
        let at = self.parts.binary_search(theta).ok()?;
        let mut parts = self.parts.clone();
        parts.remove(at);
        Some(KostantPartition { n: self.n, parts })
    }

    /// Replaces one copy of `old` by `new` (a unit `new` just deletes).
    pub fn replace(&self, old: &Raiz, new: Raiz) -> Option<KostantPartition> {
        Some(self.without_part(old)?.with_part(new))
    }

    /// Product of monomials: multiset union.
    pub fn union(&self, other: &KostantPartition) -> KostantPartition {
        assert_eq!(self.n, other.n, "mixed ranks");
        let mut parts = Vec::with_capacity(self.parts.len() + other.parts.len());
        let (mut a, mut b) = (self.parts.iter().peekable(), other.parts.iter().peekable());
        loop {
            match (a.peek(), b.peek()) {
                (Some(x), Some(y)) => {
                    if x <= y {
                        parts.push(*a.next().unwrap());
                    } else {
                        parts.push(*b.next().unwrap());
                    }
                }
                (Some(_), None) => parts.push(*a.next().unwrap()),
                (None, Some(_)) => parts.push(*b.next().unwrap()),
                (None, None) => break,
            }
        }
        KostantPartition { n: self.n, parts }
    }

    /// Coordinates `κ_p^q` after moving every part so that `s <= q <= s+n-1`.
    pub fn kappa_coords(&self, s: i64) -> KappaCoords {
        let mut map = BTreeMap::new();
        for (r, m) in self.distinct() {
            *map.entry(r.coords_at(s)).or_insert(0) += m;
        }
        KappaCoords { n: self.n, s, map }
    }
}

impl fmt::Display for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{{")?;
        for (k, p) in self.parts.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{p}")?;
        }
        write!(f, "}}")
    }
}

impl fmt::Debug for KostantPartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// The coordinates of a Kostant partition relative to the window `[s, s+n-1]`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KappaCoords {
    pub n: u32,
    pub s: i64,
    pub map: BTreeMap<(i64, i64), u32>,
}

impl KappaCoords {
    pub fn get(&self, p: i64, q: i64) -> u32 {
        self.map.get(&(p, q)).copied().unwrap_or(0)
    }

    /// `κ_{<=p}^{>=q}`.
    pub fn cumulative(&self, p_max: i64, q_min: i64) -> u64 {
        self.map
            .iter()
            .filter(|((p, q), _)| *p <= p_max && *q >= q_min)
            .map(|(_, m)| *m as u64)
            .sum()
    }

    /// The multiset of parts these coordinates describe.
    pub fn to_partition(&self) -> KostantPartition {
        KostantPartition::from_parts(
            self.n,
            self.map.iter().flat_map(|(&(p, q), &m)| {
                core::iter::repeat_n(Raiz::new(self.n, p, q).unwrap(), m as usize)
            }),
        )
    }
}

/// All raiz with `dim θ <= α`, in canonical order.
pub fn raiz_below(alpha: &DimVec) -> Vec<Raiz> {
    let n = alpha.rank();
    let max_len = alpha.norm().max(0) as u32;
    let mut out = Vec::new();
    for end in 0..n {
        for len in (1..=max_len).rev() {
            let r = Raiz::from_end(n, end, len);
            if r.dim().le(alpha) {
                out.push(r);
            }
        }
    }
    out.sort();
    out
}

/// `FK(α)` in canonical (lexicographic) order.
pub fn enumerate_kostant(alpha: &DimVec) -> Vec<KostantPartition> {
    let n = alpha.rank();
    let mut out = Vec::new();
    if !alpha.is_nonnegative() {
        return out;
    }
    let candidates: Vec<(Raiz, DimVec)> = raiz_below(alpha)
        .into_iter()
        .map(|r| {
            let d = r.dim();
            (r, d)
        })
        .collect();
    let mut stack = Vec::new();
    kostant_dfs(n, &candidates, 0, alpha.clone(), &mut stack, &mut out);
    out
}

fn kostant_dfs(
    n: u32,
    candidates: &[(Raiz, DimVec)],
    from: usize,
    remaining: DimVec,
    stack: &mut Vec<Raiz>,
    out: &mut Vec<KostantPartition>,
) {
    if remaining.is_zero() {
        out.push(KostantPartition::from_sorted(n, stack.clone()));
        return;
    }
    for (k, (r, d)) in candidates.iter().enumerate().skip(from) {
        if d.le(&remaining) {
            stack.push(*r);
            kostant_dfs(n, candidates, k, &remaining - d, stack, out);
            stack.pop();
        }
    }
}

/// `|FK(α)|` for all `|α| <= max_norm`, read off the truncated product
/// `Π_θ (1 - x^{dim θ})^{-1}`.
pub fn kostant_counts(n: u32, max_norm: i64) -> BTreeMap<DimVec, u64> {
    let alphas = DimVec::all_up_to_norm(n, max_norm);
    let mut f: BTreeMap<DimVec, u64> = alphas.iter().map(|a| (a.clone(), 0)).collect();
    f.insert(DimVec::zero(n), 1);
    for end in 0..n {
        for len in 1..=max_norm.max(0) as u32 {
            let d = Raiz::from_end(n, end, len).dim();
            for a in &alphas {
                let rest = a - &d;
                if rest.is_nonnegative() {
                    let v = f[&rest];
                    *f.get_mut(a).unwrap() += v;
                }
            }
        }
    }
    f
}

/// A multiset of nonempty Kostant partitions.
#[derive(Clone, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub struct Multipartition {
    n: u32,
    groups: Vec<KostantPartition>,
}

impl Multipartition {
    pub fn new(n: u32, groups: impl IntoIterator<Item = KostantPartition>) -> Multipartition {
        let mut groups: Vec<KostantPartition> = groups.into_iter().collect();
        assert!(groups.iter().all(|g| !g.is_empty() && g.rank() == n));
        groups.sort();
        Multipartition { n, groups }
    }

    /// A Kostant partition viewed as a simple multipartition (one part per group).
    pub fn simple(a: &KostantPartition) -> Multipartition {
        Multipartition::new(
            a.rank(),
            a.parts()
                .iter()
                .map(|r| KostantPartition::from_parts(a.rank(), [*r])),
        )
    }

    pub fn rank(&self) -> u32 {
        self.n
    }

    pub fn groups(&self) -> &[KostantPartition] {
        &self.groups
    }

    pub fn dim(&self) -> DimVec {
        let mut d = DimVec::zero(self.n);
        for g in &self.groups {
            d = &d + &g.dim();
        }
        d
    }

    /// True when every group is a single raiz.
    pub fn is_simple(&self) -> bool {
        self.groups.iter().all(|g| g.count() == 1)
    }

    /// `|S_Γ̃| / |S_μ̃|`, the degree of the covering `C^α_μ → C^α_Γ`.
    pub fn covering_degree(&self) -> u64 {
        let dims: Vec<DimVec> = self.groups.iter().map(|g| g.dim()).collect();
        let by_dim = stabilizer_order(dims);
        let by_group = stabilizer_order(self.groups.clone());
        by_dim / by_group
    }
}

fn stabilizer_order<T: Ord>(mut items: Vec<T>) -> u64 {
    items.sort();
    let mut total = 1u64;
    let mut run = 0u64;
    for k in 0..items.len() {
        if k > 0 && items[k] == items[k - 1] {
            run += 1;
        } else {
            run = 1;
        }
        total *= run;
    }
    total
}

impl fmt::Display for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "<")?;
        for (k, g) in self.groups.iter().enumerate() {
            if k > 0 {
                write!(f, ",")?;
            }
            write!(f, "{g}")?;
        }
        write!(f, ">")
    }
}

impl fmt::Debug for Multipartition {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// `FM(α)` in canonical order.
pub fn enumerate_multipartitions(alpha: &DimVec) -> Vec<Multipartition> {
    let n = alpha.rank();
    if !alpha.is_nonnegative() {
        return Vec::new();
    }
    let mut candidates: Vec<(KostantPartition, DimVec)> = Vec::new();
    for beta in alpha.all_below() {
        if beta.is_zero() {
            continue;
        }
        for k in enumerate_kostant(&beta) {
            candidates.push((k, beta.clone()));
        }
    }
    candidates.sort();
    let mut out = Vec::new();
    let mut stack = Vec::new();
    multi_dfs(n, &candidates, 0, alpha.clone(), &mut stack, &mut out);
    out.sort();
    out
}

fn multi_dfs(
    n: u32,
    candidates: &[(KostantPartition, DimVec)],
    from: usize,
    remaining: DimVec,
    stack: &mut Vec<KostantPartition>,
    out: &mut Vec<Multipartition>,
) {
    if remaining.is_zero() {
        out.push(Multipartition::new(n, stack.iter().cloned()));
        return;
    }
    for (k, (g, d)) in candidates.iter().enumerate().skip(from) {
        if d.le(&remaining) {
            stack.push(g.clone());
            multi_dfs(n, candidates, k, &remaining - d, stack, out);
            stack.pop();
        }
    }
}
