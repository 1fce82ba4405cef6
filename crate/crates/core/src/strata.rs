//! Dimension formulas for strata and fibers of `K_α`, and the catalog of
//! components of the Hecke correspondence that dominate top-dimensional
//! components.

use alloc::string::String;
use alloc::vec::Vec;
use core::fmt;

use crate::dimvec::DimVec;
use crate::error::{Error, Result};
use crate::partition::{enumerate_multipartitions, KostantPartition, Multipartition};
use crate::raiz::{Raiz, Residue};

/// `dim F_κ = |dim κ| - 𝒦(κ)`.
pub fn dim_simple_fiber(kappa: &KostantPartition) -> Result<i64> {
    if kappa.is_empty() {
        return Err(Error::EmptyPartition);
    }
    Ok(kappa.dim().norm() - kappa.count() as i64)
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct StratumReport {
    pub multipartition: Multipartition,
    pub dim: i64,
    /// Simple-fiber dimension of each group, in group order.
    pub fiber_dims: Vec<i64>,
}

/// `dim K_μ = |α| + Σ_r (1 - 𝒦(κ_r))`.
pub fn dim_stratum(mu: &Multipartition) -> StratumReport {
    let fiber_dims: Vec<i64> = mu
        .groups()
        .iter()
        .map(|g| dim_simple_fiber(g).expect("groups are nonempty"))
        .collect();
    let dim = mu.dim().norm() + mu.groups().iter().map(|g| 1 - g.count() as i64).sum::<i64>();
    StratumReport {
        multipartition: mu.clone(),
        dim,
        fiber_dims,
    }
}

/// `dim X^s_κ = Σ_{p <= s <= q <= s+n-1} (s - p) κ_p^q`.
pub fn dim_x(kappa: &KostantPartition, s: i64) -> i64 {
    kappa
        .kappa_coords(s)
        .map
        .iter()
        .filter(|((p, _), _)| *p <= s)
        .map(|((p, _), m)| (s - p) * *m as i64)
        .sum()
}

/// Fiber dimension `κ_{<=t-1}^{>=s}` of one step `X^t → X^{t-1}`.
pub fn dim_step_fiber(kappa: &KostantPartition, s: i64, t: i64) -> Result<i64> {
    if t > s {
        return Err(Error::StepOutOfRange { s, t });
    }
    Ok(kappa.kappa_coords(s).cumulative(t - 1, s) as i64)
}

/// Fiber dimension of `π_s: F_κ → X^s_κ`.
pub fn dim_pi_fiber(kappa: &KostantPartition, s: i64) -> i64 {
    kappa
        .kappa_coords(s)
        .map
        .iter()
        .map(|(&(p, q), &m)| {
            let m = m as i64;
            if p > s {
                (q - p) * m
            } else {
                (q - s) * m
            }
        })
        .sum()
}

/// `e_i(κ)`: the number of parts ending at `i`, which is the dimension of
/// `Hom(M_i, T')` at a point of type `κ`. The projective fiber has
/// dimension `e_i(κ) - 1` and is empty when this is zero.
pub fn hecke_fiber_dim(kappa: &KostantPartition, i: Residue) -> u32 {
    kappa
        .parts()
        .iter()
        .filter(|t| t.ends_at() == Some(i))
        .count() as u32
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash, PartialOrd, Ord)]
pub enum ComponentKind {
    /// Dominant over `K_A`, generic fiber the horizontal curve `C_0`.
    HorizontalCFibration,
    /// Dominant over `K_A`, generic fiber `m` disjoint projective lines.
    VerticalP1Fibration,
    /// Dominant over `K_A`, generically finite of degree `m`.
    FiniteCover,
    /// Dominant over `K_{A'}`, generically finite of degree `m`.
    TargetDominant,
}

impl ComponentKind {
    pub fn as_str(self) -> &'static str {
        match self {
            ComponentKind::HorizontalCFibration => "horizontal-C-fibration",
            ComponentKind::VerticalP1Fibration => "vertical-P1-fibration",
            ComponentKind::FiniteCover => "finite-cover",
            ComponentKind::TargetDominant => "target-dominant",
        }
    }
}

impl fmt::Display for ComponentKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.as_str())
    }
}

#[derive(Clone, Debug, PartialEq, Eq, PartialOrd, Ord)]
pub struct ComponentRecord {
    pub kind: ComponentKind,
    pub source: KostantPartition,
    pub target: KostantPartition,
    pub multiplicity: u32,
    pub pivot: Option<Raiz>,
}

/// Components of `𝔈^i_α` dominant over the top component of `A'`: one per
/// distinct part ending at `i`.
pub fn components_over_target(target: &KostantPartition, i: Residue) -> Vec<ComponentRecord> {
    let n = target.rank();
    let simple = Raiz::simple(n, i.value());
    target
        .distinct()
        .into_iter()
        .filter(|(t, _)| t.ends_at() == Some(i))
        .map(|(t, m)| {
            let rest = t.frown(&simple).expect("part ends at i");
            ComponentRecord {
                kind: ComponentKind::TargetDominant,
                source: target.replace(&t, rest).unwrap(),
                target: target.clone(),
                multiplicity: m,
                pivot: Some(t),
            }
        })
        .collect()
}

/// Components of `𝔈^i_α` dominant over the top component of `A`.
pub fn components_over_source(source: &KostantPartition, i: Residue) -> Vec<ComponentRecord> {
    let n = source.rank();
    let simple = Raiz::simple(n, i.value());
    let mut out = alloc::vec![ComponentRecord {
        kind: ComponentKind::HorizontalCFibration,
        source: source.clone(),
        target: source.with_part(simple),
        multiplicity: 1,
        pivot: None,
    }];
    for (t, m) in source.distinct() {
        if t.ends_at() == Some(i.shift(-1)) {
            out.push(ComponentRecord {
                kind: ComponentKind::VerticalP1Fibration,
                source: source.clone(),
                target: source.replace(&t, t.smile(&simple).unwrap()).unwrap(),
                multiplicity: m,
                pivot: Some(t),
            });
        }
    }
    for (t, m) in source.distinct() {
        if t.begins_at() == Some(i.shift(1)) {
            out.push(ComponentRecord {
                kind: ComponentKind::FiniteCover,
                source: source.clone(),
                target: source.replace(&t, simple.smile(&t).unwrap()).unwrap(),
                multiplicity: m,
                pivot: Some(t),
            });
        }
    }
    out
}

/// One (stratum, group, fiber dimension) line of the semismallness table.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemismallRow {
    pub stratum: Multipartition,
    pub stratum_dim: i64,
    pub group: KostantPartition,
    /// `e_i(κ)`; the fiber over this point is `P^{e-1}` (empty when `e = 0`).
    pub hom_dim: u32,
    /// Fiber dimension `r`, or `None` for an empty fiber.
    pub fiber_dim: Option<i64>,
    /// Upper bound for the dimension of the locus where the fiber over this
    /// group has dimension `r`.
    pub locus_dim: i64,
    /// `r <= 𝒦(κ) - 1`.
    pub bounded_by_count: bool,
    /// `locus_dim + r <= |α| + 1 - r`.
    pub semismall: bool,
    /// The cruder `stratum_dim + r <= |α| + 1 - r`, which does not account
    /// for the fact that the maximal fiber only occurs on a proper sublocus.
    pub crude: bool,
}

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SemismallReport {
    pub alpha: DimVec,
    pub i: Residue,
    pub rows: Vec<SemismallRow>,
    /// `max` over strata of the dimension bound of the preimage.
    pub max_preimage_dim: i64,
    pub pass: bool,
    pub failure: Option<String>,
}

/// Largest `|α|` for which `verify_semismall` will enumerate `FM(α + i)`.
pub const SEMISMALL_MAX_NORM: i64 = 10;

/// Combinatorial check of semismallness of `q: 𝔈^i_α → K_{α+i}`.
///
/// Over a point of the stratum `K_μ'` the fiber is the disjoint union, over
/// the groups `κ` of `μ'`, of `P(Hom(M_i, T'_x))` with `dim Hom <= e_i(κ)`.
/// The locus where that fiber has dimension `r >= 1` has codimension at least
/// `r` inside `K_μ'`; what remains to be checked from partition data is
///
/// * `r <= 𝒦(κ) - 1` (so the locus is empty unless `𝒦(κ) >= r + 1`),
/// * `dim(locus) + r <= |α| + 1 - r`, i.e. codimension at least `2r`,
/// * the preimage of every stratum has dimension at most `|α| + 1`, with
///   equality attained.
pub fn verify_semismall(alpha: &DimVec, i: Residue) -> Result<SemismallReport> {
    if !alpha.is_nonnegative() {
        return Err(Error::DimensionMismatch(alloc::format!("{alpha} is not a dimension vector")));
    }
    if alpha.norm() > SEMISMALL_MAX_NORM {
        return Err(Error::TooLarge(alloc::format!("|α| = {} > {SEMISMALL_MAX_NORM}", alpha.norm())));
    }
    let n = alpha.rank();
    let target = alpha + &DimVec::simple(n, i.value());
    let top = alpha.norm() + 1;
    let mut rows = Vec::new();
    let mut max_preimage = i64::MIN;
    let mut failure = None;
    for mu in enumerate_multipartitions(&target) {
        let stratum_dim = dim_stratum(&mu).dim;
        for g in mu.groups() {
            let e = hecke_fiber_dim(g, i);
            if e == 0 {
                rows.push(SemismallRow {
                    stratum: mu.clone(),
                    stratum_dim,
                    group: g.clone(),
                    hom_dim: 0,
                    fiber_dim: None,
                    locus_dim: stratum_dim,
                    bounded_by_count: true,
                    semismall: true,
                    crude: true,
                });
                continue;
            }
            for r in 0..e as i64 {
                let locus_dim = stratum_dim - r;
                let bounded_by_count = r < g.count() as i64;
                let semismall = locus_dim + r <= top - r;
                let crude = stratum_dim + r <= top - r;
                max_preimage = max_preimage.max(locus_dim + r);
                if failure.is_none() && !(bounded_by_count && semismall && locus_dim + r <= top) {
                    failure = Some(alloc::format!("stratum {mu}, group {g}, r = {r}"));
                }
                rows.push(SemismallRow {
                    stratum: mu.clone(),
                    stratum_dim,
                    group: g.clone(),
                    hom_dim: e,
                    fiber_dim: Some(r),
                    locus_dim,
                    bounded_by_count,
                    semismall,
                    crude,
                });
            }
        }
    }
    if failure.is_none() && max_preimage != top {
        failure = Some(alloc::format!("maximal preimage dimension {max_preimage} != |α| + 1 = {top}"));
    }
    Ok(SemismallReport {
        alpha: alpha.clone(),
        i,
        rows,
        max_preimage_dim: max_preimage,
        pass: failure.is_none(),
        failure,
    })
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::partition::enumerate_kostant;

    fn r(n: u32, p: i64, q: i64) -> Raiz {
        Raiz::new(n, p, q).unwrap()
    }

    fn kp(n: u32, parts: &[(i64, i64)]) -> KostantPartition {
        KostantPartition::from_parts(n, parts.iter().map(|&(p, q)| r(n, p, q)))
    }

    fn res(n: u32, i: i64) -> Residue {
        Residue::new(n, i).unwrap()
    }

    #[test]
    fn simple_fiber() {
        assert_eq!(dim_simple_fiber(&kp(3, &[(1, 1)])).unwrap(), 0);
        assert_eq!(dim_simple_fiber(&kp(2, &[(-1, 0)])).unwrap(), 1);
        assert_eq!(dim_simple_fiber(&kp(2, &[(0, 0), (1, 1)])).unwrap(), 0);
        assert_eq!(dim_simple_fiber(&KostantPartition::empty(2)), Err(Error::EmptyPartition));
    }

    #[test]
    fn stratum_dims() {
        let a = kp(2, &[(0, 0), (1, 1)]);
        assert_eq!(dim_stratum(&Multipartition::simple(&a)).dim, 2);
        assert_eq!(dim_stratum(&Multipartition::new(2, [a])).dim, 1);
        assert_eq!(dim_stratum(&Multipartition::new(2, [])).dim, 0);
    }

    #[test]
    fn x_step_pi() {
        let k = kp(2, &[(-1, 0)]);
        assert_eq!(dim_x(&k, 0), 1);
        assert_eq!(dim_x(&kp(3, &[(2, 2), (2, 2)]), 2), 0);
        assert_eq!(dim_x(&kp(3, &[(0, 1)]), 0), 0);
        assert_eq!(dim_step_fiber(&k, 0, 0).unwrap(), 1);
        assert_eq!(dim_step_fiber(&k, 0, -5).unwrap(), 0);
        assert_eq!(dim_step_fiber(&kp(2, &[(0, 1)]), 0, 0).unwrap(), 0);
        assert_eq!(dim_step_fiber(&k, 0, 1), Err(Error::StepOutOfRange { s: 0, t: 1 }));
        assert_eq!(dim_pi_fiber(&kp(3, &[(0, 0), (1, 1)]), 0), 0);
        assert_eq!(dim_pi_fiber(&k, 0), 0);
        assert_eq!(dim_pi_fiber(&k, 1), 1);
    }

    #[test]
    fn hecke_fibers() {
        assert_eq!(hecke_fiber_dim(&KostantPartition::empty(2), res(2, 0)), 0);
        assert_eq!(hecke_fiber_dim(&kp(2, &[(-1, 0), (0, 0)]), res(2, 0)), 2);
        assert_eq!(hecke_fiber_dim(&kp(2, &[(1, 1)]), res(2, 0)), 0);
    }

    #[test]
    fn target_components() {
        assert!(components_over_target(&kp(2, &[(1, 1)]), res(2, 0)).is_empty());
        let c = components_over_target(&kp(2, &[(-1, 0), (1, 1)]), res(2, 0));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].pivot, Some(r(2, -1, 0)));
        assert_eq!(c[0].multiplicity, 1);
        assert_eq!(c[0].source, kp(2, &[(1, 1), (1, 1)]));
        let c = components_over_target(&kp(2, &[(0, 0), (0, 0)]), res(2, 0));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].multiplicity, 2);
        assert_eq!(c[0].source, kp(2, &[(0, 0)]));
    }

    #[test]
    fn source_components() {
        let c = components_over_source(&KostantPartition::empty(2), res(2, 0));
        assert_eq!(c.len(), 1);
        assert_eq!(c[0].target, kp(2, &[(0, 0)]));
        let c = components_over_source(&kp(2, &[(1, 1)]), res(2, 0));
        let kinds: Vec<_> = c.iter().map(|x| (x.kind, x.target.clone())).collect();
        assert_eq!(
            kinds,
            alloc::vec![
                (ComponentKind::HorizontalCFibration, kp(2, &[(1, 1), (0, 0)])),
                (ComponentKind::VerticalP1Fibration, kp(2, &[(-1, 0)])),
                (ComponentKind::FiniteCover, kp(2, &[(0, 1)])),
            ]
        );
        let c = components_over_source(&kp(3, &[(0, 0)]), res(3, 0));
        assert_eq!(c.len(), 1);
    }

    #[test]
    fn target_dims_add_simple() {
        for alpha in DimVec::all_up_to_norm(3, 3) {
            for a in enumerate_kostant(&alpha) {
                for i in Residue::all(3) {
                    for c in components_over_source(&a, i) {
                        assert_eq!(c.target.dim(), &alpha + &DimVec::simple(3, i.value()));
                    }
                }
            }
        }
    }

    #[test]
    fn semismall_examples() {
        let a = DimVec::from_vec(alloc::vec![1, 0]).unwrap();
        assert!(verify_semismall(&a, res(2, 1)).unwrap().pass);
        assert!(verify_semismall(&DimVec::zero(3), res(3, 1)).unwrap().pass);
        let a = DimVec::from_vec(alloc::vec![1, 1, 0]).unwrap();
        assert!(verify_semismall(&a, res(3, 2)).unwrap().pass);
    }

    #[test]
    fn crude_bound_fails_on_doubled_simple() {
        // K_{2i} ⊃ stratum <{i,i}> of dim 1 carries Hom of dim 2; only the
        // sublocus bound makes the check go through.
        let a = DimVec::simple(2, 0);
        let rep = verify_semismall(&a, res(2, 0)).unwrap();
        assert!(rep.pass);
        assert!(rep.rows.iter().any(|row| !row.crude));
    }
}
