use kostant_core::check::check_recovery;
use kostant_core::heis::{zeta, zeta_raiz};
use kostant_core::module::{eps_matrix, ModuleParams};
use kostant_core::op::LinOp;
use kostant_core::poly::Polynomial;
use kostant_core::strata::{dim_pi_fiber, dim_simple_fiber, dim_step_fiber, dim_x};
use kostant_core::{enumerate_kostant, DimVec, KostantPartition, Matrix, Raiz, Residue, Q};
use proptest::prelude::*;

fn raiz(n: u32) -> impl Strategy<Value = Raiz> {
    (0..n as i64, 1..7i64).prop_map(move |(p, len)| Raiz::new(n, p, p + len - 1).unwrap())
}

fn partition() -> impl Strategy<Value = KostantPartition> {
    (2u32..=4).prop_flat_map(|n| {
        proptest::collection::vec(raiz(n), 0..4).prop_map(move |parts| KostantPartition::from_parts(n, parts))
    })
}

/// Unit upper triangular times unit lower triangular, so always invertible.
fn invertible(d: usize, seed: &[i64]) -> Matrix {
    let mut upper = Matrix::identity(d);
    let mut lower = Matrix::identity(d);
    let mut k = 0;
    for r in 0..d {
        for c in 0..d {
            let v = Q::from_int(seed[k % seed.len()]);
            k += 1;
            if c > r {
                upper[(r, c)] = v;
            } else if c < r {
                lower[(r, c)] = v;
            }
        }
    }
    &upper * &lower
}

proptest! {
    #[test]
    fn frown_undoes_smile(n in 2u32..=5, p in 0i64..5, a in 1i64..6, b in 1i64..6) {
        let lower = Raiz::new(n, p, p + a - 1).unwrap();
        let upper = Raiz::new(n, p + a, p + a + b - 1).unwrap();
        let joined = lower.smile(&upper).unwrap();
        prop_assert_eq!(joined.len() as i64, a + b);
        prop_assert_eq!(joined.frown(&upper).unwrap(), lower);
        prop_assert_eq!(joined.dim(), &lower.dim() + &upper.dim());
    }

    #[test]
    fn etilde_keeps_or_drops_one_part(a in partition(), end in 0u32..4, len in 1u32..5) {
        let n = a.rank();
        let theta = Raiz::from_end(n, end % n, len);
        let image = LinOp::etilde(theta).apply_monomial(&a);
        for (b, _) in image.terms() {
            prop_assert!(b.count() == a.count() || b.count() + 1 == a.count());
            prop_assert_eq!(&b.dim() + &theta.dim(), a.dim());
        }
    }

    #[test]
    fn kappa_statistics_are_periodic(a in partition(), s in -6i64..6) {
        let n = a.rank() as i64;
        prop_assert_eq!(dim_x(&a, s), dim_x(&a, s + n));
        prop_assert_eq!(dim_pi_fiber(&a, s), dim_pi_fiber(&a, s - n));
        prop_assert_eq!(a.kappa_coords(s).to_partition(), a.clone());
    }

    #[test]
    fn fiber_dimensions_add_up(a in partition(), s in 0i64..4) {
        prop_assume!(!a.is_empty());
        let s = s % a.rank() as i64;
        let x = dim_x(&a, s);
        prop_assert_eq!(x + dim_pi_fiber(&a, s), dim_simple_fiber(&a).unwrap());
        let low = s - a.dim().norm() - 1;
        let steps: i64 = (low..=s).map(|t| dim_step_fiber(&a, s, t).unwrap()).sum();
        prop_assert_eq!(steps, x);
    }

    #[test]
    fn recovery_survives_conjugation(a in partition(), seed in proptest::collection::vec(-3i64..=3, 1..8)) {
        let g: Vec<Matrix> = a.dim().entries().iter().map(|&d| invertible(d as usize, &seed)).collect();
        let outcome = check_recovery(&a, &g);
        prop_assert!(outcome.passed(), "{:?}", outcome.failures);
    }

    #[test]
    fn zeta_preserves_total_degree(n in 2u32..=3, k in 2u32..=3, p in 0i64..6, len in 1i64..7) {
        let big = n * k;
        let theta = Raiz::new(big, p, p + len - 1).unwrap();
        let small = zeta_raiz(&theta, n);
        prop_assert_eq!(small.len(), theta.len());
        let x = Polynomial::var(theta);
        prop_assert_eq!(zeta(&x, n), Polynomial::var(small));
    }
}

#[test]
fn enumeration_is_sorted_and_exact() {
    for n in 2..=3 {
        for alpha in DimVec::all_up_to_norm(n, 5) {
            let fk = enumerate_kostant(&alpha);
            assert!(fk.windows(2).all(|w| w[0] < w[1]), "{alpha}");
            assert!(fk.iter().all(|a| a.dim() == alpha));
        }
    }
}

#[test]
fn smallest_nontrivial_pieces() {
    // n = 2, α = (1,1): {0..0,1..1}, {0..1}, {1..2}
    let alpha = DimVec::from_vec(vec![1, 1]).unwrap();
    assert_eq!(enumerate_kostant(&alpha).len(), 3);
    let alpha = DimVec::from_vec(vec![2, 2]).unwrap();
    // by part lengths: 4 | 3+1 | 2+2 | 2+1+1 | 1+1+1+1 gives 2+2+3+2+1
    assert_eq!(enumerate_kostant(&alpha).len(), 10);
    let e = eps_matrix(&DimVec::zero(2), Residue::new(2, 0).unwrap());
    assert_eq!((e.rows(), e.cols()), (1, 1));
    assert_eq!(e[(0, 0)], Q::ONE);
    assert_eq!(ModuleParams::from_geometry(0, 1, &[0, 0]).unwrap().c0(), Q::from_int(5));
}
