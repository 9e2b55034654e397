//! Property tests for the exact algebraic laws: Jacobi, invariance of the
//! Killing form, the adjoint homomorphism, and congruence invariance of the
//! signature. Everything is over ℚ, so equalities are exact.

use covext_core::catalogue;
use covext_core::lie::LieAlgebra;
use covext_core::matrix::Mat;
use covext_core::scalar::{rat, Rat};
use num_traits::Zero;
use proptest::prelude::*;

fn rat_strategy() -> impl Strategy<Value = Rat> {
    (-6i64..=6, 1i64..=3).prop_map(|(n, d)| rat(n, d))
}

fn vec_strategy(n: usize) -> impl Strategy<Value = Vec<Rat>> {
    proptest::collection::vec(rat_strategy(), n)
}

fn algebras() -> Vec<LieAlgebra> {
    vec![
        catalogue::su2(),
        catalogue::sl2r(),
        catalogue::so4(),
        catalogue::sl2c_real(),
        catalogue::su2_sl2r(),
        catalogue::heisenberg(),
    ]
}

proptest! {
    #![proptest_config(ProptestConfig::with_cases(48))]

    #[test]
    fn jacobi_identity_holds(
        idx in 0usize..6,
        x in vec_strategy(6),
        y in vec_strategy(6),
        z in vec_strategy(6),
    ) {
        let alg = &algebras()[idx];
        let n = alg.dim();
        let (x, y, z) = (&x[..n], &y[..n], &z[..n]);
        let a = alg.bracket(x, &alg.bracket(y, z).unwrap()).unwrap();
        let b = alg.bracket(y, &alg.bracket(z, x).unwrap()).unwrap();
        let c = alg.bracket(z, &alg.bracket(x, y).unwrap()).unwrap();
        for k in 0..n {
            prop_assert!((&a[k] + &b[k] + &c[k]).is_zero());
        }
    }

    #[test]
    fn killing_form_is_ad_invariant(
        idx in 0usize..6,
        x in vec_strategy(6),
        y in vec_strategy(6),
        z in vec_strategy(6),
    ) {
        let alg = &algebras()[idx];
        let n = alg.dim();
        let (x, y, z) = (&x[..n], &y[..n], &z[..n]);
        let b = alg.killing_form();
        let zx = alg.bracket(z, x).unwrap();
        let zy = alg.bracket(z, y).unwrap();
        prop_assert!((b.eval(&zx, y) + b.eval(x, &zy)).is_zero());
    }

    #[test]
    fn adjoint_is_a_homomorphism(
        idx in 0usize..6,
        x in vec_strategy(6),
        y in vec_strategy(6),
    ) {
        let alg = &algebras()[idx];
        let n = alg.dim();
        let (x, y) = (&x[..n], &y[..n]);
        let lhs = alg.adjoint(&alg.bracket(x, y).unwrap()).unwrap();
        let ax = alg.adjoint(x).unwrap();
        let ay = alg.adjoint(y).unwrap();
        let rhs = ax.mul(&ay).sub(&ay.mul(&ax));
        prop_assert_eq!(lhs, rhs);
    }

    #[test]
    fn signature_is_congruence_invariant(
        idx in 0usize..6,
        entries in proptest::collection::vec(-3i64..=3, 36),
    ) {
        let alg = &algebras()[idx];
        let n = alg.dim();
        // Random rational congruence; skip singular draws.
        let s = Mat::from_fn(n, n, |i, j| {
            let v = entries[i * 6 + j];
            if i == j { rat(v.abs() + 1, 1) } else { rat(v, 1) }
        });
        prop_assume!(!s.det().is_zero());
        let b = alg.killing_form();
        let transformed = s.transpose().mul(b.matrix()).mul(&s);
        prop_assert_eq!(transformed.signature(), b.matrix().signature());
    }

    #[test]
    fn universal_form_is_symmetric_and_invariant(
        idx in 0usize..5,
        x in vec_strategy(6),
        y in vec_strategy(6),
        z in vec_strategy(6),
    ) {
        // Semisimple entries only.
        let algs = [
            catalogue::su2(),
            catalogue::sl2r(),
            catalogue::so4(),
            catalogue::sl2c_real(),
            catalogue::su2_sl2r(),
        ];
        let alg = &algs[idx];
        let n = alg.dim();
        let (x, y, z) = (&x[..n], &y[..n], &z[..n]);
        let vs = covext_core::forms::invariant_form_space(alg);
        let xy = covext_core::forms::universal_form(&vs, x, y).unwrap();
        let yx = covext_core::forms::universal_form(&vs, y, x).unwrap();
        prop_assert_eq!(&xy, &yx);
        let zx = alg.bracket(z, x).unwrap();
        let zy = alg.bracket(z, y).unwrap();
        let a = covext_core::forms::universal_form(&vs, &zx, y).unwrap();
        let b = covext_core::forms::universal_form(&vs, x, &zy).unwrap();
        for k in 0..vs.m() {
            prop_assert!((&a.coords[k] + &b.coords[k]).is_zero());
        }
    }
}
