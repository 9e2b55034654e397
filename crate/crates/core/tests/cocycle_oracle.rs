//! Cross-checks the product-to-sum cocycle evaluation against the
//! independent exponential-spectrum route from `support`.

mod support;

use covext_core::catalogue;
use covext_core::cocycle::{CocycleSpace, CovariantCocycle};
use covext_core::loops::{LoopAlgebra, TwistAutomorphism, VectorFieldLift};
use covext_core::scalar::rat;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

fn spaces() -> Vec<CocycleSpace> {
    let so4 = catalogue::so4();
    let swap = TwistAutomorphism::new(&so4, catalogue::so4_swap(), 2).unwrap();
    let sl2c = catalogue::sl2c_real();
    let conj = TwistAutomorphism::new(&sl2c, catalogue::sl2c_conjugation(), 2).unwrap();
    vec![
        CocycleSpace::new(LoopAlgebra::untwisted(catalogue::su2())).unwrap(),
        CocycleSpace::new(LoopAlgebra::new(so4, swap, 1).unwrap()).unwrap(),
        CocycleSpace::new(LoopAlgebra::new(sl2c, conj, 1).unwrap()).unwrap(),
    ]
}

#[test]
fn omega_gg_agrees_with_exponential_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xbeef);
    for space in spaces() {
        let nabla = space
            .loops()
            .connection(space.loops().random_element(&mut rng, 3))
            .unwrap();
        let cocycle = CovariantCocycle {
            lambda: space.standard_current().unwrap(),
            nabla,
            lift: space.loops().pure_rotation(),
        };
        for _ in 0..12 {
            let xi = space.loops().random_element(&mut rng, 3);
            let eta = space.loops().random_element(&mut rng, 3);
            let fast = cocycle.omega_gg(&space, &xi, &eta).unwrap();
            let slow = support::oracle_omega_gg(&space, &cocycle, &xi, &eta);
            assert_eq!(fast, slow);
        }
    }
}

#[test]
fn omega_d_agrees_with_exponential_oracle() {
    let mut rng = ChaCha8Rng::seed_from_u64(0xcafe);
    for space in spaces() {
        let nabla = space
            .loops()
            .connection(space.loops().random_element(&mut rng, 3))
            .unwrap();
        let lift = VectorFieldLift {
            speed: rat(3, 2),
            vertical: space.loops().random_element(&mut rng, 2),
        };
        let cocycle = CovariantCocycle {
            lambda: space.standard_current().unwrap(),
            nabla,
            lift,
        };
        for _ in 0..12 {
            let xi = space.loops().random_element(&mut rng, 3);
            let fast = cocycle.omega_d(&space, &xi).unwrap();
            let slow = support::oracle_omega_d(&space, &cocycle, &xi);
            assert_eq!(fast, slow);
        }
    }
}
