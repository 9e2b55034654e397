//! Acceptance suite: one test per criterion, each printing a pass line.
//! All equalities are exact (tolerance zero); runtime bounds are asserted.

mod support;

use std::sync::Mutex;
use std::time::Instant;

/// The runtime bounds below are wall-clock; run the criteria one at a time
/// so they do not fight for cores.
static EXCLUSIVE: Mutex<()> = Mutex::new(());

fn exclusive() -> std::sync::MutexGuard<'static, ()> {
    EXCLUSIVE.lock().unwrap_or_else(|e| e.into_inner())
}

use covext_core::catalogue;
use covext_core::cocycle::{
    connection_change_check, current_space_dimension, injectivity_probe, verify_cocycle,
    CocycleSpace, CovariantCocycle,
};
use covext_core::forms::{automorphism_action_on_v, invariant_form_space};
use covext_core::lie::{LieAlgebra, Violation};
use covext_core::loops::{reduce_to_simple, spectral_cover, LoopAlgebra, TwistAutomorphism};
use covext_core::matrix::Mat;
use covext_core::scalar::{rat, rat_int, Rat, TwoPi};
use covext_core::structure::{minimal_ideals, StructureError};
use num_traits::{One, Zero};
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;

/// The semisimple catalogue cases paired with their twists.
fn cocycle_cases() -> Vec<(String, CocycleSpace)> {
    let mut cases = Vec::new();
    for entry in catalogue::entries() {
        if !entry.algebra.is_semisimple() {
            continue;
        }
        let id = TwistAutomorphism::identity(&entry.algebra);
        let ctx = LoopAlgebra::new(entry.algebra.clone(), id, 1).unwrap();
        cases.push((
            format!("{}/identity", entry.name),
            CocycleSpace::new(ctx).unwrap(),
        ));
        for (name, matrix, order) in &entry.automorphisms {
            let twist = TwistAutomorphism::new(&entry.algebra, matrix.clone(), *order).unwrap();
            let ctx = LoopAlgebra::new(entry.algebra.clone(), twist, 1).unwrap();
            cases.push((
                format!("{}/{}", entry.name, name),
                CocycleSpace::new(ctx).unwrap(),
            ));
        }
    }
    cases
}

fn freq_to_mode(space: &CocycleSpace, freq: u32) -> u32 {
    freq * space.loops().full_period()
}

#[test]
fn criterion_1_so4_ideals_and_covers() {
    let _guard = exclusive();
    let start = Instant::now();
    let so4 = catalogue::so4();
    let decomp = minimal_ideals(&so4).unwrap();
    assert_eq!(decomp.len(), 2, "so(4) must have exactly two minimal ideals");
    for i in 0..2 {
        assert_eq!(decomp.ideals[i].dim(), 3);
        assert!(decomp.compact[i], "so(4) ideals are compact");
        assert!(!decomp.complex[i]);
    }
    let swap = TwistAutomorphism::new(&so4, catalogue::so4_swap(), 2).unwrap();
    let cover = spectral_cover(&so4, &swap).unwrap();
    assert_eq!(cover.components.len(), 1);
    assert_eq!(cover.components[0].length, 2);
    let id = TwistAutomorphism::identity(&so4);
    let cover = spectral_cover(&so4, &id).unwrap();
    assert_eq!(cover.components.len(), 2);
    assert!(cover.components.iter().all(|c| c.length == 1));
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 1 exceeded 1 s: {elapsed:?}");
    println!(
        "[PASS] criterion 1: so(4) = two compact simple ideals; swap cover connected of length 2, \
         identity cover split ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_2_invariant_form_dimensions() {
    let _guard = exclusive();
    let start = Instant::now();
    assert_eq!(invariant_form_space(&catalogue::su2()).m(), 1);
    assert_eq!(invariant_form_space(&catalogue::sl2r()).m(), 1);

    let sl2c = catalogue::sl2c_real();
    let vs = invariant_form_space(&sl2c);
    assert_eq!(vs.m(), 2);
    let p = automorphism_action_on_v(&sl2c, &vs, &catalogue::sl2c_conjugation()).unwrap();
    let diag = Mat::from_rows(vec![
        vec![rat_int(1), rat_int(0)],
        vec![rat_int(0), rat_int(-1)],
    ]);
    assert_eq!(p, diag, "conjugation must act as diag(1,-1) on the (Re, Im) basis");

    let so4 = catalogue::so4();
    let vs = invariant_form_space(&so4);
    assert_eq!(vs.m(), 2);
    let p = automorphism_action_on_v(&so4, &vs, &catalogue::so4_swap()).unwrap();
    let transposition = Mat::from_rows(vec![
        vec![rat_int(0), rat_int(1)],
        vec![rat_int(1), rat_int(0)],
    ]);
    assert_eq!(p, transposition, "swap must act as the transposition on V");
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 4.0, "criterion 2 exceeded budget: {elapsed:?}");
    println!(
        "[PASS] criterion 2: dim V = 1 (su2, sl2r), 2 (sl2c with diag(1,-1) conjugation), \
         2 (so4 with swap transposition) ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_3_cocycle_identity_suite() {
    let _guard = exclusive();
    let start = Instant::now();
    let samples = 100;
    for (seed_offset, (name, space)) in cocycle_cases().into_iter().enumerate() {
        let seed = 0xc0c0 + seed_offset as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let max_mode = freq_to_mode(&space, 3);
        let nabla = space
            .loops()
            .connection(space.loops().random_element(&mut rng, max_mode))
            .unwrap();
        let cocycle = CovariantCocycle {
            lambda: space.standard_current().expect("catalogue cases admit invariant currents"),
            nabla,
            lift: space.loops().pure_rotation(),
        };
        let report = verify_cocycle(&space, &cocycle, samples, max_mode, seed).unwrap();
        assert!(report.all_passed(), "case {name}:\n{report}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 30.0, "criterion 3 exceeded 30 s: {elapsed:?}");
    println!(
        "[PASS] criterion 3: skew-symmetry, cocycle identity, and derivation compatibility \
         exact on {} samples per case ({} ms total)",
        samples,
        elapsed.as_millis()
    );
}

#[test]
fn criterion_4_connection_independence() {
    let _guard = exclusive();
    let start = Instant::now();
    let samples = 100;
    for (seed_offset, (name, space)) in cocycle_cases().into_iter().enumerate() {
        let seed = 0xdead + seed_offset as u64;
        let mut rng = ChaCha8Rng::seed_from_u64(seed);
        let max_mode = freq_to_mode(&space, 2);
        let nabla = space
            .loops()
            .connection(space.loops().random_element(&mut rng, max_mode))
            .unwrap();
        let nabla_prime = space
            .loops()
            .connection(space.loops().random_element(&mut rng, max_mode))
            .unwrap();
        let lambda = space.standard_current().unwrap();
        let lift = space.loops().pure_rotation();
        let report = connection_change_check(
            &space, &lambda, &nabla, &nabla_prime, &lift, samples, max_mode, seed,
        )
        .unwrap();
        assert!(report.all_passed(), "case {name}:\n{report}");
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "criterion 4 exceeded 10 s: {elapsed:?}");
    println!(
        "[PASS] criterion 4: ω' - ω = δχ_A exact on {} samples per case, D slots included \
         ({} ms total)",
        samples,
        elapsed.as_millis()
    );
}

#[test]
fn criterion_5_loop_cocycle_values() {
    let _guard = exclusive();
    let start = Instant::now();
    let space = CocycleSpace::new(LoopAlgebra::untwisted(catalogue::su2())).unwrap();
    let cocycle = CovariantCocycle {
        lambda: space.standard_current().unwrap(),
        nabla: space.loops().flat_connection(),
        lift: space.loops().pure_rotation(),
    };
    let su2 = catalogue::su2();
    let killing = su2.killing_form();
    for n in 1..=3u32 {
        for i in 0..3 {
            for j in 0..3 {
                let x = su2.basis_vector(i);
                let y = su2.basis_vector(j);
                let mut xi_p = covext_core::loops::TrigPoly::zero(3);
                xi_p.add_mode(n, covext_core::scalar::vec_from_rat(&x), covext_core::scalar::vec_zero(3));
                let mut eta_p = covext_core::loops::TrigPoly::zero(3);
                eta_p.add_mode(n, covext_core::scalar::vec_zero(3), covext_core::scalar::vec_from_rat(&y));
                let xi = space.loops().element(xi_p).unwrap();
                let eta = space.loops().element(eta_p).unwrap();
                let value = cocycle.omega_gg(&space, &xi, &eta).unwrap();
                // πn·κ(x,y) = (n/2)·κ(x,y)·(2π): a single power of 2π with
                // rational coefficient.
                let expected = TwoPi::monomial(
                    1,
                    rat(n as i64, 2) * killing.eval(&x, &y),
                );
                assert_eq!(value, expected, "n = {n}, pair ({i},{j})");
                // Independent brute-force zero-mode oracle.
                let oracle = support::oracle_omega_gg(&space, &cocycle, &xi, &eta);
                assert_eq!(value, oracle);
                if !value.is_zero() {
                    let (power, coeff) = value.as_monomial().expect("single 2π power");
                    assert_eq!(power, 1);
                    assert_eq!(coeff, rat(n as i64, 2) * killing.eval(&x, &y));
                }
            }
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "criterion 5 exceeded budget: {elapsed:?}");
    println!(
        "[PASS] criterion 5: ω(x·cos(2πnt), y·sin(2πnt)) = πn·κ(x,y) as (rational)·(2π) for \
         n = 1..3, matching the exponential-spectrum oracle ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_6_current_space_dimensions() {
    let _guard = exclusive();
    let start = Instant::now();
    let su2 = CocycleSpace::new(LoopAlgebra::untwisted(catalogue::su2())).unwrap();
    let so4 = catalogue::so4();
    let swap = TwistAutomorphism::new(&so4, catalogue::so4_swap(), 2).unwrap();
    let so4_swap = CocycleSpace::new(LoopAlgebra::new(so4.clone(), swap, 1).unwrap()).unwrap();
    let so4_id = CocycleSpace::new(LoopAlgebra::untwisted(so4)).unwrap();
    for (space, expected) in [(&su2, 1usize), (&so4_swap, 1), (&so4_id, 2)] {
        let lift = space.loops().pure_rotation();
        for max_mode in 1..=3u32 {
            let dim = current_space_dimension(space, &lift, max_mode).unwrap();
            assert_eq!(dim, expected, "truncation at mode {max_mode}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 5.0, "criterion 6 exceeded 5 s: {elapsed:?}");
    println!(
        "[PASS] criterion 6: current-space dimensions 1 (su2), 1 (so4/swap), 2 (so4/identity), \
         stable across truncations 1..3 ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_7_injectivity_probe() {
    let _guard = exclusive();
    let start = Instant::now();
    for (name, space) in cocycle_cases() {
        // Every nonzero invariant current: the basis covectors and their sum.
        let basis = space.invariant_covectors();
        assert!(!basis.is_empty(), "case {name}: no invariant currents");
        let mut currents = Vec::new();
        for v in &basis {
            currents.push(space.current(v.clone(), Rat::one()).unwrap());
        }
        if basis.len() > 1 {
            currents.push(space.standard_current().unwrap());
        }
        for lambda in currents {
            let cocycle = CovariantCocycle {
                lambda,
                nabla: space.loops().flat_connection(),
                lift: space.loops().pure_rotation(),
            };
            let report = injectivity_probe(&space, &cocycle);
            assert!(report.all_passed(), "case {name}:\n{report}");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 7 exceeded 1 s: {elapsed:?}");
    println!(
        "[PASS] criterion 7: commuting pairs with nonzero ω found for every nonzero invariant \
         current; coboundaries vanish on them ({} ms)",
        elapsed.as_millis()
    );
}

#[test]
fn criterion_8_reduction_isomorphism() {
    let _guard = exclusive();
    let start = Instant::now();
    let samples = 100;
    let so4 = catalogue::so4();
    let swap = TwistAutomorphism::new(&so4, catalogue::so4_swap(), 2).unwrap();
    let cases = vec![
        ("so4/swap", LoopAlgebra::new(so4, swap, 1).unwrap()),
        ("su2_sl2r/identity", LoopAlgebra::untwisted(catalogue::su2_sl2r())),
    ];
    for (seed_offset, (name, ctx)) in cases.into_iter().enumerate() {
        let mut rng = ChaCha8Rng::seed_from_u64(0xf1b + seed_offset as u64);
        let red = reduce_to_simple(&ctx).unwrap();
        for _ in 0..samples {
            let x = ctx.random_element(&mut rng, 3);
            let y = ctx.random_element(&mut rng, 3);
            let fx = red.forward(&ctx, &x).unwrap();
            let fy = red.forward(&ctx, &y).unwrap();
            // Bracket preservation.
            let fb = red.forward(&ctx, &ctx.bracket(&x, &y).unwrap()).unwrap();
            for (k, comp) in red.components.iter().enumerate() {
                assert_eq!(
                    comp.loops.bracket(&fx[k], &fy[k]).unwrap(),
                    fb[k],
                    "case {name}: bracket not preserved"
                );
            }
            // Rotation (D) preservation.
            let dx = red
                .forward(&ctx, &ctx.apply_lift(&ctx.pure_rotation(), &x).unwrap())
                .unwrap();
            for (k, comp) in red.components.iter().enumerate() {
                assert_eq!(
                    comp.loops.apply_lift(&comp.loops.pure_rotation(), &fx[k]).unwrap(),
                    dx[k],
                    "case {name}: rotation not preserved"
                );
            }
            // Round trip.
            assert_eq!(red.inverse(&ctx, &fx).unwrap(), x, "case {name}: Φ⁻¹∘Φ ≠ id");
        }
    }
    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 10.0, "criterion 8 exceeded 10 s: {elapsed:?}");
    println!(
        "[PASS] criterion 8: reduction isomorphism preserves brackets and rotation and round-trips \
         on {} samples per case ({} ms total)",
        samples,
        elapsed.as_millis()
    );
}

#[test]
fn criterion_9_negative_controls() {
    let _guard = exclusive();
    let start = Instant::now();
    // Heisenberg: rejected as not semisimple.
    let heis = catalogue::heisenberg();
    assert!(!heis.is_semisimple());
    assert_eq!(minimal_ideals(&heis).unwrap_err(), StructureError::NotSemisimple);

    // Non-invariant covector: rejected by the current constructor.
    let so4 = catalogue::so4();
    let swap = TwistAutomorphism::new(&so4, catalogue::so4_swap(), 2).unwrap();
    let space = CocycleSpace::new(LoopAlgebra::new(so4, swap, 1).unwrap()).unwrap();
    assert!(space.current(vec![rat_int(1), rat_int(-1)], Rat::one()).is_err());
    let sl2c = catalogue::sl2c_real();
    let conj = TwistAutomorphism::new(&sl2c, catalogue::sl2c_conjugation(), 2).unwrap();
    let space = CocycleSpace::new(LoopAlgebra::new(sl2c, conj, 1).unwrap()).unwrap();
    assert!(space.current(vec![rat_int(0), rat_int(1)], Rat::one()).is_err());

    // Corrupted structure tensor: validate pinpoints the witness.
    let mut c = vec![vec![vec![Rat::zero(); 3]; 3]; 3];
    c[0][1][2] = rat_int(1);
    c[1][0][2] = rat_int(1);
    let bad = LieAlgebra::from_tensor(vec!["e1".into(), "e2".into(), "e3".into()], c);
    assert_eq!(bad.validate(), Err(Violation::Antisymmetry { i: 0, j: 1, k: 2 }));
    // Antisymmetric but Jacobi-violating corruption of su(2): set
    // [e2,e3] = e1 + e2 so that the (e1,e2,e3) Jacobi sum picks up [e2,e1].
    let mut c = vec![vec![vec![Rat::zero(); 3]; 3]; 3];
    c[0][1][2] = rat_int(1);
    c[1][0][2] = rat_int(-1);
    c[1][2][0] = rat_int(1);
    c[2][1][0] = rat_int(-1);
    c[1][2][1] = rat_int(1);
    c[2][1][1] = rat_int(-1);
    c[2][0][1] = rat_int(1);
    c[0][2][1] = rat_int(-1);
    let bad = LieAlgebra::from_tensor(vec!["e1".into(), "e2".into(), "e3".into()], c);
    assert!(matches!(bad.validate(), Err(Violation::Jacobi { .. })));

    let elapsed = start.elapsed();
    assert!(elapsed.as_secs_f64() < 1.0, "criterion 9 exceeded 1 s: {elapsed:?}");
    println!(
        "[PASS] criterion 9: non-semisimple input, non-invariant current, and corrupted tensor \
         all rejected with witnesses ({} ms)",
        elapsed.as_millis()
    );
}
