//! The space of ad-invariant symmetric bilinear forms of a Lie algebra — a
//! concrete model of the dual of the universal-form target V(𝔨) — together
//! with the universal form κ, linear combinations κ_λ, and the induced
//! action of automorphisms on V(𝔨).
//!
//! For a semisimple algebra the basis is adapted to the minimal ideals: each
//! absolutely simple ideal contributes the restriction of the Killing form,
//! and each ideal with a complex structure J additionally contributes
//! K(J·,·). In that basis permutations of isomorphic ideals act as
//! permutation matrices and complex conjugation acts as diag(1,-1) on its
//! (Re, Im) pair of coordinates.

use num_traits::{Signed, Zero};

use crate::lie::{LieAlgebra, LieError, SymBilinearForm};
use crate::matrix::Mat;
use crate::minpoly::minimal_polynomial;
use crate::scalar::{rat, Rat, TwoPi};
use crate::structure::{centroid_basis, minimal_ideals, StructureError};

/// Basis λ₁,…,λ_m of the invariant-forms space; coordinates of V(𝔨) are
/// taken in the dual basis, so a value κ(x,y) has coordinates (λ_a(x,y))_a.
#[derive(Debug, Clone)]
pub struct InvariantFormSpace {
    forms: Vec<SymBilinearForm>,
    adapted: bool,
}

/// A point of V(𝔨) in the coordinates dual to the chosen form basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VValue {
    pub coords: Vec<Rat>,
}

impl InvariantFormSpace {
    pub fn m(&self) -> usize {
        self.forms.len()
    }

    pub fn forms(&self) -> &[SymBilinearForm] {
        &self.forms
    }

    /// Whether the basis is adapted to the minimal-ideal decomposition.
    pub fn is_adapted(&self) -> bool {
        self.adapted
    }

    /// κ(x, y) for ℚ\[2π\]-coefficient vectors, as a V-coordinate vector.
    pub fn pair_twopi(&self, x: &[TwoPi], y: &[TwoPi]) -> Vec<TwoPi> {
        self.forms.iter().map(|f| f.eval_twopi(x, y)).collect()
    }
}

/// Basis of the exact kernel of the ad-invariance system
/// B(\[z,x\],y) + B(x,\[z,y\]) = 0 over symmetric matrices.
///
/// For semisimple algebras the basis is canonicalized ideal-wise as described
/// in the module docs; otherwise the reduced row echelon form of the
/// vectorized solutions is returned.
pub fn invariant_form_space(alg: &LieAlgebra) -> InvariantFormSpace {
    let raw = invariance_kernel(alg);
    if let Some(adapted) = adapted_basis(alg, &raw) {
        return InvariantFormSpace { forms: adapted, adapted: true };
    }
    InvariantFormSpace { forms: raw, adapted: false }
}

fn sym_index(n: usize, i: usize, j: usize) -> usize {
    let (a, b) = if i <= j { (i, j) } else { (j, i) };
    a * n - a * (a + 1) / 2 + b
}

fn invariance_kernel(alg: &LieAlgebra) -> Vec<SymBilinearForm> {
    let n = alg.dim();
    let unknowns = n * (n + 1) / 2;
    let mut rows = Vec::new();
    for z in 0..n {
        for x in 0..n {
            for y in x..n {
                let mut row = vec![Rat::zero(); unknowns];
                for k in 0..n {
                    let czx = alg.structure_constant(z, x, k);
                    if !czx.is_zero() {
                        row[sym_index(n, k, y)] += czx.clone();
                    }
                    let czy = alg.structure_constant(z, y, k);
                    if !czy.is_zero() {
                        row[sym_index(n, x, k)] += czy.clone();
                    }
                }
                rows.push(row);
            }
        }
    }
    let kernel = Mat::from_rows(rows).kernel_basis();
    if kernel.is_empty() {
        return Vec::new();
    }
    let (rref, pivots) = Mat::from_rows(kernel).rref();
    (0..pivots.len())
        .map(|r| {
            SymBilinearForm::new(Mat::from_fn(n, n, |i, j| rref[(r, sym_index(n, i, j))].clone()))
        })
        .collect()
}

/// Ideal-adapted basis for a semisimple algebra, or `None` when the algebra
/// is not semisimple or the construction does not reproduce the kernel.
fn adapted_basis(alg: &LieAlgebra, raw: &[SymBilinearForm]) -> Option<Vec<SymBilinearForm>> {
    if !alg.is_semisimple() {
        return None;
    }
    let decomp = minimal_ideals(alg).ok()?;
    let n = alg.dim();
    let mut forms = Vec::new();
    for (idx, ideal) in decomp.ideals.iter().enumerate() {
        let coords = decomp.coords_matrix(idx);
        let k_sub = ideal.restricted_killing(alg);
        forms.push(SymBilinearForm::new(coords.transpose().mul(&k_sub).mul(&coords)));
        if decomp.complex[idx] {
            let sub = ideal.as_subalgebra(alg).ok()?;
            let j = complex_structure_generator(&sub)?;
            let g_sub = j.transpose().mul(&k_sub);
            if !g_sub.is_symmetric() {
                return None;
            }
            forms.push(SymBilinearForm::new(coords.transpose().mul(&g_sub).mul(&coords)));
        }
    }
    // The adapted family must be exactly a basis of the raw kernel.
    if forms.len() != raw.len() {
        return None;
    }
    let vectorized = Mat::from_rows(
        forms
            .iter()
            .map(|f| {
                let mut v = Vec::with_capacity(n * n);
                for i in 0..n {
                    for jj in 0..n {
                        v.push(f.matrix()[(i, jj)].clone());
                    }
                }
                v
            })
            .collect(),
    );
    if vectorized.rank() != forms.len() {
        return None;
    }
    Some(forms)
}

/// A canonical odd centroid generator of a complex ideal: J₀ shifted to have
/// trace zero, with deterministic sign, so that J² is a negative scalar.
fn complex_structure_generator(sub: &LieAlgebra) -> Option<Mat> {
    let cent = centroid_basis(sub).ok()?;
    for elem in &cent {
        let mp = minimal_polynomial(&elem.matrix);
        if mp.degree() != 2 {
            continue;
        }
        let p = mp.coeff(1);
        let mut j = elem.matrix.clone();
        let half_p = &p * rat(1, 2);
        for i in 0..j.nrows() {
            j[(i, i)] += half_p.clone();
        }
        // Fix the sign: first nonzero entry positive.
        'scan: for r in 0..j.nrows() {
            for c in 0..j.ncols() {
                if !j[(r, c)].is_zero() {
                    if j[(r, c)].is_negative() {
                        j = j.scale(&rat(-1, 1));
                    }
                    break 'scan;
                }
            }
        }
        return Some(j);
    }
    None
}

/// κ(x, y) in V-coordinates: `coords[a]` = λ_a(x, y).
pub fn universal_form(
    vspace: &InvariantFormSpace,
    x: &[Rat],
    y: &[Rat],
) -> Result<VValue, LieError> {
    for f in vspace.forms() {
        if x.len() != f.dim() || y.len() != f.dim() {
            return Err(LieError::DimensionMismatch {
                expected: f.dim(),
                got: if x.len() != f.dim() { x.len() } else { y.len() },
            });
        }
    }
    Ok(VValue {
        coords: vspace.forms().iter().map(|f| f.eval(x, y)).collect(),
    })
}

/// κ_μ = Σ_a μ_a λ_a as a symmetric bilinear form.
pub fn kappa_lambda(vspace: &InvariantFormSpace, mu: &[Rat]) -> SymBilinearForm {
    assert_eq!(mu.len(), vspace.m(), "covector length must equal dim V");
    let n = vspace.forms().first().map_or(0, SymBilinearForm::dim);
    let mut acc = Mat::zeros(n, n);
    for (c, f) in mu.iter().zip(vspace.forms()) {
        if !c.is_zero() {
            acc = acc.add(&f.matrix().scale(c));
        }
    }
    SymBilinearForm::new(acc)
}

/// The matrix P of the pullback action of an automorphism φ on the form
/// basis: λ_a(φx, φy) = Σ_b `P[b][a]`·λ_b(x, y).
///
/// P acts on covectors μ (currents pair against it); the action on
/// V-coordinates is Pᵀ. Pullback is contravariant, so for compositions
/// P(φ∘ψ) = P(ψ)·P(φ).
pub fn automorphism_action_on_v(
    alg: &LieAlgebra,
    vspace: &InvariantFormSpace,
    phi: &Mat,
) -> Result<Mat, StructureError> {
    if !alg.is_automorphism(phi) {
        return Err(StructureError::NotAnAutomorphism);
    }
    let m = vspace.m();
    let n = alg.dim();
    // Columns: vectorized basis forms.
    let basis_cols = Mat::from_fn(n * n, m, |r, b| {
        let (i, j) = (r / n, r % n);
        vspace.forms()[b].matrix()[(i, j)].clone()
    });
    let mut p = Mat::zeros(m, m);
    for a in 0..m {
        let pulled = phi.transpose().mul(vspace.forms()[a].matrix()).mul(phi);
        let target: Vec<Rat> = (0..n * n).map(|r| pulled[(r / n, r % n)].clone()).collect();
        let x = basis_cols
            .solve(&target)
            .filter(|x| basis_cols.mul_vec(x) == target)
            .expect("pullback of an invariant form stays in the invariant-form space");
        for b in 0..m {
            p[(b, a)] = x[b].clone();
        }
    }
    Ok(p)
}

/// Invariant covectors of a V-action matrix: basis of {μ : P·μ = μ}.
pub fn invariant_covectors(p: &Mat) -> Vec<Vec<Rat>> {
    let m = p.nrows();
    let system = p.sub(&Mat::identity(m));
    system.kernel_basis()
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::catalogue;
    use crate::scalar::rat_int;

    #[test]
    fn su2_forms_are_killing() {
        let alg = catalogue::su2();
        let vs = invariant_form_space(&alg);
        assert_eq!(vs.m(), 1);
        assert!(vs.is_adapted());
        assert_eq!(vs.forms()[0], alg.killing_form());
        // universal_form(e1,e1) = (-2)
        let v = universal_form(&vs, &alg.basis_vector(0), &alg.basis_vector(0)).unwrap();
        assert_eq!(v.coords, vec![rat_int(-2)]);
    }

    #[test]
    fn sl2r_forms_are_killing() {
        let alg = catalogue::sl2r();
        let vs = invariant_form_space(&alg);
        assert_eq!(vs.m(), 1);
        assert_eq!(vs.forms()[0], alg.killing_form());
    }

    #[test]
    fn so4_has_one_form_per_ideal() {
        let alg = catalogue::so4();
        let vs = invariant_form_space(&alg);
        assert_eq!(vs.m(), 2);
        let decomp = minimal_ideals(&alg).unwrap();
        // Each basis form restricts to the Killing form on its own ideal and
        // vanishes on the other.
        for (a, form) in vs.forms().iter().enumerate() {
            for (i, ideal) in decomp.ideals.iter().enumerate() {
                for u in ideal.basis_rows() {
                    for w in decomp.ideals[1 - i].basis_rows() {
                        assert!(form.eval(&u, &w).is_zero());
                    }
                    if i == a {
                        assert_eq!(
                            form.eval(&u, &u),
                            alg.killing_form().eval(&u, &u)
                        );
                    } else {
                        assert!(form.eval(&u, &u).is_zero());
                    }
                }
            }
        }
        // κ(u, v) = 0 for u, v in different ideals.
        let u = decomp.ideals[0].basis_rows()[0].clone();
        let w = decomp.ideals[1].basis_rows()[0].clone();
        let v = universal_form(&vs, &u, &w).unwrap();
        assert_eq!(v.coords, vec![rat_int(0), rat_int(0)]);
    }

    #[test]
    fn sl2c_has_real_and_imaginary_killing_parts() {
        let alg = catalogue::sl2c_real();
        let vs = invariant_form_space(&alg);
        assert_eq!(vs.m(), 2);
        assert!(vs.is_adapted());
        // First basis form is the real Killing form.
        assert_eq!(vs.forms()[0], alg.killing_form());
        // All basis forms are exactly invariant.
        for f in vs.forms() {
            assert!(f.is_invariant(&alg));
        }
    }

    #[test]
    fn every_basis_form_is_invariant() {
        for alg in [
            catalogue::su2(),
            catalogue::sl2r(),
            catalogue::so4(),
            catalogue::sl2c_real(),
            catalogue::su2_sl2r(),
        ] {
            let vs = invariant_form_space(&alg);
            for f in vs.forms() {
                assert!(f.is_invariant(&alg));
            }
        }
    }

    #[test]
    fn m_equals_sum_of_centroid_dims() {
        for alg in [
            catalogue::su2(),
            catalogue::so4(),
            catalogue::sl2c_real(),
            catalogue::su2_sl2r(),
        ] {
            let vs = invariant_form_space(&alg);
            let decomp = minimal_ideals(&alg).unwrap();
            let sum: usize = decomp.centroid_dims.iter().sum();
            assert_eq!(vs.m(), sum);
        }
    }

    #[test]
    fn kappa_lambda_combinations() {
        let alg = catalogue::so4();
        let vs = invariant_form_space(&alg);
        let zero = kappa_lambda(&vs, &[rat_int(0), rat_int(0)]);
        assert!(zero.matrix().is_zero());
        let first = kappa_lambda(&vs, &[rat_int(1), rat_int(0)]);
        assert_eq!(&first, &vs.forms()[0]);
        // su(2), μ = (1): the Killing form itself.
        let su2 = catalogue::su2();
        let vs2 = invariant_form_space(&su2);
        assert_eq!(kappa_lambda(&vs2, &[rat_int(1)]), su2.killing_form());
    }

    #[test]
    fn swap_acts_as_transposition_on_v() {
        let alg = catalogue::so4();
        let vs = invariant_form_space(&alg);
        let p = automorphism_action_on_v(&alg, &vs, &catalogue::so4_swap()).unwrap();
        let expected = Mat::from_rows(vec![
            vec![rat_int(0), rat_int(1)],
            vec![rat_int(1), rat_int(0)],
        ]);
        assert_eq!(p, expected);
        let inv = invariant_covectors(&p);
        assert_eq!(inv.len(), 1);
    }

    #[test]
    fn conjugation_acts_as_diag_1_minus_1() {
        let alg = catalogue::sl2c_real();
        let vs = invariant_form_space(&alg);
        let p = automorphism_action_on_v(&alg, &vs, &catalogue::sl2c_conjugation()).unwrap();
        let expected = Mat::from_rows(vec![
            vec![rat_int(1), rat_int(0)],
            vec![rat_int(0), rat_int(-1)],
        ]);
        assert_eq!(p, expected);
    }

    #[test]
    fn inner_automorphisms_act_trivially() {
        // Unipotent inner automorphism of sl(2,R): exp(ad e) is rational.
        let alg = catalogue::sl2r();
        let ad_e = alg.adjoint(&alg.basis_vector(1)).unwrap();
        let exp = Mat::identity(3)
            .add(&ad_e)
            .add(&ad_e.mul(&ad_e).scale(&rat(1, 2)));
        assert!(alg.is_automorphism(&exp));
        let vs = invariant_form_space(&alg);
        assert_eq!(automorphism_action_on_v(&alg, &vs, &exp).unwrap(), Mat::identity(1));

        // A rational rotation in SO(3) = Inn(su(2)).
        let su2 = catalogue::su2();
        let rot = Mat::from_rows(vec![
            vec![rat(3, 5), rat(-4, 5), rat_int(0)],
            vec![rat(4, 5), rat(3, 5), rat_int(0)],
            vec![rat_int(0), rat_int(0), rat_int(1)],
        ]);
        assert!(su2.is_automorphism(&rot));
        let vs2 = invariant_form_space(&su2);
        assert_eq!(automorphism_action_on_v(&su2, &vs2, &rot).unwrap(), Mat::identity(1));
    }

    #[test]
    fn action_composition_is_contravariant() {
        // On su(2)⊕su(2)⊕su(2), factor permutations compose contravariantly
        // through the pullback matrices: P(φ∘ψ) = P(ψ)·P(φ).
        let alg = catalogue::su2()
            .direct_sum(&catalogue::su2())
            .direct_sum(&catalogue::su2());
        let vs = invariant_form_space(&alg);
        assert_eq!(vs.m(), 3);
        let perm = |p: [usize; 3]| {
            // Block permutation sending factor k to position p[k].
            let mut m = Mat::zeros(9, 9);
            for (k, &pk) in p.iter().enumerate() {
                for d in 0..3 {
                    m[(3 * pk + d, 3 * k + d)] = rat_int(1);
                }
            }
            m
        };
        let phi = perm([1, 0, 2]);
        let psi = perm([0, 2, 1]);
        assert!(alg.is_automorphism(&phi));
        assert!(alg.is_automorphism(&psi));
        let p_phi = automorphism_action_on_v(&alg, &vs, &phi).unwrap();
        let p_psi = automorphism_action_on_v(&alg, &vs, &psi).unwrap();
        let p_comp = automorphism_action_on_v(&alg, &vs, &phi.mul(&psi)).unwrap();
        assert_eq!(p_comp, p_psi.mul(&p_phi));
        // Equivalently, the action on V-coordinates (the transposes) is a
        // genuine homomorphism.
        assert_eq!(p_comp.transpose(), p_phi.transpose().mul(&p_psi.transpose()));
    }

    #[test]
    fn non_automorphism_is_rejected() {
        let alg = catalogue::su2();
        let vs = invariant_form_space(&alg);
        let mut bad = Mat::identity(3);
        bad[(0, 0)] = rat_int(2);
        assert_eq!(
            automorphism_action_on_v(&alg, &vs, &bad).unwrap_err(),
            StructureError::NotAnAutomorphism
        );
    }

    #[test]
    fn compact_generator_is_negative_definite() {
        let vs = invariant_form_space(&catalogue::su2());
        assert_eq!(vs.forms()[0].signature(), (0, 3, 0));
    }
}
