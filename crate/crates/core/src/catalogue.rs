//! Bundled catalogue of rational-structure-constant Lie algebras used by the
//! test suites and the CLI: su(2), sl(2,ℝ), so(4), sl(2,ℂ) as a real
//! algebra, su(2)⊕sl(2,ℝ), and the 3-dimensional Heisenberg algebra as a
//! non-semisimple control. Named finite-order automorphisms are included
//! where the theory needs them.

use num_traits::Zero;

use crate::lie::LieAlgebra;
use crate::matrix::Mat;
use crate::scalar::{rat_int, Rat};

/// A catalogue entry: algebra plus named automorphisms (matrix, order).
#[derive(Debug, Clone)]
pub struct CatalogueEntry {
    pub name: &'static str,
    pub algebra: LieAlgebra,
    pub automorphisms: Vec<(&'static str, Mat, u8)>,
}

/// su(2) in the cyclic basis: [e_i, e_j] = ε_ijk e_k.
pub fn su2() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["e1".into(), "e2".into(), "e3".into()],
        &[
            (0, 1, vec![(2, rat_int(1))]),
            (1, 2, vec![(0, rat_int(1))]),
            (2, 0, vec![(1, rat_int(1))]),
        ],
    )
}

/// sl(2,ℝ) in the basis (h, e, f): \[h,e\] = 2e, \[h,f\] = -2f, \[e,f\] = h.
pub fn sl2r() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["h".into(), "e".into(), "f".into()],
        &[
            (0, 1, vec![(1, rat_int(2))]),
            (0, 2, vec![(2, rat_int(-2))]),
            (1, 2, vec![(0, rat_int(1))]),
        ],
    )
}

/// so(4) in the basis L12, L13, L14, L23, L24, L34 of elementary rotations,
/// with [L_ab, L_cd] = δ_bc L_ad - δ_ac L_bd - δ_bd L_ac + δ_ad L_bc.
pub fn so4() -> LieAlgebra {
    let pairs = [(1usize, 2usize), (1, 3), (1, 4), (2, 3), (2, 4), (3, 4)];
    let labels: Vec<String> = pairs.iter().map(|(a, b)| format!("L{a}{b}")).collect();
    let index = |a: usize, b: usize| -> Option<(usize, i64)> {
        if a == b {
            return None;
        }
        let (p, sign) = if a < b { ((a, b), 1) } else { ((b, a), -1) };
        pairs.iter().position(|&q| q == p).map(|i| (i, sign))
    };
    let mut brackets = Vec::new();
    for (i, &(a, b)) in pairs.iter().enumerate() {
        for (j, &(c, d)) in pairs.iter().enumerate() {
            if j <= i {
                continue;
            }
            let mut terms: Vec<(usize, Rat)> = Vec::new();
            let mut add = |target: Option<(usize, i64)>, sign: i64| {
                if let Some((k, s)) = target {
                    let coeff = rat_int(sign * s);
                    match terms.iter_mut().find(|(t, _)| *t == k) {
                        Some((_, c0)) => *c0 += coeff,
                        None => terms.push((k, coeff)),
                    }
                }
            };
            if b == c {
                add(index(a, d), 1);
            }
            if a == c {
                add(index(b, d), -1);
            }
            if b == d {
                add(index(a, c), -1);
            }
            if a == d {
                add(index(b, c), 1);
            }
            terms.retain(|(_, c)| !c.is_zero());
            if !terms.is_empty() {
                brackets.push((i, j, terms));
            }
        }
    }
    LieAlgebra::from_brackets(labels, &brackets)
}

/// sl(2,ℂ) as a six-dimensional real Lie algebra, basis (h,e,f,ih,ie,if).
pub fn sl2c_real() -> LieAlgebra {
    let labels: Vec<String> = ["h", "e", "f", "ih", "ie", "if"]
        .iter()
        .map(|s| s.to_string())
        .collect();
    // Complex brackets [h,e] = 2e, [h,f] = -2f, [e,f] = h extended by
    // [x, iy] = i[x,y] and [ix, iy] = -[x,y].
    let complex_brackets: [(usize, usize, usize, i64); 3] =
        [(0, 1, 1, 2), (0, 2, 2, -2), (1, 2, 0, 1)];
    let mut brackets = Vec::new();
    for &(x, y, z, c) in &complex_brackets {
        brackets.push((x, y, vec![(z, rat_int(c))]));
        brackets.push((x, y + 3, vec![(z + 3, rat_int(c))]));
        brackets.push((x + 3, y, vec![(z + 3, rat_int(c))]));
        brackets.push((x + 3, y + 3, vec![(z, rat_int(-c))]));
    }
    LieAlgebra::from_brackets(labels, &brackets)
}

/// su(2) ⊕ sl(2,ℝ) with labels u1,u2,u3,h,e,f.
pub fn su2_sl2r() -> LieAlgebra {
    let su2 = LieAlgebra::from_brackets(
        vec!["u1".into(), "u2".into(), "u3".into()],
        &[
            (0, 1, vec![(2, rat_int(1))]),
            (1, 2, vec![(0, rat_int(1))]),
            (2, 0, vec![(1, rat_int(1))]),
        ],
    );
    su2.direct_sum(&sl2r())
}

/// The 3-dimensional Heisenberg algebra \[p,q\] = z: nilpotent, so its Killing
/// form vanishes identically.
pub fn heisenberg() -> LieAlgebra {
    LieAlgebra::from_brackets(
        vec!["p".into(), "q".into(), "z".into()],
        &[(0, 1, vec![(2, rat_int(1))])],
    )
}

/// The outer automorphism of so(4) induced by conjugation with
/// diag(-1,1,1,1): L_1j ↦ -L_1j, L_jk ↦ L_jk. It exchanges the two simple
/// ideals.
pub fn so4_swap() -> Mat {
    let mut m = Mat::identity(6);
    for i in 0..3 {
        m[(i, i)] = rat_int(-1);
    }
    m
}

/// Complex conjugation on sl(2,ℂ) as a real algebra: fixes h,e,f and negates
/// ih,ie,if.
pub fn sl2c_conjugation() -> Mat {
    let mut m = Mat::identity(6);
    for i in 3..6 {
        m[(i, i)] = rat_int(-1);
    }
    m
}

/// Multiplication by i on sl(2,ℂ) as a real algebra; a complex structure in
/// the centroid.
pub fn sl2c_complex_structure() -> Mat {
    let mut m = Mat::zeros(6, 6);
    for k in 0..3 {
        m[(k + 3, k)] = rat_int(1);
        m[(k, k + 3)] = rat_int(-1);
    }
    m
}

/// All bundled algebras with their named automorphisms. Every entry also
/// admits the implicit identity twist.
pub fn entries() -> Vec<CatalogueEntry> {
    vec![
        CatalogueEntry {
            name: "su2",
            algebra: su2(),
            automorphisms: vec![],
        },
        CatalogueEntry {
            name: "sl2r",
            algebra: sl2r(),
            automorphisms: vec![],
        },
        CatalogueEntry {
            name: "so4",
            algebra: so4(),
            automorphisms: vec![("swap", so4_swap(), 2)],
        },
        CatalogueEntry {
            name: "sl2c",
            algebra: sl2c_real(),
            automorphisms: vec![("conjugation", sl2c_conjugation(), 2)],
        },
        CatalogueEntry {
            name: "su2_sl2r",
            algebra: su2_sl2r(),
            automorphisms: vec![],
        },
        CatalogueEntry {
            name: "heisenberg",
            algebra: heisenberg(),
            automorphisms: vec![],
        },
    ]
}
