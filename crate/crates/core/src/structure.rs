//! Decomposition of a semisimple Lie algebra into its minimal (simple)
//! ideals, with compactness and complex-structure classification.
//!
//! The splitting device is the centroid: linear maps commuting with every
//! adjoint operator. A generic centroid element acts on each simple ideal as
//! a field scalar (ℝ or ℂ), so the kernels of the irreducible factors of its
//! minimal polynomial recover the ideals. Factoring happens over ℚ; splits
//! that would require irrational coordinates are reported, not approximated.

use num_traits::{One, Signed, Zero};
use rand::Rng;
use rand::SeedableRng;
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::lie::{LieAlgebra, LieError};
use crate::matrix::Mat;
use crate::minpoly::{factor_over_q, minimal_polynomial, PolyQ};
use crate::scalar::{rat_int, Rat};

/// Fixed seed for the generic-element search, so decompositions are
/// reproducible across runs.
const SPLIT_SEED: u64 = 0x5eed_1dea;
const MAX_SPLIT_ATTEMPTS: usize = 24;

#[derive(Debug, Error, PartialEq, Eq)]
pub enum StructureError {
    #[error("the algebra is not semisimple (degenerate Killing form)")]
    NotSemisimple,
    #[error("minimal ideals are not defined over the rationals: {0}")]
    IrrationalSplit(String),
    #[error("matrix is not a Lie algebra automorphism")]
    NotAnAutomorphism,
    #[error(transparent)]
    Lie(#[from] LieError),
}

/// A linear map commuting with the whole adjoint representation.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CentroidElement {
    pub matrix: Mat,
}

/// An ideal of the ambient algebra, stored as a canonical (RREF) row basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Ideal {
    basis: Mat,
}

impl Ideal {
    fn from_rows(rows: Vec<Vec<Rat>>) -> Self {
        let (rref, pivots) = Mat::from_rows(rows).rref();
        let basis = Mat::from_fn(pivots.len(), rref.ncols(), |i, j| rref[(i, j)].clone());
        Ideal { basis }
    }

    /// Rows are basis vectors in ambient coordinates.
    pub fn basis(&self) -> &Mat {
        &self.basis
    }

    pub fn dim(&self) -> usize {
        self.basis.nrows()
    }

    pub fn ambient_dim(&self) -> usize {
        self.basis.ncols()
    }

    pub fn basis_rows(&self) -> Vec<Vec<Rat>> {
        self.basis.rows_vec()
    }

    /// The ideal as a Lie algebra in its own basis.
    pub fn as_subalgebra(&self, alg: &LieAlgebra) -> Result<LieAlgebra, LieError> {
        alg.subalgebra(&self.basis_rows())
    }

    /// Ambient Killing form restricted to the ideal (Gram matrix in the
    /// ideal basis). For an ideal of a semisimple algebra this equals the
    /// Killing form of the ideal itself.
    pub fn restricted_killing(&self, alg: &LieAlgebra) -> Mat {
        let k = alg.killing_form();
        let b = &self.basis;
        Mat::from_fn(self.dim(), self.dim(), |i, j| k.eval(b.row(i), b.row(j)))
    }
}

/// Decomposition into minimal ideals with classification flags.
#[derive(Debug, Clone)]
pub struct IdealDecomposition {
    pub ideals: Vec<Ideal>,
    pub compact: Vec<bool>,
    pub complex: Vec<bool>,
    pub signatures: Vec<(usize, usize, usize)>,
    pub centroid_dims: Vec<usize>,
    /// Indices grouped by the invariant tuple (dim, signature, centroid dim).
    pub isotypic: Vec<Vec<usize>>,
}

impl IdealDecomposition {
    pub fn len(&self) -> usize {
        self.ideals.len()
    }

    pub fn is_empty(&self) -> bool {
        self.ideals.is_empty()
    }

    /// All ideal bases stacked into one square matrix (rows = basis vectors).
    pub fn stacked_basis(&self) -> Mat {
        let mut it = self.ideals.iter();
        let first = it.next().expect("decomposition has at least one ideal");
        let mut acc = first.basis().clone();
        for ideal in it {
            acc = acc.vstack(ideal.basis());
        }
        acc
    }

    /// Projector onto ideal `i` along the other ideals, acting on column
    /// vectors.
    pub fn projector(&self, i: usize) -> Mat {
        let u = self.stacked_basis();
        let n = u.nrows();
        let uinv_t = u.inverse().expect("ideal bases span the algebra").transpose();
        let mut e = Mat::zeros(n, n);
        let start: usize = self.ideals[..i].iter().map(Ideal::dim).sum();
        for d in 0..self.ideals[i].dim() {
            e[(start + d, start + d)] = Rat::one();
        }
        u.transpose().mul(&e).mul(&uinv_t)
    }

    /// Matrix extracting ideal-`i` coordinates from an ambient column vector.
    pub fn coords_matrix(&self, i: usize) -> Mat {
        let u = self.stacked_basis();
        let uinv_t = u.inverse().expect("ideal bases span the algebra").transpose();
        let start: usize = self.ideals[..i].iter().map(Ideal::dim).sum();
        let k = self.ideals[i].dim();
        Mat::from_fn(k, u.ncols(), |r, c| uinv_t[(start + r, c)].clone())
    }

    /// Matrix embedding ideal-`i` coordinates into the ambient algebra.
    pub fn inclusion_matrix(&self, i: usize) -> Mat {
        self.ideals[i].basis().transpose()
    }
}

/// Basis of the centroid {c : c·ad(x) = ad(x)·c for all x}, canonicalized by
/// row reduction of the vectorized matrices.
pub fn centroid_basis(alg: &LieAlgebra) -> Result<Vec<CentroidElement>, StructureError> {
    if !alg.is_semisimple() {
        return Err(StructureError::NotSemisimple);
    }
    Ok(centroid_basis_unchecked(alg))
}

fn centroid_basis_unchecked(alg: &LieAlgebra) -> Vec<CentroidElement> {
    let n = alg.dim();
    let ads: Vec<Mat> = (0..n)
        .map(|i| alg.adjoint(&alg.basis_vector(i)).expect("basis vector has the right length"))
        .collect();
    // Unknown matrix C vectorized row-major; equations (C·A - A·C)[r][s] = 0.
    let mut rows = Vec::with_capacity(n * n * n);
    for a_mat in &ads {
        for r in 0..n {
            for s in 0..n {
                let mut row = vec![Rat::zero(); n * n];
                for m in 0..n {
                    // + C[r][m] A[m][s]
                    row[r * n + m] += a_mat[(m, s)].clone();
                    // - A[r][m] C[m][s]
                    row[m * n + s] -= a_mat[(r, m)].clone();
                }
                rows.push(row);
            }
        }
    }
    let system = Mat::from_rows(rows);
    let kernel = system.kernel_basis();
    if kernel.is_empty() {
        return Vec::new();
    }
    // Canonical basis: RREF of the kernel vectors.
    let (rref, pivots) = Mat::from_rows(kernel).rref();
    (0..pivots.len())
        .map(|i| CentroidElement {
            matrix: Mat::from_fn(n, n, |r, s| rref[(i, r * n + s)].clone()),
        })
        .collect()
}

struct Part {
    /// Rows: basis of the part in ambient coordinates.
    basis: Mat,
}

/// Minimal ideals of a semisimple algebra. The result is canonical: ideals
/// are RREF-based and sorted by (dimension, lexicographic basis).
pub fn minimal_ideals(alg: &LieAlgebra) -> Result<IdealDecomposition, StructureError> {
    if !alg.is_semisimple() {
        return Err(StructureError::NotSemisimple);
    }
    let n = alg.dim();
    let mut rng = ChaCha8Rng::seed_from_u64(SPLIT_SEED);
    let mut queue = vec![Part { basis: Mat::identity(n) }];
    let mut finished: Vec<(Ideal, usize)> = Vec::new(); // ideal, centroid dim

    while let Some(part) = queue.pop() {
        let sub = alg.subalgebra(&part.basis.rows_vec())?;
        let cent = centroid_basis_unchecked(&sub);
        match cent.len() {
            0 => return Err(StructureError::NotSemisimple),
            1 => {
                finished.push((Ideal::from_rows(part.basis.rows_vec()), 1));
                continue;
            }
            _ => {}
        }
        if let Some(kernels) = try_split(&cent, &part, &mut rng) {
            queue.extend(kernels);
            continue;
        }
        // No rational split. A two-dimensional centroid that is a field with
        // negative discriminant is a complex structure; anything else cannot
        // be split in rational arithmetic.
        if cent.len() == 2 {
            let j0 = cent
                .iter()
                .map(|c| (c, minimal_polynomial(&c.matrix)))
                .find(|(_, mp)| mp.degree() == 2)
                .map(|(_, mp)| mp);
            if let Some(mp) = j0 {
                let p = mp.coeff(1);
                let q = mp.coeff(0);
                let disc = &p * &p - rat_int(4) * &q;
                if disc.is_negative() {
                    finished.push((Ideal::from_rows(part.basis.rows_vec()), 2));
                    continue;
                }
                return Err(StructureError::IrrationalSplit(format!(
                    "a {}-dimensional ideal splits only over a real quadratic field \
                     (centroid minimal polynomial {mp})",
                    part.basis.nrows()
                )));
            }
        }
        return Err(StructureError::IrrationalSplit(format!(
            "no rational splitting element found for a {}-dimensional ideal \
             with centroid of dimension {}",
            part.basis.nrows(),
            cent.len()
        )));
    }

    finished.sort_by(|(a, _), (b, _)| {
        a.dim().cmp(&b.dim()).then_with(|| a.basis().lex_cmp(b.basis()))
    });

    let ideals: Vec<Ideal> = finished.iter().map(|(i, _)| i.clone()).collect();
    let centroid_dims: Vec<usize> = finished.iter().map(|(_, c)| *c).collect();
    let signatures: Vec<(usize, usize, usize)> = ideals
        .iter()
        .map(|i| i.restricted_killing(alg).signature())
        .collect();
    let compact: Vec<bool> = ideals
        .iter()
        .zip(&signatures)
        .map(|(i, sig)| *sig == (0, i.dim(), 0))
        .collect();
    let complex: Vec<bool> = centroid_dims.iter().map(|&c| c == 2).collect();
    let isotypic = group_by_invariants(&ideals, &signatures, &centroid_dims);

    Ok(IdealDecomposition {
        ideals,
        compact,
        complex,
        signatures,
        centroid_dims,
        isotypic,
    })
}

/// Split a part along the factor kernels of a centroid element with a
/// reducible minimal polynomial. Candidates: centroid basis elements, their
/// pairwise sums, then seeded random combinations.
fn try_split(cent: &[CentroidElement], part: &Part, rng: &mut ChaCha8Rng) -> Option<Vec<Part>> {
    let k = part.basis.nrows();
    let mut candidates: Vec<Mat> = cent.iter().map(|c| c.matrix.clone()).collect();
    for i in 0..cent.len() {
        for j in (i + 1)..cent.len() {
            candidates.push(cent[i].matrix.add(&cent[j].matrix));
        }
    }
    for _ in 0..MAX_SPLIT_ATTEMPTS {
        let coeffs: Vec<Rat> = (0..cent.len())
            .map(|_| rat_int(rng.gen_range(-9i64..=9)))
            .collect();
        let mut z = Mat::zeros(k, k);
        for (c, elem) in coeffs.iter().zip(cent) {
            z = z.add(&elem.matrix.scale(c));
        }
        candidates.push(z);
    }

    for z in &candidates {
        let mp = minimal_polynomial(z);
        if mp.degree() < 2 || !mp.is_squarefree() {
            continue;
        }
        let f = factor_over_q(&mp);
        let mut chunks: Vec<PolyQ> = f.factors;
        if let Some(u) = f.unresolved {
            chunks.push(u);
        }
        if chunks.len() < 2 {
            continue;
        }
        let mut parts = Vec::new();
        let mut total = 0;
        for chunk in &chunks {
            let m = chunk.eval_matrix(z);
            let kernel = m.kernel_basis();
            if kernel.is_empty() {
                continue;
            }
            total += kernel.len();
            // Kernel vectors are in part coordinates; map to ambient rows.
            let rows: Vec<Vec<Rat>> = kernel
                .iter()
                .map(|c| {
                    let mut row = vec![Rat::zero(); part.basis.ncols()];
                    for (a, coeff) in c.iter().enumerate() {
                        if coeff.is_zero() {
                            continue;
                        }
                        for (j, entry) in part.basis.row(a).iter().enumerate() {
                            row[j] += coeff * entry;
                        }
                    }
                    row
                })
                .collect();
            parts.push(Part { basis: Mat::from_rows(rows) });
        }
        if parts.len() >= 2 && total == k {
            return Some(parts);
        }
    }
    None
}

fn group_by_invariants(
    ideals: &[Ideal],
    signatures: &[(usize, usize, usize)],
    centroid_dims: &[usize],
) -> Vec<Vec<usize>> {
    let mut groups: Vec<((usize, (usize, usize, usize), usize), Vec<usize>)> = Vec::new();
    for (i, ideal) in ideals.iter().enumerate() {
        let key = (ideal.dim(), signatures[i], centroid_dims[i]);
        match groups.iter_mut().find(|(k, _)| *k == key) {
            Some((_, v)) => v.push(i),
            None => groups.push((key, vec![i])),
        }
    }
    groups.into_iter().map(|(_, v)| v).collect()
}

/// Compactness test: the ambient Killing form restricted to the ideal is
/// negative definite.
pub fn is_compact_ideal(alg: &LieAlgebra, ideal: &Ideal) -> bool {
    ideal.restricted_killing(alg).signature() == (0, ideal.dim(), 0)
}

/// A minimal ideal carries a complex structure iff its centroid is
/// two-dimensional.
pub fn has_complex_structure(alg: &LieAlgebra, ideal: &Ideal) -> Result<bool, StructureError> {
    let sub = ideal.as_subalgebra(alg)?;
    Ok(centroid_basis_unchecked(&sub).len() == 2)
}

/// Ideals grouped by the invariant tuple (dim, Killing signature, centroid
/// dimension). Within the bundled catalogue this separates non-isomorphic
/// simple ideals; equal tuples are grouped without an isomorphism proof.
pub fn isotypic_components(decomp: &IdealDecomposition) -> Vec<Vec<usize>> {
    decomp.isotypic.clone()
}

/// Partition of the minimal ideals into (compact, noncompact).
pub fn split_compact_noncompact(
    alg: &LieAlgebra,
) -> Result<(Vec<Ideal>, Vec<Ideal>), StructureError> {
    let decomp = minimal_ideals(alg)?;
    let mut compact = Vec::new();
    let mut noncompact = Vec::new();
    for (ideal, &is_cpt) in decomp.ideals.iter().zip(&decomp.compact) {
        if is_cpt {
            compact.push(ideal.clone());
        } else {
            noncompact.push(ideal.clone());
        }
    }
    Ok((compact, noncompact))
}
