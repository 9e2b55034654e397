//! Finite-dimensional real Lie algebras presented by rational structure
//! constants: bracket, adjoint representation, Killing form, and the Cartan
//! semisimplicity test. All arithmetic is exact.

use num_traits::{One, Zero};
use thiserror::Error;

use crate::matrix::Mat;
use crate::scalar::{Rat, TwoPi};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LieError {
    #[error("dimension mismatch: expected a vector of length {expected}, got {got}")]
    DimensionMismatch { expected: usize, got: usize },
    #[error("the given vectors do not span a bracket-closed subspace")]
    NotClosed,
    #[error("change of basis matrix is singular")]
    SingularBasis,
}

/// Report produced by [`LieAlgebra::validate`]; identifies the first failing
/// index tuple. Indices are 0-based positions into the basis.
#[derive(Debug, Clone, PartialEq, Eq)]
pub enum Violation {
    Antisymmetry { i: usize, j: usize, k: usize },
    Jacobi { i: usize, j: usize, k: usize, l: usize, residual: Rat },
}

impl std::fmt::Display for Violation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        match self {
            Violation::Antisymmetry { i, j, k } => {
                write!(f, "antisymmetry fails at (i,j,k) = ({i},{j},{k})")
            }
            Violation::Jacobi { i, j, k, l, residual } => write!(
                f,
                "Jacobi identity fails at (i,j,k,l) = ({i},{j},{k},{l}), residual {residual}"
            ),
        }
    }
}

/// A Lie algebra over ℚ given by a dense structure tensor `c[i][j][k]` with
/// \[e_i, e_j\] = Σ_k `c[i][j][k]`·e_k.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LieAlgebra {
    labels: Vec<String>,
    c: Vec<Vec<Vec<Rat>>>,
}

impl LieAlgebra {
    /// Build from an explicit structure tensor. No validation is performed;
    /// call [`validate`](Self::validate) to check antisymmetry and Jacobi.
    pub fn from_tensor(labels: Vec<String>, c: Vec<Vec<Vec<Rat>>>) -> Self {
        let n = labels.len();
        assert_eq!(c.len(), n);
        assert!(c.iter().all(|p| p.len() == n && p.iter().all(|q| q.len() == n)));
        LieAlgebra { labels, c }
    }

    /// Build from a list of brackets `(i, j, [(k, coeff)...])` meaning
    /// [e_i, e_j] = Σ coeff·e_k. The antisymmetric counterpart of each entry
    /// is filled in automatically.
    pub fn from_brackets(labels: Vec<String>, brackets: &[(usize, usize, Vec<(usize, Rat)>)]) -> Self {
        let n = labels.len();
        let mut c = vec![vec![vec![Rat::zero(); n]; n]; n];
        for (i, j, terms) in brackets {
            for (k, coeff) in terms {
                c[*i][*j][*k] = coeff.clone();
                c[*j][*i][*k] = -coeff.clone();
            }
        }
        LieAlgebra { labels, c }
    }

    pub fn dim(&self) -> usize {
        self.labels.len()
    }

    pub fn labels(&self) -> &[String] {
        &self.labels
    }

    pub fn label(&self, i: usize) -> &str {
        &self.labels[i]
    }

    pub fn structure_constant(&self, i: usize, j: usize, k: usize) -> &Rat {
        &self.c[i][j][k]
    }

    pub fn basis_vector(&self, i: usize) -> Vec<Rat> {
        let mut v = vec![Rat::zero(); self.dim()];
        v[i] = Rat::one();
        v
    }

    /// Exact check of antisymmetry and the Jacobi identity; reports the first
    /// violating index tuple.
    pub fn validate(&self) -> Result<(), Violation> {
        let n = self.dim();
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    if &self.c[i][j][k] + &self.c[j][i][k] != Rat::zero() {
                        return Err(Violation::Antisymmetry { i, j, k });
                    }
                }
            }
        }
        for i in 0..n {
            for j in (i + 1)..n {
                for k in (j + 1)..n {
                    for l in 0..n {
                        let mut sum = Rat::zero();
                        for m in 0..n {
                            sum += &self.c[i][j][m] * &self.c[m][k][l];
                            sum += &self.c[j][k][m] * &self.c[m][i][l];
                            sum += &self.c[k][i][m] * &self.c[m][j][l];
                        }
                        if !sum.is_zero() {
                            return Err(Violation::Jacobi { i, j, k, l, residual: sum });
                        }
                    }
                }
            }
        }
        Ok(())
    }

    /// \[x, y\] in basis coordinates.
    pub fn bracket(&self, x: &[Rat], y: &[Rat]) -> Result<Vec<Rat>, LieError> {
        self.check_len(x)?;
        self.check_len(y)?;
        Ok(self.bracket_unchecked(x, y))
    }

    pub(crate) fn bracket_unchecked(&self, x: &[Rat], y: &[Rat]) -> Vec<Rat> {
        let n = self.dim();
        let mut out = vec![Rat::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    let c = &self.c[i][j][k];
                    if !c.is_zero() {
                        out[k] += &xy * c;
                    }
                }
            }
        }
        out
    }

    /// Bracket extended ℚ\[2π\]-bilinearly to coefficient vectors over ℚ\[2π\].
    pub fn bracket_twopi(&self, x: &[TwoPi], y: &[TwoPi]) -> Vec<TwoPi> {
        let n = self.dim();
        debug_assert_eq!(x.len(), n);
        debug_assert_eq!(y.len(), n);
        let mut out = vec![TwoPi::zero(); n];
        for i in 0..n {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..n {
                if y[j].is_zero() {
                    continue;
                }
                let xy = &x[i] * &y[j];
                for k in 0..n {
                    let c = &self.c[i][j][k];
                    if !c.is_zero() {
                        out[k] += &xy.scaled(c);
                    }
                }
            }
        }
        out
    }

    /// Matrix of ad(x): y ↦ \[x, y\].
    pub fn adjoint(&self, x: &[Rat]) -> Result<Mat, LieError> {
        self.check_len(x)?;
        let n = self.dim();
        let mut m = Mat::zeros(n, n);
        for j in 0..n {
            for i in 0..n {
                if x[i].is_zero() {
                    continue;
                }
                for k in 0..n {
                    let c = &self.c[i][j][k];
                    if !c.is_zero() {
                        m[(k, j)] += &x[i] * c;
                    }
                }
            }
        }
        Ok(m)
    }

    fn adjoint_basis(&self, i: usize) -> Mat {
        let n = self.dim();
        Mat::from_fn(n, n, |k, j| self.c[i][j][k].clone())
    }

    /// Killing form B(x, y) = tr(ad x · ad y) on the basis.
    pub fn killing_form(&self) -> SymBilinearForm {
        let n = self.dim();
        let ads: Vec<Mat> = (0..n).map(|i| self.adjoint_basis(i)).collect();
        let mut b = Mat::zeros(n, n);
        for i in 0..n {
            for j in 0..=i {
                let mut tr = Rat::zero();
                for r in 0..n {
                    for s in 0..n {
                        tr += &ads[i][(r, s)] * &ads[j][(s, r)];
                    }
                }
                b[(i, j)] = tr.clone();
                b[(j, i)] = tr;
            }
        }
        SymBilinearForm::new(b)
    }

    /// Cartan's criterion: the Killing form is nondegenerate.
    pub fn is_semisimple(&self) -> bool {
        !self.killing_form().matrix().det().is_zero()
    }

    /// The subalgebra spanned by the given vectors, with structure constants
    /// rewritten in that basis. Fails if the span is not bracket-closed or
    /// the vectors are dependent.
    pub fn subalgebra(&self, basis: &[Vec<Rat>]) -> Result<LieAlgebra, LieError> {
        let k = basis.len();
        for v in basis {
            self.check_len(v)?;
        }
        // Columns of `span` are the basis vectors; coordinates are found by
        // solving span·c = w.
        let span = Mat::from_fn(self.dim(), k, |i, j| basis[j][i].clone());
        if span.rank() != k {
            return Err(LieError::SingularBasis);
        }
        let labels: Vec<String> = (0..k).map(|i| format!("b{}", i + 1)).collect();
        let mut c = vec![vec![vec![Rat::zero(); k]; k]; k];
        for a in 0..k {
            for b in (a + 1)..k {
                let w = self.bracket_unchecked(&basis[a], &basis[b]);
                let coords = span.solve(&w).ok_or(LieError::NotClosed)?;
                // solve() zero-fills free variables; confirm the residual.
                let back = span.mul_vec(&coords);
                if back != w {
                    return Err(LieError::NotClosed);
                }
                for (k2, coeff) in coords.iter().enumerate() {
                    c[a][b][k2] = coeff.clone();
                    c[b][a][k2] = -coeff.clone();
                }
            }
        }
        Ok(LieAlgebra { labels, c })
    }

    /// Rewrite the algebra in the basis given by the columns of `s`.
    pub fn change_basis(&self, s: &Mat) -> Result<LieAlgebra, LieError> {
        if s.nrows() != self.dim() || s.ncols() != self.dim() {
            return Err(LieError::DimensionMismatch { expected: self.dim(), got: s.nrows() });
        }
        let cols: Vec<Vec<Rat>> = (0..s.ncols()).map(|j| s.col(j)).collect();
        let mut alg = self.subalgebra(&cols)?;
        alg.labels = self.labels.clone();
        Ok(alg)
    }

    /// Direct sum, with labels concatenated.
    pub fn direct_sum(&self, other: &LieAlgebra) -> LieAlgebra {
        let n = self.dim();
        let m = other.dim();
        let labels = self
            .labels
            .iter()
            .cloned()
            .chain(other.labels.iter().cloned())
            .collect();
        let mut c = vec![vec![vec![Rat::zero(); n + m]; n + m]; n + m];
        for i in 0..n {
            for j in 0..n {
                for k in 0..n {
                    c[i][j][k] = self.c[i][j][k].clone();
                }
            }
        }
        for i in 0..m {
            for j in 0..m {
                for k in 0..m {
                    c[n + i][n + j][n + k] = other.c[i][j][k].clone();
                }
            }
        }
        LieAlgebra { labels, c }
    }

    /// Whether the matrix `phi` preserves brackets and is invertible.
    pub fn is_automorphism(&self, phi: &Mat) -> bool {
        let n = self.dim();
        if phi.nrows() != n || phi.ncols() != n || phi.inverse().is_none() {
            return false;
        }
        for i in 0..n {
            for j in (i + 1)..n {
                let lhs = phi.mul_vec(&self.bracket_unchecked(&self.basis_vector(i), &self.basis_vector(j)));
                let rhs = self.bracket_unchecked(&phi.col(i), &phi.col(j));
                if lhs != rhs {
                    return false;
                }
            }
        }
        true
    }

    fn check_len(&self, v: &[Rat]) -> Result<(), LieError> {
        if v.len() != self.dim() {
            return Err(LieError::DimensionMismatch { expected: self.dim(), got: v.len() });
        }
        Ok(())
    }
}

/// A symmetric bilinear form on the algebra, stored as its Gram matrix.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SymBilinearForm {
    mat: Mat,
}

impl SymBilinearForm {
    pub fn new(mat: Mat) -> Self {
        assert!(mat.is_symmetric(), "bilinear form matrix must be symmetric");
        SymBilinearForm { mat }
    }

    pub fn matrix(&self) -> &Mat {
        &self.mat
    }

    pub fn dim(&self) -> usize {
        self.mat.nrows()
    }

    pub fn eval(&self, x: &[Rat], y: &[Rat]) -> Rat {
        let mut acc = Rat::zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if !y[j].is_zero() {
                    acc += &x[i] * &(&self.mat[(i, j)] * &y[j]);
                }
            }
        }
        acc
    }

    /// Evaluate over ℚ\[2π\]-vectors.
    pub fn eval_twopi(&self, x: &[TwoPi], y: &[TwoPi]) -> TwoPi {
        let mut acc = TwoPi::zero();
        for i in 0..self.dim() {
            if x[i].is_zero() {
                continue;
            }
            for j in 0..self.dim() {
                if !y[j].is_zero() && !self.mat[(i, j)].is_zero() {
                    acc += &(&x[i] * &y[j]).scaled(&self.mat[(i, j)]);
                }
            }
        }
        acc
    }

    /// Counts of positive, negative, zero inertia indices.
    pub fn signature(&self) -> (usize, usize, usize) {
        self.mat.signature()
    }

    /// Exact ad-invariance: B(\[z,x\],y) + B(x,\[z,y\]) = 0 for all basis triples.
    pub fn is_invariant(&self, alg: &LieAlgebra) -> bool {
        let n = alg.dim();
        for z in 0..n {
            for x in 0..n {
                for y in 0..n {
                    let zx = alg.bracket_unchecked(&alg.basis_vector(z), &alg.basis_vector(x));
                    let zy = alg.bracket_unchecked(&alg.basis_vector(z), &alg.basis_vector(y));
                    let s = self.eval(&zx, &alg.basis_vector(y)) + self.eval(&alg.basis_vector(x), &zy);
                    if !s.is_zero() {
                        return false;
                    }
                }
            }
        }
        true
    }
}
