//! Twisted loop algebras with trigonometric-polynomial sections.
//!
//! An element of 𝓛_ψ(𝔨) with twist step p satisfies ξ(t+p) = ψ⁻¹(ξ(t)) for a
//! finite-order automorphism ψ. With ψ of order d the section is honestly
//! periodic with full period P = d·p, so it expands in modes cos(2πnt/P),
//! sin(2πnt/P); for d = 2 the twist forces even modes into the ψ = +1
//! eigenspace and odd modes into the ψ = -1 eigenspace. All operations are
//! exact: products expand by product-to-sum identities and derivatives carry
//! their 2π factors symbolically.

use std::collections::BTreeMap;

use num_traits::{One, Zero};
use rand::Rng;
use thiserror::Error;

use crate::forms::InvariantFormSpace;
use crate::lie::LieAlgebra;
use crate::matrix::{same_row_span, Mat};
use crate::scalar::{rat, vec_add, vec_from_rat, vec_is_zero, vec_zero, Rat, TwoPi};
use crate::structure::{minimal_ideals, StructureError};

#[derive(Debug, Error, PartialEq, Eq)]
pub enum LoopError {
    #[error("coefficient width {got} does not match the fibre dimension {expected}")]
    WidthMismatch { expected: usize, got: usize },
    #[error("twist mismatch: mode {mode} violates the twist eigenspace condition")]
    TwistMismatch { mode: u32 },
    #[error("matrix is not a Lie algebra automorphism of the fibre")]
    NotAnAutomorphism,
    #[error("unsupported twist order {0}; supported orders are 1 and 2")]
    UnsupportedOrder(u8),
    #[error("the twist matrix raised to the declared order {0} is not the identity")]
    WrongOrderPower(u8),
    #[error("base period must be positive")]
    ZeroPeriod,
}

/// A finite-order automorphism used to twist a loop algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TwistAutomorphism {
    matrix: Mat,
    order: u8,
}

impl TwistAutomorphism {
    pub fn new(alg: &LieAlgebra, matrix: Mat, order: u8) -> Result<Self, LoopError> {
        if !(1..=2).contains(&order) {
            return Err(LoopError::UnsupportedOrder(order));
        }
        if !alg.is_automorphism(&matrix) {
            return Err(LoopError::NotAnAutomorphism);
        }
        if matrix.pow(order as u32) != Mat::identity(alg.dim()) {
            return Err(LoopError::WrongOrderPower(order));
        }
        Ok(TwistAutomorphism { matrix, order })
    }

    pub fn identity(alg: &LieAlgebra) -> Self {
        TwistAutomorphism { matrix: Mat::identity(alg.dim()), order: 1 }
    }

    pub fn matrix(&self) -> &Mat {
        &self.matrix
    }

    pub fn order(&self) -> u8 {
        self.order
    }

    pub fn is_identity(&self) -> bool {
        self.matrix == Mat::identity(self.matrix.nrows())
    }
}

/// Coefficients of one mode: a·cos(2πnt/P) + b·sin(2πnt/P).
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ModeCoeffs {
    pub cos: Vec<TwoPi>,
    pub sin: Vec<TwoPi>,
}

/// A vector-valued trigonometric polynomial over the full period P.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct TrigPoly {
    width: usize,
    modes: BTreeMap<u32, ModeCoeffs>,
}

impl TrigPoly {
    pub fn zero(width: usize) -> Self {
        TrigPoly { width, modes: BTreeMap::new() }
    }

    pub fn constant(v: Vec<TwoPi>) -> Self {
        let width = v.len();
        let mut p = TrigPoly::zero(width);
        p.add_mode(0, v, vec_zero(width));
        p
    }

    pub fn width(&self) -> usize {
        self.width
    }

    pub fn modes(&self) -> impl Iterator<Item = (u32, &ModeCoeffs)> {
        self.modes.iter().map(|(n, c)| (*n, c))
    }

    pub fn max_mode(&self) -> u32 {
        self.modes.keys().next_back().copied().unwrap_or(0)
    }

    pub fn is_zero(&self) -> bool {
        self.modes.is_empty()
    }

    pub fn mode(&self, n: u32) -> Option<&ModeCoeffs> {
        self.modes.get(&n)
    }

    /// Accumulate coefficients into mode n (sin is ignored at n = 0, where it
    /// contributes nothing).
    pub fn add_mode(&mut self, n: u32, cos: Vec<TwoPi>, sin: Vec<TwoPi>) {
        debug_assert_eq!(cos.len(), self.width);
        debug_assert_eq!(sin.len(), self.width);
        let entry = self.modes.entry(n).or_insert_with(|| ModeCoeffs {
            cos: vec_zero(self.width),
            sin: vec_zero(self.width),
        });
        entry.cos = vec_add(&entry.cos, &cos);
        if n > 0 {
            entry.sin = vec_add(&entry.sin, &sin);
        }
        let drop = vec_is_zero(&entry.cos) && vec_is_zero(&entry.sin);
        if drop {
            self.modes.remove(&n);
        }
    }

    pub fn add(&self, rhs: &TrigPoly) -> TrigPoly {
        assert_eq!(self.width, rhs.width);
        let mut out = self.clone();
        for (n, c) in rhs.modes() {
            out.add_mode(n, c.cos.clone(), c.sin.clone());
        }
        out
    }

    pub fn sub(&self, rhs: &TrigPoly) -> TrigPoly {
        self.add(&rhs.neg())
    }

    pub fn neg(&self) -> TrigPoly {
        self.map_coeffs(|v| v.iter().map(|x| -x).collect())
    }

    pub fn scale(&self, r: &Rat) -> TrigPoly {
        if r.is_zero() {
            return TrigPoly::zero(self.width);
        }
        self.map_coeffs(|v| v.iter().map(|x| x.scaled(r)).collect())
    }

    /// Apply the same linear transformation to every coefficient vector.
    pub fn map_coeffs(&self, f: impl Fn(&[TwoPi]) -> Vec<TwoPi>) -> TrigPoly {
        let probe = f(&vec_zero(self.width));
        let mut out = TrigPoly::zero(probe.len());
        for (n, c) in self.modes() {
            out.add_mode(n, f(&c.cos), f(&c.sin));
        }
        out
    }

    /// d/dt with the full period P: mode n picks up the factor 2πn/P.
    pub fn derivative(&self, full_period: u32) -> TrigPoly {
        let mut out = TrigPoly::zero(self.width);
        for (n, c) in self.modes() {
            if n == 0 {
                continue;
            }
            let factor = rat(n as i64, full_period as i64);
            let cos: Vec<TwoPi> = c.sin.iter().map(|x| x.mul_monomial(1, &factor)).collect();
            let sin: Vec<TwoPi> = c.cos.iter().map(|x| x.mul_monomial(1, &(-factor.clone()))).collect();
            out.add_mode(n, cos, sin);
        }
        out
    }

    /// t ↦ t + k·(P/2): mode n is multiplied by (-1)^{nk}.
    pub fn shift_half_periods(&self, k: u32) -> TrigPoly {
        if k % 2 == 0 {
            return self.clone();
        }
        let mut out = TrigPoly::zero(self.width);
        for (n, c) in self.modes() {
            if n % 2 == 0 {
                out.add_mode(n, c.cos.clone(), c.sin.clone());
            } else {
                out.add_mode(
                    n,
                    c.cos.iter().map(|x| -x).collect(),
                    c.sin.iter().map(|x| -x).collect(),
                );
            }
        }
        out
    }

    /// The frequency-zero coefficient (the average over one full period).
    pub fn zero_mode(&self) -> Vec<TwoPi> {
        self.modes
            .get(&0)
            .map(|c| c.cos.clone())
            .unwrap_or_else(|| vec_zero(self.width))
    }
}

/// Pointwise bilinear pairing of two trig polynomials, expanded exactly by
/// product-to-sum identities. `op` must be bilinear on coefficient vectors.
pub fn trig_bilinear(
    f: &TrigPoly,
    g: &TrigPoly,
    out_width: usize,
    op: impl Fn(&[TwoPi], &[TwoPi]) -> Vec<TwoPi>,
) -> TrigPoly {
    let half = rat(1, 2);
    let mut out = TrigPoly::zero(out_width);
    for (n, fc) in f.modes() {
        let f_cos = !vec_is_zero(&fc.cos);
        let f_sin = !vec_is_zero(&fc.sin);
        for (m, gc) in g.modes() {
            let g_cos = !vec_is_zero(&gc.cos);
            let g_sin = !vec_is_zero(&gc.sin);
            let sum = n + m;
            let diff = n.abs_diff(m);
            if f_cos && g_cos {
                let cc: Vec<TwoPi> = op(&fc.cos, &gc.cos).iter().map(|x| x.scaled(&half)).collect();
                out.add_mode(sum, cc.clone(), vec_zero(out_width));
                out.add_mode(diff, cc, vec_zero(out_width));
            }
            if f_sin && g_sin {
                let ss: Vec<TwoPi> = op(&fc.sin, &gc.sin).iter().map(|x| x.scaled(&half)).collect();
                out.add_mode(diff, ss.clone(), vec_zero(out_width));
                out.add_mode(sum, ss.iter().map(|x| -x).collect(), vec_zero(out_width));
            }
            if f_cos && g_sin {
                let cs: Vec<TwoPi> = op(&fc.cos, &gc.sin).iter().map(|x| x.scaled(&half)).collect();
                out.add_mode(sum, vec_zero(out_width), cs.clone());
                if m != n {
                    let signed = if m > n { cs } else { cs.iter().map(|x| -x).collect() };
                    out.add_mode(diff, vec_zero(out_width), signed);
                }
            }
            if f_sin && g_cos {
                let sc: Vec<TwoPi> = op(&fc.sin, &gc.cos).iter().map(|x| x.scaled(&half)).collect();
                out.add_mode(sum, vec_zero(out_width), sc.clone());
                if n != m {
                    let signed = if n > m { sc } else { sc.iter().map(|x| -x).collect() };
                    out.add_mode(diff, vec_zero(out_width), signed);
                }
            }
        }
    }
    out
}

/// Apply a rational matrix to a ℚ\[2π\]-coefficient vector.
pub fn mat_apply_twopi(m: &Mat, v: &[TwoPi]) -> Vec<TwoPi> {
    assert_eq!(m.ncols(), v.len());
    (0..m.nrows())
        .map(|i| {
            let mut acc = TwoPi::zero();
            for (j, x) in v.iter().enumerate() {
                let c = &m[(i, j)];
                if !c.is_zero() && !x.is_zero() {
                    acc += &x.scaled(c);
                }
            }
            acc
        })
        .collect()
}

/// A twist-compatible section of the loop bundle.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopElement(pub TrigPoly);

/// A twist-compatible 1-form f(t)·dt with values in the fibre algebra.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct LoopOneForm(pub TrigPoly);

/// A Lie connection ∇ = d + ad(A): the potential A acts through the adjoint
/// representation, which makes ∇ a derivation of the pointwise bracket.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Connection {
    pub potential: LoopElement,
}

/// An infinitesimal bundle transformation covering `speed`·∂_t, with a
/// vertical part acting by ad.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct VectorFieldLift {
    pub speed: Rat,
    pub vertical: LoopElement,
}

/// The twisted loop algebra 𝓛_ψ(𝔨) with twist step `base_period`.
#[derive(Debug, Clone)]
pub struct LoopAlgebra {
    fibre: LieAlgebra,
    twist: TwistAutomorphism,
    base_period: u32,
}

impl LoopAlgebra {
    pub fn new(
        fibre: LieAlgebra,
        twist: TwistAutomorphism,
        base_period: u32,
    ) -> Result<Self, LoopError> {
        if base_period == 0 {
            return Err(LoopError::ZeroPeriod);
        }
        if twist.matrix().nrows() != fibre.dim() {
            return Err(LoopError::WidthMismatch {
                expected: fibre.dim(),
                got: twist.matrix().nrows(),
            });
        }
        Ok(LoopAlgebra { fibre, twist, base_period })
    }

    pub fn untwisted(fibre: LieAlgebra) -> Self {
        let twist = TwistAutomorphism::identity(&fibre);
        LoopAlgebra { fibre, twist, base_period: 1 }
    }

    pub fn fibre(&self) -> &LieAlgebra {
        &self.fibre
    }

    pub fn twist(&self) -> &TwistAutomorphism {
        &self.twist
    }

    pub fn base_period(&self) -> u32 {
        self.base_period
    }

    /// Full period P = (twist order)·(twist step).
    pub fn full_period(&self) -> u32 {
        self.twist.order() as u32 * self.base_period
    }

    pub fn dim(&self) -> usize {
        self.fibre.dim()
    }

    /// Validate and wrap a trig polynomial as a twisted loop.
    pub fn element(&self, poly: TrigPoly) -> Result<LoopElement, LoopError> {
        self.check_poly(&poly)?;
        Ok(LoopElement(poly))
    }

    pub fn one_form(&self, poly: TrigPoly) -> Result<LoopOneForm, LoopError> {
        self.check_poly(&poly)?;
        Ok(LoopOneForm(poly))
    }

    pub fn connection(&self, potential: LoopElement) -> Result<Connection, LoopError> {
        self.check_poly(&potential.0)?;
        Ok(Connection { potential })
    }

    pub fn flat_connection(&self) -> Connection {
        Connection { potential: LoopElement(TrigPoly::zero(self.dim())) }
    }

    pub fn pure_rotation(&self) -> VectorFieldLift {
        VectorFieldLift {
            speed: Rat::one(),
            vertical: LoopElement(TrigPoly::zero(self.dim())),
        }
    }

    /// The constant loop with value v (v must be twist-fixed when d > 1).
    pub fn constant(&self, v: &[Rat]) -> Result<LoopElement, LoopError> {
        self.element(TrigPoly::constant(vec_from_rat(v)))
    }

    fn check_poly(&self, poly: &TrigPoly) -> Result<(), LoopError> {
        if poly.width() != self.dim() {
            return Err(LoopError::WidthMismatch { expected: self.dim(), got: poly.width() });
        }
        if self.twist.order() == 2 {
            for (n, c) in poly.modes() {
                for v in [&c.cos, &c.sin] {
                    if vec_is_zero(v) {
                        continue;
                    }
                    let image = mat_apply_twopi(self.twist.matrix(), v);
                    let expected: Vec<TwoPi> = if n % 2 == 0 {
                        v.clone()
                    } else {
                        v.iter().map(|x| -x).collect()
                    };
                    if image != expected {
                        return Err(LoopError::TwistMismatch { mode: n });
                    }
                }
            }
        }
        Ok(())
    }

    /// Project a coefficient vector onto the eigenspace required at mode n.
    pub fn project_mode(&self, n: u32, v: &[TwoPi]) -> Vec<TwoPi> {
        if self.twist.order() != 2 {
            return v.to_vec();
        }
        let image = mat_apply_twopi(self.twist.matrix(), v);
        let half = rat(1, 2);
        v.iter()
            .zip(&image)
            .map(|(x, y)| {
                let s = if n % 2 == 0 { x + y } else { x - y };
                s.scaled(&half)
            })
            .collect()
    }

    /// Seeded random twist-compatible element with modes up to `max_mode`.
    /// The support is sparse (at most two modes) so that products of many
    /// random elements stay cheap; across samples every mode is exercised.
    pub fn random_element(&self, rng: &mut impl Rng, max_mode: u32) -> LoopElement {
        let mut poly = TrigPoly::zero(self.dim());
        let mut modes: Vec<u32> = (0..=max_mode).collect();
        for i in (1..modes.len()).rev() {
            let j = rng.gen_range(0..=i);
            modes.swap(i, j);
        }
        modes.truncate(modes.len().min(2));
        for &n in &modes {
            let cos = self.project_mode(n, &random_vec(rng, self.dim()));
            let sin = if n == 0 {
                vec_zero(self.dim())
            } else {
                self.project_mode(n, &random_vec(rng, self.dim()))
            };
            poly.add_mode(n, cos, sin);
        }
        LoopElement(poly)
    }

    /// Pointwise bracket of loops.
    pub fn bracket(&self, x: &LoopElement, y: &LoopElement) -> Result<LoopElement, LoopError> {
        self.check_poly(&x.0)?;
        self.check_poly(&y.0)?;
        let poly = trig_bilinear(&x.0, &y.0, self.dim(), |u, v| self.fibre.bracket_twopi(u, v));
        Ok(LoopElement(poly))
    }

    /// D(ξ) = speed·ξ' + [w, ξ] for the lift (speed, w).
    pub fn apply_lift(
        &self,
        lift: &VectorFieldLift,
        x: &LoopElement,
    ) -> Result<LoopElement, LoopError> {
        self.check_poly(&x.0)?;
        self.check_poly(&lift.vertical.0)?;
        let mut poly = x.0.derivative(self.full_period()).scale(&lift.speed);
        if !lift.vertical.0.is_zero() {
            poly = poly.add(&trig_bilinear(&lift.vertical.0, &x.0, self.dim(), |u, v| {
                self.fibre.bracket_twopi(u, v)
            }));
        }
        Ok(LoopElement(poly))
    }

    /// ∇ξ = (ξ' + [A, ξ])·dt.
    pub fn connection_apply(
        &self,
        nabla: &Connection,
        x: &LoopElement,
    ) -> Result<LoopOneForm, LoopError> {
        self.check_poly(&x.0)?;
        let mut poly = x.0.derivative(self.full_period());
        if !nabla.potential.0.is_zero() {
            poly = poly.add(&trig_bilinear(&nabla.potential.0, &x.0, self.dim(), |u, v| {
                self.fibre.bracket_twopi(u, v)
            }));
        }
        Ok(LoopOneForm(poly))
    }

    /// The ad-potential of the 1-form L_v∇: for ∇ = d + ad(A) and the lift
    /// v = speed·∂_t + w this is (speed·A' - w' + [w, A])·dt, acting by ad.
    pub fn lie_derivative_of_connection(
        &self,
        lift: &VectorFieldLift,
        nabla: &Connection,
    ) -> Result<LoopOneForm, LoopError> {
        self.check_poly(&nabla.potential.0)?;
        self.check_poly(&lift.vertical.0)?;
        let p = self.full_period();
        let mut poly = nabla.potential.0.derivative(p).scale(&lift.speed);
        if !lift.vertical.0.is_zero() {
            poly = poly.sub(&lift.vertical.0.derivative(p));
            poly = poly.add(&trig_bilinear(
                &lift.vertical.0,
                &nabla.potential.0,
                self.dim(),
                |u, v| self.fibre.bracket_twopi(u, v),
            ));
        }
        Ok(LoopOneForm(poly))
    }

    /// κ(f, g) lifted modewise: a V-coordinate-valued trig polynomial.
    pub fn kappa_pair(&self, vspace: &InvariantFormSpace, f: &TrigPoly, g: &TrigPoly) -> TrigPoly {
        trig_bilinear(f, g, vspace.m(), |u, v| vspace.pair_twopi(u, v))
    }
}

fn random_vec(rng: &mut impl Rng, n: usize) -> Vec<TwoPi> {
    (0..n)
        .map(|_| TwoPi::from(rat(rng.gen_range(-2i64..=2), rng.gen_range(1i64..=2))))
        .collect()
}

/// One connected component of the spectral cover: a ψ-orbit of minimal
/// ideals; an orbit of size s is a circle covering the base s times.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct CoverComponent {
    pub orbit: Vec<usize>,
    pub length: usize,
}

#[derive(Debug, Clone, PartialEq, Eq)]
pub struct SpectralCover {
    pub components: Vec<CoverComponent>,
}

/// Orbits of the permutation that ψ induces on the minimal ideals.
pub fn spectral_cover(
    alg: &LieAlgebra,
    twist: &TwistAutomorphism,
) -> Result<SpectralCover, StructureError> {
    let decomp = minimal_ideals(alg)?;
    let r = decomp.len();
    let phi = twist.matrix();
    // π(i) = j when ψ(ideal_i) = ideal_j, detected by span equality.
    let mut perm = vec![usize::MAX; r];
    for i in 0..r {
        let image = Mat::from_rows(
            decomp.ideals[i]
                .basis_rows()
                .iter()
                .map(|row| phi.mul_vec(row))
                .collect(),
        );
        let j = (0..r)
            .find(|&j| same_row_span(&image, decomp.ideals[j].basis()))
            .ok_or(StructureError::NotAnAutomorphism)?;
        perm[i] = j;
    }
    let mut seen = vec![false; r];
    let mut components = Vec::new();
    for start in 0..r {
        if seen[start] {
            continue;
        }
        let mut orbit = vec![start];
        seen[start] = true;
        let mut cur = perm[start];
        while cur != start {
            seen[cur] = true;
            orbit.push(cur);
            cur = perm[cur];
        }
        let length = orbit.len();
        components.push(CoverComponent { orbit, length });
    }
    Ok(SpectralCover { components })
}

/// One unrolled factor of the reduction: a loop algebra with simple fibre,
/// together with the linear data mapping it in and out of the ambient loops.
#[derive(Debug, Clone)]
pub struct ReducedComponent {
    pub loops: LoopAlgebra,
    pub orbit: Vec<usize>,
    coords: Mat,
    inclusion: Mat,
}

/// The isomorphism between a twisted loop algebra with semisimple fibre and
/// the direct sum of loop algebras with simple fibres over the cover.
#[derive(Debug, Clone)]
pub struct Reduction {
    pub components: Vec<ReducedComponent>,
    source_order: u8,
    source_dim: usize,
}

/// Carry the loop algebra over the cover: one simple-fibre loop algebra per
/// ψ-orbit, with twist step (orbit length)·(base step) and residual twist
/// ψ^(orbit length) restricted to the base ideal of the orbit.
pub fn reduce_to_simple(ctx: &LoopAlgebra) -> Result<Reduction, StructureError> {
    let alg = ctx.fibre();
    let decomp = minimal_ideals(alg)?;
    let cover = spectral_cover(alg, ctx.twist())?;
    let mut components = Vec::new();
    for comp in &cover.components {
        // A twist of order ≤ 2 induces an involutive permutation of the
        // ideals; the unrolling formulas below rely on orbit length ≤ 2.
        assert!(comp.length <= 2, "orbit of length {} from a twist of order ≤ 2", comp.length);
        let i0 = comp.orbit[0];
        let fibre = decomp.ideals[i0].as_subalgebra(alg)?;
        let coords = decomp.coords_matrix(i0);
        let inclusion = decomp.inclusion_matrix(i0);
        let s = comp.length as u32;
        let psi_s = ctx.twist().matrix().pow(s);
        let residual_mat = coords.mul(&psi_s).mul(&inclusion);
        let residual = if residual_mat == Mat::identity(fibre.dim()) {
            TwistAutomorphism::identity(&fibre)
        } else {
            TwistAutomorphism::new(&fibre, residual_mat, 2)
                .map_err(|_| StructureError::NotAnAutomorphism)?
        };
        let loops = LoopAlgebra::new(fibre, residual, s * ctx.base_period())
            .expect("orbit length and base period are positive");
        components.push(ReducedComponent { loops, orbit: comp.orbit.clone(), coords, inclusion });
    }
    Ok(Reduction {
        components,
        source_order: ctx.twist().order(),
        source_dim: ctx.dim(),
    })
}

impl Reduction {
    /// Forward map: split a twisted loop into its component loops over the
    /// cover.
    pub fn forward(&self, ctx: &LoopAlgebra, x: &LoopElement) -> Result<Vec<LoopElement>, LoopError> {
        ctx.check_poly(&x.0)?;
        let d = self.source_order as u32;
        let mut out = Vec::new();
        for comp in &self.components {
            let s = comp.orbit.len() as u32;
            let d_hat = comp.loops.twist().order() as u32;
            // Frequencies match when n̂·d = n·d̂·s.
            let mut poly = TrigPoly::zero(comp.loops.dim());
            for (n, c) in x.0.modes() {
                let cos = mat_apply_twopi(&comp.coords, &c.cos);
                let sin = mat_apply_twopi(&comp.coords, &c.sin);
                if vec_is_zero(&cos) && vec_is_zero(&sin) {
                    continue;
                }
                let num = n * d_hat * s;
                if num % d != 0 {
                    // The projection of such a mode is forced to vanish.
                    return Err(LoopError::TwistMismatch { mode: n });
                }
                poly.add_mode(num / d, cos, sin);
            }
            out.push(comp.loops.element(poly)?);
        }
        Ok(out)
    }

    /// Inverse map: reassemble the ambient twisted loop from component loops.
    pub fn inverse(&self, ctx: &LoopAlgebra, parts: &[LoopElement]) -> Result<LoopElement, LoopError> {
        assert_eq!(parts.len(), self.components.len(), "one loop per cover component");
        let d = self.source_order as u32;
        let mut poly = TrigPoly::zero(self.source_dim);
        for (comp, part) in self.components.iter().zip(parts) {
            comp.loops.check_poly(&part.0)?;
            let s = comp.orbit.len() as u32;
            let d_hat = comp.loops.twist().order() as u32;
            for (n_hat, c) in part.0.modes() {
                let num = n_hat * d;
                if num % (d_hat * s) != 0 {
                    return Err(LoopError::TwistMismatch { mode: n_hat });
                }
                let n = num / (d_hat * s);
                let cos = mat_apply_twopi(&comp.inclusion, &c.cos);
                let sin = mat_apply_twopi(&comp.inclusion, &c.sin);
                if s == 1 {
                    poly.add_mode(n, cos, sin);
                } else {
                    // Orbit of length two: the mate ideal carries the value
                    // ψ(η(t+1)), a half-period shift followed by ψ.
                    let phi = ctx.twist().matrix();
                    let (mut cos2, mut sin2) = (
                        mat_apply_twopi(phi, &cos),
                        mat_apply_twopi(phi, &sin),
                    );
                    if n % 2 == 1 {
                        cos2 = cos2.iter().map(|x| -x).collect();
                        sin2 = sin2.iter().map(|x| -x).collect();
                    }
                    poly.add_mode(n, vec_add(&cos, &cos2), vec_add(&sin, &sin2));
                }
            }
        }
        ctx.element(poly)
    }
}
