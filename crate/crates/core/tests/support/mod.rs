//! Shared test support: an independent evaluation route for loop-cocycle
//! values via complex exponential modes.
#![allow(dead_code)] // each integration-test binary uses a subset
//!
//! The library expands products of trigonometric polynomials with
//! product-to-sum identities on (cos, sin) mode pairs. Here we instead map
//! every trig polynomial to its two-sided exponential spectrum
//! Σ_n c_n·e^{2πint/P} with Gaussian-rational coefficients, multiply by
//! adding exponents, differentiate by multiplying with 2πin/P, and read the
//! zero coefficient directly. Agreement of the two routes checks the
//! product-to-sum expansion, the symbolic 2π bookkeeping, and the zero-mode
//! extraction at once.

use std::collections::BTreeMap;

use covext_core::cocycle::{CocycleSpace, CovariantCocycle};
use covext_core::loops::{LoopElement, TrigPoly};
use covext_core::scalar::{rat, Rat, TwoPi};

/// A complex scalar re + i·im with components in ℚ[2π].
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct Cx {
    pub re: TwoPi,
    pub im: TwoPi,
}

impl Cx {
    fn zero() -> Self {
        Cx { re: TwoPi::zero(), im: TwoPi::zero() }
    }

    fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    fn add(&self, rhs: &Cx) -> Cx {
        Cx { re: &self.re + &rhs.re, im: &self.im + &rhs.im }
    }

    /// Multiply by i·r·(2π)^k.
    fn mul_i_monomial(&self, k: usize, r: &Rat) -> Cx {
        Cx {
            re: -&self.im.mul_monomial(k, r),
            im: self.re.mul_monomial(k, r),
        }
    }
}

/// Two-sided exponential spectrum of a vector-valued trig polynomial.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct ExpPoly {
    pub width: usize,
    pub modes: BTreeMap<i64, Vec<Cx>>,
}

impl ExpPoly {
    fn zero(width: usize) -> Self {
        ExpPoly { width, modes: BTreeMap::new() }
    }

    fn add_to(&mut self, n: i64, v: Vec<Cx>) {
        let entry = self
            .modes
            .entry(n)
            .or_insert_with(|| vec![Cx::zero(); self.width]);
        for (e, x) in entry.iter_mut().zip(v) {
            *e = e.add(&x);
        }
        if entry.iter().all(Cx::is_zero) {
            self.modes.remove(&n);
        }
    }
}

/// a·cos + b·sin ↦ e^{+inθ}·(a - ib)/2 + e^{-inθ}·(a + ib)/2.
pub fn to_exp(poly: &TrigPoly) -> ExpPoly {
    let half = rat(1, 2);
    let mut out = ExpPoly::zero(poly.width());
    for (n, c) in poly.modes() {
        if n == 0 {
            out.add_to(
                0,
                c.cos.iter().map(|a| Cx { re: a.clone(), im: TwoPi::zero() }).collect(),
            );
            continue;
        }
        let plus: Vec<Cx> = c
            .cos
            .iter()
            .zip(&c.sin)
            .map(|(a, b)| Cx { re: a.scaled(&half), im: -&b.scaled(&half) })
            .collect();
        let minus: Vec<Cx> = c
            .cos
            .iter()
            .zip(&c.sin)
            .map(|(a, b)| Cx { re: a.scaled(&half), im: b.scaled(&half) })
            .collect();
        out.add_to(n as i64, plus);
        out.add_to(-(n as i64), minus);
    }
    out
}

/// d/dt in the exponential picture: mode n is multiplied by i·(2π)·n/P.
pub fn exp_derivative(f: &ExpPoly, full_period: u32) -> ExpPoly {
    let mut out = ExpPoly::zero(f.width);
    for (&n, v) in &f.modes {
        if n == 0 {
            continue;
        }
        let factor = rat(n, full_period as i64);
        out.add_to(n, v.iter().map(|c| c.mul_i_monomial(1, &factor)).collect());
    }
    out
}

/// Pointwise bilinear pairing in the exponential picture: exponents add and
/// the real-bilinear op extends complex-bilinearly.
pub fn exp_bilinear(
    f: &ExpPoly,
    g: &ExpPoly,
    out_width: usize,
    op: impl Fn(&[TwoPi], &[TwoPi]) -> Vec<TwoPi>,
) -> ExpPoly {
    let mut out = ExpPoly::zero(out_width);
    for (&n, fv) in &f.modes {
        let f_re: Vec<TwoPi> = fv.iter().map(|c| c.re.clone()).collect();
        let f_im: Vec<TwoPi> = fv.iter().map(|c| c.im.clone()).collect();
        for (&m, gv) in &g.modes {
            let g_re: Vec<TwoPi> = gv.iter().map(|c| c.re.clone()).collect();
            let g_im: Vec<TwoPi> = gv.iter().map(|c| c.im.clone()).collect();
            let rr = op(&f_re, &g_re);
            let ii = op(&f_im, &g_im);
            let ri = op(&f_re, &g_im);
            let ir = op(&f_im, &g_re);
            let v: Vec<Cx> = (0..out_width)
                .map(|k| Cx { re: &rr[k] - &ii[k], im: &ri[k] + &ir[k] })
                .collect();
            out.add_to(n + m, v);
        }
    }
    out
}

/// The zero-frequency coefficient; the spectrum of a real polynomial has a
/// real zero mode, which is asserted.
pub fn exp_zero_mode(f: &ExpPoly) -> Vec<TwoPi> {
    match f.modes.get(&0) {
        None => vec![TwoPi::zero(); f.width],
        Some(v) => v
            .iter()
            .map(|c| {
                assert!(c.im.is_zero(), "zero mode of a real polynomial must be real");
                c.re.clone()
            })
            .collect(),
    }
}

/// Independent evaluation of ω(ξ,η) = λ(κ(ξ, ∇η)) through the exponential
/// spectrum.
pub fn oracle_omega_gg(
    space: &CocycleSpace,
    cocycle: &CovariantCocycle,
    xi: &LoopElement,
    eta: &LoopElement,
) -> TwoPi {
    let ctx = space.loops();
    let p = ctx.full_period();
    let fibre = ctx.fibre();
    let exp_eta = to_exp(&eta.0);
    let mut nabla_eta = exp_derivative(&exp_eta, p);
    let a = to_exp(&cocycle.nabla.potential.0);
    if !a.modes.is_empty() {
        let comm = exp_bilinear(&a, &exp_eta, fibre.dim(), |u, v| fibre.bracket_twopi(u, v));
        for (n, v) in comm.modes {
            nabla_eta.add_to(n, v);
        }
    }
    let kappa = exp_bilinear(&to_exp(&xi.0), &nabla_eta, space.m(), |u, v| {
        space.vspace().pair_twopi(u, v)
    });
    let zero = exp_zero_mode(&kappa);
    let mut acc = TwoPi::zero();
    for (c, x) in cocycle.lambda.mu().iter().zip(&zero) {
        acc += &x.scaled(c);
    }
    acc.scaled(cocycle.lambda.scale())
}

/// Independent evaluation of ω(D,ξ) = λ(κ(L_v∇, ξ)).
pub fn oracle_omega_d(
    space: &CocycleSpace,
    cocycle: &CovariantCocycle,
    xi: &LoopElement,
) -> TwoPi {
    let ctx = space.loops();
    let p = ctx.full_period();
    let fibre = ctx.fibre();
    let a = to_exp(&cocycle.nabla.potential.0);
    let w = to_exp(&cocycle.lift.vertical.0);
    // L_v∇ potential: speed·A' - w' + [w, A].
    let mut pot = ExpPoly::zero(fibre.dim());
    for (n, v) in exp_derivative(&a, p).modes {
        pot.add_to(
            n,
            v.iter()
                .map(|c| Cx {
                    re: c.re.scaled(&cocycle.lift.speed),
                    im: c.im.scaled(&cocycle.lift.speed),
                })
                .collect(),
        );
    }
    for (n, v) in exp_derivative(&w, p).modes {
        pot.add_to(n, v.iter().map(|c| Cx { re: -&c.re, im: -&c.im }).collect());
    }
    if !w.modes.is_empty() && !a.modes.is_empty() {
        for (n, v) in exp_bilinear(&w, &a, fibre.dim(), |u, v| fibre.bracket_twopi(u, v)).modes {
            pot.add_to(n, v);
        }
    }
    let kappa = exp_bilinear(&pot, &to_exp(&xi.0), space.m(), |u, v| {
        space.vspace().pair_twopi(u, v)
    });
    let zero = exp_zero_mode(&kappa);
    let mut acc = TwoPi::zero();
    for (c, x) in cocycle.lambda.mu().iter().zip(&zero) {
        acc += &x.scaled(c);
    }
    acc.scaled(cocycle.lambda.scale())
}
