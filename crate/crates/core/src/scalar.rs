//! Exact scalars: arbitrary-precision rationals and the ring ℚ\[2π\].
//!
//! Every derivative of a trigonometric mode contributes a factor 2πn/P.
//! Instead of approximating, we track powers of 2π symbolically: a [`TwoPi`]
//! value is a polynomial Σ cₖ·(2π)ᵏ with rational cₖ. Since 2π is
//! transcendental, an identity holds in ℝ iff it holds coefficient-wise in
//! ℚ\[2π\], so all verification stays tolerance-free.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_traits::Zero;

/// Arbitrary-precision rational number, always kept in lowest terms with a
/// positive denominator (num-rational maintains both invariants).
pub type Rat = num_rational::BigRational;

/// Shorthand for an integer rational.
pub fn rat_int(n: i64) -> Rat {
    Rat::from_integer(BigInt::from(n))
}

/// Shorthand for n/d.
pub fn rat(n: i64, d: i64) -> Rat {
    Rat::new(BigInt::from(n), BigInt::from(d))
}

/// An element of ℚ\[2π\]: `coeffs[k]` multiplies (2π)ᵏ.
///
/// Invariant: the final entry of `coeffs` is nonzero (zero is the empty
/// vector), so structural equality is semantic equality.
#[derive(Clone, Debug, Default, PartialEq, Eq, Hash)]
pub struct TwoPi {
    coeffs: Vec<Rat>,
}

impl TwoPi {
    pub fn zero() -> Self {
        TwoPi { coeffs: Vec::new() }
    }

    /// The monomial r·(2π)ᵏ.
    pub fn monomial(power: usize, r: Rat) -> Self {
        if r.is_zero() {
            return TwoPi::zero();
        }
        let mut coeffs = vec![Rat::zero(); power + 1];
        coeffs[power] = r;
        TwoPi { coeffs }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    /// Coefficient of (2π)ᵏ.
    pub fn coeff(&self, power: usize) -> Rat {
        self.coeffs.get(power).cloned().unwrap_or_else(Rat::zero)
    }

    /// Degree in 2π, or `None` for zero.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    /// If the value is a plain rational (no 2π content), return it.
    pub fn as_rational(&self) -> Option<Rat> {
        match self.coeffs.len() {
            0 => Some(Rat::zero()),
            1 => Some(self.coeffs[0].clone()),
            _ => None,
        }
    }

    /// If the value is a single term r·(2π)ᵏ, return (k, r).
    pub fn as_monomial(&self) -> Option<(usize, Rat)> {
        let mut found = None;
        for (k, c) in self.coeffs.iter().enumerate() {
            if !c.is_zero() {
                if found.is_some() {
                    return None;
                }
                found = Some((k, c.clone()));
            }
        }
        found.or(Some((0, Rat::zero())))
    }

    pub fn scaled(&self, r: &Rat) -> Self {
        if r.is_zero() {
            return TwoPi::zero();
        }
        TwoPi {
            coeffs: self.coeffs.iter().map(|c| c * r).collect(),
        }
    }

    /// Multiply by r·(2π)ᵏ.
    pub fn mul_monomial(&self, power: usize, r: &Rat) -> Self {
        if r.is_zero() || self.is_zero() {
            return TwoPi::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + power];
        for (k, c) in self.coeffs.iter().enumerate() {
            coeffs[k + power] = c * r;
        }
        TwoPi { coeffs }
    }

    fn normalize(mut self) -> Self {
        while self.coeffs.last().map_or(false, |c| c.is_zero()) {
            self.coeffs.pop();
        }
        self
    }
}

impl From<Rat> for TwoPi {
    fn from(r: Rat) -> Self {
        TwoPi::monomial(0, r)
    }
}

impl Add for &TwoPi {
    type Output = TwoPi;
    fn add(self, rhs: &TwoPi) -> TwoPi {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) + rhs.coeff(k));
        }
        TwoPi { coeffs }.normalize()
    }
}

impl Sub for &TwoPi {
    type Output = TwoPi;
    fn sub(self, rhs: &TwoPi) -> TwoPi {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let mut coeffs = Vec::with_capacity(n);
        for k in 0..n {
            coeffs.push(self.coeff(k) - rhs.coeff(k));
        }
        TwoPi { coeffs }.normalize()
    }
}

impl Mul for &TwoPi {
    type Output = TwoPi;
    fn mul(self, rhs: &TwoPi) -> TwoPi {
        if self.is_zero() || rhs.is_zero() {
            return TwoPi::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        TwoPi { coeffs }.normalize()
    }
}

impl Neg for &TwoPi {
    type Output = TwoPi;
    fn neg(self) -> TwoPi {
        TwoPi {
            coeffs: self.coeffs.iter().map(|c| -c).collect(),
        }
    }
}

impl AddAssign<&TwoPi> for TwoPi {
    fn add_assign(&mut self, rhs: &TwoPi) {
        *self = &*self + rhs;
    }
}

impl SubAssign<&TwoPi> for TwoPi {
    fn sub_assign(&mut self, rhs: &TwoPi) {
        *self = &*self - rhs;
    }
}

impl fmt::Display for TwoPi {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·(2π)")?,
                _ => write!(f, "{c}·(2π)^{k}")?,
            }
        }
        Ok(())
    }
}

/// Componentwise sum of two coefficient vectors.
pub fn vec_add(a: &[TwoPi], b: &[TwoPi]) -> Vec<TwoPi> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x + y).collect()
}

/// Componentwise difference.
pub fn vec_sub(a: &[TwoPi], b: &[TwoPi]) -> Vec<TwoPi> {
    debug_assert_eq!(a.len(), b.len());
    a.iter().zip(b).map(|(x, y)| x - y).collect()
}

pub fn vec_neg(a: &[TwoPi]) -> Vec<TwoPi> {
    a.iter().map(|x| -x).collect()
}

pub fn vec_scale(a: &[TwoPi], r: &Rat) -> Vec<TwoPi> {
    a.iter().map(|x| x.scaled(r)).collect()
}

pub fn vec_is_zero(a: &[TwoPi]) -> bool {
    a.iter().all(|x| x.is_zero())
}

pub fn vec_zero(n: usize) -> Vec<TwoPi> {
    vec![TwoPi::zero(); n]
}

/// Lift a rational vector into ℚ\[2π\] coefficients.
pub fn vec_from_rat(v: &[Rat]) -> Vec<TwoPi> {
    v.iter().map(|r| TwoPi::from(r.clone())).collect()
}
