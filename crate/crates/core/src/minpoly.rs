//! Minimal polynomials of rational matrices and factorization over ℚ.
//!
//! The factorizer is complete for factors of degree ≤ 4 (rational roots,
//! quadratic discriminants, and the resolvent-cubic split of quartics into
//! rational quadratics). Higher-degree irreducible pieces are returned
//! unresolved; callers decide whether that blocks them.

use num_bigint::BigInt;
use num_integer::Integer;
use num_traits::{One, Signed, Zero};

use crate::matrix::Mat;
use crate::scalar::{Rat, rat_int};

/// Polynomial over ℚ, coefficients low → high, trailing coefficient nonzero.
#[derive(Debug, Clone, PartialEq, Eq)]
pub struct PolyQ {
    coeffs: Vec<Rat>,
}

impl PolyQ {
    pub fn new(mut coeffs: Vec<Rat>) -> Self {
        while coeffs.last().map_or(false, Rat::is_zero) {
            coeffs.pop();
        }
        PolyQ { coeffs }
    }

    pub fn zero() -> Self {
        PolyQ { coeffs: Vec::new() }
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn degree(&self) -> usize {
        self.coeffs.len().saturating_sub(1)
    }

    pub fn coeff(&self, k: usize) -> Rat {
        self.coeffs.get(k).cloned().unwrap_or_else(Rat::zero)
    }

    pub fn coeffs(&self) -> &[Rat] {
        &self.coeffs
    }

    pub fn monic(&self) -> PolyQ {
        if self.is_zero() {
            return self.clone();
        }
        let lead = self.coeffs.last().unwrap().clone();
        PolyQ::new(self.coeffs.iter().map(|c| c / &lead).collect())
    }

    pub fn eval(&self, x: &Rat) -> Rat {
        let mut acc = Rat::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x + c;
        }
        acc
    }

    pub fn eval_matrix(&self, m: &Mat) -> Mat {
        let n = m.nrows();
        let mut acc = Mat::zeros(n, n);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(m);
            for i in 0..n {
                acc[(i, i)] += c.clone();
            }
        }
        acc
    }

    pub fn derivative(&self) -> PolyQ {
        if self.coeffs.len() <= 1 {
            return PolyQ::zero();
        }
        PolyQ::new(
            self.coeffs[1..]
                .iter()
                .enumerate()
                .map(|(k, c)| c * &rat_int(k as i64 + 1))
                .collect(),
        )
    }

    pub fn mul(&self, rhs: &PolyQ) -> PolyQ {
        if self.is_zero() || rhs.is_zero() {
            return PolyQ::zero();
        }
        let mut coeffs = vec![Rat::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] += a * b;
            }
        }
        PolyQ::new(coeffs)
    }

    /// Euclidean division: (quotient, remainder).
    pub fn divrem(&self, rhs: &PolyQ) -> (PolyQ, PolyQ) {
        assert!(!rhs.is_zero(), "division by the zero polynomial");
        let mut rem = self.coeffs.clone();
        let dr = rhs.degree();
        let lead = rhs.coeffs.last().unwrap().clone();
        if self.degree() < dr || self.is_zero() {
            return (PolyQ::zero(), self.clone());
        }
        let mut quot = vec![Rat::zero(); self.degree() - dr + 1];
        for k in (dr..=self.degree()).rev() {
            let c = &rem[k] / &lead;
            if c.is_zero() {
                continue;
            }
            quot[k - dr] = c.clone();
            for (j, b) in rhs.coeffs.iter().enumerate() {
                let v = &rem[k - dr + j] - &(&c * b);
                rem[k - dr + j] = v;
            }
        }
        (PolyQ::new(quot), PolyQ::new(rem))
    }

    pub fn gcd(&self, rhs: &PolyQ) -> PolyQ {
        let mut a = self.clone();
        let mut b = rhs.clone();
        while !b.is_zero() {
            let (_, r) = a.divrem(&b);
            a = b;
            b = r;
        }
        a.monic()
    }

    pub fn is_squarefree(&self) -> bool {
        if self.degree() <= 1 {
            return true;
        }
        self.gcd(&self.derivative()).degree() == 0
    }

    /// x - r
    pub fn linear(r: &Rat) -> PolyQ {
        PolyQ::new(vec![-r.clone(), Rat::one()])
    }
}

impl std::fmt::Display for PolyQ {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (k, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if !first {
                write!(f, " + ")?;
            }
            first = false;
            match k {
                0 => write!(f, "{c}")?,
                1 => write!(f, "{c}·x")?,
                _ => write!(f, "{c}·x^{k}")?,
            }
        }
        Ok(())
    }
}

/// Minimal polynomial of a square rational matrix, monic, found as the first
/// linear dependency among the vectorized powers I, M, M², …
pub fn minimal_polynomial(m: &Mat) -> PolyQ {
    let n = m.nrows();
    assert_eq!(n, m.ncols());
    let mut powers: Vec<Mat> = vec![Mat::identity(n)];
    for k in 1..=n {
        let prev = powers.last().unwrap();
        powers.push(prev.mul(m));
        // Solve Σ ci·vec(M^i) = vec(M^k) for the lower powers.
        let cols = k;
        let sys = Mat::from_fn(n * n, cols, |r, c| {
            let (i, j) = (r / n, r % n);
            powers[c][(i, j)].clone()
        });
        let target: Vec<Rat> = (0..n * n)
            .map(|r| powers[k][(r / n, r % n)].clone())
            .collect();
        if let Some(sol) = sys.solve(&target) {
            if sys.mul_vec(&sol) == target {
                let mut coeffs: Vec<Rat> = sol.into_iter().map(|c| -c).collect();
                coeffs.push(Rat::one());
                return PolyQ::new(coeffs);
            }
        }
    }
    unreachable!("a degree-n matrix satisfies a polynomial of degree at most n");
}

/// Exact square root of a rational if it is a perfect square.
pub fn rational_sqrt(r: &Rat) -> Option<Rat> {
    if r.is_negative() {
        return None;
    }
    if r.is_zero() {
        return Some(Rat::zero());
    }
    let ns = r.numer().sqrt();
    let ds = r.denom().sqrt();
    if &(&ns * &ns) == r.numer() && &(&ds * &ds) == r.denom() {
        Some(Rat::new(ns, ds))
    } else {
        None
    }
}

fn divisors(n: &BigInt) -> Option<Vec<BigInt>> {
    let n = n.abs();
    if n.is_zero() {
        return None;
    }
    let mut divs = Vec::new();
    let mut d = BigInt::one();
    let mut steps = 0usize;
    while &d * &d <= n {
        if n.is_multiple_of(&d) {
            divs.push(d.clone());
            divs.push(&n / &d);
        }
        d += 1;
        steps += 1;
        if steps > 2_000_000 {
            // Constant term too large to enumerate divisors; give up and let
            // the caller fall back to a different splitting element.
            return None;
        }
    }
    Some(divs)
}

/// All rational roots of the polynomial, with multiplicity collapsed.
pub fn rational_roots(p: &PolyQ) -> Vec<Rat> {
    if p.is_zero() || p.degree() == 0 {
        return Vec::new();
    }
    // Clear denominators to a primitive integer polynomial.
    let mut lcm = BigInt::one();
    for c in p.coeffs() {
        lcm = lcm.lcm(c.denom());
    }
    let ints: Vec<BigInt> = p.coeffs().iter().map(|c| (c * Rat::from_integer(lcm.clone())).to_integer()).collect();
    let mut roots = Vec::new();
    if ints[0].is_zero() {
        roots.push(Rat::zero());
    }
    let a0 = ints.iter().find(|c| !c.is_zero()).unwrap().clone();
    let an = ints.last().unwrap().clone();
    let (Some(ps), Some(qs)) = (divisors(&a0), divisors(&an)) else {
        return roots;
    };
    for num in &ps {
        for den in &qs {
            for sign in [1i64, -1] {
                let cand = Rat::new(num * BigInt::from(sign), den.clone());
                if p.eval(&cand).is_zero() && !roots.contains(&cand) {
                    roots.push(cand);
                }
            }
        }
    }
    roots.sort();
    roots
}

/// Result of [`factor_over_q`]: complete irreducible factors, plus any
/// chunk the degree-≤4 machinery could not resolve.
#[derive(Debug, Clone)]
pub struct Factorization {
    pub factors: Vec<PolyQ>,
    pub unresolved: Option<PolyQ>,
}

/// Factor a monic squarefree polynomial over ℚ. Complete for degree ≤ 4;
/// for higher degree, rational roots and a final quadratic are still pulled
/// out, and whatever remains is reported in `unresolved`.
pub fn factor_over_q(p: &PolyQ) -> Factorization {
    let mut rest = p.monic();
    let mut factors = Vec::new();
    for r in rational_roots(&rest) {
        loop {
            let (q, rem) = rest.divrem(&PolyQ::linear(&r));
            if rem.is_zero() {
                factors.push(PolyQ::linear(&r));
                rest = q;
            } else {
                break;
            }
        }
    }
    match rest.degree() {
        0 => Factorization { factors, unresolved: None },
        1 => {
            factors.push(rest);
            Factorization { factors, unresolved: None }
        }
        2 => {
            factors.push(rest);
            Factorization { factors, unresolved: None }
        }
        4 => match split_quartic(&rest) {
            Some((a, b)) => {
                factors.push(a);
                factors.push(b);
                Factorization { factors, unresolved: None }
            }
            None => Factorization { factors, unresolved: Some(rest) },
        },
        // Degree 3 with no rational root is irreducible over ℚ, but we keep
        // it in `unresolved` because an irreducible cubic cannot come from a
        // product of ℝ/ℂ scalar fields; callers treat it as a blocked split.
        _ => Factorization { factors, unresolved: Some(rest) },
    }
}

/// Try to split a monic quartic with no rational roots into two monic
/// rational quadratics, via the resolvent cubic.
fn split_quartic(p: &PolyQ) -> Option<(PolyQ, PolyQ)> {
    assert_eq!(p.degree(), 4);
    let c3 = p.coeff(3);
    // Depress: x = y - c3/4.
    let shift = -&c3 / rat_int(4);
    let dep = compose_shift(p, &shift);
    let pp = dep.coeff(2);
    let q = dep.coeff(1);
    let r = dep.coeff(0);
    let two = rat_int(2);

    let assemble = |u: &Rat, v: &Rat, w: &Rat| -> (PolyQ, PolyQ) {
        // (y² + u y + v)(y² - u y + w), then undo the shift y = x + c3/4.
        let f1 = PolyQ::new(vec![v.clone(), u.clone(), Rat::one()]);
        let f2 = PolyQ::new(vec![w.clone(), -u.clone(), Rat::one()]);
        (compose_shift(&f1, &-shift.clone()), compose_shift(&f2, &-shift.clone()))
    };

    if q.is_zero() {
        // Biquadratic y⁴ + p y² + r: factor t² + p t + r over ℚ if possible.
        let disc = &pp * &pp - rat_int(4) * &r;
        if let Some(s) = rational_sqrt(&disc) {
            let t1 = (-&pp + &s) / &two;
            let t2 = (-&pp - &s) / &two;
            let f1 = PolyQ::new(vec![-t1, Rat::zero(), Rat::one()]);
            let f2 = PolyQ::new(vec![-t2, Rat::zero(), Rat::one()]);
            return Some((
                compose_shift(&f1, &-shift.clone()),
                compose_shift(&f2, &-shift.clone()),
            ));
        }
        // Or (y² + uy + v)(y² - uy + v) with v² = r, u² = 2v - p.
        if let Some(vr) = rational_sqrt(&r) {
            for v in [vr.clone(), -vr] {
                let u2 = &two * &v - &pp;
                if let Some(u) = rational_sqrt(&u2) {
                    if !u.is_zero() {
                        return Some(assemble(&u, &v, &v));
                    }
                }
            }
        }
        return None;
    }

    // Resolvent cubic in z = u²: z³ + 2p z² + (p² - 4r) z - q² = 0.
    let resolvent = PolyQ::new(vec![
        -(&q * &q),
        &pp * &pp - rat_int(4) * &r,
        &two * &pp,
        Rat::one(),
    ]);
    for z in rational_roots(&resolvent) {
        if z.is_zero() {
            continue;
        }
        if let Some(u) = rational_sqrt(&z) {
            let w = (&pp + &z + &q / &u) / &two;
            let v = (&pp + &z - &q / &u) / &two;
            return Some(assemble(&u, &v, &w));
        }
    }
    None
}

/// p(x + shift)
fn compose_shift(p: &PolyQ, shift: &Rat) -> PolyQ {
    // Horner on the shifted variable.
    let mut acc = PolyQ::zero();
    let x_plus = PolyQ::new(vec![shift.clone(), Rat::one()]);
    for c in p.coeffs().iter().rev() {
        acc = acc.mul(&x_plus);
        let mut coeffs = acc.coeffs().to_vec();
        if coeffs.is_empty() {
            coeffs.push(c.clone());
        } else {
            coeffs[0] += c.clone();
        }
        acc = PolyQ::new(coeffs);
    }
    acc
}
