//! Dense exact polynomial arithmetic over an ordered field: the substrate
//! for constructing the polynomial families, reducing singular-weight
//! integrands by exact division, exact definite integration, and certifying
//! zero structure with Sturm sequences.
//!
//! The coefficient type is generic over [`Scalar`]; `BigRational` is the
//! canonical instance and is what the rest of the crate builds on (see the
//! `Polynomial` and `Interval` aliases at the crate root).

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::{FromPrimitive, One, Signed, Zero};
use num::Integer;
use thiserror::Error;

/// Scalar constraints for exact polynomial arithmetic: an ordered field with
/// an embedding of the integers and exact (lossless) operations.
pub trait Scalar: Clone + Ord + Signed + FromPrimitive + fmt::Debug + fmt::Display {
    /// Rescales coefficients by a positive factor to a canonical
    /// representative. Used in sign-sensitive remainder sequences, where any
    /// positive rescaling preserves sign variations but controls coefficient
    /// growth. The default is the identity.
    fn primitive_normalize(coeffs: &mut [Self]) {
        let _ = coeffs;
    }
}

impl Scalar for BigRational {
    /// Rescales to the integer primitive part: coefficients become coprime
    /// integers, the sign of every coefficient is unchanged.
    fn primitive_normalize(coeffs: &mut [Self]) {
        let mut den_lcm = BigInt::one();
        let mut num_gcd = BigInt::zero();
        for c in coeffs.iter() {
            den_lcm = den_lcm.lcm(c.denom());
            num_gcd = num_gcd.gcd(c.numer());
        }
        if num_gcd.is_zero() {
            return;
        }
        let scale = BigRational::new(den_lcm, num_gcd);
        for c in coeffs.iter_mut() {
            *c *= &scale;
        }
    }
}

/// Exact division failed because the remainder is nonzero. Where a structural
/// identity guarantees divisibility, this error signals that the identity is
/// violated.
#[derive(Debug, Error, PartialEq, Eq)]
#[error("exact division failed: nonzero remainder of degree {remainder_degree}")]
pub struct NotDivisible {
    pub remainder_degree: usize,
}

/// Dense univariate polynomial; `coeffs[i]` multiplies `x^i`.
///
/// Trailing zero coefficients are never stored: the zero polynomial has an
/// empty coefficient vector and every nonzero polynomial ends in its leading
/// coefficient, so structural equality is polynomial equality.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Polynomial<T> {
    coeffs: Vec<T>,
}

impl<T: Scalar> Polynomial<T> {
    /// Builds a polynomial from coefficients in increasing-degree order,
    /// trimming trailing zeros.
    pub fn new(mut coeffs: Vec<T>) -> Self {
        while coeffs.last().is_some_and(|c| c.is_zero()) {
            coeffs.pop();
        }
        Self { coeffs }
    }

    /// Builds a polynomial from integer coefficients in increasing-degree order.
    pub fn from_integers(coeffs: &[i64]) -> Self {
        Self::new(
            coeffs
                .iter()
                .map(|&c| T::from_i64(c).expect("integer embeds into the scalar field"))
                .collect(),
        )
    }

    pub fn zero() -> Self {
        Self { coeffs: Vec::new() }
    }

    pub fn one() -> Self {
        Self::constant(T::one())
    }

    /// The identity polynomial `x`.
    pub fn x() -> Self {
        Self::new(vec![T::zero(), T::one()])
    }

    pub fn constant(c: T) -> Self {
        Self::new(vec![c])
    }

    /// `c x^degree`.
    pub fn monomial(c: T, degree: usize) -> Self {
        let mut coeffs = vec![T::zero(); degree];
        coeffs.push(c);
        Self::new(coeffs)
    }

    /// Coefficients in increasing-degree order; empty for the zero polynomial.
    pub fn coeffs(&self) -> &[T] {
        &self.coeffs
    }

    /// Coefficient of `x^i`, zero beyond the degree.
    pub fn coeff(&self, i: usize) -> T {
        self.coeffs.get(i).cloned().unwrap_or_else(T::zero)
    }

    /// Index of the leading coefficient; `None` for the zero polynomial.
    pub fn degree(&self) -> Option<usize> {
        self.coeffs.len().checked_sub(1)
    }

    pub fn is_zero(&self) -> bool {
        self.coeffs.is_empty()
    }

    pub fn leading_coefficient(&self) -> Option<&T> {
        self.coeffs.last()
    }

    /// Exact Horner evaluation.
    pub fn evaluate(&self, x: &T) -> T {
        let mut acc = T::zero();
        for c in self.coeffs.iter().rev() {
            acc = acc * x.clone() + c.clone();
        }
        acc
    }

    /// Exact formal derivative.
    pub fn differentiate(&self) -> Self {
        let d = self
            .coeffs
            .iter()
            .enumerate()
            .skip(1)
            .map(|(i, c)| c.clone() * T::from_usize(i).expect("index embeds into the scalar field"))
            .collect();
        Self::new(d)
    }

    /// The antiderivative `F` with `F' = self` and `F(x0) = 0`, exactly.
    pub fn antiderivative_vanishing_at(&self, x0: &T) -> Self {
        let mut coeffs = Vec::with_capacity(self.coeffs.len() + 1);
        coeffs.push(T::zero());
        for (i, c) in self.coeffs.iter().enumerate() {
            coeffs.push(
                c.clone() / T::from_usize(i + 1).expect("index embeds into the scalar field"),
            );
        }
        let f = Self::new(coeffs);
        let shift = f.evaluate(x0);
        &f - &Self::constant(shift)
    }

    /// Exact definite integral over `iv`.
    pub fn definite_integral(&self, iv: &Interval<T>) -> T {
        let f = self.antiderivative_vanishing_at(&T::zero());
        f.evaluate(iv.hi()) - f.evaluate(iv.lo())
    }

    /// Euclidean division; returns `(quotient, remainder)` with
    /// `deg remainder < deg divisor`. Panics on a zero divisor.
    pub fn div_rem(&self, divisor: &Self) -> (Self, Self) {
        assert!(
            !divisor.is_zero(),
            "Polynomial::div_rem: division by the zero polynomial"
        );
        let dd = divisor.degree().unwrap();
        let lead = divisor.leading_coefficient().unwrap();
        let mut rem = self.clone();
        let mut quot = vec![T::zero(); self.coeffs.len().saturating_sub(dd)];
        while let Some(rd) = rem.degree() {
            if rd < dd {
                break;
            }
            let factor = rem.leading_coefficient().unwrap().clone() / lead.clone();
            let shift = rd - dd;
            quot[shift] = factor.clone();
            let mut next = rem.coeffs;
            for (i, c) in divisor.coeffs.iter().enumerate() {
                let sub = factor.clone() * c.clone();
                next[shift + i] = next[shift + i].clone() - sub;
            }
            // The leading term cancels by construction; drop it explicitly so
            // inexact scalar types cannot leave residue.
            next.truncate(rd);
            rem = Self::new(next);
        }
        (Self::new(quot), rem)
    }

    /// Exact quotient `q` with `self = q * divisor`, or [`NotDivisible`] if
    /// the remainder is nonzero.
    pub fn divide_exact(&self, divisor: &Self) -> Result<Self, NotDivisible> {
        let (q, r) = self.div_rem(divisor);
        if r.is_zero() {
            Ok(q)
        } else {
            Err(NotDivisible {
                remainder_degree: r.degree().unwrap_or(0),
            })
        }
    }

    /// Rescales so the leading coefficient is one; zero stays zero.
    pub fn monic(&self) -> Self {
        match self.leading_coefficient() {
            None => Self::zero(),
            Some(lead) => {
                let inv = T::one() / lead.clone();
                self.scale(&inv)
            }
        }
    }

    /// Monic greatest common divisor by the Euclidean algorithm, with monic
    /// normalization per step to limit coefficient growth.
    pub fn gcd(&self, other: &Self) -> Self {
        let mut a = self.clone();
        let mut b = other.clone();
        while !b.is_zero() {
            let (_, r) = a.div_rem(&b);
            a = b;
            b = r.monic();
        }
        a.monic()
    }

    /// The product of the distinct irreducible factors: `self / gcd(self, self')`.
    pub fn square_free_part(&self) -> Self {
        if self.is_zero() {
            return Self::zero();
        }
        let g = self.gcd(&self.differentiate());
        self.divide_exact(&g).expect("gcd divides both arguments")
    }

    /// Yun's square-free decomposition: monic pairwise-coprime `a_i` with
    /// `self = lc * prod a_i^i`, returned as `(a_i, i)` for the nonconstant
    /// `a_i` in increasing multiplicity order.
    pub fn squarefree_decomposition(&self) -> Vec<(Self, usize)> {
        assert!(!self.is_zero(), "squarefree_decomposition: zero polynomial");
        let f = self.monic();
        if f.degree() == Some(0) {
            return Vec::new();
        }
        let deriv = f.differentiate();
        let g = f.gcd(&deriv);
        let mut c = f.divide_exact(&g).expect("gcd divides");
        let mut d = &deriv.divide_exact(&g).expect("gcd divides") - &c.differentiate();
        let mut out = Vec::new();
        let mut multiplicity = 1;
        while c.degree().is_some_and(|deg| deg >= 1) {
            let a = c.gcd(&d);
            if a.degree().is_some_and(|deg| deg >= 1) {
                out.push((a.clone(), multiplicity));
            }
            c = c.divide_exact(&a).expect("factor divides");
            d = &d.divide_exact(&a).expect("factor divides") - &c.differentiate();
            multiplicity += 1;
        }
        out
    }

    /// `self^exponent` by repeated multiplication; `self^0 = 1`.
    pub fn pow(&self, exponent: usize) -> Self {
        let mut acc = Self::one();
        for _ in 0..exponent {
            acc = &acc * self;
        }
        acc
    }

    /// Polynomial composition `self(inner(x))` by Horner's scheme.
    pub fn compose(&self, inner: &Self) -> Self {
        let mut acc = Self::zero();
        for c in self.coeffs.iter().rev() {
            acc = &(&acc * inner) + &Self::constant(c.clone());
        }
        acc
    }

    /// Multiplies every coefficient by `c`.
    pub fn scale(&self, c: &T) -> Self {
        Self::new(self.coeffs.iter().map(|k| k.clone() * c.clone()).collect())
    }
}

// ---- Add ----

impl<T: Scalar> Add<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) + rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Add for Polynomial<T> {
    type Output = Polynomial<T>;
    fn add(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self + &rhs
    }
}

// ---- Sub ----

impl<T: Scalar> Sub<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        let n = self.coeffs.len().max(rhs.coeffs.len());
        let coeffs = (0..n).map(|i| self.coeff(i) - rhs.coeff(i)).collect();
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Sub for Polynomial<T> {
    type Output = Polynomial<T>;
    fn sub(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self - &rhs
    }
}

// ---- Mul ----

impl<T: Scalar> Mul<&Polynomial<T>> for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: &Polynomial<T>) -> Polynomial<T> {
        if self.is_zero() || rhs.is_zero() {
            return Polynomial::zero();
        }
        let mut coeffs = vec![T::zero(); self.coeffs.len() + rhs.coeffs.len() - 1];
        for (i, a) in self.coeffs.iter().enumerate() {
            for (j, b) in rhs.coeffs.iter().enumerate() {
                coeffs[i + j] = coeffs[i + j].clone() + a.clone() * b.clone();
            }
        }
        Polynomial::new(coeffs)
    }
}

impl<T: Scalar> Mul for Polynomial<T> {
    type Output = Polynomial<T>;
    fn mul(self, rhs: Polynomial<T>) -> Polynomial<T> {
        &self * &rhs
    }
}

// ---- Neg ----

impl<T: Scalar> Neg for &Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        Polynomial::new(self.coeffs.iter().map(|c| -c.clone()).collect())
    }
}

impl<T: Scalar> Neg for Polynomial<T> {
    type Output = Polynomial<T>;
    fn neg(self) -> Polynomial<T> {
        -&self
    }
}

impl<T: Scalar> fmt::Display for Polynomial<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        let mut first = true;
        for (i, c) in self.coeffs.iter().enumerate().rev() {
            if c.is_zero() {
                continue;
            }
            if c.is_negative() {
                write!(f, "{}", if first { "-" } else { " - " })?;
            } else if !first {
                write!(f, " + ")?;
            }
            let mag = c.abs();
            if i == 0 || !mag.is_one() {
                write!(f, "{mag}")?;
                if i > 0 {
                    write!(f, " ")?;
                }
            }
            match i {
                0 => {}
                1 => write!(f, "x")?,
                _ => write!(f, "x^{i}")?,
            }
            first = false;
        }
        Ok(())
    }
}

/// Interval with exact endpoints, `lo < hi`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct Interval<T> {
    lo: T,
    hi: T,
}

impl<T: Scalar> Interval<T> {
    pub fn new(lo: T, hi: T) -> Self {
        assert!(lo < hi, "Interval: need lo < hi");
        Self { lo, hi }
    }

    /// The interval [-1, 1].
    pub fn unit_symmetric() -> Self {
        Self::new(-T::one(), T::one())
    }

    pub fn lo(&self) -> &T {
        &self.lo
    }

    pub fn hi(&self) -> &T {
        &self.hi
    }

    pub fn width(&self) -> T {
        self.hi.clone() - self.lo.clone()
    }

    pub fn midpoint(&self) -> T {
        (self.lo.clone() + self.hi.clone()) / two::<T>()
    }
}

fn two<T: Scalar>() -> T {
    T::one() + T::one()
}

fn normalized<T: Scalar>(mut p: Polynomial<T>) -> Polynomial<T> {
    T::primitive_normalize(&mut p.coeffs);
    p
}

/// Sturm chain of a square-free polynomial, each element rescaled by a
/// positive factor (primitive part), which preserves sign variations.
fn sturm_chain<T: Scalar>(p: &Polynomial<T>) -> Vec<Polynomial<T>> {
    let mut chain = vec![normalized(p.clone()), normalized(p.differentiate())];
    loop {
        let n = chain.len();
        if chain[n - 1].is_zero() {
            chain.pop();
            return chain;
        }
        let (_, r) = chain[n - 2].div_rem(&chain[n - 1]);
        chain.push(normalized(-r));
    }
}

fn sign_variations<T: Scalar>(chain: &[Polynomial<T>], x: &T) -> usize {
    let mut last: Option<bool> = None;
    let mut count = 0;
    for p in chain {
        let v = p.evaluate(x);
        if v.is_zero() {
            continue;
        }
        let positive = v.is_positive();
        if let Some(prev) = last {
            if prev != positive {
                count += 1;
            }
        }
        last = Some(positive);
    }
    count
}

/// Exact number of distinct real roots of `p` in the half-open interval
/// `(iv.lo, iv.hi]`. The polynomial is reduced to its square-free part first,
/// so repeated roots are counted once.
pub fn sturm_root_count<T: Scalar>(p: &Polynomial<T>, iv: &Interval<T>) -> usize {
    assert!(!p.is_zero(), "sturm_root_count: zero polynomial");
    let sf = p.square_free_part();
    if sf.degree() == Some(0) {
        return 0;
    }
    let chain = sturm_chain(&sf);
    sign_variations(&chain, iv.lo()) - sign_variations(&chain, iv.hi())
}

/// Isolates every distinct real root of `p` in the closed interval
/// `[iv.lo, iv.hi]`: returns pairwise disjoint intervals of width at most
/// `width`, one per root, in increasing order. Each returned interval
/// contains its root in the half-open sense `(lo, hi]`.
pub fn isolate_roots<T: Scalar>(
    p: &Polynomial<T>,
    iv: &Interval<T>,
    width: &T,
) -> Vec<Interval<T>> {
    assert!(!p.is_zero(), "isolate_roots: zero polynomial");
    assert!(width.is_positive(), "isolate_roots: width must be positive");
    let sf = p.square_free_part();
    if sf.degree().is_none_or(|d| d == 0) {
        return Vec::new();
    }
    let chain = sturm_chain(&sf);
    let count = |a: &T, b: &T| sign_variations(&chain, a) - sign_variations(&chain, b);

    // Sturm counting is on (lo, hi], which misses a root at lo itself; pad
    // the left endpoint downward just far enough to pick up exactly that root.
    let mut lo = iv.lo().clone();
    if sf.evaluate(iv.lo()).is_zero() {
        let mut eps = width.clone() / two::<T>();
        loop {
            let cand = iv.lo().clone() - eps.clone();
            if count(&cand, iv.lo()) == 1 {
                lo = cand;
                break;
            }
            eps = eps / two::<T>();
        }
    }

    let total = count(&lo, iv.hi());
    let mut pending = vec![(lo, iv.hi().clone(), total)];
    let mut found = Vec::new();
    while let Some((a, b, roots)) = pending.pop() {
        match roots {
            0 => {}
            1 => {
                let (mut a, mut b) = (a, b);
                while b.clone() - a.clone() > *width {
                    let m = (a.clone() + b.clone()) / two::<T>();
                    if count(&a, &m) == 1 {
                        b = m;
                    } else {
                        a = m;
                    }
                }
                found.push(Interval::new(a, b));
            }
            _ => {
                let m = (a.clone() + b.clone()) / two::<T>();
                let left = count(&a, &m);
                pending.push((a, m.clone(), left));
                pending.push((m, b, roots - left));
            }
        }
    }
    found.sort_by(|u, v| u.lo().cmp(v.lo()));
    found
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::numeric::rational;
    use proptest::prelude::*;

    type Poly = Polynomial<BigRational>;

    fn poly(coeffs: &[i64]) -> Poly {
        Poly::from_integers(coeffs)
    }

    fn iv(lo: i64, hi: i64) -> Interval<BigRational> {
        Interval::new(rational(lo, 1), rational(hi, 1))
    }

    #[test]
    fn trims_trailing_zeros() {
        let p = Poly::new(vec![rational(1, 2), rational(0, 1), rational(0, 1)]);
        assert_eq!(p.degree(), Some(0));
        assert!(Poly::new(vec![rational(0, 1)]).is_zero());
        assert_eq!(Poly::zero().degree(), None);
    }

    #[test]
    fn evaluate_matches_hand_values() {
        // (x^2 - 1)/2 at 0.
        let q2 = Poly::new(vec![rational(-1, 2), rational(0, 1), rational(1, 2)]);
        assert_eq!(q2.evaluate(&rational(0, 1)), rational(-1, 2));
        // Constant coefficient at 0.
        let p = poly(&[7, 3, -2, 5]);
        assert_eq!(p.evaluate(&rational(0, 1)), rational(7, 1));
        // (3x^2 + 3x)/2 at 1.
        let p2 = Poly::new(vec![rational(0, 1), rational(3, 2), rational(3, 2)]);
        assert_eq!(p2.evaluate(&rational(1, 1)), rational(3, 1));
    }

    #[test]
    fn differentiate_matches_hand_values() {
        let q2 = Poly::new(vec![rational(-1, 2), rational(0, 1), rational(1, 2)]);
        assert_eq!(q2.differentiate(), Poly::x());
        assert!(Poly::constant(rational(5, 1)).differentiate().is_zero());
        // Q_4 = (5x^4 - 6x^2 + 1)/8 differentiates to (20x^3 - 12x)/8.
        let q4 = Poly::new(vec![
            rational(1, 8),
            rational(0, 1),
            rational(-6, 8),
            rational(0, 1),
            rational(5, 8),
        ]);
        let expected = Poly::new(vec![
            rational(0, 1),
            rational(-12, 8),
            rational(0, 1),
            rational(20, 8),
        ]);
        assert_eq!(q4.differentiate(), expected);
    }

    #[test]
    fn antiderivative_anchors_exactly() {
        let one = rational(1, 1);
        // x integrated from 1 gives (x^2 - 1)/2.
        let f = Poly::x().antiderivative_vanishing_at(&one);
        assert_eq!(
            f,
            Poly::new(vec![rational(-1, 2), rational(0, 1), rational(1, 2)])
        );
        assert!(Poly::zero().antiderivative_vanishing_at(&one).is_zero());
        // L_2 = (3x^2 - 1)/2 integrated from 1 gives (x^3 - x)/2.
        let l2 = Poly::new(vec![rational(-1, 2), rational(0, 1), rational(3, 2)]);
        let q3 = l2.antiderivative_vanishing_at(&one);
        assert_eq!(
            q3,
            Poly::new(vec![
                rational(0, 1),
                rational(-1, 2),
                rational(0, 1),
                rational(1, 2)
            ])
        );
    }

    #[test]
    fn definite_integral_matches_hand_values() {
        let dom = iv(-1, 1);
        assert_eq!(poly(&[0, 0, 1]).definite_integral(&dom), rational(2, 3));
        assert_eq!(
            poly(&[0, 0, 0, 0, 0, 1]).definite_integral(&dom),
            rational(0, 1)
        );
        // x^2 (1 - x^2)/4 integrates to 1/15.
        let p = Poly::new(vec![
            rational(0, 1),
            rational(0, 1),
            rational(1, 4),
            rational(0, 1),
            rational(-1, 4),
        ]);
        assert_eq!(p.definite_integral(&dom), rational(1, 15));
    }

    #[test]
    fn divide_exact_examples() {
        // 3 Q_3 = 3(x^3 - x)/2 divided by (x - 1) gives (3x^2 + 3x)/2.
        let three_q3 = Poly::new(vec![
            rational(0, 1),
            rational(-3, 2),
            rational(0, 1),
            rational(3, 2),
        ]);
        let q = three_q3.divide_exact(&poly(&[-1, 1])).unwrap();
        assert_eq!(
            q,
            Poly::new(vec![rational(0, 1), rational(3, 2), rational(3, 2)])
        );

        let p = poly(&[4, -3, 2, 7]);
        assert_eq!(p.divide_exact(&Poly::one()).unwrap(), p);

        let q2 = Poly::new(vec![rational(-1, 2), rational(0, 1), rational(1, 2)]);
        let err = q2.divide_exact(&poly(&[-2, 1])).unwrap_err();
        assert_eq!(
            err,
            NotDivisible {
                remainder_degree: 0
            }
        );
    }

    #[test]
    fn div_rem_reconstructs() {
        let p = poly(&[1, -4, 0, 2, 5]);
        let d = poly(&[3, 0, 1]);
        let (q, r) = p.div_rem(&d);
        assert_eq!(&(&q * &d) + &r, p);
        assert!(r.degree().unwrap() < d.degree().unwrap());
    }

    #[test]
    #[should_panic(expected = "division by the zero polynomial")]
    fn div_rem_rejects_zero_divisor() {
        poly(&[1, 1]).div_rem(&Poly::zero());
    }

    #[test]
    fn gcd_and_square_free() {
        let a = poly(&[-1, 1]); // x - 1
        let b = poly(&[2, 1]); // x + 2
        let p = &(&a * &a) * &b;
        let g = p.gcd(&p.differentiate());
        assert_eq!(g, a.monic());
        assert_eq!(p.square_free_part(), &a * &b);
    }

    #[test]
    fn squarefree_decomposition_recovers_multiplicities() {
        let a = poly(&[-1, 1]); // x - 1, multiplicity 2
        let b = poly(&[1, 1]); // x + 1, multiplicity 3
        let p = &a.pow(2) * &b.pow(3);
        let decomp = p.squarefree_decomposition();
        assert_eq!(decomp, vec![(a.monic(), 2), (b.monic(), 3)]);
    }

    #[test]
    fn compose_and_pow() {
        let p = poly(&[1, 0, 1]); // x^2 + 1
        let inner = poly(&[-1, 2]); // 2x - 1
        let composed = p.compose(&inner);
        assert_eq!(composed, poly(&[2, -4, 4]));
        assert_eq!(poly(&[-1, 0, 1]).pow(2), poly(&[1, 0, -2, 0, 1]));
        assert_eq!(poly(&[5]).pow(0), Poly::one());
    }

    #[test]
    fn sturm_root_count_examples() {
        let dom = iv(-1, 1);
        // x^2 - 1/5 has two roots in (-1, 1].
        let p = Poly::new(vec![rational(-1, 5), rational(0, 1), rational(1, 1)]);
        assert_eq!(sturm_root_count(&p, &dom), 2);
        assert_eq!(sturm_root_count(&poly(&[1, 0, 1]), &dom), 0);
        // Interior cofactor of Q_6 = (21x^6 - 35x^4 + 15x^2 - 1)/16 has four
        // roots in (-1, 1).
        let q6 = Poly::new(vec![
            rational(-1, 16),
            rational(0, 1),
            rational(15, 16),
            rational(0, 1),
            rational(-35, 16),
            rational(0, 1),
            rational(21, 16),
        ]);
        let q4 = q6.divide_exact(&poly(&[1, 0, -1])).unwrap();
        assert_eq!(sturm_root_count(&q4, &dom), 4);
    }

    #[test]
    fn sturm_counts_repeated_roots_once() {
        let p = poly(&[0, 0, 1]); // x^2, double root at 0
        assert_eq!(sturm_root_count(&p, &iv(-1, 1)), 1);
    }

    #[test]
    fn isolate_roots_examples() {
        let dom = iv(-1, 1);
        let width = rational(1, 1000);
        // x^2 - 1/5: two intervals around +-1/sqrt(5) = +-0.44721...
        let p = Poly::new(vec![rational(-1, 5), rational(0, 1), rational(1, 1)]);
        let roots = isolate_roots(&p, &dom, &width);
        assert_eq!(roots.len(), 2);
        for r in &roots {
            assert!(r.width() <= width);
        }
        assert!(*roots[0].lo() < rational(-4472, 10000) && rational(-4473, 10000) < *roots[0].lo());
        assert!(*roots[1].hi() > rational(4472, 10000) && rational(4473, 10000) > *roots[1].lo());

        // Linear polynomial.
        let lin = Poly::new(vec![rational(-1, 2), rational(1, 1)]);
        let roots = isolate_roots(&lin, &dom, &width);
        assert_eq!(roots.len(), 1);
        assert!(*roots[0].lo() < rational(1, 2) && rational(1, 2) <= *roots[0].hi());
    }

    #[test]
    fn isolate_roots_includes_closed_endpoints() {
        // Q_5 / x = (7x^4 - 10x^2 + 3)/8 has roots +-1 and +-sqrt(3/7);
        // all four lie in the closed interval [-1, 1].
        let p = Poly::new(vec![
            rational(3, 8),
            rational(0, 1),
            rational(-10, 8),
            rational(0, 1),
            rational(7, 8),
        ]);
        let width = rational(1, 1024);
        let roots = isolate_roots(&p, &iv(-1, 1), &width);
        assert_eq!(roots.len(), 4);
        for pair in roots.windows(2) {
            assert!(pair[0].hi() <= pair[1].lo(), "intervals must be disjoint");
        }
        // Roots at the endpoints are covered.
        assert!(*roots[0].lo() < rational(-1, 1) && rational(-1, 1) <= *roots[0].hi());
        assert!(*roots[3].lo() < rational(1, 1) && rational(1, 1) <= *roots[3].hi());
        // Interior roots near +-0.6546536...
        assert!(*roots[1].lo() < rational(-6546, 10000));
        assert!(*roots[2].hi() > rational(6546, 10000));
    }

    #[test]
    fn display_renders_rational_coefficients() {
        let q6 = Poly::new(vec![
            rational(-1, 16),
            rational(0, 1),
            rational(15, 16),
            rational(0, 1),
            rational(-35, 16),
            rational(0, 1),
            rational(21, 16),
        ]);
        assert_eq!(q6.to_string(), "21/16 x^6 - 35/16 x^4 + 15/16 x^2 - 1/16");
        assert_eq!(Poly::zero().to_string(), "0");
        assert_eq!(Poly::x().to_string(), "x");
        assert_eq!(poly(&[0, -1]).to_string(), "-x");
        assert_eq!(poly(&[-3, 1]).to_string(), "x - 3");
    }

    fn arb_poly(max_deg: usize) -> impl Strategy<Value = Poly> {
        prop::collection::vec(-50i64..50, 0..=max_deg + 1).prop_map(|cs| Poly::from_integers(&cs))
    }

    proptest! {
        #![proptest_config(ProptestConfig::with_cases(64))]

        #[test]
        fn divide_exact_inverts_multiplication(p in arb_poly(10), d in arb_poly(10)) {
            prop_assume!(!d.is_zero());
            let prod = &p * &d;
            prop_assert_eq!(prod.divide_exact(&d).unwrap(), p);
        }

        #[test]
        fn antiderivative_roundtrip(p in arb_poly(10), x0 in -20i64..20) {
            let x0 = rational(x0, 1);
            let f = p.antiderivative_vanishing_at(&x0);
            prop_assert_eq!(f.differentiate(), p);
            prop_assert_eq!(f.evaluate(&x0), rational(0, 1));
        }

        #[test]
        fn odd_polynomials_integrate_to_zero(cs in prop::collection::vec(-50i64..50, 0..6)) {
            let mut coeffs = Vec::new();
            for c in cs {
                coeffs.push(0);
                coeffs.push(c);
            }
            let p = Poly::from_integers(&coeffs);
            prop_assert_eq!(p.definite_integral(&iv(-1, 1)), rational(0, 1));
        }

        #[test]
        fn evaluate_is_ring_homomorphism(p in arb_poly(6), q in arb_poly(6), x in -10i64..10) {
            let x = rational(x, 3);
            let sum = &p + &q;
            let prod = &p * &q;
            prop_assert_eq!(sum.evaluate(&x), p.evaluate(&x) + q.evaluate(&x));
            prop_assert_eq!(prod.evaluate(&x), p.evaluate(&x) * q.evaluate(&x));
        }
    }
}
