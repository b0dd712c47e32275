//! Reproducing kernels of the polar family.
//!
//! For an index set `K` of finite-norm members (so `0` is excluded; the
//! squared norm of `P_0` diverges), the kernel is
//!
//! ```text
//! K(x, y) = sum over k in K of P_k(y) P_k(x) / ||P_k||^2
//! ```
//!
//! For contiguous `K = {1..n}` the kernel collapses to the
//! Christoffel-Darboux ratio form, which requires the ratio of consecutive
//! leading coefficients; this holds here because `P_k = (x+1) R_{k-1}` with
//! `{R_j}` a complete orthogonal system under `1 - x^2`, so the classical
//! argument applies verbatim to the `R` family and lifts to the `P` family.
//! Freezing one argument at zero yields the kernel-at-zero family, whose
//! Gram matrix under `x(1-x)/(1+x)` vanishes identically: each `K_n(x, 0)`
//! is `(x+1)` times an even polynomial, so every Gram integrand reduces to
//! an odd polynomial.

use num::rational::BigRational;
use num::traits::Zero;
use thiserror::Error;

use crate::families::{polar, FamilyKind};
use crate::weighted_ip::{inner_product, norm_squared, NotReducible, WeightKind};
use crate::Polynomial;

/// An index set for kernel sums over the polar family, kept sorted and
/// restricted to finite-norm members (k >= 1).
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct KernelSpec {
    indices: Vec<usize>,
    pub family: FamilyKind,
    pub weight: WeightKind,
}

impl KernelSpec {
    /// Builds a spec from arbitrary indices; sorts and deduplicates.
    /// Panics if index 0 (divergent norm) is requested.
    pub fn new(mut indices: Vec<usize>) -> Self {
        indices.sort_unstable();
        indices.dedup();
        assert!(
            indices.first().is_none_or(|&k| k >= 1),
            "KernelSpec: index 0 has a divergent norm and cannot enter a kernel"
        );
        Self {
            indices,
            family: FamilyKind::Polar,
            weight: WeightKind::PWeight,
        }
    }

    /// The default contiguous index set {1..n}.
    pub fn contiguous(n: usize) -> Self {
        Self::new((1..=n).collect())
    }

    pub fn indices(&self) -> &[usize] {
        &self.indices
    }

    /// Largest index if the set is exactly {1..n}.
    fn contiguous_top(&self) -> Option<usize> {
        let n = *self.indices.last()?;
        (self.indices.len() == n).then_some(n)
    }
}

/// A polynomial lies outside the span of the kernel's family members.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("polynomial lies outside the kernel span; residual component {residual}")]
pub struct SpanError {
    pub residual: Polynomial,
}

fn finite_norm(k: usize) -> BigRational {
    norm_squared(FamilyKind::Polar, k).expect("kernel indices are >= 1, with finite norms")
}

/// The kernel with its second argument frozen: `x -> K(x, y)`, exact.
pub fn kernel_in_x(spec: &KernelSpec, y: &BigRational) -> Polynomial {
    let mut sum = Polynomial::zero();
    for &k in spec.indices() {
        let p = polar(k);
        let coeff = p.evaluate(y) / finite_norm(k);
        sum = &sum + &p.scale(&coeff);
    }
    sum
}

/// `K(x, y)` as an exact rational; symmetric in its arguments.
pub fn kernel_value(spec: &KernelSpec, x: &BigRational, y: &BigRational) -> BigRational {
    kernel_in_x(spec, y).evaluate(x)
}

/// The Christoffel-Darboux ratio form of the contiguous kernel `{1..n}`:
///
/// ```text
/// K(x, y) = (k_n / k_{n+1}) (P_{n+1}(x) P_n(y) - P_{n+1}(y) P_n(x)) / ((x - y) ||P_n||^2)
/// ```
///
/// where `k_m` is the leading coefficient of `P_m`, with the confluent
/// derivative form at `x = y`. Equals [`kernel_value`] exactly.
pub fn christoffel_darboux(spec: &KernelSpec, x: &BigRational, y: &BigRational) -> BigRational {
    let n = spec
        .contiguous_top()
        .expect("the ratio form requires a contiguous index set {1..n}");
    let p_n = polar(n);
    let p_next = polar(n + 1);
    let lead_ratio =
        p_n.leading_coefficient().unwrap().clone() / p_next.leading_coefficient().unwrap().clone();
    let scale = lead_ratio / finite_norm(n);
    if x == y {
        let numerator = p_next.differentiate().evaluate(x) * p_n.evaluate(x)
            - p_next.evaluate(x) * p_n.differentiate().evaluate(x);
        numerator * scale
    } else {
        let numerator = p_next.evaluate(x) * p_n.evaluate(y) - p_next.evaluate(y) * p_n.evaluate(x);
        numerator / (x.clone() - y.clone()) * scale
    }
}

/// Applies the reproducing integral `integral of K(x, t) f(t) (1-t)/(1+t) dt`
/// exactly. Returns `f` itself when `f` lies in the kernel span; otherwise
/// reports the out-of-span residual.
pub fn reproduce(f: &Polynomial, spec: &KernelSpec) -> Result<Polynomial, SpanError> {
    let mut projection = Polynomial::zero();
    let mut coefficients = Vec::with_capacity(spec.indices().len());
    for &k in spec.indices() {
        let p = polar(k);
        // P_k vanishes at -1, so the product with any polynomial reduces.
        let coeff = inner_product(&p, f, WeightKind::PWeight)
            .expect("P_k vanishes at -1, so the integrand reduces")
            / finite_norm(k);
        projection = &projection + &p.scale(&coeff);
        coefficients.push((k, coeff));
    }
    let residual = f - &projection;
    if !residual.is_zero() {
        return Err(SpanError { residual });
    }
    // The integral against the kernel is the same projection assembled in
    // the x variable: sum over k of P_k(x) <P_k, f> / ||P_k||^2.
    let mut reproduced = Polynomial::zero();
    for (k, coeff) in coefficients {
        reproduced = &reproduced + &polar(k).scale(&coeff);
    }
    Ok(reproduced)
}

/// Exact Gram matrix of the kernel-at-zero family `{K_n(x, 0)}` for
/// `n = 1..maxN` under the weight `x(1-x)/(1+x)`. Identically zero (see the
/// module docs), hence in particular diagonal.
pub fn kernel_zero_gram(max_n: usize) -> Result<Vec<Vec<BigRational>>, NotReducible> {
    assert!(
        max_n >= 2,
        "kernel_zero_gram: requires maxN >= 2, got {max_n}"
    );
    let zero = BigRational::zero();
    let members: Vec<Polynomial> = (1..=max_n)
        .map(|n| kernel_in_x(&KernelSpec::contiguous(n), &zero))
        .collect();
    let mut matrix = vec![vec![BigRational::zero(); max_n]; max_n];
    for i in 0..max_n {
        for j in i..max_n {
            let value = inner_product(&members[i], &members[j], WeightKind::KernelZeroWeight)?;
            matrix[i][j] = value.clone();
            matrix[j][i] = value;
        }
    }
    Ok(matrix)
}
