//! Floating-point integration backends on `(-1, 1)`.
//!
//! Two rule constructions: Gauss rules whose nodes are the roots of `L_n`,
//! certified by Sturm isolation and refined with bracketed Newton steps, and
//! tanh-sinh (double-exponential) rules whose clustering near the endpoints
//! absorbs the integrable endpoint behavior of composed weights.
//!
//! Everything runs in software floats with at least 50 significant decimal
//! digits and is rounded to `f64` only for reporting. Quadrature here is a
//! cross-check against exact rational results, never the source of truth, so
//! integrands are only ever supplied where the true value is known finite.

use std::cell::RefCell;

use num::rational::BigRational;
use num::traits::{Signed, Zero};
use thiserror::Error;

pub use astro_float::BigFloat;
use astro_float::{Consts, Radix, RoundingMode};

use crate::families::legendre;
use crate::poly::isolate_roots;
use crate::{Interval, Polynomial};

const RM: RoundingMode = RoundingMode::ToEven;

/// Binary precision that guarantees `digits` significant decimal digits,
/// with guard bits on top.
pub fn digits_to_bits(digits: usize) -> usize {
    (digits as f64 * std::f64::consts::LOG2_10).ceil() as usize + 32
}

/// Working precision for rule construction and accumulation: 50 decimal
/// digits plus guard bits.
pub const WORKING_PRECISION: usize = 199;

thread_local! {
    static CONSTS: RefCell<Consts> =
        RefCell::new(Consts::new().expect("constants cache allocation"));
}

pub(crate) fn with_consts<R>(f: impl FnOnce(&mut Consts) -> R) -> R {
    CONSTS.with(|c| f(&mut c.borrow_mut()))
}

/// Converts an exact rational to a float of precision `p`.
pub fn to_big(r: &BigRational, p: usize) -> BigFloat {
    with_consts(|cc| {
        let numer = BigFloat::parse(&r.numer().to_string(), Radix::Dec, p + 8, RM, cc);
        let denom = BigFloat::parse(&r.denom().to_string(), Radix::Dec, p + 8, RM, cc);
        numer.div(&denom, p, RM)
    })
}

/// Rounds a high-precision float to `f64` (through its decimal rendering;
/// values beyond the `f64` range saturate to infinities).
pub fn to_f64(x: &BigFloat) -> f64 {
    if x.is_nan() {
        return f64::NAN;
    }
    if x.is_inf_pos() {
        return f64::INFINITY;
    }
    if x.is_inf_neg() {
        return f64::NEG_INFINITY;
    }
    x.to_string()
        .parse::<f64>()
        .expect("decimal rendering of a finite float parses")
}

/// An exact polynomial with its coefficients converted once, for repeated
/// Horner evaluation at floats.
pub struct FloatPoly {
    coeffs: Vec<BigFloat>,
    precision: usize,
}

impl FloatPoly {
    pub fn new(poly: &Polynomial, precision: usize) -> Self {
        FloatPoly {
            coeffs: poly.coeffs().iter().map(|c| to_big(c, precision)).collect(),
            precision,
        }
    }

    pub fn evaluate(&self, x: &BigFloat) -> BigFloat {
        let p = self.precision;
        let mut acc = BigFloat::from_i8(0, p);
        for c in self.coeffs.iter().rev() {
            acc = acc.mul(x, p, RM).add(c, p, RM);
        }
        acc
    }
}

#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum RuleKind {
    GaussLegendre,
    TanhSinh,
}

/// Nodes and weights on `(-1, 1)`, with a coarser companion rule whose
/// disagreement with the main rule is reported as the error estimate.
pub struct QuadratureRule {
    kind: RuleKind,
    /// Order for Gauss rules, level for tanh-sinh rules.
    parameter: usize,
    nodes: Vec<BigFloat>,
    weights: Vec<BigFloat>,
    precision: usize,
    coarse: Option<Box<QuadratureRule>>,
}

impl QuadratureRule {
    pub fn kind(&self) -> RuleKind {
        self.kind
    }

    pub fn parameter(&self) -> usize {
        self.parameter
    }

    pub fn len(&self) -> usize {
        self.nodes.len()
    }

    pub fn is_empty(&self) -> bool {
        self.nodes.is_empty()
    }

    pub fn nodes(&self) -> &[BigFloat] {
        &self.nodes
    }

    pub fn weights(&self) -> &[BigFloat] {
        &self.weights
    }

    pub fn precision(&self) -> usize {
        self.precision
    }

    fn check_invariants(&self) {
        for pair in self.nodes.windows(2) {
            assert!(pair[0] < pair[1], "nodes must be strictly increasing");
        }
        for w in &self.weights {
            assert!(w.is_positive(), "weights must be positive");
        }
    }
}

/// The integrand returned a non-finite value at a node.
#[derive(Debug, Error)]
#[error("integrand is not finite at node x = {node}")]
pub struct NonFiniteEvaluation {
    pub node: f64,
}

/// Gauss rule of the given order: `order` certified roots of `L_order` with
/// weights `2 / ((1 - x^2) L'(x)^2)`. Exact for degrees up to `2 order - 1`.
pub fn gauss_legendre_rule(order: usize) -> QuadratureRule {
    gauss_legendre_rule_at(order, WORKING_PRECISION)
}

/// Gauss rule at an explicit bit precision.
pub fn gauss_legendre_rule_at(order: usize, p: usize) -> QuadratureRule {
    assert!(order >= 1, "gauss_legendre_rule: order must be >= 1");
    assert!(p >= 64, "gauss_legendre_rule: precision below 64 bits");
    let mut rule = gauss_core(order, p);
    if order >= 2 {
        rule.coarse = Some(Box::new(gauss_core(order - 1, p)));
    }
    rule
}

fn gauss_core(order: usize, p: usize) -> QuadratureRule {
    let ln = legendre(order);
    let dln = ln.differentiate();
    let dln_f = FloatPoly::new(&dln, p);

    // Strictly positive roots only; the rest follow by symmetry. Odd orders
    // have their root at 0 divided out so isolation stays inside (0, 1].
    let reduced = if order % 2 == 1 {
        ln.divide_exact(&Polynomial::x())
            .expect("odd-order L_n vanishes at 0")
    } else {
        ln.clone()
    };
    let mut positive: Vec<BigFloat> = Vec::new();
    if reduced.degree().is_some_and(|d| d > 0) {
        let reduced_f = FloatPoly::new(&reduced, p);
        let dreduced_f = FloatPoly::new(&reduced.differentiate(), p);
        let half = Interval::new(BigRational::zero(), BigRational::from_integer(1.into()));
        let width = BigRational::new(1.into(), 64.into());
        positive = isolate_roots(&reduced, &half, &width)
            .iter()
            .map(|iv| refine_root(&reduced, &reduced_f, &dreduced_f, iv, p))
            .collect();
        positive.sort_by(|a, b| a.partial_cmp(b).expect("finite nodes"));
    }

    let one = BigFloat::from_i8(1, p);
    let two = BigFloat::from_i8(2, p);
    let weight_at = |x: &BigFloat| {
        let d = dln_f.evaluate(x);
        let denom = one
            .sub(&x.mul(x, p, RM), p, RM)
            .mul(&d.mul(&d, p, RM), p, RM);
        two.div(&denom, p, RM)
    };

    let mut nodes = Vec::with_capacity(order);
    let mut weights = Vec::with_capacity(order);
    for x in positive.iter().rev() {
        nodes.push(x.neg());
        weights.push(weight_at(x));
    }
    if order % 2 == 1 {
        let zero = BigFloat::from_i8(0, p);
        let w = weight_at(&zero);
        nodes.push(zero);
        weights.push(w);
    }
    for x in positive {
        let w = weight_at(&x);
        nodes.push(x);
        weights.push(w);
    }

    let rule = QuadratureRule {
        kind: RuleKind::GaussLegendre,
        parameter: order,
        nodes,
        weights,
        precision: p,
        coarse: None,
    };
    rule.check_invariants();
    rule
}

/// Newton iteration bracketed by the isolating interval; falls back to
/// bisection whenever a step leaves the bracket.
fn refine_root(
    exact: &Polynomial,
    poly: &FloatPoly,
    deriv: &FloatPoly,
    iv: &Interval,
    p: usize,
) -> BigFloat {
    let sign_lo = exact.evaluate(iv.lo());
    let sign_hi = exact.evaluate(iv.hi());
    if sign_lo.is_zero() {
        return to_big(iv.lo(), p);
    }
    if sign_hi.is_zero() {
        return to_big(iv.hi(), p);
    }
    assert!(
        sign_lo.is_negative() != sign_hi.is_negative(),
        "isolating interval must bracket a sign change"
    );
    let lo_negative = sign_lo.is_negative();

    let mut lo = to_big(iv.lo(), p);
    let mut hi = to_big(iv.hi(), p);
    let two = BigFloat::from_i8(2, p);
    let mut x = lo.add(&hi, p, RM).div(&two, p, RM);
    for _ in 0..200 {
        let fx = poly.evaluate(&x);
        if fx.is_zero() {
            break;
        }
        if fx.is_negative() == lo_negative {
            lo = x.clone();
        } else {
            hi = x.clone();
        }
        let candidate = x.sub(&fx.div(&deriv.evaluate(&x), p, RM), p, RM);
        let next = if lo < candidate && candidate < hi {
            candidate
        } else {
            lo.add(&hi, p, RM).div(&two, p, RM)
        };
        let step = next.sub(&x, p, RM).abs();
        let converged = step.is_zero()
            || match (step.exponent(), next.exponent()) {
                (Some(se), Some(ne)) => i64::from(se) <= i64::from(ne) - (p as i64 - 8),
                _ => false,
            };
        x = next;
        if converged {
            break;
        }
    }
    x
}

/// Tanh-sinh rule at step `h = 2^-level`: abscissas `tanh(pi/2 sinh(k h))`
/// truncated once the weights drop below the precision budget. The node
/// closest to 1 stays far enough inside that `1 - x` keeps roughly half the
/// working precision, so endpoint factors of composed integrands remain
/// computable at every node.
pub fn tanh_sinh_rule(level: usize) -> QuadratureRule {
    tanh_sinh_rule_at(level, WORKING_PRECISION)
}

/// Tanh-sinh rule at an explicit bit precision.
pub fn tanh_sinh_rule_at(level: usize, p: usize) -> QuadratureRule {
    assert!(level >= 1, "tanh_sinh_rule: level must be >= 1");
    assert!(p >= 64, "tanh_sinh_rule: precision below 64 bits");
    let mut rule = tanh_sinh_core(level, p);
    rule.coarse = Some(Box::new(tanh_sinh_core(level - 1, p)));
    rule
}

fn tanh_sinh_core(level: usize, p: usize) -> QuadratureRule {
    let one = BigFloat::from_i8(1, p);
    let two = BigFloat::from_i8(2, p);
    let h = two.powi(level, p, RM).reciprocal(p, RM);
    let half_pi = with_consts(|cc| cc.pi(p, RM)).div(&two, p, RM);
    let cutoff = two.powi(p / 2, p, RM).reciprocal(p, RM);

    let mut pos_nodes = Vec::new();
    let mut pos_weights = Vec::new();
    let center_weight = h.mul(&half_pi, p, RM);
    for k in 1u64.. {
        let t = h.mul(&BigFloat::from_u64(k, p), p, RM);
        let (node, weight) = with_consts(|cc| {
            let v = half_pi.mul(&t.sinh(p, RM, cc), p, RM);
            let cosh_v = v.cosh(p, RM, cc);
            let weight = h.mul(&half_pi, p, RM).mul(&t.cosh(p, RM, cc), p, RM).div(
                &cosh_v.mul(&cosh_v, p, RM),
                p,
                RM,
            );
            // 1 - tanh(v) = 2 / (e^{2v} + 1), kept as a subtraction from 1
            // so the stored node still carries the tail explicitly.
            let tail = two.div(&v.mul(&two, p, RM).exp(p, RM, cc).add(&one, p, RM), p, RM);
            (one.sub(&tail, p, RM), weight)
        });
        if weight < cutoff {
            break;
        }
        pos_nodes.push(node);
        pos_weights.push(weight);
    }

    let mut nodes = Vec::with_capacity(2 * pos_nodes.len() + 1);
    let mut weights = Vec::with_capacity(2 * pos_weights.len() + 1);
    for (x, w) in pos_nodes.iter().zip(&pos_weights).rev() {
        nodes.push(x.neg());
        weights.push(w.clone());
    }
    nodes.push(BigFloat::from_i8(0, p));
    weights.push(center_weight);
    for (x, w) in pos_nodes.iter().zip(&pos_weights) {
        nodes.push(x.clone());
        weights.push(w.clone());
    }

    let rule = QuadratureRule {
        kind: RuleKind::TanhSinh,
        parameter: level,
        nodes,
        weights,
        precision: p,
        coarse: None,
    };
    rule.check_invariants();
    rule
}

fn weighted_sum(
    f: &impl Fn(&BigFloat) -> BigFloat,
    rule: &QuadratureRule,
) -> Result<BigFloat, NonFiniteEvaluation> {
    let p = rule.precision;
    let mut acc = BigFloat::from_i8(0, p);
    for (x, w) in rule.nodes.iter().zip(&rule.weights) {
        let y = f(x);
        if y.is_nan() || y.is_inf() {
            return Err(NonFiniteEvaluation { node: to_f64(x) });
        }
        acc = acc.add(&y.mul(w, p, RM), p, RM);
    }
    Ok(acc)
}

/// Applies the rule to `f` and reports `(value, error_estimate)`, the
/// estimate being the disagreement with the coarser companion rule.
pub fn integrate(
    f: impl Fn(&BigFloat) -> BigFloat,
    rule: &QuadratureRule,
) -> Result<(f64, f64), NonFiniteEvaluation> {
    let fine = weighted_sum(&f, rule)?;
    let estimate = match &rule.coarse {
        Some(coarse) => {
            let c = weighted_sum(&f, coarse)?;
            to_f64(&fine.sub(&c, rule.precision, RM)).abs()
        }
        None => 0.0,
    };
    Ok((to_f64(&fine), estimate))
}
