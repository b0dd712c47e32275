//! Composed orthogonal systems `x -> P_n(f(x))` for rational maps `f` taking
//! `[-1, 1]` onto itself monotonically.
//!
//! When `f` is an increasing bijection of the interval, substituting
//! `t = f(x)` carries the weighted orthogonality of the base family to the
//! composed system, provided the weight transported along is
//! `phi = f'(x) (1 - f(x))/(1 + f(x))`. A second orientation with the
//! endpoint factors swapped, `f'(x) (1 + f(x))/(1 - f(x))`, circulates in
//! the source material; it makes the diagonal integrals diverge, so both
//! orientations are constructible here and the numeric Gram matrix exposes
//! the difference. Certification of the bijection hypothesis and the weight
//! assembly are exact; only the final Gram integrals are floating point.

use num::rational::BigRational;
use num::traits::{One, Zero};
use thiserror::Error;

use crate::families::polar;
use crate::poly::{isolate_roots, sturm_root_count};
use crate::quadrature::{integrate, BigFloat, FloatPoly, NonFiniteEvaluation, QuadratureRule};
use crate::{Interval, Polynomial};

/// A quotient of exact polynomials restricted to a domain interval. The
/// fraction is kept reduced and the denominator is certified root-free on
/// the domain, so evaluation is total.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct RationalMap {
    numerator: Polynomial,
    denominator: Polynomial,
    domain: Interval,
}

impl RationalMap {
    pub fn new(numerator: Polynomial, denominator: Polynomial, domain: Interval) -> Self {
        assert!(!denominator.is_zero(), "rational map: zero denominator");
        let gcd = numerator.gcd(&denominator);
        let numerator = numerator.divide_exact(&gcd).expect("gcd divides");
        let denominator = denominator.divide_exact(&gcd).expect("gcd divides");
        assert!(
            !denominator.evaluate(domain.lo()).is_zero()
                && sturm_root_count(&denominator, &domain) == 0,
            "rational map: denominator vanishes inside the domain"
        );
        RationalMap {
            numerator,
            denominator,
            domain,
        }
    }

    /// The identity map of `[-1, 1]`.
    pub fn identity() -> Self {
        RationalMap::new(
            Polynomial::x(),
            Polynomial::one(),
            Interval::unit_symmetric(),
        )
    }

    /// `f(x) = (ax + b)/(cx + d)` on `[-1, 1]`.
    pub fn mobius(a: i64, b: i64, c: i64, d: i64) -> Self {
        assert!(a * d != b * c, "mobius: degenerate coefficients");
        RationalMap::new(
            Polynomial::from_integers(&[b, a]),
            Polynomial::from_integers(&[d, c]),
            Interval::unit_symmetric(),
        )
    }

    /// `f(x) = 4x^3 / (x^2 + 1)^2` on `[-1, 1]`.
    pub fn cubic() -> Self {
        let quartic = Polynomial::from_integers(&[1, 0, 1]).pow(2);
        RationalMap::new(
            Polynomial::monomial(BigRational::from_integer(4.into()), 3),
            quartic,
            Interval::unit_symmetric(),
        )
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }

    pub fn domain(&self) -> &Interval {
        &self.domain
    }

    pub fn evaluate(&self, x: &BigRational) -> BigRational {
        self.numerator.evaluate(x) / self.denominator.evaluate(x)
    }

    /// The derivative as a rational map on the same domain, by the quotient
    /// rule in exact arithmetic.
    pub fn derivative(&self) -> RationalMap {
        RationalMap::new(
            self.derivative_numerator(),
            &self.denominator * &self.denominator,
            self.domain.clone(),
        )
    }

    /// `N'D - ND'`, the numerator of the derivative before reduction.
    fn derivative_numerator(&self) -> Polynomial {
        &(&self.numerator.differentiate() * &self.denominator)
            - &(&self.numerator * &self.denominator.differentiate())
    }
}

/// Evidence that a map increases through its domain onto `[-1, 1]`:
/// endpoint images checked exactly, derivative sign constant by Sturm count.
/// Interior points where the derivative vanishes to even order are harmless
/// and recorded as isolating intervals.
#[derive(Clone, Debug)]
pub struct BijectionCertificate {
    pub stationary_points: Vec<Interval>,
}

#[derive(Debug, Error, Clone, PartialEq, Eq)]
pub enum CertifyError {
    #[error("endpoint image mismatch: f({point}) = {actual}, expected {expected}")]
    EndpointMismatch {
        point: BigRational,
        actual: BigRational,
        expected: BigRational,
    },
    #[error("derivative changes sign inside the domain, witness root in ({lo}, {hi}]")]
    NotMonotone { lo: BigRational, hi: BigRational },
}

/// Checks that `f` maps its domain increasingly onto `target` (which must be
/// `[-1, 1]`). Endpoint images are compared exactly; monotonicity reduces to
/// the odd-multiplicity part of the derivative numerator having no interior
/// roots, counted by Sturm chains.
// The error carries exact rational witnesses; certification failures are
// cold, so the variant size is accepted over boxing.
#[allow(clippy::result_large_err)]
pub fn certify_monotone_bijection(
    f: &RationalMap,
    target: &Interval,
) -> Result<BijectionCertificate, CertifyError> {
    let minus_one = -BigRational::one();
    assert!(
        *target.lo() == minus_one && *target.hi() == BigRational::one(),
        "composed systems target the base interval [-1, 1]"
    );
    for (point, expected) in [
        (f.domain.lo().clone(), target.lo().clone()),
        (f.domain.hi().clone(), target.hi().clone()),
    ] {
        let actual = f.evaluate(&point);
        if actual != expected {
            return Err(CertifyError::EndpointMismatch {
                point,
                actual,
                expected,
            });
        }
    }

    let derivative_numerator = f.derivative_numerator();
    // Split off even-multiplicity factors; only odd multiplicities flip sign.
    let mut odd_part = Polynomial::one();
    let mut even_part = Polynomial::one();
    for (factor, multiplicity) in derivative_numerator.squarefree_decomposition() {
        if multiplicity % 2 == 1 {
            odd_part = &odd_part * &factor;
        } else {
            even_part = &even_part * &factor;
        }
    }

    let interior_roots = sturm_root_count(&odd_part, &f.domain)
        - usize::from(odd_part.evaluate(f.domain.hi()).is_zero());
    if interior_roots > 0 {
        let width = f.domain.width() / BigRational::from_integer(64.into());
        let witness = isolate_roots(&odd_part, &f.domain, &width)
            .into_iter()
            .find(|iv| iv.lo() > f.domain.lo() && iv.hi() < f.domain.hi())
            .expect("an interior sign change has an interior isolating interval");
        return Err(CertifyError::NotMonotone {
            lo: witness.lo().clone(),
            hi: witness.hi().clone(),
        });
    }

    let mut stationary_points = Vec::new();
    if even_part.degree().is_some_and(|d| d > 0) {
        let width = f.domain.width() / BigRational::from_integer(64.into());
        for iv in isolate_roots(&even_part, &f.domain, &width) {
            if iv.hi() < f.domain.hi() {
                stationary_points.push(iv);
            }
        }
    }
    Ok(BijectionCertificate { stationary_points })
}

/// Which way the endpoint factors of the transported weight point.
#[derive(Clone, Copy, Debug, PartialEq, Eq)]
pub enum Orientation {
    /// `f' (1 - f)/(1 + f)`: the substitution `t = f(x)` maps this onto the
    /// base weight, so composed systems are orthogonal under it.
    AsOrthogonality,
    /// `f' (1 + f)/(1 - f)`: the swapped form; diagonal integrals diverge.
    AsPrinted,
}

impl std::fmt::Display for Orientation {
    fn fmt(&self, f: &mut std::fmt::Formatter<'_>) -> std::fmt::Result {
        f.write_str(match self {
            Orientation::AsOrthogonality => "as-orthogonality",
            Orientation::AsPrinted => "as-printed",
        })
    }
}

impl std::str::FromStr for Orientation {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s {
            "as-orthogonality" => Ok(Orientation::AsOrthogonality),
            "as-printed" => Ok(Orientation::AsPrinted),
            other => Err(format!(
                "unknown orientation `{other}` (expected `as-orthogonality` or `as-printed`)"
            )),
        }
    }
}

/// The transported weight `f' (1 -+ f)/(1 +- f)` assembled as one reduced
/// ratio of exact polynomials. Evaluable at every interior point of the
/// domain; the endpoints themselves are zeros or poles by design.
#[derive(Clone, Debug)]
pub struct PushforwardWeight {
    map: RationalMap,
    orientation: Orientation,
    numerator: Polynomial,
    denominator: Polynomial,
}

impl PushforwardWeight {
    pub fn map(&self) -> &RationalMap {
        &self.map
    }

    pub fn orientation(&self) -> Orientation {
        self.orientation
    }

    pub fn numerator(&self) -> &Polynomial {
        &self.numerator
    }

    pub fn denominator(&self) -> &Polynomial {
        &self.denominator
    }
}

/// Assembles `f' (1 - f)/(1 + f)` (or the swapped orientation) by the
/// quotient rule: with `f = N/D` this is `W (D - N) / (D^2 (D + N))` for
/// `W = N'D - ND'`, reduced to lowest terms.
pub fn pushforward_weight(f: &RationalMap, orientation: Orientation) -> PushforwardWeight {
    let w = f.derivative_numerator();
    let d_minus_n = &f.denominator - &f.numerator;
    let d_plus_n = &f.denominator + &f.numerator;
    let d_squared = &f.denominator * &f.denominator;
    let (num_factor, den_factor) = match orientation {
        Orientation::AsOrthogonality => (d_minus_n, d_plus_n),
        Orientation::AsPrinted => (d_plus_n, d_minus_n),
    };
    let numerator = &w * &num_factor;
    let denominator = &d_squared * &den_factor;
    let gcd = numerator.gcd(&denominator);
    PushforwardWeight {
        map: f.clone(),
        orientation,
        numerator: numerator.divide_exact(&gcd).expect("gcd divides"),
        denominator: denominator.divide_exact(&gcd).expect("gcd divides"),
    }
}

/// Clears denominators from `p(f(x))`: returns `q` with
/// `p(f(x)) = q(x) / den(x)^deg p`.
pub fn compose_with_map(p: &Polynomial, f: &RationalMap) -> (Polynomial, usize) {
    let Some(degree) = p.degree() else {
        return (Polynomial::zero(), 0);
    };
    let mut cleared = Polynomial::zero();
    for (i, c) in p.coeffs().iter().enumerate() {
        let term = &f.numerator.pow(i) * &f.denominator.pow(degree - i);
        cleared = &cleared + &term.scale(c);
    }
    (cleared, degree)
}

#[derive(Debug, Error)]
pub enum GramError {
    #[error(transparent)]
    NonFinite(#[from] NonFiniteEvaluation),
    #[error("quadrature did not converge: error estimate {estimate} on entry ({n}, {m})")]
    NotConverged { estimate: f64, n: usize, m: usize },
}

/// An entry is rejected when the companion-rule disagreement exceeds this
/// fraction of its magnitude. Loose on purpose: the swapped orientation
/// truncates a logarithmic divergence, shifting entries tens large by about
/// ln 2 per level, and those values are meant to be reported, not rejected.
const GRAM_RELATIVE_TOLERANCE: f64 = 0.05;

/// Numeric Gram matrix of `{P_n(f(x))}` for `n = 1..=max_n` under the
/// transported weight. Under [`Orientation::AsOrthogonality`] the result
/// approximates the exact base Gram matrix of the family.
pub fn composed_gram(
    f: &RationalMap,
    orientation: Orientation,
    max_n: usize,
    rule: &QuadratureRule,
) -> Result<Vec<Vec<f64>>, GramError> {
    assert!(max_n >= 1, "composed_gram: max_n must be >= 1");
    let p = rule.precision();
    let rm = astro_float::RoundingMode::ToEven;
    let weight = pushforward_weight(f, orientation);

    let members: Vec<FloatPoly> = (1..=max_n).map(|n| FloatPoly::new(&polar(n), p)).collect();
    let map_num = FloatPoly::new(&f.numerator, p);
    let map_den = FloatPoly::new(&f.denominator, p);
    let weight_num = FloatPoly::new(&weight.numerator, p);
    let weight_den = FloatPoly::new(&weight.denominator, p);

    let mut matrix = vec![vec![0.0; max_n]; max_n];
    for i in 0..max_n {
        for j in 0..=i {
            let integrand = |x: &BigFloat| {
                let fx = map_num.evaluate(x).div(&map_den.evaluate(x), p, rm);
                let phi = weight_num.evaluate(x).div(&weight_den.evaluate(x), p, rm);
                members[i]
                    .evaluate(&fx)
                    .mul(&members[j].evaluate(&fx), p, rm)
                    .mul(&phi, p, rm)
            };
            let (value, estimate) = integrate(integrand, rule)?;
            if estimate > GRAM_RELATIVE_TOLERANCE * value.abs().max(1.0) {
                return Err(GramError::NotConverged {
                    estimate,
                    n: i + 1,
                    m: j + 1,
                });
            }
            matrix[i][j] = value;
            matrix[j][i] = value;
        }
    }
    Ok(matrix)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::FamilyKind;
    use crate::numeric::rational;
    use crate::quadrature::tanh_sinh_rule;
    use crate::weighted_ip::norm_squared;

    #[test]
    fn maps_reduce_to_lowest_terms() {
        let x = Polynomial::x();
        let shared = Polynomial::from_integers(&[-1, 0, 1]);
        let map = RationalMap::new(&shared * &x, shared.clone(), Interval::unit_symmetric());
        assert_eq!(*map.numerator(), x);
        assert_eq!(*map.denominator(), Polynomial::one());
    }

    #[test]
    #[should_panic(expected = "denominator vanishes")]
    fn poles_inside_the_domain_are_rejected() {
        RationalMap::new(
            Polynomial::one(),
            Polynomial::x(),
            Interval::unit_symmetric(),
        );
    }

    #[test]
    fn mobius_derivative_is_the_quotient_rule() {
        let map = RationalMap::mobius(3, 1, 1, 3);
        let derivative = map.derivative();
        assert_eq!(*derivative.numerator(), Polynomial::from_integers(&[8]));
        assert_eq!(
            *derivative.denominator(),
            Polynomial::from_integers(&[9, 6, 1])
        );
    }

    #[test]
    fn cubic_map_is_certified_with_one_stationary_point() {
        let map = RationalMap::cubic();
        let cert = certify_monotone_bijection(&map, &Interval::unit_symmetric()).unwrap();
        assert_eq!(cert.stationary_points.len(), 1);
        let iv = &cert.stationary_points[0];
        assert!(iv.lo() < &rational(0, 1) && iv.hi() >= &rational(0, 1));
    }

    #[test]
    fn identity_and_mobius_are_certified_cleanly() {
        for map in [RationalMap::identity(), RationalMap::mobius(3, 1, 1, 3)] {
            let cert = certify_monotone_bijection(&map, &Interval::unit_symmetric()).unwrap();
            assert!(cert.stationary_points.is_empty());
        }
    }

    #[test]
    fn square_map_fails_the_endpoint_check() {
        let map = RationalMap::new(
            Polynomial::monomial(rational(1, 1), 2),
            Polynomial::one(),
            Interval::unit_symmetric(),
        );
        let err = certify_monotone_bijection(&map, &Interval::unit_symmetric()).unwrap_err();
        assert!(matches!(err, CertifyError::EndpointMismatch { .. }));
    }

    #[test]
    fn interior_sign_change_is_witnessed() {
        // 2x^3 - x fixes the endpoints but dips in between.
        let map = RationalMap::new(
            Polynomial::from_integers(&[0, -1, 0, 2]),
            Polynomial::one(),
            Interval::unit_symmetric(),
        );
        let err = certify_monotone_bijection(&map, &Interval::unit_symmetric()).unwrap_err();
        let CertifyError::NotMonotone { lo, hi } = err else {
            panic!("expected a monotonicity failure");
        };
        // The witness interval brackets a root of the derivative 6x^2 - 1.
        let g = |v: &BigRational| rational(6, 1) * v * v - rational(1, 1);
        assert!(g(&lo) * g(&hi) <= rational(0, 1));
    }

    #[test]
    fn identity_pushforward_is_the_base_weight() {
        let weight = pushforward_weight(&RationalMap::identity(), Orientation::AsOrthogonality);
        assert_eq!(*weight.numerator(), Polynomial::from_integers(&[1, -1]));
        assert_eq!(*weight.denominator(), Polynomial::from_integers(&[1, 1]));
    }

    #[test]
    fn mobius_printed_weight_matches_the_closed_form() {
        // For f = (ax+b)/(cx+d) the swapped orientation reads
        // (ad-bc)/(cx+d)^2 * ((a+c)x+b+d)/((c-a)x-b+d).
        let (a, b, c, d) = (3i64, 1, 1, 3);
        let weight = pushforward_weight(&RationalMap::mobius(a, b, c, d), Orientation::AsPrinted);
        let closed_num = &Polynomial::from_integers(&[a * d - b * c])
            * &Polynomial::from_integers(&[b + d, a + c]);
        let closed_den = &Polynomial::from_integers(&[d, c]).pow(2)
            * &Polynomial::from_integers(&[d - b, c - a]);
        assert_eq!(
            &(weight.numerator() * &closed_den),
            &(&closed_num * weight.denominator())
        );
    }

    #[test]
    fn cubic_orthogonality_weight_matches_the_substitution_form() {
        let map = RationalMap::cubic();
        let weight = pushforward_weight(&map, Orientation::AsOrthogonality);
        // f' (D - N)/(D + N) with the symbolic derivative f' = W/D^2.
        let w = &(&map.numerator().differentiate() * map.denominator())
            - &(map.numerator() * &map.denominator().differentiate());
        // W = 4x^2 (x^2 + 1)(3 - x^2).
        let expected_w = &(&Polynomial::monomial(rational(4, 1), 2)
            * &Polynomial::from_integers(&[1, 0, 1]))
            * &Polynomial::from_integers(&[3, 0, -1]);
        assert_eq!(w, expected_w);
        let closed_num = &w * &(map.denominator() - map.numerator());
        let closed_den =
            &(map.denominator() * map.denominator()) * &(map.denominator() + map.numerator());
        assert_eq!(
            &(weight.numerator() * &closed_den),
            &(&closed_num * weight.denominator())
        );
    }

    #[test]
    fn mobius_compositions_have_bounded_degree() {
        for map in [
            RationalMap::mobius(3, 1, 1, 3),
            RationalMap::mobius(2, 1, 1, 2),
        ] {
            for n in 0..=8 {
                let (cleared, power) = compose_with_map(&polar(n), &map);
                assert_eq!(power, n);
                assert!(cleared.degree().is_none_or(|d| d <= n), "n = {n}");
                // Spot-check the cleared form against direct evaluation.
                let x = rational(1, 3);
                let denom = map.denominator().evaluate(&x);
                let direct = polar(n).evaluate(&map.evaluate(&x));
                let mut den_power = rational(1, 1);
                for _ in 0..power {
                    den_power *= &denom;
                }
                assert_eq!(cleared.evaluate(&x) / den_power, direct);
            }
        }
    }

    #[test]
    fn identity_gram_matches_the_exact_one() {
        let rule = tanh_sinh_rule(6);
        let gram = composed_gram(
            &RationalMap::identity(),
            Orientation::AsOrthogonality,
            5,
            &rule,
        )
        .unwrap();
        for (i, row) in gram.iter().enumerate() {
            for (j, &entry) in row.iter().enumerate() {
                let exact = if i == j {
                    let norm = norm_squared(FamilyKind::Polar, i + 1).unwrap();
                    num::traits::ToPrimitive::to_f64(&norm).unwrap()
                } else {
                    0.0
                };
                assert!(
                    (entry - exact).abs() <= 1e-10,
                    "entry ({i}, {j}) = {entry}, expected {exact}"
                );
            }
        }
    }

    #[test]
    fn cubic_and_mobius_grams_are_diagonal() {
        let rule = tanh_sinh_rule(6);
        for map in [RationalMap::cubic(), RationalMap::mobius(3, 1, 1, 3)] {
            certify_monotone_bijection(&map, &Interval::unit_symmetric()).unwrap();
            let gram = composed_gram(&map, Orientation::AsOrthogonality, 4, &rule).unwrap();
            for (i, row) in gram.iter().enumerate() {
                for (j, &entry) in row.iter().enumerate() {
                    let exact = if i == j {
                        let norm = norm_squared(FamilyKind::Polar, i + 1).unwrap();
                        num::traits::ToPrimitive::to_f64(&norm).unwrap()
                    } else {
                        0.0
                    };
                    assert!(
                        (entry - exact).abs() <= 1e-10,
                        "entry ({i}, {j}) = {entry}, expected {exact}"
                    );
                }
            }
        }
    }

    #[test]
    fn mobius_diagonal_matches_the_second_norm() {
        let rule = tanh_sinh_rule(6);
        let gram = composed_gram(
            &RationalMap::mobius(3, 1, 1, 3),
            Orientation::AsOrthogonality,
            2,
            &rule,
        )
        .unwrap();
        assert!((gram[1][1] - 0.6).abs() <= 1e-10);
    }

    #[test]
    fn printed_orientation_is_not_the_orthogonality_weight() {
        // The swapped weight turns the diagonal into a truncated divergent
        // integral; the value lands far from the exact norm.
        let rule = tanh_sinh_rule(6);
        let gram = composed_gram(&RationalMap::cubic(), Orientation::AsPrinted, 1, &rule).unwrap();
        assert!(
            (gram[0][0] - 4.0 / 3.0).abs() > 1.0,
            "entry = {}",
            gram[0][0]
        );
    }

    #[test]
    fn underresolved_rules_are_reported() {
        let rule = crate::quadrature::gauss_legendre_rule(2);
        let err = composed_gram(
            &RationalMap::cubic(),
            Orientation::AsOrthogonality,
            3,
            &rule,
        )
        .unwrap_err();
        assert!(matches!(err, GramError::NotConverged { .. }));
    }
}
