//! Exact inner products under the singular weights.
//!
//! Each weight has a singular denominator at an endpoint of [-1, 1], yet
//! every inner product the theory needs is a proper integral: the product of
//! the two polynomials (times the weight's polynomial numerator) is exactly
//! divisible by the denominator. The reduction is therefore algebra, not
//! analysis: divide exactly, then integrate the resulting polynomial. When
//! the division leaves a remainder the integral may genuinely diverge
//! (e.g. the squared norm of `P_0`), and that case is an explicit error,
//! never a silent zero.

use std::fmt;
use std::str::FromStr;

use num::rational::BigRational;
use thiserror::Error;

use crate::families::{self, FamilyKind};
use crate::{Interval, Polynomial};

/// The singular weights on [-1, 1].
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum WeightKind {
    /// `1/(1 - x^2)`: the weight under which the `Q_n` are orthogonal.
    QWeight,
    /// `(1 - x)/(1 + x)`: the weight under which the `P_n` (n >= 1) are
    /// orthogonal.
    PWeight,
    /// `x(1 - x)/(1 + x)`: the weight under which the kernels at zero are
    /// orthogonal.
    KernelZeroWeight,
}

impl WeightKind {
    /// The weight as a formula in x.
    pub fn formula(self) -> &'static str {
        match self {
            WeightKind::QWeight => "1/(1-x^2)",
            WeightKind::PWeight => "(1-x)/(1+x)",
            WeightKind::KernelZeroWeight => "x(1-x)/(1+x)",
        }
    }

    /// Polynomial numerator and singular denominator with `weight = numerator
    /// / denominator`; the denominator vanishes only at endpoints.
    fn factors(self) -> (Polynomial, Polynomial) {
        match self {
            WeightKind::QWeight => (Polynomial::one(), Polynomial::from_integers(&[1, 0, -1])),
            WeightKind::PWeight => (
                Polynomial::from_integers(&[1, -1]),
                Polynomial::from_integers(&[1, 1]),
            ),
            WeightKind::KernelZeroWeight => (
                Polynomial::from_integers(&[0, 1, -1]),
                Polynomial::from_integers(&[1, 1]),
            ),
        }
    }
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            WeightKind::QWeight => "q",
            WeightKind::PWeight => "p",
            WeightKind::KernelZeroWeight => "kernel-zero",
        };
        write!(f, "{name}")
    }
}

impl FromStr for WeightKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "q" | "qweight" => Ok(WeightKind::QWeight),
            "p" | "pweight" => Ok(WeightKind::PWeight),
            "kernel-zero" | "kernelzero" => Ok(WeightKind::KernelZeroWeight),
            other => Err(format!(
                "unknown weight {other:?} (expected q, p, or kernel-zero)"
            )),
        }
    }
}

/// The integrand does not reduce to a polynomial, so the weighted integral
/// is not certified proper and may diverge.
#[derive(Debug, Error, Clone, PartialEq, Eq)]
#[error("integrand is not exactly divisible by the singular denominator of weight {weight}; the integral may diverge")]
pub struct NotReducible {
    pub weight: WeightKind,
}

/// Exact `integral over [-1, 1] of a * b * w`, computed by dividing out the
/// weight's singular denominator and integrating the quotient.
pub fn inner_product(
    a: &Polynomial,
    b: &Polynomial,
    w: WeightKind,
) -> Result<BigRational, NotReducible> {
    let (numerator, denominator) = w.factors();
    let product = &(a * b) * &numerator;
    let reduced = product
        .divide_exact(&denominator)
        .map_err(|_| NotReducible { weight: w })?;
    Ok(reduced.definite_integral(&Interval::unit_symmetric()))
}

/// Squared norm of the family member under the family's own weight
/// (Legendre: unit weight; Pipcir: `QWeight`; Polar: `PWeight`).
pub fn norm_squared(kind: FamilyKind, n: usize) -> Result<BigRational, NotReducible> {
    let p = families::family_polynomial(kind, n);
    match kind {
        FamilyKind::Legendre => Ok((&p * &p).definite_integral(&Interval::unit_symmetric())),
        FamilyKind::Pipcir => inner_product(&p, &p, WeightKind::QWeight),
        FamilyKind::Polar => inner_product(&p, &p, WeightKind::PWeight),
    }
}

/// The weight under which the family is orthogonal; `None` for the unit
/// weight.
pub fn natural_weight(kind: FamilyKind) -> Option<WeightKind> {
    match kind {
        FamilyKind::Legendre => None,
        FamilyKind::Pipcir => Some(WeightKind::QWeight),
        FamilyKind::Polar => Some(WeightKind::PWeight),
    }
}

/// One entry of a Gram matrix: either the exact inner product or a marker
/// that the entry's integrand does not reduce (possibly divergent integral).
#[derive(Clone, Debug, PartialEq, Eq)]
pub enum GramEntry {
    Value(BigRational),
    Divergent,
}

impl GramEntry {
    pub fn value(&self) -> Option<&BigRational> {
        match self {
            GramEntry::Value(v) => Some(v),
            GramEntry::Divergent => None,
        }
    }
}

impl fmt::Display for GramEntry {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            GramEntry::Value(v) => write!(f, "{v}"),
            GramEntry::Divergent => write!(f, "divergent"),
        }
    }
}

/// Symmetric matrix of exact inner products of the family members at
/// `indices` under `w`. Entries whose integrand does not reduce are marked
/// rather than failing the whole matrix.
pub fn gram_matrix(kind: FamilyKind, w: WeightKind, indices: &[usize]) -> Vec<Vec<GramEntry>> {
    let members: Vec<Polynomial> = indices
        .iter()
        .map(|&n| families::family_polynomial(kind, n))
        .collect();
    let mut matrix = vec![vec![GramEntry::Divergent; members.len()]; members.len()];
    for i in 0..members.len() {
        for j in i..members.len() {
            let entry = match inner_product(&members[i], &members[j], w) {
                Ok(v) => GramEntry::Value(v),
                Err(_) => GramEntry::Divergent,
            };
            matrix[i][j] = entry.clone();
            matrix[j][i] = entry;
        }
    }
    matrix
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::families::{legendre, pipcir, polar};
    use crate::numeric::rational;
    use num::traits::Zero;

    #[test]
    fn inner_product_examples() {
        assert_eq!(
            inner_product(&pipcir(2), &pipcir(4), WeightKind::QWeight).unwrap(),
            rational(0, 1)
        );
        assert_eq!(
            inner_product(&pipcir(3), &pipcir(3), WeightKind::QWeight).unwrap(),
            rational(1, 15)
        );
        let err = inner_product(&polar(0), &polar(0), WeightKind::PWeight).unwrap_err();
        assert_eq!(err.weight, WeightKind::PWeight);
    }

    #[test]
    fn norm_squared_examples() {
        assert_eq!(norm_squared(FamilyKind::Pipcir, 2).unwrap(), rational(1, 3));
        assert_eq!(norm_squared(FamilyKind::Polar, 1).unwrap(), rational(4, 3));
        assert_eq!(norm_squared(FamilyKind::Polar, 2).unwrap(), rational(3, 5));
        assert_eq!(
            norm_squared(FamilyKind::Legendre, 2).unwrap(),
            rational(2, 5)
        );
        assert!(norm_squared(FamilyKind::Polar, 0).is_err());
    }

    #[test]
    fn pipcir_norms_match_closed_form() {
        // ||Q_n||^2 = 2/(n(n-1)(2n-1)).
        for n in 2..=40 {
            let expected = rational(2, (n * (n - 1) * (2 * n - 1)) as i64);
            assert_eq!(
                norm_squared(FamilyKind::Pipcir, n).unwrap(),
                expected,
                "n = {n}"
            );
        }
    }

    #[test]
    fn polar_norms_match_derived_closed_form() {
        // ||P_n||^2 = 2(n+1)/(n(2n+1)), confirmed by the exact integrals.
        for n in 1..=40 {
            let expected = rational(2 * (n as i64 + 1), (n * (2 * n + 1)) as i64);
            assert_eq!(
                norm_squared(FamilyKind::Polar, n).unwrap(),
                expected,
                "n = {n}"
            );
        }
    }

    #[test]
    fn pipcir_orthogonal_within_the_endpoint_vanishing_space() {
        // The weighted span of the Q family is the space of polynomials
        // vanishing at both endpoints: Q_n is orthogonal to (1-x^2) x^k for
        // k <= n-3 (the reduction gives the plain integral of Q_n x^k). It
        // is NOT orthogonal to bare monomials of matching parity.
        let one_minus_x2 = Polynomial::from_integers(&[1, 0, -1]);
        for n in 2..=12_usize {
            let q = pipcir(n);
            for k in 0..n.saturating_sub(2) {
                let test_poly = &one_minus_x2 * &Polynomial::monomial(rational(1, 1), k);
                assert_eq!(
                    inner_product(&q, &test_poly, WeightKind::QWeight).unwrap(),
                    rational(0, 1),
                    "n = {n}, k = {k}"
                );
            }
            // Opposite parity pairs vanish for free.
            for k in (0..n).filter(|k| (k + n) % 2 == 1) {
                let monomial = Polynomial::monomial(rational(1, 1), k);
                assert!(
                    inner_product(&q, &monomial, WeightKind::QWeight)
                        .unwrap()
                        .is_zero(),
                    "n = {n}, k = {k}"
                );
            }
        }
        // Same-parity bare monomials of lower degree need not be orthogonal.
        assert_eq!(
            inner_product(&pipcir(2), &Polynomial::one(), WeightKind::QWeight).unwrap(),
            rational(-1, 1)
        );
    }

    #[test]
    fn families_are_orthogonal() {
        for n in 2..=15 {
            for m in 2..n {
                assert!(
                    inner_product(&pipcir(n), &pipcir(m), WeightKind::QWeight)
                        .unwrap()
                        .is_zero(),
                    "Q_{n} . Q_{m}"
                );
            }
        }
        for n in 1..=15 {
            for m in 1..n {
                assert!(
                    inner_product(&polar(n), &polar(m), WeightKind::PWeight)
                        .unwrap()
                        .is_zero(),
                    "P_{n} . P_{m}"
                );
            }
        }
    }

    #[test]
    fn polar_inner_products_factor_through_pipcir() {
        // <P_n, P_m> = (n+1)(m+1) <Q_{n+1}, Q_{m+1}>.
        for n in 1..=10 {
            for m in 1..=10 {
                let lhs = inner_product(&polar(n), &polar(m), WeightKind::PWeight).unwrap();
                let rhs = inner_product(&pipcir(n + 1), &pipcir(m + 1), WeightKind::QWeight)
                    .unwrap()
                    * rational(((n + 1) * (m + 1)) as i64, 1);
                assert_eq!(lhs, rhs, "n = {n}, m = {m}");
            }
        }
    }

    #[test]
    fn constant_is_not_orthogonal_to_the_polar_family() {
        // <P_0, P_m> is finite for m >= 1 (the singularity cancels) but not
        // zero, so the index 0 member does not join the orthogonal family.
        assert_eq!(
            inner_product(&polar(0), &polar(1), WeightKind::PWeight).unwrap(),
            rational(2, 1)
        );
        assert_eq!(
            inner_product(&polar(0), &polar(2), WeightKind::PWeight).unwrap(),
            rational(-1, 1)
        );
    }

    #[test]
    fn gram_matrix_pipcir_is_diagonal() {
        let indices: Vec<usize> = (2..=6).collect();
        let gram = gram_matrix(FamilyKind::Pipcir, WeightKind::QWeight, &indices);
        let expected_diagonal = [
            rational(1, 3),
            rational(1, 15),
            rational(1, 42),
            rational(1, 90),
            rational(1, 165),
        ];
        for (i, expected) in expected_diagonal.iter().enumerate() {
            assert_eq!(
                gram[i][i],
                GramEntry::Value(expected.clone()),
                "diagonal {i}"
            );
            for (j, entry) in gram[i].iter().enumerate() {
                if i != j {
                    assert_eq!(*entry, GramEntry::Value(rational(0, 1)), "({i},{j})");
                }
            }
        }
    }

    #[test]
    fn gram_matrix_polar_is_diagonal_and_flags_divergence() {
        let indices: Vec<usize> = (1..=5).collect();
        let gram = gram_matrix(FamilyKind::Polar, WeightKind::PWeight, &indices);
        for (i, row) in gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                if i == j {
                    assert!(entry.value().is_some_and(|v| v > &rational(0, 1)));
                } else {
                    assert_eq!(*entry, GramEntry::Value(rational(0, 1)));
                }
            }
        }

        let with_zero = gram_matrix(FamilyKind::Polar, WeightKind::PWeight, &[0, 1, 2]);
        assert_eq!(with_zero[0][0], GramEntry::Divergent);
        assert_eq!(with_zero[0][1], GramEntry::Value(rational(2, 1)));
        assert_eq!(with_zero[1][1], GramEntry::Value(rational(4, 3)));
    }

    #[test]
    fn gram_matrix_is_symmetric() {
        let gram = gram_matrix(FamilyKind::Polar, WeightKind::PWeight, &[1, 3, 4]);
        for (i, row) in gram.iter().enumerate() {
            for (j, entry) in row.iter().enumerate() {
                assert_eq!(*entry, gram[j][i]);
            }
        }
    }

    #[test]
    fn legendre_norms_under_unit_weight() {
        for n in 0..=20 {
            assert_eq!(
                norm_squared(FamilyKind::Legendre, n).unwrap(),
                rational(2, 2 * n as i64 + 1)
            );
            for m in 0..n {
                let product = &legendre(n) * &legendre(m);
                assert!(product
                    .definite_integral(&Interval::unit_symmetric())
                    .is_zero());
            }
        }
    }

    #[test]
    fn weight_names_round_trip() {
        for w in [
            WeightKind::QWeight,
            WeightKind::PWeight,
            WeightKind::KernelZeroWeight,
        ] {
            assert_eq!(w.to_string().parse::<WeightKind>().unwrap(), w);
        }
        assert!("uniform".parse::<WeightKind>().is_err());
    }
}
