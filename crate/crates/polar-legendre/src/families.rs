//! The three polynomial families and every construction route for them.
//!
//! * `L_n`: Legendre polynomials from the three-term recurrence
//!   `(n+1) L_{n+1} = (2n+1) x L_n - n L_{n-1}`, normalized by `L_n(1) = 1`.
//! * `Q_n` (n >= 2): antiderivatives of Legendre polynomials vanishing at 1,
//!   `Q_n(x) = integral of L_{n-1} from 1 to x`. They vanish at both
//!   endpoints, factor as `Q_n = (1 - x^2) q_{n-2}`, and their inflection
//!   points coincide with the interior roots: `Q_n'' = -n(n-1) q_{n-2}`.
//! * `P_n`: polar Legendre polynomials, defined by
//!   `(n+1) Q_{n+1} = (x - 1) P_n` with `P_0 = 1`. They satisfy
//!   `P_n(1) = n+1` and `P_n(-1) = 0` for n >= 1.
//!
//! One canonical constructor per family is ground truth; the alternate
//! routes (Rodrigues forms, explicit coefficient sums, the shifted binomial
//! expansion) are independent constructions that the tests and the claims
//! auditor compare against the canonical ones. Closed-form special values
//! are never trusted: [`special_values`] reads everything off the
//! constructed polynomials.

use std::fmt;
use std::str::FromStr;
use std::sync::RwLock;

use num::bigint::BigInt;
use num::rational::BigRational;
use num::traits::One;

use crate::numeric::{binomial, double_factorial, factorial};
use crate::Polynomial;

/// Which of the three families an index refers to.
#[derive(Clone, Copy, Debug, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub enum FamilyKind {
    Legendre,
    Pipcir,
    Polar,
}

impl FamilyKind {
    /// Smallest index for which the family member is defined.
    pub fn min_index(self) -> usize {
        match self {
            FamilyKind::Legendre | FamilyKind::Polar => 0,
            FamilyKind::Pipcir => 2,
        }
    }
}

impl fmt::Display for FamilyKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let name = match self {
            FamilyKind::Legendre => "legendre",
            FamilyKind::Pipcir => "pipcir",
            FamilyKind::Polar => "polar",
        };
        write!(f, "{name}")
    }
}

impl FromStr for FamilyKind {
    type Err = String;

    fn from_str(s: &str) -> Result<Self, Self::Err> {
        match s.to_ascii_lowercase().as_str() {
            "legendre" => Ok(FamilyKind::Legendre),
            "pipcir" => Ok(FamilyKind::Pipcir),
            "polar" => Ok(FamilyKind::Polar),
            other => Err(format!(
                "unknown family {other:?} (expected legendre, pipcir, or polar)"
            )),
        }
    }
}

/// Values of a family member and its derivatives at the distinguished
/// points. Cached views of the constructed polynomial, never independent
/// truths.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct SpecialValues {
    pub value_at_plus1: BigRational,
    pub value_at_minus1: BigRational,
    pub value_at_0: BigRational,
    pub deriv_at_plus1: BigRational,
    pub deriv_at_0: BigRational,
    pub second_deriv_at_plus1: BigRational,
}

// Construction caches. Single writer extends a table, many readers clone
// entries; the zero polynomial marks an unfilled slot (no family member is
// zero).
static LEGENDRE: RwLock<Vec<Polynomial>> = RwLock::new(Vec::new());
static PIPCIR: RwLock<Vec<Polynomial>> = RwLock::new(Vec::new());
static POLAR: RwLock<Vec<Polynomial>> = RwLock::new(Vec::new());

fn cache_lookup(table: &RwLock<Vec<Polynomial>>, n: usize) -> Option<Polynomial> {
    let guard = table.read().expect("family cache poisoned");
    guard.get(n).filter(|p| !p.is_zero()).cloned()
}

fn cache_store(table: &RwLock<Vec<Polynomial>>, n: usize, value: &Polynomial) {
    let mut guard = table.write().expect("family cache poisoned");
    if guard.len() <= n {
        guard.resize(n + 1, Polynomial::zero());
    }
    guard[n] = value.clone();
}

fn x_plus_1() -> Polynomial {
    Polynomial::from_integers(&[1, 1])
}

fn x_minus_1() -> Polynomial {
    Polynomial::from_integers(&[-1, 1])
}

fn x2_minus_1() -> Polynomial {
    Polynomial::from_integers(&[-1, 0, 1])
}

fn one_minus_x2() -> Polynomial {
    Polynomial::from_integers(&[1, 0, -1])
}

fn ratio(numer: BigInt, denom: BigInt) -> BigRational {
    BigRational::new(numer, denom)
}

fn int(n: usize) -> BigInt {
    BigInt::from(n)
}

/// `L_n` by the three-term recurrence, `L_0 = 1`, `L_1 = x`.
pub fn legendre(n: usize) -> Polynomial {
    if let Some(p) = cache_lookup(&LEGENDRE, n) {
        return p;
    }
    let mut table = LEGENDRE.write().expect("family cache poisoned");
    if table.is_empty() {
        table.push(Polynomial::one());
        table.push(Polynomial::x());
    }
    while table.len() <= n {
        let k = table.len() - 1;
        let lead = (&Polynomial::x() * &table[k]).scale(&ratio(int(2 * k + 1), int(k + 1)));
        let trail = table[k - 1].scale(&ratio(int(k), int(k + 1)));
        table.push(&lead - &trail);
    }
    table[n].clone()
}

/// `Q_n`, the antiderivative of `L_{n-1}` vanishing at 1. Vanishes at both
/// endpoints for n >= 2.
pub fn pipcir(n: usize) -> Polynomial {
    assert!(n >= 2, "pipcir: Q_n is defined for n >= 2, got n = {n}");
    if let Some(p) = cache_lookup(&PIPCIR, n) {
        return p;
    }
    let q = legendre(n - 1).antiderivative_vanishing_at(&BigRational::one());
    cache_store(&PIPCIR, n, &q);
    q
}

/// `P_n` by exact division: `(n+1) Q_{n+1} = (x - 1) P_n`, with `P_0 = 1`.
pub fn polar(n: usize) -> Polynomial {
    if n == 0 {
        return Polynomial::one();
    }
    if let Some(p) = cache_lookup(&POLAR, n) {
        return p;
    }
    let numerator = pipcir(n + 1).scale(&BigRational::from(int(n + 1)));
    let p = numerator
        .divide_exact(&x_minus_1())
        .expect("Q_{n+1}(1) = 0, so (x - 1) divides (n+1) Q_{n+1}");
    cache_store(&POLAR, n, &p);
    p
}

/// `Q_n` as an explicit coefficient sum:
///
/// ```text
/// Q_n(x) = sum over 0 <= 2k <= n of (-1)^k (2n-2k-3)!! / ((2k)!! (n-2k)!) x^(n-2k)
/// ```
///
/// The summation range and the single factorial in the denominator are the
/// reading that reproduces the constructed `Q_n` exactly; the claims auditor
/// separately evaluates the double-factorial variant.
pub fn pipcir_explicit(n: usize) -> Polynomial {
    assert!(
        n >= 2,
        "pipcir_explicit: Q_n is defined for n >= 2, got n = {n}"
    );
    let mut sum = Polynomial::zero();
    for k in 0..=n / 2 {
        let mut numer = double_factorial(2 * (n as i64) - 2 * (k as i64) - 3);
        if k % 2 == 1 {
            numer = -numer;
        }
        let denom = double_factorial(2 * k as i64) * factorial((n - 2 * k) as u64);
        sum = &sum + &Polynomial::monomial(ratio(numer, denom), n - 2 * k);
    }
    sum
}

/// `Q_n` by the Rodrigues-type formula
/// `(x^2 - 1) / (2^(n-1) n! (n-1)) * [(x^2 - 1)^(n-1)]^((n))`.
pub fn pipcir_rodrigues(n: usize) -> Polynomial {
    assert!(
        n >= 2,
        "pipcir_rodrigues: Q_n is defined for n >= 2, got n = {n}"
    );
    let mut d = x2_minus_1().pow(n - 1);
    for _ in 0..n {
        d = d.differentiate();
    }
    let denom = num::pow(int(2), n - 1) * factorial(n as u64) * int(n - 1);
    (&x2_minus_1() * &d).scale(&ratio(BigInt::one(), denom))
}

/// `P_n` by the Rodrigues-type formula
/// `(x + 1) / (2^n n! n) * [(x^2 - 1)^n]^((n+1))`.
pub fn polar_rodrigues(n: usize) -> Polynomial {
    assert!(n >= 1, "polar_rodrigues: requires n >= 1, got n = {n}");
    let mut d = x2_minus_1().pow(n);
    for _ in 0..n + 1 {
        d = d.differentiate();
    }
    let denom = num::pow(int(2), n) * factorial(n as u64) * int(n);
    (&x_plus_1() * &d).scale(&ratio(BigInt::one(), denom))
}

/// `L_n` as the binomial-square expansion
/// `2^(-n) sum over k of C(n,k)^2 (x-1)^(n-k) (x+1)^k`.
pub fn shifted_binomial_legendre(n: usize) -> Polynomial {
    let xm1 = x_minus_1();
    let xp1 = x_plus_1();
    let mut sum = Polynomial::zero();
    for k in 0..=n {
        let c = binomial(n as u64, k as i64);
        let term = (&xm1.pow(n - k) * &xp1.pow(k)).scale(&BigRational::from(&c * &c));
        sum = &sum + &term;
    }
    sum.scale(&ratio(BigInt::one(), num::pow(int(2), n)))
}

/// The interior cofactor `q_{n-2}` in `Q_n = (1 - x^2) q_{n-2}`, as an exact
/// quotient. This orientation of the quadratic factor is the one under which
/// `Q_n'' = -n(n-1) q_{n-2}` holds exactly.
pub fn interior_cofactor(n: usize) -> Polynomial {
    pipcir(n)
        .divide_exact(&one_minus_x2())
        .expect("Q_n vanishes at both endpoints, so (1 - x^2) divides it")
}

/// The family member for `kind` at index `n` (canonical route).
pub fn family_polynomial(kind: FamilyKind, n: usize) -> Polynomial {
    assert!(
        n >= kind.min_index(),
        "family_polynomial: {kind} requires n >= {}, got n = {n}",
        kind.min_index()
    );
    match kind {
        FamilyKind::Legendre => legendre(n),
        FamilyKind::Pipcir => pipcir(n),
        FamilyKind::Polar => polar(n),
    }
}

/// Values and derivative values at 1, -1, and 0, all read off the
/// constructed polynomial.
pub fn special_values(kind: FamilyKind, n: usize) -> SpecialValues {
    let p = family_polynomial(kind, n);
    let d = p.differentiate();
    let dd = d.differentiate();
    let one = BigRational::one();
    let minus_one = -BigRational::one();
    let zero = BigRational::from(BigInt::ZERO);
    SpecialValues {
        value_at_plus1: p.evaluate(&one),
        value_at_minus1: p.evaluate(&minus_one),
        value_at_0: p.evaluate(&zero),
        deriv_at_plus1: d.evaluate(&one),
        deriv_at_0: d.evaluate(&zero),
        second_deriv_at_plus1: dd.evaluate(&one),
    }
}

/// The left-hand side of the family's differential equation, assembled
/// exactly. Zero polynomial for every valid member.
///
/// * Legendre: `(1 - x^2) L'' - 2x L' + n(n+1) L`
/// * Pipcir: `(1 - x^2) Q'' + n(n-1) Q`
/// * Polar: `(x^2 - 1) P'' + 2(x + 1) P' - n(n+1) P`
pub fn ode_residual(kind: FamilyKind, n: usize) -> Polynomial {
    let p = family_polynomial(kind, n);
    let d = p.differentiate();
    let dd = d.differentiate();
    match kind {
        FamilyKind::Legendre => {
            let first = &one_minus_x2() * &dd;
            let second = (&Polynomial::x() * &d).scale(&BigRational::from(int(2)));
            let third = p.scale(&BigRational::from(int(n * (n + 1))));
            &(&first - &second) + &third
        }
        FamilyKind::Pipcir => {
            let first = &one_minus_x2() * &dd;
            let second = p.scale(&BigRational::from(int(n * (n - 1))));
            &first + &second
        }
        FamilyKind::Polar => {
            let first = &x2_minus_1() * &dd;
            let second = (&x_plus_1() * &d).scale(&BigRational::from(int(2)));
            let third = p.scale(&BigRational::from(int(n * (n + 1))));
            &(&first + &second) - &third
        }
    }
}

/// Residuals of the differentiated and integrated recurrence links between
/// consecutive `Q` members:
///
/// * `Q'_n - (Q''_{n+1} - Q''_{n-1}) / (2n - 1)`
/// * `F - (Q_{n+1} - Q_{n-1}) / (2n - 1)` where `F' = Q_n` and `F(1) = 0`
///   (the right-hand side also vanishes at 1).
///
/// Both are the zero polynomial for every n >= 3.
pub fn recurrence_residual_pipcir(n: usize) -> (Polynomial, Polynomial) {
    assert!(
        n >= 3,
        "recurrence_residual_pipcir: requires n >= 3, got n = {n}"
    );
    let scale = ratio(BigInt::one(), int(2 * n - 1));
    let q_prev = pipcir(n - 1);
    let q_mid = pipcir(n);
    let q_next = pipcir(n + 1);

    let lhs1 = q_mid.differentiate();
    let rhs1 = (&q_next.differentiate().differentiate() - &q_prev.differentiate().differentiate())
        .scale(&scale);
    let differentiated = &lhs1 - &rhs1;

    let lhs2 = q_mid.antiderivative_vanishing_at(&BigRational::one());
    let rhs2 = (&q_next - &q_prev).scale(&scale);
    let integrated = &lhs2 - &rhs2;

    (differentiated, integrated)
}
