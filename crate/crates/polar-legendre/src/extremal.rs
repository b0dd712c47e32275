//! Constrained minimization over polar spans: minimize the weighted energy
//! `integral of f^2 (1-x)/(1+x)` over `f` in `span{P_k : k in K}` subject to
//! `f(1) = 1`.
//!
//! Two independent solvers are provided. [`solve_extremal`] uses the closed
//! form that orthogonality yields (`a_k` proportional to `P_k(1)/||P_k||^2`).
//! [`oracle_minimize`] sets up the full stationarity system with a Lagrange
//! multiplier, computes the Gram matrix of the actual polynomials without
//! assuming orthogonality, and solves it by exact rational elimination. The
//! two must agree coefficient for coefficient; their agreement is part of
//! the acceptance gate.
//!
//! [`stated_extremal`] returns the claimed closed-form solution circulating
//! alongside this theory (minimum `2 / sum of j(j-1)(2j-1)` and matching
//! coefficients) for the claims auditor to compare against ground truth.

use std::collections::BTreeMap;

use num::rational::BigRational;
use num::traits::{One, Zero};
use thiserror::Error;

use crate::families::{polar, FamilyKind};
use crate::weighted_ip::{inner_product, norm_squared, WeightKind};
use crate::Polynomial;

/// Exact solution of the constrained minimization over one index set.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ExtremalSolution {
    pub indices: Vec<usize>,
    /// `a_k` for each `k` in `indices`.
    pub coefficients: BTreeMap<usize, BigRational>,
    /// The minimum value of the weighted energy.
    pub minimum: BigRational,
    /// `sum of a_k P_k`; evaluates to 1 at `x = 1`.
    pub minimizer: Polynomial,
}

/// The stationarity system had no unique solution. Cannot occur for
/// distinct finite-norm indices (the system is diagonal plus a border).
#[derive(Debug, Error, Clone, Copy, PartialEq, Eq)]
#[error("stationarity system is singular")]
pub struct SingularSystem;

fn normalized_indices(indices: &[usize]) -> Vec<usize> {
    let mut indices = indices.to_vec();
    indices.sort_unstable();
    indices.dedup();
    assert!(
        !indices.is_empty(),
        "extremal: the index set must be nonempty"
    );
    assert!(
        indices[0] >= 1,
        "extremal: index 0 has a divergent norm and cannot enter the span"
    );
    indices
}

fn assemble(indices: Vec<usize>, coefficients: Vec<BigRational>) -> ExtremalSolution {
    let mut minimizer = Polynomial::zero();
    let mut map = BTreeMap::new();
    for (&k, a) in indices.iter().zip(&coefficients) {
        minimizer = &minimizer + &polar(k).scale(a);
        map.insert(k, a.clone());
    }
    let minimum = inner_product(&minimizer, &minimizer, WeightKind::PWeight)
        .expect("minimizer vanishes at -1, so its energy reduces");
    ExtremalSolution {
        indices,
        coefficients: map,
        minimum,
        minimizer,
    }
}

/// Closed-form solution: `a_k = (P_k(1)/||P_k||^2) / S` and minimum `1/S`
/// with `S = sum over j in K of P_j(1)^2 / ||P_j||^2`.
pub fn solve_extremal(indices: &[usize]) -> ExtremalSolution {
    let indices = normalized_indices(indices);
    let one = BigRational::one();
    let mut s = BigRational::zero();
    let mut ratios = Vec::with_capacity(indices.len());
    for &k in &indices {
        let norm = norm_squared(FamilyKind::Polar, k).expect("indices >= 1 have finite norms");
        let value_at_one = polar(k).evaluate(&one);
        s += &value_at_one * &value_at_one / &norm;
        ratios.push(value_at_one / norm);
    }
    let coefficients: Vec<BigRational> = ratios.into_iter().map(|r| r / &s).collect();
    let solution = assemble(indices, coefficients);
    debug_assert_eq!(solution.minimum, s.recip());
    solution
}

/// Solves the exact linear system `a x = b` by Gaussian elimination with
/// nonzero pivoting; `None` when singular.
// Elimination reads the pivot row while mutating another, so indexed loops
// stay; iterators would force split_at_mut noise.
#[allow(clippy::needless_range_loop)]
fn solve_linear(mut a: Vec<Vec<BigRational>>, mut b: Vec<BigRational>) -> Option<Vec<BigRational>> {
    let n = b.len();
    for col in 0..n {
        let pivot = (col..n).find(|&r| !a[r][col].is_zero())?;
        a.swap(col, pivot);
        b.swap(col, pivot);
        for row in col + 1..n {
            if a[row][col].is_zero() {
                continue;
            }
            let factor = &a[row][col] / &a[col][col];
            for k in col..n {
                let sub = &factor * &a[col][k];
                a[row][k] -= sub;
            }
            let sub = &factor * &b[col];
            b[row] -= sub;
        }
    }
    let mut x = vec![BigRational::zero(); n];
    for row in (0..n).rev() {
        let mut acc = b[row].clone();
        for col in row + 1..n {
            acc -= &a[row][col] * &x[col];
        }
        x[row] = acc / &a[row][row];
    }
    Some(x)
}

/// Independent oracle: builds the stationarity system of the Lagrangian
/// (gradient rows `2 G a + beta v = 0`, border row `v . a = 1`) with the
/// full Gram matrix of the actual polynomials and solves it exactly.
pub fn oracle_minimize(indices: &[usize]) -> Result<ExtremalSolution, SingularSystem> {
    let indices = normalized_indices(indices);
    let m = indices.len();
    let one = BigRational::one();
    let members: Vec<Polynomial> = indices.iter().map(|&k| polar(k)).collect();
    let values_at_one: Vec<BigRational> = members.iter().map(|p| p.evaluate(&one)).collect();

    let mut system = vec![vec![BigRational::zero(); m + 1]; m + 1];
    let mut rhs = vec![BigRational::zero(); m + 1];
    let two = BigRational::from_integer(2.into());
    for i in 0..m {
        for j in 0..m {
            let gram = inner_product(&members[i], &members[j], WeightKind::PWeight)
                .expect("indices >= 1 have reducible products");
            system[i][j] = &two * &gram;
        }
        system[i][m] = values_at_one[i].clone();
        system[m][i] = values_at_one[i].clone();
    }
    rhs[m] = BigRational::one();

    let solution = solve_linear(system, rhs).ok_or(SingularSystem)?;
    Ok(assemble(indices, solution[..m].to_vec()))
}

/// The claimed closed-form solution for the contiguous span `{2..n}`:
/// minimum `2 / sum over j of j(j-1)(2j-1)` and minimizer
/// `M sum over k of k(k-1)(2k-1)/(2(k+1)) P_k`, both returned verbatim for
/// auditing against [`solve_extremal`].
pub fn stated_extremal(n: usize) -> (Polynomial, BigRational) {
    assert!(n >= 2, "stated_extremal: requires n >= 2, got n = {n}");
    let mut denom = BigRational::zero();
    for j in 2..=n {
        denom += BigRational::from_integer((j * (j - 1) * (2 * j - 1)).into());
    }
    let minimum = BigRational::from_integer(2.into()) / denom;
    let mut minimizer = Polynomial::zero();
    for k in 2..=n {
        let coeff =
            &minimum * BigRational::new((k * (k - 1) * (2 * k - 1)).into(), (2 * (k + 1)).into());
        minimizer = &minimizer + &polar(k).scale(&coeff);
    }
    (minimizer, minimum)
}
