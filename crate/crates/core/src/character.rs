//! Central characters `chi(c_{2m+1})` as polynomials in `lambda_1..lambda_N`.
//!
//! Three independent routes:
//!
//! * **recurrence** - `chi(C^(2m+1)_ii) = sum_j (A^m)_ij lambda_j` with the
//!   upper-triangular matrix `A`, summed over `i` and doubled;
//! * **series** - the coefficients of
//!   `(1 - prod_i (1 - z l_i(l_i+1)) / (1 - z l_i(l_i-1))) / z`;
//! * **closed numeric** - the residue sum
//!   `2 sum_i l_i^{m+1} (l_i-1)^m prod_{j!=i} (a_i - b_j) / (a_i - a_j)` with
//!   `a_k = l_k(l_k-1)`, `b_k = l_k(l_k+1)`, evaluated at a rational point.
//!
//! The series route is the canonical symbolic answer; the other two witness it.

use std::fmt;

use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;

use crate::error::CharacterError;
use crate::poly::MultiPoly;
use crate::rational::Rational;
use crate::series::TruncatedSeries;

#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum Engine {
    Recurrence,
    Series,
    ClosedNumeric,
}

impl Engine {
    pub fn name(&self) -> &'static str {
        match self {
            Engine::Recurrence => "recurrence",
            Engine::Series => "series",
            Engine::ClosedNumeric => "closed",
        }
    }
}

impl fmt::Display for Engine {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

/// `chi(c_{2m+1})` for q(N), tagged with the engine that produced it.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ChiResult {
    pub rank: usize,
    pub m: usize,
    pub poly: MultiPoly,
    pub engine: Engine,
}

/// Upper-triangular `N x N` matrix with `lambda_i(lambda_i - 1)` on the
/// diagonal and `-2 lambda_i` to the right of it in row `i`.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct AMatrix {
    rank: usize,
    entries: Vec<Vec<MultiPoly>>,
}

impl AMatrix {
    pub fn rank(&self) -> usize {
        self.rank
    }

    /// Entry in row `i`, column `j` (1-based).
    pub fn entry(&self, i: usize, j: usize) -> &MultiPoly {
        &self.entries[i - 1][j - 1]
    }

    /// `A v` for a column vector of polynomials.
    pub fn apply(&self, v: &[MultiPoly]) -> Vec<MultiPoly> {
        self.entries
            .iter()
            .map(|row| {
                row.iter()
                    .zip(v)
                    .filter(|(a, _)| !a.is_zero())
                    .fold(MultiPoly::zero(self.rank), |acc, (a, x)| &acc + &(a * x))
            })
            .collect()
    }
}

fn lambdas(rank: usize) -> Vec<MultiPoly> {
    (0..rank).map(|i| MultiPoly::var(rank, i)).collect()
}

/// `lambda_i (lambda_i + shift)` for 1-based `i`.
fn shifted_square(rank: usize, i: usize, shift: i64) -> MultiPoly {
    let l = MultiPoly::var(rank, i - 1);
    &l * &(&l + &MultiPoly::constant(rank, Rational::from(shift)))
}

pub fn matrix_a(rank: usize) -> AMatrix {
    assert!(rank >= 1, "rank must be positive");
    let minus_two = Rational::from(-2);
    let entries = (1..=rank)
        .map(|i| {
            (1..=rank)
                .map(|j| match j.cmp(&i) {
                    std::cmp::Ordering::Less => MultiPoly::zero(rank),
                    std::cmp::Ordering::Equal => shifted_square(rank, i, -1),
                    std::cmp::Ordering::Greater => MultiPoly::var(rank, i - 1).scale(&minus_two),
                })
                .collect()
        })
        .collect();
    AMatrix { rank, entries }
}

/// `A^m lambda`, one entry per `i = 1..N`.
pub fn chi_entries_recurrence(m: usize, rank: usize) -> Vec<MultiPoly> {
    let a = matrix_a(rank);
    let mut v = lambdas(rank);
    for _ in 0..m {
        v = a.apply(&v);
    }
    v
}

/// `chi(C^(2m+1)_ii) = sum_j (A^m)_ij lambda_j`.
pub fn chi_entry_recurrence(m: usize, i: usize, rank: usize) -> MultiPoly {
    assert!((1..=rank).contains(&i), "row index out of range");
    chi_entries_recurrence(m, rank).swap_remove(i - 1)
}

pub fn chi_cn_recurrence(m: usize, rank: usize) -> ChiResult {
    let sum = chi_entries_recurrence(m, rank)
        .iter()
        .fold(MultiPoly::zero(rank), |acc, p| &acc + p);
    ChiResult {
        rank,
        m,
        poly: sum.scale(&Rational::from(2)),
        engine: Engine::Recurrence,
    }
}

/// `(1 - z lambda_i(lambda_i+1)) / (1 - z lambda_i(lambda_i-1))` to order
/// `order`.
pub fn pi_factor_series(i: usize, order: usize, rank: usize) -> TruncatedSeries {
    let numer = TruncatedSeries::one_minus(&shifted_square(rank, i, 1), order);
    let denom_inv = TruncatedSeries::geometric(&shifted_square(rank, i, -1), order);
    numer.mul(&denom_inv).expect("matching orders")
}

/// `prod_i pi_factor_series(i)` to order `order`.
pub fn pi_product(order: usize, rank: usize) -> TruncatedSeries {
    (1..=rank).fold(TruncatedSeries::one(rank, order), |acc, i| {
        acc.mul(&pi_factor_series(i, order, rank))
            .expect("matching orders")
    })
}

/// `chi(c_1), chi(c_3), .., chi(c_{2 max_m + 1})` read off the generating
/// function.
pub fn chi_series(max_m: usize, rank: usize) -> Result<Vec<ChiResult>, CharacterError> {
    if rank == 0 {
        return Err(CharacterError::ZeroRank);
    }
    let product = pi_product(max_m + 1, rank);
    if product.coeff(0) != &MultiPoly::one(rank) {
        return Err(CharacterError::BadConstantTerm(product.coeff(0).to_string()));
    }
    Ok((0..=max_m)
        .map(|m| ChiResult {
            rank,
            m,
            poly: -product.coeff(m + 1),
            engine: Engine::Series,
        })
        .collect())
}

/// The residue formula evaluated exactly at `lambda`.
///
/// Fails when two of the values `lambda_i(lambda_i - 1)` coincide, where the
/// formula has a removable singularity.
pub fn chi_closed_numeric(m: usize, lambda: &[Rational]) -> Result<Rational, CharacterError> {
    if lambda.is_empty() {
        return Err(CharacterError::ZeroRank);
    }
    let one = Rational::one();
    let a: Vec<Rational> = lambda.iter().map(|l| l * &(l - &one)).collect();
    let b: Vec<Rational> = lambda.iter().map(|l| l * &(l + &one)).collect();
    for i in 0..a.len() {
        for j in (i + 1)..a.len() {
            if a[i] == a[j] {
                return Err(CharacterError::Singular {
                    i: i + 1,
                    j: j + 1,
                    value: a[i].to_string(),
                });
            }
        }
    }
    let exp = m as u32;
    let mut total = Rational::zero();
    for (i, l) in lambda.iter().enumerate() {
        let mut term = l.pow(exp + 1) * (l - &one).pow(exp);
        for j in 0..lambda.len() {
            if j != i {
                term = term * (&a[i] - &b[j]) / (&a[i] - &a[j]);
            }
        }
        total += term;
    }
    Ok(total * Rational::from(2))
}

/// True when every `lambda_i(lambda_i - 1)` is distinct.
pub fn is_admissible(lambda: &[Rational]) -> bool {
    let one = Rational::one();
    let a: Vec<Rational> = lambda.iter().map(|l| l * &(l - &one)).collect();
    (0..a.len()).all(|i| ((i + 1)..a.len()).all(|j| a[i] != a[j]))
}

/// Deterministic pseudo-random admissible points with small rational
/// coordinates.
pub fn admissible_points(rank: usize, count: usize, seed: u64) -> Vec<Vec<Rational>> {
    let mut rng = ChaCha8Rng::seed_from_u64(seed);
    let mut out = Vec::with_capacity(count);
    while out.len() < count {
        let pt: Vec<Rational> = (0..rank)
            .map(|_| Rational::new(rng.gen_range(-12..=12), rng.gen_range(1..=5)))
            .collect();
        if is_admissible(&pt) {
            out.push(pt);
        }
    }
    out
}

const SPOT_CHECKS: usize = 3;

/// The canonical answer: the series result, required to match the
/// recurrence exactly and the closed form at a few admissible points.
pub fn chi_polynomial(m: usize, rank: usize) -> Result<ChiResult, CharacterError> {
    let series = chi_series(m, rank)?.pop().expect("at least one term");
    let recurrence = chi_cn_recurrence(m, rank);
    if recurrence.poly != series.poly {
        return Err(CharacterError::EngineDisagreement {
            m,
            rank,
            detail: format!("series {} vs recurrence {}", series.poly, recurrence.poly),
        });
    }
    let seed = 0x9e37_79b9 ^ ((rank as u64) << 32) ^ m as u64;
    for pt in admissible_points(rank, SPOT_CHECKS, seed) {
        let closed = chi_closed_numeric(m, &pt)?;
        let value = series.poly.eval(&pt).expect("point length matches rank");
        if closed != value {
            return Err(CharacterError::EngineDisagreement {
                m,
                rank,
                detail: format!("at {pt:?}: polynomial {value} vs closed form {closed}"),
            });
        }
    }
    Ok(series)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn r(v: i64) -> Rational {
        Rational::from(v)
    }

    fn l(rank: usize, i: usize) -> MultiPoly {
        MultiPoly::var(rank, i - 1)
    }

    /// `2 l^{m+1} (l-1)^m`, the one-variable answer.
    fn rank_one(m: usize) -> MultiPoly {
        let x = l(1, 1);
        let xm1 = &x - &MultiPoly::one(1);
        (&x.pow(m as u32 + 1) * &xm1.pow(m as u32)).scale(&r(2))
    }

    fn n2_m1() -> MultiPoly {
        let (a, b) = (l(2, 1), l(2, 2));
        let one = MultiPoly::one(2);
        let t1 = (&(&a * &a) * &(&a - &one)).scale(&r(2));
        let t2 = (&(&b * &b) * &(&b - &one)).scale(&r(2));
        &(&t1 + &t2) - &(&a * &b).scale(&r(4))
    }

    #[test]
    fn a_matrix_shape() {
        let a1 = matrix_a(1);
        assert_eq!(a1.entry(1, 1), &shifted_square(1, 1, -1));
        let a2 = matrix_a(2);
        assert_eq!(a2.entry(1, 2), &l(2, 1).scale(&r(-2)));
        assert!(a2.entry(2, 1).is_zero());
        assert_eq!(a2.entry(2, 2).to_string(), "l2^2 - l2");
        let a3 = matrix_a(3);
        for i in 1..=3 {
            for j in 1..i {
                assert!(a3.entry(i, j).is_zero());
            }
        }
    }

    #[test]
    fn entry_recurrence() {
        assert_eq!(chi_entry_recurrence(0, 2, 3), l(3, 2));
        let (a, b) = (l(2, 1), l(2, 2));
        let expected = &(&(&a * &a) * &(&a - &MultiPoly::one(2))) - &(&a * &b).scale(&r(2));
        assert_eq!(chi_entry_recurrence(1, 1, 2), expected);
        assert_eq!(chi_entry_recurrence(1, 1, 1), rank_one(1).scale(&Rational::new(1, 2)));
    }

    #[test]
    fn cn_recurrence() {
        assert_eq!(chi_cn_recurrence(0, 3).poly.to_string(), "2*l1 + 2*l2 + 2*l3");
        assert_eq!(chi_cn_recurrence(1, 2).poly, n2_m1());
        assert_eq!(chi_cn_recurrence(1, 1).poly, rank_one(1));
    }

    #[test]
    fn pi_factor() {
        let s = pi_factor_series(1, 3, 1);
        let at_zero = s.eval(&[r(0)]).unwrap();
        assert_eq!(at_zero, vec![r(1), r(0), r(0), r(0)]);
        assert_eq!(s.coeff(1), &l(1, 1).scale(&r(-2)));
        // lambda_2 = -lambda_1 makes the two factors mutually inverse
        let p = pi_product(5, 2);
        let sub = [l(1, 1), -&l(1, 1)];
        for k in 0..=5 {
            let c = p.coeff(k).substitute(&sub).unwrap();
            if k == 0 {
                assert_eq!(c, MultiPoly::one(1));
            } else {
                assert!(c.is_zero(), "z^{k}: {c}");
            }
        }
    }

    #[test]
    fn series_examples() {
        let rs = chi_series(4, 1).unwrap();
        for res in &rs {
            assert_eq!(res.poly, rank_one(res.m));
        }
        assert_eq!(chi_series(1, 2).unwrap()[1].poly, n2_m1());
        // natural module weight (1, 0, 0)
        let pt = [r(1), r(0), r(0)];
        let values: Vec<Rational> = chi_series(4, 3)
            .unwrap()
            .iter()
            .map(|c| c.poly.eval(&pt).unwrap())
            .collect();
        assert_eq!(values, vec![r(2), r(0), r(0), r(0), r(0)]);
    }

    #[test]
    fn closed_examples() {
        assert_eq!(chi_closed_numeric(1, &[r(3)]).unwrap(), r(36));
        assert_eq!(chi_closed_numeric(1, &[r(3), r(1)]).unwrap(), r(24));
        let p = chi_series(1, 2).unwrap()[1].poly.clone();
        assert_eq!(p.eval(&[r(3), r(1)]).unwrap(), r(24));
        for m in 0..5 {
            assert_eq!(chi_closed_numeric(m, &[r(5), r(-5)]).unwrap(), r(0));
        }
        let err = chi_closed_numeric(1, &[r(1), r(1)]).unwrap_err();
        assert_eq!(
            err,
            CharacterError::Singular {
                i: 1,
                j: 2,
                value: "0".into()
            }
        );
        // 0 and 1 collide as well: both give lambda(lambda-1) = 0
        assert!(chi_closed_numeric(0, &[r(0), r(1)]).is_err());
    }

    #[test]
    fn polynomial_examples() {
        assert_eq!(chi_polynomial(0, 2).unwrap().poly.to_string(), "2*l1 + 2*l2");
        assert_eq!(chi_polynomial(1, 1).unwrap().poly, rank_one(1));
        assert_eq!(chi_polynomial(2, 1).unwrap().poly, rank_one(2));
        assert_eq!(chi_polynomial(2, 1).unwrap().engine, Engine::Series);
    }

    #[test]
    fn admissible_points_are_admissible() {
        let pts = admissible_points(3, 25, 7);
        assert_eq!(pts.len(), 25);
        assert!(pts.iter().all(|p| is_admissible(p)));
        assert_eq!(pts, admissible_points(3, 25, 7));
    }
}
