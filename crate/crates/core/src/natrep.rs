//! The natural `2N`-dimensional representation `F(i,j) -> E(i,j) + E(-i,-j)`
//! and the matrix of `c_n` in it.
//!
//! Rows and columns are indexed by `-N, .., -1, 1, .., N` in that order.

use std::fmt;

use crate::character;
use crate::error::NatRepError;
use crate::rational::Rational;
use crate::structure::{self, signed_indices, Generator};

pub const MAX_PATH_ORDER: usize = 9;
pub const MAX_PATH_RANK: usize = 4;

fn pos(k: i32, rank: usize) -> usize {
    let n = rank as i32;
    if k < 0 {
        (k + n) as usize
    } else {
        (k + n - 1) as usize
    }
}

/// Exact `2N x 2N` matrix.
#[derive(Clone, PartialEq, Eq)]
pub struct RepMatrix {
    rank: usize,
    entries: Vec<Rational>,
}

impl RepMatrix {
    pub fn zero(rank: usize) -> Self {
        let dim = 2 * rank;
        RepMatrix {
            rank,
            entries: vec![Rational::zero(); dim * dim],
        }
    }

    pub fn identity(rank: usize) -> Self {
        let mut m = Self::zero(rank);
        let dim = m.dim();
        for d in 0..dim {
            m.entries[d * dim + d] = Rational::one();
        }
        m
    }

    fn from_counts(rank: usize, counts: &[i64]) -> Self {
        RepMatrix {
            rank,
            entries: counts.iter().map(|&c| Rational::from(c)).collect(),
        }
    }

    pub fn dim(&self) -> usize {
        2 * self.rank
    }

    /// Entry at signed row `r`, signed column `c`.
    pub fn get(&self, r: i32, c: i32) -> &Rational {
        &self.entries[pos(r, self.rank) * self.dim() + pos(c, self.rank)]
    }

    pub fn mul(&self, other: &RepMatrix) -> RepMatrix {
        let d = self.dim();
        let mut out = Self::zero(self.rank);
        for r in 0..d {
            for k in 0..d {
                let a = &self.entries[r * d + k];
                if a.is_zero() {
                    continue;
                }
                for c in 0..d {
                    let b = &other.entries[k * d + c];
                    if !b.is_zero() {
                        out.entries[r * d + c] += a * b;
                    }
                }
            }
        }
        out
    }

    pub fn add(&self, other: &RepMatrix) -> RepMatrix {
        RepMatrix {
            rank: self.rank,
            entries: self
                .entries
                .iter()
                .zip(&other.entries)
                .map(|(a, b)| a + b)
                .collect(),
        }
    }

    pub fn scale(&self, k: &Rational) -> RepMatrix {
        RepMatrix {
            rank: self.rank,
            entries: self.entries.iter().map(|a| a * k).collect(),
        }
    }

    pub fn is_zero(&self) -> bool {
        self.entries.iter().all(Rational::is_zero)
    }

    /// Largest `|M - s I|` entry, with `s` the top-left entry.
    pub fn scalar_deviation(&self) -> (Rational, Rational) {
        let d = self.dim();
        let s = self.entries[0].clone();
        let mut worst = Rational::zero();
        for r in 0..d {
            for c in 0..d {
                let target = if r == c { s.clone() } else { Rational::zero() };
                let dev = (&self.entries[r * d + c] - &target).abs();
                if dev > worst {
                    worst = dev;
                }
            }
        }
        (s, worst)
    }
}

impl fmt::Display for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let d = self.dim();
        for r in 0..d {
            let row: Vec<String> = (0..d).map(|c| self.entries[r * d + c].to_string()).collect();
            writeln!(f, "[{}]", row.join(", "))?;
        }
        Ok(())
    }
}

impl fmt::Debug for RepMatrix {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

pub fn rho_generator(g: Generator, rank: usize) -> RepMatrix {
    let mut m = RepMatrix::zero(rank);
    let d = m.dim();
    m.entries[pos(g.i(), rank) * d + pos(g.j(), rank)] = Rational::one();
    m.entries[pos(-g.i(), rank) * d + pos(-g.j(), rank)] = Rational::one();
    m
}

/// Checks `rho([a,b]) = rho(a)rho(b) - (-1)^{p(a)p(b)} rho(b)rho(a)` for all
/// generator pairs, returning the first pair that fails.
pub fn verify_representation(rank: usize) -> Result<(), (Generator, Generator)> {
    let gens = structure::all_generators(rank);
    let mats: Vec<RepMatrix> = gens.iter().map(|&g| rho_generator(g, rank)).collect();
    for (x, (&a, ma)) in gens.iter().zip(&mats).enumerate() {
        for (y, (&b, mb)) in gens.iter().zip(&mats).enumerate() {
            let sign = Rational::sign((a.parity() * b.parity()) as u32);
            let lhs = ma.mul(mb).add(&mb.mul(ma).scale(&-sign));
            let mut rhs = RepMatrix::zero(rank);
            for &(c, h) in structure::superbracket(a, b).terms() {
                rhs = rhs.add(&rho_generator(h, rank).scale(&Rational::from(c)));
            }
            if lhs != rhs {
                return Err((gens[x], gens[y]));
            }
        }
    }
    Ok(())
}

fn check_budget(n: usize, rank: usize) -> Result<(), NatRepError> {
    if n == 0 || rank == 0 || n > MAX_PATH_ORDER || rank > MAX_PATH_RANK {
        Err(NatRepError::BudgetExceeded { n, rank })
    } else {
        Ok(())
    }
}

/// Walks the factors of `C^(n)_{ii}` right to left starting from basis vector
/// `e_cur`. `right` is the column index of the next factor to apply.
#[allow(clippy::too_many_arguments)]
fn walk(
    rank: usize,
    i: i32,
    remaining: usize,
    right: i32,
    cur: i32,
    sign: i64,
    column: usize,
    counts: &mut [i64],
) {
    // F(a, right) sends e_right -> e_a and e_{-right} -> e_{-a}
    let step = |a: i32| -> Option<i32> {
        if cur == right {
            Some(a)
        } else if cur == -right {
            Some(-a)
        } else {
            None
        }
    };
    if remaining == 1 {
        if let Some(row) = step(i) {
            counts[pos(row, rank) * 2 * rank + column] += sign;
        }
        return;
    }
    for k in signed_indices(rank) {
        if let Some(next) = step(k) {
            let s = if k < 0 { -sign } else { sign };
            walk(rank, i, remaining - 1, k, next, s, column, counts);
        }
    }
}

fn paths_from(i: i32, n: usize, rank: usize) -> Vec<i64> {
    let d = 2 * rank;
    let mut counts = vec![0i64; d * d];
    for c in signed_indices(rank) {
        walk(rank, i, n, i, c, 1, pos(c, rank), &mut counts);
    }
    counts
}

/// `rho(c_n)` by enumerating every index path of every `C^(n)_{ii}`.
pub fn rho_cn(n: usize, rank: usize) -> Result<RepMatrix, NatRepError> {
    check_budget(n, rank)?;
    let starts: Vec<i32> = signed_indices(rank).collect();
    #[cfg(feature = "parallel")]
    let partials: Vec<Vec<i64>> = {
        use rayon::prelude::*;
        starts.par_iter().map(|&i| paths_from(i, n, rank)).collect()
    };
    #[cfg(not(feature = "parallel"))]
    let partials: Vec<Vec<i64>> = starts.iter().map(|&i| paths_from(i, n, rank)).collect();
    let d = 2 * rank;
    let mut total = vec![0i64; d * d];
    for p in &partials {
        for (t, x) in total.iter_mut().zip(p) {
            *t += x;
        }
    }
    Ok(RepMatrix::from_counts(rank, &total))
}

/// `rho(c_n)` through the matrices `M^(s)_{kj} = rho(C^(s)_{kj})`, built by
/// `M^(s+1)_{ij} = sum_k rho(F(i,k)) (-1)^{kbar} M^(s)_{kj}`.
pub fn rho_cn_dense(n: usize, rank: usize) -> RepMatrix {
    assert!(n >= 1 && rank >= 1);
    let idx: Vec<i32> = signed_indices(rank).collect();
    let at = |a: i32, b: i32| pos(a, rank) * idx.len() + pos(b, rank);
    let gen = |a: i32, b: i32| rho_generator(Generator::new(a, b).expect("nonzero"), rank);
    let mut level: Vec<RepMatrix> = Vec::with_capacity(idx.len() * idx.len());
    for &a in &idx {
        for &b in &idx {
            level.push(gen(a, b));
        }
    }
    for _ in 1..n {
        let mut next = Vec::with_capacity(level.len());
        for &a in &idx {
            for &b in &idx {
                let mut acc = RepMatrix::zero(rank);
                for &k in &idx {
                    let term = gen(a, k).mul(&level[at(k, b)]);
                    let sign = if k < 0 { -Rational::one() } else { Rational::one() };
                    acc = acc.add(&term.scale(&sign));
                }
                next.push(acc);
            }
        }
        level = next;
    }
    idx.iter()
        .fold(RepMatrix::zero(rank), |acc, &a| acc.add(&level[at(a, a)]))
}

/// Whether `rho(c_n)` is scalar, and the scalar.
#[derive(Clone, Debug, PartialEq, Eq)]
pub struct ScalarReport {
    pub n: usize,
    pub rank: usize,
    pub scalar: Rational,
    pub is_scalar: bool,
    pub max_offdiag_violation: Rational,
    /// `chi(c_n)` at the natural module's highest weight `(1, 0, .., 0)`.
    pub expected: Rational,
}

/// The highest weight of the natural module: `F(1,1) e_1 = e_1`, other
/// `F(j,j) e_1 = 0`.
pub fn natural_highest_weight(rank: usize) -> Vec<Rational> {
    let mut w = vec![Rational::zero(); rank];
    w[0] = Rational::one();
    w
}

/// Checks that `rho(c_n)` is the scalar `chi(c_n)(1, 0, .., 0)`; even `n`
/// must give the zero matrix.
pub fn scalar_check(n: usize, rank: usize) -> Result<ScalarReport, NatRepError> {
    let m = rho_cn(n, rank)?;
    let (scalar, violation) = m.scalar_deviation();
    let expected = if n % 2 == 1 {
        character::chi_polynomial((n - 1) / 2, rank)?
            .poly
            .eval(&natural_highest_weight(rank))
            .expect("rank-length point")
    } else {
        Rational::zero()
    };
    let report = ScalarReport {
        n,
        rank,
        is_scalar: violation.is_zero(),
        scalar,
        max_offdiag_violation: violation,
        expected,
    };
    if !report.is_scalar {
        return Err(NatRepError::NotScalar {
            n,
            rank,
            dump: m.to_string(),
        });
    }
    if report.scalar != report.expected {
        return Err(NatRepError::ScalarMismatch {
            n,
            rank,
            found: report.scalar.to_string(),
            expected: report.expected.to_string(),
            dump: m.to_string(),
        });
    }
    Ok(report)
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f(i: i32, j: i32) -> Generator {
        Generator::new(i, j).unwrap()
    }

    #[test]
    fn generator_matrices() {
        assert_eq!(rho_generator(f(1, 1), 1), RepMatrix::identity(1));
        let g = rho_generator(f(-1, 1), 1);
        assert_eq!(g.get(-1, 1), &Rational::one());
        assert_eq!(g.get(1, -1), &Rational::one());
        assert!(g.get(1, 1).is_zero());
        assert!(g.get(-1, -1).is_zero());
    }

    #[test]
    fn representation_property() {
        for rank in 1..=3 {
            assert_eq!(verify_representation(rank), Ok(()));
        }
    }

    #[test]
    fn small_casimirs() {
        let two = Rational::from(2);
        assert_eq!(rho_cn(1, 2).unwrap(), RepMatrix::identity(2).scale(&two));
        assert!(rho_cn(3, 1).unwrap().is_zero());
        for rank in 1..=3 {
            assert!(rho_cn(2, rank).unwrap().is_zero());
        }
    }

    #[test]
    fn budget_guard() {
        assert_eq!(
            rho_cn(10, 2),
            Err(NatRepError::BudgetExceeded { n: 10, rank: 2 })
        );
        assert!(rho_cn(3, 5).is_err());
    }

    #[test]
    fn path_and_dense_agree() {
        for rank in 1..=2 {
            for n in 1..=5 {
                assert_eq!(rho_cn(n, rank).unwrap(), rho_cn_dense(n, rank), "n={n}");
            }
        }
    }

    #[test]
    fn scalar_examples() {
        let r = scalar_check(1, 3).unwrap();
        assert_eq!(r.scalar, Rational::from(2));
        assert_eq!(r.expected, Rational::from(2));
        let r = scalar_check(3, 2).unwrap();
        assert!(r.is_scalar && r.scalar.is_zero());
        let r = scalar_check(5, 2).unwrap();
        assert!(r.scalar.is_zero());
    }

    #[test]
    fn non_scalar_is_reported() {
        // a single Casimir entry is not central, so its matrix is not scalar
        let m = rho_generator(f(1, 2), 2);
        let (_, violation) = m.scalar_deviation();
        assert_eq!(violation, Rational::one());
    }
}
