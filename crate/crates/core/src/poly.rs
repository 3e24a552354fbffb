//! Multivariate polynomials in `l1..lN` over exact rationals.

use std::cmp::Ordering;
use std::collections::BTreeMap;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use crate::error::PolyError;
use crate::rational::Rational;

/// Exponent vector of a monomial.
///
/// Ordered graded-lexicographically with `l1 > l2 > ... > lN`: higher total
/// degree first, ties broken by the exponent of `l1`, then `l2`, and so on.
#[derive(Clone, PartialEq, Eq, Hash, Debug)]
pub struct Monomial(Vec<u32>);

impl Monomial {
    pub fn new(exps: Vec<u32>) -> Self {
        Monomial(exps)
    }

    pub fn one(nvars: usize) -> Self {
        Monomial(vec![0; nvars])
    }

    pub fn exps(&self) -> &[u32] {
        &self.0
    }

    pub fn degree(&self) -> u32 {
        self.0.iter().sum()
    }

    fn mul(&self, other: &Monomial) -> Monomial {
        Monomial(self.0.iter().zip(&other.0).map(|(a, b)| a + b).collect())
    }
}

impl Ord for Monomial {
    fn cmp(&self, other: &Self) -> Ordering {
        self.degree()
            .cmp(&other.degree())
            .then_with(|| self.0.cmp(&other.0))
    }
}

impl PartialOrd for Monomial {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

/// A polynomial in `nvars` commuting variables with rational coefficients.
///
/// No zero coefficient is ever stored, so structural equality is polynomial
/// equality.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct MultiPoly {
    nvars: usize,
    terms: BTreeMap<Monomial, Rational>,
}

impl MultiPoly {
    pub fn zero(nvars: usize) -> Self {
        MultiPoly {
            nvars,
            terms: BTreeMap::new(),
        }
    }

    pub fn one(nvars: usize) -> Self {
        Self::constant(nvars, Rational::one())
    }

    pub fn constant(nvars: usize, c: Rational) -> Self {
        let mut p = Self::zero(nvars);
        p.add_term(Monomial::one(nvars), c);
        p
    }

    /// The variable `l{index+1}`.
    pub fn var(nvars: usize, index: usize) -> Self {
        assert!(index < nvars, "variable l{} out of range", index + 1);
        let mut exps = vec![0; nvars];
        exps[index] = 1;
        let mut p = Self::zero(nvars);
        p.add_term(Monomial(exps), Rational::one());
        p
    }

    pub fn from_terms<I>(nvars: usize, terms: I) -> Self
    where
        I: IntoIterator<Item = (Vec<u32>, Rational)>,
    {
        let mut p = Self::zero(nvars);
        for (exps, c) in terms {
            assert_eq!(exps.len(), nvars, "exponent vector length");
            p.add_term(Monomial(exps), c);
        }
        p
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn is_zero(&self) -> bool {
        self.terms.is_empty()
    }

    pub fn len(&self) -> usize {
        self.terms.len()
    }

    pub fn is_empty(&self) -> bool {
        self.terms.is_empty()
    }

    /// Terms in canonical order, leading (largest) monomial first.
    pub fn terms(&self) -> impl Iterator<Item = (&Monomial, &Rational)> {
        self.terms.iter().rev()
    }

    pub fn coeff(&self, exps: &[u32]) -> Rational {
        self.terms
            .get(&Monomial(exps.to_vec()))
            .cloned()
            .unwrap_or_else(Rational::zero)
    }

    pub fn total_degree(&self) -> Option<u32> {
        self.terms.keys().next_back().map(Monomial::degree)
    }

    /// True when every coefficient has denominator 1.
    pub fn is_integral(&self) -> bool {
        self.terms.values().all(Rational::is_integer)
    }

    pub fn add_term(&mut self, mono: Monomial, c: Rational) {
        if c.is_zero() {
            return;
        }
        use std::collections::btree_map::Entry;
        match self.terms.entry(mono) {
            Entry::Vacant(e) => {
                e.insert(c);
            }
            Entry::Occupied(mut e) => {
                *e.get_mut() += c;
                if e.get().is_zero() {
                    e.remove();
                }
            }
        }
    }

    fn check_vars(&self, other: &MultiPoly) -> Result<(), PolyError> {
        if self.nvars != other.nvars {
            Err(PolyError::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            })
        } else {
            Ok(())
        }
    }

    pub fn checked_add(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), c.clone());
        }
        Ok(out)
    }

    pub fn checked_sub(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = self.clone();
        for (m, c) in &other.terms {
            out.add_term(m.clone(), -c);
        }
        Ok(out)
    }

    pub fn checked_mul(&self, other: &MultiPoly) -> Result<MultiPoly, PolyError> {
        self.check_vars(other)?;
        let mut out = MultiPoly::zero(self.nvars);
        for (ma, ca) in &self.terms {
            for (mb, cb) in &other.terms {
                out.add_term(ma.mul(mb), ca * cb);
            }
        }
        Ok(out)
    }

    pub fn scale(&self, c: &Rational) -> MultiPoly {
        if c.is_zero() {
            return MultiPoly::zero(self.nvars);
        }
        MultiPoly {
            nvars: self.nvars,
            terms: self
                .terms
                .iter()
                .map(|(m, a)| (m.clone(), a * c))
                .collect(),
        }
    }

    pub fn pow(&self, exp: u32) -> MultiPoly {
        let mut acc = MultiPoly::one(self.nvars);
        for _ in 0..exp {
            acc = &acc * self;
        }
        acc
    }

    /// Exact value at `point`.
    pub fn eval(&self, point: &[Rational]) -> Result<Rational, PolyError> {
        if point.len() != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: point.len(),
            });
        }
        let mut total = Rational::zero();
        for (m, c) in &self.terms {
            let mut t = c.clone();
            for (x, &e) in point.iter().zip(m.exps()) {
                if e > 0 {
                    t *= &x.pow(e);
                }
            }
            total += t;
        }
        Ok(total)
    }

    /// Substitutes `images[k]` for `l{k+1}`. All images must share one
    /// variable count, which becomes the variable count of the result.
    pub fn substitute(&self, images: &[MultiPoly]) -> Result<MultiPoly, PolyError> {
        if images.len() != self.nvars {
            return Err(PolyError::PointLength {
                expected: self.nvars,
                got: images.len(),
            });
        }
        let target = match images.first() {
            Some(p) => p.nvars,
            None => return Ok(self.clone()),
        };
        for img in images {
            if img.nvars != target {
                return Err(PolyError::VarCountMismatch {
                    left: target,
                    right: img.nvars,
                });
            }
        }
        let mut out = MultiPoly::zero(target);
        for (m, c) in &self.terms {
            let mut t = MultiPoly::constant(target, c.clone());
            for (img, &e) in images.iter().zip(m.exps()) {
                if e > 0 {
                    t = &t * &img.pow(e);
                }
            }
            out = &out + &t;
        }
        Ok(out)
    }
}

impl fmt::Display for MultiPoly {
    /// Canonical rendering, e.g. `2*l1^2*l2 - 4/3*l2`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.terms.is_empty() {
            return f.write_str("0");
        }
        for (idx, (mono, c)) in self.terms().enumerate() {
            let negative = c.is_negative();
            let abs = c.abs();
            match (idx, negative) {
                (0, true) => f.write_str("-")?,
                (0, false) => {}
                (_, true) => f.write_str(" - ")?,
                (_, false) => f.write_str(" + ")?,
            }
            let factors: Vec<String> = mono
                .exps()
                .iter()
                .enumerate()
                .filter(|(_, &e)| e > 0)
                .map(|(v, &e)| {
                    if e == 1 {
                        format!("l{}", v + 1)
                    } else {
                        format!("l{}^{}", v + 1, e)
                    }
                })
                .collect();
            if factors.is_empty() {
                write!(f, "{}", abs)?;
            } else if abs.is_one() {
                f.write_str(&factors.join("*"))?;
            } else {
                write!(f, "{}*{}", abs, factors.join("*"))?;
            }
        }
        Ok(())
    }
}

impl fmt::Debug for MultiPoly {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "MultiPoly[{}]({})", self.nvars, self)
    }
}

impl Add for &MultiPoly {
    type Output = MultiPoly;
    fn add(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_add(rhs).expect("polynomial addition")
    }
}

impl Sub for &MultiPoly {
    type Output = MultiPoly;
    fn sub(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_sub(rhs).expect("polynomial subtraction")
    }
}

impl Mul for &MultiPoly {
    type Output = MultiPoly;
    fn mul(self, rhs: &MultiPoly) -> MultiPoly {
        self.checked_mul(rhs).expect("polynomial multiplication")
    }
}

impl Neg for &MultiPoly {
    type Output = MultiPoly;
    fn neg(self) -> MultiPoly {
        self.scale(&-Rational::one())
    }
}
