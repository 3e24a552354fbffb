//! Power series in one formal variable `z`, truncated at a fixed order, with
//! polynomial coefficients.

use crate::error::PolyError;
use crate::poly::MultiPoly;
use crate::rational::Rational;

#[derive(Clone, Debug, PartialEq, Eq)]
pub struct TruncatedSeries {
    nvars: usize,
    coeffs: Vec<MultiPoly>,
}

impl TruncatedSeries {
    pub fn zero(nvars: usize, order: usize) -> Self {
        TruncatedSeries {
            nvars,
            coeffs: vec![MultiPoly::zero(nvars); order + 1],
        }
    }

    pub fn one(nvars: usize, order: usize) -> Self {
        let mut s = Self::zero(nvars, order);
        s.coeffs[0] = MultiPoly::one(nvars);
        s
    }

    /// Builds a series from leading coefficients; missing ones are zero and
    /// anything past `order` is dropped.
    pub fn from_coeffs(nvars: usize, order: usize, coeffs: Vec<MultiPoly>) -> Self {
        let mut s = Self::zero(nvars, order);
        for (k, c) in coeffs.into_iter().take(order + 1).enumerate() {
            assert_eq!(c.nvars(), nvars, "coefficient variable count");
            s.coeffs[k] = c;
        }
        s
    }

    /// `1 - b z`.
    pub fn one_minus(b: &MultiPoly, order: usize) -> Self {
        Self::from_coeffs(
            b.nvars(),
            order,
            vec![MultiPoly::one(b.nvars()), -b],
        )
    }

    pub fn order(&self) -> usize {
        self.coeffs.len() - 1
    }

    pub fn nvars(&self) -> usize {
        self.nvars
    }

    pub fn coeff(&self, k: usize) -> &MultiPoly {
        &self.coeffs[k]
    }

    pub fn coeffs(&self) -> &[MultiPoly] {
        &self.coeffs
    }

    fn check(&self, other: &TruncatedSeries) -> Result<(), PolyError> {
        if self.order() != other.order() {
            return Err(PolyError::OrderMismatch {
                left: self.order(),
                right: other.order(),
            });
        }
        if self.nvars != other.nvars {
            return Err(PolyError::VarCountMismatch {
                left: self.nvars,
                right: other.nvars,
            });
        }
        Ok(())
    }

    /// Cauchy product truncated at the common order.
    pub fn mul(&self, other: &TruncatedSeries) -> Result<TruncatedSeries, PolyError> {
        self.check(other)?;
        let order = self.order();
        let mut out = Self::zero(self.nvars, order);
        for (i, a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            for (j, b) in other.coeffs[..=order - i].iter().enumerate() {
                if b.is_zero() {
                    continue;
                }
                out.coeffs[i + j] = &out.coeffs[i + j] + &(a * b);
            }
        }
        Ok(out)
    }

    /// `sum_{k=0}^{order} b^k z^k`, the truncated inverse of `1 - b z`.
    pub fn geometric(b: &MultiPoly, order: usize) -> Self {
        let mut coeffs = Vec::with_capacity(order + 1);
        let mut power = MultiPoly::one(b.nvars());
        for _ in 0..=order {
            let next = &power * b;
            coeffs.push(power);
            power = next;
        }
        TruncatedSeries {
            nvars: b.nvars(),
            coeffs,
        }
    }

    /// Coefficient-wise substitution of a point, leaving a series over the
    /// rationals (as constants in zero variables).
    pub fn eval(&self, point: &[Rational]) -> Result<Vec<Rational>, PolyError> {
        self.coeffs.iter().map(|c| c.eval(point)).collect()
    }
}
