//! Triangular fuzzy numbers and their arithmetic.

use std::fmt;
use std::ops::{Add, Sub};

use crate::error::{Error, Result};
use crate::scalar::Scalar;

/// A triangular fuzzy number `(l, m, u)` with `l <= m <= u`.
///
/// Membership rises linearly from `l` to the mode `m` and falls linearly to
/// `u`. A degenerate leg (`l == m` or `m == u`) takes the value 1 at the
/// shared endpoint, so `(c, c, c)` is the crisp number `c`.
#[derive(Debug, Clone, Copy, PartialEq)]
pub struct TriangularFuzzyNumber<T> {
    l: T,
    m: T,
    u: T,
}

impl<T: Scalar> TriangularFuzzyNumber<T> {
    pub fn new(l: T, m: T, u: T) -> Result<Self> {
        // Written so that NaN components are rejected too.
        if !(l <= m && m <= u) {
            return Err(Error::OrderingViolation {
                l: l.as_f64(),
                m: m.as_f64(),
                u: u.as_f64(),
            });
        }
        Ok(Self { l, m, u })
    }

    pub fn crisp(c: T) -> Self {
        Self { l: c, m: c, u: c }
    }

    /// Caller guarantees ordering; used where it holds by construction.
    pub(crate) fn from_ordered(l: T, m: T, u: T) -> Self {
        debug_assert!(l <= m && m <= u, "unordered triple ({l}, {m}, {u})");
        Self { l, m, u }
    }

    #[inline]
    pub fn l(&self) -> T {
        self.l
    }

    #[inline]
    pub fn m(&self) -> T {
        self.m
    }

    #[inline]
    pub fn u(&self) -> T {
        self.u
    }

    pub fn to_array(&self) -> [T; 3] {
        [self.l, self.m, self.u]
    }

    /// Left spread `m - l`.
    pub fn left_spread(&self) -> T {
        self.m - self.l
    }

    /// Right spread `u - m`.
    pub fn right_spread(&self) -> T {
        self.u - self.m
    }

    pub fn is_crisp(&self) -> bool {
        self.l == self.u
    }

    /// Degree of membership of `z`, in `[0, 1]`.
    pub fn membership(&self, z: T) -> T {
        let (l, m, u) = (self.l, self.m, self.u);
        if z < l || z > u {
            T::zero()
        } else if z == m {
            T::one()
        } else if z < m {
            (z - l) / (m - l)
        } else {
            (u - z) / (u - m)
        }
    }

    /// Componentwise product. Both operands must be nonnegative.
    pub fn checked_mul(self, rhs: Self) -> Result<Self> {
        for lower in [self.l, rhs.l] {
            if lower < T::zero() {
                return Err(Error::NegativeOperand { lower: lower.as_f64() });
            }
        }
        Ok(Self::from_ordered(self.l * rhs.l, self.m * rhs.m, self.u * rhs.u))
    }

    /// `(a1 / b3, a2 / b2, a3 / b1)`. The divisor must be strictly positive
    /// and the dividend nonnegative.
    pub fn checked_div(self, rhs: Self) -> Result<Self> {
        if !(rhs.l > T::zero()) {
            return Err(Error::DivisorNotPositive {
                l: rhs.l.as_f64(),
                m: rhs.m.as_f64(),
                u: rhs.u.as_f64(),
            });
        }
        if self.l < T::zero() {
            return Err(Error::NegativeOperand { lower: self.l.as_f64() });
        }
        Ok(Self::from_ordered(self.l / rhs.u, self.m / rhs.m, self.u / rhs.l))
    }

    /// Multiplication by a positive real.
    pub fn scale(self, k: T) -> Result<Self> {
        if !(k > T::zero()) {
            return Err(Error::NonPositiveScalar(k.as_f64()));
        }
        Ok(Self::from_ordered(k * self.l, k * self.m, k * self.u))
    }

    /// Reflection `(-u, -m, -l)`.
    pub fn reflect(self) -> Self {
        Self::from_ordered(-self.u, -self.m, -self.l)
    }
}

impl<T: Scalar> Add for TriangularFuzzyNumber<T> {
    type Output = Self;

    fn add(self, rhs: Self) -> Self {
        Self::from_ordered(self.l + rhs.l, self.m + rhs.m, self.u + rhs.u)
    }
}

impl<T: Scalar> Sub for TriangularFuzzyNumber<T> {
    type Output = Self;

    fn sub(self, rhs: Self) -> Self {
        Self::from_ordered(self.l - rhs.u, self.m - rhs.m, self.u - rhs.l)
    }
}

impl<T: Scalar> fmt::Display for TriangularFuzzyNumber<T> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match f.precision() {
            Some(p) => write!(f, "({:.p$}, {:.p$}, {:.p$})", self.l, self.m, self.u),
            None => write!(f, "({}, {}, {})", self.l, self.m, self.u),
        }
    }
}
