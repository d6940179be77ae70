//! The exact scalar ring Q[sqrt(2)] used for all class-function arithmetic.
//!
//! No floating point appears anywhere in the crate; every inner product,
//! Fourier coefficient and almost-character coefficient is a value
//! `a + b*sqrt(2)` with rational `a, b`.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num_bigint::BigInt;
use num_rational::BigRational;
use num_traits::{One, Signed, Zero};

/// An element `a + b*sqrt(2)` of Q[sqrt(2)].
#[derive(Clone, PartialEq, Eq)]
pub struct Sqrt2Rational {
    a: BigRational,
    b: BigRational,
}

impl Sqrt2Rational {
    pub fn new(a: BigRational, b: BigRational) -> Self {
        Sqrt2Rational { a, b }
    }

    pub fn zero() -> Self {
        Sqrt2Rational::new(BigRational::zero(), BigRational::zero())
    }

    pub fn one() -> Self {
        Sqrt2Rational::new(BigRational::one(), BigRational::zero())
    }

    pub fn sqrt2() -> Self {
        Sqrt2Rational::new(BigRational::zero(), BigRational::one())
    }

    pub fn from_int(n: i64) -> Self {
        Sqrt2Rational::new(BigRational::from_integer(BigInt::from(n)), BigRational::zero())
    }

    pub fn from_ratio(num: i64, den: i64) -> Self {
        assert!(den != 0);
        Sqrt2Rational::new(
            BigRational::new(BigInt::from(num), BigInt::from(den)),
            BigRational::zero(),
        )
    }

    /// `2^k` for any integer `k` (negative exponents allowed).
    pub fn pow2(k: i32) -> Self {
        let two = BigRational::from_integer(BigInt::from(2));
        let mut v = BigRational::one();
        for _ in 0..k.unsigned_abs() {
            v *= &two;
        }
        if k < 0 {
            v = v.recip();
        }
        Sqrt2Rational::new(v, BigRational::zero())
    }

    /// `2^h` for a half-integer `h = k/2`, e.g. `half_pow2(-1)` is `1/sqrt(2)`.
    pub fn pow2_half(numerator: i32) -> Self {
        if numerator.rem_euclid(2) == 0 {
            Sqrt2Rational::pow2(numerator / 2)
        } else {
            // 2^(k + 1/2) = 2^k * sqrt(2); for odd numerator n, k = (n-1)/2.
            let k = (numerator - 1).div_euclid(2);
            Sqrt2Rational::pow2(k) * Sqrt2Rational::sqrt2()
        }
    }

    pub fn is_zero(&self) -> bool {
        self.a.is_zero() && self.b.is_zero()
    }

    pub fn rational_part(&self) -> &BigRational {
        &self.a
    }

    pub fn sqrt2_part(&self) -> &BigRational {
        &self.b
    }

    /// Multiplicative inverse; panics on zero.
    pub fn inv(&self) -> Self {
        // (a + b s)^-1 = (a - b s) / (a^2 - 2 b^2), s = sqrt(2).
        let two = BigRational::from_integer(BigInt::from(2));
        let norm = &self.a * &self.a - two * &self.b * &self.b;
        assert!(!norm.is_zero(), "inverse of zero in Q[sqrt2]");
        Sqrt2Rational::new(&self.a / &norm, -&self.b / &norm)
    }

    /// Exact conversion to `(a, b)` with small integers, for display/tests.
    pub fn is_rational(&self) -> bool {
        self.b.is_zero()
    }
}

impl Add for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn add(self, rhs: Sqrt2Rational) -> Sqrt2Rational {
        Sqrt2Rational::new(self.a + rhs.a, self.b + rhs.b)
    }
}

impl<'a> Add<&'a Sqrt2Rational> for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn add(self, rhs: &'a Sqrt2Rational) -> Sqrt2Rational {
        Sqrt2Rational::new(self.a + &rhs.a, self.b + &rhs.b)
    }
}

impl AddAssign for Sqrt2Rational {
    fn add_assign(&mut self, rhs: Sqrt2Rational) {
        self.a += rhs.a;
        self.b += rhs.b;
    }
}

impl Sub for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn sub(self, rhs: Sqrt2Rational) -> Sqrt2Rational {
        Sqrt2Rational::new(self.a - rhs.a, self.b - rhs.b)
    }
}

impl SubAssign for Sqrt2Rational {
    fn sub_assign(&mut self, rhs: Sqrt2Rational) {
        self.a -= rhs.a;
        self.b -= rhs.b;
    }
}

impl Mul for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn mul(self, rhs: Sqrt2Rational) -> Sqrt2Rational {
        &self * &rhs
    }
}

impl<'a, 'b> Mul<&'b Sqrt2Rational> for &'a Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn mul(self, rhs: &'b Sqrt2Rational) -> Sqrt2Rational {
        let two = BigRational::from_integer(BigInt::from(2));
        Sqrt2Rational::new(
            &self.a * &rhs.a + two * &self.b * &rhs.b,
            &self.a * &rhs.b + &self.b * &rhs.a,
        )
    }
}

impl MulAssign for Sqrt2Rational {
    fn mul_assign(&mut self, rhs: Sqrt2Rational) {
        *self = &*self * &rhs;
    }
}

impl Div for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn div(self, rhs: Sqrt2Rational) -> Sqrt2Rational {
        &self * &rhs.inv()
    }
}

impl Neg for Sqrt2Rational {
    type Output = Sqrt2Rational;
    fn neg(self) -> Sqrt2Rational {
        Sqrt2Rational::new(-self.a, -self.b)
    }
}

impl fmt::Display for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.b.is_zero() {
            return write!(f, "{}", self.a);
        }
        let root = if self.b.is_one() {
            "√2".to_string()
        } else if (-&self.b).is_one() {
            "-√2".to_string()
        } else {
            format!("{}√2", self.b)
        };
        if self.a.is_zero() {
            write!(f, "{root}")
        } else if self.b.is_negative() {
            write!(f, "{}{root}", self.a)
        } else {
            write!(f, "{}+{root}", self.a)
        }
    }
}

impl fmt::Debug for Sqrt2Rational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}
