//! Exact Gaussian-rational scalars.
//!
//! Every number in this crate is a complex number whose real and imaginary
//! parts are arbitrary-precision rationals. There is no floating point
//! anywhere, so equality of scalars, matrices and subspaces is decidable
//! and tolerance-free.

use std::fmt;
use std::ops::{Add, AddAssign, Div, Mul, MulAssign, Neg, Sub, SubAssign};

use num::{BigInt, BigRational, One, Signed, Zero};

/// Arbitrary-precision real rational, kept in lowest terms with positive
/// denominator by the underlying representation.
pub type Rational = BigRational;

/// A complex number `re + im*i` with exact rational components.
#[derive(Clone, PartialEq, Eq, Hash)]
pub struct GaussianRational {
    re: Rational,
    im: Rational,
}

impl GaussianRational {
    pub fn new(re: Rational, im: Rational) -> Self {
        GaussianRational { re, im }
    }

    pub fn zero() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::zero(),
        }
    }

    pub fn one() -> Self {
        GaussianRational {
            re: Rational::one(),
            im: Rational::zero(),
        }
    }

    /// The imaginary unit.
    pub fn i() -> Self {
        GaussianRational {
            re: Rational::zero(),
            im: Rational::one(),
        }
    }

    pub fn from_int(n: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(n)),
            im: Rational::zero(),
        }
    }

    /// Exact fraction `p/q`. Panics if `q == 0`.
    pub fn from_fraction(p: i64, q: i64) -> Self {
        assert!(q != 0, "zero denominator");
        GaussianRational {
            re: Rational::new(BigInt::from(p), BigInt::from(q)),
            im: Rational::zero(),
        }
    }

    pub fn from_real(re: Rational) -> Self {
        GaussianRational {
            re,
            im: Rational::zero(),
        }
    }

    /// `re + im*i` from integer parts.
    pub fn from_parts(re: i64, im: i64) -> Self {
        GaussianRational {
            re: Rational::from_integer(BigInt::from(re)),
            im: Rational::from_integer(BigInt::from(im)),
        }
    }

    pub fn re(&self) -> &Rational {
        &self.re
    }

    pub fn im(&self) -> &Rational {
        &self.im
    }

    pub fn is_zero(&self) -> bool {
        self.re.is_zero() && self.im.is_zero()
    }

    pub fn is_one(&self) -> bool {
        self.re.is_one() && self.im.is_zero()
    }

    pub fn is_real(&self) -> bool {
        self.im.is_zero()
    }

    pub fn conj(&self) -> Self {
        GaussianRational {
            re: self.re.clone(),
            im: -self.im.clone(),
        }
    }

    /// Multiplicative inverse. Panics on zero; callers guard with `is_zero`.
    pub fn inv(&self) -> Self {
        assert!(!self.is_zero(), "division by zero");
        let norm = &self.re * &self.re + &self.im * &self.im;
        GaussianRational {
            re: &self.re / &norm,
            im: -&self.im / &norm,
        }
    }

    /// Multiplication by i, cheaper than `self * i()`.
    pub fn times_i(&self) -> Self {
        GaussianRational {
            re: -self.im.clone(),
            im: self.re.clone(),
        }
    }
}

impl Default for GaussianRational {
    fn default() -> Self {
        GaussianRational::zero()
    }
}

impl Add for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re + rhs.re,
            im: self.im + rhs.im,
        }
    }
}

impl<'a> Add<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn add(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re + &rhs.re,
            im: self.im + &rhs.im,
        }
    }
}

impl AddAssign<&GaussianRational> for GaussianRational {
    fn add_assign(&mut self, rhs: &GaussianRational) {
        self.re += &rhs.re;
        self.im += &rhs.im;
    }
}

impl Sub for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: Self) -> Self {
        GaussianRational {
            re: self.re - rhs.re,
            im: self.im - rhs.im,
        }
    }
}

impl<'a> Sub<&'a GaussianRational> for GaussianRational {
    type Output = GaussianRational;
    fn sub(self, rhs: &'a GaussianRational) -> GaussianRational {
        GaussianRational {
            re: self.re - &rhs.re,
            im: self.im - &rhs.im,
        }
    }
}

impl SubAssign<&GaussianRational> for GaussianRational {
    fn sub_assign(&mut self, rhs: &GaussianRational) {
        self.re -= &rhs.re;
        self.im -= &rhs.im;
    }
}

impl Mul for GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: Self) -> Self {
        (&self).mul(&rhs)
    }
}

impl<'a, 'b> Mul<&'b GaussianRational> for &'a GaussianRational {
    type Output = GaussianRational;
    fn mul(self, rhs: &'b GaussianRational) -> GaussianRational {
        GaussianRational {
            re: &self.re * &rhs.re - &self.im * &rhs.im,
            im: &self.re * &rhs.im + &self.im * &rhs.re,
        }
    }
}

impl MulAssign<&GaussianRational> for GaussianRational {
    fn mul_assign(&mut self, rhs: &GaussianRational) {
        *self = (&*self).mul(rhs);
    }
}

impl Div for GaussianRational {
    type Output = GaussianRational;
    fn div(self, rhs: Self) -> Self {
        (&self).mul(&rhs.inv())
    }
}

impl Neg for GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> Self {
        GaussianRational {
            re: -self.re,
            im: -self.im,
        }
    }
}

impl<'a> Neg for &'a GaussianRational {
    type Output = GaussianRational;
    fn neg(self) -> GaussianRational {
        GaussianRational {
            re: -self.re.clone(),
            im: -self.im.clone(),
        }
    }
}

/// Renders a real rational as `p` or `p/q`.
pub fn format_rational(r: &Rational) -> String {
    if r.denom().is_one() {
        r.numer().to_string()
    } else {
        format!("{}/{}", r.numer(), r.denom())
    }
}

impl fmt::Display for GaussianRational {
    /// Exact text form: `p/q`, `p/q+r/s i`, `p/q-r/s i`, `r/s i`, or `0`.
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_zero() {
            return write!(f, "0");
        }
        if self.im.is_zero() {
            return write!(f, "{}", format_rational(&self.re));
        }
        let im_mag = self.im.abs();
        let im_txt = if im_mag.is_one() {
            "i".to_string()
        } else {
            format!("{} i", format_rational(&im_mag))
        };
        if self.re.is_zero() {
            return if self.im.is_negative() {
                write!(f, "-{im_txt}")
            } else {
                write!(f, "{im_txt}")
            };
        }
        let sign = if self.im.is_negative() { '-' } else { '+' };
        write!(f, "{}{}{}", format_rational(&self.re), sign, im_txt)
    }
}

impl fmt::Debug for GaussianRational {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{self}")
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn g(re: i64, im: i64) -> GaussianRational {
        GaussianRational::from_parts(re, im)
    }

    #[test]
    fn field_axioms_on_samples() {
        let a = g(3, -2);
        let b = GaussianRational::from_fraction(1, 2) + GaussianRational::i();
        let c = g(-1, 5);
        assert_eq!(
            (a.clone() + b.clone()) + c.clone(),
            a.clone() + (b.clone() + c.clone())
        );
        assert_eq!(&a * &b, &b * &a);
        let ab_c = &(&a * &b) * &c;
        let a_bc = &a * &(&b * &c);
        assert_eq!(ab_c, a_bc);
        let dist = &a * &(b.clone() + &c);
        assert_eq!(dist, &a * &b + &(&a * &c));
    }

    #[test]
    fn inverse_and_conjugate() {
        let a = g(3, 4);
        assert!((a.clone() * a.inv()).is_one());
        assert_eq!(a.conj().conj(), a);
        let n = a.clone() * a.conj();
        assert_eq!(n, g(25, 0));
        assert!(GaussianRational::i().times_i() == g(-1, 0));
    }

    #[test]
    fn display_exact_forms() {
        assert_eq!(g(0, 0).to_string(), "0");
        assert_eq!(GaussianRational::from_fraction(-3, 6).to_string(), "-1/2");
        assert_eq!(g(2, 1).to_string(), "2+i");
        assert_eq!(g(2, -3).to_string(), "2-3 i");
        assert_eq!(g(0, -1).to_string(), "-i");
        assert_eq!(
            (GaussianRational::from_fraction(1, 2)
                + GaussianRational::from_fraction(3, 4).times_i())
            .to_string(),
            "1/2+3/4 i"
        );
    }

    #[test]
    fn lowest_terms_kept_by_construction() {
        let a = GaussianRational::from_fraction(2, 4);
        assert_eq!(a.re().numer().to_string(), "1");
        assert_eq!(a.re().denom().to_string(), "2");
    }
}
