//! Exact real numbers r + s·√D with rational r, s.

use std::cmp::Ordering;
use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};

use num_rational::Rational64;

/// r + s·√D for a fixed non-square `D > 0`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct Surd<const D: i64> {
    pub rat: Rational64,
    pub surd: Rational64,
}

pub type Sqrt2Value = Surd<2>;
pub type Sqrt5Value = Surd<5>;

impl<const D: i64> Surd<D> {
    pub fn new(rat: Rational64, surd: Rational64) -> Self {
        Self { rat, surd }
    }

    pub fn rational(rat: Rational64) -> Self {
        Self { rat, surd: Rational64::from_integer(0) }
    }

    pub fn from_integer(n: i64) -> Self {
        Self::rational(Rational64::from_integer(n))
    }

    /// √D itself.
    pub fn root() -> Self {
        Self { rat: Rational64::from_integer(0), surd: Rational64::from_integer(1) }
    }

    pub fn is_rational(&self) -> bool {
        *self.surd.numer() == 0
    }

    pub fn signum(&self) -> Ordering {
        let zero = Rational64::from_integer(0);
        let (r, s) = (self.rat.cmp(&zero), self.surd.cmp(&zero));
        match (r, s) {
            (Ordering::Equal, _) => s,
            (_, Ordering::Equal) => r,
            _ if r == s => r,
            _ => {
                // opposite signs: compare r² with D s²
                let lhs = self.rat * self.rat;
                let rhs = self.surd * self.surd * Rational64::from_integer(D);
                if r == Ordering::Greater {
                    lhs.cmp(&rhs)
                } else {
                    rhs.cmp(&lhs)
                }
            }
        }
    }

    pub fn to_f64(&self) -> f64 {
        let f = |q: Rational64| *q.numer() as f64 / *q.denom() as f64;
        f(self.rat) + f(self.surd) * (D as f64).sqrt()
    }
}

impl<const D: i64> Add for Surd<D> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { rat: self.rat + rhs.rat, surd: self.surd + rhs.surd }
    }
}

impl<const D: i64> Sub for Surd<D> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { rat: self.rat - rhs.rat, surd: self.surd - rhs.surd }
    }
}

impl<const D: i64> Neg for Surd<D> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { rat: -self.rat, surd: -self.surd }
    }
}

impl<const D: i64> Mul for Surd<D> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let d = Rational64::from_integer(D);
        Self { rat: self.rat * rhs.rat + self.surd * rhs.surd * d, surd: self.rat * rhs.surd + self.surd * rhs.rat }
    }
}

impl<const D: i64> PartialOrd for Surd<D> {
    fn partial_cmp(&self, other: &Self) -> Option<Ordering> {
        Some(self.cmp(other))
    }
}

impl<const D: i64> Ord for Surd<D> {
    fn cmp(&self, other: &Self) -> Ordering {
        (*self - *other).signum()
    }
}

impl<const D: i64> fmt::Display for Surd<D> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.is_rational() {
            return write!(f, "{}", self.rat);
        }
        let one = Rational64::from_integer(1);
        let coeff = |s: Rational64| if s == one { String::new() } else { format!("{s}*") };
        if *self.rat.numer() == 0 {
            if self.surd == -one {
                return write!(f, "-sqrt{D}");
            }
            return write!(f, "{}sqrt{D}", coeff(self.surd));
        }
        if self.surd > Rational64::from_integer(0) {
            write!(f, "{}+{}sqrt{D}", self.rat, coeff(self.surd))
        } else if self.surd == -one {
            write!(f, "{}-sqrt{D}", self.rat)
        } else {
            write!(f, "{}-{}sqrt{D}", self.rat, coeff(-self.surd))
        }
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn q(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn ordering_near_root() {
        // 1.41 < √2 < 1.42
        let r2 = Sqrt2Value::root();
        assert!(Sqrt2Value::rational(q(141, 100)) < r2);
        assert!(Sqrt2Value::rational(q(142, 100)) > r2);
        assert_eq!((r2 * r2), Sqrt2Value::from_integer(2));
        assert!(Sqrt5Value::new(q(3, 1), q(-1, 1)) > Sqrt5Value::from_integer(0));
        assert!(Sqrt5Value::new(q(2, 1), q(-1, 1)) < Sqrt5Value::from_integer(0));
    }

    #[test]
    fn display() {
        assert_eq!(Sqrt2Value::rational(q(4, 5)).to_string(), "4/5");
        assert_eq!(Sqrt2Value::root().to_string(), "sqrt2");
        assert_eq!(Sqrt5Value::new(q(1, 2), q(-3, 2)).to_string(), "1/2-3/2*sqrt5");
    }

    proptest! {
        #[test]
        fn order_matches_floats(a in -50i64..50, b in -50i64..50, c in 1i64..20) {
            let x = Sqrt5Value::new(q(a, c), q(b, c));
            let f = x.to_f64();
            match x.signum() {
                Ordering::Greater => prop_assert!(f > 0.0),
                Ordering::Less => prop_assert!(f < 0.0),
                Ordering::Equal => prop_assert!(a == 0 && b == 0),
            }
        }
    }
}
