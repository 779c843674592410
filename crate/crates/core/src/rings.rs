//! Finite rings and fields of characteristic 2.
//!
//! Every element is stored as a small bit vector of coefficients over F2, so
//! equality is structural and the natural integer order of the bit vector is
//! the fixed enumeration order used everywhere else in the crate.
//!
//! | type        | ring                          | bits                       |
//! |-------------|-------------------------------|----------------------------|
//! | [`F2`]      | F2                            | `c0`                       |
//! | [`F4`]      | F2\[w\]/(w²+w+1)              | `c0 + c1 w`                |
//! | [`F8`]      | F2\[w\]/(w³+w+1)              | `c0 + c1 w + c2 w²`        |
//! | [`F16`]     | F2\[w\]/(w⁴+w+1), a field     | `c0 + … + c3 w³`           |
//! | [`F16Alt`]  | F2\[w\]/(w⁴+w²+1), not a field| `c0 + … + c3 w³`           |
//! | [`F2i`]     | F2\[i\], i² = 1               | `a + b i`                  |
//! | [`F4i`]     | F4\[i\] = F2\[i\]\[w\]/(w²+w+1) | `a + b w`, `a, b ∈ F2[i]`  |
//!
//! `F16Alt` exists because the explicit 4×4 isomorphism tables are stated
//! for the polynomial w⁴+w²+1 = (w²+w+1)², which does not define a field.
//! Arithmetic that needs a field uses [`F16`].

#![allow(clippy::suspicious_arithmetic_impl, clippy::suspicious_op_assign_impl)]

use std::fmt;
use std::hash::Hash;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use crate::parse::{parse_ring_expr, ParseError};

/// A finite ring with a fixed, enumerable element order.
///
/// Multiplication need not be commutative (matrix rings and cyclic algebras
/// implement this trait too); see [`CommutativeRing`].
pub trait Ring:
    Copy
    + Eq
    + Ord
    + Hash
    + fmt::Debug
    + fmt::Display
    + Send
    + Sync
    + 'static
    + Add<Output = Self>
    + Sub<Output = Self>
    + Neg<Output = Self>
    + Mul<Output = Self>
    + AddAssign
    + SubAssign
    + MulAssign
{
    /// Short lowercase identifier, as accepted on the command line.
    const NAME: &'static str;
    /// Number of elements, saturating at `usize::MAX`.
    const ORDER: usize;

    fn zero() -> Self;
    fn one() -> Self;

    /// The element at position `index` of the enumeration order.
    ///
    /// Panics if `index >= ORDER`.
    fn from_index(index: usize) -> Self;

    /// Position of `self` in the enumeration order.
    fn index(self) -> usize;

    fn elements() -> impl Iterator<Item = Self> {
        (0..Self::ORDER).map(Self::from_index)
    }

    fn is_zero(self) -> bool {
        self == Self::zero()
    }

    /// Two-sided inverse found by search. Implementors with a cheaper test
    /// override this.
    fn inverse(self) -> Option<Self> {
        let one = Self::one();
        Self::elements().find(|&y| self * y == one && y * self == one)
    }

    fn is_unit(self) -> bool {
        self.inverse().is_some()
    }

    fn pow(self, mut exp: u64) -> Self {
        let mut base = self;
        let mut acc = Self::one();
        while exp > 0 {
            if exp & 1 == 1 {
                acc *= base;
            }
            base *= base;
            exp >>= 1;
        }
        acc
    }
}

/// Marker for rings whose multiplication commutes.
pub trait CommutativeRing: Ring {}

/// The generator σ of the cyclic Galois action used to build cyclic algebras.
///
/// For the binary polynomial rings this is w ↦ w² (squaring, the Frobenius
/// map); for `F4i` it is w ↦ w² with `i` fixed, i.e. the F2\[i\]-linear
/// conjugation a + bw ↦ (a+b) + bw.
pub trait GaloisGenerator: CommutativeRing {
    /// Order of σ on the ring when it is a genuine cyclic extension.
    const DEGREE: u32;
    fn sigma(self) -> Self;

    fn sigma_pow(self, k: u32) -> Self {
        (0..k).fold(self, |x, _| x.sigma())
    }
}

/// A finite field F_{2^m}.
pub trait Field: GaloisGenerator {
    /// Multiplicative inverse; `None` only for zero.
    fn inv(self) -> Option<Self> {
        if self.is_zero() {
            None
        } else {
            // x^(q-2) = x^-1 in F_q
            Some(self.pow(Self::ORDER as u64 - 2))
        }
    }
}

/// Frobenius automorphism x ↦ x² of a binary field.
pub fn frobenius<F: Field>(x: F) -> F {
    x.sigma()
}

/// Rings accepted by the expression parser: every element is a polynomial
/// expression in the named generators.
pub trait Symbolic: Ring {
    /// Value of a generator symbol such as `w` or `i`.
    fn symbol(name: char) -> Option<Self>;
}

/// Rings presented as R\[w\]/(w²+w+1) over a base ring R, with
/// coordinates `a + b w`. Used by the pair-to-matrix maps.
pub trait OmegaCoords: CommutativeRing {
    type Base: CommutativeRing;
    fn split(self) -> (Self::Base, Self::Base);
    fn join(a: Self::Base, b: Self::Base) -> Self;
}

/// Multiply two binary polynomials (as bit vectors) and reduce modulo
/// `modulus` of degree `degree`.
const fn poly_mul_mod(a: u8, b: u8, modulus: u16, degree: u32) -> u8 {
    let mut acc: u16 = 0;
    let mut i = 0;
    while i < 8 {
        if (b >> i) & 1 == 1 {
            acc ^= (a as u16) << i;
        }
        i += 1;
    }
    let mut bit = 15;
    while bit >= degree {
        if (acc >> bit) & 1 == 1 {
            acc ^= modulus << (bit - degree);
        }
        bit -= 1;
    }
    acc as u8
}

fn write_binary_poly(f: &mut fmt::Formatter<'_>, bits: u8, degree: u32) -> fmt::Result {
    if bits == 0 {
        return f.write_str("0");
    }
    let mut first = true;
    for k in (0..degree).rev() {
        if (bits >> k) & 1 == 0 {
            continue;
        }
        if !first {
            f.write_str("+")?;
        }
        first = false;
        match k {
            0 => f.write_str("1")?,
            1 => f.write_str("w")?,
            _ => write!(f, "w^{k}")?,
        }
    }
    Ok(())
}

macro_rules! binary_poly_ring {
    ($(#[$doc:meta])* $name:ident, $id:literal, $degree:literal, $modulus:literal) => {
        $(#[$doc])*
        #[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
        pub struct $name(u8);

        impl $name {
            pub const DEGREE: u32 = $degree;
            /// Defining polynomial as a bit vector (bit k = coefficient of w^k).
            pub const MODULUS: u16 = $modulus;
            const MASK: u8 = ((1u16 << $degree) - 1) as u8;

            /// Element with the given coefficient bits; higher bits must be zero.
            pub const fn new(bits: u8) -> Self {
                assert!(bits & !Self::MASK == 0, "coefficient bits out of range");
                Self(bits)
            }

            pub const fn bits(self) -> u8 {
                self.0
            }

            /// The generator `w`.
            pub const fn w() -> Self {
                Self(2 & Self::MASK)
            }

            /// Coefficient of w^k.
            pub fn coefficient(self, k: u32) -> F2 {
                F2((self.0 >> k) & 1)
            }

            pub fn from_coefficients(coeffs: &[F2]) -> Self {
                assert!(coeffs.len() <= $degree as usize);
                Self(coeffs.iter().enumerate().fold(0u8, |acc, (k, c)| acc | (c.0 << k)))
            }
        }

        impl Add for $name {
            type Output = Self;
            fn add(self, rhs: Self) -> Self {
                Self(self.0 ^ rhs.0)
            }
        }

        impl Sub for $name {
            type Output = Self;
            fn sub(self, rhs: Self) -> Self {
                Self(self.0 ^ rhs.0)
            }
        }

        impl Neg for $name {
            type Output = Self;
            fn neg(self) -> Self {
                self
            }
        }

        impl Mul for $name {
            type Output = Self;
            fn mul(self, rhs: Self) -> Self {
                Self(poly_mul_mod(self.0, rhs.0, $modulus, $degree))
            }
        }

        impl AddAssign for $name {
            fn add_assign(&mut self, rhs: Self) {
                *self = *self + rhs;
            }
        }

        impl SubAssign for $name {
            fn sub_assign(&mut self, rhs: Self) {
                *self = *self - rhs;
            }
        }

        impl MulAssign for $name {
            fn mul_assign(&mut self, rhs: Self) {
                *self = *self * rhs;
            }
        }

        impl Ring for $name {
            const NAME: &'static str = $id;
            const ORDER: usize = 1 << $degree;

            fn zero() -> Self {
                Self(0)
            }

            fn one() -> Self {
                Self(1)
            }

            fn from_index(index: usize) -> Self {
                assert!(index < Self::ORDER, "index {index} out of range for {}", $id);
                Self(index as u8)
            }

            fn index(self) -> usize {
                self.0 as usize
            }
        }

        impl CommutativeRing for $name {}

        impl GaloisGenerator for $name {
            const DEGREE: u32 = $degree;
            fn sigma(self) -> Self {
                self * self
            }
        }

        impl Symbolic for $name {
            fn symbol(name: char) -> Option<Self> {
                (name == 'w').then(Self::w)
            }
        }

        impl fmt::Display for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write_binary_poly(f, self.0, $degree)
            }
        }

        impl fmt::Debug for $name {
            fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
                write!(f, "{}({})", $id, self)
            }
        }

        impl FromStr for $name {
            type Err = ParseError;
            fn from_str(s: &str) -> Result<Self, ParseError> {
                parse_ring_expr(s)
            }
        }
    };
}

binary_poly_ring!(
    /// The field F4 = F2(w), w² + w + 1 = 0.
    F4, "f4", 2, 0b111
);
binary_poly_ring!(
    /// The field F8 = F2(w), w³ + w + 1 = 0.
    F8, "f8", 3, 0b1011
);
binary_poly_ring!(
    /// The field F16 = F2(w), w⁴ + w + 1 = 0.
    F16, "f16", 4, 0b10011
);
binary_poly_ring!(
    /// The ring F2\[w\]/(w⁴ + w² + 1). The modulus is (w² + w + 1)², so this
    /// ring has nilpotents and is not a field.
    F16Alt, "f16alt", 4, 0b10101
);

impl Field for F4 {}
impl Field for F8 {}
impl Field for F16 {}

/// The prime field F2.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2(u8);

impl F2 {
    pub const ZERO: F2 = F2(0);
    pub const ONE: F2 = F2(1);

    pub const fn new(bit: u8) -> Self {
        assert!(bit < 2);
        Self(bit)
    }

    pub const fn bit(self) -> u8 {
        self.0
    }
}

impl From<bool> for F2 {
    fn from(b: bool) -> Self {
        F2(b as u8)
    }
}

impl Add for F2 {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        F2(self.0 ^ rhs.0)
    }
}

impl Sub for F2 {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        F2(self.0 ^ rhs.0)
    }
}

impl Neg for F2 {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for F2 {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        F2(self.0 & rhs.0)
    }
}

impl AddAssign for F2 {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl SubAssign for F2 {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl MulAssign for F2 {
    fn mul_assign(&mut self, rhs: Self) {
        self.0 &= rhs.0;
    }
}

impl Ring for F2 {
    const NAME: &'static str = "f2";
    const ORDER: usize = 2;

    fn zero() -> Self {
        F2(0)
    }

    fn one() -> Self {
        F2(1)
    }

    fn from_index(index: usize) -> Self {
        assert!(index < 2, "index {index} out of range for f2");
        F2(index as u8)
    }

    fn index(self) -> usize {
        self.0 as usize
    }

    fn inverse(self) -> Option<Self> {
        (self.0 == 1).then_some(self)
    }
}

impl CommutativeRing for F2 {}

impl GaloisGenerator for F2 {
    const DEGREE: u32 = 1;
    fn sigma(self) -> Self {
        self
    }
}

impl Field for F2 {
    fn inv(self) -> Option<Self> {
        self.inverse()
    }
}

impl Symbolic for F2 {
    fn symbol(_: char) -> Option<Self> {
        None
    }
}

impl fmt::Display for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "{}", self.0)
    }
}

impl fmt::Debug for F2 {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f2({})", self.0)
    }
}

impl FromStr for F2 {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_ring_expr(s)
    }
}

/// The ring F2\[i\] = F2\[x\]/(x² + 1), stored as `a + b i` with bit 0 = a,
/// bit 1 = b. In characteristic 2, i² = 1 and (1+i)² = 0.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F2i(u8);

impl F2i {
    pub const ZERO: F2i = F2i(0);
    pub const ONE: F2i = F2i(1);
    pub const I: F2i = F2i(2);
    pub const ONE_PLUS_I: F2i = F2i(3);

    pub const fn new(re: u8, im: u8) -> Self {
        assert!(re < 2 && im < 2);
        Self(re | (im << 1))
    }

    pub const fn re(self) -> u8 {
        self.0 & 1
    }

    pub const fn im(self) -> u8 {
        self.0 >> 1
    }

    pub const fn bits(self) -> u8 {
        self.0
    }
}

impl Add for F2i {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        F2i(self.0 ^ rhs.0)
    }
}

impl Sub for F2i {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        F2i(self.0 ^ rhs.0)
    }
}

impl Neg for F2i {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for F2i {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bi)(c + di) = (ac + bd) + (ad + bc)i, using i² = 1
        let (a, b, c, d) = (self.re(), self.im(), rhs.re(), rhs.im());
        F2i::new((a & c) ^ (b & d), (a & d) ^ (b & c))
    }
}

impl AddAssign for F2i {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl SubAssign for F2i {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl MulAssign for F2i {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Ring for F2i {
    const NAME: &'static str = "f2i";
    const ORDER: usize = 4;

    fn zero() -> Self {
        F2i(0)
    }

    fn one() -> Self {
        F2i(1)
    }

    fn from_index(index: usize) -> Self {
        assert!(index < 4, "index {index} out of range for f2i");
        F2i(index as u8)
    }

    fn index(self) -> usize {
        self.0 as usize
    }

    fn inverse(self) -> Option<Self> {
        // units are exactly 1 and i, both self-inverse
        matches!(self.0, 1 | 2).then_some(self)
    }
}

impl CommutativeRing for F2i {}

impl Symbolic for F2i {
    fn symbol(name: char) -> Option<Self> {
        (name == 'i').then_some(F2i::I)
    }
}

impl fmt::Display for F2i {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self.0 {
            0 => "0",
            1 => "1",
            2 => "i",
            _ => "1+i",
        })
    }
}

impl fmt::Debug for F2i {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f2i({self})")
    }
}

impl FromStr for F2i {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_ring_expr(s)
    }
}

/// The ring F4\[i\], stored as `a + b w` with `a, b ∈ F2[i]` (low two bits
/// hold `a`, high two bits hold `b`) and w² = w + 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Default)]
pub struct F4i(u8);

impl F4i {
    pub const fn new(a: F2i, b: F2i) -> Self {
        Self(a.0 | (b.0 << 2))
    }

    pub const fn a(self) -> F2i {
        F2i(self.0 & 3)
    }

    pub const fn b(self) -> F2i {
        F2i(self.0 >> 2)
    }

    pub fn w() -> Self {
        Self::new(F2i::ZERO, F2i::ONE)
    }

    pub fn i() -> Self {
        Self::new(F2i::I, F2i::ZERO)
    }

    /// Embedding of F4 (coefficients taken in F2 ⊂ F2\[i\]).
    pub fn from_f4(x: F4) -> Self {
        Self::new(F2i::new(x.coefficient(0).0, 0), F2i::new(x.coefficient(1).0, 0))
    }

    /// Embedding of F2\[i\] as constants.
    pub fn from_f2i(x: F2i) -> Self {
        Self::new(x, F2i::ZERO)
    }
}

impl Add for F4i {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        F4i(self.0 ^ rhs.0)
    }
}

impl Sub for F4i {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        F4i(self.0 ^ rhs.0)
    }
}

impl Neg for F4i {
    type Output = Self;
    fn neg(self) -> Self {
        self
    }
}

impl Mul for F4i {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        // (a + bw)(c + dw) = (ac + bd) + (ad + bc + bd)w, using w² = w + 1
        let (a, b, c, d) = (self.a(), self.b(), rhs.a(), rhs.b());
        let bd = b * d;
        F4i::new(a * c + bd, a * d + b * c + bd)
    }
}

impl AddAssign for F4i {
    fn add_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl SubAssign for F4i {
    fn sub_assign(&mut self, rhs: Self) {
        self.0 ^= rhs.0;
    }
}

impl MulAssign for F4i {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl Ring for F4i {
    const NAME: &'static str = "f4i";
    const ORDER: usize = 16;

    fn zero() -> Self {
        F4i(0)
    }

    fn one() -> Self {
        F4i(1)
    }

    fn from_index(index: usize) -> Self {
        assert!(index < 16, "index {index} out of range for f4i");
        F4i(index as u8)
    }

    fn index(self) -> usize {
        self.0 as usize
    }
}

impl CommutativeRing for F4i {}

impl GaloisGenerator for F4i {
    const DEGREE: u32 = 2;
    fn sigma(self) -> Self {
        // a + b w ↦ a + b w² = (a + b) + b w
        F4i::new(self.a() + self.b(), self.b())
    }
}

impl Symbolic for F4i {
    fn symbol(name: char) -> Option<Self> {
        match name {
            'w' => Some(F4i::w()),
            'i' => Some(F4i::i()),
            _ => None,
        }
    }
}

impl OmegaCoords for F4 {
    type Base = F2;
    fn split(self) -> (F2, F2) {
        (self.coefficient(0), self.coefficient(1))
    }
    fn join(a: F2, b: F2) -> Self {
        F4::from_coefficients(&[a, b])
    }
}

impl OmegaCoords for F4i {
    type Base = F2i;
    fn split(self) -> (F2i, F2i) {
        (self.a(), self.b())
    }
    fn join(a: F2i, b: F2i) -> Self {
        F4i::new(a, b)
    }
}

impl fmt::Display for F4i {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let (a, b) = (self.a(), self.b());
        if b.is_zero() {
            return write!(f, "{a}");
        }
        if !a.is_zero() {
            write!(f, "{a}+")?;
        }
        match b.0 {
            1 => f.write_str("w"),
            2 => f.write_str("iw"),
            _ => f.write_str("(1+i)w"),
        }
    }
}

impl fmt::Debug for F4i {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "f4i({self})")
    }
}

impl FromStr for F4i {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        parse_ring_expr(s)
    }
}

/// Relative norm F4\[i\] → F2\[i\]: N(a + bw) = (a + bw)(a + bw²) = a² + ab + b².
pub fn norm_f4i(x: F4i) -> F2i {
    let (a, b) = (x.a(), x.b());
    a * a + a * b + b * b
}

/// Norm F4 → F2: N(a + bw) = a² + ab + b².
pub fn norm_f4(x: F4) -> F2 {
    let (a, b) = x.split();
    a * a + a * b + b * b
}

/// Ring identifiers accepted by the CLI and the code file format.
#[derive(Clone, Copy, Debug, PartialEq, Eq, Hash)]
pub enum RingId {
    F2,
    F4,
    F8,
    F16,
    F16Alt,
    F2i,
    F4i,
}

impl RingId {
    pub const ALL: [RingId; 7] =
        [RingId::F2, RingId::F4, RingId::F8, RingId::F16, RingId::F16Alt, RingId::F2i, RingId::F4i];

    pub fn name(self) -> &'static str {
        match self {
            RingId::F2 => F2::NAME,
            RingId::F4 => F4::NAME,
            RingId::F8 => F8::NAME,
            RingId::F16 => F16::NAME,
            RingId::F16Alt => F16Alt::NAME,
            RingId::F2i => F2i::NAME,
            RingId::F4i => F4i::NAME,
        }
    }

    pub fn order(self) -> usize {
        match self {
            RingId::F2 => F2::ORDER,
            RingId::F4 => F4::ORDER,
            RingId::F8 => F8::ORDER,
            RingId::F16 => F16::ORDER,
            RingId::F16Alt => F16Alt::ORDER,
            RingId::F2i => F2i::ORDER,
            RingId::F4i => F4i::ORDER,
        }
    }
}

impl fmt::Display for RingId {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(self.name())
    }
}

impl FromStr for RingId {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        RingId::ALL
            .into_iter()
            .find(|r| r.name().eq_ignore_ascii_case(s.trim()))
            .ok_or_else(|| ParseError::UnknownRing(s.to_string()))
    }
}

#[cfg(test)]
mod tests {
    use super::*;

    fn f4(s: &str) -> F4 {
        s.parse().unwrap()
    }

    #[test]
    fn f4_omega_squared() {
        assert_eq!(F4::w() * F4::w(), f4("w+1"));
    }

    #[test]
    fn f4_multiplication_table() {
        // exhaustive table derived from w² = w + 1
        let table = [["0", "0", "0", "0"], ["0", "1", "w", "w+1"], ["0", "w", "w+1", "1"], ["0", "w+1", "1", "w"]];
        for (x, row) in F4::elements().zip(table) {
            for (y, expected) in F4::elements().zip(row) {
                assert_eq!((x * y).to_string(), expected, "{x} * {y}");
            }
        }
        assert_eq!(F4::w() * f4("w+1"), F4::one());
    }

    #[test]
    fn zero_annihilates() {
        fn check<R: Ring>() {
            assert!(R::elements().all(|x| R::zero() * x == R::zero() && x * R::zero() == R::zero()));
        }
        check::<F2>();
        check::<F4>();
        check::<F8>();
        check::<F16>();
        check::<F16Alt>();
        check::<F2i>();
        check::<F4i>();
    }

    #[test]
    fn ring_axioms_hold_exhaustively() {
        fn check<R: CommutativeRing>() {
            for x in R::elements() {
                for y in R::elements() {
                    assert_eq!(x * y, y * x);
                    for z in R::elements() {
                        assert_eq!((x * y) * z, x * (y * z), "{x} {y} {z}");
                        assert_eq!(x * (y + z), x * y + x * z);
                    }
                }
            }
        }
        check::<F4>();
        check::<F8>();
        check::<F16>();
        check::<F16Alt>();
        check::<F2i>();
        check::<F4i>();
    }

    #[test]
    fn defining_relations() {
        let w8 = F8::w();
        assert_eq!(w8.pow(3) + w8 + F8::one(), F8::zero());
        let w16 = F16::w();
        assert_eq!(w16.pow(4) + w16 + F16::one(), F16::zero());
        let w = F16Alt::w();
        assert_eq!(w.pow(4) + w.pow(2) + F16Alt::one(), F16Alt::zero());
    }

    #[test]
    fn fields_have_inverses_and_fixed_points() {
        fn check<F: Field>() {
            for x in F::elements() {
                assert_eq!(x.pow(F::ORDER as u64), x);
                if !x.is_zero() {
                    let y = x.inv().unwrap();
                    assert_eq!(x * y, F::one());
                    assert!(x.is_unit());
                }
            }
            assert_eq!(F::zero().inv(), None);
        }
        check::<F2>();
        check::<F4>();
        check::<F8>();
        check::<F16>();
    }

    #[test]
    fn f16_alt_is_not_a_field() {
        // (w² + w + 1)² = 0
        let n: F16Alt = "w^2+w+1".parse().unwrap();
        assert!(!n.is_zero());
        assert_eq!(n * n, F16Alt::zero());
        assert!(!n.is_unit());
        let units = F16Alt::elements().filter(|x| x.is_unit()).count();
        assert_eq!(units, 12);
    }

    #[test]
    fn frobenius_examples() {
        assert_eq!(frobenius(F8::w()), F8::w() * F8::w());
        assert_eq!(frobenius(F8::zero()), F8::zero());
        assert_eq!(frobenius(frobenius(F4::w())), F4::w());
    }

    #[test]
    fn frobenius_is_an_automorphism_of_order_degree() {
        fn check<F: Field>() {
            for x in F::elements() {
                assert_eq!(x.sigma_pow(F::DEGREE), x);
                for y in F::elements() {
                    assert_eq!((x + y).sigma(), x.sigma() + y.sigma());
                    assert_eq!((x * y).sigma(), x.sigma() * y.sigma());
                }
            }
        }
        check::<F4>();
        check::<F8>();
        check::<F16>();
    }

    #[test]
    fn f2i_structure() {
        assert_eq!(F2i::I * F2i::I, F2i::ONE);
        assert_eq!(F2i::ONE_PLUS_I * F2i::ONE_PLUS_I, F2i::ZERO);
        let units: Vec<_> = F2i::elements().filter(|x| x.is_unit()).collect();
        assert_eq!(units, vec![F2i::ONE, F2i::I]);
        // search agrees with the closed-form override
        for x in F2i::elements() {
            let searched = F2i::elements().any(|y| x * y == F2i::ONE);
            assert_eq!(searched, x.is_unit());
        }
    }

    #[test]
    fn f4i_units() {
        let one_plus_i = F4i::from_f2i(F2i::ONE_PLUS_I);
        assert!(!one_plus_i.is_unit());
        assert!(F4i::i().is_unit());
        assert!(!F4i::zero().is_unit());

        let non_units: Vec<F4i> = F4i::elements().filter(|x| !x.is_unit()).collect();
        let expected: Vec<F4i> = F4::elements().map(|a| F4i::from_f4(a) * one_plus_i).collect();
        let mut sorted = expected.clone();
        sorted.sort();
        assert_eq!(non_units, sorted);
        assert_eq!(F4i::elements().filter(|x| x.is_unit()).count(), 12);

        // a non-unit times anything is never 1
        for x in &non_units {
            assert!(F4i::elements().all(|y| *x * y != F4i::one()));
        }
    }

    #[test]
    fn norm_examples() {
        assert_eq!(norm_f4i(F4i::one()), F2i::ONE);
        let x: F4i = "1+iw".parse().unwrap();
        assert_eq!(norm_f4i(x), F2i::I);
        let y: F4i = "(1+i)w".parse().unwrap();
        assert_eq!(norm_f4i(y), F2i::ZERO);
    }

    #[test]
    fn norm_is_multiplicative_and_misses_one_plus_i() {
        for x in F4i::elements() {
            for y in F4i::elements() {
                assert_eq!(norm_f4i(x * y), norm_f4i(x) * norm_f4i(y));
            }
        }
        let range: std::collections::BTreeSet<F2i> = F4i::elements().map(norm_f4i).collect();
        assert_eq!(range.into_iter().collect::<Vec<_>>(), vec![F2i::ZERO, F2i::ONE, F2i::I]);
        // the norm vanishes exactly on non-units
        for x in F4i::elements() {
            assert_eq!(norm_f4i(x).is_zero(), !x.is_unit());
        }
    }

    #[test]
    fn norm_is_product_with_conjugate() {
        for x in F4i::elements() {
            assert_eq!(F4i::from_f2i(norm_f4i(x)), x * x.sigma());
        }
        for x in F4::elements() {
            assert_eq!(F4::from_coefficients(&[norm_f4(x)]), x * x.sigma());
        }
    }

    #[test]
    fn display_forms() {
        assert_eq!(F8::new(0b101).to_string(), "w^2+1");
        assert_eq!(F4i::new(F2i::ZERO, F2i::ONE_PLUS_I).to_string(), "(1+i)w");
        assert_eq!(F4i::new(F2i::ONE, F2i::I).to_string(), "1+iw");
        assert_eq!(F16::zero().to_string(), "0");
    }

    #[test]
    fn display_parse_round_trip() {
        fn check<R: Symbolic + FromStr<Err = ParseError>>() {
            for x in R::elements() {
                assert_eq!(x.to_string().parse::<R>().unwrap(), x);
            }
        }
        check::<F2>();
        check::<F4>();
        check::<F8>();
        check::<F16>();
        check::<F16Alt>();
        check::<F2i>();
        check::<F4i>();
    }

    #[test]
    fn ring_ids_parse() {
        assert_eq!("F4i".parse::<RingId>().unwrap(), RingId::F4i);
        assert!("f32".parse::<RingId>().is_err());
        for r in RingId::ALL {
            assert_eq!(r.name().parse::<RingId>().unwrap(), r);
        }
    }
}
