//! Exact Golden code arithmetic over Z\[i, θ\], θ² = θ + 1.
//!
//! A codeword (a, b, c, d) is the element x₀ + x₁e of the Golden order with
//! x₀ = a + bθ, x₁ = c + dθ, e² = i and eλ = σ(λ)e, where σ : θ ↦ 1 − θ.
//! Its matrix is (1/√5)·diag(α, ᾱ)·[[x₀, x₁], [iσ(x₁), σ(x₀)]].

use std::fmt;
use std::ops::{Add, Mul, Neg, Sub};
use std::str::FromStr;

use num_rational::Rational64;

use crate::cyclic::{psi, psi_inv};
use crate::exec::{min_option, Exec};
use crate::matrices::Matrix;
use crate::parse::{split_top_level, ParseError};
use crate::rings::{norm_f4i, F2i, F4i, OmegaCoords, Ring, F2, F4};
use crate::surd::Sqrt5Value;

/// Gaussian integer re + im·i. Arithmetic panics on i64 overflow.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GaussianInt {
    pub re: i64,
    pub im: i64,
}

fn checked(x: Option<i64>) -> i64 {
    x.expect("Gaussian integer overflow")
}

impl GaussianInt {
    pub const ZERO: Self = Self::new(0, 0);
    pub const ONE: Self = Self::new(1, 0);
    pub const I: Self = Self::new(0, 1);
    pub const ONE_PLUS_I: Self = Self::new(1, 1);

    pub const fn new(re: i64, im: i64) -> Self {
        Self { re, im }
    }

    pub fn conj(self) -> Self {
        Self::new(self.re, -self.im)
    }

    /// |z|² = re² + im².
    pub fn norm_sq(self) -> i64 {
        checked(self.re.checked_mul(self.re).and_then(|r| self.im.checked_mul(self.im).and_then(|i| r.checked_add(i))))
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Reduction Z\[i\] → Z\[i\]/(1+i) ≅ F2.
    pub fn mod_1pi(self) -> F2 {
        F2::new((self.re + self.im).rem_euclid(2) as u8)
    }

    /// Reduction Z\[i\] → Z\[i\]/(2) ≅ F2\[i\].
    pub fn mod_2(self) -> F2i {
        F2i::new(self.re.rem_euclid(2) as u8, self.im.rem_euclid(2) as u8)
    }
}

impl Add for GaussianInt {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(checked(self.re.checked_add(rhs.re)), checked(self.im.checked_add(rhs.im)))
    }
}

impl Sub for GaussianInt {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(checked(self.re.checked_sub(rhs.re)), checked(self.im.checked_sub(rhs.im)))
    }
}

impl Neg for GaussianInt {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.re, -self.im)
    }
}

impl Mul for GaussianInt {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let m = |a: i64, b: i64| checked(a.checked_mul(b));
        Self::new(
            checked(m(self.re, rhs.re).checked_sub(m(self.im, rhs.im))),
            checked(m(self.re, rhs.im).checked_add(m(self.im, rhs.re))),
        )
    }
}

impl From<i64> for GaussianInt {
    fn from(re: i64) -> Self {
        Self::new(re, 0)
    }
}

impl fmt::Display for GaussianInt {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let imag = |im: i64| match im {
            1 => "i".to_string(),
            -1 => "-i".to_string(),
            _ => format!("{im}i"),
        };
        match (self.re, self.im) {
            (re, 0) => write!(f, "{re}"),
            (0, im) => f.write_str(&imag(im)),
            (re, im) if im > 0 => write!(f, "{re}+{}", imag(im)),
            (re, im) => write!(f, "{re}{}", imag(im)),
        }
    }
}

impl FromStr for GaussianInt {
    type Err = ParseError;

    /// Accepts `3`, `-2i`, `i`, `1+i`, `2-3i`, `-1-i`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let s: String = s.chars().filter(|c| !c.is_whitespace()).collect();
        let bad = || ParseError::Other(format!("not a Gaussian integer: {s:?}"));
        if s.is_empty() {
            return Err(ParseError::Empty);
        }
        let int = |t: &str| t.parse::<i64>().map_err(|_| bad());
        let Some(body) = s.strip_suffix('i') else {
            return Ok(Self::new(int(&s)?, 0));
        };
        let split = body.rfind(['+', '-']).filter(|&k| k > 0);
        let (re, im) = match split {
            Some(k) => (int(&body[..k])?, &body[k..]),
            None => (0, body),
        };
        let im = match im {
            "" | "+" => 1,
            "-" => -1,
            t => int(t)?,
        };
        Ok(Self::new(re, im))
    }
}

/// u + vθ with u, v ∈ Z\[i\] and θ² = θ + 1.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct ZiTheta {
    pub u: GaussianInt,
    pub v: GaussianInt,
}

impl ZiTheta {
    pub const ZERO: Self = Self::new(GaussianInt::ZERO, GaussianInt::ZERO);
    pub const ONE: Self = Self::new(GaussianInt::ONE, GaussianInt::ZERO);
    pub const THETA: Self = Self::new(GaussianInt::ZERO, GaussianInt::ONE);

    pub const fn new(u: GaussianInt, v: GaussianInt) -> Self {
        Self { u, v }
    }

    pub fn scalar(u: GaussianInt) -> Self {
        Self::new(u, GaussianInt::ZERO)
    }

    /// σ : θ ↦ θ̄ = 1 − θ, i.e. (u, v) ↦ (u + v, −v).
    pub fn theta_conj(self) -> Self {
        Self::new(self.u + self.v, -self.v)
    }

    /// Complex conjugation (θ is real).
    pub fn complex_conj(self) -> Self {
        Self::new(self.u.conj(), self.v.conj())
    }

    /// Relative norm x·σ(x) = u² + uv − v² ∈ Z\[i\].
    pub fn rel_norm(self) -> GaussianInt {
        self.u * self.u + self.u * self.v - self.v * self.v
    }

    pub fn scale(self, k: GaussianInt) -> Self {
        Self::new(k * self.u, k * self.v)
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    /// Image in Z\[i, θ\]/(1+i) ≅ F4 (θ ↦ w).
    pub fn mod_1pi(self) -> F4 {
        F4::join(self.u.mod_1pi(), self.v.mod_1pi())
    }

    /// Image in Z\[i, θ\]/(2) ≅ F4\[i\] (θ ↦ w).
    pub fn mod_2(self) -> F4i {
        F4i::join(self.u.mod_2(), self.v.mod_2())
    }

    /// Real value, for floating-point cross-checks.
    pub fn to_complex(self) -> (f64, f64) {
        let theta = (1.0 + 5f64.sqrt()) / 2.0;
        (self.u.re as f64 + self.v.re as f64 * theta, self.u.im as f64 + self.v.im as f64 * theta)
    }
}

impl Add for ZiTheta {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.u + rhs.u, self.v + rhs.v)
    }
}

impl Sub for ZiTheta {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.u - rhs.u, self.v - rhs.v)
    }
}

impl Neg for ZiTheta {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.u, -self.v)
    }
}

impl Mul for ZiTheta {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        let vv = self.v * rhs.v;
        Self::new(self.u * rhs.u + vv, self.u * rhs.v + self.v * rhs.u + vv)
    }
}

impl fmt::Display for ZiTheta {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match (self.u.is_zero(), self.v.is_zero()) {
            (_, true) => write!(f, "{}", self.u),
            (true, false) => write!(f, "({})θ", self.v),
            (false, false) => write!(f, "{}+({})θ", self.u, self.v),
        }
    }
}

/// α = 1 + i − iθ.
pub fn alpha() -> ZiTheta {
    ZiTheta::new(GaussianInt::ONE_PLUS_I, -GaussianInt::I)
}

/// ᾱ = σ(α) = 1 + iθ.
pub fn alpha_bar() -> ZiTheta {
    alpha().theta_conj()
}

/// Golden codeword (a, b, c, d), equivalently the order element
/// (a + bθ) + (c + dθ)e.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug, Default)]
pub struct GoldenCodeword {
    pub a: GaussianInt,
    pub b: GaussianInt,
    pub c: GaussianInt,
    pub d: GaussianInt,
}

impl GoldenCodeword {
    pub const ZERO: Self =
        Self { a: GaussianInt::ZERO, b: GaussianInt::ZERO, c: GaussianInt::ZERO, d: GaussianInt::ZERO };

    pub fn new(a: GaussianInt, b: GaussianInt, c: GaussianInt, d: GaussianInt) -> Self {
        Self { a, b, c, d }
    }

    /// Shorthand for integer (real) coordinates.
    pub fn real(a: i64, b: i64, c: i64, d: i64) -> Self {
        Self::new(a.into(), b.into(), c.into(), d.into())
    }

    pub fn from_parts(x0: ZiTheta, x1: ZiTheta) -> Self {
        Self::new(x0.u, x0.v, x1.u, x1.v)
    }

    pub fn x0(self) -> ZiTheta {
        ZiTheta::new(self.a, self.b)
    }

    pub fn x1(self) -> ZiTheta {
        ZiTheta::new(self.c, self.d)
    }

    pub fn coords(self) -> [GaussianInt; 4] {
        [self.a, self.b, self.c, self.d]
    }

    pub fn is_zero(self) -> bool {
        self == Self::ZERO
    }

    pub fn scale(self, k: GaussianInt) -> Self {
        Self::new(k * self.a, k * self.b, k * self.c, k * self.d)
    }
}

impl Add for GoldenCodeword {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::new(self.a + rhs.a, self.b + rhs.b, self.c + rhs.c, self.d + rhs.d)
    }
}

impl Sub for GoldenCodeword {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::new(self.a - rhs.a, self.b - rhs.b, self.c - rhs.c, self.d - rhs.d)
    }
}

impl Neg for GoldenCodeword {
    type Output = Self;
    fn neg(self) -> Self {
        Self::new(-self.a, -self.b, -self.c, -self.d)
    }
}

impl Mul for GoldenCodeword {
    type Output = Self;
    /// Order multiplication: (x₀ + x₁e)(y₀ + y₁e) = (x₀y₀ + i x₁σ(y₁)) + (x₀y₁ + x₁σ(y₀))e.
    fn mul(self, rhs: Self) -> Self {
        let (x0, x1, y0, y1) = (self.x0(), self.x1(), rhs.x0(), rhs.x1());
        Self::from_parts(x0 * y0 + (x1 * y1.theta_conj()).scale(GaussianInt::I), x0 * y1 + x1 * y0.theta_conj())
    }
}

impl fmt::Display for GoldenCodeword {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({},{},{},{})", self.a, self.b, self.c, self.d)
    }
}

impl FromStr for GoldenCodeword {
    type Err = ParseError;

    /// `(a,b,c,d)` with Gaussian integer entries; parentheses optional.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let t = s.trim();
        let t = t.strip_prefix('(').and_then(|t| t.strip_suffix(')')).unwrap_or(t);
        let parts = split_top_level(t, ',');
        if parts.len() != 4 {
            return Err(ParseError::Length { expected: 4, found: parts.len() });
        }
        let c: Vec<GaussianInt> = parts.iter().map(|p| p.parse()).collect::<Result<_, _>>()?;
        Ok(Self::new(c[0], c[1], c[2], c[3]))
    }
}

/// √5·X: the codeword matrix without the 1/√5 normalisation.
pub type GoldenMatrix = [[ZiTheta; 2]; 2];

/// [[x₀, x₁], [iσ(x₁), σ(x₀)]], the left-regular matrix of x₀ + x₁e.
pub fn order_matrix(cw: GoldenCodeword) -> GoldenMatrix {
    let (x0, x1) = (cw.x0(), cw.x1());
    [[x0, x1], [x1.theta_conj().scale(GaussianInt::I), x0.theta_conj()]]
}

/// √5·X for the codeword: rows scaled by α and ᾱ.
pub fn golden_matrix(cw: GoldenCodeword) -> GoldenMatrix {
    let [[m00, m01], [m10, m11]] = order_matrix(cw);
    let (al, ab) = (alpha(), alpha_bar());
    [[al * m00, al * m01], [ab * m10, ab * m11]]
}

fn det2(m: &GoldenMatrix) -> ZiTheta {
    m[0][0] * m[1][1] - m[0][1] * m[1][0]
}

/// det(X) = numerator / 5 with numerator ∈ Z\[i\].
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct GoldenDet {
    pub numerator: GaussianInt,
}

impl GoldenDet {
    /// |det X|² = |numerator|² / 25.
    pub fn abs_sq(self) -> Rational64 {
        Rational64::new(self.numerator.norm_sq(), 25)
    }

    pub fn is_zero(self) -> bool {
        self.numerator.is_zero()
    }
}

impl fmt::Display for GoldenDet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        if self.numerator.is_zero() {
            f.write_str("0")
        } else {
            write!(f, "({})/5", self.numerator)
        }
    }
}

/// Exact determinant of the codeword matrix.
///
/// # Panics
/// If the expanded determinant has a nonzero θ-component, which would mean
/// the arithmetic is inconsistent.
pub fn golden_det(cw: GoldenCodeword) -> GoldenDet {
    let d = det2(&golden_matrix(cw));
    assert!(d.v.is_zero(), "determinant of {cw} has θ-component {}; Z[i,θ] arithmetic is inconsistent", d.v);
    GoldenDet { numerator: d.u }
}

pub fn abs_det_sq(cw: GoldenCodeword) -> Rational64 {
    golden_det(cw).abs_sq()
}

/// Gram matrix (√5X)(√5X)* = 5·XX*.
pub fn gram(cw: GoldenCodeword) -> GoldenMatrix {
    let m = golden_matrix(cw);
    let entry = |r: usize, c: usize| m[r][0] * m[c][0].complex_conj() + m[r][1] * m[c][1].complex_conj();
    [[entry(0, 0), entry(0, 1)], [entry(1, 0), entry(1, 1)]]
}

pub fn gram_add(x: &GoldenMatrix, y: &GoldenMatrix) -> GoldenMatrix {
    [[x[0][0] + y[0][0], x[0][1] + y[0][1]], [x[1][0] + y[1][0], x[1][1] + y[1][1]]]
}

/// det(Σ XᵢXᵢ*) from the summed Gram matrix Σ 5XᵢXᵢ*, as an element of Q(√5).
///
/// # Panics
/// If the determinant is not real (Hermitian sums always have real
/// determinant).
pub fn gram_det(sum: &GoldenMatrix) -> Sqrt5Value {
    let d = det2(sum);
    assert!(d.u.im == 0 && d.v.im == 0, "Hermitian determinant {d} is not real");
    // (p + qθ)/25 = (2p + q)/50 + (q/50)√5
    let (p, q) = (d.u.re, d.v.re);
    Sqrt5Value::new(Rational64::new(2 * p + q, 50), Rational64::new(q, 50))
}

/// Which two-sided ideal of the Golden order the coset partition uses.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Ideal {
    /// (1+i): quotient M2(F2).
    OnePlusI,
    /// (2): quotient M2(F2\[i\]).
    Two,
}

impl Ideal {
    /// |a|² for the generator a.
    pub fn norm_sq(self) -> i64 {
        match self {
            Ideal::OnePlusI => 2,
            Ideal::Two => 4,
        }
    }

    pub fn generator(self) -> GaussianInt {
        match self {
            Ideal::OnePlusI => GaussianInt::ONE_PLUS_I,
            Ideal::Two => GaussianInt::new(2, 0),
        }
    }
}

impl fmt::Display for Ideal {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            Ideal::OnePlusI => "1pi",
            Ideal::Two => "2",
        })
    }
}

impl FromStr for Ideal {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "1pi" | "1+i" => Ok(Ideal::OnePlusI),
            "2" => Ok(Ideal::Two),
            other => Err(ParseError::Other(format!("unknown ideal {other:?} (expected 1pi or 2)"))),
        }
    }
}

/// Image of a codeword in the quotient by an ideal.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Projection {
    F2(Matrix<F2, 2>),
    F2i(Matrix<F2i, 2>),
}

impl Projection {
    pub fn ideal(&self) -> Ideal {
        match self {
            Projection::F2(_) => Ideal::OnePlusI,
            Projection::F2i(_) => Ideal::Two,
        }
    }

    /// Position of the matrix in the enumeration order of its ring.
    pub fn index(&self) -> usize {
        match self {
            Projection::F2(m) => m.index(),
            Projection::F2i(m) => m.index(),
        }
    }

    /// Parse a matrix in the quotient ring of `ideal`.
    pub fn parse(ideal: Ideal, s: &str) -> Result<Self, ParseError> {
        Ok(match ideal {
            Ideal::OnePlusI => Projection::F2(s.parse()?),
            Ideal::Two => Projection::F2i(s.parse()?),
        })
    }
}

impl fmt::Display for Projection {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Projection::F2(m) => write!(f, "{m}"),
            Projection::F2i(m) => write!(f, "{m}"),
        }
    }
}

/// Reduction mod (1+i): θ ↦ w, e ↦ j, then φ.
pub fn project_mod_1pi(cw: GoldenCodeword) -> Matrix<F2, 2> {
    crate::cyclic::phi(cw.x0().mod_1pi(), cw.x1().mod_1pi())
}

/// The unit t = 1 + iw ∈ F4\[i\] with N(t) = i, so (tj)² = i.
pub fn twist() -> F4i {
    F4i::new(F2i::ONE, F2i::I)
}

/// Reduction mod 2: θ ↦ w and e ↦ (1+iw)j, then ψ. Sending e to tj with
/// N(t) = i keeps e² = i, so this is a ring homomorphism onto M2(F2\[i\]).
pub fn project_mod_2(cw: GoldenCodeword) -> Matrix<F2i, 2> {
    psi(cw.x0().mod_2(), twist() * cw.x1().mod_2())
}

/// Reduction mod 2 with e ↦ j. Additive, but not multiplicative (j² = 1
/// while e² = i), and it does not respect the determinant classes.
pub fn project_mod_2_untwisted(cw: GoldenCodeword) -> Matrix<F2i, 2> {
    psi(cw.x0().mod_2(), cw.x1().mod_2())
}

pub fn project(cw: GoldenCodeword, ideal: Ideal) -> Projection {
    match ideal {
        Ideal::OnePlusI => Projection::F2(project_mod_1pi(cw)),
        Ideal::Two => Projection::F2i(project_mod_2(cw)),
    }
}

#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum ProjClass {
    Zero,
    NonUnitNonZero,
    Unit,
}

impl ProjClass {
    /// Floor of |det X|² in units of δ for ideal (a): |a|^{2n}, |a|², 1.
    pub fn floor_multiple(self, ideal: Ideal) -> i64 {
        let a2 = ideal.norm_sq();
        match self {
            ProjClass::Zero => a2 * a2,
            ProjClass::NonUnitNonZero => a2,
            ProjClass::Unit => 1,
        }
    }
}

impl fmt::Display for ProjClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            ProjClass::Zero => "zero",
            ProjClass::NonUnitNonZero => "nonunit",
            ProjClass::Unit => "unit",
        })
    }
}

pub fn classify_projection(m: &Projection) -> ProjClass {
    fn class<R: crate::rings::CommutativeRing>(m: &Matrix<R, 2>) -> ProjClass {
        if m.is_zero_matrix() {
            ProjClass::Zero
        } else if m.is_invertible() {
            ProjClass::Unit
        } else {
            ProjClass::NonUnitNonZero
        }
    }
    match m {
        Projection::F2(m) => class(m),
        Projection::F2i(m) => class(m),
    }
}

/// Norm-pair cases for a matrix ψ(p, q) of M2(F2\[i\]).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub enum NormPairClass {
    /// N(p) = N(q): det ψ(p,q) = 0, det X divisible by 2.
    EqualNorms,
    /// N(p) ≠ N(q), both nonzero: det ψ(p,q) = 1+i.
    DistinctNonzero,
    /// One norm is zero and the other is not: det ψ(p,q) is 1 or i.
    OneZero,
}

impl NormPairClass {
    /// Floor of |det X|² in units of δ.
    pub fn floor_multiple(self) -> i64 {
        match self {
            NormPairClass::EqualNorms => 4,
            NormPairClass::DistinctNonzero => 2,
            NormPairClass::OneZero => 1,
        }
    }
}

impl fmt::Display for NormPairClass {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            NormPairClass::EqualNorms => "equal-norms",
            NormPairClass::DistinctNonzero => "distinct-nonzero-norms",
            NormPairClass::OneZero => "one-zero-norm",
        })
    }
}

pub fn norm_pair_class(m: &Matrix<F2i, 2>) -> NormPairClass {
    let (p, q) = psi_inv(m);
    let (np, nq) = (norm_f4i(p), norm_f4i(q));
    if np == nq {
        NormPairClass::EqualNorms
    } else if !np.is_zero() && !nq.is_zero() {
        NormPairClass::DistinctNonzero
    } else {
        NormPairClass::OneZero
    }
}

/// Coordinates with real and imaginary parts in `lo..=hi`.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct QamBox {
    pub lo: i64,
    pub hi: i64,
}

impl QamBox {
    pub fn new(lo: i64, hi: i64) -> Self {
        assert!(lo <= hi, "empty box {lo}..={hi}");
        Self { lo, hi }
    }

    /// re, im ∈ {−r, …, r}.
    pub fn symmetric(r: i64) -> Self {
        Self::new(-r, r)
    }

    /// Values per real coordinate.
    pub fn width(&self) -> u64 {
        (self.hi - self.lo + 1) as u64
    }

    /// Gaussian integers in the box.
    pub fn gaussian_count(&self) -> u64 {
        self.width() * self.width()
    }

    /// Codewords (a, b, c, d) in the box: width⁸.
    pub fn codeword_count(&self) -> u64 {
        self.width().pow(8)
    }

    /// Codeword at `index`, real parts before imaginary parts, `a.re` most
    /// significant.
    pub fn codeword(&self, mut index: u64) -> GoldenCodeword {
        let w = self.width();
        let mut digits = [0i64; 8];
        for slot in digits.iter_mut().rev() {
            *slot = self.lo + (index % w) as i64;
            index /= w;
        }
        let g = |k: usize| GaussianInt::new(digits[2 * k], digits[2 * k + 1]);
        GoldenCodeword::new(g(0), g(1), g(2), g(3))
    }

    pub fn codewords(&self) -> impl Iterator<Item = GoldenCodeword> + '_ {
        (0..self.codeword_count()).map(|i| self.codeword(i))
    }
}

impl fmt::Display for QamBox {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "re,im in {}..={}", self.lo, self.hi)
    }
}

/// Minimum of |det X|² with its first minimiser in enumeration order.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct DetWitness {
    pub abs_det_sq: Rational64,
    pub codeword: GoldenCodeword,
    pub index: u64,
}

/// Minimum nonzero |det X|² over the box, optionally restricted to the coset
/// of a projection. Returns `None` if no nonzero codeword qualifies.
pub fn min_det(qam: QamBox, coset: Option<Projection>, exec: Exec) -> Option<DetWitness> {
    let best = exec.map_reduce(
        0..qam.codeword_count(),
        None,
        |i| {
            let cw = qam.codeword(i);
            if cw.is_zero() {
                return None;
            }
            if let Some(target) = coset {
                if project(cw, target.ideal()) != target {
                    return None;
                }
            }
            Some((abs_det_sq(cw), i))
        },
        min_option,
    )?;
    Some(DetWitness { abs_det_sq: best.0, codeword: qam.codeword(best.1), index: best.1 })
}

/// δ = 1/5.
pub fn delta() -> Rational64 {
    Rational64::new(1, 5)
}

#[cfg(test)]
mod tests {
    use super::*;
    use crate::cyclic::{phi, JPair};
    use proptest::prelude::*;

    fn gi(re: i64, im: i64) -> GaussianInt {
        GaussianInt::new(re, im)
    }

    fn float_det(cw: GoldenCodeword) -> (f64, f64) {
        // independent evaluation with θ = (1+√5)/2 in floating point
        let m = golden_matrix(cw);
        let c = |z: ZiTheta| z.to_complex();
        let mul = |(a, b): (f64, f64), (x, y): (f64, f64)| (a * x - b * y, a * y + b * x);
        let (p, q) = (mul(c(m[0][0]), c(m[1][1])), mul(c(m[0][1]), c(m[1][0])));
        ((p.0 - q.0) / 5.0, (p.1 - q.1) / 5.0)
    }

    #[test]
    fn constants() {
        assert_eq!(alpha_bar(), ZiTheta::new(GaussianInt::ONE, GaussianInt::I));
        assert_eq!((alpha() * alpha_bar()), ZiTheta::scalar(gi(2, 1)));
        assert_eq!(ZiTheta::THETA * ZiTheta::THETA, ZiTheta::THETA + ZiTheta::ONE);
        assert_eq!(ZiTheta::THETA.theta_conj(), ZiTheta::ONE - ZiTheta::THETA);
    }

    #[test]
    fn determinant_examples() {
        assert!(golden_det(GoldenCodeword::ZERO).is_zero());
        let d = golden_det(GoldenCodeword::real(1, 0, 0, 0));
        assert_eq!(d.numerator, gi(2, 1));
        assert_eq!(d.abs_sq(), Rational64::new(1, 5));
        let (re, im) = float_det(GoldenCodeword::real(1, 0, 0, 0));
        assert!((re - 0.4).abs() < 1e-12 && (im - 0.2).abs() < 1e-12);
    }

    #[test]
    fn matrix_examples() {
        let m = golden_matrix(GoldenCodeword::real(1, 0, 0, 0));
        assert_eq!(m, [[alpha(), ZiTheta::ZERO], [ZiTheta::ZERO, alpha_bar()]]);
        let m = golden_matrix(GoldenCodeword::real(0, 0, 1, 0));
        assert_eq!(m[0][1], alpha());
        assert_eq!(m[1][0], alpha_bar().scale(GaussianInt::I));
        assert!(m[0][0].is_zero() && m[1][1].is_zero());
    }

    #[test]
    fn gaussian_display_round_trip() {
        for re in -3..=3 {
            for im in -3..=3 {
                let z = gi(re, im);
                assert_eq!(z.to_string().parse::<GaussianInt>().unwrap(), z, "{z}");
            }
        }
        assert_eq!(gi(1, 1).to_string(), "1+i");
        assert_eq!(gi(2, -1).to_string(), "2-i");
        assert_eq!(gi(0, -3).to_string(), "-3i");
        assert!("1+".parse::<GaussianInt>().is_err());
        let cw: GoldenCodeword = "(1+i, 0, -i, 2)".parse().unwrap();
        assert_eq!(cw, GoldenCodeword::new(gi(1, 1), gi(0, 0), gi(0, -1), gi(2, 0)));
    }

    #[test]
    fn projection_examples() {
        assert!(project_mod_1pi(GoldenCodeword::ZERO).is_zero_matrix());
        assert_eq!(project_mod_1pi(GoldenCodeword::real(1, 0, 0, 0)), Matrix::identity());
        assert!(project_mod_2(GoldenCodeword::real(2, 0, 0, 0)).is_zero_matrix());
        assert_eq!(project_mod_2(GoldenCodeword::real(1, 0, 0, 0)), Matrix::identity());
        let m = project_mod_2(GoldenCodeword::new(gi(1, 1), gi(0, 0), gi(0, 0), gi(0, 0)));
        assert!(!m.is_zero_matrix() && !m.is_invertible());
    }

    #[test]
    fn classification_examples() {
        assert_eq!(classify_projection(&Projection::F2(Matrix::zero())), ProjClass::Zero);
        assert_eq!(classify_projection(&Projection::F2(phi(F4::w(), F4::zero()))), ProjClass::Unit);
        let t = F4i::from_f2i(F2i::ONE_PLUS_I);
        let m = psi(t, t * F4i::w());
        assert_eq!(classify_projection(&Projection::F2i(m)), ProjClass::NonUnitNonZero);
        assert_eq!(norm_pair_class(&m), NormPairClass::EqualNorms);
    }

    #[test]
    fn box_enumeration() {
        let qam = QamBox::symmetric(2);
        assert_eq!(qam.codeword_count(), 390_625);
        assert_eq!(qam.codeword(0), GoldenCodeword::new(gi(-2, -2), gi(-2, -2), gi(-2, -2), gi(-2, -2)));
        assert_eq!(qam.codeword(qam.codeword_count() - 1).a, gi(2, 2));
    }

    #[test]
    fn min_det_small_box() {
        let w = min_det(QamBox::symmetric(1), None, Exec::Sequential).unwrap();
        assert_eq!(w.abs_det_sq, delta());
        let coset = Projection::F2(Matrix::zero());
        let w = min_det(QamBox::symmetric(1), Some(coset), Exec::Parallel).unwrap();
        assert_eq!(w.abs_det_sq, Rational64::new(4, 5));
    }

    #[test]
    fn untwisted_projection_breaks_det2() {
        // x₀ = 1, x₁ = 1: both norms are 1, yet det X is only divisible by 1+i
        let cw = GoldenCodeword::real(1, 0, 1, 0);
        let plain = project_mod_2_untwisted(cw);
        assert_eq!(norm_pair_class(&plain), NormPairClass::EqualNorms);
        assert!(abs_det_sq(cw) < Rational64::new(4, 5));
        assert_ne!(norm_pair_class(&project_mod_2(cw)), NormPairClass::EqualNorms);
    }

    fn small() -> impl Strategy<Value = GaussianInt> {
        (-3i64..=3, -3i64..=3).prop_map(|(re, im)| gi(re, im))
    }

    fn codeword() -> impl Strategy<Value = GoldenCodeword> {
        (small(), small(), small(), small()).prop_map(|(a, b, c, d)| GoldenCodeword::new(a, b, c, d))
    }

    fn to_jpair_f4(m: Matrix<F2, 2>) -> JPair<F4> {
        let (p, q) = crate::cyclic::phi_inv(&m);
        JPair::new(p, q)
    }

    fn to_jpair_f4i(m: Matrix<F2i, 2>) -> JPair<F4i> {
        let (p, q) = psi_inv(&m);
        JPair::new(p, q)
    }

    proptest! {
        #[test]
        fn det_matches_norm_formula(cw in codeword()) {
            // 5·det = (2+i)(N(x₀) − i·N(x₁))
            let expected = gi(2, 1) * (cw.x0().rel_norm() - GaussianInt::I * cw.x1().rel_norm());
            prop_assert_eq!(golden_det(cw).numerator, expected);
            let (re, im) = float_det(cw);
            prop_assert!((re - expected.re as f64 / 5.0).abs() < 1e-9);
            prop_assert!((im - expected.im as f64 / 5.0).abs() < 1e-9);
        }

        #[test]
        fn order_matrix_is_multiplicative(x in codeword(), y in codeword()) {
            let (mx, my, mxy) = (order_matrix(x), order_matrix(y), order_matrix(x * y));
            for r in 0..2 {
                for c in 0..2 {
                    prop_assert_eq!(mx[r][0] * my[0][c] + mx[r][1] * my[1][c], mxy[r][c]);
                }
            }
        }

        #[test]
        fn projections_are_additive(x in codeword(), y in codeword()) {
            prop_assert_eq!(project_mod_1pi(x + y), project_mod_1pi(x) + project_mod_1pi(y));
            prop_assert_eq!(project_mod_2(x + y), project_mod_2(x) + project_mod_2(y));
        }

        #[test]
        fn projections_are_multiplicative(x in codeword(), y in codeword()) {
            prop_assert_eq!(project_mod_1pi(x * y), project_mod_1pi(x) * project_mod_1pi(y));
            prop_assert_eq!(project_mod_2(x * y), project_mod_2(x) * project_mod_2(y));
            // same check on the pair side
            prop_assert_eq!(
                to_jpair_f4(project_mod_1pi(x * y)),
                to_jpair_f4(project_mod_1pi(x)) * to_jpair_f4(project_mod_1pi(y))
            );
            prop_assert_eq!(
                to_jpair_f4i(project_mod_2(x * y)),
                to_jpair_f4i(project_mod_2(x)) * to_jpair_f4i(project_mod_2(y))
            );
        }

        #[test]
        fn ideal_membership(x in codeword()) {
            prop_assert!(project_mod_1pi(x.scale(GaussianInt::ONE_PLUS_I)).is_zero_matrix());
            prop_assert!(project_mod_2(x.scale(gi(2, 0))).is_zero_matrix());
        }

        #[test]
        fn gram_det_of_one_is_abs_det_sq(x in codeword()) {
            let g = gram_det(&gram(x));
            prop_assert!(g.is_rational());
            prop_assert_eq!(g.rat, abs_det_sq(x));
        }
    }
}
