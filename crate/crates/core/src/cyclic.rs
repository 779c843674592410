//! Cyclic algebras over finite rings and their matrix models.
//!
//! A [`CyclicElem`] is `x = x₀ + e x₁ + … + e^{n-1} x_{n-1}` (coefficients to
//! the right of the powers of `e`) in the algebra with `l e = e σ(l)` and
//! `eⁿ = 1`. The explicit isomorphisms onto matrix rings over F2 and F2\[i\]
//! are built from literal generator tables; [`crate::verify`] certifies the
//! homomorphism properties instead of assuming them.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};

use crate::matrices::Matrix;
use crate::parse::{split_top_level, ParseError};
use crate::rings::{F16Alt, F2i, F4i, GaloisGenerator, OmegaCoords, Ring, Symbolic, F16, F2, F4, F8};

/// Element of the cyclic algebra (L/K, σ, 1) of degree `N` over the ring `L`.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct CyclicElem<L, const N: usize> {
    /// Coefficient of e^j is `coeffs[j]`.
    pub coeffs: [L; N],
}

impl<L: GaloisGenerator, const N: usize> CyclicElem<L, N> {
    pub fn new(coeffs: [L; N]) -> Self {
        Self { coeffs }
    }

    /// The scalar `l` (coefficient of e⁰).
    pub fn scalar(l: L) -> Self {
        let mut coeffs = [L::zero(); N];
        coeffs[0] = l;
        Self { coeffs }
    }

    /// The generator `e`.
    pub fn e() -> Self {
        Self::e_pow(1)
    }

    pub fn e_pow(k: usize) -> Self {
        let mut coeffs = [L::zero(); N];
        coeffs[k % N] = L::one();
        Self { coeffs }
    }

    /// Parse `x₀; x₁; …` (coefficients of e⁰, e¹, …). Missing trailing
    /// coefficients are zero.
    pub fn parse(s: &str) -> Result<Self, ParseError>
    where
        L: Symbolic,
    {
        let parts = split_top_level(s, ';');
        if parts.len() > N {
            return Err(ParseError::Length { expected: N, found: parts.len() });
        }
        let mut coeffs = [L::zero(); N];
        for (slot, part) in coeffs.iter_mut().zip(parts) {
            *slot = crate::parse::parse_ring_expr(part)?;
        }
        Ok(Self { coeffs })
    }
}

impl<L: GaloisGenerator, const N: usize> Add for CyclicElem<L, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|j| self.coeffs[j] + rhs.coeffs[j]) }
    }
}

impl<L: GaloisGenerator, const N: usize> Sub for CyclicElem<L, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self { coeffs: std::array::from_fn(|j| self.coeffs[j] - rhs.coeffs[j]) }
    }
}

impl<L: GaloisGenerator, const N: usize> Neg for CyclicElem<L, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self { coeffs: self.coeffs.map(|x| -x) }
    }
}

impl<L: GaloisGenerator, const N: usize> Mul for CyclicElem<L, N> {
    type Output = Self;
    /// (eⁱ a)(eʲ b) = e^{i+j} σʲ(a) b, with eⁿ = 1.
    fn mul(self, rhs: Self) -> Self {
        let mut coeffs = [L::zero(); N];
        for (i, &a) in self.coeffs.iter().enumerate() {
            if a.is_zero() {
                continue;
            }
            let mut twisted = a;
            for (j, &b) in rhs.coeffs.iter().enumerate() {
                coeffs[(i + j) % N] += twisted * b;
                twisted = twisted.sigma();
            }
        }
        Self { coeffs }
    }
}

impl<L: GaloisGenerator, const N: usize> AddAssign for CyclicElem<L, N> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<L: GaloisGenerator, const N: usize> SubAssign for CyclicElem<L, N> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<L: GaloisGenerator, const N: usize> MulAssign for CyclicElem<L, N> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<L: GaloisGenerator, const N: usize> Ring for CyclicElem<L, N> {
    const NAME: &'static str = "cyclic";
    const ORDER: usize = match L::ORDER.checked_pow(N as u32) {
        Some(size) => size,
        None => usize::MAX,
    };

    fn zero() -> Self {
        Self { coeffs: [L::zero(); N] }
    }

    fn one() -> Self {
        Self::scalar(L::one())
    }

    /// Lexicographic in (x₀, x₁, …), x₀ most significant.
    fn from_index(mut index: usize) -> Self {
        assert!(index < Self::ORDER, "index {index} out of range");
        let mut coeffs = [L::zero(); N];
        for slot in coeffs.iter_mut().rev() {
            *slot = L::from_index(index % L::ORDER);
            index /= L::ORDER;
        }
        Self { coeffs }
    }

    fn index(self) -> usize {
        self.coeffs.iter().fold(0, |acc, x| acc * L::ORDER + x.index())
    }
}

impl<L: fmt::Display + GaloisGenerator, const N: usize> fmt::Display for CyclicElem<L, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let mut first = true;
        for (j, x) in self.coeffs.iter().enumerate() {
            if x.is_zero() {
                continue;
            }
            if !first {
                f.write_str(" + ")?;
            }
            first = false;
            match j {
                0 => write!(f, "({x})")?,
                1 => write!(f, "e({x})")?,
                _ => write!(f, "e^{j}({x})")?,
            }
        }
        if first {
            f.write_str("0")?;
        }
        Ok(())
    }
}

impl<L: fmt::Display + GaloisGenerator, const N: usize> fmt::Debug for CyclicElem<L, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

/// Matrix of left multiplication by `x` in the right L-basis 1, e, …, e^{n-1}.
///
/// Entry (r, c) is σᶜ(x_{r−c}) below or on the diagonal and γσᶜ(x_{n+r−c})
/// above it, with γ = 1.
pub fn regular_representation<L: GaloisGenerator, const N: usize>(x: &CyclicElem<L, N>) -> Matrix<L, N> {
    Matrix::from_fn(|r, c| x.coeffs[(N + r - c) % N].sigma_pow(c as u32))
}

fn f2_matrix<const N: usize>(rows: [[u8; N]; N]) -> Matrix<F2, N> {
    Matrix(rows.map(|row| row.map(F2::new)))
}

/// Image of `e` in M3(F2).
pub fn f8m3_e_image() -> Matrix<F2, 3> {
    f2_matrix([[1, 0, 0], [0, 0, 1], [0, 1, 1]])
}

/// Image of a₀ + a₁w + a₂w² ∈ F8 in M3(F2).
pub fn f8m3_scalar_image(a: F8) -> Matrix<F2, 3> {
    let [a0, a1, a2] = [0, 1, 2].map(|k| a.coefficient(k));
    Matrix([[a0, a1, a2], [a2, a0 + a2, a1], [a1, a1 + a2, a0 + a2]])
}

/// The map (F8/F2, σ, 1) → M3(F2) determined by the tables for `e` and for
/// the scalars, extended by x ↦ Σ image(e)ʲ image(xⱼ).
pub fn iso_f8_to_m3(x: &CyclicElem<F8, 3>) -> Matrix<F2, 3> {
    extend_from_generators(x, f8m3_e_image(), f8m3_scalar_image)
}

/// Image of `e` in M4(F2).
pub fn f16m4_e_image() -> Matrix<F2, 4> {
    f2_matrix([[1, 0, 0, 0], [0, 0, 1, 0], [1, 1, 0, 0], [0, 0, 1, 1]])
}

/// Image of `w` in M4(F2).
pub fn f16m4_w_image() -> Matrix<F2, 4> {
    f2_matrix([[0, 1, 0, 0], [0, 0, 1, 0], [0, 0, 0, 1], [1, 1, 0, 0]])
}

/// Binary polynomial rings of degree 4 whose elements can be sent through
/// the 4×4 tables.
pub trait Degree4Poly: GaloisGenerator {
    fn coefficient_bits(self) -> [F2; 4];
}

impl Degree4Poly for F16 {
    fn coefficient_bits(self) -> [F2; 4] {
        [0, 1, 2, 3].map(|k| self.coefficient(k))
    }
}

impl Degree4Poly for F16Alt {
    fn coefficient_bits(self) -> [F2; 4] {
        [0, 1, 2, 3].map(|k| self.coefficient(k))
    }
}

/// Image of a₀ + a₁w + a₂w² + a₃w³ as Σ aₖ W^k, W the table image of `w`.
pub fn f16m4_scalar_image<L: Degree4Poly>(a: L) -> Matrix<F2, 4> {
    let w = f16m4_w_image();
    let mut power = Matrix::identity();
    let mut acc = Matrix::zero();
    for bit in a.coefficient_bits() {
        if bit == F2::ONE {
            acc += power;
        }
        power *= w;
    }
    acc
}

/// The map from the degree-4 cyclic algebra into M4(F2) determined by the
/// tables for `e` and `w`.
///
/// The `w` table satisfies w⁴ + w + 1 = 0, so the map is a ring isomorphism
/// for `L = F16`. For `L = F16Alt` (w⁴ + w² + 1) it is additive only; the
/// certification in [`crate::verify`] reports which relations fail.
pub fn iso_f16_to_m4<L: Degree4Poly>(x: &CyclicElem<L, 4>) -> Matrix<F2, 4> {
    extend_from_generators(x, f16m4_e_image(), f16m4_scalar_image::<L>)
}

fn extend_from_generators<L: GaloisGenerator, const N: usize>(
    x: &CyclicElem<L, N>,
    e_image: Matrix<F2, N>,
    scalar_image: impl Fn(L) -> Matrix<F2, N>,
) -> Matrix<F2, N> {
    let mut power = Matrix::identity();
    let mut acc = Matrix::zero();
    for &c in &x.coeffs {
        if !c.is_zero() {
            acc += power * scalar_image(c);
        }
        power *= e_image;
    }
    acc
}

/// Element a + b·j of R ⊕ R j with j² = 1 and l j = j σ(l) (left
/// coefficients). With R = F4 this is M2(F2); with R = F4\[i\] it is
/// M2(F2\[i\]).
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash, Debug)]
pub struct JPair<R> {
    pub a: R,
    pub b: R,
}

impl<R: GaloisGenerator> JPair<R> {
    pub fn new(a: R, b: R) -> Self {
        Self { a, b }
    }

    pub fn j() -> Self {
        Self { a: R::zero(), b: R::one() }
    }
}

impl<R: fmt::Display> fmt::Display for JPair<R> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        write!(f, "({})+({})j", self.a, self.b)
    }
}

impl<R: GaloisGenerator> Add for JPair<R> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self { a: self.a + rhs.a, b: self.b + rhs.b }
    }
}

impl<R: GaloisGenerator> Mul for JPair<R> {
    type Output = Self;
    /// (a + bj)(c + dj) = (ac + bσ(d)) + (ad + bσ(c))j
    fn mul(self, rhs: Self) -> Self {
        Self { a: self.a * rhs.a + self.b * rhs.b.sigma(), b: self.a * rhs.b + self.b * rhs.a.sigma() }
    }
}

/// The pair map (a + bw, c + dw) ↦ [[a+d, b+c], [b+c+d, a+b+d]], i.e.
/// M_{a+bw} + M_{c+dw}·J with J = [[0,1],[1,0]].
pub fn pair_to_matrix<R: OmegaCoords>(p: R, q: R) -> Matrix<R::Base, 2> {
    let (a, b) = p.split();
    let (c, d) = q.split();
    Matrix([[a + d, b + c], [b + c + d, a + b + d]])
}

/// Inverse of [`pair_to_matrix`]:
/// y ↦ ((y11+y12−y21) + w(−y11+y22), (y11+y12−y22) + w(−y12+y21)).
pub fn matrix_to_pair<R: OmegaCoords>(m: &Matrix<R::Base, 2>) -> (R, R) {
    let [[y11, y12], [y21, y22]] = m.0;
    (R::join(y11 + y12 - y21, -y11 + y22), R::join(y11 + y12 - y22, -y12 + y21))
}

/// φ : F4 × F4 → M2(F2).
pub fn phi(a: F4, b: F4) -> Matrix<F2, 2> {
    pair_to_matrix(a, b)
}

pub fn phi_inv(m: &Matrix<F2, 2>) -> (F4, F4) {
    matrix_to_pair(m)
}

/// ψ : F4\[i\] × F4\[i\] → M2(F2\[i\]).
pub fn psi(a: F4i, b: F4i) -> Matrix<F2i, 2> {
    pair_to_matrix(a, b)
}

pub fn psi_inv(m: &Matrix<F2i, 2>) -> (F4i, F4i) {
    matrix_to_pair(m)
}

/// Componentwise extension to words: a word of length 2L over R becomes a
/// word of length L over M2(R::Base), pairing positions (0,1), (2,3), ….
pub fn pairs_to_matrices<R: OmegaCoords>(word: &[R]) -> Result<Vec<Matrix<R::Base, 2>>, ParseError> {
    if !word.len().is_multiple_of(2) {
        return Err(ParseError::Other(format!("word of odd length {} cannot be paired", word.len())));
    }
    Ok(word.chunks_exact(2).map(|p| pair_to_matrix(p[0], p[1])).collect())
}

pub fn matrices_to_pairs<R: OmegaCoords>(word: &[Matrix<R::Base, 2>]) -> Vec<R> {
    word.iter()
        .flat_map(|m| {
            let (p, q) = matrix_to_pair::<R>(m);
            [p, q]
        })
        .collect()
}

/// The multiplication matrix M_a = [[a₁, a₂], [a₂, a₁+a₂]] of a = a₁ + a₂w ∈ F4.
pub fn multiplication_matrix(a: F4) -> Matrix<F2, 2> {
    let (a1, a2) = a.split();
    Matrix([[a1, a2], [a2, a1 + a2]])
}

/// Coordinates in the basis 1, f, f², f³ with f = 1 + e (degree 4 only):
/// x = x₀ + f x₁ + f² x₂ + f³ x₃.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub struct FBasisElem<L> {
    pub coeffs: [L; 4],
}

fn binomial_mod2(n: usize, k: usize) -> bool {
    // Lucas: C(n, k) is odd iff k's bits are a subset of n's
    k <= n && (n & k) == k
}

/// Change of basis eʲ → fᵏ: yₖ = Σ_{j≥k} C(j,k) xⱼ (mod 2).
pub fn to_f_basis<L: GaloisGenerator>(x: &CyclicElem<L, 4>) -> FBasisElem<L> {
    FBasisElem {
        coeffs: std::array::from_fn(|k| {
            (k..4).filter(|&j| binomial_mod2(j, k)).fold(L::zero(), |acc, j| acc + x.coeffs[j])
        }),
    }
}

/// Change of basis fᵏ → eʲ: xⱼ = Σ_{k≥j} C(k,j) yₖ (mod 2).
pub fn from_f_basis<L: GaloisGenerator>(y: &FBasisElem<L>) -> CyclicElem<L, 4> {
    CyclicElem {
        coeffs: std::array::from_fn(|j| {
            (j..4).filter(|&k| binomial_mod2(k, j)).fold(L::zero(), |acc, k| acc + y.coeffs[k])
        }),
    }
}

/// The nilpotent element f = 1 + e.
pub fn f_element<L: GaloisGenerator>() -> CyclicElem<L, 4> {
    CyclicElem::one() + CyclicElem::e()
}
