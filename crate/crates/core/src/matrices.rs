//! Square matrices of fixed size over the finite rings.

use std::fmt;
use std::ops::{Add, AddAssign, Mul, MulAssign, Neg, Sub, SubAssign};
use std::str::FromStr;

use thiserror::Error;

use crate::exec::Exec;
use crate::parse::{split_top_level, strip_brackets, ParseError};
use crate::rings::{CommutativeRing, Ring, RingId, Symbolic};

/// Largest matrix ring that may be enumerated exhaustively.
pub const ENUMERATION_LIMIT: usize = 1 << 20;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum MatrixError {
    #[error("M{n}({ring}) has {size} elements, above the enumeration limit of {limit}")]
    TooLarge { ring: String, n: usize, size: String, limit: usize },
    #[error("unsupported matrix dimension {0} (expected 1 to 4)")]
    Dimension(usize),
}

/// An N×N matrix with entries in `R`, stored row-major.
#[derive(Clone, Copy, PartialEq, Eq, PartialOrd, Ord, Hash)]
pub struct Matrix<R, const N: usize>(pub [[R; N]; N]);

impl<R: Ring, const N: usize> Matrix<R, N> {
    pub fn zero() -> Self {
        Matrix([[R::zero(); N]; N])
    }

    pub fn identity() -> Self {
        let mut m = Self::zero();
        for k in 0..N {
            m.0[k][k] = R::one();
        }
        m
    }

    pub fn from_fn(mut f: impl FnMut(usize, usize) -> R) -> Self {
        let mut m = Self::zero();
        for r in 0..N {
            for c in 0..N {
                m.0[r][c] = f(r, c);
            }
        }
        m
    }

    pub fn scalar(x: R) -> Self {
        Self::from_fn(|r, c| if r == c { x } else { R::zero() })
    }

    pub fn entry(&self, row: usize, col: usize) -> R {
        self.0[row][col]
    }

    pub fn transpose(&self) -> Self {
        Self::from_fn(|r, c| self.0[c][r])
    }

    pub fn is_zero_matrix(&self) -> bool {
        self.0.iter().flatten().all(|x| x.is_zero())
    }

    /// Apply `f` to every entry.
    pub fn map<S: Ring>(&self, f: impl Fn(R) -> S) -> Matrix<S, N> {
        Matrix::<S, N>::from_fn(|r, c| f(self.0[r][c]))
    }

    /// Number of matrices in M_N(R), or `None` if it overflows.
    pub fn ring_size() -> Option<usize> {
        R::ORDER.checked_pow((N * N) as u32)
    }
}

impl<R: CommutativeRing, const N: usize> Matrix<R, N> {
    /// Determinant by cofactor expansion along the first row. No division
    /// is used, so this is valid over rings with zero divisors.
    pub fn det(&self) -> R {
        let m = &self.0;
        match N {
            0 => R::one(),
            1 => m[0][0],
            2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
            3 => {
                m[0][0] * (m[1][1] * m[2][2] - m[1][2] * m[2][1]) - m[0][1] * (m[1][0] * m[2][2] - m[1][2] * m[2][0])
                    + m[0][2] * (m[1][0] * m[2][1] - m[1][1] * m[2][0])
            }
            _ => {
                let rows: Vec<Vec<R>> = m.iter().map(|row| row.to_vec()).collect();
                det_cofactor(&rows)
            }
        }
    }

    /// Invertible iff the determinant is a unit of the entry ring.
    pub fn is_invertible(&self) -> bool {
        self.det().is_unit()
    }
}

fn det_cofactor<R: CommutativeRing>(m: &[Vec<R>]) -> R {
    let n = m.len();
    match n {
        0 => R::one(),
        1 => m[0][0],
        2 => m[0][0] * m[1][1] - m[0][1] * m[1][0],
        _ => {
            let mut acc = R::zero();
            for col in 0..n {
                if m[0][col].is_zero() {
                    continue;
                }
                let minor: Vec<Vec<R>> = m[1..]
                    .iter()
                    .map(|row| row.iter().enumerate().filter(|&(c, _)| c != col).map(|(_, &x)| x).collect())
                    .collect();
                let term = m[0][col] * det_cofactor(&minor);
                if col % 2 == 0 {
                    acc += term;
                } else {
                    acc -= term;
                }
            }
            acc
        }
    }
}

impl<R: Ring, const N: usize> Add for Matrix<R, N> {
    type Output = Self;
    fn add(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.0[r][c] + rhs.0[r][c])
    }
}

impl<R: Ring, const N: usize> Sub for Matrix<R, N> {
    type Output = Self;
    fn sub(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| self.0[r][c] - rhs.0[r][c])
    }
}

impl<R: Ring, const N: usize> Neg for Matrix<R, N> {
    type Output = Self;
    fn neg(self) -> Self {
        Self::from_fn(|r, c| -self.0[r][c])
    }
}

impl<R: Ring, const N: usize> Mul for Matrix<R, N> {
    type Output = Self;
    fn mul(self, rhs: Self) -> Self {
        Self::from_fn(|r, c| (0..N).fold(R::zero(), |acc, k| acc + self.0[r][k] * rhs.0[k][c]))
    }
}

impl<R: Ring, const N: usize> AddAssign for Matrix<R, N> {
    fn add_assign(&mut self, rhs: Self) {
        *self = *self + rhs;
    }
}

impl<R: Ring, const N: usize> SubAssign for Matrix<R, N> {
    fn sub_assign(&mut self, rhs: Self) {
        *self = *self - rhs;
    }
}

impl<R: Ring, const N: usize> MulAssign for Matrix<R, N> {
    fn mul_assign(&mut self, rhs: Self) {
        *self = *self * rhs;
    }
}

impl<R: CommutativeRing, const N: usize> Ring for Matrix<R, N> {
    const NAME: &'static str = "matrix";
    const ORDER: usize = match R::ORDER.checked_pow((N * N) as u32) {
        Some(size) => size,
        None => usize::MAX,
    };

    fn zero() -> Self {
        Matrix([[R::zero(); N]; N])
    }

    fn one() -> Self {
        Self::identity()
    }

    /// Row-major lexicographic order: entry (0,0) is the most significant digit.
    fn from_index(mut index: usize) -> Self {
        assert!(index < Self::ORDER, "matrix index {index} out of range");
        let mut m = Self::zero();
        for pos in (0..N * N).rev() {
            m.0[pos / N][pos % N] = R::from_index(index % R::ORDER);
            index /= R::ORDER;
        }
        m
    }

    fn index(self) -> usize {
        self.0.iter().flatten().fold(0, |acc, x| acc * R::ORDER + x.index())
    }

    fn inverse(self) -> Option<Self> {
        if !self.is_invertible() {
            return None;
        }
        // adjugate / det, computed entrywise from cofactors
        let inv_det = self.det().inverse()?;
        let rows: Vec<Vec<R>> = self.0.iter().map(|row| row.to_vec()).collect();
        Some(Self::from_fn(|r, c| {
            let minor: Vec<Vec<R>> = rows
                .iter()
                .enumerate()
                .filter(|&(i, _)| i != c)
                .map(|(_, row)| row.iter().enumerate().filter(|&(j, _)| j != r).map(|(_, &x)| x).collect())
                .collect();
            let cof = det_cofactor(&minor);
            let signed = if (r + c) % 2 == 0 { cof } else { -cof };
            signed * inv_det
        }))
    }

    fn is_unit(self) -> bool {
        self.is_invertible()
    }
}

impl<R: fmt::Display, const N: usize> fmt::Display for Matrix<R, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str("[")?;
        for (r, row) in self.0.iter().enumerate() {
            if r > 0 {
                f.write_str(",")?;
            }
            f.write_str("[")?;
            for (c, x) in row.iter().enumerate() {
                if c > 0 {
                    f.write_str(",")?;
                }
                write!(f, "{x}")?;
            }
            f.write_str("]")?;
        }
        f.write_str("]")
    }
}

impl<R: fmt::Display, const N: usize> fmt::Debug for Matrix<R, N> {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        fmt::Display::fmt(self, f)
    }
}

impl<R: Symbolic + CommutativeRing + FromStr<Err = ParseError>, const N: usize> FromStr for Matrix<R, N> {
    type Err = ParseError;

    /// Parses the bracketed-rows form `[[a,b],[c,d]]`.
    fn from_str(s: &str) -> Result<Self, ParseError> {
        let bad = || ParseError::Matrix(s.to_string());
        let inner = strip_brackets(s).ok_or_else(bad)?;
        let rows = split_top_level(inner, ',');
        if rows.len() != N {
            return Err(ParseError::Length { expected: N, found: rows.len() });
        }
        let mut m = Self::zero();
        for (r, row) in rows.iter().enumerate() {
            let entries = split_top_level(strip_brackets(row).ok_or_else(bad)?, ',');
            if entries.len() != N {
                return Err(ParseError::Length { expected: N, found: entries.len() });
            }
            for (c, e) in entries.iter().enumerate() {
                m.0[r][c] = e.parse()?;
            }
        }
        Ok(m)
    }
}

fn check_enumerable<R: CommutativeRing, const N: usize>() -> Result<usize, MatrixError> {
    match Matrix::<R, N>::ring_size() {
        Some(size) if size <= ENUMERATION_LIMIT => Ok(size),
        size => Err(MatrixError::TooLarge {
            ring: R::NAME.to_string(),
            n: N,
            size: size.map_or_else(|| format!("{}^{}", R::ORDER, N * N), |s| s.to_string()),
            limit: ENUMERATION_LIMIT,
        }),
    }
}

/// All matrices of M_N(R) in row-major lexicographic order.
pub fn enumerate<R: CommutativeRing, const N: usize>() -> Result<impl Iterator<Item = Matrix<R, N>>, MatrixError> {
    let size = check_enumerable::<R, N>()?;
    Ok((0..size).map(Matrix::<R, N>::from_index))
}

/// Exact number of invertible matrices in M_N(R), by exhaustion.
pub fn count_invertible_in<R: CommutativeRing, const N: usize>(exec: Exec) -> Result<u64, MatrixError> {
    let size = check_enumerable::<R, N>()?;
    Ok(exec.count(0..size as u64, |i| Matrix::<R, N>::from_index(i as usize).is_invertible()))
}

/// Dispatch `$body` with `$R` bound to the ring type for `$id`.
#[macro_export]
macro_rules! with_ring {
    ($id:expr, $R:ident => $body:expr) => {
        match $id {
            $crate::rings::RingId::F2 => {
                type $R = $crate::rings::F2;
                $body
            }
            $crate::rings::RingId::F4 => {
                type $R = $crate::rings::F4;
                $body
            }
            $crate::rings::RingId::F8 => {
                type $R = $crate::rings::F8;
                $body
            }
            $crate::rings::RingId::F16 => {
                type $R = $crate::rings::F16;
                $body
            }
            $crate::rings::RingId::F16Alt => {
                type $R = $crate::rings::F16Alt;
                $body
            }
            $crate::rings::RingId::F2i => {
                type $R = $crate::rings::F2i;
                $body
            }
            $crate::rings::RingId::F4i => {
                type $R = $crate::rings::F4i;
                $body
            }
        }
    };
}

/// Dispatch `$body` with `$N` bound to a matrix dimension 1..=4.
#[macro_export]
macro_rules! with_dim {
    ($n:expr, $N:ident => $body:expr, $otherwise:expr) => {
        match $n {
            1 => {
                const $N: usize = 1;
                $body
            }
            2 => {
                const $N: usize = 2;
                $body
            }
            3 => {
                const $N: usize = 3;
                $body
            }
            4 => {
                const $N: usize = 4;
                $body
            }
            _ => $otherwise,
        }
    };
}

/// Number of invertible n×n matrices over the ring `ring`.
pub fn count_invertible(ring: RingId, n: usize, exec: Exec) -> Result<u64, MatrixError> {
    with_ring!(ring, R => with_dim!(n, N => count_invertible_in::<R, N>(exec), Err(MatrixError::Dimension(n))))
}

/// |M_n(R)| computed by formula, saturating at `None`.
pub fn matrix_ring_size(ring: RingId, n: usize) -> Option<u128> {
    (ring.order() as u128).checked_pow((n * n) as u32)
}
