//! Closed-form determinant bounds, redundancy, rate and Gilbert–Varshamov.
//!
//! Everything is exact: rationals, or r + s√2 where a √2 appears.

use std::fmt;

use num_bigint::BigInt;
use num_rational::{BigRational, Rational64};

use crate::surd::Sqrt2Value;

fn q(n: i64) -> Rational64 {
    Rational64::from_integer(n)
}

fn square(d: u64) -> Rational64 {
    q((d * d) as i64)
}

/// Δ_min ≥ min(|a|^{2n}·δ, d_H²·δ).
pub fn hamming_bound(n: u32, a_norm_sq: i64, delta: Rational64, d_h: u64) -> Rational64 {
    assert!(d_h >= 1, "distance must be positive");
    let cap = q(a_norm_sq.pow(n)) * delta;
    cap.min(square(d_h) * delta)
}

/// Δ_min ≥ min(4δ, d_B²·δ/2) for M2(F2) with the Bachoc distance.
pub fn bachoc_bound(delta: Rational64, d_b: u64) -> Rational64 {
    assert!(d_b >= 1, "distance must be positive");
    (q(4) * delta).min(square(d_b) * delta / q(2))
}

/// Δ_min ≥ min(16δ, d_H²·δ) for M2(F2\[i\]) (ideal (2), n = 2).
pub fn hamming_bound_m2f2i(delta: Rational64, d_h: u64) -> Rational64 {
    hamming_bound(2, 4, delta, d_h)
}

/// Minimum of the four-level terms and the squared bound times δ.
#[derive(Clone, Copy, PartialEq, Eq, Debug)]
pub struct MultilevelBound {
    /// min{4, d₁, √2 d₂, 2d₃, 2√2 d₄} (times √δ).
    pub min_term: Sqrt2Value,
    /// min_term² · δ.
    pub value: Rational64,
}

/// Four-level bound over M4(F2). With `literal_d3` the last term uses d₃
/// in place of d₄.
pub fn multilevel_bound_m4(d: [u64; 4], delta: Rational64, literal_d3: bool) -> MultilevelBound {
    assert!(d.iter().all(|&x| x >= 1), "distances must be positive");
    let r2 = Sqrt2Value::root();
    let n = |x: u64| Sqrt2Value::from_integer(x as i64);
    let last = if literal_d3 { d[2] } else { d[3] };
    let terms = [n(4), n(d[0]), r2 * n(d[1]), n(2 * d[2]), r2 * n(2 * last)];
    let min_term = terms.into_iter().min().expect("five terms");
    let sq = min_term * min_term;
    debug_assert!(sq.is_rational());
    MultilevelBound { min_term, value: sq.rat * delta }
}

/// min{2d₁, √2 d₂} for the two-level scheme over M2(F2\[i\]).
pub fn multilevel_bound_m2f2i(d1: u64, d2: u64) -> Sqrt2Value {
    assert!(d1 >= 1 && d2 >= 1, "distances must be positive");
    let a = Sqrt2Value::from_integer(2 * d1 as i64);
    let b = Sqrt2Value::root() * Sqrt2Value::from_integer(d2 as i64);
    a.min(b)
}

/// Outer code redundancy bits per channel use: bits / (L·n).
pub fn normalized_redundancy(redundancy_bits: u64, length: u64, n: u64) -> Rational64 {
    assert!(length >= 1 && n >= 1);
    Rational64::new(redundancy_bits as i64, (length * n) as i64)
}

/// Dual-repetition outer code over the Golden code: ((L−1)+4)/(2L).
pub fn rho_parity_code_i(length: u64) -> Rational64 {
    normalized_redundancy(length - 1 + 4, length, 2)
}

/// C_M over the Golden code: 4/(2L).
pub fn rho_parity_code_ii(length: u64) -> Rational64 {
    normalized_redundancy(4, length, 2)
}

/// Four-level scheme with level dimensions k over F16: Σ 4(L − kᵢ) bits
/// over 4L channel uses.
pub fn rho_multilevel_m4(length: u64, dims: [u64; 4]) -> Rational64 {
    let bits: u64 = dims.iter().map(|&k| 4 * (length - k)).sum();
    normalized_redundancy(bits, length, 4)
}

/// Rate Σkᵢ / (4L) of the four-level scheme (F16 symbols over M4(F2)).
pub fn rate_m4(length: u64, dims: [u64; 4]) -> Rational64 {
    Rational64::new(dims.iter().sum::<u64>() as i64, (4 * length) as i64)
}

/// R = (L−1)/(2L) + k/(4L) for the two-level scheme over M2(F2\[i\]).
pub fn rate_m2f2i(length: u64, k: u64) -> Rational64 {
    assert!((1..=length).contains(&k), "need 1 <= k <= L");
    let l = length as i64;
    Rational64::new(l - 1, 2 * l) + Rational64::new(k as i64, 4 * l)
}

/// (4(1+L) + 2(L−k)) / (2L) for the two-level scheme.
pub fn rho_m2f2i(length: u64, k: u64) -> Rational64 {
    normalized_redundancy(4 * (1 + length) + 2 * (length - k), length, 2)
}

fn binomial(n: u64, k: u64) -> BigInt {
    (0..k).fold(BigInt::from(1), |acc, i| acc * BigInt::from(n - i) / BigInt::from(i + 1))
}

/// A_q(L, d) ≥ q^L / Σ_{i<d} C(L,i)(q−1)^i.
pub fn gv_bound(q: u64, length: u64, d: u64) -> BigRational {
    assert!(d >= 1, "distance must be positive");
    let volume: BigInt = (0..d.min(length + 1)).map(|i| binomial(length, i) * BigInt::from(q - 1).pow(i as u32)).sum();
    BigRational::new(BigInt::from(q).pow(length as u32), volume)
}

/// An evaluated bound with its inputs, for reporting.
#[derive(Clone, PartialEq, Debug)]
pub struct BoundReport {
    pub name: &'static str,
    pub inputs: Vec<(&'static str, String)>,
    pub value: BoundValue,
}

#[derive(Clone, PartialEq, Debug)]
pub enum BoundValue {
    Exact(Rational64),
    Surd(Sqrt2Value),
    Big(BigRational),
}

impl BoundValue {
    pub fn to_f64(&self) -> f64 {
        match self {
            BoundValue::Exact(r) => *r.numer() as f64 / *r.denom() as f64,
            BoundValue::Surd(s) => s.to_f64(),
            BoundValue::Big(b) => {
                use num_traits::ToPrimitive;
                b.to_f64().unwrap_or(f64::NAN)
            }
        }
    }
}

impl fmt::Display for BoundValue {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            BoundValue::Exact(r) => write!(f, "{r}"),
            BoundValue::Surd(s) => write!(f, "{s}"),
            BoundValue::Big(b) => write!(f, "{b}"),
        }
    }
}

impl fmt::Display for BoundReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let inputs: Vec<String> = self.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
        write!(f, "{}({}) = {}", self.name, inputs.join(", "), self.value)
    }
}

#[cfg(test)]
mod tests {
    use super::*;
    use proptest::prelude::*;

    fn r(n: i64, d: i64) -> Rational64 {
        Rational64::new(n, d)
    }

    #[test]
    fn hamming_examples() {
        assert_eq!(hamming_bound(2, 2, r(1, 5), 2), r(4, 5));
        let dp = r(1, 49);
        for d in 1..10 {
            assert_eq!(hamming_bound(3, 4, dp, d), (q(64) * dp).min(square(d) * dp));
        }
        let dpp = r(1, 1125);
        assert_eq!(hamming_bound(4, 2, dpp, 3), q(9) * dpp);
        assert_eq!(hamming_bound(4, 2, dpp, 5), q(16) * dpp);
    }

    #[test]
    fn bachoc_and_m2f2i_examples() {
        assert_eq!(bachoc_bound(r(1, 5), 2), r(2, 5));
        assert_eq!(bachoc_bound(r(1, 5), 4), r(4, 5));
        assert_eq!(bachoc_bound(q(1), 1), r(1, 2));
        assert_eq!(hamming_bound_m2f2i(r(1, 5), 4), r(16, 5));
        assert_eq!(hamming_bound_m2f2i(q(1), 1), q(1));
        assert_eq!(hamming_bound_m2f2i(r(1, 5), 5), r(16, 5));
    }

    #[test]
    fn multilevel_examples() {
        let dpp = r(1, 1125);
        let b = multilevel_bound_m4([4, 3, 2, 2], dpp, false);
        assert_eq!(b.value, q(16) * dpp);
        assert_eq!(b.min_term, Sqrt2Value::from_integer(4));
        assert_eq!(multilevel_bound_m4([1, 1, 1, 1], q(1), false).value, q(1));
        let b = multilevel_bound_m4([8, 1, 8, 8], q(1), false);
        assert_eq!((b.value, b.min_term), (q(2), Sqrt2Value::root()));
        // the two readings differ only through the last term
        assert_eq!(multilevel_bound_m4([8, 8, 1, 8], q(1), true).value, q(4));
        assert_eq!(multilevel_bound_m4([8, 8, 8, 1], q(1), false).value, q(8));
        assert_eq!(multilevel_bound_m4([8, 8, 8, 1], q(1), true).value, q(16));

        assert_eq!(multilevel_bound_m2f2i(2, 3), Sqrt2Value::from_integer(4));
        assert_eq!(multilevel_bound_m2f2i(1, 1), Sqrt2Value::root());
        assert_eq!(multilevel_bound_m2f2i(1, 2), Sqrt2Value::from_integer(2));
    }

    #[test]
    fn redundancy_and_rate() {
        assert_eq!(normalized_redundancy(28, 16, 4), r(7, 16));
        assert_eq!(rho_multilevel_m4(16, [13, 14, 15, 15]), r(7, 16));
        assert_eq!(normalized_redundancy(0, 5, 2), q(0));
        for l in 2..20 {
            assert_eq!(rho_parity_code_i(l), r(l as i64 + 3, 2 * l as i64));
            assert_eq!(rho_parity_code_ii(l), r(4, 2 * l as i64));
        }
        assert_eq!(rate_m4(16, [13, 14, 15, 15]), r(57, 64));
        assert_eq!(rate_m2f2i(4, 2), r(1, 2));
        assert_eq!(rho_m2f2i(4, 2), r(2 + 12 - 2, 4));
    }

    #[test]
    fn gv_examples() {
        let b = |n: u64| BigRational::from_integer(BigInt::from(n));
        assert_eq!(gv_bound(4, 7, 1), b(4u64.pow(7)));
        assert_eq!(
            gv_bound(4, 16, 3),
            BigRational::new(BigInt::from(4u64.pow(16)), BigInt::from(1 + 3 * 16 + 9 * 120))
        );
        // d beyond L: the ball is the whole space
        assert_eq!(gv_bound(2, 3, 9), b(1));
    }

    #[test]
    fn report_display() {
        let rep = BoundReport {
            name: "hamming",
            inputs: vec![("n", "2".into()), ("d", "2".into())],
            value: BoundValue::Exact(r(4, 5)),
        };
        assert_eq!(rep.to_string(), "hamming(n=2, d=2) = 4/5");
        assert!((BoundValue::Surd(Sqrt2Value::root()).to_f64() - 2f64.sqrt()).abs() < 1e-12);
    }

    proptest! {
        #[test]
        fn monotone_in_distance(d in 1u64..12, den in 1i64..2000, n in 1u32..5, a in 1i64..5) {
            let delta = r(1, den);
            prop_assert!(hamming_bound(n, a, delta, d) <= hamming_bound(n, a, delta, d + 1));
            prop_assert!(bachoc_bound(delta, d) <= bachoc_bound(delta, d + 1));
            prop_assert!(hamming_bound_m2f2i(delta, d) <= hamming_bound_m2f2i(delta, d + 1));
            prop_assert!(multilevel_bound_m2f2i(d, d) <= multilevel_bound_m2f2i(d + 1, d));
            prop_assert!(multilevel_bound_m2f2i(d, d) <= multilevel_bound_m2f2i(d, d + 1));
        }

        #[test]
        fn multilevel_monotone(d in prop::array::uniform4(1u64..9), k in 0usize..4) {
            let base = multilevel_bound_m4(d, q(1), false).value;
            let mut up = d;
            up[k] += 1;
            prop_assert!(base <= multilevel_bound_m4(up, q(1), false).value);
            prop_assert!(base <= q(16));
        }
    }
}
