//! Brute-force oracles for the countable claims and the determinant floors.
//!
//! Every oracle is deterministic: enumeration orders are fixed, sampling
//! uses a seeded generator and failures report the first witness in
//! enumeration order.

use std::collections::HashSet;
use std::fmt;
use std::time::{Duration, Instant};

use num_rational::Rational64;
use rand::{Rng, SeedableRng};
use rand_chacha::ChaCha8Rng;
use thiserror::Error;

use crate::bounds;
use crate::cyclic::{f16m4_e_image, f16m4_w_image, iso_f16_to_m4, iso_f8_to_m3, phi, psi, CyclicElem, JPair};
use crate::exec::{min_option, Exec};
use crate::golden::{
    self, abs_det_sq, classify_projection, gram, gram_add, gram_det, min_det, norm_pair_class, project,
    project_mod_1pi, project_mod_2, project_mod_2_untwisted, GoldenCodeword, Ideal, Projection, QamBox,
};
use crate::matrices::{count_invertible, matrix_ring_size, Matrix};
use crate::outer_codes::{self, hamming_weight, lee_weight, LinearOuterCode, WeightKind};
use crate::rings::{norm_f4i, F16Alt, F2i, F4i, GaloisGenerator, Ring, RingId, F16, F2, F4, F8};
use crate::surd::Sqrt5Value;

/// Pair checks run exhaustively up to this many pairs, sampled above it.
pub const EXHAUSTIVE_PAIRS: usize = 1 << 20;
/// Samples drawn when the pair space is too large.
pub const SAMPLED_PAIRS: usize = 1 << 16;
/// Largest number of codeword tuples [`brute_delta_min`] enumerates.
pub const DELTA_MIN_LIMIT: u64 = 1 << 28;

const SEED: u64 = 0x5eed_c0de;

/// Outcome of one claim.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct OracleReport {
    pub claim: String,
    /// Description of the enumerated space.
    pub space: String,
    pub passed: bool,
    /// Smallest failing element, or a summary of what was established.
    pub witness: String,
    /// Reported but not counted towards the overall verdict.
    pub advisory: bool,
    pub elapsed: Duration,
}

impl OracleReport {
    fn new(claim: impl Into<String>, space: impl Into<String>, passed: bool, witness: impl Into<String>) -> Self {
        Self {
            claim: claim.into(),
            space: space.into(),
            passed,
            witness: witness.into(),
            advisory: false,
            elapsed: Duration::ZERO,
        }
    }

    fn advisory(mut self) -> Self {
        self.advisory = true;
        self
    }

    /// `claim<TAB>pass|fail<TAB>witness`; advisory lines are marked in the
    /// witness field.
    pub fn tsv_line(&self) -> String {
        let status = if self.passed { "pass" } else { "fail" };
        let note = if self.advisory { "[advisory] " } else { "" };
        format!("{}\t{}\t{}{}", self.claim, status, note, self.witness)
    }

    /// Counts towards the verdict and failed.
    pub fn is_failure(&self) -> bool {
        !self.passed && !self.advisory
    }
}

impl fmt::Display for OracleReport {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        let status = if self.passed { "PASS" } else { "FAIL" };
        let note = if self.advisory { " (advisory)" } else { "" };
        write!(f, "{status}{note} {} [{}]: {}", self.claim, self.space, self.witness)
    }
}

fn timed(f: impl FnOnce() -> Vec<OracleReport>) -> Vec<OracleReport> {
    let start = Instant::now();
    let mut reports = f();
    let elapsed = start.elapsed();
    for r in &mut reports {
        r.elapsed = elapsed;
    }
    reports
}

fn expect_eq<T: PartialEq + fmt::Display>(claim: &str, space: &str, found: T, expected: T) -> OracleReport {
    let passed = found == expected;
    let witness = if passed { format!("{found}") } else { format!("found {found}, expected {expected}") };
    OracleReport::new(claim, space, passed, witness)
}

// ---------------------------------------------------------------------------
// Δ_min over coset codes

#[derive(Clone, PartialEq, Eq, Debug, Error)]
pub enum SearchError {
    #[error("{tuples} codeword tuples exceed the search limit {limit}")]
    TooLarge { tuples: u128, limit: u64 },
    #[error("outer codeword has length {found}, expected {expected}")]
    Length { expected: usize, found: usize },
    #[error("outer codeword symbol lies in the quotient by ({found}), search uses ({expected})")]
    Ideal { expected: Ideal, found: Ideal },
}

/// Result of an exhaustive Δ_min search.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DeltaMin {
    /// min det(Σ XᵢXᵢ*) over nonzero tuples.
    pub value: Sqrt5Value,
    pub witness: Vec<GoldenCodeword>,
    pub tuples: u64,
    /// First tuple violating det(Σ XᵢXᵢ*) ≥ (Σ |det Xᵢ|)², checked for L ≤ 2.
    pub minkowski_violation: Option<Vec<GoldenCodeword>>,
}

struct Member {
    cw: GoldenCodeword,
    gram: golden::GoldenMatrix,
    abs_det_sq: Rational64,
}

/// Whether det(ΣXX*) ≥ (Σ|det Xᵢ|)² for one or two components.
fn minkowski_holds(delta: Sqrt5Value, parts: &[Rational64]) -> bool {
    match parts {
        [r] => delta == Sqrt5Value::rational(*r),
        [r1, r2] => {
            // Δ − r₁ − r₂ ≥ 2√(r₁r₂)
            let lhs = delta - Sqrt5Value::rational(*r1 + *r2);
            lhs >= Sqrt5Value::from_integer(0)
                && lhs * lhs >= Sqrt5Value::rational(Rational64::from_integer(4) * *r1 * *r2)
        }
        _ => true,
    }
}

/// Exact Δ_min of the coset code π⁻¹(C) restricted to the box: every tuple
/// (X₁, …, X_L) of box codewords whose projections form a codeword of C.
pub fn brute_delta_min(
    outer: &[Vec<Projection>],
    ideal: Ideal,
    qam: QamBox,
    length: usize,
    exec: Exec,
) -> Result<Option<DeltaMin>, SearchError> {
    for word in outer {
        if word.len() != length {
            return Err(SearchError::Length { expected: length, found: word.len() });
        }
        if let Some(p) = word.iter().find(|p| p.ideal() != ideal) {
            return Err(SearchError::Ideal { expected: ideal, found: p.ideal() });
        }
    }
    let classes = match ideal {
        Ideal::OnePlusI => 16,
        Ideal::Two => 256,
    };
    let mut buckets: Vec<Vec<Member>> = (0..classes).map(|_| Vec::new()).collect();
    for cw in qam.codewords() {
        buckets[project(cw, ideal).index()].push(Member { cw, gram: gram(cw), abs_det_sq: abs_det_sq(cw) });
    }
    // tuples per outer codeword, then global index = offset + mixed radix
    let sizes: Vec<Vec<u64>> =
        outer.iter().map(|w| w.iter().map(|p| buckets[p.index()].len() as u64).collect()).collect();
    let counts: Vec<u128> = sizes.iter().map(|s| s.iter().map(|&x| x as u128).product()).collect();
    let total: u128 = counts.iter().sum();
    if total > DELTA_MIN_LIMIT as u128 {
        return Err(SearchError::TooLarge { tuples: total, limit: DELTA_MIN_LIMIT });
    }
    let offsets: Vec<u64> = counts
        .iter()
        .scan(0u64, |acc, &c| {
            let start = *acc;
            *acc += c as u64;
            Some(start)
        })
        .collect();
    let members = |t: u64| -> Vec<&Member> {
        let w = offsets.partition_point(|&o| o <= t) - 1;
        let mut rem = t - offsets[w];
        let mut picks = vec![0u64; length];
        for (slot, &size) in picks.iter_mut().zip(&sizes[w]).rev() {
            *slot = rem % size;
            rem /= size;
        }
        outer[w].iter().zip(picks).map(|(p, k)| &buckets[p.index()][k as usize]).collect()
    };
    type Acc = (Option<(Sqrt5Value, u64)>, Option<u64>);
    let (best, violation): Acc = exec.map_reduce(
        0..total as u64,
        (None, None),
        |t| {
            let ms = members(t);
            if ms.iter().all(|m| m.cw.is_zero()) {
                return (None, None);
            }
            let sum = ms.iter().skip(1).fold(ms[0].gram, |acc, m| gram_add(&acc, &m.gram));
            let value = gram_det(&sum);
            let parts: Vec<Rational64> = ms.iter().map(|m| m.abs_det_sq).collect();
            let bad = (!minkowski_holds(value, &parts)).then_some(t);
            (Some((value, t)), bad)
        },
        |a: Acc, b: Acc| (min_option(a.0, b.0), min_option(a.1, b.1)),
    );
    let tuple = |t: u64| members(t).iter().map(|m| m.cw).collect::<Vec<_>>();
    Ok(best.map(|(value, t)| DeltaMin {
        value,
        witness: tuple(t),
        tuples: total as u64,
        minkowski_violation: violation.map(tuple),
    }))
}

/// Codewords of a code over M2(F2) as projection labels for ideal (1+i).
pub fn coset_labels_m2f2(code: &LinearOuterCode<Matrix<F2, 2>>) -> Vec<Vec<Projection>> {
    code.codewords()
        .expect("small outer code")
        .into_iter()
        .map(|w| w.into_iter().map(Projection::F2).collect())
        .collect()
}

/// Codewords of a code over M2(F2\[i\]) as projection labels for ideal (2).
pub fn coset_labels_m2f2i(code: &LinearOuterCode<Matrix<F2i, 2>>) -> Vec<Vec<Projection>> {
    code.codewords()
        .expect("small outer code")
        .into_iter()
        .map(|w| w.into_iter().map(Projection::F2i).collect())
        .collect()
}

fn format_tuple(t: &[GoldenCodeword]) -> String {
    let parts: Vec<String> = t.iter().map(ToString::to_string).collect();
    format!("[{}]", parts.join(" "))
}

// ---------------------------------------------------------------------------
// Golden code claims

/// Minimum nonzero |det|² over the box equals δ = 1/5.
pub fn certify_min_det(qam: QamBox, exec: Exec) -> OracleReport {
    let space = format!("{} nonzero codewords, {qam}", qam.codeword_count() - 1);
    match min_det(qam, None, exec) {
        Some(w) => {
            let passed = w.abs_det_sq == golden::delta();
            let witness = format!("min |det|^2 = {} at {}", w.abs_det_sq, w.codeword);
            OracleReport::new("golden.min-det", space, passed, witness)
        }
        None => OracleReport::new("golden.min-det", space, false, "no nonzero codeword"),
    }
}

/// The determinant floor of each projection class (ideal (1+i)) or of each
/// norm-pair class (ideal (2)) holds for every nonzero codeword in the box.
pub fn certify_det_floors(ideal: Ideal, qam: QamBox, exec: Exec) -> OracleReport {
    let delta = golden::delta();
    let claim = match ideal {
        Ideal::OnePlusI => "golden.det-floor-1pi",
        Ideal::Two => "golden.det-floor-2",
    };
    // (first violation, per-class minima)
    type Acc = (Option<u64>, [Option<Rational64>; 3]);
    let class_of = |cw: GoldenCodeword| -> (usize, i64) {
        match ideal {
            Ideal::OnePlusI => {
                let c = classify_projection(&project(cw, ideal));
                (c as usize, c.floor_multiple(ideal))
            }
            Ideal::Two => {
                let c = norm_pair_class(&project_mod_2(cw));
                (c as usize, c.floor_multiple())
            }
        }
    };
    let (violation, minima): Acc = exec.map_reduce(
        0..qam.codeword_count(),
        (None, [None; 3]),
        |i| {
            let cw = qam.codeword(i);
            let mut mins = [None; 3];
            if cw.is_zero() {
                return (None, mins);
            }
            let (class, floor) = class_of(cw);
            let value = abs_det_sq(cw);
            mins[class] = Some(value);
            ((value < delta * floor).then_some(i), mins)
        },
        |a: Acc, b: Acc| {
            let mins = std::array::from_fn(|k| min_option(a.1[k], b.1[k]));
            (min_option(a.0, b.0), mins)
        },
    );
    let labels: [&str; 3] = match ideal {
        Ideal::OnePlusI => ["zero", "nonunit", "unit"],
        Ideal::Two => ["equal-norms", "distinct-nonzero-norms", "one-zero-norm"],
    };
    let summary: Vec<String> = labels
        .iter()
        .zip(minima)
        .map(|(l, m)| format!("{l}:{}", m.map_or("-".to_string(), |v| v.to_string())))
        .collect();
    let space = format!("{} nonzero codewords, {qam}", qam.codeword_count() - 1);
    match violation {
        None => OracleReport::new(claim, space, true, format!("class minima {}", summary.join(" "))),
        Some(i) => {
            let cw = qam.codeword(i);
            let (class, floor) = class_of(cw);
            OracleReport::new(
                claim,
                space,
                false,
                format!("{cw} in class {} has |det|^2 = {} < {}", labels[class], abs_det_sq(cw), delta * floor),
            )
        }
    }
}

/// The projections are ring homomorphisms on products of box codewords.
pub fn certify_projection_homomorphism(qam: QamBox, exec: Exec) -> Vec<OracleReport> {
    let words: Vec<GoldenCodeword> = qam.codewords().collect();
    let n = words.len() as u64;
    let space = format!("{} ordered pairs, {qam}", n * n);
    let first_failure = |f: &(dyn Fn(GoldenCodeword, GoldenCodeword) -> bool + Sync)| {
        exec.find_first(0..n * n, |t| {
            let (x, y) = (words[(t / n) as usize], words[(t % n) as usize]);
            !f(x, y)
        })
        .map(|t| format!("x={} y={}", words[(t / n) as usize], words[(t % n) as usize]))
    };
    let report = |claim: &str, fail: Option<String>| match fail {
        None => OracleReport::new(claim, space.clone(), true, "additive and multiplicative"),
        Some(w) => OracleReport::new(claim, space.clone(), false, w),
    };
    vec![
        report(
            "golden.projection-hom-1pi",
            first_failure(&|x, y| {
                project_mod_1pi(x + y) == project_mod_1pi(x) + project_mod_1pi(y)
                    && project_mod_1pi(x * y) == project_mod_1pi(x) * project_mod_1pi(y)
            }),
        ),
        report(
            "golden.projection-hom-2",
            first_failure(&|x, y| {
                project_mod_2(x + y) == project_mod_2(x) + project_mod_2(y)
                    && project_mod_2(x * y) == project_mod_2(x) * project_mod_2(y)
            }),
        ),
        report(
            "golden.projection-hom-2-untwisted",
            first_failure(&|x, y| {
                project_mod_2_untwisted(x * y) == project_mod_2_untwisted(x) * project_mod_2_untwisted(y)
            }),
        )
        .advisory(),
    ]
}

// ---------------------------------------------------------------------------
// Isomorphisms

fn ring_elements<R: Ring>() -> Vec<R> {
    R::elements().collect()
}

fn jpairs<R: GaloisGenerator>() -> Vec<JPair<R>> {
    R::elements().flat_map(|a| R::elements().map(move |b| JPair::new(a, b))).collect()
}

struct HomCheck {
    space: String,
    additive: Option<String>,
    multiplicative: Option<String>,
    identity: bool,
    bijective: Result<(), String>,
}

fn check_hom<X, Y: Ring>(xs: Vec<X>, one: X, map: impl Fn(&X) -> Y + Sync, exec: Exec) -> HomCheck
where
    X: Copy + fmt::Display + Sync + std::ops::Add<Output = X> + std::ops::Mul<Output = X>,
{
    let images: Vec<Y> = xs.iter().map(&map).collect();
    let n = xs.len();
    let pairs: Vec<(usize, usize)> = if n * n <= EXHAUSTIVE_PAIRS {
        (0..n).flat_map(|i| (0..n).map(move |j| (i, j))).collect()
    } else {
        let mut rng = ChaCha8Rng::seed_from_u64(SEED);
        (0..SAMPLED_PAIRS).map(|_| (rng.gen_range(0..n), rng.gen_range(0..n))).collect()
    };
    let space = if n * n <= EXHAUSTIVE_PAIRS {
        format!("all {} pairs", pairs.len())
    } else {
        format!("{} sampled pairs of {} elements", pairs.len(), n)
    };
    let find = |bad: &(dyn Fn(usize, usize) -> bool + Sync)| {
        exec.map_reduce_slice(&pairs, None, |k, &(i, j)| bad(i, j).then_some(k), min_option)
            .map(|k| format!("x={} y={}", xs[pairs[k].0], xs[pairs[k].1]))
    };
    let additive = find(&|i, j| map(&(xs[i] + xs[j])) != images[i] + images[j]);
    let multiplicative = find(&|i, j| map(&(xs[i] * xs[j])) != images[i] * images[j]);
    let distinct: HashSet<Y> = images.iter().copied().collect();
    let bijective = if distinct.len() == n && n == Y::ORDER {
        Ok(())
    } else {
        Err(format!("{} distinct images of {} elements into {}", distinct.len(), n, Y::ORDER))
    };
    HomCheck { space, additive, multiplicative, identity: map(&one) == Y::one(), bijective }
}

fn hom_reports(prefix: &str, check: HomCheck) -> Vec<OracleReport> {
    let line = |sub: &str, fail: Option<String>, ok: &str| {
        let claim = format!("{prefix}.{sub}");
        match fail {
            None => OracleReport::new(claim, check.space.clone(), true, ok),
            Some(w) => OracleReport::new(claim, check.space.clone(), false, w),
        }
    };
    vec![
        line("additive", check.additive.clone(), "f(x+y) = f(x)+f(y)"),
        line("multiplicative", check.multiplicative.clone(), "f(xy) = f(x)f(y)"),
        line("identity", (!check.identity).then(|| "f(1) != 1".to_string()), "f(1) = 1"),
        line("bijective", check.bijective.clone().err(), "image count equals ring order"),
    ]
}

fn relation(claim: &str, holds: bool, ok: &str, fail: String) -> OracleReport {
    let space = "generator images".to_string();
    if holds {
        OracleReport::new(claim, space, true, ok)
    } else {
        OracleReport::new(claim, space, false, fail)
    }
}

pub const ISO_NAMES: &[&str] = &["f8m3", "f16m4", "m2f2_f4j", "m2f2i_f4ij"];

/// Certify one of the explicit isomorphisms.
pub fn certify_iso(name: &str, exec: Exec) -> Option<Vec<OracleReport>> {
    let prefix = format!("iso.{name}");
    Some(match name {
        "f8m3" => {
            let e = crate::cyclic::f8m3_e_image();
            let w = crate::cyclic::f8m3_scalar_image(F8::w());
            let mut out = vec![
                relation(
                    &format!("{prefix}.e3"),
                    e.pow(3) == Matrix::identity(),
                    "E^3 = I",
                    format!("E^3 = {}", e.pow(3)),
                ),
                relation(
                    &format!("{prefix}.we"),
                    w * e == e * w.pow(2),
                    "W E = E W^2",
                    format!("W E = {}, E W^2 = {}", w * e, e * w.pow(2)),
                ),
            ];
            out.extend(hom_reports(
                &prefix,
                check_hom(ring_elements::<CyclicElem<F8, 3>>(), CyclicElem::one(), iso_f8_to_m3, exec),
            ));
            out
        }
        "f16m4" => {
            let (e, w) = (f16m4_e_image(), f16m4_w_image());
            let id = Matrix::<F2, 4>::identity();
            let reducible_poly = w.pow(4) + w.pow(2) + id;
            let field_poly = w.pow(4) + w + id;
            let mut out = vec![
                relation(&format!("{prefix}.e4"), e.pow(4) == id, "E^4 = I", format!("E^4 = {}", e.pow(4))),
                relation(
                    &format!("{prefix}.we"),
                    w * e == e * w.pow(2),
                    "W E = E W^2",
                    format!("W E = {}, E W^2 = {}", w * e, e * w.pow(2)),
                ),
                relation(
                    &format!("{prefix}.w4+w2+1"),
                    reducible_poly.is_zero_matrix(),
                    "W^4+W^2+I = 0",
                    format!("W^4+W^2+I = {reducible_poly}; the tables satisfy w^4+w+1 instead"),
                )
                .advisory(),
                relation(
                    &format!("{prefix}.w4+w+1"),
                    field_poly.is_zero_matrix(),
                    "W^4+W+I = 0",
                    format!("W^4+W+I = {field_poly}"),
                ),
            ];
            out.extend(hom_reports(
                &prefix,
                check_hom(ring_elements::<CyclicElem<F16, 4>>(), CyclicElem::one(), iso_f16_to_m4, exec),
            ));
            let alt = check_hom(ring_elements::<CyclicElem<F16Alt, 4>>(), CyclicElem::one(), iso_f16_to_m4, exec);
            out.push(
                match alt.multiplicative {
                    None => OracleReport::new(
                        format!("{prefix}.f16alt-multiplicative"),
                        alt.space,
                        true,
                        "f(xy) = f(x)f(y)",
                    ),
                    Some(w) => OracleReport::new(
                        format!("{prefix}.f16alt-multiplicative"),
                        alt.space,
                        false,
                        format!("w^4+w^2+1 coefficients: {w}"),
                    ),
                }
                .advisory(),
            );
            out
        }
        "m2f2_f4j" => hom_reports(
            &prefix,
            check_hom(jpairs::<F4>(), JPair::new(F4::one(), F4::zero()), |p: &JPair<F4>| phi(p.a, p.b), exec),
        ),
        "m2f2i_f4ij" => hom_reports(
            &prefix,
            check_hom(jpairs::<F4i>(), JPair::new(F4i::one(), F4i::zero()), |p: &JPair<F4i>| psi(p.a, p.b), exec),
        ),
        _ => return None,
    })
}

// ---------------------------------------------------------------------------
// Counts, isometry, weights

pub fn certify_counts(exec: Exec) -> Vec<OracleReport> {
    let count = |r: RingId, n: usize| count_invertible(r, n, exec).expect("small matrix ring");
    let nonunits_f4i = F4i::elements().filter(|x| !x.is_unit()).count() as u64;
    let size = |r: RingId, n: usize| matrix_ring_size(r, n).expect("size fits");
    vec![
        expect_eq("counts.m2f2-size", "formula |R|^(n^2)", size(RingId::F2, 2), 1 << 4),
        expect_eq("counts.m3f4-size", "formula |R|^(n^2)", size(RingId::F4, 3), 1 << 18),
        expect_eq("counts.m4f2-size", "formula |R|^(n^2)", size(RingId::F2, 4), 1 << 16),
        expect_eq("counts.m2f2-invertible", "16 matrices", count(RingId::F2, 2), 6),
        expect_eq("counts.m2f2i-invertible", "256 matrices", count(RingId::F2i, 2), 96),
        expect_eq("counts.f4i-nonunits", "16 elements", nonunits_f4i, 4),
    ]
}

/// w_B(φ(y)) = Hamming weight of y for every y ∈ F4².
pub fn certify_isometry() -> OracleReport {
    let fail = F4::elements()
        .flat_map(|a| F4::elements().map(move |b| (a, b)))
        .find(|&(a, b)| outer_codes::bachoc_weight(&phi(a, b)) != hamming_weight(&[a, b]));
    match fail {
        None => OracleReport::new("weights.isometry", "16 pairs in F4^2", true, "w_B(phi(y)) = w_H(y)"),
        Some((a, b)) => OracleReport::new(
            "weights.isometry",
            "16 pairs in F4^2",
            false,
            format!("y=({a},{b}): w_B = {}, w_H = {}", outer_codes::bachoc_weight(&phi(a, b)), hamming_weight(&[a, b])),
        ),
    }
}

/// ψ(p, q) is a unit of M2(F2\[i\]) exactly when N(p) + N(q) is a unit of
/// F2\[i\]; the unit test uses an exhaustive inverse search.
pub fn certify_psi_units() -> OracleReport {
    let all: Vec<Matrix<F2i, 2>> = Matrix::elements().collect();
    let id = Matrix::identity();
    let fail = F4i::elements().flat_map(|p| F4i::elements().map(move |q| (p, q))).find(|&(p, q)| {
        let m = psi(p, q);
        let has_inverse = all.iter().any(|&y| m * y == id && y * m == id);
        let norm_unit = matches!(norm_f4i(p) + norm_f4i(q), F2i::ONE | F2i::I);
        has_inverse != norm_unit
    });
    match fail {
        None => OracleReport::new("weights.psi-units", "256 pairs in F4[i]^2", true, "unit iff N(p)+N(q) in {1,i}"),
        Some((p, q)) => OracleReport::new("weights.psi-units", "256 pairs in F4[i]^2", false, format!("({p},{q})")),
    }
}

/// Lee floor on the inner parity code, in its strong form: every nonzero
/// member has w_L ≥ 2.
pub fn certify_lee_floor() -> OracleReport {
    let words = outer_codes::inner_parity().codewords().expect("64 codewords");
    let nonzero: Vec<&Vec<F4i>> = words.iter().filter(|w| w.iter().any(|x| !x.is_zero())).collect();
    let space = format!("{} nonzero inner-parity pairs", nonzero.len());
    let failures: Vec<&&Vec<F4i>> = nonzero.iter().filter(|w| lee_weight(w[0], w[1]) < 2).collect();
    match failures.first() {
        None => OracleReport::new("weights.lee-floor", space, true, "w_L >= 2"),
        Some(w) => OracleReport::new(
            "weights.lee-floor",
            space,
            false,
            format!(
                "({},{}) has w_L = {}; {} of {} pairs fall below 2",
                w[0],
                w[1],
                lee_weight(w[0], w[1]),
                failures.len(),
                nonzero.len()
            ),
        ),
    }
}

/// The provable form: pairs with a unit first component have w_L ≥ 2, and
/// pairs with a non-unit first component have both norms zero, so their
/// projection falls in the equal-norm class with floor 4δ.
pub fn certify_lee_floor_units() -> OracleReport {
    let words = outer_codes::inner_parity().codewords().expect("64 codewords");
    let space = "63 nonzero inner-parity pairs".to_string();
    let fail = words.iter().filter(|w| w.iter().any(|x| !x.is_zero())).find(|w| {
        if w[0].is_unit() {
            lee_weight(w[0], w[1]) < 2
        } else {
            !(norm_f4i(w[0]).is_zero() && norm_f4i(w[1]).is_zero())
        }
    });
    match fail {
        None => OracleReport::new(
            "weights.lee-floor-units",
            space,
            true,
            "unit first component: w_L >= 2; otherwise both norms 0",
        ),
        Some(w) => OracleReport::new("weights.lee-floor-units", space, false, format!("({},{})", w[0], w[1])),
    }
}

// ---------------------------------------------------------------------------
// Named codes

fn distance_report<R: outer_codes::Weighted>(
    claim: &str,
    code: &LinearOuterCode<R>,
    kind: WeightKind,
    expected: u64,
    exec: Exec,
) -> OracleReport {
    let space = format!("{} messages", code.message_count());
    match code.min_distance(kind, exec) {
        Ok(Some(w)) => {
            let passed = w.distance == expected;
            let witness = format!(
                "d_{kind} = {} at {}{}",
                w.distance,
                outer_codes::format_word(&w.codeword),
                if passed { String::new() } else { format!(", expected {expected}") }
            );
            OracleReport::new(claim, space, passed, witness)
        }
        Ok(None) => OracleReport::new(claim, space, false, "zero code"),
        Err(e) => OracleReport::new(claim, space, false, e.to_string()),
    }
}

pub fn certify_named_codes(exec: Exec) -> Vec<OracleReport> {
    use outer_codes::*;
    let hex = hexacode();
    let dual = dual_repetition_4_3_2();
    let pushed = phi_pushforward(&dual).expect("even length");
    let mut out = vec![
        distance_report("codes.hexacode", &hex, WeightKind::Hamming, 4, exec),
        distance_report("codes.dualrep", &dual, WeightKind::Hamming, 2, exec),
        distance_report("codes.hexacode-lift", &lift_f4_code_to_m2f2(&hex), WeightKind::Hamming, 4, exec),
        distance_report("codes.dualrep-lift", &lift_f4_code_to_m2f2(&dual), WeightKind::Hamming, 2, exec),
        distance_report("codes.dualrep-phi-hamming", &pushed, WeightKind::Hamming, 1, exec),
        distance_report("codes.dualrep-phi-bachoc", &pushed, WeightKind::Bachoc, 2, exec),
        distance_report(
            "codes.hexacode-phi-bachoc",
            &phi_pushforward(&hex).expect("even length"),
            WeightKind::Bachoc,
            4,
            exec,
        ),
        distance_report("codes.rs-4-2", &rs_4_2(), WeightKind::Hamming, 3, exec),
        distance_report("codes.inner-parity", &inner_parity(), WeightKind::Hamming, 1, exec),
    ];
    for (claim, code, d) in [("codes.rs-16-13", rs_16_13(), 4usize), ("codes.rs-16-14", rs_16_14(), 3)] {
        let cert = certify_by_columns(&code, d, exec);
        let space = format!("{} sets of {} parity-check columns", cert.subsets_checked, d - 1);
        let passed = cert.passed(code.length(), code.dimension());
        let witness = match &cert.dependent_columns {
            Some(cols) => format!("dependent columns {cols:?}"),
            None if passed => format!("every {} columns independent, G H^T = 0, d = {d}", d - 1),
            None => format!("{cert:?}"),
        };
        out.push(OracleReport::new(claim, space, passed, witness));
    }
    out
}

// ---------------------------------------------------------------------------
// Coset bounds

/// Brute-force Δ_min against the closed-form bounds.
pub fn certify_coset_bounds(exec: Exec) -> Vec<OracleReport> {
    let delta = golden::delta();
    let mut out = Vec::new();

    // uncoded: all 16 cosets, L = 1
    let all: Vec<Vec<Projection>> = Matrix::<F2, 2>::elements().map(|m| vec![Projection::F2(m)]).collect();
    let qam = QamBox::symmetric(2);
    out.push(delta_report(
        "coset.uncoded",
        &all,
        Ideal::OnePlusI,
        qam,
        1,
        |v| v == Sqrt5Value::rational(delta),
        "= 1/5".into(),
        exec,
    ));

    // the all-zero projection class: Δ = |a|^{2n} δ
    let zero = vec![vec![Projection::F2(Matrix::zero())]];
    out.push(delta_report(
        "coset.zero-class",
        &zero,
        Ideal::OnePlusI,
        qam,
        1,
        |v| v == Sqrt5Value::rational(delta * 4),
        "= 4/5".into(),
        exec,
    ));

    // L = 2 repetition code over M2(F2)
    let rep = coset_labels_m2f2(&outer_codes::repetition(2));
    let bound = bounds::hamming_bound(2, 2, delta, 2);
    let small = QamBox::new(-1, 1);
    out.push(delta_report(
        "coset.repetition-2",
        &rep,
        Ideal::OnePlusI,
        small,
        2,
        |v| v >= Sqrt5Value::rational(bound),
        format!(">= hamming bound {bound}"),
        exec,
    ));
    out
}

#[allow(clippy::too_many_arguments)]
fn delta_report(
    claim: &str,
    outer: &[Vec<Projection>],
    ideal: Ideal,
    qam: QamBox,
    length: usize,
    accept: impl Fn(Sqrt5Value) -> bool,
    expectation: String,
    exec: Exec,
) -> OracleReport {
    match brute_delta_min(outer, ideal, qam, length, exec) {
        Ok(Some(d)) => {
            let space = format!("{} tuples, {} outer codewords, {qam}", d.tuples, outer.len());
            let ok = accept(d.value);
            let mut witness = format!("delta_min = {} ({expectation}) at {}", d.value, format_tuple(&d.witness));
            if let Some(v) = &d.minkowski_violation {
                witness.push_str(&format!("; sum-of-|det| bound violated at {}", format_tuple(v)));
            }
            OracleReport::new(claim, space, ok && d.minkowski_violation.is_none(), witness)
        }
        Ok(None) => OracleReport::new(claim, format!("{qam}"), false, "no nonzero tuple"),
        Err(e) => OracleReport::new(claim, format!("{qam}"), false, e.to_string()),
    }
}

// ---------------------------------------------------------------------------
// Bound formulas

pub fn certify_bound_formulas() -> Vec<OracleReport> {
    let r = Rational64::new;
    let dpp = r(1, 1125);
    let claimed_rate = r(47, 64);
    let rate = bounds::rate_m4(16, [13, 14, 15, 15]);
    vec![
        expect_eq("bounds.hamming", "n=2 |a|^2=2 delta=1/5 d=2", bounds::hamming_bound(2, 2, r(1, 5), 2), r(4, 5)),
        expect_eq(
            "bounds.multilevel-m4",
            "d=(4,3,2,2) delta=1/1125",
            bounds::multilevel_bound_m4([4, 3, 2, 2], dpp, false).value,
            r(16, 1) * dpp,
        ),
        expect_eq(
            "bounds.rho-m4",
            "L=16, 28 redundancy bits",
            bounds::rho_multilevel_m4(16, [13, 14, 15, 15]),
            r(7, 16),
        ),
        {
            let mut rep = expect_eq("bounds.rate-m4", "(13+14+15+15)/64", rate, claimed_rate);
            if !rep.passed {
                rep.witness = format!("(13+14+15+15)/64 = {rate}, claimed {claimed_rate}");
            }
            rep
        },
    ]
}

// ---------------------------------------------------------------------------
// Registry

/// Claim groups accepted by [`run_claim`].
pub const CLAIMS: &[&str] = &[
    "counts",
    "isometry",
    "psi-units",
    "lee-floor",
    "lee-floor-units",
    "codes",
    "min-det",
    "det-floor-1pi",
    "det-floor-2",
    "projection-hom",
    "iso-f8m3",
    "iso-f16m4",
    "iso-m2f2_f4j",
    "iso-m2f2i_f4ij",
    "coset-bounds",
    "bound-formulas",
];

#[derive(Clone, Debug, PartialEq, Eq, Error)]
#[error("unknown claim {0:?}")]
pub struct UnknownClaim(pub String);

/// Run one claim group (several report lines for some groups).
pub fn run_claim(id: &str, exec: Exec) -> Result<Vec<OracleReport>, UnknownClaim> {
    let qam = QamBox::symmetric(2);
    Ok(timed(|| match id {
        "counts" => certify_counts(exec),
        "isometry" => vec![certify_isometry()],
        "psi-units" => vec![certify_psi_units()],
        "lee-floor" => vec![certify_lee_floor()],
        "lee-floor-units" => vec![certify_lee_floor_units()],
        "codes" => certify_named_codes(exec),
        "min-det" => vec![certify_min_det(qam, exec)],
        "det-floor-1pi" => vec![certify_det_floors(Ideal::OnePlusI, qam, exec)],
        "det-floor-2" => vec![certify_det_floors(Ideal::Two, qam, exec)],
        "projection-hom" => certify_projection_homomorphism(QamBox::new(0, 1), exec),
        "bound-formulas" => certify_bound_formulas(),
        "coset-bounds" => certify_coset_bounds(exec),
        _ => id.strip_prefix("iso-").and_then(|name| certify_iso(name, exec)).unwrap_or_default(),
    }))
    .and_then(|r| if r.is_empty() { Err(UnknownClaim(id.to_string())) } else { Ok(r) })
}

pub fn run_all(exec: Exec) -> Vec<OracleReport> {
    CLAIMS.iter().flat_map(|id| run_claim(id, exec).expect("registered claim")).collect()
}
