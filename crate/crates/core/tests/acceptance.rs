//! Acceptance criteria. Each test prints one `criterion <id>: PASS|FAIL`
//! line. Every comparison is exact (zero tolerance) except the floating
//! cross-check in criterion 1, pinned at 1e-9. Time budgets are asserted
//! for single-threaded runs.

use std::collections::HashSet;
use std::time::{Duration, Instant};

use num_rational::Rational64;

use coset_core::bounds;
use coset_core::golden::{self, Ideal, QamBox};
use coset_core::matrices::Matrix;
use coset_core::outer_codes::{self, lee_weight, WeightKind};
use coset_core::rings::{F2i, F4i, Ring, F2};
use coset_core::surd::Sqrt5Value;
use coset_core::verify::{self, OracleReport};
use coset_core::Exec;

const SEQ: Exec = Exec::Sequential;

fn q(n: i64, d: i64) -> Rational64 {
    Rational64::new(n, d)
}

fn criterion(id: &str, passed: bool, detail: &str, elapsed: Duration, budget: Duration) -> bool {
    let in_time = elapsed <= budget;
    let status = if passed && in_time { "PASS" } else { "FAIL" };
    println!("criterion {id}: {status} ({detail}; {:.2?} of {:.0?})", elapsed, budget);
    passed && in_time
}

fn reports_pass(reports: &[OracleReport]) -> bool {
    reports.iter().all(|r| !r.is_failure())
}

fn summary(reports: &[OracleReport]) -> String {
    reports
        .iter()
        .map(|r| format!("{}={}", r.claim, if r.passed { "pass" } else { "fail" }))
        .collect::<Vec<_>>()
        .join(" ")
}

// --- floating oracle for the Golden code ---------------------------------

#[derive(Clone, Copy)]
struct C(f64, f64);

impl std::ops::Add for C {
    type Output = C;
    fn add(self, o: C) -> C {
        C(self.0 + o.0, self.1 + o.1)
    }
}
impl std::ops::Sub for C {
    type Output = C;
    fn sub(self, o: C) -> C {
        C(self.0 - o.0, self.1 - o.1)
    }
}
impl std::ops::Mul for C {
    type Output = C;
    fn mul(self, o: C) -> C {
        C(self.0 * o.0 - self.1 * o.1, self.0 * o.1 + self.1 * o.0)
    }
}

/// |det X|² from the codeword definition in floating point.
fn float_abs_det_sq(g: [(i64, i64); 4]) -> f64 {
    let s5 = 5f64.sqrt();
    let (t, tb) = ((1.0 + s5) / 2.0, (1.0 - s5) / 2.0);
    let i = C(0.0, 1.0);
    let r = |x: f64| C(x, 0.0);
    let [a, b, c, d] = g.map(|(re, im)| C(re as f64, im as f64));
    let alpha = r(1.0) + i - i * r(t);
    let alpha_b = r(1.0) + i - i * r(tb);
    let x00 = alpha * (a + b * r(t));
    let x01 = alpha * (c + d * r(t));
    let x10 = i * alpha_b * (c + d * r(tb));
    let x11 = alpha_b * (a + b * r(tb));
    let det = x00 * x11 - x01 * x10;
    (det.0 * det.0 + det.1 * det.1) / 25.0
}

#[test]
fn criterion_1_golden_min_det() {
    let start = Instant::now();
    let qam = QamBox::symmetric(2);
    let report = verify::certify_min_det(qam, SEQ);
    let exact = golden::min_det(qam, None, SEQ).unwrap();
    let elapsed = start.elapsed();
    // floating cross-check over the same box
    let mut float_min = f64::INFINITY;
    for cw in qam.codewords().filter(|c| !c.is_zero()) {
        let g = cw.coords().map(|z| (z.re, z.im));
        float_min = float_min.min(float_abs_det_sq(g));
    }
    let passed = report.passed && exact.abs_det_sq == q(1, 5) && (float_min - 0.2).abs() < 1e-9;
    let detail = format!("min |det|^2 = {} over {}, float oracle {float_min:.12}", exact.abs_det_sq, qam);
    assert!(criterion("1", passed, &detail, elapsed, Duration::from_secs(30)));
}

#[test]
fn criterion_2_invertible_counts() {
    let start = Instant::now();
    let reports = verify::certify_counts(SEQ);
    // independent oracles: |GL2(F2)| = (4-1)(4-2), and an inverse search over M2(F2[i])
    let all: Vec<Matrix<F2i, 2>> = Matrix::elements().collect();
    let id = Matrix::identity();
    let m2f2i = all.iter().filter(|&&m| all.iter().any(|&y| m * y == id)).count();
    let m2f2 = Matrix::<F2, 2>::elements().filter(|m| m.det() != F2::zero()).count();
    let nonunits = F4i::elements().filter(|&x| !F4i::elements().any(|y| x * y == F4i::one())).count();
    let elapsed = start.elapsed();
    let passed = reports_pass(&reports) && m2f2 == (4 - 1) * (4 - 2) && m2f2i == 96 && nonunits == 4;
    let detail = format!("M2(F2)={m2f2} M2(F2[i])={m2f2i} F4[i] non-units={nonunits}");
    assert!(criterion("2", passed, &detail, elapsed, Duration::from_secs(1)));
}

#[test]
fn criterion_3_isometry() {
    let start = Instant::now();
    let report = verify::certify_isometry();
    let elapsed = start.elapsed();
    assert!(criterion("3", report.passed, &report.witness, elapsed, Duration::from_secs(1)));
}

#[test]
fn criterion_4_det_floors() {
    let start = Instant::now();
    let qam = QamBox::symmetric(2);
    let r1 = verify::certify_det_floors(Ideal::OnePlusI, qam, SEQ);
    let r2 = verify::certify_det_floors(Ideal::Two, qam, SEQ);
    let elapsed = start.elapsed();
    let detail = format!("(1+i): {}; (2): {}", r1.witness, r2.witness);
    assert!(criterion("4", r1.passed && r2.passed, &detail, elapsed, Duration::from_secs(120)));
}

#[test]
fn criterion_5_named_code_distances() {
    let start = Instant::now();
    fn d<R: outer_codes::Weighted>(code: &outer_codes::LinearOuterCode<R>, kind: WeightKind) -> u64 {
        code.min_distance(kind, SEQ).unwrap().unwrap().distance
    }
    let hex = outer_codes::hexacode();
    let dual = outer_codes::dual_repetition_4_3_2();
    let hex_lift = outer_codes::lift_f4_code_to_m2f2(&hex);
    let dual_lift = outer_codes::lift_f4_code_to_m2f2(&dual);
    let pushed = outer_codes::phi_pushforward(&dual).unwrap();
    let values = [
        d(&hex, WeightKind::Hamming),
        d(&dual, WeightKind::Hamming),
        d(&hex_lift, WeightKind::Hamming),
        d(&dual_lift, WeightKind::Hamming),
        d(&pushed, WeightKind::Bachoc),
        d(&pushed, WeightKind::Hamming),
    ];
    let elapsed = start.elapsed();
    let passed = values == [4, 2, 4, 2, 2, 1];
    let detail = format!(
        "hexacode {} dualrep {} lifts {}/{} pushforward bachoc {} hamming {}",
        values[0], values[1], values[2], values[3], values[4], values[5]
    );
    assert!(criterion("5", passed, &detail, elapsed, Duration::from_secs(5)));
}

#[test]
fn criterion_6_inner_parity_lee_floor() {
    let start = Instant::now();
    let words = outer_codes::inner_parity().codewords().unwrap();
    let nonzero: Vec<_> = words.iter().filter(|w| w.iter().any(|x| !x.is_zero())).collect();
    let below: Vec<_> = nonzero.iter().filter(|w| lee_weight(w[0], w[1]) < 2).collect();
    let companion = verify::certify_lee_floor_units();
    let elapsed = start.elapsed();
    let detail = match below.first() {
        None => format!("{} nonzero pairs, all w_L >= 2", nonzero.len()),
        Some(w) => format!(
            "{} of {} nonzero pairs have w_L < 2, first ({},{}) with w_L = {}; unit-restricted claim {}",
            below.len(),
            nonzero.len(),
            w[0],
            w[1],
            lee_weight(w[0], w[1]),
            if companion.passed { "holds" } else { "fails" }
        ),
    };
    let passed = nonzero.len() == 63 && below.is_empty();
    assert!(criterion("6", passed, &detail, elapsed, Duration::from_secs(1)));
}

#[test]
fn criterion_7a_hamming_bound() {
    let v = bounds::hamming_bound(2, 2, q(1, 5), 2);
    assert!(criterion(
        "7a",
        v == q(4, 5),
        &format!("hamming_bound(2,2,1/5,2) = {v}"),
        Duration::ZERO,
        Duration::from_secs(1)
    ));
}

#[test]
fn criterion_7b_multilevel_bound() {
    let dpp = q(1, 1125);
    let b = bounds::multilevel_bound_m4([4, 3, 2, 2], dpp, false);
    let passed = b.value == dpp * 16;
    let detail = format!("multilevel_bound_m4(4,3,2,2, 1/1125) = {} (min term {})", b.value, b.min_term);
    assert!(criterion("7b", passed, &detail, Duration::ZERO, Duration::from_secs(1)));
}

#[test]
fn criterion_7c_normalized_redundancy() {
    let rho = bounds::rho_multilevel_m4(16, [13, 14, 15, 15]);
    let direct = bounds::normalized_redundancy(3 * 4 + 2 * 4 + 4 + 4, 16, 4);
    let passed = rho == q(7, 16) && direct == rho;
    assert!(criterion("7c", passed, &format!("rho_norm = {rho}"), Duration::ZERO, Duration::from_secs(1)));
}

#[test]
fn criterion_7d_rate() {
    let rate = bounds::rate_m4(16, [13, 14, 15, 15]);
    let sum = q(13 + 14 + 15 + 15, 64);
    let passed = rate == sum && rate == q(47, 64);
    let detail = format!("(13+14+15+15)/64 = {sum}, computed rate {rate}, claimed 47/64");
    assert!(criterion("7d", passed, &detail, Duration::ZERO, Duration::from_secs(1)));
}

#[test]
fn criterion_8_isomorphisms() {
    let start = Instant::now();
    let f8 = verify::certify_iso("f8m3", SEQ).unwrap();
    let m2 = verify::certify_iso("m2f2_f4j", SEQ).unwrap();
    let f16 = verify::certify_iso("f16m4", SEQ).unwrap();
    let elapsed = start.elapsed();
    for r in f8.iter().chain(&m2).chain(&f16) {
        println!("  {}", r.tsv_line());
    }
    let f8_exhaustive = f8.iter().any(|r| r.claim == "iso.f8m3.multiplicative" && r.space == "all 262144 pairs");
    let m2_exhaustive = m2.iter().all(|r| r.space == "all 256 pairs");
    let relations: HashSet<&str> = f16.iter().map(|r| r.claim.as_str()).collect();
    let f16_reported = ["iso.f16m4.e4", "iso.f16m4.we", "iso.f16m4.w4+w2+1"].iter().all(|c| relations.contains(c));
    let passed = reports_pass(&f8) && f8_exhaustive && reports_pass(&m2) && m2_exhaustive && f16_reported;
    let detail = format!("f8m3: {}; m2f2_f4j: {}; f16m4 report: {}", summary(&f8), summary(&m2), summary(&f16));
    assert!(criterion("8", passed, &detail, elapsed, Duration::from_secs(120)));
}

#[test]
fn criterion_9_repetition_coset_bound() {
    let start = Instant::now();
    let code = verify::coset_labels_m2f2(&outer_codes::repetition(2));
    let qam = QamBox::new(-1, 1);
    let result = verify::brute_delta_min(&code, Ideal::OnePlusI, qam, 2, SEQ).unwrap().unwrap();
    let bound = bounds::hamming_bound(2, 2, q(1, 5), 2);
    let elapsed = start.elapsed();
    let passed =
        bound == q(4, 5) && result.value >= Sqrt5Value::rational(bound) && result.minkowski_violation.is_none();
    let detail = format!("delta_min = {} over {} tuples ({qam}), hamming bound {bound}", result.value, result.tuples);
    assert!(criterion("9", passed, &detail, elapsed, Duration::from_secs(300)));
}
