//! Linear outer codes over the finite alphabets, their weights and the
//! named example codes.

use std::collections::BTreeSet;
use std::fmt;
use std::str::FromStr;

use thiserror::Error;

use crate::cyclic::{from_f_basis, iso_f16_to_m4, multiplication_matrix, phi, psi, FBasisElem};
use crate::exec::{min_option, Exec};
use crate::matrices::Matrix;
use crate::parse::{split_top_level, ParseError};
use crate::rings::{norm_f4i, F2i, F4i, Field, Ring, RingId, F16, F2, F4, F8};

/// Largest number of messages [`LinearOuterCode::min_distance`] enumerates.
pub const MIN_DISTANCE_LIMIT: u128 = 1 << 24;

#[derive(Debug, Clone, PartialEq, Eq, Error)]
pub enum CodeError {
    #[error("{kind} weight is not defined over {ring}")]
    WeightUnsupported { kind: WeightKind, ring: &'static str },
    #[error("expected {expected} symbols, found {found}")]
    Length { expected: usize, found: usize },
    #[error("{count} codewords exceed the enumeration limit {limit}")]
    TooLarge { count: String, limit: u128 },
    #[error("unknown code {0:?}")]
    UnknownCode(String),
    #[error("code file: {0}")]
    Format(String),
    #[error(transparent)]
    Parse(#[from] ParseError),
}

#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum WeightKind {
    Hamming,
    /// 0 on zero, 1 on units, 2 on nonzero non-units of M2(F2).
    Bachoc,
    /// Lee-like weight of consecutive F4\[i\] pairs.
    LeePair,
}

impl fmt::Display for WeightKind {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        f.write_str(match self {
            WeightKind::Hamming => "hamming",
            WeightKind::Bachoc => "bachoc",
            WeightKind::LeePair => "lee",
        })
    }
}

impl FromStr for WeightKind {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "hamming" => Ok(WeightKind::Hamming),
            "bachoc" => Ok(WeightKind::Bachoc),
            "lee" | "leepair" => Ok(WeightKind::LeePair),
            other => Err(ParseError::Other(format!("unknown weight {other:?}"))),
        }
    }
}

pub fn hamming_weight<R: Ring>(word: &[R]) -> u64 {
    word.iter().filter(|x| !x.is_zero()).count() as u64
}

pub fn bachoc_weight(m: &Matrix<F2, 2>) -> u64 {
    if m.is_zero_matrix() {
        0
    } else if m.is_invertible() {
        1
    } else {
        2
    }
}

fn lift(x: F2i) -> (i64, i64) {
    (x.re() as i64, x.im() as i64)
}

/// |lift(N(x)) + lift(N(y))|² with F2\[i\] ∋ 0, 1, i, 1+i lifted to the same
/// Gaussian integers.
pub fn lee_weight(x: F4i, y: F4i) -> u64 {
    let (a, b) = (lift(norm_f4i(x)), lift(norm_f4i(y)));
    let (re, im) = (a.0 + b.0, a.1 + b.1);
    (re * re + im * im) as u64
}

/// Symbol alphabets that carry one or more of the weights.
pub trait Weighted: Ring {
    fn supports(kind: WeightKind) -> bool {
        kind == WeightKind::Hamming
    }

    /// Weight of a word; `None` if the weight is undefined here.
    fn word_weight(word: &[Self], kind: WeightKind) -> Option<u64> {
        match kind {
            WeightKind::Hamming => Some(hamming_weight(word)),
            _ => None,
        }
    }
}

impl Weighted for F2 {}
impl Weighted for F2i {}
impl Weighted for F4 {}
impl Weighted for F8 {}
impl Weighted for F16 {}
impl Weighted for Matrix<F2i, 2> {}

impl Weighted for Matrix<F2, 2> {
    fn supports(kind: WeightKind) -> bool {
        kind != WeightKind::LeePair
    }

    fn word_weight(word: &[Self], kind: WeightKind) -> Option<u64> {
        match kind {
            WeightKind::Hamming => Some(hamming_weight(word)),
            WeightKind::Bachoc => Some(word.iter().map(bachoc_weight).sum()),
            WeightKind::LeePair => None,
        }
    }
}

impl Weighted for F4i {
    fn supports(_: WeightKind) -> bool {
        true
    }

    fn word_weight(word: &[Self], kind: WeightKind) -> Option<u64> {
        match kind {
            WeightKind::Hamming => Some(hamming_weight(word)),
            WeightKind::Bachoc => None,
            WeightKind::LeePair => {
                if !word.len().is_multiple_of(2) {
                    return None;
                }
                Some(word.chunks_exact(2).map(|p| lee_weight(p[0], p[1])).sum())
            }
        }
    }
}

/// A code generated by the rows of `generator` with message symbols taken
/// from `scalars` (all of R unless restricted to a subring, as for codes
/// lifted from F4 into M2(F2)). Codeword = Σᵢ mᵢ·Gᵢ with left scalars.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct LinearOuterCode<R> {
    pub name: String,
    pub generator: Vec<Vec<R>>,
    pub parity_check: Option<Vec<Vec<R>>>,
    pub scalars: Vec<R>,
    /// Minimum distance claimed for the named codes.
    pub declared_distance: Option<u64>,
}

/// Minimum weight with the first codeword attaining it.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceWitness<R> {
    pub distance: u64,
    pub codeword: Vec<R>,
    pub message: Vec<R>,
}

impl<R: Ring> LinearOuterCode<R> {
    pub fn new(name: impl Into<String>, generator: Vec<Vec<R>>) -> Self {
        let length = generator.first().map_or(0, Vec::len);
        assert!(generator.iter().all(|row| row.len() == length), "ragged generator matrix");
        Self {
            name: name.into(),
            generator,
            parity_check: None,
            scalars: R::elements().collect(),
            declared_distance: None,
        }
    }

    pub fn with_scalars(mut self, scalars: Vec<R>) -> Self {
        self.scalars = scalars;
        self
    }

    pub fn with_parity_check(mut self, h: Vec<Vec<R>>) -> Self {
        self.parity_check = Some(h);
        self
    }

    pub fn with_distance(mut self, d: u64) -> Self {
        self.declared_distance = Some(d);
        self
    }

    pub fn length(&self) -> usize {
        self.generator.first().map_or(0, Vec::len)
    }

    pub fn dimension(&self) -> usize {
        self.generator.len()
    }

    pub fn message_count(&self) -> u128 {
        (self.scalars.len() as u128).saturating_pow(self.dimension() as u32)
    }

    pub fn encode(&self, msg: &[R]) -> Result<Vec<R>, CodeError> {
        if msg.len() != self.dimension() {
            return Err(CodeError::Length { expected: self.dimension(), found: msg.len() });
        }
        let mut word = vec![R::zero(); self.length()];
        for (&m, row) in msg.iter().zip(&self.generator) {
            if m.is_zero() {
                continue;
            }
            for (w, &g) in word.iter_mut().zip(row) {
                *w += m * g;
            }
        }
        Ok(word)
    }

    /// Message at `index`, first symbol most significant.
    pub fn message(&self, mut index: u128) -> Vec<R> {
        let q = self.scalars.len() as u128;
        let mut msg = vec![R::zero(); self.dimension()];
        for slot in msg.iter_mut().rev() {
            *slot = self.scalars[(index % q) as usize];
            index /= q;
        }
        msg
    }

    fn guard(&self) -> Result<u64, CodeError> {
        let count = self.message_count();
        if count > MIN_DISTANCE_LIMIT {
            return Err(CodeError::TooLarge { count: count.to_string(), limit: MIN_DISTANCE_LIMIT });
        }
        Ok(count as u64)
    }

    /// Distinct codewords in lexicographic order of symbol indices.
    pub fn codewords(&self) -> Result<Vec<Vec<R>>, CodeError> {
        let count = self.guard()?;
        let set: BTreeSet<Vec<R>> = (0..count as u128)
            .map(|i| self.encode(&self.message(i)).expect("message has the code dimension"))
            .collect();
        Ok(set.into_iter().collect())
    }

    pub fn contains(&self, word: &[R]) -> Result<bool, CodeError> {
        Ok(self.codewords()?.iter().any(|c| c == word))
    }
}

impl<R: Weighted> LinearOuterCode<R> {
    /// Minimum weight over nonzero codewords. `Ok(None)` for the zero code.
    pub fn min_distance(&self, kind: WeightKind, exec: Exec) -> Result<Option<DistanceWitness<R>>, CodeError> {
        if !R::supports(kind) {
            return Err(CodeError::WeightUnsupported { kind, ring: R::NAME });
        }
        if kind == WeightKind::LeePair && !self.length().is_multiple_of(2) {
            return Err(CodeError::Format(format!("lee weight needs even length, code has length {}", self.length())));
        }
        let count = self.guard()?;
        let best = exec.map_reduce(
            0..count,
            None,
            |i| {
                let word = self.encode(&self.message(i as u128)).expect("message has the code dimension");
                if word.iter().all(|x| x.is_zero()) {
                    return None;
                }
                R::word_weight(&word, kind).map(|w| (w, i))
            },
            min_option,
        );
        Ok(best.map(|(distance, i)| {
            let message = self.message(i as u128);
            let codeword = self.encode(&message).expect("message has the code dimension");
            DistanceWitness { distance, codeword, message }
        }))
    }
}

pub fn format_word<R: fmt::Display>(word: &[R]) -> String {
    let parts: Vec<String> = word.iter().map(ToString::to_string).collect();
    format!("({})", parts.join(","))
}

/// Repetition code of length L.
pub fn repetition<R: Ring>(length: usize) -> LinearOuterCode<R> {
    LinearOuterCode::new(format!("repetition-{length}"), vec![vec![R::one(); length]]).with_distance(length as u64)
}

/// Parity check code (x₁, …, x_{L−1}, x₁ + … + x_{L−1}).
pub fn parity_check<R: Ring>(length: usize) -> LinearOuterCode<R> {
    assert!(length >= 2, "parity check code needs length at least 2");
    let rows = (0..length - 1)
        .map(|i| {
            let mut row = vec![R::zero(); length];
            row[i] = R::one();
            row[length - 1] = R::one();
            row
        })
        .collect();
    LinearOuterCode::new(format!("parity-{length}"), rows)
        .with_parity_check(vec![vec![R::one(); length]])
        .with_distance(2)
}

/// C_M = {(X₁, …, X_{L−1}, X₁ + … + X_{L−1})} over M2(F2).
pub fn matrix_parity(length: usize) -> LinearOuterCode<Matrix<F2, 2>> {
    let mut code = parity_check(length);
    code.name = format!("cm-{length}");
    code
}

/// The [4,3,2] dual of the repetition code: (x₁+x₂+x₃, x₁, x₂, x₃).
pub fn dual_repetition_4_3_2() -> LinearOuterCode<F4> {
    let g = |bits: [u8; 4]| bits.map(F4::new).to_vec();
    LinearOuterCode::new("dualrep", vec![g([1, 1, 0, 0]), g([1, 0, 1, 0]), g([1, 0, 0, 1])])
        .with_parity_check(vec![vec![F4::one(); 4]])
        .with_distance(2)
}

/// The [6,3,4] hexacode.
pub fn hexacode() -> LinearOuterCode<F4> {
    let (o, i, w) = (F4::zero(), F4::one(), F4::w());
    LinearOuterCode::new("hexacode", vec![vec![i, o, o, i, w, w], vec![o, i, o, w, i, w], vec![o, o, i, w, w, i]])
        .with_distance(4)
}

fn evaluation_rows<F: Field>(degrees: std::ops::Range<usize>) -> Vec<Vec<F>> {
    degrees.map(|k| F::elements().map(|x| x.pow(k as u64)).collect()).collect()
}

/// Reed–Solomon code evaluating polynomials of degree < k at every field
/// element (length q). Its dual is the same construction with dimension
/// q − k, which serves as the parity-check matrix.
pub fn reed_solomon_full<F: Field>(k: usize) -> LinearOuterCode<F> {
    let q = F::ORDER;
    assert!((1..=q).contains(&k), "dimension {k} out of range for length {q}");
    LinearOuterCode::new(format!("rs-{q}-{k}"), evaluation_rows(0..k))
        .with_parity_check(evaluation_rows(0..q - k))
        .with_distance((q - k + 1) as u64)
}

pub fn rs_16_13() -> LinearOuterCode<F16> {
    reed_solomon_full(13)
}

pub fn rs_16_14() -> LinearOuterCode<F16> {
    reed_solomon_full(14)
}

pub fn rs_4_2() -> LinearOuterCode<F4> {
    reed_solomon_full(2)
}

/// Pairs (u, u + (1+i)α) over F4\[i\] with α ∈ F4, i.e. the kernel of
/// H = (1+i, 1+i).
pub fn inner_parity() -> LinearOuterCode<F4i> {
    let t = F4i::from_f2i(F2i::ONE_PLUS_I);
    LinearOuterCode::new("inner-parity", vec![vec![F4i::one(), F4i::one()], vec![F4i::zero(), t]])
        .with_parity_check(vec![vec![t, t]])
        .with_distance(2)
}

/// Scalars {M_a : a ∈ F4} ⊂ M2(F2).
fn f4_scalars() -> Vec<Matrix<F2, 2>> {
    F4::elements().map(multiplication_matrix).collect()
}

/// Componentwise x ↦ M_x of a code over F4.
pub fn lift_f4_code_to_m2f2(code: &LinearOuterCode<F4>) -> LinearOuterCode<Matrix<F2, 2>> {
    let rows = code.generator.iter().map(|row| row.iter().map(|&x| multiplication_matrix(x)).collect()).collect();
    let mut lifted = LinearOuterCode::new(format!("{}-lift", code.name), rows).with_scalars(f4_scalars());
    lifted.declared_distance = code.declared_distance;
    lifted
}

/// φ applied to consecutive pairs of positions of an even-length F4 code.
/// Left multiplication by M_a commutes with φ, so the image is generated by
/// the images of the rows over the scalars {M_a}.
pub fn phi_pushforward(code: &LinearOuterCode<F4>) -> Result<LinearOuterCode<Matrix<F2, 2>>, CodeError> {
    if !code.length().is_multiple_of(2) {
        return Err(CodeError::Format(format!("cannot pair positions of length {}", code.length())));
    }
    let rows = code.generator.iter().map(|row| row.chunks_exact(2).map(|p| phi(p[0], p[1])).collect()).collect();
    Ok(LinearOuterCode::new(format!("{}-phi", code.name), rows).with_scalars(f4_scalars()))
}

/// Rank over a field by Gaussian elimination.
pub fn rank<F: Field>(rows: &[Vec<F>]) -> usize {
    let mut m: Vec<Vec<F>> = rows.to_vec();
    let cols = m.first().map_or(0, Vec::len);
    let mut rank = 0;
    for c in 0..cols {
        let Some(p) = (rank..m.len()).find(|&r| !m[r][c].is_zero()) else {
            continue;
        };
        m.swap(rank, p);
        let inv = m[rank][c].inv().expect("pivot is nonzero");
        let pivot: Vec<F> = m[rank].iter().map(|&x| x * inv).collect();
        for (r, row) in m.iter_mut().enumerate() {
            if r != rank && !row[c].is_zero() {
                let f = row[c];
                for (x, &y) in row.iter_mut().zip(&pivot) {
                    *x -= f * y;
                }
            }
        }
        m[rank] = pivot;
        rank += 1;
    }
    rank
}

/// All r-subsets of 0..n in lexicographic order.
pub fn combinations(n: usize, r: usize) -> Vec<Vec<usize>> {
    fn go(start: usize, n: usize, r: usize, cur: &mut Vec<usize>, out: &mut Vec<Vec<usize>>) {
        if cur.len() == r {
            out.push(cur.clone());
            return;
        }
        for i in start..n {
            if n - i < r - cur.len() {
                break;
            }
            cur.push(i);
            go(i + 1, n, r, cur, out);
            cur.pop();
        }
    }
    let mut out = Vec::new();
    go(0, n, r, &mut Vec::with_capacity(r), &mut out);
    out
}

/// Result of certifying d via the parity-check matrix.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct ColumnCertificate {
    pub subsets_checked: usize,
    /// First dependent set of d − 1 columns, if any.
    pub dependent_columns: Option<Vec<usize>>,
    pub generator_rank: usize,
    pub parity_rank: usize,
    pub orthogonal: bool,
}

impl ColumnCertificate {
    /// d ≥ declared holds when the generator has full rank, G·Hᵀ = 0, H has
    /// rank L − k and every d − 1 columns of H are independent.
    pub fn passed(&self, length: usize, dimension: usize) -> bool {
        self.dependent_columns.is_none()
            && self.orthogonal
            && self.generator_rank == dimension
            && self.parity_rank == length - dimension
    }
}

/// Certify a declared minimum distance without enumerating codewords.
pub fn certify_by_columns<F: Field>(code: &LinearOuterCode<F>, d: usize, exec: Exec) -> ColumnCertificate {
    let h = code.parity_check.as_ref().expect("code has a parity-check matrix");
    let g = &code.generator;
    let orthogonal =
        g.iter().all(|gr| h.iter().all(|hr| gr.iter().zip(hr).fold(F::zero(), |acc, (&x, &y)| acc + x * y).is_zero()));
    let subsets = combinations(code.length(), d.saturating_sub(1));
    let dependent = exec.map_reduce_slice(
        &subsets,
        None,
        |i, cols| {
            // rows of the submatrix are the chosen columns of H
            let sub: Vec<Vec<F>> = cols.iter().map(|&c| h.iter().map(|row| row[c]).collect()).collect();
            (rank(&sub) < cols.len()).then_some(i)
        },
        min_option,
    );
    ColumnCertificate {
        subsets_checked: subsets.len(),
        dependent_columns: dependent.map(|i| subsets[i].clone()),
        generator_rank: rank(g),
        parity_rank: rank(h),
        orthogonal,
    }
}

/// Encoder of the four-level scheme over M4(F2): position p carries
/// x = c₁\[p\] + f c₂\[p\] + f² c₃\[p\] + f³ c₄\[p\], f = 1 + e, sent through the
/// F16 cyclic algebra isomorphism.
pub fn multilevel_encode_m4(levels: [&[F16]; 4]) -> Result<Vec<Matrix<F2, 4>>, CodeError> {
    let length = levels[0].len();
    if let Some(bad) = levels.iter().find(|l| l.len() != length) {
        return Err(CodeError::Length { expected: length, found: bad.len() });
    }
    Ok((0..length)
        .map(|p| {
            let y = FBasisElem { coeffs: levels.map(|l| l[p]) };
            iso_f16_to_m4(&from_f_basis(&y))
        })
        .collect())
}

/// The four-level codes for L = 16: RS(16,13), RS(16,14) and two (16,15)
/// parity check codes over F16.
pub fn multilevel_m4_codes() -> [LinearOuterCode<F16>; 4] {
    [rs_16_13(), rs_16_14(), parity_check(16), parity_check(16)]
}

/// Encoder over M2(F2\[i\]): position p is ψ(u, u + (1+i)α) with u from a
/// code over F4\[i\] and α from a code over F4.
pub fn multilevel_encode_m2f2i(inner: &[F4i], alpha: &[F4]) -> Result<Vec<Matrix<F2i, 2>>, CodeError> {
    if inner.len() != alpha.len() {
        return Err(CodeError::Length { expected: inner.len(), found: alpha.len() });
    }
    let t = F4i::from_f2i(F2i::ONE_PLUS_I);
    Ok(inner.iter().zip(alpha).map(|(&u, &a)| psi(u, u + t * F4i::from_f4(a))).collect())
}

/// Alphabets accepted in code files.
#[derive(Clone, Copy, PartialEq, Eq, Hash, Debug)]
pub enum Alphabet {
    Ring(RingId),
    M2F2,
    M2F2i,
}

impl FromStr for Alphabet {
    type Err = ParseError;
    fn from_str(s: &str) -> Result<Self, ParseError> {
        match s.trim() {
            "m2f2" => Ok(Alphabet::M2F2),
            "m2f2i" => Ok(Alphabet::M2F2i),
            other => other.parse().map(Alphabet::Ring),
        }
    }
}

impl fmt::Display for Alphabet {
    fn fmt(&self, f: &mut fmt::Formatter<'_>) -> fmt::Result {
        match self {
            Alphabet::Ring(r) => write!(f, "{r}"),
            Alphabet::M2F2 => f.write_str("m2f2"),
            Alphabet::M2F2i => f.write_str("m2f2i"),
        }
    }
}

/// Weight of a comma-separated word over `alphabet`.
pub fn word_weight_str(alphabet: Alphabet, word: &str, kind: WeightKind) -> Result<u64, CodeError> {
    fn go<R: Weighted + FromStr<Err = ParseError>>(word: &str, kind: WeightKind) -> Result<u64, CodeError> {
        let w: Vec<R> = parse_symbols(word)?;
        R::word_weight(&w, kind).ok_or(CodeError::WeightUnsupported { kind, ring: R::NAME })
    }
    match alphabet {
        Alphabet::Ring(RingId::F2) => go::<F2>(word, kind),
        Alphabet::Ring(RingId::F4) => go::<F4>(word, kind),
        Alphabet::Ring(RingId::F8) => go::<F8>(word, kind),
        Alphabet::Ring(RingId::F16) => go::<F16>(word, kind),
        Alphabet::Ring(RingId::F2i) => go::<F2i>(word, kind),
        Alphabet::Ring(RingId::F4i) => go::<F4i>(word, kind),
        Alphabet::M2F2 => go::<Matrix<F2, 2>>(word, kind),
        Alphabet::M2F2i => go::<Matrix<F2i, 2>>(word, kind),
        Alphabet::Ring(RingId::F16Alt) => Err(CodeError::WeightUnsupported { kind, ring: "f16alt" }),
    }
}

/// A code over any supported alphabet, for dynamic dispatch from the CLI.
#[derive(Clone, PartialEq, Eq, Debug)]
pub enum AnyCode {
    F2(LinearOuterCode<F2>),
    F4(LinearOuterCode<F4>),
    F8(LinearOuterCode<F8>),
    F16(LinearOuterCode<F16>),
    F2i(LinearOuterCode<F2i>),
    F4i(LinearOuterCode<F4i>),
    M2F2(LinearOuterCode<Matrix<F2, 2>>),
    M2F2i(LinearOuterCode<Matrix<F2i, 2>>),
}

#[macro_export]
macro_rules! with_code {
    ($code:expr, $c:ident => $body:expr) => {
        match $code {
            $crate::outer_codes::AnyCode::F2($c) => $body,
            $crate::outer_codes::AnyCode::F4($c) => $body,
            $crate::outer_codes::AnyCode::F8($c) => $body,
            $crate::outer_codes::AnyCode::F16($c) => $body,
            $crate::outer_codes::AnyCode::F2i($c) => $body,
            $crate::outer_codes::AnyCode::F4i($c) => $body,
            $crate::outer_codes::AnyCode::M2F2($c) => $body,
            $crate::outer_codes::AnyCode::M2F2i($c) => $body,
        }
    };
}

/// Minimum distance rendered for output.
#[derive(Clone, PartialEq, Eq, Debug)]
pub struct DistanceSummary {
    pub distance: Option<u64>,
    pub witness: Option<String>,
}

impl AnyCode {
    pub fn alphabet(&self) -> Alphabet {
        match self {
            AnyCode::F2(_) => Alphabet::Ring(RingId::F2),
            AnyCode::F4(_) => Alphabet::Ring(RingId::F4),
            AnyCode::F8(_) => Alphabet::Ring(RingId::F8),
            AnyCode::F16(_) => Alphabet::Ring(RingId::F16),
            AnyCode::F2i(_) => Alphabet::Ring(RingId::F2i),
            AnyCode::F4i(_) => Alphabet::Ring(RingId::F4i),
            AnyCode::M2F2(_) => Alphabet::M2F2,
            AnyCode::M2F2i(_) => Alphabet::M2F2i,
        }
    }

    pub fn name(&self) -> &str {
        with_code!(self, c => &c.name)
    }

    pub fn length(&self) -> usize {
        with_code!(self, c => c.length())
    }

    pub fn dimension(&self) -> usize {
        with_code!(self, c => c.dimension())
    }

    pub fn declared_distance(&self) -> Option<u64> {
        with_code!(self, c => c.declared_distance)
    }

    pub fn min_distance(&self, kind: WeightKind, exec: Exec) -> Result<DistanceSummary, CodeError> {
        with_code!(self, c => {
            let w = c.min_distance(kind, exec)?;
            Ok(DistanceSummary {
                distance: w.as_ref().map(|w| w.distance),
                witness: w.map(|w| format_word(&w.codeword)),
            })
        })
    }

    /// Encode a comma-separated message.
    pub fn encode_str(&self, msg: &str) -> Result<String, CodeError> {
        with_code!(self, c => {
            let msg = parse_symbols(msg)?;
            Ok(format_word(&c.encode(&msg)?))
        })
    }

    /// Weight of a comma-separated word over the code alphabet.
    pub fn weight_str(&self, word: &str, kind: WeightKind) -> Result<u64, CodeError> {
        word_weight_str(self.alphabet(), word, kind)
    }

    pub fn generator_rows(&self) -> Vec<String> {
        with_code!(self, c => c.generator.iter().map(|r| format_word(r)).collect())
    }
}

/// Parse `a, b, c` (optionally parenthesised) into symbols.
pub fn parse_symbols<R: FromStr<Err = ParseError>>(s: &str) -> Result<Vec<R>, ParseError> {
    let t = s.trim();
    let t = match t.strip_prefix('(').and_then(|t| t.strip_suffix(')')) {
        Some(inner) if split_top_level(t, ',').len() == 1 => inner,
        _ => t,
    };
    if t.is_empty() {
        return Ok(Vec::new());
    }
    split_top_level(t, ',').into_iter().map(str::parse).collect()
}

fn parse_rows<R: Ring + FromStr<Err = ParseError>>(
    name: &str,
    length: usize,
    rows: &[&str],
) -> Result<LinearOuterCode<R>, CodeError> {
    let generator = rows
        .iter()
        .map(|line| {
            let row: Vec<R> = parse_symbols(line)?;
            if row.len() != length {
                return Err(CodeError::Length { expected: length, found: row.len() });
            }
            Ok(row)
        })
        .collect::<Result<Vec<_>, _>>()?;
    Ok(LinearOuterCode::new(name, generator))
}

/// Parse the code file format: a header `ring L k` followed by k generator
/// rows of comma-separated entries. Blank lines and `#` comments are ignored.
pub fn parse_code_file(name: &str, text: &str) -> Result<AnyCode, CodeError> {
    let lines: Vec<&str> =
        text.lines().map(|l| l.split('#').next().unwrap_or("").trim()).filter(|l| !l.is_empty()).collect();
    let (header, rows) = lines.split_first().ok_or_else(|| CodeError::Format("empty file".into()))?;
    let fields: Vec<&str> = header.split_whitespace().collect();
    let [ring, length, dim] = fields[..] else {
        return Err(CodeError::Format(format!("header {header:?} is not `ring L k`")));
    };
    let alphabet: Alphabet = ring.parse()?;
    let num = |s: &str| s.parse::<usize>().map_err(|_| CodeError::Format(format!("bad number {s:?}")));
    let (length, dim) = (num(length)?, num(dim)?);
    if rows.len() != dim {
        return Err(CodeError::Format(format!("header declares {dim} rows, found {}", rows.len())));
    }
    Ok(match alphabet {
        Alphabet::Ring(RingId::F2) => AnyCode::F2(parse_rows(name, length, rows)?),
        Alphabet::Ring(RingId::F4) => AnyCode::F4(parse_rows(name, length, rows)?),
        Alphabet::Ring(RingId::F8) => AnyCode::F8(parse_rows(name, length, rows)?),
        Alphabet::Ring(RingId::F16) => AnyCode::F16(parse_rows(name, length, rows)?),
        Alphabet::Ring(RingId::F2i) => AnyCode::F2i(parse_rows(name, length, rows)?),
        Alphabet::Ring(RingId::F4i) => AnyCode::F4i(parse_rows(name, length, rows)?),
        Alphabet::M2F2 => AnyCode::M2F2(parse_rows(name, length, rows)?),
        Alphabet::M2F2i => AnyCode::M2F2i(parse_rows(name, length, rows)?),
        Alphabet::Ring(RingId::F16Alt) => return Err(CodeError::Format("codes over f16alt are not supported".into())),
    })
}

/// Names accepted by [`named_code`].
pub const NAMED_CODES: &[&str] = &[
    "dualrep",
    "dualrep-lift",
    "dualrep-phi",
    "hexacode",
    "hexacode-lift",
    "hexacode-phi",
    "rs-16-13",
    "rs-16-14",
    "rs-4-2",
    "inner-parity",
    "repetition-<ring>-<L>",
    "parity-<ring>-<L>",
    "cm-<L>",
];

/// Look up a named code.
pub fn named_code(name: &str) -> Result<AnyCode, CodeError> {
    let unknown = || CodeError::UnknownCode(name.to_string());
    Ok(match name {
        "dualrep" => AnyCode::F4(dual_repetition_4_3_2()),
        "dualrep-lift" => AnyCode::M2F2(lift_f4_code_to_m2f2(&dual_repetition_4_3_2())),
        "dualrep-phi" => AnyCode::M2F2(phi_pushforward(&dual_repetition_4_3_2())?),
        "hexacode" => AnyCode::F4(hexacode()),
        "hexacode-lift" => AnyCode::M2F2(lift_f4_code_to_m2f2(&hexacode())),
        "hexacode-phi" => AnyCode::M2F2(phi_pushforward(&hexacode())?),
        "rs-16-13" => AnyCode::F16(rs_16_13()),
        "rs-16-14" => AnyCode::F16(rs_16_14()),
        "rs-4-2" => AnyCode::F4(rs_4_2()),
        "inner-parity" => AnyCode::F4i(inner_parity()),
        _ => {
            let parts: Vec<&str> = name.split('-').collect();
            let length = |s: &str| s.parse::<usize>().ok().filter(|&l| l >= 1).ok_or_else(unknown);
            match parts[..] {
                ["cm", l] => {
                    let l = length(l)?;
                    if l < 2 {
                        return Err(unknown());
                    }
                    AnyCode::M2F2(matrix_parity(l))
                }
                [kind @ ("repetition" | "parity"), ring, l] => {
                    let l = length(l)?;
                    if kind == "parity" && l < 2 {
                        return Err(unknown());
                    }
                    let alphabet: Alphabet = ring.parse().map_err(|_| unknown())?;
                    macro_rules! build {
                        ($r:ty) => {
                            if kind == "parity" {
                                parity_check::<$r>(l)
                            } else {
                                repetition::<$r>(l)
                            }
                        };
                    }
                    match alphabet {
                        Alphabet::Ring(RingId::F2) => AnyCode::F2(build!(F2)),
                        Alphabet::Ring(RingId::F4) => AnyCode::F4(build!(F4)),
                        Alphabet::Ring(RingId::F8) => AnyCode::F8(build!(F8)),
                        Alphabet::Ring(RingId::F16) => AnyCode::F16(build!(F16)),
                        Alphabet::Ring(RingId::F2i) => AnyCode::F2i(build!(F2i)),
                        Alphabet::Ring(RingId::F4i) => AnyCode::F4i(build!(F4i)),
                        Alphabet::M2F2 => AnyCode::M2F2(build!(Matrix<F2, 2>)),
                        Alphabet::M2F2i => AnyCode::M2F2i(build!(Matrix<F2i, 2>)),
                        Alphabet::Ring(RingId::F16Alt) => return Err(unknown()),
                    }
                }
                _ => return Err(unknown()),
            }
        }
    })
}
