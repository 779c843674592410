use std::fmt::Display;
use std::io::Write;
use std::path::PathBuf;
use std::process::ExitCode;

use clap::{ArgGroup, Parser, Subcommand, ValueEnum};
use num_rational::Rational64;

use coset_core::bounds::{self, BoundReport, BoundValue};
use coset_core::cyclic::{iso_f16_to_m4, iso_f8_to_m3, phi, psi, CyclicElem};
use coset_core::golden::{self, Ideal, Projection, QamBox};
use coset_core::matrices::{count_invertible, Matrix, ENUMERATION_LIMIT};
use coset_core::outer_codes::{self, parse_symbols, Alphabet, AnyCode, WeightKind};
use coset_core::rings::{CommutativeRing, F4i, Ring, RingId, F16, F4, F8};
use coset_core::verify::{self, OracleReport};
use coset_core::{with_dim, with_ring, Exec};

#[derive(Parser, Debug)]
#[command(name = "coset", version, about = "Exact computations for coset space-time codes")]
struct Cli {
    /// Output layout.
    #[arg(long, global = true, value_enum, default_value_t = Format::Tsv)]
    format: Format,
    /// Worker threads (0 = one per core).
    #[arg(long, global = true, default_value_t = 1)]
    jobs: usize,
    /// Print numeric results as decimals instead of exact fractions.
    #[arg(long, global = true)]
    float: bool,
    #[command(subcommand)]
    command: Command,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Format {
    Tsv,
    Plain,
}

#[derive(Subcommand, Debug)]
enum Command {
    /// Minimum nonzero |det X|^2 of the Golden code over a QAM box.
    Mindet {
        /// Coordinates range over re, im in -BOX..=BOX.
        #[arg(long = "box", default_value_t = 2)]
        radius: i64,
        /// Restrict to codewords projecting to this matrix.
        #[arg(long)]
        coset: Option<String>,
        #[arg(long, default_value = "1pi")]
        ideal: Ideal,
    },
    /// Minimum distance of an outer code.
    #[command(group(ArgGroup::new("source").required(true).args(["code", "code_file"])))]
    Mindist {
        #[command(flatten)]
        code: CodeArgs,
        #[arg(long, default_value = "hamming")]
        weight: WeightKind,
    },
    /// Weight of a word over an alphabet.
    Weights {
        /// f2, f4, f8, f16, f2i, f4i, m2f2 or m2f2i.
        #[arg(long)]
        alphabet: Alphabet,
        /// Comma-separated symbols.
        #[arg(long)]
        word: String,
        #[arg(long, default_value = "hamming")]
        weight: WeightKind,
    },
    /// Evaluate a bound, rate or redundancy formula.
    Bounds(BoundsArgs),
    /// Encode a message with an outer code.
    #[command(group(ArgGroup::new("source").required(true).args(["code", "code_file"])))]
    Encode {
        #[command(flatten)]
        code: CodeArgs,
        /// Comma-separated message symbols.
        #[arg(long)]
        msg: String,
    },
    /// List or count matrices over a finite ring.
    Enumerate {
        #[arg(long)]
        ring: RingId,
        #[arg(long, default_value_t = 2)]
        n: usize,
        /// Only invertible matrices.
        #[arg(long)]
        invertible: bool,
        /// Print the number of matrices instead of listing them.
        #[arg(long)]
        count: bool,
    },
    /// Explicit isomorphisms onto matrix rings.
    #[command(group(ArgGroup::new("mode").required(true).args(["which", "check"])))]
    Iso {
        /// Print the image of --element.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::ISO_NAMES))]
        which: Option<String>,
        /// Comma-separated coordinates: e-coefficients for f8m3/f16m4, a pair for the others.
        #[arg(long, requires = "which")]
        element: Option<String>,
        /// Certify the homomorphism axioms.
        #[arg(long, value_parser = clap::builder::PossibleValuesParser::new(verify::ISO_NAMES))]
        check: Option<String>,
    },
    /// Run the brute-force oracles.
    #[command(group(ArgGroup::new("select").required(true).args(["all", "claim", "list"])))]
    Verify {
        #[arg(long)]
        all: bool,
        #[arg(long)]
        claim: Vec<String>,
        /// List claim identifiers.
        #[arg(long)]
        list: bool,
    },
}

#[derive(clap::Args, Debug)]
struct CodeArgs {
    /// Named code (see `coset mindist --help`).
    #[arg(long)]
    code: Option<String>,
    /// Code file: header `ring L k` followed by k generator rows.
    #[arg(long)]
    code_file: Option<PathBuf>,
}

#[derive(Clone, Copy, Debug, PartialEq, Eq, ValueEnum)]
enum Which {
    Hamming,
    Bachoc,
    M2f2i,
    MultilevelM4,
    MultilevelM2f2i,
    Redundancy,
    RhoParityI,
    RhoParityIi,
    RhoM4,
    RhoM2f2i,
    RateM4,
    RateM2f2i,
    Gv,
}

#[derive(clap::Args, Debug)]
struct BoundsArgs {
    #[arg(long, value_enum)]
    which: Which,
    /// Matrix size n.
    #[arg(long, default_value_t = 2)]
    n: u32,
    /// |a|^2 for the ideal generator a.
    #[arg(long, default_value_t = 2)]
    a_norm: i64,
    #[arg(long, default_value = "1/5")]
    delta: Rational64,
    /// Distance, or comma-separated level distances.
    #[arg(long, value_delimiter = ',')]
    d: Vec<u64>,
    /// Outer code length L.
    #[arg(long, default_value_t = 16)]
    length: u64,
    /// Level dimensions for the four-level scheme.
    #[arg(long, value_delimiter = ',', default_values_t = [13, 14, 15, 15])]
    dims: Vec<u64>,
    /// Dimension of the F4 code in the two-level scheme.
    #[arg(long)]
    k: Option<u64>,
    /// Redundancy in bits.
    #[arg(long)]
    bits: Option<u64>,
    /// Alphabet size for the GV bound.
    #[arg(long)]
    q: Option<u64>,
    /// Use d3 instead of d4 in the last term of the four-level bound.
    #[arg(long, alias = "paper-literal")]
    literal_d3: bool,
}

#[derive(Debug)]
enum Failure {
    Usage(String),
    Oracle,
}

impl<E: Display> From<E> for Failure {
    fn from(e: E) -> Self {
        Failure::Usage(e.to_string())
    }
}

type Out = Result<Vec<String>, Failure>;

struct Ctx {
    format: Format,
    float: bool,
    exec: Exec,
}

impl Ctx {
    fn num(&self, r: Rational64) -> String {
        if self.float {
            format!("{}", *r.numer() as f64 / *r.denom() as f64)
        } else {
            r.to_string()
        }
    }

    fn bound(&self, v: &BoundValue) -> String {
        if self.float {
            format!("{}", v.to_f64())
        } else {
            v.to_string()
        }
    }
}

fn main() -> ExitCode {
    let cli = match Cli::try_parse() {
        Ok(cli) => cli,
        Err(e) => {
            let _ = e.print();
            return ExitCode::from(if e.use_stderr() { 2 } else { 0 });
        }
    };
    let (format, float) = (cli.format, cli.float);
    let result = Exec::with_threads(cli.jobs, move |exec| run(cli.command, &Ctx { format, float, exec }));
    match result {
        Ok(lines) => {
            emit(&lines);
            ExitCode::SUCCESS
        }
        Err((lines, Failure::Oracle)) => {
            emit(&lines);
            ExitCode::from(1)
        }
        Err((_, Failure::Usage(msg))) => {
            eprintln!("error: {msg}");
            ExitCode::from(2)
        }
    }
}

/// Write lines to stdout, stopping quietly if the reader goes away.
fn emit(lines: &[String]) {
    let mut out = std::io::BufWriter::new(std::io::stdout().lock());
    for l in lines {
        if writeln!(out, "{l}").is_err() {
            return;
        }
    }
    let _ = out.flush();
}

fn run(cmd: Command, ctx: &Ctx) -> Result<Vec<String>, (Vec<String>, Failure)> {
    match cmd {
        Command::Verify { all, claim, list } => verify_cmd(all, claim, list, ctx),
        Command::Iso { which: None, check: Some(name), .. } => {
            let reports = verify::certify_iso(&name, ctx.exec).expect("validated by clap");
            report_lines(reports, ctx)
        }
        other => dispatch(other, ctx).map_err(|e| (Vec::new(), e)),
    }
}

fn dispatch(cmd: Command, ctx: &Ctx) -> Out {
    match cmd {
        Command::Mindet { radius, coset, ideal } => mindet(radius, coset, ideal, ctx),
        Command::Mindist { code, weight } => {
            let code = load_code(&code)?;
            let s = code.min_distance(weight, ctx.exec)?;
            let d = s.distance.map_or("none".to_string(), |d| d.to_string());
            let w = s.witness.unwrap_or_default();
            Ok(vec![match ctx.format {
                Format::Tsv => format!("{d}\t{w}"),
                Format::Plain => format!("{}: d_{weight} = {d}, attained by {w}", code.name()),
            }])
        }
        Command::Weights { alphabet, word, weight } => {
            let w = outer_codes::word_weight_str(alphabet, &word, weight)?;
            Ok(vec![match ctx.format {
                Format::Tsv => w.to_string(),
                Format::Plain => format!("w_{weight}({word}) = {w}"),
            }])
        }
        Command::Bounds(args) => {
            let report = evaluate_bound(&args)?;
            let value = ctx.bound(&report.value);
            Ok(vec![match ctx.format {
                Format::Tsv => value,
                Format::Plain => {
                    let inputs: Vec<String> = report.inputs.iter().map(|(k, v)| format!("{k}={v}")).collect();
                    format!("{}({}) = {value}", report.name, inputs.join(", "))
                }
            }])
        }
        Command::Encode { code, msg } => {
            let code = load_code(&code)?;
            Ok(vec![code.encode_str(&msg)?])
        }
        Command::Enumerate { ring, n, invertible, count } => enumerate(ring, n, invertible, count, ctx),
        Command::Iso { which: Some(name), element, .. } => {
            let element = element.ok_or_else(|| Failure::Usage("--which requires --element".into()))?;
            Ok(vec![iso_image(&name, &element)?])
        }
        Command::Iso { .. } | Command::Verify { .. } => unreachable!("handled in run"),
    }
}

fn mindet(radius: i64, coset: Option<String>, ideal: Ideal, ctx: &Ctx) -> Out {
    if !(0..=4).contains(&radius) {
        return Err(Failure::Usage(format!("--box {radius}: expected 0 to 4")));
    }
    let qam = QamBox::symmetric(radius);
    let coset = coset.map(|s| Projection::parse(ideal, &s)).transpose()?;
    let line = match golden::min_det(qam, coset, ctx.exec) {
        None => "none".to_string(),
        Some(w) => match ctx.format {
            Format::Tsv => format!("{}\t{}", ctx.num(w.abs_det_sq), w.codeword),
            Format::Plain => format!("min |det X|^2 = {} at {} ({qam})", ctx.num(w.abs_det_sq), w.codeword),
        },
    };
    Ok(vec![line])
}

fn load_code(args: &CodeArgs) -> Result<AnyCode, Failure> {
    match (&args.code, &args.code_file) {
        (Some(name), _) => Ok(outer_codes::named_code(name)?),
        (None, Some(path)) => {
            let text = std::fs::read_to_string(path).map_err(|e| format!("{}: {e}", path.display()))?;
            let name = path.file_stem().map_or("custom".into(), |s| s.to_string_lossy().into_owned());
            Ok(outer_codes::parse_code_file(&name, &text)?)
        }
        (None, None) => Err(Failure::Usage("one of --code or --code-file is required".into())),
    }
}

fn need<T: Copy>(v: Option<T>, flag: &str) -> Result<T, Failure> {
    v.ok_or_else(|| Failure::Usage(format!("this bound requires --{flag}")))
}

fn distances<const K: usize>(d: &[u64]) -> Result<[u64; K], Failure> {
    if d.contains(&0) {
        return Err(Failure::Usage("distances must be positive".into()));
    }
    d.try_into().map_err(|_| Failure::Usage(format!("--d expects {K} comma-separated values, got {}", d.len())))
}

fn evaluate_bound(a: &BoundsArgs) -> Result<BoundReport, Failure> {
    use BoundValue::*;
    let s = |x: &dyn Display| x.to_string();
    let list = |v: &[u64]| v.iter().map(u64::to_string).collect::<Vec<_>>().join(",");
    let (name, inputs, value): (&'static str, Vec<(&'static str, String)>, BoundValue) = match a.which {
        Which::Hamming => {
            let [d] = distances::<1>(&a.d)?;
            let v = bounds::hamming_bound(a.n, a.a_norm, a.delta, d);
            ("hamming", vec![("n", s(&a.n)), ("a_norm", s(&a.a_norm)), ("delta", s(&a.delta)), ("d", s(&d))], Exact(v))
        }
        Which::Bachoc => {
            let [d] = distances::<1>(&a.d)?;
            ("bachoc", vec![("delta", s(&a.delta)), ("d", s(&d))], Exact(bounds::bachoc_bound(a.delta, d)))
        }
        Which::M2f2i => {
            let [d] = distances::<1>(&a.d)?;
            ("m2f2i", vec![("delta", s(&a.delta)), ("d", s(&d))], Exact(bounds::hamming_bound_m2f2i(a.delta, d)))
        }
        Which::MultilevelM4 => {
            let d = distances::<4>(&a.d)?;
            let b = bounds::multilevel_bound_m4(d, a.delta, a.literal_d3);
            let mut inputs = vec![("d", list(&d)), ("delta", s(&a.delta))];
            if a.literal_d3 {
                inputs.push(("last", "d3".into()));
            }
            ("multilevel-m4", inputs, Exact(b.value))
        }
        Which::MultilevelM2f2i => {
            let [d1, d2] = distances::<2>(&a.d)?;
            ("multilevel-m2f2i", vec![("d", list(&[d1, d2]))], Surd(bounds::multilevel_bound_m2f2i(d1, d2)))
        }
        Which::Redundancy => {
            let bits = need(a.bits, "bits")?;
            let v = bounds::normalized_redundancy(bits, a.length, a.n as u64);
            ("redundancy", vec![("bits", s(&bits)), ("L", s(&a.length)), ("n", s(&a.n))], Exact(v))
        }
        Which::RhoParityI => ("rho-parity-i", vec![("L", s(&a.length))], Exact(bounds::rho_parity_code_i(a.length))),
        Which::RhoParityIi => ("rho-parity-ii", vec![("L", s(&a.length))], Exact(bounds::rho_parity_code_ii(a.length))),
        Which::RhoM4 | Which::RateM4 => {
            let dims: [u64; 4] =
                a.dims.as_slice().try_into().map_err(|_| Failure::Usage("--dims expects 4 values".into()))?;
            let inputs = vec![("L", s(&a.length)), ("dims", list(&dims))];
            if a.which == Which::RhoM4 {
                ("rho-m4", inputs, Exact(bounds::rho_multilevel_m4(a.length, dims)))
            } else {
                ("rate-m4", inputs, Exact(bounds::rate_m4(a.length, dims)))
            }
        }
        Which::RhoM2f2i | Which::RateM2f2i => {
            let k = need(a.k, "k")?;
            if k == 0 || k > a.length {
                return Err(Failure::Usage(format!("--k {k}: expected 1 to --length {}", a.length)));
            }
            let inputs = vec![("L", s(&a.length)), ("k", s(&k))];
            if a.which == Which::RhoM2f2i {
                ("rho-m2f2i", inputs, Exact(bounds::rho_m2f2i(a.length, k)))
            } else {
                ("rate-m2f2i", inputs, Exact(bounds::rate_m2f2i(a.length, k)))
            }
        }
        Which::Gv => {
            let q = need(a.q, "q")?;
            let [d] = distances::<1>(&a.d)?;
            if q < 2 || d > a.length + 1 {
                return Err(Failure::Usage("gv needs q >= 2 and d <= L+1".into()));
            }
            ("gv", vec![("q", s(&q)), ("L", s(&a.length)), ("d", s(&d))], Big(bounds::gv_bound(q, a.length, d)))
        }
    };
    if a.delta <= Rational64::from_integer(0) {
        return Err(Failure::Usage("--delta must be positive".into()));
    }
    Ok(BoundReport { name, inputs, value })
}

fn enumerate(ring: RingId, n: usize, invertible: bool, count: bool, ctx: &Ctx) -> Out {
    if count && invertible {
        return Ok(vec![count_invertible(ring, n, ctx.exec)?.to_string()]);
    }
    fn list<R: CommutativeRing, const N: usize>(invertible: bool, count: bool) -> Out {
        let size = (R::ORDER as u128).checked_pow((N * N) as u32);
        if size.is_none_or(|s| s > ENUMERATION_LIMIT as u128) {
            return Err(Failure::Usage(format!("M{N}({}) is too large to enumerate", R::NAME)));
        }
        let matrices = Matrix::<R, N>::elements().filter(|m| !invertible || m.is_invertible());
        Ok(if count { vec![matrices.count().to_string()] } else { matrices.map(|m| m.to_string()).collect() })
    }
    with_ring!(ring, R => with_dim!(n, N => list::<R, N>(invertible, count), Err(Failure::Usage(format!("--n {n}: expected 1 to 4")))))
}

fn iso_image(name: &str, element: &str) -> Result<String, Failure> {
    fn coeffs<L: Ring + std::str::FromStr<Err = coset_core::parse::ParseError>, const N: usize>(
        s: &str,
    ) -> Result<CyclicElem<L, N>, Failure> {
        let xs: Vec<L> = parse_symbols(s)?;
        if xs.is_empty() || xs.len() > N {
            return Err(Failure::Usage(format!("--element expects 1 to {N} coefficients")));
        }
        let mut c = [L::zero(); N];
        c[..xs.len()].copy_from_slice(&xs);
        Ok(CyclicElem { coeffs: c })
    }
    fn pair<R: Ring + std::str::FromStr<Err = coset_core::parse::ParseError>>(s: &str) -> Result<(R, R), Failure> {
        match parse_symbols::<R>(s)?.as_slice() {
            [a] => Ok((*a, R::zero())),
            [a, b] => Ok((*a, *b)),
            _ => Err(Failure::Usage("--element expects a pair p,q".into())),
        }
    }
    Ok(match name {
        "f8m3" => iso_f8_to_m3(&coeffs::<F8, 3>(element)?).to_string(),
        "f16m4" => iso_f16_to_m4(&coeffs::<F16, 4>(element)?).to_string(),
        "m2f2_f4j" => {
            let (p, q) = pair::<F4>(element)?;
            phi(p, q).to_string()
        }
        "m2f2i_f4ij" => {
            let (p, q) = pair::<F4i>(element)?;
            psi(p, q).to_string()
        }
        other => return Err(Failure::Usage(format!("unknown isomorphism {other:?}"))),
    })
}

fn verify_cmd(all: bool, claims: Vec<String>, list: bool, ctx: &Ctx) -> Result<Vec<String>, (Vec<String>, Failure)> {
    if list {
        return Ok(verify::CLAIMS.iter().map(|c| c.to_string()).collect());
    }
    let reports = if all {
        verify::run_all(ctx.exec)
    } else {
        let mut out = Vec::new();
        for id in &claims {
            out.extend(verify::run_claim(id, ctx.exec).map_err(|e| (Vec::new(), Failure::from(e)))?);
        }
        out
    };
    report_lines(reports, ctx)
}

fn report_lines(reports: Vec<OracleReport>, ctx: &Ctx) -> Result<Vec<String>, (Vec<String>, Failure)> {
    let failed = reports.iter().any(OracleReport::is_failure);
    let lines = reports
        .iter()
        .map(|r| match ctx.format {
            Format::Tsv => r.tsv_line(),
            Format::Plain => r.to_string(),
        })
        .collect();
    if failed {
        Err((lines, Failure::Oracle))
    } else {
        Ok(lines)
    }
}
