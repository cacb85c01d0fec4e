use std::fmt::Write as _;
use std::path::Path;

use anyon_core::format::{parse_code, write_code, write_subspace, CodeFile};
use anyon_core::qgeometry::{
    classify as classify_code, extend, puncture, search_self_orthogonal, ClassifyReport,
};
use anyon_core::qmetric::{
    filtration, gen_full_clifford, gen_quantum_hamming, gen_semispinorial, gen_spinorial,
    Chirality, FiltrationReport,
};
use anyon_core::stabilizer::{
    build_hamming_subspace, hamming_certificate, CodeReport, DistanceValue, ReportOptions,
    StabilizerCode,
};
use anyon_core::verify::{verify as verify_code, VerifyLevel, VerifyOptions, VerifyReport};
use anyon_core::Error;
use serde::Serialize;

use crate::{ChiralityArg, Direction, Format, Level, MetricLabel};

pub const EXIT_INVARIANT: u8 = 1;
pub const EXIT_INPUT: u8 = 2;
pub const EXIT_CAPACITY: u8 = 3;

/// Largest Hamming order built (ambient length `2(2^s − 1)`).
pub const MAX_HAMMING_ORDER: usize = 10;

pub struct Context {
    pub format: Format,
    pub max_enum_bits: usize,
    pub max_dense_qubits: usize,
}

pub struct Output {
    pub stdout: String,
    pub code: u8,
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub exit_code: u8,
    /// Report printed before failing, when there is one.
    pub stdout: Option<String>,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            exit_code: EXIT_INPUT,
            stdout: None,
        }
    }

    fn with_stdout(mut self, stdout: String) -> Self {
        self.stdout = Some(stdout);
        self
    }
}

type CliResult = Result<Output, CliError>;

fn ok(stdout: String) -> CliResult {
    Ok(Output { stdout, code: 0 })
}

fn json<T: Serialize>(value: &T) -> String {
    let mut s = serde_json::to_string_pretty(value).expect("report types serialize");
    s.push('\n');
    s
}

fn read_code(path: &Path) -> Result<CodeFile, CliError> {
    let text = std::fs::read_to_string(path)
        .map_err(|e| CliError::input(format!("{}: {e}", path.display())))?;
    parse_code(&text).map_err(|e| {
        let mut err = CliError::from(e);
        err.message = format!("{}: {}", path.display(), err.message);
        err
    })
}

fn write_file(path: &Path, contents: &str) -> Result<(), CliError> {
    std::fs::write(path, contents).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn classify_text(r: &ClassifyReport) -> String {
    let mut s = String::new();
    match (r.parity_class, r.even_dimension) {
        (Some(class), Some(even)) => {
            let _ = writeln!(s, "{class}, dim {}, even_dim {even}", r.dimension);
            if let Some(u) = &r.odd_coset_rep {
                let _ = writeln!(s, "u={u}");
            }
            let _ = writeln!(s, "length {}, q-isotropic", r.length);
        }
        _ => {
            let _ = writeln!(s, "not q-isotropic, dim {}", r.dimension);
            let _ = writeln!(s, "witness x={} y={}", r.witnesses[0], r.witnesses[1]);
        }
    }
    s
}

pub fn classify(ctx: &Context, path: &Path) -> CliResult {
    let file = read_code(path)?;
    let (report, failure) = match classify_code(&file.code) {
        Ok(q) => (q.report(), None),
        Err(Error::NotIsotropic { x, y }) => {
            let r = ClassifyReport::rejected(&file.code, &x, &y);
            (
                r,
                Some(format!("subspace is not q-isotropic: q({x}, {y}) = 1")),
            )
        }
        Err(e) => return Err(e.into()),
    };
    let stdout = match ctx.format {
        Format::Json => json(&report),
        Format::Text => classify_text(&report),
    };
    match failure {
        Some(msg) => Err(CliError::input(msg).with_stdout(stdout)),
        None => ok(stdout),
    }
}

#[derive(Serialize)]
struct ConvertOutput<'a> {
    direction: &'static str,
    length: usize,
    dimension: usize,
    code_file: &'a str,
}

pub fn convert(
    ctx: &Context,
    direction: Direction,
    path: &Path,
    coordinate: Option<usize>,
    output: Option<&Path>,
) -> CliResult {
    let file = read_code(path)?;
    let (name, code) = match direction {
        Direction::Extend => {
            if coordinate.is_some() {
                return Err(CliError::input("--coordinate applies to puncture only"));
            }
            ("extend", extend(&classify_code(&file.code)?))
        }
        Direction::Puncture => ("puncture", puncture(&file.code, coordinate)?.code().clone()),
    };
    let text = write_code(&code);
    if let Some(out) = output {
        write_file(out, &text)?;
    }
    let stdout = match ctx.format {
        Format::Json => json(&ConvertOutput {
            direction: name,
            length: code.length(),
            dimension: code.dimension(),
            code_file: &text,
        }),
        Format::Text => match output {
            Some(out) => format!(
                "wrote {} ({} {}, length {}, dimension {})\n",
                out.display(),
                name,
                path.display(),
                code.length(),
                code.dimension()
            ),
            None => text,
        },
    };
    ok(stdout)
}

#[derive(Serialize)]
struct HammingOutput<'a> {
    s: usize,
    parameters: String,
    #[serde(flatten)]
    report: &'a CodeReport,
    code_file: &'a str,
}

fn distance_text(d: &DistanceValue) -> String {
    match d {
        DistanceValue::Exact(w) => w.to_string(),
        DistanceValue::Token(t) => (*t).to_string(),
        DistanceValue::LowerBound { lower_bound } => format!(">= {lower_bound}"),
    }
}

pub fn code_report_text(r: &CodeReport) -> String {
    let mut s = String::new();
    let _ = writeln!(
        s,
        "modes {}, stabilizer dimension {}, {}{}",
        r.modes,
        r.stabilizer_dimension,
        r.parity_class,
        if r.parity_violating {
            " (parity-violating stabilizers)"
        } else {
            ""
        }
    );
    let _ = writeln!(
        s,
        "Clifford distance {} ({}), even-only distance {}",
        distance_text(&r.clifford_distance),
        r.distance_method,
        distance_text(&r.even_clifford_distance)
    );
    if let Some(c) = &r.distance_certificate {
        let _ = writeln!(s, "certificate: {c}");
    }
    if let Some(w) = &r.logical_minweight_witness {
        let _ = writeln!(s, "minimum-weight logical: {w}");
    }
    let c = &r.verdict_census;
    let _ = writeln!(
        s,
        "verdicts ({}): stabilizer {}, detectable {}, logical {}",
        c.method, c.stabilizer, c.detectable, c.logical
    );
    s
}

pub fn hamming(
    ctx: &Context,
    s: usize,
    weight_limit: Option<usize>,
    output: Option<&Path>,
) -> CliResult {
    if s < 2 {
        return Err(CliError::input(format!(
            "order s must be at least 2, got {s}"
        )));
    }
    if s == 2 {
        eprintln!("warning: order 2 gives a code with no logical qubits");
    }
    if s > MAX_HAMMING_ORDER {
        return Err(Error::Capacity {
            what: "Hamming order",
            requested: s,
            cap: MAX_HAMMING_ORDER,
        }
        .into());
    }
    let sub = build_hamming_subspace(s);
    let text = write_subspace(sub.code());
    let code = StabilizerCode::new(sub, None)?;
    let report = code.report(&ReportOptions {
        max_enum_bits: ctx.max_enum_bits,
        weight_limit,
        certificate: Some(hamming_certificate(s)),
    });
    let parameters = format!("[[{},{}]]_Cl", report.n, report.k);
    if let Some(out) = output {
        write_file(out, &text)?;
    }
    let stdout = match ctx.format {
        Format::Json => json(&HammingOutput {
            s,
            parameters,
            report: &report,
            code_file: &text,
        }),
        Format::Text => {
            let mut out = format!(
                "{parameters}, distance {}\n",
                distance_text(&report.clifford_distance)
            );
            out.push_str(&code_report_text(&report));
            match output {
                Some(path) => {
                    let _ = writeln!(out, "wrote {}", path.display());
                }
                None => {
                    out.push('\n');
                    out.push_str(&text);
                }
            }
            out
        }
    };
    ok(stdout)
}

fn parse_signs(s: &str) -> Result<Vec<i8>, CliError> {
    s.split(',')
        .map(|t| match t.trim() {
            "1" | "+1" | "+" => Ok(1),
            "-1" | "-" => Ok(-1),
            other => Err(CliError::input(format!(
                "bad sign {other:?}; expected +1 or -1"
            ))),
        })
        .collect()
}

fn verify_text(r: &VerifyReport) -> String {
    let mut s = String::new();
    for c in &r.checks {
        let _ = write!(
            s,
            "[{}] {}: {}",
            if c.passed { "PASS" } else { "FAIL" },
            c.name,
            c.detail
        );
        if let Some(w) = &c.witness {
            let _ = write!(s, " (witness {w})");
        }
        s.push('\n');
    }
    if let Some(c) = &r.verdict_census {
        let _ = writeln!(
            s,
            "verdicts ({}): stabilizer {}, detectable {}, logical {}",
            c.method, c.stabilizer, c.detectable, c.logical
        );
    }
    let _ = writeln!(
        s,
        "{}",
        if r.passed {
            "all checks passed"
        } else {
            "verification FAILED"
        }
    );
    s
}

pub fn verify(
    ctx: &Context,
    path: &Path,
    level: Level,
    signs: Option<&str>,
    seed: u64,
) -> CliResult {
    let file = read_code(path)?;
    let signs = signs.map(parse_signs).transpose()?;
    let options = VerifyOptions {
        level: match level {
            Level::Combinatorial => VerifyLevel::Combinatorial,
            Level::Dense => VerifyLevel::Dense,
        },
        max_enum_bits: ctx.max_enum_bits,
        max_dense_qubits: ctx.max_dense_qubits,
        seed,
        ..VerifyOptions::default()
    };
    let report = verify_code(&file.code, signs, &options)?;
    let stdout = match ctx.format {
        Format::Json => json(&report),
        Format::Text => verify_text(&report),
    };
    match report.first_failure() {
        None => ok(stdout),
        Some(f) => Err(CliError {
            message: format!(
                "check {} failed{}",
                f.name,
                f.witness
                    .as_ref()
                    .map(|w| format!(" (witness {w})"))
                    .unwrap_or_default()
            ),
            exit_code: EXIT_INVARIANT,
            stdout: Some(stdout),
        }),
    }
}

fn filtration_text(r: &FiltrationReport) -> String {
    let dims: Vec<String> = r.dims.iter().map(|d| d.to_string()).collect();
    let mut s = format!("{}\ndims: {}\n", r.label, dims.join(" "));
    match r.saturation_level {
        Some(t) => {
            let _ = writeln!(s, "saturation level: {t}");
        }
        None => s.push_str("saturation level: not reached\n"),
    }
    let _ = writeln!(s, "ambient dimension: {}", r.ambient_dim);
    s
}

pub fn metric(
    ctx: &Context,
    label: MetricLabel,
    size: usize,
    t_max: Option<usize>,
    chirality: ChiralityArg,
) -> CliResult {
    let set = match label {
        MetricLabel::QuantumHamming => gen_quantum_hamming(size)?,
        MetricLabel::FullClifford => gen_full_clifford(size)?,
        MetricLabel::Spinorial => gen_spinorial(size)?,
        MetricLabel::Semispinorial => gen_semispinorial(
            size,
            match chirality {
                ChiralityArg::Plus => Chirality::Plus,
                ChiralityArg::Minus => Chirality::Minus,
            },
        )?,
    };
    let report = filtration(&set, t_max)?;
    ok(match ctx.format {
        Format::Json => json(&report),
        Format::Text => filtration_text(&report),
    })
}

#[derive(Serialize)]
struct SearchOutput<'a> {
    found: bool,
    n: usize,
    d: usize,
    budget: u64,
    seed: u64,
    classification: Option<ClassifyReport>,
    code_file: Option<&'a str>,
}

pub fn search(
    ctx: &Context,
    n: usize,
    d: usize,
    budget: u64,
    seed: u64,
    output: Option<&Path>,
) -> CliResult {
    if n < 2 || d < 2 {
        return Err(CliError::input(format!(
            "need n >= 2 and d >= 2, got n={n}, d={d}"
        )));
    }
    let found = search_self_orthogonal(n, d, budget, seed);
    let text = found.as_ref().map(|q| write_subspace(q.code()));
    if let (Some(out), Some(t)) = (output, &text) {
        write_file(out, t)?;
    }
    let stdout = match ctx.format {
        Format::Json => json(&SearchOutput {
            found: found.is_some(),
            n,
            d,
            budget,
            seed,
            classification: found.as_ref().map(|q| q.report()),
            code_file: text.as_deref(),
        }),
        Format::Text => match (&found, &text) {
            (Some(q), Some(t)) => {
                let mut s = classify_text(&q.report());
                match output {
                    Some(path) => {
                        let _ = writeln!(s, "wrote {}", path.display());
                    }
                    None => {
                        s.push('\n');
                        s.push_str(t);
                    }
                }
                s
            }
            _ => "not found\n".into(),
        },
    };
    ok(stdout)
}
