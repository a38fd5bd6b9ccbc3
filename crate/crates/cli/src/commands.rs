use std::path::Path;

use serde::{Deserialize, Serialize};

use qloc_core::bounds_audit::{evaluate_bounds, family_table, BoundReport};
use qloc_core::code_geometry::{
    default_edges, extract_interactions, find_separator, find_tiling, histogram, is_long, Embedding, Histogram, Point,
    Rectangle, EPS,
};
use qloc_core::constructions::{build_embedded_concatenation, build_locality_construction, concatenate, pad_code, pad_embedding, LocalityReport};
use qloc_core::correctability::{
    build_partition, certify_recursive, grow_square, verify_certificate, Certificate, Constants, Context,
};
use qloc_core::formats::{code_to_file, parse_code, parse_embedding, to_json, write_code, write_embedding, CodeFile, ParsedCode};
use qloc_core::pauli_algebra::{code_distance, is_correctable, DistanceResult, QubitSet, StabilizerCode};
use qloc_core::Error;

use crate::{Cli, Command, DistanceSource, Format, Method};

pub struct Output {
    pub text: String,
    pub status: u8,
    pub note: Option<String>,
}

impl Output {
    fn ok(text: String) -> Self {
        Self::with_status(text, 0)
    }

    fn with_status(text: String, status: u8) -> Self {
        Self { text, status, note: None }
    }
}

#[derive(Debug)]
pub struct CliError {
    pub message: String,
    pub status: u8,
}

impl CliError {
    fn input(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            status: 2,
        }
    }

    fn resource(message: impl Into<String>) -> Self {
        Self {
            message: message.into(),
            status: 3,
        }
    }
}

impl From<Error> for CliError {
    fn from(e: Error) -> Self {
        CliError::input(e.to_string())
    }
}

type Result<T> = std::result::Result<T, CliError>;

fn read(path: &Path) -> Result<String> {
    std::fs::read_to_string(path).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn in_file<T>(path: &Path, r: qloc_core::Result<T>) -> Result<T> {
    r.map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

fn load_code(path: &Path) -> Result<ParsedCode> {
    in_file(path, parse_code(&read(path)?))
}

fn load_embedding(path: &Path, n: Option<usize>) -> Result<Embedding> {
    let emb = in_file(path, parse_embedding(&read(path)?))?;
    if let Some(n) = n {
        if emb.n() != n {
            return Err(CliError::input(format!(
                "{}: embedding has {} points but the code has {n} qubits",
                path.display(),
                emb.n()
            )));
        }
    }
    Ok(emb)
}

#[derive(Deserialize)]
struct PointFile {
    points: Vec<Point>,
}

fn load_points(path: &Path) -> Result<Vec<Point>> {
    let text = read(path)?;
    let file: PointFile = serde_json::from_str(&text).map_err(|e| {
        CliError::input(format!("{}: parse error at line {}, column {}: {e}", path.display(), e.line(), e.column()))
    })?;
    Ok(file.points)
}

fn write_to(path: &Path, text: &str) -> Result<()> {
    std::fs::write(path, text).map_err(|e| CliError::input(format!("{}: {e}", path.display())))
}

/// Distance used for certificates: any lower bound is sound.
#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct ResolvedDistance {
    pub d: usize,
    pub source: String,
}

fn resolve_distance(parsed: &ParsedCode, src: &DistanceSource) -> Result<ResolvedDistance> {
    let code = &parsed.code;
    let r = |d, s: &str| ResolvedDistance { d, source: s.into() };
    if code.k() == 0 {
        return Ok(r(code.n() + 1, "k = 0: every set is correctable"));
    }
    if let Some(d) = src.d {
        return Ok(r(d, "flag"));
    }
    if let Some(d) = parsed.claimed_d {
        return Ok(r(d, "claimed_d"));
    }
    Ok(match code_distance(code, Some(src.weight_cap))? {
        DistanceResult::Distance { distance, .. } => r(distance, "computed"),
        DistanceResult::LowerBound { lower_bound } => r(lower_bound, "lower bound from capped search"),
    })
}

pub fn run(cli: &Cli) -> Result<Output> {
    match &cli.command {
        Command::Audit {
            code,
            embedding,
            ell,
            weight_cap,
            constants,
            format,
        } => audit(code, embedding, *ell, *weight_cap, constants.c0, constants.c1, *format),
        Command::Certify {
            code,
            embedding,
            ell,
            method,
            rect,
            distance,
        } => certify(code, embedding, *ell, *method, rect.as_deref(), distance),
        Command::Verify { code, cert, oracle } => verify(code, cert, *oracle),
        Command::Partition {
            code,
            embedding,
            ell,
            w,
            distance,
        } => partition(code, embedding, *ell, *w, distance),
        Command::Concat { inner, outer } => {
            let i = load_code(inner)?;
            let o = load_code(outer)?;
            Ok(Output::ok(write_code(&concatenate(&i.code, &o.code)?, None)))
        }
        Command::Construct {
            inner,
            side,
            ell,
            copies,
            n,
            k,
            d,
            c0,
            c1,
            out_code,
            out_embedding,
        } => {
            let inner = load_code(inner)?.code;
            let build = match (side, n) {
                (Some(side), _) => build_embedded_concatenation(&inner, *side, ell.unwrap_or(0.0), *copies)?,
                (None, Some(n)) => build_locality_construction(*n, k.unwrap_or(0), d.unwrap_or(0), &inner, *c0, *c1)?,
                (None, None) => return Err(CliError::input("construct needs --side with --ell, or --n --k --d")),
            };
            emit_embedded(
                &build.embedded.code,
                &build.embedded.embedding,
                out_code.as_deref(),
                out_embedding.as_deref(),
                Some(&build.report),
            )
        }
        Command::Surface {
            m,
            out_code,
            out_embedding,
        } => {
            let s = qloc_core::constructions::build_surface_code(*m)?;
            emit_embedded::<LocalityReport>(&s.code, &s.embedding, out_code.as_deref(), out_embedding.as_deref(), None)
        }
        Command::Pad {
            code,
            r,
            embedding,
            out_code,
            out_embedding,
        } => {
            let parsed = load_code(code)?;
            let padded = pad_code(&parsed.code, *r)?;
            let emb = match embedding {
                Some(p) => Some(pad_embedding(&load_embedding(p, Some(parsed.code.n()))?, *r)?),
                None => None,
            };
            match emb {
                Some(e) => emit_embedded::<LocalityReport>(&padded, &e, out_code.as_deref(), out_embedding.as_deref(), None),
                None => {
                    let text = write_code(&padded, parsed.claimed_d);
                    if let Some(p) = out_code {
                        write_to(p, &text)?;
                    }
                    Ok(Output::ok(text))
                }
            }
        }
        Command::Tile { x, y, w, ell } => {
            let xs = load_points(x)?;
            let ys = load_points(y)?;
            Ok(Output::ok(to_json(&find_tiling(&xs, &ys, *w, *ell)?)))
        }
        Command::Separator { points, ell } => {
            let pts = load_points(points)?;
            Ok(Output::ok(to_json(&find_separator(&pts, *ell)?)))
        }
        Command::Bounds { n, k, d, constants } => {
            Ok(Output::ok(to_json(&evaluate_bounds(*n, *k, *d, constants.c0, constants.c1)?)))
        }
        Command::Families { format } => Ok(Output::ok(families(*format))),
        Command::Distance { code, weight_cap } => distance(code, *weight_cap),
        Command::Correctable { code, qubits, all } => correctable(code, qubits, *all),
    }
}

#[derive(Serialize, Deserialize)]
struct EmbeddedOutput<R> {
    #[serde(skip_serializing_if = "Option::is_none")]
    report: Option<R>,
    #[serde(skip_serializing_if = "Option::is_none")]
    code: Option<CodeFile>,
    #[serde(skip_serializing_if = "Option::is_none")]
    embedding: Option<Embedding>,
}

// Writes code and embedding to the given files; whatever has no file goes
// to standard output alongside the report.
fn emit_embedded<R: Serialize>(
    code: &StabilizerCode,
    emb: &Embedding,
    out_code: Option<&Path>,
    out_embedding: Option<&Path>,
    report: Option<&R>,
) -> Result<Output> {
    if let Some(p) = out_code {
        write_to(p, &write_code(code, None))?;
    }
    if let Some(p) = out_embedding {
        write_to(p, &write_embedding(emb))?;
    }
    let out = EmbeddedOutput {
        report,
        code: out_code.is_none().then(|| code_to_file(code, None)),
        embedding: out_embedding.is_none().then(|| emb.clone()),
    };
    Ok(Output::ok(to_json(&out)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct AuditReport {
    pub n: usize,
    pub k: usize,
    pub d: Option<usize>,
    pub d_source: String,
    pub ell: f64,
    pub interactions: usize,
    pub long_interactions: usize,
    pub max_length: f64,
    pub histogram: Histogram,
    pub bounds: Option<BoundReport>,
    /// `c0 max(k, d)`.
    pub floor: Option<f64>,
    pub meets_floor: Option<bool>,
    /// The theorem speaks about lengths of at least `c0 ell_star`; a count
    /// at a larger `ell` can only be smaller.
    pub ell_covered_by_theorem: Option<bool>,
    pub verdict: String,
}

#[allow(clippy::too_many_arguments)]
fn audit(code: &Path, embedding: &Path, ell: f64, cap: usize, c0: f64, c1: f64, format: Format) -> Result<Output> {
    let parsed = load_code(code)?;
    let c = &parsed.code;
    let emb = load_embedding(embedding, Some(c.n()))?;
    let its = extract_interactions(c, &emb)?;
    if format == Format::Csv {
        let mut s = String::from("qubit_a,qubit_b,generator_index,length\n");
        for i in &its {
            s.push_str(&format!("{},{},{},{}\n", i.qubit_a, i.qubit_b, i.generator_index, i.length));
        }
        return Ok(Output::ok(s));
    }
    let long = its.iter().filter(|i| is_long(i.length, ell)).count();
    let max_length = its.iter().map(|i| i.length).fold(0.0, f64::max);
    let hist = histogram(&its, &default_edges(max_length));
    let k = c.k();

    let (d, d_source) = if k == 0 {
        (None, "k = 0: distance undefined".to_string())
    } else {
        match code_distance(c, Some(cap))? {
            DistanceResult::Distance { distance, .. } => {
                if let Some(claimed) = parsed.claimed_d.filter(|&cd| cd != distance) {
                    return Err(CliError::input(format!(
                        "{}: claimed_d = {claimed} but the computed distance is {distance}",
                        code.display()
                    )));
                }
                (Some(distance), "computed".to_string())
            }
            DistanceResult::LowerBound { lower_bound } => match parsed.claimed_d {
                Some(cd) if cd >= lower_bound => (Some(cd), format!("claimed_d (search up to weight {cap} found none)")),
                Some(cd) => {
                    return Err(CliError::input(format!(
                        "{}: claimed_d = {cd} contradicts the lower bound {lower_bound}",
                        code.display()
                    )))
                }
                None => {
                    return Err(CliError::resource(format!(
                        "distance exceeds the weight cap {cap} (lower bound {lower_bound}); supply claimed_d or raise --weight-cap"
                    )))
                }
            },
        }
    };

    let bounds = match d {
        Some(d) => Some(evaluate_bounds(c.n(), k, d, c0, c1)?),
        None => None,
    };
    let (floor, meets, covered, verdict) = match &bounds {
        None => (None, None, None, "k = 0: the interaction bound does not apply".to_string()),
        Some(b) if !b.above_threshold => (
            None,
            None,
            None,
            format!(
                "below threshold (k d^2 = {} < c1 n = {}): no requirement",
                b.k * b.d * b.d,
                c1 * b.n as f64
            ),
        ),
        Some(b) => {
            let floor = b.required_count.expect("above threshold");
            let meets = long as f64 >= floor;
            let covered = ell <= b.required_length.expect("above threshold") + EPS;
            let v = format!(
                "{long} interactions of length >= {ell} {} the floor c0 max(k, d) = {floor}",
                if meets { "meet" } else { "fall below" }
            );
            (Some(floor), Some(meets), Some(covered), v)
        }
    };
    let report = AuditReport {
        n: c.n(),
        k,
        d,
        d_source,
        ell,
        interactions: its.len(),
        long_interactions: long,
        max_length,
        histogram: hist,
        bounds,
        floor,
        meets_floor: meets,
        ell_covered_by_theorem: covered,
        verdict,
    };
    Ok(Output::ok(to_json(&report)))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CertifyReport {
    pub method: String,
    pub distance: ResolvedDistance,
    pub region: Rectangle,
    pub certificate: Option<Certificate>,
    pub failure: Option<String>,
}

fn certify(
    code: &Path,
    embedding: &Path,
    ell: f64,
    method: Method,
    rect: Option<&[f64]>,
    src: &DistanceSource,
) -> Result<Output> {
    let parsed = load_code(code)?;
    let emb = load_embedding(embedding, Some(parsed.code.n()))?;
    let dist = resolve_distance(&parsed, src)?;
    let region = match rect {
        Some(&[a, b, c, d]) => Rectangle::new(a, b, c, d)?,
        Some(r) => return Err(CliError::input(format!("--rect takes 4 values, got {}", r.len()))),
        None => {
            let b = Rectangle::bounding(emb.points().iter().copied()).expect("codes have qubits");
            Rectangle::new(b.x_lo - 1.0, b.x_hi + 1.0, b.y_lo - 1.0, b.y_hi + 1.0)?
        }
    };
    let ctx = Context::new(&parsed.code, &emb, ell, dist.d, Constants::default())?;
    let attempt = match method {
        Method::Grow => grow_square(&ctx, &region)?,
        Method::Recursive => certify_recursive(&ctx, &region)?,
    };
    let (certificate, failure) = match attempt {
        Ok(c) => (Some(c), None),
        Err(f) => (None, Some(f.reason)),
    };
    let status = if certificate.is_some() { 0 } else { 1 };
    let report = CertifyReport {
        method: match method {
            Method::Grow => "grow".into(),
            Method::Recursive => "recursive".into(),
        },
        distance: dist,
        region,
        certificate,
        failure,
    };
    Ok(Output::with_status(to_json(&report), status))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct VerifyReport {
    pub valid: bool,
    pub failing_node: Option<usize>,
    pub reason: Option<String>,
    pub oracle_correctable: Option<bool>,
}

fn verify(code: &Path, cert: &Path, oracle: bool) -> Result<Output> {
    let parsed = load_code(code)?;
    let text = read(cert)?;
    // Accept a bare certificate or the output of `certify`.
    let certificate = match Certificate::from_json(&text) {
        Ok(c) => c,
        Err(e) => match serde_json::from_str::<CertifyReport>(&text) {
            Ok(CertifyReport {
                certificate: Some(c), ..
            }) => c,
            Ok(CertifyReport { failure, .. }) => {
                return Err(CliError::input(format!(
                    "{}: holds a failed certification with no certificate ({})",
                    cert.display(),
                    failure.as_deref().unwrap_or("no reason given")
                )))
            }
            Err(_) => return Err(CliError::input(format!("{}: {e}", cert.display()))),
        },
    };
    let v = verify_certificate(&parsed.code, &certificate);
    let oracle_correctable = if oracle && v.valid {
        let root = certificate.root_set();
        Some(is_correctable(&parsed.code, &root)?.correctable)
    } else {
        None
    };
    let ok = v.valid && oracle_correctable != Some(false);
    let report = VerifyReport {
        valid: v.valid,
        failing_node: v.failing_node,
        reason: v.reason,
        oracle_correctable,
    };
    Ok(Output::with_status(to_json(&report), if ok { 0 } else { 1 }))
}

fn partition(code: &Path, embedding: &Path, ell: f64, w: Option<f64>, src: &DistanceSource) -> Result<Output> {
    let parsed = load_code(code)?;
    let emb = load_embedding(embedding, Some(parsed.code.n()))?;
    let dist = resolve_distance(&parsed, src)?;
    let ctx = Context::new(&parsed.code, &emb, ell, dist.d, Constants::default())?;
    let p = build_partition(&ctx, w)?;
    Ok(Output::ok(to_json(&p)))
}

fn families(format: Format) -> String {
    let rows = family_table();
    match format {
        Format::Json => to_json(&rows),
        Format::Csv => {
            let mut s = String::from("family,k,d,count,ell,stacked_ruled_out\n");
            let dash = |e: Option<qloc_core::bounds_audit::Exponent>| e.map_or("---".to_string(), |e| e.to_string());
            for r in rows {
                s.push_str(&format!(
                    "{},{},{},{},{},{}\n",
                    r.family,
                    r.k,
                    r.d,
                    dash(r.count),
                    dash(r.ell),
                    r.stacked.ruled_out
                ));
            }
            s
        }
    }
}

fn distance(code: &Path, cap: Option<usize>) -> Result<Output> {
    let parsed = load_code(code)?;
    let c = &parsed.code;
    let r = code_distance(c, cap)?;
    let status = if r.exact().is_some() { 0 } else { 3 };
    Ok(Output::with_status(to_json(&r), status))
}

#[derive(Clone, Debug, PartialEq, Serialize, Deserialize)]
pub struct CorrectableReport {
    pub verdict: String,
    pub qubits: QubitSet,
    pub correctable: bool,
    pub witness: Option<String>,
}

fn correctable(code: &Path, qubits: &[usize], all: bool) -> Result<Output> {
    let parsed = load_code(code)?;
    let c = &parsed.code;
    let set: QubitSet = if all { QubitSet::all(c.n()) } else { qubits.iter().copied().collect() };
    set.check_bounds(c.n())?;
    let r = is_correctable(c, &set)?;
    let report = CorrectableReport {
        verdict: if r.correctable { "correctable" } else { "not correctable" }.into(),
        qubits: set,
        correctable: r.correctable,
        witness: r.witness,
    };
    Ok(Output::with_status(to_json(&report), if r.correctable { 0 } else { 1 }))
}
