//! Serialization of the core structures: JSON documents for difference
//! systems, codes, bundles, and certificates; CSV rows for reports and
//! simulation curves; and the plain-text codebook format.

use ppmsync_core::dss::{Dss, DssError, DssReport};
use ppmsync_core::ooc::{Codebook, OocError, OpticalOrthogonalCode};
use ppmsync_core::selfsync::{
    combine, CommaFreeCertificate, SelfSyncCode, SelfSyncError, SpliceWitness,
};
use ppmsync_core::modem::SimReport;
use serde::{Deserialize, Serialize};
use thiserror::Error;

/// Errors raised while reading or writing the file formats.
#[derive(Debug, Error)]
pub enum FormatError {
    #[error("invalid JSON: {0}")]
    Json(#[from] serde_json::Error),
    #[error("line {line}: {reason}")]
    BadBookText { line: usize, reason: String },
    #[error("book header declares {field} = {declared}, found {found}")]
    HeaderMismatch { field: &'static str, declared: u64, found: u64 },
    #[error("bundle free positions disagree with the marker/payload combination")]
    BundleMismatch,
    #[error(transparent)]
    Dss(#[from] DssError),
    #[error(transparent)]
    Ooc(#[from] OocError),
    #[error(transparent)]
    SelfSync(#[from] SelfSyncError),
}

/// JSON document for a difference system: `{"n": .., "d0": [..], "d1": [..]}`.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DssDto {
    pub n: u64,
    pub d0: Vec<u64>,
    pub d1: Vec<u64>,
}

impl From<&Dss> for DssDto {
    fn from(dss: &Dss) -> Self {
        DssDto { n: dss.n(), d0: dss.d0().to_vec(), d1: dss.d1().to_vec() }
    }
}

impl DssDto {
    pub fn into_dss(self) -> Result<Dss, FormatError> {
        Ok(Dss::new(self.n, self.d0, self.d1)?)
    }
}

/// Parses a difference system from JSON, accepting either the bare form
/// (`{"n": .., "d0": [..], "d1": [..]}`) or a full document wrapping it
/// under a `dss` key — the shape the construct command emits — so tool
/// output pipes straight back in. Any stored report is ignored; callers
/// re-verify.
pub fn parse_dss_json(text: &str) -> Result<DssDto, serde_json::Error> {
    let value: serde_json::Value = serde_json::from_str(text)?;
    if value.get("dss").is_some() {
        #[derive(Deserialize)]
        struct DocumentHead {
            dss: DssDto,
        }
        serde_json::from_value::<DocumentHead>(value).map(|d| d.dss)
    } else {
        serde_json::from_value(value)
    }
}

/// JSON form of a verification report, with the redundancy rate as a
/// reduced fraction.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DssReportDto {
    pub index: u64,
    pub perfect: bool,
    pub regular: bool,
    pub redundancy: u64,
    pub rate_num: u64,
    pub rate_den: u64,
    pub levenshtein_floor: u64,
    pub meets_levenshtein: bool,
    pub meets_levenshtein_floor: bool,
}

impl From<&DssReport> for DssReportDto {
    fn from(r: &DssReport) -> Self {
        DssReportDto {
            index: r.index,
            perfect: r.perfect,
            regular: r.regular,
            redundancy: r.redundancy,
            rate_num: r.redundancy_rate.num(),
            rate_den: r.redundancy_rate.den(),
            levenshtein_floor: r.levenshtein_floor,
            meets_levenshtein: r.meets_levenshtein,
            meets_levenshtein_floor: r.meets_levenshtein_floor,
        }
    }
}

/// Combined construction-plus-report JSON document.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct DssDocument {
    pub dss: DssDto,
    pub report: DssReportDto,
}

impl DssDocument {
    pub fn new(dss: &Dss) -> Self {
        DssDocument { dss: dss.into(), report: (&dss.verify()).into() }
    }
}

/// Header of the DSS CSV row format.
pub const DSS_CSV_HEADER: &str =
    "n,d0_size,d1_size,rho,redundancy,rate_num,rate_den,perfect,regular";

/// One CSV row describing a verified difference system.
pub fn dss_csv_row(dss: &Dss, report: &DssReport) -> String {
    format!(
        "{},{},{},{},{},{},{},{},{}",
        dss.n(),
        dss.d0().len(),
        dss.d1().len(),
        report.index,
        report.redundancy,
        report.redundancy_rate.num(),
        report.redundancy_rate.den(),
        report.perfect,
        report.regular
    )
}

/// JSON document for an optical orthogonal code.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct OocDto {
    pub v: u64,
    pub k: u64,
    pub lambda: u64,
    pub codewords: Vec<Vec<u64>>,
}

impl From<&OpticalOrthogonalCode> for OocDto {
    fn from(code: &OpticalOrthogonalCode) -> Self {
        OocDto {
            v: code.v(),
            k: code.k(),
            lambda: code.lambda(),
            codewords: code.codewords().to_vec(),
        }
    }
}

impl OocDto {
    pub fn into_ooc(self) -> Result<OpticalOrthogonalCode, FormatError> {
        Ok(OpticalOrthogonalCode::new(self.v, self.k, self.lambda, self.codewords)?)
    }
}

/// Writes a codebook as plain text: a header line `Q K M d` (interval
/// size, pulses per word, word count, minimum distance) followed by one
/// word per line as a 0/1 string.
pub fn book_to_text(book: &Codebook) -> Result<String, FormatError> {
    let d = book.min_distance()?;
    let mut out = format!("{} {} {} {}\n", book.length(), book.weight(), book.len(), d);
    for word in book.words() {
        for &bit in word {
            out.push(if bit == 1 { '1' } else { '0' });
        }
        out.push('\n');
    }
    Ok(out)
}

/// Reads the plain-text codebook format, checking every header field
/// against the words that follow.
pub fn book_from_text(text: &str) -> Result<Codebook, FormatError> {
    let mut lines = text.lines().enumerate().filter(|(_, l)| !l.trim().is_empty());
    let (_, header) = lines.next().ok_or(FormatError::BadBookText {
        line: 1,
        reason: "empty input".into(),
    })?;
    let fields: Vec<u64> = header
        .split_whitespace()
        .map(str::parse)
        .collect::<Result<_, _>>()
        .map_err(|e| FormatError::BadBookText {
            line: 1,
            reason: format!("header must hold four integers Q K M d: {e}"),
        })?;
    let [q, k, m, d] = fields[..] else {
        return Err(FormatError::BadBookText {
            line: 1,
            reason: format!("header must hold four integers Q K M d, found {}", fields.len()),
        });
    };
    let mut words = Vec::new();
    for (i, line) in lines {
        let word: Vec<u8> = line
            .trim()
            .chars()
            .map(|c| match c {
                '0' => Ok(0u8),
                '1' => Ok(1u8),
                other => Err(FormatError::BadBookText {
                    line: i + 1,
                    reason: format!("unexpected character {other:?}"),
                }),
            })
            .collect::<Result<_, _>>()?;
        words.push(word);
    }
    let book = Codebook::new(words)?;
    for (field, declared, found) in [
        ("Q", q, book.length() as u64),
        ("K", k, book.weight()),
        ("M", m, book.len() as u64),
        ("d", d, book.min_distance()?),
    ] {
        if declared != found {
            return Err(FormatError::HeaderMismatch { field, declared, found });
        }
    }
    Ok(book)
}

/// JSON bundle of a combined self-synchronizing code: the marker, the
/// payload book (stored inline as 0/1 strings), the derived layout, and
/// any certification results known so far.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct BundleDto {
    pub marker: DssDto,
    pub payload: Vec<String>,
    pub free_positions: Vec<u64>,
    pub guaranteed_index: u64,
    pub certified_index: Option<u64>,
    pub restricted_index: Option<u64>,
}

impl From<&SelfSyncCode> for BundleDto {
    fn from(code: &SelfSyncCode) -> Self {
        BundleDto {
            marker: code.marker().into(),
            payload: code
                .payload()
                .words()
                .iter()
                .map(|w| w.iter().map(|&b| if b == 1 { '1' } else { '0' }).collect())
                .collect(),
            free_positions: code.free_positions().to_vec(),
            guaranteed_index: code.guaranteed_index(),
            certified_index: code.certified_index(),
            restricted_index: code.restricted_index(),
        }
    }
}

impl BundleDto {
    /// Rebuilds the code by re-running the combiner and checking the
    /// stored layout against it. Certification claims in the bundle are
    /// not trusted; re-certify to restore them.
    pub fn into_code(self) -> Result<SelfSyncCode, FormatError> {
        let marker = self.marker.into_dss()?;
        let words: Vec<Vec<u8>> = self
            .payload
            .iter()
            .map(|s| s.chars().map(|c| u8::from(c == '1')).collect())
            .collect();
        let payload = Codebook::new(words)?;
        let code = combine(marker, payload)?;
        if code.free_positions() != self.free_positions.as_slice() {
            return Err(FormatError::BundleMismatch);
        }
        Ok(code)
    }
}

/// JSON form of a comma-free certificate with its minimizing witness.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CertificateDto {
    pub index: u64,
    pub witness: WitnessDto,
    pub restricted_index: Option<u64>,
    pub restricted_witness: Option<WitnessDto>,
    pub distance_evaluations: u64,
}

#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct WitnessDto {
    pub x: usize,
    pub y: usize,
    pub offset: usize,
    pub z: usize,
}

impl From<&SpliceWitness> for WitnessDto {
    fn from(w: &SpliceWitness) -> Self {
        WitnessDto { x: w.x, y: w.y, offset: w.offset, z: w.z }
    }
}

impl From<&CommaFreeCertificate> for CertificateDto {
    fn from(c: &CommaFreeCertificate) -> Self {
        CertificateDto {
            index: c.index,
            witness: (&c.witness).into(),
            restricted_index: c.restricted_index,
            restricted_witness: c.restricted_witness.as_ref().map(WitnessDto::from),
            distance_evaluations: c.distance_evaluations,
        }
    }
}

/// Header of the simulation curve CSV.
pub const CURVE_CSV_HEADER: &str = "gamma_db,ser_bound,ser_mc,ser_mc_lo,ser_mc_hi,sync_err";

/// One γ grid point of an error-rate curve. Optional columns are left
/// empty in CSV when the stage did not run.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct CurvePoint {
    pub gamma_db: f64,
    pub ser_bound: Option<f64>,
    pub ser_mc: Option<f64>,
    pub ser_mc_lo: Option<f64>,
    pub ser_mc_hi: Option<f64>,
    pub sync_err: Option<f64>,
}

fn opt(x: Option<f64>) -> String {
    x.map(|v| v.to_string()).unwrap_or_default()
}

impl CurvePoint {
    pub fn csv_row(&self) -> String {
        format!(
            "{},{},{},{},{},{}",
            self.gamma_db,
            opt(self.ser_bound),
            opt(self.ser_mc),
            opt(self.ser_mc_lo),
            opt(self.ser_mc_hi),
            opt(self.sync_err)
        )
    }
}

/// JSON form of a Monte Carlo report plus the identification of the code
/// it measured.
#[derive(Debug, Clone, Serialize, Deserialize)]
pub struct SimReportDto {
    pub code: String,
    pub gamma_db: f64,
    pub trials: u64,
    pub symbols_sent: u64,
    pub symbol_errors: u64,
    pub ser: f64,
    pub ser_lo: f64,
    pub ser_hi: f64,
    pub sync_errors: Option<u64>,
    pub sync_error_rate: Option<f64>,
    pub seed: u64,
    pub rng: String,
}

impl SimReportDto {
    pub fn new(code: impl Into<String>, gamma_db: f64, report: &SimReport) -> Self {
        SimReportDto {
            code: code.into(),
            gamma_db,
            trials: report.trials,
            symbols_sent: report.symbols_sent,
            symbol_errors: report.symbol_errors,
            ser: report.ser,
            ser_lo: report.ser_lo,
            ser_hi: report.ser_hi,
            sync_errors: report.sync_errors,
            sync_error_rate: report.sync_error_rate,
            seed: report.seed,
            rng: report.rng.to_string(),
        }
    }
}
